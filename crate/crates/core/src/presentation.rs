//! Graded algebra presentations `k<X>/(R)` and the constructors used
//! throughout the crate: skew polynomial rings, graded quotients, tensor
//! products, central extensions and elimination of degree-one generators.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::freealg::{GeneratorSet, Homogeneity, NcPoly};
use crate::linalg::rref_in_place;
use crate::scalars::{FieldSpec, Scalar};

/// Multiplicatively antisymmetric parameter matrix: `p_ii = 1`,
/// `p_ji = p_ij^{-1}`, all entries nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewMatrix {
    field: FieldSpec,
    entries: Vec<Vec<Scalar>>,
}

impl SkewMatrix {
    pub fn new(field: FieldSpec, entries: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidSkewMatrix("matrix is not square".into()));
            }
            for (j, p) in row.iter().enumerate() {
                if p.field() != field {
                    return Err(Error::FieldMismatch);
                }
                if p.is_zero() {
                    return Err(Error::InvalidSkewMatrix(format!("entry ({}, {}) is zero", i + 1, j + 1)));
                }
                if i == j && !p.is_one() {
                    return Err(Error::InvalidSkewMatrix(format!("diagonal entry ({}, {}) is not 1", i + 1, i + 1)));
                }
                if i < j && !(p * &entries[j][i]).is_one() {
                    return Err(Error::InvalidSkewMatrix(format!(
                        "entries ({}, {}) and ({}, {}) are not mutually inverse",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(SkewMatrix { field, entries })
    }

    /// Builds the matrix from the entries above the diagonal; unspecified
    /// pairs default to 1 and the lower half is filled with inverses.
    pub fn from_upper(field: FieldSpec, n: usize, upper: &[(usize, usize, Scalar)]) -> Result<Self> {
        let mut entries = alloc::vec![alloc::vec![field.one(); n]; n];
        for (i, j, q) in upper {
            let (i, j) = (*i, *j);
            if i >= n || j >= n || i == j {
                return Err(Error::InvalidSkewMatrix(format!("bad index pair ({}, {})", i + 1, j + 1)));
            }
            if q.is_zero() {
                return Err(Error::InvalidSkewMatrix(format!("entry ({}, {}) is zero", i + 1, j + 1)));
            }
            entries[i][j] = q.clone();
            entries[j][i] = q.inv()?;
        }
        SkewMatrix::new(field, entries)
    }

    /// Every `p_ij` with `i < j` equal to `q`.
    pub fn uniform(field: FieldSpec, n: usize, q: &Scalar) -> Result<Self> {
        let upper: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| (i, j, q.clone())).collect();
        Self::from_upper(field, n, &upper)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.entries
    }

    /// True when `p_ij != 1` for all `i != j`.
    pub fn all_off_diagonal_nontrivial(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| i == j || !self.entries[i][j].is_one()))
    }

    /// The matrix `Q` with `Q_ij = P_{sigma(i) sigma(j)}`.
    pub fn permuted(&self, sigma: &[usize]) -> SkewMatrix {
        let n = self.size();
        let entries = (0..n).map(|i| (0..n).map(|j| self.entries[sigma[i]][sigma[j]].clone()).collect()).collect();
        SkewMatrix { field: self.field, entries }
    }

    /// Block diagonal sum with 1 in the off-diagonal blocks.
    pub fn block_sum(&self, other: &SkewMatrix) -> SkewMatrix {
        let (n, m) = (self.size(), other.size());
        let mut entries = alloc::vec![alloc::vec![self.field.one(); n + m]; n + m];
        for (row, src) in entries.iter_mut().zip(&self.entries) {
            row[..n].clone_from_slice(src);
        }
        for (row, src) in entries[n..].iter_mut().zip(&other.entries) {
            row[n..].clone_from_slice(src);
        }
        SkewMatrix { field: self.field, entries }
    }

    fn minor(&self, keep: &[usize]) -> SkewMatrix {
        let entries = keep.iter().map(|&i| keep.iter().map(|&j| self.entries[i][j].clone()).collect()).collect();
        SkewMatrix { field: self.field, entries }
    }
}

/// A connected graded algebra given by generators with positive degrees and
/// homogeneous relations of degree at least 1.
///
/// When the algebra was built as a skew polynomial ring (possibly followed by
/// quotients, tensor products with skew rings, or central extensions), the
/// parameter matrix is kept and the skew relations `x_j x_i - p_ij x_i x_j`
/// (`i < j`, lexicographic pair order) come first in `relations`; the rest
/// are the extra relations of the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    field: FieldSpec,
    gens: GeneratorSet,
    skew: Option<SkewMatrix>,
    relations: Vec<NcPoly>,
    skew_relation_count: usize,
    min_relation_degree: Option<u32>,
    min_extra_degree: Option<u32>,
}

impl Presentation {
    /// The free algebra on `gens`.
    pub fn free(field: FieldSpec, gens: GeneratorSet) -> Self {
        Presentation {
            field,
            gens,
            skew: None,
            relations: Vec::new(),
            skew_relation_count: 0,
            min_relation_degree: None,
            min_extra_degree: None,
        }
    }

    /// `k<gens>/(relations)`. Zero relations are dropped, the rest are made
    /// monic.
    pub fn new(field: FieldSpec, gens: GeneratorSet, relations: Vec<NcPoly>) -> Result<Self> {
        Presentation::free(field, gens).quotient(relations)
    }

    /// The skew polynomial ring `k_{p_ij}[x_1, ..., x_n]` on `gens`.
    pub fn skew_ring(p: &SkewMatrix, gens: GeneratorSet) -> Result<Self> {
        if p.size() != gens.len() {
            return Err(Error::InvalidSkewMatrix(format!("matrix size {} does not match {} generators", p.size(), gens.len())));
        }
        let field = p.field();
        let one = field.one();
        let n = gens.len();
        let mut relations = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                let xj_xi = NcPoly::monomial(gens.word(&[j, i])?, one.clone());
                let xi_xj = NcPoly::monomial(gens.word(&[i, j])?, p.get(i, j).clone());
                relations.push((&xj_xi - &xi_xj).monic());
            }
        }
        let mut pres = Presentation::free(field, gens);
        pres.skew_relation_count = relations.len();
        pres.relations = relations;
        pres.skew = Some(p.clone());
        pres.refresh_degrees();
        Ok(pres)
    }

    /// Skew ring on generators `x1, ..., xn` of degree 1.
    pub fn skew_ring_standard(p: &SkewMatrix) -> Result<Self> {
        Self::skew_ring(p, GeneratorSet::standard(p.size()))
    }

    fn refresh_degrees(&mut self) {
        self.min_relation_degree = self.relations.iter().filter_map(NcPoly::max_degree).min();
        self.min_extra_degree = self.relations[self.skew_relation_count..].iter().filter_map(NcPoly::max_degree).min();
    }

    fn validate_relation(&self, r: &NcPoly) -> Result<Option<NcPoly>> {
        self.gens.check(r)?;
        if r.terms().any(|(_, c)| c.field() != self.field) {
            return Err(Error::FieldMismatch);
        }
        match r.homogeneity() {
            Homogeneity::Zero => Ok(None),
            Homogeneity::Inhomogeneous => Err(Error::InhomogeneousRelation),
            Homogeneity::Homogeneous(0) => Err(Error::ConstantRelation),
            Homogeneity::Homogeneous(_) => Ok(Some(r.monic())),
        }
    }

    /// Appends homogeneous relations.
    pub fn quotient(&self, extra: Vec<NcPoly>) -> Result<Self> {
        let mut out = self.clone();
        for r in &extra {
            if let Some(r) = self.validate_relation(r)? {
                out.relations.push(r);
            }
        }
        out.refresh_degrees();
        Ok(out)
    }

    /// Tensor product `self ⊗ other`: generators of both factors, relations
    /// of both, and `y x - x y` for every generator `x` of `self` and `y` of
    /// `other`. If any generator name occurs on both sides, all names are
    /// prefixed with `a_` (left factor) and `b_` (right factor).
    pub fn tensor(&self, other: &Presentation) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if other.gens.is_empty() {
            return Ok(self.clone());
        }
        if self.gens.is_empty() {
            return Ok(other.clone());
        }
        let (na, nb) = (self.gens.len(), other.gens.len());
        let clash = other.gens.names().iter().any(|n| self.gens.index_of(n).is_some());
        let names: Vec<String> = if clash {
            self.gens.names().iter().map(|n| format!("a_{n}")).chain(other.gens.names().iter().map(|n| format!("b_{n}"))).collect()
        } else {
            self.gens.names().iter().chain(other.gens.names()).cloned().collect()
        };
        let degrees: Vec<u32> = self.gens.degrees().iter().chain(other.gens.degrees()).copied().collect();
        let gens = GeneratorSet::new(names, degrees)?;
        let shift = |f: &NcPoly| -> Result<NcPoly> {
            let images: Vec<NcPoly> = (0..nb).map(|i| gens.var(na + i, &self.field.one())).collect();
            Ok(f.substitute(&images))
        };
        let lift = |f: &NcPoly| -> NcPoly {
            let images: Vec<NcPoly> = (0..na).map(|i| gens.var(i, &self.field.one())).collect();
            f.substitute(&images)
        };
        let mut extras: Vec<NcPoly> = self.extra_relations().iter().map(lift).collect();
        for r in other.extra_relations() {
            extras.push(shift(r)?);
        }
        if let (Some(p), Some(q)) = (&self.skew, &other.skew) {
            return Presentation::skew_ring(&p.block_sum(q), gens)?.quotient(extras);
        }
        let mut relations: Vec<NcPoly> = self.relations.iter().map(lift).collect();
        for r in &other.relations {
            relations.push(shift(r)?);
        }
        let one = self.field.one();
        for i in 0..na {
            for j in 0..nb {
                let x = gens.var(i, &one);
                let y = gens.var(na + j, &one);
                relations.push(y.commutator(&x));
            }
        }
        Presentation::new(self.field, gens, relations)
    }

    /// `A[t_1, ..., t_count]` with central generators of degree 1 named
    /// `t1, t2, ...`.
    pub fn adjoin_central(&self, count: usize) -> Result<Self> {
        self.adjoin_central_named("t", count)
    }

    /// Central extension with generators `{prefix}1, ..., {prefix}count`.
    /// A trailing `'` is appended to any name that is already taken.
    pub fn adjoin_central_named(&self, prefix: &str, count: usize) -> Result<Self> {
        if count == 0 {
            return Ok(self.clone());
        }
        let n = self.gens.len();
        let mut names: Vec<String> = self.gens.names().to_vec();
        for i in 1..=count {
            let mut name = format!("{prefix}{i}");
            while names.contains(&name) {
                name.push('\'');
            }
            names.push(name);
        }
        let degrees: Vec<u32> = self.gens.degrees().iter().copied().chain(core::iter::repeat_n(1, count)).collect();
        let gens = GeneratorSet::new(names, degrees)?;
        let embed = |f: &NcPoly| -> NcPoly {
            let images: Vec<NcPoly> = (0..n).map(|i| gens.var(i, &self.field.one())).collect();
            f.substitute(&images)
        };
        if let Some(p) = &self.skew {
            let trivial = SkewMatrix::uniform(self.field, count, &self.field.one())?;
            let extras = self.extra_relations().iter().map(embed).collect();
            return Presentation::skew_ring(&p.block_sum(&trivial), gens)?.quotient(extras);
        }
        let one = self.field.one();
        let mut relations: Vec<NcPoly> = self.relations.iter().map(embed).collect();
        for t in n..n + count {
            let tv = gens.var(t, &one);
            for g in 0..t {
                relations.push(tv.commutator(&gens.var(g, &one)));
            }
        }
        Presentation::new(self.field, gens, relations)
    }

    /// Quotient by the ideal generated by linearly independent degree-one
    /// elements, realised by solving each element for one generator and
    /// substituting.
    pub fn eliminate_degree_one(&self, elems: &[NcPoly]) -> Result<Self> {
        if elems.is_empty() {
            return Ok(self.clone());
        }
        let n = self.gens.len();
        let mut rows = Vec::with_capacity(elems.len());
        for e in elems {
            self.gens.check(e)?;
            let mut row = alloc::vec![self.field.zero(); n];
            for (w, c) in e.terms() {
                if w.len() != 1 || w.degree() != 1 {
                    return Err(Error::NotDegreeOne);
                }
                row[w.letters()[0]] = c.clone();
            }
            rows.push(row);
        }
        let pivots = rref_in_place(&mut rows, n);
        if pivots.len() < elems.len() {
            return Err(Error::DependentElements);
        }
        let keep: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
        let names: Vec<String> = keep.iter().map(|&i| String::from(self.gens.name(i))).collect();
        let degrees: Vec<u32> = keep.iter().map(|&i| self.gens.degree(i)).collect();
        let gens = GeneratorSet::new(names, degrees)?;
        let one = self.field.one();
        let mut images = alloc::vec![NcPoly::zero(); n];
        for (k, &i) in keep.iter().enumerate() {
            images[i] = gens.var(k, &one);
        }
        for (row, &p) in rows.iter().zip(&pivots) {
            let mut img = NcPoly::zero();
            for (k, &j) in keep.iter().enumerate() {
                if !row[j].is_zero() {
                    img = &img - &gens.var(k, &one).scale(&row[j]);
                }
            }
            images[p] = img;
        }
        let coordinate_only = rows.iter().all(|r| r.iter().filter(|c| !c.is_zero()).count() == 1);
        if let (Some(p), true) = (&self.skew, coordinate_only) {
            let extras = self.extra_relations().iter().map(|r| r.substitute(&images)).collect();
            return Presentation::skew_ring(&p.minor(&keep), gens)?.quotient(extras);
        }
        let relations = self.relations.iter().map(|r| r.substitute(&images)).collect();
        Presentation::new(self.field, gens, relations)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn skew(&self) -> Option<&SkewMatrix> {
        self.skew.as_ref()
    }

    pub fn relations(&self) -> &[NcPoly] {
        &self.relations
    }

    /// Relations beyond the skew commutation relations.
    pub fn extra_relations(&self) -> &[NcPoly] {
        &self.relations[self.skew_relation_count..]
    }

    pub fn min_relation_degree(&self) -> Option<u32> {
        self.min_relation_degree
    }

    /// Lowest degree among the extra relations (the ideal `M` of a skew
    /// quotient `k_p[x]/M`).
    pub fn min_extra_degree(&self) -> Option<u32> {
        self.min_extra_degree
    }

    pub fn max_relation_degree(&self) -> Option<u32> {
        self.relations.iter().filter_map(NcPoly::max_degree).max()
    }

    pub fn one(&self) -> Scalar {
        self.field.one()
    }

    pub fn var(&self, i: usize) -> NcPoly {
        self.gens.var(i, &self.field.one())
    }
}
