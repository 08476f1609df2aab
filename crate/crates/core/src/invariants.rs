//! Invariants built from codimension-one ideals and low-degree structure:
//! characters, tangent dimensions, the ideals `J_s`, normal elements, low
//! degree centers, and a combined fingerprint for graded algebras.
//!
//! A codimension-one ideal is the kernel of a character, that is, of a point
//! `α` at which every relation vanishes after commuting substitution
//! `x_i ↦ α_i`. Its ideal is generated by the elements `x_i - α_i`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::freealg::{Homogeneity, NcPoly, Word};
use crate::groebner::{BoundedIdeal, ReductionSystem};
use crate::linalg::{Matrix, Subspace};
use crate::presentation::Presentation;
use crate::scalars::{FieldSpec, Scalar};

/// A point `α` with one coordinate per generator at which all relations
/// vanish.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character {
    point: Vec<Scalar>,
}

impl Character {
    /// Validates `point` against the relations of `pres`.
    pub fn new(pres: &Presentation, point: Vec<Scalar>) -> Result<Self> {
        if character_check(pres, &point)? {
            Ok(Character { point })
        } else {
            Err(Error::NotACharacter)
        }
    }

    /// The trivial character `x_i ↦ 0`, always valid for connected graded
    /// presentations.
    pub fn origin(pres: &Presentation) -> Self {
        Character { point: alloc::vec![pres.field().zero(); pres.num_gens()] }
    }

    pub fn point(&self) -> &[Scalar] {
        &self.point
    }

    pub fn is_origin(&self) -> bool {
        self.point.iter().all(Scalar::is_zero)
    }

    /// Generators `x_i - α_i` of the kernel.
    pub fn ideal_generators(&self, pres: &Presentation) -> Vec<NcPoly> {
        self.point.iter().enumerate().map(|(i, a)| &pres.var(i) - &NcPoly::constant(a.clone())).collect()
    }
}

/// Tangent data of one character: its cotangent dimension `dim I/I^2` and
/// the sequence `dim I^i / I^{i+1}` for `i = 1, ..., depth`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentProfile {
    pub character: Character,
    pub cotangent: usize,
    pub powers: Vec<usize>,
}

fn word_value(w: &Word, point: &[Scalar], one: &Scalar) -> Scalar {
    w.letters().iter().fold(one.clone(), |acc, &l| &acc * &point[l])
}

/// Value of `f` under commuting substitution `x_i ↦ point[i]`.
pub fn evaluate_commutative(f: &NcPoly, point: &[Scalar], field: FieldSpec) -> Scalar {
    let one = field.one();
    f.terms().fold(field.zero(), |acc, (w, c)| &acc + &(c * &word_value(w, point, &one)))
}

fn check_point(pres: &Presentation, point: &[Scalar]) -> Result<()> {
    if point.len() != pres.num_gens() {
        return Err(Error::GeneratorSetMismatch);
    }
    if point.iter().any(|a| a.field() != pres.field()) {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// True iff every relation vanishes at `point`.
pub fn character_check(pres: &Presentation, point: &[Scalar]) -> Result<bool> {
    check_point(pres, point)?;
    Ok(pres.relations().iter().all(|r| evaluate_commutative(r, point, pres.field()).is_zero()))
}

/// All characters over a prime field, in lexicographic order of residues.
///
/// Coordinates are assigned in generator order; a relation is evaluated as
/// soon as all of its letters are assigned, which prunes most of the
/// `p^n` candidate points for skew rings.
pub fn characters_enumerate(pres: &Presentation) -> Result<Vec<Character>> {
    let field = pres.field();
    let elements = field.elements()?;
    let n = pres.num_gens();
    let mut checks: Vec<Vec<&NcPoly>> = alloc::vec![Vec::new(); n + 1];
    for r in pres.relations() {
        let last = r.terms().flat_map(|(w, _)| w.letters().iter().copied()).max().map_or(0, |m| m + 1);
        checks[last].push(r);
    }
    if checks[0].iter().any(|r| !evaluate_commutative(r, &[], field).is_zero()) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut point = Vec::with_capacity(n);
    extend_point(&mut point, n, &elements, &checks, field, &mut out);
    Ok(out)
}

fn extend_point(
    point: &mut Vec<Scalar>,
    n: usize,
    elements: &[Scalar],
    checks: &[Vec<&NcPoly>],
    field: FieldSpec,
    out: &mut Vec<Character>,
) {
    if point.len() == n {
        out.push(Character { point: point.clone() });
        return;
    }
    let depth = point.len();
    for e in elements {
        point.push(e.clone());
        if checks[depth + 1].iter().all(|r| evaluate_commutative(r, point, field).is_zero()) {
            extend_point(point, n, elements, checks, field, out);
        }
        point.pop();
    }
}

/// Linear part of `f(x + α)`: for each word, the terms with exactly one
/// variable left unsubstituted.
fn linear_part(f: &NcPoly, point: &[Scalar], field: FieldSpec) -> Vec<Scalar> {
    let mut row = alloc::vec![field.zero(); point.len()];
    for (w, c) in f.terms() {
        let letters = w.letters();
        for (j, &l) in letters.iter().enumerate() {
            let coeff = letters.iter().enumerate().filter(|&(m, _)| m != j).fold(c.clone(), |acc, (_, &k)| &acc * &point[k]);
            if !coeff.is_zero() {
                row[l] = &row[l] + &coeff;
            }
        }
    }
    row
}

/// `dim I/I^2` for the kernel `I` of the character at `point`, computed as
/// `n` minus the rank of the linear parts of the shifted relations.
pub fn cotangent_dimension(pres: &Presentation, point: &[Scalar]) -> Result<usize> {
    if !character_check(pres, point)? {
        return Err(Error::NotACharacter);
    }
    let field = pres.field();
    let rows: Vec<Vec<Scalar>> = pres.relations().iter().map(|r| linear_part(r, point, field)).collect();
    Ok(pres.num_gens() - Matrix::new(field, pres.num_gens(), rows).rank())
}

/// The kernel of a character as a bounded ideal in `A_{<=D}`.
pub fn character_ideal(rs: &ReductionSystem, character: &Character) -> Result<BoundedIdeal> {
    rs.ideal_closure(&character.ideal_generators(rs.presentation()))
}

/// Bounded powers `I, I^2, ..., I^{count}` of a character ideal.
pub fn character_ideal_powers(rs: &ReductionSystem, character: &Character, count: usize) -> Result<Vec<BoundedIdeal>> {
    let gens = character.ideal_generators(rs.presentation());
    let mut powers = Vec::with_capacity(count);
    if count == 0 {
        return Ok(powers);
    }
    powers.push(rs.ideal_closure(&gens)?);
    while powers.len() < count {
        let next = rs.ideal_product(&gens, powers.last().expect("nonempty"))?;
        powers.push(next);
    }
    Ok(powers)
}

fn check_depth(rs: &ReductionSystem, depth: usize) -> Result<()> {
    let truncation = rs.truncation();
    if depth > truncation as usize {
        return Err(Error::DegreeExceedsTruncation { degree: depth as u32, truncation });
    }
    Ok(())
}

/// `dim I^i / I^{i+1}` for `i = 1, ..., depth`, measured in `A_{<=D}`.
/// The first entry is the cotangent dimension computed from ideal
/// closures, independent of the linearization.
pub fn power_profile(rs: &ReductionSystem, character: &Character, depth: usize) -> Result<Vec<usize>> {
    check_depth(rs, depth)?;
    let powers = character_ideal_powers(rs, character, depth + 1)?;
    Ok(powers.windows(2).map(|w| w[0].dim() - w[1].dim()).collect())
}

/// Tangent profiles of all characters over a prime field.
pub fn tangent_profiles(rs: &ReductionSystem, depth: usize) -> Result<Vec<TangentProfile>> {
    let pres = rs.presentation();
    characters_enumerate(pres)?
        .into_iter()
        .map(|c| {
            let cotangent = cotangent_dimension(pres, c.point())?;
            let powers = power_profile(rs, &c, depth)?;
            Ok(TangentProfile { character: c, cotangent, powers })
        })
        .collect()
}

fn intersect_all(rs: &ReductionSystem, ideals: impl Iterator<Item = Result<BoundedIdeal>>) -> Result<BoundedIdeal> {
    let mut acc: Option<BoundedIdeal> = None;
    for ideal in ideals {
        let ideal = ideal?;
        acc = Some(match acc {
            None => ideal,
            Some(a) => a.intersection(&ideal)?,
        });
    }
    Ok(acc.unwrap_or_else(|| rs.whole_algebra()))
}

/// `J_s` in `A_{<=D}`: the intersection of the kernels of all characters
/// with cotangent dimension `s`, or the whole algebra when there are none.
pub fn j_s(rs: &ReductionSystem, s: usize) -> Result<BoundedIdeal> {
    let pres = rs.presentation();
    let mut selected = Vec::new();
    for c in characters_enumerate(pres)? {
        if cotangent_dimension(pres, c.point())? == s {
            selected.push(c);
        }
    }
    intersect_all(rs, selected.iter().map(|c| character_ideal(rs, c)))
}

/// `J_{(s_i)}` in `A_{<=D}`: the intersection over characters whose power
/// profile starts with `profile` (`profile[0] = dim I/I^2`,
/// `profile[1] = dim I^2/I^3`, ...).
pub fn j_sequence(rs: &ReductionSystem, profile: &[usize]) -> Result<BoundedIdeal> {
    check_depth(rs, profile.len())?;
    let pres = rs.presentation();
    let mut selected = Vec::new();
    for c in characters_enumerate(pres)? {
        if let Some(&first) = profile.first() {
            if cotangent_dimension(pres, c.point())? != first {
                continue;
            }
        }
        let gens = c.ideal_generators(pres);
        let mut current = rs.ideal_closure(&gens)?;
        let base = current.clone();
        let mut matches = true;
        for &expected in profile {
            let next = rs.ideal_product(&gens, &current)?;
            if current.dim() - next.dim() != expected {
                matches = false;
                break;
            }
            current = next;
        }
        if matches {
            selected.push(base);
        }
    }
    intersect_all(rs, selected.into_iter().map(Ok))
}

/// True iff exactly one character has cotangent dimension `dim A_1`.
/// Requires generation in degree one, checked up to the truncation.
pub fn unique_codim1_of_tangent_d(rs: &ReductionSystem) -> Result<bool> {
    if !rs.is_generated_in_degree_one() {
        return Err(Error::HypothesisViolated("algebra is not generated in degree 1".into()));
    }
    let pres = rs.presentation();
    let d = rs.dim(1);
    let mut count = 0;
    for c in characters_enumerate(pres)? {
        if cotangent_dimension(pres, c.point())? == d {
            count += 1;
            if count > 1 {
                return Ok(false);
            }
        }
    }
    Ok(count == 1)
}

fn homogeneous_degree(f: &NcPoly) -> Result<Option<u32>> {
    match f.homogeneity() {
        Homogeneity::Zero => Ok(None),
        Homogeneity::Homogeneous(d) => Ok(Some(d)),
        Homogeneity::Inhomogeneous => Err(Error::NotHomogeneous),
    }
}

/// `w * v` for a normal word `w` and a homogeneous vector `v` of degree `e`.
fn word_left(rs: &ReductionSystem, w: &Word, e: u32, v: &[Scalar]) -> Option<Vec<Scalar>> {
    let mut deg = e;
    let mut cur = v.to_vec();
    for &l in w.letters().iter().rev() {
        cur = rs.left_mul_gen(l, deg, &cur)?;
        deg += rs.gens().degree(l);
    }
    Some(cur)
}

/// `v * w`, see [`word_left`].
fn word_right(rs: &ReductionSystem, w: &Word, e: u32, v: &[Scalar]) -> Option<Vec<Scalar>> {
    let mut deg = e;
    let mut cur = v.to_vec();
    for &l in w.letters() {
        cur = rs.right_mul_gen(l, deg, &cur)?;
        deg += rs.gens().degree(l);
    }
    Some(cur)
}

/// True iff `f * A_d = A_d * f` inside `A_{deg f + d}` for every
/// `1 <= d <= bound - deg f`.
pub fn is_normal_up_to(rs: &ReductionSystem, f: &NcPoly, bound: u32) -> Result<bool> {
    if bound > rs.truncation() {
        return Err(Error::DegreeExceedsTruncation { degree: bound, truncation: rs.truncation() });
    }
    let Some(e) = homogeneous_degree(f)? else {
        return Ok(true);
    };
    if e + 1 > bound {
        return Err(Error::DegreeExceedsTruncation { degree: e + 1, truncation: bound });
    }
    let v = rs.homogeneous_vector(f, e)?;
    let field = rs.field();
    for d in 1..=bound - e {
        let target = rs.dim(e + d);
        let words = rs.normal_words(d);
        let fa = words.iter().map(|w| word_right(rs, w, e, &v).expect("within truncation")).collect();
        let af = words.iter().map(|w| word_left(rs, w, e, &v).expect("within truncation")).collect();
        if Subspace::span(field, target, fa) != Subspace::span(field, target, af) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Elements of `candidates` that pass [`is_normal_up_to`].
pub fn normal_among(rs: &ReductionSystem, candidates: &[NcPoly], bound: u32) -> Result<Vec<NcPoly>> {
    let mut out = Vec::new();
    for f in candidates {
        if is_normal_up_to(rs, f, bound)? {
            out.push(f.clone());
        }
    }
    Ok(out)
}

/// Number of projective points of `k^d` over a field with `q` elements.
fn projective_count(q: u64, d: usize) -> u128 {
    let q = q as u128;
    (0..d).fold(0u128, |acc, _| acc.saturating_mul(q).saturating_add(1))
}

/// Every normal line in `A_1` over a prime field, as degree-one elements
/// whose first nonzero coordinate (in normal-word order) is 1.
pub fn normal_lines_degree_one(rs: &ReductionSystem, bound: u32, budget: u128) -> Result<Vec<NcPoly>> {
    let field = rs.field();
    let elements = field.elements()?;
    let q = field.order().expect("finite field");
    let d = rs.dim(1);
    let required = projective_count(q, d);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let p = elements.len();
    let mut out = Vec::new();
    for lead in 0..d {
        // Coordinates after the leading 1 range over all of GF(p).
        let tail = (d - lead - 1) as u32;
        for code in 0..p.pow(tail) {
            let mut v = alloc::vec![field.zero(); d];
            v[lead] = field.one();
            let mut rest = code;
            for k in (lead + 1..d).rev() {
                v[k] = elements[rest % p].clone();
                rest /= p;
            }
            let f = rs.poly_from_homogeneous(1, &v);
            if is_normal_up_to(rs, &f, bound)? {
                out.push(f);
            }
        }
    }
    Ok(out)
}

/// Elements of `A_deg` commuting with every generator, checked for all
/// generators whose product with `A_deg` stays within the truncation.
pub fn central_elements(rs: &ReductionSystem, deg: u32) -> Result<Subspace> {
    let truncation = rs.truncation();
    if deg + 1 > truncation {
        return Err(Error::DegreeExceedsTruncation { degree: deg + 1, truncation });
    }
    let field = rs.field();
    let n = rs.dim(deg);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for g in 0..rs.gens().len() {
        let target = deg + rs.gens().degree(g);
        if target > truncation {
            continue;
        }
        // Column i is the image of the i-th normal word under v ↦ x_g v - v x_g.
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut e = alloc::vec![field.zero(); n];
                e[i] = field.one();
                let l = rs.left_mul_gen(g, deg, &e).expect("within truncation");
                let r = rs.right_mul_gen(g, deg, &e).expect("within truncation");
                l.iter().zip(&r).map(|(a, b)| a - b).collect()
            })
            .collect();
        for j in 0..rs.dim(target) {
            rows.push(cols.iter().map(|c| c[j].clone()).collect());
        }
    }
    Ok(Matrix::new(field, n, rows).kernel_basis())
}

/// Dimension of the span of `[u, v]` over normal words `u`, `v` of positive
/// degrees summing to `d`.
pub fn commutator_dimension(rs: &ReductionSystem, d: u32) -> Result<usize> {
    if d > rs.truncation() {
        return Err(Error::DegreeExceedsTruncation { degree: d, truncation: rs.truncation() });
    }
    let field = rs.field();
    let mut span = Subspace::zero(field, rs.dim(d));
    for i in 1..d {
        let j = d - i;
        for iu in 0..rs.dim(i) {
            for iv in 0..rs.dim(j) {
                let uv = rs.mul_normal_words(i, iu, j, iv).expect("within truncation");
                let vu = rs.mul_normal_words(j, iv, i, iu).expect("within truncation");
                let c: Vec<Scalar> = uv.iter().zip(&vu).map(|(a, b)| a - b).collect();
                span.insert(&c);
                if span.is_full() {
                    return Ok(span.dim());
                }
            }
        }
    }
    Ok(span.dim())
}

/// Invariants of a graded algebra up to the truncation degree. Equal
/// fingerprints are necessary for a graded isomorphism; they are not
/// sufficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub truncation: u32,
    pub hilbert: Vec<usize>,
    /// Commutator-span dimensions in degrees `2..=D`.
    pub commutator_dims: Vec<usize>,
    /// Number of normal lines in `A_1`; only over a prime field and when
    /// the projective scan fits in the budget.
    pub normal_line_count: Option<usize>,
    /// Multiset of cotangent dimensions over all characters, as
    /// `cotangent -> count`; only over a prime field and when `p^n` fits in
    /// the budget.
    pub cotangent_multiset: Option<BTreeMap<usize, usize>>,
}

/// Computes a [`Fingerprint`]. The finite-field components are skipped
/// (left as `None`) when their search space exceeds `budget`.
pub fn graded_fingerprint(rs: &ReductionSystem, budget: u128) -> Result<Fingerprint> {
    let truncation = rs.truncation();
    let commutator_dims = (2..=truncation).map(|d| commutator_dimension(rs, d)).collect::<Result<Vec<_>>>()?;
    let mut normal_line_count = None;
    let mut cotangent_multiset = None;
    if let Some(q) = rs.field().order() {
        if truncation >= 2 && projective_count(q, rs.dim(1)) <= budget {
            normal_line_count = Some(normal_lines_degree_one(rs, truncation, budget)?.len());
        }
        let points = (q as u128).checked_pow(rs.presentation().num_gens() as u32);
        if points.is_some_and(|p| p <= budget) {
            let pres = rs.presentation();
            let mut counts = BTreeMap::new();
            for c in characters_enumerate(pres)? {
                *counts.entry(cotangent_dimension(pres, c.point())?).or_insert(0) += 1;
            }
            cotangent_multiset = Some(counts);
        }
    }
    Ok(Fingerprint { truncation, hilbert: rs.hilbert(), commutator_dims, normal_line_count, cotangent_multiset })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::GeneratorSet;
    use crate::presentation::SkewMatrix;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn skew(field: FieldSpec, n: usize, q: i64) -> Presentation {
        Presentation::skew_ring_standard(&SkewMatrix::uniform(field, n, &field.from_i64(q)).unwrap()).unwrap()
    }

    fn pt(field: FieldSpec, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| field.from_i64(x)).collect()
    }

    #[test]
    fn characters_of_quantum_plane() {
        let f = gf(5);
        let a = skew(f, 2, 2);
        let chars = characters_enumerate(&a).unwrap();
        // Oracle: scan all 25 points directly.
        let mut expected = Vec::new();
        for x in 0..5 {
            for y in 0..5 {
                if (x * y) % 5 == 0 {
                    expected.push(pt(f, &[x, y]));
                }
            }
        }
        assert_eq!(chars.len(), 9);
        assert_eq!(chars.iter().map(|c| c.point().to_vec()).collect::<Vec<_>>(), expected);
    }

    #[test]
    fn characters_of_free_and_truncated() {
        let f = gf(5);
        let free = Presentation::free(f, GeneratorSet::standard(1));
        assert_eq!(characters_enumerate(&free).unwrap().len(), 5);
        let f7 = gf(7);
        let x = Presentation::free(f7, GeneratorSet::standard(1));
        let cube = &(&x.var(0) * &x.var(0)) * &x.var(0);
        let b = x.quotient(alloc::vec![cube]).unwrap();
        let chars = characters_enumerate(&b).unwrap();
        assert_eq!(chars, alloc::vec![Character::origin(&b)]);
        assert_eq!(characters_enumerate(&skew(FieldSpec::Rationals, 2, 2)).unwrap_err(), Error::InfiniteField);
    }

    #[test]
    fn character_checks() {
        let f = gf(7);
        let a = skew(f, 2, 3);
        assert!(character_check(&a, &pt(f, &[1, 0])).unwrap());
        assert!(!character_check(&a, &pt(f, &[1, 1])).unwrap());
        assert!(character_check(&a, &pt(f, &[0, 0])).unwrap());
        let q = FieldSpec::Rationals;
        assert!(character_check(&skew(q, 3, -1), &pt(q, &[0, 0, 0])).unwrap());
    }

    #[test]
    fn cotangent_examples() {
        let f = gf(7);
        let a = skew(f, 2, 3);
        assert_eq!(cotangent_dimension(&a, &pt(f, &[0, 0])).unwrap(), 2);
        assert_eq!(cotangent_dimension(&a, &pt(f, &[1, 0])).unwrap(), 1);
        assert_eq!(cotangent_dimension(&a, &pt(f, &[1, 1])).unwrap_err(), Error::NotACharacter);
        let comm = skew(f, 2, 1);
        for x in 0..7 {
            for y in 0..7 {
                assert_eq!(cotangent_dimension(&comm, &pt(f, &[x, y])).unwrap(), 2);
            }
        }
        let three = skew(f, 3, 2);
        assert_eq!(cotangent_dimension(&three, &pt(f, &[0, 0, 0])).unwrap(), 3);
    }

    #[test]
    fn cotangent_agrees_with_ideal_closure() {
        let f = gf(7);
        let a = skew(f, 2, 3);
        let rs = ReductionSystem::build(&a, 4).unwrap();
        for c in characters_enumerate(&a).unwrap() {
            let lin = cotangent_dimension(&a, c.point()).unwrap();
            let closure = power_profile(&rs, &c, 1).unwrap()[0];
            assert_eq!(lin, closure, "character {:?}", c.point());
        }
    }

    #[test]
    fn power_profile_of_origin_is_hilbert_function() {
        let f = gf(7);
        let a = skew(f, 2, 3);
        let rs = ReductionSystem::build(&a, 4).unwrap();
        let profile = power_profile(&rs, &Character::origin(&a), 3).unwrap();
        assert_eq!(profile, alloc::vec![2, 3, 4]);
    }

    #[test]
    fn j_s_examples() {
        let f = gf(7);
        let a = skew(f, 2, 3);
        let rs = ReductionSystem::build(&a, 4).unwrap();
        assert_eq!(j_s(&rs, 3).unwrap(), rs.whole_algebra());
        assert_eq!(j_s(&rs, 2).unwrap(), rs.augmentation_ideal());
        let j1 = j_s(&rs, 1).unwrap();
        let axis: Vec<Character> = characters_enumerate(&a).unwrap().into_iter().filter(|c| !c.is_origin()).collect();
        assert_eq!(axis.len(), 12);
        let mut expected = character_ideal(&rs, &axis[0]).unwrap();
        for c in &axis[1..] {
            let ideal = character_ideal(&rs, c).unwrap();
            assert!(!ideal.is_subset_of(&j1).unwrap() || ideal == j1);
            expected = expected.intersection(&ideal).unwrap();
        }
        assert_eq!(j1, expected);
        for c in &axis {
            assert_ne!(character_ideal(&rs, c).unwrap(), j1);
        }
    }

    #[test]
    fn j_sequence_examples() {
        let f = gf(7);
        let a = skew(f, 2, 3);
        let rs = ReductionSystem::build(&a, 4).unwrap();
        assert_eq!(j_sequence(&rs, &[5]).unwrap(), rs.whole_algebra());
        let origin = power_profile(&rs, &Character::origin(&a), 3).unwrap();
        assert_eq!(j_sequence(&rs, &origin).unwrap(), rs.augmentation_ideal());
        for s in 0..4 {
            assert_eq!(j_sequence(&rs, &[s]).unwrap(), j_s(&rs, s).unwrap());
        }
    }

    #[test]
    fn uniqueness_of_tangent_d() {
        let f = gf(7);
        let rs = ReductionSystem::build(&skew(f, 2, 3), 3).unwrap();
        assert!(unique_codim1_of_tangent_d(&rs).unwrap());
        let rs = ReductionSystem::build(&skew(gf(5), 2, 1), 3).unwrap();
        assert!(!unique_codim1_of_tangent_d(&rs).unwrap());
        let free = Presentation::free(gf(5), GeneratorSet::standard(1));
        assert!(!unique_codim1_of_tangent_d(&ReductionSystem::build(&free, 3).unwrap()).unwrap());
    }

    #[test]
    fn normality_examples() {
        let f = gf(7);
        let a = skew(f, 2, 3);
        let rs = ReductionSystem::build(&a, 4).unwrap();
        assert!(is_normal_up_to(&rs, &a.var(0), 4).unwrap());
        let sum = &a.var(0) + &a.var(1);
        assert!(!is_normal_up_to(&rs, &sum, 2).unwrap());
        assert!(is_normal_up_to(&rs, &sum.scale(&f.from_i64(0)), 4).unwrap());
        assert!(is_normal_up_to(&rs, &a.var(1).scale(&f.from_i64(4)), 4).unwrap());
        let comm = skew(f, 2, 1);
        let rc = ReductionSystem::build(&comm, 4).unwrap();
        assert!(is_normal_up_to(&rc, &(&comm.var(0) + &comm.var(1)), 4).unwrap());
        assert!(matches!(is_normal_up_to(&rs, &a.var(0), 5), Err(Error::DegreeExceedsTruncation { .. })));
        let inhom = &a.var(0) + &(&a.var(0) * &a.var(1));
        assert_eq!(is_normal_up_to(&rs, &inhom, 4).unwrap_err(), Error::NotHomogeneous);
    }

    #[test]
    fn normal_lines() {
        let f = gf(5);
        let a = skew(f, 2, 2);
        let rs = ReductionSystem::build(&a, 4).unwrap();
        let lines = normal_lines_degree_one(&rs, 4, 1000).unwrap();
        assert_eq!(lines, alloc::vec![a.var(0), a.var(1)]);
        let comm = skew(f, 2, 1);
        let rc = ReductionSystem::build(&comm, 4).unwrap();
        assert_eq!(normal_lines_degree_one(&rc, 4, 1000).unwrap().len(), 6);
        assert!(matches!(normal_lines_degree_one(&rc, 4, 5), Err(Error::BudgetExceeded { required: 6, budget: 5 })));
    }

    #[test]
    fn normal_lines_of_cubic_quotient() {
        let f = gf(5);
        let p = SkewMatrix::from_upper(f, 3, &[(0, 1, f.from_i64(2)), (0, 2, f.from_i64(3)), (1, 2, f.from_i64(4))]).unwrap();
        let a = Presentation::skew_ring_standard(&p).unwrap();
        let rel = &(&(&a.var(0) * &a.var(1)) * &a.var(2)) + &(&(&a.var(2) * &a.var(2)) * &a.var(2));
        let b = a.quotient(alloc::vec![rel]).unwrap();
        let rs = ReductionSystem::build(&b, 4).unwrap();
        let lines = normal_lines_degree_one(&rs, 4, 1000).unwrap();
        assert_eq!(lines, alloc::vec![b.var(0), b.var(1), b.var(2)]);
    }

    #[test]
    fn center_examples() {
        let f = gf(7);
        let a = skew(f, 2, -1);
        let rs = ReductionSystem::build(&a, 3).unwrap();
        assert!(central_elements(&rs, 1).unwrap().is_zero());
        let z2 = central_elements(&rs, 2).unwrap();
        let x2 = rs.homogeneous_vector(&(&a.var(0) * &a.var(0)), 2).unwrap();
        let y2 = rs.homogeneous_vector(&(&a.var(1) * &a.var(1)), 2).unwrap();
        assert_eq!(z2, Subspace::span(f, 3, alloc::vec![x2, y2]));
        let comm = ReductionSystem::build(&skew(f, 2, 1), 3).unwrap();
        assert!(central_elements(&comm, 1).unwrap().is_full());
        assert!(matches!(central_elements(&rs, 3), Err(Error::DegreeExceedsTruncation { .. })));
    }

    fn example_pair(field: FieldSpec, x_deg: u32, y_deg: u32) -> Presentation {
        let gx = GeneratorSet::new(["x1", "x2"], [x_deg, x_deg]).unwrap();
        let gy = GeneratorSet::new(["y1", "y2"], [y_deg, y_deg]).unwrap();
        let minus = SkewMatrix::uniform(field, 2, &field.from_i64(-1)).unwrap();
        let plus = SkewMatrix::uniform(field, 2, &field.one()).unwrap();
        let x = Presentation::skew_ring(&minus, gx).unwrap();
        let y = Presentation::skew_ring(&plus, gy).unwrap();
        x.tensor(&y).unwrap()
    }

    /// Coefficients of `1/(1-t)^2 * 1/(1-t^2)^2` by series multiplication.
    fn series_oracle(len: usize) -> Vec<usize> {
        let mul = |a: &[usize], b: &[usize]| -> Vec<usize> { (0..len).map(|n| (0..=n).map(|i| a[i] * b[n - i]).sum()).collect() };
        let geo1: Vec<usize> = alloc::vec![1; len];
        let geo2: Vec<usize> = (0..len).map(|i| usize::from(i % 2 == 0)).collect();
        let a = mul(&geo1, &geo1);
        let b = mul(&geo2, &geo2);
        mul(&a, &b)
    }

    #[test]
    fn example_pair_fingerprints_differ() {
        let f = gf(7);
        let a = example_pair(f, 1, 2);
        let b = example_pair(f, 2, 1);
        let ra = ReductionSystem::build(&a, 4).unwrap();
        let rb = ReductionSystem::build(&b, 4).unwrap();
        assert_eq!(series_oracle(5), alloc::vec![1, 2, 5, 8, 14]);
        assert_eq!(ra.hilbert(), series_oracle(5));
        assert_eq!(rb.hilbert(), series_oracle(5));
        let fa = graded_fingerprint(&ra, 10_000).unwrap();
        let fb = graded_fingerprint(&rb, 10_000).unwrap();
        assert_eq!(fa.commutator_dims[0], 1);
        assert_eq!(fb.commutator_dims[0], 0);
        assert_ne!(fa, fb);
        assert_eq!(fa, graded_fingerprint(&ra, 10_000).unwrap());
        assert!(!ra.is_generated_in_degree_one());
        assert!(!rb.is_generated_in_degree_one());
    }

    #[test]
    fn fingerprint_is_incomplete_over_rationals() {
        let q = FieldSpec::Rationals;
        let a = ReductionSystem::build(&skew(q, 2, 2), 4).unwrap();
        let b = ReductionSystem::build(&skew(q, 2, 5), 4).unwrap();
        let fa = graded_fingerprint(&a, 10_000).unwrap();
        assert_eq!(fa, graded_fingerprint(&b, 10_000).unwrap());
        assert_eq!(fa.normal_line_count, None);
        assert_eq!(fa.cotangent_multiset, None);
    }
}
