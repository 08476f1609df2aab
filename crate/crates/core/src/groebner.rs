//! Degree-truncated noncommutative Gröbner bases for homogeneous relations.
//!
//! Completion runs degree by degree up to the truncation degree `D`. In
//! degree `d` the candidate words are the words with no lower-degree
//! obstruction as a subword; defining relations of degree `d` and overlap
//! S-polynomials of degree `d` are reduced onto the candidates and
//! row-reduced, and each pivot becomes a new rule. Because every rule in
//! degree `d` comes out of a reduced echelon form, the rule set is minimal
//! and its tails consist of normal words only.
//!
//! After completion the system stores, for every generator and every normal
//! word, the normal form of the word multiplied by the generator on either
//! side. All later arithmetic in the algebra goes through those tables.
//!
//! Elements of `A_{<=D}` are handled as dense *filtered vectors*: degree
//! blocks are laid out from degree `D` down to degree 0, so the reduced
//! echelon basis of a subspace is automatically adapted to the filtration
//! `A_{<=0} ⊆ A_{<=1} ⊆ ...`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::freealg::{GeneratorSet, NcPoly, Word};
use crate::linalg::{rref_in_place, Subspace};
use crate::presentation::Presentation;
use crate::scalars::{FieldSpec, Scalar};

type SparseVec = Vec<(usize, Scalar)>;

/// Which obstruction to rewrite first in [`ReductionSystem::normal_form_by_rewriting`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteStrategy {
    Leftmost,
    Rightmost,
}

/// A completed, degree-truncated rewriting system for a presentation.
///
/// This also serves as the truncated algebra `A^(D)`: normal words form a
/// basis of each `A_d` (`d <= D`), with multiplication tables attached.
#[derive(Clone, Debug)]
pub struct ReductionSystem {
    pres: Presentation,
    truncation: u32,
    rules: BTreeMap<Word, NcPoly>,
    normal: Vec<Vec<Word>>,
    index: BTreeMap<Word, usize>,
    left: Vec<Vec<Vec<SparseVec>>>,
    right: Vec<Vec<Vec<SparseVec>>>,
    offsets: Vec<usize>,
    total: usize,
}

struct Completion<'a> {
    gens: &'a GeneratorSet,
    rules: BTreeMap<Word, NcPoly>,
    max_rule_len: usize,
    memo: BTreeMap<Word, NcPoly>,
    one: Scalar,
}

impl Completion<'_> {
    fn weight(&self) -> impl Fn(usize) -> u32 + '_ {
        move |l| self.gens.degree(l)
    }

    fn find_obstruction(&self, w: &Word) -> Option<(usize, usize)> {
        let n = w.len();
        for start in 0..n {
            for end in start + 1..=n.min(start + self.max_rule_len) {
                if self.rules.contains_key(&w.slice(start, end, self.weight())) {
                    return Some((start, end));
                }
            }
        }
        None
    }

    fn has_obstruction_suffix(&self, w: &Word) -> bool {
        let n = w.len();
        (n.saturating_sub(self.max_rule_len)..n).any(|k| self.rules.contains_key(&w.slice(k, n, self.weight())))
    }

    fn reduce_word(&mut self, w: &Word) -> NcPoly {
        if let Some(r) = self.memo.get(w) {
            return r.clone();
        }
        let result = match self.find_obstruction(w) {
            None => NcPoly::monomial(w.clone(), self.one.clone()),
            Some((start, end)) => {
                let lw = w.slice(start, end, self.weight());
                let prefix = w.slice(0, start, self.weight());
                let suffix = w.slice(end, w.len(), self.weight());
                let tail = self.rules[&lw].clone();
                let mut acc = NcPoly::zero();
                for (t, c) in tail.terms() {
                    let red = self.reduce_word(&prefix.concat(t).concat(&suffix));
                    acc = &acc + &red.scale(c);
                }
                acc
            }
        };
        self.memo.insert(w.clone(), result.clone());
        result
    }

    fn reduce_poly(&mut self, f: &NcPoly) -> NcPoly {
        let mut acc = NcPoly::zero();
        for (w, c) in f.terms() {
            let red = self.reduce_word(w);
            acc = &acc + &red.scale(c);
        }
        acc
    }
}

/// Overlap ambiguity between two rules: the last `k` letters of `l1` equal
/// the first `k` letters of `l2`.
struct Overlap {
    l1: Word,
    l2: Word,
    k: usize,
}

fn overlaps_between(l1: &Word, l2: &Word, weight: &impl Fn(usize) -> u32, out: &mut Vec<(u32, Overlap)>) {
    let (a, b) = (l1.letters(), l2.letters());
    for k in 1..a.len().min(b.len()) {
        if a[a.len() - k..] == b[..k] {
            let shared: u32 = b[..k].iter().map(|&l| weight(l)).sum();
            out.push((l1.degree() + l2.degree() - shared, Overlap { l1: l1.clone(), l2: l2.clone(), k }));
        }
    }
}

impl ReductionSystem {
    /// Completes `pres` up to degree `truncation`.
    pub fn build(pres: &Presentation, truncation: u32) -> Result<Self> {
        if truncation == 0 {
            return Err(Error::TruncationTooSmall { relation: pres.max_relation_degree().unwrap_or(1), truncation });
        }
        if let Some(m) = pres.max_relation_degree() {
            if m > truncation {
                return Err(Error::TruncationTooSmall { relation: m, truncation });
            }
        }
        let gens = pres.gens();
        let field = pres.field();
        let d_max = truncation as usize;
        let weight = |l: usize| gens.degree(l);
        let mut comp = Completion { gens, rules: BTreeMap::new(), max_rule_len: 0, memo: BTreeMap::new(), one: field.one() };
        let mut normal: Vec<Vec<Word>> = alloc::vec![Vec::new(); d_max + 1];
        normal[0].push(Word::unit());
        let mut pending: BTreeMap<u32, Vec<Overlap>> = BTreeMap::new();

        for d in 1..=truncation {
            let mut cands = Vec::new();
            for g in 0..gens.len() {
                let wg = gens.degree(g);
                if wg > d {
                    continue;
                }
                for n in &normal[(d - wg) as usize] {
                    let w = n.concat(&gens.generator(g));
                    if !comp.has_obstruction_suffix(&w) {
                        cands.push(w);
                    }
                }
            }
            cands.sort();
            // Columns in descending deglex order so pivots are leading words.
            let ncols = cands.len();
            let col_of: BTreeMap<&Word, usize> = cands.iter().enumerate().map(|(i, w)| (w, ncols - 1 - i)).collect();
            let to_row = |f: &NcPoly| -> Vec<Scalar> {
                let mut row = alloc::vec![field.zero(); ncols];
                for (w, c) in f.terms() {
                    row[col_of[w]] = c.clone();
                }
                row
            };

            let mut rows = Vec::new();
            for r in pres.relations().iter().filter(|r| r.max_degree() == Some(d)) {
                let red = comp.reduce_poly(r);
                if !red.is_zero() {
                    rows.push(to_row(&red));
                }
            }
            for ov in pending.remove(&d).unwrap_or_default() {
                let a = ov.l1.slice(0, ov.l1.len() - ov.k, weight);
                let c = ov.l2.slice(ov.k, ov.l2.len(), weight);
                let a_poly = NcPoly::monomial(a, field.one());
                let c_poly = NcPoly::monomial(c, field.one());
                let left_path = &comp.rules[&ov.l1].clone() * &c_poly;
                let right_path = &a_poly * &comp.rules[&ov.l2].clone();
                let s = &comp.reduce_poly(&left_path) - &comp.reduce_poly(&right_path);
                if !s.is_zero() {
                    rows.push(to_row(&s));
                }
            }
            let pivots = rref_in_place(&mut rows, ncols);

            let mut is_pivot = alloc::vec![false; ncols];
            let mut new_rules = Vec::new();
            for (row, &p) in rows.iter().zip(&pivots) {
                is_pivot[p] = true;
                let lw = cands[ncols - 1 - p].clone();
                let tail = NcPoly::from_terms(
                    row.iter().enumerate().filter(|(j, c)| *j != p && !c.is_zero()).map(|(j, c)| (cands[ncols - 1 - j].clone(), -c)),
                );
                new_rules.push((lw, tail));
            }
            for (lw, tail) in new_rules {
                let mut found = Vec::new();
                for other in comp.rules.keys() {
                    overlaps_between(&lw, other, &weight, &mut found);
                    overlaps_between(other, &lw, &weight, &mut found);
                }
                overlaps_between(&lw, &lw, &weight, &mut found);
                for (deg, ov) in found {
                    if deg <= truncation {
                        pending.entry(deg).or_default().push(ov);
                    }
                }
                comp.max_rule_len = comp.max_rule_len.max(lw.len());
                comp.rules.insert(lw, tail);
            }
            comp.memo.retain(|w, _| w.degree() != d);
            normal[d as usize] = cands.into_iter().enumerate().filter(|(i, _)| !is_pivot[ncols - 1 - i]).map(|(_, w)| w).collect();
        }

        let mut index = BTreeMap::new();
        for words in &normal {
            for (i, w) in words.iter().enumerate() {
                index.insert(w.clone(), i);
            }
        }
        let to_sparse = |f: &NcPoly| -> SparseVec { f.terms().map(|(w, c)| (index[w], c.clone())).collect() };
        let mut left = Vec::with_capacity(gens.len());
        let mut right = Vec::with_capacity(gens.len());
        for g in 0..gens.len() {
            let wg = gens.degree(g) as usize;
            let gw = gens.generator(g);
            let mut lg = Vec::new();
            let mut rg = Vec::new();
            for words in normal.iter().take((d_max + 1).saturating_sub(wg)) {
                lg.push(words.iter().map(|n| to_sparse(&comp.reduce_word(&gw.concat(n)))).collect());
                rg.push(words.iter().map(|n| to_sparse(&comp.reduce_word(&n.concat(&gw)))).collect());
            }
            left.push(lg);
            right.push(rg);
        }

        let mut offsets = alloc::vec![0; d_max + 1];
        let mut acc = 0;
        for d in (0..=d_max).rev() {
            offsets[d] = acc;
            acc += normal[d].len();
        }
        Ok(ReductionSystem { pres: pres.clone(), truncation, rules: comp.rules, normal, index, left, right, offsets, total: acc })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn field(&self) -> FieldSpec {
        self.pres.field()
    }

    pub fn gens(&self) -> &GeneratorSet {
        self.pres.gens()
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    /// Minimal rewrite rules `leading word -> tail`.
    pub fn rules(&self) -> impl Iterator<Item = (&Word, &NcPoly)> {
        self.rules.iter()
    }

    pub fn num_rules(&self) -> usize {
        self.rules.len()
    }

    /// Normal words of degree `d`, ascending.
    pub fn normal_words(&self, d: u32) -> &[Word] {
        &self.normal[d as usize]
    }

    /// `dim A_d` for `d <= D`.
    pub fn dim(&self, d: u32) -> usize {
        self.normal.get(d as usize).map_or(0, Vec::len)
    }

    /// Hilbert function `h(0), ..., h(D)`.
    pub fn hilbert(&self) -> Vec<usize> {
        self.normal.iter().map(Vec::len).collect()
    }

    fn check_degree(&self, degree: u32) -> Result<()> {
        if degree > self.truncation {
            return Err(Error::DegreeExceedsTruncation { degree, truncation: self.truncation });
        }
        Ok(())
    }

    /// `x_g * v` for `v` homogeneous of degree `d` (dense in normal-word
    /// coordinates); `None` when the product leaves the truncation.
    pub fn left_mul_gen(&self, g: usize, d: u32, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let table = self.left[g].get(d as usize)?;
        Some(self.apply_table(table, d + self.gens().degree(g), v))
    }

    /// `v * x_g`, see [`Self::left_mul_gen`].
    pub fn right_mul_gen(&self, g: usize, d: u32, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let table = self.right[g].get(d as usize)?;
        Some(self.apply_table(table, d + self.gens().degree(g), v))
    }

    fn apply_table(&self, table: &[SparseVec], target: u32, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = alloc::vec![self.field().zero(); self.dim(target)];
        for (c, image) in v.iter().zip(table) {
            if c.is_zero() {
                continue;
            }
            for (j, a) in image {
                out[*j] = &out[*j] + &(c * a);
            }
        }
        out
    }

    fn apply_table_sparse(&self, table: &[SparseVec], v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, c) in v {
            for (j, a) in &table[*i] {
                let t = c * a;
                let e = acc.entry(*j).or_insert_with(|| self.field().zero());
                *e = &*e + &t;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Normal form of `word * v` where `v` is a sparse homogeneous element
    /// of degree `d`. `None` if the product exceeds `D`.
    fn word_times(&self, word: &[usize], d: u32, v: SparseVec) -> Option<(u32, SparseVec)> {
        let mut deg = d;
        let mut cur = v;
        for &l in word.iter().rev() {
            let table = self.left[l].get(deg as usize)?;
            cur = self.apply_table_sparse(table, &cur);
            deg += self.gens().degree(l);
        }
        Some((deg, cur))
    }

    /// Normal form of a single word as a sparse vector in its degree.
    fn word_nf(&self, w: &Word) -> Result<SparseVec> {
        self.check_degree(w.degree())?;
        let unit = alloc::vec![(0usize, self.field().one())];
        Ok(self.word_times(w.letters(), 0, unit).expect("degree checked").1)
    }

    /// Reduces `f` to a combination of normal words.
    pub fn normal_form(&self, f: &NcPoly) -> Result<NcPoly> {
        let mut acc: BTreeMap<Word, Scalar> = BTreeMap::new();
        for (w, c) in f.terms() {
            let d = w.degree() as usize;
            for (j, a) in self.word_nf(w)? {
                let t = c * &a;
                let word = self.normal[d][j].clone();
                let e = acc.entry(word).or_insert_with(|| self.field().zero());
                *e = &*e + &t;
            }
        }
        Ok(NcPoly::from_terms(acc))
    }

    /// Normal form computed by plain rewriting with the minimal rules, never
    /// touching the multiplication tables.
    pub fn normal_form_by_rewriting(&self, f: &NcPoly, strategy: RewriteStrategy) -> Result<NcPoly> {
        if let Some(d) = f.max_degree() {
            self.check_degree(d)?;
        }
        let weight = |l: usize| self.gens().degree(l);
        let max_len = self.rules.keys().map(Word::len).max().unwrap_or(0);
        let find = |w: &Word| -> Option<(usize, usize)> {
            let n = w.len();
            let mut hits = (0..n).flat_map(|s| (s + 1..=n.min(s + max_len)).map(move |e| (s, e)));
            match strategy {
                RewriteStrategy::Leftmost => hits.find(|&(s, e)| self.rules.contains_key(&w.slice(s, e, weight))),
                RewriteStrategy::Rightmost => hits.rfind(|&(s, e)| self.rules.contains_key(&w.slice(s, e, weight))),
            }
        };
        let mut cur = f.clone();
        let mut done = NcPoly::zero();
        while let Some((w, c)) = cur.leading_term().map(|(w, c)| (w.clone(), c.clone())) {
            cur = &cur - &NcPoly::monomial(w.clone(), c.clone());
            match find(&w) {
                None => done.add_term(w, c),
                Some((s, e)) => {
                    let lw = w.slice(s, e, weight);
                    let prefix = NcPoly::monomial(w.slice(0, s, weight), c.clone());
                    let suffix = NcPoly::monomial(w.slice(e, w.len(), weight), self.field().one());
                    cur = &cur + &(&(&prefix * &self.rules[&lw]) * &suffix);
                }
            }
        }
        Ok(done)
    }

    /// Product in `A^(D)`: components of degree above `D` are dropped.
    pub fn multiply_truncated(&self, f: &NcPoly, g: &NcPoly) -> Result<NcPoly> {
        let f = self.normal_form(f)?;
        let g = self.normal_form(g)?;
        let mut acc = NcPoly::zero();
        for (u, a) in f.terms() {
            for (v, b) in g.terms() {
                if u.degree() + v.degree() > self.truncation {
                    continue;
                }
                let ab = a * b;
                let (deg, sv) = self
                    .word_times(u.letters(), v.degree(), alloc::vec![(self.index[v], self.field().one())])
                    .expect("degree within truncation");
                for (j, c) in sv {
                    acc.add_term(self.normal[deg as usize][j].clone(), &ab * &c);
                }
            }
        }
        Ok(acc)
    }

    /// Normal form of `u * v` for normal words given by (degree, index).
    pub fn mul_normal_words(&self, du: u32, iu: usize, dv: u32, iv: usize) -> Option<Vec<Scalar>> {
        let u = &self.normal[du as usize][iu];
        let (deg, sv) = self.word_times(u.letters(), dv, alloc::vec![(iv, self.field().one())])?;
        let mut out = alloc::vec![self.field().zero(); self.dim(deg)];
        for (j, c) in sv {
            out[j] = c;
        }
        Some(out)
    }

    /// Dense coordinates of the degree-`d` part of `f` after reduction.
    pub fn homogeneous_vector(&self, f: &NcPoly, d: u32) -> Result<Vec<Scalar>> {
        self.check_degree(d)?;
        let nf = self.normal_form(&f.homogeneous_component(d))?;
        let mut v = alloc::vec![self.field().zero(); self.dim(d)];
        for (w, c) in nf.terms() {
            v[self.index[w]] = c.clone();
        }
        Ok(v)
    }

    /// Inverse of [`Self::homogeneous_vector`].
    pub fn poly_from_homogeneous(&self, d: u32, v: &[Scalar]) -> NcPoly {
        NcPoly::from_terms(v.iter().enumerate().map(|(i, c)| (self.normal[d as usize][i].clone(), c.clone())))
    }

    /// True when `A_1 * A_{d-1}` spans `A_d` for every `2 <= d <= D`.
    pub fn is_generated_in_degree_one(&self) -> bool {
        let deg_one: Vec<usize> =
            self.normal[1.min(self.normal.len() - 1)].iter().filter(|w| w.degree() == 1).map(|w| w.letters()[0]).collect();
        for d in 1..=self.truncation {
            if d == 1 {
                // A_1 itself must consist of degree-one generators.
                continue;
            }
            let mut span = Subspace::zero(self.field(), self.dim(d));
            for &g in &deg_one {
                for i in 0..self.dim(d - 1) {
                    let mut e = alloc::vec![self.field().zero(); self.dim(d - 1)];
                    e[i] = self.field().one();
                    span.insert(&self.left_mul_gen(g, d - 1, &e).expect("within truncation"));
                }
            }
            if !span.is_full() {
                return false;
            }
        }
        true
    }

    // ---- filtered vectors on A_{<=D} ----

    /// `dim A_{<=D}`.
    pub fn total_dim(&self) -> usize {
        self.total
    }

    /// First coordinate of the degree-`d` block in a filtered vector.
    pub fn offset(&self, d: u32) -> usize {
        self.offsets[d as usize]
    }

    /// Number of coordinates belonging to `A_{<=d}` (the trailing ones).
    pub fn filtered_dim(&self, d: u32) -> usize {
        self.total - self.offsets[d as usize]
    }

    pub fn to_filtered(&self, f: &NcPoly) -> Result<Vec<Scalar>> {
        let mut v = alloc::vec![self.field().zero(); self.total];
        for (w, c) in f.terms() {
            let base = self.offset(w.degree());
            for (j, a) in self.word_nf(w)? {
                v[base + j] = &v[base + j] + &(c * &a);
            }
        }
        Ok(v)
    }

    pub fn from_filtered(&self, v: &[Scalar]) -> NcPoly {
        let mut f = NcPoly::zero();
        for d in 0..=self.truncation {
            let base = self.offset(d);
            for (i, w) in self.normal[d as usize].iter().enumerate() {
                f.add_term(w.clone(), v[base + i].clone());
            }
        }
        f
    }

    /// Highest degree with a nonzero component.
    pub fn filtered_degree(&self, v: &[Scalar]) -> Option<u32> {
        let first = v.iter().position(|c| !c.is_zero())?;
        (0..=self.truncation).rev().find(|&d| first < self.offsets[d as usize] + self.dim(d))
    }

    fn block(&self, d: u32) -> core::ops::Range<usize> {
        let s = self.offset(d);
        s..s + self.dim(d)
    }

    fn mul_gen_filtered(&self, g: usize, v: &[Scalar], left: bool) -> Option<Vec<Scalar>> {
        let wg = self.gens().degree(g);
        let top = self.filtered_degree(v)?;
        if top + wg > self.truncation {
            return None;
        }
        let mut out = alloc::vec![self.field().zero(); self.total];
        for d in 0..=top {
            let r = self.block(d);
            if v[r.clone()].iter().all(Scalar::is_zero) {
                continue;
            }
            let prod = if left { self.left_mul_gen(g, d, &v[r]) } else { self.right_mul_gen(g, d, &v[r]) }?;
            let base = self.offset(d + wg);
            for (j, c) in prod.into_iter().enumerate() {
                if !c.is_zero() {
                    out[base + j] = &out[base + j] + &c;
                }
            }
        }
        Some(out)
    }

    /// `x_g * v` inside `A_{<=D}`; `None` when some component would land
    /// above `D`.
    pub fn left_mul_filtered(&self, g: usize, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.mul_gen_filtered(g, v, true)
    }

    pub fn right_mul_filtered(&self, g: usize, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.mul_gen_filtered(g, v, false)
    }

    /// `a * b` inside `A_{<=D}`; `None` when the product's degree bound
    /// exceeds `D`.
    pub fn mul_filtered(&self, a: &[Scalar], b: &[Scalar]) -> Option<Vec<Scalar>> {
        let (Some(da), Some(db)) = (self.filtered_degree(a), self.filtered_degree(b)) else {
            return Some(alloc::vec![self.field().zero(); self.total]);
        };
        if da + db > self.truncation {
            return None;
        }
        let mut out = alloc::vec![self.field().zero(); self.total];
        for du in 0..=da {
            for (iu, ca) in a[self.block(du)].iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                for dv in 0..=db {
                    for (iv, cb) in b[self.block(dv)].iter().enumerate() {
                        if cb.is_zero() {
                            continue;
                        }
                        let prod = self.mul_normal_words(du, iu, dv, iv)?;
                        let base = self.offset(du + dv);
                        let ab = ca * cb;
                        for (j, c) in prod.into_iter().enumerate() {
                            if !c.is_zero() {
                                out[base + j] = &out[base + j] + &(&ab * &c);
                            }
                        }
                    }
                }
            }
        }
        Some(out)
    }

    /// Smallest subspace of `A_{<=D}` containing `gens` and closed under
    /// multiplication by generators on either side whenever the product
    /// stays within degree `D`.
    pub fn ideal_closure(&self, gens: &[NcPoly]) -> Result<BoundedIdeal> {
        let vectors = gens.iter().map(|g| self.to_filtered(g)).collect::<Result<Vec<_>>>()?;
        Ok(self.close(vectors))
    }

    /// Closure of a set of filtered vectors; see [`Self::ideal_closure`].
    pub fn close(&self, seeds: Vec<Vec<Scalar>>) -> BoundedIdeal {
        let mut space = Subspace::zero(self.field(), self.total);
        let mut work: Vec<Vec<Scalar>> = Vec::new();
        for v in seeds {
            if let Some(r) = space.insert_reduced(&v) {
                work.push(r);
            }
        }
        // Inserted vectors are triangular with distinct pivots, so those of
        // filtered degree <= e span the ideal's intersection with A_{<=e}.
        while let Some(v) = work.pop() {
            for g in 0..self.gens().len() {
                for left in [true, false] {
                    if let Some(p) = self.mul_gen_filtered(g, &v, left) {
                        if let Some(r) = space.insert_reduced(&p) {
                            work.push(r);
                        }
                    }
                }
            }
        }
        BoundedIdeal { space, hilbert: self.hilbert(), offsets: self.offsets.clone() }
    }

    /// Product ideal `(G) * J` for an ideal generated by `gens` and a
    /// (two-sided) ideal `J`: the closure of `{g * b}` over generators `g`
    /// and filtered basis vectors `b` of `J`.
    pub fn ideal_product(&self, gens: &[NcPoly], j: &BoundedIdeal) -> Result<BoundedIdeal> {
        let gv = gens.iter().map(|g| self.to_filtered(g)).collect::<Result<Vec<_>>>()?;
        let mut seeds = Vec::new();
        for g in &gv {
            for b in j.space.basis() {
                if let Some(p) = self.mul_filtered(g, b) {
                    seeds.push(p);
                }
            }
        }
        Ok(self.close(seeds))
    }

    /// The ideal `A_{>=1}` restricted to `A_{<=D}`.
    pub fn augmentation_ideal(&self) -> BoundedIdeal {
        let vectors = (0..self.total - 1)
            .map(|i| {
                let mut v = alloc::vec![self.field().zero(); self.total];
                v[i] = self.field().one();
                v
            })
            .collect();
        BoundedIdeal { space: Subspace::span(self.field(), self.total, vectors), hilbert: self.hilbert(), offsets: self.offsets.clone() }
    }

    pub fn whole_algebra(&self) -> BoundedIdeal {
        BoundedIdeal { space: Subspace::full(self.field(), self.total), hilbert: self.hilbert(), offsets: self.offsets.clone() }
    }
}

/// The part of an ideal that lives in `A_{<=D}`, as computed by bounded
/// closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedIdeal {
    space: Subspace,
    hilbert: Vec<usize>,
    offsets: Vec<usize>,
}

impl BoundedIdeal {
    pub fn subspace(&self) -> &Subspace {
        &self.space
    }

    pub fn truncation(&self) -> u32 {
        (self.hilbert.len() - 1) as u32
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `dim A_{<=D} - dim I`.
    pub fn codim(&self) -> usize {
        self.space.codim()
    }

    /// `I ∩ A_{<=d}` in the coordinates of `A_{<=d}`.
    pub fn stratum(&self, d: u32) -> Subspace {
        let start = self.offsets[d as usize];
        let total = self.space.ambient_dim();
        let rows = self.space.basis().iter().zip(self.space.pivots()).filter(|(_, &p)| p >= start).map(|(r, _)| r.clone()).collect();
        Subspace::span(self.space.field(), total, rows).restrict_coordinates(start..total)
    }

    /// `I ∩ A_d` in the normal-word coordinates of `A_d`.
    pub fn homogeneous_part(&self, d: u32) -> Subspace {
        let start = self.offsets[d as usize];
        let len = self.hilbert[d as usize];
        let field = self.space.field();
        let total = self.space.ambient_dim();
        let coord = Subspace::span(
            field,
            total,
            (start..start + len)
                .map(|i| {
                    let mut v = alloc::vec![field.zero(); total];
                    v[i] = field.one();
                    v
                })
                .collect(),
        );
        self.space.intersection(&coord).expect("same ambient").restrict_coordinates(start..start + len)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        self.space.contains(v)
    }

    pub fn intersection(&self, other: &BoundedIdeal) -> Result<BoundedIdeal> {
        Ok(BoundedIdeal { space: self.space.intersection(&other.space)?, hilbert: self.hilbert.clone(), offsets: self.offsets.clone() })
    }

    pub fn is_subset_of(&self, other: &BoundedIdeal) -> Result<bool> {
        self.space.is_subspace_of(&other.space)
    }

    /// Equality of `I ∩ A_{<=d}` for every `d <= up_to`.
    pub fn agrees_up_to(&self, other: &BoundedIdeal, up_to: u32) -> bool {
        self.space.ambient_dim() == other.space.ambient_dim() && (0..=up_to).all(|d| self.stratum(d) == other.stratum(d))
    }
}
