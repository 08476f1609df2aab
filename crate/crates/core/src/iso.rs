//! Graded isomorphism tests.
//!
//! For skew polynomial rings `k_p[x]/M` with all `p_ij != 1` and `M` in
//! degrees `>= 3`, every graded isomorphism from another skew quotient
//! `k_q[y]/N` maps each `y_i` to a multiple of some `x_σ(i)`. Deciding
//! isomorphism therefore reduces to searching permutations `σ` with
//! `q_ij = p_{σ(i)σ(j)}` and nonzero scalars. A brute-force search over
//! all of `GL(A_1)` is provided as an independent oracle for tiny cases.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::freealg::NcPoly;
use crate::groebner::{ReductionSystem, RewriteStrategy};
use crate::linalg::Matrix;
use crate::presentation::{Presentation, SkewMatrix};
use crate::scalars::{FieldSpec, Scalar};

/// Replacement of the generators by `a_i x_σ(i)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementaryChange {
    sigma: Vec<usize>,
    scalars: Vec<Scalar>,
}

impl ElementaryChange {
    pub fn new(sigma: Vec<usize>, scalars: Vec<Scalar>) -> Result<Self> {
        let n = sigma.len();
        let mut seen = alloc::vec![false; n];
        for &s in &sigma {
            if s >= n || seen[s] {
                return Err(Error::HypothesisViolated(format!("{sigma:?} is not a permutation")));
            }
            seen[s] = true;
        }
        if scalars.len() != n {
            return Err(Error::GeneratorSetMismatch);
        }
        if scalars.iter().any(Scalar::is_zero) {
            return Err(Error::DivisionByZero);
        }
        Ok(ElementaryChange { sigma, scalars })
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        ElementaryChange { sigma: (0..n).collect(), scalars: alloc::vec![field.one(); n] }
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn scalars(&self) -> &[Scalar] {
        &self.scalars
    }

    /// Images `a_i x_σ(i)` of the generators of the source algebra, as
    /// polynomials in the target generators.
    pub fn images(&self, target: &Presentation) -> Vec<NcPoly> {
        self.sigma.iter().zip(&self.scalars).map(|(&s, a)| target.var(s).scale(a)).collect()
    }
}

/// How nonzero scalars are searched in [`skew_quotient_iso`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarSearch {
    /// Every tuple of units with the first scalar fixed to 1, over a prime
    /// field; fails with `BudgetExceeded` when the number of
    /// `(σ, scalars)` pairs exceeds the budget.
    Exhaustive { budget: u128 },
    /// Only the given tuples.
    Candidates(Vec<Vec<Scalar>>),
}

impl ScalarSearch {
    /// Exhaustive over a prime field; the tuples of signs `±1` over `ℚ`.
    pub fn default_for(field: FieldSpec, n: usize, budget: u128) -> Self {
        if field.is_finite() {
            return ScalarSearch::Exhaustive { budget };
        }
        let one = field.one();
        let minus = -&one;
        let mut tuples = Vec::new();
        for mask in 0..(1u64 << n.saturating_sub(1)) {
            let mut t = alloc::vec![one.clone()];
            t.extend((1..n).map(|i| if mask >> (i - 1) & 1 == 1 { minus.clone() } else { one.clone() }));
            tuples.push(t);
        }
        if n == 0 {
            tuples = alloc::vec![Vec::new()];
        }
        ScalarSearch::Candidates(tuples)
    }
}

/// A certificate of isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `y_i ↦ a_i x_σ(i)` from the second algebra to the first.
    Elementary(ElementaryChange),
    /// `x_i ↦ Σ_j m_ij y_j` from the first algebra to the second.
    Linear(Vec<Vec<Scalar>>),
}

/// Outcome of an isomorphism test, certified up to `checked_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoVerdict {
    pub isomorphic: bool,
    pub witness: Option<Witness>,
    pub checked_degree: u32,
}

impl IsoVerdict {
    fn no(checked_degree: u32) -> Self {
        IsoVerdict { isomorphic: false, witness: None, checked_degree }
    }
}

fn row_signature(m: &SkewMatrix, i: usize) -> Vec<Scalar> {
    let mut row = m.rows()[i].clone();
    row.sort();
    row
}

/// All permutations `σ` with `Q_ij = P_{σ(i)σ(j)}`, in lexicographic
/// order.
pub fn perm_equiv_all(p: &SkewMatrix, q: &SkewMatrix) -> Vec<Vec<usize>> {
    let n = p.size();
    if n != q.size() || p.field() != q.field() {
        return Vec::new();
    }
    let ps: Vec<_> = (0..n).map(|i| row_signature(p, i)).collect();
    let qs: Vec<_> = (0..n).map(|i| row_signature(q, i)).collect();
    let mut out = Vec::new();
    let mut sigma = Vec::with_capacity(n);
    let mut used = alloc::vec![false; n];
    extend_perm(p, q, &ps, &qs, &mut sigma, &mut used, &mut out);
    out
}

fn extend_perm(
    p: &SkewMatrix,
    q: &SkewMatrix,
    ps: &[Vec<Scalar>],
    qs: &[Vec<Scalar>],
    sigma: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let i = sigma.len();
    if i == p.size() {
        out.push(sigma.clone());
        return;
    }
    for c in 0..p.size() {
        if used[c] || ps[c] != qs[i] {
            continue;
        }
        let consistent = sigma.iter().enumerate().all(|(k, &s)| q.get(i, k) == p.get(c, s) && q.get(k, i) == p.get(s, c));
        if !consistent {
            continue;
        }
        used[c] = true;
        sigma.push(c);
        extend_perm(p, q, ps, qs, sigma, used, out);
        sigma.pop();
        used[c] = false;
    }
}

/// The first permutation from [`perm_equiv_all`].
pub fn perm_equiv(p: &SkewMatrix, q: &SkewMatrix) -> Option<Vec<usize>> {
    perm_equiv_all(p, q).into_iter().next()
}

/// The presentation `A'` on generators `y_i` for which `y_i ↦ a_i x_σ(i)`
/// is an isomorphism `A' → A`: its parameters are `p_{σ(i)σ(j)}` and its
/// extra relations are those of `A` rewritten through
/// `x_k = a_{τ(k)}^{-1} y_{τ(k)}`, `τ = σ^{-1}`.
pub fn apply_elementary_change(a: &Presentation, change: &ElementaryChange) -> Result<Presentation> {
    let p = a.skew().ok_or_else(|| Error::HypothesisViolated("presentation has no skew parameters".into()))?;
    let n = a.num_gens();
    if change.sigma.len() != n {
        return Err(Error::GeneratorSetMismatch);
    }
    if change.scalars.iter().any(|s| s.field() != a.field()) {
        return Err(Error::FieldMismatch);
    }
    let base = Presentation::skew_ring(&p.permuted(&change.sigma), a.gens().clone())?;
    let mut tau = alloc::vec![0; n];
    for (i, &s) in change.sigma.iter().enumerate() {
        tau[s] = i;
    }
    let images = (0..n).map(|k| Ok(base.var(tau[k]).scale(&change.scalars[tau[k]].inv()?))).collect::<Result<Vec<_>>>()?;
    let extras = a.extra_relations().iter().map(|r| r.substitute(&images)).collect();
    base.quotient(extras)
}

fn check_skew_hypotheses(a: &Presentation, b: &Presentation) -> Result<()> {
    let pa = a.skew().ok_or_else(|| Error::HypothesisViolated("first algebra is not a skew quotient".into()))?;
    if b.skew().is_none() {
        return Err(Error::HypothesisViolated("second algebra is not a skew quotient".into()));
    }
    if !pa.all_off_diagonal_nontrivial() {
        return Err(Error::HypothesisViolated("first algebra has a parameter p_ij = 1".into()));
    }
    if a.min_extra_degree().is_some_and(|d| d < 3) {
        return Err(Error::HypothesisViolated("first algebra has extra relations below degree 3".into()));
    }
    if b.min_extra_degree().is_some_and(|d| d < 2) {
        return Err(Error::HypothesisViolated("second algebra has extra relations below degree 2".into()));
    }
    if !a.gens().all_degree_one() || !b.gens().all_degree_one() {
        return Err(Error::HypothesisViolated("generators must have degree 1".into()));
    }
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// A transported relation: each word contributes `coeff * Π a_letters`
/// times the normal form of its image word.
struct Transported {
    last_letter: usize,
    terms: Vec<(Scalar, Vec<usize>, NcPoly)>,
}

fn transport_plan(rs_a: &ReductionSystem, b: &Presentation, sigma: &[usize]) -> Result<Vec<Transported>> {
    let a = rs_a.presentation();
    let one = a.one();
    let perm_images: Vec<NcPoly> = sigma.iter().map(|&s| a.var(s)).collect();
    let mut plan = Vec::new();
    for r in b.extra_relations() {
        let mut terms = Vec::new();
        let mut last = 0;
        for (w, c) in r.terms() {
            let word = NcPoly::monomial(w.clone(), one.clone()).substitute(&perm_images);
            last = last.max(w.letters().iter().copied().max().unwrap_or(0));
            terms.push((c.clone(), w.letters().to_vec(), rs_a.normal_form(&word)?));
        }
        plan.push(Transported { last_letter: last, terms });
    }
    Ok(plan)
}

fn transported_vanishes(t: &Transported, scalars: &[Scalar]) -> bool {
    let mut acc: BTreeMap<&crate::freealg::Word, Scalar> = BTreeMap::new();
    for (c, letters, nf) in &t.terms {
        let factor = letters.iter().fold(c.clone(), |x, &l| &x * &scalars[l]);
        for (w, a) in nf.terms() {
            let e = acc.entry(w).or_insert_with(|| a.field().zero());
            *e = &*e + &(&factor * a);
        }
    }
    acc.values().all(Scalar::is_zero)
}

fn search_units(plan: &[Transported], units: &[Scalar], scalars: &mut Vec<Scalar>, n: usize) -> bool {
    let depth = scalars.len();
    if depth == n {
        return true;
    }
    for u in units {
        scalars.push(u.clone());
        let ok = plan.iter().filter(|t| t.last_letter == depth).all(|t| transported_vanishes(t, scalars));
        if ok && search_units(plan, units, scalars, n) {
            return true;
        }
        scalars.pop();
    }
    false
}

/// Decides graded isomorphism between skew quotients `A = k_p[x]/M`
/// (`p_ij != 1`, `M` in degrees `>= 3`) and `B = k_q[y]/N` (`N` in degrees
/// `>= 2`). A witness `y_i ↦ a_i x_σ(i)` must send every relation of `B`
/// into the ideal of `A`, and the Hilbert functions must agree up to
/// `truncation`.
pub fn skew_quotient_iso(a: &Presentation, b: &Presentation, truncation: u32, search: &ScalarSearch) -> Result<IsoVerdict> {
    check_skew_hypotheses(a, b)?;
    let n = a.num_gens();
    if n != b.num_gens() {
        return Ok(IsoVerdict::no(truncation));
    }
    let (pa, pb) = (a.skew().expect("checked"), b.skew().expect("checked"));
    let sigmas = perm_equiv_all(pa, pb);
    if sigmas.is_empty() {
        return Ok(IsoVerdict::no(truncation));
    }
    let rs_a = ReductionSystem::build(a, truncation)?;
    let rs_b = ReductionSystem::build(b, truncation)?;
    if rs_a.hilbert() != rs_b.hilbert() {
        return Ok(IsoVerdict::no(truncation));
    }
    let field = a.field();
    if let ScalarSearch::Exhaustive { budget } = search {
        let units = field.units()?;
        let per_sigma = (units.len() as u128).saturating_pow(n.saturating_sub(1) as u32);
        let required = per_sigma.saturating_mul(sigmas.len() as u128);
        if required > *budget {
            return Err(Error::BudgetExceeded { required, budget: *budget });
        }
    }
    for sigma in &sigmas {
        let plan = transport_plan(&rs_a, b, sigma)?;
        let found = match search {
            ScalarSearch::Exhaustive { .. } => {
                let units = field.units()?;
                let mut scalars = Vec::with_capacity(n);
                if n == 0 {
                    Some(scalars)
                } else {
                    scalars.push(field.one());
                    let ok = plan.iter().filter(|t| t.last_letter == 0).all(|t| transported_vanishes(t, &scalars));
                    (ok && search_units(&plan, &units, &mut scalars, n)).then_some(scalars)
                }
            }
            ScalarSearch::Candidates(tuples) => tuples
                .iter()
                .filter(|t| t.len() == n && t.iter().all(|s| !s.is_zero() && s.field() == field))
                .find(|t| plan.iter().all(|p| transported_vanishes(p, t)))
                .cloned(),
        };
        if let Some(scalars) = found {
            let change = ElementaryChange::new(sigma.clone(), scalars)?;
            debug_assert!(verify_elementary_witness(a, b, &change, truncation)?);
            return Ok(IsoVerdict { isomorphic: true, witness: Some(Witness::Elementary(change)), checked_degree: truncation });
        }
    }
    Ok(IsoVerdict::no(truncation))
}

/// Independent check of an elementary witness `y_i ↦ a_i x_σ(i)`:
/// every relation of `B` is substituted in the free algebra and reduced by
/// plain rewriting in `A`, and the Hilbert functions are compared.
pub fn verify_elementary_witness(a: &Presentation, b: &Presentation, change: &ElementaryChange, truncation: u32) -> Result<bool> {
    if change.sigma.len() != b.num_gens() || a.num_gens() != b.num_gens() {
        return Ok(false);
    }
    let rs_a = ReductionSystem::build(a, truncation)?;
    let rs_b = ReductionSystem::build(b, truncation)?;
    if rs_a.hilbert() != rs_b.hilbert() {
        return Ok(false);
    }
    let images = change.images(a);
    for r in b.relations() {
        let image = r.substitute(&images);
        if !rs_a.normal_form_by_rewriting(&image, RewriteStrategy::Rightmost)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Independent check of a linear witness `x_i ↦ Σ_j m_ij y_j`.
pub fn verify_linear_witness(a: &Presentation, b: &Presentation, m: &[Vec<Scalar>], truncation: u32) -> Result<bool> {
    let n = a.num_gens();
    if m.len() != n || m.iter().any(|r| r.len() != b.num_gens()) {
        return Ok(false);
    }
    if Matrix::new(a.field(), b.num_gens(), m.to_vec()).rank() != b.num_gens() {
        return Ok(false);
    }
    let rs_a = ReductionSystem::build(a, truncation)?;
    let rs_b = ReductionSystem::build(b, truncation)?;
    if rs_a.hilbert() != rs_b.hilbert() {
        return Ok(false);
    }
    let images: Vec<NcPoly> =
        m.iter().map(|row| row.iter().enumerate().fold(NcPoly::zero(), |acc, (j, c)| &acc + &b.var(j).scale(c))).collect();
    for r in a.relations() {
        if !rs_b.normal_form_by_rewriting(&r.substitute(&images), RewriteStrategy::Leftmost)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest number of matrices [`brute_force_graded_iso`] enumerates: all
/// `3 x 3` matrices over GF(3).
pub const BRUTE_FORCE_LIMIT: u128 = 19_683;

/// `φ(word)` for `φ(x_l) = Σ_j m_lj y_j`, as a homogeneous vector in `B`.
fn linear_image(rs_b: &ReductionSystem, m: &[Vec<Scalar>], letters: &[usize]) -> Vec<Scalar> {
    let field = rs_b.field();
    let mut v = alloc::vec![field.one()];
    let mut deg = 0;
    for &l in letters.iter().rev() {
        let mut next = alloc::vec![field.zero(); rs_b.dim(deg + 1)];
        for (j, c) in m[l].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let prod = rs_b.left_mul_gen(j, deg, &v).expect("within truncation");
            for (x, y) in next.iter_mut().zip(prod) {
                *x = &*x + &(c * &y);
            }
        }
        v = next;
        deg += 1;
    }
    v
}

/// Exhaustive graded isomorphism test over a prime field with at most
/// [`BRUTE_FORCE_LIMIT`] matrices `A_1 → B_1`: every invertible one is tried
/// in lexicographic order of its entries.
pub fn brute_force_graded_iso(a: &Presentation, b: &Presentation, truncation: u32) -> Result<IsoVerdict> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let field = a.field();
    let q = field.order().ok_or(Error::InfiniteField)?;
    if !a.gens().all_degree_one() || !b.gens().all_degree_one() {
        return Err(Error::HypothesisViolated("generators must have degree 1".into()));
    }
    let rs_a = ReductionSystem::build(a, truncation)?;
    let rs_b = ReductionSystem::build(b, truncation)?;
    if rs_a.hilbert() != rs_b.hilbert() {
        return Ok(IsoVerdict::no(truncation));
    }
    let n = a.num_gens();
    if rs_a.dim(1) != n || rs_b.dim(1) != b.num_gens() {
        return Err(Error::HypothesisViolated("relations of degree 1 are not supported".into()));
    }
    let required = (q as u128).saturating_pow((n * n) as u32);
    if required > BRUTE_FORCE_LIMIT {
        return Err(Error::BudgetExceeded { required, budget: BRUTE_FORCE_LIMIT });
    }
    let elements = field.elements()?;
    for code in 0..required {
        let mut rest = code;
        let mut entries = alloc::vec![field.zero(); n * n];
        for e in entries.iter_mut().rev() {
            *e = elements[(rest % q as u128) as usize].clone();
            rest /= q as u128;
        }
        let m: Vec<Vec<Scalar>> = entries.chunks(n).map(<[Scalar]>::to_vec).collect();
        if Matrix::new(field, n, m.clone()).rank() != n {
            continue;
        }
        let transports = a.relations().iter().all(|r| {
            let d = r.max_degree().expect("nonzero relation");
            let mut acc = alloc::vec![field.zero(); rs_b.dim(d)];
            for (w, c) in r.terms() {
                for (x, y) in acc.iter_mut().zip(linear_image(&rs_b, &m, w.letters())) {
                    *x = &*x + &(c * &y);
                }
            }
            acc.iter().all(Scalar::is_zero)
        });
        if transports {
            return Ok(IsoVerdict { isomorphic: true, witness: Some(Witness::Linear(m)), checked_degree: truncation });
        }
    }
    Ok(IsoVerdict::no(truncation))
}
