//! Cancellation of central polynomial variables: adjoin central
//! generators, recover the degree-one center, and divide it out again.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::freealg::NcPoly;
use crate::groebner::ReductionSystem;
use crate::invariants::central_elements;
use crate::linalg::Subspace;
use crate::presentation::Presentation;

/// `Z(A) ∩ A_1`, computed in the truncation of `rs` (which must be at
/// least 2).
pub fn degree_one_center_check(rs: &ReductionSystem) -> Result<Subspace> {
    central_elements(rs, 1)
}

/// Forms `C = A[t_1, ..., t_n]`, recomputes `Z(C) ∩ C_1` and returns `C`
/// modulo that subspace. Requires `A` generated in degree one with
/// `Z(A) ∩ A_1 = 0`, both checked up to `truncation`.
pub fn cancel(a: &Presentation, n: usize, truncation: u32) -> Result<Presentation> {
    let rs = ReductionSystem::build(a, truncation)?;
    if !rs.is_generated_in_degree_one() || !a.gens().all_degree_one() {
        return Err(Error::HypothesisViolated("algebra is not generated in degree 1".into()));
    }
    if !degree_one_center_check(&rs)?.is_zero() {
        return Err(Error::HypothesisViolated("the center meets degree 1".into()));
    }
    if n == 0 {
        return Ok(a.clone());
    }
    let c = a.adjoin_central(n)?;
    let rc = ReductionSystem::build(&c, truncation)?;
    let center = degree_one_center_check(&rc)?;
    let elems: Vec<NcPoly> = center.basis().iter().map(|v| rc.poly_from_homogeneous(1, v)).collect();
    c.eliminate_degree_one(&elems)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::graded_fingerprint;
    use crate::presentation::SkewMatrix;
    use crate::scalars::FieldSpec;

    fn skew2(q: i64) -> Presentation {
        let f = FieldSpec::prime(7).unwrap();
        Presentation::skew_ring_standard(&SkewMatrix::uniform(f, 2, &f.from_i64(q)).unwrap()).unwrap()
    }

    #[test]
    fn center_of_examples() {
        let a = skew2(-1);
        assert!(degree_one_center_check(&ReductionSystem::build(&a, 3).unwrap()).unwrap().is_zero());
        let comm = skew2(1);
        assert_eq!(degree_one_center_check(&ReductionSystem::build(&comm, 3).unwrap()).unwrap().dim(), 2);
        let c = a.adjoin_central(1).unwrap();
        let rc = ReductionSystem::build(&c, 3).unwrap();
        let z = degree_one_center_check(&rc).unwrap();
        let t = rc.homogeneous_vector(&c.var(2), 1).unwrap();
        assert_eq!(z, Subspace::span(c.field(), 3, alloc::vec![t]));
    }

    #[test]
    fn cancel_recovers_the_algebra() {
        let a = skew2(-1);
        let back = cancel(&a, 1, 4).unwrap();
        let ra = ReductionSystem::build(&a, 4).unwrap();
        let rb = ReductionSystem::build(&back, 4).unwrap();
        assert_eq!(rb.hilbert(), alloc::vec![1, 2, 3, 4, 5]);
        assert_eq!(graded_fingerprint(&ra, 1000).unwrap(), graded_fingerprint(&rb, 1000).unwrap());
        assert_eq!(back, a);
        assert_eq!(cancel(&a, 0, 4).unwrap(), a);
        assert!(matches!(cancel(&skew2(1), 1, 4), Err(Error::HypothesisViolated(_))));
    }
}
