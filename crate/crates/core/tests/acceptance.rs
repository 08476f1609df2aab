//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line
//! with its runtime; the test fails if any criterion fails.

use std::time::{Duration, Instant};

use gradalg_core::brackets::bracket_decompose;
use gradalg_core::center::{cancel, degree_one_center_check};
use gradalg_core::freealg::{GeneratorSet, NcPoly};
use gradalg_core::groebner::{BoundedIdeal, ReductionSystem};
use gradalg_core::invariants::{
    character_check, characters_enumerate, cotangent_dimension, graded_fingerprint, j_s, normal_lines_degree_one,
    unique_codim1_of_tangent_d, Character,
};
use gradalg_core::iso::{
    apply_elementary_change, brute_force_graded_iso, perm_equiv, perm_equiv_all, skew_quotient_iso, verify_elementary_witness,
    verify_linear_witness, ElementaryChange, ScalarSearch, Witness,
};
use gradalg_core::linalg::Subspace;
use gradalg_core::presentation::{Presentation, SkewMatrix};
use gradalg_core::scalars::{FieldSpec, Scalar};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn skew_uniform(field: FieldSpec, n: usize, q: i64) -> Presentation {
    Presentation::skew_ring_standard(&SkewMatrix::uniform(field, n, &field.from_i64(q)).unwrap()).unwrap()
}

fn skew_upper(field: FieldSpec, n: usize, entries: &[i64]) -> Presentation {
    let mut upper = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            upper.push((i, j, field.from_i64(entries[k])));
            k += 1;
        }
    }
    Presentation::skew_ring_standard(&SkewMatrix::from_upper(field, n, &upper).unwrap()).unwrap()
}

fn random_unit(field: FieldSpec, rng: &mut StdRng, avoid_one: bool) -> Scalar {
    let p = field.order().unwrap() as i64;
    let lo = if avoid_one { 2 } else { 1 };
    field.from_i64(rng.gen_range(lo..p))
}

fn random_skew_matrix(field: FieldSpec, n: usize, rng: &mut StdRng, avoid_one: bool) -> SkewMatrix {
    let mut upper = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            upper.push((i, j, random_unit(field, rng, avoid_one)));
        }
    }
    SkewMatrix::from_upper(field, n, &upper).unwrap()
}

fn random_homogeneous(gens: &GeneratorSet, field: FieldSpec, degree: usize, terms: usize, rng: &mut StdRng) -> NcPoly {
    let p = field.order().unwrap() as i64;
    let mut f = NcPoly::zero();
    for _ in 0..terms {
        let letters: Vec<usize> = (0..degree).map(|_| rng.gen_range(0..gens.len())).collect();
        f.add_term(gens.word(&letters).unwrap(), field.from_i64(rng.gen_range(1..p)));
    }
    f
}

fn random_change(field: FieldSpec, n: usize, rng: &mut StdRng) -> ElementaryChange {
    let mut sigma: Vec<usize> = (0..n).collect();
    sigma.shuffle(rng);
    let scalars = (0..n).map(|_| random_unit(field, rng, false)).collect();
    ElementaryChange::new(sigma, scalars).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

fn exhaustive_perm_equiv(p: &SkewMatrix, q: &SkewMatrix) -> Vec<Vec<usize>> {
    if p.size() != q.size() {
        return Vec::new();
    }
    let n = p.size();
    permutations(n).into_iter().filter(|s| (0..n).all(|i| (0..n).all(|j| q.get(i, j) == p.get(s[i], s[j])))).collect()
}

/// Homogeneous parts and strata agree in every degree up to `up_to`.
fn degreewise_equal(a: &BoundedIdeal, b: &BoundedIdeal, up_to: u32) -> bool {
    a.agrees_up_to(b, up_to) && (0..=up_to).all(|d| a.homogeneous_part(d) == b.homogeneous_part(d))
}

/// Positive isomorphism verdicts collected for the Hilbert-function check.
struct Positives(Vec<(Presentation, Presentation, u32)>);

fn criterion_1() -> Outcome {
    let f = gf(5);
    let a = skew_upper(f, 3, &[2, 3, 4]);
    let mut scanned = Vec::new();
    for x in 0..5 {
        for y in 0..5 {
            for z in 0..5 {
                let point = vec![f.from_i64(x), f.from_i64(y), f.from_i64(z)];
                if character_check(&a, &point).unwrap() {
                    scanned.push(point);
                }
            }
        }
    }
    let chars = characters_enumerate(&a).map_err(|e| e.to_string())?;
    let listed: Vec<Vec<Scalar>> = chars.iter().map(|c| c.point().to_vec()).collect();
    ensure(listed == scanned, || format!("enumeration {} vs scan {}", listed.len(), scanned.len()))?;
    ensure(scanned.len() == 13, || format!("expected 13 axis characters, got {}", scanned.len()))?;
    for c in &chars {
        let s = cotangent_dimension(&a, c.point()).unwrap();
        ensure(s <= 3, || format!("cotangent {s} at {:?}", c.point()))?;
    }
    let rs = ReductionSystem::build(&a, 5).unwrap();
    let j4 = j_s(&rs, 4).unwrap();
    ensure(j4 == rs.whole_algebra(), || "J_4 is not the whole algebra".into())
}

fn criterion_2() -> Outcome {
    let f = gf(5);
    let a = skew_upper(f, 3, &[2, 3, 4]);
    let rs = ReductionSystem::build(&a, 5).unwrap();
    let j3 = j_s(&rs, 3).unwrap();
    let aug = rs.augmentation_ideal();
    ensure(degreewise_equal(&j3, &aug, 4), || "J_3 differs from the augmentation ideal".into())
}

fn criterion_3() -> Outcome {
    let f = gf(101);
    let d = 4;
    let a = skew_uniform(f, 2, 3);
    let at = a.adjoin_central(1).unwrap();
    let rs_a = ReductionSystem::build(&a, d).unwrap();
    let rs_t = ReductionSystem::build(&at, d).unwrap();
    let t = at.var(2);
    for point in [[0, 0], [1, 0], [0, 57]] {
        let c = Character::new(&a, point.iter().map(|&x| f.from_i64(x)).collect()).unwrap();
        let base = c.ideal_generators(&a);
        let extended = rs_t.ideal_closure(&base).unwrap();
        let mut inter: Option<BoundedIdeal> = None;
        for alpha in f.elements().unwrap() {
            let mut gens = base.clone();
            gens.push(&t - &NcPoly::constant(alpha));
            let ideal = rs_t.ideal_closure(&gens).unwrap();
            inter = Some(match inter {
                None => ideal,
                Some(acc) => acc.intersection(&ideal).unwrap(),
            });
        }
        let inter = inter.unwrap();
        ensure(degreewise_equal(&inter, &extended, d - 1), || format!("intersection differs from I[t] at {point:?}"))?;
    }
    let s = 2;
    let lhs = j_s(&rs_t, s + 1).unwrap();
    let js = j_s(&rs_a, s).unwrap();
    let lifted: Vec<NcPoly> = js.subspace().basis().iter().map(|v| rs_a.from_filtered(v)).collect();
    let rhs = rs_t.ideal_closure(&lifted).unwrap();
    ensure(degreewise_equal(&lhs, &rhs, d - 1), || "J_3(A[t]) differs from J_2(A)[t]".into())
}

fn criterion_4() -> Outcome {
    let f = gf(7);
    for a in [skew_uniform(f, 2, 3), skew_upper(f, 3, &[2, 3, 4])] {
        let rs = ReductionSystem::build(&a, 3).unwrap();
        ensure(unique_codim1_of_tangent_d(&rs).unwrap(), || format!("not unique for {} generators", a.num_gens()))?;
    }
    let comm = skew_uniform(f, 2, 1);
    let free = Presentation::free(f, GeneratorSet::standard(2));
    for a in [comm, free] {
        let rs = ReductionSystem::build(&a, 3).unwrap();
        ensure(!unique_codim1_of_tangent_d(&rs).unwrap(), || "unexpected uniqueness".into())?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let f = gf(5);
    let a = skew_uniform(f, 2, 2);
    let b0 = skew_upper(f, 3, &[2, 3, 4]);
    let cubic = &(&(&b0.var(0) * &b0.var(1)) * &b0.var(2)) + &(&(&b0.var(1) * &b0.var(1)) * &b0.var(1)).scale(&f.from_i64(2));
    let b = b0.quotient(vec![cubic]).unwrap();
    for alg in [a, b] {
        let rs = ReductionSystem::build(&alg, 4).unwrap();
        let lines = normal_lines_degree_one(&rs, 4, 1_000).unwrap();
        let coords: Vec<NcPoly> = (0..alg.num_gens()).map(|i| alg.var(i)).collect();
        ensure(lines == coords, || format!("normal lines {:?}", lines.iter().map(|l| l.to_text(alg.gens())).collect::<Vec<_>>()))?;
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let f = gf(7);
    let mut rng = StdRng::seed_from_u64(6);
    for trial in 0..1000 {
        let n = rng.gen_range(2..=4);
        let gens = GeneratorSet::standard(n);
        let m = rng.gen_range(1..=6);
        let terms = rng.gen_range(1..=6);
        let r = random_homogeneous(&gens, f, m, terms, &mut rng);
        let d = rng.gen_range(0..n);
        let dec = bracket_decompose(&gens, &r, d).map_err(|e| format!("trial {trial}: {e}"))?;
        let back = dec.expand(&gens, f).unwrap();
        ensure(back == r, || format!("trial {trial}: round trip failed for {}", r.to_text(&gens)))?;
        ensure(dec.degrees_consistent(), || format!("trial {trial}: degree bookkeeping failed"))?;
        if !r.is_zero() {
            ensure(dec.degree() == m as u32, || format!("trial {trial}: wrong degree"))?;
        }
    }
    Ok(())
}

fn criterion_7(pos: &mut Positives) -> Outcome {
    let f = gf(7);
    let mut rng = StdRng::seed_from_u64(7);
    for trial in 0..100 {
        let n = rng.gen_range(2..=3);
        let base = Presentation::skew_ring_standard(&random_skew_matrix(f, n, &mut rng, true)).unwrap();
        let extra_count = rng.gen_range(0..=2);
        let extras = (0..extra_count).map(|_| random_homogeneous(base.gens(), f, 3, rng.gen_range(1..=4), &mut rng)).collect();
        let a = base.quotient(extras).unwrap();
        let change = random_change(f, n, &mut rng);
        let b = apply_elementary_change(&a, &change).unwrap();
        let d = 4;
        let v = skew_quotient_iso(&a, &b, d, &ScalarSearch::Exhaustive { budget: 10_000 }).map_err(|e| format!("trial {trial}: {e}"))?;
        ensure(v.isomorphic, || format!("trial {trial}: not isomorphic"))?;
        let Some(Witness::Elementary(w)) = &v.witness else { return Err(format!("trial {trial}: no witness")) };
        ensure(verify_elementary_witness(&a, &b, w, d).unwrap(), || format!("trial {trial}: witness rejected"))?;
        pos.0.push((a, b, d));
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let q = FieldSpec::Rationals;
    let a = skew_uniform(q, 2, 2);
    let b = skew_uniform(q, 2, 3);
    let v = skew_quotient_iso(&a, &b, 4, &ScalarSearch::default_for(q, 2, 1_000)).unwrap();
    ensure(!v.isomorphic, || "k_2 and k_3 reported isomorphic".into())?;

    let f = gf(7);
    let mut rng = StdRng::seed_from_u64(8);
    let mut negatives = 0;
    for trial in 0..200 {
        let n = rng.gen_range(1..=4);
        let p = random_skew_matrix(f, n, &mut rng, false);
        let q = if rng.gen_bool(0.5) {
            let mut s: Vec<usize> = (0..n).collect();
            s.shuffle(&mut rng);
            p.permuted(&s)
        } else {
            random_skew_matrix(f, n, &mut rng, false)
        };
        let fast = perm_equiv_all(&p, &q);
        let slow = exhaustive_perm_equiv(&p, &q);
        ensure(fast == slow, || format!("trial {trial}: backtracking {fast:?} vs exhaustive {slow:?}"))?;
        ensure(perm_equiv(&p, &q) == slow.first().cloned(), || format!("trial {trial}: first solution differs"))?;
        if slow.is_empty() && p.all_off_diagonal_nontrivial() && n >= 2 {
            let a = Presentation::skew_ring_standard(&p).unwrap();
            let b = Presentation::skew_ring_standard(&q).unwrap();
            let v = skew_quotient_iso(&a, &b, 3, &ScalarSearch::Exhaustive { budget: 100_000 }).unwrap();
            ensure(!v.isomorphic, || format!("trial {trial}: non-equivalent matrices reported isomorphic"))?;
            negatives += 1;
        }
    }
    ensure(negatives >= 20, || format!("only {negatives} negative iso instances exercised"))
}

fn example_pair(field: FieldSpec, x_deg: u32, y_deg: u32) -> Presentation {
    let gx = GeneratorSet::new(["x1", "x2"], [x_deg, x_deg]).unwrap();
    let gy = GeneratorSet::new(["y1", "y2"], [y_deg, y_deg]).unwrap();
    let x = Presentation::skew_ring(&SkewMatrix::uniform(field, 2, &field.from_i64(-1)).unwrap(), gx).unwrap();
    let y = Presentation::skew_ring(&SkewMatrix::uniform(field, 2, &field.one()).unwrap(), gy).unwrap();
    x.tensor(&y).unwrap()
}

/// Coefficients of `(1-t)^-2 (1-t^2)^-2` by power-series multiplication.
fn example_series(len: usize) -> Vec<usize> {
    let mul = |a: &[usize], b: &[usize]| -> Vec<usize> { (0..len).map(|n| (0..=n).map(|i| a[i] * b[n - i]).sum()).collect() };
    let g1 = vec![1; len];
    let g2: Vec<usize> = (0..len).map(|i| usize::from(i % 2 == 0)).collect();
    mul(&mul(&g1, &g1), &mul(&g2, &g2))
}

fn criterion_9() -> Outcome {
    let f = gf(7);
    let a = example_pair(f, 1, 2);
    let b = example_pair(f, 2, 1);
    let ra = ReductionSystem::build(&a, 4).unwrap();
    let rb = ReductionSystem::build(&b, 4).unwrap();
    let series = example_series(5);
    ensure(series == vec![1, 2, 5, 8, 14], || format!("series oracle {series:?}"))?;
    ensure(ra.hilbert() == series && rb.hilbert() == series, || format!("{:?} / {:?}", ra.hilbert(), rb.hilbert()))?;
    let fa = graded_fingerprint(&ra, 100_000).unwrap();
    let fb = graded_fingerprint(&rb, 100_000).unwrap();
    ensure(fa.commutator_dims[0] == 1 && fb.commutator_dims[0] == 0, || {
        format!("commutator dims {:?} / {:?}", fa.commutator_dims, fb.commutator_dims)
    })?;
    ensure(fa != fb, || "fingerprints agree".into())?;
    ensure(!ra.is_generated_in_degree_one() && !rb.is_generated_in_degree_one(), || "generated in degree 1".into())
}

fn criterion_10() -> Outcome {
    let f = gf(7);
    let a = skew_uniform(f, 2, -1);
    let ra = ReductionSystem::build(&a, 5).unwrap();
    ensure(degree_one_center_check(&ra).unwrap().is_zero(), || "center meets degree 1".into())?;
    let c = a.adjoin_central(2).unwrap();
    let rc = ReductionSystem::build(&c, 5).unwrap();
    let z = degree_one_center_check(&rc).unwrap();
    let ts: Vec<Vec<Scalar>> = (2..4).map(|i| rc.homogeneous_vector(&c.var(i), 1).unwrap()).collect();
    ensure(z == Subspace::span(f, 4, ts), || format!("degree-one center of dimension {}", z.dim()))?;
    let back = cancel(&a, 2, 5).map_err(|e| e.to_string())?;
    let rb = ReductionSystem::build(&back, 5).unwrap();
    let fa = graded_fingerprint(&ra, 100_000).unwrap();
    let fb = graded_fingerprint(&rb, 100_000).unwrap();
    ensure(fa == fb, || format!("{fa:?} vs {fb:?}"))
}

fn criterion_11(pos: &mut Positives) -> Outcome {
    let f = gf(3);
    let mut rng = StdRng::seed_from_u64(11);
    let d = 4;
    let mut agreements = (0, 0);
    for trial in 0..50 {
        let n = rng.gen_range(1..=2);
        let base = Presentation::skew_ring_standard(&SkewMatrix::uniform(f, n, &f.from_i64(2)).unwrap()).unwrap();
        let extras = if rng.gen_bool(0.5) { vec![random_homogeneous(base.gens(), f, 3, rng.gen_range(1..=3), &mut rng)] } else { vec![] };
        let a = base.quotient(extras).unwrap();
        let b = if rng.gen_bool(0.5) {
            apply_elementary_change(&a, &random_change(f, n, &mut rng)).unwrap()
        } else {
            let other = Presentation::skew_ring_standard(&random_skew_matrix(f, n, &mut rng, false)).unwrap();
            let extras = if rng.gen_bool(0.5) {
                let deg = rng.gen_range(2..=3);
                vec![random_homogeneous(other.gens(), f, deg, rng.gen_range(1..=3), &mut rng)]
            } else {
                vec![]
            };
            other.quotient(extras).unwrap()
        };
        let skew = skew_quotient_iso(&a, &b, d, &ScalarSearch::Exhaustive { budget: 10_000 }).map_err(|e| format!("trial {trial}: {e}"))?;
        let brute = brute_force_graded_iso(&a, &b, d).map_err(|e| format!("trial {trial}: {e}"))?;
        ensure(skew.isomorphic == brute.isomorphic, || {
            format!(
                "trial {trial}: skew {} vs brute force {} for {:?} / {:?}",
                skew.isomorphic,
                brute.isomorphic,
                a.relations().iter().map(|r| r.to_text(a.gens())).collect::<Vec<_>>(),
                b.relations().iter().map(|r| r.to_text(b.gens())).collect::<Vec<_>>()
            )
        })?;
        if let Some(Witness::Linear(m)) = &brute.witness {
            ensure(verify_linear_witness(&a, &b, m, d).unwrap(), || format!("trial {trial}: linear witness rejected"))?;
        }
        if skew.isomorphic {
            agreements.0 += 1;
            pos.0.push((a, b, d));
        } else {
            agreements.1 += 1;
        }
    }
    ensure(agreements.0 > 0 && agreements.1 > 0, || format!("one-sided sample: {agreements:?}"))
}

fn criterion_12(pos: &Positives) -> Outcome {
    ensure(!pos.0.is_empty(), || "no positive verdicts collected".into())?;
    for (k, (a, b, d)) in pos.0.iter().enumerate() {
        let ha = ReductionSystem::build(a, *d).unwrap().hilbert();
        let hb = ReductionSystem::build(b, *d).unwrap().hilbert();
        ensure(ha == hb, || format!("pair {k}: {ha:?} vs {hb:?}"))?;
    }
    Ok(())
}

fn run(results: &mut Vec<bool>, id: usize, name: &str, limit: Duration, check: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let timed = if limit.is_zero() { Ok(()) } else { ensure(elapsed <= limit, || format!("took {elapsed:?}, limit {limit:?}")) };
    let verdict = outcome.and(timed);
    match &verdict {
        Ok(()) => println!("criterion {id:>2} PASS {name} ({:.2?})", elapsed),
        Err(msg) => println!("criterion {id:>2} FAIL {name} ({:.2?}): {msg}", elapsed),
    }
    results.push(verdict.is_ok());
}

#[test]
fn acceptance() {
    let secs = Duration::from_secs;
    let mut results = Vec::new();
    let mut positives = Positives(Vec::new());
    run(&mut results, 1, "tangent dimension bounded by generator count", secs(10), criterion_1);
    run(&mut results, 2, "J_d is the augmentation ideal", secs(10), criterion_2);
    run(&mut results, 3, "polynomial extension shifts J_s", secs(60), criterion_3);
    run(&mut results, 4, "unique codimension-one ideal of tangent dimension d", secs(10), criterion_4);
    run(&mut results, 5, "normal lines are coordinate lines", secs(30), criterion_5);
    run(&mut results, 6, "bracket decomposition round trip", secs(30), criterion_6);
    run(&mut results, 7, "elementary changes are recognised", secs(120), || criterion_7(&mut positives));
    run(&mut results, 8, "non-equivalent parameters are rejected", secs(30), criterion_8);
    run(&mut results, 9, "equal Hilbert series, different graded structure", secs(10), criterion_9);
    run(&mut results, 10, "central variables cancel", secs(30), criterion_10);
    let mut more = Positives(Vec::new());
    run(&mut results, 11, "brute force agrees with the skew test", secs(120), || criterion_11(&mut more));
    positives.0.extend(more.0);
    run(&mut results, 12, "isomorphic pairs have equal Hilbert functions", Duration::ZERO, || criterion_12(&positives));
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("{passed}/{} criteria passed", results.len());
    assert_eq!(passed, results.len());
}
