use lsakit::instances::*;
use lsakit::multivector::*;
use lsakit::{parse_poly, Anchored, Ring, Section};
use proptest::prelude::*;

fn wedge(a: &lsakit::LSAlgebroid, idx: &[usize], f: &str) -> Multivector {
    Multivector::wedge_of(a.ring(), a.rank(), idx, parse_poly(f, a.ring()).unwrap()).unwrap()
}

#[test]
fn wedge_basics() {
    let a = flat_connection();
    let e1 = wedge(&a, &[0], "1");
    let e2 = wedge(&a, &[1], "1");
    assert!(e1.wedge(&e1).unwrap().is_zero());
    assert!(e1
        .wedge(&e2)
        .unwrap()
        .add(&e2.wedge(&e1).unwrap())
        .is_zero());
    let fe1 = wedge(&a, &[0], "x");
    let ge2 = wedge(&a, &[1], "y^2");
    assert_eq!(fe1.wedge(&ge2).unwrap(), wedge(&a, &[0, 1], "x*y^2"));
    assert_eq!(wedge(&a, &[1, 0], "1"), wedge(&a, &[0, 1], "-1"));
}

#[test]
fn dot_with_functions() {
    let a = flat_connection();
    let x = wedge(&a, &[0], "y");
    let f = Multivector::function(parse_poly("x^2*y", a.ring()).unwrap(), 2);
    // (y e1)·f = y ∂x(x²y) = 2x y².
    assert_eq!(
        dot_s(&a, &x, &f).unwrap(),
        Multivector::function(parse_poly("2*x*y^2", a.ring()).unwrap(), 2)
    );
    assert!(dot_s(&a, &f, &x).unwrap().is_zero());
    assert!(dot_s(&a, &f, &f).unwrap().is_zero());
    // [x, f]_S = a(x)(f).
    assert_eq!(bracket_s(&a, &x, &f).unwrap(), dot_s(&a, &x, &f).unwrap());
}

#[test]
fn dot_on_sections_is_section_mult() {
    let a = kernel_ideal();
    let s = Section::new(
        a.ring(),
        vec![
            parse_poly("x + 1", a.ring()).unwrap(),
            parse_poly("x^2", a.ring()).unwrap(),
        ],
    )
    .unwrap();
    let t = Section::new(
        a.ring(),
        vec![
            parse_poly("3", a.ring()).unwrap(),
            parse_poly("x^3 - x", a.ring()).unwrap(),
        ],
    )
    .unwrap();
    let lhs = dot_s(
        &a,
        &Multivector::from_section(&s),
        &Multivector::from_section(&t),
    )
    .unwrap();
    assert_eq!(lhs, Multivector::from_section(&a.mult(&s, &t)));
    let br = bracket_s(
        &a,
        &Multivector::from_section(&s),
        &Multivector::from_section(&t),
    )
    .unwrap();
    assert_eq!(
        br,
        Multivector::from_section(&a.commutator_algebroid().bracket(&s, &t))
    );
}

#[test]
fn zero_algebra_products_vanish() {
    let a = zero_algebra(3);
    for x in basis_wedges(a.ring(), 3, 1, 3) {
        for y in basis_wedges(a.ring(), 3, 1, 3) {
            assert!(dot_s(&a, &x, &y).unwrap().is_zero());
        }
    }
}

#[test]
fn point_algebra_double_sum() {
    // (e1∧e2)·e2 = (−1)^{1+1}(e1·e2)∧e2 + (−1)^{2+1}(e2·e2)∧e1 = e2∧e2 − 0 = 0.
    let a = point_e1e2();
    assert!(dot_s(&a, &wedge(&a, &[0, 1], "1"), &wedge(&a, &[1], "1"))
        .unwrap()
        .is_zero());
    // e1·(e1∧e2) = (e1·e1)∧e2 − (e1·e2)∧e1 = −e2∧e1 = e1∧e2.
    assert_eq!(
        dot_s(&a, &wedge(&a, &[0], "1"), &wedge(&a, &[0, 1], "1")).unwrap(),
        wedge(&a, &[0, 1], "1")
    );
}

#[test]
fn rule_d_on_grade_one_left_factor() {
    // x·(y∧z) = (x·y)∧z + y∧(x·z) for |x| = 1, checked on the flat connection
    // with polynomial coefficients.
    let a = flat_connection();
    let x = wedge(&a, &[0], "x*y");
    let y = wedge(&a, &[1], "x^2");
    let z = wedge(&a, &[0], "y + 1");
    let lhs = dot_s(&a, &x, &y.wedge(&z).unwrap()).unwrap();
    let rhs = dot_s(&a, &x, &y)
        .unwrap()
        .wedge(&z)
        .unwrap()
        .add(&y.wedge(&dot_s(&a, &x, &z).unwrap()).unwrap());
    assert_eq!(lhs, rhs);
}

#[test]
fn even_shifted_self_bracket_vanishes() {
    let a = point_e1e2();
    let x = wedge(&a, &[0], "1").add(&wedge(&a, &[1], "3"));
    assert!(bracket_s(&a, &x, &x).unwrap().is_zero());
}

#[test]
fn graded_properties_hold_on_corpus() {
    for (name, a) in valid_corpus() {
        let report = check_graded_properties(&a, &SampleSpec::default());
        assert!(report.passed(), "{name}: {}", report.failure_summary());
    }
}

#[test]
fn grade_zero_triples() {
    // Functions, with σ = −1, satisfy the same identities.
    let spec = SampleSpec {
        min_grade: 0,
        ..SampleSpec::default()
    };
    for a in [flat_connection(), kernel_ideal(), point_e1e2()] {
        let report = check_graded_properties(&a, &spec);
        assert!(report.passed(), "{}", report.failure_summary());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn grade_rule(i in 1usize..=2, j in 1usize..=2, seed in 0u64..1000) {
        let a = flat_connection();
        let ring: &Ring = a.ring();
        let mut rng = lsakit::random::seeded(seed);
        let xs = basis_wedges(ring, 2, i, i);
        let ys = basis_wedges(ring, 2, j, j);
        let f = lsakit::random::random_poly(&mut rng, ring, 2, 3);
        let g = lsakit::random::random_poly(&mut rng, ring, 2, 3);
        for x in &xs {
            for y in &ys {
                let p = dot_s(&a, &x.scale(&f), &y.scale(&g)).unwrap();
                if !p.is_zero() {
                    prop_assert_eq!(p.grade(), Some(i + j - 1));
                }
            }
        }
    }

    #[test]
    fn wedge_graded_commutative(seed in 0u64..1000) {
        let a = zero_algebra(4);
        let ws = basis_wedges(a.ring(), 4, 0, 4);
        let x = &ws[(seed as usize) % ws.len()];
        let y = &ws[(seed as usize / 7) % ws.len()];
        let (gx, gy) = (x.grade().unwrap(), y.grade().unwrap());
        let xy = x.wedge(y).unwrap();
        let yx = y.wedge(x).unwrap();
        if (gx * gy) % 2 == 0 { prop_assert_eq!(xy, yx); } else { prop_assert_eq!(xy, yx.neg()); }
    }

    #[test]
    fn wedge_associative(s in 0u64..1000) {
        let a = zero_algebra(4);
        let ws = basis_wedges(a.ring(), 4, 0, 4);
        let n = ws.len();
        let (x, y, z) = (&ws[(s as usize) % n], &ws[(s as usize / 3) % n], &ws[(s as usize / 11) % n]);
        prop_assert_eq!(x.wedge(y).unwrap().wedge(z).unwrap(), x.wedge(&y.wedge(z).unwrap()).unwrap());
    }
}
