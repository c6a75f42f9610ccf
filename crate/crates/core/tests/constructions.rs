mod common;

use common::*;
use lsakit::constructions::*;
use lsakit::instances::*;
use lsakit::{
    rat, Anchored, Error, LSAlgebroid, Poly, PolyMatrix, Representation, Ring, Section, Status,
    VectorField,
};
use num_traits::Zero;

fn mat(ring: &Ring, rows: &[&[i64]]) -> PolyMatrix {
    PolyMatrix::from_rows(
        ring,
        rows.iter()
            .map(|r| r.iter().map(|&v| Poly::from_int(ring, v)).collect())
            .collect(),
    )
    .unwrap()
}

fn lsa_from_table(t: &Table) -> LSAlgebroid {
    let ring = Ring::point();
    let r = t.len();
    let products = t
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| Section::from_rationals(&ring, v))
                .collect()
        })
        .collect();
    LSAlgebroid::new(&ring, products, vec![VectorField::zero(&ring); r]).unwrap()
}

#[test]
fn zero_rep_on_abelian_is_representation() {
    let ring = Ring::point();
    let l = lsakit::LieAlgebroid::abelian(&ring, 2);
    assert!(check_representation_lie(&l, &Representation::trivial(&ring, 2, 3)).unwrap());
}

#[test]
fn left_mult_rep_represents_sub_adjacent() {
    for (name, a) in valid_corpus() {
        let rep = a.build_left_mult_rep().unwrap();
        assert!(
            check_representation_lie(&a.commutator_algebroid(), &rep).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn noncommuting_matrices_on_abelian_fail() {
    let ring = Ring::point();
    let l = lsakit::LieAlgebroid::abelian(&ring, 2);
    let rep = Representation::lie(
        &ring,
        2,
        vec![
            mat(&ring, &[&[0, 1], &[0, 0]]),
            mat(&ring, &[&[0, 0], &[1, 0]]),
        ],
    )
    .unwrap();
    // [E12, E21] = diag(1, -1) ≠ 0 = ρ([e1,e2]).
    let comm = mat_mul(
        &[vec![q(0), q(1)], vec![q(0), q(0)]],
        &[vec![q(0), q(0)], vec![q(1), q(0)]],
    );
    assert_ne!(comm, vec![vec![q(0), q(0)], vec![q(0), q(0)]]);
    assert!(!check_representation_lie(&l, &rep).unwrap());
}

#[test]
fn dual_rep_is_negative_transpose() {
    let a = point_e1e2();
    let g = a.commutator_algebroid();
    let rep = a.build_left_mult_rep().unwrap();
    assert_eq!(rep.rho_mat(0), &mat(a.ring(), &[&[0, 0], &[0, 1]]));
    let dual = dual_rep(&g, &rep).unwrap();
    assert_eq!(dual.rho_mat(0), &mat(a.ring(), &[&[0, 0], &[0, -1]]));
    assert_eq!(dual.dual().rho_mats(), rep.rho_mats());
    let zero = Representation::trivial(a.ring(), 2, 2);
    assert!(dual_rep(&g, &zero)
        .unwrap()
        .rho_mats()
        .iter()
        .all(PolyMatrix::is_zero));
}

#[test]
fn dual_pairing_identity_on_flat_connection() {
    // ⟨ρ*(x)ξ, y⟩ = a(x)⟨ξ, y⟩ − ⟨ξ, ρ(x)y⟩ on frame/coframe pairs with
    // polynomial coefficients.
    let a = flat_connection();
    let ring = a.ring().clone();
    let rep = a.build_left_mult_rep().unwrap();
    let dual = dual_rep(&a.commutator_algebroid(), &rep).unwrap();
    let f = lsakit::parse_poly("x^2*y + 3", &ring).unwrap();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                let xi = Section::basis(&ring, 2, j).scale(&f);
                let y = Section::basis(&ring, 2, k).scale(&f);
                let pair = |u: &Section, v: &Section| -> Poly {
                    u.comps()
                        .iter()
                        .zip(v.comps())
                        .fold(Poly::zero(&ring), |acc, (p, q)| acc + p * q)
                };
                let x = a.basis(i);
                let lhs = pair(&dual.act_rho(&a, &x, &xi), &y);
                let rhs = a.anchor_apply(&x, &pair(&xi, &y)) - pair(&xi, &rep.act_rho(&a, &x, &y));
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn mu_zero_gives_lsa_representation() {
    for (name, a) in valid_corpus() {
        let l = a.build_left_mult_rep().unwrap();
        assert!(check_representation_lsa(&a, &l).unwrap(), "{name}");
    }
}

#[test]
fn left_right_on_point_algebra_matches_brute_force() {
    // e1·e1 = e1, e1·e2 = e2.
    let t = table(2, &[(0, 0, &[1, 0]), (0, 1, &[0, 1])]);
    let a = lsa_from_table(&t);
    assert!(a.is_left_symmetric());
    let r = 2;
    let mut oracle = true;
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let (x, y, z) = (unit(r, i), unit(r, j), unit(r, k));
                // ρ(x)μ(y)z − μ(y)ρ(x)z = μ(x·y)z − μ(y)μ(x)z with ρ = L, μ = R.
                let lhs = sub(
                    &mul(&t, &x, &mul(&t, &z, &y)),
                    &mul(&t, &mul(&t, &x, &z), &y),
                );
                let rhs = sub(
                    &mul(&t, &z, &mul(&t, &x, &y)),
                    &mul(&t, &mul(&t, &z, &x), &y),
                );
                oracle &= lhs == rhs;
            }
        }
    }
    assert_eq!(
        check_representation_lsa(&a, &left_right_candidate(&a)).unwrap(),
        oracle
    );
}

#[test]
fn left_right_fails_over_a_base() {
    let a = kernel_ideal();
    let report = representation_lsa_report(&a, &left_right_candidate(&a)).unwrap();
    assert!(!report.passed());
    assert!(report.failures().all(|r| !r.witnesses.is_empty()));
}

#[test]
fn derived_reps_with_zero_mu() {
    let a = flat_connection();
    let rep = a.build_left_mult_rep().unwrap();
    let d = derived_reps(&a, &rep).unwrap();
    assert_eq!(d.equivalences, [true, true, true]);
    assert_eq!(d.on_e.rho_mats(), rep.rho_mats());
    assert_eq!(d.on_dual.rho_mats(), rep.dual().rho_mats());
    assert!(d.on_dual.has_zero_mu());
    assert!(d.report.passed());
}

#[test]
fn derived_reps_noncommuting_mu_all_false() {
    // e1·e1 = e1, e1·e2 = e2 with (A; L, R): R(e1) = E11 and R(e2) = E21 do
    // not commute.
    let t = table(2, &[(0, 0, &[1, 0]), (0, 1, &[0, 1])]);
    let a = lsa_from_table(&t);
    let rep = left_right_candidate(&a);
    let r1: Vec<Vector> = (0..2)
        .map(|row| {
            (0..2)
                .map(|col| mul(&t, &unit(2, col), &unit(2, 0))[row].clone())
                .collect()
        })
        .collect();
    let r2: Vec<Vector> = (0..2)
        .map(|row| {
            (0..2)
                .map(|col| mul(&t, &unit(2, col), &unit(2, 1))[row].clone())
                .collect()
        })
        .collect();
    assert_ne!(mat_mul(&r1, &r2), mat_mul(&r2, &r1));
    let d = derived_reps(&a, &rep).unwrap();
    assert_eq!(d.equivalences, [false, false, false]);
    assert!(d.report.find("dual-equivalence").unwrap().passed());

    // On the zero algebra with ρ = 0, compatibility forces μ(e_j)μ(e_i) = 0.
    let z = zero_algebra(2);
    let ring = z.ring().clone();
    let m1 = mat(&ring, &[&[0, 1], &[0, 0]]);
    let m2 = mat(&ring, &[&[0, 0], &[1, 0]]);
    let zero = PolyMatrix::zero(&ring, 2, 2);
    let ok = Representation::new(
        &ring,
        2,
        2,
        vec![zero.clone(), zero.clone()],
        vec![m1.clone(), zero.clone()],
    )
    .unwrap();
    assert_eq!(
        derived_reps(&z, &ok).unwrap().equivalences,
        [true, true, true]
    );
    let bad = Representation::new(&ring, 2, 2, vec![zero.clone(), zero], vec![m1, m2]).unwrap();
    assert!(matches!(
        derived_reps(&z, &bad),
        Err(Error::NotARepresentation(_))
    ));
}

#[test]
fn action_algebroid_examples() {
    let ring = Ring::new(&["x"]).unwrap();
    let g = unit_algebra();
    let xdx = VectorField::new(&ring, vec![Poly::var(&ring, 0)]).unwrap();
    let a = action_algebroid(&g, std::slice::from_ref(&xdx), &ring).unwrap();
    assert!(a.is_left_symmetric());
    assert_eq!(a.product(0, 0), &Section::basis(&ring, 1, 0));
    assert_eq!(a.anchor(0), &xdx);

    let zero_g = zero_algebra(1);
    let dx = VectorField::coordinate(&ring, 0);
    let flat = action_algebroid(&zero_g, &[dx], &ring).unwrap();
    assert!(flat.is_left_symmetric());
    assert!(flat.commutator_algebroid().frame_bracket(0, 0).is_zero());

    let z = action_algebroid(
        &zero_algebra(2),
        &[VectorField::zero(&ring), VectorField::zero(&ring)],
        &ring,
    )
    .unwrap();
    assert!(z.products().iter().flatten().all(Section::is_zero));

    // e1·e2 = e2 needs ρ(e2) = [ρ(e1), ρ(e2)]; ∂x and x∂x give [∂x, x∂x] = ∂x ≠ x∂x.
    let bad = action_algebroid(
        &point_e1e2(),
        &[VectorField::coordinate(&ring, 0), xdx],
        &ring,
    );
    assert_eq!(bad.unwrap_err(), Error::NotAnAction { i: 0, j: 1 });
    assert_eq!(
        action_algebroid(&flat_connection(), &[], &ring).unwrap_err(),
        Error::NotPointCase
    );
}

#[test]
fn o_operator_identity_with_left_rep() {
    for (name, a) in valid_corpus() {
        let g = a.commutator_algebroid();
        let rep = a.build_left_mult_rep().unwrap();
        let t = PolyMatrix::identity(a.ring(), a.rank());
        let o = apply_o_operator(&g, &rep, &t).unwrap();
        assert!(
            o.is_o && o.t_homomorphism && o.report.passed(),
            "{name}: {}",
            o.report
        );
        assert!(o.induced.is_left_symmetric());
        assert_eq!(o.induced.products(), a.products());
        assert!(
            o_operator_lift_report(&g, &rep, &t).unwrap().passed(),
            "{name}"
        );
    }
}

#[test]
fn o_operator_trivial_cases() {
    let a = point_e1e2();
    let g = a.commutator_algebroid();
    let rep = a.build_left_mult_rep().unwrap();
    let o = apply_o_operator(&g, &rep, &PolyMatrix::zero(a.ring(), 2, 2)).unwrap();
    assert!(o.is_o);
    assert!(o.induced.products().iter().flatten().all(Section::is_zero));

    let ring = Ring::point();
    let ab = lsakit::LieAlgebroid::abelian(&ring, 2);
    let t = mat(&ring, &[&[1, 2, 3], &[4, 5, 6]]);
    let o = apply_o_operator(&ab, &Representation::trivial(&ring, 2, 3), &t).unwrap();
    assert!(o.is_o && o.t_homomorphism);
    assert!(o.induced.products().iter().flatten().all(Section::is_zero));
}

#[test]
fn adjoint_with_identity_is_not_an_o_operator() {
    // With ρ = ad the condition reads [x,y] = 2[x,y].
    let a = point_e1e2();
    let g = a.commutator_algebroid();
    let ad = Representation::lie(a.ring(), 2, (0..2).map(|i| g.ad_matrix(i)).collect()).unwrap();
    let o = apply_o_operator(&g, &ad, &PolyMatrix::identity(a.ring(), 2)).unwrap();
    assert!(!o.is_o);
}

#[test]
fn nijenhuis_scalars_are_nijenhuis() {
    for (name, a) in valid_corpus() {
        let g = a.commutator_algebroid();
        for lambda in [rat(0, 1), rat(1, 1), rat(-3, 2), rat(7, 1)] {
            let n =
                PolyMatrix::identity(a.ring(), a.rank()).scale(&Poly::constant(a.ring(), lambda));
            assert!(check_lie_nijenhuis(&g, &n).unwrap(), "{name}");
        }
    }
}

#[test]
fn semidirect_lie_with_dual_left_rep() {
    let a = point_e1e2();
    let g = a.commutator_algebroid();
    let dual = a.build_left_mult_rep().unwrap().dual();
    let s = semidirect_lie(&g, &dual).unwrap();
    assert!(s.is_lie_algebroid());
    // [e1, ε2] = −ε2.
    let mut expected = Section::zero(a.ring(), 4);
    expected.set(3, Poly::from_int(a.ring(), -1));
    assert_eq!(s.frame_bracket(0, 3), &expected);
    // ρ = 0: direct sum with abelian fibre part.
    let plain = semidirect_lie(&g, &Representation::trivial(a.ring(), 2, 1)).unwrap();
    assert!(plain.frame_bracket(0, 2).is_zero());
    assert_eq!(
        plain.frame_bracket(0, 1).slice(0, 2),
        *g.frame_bracket(0, 1)
    );
}

#[test]
fn semidirect_lie_heisenberg() {
    let ring = Ring::point();
    let ab = lsakit::LieAlgebroid::abelian(&ring, 1);
    let rep = Representation::lie(&ring, 2, vec![mat(&ring, &[&[0, 1], &[0, 0]])]).unwrap();
    let s = semidirect_lie(&ab, &rep).unwrap();
    assert!(s.check_lie_algebroid().passed());
    // [e1, ε2] = ε1.
    assert_eq!(s.frame_bracket(0, 2), &Section::basis(&ring, 3, 1));
}

#[test]
fn semidirect_lsa_sub_adjacent_matches() {
    for (name, a) in valid_corpus() {
        let rep = a.build_left_mult_rep().unwrap();
        let f = semidirect_lsa(&a, &rep).unwrap();
        assert!(f.is_left_symmetric(), "{name}");
        let lhs = f.commutator_algebroid();
        let rhs = semidirect_lie(&a.commutator_algebroid(), &rep.shifted(-1, 0)).unwrap();
        assert_eq!(lhs.brackets(), rhs.brackets(), "{name}");
        assert_eq!(lhs.anchors(), rhs.anchors(), "{name}");
    }
    // A genuine μ: (A; L, R) on a point algebra.
    let a = point_e1e2();
    let lr = left_right_candidate(&a);
    let f = semidirect_lsa(&a, &lr).unwrap();
    assert!(f.is_left_symmetric());
    let rhs = semidirect_lie(&a.commutator_algebroid(), &lr.shifted(-1, 0)).unwrap();
    assert_eq!(f.commutator_algebroid().brackets(), rhs.brackets());
}

#[test]
fn semidirect_lsa_against_oracle() {
    // A ⋉_{L,0} A for e1·e2 = e2, checked on all frame triples densely.
    let a = point_e1e2();
    let f = semidirect_lsa(&a, &a.build_left_mult_rep().unwrap()).unwrap();
    let t = table_of(&f);
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                let (x, y, z) = (unit(4, i), unit(4, j), unit(4, k));
                assert_eq!(associator(&t, &x, &y, &z), associator(&t, &y, &x, &z));
            }
        }
    }
}

#[test]
fn phase_space_closed_and_paracomplex() {
    for (name, a) in valid_corpus() {
        let p = build_phase_space(&a).unwrap();
        assert!(p.report.passed(), "{name}: {}", p.report);
        assert!(p.algebroid.is_lie_algebroid(), "{name}");
        assert!(
            check_paracomplex(&p.algebroid, &p.paracomplex()).unwrap(),
            "{name}"
        );
        assert_eq!(p.algebroid.rank(), 2 * a.rank());
    }
    assert!(matches!(
        build_phase_space(&non_example()),
        Err(Error::NotLeftSymmetric(_))
    ));
}

#[test]
fn phase_space_omega_components() {
    let a = point_e1e2();
    let p = build_phase_space(&a).unwrap();
    let one = Poly::one(a.ring());
    for i in 0..2 {
        for j in 0..2 {
            let expected = if i == j {
                one.clone()
            } else {
                Poly::zero(a.ring())
            };
            assert_eq!(p.omega.component(&[i, 2 + j]), expected);
            assert!(p.omega.component(&[i, j]).is_zero());
            assert!(p.omega.component(&[2 + i, 2 + j]).is_zero());
        }
    }
}

#[test]
fn phase_space_closedness_oracle() {
    // dω(u,v,w) = −ω([u,v],w) − ω([v,w],u) − ω([w,u],v) for a constant ω
    // and zero anchor, evaluated densely on all frame triples.
    let a = point_e1e2();
    let p = build_phase_space(&a).unwrap();
    let bt: Table = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| {
                    p.algebroid
                        .frame_bracket(i, j)
                        .comps()
                        .iter()
                        .map(|c| c.constant_value().unwrap())
                        .collect()
                })
                .collect()
        })
        .collect();
    let omega = |u: &Vector, v: &Vector| -> lsakit::Rational {
        (0..2).map(|i| &u[i] * &v[2 + i] - &u[2 + i] * &v[i]).sum()
    };
    let br = |u: &Vector, v: &Vector| -> Vector {
        let mut out = vec![q(0); 4];
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    out[k] += &u[i] * &v[j] * &bt[i][j][k];
                }
            }
        }
        out
    };
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                let (u, v, w) = (unit(4, i), unit(4, j), unit(4, k));
                let d = omega(&br(&u, &v), &w) + omega(&br(&v, &w), &u) + omega(&br(&w, &u), &v);
                assert!(d.is_zero());
            }
        }
    }
}

#[test]
fn lsa_from_phase_examples() {
    // L = [e1,e2] = e2, ρ(e1) = diag(0,1), ρ(e2) = 0 → e1·e2 = e2.
    let a = point_e1e2();
    let g = a.commutator_algebroid();
    let ring = a.ring().clone();
    let rho = Representation::lie(
        &ring,
        2,
        vec![
            mat(&ring, &[&[0, 0], &[0, 1]]),
            PolyMatrix::zero(&ring, 2, 2),
        ],
    )
    .unwrap();
    let out = lsa_from_phase(&g, &rho).unwrap();
    assert_eq!(out.lsa.products(), a.products());
    assert!(out.star.is_left_symmetric());
    assert_eq!(out.star.rank(), 4);

    for (name, a) in valid_corpus() {
        let g = a.commutator_algebroid();
        let out = lsa_from_phase(&g, &a.build_left_mult_rep().unwrap()).unwrap();
        assert_eq!(out.lsa.products(), a.products(), "{name}");
    }

    let ab = lsakit::LieAlgebroid::abelian(&ring, 2);
    let z = lsa_from_phase(&ab, &Representation::trivial(&ring, 2, 2)).unwrap();
    assert!(z.lsa.products().iter().flatten().all(Section::is_zero));

    // The adjoint representation makes ω fail to be closed.
    let ad = Representation::lie(&ring, 2, (0..2).map(|i| g.ad_matrix(i)).collect()).unwrap();
    assert!(matches!(
        lsa_from_phase(&g, &ad),
        Err(Error::OmegaNotClosed(_))
    ));
}

#[test]
fn paracomplex_swap_against_oracle() {
    // [e1,e2] = e2, P = [[0,1],[1,0]]; decide P[x,y] = [Px,y] + [x,Py] − P[Px,Py] densely.
    let t = table(2, &[(0, 1, &[0, 1])]);
    let p = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
    let mut oracle = true;
    for i in 0..2 {
        for j in 0..2 {
            let (x, y) = (unit(2, i), unit(2, j));
            let (px, py) = (mat_vec(&p, &x), mat_vec(&p, &y));
            let lhs = mat_vec(&p, &bracket(&t, &x, &y));
            let rhs = sub(
                &add(&bracket(&t, &px, &y), &bracket(&t, &x, &py)),
                &mat_vec(&p, &bracket(&t, &px, &py)),
            );
            oracle &= lhs == rhs;
        }
    }
    let a = point_e1e2();
    let pm = mat(a.ring(), &[&[0, 1], &[1, 0]]);
    assert_eq!(
        check_paracomplex(&a.commutator_algebroid(), &pm).unwrap(),
        oracle
    );
    assert!(check_paracomplex(
        &a.commutator_algebroid(),
        &PolyMatrix::identity(a.ring(), 2)
    )
    .unwrap());
}

#[test]
fn quadratic_examples() {
    let flat = flat_connection();
    let b = flat_identity_form();
    assert!(check_quadratic(&flat, &b).unwrap());
    let report = quadratic_report(&flat, &b).unwrap();
    assert_eq!(report.find("riemannian").unwrap().status, Status::Pass);

    let z = zero_algebra(2);
    assert!(check_quadratic(&z, &zero_indefinite_form()).unwrap());

    // e1·e2 = e2, B = I on (e1,e2,e2): (e2,e2) + (e2,e2) = 2 against a(e1)(1) = 0.
    let a = point_e1e2();
    let bi = BilinearForm::new(PolyMatrix::identity(a.ring(), 2)).unwrap();
    assert!(!check_quadratic(&a, &bi).unwrap());
    let t = table_of(&a);
    let lhs: lsakit::Rational = mul(&t, &unit(2, 0), &unit(2, 1))
        .iter()
        .zip(&unit(2, 1))
        .map(|(p, q)| p * q)
        .sum::<lsakit::Rational>()
        * q(2);
    assert_eq!(lhs, q(2));
    let qr = quadratic_report(&a, &bi).unwrap();
    let w = &qr.find("quadratic-invariance").unwrap().witnesses[0];
    assert_eq!(w.identity, "(e1,e2,e2)");
    assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("2", "0"));
}

#[test]
fn quadratic_non_constant_determinant_is_reported() {
    let ring = Ring::new(&["x"]).unwrap();
    let a = LSAlgebroid::zero(&ring, 1);
    let b = BilinearForm::new(PolyMatrix::diagonal(
        &ring,
        &[lsakit::parse_poly("1 + x^2", &ring).unwrap()],
    ))
    .unwrap();
    let report = quadratic_report(&a, &b).unwrap();
    assert_eq!(
        report.find("quadratic-nondegenerate").unwrap().status,
        Status::Uncertified
    );
    assert!(matches!(
        check_quadratic(&a, &b),
        Err(Error::NonConstantDeterminant(_))
    ));
}

#[test]
fn kernel_descend_examples() {
    let z = zero_algebra(2);
    let frame: Vec<Section> = (0..2).map(|i| z.basis(i)).collect();
    assert!(
        quadratic_kernel_descend(&z, &zero_indefinite_form(), &frame)
            .unwrap()
            .passed()
    );
    let flat = flat_connection();
    assert!(quadratic_kernel_descend(&flat, &flat_identity_form(), &[])
        .unwrap()
        .passed());
    assert_eq!(
        quadratic_kernel_descend(&flat, &flat_identity_form(), &[flat.basis(0)]).unwrap_err(),
        Error::FrameNotInKernel { index: 0 }
    );
}

#[test]
fn complex_structure_examples() {
    let z1 = zero_algebra(1);
    let b1 = BilinearForm::new(PolyMatrix::identity(z1.ring(), 1)).unwrap();
    let cs = build_complex_structure(&z1, &b1).unwrap();
    assert_eq!(cs.j, mat(z1.ring(), &[&[0, -1], &[1, 0]]));
    assert!(cs.report.passed(), "{}", cs.report);

    let flat = flat_connection();
    let cs = build_complex_structure(&flat, &flat_identity_form()).unwrap();
    assert!(cs.report.passed(), "{}", cs.report);
    assert!(check_complex(&cs.phase.algebroid, &cs.j).unwrap());

    let z2 = zero_algebra(2);
    let cs = build_complex_structure(&z2, &zero_indefinite_form()).unwrap();
    for name in [
        "complex-square",
        "complex-integrability",
        "complex-product",
        "kahler-compatibility",
    ] {
        assert!(cs.report.find(name).unwrap().passed(), "{name}");
    }
    assert_eq!(
        cs.report.find("kahler-nondegenerate").unwrap().status,
        Status::Fail
    );

    let a = point_e1e2();
    let bi = BilinearForm::new(PolyMatrix::identity(a.ring(), 2)).unwrap();
    assert!(matches!(
        build_complex_structure(&a, &bi),
        Err(Error::NotQuadratic(_))
    ));
}

#[test]
fn negative_definite_form_is_kahler() {
    let z = zero_algebra(2);
    let b = BilinearForm::new(PolyMatrix::identity(z.ring(), 2).neg()).unwrap();
    let cs = build_complex_structure(&z, &b).unwrap();
    assert!(cs.report.passed());
}

#[test]
fn phase_iso_examples() {
    let a = point_e1e2();
    let ring = a.ring().clone();
    let id = phase_iso_from_lsa_iso(&a, &a, &PolyMatrix::identity(&ring, 2)).unwrap();
    assert_eq!(id.phi, PolyMatrix::identity(&ring, 4));
    assert!(id.report.passed());

    let phi = mat(&ring, &[&[1, 0], &[0, 2]]);
    let iso = phase_iso_from_lsa_iso(&a, &a, &phi).unwrap();
    let half = Poly::constant(&ring, rat(1, 2));
    let expected = PolyMatrix::diagonal(
        &ring,
        &[
            Poly::one(&ring),
            Poly::from_int(&ring, 2),
            Poly::one(&ring),
            half,
        ],
    );
    assert_eq!(iso.phi, expected);
    assert!(iso.report.passed(), "{}", iso.report);

    let swap = mat(&ring, &[&[0, 1], &[1, 0]]);
    assert!(matches!(
        phase_iso_from_lsa_iso(&a, &a, &swap),
        Err(Error::NotIsomorphism(_))
    ));
}

#[test]
fn kernel_representations_examples() {
    let z = zero_algebra(2);
    let frame: Vec<Section> = (0..2).map(|i| z.basis(i)).collect();
    let report = kernel_representations(&z, &frame).unwrap();
    assert!(report.passed(), "{report}");
    assert!(report.find("kernel-left-right").is_some());

    let k = kernel_ideal();
    let report = kernel_representations(&k, &kernel_ideal_frame()).unwrap();
    assert!(report.find("kernel-ideal").unwrap().passed());
    assert!(report.find("kernel-ad").unwrap().passed(), "{report}");
    assert!(report.find("kernel-left-right").is_some());

    assert_eq!(
        kernel_representations(&k, &[k.basis(0)]).unwrap_err(),
        Error::FrameNotInKernel { index: 0 }
    );
}
