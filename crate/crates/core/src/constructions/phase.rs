//! Phase spaces G(A) ⋉_{L*} A* with their canonical symplectic form, and the
//! complex, paracomplex and Kähler structures living on them.
//!
//! The frame of the phase space is `e_1..e_r, ε_1..ε_r`, with ε_j the
//! constant coframe, ε_j(e_i) = δ_ij.

use super::derive::{semidirect_lie_unchecked, semidirect_lsa};
use super::reps::representation_lie_report;
use super::structures::{
    check_quadratic, complex_report, definiteness, quadratic_report, BilinearForm,
};
use crate::algebroid::{
    lie_form_d, lsa_homomorphism_report, Anchored, FormCochain, LSAlgebroid, LieAlgebroid, Section,
};
use crate::error::{Error, Result};
use crate::polyring::{Poly, PolyMatrix, Ring};
use crate::report::{CheckRecord, Report};
use crate::representation::Representation;

/// Labels `e1..er, ε1..εr` for the frame of a rank-2r phase space.
pub(crate) fn phase_label(r: usize, idx: usize) -> String {
    if idx < r {
        format!("e{}", idx + 1)
    } else {
        format!("ε{}", idx - r + 1)
    }
}

/// Ω with ω(u, v) = uᵀ Ω v: the matrix [[0, I], [−I, 0]].
pub fn canonical_omega_matrix(ring: &Ring, r: usize) -> PolyMatrix {
    let id = PolyMatrix::identity(ring, r);
    let z = PolyMatrix::zero(ring, r, r);
    PolyMatrix::block(&z, &id, &id.neg(), &z).expect("square blocks")
}

/// ω(x+ξ, y+η) = ⟨η, x⟩ − ⟨ξ, y⟩ as a 2-form on the phase-space frame.
pub fn canonical_omega(ring: &Ring, r: usize) -> FormCochain {
    let mut w = FormCochain::zero(ring, 2 * r, 2);
    for i in 0..r {
        w.set(&[i, r + i], Poly::one(ring))
            .expect("distinct indices");
    }
    w
}

/// P(x+ξ) = x − ξ.
pub fn canonical_paracomplex(ring: &Ring, r: usize) -> PolyMatrix {
    let id = PolyMatrix::identity(ring, r);
    let z = PolyMatrix::zero(ring, r, r);
    PolyMatrix::block(&id, &z, &z, &id.neg()).expect("square blocks")
}

#[derive(Debug, Clone)]
pub struct PhaseSpace {
    pub algebroid: LieAlgebroid,
    pub omega: FormCochain,
    pub report: Report,
}

impl PhaseSpace {
    /// Rank of the underlying left-symmetric algebroid.
    pub fn base_rank(&self) -> usize {
        self.algebroid.rank() / 2
    }

    pub fn omega_matrix(&self) -> PolyMatrix {
        canonical_omega_matrix(self.algebroid.ring(), self.base_rank())
    }

    pub fn paracomplex(&self) -> PolyMatrix {
        canonical_paracomplex(self.algebroid.ring(), self.base_rank())
    }
}

fn closedness_record(p: &LieAlgebroid, omega: &FormCochain, r: usize) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new("omega-closed", "dω = 0 on the phase space");
    if p.rank() < 3 {
        return Ok(rec);
    }
    let d = lie_form_d(p, omega)?;
    for (idx, v) in d.components() {
        let labels: Vec<String> = idx.iter().map(|&i| phase_label(r, i)).collect();
        rec.fail(format!("dω({}) = 0", labels.join(",")), v.to_string(), "0");
    }
    Ok(rec)
}

/// The phase space of a left-symmetric algebroid with its canonical 2-form.
pub fn build_phase_space(a: &LSAlgebroid) -> Result<PhaseSpace> {
    a.require_left_symmetric()?;
    let r = a.rank();
    let ring = a.ring();
    let g = a.commutator_algebroid();
    let l_dual = a.left_mult_rep_unchecked().dual();
    let algebroid = semidirect_lie_unchecked(&g, &l_dual);
    let omega = canonical_omega(ring, r);
    let mut report = Report::single(closedness_record(&algebroid, &omega, r)?);
    let mut nondeg = CheckRecord::new("omega-nondegenerate", "det Ω = 1");
    let det = canonical_omega_matrix(ring, r).determinant()?;
    nondeg.expect_eq("det Ω", &det, &Poly::one(ring));
    report.push(nondeg);
    Ok(PhaseSpace {
        algebroid,
        omega,
        report,
    })
}

/// Structures recovered from a phase space of a Lie algebroid.
#[derive(Debug, Clone)]
pub struct PhaseLsa {
    /// x·y = ρ(x)y.
    pub lsa: LSAlgebroid,
    /// The compatible product on L ⋉_{ρ*} A*: x ∗ y = x·y, x ∗ ξ = L*_x ξ, ξ ∗ x = ξ ∗ η = 0.
    pub star: LSAlgebroid,
}

/// Given a representation ρ of L on its own bundle such that ω is closed on
/// L ⋉_{ρ*} A*, returns the compatible left-symmetric structure x·y = ρ(x)y.
pub fn lsa_from_phase(l: &LieAlgebroid, rep: &Representation) -> Result<PhaseLsa> {
    let r = l.rank();
    if rep.rank() != r {
        return Err(Error::DimensionMismatch(format!(
            "representation of rank {} on a rank-{r} algebroid",
            rep.rank()
        )));
    }
    let rep_report = representation_lie_report(l, rep)?;
    if !rep_report.passed() {
        return Err(Error::NotARepresentation(rep_report.failure_summary()));
    }
    let ring = l.ring();
    let semi = semidirect_lie_unchecked(l, &rep.dual());
    let closed = closedness_record(&semi, &canonical_omega(ring, r), r)?;
    if let Some(w) = closed.witnesses.first() {
        return Err(Error::OmegaNotClosed(format!(
            "{} ({} != {})",
            w.identity, w.lhs, w.rhs
        )));
    }
    let products: Vec<Vec<Section>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| Section::new(ring, rep.rho_mat(i).column(j)).expect("same ring"))
                .collect()
        })
        .collect();
    let lsa = LSAlgebroid::new(ring, products, l.anchors().to_vec())?;
    for i in 0..r {
        for j in (i + 1)..r {
            let lhs = l.frame_bracket(i, j);
            let rhs = lsa.commutator(i, j);
            if *lhs != rhs {
                return Err(Error::IncompatibleBracket(format!(
                    "[e{0},e{1}] = {lhs} but ρ(e{0})e{1} − ρ(e{1})e{0} = {rhs}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    lsa.require_left_symmetric()?;
    let l_dual = lsa.left_mult_rep_unchecked().dual();
    let star = semidirect_lsa(
        &lsa,
        &Representation::new(
            ring,
            r,
            r,
            l_dual.rho_mats().to_vec(),
            vec![PolyMatrix::zero(ring, r, r); r],
        )?,
    )?;
    Ok(PhaseLsa { lsa, star })
}

#[derive(Debug, Clone)]
pub struct ComplexStructure {
    /// J = [[0, −B⁻¹], [B, 0]].
    pub j: PolyMatrix,
    pub phase: PhaseSpace,
    pub report: Report,
}

/// The complex structure J(x+ξ) = −φ⁻¹(ξ) + φ(x) on the phase space of a
/// quadratic left-symmetric algebroid, where φ(x) = (x, ·).
pub fn build_complex_structure(a: &LSAlgebroid, b: &BilinearForm) -> Result<ComplexStructure> {
    if !check_quadratic(a, b)? {
        return Err(Error::NotQuadratic(
            quadratic_report(a, b)?.failure_summary(),
        ));
    }
    let r = a.rank();
    let ring = a.ring();
    let bm = b.matrix();
    let binv = bm.inverse_adjugate()?;
    let z = PolyMatrix::zero(ring, r, r);
    let j = PolyMatrix::block(&z, &binv.neg(), bm, &z)?;
    let phase = build_phase_space(a)?;

    let mut report = complex_report(&phase.algebroid, &j)?;
    let p = phase.paracomplex();
    let mut cp = CheckRecord::new("complex-product", "JP = −PJ");
    cp.expect_eq(
        "JP + PJ = 0",
        &j.mul(&p)?.add(&p.mul(&j)?)?,
        &PolyMatrix::zero(ring, 2 * r, 2 * r),
    );
    report.push(cp);

    let omega = phase.omega_matrix();
    let mut k1 = CheckRecord::new("kahler-compatibility", "ω(Ju, Jv) = ω(u, v)");
    let pulled = j.transpose().mul(&omega)?.mul(&j)?;
    for u in 0..2 * r {
        for v in (u + 1)..2 * r {
            k1.expect_eq(
                format!(
                    "ω(J{0},J{1}) = ω({0},{1})",
                    phase_label(r, u),
                    phase_label(r, v)
                ),
                pulled.get(u, v),
                omega.get(u, v),
            );
        }
    }
    report.push(k1);

    // ω(x+ξ, J(x+ξ)) = (x,x) + ξᵀB⁻¹ξ, nonvanishing iff B is definite.
    let k2 = CheckRecord::new("kahler-nondegenerate", "ω(u, Ju) ≠ 0 for u ≠ 0");
    let k2 = match definiteness(bm) {
        Some(Some(_)) => k2,
        Some(None) => {
            let mut rec = k2;
            let minors: Vec<String> = bm
                .leading_minors()?
                .iter()
                .map(ToString::to_string)
                .collect();
            rec.fail(
                "B is definite",
                format!("leading minors [{}]", minors.join(", ")),
                "definite signature",
            );
            rec
        }
        None => k2.uncertified("definiteness is only certified for constant forms"),
    };
    report.push(k2);
    Ok(ComplexStructure { j, phase, report })
}

#[derive(Debug, Clone)]
pub struct PhaseIso {
    /// Φ = diag(φ, (φᵀ)⁻¹).
    pub phi: PolyMatrix,
    pub report: Report,
}

/// Lifts an isomorphism φ: A1 → A2 of left-symmetric algebroids to the
/// phase spaces.
pub fn phase_iso_from_lsa_iso(
    a1: &LSAlgebroid,
    a2: &LSAlgebroid,
    phi: &PolyMatrix,
) -> Result<PhaseIso> {
    let hom = lsa_homomorphism_report(a1, a2, phi)?;
    if !hom.passed() {
        return Err(Error::NotIsomorphism(hom.failure_summary()));
    }
    if a1.rank() != a2.rank() {
        return Err(Error::NotIsomorphism("ranks differ".into()));
    }
    let inv_t = match phi.transpose().inverse_adjugate() {
        Ok(m) => m,
        Err(Error::SingularMatrix) => return Err(Error::NotIsomorphism("φ is singular".into())),
        Err(e) => return Err(e),
    };
    let r = a1.rank();
    let ring = a1.ring();
    let z = PolyMatrix::zero(ring, r, r);
    let big = PolyMatrix::block(phi, &z, &z, &inv_t)?;
    let p1 = build_phase_space(a1)?;
    let p2 = build_phase_space(a2)?;
    let n = 2 * r;
    let frames: Vec<Section> = (0..n).map(|i| p1.algebroid.basis(i)).collect();
    let images: Vec<Section> = frames.iter().map(|s| s.transform(&big)).collect();

    let mut lie = CheckRecord::new("phase-lie-morphism", "Φ[u,v] = [Φu,Φv] and a₂∘Φ = a₁");
    for u in 0..n {
        for v in (u + 1)..n {
            let lhs = p1.algebroid.frame_bracket(u, v).transform(&big);
            let rhs = p2.algebroid.bracket(&images[u], &images[v]);
            lie.expect_eq(
                format!(
                    "Φ[{0},{1}] = [Φ{0},Φ{1}]",
                    phase_label(r, u),
                    phase_label(r, v)
                ),
                &lhs,
                &rhs,
            );
        }
        lie.expect_eq(
            format!("a₂(Φ{}) = a₁", phase_label(r, u)),
            &p2.algebroid.anchor_of(&images[u]),
            p1.algebroid.anchor(u),
        );
    }
    let mut base = CheckRecord::new("phase-preserves-base", "Φ(A₁) ⊂ A₂");
    let mut dual = CheckRecord::new("phase-preserves-dual", "Φ(A₁*) ⊂ A₂*");
    let zero_r = Section::zero(ring, r);
    for i in 0..r {
        base.expect_eq(
            format!("dual part of Φe{}", i + 1),
            &images[i].slice(r, n),
            &zero_r,
        );
        dual.expect_eq(
            format!("base part of Φε{}", i + 1),
            &images[r + i].slice(0, r),
            &zero_r,
        );
    }
    let omega = canonical_omega_matrix(ring, r);
    let pulled = big.transpose().mul(&omega)?.mul(&big)?;
    let mut symp = CheckRecord::new("phase-symplectic", "ω₂(Φu, Φv) = ω₁(u, v)");
    for u in 0..n {
        for v in (u + 1)..n {
            symp.expect_eq(
                format!(
                    "ω₂(Φ{0},Φ{1}) = ω₁({0},{1})",
                    phase_label(r, u),
                    phase_label(r, v)
                ),
                pulled.get(u, v),
                omega.get(u, v),
            );
        }
    }
    Ok(PhaseIso {
        phi: big,
        report: Report {
            records: vec![lie, base, dual, symp],
        },
    })
}
