//! Action algebroids, O-operators and semidirect products.

use super::reps::{representation_lie_report, representation_lsa_report};
use super::structures::lie_nijenhuis_report;
use crate::algebroid::{Anchored, LSAlgebroid, LieAlgebroid, Section};
use crate::error::{Error, Result};
use crate::polyring::{Poly, PolyMatrix, Ring, VectorField};
use crate::report::{CheckRecord, Report};
use crate::representation::Representation;

/// The action left-symmetric algebroid of a point algebra acting on a chart
/// through `fields[i] = ρ(e_i)`.
pub fn action_algebroid(
    g: &LSAlgebroid,
    fields: &[VectorField],
    ring: &Ring,
) -> Result<LSAlgebroid> {
    if g.nvars() != 0 {
        return Err(Error::NotPointCase);
    }
    let r = g.rank();
    if fields.len() != r {
        return Err(Error::DimensionMismatch(format!(
            "{} vector fields for an algebra of dimension {r}",
            fields.len()
        )));
    }
    if fields.iter().any(|f| f.ring() != ring) {
        return Err(Error::DimensionMismatch(
            "vector field over another chart".into(),
        ));
    }
    let field_of = |s: &Section| {
        let mut out = VectorField::zero(ring);
        for (c, f) in s.comps().iter().zip(fields) {
            let c = c
                .constant_value()
                .expect("point algebra has constant structure");
            out = out.add(&f.scale(&Poly::constant(ring, c)));
        }
        out
    };
    for i in 0..r {
        for j in (i + 1)..r {
            let lhs = field_of(&g.commutator(i, j));
            let rhs = fields[i].bracket(&fields[j])?;
            if lhs != rhs {
                return Err(Error::NotAnAction { i, j });
            }
        }
    }
    let products = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| g.product(i, j).embed(ring))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    LSAlgebroid::new(ring, products, fields.to_vec())
}

/// Outcome of applying a candidate O-operator T: E → A.
#[derive(Debug, Clone)]
pub struct OOperator {
    pub is_o: bool,
    /// u ·_E v = ρ(Tu)v with anchor a∘T.
    pub induced: LSAlgebroid,
    pub t_homomorphism: bool,
    pub report: Report,
}

/// The induced product on E: ε_a · ε_b = R(Tε_a) ε_b, anchor a(Tε_a).
pub fn induced_structure<A: Anchored + ?Sized>(
    l: &A,
    rep: &Representation,
    t: &PolyMatrix,
) -> Result<LSAlgebroid> {
    let s = rep.rank();
    let ring = l.ring();
    let images: Vec<Section> = (0..s)
        .map(|a| Section::basis(ring, s, a).transform(t))
        .collect();
    let mut products = Vec::with_capacity(s);
    for img in &images {
        let mat = rep.rho_matrix_of(img);
        products.push(
            (0..s)
                .map(|b| Section::new(ring, mat.column(b)).expect("same ring"))
                .collect(),
        );
    }
    let anchors = images.iter().map(|img| l.anchor_of(img)).collect();
    LSAlgebroid::new(ring, products, anchors)
}

pub fn apply_o_operator(
    l: &LieAlgebroid,
    rep: &Representation,
    t: &PolyMatrix,
) -> Result<OOperator> {
    let r = l.rank();
    let s = rep.rank();
    if rep.base_rank() != r || t.rows() != r || t.cols() != s || t.ring() != l.ring() {
        return Err(Error::DimensionMismatch(format!(
            "T must be {r}x{s} for a rank-{r} algebroid and a rank-{s} representation"
        )));
    }
    let ring = l.ring();
    let e: Vec<Section> = (0..s).map(|a| Section::basis(ring, s, a)).collect();
    let te: Vec<Section> = e.iter().map(|u| u.transform(t)).collect();

    let mut o_rec = CheckRecord::new("o-operator", "[Tu,Tv] = T(ρ(Tu)v − ρ(Tv)u)");
    for a in 0..s {
        for b in (a + 1)..s {
            let lhs = l.bracket(&te[a], &te[b]);
            let inner = rep
                .act_rho(l, &te[a], &e[b])
                .sub(&rep.act_rho(l, &te[b], &e[a]));
            o_rec.expect_eq(
                format!("u = ε{}, v = ε{}", a + 1, b + 1),
                &lhs,
                &inner.transform(t),
            );
        }
    }
    let is_o = o_rec.passed();
    let induced = induced_structure(l, rep, t)?;
    let mut report = Report::single(o_rec);

    let mut induced_rec = CheckRecord::new(
        "induced-left-symmetric",
        "u·v = ρ(Tu)v is left-symmetric with anchor a∘T",
    );
    for f in induced.check_left_symmetric().failures() {
        for w in &f.witnesses {
            induced_rec.fail(w.identity.clone(), w.lhs.clone(), w.rhs.clone());
        }
    }
    report.push(induced_rec);

    let sub = induced.commutator_algebroid();
    let mut hom = CheckRecord::new(
        "o-operator-homomorphism",
        "T[u,v]_E = [Tu,Tv] and a∘T = a_E",
    );
    for a in 0..s {
        for b in (a + 1)..s {
            let lhs = sub.frame_bracket(a, b).transform(t);
            let rhs = l.bracket(&te[a], &te[b]);
            hom.expect_eq(
                format!("T[ε{0},ε{1}] = [Tε{0},Tε{1}]", a + 1, b + 1),
                &lhs,
                &rhs,
            );
        }
        hom.expect_eq(
            format!("a(Tε{0}) = a_E(ε{0})", a + 1),
            &l.anchor_of(&te[a]),
            induced.anchor(a),
        );
    }
    let t_homomorphism = hom.passed();
    report.push(hom);
    Ok(OOperator {
        is_o,
        induced,
        t_homomorphism,
        report,
    })
}

/// T̃ = [[0, T], [0, 0]] on A ⊕ E.
pub fn o_operator_lift(t: &PolyMatrix) -> PolyMatrix {
    let ring = t.ring();
    let (r, s) = (t.rows(), t.cols());
    PolyMatrix::block(
        &PolyMatrix::zero(ring, r, r),
        t,
        &PolyMatrix::zero(ring, s, r),
        &PolyMatrix::zero(ring, s, s),
    )
    .expect("consistent blocks")
}

/// Checks that T̃ is a Nijenhuis operator on A ⋉_ρ E.
pub fn o_operator_lift_report(
    l: &LieAlgebroid,
    rep: &Representation,
    t: &PolyMatrix,
) -> Result<Report> {
    let semi = semidirect_lie(l, rep)?;
    lie_nijenhuis_report(&semi, &o_operator_lift(t))
}

/// A ⋉_ρ E with [x+u, y+v] = [x,y] + ρ(x)v − ρ(y)u and anchor a(x).
pub fn semidirect_lie(l: &LieAlgebroid, rep: &Representation) -> Result<LieAlgebroid> {
    let report = representation_lie_report(l, rep)?;
    if !report.passed() {
        return Err(Error::NotARepresentation(report.failure_summary()));
    }
    Ok(semidirect_lie_unchecked(l, rep))
}

pub(crate) fn semidirect_lie_unchecked(l: &LieAlgebroid, rep: &Representation) -> LieAlgebroid {
    let ring = l.ring();
    let (r, s) = (l.rank(), rep.rank());
    let n = r + s;
    let zero_e = Section::zero(ring, s);
    let zero_a = Section::zero(ring, r);
    let mut brackets = vec![vec![Section::zero(ring, n); n]; n];
    for i in 0..r {
        for j in 0..r {
            brackets[i][j] = l.frame_bracket(i, j).concat(&zero_e);
        }
        for a in 0..s {
            let col = Section::new(ring, rep.rho_mat(i).column(a)).expect("same ring");
            let v = zero_a.concat(&col);
            brackets[a + r][i] = v.neg();
            brackets[i][a + r] = v;
        }
    }
    let mut anchors = l.anchors().to_vec();
    anchors.extend(std::iter::repeat_n(VectorField::zero(ring), s));
    LieAlgebroid::new(ring, brackets, anchors).expect("shape by construction")
}

/// A ⋉_{ρ,μ} E with (x1+u1)(x2+u2) = x1·x2 + ρ(x1)u2 + μ(x2)u1 and anchor a(x).
pub fn semidirect_lsa(a: &LSAlgebroid, rep: &Representation) -> Result<LSAlgebroid> {
    let report = representation_lsa_report(a, rep)?;
    if !report.passed() {
        return Err(Error::NotARepresentation(report.failure_summary()));
    }
    Ok(semidirect_lsa_unchecked(a, rep))
}

pub(crate) fn semidirect_lsa_unchecked(a: &LSAlgebroid, rep: &Representation) -> LSAlgebroid {
    let ring = a.ring();
    let (r, s) = (a.rank(), rep.rank());
    let n = r + s;
    let zero_e = Section::zero(ring, s);
    let zero_a = Section::zero(ring, r);
    let mut products = vec![vec![Section::zero(ring, n); n]; n];
    for i in 0..r {
        for j in 0..r {
            products[i][j] = a.product(i, j).concat(&zero_e);
        }
        for u in 0..s {
            let rho_col = Section::new(ring, rep.rho_mat(i).column(u)).expect("same ring");
            products[i][u + r] = zero_a.concat(&rho_col);
            let mu_col = Section::new(ring, rep.mu_mat(i).column(u)).expect("same ring");
            products[u + r][i] = zero_a.concat(&mu_col);
        }
    }
    let mut anchors = a.anchors().to_vec();
    anchors.extend(std::iter::repeat_n(VectorField::zero(ring), s));
    LSAlgebroid::new(ring, products, anchors).expect("shape by construction")
}
