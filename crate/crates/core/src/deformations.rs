//! One-parameter infinitesimal deformations x·_t y = x·y + tω(x,y),
//! a_t = a + tσ_ω, their equivalence under id + tN, and Nijenhuis
//! operators as generators of trivial deformations.
//!
//! The formal parameter is an extra coordinate `t` appended to the base
//! ring, so statements "for all t" become polynomial identities.

use crate::algebroid::{Anchored, LSAlgebroid, Section};
use crate::cohomology::{def_d, MultiDerivation};
use crate::constructions::check_lie_nijenhuis;
use crate::error::{Error, Result};
use crate::polyring::{Poly, PolyMatrix, Rational, Ring, VectorField};
use crate::report::{CheckRecord, Report};

/// Where to evaluate the deformation parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parameter {
    /// Keep t as a coordinate appended to the base ring.
    Formal,
    At(Rational),
}

fn require_degree2(a: &LSAlgebroid, w: &MultiDerivation) -> Result<()> {
    if w.degree() != 2 {
        return Err(Error::InvalidDegree(format!(
            "a deformation has degree 2, got {}",
            w.degree()
        )));
    }
    if w.rank() != a.rank() || w.ring() != a.ring() {
        return Err(Error::DimensionMismatch(
            "deformation does not match the algebroid".into(),
        ));
    }
    Ok(())
}

fn require_endo(a: &LSAlgebroid, n: &PolyMatrix) -> Result<()> {
    if n.rows() != a.rank() || n.cols() != a.rank() || n.ring() != a.ring() {
        return Err(Error::DimensionMismatch(format!(
            "endomorphism is {}x{}, algebroid has rank {}",
            n.rows(),
            n.cols(),
            a.rank()
        )));
    }
    Ok(())
}

fn frame(a: &LSAlgebroid) -> Vec<Section> {
    (0..a.rank()).map(|i| a.basis(i)).collect()
}

fn label(xs: &[usize]) -> String {
    let names = ["x", "y", "z"];
    xs.iter()
        .enumerate()
        .map(|(k, i)| format!("{} = e{}", names[k], i + 1))
        .collect::<Vec<_>>()
        .join(", ")
}

/// The products ω(e_i, e_j) and symbols σ_ω(e_i) as an algebroid structure.
fn auxiliary(w: &MultiDerivation) -> Result<LSAlgebroid> {
    let r = w.rank();
    let values = (0..r)
        .map(|i| (0..r).map(|j| w.value(&[i], j)).collect())
        .collect();
    let anchors = (0..r).map(|i| w.symbol(&[i])).collect();
    LSAlgebroid::new(w.ring(), values, anchors)
}

/// Validity of ω as a generator of a deformation.
pub fn check_deformation(a: &LSAlgebroid, w: &MultiDerivation) -> Result<Report> {
    require_degree2(a, w)?;
    let e = frame(a);
    let r = a.rank();
    let g = a.commutator_algebroid();
    let ev = |x: &Section, y: &Section| w.eval(&[x.clone(), y.clone()]).expect("arity 2");

    let mut closed = CheckRecord::new(
        "two-closed",
        "x·ω(y,z) − y·ω(x,z) + ω(y,x)·z − ω(x,y)·z = ω(y,x·z) − ω(x,y·z) + ω([x,y],z)",
    );
    let mut bracket = CheckRecord::new(
        "omega-bracket",
        "ω(ω(x,y),z) − ω(x,ω(y,z)) = ω(ω(y,x),z) − ω(y,ω(x,z))",
    );
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let (x, y, z) = (&e[i], &e[j], &e[k]);
                let mut lhs = a.mult(x, &ev(y, z));
                lhs.sub_assign(&a.mult(y, &ev(x, z)));
                lhs.add_assign(&a.mult(&ev(y, x), z));
                lhs.sub_assign(&a.mult(&ev(x, y), z));
                let mut rhs = ev(y, a.product(i, k));
                rhs.sub_assign(&ev(x, a.product(j, k)));
                rhs.add_assign(&ev(&g.bracket(x, y), z));
                closed.expect_eq(label(&[i, j, k]), &lhs, &rhs);

                let lhs = ev(&ev(x, y), z).sub(&ev(x, &ev(y, z)));
                let rhs = ev(&ev(y, x), z).sub(&ev(y, &ev(x, z)));
                bracket.expect_eq(label(&[i, j, k]), &lhs, &rhs);
            }
        }
    }
    let mut report = Report::single(closed);
    report.push(bracket);

    let mut aux = CheckRecord::new(
        "auxiliary-left-symmetric",
        "(A, ω, σ_ω) is a left-symmetric algebroid",
    );
    let aux_report = auxiliary(w)?.check_left_symmetric();
    if !aux_report.passed() {
        aux.fail("check_left_symmetric", aux_report.failure_summary(), "pass");
    }
    report.push(aux);

    let mut dclosed = CheckRecord::new("def-closed", "d_def ω = 0, values and symbols");
    let dw = def_d(a, w)?;
    for ((skew, last), v) in dw.values() {
        let mut idx = skew.clone();
        idx.push(*last);
        dclosed.fail(format!("d_def ω at {}", label(&idx)), v.to_string(), "0");
    }
    for (skew, s) in dw.symbols() {
        dclosed.fail(
            format!("symbol of d_def ω at {}", label(skew)),
            s.to_string(),
            "0",
        );
    }
    report.push(dclosed);
    Ok(report)
}

fn require_deformation(a: &LSAlgebroid, w: &MultiDerivation) -> Result<()> {
    let report = check_deformation(a, w)?;
    if !report.passed() {
        return Err(Error::NotADeformation(report.failure_summary()));
    }
    Ok(())
}

/// A_t = (c + tω, a + tσ_ω) without validating ω.
fn assemble(a: &LSAlgebroid, w: &MultiDerivation, t: &Parameter) -> Result<LSAlgebroid> {
    let (ring, base, w, tpoly) = match t {
        Parameter::Formal => {
            let ring = a.ring().with_parameter("t");
            let tp = Poly::var(&ring, ring.nvars() - 1);
            (ring.clone(), a.embed(&ring)?, w.embed(&ring)?, tp)
        }
        Parameter::At(v) => (
            a.ring().clone(),
            a.clone(),
            w.clone(),
            Poly::constant(a.ring(), v.clone()),
        ),
    };
    let r = a.rank();
    let products = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| base.product(i, j).add(&w.value(&[i], j).scale(&tpoly)))
                .collect()
        })
        .collect();
    let anchors = (0..r)
        .map(|i| base.anchor(i).add(&w.symbol(&[i]).scale(&tpoly)))
        .collect();
    LSAlgebroid::new(&ring, products, anchors)
}

/// The deformed algebroid, over the ring extended by t when formal.
pub fn deformed_algebroid(
    a: &LSAlgebroid,
    w: &MultiDerivation,
    t: &Parameter,
) -> Result<LSAlgebroid> {
    require_degree2(a, w)?;
    require_deformation(a, w)?;
    assemble(a, w, t)
}

/// Substitutes t = value in a structure over a ring whose last coordinate
/// is the parameter, landing in `base`.
pub fn specialize_parameter(
    at: &LSAlgebroid,
    value: &Rational,
    base: &Ring,
) -> Result<LSAlgebroid> {
    let var = at
        .ring()
        .nvars()
        .checked_sub(1)
        .ok_or(Error::NotPointCase)?;
    let sp = |p: &Poly| p.specialize(var, value, base);
    let products = at
        .products()
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| Section::new(base, s.comps().iter().map(sp).collect::<Result<_>>()?))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let anchors = at
        .anchors()
        .iter()
        .map(|f| {
            VectorField::new(
                base,
                f.components()[..var]
                    .iter()
                    .map(sp)
                    .collect::<Result<_>>()?,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    LSAlgebroid::new(base, products, anchors)
}

/// N(x)·N(y) − N(x·N(y)) − N(N(x)·y) + N²(x·y) on frames; with
/// `paper_literal`, also the variant N(x)·N(y) − x·N(y) − N(x)·y + N²(x·y).
pub fn nijenhuis_report(a: &LSAlgebroid, n: &PolyMatrix, paper_literal: bool) -> Result<Report> {
    require_endo(a, n)?;
    let e = frame(a);
    let ne: Vec<Section> = e.iter().map(|x| x.transform(n)).collect();
    let r = a.rank();
    let mut rec = CheckRecord::new("nijenhuis", "N(x)·N(y) = N(x·N(y)) + N(N(x)·y) − N²(x·y)");
    let mut lit = CheckRecord::new(
        "nijenhuis-printed",
        "N(x)·N(y) − x·N(y) − N(x)·y + N²(x·y) = 0",
    );
    for i in 0..r {
        for j in 0..r {
            let lhs = a.mult(&ne[i], &ne[j]);
            let n2xy = a.product(i, j).transform(n).transform(n);
            let mut rhs = a
                .mult(&e[i], &ne[j])
                .add(&a.mult(&ne[i], &e[j]))
                .transform(n);
            rhs.sub_assign(&n2xy);
            rec.expect_eq(label(&[i, j]), &lhs, &rhs);
            if paper_literal {
                let mut k = lhs.sub(&a.mult(&e[i], &ne[j]));
                k.sub_assign(&a.mult(&ne[i], &e[j]));
                k.add_assign(&n2xy);
                lit.expect_eq(label(&[i, j]), &k, &Section::zero(a.ring(), r));
            }
        }
    }
    let mut report = Report::single(rec);
    if paper_literal {
        report.push(lit.with_note("printed form, not C∞-linear; reported for comparison"));
    }
    Ok(report)
}

pub fn check_nijenhuis(a: &LSAlgebroid, n: &PolyMatrix) -> Result<bool> {
    Ok(nijenhuis_report(a, n, false)?.passed())
}

/// ω = d_def N for a Nijenhuis operator N, with a report that ω is a
/// deformation, σ_ω = a∘N, and id + tN intertwines A_t with A.
pub fn trivial_deformation(a: &LSAlgebroid, n: &PolyMatrix) -> Result<(MultiDerivation, Report)> {
    let nij = nijenhuis_report(a, n, false)?;
    if !nij.passed() {
        return Err(Error::NotNijenhuis(nij.failure_summary()));
    }
    let w = def_d(a, &MultiDerivation::bundle_map(n)?)?;
    let mut report = nij;
    report.extend(check_deformation(a, &w)?);

    let mut sym = CheckRecord::new("symbol-is-anchor-of-n", "σ_ω = a∘N");
    for (i, x) in frame(a).iter().enumerate() {
        sym.expect_eq(label(&[i]), &w.symbol(&[i]), &a.anchor_of(&x.transform(n)));
    }
    report.push(sym);

    let at = assemble(a, &w, &Parameter::Formal)?;
    let ring = at.ring().clone();
    let base = a.embed(&ring)?;
    let t = Poly::var(&ring, ring.nvars() - 1);
    let phi = PolyMatrix::identity(&ring, a.rank()).add(&n.embed(&ring)?.scale(&t))?;
    let e = frame(&base);
    let pe: Vec<Section> = e.iter().map(|x| x.transform(&phi)).collect();
    let mut prod = CheckRecord::new(
        "intertwiner-product",
        "(id + tN)(x·_t y) = (id + tN)(x)·(id + tN)(y)",
    );
    let mut anchor = CheckRecord::new("intertwiner-anchor", "a∘(id + tN) = a_t");
    for i in 0..a.rank() {
        for j in 0..a.rank() {
            prod.expect_eq(
                label(&[i, j]),
                &at.product(i, j).transform(&phi),
                &base.mult(&pe[i], &pe[j]),
            );
        }
        anchor.expect_eq(label(&[i]), &base.anchor_of(&pe[i]), at.anchor(i));
    }
    report.push(prod);
    report.push(anchor);
    Ok((w, report))
}

/// Equivalence of the deformations generated by ω and ω' through id + tN.
pub fn check_equivalence(
    a: &LSAlgebroid,
    w: &MultiDerivation,
    w2: &MultiDerivation,
    n: &PolyMatrix,
) -> Result<Report> {
    require_degree2(a, w)?;
    require_degree2(a, w2)?;
    require_endo(a, n)?;
    let mut report = Report::new();
    for (name, form) in [
        ("omega-is-deformation", w),
        ("omega-prime-is-deformation", w2),
    ] {
        let mut rec = CheckRecord::new(name, "generates a deformation");
        let sub = check_deformation(a, form)?;
        if !sub.passed() {
            rec.fail("check_deformation", sub.failure_summary(), "pass");
        }
        report.push(rec);
    }

    let e = frame(a);
    let ne: Vec<Section> = e.iter().map(|x| x.transform(n)).collect();
    let dn = def_d(a, &MultiDerivation::bundle_map(n)?)?;
    let diff = w.sub(w2)?;
    let ev = |f: &MultiDerivation, x: &Section, y: &Section| {
        f.eval(&[x.clone(), y.clone()]).expect("arity 2")
    };
    let r = a.rank();

    let mut exact = CheckRecord::new("two-exact", "ω(x,y) − ω'(x,y) = x·N(y) + N(x)·y − N(x·y)");
    let mut integral = CheckRecord::new(
        "integral-condition",
        "Nω(x,y) = ω'(x,N(y)) + ω'(N(x),y) + N(x)·N(y)",
    );
    let mut image = CheckRecord::new("omega-prime-on-image", "ω'(N(x),N(y)) = 0");
    let mut image_sym = CheckRecord::new("sigma-prime-on-image", "σ_ω'∘N = 0");
    let mut anchor = CheckRecord::new("anchor-relation", "σ_ω − σ_ω' = a∘N");
    for i in 0..r {
        for j in 0..r {
            exact.expect_eq(label(&[i, j]), &diff.value(&[i], j), &dn.value(&[i], j));
            let lhs = w.value(&[i], j).transform(n);
            let mut rhs = ev(w2, &e[i], &ne[j]);
            rhs.add_assign(&ev(w2, &ne[i], &e[j]));
            rhs.add_assign(&a.mult(&ne[i], &ne[j]));
            integral.expect_eq(label(&[i, j]), &lhs, &rhs);
            image.expect_eq(
                label(&[i, j]),
                &ev(w2, &ne[i], &ne[j]),
                &Section::zero(a.ring(), r),
            );
        }
        image_sym.expect_eq(
            label(&[i]),
            &w2.symbol_eval(std::slice::from_ref(&ne[i]))?,
            &VectorField::zero(a.ring()),
        );
        anchor.expect_eq(label(&[i]), &diff.symbol(&[i]), &a.anchor_of(&ne[i]));
    }

    // The anchor relation follows from the exactness equation read as an
    // identity of multiderivations, since σ of d_def N is a∘N.
    let mut implied = CheckRecord::new(
        "anchor-relation-implied",
        "ω − ω' = d_def N as multiderivations ⇒ σ_ω − σ_ω' = a∘N",
    );
    for i in 0..r {
        implied.expect_eq(
            format!("σ of d_def N at {}", label(&[i])),
            &dn.symbol(&[i]),
            &a.anchor_of(&ne[i]),
        );
    }
    if exact.passed() && diff == dn && !anchor.passed() {
        implied.fail("implication", "exactness holds", "anchor relation fails");
    }

    for rec in [exact, integral, image, image_sym, anchor, implied] {
        report.push(rec);
    }
    Ok(report)
}

/// Whether a Nijenhuis operator on A is also one on the sub-adjacent Lie
/// algebroid.
pub fn lie_nijenhuis_implied(a: &LSAlgebroid, n: &PolyMatrix) -> Result<bool> {
    if !check_nijenhuis(a, n)? {
        return Ok(true);
    }
    check_lie_nijenhuis(&a.commutator_algebroid(), n)
}
