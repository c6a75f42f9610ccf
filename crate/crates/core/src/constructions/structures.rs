//! Endomorphism concomitants and invariant bilinear forms.
//!
//! Every concomitant checked here is tensorial once the algebraic
//! condition on the endomorphism holds, so frame pairs are enough.

use crate::algebroid::{frame_label, Anchored, LSAlgebroid, LieAlgebroid, Section};
use crate::error::{Error, Result};
use crate::polyring::{Poly, PolyMatrix};
use crate::report::{CheckRecord, Report, Status};

fn require_endo<A: Anchored + ?Sized>(l: &A, m: &PolyMatrix) -> Result<()> {
    if m.rows() != l.rank() || m.cols() != l.rank() {
        return Err(Error::DimensionMismatch(format!(
            "endomorphism is {}x{}, algebroid has rank {}",
            m.rows(),
            m.cols(),
            l.rank()
        )));
    }
    if m.ring() != l.ring() {
        return Err(Error::DimensionMismatch(
            "endomorphism over another ring".into(),
        ));
    }
    Ok(())
}

fn square_record(name: &str, anchor: &str, m: &PolyMatrix, expected: &PolyMatrix) -> CheckRecord {
    let mut rec = CheckRecord::new(name, anchor);
    let sq = m.mul(m).expect("square");
    rec.expect_eq("M² on the frame", &sq, expected);
    rec
}

/// [Nx,Ny] = N([Nx,y] + [x,Ny] − N[x,y]).
pub fn lie_nijenhuis_report(l: &LieAlgebroid, n: &PolyMatrix) -> Result<Report> {
    require_endo(l, n)?;
    let r = l.rank();
    let e: Vec<Section> = (0..r).map(|i| l.basis(i)).collect();
    let ne: Vec<Section> = e.iter().map(|x| x.transform(n)).collect();
    let mut rec = CheckRecord::new("lie-nijenhuis", "[Nx,Ny] = N([Nx,y] + [x,Ny] − N[x,y])");
    for i in 0..r {
        for j in (i + 1)..r {
            let lhs = l.bracket(&ne[i], &ne[j]);
            let mut inner = l.bracket(&ne[i], &e[j]);
            inner.add_assign(&l.bracket(&e[i], &ne[j]));
            inner.sub_assign(&l.frame_bracket(i, j).transform(n));
            rec.expect_eq(
                format!("x = e{}, y = e{}", i + 1, j + 1),
                &lhs,
                &inner.transform(n),
            );
        }
    }
    Ok(Report::single(rec))
}

pub fn check_lie_nijenhuis(l: &LieAlgebroid, n: &PolyMatrix) -> Result<bool> {
    Ok(lie_nijenhuis_report(l, n)?.passed())
}

/// P² = id and P[x,y] = [Px,y] + [x,Py] − P[Px,Py].
pub fn paracomplex_report(l: &LieAlgebroid, p: &PolyMatrix) -> Result<Report> {
    require_endo(l, p)?;
    let r = l.rank();
    let id = PolyMatrix::identity(l.ring(), r);
    let mut report = Report::single(square_record("paracomplex-involution", "P² = id", p, &id));
    report.push(integrability(
        l,
        p,
        -1,
        "paracomplex-integrability",
        "P[x,y] = [Px,y] + [x,Py] − P[Px,Py]",
    ));
    Ok(report)
}

pub fn check_paracomplex(l: &LieAlgebroid, p: &PolyMatrix) -> Result<bool> {
    Ok(paracomplex_report(l, p)?.passed())
}

/// J² = −id and J[x,y] = [Jx,y] + [x,Jy] + J[Jx,Jy].
pub fn complex_report(l: &LieAlgebroid, j: &PolyMatrix) -> Result<Report> {
    require_endo(l, j)?;
    let r = l.rank();
    let minus_id = PolyMatrix::identity(l.ring(), r).neg();
    let mut report = Report::single(square_record("complex-square", "J² = −id", j, &minus_id));
    report.push(integrability(
        l,
        j,
        1,
        "complex-integrability",
        "J[x,y] = [Jx,y] + [x,Jy] + J[Jx,Jy]",
    ));
    Ok(report)
}

pub fn check_complex(l: &LieAlgebroid, j: &PolyMatrix) -> Result<bool> {
    Ok(complex_report(l, j)?.passed())
}

fn integrability(
    l: &LieAlgebroid,
    m: &PolyMatrix,
    sign: i64,
    name: &str,
    anchor: &str,
) -> CheckRecord {
    let r = l.rank();
    let e: Vec<Section> = (0..r).map(|i| l.basis(i)).collect();
    let me: Vec<Section> = e.iter().map(|x| x.transform(m)).collect();
    let mut rec = CheckRecord::new(name, anchor);
    for i in 0..r {
        for j in (i + 1)..r {
            let lhs = l.frame_bracket(i, j).transform(m);
            let mut rhs = l.bracket(&me[i], &e[j]);
            rhs.add_assign(&l.bracket(&e[i], &me[j]));
            let last = l.bracket(&me[i], &me[j]).transform(m);
            if sign > 0 {
                rhs.add_assign(&last);
            } else {
                rhs.sub_assign(&last);
            }
            rec.expect_eq(format!("x = e{}, y = e{}", i + 1, j + 1), &lhs, &rhs);
        }
    }
    rec
}

/// A symmetric bilinear form (x, y) = xᵀ B y on the frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    matrix: PolyMatrix,
}

impl BilinearForm {
    pub fn new(matrix: PolyMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        if matrix.transpose() != matrix {
            return Err(Error::NotQuadratic("bilinear form is not symmetric".into()));
        }
        Ok(BilinearForm { matrix })
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn eval(&self, x: &Section, y: &Section) -> Poly {
        let by = self.matrix.apply(y.comps()).expect("rank matches");
        let mut acc = Poly::zero(self.matrix.ring());
        for (a, b) in x.comps().iter().zip(&by) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc
    }
}

/// Definiteness of a constant symmetric matrix: `Some(true)` for positive,
/// `Some(false)` for negative, `None` otherwise. `Err` for non-constant input.
pub(crate) fn definiteness(m: &PolyMatrix) -> Option<Option<bool>> {
    let pos = m.is_positive_definite().ok()??;
    if pos {
        return Some(Some(true));
    }
    let neg = m.neg().is_positive_definite().ok()??;
    Some(if neg { Some(false) } else { None })
}

/// Invariance (x·y, z) + (y, x·z) = a(x)(y, z) on frame triples, plus
/// nondegeneracy and, for constant forms, positive-definiteness.
pub fn quadratic_report(a: &LSAlgebroid, b: &BilinearForm) -> Result<Report> {
    require_endo(a, b.matrix())?;
    let r = a.rank();
    let e: Vec<Section> = (0..r).map(|i| a.basis(i)).collect();
    let mut inv = CheckRecord::new("quadratic-invariance", "(x·y,z) + (y,x·z) = a(x)(y,z)");
    for i in 0..r {
        for j in 0..r {
            for k in j..r {
                let lhs = b.eval(a.product(i, j), &e[k]) + b.eval(&e[j], a.product(i, k));
                let rhs = a.anchor(i).act(b.matrix().get(j, k));
                inv.expect_eq(frame_label(&[i, j, k]), &lhs, &rhs);
            }
        }
    }
    let mut report = Report::single(inv);
    let det = b.matrix().determinant()?;
    let mut nondeg = CheckRecord::new("quadratic-nondegenerate", "det(B) is a nonzero constant");
    if det.is_zero() {
        nondeg.fail("det(B) ≠ 0", "0", "nonzero constant");
        report.push(nondeg);
    } else if !det.is_constant() {
        report.push(nondeg.uncertified(format!("det(B) = {det} is not constant")));
    } else {
        report.push(nondeg);
    }
    let riem = CheckRecord::new("riemannian", "B is positive definite");
    let riem = match b.matrix().is_positive_definite()? {
        Some(true) => riem,
        Some(false) => {
            let mut rec = riem;
            let minors: Vec<String> = b
                .matrix()
                .leading_minors()?
                .iter()
                .map(ToString::to_string)
                .collect();
            rec.fail(
                "leading principal minors > 0",
                format!("[{}]", minors.join(", ")),
                "all positive",
            );
            rec.with_note("the form is quadratic but not Riemannian")
        }
        None => riem.uncertified("positivity is only certified for constant forms"),
    };
    report.push(riem);
    Ok(report)
}

/// True iff the form is invariant and certifiably nondegenerate.
pub fn check_quadratic(a: &LSAlgebroid, b: &BilinearForm) -> Result<bool> {
    let report = quadratic_report(a, b)?;
    let nondeg = report
        .find("quadratic-nondegenerate")
        .expect("always present");
    if nondeg.status == Status::Uncertified {
        return Err(Error::NonConstantDeterminant(
            b.matrix().determinant()?.to_string(),
        ));
    }
    Ok(report
        .find("quadratic-invariance")
        .expect("always present")
        .passed()
        && nondeg.passed())
}

/// Quadratic Lie algebroid structure on K ⊂ ker(a): x·y + y·x = 0 on K, and
/// a(x)(y,z) = ([x,y],z) + (y,[x,z]) for frame x and y, z in the K frame.
pub fn quadratic_kernel_descend(
    a: &LSAlgebroid,
    b: &BilinearForm,
    k_frame: &[Section],
) -> Result<Report> {
    if !check_quadratic(a, b)? {
        return Err(Error::NotQuadratic(
            quadratic_report(a, b)?.failure_summary(),
        ));
    }
    for (idx, k) in k_frame.iter().enumerate() {
        if k.rank() != a.rank() || k.ring() != a.ring() {
            return Err(Error::DimensionMismatch(format!(
                "kernel frame section {} has the wrong shape",
                idx + 1
            )));
        }
        if !a.anchor_of(k).is_zero() {
            return Err(Error::FrameNotInKernel { index: idx });
        }
    }
    let g = a.commutator_algebroid();
    let zero = Section::zero(a.ring(), a.rank());
    let mut skew = CheckRecord::new("kernel-skew-product", "x·y + y·x = 0 on the kernel");
    for (p, x) in k_frame.iter().enumerate() {
        for (q, y) in k_frame.iter().enumerate().skip(p) {
            let s = a.mult(x, y).add(&a.mult(y, x));
            skew.expect_eq(
                format!("k{}·k{} + k{}·k{} = 0", p + 1, q + 1, q + 1, p + 1),
                &s,
                &zero,
            );
        }
    }
    let mut inv = CheckRecord::new(
        "kernel-ad-invariance",
        "a(x)(y,z) = ([x,y],z) + (y,[x,z]) on the kernel",
    );
    for i in 0..a.rank() {
        let x = a.basis(i);
        for (p, y) in k_frame.iter().enumerate() {
            for (q, z) in k_frame.iter().enumerate().skip(p) {
                let lhs = a.anchor(i).act(&b.eval(y, z));
                let rhs = b.eval(&g.bracket(&x, y), z) + b.eval(y, &g.bracket(&x, z));
                inv.expect_eq(
                    format!("x = e{}, y = k{}, z = k{}", i + 1, p + 1, q + 1),
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    Ok(Report {
        records: vec![skew, inv],
    })
}
