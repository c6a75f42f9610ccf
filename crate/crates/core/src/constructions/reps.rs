use crate::algebroid::{Anchored, LSAlgebroid, LieAlgebroid, Section};
use crate::error::{Error, Result};
use crate::polyring::{Poly, PolyMatrix, Ring};
use crate::report::{CheckRecord, Report};
use crate::representation::Representation;

fn require_compatible<A: Anchored + ?Sized>(algebroid: &A, rep: &Representation) -> Result<()> {
    if rep.base_rank() != algebroid.rank() {
        return Err(Error::DimensionMismatch(format!(
            "representation is indexed by {} frame sections, algebroid has rank {}",
            rep.base_rank(),
            algebroid.rank()
        )));
    }
    if rep.ring() != algebroid.ring() {
        return Err(Error::DimensionMismatch(
            "representation over another ring".into(),
        ));
    }
    Ok(())
}

/// ρ([e_i,e_j]) = [ρ(e_i), ρ(e_j)] as first-order operators, split into
/// the symbol part and the matrix part
/// `Σ_k b^k_ij R_k = a_i(R_j) − a_j(R_i) + [R_i, R_j]`.
pub fn representation_lie_report(l: &LieAlgebroid, rep: &Representation) -> Result<Report> {
    require_compatible(l, rep)?;
    let r = l.rank();
    let mut symbol = CheckRecord::new("rep-symbol", "ρ([x,y]) has symbol [a(x),a(y)]");
    let mut matrix = CheckRecord::new("rep-bracket", "ρ([x,y]) = [ρ(x),ρ(y)]");
    for i in 0..r {
        for j in (i + 1)..r {
            let b = l.frame_bracket(i, j);
            let lhs_sym = l.anchor_of(b);
            let rhs_sym = l.anchor(i).bracket(l.anchor(j)).expect("same ring");
            symbol.expect_eq(
                format!("a([e{0},e{1}]) = [a(e{0}),a(e{1})]", i + 1, j + 1),
                &lhs_sym,
                &rhs_sym,
            );
            let lhs = rep.rho_matrix_of(b);
            let ri = rep.rho_mat(i);
            let rj = rep.rho_mat(j);
            let rhs = rj
                .apply_field(l.anchor(i))?
                .sub(&ri.apply_field(l.anchor(j))?)?
                .add(&ri.mul(rj)?.sub(&rj.mul(ri)?)?)?;
            matrix.expect_eq(
                format!("ρ([e{0},e{1}]) = [ρ(e{0}),ρ(e{1})]", i + 1, j + 1),
                &lhs,
                &rhs,
            );
        }
    }
    Ok(Report {
        records: vec![symbol, matrix],
    })
}

pub fn check_representation_lie(l: &LieAlgebroid, rep: &Representation) -> Result<bool> {
    Ok(representation_lie_report(l, rep)?.passed())
}

/// The dual representation ρ* on E*, refusing inputs that are not representations.
pub fn dual_rep(l: &LieAlgebroid, rep: &Representation) -> Result<Representation> {
    let report = representation_lie_report(l, rep)?;
    if !report.passed() {
        return Err(Error::NotARepresentation(report.failure_summary()));
    }
    let dual = rep.dual();
    Ok(
        Representation::lie(rep.ring(), rep.rank(), dual.rho_mats().to_vec())
            .expect("shape inherited"),
    )
}

/// Representation conditions for (E; ρ, μ) over a left-symmetric algebroid:
/// ρ represents G(A), and on frames
/// `a_i(M_j) + R_i M_j − M_j R_i = Σ_k c^k_ij M_k − M_j M_i`.
pub fn representation_lsa_report(a: &LSAlgebroid, rep: &Representation) -> Result<Report> {
    require_compatible(a, rep)?;
    let mut report = representation_lie_report(&a.commutator_algebroid(), rep)?;
    let r = a.rank();
    let mut rec = CheckRecord::new(
        "rep-compatibility",
        "ρ(x)μ(y) − μ(y)ρ(x) = μ(x·y) − μ(y)μ(x)",
    );
    for i in 0..r {
        for j in 0..r {
            let ri = rep.rho_mat(i);
            let mi = rep.mu_mat(i);
            let mj = rep.mu_mat(j);
            let lhs = mj
                .apply_field(a.anchor(i))?
                .add(&ri.mul(mj)?.sub(&mj.mul(ri)?)?)?;
            let rhs = rep.mu_matrix_of(a.product(i, j)).sub(&mj.mul(mi)?)?;
            rec.expect_eq(format!("x = e{}, y = e{}", i + 1, j + 1), &lhs, &rhs);
        }
    }
    report.push(rec);
    Ok(report)
}

pub fn check_representation_lsa(a: &LSAlgebroid, rep: &Representation) -> Result<bool> {
    Ok(representation_lsa_report(a, rep)?.passed())
}

/// Whether μ(e_i)μ(e_j) = μ(e_j)μ(e_i) for all frame pairs.
pub fn mu_commutes(rep: &Representation) -> bool {
    let n = rep.base_rank();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            let a = rep.mu_mat(i).mul(rep.mu_mat(j)).expect("square");
            let b = rep.mu_mat(j).mul(rep.mu_mat(i)).expect("square");
            a == b
        })
    })
}

/// Representations derived from (E; ρ, μ).
#[derive(Debug, Clone)]
pub struct DerivedReps {
    /// (E; ρ − μ) as a representation of G(A), with zero μ.
    pub on_e: Representation,
    /// (E*; ρ* − μ*, −μ*).
    pub on_dual: Representation,
    /// (E; ρ−μ, −μ) is a representation, (E*; ρ*, μ*) is a representation,
    /// μ commutes. These three agree.
    pub equivalences: [bool; 3],
    pub report: Report,
}

pub fn derived_reps(a: &LSAlgebroid, rep: &Representation) -> Result<DerivedReps> {
    let base = representation_lsa_report(a, rep)?;
    if !base.passed() {
        return Err(Error::NotARepresentation(base.failure_summary()));
    }
    let g = a.commutator_algebroid();
    let minus = rep.shifted(-1, -1);
    let on_e = Representation::lie(rep.ring(), rep.rank(), minus.rho_mats().to_vec())
        .expect("shape inherited");
    let dual = rep.dual();
    let on_dual = dual.shifted(-1, -1);

    let mut report = Report::new();
    report.push(fold_report(
        "rho-minus-mu",
        "(E; ρ−μ) represents the sub-adjacent Lie algebroid",
        representation_lie_report(&g, &on_e)?,
    ));
    report.push(fold_report(
        "dual-derived",
        "(E*; ρ*−μ*, −μ*) is a representation",
        representation_lsa_report(a, &on_dual)?,
    ));

    let e1 = check_representation_lsa(a, &minus)?;
    let e2 = check_representation_lsa(a, &dual)?;
    let e3 = mu_commutes(rep);
    let mut rec = CheckRecord::new(
        "dual-equivalence",
        "(E;ρ−μ,−μ) rep ⇔ (E*;ρ*,μ*) rep ⇔ μ commutes",
    );
    rec.expect("the three conditions agree", e1 == e2 && e2 == e3, || {
        (format!("({e1}, {e2})"), format!("{e3}"))
    });
    report.push(rec.with_note(format!("conditions: {e1}, {e2}, {e3}")));
    Ok(DerivedReps {
        on_e,
        on_dual,
        equivalences: [e1, e2, e3],
        report,
    })
}

/// (A; L, R) with R the frame matrices of right multiplication, extended
/// C∞-linearly. A representation on point algebras; over a base it can fail.
pub fn left_right_candidate(a: &LSAlgebroid) -> Representation {
    let r = a.rank();
    Representation::new(
        a.ring(),
        r,
        r,
        (0..r).map(|i| a.left_mult_matrix(i)).collect(),
        (0..r).map(|i| a.right_mult_matrix(i)).collect(),
    )
    .expect("shape by construction")
}

/// Coordinates of sections of A in a frame of a subbundle K.
struct SubFrame {
    frame: Vec<Section>,
    rows: Vec<usize>,
    minor_inverse: PolyMatrix,
}

impl SubFrame {
    fn new(ring: &Ring, frame: &[Section], rank: usize) -> Result<Self> {
        let m = frame.len();
        if m > rank {
            return Err(Error::DimensionMismatch(format!(
                "{m} kernel frame sections in a rank-{rank} bundle"
            )));
        }
        let mut rows: Vec<usize> = (0..m).collect();
        loop {
            let entries = rows
                .iter()
                .map(|&row| frame.iter().map(|k| k.get(row).clone()).collect())
                .collect();
            let minor = PolyMatrix::from_rows(ring, entries)?;
            if let Ok(inv) = minor.inverse_adjugate() {
                return Ok(SubFrame {
                    frame: frame.to_vec(),
                    rows,
                    minor_inverse: inv,
                });
            }
            if !next_combination(&mut rows, rank) {
                return Err(Error::DimensionMismatch(
                    "kernel frame needs a square minor with nonzero constant determinant".into(),
                ));
            }
        }
    }

    /// Coefficients of `s` in the frame, or `None` if `s` leaves the subbundle.
    fn coords(&self, s: &Section) -> Option<Vec<Poly>> {
        let picked: Vec<Poly> = self.rows.iter().map(|&r| s.get(r).clone()).collect();
        let coeffs = self.minor_inverse.apply(&picked).expect("square");
        let mut rebuilt = Section::zero(s.ring(), s.rank());
        for (c, k) in coeffs.iter().zip(&self.frame) {
            rebuilt.add_scaled(c, k);
        }
        (rebuilt == *s).then_some(coeffs)
    }
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Builds the matrix of a frame-indexed operator on K from the images of the
/// K-frame, or reports the first image that leaves Γ(K).
fn matrix_on_frame(
    sub: &SubFrame,
    ring: &Ring,
    image: impl Fn(usize) -> Section,
) -> std::result::Result<PolyMatrix, (usize, Section)> {
    let m = sub.frame.len();
    let mut cols = Vec::with_capacity(m);
    for b in 0..m {
        let img = image(b);
        match sub.coords(&img) {
            Some(c) => cols.push(c),
            None => return Err((b, img)),
        }
    }
    Ok(PolyMatrix::from_columns(ring, m, &cols).expect("square"))
}

fn fold_report(name: &str, anchor: &str, inner: Report) -> CheckRecord {
    let mut rec = CheckRecord::new(name, anchor);
    for f in inner.failures() {
        for w in &f.witnesses {
            rec.fail(
                format!("{}: {}", f.name, w.identity),
                w.lhs.clone(),
                w.rhs.clone(),
            );
        }
    }
    rec
}

/// Candidate representations on a subbundle K ⊂ ker(a), given by a frame:
/// (K; ad, 0) and (K*; ad*, 0) always, and when K is an ideal also
/// (K; L, R) and (K*; ad*, −R*).
pub fn kernel_representations(a: &LSAlgebroid, k_frame: &[Section]) -> Result<Report> {
    let r = a.rank();
    let ring = a.ring();
    for (idx, k) in k_frame.iter().enumerate() {
        if k.rank() != r || k.ring() != ring {
            return Err(Error::DimensionMismatch(format!(
                "kernel frame section {} has the wrong shape",
                idx + 1
            )));
        }
        if !a.anchor_of(k).is_zero() {
            return Err(Error::FrameNotInKernel { index: idx });
        }
    }
    let mut report = Report::new();
    if k_frame.is_empty() {
        report.push(
            CheckRecord::new("kernel-empty", "no kernel frame supplied").with_note("vacuous"),
        );
        return Ok(report);
    }
    let sub = SubFrame::new(ring, k_frame, r)?;
    let g = a.commutator_algebroid();
    let m = k_frame.len();

    let mut ad = Vec::with_capacity(r);
    for i in 0..r {
        let mat = matrix_on_frame(&sub, ring, |b| g.bracket(&g.basis(i), &k_frame[b])).map_err(
            |(b, img)| {
                Error::NotAnIdeal(format!(
                    "[e{}, k{}] = {img} leaves the kernel frame",
                    i + 1,
                    b + 1
                ))
            },
        )?;
        ad.push(mat);
    }
    let ad_rep = Representation::lie(ring, m, ad)?;
    report.push(fold_report(
        "kernel-ad",
        "(K; ad, 0) is a representation",
        representation_lsa_report(a, &ad_rep)?,
    ));
    let ad_dual = Representation::lie(ring, m, ad_rep.dual().rho_mats().to_vec())?;
    report.push(fold_report(
        "kernel-ad-dual",
        "(K*; ad*, 0) is a representation",
        representation_lsa_report(a, &ad_dual)?,
    ));

    let mut ideal = CheckRecord::new("kernel-ideal", "x·k and k·x stay in Γ(K)");
    let mut left = Vec::with_capacity(r);
    let mut right = Vec::with_capacity(r);
    for i in 0..r {
        let e = a.basis(i);
        match matrix_on_frame(&sub, ring, |b| a.mult(&e, &k_frame[b])) {
            Ok(mat) => left.push(mat),
            Err((b, img)) => ideal.fail(
                format!("e{}·k{} ∈ Γ(K)", i + 1, b + 1),
                img.to_string(),
                "a section of K",
            ),
        }
        match matrix_on_frame(&sub, ring, |b| a.mult(&k_frame[b], &e)) {
            Ok(mat) => right.push(mat),
            Err((b, img)) => ideal.fail(
                format!("k{}·e{} ∈ Γ(K)", b + 1, i + 1),
                img.to_string(),
                "a section of K",
            ),
        }
    }
    let is_ideal = ideal.passed();
    report.push(ideal);
    if is_ideal {
        let lr = Representation::new(ring, r, m, left, right)?;
        report.push(fold_report(
            "kernel-left-right",
            "(K; L, R) is a representation",
            representation_lsa_report(a, &lr)?,
        ));
        let ad_star_minus_r = lr.dual().shifted(-1, -1);
        report.push(fold_report(
            "kernel-dual-ad-r",
            "(K*; ad*, −R*) is a representation",
            representation_lsa_report(a, &ad_star_minus_r)?,
        ));
    }
    Ok(report)
}
