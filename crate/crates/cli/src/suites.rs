//! The checks behind each subcommand. Library errors become failing
//! records so that one broken construction does not hide the others.

use lsakit::algebroid::{check_lie_admissible, lsa_homomorphism_report};
use lsakit::cohomology::{
    def_d, point_cohomology_dims, random_multiderivation, random_rep_cochain, rep_d, rep_d0,
    MultiDerivation, RepCochain,
};
use lsakit::constructions::{
    action_algebroid, apply_o_operator, build_complex_structure, build_phase_space,
    check_quadratic, complex_report, kernel_representations, o_operator_lift_report,
    paracomplex_report, phase_iso_from_lsa_iso, quadratic_report, representation_lie_report,
    representation_lsa_report, semidirect_lsa,
};
use lsakit::deformations::{
    check_deformation, check_equivalence, deformed_algebroid, lie_nijenhuis_implied,
    nijenhuis_report, trivial_deformation, Parameter,
};
use lsakit::multivector::{check_graded_properties, SampleSpec};
use lsakit::random::seeded;
use lsakit::{
    Anchored, CheckRecord, LSAlgebroid, LieAlgebroid, PolyMatrix, Report, Representation, Section,
};
use std::collections::BTreeSet;

use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::instance::{Cochain, Instance, Role};

/// Knobs shared by the subcommands.
#[derive(Debug, Clone)]
pub struct Options {
    pub seed: u64,
    /// Highest cohomological degree for `cohomology --point`.
    pub max_degree: usize,
    /// Random samples per degree for the d∘d = 0 checks.
    pub samples: usize,
    /// Also report the Nijenhuis condition in its printed form.
    pub paper_literal: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: 0,
            max_degree: 3,
            samples: 4,
            paper_literal: false,
        }
    }
}

/// Records plus any constructed objects.
#[derive(Debug, Default)]
pub struct Outcome {
    pub records: Vec<CheckRecord>,
    pub results: Map<String, Value>,
}

impl Outcome {
    fn add(&mut self, section: &str, report: Report) {
        for mut rec in report.records {
            rec.name = format!("{section}/{}", rec.name);
            self.records.push(rec);
        }
    }

    fn add_record(&mut self, section: &str, mut rec: CheckRecord) {
        rec.name = format!("{section}/{}", rec.name);
        self.records.push(rec);
    }

    fn error(&mut self, section: &str, what: &str, err: &lsakit::Error) {
        let mut rec = CheckRecord::new(format!("{section}/{what}"), "construction completes");
        rec.fail(what.to_string(), err.to_string(), "a result");
        self.records.push(rec);
    }

    /// Adds the report, or a failing record for the error.
    fn add_result(&mut self, section: &str, what: &str, report: lsakit::Result<Report>) -> bool {
        match report {
            Ok(r) => {
                let ok = r.passed();
                self.add(section, r);
                ok
            }
            Err(e) => {
                self.error(section, what, &e);
                false
            }
        }
    }

    fn flag(&mut self, section: &str, name: &str, anchor: &str, holds: lsakit::Result<bool>) {
        match holds {
            Ok(true) => self.add_record(section, CheckRecord::new(name, anchor)),
            Ok(false) => {
                let mut rec = CheckRecord::new(name, anchor);
                rec.fail(anchor.to_string(), "false", "true");
                self.add_record(section, rec);
            }
            Err(e) => self.error(section, name, &e),
        }
    }

    fn merge(&mut self, other: Outcome) {
        self.records.extend(other.records);
        self.results.extend(other.results);
    }
}

fn require<'a, T>(value: Option<&'a T>, what: &str) -> Result<&'a T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("the instance has no {what} block")))
}

// ---------------------------------------------------------------- check

pub fn check(inst: &Instance) -> Outcome {
    let mut out = Outcome::default();
    let a = &inst.algebroid;
    out.add("axioms", a.check_left_symmetric());
    if a.ring().nvars() == 0 {
        out.flag(
            "axioms",
            "lie-admissible",
            "commutator satisfies the Jacobi identity",
            check_lie_admissible(a),
        );
    }
    out
}

// ---------------------------------------------------------------- derive

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Derivation {
    SubAdjacent,
    PhaseSpace,
    Semidirect,
    Action,
}

pub fn derive(inst: &Instance, which: Derivation) -> Result<Outcome, CliError> {
    let a = &inst.algebroid;
    let mut out = Outcome::default();
    match which {
        Derivation::SubAdjacent => sub_adjacent(a, &mut out),
        Derivation::PhaseSpace => {
            phase_space(a, &mut out);
            if let Some(b) = &inst.bilinear_form {
                quadratic(a, b, &mut out);
            }
        }
        Derivation::Semidirect => {
            let rep = require(inst.representation.as_ref(), "representation")?;
            out.add_result(
                "representation",
                "representation",
                representation_lsa_report(a, rep),
            );
            match semidirect_lsa(a, rep) {
                Ok(s) => {
                    out.add("semidirect", s.check_left_symmetric());
                    out.results.insert("semidirect".into(), lsa_json(&s));
                }
                Err(e) => out.error("semidirect", "semidirect-product", &e),
            }
        }
        Derivation::Action => {
            let act = require(inst.action.as_ref(), "action")?;
            match action_algebroid(a, &act.fields, &act.ring) {
                Ok(s) => {
                    out.add("action", s.check_left_symmetric());
                    out.results.insert("action".into(), lsa_json(&s));
                }
                Err(e) => out.error("action", "action-algebroid", &e),
            }
        }
    }
    Ok(out)
}

fn sub_adjacent(a: &LSAlgebroid, out: &mut Outcome) {
    match a.sub_adjacent() {
        Ok(g) => {
            out.add("sub-adjacent", g.check_lie_algebroid());
            let rep = a.build_left_mult_rep().expect("left-symmetric");
            out.add_result(
                "left-multiplication",
                "representation",
                representation_lie_report(&g, &rep),
            );
            out.results.insert("sub_adjacent".into(), lie_json(&g));
        }
        Err(e) => out.error("sub-adjacent", "sub-adjacent", &e),
    }
}

fn phase_space(a: &LSAlgebroid, out: &mut Outcome) {
    match build_phase_space(a) {
        Ok(ps) => {
            out.add("phase-space", ps.report.clone());
            let p = ps.paracomplex();
            out.add_result(
                "paracomplex",
                "paracomplex",
                paracomplex_report(&ps.algebroid, &p),
            );
            out.results.insert(
                "phase_space".into(),
                json!({
                    "algebroid": lie_json(&ps.algebroid),
                    "omega": matrix_json(&ps.omega_matrix()),
                    "paracomplex": matrix_json(&p),
                }),
            );
        }
        Err(e) => out.error("phase-space", "phase-space", &e),
    }
}

fn quadratic(a: &LSAlgebroid, b: &lsakit::constructions::BilinearForm, out: &mut Outcome) {
    out.add_result("quadratic", "quadratic", quadratic_report(a, b));
    if !matches!(check_quadratic(a, b), Ok(true)) {
        return;
    }
    match build_complex_structure(a, b) {
        Ok(cs) => {
            out.add("complex-structure", cs.report);
            out.results
                .insert("complex_structure".into(), matrix_json(&cs.j));
        }
        Err(e) => out.error("complex-structure", "complex-structure", &e),
    }
}

// ---------------------------------------------------------------- cohomology

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CohomologyQuery {
    Point,
    Cocycle(String),
    Coboundary { cochain: String, primitive: String },
}

pub fn cohomology(
    inst: &Instance,
    query: &CohomologyQuery,
    opts: &Options,
) -> Result<Outcome, CliError> {
    let a = &inst.algebroid;
    let rep = require(inst.representation.as_ref(), "representation")?;
    let mut out = Outcome::default();
    if !out.add_result(
        "representation",
        "representation",
        representation_lsa_report(a, rep),
    ) {
        return Ok(out);
    }
    match query {
        CohomologyQuery::Point => point_cohomology(a, rep, opts.max_degree, &mut out),
        CohomologyQuery::Cocycle(name) => {
            let w = cochain(inst, name)?;
            let mut rec = CheckRecord::new("cocycle", format!("d{name} = 0"));
            match differential(a, rep, w) {
                Ok(dw) => zero_components(&mut rec, &format!("d{name}"), &dw),
                Err(e) => rec.fail("d is defined", e.to_string(), "a cochain"),
            }
            if let Cochain::Section(e) = w {
                let mut c0 = CheckRecord::new("c0-membership", "(ρ(x)ρ(y) − ρ(x·y))e = 0");
                c0.expect("e ∈ C^0", lsakit::cohomology::check_c0(a, rep, e), || {
                    ("outside C^0".into(), "in C^0".into())
                });
                out.add_record("cohomology", c0);
            }
            out.add_record("cohomology", rec);
        }
        CohomologyQuery::Coboundary {
            cochain: name,
            primitive,
        } => {
            let w = match cochain(inst, name)? {
                Cochain::Form(w) => w,
                Cochain::Section(_) => {
                    return Err(CliError::Usage(format!("cochain {name} has degree 0")))
                }
            };
            let eta = cochain(inst, primitive)?;
            let mut rec = CheckRecord::new("coboundary", format!("{name} = d{primitive}"));
            match differential(a, rep, eta) {
                Ok(d_eta) if d_eta.degree() != w.degree() => rec.fail(
                    "degrees",
                    format!("degree of d{primitive} is {}", d_eta.degree()),
                    format!("degree of {name} is {}", w.degree()),
                ),
                Ok(d_eta) => {
                    let keys: BTreeSet<&(Vec<usize>, usize)> = w
                        .components()
                        .chain(d_eta.components())
                        .map(|(k, _)| k)
                        .collect();
                    for key in keys {
                        let (l, r) = (w.component(&key.0, key.1), d_eta.component(&key.0, key.1));
                        if l != r {
                            rec.fail(component_label(name, key), l.to_string(), r.to_string());
                        }
                    }
                }
                Err(e) => rec.fail("d is defined", e.to_string(), "a cochain"),
            }
            out.add_record("cohomology", rec);
        }
    }
    Ok(out)
}

fn cochain<'a>(inst: &'a Instance, name: &str) -> Result<&'a Cochain, CliError> {
    inst.cochains
        .get(name)
        .ok_or_else(|| CliError::Usage(format!("no cochain named {name}")))
}

fn differential(a: &LSAlgebroid, rep: &Representation, w: &Cochain) -> lsakit::Result<RepCochain> {
    match w {
        Cochain::Section(e) => rep_d0(a, rep, e),
        Cochain::Form(w) => rep_d(a, rep, w),
    }
}

fn component_label(name: &str, key: &(Vec<usize>, usize)) -> String {
    let mut args: Vec<String> = key.0.iter().map(|i| format!("e{}", i + 1)).collect();
    args.push(format!("e{}", key.1 + 1));
    format!("{name}({})", args.join(","))
}

fn zero_components(rec: &mut CheckRecord, name: &str, w: &RepCochain) {
    for (key, value) in w.components() {
        rec.fail(component_label(name, key), value.to_string(), "0");
    }
}

fn point_cohomology(a: &LSAlgebroid, rep: &Representation, max_degree: usize, out: &mut Outcome) {
    match point_cohomology_dims(a, rep, max_degree) {
        Ok(pc) => {
            let mut rec = CheckRecord::new("rank-nullity", "dim C^k = dim Z^k + dim B^{k+1}");
            for pair in pc.degrees.windows(2) {
                let (lo, hi) = (&pair[0], &pair[1]);
                let lhs = lo.cocycle_dim + hi.coboundary_dim;
                rec.expect_eq(format!("k = {}", lo.k), &lhs, &lo.cochain_dim);
            }
            out.add_record("cohomology", rec);
            let degrees: Vec<Value> = pc
                .degrees
                .iter()
                .map(|d| {
                    json!({
                        "degree": d.k,
                        "cochains": d.cochain_dim,
                        "cocycles": d.cocycle_dim,
                        "coboundaries": d.coboundary_dim,
                        "cohomology": d.cohomology_dim,
                    })
                })
                .collect();
            out.results.insert(
                "point_cohomology".into(),
                json!({ "c0_dim": pc.c0_dim, "c0_kernel_dim": pc.c0_kernel_dim, "degrees": degrees }),
            );
        }
        Err(e) => out.error("cohomology", "point-cohomology", &e),
    }
}

// ---------------------------------------------------------------- deform

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeformQuery {
    Nijenhuis(String),
    Deformation(String),
    Equivalence {
        omega: String,
        omega_prime: String,
        n: String,
    },
}

pub fn deform(inst: &Instance, query: &DeformQuery, opts: &Options) -> Result<Outcome, CliError> {
    let a = &inst.algebroid;
    let mut out = Outcome::default();
    if !a.is_left_symmetric() {
        out.add("axioms", a.check_left_symmetric());
        return Ok(out);
    }
    match query {
        DeformQuery::Nijenhuis(name) => {
            nijenhuis(a, name, square(inst, name)?, opts.paper_literal, &mut out)
        }
        DeformQuery::Deformation(name) => {
            let w = resolve_deformation(inst, name)?;
            if out.add_result("deformation", "deformation", check_deformation(a, &w)) {
                out.results
                    .insert("deformation".into(), multiderivation_json(&w));
                if let Ok(at) = deformed_algebroid(a, &w, &Parameter::Formal) {
                    out.results.insert("deformed".into(), lsa_json(&at));
                }
            }
        }
        DeformQuery::Equivalence {
            omega,
            omega_prime,
            n,
        } => {
            let w = resolve_deformation(inst, omega)?;
            let w2 = resolve_deformation(inst, omega_prime)?;
            out.add_result(
                "equivalence",
                "equivalence",
                check_equivalence(a, &w, &w2, square(inst, n)?),
            );
        }
    }
    Ok(out)
}

fn square<'a>(inst: &'a Instance, name: &str) -> Result<&'a PolyMatrix, CliError> {
    match inst.endomorphisms.get(name) {
        Some(e) if e.role != Role::OOperator => Ok(&e.matrix),
        Some(_) => Err(CliError::Usage(format!(
            "{name} maps E to A, not A to itself"
        ))),
        None => Err(CliError::Usage(format!("no endomorphism named {name}"))),
    }
}

/// A named deformation, `zero`, or `trivial(N)` for d_def N.
fn resolve_deformation(inst: &Instance, name: &str) -> Result<MultiDerivation, CliError> {
    let a = &inst.algebroid;
    if let Some(w) = inst.deformations.get(name) {
        return Ok(w.clone());
    }
    if name == "zero" {
        return Ok(MultiDerivation::zero(a.ring(), a.rank(), 2).expect("degree 2"));
    }
    if let Some(inner) = name
        .strip_prefix("trivial(")
        .and_then(|s| s.strip_suffix(')'))
    {
        let n = square(inst, inner)?;
        let bm = MultiDerivation::bundle_map(n).map_err(|e| CliError::Usage(e.to_string()))?;
        return def_d(a, &bm).map_err(|e| CliError::Usage(e.to_string()));
    }
    Err(CliError::Usage(format!(
        "no deformation named {name} (use a name from the file, `zero` or `trivial(N)`)"
    )))
}

fn nijenhuis(a: &LSAlgebroid, name: &str, n: &PolyMatrix, paper_literal: bool, out: &mut Outcome) {
    let section = format!("endomorphism {name}");
    let report = match nijenhuis_report(a, n, paper_literal) {
        Ok(r) => r,
        Err(e) => return out.error(&section, "nijenhuis", &e),
    };
    let is_nijenhuis = report.find("nijenhuis").is_some_and(CheckRecord::passed);
    out.add(&section, report);
    if !is_nijenhuis {
        return;
    }
    out.flag(
        &section,
        "lie-nijenhuis-implied",
        "N is Nijenhuis on the sub-adjacent Lie algebroid",
        lie_nijenhuis_implied(a, n),
    );
    match trivial_deformation(a, n) {
        Ok((w, mut report)) => {
            report.records.retain(|r| !r.name.starts_with("nijenhuis"));
            out.add(&format!("{section}/trivial-deformation"), report);
            out.results.insert(
                format!("trivial_deformation({name})"),
                multiderivation_json(&w),
            );
        }
        Err(e) => out.error(&section, "trivial-deformation", &e),
    }
}

// ---------------------------------------------------------------- verify-all

/// Every check the instance supports, in a fixed order.
pub fn verify_all(inst: &Instance, opts: &Options) -> Outcome {
    let a = &inst.algebroid;
    let mut out = check(inst);
    if !a.is_left_symmetric() {
        return out;
    }
    sub_adjacent(a, &mut out);
    phase_space(a, &mut out);
    graded(a, opts, &mut out);
    complexes(inst, opts, &mut out);
    if let Some(rep) = &inst.representation {
        if out.add_result(
            "representation",
            "representation",
            representation_lsa_report(a, rep),
        ) && a.ring().nvars() == 0
        {
            point_cohomology(a, rep, opts.max_degree, &mut out);
        }
    }
    if let Some(b) = &inst.bilinear_form {
        quadratic(a, b, &mut out);
    }
    if let Some(frame) = &inst.kernel_frame {
        out.add_result(
            "kernel",
            "kernel-representations",
            kernel_representations(a, frame),
        );
    }
    for (name, e) in &inst.endomorphisms {
        endomorphism(inst, name, e.role, &e.matrix, opts, &mut out);
    }
    for (name, w) in &inst.deformations {
        out.add_result(
            &format!("deformation {name}"),
            "deformation",
            check_deformation(a, w),
        );
    }
    if let Some(rep) = &inst.representation {
        for (name, w) in &inst.cochains {
            if let Ok(dw) = differential(a, rep, w) {
                out.results
                    .insert(format!("cocycle({name})"), Value::Bool(dw.is_zero()));
            }
        }
    }
    if let Some(act) = &inst.action {
        match action_algebroid(a, &act.fields, &act.ring) {
            Ok(s) => out.add("action", s.check_left_symmetric()),
            Err(e) => out.error("action", "action-algebroid", &e),
        }
    }
    // Constructed objects belong to `derive` and `deform`; keep the summaries.
    out.results
        .retain(|k, _| k == "point_cohomology" || k.starts_with("cocycle("));
    out
}

fn graded(a: &LSAlgebroid, opts: &Options, out: &mut Outcome) {
    let spec = SampleSpec {
        max_grade: 3,
        min_grade: 1,
        coeff_degree: 2,
        coeff_draws: 1,
        seed: opts.seed,
    };
    out.add("graded", check_graded_properties(a, &spec));
}

/// d∘d = 0 on seeded random cochains: the representation complex of the
/// instance's representation (or of (A; L, 0) when none is given), and the
/// deformation complex on values and symbols.
fn complexes(inst: &Instance, opts: &Options, out: &mut Outcome) {
    let a = &inst.algebroid;
    let ring = a.ring();
    let r = a.rank();
    let mut rng = seeded(opts.seed);

    let (rep, which) = match &inst.representation {
        Some(rep) if matches!(representation_lsa_report(a, rep), Ok(ref rp) if rp.passed()) => {
            (rep.clone(), "the given representation")
        }
        _ => (
            a.build_left_mult_rep().expect("left-symmetric"),
            "(A; L, 0)",
        ),
    };
    let mut rec = CheckRecord::new("rep-d-squared", "d∘d = 0 on C^k(A;E), k = 1, 2, 3")
        .with_note(format!("over {which}"));
    for k in 1..=3usize {
        if k - 1 > r {
            break;
        }
        for sample in 0..opts.samples {
            let w = random_rep_cochain(&mut rng, ring, r, rep.rank(), k, 2);
            match rep_d(a, &rep, &w).and_then(|dw| rep_d(a, &rep, &dw)) {
                Ok(ddw) => {
                    if !ddw.is_zero() {
                        rec.fail(
                            format!("dd of sample {sample} in degree {k}"),
                            ddw.to_string(),
                            "0",
                        );
                    }
                }
                Err(e) => rec.fail(format!("sample {sample} in degree {k}"), e.to_string(), "0"),
            }
        }
    }
    out.add_record("complex", rec);

    let mut rec = CheckRecord::new(
        "def-d-squared",
        "d_def∘d_def = 0 on values and symbols, degrees 1, 2",
    );
    for k in 1..=2usize {
        for sample in 0..opts.samples {
            let dd = random_multiderivation(&mut rng, ring, r, k, 2)
                .and_then(|w| def_d(a, &w))
                .and_then(|dw| def_d(a, &dw));
            match dd {
                Ok(dd) if dd.is_zero() => {}
                Ok(dd) => rec.fail(
                    format!("dd of sample {sample} in degree {k}"),
                    dd.to_string(),
                    "0",
                ),
                Err(e) => rec.fail(format!("sample {sample} in degree {k}"), e.to_string(), "0"),
            }
        }
    }
    out.add_record("complex", rec);
}

fn endomorphism(
    inst: &Instance,
    name: &str,
    role: Role,
    m: &PolyMatrix,
    opts: &Options,
    out: &mut Outcome,
) {
    let a = &inst.algebroid;
    let section = format!("endomorphism {name}");
    let g = a.commutator_algebroid();
    match role {
        Role::Nijenhuis => {
            let mut sub = Outcome::default();
            nijenhuis(a, name, m, opts.paper_literal, &mut sub);
            out.merge(sub);
        }
        Role::Paracomplex => {
            out.add_result(&section, "paracomplex", paracomplex_report(&g, m));
        }
        Role::Complex => {
            out.add_result(&section, "complex", complex_report(&g, m));
        }
        Role::OOperator => {
            let rep = inst
                .representation
                .as_ref()
                .expect("validated at parse time");
            match apply_o_operator(&g, rep, m) {
                Ok(o) => {
                    out.add(&section, o.report);
                    out.add_result(
                        &section,
                        "lift",
                        o_operator_lift_report(&g, rep, m).map(|r| {
                            let mut r = r;
                            for rec in &mut r.records {
                                rec.name = format!("lift-{}", rec.name);
                            }
                            r
                        }),
                    );
                }
                Err(e) => out.error(&section, "o-operator", &e),
            }
        }
        Role::Automorphism => {
            out.add_result(&section, "homomorphism", lsa_homomorphism_report(a, a, m));
            match phase_iso_from_lsa_iso(a, a, m) {
                Ok(iso) => out.add(&section, iso.report),
                Err(e) => out.error(&section, "phase-isomorphism", &e),
            }
        }
    }
}

// ---------------------------------------------------------------- JSON views

pub fn matrix_json(m: &PolyMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array(
                    m.row(i)
                        .iter()
                        .map(|p| Value::String(p.to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn section_json(s: &Section) -> Value {
    Value::Array(
        s.comps()
            .iter()
            .map(|p| Value::String(p.to_string()))
            .collect(),
    )
}

fn anchors_json<A: Anchored + ?Sized>(a: &A) -> Value {
    Value::Array(
        a.anchors()
            .iter()
            .map(|f| {
                Value::Array(
                    f.components()
                        .iter()
                        .map(|p| Value::String(p.to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}

/// The structure in the instance file format, so it can be fed back in.
pub fn lsa_json(a: &LSAlgebroid) -> Value {
    json!({
        "coordinates": a.ring().names(),
        "rank": a.rank(),
        "structure": a.products().iter().map(|row| row.iter().map(section_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "anchor": anchors_json(a),
    })
}

pub fn lie_json(l: &LieAlgebroid) -> Value {
    json!({
        "coordinates": l.ring().names(),
        "rank": l.rank(),
        "bracket": l.brackets().iter().map(|row| row.iter().map(section_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "anchor": anchors_json(l),
    })
}

/// A degree-2 multiderivation in the `deformations` format.
pub fn multiderivation_json(w: &MultiDerivation) -> Value {
    let r = w.rank();
    let omega: Vec<Vec<Value>> = (0..r)
        .map(|i| (0..r).map(|j| section_json(&w.value(&[i], j))).collect())
        .collect();
    let sigma: Vec<Value> = (0..r)
        .map(|i| {
            Value::Array(
                w.symbol(&[i])
                    .components()
                    .iter()
                    .map(|p| Value::String(p.to_string()))
                    .collect(),
            )
        })
        .collect();
    json!({ "omega": omega, "sigma": sigma })
}
