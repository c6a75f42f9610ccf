//! The JSON instance format.
//!
//! Every polynomial is a string in the coordinates of the file. Frame
//! indices inside `cochains` are 1-based, matching the `e1, e2, …` labels
//! printed in reports.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use lsakit::cohomology::{MultiDerivation, RepCochain};
use lsakit::constructions::BilinearForm;
use lsakit::polyring::parse_poly_with;
use lsakit::{Anchored, LSAlgebroid, Poly, PolyMatrix, Representation, Ring, Section, VectorField};
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::error::CliError;

/// Largest total degree accepted in instance polynomials.
pub const MAX_DEGREE: u32 = 16;

type Table<T> = Vec<T>;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    name: Option<String>,
    #[allow(dead_code)]
    description: Option<String>,
    coordinates: Vec<String>,
    rank: usize,
    structure: Table<Table<Table<String>>>,
    anchor: Table<Table<String>>,
    representation: Option<RawRepresentation>,
    bilinear_form: Option<Table<Table<String>>>,
    #[serde(default)]
    endomorphisms: BTreeMap<String, Table<Table<String>>>,
    kernel_frame: Option<Table<Table<String>>>,
    #[serde(default)]
    deformations: BTreeMap<String, RawDeformation>,
    #[serde(default)]
    cochains: BTreeMap<String, RawCochain>,
    action: Option<RawAction>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRepresentation {
    rank: usize,
    rho: Table<Table<Table<String>>>,
    /// Omitted means μ = 0.
    mu: Option<Table<Table<Table<String>>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDeformation {
    /// omega[i][j] = ω(e_i, e_j).
    omega: Table<Table<Table<String>>>,
    /// sigma[i] = σ_ω(e_i).
    sigma: Table<Table<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCochain {
    degree: usize,
    #[serde(default)]
    components: Vec<RawComponent>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComponent {
    args: Vec<usize>,
    value: Table<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAction {
    coordinates: Vec<String>,
    fields: Table<Table<String>>,
}

/// Role of a named endomorphism, read from the part of its name before
/// the first underscore.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// Nijenhuis candidate N: A → A.
    Nijenhuis,
    /// Paracomplex candidate P on the sub-adjacent Lie algebroid.
    Paracomplex,
    /// Complex candidate J on the sub-adjacent Lie algebroid.
    Complex,
    /// O-operator candidate T: E → A.
    OOperator,
    /// Automorphism candidate φ: A → A.
    Automorphism,
}

impl Role {
    fn of(name: &str) -> Option<Role> {
        match name.split('_').next().unwrap_or(name) {
            "N" => Some(Role::Nijenhuis),
            "P" => Some(Role::Paracomplex),
            "J" => Some(Role::Complex),
            "T" => Some(Role::OOperator),
            "phi" => Some(Role::Automorphism),
            _ => None,
        }
    }
}

/// A cochain of the representation complex; degree 0 is a section of E.
#[derive(Debug, Clone)]
pub enum Cochain {
    Section(Section),
    Form(RepCochain),
}

#[derive(Debug, Clone)]
pub struct Endomorphism {
    pub role: Role,
    pub matrix: PolyMatrix,
}

#[derive(Debug, Clone)]
pub struct Action {
    pub ring: Ring,
    pub fields: Vec<VectorField>,
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    /// File name without directories.
    pub file: String,
    /// Hex SHA-256 of the file bytes.
    pub digest: String,
    pub algebroid: LSAlgebroid,
    pub representation: Option<Representation>,
    pub bilinear_form: Option<BilinearForm>,
    pub endomorphisms: BTreeMap<String, Endomorphism>,
    pub kernel_frame: Option<Vec<Section>>,
    pub deformations: BTreeMap<String, MultiDerivation>,
    pub cochains: BTreeMap<String, Cochain>,
    pub action: Option<Action>,
}

impl Instance {
    pub fn ring(&self) -> &Ring {
        self.algebroid.ring()
    }
}

pub fn parse_instance(path: &Path) -> Result<Instance, CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let file = path
        .file_name()
        .map(|f| f.to_string_lossy().into_owned())
        .unwrap_or_default();
    parse_instance_bytes(&bytes, &file)
}

/// Parses an instance from its bytes; `file` names it in the report.
pub fn parse_instance_bytes(bytes: &[u8], file: &str) -> Result<Instance, CliError> {
    let digest = hex(&Sha256::digest(bytes));
    let mut de = serde_json::Deserializer::from_slice(bytes);
    let raw: RawInstance = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if inner.is_syntax() || inner.is_eof() {
            CliError::Json {
                line: inner.line(),
                column: inner.column(),
                message: strip_location(&inner.to_string()),
            }
        } else {
            CliError::Schema {
                path: json_path(&path),
                message: strip_location(&inner.to_string()),
            }
        }
    })?;
    let name = raw
        .name
        .clone()
        .unwrap_or_else(|| file.trim_end_matches(".json").to_string());
    Builder.build(raw, name, file.to_string(), digest)
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn json_path(p: &str) -> String {
    if p == "." || p.is_empty() {
        "$".into()
    } else {
        format!("$.{p}")
    }
}

/// serde_json appends " at line L column C"; the JSON path replaces it.
fn strip_location(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Schema {
        path: path.into(),
        message: message.into(),
    }
}

#[derive(Default)]
struct Builder;

impl Builder {
    fn build(
        &self,
        raw: RawInstance,
        name: String,
        file: String,
        digest: String,
    ) -> Result<Instance, CliError> {
        let ring = coordinates(&raw.coordinates, "$.coordinates")?;
        let r = raw.rank;
        let n = ring.nvars();

        expect_len("$.structure", raw.structure.len(), r)?;
        let mut products = Vec::with_capacity(r);
        for (i, row) in raw.structure.iter().enumerate() {
            let p = format!("$.structure[{i}]");
            expect_len(&p, row.len(), r)?;
            let mut out = Vec::with_capacity(r);
            for (j, v) in row.iter().enumerate() {
                out.push(section(&ring, v, r, &format!("{p}[{j}]"))?);
            }
            products.push(out);
        }
        expect_len("$.anchor", raw.anchor.len(), r)?;
        let anchors = raw
            .anchor
            .iter()
            .enumerate()
            .map(|(i, v)| field(&ring, v, n, &format!("$.anchor[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let algebroid =
            LSAlgebroid::new(&ring, products, anchors).map_err(|e| schema("$", e.to_string()))?;

        let representation = match &raw.representation {
            None => None,
            Some(rep) => Some(representation(&ring, r, rep)?),
        };
        let s = representation.as_ref().map(Representation::rank);

        let bilinear_form = match &raw.bilinear_form {
            None => None,
            Some(m) => {
                let m = matrix(&ring, m, r, r, "$.bilinear_form")?;
                Some(BilinearForm::new(m).map_err(|e| schema("$.bilinear_form", e.to_string()))?)
            }
        };

        let mut endomorphisms = BTreeMap::new();
        for (key, m) in &raw.endomorphisms {
            let p = format!("$.endomorphisms.{key}");
            let role = Role::of(key).ok_or_else(|| {
                schema(
                    &p,
                    "name must start with N, P, J, T or phi (optionally followed by `_suffix`)",
                )
            })?;
            let cols = match role {
                Role::OOperator => {
                    s.ok_or_else(|| schema(&p, "an O-operator needs a representation block"))?
                }
                _ => r,
            };
            endomorphisms.insert(
                key.clone(),
                Endomorphism {
                    role,
                    matrix: matrix(&ring, m, r, cols, &p)?,
                },
            );
        }

        let kernel_frame = match &raw.kernel_frame {
            None => None,
            Some(frame) => Some(
                frame
                    .iter()
                    .enumerate()
                    .map(|(i, v)| section(&ring, v, r, &format!("$.kernel_frame[{i}]")))
                    .collect::<Result<Vec<_>, _>>()?,
            ),
        };

        let mut deformations = BTreeMap::new();
        for (key, d) in &raw.deformations {
            let p = format!("$.deformations.{key}");
            deformations.insert(key.clone(), deformation(&ring, r, d, &p)?);
        }

        let mut cochains = BTreeMap::new();
        for (key, c) in &raw.cochains {
            let p = format!("$.cochains.{key}");
            let s = s.ok_or_else(|| schema(&p, "cochains need a representation block"))?;
            cochains.insert(key.clone(), cochain(&ring, r, s, c, &p)?);
        }

        let action = match &raw.action {
            None => None,
            Some(act) => {
                let aring = coordinates(&act.coordinates, "$.action.coordinates")?;
                expect_len("$.action.fields", act.fields.len(), r)?;
                let fields = act
                    .fields
                    .iter()
                    .enumerate()
                    .map(|(i, v)| field(&aring, v, aring.nvars(), &format!("$.action.fields[{i}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                Some(Action {
                    ring: aring,
                    fields,
                })
            }
        };

        Ok(Instance {
            name,
            file,
            digest,
            algebroid,
            representation,
            bilinear_form,
            endomorphisms,
            kernel_frame,
            deformations,
            cochains,
            action,
        })
    }
}

fn coordinates(names: &[String], path: &str) -> Result<Ring, CliError> {
    Ring::new(names).map_err(|e| match e {
        lsakit::Error::Schema { message, .. } => schema(path, message),
        other => schema(path, other.to_string()),
    })
}

fn expect_len(path: &str, got: usize, want: usize) -> Result<(), CliError> {
    if got == want {
        Ok(())
    } else {
        Err(schema(
            path,
            format!("expected {want} entries, found {got}"),
        ))
    }
}

fn poly(ring: &Ring, text: &str, path: &str) -> Result<Poly, CliError> {
    parse_poly_with(text, ring, MAX_DEGREE).map_err(|e| match e {
        lsakit::Error::Syntax {
            position,
            expected,
            found,
        } => CliError::Syntax {
            path: path.to_string(),
            position,
            message: format!("expected {expected}, found {found}"),
        },
        lsakit::Error::UnknownVariable { name, position } => CliError::Syntax {
            path: path.to_string(),
            position,
            message: format!("unknown variable `{name}`"),
        },
        other => schema(path, other.to_string()),
    })
}

fn polys(ring: &Ring, v: &[String], len: usize, path: &str) -> Result<Vec<Poly>, CliError> {
    expect_len(path, v.len(), len)?;
    v.iter()
        .enumerate()
        .map(|(i, t)| poly(ring, t, &format!("{path}[{i}]")))
        .collect()
}

fn section(ring: &Ring, v: &[String], len: usize, path: &str) -> Result<Section, CliError> {
    Section::new(ring, polys(ring, v, len, path)?).map_err(|e| schema(path, e.to_string()))
}

fn field(ring: &Ring, v: &[String], len: usize, path: &str) -> Result<VectorField, CliError> {
    VectorField::new(ring, polys(ring, v, len, path)?).map_err(|e| schema(path, e.to_string()))
}

fn matrix(
    ring: &Ring,
    m: &[Vec<String>],
    rows: usize,
    cols: usize,
    path: &str,
) -> Result<PolyMatrix, CliError> {
    expect_len(path, m.len(), rows)?;
    let rows = m
        .iter()
        .enumerate()
        .map(|(i, row)| polys(ring, row, cols, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    if rows.is_empty() {
        return Ok(PolyMatrix::zero(ring, 0, cols));
    }
    PolyMatrix::from_rows(ring, rows).map_err(|e| schema(path, e.to_string()))
}

fn representation(
    ring: &Ring,
    r: usize,
    raw: &RawRepresentation,
) -> Result<Representation, CliError> {
    let s = raw.rank;
    let mats = |list: &[Vec<Vec<String>>], key: &str| -> Result<Vec<PolyMatrix>, CliError> {
        let p = format!("$.representation.{key}");
        expect_len(&p, list.len(), r)?;
        list.iter()
            .enumerate()
            .map(|(i, m)| matrix(ring, m, s, s, &format!("{p}[{i}]")))
            .collect()
    };
    let rho = mats(&raw.rho, "rho")?;
    let mu = match &raw.mu {
        Some(mu) => mats(mu, "mu")?,
        None => vec![PolyMatrix::zero(ring, s, s); r],
    };
    Representation::new(ring, r, s, rho, mu).map_err(|e| schema("$.representation", e.to_string()))
}

fn deformation(
    ring: &Ring,
    r: usize,
    raw: &RawDeformation,
    p: &str,
) -> Result<MultiDerivation, CliError> {
    let po = format!("{p}.omega");
    expect_len(&po, raw.omega.len(), r)?;
    let mut values = Vec::with_capacity(r);
    for (i, row) in raw.omega.iter().enumerate() {
        expect_len(&format!("{po}[{i}]"), row.len(), r)?;
        values.push(
            row.iter()
                .enumerate()
                .map(|(j, v)| section(ring, v, r, &format!("{po}[{i}][{j}]")))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    let ps = format!("{p}.sigma");
    expect_len(&ps, raw.sigma.len(), r)?;
    let symbol = raw
        .sigma
        .iter()
        .enumerate()
        .map(|(i, v)| field(ring, v, ring.nvars(), &format!("{ps}[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    MultiDerivation::degree2(ring, values, symbol).map_err(|e| schema(p, e.to_string()))
}

fn cochain(
    ring: &Ring,
    r: usize,
    s: usize,
    raw: &RawCochain,
    p: &str,
) -> Result<Cochain, CliError> {
    if raw.degree == 0 {
        let mut e = Section::zero(ring, s);
        for (idx, c) in raw.components.iter().enumerate() {
            let pc = format!("{p}.components[{idx}]");
            expect_len(&format!("{pc}.args"), c.args.len(), 0)?;
            e = e.add(&section(ring, &c.value, s, &format!("{pc}.value"))?);
        }
        return Ok(Cochain::Section(e));
    }
    let mut w = RepCochain::zero(ring, r, s, raw.degree);
    let mut seen = BTreeSet::new();
    for (idx, c) in raw.components.iter().enumerate() {
        let pc = format!("{p}.components[{idx}]");
        let pa = format!("{pc}.args");
        expect_len(&pa, c.args.len(), raw.degree)?;
        if let Some(&bad) = c.args.iter().find(|&&i| i == 0 || i > r) {
            return Err(schema(&pa, format!("frame index {bad} outside 1..={r}")));
        }
        let args: Vec<usize> = c.args.iter().map(|i| i - 1).collect();
        let (skew, last) = args.split_at(raw.degree - 1);
        let mut key = skew.to_vec();
        key.sort_unstable();
        if key.windows(2).any(|w| w[0] == w[1]) {
            return Err(schema(&pa, "repeated index in the alternating slots"));
        }
        key.push(last[0]);
        if !seen.insert(key) {
            return Err(schema(&pa, "component already given in another order"));
        }
        let v = section(ring, &c.value, s, &format!("{pc}.value"))?;
        w.set(skew, last[0], v)
            .map_err(|e| schema(&pc, e.to_string()))?;
    }
    Ok(Cochain::Form(w))
}
