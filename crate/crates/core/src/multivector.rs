//! Multivector fields Γ(Λ^• A) with the extended product ·_S, its graded
//! commutator and the graded Lie-admissibility identity.
//!
//! A multivector is a map from strictly increasing index tuples to
//! coefficients. On decomposables
//!
//! ```text
//! (f e_I)·(g e_J) = f (e_I·g) ∧ e_J + f g (e_I·e_J)
//! e_I·g   = Σ_p (−1)^{k−p} a(e_{i_p})(g) e_{I∖i_p}
//! e_I·e_J = Σ_{p,q} (−1)^{p+q} (e_{i_p}·e_{j_q}) ∧ e_{I∖i_p} ∧ e_{J∖j_q}
//! ```
//!
//! and a function on the left gives zero.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebroid::{increasing_tuples, sort_with_sign, Anchored, LSAlgebroid, Section};
use crate::error::{Error, Result};
use crate::polyring::{Poly, Ring};
use crate::random::random_poly;
use crate::report::{CheckRecord, Report};

#[derive(Clone, PartialEq, Eq)]
pub struct Multivector {
    ring: Ring,
    rank: usize,
    comps: BTreeMap<Vec<usize>, Poly>,
}

fn sign(negative: bool) -> i64 {
    if negative {
        -1
    } else {
        1
    }
}

fn parity(n: usize) -> bool {
    n % 2 == 1
}

impl Multivector {
    pub fn zero(ring: &Ring, rank: usize) -> Self {
        Multivector {
            ring: ring.clone(),
            rank,
            comps: BTreeMap::new(),
        }
    }

    /// A function, as a grade-0 multivector.
    pub fn function(f: Poly, rank: usize) -> Self {
        let mut m = Self::zero(f.ring(), rank);
        m.add_term(Vec::new(), f);
        m
    }

    pub fn from_section(s: &Section) -> Self {
        let mut m = Self::zero(s.ring(), s.rank());
        for (i, c) in s.comps().iter().enumerate() {
            m.add_term(vec![i], c.clone());
        }
        m
    }

    /// f · e_{i1} ∧ … ∧ e_{ik}, in any index order.
    pub fn wedge_of(ring: &Ring, rank: usize, indices: &[usize], f: Poly) -> Result<Self> {
        if let Some(&i) = indices.iter().find(|&&i| i >= rank) {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: rank,
            });
        }
        let mut m = Self::zero(ring, rank);
        m.add_term(indices.to_vec(), f);
        Ok(m)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Poly)> {
        self.comps.iter()
    }

    pub fn coeff(&self, indices: &[usize]) -> Poly {
        self.comps
            .get(indices)
            .cloned()
            .unwrap_or_else(|| Poly::zero(&self.ring))
    }

    /// The grade, if the multivector is nonzero and homogeneous.
    pub fn grade(&self) -> Option<usize> {
        let mut grades = self.comps.keys().map(Vec::len);
        let g = grades.next()?;
        grades.all(|h| h == g).then_some(g)
    }

    pub fn homogeneous_part(&self, k: usize) -> Multivector {
        Multivector {
            ring: self.ring.clone(),
            rank: self.rank,
            comps: self
                .comps
                .iter()
                .filter(|(key, _)| key.len() == k)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    fn parts(&self) -> Vec<(usize, Multivector)> {
        let mut grades: Vec<usize> = self.comps.keys().map(Vec::len).collect();
        grades.sort_unstable();
        grades.dedup();
        grades
            .into_iter()
            .map(|k| (k, self.homogeneous_part(k)))
            .collect()
    }

    /// Adds f·e_{indices}, normalizing the index order.
    fn add_term(&mut self, mut indices: Vec<usize>, f: Poly) {
        if f.is_zero() {
            return;
        }
        let Some(neg) = sort_with_sign(&mut indices) else {
            return;
        };
        let f = if neg { -f } else { f };
        match self.comps.get_mut(&indices) {
            Some(c) => {
                *c += f;
                if c.is_zero() {
                    self.comps.remove(&indices);
                }
            }
            None => {
                self.comps.insert(indices, f);
            }
        }
    }

    fn check(&self, other: &Multivector) -> Result<()> {
        if self.rank != other.rank || self.ring != other.ring {
            return Err(Error::DimensionMismatch(
                "multivectors over different bundles".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Multivector) -> Multivector {
        let mut out = self.clone();
        for (k, v) in &other.comps {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Multivector) -> Multivector {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Multivector {
        self.scale_int(-1)
    }

    pub fn scale(&self, f: &Poly) -> Multivector {
        let mut out = Self::zero(&self.ring, self.rank);
        for (k, v) in &self.comps {
            out.add_term(k.clone(), v * f);
        }
        out
    }

    fn scale_int(&self, n: i64) -> Multivector {
        self.scale(&Poly::from_int(&self.ring, n))
    }

    pub fn wedge(&self, other: &Multivector) -> Result<Multivector> {
        self.check(other)?;
        let mut out = Self::zero(&self.ring, self.rank);
        for (i, f) in &self.comps {
            for (j, g) in &other.comps {
                let mut idx = i.clone();
                idx.extend_from_slice(j);
                out.add_term(idx, f * g);
            }
        }
        Ok(out)
    }

    pub fn embed(&self, target: &Ring) -> Result<Multivector> {
        let mut out = Self::zero(target, self.rank);
        for (k, v) in &self.comps {
            out.add_term(k.clone(), v.embed(target)?);
        }
        Ok(out)
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, v) in &self.comps {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k.is_empty() {
                write!(f, "({v})")?;
            } else {
                let w: Vec<String> = k.iter().map(|i| format!("e{}", i + 1)).collect();
                write!(f, "({v})*{}", w.join("^"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector({self})")
    }
}

fn without(indices: &[usize], p: usize) -> Vec<usize> {
    indices
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != p)
        .map(|(_, &v)| v)
        .collect()
}

/// x ·_S y, extended bilinearly over homogeneous terms.
pub fn dot_s(a: &LSAlgebroid, x: &Multivector, y: &Multivector) -> Result<Multivector> {
    x.check(y)?;
    if x.rank != a.rank() || x.ring != *a.ring() {
        return Err(Error::DimensionMismatch(
            "multivector and algebroid differ".into(),
        ));
    }
    let mut out = Multivector::zero(&x.ring, x.rank);
    for (ii, f) in &x.comps {
        let k = ii.len();
        if k == 0 {
            continue;
        }
        for (jj, g) in &y.comps {
            // f (e_I · g) ∧ e_J
            for p in 0..k {
                let ag = a.anchor(ii[p]).act(g);
                if ag.is_zero() {
                    continue;
                }
                let mut idx = without(ii, p);
                idx.extend_from_slice(jj);
                let s = sign(parity(k - 1 - p));
                out.add_term(idx, (f * &ag).scale(&crate::polyring::rat(s, 1)));
            }
            // f g (e_I · e_J)
            if jj.is_empty() {
                continue;
            }
            let fg = f * g;
            for p in 0..k {
                for q in 0..jj.len() {
                    let c = a.product(ii[p], jj[q]);
                    let s = sign(parity(p + q));
                    for (m, cm) in c.comps().iter().enumerate() {
                        if cm.is_zero() {
                            continue;
                        }
                        let mut idx = vec![m];
                        idx.extend(without(ii, p));
                        idx.extend(without(jj, q));
                        out.add_term(idx, (&fg * cm).scale(&crate::polyring::rat(s, 1)));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The shifted-degree sign (−1)^{(|x|−1)(|y|−1)} for grades `gx`, `gy`.
fn shifted_sign(gx: usize, gy: usize) -> bool {
    // (k−1)(l−1) is odd iff both k and l are even.
    gx.is_multiple_of(2) && gy.is_multiple_of(2)
}

/// [x, y]_S = x·y − (−1)^{(|x|−1)(|y|−1)} y·x, bilinear over grades.
pub fn bracket_s(a: &LSAlgebroid, x: &Multivector, y: &Multivector) -> Result<Multivector> {
    let mut out = Multivector::zero(&x.ring, x.rank);
    for (gx, xp) in x.parts() {
        for (gy, yp) in y.parts() {
            let xy = dot_s(a, &xp, &yp)?;
            let yx = dot_s(a, &yp, &xp)?;
            out = if shifted_sign(gx, gy) {
                out.add(&xy).add(&yx)
            } else {
                out.add(&xy).sub(&yx)
            };
        }
    }
    Ok(out)
}

/// C(x,y,z) = (x·y)·z − x·(y·z).
pub fn s_associator(
    a: &LSAlgebroid,
    x: &Multivector,
    y: &Multivector,
    z: &Multivector,
) -> Result<Multivector> {
    Ok(dot_s(a, &dot_s(a, x, y)?, z)?.sub(&dot_s(a, x, &dot_s(a, y, z)?)?))
}

fn homogeneous_grade(m: &Multivector, what: &str) -> Result<usize> {
    if m.is_zero() {
        return Ok(0);
    }
    m.grade()
        .ok_or_else(|| Error::InvalidDegree(format!("{what} must be homogeneous")))
}

/// [x,y,z]_S = C(x,y,z) − (−1)^{σ(x)σ(y)} C(y,x,z) for homogeneous inputs.
pub fn triple_s(
    a: &LSAlgebroid,
    x: &Multivector,
    y: &Multivector,
    z: &Multivector,
) -> Result<Multivector> {
    let gx = homogeneous_grade(x, "x")?;
    let gy = homogeneous_grade(y, "y")?;
    let c1 = s_associator(a, x, y, z)?;
    let c2 = s_associator(a, y, x, z)?;
    Ok(if shifted_sign(gx, gy) {
        c1.add(&c2)
    } else {
        c1.sub(&c2)
    })
}

/// CI(x,y,z) = (−1)^{σxσz}[x,y,z] + (−1)^{σyσx}[y,z,x] + (−1)^{σzσy}[z,x,y].
pub fn graded_cyclic(
    a: &LSAlgebroid,
    x: &Multivector,
    y: &Multivector,
    z: &Multivector,
) -> Result<Multivector> {
    let gx = homogeneous_grade(x, "x")?;
    let gy = homogeneous_grade(y, "y")?;
    let gz = homogeneous_grade(z, "z")?;
    let signed = |m: Multivector, neg: bool| if neg { m.neg() } else { m };
    Ok(signed(triple_s(a, x, y, z)?, shifted_sign(gx, gz))
        .add(&signed(triple_s(a, y, z, x)?, shifted_sign(gy, gx)))
        .add(&signed(triple_s(a, z, x, y)?, shifted_sign(gz, gy))))
}

/// Which triples `check_graded_properties` enumerates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleSpec {
    /// Largest grade of a basis wedge (capped by the rank).
    pub max_grade: usize,
    /// Smallest grade; the graded Lie-admissible algebra starts at grade 1.
    pub min_grade: usize,
    /// Total degree of the random polynomial coefficients.
    pub coeff_degree: u32,
    /// Random coefficient draws per triple, besides the constant coefficient 1.
    pub coeff_draws: usize,
    pub seed: u64,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec {
            max_grade: 3,
            min_grade: 1,
            coeff_degree: 2,
            coeff_draws: 1,
            seed: 0,
        }
    }
}

/// All basis wedges with grade in the requested range.
pub fn basis_wedges(
    ring: &Ring,
    rank: usize,
    min_grade: usize,
    max_grade: usize,
) -> Vec<Multivector> {
    let mut out = Vec::new();
    for k in min_grade..=max_grade.min(rank) {
        for t in increasing_tuples(rank, k) {
            out.push(Multivector::wedge_of(ring, rank, &t, Poly::one(ring)).expect("in range"));
        }
    }
    out
}

fn label(m: &Multivector) -> String {
    m.to_string()
}

/// Graded Lie-admissibility CI = 0, the graded Leibniz rule and the graded
/// Jacobi identity of [·,·]_S on every triple of basis wedges, each once with
/// unit coefficients and `coeff_draws` times with seeded random coefficients.
pub fn check_graded_properties(a: &LSAlgebroid, spec: &SampleSpec) -> Report {
    let ring = a.ring().clone();
    let r = a.rank();
    let mut rng = crate::random::seeded(spec.seed);
    let basis = basis_wedges(&ring, r, spec.min_grade, spec.max_grade);
    let leibniz_basis = basis_wedges(&ring, r, 0, spec.max_grade);

    let mut ci = CheckRecord::new("graded-lie-admissible", "CI(x,y,z) = 0");
    let mut anti = CheckRecord::new(
        "sigma-antisymmetry",
        "[x,y,z]_S = −(−1)^{σ(x)σ(y)}[y,x,z]_S",
    );
    let mut jac = CheckRecord::new("graded-jacobi", "(−1)^{σxσz}[x,[y,z]] + cyclic = 0");
    let mut leib = CheckRecord::new(
        "graded-leibniz",
        "[x,y∧z] = [x,y]∧z + (−1)^{(|x|−1)|y|} y∧[x,z]",
    );
    let zero = Multivector::zero(&ring, r);

    let coeff = |rng: &mut rand_chacha::ChaCha8Rng, draw: usize| -> Poly {
        if draw == 0 || ring.nvars() == 0 {
            Poly::one(&ring)
        } else {
            let p = random_poly(rng, &ring, spec.coeff_degree, 3);
            if p.is_zero() {
                Poly::one(&ring)
            } else {
                p
            }
        }
    };
    let draws = if ring.nvars() == 0 {
        1
    } else {
        1 + spec.coeff_draws
    };

    for bx in &basis {
        for by in &basis {
            for bz in &basis {
                for draw in 0..draws {
                    let x = bx.scale(&coeff(&mut rng, draw));
                    let y = by.scale(&coeff(&mut rng, draw));
                    let z = bz.scale(&coeff(&mut rng, draw));
                    let id = format!("x = {}, y = {}, z = {}", label(&x), label(&y), label(&z));
                    let c = graded_cyclic(a, &x, &y, &z).expect("homogeneous");
                    ci.expect_eq(format!("CI: {id}"), &c, &zero);

                    let (gx, gy, gz) = (
                        bx.grade().unwrap(),
                        by.grade().unwrap(),
                        bz.grade().unwrap(),
                    );
                    let t1 = triple_s(a, &x, &y, &z).expect("homogeneous");
                    let t2 = triple_s(a, &y, &x, &z).expect("homogeneous");
                    let rhs = if shifted_sign(gx, gy) { t2 } else { t2.neg() };
                    anti.expect_eq(format!("antisymmetry: {id}"), &t1, &rhs);

                    let signed = |m: Multivector, neg: bool| if neg { m.neg() } else { m };
                    let br =
                        |u: &Multivector, v: &Multivector| bracket_s(a, u, v).expect("same bundle");
                    let j = signed(br(&x, &br(&y, &z)), shifted_sign(gx, gz))
                        .add(&signed(br(&y, &br(&z, &x)), shifted_sign(gy, gx)))
                        .add(&signed(br(&z, &br(&x, &y)), shifted_sign(gz, gy)));
                    jac.expect_eq(format!("Jacobi: {id}"), &j, &zero);
                }
            }
        }
    }

    for bx in &basis {
        for by in &leibniz_basis {
            for bz in &leibniz_basis {
                for draw in 0..draws {
                    let x = bx.scale(&coeff(&mut rng, draw));
                    let y = by.scale(&coeff(&mut rng, draw));
                    let z = bz.scale(&coeff(&mut rng, draw));
                    let gx = bx.grade().unwrap();
                    let gy = by.grade().unwrap();
                    let lhs = bracket_s(a, &x, &y.wedge(&z).unwrap()).unwrap();
                    let first = bracket_s(a, &x, &y).unwrap().wedge(&z).unwrap();
                    let second = y.wedge(&bracket_s(a, &x, &z).unwrap()).unwrap();
                    // (|x|−1)|y| ≡ (|x|+1)|y| mod 2
                    let neg = parity((gx + 1) * gy);
                    let rhs = if neg {
                        first.sub(&second)
                    } else {
                        first.add(&second)
                    };
                    leib.expect_eq(
                        format!("x = {}, y = {}, z = {}", label(&x), label(&y), label(&z)),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
    Report {
        records: vec![ci, anti, jac, leib],
    }
}
