//! Instance files: a JSON description of a Hopf algebra and optionally a
//! crossed product or cleft extension over it, with the dual subalgebras
//! to test.
//!
//! Scalars are strings: decimal integers, `"p/q"` rationals, or residues.
//! Structure constants are quadruples `[i, j, k, "c"]`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::actions::{ComoduleAlgebraData, WeakActionData};
use crate::algebra::AlgebraData;
use crate::coalgebra::CoalgebraData;
use crate::error::{Error, Result};
use crate::hopf::{compute_twisted_antipode, BialgebraData, HopfData};
use crate::linalg::{FreeModule, LinearMap};
use crate::ring::{nonzeros, RingSpec, Scalar, Vector};
use crate::smash::{Side, SubalgebraU};

pub type Quad = (usize, usize, usize, String);
pub type Triple = (usize, usize, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraBlock {
    pub labels: Vec<String>,
    pub unit: Vec<String>,
    /// `[i, j, k, c]`: `e_i e_j` has coefficient `c` at `e_k`.
    pub mult: Vec<Quad>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfBlock {
    pub labels: Vec<String>,
    pub unit: Vec<String>,
    pub mult: Vec<Quad>,
    pub counit: Vec<String>,
    /// `[i, j, k, c]`: `Δ(e_i)` has coefficient `c` at `e_j⊗e_k`.
    pub comult: Vec<Quad>,
    /// `[i, j, c]`: `S(e_i)` has coefficient `c` at `e_j`. Computed when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Triple>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CleftBlock {
    pub algebra: AlgebraBlock,
    /// `[b, x, h, c]`: `ϱ(e_b)` has coefficient `c` at `e_x⊗h`.
    pub coaction: Vec<Quad>,
    /// `[h, b, c]`: `θ(h)` has coefficient `c` at `e_b`.
    pub integral: Vec<Triple>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UBlock {
    pub side: Side,
    /// Elements of `H*` in the dual basis.
    pub elements: Vec<Vec<String>>,
    /// Allow a span that is not a direct summand of `H*`.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub lattice: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub name: String,
    #[serde(default)]
    pub description: String,
    /// `"Z"`, `"Q"` or `"Z/n"`
    pub ring: String,
    pub hopf: HopfBlock,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraBlock>,
    /// `[h, a, b, c]`: `e_h·e_a` has coefficient `c` at `e_b`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Quad>>,
    /// `[h, k, b, c]`: `σ(e_h⊗e_k)` has coefficient `c` at `e_b`. Trivial when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<Vec<Quad>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cleft: Option<CleftBlock>,
    /// Dual subalgebras to test; the full dual on both sides when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<Vec<UBlock>>,
    /// Explicit `V ⊆ H*` for the compatibility check.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<Suite>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Hopf,
    Crossed,
    Smash,
    Duality,
    Cleft,
    Opposite,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Hopf,
        Suite::Crossed,
        Suite::Smash,
        Suite::Duality,
        Suite::Cleft,
        Suite::Opposite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hopf => "hopf",
            Suite::Crossed => "crossed",
            Suite::Smash => "smash",
            Suite::Duality => "duality",
            Suite::Cleft => "cleft",
            Suite::Opposite => "opposite",
            Suite::All => "all",
        }
    }

    /// The concrete suites this selection stands for.
    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::ALL.to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// What the instance is about beyond `H` itself.
#[derive(Clone, Debug)]
pub enum Payload {
    Hopf,
    /// A weak action and a cocycle; the crossed product is built by the
    /// suites so that failures are reported as checks.
    Crossed { action: WeakActionData, sigma: LinearMap },
    /// A comodule algebra with a total integral `θ`.
    Cleft { comodule: ComoduleAlgebraData, theta: LinearMap },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct USelection {
    pub side: Side,
    pub elements: Vec<Vector>,
    pub lattice: bool,
}

impl USelection {
    pub fn full(h: &HopfData, side: Side) -> Self {
        USelection {
            side,
            elements: (0..h.dim()).map(|i| h.carrier().basis_vector(i)).collect(),
            lattice: false,
        }
    }

    pub fn build(&self, h: &HopfData) -> Result<SubalgebraU> {
        if self.lattice {
            SubalgebraU::lattice(h, self.side, self.elements.clone())
        } else {
            SubalgebraU::new(h, self.side, self.elements.clone())
        }
    }

    pub fn is_full(&self, h: &HopfData) -> bool {
        !self.lattice && self.elements.len() == h.dim() && self.elements.iter().enumerate().all(|(i, e)| *e == h.carrier().basis_vector(i))
    }
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub description: String,
    pub hopf: HopfData,
    /// The antipode was given in the file rather than computed.
    pub supplied_antipode: bool,
    pub payload: Payload,
    pub u: Vec<USelection>,
    pub v: Option<Vec<Vector>>,
    pub suite: Option<Suite>,
}

impl Instance {
    pub fn hopf_only(name: &str, description: &str, hopf: HopfData) -> Self {
        let u = default_u(&hopf);
        Instance {
            name: name.into(),
            description: description.into(),
            hopf,
            supplied_antipode: false,
            payload: Payload::Hopf,
            u,
            v: None,
            suite: None,
        }
    }

    pub fn crossed(name: &str, description: &str, action: WeakActionData, sigma: LinearMap) -> Self {
        let hopf = action.hopf().clone();
        let u = default_u(&hopf);
        Instance {
            name: name.into(),
            description: description.into(),
            hopf,
            supplied_antipode: false,
            payload: Payload::Crossed { action, sigma },
            u,
            v: None,
            suite: None,
        }
    }

    pub fn cleft(name: &str, description: &str, comodule: ComoduleAlgebraData, theta: LinearMap) -> Self {
        let hopf = comodule.hopf().clone();
        let u = default_u(&hopf);
        Instance {
            name: name.into(),
            description: description.into(),
            hopf,
            supplied_antipode: false,
            payload: Payload::Cleft { comodule, theta },
            u,
            v: None,
            suite: None,
        }
    }

    pub fn to_file(&self) -> InstanceFile {
        let ring = self.hopf.ring().clone();
        let fmt = |v: &Scalar| ring.format(v);
        let fmt_vec = |v: &[Scalar]| v.iter().map(fmt).collect::<Vec<_>>();
        let h = &self.hopf;
        let n = h.dim();
        let antipode = self.supplied_antipode.then(|| {
            (0..n)
                .flat_map(|i| {
                    let col = h.antipode().column(i);
                    nonzeros(&col).map(|(j, c)| (i, j, fmt(c))).collect::<Vec<_>>()
                })
                .collect()
        });
        let comult = (0..n)
            .flat_map(|i| h.coalgebra().coproduct(i).iter().map(move |(j, k, c)| (i, *j, *k, c)))
            .map(|(i, j, k, c)| (i, j, k, fmt(c)))
            .collect();
        let hopf = HopfBlock {
            labels: h.carrier().labels().to_vec(),
            unit: fmt_vec(h.algebra().unit()),
            mult: algebra_quads(h.algebra()),
            counit: fmt_vec(h.coalgebra().counit()),
            comult,
            antipode,
        };
        let mut file = InstanceFile {
            name: self.name.clone(),
            description: self.description.clone(),
            ring: ring.to_string(),
            hopf,
            algebra: None,
            action: None,
            cocycle: None,
            cleft: None,
            u: None,
            v: None,
            suite: self.suite,
        };
        match &self.payload {
            Payload::Hopf => {}
            Payload::Crossed { action, sigma } => {
                let a = action.algebra();
                let m = a.dim();
                file.algebra = Some(algebra_block(a));
                file.action = Some(
                    (0..n * m)
                        .flat_map(|p| {
                            nonzeros(action.act_basis(p / m, p % m))
                                .map(|(b, c)| (p / m, p % m, b, fmt(c)))
                                .collect::<Vec<_>>()
                        })
                        .collect(),
                );
                file.cocycle = Some(
                    (0..n * n)
                        .flat_map(|p| {
                            nonzeros(&sigma.column(p))
                                .map(|(b, c)| (p / n, p % n, b, fmt(c)))
                                .collect::<Vec<_>>()
                        })
                        .collect(),
                );
            }
            Payload::Cleft { comodule, theta } => {
                let b = comodule.algebra();
                file.cleft = Some(CleftBlock {
                    algebra: algebra_block(b),
                    coaction: (0..b.dim())
                        .flat_map(|x| {
                            nonzeros(comodule.coact_basis(x))
                                .map(|(p, c)| (x, p / n, p % n, fmt(c)))
                                .collect::<Vec<_>>()
                        })
                        .collect(),
                    integral: (0..n)
                        .flat_map(|i| {
                            nonzeros(&theta.column(i)).map(|(b, c)| (i, b, fmt(c))).collect::<Vec<_>>()
                        })
                        .collect(),
                });
            }
        }
        if self.u != default_u(h) {
            file.u = Some(
                self.u
                    .iter()
                    .map(|s| UBlock {
                        side: s.side,
                        elements: s.elements.iter().map(|e| fmt_vec(e)).collect(),
                        lattice: s.lattice,
                    })
                    .collect(),
            );
        }
        file.v = self.v.as_ref().map(|v| v.iter().map(|e| fmt_vec(e)).collect());
        file
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_file()).expect("plain data");
        s.push('\n');
        s
    }
}

fn default_u(h: &HopfData) -> Vec<USelection> {
    vec![USelection::full(h, Side::Right), USelection::full(h, Side::Left)]
}

fn algebra_quads(a: &AlgebraData) -> Vec<Quad> {
    let n = a.dim();
    let ring = a.ring();
    (0..n * n)
        .flat_map(|p| a.mul_basis(p / n, p % n).iter().map(move |(k, c)| (p / n, p % n, *k, ring.format(c))))
        .collect()
}

fn algebra_block(a: &AlgebraData) -> AlgebraBlock {
    let ring = a.ring();
    AlgebraBlock {
        labels: a.carrier().labels().to_vec(),
        unit: a.unit().iter().map(|c| ring.format(c)).collect(),
        mult: algebra_quads(a),
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::Validation(msg.into())
}

fn parse_vec(ring: &RingSpec, v: &[String], len: usize, what: &str) -> Result<Vector> {
    if v.len() != len {
        return Err(invalid(format!("{what}: expected {len} entries, found {}", v.len())));
    }
    v.iter()
        .map(|s| ring.parse(s).map_err(|e| invalid(format!("{what}: {e}"))))
        .collect()
}

fn parse_quads(ring: &RingSpec, qs: &[Quad], bounds: [usize; 3], what: &str) -> Result<Vec<(usize, usize, usize, Scalar)>> {
    qs.iter()
        .map(|q| {
            let (i, j, k, c) = q;
            if *i >= bounds[0] || *j >= bounds[1] || *k >= bounds[2] {
                return Err(invalid(format!(
                    "{what} entry [{i}, {j}, {k}, {c:?}] out of range for ranks {bounds:?}"
                )));
            }
            let c = ring
                .parse(c)
                .map_err(|e| invalid(format!("{what} entry [{i}, {j}, {k}, {c:?}]: {e}")))?;
            Ok((*i, *j, *k, c))
        })
        .collect()
}

fn parse_algebra(ring: &RingSpec, b: &AlgebraBlock, what: &str) -> Result<AlgebraData> {
    let carrier = FreeModule::new(ring.clone(), b.labels.clone())?;
    let n = carrier.rank();
    let unit = parse_vec(ring, &b.unit, n, &format!("{what} unit"))?;
    let mult = parse_quads(ring, &b.mult, [n; 3], &format!("{what} mult"))?;
    AlgebraData::from_constants(carrier, &mult, unit)
}

/// Dense table from `(p, b, c)` triples: entry `p` gets `c` at `b`.
fn dense_table(ring: &RingSpec, entries: impl Iterator<Item = (usize, usize, Scalar)>, rows: usize, len: usize) -> Vec<Vector> {
    let mut t = vec![ring.zeros(len); rows];
    for (p, b, c) in entries {
        ring.add_assign(&mut t[p][b], &c);
    }
    t
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_instance(&self) -> Result<Instance> {
        let ring: RingSpec = self.ring.parse()?;
        let hb = &self.hopf;
        let carrier = FreeModule::new(ring.clone(), hb.labels.clone())?;
        let n = carrier.rank();
        let unit = parse_vec(&ring, &hb.unit, n, "hopf unit")?;
        let mult = parse_quads(&ring, &hb.mult, [n; 3], "hopf mult")?;
        let algebra = AlgebraData::from_constants(carrier.clone(), &mult, unit)?;
        let counit = parse_vec(&ring, &hb.counit, n, "hopf counit")?;
        let comult = parse_quads(&ring, &hb.comult, [n; 3], "hopf comult")?;
        let coalgebra = CoalgebraData::from_constants(carrier.clone(), &comult, counit)?;
        let bialgebra = BialgebraData::new(algebra, coalgebra)?;
        let (hopf, supplied_antipode) = match &hb.antipode {
            None => (HopfData::new(bialgebra)?, false),
            Some(triples) => {
                let mut cols = vec![ring.zeros(n); n];
                for (i, j, c) in triples {
                    if *i >= n || *j >= n {
                        return Err(invalid(format!("antipode entry [{i}, {j}, {c:?}] out of range for rank {n}")));
                    }
                    let c = ring.parse(c).map_err(|e| invalid(format!("antipode entry [{i}, {j}, {c:?}]: {e}")))?;
                    ring.add_assign(&mut cols[*i][*j], &c);
                }
                let s = LinearMap::from_fn(&carrier, &carrier, |i| cols[i].clone())?;
                let sbar = compute_twisted_antipode(&bialgebra).ok();
                (HopfData::from_parts(bialgebra, s, sbar), true)
            }
        };

        let payload = match (&self.algebra, &self.action, &self.cocycle, &self.cleft) {
            (_, Some(_), _, Some(_)) | (_, _, Some(_), Some(_)) => {
                return Err(invalid("an instance has either a cleft block or an action/cocycle, not both"));
            }
            (_, None, Some(_), _) => return Err(invalid("missing action")),
            (None, Some(_), _, _) => return Err(invalid("missing algebra")),
            (Some(ab), Some(act), coc, None) => {
                let a = parse_algebra(&ring, ab, "algebra")?;
                let m = a.dim();
                let q = parse_quads(&ring, act, [n, m, m], "action")?;
                let table = dense_table(&ring, q.into_iter().map(|(i, x, b, c)| (i * m + x, b, c)), n * m, m);
                let action = WeakActionData::new(hopf.clone(), a.clone(), table)?;
                let sigma = match coc {
                    None => crate::crossed::trivial_sigma(&hopf, &a),
                    Some(coc) => {
                        let q = parse_quads(&ring, coc, [n, n, m], "cocycle")?;
                        let table = dense_table(&ring, q.into_iter().map(|(i, j, b, c)| (i * n + j, b, c)), n * n, m);
                        crate::crossed::sigma_from_fn(&hopf, &a, |i, j| table[i * n + j].clone())?
                    }
                };
                Payload::Crossed { action, sigma }
            }
            (_, None, None, Some(cb)) => {
                let b = parse_algebra(&ring, &cb.algebra, "cleft algebra")?;
                let m = b.dim();
                let q = parse_quads(&ring, &cb.coaction, [m, m, n], "coaction")?;
                let table = dense_table(&ring, q.into_iter().map(|(x, y, h, c)| (x, y * n + h, c)), m, m * n);
                let comodule = ComoduleAlgebraData::new(hopf.clone(), b.clone(), table)?;
                let mut cols = vec![ring.zeros(m); n];
                for (i, x, c) in &cb.integral {
                    if *i >= n || *x >= m {
                        return Err(invalid(format!("integral entry [{i}, {x}, {c:?}] out of range")));
                    }
                    let c = ring.parse(c).map_err(|e| invalid(format!("integral entry [{i}, {x}, {c:?}]: {e}")))?;
                    ring.add_assign(&mut cols[*i][*x], &c);
                }
                let theta = LinearMap::from_fn(hopf.carrier(), b.carrier(), |i| cols[i].clone())?;
                Payload::Cleft { comodule, theta }
            }
            (Some(_), None, None, None) => return Err(invalid("algebra block without an action")),
            (None, None, None, None) => Payload::Hopf,
        };

        let u = match &self.u {
            None => default_u(&hopf),
            Some(blocks) => blocks
                .iter()
                .enumerate()
                .map(|(k, b)| {
                    let elements = b
                        .elements
                        .iter()
                        .map(|e| parse_vec(&ring, e, n, &format!("u[{k}] element")))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(USelection {
                        side: b.side,
                        elements,
                        lattice: b.lattice,
                    })
                })
                .collect::<Result<Vec<_>>>()?,
        };
        let v = self
            .v
            .as_ref()
            .map(|v| v.iter().map(|e| parse_vec(&ring, e, n, "v element")).collect::<Result<Vec<_>>>())
            .transpose()?;
        Ok(Instance {
            name: self.name.clone(),
            description: self.description.clone(),
            hopf,
            supplied_antipode,
            payload,
            u,
            v,
            suite: self.suite,
        })
    }
}

/// Reads and validates an instance file.
pub fn parse_instance(text: &str) -> Result<Instance> {
    InstanceFile::from_json(text)?.to_instance()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn file(name: &str) -> InstanceFile {
        catalog::get(name).unwrap().to_file()
    }

    #[test]
    fn json_round_trip_is_stable() {
        let f = file("conj_twisted");
        let text = serde_json::to_string(&f).unwrap();
        let back = InstanceFile::from_json(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.to_instance().unwrap().to_file(), f);
    }

    #[test]
    fn cocycle_without_action_is_rejected() {
        let mut f = file("gauss");
        f.action = None;
        let e = f.to_instance().unwrap_err();
        assert!(matches!(&e, Error::Validation(m) if m.contains("missing action")), "{e}");
    }

    #[test]
    fn out_of_range_quad_names_it() {
        let mut f = file("Z_C2");
        f.hopf.mult.push((0, 0, 7, "1".into()));
        let e = f.to_instance().unwrap_err();
        assert!(e.to_string().contains('7'), "{e}");
    }

    #[test]
    fn unknown_fields_and_suites_are_parse_errors() {
        assert!(matches!(InstanceFile::from_json(r#"{"name":"x","bogus":1}"#), Err(Error::Parse(_))));
        assert!(matches!("everything".parse::<Suite>(), Err(Error::Parse(_))));
        assert_eq!("duality".parse::<Suite>().unwrap(), Suite::Duality);
    }

    #[test]
    fn supplied_wrong_antipode_is_kept_for_the_suite() {
        let mut f = file("Z_C2");
        // S(g) = e instead of g
        f.hopf.antipode = Some(vec![(0, 0, "1".into()), (1, 0, "1".into())]);
        let inst = f.to_instance().unwrap();
        assert!(inst.supplied_antipode);
        let r = inst.hopf.validate();
        let c = r.get("antipode").unwrap();
        assert!(!c.passed);
        assert_eq!(c.witness.as_deref(), Some("g"));
    }
}
