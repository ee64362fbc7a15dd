//! Runs the named check suites over instances and collects flat records.

use std::time::Instant;

use serde::Serialize;

use crate::actions::WeakActionData;
use crate::algebra::{AlgebraData, AlgebraIso};
use crate::crossed::{
    check_cp_alg, compare_round_trip, crossed_from_integral, crossed_product, integral_from_crossed,
    opposite_crossed, trivial_sigma, validate_cocycle, CleftData, CrossedProductData,
};
use crate::duality::{
    build_diagram, cleft_duality, cleft_matches_direct, coaction_route_check, coaction_table, compat_check,
    epsilon_maps, lambda_report, matrix_iso, module_algebra_check, opposite_chain, phi_maps,
    stable_subalgebra_check, CoactionKind,
};
use crate::error::{Error, Result};
use crate::hopf::{compute_antipode, dual_hopf, ConvolutionAlgebra};
use crate::instance::{Instance, Payload, Suite};
use crate::linalg::{invert_map, LinearMap};
use crate::report::ValidationReport;
use crate::smash::{hat_smash, left_smash, left_smash_via_crossed, op_hat_smash, op_smash, right_smash, smash_compare, Side, SubalgebraU};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    /// `<suite>.<group>.<check>`
    pub id: String,
    /// What the group establishes, in words.
    pub anchor: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub micros: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceReport {
    pub instance: String,
    pub suites: Vec<Suite>,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub passed: bool,
    pub instances: Vec<InstanceReport>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    /// Record wall-clock time per group. Off for byte-stable output.
    pub timing: bool,
    /// Run instances on separate threads. The report order is unaffected.
    pub parallel: bool,
}

impl RunOptions {
    pub fn canonical() -> Self {
        RunOptions {
            timing: false,
            parallel: true,
        }
    }
}

struct Recorder {
    suite: Suite,
    timing: bool,
    checks: Vec<CheckRecord>,
}

impl Recorder {
    /// Runs one group; an error becomes a single failed `completed` check.
    fn group(&mut self, group: &str, anchor: &str, f: impl FnOnce() -> Result<ValidationReport>) {
        let start = Instant::now();
        let out = f();
        let micros = self.timing.then(|| start.elapsed().as_micros() as u64);
        let prefix = format!("{}.{}", self.suite, group);
        match out {
            Ok(r) => {
                for c in r.checks {
                    self.checks.push(CheckRecord {
                        id: format!("{prefix}.{}", c.name),
                        anchor: anchor.to_string(),
                        passed: c.passed,
                        witness: c.witness,
                        micros,
                    });
                }
            }
            Err(e) => self.checks.push(CheckRecord {
                id: format!("{prefix}.completed"),
                anchor: anchor.to_string(),
                passed: false,
                witness: Some(e.to_string()),
                micros,
            }),
        }
    }
}

fn single(name: &str, failure: Option<String>) -> ValidationReport {
    let mut r = ValidationReport::new();
    r.record(name, failure);
    r
}

fn certified(name: &str, iso: Result<AlgebraIso>) -> Result<ValidationReport> {
    iso.map(|_| single(name, None))
}

fn flag(ok: bool, witness: &str) -> Option<String> {
    (!ok).then(|| witness.to_string())
}

fn side_tag(k: usize, side: Side) -> String {
    let s = match side {
        Side::Right => "right",
        Side::Left => "left",
    };
    format!("u{k}-{s}")
}

/// Runs `suite` (expanded if [`Suite::All`]) on one instance.
pub fn run_instance(inst: &Instance, suite: Suite, opts: RunOptions) -> InstanceReport {
    let suites = suite.expand();
    let mut checks = Vec::new();
    let data = crossed_data(inst);
    let cp = data.as_ref().map(|(action, sigma)| crossed_product(action, sigma));
    for s in &suites {
        let mut rec = Recorder {
            suite: *s,
            timing: opts.timing,
            checks: Vec::new(),
        };
        match s {
            Suite::Hopf => hopf_suite(&mut rec, inst),
            Suite::Smash => smash_suite(&mut rec, inst),
            Suite::Crossed => crossed_suite(&mut rec, data.as_ref()),
            Suite::Duality => duality_suite(&mut rec, inst, cp.as_ref()),
            Suite::Cleft => cleft_suite(&mut rec, inst, cp.as_ref()),
            Suite::Opposite => opposite_suite(&mut rec, inst, cp.as_ref()),
            Suite::All => unreachable!("expanded"),
        }
        checks.extend(rec.checks);
    }
    // ids are unique, so this order does not depend on scheduling
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    InstanceReport {
        instance: inst.name.clone(),
        suites,
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

/// The action and cocycle behind the crossed-product suites. A bare Hopf
/// algebra stands for `R#H` with the trivial action on `R`.
fn crossed_data(inst: &Instance) -> Option<(WeakActionData, LinearMap)> {
    match &inst.payload {
        Payload::Hopf => {
            let r = AlgebraData::base(inst.hopf.ring());
            let w = WeakActionData::trivial(inst.hopf.clone(), r.clone());
            Some((w, trivial_sigma(&inst.hopf, &r)))
        }
        Payload::Crossed { action, sigma } => Some((action.clone(), sigma.clone())),
        Payload::Cleft { .. } => None,
    }
}

/// Runs every instance; the suite of each is `suite`, or the instance's own
/// default when `suite` is `None`, or all suites.
pub fn run_all(instances: &[Instance], suite: Option<Suite>, opts: RunOptions) -> RunReport {
    let pick = |i: &Instance| suite.or(i.suite).unwrap_or(Suite::All);
    let reports: Vec<InstanceReport> = if opts.parallel {
        std::thread::scope(|scope| {
            let handles: Vec<_> = instances
                .iter()
                .map(|i| scope.spawn(move || run_instance(i, pick(i), opts)))
                .collect();
            handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
        })
    } else {
        instances.iter().map(|i| run_instance(i, pick(i), opts)).collect()
    };
    RunReport {
        passed: reports.iter().all(|r| r.passed),
        instances: reports,
    }
}

fn hopf_suite(rec: &mut Recorder, inst: &Instance) {
    let h = &inst.hopf;
    rec.group("axioms", "bialgebra and antipode axioms", || Ok(h.validate()));
    if inst.supplied_antipode {
        rec.group("antipode", "supplied antipode is the convolution inverse of id", || {
            let s = compute_antipode(h.bialgebra())?;
            Ok(single(
                "supplied = computed",
                flag(s.same_matrix(h.antipode()), "antipode columns differ"),
            ))
        });
    }
    rec.group("twisted", "twisted antipode inverts the antipode", || {
        let sbar = h.twisted_antipode()?;
        let sinv = invert_map(h.antipode())?;
        Ok(single("S̄ = S⁻¹", flag(sinv.same_matrix(sbar), "S̄∘S ≠ id")))
    });
    rec.group("dual", "the dual Hopf algebra", || Ok(dual_hopf(h)?.validate()));
    for (g, kind) in [("upsilon", CoactionKind::Upsilon), ("omega", CoactionKind::Omega)] {
        rec.group(&format!("coaction-{g}"), "coaction of H on H* and its identities", || {
            let t = coaction_table(h, kind)?;
            let mut r = t.check();
            if h.bialgebra().coalgebra().is_cocommutative() {
                r.record("trivial when H is cocommutative", flag(t.is_trivial(), "nontrivial"));
            }
            Ok(r)
        });
    }
}

fn smash_suite(rec: &mut Recorder, inst: &Instance) {
    let h = &inst.hopf;
    rec.group("compare", "left and right smash constructions agree", || smash_compare(h));
    for side in [Side::Right, Side::Left] {
        let tag = side_tag(0, side).replace("u0-", "");
        rec.group(&format!("phi-{tag}"), "Φ maps into End(H) are algebra maps", || {
            Ok(phi_maps(h, side)?.validate())
        });
        rec.group(&format!("lambda-{tag}"), "λ: H⊗H* → End(H) is bijective", || {
            lambda_report(&SubalgebraU::full(h, side)?)
        });
    }
    let comodule = match &inst.payload {
        Payload::Hopf => return,
        Payload::Crossed { action, sigma } => match crossed_product(action, sigma) {
            Ok(cp) => {
                let module = cp.cocycle.flags.all() && action.module_witness().is_none() && sigma_trivial(&cp);
                if module {
                    rec.group("left", "A#H as a left smash product", || {
                        let s = left_smash(action)?;
                        let via = left_smash_via_crossed(action)?;
                        Ok(single("matches trivial-cocycle crossed product", flag(s.algebra.same_structure(&via), "tables differ")))
                    });
                }
                cp.comodule
            }
            Err(e) => {
                rec.group("comodule", "B = A#_σH as a comodule algebra", || Err(e));
                return;
            }
        },
        Payload::Cleft { comodule, .. } => comodule.clone(),
    };
    rec.group("comodule", "smash products of B with H* and U", || {
        let mut r = ValidationReport::new();
        r.record("B#H* associative and unital", hat_smash(&comodule).err().map(|e| e.to_string()));
        r.record("op B#H* associative and unital", op_hat_smash(&comodule).err().map(|e| e.to_string()));
        for sel in &inst.u {
            let u = sel.build(h)?;
            let s = match sel.side {
                Side::Right => right_smash(&comodule, &u),
                Side::Left => op_smash(&comodule, &u),
            };
            r.record(
                format!("B#U for U of rank {} ({:?})", u.rank(), sel.side),
                s.err().map(|e| e.to_string()),
            );
        }
        Ok(r)
    });
}

fn sigma_trivial(cp: &CrossedProductData) -> bool {
    let h = cp.hopf();
    let a = cp.base();
    let n = h.dim();
    let s = cp.sigma();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let eps = cp.ring().mul(&h.coalgebra().counit()[i], &h.coalgebra().counit()[j]);
            *s.basis(i, j) == cp.ring().scale_vec(&eps, a.unit())
        })
    })
}

fn crossed_suite(rec: &mut Recorder, data: Option<&(WeakActionData, LinearMap)>) {
    let Some((action, sigma)) = data else {
        return;
    };
    rec.group("action", "weak action axioms", || Ok(action.validate()));
    rec.group("cocycle", "normal cocycle and twisted module conditions", || {
        Ok(validate_cocycle(action, sigma)?.report)
    });
    rec.group("criterion", "A#_σH is unital and associative exactly when σ is", || {
        let c = check_cp_alg(action, sigma)?;
        let mut r = ValidationReport::new();
        r.record("unital iff normal", flag(c.unital == c.flags.normal, "mismatch"));
        r.record("criterion agrees", flag(c.agrees(), &format!("{:?}", c)));
        Ok(r)
    });
    rec.group("product", "A#_σH as an H-comodule algebra", || {
        let cp = crossed_product(action, sigma)?;
        let mut r = cp.validate();
        let co = cp.comodule.coinvariants()?;
        let a = cp.base();
        let h = cp.hopf();
        let inside = (0..a.dim()).all(|x| co.coordinates(&cp.pure(&a.basis(x), h.algebra().unit())).is_ok());
        r.record(
            "coinvariants = A⊗1",
            flag(inside && co.basis().len() == a.dim(), &format!("rank {}", co.basis().len())),
        );
        Ok(r)
    });
}

fn duality_suite(rec: &mut Recorder, inst: &Instance, cp: Option<&Result<CrossedProductData>>) {
    let h = &inst.hopf;
    match (&inst.payload, cp) {
        (_, Some(Ok(cp))) => {
            for (k, sel) in inst.u.iter().enumerate() {
                let tag = side_tag(k, sel.side);
                let u = sel.build(h);
                let u = &u;
                rec.group(&format!("{tag}.epsilon"), "ε: Hom(H, A) smash into End(H⊗A)", || {
                    Ok(epsilon_maps(h, cp.base(), sel.side)?.validate())
                });
                rec.group(&format!("{tag}.diagram"), "the duality square commutes", || {
                    let u = u.as_ref().map_err(Clone::clone)?;
                    let d = build_diagram(cp, u)?;
                    let mut r = d.check();
                    if sel.side == Side::Right {
                        r.record("π right A-linear", d.pi_right_linear(cp)?);
                    }
                    Ok(r)
                });
                rec.group(&format!("{tag}.iso"), "(A#_σH)#U ≅ A⊗(H#U) as algebras", || {
                    let u = u.as_ref().map_err(Clone::clone)?;
                    certified("χ⁻¹∘γ certified", crate::duality::duality_iso(cp, u))
                });
                rec.group(&format!("{tag}.hypotheses"), "coaction and compatibility hypotheses on U", || {
                    let u = u.as_ref().map_err(Clone::clone)?;
                    let mut r = coaction_route_check(cp, u)?;
                    r.extend("stable", stable_subalgebra_check(cp, u)?);
                    if let Some(v) = &inst.v {
                        r.extend("explicit V", compat_check(cp, u, v)?);
                    }
                    Ok(r)
                });
            }
            rec.group("matrix", "(A#_σH)#H* ≅ M_n(A)", || {
                let chain = matrix_iso(cp)?;
                let n = cp.hopf().dim();
                let ok = chain.iso.target.dim() == n * n * cp.base().dim();
                Ok(single("certified composite into M_n(A)", flag(ok, "wrong target dimension")))
            });
            if sigma_trivial(cp) && cp.action.module_witness().is_none() {
                rec.group("module", "module algebra case with V built from coefficients", || {
                    module_algebra_check(cp, &SubalgebraU::full(h, Side::Right)?)
                });
            }
        }
        (_, Some(Err(e))) => {
            rec.group("crossed", "A#_σH exists", || Err(e.clone()));
        }
        (Payload::Cleft { comodule, theta }, _) => {
            let cl = CleftData::new(comodule.clone(), theta.clone());
            for (k, sel) in inst.u.iter().enumerate().filter(|(_, s)| s.side == Side::Right) {
                rec.group(&format!("{}.cleft", side_tag(k, sel.side)), "B#U ≅ A⊗(H#U) for cleft B", || {
                    let cl = cl.as_ref().map_err(Clone::clone)?;
                    let u = sel.build(h)?;
                    certified("iso through the recovered crossed product", cleft_duality(cl, &u).map(|d| d.iso))
                });
            }
        }
        _ => {}
    }
}

fn cleft_suite(rec: &mut Recorder, inst: &Instance, cp: Option<&Result<CrossedProductData>>) {
    let h = &inst.hopf;
    match (&inst.payload, cp) {
        (_, Some(cp)) => {
            let cp = match cp {
                Ok(cp) => cp,
                Err(e) => return rec.group("crossed", "A#_σH exists", || Err(e.clone())),
            };
            rec.group("round-trip", "A#_σH is cleft and gives back A and σ", || {
                let cl = integral_from_crossed(cp)?;
                let mut r = cl.validate();
                let conv = ConvolutionAlgebra::new(h.coalgebra(), &cp.algebra)?;
                let inv = conv.invert_map(&cl.theta)?;
                r.record("θ⁻¹ formula = convolution inverse", flag(inv.same_matrix(&cl.theta_inv), "columns differ"));
                let back = crossed_from_integral(&cl)?;
                r.extend("recovered", compare_round_trip(cp, &back));
                Ok(r)
            });
            for (k, sel) in inst.u.iter().enumerate().filter(|(_, s)| s.side == Side::Right) {
                rec.group(&format!("{}.route", side_tag(k, sel.side)), "cleft route equals the direct iso", || {
                    let u = sel.build(h)?;
                    Ok(single("same matrix", cleft_matches_direct(cp, &u)?))
                });
            }
        }
        (Payload::Cleft { comodule, theta }, _) => {
            rec.group("integral", "θ is a total integral", || {
                Ok(CleftData::new(comodule.clone(), theta.clone())?.validate())
            });
            rec.group("round-trip", "B ≅ A#_σH and back", || {
                let cl = CleftData::new(comodule.clone(), theta.clone())?;
                let rec1 = crossed_from_integral(&cl)?;
                let mut r = rec1.crossed.validate();
                let cl2 = integral_from_crossed(&rec1.crossed)?;
                let rec2 = crossed_from_integral(&cl2)?;
                r.extend("recovered", compare_round_trip(&rec1.crossed, &rec2));
                Ok(r)
            });
        }
        _ => {}
    }
}

fn opposite_suite(rec: &mut Recorder, inst: &Instance, cp: Option<&Result<CrossedProductData>>) {
    let Some(cp) = cp else {
        return;
    };
    let cp = match cp {
        Ok(cp) => cp,
        Err(e) => return rec.group("crossed", "A#_σH exists", || Err(e.clone())),
    };
    rec.group("tau", "(A^op#_τH^op)^op ≅ A#_σH", || {
        let oc = opposite_crossed(cp)?;
        let mut r = oc.crossed.validate();
        r.record("τ normal cocycle", flag(oc.crossed.cocycle.flags.all(), &format!("{:?}", oc.crossed.cocycle.flags)));
        r.record("Ψ certified", None);
        Ok(r)
    });
    for (k, sel) in inst.u.iter().enumerate().filter(|(_, s)| s.side == Side::Right) {
        rec.group(&format!("{}.chain", side_tag(k, sel.side)), "left-side duality through the opposite", || {
            let u = sel.build(&inst.hopf)?;
            let c = opposite_chain(cp, &u)?;
            Ok(single("equals the direct iso", flag(c.equals_direct, "matrices differ")))
        });
    }
}

impl RunReport {
    /// Pretty JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.instances {
            out.push_str(&r.to_text());
        }
        let failed = self.instances.iter().filter(|r| !r.passed).count();
        out.push_str(&format!(
            "{} instance(s), {} failed\n",
            self.instances.len(),
            failed
        ));
        out
    }
}

impl InstanceReport {
    pub fn to_text(&self) -> String {
        let names: Vec<&str> = self.suites.iter().map(|s| s.name()).collect();
        let mut out = format!("== {} [{}]\n", self.instance, names.join(","));
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark} {}", c.id));
            if let Some(w) = &c.witness {
                out.push_str(&format!("  witness: {w}"));
            }
            if let Some(t) = c.micros {
                out.push_str(&format!("  ({t} µs)"));
            }
            out.push('\n');
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out.push_str(&format!("-- {} check(s), {} failed\n", self.checks.len(), failed));
        out
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Errors that mean the input itself is malformed, as opposed to a failed
/// check on a well-formed instance.
pub fn is_input_error(e: &Error) -> bool {
    matches!(e, Error::Parse(_) | Error::UnknownEntry(_) | Error::Validation(_) | Error::InvalidScalar { .. } | Error::DuplicateLabel(_) | Error::InvalidModulus(_) | Error::DimensionMismatch(_))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn ids_are_unique_and_sorted() {
        let inst = catalog::get("swap_smash").unwrap();
        let r = run_instance(&inst, Suite::All, RunOptions::default());
        assert!(r.passed);
        assert!(r.checks.windows(2).all(|w| w[0].id < w[1].id));
        assert!(r.checks.iter().all(|c| c.micros.is_none()));
    }

    #[test]
    fn construction_errors_become_failed_checks() {
        let inst = catalog::get("gauss").unwrap();
        let Payload::Crossed { action, .. } = &inst.payload else { unreachable!() };
        let h = inst.hopf.clone();
        let a = action.algebra().clone();
        // σ(g⊗g) = 2 is not convolution invertible over Z
        let sigma = crate::crossed::sigma_from_fn(&h, &a, |i, j| {
            if i == 1 && j == 1 { vec![h.ring().int(2)] } else { a.unit().clone() }
        })
        .unwrap();
        let bad = Instance::crossed("two", "", action.clone(), sigma);
        let r = run_instance(&bad, Suite::Duality, RunOptions::default());
        assert!(!r.passed);
        assert!(r.failures().any(|c| c.id == "duality.crossed.completed"));
    }
}
