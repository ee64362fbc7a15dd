//! One line per acceptance criterion. Every criterion is exact.

mod common;

use common::{int, is_algebra_iso};
use hopfdual::actions::WeakActionData;
use hopfdual::algebra::AlgebraData;
use hopfdual::catalog;
use hopfdual::crossed::{
    check_cp_alg, compare_round_trip, crossed_from_integral, crossed_product, crossed_product_table,
    integral_from_crossed, opposite_crossed, sigma_from_fn, trivial_sigma, CleftData, CrossedProductData,
};
use hopfdual::duality::{
    build_diagram, cleft_duality, cleft_matches_direct, coaction_table, duality_iso, epsilon_maps, lambda_report,
    matrix_iso, matrix_iso_with, opposite_chain, phi_maps, CoactionKind,
};
use hopfdual::hopf::{compute_antipode, compute_twisted_antipode, ConvolutionAlgebra, HopfData};
use hopfdual::instance::{Instance, Payload, Suite};
use hopfdual::linalg::{invert_map, LinearMap, Matrix};
use hopfdual::smash::{smash_compare, Side, SubalgebraU};
use hopfdual::standard::{cyclic_group_algebra, product_ring, sweedler_hopf};
use hopfdual::suite::{run_instance, RunOptions};
use hopfdual::{Error, RingSpec};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn entries() -> Vec<Instance> {
    catalog::all().expect("catalog builds")
}

/// Crossed products from the catalog: explicit ones, then those recovered
/// from cleft entries.
fn crossed_products() -> Vec<(String, CrossedProductData)> {
    let mut out = Vec::new();
    for inst in entries() {
        match &inst.payload {
            Payload::Crossed { action, sigma } => out.push((inst.name.clone(), crossed_product(action, sigma).unwrap())),
            Payload::Cleft { comodule, theta } => {
                let cl = CleftData::new(comodule.clone(), theta.clone()).unwrap();
                out.push((inst.name.clone(), crossed_from_integral(&cl).unwrap().crossed));
            }
            Payload::Hopf => {}
        }
    }
    out
}

/// Distinct Hopf algebras in the catalog, by instance name.
fn hopf_algebras() -> Vec<(String, HopfData)> {
    let mut out: Vec<(String, HopfData)> = Vec::new();
    for inst in entries() {
        if !out.iter().any(|(_, h)| *h == inst.hopf) {
            out.push((inst.name.clone(), inst.hopf.clone()));
        }
    }
    out
}

fn matmul(ring: &RingSpec, a: &LinearMap, b: &LinearMap) -> Matrix {
    a.matrix().mul(ring, b.matrix())
}

fn c1_hopf_validation() -> Outcome {
    for inst in entries() {
        let r = run_instance(&inst, Suite::Hopf, RunOptions::default());
        if let Some(c) = r.failures().next() {
            return Err(format!("{}: {} {:?}", inst.name, c.id, c.witness));
        };
    }
    let h = cyclic_group_algebra(&RingSpec::Integers, 2);
    let bad = LinearMap::from_fn(h.carrier(), h.carrier(), |_| h.carrier().basis_vector(0)).unwrap();
    let mutated = HopfData::from_parts(h.bialgebra().clone(), bad, None);
    let r = mutated.validate();
    let c = r.get("antipode").ok_or("no antipode check")?;
    ensure(!c.passed && c.witness.as_deref() == Some("g"), || format!("mutated antipode: {c:?}"))
}

fn c2_antipode_oracle() -> Outcome {
    let z = RingSpec::Integers;
    for n in 2..=4 {
        let h = cyclic_group_algebra(&z, n);
        let s = compute_antipode(h.bialgebra()).map_err(err)?;
        // g^k ↦ g^{n-k}, i.e. g ↦ g^{n-1}
        let closed = LinearMap::from_fn(h.carrier(), h.carrier(), |k| z.unit_vector(n, (n - k) % n)).unwrap();
        ensure(s.same_matrix(&closed), || format!("S on Z[C{n}]"))?;
    }
    let q = RingSpec::Rationals;
    let h = sweedler_hopf(&q);
    let idx = |l: &str| h.carrier().index_of(l).unwrap();
    let s = compute_antipode(h.bialgebra()).map_err(err)?;
    let mut minus_gx = q.zeros(4);
    minus_gx[idx("gx")] = int(-1);
    ensure(s.column(idx("x")) == minus_gx, || "S(x) ≠ -gx".into())?;
    let s2 = matmul(&q, &s, &s);
    let s4 = s2.mul(&q, &s2);
    ensure(!s2.is_identity() && s4.is_identity(), || "S² / S⁴".into())?;
    let sbar = compute_twisted_antipode(h.bialgebra()).map_err(err)?;
    let sinv = invert_map(&s).map_err(err)?;
    ensure(sbar.same_matrix(&sinv), || "S̄ ≠ S⁻¹".into())
}

/// Direct unit and associativity check of `A⊗H` with the crossed product
/// table, against the flags.
fn c3_crossed_product_criterion() -> Outcome {
    let z = RingSpec::Integers;
    let q = RingSpec::Rationals;
    let c2 = cyclic_group_algebra(&z, 2);
    let zb = AlgebraData::base(&z);
    let scalar_sigma = |h: &HopfData, a: &AlgebraData, f: &dyn Fn(usize, usize) -> i64| {
        sigma_from_fn(h, a, |i, j| vec![int(f(i, j))]).unwrap()
    };
    let mut cases: Vec<(&str, WeakActionData, LinearMap, Option<[bool; 3]>)> = vec![
        ("trivial", WeakActionData::trivial(c2.clone(), zb.clone()), trivial_sigma(&c2, &zb), Some([true; 3])),
        ("σ(g⊗g) = -1", WeakActionData::trivial(c2.clone(), zb.clone()), scalar_sigma(&c2, &zb, &|i, j| if i + j == 2 { -1 } else { 1 }), Some([true; 3])),
        ("σ(g⊗g) = 2", WeakActionData::trivial(c2.clone(), zb.clone()), scalar_sigma(&c2, &zb, &|i, j| if i + j == 2 { 2 } else { 1 }), Some([true; 3])),
        ("σ(g⊗e) = 2", WeakActionData::trivial(c2.clone(), zb.clone()), scalar_sigma(&c2, &zb, &|i, j| if (i, j) == (1, 0) { 2 } else { 1 }), None),
    ];
    // fails only the cocycle identity
    let c3 = cyclic_group_algebra(&q, 3);
    let qb = AlgebraData::base(&q);
    cases.push((
        "C3, σ(g⊗g) = 2",
        WeakActionData::trivial(c3.clone(), qb.clone()),
        scalar_sigma(&c3, &qb, &|i, j| if (i, j) == (1, 1) { 2 } else { 1 }),
        Some([true, false, true]),
    ));
    // g·(a, b) = (a, a): multiplicative but g·(g·x) ≠ x
    let zz = product_ring(&z);
    let collapse = WeakActionData::from_fn(c2.clone(), zz.clone(), |i, x| match (i, x) {
        (0, x) => zz.basis(x),
        (_, 0) => z.add_vec(&zz.basis(0), &zz.basis(1)),
        _ => zz.zero(),
    })
    .map_err(err)?;
    cases.push(("Z×Z, g·(a,b) = (a,a)", collapse, trivial_sigma(&c2, &zz), Some([true, true, false])));
    for name in ["sweedler4_smash_Q", "conj_twisted", "swap_smash"] {
        if let Payload::Crossed { action, sigma } = catalog::get(name).unwrap().payload {
            cases.push((name, action, sigma, Some([true; 3])));
        }
    }
    let mut single_violations = 0;
    for (name, action, sigma, expected) in &cases {
        let c = check_cp_alg(action, sigma).map_err(err)?;
        let f = c.flags;
        if let Some(e) = expected {
            ensure([f.normal, f.cocycle, f.twisted_module] == *e, || format!("{name}: flags {f:?}"))?;
        }
        if [f.normal, f.cocycle, f.twisted_module].iter().filter(|b| !**b).count() == 1 {
            single_violations += 1;
        }
        let raw = crossed_product_table(action, sigma).map_err(err)?;
        let d = raw.dim();
        let unital = (0..d).all(|i| raw.mul(raw.unit(), &raw.basis(i)) == raw.basis(i) && raw.mul(&raw.basis(i), raw.unit()) == raw.basis(i));
        let associative = (0..d).all(|i| {
            (0..d).all(|j| {
                (0..d).all(|k| {
                    let (x, y, w) = (raw.basis(i), raw.basis(j), raw.basis(k));
                    raw.mul(&raw.mul(&x, &y), &w) == raw.mul(&x, &raw.mul(&y, &w))
                })
            })
        });
        ensure(unital == f.normal, || format!("{name}: unital {unital} vs normal {}", f.normal))?;
        if f.normal {
            ensure(associative == (f.cocycle && f.twisted_module), || format!("{name}: associative {associative} vs {f:?}"))?;
        }
        ensure(c.agrees(), || format!("{name}: library criterion disagrees"))?;
    }
    ensure(cases.len() >= 6 && single_violations >= 2, || format!("{} cases, {single_violations} single violations", cases.len()))
}

fn c4_phi_and_lambda() -> Outcome {
    for (name, h) in hopf_algebras() {
        if h.dim() > 4 {
            continue;
        }
        let ring = h.ring().clone();
        for side in [Side::Right, Side::Left] {
            let p = phi_maps(&h, side).map_err(err)?;
            ensure(p.validate().all_passed(), || format!("{name} {side:?}: φ report"))?;
            ensure(matmul(&ring, &p.phi1, &p.phi2).is_identity() && matmul(&ring, &p.phi2, &p.phi1).is_identity(), || {
                format!("{name} {side:?}: φ1, φ2 not inverse")
            })?;
            is_algebra_iso(&p.phi1, &p.phi2, &p.source, &p.target).map_err(|e| format!("{name} {side:?}: φ1 {e}"))?;
            let u = SubalgebraU::full(&h, side).map_err(err)?;
            ensure(lambda_report(&u).map_err(err)?.all_passed(), || format!("{name} {side:?}: λ"))?;
        }
    }
    Ok(())
}

fn c5_smash_sides_agree() -> Outcome {
    let hs = [
        ("Z[C2]", cyclic_group_algebra(&RingSpec::Integers, 2)),
        ("Q[C3]", cyclic_group_algebra(&RingSpec::Rationals, 3)),
        ("H4/Q", sweedler_hopf(&RingSpec::Rationals)),
    ];
    for (name, h) in hs {
        ensure(smash_compare(&h).map_err(err)?.all_passed(), || name.to_string())?;
    }
    Ok(())
}

fn c6_epsilon() -> Outcome {
    for (name, cp) in crossed_products() {
        let ring = cp.ring().clone();
        for side in [Side::Right, Side::Left] {
            let e = epsilon_maps(cp.hopf(), cp.base(), side).map_err(err)?;
            ensure(e.validate().all_passed(), || format!("{name} {side:?}: ε report"))?;
            ensure(matmul(&ring, &e.epsilon, &e.epsilon_inv).is_identity() && matmul(&ring, &e.epsilon_inv, &e.epsilon).is_identity(), || {
                format!("{name} {side:?}: ε round trip")
            })?;
            let u = SubalgebraU::full(cp.hopf(), side).map_err(err)?;
            let d = build_diagram(&cp, &u).map_err(err)?;
            ensure(matmul(&ring, &d.epsilon.epsilon, &d.alpha) == *d.chi.matrix(), || format!("{name} {side:?}: ε∘α ≠ χ"))?;
        }
    }
    Ok(())
}

fn c7_diagram() -> Outcome {
    for (name, cp) in crossed_products() {
        let ring = cp.ring().clone();
        for side in [Side::Right, Side::Left] {
            let u = SubalgebraU::full(cp.hopf(), side).map_err(err)?;
            let d = build_diagram(&cp, &u).map_err(err)?;
            ensure(matmul(&ring, &d.pi, &d.alpha) == *d.gamma.matrix(), || format!("{name} {side:?}: π∘α ≠ γ"))?;
            ensure(matmul(&ring, &d.pi, &d.delta) == *d.chi.matrix(), || format!("{name} {side:?}: π∘δ ≠ χ"))?;
            invert_map(&d.pi).map_err(|e| format!("{name} {side:?}: π {e}"))?;
            ensure(d.check().all_passed(), || format!("{name} {side:?}: diagram report"))?;
        }
    }
    Ok(())
}

fn c8_duality_iso() -> Outcome {
    for (name, cp) in crossed_products() {
        for side in [Side::Right, Side::Left] {
            let u = SubalgebraU::full(cp.hopf(), side).map_err(err)?;
            let iso = duality_iso(&cp, &u).map_err(|e| format!("{name} {side:?}: {e}"))?;
            is_algebra_iso(&iso.map, &iso.inverse, &iso.source, &iso.target).map_err(|e| format!("{name} {side:?}: {e}"))?;
        }
    }
    Ok(())
}

fn c9_matrix_iso() -> Outcome {
    let z = RingSpec::Integers;
    let zb = AlgebraData::base(&z);
    let mut cases = Vec::new();
    for n in [2, 3] {
        let h = cyclic_group_algebra(&z, n);
        cases.push((format!("Z[C{n}]"), crossed_product(&WeakActionData::trivial(h.clone(), zb.clone()), &trivial_sigma(&h, &zb)).map_err(err)?));
    }
    if let Payload::Crossed { action, sigma } = catalog::get("gauss").unwrap().payload {
        cases.push(("gauss".into(), crossed_product(&action, &sigma).map_err(err)?));
    }
    for (name, cp) in &cases {
        let n = cp.hopf().dim();
        let chain = matrix_iso(cp).map_err(|e| format!("{name}: {e}"))?;
        ensure(chain.iso.target.dim() == n * n, || format!("{name}: rank {}", chain.iso.target.dim()))?;
        ensure(chain.iso.target.same_structure(&AlgebraData::matrix_algebra(&z, n).tensor(&zb).unwrap()), || {
            format!("{name}: target is not M_{n}(Z)")
        })?;
        is_algebra_iso(&chain.iso.map, &chain.iso.inverse, &chain.iso.source, &chain.iso.target).map_err(|e| format!("{name}: {e}"))?;
    }
    // U = span{ε, 2δ_g}: an index-2 lattice in H*
    let (_, cp) = &cases[0];
    let lattice = SubalgebraU::lattice(cp.hopf(), Side::Right, vec![vec![int(1), int(1)], vec![int(0), int(2)]]).map_err(err)?;
    match matrix_iso_with(cp, &lattice) {
        Err(Error::NotInvertible(_)) => Ok(()),
        Err(e) => Err(format!("lattice: unexpected {e}")),
        Ok(_) => Err("lattice: iso asserted".into()),
    }
}

fn c10_coactions() -> Outcome {
    for ring in [RingSpec::Rationals, RingSpec::integers_mod(3).unwrap()] {
        let h = sweedler_hopf(&ring);
        for kind in [CoactionKind::Upsilon, CoactionKind::Omega] {
            let t = coaction_table(&h, kind).map_err(err)?;
            let r = t.check();
            ensure(r.all_passed() && r.checks.len() >= 5, || format!("H4/{ring} {kind:?}: {:?}", r.failures().next()))?;
            ensure(!t.is_trivial(), || format!("H4/{ring} {kind:?}: trivial"))?;
        }
    }
    let z = RingSpec::Integers;
    for n in 2..=4 {
        let h = cyclic_group_algebra(&z, n);
        for kind in [CoactionKind::Upsilon, CoactionKind::Omega] {
            let t = coaction_table(&h, kind).map_err(err)?;
            for x in 0..n {
                let f = z.unit_vector(n, x);
                ensure(t.coact(&f) == vec![(0, x, z.one())], || format!("Z[C{n}] {kind:?}: δ_{x} not sent to 1⊗δ_{x}"))?;
            }
        }
    }
    Ok(())
}

fn c11_cleft() -> Outcome {
    for (name, cp) in crossed_products() {
        let h = cp.hopf();
        let cl = integral_from_crossed(&cp).map_err(|e| format!("{name}: {e}"))?;
        let conv = ConvolutionAlgebra::new(h.coalgebra(), &cp.algebra).map_err(err)?;
        let inv = conv.invert_map(&cl.theta).map_err(err)?;
        ensure(inv.same_matrix(&cl.theta_inv), || format!("{name}: θ⁻¹ formula"))?;
        let back = crossed_from_integral(&cl).map_err(err)?;
        let r = compare_round_trip(&cp, &back);
        ensure(r.all_passed(), || format!("{name}: round trip {:?}", r.failures().next()))?;
        let u = SubalgebraU::full(h, Side::Right).map_err(err)?;
        if let Some(w) = cleft_matches_direct(&cp, &u).map_err(err)? {
            return Err(format!("{name}: cleft route differs at {w}"));
        }
    }
    for inst in entries() {
        if let Payload::Cleft { comodule, theta } = &inst.payload {
            let cl = CleftData::new(comodule.clone(), theta.clone()).map_err(err)?;
            let u = SubalgebraU::full(&inst.hopf, Side::Right).map_err(err)?;
            let d = cleft_duality(&cl, &u).map_err(|e| format!("{}: {e}", inst.name))?;
            is_algebra_iso(&d.iso.map, &d.iso.inverse, &d.iso.source, &d.iso.target).map_err(|e| format!("{}: {e}", inst.name))?;
        }
    }
    Ok(())
}

fn c12_opposite() -> Outcome {
    for name in ["swap_smash", "gauss", "conj_twisted", "sweedler4_smash_Q"] {
        let Payload::Crossed { action, sigma } = catalog::get(name).unwrap().payload else {
            unreachable!()
        };
        let cp = crossed_product(&action, &sigma).map_err(err)?;
        let oc = opposite_crossed(&cp).map_err(|e| format!("{name}: {e}"))?;
        ensure(oc.crossed.cocycle.flags.all(), || format!("{name}: τ flags {:?}", oc.crossed.cocycle.flags))?;
        ensure(oc.crossed.validate().all_passed(), || format!("{name}: τ crossed product"))?;
        is_algebra_iso(&oc.iso.map, &oc.iso.inverse, &oc.iso.source, &oc.iso.target).map_err(|e| format!("{name}: Ψ {e}"))?;
        let u = SubalgebraU::full(cp.hopf(), Side::Right).map_err(err)?;
        let chain = opposite_chain(&cp, &u).map_err(|e| format!("{name}: {e}"))?;
        ensure(chain.steps.len() == 4 && chain.equals_direct, || format!("{name}: chain"))?;
        is_algebra_iso(&chain.iso.map, &chain.iso.inverse, &chain.iso.source, &chain.iso.target).map_err(|e| format!("{name}: chain {e}"))?;
    }
    Ok(())
}

fn c13_kernel() -> Outcome {
    for n in [4i64, 6, 8] {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + n as u64);
        for _ in 0..100 {
            common::check_mod_n_system(n, &mut rng)?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2000);
    for _ in 0..100 {
        common::check_unimodular_system(&mut rng)?;
    }
    Ok(())
}

/// Prints the criterion's line and fails the test on a miss.
fn run(n: u8, desc: &str, f: fn() -> Outcome) {
    match f() {
        Ok(()) => println!("criterion {n:>2}: PASS  {desc}"),
        Err(e) => {
            println!("criterion {n:>2}: FAIL  {desc}  ({e})");
            panic!("criterion {n} failed: {e}");
        }
    }
}

#[test]
fn criterion_01_hopf_validation() {
    run(1, "Hopf validation and mutated-antipode control", c1_hopf_validation);
}

#[test]
fn criterion_02_antipode_oracle() {
    run(2, "antipode oracle on Z[Cn] and H4", c2_antipode_oracle);
}

#[test]
fn criterion_03_crossed_product_is_algebra_iff_flags() {
    run(3, "crossed product is an algebra iff σ is a normal twisted cocycle", c3_crossed_product_criterion);
}

#[test]
fn criterion_04_phi_and_lambda() {
    run(4, "φ1/φ2 and λ on both sides", c4_phi_and_lambda);
}

#[test]
fn criterion_05_left_right_smash_constants() {
    run(5, "left and right smash constants agree", c5_smash_sides_agree);
}

#[test]
fn criterion_06_epsilon() {
    run(6, "ε round trip and ε∘α = χ", c6_epsilon);
}

#[test]
fn criterion_07_diagram_commutes() {
    run(7, "duality diagram commutes, π invertible", c7_diagram);
}

#[test]
fn criterion_08_duality_iso_certified() {
    run(8, "χ⁻¹∘γ certified on all basis pairs", c8_duality_iso);
}

#[test]
fn criterion_09_matrix_iso_and_lattice_control() {
    run(9, "end-to-end map to M_n(A) and lattice control", c9_matrix_iso);
}

#[test]
fn criterion_10_coaction_identities() {
    run(10, "coaction identities on H4, trivial on groups", c10_coactions);
}

#[test]
fn criterion_11_cleft_round_trip_and_route() {
    run(11, "cleft round trip and cleft route", c11_cleft);
}

#[test]
fn criterion_12_opposite_chain() {
    run(12, "opposite cocycle τ and four-step chain", c12_opposite);
}

#[test]
fn criterion_13_solver_kernels() {
    run(13, "solver kernels against enumeration and substitution", c13_kernel);
}
