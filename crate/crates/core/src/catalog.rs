//! Built-in instances, small enough to check by hand.

use crate::actions::{ComoduleAlgebraData, WeakActionData};
use crate::algebra::AlgebraData;
use crate::crossed::{sigma_from_fn, trivial_sigma};
use crate::error::{Error, Result};
use crate::hopf::{dual_hopf, HopfData};
use crate::instance::Instance;
use crate::linalg::LinearMap;
use crate::ring::RingSpec;
use crate::standard::{cyclic_group_algebra, dual_numbers, gaussian_integers, product_ring, sweedler_hopf};

type Builder = fn() -> Result<Instance>;

const ENTRIES: &[(&str, &str, Builder)] = &[
    ("Z_C2", "group algebra Z[C2]", z_c2),
    ("Z_C3", "group algebra Z[C3]", z_c3),
    ("Z_C4", "group algebra Z[C4]", z_c4),
    ("Q_C3", "group algebra Q[C3]", q_c3),
    ("Z_C2_dual", "dual of Z[C2]: functions on C2", z_c2_dual),
    ("sweedler4_Q", "Sweedler's four-dimensional Hopf algebra over Q", sweedler4_q),
    ("sweedler4_Z3", "Sweedler's four-dimensional Hopf algebra over Z/3", sweedler4_z3),
    ("sweedler4_Z", "Sweedler's four-dimensional Hopf algebra over Z", sweedler4_z),
    ("gauss", "Z#_σZ[C2] with σ(g⊗g) = -1, the Gaussian integers", gauss),
    ("swap_smash", "Z[C2] acting on Z×Z by swapping coordinates", swap_smash),
    ("conj_smash", "Z[C2] acting on M2(Z) by conjugation with [[0,1],[1,0]]", conj_smash),
    ("conj_twisted", "Z[C2] on M2(Z): conjugation by v = [[1,1],[0,1]], σ(g⊗g) = v²", conj_twisted),
    ("Zmod6_C2", "Z/6#_σ(Z/6)[C2] with σ(g⊗g) = -1", zmod6_c2),
    ("sweedler4_smash_Q", "H4 acting on Q[t]/(t²): g·t = -t, x·t = 1", sweedler4_smash_q),
    ("sweedler4_smash_Z3", "H4 acting on (Z/3)[t]/(t²): g·t = -t, x·t = 1", sweedler4_smash_z3),
    ("sweedler4_cleft_Q", "Q[t]/(t²)#H4 as a cleft extension with a twisted integral", sweedler4_cleft_q),
    ("gaussian_ints_cleft", "Z[i] graded by C2 as a cleft extension of Z", gaussian_ints_cleft),
];

/// `(name, description)` in catalog order.
pub fn list_entries() -> Vec<(&'static str, &'static str)> {
    ENTRIES.iter().map(|(n, d, _)| (*n, *d)).collect()
}

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|(n, _, _)| *n).collect()
}

pub fn get(name: &str) -> Result<Instance> {
    let (_, _, build) = ENTRIES
        .iter()
        .find(|(n, _, _)| *n == name)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))?;
    build()
}

pub fn all() -> Result<Vec<Instance>> {
    ENTRIES.iter().map(|(_, _, b)| b()).collect()
}

fn describe(name: &str) -> &'static str {
    ENTRIES.iter().find(|(n, _, _)| *n == name).map(|(_, d, _)| *d).expect("listed")
}

fn hopf(name: &str, h: HopfData) -> Result<Instance> {
    Ok(Instance::hopf_only(name, describe(name), h))
}

fn z_c2() -> Result<Instance> {
    hopf("Z_C2", cyclic_group_algebra(&RingSpec::Integers, 2))
}

fn z_c3() -> Result<Instance> {
    hopf("Z_C3", cyclic_group_algebra(&RingSpec::Integers, 3))
}

fn z_c4() -> Result<Instance> {
    hopf("Z_C4", cyclic_group_algebra(&RingSpec::Integers, 4))
}

fn q_c3() -> Result<Instance> {
    hopf("Q_C3", cyclic_group_algebra(&RingSpec::Rationals, 3))
}

fn z_c2_dual() -> Result<Instance> {
    hopf("Z_C2_dual", dual_hopf(&cyclic_group_algebra(&RingSpec::Integers, 2))?)
}

fn sweedler4_q() -> Result<Instance> {
    hopf("sweedler4_Q", sweedler_hopf(&RingSpec::Rationals))
}

fn sweedler4_z3() -> Result<Instance> {
    hopf("sweedler4_Z3", sweedler_hopf(&RingSpec::integers_mod(3)?))
}

fn sweedler4_z() -> Result<Instance> {
    hopf("sweedler4_Z", sweedler_hopf(&RingSpec::Integers))
}

/// Trivial action of `R[C2]` on `A`, `σ(g⊗g) = c·1`.
fn twisted_c2(name: &str, ring: &RingSpec, a: AlgebraData, c: i64) -> Result<Instance> {
    let h = cyclic_group_algebra(ring, 2);
    let w = WeakActionData::trivial(h.clone(), a.clone());
    let sigma = sigma_from_fn(&h, &a, |i, j| {
        if i == 1 && j == 1 {
            ring.scale_vec(&ring.int(c), a.unit())
        } else {
            a.unit().clone()
        }
    })?;
    Ok(Instance::crossed(name, describe(name), w, sigma))
}

fn gauss() -> Result<Instance> {
    let z = RingSpec::Integers;
    twisted_c2("gauss", &z, AlgebraData::base(&z), -1)
}

fn zmod6_c2() -> Result<Instance> {
    let r = RingSpec::integers_mod(6)?;
    twisted_c2("Zmod6_C2", &r, AlgebraData::base(&r), -1)
}

fn swap_smash() -> Result<Instance> {
    let z = RingSpec::Integers;
    let h = cyclic_group_algebra(&z, 2);
    let a = product_ring(&z);
    let w = WeakActionData::from_fn(h.clone(), a.clone(), |i, x| a.basis(if i == 0 { x } else { 1 - x }))?;
    let sigma = trivial_sigma(&h, &a);
    Ok(Instance::crossed("swap_smash", describe("swap_smash"), w, sigma))
}

/// `C2` acting on `M2(Z)` by conjugation with `v` (inverse `vi`), `σ(g⊗g) = s`.
fn conjugation(name: &str, v: [i64; 4], vi: [i64; 4], s: Option<[i64; 4]>) -> Result<Instance> {
    let z = RingSpec::Integers;
    let h = cyclic_group_algebra(&z, 2);
    let a = AlgebraData::matrix_algebra(&z, 2);
    let v: Vec<_> = v.iter().map(|&c| z.int(c)).collect();
    let vi: Vec<_> = vi.iter().map(|&c| z.int(c)).collect();
    let w = WeakActionData::from_fn(h.clone(), a.clone(), |i, x| {
        let e = a.basis(x);
        if i == 0 {
            e
        } else {
            a.mul(&a.mul(&v, &e), &vi)
        }
    })?;
    let sigma = match s {
        None => trivial_sigma(&h, &a),
        Some(s) => {
            let s: Vec<_> = s.iter().map(|&c| z.int(c)).collect();
            sigma_from_fn(&h, &a, |i, j| if i == 1 && j == 1 { s.clone() } else { a.unit().clone() })?
        }
    };
    Ok(Instance::crossed(name, describe(name), w, sigma))
}

fn conj_smash() -> Result<Instance> {
    conjugation("conj_smash", [0, 1, 1, 0], [0, 1, 1, 0], None)
}

fn conj_twisted() -> Result<Instance> {
    // v² = [[1,2],[0,1]]
    conjugation("conj_twisted", [1, 1, 0, 1], [1, -1, 0, 1], Some([1, 2, 0, 1]))
}

/// `H4` acting on `R[t]/(t²)`: `g·t = -t`, `x·1 = 0`, `x·t = 1`, `gx·t = 1`.
fn sweedler_on_dual_numbers(ring: &RingSpec) -> Result<(WeakActionData, AlgebraData)> {
    let h = sweedler_hopf(ring);
    let a = dual_numbers(ring);
    let w = WeakActionData::from_fn(h, a.clone(), |i, x| match (i, x) {
        (0, x) => a.basis(x),
        (1, 0) => a.basis(0),
        (1, 1) => ring.neg_vec(&a.basis(1)),
        (2, 1) | (3, 1) => a.basis(0),
        _ => a.zero(),
    })?;
    Ok((w, a))
}

fn sweedler4_smash_q() -> Result<Instance> {
    let q = RingSpec::Rationals;
    let (w, a) = sweedler_on_dual_numbers(&q)?;
    let sigma = trivial_sigma(w.hopf(), &a);
    Ok(Instance::crossed("sweedler4_smash_Q", describe("sweedler4_smash_Q"), w, sigma))
}

fn sweedler4_smash_z3() -> Result<Instance> {
    let r = RingSpec::integers_mod(3)?;
    let (w, a) = sweedler_on_dual_numbers(&r)?;
    let sigma = trivial_sigma(w.hopf(), &a);
    Ok(Instance::crossed("sweedler4_smash_Z3", describe("sweedler4_smash_Z3"), w, sigma))
}

/// `B = Q[t]/(t²)#H4` with `ϱ = id⊗Δ` and `θ(h) = Σ u(h_1)#h_2`, where
/// `u(1) = u(g) = 1`, `u(x) = t`, `u(gx) = 0`.
fn sweedler4_cleft_q() -> Result<Instance> {
    let q = RingSpec::Rationals;
    let (w, a) = sweedler_on_dual_numbers(&q)?;
    let h = w.hopf().clone();
    let cp = crate::crossed::crossed_product(&w, &trivial_sigma(&h, &a))?;
    let u = |i: usize| match i {
        0 | 1 => a.basis(0),
        2 => a.basis(1),
        _ => a.zero(),
    };
    let theta = LinearMap::from_fn(h.carrier(), cp.algebra.carrier(), |i| {
        let mut out = cp.algebra.zero();
        for (j, k, c) in h.coalgebra().coproduct(i) {
            let t = cp.pure(&u(*j), &h.algebra().basis(*k));
            q.axpy(&mut out, c, &t);
        }
        out
    })?;
    Ok(Instance::cleft("sweedler4_cleft_Q", describe("sweedler4_cleft_Q"), cp.comodule, theta))
}

/// `ϱ(1) = 1⊗e`, `ϱ(i) = i⊗g`, `θ(e) = 1`, `θ(g) = i`.
fn gaussian_ints_cleft() -> Result<Instance> {
    let z = RingSpec::Integers;
    let h = cyclic_group_algebra(&z, 2);
    let b = gaussian_integers(&z);
    let one = z.one();
    let table = vec![
        vec![one.clone(), z.zero(), z.zero(), z.zero()],
        vec![z.zero(), z.zero(), z.zero(), one.clone()],
    ];
    let comodule = ComoduleAlgebraData::new(h.clone(), b.clone(), table)?;
    let theta = LinearMap::from_fn(h.carrier(), b.carrier(), |i| b.basis(i))?;
    Ok(Instance::cleft("gaussian_ints_cleft", describe("gaussian_ints_cleft"), comodule, theta))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds_and_round_trips() {
        for name in names() {
            let inst = get(name).unwrap();
            let json = inst.to_json();
            let back = crate::instance::parse_instance(&json).unwrap();
            assert_eq!(back.to_file(), inst.to_file(), "{name}");
        }
    }

    #[test]
    fn unknown_entry() {
        assert!(matches!(get("nope"), Err(Error::UnknownEntry(_))));
    }
}
