//! Small named algebras used throughout: cyclic group algebras, Sweedler's
//! four-dimensional Hopf algebra, and a few coefficient algebras.

use crate::algebra::AlgebraData;
use crate::coalgebra::CoalgebraData;
use crate::error::Result;
use crate::hopf::{BialgebraData, HopfData};
use crate::linalg::FreeModule;
use crate::ring::RingSpec;

fn group_label(i: usize) -> String {
    match i {
        0 => "e".to_string(),
        1 => "g".to_string(),
        _ => format!("g{i}"),
    }
}

/// `R[C_n]` on the basis `e, g, g2, …` as a bialgebra.
pub fn cyclic_group_bialgebra(ring: &RingSpec, n: usize) -> BialgebraData {
    let carrier =
        FreeModule::new(ring.clone(), (0..n).map(group_label).collect()).expect("distinct labels");
    let one = ring.one();
    let mult: Vec<_> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j, (i + j) % n)))
        .map(|(i, j, k)| (i, j, k, one.clone()))
        .collect();
    let algebra =
        AlgebraData::from_constants(carrier.clone(), &mult, carrier.basis_vector(0)).expect("table");
    let comult: Vec<_> = (0..n).map(|i| (i, i, i, one.clone())).collect();
    let coalgebra =
        CoalgebraData::from_constants(carrier, &comult, vec![one.clone(); n]).expect("table");
    BialgebraData::new(algebra, coalgebra).expect("same carrier")
}

pub fn cyclic_group_algebra(ring: &RingSpec, n: usize) -> HopfData {
    HopfData::new(cyclic_group_bialgebra(ring, n)).expect("group algebras are Hopf")
}

/// Sweedler's `H_4` on `1, g, x, gx`: `g² = 1`, `x² = 0`, `xg = −gx`,
/// `Δ(g) = g⊗g`, `Δ(x) = x⊗1 + g⊗x`.
pub fn sweedler_bialgebra(ring: &RingSpec) -> BialgebraData {
    let carrier = FreeModule::new(
        ring.clone(),
        vec!["1".into(), "g".into(), "x".into(), "gx".into()],
    )
    .expect("distinct labels");
    let p = ring.one();
    let m = ring.int(-1);
    let (one, g, x, gx) = (0, 1, 2, 3);
    let mult = vec![
        (one, one, one, p.clone()),
        (one, g, g, p.clone()),
        (one, x, x, p.clone()),
        (one, gx, gx, p.clone()),
        (g, one, g, p.clone()),
        (g, g, one, p.clone()),
        (g, x, gx, p.clone()),
        (g, gx, x, p.clone()),
        (x, one, x, p.clone()),
        (x, g, gx, m.clone()),
        (gx, one, gx, p.clone()),
        (gx, g, x, m.clone()),
    ];
    let algebra =
        AlgebraData::from_constants(carrier.clone(), &mult, carrier.basis_vector(one)).expect("table");
    let comult = vec![
        (one, one, one, p.clone()),
        (g, g, g, p.clone()),
        (x, x, one, p.clone()),
        (x, g, x, p.clone()),
        (gx, gx, g, p.clone()),
        (gx, one, gx, p.clone()),
    ];
    let counit = vec![p.clone(), p, ring.zero(), ring.zero()];
    let coalgebra = CoalgebraData::from_constants(carrier, &comult, counit).expect("table");
    BialgebraData::new(algebra, coalgebra).expect("same carrier")
}

pub fn sweedler_hopf(ring: &RingSpec) -> HopfData {
    HopfData::new(sweedler_bialgebra(ring)).expect("H4 is Hopf")
}

/// The bialgebra of the monoid `{1, x}` with `x² = x`; `x` is grouplike and
/// has no inverse, so this is not a Hopf algebra.
pub fn idempotent_monoid_bialgebra(ring: &RingSpec) -> BialgebraData {
    let carrier = FreeModule::new(ring.clone(), vec!["1".into(), "x".into()]).expect("labels");
    let p = ring.one();
    let algebra = AlgebraData::from_constants(
        carrier.clone(),
        &[
            (0, 0, 0, p.clone()),
            (0, 1, 1, p.clone()),
            (1, 0, 1, p.clone()),
            (1, 1, 1, p.clone()),
        ],
        carrier.basis_vector(0),
    )
    .expect("table");
    let coalgebra = CoalgebraData::from_constants(
        carrier,
        &[(0, 0, 0, p.clone()), (1, 1, 1, p.clone())],
        vec![p.clone(), p],
    )
    .expect("table");
    BialgebraData::new(algebra, coalgebra).expect("same carrier")
}

/// `R×R` with componentwise product on the idempotents `p1, p2`.
pub fn product_ring(ring: &RingSpec) -> AlgebraData {
    let carrier = FreeModule::new(ring.clone(), vec!["p1".into(), "p2".into()]).expect("labels");
    let p = ring.one();
    AlgebraData::from_constants(
        carrier,
        &[(0, 0, 0, p.clone()), (1, 1, 1, p.clone())],
        vec![p.clone(), p],
    )
    .expect("table")
}

/// `R[t]/(t²)` on `1, t`.
pub fn dual_numbers(ring: &RingSpec) -> AlgebraData {
    let carrier = FreeModule::new(ring.clone(), vec!["1".into(), "t".into()]).expect("labels");
    let p = ring.one();
    AlgebraData::from_constants(
        carrier.clone(),
        &[(0, 0, 0, p.clone()), (0, 1, 1, p.clone()), (1, 0, 1, p)],
        carrier.basis_vector(0),
    )
    .expect("table")
}

/// `R[i]/(i² + 1)` on `1, i`.
pub fn gaussian_integers(ring: &RingSpec) -> AlgebraData {
    let carrier = FreeModule::new(ring.clone(), vec!["1".into(), "i".into()]).expect("labels");
    let p = ring.one();
    AlgebraData::from_constants(
        carrier.clone(),
        &[
            (0, 0, 0, p.clone()),
            (0, 1, 1, p.clone()),
            (1, 0, 1, p),
            (1, 1, 0, ring.int(-1)),
        ],
        carrier.basis_vector(0),
    )
    .expect("table")
}

/// Shorthand for building a Hopf algebra and checking all axioms.
pub fn validated(h: HopfData) -> Result<HopfData> {
    h.validate().into_result()?;
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::compute_antipode;
    use crate::linalg::{invert_map, LinearMap};

    #[test]
    fn sweedler_axioms_and_antipode() {
        let q = RingSpec::Rationals;
        let h = sweedler_hopf(&q);
        assert!(h.validate().all_passed(), "{}", h.validate());
        let s = h.antipode();
        // S(x) = -gx
        assert_eq!(s.column(2), vec![q.zero(), q.zero(), q.zero(), q.int(-1)]);
        let s2 = s.compose(s).unwrap();
        assert!(!s2.is_identity());
        assert!(s2.compose(&s2).unwrap().is_identity());
        assert_eq!(h.twisted_antipode().unwrap(), &invert_map(s).unwrap());
        let s3 = s2.compose(s).unwrap();
        assert_eq!(h.twisted_antipode().unwrap(), &s3);
    }

    #[test]
    fn monoid_bialgebra_is_not_hopf() {
        let z = RingSpec::Integers;
        let b = idempotent_monoid_bialgebra(&z);
        assert!(b.validate().all_passed());
        assert!(matches!(
            compute_antipode(&b),
            Err(crate::Error::NotConvInvertible(_))
        ));
    }

    #[test]
    fn cyclic_antipodes() {
        let z = RingSpec::Integers;
        for n in 2..=4 {
            let h = cyclic_group_algebra(&z, n);
            let s: &LinearMap = h.antipode();
            // S(g) = g^{n-1}
            assert_eq!(s.column(1), h.carrier().basis_vector(n - 1));
        }
    }
}
