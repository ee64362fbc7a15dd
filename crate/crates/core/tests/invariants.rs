mod common;

use common::{int, is_algebra_iso};
use hopfdual::actions::WeakActionData;
use hopfdual::algebra::{AlgebraData, AlgebraIso};
use hopfdual::crossed::{crossed_product, sigma_from_fn};
use hopfdual::duality::duality_iso;
use hopfdual::hopf::{compute_antipode, ConvolutionAlgebra};
use hopfdual::linalg::{solve_linear, twist, FreeModule, LinearMap, Matrix};
use hopfdual::smash::{Side, SubalgebraU};
use hopfdual::standard::{cyclic_group_algebra, dual_numbers, sweedler_hopf};
use hopfdual::{RingSpec, Scalar};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rat(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 24,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn residue_arithmetic_stays_canonical(n in 2i64..30, a in -100i64..100, b in -100i64..100, c in -100i64..100) {
        let r = RingSpec::integers_mod(n).unwrap();
        let (a, b, c) = (r.int(a), r.int(b), r.int(c));
        for v in [r.add(&a, &b), r.mul(&a, &b), r.sub(&a, &c), r.neg(&c)] {
            prop_assert!(r.is_canonical(&v));
        }
        prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
        prop_assert_eq!(r.add(&a, &r.neg(&a)), r.zero());
        if let Some(ai) = r.inv(&a) {
            prop_assert_eq!(r.mul(&a, &ai), r.one());
        }
        prop_assert_eq!(r.parse(&r.format(&a)).unwrap(), a);
    }

    #[test]
    fn rational_parse_format_round_trip(p in -1000i64..1000, q in 1i64..1000) {
        let r = RingSpec::Rationals;
        let v = rat(p, q);
        prop_assert_eq!(r.parse(&r.format(&v)).unwrap(), v);
    }

    #[test]
    fn rational_solutions_satisfy_the_system(entries in prop::collection::vec(-5i64..5, 9), x in prop::collection::vec(-5i64..5, 3)) {
        let q = RingSpec::Rationals;
        let rows: Vec<Vec<Scalar>> = entries.chunks(3).map(|r| r.iter().map(|&v| int(v)).collect()).collect();
        let m = Matrix::from_rows(rows, 3);
        let x: Vec<Scalar> = x.iter().map(|&v| int(v)).collect();
        let b = m.mul_vec(&q, &x);
        let module = FreeModule::numbered(q.clone(), "e", 3);
        let map = LinearMap::new(module.clone(), module, m.clone()).unwrap();
        let res = solve_linear(&map, &b).unwrap();
        let p = res.particular.clone().expect("consistent by construction");
        prop_assert_eq!(m.mul_vec(&q, &p), b);
        for k in &res.kernel_basis {
            prop_assert!(m.mul_vec(&q, k).iter().all(|c| *c == q.zero()));
        }
        if res.kernel_basis.is_empty() {
            prop_assert_eq!(p, x);
        }
    }

    #[test]
    fn twist_is_an_involution(a in 1usize..5, b in 1usize..5) {
        let z = RingSpec::Integers;
        let m = FreeModule::numbered(z.clone(), "m", a);
        let n = FreeModule::numbered(z, "n", b);
        let t = twist(&m, &n).unwrap();
        let back = twist(&n, &m).unwrap();
        prop_assert!(back.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn cyclic_antipode_is_group_inverse(n in 1usize..8) {
        let z = RingSpec::Integers;
        let h = cyclic_group_algebra(&z, n);
        let s = compute_antipode(h.bialgebra()).unwrap();
        for k in 0..n {
            prop_assert_eq!(s.column(k), z.unit_vector(n, (n - k) % n));
        }
        prop_assert!(h.validate().all_passed());
    }

    /// `Q#_σQ[C2]` with `σ(g⊗g) = c` is `Q[√c]`; the duality iso exists for
    /// every nonzero `c` on both sides.
    #[test]
    fn twisted_c2_duality_over_q(p in prop_oneof![-9i64..-1, 1i64..9], q in 1i64..5, left in any::<bool>()) {
        let ring = RingSpec::Rationals;
        let h = cyclic_group_algebra(&ring, 2);
        let a = AlgebraData::base(&ring);
        let c = rat(p, q);
        let sigma = sigma_from_fn(&h, &a, |i, j| if i == 1 && j == 1 { vec![c.clone()] } else { a.unit().clone() }).unwrap();
        let cp = crossed_product(&WeakActionData::trivial(h.clone(), a), &sigma).unwrap();
        let side = if left { Side::Left } else { Side::Right };
        let u = SubalgebraU::full(&h, side).unwrap();
        let iso = duality_iso(&cp, &u).unwrap();
        prop_assert_eq!(is_algebra_iso(&iso.map, &iso.inverse, &iso.source, &iso.target), Ok(()));
    }

    /// Same over `Z/p` with `c` a unit.
    #[test]
    fn twisted_c2_duality_mod_p(p in prop_oneof![Just(3i64), Just(5), Just(7)], c in 1i64..7) {
        let ring = RingSpec::integers_mod(p).unwrap();
        let c = ring.int(c);
        prop_assume!(ring.is_unit(&c));
        let h = cyclic_group_algebra(&ring, 2);
        let a = AlgebraData::base(&ring);
        let sigma = sigma_from_fn(&h, &a, |i, j| if i == 1 && j == 1 { vec![c.clone()] } else { a.unit().clone() }).unwrap();
        let cp = crossed_product(&WeakActionData::trivial(h.clone(), a), &sigma).unwrap();
        let iso = duality_iso(&cp, &SubalgebraU::full(&h, Side::Right).unwrap()).unwrap();
        prop_assert_eq!(is_algebra_iso(&iso.map, &iso.inverse, &iso.source, &iso.target), Ok(()));
    }

    /// A map `H4 → Q[t]/(t²)` sending grouplikes to units is convolution
    /// invertible, and inverting twice gives it back.
    #[test]
    fn convolution_inverse_is_an_involution(vals in prop::collection::vec(-4i64..4, 6), u0 in 1i64..4, u1 in 1i64..4) {
        let q = RingSpec::Rationals;
        let h = sweedler_hopf(&q);
        let a = dual_numbers(&q);
        let conv = ConvolutionAlgebra::new(h.coalgebra(), &a).unwrap();
        let cols = [
            vec![int(u0), int(vals[0])],
            vec![int(-u1), int(vals[1])],
            vec![int(vals[2]), int(vals[3])],
            vec![int(vals[4]), int(vals[5])],
        ];
        let f = LinearMap::from_fn(h.carrier(), a.carrier(), |i| cols[i].clone()).unwrap();
        let g = conv.invert_map(&f).unwrap();
        let back = conv.invert_map(&g).unwrap();
        prop_assert!(back.same_matrix(&f));
        let one = conv.unit_map();
        prop_assert!(conv.product_maps(&f, &g).unwrap().same_matrix(&one));
        prop_assert!(conv.product_maps(&g, &f).unwrap().same_matrix(&one));
    }
}

#[test]
fn certification_rejects_a_perturbed_iso() {
    let z = RingSpec::Integers;
    let h = cyclic_group_algebra(&z, 2);
    let a = AlgebraData::base(&z);
    let sigma = sigma_from_fn(&h, &a, |i, j| if i == 1 && j == 1 { vec![int(-1)] } else { a.unit().clone() }).unwrap();
    let cp = crossed_product(&WeakActionData::trivial(h.clone(), a), &sigma).unwrap();
    let iso = duality_iso(&cp, &SubalgebraU::full(&h, Side::Right).unwrap()).unwrap();
    let mut m = iso.map.matrix().clone();
    let last = m.cols() - 1;
    let v = z.add(m.get(0, last), &z.one());
    m.set(0, last, v);
    let bad = LinearMap::new(iso.map.domain().clone(), iso.map.codomain().clone(), m).unwrap();
    assert!(AlgebraIso::certify(bad.clone(), &iso.source, &iso.target).is_err());
    assert!(is_algebra_iso(&bad, &iso.inverse, &iso.source, &iso.target).is_err());
}
