//! The left `H`-coactions `υ` and `ω` on `H*` and their characterizing
//! identities.

use serde::Serialize;

use crate::actions::RegularActions;
use crate::algebra::AlgebraData;
use crate::coalgebra::Term;
use crate::error::Result;
use crate::hopf::{dual_hopf, HopfData};
use crate::linalg::{kernel, span_generators, FreeModule, LinearMap, Matrix};
use crate::report::ValidationReport;
use crate::ring::{nonzeros, RingSpec, Scalar, Vector};
use crate::smash::SubalgebraU;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CoactionKind {
    /// `Σ f_{-1} f_0(h) = Σ h_3 S̄(h_1) f(h_2)`
    Upsilon,
    /// `Σ f_0(h) f_{-1} = Σ f(h_2) S(h_1) h_3`
    Omega,
}

/// A coaction `H* → H⊗H*`, index `y·n + x` for `e_y⊗δ_x`.
#[derive(Clone, Debug)]
pub struct CoactionTable {
    pub kind: CoactionKind,
    hopf: HopfData,
    dual: HopfData,
    pub coaction: LinearMap,
}

fn sweedler(h: &HopfData, legs: usize) -> Vec<Vec<Term>> {
    h.coalgebra().sweedler_table(legs)
}

/// Computes `υ` or `ω` on the `δ`-basis. At finite rank `H⊗H* ≅ End_R(H)`,
/// so the defining identity determines the coaction uniquely.
pub fn coaction_table(h: &HopfData, kind: CoactionKind) -> Result<CoactionTable> {
    let n = h.dim();
    let ring = h.ring().clone();
    let dual = dual_hopf(h)?;
    let anti = match kind {
        CoactionKind::Upsilon => h.twisted_antipode()?.clone(),
        CoactionKind::Omega => h.antipode().clone(),
    };
    let a = h.algebra();
    let sw3 = sweedler(h, 3);
    let codomain = h.carrier().tensor(dual.carrier())?;
    let coaction = LinearMap::from_fn(dual.carrier(), &codomain, |f| {
        let mut out = ring.zeros(n * n);
        for x in 0..n {
            // T(e_x) ∈ H; the coefficient of e_y⊗δ_x is its y-coordinate
            let mut t = ring.zeros(n);
            for (l, c) in &sw3[x] {
                let (outer, mid) = match kind {
                    CoactionKind::Upsilon => ((l[2], l[0]), l[1]),
                    CoactionKind::Omega => ((l[0], l[2]), l[1]),
                };
                if mid != f {
                    continue;
                }
                let v = match kind {
                    CoactionKind::Upsilon => a.mul(&a.basis(outer.0), &anti.column(outer.1)),
                    CoactionKind::Omega => a.mul(&anti.column(outer.0), &a.basis(outer.1)),
                };
                ring.axpy(&mut t, c, &v);
            }
            for (y, v) in nonzeros(&t) {
                out[y * n + x] = v.clone();
            }
        }
        out
    })?;
    Ok(CoactionTable {
        kind,
        hopf: h.clone(),
        dual,
        coaction,
    })
}

impl CoactionTable {
    pub fn hopf(&self) -> &HopfData {
        &self.hopf
    }

    pub fn dual(&self) -> &HopfData {
        &self.dual
    }

    fn ring(&self) -> &RingSpec {
        self.hopf.ring()
    }

    /// Terms `(y, x, c)` of `Σ f_{-1}⊗f_0 = Σ c·e_y⊗δ_x`.
    pub fn coact(&self, f: &[Scalar]) -> Vec<(usize, usize, Scalar)> {
        let n = self.hopf.dim();
        let v = self.coaction.apply(f).expect("shape");
        nonzeros(&v).map(|(p, c)| (p / n, p % n, c.clone())).collect()
    }

    /// `f ↦ 1⊗f` for every `f`.
    pub fn is_trivial(&self) -> bool {
        let n = self.hopf.dim();
        let unit = self.hopf.algebra().unit();
        (0..n).all(|f| {
            let col = self.coaction.column(f);
            (0..n * n).all(|p| {
                let (y, x) = (p / n, p % n);
                let want = if x == f { unit[y].clone() } else { self.ring().zero() };
                col[p] == want
            })
        })
    }

    /// `f↼g` from the defining formula.
    fn hit_by(&self, f: &[Scalar], g: &[Scalar]) -> Vector {
        let h = &self.hopf;
        let n = h.dim();
        let ring = self.ring();
        let a = h.algebra();
        let sw3 = sweedler(h, 3);
        let anti = match self.kind {
            CoactionKind::Upsilon => h.twisted_antipode().expect("checked at construction").clone(),
            CoactionKind::Omega => h.antipode().clone(),
        };
        (0..n)
            .map(|x| {
                let mut acc = ring.zero();
                for (l, c) in &sw3[x] {
                    let arg = match self.kind {
                        CoactionKind::Upsilon => a.mul(&a.basis(l[2]), &anti.column(l[0])),
                        CoactionKind::Omega => a.mul(&anti.column(l[0]), &a.basis(l[2])),
                    };
                    let t = ring.mul(&ring.dot(g, &arg), &f[l[1]]);
                    ring.add_mul_assign(&mut acc, c, &t);
                }
                acc
            })
            .collect()
    }

    /// `f⇀h = Σ h_1 f(h_2)` and `h↼f = Σ f(h_1) h_2`.
    fn hits(&self, f: &[Scalar], x: usize) -> (Vector, Vector) {
        let ring = self.ring();
        let n = self.hopf.dim();
        let (mut left, mut right) = (ring.zeros(n), ring.zeros(n));
        for (a, b, c) in self.hopf.coalgebra().coproduct(x) {
            ring.add_mul_assign(&mut left[*a], c, &f[*b]);
            ring.add_mul_assign(&mut right[*b], c, &f[*a]);
        }
        (left, right)
    }

    /// The defining identity, conditions (1-a), (1-b), the coalgebra
    /// compatibility and the module formula, each on all basis elements.
    pub fn check(&self) -> ValidationReport {
        let h = &self.hopf;
        let n = h.dim();
        let ring = self.ring().clone();
        let a = h.algebra();
        let dual = self.dual.algebra();
        let reg = RegularActions::new(h);
        let upsilon = self.kind == CoactionKind::Upsilon;
        let carrier = self.dual.carrier();
        let mut r = ValidationReport::new();
        let delta = |i: usize| dual.basis(i);
        let coacts: Vec<_> = (0..n).map(|f| self.coact(&delta(f))).collect();

        // Σ g(f_{-1}) f_0 = f↼g
        let mut w = None;
        'def: for f in 0..n {
            for g in 0..n {
                let lhs = self.hit_by(&delta(f), &delta(g));
                let mut rhs = ring.zeros(n);
                for (y, x, c) in &coacts[f] {
                    let t = ring.mul(c, &delta(g)[*y]);
                    ring.axpy(&mut rhs, &t, &delta(*x));
                }
                if lhs != rhs {
                    w = Some(format!("{}, {}", carrier.label(f), carrier.label(g)));
                    break 'def;
                }
            }
        }
        r.record("f↼g = Σ g(f₋₁)f₀", w);

        // (1-a)
        let mut w = None;
        'a: for f in 0..n {
            for g in 0..n {
                let lhs = dual.mul(&delta(f), &delta(g));
                let mut rhs = ring.zeros(n);
                for (y, x, c) in &coacts[f] {
                    let moved = if upsilon {
                        reg.right(&delta(g), &a.basis(*y))
                    } else {
                        reg.left(&a.basis(*y), &delta(g))
                    };
                    ring.axpy(&mut rhs, c, &dual.mul(&moved, &delta(*x)));
                }
                if lhs != rhs {
                    w = Some(format!("{}, {}", carrier.label(f), carrier.label(g)));
                    break 'a;
                }
            }
        }
        let name = if upsilon { "f⋆g = Σ (g·f₋₁)⋆f₀" } else { "f⋆g = Σ (f₋₁·g)⋆f₀" };
        r.record(name, w);

        // (1-b)
        let mut w = None;
        'b: for f in 0..n {
            for x in 0..n {
                let (_, lhs) = self.hits(&delta(f), x);
                let mut rhs = ring.zeros(n);
                for (y, f0, c) in &coacts[f] {
                    let (hit, _) = self.hits(&delta(*f0), x);
                    let prod = if upsilon { a.mul(&a.basis(*y), &hit) } else { a.mul(&hit, &a.basis(*y)) };
                    ring.axpy(&mut rhs, c, &prod);
                }
                if lhs != rhs {
                    w = Some(format!("{}, {}", carrier.label(f), h.carrier().label(x)));
                    break 'b;
                }
            }
        }
        let name = if upsilon { "h↼f = Σ f₋₁(f₀⇀h)" } else { "h↼f = Σ (f₀⇀h)f₋₁" };
        r.record(name, w);

        // (3)
        let mut w = None;
        if upsilon {
            'assoc: for f in 0..n {
                for ft in 0..n {
                    for g in 0..n {
                        let lhs = dual.mul(&dual.mul(&delta(f), &delta(ft)), &delta(g));
                        let mut rhs = ring.zeros(n);
                        for (y, x, c) in &coacts[f] {
                            for (yt, xt, ct) in &coacts[ft] {
                                let hh = a.mul(&a.basis(*yt), &a.basis(*y));
                                let moved = reg.right(&delta(g), &hh);
                                let t = dual.mul(&moved, &dual.mul(&delta(*x), &delta(*xt)));
                                ring.axpy(&mut rhs, &ring.mul(c, ct), &t);
                            }
                        }
                        if lhs != rhs {
                            w = Some(format!("{}, {}, {}", carrier.label(f), carrier.label(ft), carrier.label(g)));
                            break 'assoc;
                        }
                    }
                }
            }
            r.record("(f⋆f̃)⋆g = Σ g·(f̃₋₁f₋₁)⋆(f₀⋆f̃₀)", w);
        } else {
            'assoc: for f in 0..n {
                for ft in 0..n {
                    let lhs = self.coaction.apply(&dual.mul(&delta(f), &delta(ft))).expect("shape");
                    let mut rhs = ring.zeros(n * n);
                    for (y, x, c) in &coacts[f] {
                        for (yt, xt, ct) in &coacts[ft] {
                            let hh = a.mul(&a.basis(*y), &a.basis(*yt));
                            let ff = dual.mul(&delta(*x), &delta(*xt));
                            let t = crate::crossed::tensor_vec(&ring, &hh, &ff);
                            ring.axpy(&mut rhs, &ring.mul(c, ct), &t);
                        }
                    }
                    if lhs != rhs {
                        w = Some(format!("{}, {}", carrier.label(f), carrier.label(ft)));
                        break 'assoc;
                    }
                }
            }
            r.record("ω multiplicative", w);
        }

        // (4)
        let mut w = None;
        let anti = if upsilon {
            h.twisted_antipode().expect("checked at construction").clone()
        } else {
            h.antipode().clone()
        };
        let sw3 = sweedler(h, 3);
        'module: for f in 0..n {
            for hb in 0..n {
                let moved = if upsilon {
                    reg.right(&delta(f), &a.basis(hb))
                } else {
                    reg.left(&a.basis(hb), &delta(f))
                };
                let lhs = self.coaction.apply(&moved).expect("shape");
                let mut rhs = ring.zeros(n * n);
                for (l, lc) in &sw3[hb] {
                    for (y, x, c) in &coacts[f] {
                        let (left, right) = if upsilon {
                            let left = a.mul(&a.mul(&anti.column(l[2]), &a.basis(*y)), &a.basis(l[0]));
                            (left, reg.right(&delta(*x), &a.basis(l[1])))
                        } else {
                            let left = a.mul(&a.mul(&a.basis(l[0]), &a.basis(*y)), &anti.column(l[2]));
                            (left, reg.left(&a.basis(l[1]), &delta(*x)))
                        };
                        let t = crate::crossed::tensor_vec(&ring, &left, &right);
                        ring.axpy(&mut rhs, &ring.mul(lc, c), &t);
                    }
                }
                if lhs != rhs {
                    w = Some(format!("{}, {}", carrier.label(f), h.carrier().label(hb)));
                    break 'module;
                }
            }
        }
        let name = if upsilon {
            "υ(fh) = Σ S̄(h₃)f₋₁h₁⊗f₀h₂"
        } else {
            "ω(hf) = Σ h₁f₋₁S(h₃)⊗h₂f₀"
        };
        r.record(name, w);
        r
    }

    /// Generators of `V = {f : coaction(f) ∈ H⊗U}`.
    pub fn preimage(&self, u: &SubalgebraU) -> Result<Vec<Vector>> {
        let n = self.hopf.dim();
        let r = u.rank();
        let ring = self.ring();
        // [coaction | −(id⊗embed)] x = 0
        let emb = Matrix::from_columns(
            &(0..n * r)
                .map(|p| {
                    let (y, i) = (p / r, p % r);
                    let mut v = ring.zeros(n * n);
                    for (x, c) in nonzeros(&u.elements()[i]) {
                        v[y * n + x] = ring.neg(c);
                    }
                    v
                })
                .collect::<Vec<_>>(),
            n * n,
        );
        let m = self.coaction.matrix().hconcat(&emb);
        let gens: Vec<Vector> = kernel(ring, &m).into_iter().map(|k| k[..n].to_vec()).collect();
        Ok(span_generators(ring, &gens, n))
    }

    /// `H*` as a free module with `δ`-labels.
    pub fn dual_carrier(&self) -> &FreeModule {
        self.dual.carrier()
    }

    pub fn dual_algebra(&self) -> &AlgebraData {
        self.dual.algebra()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smash::Side;
    use crate::standard::{cyclic_group_algebra, sweedler_hopf};

    #[test]
    fn group_algebras_have_trivial_coactions() {
        let z = RingSpec::Integers;
        for k in [2, 3, 4] {
            let h = cyclic_group_algebra(&z, k);
            for kind in [CoactionKind::Upsilon, CoactionKind::Omega] {
                let t = coaction_table(&h, kind).unwrap();
                assert!(t.is_trivial());
                assert!(t.check().all_passed(), "{}", t.check());
            }
        }
    }

    #[test]
    fn sweedler_coactions_satisfy_identities() {
        for ring in [RingSpec::Rationals, RingSpec::integers_mod(3).unwrap(), RingSpec::Integers] {
            let h = sweedler_hopf(&ring);
            for kind in [CoactionKind::Upsilon, CoactionKind::Omega] {
                let t = coaction_table(&h, kind).unwrap();
                assert!(!t.is_trivial());
                let r = t.check();
                assert!(r.all_passed(), "{kind:?}\n{r}");
            }
        }
    }

    #[test]
    fn preimage_of_full_dual_is_everything() {
        let h = sweedler_hopf(&RingSpec::Rationals);
        let t = coaction_table(&h, CoactionKind::Upsilon).unwrap();
        let u = SubalgebraU::full(&h, Side::Right).unwrap();
        assert_eq!(t.preimage(&u).unwrap().len(), 4);
        let e = SubalgebraU::new(&h, Side::Right, vec![h.coalgebra().counit().clone()]).unwrap();
        // only multiples of ε coact into H⊗Rε
        let v = t.preimage(&e).unwrap();
        assert_eq!(v.len(), 1);
    }

    #[test]
    fn trivial_coaction_fails_for_sweedler() {
        let h = sweedler_hopf(&RingSpec::Rationals);
        for kind in [CoactionKind::Upsilon, CoactionKind::Omega] {
            let mut t = coaction_table(&h, kind).unwrap();
            let n = h.dim();
            let unit = h.algebra().unit().clone();
            t.coaction = LinearMap::from_fn(t.dual_carrier(), t.coaction.codomain(), |f| {
                let mut v = h.ring().zeros(n * n);
                for (y, c) in nonzeros(&unit) {
                    v[y * n + f] = c.clone();
                }
                v
            })
            .unwrap();
            assert!(t.is_trivial());
            let r = t.check();
            assert!(r.failures().count() >= 3, "{r}");
        }
    }
}
