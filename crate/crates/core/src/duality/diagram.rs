//! The commutative square of algebra maps relating `(A#_σH)#U`,
//! `A⊗(H#U)`, `#(H, A#_σH)` and the one-sided endomorphisms of `H⊗A`,
//! and the isomorphism `χ^{-1}∘γ` it produces. The left side uses
//! `#^op` throughout.

use serde::Serialize;

use crate::algebra::{multiplicativity_witness, AlgebraData, AlgebraIso};
use crate::coalgebra::Term;
use crate::crossed::{tensor_vec, CrossedProductData, Sigma};
use crate::error::{Error, Result};
use crate::hopf::HopfData;
use crate::linalg::{invert_map, solve_linear, LinearMap, SolveStatus};
use crate::actions::ComoduleAlgebraData;
use crate::report::ValidationReport;
use crate::ring::{nonzeros, RingSpec, Scalar, Vector};
use crate::smash::{hat_smash, op_hat_smash, op_smash, right_smash, Side, SubalgebraU};

use super::maps::{end_left_linear, end_right_linear, epsilon_maps, first_diff, pair_label, EpsilonMaps};

/// Where `g(k_5)` sits in the product inside `π(g)(k⊗ã)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PiOrder {
    /// `g(k_5)·((σ^{-1}(k_2⊗S̄k_1)(k_3ã))#k_4)`
    ValueFirst,
    /// `((σ^{-1}(k_2⊗S̄k_1)(k_3ã))#k_4)·g(k_5)`
    ValueLast,
}

#[derive(Clone, Debug)]
pub struct DualityDiagram {
    pub side: Side,
    /// `(A#_σH)#U` or `(A#_σH)#^opU`
    pub smash: AlgebraData,
    /// `A⊗(H#U)` or `A⊗(H#^opU)`
    pub tensor: AlgebraData,
    /// `#(H, A#_σH)` or `#^op(H, A#_σH)`
    pub hom: AlgebraData,
    /// `End_{-A}(H⊗A)` or `End_{A-}(A⊗H)^op`
    pub end: AlgebraData,
    pub alpha: LinearMap,
    pub chi: LinearMap,
    pub gamma: LinearMap,
    pub delta: LinearMap,
    pub pi: LinearMap,
    /// `ν: A#_σH → H⊗A`; right side only.
    pub nu: Option<LinearMap>,
    pub epsilon: EpsilonMaps,
    /// Right side: orders for which `π∘α = γ` holds, and the one used.
    pub pi_orders_commuting: Vec<PiOrder>,
    pub pi_order: Option<PiOrder>,
}

/// Shorthand for arithmetic in `H`, `A` and `A#_σH`.
struct Ctx<'a> {
    h: &'a HopfData,
    cp: &'a CrossedProductData,
    ring: RingSpec,
    n: usize,
    m: usize,
    anti: LinearMap,
    sigma: Sigma,
    sigma_inv: Sigma,
}

impl<'a> Ctx<'a> {
    fn new(cp: &'a CrossedProductData, side: Side) -> Result<Self> {
        let h = cp.hopf();
        let anti = match side {
            Side::Right => h.twisted_antipode()?.clone(),
            Side::Left => h.antipode().clone(),
        };
        Ok(Ctx {
            h,
            cp,
            ring: h.ring().clone(),
            n: h.dim(),
            m: cp.base().dim(),
            anti,
            sigma: cp.sigma(),
            sigma_inv: cp.sigma_inv(),
        })
    }

    fn hb(&self, i: usize) -> Vector {
        self.h.algebra().basis(i)
    }

    fn hmul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.h.algebra().mul(x, y)
    }

    fn hmul_b(&self, i: usize, j: usize) -> Vector {
        crate::algebra::densify(self.h.algebra().mul_basis(i, j), self.n, &self.ring)
    }

    /// `S̄` on the right side, `S` on the left side
    fn anti(&self, x: &[Scalar]) -> Vector {
        self.anti.apply(x).expect("shape")
    }

    fn anti_b(&self, i: usize) -> Vector {
        self.anti.column(i)
    }

    fn amul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.cp.base().mul(x, y)
    }

    fn act(&self, h: &[Scalar], a: &[Scalar]) -> Vector {
        self.cp.action.act(h, a)
    }

    fn legs(&self, i: usize, k: usize) -> Vec<Term> {
        self.h.coalgebra().sweedler(i, k)
    }
}

/// `ν(a#h) = Σ h_4 ⊗ [S̄(h_3)a]σ(S̄(h_2)⊗h_1)`, `A⊗H → H⊗A`.
fn nu_map(c: &Ctx) -> Result<LinearMap> {
    let (n, m) = (c.n, c.m);
    let cp_carrier = c.cp.algebra.carrier();
    let ha = c.h.carrier().tensor(c.cp.base().carrier())?;
    let sw4: Vec<Vec<Term>> = (0..n).map(|i| c.legs(i, 4)).collect();
    LinearMap::from_fn(cp_carrier, &ha, |p| {
        let (a, h) = (p / n, p % n);
        let av = c.cp.base().basis(a);
        let mut out = c.ring.zeros(n * m);
        for (l, coef) in &sw4[h] {
            let x = c.amul(
                &c.act(&c.anti_b(l[2]), &av),
                c.sigma.apply_left(&c.anti_b(l[1]), l[0]).as_slice(),
            );
            let t = tensor_vec(&c.ring, &c.hb(l[3]), &x);
            c.ring.axpy(&mut out, coef, &t);
        }
        out
    })
}

/// Scatter `x ∈ A` and `y ∈ H` into a value slot, right side layout
/// `k·(n·m) + y·m + b`.
fn put_right(c: &Ctx, out: &mut [Scalar], k: usize, coef: &Scalar, hv: &[Scalar], av: &[Scalar]) {
    let d = c.n * c.m;
    for (y, u) in nonzeros(hv) {
        let cu = c.ring.mul(coef, u);
        for (b, v) in nonzeros(av) {
            c.ring.add_mul_assign(&mut out[k * d + y * c.m + b], &cu, v);
        }
    }
}

/// Left side / `A⊗H` layout `k·(m·n) + b·n + y`.
fn put_left(c: &Ctx, out: &mut [Scalar], k: usize, coef: &Scalar, av: &[Scalar], hv: &[Scalar]) {
    let d = c.n * c.m;
    for (b, u) in nonzeros(av) {
        let cu = c.ring.mul(coef, u);
        for (y, v) in nonzeros(hv) {
            c.ring.add_mul_assign(&mut out[k * d + b * c.n + y], &cu, v);
        }
    }
}

pub fn build_diagram(cp: &CrossedProductData, u: &SubalgebraU) -> Result<DualityDiagram> {
    let side = u.side();
    match side {
        Side::Right => {
            let mut commuting = Vec::new();
            let mut first = None;
            for order in [PiOrder::ValueFirst, PiOrder::ValueLast] {
                let d = build_diagram_with_order(cp, u, order)?;
                let pa = d.pi.compose(&d.alpha)?;
                if pa.same_matrix(&d.gamma) {
                    commuting.push(order);
                    if first.is_none() {
                        first = Some(d);
                    }
                }
            }
            match first {
                Some(mut d) => {
                    d.pi_orders_commuting = commuting;
                    Ok(d)
                }
                None => {
                    let d = build_diagram_with_order(cp, u, PiOrder::ValueFirst)?;
                    let pa = d.pi.compose(&d.alpha)?;
                    let j = first_diff(&pa, &d.gamma).unwrap_or(0);
                    Err(Error::CommutativityFailure {
                        map: "π∘α = γ".into(),
                        witness: d.smash.carrier().label(j).to_string(),
                    })
                }
            }
        }
        Side::Left => build_diagram_with_order(cp, u, PiOrder::ValueFirst),
    }
}

/// Builds all maps of the diagram; `order` only affects the right-side `π`.
pub fn build_diagram_with_order(
    cp: &CrossedProductData,
    u: &SubalgebraU,
    order: PiOrder,
) -> Result<DualityDiagram> {
    let side = u.side();
    if u.hopf().dim() != cp.hopf().dim() || u.ring() != cp.ring() {
        return Err(Error::DimensionMismatch("U is not a subalgebra of this H*".into()));
    }
    let c = Ctx::new(cp, side)?;
    let (n, m, r) = (c.n, c.m, u.rank());
    let ring = c.ring.clone();
    let d = n * m;
    let a = cp.base();
    let reg = ComoduleAlgebraData::regular(c.h);
    let (smash, hsmash, hom, end) = match side {
        Side::Right => (
            right_smash(&cp.comodule, u)?.algebra,
            right_smash(&reg, u)?.algebra,
            hat_smash(&cp.comodule)?.algebra,
            end_right_linear(c.h.carrier(), a),
        ),
        Side::Left => (
            op_smash(&cp.comodule, u)?.algebra,
            op_smash(&reg, u)?.algebra,
            op_hat_smash(&cp.comodule)?.algebra,
            end_left_linear(c.h.carrier(), a).opposite(),
        ),
    };
    let tensor = a.tensor(&hsmash)?;
    let epsilon = epsilon_maps(c.h, a, side)?;
    let epsilon = EpsilonMaps {
        epsilon: epsilon.epsilon.with_modules(hom.carrier(), end.carrier())?,
        epsilon_inv: epsilon.epsilon_inv.with_modules(end.carrier(), hom.carrier())?,
        ..epsilon
    };

    // u_i(e_k) and Sweedler tables
    let ueval = |i: usize, k: usize| u.elements()[i][k].clone();
    let sw = |l: usize| -> Vec<Vec<Term>> { (0..n).map(|i| c.legs(i, l)).collect() };
    let sw2 = sw(2);

    // α((a#h)#f)(k) = (a#h)f(k); index of (a#h)#u is (a·n + h)·r + u
    let alpha = LinearMap::from_fn(smash.carrier(), hom.carrier(), |p| {
        let (ah, i) = (p / r, p % r);
        let mut out = ring.zeros(n * d);
        for k in 0..n {
            out[k * d + ah] = ueval(i, k);
        }
        out
    })?;

    // χ(a⊗(h#f)): right (k⊗ã) ↦ h(f⇀k)⊗aã, left (ã⊗k) ↦ ãa⊗(f⇀k)h
    let chi = LinearMap::from_fn(tensor.carrier(), end.carrier(), |p| {
        let (x, rest) = (p / (n * r), p % (n * r));
        let (hh, i) = (rest / r, rest % r);
        let av = a.basis(x);
        let mut out = ring.zeros(n * d);
        for k in 0..n {
            let hit = u.hit(i, k);
            match side {
                Side::Right => {
                    let hv = c.hmul(&c.hb(hh), &hit);
                    put_right(&c, &mut out, k, &ring.one(), &hv, &av);
                }
                Side::Left => {
                    let hv = c.hmul(&hit, &c.hb(hh));
                    put_left(&c, &mut out, k, &ring.one(), &av, &hv);
                }
            }
        }
        out
    })?;

    let gamma = match side {
        Side::Right => {
            // Σ h_4 k_3 f(k_4) ⊗ [S̄(h_3k_2)a]σ(S̄(h_2k_1)⊗h_1)
            let sw4 = sw(4);
            LinearMap::from_fn(smash.carrier(), end.carrier(), |p| {
                let (ah, i) = (p / r, p % r);
                let (x, hh) = (ah / n, ah % n);
                let av = a.basis(x);
                let mut out = ring.zeros(n * d);
                for k in 0..n {
                    for (hl, hc) in &sw4[hh] {
                        for (kl, kc) in &sw4[k] {
                            let f = ueval(i, kl[3]);
                            if f == ring.zero() {
                                continue;
                            }
                            let coef = ring.mul(&ring.mul(hc, kc), &f);
                            let hv = c.hmul_b(hl[3], kl[2]);
                            let s1 = c.anti(&c.hmul_b(hl[2], kl[1]));
                            let s2 = c.anti(&c.hmul_b(hl[1], kl[0]));
                            let av2 = c.amul(&c.act(&s1, &av), &c.sigma.apply_left(&s2, hl[0]));
                            put_right(&c, &mut out, k, &coef, &hv, &av2);
                        }
                    }
                }
                out
            })?
        }
        Side::Left => {
            // Σ [k_1a]σ(k_2⊗h_1) ⊗ k_3 f(k_4) h_2
            let sw4 = sw(4);
            LinearMap::from_fn(smash.carrier(), end.carrier(), |p| {
                let (ah, i) = (p / r, p % r);
                let (x, hh) = (ah / n, ah % n);
                let mut out = ring.zeros(n * d);
                for k in 0..n {
                    for (hl, hc) in &sw2[hh] {
                        for (kl, kc) in &sw4[k] {
                            let f = ueval(i, kl[3]);
                            if f == ring.zero() {
                                continue;
                            }
                            let coef = ring.mul(&ring.mul(hc, kc), &f);
                            let av2 = c.amul(cp.action.act_basis(kl[0], x), c.sigma.basis(kl[1], hl[0]));
                            let hv = c.hmul_b(kl[2], hl[1]);
                            put_left(&c, &mut out, k, &coef, &av2, &hv);
                        }
                    }
                }
                out
            })?
        }
    };

    let delta = match side {
        Side::Right => {
            // Σ σ⁻¹(h_2k_4⊗S̄(h_1k_3))[(h_3k_5)a]σ(h_4k_6⊗S̄(k_2)) # h_5 k_7 f(k_8) S̄(k_1)
            let sw5 = sw(5);
            let sw8 = sw(8);
            LinearMap::from_fn(tensor.carrier(), hom.carrier(), |p| {
                let (x, rest) = (p / (n * r), p % (n * r));
                let (hh, i) = (rest / r, rest % r);
                let av = a.basis(x);
                let mut out = ring.zeros(n * d);
                for k in 0..n {
                    for (kl, kc) in &sw8[k] {
                        let f = ueval(i, kl[7]);
                        if f == ring.zero() {
                            continue;
                        }
                        let kcf = ring.mul(kc, &f);
                        for (hl, hc) in &sw5[hh] {
                            let coef = ring.mul(&kcf, hc);
                            let s_inv = c.sigma_inv.apply(
                                &c.hmul_b(hl[1], kl[3]),
                                &c.anti(&c.hmul_b(hl[0], kl[2])),
                            );
                            let mid = c.act(&c.hmul_b(hl[2], kl[4]), &av);
                            let s = c.sigma.apply(&c.hmul_b(hl[3], kl[5]), &c.anti_b(kl[1]));
                            let av2 = c.amul(&c.amul(&s_inv, &mid), &s);
                            let hv = c.hmul(&c.hmul_b(hl[4], kl[6]), &c.anti_b(kl[0]));
                            put_left(&c, &mut out, k, &coef, &av2, &hv);
                        }
                    }
                }
                out
            })?
        }
        Side::Left => {
            // Σ σ⁻¹(S(k_4)⊗k_5)[S(k_3)a]σ(S(k_2)⊗k_6h_1) # S(k_1) k_7 f(k_8) h_2
            let sw8 = sw(8);
            LinearMap::from_fn(tensor.carrier(), hom.carrier(), |p| {
                let (x, rest) = (p / (n * r), p % (n * r));
                let (hh, i) = (rest / r, rest % r);
                let av = a.basis(x);
                let mut out = ring.zeros(n * d);
                for k in 0..n {
                    for (kl, kc) in &sw8[k] {
                        let f = ueval(i, kl[7]);
                        if f == ring.zero() {
                            continue;
                        }
                        let kcf = ring.mul(kc, &f);
                        let s_inv = c.sigma_inv.apply_left(&c.anti_b(kl[3]), kl[4]);
                        let mid = c.act(&c.anti_b(kl[2]), &av);
                        let left = c.amul(&s_inv, &mid);
                        for (hl, hc) in &sw2[hh] {
                            let coef = ring.mul(&kcf, hc);
                            let s = c.sigma.apply(&c.anti_b(kl[1]), &c.hmul_b(kl[5], hl[0]));
                            let av2 = c.amul(&left, &s);
                            let hv = c.hmul(&c.hmul(&c.anti_b(kl[0]), &c.hb(kl[6])), &c.hb(hl[1]));
                            put_left(&c, &mut out, k, &coef, &av2, &hv);
                        }
                    }
                }
                out
            })?
        }
    };

    let (pi, nu) = match side {
        Side::Right => {
            let nu = nu_map(&c)?;
            let pi = right_pi(&c, &hom, &end, &nu, order, None)?;
            (pi, Some(nu))
        }
        Side::Left => {
            // π̄(g)(ã⊗k) = Σ (ã#k_1)g(k_2), at ã = 1
            let pi = LinearMap::from_fn(hom.carrier(), end.carrier(), |p| {
                let (xg, rest) = (p / d, p % d);
                let g = cp.algebra.basis(rest);
                let mut out = ring.zeros(n * d);
                for k in 0..n {
                    for (k1, k2, cc) in c.h.coalgebra().coproduct(k) {
                        if *k2 != xg {
                            continue;
                        }
                        let one_k = cp.pure(a.unit(), &c.hb(*k1));
                        let v = cp.algebra.mul(&one_k, &g);
                        c.ring.axpy(&mut out[k * d..(k + 1) * d], cc, &v);
                    }
                }
                out
            })?;
            (pi, None)
        }
    };

    Ok(DualityDiagram {
        side,
        smash,
        tensor,
        hom,
        end,
        alpha,
        chi,
        gamma,
        delta,
        pi,
        nu,
        epsilon,
        pi_orders_commuting: Vec::new(),
        pi_order: (side == Side::Right).then_some(order),
    })
}

/// `π(g)(k⊗ã) = ν(Σ g(k_5)·((σ^{-1}(k_2⊗S̄(k_1))(k_3ã))#k_4))` with the
/// product order given by `order`; `ã = 1` unless `a_tilde` is given.
fn right_pi(
    c: &Ctx,
    hom: &AlgebraData,
    end: &AlgebraData,
    nu: &LinearMap,
    order: PiOrder,
    a_tilde: Option<usize>,
) -> Result<LinearMap> {
    let (n, m) = (c.n, c.m);
    let d = n * m;
    let a = c.cp.base();
    let at = match a_tilde {
        Some(t) => a.basis(t),
        None => a.unit().clone(),
    };
    let sw5: Vec<Vec<Term>> = (0..n).map(|i| c.legs(i, 5)).collect();
    LinearMap::from_fn(hom.carrier(), end.carrier(), |p| {
        let (xg, rest) = (p / d, p % d);
        let g = c.cp.algebra.basis(rest);
        let mut out = c.ring.zeros(n * d);
        for k in 0..n {
            let mut acc = c.ring.zeros(d);
            for (kl, kc) in &sw5[k] {
                if kl[4] != xg {
                    continue;
                }
                let s_inv = c.sigma_inv.apply_right(kl[1], &c.anti_b(kl[0]));
                let x = c.amul(&s_inv, &c.act(&c.hb(kl[2]), &at));
                let z = c.cp.pure(&x, &c.hb(kl[3]));
                let prod = match order {
                    PiOrder::ValueFirst => c.cp.algebra.mul(&g, &z),
                    PiOrder::ValueLast => c.cp.algebra.mul(&z, &g),
                };
                c.ring.axpy(&mut acc, kc, &prod);
            }
            let v = nu.apply(&acc).expect("shape");
            out[k * d..(k + 1) * d].clone_from_slice(&v);
        }
        out
    })
}

impl DualityDiagram {
    fn names(&self) -> [&'static str; 6] {
        match self.side {
            Side::Right => ["α", "χ", "γ", "δ", "π", "ε"],
            Side::Left => ["ᾱ", "χ̄", "γ̄", "δ̄", "π̄", "ε̄"],
        }
    }

    /// Commutativity, invertibility of `π`, `χ = ε∘α`, and the algebra
    /// morphism property of every arrow.
    pub fn check(&self) -> ValidationReport {
        let [a, x, g, d, p, e] = self.names();
        let mut r = ValidationReport::new();
        let label = |j: usize, m: &LinearMap| m.domain().label(j).to_string();
        let pa = self.pi.compose(&self.alpha).expect("shapes");
        r.record(format!("{p}∘{a} = {g}"), first_diff(&pa, &self.gamma).map(|j| label(j, &pa)));
        let pd = self.pi.compose(&self.delta).expect("shapes");
        r.record(format!("{p}∘{d} = {x}"), first_diff(&pd, &self.chi).map(|j| label(j, &pd)));
        let ea = self.epsilon.epsilon.compose(&self.alpha).expect("shapes");
        r.record(format!("{e}∘{a} = {x}"), first_diff(&ea, &self.chi).map(|j| label(j, &ea)));
        r.extend("", self.epsilon.validate());
        r.record(
            format!("{p} invertible"),
            invert_map(&self.pi).err().map(|e| e.to_string()),
        );
        let arrows: [(&str, &LinearMap, &AlgebraData, &AlgebraData); 5] = [
            (a, &self.alpha, &self.smash, &self.hom),
            (x, &self.chi, &self.tensor, &self.end),
            (g, &self.gamma, &self.smash, &self.end),
            (d, &self.delta, &self.tensor, &self.hom),
            (p, &self.pi, &self.hom, &self.end),
        ];
        for (name, map, src, dst) in arrows {
            let w = multiplicativity_witness(map, src, dst).map(|(i, j)| pair_label(src.carrier(), i, j));
            let w = w.or_else(|| {
                (map.apply(src.unit()).expect("shape") != *dst.unit()).then(|| "unit".to_string())
            });
            r.record(format!("{name} unital algebra morphism"), w);
        }
        if let Some(order) = self.pi_order {
            r.record(
                format!("π product order {order:?} makes π∘α = γ"),
                (!self.pi_orders_commuting.contains(&order)).then(|| format!("{:?}", self.pi_orders_commuting)),
            );
        }
        r
    }

    /// `χ^{-1}∘γ`, certified as a unital algebra isomorphism.
    pub fn duality_iso(&self) -> Result<AlgebraIso> {
        let map = if self.chi.domain().rank() == self.chi.codomain().rank() {
            invert_map(&self.chi)?.compose(&self.gamma)?
        } else {
            let cols = (0..self.gamma.domain().rank())
                .map(|j| {
                    let res = solve_linear(&self.chi, &self.gamma.column(j))?;
                    match res.status {
                        SolveStatus::Unique => Ok(res.particular.expect("unique")),
                        _ => Err(Error::NotInvertible(format!(
                            "γ({}) has no unique preimage under χ",
                            self.smash.carrier().label(j)
                        ))),
                    }
                })
                .collect::<Result<Vec<Vector>>>()?;
            LinearMap::from_fn(self.smash.carrier(), self.tensor.carrier(), |j| cols[j].clone())?
        };
        let map = map.with_modules(self.smash.carrier(), self.tensor.carrier())?;
        AlgebraIso::certify(map, &self.smash, &self.tensor)
    }

    /// Right side: `π(g)(k⊗ã) = π(g)(k⊗1)·ã` for every basis `ã`.
    pub fn pi_right_linear(&self, cp: &CrossedProductData) -> Result<Option<String>> {
        let Some(order) = self.pi_order else {
            return Ok(None);
        };
        let c = Ctx::new(cp, Side::Right)?;
        let nu = self.nu.as_ref().expect("right side");
        let a = cp.base();
        let (n, m) = (c.n, c.m);
        let d = n * m;
        for t in 0..m {
            let pt = right_pi(&c, &self.hom, &self.end, nu, order, Some(t))?;
            for j in 0..self.pi.domain().rank() {
                let base = self.pi.column(j);
                let col = pt.column(j);
                for k in 0..n {
                    for y in 0..n {
                        let slot = &base[k * d + y * m..k * d + (y + 1) * m];
                        let want = a.mul(slot, &a.basis(t));
                        if col[k * d + y * m..k * d + (y + 1) * m] != want[..] {
                            return Ok(Some(format!(
                                "{} at {}⊗{}",
                                self.hom.carrier().label(j),
                                c.h.carrier().label(k),
                                a.carrier().label(t)
                            )));
                        }
                    }
                }
            }
        }
        Ok(None)
    }
}

/// Shorthand: build the diagram and return `χ^{-1}∘γ`.
pub fn duality_iso(cp: &CrossedProductData, u: &SubalgebraU) -> Result<AlgebraIso> {
    build_diagram(cp, u)?.duality_iso()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::tests::{conjugation_crossed, gauss_crossed, sweedler_on_dual_numbers};

    fn examples() -> Vec<CrossedProductData> {
        vec![gauss_crossed(), conjugation_crossed(), sweedler_on_dual_numbers()]
    }

    #[test]
    fn diagram_commutes_full_dual() {
        for cp in examples() {
            for side in [Side::Right, Side::Left] {
                let u = SubalgebraU::full(cp.hopf(), side).unwrap();
                let d = build_diagram(&cp, &u).unwrap();
                let r = d.check();
                assert!(r.all_passed(), "{side:?}\n{r}");
                assert_eq!(d.pi_right_linear(&cp).unwrap(), None);
                d.duality_iso().unwrap();
            }
        }
    }

    #[test]
    fn only_value_first_order_commutes_in_general() {
        let cp = conjugation_crossed();
        let u = SubalgebraU::full(cp.hopf(), Side::Right).unwrap();
        let d = build_diagram(&cp, &u).unwrap();
        assert_eq!(d.pi_orders_commuting, vec![PiOrder::ValueFirst]);
        let bad = build_diagram_with_order(&cp, &u, PiOrder::ValueLast).unwrap();
        assert!(!bad.check().all_passed());
    }

    #[test]
    fn counit_subalgebra() {
        for cp in examples() {
            let h = cp.hopf();
            for side in [Side::Right, Side::Left] {
                let u = SubalgebraU::new(h, side, vec![h.coalgebra().counit().clone()]).unwrap();
                let d = build_diagram(&cp, &u).unwrap();
                let r = d.check();
                assert!(r.all_passed(), "{side:?}\n{r}");
            }
        }
        // A#_σH ≇ A⊗H for the Gaussian integers, so γ leaves the image of χ
        let cp = gauss_crossed();
        let u = SubalgebraU::new(cp.hopf(), Side::Right, vec![cp.hopf().coalgebra().counit().clone()]).unwrap();
        let d = build_diagram(&cp, &u).unwrap();
        assert!(matches!(d.duality_iso(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn counit_subalgebra_trivial_data() {
        let z = RingSpec::Integers;
        let h = crate::standard::cyclic_group_algebra(&z, 3);
        let a = crate::standard::product_ring(&z);
        let w = crate::actions::WeakActionData::trivial(h.clone(), a.clone());
        let cp = crate::crossed::crossed_product(&w, &crate::crossed::trivial_sigma(&h, &a)).unwrap();
        for side in [Side::Right, Side::Left] {
            let u = SubalgebraU::new(&h, side, vec![h.coalgebra().counit().clone()]).unwrap();
            let iso = build_diagram(&cp, &u).unwrap().duality_iso().unwrap();
            assert!(iso.map.same_matrix(&LinearMap::identity(iso.map.domain())));
        }
    }
}
