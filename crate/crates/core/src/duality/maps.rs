//! λ, ρ and the RL-condition; φ maps between `#(H,H)` and `End_R(H)`;
//! one-sided endomorphism algebras and the ε maps onto them.


use crate::actions::ComoduleAlgebraData;
use crate::algebra::{multiplicativity_witness, AlgebraData};
use crate::error::{Error, Result};
use crate::hopf::HopfData;
use crate::linalg::{solve_linear, FreeModule, LinearMap, SolveStatus};
use crate::report::ValidationReport;
use crate::ring::{nonzeros, Scalar, Vector};
use crate::smash::{end_algebra, hat_smash, op_hat_smash, right_smash, op_smash, Side, SubalgebraU};

/// `λ: H#U → End_R(H)`, `h#f ↦ [k ↦ h(f⇀k)]` (right side), or
/// `λ̄: H#^opU → End_R(H)`, `h#f ↦ [k ↦ (f⇀k)h]` (left side).
pub fn lambda_map(u: &SubalgebraU) -> Result<LinearMap> {
    let h = u.hopf();
    let n = h.dim();
    let r = u.rank();
    let domain = h.carrier().tensor(u.carrier())?;
    let codomain = end_algebra(h.carrier());
    LinearMap::from_fn(&domain, codomain.carrier(), |p| {
        let (x, i) = (p / r, p % r);
        let hx = h.algebra().basis(x);
        let mut out = h.ring().zeros(n * n);
        for k in 0..n {
            let hit = u.hit(i, k);
            let v = match u.side() {
                Side::Right => h.algebra().mul(&hx, &hit),
                Side::Left => h.algebra().mul(&hit, &hx),
            };
            out[k * n..(k + 1) * n].clone_from_slice(&v);
        }
        out
    })
}

/// `ρ: V → End_R(H)`, `g ↦ [k ↦ k↼g = Σ g(k_1)k_2]`.
pub fn rho_map(h: &HopfData, v: &[Vector]) -> Result<LinearMap> {
    let n = h.dim();
    let ring = h.ring();
    let domain = FreeModule::numbered(ring.clone(), "v", v.len());
    let codomain = end_algebra(h.carrier());
    LinearMap::from_fn(&domain, codomain.carrier(), |j| {
        let mut out = ring.zeros(n * n);
        for k in 0..n {
            for (a, b, c) in h.coalgebra().coproduct(k) {
                let coef = ring.mul(c, &v[j][*a]);
                ring.add_mul_assign(&mut out[k * n + b], &coef, &ring.one());
            }
        }
        out
    })
}

/// Pairs `(h_j, g_j)` with `k↼g = Σ h_j(g_j⇀k)` (or `Σ (g_j⇀k)h_j`).
#[derive(Clone, Debug)]
pub struct RLWitness {
    pub g: Vector,
    /// Coordinates in `H⊗U`, `None` when no solution exists.
    pub solution: Option<Vector>,
}

impl RLWitness {
    /// Nonzero `(h, u, coefficient)` terms of the solution.
    pub fn pairs(&self, r: usize) -> Vec<(usize, usize, Scalar)> {
        self.solution
            .as_ref()
            .map(|s| nonzeros(s).map(|(p, c)| (p / r, p % r, c.clone())).collect())
            .unwrap_or_default()
    }
}

/// Solves `λ(ξ) = ρ(g)` for each `g` in `v`; the side is taken from `u`.
pub fn rl_check(u: &SubalgebraU, v: &[Vector]) -> Result<Vec<RLWitness>> {
    let lambda = lambda_map(u)?;
    let rho = rho_map(u.hopf(), v)?;
    (0..v.len())
        .map(|j| {
            let res = solve_linear(&lambda, &rho.column(j))?;
            Ok(RLWitness {
                g: v[j].clone(),
                solution: match res.status {
                    SolveStatus::NoSolution => None,
                    _ => res.particular,
                },
            })
        })
        .collect()
}

/// `λ` (or `λ̄`) checked as a unital algebra morphism into `End_R(H)` (or
/// its opposite), plus bijectivity.
pub fn lambda_report(u: &SubalgebraU) -> Result<ValidationReport> {
    let h = u.hopf();
    let lambda = lambda_map(u)?;
    let source = match u.side() {
        Side::Right => right_smash(&ComoduleAlgebraData::regular(h), u)?.algebra,
        Side::Left => op_smash(&ComoduleAlgebraData::regular(h), u)?.algebra,
    };
    let end = end_algebra(h.carrier());
    let target = match u.side() {
        Side::Right => end,
        Side::Left => end.opposite(),
    };
    let name = match u.side() {
        Side::Right => "λ",
        Side::Left => "λ̄",
    };
    let mut r = ValidationReport::new();
    r.record(
        format!("{name} multiplicative"),
        multiplicativity_witness(&lambda, &source, &target)
            .map(|(i, j)| pair_label(source.carrier(), i, j)),
    );
    r.record(
        format!("{name} unital"),
        (lambda.apply(source.unit())? != *target.unit()).then(|| "1#ε".to_string()),
    );
    r.record(
        format!("{name} bijective"),
        crate::linalg::invert_map(&lambda).err().map(|e| e.to_string()),
    );
    Ok(r)
}

pub(crate) fn pair_label(m: &FreeModule, i: usize, j: usize) -> String {
    format!("({}, {})", m.label(i), m.label(j))
}

/// `φ_1: #(H,H) → End_R(H)` with inverse `φ_2` (right side, needs `S̄`), or
/// `φ̄_1: #^op(H,H) → End_R(H)^op` with inverse `φ̄_2` (left side, uses `S`).
#[derive(Clone, Debug)]
pub struct PhiMaps {
    pub side: Side,
    pub phi1: LinearMap,
    pub phi2: LinearMap,
    pub source: AlgebraData,
    pub target: AlgebraData,
}

pub fn phi_maps(h: &HopfData, side: Side) -> Result<PhiMaps> {
    let n = h.dim();
    let ring = h.ring().clone();
    let reg = ComoduleAlgebraData::regular(h);
    let end = end_algebra(h.carrier());
    let (source, target, anti) = match side {
        Side::Right => (hat_smash(&reg)?.algebra, end, h.twisted_antipode()?.clone()),
        Side::Left => (op_hat_smash(&reg)?.algebra, end.opposite(), h.antipode().clone()),
    };
    // Both carriers are Hom(H,H) with index x·n + y for [e_x ↦ e_y].
    let phi1 = LinearMap::from_fn(source.carrier(), target.carrier(), |p| {
        let (x, y) = (p / n, p % n);
        let mut out = ring.zeros(n * n);
        for k in 0..n {
            for (k1, k2, c) in h.coalgebra().coproduct(k) {
                if *k2 != x {
                    continue;
                }
                // right: f(h_2)h_1, left: h_1 f(h_2)
                let prod = match side {
                    Side::Right => h.algebra().mul_basis(y, *k1),
                    Side::Left => h.algebra().mul_basis(*k1, y),
                };
                for (z, v) in prod {
                    ring.add_mul_assign(&mut out[k * n + z], c, v);
                }
            }
        }
        out
    })?;
    let phi2 = LinearMap::from_fn(target.carrier(), source.carrier(), |p| {
        let (x, y) = (p / n, p % n);
        let mut out = ring.zeros(n * n);
        let ey = h.algebra().basis(y);
        for k in 0..n {
            for (k1, k2, c) in h.coalgebra().coproduct(k) {
                if *k2 != x {
                    continue;
                }
                // right: g(k_2)S̄(k_1), left: S(k_1)g(k_2)
                let s = anti.column(*k1);
                let prod = match side {
                    Side::Right => h.algebra().mul(&ey, &s),
                    Side::Left => h.algebra().mul(&s, &ey),
                };
                for (z, v) in nonzeros(&prod) {
                    ring.add_mul_assign(&mut out[k * n + z], c, v);
                }
            }
        }
        out
    })?;
    Ok(PhiMaps {
        side,
        phi1,
        phi2,
        source,
        target,
    })
}

impl PhiMaps {
    pub fn validate(&self) -> ValidationReport {
        let (a, b) = match self.side {
            Side::Right => ("φ1", "φ2"),
            Side::Left => ("φ̄1", "φ̄2"),
        };
        let mut r = ValidationReport::new();
        let c12 = self.phi1.compose(&self.phi2).expect("shapes");
        let c21 = self.phi2.compose(&self.phi1).expect("shapes");
        r.record(
            format!("{a}∘{b} = id"),
            first_non_identity_column(&c12).map(|j| self.target.carrier().label(j).to_string()),
        );
        r.record(
            format!("{b}∘{a} = id"),
            first_non_identity_column(&c21).map(|j| self.source.carrier().label(j).to_string()),
        );
        r.record(
            format!("{a} multiplicative"),
            multiplicativity_witness(&self.phi1, &self.source, &self.target)
                .map(|(i, j)| pair_label(self.source.carrier(), i, j)),
        );
        let unit = self.phi1.apply(self.source.unit()).expect("shape");
        r.record(
            format!("{a} unital"),
            (unit != *self.target.unit()).then(|| "η∘ε".to_string()),
        );
        r
    }
}

pub(crate) fn first_non_identity_column(m: &LinearMap) -> Option<usize> {
    let ring = m.ring();
    let n = m.domain().rank();
    (0..n).find(|&j| m.column(j) != ring.unit_vector(m.codomain().rank(), j))
}

pub(crate) fn first_diff(a: &LinearMap, b: &LinearMap) -> Option<usize> {
    (0..a.domain().rank()).find(|&j| a.column(j) != b.column(j))
}

/// `End_{-A}(H⊗A)`: right `A`-linear endomorphisms, stored by their values
/// on `e_k⊗1` at index `k·(n·m) + y·m + b`, under composition.
pub fn end_right_linear(h: &FreeModule, a: &AlgebraData) -> AlgebraData {
    let (n, m) = (h.rank(), a.dim());
    let ring = a.ring().clone();
    let labels = (0..n)
        .flat_map(|k| {
            (0..n).flat_map(move |y| (0..m).map(move |b| (k, y, b)))
        })
        .map(|(k, y, b)| format!("[{}↦{}⊗{}]", h.label(k), h.label(y), a.carrier().label(b)))
        .collect();
    let carrier = FreeModule::new(ring.clone(), labels).expect("distinct labels");
    let d = n * m;
    let mut unit = ring.zeros(n * d);
    for k in 0..n {
        for (b, c) in nonzeros(a.unit()) {
            unit[k * d + k * m + b] = c.clone();
        }
    }
    AlgebraData::from_fn(carrier, unit, |p, q| {
        // F = [k1 ↦ y1⊗b1], G = [k2 ↦ y2⊗b2]; F∘G = δ_{y2,k1}[k2 ↦ y1⊗b1b2]
        let (k1, y1, b1) = (p / d, (p % d) / m, p % m);
        let (k2, y2, b2) = (q / d, (q % d) / m, q % m);
        let mut out = ring.zeros(n * d);
        if y2 == k1 {
            for (b, c) in a.mul_basis(b1, b2) {
                out[k2 * d + y1 * m + b] = c.clone();
            }
        }
        out
    })
    .expect("table")
}

/// `End_{A-}(A⊗H)`: left `A`-linear endomorphisms, stored by their values
/// on `1⊗e_k` at index `k·(m·n) + b·n + y`, under composition.
pub fn end_left_linear(h: &FreeModule, a: &AlgebraData) -> AlgebraData {
    let (n, m) = (h.rank(), a.dim());
    let ring = a.ring().clone();
    let labels = (0..n)
        .flat_map(|k| (0..m).flat_map(move |b| (0..n).map(move |y| (k, b, y))))
        .map(|(k, b, y)| format!("[{}↦{}⊗{}]", h.label(k), a.carrier().label(b), h.label(y)))
        .collect();
    let carrier = FreeModule::new(ring.clone(), labels).expect("distinct labels");
    let d = m * n;
    let mut unit = ring.zeros(n * d);
    for k in 0..n {
        for (b, c) in nonzeros(a.unit()) {
            unit[k * d + b * n + k] = c.clone();
        }
    }
    AlgebraData::from_fn(carrier, unit, |p, q| {
        // F = [k1 ↦ b1⊗y1], G = [k2 ↦ b2⊗y2]; F∘G = δ_{y2,k1}[k2 ↦ b2b1⊗y1]
        let (k1, b1, y1) = (p / d, (p % d) / n, p % n);
        let (k2, b2, y2) = (q / d, (q % d) / n, q % n);
        let mut out = ring.zeros(n * d);
        if y2 == k1 {
            for (b, c) in a.mul_basis(b2, b1) {
                out[k2 * d + b * n + y1] = c.clone();
            }
        }
        out
    })
    .expect("table")
}

/// `ε: Hom(H, A⊗H) → End_{-A}(H⊗A)` and its inverse (right side), or
/// `ε̄: Hom(H, A⊗H) → End_{A-}(A⊗H)` and its inverse (left side).
#[derive(Clone, Debug)]
pub struct EpsilonMaps {
    pub side: Side,
    pub epsilon: LinearMap,
    pub epsilon_inv: LinearMap,
}

pub fn epsilon_maps(h: &HopfData, a: &AlgebraData, side: Side) -> Result<EpsilonMaps> {
    let (n, m) = (h.dim(), a.dim());
    let ring = h.ring().clone();
    let d = n * m;
    let ah = a.carrier().tensor(h.carrier())?;
    let hom = FreeModule::new(
        ring.clone(),
        h.carrier()
            .labels()
            .iter()
            .flat_map(|x| ah.labels().iter().map(move |y| format!("[{x}↦{y}]")))
            .collect(),
    )?;
    let (end, anti) = match side {
        Side::Right => (end_right_linear(h.carrier(), a), h.twisted_antipode()?.clone()),
        Side::Left => (end_left_linear(h.carrier(), a), h.antipode().clone()),
    };
    if hom.rank() != end.dim() {
        return Err(Error::DimensionMismatch("Hom(H, A⊗H) and End differ in rank".into()));
    }
    let epsilon = LinearMap::from_fn(&hom, end.carrier(), |p| {
        // g = [x ↦ e_b⊗e_y]
        let (x, b, y) = (p / d, (p % d) / n, p % n);
        let mut out = ring.zeros(n * d);
        for k in 0..n {
            for (k1, k2, c) in h.coalgebra().coproduct(k) {
                if *k2 != x {
                    continue;
                }
                match side {
                    // τ(g(k_2))(k_1⊗1) = y k_1 ⊗ b
                    Side::Right => {
                        for (z, v) in h.algebra().mul_basis(y, *k1) {
                            ring.add_mul_assign(&mut out[k * d + z * m + b], c, v);
                        }
                    }
                    // (1⊗k_1)g(k_2) = b ⊗ k_1 y
                    Side::Left => {
                        for (z, v) in h.algebra().mul_basis(*k1, y) {
                            ring.add_mul_assign(&mut out[k * d + b * n + z], c, v);
                        }
                    }
                }
            }
        }
        out
    })?;
    let epsilon_inv = LinearMap::from_fn(end.carrier(), &hom, |p| {
        let mut out = ring.zeros(n * d);
        let x = p / d;
        let (b, y) = match side {
            Side::Right => (p % m, (p % d) / m),
            Side::Left => ((p % d) / n, p % n),
        };
        let ey = h.algebra().basis(y);
        for k in 0..n {
            for (k1, k2, c) in h.coalgebra().coproduct(k) {
                if *k2 != x {
                    continue;
                }
                let s = anti.column(*k1);
                // right: τ(F(k_2⊗1))(1⊗S̄(k_1)) = b ⊗ y S̄(k_1)
                // left: (1⊗S(k_1))F(1⊗k_2) = b ⊗ S(k_1) y
                let prod = match side {
                    Side::Right => h.algebra().mul(&ey, &s),
                    Side::Left => h.algebra().mul(&s, &ey),
                };
                for (z, v) in nonzeros(&prod) {
                    ring.add_mul_assign(&mut out[k * d + b * n + z], c, v);
                }
            }
        }
        out
    })?;
    Ok(EpsilonMaps {
        side,
        epsilon,
        epsilon_inv,
    })
}

impl EpsilonMaps {
    pub fn validate(&self) -> ValidationReport {
        let name = match self.side {
            Side::Right => "ε",
            Side::Left => "ε̄",
        };
        let mut r = ValidationReport::new();
        let a = self.epsilon.compose(&self.epsilon_inv).expect("shapes");
        let b = self.epsilon_inv.compose(&self.epsilon).expect("shapes");
        r.record(
            format!("{name}∘{name}⁻¹ = id"),
            first_non_identity_column(&a).map(|j| a.domain().label(j).to_string()),
        );
        r.record(
            format!("{name}⁻¹∘{name} = id"),
            first_non_identity_column(&b).map(|j| b.domain().label(j).to_string()),
        );
        r
    }
}
