//! Pairings and hit actions, regular actions on `H*`, weak actions, comodule
//! algebras and coinvariants.

use crate::algebra::{densify, AlgebraData};
use crate::coalgebra::CoalgebraData;
use crate::error::{Error, Result};
use crate::hopf::HopfData;
use crate::linalg::{
    is_direct_summand, kernel, submodule_membership, FreeModule, LinearMap, Matrix,
};
use crate::report::ValidationReport;
use crate::ring::{is_zero_vec, nonzeros, RingSpec, Scalar, Vector};

/// A measuring pairing `(A, C)`: `eval[a][c] = <e_a, e_c>` with
/// `a ↦ <a, −>` an algebra map `A → C*`.
#[derive(Clone, Debug)]
pub struct PairingData {
    algebra: AlgebraData,
    coalgebra: CoalgebraData,
    eval: Matrix,
}

impl PairingData {
    pub fn new(algebra: AlgebraData, coalgebra: CoalgebraData, eval: Matrix) -> Result<Self> {
        if eval.rows() != algebra.dim() || eval.cols() != coalgebra.dim() {
            return Err(Error::DimensionMismatch("pairing matrix shape".into()));
        }
        Ok(PairingData {
            algebra,
            coalgebra,
            eval,
        })
    }

    /// The evaluation pairing `(H*, H)`.
    pub fn dual_pairing(h: &HopfData, dual: &HopfData) -> Self {
        PairingData {
            algebra: dual.algebra().clone(),
            coalgebra: h.coalgebra().clone(),
            eval: Matrix::identity(h.dim()),
        }
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &CoalgebraData {
        &self.coalgebra
    }

    fn ring(&self) -> &RingSpec {
        self.algebra.ring()
    }

    pub fn pair(&self, a: &[Scalar], c: &[Scalar]) -> Scalar {
        let ring = self.ring();
        let mut acc = ring.zero();
        for (i, x) in nonzeros(a) {
            for (j, y) in nonzeros(c) {
                let xy = ring.mul(x, y);
                ring.add_mul_assign(&mut acc, &xy, self.eval.get(i, j));
            }
        }
        acc
    }

    /// `a⇀c = Σ c_1 <a, c_2>`
    pub fn hit_left(&self, a: &[Scalar], c: &[Scalar]) -> Vector {
        let ring = self.ring();
        let mut out = ring.zeros(self.coalgebra.dim());
        for (i, x) in nonzeros(c) {
            for (p, q, k) in self.coalgebra.coproduct(i) {
                let v = self.pair(a, &self.coalgebra.carrier().basis_vector(*q));
                let coef = ring.mul(&ring.mul(x, k), &v);
                ring.add_assign(&mut out[*p], &coef);
            }
        }
        out
    }

    /// `c↼a = Σ <a, c_1> c_2`
    pub fn hit_right(&self, c: &[Scalar], a: &[Scalar]) -> Vector {
        let ring = self.ring();
        let mut out = ring.zeros(self.coalgebra.dim());
        for (i, x) in nonzeros(c) {
            for (p, q, k) in self.coalgebra.coproduct(i) {
                let v = self.pair(a, &self.coalgebra.carrier().basis_vector(*p));
                let coef = ring.mul(&ring.mul(x, k), &v);
                ring.add_assign(&mut out[*q], &coef);
            }
        }
        out
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let ring = self.ring().clone();
        let (na, nc) = (self.algebra.dim(), self.coalgebra.dim());
        let la = |i: usize| self.algebra.carrier().label(i).to_string();
        let lc = |i: usize| self.coalgebra.carrier().label(i).to_string();
        let ea = |i: usize| self.algebra.basis(i);
        let ec = |i: usize| self.coalgebra.carrier().basis_vector(i);

        let mut w = None;
        'outer: for a in 0..na {
            for b in 0..na {
                let ab = densify(self.algebra.mul_basis(a, b), na, &ring);
                for c in 0..nc {
                    let lhs = self.pair(&ab, &ec(c));
                    let mut rhs = ring.zero();
                    for (p, q, k) in self.coalgebra.coproduct(c) {
                        let t = ring.mul(&self.pair(&ea(a), &ec(*p)), &self.pair(&ea(b), &ec(*q)));
                        ring.add_mul_assign(&mut rhs, &t, k);
                    }
                    if lhs != rhs {
                        w = Some(format!("<{}·{}, {}>", la(a), la(b), lc(c)));
                        break 'outer;
                    }
                }
            }
        }
        r.record("pairing multiplicative", w);
        let w = (0..nc)
            .find(|&c| self.pair(self.algebra.unit(), &ec(c)) != self.coalgebra.counit()[c])
            .map(|c| format!("<1, {}>", lc(c)));
        r.record("pairing unital", w);

        let mut w = None;
        'bim: for a in 0..na {
            for b in 0..na {
                let ab = densify(self.algebra.mul_basis(a, b), na, &ring);
                for c in 0..nc {
                    let (va, vb, vc) = (ea(a), ea(b), ec(c));
                    let left_assoc = self.hit_left(&ab, &vc) == self.hit_left(&va, &self.hit_left(&vb, &vc));
                    let right_assoc =
                        self.hit_right(&vc, &ab) == self.hit_right(&self.hit_right(&vc, &va), &vb);
                    let mixed = self.hit_right(&self.hit_left(&va, &vc), &vb)
                        == self.hit_left(&va, &self.hit_right(&vc, &vb));
                    if !(left_assoc && right_assoc && mixed) {
                        w = Some(format!("({}, {}, {})", la(a), la(b), lc(c)));
                        break 'bim;
                    }
                }
            }
        }
        r.record("hit actions form a bimodule", w);
        r
    }
}

/// The regular left and right actions of `H` on `H*`:
/// `(h f)(k) = f(kh)` and `(f h)(k) = f(hk)`.
#[derive(Clone, Debug)]
pub struct RegularActions {
    hopf: HopfData,
}

impl RegularActions {
    pub fn new(h: &HopfData) -> Self {
        RegularActions { hopf: h.clone() }
    }

    /// `h·f` for the left regular action.
    pub fn left(&self, h: &[Scalar], f: &[Scalar]) -> Vector {
        let a = self.hopf.algebra();
        let ring = a.ring();
        let n = a.dim();
        let mut out = ring.zeros(n);
        for k in 0..n {
            let kh = a.mul(&a.basis(k), h);
            out[k] = ring.dot(f, &kh);
        }
        out
    }

    /// `f·h` for the right regular action.
    pub fn right(&self, f: &[Scalar], h: &[Scalar]) -> Vector {
        let a = self.hopf.algebra();
        let ring = a.ring();
        let n = a.dim();
        let mut out = ring.zeros(n);
        for k in 0..n {
            let hk = a.mul(h, &a.basis(k));
            out[k] = ring.dot(f, &hk);
        }
        out
    }

    pub fn left_map(&self) -> LinearMap {
        let h = self.hopf.carrier();
        let dual = h.dual();
        let n = h.rank();
        let domain = h.tensor(&dual).expect("same ring");
        LinearMap::from_fn(&domain, &dual, |p| {
            self.left(&h.basis_vector(p / n), &dual.basis_vector(p % n))
        })
        .expect("canonical")
    }

    pub fn right_map(&self) -> LinearMap {
        let h = self.hopf.carrier();
        let dual = h.dual();
        let n = h.rank();
        let domain = dual.tensor(h).expect("same ring");
        LinearMap::from_fn(&domain, &dual, |p| {
            self.right(&dual.basis_vector(p / n), &h.basis_vector(p % n))
        })
        .expect("canonical")
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let a = self.hopf.algebra();
        let n = a.dim();
        let ring = a.ring();
        let l = |i: usize| a.carrier().label(i).to_string();
        let e = |i: usize| a.basis(i);
        let mut left = None;
        let mut right = None;
        let mut bimod = None;
        for f in 0..n {
            if self.left(a.unit(), &e(f)) != e(f) || self.right(&e(f), a.unit()) != e(f) {
                left.get_or_insert(format!("1 on δ{}", l(f)));
            }
            for h in 0..n {
                for k in 0..n {
                    let hk = densify(a.mul_basis(h, k), n, ring);
                    if self.left(&hk, &e(f)) != self.left(&e(h), &self.left(&e(k), &e(f))) {
                        left.get_or_insert(format!("({}, {}, δ{})", l(h), l(k), l(f)));
                    }
                    if self.right(&e(f), &hk) != self.right(&self.right(&e(f), &e(h)), &e(k)) {
                        right.get_or_insert(format!("(δ{}, {}, {})", l(f), l(h), l(k)));
                    }
                    if self.right(&self.left(&e(h), &e(f)), &e(k))
                        != self.left(&e(h), &self.right(&e(f), &e(k)))
                    {
                        bimod.get_or_insert(format!("({}, δ{}, {})", l(h), l(f), l(k)));
                    }
                }
            }
        }
        r.record("left regular action", left);
        r.record("right regular action", right);
        r.record("regular actions commute", bimod);
        r
    }
}

/// A weak left action `H⊗A → A`: `h(ab) = Σ (h_1a)(h_2b)`, `h1 = ε(h)1`,
/// `1_H a = a`. Stored as `table[h·rank(A) + a] = e_h·e_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakActionData {
    hopf: HopfData,
    algebra: AlgebraData,
    table: Vec<Vector>,
}

impl WeakActionData {
    pub fn new(hopf: HopfData, algebra: AlgebraData, table: Vec<Vector>) -> Result<Self> {
        if hopf.ring() != algebra.ring() {
            return Err(Error::RingMismatch(hopf.ring().clone(), algebra.ring().clone()));
        }
        let m = algebra.dim();
        if table.len() != hopf.dim() * m || table.iter().any(|v| v.len() != m) {
            return Err(Error::DimensionMismatch("action table shape".into()));
        }
        Ok(WeakActionData {
            hopf,
            algebra,
            table,
        })
    }

    pub fn from_fn(
        hopf: HopfData,
        algebra: AlgebraData,
        mut act: impl FnMut(usize, usize) -> Vector,
    ) -> Result<Self> {
        let (n, m) = (hopf.dim(), algebra.dim());
        let table = (0..n * m).map(|p| act(p / m, p % m)).collect();
        WeakActionData::new(hopf, algebra, table)
    }

    pub fn from_map(hopf: HopfData, algebra: AlgebraData, action: &LinearMap) -> Result<Self> {
        let m = algebra.dim();
        if action.domain().rank() != hopf.dim() * m || action.codomain().rank() != m {
            return Err(Error::DimensionMismatch("action map shape".into()));
        }
        let table = (0..hopf.dim() * m).map(|p| action.column(p)).collect();
        WeakActionData::new(hopf, algebra, table)
    }

    /// `h·a = ε(h)a`
    pub fn trivial(hopf: HopfData, algebra: AlgebraData) -> Self {
        let ring = hopf.ring().clone();
        let eps = hopf.coalgebra().counit().clone();
        let m = algebra.dim();
        let table = (0..hopf.dim() * m)
            .map(|p| ring.scale_vec(&eps[p / m], &algebra.basis(p % m)))
            .collect();
        WeakActionData {
            hopf,
            algebra,
            table,
        }
    }

    pub fn hopf(&self) -> &HopfData {
        &self.hopf
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn ring(&self) -> &RingSpec {
        self.algebra.ring()
    }

    pub fn act_basis(&self, h: usize, a: usize) -> &Vector {
        &self.table[h * self.algebra.dim() + a]
    }

    pub fn act(&self, h: &[Scalar], a: &[Scalar]) -> Vector {
        let ring = self.ring();
        let mut out = self.algebra.zero();
        for (i, x) in nonzeros(h) {
            for (j, y) in nonzeros(a) {
                let xy = ring.mul(x, y);
                ring.axpy(&mut out, &xy, self.act_basis(i, j));
            }
        }
        out
    }

    /// `e_h · a` for an arbitrary `a`.
    pub fn act_on(&self, h: usize, a: &[Scalar]) -> Vector {
        let ring = self.ring();
        let mut out = self.algebra.zero();
        for (j, y) in nonzeros(a) {
            ring.axpy(&mut out, y, self.act_basis(h, j));
        }
        out
    }

    pub fn action_map(&self) -> LinearMap {
        let domain = self.hopf.carrier().tensor(self.algebra.carrier()).expect("same ring");
        LinearMap::from_fn(&domain, self.algebra.carrier(), |p| self.table[p].clone())
            .expect("canonical")
    }

    pub fn is_trivial(&self) -> bool {
        *self == WeakActionData::trivial(self.hopf.clone(), self.algebra.clone())
    }

    /// First triple `(h, k, a)` where `(hk)a ≠ h(ka)`.
    pub fn module_witness(&self) -> Option<(usize, usize, usize)> {
        let h = self.hopf.algebra();
        let (n, m) = (h.dim(), self.algebra.dim());
        for i in 0..n {
            for j in 0..n {
                let ij = densify(h.mul_basis(i, j), n, h.ring());
                for a in 0..m {
                    let lhs = self.act(&ij, &self.algebra.basis(a));
                    let rhs = self.act_on(i, self.act_basis(j, a));
                    if lhs != rhs {
                        return Some((i, j, a));
                    }
                }
            }
        }
        None
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let (n, m) = (self.hopf.dim(), self.algebra.dim());
        let ring = self.ring();
        let lh = |i: usize| self.hopf.carrier().label(i).to_string();
        let la = |i: usize| self.algebra.carrier().label(i).to_string();
        let mut w = None;
        'outer: for h in 0..n {
            for a in 0..m {
                for b in 0..m {
                    let ab = densify(self.algebra.mul_basis(a, b), m, ring);
                    let lhs = self.act_on(h, &ab);
                    let mut rhs = self.algebra.zero();
                    for (p, q, c) in self.hopf.coalgebra().coproduct(h) {
                        let t = self.algebra.mul(self.act_basis(*p, a), self.act_basis(*q, b));
                        ring.axpy(&mut rhs, c, &t);
                    }
                    if lhs != rhs {
                        w = Some(format!("{}·({}{})", lh(h), la(a), la(b)));
                        break 'outer;
                    }
                }
            }
        }
        r.record("weak action multiplicative", w);
        let eps = self.hopf.coalgebra().counit();
        let w = (0..n)
            .find(|&h| {
                self.act_on(h, self.algebra.unit()) != ring.scale_vec(&eps[h], self.algebra.unit())
            })
            .map(|h| format!("{}·1", lh(h)));
        r.record("weak action unital", w);
        let one = self.hopf.algebra().unit();
        let w = (0..m)
            .find(|&a| self.act(one, &self.algebra.basis(a)) != self.algebra.basis(a))
            .map(|a| format!("1·{}", la(a)));
        r.record("unit of H acts as identity", w);
        r
    }
}

pub fn validate_weak_action(w: &WeakActionData) -> ValidationReport {
    w.validate()
}

/// A right `H`-comodule algebra `B` with `ϱ: B → B⊗H`; `table[b]` is
/// `ϱ(e_b)` in `B⊗H` coordinates (index `b'·rank(H) + h`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebraData {
    hopf: HopfData,
    algebra: AlgebraData,
    table: Vec<Vector>,
}

impl ComoduleAlgebraData {
    pub fn new(hopf: HopfData, algebra: AlgebraData, table: Vec<Vector>) -> Result<Self> {
        if hopf.ring() != algebra.ring() {
            return Err(Error::RingMismatch(hopf.ring().clone(), algebra.ring().clone()));
        }
        let len = algebra.dim() * hopf.dim();
        if table.len() != algebra.dim() || table.iter().any(|v| v.len() != len) {
            return Err(Error::DimensionMismatch("coaction table shape".into()));
        }
        Ok(ComoduleAlgebraData {
            hopf,
            algebra,
            table,
        })
    }

    pub fn from_map(hopf: HopfData, algebra: AlgebraData, coaction: &LinearMap) -> Result<Self> {
        let m = algebra.dim();
        if coaction.domain().rank() != m || coaction.codomain().rank() != m * hopf.dim() {
            return Err(Error::DimensionMismatch("coaction map shape".into()));
        }
        let table = (0..m).map(|b| coaction.column(b)).collect();
        ComoduleAlgebraData::new(hopf, algebra, table)
    }

    /// `H` over itself with `ϱ = Δ`.
    pub fn regular(hopf: &HopfData) -> Self {
        let n = hopf.dim();
        let ring = hopf.ring();
        let table = (0..n)
            .map(|i| {
                let mut v = ring.zeros(n * n);
                for (j, k, c) in hopf.coalgebra().coproduct(i) {
                    v[j * n + k] = c.clone();
                }
                v
            })
            .collect();
        ComoduleAlgebraData {
            hopf: hopf.clone(),
            algebra: hopf.algebra().clone(),
            table,
        }
    }

    /// `ϱ(b) = b⊗1_H`
    pub fn trivial(hopf: HopfData, algebra: AlgebraData) -> Self {
        let n = hopf.dim();
        let ring = hopf.ring().clone();
        let one = hopf.algebra().unit().clone();
        let table = (0..algebra.dim())
            .map(|b| {
                let mut v = ring.zeros(algebra.dim() * n);
                for (h, c) in nonzeros(&one) {
                    v[b * n + h] = c.clone();
                }
                v
            })
            .collect();
        ComoduleAlgebraData {
            hopf,
            algebra,
            table,
        }
    }

    pub fn hopf(&self) -> &HopfData {
        &self.hopf
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn ring(&self) -> &RingSpec {
        self.algebra.ring()
    }

    pub fn coact_basis(&self, b: usize) -> &Vector {
        &self.table[b]
    }

    /// `ϱ(v)` in `B⊗H` coordinates.
    pub fn coact(&self, v: &[Scalar]) -> Vector {
        let ring = self.ring();
        let mut out = ring.zeros(self.algebra.dim() * self.hopf.dim());
        for (b, x) in nonzeros(v) {
            ring.axpy(&mut out, x, &self.table[b]);
        }
        out
    }

    /// `ϱ(v)` as a list of `(b_<0> coordinates index, h index, coefficient)`.
    pub fn coact_terms(&self, v: &[Scalar]) -> Vec<(usize, usize, Scalar)> {
        let n = self.hopf.dim();
        nonzeros(&self.coact(v))
            .map(|(p, c)| (p / n, p % n, c.clone()))
            .collect()
    }

    pub fn coaction_map(&self) -> LinearMap {
        let codomain = self.algebra.carrier().tensor(self.hopf.carrier()).expect("same ring");
        LinearMap::from_fn(self.algebra.carrier(), &codomain, |b| self.table[b].clone())
            .expect("canonical")
    }

    pub fn is_trivial(&self) -> bool {
        *self == ComoduleAlgebraData::trivial(self.hopf.clone(), self.algebra.clone())
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let (m, n) = (self.algebra.dim(), self.hopf.dim());
        let ring = self.ring();
        let lb = |i: usize| self.algebra.carrier().label(i).to_string();

        // (ϱ⊗id)ϱ = (id⊗Δ)ϱ in B⊗H⊗H
        let w = (0..m)
            .find(|&b| {
                let mut left = ring.zeros(m * n * n);
                let mut right = ring.zeros(m * n * n);
                for (b0, h, c) in self.coact_terms(&self.algebra.basis(b)) {
                    for (b00, h2, d) in self.coact_terms(&self.algebra.basis(b0)) {
                        let cd = ring.mul(&c, &d);
                        ring.add_assign(&mut left[(b00 * n + h2) * n + h], &cd);
                    }
                    for (p, q, d) in self.hopf.coalgebra().coproduct(h) {
                        let cd = ring.mul(&c, d);
                        ring.add_assign(&mut right[(b0 * n + p) * n + q], &cd);
                    }
                }
                left != right
            })
            .map(lb);
        r.record("coaction coassociative", w);

        let eps = self.hopf.coalgebra().counit();
        let w = (0..m)
            .find(|&b| {
                let mut v = ring.zeros(m);
                for (b0, h, c) in self.coact_terms(&self.algebra.basis(b)) {
                    ring.add_mul_assign(&mut v[b0], &c, &eps[h]);
                }
                v != self.algebra.basis(b)
            })
            .map(lb);
        r.record("coaction counital", w);

        let bh = self.algebra.tensor(self.hopf.algebra()).expect("same ring");
        let images: Vec<Vector> = (0..m).map(|b| self.table[b].clone()).collect();
        let mut w = None;
        'outer: for a in 0..m {
            for b in 0..m {
                let ab = densify(self.algebra.mul_basis(a, b), m, ring);
                if self.coact(&ab) != bh.mul(&images[a], &images[b]) {
                    w = Some(format!("ϱ({}{})", lb(a), lb(b)));
                    break 'outer;
                }
            }
        }
        r.record("coaction multiplicative", w);
        let unit_ok = self.coact(self.algebra.unit()) == *bh.unit();
        r.record("coaction unital", (!unit_ok).then(|| "ϱ(1)".to_string()));
        r
    }

    /// The coinvariant subalgebra `{b : ϱ(b) = b⊗1_H}`.
    pub fn coinvariants(&self) -> Result<Coinvariants> {
        let (m, n) = (self.algebra.dim(), self.hopf.dim());
        let ring = self.ring();
        let one = self.hopf.algebra().unit();
        let cols: Vec<Vector> = (0..m)
            .map(|b| {
                let mut v = self.table[b].clone();
                for (h, c) in nonzeros(one) {
                    v[b * n + h] = ring.sub(&v[b * n + h], c);
                }
                v
            })
            .collect();
        let op = Matrix::from_columns(&cols, m * n);
        let basis = kernel(ring, &op);
        Coinvariants::new(self.algebra.clone(), basis)
    }
}

/// True when `gens` is a basis of a free direct summand of `R^len`.
pub fn is_free_summand_basis(ring: &RingSpec, gens: &[Vector], len: usize) -> bool {
    use crate::linalg::snf::smith_normal_form;
    if gens.is_empty() {
        return true;
    }
    match ring {
        RingSpec::Rationals => {
            let m = Matrix::from_columns(gens, len);
            kernel(ring, &m).is_empty()
        }
        _ => {
            let m = Matrix::from_columns(gens, len);
            let ints: Vec<Vec<_>> = (0..len)
                .map(|r| m.row(r).iter().map(|v| v.numer().clone()).collect())
                .collect();
            let s = smith_normal_form(&ints, len, gens.len());
            s.rank() == gens.len()
                && s.diagonal
                    .iter()
                    .all(|d| ring.is_unit(&ring.from_bigint(d.clone())))
        }
    }
}

/// A subalgebra of `B` spanned by a free basis, with products re-expressed in
/// that basis.
#[derive(Clone, Debug)]
pub struct Coinvariants {
    ambient: AlgebraData,
    basis: Vec<Vector>,
    algebra: AlgebraData,
}

impl Coinvariants {
    pub fn new(ambient: AlgebraData, basis: Vec<Vector>) -> Result<Self> {
        let ring = ambient.ring().clone();
        if !is_free_summand_basis(&ring, &basis, ambient.dim()) {
            return Err(Error::Validation(
                "coinvariants are not a free direct summand".into(),
            ));
        }
        let labels: Vec<String> = basis
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let nz: Vec<_> = nonzeros(v).collect();
                if nz.len() == 1 && nz[0].1 == &ring.one() {
                    ambient.carrier().label(nz[0].0).to_string()
                } else {
                    format!("c{i}")
                }
            })
            .collect();
        let carrier = FreeModule::new(ring.clone(), labels)
            .or_else(|_| Ok::<_, Error>(FreeModule::numbered(ring.clone(), "c", basis.len())))?;
        let coords = |v: &[Scalar]| -> Result<Vector> {
            submodule_membership(&ring, &basis, v)?.ok_or_else(|| {
                Error::CoinvariantEscape(ambient.carrier().render(v))
            })
        };
        let k = basis.len();
        let mut table = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                let p = ambient.mul(&basis[i], &basis[j]);
                table.push(crate::algebra::sparse(&coords(&p)?));
            }
        }
        let unit = coords(ambient.unit())?;
        let algebra = AlgebraData::new(carrier, table, unit)?;
        Ok(Coinvariants {
            ambient,
            basis,
            algebra,
        })
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn ambient(&self) -> &AlgebraData {
        &self.ambient
    }

    /// Coordinates of `v ∈ B` in the coinvariant basis.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Vector> {
        submodule_membership(self.ambient.ring(), &self.basis, v)?
            .ok_or_else(|| Error::CoinvariantEscape(self.ambient.carrier().render(v)))
    }

    /// `Σ c_i t_i ∈ B`
    pub fn embed(&self, coords: &[Scalar]) -> Vector {
        let ring = self.ambient.ring();
        let mut out = self.ambient.zero();
        for (i, c) in nonzeros(coords) {
            ring.axpy(&mut out, c, &self.basis[i]);
        }
        out
    }

    pub fn inclusion(&self) -> LinearMap {
        LinearMap::from_fn(self.algebra.carrier(), self.ambient.carrier(), |i| {
            self.basis[i].clone()
        })
        .expect("canonical")
    }

    /// The span is a direct summand (always true for kernels over Z and Q).
    pub fn is_summand(&self) -> bool {
        is_direct_summand(self.ambient.ring(), &self.basis, self.ambient.dim())
    }

    pub fn is_zero(&self) -> bool {
        self.basis.iter().all(|v| is_zero_vec(v))
    }
}
