//! Bialgebras, Hopf algebras and convolution algebras.

use num_traits::Zero;

use crate::algebra::{densify, AlgebraData};
use crate::coalgebra::CoalgebraData;
use crate::error::{ConvFailure, Error, Result};
use crate::linalg::{solve_many, FreeModule, LinearMap, Matrix, SolveStatus};
use crate::report::ValidationReport;
use crate::ring::{nonzeros, RingSpec, Scalar, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraData {
    algebra: AlgebraData,
    coalgebra: CoalgebraData,
}

impl BialgebraData {
    pub fn new(algebra: AlgebraData, coalgebra: CoalgebraData) -> Result<Self> {
        if algebra.dim() != coalgebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "algebra of rank {} and coalgebra of rank {}",
                algebra.dim(),
                coalgebra.dim()
            )));
        }
        if algebra.ring() != coalgebra.ring() {
            return Err(Error::RingMismatch(
                algebra.ring().clone(),
                coalgebra.ring().clone(),
            ));
        }
        let coalgebra = coalgebra.with_carrier(algebra.carrier().clone())?;
        Ok(BialgebraData { algebra, coalgebra })
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &CoalgebraData {
        &self.coalgebra
    }

    pub fn carrier(&self) -> &FreeModule {
        self.algebra.carrier()
    }

    pub fn ring(&self) -> &RingSpec {
        self.algebra.ring()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `H^op`: opposite product, same coproduct.
    pub fn opposite(&self) -> BialgebraData {
        BialgebraData {
            algebra: self.algebra.opposite(),
            coalgebra: self.coalgebra.clone(),
        }
    }

    /// `H^cop`: same product, flipped coproduct.
    pub fn co_opposite(&self) -> BialgebraData {
        BialgebraData {
            algebra: self.algebra.clone(),
            coalgebra: self.coalgebra.co_opposite(),
        }
    }

    /// `Δ(v)` as a dense vector in `H⊗H`.
    pub fn coproduct_of(&self, v: &[Scalar]) -> Vector {
        let n = self.dim();
        let ring = self.ring();
        let mut out = ring.zeros(n * n);
        for (i, x) in nonzeros(v) {
            for (j, k, c) in self.coalgebra.coproduct(i) {
                ring.add_mul_assign(&mut out[j * n + k], x, c);
            }
        }
        out
    }

    /// First basis pair where `Δ(ab) ≠ Δ(a)Δ(b)` or `ε(ab) ≠ ε(a)ε(b)`.
    pub fn compatibility_witness(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        let ring = self.ring();
        let tensor = self.algebra.tensor(&self.algebra).expect("same ring");
        let deltas: Vec<Vector> = (0..n)
            .map(|i| self.coproduct_of(&self.algebra.basis(i)))
            .collect();
        for i in 0..n {
            for j in 0..n {
                let ab = densify(self.algebra.mul_basis(i, j), n, ring);
                if self.coproduct_of(&ab) != tensor.mul(&deltas[i], &deltas[j]) {
                    return Some((i, j));
                }
                let eps = self.coalgebra.counit();
                if self.coalgebra.counit_of(&ab) != ring.mul(&eps[i], &eps[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// `Δ(1) = 1⊗1` and `ε(1) = 1`.
    pub fn unit_is_grouplike(&self) -> bool {
        let ring = self.ring();
        let n = self.dim();
        let one = self.algebra.unit();
        let mut oo = ring.zeros(n * n);
        for (i, x) in nonzeros(one) {
            for (j, y) in nonzeros(one) {
                oo[i * n + j] = ring.mul(x, y);
            }
        }
        self.coproduct_of(one) == oo && self.coalgebra.counit_of(one) == ring.one()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = self.algebra.validate();
        r.extend("", self.coalgebra.validate());
        let l = |i: usize| self.carrier().label(i).to_string();
        r.record(
            "bialgebra compatibility",
            self.compatibility_witness()
                .map(|(i, j)| format!("({}, {})", l(i), l(j))),
        );
        r.record(
            "unit grouplike",
            (!self.unit_is_grouplike()).then(|| "1".to_string()),
        );
        r
    }
}

/// `Hom_R(C, A)` with the convolution product `(f⋆g)(c) = Σ f(c_1)g(c_2)`.
///
/// An element is stored as the concatenated images of the basis of `C`:
/// coordinate `x·rank(A) + y` is the `e_y`-coefficient of `f(e_x)`.
#[derive(Clone, Debug)]
pub struct ConvolutionAlgebra {
    source: CoalgebraData,
    target: AlgebraData,
}

impl ConvolutionAlgebra {
    pub fn new(source: &CoalgebraData, target: &AlgebraData) -> Result<Self> {
        if source.ring() != target.ring() {
            return Err(Error::RingMismatch(
                source.ring().clone(),
                target.ring().clone(),
            ));
        }
        Ok(ConvolutionAlgebra {
            source: source.clone(),
            target: target.clone(),
        })
    }

    pub fn source(&self) -> &CoalgebraData {
        &self.source
    }

    pub fn target(&self) -> &AlgebraData {
        &self.target
    }

    pub fn dim(&self) -> usize {
        self.source.dim() * self.target.dim()
    }

    pub fn ring(&self) -> &RingSpec {
        self.target.ring()
    }

    pub fn carrier(&self) -> FreeModule {
        let c = self.source.carrier();
        let a = self.target.carrier();
        let labels = c
            .labels()
            .iter()
            .flat_map(|x| a.labels().iter().map(move |y| format!("[{x}↦{y}]")))
            .collect();
        FreeModule::new(self.ring().clone(), labels).expect("distinct labels")
    }

    /// `f(e_x)`
    pub fn image<'a>(&self, f: &'a [Scalar], x: usize) -> &'a [Scalar] {
        let a = self.target.dim();
        &f[x * a..(x + 1) * a]
    }

    pub fn product(&self, f: &[Scalar], g: &[Scalar]) -> Vector {
        let a = self.target.dim();
        let ring = self.ring();
        let mut out = ring.zeros(self.dim());
        for x in 0..self.source.dim() {
            let slot = &mut out[x * a..(x + 1) * a];
            for (p, q, c) in self.source.coproduct(x) {
                let fp = self.image(f, *p);
                let gq = self.image(g, *q);
                if fp.iter().all(Zero::is_zero) || gq.iter().all(Zero::is_zero) {
                    continue;
                }
                let prod = self.target.mul(fp, gq);
                ring.axpy(slot, c, &prod);
            }
        }
        out
    }

    /// `η_A∘ε_C`
    pub fn unit(&self) -> Vector {
        let a = self.target.dim();
        let ring = self.ring();
        let mut out = ring.zeros(self.dim());
        for x in 0..self.source.dim() {
            let e = &self.source.counit()[x];
            ring.axpy(&mut out[x * a..(x + 1) * a], e, self.target.unit());
        }
        out
    }

    /// The matrix of `g ↦ f⋆g`.
    pub fn left_operator(&self, f: &[Scalar]) -> Matrix {
        let d = self.dim();
        let ring = self.ring();
        let cols: Vec<Vector> = (0..d)
            .map(|j| self.product(f, &ring.unit_vector(d, j)))
            .collect();
        Matrix::from_columns(&cols, d)
    }

    /// Two-sided convolution inverse: solves `f⋆x = ηε`, then checks `x⋆f = ηε`.
    pub fn invert(&self, f: &[Scalar]) -> Result<Vector> {
        let unit = self.unit();
        let op = self.left_operator(f);
        let res = solve_many(self.ring(), &op, std::slice::from_ref(&unit))?
            .pop()
            .expect("one right-hand side");
        match res.status {
            SolveStatus::NoSolution => Err(Error::NotConvInvertible(ConvFailure::NoRightInverse)),
            SolveStatus::Parametric => Err(Error::NotConvInvertible(ConvFailure::OneSided)),
            SolveStatus::Unique => {
                let x = res.particular.expect("unique solution");
                if self.product(&x, f) != unit {
                    return Err(Error::NotConvInvertible(ConvFailure::OneSided));
                }
                Ok(x)
            }
        }
    }

    pub fn from_map(&self, m: &LinearMap) -> Result<Vector> {
        if m.domain().rank() != self.source.dim() || m.codomain().rank() != self.target.dim() {
            return Err(Error::DimensionMismatch(
                "map does not belong to this convolution algebra".into(),
            ));
        }
        Ok((0..self.source.dim()).flat_map(|x| m.column(x)).collect())
    }

    pub fn to_map(&self, f: &[Scalar]) -> LinearMap {
        LinearMap::from_fn(self.source.carrier(), self.target.carrier(), |x| {
            self.image(f, x).to_vec()
        })
        .expect("canonical entries")
    }

    /// Convolution product of two maps.
    pub fn product_maps(&self, f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
        Ok(self.to_map(&self.product(&self.from_map(f)?, &self.from_map(g)?)))
    }

    pub fn invert_map(&self, f: &LinearMap) -> Result<LinearMap> {
        Ok(self.to_map(&self.invert(&self.from_map(f)?)?))
    }

    pub fn unit_map(&self) -> LinearMap {
        self.to_map(&self.unit())
    }
}

/// Convolution inverse of `f ∈ Hom(C, A)`.
pub fn convolution_invert(
    source: &CoalgebraData,
    target: &AlgebraData,
    f: &LinearMap,
) -> Result<LinearMap> {
    ConvolutionAlgebra::new(source, target)?.invert_map(f)
}

/// The antipode: the convolution inverse of the identity in `Hom(H, H)`.
pub fn compute_antipode(b: &BialgebraData) -> Result<LinearMap> {
    convolution_invert(b.coalgebra(), b.algebra(), &LinearMap::identity(b.carrier()))
}

/// The twisted antipode `S̄`: the antipode of `H^op`.
pub fn compute_twisted_antipode(b: &BialgebraData) -> Result<LinearMap> {
    compute_antipode(&b.opposite())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    bialgebra: BialgebraData,
    antipode: LinearMap,
    twisted_antipode: Option<LinearMap>,
}

impl HopfData {
    /// Computes `S` (required) and `S̄` (kept when it exists).
    pub fn new(bialgebra: BialgebraData) -> Result<Self> {
        let antipode = compute_antipode(&bialgebra)?;
        let twisted_antipode = compute_twisted_antipode(&bialgebra).ok();
        Ok(HopfData {
            bialgebra,
            antipode,
            twisted_antipode,
        })
    }

    /// Like [`HopfData::new`] but also compares a supplied antipode with the
    /// computed one.
    pub fn with_supplied_antipode(bialgebra: BialgebraData, supplied: &LinearMap) -> Result<Self> {
        let h = HopfData::new(bialgebra)?;
        if !h.antipode.same_matrix(supplied) {
            return Err(Error::Validation(
                "supplied antipode differs from the computed convolution inverse of id".into(),
            ));
        }
        Ok(h)
    }

    /// Assembles a Hopf datum without computing or checking anything. Meant
    /// for negative tests of [`HopfData::validate`].
    pub fn from_parts(
        bialgebra: BialgebraData,
        antipode: LinearMap,
        twisted_antipode: Option<LinearMap>,
    ) -> Self {
        HopfData {
            bialgebra,
            antipode,
            twisted_antipode,
        }
    }

    pub fn bialgebra(&self) -> &BialgebraData {
        &self.bialgebra
    }

    pub fn algebra(&self) -> &AlgebraData {
        self.bialgebra.algebra()
    }

    pub fn coalgebra(&self) -> &CoalgebraData {
        self.bialgebra.coalgebra()
    }

    pub fn carrier(&self) -> &FreeModule {
        self.bialgebra.carrier()
    }

    pub fn ring(&self) -> &RingSpec {
        self.bialgebra.ring()
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn antipode(&self) -> &LinearMap {
        &self.antipode
    }

    pub fn twisted_antipode(&self) -> Result<&LinearMap> {
        self.twisted_antipode
            .as_ref()
            .ok_or(Error::MissingTwistedAntipode)
    }

    pub fn has_twisted_antipode(&self) -> bool {
        self.twisted_antipode.is_some()
    }

    /// `H^op` with antipode `S̄` and twisted antipode `S`.
    pub fn opposite(&self) -> Result<HopfData> {
        Ok(HopfData {
            bialgebra: self.bialgebra.opposite(),
            antipode: self.twisted_antipode()?.clone(),
            twisted_antipode: Some(self.antipode.clone()),
        })
    }

    /// First basis element where `Σ S(h_1)h_2 = ε(h)1 = Σ h_1S(h_2)` fails.
    pub fn antipode_witness(&self, s: &LinearMap, algebra: &AlgebraData) -> Option<usize> {
        let ring = self.ring();
        let n = self.dim();
        let images: Vec<Vector> = (0..n).map(|i| s.column(i)).collect();
        (0..n).find(|&i| {
            let mut left = ring.zeros(n);
            let mut right = ring.zeros(n);
            for (j, k, c) in self.coalgebra().coproduct(i) {
                let l = algebra.mul(&images[*j], &algebra.basis(*k));
                ring.axpy(&mut left, c, &l);
                let r = algebra.mul(&algebra.basis(*j), &images[*k]);
                ring.axpy(&mut right, c, &r);
            }
            let want = ring.scale_vec(&self.coalgebra().counit()[i], algebra.unit());
            left != want || right != want
        })
    }

    /// First basis pair where `S(ab) = S(b)S(a)` fails, or basis element where
    /// `Δ(S(a)) = Σ S(a_2)⊗S(a_1)` fails (reported as `(a, a)`).
    fn anti_morphism_witness(&self, s: &LinearMap) -> Option<String> {
        let a = self.algebra();
        let n = self.dim();
        let ring = self.ring();
        let l = |i: usize| self.carrier().label(i).to_string();
        let images: Vec<Vector> = (0..n).map(|i| s.column(i)).collect();
        for i in 0..n {
            for j in 0..n {
                let ab = densify(a.mul_basis(i, j), n, ring);
                if s.apply(&ab).ok()? != a.mul(&images[j], &images[i]) {
                    return Some(format!("S({}·{})", l(i), l(j)));
                }
            }
            let lhs = self.bialgebra.coproduct_of(&images[i]);
            let mut rhs = ring.zeros(n * n);
            for (j, k, c) in self.coalgebra().coproduct(i) {
                for (p, x) in nonzeros(&images[*k]) {
                    for (q, y) in nonzeros(&images[*j]) {
                        let xy = ring.mul(x, y);
                        ring.add_mul_assign(&mut rhs[p * n + q], &xy, c);
                    }
                }
            }
            if lhs != rhs {
                return Some(format!("Δ(S({}))", l(i)));
            }
        }
        None
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = self.bialgebra.validate();
        let l = |i: usize| self.carrier().label(i).to_string();
        r.record(
            "antipode",
            self.antipode_witness(&self.antipode, self.algebra()).map(l),
        );
        r.record(
            "antipode anti-morphism",
            self.anti_morphism_witness(&self.antipode),
        );
        if let Some(sbar) = &self.twisted_antipode {
            let op = self.algebra().opposite();
            r.record("twisted antipode", self.antipode_witness(sbar, &op).map(l));
            r.record(
                "twisted antipode anti-morphism",
                self.anti_morphism_witness(sbar),
            );
        }
        r
    }
}

pub fn validate_hopf(h: &HopfData) -> ValidationReport {
    h.validate()
}

/// The dual Hopf algebra `H*` on the dual basis `δ_x`.
pub fn dual_hopf(h: &HopfData) -> Result<HopfData> {
    let n = h.dim();
    let carrier = h.carrier().dual();
    // (δ_j ⋆ δ_k)(e_i) = coefficient of e_j⊗e_k in Δ(e_i)
    let mut table = vec![Vec::new(); n * n];
    for i in 0..n {
        for (j, k, c) in h.coalgebra().coproduct(i) {
            table[j * n + k].push((i, c.clone()));
        }
    }
    let algebra = AlgebraData::new(carrier.clone(), table, h.coalgebra().counit().clone())?;
    // Δ(δ_k)(e_i⊗e_j) = δ_k(e_i e_j)
    let mut comult = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.algebra().mul_basis(i, j) {
                comult[*k].push((i, j, c.clone()));
            }
        }
    }
    let coalgebra = CoalgebraData::new(carrier, comult, h.algebra().unit().clone())?;
    HopfData::new(BialgebraData::new(algebra, coalgebra)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2(ring: &RingSpec) -> BialgebraData {
        let carrier = FreeModule::new(ring.clone(), vec!["e".into(), "g".into()]).unwrap();
        let one = ring.one();
        let alg = AlgebraData::from_constants(
            carrier.clone(),
            &[
                (0, 0, 0, one.clone()),
                (0, 1, 1, one.clone()),
                (1, 0, 1, one.clone()),
                (1, 1, 0, one.clone()),
            ],
            vec![one.clone(), ring.zero()],
        )
        .unwrap();
        let coalg = CoalgebraData::from_constants(
            carrier,
            &[(0, 0, 0, one.clone()), (1, 1, 1, one.clone())],
            vec![one.clone(), one],
        )
        .unwrap();
        BialgebraData::new(alg, coalg).unwrap()
    }

    #[test]
    fn group_algebra_of_c2_is_hopf() {
        let z = RingSpec::Integers;
        let h = HopfData::new(c2(&z)).unwrap();
        assert!(h.validate().all_passed(), "{}", h.validate());
        assert!(h.antipode().is_identity());
        assert_eq!(h.twisted_antipode().unwrap(), h.antipode());
    }

    #[test]
    fn wrong_antipode_has_witness_g() {
        let z = RingSpec::Integers;
        let b = c2(&z);
        // S(e) = e, S(g) = e
        let s = LinearMap::from_fn(b.carrier(), b.carrier(), |_| vec![z.one(), z.zero()]).unwrap();
        let h = HopfData::from_parts(b, s, None);
        let r = h.validate();
        let c = r.get("antipode").unwrap();
        assert!(!c.passed);
        assert_eq!(c.witness.as_deref(), Some("g"));
    }

    #[test]
    fn identity_is_its_own_convolution_unit() {
        let z = RingSpec::Integers;
        let b = c2(&z);
        let conv = ConvolutionAlgebra::new(b.coalgebra(), b.algebra()).unwrap();
        let u = conv.unit();
        assert_eq!(conv.invert(&u).unwrap(), u);
    }

    #[test]
    fn dual_of_c2() {
        let z = RingSpec::Integers;
        let h = HopfData::new(c2(&z)).unwrap();
        let d = dual_hopf(&h).unwrap();
        assert!(d.validate().all_passed());
        // pointwise product: δ_e δ_e = δ_e, δ_e δ_g = 0
        assert_eq!(d.algebra().mul(&d.algebra().basis(0), &d.algebra().basis(0)), vec![z.one(), z.zero()]);
        assert!(d.algebra().mul(&d.algebra().basis(0), &d.algebra().basis(1)).iter().all(Zero::is_zero));
        assert_eq!(
            d.coalgebra().coproduct(0),
            &vec![(0, 0, z.one()), (1, 1, z.one())]
        );
        let dd = dual_hopf(&d).unwrap();
        assert!(dd.algebra().same_structure(h.algebra()));
        assert_eq!(dd.coalgebra().coproduct(1), h.coalgebra().coproduct(1));
    }
}
