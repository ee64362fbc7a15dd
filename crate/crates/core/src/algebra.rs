//! Associative unital algebras given by structure constants, and certified
//! algebra isomorphisms between them.

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{invert_map, FreeModule, LinearMap};
use crate::report::ValidationReport;
use crate::ring::{nonzeros, RingSpec, Scalar, Vector};

/// Sparse vector: `(basis index, coefficient)` pairs with nonzero coefficients.
pub type Sparse = Vec<(usize, Scalar)>;

pub(crate) fn sparse(v: &[Scalar]) -> Sparse {
    nonzeros(v).map(|(i, c)| (i, c.clone())).collect()
}

/// An algebra on a free module. The product of basis vectors `e_i e_j` is
/// stored sparsely at index `i·rank + j`; this is the multiplication map
/// `carrier⊗carrier → carrier` column by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    carrier: FreeModule,
    table: Vec<Sparse>,
    unit: Vector,
}

impl AlgebraData {
    /// Builds an algebra from its product on basis pairs. No axioms are
    /// checked; use [`AlgebraData::validate`].
    pub fn new(carrier: FreeModule, table: Vec<Sparse>, unit: Vector) -> Result<Self> {
        let n = carrier.rank();
        if table.len() != n * n || unit.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "product table of size {} and unit of length {} for rank {n}",
                table.len(),
                unit.len()
            )));
        }
        let ring = carrier.ring().clone();
        let table = table
            .into_iter()
            .map(|col| {
                let mut dense = ring.zeros(n);
                for (k, c) in col {
                    ring.add_assign(&mut dense[k], &c);
                }
                sparse(&dense)
            })
            .collect();
        Ok(AlgebraData {
            carrier,
            table,
            unit,
        })
    }

    /// Builds an algebra from `(i, j, k, c)` meaning `e_i e_j` has coefficient
    /// `c` at `e_k`; repeated entries add up.
    pub fn from_constants(
        carrier: FreeModule,
        constants: &[(usize, usize, usize, Scalar)],
        unit: Vector,
    ) -> Result<Self> {
        let n = carrier.rank();
        let mut table = vec![Vec::new(); n * n];
        for (i, j, k, c) in constants {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::DimensionMismatch(format!(
                    "structure constant ({i},{j},{k}) out of range for rank {n}"
                )));
            }
            table[i * n + j].push((*k, c.clone()));
        }
        AlgebraData::new(carrier, table, unit)
    }

    /// Builds an algebra from a bilinear product on basis vectors.
    pub fn from_fn(
        carrier: FreeModule,
        unit: Vector,
        mut product: impl FnMut(usize, usize) -> Vector,
    ) -> Result<Self> {
        let n = carrier.rank();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = product(i, j);
                if v.len() != n {
                    return Err(Error::DimensionMismatch(format!(
                        "product of length {} in an algebra of rank {n}",
                        v.len()
                    )));
                }
                table.push(sparse(&v));
            }
        }
        AlgebraData::new(carrier, table, unit)
    }

    /// Builds an algebra from its multiplication map `A⊗A → A`.
    pub fn from_mult_map(carrier: FreeModule, mult: &LinearMap, unit: Vector) -> Result<Self> {
        let n = carrier.rank();
        if mult.domain().rank() != n * n || mult.codomain().rank() != n {
            return Err(Error::DimensionMismatch(
                "multiplication map has the wrong shape".into(),
            ));
        }
        AlgebraData::new(
            carrier,
            (0..n * n).map(|c| sparse(&mult.column(c))).collect(),
            unit,
        )
    }

    pub fn carrier(&self) -> &FreeModule {
        &self.carrier
    }

    pub fn ring(&self) -> &RingSpec {
        self.carrier.ring()
    }

    pub fn dim(&self) -> usize {
        self.carrier.rank()
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> Vector {
        self.carrier.basis_vector(i)
    }

    pub fn zero(&self) -> Vector {
        self.carrier.zero()
    }

    /// `e_i e_j` as a sparse vector.
    pub fn mul_basis(&self, i: usize, j: usize) -> &Sparse {
        &self.table[i * self.dim() + j]
    }

    pub fn table(&self) -> &[Sparse] {
        &self.table
    }

    /// The multiplication as a linear map `carrier⊗carrier → carrier`.
    pub fn mult_map(&self) -> LinearMap {
        let domain = self.carrier.tensor(&self.carrier).expect("same ring");
        LinearMap::from_fn(&domain, &self.carrier, |c| {
            densify(&self.table[c], self.dim(), self.ring())
        })
        .expect("table entries are canonical")
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let ring = self.ring();
        let n = self.dim();
        let mut out = self.zero();
        for (i, x) in nonzeros(a) {
            for (j, y) in nonzeros(b) {
                let xy = ring.mul(x, y);
                for (k, c) in &self.table[i * n + j] {
                    ring.add_mul_assign(&mut out[*k], &xy, c);
                }
            }
        }
        out
    }

    /// Product of a list of elements, left to right; the unit for an empty list.
    pub fn mul_all(&self, factors: &[&[Scalar]]) -> Vector {
        let mut acc = self.unit.clone();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn opposite(&self) -> AlgebraData {
        let n = self.dim();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(self.table[j * n + i].clone());
            }
        }
        AlgebraData {
            carrier: self.carrier.clone(),
            table,
            unit: self.unit.clone(),
        }
    }

    /// `A⊗B` with `(a⊗b)(a'⊗b') = aa'⊗bb'`.
    pub fn tensor(&self, other: &AlgebraData) -> Result<AlgebraData> {
        let carrier = self.carrier.tensor(&other.carrier)?;
        let (n, m) = (self.dim(), other.dim());
        let ring = self.ring().clone();
        let mut unit = ring.zeros(n * m);
        for (i, x) in nonzeros(&self.unit) {
            for (j, y) in nonzeros(&other.unit) {
                unit[i * m + j] = ring.mul(x, y);
            }
        }
        AlgebraData::from_fn(carrier, unit, |p, q| {
            let (a, b) = (p / m, p % m);
            let (a2, b2) = (q / m, q % m);
            let mut v = ring.zeros(n * m);
            for (k, x) in self.mul_basis(a, a2) {
                for (l, y) in other.mul_basis(b, b2) {
                    ring.add_mul_assign(&mut v[k * m + l], x, y);
                }
            }
            v
        })
    }

    /// The matrix algebra `M_n(R)` on matrix units `e{i}{j}` (index `i·n+j`).
    pub fn matrix_algebra(ring: &RingSpec, n: usize) -> AlgebraData {
        let labels = (0..n)
            .flat_map(|i| (0..n).map(move |j| format!("e{}{}", i + 1, j + 1)))
            .collect();
        let carrier = FreeModule::new(ring.clone(), labels).expect("distinct labels");
        let mut unit = ring.zeros(n * n);
        for i in 0..n {
            unit[i * n + i] = Scalar::one();
        }
        AlgebraData::from_fn(carrier, unit, |p, q| {
            let (i, j) = (p / n, p % n);
            let (k, l) = (q / n, q % n);
            let mut v = ring.zeros(n * n);
            if j == k {
                v[i * n + l] = Scalar::one();
            }
            v
        })
        .expect("matrix units")
    }

    /// The ring itself as a rank-one algebra.
    pub fn base(ring: &RingSpec) -> AlgebraData {
        AlgebraData {
            carrier: FreeModule::base(ring.clone()),
            table: vec![vec![(0, Scalar::one())]],
            unit: vec![Scalar::one()],
        }
    }

    /// The same algebra on a relabelled carrier.
    pub fn with_carrier(&self, carrier: FreeModule) -> Result<AlgebraData> {
        if carrier.rank() != self.dim() {
            return Err(Error::DimensionMismatch("relabelled carrier rank".into()));
        }
        Ok(AlgebraData {
            carrier,
            table: self.table.clone(),
            unit: self.unit.clone(),
        })
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.table[i * n + j] == self.table[j * n + i]))
    }

    /// Structure constants agree exactly (carrier labels ignored).
    pub fn same_structure(&self, other: &AlgebraData) -> bool {
        self.table == other.table && self.unit == other.unit
    }

    /// First basis triple where associativity fails.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = densify(self.mul_basis(i, j), n, self.ring());
                for k in 0..n {
                    let left = self.mul(&ij, &self.basis(k));
                    let jk = densify(self.mul_basis(j, k), n, self.ring());
                    let right = self.mul(&self.basis(i), &jk);
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn unit_witness(&self) -> Option<usize> {
        (0..self.dim()).find(|&i| {
            let e = self.basis(i);
            self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e
        })
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let l = |i: usize| self.carrier.label(i).to_string();
        r.record(
            "associativity",
            self.associativity_witness()
                .map(|(i, j, k)| format!("({}, {}, {})", l(i), l(j), l(k))),
        );
        r.record("unit", self.unit_witness().map(l));
        r
    }
}

pub(crate) fn densify(s: &Sparse, n: usize, ring: &RingSpec) -> Vector {
    let mut v = ring.zeros(n);
    for (k, c) in s {
        v[*k] = c.clone();
    }
    v
}

/// First basis pair `(i, j)` where `f(e_i e_j) ≠ f(e_i) f(e_j)`, or `None`.
pub fn multiplicativity_witness(
    f: &LinearMap,
    source: &AlgebraData,
    target: &AlgebraData,
) -> Option<(usize, usize)> {
    let n = source.dim();
    let ring = source.ring();
    let images: Vec<Vector> = (0..n).map(|i| f.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let mut lhs = target.zero();
            for (k, c) in source.mul_basis(i, j) {
                ring.axpy(&mut lhs, c, &images[*k]);
            }
            let rhs = target.mul(&images[i], &images[j]);
            if lhs != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

/// A linear map certified to be a unital algebra isomorphism, together with
/// its inverse.
#[derive(Clone, Debug)]
pub struct AlgebraIso {
    pub map: LinearMap,
    pub inverse: LinearMap,
    pub source: AlgebraData,
    pub target: AlgebraData,
}

impl AlgebraIso {
    /// Checks that `map` is multiplicative on every basis pair, unital and
    /// invertible; computes the inverse.
    pub fn certify(map: LinearMap, source: &AlgebraData, target: &AlgebraData) -> Result<Self> {
        if map.domain().rank() != source.dim() || map.codomain().rank() != target.dim() {
            return Err(Error::DimensionMismatch(format!(
                "map of rank {} -> {} between algebras of rank {} and {}",
                map.domain().rank(),
                map.codomain().rank(),
                source.dim(),
                target.dim()
            )));
        }
        if let Some((i, j)) = multiplicativity_witness(&map, source, target) {
            return Err(Error::Validation(format!(
                "not multiplicative at ({}, {})",
                source.carrier().label(i),
                source.carrier().label(j)
            )));
        }
        if map.apply(source.unit())? != *target.unit() {
            return Err(Error::Validation("not unital".into()));
        }
        let inverse = invert_map(&map)?;
        Ok(AlgebraIso {
            map,
            inverse,
            source: source.clone(),
            target: target.clone(),
        })
    }

    pub fn compose(&self, inner: &AlgebraIso) -> Result<AlgebraIso> {
        AlgebraIso::certify(self.map.compose(&inner.map)?, &inner.source, &self.target)
    }

    pub fn inverted(&self) -> AlgebraIso {
        AlgebraIso {
            map: self.inverse.clone(),
            inverse: self.map.clone(),
            source: self.target.clone(),
            target: self.source.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_units() {
        let z = RingSpec::Integers;
        let m = AlgebraData::matrix_algebra(&z, 2);
        let e11 = m.basis(0);
        let e12 = m.basis(1);
        assert_eq!(m.mul(&e11, &e12), e12);
        assert!(crate::ring::is_zero_vec(&m.mul(&e12, &e11)));
        assert!(m.validate().all_passed());
        assert!(!m.is_commutative());
    }

    #[test]
    fn opposite_twice_is_identity() {
        let z = RingSpec::Integers;
        let m = AlgebraData::matrix_algebra(&z, 2);
        assert_eq!(m.opposite().opposite(), m);
        assert!(m.opposite().validate().all_passed());
    }

    #[test]
    fn mult_map_roundtrip() {
        let z = RingSpec::Integers;
        let m = AlgebraData::matrix_algebra(&z, 2);
        let again =
            AlgebraData::from_mult_map(m.carrier().clone(), &m.mult_map(), m.unit().clone())
                .unwrap();
        assert_eq!(again, m);
    }

    #[test]
    fn tensor_of_matrix_algebras_is_associative() {
        let z = RingSpec::Integers;
        let m = AlgebraData::matrix_algebra(&z, 2);
        let t = m.tensor(&AlgebraData::base(&z)).unwrap();
        assert!(t.same_structure(&m));
        assert!(m.tensor(&m).unwrap().validate().all_passed());
    }

    #[test]
    fn non_associative_table_has_witness() {
        let z = RingSpec::Integers;
        let carrier = FreeModule::numbered(z.clone(), "e", 2);
        // e1·e0 = 2e1 breaks the unit law
        let a = AlgebraData::from_constants(
            carrier,
            &[
                (0, 0, 0, z.int(1)),
                (0, 1, 1, z.int(1)),
                (1, 1, 0, z.int(1)),
                (1, 0, 1, z.int(2)),
            ],
            vec![z.int(1), z.int(0)],
        )
        .unwrap();
        assert!(!a.validate().all_passed());
    }
}
