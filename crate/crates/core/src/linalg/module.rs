use std::collections::HashSet;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ring::{RingSpec, Scalar, Vector};

/// A free module of finite rank with named basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeModule {
    ring: RingSpec,
    labels: Arc<Vec<String>>,
}

impl FreeModule {
    pub fn new(ring: RingSpec, labels: Vec<String>) -> Result<Self> {
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(FreeModule {
            ring,
            labels: Arc::new(labels),
        })
    }

    /// Module with basis `prefix0, prefix1, ...`.
    pub fn numbered(ring: RingSpec, prefix: &str, rank: usize) -> Self {
        FreeModule {
            ring,
            labels: Arc::new((0..rank).map(|i| format!("{prefix}{i}")).collect()),
        }
    }

    /// The ring itself as a rank-one module.
    pub fn base(ring: RingSpec) -> Self {
        FreeModule {
            ring,
            labels: Arc::new(vec!["1".to_string()]),
        }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `self ⊗ other` with basis `e_i⊗f_j` at index `i·rank(other)+j`.
    pub fn tensor(&self, other: &FreeModule) -> Result<FreeModule> {
        self.same_ring(other)?;
        let mut labels = Vec::with_capacity(self.rank() * other.rank());
        for a in self.labels.iter() {
            for b in other.labels.iter() {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        Ok(FreeModule {
            ring: self.ring.clone(),
            labels: Arc::new(labels),
        })
    }

    /// Dual module with the dual basis `δ_{label}`.
    pub fn dual(&self) -> FreeModule {
        FreeModule {
            ring: self.ring.clone(),
            labels: Arc::new(self.labels.iter().map(|l| format!("δ_{l}")).collect()),
        }
    }

    pub fn relabel(&self, labels: Vec<String>) -> Result<FreeModule> {
        if labels.len() != self.rank() {
            return Err(Error::DimensionMismatch(format!(
                "relabel with {} labels for rank {}",
                labels.len(),
                self.rank()
            )));
        }
        FreeModule::new(self.ring.clone(), labels)
    }

    pub fn same_ring(&self, other: &FreeModule) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.clone(), other.ring.clone()));
        }
        Ok(())
    }

    pub fn zero(&self) -> Vector {
        self.ring.zeros(self.rank())
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        self.ring.unit_vector(self.rank(), i)
    }

    /// Human-readable rendering of a vector as a linear combination of labels.
    pub fn render(&self, v: &[Scalar]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{}·{}", self.ring.format(c), self.labels[i]))
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

/// An R-linear map between free modules; column `j` is the image of the
/// `j`-th domain basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    domain: FreeModule,
    codomain: FreeModule,
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(domain: FreeModule, codomain: FreeModule, matrix: Matrix) -> Result<Self> {
        domain.same_ring(&codomain)?;
        if matrix.rows() != codomain.rank() || matrix.cols() != domain.rank() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for a map of rank {} -> {}",
                matrix.rows(),
                matrix.cols(),
                domain.rank(),
                codomain.rank()
            )));
        }
        let ring = domain.ring();
        if matrix.entries().iter().any(|v| !ring.is_canonical(v)) {
            return Err(Error::Validation(format!(
                "matrix entries are not canonical elements of {ring}"
            )));
        }
        Ok(LinearMap {
            domain,
            codomain,
            matrix,
        })
    }

    /// Builds the map from the image of each domain basis vector.
    pub fn from_fn(
        domain: &FreeModule,
        codomain: &FreeModule,
        mut image: impl FnMut(usize) -> Vector,
    ) -> Result<Self> {
        let cols: Vec<Vector> = (0..domain.rank()).map(&mut image).collect();
        if let Some(bad) = cols.iter().find(|c| c.len() != codomain.rank()) {
            return Err(Error::DimensionMismatch(format!(
                "image of length {} in a module of rank {}",
                bad.len(),
                codomain.rank()
            )));
        }
        LinearMap::new(
            domain.clone(),
            codomain.clone(),
            Matrix::from_columns(&cols, codomain.rank()),
        )
    }

    pub fn identity(m: &FreeModule) -> Self {
        LinearMap {
            domain: m.clone(),
            codomain: m.clone(),
            matrix: Matrix::identity(m.rank()),
        }
    }

    pub fn zero(domain: &FreeModule, codomain: &FreeModule) -> Self {
        LinearMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix: Matrix::zeros(codomain.rank(), domain.rank()),
        }
    }

    pub fn domain(&self) -> &FreeModule {
        &self.domain
    }

    pub fn codomain(&self) -> &FreeModule {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn ring(&self) -> &RingSpec {
        self.domain.ring()
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.domain.rank() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} applied to a map from rank {}",
                v.len(),
                self.domain.rank()
            )));
        }
        Ok(self.matrix.mul_vec(self.ring(), v))
    }

    /// Image of the `j`-th domain basis vector.
    pub fn column(&self, j: usize) -> Vector {
        self.matrix.column(j)
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        self.domain.same_ring(inner.domain())?;
        if inner.codomain.rank() != self.domain.rank() {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose: inner map lands in rank {}, outer starts at rank {}",
                inner.codomain.rank(),
                self.domain.rank()
            )));
        }
        Ok(LinearMap {
            domain: inner.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.mul(self.ring(), &inner.matrix),
        })
    }

    pub fn kron(&self, other: &LinearMap) -> Result<LinearMap> {
        self.domain.same_ring(other.domain())?;
        Ok(LinearMap {
            domain: self.domain.tensor(&other.domain)?,
            codomain: self.codomain.tensor(&other.codomain)?,
            matrix: self.matrix.kron(self.ring(), &other.matrix),
        })
    }

    /// The dual map `codomain* → domain*`, `f ↦ f∘self`.
    pub fn transpose(&self) -> LinearMap {
        LinearMap {
            domain: self.codomain.dual(),
            codomain: self.domain.dual(),
            matrix: self.matrix.transpose(),
        }
    }

    fn check_parallel(&self, other: &LinearMap) -> Result<()> {
        self.domain.same_ring(other.domain())?;
        if self.domain.rank() != other.domain.rank()
            || self.codomain.rank() != other.codomain.rank()
        {
            return Err(Error::DimensionMismatch(
                "maps have different shapes".to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.check_parallel(other)?;
        Ok(LinearMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.add(self.ring(), &other.matrix),
        })
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.check_parallel(other)?;
        Ok(LinearMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.sub(self.ring(), &other.matrix),
        })
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.scale(self.ring(), c),
        }
    }

    /// Same matrix, different (equal-rank) modules.
    pub fn with_modules(&self, domain: &FreeModule, codomain: &FreeModule) -> Result<LinearMap> {
        LinearMap::new(domain.clone(), codomain.clone(), self.matrix.clone())
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// Matrix equality; module labels are ignored.
    pub fn same_matrix(&self, other: &LinearMap) -> bool {
        self.matrix == other.matrix
    }
}

/// The flip `M⊗N → N⊗M`, `e_i⊗f_j ↦ f_j⊗e_i`.
pub fn twist(m: &FreeModule, n: &FreeModule) -> Result<LinearMap> {
    let domain = m.tensor(n)?;
    let codomain = n.tensor(m)?;
    let (a, b) = (m.rank(), n.rank());
    LinearMap::from_fn(&domain, &codomain, |idx| {
        let (i, j) = (idx / b, idx % b);
        codomain.basis_vector(j * a + i)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(rank: usize) -> FreeModule {
        FreeModule::numbered(RingSpec::Integers, "e", rank)
    }

    #[test]
    fn duplicate_labels_rejected() {
        let r = FreeModule::new(RingSpec::Integers, vec!["a".into(), "a".into()]);
        assert!(matches!(r, Err(Error::DuplicateLabel(_))));
    }

    #[test]
    fn twist_on_rank_two_swaps_middle_indices() {
        let t = twist(&z(2), &z(2)).unwrap();
        let perm: Vec<usize> = (0..4)
            .map(|j| t.column(j).iter().position(|x| !x.is_zero()).unwrap())
            .collect();
        assert_eq!(perm, vec![0, 2, 1, 3]);
    }

    #[test]
    fn twist_with_rank_one_is_identity() {
        assert!(twist(&z(1), &z(3)).unwrap().is_identity());
    }

    #[test]
    fn twist_is_an_involution() {
        let t1 = twist(&z(2), &z(3)).unwrap();
        let t2 = twist(&z(3), &z(2)).unwrap();
        assert!(t2.compose(&t1).unwrap().is_identity());
    }

    #[test]
    fn kron_with_rank_one_identity_is_the_map() {
        let ring = RingSpec::Integers;
        let f = LinearMap::new(z(2), z(2), Matrix::from_ints(&ring, &[&[1, 2], &[3, 4]])).unwrap();
        let g = f.kron(&LinearMap::identity(&z(1))).unwrap();
        assert_eq!(g.matrix(), f.matrix());
    }

    #[test]
    fn ring_mismatch_in_kron() {
        let a = LinearMap::identity(&z(1));
        let b = LinearMap::identity(&FreeModule::numbered(RingSpec::Rationals, "e", 1));
        assert!(matches!(a.kron(&b), Err(Error::RingMismatch(..))));
    }

    #[test]
    fn non_canonical_entries_rejected() {
        let r = RingSpec::integers_mod(3).unwrap();
        let m = FreeModule::numbered(r, "e", 1);
        let bad = Matrix::from_rows(vec![vec![Scalar::from_integer(5.into())]], 1);
        assert!(LinearMap::new(m.clone(), m, bad).is_err());
    }
}
