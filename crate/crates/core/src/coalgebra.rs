//! Coalgebras given by structure constants, with left-nested Sweedler
//! expansions.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{FreeModule, LinearMap};
use crate::report::ValidationReport;
use crate::ring::{nonzeros, RingSpec, Scalar, Vector};

/// One summand `c · e_{i_1}⊗…⊗e_{i_k}` of an iterated coproduct.
pub type Term = (Vec<usize>, Scalar);

/// `Δ(e_i)` stored as `(j, k, c)` triples: coefficient `c` at `e_j⊗e_k`.
pub type Coproduct = Vec<(usize, usize, Scalar)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData {
    carrier: FreeModule,
    comult: Vec<Coproduct>,
    counit: Vector,
}

impl CoalgebraData {
    pub fn new(carrier: FreeModule, comult: Vec<Coproduct>, counit: Vector) -> Result<Self> {
        let n = carrier.rank();
        if comult.len() != n || counit.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "coproduct table of size {} and counit of length {} for rank {n}",
                comult.len(),
                counit.len()
            )));
        }
        let ring = carrier.ring().clone();
        let mut canon = Vec::with_capacity(n);
        for terms in comult {
            let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
            for (j, k, c) in terms {
                if j >= n || k >= n {
                    return Err(Error::DimensionMismatch(format!(
                        "coproduct index ({j},{k}) out of range for rank {n}"
                    )));
                }
                let e = acc.entry((j, k)).or_insert_with(Scalar::zero);
                ring.add_assign(e, &c);
            }
            canon.push(
                acc.into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|((j, k), c)| (j, k, c))
                    .collect(),
            );
        }
        Ok(CoalgebraData {
            carrier,
            comult: canon,
            counit,
        })
    }

    /// From `(i, j, k, c)`: `Δ(e_i)` has coefficient `c` at `e_j⊗e_k`.
    pub fn from_constants(
        carrier: FreeModule,
        constants: &[(usize, usize, usize, Scalar)],
        counit: Vector,
    ) -> Result<Self> {
        let n = carrier.rank();
        let mut comult = vec![Vec::new(); n];
        for (i, j, k, c) in constants {
            if *i >= n {
                return Err(Error::DimensionMismatch(format!(
                    "coproduct of e{i} out of range for rank {n}"
                )));
            }
            comult[*i].push((*j, *k, c.clone()));
        }
        CoalgebraData::new(carrier, comult, counit)
    }

    /// From the comultiplication map `C → C⊗C` and the counit `C → R`.
    pub fn from_maps(carrier: FreeModule, comult: &LinearMap, counit: &LinearMap) -> Result<Self> {
        let n = carrier.rank();
        if comult.domain().rank() != n
            || comult.codomain().rank() != n * n
            || counit.domain().rank() != n
            || counit.codomain().rank() != 1
        {
            return Err(Error::DimensionMismatch(
                "comultiplication or counit map has the wrong shape".into(),
            ));
        }
        let table = (0..n)
            .map(|i| {
                nonzeros(&comult.column(i))
                    .map(|(p, c)| (p / n, p % n, c.clone()))
                    .collect()
            })
            .collect();
        let eps = (0..n).map(|i| counit.column(i)[0].clone()).collect();
        CoalgebraData::new(carrier, table, eps)
    }

    /// The ring as the rank-one coalgebra `Δ(1) = 1⊗1`.
    pub fn base(ring: &RingSpec) -> Self {
        CoalgebraData {
            carrier: FreeModule::base(ring.clone()),
            comult: vec![vec![(0, 0, Scalar::one())]],
            counit: vec![Scalar::one()],
        }
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

    pub fn coproduct(&self, i: usize) -> &Coproduct {
        &self.comult[i]
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn counit_of(&self, v: &[Scalar]) -> Scalar {
        self.ring().dot(&self.counit, v)
    }

    pub fn comult_map(&self) -> LinearMap {
        let n = self.dim();
        let codomain = self.carrier.tensor(&self.carrier).expect("same ring");
        LinearMap::from_fn(&self.carrier, &codomain, |i| {
            let mut v = self.ring().zeros(n * n);
            for (j, k, c) in &self.comult[i] {
                v[j * n + k] = c.clone();
            }
            v
        })
        .expect("canonical entries")
    }

    pub fn counit_map(&self) -> LinearMap {
        let base = FreeModule::base(self.ring().clone());
        LinearMap::from_fn(&self.carrier, &base, |i| vec![self.counit[i].clone()])
            .expect("canonical entries")
    }

    /// Left-nested iterated coproduct of `e_i` with `legs` tensor factors:
    /// the expansion `(Δ⊗id⊗…)∘…∘(Δ⊗id)∘Δ`, so the summand indices are
    /// `h_1, …, h_legs` in Sweedler notation.
    pub fn sweedler(&self, i: usize, legs: usize) -> Vec<Term> {
        assert!(legs >= 1, "at least one leg");
        let ring = self.ring();
        let mut terms: Vec<Term> = vec![(vec![i], Scalar::one())];
        for _ in 1..legs {
            let mut acc: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
            for (idx, c) in &terms {
                for (j, k, d) in &self.comult[idx[0]] {
                    let mut key = Vec::with_capacity(idx.len() + 1);
                    key.push(*j);
                    key.push(*k);
                    key.extend_from_slice(&idx[1..]);
                    let e = acc.entry(key).or_insert_with(Scalar::zero);
                    ring.add_mul_assign(e, c, d);
                }
            }
            terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        terms
    }

    /// `sweedler(i, legs)` for every basis index.
    pub fn sweedler_table(&self, legs: usize) -> Vec<Vec<Term>> {
        (0..self.dim()).map(|i| self.sweedler(i, legs)).collect()
    }

    /// `C^cop`: the flipped coproduct.
    pub fn co_opposite(&self) -> CoalgebraData {
        CoalgebraData {
            carrier: self.carrier.clone(),
            comult: self
                .comult
                .iter()
                .map(|t| {
                    let mut v: Coproduct = t.iter().map(|(j, k, c)| (*k, *j, c.clone())).collect();
                    v.sort_by_key(|a| (a.0, a.1));
                    v
                })
                .collect(),
            counit: self.counit.clone(),
        }
    }

    /// `C⊗D` with `Δ(c⊗d) = Σ (c_1⊗d_1)⊗(c_2⊗d_2)`.
    pub fn tensor(&self, other: &CoalgebraData) -> Result<CoalgebraData> {
        let carrier = self.carrier.tensor(&other.carrier)?;
        let m = other.dim();
        let ring = self.ring();
        let mut comult = Vec::with_capacity(self.dim() * m);
        let mut counit = Vec::with_capacity(self.dim() * m);
        for i in 0..self.dim() {
            for j in 0..m {
                let mut terms = Vec::new();
                for (a, b, c) in &self.comult[i] {
                    for (x, y, d) in &other.comult[j] {
                        terms.push((a * m + x, b * m + y, ring.mul(c, d)));
                    }
                }
                comult.push(terms);
                counit.push(ring.mul(&self.counit[i], &other.counit[j]));
            }
        }
        CoalgebraData::new(carrier, comult, counit)
    }

    pub fn with_carrier(&self, carrier: FreeModule) -> Result<CoalgebraData> {
        if carrier.rank() != self.dim() {
            return Err(Error::DimensionMismatch("relabelled carrier rank".into()));
        }
        Ok(CoalgebraData {
            carrier,
            comult: self.comult.clone(),
            counit: self.counit.clone(),
        })
    }

    pub fn is_cocommutative(&self) -> bool {
        *self == self.co_opposite()
    }

    pub fn coassociativity_witness(&self) -> Option<usize> {
        let ring = self.ring();
        (0..self.dim()).find(|&i| {
            let left = self.sweedler(i, 3);
            let mut right: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
            for (j, k, c) in &self.comult[i] {
                for (a, b, d) in &self.comult[*k] {
                    let e = right.entry(vec![*j, *a, *b]).or_insert_with(Scalar::zero);
                    ring.add_mul_assign(e, c, d);
                }
            }
            let right: Vec<Term> = right.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            left != right
        })
    }

    pub fn counit_witness(&self) -> Option<usize> {
        let ring = self.ring();
        (0..self.dim()).find(|&i| {
            let mut left = ring.zeros(self.dim());
            let mut right = ring.zeros(self.dim());
            for (j, k, c) in &self.comult[i] {
                ring.add_mul_assign(&mut left[*k], &self.counit[*j], c);
                ring.add_mul_assign(&mut right[*j], &self.counit[*k], c);
            }
            let e = self.carrier.basis_vector(i);
            left != e || right != e
        })
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let l = |i: usize| self.carrier.label(i).to_string();
        r.record("coassociativity", self.coassociativity_witness().map(l));
        r.record("counit", self.counit_witness().map(l));
        r
    }
}
