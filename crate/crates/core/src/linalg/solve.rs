//! Exact solving of `M·x = b` over Z (Smith normal form), Z/n (Smith normal
//! form of the lifted system `[M | n·I]`) and Q (fraction-free elimination).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::snf::{hermite_rows, smith_normal_form, IntMatrix};
use crate::linalg::{LinearMap, Matrix};
use crate::ring::{RingSpec, Scalar, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    Unique,
    Parametric,
    NoSolution,
}

/// Description of the full solution set `particular + span(kernel_basis)`.
///
/// Over `Z/n` the kernel vectors generate the kernel but need not be a basis
/// of a free module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub particular: Option<Vector>,
    pub kernel_basis: Vec<Vector>,
}

impl SolveResult {
    fn none() -> Self {
        SolveResult {
            status: SolveStatus::NoSolution,
            particular: None,
            kernel_basis: Vec::new(),
        }
    }

    fn found(particular: Vector, kernel_basis: Vec<Vector>) -> Self {
        let status = if kernel_basis.is_empty() {
            SolveStatus::Unique
        } else {
            SolveStatus::Parametric
        };
        SolveResult {
            status,
            particular: Some(particular),
            kernel_basis,
        }
    }

    /// The solution when it exists and is unique.
    pub fn unique(self) -> Option<Vector> {
        match self.status {
            SolveStatus::Unique => self.particular,
            _ => None,
        }
    }
}

pub fn solve_linear(m: &LinearMap, rhs: &[Scalar]) -> Result<SolveResult> {
    let mut out = solve_many(m.ring(), m.matrix(), &[rhs.to_vec()])?;
    Ok(out.pop().expect("one right-hand side"))
}

/// Solves `m·x = b` for each `b` in `rhs`, sharing one factorisation.
pub fn solve_many(ring: &RingSpec, m: &Matrix, rhs: &[Vector]) -> Result<Vec<SolveResult>> {
    if let Some(b) = rhs.iter().find(|b| b.len() != m.rows()) {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} for {} equations",
            b.len(),
            m.rows()
        )));
    }
    Ok(match ring {
        RingSpec::Integers => solve_integers(m, rhs),
        RingSpec::IntegersMod(n) => solve_modular(n, m, rhs),
        RingSpec::Rationals => solve_rationals(m, rhs),
    })
}

/// Generators of `{x : m·x = 0}`.
pub fn kernel(ring: &RingSpec, m: &Matrix) -> Vec<Vector> {
    let zero = ring.zeros(m.rows());
    solve_many(ring, m, &[zero])
        .expect("dimensions agree")
        .pop()
        .expect("one right-hand side")
        .kernel_basis
}

pub(crate) fn to_int(v: &Scalar) -> BigInt {
    debug_assert!(v.is_integer());
    v.numer().clone()
}

fn int_matrix(m: &Matrix) -> IntMatrix {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(to_int).collect())
        .collect()
}

fn int_mat_vec(a: &IntMatrix, v: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .map(|(x, y)| x * y)
                .sum()
        })
        .collect()
}

fn int_column(a: &IntMatrix, j: usize) -> Vec<BigInt> {
    a.iter().map(|r| r[j].clone()).collect()
}

/// Reduces `x` modulo the lattice spanned by the Hermite rows.
fn reduce_mod_lattice(x: &mut [BigInt], rows: &IntMatrix, pivots: &[usize]) {
    for (row, &c) in rows.iter().zip(pivots) {
        let f = x[c].div_floor(&row[c]);
        if !f.is_zero() {
            for (xi, ri) in x.iter_mut().zip(row) {
                *xi -= &f * ri;
            }
        }
    }
}

fn scalars(v: Vec<BigInt>) -> Vector {
    v.into_iter().map(Scalar::from_integer).collect()
}

fn solve_integers(m: &Matrix, rhs: &[Vector]) -> Vec<SolveResult> {
    let (rows, cols) = (m.rows(), m.cols());
    let a = int_matrix(m);
    let s = smith_normal_form(&a, rows, cols);
    let r = s.rank();
    let kernel: Vec<Vec<BigInt>> = (r..cols).map(|j| int_column(&s.q, j)).collect();
    let (hnf, pivots) = hermite_rows(&kernel, cols);
    let kernel_basis: Vec<Vector> = hnf.iter().cloned().map(scalars).collect();
    rhs.iter()
        .map(|b| {
            let b: Vec<BigInt> = b.iter().map(to_int).collect();
            let c = int_mat_vec(&s.p, &b);
            if c[r..].iter().any(|x| !x.is_zero()) {
                return SolveResult::none();
            }
            let mut y = vec![BigInt::zero(); cols];
            for i in 0..r {
                let (quot, rem) = c[i].div_rem(&s.diagonal[i]);
                if !rem.is_zero() {
                    return SolveResult::none();
                }
                y[i] = quot;
            }
            let mut x = int_mat_vec(&s.q, &y);
            reduce_mod_lattice(&mut x, &hnf, &pivots);
            SolveResult::found(scalars(x), kernel_basis.clone())
        })
        .collect()
}

fn solve_modular(n: &BigInt, m: &Matrix, rhs: &[Vector]) -> Vec<SolveResult> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = int_matrix(m);
    for (i, row) in a.iter_mut().enumerate() {
        for k in 0..rows {
            row.push(if i == k { n.clone() } else { BigInt::zero() });
        }
    }
    let width = cols + rows;
    let s = smith_normal_form(&a, rows, width);
    let r = s.rank();
    // kernel of the reduction: projections of the integer kernel plus n·Z^cols
    let mut gens: Vec<Vec<BigInt>> = (r..width)
        .map(|j| int_column(&s.q, j)[..cols].to_vec())
        .collect();
    for i in 0..cols {
        let mut e = vec![BigInt::zero(); cols];
        e[i] = n.clone();
        gens.push(e);
    }
    let (hnf, pivots) = hermite_rows(&gens, cols);
    let kernel_basis: Vec<Vector> = hnf
        .iter()
        .map(|row| row.iter().map(|x| x.mod_floor(n)).collect::<Vec<_>>())
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .map(scalars)
        .collect();
    rhs.iter()
        .map(|b| {
            let b: Vec<BigInt> = b.iter().map(to_int).collect();
            let c = int_mat_vec(&s.p, &b);
            if c[r..].iter().any(|x| !x.is_zero()) {
                return SolveResult::none();
            }
            let mut y = vec![BigInt::zero(); width];
            for i in 0..r {
                let (quot, rem) = c[i].div_rem(&s.diagonal[i]);
                if !rem.is_zero() {
                    return SolveResult::none();
                }
                y[i] = quot;
            }
            let mut x = int_mat_vec(&s.q, &y);
            x.truncate(cols);
            reduce_mod_lattice(&mut x, &hnf, &pivots);
            let x = x.into_iter().map(|v| v.mod_floor(n)).collect();
            SolveResult::found(scalars(x), kernel_basis.clone())
        })
        .collect()
}

/// Scales a rational row to integers by the lcm of its denominators.
fn integer_row(row: &[Scalar]) -> Vec<BigInt> {
    let l = row
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter()
        .map(|v| v.numer() * (&l / v.denom()))
        .collect()
}

/// Fraction-free (Bareiss) reduction to row echelon form over the first
/// `elim_cols` columns; returns the pivot columns.
fn bareiss_echelon(m: &mut IntMatrix, elim_cols: usize) -> Vec<usize> {
    let rows = m.len();
    let width = m.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..elim_cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..width {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                let (q, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn solve_rationals(m: &Matrix, rhs: &[Vector]) -> Vec<SolveResult> {
    let (rows, cols) = (m.rows(), m.cols());
    let k = rhs.len();
    let mut aug: IntMatrix = (0..rows)
        .map(|i| {
            let mut row: Vector = m.row(i).to_vec();
            row.extend(rhs.iter().map(|b| b[i].clone()));
            integer_row(&row)
        })
        .collect();
    let pivots = bareiss_echelon(&mut aug, cols);
    let r = pivots.len();
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };

    // back substitution for the augmented column `extra` (None = homogeneous)
    let back = |extra: Option<usize>, free: Option<usize>| -> Vector {
        let mut x = vec![Scalar::zero(); cols];
        if let Some(f) = free {
            x[f] = Scalar::one();
        }
        for (row, &c) in pivots.iter().enumerate().rev() {
            let mut acc = match extra {
                Some(e) => Scalar::from_integer(aug[row][cols + e].clone()),
                None => Scalar::zero(),
            };
            for j in c + 1..cols {
                if !aug[row][j].is_zero() && !x[j].is_zero() {
                    acc -= Scalar::from_integer(aug[row][j].clone()) * &x[j];
                }
            }
            x[c] = acc / Scalar::from_integer(aug[row][c].clone());
        }
        x
    };

    let kernel_basis: Vec<Vector> = (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|f| back(None, Some(f)))
        .collect();
    (0..k)
        .map(|e| {
            if (r..rows).any(|i| !aug[i][cols + e].is_zero()) {
                return SolveResult::none();
            }
            SolveResult::found(back(Some(e), None), kernel_basis.clone())
        })
        .collect()
}

fn bareiss_det(mut m: IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

pub fn determinant(ring: &RingSpec, m: &Matrix) -> Result<Scalar> {
    if m.rows() != m.cols() {
        return Err(Error::DimensionMismatch(format!(
            "determinant of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    match ring {
        RingSpec::Rationals => {
            let mut scale = Scalar::one();
            let rows: IntMatrix = (0..m.rows())
                .map(|i| {
                    let row = m.row(i);
                    let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                    scale *= Scalar::from_integer(l.clone());
                    row.iter().map(|v| v.numer() * (&l / v.denom())).collect()
                })
                .collect();
            Ok(Scalar::from_integer(bareiss_det(rows)) / scale)
        }
        _ => Ok(ring.from_bigint(bareiss_det(int_matrix(m)))),
    }
}

/// Two-sided inverse of a square map whose determinant is a unit.
pub fn invert_map(m: &LinearMap) -> Result<LinearMap> {
    let ring = m.ring();
    let n = m.domain().rank();
    if m.codomain().rank() != n {
        return Err(Error::NotInvertible(format!(
            "map of rank {} -> {} is not square",
            n,
            m.codomain().rank()
        )));
    }
    let det = determinant(ring, m.matrix())?;
    if !ring.is_unit(&det) {
        return Err(Error::NotInvertible(format!(
            "determinant {} is not a unit in {ring}",
            ring.format(&det)
        )));
    }
    let rhs: Vec<Vector> = (0..n).map(|i| ring.unit_vector(n, i)).collect();
    let cols = solve_many(ring, m.matrix(), &rhs)?
        .into_iter()
        .map(|s| {
            s.unique()
                .ok_or_else(|| Error::NotInvertible("system is not uniquely solvable".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    LinearMap::new(
        m.codomain().clone(),
        m.domain().clone(),
        Matrix::from_columns(&cols, n),
    )
}

/// Coefficients expressing `v` in the span of `generators`, if it lies there.
pub fn submodule_membership(
    ring: &RingSpec,
    generators: &[Vector],
    v: &[Scalar],
) -> Result<Option<Vector>> {
    if let Some(g) = generators.iter().find(|g| g.len() != v.len()) {
        return Err(Error::DimensionMismatch(format!(
            "generator of length {} against a vector of length {}",
            g.len(),
            v.len()
        )));
    }
    let m = Matrix::from_columns(generators, v.len());
    let mut res = solve_many(ring, &m, &[v.to_vec()])?;
    Ok(res.pop().and_then(|r| r.particular))
}

/// Invariant factors of the span of `generators` inside `R^len`, used to
/// decide whether the span is a direct summand.
pub fn is_direct_summand(ring: &RingSpec, generators: &[Vector], len: usize) -> bool {
    match ring {
        RingSpec::Rationals => true,
        RingSpec::Integers => {
            let m = Matrix::from_columns(generators, len);
            let s = smith_normal_form(&int_matrix(&m), len, generators.len());
            s.diagonal.iter().all(|d| d.is_one())
        }
        RingSpec::IntegersMod(n) => {
            let m = Matrix::from_columns(generators, len);
            let s = smith_normal_form(&int_matrix(&m), len, generators.len());
            // Z/n·d is a summand of Z/n iff gcd(d, n/d) = 1 after reducing d to gcd(d, n)
            s.diagonal.iter().all(|d| {
                let g = d.gcd(n);
                let co = n / &g;
                g.gcd(&co).is_one()
            })
        }
    }
}

/// A reduced generating set of the span of `generators` inside `R^len`:
/// an echelon basis over `Z` and `Q`, echelon generators over `Z/n`.
pub fn span_generators(ring: &RingSpec, generators: &[Vector], len: usize) -> Vec<Vector> {
    let mut rows: Vec<Vec<BigInt>> = generators
        .iter()
        .map(|g| {
            // clear denominators; harmless over Z and Z/n
            let l = g.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            g.iter().map(|x| (x * Scalar::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    if let RingSpec::IntegersMod(n) = ring {
        for i in 0..len {
            let mut e = vec![BigInt::zero(); len];
            e[i] = n.clone();
            rows.push(e);
        }
    }
    let (h, _) = hermite_rows(&rows, len);
    h.into_iter()
        .map(|row| row.into_iter().map(|x| ring.from_bigint(x)).collect::<Vector>())
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect()
}

/// Solves `m·x = b` and insists the solution is unique.
pub fn solve_unique(m: &LinearMap, rhs: &[Scalar], what: &str) -> Result<Vector> {
    let res = solve_linear(m, rhs)?;
    match res.status {
        SolveStatus::Unique => Ok(res.particular.expect("unique solution")),
        SolveStatus::Parametric => Err(Error::NonUniqueSolution(what.to_string())),
        SolveStatus::NoSolution => Err(Error::HypothesisFailed(format!("{what}: no solution"))),
    }
}
