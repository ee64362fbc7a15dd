//! Oracles shared by the integration targets. Nothing here calls the
//! library's solvers; answers come from enumeration or triangular
//! substitution.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use hopfdual::algebra::AlgebraData;
use hopfdual::linalg::snf::smith_normal_form;
use hopfdual::linalg::{solve_many, LinearMap, Matrix, SolveStatus};
use hopfdual::{RingSpec, Scalar, Vector};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

fn residues(v: &[Scalar]) -> Vec<i64> {
    v.iter().map(|x| x.to_integer().to_i64().expect("small")).collect()
}

/// All `x ∈ (Z/n)^cols` with `m·x = b`, by brute force.
pub fn enumerate_solutions(n: i64, m: &[Vec<i64>], b: &[i64], cols: usize) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    let total = (n as u64).pow(cols as u32);
    for code in 0..total {
        let mut x = vec![0i64; cols];
        let mut c = code;
        for xi in x.iter_mut() {
            *xi = (c % n as u64) as i64;
            c /= n as u64;
        }
        let ok = m.iter().zip(b).all(|(row, bi)| {
            let s: i64 = row.iter().zip(&x).map(|(a, xi)| a * xi).sum();
            (s - bi).rem_euclid(n) == 0
        });
        if ok {
            out.insert(x);
        }
    }
    out
}

/// `particular + span(kernel)` over `Z/n`, enumerated.
fn generated_set(n: i64, particular: &[i64], kernel: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    out.insert(particular.iter().map(|x| x.rem_euclid(n)).collect::<Vec<_>>());
    for k in kernel {
        let current: Vec<Vec<i64>> = out.iter().cloned().collect();
        for v in current {
            let mut w = v.clone();
            for _ in 1..n {
                w = w.iter().zip(k).map(|(a, b)| (a + b).rem_euclid(n)).collect();
                out.insert(w.clone());
            }
        }
    }
    out
}

/// Checks one random system over `Z/n` against enumeration.
pub fn check_mod_n_system(n: i64, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let rows = rng.gen_range(1..=3);
    let cols = rng.gen_range(1..=3);
    let m: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(0..n)).collect()).collect();
    let b: Vec<i64> = (0..rows).map(|_| rng.gen_range(0..n)).collect();
    let ring = RingSpec::integers_mod(n).unwrap();
    let mat = Matrix::from_rows(m.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect(), cols);
    let rhs: Vector = b.iter().map(|&v| int(v)).collect();
    let res = solve_many(&ring, &mat, &[rhs]).map_err(|e| e.to_string())?.pop().unwrap();
    let truth = enumerate_solutions(n, &m, &b, cols);
    let ctx = || format!("Z/{n}: m = {m:?}, b = {b:?}");
    match res.status {
        SolveStatus::NoSolution => {
            if !truth.is_empty() {
                return Err(format!("{}: reported no solution, {} exist", ctx(), truth.len()));
            }
        }
        status => {
            let p = residues(res.particular.as_ref().unwrap());
            let kernel: Vec<Vec<i64>> = res.kernel_basis.iter().map(|k| residues(k)).collect();
            let got = generated_set(n, &p, &kernel);
            if got != truth {
                return Err(format!("{}: solution sets differ ({} vs {})", ctx(), got.len(), truth.len()));
            }
            if (status == SolveStatus::Unique) != (truth.len() == 1) {
                return Err(format!("{}: status {status:?} with {} solutions", ctx(), truth.len()));
            }
        }
    }
    Ok(())
}

/// Random `L·U` with unit triangular factors; returns `(L, U)`.
pub fn random_unimodular(size: usize, rng: &mut ChaCha8Rng) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let mut l = vec![vec![0i64; size]; size];
    let mut u = vec![vec![0i64; size]; size];
    for i in 0..size {
        l[i][i] = 1;
        u[i][i] = 1;
        for j in 0..i {
            l[i][j] = rng.gen_range(-3..=3);
        }
        for j in i + 1..size {
            u[i][j] = rng.gen_range(-3..=3);
        }
    }
    (l, u)
}

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b[0].len();
    a.iter()
        .map(|row| (0..n).map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum()).collect())
        .collect()
}

/// Solves `L·U·x = b` by forward then backward substitution.
pub fn back_substitute(l: &[Vec<i64>], u: &[Vec<i64>], b: &[i64]) -> Vec<i64> {
    let n = b.len();
    let mut y = vec![0i64; n];
    for i in 0..n {
        y[i] = b[i] - (0..i).map(|j| l[i][j] * y[j]).sum::<i64>();
    }
    let mut x = vec![0i64; n];
    for i in (0..n).rev() {
        x[i] = y[i] - (i + 1..n).map(|j| u[i][j] * x[j]).sum::<i64>();
    }
    x
}

fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// A unimodular system solved by the library (Smith normal form over Z)
/// and by substitution; also checks `P·M·Q = I` with `det P, det Q = ±1`.
pub fn check_unimodular_system(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let size = rng.gen_range(1..=5);
    let (l, u) = random_unimodular(size, rng);
    let m = matmul(&l, &u);
    let x: Vec<i64> = (0..size).map(|_| rng.gen_range(-20..=20)).collect();
    let b: Vec<i64> = m.iter().map(|r| r.iter().zip(&x).map(|(a, xi)| a * xi).sum()).collect();
    let oracle = back_substitute(&l, &u, &b);
    if oracle != x {
        return Err("substitution oracle is inconsistent".into());
    }
    let ring = RingSpec::Integers;
    let mat = Matrix::from_rows(m.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect(), size);
    let rhs: Vector = b.iter().map(|&v| int(v)).collect();
    let res = solve_many(&ring, &mat, &[rhs]).map_err(|e| e.to_string())?.pop().unwrap();
    let got = res.unique().ok_or_else(|| format!("m = {m:?}: not unique"))?;
    if residues(&got) != oracle {
        return Err(format!("m = {m:?}, b = {b:?}: {:?} vs {oracle:?}", residues(&got)));
    }
    let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let s = smith_normal_form(&big, size, size);
    if s.diagonal.iter().any(|d| !d.is_one()) || s.rank() != size {
        return Err(format!("m = {m:?}: invariant factors {:?}", s.diagonal));
    }
    if !det(&s.p).abs().is_one() || !det(&s.q).abs().is_one() {
        return Err(format!("m = {m:?}: transforms not unimodular"));
    }
    let pm: Vec<Vec<BigInt>> = s
        .p
        .iter()
        .map(|row| (0..size).map(|j| row.iter().zip(&big).map(|(a, r)| a * &r[j]).sum()).collect())
        .collect();
    let pmq: Vec<Vec<BigInt>> = pm
        .iter()
        .map(|row| (0..size).map(|j| row.iter().zip(&s.q).map(|(a, r)| a * &r[j]).sum()).collect())
        .collect();
    for (i, row) in pmq.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if *v != BigInt::from((i == j) as i64) {
                return Err(format!("m = {m:?}: P·M·Q is not the identity"));
            }
        }
    }
    Ok(())
}

/// Multiplicativity, unitality and a two-sided inverse, recomputed from the
/// structure tables.
pub fn is_algebra_iso(map: &LinearMap, inverse: &LinearMap, source: &AlgebraData, target: &AlgebraData) -> Result<(), String> {
    let ring = source.ring();
    let cols: Vec<Vector> = (0..source.dim()).map(|i| map.column(i)).collect();
    for i in 0..source.dim() {
        for j in 0..source.dim() {
            let lhs = map.apply(&source.mul(&source.basis(i), &source.basis(j))).unwrap();
            let rhs = target.mul(&cols[i], &cols[j]);
            if lhs != rhs {
                return Err(format!(
                    "not multiplicative at ({}, {})",
                    source.carrier().label(i),
                    source.carrier().label(j)
                ));
            }
        }
    }
    if map.apply(source.unit()).unwrap() != *target.unit() {
        return Err("not unital".into());
    }
    for i in 0..source.dim() {
        if inverse.apply(&cols[i]).unwrap() != ring.unit_vector(source.dim(), i) {
            return Err(format!("inverse fails at {}", source.carrier().label(i)));
        }
    }
    for i in 0..target.dim() {
        if map.apply(&inverse.column(i)).unwrap() != ring.unit_vector(target.dim(), i) {
            return Err(format!("inverse fails at {}", target.carrier().label(i)));
        }
    }
    Ok(())
}
