//! Coefficient rings: the integers, the rationals and the residues modulo `n`.
//!
//! Every scalar is a [`BigRational`] kept in the canonical form of its ring:
//! integers and residues carry denominator one, residues live in `[0, n)`,
//! and rationals are in lowest terms with a positive denominator (the
//! invariant `num-rational` maintains for us).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

/// A dense vector of scalars: an element of a free module in basis coordinates.
pub type Vector = Vec<Scalar>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integers,
    Rationals,
    IntegersMod(BigInt),
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => f.write_str("Z"),
            RingSpec::Rationals => f.write_str("Q"),
            RingSpec::IntegersMod(n) => write!(f, "Z/{n}"),
        }
    }
}

impl std::str::FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Z" => Ok(RingSpec::Integers),
            "Q" => Ok(RingSpec::Rationals),
            other => {
                let n = other
                    .strip_prefix("Z/")
                    .ok_or_else(|| Error::Parse(format!("unknown ring descriptor {other:?}")))?;
                let n: BigInt = n
                    .parse()
                    .map_err(|_| Error::InvalidModulus(n.to_string()))?;
                RingSpec::integers_mod(n)
            }
        }
    }
}

impl RingSpec {
    pub fn integers_mod(n: impl Into<BigInt>) -> Result<Self> {
        let n = n.into();
        if n < BigInt::from(2) {
            return Err(Error::InvalidModulus(n.to_string()));
        }
        Ok(RingSpec::IntegersMod(n))
    }

    pub fn modulus(&self) -> Option<&BigInt> {
        match self {
            RingSpec::IntegersMod(n) => Some(n),
            _ => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn int(&self, v: i64) -> Scalar {
        self.from_bigint(BigInt::from(v))
    }

    pub fn from_bigint(&self, v: BigInt) -> Scalar {
        match self {
            RingSpec::IntegersMod(n) => Scalar::from_integer(v.mod_floor(n)),
            _ => Scalar::from_integer(v),
        }
    }

    /// Maps an arbitrary rational into the ring, if it has an image there.
    ///
    /// Over `Z/n` a fraction `p/q` is sent to `p * q^{-1}` when `q` is a unit.
    pub fn coerce(&self, v: &Scalar) -> Option<Scalar> {
        match self {
            RingSpec::Rationals => Some(v.clone()),
            RingSpec::Integers => v.is_integer().then(|| v.clone()),
            RingSpec::IntegersMod(n) => {
                let p = v.numer().mod_floor(n);
                let q = v.denom().mod_floor(n);
                let qi = mod_inverse(&q, n)?;
                Some(Scalar::from_integer((p * qi).mod_floor(n)))
            }
        }
    }

    /// True when `v` is stored in this ring's canonical form.
    pub fn is_canonical(&self, v: &Scalar) -> bool {
        match self {
            RingSpec::Rationals => v.denom().is_positive(),
            RingSpec::Integers => v.is_integer(),
            RingSpec::IntegersMod(n) => {
                v.is_integer() && !v.numer().is_negative() && v.numer() < n
            }
        }
    }

    fn reduce(&self, v: Scalar) -> Scalar {
        match self {
            RingSpec::IntegersMod(n) => Scalar::from_integer(v.numer().mod_floor(n)),
            _ => v,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a - b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.reduce(-a)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        if a.is_zero() || b.is_zero() {
            return Scalar::zero();
        }
        self.reduce(a * b)
    }

    /// `acc += a * b`, skipping the work when either factor vanishes.
    pub fn add_mul_assign(&self, acc: &mut Scalar, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let p = a * b;
        *acc = self.reduce(&*acc + p);
    }

    pub fn add_assign(&self, acc: &mut Scalar, a: &Scalar) {
        if a.is_zero() {
            return;
        }
        *acc = self.reduce(&*acc + a);
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match self {
            RingSpec::Rationals => (!a.is_zero()).then(|| a.recip()),
            RingSpec::Integers => {
                if a.is_one() || *a == -Scalar::one() {
                    Some(a.clone())
                } else {
                    None
                }
            }
            RingSpec::IntegersMod(n) => {
                mod_inverse(a.numer(), n).map(Scalar::from_integer)
            }
        }
    }

    pub fn is_unit(&self, a: &Scalar) -> bool {
        self.inv(a).is_some()
    }

    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::InvalidScalar {
            ring: self.clone(),
            value: s.to_string(),
        };
        let t = s.trim();
        let v = match t.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                Scalar::new(p, q)
            }
            None => Scalar::from_integer(t.parse::<BigInt>().map_err(|_| bad())?),
        };
        match self {
            RingSpec::Rationals => Ok(v),
            RingSpec::Integers if v.is_integer() => Ok(v),
            RingSpec::IntegersMod(_) if v.is_integer() => Ok(self.reduce(v)),
            _ => Err(bad()),
        }
    }

    pub fn format(&self, v: &Scalar) -> String {
        if v.is_integer() {
            v.numer().to_string()
        } else {
            format!("{}/{}", v.numer(), v.denom())
        }
    }

    pub fn zeros(&self, len: usize) -> Vector {
        vec![Scalar::zero(); len]
    }

    pub fn unit_vector(&self, len: usize, i: usize) -> Vector {
        let mut v = self.zeros(len);
        v[i] = Scalar::one();
        v
    }

    pub fn add_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        a.iter().zip(b).map(|(x, y)| self.add(x, y)).collect()
    }

    pub fn sub_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        a.iter().zip(b).map(|(x, y)| self.sub(x, y)).collect()
    }

    pub fn scale_vec(&self, c: &Scalar, a: &[Scalar]) -> Vector {
        a.iter().map(|x| self.mul(c, x)).collect()
    }

    pub fn neg_vec(&self, a: &[Scalar]) -> Vector {
        a.iter().map(|x| self.neg(x)).collect()
    }

    /// `acc += c * v`
    pub fn axpy(&self, acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
        if c.is_zero() {
            return;
        }
        for (a, x) in acc.iter_mut().zip(v) {
            self.add_mul_assign(a, c, x);
        }
    }

    pub fn dot(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (x, y) in a.iter().zip(b) {
            self.add_mul_assign(&mut acc, x, y);
        }
        acc
    }
}

pub(crate) fn mod_inverse(a: &BigInt, n: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor(n);
    let g = a.extended_gcd(n);
    if g.gcd.is_one() {
        Some(g.x.mod_floor(n))
    } else {
        None
    }
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Indices and values of the nonzero coordinates.
pub fn nonzeros(v: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_must_be_at_least_two() {
        assert!(RingSpec::integers_mod(1).is_err());
        assert!(RingSpec::integers_mod(0).is_err());
        assert!(RingSpec::integers_mod(2).is_ok());
        assert!("Z/1".parse::<RingSpec>().is_err());
    }

    #[test]
    fn canonical_residues() {
        let r = RingSpec::integers_mod(6).unwrap();
        assert_eq!(r.int(-1), r.int(5));
        assert_eq!(r.parse("-7").unwrap(), r.int(5));
        assert!(r.is_canonical(&r.int(13)));
        assert!(r.parse("1/2").is_err());
    }

    #[test]
    fn inverses() {
        let z = RingSpec::Integers;
        assert!(z.inv(&z.int(2)).is_none());
        assert_eq!(z.inv(&z.int(-1)), Some(z.int(-1)));
        let z5 = RingSpec::integers_mod(5).unwrap();
        assert_eq!(z5.inv(&z5.int(2)), Some(z5.int(3)));
        let z6 = RingSpec::integers_mod(6).unwrap();
        assert!(z6.inv(&z6.int(2)).is_none());
        assert_eq!(z6.inv(&z6.int(5)), Some(z6.int(5)));
        let q = RingSpec::Rationals;
        assert_eq!(q.inv(&q.parse("-2/3").unwrap()), Some(q.parse("-3/2").unwrap()));
    }

    #[test]
    fn rationals_are_lowest_terms() {
        let q = RingSpec::Rationals;
        let v = q.parse("6/-4").unwrap();
        assert_eq!(q.format(&v), "-3/2");
        assert!(q.is_canonical(&v));
    }

    #[test]
    fn ring_descriptor_roundtrip() {
        for s in ["Z", "Q", "Z/3", "Z/6"] {
            let r: RingSpec = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
    }
}
