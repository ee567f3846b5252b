//! Prime fields and the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground field: `characteristic == 0` means Q, otherwise F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Field {
    characteristic: u64,
}

/// A field element in canonical form.
///
/// `Mod` residues satisfy `0 <= e < p`; rationals are always fully reduced
/// (the `Ratio` type normalizes on construction).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod(u64),
    Rat(Box<BigRational>),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn new(characteristic: u64) -> Result<Field> {
        if characteristic == 0 || is_prime(characteristic) {
            Ok(Field { characteristic })
        } else {
            Err(Error::InvalidField(characteristic))
        }
    }

    pub fn rationals() -> Field {
        Field { characteristic: 0 }
    }

    /// F_p; panics when `p` is not prime. Use [`Field::new`] for untrusted input.
    pub fn prime(p: u64) -> Field {
        Field::new(p).expect("characteristic must be prime")
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_finite(&self) -> bool {
        self.characteristic != 0
    }

    /// Number of elements, `None` for Q.
    pub fn order(&self) -> Option<u64> {
        self.is_finite().then_some(self.characteristic)
    }

    pub fn zero(&self) -> Scalar {
        if self.is_finite() {
            Scalar::Mod(0)
        } else {
            Scalar::Rat(Box::new(BigRational::zero()))
        }
    }

    pub fn one(&self) -> Scalar {
        if self.is_finite() {
            Scalar::Mod(1)
        } else {
            Scalar::Rat(Box::new(BigRational::one()))
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        if self.is_finite() {
            let p = self.characteristic as i128;
            Scalar::Mod((v as i128).rem_euclid(p) as u64)
        } else {
            Scalar::Rat(Box::new(BigRational::from_integer(BigInt::from(v))))
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::Parse(format!("zero denominator in {num}/{den}")));
        }
        if self.is_finite() {
            let d = self.from_i64(den);
            if d.is_zero() {
                return Err(Error::Parse(format!(
                    "{num}/{den} is undefined in characteristic {}",
                    self.characteristic
                )));
            }
            Ok(self.mul(&self.from_i64(num), &self.inv(&d)))
        } else {
            Ok(Scalar::Rat(Box::new(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))))
        }
    }

    /// Parses `"3"`, `"-2"` or `"a/b"`.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a field element: {s:?}"));
        if let Some((n, d)) = s.split_once('/') {
            if self.is_finite() {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                return self.from_ratio(n, d);
            }
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::Rat(Box::new(BigRational::new(n, d))))
        } else if self.is_finite() {
            let v: BigInt = s.parse().map_err(|_| bad())?;
            let p = BigInt::from(self.characteristic);
            let r = ((v % &p) + &p) % &p;
            Ok(Scalar::Mod(r.to_u64().expect("reduced residue fits")))
        } else {
            let v: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Scalar::Rat(Box::new(BigRational::from_integer(v))))
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Mod(x), Scalar::Mod(y)) => {
                let s = x + y;
                Scalar::Mod(if s >= self.characteristic { s - self.characteristic } else { s })
            }
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(Box::new(&**x + &**y)),
            _ => panic!("mixed scalar kinds"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Mod(0) => Scalar::Mod(0),
            Scalar::Mod(x) => Scalar::Mod(self.characteristic - x),
            Scalar::Rat(x) => Scalar::Rat(Box::new(-&**x)),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 * *y as u128) % self.characteristic as u128) as u64)
            }
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(Box::new(&**x * &**y)),
            _ => panic!("mixed scalar kinds"),
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        assert!(!a.is_zero(), "inverse of zero");
        match a {
            Scalar::Mod(x) => Scalar::Mod(self.pow_mod(*x, self.characteristic - 2)),
            Scalar::Rat(x) => Scalar::Rat(Box::new(x.recip())),
        }
    }

    fn pow_mod(&self, b: u64, mut e: u64) -> u64 {
        let p = self.characteristic as u128;
        let mut acc: u128 = 1;
        let mut base = b as u128 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc as u64
    }

    /// All elements of a finite field in order 0, 1, ..., p-1.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        self.order().map(|p| (0..p).map(Scalar::Mod).collect())
    }

    /// Whether a scalar belongs to this field's representation.
    pub fn owns(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(x) => self.is_finite() && *x < self.characteristic,
            Scalar::Rat(_) => !self.is_finite(),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_finite() {
            write!(f, "F_{}", self.characteristic)
        } else {
            write!(f, "Q")
        }
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod(x) => *x == 0,
            Scalar::Rat(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod(x) => *x == 1,
            Scalar::Rat(x) => x.is_one(),
        }
    }

    /// JSON form: integers for residues and integral rationals, `"a/b"` otherwise.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Scalar::Mod(x) => serde_json::Value::from(*x),
            Scalar::Rat(x) if x.is_integer() => match x.to_integer().to_i64() {
                Some(v) => serde_json::Value::from(v),
                None => serde_json::Value::from(x.to_string()),
            },
            Scalar::Rat(x) => serde_json::Value::from(x.to_string()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod(x) => write!(f, "{x}"),
            Scalar::Rat(x) if x.is_integer() => write!(f, "{}", x.to_integer()),
            Scalar::Rat(x) => {
                if x.is_negative() {
                    write!(f, "-{}/{}", x.numer().abs(), x.denom())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composite_characteristic() {
        assert!(Field::new(4).is_err());
        assert!(Field::new(1).is_err());
        assert!(Field::new(7).is_ok());
        assert!(Field::new(0).is_ok());
    }

    #[test]
    fn residues_are_canonical() {
        let f = Field::prime(5);
        assert_eq!(f.from_i64(-1), Scalar::Mod(4));
        assert_eq!(f.parse("12").unwrap(), Scalar::Mod(2));
        assert_eq!(f.parse("1/2").unwrap(), Scalar::Mod(3));
        assert_eq!(f.mul(&Scalar::Mod(3), &f.inv(&Scalar::Mod(3))), Scalar::Mod(1));
    }

    #[test]
    fn rationals_reduce() {
        let q = Field::rationals();
        let a = q.parse("6/4").unwrap();
        assert_eq!(a.to_string(), "3/2");
        assert_eq!(q.parse("-2/4").unwrap().to_string(), "-1/2");
        let b = q.add(&a, &q.parse("1/2").unwrap());
        assert_eq!(b, q.from_i64(2));
        assert!(q.parse("1/0").is_err());
    }
}
