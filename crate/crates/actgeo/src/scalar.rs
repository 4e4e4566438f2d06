//! Exact coefficient arithmetic: the prime fields `F_p` and the rationals.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// The coefficient field of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Fp(u64),
    Q,
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Fp(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Fp(p) => Scalar::Fp { p: *p, v: 0 },
            Field::Q => Scalar::Q(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            Field::Fp(p) => {
                let p = *p;
                let v = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { p, v }
            }
            Field::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Fp(p) => *p,
            Field::Q => 0,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Fp(p) => write!(f, "F{p}"),
            Field::Q => write!(f, "Q"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element: a residue mod p or a rational.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp { p: u64, v: u64 },
    Q(BigRational),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Fp { p, .. } => Field::Fp(*p),
            Scalar::Q(_) => Field::Q,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp { v, .. } => *v == 0,
            Scalar::Q(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp { v, .. } => *v == 1,
            Scalar::Q(r) => r.is_one(),
        }
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(
                self.field().to_string(),
                other.field().to_string(),
            ))
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Fp { p, v: a }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                p: *p,
                v: (a + b) % p,
            },
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Fp { p, v } => Scalar::Fp {
                p: *p,
                v: (p - v) % p,
            },
            Scalar::Q(r) => Scalar::Q(-r),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Fp { p, v: a }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                p: *p,
                v: a.checked_mul(*b).expect("modulus too large") % p,
            },
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            _ => unreachable!(),
        })
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Fp { p, v } => {
                if *v == 0 {
                    return Err(Error::SingularMatrix);
                }
                Ok(Scalar::Fp {
                    p: *p,
                    v: mod_inv(*v, *p),
                })
            }
            Scalar::Q(r) => {
                if r.is_zero() {
                    return Err(Error::SingularMatrix);
                }
                Ok(Scalar::Q(r.recip()))
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp { v, .. } => write!(f, "{v}"),
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

/// True when the scalar prints with a leading minus sign.
pub fn displays_negative(s: &Scalar) -> bool {
    match s {
        Scalar::Fp { .. } => false,
        Scalar::Q(r) => r.is_negative(),
    }
}

pub fn mod_inv(a: u64, p: u64) -> u64 {
    // extended Euclid; p prime, a != 0 mod p
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_check() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(5));
        assert!(!is_prime(1));
        assert!(!is_prime(6));
        assert!(Field::prime(4).is_err());
    }

    #[test]
    fn fp_arithmetic() {
        let f = Field::Fp(5);
        let a = f.from_int(3);
        let b = f.from_int(4);
        assert_eq!(a.add(&b).unwrap(), f.from_int(2));
        assert_eq!(a.mul(&b).unwrap(), f.from_int(2));
        assert_eq!(a.neg(), f.from_int(2));
        assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), f.one());
    }

    #[test]
    fn rational_arithmetic() {
        let f = Field::Q;
        let a = f.from_int(2);
        let half = a.inv().unwrap();
        assert_eq!(half.add(&half).unwrap(), f.one());
        assert!(f.from_int(-3).add(&f.from_int(3)).unwrap().is_zero());
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = Field::Fp(3).one();
        let b = Field::Q.one();
        assert!(a.add(&b).is_err());
    }
}
