use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::LinalgError;

/// Largest characteristic accepted for prime fields.
pub const MAX_PRIME: u32 = 97;

/// The coefficient field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// A prime field `GF(p)`; `p` must be prime and at most [`MAX_PRIME`].
    pub fn prime(p: u32) -> Result<Self, LinalgError> {
        if p < 2 || p > MAX_PRIME || !(2..p).take_while(|d| d * d <= p).all(|d| p % d != 0) {
            return Err(LinalgError::InvalidPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Prime {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(self) -> Option<u32> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(p),
        }
    }

    /// All field elements in the order `0, 1, ..., p-1`. Panics over the rationals.
    pub fn elements(self) -> Vec<Scalar> {
        let p = self.order().expect("only finite fields can be enumerated");
        (0..p as i64).map(|n| self.from_i64(n)).collect()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// An exact field element tagged with its field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar, LinalgError> {
        if self.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Prime { value, modulus } => {
                // Fermat: a^(p-2) = a^-1
                let (mut base, mut exp, mut acc) = (*value as u64, *modulus as u64 - 2, 1u64);
                let m = *modulus as u64;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    exp >>= 1;
                }
                Scalar::Prime {
                    value: acc as u32,
                    modulus: *modulus,
                }
            }
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, LinalgError> {
        Ok(self * &other.inv()?)
    }

    /// Re-interprets the scalar in another field. Rationals map to `GF(p)` when the
    /// denominator is invertible mod `p`; prime-field elements map to their least
    /// non-negative representative.
    pub fn to_field(&self, field: Field) -> Result<Scalar, LinalgError> {
        match (self, field) {
            (Scalar::Rational(q), Field::Rational) => Ok(Scalar::Rational(q.clone())),
            (Scalar::Rational(q), Field::Prime(p)) => {
                let reduce = |n: &BigInt| -> i64 {
                    (n % BigInt::from(p)).to_i64().expect("small residue")
                };
                let num = field.from_i64(reduce(q.numer()));
                let den = field.from_i64(reduce(q.denom()));
                num.div(&den).map_err(|_| LinalgError::NotRepresentable {
                    value: q.to_string(),
                    field,
                })
            }
            (Scalar::Prime { value, .. }, _) => Ok(field.from_i64(*value as i64)),
        }
    }

    /// Integer value when the scalar is a rational integer or a prime-field residue.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(q) if q.is_integer() => q.numer().to_i64(),
            Scalar::Rational(_) => None,
            Scalar::Prime { value, .. } => Some(*value as i64),
        }
    }

    fn check_same(&self, other: &Scalar) {
        assert_eq!(
            self.field(),
            other.field(),
            "scalars from different fields combined"
        );
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => {
                let sign = if q.is_negative() { "-" } else { "" };
                write!(f, "{sign}{}/{}", q.numer().abs(), q.denom())
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime {
                    value: (a + b) % modulus,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime {
                    value: ((*a as u64 * *b as u64) % *modulus as u64) as u32,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_arithmetic_wraps() {
        let f = Field::prime(5).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(4);
        assert_eq!(&a + &b, f.from_i64(2));
        assert_eq!(&a * &b, f.from_i64(2));
        assert_eq!(-&a, f.from_i64(2));
        assert_eq!(a.inv().unwrap(), f.from_i64(2));
    }

    #[test]
    fn division_by_zero_rejected() {
        assert!(matches!(
            Field::Rational.zero().inv(),
            Err(LinalgError::DivisionByZero)
        ));
        assert!(Field::Prime(3).zero().inv().is_err());
    }

    #[test]
    fn invalid_primes_rejected() {
        for p in [0, 1, 4, 9, 91, 101] {
            assert!(Field::prime(p).is_err(), "{p}");
        }
        for p in [2, 3, 5, 7, 89, 97] {
            assert!(Field::prime(p).is_ok(), "{p}");
        }
    }

    #[test]
    fn rational_to_prime_field() {
        let half = Field::Rational.one().div(&Field::Rational.from_i64(2)).unwrap();
        assert_eq!(half.to_field(Field::Prime(3)).unwrap(), Field::Prime(3).from_i64(2));
        assert!(half.to_field(Field::Prime(2)).is_err());
        assert_eq!(half.to_string(), "1/2");
    }
}
