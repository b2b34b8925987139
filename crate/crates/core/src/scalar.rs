//! Exact scalars: arbitrary-precision rationals over Q, residues over a
//! prime field F_p. No floating point anywhere; every verdict downstream
//! relies on these operations being exact identities.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::error::Error;

/// Largest prime modulus accepted for exhaustive F_p searches.
pub const MAX_PRIME: u64 = 97;

/// The coefficient field of a structure file: `Q` or `Fp:<p>` with p prime, p <= 97.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Q,
    Fp(u64),
}

impl Field {
    pub fn parse(tag: &str) -> Result<Field, Error> {
        if tag == "Q" {
            return Ok(Field::Q);
        }
        if let Some(p) = tag.strip_prefix("Fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::schema(format!("bad field tag {tag:?}")))?;
            if p < 2 || p > MAX_PRIME || !is_prime(p) {
                return Err(Error::schema(format!(
                    "field modulus {p} must be a prime <= {MAX_PRIME}"
                )));
            }
            return Ok(Field::Fp(p));
        }
        Err(Error::schema(format!("unknown field tag {tag:?}")))
    }

    pub fn tag(&self) -> String {
        match self {
            Field::Q => "Q".to_string(),
            Field::Fp(p) => format!("Fp:{p}"),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::zero()),
            Field::Fp(p) => Scalar::Fp { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::one()),
            Field::Fp(p) => Scalar::Fp { v: 1, p: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Fp(p) => Scalar::Fp {
                v: n.rem_euclid(*p as i64) as u64,
                p: *p,
            },
        }
    }

    /// Characteristic of the field: 0 for Q, p for F_p.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Q => 0,
            Field::Fp(p) => *p,
        }
    }

    /// All field elements; only available over F_p (used by exhaustive scans).
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            Field::Q => None,
            Field::Fp(p) => Some((0..*p).map(|v| Scalar::Fp { v, p: *p }).collect()),
        }
    }

    /// Parse a scalar literal: integer, or "a/b" string, or decimal-free integer string.
    pub fn scalar_from_json(&self, v: &serde_json::Value) -> Result<Scalar, Error> {
        match v {
            serde_json::Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    Ok(self.from_i64(i))
                } else {
                    Err(Error::schema(format!("non-integer numeric literal {n}")))
                }
            }
            serde_json::Value::String(s) => self.scalar_from_str(s),
            other => Err(Error::schema(format!("bad scalar literal {other}"))),
        }
    }

    pub fn scalar_from_str(&self, s: &str) -> Result<Scalar, Error> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| Error::schema(format!("bad rational literal {s:?}")))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| Error::schema(format!("bad rational literal {s:?}")))?;
        if den.is_zero() {
            return Err(Error::schema(format!("zero denominator in {s:?}")));
        }
        match self {
            Field::Q => Ok(Scalar::Q(BigRational::new(num, den))),
            Field::Fp(p) => {
                let pb = BigInt::from(*p);
                let n = ((num % &pb) + &pb) % &pb;
                let d = ((den % &pb) + &pb) % &pb;
                let n: u64 = n.try_into().unwrap();
                let d: u64 = d.try_into().unwrap();
                if d == 0 {
                    return Err(Error::schema(format!(
                        "denominator of {s:?} vanishes mod {p}"
                    )));
                }
                let inv = mod_inverse(d, *p);
                Ok(Scalar::Fp {
                    v: mod_mul(n, inv, *p),
                    p: *p,
                })
            }
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mod_mul(acc, b, p);
        }
        b = mod_mul(b, b, p);
        e >>= 1;
    }
    acc
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero mod {p}");
    mod_pow(a, p - 2, p)
}

/// An exact field element. Arithmetic between scalars of different fields is a
/// programming error and panics; all public entry points validate field
/// consistency before any arithmetic happens.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Q,
            Scalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => Scalar::Fp {
                v: (a + b) % p,
                p: *p,
            },
            _ => panic!("field mismatch in scalar addition"),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => Scalar::Fp {
                v: mod_mul(*a, *b, *p),
                p: *p,
            },
            _ => panic!("field mismatch in scalar multiplication"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: (p - v) % p,
                p: *p,
            },
        }
    }

    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: mod_inverse(*v, *p),
                p: *p,
            },
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Scalar {
        self.mul(&rhs.inv())
    }

    /// Canonical string form: "n" or "n/d" with d > 0 and gcd(n,d) = 1.
    pub fn canonical_string(&self) -> String {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => v.to_string(),
        }
    }

    /// Reduce a rational scalar mod p; `None` when the denominator vanishes mod p
    /// (a "bad prime" for this entry).
    pub fn reduce_mod(&self, p: u64) -> Option<Scalar> {
        match self {
            Scalar::Q(r) => {
                let pb = BigInt::from(p);
                let num = ((r.numer() % &pb) + &pb) % &pb;
                let den = ((r.denom() % &pb) + &pb) % &pb;
                let num: u64 = num.try_into().ok()?;
                let den: u64 = den.try_into().ok()?;
                if den == 0 {
                    return None;
                }
                Some(Scalar::Fp {
                    v: mod_mul(num, mod_inverse(den, p), p),
                    p,
                })
            }
            Scalar::Fp { .. } => None,
        }
    }

    /// Magnitude proxy used only to pick readable pivots in tests; never used
    /// for verdicts.
    pub fn abs_q(&self) -> Option<BigRational> {
        match self {
            Scalar::Q(r) => Some(r.abs()),
            Scalar::Fp { .. } => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Q(_) => s.serialize_str(&self.canonical_string()),
            Scalar::Fp { v, .. } => s.serialize_u64(*v),
        }
    }
}

/// Scalars deserialize through a field context in file loaders; the bare serde
/// impl only exists so witness blocks round-trip inside reports. Rationals come
/// back as strings, residues would need the surrounding field tag, so bare
/// deserialization is Q-only.
impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        Field::Q
            .scalar_from_json(&v)
            .map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_tags_round_trip() {
        assert_eq!(Field::parse("Q").unwrap(), Field::Q);
        assert_eq!(Field::parse("Fp:5").unwrap(), Field::Fp(5));
        assert!(Field::parse("Fp:4").is_err());
        assert!(Field::parse("Fp:101").is_err());
        assert_eq!(Field::Fp(7).tag(), "Fp:7");
    }

    #[test]
    fn rational_literals() {
        let f = Field::Q;
        let half = f.scalar_from_str("1/2").unwrap();
        let quarter = half.mul(&half);
        assert_eq!(quarter.canonical_string(), "1/4");
        assert_eq!(f.scalar_from_str("-6/4").unwrap().canonical_string(), "-3/2");
    }

    #[test]
    fn fp_literals_and_inverse() {
        let f = Field::Fp(5);
        let x = f.scalar_from_str("7").unwrap();
        assert_eq!(x.canonical_string(), "2");
        assert!(x.mul(&x.inv()).is_one());
        let y = f.scalar_from_str("1/2").unwrap();
        assert_eq!(y.canonical_string(), "3");
    }

    #[test]
    fn reduction_mod_p_detects_bad_primes() {
        let third = Field::Q.scalar_from_str("1/3").unwrap();
        assert!(third.reduce_mod(3).is_none());
        assert_eq!(third.reduce_mod(5).unwrap().canonical_string(), "2");
    }
}
