use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An exponent vector in `ℤ^d`, `d ∈ {1, 2}`: the monomial `t^z` of the
/// quotient field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exp {
    dim: u8,
    v: [i64; 2],
}

impl Exp {
    pub fn d1(a: i64) -> Self {
        Exp { dim: 1, v: [a, 0] }
    }

    pub fn d2(a: i64, b: i64) -> Self {
        Exp { dim: 2, v: [a, b] }
    }

    pub fn zero(dim: usize) -> Self {
        Exp {
            dim: dim as u8,
            v: [0, 0],
        }
    }

    pub fn from_slice(coords: &[i64]) -> Result<Self> {
        match *coords {
            [a] => Ok(Self::d1(a)),
            [a, b] => Ok(Self::d2(a, b)),
            _ => Err(Error::Dimension(format!("{coords:?}"))),
        }
    }

    /// Parses `"7"`, `"1,0"` or `"(1,0)"`.
    pub fn parse(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let coords = body
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Invalid(format!("cannot parse exponent `{s}`")))?;
        Self::from_slice(&coords)
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn coords(&self) -> &[i64] {
        &self.v[..self.dim as usize]
    }

    pub fn x(&self) -> i64 {
        self.v[0]
    }

    pub fn y(&self) -> i64 {
        self.v[1]
    }

    pub fn is_zero(&self) -> bool {
        self.v == [0, 0]
    }

    pub fn scale(self, k: i64) -> Self {
        Exp {
            dim: self.dim,
            v: [self.v[0] * k, self.v[1] * k],
        }
    }

    /// Coordinatewise `≤`.
    pub fn le(&self, other: &Exp) -> bool {
        self.v[0] <= other.v[0] && self.v[1] <= other.v[1]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.v[0] >= 0 && self.v[1] >= 0
    }

    /// `ℓ∞` norm.
    pub fn norm(&self) -> i64 {
        self.v[0].abs().max(self.v[1].abs())
    }

    /// `x₀y₁ − x₁y₀` (zero in dimension 1).
    pub fn cross(&self, other: &Exp) -> i64 {
        self.v[0] * other.v[1] - self.v[1] * other.v[0]
    }

    pub fn dot(&self, other: &Exp) -> i64 {
        self.v[0] * other.v[0] + self.v[1] * other.v[1]
    }
}

impl Add for Exp {
    type Output = Exp;
    fn add(self, o: Exp) -> Exp {
        debug_assert_eq!(self.dim, o.dim);
        Exp {
            dim: self.dim,
            v: [self.v[0] + o.v[0], self.v[1] + o.v[1]],
        }
    }
}

impl Sub for Exp {
    type Output = Exp;
    fn sub(self, o: Exp) -> Exp {
        debug_assert_eq!(self.dim, o.dim);
        Exp {
            dim: self.dim,
            v: [self.v[0] - o.v[0], self.v[1] - o.v[1]],
        }
    }
}

impl Neg for Exp {
    type Output = Exp;
    fn neg(self) -> Exp {
        self.scale(-1)
    }
}

impl fmt::Display for Exp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.dim {
            1 => write!(f, "{}", self.v[0]),
            _ => write!(f, "({},{})", self.v[0], self.v[1]),
        }
    }
}

impl fmt::Debug for Exp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Exp {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.dim()))?;
        for c in self.coords() {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

/// Accepts `[a]`, `[a, b]` or a bare integer `a`.
impl<'de> Deserialize<'de> for Exp {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ExpVisitor;

        impl<'de> Visitor<'de> for ExpVisitor {
            type Value = Exp;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a list of one or two integers")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Exp, E> {
                Ok(Exp::d1(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Exp, E> {
                i64::try_from(v).map(Exp::d1).map_err(E::custom)
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Exp, A::Error> {
                let mut coords = Vec::new();
                while let Some(c) = seq.next_element::<i64>()? {
                    coords.push(c);
                }
                Exp::from_slice(&coords).map_err(de::Error::custom)
            }
        }

        deserializer.deserialize_any(ExpVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!(Exp::parse("7").unwrap(), Exp::d1(7));
        assert_eq!(Exp::parse("1,0").unwrap(), Exp::d2(1, 0));
        assert_eq!(Exp::parse("(-2, 3)").unwrap(), Exp::d2(-2, 3));
        assert!(Exp::parse("1,2,3").is_err());
        assert!(Exp::parse("x").is_err());
        assert_eq!(Exp::d2(1, -1).to_string(), "(1,-1)");
        assert_eq!(Exp::d1(-4).to_string(), "-4");
    }

    #[test]
    fn json_forms() {
        let e: Exp = serde_json::from_str("[2,0]").unwrap();
        assert_eq!(e, Exp::d2(2, 0));
        let e: Exp = serde_json::from_str("5").unwrap();
        assert_eq!(e, Exp::d1(5));
        assert_eq!(serde_json::to_string(&Exp::d1(5)).unwrap(), "[5]");
    }

    #[test]
    fn arithmetic() {
        let a = Exp::d2(2, 1);
        let b = Exp::d2(1, 3);
        assert_eq!(a + b, Exp::d2(3, 4));
        assert_eq!(a - b, Exp::d2(1, -2));
        assert_eq!(-a, Exp::d2(-2, -1));
        assert_eq!(a.cross(&b), 5);
        assert_eq!((a - b).norm(), 2);
    }
}
