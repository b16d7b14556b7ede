//! Iterated torus knots as validated cabling tuples.
//!
//! A knot is stored in the preferred framing `C` (coefficients `P_i`). The
//! cabling framing `C'` (coefficients `p_i`) is derived through
//! `P_i = q_i·A_{i-1} + p_i` with `A_i = P_i·q_i` and `A_0 = 0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::serde_int;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Frame {
    /// Preferred (Seifert) longitude.
    C,
    /// Longitude induced by the cabling torus.
    Cprime,
}

impl Frame {
    fn tag(self) -> &'static str {
        match self {
            Frame::C => "C",
            Frame::Cprime => "C'",
        }
    }
}

impl FromStr for Frame {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "C" => Ok(Frame::C),
            "C'" | "Cprime" | "Cp" => Ok(Frame::Cprime),
            other => Err(Error::Parse(format!("unknown frame {other:?}"))),
        }
    }
}

/// One cabling step `(first, q)`; `first` is `P_i` or `p_i` depending on
/// the frame it is read in.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CablingPair {
    #[serde(with = "serde_int")]
    pub first: BigInt,
    #[serde(with = "serde_int")]
    pub q: BigInt,
}

impl CablingPair {
    pub fn new(first: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        CablingPair { first: first.into(), q: q.into() }
    }

    fn check(&self, index: usize) -> Result<()> {
        let fail = |reason: &str| Err(Error::Validation { pair: index, reason: reason.into() });
        if self.q <= BigInt::one() {
            return fail("has q ≤ 1");
        }
        if self.first.is_zero() {
            return fail("has zero first coefficient");
        }
        if !self.first.gcd(&self.q).is_one() {
            return fail("not coprime");
        }
        Ok(())
    }
}

impl fmt::Display for CablingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.q)
    }
}

/// An r-fold iterated torus knot `K_r`.
///
/// Equality ignores nothing: two knots are equal when they have the same
/// cabling data *and* the same presentation frame.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IteratedTorusKnot {
    frame: Frame,
    /// Canonical data in frame `C`.
    pairs_c: Vec<CablingPair>,
}

impl IteratedTorusKnot {
    /// Validate a raw tuple given in `frame`.
    pub fn validate(raw: Vec<CablingPair>, frame: Frame) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::Parse("a knot needs at least one cabling pair".into()));
        }
        for (i, pair) in raw.iter().enumerate() {
            pair.check(i + 1)?;
        }
        if raw[0].first.abs() <= BigInt::one() {
            return Err(Error::Validation {
                pair: 1,
                reason: "has |p_1| ≤ 1 (base must be a nontrivial torus knot)".into(),
            });
        }
        let pairs_c = match frame {
            Frame::C => raw,
            Frame::Cprime => cprime_to_c(&raw),
        };
        Ok(IteratedTorusKnot { frame, pairs_c })
    }

    /// Convenience constructor from small integers.
    pub fn from_pairs(frame: Frame, pairs: &[(i64, i64)]) -> Result<Self> {
        let raw = pairs.iter().map(|&(p, q)| CablingPair::new(p, q)).collect();
        Self::validate(raw, frame)
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    /// Number of cabling steps `r`.
    pub fn len(&self) -> usize {
        self.pairs_c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs_c.is_empty()
    }

    /// Pairs in the presentation frame.
    pub fn pairs(&self) -> Vec<CablingPair> {
        self.pairs_in(self.frame)
    }

    pub fn pairs_in(&self, frame: Frame) -> Vec<CablingPair> {
        match frame {
            Frame::C => self.pairs_c.clone(),
            Frame::Cprime => c_to_cprime(&self.pairs_c),
        }
    }

    /// Preferred-framing data without cloning.
    pub fn pairs_c(&self) -> &[CablingPair] {
        &self.pairs_c
    }

    /// Same knot presented in `target`.
    pub fn to_frame(&self, target: Frame) -> Self {
        IteratedTorusKnot { frame: target, pairs_c: self.pairs_c.clone() }
    }

    /// The first `i` iterations, `K_i`.
    pub fn prefix(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange { index: i, len: self.len() });
        }
        Ok(IteratedTorusKnot { frame: self.frame, pairs_c: self.pairs_c[..i].to_vec() })
    }

    /// Whether every `P_i > 0`.
    pub fn all_positive(&self) -> bool {
        self.pairs_c.iter().all(|p| p.first.is_positive())
    }

    /// The `(r+1)`-fold knot obtained by one more cabling, given in the
    /// preferred framing.
    pub fn cable(&self, pair_c: CablingPair) -> Result<Self> {
        pair_c.check(self.len() + 1)?;
        let mut pairs_c = self.pairs_c.clone();
        pairs_c.push(pair_c);
        Ok(IteratedTorusKnot { frame: self.frame, pairs_c })
    }
}

fn c_to_cprime(pairs: &[CablingPair]) -> Vec<CablingPair> {
    let mut a_prev = BigInt::zero();
    pairs
        .iter()
        .map(|pc| {
            let p = &pc.first - &pc.q * &a_prev;
            a_prev = &pc.first * &pc.q;
            CablingPair { first: p, q: pc.q.clone() }
        })
        .collect()
}

fn cprime_to_c(pairs: &[CablingPair]) -> Vec<CablingPair> {
    let mut a_prev = BigInt::zero();
    pairs
        .iter()
        .map(|pp| {
            let cap = &pp.q * &a_prev + &pp.first;
            a_prev = &cap * &pp.q;
            CablingPair { first: cap, q: pp.q.clone() }
        })
        .collect()
}

impl fmt::Display for IteratedTorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.frame.tag())?;
        for (i, p) in self.pairs().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for IteratedTorusKnot {
    type Err = Error;

    /// `C:(2,3),(7,2)` or `C':(2,3),(-5,2)`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (tag, body) = compact
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing frame tag in {s:?}")))?;
        let frame: Frame = tag.parse()?;
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected (p,q) pairs in {s:?}")))?;
        let mut raw = Vec::new();
        for (i, chunk) in body.split("),(").enumerate() {
            let (p, q) = chunk
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("pair {} is malformed: {chunk:?}", i + 1)))?;
            let int = |t: &str| {
                t.parse::<BigInt>().map_err(|_| {
                    Error::Parse(format!("pair {} has a bad integer {t:?}", i + 1))
                })
            };
            raw.push(CablingPair { first: int(p)?, q: int(q)? });
        }
        Self::validate(raw, frame)
    }
}

impl Serialize for IteratedTorusKnot {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for IteratedTorusKnot {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = String::deserialize(d)?;
        raw.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn knot(s: &str) -> IteratedTorusKnot {
        s.parse().unwrap()
    }

    #[test]
    fn validation() {
        assert!(IteratedTorusKnot::from_pairs(Frame::C, &[(2, 3), (7, 2)]).is_ok());
        let err = IteratedTorusKnot::from_pairs(Frame::C, &[(2, 4)]).unwrap_err();
        assert_eq!(err.to_string(), "pair 1 not coprime");
        let err = IteratedTorusKnot::from_pairs(Frame::C, &[(1, 2)]).unwrap_err();
        assert!(matches!(err, Error::Validation { pair: 1, .. }));
        let err = IteratedTorusKnot::from_pairs(Frame::C, &[(2, 3), (3, 1)]).unwrap_err();
        assert!(matches!(err, Error::Validation { pair: 2, .. }));
        let err = IteratedTorusKnot::from_pairs(Frame::C, &[(2, 3), (3, -2)]).unwrap_err();
        assert!(matches!(err, Error::Validation { pair: 2, .. }));
        let err = IteratedTorusKnot::from_pairs(Frame::Cprime, &[(2, 3), (0, 2)]).unwrap_err();
        assert!(matches!(err, Error::Validation { pair: 2, .. }));
        assert!(IteratedTorusKnot::validate(vec![], Frame::C).is_err());
    }

    #[test]
    fn frame_conversion_examples() {
        assert_eq!(knot("C:(2,3),(7,2)").to_frame(Frame::Cprime).to_string(), "C':(2,3),(-5,2)");
        assert_eq!(knot("C:(2,3)").to_frame(Frame::Cprime).to_string(), "C':(2,3)");
        assert_eq!(
            knot("C:(2,3),(7,2),(29,2)").to_frame(Frame::Cprime).to_string(),
            "C':(2,3),(-5,2),(1,2)"
        );
        assert_eq!(knot("C':(2,3),(-5,2)").to_frame(Frame::C), knot("C:(2,3),(7,2)"));
    }

    #[test]
    fn coprimality_is_frame_independent() {
        // (3,4),(5,2): p_2 = -19 is still coprime to 2
        let k = knot("C:(3,4),(5,2)");
        let cp = k.pairs_in(Frame::Cprime);
        assert_eq!(cp[1], CablingPair::new(-19, 2));
    }

    #[test]
    fn prefixes() {
        let k = knot("C:(2,3),(7,2)");
        assert_eq!(k.prefix(1).unwrap(), knot("C:(2,3)"));
        assert_eq!(k.prefix(2).unwrap(), k);
        assert!(matches!(k.prefix(0), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(k.prefix(3), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn grammar_round_trip() {
        for s in ["C:(2,3),(7,2)", "C':(2,3),(-5,2)", "C:(-2,3)"] {
            assert_eq!(knot(s).to_string(), s);
        }
        assert_eq!(knot("  C : ( 2 , 3 ) , ( 7 , 2 ) "), knot("C:(2,3),(7,2)"));
        assert!("(2,3)".parse::<IteratedTorusKnot>().is_err());
        assert!("C:(2,3".parse::<IteratedTorusKnot>().is_err());
        assert!("D:(2,3)".parse::<IteratedTorusKnot>().is_err());
        assert!("C:(2;3)".parse::<IteratedTorusKnot>().is_err());
    }

    #[test]
    fn positivity() {
        assert!(knot("C:(2,3),(7,2)").all_positive());
        assert!(!knot("C:(-2,3)").all_positive());
        // p_2 = -1 in C' still gives P_2 = 11 > 0
        assert!(knot("C':(2,3),(-1,2)").all_positive());
    }
}
