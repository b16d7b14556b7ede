//! Exact slope arithmetic on the boundary torus of a solid torus.
//!
//! A curve with `μ` meridians and `λ` longitudes has slope `λ/μ`. The
//! meridian is `0`, the longitude is `∞`. All arithmetic is on arbitrary
//! precision integers.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A reduced slope `λ/μ` with `gcd(|λ|, |μ|) = 1` and `μ ≥ 0`.
///
/// `∞` is stored as `1/0` and `0` as `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Slope {
    lon: BigInt,
    mer: BigInt,
}

/// A slope that keeps its common factor.
///
/// Intersection boundary slopes record the dividing-curve multiplicity this
/// way: `a/b` with `2·gcd(a, |b|)` dividing curves. Only the overall sign is
/// normalized (`μ > 0`, or `μ = 0` and `λ > 0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct UnreducedSlope {
    lon: BigInt,
    mer: BigInt,
}

fn normalize_sign(lon: BigInt, mer: BigInt) -> (BigInt, BigInt) {
    if mer.is_negative() || (mer.is_zero() && lon.is_negative()) {
        (-lon, -mer)
    } else {
        (lon, mer)
    }
}

impl Slope {
    pub fn new(lon: impl Into<BigInt>, mer: impl Into<BigInt>) -> Result<Self> {
        let (slope, _) = UnreducedSlope::new(lon, mer)?.reduce();
        Ok(slope)
    }

    pub fn infinity() -> Self {
        Slope { lon: BigInt::one(), mer: BigInt::zero() }
    }

    pub fn zero() -> Self {
        Slope { lon: BigInt::zero(), mer: BigInt::one() }
    }

    /// Number of longitudes (the numerator).
    pub fn lon(&self) -> &BigInt {
        &self.lon
    }

    /// Number of meridians (the denominator), never negative.
    pub fn mer(&self) -> &BigInt {
        &self.mer
    }

    pub fn is_infinite(&self) -> bool {
        self.mer.is_zero()
    }

    pub fn to_unreduced(&self) -> UnreducedSlope {
        UnreducedSlope { lon: self.lon.clone(), mer: self.mer.clone() }
    }
}

/// Order on the affine line. `∞` compares equal to itself and is
/// incomparable with every finite slope.
impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Some(Ordering::Equal),
            (false, false) => Some((&self.lon * &other.mer).cmp(&(&other.lon * &self.mer))),
            _ => None,
        }
    }
}

impl UnreducedSlope {
    pub fn new(lon: impl Into<BigInt>, mer: impl Into<BigInt>) -> Result<Self> {
        let (lon, mer) = (lon.into(), mer.into());
        if lon.is_zero() && mer.is_zero() {
            return Err(Error::InvalidSlope);
        }
        let (lon, mer) = normalize_sign(lon, mer);
        Ok(UnreducedSlope { lon, mer })
    }

    pub fn lon(&self) -> &BigInt {
        &self.lon
    }

    pub fn mer(&self) -> &BigInt {
        &self.mer
    }

    /// `gcd(|λ|, |μ|)`, at least 1.
    pub fn multiplicity(&self) -> BigInt {
        self.lon.gcd(&self.mer)
    }

    /// Number of dividing curves when read as an intersection boundary slope.
    pub fn dividing_curves(&self) -> BigInt {
        self.multiplicity() * 2
    }

    pub fn reduce(&self) -> (Slope, BigInt) {
        let m = self.multiplicity();
        let slope = Slope { lon: &self.lon / &m, mer: &self.mer / &m };
        (slope, m)
    }
}

/// Free-function form of [`UnreducedSlope::reduce`].
pub fn reduce(s: &UnreducedSlope) -> (Slope, BigInt) {
    s.reduce()
}

/// A 2×2 integer matrix of determinant ±1 acting on column vectors
/// `(meridians, longitudes)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularMap {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl UnimodularMap {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = UnimodularMap { a: a.into(), b: b.into(), c: c.into(), d: d.into() };
        let det = m.det();
        if det.abs() != BigInt::one() {
            return Err(Error::NotUnimodular { det: det.to_string() });
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        UnimodularMap {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    /// `[[1, pq], [0, 1]]`: from the cabling framing to the preferred
    /// framing on the boundary of a neighborhood of a `(P, q)` cable, where
    /// `pq = P·q`.
    pub fn shear(pq: impl Into<BigInt>) -> Self {
        UnimodularMap { a: BigInt::one(), b: pq.into(), c: BigInt::zero(), d: BigInt::one() }
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn inverse(&self) -> Self {
        let det = self.det();
        UnimodularMap {
            a: &det * &self.d,
            b: -(&det * &self.b),
            c: -(&det * &self.c),
            d: &det * &self.a,
        }
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &UnimodularMap) -> Self {
        UnimodularMap {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.d,
            c: &self.c * &other.a + &self.d * &other.c,
            d: &self.c * &other.b + &self.d * &other.d,
        }
    }

    fn apply_raw(&self, lon: &BigInt, mer: &BigInt) -> (BigInt, BigInt) {
        let mer2 = &self.a * mer + &self.b * lon;
        let lon2 = &self.c * mer + &self.d * lon;
        (lon2, mer2)
    }

    pub fn apply_slope(&self, s: &Slope) -> Slope {
        let (lon, mer) = self.apply_raw(&s.lon, &s.mer);
        // A unimodular image of a primitive vector is primitive.
        let (lon, mer) = normalize_sign(lon, mer);
        Slope { lon, mer }
    }

    /// Multiplicity is preserved.
    pub fn apply_unreduced(&self, s: &UnreducedSlope) -> UnreducedSlope {
        let (lon, mer) = self.apply_raw(&s.lon, &s.mer);
        let (lon, mer) = normalize_sign(lon, mer);
        UnreducedSlope { lon, mer }
    }
}

/// `|λ₁μ₂ − λ₂μ₁|`
pub fn geometric_intersection(s1: &Slope, s2: &Slope) -> BigInt {
    (&s1.lon * &s2.mer - &s2.lon * &s1.mer).abs()
}

pub fn farey_adjacent(s1: &Slope, s2: &Slope) -> bool {
    geometric_intersection(s1, s2).is_one()
}

/// Componentwise sum of the canonical representatives of two Farey
/// neighbours.
pub fn farey_mediant(s1: &Slope, s2: &Slope) -> Result<Slope> {
    if !farey_adjacent(s1, s2) {
        return Err(Error::Domain(format!("{s1} and {s2} are not Farey neighbours")));
    }
    let (lon, mer) = normalize_sign(&s1.lon + &s2.lon, &s1.mer + &s2.mer);
    Ok(Slope { lon, mer })
}

/// A pair `(p′, q′)` with `p·q′ − p′·q = 1`.
///
/// Normalized so that `0 ≤ q′ < q` when `q > 1`; for `q = 1` the result is
/// `(p − 1, 1)`.
pub fn bezout_complement(p: &BigInt, q: &BigInt) -> Result<(BigInt, BigInt)> {
    if q < &BigInt::one() {
        return Err(Error::Domain(format!("bezout_complement needs q ≥ 1, got {q}")));
    }
    if !p.gcd(q).is_one() {
        return Err(Error::Domain(format!("({p}, {q}) is not a coprime pair")));
    }
    if q.is_one() {
        return Ok((p - 1, BigInt::one()));
    }
    let eg = p.extended_gcd(q);
    // eg.x · p ≡ gcd (mod q), and gcd = ±1 here.
    let inv = if eg.gcd.is_negative() { -eg.x } else { eg.x };
    let q_prime = inv.mod_floor(q);
    let num = p * &q_prime - 1u32;
    debug_assert!(num.is_multiple_of(q));
    Ok((num / q, q_prime))
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else if self.lon.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.lon, self.mer)
        }
    }
}

impl fmt::Display for UnreducedSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.lon, self.mer)
    }
}

fn parse_pair(s: &str) -> Result<(BigInt, BigInt)> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let int = |t: &str| {
        t.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad integer {t:?} in slope {s:?}")))
    };
    match s.as_str() {
        "inf" | "∞" => Ok((BigInt::one(), BigInt::zero())),
        _ => match s.split_once('/') {
            Some((lon, mer)) => Ok((int(lon)?, int(mer)?)),
            None => Ok((int(&s)?, BigInt::one())),
        },
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (lon, mer) = parse_pair(s)?;
        Slope::new(lon, mer)
    }
}

impl FromStr for UnreducedSlope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (lon, mer) = parse_pair(s)?;
        UnreducedSlope::new(lon, mer)
    }
}

impl From<Slope> for String {
    fn from(s: Slope) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for Slope {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<UnreducedSlope> for String {
    fn from(s: UnreducedSlope) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for UnreducedSlope {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}
