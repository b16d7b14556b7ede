//! Candidate non-thickenable solid tori `N_r^k`.
//!
//! `N_r^k` has intersection boundary slope `−(k+1)/(A_r·k + B_r)` in the
//! cabling framing and `2·gcd(k+1, A_r·k + B_r)` dividing curves. This
//! module catalogs them, computes the existence thresholds `C_r`, and
//! replays the edge-rounding computation that produces the slopes at level
//! `r+1` from those at level `r`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{self, AbPair, CaseKind};
use crate::knot::{Frame, IteratedTorusKnot};
use crate::serde_int;
use crate::slope::{bezout_complement, Slope, UnimodularMap, UnreducedSlope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TorusStatus {
    /// `k ≥ C_r`: exists and fails to thicken.
    Yes,
    /// `k = 0`: a standard neighborhood of a tb̄ representative.
    StandardNeighborhood,
    /// `0 < k < C_r`: no verdict.
    BelowThreshold,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusClass {
    pub r: usize,
    pub k: u64,
    pub slope_cprime: UnreducedSlope,
    pub slope_c: UnreducedSlope,
    #[serde(with = "serde_int")]
    pub n: BigInt,
    #[serde(with = "serde_int")]
    pub dividing_curves: BigInt,
    pub status: TorusStatus,
}

impl TorusClass {
    pub const TSV_HEADER: &'static str = "r\tk\tslope_cprime\tslope_c\tn\tdividing_curves\tstatus";

    pub fn status_label(&self) -> &'static str {
        match self.status {
            TorusStatus::Yes => "nonthickenable",
            TorusStatus::StandardNeighborhood => "standard_neighborhood",
            TorusStatus::BelowThreshold => "below_threshold",
        }
    }
}

fn ab_at(k: &IteratedTorusKnot, i: usize) -> Result<AbPair> {
    if i == 0 || i > k.len() {
        return Err(Error::IndexOutOfRange { index: i, len: k.len() });
    }
    Ok(invariants::compute_ab_recursive(k).swap_remove(i - 1))
}

fn require_positive(k: &IteratedTorusKnot, what: &str) -> Result<()> {
    if k.all_positive() {
        Ok(())
    } else {
        Err(Error::positive_only(what))
    }
}

/// `N_i^k` for the prefix `K_i`.
pub fn torus_class(knot: &IteratedTorusKnot, i: usize, k: u64) -> Result<TorusClass> {
    require_positive(knot, "the solid torus catalog")?;
    let ab = ab_at(knot, i)?;
    let c_i = thresholds(knot)?.entries[i - 1].c.clone();
    Ok(build_class(i, k, &ab, &c_i))
}

fn build_class(i: usize, k: u64, ab: &AbPair, c_i: &BigInt) -> TorusClass {
    let kb = BigInt::from(k);
    let slope_cprime = UnreducedSlope::new(-(&kb + 1u32), &ab.a * &kb + &ab.b)
        .expect("numerator -(k+1) is never zero");
    let slope_c = UnimodularMap::shear(ab.a.clone()).apply_unreduced(&slope_cprime);
    let n = slope_cprime.multiplicity();
    let status = if k == 0 {
        TorusStatus::StandardNeighborhood
    } else if &kb >= c_i {
        TorusStatus::Yes
    } else {
        TorusStatus::BelowThreshold
    };
    TorusClass { r: i, k, slope_cprime, slope_c, dividing_curves: &n * 2, n, status }
}

/// Rows `k = 0..=k_max` for prefix `i`.
pub fn catalog(knot: &IteratedTorusKnot, i: usize, k_max: u64) -> Result<Vec<TorusClass>> {
    require_positive(knot, "the solid torus catalog")?;
    let ab = ab_at(knot, i)?;
    let c_i = thresholds(knot)?.entries[i - 1].c.clone();
    Ok((0..=k_max).map(|k| build_class(i, k, &ab, &c_i)).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ThresholdRule {
    TorusKnotBase,
    CaseI,
    CaseII,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdEntry {
    #[serde(with = "serde_int")]
    pub c: BigInt,
    pub rule: ThresholdRule,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdTable {
    pub entries: Vec<ThresholdEntry>,
}

/// `C_1 = 0`; for `i ≥ 2`, `C_i` is the least `k′ ≥ 1` with
/// `k′·q_i ≥ C_{i-1}`, and in Case II additionally
/// `q_i(A_{i-1}k + B_{i-1}) + p_i(k+1) > 0` at `k = k′·q_i`.
///
/// The Case II condition simplifies to `k·P_i + B_i > 0`.
pub fn thresholds(knot: &IteratedTorusKnot) -> Result<ThresholdTable> {
    require_positive(knot, "the threshold recursion")?;
    let widths = invariants::width_tb_recursion(knot)?;
    let ab = invariants::compute_ab_recursive(knot);
    let pairs = knot.pairs_c();
    let mut entries = vec![ThresholdEntry { c: BigInt::zero(), rule: ThresholdRule::TorusKnotBase }];
    for i in 1..pairs.len() {
        let q = &pairs[i].q;
        let prev = &entries[i - 1].c;
        let mut least = Integer::div_ceil(prev, q).max(BigInt::one());
        let rule = match widths[i].case {
            CaseKind::CaseI => ThresholdRule::CaseI,
            CaseKind::CaseII => {
                // k′·q·P + B > 0  ⟺  k′ > −B/(q·P)
                let bound = Integer::div_floor(&(-&ab[i].b), &(q * &pairs[i].first)) + 1;
                least = least.max(bound);
                ThresholdRule::CaseII
            }
            CaseKind::Base => unreachable!("only the first prefix is a base case"),
        };
        entries.push(ThresholdEntry { c: least, rule });
    }
    Ok(ThresholdTable { entries })
}

/// Intermediate values of the edge-rounding computation for `N_{r+1}^{k′}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRounding {
    /// Level `r` of the base knot.
    pub r: usize,
    pub kk: u64,
    pub k_prime: u64,
    /// `N(L_r)` has slope `−1/m` in the cabling framing.
    #[serde(with = "serde_int")]
    pub m: BigInt,
    /// Both sides of the intersection balance `p + m·q = p·k + p + q(A_r k + B_r)`.
    #[serde(with = "serde_int")]
    pub balance_lhs: BigInt,
    #[serde(with = "serde_int")]
    pub balance_rhs: BigInt,
    #[serde(with = "serde_int")]
    pub bezout_p: BigInt,
    #[serde(with = "serde_int")]
    pub bezout_q: BigInt,
    /// Slope of `∂N_r^k` in the framing sending the cable to `(0,1)`, over
    /// the common denominator `A_{r+1}k′ + B_{r+1}`.
    pub slope_nrk_cpp: UnreducedSlope,
    /// Slope of `∂N(L_r)` in the same framing and denominator.
    pub slope_nlr_cpp: UnreducedSlope,
    /// Intersection boundary slope of the edge-rounded torus, cabling framing.
    pub result_cprime: UnreducedSlope,
}

impl EdgeRounding {
    pub fn slope_nrk_reduced(&self) -> Slope {
        self.slope_nrk_cpp.reduce().0
    }

    pub fn slope_nlr_reduced(&self) -> Slope {
        self.slope_nlr_cpp.reduce().0
    }
}

/// Edge-rounding for the last cabling of `knot` (length `r+1 ≥ 2`) at level
/// `k = kk`, using the normalized Bézout pair.
pub fn edge_rounding_slope(knot: &IteratedTorusKnot, kk: u64) -> Result<EdgeRounding> {
    let pairs = knot.pairs_in(Frame::Cprime);
    let last = pairs
        .last()
        .ok_or_else(|| Error::Domain("empty knot".into()))?;
    let (bp, bq) = bezout_complement(&last.first, &last.q)?;
    edge_rounding_with_bezout(knot, kk, (bp, bq))
}

/// As [`edge_rounding_slope`] with an explicit `(p′, q′)` satisfying
/// `p·q′ − p′·q = 1`.
pub fn edge_rounding_with_bezout(
    knot: &IteratedTorusKnot,
    kk: u64,
    bezout: (BigInt, BigInt),
) -> Result<EdgeRounding> {
    if knot.len() < 2 {
        return Err(Error::Domain("edge-rounding needs a knot with at least two cablings".into()));
    }
    require_positive(knot, "edge-rounding")?;
    let r = knot.len() - 1;
    let cprime = knot.pairs_in(Frame::Cprime);
    let (p, q) = (&cprime[r].first, &cprime[r].q);
    let cap_p = &knot.pairs_c()[r].first;
    let (bp, bq) = bezout;
    if p * &bq - &bp * q != BigInt::one() {
        return Err(Error::Domain(format!("({bp}, {bq}) is not a Bézout complement of ({p}, {q})")));
    }

    let kkb = BigInt::from(kk);
    if kk == 0 || !kkb.is_multiple_of(q) {
        return Err(Error::Domain(format!("k = {kk} is not a positive multiple of q = {q}")));
    }
    let k_prime = &kkb / q;

    let abs = invariants::compute_ab_recursive(knot);
    let (base, next) = (&abs[r - 1], &abs[r]);
    let widths = invariants::width_tb_recursion(knot)?;
    if widths[r].case == CaseKind::CaseII && !(&kkb * cap_p + &next.b).is_positive() {
        return Err(Error::NotApplicable(format!(
            "cable slope {q}/{p} is not below −({kk}+1)/(A_r·{kk} + B_r)"
        )));
    }

    let m = p * &k_prime + &base.a * &kkb + &base.b;
    let balance_lhs = p + &m * q;
    let balance_rhs = p * &kkb + p + q * (&base.a * &kkb + &base.b);
    let denom = &next.a * &k_prime + &next.b;
    if !m.is_positive() || !balance_lhs.is_positive() || !denom.is_positive() {
        return Err(Error::NotApplicable(format!(
            "m = {m}, p + m·q = {balance_lhs}, A_(r+1)k′ + B_(r+1) = {denom} must all be positive"
        )));
    }
    if balance_lhs != balance_rhs {
        return Err(Error::InternalInvariant(format!(
            "intersection balance {balance_lhs} ≠ {balance_rhs}"
        )));
    }

    // ((p,q),(p′,q′)) ↦ ((0,1),(−1,0))
    let to_cpp = UnimodularMap::new(q.clone(), -p, bq.clone(), -&bp)?;
    let nrk = UnreducedSlope::new(-(&kkb + 1u32), &base.a * &kkb + &base.b)?;
    let nlr = UnreducedSlope::new(BigInt::from(-1), m.clone())?;
    let nrk_cpp = to_cpp.apply_unreduced(&nrk);
    let nlr_cpp = to_cpp.apply_unreduced(&nlr);
    if *nrk_cpp.mer() != denom || *nlr_cpp.mer() != denom {
        return Err(Error::InternalInvariant(format!(
            "C'' denominators {} and {} differ from A_(r+1)k′ + B_(r+1) = {denom}",
            nrk_cpp.mer(),
            nlr_cpp.mer()
        )));
    }
    let result_cprime = UnreducedSlope::new(nrk_cpp.lon() - nlr_cpp.lon() - 1, denom)?;

    let to_u64 = |v: &BigInt| u64::try_from(v).expect("k′ ≤ kk fits");
    Ok(EdgeRounding {
        r,
        kk,
        k_prime: to_u64(&k_prime),
        m,
        balance_lhs,
        balance_rhs,
        bezout_p: bp,
        bezout_q: bq,
        slope_nrk_cpp: nrk_cpp,
        slope_nlr_cpp: nlr_cpp,
        result_cprime,
    })
}

/// `−(k+1)/(A_i k + B_i)` for `k = k_min..=k_max`, checked strictly
/// increasing and below `−1/A_i`.
pub fn slope_sequence_range(
    knot: &IteratedTorusKnot,
    i: usize,
    k_min: u64,
    k_max: u64,
) -> Result<Vec<Slope>> {
    require_positive(knot, "the slope sequence")?;
    let ab = ab_at(knot, i)?;
    let limit = Slope::new(-1, ab.a.clone())?;
    let mut out: Vec<Slope> = Vec::new();
    for k in k_min..=k_max {
        let kb = BigInt::from(k);
        let denom = &ab.a * &kb + &ab.b;
        if !denom.is_positive() {
            return Err(Error::Domain(format!("A_{i}·{k} + B_{i} = {denom} is not positive")));
        }
        let s = Slope::new(-(kb + 1u32), denom)?;
        let increasing = out.last().is_none_or(|prev| prev < &s);
        if !increasing || s >= limit {
            return Err(Error::InternalInvariant(format!("slope sequence not monotone at k = {k}")));
        }
        out.push(s);
    }
    Ok(out)
}

pub fn slope_sequence(knot: &IteratedTorusKnot, i: usize, k_max: u64) -> Result<Vec<Slope>> {
    slope_sequence_range(knot, i, 1, k_max)
}

/// Least `k ≥ 1` with `A_i k + B_i > 0`.
pub fn first_positive_denominator(knot: &IteratedTorusKnot, i: usize) -> Result<u64> {
    let ab = ab_at(knot, i)?;
    if !ab.a.is_positive() {
        return Err(Error::positive_only("the slope sequence"));
    }
    let k = (Integer::div_floor(&(-&ab.b), &ab.a) + 1u32).max(BigInt::one());
    u64::try_from(&k).map_err(|_| Error::Domain(format!("first admissible k = {k} exceeds u64")))
}
