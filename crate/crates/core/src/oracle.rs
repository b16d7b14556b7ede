//! Brute-force verifiers.
//!
//! Every oracle here recomputes its answer along a separate path: its own
//! Euclid loop, its own framing conversion written as an explicit matrix
//! product, literal term-by-term sums and rational-number comparisons. None
//! of them calls into the module it checks. [`run_all`] pairs each oracle
//! with the library routine it guards and reports exact agreement.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knot::{CablingPair, Frame, IteratedTorusKnot};
use crate::{invariants, legendrian, solid_tori};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Pass,
    Fail,
}

/// Outcome of one check. On failure `inputs`, `expected` and `actual`
/// describe the first disagreeing case; on success they describe the last
/// case checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub check: String,
    pub inputs: String,
    pub cases: u64,
    pub expected: String,
    pub actual: String,
    pub verdict: Verdict,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Accumulates cases for one named check and stops at the first mismatch.
struct Tally {
    check: &'static str,
    cases: u64,
    last: Option<(String, String, String)>,
    failed: bool,
}

impl Tally {
    fn new(check: &'static str) -> Self {
        Tally { check, cases: 0, last: None, failed: false }
    }

    /// Returns false once a mismatch has been recorded.
    fn case<T: fmt::Display + PartialEq>(&mut self, inputs: impl FnOnce() -> String, expected: T, actual: T) -> bool {
        if self.failed {
            return false;
        }
        self.cases += 1;
        let ok = expected == actual;
        self.last = Some((inputs(), expected.to_string(), actual.to_string()));
        self.failed = !ok;
        ok
    }

    fn finish(self, range: &str) -> OracleReport {
        let (inputs, expected, actual) = self
            .last
            .unwrap_or_else(|| (String::new(), "no cases".into(), "no cases".into()));
        let verdict = if !self.failed && expected == actual { Verdict::Pass } else { Verdict::Fail };
        OracleReport {
            check: self.check.into(),
            inputs: if self.failed { inputs } else { format!("{range}; last case {inputs}") },
            cases: self.cases,
            expected,
            actual,
            verdict,
        }
    }
}

fn euclid(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut x, mut y) = (a.abs(), b.abs());
    while !y.is_zero() {
        let r = &x % &y;
        x = y;
        y = r;
    }
    x
}

/// Converts raw preferred-framing pairs to cabling-framing pairs with the
/// inverse shear `[[1, −A_{i-1}], [0, 1]]` acting on `(P_i, q_i)`, where
/// `A_{i-1}` comes from the literal sum.
fn c_to_cprime_by_matrix(raw_c: &[(BigInt, BigInt)]) -> Vec<(BigInt, BigInt)> {
    let mut out: Vec<(BigInt, BigInt)> = Vec::with_capacity(raw_c.len());
    for (cap, q) in raw_c {
        let (a_prev, _) = sums(&out);
        let m = [[BigInt::one(), -a_prev], [BigInt::zero(), BigInt::one()]];
        let mer = &m[0][0] * cap + &m[0][1] * q;
        let lon = &m[1][0] * cap + &m[1][1] * q;
        out.push((mer, lon));
    }
    out
}

/// Forward shear `[[1, A_{i-1}], [0, 1]]`.
fn cprime_to_c_by_matrix(raw_cp: &[(BigInt, BigInt)]) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::with_capacity(raw_cp.len());
    for i in 0..raw_cp.len() {
        let (a_prev, _) = sums(&raw_cp[..i]);
        let (p, q) = &raw_cp[i];
        let m = [[BigInt::one(), a_prev], [BigInt::zero(), BigInt::one()]];
        out.push((&m[0][0] * p + &m[0][1] * q, &m[1][0] * p + &m[1][1] * q));
    }
    out
}

/// The defining sums, one term at a time, with empty products equal to 1.
/// Zero-length input gives `(A_0, B_0) = (0, 1)`.
fn sums(cp: &[(BigInt, BigInt)]) -> (BigInt, BigInt) {
    let r = cp.len();
    let prod = |from: usize, to: usize| -> BigInt {
        // ∏_{β=from}^{to} q_β, 1-based, empty when from > to
        let mut acc = BigInt::one();
        let mut beta = from;
        while beta <= to {
            acc *= &cp[beta - 1].1;
            beta += 1;
        }
        acc
    };
    let mut a = BigInt::zero();
    let mut b = BigInt::zero();
    for alpha in 1..=r {
        let p = &cp[alpha - 1].0;
        a += p * prod(alpha + 1, r) * prod(alpha, r);
        b += p * prod(alpha + 1, r);
    }
    b += prod(1, r);
    (a, b)
}

fn to_big(raw: &[(i64, i64)]) -> Vec<(BigInt, BigInt)> {
    raw.iter().map(|&(p, q)| (BigInt::from(p), BigInt::from(q))).collect()
}

fn raw_of(k: &IteratedTorusKnot) -> Vec<(BigInt, BigInt)> {
    k.pairs_c().iter().map(|p| (p.first.clone(), p.q.clone())).collect()
}

/// `(A_r, B_r)` by literal summation of a raw tuple given in `frame`.
pub fn ab_by_summation(frame: Frame, raw: &[(BigInt, BigInt)]) -> (BigInt, BigInt) {
    match frame {
        Frame::Cprime => sums(raw),
        Frame::C => sums(&c_to_cprime_by_matrix(raw)),
    }
}

/// [`ab_by_summation`] for the preferred-framing data stored in a knot.
pub fn ab_of_knot(k: &IteratedTorusKnot) -> (BigInt, BigInt) {
    ab_by_summation(Frame::C, &raw_of(k))
}

/// Closed-form Euler characteristic of an all-positive knot, from the
/// cabling formula `χ = ∏ p_i − Σ q_i(p_i − 1) ∏_{j>i} p_j` written in the
/// convention where the first coefficient of a torus knot cable is the
/// winding number. Translating to `(P_i, q_i)` swaps the roles for `i > 1`
/// (the torus knot itself is symmetric):
///
/// ```text
/// χ = P_1·∏_{j≥2} q_j − q_1(P_1 − 1)·∏_{j≥2} q_j − Σ_{i≥2} P_i(q_i − 1)·∏_{j>i} q_j
/// ```
///
/// For `((2,3),(7,2))`: `2·2 − 3·1·2 − 7·1 = −9`.
pub fn chi_by_bw_formula(raw_c: &[(BigInt, BigInt)]) -> Result<BigInt> {
    if raw_c.is_empty() || raw_c.iter().any(|(cap, _)| !cap.is_positive()) {
        return Err(Error::positive_only("the closed Euler characteristic formula"));
    }
    // (winding, other) in the cabling-formula convention
    let swapped: Vec<(BigInt, BigInt)> = raw_c
        .iter()
        .enumerate()
        .map(|(i, (cap, q))| if i == 0 { (cap.clone(), q.clone()) } else { (q.clone(), cap.clone()) })
        .collect();
    let tail = |from: usize| -> BigInt {
        swapped[from..].iter().fold(BigInt::one(), |acc, (p, _)| acc * p)
    };
    let mut chi = tail(0);
    for (i, (p, q)) in swapped.iter().enumerate() {
        chi -= q * (p - 1) * tail(i + 1);
    }
    Ok(chi)
}

fn k_range_label(k_range: &std::ops::RangeInclusive<u64>) -> String {
    format!("k in {}..={}", k_range.start(), k_range.end())
}

/// `gcd(k+1, A k + B) = gcd(k+1, A − B)` for every `k` in range.
pub fn gcd_reduction_check(a: &BigInt, b: &BigInt, k_range: std::ops::RangeInclusive<u64>) -> OracleReport {
    let mut t = Tally::new("gcd_reduction");
    let label = format!("A={a}, B={b}, {}", k_range_label(&k_range));
    for k in k_range {
        let kb = BigInt::from(k);
        let direct = euclid(&(&kb + 1), &(a * &kb + b));
        let reduced = euclid(&(&kb + 1), &(a - b));
        if !t.case(|| format!("A={a}, B={b}, k={k}"), reduced, direct) {
            break;
        }
    }
    t.finish(&label)
}

/// Brute rational test of `−1/(A−1) < −(k+1)/(Ak+B) < −1/A` against the
/// criterion `k + 1 > A − B`. Needs `A > 1`.
pub fn interval_membership_check(
    a: &BigInt,
    b: &BigInt,
    k_range: std::ops::RangeInclusive<u64>,
) -> OracleReport {
    let mut t = Tally::new("interval_membership");
    let label = format!("A={a}, B={b}, {}", k_range_label(&k_range));
    for k in k_range {
        let brute = in_width_interval(a, b, k);
        let criterion = BigInt::from(k) + 1 > a - b;
        if !t.case(|| format!("A={a}, B={b}, k={k}"), brute, criterion) {
            break;
        }
    }
    t.finish(&label)
}

fn in_width_interval(a: &BigInt, b: &BigInt, k: u64) -> bool {
    let kb = BigInt::from(k);
    let denom = a * &kb + b;
    if denom.is_zero() || a <= &BigInt::one() {
        return false;
    }
    let s = BigRational::new(-(&kb + 1u32), denom);
    let lo = BigRational::new(-BigInt::one(), a - 1);
    let hi = BigRational::new(-BigInt::one(), a.clone());
    lo < s && s < hi
}

/// Library framing conversion against the explicit matrix conversion.
pub fn framing_roundtrip_check(tuples: &[Vec<(i64, i64)>]) -> OracleReport {
    let mut t = Tally::new("framing_roundtrip");
    for raw in tuples {
        let raw_b = to_big(raw);
        let Ok(k) = IteratedTorusKnot::validate(
            raw_b.iter().map(|(p, q)| CablingPair::new(p.clone(), q.clone())).collect(),
            Frame::C,
        ) else {
            continue;
        };
        let expected = show(&c_to_cprime_by_matrix(&raw_b));
        let lib_cp = k.to_frame(Frame::Cprime);
        let actual = show(&raw_pairs(&lib_cp.pairs()));
        if !t.case(|| format!("C:{}", show(&raw_b)), expected, actual) {
            break;
        }
        // and back
        let back = cprime_to_c_by_matrix(&c_to_cprime_by_matrix(&raw_b));
        let lib_back = lib_cp.to_frame(Frame::C);
        if !t.case(|| format!("round trip of C:{}", show(&raw_b)), show(&back), show(&raw_pairs(&lib_back.pairs()))) {
            break;
        }
    }
    t.finish(&format!("{} tuples", tuples.len()))
}

fn raw_pairs(pairs: &[CablingPair]) -> Vec<(BigInt, BigInt)> {
    pairs.iter().map(|p| (p.first.clone(), p.q.clone())).collect()
}

fn show(raw: &[(BigInt, BigInt)]) -> String {
    raw.iter().map(|(p, q)| format!("({p},{q})")).collect::<Vec<_>>().join(",")
}

/// Sign scan of the preferred-framing tuple obtained by the matrix
/// conversion of a raw cabling-framing tuple.
pub fn all_positive_by_sign_scan(frame: Frame, raw: &[(BigInt, BigInt)]) -> bool {
    let c = match frame {
        Frame::C => raw.to_vec(),
        Frame::Cprime => cprime_to_c_by_matrix(raw),
    };
    c.iter().all(|(cap, _)| cap.is_positive())
}

/// Random tuple generation for the oracles and the test suites.
pub mod gen {
    use super::*;

    fn coprime(p: i64, q: i64) -> bool {
        let (mut x, mut y) = (p.abs(), q.abs());
        while y != 0 {
            (x, y) = (y, x % y);
        }
        x == 1
    }

    /// A valid raw tuple of length `1..=max_r` with `2 ≤ q_i ≤ max_q`,
    /// `1 ≤ |first_i| ≤ max_p` (`|first_1| ≥ 2`). With `positive`, every
    /// first coefficient is positive, which for a preferred-framing tuple is
    /// the all-positive regime. Needs `max_p ≥ 2`, `max_q ≥ 2`.
    pub fn tuple<R: Rng>(rng: &mut R, max_r: usize, max_q: i64, max_p: i64, positive: bool) -> Vec<(i64, i64)> {
        let r = rng.gen_range(1..=max_r);
        let mut out = Vec::with_capacity(r);
        while out.len() < r {
            let q = rng.gen_range(2..=max_q);
            let lo = if out.is_empty() { 2 } else { 1 };
            let mag = rng.gen_range(lo..=max_p);
            let p = if positive || rng.gen_bool(0.5) { mag } else { -mag };
            if coprime(p, q) {
                out.push((p, q));
            }
        }
        out
    }

    /// Same as [`tuple`] with an exact length.
    pub fn tuple_of_len<R: Rng>(rng: &mut R, r: usize, max_q: i64, max_p: i64, positive: bool) -> Vec<(i64, i64)> {
        loop {
            let t = tuple(rng, r, max_q, max_p, positive);
            if t.len() == r {
                return t;
            }
        }
    }

    pub fn knot(frame: Frame, raw: &[(i64, i64)]) -> IteratedTorusKnot {
        IteratedTorusKnot::from_pairs(frame, raw).expect("generator only emits valid tuples")
    }
}

/// Ranges for [`run_all`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub max_r: usize,
    pub max_q: i64,
    pub max_p: i64,
    pub max_k: u64,
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_r: 4, max_q: 5, max_p: 9, max_k: 100, samples: 200, seed: 1 }
    }
}

impl fmt::Display for VerifyConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "r<={},q<={},p<={},k<={},n={},seed={}",
            self.max_r, self.max_q, self.max_p, self.max_k, self.samples, self.seed
        )
    }
}

impl FromStr for VerifyConfig {
    type Err = Error;

    /// Comma-separated `r<=5,q<=4,p<=9,k<=50,n=100,seed=7`; missing keys
    /// keep their defaults.
    fn from_str(s: &str) -> Result<Self> {
        let mut cfg = VerifyConfig::default();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (key, val) = item
                .split_once("<=")
                .or_else(|| item.split_once('='))
                .ok_or_else(|| Error::Parse(format!("bad range item {item:?}")))?;
            let bad = || Error::Parse(format!("bad value in range item {item:?}"));
            match key.trim() {
                "r" => cfg.max_r = val.trim().parse().map_err(|_| bad())?,
                "q" => cfg.max_q = val.trim().parse().map_err(|_| bad())?,
                "p" => cfg.max_p = val.trim().parse().map_err(|_| bad())?,
                "k" => cfg.max_k = val.trim().parse().map_err(|_| bad())?,
                "n" => cfg.samples = val.trim().parse().map_err(|_| bad())?,
                "seed" => cfg.seed = val.trim().parse().map_err(|_| bad())?,
                other => return Err(Error::Parse(format!("unknown range key {other:?}"))),
            }
        }
        if cfg.max_r == 0 || cfg.max_q < 2 || cfg.max_p < 2 {
            return Err(Error::Parse("ranges need r ≥ 1, q ≥ 2, p ≥ 2".into()));
        }
        Ok(cfg)
    }
}

/// Deliberate corruption of one library result, for harness self-tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Fault {
    /// Adds one to every recursive `A_r`.
    AbOffByOne,
    /// Flips the sign of every Euler characteristic.
    ChiSign,
}

impl FromStr for Fault {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ab-off-by-one" => Ok(Fault::AbOffByOne),
            "chi-sign" => Ok(Fault::ChiSign),
            other => Err(Error::Parse(format!("unknown fault {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub fault: Option<Fault>,
    pub reports: Vec<OracleReport>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(OracleReport::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &OracleReport> {
        self.reports.iter().filter(|r| !r.passed())
    }
}

/// Runs every oracle against the library over `cfg`.
pub fn run_all(cfg: &VerifyConfig, fault: Option<Fault>) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mixed: Vec<(Frame, Vec<(i64, i64)>)> = (0..cfg.samples)
        .map(|i| {
            let frame = if i % 2 == 0 { Frame::C } else { Frame::Cprime };
            (frame, gen::tuple(&mut rng, cfg.max_r, cfg.max_q, cfg.max_p, false))
        })
        .collect();
    let positive: Vec<Vec<(i64, i64)>> = (0..cfg.samples)
        .map(|_| gen::tuple(&mut rng, cfg.max_r, cfg.max_q, cfg.max_p, true))
        .collect();

    let mut reports = Vec::new();

    // A, B: recursion and closed form against literal summation
    let mut t = Tally::new("ab_summation");
    'outer: for (frame, raw) in &mixed {
        let k = gen::knot(*frame, raw);
        let raw_b = to_big(raw);
        let rec = invariants::compute_ab_recursive(&k);
        let closed = invariants::compute_ab_closed(&k);
        for i in 1..=raw.len() {
            let (a, b) = ab_by_summation(*frame, &raw_b[..i]);
            let mut rec_a = rec[i - 1].a.clone();
            if fault == Some(Fault::AbOffByOne) {
                rec_a += 1;
            }
            let input = || format!("{}:{} prefix {i}", tag(*frame), show(&raw_b));
            if !t.case(input, format!("{a},{b}"), format!("{rec_a},{}", rec[i - 1].b))
                || !t.case(input, format!("{a},{b}"), format!("{},{}", closed[i - 1].a, closed[i - 1].b))
            {
                break 'outer;
            }
        }
    }
    reports.push(t.finish(&format!("{} mixed-sign tuples", mixed.len())));

    // four recursion identities
    let mut t = Tally::new("recursion_identities");
    'outer: for (frame, raw) in &mixed {
        let k = gen::knot(*frame, raw);
        let ab = invariants::compute_ab_recursive(&k);
        let pc = k.pairs_in(Frame::C);
        let pp = k.pairs_in(Frame::Cprime);
        for i in 0..raw.len() {
            let (a_prev, b_prev) = if i == 0 {
                (BigInt::zero(), BigInt::one())
            } else {
                (ab[i - 1].a.clone(), ab[i - 1].b.clone())
            };
            let q = &pc[i].q;
            let lhs = [ab[i].a.clone(), ab[i].b.clone(), pc[i].first.clone(), ab[i].a.clone()];
            let rhs = [
                q * q * &a_prev + &pp[i].first * q,
                q * &b_prev + &pp[i].first,
                q * &a_prev + &pp[i].first,
                &pc[i].first * q,
            ];
            for (j, (l, r)) in lhs.iter().zip(&rhs).enumerate() {
                if !t.case(|| format!("{k} prefix {} identity {}", i + 1, j + 1), r, l) {
                    break 'outer;
                }
            }
        }
    }
    reports.push(t.finish(&format!("{} mixed-sign tuples", mixed.len())));

    // χ recursion against the closed cabling formula
    let mut t = Tally::new("chi_closed_formula");
    for raw in &positive {
        let k = gen::knot(Frame::C, raw);
        let expected = chi_by_bw_formula(&to_big(raw)).expect("positive tuple");
        let mut actual = match invariants::euler_characteristic(&k) {
            Ok(v) => v,
            Err(e) => {
                t.case(|| k.to_string(), expected.to_string(), e.to_string());
                break;
            }
        };
        if fault == Some(Fault::ChiSign) {
            actual = -actual;
        }
        if !t.case(|| k.to_string(), expected.to_string(), actual.to_string()) {
            break;
        }
    }
    reports.push(t.finish(&format!("{} all-positive tuples", positive.len())));

    // dividing-curve counts
    let mut t = Tally::new("dividing_curves");
    let mut gcd_reports = Vec::new();
    'outer: for raw in &positive {
        let k = gen::knot(Frame::C, raw);
        let (a, b) = ab_of_knot(&k);
        let report = gcd_reduction_check(&a, &b, 0..=cfg.max_k);
        if !report.passed() {
            gcd_reports.push(report);
            break;
        }
        let rows = match solid_tori::catalog(&k, k.len(), cfg.max_k) {
            Ok(rows) => rows,
            Err(e) => {
                t.case(|| k.to_string(), "catalog".to_string(), e.to_string());
                break;
            }
        };
        for row in rows {
            let kb = BigInt::from(row.k);
            let expected = euclid(&(&kb + 1), &(&a * &kb + &b));
            if !t.case(|| format!("{k} k={}", row.k), &expected * 2, row.dividing_curves.clone()) {
                break 'outer;
            }
        }
    }
    reports.push(t.finish(&format!("{} all-positive tuples, k<={}", positive.len(), cfg.max_k)));
    reports.extend(gcd_reports);

    // width interval and the enumerated cabling family
    let mut t = Tally::new("nonsimple_family");
    let mut interval_reports = Vec::new();
    'outer: for raw in &positive {
        let k = gen::knot(Frame::C, raw);
        let (a, b) = ab_of_knot(&k);
        let report = interval_membership_check(&a, &b, 1..=cfg.max_k);
        if !report.passed() {
            interval_reports.push(report);
            break;
        }
        let c_r = solid_tori::thresholds(&k).map(|t| t.entries.last().expect("nonempty").c.clone());
        let listed = legendrian::enumerate_nonsimple_cablings(&k, cfg.max_k);
        let (Ok(c_r), Ok(listed)) = (c_r, listed) else {
            t.case(|| k.to_string(), "ok", "library error");
            break;
        };
        let listed: Vec<u64> = listed.iter().map(|c| c.k).collect();
        let expected: Vec<u64> = (1..=cfg.max_k)
            .filter(|&kk| {
                let kb = BigInt::from(kk);
                in_width_interval(&a, &b, kk) && euclid(&(&kb + 1), &(&a * &kb + &b)).is_one() && kb >= c_r
            })
            .collect();
        if !t.case(|| k.to_string(), format!("{expected:?}"), format!("{listed:?}")) {
            break 'outer;
        }
    }
    reports.push(t.finish(&format!("{} all-positive tuples, k<={}", positive.len(), cfg.max_k)));
    reports.extend(interval_reports);

    let tuples: Vec<Vec<(i64, i64)>> = mixed.iter().map(|(_, raw)| raw.clone()).collect();
    reports.push(framing_roundtrip_check(&tuples));

    // uniform thickness classifier
    let mut t = Tally::new("utp_sign_scan");
    for (frame, raw) in &mixed {
        let k = gen::knot(*frame, raw);
        let expected = all_positive_by_sign_scan(*frame, &to_big(raw));
        if !t.case(|| k.to_string(), expected, invariants::fails_utp(&k)) {
            break;
        }
    }
    reports.push(t.finish(&format!("{} mixed-sign tuples", mixed.len())));

    // edge-rounding against the closed form at level r+1
    let mut t = Tally::new("edge_rounding_closed_form");
    'outer: for raw in positive.iter().filter(|raw| raw.len() >= 2) {
        let k = gen::knot(Frame::C, raw);
        let (a1, b1) = ab_of_knot(&k);
        let q = raw.last().expect("nonempty").1 as u64;
        for kk in (q..=cfg.max_k.max(q)).step_by(q as usize) {
            let Ok(e) = solid_tori::edge_rounding_slope(&k, kk) else {
                continue;
            };
            let kp = BigInt::from(kk / q);
            let expected = format!("{}/{}", -(&kp + 1u32), &a1 * &kp + &b1);
            if !t.case(|| format!("{k} k={kk}"), expected.clone(), e.result_cprime.to_string()) {
                break 'outer;
            }
            // other Bézout pair
            let p = &k.pairs_in(Frame::Cprime)[k.len() - 1].first;
            let alt = solid_tori::edge_rounding_with_bezout(
                &k,
                kk,
                (&e.bezout_p + p, &e.bezout_q + BigInt::from(q)),
            )
            .map(|e| e.result_cprime.to_string())
            .unwrap_or_else(|err| err.to_string());
            if !t.case(|| format!("{k} k={kk} shifted Bézout pair"), expected, alt) {
                break 'outer;
            }
        }
    }
    reports.push(t.finish(&format!("all-positive tuples with r>=2, k<={}", cfg.max_k)));

    VerifyReport { config: cfg.clone(), fault, reports }
}

fn tag(f: Frame) -> &'static str {
    match f {
        Frame::C => "C",
        Frame::Cprime => "C'",
    }
}

/// Smallest prime `≥ n`, by trial division. For test-sized inputs.
pub fn next_prime(n: u64) -> u64 {
    let is_prime = |m: u64| m >= 2 && (2..).take_while(|d| d * d <= m).all(|d| !m.is_multiple_of(d));
    (n..).find(|&m| is_prime(m)).expect("primes are unbounded")
}

/// `u64` view of a nonnegative integer, if it fits.
pub fn small(v: &BigInt) -> Option<u64> {
    v.to_u64()
}
