//! The quantities `A_r`, `B_r`, Euler characteristic, the uniform thickness
//! classifier and the maximal Thurston–Bennequin / contact width recursion.
//!
//! Everything past `A`/`B` and the classifier is only defined for knots
//! whose cabling coefficients are all positive in the preferred framing;
//! outside that regime the functions return
//! [`Error::UnsupportedRegime`](crate::Error::UnsupportedRegime).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knot::{Frame, IteratedTorusKnot};
use crate::serde_int;
use crate::solid_tori;

/// `(A_i, B_i)` for one prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbPair {
    pub a: BigInt,
    pub b: BigInt,
}

/// `A_i = q_i²·A_{i-1} + p_i·q_i`, `B_i = q_i·B_{i-1} + p_i`, seeded with
/// `A_0 = 0`, `B_0 = 1`.
pub fn compute_ab_recursive(k: &IteratedTorusKnot) -> Vec<AbPair> {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    k.pairs_in(Frame::Cprime)
        .into_iter()
        .map(|pair| {
            a = &pair.q * &pair.q * &a + &pair.first * &pair.q;
            b = &pair.q * &b + &pair.first;
            AbPair { a: a.clone(), b: b.clone() }
        })
        .collect()
}

/// Direct summation of the defining sums for every prefix.
pub fn compute_ab_closed(k: &IteratedTorusKnot) -> Vec<AbPair> {
    let pairs = k.pairs_in(Frame::Cprime);
    (1..=pairs.len())
        .map(|i| {
            let prefix = &pairs[..i];
            // tail[α] = q_α·q_{α+1}···q_i, with tail[i] = 1
            let mut tail = vec![BigInt::one(); i + 1];
            for alpha in (0..i).rev() {
                tail[alpha] = &tail[alpha + 1] * &prefix[alpha].q;
            }
            let mut a = BigInt::zero();
            let mut b = tail[0].clone();
            for (alpha, pair) in prefix.iter().enumerate() {
                a += &pair.first * &tail[alpha + 1] * &tail[alpha];
                b += &pair.first * &tail[alpha + 1];
            }
            AbPair { a, b }
        })
        .collect()
}

fn require_positive(k: &IteratedTorusKnot, what: &str) -> Result<()> {
    if k.all_positive() {
        Ok(())
    } else {
        Err(Error::positive_only(what))
    }
}

/// `χ(K_i)` for every prefix via `χ_i = q_i·χ_{i-1} − P_i·q_i + P_i`.
pub fn euler_characteristics(k: &IteratedTorusKnot) -> Result<Vec<BigInt>> {
    require_positive(k, "the Euler characteristic recursion")?;
    let pairs = k.pairs_c();
    let base = &pairs[0];
    let mut chi = -(&base.first * &base.q - &base.first - &base.q);
    let mut out = vec![chi.clone()];
    for pair in &pairs[1..] {
        chi = &pair.q * &chi - &pair.first * &pair.q + &pair.first;
        out.push(chi.clone());
    }
    for (i, (chi, ab)) in out.iter().zip(compute_ab_recursive(k)).enumerate() {
        if *chi != -(&ab.a - &ab.b) {
            return Err(Error::InternalInvariant(format!(
                "χ(K_{}) = {chi} but A − B = {}",
                i + 1,
                &ab.a - &ab.b
            )));
        }
    }
    Ok(out)
}

pub fn euler_characteristic(k: &IteratedTorusKnot) -> Result<BigInt> {
    Ok(euler_characteristics(k)?.pop().expect("knots are nonempty"))
}

pub fn genus(k: &IteratedTorusKnot) -> Result<BigInt> {
    Ok((BigInt::one() - euler_characteristic(k)?) / 2)
}

/// True iff every `P_i > 0`, i.e. the knot fails the uniform thickness
/// property.
pub fn fails_utp(k: &IteratedTorusKnot) -> bool {
    k.all_positive()
}

/// Whether the open book of the fibered knot supports the standard tight
/// structure on the 3-sphere. Same truth value as [`fails_utp`].
pub fn supports_standard_structure(k: &IteratedTorusKnot) -> bool {
    fails_utp(k)
}

/// `−χ(K_r) = A_r − B_r`.
pub fn max_self_linking(k: &IteratedTorusKnot) -> Result<BigInt> {
    Ok(-euler_characteristic(k)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseKind {
    /// Positive torus knot.
    Base,
    /// `P_i/q_i > w(K_{i-1})`
    CaseI,
    /// `0 < P_i/q_i < w(K_{i-1})`
    CaseII,
}

/// Maximal Thurston–Bennequin number, contact width and maximal twisting of
/// one prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthStep {
    pub tbbar: BigInt,
    pub width: BigInt,
    pub tbar: BigInt,
    pub case: CaseKind,
}

pub fn width_tb_recursion(k: &IteratedTorusKnot) -> Result<Vec<WidthStep>> {
    require_positive(k, "the tb/width recursion")?;
    let ab = compute_ab_recursive(k);
    let pairs = k.pairs_c();
    let mut out: Vec<WidthStep> = Vec::with_capacity(pairs.len());
    for (i, (pair, ab)) in pairs.iter().zip(&ab).enumerate() {
        let (tbbar, case) = match out.last() {
            None => (&ab.a - &ab.b, CaseKind::Base),
            Some(prev) => {
                // P/q against w as P against q·w
                let qw = &pair.q * &prev.width;
                if pair.first > qw {
                    (&ab.a - (&pair.first - &qw), CaseKind::CaseI)
                } else if pair.first < qw {
                    (ab.a.clone(), CaseKind::CaseII)
                } else {
                    return Err(Error::InternalInvariant(format!(
                        "P_{0}/q_{0} equals w(K_{1})",
                        i + 1,
                        i
                    )));
                }
            }
        };
        let tbar = &tbbar - &ab.a;
        if !tbbar.is_positive() || tbbar > ab.a {
            return Err(Error::InternalInvariant(format!(
                "tb̄(K_{}) = {tbbar} outside (0, A = {}]",
                i + 1,
                ab.a
            )));
        }
        out.push(WidthStep { width: tbbar.clone(), tbbar, tbar, case });
    }
    Ok(out)
}

/// One row of an [`InvariantTable`].
#[allow(non_snake_case)]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRow {
    pub i: usize,
    #[serde(with = "serde_int")]
    pub A: BigInt,
    #[serde(with = "serde_int")]
    pub B: BigInt,
    #[serde(with = "serde_int")]
    pub P: BigInt,
    #[serde(with = "serde_int")]
    pub p: BigInt,
    #[serde(with = "serde_int")]
    pub q: BigInt,
    #[serde(with = "serde_int::opt")]
    pub chi: Option<BigInt>,
    #[serde(with = "serde_int::opt")]
    pub genus: Option<BigInt>,
    #[serde(with = "serde_int::opt")]
    pub tbbar: Option<BigInt>,
    #[serde(with = "serde_int::opt")]
    pub width: Option<BigInt>,
    #[serde(with = "serde_int::opt")]
    pub tbar: Option<BigInt>,
    #[serde(with = "serde_int::opt")]
    pub C: Option<BigInt>,
    pub case: Option<CaseKind>,
}

/// Per-prefix invariants. Positive-only columns are filled for every prefix
/// that lies in the all-positive regime and left empty otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantTable {
    pub rows: Vec<InvariantRow>,
}

pub fn invariant_table(k: &IteratedTorusKnot) -> InvariantTable {
    let ab = compute_ab_recursive(k);
    let pc = k.pairs_in(Frame::C);
    let pp = k.pairs_in(Frame::Cprime);
    let mut rows: Vec<InvariantRow> = (0..k.len())
        .map(|i| InvariantRow {
            i: i + 1,
            A: ab[i].a.clone(),
            B: ab[i].b.clone(),
            P: pc[i].first.clone(),
            p: pp[i].first.clone(),
            q: pc[i].q.clone(),
            chi: None,
            genus: None,
            tbbar: None,
            width: None,
            tbar: None,
            C: None,
            case: None,
        })
        .collect();

    let positive_len = pc.iter().take_while(|p| p.first.is_positive()).count();
    if positive_len == 0 {
        return InvariantTable { rows };
    }
    let head = k.prefix(positive_len).expect("prefix length is in range");
    // The head is all-positive, so these cannot hit the regime check.
    let chis = euler_characteristics(&head).expect("positive regime");
    let widths = width_tb_recursion(&head).expect("positive regime");
    let thresholds = solid_tori::thresholds(&head).expect("positive regime");
    for (i, row) in rows.iter_mut().take(positive_len).enumerate() {
        row.genus = Some((BigInt::one() - &chis[i]) / 2);
        row.chi = Some(chis[i].clone());
        row.tbbar = Some(widths[i].tbbar.clone());
        row.width = Some(widths[i].width.clone());
        row.tbar = Some(widths[i].tbar.clone());
        row.case = Some(widths[i].case);
        row.C = Some(thresholds.entries[i].c.clone());
    }
    InvariantTable { rows }
}
