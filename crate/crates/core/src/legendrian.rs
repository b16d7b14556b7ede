//! Legendrian and transverse bookkeeping: stabilizations, push-offs,
//! ruling rotation numbers, a slice of the mountain range of an all-positive
//! iterated torus knot, and the family of transversally non-simple cables
//! with their witness pairs.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{self, AbPair};
use crate::knot::{CablingPair, Frame, IteratedTorusKnot};
use crate::serde_int;
use crate::solid_tori;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn unit(self) -> BigInt {
        match self {
            Sign::Plus => BigInt::one(),
            Sign::Minus => -BigInt::one(),
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A point `(tb, rot)` of a mountain range, with a provenance label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LegendrianClass {
    #[serde(with = "serde_int")]
    pub tb: BigInt,
    #[serde(with = "serde_int")]
    pub rot: BigInt,
    pub label: String,
}

impl LegendrianClass {
    pub fn new(tb: impl Into<BigInt>, rot: impl Into<BigInt>, label: impl Into<String>) -> Self {
        LegendrianClass { tb: tb.into(), rot: rot.into(), label: label.into() }
    }

    pub const TSV_HEADER: &'static str = "tb\trot\tlabel";
}

impl fmt::Display for LegendrianClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (tb={}, rot={})", self.label, self.tb, self.rot)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TransverseClass {
    #[serde(with = "serde_int")]
    pub sl: BigInt,
    pub label: String,
}

/// `S_±`: `tb − 1`, `rot ± 1`.
pub fn stabilize(l: &LegendrianClass, sign: Sign) -> LegendrianClass {
    LegendrianClass {
        tb: &l.tb - 1,
        rot: &l.rot + sign.unit(),
        label: format!("S{}({})", sign.symbol(), l.label),
    }
}

/// Inverse of [`stabilize`] on the classical invariants.
pub fn destabilize(l: &LegendrianClass, sign: Sign) -> LegendrianClass {
    LegendrianClass {
        tb: &l.tb + 1,
        rot: &l.rot - sign.unit(),
        label: format!("D{}({})", sign.symbol(), l.label),
    }
}

/// `sl(T_±(L)) = tb(L) ∓ rot(L)`
pub fn transverse_pushoff(l: &LegendrianClass, sign: Sign) -> TransverseClass {
    TransverseClass {
        sl: &l.tb - sign.unit() * &l.rot,
        label: format!("T{}({})", sign.symbol(), l.label),
    }
}

/// Rotation number of a `(P, q)` ruling: `P·r(∂D) + q·r(∂Σ)`.
pub fn ruling_rotation(
    cap_p: &BigInt,
    q: &BigInt,
    rot_meridian: &BigInt,
    rot_longitude: &BigInt,
) -> BigInt {
    cap_p * rot_meridian + q * rot_longitude
}

/// Every class obtained from `from` by `count` stabilizations of one sign,
/// `from` included.
pub fn stabilization_chain(from: &LegendrianClass, sign: Sign, count: u64) -> Vec<LegendrianClass> {
    let mut out = vec![from.clone()];
    for step in 1..=count {
        let prev = out.last().expect("nonempty");
        let mut next = stabilize(prev, sign);
        next.label = format!("S{}^{step}({})", sign.symbol(), from.label);
        out.push(next);
    }
    out
}

fn require_positive(k: &IteratedTorusKnot, what: &str) -> Result<()> {
    if k.all_positive() {
        Ok(())
    } else {
        Err(Error::positive_only(what))
    }
}

fn last_ab(k: &IteratedTorusKnot) -> AbPair {
    invariants::compute_ab_recursive(k).pop().expect("knots are nonempty")
}

/// The labeled points `L̃_r^± = (A_r − P_r, ±(P_r − B_r))` and
/// `L_r^± = (0, ±(A_r − B_r))`. For a torus knot only `L_1^±` are returned.
pub fn mountain_range_slice(k: &IteratedTorusKnot) -> Result<Vec<LegendrianClass>> {
    require_positive(k, "the mountain range slice")?;
    let abs = invariants::compute_ab_recursive(k);
    let r = k.len();
    let ab = &abs[r - 1];
    let width = &ab.a - &ab.b;
    let mut out = Vec::with_capacity(4);

    if r >= 2 {
        let prev = &abs[r - 2];
        let pair = &k.pairs_c()[r - 1];
        for sign in [Sign::Plus, Sign::Minus] {
            // ruling on a standard neighborhood of L_{r-1}^±: r(∂D) = 0,
            // r(∂Σ) = rot(L_{r-1}^±)
            let rot_prev = sign.unit() * (&prev.a - &prev.b);
            let rot = ruling_rotation(&pair.first, &pair.q, &BigInt::zero(), &rot_prev);
            if rot != sign.unit() * (&pair.first - &ab.b) {
                return Err(Error::InternalInvariant(format!(
                    "rot(L̃_{r}^{}) = {rot} differs from ±(P_r − B_r)",
                    sign.symbol()
                )));
            }
            let tilde = LegendrianClass {
                tb: &ab.a - &pair.first,
                rot,
                label: format!("L~_{r}^{}", sign.symbol()),
            };
            let opposite = match sign {
                Sign::Plus => Sign::Minus,
                Sign::Minus => Sign::Plus,
            };
            let sl = transverse_pushoff(&tilde, opposite).sl;
            if sl != width {
                return Err(Error::InternalInvariant(format!(
                    "push-off of {tilde} has sl {sl}, expected A_r − B_r = {width}"
                )));
            }
            out.push(tilde);
        }
    }
    for sign in [Sign::Plus, Sign::Minus] {
        out.push(LegendrianClass {
            tb: BigInt::zero(),
            rot: sign.unit() * &width,
            label: format!("L_{r}^{}", sign.symbol()),
        });
    }
    Ok(out)
}

/// Slice points together with the stabilization chains `L̃_r^± → L_r^±`
/// (or, for a torus knot, the destabilizations `L_1^± → tb = 1`).
pub fn mountain_range_slice_with_chains(k: &IteratedTorusKnot) -> Result<Vec<LegendrianClass>> {
    let slice = mountain_range_slice(k)?;
    let mut out = Vec::new();
    if k.len() >= 2 {
        for (tilde, sign) in slice[..2].iter().zip([Sign::Plus, Sign::Minus]) {
            let steps = u64::try_from(&tilde.tb).map_err(|_| {
                Error::Domain(format!("stabilization chain of length {} is too long", tilde.tb))
            })?;
            out.extend(stabilization_chain(tilde, sign, steps));
        }
    } else {
        for (l, sign) in slice.iter().zip([Sign::Plus, Sign::Minus]) {
            out.push(destabilize(l, sign));
            out.push(l.clone());
        }
    }
    Ok(out)
}

/// Rotation numbers the slice realizes at `tb = 1`.
fn slice_rotations_at_tb_one(k: &IteratedTorusKnot) -> Result<BTreeSet<BigInt>> {
    let slice = mountain_range_slice(k)?;
    let mut rots = BTreeSet::new();
    if k.len() >= 2 {
        for (tilde, sign) in slice[..2].iter().zip([Sign::Plus, Sign::Minus]) {
            // A_r − P_r = P_r(q_r − 1) ≥ 1, so the chain passes through tb = 1
            let steps = &tilde.tb - 1;
            rots.insert(&tilde.rot + sign.unit() * steps);
        }
    } else {
        // L_1^± destabilize
        for (l, sign) in slice.iter().zip([Sign::Plus, Sign::Minus]) {
            rots.insert(destabilize(l, sign).rot);
        }
    }
    Ok(rots)
}

/// A member of the family of transversally non-simple cables
/// `(−χ(K_r), k+1)` of an all-positive `K_r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonSimpleCabling {
    pub base: IteratedTorusKnot,
    pub k: u64,
    /// `(A_r − B_r, k+1)` in the preferred framing.
    pub cable_c: CablingPair,
    /// `(−(A_r k + B_r), k+1)` in the cabling framing.
    pub cable_cprime: CablingPair,
    #[serde(with = "serde_int")]
    pub tbbar: BigInt,
    /// `(+k(A_r − B_r), −k(A_r − B_r))`
    #[serde(with = "serde_int::pair")]
    pub rot_pair: (BigInt, BigInt),
    #[serde(with = "serde_int")]
    pub slbar: BigInt,
    #[serde(with = "serde_int")]
    pub chi_cable: BigInt,
}

impl NonSimpleCabling {
    pub const TSV_HEADER: &'static str = "k\tcable_c\tcable_cprime\ttbbar\trot\tslbar\tchi_cable";

    /// The cable knot `K̂_{r+1}`.
    pub fn cable_knot(&self) -> IteratedTorusKnot {
        self.base
            .to_frame(Frame::C)
            .cable(self.cable_c.clone())
            .expect("enumerated cables are coprime with q = k+1 ≥ 2")
    }
}

/// Every `k ≤ k_max` with `k + 1 > A_r − B_r`, `gcd(k + 1, A_r − B_r) = 1`
/// and `k ≥ max(1, C_r)`.
pub fn enumerate_nonsimple_cablings(
    k: &IteratedTorusKnot,
    k_max: u64,
) -> Result<Vec<NonSimpleCabling>> {
    require_positive(k, "the non-simple cabling family")?;
    let ab = last_ab(k);
    let width = &ab.a - &ab.b;
    let c_r = solid_tori::thresholds(k)?
        .entries
        .pop()
        .expect("knots are nonempty")
        .c;
    // k + 1 > A − B  ⟺  k ≥ A − B
    let start = width.clone().max(c_r).max(BigInt::one());
    let Ok(start) = u64::try_from(&start) else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for kk in start..=k_max {
        let kb = BigInt::from(kk);
        let q = &kb + 1u32;
        if !q.gcd(&width).is_one() {
            continue;
        }
        let denom = &ab.a * &kb + &ab.b;
        let two_k_plus_one: BigInt = &kb * 2u32 + 1u32;
        out.push(NonSimpleCabling {
            base: k.clone(),
            k: kk,
            cable_c: CablingPair::new(width.clone(), q.clone()),
            cable_cprime: CablingPair::new(-&denom, q.clone()),
            tbbar: &q * &width,
            rot_pair: (&kb * &width, -(&kb * &width)),
            slbar: &two_k_plus_one * &width,
            chi_cable: -(two_k_plus_one * &width),
        });
    }
    Ok(out)
}

/// The two Legendrian pairs sharing `(tb̄, ±rot)` on a non-simple cable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPairs {
    /// Divides on the non-thickenable `N_r^k`: `[L^+, L^-]`.
    pub nonthickenable: [LegendrianClass; 2],
    /// Divides on the thickenable `N̂_r`: `[L̂^+, L̂^-]`.
    pub thickenable: [LegendrianClass; 2],
    /// The two pairs are distinct Legendrian classes. Not recomputed here.
    pub distinct_at_tbbar: bool,
    /// `T_-(L^+)`, `T_+(L^-)`, `T_-(L̂^+)`, `T_+(L̂^-)`.
    pub pushoffs: [TransverseClass; 4],
}

pub fn witness_pairs(c: &NonSimpleCabling) -> WitnessPairs {
    let r1 = c.base.len() + 1;
    let mk = |hat: bool, sign: Sign| LegendrianClass {
        tb: c.tbbar.clone(),
        rot: match sign {
            Sign::Plus => c.rot_pair.0.clone(),
            Sign::Minus => c.rot_pair.1.clone(),
        },
        label: format!("{}_{r1}^{}[k={}]", if hat { "L^" } else { "L" }, sign.symbol(), c.k),
    };
    let nonthickenable = [mk(false, Sign::Plus), mk(false, Sign::Minus)];
    let thickenable = [mk(true, Sign::Plus), mk(true, Sign::Minus)];
    let pushoffs = [
        transverse_pushoff(&nonthickenable[0], Sign::Minus),
        transverse_pushoff(&nonthickenable[1], Sign::Plus),
        transverse_pushoff(&thickenable[0], Sign::Minus),
        transverse_pushoff(&thickenable[1], Sign::Plus),
    ];
    WitnessPairs { nonthickenable, thickenable, distinct_at_tbbar: true, pushoffs }
}

/// `{±(p_{r+1} + (A_r − 1)q_{r+1} + q_{r+1}·rot(L_r))}` over the slice
/// classes `L_r` with `tb = 1`.
pub fn rotation_numbers_at_width_boundary(c: &NonSimpleCabling) -> Result<BTreeSet<BigInt>> {
    let ab = last_ab(&c.base);
    let (p, q) = (&c.cable_cprime.first, &c.cable_cprime.q);
    let mut out = BTreeSet::new();
    for rot in slice_rotations_at_tb_one(&c.base)? {
        let v = p + (&ab.a - 1u32) * q + q * rot;
        out.insert(-v.clone());
        out.insert(v);
    }
    Ok(out)
}

/// Ascending by `tb` descending, then `rot` ascending.
pub fn sort_points(points: &mut [LegendrianClass]) {
    points.sort_by(|x, y| y.tb.cmp(&x.tb).then_with(|| x.rot.cmp(&y.rot)));
}

/// `tb + |rot| ≤ s̄l` for every point, in the all-positive regime.
pub fn within_bennequin_bound(k: &IteratedTorusKnot, points: &[LegendrianClass]) -> Result<bool> {
    let slbar = invariants::max_self_linking(k)?;
    Ok(points.iter().all(|l| &l.tb + l.rot.abs() <= slbar))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn knot(s: &str) -> IteratedTorusKnot {
        s.parse().unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn pts(v: &[LegendrianClass]) -> Vec<(i64, i64)> {
        v.iter()
            .map(|l| (i64::try_from(&l.tb).unwrap(), i64::try_from(&l.rot).unwrap()))
            .collect()
    }

    #[test]
    fn stabilization_examples() {
        let l = LegendrianClass::new(7, 2, "L");
        let chain = stabilization_chain(&l, Sign::Plus, 7);
        assert_eq!(pts(&chain[7..]), vec![(0, 9)]);
        let back = destabilize(&stabilize(&l, Sign::Minus), Sign::Minus);
        assert_eq!((back.tb, back.rot), (big(7), big(2)));
        let s = stabilize(&LegendrianClass::new(0, -1, "x"), Sign::Minus);
        assert_eq!((s.tb, s.rot), (big(-1), big(-2)));
    }

    #[test]
    fn pushoff_examples() {
        let l = LegendrianClass::new(7, 2, "L~_2^+");
        assert_eq!(transverse_pushoff(&l, Sign::Minus).sl, big(9));
        let z = LegendrianClass::new(0, 0, "z");
        assert_eq!(transverse_pushoff(&z, Sign::Plus).sl, big(0));
        assert_eq!(transverse_pushoff(&z, Sign::Minus).sl, big(0));
        let l = LegendrianClass::new(5, -10, "L~_2^-");
        assert_eq!(transverse_pushoff(&l, Sign::Plus).sl, big(15));
    }

    #[test]
    fn ruling_rotation_examples() {
        // ruling on N(L_1): r(∂D_1) = 0, r(∂Σ_1) = p_1 k
        let (p1, q1, k) = (big(2), big(3), big(4));
        let r = ruling_rotation(&p1, &q1, &big(0), &(&p1 * &k));
        assert_eq!(r, &p1 * &q1 * &k);
        assert_eq!(ruling_rotation(&big(5), &big(7), &big(0), &big(0)), big(0));
        // divides: P·(q − 1) with (P, q) = (A − B, k + 1)
        let (w, k) = (big(9), big(9));
        assert_eq!(ruling_rotation(&w, &(&k + 1), &k, &big(0)), &k * &w);
    }

    #[test]
    fn slice_examples() {
        assert_eq!(pts(&mountain_range_slice(&knot("C:(2,3)")).unwrap()), vec![(0, 1), (0, -1)]);
        assert_eq!(
            pts(&mountain_range_slice(&knot("C:(2,3),(7,2)")).unwrap()),
            vec![(7, 2), (7, -2), (0, 9), (0, -9)]
        );
        assert_eq!(
            pts(&mountain_range_slice(&knot("C:(3,4),(5,2)")).unwrap()),
            vec![(5, 10), (5, -10), (0, 15), (0, -15)]
        );
        assert!(matches!(
            mountain_range_slice(&knot("C:(2,3),(-7,2)")),
            Err(Error::UnsupportedRegime(_))
        ));
    }

    #[test]
    fn slice_respects_bennequin_bound() {
        for s in ["C:(2,3)", "C:(2,3),(7,2)", "C:(3,4),(5,2)", "C:(3,4),(1,2)"] {
            let k = knot(s);
            let pts = mountain_range_slice_with_chains(&k).unwrap();
            assert!(within_bennequin_bound(&k, &pts).unwrap(), "{s}");
        }
    }

    #[test]
    fn chains_end_at_tb_zero() {
        let pts = mountain_range_slice_with_chains(&knot("C:(2,3),(7,2)")).unwrap();
        assert_eq!(pts.len(), 16);
        assert_eq!((pts[7].tb.clone(), pts[7].rot.clone()), (big(0), big(9)));
        assert_eq!((pts[15].tb.clone(), pts[15].rot.clone()), (big(0), big(-9)));
    }

    #[test]
    fn enumeration_examples() {
        let c = enumerate_nonsimple_cablings(&knot("C:(2,3)"), 3).unwrap();
        assert_eq!(c.iter().map(|c| c.k).collect::<Vec<_>>(), vec![1, 2, 3]);
        let pairs: Vec<_> = c.iter().map(|c| c.cable_c.clone()).collect();
        assert_eq!(
            pairs,
            vec![CablingPair::new(1, 2), CablingPair::new(1, 3), CablingPair::new(1, 4)]
        );
        assert_eq!(
            (c[0].tbbar.clone(), c[0].rot_pair.clone(), c[0].slbar.clone(), c[0].chi_cable.clone()),
            (big(2), (big(1), big(-1)), big(3), big(-3))
        );

        let c = enumerate_nonsimple_cablings(&knot("C:(2,3),(7,2)"), 12).unwrap();
        assert_eq!(c.iter().map(|c| c.k).collect::<Vec<_>>(), vec![9, 10, 12]);
        assert_eq!(c[0].cable_c, CablingPair::new(9, 10));
        assert_eq!(c[0].cable_cprime, CablingPair::new(-131, 10));
        assert_eq!(c[0].rot_pair, (big(81), big(-81)));
        assert_eq!((c[0].tbbar.clone(), c[0].slbar.clone()), (big(90), big(171)));

        assert!(enumerate_nonsimple_cablings(&knot("C:(2,3),(7,2)"), 8).unwrap().is_empty());
    }

    #[test]
    fn witness_examples() {
        let c = &enumerate_nonsimple_cablings(&knot("C:(2,3)"), 1).unwrap()[0];
        let w = witness_pairs(c);
        assert_eq!(pts(&w.nonthickenable), vec![(2, 1), (2, -1)]);
        assert_eq!(pts(&w.thickenable), vec![(2, 1), (2, -1)]);
        assert_eq!(w.pushoffs[0].sl, big(3));
        assert!(w.pushoffs.iter().all(|t| t.sl == big(3)));
        assert!(w.distinct_at_tbbar);

        let c = &enumerate_nonsimple_cablings(&knot("C:(2,3),(7,2)"), 9).unwrap()[0];
        let w = witness_pairs(c);
        assert_eq!(pts(&w.nonthickenable), vec![(90, 81), (90, -81)]);
        assert_eq!(w.pushoffs[0].sl, big(171));
    }

    #[test]
    fn width_boundary_rotations() {
        let c = &enumerate_nonsimple_cablings(&knot("C:(2,3)"), 1).unwrap()[0];
        let rots = rotation_numbers_at_width_boundary(c).unwrap();
        assert_eq!(rots, BTreeSet::from([big(-1), big(1)]));

        let c = &enumerate_nonsimple_cablings(&knot("C:(2,3),(7,2)"), 9).unwrap()[0];
        let rots = rotation_numbers_at_width_boundary(c).unwrap();
        assert!(rots.contains(&big(81)) && rots.contains(&big(-81)));
        assert!(rots.iter().all(|r| rots.contains(&-r)));
    }

    #[test]
    fn cable_knot_matches_record() {
        let c = &enumerate_nonsimple_cablings(&knot("C:(2,3),(7,2)"), 10).unwrap()[1];
        let cable = c.cable_knot();
        assert_eq!(cable.to_string(), "C:(2,3),(7,2),(9,11)");
        let cp = cable.pairs_in(Frame::Cprime);
        assert_eq!(cp[2], c.cable_cprime);
    }

    #[test]
    fn sorting_order() {
        let mut v = vec![
            LegendrianClass::new(0, 9, "a"),
            LegendrianClass::new(7, 2, "b"),
            LegendrianClass::new(0, -9, "c"),
            LegendrianClass::new(7, -2, "d"),
        ];
        sort_points(&mut v);
        assert_eq!(pts(&v), vec![(7, -2), (7, 2), (0, -9), (0, 9)]);
    }
}
