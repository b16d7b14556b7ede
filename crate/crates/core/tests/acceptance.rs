//! Acceptance gate. Run with
//! `cargo test -p itk --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

use std::process::Command;
use std::time::{Duration, Instant};

use itk::invariants::{self, compute_ab_closed, compute_ab_recursive, width_tb_recursion};
use itk::legendrian::{enumerate_nonsimple_cablings, rotation_numbers_at_width_boundary, witness_pairs};
use itk::oracle::{self, gen};
use itk::solid_tori::{self, catalog, edge_rounding_slope, edge_rounding_with_bezout};
use itk::{Error, Frame, IteratedTorusKnot, Slope, TorusStatus, UnreducedSlope};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn knot(s: &str) -> IteratedTorusKnot {
    s.parse().unwrap()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn identity_suite() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(11);
    let n = 10_000;
    for i in 0..n {
        let frame = if i % 2 == 0 { Frame::C } else { Frame::Cprime };
        let raw = gen::tuple(&mut rng, 6, 7, 20, false);
        let k = gen::knot(frame, &raw);
        let rec = compute_ab_recursive(&k);
        ensure!(rec == compute_ab_closed(&k), "closed != recursive for {k}");
        let pc = k.pairs_in(Frame::C);
        let pp = k.pairs_in(Frame::Cprime);
        let (mut a0, mut b0) = (BigInt::zero(), BigInt::one());
        for j in 0..k.len() {
            let q = &pc[j].q;
            ensure!(rec[j].a == q * q * &a0 + &pp[j].first * q, "A identity at {k}, i={}", j + 1);
            ensure!(rec[j].b == q * &b0 + &pp[j].first, "B identity at {k}, i={}", j + 1);
            ensure!(pc[j].first == q * &a0 + &pp[j].first, "P identity at {k}, i={}", j + 1);
            ensure!(rec[j].a == &pc[j].first * q, "A = Pq at {k}, i={}", j + 1);
            a0 = rec[j].a.clone();
            b0 = rec[j].b.clone();
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    Ok(format!("{n} tuples in {:.2?}", elapsed))
}

fn base_case() -> Outcome {
    let k = knot("C:(2,3)");
    let ab = &compute_ab_recursive(&k)[0];
    ensure!((ab.a.clone(), ab.b.clone()) == (big(6), big(5)), "A, B = {}, {}", ab.a, ab.b);
    ensure!(invariants::euler_characteristic(&k).unwrap() == big(-1), "chi");
    let w = &width_tb_recursion(&k).unwrap()[0];
    ensure!(w.tbbar == big(1) && w.width == big(1) && w.tbar == big(-5), "tb {:?}", w);
    let c1 = &solid_tori::thresholds(&k).unwrap().entries[0].c;
    ensure!(c1.is_zero(), "C_1 = {c1}");
    let rows = catalog(&k, 1, 100).unwrap();
    for t in &rows {
        let kb = big(t.k as i64);
        let want = Slope::new(-(&kb + 1u32), &kb * 6u32 + 5u32).unwrap();
        ensure!(t.slope_cprime.reduce() == (want, BigInt::one()), "slope at k={}", t.k);
        ensure!(t.dividing_curves == big(2), "curves at k={}", t.k);
        let status = if t.k == 0 { TorusStatus::StandardNeighborhood } else { TorusStatus::Yes };
        ensure!(t.status == status, "status at k={}", t.k);
    }
    Ok(format!("k = 0..={}", rows.len() - 1))
}

fn edge_rounding() -> Outcome {
    let k = knot("C:(2,3),(7,2)");
    let e = edge_rounding_slope(&k, 2).map_err(|e| e.to_string())?;
    ensure!(e.m == big(12), "m = {}", e.m);
    ensure!(e.balance_lhs == big(19) && e.balance_rhs == big(19), "balance {} = {}", e.balance_lhs, e.balance_rhs);
    let (s1, s2) = (e.slope_nrk_cpp.to_string(), e.slope_nlr_cpp.to_string());
    ensure!(s1 == "8/19" && s2 == "9/19", "C'' slopes {s1}, {s2}");
    ensure!(e.result_cprime.to_string() == "-2/19", "result {}", e.result_cprime);

    let mut rng = rng(21);
    let (mut cases, mut skipped) = (0, 0);
    while cases < 100 {
        let raw = gen::tuple(&mut rng, 4, 5, 9, true);
        if raw.len() < 2 {
            continue;
        }
        let k = gen::knot(Frame::C, &raw);
        let q = raw.last().unwrap().1 as u64;
        let kk = q * rand::Rng::gen_range(&mut rng, 1..=12u64);
        let e = match edge_rounding_slope(&k, kk) {
            Ok(e) => e,
            Err(Error::NotApplicable(_)) => {
                skipped += 1;
                continue;
            }
            Err(err) => return Err(format!("{k} kk={kk}: {err}")),
        };
        let (a1, b1) = oracle::ab_of_knot(&k);
        let kp = big((kk / q) as i64);
        let closed = UnreducedSlope::new(-(&kp + 1u32), &a1 * &kp + &b1).unwrap();
        ensure!(e.result_cprime == closed, "{k} kk={kk}: {} vs {closed}", e.result_cprime);
        let p = k.pairs_in(Frame::Cprime).last().unwrap().first.clone();
        let alt = edge_rounding_with_bezout(&k, kk, (&e.bezout_p + &p, &e.bezout_q + big(q as i64)))
            .map_err(|err| format!("{k} kk={kk} shifted pair: {err}"))?;
        ensure!(alt.result_cprime == closed, "{k} kk={kk}: shifted Bézout pair gives {}", alt.result_cprime);
        cases += 1;
    }
    Ok(format!("worked example + {cases} random cases ({skipped} inadmissible skipped)"))
}

fn utp_classifier() -> Outcome {
    let mut rng = rng(31);
    let (mut fails, mut holds) = (0, 0);
    for i in 0..1000 {
        let frame = if i % 2 == 0 { Frame::C } else { Frame::Cprime };
        let raw = gen::tuple(&mut rng, 6, 7, 20, false);
        let k = gen::knot(frame, &raw);
        let raw_b: Vec<(BigInt, BigInt)> = raw.iter().map(|&(p, q)| (big(p), big(q))).collect();
        let scan = oracle::all_positive_by_sign_scan(frame, &raw_b);
        ensure!(invariants::fails_utp(&k) == scan, "{k}: classifier {} vs scan {scan}", !scan);
        if scan {
            fails += 1;
        } else {
            holds += 1;
        }
    }
    Ok(format!("1000 knots ({fails} fail UTP, {holds} have it)"))
}

fn test_knots(n: usize, seed: u64) -> Vec<IteratedTorusKnot> {
    let mut out: Vec<IteratedTorusKnot> = ["C:(2,3)", "C:(2,3),(7,2)", "C:(3,4),(1,2)", "C:(3,4),(5,2)", "C:(2,3),(7,2),(29,2)"]
        .into_iter()
        .map(knot)
        .collect();
    let mut rng = rng(seed);
    out.extend((0..n).map(|_| gen::knot(Frame::C, &gen::tuple(&mut rng, 4, 5, 9, true))));
    out
}

fn monotonicity() -> Outcome {
    let knots = test_knots(100, 41);
    let mut pairs = 0u64;
    for k in &knots {
        for i in 1..=k.len() {
            let start = solid_tori::first_positive_denominator(k, i).map_err(|e| e.to_string())?;
            if start > 200 {
                continue;
            }
            let seq = solid_tori::slope_sequence_range(k, i, start, 200).map_err(|e| format!("{k}: {e}"))?;
            let a = &compute_ab_recursive(k)[i - 1].a;
            for w in seq.windows(2) {
                // λ/μ < λ'/μ' with μ, μ' > 0
                ensure!(w[0].lon() * w[1].mer() < w[1].lon() * w[0].mer(), "{k} i={i}: {} !< {}", w[0], w[1]);
                pairs += 1;
            }
            for s in &seq {
                ensure!(s.lon() * a < -s.mer(), "{k} i={i}: {s} !< -1/{a}");
            }
        }
    }
    Ok(format!("{} knots, {pairs} consecutive pairs", knots.len()))
}

fn c_frame_slopes() -> Outcome {
    let knots = test_knots(100, 51);
    let mut rows = 0;
    for k in &knots {
        let ab = compute_ab_recursive(k).pop().unwrap();
        let width = &ab.a - &ab.b;
        for t in catalog(k, k.len(), 100).map_err(|e| e.to_string())? {
            let kb = big(t.k as i64) + 1u32;
            let g = kb.gcd(&width);
            let want = Slope::new(&kb / &g, &width / &g).unwrap();
            let (s, n) = t.slope_c.reduce();
            ensure!(s == want && n == g, "{k} k={}: {} reduces to ({s}, {n})", t.k, t.slope_c);
            ensure!(t.slope_cprime.multiplicity() == n, "{k} k={}: multiplicities differ", t.k);
            rows += 1;
        }
    }
    Ok(format!("{rows} catalog rows"))
}

fn witnesses() -> Outcome {
    let mut checked = Vec::new();
    for (s, kmax, want) in [("C:(2,3)", 5, vec![1, 2, 3, 4, 5]), ("C:(2,3),(7,2)", 12, vec![9, 10, 12])] {
        let k = knot(s);
        let list = enumerate_nonsimple_cablings(&k, kmax).map_err(|e| e.to_string())?;
        let ks: Vec<u64> = list.iter().map(|c| c.k).collect();
        ensure!(ks == want, "{s}: enumerated k = {ks:?}");
        for c in &list {
            let cable = c.cable_knot();
            let tbbar = width_tb_recursion(&cable).map_err(|e| e.to_string())?.pop().unwrap().tbbar;
            let a = compute_ab_recursive(&cable).pop().unwrap().a;
            ensure!(c.tbbar == tbbar && c.tbbar == a, "{cable}: tbbar {} vs {tbbar} / A {a}", c.tbbar);
            let chi = invariants::euler_characteristic(&cable).map_err(|e| e.to_string())?;
            ensure!(c.slbar == -&chi && c.chi_cable == chi, "{cable}: slbar {} vs chi {chi}", c.slbar);
            let rots = rotation_numbers_at_width_boundary(c).map_err(|e| e.to_string())?;
            ensure!(rots.contains(&c.rot_pair.0) && rots.contains(&c.rot_pair.1), "{cable}: rot {:?} not in {rots:?}", c.rot_pair);
            let w = witness_pairs(c);
            ensure!(w.pushoffs.iter().all(|t| t.sl == c.slbar), "{cable}: push-offs");
            checked.push(cable.to_string());
        }
    }
    Ok(format!("{} cables", checked.len()))
}

fn oracle_suite() -> Outcome {
    let run = |extra: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_itk")).arg("verify").args(extra).output().unwrap();
        (out.status.code(), String::from_utf8_lossy(&out.stderr).into_owned())
    };
    let (code, err) = run(&[]);
    ensure!(code == Some(0), "default ranges exit {code:?}: {err}");
    let (code, err) = run(&["--inject-fault", "ab-off-by-one"]);
    ensure!(code.is_some_and(|c| c != 0), "injected fault exit {code:?}");
    ensure!(err.contains("ab_summation"), "fault not named: {err}");
    Ok("default ranges exit 0, injected fault exits nonzero".into())
}

fn prime_cables() -> Outcome {
    let mut rng = rng(61);
    for _ in 0..50 {
        let k = gen::knot(Frame::C, &gen::tuple(&mut rng, 3, 4, 9, true));
        let ab = compute_ab_recursive(&k).pop().unwrap();
        let width: u64 = (&ab.a - &ab.b).try_into().map_err(|_| "width too large")?;
        let c_r: u64 = (&solid_tori::thresholds(&k).unwrap().entries.last().unwrap().c)
            .try_into()
            .map_err(|_| "threshold too large")?;
        let floor = width.max(c_r + 1).max(2);
        let p = oracle::next_prime(floor + 1);
        ensure!(p <= 2 * floor, "no prime in ({floor}, {}]", 2 * floor);
        let list = enumerate_nonsimple_cablings(&k, p - 1).map_err(|e| e.to_string())?;
        ensure!(list.iter().any(|c| c.k == p - 1), "{k}: k+1 = {p} missing");
        ensure!(list.iter().all(|c| c.cable_c.first.is_positive()), "{k}: nonpositive cable");
    }
    Ok("50 knots each have a prime k+1 cable below twice the lower bound".into())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("identity suite", identity_suite),
        ("base case (2,3)", base_case),
        ("edge-rounding pipeline", edge_rounding),
        ("uniform thickness classifier", utp_classifier),
        ("slope monotonicity", monotonicity),
        ("C-frame torus slopes", c_frame_slopes),
        ("non-simple cabling witnesses", witnesses),
        ("oracle suite", oracle_suite),
        ("prime cable existence", prime_cables),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name:<30} {detail}"),
            Err(why) => {
                println!("FAIL  {name:<30} {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
