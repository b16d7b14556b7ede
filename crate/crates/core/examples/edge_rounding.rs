// Rounding the edges of N_r^k ∪ N(L_r) back to a solid torus around the
// next cable, step by step.
//
// `cargo run --example edge_rounding`

use itk::solid_tori::{edge_rounding_slope, edge_rounding_with_bezout};
use itk::IteratedTorusKnot;
use num_bigint::BigInt;

pub fn run_example() -> itk::Result<()> {
    let k: IteratedTorusKnot = "C:(2,3),(7,2)".parse()?;
    let e = edge_rounding_slope(&k, 2)?;
    println!("K_r = {k} at k = {}, k' = {}", e.kk, e.k_prime);
    println!("  ruling count m = {}", e.m);
    println!("  balance {} = {}", e.balance_lhs, e.balance_rhs);
    println!("  Bézout pair (p', q') = ({}, {})", e.bezout_p, e.bezout_q);
    println!("  C'' slopes {} and {}", e.slope_nrk_cpp, e.slope_nlr_cpp);
    println!("  rounded slope {}", e.result_cprime);
    assert_eq!(e.result_cprime.to_string(), "-2/19");

    // another Bézout pair gives the same answer
    let alt = edge_rounding_with_bezout(&k, 2, (&e.bezout_p - 5, &e.bezout_q + BigInt::from(2)))?;
    assert_eq!(alt.result_cprime, e.result_cprime);

    for kk in (2..=10).step_by(2) {
        let e = edge_rounding_slope(&k, kk)?;
        println!("  k = {kk:>2}: {}", e.result_cprime);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> itk::Result<()> {
    run_example()
}
