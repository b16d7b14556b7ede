// Non-thickenable solid tori N_r^k: boundary slopes in both framings,
// dividing-curve counts, and the thresholds C_i.
//
// `cargo run --example solid_tori_catalog`

use itk::solid_tori::{catalog, slope_sequence, thresholds};
use itk::IteratedTorusKnot;

pub fn run_example() -> itk::Result<()> {
    let k: IteratedTorusKnot = "C:(3,4),(1,2)".parse()?;
    for e in thresholds(&k)?.entries {
        println!("C = {} ({:?})", e.c, e.rule);
    }
    println!("{:>3} {:>10} {:>8} {:>4} {:>4}  status", "k", "C' slope", "C slope", "n", "#Γ");
    for t in catalog(&k, 2, 8)? {
        println!(
            "{:>3} {:>10} {:>8} {:>4} {:>4}  {}",
            t.k,
            t.slope_cprime.to_string(),
            t.slope_c.to_string(),
            t.n,
            t.dividing_curves,
            t.status_label()
        );
    }

    let base: IteratedTorusKnot = "C:(2,3)".parse()?;
    let seq = slope_sequence(&base, 1, 5)?;
    let shown: Vec<String> = seq.iter().map(ToString::to_string).collect();
    println!("(2,3) slopes: {} → -1/6", shown.join(" < "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> itk::Result<()> {
    run_example()
}
