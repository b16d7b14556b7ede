// A slice of the Legendrian mountain range: the points L̃_r^±, L_r^± and
// the stabilization chains between them, plus transverse push-offs.
//
// `cargo run --example mountain_range`

use itk::legendrian::{
    mountain_range_slice, mountain_range_slice_with_chains, sort_points, transverse_pushoff,
    within_bennequin_bound,
};
use itk::{IteratedTorusKnot, Sign};

pub fn run_example() -> itk::Result<()> {
    let k: IteratedTorusKnot = "C:(2,3),(7,2)".parse()?;
    let mut pts = mountain_range_slice(&k)?;
    sort_points(&mut pts);
    for p in &pts {
        println!("{p}");
    }
    let mut chain = mountain_range_slice_with_chains(&k)?;
    sort_points(&mut chain);
    println!("{} points with chains", chain.len());
    assert!(within_bennequin_bound(&k, &chain)?);

    let t = transverse_pushoff(&pts[1], Sign::Minus);
    println!("sl({}) = {}", t.label, t.sl);
    Ok(())
}

#[allow(dead_code)]
fn main() -> itk::Result<()> {
    run_example()
}
