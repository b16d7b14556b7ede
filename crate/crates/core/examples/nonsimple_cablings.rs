// Cables (A_r − B_r, k+1) that are transversally non-simple, with the
// Legendrian witness pairs and their push-offs.
//
// `cargo run --example nonsimple_cablings`

use itk::invariants;
use itk::legendrian::{enumerate_nonsimple_cablings, rotation_numbers_at_width_boundary, witness_pairs};
use itk::IteratedTorusKnot;

pub fn run_example() -> itk::Result<()> {
    let k: IteratedTorusKnot = "C:(2,3),(7,2)".parse()?;
    for c in enumerate_nonsimple_cablings(&k, 14)? {
        let cable = c.cable_knot();
        let w = witness_pairs(&c);
        println!(
            "k={:>2} cable {} tb̄={} rot=±{} s̄l={}",
            c.k, c.cable_c, c.tbbar, c.rot_pair.0, c.slbar
        );
        println!("      {} and {}", w.nonthickenable[0], w.thickenable[0]);
        // the cable's own invariants agree
        assert_eq!(invariants::max_self_linking(&cable)?, c.slbar);
        assert!(rotation_numbers_at_width_boundary(&c)?.contains(&c.rot_pair.0));
        assert!(w.pushoffs.iter().all(|t| t.sl == c.slbar));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> itk::Result<()> {
    run_example()
}
