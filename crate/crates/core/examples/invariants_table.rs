// Per-prefix invariants: (A_i, B_i), Euler characteristic, genus, tb̄,
// contact width, t̄ and the solid-torus threshold C_i.
//
// `cargo run --example invariants_table`

use itk::invariants::{self, invariant_table};
use itk::IteratedTorusKnot;

pub fn run_example() -> itk::Result<()> {
    for s in ["C:(2,3)", "C:(2,3),(7,2)", "C:(3,4),(1,2)", "C:(2,3),(7,2),(29,2)"] {
        let k: IteratedTorusKnot = s.parse()?;
        println!("{k}");
        println!("  {:>2} {:>5} {:>5} {:>5} {:>5} {:>5} {:>5} {:>3}", "i", "A", "B", "chi", "tbbar", "width", "tbar", "C");
        for row in invariant_table(&k).rows {
            let show = |v: &Option<num_bigint::BigInt>| v.as_ref().map_or("-".into(), |x| x.to_string());
            println!(
                "  {:>2} {:>5} {:>5} {:>5} {:>5} {:>5} {:>5} {:>3}",
                row.i,
                row.A,
                row.B,
                show(&row.chi),
                show(&row.tbbar),
                show(&row.width),
                show(&row.tbar),
                show(&row.C)
            );
        }
        println!("  genus {}, max self-linking {}", invariants::genus(&k)?, invariants::max_self_linking(&k)?);
    }

    let k: IteratedTorusKnot = "C:(2,3),(7,2)".parse()?;
    let ab = invariants::compute_ab_recursive(&k);
    assert_eq!(ab, invariants::compute_ab_closed(&k));
    assert_eq!(invariants::euler_characteristic(&k)?, (-9).into());
    Ok(())
}

#[allow(dead_code)]
fn main() -> itk::Result<()> {
    run_example()
}
