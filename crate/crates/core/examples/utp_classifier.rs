// Uniform thickness: an iterated torus knot fails it exactly when every
// preferred-framing coefficient is positive.
//
// `cargo run --example utp_classifier`

use itk::invariants::{fails_utp, supports_standard_structure};
use itk::{Frame, IteratedTorusKnot};

pub fn run_example() -> itk::Result<()> {
    let cases = ["C:(2,3)", "C:(-2,3)", "C:(2,3),(7,2)", "C:(2,3),(-7,2)", "C':(2,3),(-5,2)", "C':(2,3),(-13,2)"];
    for s in cases {
        let k: IteratedTorusKnot = s.parse()?;
        let verdict = if fails_utp(&k) { "fails" } else { "holds" };
        println!("{:<18} {:<18} UTP {verdict}", k.to_string(), k.to_frame(Frame::C).to_string());
        assert_eq!(fails_utp(&k), supports_standard_structure(&k));
    }
    // a negative cabling-framing coefficient can still be positive in C
    assert!(fails_utp(&"C':(2,3),(-5,2)".parse()?));
    assert!(!fails_utp(&"C':(2,3),(-13,2)".parse()?));
    Ok(())
}

#[allow(dead_code)]
fn main() -> itk::Result<()> {
    run_example()
}
