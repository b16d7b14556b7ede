// Parse a knot in either framing, convert, and inspect the gluing maps.
//
// `cargo run --example framing`

use itk::slope::{farey_adjacent, farey_mediant, geometric_intersection};
use itk::{Frame, IteratedTorusKnot, Slope, UnimodularMap};

pub fn run_example() -> itk::Result<()> {
    let k: IteratedTorusKnot = "C':(2,3),(-5,2),(1,2)".parse()?;
    let c = k.to_frame(Frame::C);
    println!("{k}  =  {c}");
    assert_eq!(c.to_string(), "C:(2,3),(7,2),(29,2)");
    assert_eq!(c.to_frame(Frame::Cprime), k);

    for i in 1..=k.len() {
        println!("K_{i} = {}", c.prefix(i)?);
    }

    // the C' → C shear on ∂N(K_1) is [[1, A_1], [0, 1]] with A_1 = 6
    let shear = UnimodularMap::shear(6);
    let s: Slope = "-1/5".parse()?;
    println!("shear(6) sends {s} to {}", shear.apply_slope(&s));
    assert_eq!(shear.apply_slope(&s).to_string(), "1/1");
    assert_eq!(shear.inverse().apply_slope(&shear.apply_slope(&s)), s);

    let (a, b): (Slope, Slope) = ("0".parse()?, "inf".parse()?);
    println!("Δ({a}, {b}) = {}, adjacent: {}", geometric_intersection(&a, &b), farey_adjacent(&a, &b));
    println!("mediant of 1/2 and 1/3: {}", farey_mediant(&"1/2".parse()?, &"1/3".parse()?)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> itk::Result<()> {
    run_example()
}
