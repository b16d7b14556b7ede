// Cross-check the library against the brute-force oracles.
//
// `cargo run --example oracle_verify`

use itk::oracle::{self, VerifyConfig};

pub fn run_example() -> itk::Result<()> {
    let cfg: VerifyConfig = "r<=3,q<=5,p<=9,k<=40,n=60".parse()?;
    let report = oracle::run_all(&cfg, None);
    for r in &report.reports {
        println!("{:?} {:<26} {} cases", r.verdict, r.check, r.cases);
    }
    assert!(report.all_pass());

    let a = 14.into();
    let b = 5.into();
    let r = oracle::interval_membership_check(&a, &b, 1..=30);
    println!("{} over {}: {:?}", r.check, r.inputs, r.verdict);
    Ok(())
}

#[allow(dead_code)]
fn main() -> itk::Result<()> {
    run_example()
}
