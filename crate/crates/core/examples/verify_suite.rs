// Runs part of the identity catalog and prints the summary and any
// residual patterns found among failures.
//
// `cargo run --release --example verify_suite -- eq6,eq23,A1 6`

use vortex_coherence::identities::{run_suite, Selection, CATALOG};
use vortex_coherence::Result;

pub fn run(ids: &str, max_nm: u64) -> Result<()> {
    let selection = Selection::parse(&[ids])?;
    let result = run_suite(max_nm, &selection, 0)?;
    println!("catalog has {} identities; selected `{ids}` up to n, m = {max_nm}", CATALOG.len());
    println!("pass {}, fail {}", result.summary.pass, result.summary.fail);
    for erratum in &result.errata {
        println!("{} fails at {} of {} points, residual = {}", erratum.id, erratum.nonzero, erratum.points, erratum.fit);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let ids = args.next().unwrap_or_else(|| "eq6,eq23,eq23_corrected,A1".into());
    let max_nm = args.next().map(|a| a.parse().expect("nonnegative integer")).unwrap_or(6);
    run(&ids, max_nm)
}
