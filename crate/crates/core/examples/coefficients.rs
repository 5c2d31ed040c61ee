// Connection coefficients `b(n, m, k)` of one LG mode, by all three routes.
//
// `cargo run --example coefficients -- 3 2`

use vortex_coherence::modecoeff::{b_derivative_route, b_hyper_route, b_jacobi_route, distribution, ModeIndex};
use vortex_coherence::Result;

pub fn run(n: u64, m: u64) -> Result<()> {
    let index = ModeIndex::new(n, m);
    println!("b({n}, {m}, k) for k = 0..={}", index.total());
    println!("{:>3}  {:>22}  {:>12}  {:>10}", "k", "b", "b^2", "hyper");
    for k in 0..=index.total() {
        let b = b_derivative_route(n, m, k)?;
        assert_eq!(b, b_jacobi_route(n, m, k)?);
        let hyper = match b_hyper_route(n, m, k) {
            Ok(h) if h == b => "agrees",
            Ok(_) => "DIFFERS",
            Err(_) => "n/a",
        };
        println!("{k:>3}  {:>22}  {:>12}  {hyper:>10}", b.value().to_string(), b.squared().to_string());
    }
    let dist = distribution(index);
    let zeros: Vec<usize> = dist.probs().iter().enumerate().filter(|(_, p)| p.is_zero()).map(|(k, _)| k).collect();
    println!("zero entries at k = {zeros:?}");
    println!("{}", dist.to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("nonnegative integer"));
    let n = args.next().unwrap_or(3);
    let m = args.next().unwrap_or(2);
    run(n, m)
}
