// Shannon and Renyi entropies of `b^2(n, N-n, k)` along a fixed total order.
//
// The Shannon curve dips at `n = N/2`; the collision entropy dips less.

use vortex_coherence::modecoeff::{distribution, ModeIndex};
use vortex_coherence::statistics::{purity, renyi_entropy, shannon_entropy};
use vortex_coherence::Result;

pub fn run(total: u64) -> Result<()> {
    println!("{:>3}  {:>10}  {:>10}  purity", "n", "shannon", "renyi2");
    for n in 0..=total {
        let dist = distribution(ModeIndex::new(n, total - n));
        let shannon = shannon_entropy(&dist).nats;
        let renyi = renyi_entropy(&dist, 2.0)?.nats;
        println!("{n:>3}  {shannon:>10.6}  {renyi:>10.6}  {}", purity(&dist));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    let total = std::env::args().nth(1).map(|a| a.parse().expect("nonnegative integer")).unwrap_or(20);
    run(total)
}
