// Moments of the coefficient distribution against their closed forms,
// including the printed fifth moment whose residual is `(5/4) m n`.

use vortex_coherence::identities::{moment_identity_id, verify_moments};
use vortex_coherence::modecoeff::{distribution, ModeIndex};
use vortex_coherence::statistics::{fifth_moment_corrected, moments_direct, skewness, variance, MAX_MOMENT};
use vortex_coherence::Result;

pub fn run(n: u64, m: u64) -> Result<()> {
    let index = ModeIndex::new(n, m);
    let table = moments_direct(&distribution(index), MAX_MOMENT)?;
    for j in 1..=MAX_MOMENT {
        let report = verify_moments(n, m, j)?;
        let id = moment_identity_id(j).expect("order in range");
        println!("<k^{j}> = {:<14} {id}: {:?}, residual {}", table.raw[j].to_string(), report.status, report.residual);
    }
    println!("corrected fifth moment: {}", fifth_moment_corrected(index));
    println!("variance {} (closed form (2mn+m+n)/4), skewness {}", variance(index)?, skewness(index));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run(4, 3)
}
