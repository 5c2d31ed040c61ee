// Terminating hypergeometric sums and the reductions of the second-moment
// sums to Gauss functions.

use vortex_coherence::exactnum::Rat;
use vortex_coherence::hyper::{f32_reduce_check, f32_unit_closed_form, f43_reduce_check, legendre_2f1_check, pfq, HyperSpec};
use vortex_coherence::identities::verify_gegenbauer_forms;
use vortex_coherence::Result;

pub fn run(n: u64) -> Result<()> {
    let spec = HyperSpec::gauss(Rat::from(-3), Rat::frac(1, 2), Rat::from(2), Rat::frac(1, 3))?;
    println!("2F1(-3, 1/2; 2; 1/3) = {}", pfq(&spec));
    println!("{}", f32_unit_closed_form(n)?);
    for z in [Rat::frac(1, 2), Rat::from(-1)] {
        println!("{}", f32_reduce_check(n, &z)?);
        println!("{}", f43_reduce_check(n, &z)?);
    }
    println!("{}", legendre_2f1_check(n, &Rat::from(4))?);
    for report in verify_gegenbauer_forms(n)? {
        println!("{report}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run(5)
}
