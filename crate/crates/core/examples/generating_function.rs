// Generating-function identities: the power-series match of the Jacobi
// generating function and the closed sums it implies.

use vortex_coherence::exactnum::{FSeries, Rat};
use vortex_coherence::identities::{verify_first_moment_route, verify_genfun_series, verify_genfun_t4};
use vortex_coherence::Result;

pub fn run() -> Result<()> {
    // 1/(1-t) to order 5, then its square
    let geometric = FSeries::constant(Rat::one(), 5).sub(&FSeries::variable(5)).inverse()?;
    println!("1/(1-t)^2 = {:?}", geometric.mul(&geometric).coeffs());

    for (a, b) in [(2, 3), (5, 1)] {
        let series = verify_genfun_series(a, b, &Rat::frac(1, 3), &Rat::frac(-1, 5))?;
        println!("series a={a} b={b}: {:?}", series.status);
        println!("sum identity a={a} b={b}: {}", verify_genfun_t4(a, b));
        for report in verify_first_moment_route(a, b)? {
            println!("  {report}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
