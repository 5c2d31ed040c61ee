// Two-point correlation of an LG mode at the waist, by direct integration
// of the field and by the Mercer sum, plus the purity integral.

use vortex_coherence::beamfield::{correlation_grid, gamma_direct, gamma_mercer, purity_integral, u_lg, WaistFrame};
use vortex_coherence::modecoeff::{distribution, ModeIndex};
use vortex_coherence::statistics::purity;
use vortex_coherence::Result;

pub fn run(n: u64, m: u64, w: f64) -> Result<()> {
    let index = ModeIndex::new(n, m);
    let frame = WaistFrame::new(w)?;
    println!("u_LG({n},{m}) at (0.3, -0.2) = {}", u_lg(index, 0.3, -0.2, frame));
    for (x, xp) in [(0.0, 0.0), (0.5, -0.5), (1.0, 0.25)] {
        let direct = gamma_direct(index, x, xp, frame);
        let mercer = gamma_mercer(index, x, xp, frame);
        println!("Gamma({x}, {xp}): direct {direct:.12}, mercer {mercer:.12}");
    }
    let exact = purity(&distribution(index));
    println!("purity: integral {:.15}, sum of b^4 = {exact} = {:.15}", purity_integral(index, frame), exact.to_f64());
    let samples = correlation_grid(index, &[-1.0, 0.0, 1.0], frame);
    println!("grid samples: {}", samples.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run(2, 1, 1.0)
}
