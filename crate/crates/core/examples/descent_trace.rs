//! Step through the descent one level at a time.

use gv_spectral::bounds::format_rational;
use gv_spectral::descent::DescentState;
use gv_spectral::math::{GraphParams, DEFAULT_BUDGET};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = GraphParams::new(2, 10, 4)?;
    let mut state = DescentState::new(&params, DEFAULT_BUDGET)?;
    println!("{params}, D = {}", state.degree());
    while !state.is_terminated() {
        let level = state.step()?;
        println!(
            "t={} pivot {} lambda_min {:>4}  D {:>4} -> {:>4}  bound {}",
            level.t,
            level.pivot,
            level.lambda_min,
            level.degree,
            state.degree(),
            format_rational(&level.bound)
        );
    }
    println!(
        "s = {}, table entries left: {}",
        state.t(),
        state.spectrum().len()
    );
    Ok(())
}
