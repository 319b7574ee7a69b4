//! A small bound table as CSV, the same rows `gvspec sweep` writes.

use gv_spectral::cli::sweep;
use gv_spectral::math::DEFAULT_BUDGET;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let csv = sweep(&[2, 3], (4, 8), (3, 4), DEFAULT_BUDGET, false)?;
    print!("{csv}");
    Ok(())
}
