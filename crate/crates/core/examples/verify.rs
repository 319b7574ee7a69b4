//! Exhaustive minimum-distance check of a parity-check matrix.

use gv_spectral::code::{is_independent_set, LinearCode};
use gv_spectral::math::{GraphParams, DEFAULT_BUDGET};
use gv_spectral::pchk;
use gv_spectral::vector::FqVector;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let code = match std::env::args().nth(1) {
        Some(path) => pchk::read(path.as_ref())?,
        None => {
            let rows = ["0001111", "0110011", "1010101"]
                .iter()
                .map(|r| FqVector::parse(2, r))
                .collect::<Result<Vec<_>, _>>()?;
            LinearCode::new(2, 7, rows)?
        }
    };
    let code = code.verify(DEFAULT_BUDGET)?;
    let dist = code.verified_min_distance().unwrap();
    println!(
        "[{}, {}] code, {} codewords, minimum distance {dist}",
        code.n(),
        code.dimension(),
        code.size()
    );

    // a code has minimum distance >= d exactly when it is independent in G_{q,n,d}
    if let gv_spectral::code::MinDistance::Finite(d) = dist {
        if d <= code.n() + 1 {
            let params = GraphParams::new(code.q(), code.n(), d)?;
            let words = code.codewords(DEFAULT_BUDGET)?;
            println!(
                "independent in G{params}: {}",
                is_independent_set(&params, &words)?
            );
        }
    }
    Ok(())
}
