//! Exact independence numbers of tiny Gilbert graphs next to the bounds.

use gv_spectral::bounds::{ceil, floor, BoundReport};
use gv_spectral::graph::max_independent_set_oracle;
use gv_spectral::math::{GraphParams, DEFAULT_BUDGET};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!(
        "{:<18} {:>4} {:>8} {:>8} {:>6} {:>8}",
        "params", "gv", "descent", "q^(n-s)", "alpha", "hoffman"
    );
    for (q, n, d) in [
        (2, 4, 2),
        (2, 5, 3),
        (2, 6, 3),
        (2, 6, 4),
        (3, 3, 2),
        (2, 3, 3),
    ] {
        let params = GraphParams::new(q, n, d)?;
        let report = BoundReport::compute(&params, DEFAULT_BUDGET)?;
        let (alpha, witness) = max_independent_set_oracle(&params)?;
        println!(
            "{:<18} {:>4} {:>8} {:>8} {:>6} {:>8}",
            params.to_string(),
            ceil(&report.gv),
            ceil(report.best_lower()),
            report.constructed_code_size.unwrap(),
            alpha,
            floor(&report.hoffman_upper),
        );
        let words: Vec<String> = witness.iter().map(|w| w.to_string()).collect();
        println!("  {}", words.join(" "));
    }
    Ok(())
}
