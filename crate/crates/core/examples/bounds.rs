//! Every bound on A_q(n,d) for a few parameter triples.

use gv_spectral::bounds::{ceil, floor, format_rational, BoundReport};
use gv_spectral::math::{GraphParams, DEFAULT_BUDGET};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (q, n, d) in [(2, 7, 3), (2, 12, 5), (3, 6, 3), (5, 4, 3), (2, 40, 9)] {
        let params = GraphParams::new(q, n, d)?;
        // q^n = 2^40 is over the default budget, so that row has no descent
        let report = BoundReport::compute(&params, DEFAULT_BUDGET)?;
        println!("{params}");
        println!(
            "  gv            {} (>= {})",
            format_rational(&report.gv),
            ceil(&report.gv)
        );
        println!(
            "  wilf          {} (>= {})",
            format_rational(&report.wilf_cor27),
            ceil(&report.wilf_cor27)
        );
        match report.descent_bounds.last() {
            Some(b) => println!("  descent       {} (>= {})", format_rational(b), ceil(b)),
            None => println!("  descent       not run"),
        }
        if let Some(size) = &report.constructed_code_size {
            println!(
                "  constructed   {size} codewords, s = {}",
                report.s.unwrap()
            );
        }
        println!(
            "  hoffman       {} (<= {})",
            format_rational(&report.hoffman_upper),
            floor(&report.hoffman_upper)
        );
        if let Some(rate) = &report.asymptotic_rate {
            println!("  1 - h_q(d/n)  {rate}");
        }
    }
    Ok(())
}
