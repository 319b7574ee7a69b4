//! Level-0 spectrum of a Gilbert graph, grouped by weight.
//!
//!     cargo run --example spectrum -- 2 7 3

use gv_spectral::math::GraphParams;
use gv_spectral::spectrum::build_spectrum_level0;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (q, n, d) = match args[..] {
        [q, n, d] => (q as u32, n, d),
        _ => (2, 7, 3),
    };
    let params = GraphParams::new(q, n, d)?;
    let spectrum = build_spectrum_level0(&params);

    println!("G{params}: degree {}", spectrum.degree());
    println!(
        "{:>6} {:>12} {:>14}",
        "weight", "eigenvalue", "multiplicity"
    );
    for (w, lambda, mult) in spectrum.rows() {
        println!("{w:>6} {lambda:>12} {mult:>14}");
    }
    let (min, argmin) = spectrum.min_eigenvalue();
    println!("minimum {min} at {argmin}");
    println!(
        "trace {}, trace of A^2 {}",
        spectrum.trace(),
        spectrum.trace_of_square()
    );
    Ok(())
}
