//! The real eigenvector b_A for the minimum eigenvalue, checked against the
//! explicit adjacency matrix.

use gv_spectral::graph::ExplicitGraph;
use gv_spectral::math::{GraphParams, DEFAULT_BUDGET};
use gv_spectral::spectrum::{build_spectrum_level0, real_eigenvector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = 3;
    let params = GraphParams::new(q, 5, 3)?;
    let (lambda, argmin) = build_spectrum_level0(&params).min_eigenvalue();
    let b = real_eigenvector(&params, &argmin.support())?;
    let entries = b.entries(DEFAULT_BUDGET)?;

    println!("G{params}: lambda_min = {lambda}, A = {:?}", b.support());
    println!(
        "|b|^2 = {}, entries sum to {}",
        b.squared_norm(),
        entries.iter().sum::<i64>()
    );
    let top = entries.iter().filter(|&&x| x == q as i64 - 1).count();
    println!("{top} entries equal q-1, Wilf constant M = {}", b.wilf_m());

    let graph = ExplicitGraph::gilbert(&params, DEFAULT_BUDGET)?;
    let lambda: i64 = lambda.try_into()?;
    println!("A b = lambda b: {}", graph.is_eigenvector(&entries, lambda));
    Ok(())
}
