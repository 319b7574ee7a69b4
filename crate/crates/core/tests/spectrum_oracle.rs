use gv_spectral::graph::ExplicitGraph;
use gv_spectral::math::{GraphParams, DEFAULT_BUDGET};
use gv_spectral::spectrum::{
    build_spectrum_level0, character_sum_oracle, multiplicities_partition_space, real_eigenvector,
};
use gv_spectral::vector::{all_vectors, FqVector};
use num_bigint::BigInt;

fn small_grid(limit: u64) -> Vec<GraphParams> {
    let mut out = Vec::new();
    for q in [2u32, 3, 5] {
        for n in 1.. {
            if (q as u64).pow(n as u32) > limit {
                break;
            }
            for d in 1..=n + 1 {
                out.push(GraphParams::new(q, n, d).unwrap());
            }
        }
    }
    out
}

#[test]
fn every_character_matches_the_brute_force_sum() {
    for p in small_grid(300) {
        let s: Vec<FqVector> = all_vectors(p.q(), p.n())
            .filter(|u| (1..p.d()).contains(&u.weight()))
            .collect();
        let table = build_spectrum_level0(&p).expand(DEFAULT_BUDGET).unwrap();
        for (v, lambda) in table.entries() {
            assert_eq!(
                character_sum_oracle(&s, &v).unwrap(),
                BigInt::from(lambda),
                "{p} {v}"
            );
        }
        assert_eq!(table.trace(), BigInt::from(0));
        assert_eq!(
            table.trace_of_square(),
            BigInt::from(p.space_size()) * p.degree()
        );
        assert!(multiplicities_partition_space(&build_spectrum_level0(&p)));
    }
}

#[test]
fn weight_spectrum_agrees_with_explicit_graph_degree() {
    for p in small_grid(250) {
        let g = ExplicitGraph::gilbert(&p, DEFAULT_BUDGET).unwrap();
        let spectrum = build_spectrum_level0(&p);
        assert_eq!(
            BigInt::from(g.regular_degree().unwrap()),
            *spectrum.degree()
        );
        let (min, argmin) = spectrum.min_eigenvalue();
        assert_eq!(g.character_eigenvalue(&argmin).unwrap(), min);
    }
}

#[test]
fn real_eigenvector_is_an_eigenvector() {
    for p in small_grid(250) {
        let g = ExplicitGraph::gilbert(&p, DEFAULT_BUDGET).unwrap();
        for size in 1..=p.n() {
            let support: Vec<usize> = (p.n() - size..p.n()).collect();
            let b = real_eigenvector(&p, &support).unwrap();
            let entries = b.entries(DEFAULT_BUDGET).unwrap();
            let lambda: i64 = b.eigenvalue().try_into().unwrap();
            assert!(g.is_eigenvector(&entries, lambda), "{p} |A| = {size}");
            assert_eq!(entries.iter().sum::<i64>(), 0);
            let norm: i64 = entries.iter().map(|x| x * x).sum();
            assert_eq!(BigInt::from(norm), b.squared_norm());
        }
    }
}

#[test]
fn non_symmetric_sets_are_rejected_by_the_oracle() {
    let v = FqVector::parse(3, "11").unwrap();
    let s = [FqVector::parse(3, "10").unwrap()];
    assert!(character_sum_oracle(&s, &v).is_err());
}
