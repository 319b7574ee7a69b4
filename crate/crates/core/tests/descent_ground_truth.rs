use gv_spectral::bounds::{ceil, gv_bound};
use gv_spectral::descent::{run_algorithm1, DescentState};
use gv_spectral::graph::ExplicitGraph;
use gv_spectral::math::{GraphParams, DEFAULT_BUDGET};
use num_bigint::BigInt;

#[test]
fn level_graphs_match_the_tables() {
    for (q, max_n) in [(2u32, 8usize), (3, 5), (5, 3)] {
        for n in 1..=max_n {
            for d in 1..=n + 1 {
                let p = GraphParams::new(q, n, d).unwrap();
                let mut state = DescentState::new(&p, DEFAULT_BUDGET).unwrap();
                loop {
                    let g =
                        ExplicitGraph::kernel_subgraph(&p, state.chosen(), DEFAULT_BUDGET).unwrap();
                    let t = state.t();
                    assert_eq!(
                        BigInt::from(g.vertices().len()),
                        BigInt::from(q).pow((n - t) as u32)
                    );
                    assert_eq!(
                        BigInt::from(g.regular_degree().unwrap()),
                        *state.degree(),
                        "{p} t={t}"
                    );
                    for (v, lambda) in state.spectrum().entries() {
                        assert_eq!(g.character_eigenvalue(&v).unwrap(), BigInt::from(lambda));
                    }
                    if state.is_terminated() {
                        break;
                    }
                    state.step().unwrap();
                }
            }
        }
    }
}

#[test]
fn descent_runs_are_deterministic_and_sound() {
    for (q, n, d) in [
        (2u32, 13usize, 5usize),
        (3, 8, 4),
        (5, 5, 3),
        (7, 4, 3),
        (2, 16, 6),
    ] {
        let p = GraphParams::new(q, n, d).unwrap();
        let a = run_algorithm1(&p).unwrap();
        let b = run_algorithm1(&p).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        let code = a.code().unwrap().verify(DEFAULT_BUDGET).unwrap();
        assert!(code.verified_min_distance().unwrap().at_least(d), "{p}");
        assert_eq!(code.dimension(), n - a.s());
        let last = a.final_bound().unwrap();
        assert!(a.code_size() >= ceil(last));
        assert!(*last > gv_bound(&p));
        assert!(a.degree_residual() == BigInt::from(0));
    }
}
