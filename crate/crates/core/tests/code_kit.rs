use gv_spectral::bounds::{ceil, floor, gv_bound, BoundReport};
use gv_spectral::code::{is_independent_set, LinearCode, MinDistance};
use gv_spectral::descent::run_algorithm1;
use gv_spectral::graph::{max_independent_set_oracle, ExplicitGraph};
use gv_spectral::math::{GraphParams, DEFAULT_BUDGET};
use gv_spectral::pchk;
use num_bigint::BigInt;

#[test]
fn constructed_codes_are_independent_and_linear() {
    for (q, max_n) in [(2u32, 10usize), (3, 6)] {
        for n in 2..=max_n {
            for d in 2..=n {
                let p = GraphParams::new(q, n, d).unwrap();
                let code = run_algorithm1(&p).unwrap().code().unwrap();
                let words = code.codewords(DEFAULT_BUDGET).unwrap();
                assert_eq!(BigInt::from(words.len()), BigInt::from(code.size()));
                assert!(is_independent_set(&p, &words).unwrap(), "{p}");

                let g = ExplicitGraph::gilbert(&p, DEFAULT_BUDGET).unwrap();
                let index: Vec<usize> = words
                    .iter()
                    .map(|w| w.to_index().unwrap() as usize)
                    .collect();
                for &i in &index {
                    assert!(g.neighbours(i).iter().all(|j| !index.contains(j)));
                }
                for a in words.iter().take(8) {
                    for b in words.iter().take(8) {
                        for c in 0..q {
                            assert!(code.contains(&a.add_scaled(b, c).unwrap()).unwrap());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn bounds_sandwich_exact_alpha() {
    for (q, max_n) in [(2u32, 6usize), (3, 3), (5, 2), (7, 2)] {
        for n in 1..=max_n {
            for d in 1..=n + 1 {
                let p = GraphParams::new(q, n, d).unwrap();
                let r = BoundReport::compute(&p, DEFAULT_BUDGET).unwrap();
                let (alpha, _) = max_independent_set_oracle(&p).unwrap();
                let alpha = BigInt::from(alpha);
                let size = r.constructed_code_size.clone().unwrap();
                // the Wilf-type bound beats GV exactly when (q-1) lambda_min + q <= 0
                let slack = &r.lambda_min * (q as i64 - 1) + q as i64;
                assert_eq!(
                    gv_bound(&p) <= r.wilf_cor27,
                    slack <= BigInt::from(0),
                    "{p}"
                );
                assert!(ceil(r.best_lower()) <= size, "{p}");
                assert!(size <= alpha, "{p}");
                assert!(alpha <= floor(&r.hoffman_upper), "{p}");
            }
        }
    }
}

#[test]
fn pchk_round_trip_preserves_code() {
    for (q, n, d) in [(2u32, 9usize, 4usize), (3, 6, 3), (5, 4, 3), (2, 5, 6)] {
        let p = GraphParams::new(q, n, d).unwrap();
        let code = run_algorithm1(&p).unwrap().code().unwrap();
        let text = pchk::to_string(&code);
        let back = pchk::parse(&text).unwrap();
        assert_eq!(back, code);
        assert_eq!(pchk::to_string(&back), text);
    }
    let trivial = LinearCode::new(2, 3, vec![]).unwrap();
    assert_eq!(
        trivial.min_distance(DEFAULT_BUDGET).unwrap(),
        MinDistance::Finite(1)
    );
}
