//! Explicit Gilbert graphs for small instances, used as ground truth for the
//! spectral machinery and for exact independence numbers.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::math::{check_budget, GraphParams};
use crate::spectrum::character_sum_oracle;
use crate::vector::{all_vectors, FqVector};

/// Largest vertex count accepted by [`max_independent_set_oracle`].
pub const MIS_LIMIT: u64 = 64;

/// The graph on a list of vertices of `F_q^n`, with an edge between two vectors at
/// Hamming distance `1..d-1`.
#[derive(Debug, Clone)]
pub struct ExplicitGraph {
    params: GraphParams,
    vertices: Vec<FqVector>,
    adjacency: Vec<Vec<usize>>,
}

impl ExplicitGraph {
    /// The full graph `G_{q,n,d}`.
    pub fn gilbert(params: &GraphParams, budget: u64) -> Result<Self> {
        check_budget(&params.space_size(), budget)?;
        Ok(Self::induced(
            params,
            all_vectors(params.q(), params.n()).collect(),
        ))
    }

    /// The subgraph induced on `{u : <u, h> = 0 for every h in checks}`.
    pub fn kernel_subgraph(params: &GraphParams, checks: &[FqVector], budget: u64) -> Result<Self> {
        check_budget(&params.space_size(), budget)?;
        let mut vertices = Vec::new();
        for u in all_vectors(params.q(), params.n()) {
            if checks
                .iter()
                .try_fold(true, |ok, h| Ok::<_, Error>(ok && h.dot(&u)? == 0))?
            {
                vertices.push(u);
            }
        }
        Ok(Self::induced(params, vertices))
    }

    fn induced(params: &GraphParams, vertices: Vec<FqVector>) -> Self {
        let d = params.d();
        let adjacency = vertices
            .iter()
            .map(|u| {
                vertices
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| {
                        let dist = u.distance(v).expect("same space");
                        dist >= 1 && dist < d
                    })
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        Self {
            params: *params,
            vertices,
            adjacency,
        }
    }

    pub fn params(&self) -> &GraphParams {
        &self.params
    }

    pub fn vertices(&self) -> &[FqVector] {
        &self.vertices
    }

    pub fn neighbours(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    /// The common degree, or `None` if the graph is not regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adjacency.first().map_or(0, |a| a.len());
        self.adjacency
            .iter()
            .all(|a| a.len() == first)
            .then_some(first)
    }

    /// Nonzero vertices adjacent to zero. For a subspace this is the Cayley
    /// difference set of the induced graph.
    pub fn difference_set(&self) -> Vec<FqVector> {
        self.vertices
            .iter()
            .filter(|u| (1..self.params.d()).contains(&u.weight()))
            .cloned()
            .collect()
    }

    /// `sum_{u in S} omega^<u, v>` for the difference set `S` of this graph.
    pub fn character_eigenvalue(&self, v: &FqVector) -> Result<BigInt> {
        character_sum_oracle(&self.difference_set(), v)
    }

    /// Checks that `sum_u A[v][u] b(u) = lambda b(v)` for a real vector `b` on the vertices.
    pub fn is_eigenvector(&self, b: &[i64], lambda: i64) -> bool {
        b.len() == self.vertices.len()
            && self
                .adjacency
                .iter()
                .zip(b)
                .all(|(nb, &bv)| nb.iter().map(|&j| b[j]).sum::<i64>() == lambda * bv)
    }
}

/// Exact independence number of `G_{q,n,d}` with one maximum independent set.
/// Limited to `q^n <= 64`.
pub fn max_independent_set_oracle(params: &GraphParams) -> Result<(usize, Vec<FqVector>)> {
    check_budget(&params.space_size(), MIS_LIMIT)?;
    let g = ExplicitGraph::gilbert(params, MIS_LIMIT)?;
    let nv = g.vertices.len();
    // compatibility masks: j is compatible with i when they are not adjacent
    let all: u64 = if nv == 64 { u64::MAX } else { (1u64 << nv) - 1 };
    let compat: Vec<u64> = (0..nv)
        .map(|i| {
            let mut m = all & !(1u64 << i);
            for &j in g.neighbours(i) {
                m &= !(1u64 << j);
            }
            m
        })
        .collect();

    let mut best = 0u64;
    expand(0, all, &compat, &mut best);
    let witness: Vec<FqVector> = (0..nv)
        .filter(|&i| best >> i & 1 == 1)
        .map(|i| g.vertices[i].clone())
        .collect();
    Ok((witness.len(), witness))
}

// Max clique in the compatibility graph; a greedy colouring of the candidates
// into mutually incompatible classes bounds how many more can be added.
fn expand(current: u64, candidates: u64, compat: &[u64], best: &mut u64) {
    if candidates == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    let (order, colours) = colour(candidates, compat);
    let mut remaining = candidates;
    for (&v, &c) in order.iter().zip(&colours).rev() {
        if current.count_ones() + c <= best.count_ones() {
            return;
        }
        let bit = 1u64 << v;
        expand(current | bit, remaining & compat[v], compat, best);
        remaining &= !bit;
    }
}

fn colour(mut candidates: u64, compat: &[u64]) -> (Vec<usize>, Vec<u32>) {
    let mut order = Vec::new();
    let mut colours = Vec::new();
    let mut c = 0;
    while candidates != 0 {
        c += 1;
        let mut avail = candidates;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1u64 << v) & !compat[v];
            candidates &= !(1u64 << v);
            order.push(v);
            colours.push(c);
        }
    }
    (order, colours)
}
