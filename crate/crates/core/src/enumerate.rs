//! Graph sources for exhaustive and randomized checking.

use rand::Rng;

use crate::graph::Graph;

/// Vertex pairs `(i, j)`, `i < j`, in the order used to index labeled graphs.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Every labeled graph on `n` vertices, `2^(n(n-1)/2)` in total.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = pairs(n);
    assert!(pairs.len() < 64, "too many labeled graphs for n = {n}");
    (0u64..1 << pairs.len()).map(move |mask| graph_from_mask(n, &pairs, mask))
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, &e)| e);
    Graph::from_edges(n, edges).expect("pairs are valid edges")
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let p = p.clamp(0.0, 1.0);
    let edges: Vec<_> = pairs(n)
        .into_iter()
        .filter(|_| rng.random_bool(p))
        .collect();
    Graph::from_edges(n, edges).expect("pairs are valid edges")
}

/// Uniform labeled tree via a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    assert!(n >= 1, "a tree needs at least one vertex");
    if n == 1 {
        return Graph::empty(1);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).expect("Prüfer decoding yields valid edges")
}

/// Random bipartite graph: each vertex joins side A with probability 1/2,
/// cross pairs are edges with probability `p`.
pub fn random_bipartite<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
    let p = p.clamp(0.0, 1.0);
    let edges: Vec<_> = pairs(n)
        .into_iter()
        .filter(|&(i, j)| side[i] != side[j] && rng.random_bool(p))
        .collect();
    Graph::from_edges(n, edges).expect("pairs are valid edges")
}
