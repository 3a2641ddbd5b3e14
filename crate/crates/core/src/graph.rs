//! Simple undirected graphs on vertices `0..n`, with local complementation
//! and pivoting.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector, MAX_DIM};

mod graph6;

pub use graph6::{parse_graph6, to_graph6, GRAPH6_HEADER};

/// Simple undirected graph stored as symmetric adjacency bit-rows with a
/// zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: BitMatrix,
}

/// Two-colouring of a bipartite graph. Both sides are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: BitMatrix::zeros(n, n),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Accepts any alternating (symmetric, zero diagonal) square matrix.
    pub fn from_adjacency(adj: BitMatrix) -> Result<Graph> {
        if !adj.is_alternating() {
            return Err(Error::NotAlternating(
                "adjacency matrix must be symmetric with zero diagonal".into(),
            ));
        }
        Ok(Graph { adj })
    }

    pub fn order(&self) -> usize {
        self.adj.rows()
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> &BitVector {
        self.adj.row(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj.row(v).count_ones()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj.get(u, v)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.is_zero()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            self.adj
                .row(u)
                .ones()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn to_graph6(&self) -> String {
        to_graph6(self)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            });
        }
        Ok(())
    }

    fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        self.adj.set(u, v, present);
        self.adj.set(v, u, present);
    }

    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut keep: Vec<usize> = vertices.to_vec();
        for &v in &keep {
            self.check_vertex(v)?;
        }
        keep.sort_unstable();
        keep.dedup();
        let mut h = Graph::empty(keep.len());
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate().skip(a + 1) {
                if self.adj.get(u, v) {
                    h.set_edge(a, b, true);
                }
            }
        }
        Ok(h)
    }

    /// Deletes the given vertices and relabels the rest in increasing order.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<Graph> {
        for &v in removed {
            self.check_vertex(v)?;
        }
        let keep: Vec<usize> = (0..self.order()).filter(|v| !removed.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// BFS two-colouring, one component at a time; the smallest vertex of
    /// each component goes to `side_a`. `None` iff there is an odd cycle.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let n = self.order();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(false);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].expect("queued vertices are coloured");
                for v in self.adj.row(u).ones() {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (a, b): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| colour[v] == Some(false));
        Some(Bipartition {
            side_a: a,
            side_b: b,
        })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = BitVector::unit(n, 0);
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            for v in self.adj.row(u).ones() {
                if !seen.get(v) {
                    seen.set(v, true);
                    stack.push(v);
                }
            }
        }
        seen.count_ones() == n
    }

    /// Connected and acyclic, with at least one vertex.
    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.edge_count() + 1 == self.order() && self.is_connected()
    }

    /// Vertices of `other` are shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n1 = self.order();
        let mut g = Graph::empty(n1 + other.order());
        for (u, v) in self.edges() {
            g.set_edge(u, v, true);
        }
        for (u, v) in other.edges() {
            g.set_edge(n1 + u, n1 + v, true);
        }
        g
    }

    /// `G^v`: complements the subgraph induced by the neighbourhood of `v`.
    pub fn local_complement(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.local_complement_in_place(v);
        Ok(g)
    }

    fn local_complement_in_place(&mut self, v: usize) {
        let nbhd = self.adj.row(v).clone();
        for i in nbhd.ones() {
            let row = self.adj.row_mut(i);
            row.xor_assign(&nbhd);
            row.set(i, false);
        }
    }

    /// Edge-local complementation `G^(uv) = ((G^u)^v)^u`. Only defined on
    /// edges.
    pub fn pivot(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.adj.get(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.local_complement_in_place(u);
        g.local_complement_in_place(v);
        g.local_complement_in_place(u);
        Ok(g)
    }

    /// Pivots on `{u, v}` and then deletes both endpoints.
    pub fn pivot_minor_delete(&self, u: usize, v: usize) -> Result<Graph> {
        self.pivot(u, v)?.delete_vertices(&[u, v])
    }

    /// Minimum vertex cover of a tree via the usual two-state DP
    /// (vertex in the cover or not) over a rooted traversal.
    pub fn tree_vertex_cover_number(&self) -> Result<usize> {
        if !self.is_tree() {
            return Err(Error::NotATree);
        }
        let n = self.order();
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![0];
        parent[0] = 0;
        while let Some(u) = stack.pop() {
            order.push(u);
            for w in self.adj.row(u).ones() {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    stack.push(w);
                }
            }
        }
        // (best without u in the cover, best with u in the cover)
        let mut out = vec![0usize; n];
        let mut in_cover = vec![1usize; n];
        for &u in order.iter().rev() {
            if u == 0 {
                continue;
            }
            let p = parent[u];
            out[p] += in_cover[u];
            in_cover[p] += out[u].min(in_cover[u]);
        }
        Ok(out[0].min(in_cover[0]))
    }

    /// Parses `n` followed by whitespace-separated vertex pairs (0-based).
    /// `#` starts a comment. Repeated edges are accepted once.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut tokens = text.lines().enumerate().flat_map(|(idx, line)| {
            let body = line.split('#').next().unwrap_or("");
            body.split_whitespace().map(move |t| (idx + 1, t))
        });
        let (first_line, first) = tokens.next().ok_or(Error::EdgeList {
            line: 1,
            message: "missing vertex count".into(),
        })?;
        let n: usize = first.parse().map_err(|_| Error::EdgeList {
            line: first_line,
            message: format!("invalid vertex count {first:?}"),
        })?;
        if n > MAX_DIM {
            return Err(Error::TooLarge {
                what: "graph order",
                n,
                cap: MAX_DIM,
            });
        }
        let mut g = Graph::empty(n);
        let parse_vertex = |line: usize, tok: &str| -> Result<usize> {
            let v: usize = tok.parse().map_err(|_| Error::EdgeList {
                line,
                message: format!("invalid vertex {tok:?}"),
            })?;
            if v >= n {
                return Err(Error::EdgeList {
                    line,
                    message: format!("vertex {v} out of range for order {n}"),
                });
            }
            Ok(v)
        };
        while let Some((line, a)) = tokens.next() {
            let Some((_, b)) = tokens.next() else {
                return Err(Error::EdgeList {
                    line,
                    message: "edge is missing its second endpoint".into(),
                });
            };
            let (u, v) = (parse_vertex(line, a)?, parse_vertex(line, b)?);
            if u == v {
                return Err(Error::EdgeList {
                    line,
                    message: format!("loop at vertex {u}"),
                });
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.order());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.order(),
            self.edges().collect::<Vec<_>>()
        )
    }
}
