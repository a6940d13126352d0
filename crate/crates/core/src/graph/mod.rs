//! Simple undirected graphs with 1-based vertex labels.
//!
//! Edges are kept only as ordered pairs `(i, j)` with `i < j`, sorted and
//! deduplicated. That ordered set is also the domain of a lift signature,
//! so a [`Graph`] and its signatures always agree on edge identity.

mod edgelist;
mod graph6;

pub use edgelist::{emit_edge_list, parse_edge_list};
pub use graph6::{emit_graph6, parse_graph6};

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 1..={2}")]
    OutOfRange(usize, usize, usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("malformed graph6 at byte {offset}: {reason}")]
    MalformedGraph6 { offset: usize, reason: String },
    #[error("edge list line {line}: {reason}")]
    MalformedEdgeList { line: usize, reason: String },
}

/// A simple undirected graph on vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    /// Builds a graph from 1-based endpoint pairs in any orientation.
    /// Repeated pairs collapse to one edge.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (i, j) in pairs {
            if i < 1 || j < 1 || i > n || j > n {
                return Err(GraphError::OutOfRange(i, j, n));
            }
            if i == j {
                return Err(GraphError::LoopEdge(i));
            }
            set.insert((i.min(j), i.max(j)));
        }
        Ok(Graph { n, edges: set.into_iter().collect() })
    }

    /// Graph whose edges are the nonzero upper-triangle entries of a square
    /// 0/1 matrix. Row `r` becomes vertex `r + 1`.
    pub fn from_adjacency(rows: &[Vec<u8>]) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut pairs = Vec::new();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GraphError::MalformedEdgeList {
                    line: r + 1,
                    reason: format!("row has {} entries, expected {n}", row.len()),
                });
            }
            for (c, &x) in row.iter().enumerate() {
                if x != 0 && r < c {
                    pairs.push((r + 1, c + 1));
                }
            }
        }
        Graph::from_edge_list(n, pairs)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edges `(i, j)`, `i < j`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Position of edge `{i, j}` in [`Graph::edges`], if present.
    pub fn edge_index(&self, i: usize, j: usize) -> Option<usize> {
        let key = (i.min(j), i.max(j));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edge_index(i, j).is_some()
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let mut m = vec![vec![0u8; self.n]; self.n];
        for &(i, j) in &self.edges {
            m[i - 1][j - 1] = 1;
            m[j - 1][i - 1] = 1;
        }
        m
    }

    /// 0-based neighbour lists.
    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            adj[i - 1].push(j - 1);
            adj[j - 1].push(i - 1);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Degree of each vertex, indexed 0-based.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(i, j) in &self.edges {
            deg[i - 1] += 1;
            deg[j - 1] += 1;
        }
        deg
    }

    /// Degrees sorted in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = self.degrees();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        deg
    }

    /// Number of triangles.
    pub fn triangle_count(&self) -> usize {
        let adj = self.adjacency_matrix();
        let mut count = 0;
        for &(i, j) in &self.edges {
            for k in (j + 1)..=self.n {
                if adj[i - 1][k - 1] == 1 && adj[j - 1][k - 1] == 1 {
                    count += 1;
                }
            }
        }
        count
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(i, j)| (i + shift, j + shift)));
        edges.sort_unstable();
        Graph { n: self.n + other.n, edges }
    }

    /// Relabels vertex `v` (1-based) as `perm[v - 1] + 1`.
    ///
    /// # Panics
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "relabeling has wrong length");
        let mut seen = vec![false; self.n];
        for &p in perm {
            assert!(p < self.n && !seen[p], "relabeling is not a permutation");
            seen[p] = true;
        }
        let pairs = self.edges.iter().map(|&(i, j)| (perm[i - 1] + 1, perm[j - 1] + 1));
        Graph::from_edge_list(self.n, pairs).expect("relabeling preserves validity")
    }

    /// Matrix text form: `n` lines of `n` space-separated 0/1 digits.
    pub fn matrix_text(&self) -> String {
        let mut out = String::new();
        for row in self.adjacency_matrix() {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    let pairs = (1..=n).flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)));
    Graph::from_edge_list(n, pairs).unwrap()
}

/// Cycle `1 - 2 - ... - n - 1`, for `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let pairs = (1..=n).map(|i| (i, i % n + 1));
    Graph::from_edge_list(n, pairs).unwrap()
}

/// Path `1 - 2 - ... - n`.
pub fn path(n: usize) -> Graph {
    let pairs = (1..n).map(|i| (i, i + 1));
    Graph::from_edge_list(n, pairs).unwrap()
}

/// Star `K_{1,k}` with centre 1.
pub fn star(k: usize) -> Graph {
    let pairs = (2..=k + 1).map(|j| (1, j));
    Graph::from_edge_list(k + 1, pairs).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base_g() -> Graph {
        Graph::from_edge_list(6, [(1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (5, 6)]).unwrap()
    }

    fn base_h() -> Graph {
        Graph::from_edge_list(6, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (3, 6), (5, 6)]).unwrap()
    }

    #[test]
    fn single_edge() {
        let k2 = Graph::from_edge_list(2, [(1, 2)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert_eq!(k2.adjacency_matrix(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(k2.degree_sequence(), vec![1, 1]);
    }

    #[test]
    fn edges_are_canonical_and_deduplicated() {
        let g = Graph::from_edge_list(3, [(2, 1), (1, 2), (3, 2)]).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (2, 3)]);
    }

    #[test]
    fn rejects_bad_endpoints() {
        assert_eq!(Graph::from_edge_list(3, [(1, 4)]), Err(GraphError::OutOfRange(1, 4, 3)));
        assert_eq!(Graph::from_edge_list(3, [(0, 2)]), Err(GraphError::OutOfRange(0, 2, 3)));
        assert_eq!(Graph::from_edge_list(3, [(2, 2)]), Err(GraphError::LoopEdge(2)));
    }

    #[test]
    fn fixture_graphs() {
        let g = base_g();
        let h = base_h();
        assert_eq!(g.edge_count(), 7);
        assert_eq!(h.edge_count(), 7);
        assert_eq!(g.degree_sequence(), vec![3, 3, 3, 3, 1, 1]);
        assert_eq!(h.degree_sequence(), vec![5, 2, 2, 2, 2, 1]);
        let a = g.adjacency_matrix();
        assert_eq!(a[1], vec![1, 0, 1, 1, 0, 0]);
        assert_eq!(a[4], vec![0, 0, 1, 1, 0, 1]);
    }

    #[test]
    fn relabelled_c4_has_eight_ones() {
        let c4 = Graph::from_edge_list(4, [(1, 3), (3, 2), (2, 4), (4, 1)]).unwrap();
        let ones: u32 = c4.adjacency_matrix().iter().flatten().map(|&x| x as u32).sum();
        assert_eq!(ones, 8);
    }

    #[test]
    fn triangles_and_unions() {
        assert_eq!(complete(4).triangle_count(), 4);
        assert_eq!(base_g().triangle_count(), 2);
        let u = cycle(4).disjoint_union(&Graph::empty(1));
        assert_eq!(u.vertex_count(), 5);
        assert_eq!(u.degree_sequence(), vec![2, 2, 2, 2, 0]);
    }

    #[test]
    fn relabel_roundtrip() {
        let g = base_h();
        let perm = vec![5, 0, 3, 1, 2, 4];
        let mut inv = vec![0; 6];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        assert_eq!(g.relabel(&perm).relabel(&inv), g);
    }
}
