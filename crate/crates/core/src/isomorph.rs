//! Canonical labelling and isomorphism testing for graphs on at most 64
//! vertices.
//!
//! The search is a small individualisation-refinement scheme. Each node of
//! the search tree refines an ordered vertex colouring to an equitable one,
//! records a label-invariant summary of it (cell sizes and the quotient
//! matrix), then branches on the vertices of the first smallest
//! non-singleton cell. A leaf is a discrete colouring, i.e. a vertex
//! ordering. The canonical form is the leaf with the smallest
//! `(trace, adjacency rows)` key.
//!
//! Three prunings keep the tree small: subtrees whose trace already exceeds
//! the best leaf are cut; a leaf that reproduces the first or the best key
//! yields an automorphism, and the search jumps back to the node where the
//! two leaves' paths split; and orbits of the automorphisms found so far
//! skip equivalent siblings.

use std::cmp::Ordering;

use thiserror::Error;

use crate::graph::Graph;

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IsoError {
    #[error("graph has {0} vertices; the limit is {MAX_VERTICES}")]
    TooLarge(usize),
}

/// Canonical representative of an isomorphism class, plus the relabelling
/// that maps the input onto it.
///
/// Equality compares only the canonical graph, so two forms are equal iff
/// the inputs are isomorphic.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    n: usize,
    edges: Vec<(usize, usize)>,
    labeling: Vec<usize>,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Canonical edges, 1-based, `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `labeling[v]` is the canonical position (0-based) of input vertex
    /// `v + 1`. Suitable for [`Graph::relabel`].
    pub fn labeling(&self) -> &[usize] {
        &self.labeling
    }

    pub fn graph(&self) -> Graph {
        Graph::from_edge_list(self.n, self.edges.iter().copied()).expect("canonical edges are valid")
    }
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for CanonicalForm {}

impl std::hash::Hash for CanonicalForm {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, IsoError> {
    let n = g.vertex_count();
    if n > MAX_VERTICES {
        return Err(IsoError::TooLarge(n));
    }
    let mut adj = vec![0u64; n];
    for &(i, j) in g.edges() {
        adj[i - 1] |= 1 << (j - 1);
        adj[j - 1] |= 1 << (i - 1);
    }
    let mut search = Search { n, adj, best: None, first: None, autos: Vec::new() };
    let colors = vec![0u32; n];
    let mut trace = Vec::new();
    let mut fixed = Vec::new();
    search.visit(colors, &mut trace, &mut fixed, Ordering::Equal);

    let order = match search.best {
        Some(leaf) => leaf.order,
        None => Vec::new(),
    };
    let mut labeling = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        labeling[v] = pos;
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(i, j)| {
            let (a, b) = (labeling[i - 1] + 1, labeling[j - 1] + 1);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    Ok(CanonicalForm { n, edges, labeling })
}

/// `Some(map)` when `g` and `h` are isomorphic, where `map[v]` is the
/// 0-based vertex of `h` matched with vertex `v + 1` of `g`. The map is
/// checked edge by edge before it is returned.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>, IsoError> {
    for x in [g, h] {
        if x.vertex_count() > MAX_VERTICES {
            return Err(IsoError::TooLarge(x.vertex_count()));
        }
    }
    if g.vertex_count() != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(None);
    }
    let cg = canonical_form(g)?;
    let ch = canonical_form(h)?;
    if cg != ch {
        return Ok(None);
    }
    let mut h_at = vec![0; h.vertex_count()];
    for (v, &pos) in ch.labeling.iter().enumerate() {
        h_at[pos] = v;
    }
    let map: Vec<usize> = cg.labeling.iter().map(|&pos| h_at[pos]).collect();
    assert_eq!(&g.relabel(&map), h, "certifying bijection failed validation");
    Ok(Some(map))
}

struct Leaf {
    fixed: Vec<usize>,
    trace: Vec<Vec<u32>>,
    rows: Vec<u64>,
    order: Vec<usize>,
}

struct Search {
    n: usize,
    adj: Vec<u64>,
    best: Option<Leaf>,
    first: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

impl Search {
    /// `state` is how the trace so far compares with the best leaf's trace.
    /// Returns `Some(d)` to abandon every node deeper than `d`.
    fn visit(
        &mut self,
        colors: Vec<u32>,
        trace: &mut Vec<Vec<u32>>,
        fixed: &mut Vec<usize>,
        state: Ordering,
    ) -> Option<usize> {
        let colors = self.refine(colors);
        let inv = self.invariant(&colors);
        let depth = trace.len();

        let mut state = state;
        if state == Ordering::Equal {
            if let Some(best) = &self.best {
                state = match best.trace.get(depth) {
                    Some(b) => inv.cmp(b),
                    // the best leaf stopped here, and traces sort before leaves
                    None => Ordering::Less,
                };
            }
        }
        if state == Ordering::Greater {
            return None;
        }
        trace.push(inv);

        let cell_count = colors.iter().copied().max().map_or(0, |c| c as usize + 1);
        if cell_count == self.n {
            let jump = self.leaf(&colors, trace, fixed, state);
            trace.pop();
            return jump;
        }

        let target = self.target_cell(&colors);
        let members: Vec<usize> = (0..self.n).filter(|&v| colors[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &members {
            if !explored.is_empty() && self.same_orbit(v, &explored, fixed) {
                continue;
            }
            explored.push(v);
            let child = individualize(&colors, v);
            fixed.push(v);
            // the best leaf may have changed while exploring earlier siblings
            let child_state = if state == Ordering::Less && self.best_trace_starts_with(trace) {
                Ordering::Equal
            } else {
                state
            };
            let jump = self.visit(child, trace, fixed, child_state);
            fixed.pop();
            if let Some(d) = jump {
                if d < fixed.len() {
                    trace.pop();
                    return Some(d);
                }
            }
        }
        trace.pop();
        None
    }

    fn best_trace_starts_with(&self, trace: &[Vec<u32>]) -> bool {
        self.best.as_ref().is_some_and(|b| b.trace.len() >= trace.len() && b.trace[..trace.len()] == *trace)
    }

    fn leaf(&mut self, colors: &[u32], trace: &[Vec<u32>], fixed: &[usize], state: Ordering) -> Option<usize> {
        let mut order = vec![0usize; self.n];
        for (v, &c) in colors.iter().enumerate() {
            order[c as usize] = v;
        }
        let rows: Vec<u64> = order
            .iter()
            .map(|&v| {
                let mut row = 0u64;
                for (pos, &u) in order.iter().enumerate() {
                    if self.adj[v] >> u & 1 == 1 {
                        row |= 1 << pos;
                    }
                }
                row
            })
            .collect();
        let leaf = Leaf { fixed: fixed.to_vec(), trace: trace.to_vec(), rows, order };

        if let Some(first) = &self.first {
            if first.trace == leaf.trace && first.rows == leaf.rows {
                self.autos.push(automorphism(&leaf.order, &first.order));
                return Some(common_prefix(&first.fixed, &leaf.fixed));
            }
        }
        let verdict = match (&self.best, state) {
            (None, _) | (_, Ordering::Less) => Ordering::Less,
            (Some(best), _) => {
                if best.trace.len() != leaf.trace.len() {
                    Ordering::Greater
                } else {
                    leaf.rows.cmp(&best.rows)
                }
            }
        };
        match verdict {
            Ordering::Less => {
                if self.first.is_none() {
                    self.first = Some(Leaf {
                        fixed: leaf.fixed.clone(),
                        trace: leaf.trace.clone(),
                        rows: leaf.rows.clone(),
                        order: leaf.order.clone(),
                    });
                }
                self.best = Some(leaf);
                None
            }
            Ordering::Equal => {
                let best = self.best.as_ref().unwrap();
                self.autos.push(automorphism(&leaf.order, &best.order));
                Some(common_prefix(&best.fixed, &leaf.fixed))
            }
            Ordering::Greater => None,
        }
    }

    /// Smallest non-singleton cell, ties to the lowest colour.
    fn target_cell(&self, colors: &[u32]) -> u32 {
        let mut sizes = vec![0usize; self.n];
        for &c in colors {
            sizes[c as usize] += 1;
        }
        sizes
            .iter()
            .enumerate()
            .filter(|(_, &s)| s > 1)
            .min_by_key(|(c, &s)| (s, *c))
            .map(|(c, _)| c as u32)
            .expect("non-discrete colouring has a non-singleton cell")
    }

    /// Whether `v` shares an orbit with an explored sibling under the
    /// automorphisms found so far that fix every individualised vertex.
    fn same_orbit(&self, v: usize, explored: &[usize], fixed: &[usize]) -> bool {
        let gens: Vec<&Vec<usize>> =
            self.autos.iter().filter(|a| fixed.iter().all(|&f| a[f] == f)).collect();
        if gens.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in gens {
            for (x, &y) in g.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    /// Equitable refinement. Colours stay ordered: a vertex's new colour
    /// is the rank of `(old colour, sorted neighbour colours)`.
    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        let mut count = distinct(&colors);
        loop {
            let sigs: Vec<(u32, Vec<u32>)> = (0..self.n)
                .map(|v| {
                    let mut nb: Vec<u32> = (0..self.n).filter(|&u| self.adj[v] >> u & 1 == 1).map(|u| colors[u]).collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            let mut sorted: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
            sorted.sort();
            sorted.dedup();
            let next: Vec<u32> =
                sigs.iter().map(|s| sorted.binary_search(&s).expect("present") as u32).collect();
            let next_count = sorted.len();
            colors = next;
            if next_count == count {
                return colors;
            }
            count = next_count;
        }
    }

    /// Cell sizes followed by the quotient matrix of an equitable colouring.
    fn invariant(&self, colors: &[u32]) -> Vec<u32> {
        let k = distinct(colors);
        let mut sizes = vec![0u32; k];
        let mut rep = vec![usize::MAX; k];
        for (v, &c) in colors.iter().enumerate() {
            sizes[c as usize] += 1;
            if rep[c as usize] == usize::MAX {
                rep[c as usize] = v;
            }
        }
        let mut out = sizes;
        for &r in &rep {
            let mut row = vec![0u32; k];
            for u in 0..self.n {
                if self.adj[r] >> u & 1 == 1 {
                    row[colors[u] as usize] += 1;
                }
            }
            out.extend(row);
        }
        out
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Splits `v` off in front of the rest of its cell.
fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let cell = colors[v];
    let raw: Vec<u32> = colors
        .iter()
        .enumerate()
        .map(|(u, &c)| if c == cell && u != v { 2 * c + 1 } else { 2 * c })
        .collect();
    let mut sorted = raw.clone();
    sorted.sort_unstable();
    sorted.dedup();
    raw.iter().map(|c| sorted.binary_search(c).unwrap() as u32).collect()
}

/// The permutation sending `from[p]` to `to[p]` for every position `p`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut perm = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        perm[a] = b;
    }
    perm
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, star};

    #[test]
    fn relabelled_edge() {
        let k2 = complete(2);
        assert_eq!(canonical_form(&k2).unwrap(), canonical_form(&k2.relabel(&[1, 0])).unwrap());
    }

    #[test]
    fn labeling_reproduces_canonical_edges() {
        let g = Graph::from_edge_list(6, [(1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (5, 6)]).unwrap();
        let cf = canonical_form(&g).unwrap();
        assert_eq!(g.relabel(cf.labeling()).edges(), cf.edges());
    }

    #[test]
    fn cospectral_but_not_isomorphic() {
        let c4k1 = cycle(4).disjoint_union(&Graph::empty(1));
        assert_eq!(are_isomorphic(&star(4), &c4k1).unwrap(), None);
        let g = Graph::from_edge_list(6, [(1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (5, 6)]).unwrap();
        let h = Graph::from_edge_list(6, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (3, 6), (5, 6)]).unwrap();
        assert_ne!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn symmetric_graphs() {
        // vertex-transitive and empty graphs exercise automorphism pruning
        for g in [complete(12), Graph::empty(30), cycle(20), cycle(10).disjoint_union(&cycle(10))] {
            let n = g.vertex_count();
            let perm: Vec<usize> = (0..n).map(|v| (v * 7 + 3) % n).collect();
            assert!(are_isomorphic(&g, &g.relabel(&perm)).unwrap().is_some());
        }
        assert!(are_isomorphic(&cycle(12), &cycle(6).disjoint_union(&cycle(6))).unwrap().is_none());
    }

    #[test]
    fn size_ceiling() {
        assert_eq!(canonical_form(&Graph::empty(65)).unwrap_err(), IsoError::TooLarge(65));
        assert!(canonical_form(&Graph::empty(64)).is_ok());
    }

    #[test]
    fn empty_graph() {
        let cf = canonical_form(&Graph::empty(0)).unwrap();
        assert_eq!(cf.vertex_count(), 0);
    }
}
