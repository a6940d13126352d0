//! Voltage signatures and the lifted graph `G(s)`.
//!
//! A signature assigns a group element to every canonical edge `(i, j)`,
//! `i < j`, of a base graph. The lift has vertex set `V x [d]` where `d`
//! is the fibre size, and the edge `(i, j)` with voltage `g` contributes
//! the perfect matching `(i, a) ~ (j, b)` whenever `g` sends position `a`
//! to position `b`. Traversing the edge from `j` to `i` uses `g⁻¹`.
//!
//! Lift vertex `(i, a)` (base vertex `i` 1-based, fibre position `a`
//! 0-based) is numbered `(i - 1)·d + a + 1`.
//!
//! Signature files look like
//!
//! ```text
//! group Z2
//! # i j : element
//! 1 3 : 0
//! 1 4 : 0
//! 2 3 : 1
//! 2 4 : 0
//! ```

use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgebraError, GroupElement, GroupSpec};
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LiftError {
    #[error("line {line}: bad group header: {reason}")]
    BadGroupHeader { line: usize, reason: String },
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("line {line}: bad element: {source}")]
    BadElement { line: usize, source: AlgebraError },
    #[error("line {line}: ({i}, {j}) is not an edge of the base graph")]
    UnknownEdge { line: usize, i: usize, j: usize },
    #[error("line {line}: edge ({i}, {j}) listed more than once")]
    DuplicateEdge { line: usize, i: usize, j: usize },
    #[error("edge ({0}, {1}) has no voltage")]
    MissingEdge(usize, usize),
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Voltage assignment on the canonical edges of a base graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    group: GroupSpec,
    base_n: usize,
    edges: Vec<(usize, usize)>,
    values: Vec<GroupElement>,
}

impl Signature {
    /// Voltages given in the order of `base.edges()`.
    pub fn new(base: &Graph, group: GroupSpec, values: Vec<GroupElement>) -> Result<Self, LiftError> {
        if values.len() != base.edge_count() {
            return Err(LiftError::InvalidSignature(format!(
                "{} voltages for {} edges",
                values.len(),
                base.edge_count()
            )));
        }
        for v in &values {
            group.ensure(v)?;
        }
        Ok(Signature { group, base_n: base.vertex_count(), edges: base.edges().to_vec(), values })
    }

    /// Voltages keyed by edge. Every base edge must appear exactly once.
    pub fn from_pairs<I>(base: &Graph, group: GroupSpec, pairs: I) -> Result<Self, LiftError>
    where
        I: IntoIterator<Item = ((usize, usize), GroupElement)>,
    {
        let mut slots: Vec<Option<GroupElement>> = vec![None; base.edge_count()];
        for (line, ((i, j), g)) in pairs.into_iter().enumerate() {
            let idx = base.edge_index(i, j).ok_or(LiftError::UnknownEdge { line: line + 1, i, j })?;
            if slots[idx].is_some() {
                return Err(LiftError::DuplicateEdge { line: line + 1, i, j });
            }
            group.ensure(&g)?;
            slots[idx] = Some(g);
        }
        let values = collect_slots(base, slots)?;
        Signature::new(base, group, values)
    }

    /// Every edge carries `g`.
    pub fn constant(base: &Graph, group: GroupSpec, g: GroupElement) -> Result<Self, LiftError> {
        group.ensure(&g)?;
        let values = vec![g; base.edge_count()];
        Signature::new(base, group, values)
    }

    pub fn identity(base: &Graph, group: GroupSpec) -> Self {
        let id = group.identity();
        Signature::constant(base, group, id).expect("identity is in the group")
    }

    /// Signature with lexicographic index `rank` among all
    /// `|Gr|^|E|` signatures; the first edge is the most significant digit
    /// and group elements are ordered as in [`GroupSpec::elements`].
    pub fn from_rank(base: &Graph, group: &GroupSpec, rank: u64) -> Result<Self, LiftError> {
        let elements = group.elements();
        let q = elements.len() as u64;
        let m = base.edge_count();
        let total = signature_count(group, m);
        if total.is_some_and(|t| rank >= t) {
            return Err(LiftError::InvalidSignature(format!("rank {rank} out of range")));
        }
        let mut digits = vec![0usize; m];
        let mut r = rank;
        for d in digits.iter_mut().rev() {
            *d = (r % q) as usize;
            r /= q;
        }
        let values = digits.into_iter().map(|d| elements[d].clone()).collect();
        Signature::new(base, group.clone(), values)
    }

    /// Lexicographic index, the inverse of [`Signature::from_rank`].
    pub fn rank(&self) -> u64 {
        let q = self.group.order();
        self.values.iter().fold(0u64, |acc, v| {
            acc * q + self.group.element_index(v).expect("validated element") as u64
        })
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Voltages aligned with [`Signature::edges`].
    pub fn values(&self) -> &[GroupElement] {
        &self.values
    }

    /// `s(i, j)` for a canonical edge `i < j`.
    pub fn get(&self, i: usize, j: usize) -> Option<&GroupElement> {
        let idx = self.edges.binary_search(&(i, j)).ok()?;
        Some(&self.values[idx])
    }

    /// Voltage read when walking from `from` to `to`: `s(from, to)` if
    /// `from < to`, otherwise its inverse.
    pub fn voltage(&self, from: usize, to: usize) -> Option<GroupElement> {
        if from < to {
            self.get(from, to).cloned()
        } else {
            self.get(to, from).map(|g| self.group.inverse_unchecked(g))
        }
    }

    /// True when this signature's domain is exactly the edge set of `base`.
    pub fn is_on(&self, base: &Graph) -> bool {
        self.base_n == base.vertex_count() && self.edges == base.edges()
    }

    /// Signature file text.
    pub fn to_text(&self) -> String {
        let mut out = format!("group {}\n", self.group);
        for (&(i, j), g) in self.edges.iter().zip(&self.values) {
            out.push_str(&format!("{i} {j} : {g}\n"));
        }
        out
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Signature[{}]{{", self.group)?;
        for (k, (&(i, j), g)) in self.edges.iter().zip(&self.values).enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({i},{j}):{g}")?;
        }
        write!(f, "}}")
    }
}

/// `|Gr|^m`, or `None` if it does not fit in a `u64`.
pub fn signature_count(group: &GroupSpec, edge_count: usize) -> Option<u64> {
    let q = group.order();
    (0..edge_count).try_fold(1u64, |acc, _| acc.checked_mul(q))
}

fn collect_slots(base: &Graph, slots: Vec<Option<GroupElement>>) -> Result<Vec<GroupElement>, LiftError> {
    slots
        .into_iter()
        .zip(base.edges())
        .map(|(slot, &(i, j))| slot.ok_or(LiftError::MissingEdge(i, j)))
        .collect()
}

/// Parses a signature file against its base graph.
pub fn parse_signature(text: &str, base: &Graph) -> Result<Signature, LiftError> {
    let mut group: Option<GroupSpec> = None;
    let mut slots: Vec<Option<GroupElement>> = vec![None; base.edge_count()];
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some(gr) = &group else {
            let spec = content.strip_prefix("group").ok_or_else(|| LiftError::BadGroupHeader {
                line,
                reason: "expected `group <spec>`".into(),
            })?;
            let parsed = spec
                .trim()
                .parse::<GroupSpec>()
                .map_err(|e| LiftError::BadGroupHeader { line, reason: e.to_string() })?;
            group = Some(parsed);
            continue;
        };

        let (lhs, rhs) = content.split_once(':').ok_or_else(|| LiftError::Syntax {
            line,
            reason: "expected `i j : element`".into(),
        })?;
        let ends: Vec<&str> = lhs.split_whitespace().collect();
        if ends.len() != 2 {
            return Err(LiftError::Syntax { line, reason: "expected two endpoints".into() });
        }
        let parse_vertex = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| LiftError::Syntax { line, reason: format!("bad vertex `{s}`") })
        };
        let (i, j) = (parse_vertex(ends[0])?, parse_vertex(ends[1])?);
        if i >= j {
            return Err(LiftError::Syntax { line, reason: format!("edge ({i}, {j}) must have i < j") });
        }
        let element = gr.parse_element(rhs).map_err(|source| LiftError::BadElement { line, source })?;
        let slot = base.edge_index(i, j).ok_or(LiftError::UnknownEdge { line, i, j })?;
        if slots[slot].is_some() {
            return Err(LiftError::DuplicateEdge { line, i, j });
        }
        slots[slot] = Some(element);
    }

    let group = group.ok_or(LiftError::BadGroupHeader {
        line: last_line.max(1),
        reason: "missing `group <spec>` header".into(),
    })?;
    let values = collect_slots(base, slots)?;
    Signature::new(base, group, values)
}

/// The lift `G(s)`.
pub fn build_lift(base: &Graph, s: &Signature) -> Result<Graph, LiftError> {
    if !s.is_on(base) {
        return Err(LiftError::InvalidSignature(
            "signature edge set does not match the base graph".into(),
        ));
    }
    let d = s.group.fiber_size();
    let mut pairs = Vec::with_capacity(d * base.edge_count());
    for (&(i, j), g) in s.edges.iter().zip(&s.values) {
        for a in 0..d {
            let b = s.group.act(g, a);
            pairs.push(((i - 1) * d + a + 1, (j - 1) * d + b + 1));
        }
    }
    Ok(Graph::from_edge_list(base.vertex_count() * d, pairs).expect("lift edges are valid"))
}

/// The lift `G_g` where every edge carries `g`.
pub fn build_constant_lift(base: &Graph, gr: &GroupSpec, g: &GroupElement) -> Result<Graph, LiftError> {
    let s = Signature::constant(base, gr.clone(), g.clone())?;
    build_lift(base, &s)
}
