//! Finite groups used as voltage groups.
//!
//! Two families are supported: abelian products `Z_k1 x ... x Z_kr` and the
//! symmetric groups `S_k`.
//!
//! Composition convention: `a * b` means *apply `a`, then `b`*. For
//! permutations this is `(a * b)(x) = b(a(x))`, so `(1,2,3) * (1,2)` sends
//! 1 to 2 and then to 1. The lift rule `s(i,j) * g_a = g_b` reads in the
//! same left-to-right direction.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;

use super::{AlgebraError, CycloElem, CycloRing};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    /// `Z_k1 x ... x Z_kr`, each `ki >= 1`.
    Abelian(Vec<u32>),
    /// `S_k` acting on `{1, ..., k}`.
    Symmetric(u32),
}

/// A group element. Abelian elements are residue vectors; permutations
/// are stored in 0-based one-line form (`images[x]` is the image of `x`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Abelian(Vec<u32>),
    Perm(Vec<u32>),
}

impl GroupSpec {
    pub fn cyclic(k: u32) -> GroupSpec {
        assert!(k >= 1, "cyclic order must be positive");
        GroupSpec::Abelian(vec![k])
    }

    pub fn abelian(orders: &[u32]) -> Result<GroupSpec, AlgebraError> {
        if orders.is_empty() || orders.contains(&0) {
            return Err(parse_err("group", &format!("{orders:?}"), "orders must be >= 1"));
        }
        Ok(GroupSpec::Abelian(orders.to_vec()))
    }

    pub fn symmetric(k: u32) -> Result<GroupSpec, AlgebraError> {
        if k == 0 {
            return Err(parse_err("group", "S0", "degree must be >= 1"));
        }
        Ok(GroupSpec::Symmetric(k))
    }

    /// True for the `Abelian` family. `S1` and `S2` are commutative but are
    /// still treated as permutation groups.
    pub fn is_abelian(&self) -> bool {
        matches!(self, GroupSpec::Abelian(_))
    }

    pub fn order(&self) -> u64 {
        match self {
            GroupSpec::Abelian(orders) => orders.iter().map(|&k| k as u64).product(),
            GroupSpec::Symmetric(k) => (1..=*k as u64).product(),
        }
    }

    /// Number of lift vertices above each base vertex: the group order for
    /// the regular action of an abelian group, `k` for the natural action
    /// of `S_k`.
    pub fn fiber_size(&self) -> usize {
        match self {
            GroupSpec::Abelian(_) => self.order() as usize,
            GroupSpec::Symmetric(k) => *k as usize,
        }
    }

    /// Least common multiple of the cyclic orders (abelian only).
    pub fn exponent(&self) -> u32 {
        match self {
            GroupSpec::Abelian(orders) => orders.iter().fold(1, |acc, &k| acc.lcm(&k)),
            GroupSpec::Symmetric(k) => (1..=*k).fold(1, |acc, i| acc.lcm(&i)),
        }
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            GroupSpec::Abelian(orders) => GroupElement::Abelian(vec![0; orders.len()]),
            GroupSpec::Symmetric(k) => GroupElement::Perm((0..*k).collect()),
        }
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        match (self, e) {
            (GroupSpec::Abelian(orders), GroupElement::Abelian(a)) => {
                a.len() == orders.len() && a.iter().zip(orders).all(|(x, k)| x < k)
            }
            (GroupSpec::Symmetric(k), GroupElement::Perm(p)) => {
                let mut seen = vec![false; *k as usize];
                p.len() == *k as usize
                    && p.iter().all(|&x| {
                        let ok = x < *k && !seen[x as usize];
                        if ok {
                            seen[x as usize] = true;
                        }
                        ok
                    })
            }
            _ => false,
        }
    }

    pub fn ensure(&self, e: &GroupElement) -> Result<(), AlgebraError> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(AlgebraError::ElementNotInGroup { element: format!("{e}"), group: self.to_string() })
        }
    }

    /// `a * b`: apply `a`, then `b`.
    pub fn compose(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, AlgebraError> {
        self.ensure(a)?;
        self.ensure(b)?;
        Ok(self.compose_unchecked(a, b))
    }

    pub(crate) fn compose_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        match (self, a, b) {
            (GroupSpec::Abelian(orders), GroupElement::Abelian(x), GroupElement::Abelian(y)) => {
                GroupElement::Abelian(
                    x.iter().zip(y).zip(orders).map(|((p, q), k)| (p + q) % k).collect(),
                )
            }
            (_, GroupElement::Perm(p), GroupElement::Perm(q)) => {
                GroupElement::Perm(p.iter().map(|&x| q[x as usize]).collect())
            }
            _ => unreachable!("elements checked against group"),
        }
    }

    pub fn inverse(&self, a: &GroupElement) -> Result<GroupElement, AlgebraError> {
        self.ensure(a)?;
        Ok(self.inverse_unchecked(a))
    }

    pub(crate) fn inverse_unchecked(&self, a: &GroupElement) -> GroupElement {
        match (self, a) {
            (GroupSpec::Abelian(orders), GroupElement::Abelian(x)) => {
                GroupElement::Abelian(x.iter().zip(orders).map(|(p, k)| (k - p) % k).collect())
            }
            (_, GroupElement::Perm(p)) => {
                let mut inv = vec![0; p.len()];
                for (i, &x) in p.iter().enumerate() {
                    inv[x as usize] = i as u32;
                }
                GroupElement::Perm(inv)
            }
            _ => unreachable!("elements checked against group"),
        }
    }

    /// Order of `e` as a group element.
    pub fn element_order(&self, e: &GroupElement) -> Result<u64, AlgebraError> {
        self.ensure(e)?;
        let id = self.identity();
        let mut cur = e.clone();
        let mut n = 1;
        while cur != id {
            cur = self.compose_unchecked(&cur, e);
            n += 1;
        }
        Ok(n)
    }

    /// All elements in lexicographic order. The identity comes first.
    pub fn elements(&self) -> Vec<GroupElement> {
        match self {
            GroupSpec::Abelian(_) => {
                (0..self.order() as usize).map(|i| self.abelian_element_at(i)).collect()
            }
            GroupSpec::Symmetric(k) => {
                let mut out = Vec::new();
                let mut cur: Vec<u32> = (0..*k).collect();
                loop {
                    out.push(GroupElement::Perm(cur.clone()));
                    if !next_permutation(&mut cur) {
                        break;
                    }
                }
                out
            }
        }
    }

    fn abelian_element_at(&self, mut idx: usize) -> GroupElement {
        let GroupSpec::Abelian(orders) = self else { unreachable!() };
        let mut res = vec![0; orders.len()];
        for (slot, &k) in res.iter_mut().zip(orders).rev() {
            *slot = (idx % k as usize) as u32;
            idx /= k as usize;
        }
        GroupElement::Abelian(res)
    }

    /// Position of `e` in [`GroupSpec::elements`].
    pub fn element_index(&self, e: &GroupElement) -> Option<usize> {
        if !self.contains(e) {
            return None;
        }
        match (self, e) {
            (GroupSpec::Abelian(orders), GroupElement::Abelian(a)) => {
                Some(a.iter().zip(orders).fold(0, |acc, (&x, &k)| acc * k as usize + x as usize))
            }
            (GroupSpec::Symmetric(_), GroupElement::Perm(p)) => {
                // Lehmer code rank
                let n = p.len();
                let mut rank = 0usize;
                for i in 0..n {
                    let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
                    rank = rank * (n - i) + smaller;
                }
                Some(rank)
            }
            _ => None,
        }
    }

    /// Image of fibre position `a` under `g`: the index of `g_a * g` for an
    /// abelian group, `g(a)` for a permutation.
    pub(crate) fn act(&self, g: &GroupElement, a: usize) -> usize {
        match (self, g) {
            (GroupSpec::Abelian(orders), GroupElement::Abelian(x)) => {
                let ga = self.abelian_element_at(a);
                let GroupElement::Abelian(y) = ga else { unreachable!() };
                y.iter()
                    .zip(x)
                    .zip(orders)
                    .fold(0, |acc, ((&p, &q), &k)| acc * k as usize + ((p + q) % k) as usize)
            }
            (GroupSpec::Symmetric(_), GroupElement::Perm(p)) => p[a] as usize,
            _ => unreachable!("element checked against group"),
        }
    }

    /// Parses an element in this group's text syntax.
    pub fn parse_element(&self, text: &str) -> Result<GroupElement, AlgebraError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let e = match self {
            GroupSpec::Abelian(orders) => parse_abelian(&compact, orders.len())?,
            GroupSpec::Symmetric(k) => parse_cycles(&compact, *k)?,
        };
        self.ensure(&e)?;
        Ok(e)
    }
}

fn next_permutation(p: &mut [u32]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn parse_err(what: &'static str, text: &str, reason: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse { what, text: text.to_string(), reason: reason.into() }
}

fn parse_abelian(s: &str, rank: usize) -> Result<GroupElement, AlgebraError> {
    let inner = match s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        Some(inner) => inner,
        None if rank == 1 => s,
        None => return Err(parse_err("element", s, format!("expected a {rank}-tuple `(a1,...)`"))),
    };
    let parts: Vec<&str> = inner.split(',').collect();
    if parts.len() != rank {
        return Err(parse_err("element", s, format!("expected {rank} residues, got {}", parts.len())));
    }
    let residues = parts
        .iter()
        .map(|p| p.parse::<u32>().map_err(|_| parse_err("element", s, format!("bad residue `{p}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GroupElement::Abelian(residues))
}

fn parse_cycles(s: &str, k: u32) -> Result<GroupElement, AlgebraError> {
    let mut images: Vec<u32> = (0..k).collect();
    if s == "id" || s == "()" {
        return Ok(GroupElement::Perm(images));
    }
    let mut used = vec![false; k as usize];
    let mut rest = s;
    if rest.is_empty() {
        return Err(parse_err("element", s, "empty permutation"));
    }
    while !rest.is_empty() {
        let body_end = rest
            .strip_prefix('(')
            .and_then(|r| r.find(')'))
            .ok_or_else(|| parse_err("element", s, "expected `(`...`)` cycle"))?;
        let body = &rest[1..=body_end];
        rest = &rest[body_end + 2..];
        let points = body
            .split(',')
            .map(|p| {
                let v: u32 =
                    p.parse().map_err(|_| parse_err("element", s, format!("bad point `{p}`")))?;
                if v < 1 || v > k {
                    return Err(parse_err("element", s, format!("point {v} outside 1..={k}")));
                }
                Ok(v - 1)
            })
            .collect::<Result<Vec<_>, _>>()?;
        for &p in &points {
            if used[p as usize] {
                return Err(parse_err("element", s, format!("point {} repeated", p + 1)));
            }
            used[p as usize] = true;
        }
        for (i, &p) in points.iter().enumerate() {
            images[p as usize] = points[(i + 1) % points.len()];
        }
    }
    Ok(GroupElement::Perm(images))
}

impl FromStr for GroupSpec {
    type Err = AlgebraError;

    /// `Z3`, `Z2xZ4`, `S3`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(k) = s.strip_prefix('S') {
            let k = k.parse().map_err(|_| parse_err("group", text, "bad symmetric degree"))?;
            return GroupSpec::symmetric(k).map_err(|_| parse_err("group", text, "degree must be >= 1"));
        }
        let orders = s
            .split(['x', 'X'])
            .map(|f| {
                f.strip_prefix('Z')
                    .and_then(|k| k.parse::<u32>().ok())
                    .filter(|&k| k >= 1)
                    .ok_or_else(|| parse_err("group", text, format!("bad factor `{f}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        GroupSpec::abelian(&orders)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Abelian(orders) => {
                let parts: Vec<String> = orders.iter().map(|k| format!("Z{k}")).collect();
                write!(f, "{}", parts.join("x"))
            }
            GroupSpec::Symmetric(k) => write!(f, "S{k}"),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Abelian(a) if a.len() == 1 => write!(f, "{}", a[0]),
            GroupElement::Abelian(a) => {
                let parts: Vec<String> = a.iter().map(u32::to_string).collect();
                write!(f, "({})", parts.join(","))
            }
            GroupElement::Perm(p) => {
                let mut seen = vec![false; p.len()];
                let mut wrote = false;
                for start in 0..p.len() {
                    if seen[start] || p[start] as usize == start {
                        continue;
                    }
                    let mut cycle = Vec::new();
                    let mut x = start;
                    while !seen[x] {
                        seen[x] = true;
                        cycle.push((x + 1).to_string());
                        x = p[x] as usize;
                    }
                    write!(f, "({})", cycle.join(","))?;
                    wrote = true;
                }
                if !wrote {
                    write!(f, "id")?;
                }
                Ok(())
            }
        }
    }
}

/// Right regular representation: `P_g(i, j) = 1` iff `g_i * g = g_j`, with
/// elements indexed as in [`GroupSpec::elements`].
pub fn perm_matrix(gr: &GroupSpec, g: &GroupElement) -> Result<Vec<Vec<u8>>, AlgebraError> {
    gr.ensure(g)?;
    let elements = gr.elements();
    let n = elements.len();
    let mut m = vec![vec![0u8; n]; n];
    for (i, gi) in elements.iter().enumerate() {
        let j = gr.element_index(&gr.compose_unchecked(gi, g)).expect("closure");
        m[i][j] = 1;
    }
    Ok(m)
}

/// Character of `Z_k1 x ... x Z_kr` indexed by `(j1, ..., jr)`:
/// `g = (a1, ..., ar) ↦ ω^(Σ ji·ai·K/ki)` with `K` the group exponent.
#[derive(Clone, Debug)]
pub struct Character {
    index: Vec<u32>,
    orders: Vec<u32>,
    ring: Arc<CycloRing>,
}

impl Character {
    pub fn index(&self) -> &[u32] {
        &self.index
    }

    pub fn ring(&self) -> &Arc<CycloRing> {
        &self.ring
    }

    pub fn is_trivial(&self) -> bool {
        self.index.iter().all(|&j| j == 0)
    }

    /// Exponent `t` with `χ(g) = ω^t`, reduced mod `K`.
    pub fn exponent(&self, g: &GroupElement) -> Result<u32, AlgebraError> {
        let spec = GroupSpec::Abelian(self.orders.clone());
        spec.ensure(g)?;
        let GroupElement::Abelian(a) = g else { unreachable!() };
        let k = self.ring.modulus() as u64;
        let t = self
            .index
            .iter()
            .zip(a)
            .zip(&self.orders)
            .map(|((&j, &x), &ki)| j as u64 * x as u64 * (k / ki as u64))
            .sum::<u64>()
            % k;
        Ok(t as u32)
    }

    pub fn eval(&self, g: &GroupElement) -> Result<CycloElem, AlgebraError> {
        Ok(CycloElem::root_power(&self.ring, self.exponent(g)? as i64))
    }
}

/// All characters of an abelian group, in lexicographic index order, with
/// values in `Z[x]/(Φ_K)` for `K` the group exponent.
pub fn characters(gr: &GroupSpec) -> Result<Vec<Character>, AlgebraError> {
    let GroupSpec::Abelian(orders) = gr else {
        return Err(AlgebraError::NotAbelian(gr.to_string()));
    };
    let ring = CycloRing::new(gr.exponent());
    Ok(gr
        .elements()
        .into_iter()
        .map(|e| {
            let GroupElement::Abelian(index) = e else { unreachable!() };
            Character { index, orders: orders.clone(), ring: Arc::clone(&ring) }
        })
        .collect())
}
