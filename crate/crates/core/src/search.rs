//! Abelian signature pairs on the base pair `G`, `H` whose lifts are
//! cospectral: the two sufficient conditions as exact group equations, the
//! parametric family that satisfies them, and an exhaustive search.
//!
//! Edge variables follow the 6-vertex pair in [`crate::fixtures`]:
//!
//! ```text
//! G: u=(1,2) v=(2,3) w=(2,4) x=(3,4) y=(3,5) z=(4,5) r=(5,6)
//! H: u1=(1,2) v1=(1,3) w1=(2,3) x1=(3,4) y1=(3,5) z1=(3,6) r1=(5,6)
//! ```
//!
//! Both lists are in canonical edge order, so variable `k` is
//! `Signature::values()[k]`.
//!
//! Under every character the conditions become identities between sums of
//! roots of unity. Because the characters of a finite abelian group
//! separate its elements and are linearly independent, those identities
//! hold for all characters exactly when the corresponding group elements
//! (or multisets of them) agree, which is what is checked here.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{AlgebraError, GroupElement, GroupSpec};
use crate::fixtures::{base_g, base_h};
use crate::graph::Graph;
use crate::isomorph::{canonical_form, CanonicalForm, IsoError, MAX_VERTICES};
use crate::lift::{build_lift, signature_count, LiftError, Signature};
use crate::spectra::{charpoly, cospectral, CharPoly};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

pub const G_VARIABLES: [(&str, (usize, usize)); 7] =
    [("u", (1, 2)), ("v", (2, 3)), ("w", (2, 4)), ("x", (3, 4)), ("y", (3, 5)), ("z", (4, 5)), ("r", (5, 6))];

pub const H_VARIABLES: [(&str, (usize, usize)); 7] = [
    ("u1", (1, 2)),
    ("v1", (1, 3)),
    ("w1", (2, 3)),
    ("x1", (3, 4)),
    ("y1", (3, 5)),
    ("z1", (3, 6)),
    ("r1", (5, 6)),
];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("wrong base graph: {0}")]
    WrongBaseGraph(String),
    #[error("group {0} is not abelian")]
    NotAbelian(String),
    #[error("signatures use different groups: {0} and {1}")]
    GroupMismatch(String, String),
    #[error("the first condition (wz = vy) does not hold")]
    Condition1Violated,
    #[error("base graphs are not cospectral")]
    NotCospectral,
    #[error("filtering by the conditions needs the 6-vertex pair G, H as bases")]
    FilterUnavailable,
    #[error("budget of {budget} signatures per side exceeded ({needed} needed) after scanning {scanned}")]
    BudgetExceeded { scanned: u64, needed: String, budget: u64 },
    #[error("worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Iso(#[from] IsoError),
    #[error(transparent)]
    Lift(#[from] LiftError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The base pair with its edge-variable dictionary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixturePair {
    pub g: Graph,
    pub h: Graph,
}

impl FixturePair {
    pub fn new() -> Self {
        FixturePair { g: base_g(), h: base_h() }
    }

    /// True when `(g, h)` is this pair with the same vertex labels.
    pub fn matches(&self, g: &Graph, h: &Graph) -> bool {
        *g == self.g && *h == self.h
    }

    /// Edge carrying the named variable, e.g. `"z"` or `"y1"`.
    pub fn variable_edge(name: &str) -> Option<(usize, usize)> {
        G_VARIABLES.iter().chain(&H_VARIABLES).find(|(n, _)| *n == name).map(|&(_, e)| e)
    }
}

impl Default for FixturePair {
    fn default() -> Self {
        Self::new()
    }
}

fn variables<'a>(s: &'a Signature, base: &Graph, side: &str) -> Result<&'a [GroupElement], SearchError> {
    if !s.is_on(base) {
        return Err(SearchError::WrongBaseGraph(format!("signature is not on {side}")));
    }
    if !s.group().is_abelian() {
        return Err(SearchError::NotAbelian(s.group().to_string()));
    }
    Ok(s.values())
}

/// `w·z = v·y` for a signature on `G`.
pub fn check_condition1(s_g: &Signature) -> Result<bool, SearchError> {
    let gr = s_g.group();
    let [_, v, w, _, y, z, _] = variables(s_g, &base_g(), "G")? else { unreachable!() };
    Ok(gr.compose(w, z)? == gr.compose(v, y)?)
}

/// Multiset equality `{α, α⁻¹, α, α⁻¹} = {β, β⁻¹, γ, γ⁻¹}` with
/// `α = x·v·w⁻¹`, `β = y1·r1·z1⁻¹`, `γ = u1·w1·v1⁻¹`.
///
/// Only meaningful once the first condition holds; otherwise this returns
/// [`SearchError::Condition1Violated`].
pub fn check_condition2(s_g: &Signature, s_h: &Signature) -> Result<bool, SearchError> {
    if s_g.group() != s_h.group() {
        return Err(SearchError::GroupMismatch(s_g.group().to_string(), s_h.group().to_string()));
    }
    let left = g_side_key(s_g)?;
    let right = h_side_key(s_h)?;
    if !check_condition1(s_g)? {
        return Err(SearchError::Condition1Violated);
    }
    Ok(left == right)
}

/// Sorted element indices of `{α, α⁻¹, α, α⁻¹}`.
fn g_side_key(s_g: &Signature) -> Result<Vec<usize>, SearchError> {
    let gr = s_g.group();
    let [_, v, w, x, _, _, _] = variables(s_g, &base_g(), "G")? else { unreachable!() };
    let alpha = ratio(gr, x, v, w)?;
    Ok(multiset(gr, [alpha.clone(), gr.inverse(&alpha)?, alpha.clone(), gr.inverse(&alpha)?]))
}

/// Sorted element indices of `{β, β⁻¹, γ, γ⁻¹}`.
fn h_side_key(s_h: &Signature) -> Result<Vec<usize>, SearchError> {
    let gr = s_h.group();
    let [u1, v1, w1, _, y1, z1, r1] = variables(s_h, &base_h(), "H")? else { unreachable!() };
    let beta = ratio(gr, y1, r1, z1)?;
    let gamma = ratio(gr, u1, w1, v1)?;
    Ok(multiset(gr, [beta.clone(), gr.inverse(&beta)?, gamma.clone(), gr.inverse(&gamma)?]))
}

/// `a·b·c⁻¹`.
fn ratio(gr: &GroupSpec, a: &GroupElement, b: &GroupElement, c: &GroupElement) -> Result<GroupElement, AlgebraError> {
    gr.compose(&gr.compose(a, b)?, &gr.inverse(c)?)
}

fn multiset(gr: &GroupSpec, elems: [GroupElement; 4]) -> Vec<usize> {
    let mut idx: Vec<usize> = elems.iter().map(|e| gr.element_index(e).expect("element of group")).collect();
    idx.sort_unstable();
    idx
}

/// Both conditions, with a failed first condition reported as `false`.
pub fn conditions_hold(s_g: &Signature, s_h: &Signature) -> Result<bool, SearchError> {
    match check_condition2(s_g, s_h) {
        Err(SearchError::Condition1Violated) => Ok(false),
        other => other,
    }
}

/// Free parameters of the corollary family. `z` on `G` and `u1, w1, y1,
/// z1, r1` on `H` are determined by these.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryParams {
    pub u: GroupElement,
    pub v: GroupElement,
    pub w: GroupElement,
    pub x: GroupElement,
    pub y: GroupElement,
    pub r: GroupElement,
    pub v1: GroupElement,
    pub x1: GroupElement,
}

impl CorollaryParams {
    /// Parameters with `v1 = w`, the choice that makes the second
    /// condition hold.
    pub fn with_v1_from_w(
        u: GroupElement,
        v: GroupElement,
        w: GroupElement,
        x: GroupElement,
        y: GroupElement,
        r: GroupElement,
        x1: GroupElement,
    ) -> Self {
        CorollaryParams { u, v, w: w.clone(), x, y, r, v1: w, x1 }
    }
}

/// Signatures on `G` and `H` with `z = v·y·w⁻¹`, `u1 = y1 = x`,
/// `w1 = r1 = v`, `z1 = w`.
///
/// The pair always satisfies the first condition. The second holds exactly
/// when `v1 = w` or `v1 = x²·v²·w⁻¹`.
pub fn corollary_generate(gr: &GroupSpec, p: &CorollaryParams) -> Result<(Signature, Signature), SearchError> {
    if !gr.is_abelian() {
        return Err(SearchError::NotAbelian(gr.to_string()));
    }
    for e in [&p.u, &p.v, &p.w, &p.x, &p.y, &p.r, &p.v1, &p.x1] {
        gr.ensure(e)?;
    }
    let z = gr.compose(&gr.compose(&p.v, &p.y)?, &gr.inverse(&p.w)?)?;
    let g_values = vec![p.u.clone(), p.v.clone(), p.w.clone(), p.x.clone(), p.y.clone(), z, p.r.clone()];
    let h_values = vec![p.x.clone(), p.v1.clone(), p.v.clone(), p.x1.clone(), p.x.clone(), p.w.clone(), p.v.clone()];
    let s_g = Signature::new(&base_g(), gr.clone(), g_values)?;
    let s_h = Signature::new(&base_h(), gr.clone(), h_values)?;
    Ok((s_g, s_h))
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Keep only pairs satisfying both conditions. Requires the bases to
    /// be the [`FixturePair`].
    pub filter_by_theorem: bool,
    /// Maximum number of signatures enumerated per side.
    pub budget: u64,
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { filter_by_theorem: false, budget: DEFAULT_BUDGET, jobs: None }
    }
}

/// A cospectral pair of lifts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub s: Signature,
    pub s_prime: Signature,
    pub charpoly: CharPoly,
    /// Both conditions hold. Always `false` when the bases are not the
    /// [`FixturePair`], where the conditions are undefined.
    pub conditions_satisfied: bool,
    pub non_isomorphic: bool,
}

impl SearchResult {
    pub fn rank_g(&self) -> u64 {
        self.s.rank()
    }

    pub fn rank_h(&self) -> u64 {
        self.s_prime.rank()
    }

    /// `<rankG> <rankH> <charpoly> <cond:0|1> <noniso:0|1>`.
    pub fn to_line(&self) -> String {
        format!(
            "{} {} {} {} {}",
            self.rank_g(),
            self.rank_h(),
            self.charpoly,
            u8::from(self.conditions_satisfied),
            u8::from(self.non_isomorphic)
        )
    }
}

/// Every pair `(s, s′)` of signatures over `gr` with `G(s)` cospectral to
/// `H(s′)`, ordered by `(rank(s), rank(s′))`.
///
/// Each side's lifts are computed once. Work is split into contiguous rank
/// ranges across `options.jobs` threads, and the output does not depend on
/// the thread count.
pub fn search(g: &Graph, h: &Graph, gr: &GroupSpec, options: &SearchOptions) -> Result<Vec<SearchResult>, SearchError> {
    if !gr.is_abelian() {
        return Err(SearchError::NotAbelian(gr.to_string()));
    }
    let fixture = FixturePair::new().matches(g, h);
    if options.filter_by_theorem && !fixture {
        return Err(SearchError::FilterUnavailable);
    }
    if !cospectral(g, h) {
        return Err(SearchError::NotCospectral);
    }
    let lift_n = gr.fiber_size() * g.vertex_count();
    if lift_n > MAX_VERTICES {
        return Err(IsoError::TooLarge(lift_n).into());
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs.unwrap_or(0))
        .build()
        .map_err(|e| SearchError::Pool(e.to_string()))?;
    pool.install(|| run(g, h, gr, options, fixture))
}

fn run(g: &Graph, h: &Graph, gr: &GroupSpec, options: &SearchOptions, fixture: bool) -> Result<Vec<SearchResult>, SearchError> {
    let count_g = side_count(gr, g, options.budget, 0)?;
    let count_h = side_count(gr, h, options.budget, count_g)?;
    let side_g = scan(g, gr, count_g)?;
    let side_h = scan(h, gr, count_h)?;

    let mut by_poly: HashMap<&CharPoly, Vec<usize>> = HashMap::new();
    for (rank, (_, p)) in side_g.iter().enumerate() {
        by_poly.entry(p).or_default().push(rank);
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (rank_h, (_, p)) in side_h.iter().enumerate() {
        if let Some(ranks) = by_poly.get(p) {
            pairs.extend(ranks.iter().map(|&rg| (rg, rank_h)));
        }
    }
    pairs.sort_unstable();

    // per-signature halves of the two conditions; `None` when the first fails
    let (keys_g, keys_h) = if fixture {
        let kg = side_g
            .par_iter()
            .map(|(s, _)| Ok(if check_condition1(s)? { Some(g_side_key(s)?) } else { None }))
            .collect::<Result<Vec<_>, SearchError>>()?;
        let kh = side_h.par_iter().map(|(s, _)| h_side_key(s)).collect::<Result<Vec<_>, _>>()?;
        (kg, kh)
    } else {
        (Vec::new(), Vec::new())
    };
    let conditions = |rg: usize, rh: usize| fixture && keys_g[rg].as_ref() == Some(&keys_h[rh]);
    if options.filter_by_theorem {
        pairs.retain(|&(rg, rh)| conditions(rg, rh));
    }

    let forms_g = canonical_forms(g, &side_g, pairs.iter().map(|p| p.0))?;
    let forms_h = canonical_forms(h, &side_h, pairs.iter().map(|p| p.1))?;
    Ok(pairs
        .into_iter()
        .map(|(rg, rh)| SearchResult {
            s: side_g[rg].0.clone(),
            s_prime: side_h[rh].0.clone(),
            charpoly: side_g[rg].1.clone(),
            conditions_satisfied: conditions(rg, rh),
            non_isomorphic: forms_g[&rg] != forms_h[&rh],
        })
        .collect())
}

fn side_count(gr: &GroupSpec, base: &Graph, budget: u64, scanned: u64) -> Result<u64, SearchError> {
    match signature_count(gr, base.edge_count()) {
        Some(c) if c <= budget => Ok(c),
        other => Err(SearchError::BudgetExceeded {
            scanned,
            needed: other.map_or_else(|| format!("{}^{}", gr.order(), base.edge_count()), |c| c.to_string()),
            budget,
        }),
    }
}

fn scan(base: &Graph, gr: &GroupSpec, count: u64) -> Result<Vec<(Signature, CharPoly)>, SearchError> {
    const CHUNK: u64 = 256;
    let ranges: Vec<(u64, u64)> = (0..count.div_ceil(CHUNK)).map(|c| (c * CHUNK, count.min((c + 1) * CHUNK))).collect();
    let chunks: Vec<Vec<(Signature, CharPoly)>> = ranges
        .into_par_iter()
        .map(|(lo, hi)| {
            (lo..hi)
                .map(|rank| {
                    let s = Signature::from_rank(base, gr, rank)?;
                    let p = charpoly(&build_lift(base, &s)?);
                    Ok((s, p))
                })
                .collect()
        })
        .collect::<Result<_, SearchError>>()?;
    Ok(chunks.concat())
}

fn canonical_forms(
    base: &Graph,
    side: &[(Signature, CharPoly)],
    ranks: impl Iterator<Item = usize>,
) -> Result<HashMap<usize, CanonicalForm>, SearchError> {
    let distinct: Vec<usize> = ranks.collect::<BTreeSet<_>>().into_iter().collect();
    distinct
        .into_par_iter()
        .map(|rank| Ok((rank, canonical_form(&build_lift(base, &side[rank].0)?)?)))
        .collect()
}
