//! Exact spectra of graphs and their abelian lifts.
//!
//! Cospectrality is decided by comparing integer characteristic
//! polynomials; floating point only appears in [`numeric_spectrum`], which
//! is for display.
//!
//! For an abelian signature `s` and a character `χ`, the matrix `A_χ` has
//! `χ(s(i,j))` above the diagonal and `χ(s(i,j)⁻¹)` below it. The lift's
//! characteristic polynomial equals `∏_χ det(tI - A_χ)`;
//! [`verify_decomposition`] computes both sides exactly.

mod sturm;

pub use sturm::numeric_spectrum;

use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{
    berkowitz_charpoly, characters, AlgebraError, Character, CycloElem, CycloRing, GroupElement,
    GroupSpec, IntPoly,
};
use crate::graph::Graph;
use crate::lift::{build_constant_lift, build_lift, LiftError, Signature};

/// Characteristic polynomial of an adjacency matrix: monic, degree `n`.
pub type CharPoly = IntPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectraError {
    #[error("signature group {0} is not abelian")]
    NonAbelianSignature(String),
    #[error("coefficient of t^{degree} in the character product is not an integer: {value}")]
    NonIntegerProduct { degree: usize, value: String },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error(transparent)]
    Lift(#[from] LiftError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `det(tI - A)` for any square integer matrix.
pub fn integer_charpoly(m: &[Vec<i64>]) -> Result<IntPoly, AlgebraError> {
    match berkowitz_charpoly(m, &()) {
        Ok(c) => Ok(IntPoly::from_high_first(c)),
        Err(AlgebraError::Overflow) => {
            let wide: Vec<Vec<BigInt>> =
                m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            Ok(IntPoly::from_high_first(berkowitz_charpoly(&wide, &())?))
        }
        Err(e) => Err(e),
    }
}

/// Characteristic polynomial of the adjacency matrix of `g`.
pub fn charpoly(g: &Graph) -> CharPoly {
    let m: Vec<Vec<i64>> =
        g.adjacency_matrix().into_iter().map(|r| r.into_iter().map(i64::from).collect()).collect();
    integer_charpoly(&m).expect("adjacency matrix is square")
}

/// Equal spectra, decided by exact characteristic polynomial equality.
pub fn cospectral(g: &Graph, h: &Graph) -> bool {
    g.vertex_count() == h.vertex_count() && charpoly(g) == charpoly(h)
}

/// The twisted adjacency matrix `A_χ` of an abelian signature.
#[derive(Clone, Debug)]
pub struct AxMatrix {
    ring: Arc<CycloRing>,
    entries: Vec<Vec<CycloElem>>,
}

impl PartialEq for AxMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl AxMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn ring(&self) -> &Arc<CycloRing> {
        &self.ring
    }

    pub fn entries(&self) -> &[Vec<CycloElem>] {
        &self.entries
    }

    /// Entry at 1-based position `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &CycloElem {
        &self.entries[i - 1][j - 1]
    }

    /// `det(tI - A_χ)`, highest degree first, over the cyclotomic ring.
    pub fn charpoly(&self) -> Result<Vec<CycloElem>, AlgebraError> {
        berkowitz_charpoly(&self.entries, &self.ring)
    }
}

fn require_abelian(s: &Signature) -> Result<(), SpectraError> {
    if s.group().is_abelian() {
        Ok(())
    } else {
        Err(SpectraError::NonAbelianSignature(s.group().to_string()))
    }
}

pub fn build_ax(base: &Graph, s: &Signature, chi: &Character) -> Result<AxMatrix, SpectraError> {
    require_abelian(s)?;
    if !s.is_on(base) {
        return Err(LiftError::InvalidSignature("signature does not belong to this base".into()).into());
    }
    let ring = Arc::clone(chi.ring());
    let n = base.vertex_count();
    let mut entries = vec![vec![CycloElem::zero(&ring); n]; n];
    for (&(i, j), g) in s.edges().iter().zip(s.values()) {
        let t = chi.exponent(g)? as i64;
        entries[i - 1][j - 1] = CycloElem::root_power(&ring, t);
        entries[j - 1][i - 1] = CycloElem::inverse_of_root_power(&ring, t);
    }
    Ok(AxMatrix { ring, entries })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub holds: bool,
    /// Characteristic polynomial of the lift, computed directly.
    pub lift_poly: CharPoly,
    /// `∏_χ det(tI - A_χ)`, reduced to integers.
    pub product_poly: CharPoly,
}

/// Checks that the lift spectrum is the union of the `A_χ` spectra by
/// comparing exact characteristic polynomials.
pub fn verify_decomposition(base: &Graph, s: &Signature) -> Result<DecompositionReport, SpectraError> {
    require_abelian(s)?;
    let lift = build_lift(base, s)?;
    let lift_poly = charpoly(&lift);

    let chars = characters(s.group())?;
    let factors = chars
        .par_iter()
        .map(|chi| build_ax(base, s, chi)?.charpoly().map_err(SpectraError::from))
        .collect::<Result<Vec<_>, _>>()?;

    let ring = Arc::clone(chars[0].ring());
    let mut product = vec![CycloElem::one(&ring)];
    for f in &factors {
        product = cyclo_poly_mul(&product, f)?;
    }
    let degree = product.len() - 1;
    let mut high_first = Vec::with_capacity(product.len());
    for (k, c) in product.iter().enumerate() {
        let value = c.as_integer().ok_or_else(|| SpectraError::NonIntegerProduct {
            degree: degree - k,
            value: c.to_string(),
        })?;
        high_first.push(BigInt::from(value));
    }
    let product_poly = IntPoly::from_high_first(high_first);
    Ok(DecompositionReport { holds: product_poly == lift_poly, lift_poly, product_poly })
}

/// Product of two polynomials with cyclotomic coefficients, highest first.
fn cyclo_poly_mul(a: &[CycloElem], b: &[CycloElem]) -> Result<Vec<CycloElem>, AlgebraError> {
    let ring = a[0].ring();
    let mut out = vec![CycloElem::zero(ring); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y)?)?;
        }
    }
    Ok(out)
}

/// Constant lifts `G_g`, `H_g` of cospectral graphs by an involution `g`
/// are cospectral. Returns the outcome of that comparison after checking
/// both preconditions.
pub fn verify_constant_lift_lemma(
    g: &Graph,
    h: &Graph,
    gr: &GroupSpec,
    elem: &GroupElement,
) -> Result<bool, SpectraError> {
    gr.ensure(elem)?;
    if !cospectral(g, h) {
        return Err(SpectraError::PreconditionFailed("base graphs are not cospectral".into()));
    }
    let square = gr.compose(elem, elem)?;
    if square != gr.identity() {
        return Err(SpectraError::PreconditionFailed(format!(
            "P_g is not symmetric: {elem} squared is {square}, not the identity"
        )));
    }
    let gl = build_constant_lift(g, gr, elem)?;
    let hl = build_constant_lift(h, gr, elem)?;
    Ok(cospectral(&gl, &hl))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star};

    fn p(high_first: &[i64]) -> IntPoly {
        IntPoly::from_high_first(high_first.iter().copied())
    }

    fn z(k: u32) -> GroupSpec {
        GroupSpec::cyclic(k)
    }

    fn a(x: u32) -> GroupElement {
        GroupElement::Abelian(vec![x])
    }

    fn base_g() -> Graph {
        Graph::from_edge_list(6, [(1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (5, 6)]).unwrap()
    }

    #[test]
    fn small_charpolys() {
        assert_eq!(charpoly(&complete(2)), p(&[1, 0, -1]));
        assert_eq!(charpoly(&path(3)), p(&[1, 0, -2, 0]));
        assert_eq!(charpoly(&cycle(4)), p(&[1, 0, -4, 0, 0]));
        assert_eq!(charpoly(&Graph::empty(0)), IntPoly::one());
    }

    #[test]
    fn star_and_square_plus_point() {
        let c4k1 = cycle(4).disjoint_union(&Graph::empty(1));
        assert_eq!(charpoly(&star(4)), p(&[1, 0, -4, 0, 0, 0]));
        assert!(cospectral(&star(4), &c4k1));
        assert!(!cospectral(&complete(2), &path(3)));
    }

    #[test]
    fn integer_charpoly_falls_back_on_overflow() {
        let big = i64::MAX / 4;
        let m = vec![vec![big, big], vec![big, big]];
        let cp = integer_charpoly(&m).unwrap();
        assert_eq!(cp.coeff(1), BigInt::from(-2 * big as i128));
        assert_eq!(cp.coeff(0), BigInt::from(0));
    }

    #[test]
    fn ax_with_trivial_character_is_adjacency() {
        let g = base_g();
        let s = Signature::from_rank(&g, &z(3), 1234).unwrap();
        let chars = characters(&z(3)).unwrap();
        let ax = build_ax(&g, &s, &chars[0]).unwrap();
        let adj = g.adjacency_matrix();
        for i in 0..6 {
            for j in 0..6 {
                assert!(ax.entries()[i][j].equals_integer(adj[i][j] as i128));
            }
        }
    }

    #[test]
    fn ax_sign_character() {
        let k2 = complete(2);
        let s = Signature::constant(&k2, z(2), a(1)).unwrap();
        let chars = characters(&z(2)).unwrap();
        let ax = build_ax(&k2, &s, &chars[1]).unwrap();
        assert!(ax.entry(1, 2).equals_integer(-1));
        assert!(ax.entry(2, 1).equals_integer(-1));
        assert!(ax.entry(1, 1).equals_integer(0));
    }

    #[test]
    fn ax_matches_symbolic_template() {
        let g = base_g();
        let s = Signature::from_rank(&g, &z(3), 777).unwrap();
        let chars = characters(&z(3)).unwrap();
        let chi = &chars[1];
        let ax = build_ax(&g, &s, chi).unwrap();
        for (name, (i, j)) in [("u", (1, 2)), ("v", (2, 3)), ("w", (2, 4)), ("x", (3, 4)), ("y", (3, 5)), ("z", (4, 5)), ("r", (5, 6))] {
            let val = chi.eval(s.get(i, j).unwrap()).unwrap();
            assert_eq!(ax.entry(i, j), &val, "{name}");
            assert!(ax.entry(j, i).mul(&val).unwrap().equals_integer(1), "{name} inverse");
        }
        assert!(ax.entry(1, 3).equals_integer(0));
    }

    #[test]
    fn decomposition_on_small_cases() {
        let k2 = complete(2);
        let s = Signature::constant(&k2, z(2), a(1)).unwrap();
        let rep = verify_decomposition(&k2, &s).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.lift_poly, p(&[1, 0, -2, 0, 1]));

        let g = base_g();
        let rep = verify_decomposition(&g, &Signature::identity(&g, z(3))).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.product_poly, charpoly(&g).pow(3));

        let c4 = Graph::from_edge_list(4, [(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        let s = Signature::from_pairs(
            &c4,
            z(2),
            [((1, 3), a(0)), ((1, 4), a(0)), ((2, 3), a(1)), ((2, 4), a(0))],
        )
        .unwrap();
        let rep = verify_decomposition(&c4, &s).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.lift_poly, charpoly(&cycle(8)));
    }

    #[test]
    fn decomposition_rejects_permutation_voltages() {
        let g = complete(3);
        let s = Signature::identity(&g, GroupSpec::Symmetric(3));
        assert!(matches!(verify_decomposition(&g, &s), Err(SpectraError::NonAbelianSignature(_))));
    }

    #[test]
    fn constant_lift_lemma() {
        let c4k1 = cycle(4).disjoint_union(&Graph::empty(1));
        assert_eq!(verify_constant_lift_lemma(&star(4), &c4k1, &z(2), &a(1)), Ok(true));
        assert!(matches!(
            verify_constant_lift_lemma(&star(4), &c4k1, &z(3), &a(1)),
            Err(SpectraError::PreconditionFailed(msg)) if msg.contains("not symmetric")
        ));
        assert!(matches!(
            verify_constant_lift_lemma(&star(4), &path(5), &z(2), &a(1)),
            Err(SpectraError::PreconditionFailed(msg)) if msg.contains("not cospectral")
        ));
    }

    #[test]
    fn bipartite_double_cover_factorisation() {
        let g = base_g();
        let lifted = build_constant_lift(&g, &z(2), &a(1)).unwrap();
        assert_eq!(lifted.vertex_count(), 12);
        let cp = charpoly(&g);
        // (-1)^6 = 1
        assert_eq!(charpoly(&lifted), &cp * &cp.reflect());
    }
}
