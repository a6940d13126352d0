//! Slow, obviously-correct reference implementations used as oracles.

#![allow(dead_code)]

use cospectral_lifts::algebra::IntPoly;
use cospectral_lifts::graph::Graph;
use rand::Rng;

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut total = 0i128;
    for c in 0..n {
        if m[0][c] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, &x)| x).collect()).collect();
        let sign = if c % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][c] as i128 * cofactor_det(&minor);
    }
    total
}

/// `det(tI - A)` by cofactor expansion over polynomial entries.
pub fn cofactor_charpoly(a: &[Vec<i64>]) -> IntPoly {
    let n = a.len();
    let t = IntPoly::variable();
    let m: Vec<Vec<IntPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = IntPoly::constant(-a[i][j]);
                    if i == j {
                        &t + &c
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    poly_det(&m)
}

fn poly_det(m: &[Vec<IntPoly>]) -> IntPoly {
    let n = m.len();
    if n == 0 {
        return IntPoly::one();
    }
    let mut total = IntPoly::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<IntPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][c] * &poly_det(&minor);
        total = if c % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

pub fn adjacency_i64(g: &Graph) -> Vec<Vec<i64>> {
    g.adjacency_matrix().iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect()
}

/// Tries every bijection.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut found = false;
    permute(&mut perm, 0, &mut |p| {
        if !found && g.relabel(p) == *h {
            found = true;
        }
    });
    found
}

fn permute(p: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            if rng.gen_bool(p) {
                pairs.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, pairs).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Every abelian group of order at most 12, one per isomorphism class.
pub fn small_abelian_groups() -> Vec<cospectral_lifts::algebra::GroupSpec> {
    let specs = [
        "Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "Z7", "Z8", "Z2xZ4", "Z2xZ2xZ2", "Z9", "Z3xZ3", "Z10", "Z11",
        "Z12", "Z2xZ6",
    ];
    specs.iter().map(|s| s.parse().unwrap()).collect()
}

/// `det(tI - A)` by the Faddeev-LeVerrier recurrence. For an integer
/// matrix every intermediate matrix is integral and each division by `k`
/// is exact.
pub fn leverrier_charpoly(a: &[Vec<i64>]) -> IntPoly {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Zero};

    let n = a.len();
    let am: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mul = |x: &[Vec<BigInt>], y: &[Vec<BigInt>]| -> Vec<Vec<BigInt>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).fold(BigInt::zero(), |acc, k| acc + &x[i][k] * &y[k][j])).collect())
            .collect()
    };
    // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut next = mul(&am, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let am_k = mul(&am, &m);
        let trace = (0..n).fold(BigInt::zero(), |acc, i| acc + &am_k[i][i]);
        let (q, r) = trace.div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "non-integral trace step");
        coeffs[n - k] = -q;
    }
    IntPoly::from_coeffs(coeffs)
}
