//! The worked objects of the cospectral-lift construction: the base pair
//! `G`, `H`, the `C₄` double cover that yields `C₈`, the two `S₃`
//! signatures of the 18-vertex example, and reference adjacency matrices
//! for that example.
//!
//! The reference matrices are kept as text and parsed on demand, so a
//! transcription problem surfaces as a [`FixtureProblem`] instead of being
//! corrected silently.

use thiserror::Error;

use crate::graph::Graph;
use crate::lift::{parse_signature, Signature};

/// The 6-vertex graph `G`: a triangle pair `2-3-4`, `3-4-5` with pendant
/// vertices 1 and 6.
pub fn base_g() -> Graph {
    Graph::from_edge_list(6, [(1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (5, 6)]).unwrap()
}

/// The 6-vertex graph `H`, cospectral with [`base_g`].
pub fn base_h() -> Graph {
    Graph::from_edge_list(6, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (3, 6), (5, 6)]).unwrap()
}

/// The 4-cycle `1-3-2-4-1`.
pub fn c4_base() -> Graph {
    Graph::from_edge_list(4, [(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap()
}

pub const C4_COVER_SIGNATURE: &str = "\
group Z2
1 3 : 0
1 4 : 0
2 3 : 1
2 4 : 0
";

pub const EXAMPLE_S: &str = "\
group S3
1 2 : (1,2,3)
2 3 : (1,3,2)
2 4 : id
3 4 : (1,3,2)
3 5 : (1,3,2)
4 5 : (1,2,3)
5 6 : (1,2)
";

pub const EXAMPLE_S_PRIME: &str = "\
group S3
1 2 : (1,3,2)
1 3 : id
2 3 : (1,3,2)
3 4 : id
3 5 : (1,3,2)
3 6 : id
5 6 : (1,3,2)
";

pub fn c4_cover_signature() -> Signature {
    parse_signature(C4_COVER_SIGNATURE, &c4_base()).unwrap()
}

pub fn example_s() -> Signature {
    parse_signature(EXAMPLE_S, &base_g()).unwrap()
}

pub fn example_s_prime() -> Signature {
    parse_signature(EXAMPLE_S_PRIME, &base_h()).unwrap()
}

/// Edge count a lift of a 7-edge base over `S₃` must have.
pub const EXAMPLE_LIFT_EDGES: usize = 21;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FixtureProblem {
    #[error("row {row}: {reason}")]
    BadRow { row: usize, reason: String },
    #[error("matrix has {rows} rows, expected {expected}")]
    WrongSize { rows: usize, expected: usize },
    #[error("entry ({0}, {1}) differs from ({1}, {0})")]
    Asymmetric(usize, usize),
    #[error("diagonal entry {0} is nonzero")]
    Diagonal(usize),
    #[error("{ones} ones, expected {expected}")]
    OnesCount { ones: usize, expected: usize },
}

/// Both reference matrices plus the objects they were derived from.
#[derive(Clone, Debug)]
pub struct FixtureSet {
    pub g: Graph,
    pub h: Graph,
    pub s: Signature,
    pub s_prime: Signature,
    pub a_g_s: &'static str,
    pub a_h_s_prime: &'static str,
}

impl FixtureSet {
    pub fn load() -> Self {
        FixtureSet {
            g: base_g(),
            h: base_h(),
            s: example_s(),
            s_prime: example_s_prime(),
            a_g_s: A_G_S,
            a_h_s_prime: A_H_S_PRIME,
        }
    }
}

/// Parses comma-separated 0/1 rows.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<u8>>, FixtureProblem> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(r, line)| {
            line.split(',')
                .map(|cell| match cell.trim() {
                    "0" => Ok(0),
                    "1" => Ok(1),
                    other => Err(FixtureProblem::BadRow { row: r + 1, reason: format!("entry {other:?}") }),
                })
                .collect()
        })
        .collect()
}

/// Parses a reference example matrix and checks it is an 18-vertex simple
/// graph with 21 edges. Every problem found is returned, 1-based.
pub fn validate_example_matrix(text: &str) -> Result<Vec<Vec<u8>>, Vec<FixtureProblem>> {
    let n = 18;
    let m = parse_matrix(text).map_err(|e| vec![e])?;
    let mut problems = Vec::new();
    if m.len() != n {
        problems.push(FixtureProblem::WrongSize { rows: m.len(), expected: n });
    }
    for (r, row) in m.iter().enumerate() {
        if row.len() != n {
            problems.push(FixtureProblem::BadRow { row: r + 1, reason: format!("{} entries", row.len()) });
        }
    }
    if !problems.is_empty() {
        return Err(problems);
    }
    for i in 0..n {
        if m[i][i] != 0 {
            problems.push(FixtureProblem::Diagonal(i + 1));
        }
        for j in (i + 1)..n {
            if m[i][j] != m[j][i] {
                problems.push(FixtureProblem::Asymmetric(i + 1, j + 1));
            }
        }
    }
    let ones: usize = m.iter().flatten().map(|&x| x as usize).sum();
    if ones != 2 * EXAMPLE_LIFT_EDGES {
        problems.push(FixtureProblem::OnesCount { ones, expected: 2 * EXAMPLE_LIFT_EDGES });
    }
    if problems.is_empty() {
        Ok(m)
    } else {
        Err(problems)
    }
}

const A_G_S: &str = "\
0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0\n\
0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0\n\
0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0\n\
0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0\n\
1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0\n\
0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0\n\
0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0\n\
0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0\n\
0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0\n\
0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0\n\
0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0\n\
0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0\n\
0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0\n\
0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0\n\
0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1\n\
0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0\n\
0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0\n\
0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0\n";

const A_H_S_PRIME: &str = "\
0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0\n\
0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0\n\
0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0\n\
0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0\n\
0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0\n\
1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0\n\
0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1\n\
0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0\n\
1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0\n\
0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0\n\
0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0\n\
0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0\n\
0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1\n\
0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0\n\
0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0\n\
0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0\n\
0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0\n\
0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0\n";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_matrices_are_well_formed() {
        let set = FixtureSet::load();
        for text in [set.a_g_s, set.a_h_s_prime] {
            let m = validate_example_matrix(text).unwrap();
            assert!(Graph::from_adjacency(&m).is_ok());
        }
    }

    #[test]
    fn damaged_matrix_is_reported() {
        let mut rows: Vec<String> = A_G_S.lines().map(String::from).collect();
        rows[0] = rows[0].replacen("0", "1", 1);
        let problems = validate_example_matrix(&rows.join("\n")).unwrap_err();
        assert!(problems.contains(&FixtureProblem::Diagonal(1)));
        assert!(problems.contains(&FixtureProblem::OnesCount { ones: 43, expected: 42 }));
    }

    #[test]
    fn signatures_sit_on_their_bases() {
        assert!(example_s().is_on(&base_g()));
        assert!(example_s_prime().is_on(&base_h()));
        assert!(c4_cover_signature().is_on(&c4_base()));
    }
}
