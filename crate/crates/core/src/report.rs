//! The worked-example report behind `cospec verify-paper`: every checkable
//! claim about the objects in [`crate::fixtures`], recomputed from scratch.
//!
//! Checks 1, 2, 3 and 6 are expected to pass. Checks 4 and 5 report
//! isomorphism status, which nothing requires to come out either way.

use std::fmt;

use crate::algebra::{GroupElement, GroupSpec};
use crate::fixtures::{c4_base, c4_cover_signature, validate_example_matrix, FixtureSet, EXAMPLE_LIFT_EDGES};
use crate::graph::Graph;
use crate::isomorph::{are_isomorphic, canonical_form};
use crate::lift::{build_lift, Signature};
use crate::search::{corollary_generate, CorollaryParams};
use crate::spectra::{charpoly, verify_constant_lift_lemma, verify_decomposition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub number: u8,
    pub status: Status,
    pub summary: String,
    pub details: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct ExampleReport {
    pub checks: Vec<Check>,
}

impl ExampleReport {
    /// True when no check failed. Informational checks never fail.
    pub fn all_expected_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, number: u8) -> Option<&Check> {
        self.checks.iter().find(|c| c.number == number)
    }
}

impl fmt::Display for ExampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "[{}] {} {}", c.number, c.status, c.summary)?;
            for d in &c.details {
                writeln!(f, "      {d}")?;
            }
        }
        let verdict = if self.all_expected_pass() { "all expected checks passed" } else { "some checks FAILED" };
        writeln!(f, "{verdict}")
    }
}

fn pass_if(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn verify_example() -> ExampleReport {
    let fx = FixtureSet::load();
    let lifts = build_lift(&fx.g, &fx.s).and_then(|a| Ok((a, build_lift(&fx.h, &fx.s_prime)?)));
    let mut checks = vec![check_bases(&fx)];
    let fixture_graphs = match &lifts {
        Ok((a, b)) => {
            let (check, graphs) = check_fixture_matrices(&fx, a, b);
            checks.push(check);
            checks.push(check_constructed(a, b));
            graphs
        }
        Err(e) => {
            let msg = format!("could not build the lifts: {e}");
            checks.push(Check { number: 2, status: Status::Fail, summary: msg.clone(), details: vec![] });
            checks.push(Check { number: 3, status: Status::Fail, summary: msg, details: vec![] });
            None
        }
    };
    if let Ok((a, b)) = &lifts {
        checks.push(check_against_fixtures(a, b, fixture_graphs.as_ref()));
        checks.push(check_lift_pair_isomorphism(a, b));
    }
    checks.push(check_decompositions(&fx));
    ExampleReport { checks }
}

fn check_bases(fx: &FixtureSet) -> Check {
    let (pg, ph) = (charpoly(&fx.g), charpoly(&fx.h));
    Check {
        number: 1,
        status: pass_if(pg == ph),
        summary: "G and H are cospectral".into(),
        details: vec![format!("charpoly(G) = {pg}"), format!("charpoly(H) = {ph}")],
    }
}

/// Check 2. Falls back to the constructed lifts when a reference matrix is
/// malformed, and reports the malformation.
fn check_fixture_matrices(fx: &FixtureSet, a: &Graph, b: &Graph) -> (Check, Option<(Graph, Graph)>) {
    let mut details = Vec::new();
    let mut parsed = Vec::new();
    for (name, text) in [("A(G(s))", fx.a_g_s), ("A(H(s'))", fx.a_h_s_prime)] {
        match validate_example_matrix(text) {
            Ok(m) => {
                details.push(format!("{name}: symmetric 0/1, zero diagonal, {} ones", 2 * EXAMPLE_LIFT_EDGES));
                parsed.push(Graph::from_adjacency(&m).expect("validated matrix"));
            }
            Err(problems) => {
                for p in problems {
                    details.push(format!("{name}: erratum: {p}"));
                }
            }
        }
    }
    if parsed.len() == 2 {
        let (pa, pb) = (charpoly(&parsed[0]), charpoly(&parsed[1]));
        details.push(format!("charpoly = {pa}"));
        let check = Check {
            number: 2,
            status: pass_if(pa == pb),
            summary: "reference 18x18 matrices are well formed and cospectral".into(),
            details,
        };
        let b_graph = parsed.pop().unwrap();
        let a_graph = parsed.pop().unwrap();
        (check, Some((a_graph, b_graph)))
    } else {
        details.push("evaluated on the constructed lifts instead".into());
        let check = Check {
            number: 2,
            status: pass_if(charpoly(a) == charpoly(b)),
            summary: "reference matrices malformed; constructed lifts cospectral".into(),
            details,
        };
        (check, None)
    }
}

fn check_constructed(a: &Graph, b: &Graph) -> Check {
    let (pa, pb) = (charpoly(a), charpoly(b));
    let sizes_ok = [a, b].iter().all(|x| x.vertex_count() == 18 && x.edge_count() == EXAMPLE_LIFT_EDGES);
    Check {
        number: 3,
        status: pass_if(sizes_ok && pa == pb),
        summary: "lifts G(s), H(s') built from the S3 signatures are cospectral".into(),
        details: vec![
            format!("G(s): {} vertices, {} edges", a.vertex_count(), a.edge_count()),
            format!("H(s'): {} vertices, {} edges", b.vertex_count(), b.edge_count()),
            format!("charpoly = {pa}"),
        ],
    }
}

fn check_against_fixtures(a: &Graph, b: &Graph, reference: Option<&(Graph, Graph)>) -> Check {
    let details = match reference {
        Some((pa, pb)) => {
            let same = |x: &Graph, y: &Graph| match (canonical_form(x), canonical_form(y)) {
                (Ok(cx), Ok(cy)) => yes_no(cx == cy).to_string(),
                (Err(e), _) | (_, Err(e)) => format!("unknown ({e})"),
            };
            vec![
                format!("G(s) isomorphic to reference A(G(s)): {}", same(a, pa)),
                format!("H(s') isomorphic to reference A(H(s')): {}", same(b, pb)),
            ]
        }
        None => vec!["reference matrices unavailable".into()],
    };
    Check { number: 4, status: Status::Info, summary: "constructed lifts versus reference matrices".into(), details }
}

fn check_lift_pair_isomorphism(a: &Graph, b: &Graph) -> Check {
    let line = match are_isomorphic(a, b) {
        Ok(m) => format!("G(s) and H(s') non-isomorphic: {}", yes_no(m.is_none())),
        Err(e) => format!("unknown ({e})"),
    };
    Check { number: 5, status: Status::Info, summary: "isomorphism of G(s) and H(s')".into(), details: vec![line] }
}

fn check_decompositions(fx: &FixtureSet) -> Check {
    let mut details = Vec::new();
    let mut ok = true;
    let mut record = |label: String, outcome: Result<bool, String>| {
        let text = match &outcome {
            Ok(true) => "holds".to_string(),
            Ok(false) => "FAILS".to_string(),
            Err(e) => format!("error: {e}"),
        };
        ok &= outcome == Ok(true);
        details.push(format!("{label}: {text}"));
    };

    let mut cases: Vec<(String, Graph, Signature)> =
        vec![("C4 double cover over Z2".into(), c4_base(), c4_cover_signature())];
    let el = |a: u32| GroupElement::Abelian(vec![a]);
    let z3 = GroupSpec::cyclic(3);
    let params = CorollaryParams::with_v1_from_w(el(1), el(2), el(0), el(2), el(2), el(0), el(0));
    match corollary_generate(&z3, &params) {
        Ok((s, sp)) => {
            cases.push(("G over Z3 (image of s)".into(), fx.g.clone(), s));
            cases.push(("H over Z3 (image of s')".into(), fx.h.clone(), sp));
        }
        Err(e) => record("Z3 images of s, s'".into(), Err(e.to_string())),
    }
    for (spec, rank) in [("Z2xZ2", 9_001u64), ("Z4", 12_345), ("Z6", 200_000)] {
        let gr: GroupSpec = spec.parse().expect("valid group");
        for (name, base) in [("G", &fx.g), ("H", &fx.h)] {
            match Signature::from_rank(base, &gr, rank) {
                Ok(s) => cases.push((format!("{name} over {spec}, signature #{rank}"), base.clone(), s)),
                Err(e) => record(format!("{name} over {spec}"), Err(e.to_string())),
            }
        }
    }
    for (label, base, s) in cases {
        record(label, verify_decomposition(&base, &s).map(|r| r.holds).map_err(|e| e.to_string()));
    }

    let z2 = GroupSpec::cyclic(2);
    record(
        "constant Z2 lifts of G and H by the involution are cospectral".into(),
        verify_constant_lift_lemma(&fx.g, &fx.h, &z2, &el(1)).map_err(|e| e.to_string()),
    );

    Check {
        number: 6,
        status: pass_if(ok),
        summary: "lift spectrum equals the union of the character spectra".into(),
        details,
    }
}
