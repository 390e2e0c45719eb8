//! A self-contained suite of known results, each reported as pass, fail or
//! indeterminate with a short detail line.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use super::{
    check_idp, check_reflexive, check_reflexive_until, classify, classify_pairs, obstruction_edges,
    obstruction_witness, AnalysisError, ClassifyOptions,
};
use crate::builtins;
use crate::graphs::{
    are_isomorphic_colored, is_loop_tree, spanning_trees, Multigraph, SpanningTree,
};
use crate::graphs::{canonical_code, CanonicalCode};
use crate::lattices::{m_lattice, n_lattice};
use crate::polyhedra::{self, dilate, translate, vertices, PolyError};
use crate::polytopes::{
    anticanonical_rays, polytope_from_rays, polytope_p, polytope_q_with, twos, LoopConvention,
};
use crate::rational::{int, EdgeVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Indeterminate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Indeterminate => "INDETERMINATE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn checklist(&self) -> String {
        self.checks
            .iter()
            .map(|c| format!("[{}] {}: {}\n", c.verdict, c.name, c.detail))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub convention: LoopConvention,
    /// Largest genus for the loop-tree and obstruction sweeps.
    pub sweep_genus: usize,
    pub stretch: bool,
    pub stretch_budget: Duration,
    pub workers: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            convention: LoopConvention::HalfEdge,
            sweep_genus: 4,
            stretch: false,
            stretch_budget: Duration::from_secs(30 * 60),
            workers: 0,
        }
    }
}

/// Columns of a row-major integer matrix, sorted.
pub(crate) fn columns(rows: &[&[i64]]) -> Vec<EdgeVector> {
    let mut out: Vec<EdgeVector> = (0..rows[0].len())
        .map(|j| EdgeVector::from_ints(&rows.iter().map(|r| r[j]).collect::<Vec<_>>()))
        .collect();
    out.sort();
    out
}

pub(crate) const DUMBBELL_Q: [&[i64]; 3] =
    [&[-2, 1, -2, 1, 1], &[-2, -2, 1, 1, 1], &[-2, -2, -2, -2, 4]];
pub(crate) const THETA_Q: [&[i64]; 3] =
    [&[-2, 1, 1, -2, 1], &[-2, 1, -2, 1, 1], &[-2, -2, 1, 1, 4]];
pub(crate) const K4_STAR_Q: [&[i64]; 6] = [
    &[-2, 1, -2, 1, 1, 1, -2, 1, -2, 1, -2, 1, 1, 1, 1],
    &[-2, 1, 1, -2, 1, -2, 1, 1, -2, 1, 1, 1, -2, 1, 1],
    &[-2, 1, -2, 1, 1, -2, 1, -2, 1, -2, 1, 1, 1, 1, 1],
    &[-2, -2, 1, 1, 4, 1, 1, -2, -2, 4, 1, 4, 1, -2, 4],
    &[-2, -2, 1, 1, 4, -2, -2, 1, 1, 1, 4, -2, 1, 4, 4],
    &[-2, -2, -2, -2, -2, 1, 1, 1, 1, 1, 1, 4, 4, 4, 4],
];
pub(crate) const K4_PATH_Q: [&[i64]; 6] = [
    &[-2, 1, -2, 1, 1, 1, -2, 1, -2, 1, 1, -2, 1, 1, 1, 1],
    &[-2, 1, 1, -2, 4, -2, 1, 1, -2, 1, 1, 4, 1, -2, 4, 4],
    &[-2, 1, -2, 1, 1, -2, 1, -2, 1, 1, -2, 1, 1, 1, 1, 1],
    &[-2, -2, 1, 1, 1, 1, 1, -2, -2, -2, 4, 4, 4, 1, 1, 7],
    &[-2, -2, 1, 1, 1, -2, -2, 1, 1, 1, 1, 1, -2, 1, 1, 1],
    &[-2, -2, -2, -2, -2, 1, 1, 1, 1, 1, 1, 1, 4, 4, 4, 4],
];
pub(crate) const K4_PATH_TREE: [usize; 3] = [1, 3, 5];
pub(crate) const K4_RED_VERTEX: [i64; 6] = [1, 1, 1, -2, 1, 1];

struct Suite {
    checks: Vec<CheckResult>,
}

impl Suite {
    fn record(&mut self, name: &str, outcome: Result<(Verdict, String), AnalysisError>) {
        let (verdict, detail) = outcome.unwrap_or_else(|e| (Verdict::Fail, format!("error: {e}")));
        self.checks.push(CheckResult {
            name: name.to_string(),
            verdict,
            detail,
        });
    }
}

fn pass_if(ok: bool, detail: impl Into<String>) -> (Verdict, String) {
    (
        if ok { Verdict::Pass } else { Verdict::Fail },
        detail.into(),
    )
}

fn diff(found: &[EdgeVector], expected: &[EdgeVector]) -> String {
    let f: BTreeSet<&EdgeVector> = found.iter().collect();
    let e: BTreeSet<&EdgeVector> = expected.iter().collect();
    let missing: Vec<String> = e.difference(&f).map(|v| v.to_string()).collect();
    let extra: Vec<String> = f.difference(&e).map(|v| v.to_string()).collect();
    if missing.is_empty() && extra.is_empty() {
        format!("{} vertices match", found.len())
    } else {
        format!(
            "missing [{}], unexpected [{}]",
            missing.join(" "),
            extra.join(" ")
        )
    }
}

fn vertex_matrix(
    pair: (Multigraph, SpanningTree),
    convention: LoopConvention,
    golden: &[&[i64]],
) -> Result<(Verdict, String), AnalysisError> {
    let (g, t) = pair;
    let q = polytope_q_with(&g, &t, convention)?;
    let expected = columns(golden);
    let found = match vertices(&q) {
        Ok(v) if v.is_bounded() => v.vertices,
        Ok(_) => return Ok(pass_if(false, "polytope is unbounded")),
        Err(e) => return Ok(pass_if(false, format!("vertex enumeration failed: {e}"))),
    };
    let m = m_lattice(&g)?;
    let all_in = found
        .iter()
        .try_fold(true, |acc, v| m.contains(v).map(|c| acc && c))?;
    Ok(pass_if(
        found == expected && all_in,
        format!("{}; all in M: {all_in}", diff(&found, &expected)),
    ))
}

fn k4_path(convention: LoopConvention) -> Result<(Verdict, String), AnalysisError> {
    let (g, _) = builtins::k4();
    let t = SpanningTree::new(&g, K4_PATH_TREE)?;
    let q = polytope_q_with(&g, &t, convention)?;
    let found = vertices(&q)?.vertices;
    let m = m_lattice(&g)?;
    let mut outside = Vec::new();
    for v in &found {
        if !m.contains(v)? {
            outside.push(v.clone());
        }
    }
    let ok = found == columns(&K4_PATH_Q) && outside == vec![EdgeVector::from_ints(&K4_RED_VERTEX)];
    let shown: Vec<String> = outside.iter().map(|v| v.to_string()).collect();
    Ok(pass_if(
        ok,
        format!(
            "{}; outside M: [{}]",
            diff(&found, &columns(&K4_PATH_Q)),
            shown.join(" ")
        ),
    ))
}

fn translation(limit: usize) -> Result<(Verdict, String), AnalysisError> {
    let mut count = 0;
    for genus in 2..=limit {
        for (g, t) in classify_pairs(genus)? {
            let q = crate::polytopes::polytope_q(&g, &t)?;
            let lhs = vertices(&translate(&q, &twos(g.edge_count()))?)?;
            let rhs = vertices(&dilate(&polytope_p(&g, &t)?, &int(3))?)?;
            if lhs != rhs {
                return Ok(pass_if(
                    false,
                    format!("differs for genus {genus} tree {t}"),
                ));
            }
            count += 1;
        }
    }
    Ok(pass_if(true, format!("{count} pairs")))
}

fn genus_two_dilates() -> Result<(Verdict, String), AnalysisError> {
    let goldens: [(_, &[&[i64]]); 2] = [
        (
            builtins::dumbbell(),
            &[&[0, 0, 0], &[3, 0, 0], &[0, 3, 0], &[3, 3, 0], &[3, 3, 6]],
        ),
        (
            builtins::theta(),
            &[&[0, 0, 0], &[3, 3, 0], &[3, 0, 3], &[0, 3, 3], &[3, 3, 6]],
        ),
    ];
    for ((g, t), points) in goldens {
        let mut expected: Vec<EdgeVector> =
            points.iter().map(|p| EdgeVector::from_ints(p)).collect();
        expected.sort();
        let three = vertices(&dilate(&polytope_p(&g, &t)?, &int(3))?)?;
        if three.vertices != expected {
            return Ok(pass_if(false, diff(&three.vertices, &expected)));
        }
        let back = three.shift(&-&twos(3));
        let q = vertices(&crate::polytopes::polytope_q(&g, &t)?)?;
        if back != q {
            return Ok(pass_if(false, "shift by -2 does not give Q"));
        }
    }
    Ok(pass_if(true, "both genus-2 dilates match"))
}

fn genus_three_classes() -> Result<(Verdict, String), AnalysisError> {
    let records = classify(3, &ClassifyOptions::default())?;
    let reflexive: Vec<_> = records.iter().filter(|r| r.reflexivity.reflexive).collect();
    let (k4, _) = builtins::k4();
    let expected = [
        builtins::rattle(),
        builtins::star3(),
        (k4.clone(), SpanningTree::new(&k4, [3, 4, 5])?),
    ];
    let matched = expected.iter().all(|(g, t)| {
        reflexive.iter().any(|r| {
            are_isomorphic_colored(
                g,
                &t.edge_colors(g.edge_count()),
                &r.graph,
                &r.tree.edge_colors(r.graph.edge_count()),
            )
        })
    });
    Ok(pass_if(
        reflexive.len() == 3 && matched,
        format!(
            "{} pairs, {} reflexive, expected classes found: {matched}",
            records.len(),
            reflexive.len()
        ),
    ))
}

fn loop_trees(limit: usize) -> Result<(Verdict, String), AnalysisError> {
    let mut count = 0;
    for genus in 2..=limit {
        for (g, t) in classify_pairs(genus)? {
            if !is_loop_tree(&g, &t) {
                continue;
            }
            count += 1;
            if !check_reflexive(&g, &t)?.reflexive {
                return Ok(pass_if(
                    false,
                    format!("genus {genus} loop-tree not reflexive"),
                ));
            }
            let n = check_idp(&g, &t, 3)?;
            if let Some(why) = &n.indeterminate {
                return Ok((Verdict::Indeterminate, format!("genus {genus}: {why}")));
            }
            if !n.failures.is_empty() {
                return Ok(pass_if(
                    false,
                    format!("genus {genus}: {} undecomposable points", n.failures.len()),
                ));
            }
        }
    }
    Ok(pass_if(
        true,
        format!("{count} loop-trees reflexive with no degree-3 failures"),
    ))
}

fn obstructions(genus: usize) -> Result<(Verdict, String), AnalysisError> {
    let mut pairs = 0;
    for (g, t) in classify_pairs(genus)? {
        let edges = obstruction_edges(&g, &t);
        if edges.is_empty() {
            continue;
        }
        pairs += 1;
        for f in edges {
            let w = obstruction_witness(&g, &t, f)?;
            if !w.is_vertex() || w.in_lattice {
                return Ok(pass_if(
                    false,
                    format!("witness {} for edge {f} fails", w.point),
                ));
            }
        }
        if check_reflexive(&g, &t)?.reflexive {
            return Ok(pass_if(false, format!("pair with tree {t} is reflexive")));
        }
    }
    Ok(pass_if(
        pairs > 0,
        format!("{pairs} genus-{genus} pairs with witnesses"),
    ))
}

fn trees_up_to_symmetry(g: &Multigraph) -> Result<Vec<SpanningTree>, AnalysisError> {
    let mut seen: BTreeSet<CanonicalCode> = BTreeSet::new();
    let mut out = Vec::new();
    for t in spanning_trees(g)? {
        if seen.insert(canonical_code(g, &t.edge_colors(g.edge_count()))) {
            out.push(t);
        }
    }
    Ok(out)
}

fn k33() -> Result<(Verdict, String), AnalysisError> {
    let (g, _) = builtins::k33();
    let trees = trees_up_to_symmetry(&g)?;
    for t in &trees {
        if check_reflexive(&g, t)?.reflexive {
            return Ok(pass_if(false, format!("tree {t} is reflexive")));
        }
    }
    Ok(pass_if(
        true,
        format!("{} tree classes, none reflexive", trees.len()),
    ))
}

fn petersen(budget: Duration) -> Result<(Verdict, String), AnalysisError> {
    let (g, t) = builtins::petersen();
    match check_reflexive_until(&g, &t, Some(Instant::now() + budget)) {
        Ok(r) => Ok(pass_if(
            !r.reflexive,
            format!(
                "{} vertices, {} outside M",
                r.vertex_count,
                r.non_lattice_vertices.len()
            ),
        )),
        Err(AnalysisError::Poly(PolyError::Timeout)) => {
            Ok((Verdict::Indeterminate, "time budget exhausted".into()))
        }
        Err(e) => Err(e),
    }
}

fn rays_rebuild_q() -> Result<(Verdict, String), AnalysisError> {
    for (g, t) in [builtins::dumbbell(), builtins::theta(), builtins::k4()] {
        let rays = anticanonical_rays(&g, &t)?;
        let n = n_lattice(&g)?;
        for r in &rays {
            if !n.is_primitive(&r.generator)? {
                return Ok(pass_if(false, format!("{} not primitive", r.generator)));
            }
        }
        let rebuilt = vertices(&polytope_from_rays(g.edge_count(), &rays)?)?;
        if rebuilt != vertices(&crate::polytopes::polytope_q(&g, &t)?)? {
            return Ok(pass_if(false, "rebuilt polytope differs"));
        }
    }
    Ok(pass_if(true, "rays primitive in N and rebuild Q"))
}

fn dimensions() -> Result<(Verdict, String), AnalysisError> {
    for name in ["dumbbell", "theta", "k4", "rattle", "star3", "k33"] {
        let (g, t) = builtins::by_name(name).expect("builtin");
        let d = polyhedra::dim(&polytope_p(&g, &t)?)?;
        if d != 3 * g.betti() - 3 {
            return Ok(pass_if(false, format!("{name}: dimension {d}")));
        }
    }
    Ok(pass_if(true, "dimension 3g-3 for the builtin graphs"))
}

pub fn verify_paper(options: &VerifyOptions) -> VerifyReport {
    let mut s = Suite { checks: Vec::new() };
    let conv = options.convention;
    s.record(
        "dumbbell vertex matrix",
        vertex_matrix(builtins::dumbbell(), conv, &DUMBBELL_Q),
    );
    s.record(
        "theta vertex matrix",
        vertex_matrix(builtins::theta(), conv, &THETA_Q),
    );
    s.record(
        "k4 star tree vertex matrix",
        vertex_matrix(builtins::k4(), conv, &K4_STAR_Q),
    );
    s.record("k4 path tree single non-lattice vertex", k4_path(conv));
    s.record("dimension of P", dimensions());
    s.record("Q + 2 = 3P up to genus 3", translation(3));
    s.record("genus 2 third dilates", genus_two_dilates());
    let genus_two = classify(
        2,
        &ClassifyOptions {
            workers: options.workers,
            ..Default::default()
        },
    )
    .map(|r| {
        pass_if(
            r.len() == 2 && r.iter().all(|x| x.reflexivity.reflexive),
            format!("{} pairs", r.len()),
        )
    });
    s.record("genus 2 classification", genus_two);
    s.record("genus 3 classification", genus_three_classes());
    s.record("anticanonical rays", rays_rebuild_q());
    s.record(
        "loop-trees reflexive and normal",
        loop_trees(options.sweep_genus),
    );
    if options.sweep_genus >= 4 {
        s.record("genus 4 obstruction witnesses", obstructions(4));
    }
    s.record("k33 never reflexive", k33());
    if options.stretch {
        s.record("petersen not reflexive", petersen(options.stretch_budget));
    }
    VerifyReport { checks: s.checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn broken_convention_fails_the_dumbbell_check() {
        let good =
            vertex_matrix(builtins::dumbbell(), LoopConvention::HalfEdge, &DUMBBELL_Q).unwrap();
        assert_eq!(good.0, Verdict::Pass);
        let bad = vertex_matrix(builtins::dumbbell(), LoopConvention::Omit, &DUMBBELL_Q).unwrap();
        assert_eq!(bad.0, Verdict::Fail);
    }

    #[test]
    fn k4_goldens() {
        assert_eq!(
            vertex_matrix(builtins::k4(), LoopConvention::HalfEdge, &K4_STAR_Q)
                .unwrap()
                .0,
            Verdict::Pass
        );
        assert_eq!(k4_path(LoopConvention::HalfEdge).unwrap().0, Verdict::Pass);
    }
}
