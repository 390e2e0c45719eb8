//! Reflexivity (and optionally normality) over every graph and spanning
//! tree of a given genus, up to isomorphism of the coloured pair.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::{
    check_idp_capped, check_reflexive, obstruction_edges, AnalysisError, NormalityResult,
    ReflexivityResult,
};
use crate::graphs::{
    canonical_code, canonical_form, enumerate_trivalent, is_loop_tree, spanning_trees,
    to_graph_text, CanonicalCode, Multigraph, SpanningTree, MAX_GENUS, MIN_GENUS,
};
use crate::polyhedra::DEFAULT_POINT_CAP;

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    /// Worker threads; 0 lets the pool decide.
    pub workers: usize,
    /// Run the normality check up to this degree.
    pub idp_k_max: Option<usize>,
    pub point_cap: usize,
    /// Genus 5 is slow and must be asked for.
    pub allow_genus_five: bool,
    pub timing: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            workers: 0,
            idp_k_max: None,
            point_cap: DEFAULT_POINT_CAP,
            allow_genus_five: false,
            timing: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationRecord {
    /// Canonically labelled graph; `tree` refers to its edge ids.
    pub graph: Multigraph,
    pub tree: SpanningTree,
    pub reflexivity: ReflexivityResult,
    pub normality: Option<NormalityResult>,
    pub q_vertex_count: usize,
    pub obstruction_applicable: bool,
    pub loop_tree: bool,
    pub elapsed_ms: Option<u128>,
}

/// Pairs `(graph, tree)` of the genus, one per isomorphism class, in the
/// order of the graph enumeration and then of the tree enumeration.
pub fn classify_pairs(genus: usize) -> Result<Vec<(Multigraph, SpanningTree)>, AnalysisError> {
    let mut out = Vec::new();
    for g in enumerate_trivalent(genus)? {
        let mut seen: BTreeSet<CanonicalCode> = BTreeSet::new();
        for t in spanning_trees(&g)? {
            let colors = t.edge_colors(g.edge_count());
            if !seen.insert(canonical_code(&g, &colors)) {
                continue;
            }
            let (cg, origin) = canonical_form(&g, &colors);
            let tree =
                SpanningTree::new(&cg, (0..origin.len()).filter(|&i| t.contains(origin[i])))?;
            out.push((cg, tree));
        }
    }
    Ok(out)
}

fn record(
    g: Multigraph,
    t: SpanningTree,
    options: &ClassifyOptions,
) -> Result<ClassificationRecord, AnalysisError> {
    let start = Instant::now();
    let reflexivity = check_reflexive(&g, &t)?;
    let normality = match options.idp_k_max {
        Some(k) => Some(check_idp_capped(&g, &t, k, options.point_cap)?),
        None => None,
    };
    let obstruction_applicable = !obstruction_edges(&g, &t).is_empty();
    let loop_tree = is_loop_tree(&g, &t);
    Ok(ClassificationRecord {
        q_vertex_count: reflexivity.vertex_count,
        graph: g,
        tree: t,
        reflexivity,
        normality,
        obstruction_applicable,
        loop_tree,
        elapsed_ms: options.timing.then(|| start.elapsed().as_millis()),
    })
}

pub fn classify(
    genus: usize,
    options: &ClassifyOptions,
) -> Result<Vec<ClassificationRecord>, AnalysisError> {
    let top = if options.allow_genus_five {
        MAX_GENUS
    } else {
        4
    };
    if !(MIN_GENUS..=top).contains(&genus) {
        return Err(AnalysisError::GenusOutOfRange(genus));
    }
    let pairs = classify_pairs(genus)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers)
        .build()
        .map_err(|e| AnalysisError::InvalidArgument(e.to_string()))?;
    // collect() on an indexed parallel iterator keeps input order
    pool.install(|| {
        pairs
            .into_par_iter()
            .map(|(g, t)| record(g, t, options))
            .collect()
    })
}

fn record_json(r: &ClassificationRecord) -> Value {
    let mut v = json!({
        "graph": to_graph_text(&r.graph, Some(r.tree.tree_edges())),
        "genus": r.graph.betti(),
        "tree": r.tree.tree_edges(),
        "reflexive": r.reflexivity.reflexive,
        "origin_interior": r.reflexivity.origin_interior,
        "dual_check": r.reflexivity.dual_check,
        "non_lattice_vertices": r.reflexivity.non_lattice_vertices,
        "q_vertex_count": r.q_vertex_count,
        "obstruction_applicable": r.obstruction_applicable,
        "loop_tree": r.loop_tree,
        "normality": r.normality,
    });
    if let Some(ms) = r.elapsed_ms {
        v["elapsed_ms"] = json!(ms);
    }
    v
}

pub fn report_json(records: &[ClassificationRecord]) -> Value {
    Value::Array(records.iter().map(record_json).collect())
}
