//! Verdicts on the polytopes of a graph and spanning tree.

mod classify;
mod obstruction;
mod verify;

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::graphs::{GraphError, Multigraph, SpanningTree};
use crate::lattices::{m_lattice, n_lattice, GraphLattice, LatticeError};
use crate::polyhedra::{self, HPolytope, PolyError, DEFAULT_POINT_CAP};
use crate::polytopes::{polytope_p, polytope_q, BuildError};
use crate::rational::{EdgeVector, Rational};

pub use classify::{classify, classify_pairs, report_json, ClassificationRecord, ClassifyOptions};
pub use obstruction::{
    obstruction_applies, obstruction_edges, obstruction_witness, ObstructionWitness,
};
pub use verify::{verify_paper, CheckResult, Verdict, VerifyOptions, VerifyReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{point} is not a sum of {k} lattice points of the polytope")]
    NoDecomposition { point: String, k: usize },
    #[error("obstruction does not apply: {0}")]
    ObstructionNotApplicable(String),
    #[error("genus {0} is outside the supported range")]
    GenusOutOfRange(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReflexivityResult {
    pub reflexive: bool,
    pub non_lattice_vertices: Vec<EdgeVector>,
    /// Every vertex of the polar dual lies in `N`.
    pub dual_check: bool,
    pub origin_interior: bool,
    pub vertex_count: usize,
}

/// Reflexivity of `q` with respect to `m` (and its dual `n`): the origin is
/// interior, the vertices lie in `m`, and the polar's vertices lie in `n`.
pub fn check_reflexive_polytope(
    q: &HPolytope,
    m: &GraphLattice,
    n: &GraphLattice,
    deadline: Option<Instant>,
) -> Result<ReflexivityResult, AnalysisError> {
    let origin_interior = polyhedra::origin_interior(q);
    let v = polyhedra::vertices_until(q, deadline)?;
    let mut non_lattice_vertices = Vec::new();
    for x in &v.vertices {
        if !m.contains(x)? {
            non_lattice_vertices.push(x.clone());
        }
    }
    let dual_check = if origin_interior && v.is_bounded() {
        let facets = polyhedra::facet_rows(q, &v);
        let mut ok = true;
        for i in facets {
            let row = &q.rows()[i];
            let y = row.normal.scale(&(-row.rhs.recip()));
            ok &= n.contains(&y)?;
        }
        ok
    } else {
        false
    };
    Ok(ReflexivityResult {
        reflexive: origin_interior && dual_check && non_lattice_vertices.is_empty(),
        non_lattice_vertices,
        dual_check,
        origin_interior,
        vertex_count: v.vertices.len(),
    })
}

pub fn check_reflexive(
    g: &Multigraph,
    t: &SpanningTree,
) -> Result<ReflexivityResult, AnalysisError> {
    check_reflexive_until(g, t, None)
}

pub fn check_reflexive_until(
    g: &Multigraph,
    t: &SpanningTree,
    deadline: Option<Instant>,
) -> Result<ReflexivityResult, AnalysisError> {
    let q = polytope_q(g, t)?;
    check_reflexive_polytope(&q, &m_lattice(g)?, &n_lattice(g)?, deadline)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdpFailure {
    pub degree: usize,
    pub point: EdgeVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalityResult {
    /// Highest degree that was fully checked.
    pub normal_up_to: usize,
    pub failures: Vec<IdpFailure>,
    /// Lattice-point counts of the dilates `1..=normal_up_to`.
    pub point_counts: Vec<usize>,
    /// Set when a resource limit stopped the check.
    pub indeterminate: Option<String>,
}

impl NormalityResult {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && self.indeterminate.is_none()
    }
}

/// Checks that every lattice point of `kP` is a sum of `k` lattice points of
/// `P`, for `k = 2..=k_max`, by building the sumsets degree by degree.
pub fn check_idp_polytope(
    p: &HPolytope,
    l: &GraphLattice,
    k_max: usize,
    cap: usize,
) -> Result<NormalityResult, AnalysisError> {
    if k_max == 0 {
        return Err(AnalysisError::InvalidArgument(
            "k_max must be at least 1".into(),
        ));
    }
    let limited = |e: PolyError, done: usize, counts: Vec<usize>, failures: Vec<IdpFailure>| match e
    {
        PolyError::ResourceLimit { limit } => Ok(NormalityResult {
            normal_up_to: done,
            failures,
            point_counts: counts,
            indeterminate: Some(format!("more than {limit} lattice points")),
        }),
        other => Err(AnalysisError::Poly(other)),
    };
    let base = match polyhedra::scaled_lattice_points(p, l, cap) {
        Ok(b) => b,
        Err(e) => return limited(e, 0, Vec::new(), Vec::new()),
    };
    let mut counts = vec![base.points.len()];
    let mut failures = Vec::new();
    let mut sums: HashSet<Vec<i64>> = base.points.iter().cloned().collect();
    for k in 2..=k_max {
        let dilated = polyhedra::dilate(p, &Rational::from_integer(k.into()))?;
        let target = match polyhedra::scaled_lattice_points(&dilated, l, cap) {
            Ok(t) => t,
            Err(e) => return limited(e, k - 1, counts, failures),
        };
        let mut next: HashSet<Vec<i64>> = HashSet::with_capacity(target.points.len());
        for a in &sums {
            for b in &base.points {
                next.insert(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        for y in &target.points {
            if !next.contains(y) {
                let point = y
                    .iter()
                    .map(|&c| Rational::new(c.into(), target.scale.clone()))
                    .collect();
                failures.push(IdpFailure { degree: k, point });
            }
        }
        counts.push(target.points.len());
        sums = next;
    }
    Ok(NormalityResult {
        normal_up_to: k_max,
        failures,
        point_counts: counts,
        indeterminate: None,
    })
}

pub fn check_idp(
    g: &Multigraph,
    t: &SpanningTree,
    k_max: usize,
) -> Result<NormalityResult, AnalysisError> {
    check_idp_capped(g, t, k_max, DEFAULT_POINT_CAP)
}

pub fn check_idp_capped(
    g: &Multigraph,
    t: &SpanningTree,
    k_max: usize,
    cap: usize,
) -> Result<NormalityResult, AnalysisError> {
    check_idp_polytope(&polytope_p(g, t)?, &m_lattice(g)?, k_max, cap)
}

struct Decomposer<'a> {
    p: &'a HPolytope,
    pieces: &'a [EdgeVector],
    dead: HashMap<usize, HashSet<EdgeVector>>,
}

impl Decomposer<'_> {
    fn in_dilate(&self, w: &EdgeVector, k: usize) -> bool {
        let k = Rational::from_integer(k.into());
        self.p.rows().iter().all(|r| r.normal.dot(w) >= &r.rhs * &k)
    }

    fn search(&mut self, w: &EdgeVector, k: usize) -> Option<Vec<EdgeVector>> {
        if k == 0 {
            return w.is_zero().then(Vec::new);
        }
        if self.dead.get(&k).is_some_and(|s| s.contains(w)) {
            return None;
        }
        for piece in self.pieces {
            let rest = w - piece;
            if !self.in_dilate(&rest, k - 1) {
                continue;
            }
            if let Some(mut found) = self.search(&rest, k - 1) {
                found.insert(0, piece.clone());
                return Some(found);
            }
        }
        self.dead.entry(k).or_default().insert(w.clone());
        None
    }
}

/// `k` lattice points of `p` summing to `w`. Pieces are tried with the
/// largest tree-edge part first, then by free edges.
pub fn decompose_in(
    p: &HPolytope,
    l: &GraphLattice,
    tree_edges: &[usize],
    w: &EdgeVector,
    k: usize,
) -> Result<Vec<EdgeVector>, AnalysisError> {
    let no = || AnalysisError::NoDecomposition {
        point: w.to_string(),
        k,
    };
    if !l.contains(w)? {
        return Err(no());
    }
    let mut pieces = polyhedra::lattice_points(p, l)?;
    let key = |x: &EdgeVector| {
        let tree: Vec<Rational> = tree_edges.iter().map(|&e| x[e].clone()).collect();
        (tree, x.clone())
    };
    pieces.sort_by_key(|x| std::cmp::Reverse(key(x)));
    let mut d = Decomposer {
        p,
        pieces: &pieces,
        dead: HashMap::new(),
    };
    if !d.in_dilate(w, k) {
        return Err(no());
    }
    d.search(w, k).ok_or_else(no)
}

pub fn decompose(
    w: &EdgeVector,
    k: usize,
    g: &Multigraph,
    t: &SpanningTree,
) -> Result<Vec<EdgeVector>, AnalysisError> {
    decompose_in(&polytope_p(g, t)?, &m_lattice(g)?, t.tree_edges(), w, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::rational::int;

    #[test]
    fn genus_two_reflexive() {
        for (g, t) in [builtins::dumbbell(), builtins::theta()] {
            let r = check_reflexive(&g, &t).unwrap();
            assert!(r.reflexive && r.dual_check && r.origin_interior);
            assert_eq!(r.vertex_count, 5);
        }
    }

    #[test]
    fn k4_path_tree_has_one_bad_vertex() {
        let (g, _) = builtins::k4();
        let t = SpanningTree::new(&g, [1, 3, 5]).unwrap();
        let r = check_reflexive(&g, &t).unwrap();
        assert!(!r.reflexive);
        assert!(r.dual_check);
        assert_eq!(
            r.non_lattice_vertices,
            vec![EdgeVector::from_ints(&[1, 1, 1, -2, 1, 1])]
        );
        assert_eq!(r.vertex_count, 16);
    }

    #[test]
    fn dumbbell_idp_and_decomposition() {
        let (g, t) = builtins::dumbbell();
        let n = check_idp(&g, &t, 3).unwrap();
        assert!(n.holds());
        assert_eq!(n.point_counts[0], 5);
        let parts = decompose(&EdgeVector::from_ints(&[2, 2, 2]), 2, &g, &t).unwrap();
        assert_eq!(
            parts,
            vec![
                EdgeVector::from_ints(&[1, 1, 2]),
                EdgeVector::from_ints(&[1, 1, 0])
            ]
        );
        let w = EdgeVector::from_ints(&[0, 1, 0]);
        assert_eq!(decompose(&w, 1, &g, &t).unwrap(), vec![w]);
        let zero = EdgeVector::zeros(3);
        assert_eq!(
            decompose(&zero, 3, &g, &t).unwrap(),
            vec![zero.clone(), zero.clone(), zero]
        );
        assert!(matches!(
            decompose(&EdgeVector::from_ints(&[3, 0, 0]), 2, &g, &t),
            Err(AnalysisError::NoDecomposition { .. })
        ));
    }

    #[test]
    fn cube_is_normal_and_cap_is_indeterminate() {
        let cube = HPolytope::cube(3, &int(0), &int(1));
        let z = GraphLattice::integer(3);
        assert!(check_idp_polytope(&cube, &z, 2, DEFAULT_POINT_CAP)
            .unwrap()
            .holds());
        let r = check_idp_polytope(&cube, &z, 3, 20).unwrap();
        assert_eq!(r.normal_up_to, 1);
        assert!(r.indeterminate.is_some() && r.failures.is_empty());
    }

    #[test]
    fn non_normal_simplex_is_caught() {
        // conv(0, e1, e2, (1,1,2)) over Z^3 is the classic non-normal tetrahedron
        use crate::polyhedra::VPolytope;
        let simplex = VPolytope {
            ambient_dim: 3,
            vertices: vec![
                EdgeVector::from_ints(&[0, 0, 0]),
                EdgeVector::from_ints(&[0, 1, 0]),
                EdgeVector::from_ints(&[1, 0, 0]),
                EdgeVector::from_ints(&[1, 1, 2]),
            ],
            rays: Vec::new(),
        };
        // its facets, written out by hand
        use crate::polyhedra::{Row, RowLabel};
        let row = |n: &[i64], r: i64, s: &str| {
            Row::new(EdgeVector::from_ints(n), int(r), RowLabel::Custom(s.into()))
        };
        let p = HPolytope::new(
            3,
            vec![
                row(&[0, 0, 1], 0, "a"),
                row(&[2, 0, -1], 0, "b"),
                row(&[0, 2, -1], 0, "c"),
                row(&[-2, -2, 1], -2, "d"),
            ],
        )
        .unwrap();
        assert_eq!(polyhedra::vertices(&p).unwrap(), simplex);
        let r = check_idp_polytope(&p, &GraphLattice::integer(3), 2, DEFAULT_POINT_CAP).unwrap();
        assert_eq!(
            r.failures,
            vec![IdpFailure {
                degree: 2,
                point: EdgeVector::from_ints(&[1, 1, 1])
            }]
        );
    }
}
