#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError};

use charpoly::graphs::{enumerate_trivalent, spanning_trees, Multigraph, SpanningTree};
use charpoly::lattices::m_lattice;
use charpoly::polyhedra::{
    self, dilate, lattice_points, polar_dual, vertices, HPolytope, PolyError, Row, RowLabel,
};
use charpoly::polytopes::{polytope_p, polytope_q};
use charpoly::rational::{int, ratio, EdgeVector, Rational};

pub fn config(seed: u64, cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

/// Every graph of genus 2 and 3 with every one of its spanning trees.
pub fn small_pairs() -> &'static [(Multigraph, SpanningTree)] {
    static PAIRS: OnceLock<Vec<(Multigraph, SpanningTree)>> = OnceLock::new();
    PAIRS.get_or_init(|| {
        let mut out = Vec::new();
        for genus in 2..=3 {
            for g in enumerate_trivalent(genus).unwrap() {
                for t in spanning_trees(&g).unwrap() {
                    out.push((g.clone(), t));
                }
            }
        }
        out
    })
}

pub fn pair() -> impl Strategy<Value = (Multigraph, SpanningTree)> {
    (0..small_pairs().len()).prop_map(|i| small_pairs()[i].clone())
}

pub fn factor() -> impl Strategy<Value = Rational> {
    (1i64..7, 1i64..4).prop_map(|(n, d)| ratio(n, d))
}

/// A box `[-a, a]^d` cut by a few more rows. With `through_origin` every
/// cut keeps the origin strictly inside; otherwise the result may be empty.
pub fn cut_box(through_origin: bool) -> impl Strategy<Value = HPolytope> {
    (2usize..5)
        .prop_flat_map(move |d| {
            let cut = (
                prop::collection::vec(-3i64..=3, d),
                if through_origin {
                    -4i64..=-1
                } else {
                    -4i64..=4
                },
            );
            (Just(d), 1i64..4, prop::collection::vec(cut, 0..4))
        })
        .prop_map(|(d, a, cuts)| {
            let mut rows = HPolytope::cube(d, &int(-a), &int(a)).rows().to_vec();
            for (i, (normal, rhs)) in cuts.into_iter().enumerate() {
                rows.push(Row::new(
                    EdgeVector::from_ints(&normal),
                    int(rhs),
                    RowLabel::Custom(format!("cut{i}")),
                ));
            }
            HPolytope::new(d, rows).unwrap()
        })
}

pub fn shuffled(p: &HPolytope) -> impl Strategy<Value = Vec<usize>> {
    Just((0..p.rows().len()).collect::<Vec<_>>()).prop_shuffle()
}

fn same_vertices(
    a: Result<polyhedra::VPolytope, PolyError>,
    b: Result<polyhedra::VPolytope, PolyError>,
) -> Result<(), TestCaseError> {
    match (a, b) {
        (Ok(x), Ok(y)) => prop_assert_eq!(x, y),
        (Err(x), Err(y)) => prop_assert_eq!(x, y),
        (x, y) => prop_assert!(false, "{:?} vs {:?}", x, y),
    }
    Ok(())
}

pub fn dilation_commutes(p: &HPolytope, c: &Rational) -> Result<(), TestCaseError> {
    let scaled = vertices(p).map(|v| v.scale(c));
    same_vertices(vertices(&dilate(p, c).unwrap()), scaled)
}

pub fn polar_is_an_involution(p: &HPolytope) -> Result<(), TestCaseError> {
    let polar = polar_dual(p).unwrap();
    let back = polar.polar_rows();
    prop_assert_eq!(vertices(&back).unwrap(), vertices(p).unwrap());
    prop_assert_eq!(polar_dual(&back).unwrap(), polar);
    Ok(())
}

pub fn shuffle_invariant(p: &HPolytope, order: &[usize]) -> Result<(), TestCaseError> {
    same_vertices(vertices(&p.with_row_order(order)), vertices(p))
}

/// Sums of two lattice points of `P` are lattice points of `2P`.
pub fn sumset_contained(g: &Multigraph, t: &SpanningTree) -> Result<(), TestCaseError> {
    let m = m_lattice(g).unwrap();
    let p = polytope_p(g, t).unwrap();
    let ones = lattice_points(&p, &m).unwrap();
    let twos: HashSet<EdgeVector> = lattice_points(&dilate(&p, &int(2)).unwrap(), &m)
        .unwrap()
        .into_iter()
        .collect();
    for a in &ones {
        for b in &ones {
            prop_assert!(twos.contains(&(a + b)), "{} + {} not in 2P", a, b);
        }
    }
    Ok(())
}

pub fn graph_dilation_commutes(
    g: &Multigraph,
    t: &SpanningTree,
    c: &Rational,
) -> Result<(), TestCaseError> {
    dilation_commutes(&polytope_q(g, t).unwrap(), c)
}

pub fn dimension_is_3g_minus_3(g: &Multigraph, t: &SpanningTree) -> Result<(), TestCaseError> {
    let d = polyhedra::dim(&polytope_p(g, t).unwrap()).unwrap();
    prop_assert_eq!(d, 3 * g.betti() - 3);
    Ok(())
}
