//! Simplices of the bar constructions used by the checks.

use free_properad::sample::{enumerate_labeled, enumerate_nested, random_label, random_labeled, random_nested};
use free_properad::{IoSequence, Label, LabeledGraph, Nested};
use properad_core::FreeProperad;
use rand::Rng;
use surface_properads::sample::random_member;
use surface_properads::{ProperadName, SurfaceType};

/// The free properad on one generator of arity (1,2) and one of arity (2,1).
pub fn two_generators() -> FreeProperad {
    FreeProperad::new(IoSequence::singleton(&[(1, 2), (2, 1)]).expect("nonzero arities"))
}

/// A random element of a free properad with up to `max_vertices` vertices.
pub fn random_free_element<R: Rng>(rng: &mut R, p: &FreeProperad, max_vertices: usize) -> LabeledGraph<Label> {
    random_labeled(rng, max_vertices, |r| random_label(r, &p.generators)).canonical()
}

/// Random level-`level` simplex of the free bar: at most `max_vertices`
/// labels, each with at most `max_element` vertices.
pub fn random_free_simplex<R: Rng>(
    rng: &mut R,
    p: &FreeProperad,
    level: usize,
    max_vertices: usize,
    max_element: usize,
) -> Nested<LabeledGraph<Label>> {
    random_nested(rng, level + 1, max_vertices, |r| random_free_element(r, p, max_element))
}

/// Every level-`level` simplex of the free bar whose labels are generators
/// and whose flattening is within the bounds.
pub fn generator_simplices(
    p: &FreeProperad,
    level: usize,
    max_vertices: usize,
    max_edges: usize,
    max_legs: usize,
) -> Vec<Nested<LabeledGraph<Label>>> {
    let base: Vec<LabeledGraph<LabeledGraph<Label>>> = enumerate_labeled(&p.generators, max_vertices, max_edges, max_legs)
        .into_iter()
        .map(|g| g.map(|&l| p.generator(l)))
        .collect();
    enumerate_nested(&base, level + 1)
}

/// A random member of `Mhat`, with the bare nodal annulus and the
/// modulus-0 annulus drawn often.
pub fn random_surface_label<R: Rng>(rng: &mut R) -> SurfaceType {
    match rng.gen_range(0..10) {
        0 | 1 => SurfaceType::nodal_annulus(),
        2 => SurfaceType::unit_annulus(),
        _ => random_member(rng, ProperadName::Mhat, None).expect("Mhat is sampleable"),
    }
}

/// Random level-`level` simplex of the bar of `Mhat`.
pub fn random_surface_simplex<R: Rng>(rng: &mut R, level: usize, max_vertices: usize) -> Nested<SurfaceType> {
    random_nested(rng, level + 1, max_vertices, random_surface_label)
}
