#![allow(dead_code)]

use proptest::prelude::*;
use su3poly::{Rational, Weights, WeightsExact};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn exact(g: &[i64]) -> WeightsExact {
    Weights::new(g.iter().map(|&x| q(x, 1)).collect()).unwrap()
}

pub fn float(g: &[i64]) -> Weights<f64> {
    Weights::new(g.iter().map(|&x| x as f64).collect()).unwrap()
}

/// Nonzero rationals with small numerators and denominators, so transitions are hit often.
pub fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=4)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| q(n, d))
}

pub fn rational_weights3() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), 3)
}

pub fn rational_weights2() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), 2)
}

pub fn permutation3() -> impl Strategy<Value = [usize; 3]> {
    prop::sample::select(vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]])
}

/// Label, weights, vertex count, extreme fixed points, edges on `l2 = l3`, edges on `l1 = l2`.
pub struct Fixture {
    pub label: &'static str,
    pub gammas: [i64; 3],
    pub vertices: usize,
    pub extreme: &'static [&'static str],
    pub edges_w23: usize,
    pub edges_w12: usize,
}

const fn fx(
    label: &'static str,
    gammas: [i64; 3],
    vertices: usize,
    extreme: &'static [&'static str],
    edges_w23: usize,
    edges_w12: usize,
) -> Fixture {
    Fixture { label, gammas, vertices, extreme, edges_w23, edges_w12 }
}

const ALL5: &[&str] = &["a", "b", "c1", "c2", "c3"];

pub const FIXTURES: &[Fixture] = &[
    fx("A", [5, 4, 3], 5, &["a", "b"], 1, 1),
    fx("B", [6, 2, 1], 4, &["a", "b", "c1"], 1, 0),
    fx("C", [4, 2, -1], 4, &["a", "b", "c2", "c3"], 0, 0),
    fx("D", [6, -1, -2], 4, &["a", "b", "c1"], 1, 0),
    fx("E", [12, 2, -6], 4, &["a", "b", "c2", "c3"], 0, 0),
    fx("F", [10, 7, -8], 5, &["a", "b", "c3"], 0, 1),
    fx("G", [11, 10, -12], 5, &["a", "b", "c3"], 0, 1),
    fx("H", [7, 5, -3], 5, &["a", "b", "c3"], 0, 1),
    fx("AB", [3, 2, 1], 4, &["a", "b", "c1"], 1, 0),
    fx("AA", [5, 5, 2], 4, &["a", "b"], 1, 1),
    fx("AA", [5, 3, 3], 4, &["a", "b"], 1, 1),
    fx("AAA", [1, 1, 1], 3, &["a", "b"], 1, 1),
    fx("AAB", [2, 1, 1], 3, &["a", "b", "c1"], 1, 0),
    fx("BB", [6, 1, 1], 3, &["a", "b", "c1"], 1, 0),
    fx("CE", [4, 1, -1], 4, ALL5, 0, 0),
    fx("CH", [5, 3, -2], 4, &["a", "b", "c2", "c3"], 0, 0),
    fx("CEFH", [2, 1, -1], 4, ALL5, 0, 0),
    fx("DD", [5, -1, -1], 3, &["a", "b", "c1"], 1, 0),
    fx("EF", [6, 2, -4], 4, &["a", "b", "c2", "c3"], 0, 0),
    fx("FG", [5, 4, -5], 5, &["a", "b", "c2", "c3"], 0, 1),
    fx("FGH", [1, 1, -1], 4, ALL5, 0, 1),
    fx("FH", [4, 3, -3], 5, &["a", "b", "c1", "c3"], 0, 1),
    fx("GG", [4, 4, -5], 4, &["a", "b", "c3"], 0, 1),
    fx("HH", [3, 3, -2], 4, &["a", "b", "c3"], 0, 1),
    fx("D0", [3, -1, -2], 4, &["a", "b", "c1"], 1, 0),
    fx("DD0", [2, -1, -1], 3, &["a", "b", "c1"], 1, 0),
    fx("G0", [3, 1, -4], 4, &["a", "b", "c3"], 0, 1),
    fx("GG0", [1, 1, -2], 3, &["a", "b", "c3"], 0, 1),
];
