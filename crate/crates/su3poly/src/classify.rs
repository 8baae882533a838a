//! Polytope types for two and three weights.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::moment::Weights;
use crate::scalar::{Scalar, DEFAULT_SNAP_TOL};
use crate::su3::Permutation;

/// Polytope type for three weights: eight generic regions, the transitions between them,
/// the zero-sum family, and the degenerate zero-weight case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum N3Type {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    AB,
    AA,
    AAA,
    AAB,
    BB,
    CE,
    CH,
    CEFH,
    DD,
    EF,
    FG,
    FGH,
    FH,
    GG,
    HH,
    D0,
    DD0,
    G0,
    GG0,
    DegenerateZeroWeight,
}

impl N3Type {
    pub const ALL: [N3Type; 28] = [
        N3Type::A,
        N3Type::B,
        N3Type::C,
        N3Type::D,
        N3Type::E,
        N3Type::F,
        N3Type::G,
        N3Type::H,
        N3Type::AB,
        N3Type::AA,
        N3Type::AAA,
        N3Type::AAB,
        N3Type::BB,
        N3Type::CE,
        N3Type::CH,
        N3Type::CEFH,
        N3Type::DD,
        N3Type::EF,
        N3Type::FG,
        N3Type::FGH,
        N3Type::FH,
        N3Type::GG,
        N3Type::HH,
        N3Type::D0,
        N3Type::DD0,
        N3Type::G0,
        N3Type::GG0,
        N3Type::DegenerateZeroWeight,
    ];

    pub fn label(self) -> &'static str {
        use N3Type::*;
        match self {
            A => "A",
            B => "B",
            C => "C",
            D => "D",
            E => "E",
            F => "F",
            G => "G",
            H => "H",
            AB => "AB",
            AA => "AA",
            AAA => "AAA",
            AAB => "AAB",
            BB => "BB",
            CE => "CE",
            CH => "CH",
            CEFH => "CEFH",
            DD => "DD",
            EF => "EF",
            FG => "FG",
            FGH => "FGH",
            FH => "FH",
            GG => "GG",
            HH => "HH",
            D0 => "D0",
            DD0 => "DD0",
            G0 => "G0",
            GG0 => "GG0",
            DegenerateZeroWeight => "DegenerateZeroWeight",
        }
    }

    pub fn is_generic(self) -> bool {
        self.label().len() == 1
    }

    pub fn is_zero_sum(self) -> bool {
        matches!(self, N3Type::D0 | N3Type::DD0 | N3Type::G0 | N3Type::GG0)
    }
}

impl fmt::Display for N3Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for N3Type {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        N3Type::ALL
            .iter()
            .copied()
            .find(|t| t.label() == s)
            .ok_or_else(|| format!("unknown label {s:?}"))
    }
}

impl Serialize for N3Type {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl<'de> Deserialize<'de> for N3Type {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Segment type for two weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum N2Type {
    GenA,
    GenB,
    GenC,
    GenD,
    TransE,
    TransF,
    TransG,
    DegenerateZeroWeight,
}

impl N2Type {
    pub fn label(self) -> &'static str {
        match self {
            N2Type::GenA => "GenA",
            N2Type::GenB => "GenB",
            N2Type::GenC => "GenC",
            N2Type::GenD => "GenD",
            N2Type::TransE => "TransE",
            N2Type::TransF => "TransF",
            N2Type::TransG => "TransG",
            N2Type::DegenerateZeroWeight => "DegenerateZeroWeight",
        }
    }
}

impl fmt::Display for N2Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Reduction of a weight vector to non-negative sum and descending order.
///
/// With `s = -1` when `starred`, `sorted_gammas[i] = s * input[permutation[i]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Canonicalization<T> {
    pub sorted_gammas: Vec<T>,
    pub permutation: Permutation,
    pub starred: bool,
}

impl<T: Scalar> Canonicalization<T> {
    /// Undoes the sign flip and the sort.
    pub fn recover(&self) -> Vec<T> {
        let mut out = vec![T::zero(); self.sorted_gammas.len()];
        for (i, &p) in self.permutation.0.iter().enumerate() {
            let g = self.sorted_gammas[i].clone();
            out[p] = if self.starred { -g } else { g };
        }
        out
    }
}

pub fn canonicalize<T: Scalar>(w: &Weights<T>) -> Canonicalization<T> {
    canonicalize_with(w, DEFAULT_SNAP_TOL)
}

/// [`canonicalize`] with an explicit snapping tolerance for the sign of the sum.
pub fn canonicalize_with<T: Scalar>(w: &Weights<T>, tol: f64) -> Canonicalization<T> {
    let starred = w.sum().snap_sign(&w.scale(), tol) < 0;
    let flipped: Vec<T> = if starred {
        w.gammas().iter().map(|g| -g.clone()).collect()
    } else {
        w.gammas().to_vec()
    };
    let permutation = Permutation::sorting_descending(&flipped);
    Canonicalization { sorted_gammas: permutation.apply(&flipped), permutation, starred }
}

pub fn classify_n3<T: Scalar>(w: &Weights<T>) -> (N3Type, Canonicalization<T>) {
    classify_n3_with(w, DEFAULT_SNAP_TOL)
}

/// [`classify_n3`] with an explicit relative tolerance for snapping onto transition hyperplanes.
pub fn classify_n3_with<T: Scalar>(w: &Weights<T>, tol: f64) -> (N3Type, Canonicalization<T>) {
    assert_eq!(w.len(), 3, "classify_n3 needs three weights");
    let c = canonicalize_with(w, tol);
    (sign_table(&c.sorted_gammas, &w.scale(), tol), c)
}

fn sign_table<T: Scalar>(g: &[T], scale: &T, tol: f64) -> N3Type {
    use N3Type::*;
    let sg = |x: T| x.snap_sign(scale, tol);
    let (g1, g2, g3) = (g[0].clone(), g[1].clone(), g[2].clone());
    if [&g1, &g2, &g3].iter().any(|x| sg((*x).clone()) == 0) {
        return DegenerateZeroWeight;
    }
    let e12 = sg(g1.clone() - g2.clone()) == 0;
    let e23 = sg(g2.clone() - g3.clone()) == 0;
    let s = sg(g1.clone() + g2.clone() + g3.clone());
    if s == 0 {
        return match (sg(g2.clone()) < 0, e23, e12) {
            (true, true, _) => DD0,
            (true, false, _) => D0,
            (false, _, true) => GG0,
            (false, _, false) => G0,
        };
    }
    if sg(g3.clone()) > 0 {
        if e12 && e23 {
            return AAA;
        }
        let t = sg(g1.clone() - g2.clone() - g3.clone());
        return match (e23, t) {
            (true, -1) => AA,
            (true, 0) => AAB,
            (true, _) => BB,
            (false, -1) if e12 => AA,
            (false, -1) => A,
            (false, 0) => AB,
            (false, _) => B,
        };
    }
    if sg(g2.clone()) < 0 {
        return if e23 { DD } else { D };
    }
    let s13 = sg(g1.clone() + g3.clone());
    let s23 = sg(g2.clone() + g3.clone());
    let t = sg(g2 - g1 - g3);
    if e12 {
        return match s13 {
            1 => HH,
            0 => FGH,
            _ => GG,
        };
    }
    match (s13, s23, t) {
        (-1, _, _) => G,
        (0, _, _) => FG,
        (_, 1, -1) => C,
        (_, 1, 1) => H,
        (_, -1, -1) => E,
        (_, -1, 1) => F,
        (_, 0, -1) => CE,
        (_, 0, 1) => FH,
        (_, 1, 0) => CH,
        (_, -1, 0) => EF,
        _ => CEFH,
    }
}

pub fn classify_n2<T: Scalar>(w: &Weights<T>) -> N2Type {
    classify_n2_with(w, DEFAULT_SNAP_TOL)
}

pub fn classify_n2_with<T: Scalar>(w: &Weights<T>, tol: f64) -> N2Type {
    assert_eq!(w.len(), 2, "classify_n2 needs two weights");
    let scale = w.scale();
    let sg = |x: T| x.snap_sign(&scale, tol);
    let (mut g1, mut g2) = (w.gammas()[0].clone(), w.gammas()[1].clone());
    if g2 > g1 {
        std::mem::swap(&mut g1, &mut g2);
    }
    if sg(g1.clone()) == 0 || sg(g2.clone()) == 0 {
        return N2Type::DegenerateZeroWeight;
    }
    if sg(g1.clone() + g2.clone()) == 0 {
        return N2Type::TransF;
    }
    if sg(g1.clone() - g2.clone()) == 0 {
        return if sg(g1) > 0 { N2Type::TransE } else { N2Type::TransG };
    }
    match (sg(g2.clone()) > 0, sg(g1.clone()) < 0, sg(g1 + g2) > 0) {
        (true, _, _) => N2Type::GenA,
        (_, true, _) => N2Type::GenD,
        (_, _, true) => N2Type::GenB,
        _ => N2Type::GenC,
    }
}

/// `Gamma1 Gamma2 Gamma3 (Gamma1 - Gamma2 - Gamma3)` on canonical weights; positive exactly in regions B and D.
pub fn c1_criterion<T: Scalar>(sorted: &[T]) -> T {
    let (g1, g2, g3) = (sorted[0].clone(), sorted[1].clone(), sorted[2].clone());
    g1.clone() * g2.clone() * g3.clone() * (g1 - g2 - g3)
}

/// `Gamma1 Gamma2 Gamma3 (Gamma1 + Gamma2 + Gamma3)`; same sign as the discriminant at `a`, positive exactly in A, B and D.
pub fn a_discriminant<T: Scalar>(g: &[T]) -> T {
    let (g1, g2, g3) = (g[0].clone(), g[1].clone(), g[2].clone());
    g1.clone() * g2.clone() * g3.clone() * (g1 + g2 + g3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn w(g: &[i64]) -> Weights<BigRational> {
        Weights::allowing_zero(g.iter().map(|&x| BigRational::ratio(x, 1)).collect()).unwrap()
    }

    fn label(g: &[i64]) -> N3Type {
        classify_n3(&w(g)).0
    }

    #[test]
    fn canonicalize_examples() {
        let c = canonicalize(&w(&[2, 4, -1]));
        assert_eq!(c.sorted_gammas, w(&[4, 2, -1]).gammas());
        assert_eq!(c.permutation, Permutation(vec![1, 0, 2]));
        assert!(!c.starred);
        let c = canonicalize(&w(&[-4, -2, 1]));
        assert_eq!(c.sorted_gammas, w(&[4, 2, -1]).gammas());
        assert!(c.starred && c.permutation.is_identity());
        assert_eq!(c.recover(), w(&[-4, -2, 1]).gammas());
        let c = canonicalize(&w(&[1, 1, 1]));
        assert!(c.permutation.is_identity() && !c.starred);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(label(&[4, 2, -1]), N3Type::C);
        assert_eq!(label(&[1, 1, 1]), N3Type::AAA);
        assert_eq!(label(&[3, -1, -2]), N3Type::D0);
        assert_eq!(label(&[0, 1, 2]), N3Type::DegenerateZeroWeight);
        assert_eq!(label(&[-1, -1, -1]), N3Type::AAA);
    }

    #[test]
    fn every_label_has_a_witness() {
        let table: &[(&[i64], N3Type)] = &[
            (&[5, 4, 3], N3Type::A),
            (&[6, 2, 1], N3Type::B),
            (&[4, 2, -1], N3Type::C),
            (&[6, -1, -2], N3Type::D),
            (&[12, 2, -6], N3Type::E),
            (&[10, 7, -8], N3Type::F),
            (&[11, 10, -12], N3Type::G),
            (&[7, 5, -3], N3Type::H),
            (&[3, 2, 1], N3Type::AB),
            (&[5, 5, 2], N3Type::AA),
            (&[5, 3, 3], N3Type::AA),
            (&[1, 1, 1], N3Type::AAA),
            (&[2, 1, 1], N3Type::AAB),
            (&[6, 1, 1], N3Type::BB),
            (&[4, 1, -1], N3Type::CE),
            (&[5, 3, -2], N3Type::CH),
            (&[2, 1, -1], N3Type::CEFH),
            (&[5, -1, -1], N3Type::DD),
            (&[6, 2, -4], N3Type::EF),
            (&[5, 4, -5], N3Type::FG),
            (&[1, 1, -1], N3Type::FGH),
            (&[4, 3, -3], N3Type::FH),
            (&[4, 4, -5], N3Type::GG),
            (&[3, 3, -2], N3Type::HH),
            (&[3, -1, -2], N3Type::D0),
            (&[2, -1, -1], N3Type::DD0),
            (&[3, 1, -4], N3Type::G0),
            (&[1, 1, -2], N3Type::GG0),
        ];
        for (g, t) in table {
            assert_eq!(label(g), *t, "{g:?}");
        }
        let mut seen: Vec<N3Type> = table.iter().map(|(_, t)| *t).collect();
        seen.push(N3Type::DegenerateZeroWeight);
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), N3Type::ALL.len());
    }

    #[test]
    fn float_snapping() {
        let near = Weights::new(vec![3.0, 2.0 + 1e-12, 1.0]).unwrap();
        assert_eq!(classify_n3(&near).0, N3Type::AB);
        assert_eq!(classify_n3_with(&near, 0.0).0, N3Type::A);
    }

    #[test]
    fn n2_examples() {
        let n2 = |a: i64, b: i64| classify_n2(&w(&[a, b]));
        assert_eq!(n2(2, 1), N2Type::GenA);
        assert_eq!(n2(3, -1), N2Type::GenB);
        assert_eq!(n2(1, -2), N2Type::GenC);
        assert_eq!(n2(-1, -2), N2Type::GenD);
        assert_eq!(n2(1, 1), N2Type::TransE);
        assert_eq!(n2(1, -1), N2Type::TransF);
        assert_eq!(n2(-2, -2), N2Type::TransG);
        assert_eq!(n2(0, 3), N2Type::DegenerateZeroWeight);
    }

    #[test]
    fn labels_round_trip() {
        for t in N3Type::ALL {
            assert_eq!(t.label().parse::<N3Type>().unwrap(), t);
        }
    }
}
