//! Local momentum cones at the torus-fixed points.

use serde_json::{json, Value};

use crate::classify::canonicalize_with;
use crate::error::{Error, Result};
use crate::moment::{fixed_points3, raw_fixed_point, FixedPoint, Weights};
use crate::scalar::{max_abs, Scalar, DEFAULT_SNAP_TOL};
use crate::su3::{star_involution, Permutation, Root, SignedRoot, Spectrum};

/// `A|u|^2 + B(u conj(v) + conj(u) v) + C|v|^2` on a complex 2-plane.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticForm2<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Definiteness {
    PositiveDefinite,
    NegativeDefinite,
    Indefinite,
    Degenerate,
}

pub fn definiteness<T: Scalar>(q: &QuadraticForm2<T>) -> Definiteness {
    definiteness_with(q, DEFAULT_SNAP_TOL)
}

pub fn definiteness_with<T: Scalar>(q: &QuadraticForm2<T>, tol: f64) -> Definiteness {
    let ac = q.a.clone() * q.c.clone();
    let bb = q.b.clone() * q.b.clone();
    let scale = max_abs(&[ac.clone(), bb.clone()]);
    match (ac - bb).snap_sign(&scale, tol) {
        0 => Definiteness::Degenerate,
        -1 => Definiteness::Indefinite,
        _ if q.a.is_positive() => Definiteness::PositiveDefinite,
        _ => Definiteness::NegativeDefinite,
    }
}

/// How a generator extends from the apex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Extent {
    RayPlus,
    RayMinus,
    FullLine,
}

impl Extent {
    pub fn name(self) -> &'static str {
        match self {
            Extent::RayPlus => "ray+",
            Extent::RayMinus => "ray-",
            Extent::FullLine => "full-line",
        }
    }
}

/// A root direction together with its extent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub root: Root,
    pub extent: Extent,
}

impl Generator {
    pub fn ray(r: SignedRoot) -> Self {
        let extent = if r.sign > 0 { Extent::RayPlus } else { Extent::RayMinus };
        Self { root: r.root, extent }
    }

    pub fn line(root: Root) -> Self {
        Self { root, extent: Extent::FullLine }
    }

    /// Directions spanned: one for a ray, both signs for a line.
    pub fn directions(&self) -> Vec<[i64; 3]> {
        let v = self.root.vector();
        let m = v.map(|x| -x);
        match self.extent {
            Extent::RayPlus => vec![v],
            Extent::RayMinus => vec![m],
            Extent::FullLine => vec![v, m],
        }
    }

    fn star(self) -> Self {
        Self { root: self.root.star(), extent: self.extent }
    }
}

/// A local momentum cone: apex plus the convex cone spanned by its generators.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeSpec<T> {
    pub apex: Spectrum<T>,
    pub generators: Vec<Generator>,
    pub weyl_folded: bool,
}

impl<T: Scalar> ConeSpec<T> {
    /// Integer inward normals `n` with `n . x >= n . apex` describing the cone exactly.
    ///
    /// Empty when the generators span the whole plane.
    pub fn inward_normals(&self) -> Vec<[i64; 3]> {
        let dirs: Vec<[i64; 3]> = self.generators.iter().flat_map(|g| g.directions()).collect();
        let mut out: Vec<[i64; 3]> = Vec::new();
        for d in &dirs {
            let n = perp(d);
            for cand in [n, n.map(|x| -x)] {
                if dirs.iter().all(|h| dot_i(&cand, h) >= 0) && !out.contains(&cand) {
                    out.push(cand);
                }
            }
        }
        out
    }

    /// Whether `x` lies in the cone (exact for rationals).
    pub fn contains(&self, x: &Spectrum<T>, tol: f64) -> bool {
        self.inward_normals().iter().all(|n| {
            let nt = n.map(|v| T::from_i64(v).unwrap());
            let gap = x.dot(&nt) - self.apex.dot(&nt);
            if T::EXACT && tol == 0.0 {
                !gap.is_negative()
            } else {
                let len = ((n[0] * n[0] + n[1] * n[1] + n[2] * n[2]) as f64).sqrt();
                gap.to_f64() / len >= -tol
            }
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "apex": self.apex.to_array().iter().map(|x| x.to_json()).collect::<Vec<_>>(),
            "generators": self.generators.iter().map(|g| json!({
                "root": g.root.name(),
                "kind": g.extent.name(),
            })).collect::<Vec<_>>(),
            "weyl_folded": self.weyl_folded,
        })
    }

    /// Image under the star involution.
    pub fn starred(&self) -> Self {
        Self {
            apex: star_involution(&self.apex),
            generators: self.generators.iter().map(|g| g.star()).collect(),
            weyl_folded: self.weyl_folded,
        }
    }
}

/// In-plane perpendicular `d x (1,1,1)`.
pub fn perp(d: &[i64; 3]) -> [i64; 3] {
    [d[1] - d[2], d[2] - d[0], d[0] - d[1]]
}

fn dot_i(a: &[i64; 3], b: &[i64; 3]) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Raw (unfolded) generator: a signed direction or a line along a root.
enum RawGen {
    Ray(i8, Root),
    Line(Root),
}

/// Sorts the apex into the chamber and relabels every generator by the same permutation.
fn fold<T: Scalar>(raw: [T; 3], gens: Vec<RawGen>, err: Error) -> Result<ConeSpec<T>> {
    let perm = Permutation::sorting_descending(&raw);
    let apex = Spectrum::from_array(perm.apply3(&raw));
    if apex.l1 == apex.l2 || apex.l2 == apex.l3 {
        return Err(err);
    }
    let relabel = |sign: i8, r: Root| {
        let v = r.vector().map(|x| x * sign as i64);
        SignedRoot::from_vector(perm.apply3(&v)).expect("permutations map roots to roots")
    };
    let generators = gens
        .into_iter()
        .map(|g| match g {
            RawGen::Ray(s, r) => Generator::ray(relabel(s, r)),
            RawGen::Line(r) => Generator::line(relabel(1, r).root),
        })
        .collect();
    Ok(ConeSpec { apex, generators, weyl_folded: !perm.is_identity() })
}

fn three<T: Scalar>(w: &Weights<T>) -> Result<&[T]> {
    if w.len() != 3 {
        return Err(Error::UnsupportedLength(w.len()));
    }
    if let Some(i) = w.gammas().iter().position(|g| g.is_zero()) {
        return Err(Error::ZeroWeight(i + 1));
    }
    Ok(w.gammas())
}

/// Coefficients of the slice momentum map at `b` on `(alpha1, alpha2, alpha3)`.
pub fn slice_coefficients_b<T: Scalar>(w: &Weights<T>) -> Result<[T; 3]> {
    let g = three(w)?;
    Ok(b_coefficients(g))
}

fn b_coefficients<T: Scalar>(g: &[T]) -> [T; 3] {
    let (g1, g2, g3) = (g[0].clone(), g[1].clone(), g[2].clone());
    [
        g3.clone() / g2.clone() * (g2.clone() - g3.clone()),
        g1.clone() / g3.clone() * (g3 - g1.clone()),
        g2.clone() / g1.clone() * (g1 - g2),
    ]
}

pub fn slice_cone_b<T: Scalar>(w: &Weights<T>) -> Result<ConeSpec<T>> {
    cone_b(three(w)?, DEFAULT_SNAP_TOL)
}

fn cone_b<T: Scalar>(g: &[T], tol: f64) -> Result<ConeSpec<T>> {
    let scale = max_abs(g);
    let snapped = |x: T| x.snap_sign(&scale, tol);
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if snapped(g[i].clone() - g[j].clone()) == 0 {
            return Err(Error::CoincidentWeights);
        }
    }
    let co = b_coefficients(g);
    let gens = co
        .into_iter()
        .zip(Root::ALL)
        .map(|(c, r)| {
            let s = if c.is_positive() { 1 } else { -1 };
            RawGen::Ray(s, r)
        })
        .collect();
    fold(raw_fixed_point(g, FixedPoint::B), gens, Error::CoincidentWeights)
}

/// `(k, l)` roles of the two other weights at `c_j`.
fn c_roles(j: usize) -> (usize, usize) {
    match j {
        1 => (2, 1),
        2 => (0, 2),
        3 => (1, 0),
        _ => panic!("c index {j} out of range"),
    }
}

/// Coefficient of the `alpha1` direction in the slice map at `c_j`.
pub fn c_alpha1_coefficient<T: Scalar>(j: usize, w: &Weights<T>) -> Result<T> {
    let g = three(w)?;
    let (k, l) = c_roles(j);
    Ok(-(g[l].clone() / g[k].clone()) * (g[l].clone() + g[k].clone()))
}

/// The quadratic form governing the `alpha3` direction at `c_j`.
pub fn c_slice_form<T: Scalar>(j: usize, w: &Weights<T>) -> Result<QuadraticForm2<T>> {
    let g = three(w)?;
    let (k, l) = c_roles(j);
    let (gj, gk, gl) = (g[j - 1].clone(), g[k].clone(), g[l].clone());
    Ok(QuadraticForm2 {
        a: gj.clone() / gl.clone() * (gj.clone() - gl.clone()),
        b: gj * gk.clone() / gl.clone(),
        c: gk.clone() / gl.clone() * (gk + gl),
    })
}

pub fn slice_cone_c<T: Scalar>(j: usize, w: &Weights<T>) -> Result<ConeSpec<T>> {
    three(w)?;
    cone_c(j, w, DEFAULT_SNAP_TOL)
}

fn cone_c<T: Scalar>(j: usize, w: &Weights<T>, tol: f64) -> Result<ConeSpec<T>> {
    let which = [FixedPoint::C1, FixedPoint::C2, FixedPoint::C3][j - 1];
    let raw = raw_fixed_point(w.gammas(), which);
    let scale = max_abs(&raw);
    let on_wall = {
        let s = |x: T| x.snap_sign(&scale, tol) == 0;
        s(raw[0].clone() - raw[1].clone()) || s(raw[0].clone() - raw[2].clone()) || s(raw[1].clone() - raw[2].clone())
    };
    let a1 = c_alpha1_coefficient(j, w)?;
    if on_wall || a1.snap_sign(&max_abs(w.gammas()), tol) == 0 {
        return Err(Error::OnWall(j));
    }
    let form = c_slice_form(j, w)?;
    let a3 = match definiteness_with(&form, tol) {
        Definiteness::PositiveDefinite => RawGen::Ray(1, Root::Alpha3),
        Definiteness::NegativeDefinite => RawGen::Ray(-1, Root::Alpha3),
        Definiteness::Indefinite => RawGen::Line(Root::Alpha3),
        Definiteness::Degenerate => return Err(Error::DegenerateForm(which.name())),
    };
    let s1 = if a1.is_positive() { 1 } else { -1 };
    fold(raw, vec![RawGen::Ray(s1, Root::Alpha1), a3], Error::OnWall(j))
}

/// Leading coefficient and discriminant of the slice forms at `a`, on canonical weights.
pub fn a_form_signs<T: Scalar>(sorted: &[T]) -> (T, T) {
    let (g1, g2, g3) = (sorted[0].clone(), sorted[1].clone(), sorted[2].clone());
    let s = g1.clone() + g2.clone() + g3.clone();
    let a = g1.clone() / g3.clone() * (g1.clone() + g3.clone());
    let d = g1 * g2 / g3 * s;
    (a, d)
}

pub fn slice_cone_a<T: Scalar>(w: &Weights<T>) -> Result<ConeSpec<T>> {
    three(w)?;
    cone_a(w, DEFAULT_SNAP_TOL)
}

fn cone_a<T: Scalar>(w: &Weights<T>, tol: f64) -> Result<ConeSpec<T>> {
    let scale = w.scale();
    if w.sum().snap_sign(&scale, tol) == 0 {
        return Err(Error::ZeroSum);
    }
    let canon = canonicalize_with(w, tol);
    let g = &canon.sorted_gammas;
    let (a, d) = a_form_signs(g);
    let sa = a.snap_sign(&(scale.clone() * scale.clone()), tol);
    let sd = d.snap_sign(&(scale.clone() * scale.clone() * scale), tol);
    let generators = match (sd, sa) {
        (1, 1) => vec![Generator::line(Root::Alpha3), Generator::ray(SignedRoot::plus(Root::Alpha2))],
        (1, -1) => vec![Generator::line(Root::Alpha2), Generator::ray(SignedRoot::plus(Root::Alpha3))],
        (-1, _) => vec![
            Generator::ray(SignedRoot::minus(Root::Alpha2)),
            Generator::ray(SignedRoot::minus(Root::Alpha3)),
        ],
        _ => return Err(Error::DegenerateForm("a")),
    };
    let apex = fixed_points3(g).a;
    let cone = ConeSpec { apex, generators, weyl_folded: false };
    Ok(if canon.starred { cone.starred() } else { cone })
}

/// Direction of the perturbation used for the continuity limit at transitions.
///
/// Nonzero on every form in [`sign_forms`], with positive sum.
fn nudge<T: Scalar>() -> [T; 3] {
    [T::ratio(7, 13), T::ratio(-3, 11), T::ratio(18, 17)]
}

/// The linear forms whose signs determine every cone: weights, pairwise sums and differences,
/// `g_i - g_j - g_k`, and the total.
pub fn sign_forms<T: Scalar>(g: &[T]) -> Vec<T> {
    let (g1, g2, g3) = (g[0].clone(), g[1].clone(), g[2].clone());
    vec![
        g1.clone(),
        g2.clone(),
        g3.clone(),
        g1.clone() - g2.clone(),
        g1.clone() - g3.clone(),
        g2.clone() - g3.clone(),
        g1.clone() + g2.clone(),
        g1.clone() + g3.clone(),
        g2.clone() + g3.clone(),
        g1.clone() - g2.clone() - g3.clone(),
        g2.clone() - g1.clone() - g3.clone(),
        g3.clone() - g1.clone() - g2.clone(),
        g1 + g2 + g3,
    ]
}

/// A nearby weight vector on no transition hyperplane, in the closure of every region touching `g`.
///
/// Returns `g` itself (and `false`) when no form vanishes.
pub fn limit_representative<T: Scalar>(g: &[T], tol: f64) -> (Vec<T>, bool) {
    let scale = max_abs(g);
    let forms = sign_forms(g);
    let live: Vec<T> = forms
        .iter()
        .filter(|h| h.snap_sign(&scale, tol) != 0)
        .map(|h| h.abs())
        .collect();
    if live.len() == forms.len() {
        return (g.to_vec(), false);
    }
    let d = nudge::<T>();
    let d1 = d.iter().fold(T::zero(), |acc, x| acc + x.abs());
    let smallest = live.iter().cloned().fold(scale, |m, x| if x < m { x } else { m });
    let eps = smallest / (d1 * T::from_i64(4).unwrap());
    (g.iter().zip(d).map(|(x, di)| x.clone() + eps.clone() * di).collect(), true)
}

/// The five local cones, with generators taken from the continuity limit at transitions.
#[derive(Clone, Debug)]
pub struct LocalCones<T> {
    pub cones: Vec<(FixedPoint, ConeSpec<T>)>,
    /// True when some cone came from the continuity limit.
    pub limit: bool,
}

/// Local cones of canonical weights (descending, non-negative sum).
pub fn local_cones<T: Scalar>(sorted: &[T], tol: f64) -> Result<LocalCones<T>> {
    let (gp, limit) = limit_representative(sorted, tol);
    let wp = Weights::new(gp.clone())?;
    let exact = if limit { 0.0 } else { tol };
    let apexes = fixed_points3(sorted);
    let mut cones = Vec::with_capacity(5);
    for which in FixedPoint::ALL {
        let mut cone = match which {
            FixedPoint::A => cone_a(&wp, exact)?,
            FixedPoint::B => cone_b(&gp, exact)?,
            FixedPoint::C1 => cone_c(1, &wp, exact)?,
            FixedPoint::C2 => cone_c(2, &wp, exact)?,
            FixedPoint::C3 => cone_c(3, &wp, exact)?,
        };
        cone.apex = match which {
            FixedPoint::A => apexes.a.clone(),
            FixedPoint::B => apexes.b.clone(),
            FixedPoint::C1 => apexes.c1.clone(),
            FixedPoint::C2 => apexes.c2.clone(),
            FixedPoint::C3 => apexes.c3.clone(),
        };
        cones.push((which, cone));
    }
    Ok(LocalCones { cones, limit })
}
