//! Momentum polytopes as intersections of half-planes in the positive chamber.

use std::fmt;

use crate::classify::canonicalize_with;
use crate::cones::local_cones;
use crate::error::{Error, Result};
use crate::moment::{fixed_point_spectra, FixedPoint, FixedPointSpectra, Weights};
use crate::scalar::{max_abs, Scalar, DEFAULT_SNAP_TOL};
use crate::su3::{from_chamber, star_involution, star_vector, to_chamber, to_positive_chamber, ChamberPoint, Spectrum};

/// Floor on containment tolerances.
pub const ABS_TOL_FLOOR: f64 = 1e-12;

/// Where a half-plane came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// `l1 >= l2`.
    Wall12,
    /// `l2 >= l3`.
    Wall23,
    Cone(FixedPoint),
    /// One side of the supporting line of a segment.
    SegmentLine,
    /// End cap of a segment.
    SegmentEnd,
    /// Pins a single point.
    Point,
    /// Edge of a hull computed from sample points.
    Hull,
}

impl Provenance {
    pub fn name(self) -> String {
        match self {
            Provenance::Wall12 => "wall:l1=l2".into(),
            Provenance::Wall23 => "wall:l2=l3".into(),
            Provenance::Cone(f) => format!("cone:{}", f.name()),
            Provenance::SegmentLine => "segment-line".into(),
            Provenance::SegmentEnd => "segment-end".into(),
            Provenance::Point => "point".into(),
            Provenance::Hull => "hull".into(),
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "wall:l1=l2" => Provenance::Wall12,
            "wall:l2=l3" => Provenance::Wall23,
            "segment-line" => Provenance::SegmentLine,
            "segment-end" => Provenance::SegmentEnd,
            "point" => Provenance::Point,
            "hull" => Provenance::Hull,
            _ => {
                let f = s.strip_prefix("cone:")?;
                Provenance::Cone(*FixedPoint::ALL.iter().find(|p| p.name() == f)?)
            }
        })
    }

    fn star(self) -> Self {
        match self {
            Provenance::Wall12 => Provenance::Wall23,
            Provenance::Wall23 => Provenance::Wall12,
            p => p,
        }
    }
}

/// `{s : normal . s >= offset}` with a sum-zero normal.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfPlane<T> {
    pub normal: [T; 3],
    pub offset: T,
    pub provenance: Provenance,
}

impl<T: Scalar> HalfPlane<T> {
    /// `normal . s - offset`; non-negative inside.
    pub fn slack(&self, s: &Spectrum<T>) -> T {
        s.dot(&self.normal) - self.offset.clone()
    }

    /// Signed Euclidean distance to the boundary line, positive inside.
    pub fn signed_distance(&self, s: &Spectrum<T>) -> f64 {
        self.slack(s).to_f64() / norm3(&self.normal)
    }

    fn star(&self) -> Self {
        Self { normal: star_vector(&self.normal), offset: self.offset.clone(), provenance: self.provenance.star() }
    }
}

fn norm3<T: Scalar>(n: &[T; 3]) -> f64 {
    n.iter().map(|x| x.to_f64().powi(2)).sum::<f64>().sqrt()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Polygon,
    Segment,
    Point,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Polygon => "polygon",
            Kind::Segment => "segment",
            Kind::Point => "point",
        }
    }
}

/// Convex region of the positive chamber with counterclockwise vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct ChamberPolytope<T> {
    pub halfplanes: Vec<HalfPlane<T>>,
    pub vertices: Vec<Spectrum<T>>,
    pub kind: Kind,
}

impl<T: Scalar> ChamberPolytope<T> {
    pub fn chamber_points(&self) -> Vec<ChamberPoint> {
        self.vertices.iter().map(to_chamber).collect()
    }

    pub fn diameter(&self) -> f64 {
        let pts = self.chamber_points();
        let mut d: f64 = 0.0;
        for (i, a) in pts.iter().enumerate() {
            for b in &pts[i + 1..] {
                d = d.max(a.distance(b));
            }
        }
        d
    }

    /// Image under the star involution, still counterclockwise and led by the image of the first vertex.
    pub fn star(&self) -> Self {
        let mut vertices: Vec<Spectrum<T>> = Vec::with_capacity(self.vertices.len());
        if let Some(first) = self.vertices.first() {
            vertices.push(star_involution(first));
            vertices.extend(self.vertices[1..].iter().rev().map(star_involution));
        }
        Self { halfplanes: self.halfplanes.iter().map(|h| h.star()).collect(), vertices, kind: self.kind }
    }

    pub fn to_f64(&self) -> ChamberPolytope<f64> {
        ChamberPolytope {
            halfplanes: self
                .halfplanes
                .iter()
                .map(|h| HalfPlane {
                    normal: h.normal.clone().map(|x| x.to_f64()),
                    offset: h.offset.to_f64(),
                    provenance: h.provenance,
                })
                .collect(),
            vertices: self.vertices.iter().map(|v| v.to_f64()).collect(),
            kind: self.kind,
        }
    }

    /// Largest distance by which `s` violates a half-plane (zero inside).
    pub fn violation(&self, s: &Spectrum<T>) -> f64 {
        self.halfplanes
            .iter()
            .map(|h| -h.signed_distance(s))
            .fold(0.0, f64::max)
    }
}

impl<T: Scalar> fmt::Display for ChamberPolytope<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [", self.kind.name())?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// `l1 >= l2` and `l2 >= l3`.
pub fn wall_halfplanes<T: Scalar>() -> [HalfPlane<T>; 2] {
    let i = |x: i64| T::from_i64(x).unwrap();
    [
        HalfPlane { normal: [i(1), i(-1), i(0)], offset: T::zero(), provenance: Provenance::Wall12 },
        HalfPlane { normal: [i(0), i(1), i(-1)], offset: T::zero(), provenance: Provenance::Wall23 },
    ]
}

pub fn contains<T: Scalar>(p: &ChamberPolytope<T>, s: &Spectrum<T>, tol: f64) -> bool {
    if T::EXACT && tol == 0.0 {
        return p.halfplanes.iter().all(|h| !h.slack(s).is_negative());
    }
    let band = (tol * p.diameter()).max(ABS_TOL_FLOOR);
    p.violation(s) <= band
}

/// Dispatches on the number of weights.
pub fn build_polytope<T: Scalar>(w: &Weights<T>) -> Result<ChamberPolytope<T>> {
    match w.len() {
        2 => build_polytope_n2(w),
        3 => build_polytope_n3(w),
        n => Err(Error::UnsupportedLength(n)),
    }
}

pub fn build_polytope_n3<T: Scalar>(w: &Weights<T>) -> Result<ChamberPolytope<T>> {
    build_polytope_n3_with(w, DEFAULT_SNAP_TOL)
}

/// Intersection of the chamber with the half-planes of the five local cones.
///
/// At transitions every cone is evaluated in the continuity limit from a neighbouring region,
/// with apexes kept at the fixed points of `w`. A zero weight reduces to fewer factors.
pub fn build_polytope_n3_with<T: Scalar>(w: &Weights<T>, tol: f64) -> Result<ChamberPolytope<T>> {
    if w.len() != 3 {
        return Err(Error::UnsupportedLength(w.len()));
    }
    if let Some(reduced) = reduce_zero_weights(w, tol)? {
        return Ok(reduced);
    }
    let canon = canonicalize_with(w, tol);
    let g = &canon.sorted_gammas;
    let lc = local_cones(g, tol)?;
    let mut hps: Vec<HalfPlane<T>> = wall_halfplanes().into();
    for (which, cone) in &lc.cones {
        for n in cone.inward_normals() {
            let normal = n.map(|x| T::from_i64(x).unwrap());
            let offset = cone.apex.dot(&normal);
            push_halfplane(&mut hps, HalfPlane { normal, offset, provenance: Provenance::Cone(*which) });
        }
    }
    let anchor = lc.cones[0].1.apex.clone();
    let p = intersect_halfplanes(hps, &anchor, tol, &max_abs(g))?;
    Ok(if canon.starred { p.star() } else { p })
}

/// Keeps the tighter of two half-planes with identical normals.
fn push_halfplane<T: Scalar>(hps: &mut Vec<HalfPlane<T>>, h: HalfPlane<T>) {
    if let Some(old) = hps.iter_mut().find(|o| o.normal == h.normal) {
        if h.offset > old.offset {
            *old = h;
        }
    } else {
        hps.push(h);
    }
}

fn reduce_zero_weights<T: Scalar>(w: &Weights<T>, tol: f64) -> Result<Option<ChamberPolytope<T>>> {
    let scale = w.scale();
    let live: Vec<T> = w
        .gammas()
        .iter()
        .filter(|g| g.snap_sign(&scale, tol) != 0)
        .cloned()
        .collect();
    match live.len() {
        0 => Err(Error::AllWeightsDegenerate),
        1 => Ok(Some(single_factor(&live[0]))),
        2 if w.len() == 3 => Ok(Some(segment(&Weights::new(live)?))),
        _ => Ok(None),
    }
}

fn single_factor<T: Scalar>(g: &T) -> ChamberPolytope<T> {
    let third = T::ratio(1, 3);
    let raw = [g.clone() * T::ratio(2, 3), -g.clone() * third.clone(), -g.clone() * third];
    point(to_positive_chamber(raw).expect("trace-free").0)
}

fn point<T: Scalar>(x: Spectrum<T>) -> ChamberPolytope<T> {
    let mut halfplanes = Vec::new();
    for h in wall_halfplanes::<T>() {
        let off = x.dot(&h.normal);
        halfplanes.push(HalfPlane { normal: h.normal.clone(), offset: off.clone(), provenance: Provenance::Point });
        halfplanes.push(HalfPlane { normal: h.normal.map(|v| -v), offset: -off, provenance: Provenance::Point });
    }
    ChamberPolytope { halfplanes, vertices: vec![x], kind: Kind::Point }
}

pub fn build_polytope_n2<T: Scalar>(w: &Weights<T>) -> Result<ChamberPolytope<T>> {
    build_polytope_n2_with(w, DEFAULT_SNAP_TOL)
}

/// The segment from `a` to `c`.
pub fn build_polytope_n2_with<T: Scalar>(w: &Weights<T>, tol: f64) -> Result<ChamberPolytope<T>> {
    if w.len() != 2 {
        return Err(Error::UnsupportedLength(w.len()));
    }
    if let Some(reduced) = reduce_zero_weights(w, tol)? {
        return Ok(reduced);
    }
    Ok(segment(w))
}

fn segment<T: Scalar>(w: &Weights<T>) -> ChamberPolytope<T> {
    let FixedPointSpectra::Two(f) = fixed_point_spectra(w) else { unreachable!() };
    let (a, c) = (f.a, f.c);
    if a == c {
        return point(a);
    }
    let dir: [T; 3] = std::array::from_fn(|i| c.to_array()[i].clone() - a.to_array()[i].clone());
    let n = [
        dir[1].clone() - dir[2].clone(),
        dir[2].clone() - dir[0].clone(),
        dir[0].clone() - dir[1].clone(),
    ];
    let neg = |v: &[T; 3]| v.clone().map(|x| -x);
    let halfplanes = vec![
        HalfPlane { normal: n.clone(), offset: a.dot(&n), provenance: Provenance::SegmentLine },
        HalfPlane { normal: neg(&n), offset: -a.dot(&n), provenance: Provenance::SegmentLine },
        HalfPlane { normal: dir.clone(), offset: a.dot(&dir), provenance: Provenance::SegmentEnd },
        HalfPlane { normal: neg(&dir), offset: -c.dot(&dir), provenance: Provenance::SegmentEnd },
    ];
    ChamberPolytope { halfplanes, vertices: vec![a, c], kind: Kind::Segment }
}

type P2<T> = (T, T);

fn cross<T: Scalar>(o: &P2<T>, a: &P2<T>, b: &P2<T>) -> T {
    (a.0.clone() - o.0.clone()) * (b.1.clone() - o.1.clone()) - (a.1.clone() - o.1.clone()) * (b.0.clone() - o.0.clone())
}

/// Monotone chain; drops collinear points. `eps` bounds float noise in orientation tests.
fn convex_order<T: Scalar>(mut pts: Vec<P2<T>>, eps: &T) -> Vec<P2<T>> {
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<P2<T>> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= *eps {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<P2<T>> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= *eps {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Vertices of the intersection of chamber half-planes, counterclockwise from `anchor`.
///
/// Works in `(l1, l2)` coordinates, an orientation-preserving linear image of the chamber plane.
pub fn intersect_halfplanes<T: Scalar>(
    halfplanes: Vec<HalfPlane<T>>,
    anchor: &Spectrum<T>,
    tol: f64,
    scale: &T,
) -> Result<ChamberPolytope<T>> {
    let rows: Vec<(T, T, T)> = halfplanes
        .iter()
        .map(|h| {
            let n = &h.normal;
            (n[0].clone() - n[2].clone(), n[1].clone() - n[2].clone(), h.offset.clone())
        })
        .collect();
    let slack_tol = |k: usize| -> T {
        if T::EXACT {
            T::zero()
        } else {
            let (a, b, _) = &rows[k];
            <T as Scalar>::from_f64(tol * scale.to_f64() * (a.to_f64().hypot(b.to_f64())))
        }
    };
    let same = |p: &P2<T>, q: &P2<T>| -> bool {
        if T::EXACT {
            p == q
        } else {
            let band = tol * scale.to_f64();
            (p.0.clone() - q.0.clone()).abs().to_f64() <= band && (p.1.clone() - q.1.clone()).abs().to_f64() <= band
        }
    };
    let mut pts: Vec<P2<T>> = Vec::new();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let (a1, b1, c1) = &rows[i];
            let (a2, b2, c2) = &rows[j];
            let det = a1.clone() * b2.clone() - b1.clone() * a2.clone();
            let det_scale = (a1.clone().abs() + b1.clone().abs()) * (a2.clone().abs() + b2.clone().abs());
            if det.snap_sign(&det_scale, tol) == 0 {
                continue;
            }
            let x = (c1.clone() * b2.clone() - b1.clone() * c2.clone()) / det.clone();
            let y = (a1.clone() * c2.clone() - c1.clone() * a2.clone()) / det;
            let feasible = rows.iter().enumerate().all(|(k, (a, b, c))| {
                a.clone() * x.clone() + b.clone() * y.clone() - c.clone() >= -slack_tol(k)
            });
            let p = (x, y);
            if feasible && !pts.iter().any(|q| same(q, &p)) {
                pts.push(p);
            }
        }
    }
    let eps = if T::EXACT {
        T::zero()
    } else {
        <T as Scalar>::from_f64(tol * scale.to_f64() * scale.to_f64())
    };
    let hull = convex_order(pts, &eps);
    let mut vertices: Vec<Spectrum<T>> = hull
        .into_iter()
        .map(|(x, y)| Spectrum::from_array([x.clone(), y.clone(), -(x + y)]))
        .collect();
    if vertices.is_empty() {
        return Err(Error::AllWeightsDegenerate);
    }
    let start = vertices
        .iter()
        .enumerate()
        .min_by(|(_, u), (_, v)| u.distance(anchor).partial_cmp(&v.distance(anchor)).unwrap())
        .map(|(i, _)| i)
        .unwrap_or(0);
    vertices.rotate_left(start);
    let kind = match vertices.len() {
        1 => Kind::Point,
        2 => Kind::Segment,
        _ => Kind::Polygon,
    };
    Ok(ChamberPolytope { halfplanes, vertices, kind })
}

/// Convex hull of chamber points.
pub fn hull2d(points: &[ChamberPoint]) -> ChamberPolytope<f64> {
    assert!(!points.is_empty(), "hull of no points");
    let scale = points.iter().fold(0.0f64, |m, c| m.max(c.p.abs()).max(c.q.abs())).max(1.0);
    let pts: Vec<P2<f64>> = points.iter().map(|c| (c.p, c.q)).collect();
    let hull = convex_order(pts, &(1e-12 * scale * scale));
    let spec = |p: &P2<f64>| from_chamber(&ChamberPoint { p: p.0, q: p.1 });
    match hull.len() {
        1 => point(spec(&hull[0])),
        2 => {
            let (a, c) = (spec(&hull[0]), spec(&hull[1]));
            let dir = [c.l1 - a.l1, c.l2 - a.l2, c.l3 - a.l3];
            let n = [dir[1] - dir[2], dir[2] - dir[0], dir[0] - dir[1]];
            let neg = |v: [f64; 3]| v.map(|x| -x);
            let halfplanes = vec![
                HalfPlane { normal: n, offset: a.dot(&n), provenance: Provenance::SegmentLine },
                HalfPlane { normal: neg(n), offset: -a.dot(&n), provenance: Provenance::SegmentLine },
                HalfPlane { normal: dir, offset: a.dot(&dir), provenance: Provenance::SegmentEnd },
                HalfPlane { normal: neg(dir), offset: -c.dot(&dir), provenance: Provenance::SegmentEnd },
            ];
            ChamberPolytope { halfplanes, vertices: vec![a, c], kind: Kind::Segment }
        }
        m => {
            let sqrt2 = std::f64::consts::SQRT_2;
            let sqrt6 = 6f64.sqrt();
            let halfplanes = (0..m)
                .map(|i| {
                    let (u, v) = (&hull[i], &hull[(i + 1) % m]);
                    let (np, nq) = (-(v.1 - u.1), v.0 - u.0);
                    // p = (l1 - l2)/sqrt2, q = (l1 + l2 - 2 l3)/sqrt6
                    let normal = [np / sqrt2 + nq / sqrt6, -np / sqrt2 + nq / sqrt6, -2.0 * nq / sqrt6];
                    HalfPlane { normal, offset: np * u.0 + nq * u.1, provenance: Provenance::Hull }
                })
                .collect();
            ChamberPolytope { halfplanes, vertices: hull.iter().map(spec).collect(), kind: Kind::Polygon }
        }
    }
}

fn seg_dist(x: &ChamberPoint, a: &ChamberPoint, b: &ChamberPoint) -> f64 {
    let (ex, ey) = (b.p - a.p, b.q - a.q);
    let len2 = ex * ex + ey * ey;
    let t = if len2 > 0.0 { (((x.p - a.p) * ex + (x.q - a.q) * ey) / len2).clamp(0.0, 1.0) } else { 0.0 };
    (x.p - (a.p + t * ex)).hypot(x.q - (a.q + t * ey))
}

/// Distance from `x` to a convex polygon, segment or point given by ordered vertices.
pub fn distance_to_convex(x: &ChamberPoint, poly: &[ChamberPoint]) -> f64 {
    match poly.len() {
        0 => f64::INFINITY,
        1 => x.distance(&poly[0]),
        2 => seg_dist(x, &poly[0], &poly[1]),
        m => {
            let inside = (0..m).all(|i| {
                let (a, b) = (&poly[i], &poly[(i + 1) % m]);
                (b.p - a.p) * (x.q - a.q) - (b.q - a.q) * (x.p - a.p) >= 0.0
            });
            if inside {
                0.0
            } else {
                (0..m).map(|i| seg_dist(x, &poly[i], &poly[(i + 1) % m])).fold(f64::INFINITY, f64::min)
            }
        }
    }
}

/// Symmetric Hausdorff distance in the chamber metric; exact for convex sets.
pub fn hausdorff<T: Scalar, U: Scalar>(p: &ChamberPolytope<T>, q: &ChamberPolytope<U>) -> f64 {
    let (pv, qv) = (p.chamber_points(), q.chamber_points());
    let one_way = |from: &[ChamberPoint], to: &[ChamberPoint]| {
        from.iter().map(|x| distance_to_convex(x, to)).fold(0.0, f64::max)
    };
    one_way(&pv, &qv).max(one_way(&qv, &pv))
}

/// Largest distance from a vertex of `predicted` to `inner`: how far `inner` falls short.
pub fn hausdorff_deficit<T: Scalar>(inner: &ChamberPolytope<f64>, predicted: &ChamberPolytope<T>) -> f64 {
    let iv = inner.chamber_points();
    predicted
        .chamber_points()
        .iter()
        .map(|x| distance_to_convex(x, &iv))
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64, d: i64) -> Q {
        Q::ratio(n, d)
    }

    fn w(g: &[i64]) -> Weights<Q> {
        Weights::new(g.iter().map(|&x| q(x, 1)).collect()).unwrap()
    }

    fn s(v: [(i64, i64); 3]) -> Spectrum<Q> {
        Spectrum::from_array(v.map(|(n, d)| q(n, d)))
    }

    #[test]
    fn aaa_triangle() {
        let p = build_polytope_n3(&w(&[1, 1, 1])).unwrap();
        assert_eq!(p.kind, Kind::Polygon);
        assert_eq!(
            p.vertices,
            vec![s([(2, 1), (-1, 1), (-1, 1)]), s([(1, 2), (1, 2), (-1, 1)]), Spectrum::zero()]
        );
        assert!(contains(&p, &Spectrum::zero(), 0.0));
        assert!(contains(&p, &s([(1, 1), (0, 1), (-1, 1)]), 0.0));
        assert!(!contains(&p, &s([(3, 1), (0, 1), (-3, 1)]), 1e-9));
        for v in &p.vertices {
            assert!(contains(&p, v, 1e-9));
        }
    }

    #[test]
    fn b_region_quadrilateral() {
        let p = build_polytope_n3(&w(&[6, 2, 1])).unwrap();
        let mut got = p.vertices.clone();
        got.sort();
        let mut want = vec![
            s([(3, 1), (-1, 1), (-2, 1)]),
            s([(4, 1), (-2, 1), (-2, 1)]),
            s([(6, 1), (-3, 1), (-3, 1)]),
            s([(3, 1), (0, 1), (-3, 1)]),
        ];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(p.vertices[0], s([(6, 1), (-3, 1), (-3, 1)]));
    }

    #[test]
    fn c_region_vertices() {
        let p = build_polytope_n3(&w(&[8, 3, -1])).unwrap();
        let mut got = p.vertices.clone();
        got.sort();
        let mut want = vec![
            s([(11, 3), (-1, 3), (-10, 3)]),
            s([(20, 3), (-10, 3), (-10, 3)]),
            s([(23, 3), (-10, 3), (-13, 3)]),
            s([(14, 3), (-1, 3), (-13, 3)]),
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn star_and_permutation() {
        let p = build_polytope_n3(&w(&[4, 2, -1])).unwrap();
        assert_eq!(build_polytope_n3(&w(&[-4, -2, 1])).unwrap().vertices, p.star().vertices);
        assert_eq!(build_polytope_n3(&w(&[-1, 4, 2])).unwrap().vertices, p.vertices);
        assert_eq!(p.star().star(), p);
    }

    #[test]
    fn segments() {
        let p = build_polytope_n2(&w(&[2, 1])).unwrap();
        assert_eq!(p.vertices, vec![s([(2, 1), (-1, 1), (-1, 1)]), s([(1, 1), (0, 1), (-1, 1)])]);
        let p = build_polytope_n2(&w(&[1, -1])).unwrap();
        assert_eq!(p.vertices, vec![Spectrum::zero(), s([(1, 1), (0, 1), (-1, 1)])]);
        let p = build_polytope_n2(&w(&[1, 1])).unwrap();
        assert_eq!(p.vertices, vec![s([(4, 3), (-2, 3), (-2, 3)]), s([(1, 3), (1, 3), (-2, 3)])]);
        assert!(contains(&p, &s([(5, 6), (-1, 6), (-2, 3)]), 0.0));
        assert!(!contains(&p, &s([(5, 6), (-1, 3), (-1, 2)]), 0.0));
    }

    #[test]
    fn zero_weight_reduces() {
        let w3 = Weights::allowing_zero(vec![q(2, 1), q(0, 1), q(1, 1)]).unwrap();
        let p = build_polytope_n3(&w3).unwrap();
        assert_eq!(p, build_polytope_n2(&w(&[2, 1])).unwrap());
        let w1 = Weights::allowing_zero(vec![q(0, 1), q(0, 1), q(-3, 1)]).unwrap();
        let p = build_polytope_n3(&w1).unwrap();
        assert_eq!(p.vertices, vec![s([(1, 1), (1, 1), (-2, 1)])]);
        let w0 = Weights::allowing_zero(vec![q(0, 1); 3]).unwrap();
        assert_eq!(build_polytope_n3(&w0), Err(Error::AllWeightsDegenerate));
    }

    #[test]
    fn float_build_matches_exact() {
        for g in [[5, 4, 3], [4, 2, -1], [2, 1, 1], [3, 1, -4], [1, 1, 1]] {
            let exact = build_polytope_n3(&w(&g)).unwrap();
            let float = build_polytope_n3(&Weights::new(g.map(|x| x as f64).to_vec()).unwrap()).unwrap();
            assert_eq!(exact.vertices.len(), float.vertices.len(), "{g:?}");
            assert!(hausdorff(&exact, &float) < 1e-12, "{g:?}");
        }
    }

    #[test]
    fn hull_examples() {
        let c = |p: f64, q: f64| ChamberPoint { p, q };
        let sq = hull2d(&[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(0.0, 1.0), c(0.5, 0.5)]);
        assert_eq!(sq.kind, Kind::Polygon);
        assert_eq!(sq.vertices.len(), 4);
        let inside = from_chamber(&c(0.5, 0.25));
        assert!(contains(&sq, &inside, 0.0));
        assert!(!contains(&sq, &from_chamber(&c(1.5, 0.25)), 1e-9));
        let seg = hull2d(&[c(0.0, 0.0), c(1.0, 1.0), c(2.0, 2.0)]);
        assert_eq!(seg.kind, Kind::Segment);
        assert!((seg.diameter() - 8f64.sqrt()).abs() < 1e-12);
        assert_eq!(hull2d(&[c(0.3, 0.1)]).kind, Kind::Point);
        let shifted = hull2d(&[c(0.1, 0.0), c(1.1, 0.0), c(1.1, 1.0), c(0.1, 1.0)]);
        assert!((hausdorff(&sq, &shifted) - 0.1).abs() < 1e-12);
        assert_eq!(hausdorff(&sq, &sq), 0.0);
    }
}
