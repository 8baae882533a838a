//! JSON and SVG serialization of polytopes.

use std::fmt::Write;

use serde_json::{json, Map, Value};

use crate::polytope::{ChamberPolytope, HalfPlane, Kind, Provenance};
use crate::scalar::Scalar;
use crate::su3::{to_chamber, ChamberPoint, Root, Spectrum};

fn triple_json<T: Scalar>(v: &[T; 3]) -> Value {
    Value::Array(v.iter().map(Scalar::to_json).collect())
}

fn triple_from<T: Scalar>(v: &Value) -> Option<[T; 3]> {
    let a = v.as_array()?;
    if a.len() != 3 {
        return None;
    }
    Some([T::from_json(&a[0])?, T::from_json(&a[1])?, T::from_json(&a[2])?])
}

/// `{"kind", "vertices", "halfplanes"}`; rationals are written as `"p/q"` strings.
pub fn polytope_to_json<T: Scalar>(p: &ChamberPolytope<T>) -> Value {
    let halfplanes: Vec<Value> = p
        .halfplanes
        .iter()
        .map(|h| {
            json!({
                "normal": triple_json(&h.normal),
                "offset": h.offset.to_json(),
                "provenance": h.provenance.name(),
            })
        })
        .collect();
    let mut m = Map::new();
    m.insert("kind".into(), Value::String(p.kind.name().into()));
    m.insert("vertices".into(), Value::Array(p.vertices.iter().map(|v| triple_json(&v.to_array())).collect()));
    m.insert("halfplanes".into(), Value::Array(halfplanes));
    Value::Object(m)
}

pub fn polytope_from_json<T: Scalar>(v: &Value) -> Option<ChamberPolytope<T>> {
    let kind = match v.get("kind")?.as_str()? {
        "polygon" => Kind::Polygon,
        "segment" => Kind::Segment,
        "point" => Kind::Point,
        _ => return None,
    };
    let vertices = v
        .get("vertices")?
        .as_array()?
        .iter()
        .map(|x| triple_from::<T>(x).map(Spectrum::from_array))
        .collect::<Option<Vec<_>>>()?;
    let halfplanes = v
        .get("halfplanes")?
        .as_array()?
        .iter()
        .map(|h| {
            Some(HalfPlane {
                normal: triple_from(h.get("normal")?)?,
                offset: T::from_json(h.get("offset")?)?,
                provenance: Provenance::from_name(h.get("provenance")?.as_str()?)?,
            })
        })
        .collect::<Option<Vec<_>>>()?;
    Some(ChamberPolytope { halfplanes, vertices, kind })
}

/// Optional decorations for [`polytope_svg`].
#[derive(Clone, Debug, Default)]
pub struct SvgOptions {
    pub title: Option<String>,
    /// Named points drawn as labelled dots, typically the fixed points.
    pub marks: Vec<(String, Spectrum<f64>)>,
}

const SIZE: f64 = 480.0;
const MARGIN: f64 = 40.0;

/// SVG 1.1 figure of the chamber, its walls, the roots and the polytope.
pub fn polytope_svg<T: Scalar>(p: &ChamberPolytope<T>, opts: &SvgOptions) -> String {
    let pts = p.chamber_points();
    let mut extent = pts.iter().fold(0.0f64, |m, c| m.max(c.p.abs()).max(c.q.abs()));
    for (_, s) in &opts.marks {
        let c = to_chamber(s);
        extent = extent.max(c.p.abs()).max(c.q.abs());
    }
    let extent = if extent > 0.0 { extent * 1.15 } else { 1.0 };
    let scale = (SIZE - 2.0 * MARGIN) / (2.0 * extent);
    let map = |c: &ChamberPoint| (SIZE / 2.0 + c.p * scale, SIZE / 2.0 - c.q * scale);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    if let Some(t) = &opts.title {
        let _ = writeln!(out, r#"<text x="{MARGIN}" y="24" font-family="sans-serif" font-size="16">{}</text>"#, escape(t));
    }
    let origin = map(&ChamberPoint { p: 0.0, q: 0.0 });
    let reach = extent * 2.0;
    let sqrt3 = 3f64.sqrt();
    for (dp, dq) in [(0.0, 1.0), (sqrt3 / 2.0, 0.5)] {
        let end = map(&ChamberPoint { p: dp * reach, q: dq * reach });
        let _ = writeln!(
            out,
            r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="black" stroke-width="1.5"/>"#,
            origin.0, origin.1, end.0, end.1
        );
    }
    let arrow = extent * 0.25;
    for r in Root::ALL {
        let v = r.vector().map(|x| x as f64);
        let c = to_chamber(&Spectrum::from_array(v));
        let n = c.p.hypot(c.q);
        let end = map(&ChamberPoint { p: c.p / n * arrow, q: c.q / n * arrow });
        let _ = writeln!(
            out,
            r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="gray" stroke-width="1" stroke-dasharray="4 2"/>"#,
            origin.0, origin.1, end.0, end.1
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="11" fill="gray">{}</text>"#,
            end.0 + 3.0,
            end.1 - 3.0,
            r.name()
        );
    }
    let coords: Vec<String> = pts
        .iter()
        .map(|c| {
            let (x, y) = map(c);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    match p.kind {
        Kind::Polygon => {
            let _ = writeln!(
                out,
                r#"<polygon points="{}" fill="steelblue" fill-opacity="0.35" stroke="steelblue" stroke-width="2"/>"#,
                coords.join(" ")
            );
        }
        Kind::Segment => {
            let _ = writeln!(out, r#"<polyline points="{}" fill="none" stroke="steelblue" stroke-width="3"/>"#, coords.join(" "));
        }
        Kind::Point => {}
    }
    for c in &pts {
        let (x, y) = map(c);
        let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="3.5" fill="steelblue"/>"#);
    }
    for (name, s) in &opts.marks {
        let (x, y) = map(&to_chamber(s));
        let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="2.5" fill="crimson"/>"#);
        let _ = writeln!(
            out,
            r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="12" fill="crimson">{}</text>"#,
            x + 5.0,
            y + 12.0,
            escape(name)
        );
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
