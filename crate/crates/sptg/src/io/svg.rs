//! Value diagrams as SVG: one panel per state, polylines drawn in data
//! coordinates under a per-panel transform so the vertex list reads back as
//! the breakpoints.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::rational::{q, Rational};

use super::value_doc::ValueDocument;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderOptions {
    /// States to draw, in order; empty means all.
    pub states: Vec<String>,
    /// Plots `v + rho·t`, which flattens waiting lines of rate `rho`.
    pub rho: Rational,
    pub width: u32,
    pub panel_height: u32,
    /// Digits after the decimal point for every emitted number.
    pub precision: usize,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { states: Vec::new(), rho: Rational::zero(), width: 640, panel_height: 200, precision: 12 }
    }
}

const MARGIN: i64 = 40;
const GAP: i64 = 30;

pub fn render_diagram(doc: &ValueDocument, opts: &RenderOptions) -> Result<String> {
    if opts.rho.is_negative() {
        return Err(Error::Precondition(format!("relative slope {} is negative", opts.rho)));
    }
    let ids: Vec<String> =
        if opts.states.is_empty() { doc.ids().map(String::from).collect() } else { opts.states.clone() };
    let dec = |r: &Rational| r.to_decimal(opts.precision);
    let w = opts.width as i64;
    let ph = opts.panel_height as i64;
    let total_h = GAP + ids.len() as i64 * (ph + GAP);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{total_h}" viewBox="0 0 {} {total_h}" font-family="monospace" font-size="12">"#,
        w + 2 * MARGIN,
        w + 2 * MARGIN
    )
    .unwrap();
    if !opts.rho.is_zero() {
        writeln!(out, r#"<desc>relative values v + {}*t</desc>"#, opts.rho).unwrap();
    }
    for (k, id) in ids.iter().enumerate() {
        let f = doc.function(id)?;
        let top = GAP + k as i64 * (ph + GAP);
        writeln!(out, r#"<g class="panel" data-state="{}">"#, escape(id)).unwrap();
        writeln!(out, r#"<text x="{MARGIN}" y="{}">{}</text>"#, top - 8, escape(id)).unwrap();
        writeln!(out, r#"<rect x="{MARGIN}" y="{top}" width="{w}" height="{ph}" fill="none" stroke="gray"/>"#)
            .unwrap();
        if f.is_infinite() {
            writeln!(out, r#"<text class="infinite" x="{}" y="{}">+inf</text>"#, MARGIN + 8, top + ph / 2).unwrap();
            writeln!(out, "</g>").unwrap();
            continue;
        }
        let rel = f.relative(&-&opts.rho);
        let pts = rel.breakpoints();
        let lo = pts.iter().map(|p| p.1.clone()).min().unwrap();
        let hi = pts.iter().map(|p| p.1.clone()).max().unwrap();
        let span = if lo == hi { Rational::one() } else { &hi - &lo };
        let (lo, hi) = if lo == hi { (&lo - &q(1, 2), &hi + &q(1, 2)) } else { (lo, hi) };
        // map t ∈ [0, T] to the panel width and [lo, hi] to its height, upward
        let sx = Rational::from_integer(w) / doc.horizon.clone();
        let sy = Rational::from_integer(ph) / span;
        let ty = Rational::from_integer(top) + &hi * &sy;
        writeln!(
            out,
            r#"<text x="{}" y="{}">{}</text><text x="{}" y="{}">{}</text>"#,
            MARGIN + w + 4,
            top + 12,
            dec(&hi),
            MARGIN + w + 4,
            top + ph,
            dec(&lo)
        )
        .unwrap();
        let coords: Vec<String> = pts.iter().map(|(t, v)| format!("{},{}", dec(t), dec(v))).collect();
        writeln!(
            out,
            r#"<polyline transform="matrix({} 0 0 {} {MARGIN} {})" vector-effect="non-scaling-stroke" fill="none" stroke="black" stroke-width="1.5" points="{}"/>"#,
            dec(&sx),
            dec(&-sy),
            dec(&ty),
            coords.join(" ")
        )
        .unwrap();
        writeln!(out, "</g>").unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduce::gen_exp_family;
    use crate::solve::event_point_iteration;

    fn family_doc(i: usize) -> ValueDocument {
        let g = gen_exp_family(i);
        ValueDocument::new(&g, &event_point_iteration(&g).unwrap())
    }

    /// The `points` attribute of the `k`-th polyline.
    fn polyline(svg: &str, k: usize) -> Vec<(String, String)> {
        let chunk = svg.split("<polyline").nth(k + 1).unwrap();
        let pts = chunk.split("points=\"").nth(1).unwrap().split('"').next().unwrap();
        pts.split(' ').map(|p| p.split_once(',').unwrap()).map(|(a, b)| (a.into(), b.into())).collect()
    }

    #[test]
    fn deterministic_and_readable() {
        let doc = family_doc(3);
        let opts = RenderOptions { states: vec!["vl3".into()], ..Default::default() };
        let a = render_diagram(&doc, &opts).unwrap();
        assert_eq!(a, render_diagram(&doc, &opts).unwrap());
        let f = doc.function("vl3").unwrap();
        let read = polyline(&a, 0);
        assert_eq!(read.len(), f.breakpoints().len());
        for ((t, v), (rt, rv)) in f.breakpoints().iter().zip(&read) {
            assert_eq!(&t.to_decimal(12), rt);
            assert_eq!(&v.to_decimal(12), rv);
        }
    }

    #[test]
    fn relative_waiting_line_is_flat() {
        let mut g = crate::Game::default();
        let l = g.add_state("L", crate::Owner::Max, q(1, 2)).unwrap();
        let goal = g.add_goal("g").unwrap();
        g.add_edge(l, goal, q(3, 2));
        let doc = ValueDocument::new(&g, &event_point_iteration(&g).unwrap());
        let opts = RenderOptions { states: vec!["L".into()], rho: q(1, 2), ..Default::default() };
        let read = polyline(&render_diagram(&doc, &opts).unwrap(), 0);
        assert!(read.iter().all(|(_, v)| v == "2.000000000000"));
    }

    #[test]
    fn unknown_and_infinite_states() {
        let doc = family_doc(1);
        let opts = RenderOptions { states: vec!["nope".into()], ..Default::default() };
        assert!(render_diagram(&doc, &opts).is_err());
        let mut g = gen_exp_family(0);
        g.add_state("stuck", crate::Owner::Max, q(0, 1)).unwrap();
        let doc = ValueDocument::new(&g, &event_point_iteration(&g).unwrap());
        let svg = render_diagram(&doc, &RenderOptions::default()).unwrap();
        assert!(svg.contains(r#"class="infinite""#));
    }
}
