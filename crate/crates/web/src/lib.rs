//! Browser bindings: each export returns a JSON string, with SVG markup in
//! the `svg` fields. Errors come back as `{"error": "..."}`.

use std::fmt::Write as _;

use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

use ratcat::bounce::{bounce_path, bounce_tree, BouncePath};
use ratcat::cores::semimodule_to_core;
use ratcat::diagrams::{enumerate_below_diagonal, h_plus, qt_catalan, Frame, Partition};
use ratcat::gmaps::g_columns;
use ratcat::semimodules::{box_label, parse_gaps, Semimodule};

const CELL: u32 = 22;
const MAX_LISTED: usize = 400;

fn respond(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn frame(m: u32, n: u32) -> Result<Frame, String> {
    Frame::new(m, n).map_err(|e| e.to_string())
}

fn svg_open(w: u32, h: u32) -> String {
    format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="-2 -2 {} {}" width="{}" height="{}">"#,
        w * CELL + 4,
        h * CELL + 4,
        w * CELL + 4,
        h * CELL + 4
    )
}

fn grid(out: &mut String, w: u32, h: u32) {
    for x in 0..=w {
        let _ = write!(out, r##"<line x1="{0}" y1="0" x2="{0}" y2="{1}" stroke="#ddd"/>"##, x * CELL, h * CELL);
    }
    for y in 0..=h {
        let _ = write!(out, r##"<line x1="0" y1="{0}" x2="{1}" y2="{0}" stroke="#ddd"/>"##, y * CELL, w * CELL);
    }
}

fn cell(out: &mut String, x: u32, y: u32, fill: &str) {
    let _ = write!(
        out,
        r##"<rect x="{}" y="{}" width="{CELL}" height="{CELL}" fill="{fill}" stroke="#333"/>"##,
        x * CELL,
        y * CELL
    );
}

/// A diagram in the `n`-wide, `m`-high frame, rows hanging from the top,
/// with the diagonal from `(0, m)` to `(n, 0)`.
fn diagram_svg(d: &Partition, f: &Frame, labels: Option<&Semimodule>) -> String {
    let (w, h) = (f.n(), f.m());
    let mut out = svg_open(w, h);
    grid(&mut out, w, h);
    if let Some(s) = labels {
        for i in 1..h {
            for j in 1..=f.row_bound(i) {
                let label = box_label(f, i, j);
                let fill = if s.contains(label) { "#8ecae6" } else { "#fff" };
                cell(&mut out, j - 1, i - 1, fill);
                let _ = write!(
                    out,
                    r#"<text x="{}" y="{}" font-size="10" text-anchor="middle">{label}</text>"#,
                    (j - 1) * CELL + CELL / 2,
                    (i - 1) * CELL + CELL / 2 + 4
                );
            }
        }
    } else {
        for (i, &r) in d.rows().iter().enumerate() {
            for j in 0..r {
                cell(&mut out, j, i as u32, "#8ecae6");
            }
        }
    }
    let _ = write!(
        out,
        r##"<line x1="0" y1="{}" x2="{}" y2="0" stroke="#c1121f" stroke-width="2"/></svg>"##,
        h * CELL,
        w * CELL
    );
    out
}

/// Columns of heights `cols` standing on the bottom of an `m`-wide,
/// `n`-high frame, with the bounce path drawn over them.
fn bounce_svg(cols: &[u32], f: &Frame, path: &BouncePath) -> String {
    let (w, h) = (f.m(), f.n());
    let mut out = svg_open(w, h);
    grid(&mut out, w, h);
    for (x, &c) in cols.iter().enumerate() {
        for y in 0..c {
            cell(&mut out, x as u32, h - 1 - y, "#ffb703");
        }
    }
    let points: Vec<String> = path
        .corners()
        .iter()
        .map(|&(x, y)| format!("{},{}", x * CELL, (h - y) * CELL))
        .collect();
    let _ = write!(
        out,
        r##"<polyline points="{}" fill="none" stroke="#023047" stroke-width="3"/></svg>"##,
        points.join(" ")
    );
    out
}

fn diagrams_value(m: u32, n: u32) -> Result<Value, String> {
    let f = frame(m, n)?;
    let all = enumerate_below_diagonal(&f);
    let poly = qt_catalan(&f).map_err(|e| e.to_string())?;
    let listed: Vec<Value> = all
        .iter()
        .take(MAX_LISTED)
        .map(|d| {
            json!({
                "rows": d.rows(),
                "a": f.delta() - d.area(),
                "h_plus": h_plus(d, &f),
                "svg": diagram_svg(d, &f, None),
            })
        })
        .collect();
    Ok(json!({
        "m": m,
        "n": n,
        "count": all.len(),
        "poly": poly.to_string(),
        "symmetric": poly.swap_vars() == poly,
        "diagrams": listed,
    }))
}

fn semimodule_value(m: u32, n: u32, gaps: &str) -> Result<Value, String> {
    let f = frame(m, n)?;
    let gaps = parse_gaps(gaps).map_err(|e| e.to_string())?;
    let s = Semimodule::new(f, gaps).map_err(|e| e.to_string())?;
    let d = s.to_diagram();
    let dual = s.dual();
    Ok(json!({
        "gaps": s.gaps(),
        "diagram": d.rows(),
        "generators_m": s.generators(m),
        "generators_n": s.generators(n),
        "g_m": g_columns(&s, m),
        "g_n": g_columns(&s, n),
        "dimension": s.cell_dimension(),
        "dual": dual.gaps(),
        "core": semimodule_to_core(&s).rows(),
        "svg": diagram_svg(&d, &f, Some(&s)),
    }))
}

fn bounce_value(m: u32, n: u32, gaps: &str) -> Result<Value, String> {
    let f = frame(m, n)?;
    let gaps = parse_gaps(gaps).map_err(|e| e.to_string())?;
    let s = Semimodule::new(f, gaps).map_err(|e| e.to_string())?;
    let tree = bounce_tree(&s).map_err(|e| e.to_string())?;
    let cols = g_columns(&s, m);
    let path = bounce_path(&cols, &f).map_err(|e| e.to_string())?;
    let gens = s.generators(m);
    let edges: Vec<Value> = tree
        .edges()
        .iter()
        .map(|&(i, p)| {
            let to = match p {
                ratcat::bounce::Node::Gen(j) => json!(gens[j]),
                ratcat::bounce::Node::Infinity => json!("inf"),
            };
            json!([gens[i], to])
        })
        .collect();
    Ok(json!({
        "g_m": cols,
        "steps": path.steps_string(),
        "statistic": path.statistic(),
        "codimension": f.delta() - s.to_diagram().area(),
        "tree": edges,
        "svg": bounce_svg(&cols, &f, &path),
    }))
}

/// Every diagram below the diagonal with its `(delta - |D|, h+)` pair.
#[wasm_bindgen]
pub fn diagrams(m: u32, n: u32) -> String {
    respond(diagrams_value(m, n))
}

/// Labels, `D(Delta)`, both G-maps, the dual and the core of a semimodule.
#[wasm_bindgen]
pub fn semimodule(m: u32, n: u32, gaps: &str) -> String {
    respond(semimodule_value(m, n, gaps))
}

/// Bounce tree and bounce path of a semimodule, for `m = kn +- 1`.
#[wasm_bindgen]
pub fn bounce(m: u32, n: u32, gaps: &str) -> String {
    respond(bounce_value(m, n, gaps))
}
