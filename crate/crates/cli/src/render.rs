//! ASCII and SVG drawings of a plat: top arcs, one row per letter, bottom arcs.

use std::fmt::Write;

use platknot_core::PlatPresentation;

const ASCII_PITCH: usize = 3;
const SVG_PITCH: usize = 40;

fn letter_label(e: i32) -> String {
    if e > 0 {
        format!("s{e}")
    } else {
        format!("s{}^-1", -e)
    }
}

/// Strands are `|` columns. In a crossing row the two strands involved are
/// replaced by a two-column glyph: `\,` when the left strand passes over
/// (`+i`), `'/` when the right strand does (`-i`). The broken mark is the
/// under strand.
pub fn ascii(plat: &PlatPresentation) -> String {
    let m = plat.strand_count();
    let width = ASCII_PITCH * (m - 1) + 1;
    let col = |k: usize| ASCII_PITCH * (k - 1);
    let mut out = String::new();

    let arcs = |left: char, right: char| {
        let mut row = vec![' '; width];
        for i in 1..=plat.n() {
            let (a, b) = (col(2 * i - 1), col(2 * i));
            row[a] = left;
            row[a + 1..b].iter_mut().for_each(|c| *c = '-');
            row[b] = right;
        }
        row.into_iter().collect::<String>()
    };
    let top = arcs('.', '.');
    let bottom = arcs('\'', '\'');

    out.push_str(&top);
    out.push('\n');
    for &e in plat.braid().letters() {
        let i = e.unsigned_abs() as usize;
        let mut row = vec![' '; width];
        for k in 1..=m {
            if k != i && k != i + 1 {
                row[col(k)] = '|';
            }
        }
        let glyph = if e > 0 { ['\\', ','] } else { ['\'', '/'] };
        row[col(i) + 1] = glyph[0];
        row[col(i) + 2] = glyph[1];
        let line: String = row.into_iter().collect();
        let _ = writeln!(out, "{line}   {}", letter_label(e));
    }
    if plat.braid().is_empty() {
        let line: String = (0..width)
            .map(|c| if c % ASCII_PITCH == 0 { '|' } else { ' ' })
            .collect();
        out.push_str(&line);
        out.push('\n');
    }
    out.push_str(&bottom);
    out.push('\n');
    out
}

/// Same layout as [`ascii`] with a 40-unit column pitch and row height.
pub fn svg(plat: &PlatPresentation) -> String {
    let m = plat.strand_count();
    let p = SVG_PITCH as f64;
    let x = |k: usize| p * k as f64;
    let rows = plat.braid().len().max(1);
    let top_y = p;
    let bottom_y = p * (rows as f64 + 1.0);
    let width = p * (m as f64 + 1.0);
    let height = bottom_y + p;
    let r = p / 2.0;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"<g fill="none" stroke="black" stroke-width="2" stroke-linecap="round">"#
    );
    for i in 1..=plat.n() {
        let (a, b) = (x(2 * i - 1), x(2 * i));
        let _ = writeln!(
            out,
            r#"<path d="M {a} {top_y} A {r} {r} 0 0 1 {b} {top_y}"/>"#
        );
        let _ = writeln!(
            out,
            r#"<path d="M {a} {bottom_y} A {r} {r} 0 0 0 {b} {bottom_y}"/>"#
        );
    }
    let line = |out: &mut String, x1: f64, y1: f64, x2: f64, y2: f64| {
        let _ = writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
    };
    if plat.braid().is_empty() {
        for k in 1..=m {
            line(&mut out, x(k), top_y, x(k), bottom_y);
        }
    }
    for (row, &e) in plat.braid().letters().iter().enumerate() {
        let y0 = top_y + p * row as f64;
        let y1 = y0 + p;
        let i = e.unsigned_abs() as usize;
        for k in (1..=m).filter(|&k| k != i && k != i + 1) {
            line(&mut out, x(k), y0, x(k), y1);
        }
        let (over_from, under_from) = if e > 0 { (i, i + 1) } else { (i + 1, i) };
        let (over_to, under_to) = (under_from, over_from);
        line(&mut out, x(over_from), y0, x(over_to), y1);
        // under strand with a gap around the crossing point
        let lerp = |t: f64| {
            (
                x(under_from) + (x(under_to) - x(under_from)) * t,
                y0 + (y1 - y0) * t,
            )
        };
        let (ax, ay) = lerp(0.35);
        let (bx, by) = lerp(0.65);
        line(&mut out, x(under_from), y0, ax, ay);
        line(&mut out, bx, by, x(under_to), y1);
    }
    out.push_str("</g>\n</svg>\n");
    out
}
