//! ASCII and SVG pictures of xaviers.
//!
//! One lattice unit is two character columns, so a domino is four cells
//! wide and the one-unit offsets between floors stay visible.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::xavier::Xavier;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderOptions {
    glyph: String,
    pub unit_width: u32,
    pub row_height: u32,
    pub fill: String,
    pub stroke: String,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            glyph: "[==]".to_string(),
            unit_width: 20,
            row_height: 20,
            fill: "#f2d39b".to_string(),
            stroke: "#333333".to_string(),
        }
    }
}

impl RenderOptions {
    pub fn with_glyph(mut self, glyph: &str) -> Result<Self> {
        if glyph.chars().count() != 4 {
            return Err(Error::BadGlyph(glyph.to_string()));
        }
        self.glyph = glyph.to_string();
        Ok(self)
    }

    pub fn glyph(&self) -> &str {
        &self.glyph
    }
}

/// Top floor first, lines joined by `\n`, no trailing spaces or newline.
pub fn render_ascii(x: &Xavier, opts: &RenderOptions) -> String {
    let min_pos = x.min_pos();
    let width = 2 * (x.max_pos() - min_pos) as usize + 4;
    let glyph: Vec<char> = opts.glyph.chars().collect();
    let mut rows = vec![vec![' '; width]; x.max_floor() as usize + 1];
    for p in x.pieces() {
        let col = 2 * (p.pos - min_pos) as usize;
        rows[p.floor as usize][col..col + 4].copy_from_slice(&glyph);
    }
    rows.iter()
        .rev()
        .map(|row| row.iter().collect::<String>().trim_end().to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn render_svg(x: &Xavier, opts: &RenderOptions) -> String {
    let min_pos = x.min_pos();
    let max_floor = i64::from(x.max_floor());
    let unit = i64::from(opts.unit_width);
    let row = i64::from(opts.row_height);
    let width = (x.max_pos() - min_pos + 2) * unit;
    let height = (max_floor + 1) * row;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    for p in x.pieces() {
        let _ = writeln!(
            out,
            r#"  <rect x="{}" y="{}" width="{}" height="{}" fill="{}" stroke="{}"/>"#,
            (p.pos - min_pos) * unit,
            (max_floor - i64::from(p.floor)) * row,
            2 * unit,
            row,
            opts.fill,
            opts.stroke,
        );
    }
    out.push_str("</svg>\n");
    out
}
