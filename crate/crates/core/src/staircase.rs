//! Text staircase diagrams in the style of the classical lattice pictures.
//!
//! Glyphs: `#` exponent in the ideal, `G` inner degree with nonzero
//! derivations, `R` outer degree with nonzero derivations, `o` basis
//! monomial carrying no derivation degree, `.` anything else.

use crate::algebra::{QuotientAlgebra, WeightDecomposition};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lattice::ExponentVector;

pub const LEGEND: &str = "legend: # in ideal | G inner degree with derivations | \
R outer degree with derivations | o basis monomial, no derivations | . other";

pub fn glyph(algebra: &QuotientAlgebra, wd: &WeightDecomposition, point: &ExponentVector) -> char {
    if algebra.ideal().in_support(point) {
        '#'
    } else if wd.dim_at(point) > 0 {
        if point.is_nonneg() {
            'G'
        } else {
            'R'
        }
    } else if algebra.cosupport().contains(point) {
        'o'
    } else {
        '.'
    }
}

/// Renders the window `[-1, d + 1]^n`, `d` the pure-power exponents, for
/// `n <= 2`, highest row first.
pub fn render_staircase(ideal: &MonomialIdeal) -> Result<String> {
    let n = ideal.n();
    if n > 2 {
        return Err(Error::UnsupportedDimension(n));
    }
    let algebra = QuotientAlgebra::new(ideal.clone())?;
    let wd = algebra.weight_decomposition();
    let corner = ideal.pure_power_box()?;
    let xs: Vec<i64> = (-1..=corner.get(0) + 1).collect();
    let ys: Vec<i64> = if n == 2 {
        (-1..=corner.get(1) + 1).rev().collect()
    } else {
        vec![0]
    };
    let width = xs.iter().map(|x| x.to_string().len()).max().unwrap_or(1);
    let label_width = ys.iter().map(|y| y.to_string().len()).max().unwrap_or(1);

    let mut out = String::new();
    for &y in &ys {
        let cells: Vec<String> = xs
            .iter()
            .map(|&x| {
                let point = if n == 2 {
                    ExponentVector::new(vec![x, y])
                } else {
                    ExponentVector::new(vec![x])
                };
                format!("{:>width$}", glyph(&algebra, &wd, &point))
            })
            .collect();
        let label = if n == 2 { y.to_string() } else { String::new() };
        out.push_str(&format!("{label:>label_width$} | {}\n", cells.join(" ")));
    }
    let axis: Vec<String> = xs.iter().map(|x| format!("{x:>width$}")).collect();
    out.push_str(&format!("{:>label_width$}   {}\n", "", axis.join(" ")));
    out.push_str(LEGEND);
    out.push('\n');
    Ok(out)
}
