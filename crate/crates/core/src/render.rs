//! Deterministic text and LaTeX rendering.
//!
//! Monomials print in (weight, total degree, lexicographic) order, so the
//! constant term comes first and within one weight the low-degree classes
//! precede products: `w_2(M)+w_2(V)+w_1(V)^2`. Generator symbols depend on
//! the family: `c` → `c_i`, `w` → `w_i`, `v` → `w_i(V)`, `t` → `w_i(M)`;
//! anything else prints as `<letter>_i`. The text and LaTeX styles differ
//! only in separator spacing and rational-coefficient syntax.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::free_lie::HallWord;
use crate::ring::{Family, GradedSeries, Generator, Monomial};

/// Output flavor; rendering is deterministic in both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderStyle {
    Text,
    Latex,
}

fn subscript(i: u32) -> String {
    if i < 10 {
        format!("_{i}")
    } else {
        format!("_{{{i}}}")
    }
}

fn superscript(e: u32) -> String {
    if e < 10 {
        format!("^{e}")
    } else {
        format!("^{{{e}}}")
    }
}

/// Symbol for one generator, e.g. `c_2`, `w_1(V)`, `w_3(M)`.
pub fn generator_symbol(g: Generator, _style: RenderStyle) -> String {
    let sub = subscript(g.index);
    match g.family {
        Family::C => format!("c{sub}"),
        Family::W => format!("w{sub}"),
        Family::V => format!("w{sub}(V)"),
        Family::T => format!("w{sub}(M)"),
        Family(ch) => format!("{}{sub}", ch as char),
    }
}

/// One monomial, factors juxtaposed: `w_1(M)w_2(V)^2`.
pub fn render_monomial(m: &Monomial, style: RenderStyle) -> String {
    if m.is_one() {
        return String::from("1");
    }
    let mut out = String::new();
    for &(g, e) in m.powers() {
        out.push_str(&generator_symbol(g, style));
        if e > 1 {
            out.push_str(&superscript(e));
        }
    }
    out
}

/// Display order for terms: weight, then total degree, then the exponent
/// vector lexicographically.
fn display_key(m: &Monomial) -> (u64, u64, Vec<(u8, u32, u32)>) {
    let lex = m
        .powers()
        .iter()
        .map(|&(g, e)| (g.family.0, g.index, e))
        .collect();
    (m.weight(), m.degree(), lex)
}

/// Terms of a series in display order.
pub fn sorted_terms(s: &GradedSeries) -> Vec<(&Monomial, &BigRational)> {
    let mut terms: Vec<(&Monomial, &BigRational)> = s.iter_terms().collect();
    terms.sort_by(|a, b| display_key(a.0).cmp(&display_key(b.0)));
    terms
}

fn render_coeff_abs(c: &BigRational, style: RenderStyle, with_monomial: bool) -> String {
    let abs = c.abs();
    if abs.is_one() && with_monomial {
        return String::new();
    }
    if abs.is_integer() {
        format!("{}", abs.numer())
    } else {
        match style {
            RenderStyle::Latex => format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom()),
            RenderStyle::Text => {
                if with_monomial {
                    format!("({}/{})", abs.numer(), abs.denom())
                } else {
                    format!("{}/{}", abs.numer(), abs.denom())
                }
            }
        }
    }
}

/// Full series: terms joined by `+`/`-` (spaced in text style). The zero
/// series prints as `0`.
pub fn render_series(s: &GradedSeries, style: RenderStyle) -> String {
    let terms = sorted_terms(s);
    if terms.is_empty() {
        return String::from("0");
    }
    let (plus, minus) = match style {
        RenderStyle::Text => (" + ", " - "),
        RenderStyle::Latex => ("+", "-"),
    };
    let mut out = String::new();
    for (i, (m, c)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { minus } else { plus });
        }
        if m.is_one() {
            out.push_str(&render_coeff_abs(c, style, false));
        } else {
            out.push_str(&render_coeff_abs(c, style, true));
            out.push_str(&render_monomial(m, style));
        }
    }
    out
}

/// Leaf names: u, v, w, x, y, z for the first six generators, then g7, g8, …
pub fn leaf_name(index: u32, _n: u32) -> String {
    const LETTERS: [char; 6] = ['u', 'v', 'w', 'x', 'y', 'z'];
    if (index as usize) < LETTERS.len() {
        String::from(LETTERS[index as usize])
    } else {
        format!("g{}", index + 1)
    }
}

/// Bracket word with space-separated factors: `((u v) (u (u v)))`.
pub fn render_hall_word(w: &HallWord, n: u32) -> String {
    match w.factors() {
        None => leaf_name(w.leaf_index().unwrap_or(0), n),
        Some((l, r)) => format!("({} {})", render_hall_word(l, n), render_hall_word(r, n)),
    }
}
