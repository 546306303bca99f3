//! JSON encoding of graded series and the exact inverse parse.
//!
//! A series becomes `{"field": "Q", "order": 4, "terms": [...]}` with one
//! `{"monomial": {"c_1": 2}, "coeff": "-3/2"}` object per term, terms in
//! display order and coefficients as exact decimal strings. Generator keys
//! are the text symbols (`c_1`, `w_2`, `w_1(V)`, `w_3(M)`), so a JSON
//! monomial reads the same as its rendered form.

use liegiambelli_core::render::{generator_symbol, sorted_terms, RenderStyle};
use liegiambelli_core::ring::{Family, Field, GradedSeries, Generator, Monomial};
use num_rational::BigRational;
use serde_json::{json, Map, Value};

pub fn field_name(f: Field) -> &'static str {
    match f {
        Field::Q => "Q",
        Field::F2 => "F2",
    }
}

fn field_from_name(s: &str) -> Result<Field, String> {
    match s {
        "Q" => Ok(Field::Q),
        "F2" => Ok(Field::F2),
        other => Err(format!("unknown field tag {other:?}")),
    }
}

pub fn coeff_string(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn series_to_json(s: &GradedSeries) -> Value {
    let terms: Vec<Value> = sorted_terms(s)
        .into_iter()
        .map(|(m, c)| {
            let mut mono = Map::new();
            for &(g, e) in m.powers() {
                mono.insert(
                    generator_symbol(g, RenderStyle::Text),
                    Value::from(u64::from(e)),
                );
            }
            json!({ "monomial": Value::Object(mono), "coeff": coeff_string(c) })
        })
        .collect();
    json!({
        "field": field_name(s.field()),
        "order": s.order(),
        "terms": terms,
    })
}

/// Inverse of [`generator_symbol`]: `c_1`, `w_{12}`, `w_2(V)`, `w_2(M)`, or
/// any other single-letter family.
pub fn parse_generator(sym: &str) -> Result<Generator, String> {
    let bad = || format!("malformed generator symbol {sym:?}");
    let (stem, family_override) = if let Some(s) = sym.strip_suffix("(V)") {
        (s, Some(Family::V))
    } else if let Some(s) = sym.strip_suffix("(M)") {
        (s, Some(Family::T))
    } else {
        (sym, None)
    };
    let (head, tail) = stem.split_once('_').ok_or_else(bad)?;
    let mut chars = head.chars();
    let letter = chars.next().ok_or_else(bad)?;
    if chars.next().is_some() || !letter.is_ascii_lowercase() {
        return Err(bad());
    }
    let family = match family_override {
        Some(f) => {
            if letter != 'w' {
                return Err(bad());
            }
            f
        }
        None => Family(letter as u8),
    };
    let digits = tail
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .unwrap_or(tail);
    let index: u32 = digits.parse().map_err(|_| bad())?;
    if index == 0 {
        return Err(bad());
    }
    Ok(Generator::new(family, index))
}

pub fn series_from_json(v: &Value) -> Result<GradedSeries, String> {
    let obj = v.as_object().ok_or("series must be a JSON object")?;
    let field = field_from_name(
        obj.get("field")
            .and_then(Value::as_str)
            .ok_or("missing field tag")?,
    )?;
    let order = obj
        .get("order")
        .and_then(Value::as_u64)
        .ok_or("missing order")? as u32;
    let terms = obj
        .get("terms")
        .and_then(Value::as_array)
        .ok_or("missing terms array")?;
    let mut parsed: Vec<(Monomial, BigRational)> = Vec::with_capacity(terms.len());
    for t in terms {
        let t = t.as_object().ok_or("term must be an object")?;
        let mono = t
            .get("monomial")
            .and_then(Value::as_object)
            .ok_or("term missing monomial")?;
        let mut powers: Vec<(Generator, u32)> = Vec::with_capacity(mono.len());
        for (sym, e) in mono {
            let exp = e.as_u64().ok_or("exponent must be an integer")? as u32;
            powers.push((parse_generator(sym)?, exp));
        }
        let coeff: BigRational = t
            .get("coeff")
            .and_then(Value::as_str)
            .ok_or("term missing coeff string")?
            .parse()
            .map_err(|_| "malformed coefficient".to_string())?;
        parsed.push((Monomial::from_powers(&powers), coeff));
    }
    Ok(GradedSeries::from_terms(field, order, parsed))
}
