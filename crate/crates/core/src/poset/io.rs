//! Text format for posets.
//!
//! ```text
//! poset L(m,n) height=H count=C
//! <index> <rank> <key>        C lines, rank-major then by key
//! <lower> <upper> <color>     one line per cover, sorted by (lower, upper)
//! ```

use std::fmt::Write as _;

use super::GradedPoset;
use crate::error::{Error, Result};
use crate::partition::{Shape, WeakComposition};

pub fn write_poset(p: &GradedPoset) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "poset {} height={} count={}",
        p.label(),
        p.height(),
        p.len()
    )
    .unwrap();
    for (i, (key, rank)) in p.elements().iter().zip(p.ranks()).enumerate() {
        writeln!(out, "{i} {rank} {key}").unwrap();
    }
    for c in p.covers() {
        writeln!(out, "{} {} {}", c.lower, c.upper, c.color).unwrap();
    }
    out
}

pub(crate) fn parse_shape_label(label: &str) -> Option<Shape> {
    let inner = label
        .strip_prefix("L'(")
        .or_else(|| label.strip_prefix("L("))?
        .strip_suffix(')')?;
    let (m, n) = inner.split_once(',')?;
    Some(Shape::new(m.trim().parse().ok()?, n.trim().parse().ok()?))
}

fn field(token: Option<&str>, name: &str, line: usize) -> Result<usize> {
    token
        .and_then(|t| t.strip_prefix(name))
        .and_then(|t| t.strip_prefix('='))
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(line, format!("expected {name}=<integer>")))
}

fn number(token: Option<&str>, what: &str, line: usize) -> Result<usize> {
    token
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(line, format!("expected {what}")))
}

pub fn parse_poset(text: &str) -> Result<GradedPoset> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty poset file"))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("poset") {
        return Err(Error::parse(1, "header must start with `poset`"));
    }
    let label = tokens
        .next()
        .ok_or_else(|| Error::parse(1, "missing poset label"))?
        .to_string();
    let height = field(tokens.next(), "height", 1)?;
    let count = field(tokens.next(), "count", 1)?;
    if tokens.next().is_some() {
        return Err(Error::parse(1, "trailing tokens in header"));
    }

    let mut elements = Vec::with_capacity(count);
    let mut covers = Vec::new();
    for (line, text) in lines {
        if text.trim().is_empty() {
            continue;
        }
        let mut t = text.split_whitespace();
        let (a, b, c) = (t.next(), t.next(), t.next());
        if t.next().is_some() {
            return Err(Error::parse(line, "expected three fields"));
        }
        if elements.len() < count {
            let index = number(a, "element index", line)?;
            if index != elements.len() {
                return Err(Error::parse(
                    line,
                    format!("expected element index {}", elements.len()),
                ));
            }
            let rank = number(b, "rank", line)?;
            let key: WeakComposition = c
                .ok_or_else(|| Error::parse(line, "missing element key"))?
                .parse()
                .map_err(|e: Error| Error::parse(line, e.to_string()))?;
            elements.push((key, rank));
        } else {
            let lower = number(a, "lower index", line)?;
            let upper = number(b, "upper index", line)?;
            let color = number(c, "color", line)?;
            let key = |i: usize| {
                elements
                    .get(i)
                    .map(|e: &(WeakComposition, usize)| e.0.clone())
                    .ok_or_else(|| {
                        Error::parse(line, format!("cover refers to missing element {i}"))
                    })
            };
            covers.push((key(lower)?, key(upper)?, color));
        }
    }
    if elements.len() != count {
        return Err(Error::parse(
            text.lines().count(),
            format!("header declares {count} elements, found {}", elements.len()),
        ));
    }
    let shape = parse_shape_label(&label);
    let poset = GradedPoset::from_parts(label, shape, elements, covers)?;
    if poset.height() != height {
        return Err(Error::parse(
            1,
            format!("header height {height}, elements reach {}", poset.height()),
        ));
    }
    Ok(poset)
}
