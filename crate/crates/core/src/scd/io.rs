//! Text format for chain decompositions.
//!
//! ```text
//! scd L'(m,3) chains=K
//! <key> <key> ...      K lines, one chain each, top element first
//! ```

use std::fmt::Write as _;

use super::{Chain, ChainDecomposition};
use crate::error::{Error, Result};
use crate::partition::WeakComposition;

pub fn write_decomposition(d: &ChainDecomposition) -> String {
    let mut out = String::new();
    writeln!(out, "scd {} chains={}", d.label(), d.chains().len()).unwrap();
    for c in d.chains() {
        let keys: Vec<String> = c.elements().iter().map(ToString::to_string).collect();
        writeln!(out, "{}", keys.join(" ")).unwrap();
    }
    out
}

pub fn parse_decomposition(text: &str) -> Result<ChainDecomposition> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty decomposition file"))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("scd") {
        return Err(Error::parse(1, "header must start with `scd`"));
    }
    let label = tokens
        .next()
        .ok_or_else(|| Error::parse(1, "missing decomposition label"))?;
    let count: usize = tokens
        .next()
        .and_then(|t| t.strip_prefix("chains="))
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(1, "expected chains=<integer>"))?;
    if tokens.next().is_some() {
        return Err(Error::parse(1, "trailing tokens in header"));
    }
    let mut chains = Vec::with_capacity(count);
    let mut last = 1;
    for (line, text) in lines {
        last = line;
        if text.trim().is_empty() {
            if chains.len() < count {
                return Err(Error::parse(line, "empty chain"));
            }
            continue;
        }
        if chains.len() == count {
            return Err(Error::parse(
                line,
                format!("more than the declared {count} chains"),
            ));
        }
        let elements = text
            .split_whitespace()
            .map(|k| {
                k.parse::<WeakComposition>()
                    .map_err(|e| Error::parse(line, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        chains.push(Chain::new(elements));
    }
    if chains.len() != count {
        return Err(Error::parse(
            last,
            format!("header declares {count} chains, found {}", chains.len()),
        ));
    }
    Ok(ChainDecomposition::new(label, chains))
}
