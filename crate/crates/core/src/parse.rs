//! Text forms accepted on the command line.
//!
//! Vectors use run-length notation: `3^4,5^3` means four 3s followed by
//! three 5s, and a bare `3` means one 3. Parameter lists use pair
//! notation: `(3,4),(5,3)`. Whitespace is ignored in both.

use crate::lorenz::{LorenzVector, TLinkParams};
use crate::{Error, Result};

fn strip(spec: &str) -> String {
    spec.chars().filter(|c| !c.is_whitespace()).collect()
}

fn parse_u32(s: &str, what: &str) -> Result<u32> {
    s.parse::<u32>()
        .map_err(|_| Error::Parse(format!("expected {}, found {:?}", what, s)))
}

/// Parses run-length vector notation, e.g. `3^4,5^3` or `2,2,2`.
/// Surrounding angle brackets are tolerated.
pub fn parse_vector_spec(spec: &str) -> Result<LorenzVector> {
    let mut s = strip(spec);
    if s.starts_with('<') && s.ends_with('>') {
        s = s[1..s.len() - 1].to_string();
    }
    if s.is_empty() {
        return Err(Error::Parse("empty vector spec".into()));
    }
    let mut entries = Vec::new();
    for term in s.split(',') {
        let (value, count) = match term.split_once('^') {
            Some((v, c)) => (parse_u32(v, "an entry")?, parse_u32(c, "a repeat count")?),
            None => (parse_u32(term, "an entry")?, 1),
        };
        if count == 0 {
            return Err(Error::Parse(format!(
                "repeat count must be positive in {:?}",
                term
            )));
        }
        entries.extend(std::iter::repeat(value).take(count as usize));
    }
    LorenzVector::new(entries)
}

/// Parses pair notation, e.g. `(3,4),(5,3)`.
pub fn parse_tlink_spec(spec: &str) -> Result<TLinkParams> {
    let s = strip(spec);
    if s.is_empty() {
        return Err(Error::Parse("empty parameter spec".into()));
    }
    let mut pairs = Vec::new();
    let mut rest = s.as_str();
    loop {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(Error::Parse(format!("expected '(' at {:?}", rest)));
        };
        let Some((inner, after)) = body.split_once(')') else {
            return Err(Error::Parse(format!("unclosed '(' at {:?}", rest)));
        };
        let Some((p, q)) = inner.split_once(',') else {
            return Err(Error::Parse(format!(
                "expected two comma-separated numbers in ({})",
                inner
            )));
        };
        pairs.push((
            parse_u32(p, "a strand count")?,
            parse_u32(q, "a repeat count")?,
        ));
        match after.strip_prefix(',') {
            Some(more) => rest = more,
            None if after.is_empty() => break,
            None => {
                return Err(Error::Parse(format!(
                    "expected ',' between pairs at {:?}",
                    after
                )))
            }
        }
    }
    TLinkParams::new(pairs)
}
