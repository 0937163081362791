//! Bracketed integer lists: `[4,3,6,5]`, with an optional single space after commas.

use std::fmt;

use crate::error::{Error, Result};

pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected bracketed list, got {s:?}")))?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            let t = tok.strip_prefix(' ').unwrap_or(tok);
            t.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer {tok:?}")))
        })
        .collect()
}

pub fn fmt_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    write!(f, "[")?;
    for (i, v) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    write!(f, "]")
}
