//! Line-based text formats. Blank lines and `#` comments are ignored
//! everywhere.

mod category;
mod quiver;
mod rep;
mod sequence;

pub use category::parse_category;
pub use quiver::{parse_quiver, serialize_quiver};
pub use rep::{parse_representation, serialize_representation};
pub use sequence::{parse_path, parse_sequence};

use crate::error::FormatError;

/// Non-empty lines with comments stripped, numbered from 1.
pub(crate) fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// Splits `a <sep> b`, both sides trimmed and non-empty.
pub(crate) fn split2<'a>(line: usize, s: &'a str, sep: &str, what: &str) -> Result<(&'a str, &'a str), FormatError> {
    let (a, b) = s
        .split_once(sep)
        .ok_or_else(|| FormatError::new(line, format!("expected `{sep}` in {what}")))?;
    let (a, b) = (a.trim(), b.trim());
    if a.is_empty() || b.is_empty() {
        return Err(FormatError::new(line, format!("malformed {what}")));
    }
    Ok((a, b))
}

pub(crate) fn single<'a>(line: usize, s: &'a str, what: &str) -> Result<&'a str, FormatError> {
    let mut it = s.split_whitespace();
    match (it.next(), it.next()) {
        (Some(id), None) => Ok(id),
        _ => Err(FormatError::new(line, format!("expected a single {what}"))),
    }
}
