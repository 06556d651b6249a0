//! Paths are written `x: a.b.c` (arrows in application order) or `x: -`.
//! A sequence file lists `preamble <path>` and `period <path>` lines.

use qnoeth_core::poset::PeriodicPathSequence;
use qnoeth_core::{Path, Quiver};

use super::lines;
use crate::error::FormatError;

pub fn parse_path(q: &Quiver, line: usize, s: &str) -> Result<Path, FormatError> {
    let (start, arrows) = s
        .split_once(':')
        .ok_or_else(|| FormatError::new(line, "expected `<vertex>: <arrows>`"))?;
    let arrows = arrows.trim();
    let names: Vec<&str> = if arrows.is_empty() || arrows == "-" {
        Vec::new()
    } else {
        arrows.split('.').map(str::trim).collect()
    };
    q.path_by_names(start.trim(), &names)
        .map_err(|e| FormatError::new(line, e.to_string()))
}

pub fn parse_sequence(q: &Quiver, text: &str) -> Result<PeriodicPathSequence, FormatError> {
    let mut preamble = Vec::new();
    let mut period = Vec::new();
    let mut last = 0;
    for (n, line) in lines(text) {
        last = n;
        let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match kw {
            "preamble" => preamble.push(parse_path(q, n, rest)?),
            "period" => period.push(parse_path(q, n, rest)?),
            other => return Err(FormatError::new(n, format!("unknown directive `{other}`"))),
        }
    }
    PeriodicPathSequence::new(preamble, period).map_err(|e| FormatError::new(last + 1, e.to_string()))
}
