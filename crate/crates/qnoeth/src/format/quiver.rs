//! `vertex <id>`, `arrow <id> : <src> -> <dst>`, `ray <id> at <vertex>`.
//! Every referenced vertex must be declared on an earlier line.

use qnoeth_core::{Quiver, QuiverBuilder};

use super::{lines, single, split2};
use crate::error::FormatError;

pub fn parse_quiver(text: &str) -> Result<Quiver, FormatError> {
    let mut b = QuiverBuilder::new();
    for (n, line) in lines(text) {
        let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let res = match kw {
            "vertex" => b.vertex(single(n, rest, "vertex id")?).map(|_| ()),
            "arrow" => {
                let (id, ends) = split2(n, rest, ":", "arrow")?;
                let (src, dst) = split2(n, ends, "->", "arrow")?;
                b.arrow(single(n, id, "arrow id")?, single(n, src, "vertex")?, single(n, dst, "vertex")?)
                    .map(|_| ())
            }
            "ray" => {
                let mut it = rest.split_whitespace();
                match (it.next(), it.next(), it.next(), it.next()) {
                    (Some(id), Some("at"), Some(v), None) => b.ray(id, v).map(|_| ()),
                    _ => return Err(FormatError::new(n, "expected `ray <id> at <vertex>`")),
                }
            }
            other => return Err(FormatError::new(n, format!("unknown directive `{other}`"))),
        };
        res.map_err(|e| FormatError::new(n, e.to_string()))?;
    }
    Ok(b.build())
}

/// Vertices, then arrows, then rays, each sorted by id.
pub fn serialize_quiver(q: &Quiver) -> String {
    let mut out = String::new();
    for v in q.vertex_names() {
        out.push_str(&format!("vertex {v}\n"));
    }
    let names = q.vertex_names();
    for a in q.arrow_decls() {
        out.push_str(&format!("arrow {} : {} -> {}\n", a.name, names[a.source], names[a.target]));
    }
    for r in q.ray_decls() {
        out.push_str(&format!("ray {} at {}\n", r.name, names[r.at]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let q = parse_quiver("# Kronecker\nvertex x\nvertex y\n\narrow a : x -> y  # first\narrow b: x->y\n").unwrap();
        assert_eq!(q.vertex_count(), 2);
        assert_eq!(q.arrow_count(), 2);
        assert_eq!(serialize_quiver(&q), "vertex x\nvertex y\narrow a : x -> y\narrow b : x -> y\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_quiver("vertex x\narrow a : x -> y\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("unknown vertex y"));
        assert_eq!(parse_quiver("vertex x\nvertex x").unwrap_err().line, 2);
        assert_eq!(parse_quiver("vertex x\n\nray r x").unwrap_err().line, 3);
        assert_eq!(parse_quiver("edge a").unwrap_err().line, 1);
        assert_eq!(parse_quiver("vertex r.0").unwrap_err().line, 1);
    }

    #[test]
    fn rays_round_trip() {
        let q = parse_quiver("vertex y\nvertex x\narrow a : x -> y\nray r at y\n").unwrap();
        let text = serialize_quiver(&q);
        assert_eq!(text, "vertex x\nvertex y\narrow a : x -> y\nray r at y\n");
        assert_eq!(parse_quiver(&text).unwrap(), q);
    }
}
