//! ```text
//! field 3
//! dim x 1
//! dim y 2
//! map a = 1 ; 2
//! ```
//! Matrices are row-major, rows separated by `;`, entries reduced mod p.
//! Missing dimensions are 0 and missing maps are zero; an empty right-hand
//! side is the zero matrix of the right shape.

use std::collections::BTreeMap;

use qnoeth_core::matrix::Matrix;
use qnoeth_core::rep::Representation;
use qnoeth_core::{PrimeField, Quiver, Vertex};

use super::lines;
use crate::error::FormatError;

pub fn parse_representation(q: &Quiver, text: &str) -> Result<Representation, FormatError> {
    let mut field = None;
    let mut dims = vec![0usize; q.vertex_count()];
    let mut maps: BTreeMap<usize, (usize, Vec<Vec<i64>>)> = BTreeMap::new();
    let mut last = 0;
    for (n, line) in lines(text) {
        last = n;
        let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let words: Vec<&str> = rest.split_whitespace().collect();
        match kw {
            "field" => {
                let [p] = words.as_slice() else {
                    return Err(FormatError::new(n, "expected `field <p>`"));
                };
                let p: u32 = p.parse().map_err(|_| FormatError::new(n, "field size is not a number"))?;
                field = Some(PrimeField::new(p).map_err(|e| FormatError::new(n, e.to_string()))?);
            }
            "dim" => {
                let [v, d] = words.as_slice() else {
                    return Err(FormatError::new(n, "expected `dim <vertex> <n>`"));
                };
                let v = match q.vertex(v).map_err(|e| FormatError::new(n, e.to_string()))? {
                    Vertex::Core(i) => i,
                    _ => return Err(FormatError::new(n, "ray vertices carry no dimension")),
                };
                dims[v] = d.parse().map_err(|_| FormatError::new(n, "dimension is not a number"))?;
            }
            "map" => {
                let (a, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| FormatError::new(n, "expected `map <arrow> = <rows>`"))?;
                let a = match q.arrow(a.trim()).map_err(|e| FormatError::new(n, e.to_string()))? {
                    qnoeth_core::Arrow::Core(i) => i,
                    _ => return Err(FormatError::new(n, "ray arrows carry no map")),
                };
                let rhs = rhs.trim();
                let rows = if rhs.is_empty() {
                    Vec::new()
                } else {
                    rhs.split(';')
                        .map(|r| {
                            r.split_whitespace()
                                .map(|e| e.parse::<i64>().map_err(|_| FormatError::new(n, format!("bad entry `{e}`"))))
                                .collect::<Result<Vec<_>, _>>()
                        })
                        .collect::<Result<Vec<_>, _>>()?
                };
                if maps.insert(a, (n, rows)).is_some() {
                    return Err(FormatError::new(n, "map declared twice"));
                }
            }
            other => return Err(FormatError::new(n, format!("unknown directive `{other}`"))),
        }
    }
    let field = field.ok_or_else(|| FormatError::new(last + 1, "missing `field` line"))?;
    let mut mats = Vec::with_capacity(q.arrow_count());
    for (i, a) in q.arrow_decls().iter().enumerate() {
        let (r, c) = (dims[a.target], dims[a.source]);
        let m = match maps.get(&i) {
            None => Matrix::zeros(field, r, c),
            Some((_, rows)) if rows.is_empty() => Matrix::zeros(field, r, c),
            Some((n, rows)) => {
                let shape_ok = rows.len() == r && rows.iter().all(|row| row.len() == c);
                if !shape_ok {
                    return Err(FormatError::new(*n, format!("map {} must be {r}×{c}", a.name)));
                }
                let flat: Vec<i64> = rows.concat();
                Matrix::from_rows(field, r, c, &flat).map_err(|e| FormatError::new(*n, e.to_string()))?
            }
        };
        mats.push(m);
    }
    Representation::new(q.clone(), field, dims, mats).map_err(|e| FormatError::new(last + 1, e.to_string()))
}

pub fn serialize_representation(m: &Representation) -> String {
    let q = m.quiver();
    let mut out = format!("field {}\n", m.field().p());
    for (name, d) in q.vertex_names().iter().zip(m.dims()) {
        out.push_str(&format!("dim {name} {d}\n"));
    }
    for (a, mat) in q.arrow_decls().iter().zip(m.maps()) {
        let rows: Vec<String> = (0..mat.rows())
            .map(|r| mat.row(r).iter().map(u8::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        if mat.rows() == 0 || mat.cols() == 0 {
            out.push_str(&format!("map {} =\n", a.name));
        } else {
            out.push_str(&format!("map {} = {}\n", a.name, rows.join(" ; ")));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kronecker() -> Quiver {
        Quiver::from_parts(&["x", "y"], &[("a", "x", "y"), ("b", "x", "y")], &[]).unwrap()
    }

    #[test]
    fn round_trip() {
        let q = kronecker();
        let m = parse_representation(&q, "field 3\ndim x 1\ndim y 2\nmap a = 1 ; -1\n").unwrap();
        assert_eq!(m.maps()[0].entries(), &[1, 2]);
        assert!(m.maps()[1].is_zero());
        let text = serialize_representation(&m);
        assert_eq!(text, "field 3\ndim x 1\ndim y 2\nmap a = 1 ; 2\nmap b = 0 ; 0\n");
        assert_eq!(parse_representation(&q, &text).unwrap(), m);
    }

    #[test]
    fn shape_errors() {
        let q = kronecker();
        assert_eq!(parse_representation(&q, "field 2\ndim y 2\nmap a = 1 1\n").unwrap_err().line, 3);
        assert_eq!(parse_representation(&q, "dim y 2\n").unwrap_err().line, 2);
        assert_eq!(parse_representation(&q, "field 4\n").unwrap_err().line, 1);
        let z = parse_representation(&q, "field 2\ndim y 2\nmap a =\n").unwrap();
        assert_eq!(serialize_representation(&z), "field 2\ndim x 0\ndim y 2\nmap a =\nmap b =\n");
    }
}
