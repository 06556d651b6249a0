//! `object <id>`, `morphism <id> : <src> -> <dst>`, `identity <id> at <obj>`,
//! `compose <g> <f> = <h>` (meaning `g∘f = h`), and
//! `order <x> <y> : m1 < m2 < ...`.

use qnoeth_core::groebner::category::{CategoryBuilder, FiniteCategory};

use super::{lines, single, split2};
use crate::error::FormatError;

pub fn parse_category(text: &str) -> Result<FiniteCategory, FormatError> {
    let mut b = CategoryBuilder::new();
    let mut last = 0;
    for (n, line) in lines(text) {
        last = n;
        let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let words: Vec<&str> = rest.split_whitespace().collect();
        let res = match kw {
            "object" => b.object(single(n, rest, "object id")?).map(|_| ()),
            "morphism" => {
                let (id, ends) = split2(n, rest, ":", "morphism")?;
                let (src, dst) = split2(n, ends, "->", "morphism")?;
                b.morphism(single(n, id, "morphism id")?, single(n, src, "object")?, single(n, dst, "object")?)
                    .map(|_| ())
            }
            "identity" => match words.as_slice() {
                [id, "at", obj] => b.identity(id, obj).map(|_| ()),
                _ => return Err(FormatError::new(n, "expected `identity <id> at <object>`")),
            },
            "compose" => match words.as_slice() {
                [g, f, "=", h] => b.compose(g, f, h).map(|_| ()),
                _ => return Err(FormatError::new(n, "expected `compose <g> <f> = <h>`")),
            },
            "order" => {
                let (objs, chain) = split2(n, rest, ":", "order")?;
                let objs: Vec<&str> = objs.split_whitespace().collect();
                let [x, y] = objs.as_slice() else {
                    return Err(FormatError::new(n, "expected `order <x> <y> : m1 < m2 ...`"));
                };
                let chain: Vec<&str> = chain.split('<').map(str::trim).collect();
                if chain.iter().any(|m| m.is_empty() || m.contains(char::is_whitespace)) {
                    return Err(FormatError::new(n, "malformed order chain"));
                }
                b.order(x, y, &chain).map(|_| ())
            }
            other => return Err(FormatError::new(n, format!("unknown directive `{other}`"))),
        };
        res.map_err(|e| FormatError::new(n, e.to_string()))?;
    }
    // Table-level failures (associativity, identities) belong to no line;
    // they are reported at the end of the file.
    b.build().map_err(|e| FormatError::new(last + 1, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_table() {
        let c = parse_category(
            "object x\nobject y\nidentity ex at x\nidentity ey at y\nmorphism a : x -> y\norder x y : a\n",
        )
        .unwrap();
        assert_eq!(c.morphisms().len(), 3);
        assert_eq!(c.compose(c.morphism("a").unwrap(), c.morphism("ex").unwrap()), c.morphism("a"));
    }

    #[test]
    fn reports_errors() {
        let e = parse_category("object o\nidentity 1 at o\nmorphism z : o -> o\n").unwrap_err();
        assert_eq!(e.line, 4);
        assert!(e.message.contains("missing"));
        assert_eq!(parse_category("object o\ncompose a b = c\n").unwrap_err().line, 2);
        assert_eq!(parse_category("object o\norder o o : \n").unwrap_err().line, 2);
    }
}
