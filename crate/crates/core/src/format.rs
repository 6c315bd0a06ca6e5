//! Plain-text family format.
//!
//! ```text
//! # comment
//! t: 4
//! closure: down
//! {1,2}
//! {3}
//! 2 4
//! {}
//! ```
//!
//! A `t: <int>` header must precede the sets. `closure: down` marks the
//! listed sets as facets to be closed downward. Each remaining line is one
//! or more braced sets, or a single bare list of elements separated by
//! spaces or commas. Several families may share a file, separated by lines
//! consisting of `---`.

use std::fmt::Write as _;

use crate::complexes::{down_closure, Complex};
use crate::error::{Error, Result};
use crate::sets::{GroundSet, SetFamily, SubsetMask};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Closure {
    #[default]
    None,
    Down,
}

/// A family as read from text, before any closure is applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedFamily {
    pub family: SetFamily,
    pub closure: Closure,
}

impl ParsedFamily {
    /// The family itself, or its down-closure under `closure: down`.
    pub fn resolved(&self) -> Result<SetFamily> {
        match self.closure {
            Closure::None => Ok(self.family.clone()),
            Closure::Down => Ok(down_closure(&self.family)?.faces().clone()),
        }
    }

    /// Interprets the input as a complex: closed downward under
    /// `closure: down`, otherwise validated as already closed.
    pub fn complex(&self) -> Result<Complex> {
        match self.closure {
            Closure::None => Complex::new(self.family.clone()),
            Closure::Down => down_closure(&self.family),
        }
    }
}

fn parse_err(line: usize, token: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        token: token.to_string(),
        message: message.into(),
    }
}

fn parse_elements(ground: GroundSet, body: &str, line: usize) -> Result<SubsetMask> {
    let mut elements = Vec::new();
    for tok in body
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
    {
        let e: u32 = tok
            .parse()
            .map_err(|_| parse_err(line, tok, "expected a positive integer"))?;
        if e == 0 || e > ground.t() {
            return Err(parse_err(line, tok, format!("element outside 1..={}", ground.t())));
        }
        elements.push(e);
    }
    ground.subset(elements)
}

fn parse_set_line(ground: GroundSet, text: &str, line: usize, out: &mut Vec<u64>) -> Result<()> {
    if !text.starts_with('{') {
        if text.contains(['{', '}']) {
            return Err(parse_err(line, text, "mixed braced and bare sets"));
        }
        out.push(parse_elements(ground, text, line)?.bits());
        return Ok(());
    }
    let mut rest = text;
    while !rest.is_empty() {
        let Some(inner) = rest.strip_prefix('{') else {
            return Err(parse_err(line, rest, "expected `{`"));
        };
        let Some(close) = inner.find('}') else {
            return Err(parse_err(line, rest, "unclosed `{`"));
        };
        let body = &inner[..close];
        if body.contains('{') {
            return Err(parse_err(line, rest, "nested `{`"));
        }
        out.push(parse_elements(ground, body, line)?.bits());
        rest = inner[close + 1..].trim_start_matches(|c: char| c == ',' || c.is_whitespace());
    }
    Ok(())
}

fn parse_block(lines: &[(usize, &str)]) -> Result<ParsedFamily> {
    let mut ground: Option<GroundSet> = None;
    let mut closure = Closure::None;
    let mut masks = Vec::new();
    for &(line, raw) in lines {
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        if let Some((key, value)) = text.split_once(':') {
            let value = value.trim();
            match key.trim() {
                "t" => {
                    if ground.is_some() {
                        return Err(parse_err(line, text, "duplicate `t:` header"));
                    }
                    let t: u32 = value
                        .parse()
                        .map_err(|_| parse_err(line, value, "expected an integer"))?;
                    ground = Some(GroundSet::new(t).map_err(|e| parse_err(line, value, e.to_string()))?);
                }
                "closure" => match value {
                    "down" => closure = Closure::Down,
                    "none" => closure = Closure::None,
                    _ => return Err(parse_err(line, value, "expected `down` or `none`")),
                },
                other => return Err(parse_err(line, other, "unknown header")),
            }
            continue;
        }
        let Some(g) = ground else {
            return Err(parse_err(line, text, "set before `t:` header"));
        };
        parse_set_line(g, text, line, &mut masks)?;
    }
    let last = lines.last().map_or(1, |&(l, _)| l);
    let ground = ground.ok_or_else(|| parse_err(last, "", "missing `t:` header"))?;
    Ok(ParsedFamily {
        family: SetFamily::new(ground, masks)?,
        closure,
    })
}

/// Parses a file holding exactly one family.
pub fn parse_family(text: &str) -> Result<ParsedFamily> {
    let mut all = parse_families(text)?;
    match all.len() {
        1 => Ok(all.pop().expect("one family")),
        n => Err(parse_err(1, "---", format!("expected one family, found {n}"))),
    }
}

/// Parses `---`-separated families. Blocks with no content are skipped.
pub fn parse_families(text: &str) -> Result<Vec<ParsedFamily>> {
    let mut blocks: Vec<Vec<(usize, &str)>> = vec![Vec::new()];
    for (i, line) in text.lines().enumerate() {
        if line.trim() == "---" {
            blocks.push(Vec::new());
        } else {
            blocks.last_mut().expect("nonempty").push((i + 1, line));
        }
    }
    blocks
        .iter()
        .filter(|b| {
            b.iter()
                .any(|(_, l)| !l.trim().is_empty() && !l.trim().starts_with('#'))
        })
        .map(|b| parse_block(b))
        .collect()
}

/// Members in canonical order: by size, then lexicographically by elements.
pub fn canonical_order(f: &SetFamily) -> Vec<SubsetMask> {
    let mut sets: Vec<SubsetMask> = f.iter().collect();
    sets.sort_by_cached_key(|s| (s.len(), s.elements().collect::<Vec<_>>()));
    sets
}

/// Canonical text for one family; `parse_family` reads it back unchanged.
pub fn write_family(f: &SetFamily) -> String {
    let mut out = format!("t: {}\n", f.t());
    for s in canonical_order(f) {
        writeln!(out, "{s}").expect("write to string");
    }
    out
}

/// Canonical text for several families, separated by `---`.
pub fn write_families<'a, I: IntoIterator<Item = &'a SetFamily>>(families: I) -> String {
    families.into_iter().map(write_family).collect::<Vec<_>>().join("---\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(t: u32, sets: &[&[u32]]) -> SetFamily {
        let g = GroundSet::new(t).unwrap();
        SetFamily::from_subsets(g, sets.iter().map(|s| g.subset(s.iter().copied()).unwrap())).unwrap()
    }

    #[test]
    fn parses_mixed_syntax() {
        let text = "# example\nt: 4\n{1,2}\n\n3 4\n{} {2, 3}\n";
        let p = parse_family(text).unwrap();
        assert_eq!(p.closure, Closure::None);
        assert_eq!(p.family, fam(4, &[&[1, 2], &[3, 4], &[], &[2, 3]]));
    }

    #[test]
    fn closure_header() {
        let p = parse_family("t: 3\nclosure: down\n{1,2}\n{3}\n").unwrap();
        assert_eq!(p.closure, Closure::Down);
        assert_eq!(p.resolved().unwrap(), fam(3, &[&[], &[1], &[2], &[3], &[1, 2]]));
        assert_eq!(p.complex().unwrap().len(), 5);
    }

    #[test]
    fn errors_carry_line_and_token() {
        match parse_family("t: 3\n{1,2}\n{1,5}\n") {
            Err(Error::Parse { line, token, .. }) => assert_eq!((line, token.as_str()), (3, "5")),
            other => panic!("{other:?}"),
        }
        match parse_family("t: 3\n{1,x}\n") {
            Err(Error::Parse { line, token, .. }) => assert_eq!((line, token.as_str()), (2, "x")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_family("{1}\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_family("t: 3\n{1,2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_family("t: 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_family("t: 3\n0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_family("# nothing\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_family("t: 3\nfoo: 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn canonical_roundtrip() {
        let f = fam(5, &[&[2, 3], &[1, 5], &[4], &[], &[1, 2, 3]]);
        let text = write_family(&f);
        assert_eq!(text, "t: 5\n{}\n{4}\n{1,5}\n{2,3}\n{1,2,3}\n");
        assert_eq!(parse_family(&text).unwrap().family, f);
    }

    #[test]
    fn multiple_families() {
        let a = fam(3, &[&[1]]);
        let b = fam(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let text = write_families([&a, &b]);
        let back = parse_families(&text).unwrap();
        assert_eq!(back.len(), 2);
        assert_eq!(back[0].family, a);
        assert_eq!(back[1].family, b);
        assert!(parse_family(&text).is_err());
        match parse_families("t: 2\n{1}\n---\nt: 2\n{3}\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("{other:?}"),
        }
    }
}
