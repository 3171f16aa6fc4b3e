use std::fmt;

use super::{DualScalar, Series, SeriesA, SeriesB};
use crate::error::{Error, Result};
use crate::scalar::{parse_scalar, Scalar};

enum Node {
    Atom(String),
    List(Vec<Node>),
}

fn parse_node(s: &[u8], i: &mut usize) -> Result<Node> {
    if s.get(*i) == Some(&b'[') {
        *i += 1;
        let mut items = Vec::new();
        if s.get(*i) == Some(&b']') {
            *i += 1;
            return Ok(Node::List(items));
        }
        loop {
            items.push(parse_node(s, i)?);
            match s.get(*i) {
                Some(b',') => *i += 1,
                Some(b']') => {
                    *i += 1;
                    return Ok(Node::List(items));
                }
                _ => return Err(Error::Parse("expected `,` or `]` in series literal".into())),
            }
        }
    }
    let start = *i;
    while *i < s.len() && !matches!(s[*i], b',' | b']' | b'[') {
        *i += 1;
    }
    if start == *i {
        return Err(Error::Parse("empty entry in series literal".into()));
    }
    Ok(Node::Atom(String::from_utf8_lossy(&s[start..*i]).into_owned()))
}

fn parse_top(text: &str) -> Result<Vec<Node>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut i = 0;
    let node = parse_node(s.as_bytes(), &mut i)?;
    if i != s.len() {
        return Err(Error::Parse(format!("trailing input in `{text}`")));
    }
    match node {
        Node::List(items) => Ok(items),
        Node::Atom(_) => Err(Error::Parse(format!("`{text}` is not a list"))),
    }
}

fn atom(node: &Node) -> Result<Scalar> {
    match node {
        Node::Atom(a) => parse_scalar(a),
        Node::List(_) => Err(Error::Parse("expected a number, found a list".into())),
    }
}

/// Reads `[1, 2, 5/3]`. Entries may be quoted.
pub fn parse_series_a(text: &str) -> Result<SeriesA> {
    let coeffs = parse_top(text)?.iter().map(atom).collect::<Result<Vec<_>>>()?;
    Series::new(coeffs)
}

/// Reads `[[1,0],[2,3]]`.
pub fn parse_series_b(text: &str) -> Result<SeriesB> {
    let coeffs = parse_top(text)?
        .iter()
        .map(|n| match n {
            Node::List(pair) if pair.len() == 2 => Ok(DualScalar::new(atom(&pair[0])?, atom(&pair[1])?)),
            _ => Err(Error::Parse("type-B coefficients are pairs `[a,b]`".into())),
        })
        .collect::<Result<Vec<_>>>()?;
    Series::new(coeffs)
}

impl fmt::Display for SeriesA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs().iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Display for SeriesB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs().iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
