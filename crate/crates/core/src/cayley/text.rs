use std::fmt;

use super::{Permutation, SignedPermutation};
use crate::error::{Error, Result};

pub(super) fn write_cycles(f: &mut fmt::Formatter<'_>, cycles: &[Vec<i64>]) -> fmt::Result {
    if cycles.is_empty() {
        return f.write_str("()");
    }
    for c in cycles {
        f.write_str("(")?;
        for (i, x) in c.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")?;
    }
    Ok(())
}

/// Parses cycle notation such as `(1,3,4)(2,6)`. `()` and the empty string denote the identity.
pub fn parse_cycles(text: &str) -> Result<Vec<Vec<i32>>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = s.as_str();
    let mut cycles = Vec::new();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("expected `(` in `{text}`")))?;
        let close = body.find(')').ok_or_else(|| Error::Parse(format!("unbalanced parentheses in `{text}`")))?;
        if close > 0 {
            let cyc = body[..close]
                .split(',')
                .map(|t| t.parse::<i32>().map_err(|_| Error::Parse(format!("`{t}` is not an integer"))))
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cyc);
        }
        rest = &body[close + 1..];
    }
    Ok(cycles)
}

/// Reads an element of `S_n` in cycle notation.
pub fn parse_permutation(text: &str, n: usize) -> Result<Permutation> {
    let cycles = parse_cycles(text)?;
    let cycles = cycles
        .into_iter()
        .map(|c| {
            c.into_iter()
                .map(|x| usize::try_from(x).map_err(|_| Error::Parse(format!("{x} is not in [{n}]"))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::from_cycles(n, &cycles)
}

/// Reads an element of `W_n` in signed cycle notation, e.g. `(1,2,-1,-2)`.
///
/// A cycle whose negative is not listed is completed with it, so `(1,2)` means `(1,2)(-1,-2)`.
pub fn parse_signed_permutation(text: &str, n: usize) -> Result<SignedPermutation> {
    let mut cycles = parse_cycles(text)?;
    let mut extra = Vec::new();
    for c in &cycles {
        let neg: Vec<i32> = c.iter().map(|x| -x).collect();
        let listed = |set: &Vec<Vec<i32>>| set.iter().any(|d| same_cycle(d, &neg));
        if !same_cycle(c, &neg) && !listed(&cycles) && !listed(&extra) {
            extra.push(neg);
        }
    }
    cycles.extend(extra);
    SignedPermutation::from_cycles(n, &cycles)
}

fn same_cycle(a: &[i32], b: &[i32]) -> bool {
    if a.len() != b.len() || a.is_empty() {
        return false;
    }
    match b.iter().position(|&x| x == a[0]) {
        Some(s) => (0..a.len()).all(|i| a[i] == b[(s + i) % b.len()]),
        None => false,
    }
}
