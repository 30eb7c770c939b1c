//! Group spec strings: `S5`, `PGL(2,9)`, `A6xC2`, `AxCp(A5,2)`, `file:g.txt`.

use std::fmt;
use std::path::PathBuf;

use crate::error::{HgsError, Result};
use crate::perm::is_prime;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    /// A catalog label with its integer parameters, e.g. `("PGL", [2, 9])`.
    Named { label: String, params: Vec<usize> },
    /// `A × C_p`.
    AxCp(Box<GroupSpec>, usize),
    Product(Vec<GroupSpec>),
    File(PathBuf),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Named { label, params } => match label.as_str() {
                "SL" | "PSL" | "PGL" => write!(f, "{label}({},{})", params[0], params[1]),
                "Aut" => write!(f, "Aut(A6)"),
                _ =>write!(f, "{label}{}", params[0]),
            },
            GroupSpec::AxCp(a, p) => write!(f, "AxCp({a},{p})"),
            GroupSpec::Product(parts) => {
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    match part {
                        GroupSpec::Product(_) => write!(f, "({part})")?,
                        _ => write!(f, "{part}")?,
                    }
                }
                Ok(())
            }
            GroupSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

fn bad(s: &str, why: &str) -> HgsError {
    HgsError::Parse {
        line: 1,
        msg: format!("group spec `{s}`: {why}"),
    }
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let s = text.trim();
        if let Some(path) = s.strip_prefix("file:") {
            if path.is_empty() {
                return Err(bad(s, "empty path"));
            }
            return Ok(GroupSpec::File(PathBuf::from(path)));
        }
        let parts = split_product(s)?;
        if parts.len() == 1 {
            parse_factor(parts[0])
        } else {
            parts
                .into_iter()
                .map(parse_factor)
                .collect::<Result<Vec<_>>>()
                .map(GroupSpec::Product)
        }
    }
}

/// Splits on `x` at paren depth 0 when it sits between a factor end (digit
/// or `)`) and a factor start (uppercase letter or `(`).
fn split_product(s: &str) -> Result<Vec<&str>> {
    let b = s.as_bytes();
    let mut depth = 0i32;
    let mut parts = Vec::new();
    let mut start = 0;
    for i in 0..b.len() {
        match b[i] {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(bad(s, "unbalanced parentheses"));
                }
            }
            b'x' if depth == 0 && i > 0 && i + 1 < b.len() => {
                let before = b[i - 1];
                let after = b[i + 1];
                if (before.is_ascii_digit() || before == b')') && (after.is_ascii_uppercase() || after == b'(') {
                    parts.push(&s[start..i]);
                    start = i + 1;
                }
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(bad(s, "unbalanced parentheses"));
    }
    parts.push(&s[start..]);
    if parts.iter().any(|p| p.is_empty()) {
        return Err(bad(s, "empty factor"));
    }
    Ok(parts)
}

fn parse_factor(s: &str) -> Result<GroupSpec> {
    if let Some(inner) = s.strip_prefix("AxCp(").and_then(|r| r.strip_suffix(')')) {
        let comma = last_top_level_comma(inner).ok_or_else(|| bad(s, "expected `AxCp(<spec>,<p>)`"))?;
        let a = GroupSpec::parse(&inner[..comma])?;
        let p: usize = inner[comma + 1..]
            .trim()
            .parse()
            .map_err(|_| bad(s, "p must be an integer"))?;
        if !is_prime(p) {
            return Err(bad(s, "p must be prime"));
        }
        return Ok(GroupSpec::AxCp(Box::new(a), p));
    }
    if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        return GroupSpec::parse(inner);
    }
    let name_end = s.find(|c: char| !c.is_ascii_alphabetic()).unwrap_or(s.len());
    let (name, rest) = s.split_at(name_end);
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad(s, "expected a number"));
    match name {
        "C" | "D" | "S" | "A" => Ok(GroupSpec::Named {
            label: name.into(),
            params: vec![num(rest)?],
        }),
        "Q" | "V" | "M" => {
            let n = num(rest)?;
            let expected = match name {
                "Q" => 8,
                "V" => 4,
                _ => 10,
            };
            if n != expected {
                return Err(HgsError::UnknownLabel(s.into()));
            }
            Ok(GroupSpec::Named {
                label: name.into(),
                params: vec![n],
            })
        }
        "SL" | "PSL" | "PGL" => {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| bad(s, "expected `(2,q)`"))?;
            let nums = inner.split(',').map(num).collect::<Result<Vec<_>>>()?;
            if nums.len() != 2 || nums[0] != 2 {
                return Err(bad(s, "only 2x2 matrix groups are supported"));
            }
            Ok(GroupSpec::Named {
                label: name.into(),
                params: nums,
            })
        }
        "Aut" if rest == "(A6)" => Ok(GroupSpec::Named {
            label: "Aut".into(),
            params: vec![6],
        }),
        _ => Err(HgsError::UnknownLabel(s.into())),
    }
}

fn last_top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    let mut found = None;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => found = Some(i),
            _ => {}
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(label: &str, params: &[usize]) -> GroupSpec {
        GroupSpec::Named {
            label: label.into(),
            params: params.to_vec(),
        }
    }

    #[test]
    fn parses_simple_labels() {
        assert_eq!(GroupSpec::parse("S5").unwrap(), named("S", &[5]));
        assert_eq!(GroupSpec::parse(" PGL(2,9) ").unwrap(), named("PGL", &[2, 9]));
        assert_eq!(GroupSpec::parse("M10").unwrap(), named("M", &[10]));
        assert_eq!(GroupSpec::parse("Aut(A6)").unwrap(), named("Aut", &[6]));
    }

    #[test]
    fn parses_products_and_axcp() {
        assert_eq!(
            GroupSpec::parse("A6xC2").unwrap(),
            GroupSpec::Product(vec![named("A", &[6]), named("C", &[2])])
        );
        assert_eq!(
            GroupSpec::parse("AxCp(A5,2)").unwrap(),
            GroupSpec::AxCp(Box::new(named("A", &[5])), 2)
        );
        assert_eq!(
            GroupSpec::parse("C2xC2xC2").unwrap(),
            GroupSpec::Product(vec![named("C", &[2]); 3])
        );
        assert_eq!(
            GroupSpec::parse("SL(2,3)xC2").unwrap(),
            GroupSpec::Product(vec![named("SL", &[2, 3]), named("C", &[2])])
        );
    }

    #[test]
    fn display_round_trips() {
        for s in ["S5", "PGL(2,9)", "AxCp(A6,2)", "C4xC2", "Q8", "Aut(A6)", "AxCp(C3xC3,5)"] {
            let spec = GroupSpec::parse(s).unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(GroupSpec::parse(&spec.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(GroupSpec::parse("Foo3"), Err(HgsError::UnknownLabel(_))));
        assert!(GroupSpec::parse("AxCp(A5,4)").is_err());
        assert!(GroupSpec::parse("S(5").is_err());
        assert!(GroupSpec::parse("Q9").is_err());
        assert!(GroupSpec::parse("SL(3,2)").is_err());
    }
}
