//! Group files.
//!
//! ```text
//! perm 5
//! (0 1 2 3 4)
//! (2 3 4)
//! ```
//!
//! or a Cayley table with index 0 as the identity:
//!
//! ```text
//! table 2
//! 0 1
//! 1 0
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::path::Path;

use crate::error::{HgsError, Result};
use crate::group::{FiniteGroup, Limits};
use crate::perm::Perm;

pub fn parse_group_text(text: &str, limits: &Limits) -> Result<FiniteGroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(HgsError::Parse {
        line: 1,
        msg: "empty group file".into(),
    })?;
    let mut words = header.split_whitespace();
    let kind = words.next().unwrap_or("");
    let size: usize = words
        .next()
        .and_then(|w| w.parse().ok())
        .ok_or_else(|| HgsError::Parse {
            line: hline,
            msg: format!("expected `perm <degree>` or `table <n>`, got `{header}`"),
        })?;
    if words.next().is_some() {
        return Err(HgsError::Parse {
            line: hline,
            msg: "trailing text after header".into(),
        });
    }
    match kind {
        "perm" => {
            let mut gens = Vec::new();
            for (line, l) in lines {
                let p = Perm::parse_cycles(l, size).map_err(|e| match e {
                    HgsError::Parse { msg, .. } => HgsError::Parse { line, msg },
                    HgsError::InvalidGroup(msg) => HgsError::Parse { line, msg },
                    other => other,
                })?;
                gens.push(p);
            }
            if gens.is_empty() {
                gens.push(Perm::identity(size));
            }
            FiniteGroup::from_permutations(&gens, limits)
        }
        "table" => {
            if size > limits.max_table {
                return Err(HgsError::CapExceeded {
                    what: "Cayley table".into(),
                    size,
                    cap: limits.max_table,
                });
            }
            let mut rows = Vec::with_capacity(size);
            let mut last = hline;
            for (line, l) in lines {
                last = line;
                let row = l
                    .split_whitespace()
                    .map(|w| {
                        w.parse::<usize>().map_err(|_| HgsError::Parse {
                            line,
                            msg: format!("bad entry `{w}`"),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                if row.len() != size {
                    return Err(HgsError::Parse {
                        line,
                        msg: format!("row has {} entries, expected {size}", row.len()),
                    });
                }
                rows.push(row);
            }
            if rows.len() != size {
                return Err(HgsError::Parse {
                    line: last,
                    msg: format!("found {} rows, expected {size}", rows.len()),
                });
            }
            FiniteGroup::from_table(rows, limits)
        }
        _ => Err(HgsError::Parse {
            line: hline,
            msg: format!("unknown group file kind `{kind}`"),
        }),
    }
}

pub fn read_group_file(path: &Path, limits: &Limits) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path)?;
    parse_group_text(&text, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_file_gives_a5() {
        let g = parse_group_text("perm 5\n(0 1 2 3 4)\n(2 3 4)\n", &Limits::default()).unwrap();
        assert_eq!(g.order(), 60);
    }

    #[test]
    fn table_file_gives_c2() {
        let g = parse_group_text("# c2\ntable 2\n0 1\n1 0\n", &Limits::default()).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.element_orders(), &[1, 2]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_group_text("perm 5\n(0 1 2)\n(0 9)\n", &Limits::default()).unwrap_err();
        assert!(matches!(e, HgsError::Parse { line: 3, .. }), "{e}");
        let e = parse_group_text("table 2\n0 1\n1\n", &Limits::default()).unwrap_err();
        assert!(matches!(e, HgsError::Parse { line: 3, .. }), "{e}");
        let e = parse_group_text("\nmatrix 2\n", &Limits::default()).unwrap_err();
        assert!(matches!(e, HgsError::Parse { line: 2, .. }), "{e}");
    }

    #[test]
    fn rejects_non_associative_table() {
        // a Latin square with identity 0 that is not a group (order 5 loop)
        let rows = "table 5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
        let e = parse_group_text(rows, &Limits::default()).unwrap_err();
        assert!(matches!(e, HgsError::NotAssociative { .. }), "{e}");
    }
}
