//! Permutations of `{0, .., d-1}` stored as image vectors.
//!
//! Products are composition of functions: `a.compose(&b)` maps `i` to
//! `a(b(i))`, so the right factor acts first.

use std::fmt;

use crate::error::{HgsError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            if x >= d || seen[x] {
                return Err(HgsError::InvalidGroup(format!(
                    "image list {images:?} is not a bijection of 0..{d}"
                )));
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u16>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x as usize)
        });
        Perm { images }
    }

    /// Parses cycle notation such as `(0 1 2)(3 4)`. Points are 0-based;
    /// an empty string or `()` is the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        let mut rest = text.trim();
        let err = |msg: String| HgsError::Parse { line: 0, msg };
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(err(format!("expected `(` in `{text}`")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| err(format!("unclosed cycle in `{text}`")))?;
            let body = &rest[1..close];
            let points = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| err(format!("bad point `{s}` in `{text}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            for &p in &points {
                if p >= degree {
                    return Err(err(format!("point {p} out of range for degree {degree}")));
                }
                if seen[p] {
                    return Err(err(format!("point {p} repeated in `{text}`")));
                }
                seen[p] = true;
            }
            for (i, &p) in points.iter().enumerate() {
                images[p] = points[(i + 1) % points.len()];
            }
            rest = rest[close + 1..].trim_start();
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i == x as usize)
            .count()
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut lens = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            lens.push(len);
        }
        lens
    }

    pub fn order(&self) -> usize {
        self.cycle_lengths().into_iter().fold(1, lcm)
    }

    pub fn is_even(&self) -> bool {
        self.cycle_lengths().iter().filter(|&&l| l % 2 == 0).count() % 2 == 0
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut wrote = false;
        for start in 0..d {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.apply(x);
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Calls `visit` once for every permutation of `0..n`, in Heap's order.
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[u16])) {
    let mut a: Vec<u16> = (0..n as u16).collect();
    let mut c = vec![0usize; n];
    visit(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            visit(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = Perm::parse_cycles("(0 1 2 3 4)(5 6)", 7).unwrap();
        assert_eq!(p.to_string(), "(0 1 2 3 4)(5 6)");
        assert_eq!(p.order(), 10);
        assert!(!p.is_even());
        assert_eq!(Perm::parse_cycles("()", 3).unwrap(), Perm::identity(3));
    }

    #[test]
    fn parse_errors() {
        assert!(Perm::parse_cycles("(0 1", 3).is_err());
        assert!(Perm::parse_cycles("(0 5)", 3).is_err());
        assert!(Perm::parse_cycles("(0 1)(1 2)", 3).is_err());
    }

    #[test]
    fn compose_acts_right_to_left() {
        let a = Perm::parse_cycles("(0 1)", 3).unwrap();
        let b = Perm::parse_cycles("(1 2)", 3).unwrap();
        // a∘b sends 1 -> 2 -> 2, 2 -> 1 -> 0
        let ab = a.compose(&b);
        assert_eq!(ab.apply(1), 2);
        assert_eq!(ab.apply(2), 0);
        assert!(ab.compose(&ab.inverse()).is_identity());
    }

    #[test]
    fn heap_visits_all() {
        let mut seen = std::collections::HashSet::new();
        for_each_permutation(5, |p| {
            seen.insert(p.to_vec());
        });
        assert_eq!(seen.len(), 120);
    }
}
