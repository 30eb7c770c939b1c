//! Small Galois fields GF(p^k), k ≤ 3, with table arithmetic.
//!
//! An element is encoded as the integer `Σ cᵢ pⁱ` of its coefficient
//! vector in the polynomial basis over the pinned modulus, so encodings
//! (and every table built from them) are stable across runs.

use crate::error::{HgsError, Result};
use crate::perm::is_prime;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub u16);

/// Conway polynomials, coefficients from the constant term up.
const MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 2, &[3, 6, 1]),
];

#[derive(Clone, Debug)]
pub struct GaloisField {
    p: u32,
    k: u32,
    q: usize,
    modulus: Vec<u32>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

impl GaloisField {
    pub fn new(q: usize) -> Result<GaloisField> {
        let (p, k) = prime_power(q)
            .ok_or_else(|| HgsError::Precondition(format!("{q} is not a prime power")))?;
        let modulus: Vec<u32> = if k == 1 {
            vec![0, 1]
        } else {
            MODULI
                .iter()
                .find(|(mp, mk, _)| *mp == p && *mk == k)
                .map(|(_, _, m)| m.to_vec())
                .ok_or_else(|| HgsError::Precondition(format!("no pinned modulus for GF({q})")))?
        };
        let mut f = GaloisField {
            p,
            k,
            q,
            modulus,
            add: vec![0; q * q],
            mul: vec![0; q * q],
            neg: vec![0; q],
            inv: vec![0; q],
        };
        for a in 0..q {
            for b in 0..q {
                f.add[a * q + b] = f.encode(&f.poly_add(&f.decode(a), &f.decode(b)));
                f.mul[a * q + b] = f.encode(&f.poly_mulmod(&f.decode(a), &f.decode(b)));
            }
        }
        for a in 0..q {
            f.neg[a] = (0..q).find(|&b| f.add[a * q + b] == 0).unwrap() as u16;
            if a != 0 {
                f.inv[a] = (0..q)
                    .find(|&b| f.mul[a * q + b] == 1)
                    .ok_or_else(|| HgsError::Internal(format!("GF({q}) modulus is reducible")))?
                    as u16;
            }
        }
        Ok(f)
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q as u16).map(FieldElement)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add[a.0 as usize * self.q + b.0 as usize])
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul[a.0 as usize * self.q + b.0 as usize])
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.0 as usize])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        (a.0 != 0).then(|| FieldElement(self.inv[a.0 as usize]))
    }

    pub fn multiplicative_order(&self, a: FieldElement) -> usize {
        assert_ne!(a.0, 0);
        let mut x = a;
        let mut k = 1;
        while x != self.one() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Smallest encoding of a generator of the multiplicative group.
    pub fn primitive_element(&self) -> FieldElement {
        self.elements()
            .skip(1)
            .find(|&a| self.multiplicative_order(a) == self.q - 1)
            .expect("finite field has a primitive element")
    }

    fn decode(&self, a: usize) -> Vec<u32> {
        let mut c = Vec::with_capacity(self.k as usize);
        let mut x = a as u32;
        for _ in 0..self.k {
            c.push(x % self.p);
            x /= self.p;
        }
        c
    }

    fn encode(&self, c: &[u32]) -> u16 {
        c.iter().rev().fold(0u32, |acc, &d| acc * self.p + d) as u16
    }

    fn poly_add(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    fn poly_mulmod(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let k = self.k as usize;
        let mut prod = vec![0u32; 2 * k];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // reduce by the monic modulus from the top degree down
        for d in (k..2 * k).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (i, &m) in self.modulus[..k].iter().enumerate() {
                let t = prod[d - k + i] + self.p - (c * m) % self.p;
                prod[d - k + i] = t % self.p;
            }
        }
        prod.truncate(k);
        prod
    }
}

fn prime_power(q: usize) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    if !is_prime(p) {
        return None;
    }
    let mut k = 0;
    let mut x = q;
    while x % p == 0 {
        x /= p;
        k += 1;
    }
    (x == 1).then_some((p as u32, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(f: &GaloisField) {
        let els: Vec<FieldElement> = f.elements().collect();
        for &a in &els {
            assert_eq!(f.add(a, f.zero()), a);
            assert_eq!(f.mul(a, f.one()), a);
            assert_eq!(f.add(a, f.neg(a)), f.zero());
            if a != f.zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            }
            for &b in &els {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for &c in &els {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 25, 27, 49] {
            let f = GaloisField::new(q).unwrap();
            check_axioms(&f);
        }
    }

    #[test]
    fn pinned_moduli_are_primitive() {
        // the class of x (encoded as p) generates the multiplicative group
        for &(p, k, _) in MODULI {
            let q = (p as usize).pow(k);
            let f = GaloisField::new(q).unwrap();
            assert_eq!(f.multiplicative_order(FieldElement(p as u16)), q - 1, "GF({q})");
        }
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert!(GaloisField::new(6).is_err());
        assert!(GaloisField::new(1).is_err());
        assert!(GaloisField::new(16).is_err());
    }

    #[test]
    fn gf9_arithmetic() {
        let f = GaloisField::new(9).unwrap();
        assert_eq!(f.characteristic(), 3);
        assert_eq!(f.degree(), 2);
        // x^2 = -2x - 2 = x + 1 under x^2 + 2x + 2
        let x = FieldElement(3);
        assert_eq!(f.mul(x, x), FieldElement(3 + 1));
        assert_eq!(f.multiplicative_order(f.primitive_element()), 8);
    }
}
