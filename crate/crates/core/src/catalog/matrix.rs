//! 2×2 matrix groups over GF(q).
//!
//! SL(2,q) is closed as a set of matrices. PSL(2,q) and PGL(2,q) are built
//! from their faithful action on the projective line, points `0..q` being
//! the field elements and point `q` being ∞.

use crate::error::Result;
use crate::field::{FieldElement, GaloisField};
use crate::group::{FiniteGroup, Limits};
use crate::perm::Perm;

type Matrix = [FieldElement; 4];

fn mat_mul(f: &GaloisField, a: &Matrix, b: &Matrix) -> Matrix {
    let dot = |x: FieldElement, y: FieldElement, z: FieldElement, w: FieldElement| f.add(f.mul(x, y), f.mul(z, w));
    [
        dot(a[0], b[0], a[1], b[2]),
        dot(a[0], b[1], a[1], b[3]),
        dot(a[2], b[0], a[3], b[2]),
        dot(a[2], b[1], a[3], b[3]),
    ]
}

/// Generators of SL(2,q): a transvection, its transpose partner, and a
/// diagonal matrix built from the primitive element.
fn sl_generators(f: &GaloisField) -> Vec<Matrix> {
    let (zero, one) = (f.zero(), f.one());
    let w = f.primitive_element();
    vec![
        [one, one, zero, one],
        [zero, f.neg(one), one, zero],
        [w, zero, zero, f.inv(w).expect("nonzero")],
    ]
}

/// The Möbius map `z ↦ (az + b)/(cz + d)` on the projective line.
fn mobius(f: &GaloisField, m: &Matrix) -> Perm {
    let q = f.order();
    let inf = q;
    let images = (0..=q)
        .map(|z| {
            let (num, den) = if z == inf {
                (m[0], m[2])
            } else {
                let z = FieldElement(z as u16);
                (f.add(f.mul(m[0], z), m[1]), f.add(f.mul(m[2], z), m[3]))
            };
            match f.inv(den) {
                Some(d) => f.mul(num, d).0,
                None => inf as u16,
            }
        })
        .collect();
    Perm::from_images_unchecked(images)
}

pub fn special_linear(q: usize, limits: &Limits) -> Result<FiniteGroup> {
    let f = GaloisField::new(q)?;
    let id: Matrix = [f.one(), f.zero(), f.zero(), f.one()];
    let (g, _) = FiniteGroup::from_generators(id, &sl_generators(&f), |a, b| mat_mul(&f, a, b), limits)?;
    Ok(g.with_name(format!("SL(2,{q})")))
}

pub fn projective_special_linear(q: usize, limits: &Limits) -> Result<FiniteGroup> {
    let f = GaloisField::new(q)?;
    let gens: Vec<Perm> = sl_generators(&f).iter().map(|m| mobius(&f, m)).collect();
    Ok(FiniteGroup::from_permutations(&gens, limits)?.with_name(format!("PSL(2,{q})")))
}

pub fn projective_general_linear(q: usize, limits: &Limits) -> Result<FiniteGroup> {
    let f = GaloisField::new(q)?;
    let (zero, one) = (f.zero(), f.one());
    let mut gens: Vec<Perm> = sl_generators(&f).iter().map(|m| mobius(&f, m)).collect();
    gens.push(mobius(&f, &[f.primitive_element(), zero, zero, one]));
    Ok(FiniteGroup::from_permutations(&gens, limits)?.with_name(format!("PGL(2,{q})")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_match_formulas() {
        let limits = Limits::default();
        for q in [2usize, 3, 4, 5, 7, 8, 9, 11] {
            let full = q * (q * q - 1);
            let d = if q % 2 == 1 { 2 } else { 1 };
            assert_eq!(special_linear(q, &limits).unwrap().order(), full, "SL(2,{q})");
            assert_eq!(projective_special_linear(q, &limits).unwrap().order(), full / d, "PSL(2,{q})");
            assert_eq!(projective_general_linear(q, &limits).unwrap().order(), full, "PGL(2,{q})");
        }
    }

    #[test]
    fn sl29_has_center_of_order_two() {
        let g = special_linear(9, &Limits::default()).unwrap();
        assert_eq!(g.center().order(), 2);
    }

    #[test]
    fn pgl29_acts_on_ten_points() {
        let g = projective_general_linear(9, &Limits::default()).unwrap();
        assert_eq!(g.perm_rep().unwrap()[0].degree(), 10);
    }
}
