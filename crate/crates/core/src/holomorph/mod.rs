//! The holomorph `Hol(N) = ρ(N)⋊Aut(N)` and its regular subgroups.
//!
//! Sign conventions, fixed here once:
//!
//! * The pair `(η, α)` acts on `N` by `x ↦ α(x)·η⁻¹`.
//! * Pairs multiply as functions compose, `(η₁,α₁)(η₂,α₂) = (η₁·α₁(η₂), α₁α₂)`.
//! * `ρ(η) = (η, 1)` is `x ↦ x·η⁻¹` and `λ(η) = (η⁻¹, conj(η))` is `x ↦ η·x`.
//! * Evaluating at the identity sends `(η, α)` to `η⁻¹`, so a subgroup of
//!   order `|N|` is regular iff its `η` components are all distinct.
//!
//! A regular subgroup isomorphic to `G` is `{(g(δ), f(δ)) : δ ∈ G}` for a
//! homomorphism `f: G → Aut(N)` and a bijective crossed homomorphism `g`.

mod checkpoint;
mod crossed;
mod enumerate;
mod quotient;
mod regular;

use std::sync::Arc;

use serde::Serialize;

pub use checkpoint::Checkpoint;
pub use crossed::{check_h_properties, crossed_homomorphisms, derive_h, CrossedHom};
pub use enumerate::{regular_subgroups_in_holomorph, EnumOptions, RegularCount};
pub use quotient::QuotientContext;
pub use regular::{hol2_holds, RegularSubgroup};

use crate::error::Result;
use crate::group::{FiniteGroup, Limits};
use crate::morphisms::{automorphism_group, AutomorphismGroup};
use crate::perm::Perm;

/// Tag written into checkpoints so runs under another convention are
/// never mixed.
pub const CONVENTION: &str = "rho-aut:x->alpha(x)*eta^-1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HolElement {
    pub eta: u16,
    pub alpha: u16,
}

/// `Hol(N)` as pairs; no multiplication table is ever built for it.
#[derive(Clone)]
pub struct Holomorph {
    base: Arc<FiniteGroup>,
    aut: Arc<AutomorphismGroup>,
}

impl Holomorph {
    pub fn new(aut: Arc<AutomorphismGroup>) -> Holomorph {
        Holomorph {
            base: aut.base().clone(),
            aut,
        }
    }

    pub fn build(n: &Arc<FiniteGroup>, limits: &Limits) -> Result<Holomorph> {
        Ok(Holomorph::new(Arc::new(automorphism_group(n, limits)?)))
    }

    pub fn base(&self) -> &Arc<FiniteGroup> {
        &self.base
    }

    pub fn aut(&self) -> &Arc<AutomorphismGroup> {
        &self.aut
    }

    pub fn order(&self) -> usize {
        self.base.order() * self.aut.order()
    }

    pub fn identity(&self) -> HolElement {
        HolElement { eta: 0, alpha: 0 }
    }

    pub fn mul(&self, a: HolElement, b: HolElement) -> HolElement {
        let moved = self.aut.apply(a.alpha as usize, b.eta as usize);
        HolElement {
            eta: self.base.mul(a.eta as usize, moved) as u16,
            alpha: self.aut.carrier().mul(a.alpha as usize, b.alpha as usize) as u16,
        }
    }

    pub fn inv(&self, a: HolElement) -> HolElement {
        let ai = self.aut.carrier().inv(a.alpha as usize);
        HolElement {
            eta: self.aut.apply(ai, self.base.inv(a.eta as usize)) as u16,
            alpha: ai as u16,
        }
    }

    /// `x ↦ α(x)·η⁻¹`
    #[inline]
    pub fn act(&self, h: HolElement, x: usize) -> usize {
        self.base
            .mul(self.aut.apply(h.alpha as usize, x), self.base.inv(h.eta as usize))
    }

    pub fn to_perm(&self, h: HolElement) -> Perm {
        Perm::from_images_unchecked((0..self.base.order()).map(|x| self.act(h, x) as u16).collect())
    }

    pub fn lambda(&self, x: usize) -> HolElement {
        HolElement {
            eta: self.base.inv(x) as u16,
            alpha: self.aut.inner_of(x) as u16,
        }
    }

    pub fn rho(&self, x: usize) -> HolElement {
        HolElement { eta: x as u16, alpha: 0 }
    }

    pub fn elements(&self) -> impl Iterator<Item = HolElement> + '_ {
        let m = self.aut.order();
        (0..self.base.order()).flat_map(move |eta| {
            (0..m).map(move |alpha| HolElement {
                eta: eta as u16,
                alpha: alpha as u16,
            })
        })
    }

    /// The pair realizing a permutation of `N`, if it lies in `Hol(N)`.
    pub fn element_of_perm(&self, p: &Perm) -> Option<HolElement> {
        let n = self.base.order();
        if p.degree() != n {
            return None;
        }
        let eta = self.base.inv(p.apply(0));
        let images: Vec<u16> = (0..n).map(|x| self.base.mul(p.apply(x), eta) as u16).collect();
        self.aut.find(&images).map(|alpha| HolElement {
            eta: eta as u16,
            alpha: alpha as u16,
        })
    }

    /// `Hol(N)` with a Cayley table, for small `N` only.
    pub fn to_group(&self, limits: &Limits) -> Result<(FiniteGroup, Vec<HolElement>)> {
        let mut gens: Vec<HolElement> = self.base.generators().iter().map(|&x| self.rho(x)).collect();
        gens.extend(
            self.aut
                .carrier()
                .generators()
                .iter()
                .map(|&a| HolElement { eta: 0, alpha: a as u16 }),
        );
        FiniteGroup::from_generators(self.identity(), &gens, |a, b| self.mul(*a, *b), limits)
    }
}

/// A regular subgroup of `Hol(N)`, stored as the automorphism component
/// paired with each `η`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HolSubgroup {
    alpha_of: Vec<u16>,
}

impl HolSubgroup {
    pub(crate) fn from_key(alpha_of: Vec<u16>) -> HolSubgroup {
        HolSubgroup { alpha_of }
    }

    pub fn order(&self) -> usize {
        self.alpha_of.len()
    }

    pub fn contains(&self, h: HolElement) -> bool {
        self.alpha_of[h.eta as usize] == h.alpha
    }

    pub fn elements(&self) -> Vec<HolElement> {
        self.alpha_of
            .iter()
            .enumerate()
            .map(|(eta, &alpha)| HolElement { eta: eta as u16, alpha })
            .collect()
    }

    /// `e·D·e⁻¹ ⊆ D` for every `e` in `gens`.
    pub fn normalized_by(&self, hol: &Holomorph, gens: &[HolElement]) -> bool {
        gens.iter().all(|&e| {
            let ei = hol.inv(e);
            self.elements()
                .into_iter()
                .all(|d| self.contains(hol.mul(hol.mul(e, d), ei)))
        })
    }

    pub fn to_regular(&self, hol: &Holomorph) -> Result<RegularSubgroup> {
        RegularSubgroup::new(self.elements().into_iter().map(|h| hol.to_perm(h)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use crate::group::are_isomorphic;

    fn hol(s: &str) -> Holomorph {
        let g = Catalog::new(Limits::default()).resolve(s).unwrap();
        Holomorph::build(&g, &Limits::default()).unwrap()
    }

    #[test]
    fn holomorph_orders() {
        let c = Catalog::new(Limits::default());
        let h = hol("C4");
        let (g, _) = h.to_group(&Limits::default()).unwrap();
        assert_eq!(g.order(), 8);
        assert!(are_isomorphic(&Arc::new(g), &c.resolve("D4").unwrap()).is_some());
        let h = hol("V4");
        let (g, _) = h.to_group(&Limits::default()).unwrap();
        assert_eq!(g.order(), 24);
        assert!(are_isomorphic(&Arc::new(g), &c.resolve("S4").unwrap()).is_some());
        assert_eq!(hol("A5").order(), 7200);
    }

    #[test]
    fn pair_product_matches_composition() {
        let h = hol("S3");
        let els: Vec<HolElement> = h.elements().collect();
        assert_eq!(els.len(), 36);
        for &a in &els {
            assert_eq!(h.mul(a, h.inv(a)), h.identity());
            for &b in &els {
                assert_eq!(h.to_perm(h.mul(a, b)), h.to_perm(a).compose(&h.to_perm(b)));
            }
        }
        // faithful
        let mut perms: Vec<Perm> = els.iter().map(|&a| h.to_perm(a)).collect();
        perms.sort();
        perms.dedup();
        assert_eq!(perms.len(), 36);
    }

    #[test]
    fn lambda_and_rho_commute_and_are_regular() {
        let h = hol("S3");
        let n = h.base().order();
        for x in 0..n {
            assert_eq!(h.act(h.lambda(x), 0), x);
            assert_eq!(h.act(h.rho(x), 0), h.base().inv(x));
            for y in 0..n {
                assert_eq!(h.mul(h.lambda(x), h.rho(y)), h.mul(h.rho(y), h.lambda(x)));
                assert_eq!(h.act(h.lambda(x), y), h.base().mul(x, y));
            }
        }
    }

    #[test]
    fn element_of_perm_round_trips() {
        let h = hol("D4");
        for a in h.elements() {
            assert_eq!(h.element_of_perm(&h.to_perm(a)), Some(a));
        }
        let swap = Perm::from_images(vec![1, 0, 2, 3, 4, 5, 6, 7]).unwrap();
        let inside = h.element_of_perm(&swap).is_some();
        assert!(!inside || h.to_perm(h.element_of_perm(&swap).unwrap()) == swap);
    }
}
