use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{HgsError, Result};
use crate::group::{FiniteGroup, Limits};
use crate::perm::{for_each_permutation, Perm};

use super::Holomorph;

/// A regular subgroup of `Perm(X)`, `X = {0, .., d-1}`, kept as its sorted
/// member list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RegularSubgroup {
    members: Vec<Perm>,
}

impl RegularSubgroup {
    /// Checks closure, order `d` and that evaluation at 0 is a bijection.
    pub fn new(mut members: Vec<Perm>) -> Result<RegularSubgroup> {
        members.sort();
        members.dedup();
        let d = members.first().map(|p| p.degree()).unwrap_or(0);
        if d == 0 || members.len() != d || members.iter().any(|p| p.degree() != d) {
            return Err(HgsError::InvalidGroup("regular subgroup must have order equal to its degree".into()));
        }
        let mut at0 = vec![false; d];
        for p in &members {
            if std::mem::replace(&mut at0[p.apply(0)], true) {
                return Err(HgsError::InvalidGroup("evaluation at 0 is not injective".into()));
            }
        }
        let set: HashSet<&Perm> = members.iter().collect();
        for a in &members {
            for b in &members {
                if !set.contains(&a.compose(b)) {
                    return Err(HgsError::InvalidGroup("member list is not closed".into()));
                }
            }
        }
        Ok(RegularSubgroup { members })
    }

    fn from_sorted_unchecked(mut members: Vec<Perm>) -> RegularSubgroup {
        members.sort();
        RegularSubgroup { members }
    }

    /// `λ(G)`: `y ↦ x·y`.
    pub fn lambda(g: &FiniteGroup) -> RegularSubgroup {
        let n = g.order();
        RegularSubgroup::from_sorted_unchecked(
            (0..n)
                .map(|x| Perm::from_images_unchecked((0..n).map(|y| g.mul(x, y) as u16).collect()))
                .collect(),
        )
    }

    /// `ρ(G)`: `y ↦ y·x⁻¹`.
    pub fn rho(g: &FiniteGroup) -> RegularSubgroup {
        let n = g.order();
        RegularSubgroup::from_sorted_unchecked(
            (0..n)
                .map(|x| Perm::from_images_unchecked((0..n).map(|y| g.mul(y, g.inv(x)) as u16).collect()))
                .collect(),
        )
    }

    pub fn members(&self) -> &[Perm] {
        &self.members
    }

    pub fn degree(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.members.binary_search(p).is_ok()
    }

    pub fn is_abelian(&self) -> bool {
        self.members
            .iter()
            .all(|a| self.members.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// The centralizer in `Perm(X)`. For `y ∈ X` the map `π_y` sends
    /// `d(0)` to `d(y)` for every member `d`; these commute with every
    /// member and form the whole centralizer.
    pub fn dual(&self) -> RegularSubgroup {
        let d = self.degree();
        let mut by_zero: Vec<&Perm> = vec![&self.members[0]; d];
        for p in &self.members {
            by_zero[p.apply(0)] = p;
        }
        let duals = (0..d)
            .map(|y| Perm::from_images_unchecked((0..d).map(|x| by_zero[x].apply(y) as u16).collect()))
            .collect();
        RegularSubgroup::new(duals).expect("centralizer of a regular subgroup is regular")
    }

    /// `e·D·e⁻¹ ⊆ D` for every `e` in `gens`.
    pub fn normalized_by(&self, gens: &[Perm]) -> bool {
        gens.iter().all(|e| {
            let ei = e.inverse();
            self.members.iter().all(|d| self.contains(&e.compose(d).compose(&ei)))
        })
    }

    pub fn to_group(&self, limits: &Limits) -> Result<Arc<FiniteGroup>> {
        Ok(Arc::new(FiniteGroup::from_permutations(&self.members, limits)?))
    }

    /// Every member lies in the image of `Hol(N)` acting on `N`.
    pub fn inside_holomorph(&self, hol: &Holomorph) -> bool {
        self.members.iter().all(|p| hol.element_of_perm(p).is_some())
    }
}

/// `Norm(λ(Γ)) = Hol(Γ) = Norm(ρ(Γ))` inside `Perm(Γ)`, by scanning all
/// `|Γ|!` permutations. Small `Γ` only.
pub fn hol2_holds(hol: &Holomorph) -> Result<bool> {
    let g = hol.base();
    let n = g.order();
    if n > 8 {
        return Err(HgsError::CapExceeded {
            what: "Perm(Γ) scan".into(),
            size: n,
            cap: 8,
        });
    }
    let lam = RegularSubgroup::lambda(g);
    let rho = RegularSubgroup::rho(g);
    let lam_gens: Vec<Perm> = g.generators().iter().map(|&x| lam_perm(g, x)).collect();
    let rho_gens: Vec<Perm> = g
        .generators()
        .iter()
        .map(|&x| Perm::from_images_unchecked((0..n).map(|y| g.mul(y, g.inv(x)) as u16).collect()))
        .collect();
    let normalizes = |p: &Perm, d: &RegularSubgroup, gens: &[Perm]| {
        let pi = p.inverse();
        gens.iter().all(|s| d.contains(&p.compose(s).compose(&pi)))
    };
    let mut norm_l = Vec::new();
    let mut norm_r = Vec::new();
    for_each_permutation(n, |images| {
        let p = Perm::from_images_unchecked(images.to_vec());
        if normalizes(&p, &lam, &lam_gens) {
            norm_l.push(p.clone());
        }
        if normalizes(&p, &rho, &rho_gens) {
            norm_r.push(p);
        }
    });
    let mut hol_image: Vec<Perm> = hol.elements().map(|h| hol.to_perm(h)).collect();
    hol_image.sort();
    norm_l.sort();
    norm_r.sort();
    Ok(norm_l == hol_image && norm_r == hol_image)
}

fn lam_perm(g: &FiniteGroup, x: usize) -> Perm {
    Perm::from_images_unchecked((0..g.order()).map(|y| g.mul(x, y) as u16).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;

    fn group(s: &str) -> Arc<FiniteGroup> {
        Catalog::new(Limits::default()).resolve(s).unwrap()
    }

    #[test]
    fn lambda_dual_is_rho() {
        for s in ["S3", "D4", "Q8", "C6"] {
            let g = group(s);
            let lam = RegularSubgroup::lambda(&g);
            let rho = RegularSubgroup::rho(&g);
            assert_eq!(lam.dual(), rho, "{s}");
            assert_eq!(rho.dual(), lam, "{s}");
            assert_eq!(lam == rho, g.is_abelian());
            assert!(lam.normalized_by(lam.members()));
        }
    }

    #[test]
    fn abelian_is_self_dual() {
        let d = RegularSubgroup::lambda(&group("C4xC2"));
        assert!(d.is_abelian());
        assert_eq!(d.dual(), d);
    }

    #[test]
    fn klein_in_s4_normalized_by_lambda_c4() {
        let v = RegularSubgroup::new(vec![
            Perm::identity(4),
            Perm::parse_cycles("(0 1)(2 3)", 4).unwrap(),
            Perm::parse_cycles("(0 2)(1 3)", 4).unwrap(),
            Perm::parse_cycles("(0 3)(1 2)", 4).unwrap(),
        ])
        .unwrap();
        let c4 = group("C4");
        assert!(v.normalized_by(RegularSubgroup::lambda(&c4).members()));
    }

    #[test]
    fn rejects_non_regular_sets() {
        let s = vec![Perm::identity(3), Perm::parse_cycles("(0 1)", 3).unwrap(), Perm::parse_cycles("(1 2)", 3).unwrap()];
        assert!(RegularSubgroup::new(s).is_err());
    }

    #[test]
    fn hol2_small() {
        for s in ["C1", "C2", "C3", "C4", "V4", "C5", "C6", "S3"] {
            let hol = Holomorph::build(&group(s), &Limits::default()).unwrap();
            assert!(hol2_holds(&hol).unwrap(), "{s}");
        }
    }
}
