use std::sync::Arc;

use crate::error::{HgsError, Result};
use crate::group::{FiniteGroup, Limits, Subgroup};
use crate::morphisms::{automorphism_group, AutomorphismGroup, Homomorphism};

use super::crossed::CrossedHom;
use super::Holomorph;

/// Data for pushing crossed homomorphisms down to `N/Λ` for a
/// characteristic subgroup `Λ`.
pub struct QuotientContext {
    lambda: Subgroup,
    quotient: Arc<FiniteGroup>,
    proj: Vec<usize>,
    qaut: Arc<AutomorphismGroup>,
    /// Carrier index in Aut(N/Λ) of the map induced by each α ∈ Aut(N).
    induced: Vec<u16>,
}

impl QuotientContext {
    pub fn new(hol: &Holomorph, lambda: &Subgroup, limits: &Limits) -> Result<QuotientContext> {
        let n = hol.base();
        let aut = hol.aut();
        if !lambda.is_subgroup_of(n) || !n.is_normal(lambda) || !aut.is_characteristic(lambda) {
            return Err(HgsError::NotCharacteristic);
        }
        let (q, proj) = n.quotient(lambda)?;
        let quotient = Arc::new(q);
        let qaut = Arc::new(automorphism_group(&quotient, limits)?);
        let mut rep = vec![usize::MAX; quotient.order()];
        for x in 0..n.order() {
            if rep[proj[x]] == usize::MAX {
                rep[proj[x]] = x;
            }
        }
        let induced = (0..aut.order())
            .map(|a| {
                let images: Vec<u16> = rep.iter().map(|&r| proj[aut.apply(a, r)] as u16).collect();
                qaut.find(&images)
                    .map(|i| i as u16)
                    .ok_or_else(|| HgsError::Internal("induced map is not an automorphism".into()))
            })
            .collect::<Result<Vec<u16>>>()?;
        Ok(QuotientContext {
            lambda: lambda.clone(),
            quotient,
            proj,
            qaut,
            induced,
        })
    }

    pub fn quotient(&self) -> &Arc<FiniteGroup> {
        &self.quotient
    }

    pub fn projection(&self) -> &[usize] {
        &self.proj
    }

    pub fn quotient_holomorph(&self) -> Holomorph {
        Holomorph::new(self.qaut.clone())
    }

    /// The induced pair `(f̄, ḡ)` on `N/Λ` and the subgroup `g⁻¹(Λ)` of `G`.
    pub fn induce(&self, c: &CrossedHom) -> Result<(CrossedHom, Subgroup)> {
        let src = c.source();
        let fbar: Vec<u16> = c.f().images().iter().map(|&a| self.induced[a as usize]).collect();
        let fbar = Homomorphism::from_raw(src.clone(), self.qaut.carrier().clone(), fbar);
        if !fbar.verify_full() {
            return Err(HgsError::Internal("induced f is not a homomorphism".into()));
        }
        let gbar: Vec<u16> = c.g().iter().map(|&x| self.proj[x as usize] as u16).collect();
        let cbar = CrossedHom::from_raw(fbar, gbar, self.qaut.clone());
        if !cbar.verify_full() {
            return Err(HgsError::Internal("induced g is not a crossed homomorphism".into()));
        }
        let pre = Subgroup::from_members(
            src.order(),
            (0..src.order()).filter(|&d| self.lambda.contains(c.apply(d))).collect(),
        );
        if !pre.is_subgroup_of(src) {
            return Err(HgsError::Internal("g⁻¹(Λ) is not a subgroup".into()));
        }
        Ok((cbar, pre))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use crate::holomorph::crossed_homomorphisms;
    use crate::morphisms::enumerate_homomorphisms;

    #[test]
    fn trivial_and_full_quotients() {
        let c = Catalog::new(Limits::default());
        let g = c.resolve("S3").unwrap();
        let hol = Holomorph::build(&c.resolve("C6").unwrap(), &Limits::default()).unwrap();
        let triv = QuotientContext::new(&hol, &Subgroup::trivial(6), &Limits::default()).unwrap();
        let whole = QuotientContext::new(&hol, &Subgroup::whole(6), &Limits::default()).unwrap();
        for f in enumerate_homomorphisms(&g, hol.aut().carrier(), None, None) {
            for x in crossed_homomorphisms(&hol, &f, false).unwrap() {
                let (xbar, pre) = triv.induce(&x).unwrap();
                assert_eq!(xbar.g(), x.g());
                for d in 0..g.order() {
                    for y in 0..6 {
                        let a = xbar.aut().apply(xbar.f().apply(d), y);
                        assert_eq!(a, hol.aut().apply(x.f().apply(d), y));
                    }
                }
                if x.is_bijective() {
                    assert!(pre.is_trivial());
                }
                let (ybar, pre) = whole.induce(&x).unwrap();
                assert!(ybar.g().iter().all(|&v| v == 0));
                assert!(pre.is_whole());
            }
        }
    }

    #[test]
    fn non_characteristic_is_rejected() {
        let c = Catalog::new(Limits::default());
        let n = c.resolve("V4").unwrap();
        let hol = Holomorph::build(&n, &Limits::default()).unwrap();
        let h = n.subgroup_closure(&[1]);
        assert!(matches!(
            QuotientContext::new(&hol, &h, &Limits::default()),
            Err(HgsError::NotCharacteristic)
        ));
    }
}
