use std::sync::Arc;

use crate::error::{HgsError, Result};
use crate::group::FiniteGroup;
use crate::morphisms::{same_group, AutomorphismGroup, Homomorphism};
use crate::search::{CrossedRule, EdgePlan};

use super::{HolSubgroup, Holomorph};

/// A homomorphism `f: G → Aut(N)` with a map `g: G → N` satisfying
/// `g(δ₁δ₂) = g(δ₁)·f(δ₁)(g(δ₂))`.
#[derive(Clone)]
pub struct CrossedHom {
    f: Homomorphism,
    g: Vec<u16>,
    bijective: bool,
    aut: Arc<AutomorphismGroup>,
}

impl std::fmt::Debug for CrossedHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CrossedHom")
            .field("f", &self.f.images())
            .field("g", &self.g)
            .field("bijective", &self.bijective)
            .finish()
    }
}

impl PartialEq for CrossedHom {
    fn eq(&self, other: &Self) -> bool {
        self.f == other.f && self.g == other.g
    }
}

impl CrossedHom {
    /// Checks `f` against `aut` and `g` against the crossed relation on all
    /// pairs.
    pub fn new(f: Homomorphism, g: Vec<usize>, aut: Arc<AutomorphismGroup>) -> Result<CrossedHom> {
        if !same_group(f.target(), aut.carrier()) {
            return Err(HgsError::Precondition("f must map into the Aut(N) carrier".into()));
        }
        if g.len() != f.source().order() || g.iter().any(|&x| x >= aut.base().order()) {
            return Err(HgsError::Precondition("g has the wrong shape".into()));
        }
        let c = CrossedHom::from_raw(f, g.into_iter().map(|x| x as u16).collect(), aut);
        if !c.verify_full() {
            return Err(HgsError::InvalidGroup("g is not a crossed homomorphism for f".into()));
        }
        Ok(c)
    }

    pub(crate) fn from_raw(f: Homomorphism, g: Vec<u16>, aut: Arc<AutomorphismGroup>) -> CrossedHom {
        let n = aut.base().order();
        let bijective = g.len() == n && {
            let mut seen = vec![false; n];
            g.iter().all(|&x| !std::mem::replace(&mut seen[x as usize], true))
        };
        CrossedHom { f, g, bijective, aut }
    }

    pub fn f(&self) -> &Homomorphism {
        &self.f
    }

    pub fn g(&self) -> &[u16] {
        &self.g
    }

    #[inline]
    pub fn apply(&self, delta: usize) -> usize {
        self.g[delta] as usize
    }

    pub fn is_bijective(&self) -> bool {
        self.bijective
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        self.f.source()
    }

    pub fn base(&self) -> &Arc<FiniteGroup> {
        self.aut.base()
    }

    pub fn aut(&self) -> &Arc<AutomorphismGroup> {
        &self.aut
    }

    /// The crossed relation on every pair of source elements.
    pub fn verify_full(&self) -> bool {
        let (src, n) = (self.source(), self.base());
        let m = src.order();
        self.g[0] == 0
            && (0..m).all(|d1| {
                let (g1, a1) = (self.apply(d1), self.f.apply(d1));
                (0..m).all(|d2| {
                    let want = n.mul(g1, self.aut.apply(a1, self.apply(d2)));
                    self.apply(src.mul(d1, d2)) == want
                })
            })
    }

    /// The regular subgroup `{(g(δ), f(δ))}` of `Hol(N)`.
    pub fn subgroup(&self) -> Option<HolSubgroup> {
        if !self.bijective {
            return None;
        }
        let mut key = vec![0u16; self.g.len()];
        for (d, &eta) in self.g.iter().enumerate() {
            key[eta as usize] = self.f.images()[d];
        }
        Some(HolSubgroup::from_key(key))
    }
}

/// Every crossed homomorphism for `f`, in a deterministic order. With
/// `bijective_only`, repeated values prune the search.
pub fn crossed_homomorphisms(hol: &Holomorph, f: &Homomorphism, bijective_only: bool) -> Result<Vec<CrossedHom>> {
    let aut = hol.aut();
    if !same_group(f.target(), aut.carrier()) {
        return Err(HgsError::Precondition("f must map into the Aut(N) carrier".into()));
    }
    let src = f.source();
    let n = hol.base();
    if bijective_only && src.order() != n.order() {
        return Ok(Vec::new());
    }
    let plan = EdgePlan::new(src);
    let rule = CrossedRule {
        target: n,
        action: aut.action_table(),
        f: f.images(),
    };
    let all: Vec<u16> = (0..n.order() as u16).collect();
    let cands: Vec<Vec<u16>> = (0..plan.gens().len())
        .map(|i| plan.cyclic_filter(src, &rule, i, &all, bijective_only))
        .collect();
    let found = plan.search_collect(&rule, &cands, n.order(), bijective_only);
    Ok(found
        .into_iter()
        .map(|g| CrossedHom::from_raw(f.clone(), g, aut.clone()))
        .collect())
}

/// `h(δ) = conj(g(δ))∘f(δ)`, checked to be a homomorphism into Aut(N).
pub fn derive_h(c: &CrossedHom) -> Result<Homomorphism> {
    let carrier = c.aut.carrier();
    let images: Vec<u16> = (0..c.source().order())
        .map(|d| carrier.mul(c.aut.inner_of(c.apply(d)), c.f.apply(d)) as u16)
        .collect();
    let h = Homomorphism::from_raw(c.source().clone(), carrier.clone(), images);
    if !h.verify_full() {
        return Err(HgsError::Internal("derived h is not a homomorphism".into()));
    }
    Ok(h)
}

/// Checks the structural facts that every crossed homomorphism and its
/// `h` satisfy. Returns a description of the first failure.
pub fn check_h_properties(c: &CrossedHom) -> std::result::Result<(), String> {
    let src = c.source();
    let n = c.base();
    let h = derive_h(c).map_err(|e| e.to_string())?;
    // fixed points of (f, h) are exactly g⁻¹(Z(N))
    let center = n.center();
    for d in 0..src.order() {
        let fixed = c.f.apply(d) == h.apply(d);
        if fixed != center.contains(c.apply(d)) {
            return Err(format!("fixed point mismatch at {d}"));
        }
    }
    // g is multiplicative from ker(f), anti-multiplicative from ker(h)
    for k in c.f.kernel().members().iter().copied() {
        for d in 0..src.order() {
            if c.apply(src.mul(k, d)) != n.mul(c.apply(k), c.apply(d)) {
                return Err(format!("g not multiplicative at ({k}, {d}) with {k} in ker f"));
            }
        }
    }
    for k in h.kernel().members().iter().copied() {
        for d in 0..src.order() {
            if c.apply(src.mul(k, d)) != n.mul(c.apply(d), c.apply(k)) {
                return Err(format!("g(kd) != g(d)g(k) at ({k}, {d}) with {k} in ker h"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use crate::group::Limits;
    use crate::morphisms::enumerate_homomorphisms;

    fn setup(g: &str, n: &str) -> (Arc<FiniteGroup>, Holomorph) {
        let c = Catalog::new(Limits::default());
        let g = c.resolve(g).unwrap();
        let n = c.resolve(n).unwrap();
        (g, Holomorph::build(&n, &Limits::default()).unwrap())
    }

    fn trivial_f(g: &Arc<FiniteGroup>, hol: &Holomorph) -> Homomorphism {
        Homomorphism::from_raw(g.clone(), hol.aut().carrier().clone(), vec![0; g.order()])
    }

    #[test]
    fn trivial_action_gives_homomorphisms() {
        let (g, hol) = setup("C4", "C4");
        let f = trivial_f(&g, &hol);
        let bij = crossed_homomorphisms(&hol, &f, true).unwrap();
        assert_eq!(bij.len(), 2);
        let all = crossed_homomorphisms(&hol, &f, false).unwrap();
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|c| c.verify_full()));

        let (g, hol) = setup("C4", "V4");
        let f = trivial_f(&g, &hol);
        assert!(crossed_homomorphisms(&hol, &f, true).unwrap().is_empty());
    }

    #[test]
    fn h_of_identity_is_conjugation() {
        let (g, hol) = setup("S3", "S3");
        let f = trivial_f(&g, &hol);
        let c = CrossedHom::new(f, (0..6).collect(), hol.aut().clone()).unwrap();
        let h = derive_h(&c).unwrap();
        assert_eq!(h.kernel(), g.center());
        for x in 0..6 {
            assert_eq!(h.apply(x), hol.aut().inner_of(x));
        }
    }

    #[test]
    fn rejects_bad_crossed_maps() {
        let (g, hol) = setup("C4", "C4");
        let f = trivial_f(&g, &hol);
        assert!(CrossedHom::new(f.clone(), vec![0, 2, 1, 3], hol.aut().clone()).is_err());
        assert!(CrossedHom::new(f, vec![0, 1], hol.aut().clone()).is_err());
    }

    #[test]
    fn properties_hold_on_small_groups() {
        for (gs, ns) in [("S3", "S3"), ("S3", "C6"), ("D4", "Q8"), ("C4xC2", "D4"), ("Q8", "D4")] {
            let (g, hol) = setup(gs, ns);
            for f in enumerate_homomorphisms(&g, hol.aut().carrier(), None, None) {
                for c in crossed_homomorphisms(&hol, &f, false).unwrap() {
                    assert!(c.verify_full(), "{gs} {ns}");
                    check_h_properties(&c).unwrap();
                    if c.is_bijective() {
                        let d = c.subgroup().unwrap();
                        let elements = d.elements();
                        for &a in &elements {
                            for &b in &elements {
                                assert!(d.contains(hol.mul(a, b)));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn full_and_bijective_enumeration_agree() {
        let (g, hol) = setup("D4", "C4xC2");
        for f in enumerate_homomorphisms(&g, hol.aut().carrier(), None, None) {
            let all = crossed_homomorphisms(&hol, &f, false).unwrap();
            let bij = crossed_homomorphisms(&hol, &f, true).unwrap();
            let filtered: Vec<_> = all.into_iter().filter(|c| c.is_bijective()).collect();
            assert_eq!(filtered, bij);
        }
    }
}
