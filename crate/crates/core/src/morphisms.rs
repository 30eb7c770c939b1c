//! Homomorphisms, automorphism groups and exhaustive homomorphism
//! enumeration between small groups.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{HgsError, Result};
use crate::group::{FiniteGroup, Limits, Subgroup};
use crate::search::{EdgePlan, HomRule};

/// A total map between two groups, stored as its image sequence.
#[derive(Clone)]
pub struct Homomorphism {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<u16>,
}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Homomorphism")
            .field("source", &self.source.label())
            .field("target", &self.target.label())
            .field("images", &self.images)
            .finish()
    }
}

impl PartialEq for Homomorphism {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.source, &other.source)
            && same_group(&self.target, &other.target)
            && self.images == other.images
    }
}

impl Eq for Homomorphism {}

pub(crate) fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || (a.order() == b.order() && a.table() == b.table())
}

impl Homomorphism {
    /// Checks the image sequence against every pair of source elements.
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.order() || images.iter().any(|&x| x >= target.order()) {
            return Err(HgsError::InvalidGroup("image sequence has the wrong shape".into()));
        }
        let h = Homomorphism {
            source,
            target,
            images: images.into_iter().map(|x| x as u16).collect(),
        };
        if !h.verify_full() {
            return Err(HgsError::InvalidGroup("map is not multiplicative".into()));
        }
        Ok(h)
    }

    pub(crate) fn from_raw(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, images: Vec<u16>) -> Self {
        debug_assert_eq!(images.len(), source.order());
        Homomorphism { source, target, images }
    }

    pub fn identity(g: &Arc<FiniteGroup>) -> Self {
        Homomorphism::from_raw(g.clone(), g.clone(), (0..g.order() as u16).collect())
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    /// `images[xy] == images[x]·images[y]` for all pairs, and `images[0] == 0`.
    pub fn verify_full(&self) -> bool {
        let n = self.source.order();
        if self.images[0] != 0 {
            return false;
        }
        (0..n).into_par_iter().all(|x| {
            let ix = self.apply(x);
            let row = self.source.row(x);
            (0..n).all(|y| self.apply(row[y] as usize) == self.target.mul(ix, self.apply(y)))
        })
    }

    pub fn kernel(&self) -> Subgroup {
        Subgroup::from_members(
            self.source.order(),
            (0..self.source.order()).filter(|&x| self.images[x] == 0).collect(),
        )
    }

    pub fn image(&self) -> Subgroup {
        Subgroup::from_members(self.target.order(), self.images.iter().map(|&x| x as usize).collect())
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.source.order() == self.target.order()
    }

    /// `other ∘ self`
    pub fn then(&self, other: &Homomorphism) -> Result<Homomorphism> {
        if !same_group(&self.target, &other.source) {
            return Err(HgsError::Precondition("composing maps with mismatched groups".into()));
        }
        Ok(Homomorphism::from_raw(
            self.source.clone(),
            other.target.clone(),
            self.images.iter().map(|&x| other.images[x as usize]).collect(),
        ))
    }
}

/// Elements where `phi` and `psi` agree. The pair is fixed point free
/// exactly when this is `[0]`.
pub fn fixed_points(phi: &Homomorphism, psi: &Homomorphism) -> Result<Vec<usize>> {
    if !same_group(&phi.source, &psi.source) || !same_group(&phi.target, &psi.target) {
        return Err(HgsError::Precondition("fixed points of maps with different source/target".into()));
    }
    Ok((0..phi.source.order())
        .filter(|&x| phi.images[x] == psi.images[x])
        .collect())
}

/// Exhaustive enumeration of `Hom(source, target)` in a fixed order:
/// lexicographic in the candidate positions of the generator images.
pub struct HomSearch {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    plan: EdgePlan,
    cands: Vec<Vec<u16>>,
}

impl HomSearch {
    pub fn new(source: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>) -> Self {
        let plan = EdgePlan::new(source);
        let cands = plan
            .gens()
            .iter()
            .map(|&s| {
                let ord = source.elt_order(s);
                (0..target.order() as u16)
                    .filter(|&t| ord % target.elt_order(t as usize) == 0)
                    .collect()
            })
            .collect();
        HomSearch {
            source: source.clone(),
            target: target.clone(),
            plan,
            cands,
        }
    }

    /// Number of outer batches (candidates for the first generator).
    pub fn batches(&self) -> usize {
        self.cands.first().map_or(1, |c| c.len())
    }

    /// All homomorphisms from one outer batch, in order.
    pub fn batch(&self, index: usize) -> Vec<Homomorphism> {
        let rule = HomRule { target: &self.target };
        let mut found = Vec::new();
        let _ = self.plan.search_range(&rule, &self.cands, self.target.order(), false, index..index + 1, &mut |_, out| {
            found.push(out.to_vec());
            std::ops::ControlFlow::Continue(())
        });
        self.wrap(found)
    }

    pub fn collect(&self) -> Vec<Homomorphism> {
        let rule = HomRule { target: &self.target };
        let found = self.plan.search_collect(&rule, &self.cands, self.target.order(), false);
        self.wrap(found)
    }

    fn wrap(&self, found: Vec<Vec<u16>>) -> Vec<Homomorphism> {
        found
            .into_iter()
            .map(|images| {
                let h = Homomorphism::from_raw(self.source.clone(), self.target.clone(), images);
                assert!(h.verify_full(), "extension produced a non-homomorphism");
                h
            })
            .collect()
    }

    /// A resumable stream starting at batch `cursor`.
    pub fn stream(&self, cursor: usize) -> HomStream<'_> {
        HomStream {
            search: self,
            next_batch: cursor,
            pending: Vec::new().into_iter(),
        }
    }
}

/// Iterator over homomorphisms that can be checkpointed between batches.
pub struct HomStream<'a> {
    search: &'a HomSearch,
    next_batch: usize,
    pending: std::vec::IntoIter<Homomorphism>,
}

impl HomStream<'_> {
    /// The batch that will be read next once the pending ones drain.
    pub fn cursor(&self) -> usize {
        self.next_batch
    }

    pub fn next_batch(&mut self) -> Option<Vec<Homomorphism>> {
        if self.next_batch >= self.search.batches() {
            return None;
        }
        let out = self.search.batch(self.next_batch);
        self.next_batch += 1;
        Some(out)
    }
}

impl Iterator for HomStream<'_> {
    type Item = Homomorphism;

    fn next(&mut self) -> Option<Homomorphism> {
        loop {
            if let Some(h) = self.pending.next() {
                return Some(h);
            }
            let batch = self.next_batch()?;
            self.pending = batch.into_iter();
        }
    }
}

/// Every homomorphism `source -> target`, once each, in deterministic
/// order. `kernel_filter` keeps maps whose kernel equals the given
/// subgroup; `surjective_to` keeps maps whose image equals it.
pub fn enumerate_homomorphisms(
    source: &Arc<FiniteGroup>,
    target: &Arc<FiniteGroup>,
    kernel_filter: Option<&Subgroup>,
    surjective_to: Option<&Subgroup>,
) -> Vec<Homomorphism> {
    HomSearch::new(source, target)
        .collect()
        .into_iter()
        .filter(|h| kernel_filter.is_none_or(|k| h.kernel() == *k))
        .filter(|h| surjective_to.is_none_or(|s| h.image() == *s))
        .collect()
}

/// `Aut(base)` as a group in its own right, together with its action.
///
/// Carrier multiplication is composition: `carrier.mul(a, b)` is the
/// automorphism `x ↦ a(b(x))`. Index 0 is the identity automorphism.
pub struct AutomorphismGroup {
    base: Arc<FiniteGroup>,
    carrier: Arc<FiniteGroup>,
    action: Vec<u16>,
    inner_of: Vec<u16>,
    inner: Subgroup,
}

impl fmt::Debug for AutomorphismGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AutomorphismGroup")
            .field("base", &self.base.label())
            .field("order", &self.carrier.order())
            .field("inner", &self.inner.order())
            .finish()
    }
}

impl AutomorphismGroup {
    pub fn base(&self) -> &Arc<FiniteGroup> {
        &self.base
    }

    pub fn carrier(&self) -> &Arc<FiniteGroup> {
        &self.carrier
    }

    pub fn order(&self) -> usize {
        self.carrier.order()
    }

    /// Automorphism `a` applied to `x`.
    #[inline]
    pub fn apply(&self, a: usize, x: usize) -> usize {
        self.action[a * self.base.order() + x] as usize
    }

    pub(crate) fn action_table(&self) -> &[u16] {
        &self.action
    }

    /// Automorphism `a` as a map on the base group.
    pub fn automorphism(&self, a: usize) -> Homomorphism {
        let n = self.base.order();
        Homomorphism::from_raw(
            self.base.clone(),
            self.base.clone(),
            self.action[a * n..(a + 1) * n].to_vec(),
        )
    }

    /// Carrier index of conjugation `y ↦ x y x⁻¹`.
    pub fn inner_of(&self, x: usize) -> usize {
        self.inner_of[x] as usize
    }

    pub fn inner(&self) -> &Subgroup {
        &self.inner
    }

    /// Carrier index of the automorphism with the given images, if any.
    pub fn find(&self, images: &[u16]) -> Option<usize> {
        let n = self.base.order();
        (0..self.order()).find(|&a| &self.action[a * n..(a + 1) * n] == images)
    }

    pub fn fixed_point_count(&self, a: usize) -> usize {
        (0..self.base.order()).filter(|&x| self.apply(a, x) == x).count()
    }

    /// `α(H) = H` for every automorphism `α`.
    pub fn is_characteristic(&self, h: &Subgroup) -> bool {
        self.carrier
            .generators()
            .iter()
            .all(|&a| h.members().iter().all(|&x| h.contains(self.apply(a, x))))
    }
}

/// All automorphisms, found by backtracking over generator images with
/// candidates of matching element order and class size.
pub fn automorphism_group(g: &Arc<FiniteGroup>, limits: &Limits) -> Result<AutomorphismGroup> {
    let n = g.order();
    if n > limits.max_table {
        return Err(HgsError::CapExceeded {
            what: "automorphism search".into(),
            size: n,
            cap: limits.max_table,
        });
    }
    let plan = EdgePlan::new(g);
    let gens = plan.gens().to_vec();
    let cands: Vec<Vec<u16>> = gens
        .iter()
        .map(|&s| {
            (0..n as u16)
                .filter(|&t| {
                    g.elt_order(t as usize) == g.elt_order(s) && g.class_size(t as usize) == g.class_size(s)
                })
                .collect()
        })
        .collect();
    let rule = HomRule { target: g };
    let mut found = plan.search_collect(&rule, &cands, n, true);
    if found.len() > limits.max_table {
        return Err(HgsError::CapExceeded {
            what: "automorphism group".into(),
            size: found.len(),
            cap: limits.max_table,
        });
    }
    let is_identity = |imgs: &Vec<u16>| imgs.iter().enumerate().all(|(i, &x)| i == x as usize);
    let id_pos = found
        .iter()
        .position(is_identity)
        .ok_or_else(|| HgsError::Internal("identity automorphism not found".into()))?;
    let id = found.remove(id_pos);
    found.insert(0, id);
    let bad = found.par_iter().any(|imgs| {
        !Homomorphism::from_raw(g.clone(), g.clone(), imgs.clone()).verify_full()
    });
    if bad {
        return Err(HgsError::Internal("automorphism failed the pair check".into()));
    }

    let m = found.len();
    let key = |imgs: &[u16]| -> Vec<u16> { gens.iter().map(|&s| imgs[s]).collect() };
    let index: HashMap<Vec<u16>, u16> = found
        .iter()
        .enumerate()
        .map(|(i, imgs)| (key(imgs), i as u16))
        .collect();
    let mut table = vec![0u16; m * m];
    table
        .par_chunks_mut(m)
        .enumerate()
        .for_each(|(a, row)| {
            let fa = &found[a];
            for (b, slot) in row.iter_mut().enumerate() {
                let k: Vec<u16> = gens.iter().map(|&s| fa[found[b][s] as usize]).collect();
                *slot = index[&k];
            }
        });
    let carrier = Arc::new(
        FiniteGroup::from_flat_table_unchecked(m, table).with_name(format!("Aut({})", g.label())),
    );
    let inner_of: Vec<u16> = (0..n)
        .map(|x| {
            let k: Vec<u16> = gens.iter().map(|&s| g.conj(x, s) as u16).collect();
            index[&k]
        })
        .collect();
    let inner = Subgroup::from_members(m, inner_of.iter().map(|&a| a as usize).collect());
    let action: Vec<u16> = found.into_iter().flatten().collect();
    Ok(AutomorphismGroup {
        base: g.clone(),
        carrier,
        action,
        inner_of,
        inner,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlaggedSubgroup {
    pub subgroup: Subgroup,
    pub characteristic: bool,
}

/// Normal subgroups of `aut.base()`, each flagged characteristic or not.
pub fn normal_subgroups_flagged(aut: &AutomorphismGroup, limits: &Limits) -> Result<Vec<FlaggedSubgroup>> {
    Ok(aut
        .base()
        .normal_subgroups(limits)?
        .into_iter()
        .map(|h| FlaggedSubgroup {
            characteristic: aut.is_characteristic(&h),
            subgroup: h,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use crate::group::are_isomorphic;

    fn group(s: &str) -> Arc<FiniteGroup> {
        Catalog::new(Limits::default()).resolve(s).unwrap()
    }

    #[test]
    fn aut_a5() {
        let a5 = group("A5");
        let aut = automorphism_group(&a5, &Limits::default()).unwrap();
        assert_eq!(aut.order(), 120);
        assert_eq!(aut.inner().order(), 60);
        assert!(aut.carrier().check_axioms_exhaustively());
    }

    #[test]
    fn aut_small_groups() {
        let limits = Limits::default();
        for (s, n) in [("C4", 2), ("V4", 6), ("C2", 1), ("C1", 1), ("S3", 6), ("Q8", 24), ("D4", 8), ("C2xC2xC2", 168)] {
            let aut = automorphism_group(&group(s), &limits).unwrap();
            assert_eq!(aut.order(), n, "Aut({s})");
            assert!(aut.carrier().check_axioms_exhaustively(), "Aut({s}) table");
        }
    }

    #[test]
    fn aut_carrier_is_composition_and_faithful() {
        let g = group("D4");
        let aut = automorphism_group(&g, &Limits::default()).unwrap();
        let n = g.order();
        let mut seen = std::collections::HashSet::new();
        for a in 0..aut.order() {
            assert!(seen.insert(aut.action[a * n..(a + 1) * n].to_vec()));
            assert!(aut.automorphism(a).is_bijective());
            for b in 0..aut.order() {
                let ab = aut.carrier().mul(a, b);
                for x in 0..n {
                    assert_eq!(aut.apply(ab, x), aut.apply(a, aut.apply(b, x)));
                }
            }
        }
        for x in 0..n {
            let c = aut.inner_of(x);
            for y in 0..n {
                assert_eq!(aut.apply(c, y), g.conj(x, y));
            }
        }
        assert_eq!(aut.inner().order(), n / g.center().order());
    }

    #[test]
    fn trivial_homs() {
        let c2 = group("C2");
        let c3 = group("C3");
        let homs = enumerate_homomorphisms(&c2, &c3, None, None);
        assert_eq!(homs.len(), 1);
        assert!(homs[0].images().iter().all(|&x| x == 0));
        let homs = enumerate_homomorphisms(&group("A5"), &c2, None, None);
        assert_eq!(homs.len(), 1);
    }

    #[test]
    fn hom_counts_and_filters() {
        // Hom(C4, C4) has 4 elements, two of them bijective
        let c4 = group("C4");
        let homs = enumerate_homomorphisms(&c4, &c4, None, None);
        assert_eq!(homs.len(), 4);
        let whole = Subgroup::whole(4);
        assert_eq!(enumerate_homomorphisms(&c4, &c4, None, Some(&whole)).len(), 2);
        // Hom(S3, C2): trivial and sign
        let s3 = group("S3");
        assert_eq!(enumerate_homomorphisms(&s3, &group("C2"), None, None).len(), 2);
        // kernel filter: maps S5 -> S5 with kernel A5 are the 25 + 1 ... only nontrivial ones
        let s5 = group("S5");
        let a5 = s5.derived_subgroup();
        let k = enumerate_homomorphisms(&s5, &s5, Some(&a5), None);
        assert_eq!(k.len(), s5.order_census(2, crate::group::Region::All));
    }

    #[test]
    fn hom_stream_matches_collect() {
        let g = group("S3");
        let h = group("D4");
        let search = HomSearch::new(&g, &h);
        let all = search.collect();
        let streamed: Vec<Homomorphism> = search.stream(0).collect();
        assert_eq!(all, streamed);
        let mut stream = search.stream(0);
        let first = stream.next_batch().unwrap();
        let rest: Vec<Homomorphism> = search.stream(stream.cursor()).collect();
        assert_eq!([first, rest].concat(), all);
    }

    #[test]
    fn fixed_points_examples() {
        let a5 = group("A5");
        let aut = automorphism_group(&a5, &Limits::default()).unwrap();
        let id = aut.automorphism(0);
        assert_eq!(fixed_points(&id, &id).unwrap().len(), 60);
        let five = (0..60).find(|&x| a5.elt_order(x) == 5).unwrap();
        let conj = aut.automorphism(aut.inner_of(five));
        assert_eq!(fixed_points(&id, &conj).unwrap().len(), 5);
        let other = Homomorphism::identity(&group("A4"));
        assert!(fixed_points(&id, &other).is_err());
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = group("C4");
        let v4 = group("V4");
        assert!(are_isomorphic(&c4, &v4).is_none());
        let iso = are_isomorphic(&c4, &c4).unwrap();
        assert!(iso.verify_full() && iso.is_bijective());
        assert!(are_isomorphic(&group("S3"), &group("D3")).is_some());
        assert!(are_isomorphic(&group("D4"), &group("Q8")).is_none());
        assert!(are_isomorphic(&group("PGL(2,9)"), &group("S6")).is_none());
        assert!(are_isomorphic(&group("PSL(2,5)"), &group("A5")).is_some());
    }

    #[test]
    fn flagged_normal_subgroups() {
        let s5 = group("S5");
        let aut = automorphism_group(&s5, &Limits::default()).unwrap();
        let flagged = normal_subgroups_flagged(&aut, &Limits::default()).unwrap();
        let orders: Vec<(usize, bool)> = flagged.iter().map(|f| (f.subgroup.order(), f.characteristic)).collect();
        assert_eq!(orders, vec![(1, true), (60, true), (120, true)]);
    }
}
