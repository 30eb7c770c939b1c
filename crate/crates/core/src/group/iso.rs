use std::collections::BTreeMap;
use std::ops::ControlFlow;
use std::sync::Arc;

use serde::Serialize;

use super::FiniteGroup;
use crate::morphisms::Homomorphism;
use crate::search::{EdgePlan, HomRule};

/// Isomorphism invariants compared before any backtracking.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    /// `(element order, count)` pairs.
    pub census: Vec<(usize, usize)>,
    pub center: usize,
    pub abelianization: usize,
    /// `(element order, class size, number of classes)` triples.
    pub classes: Vec<(usize, usize, usize)>,
}

pub fn fingerprint(g: &FiniteGroup) -> Fingerprint {
    let mut census: BTreeMap<usize, usize> = BTreeMap::new();
    for x in 0..g.order() {
        *census.entry(g.elt_order(x)).or_default() += 1;
    }
    let mut classes: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for c in &g.conjugacy_classes().classes {
        *classes.entry((g.elt_order(c[0]), c.len())).or_default() += 1;
    }
    Fingerprint {
        order: g.order(),
        census: census.into_iter().collect(),
        center: g.center().order(),
        abelianization: g.order() / g.derived_subgroup().order(),
        classes: classes.into_iter().map(|((o, s), k)| (o, s, k)).collect(),
    }
}

/// An explicit isomorphism `g -> h`, or `None` if there is none.
///
/// Fingerprints rule out most pairs; otherwise generator images are tried
/// among elements of matching order and class size, and any candidate
/// that survives the word-tree extension is checked on all pairs.
pub fn are_isomorphic(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>) -> Option<Homomorphism> {
    if g.order() != h.order() {
        return None;
    }
    if fingerprint(g) != fingerprint(h) {
        return None;
    }
    let plan = EdgePlan::new(g);
    let cands: Vec<Vec<u16>> = plan
        .gens()
        .iter()
        .map(|&s| {
            (0..h.order() as u16)
                .filter(|&t| {
                    h.elt_order(t as usize) == g.elt_order(s) && h.class_size(t as usize) == g.class_size(s)
                })
                .collect()
        })
        .collect();
    let rule = HomRule { target: h };
    let mut result = None;
    let outer = cands.first().map_or(1, |c| c.len());
    let _ = plan.search_range(&rule, &cands, h.order(), true, 0..outer, &mut |_, out| {
        let map = Homomorphism::from_raw(g.clone(), h.clone(), out.to_vec());
        if map.verify_full() {
            result = Some(map);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    result
}
