//! The groups between Inn(A6) and Aut(A6).
//!
//! Aut(A6) is computed by automorphism search. Its derived subgroup is
//! Inn(A6) with quotient C2×C2, so the three index-2 overgroups of
//! Inn(A6) are the preimages of the three order-2 subgroups of that
//! quotient. They are told apart by element orders on the outer coset:
//! no involutions for M10, elements of order 6 for S6, and the remaining
//! one is PGL(2,9). Both named labels are confirmed by explicit
//! isomorphisms to independent constructions.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{HgsError, Result};
use crate::group::{are_isomorphic, FiniteGroup, Limits, Region, Subgroup};
use crate::morphisms::{automorphism_group, AutomorphismGroup};

use super::{alternating, matrix, symmetric};

#[derive(Clone, Debug, Serialize)]
pub struct TowerEntry {
    pub label: String,
    #[serde(skip)]
    pub subgroup: Subgroup,
    #[serde(skip)]
    pub group: Arc<FiniteGroup>,
    pub order: usize,
    pub outer_involutions: usize,
    pub outer_order6: usize,
    pub outer_order8: usize,
}

pub struct Aut6Tower {
    pub a6: Arc<FiniteGroup>,
    pub aut: Arc<AutomorphismGroup>,
    /// `Inn(A6)`, `S6`, `PGL(2,9)`, `M10`, `Aut(A6)`, in that order.
    pub entries: Vec<TowerEntry>,
}

impl Aut6Tower {
    pub fn entry(&self, label: &str) -> Option<&TowerEntry> {
        self.entries.iter().find(|e| e.label == label)
    }

    pub fn build(limits: &Limits) -> Result<Aut6Tower> {
        let a6 = Arc::new(alternating(6, limits)?);
        let aut = Arc::new(automorphism_group(&a6, limits)?);
        let carrier = aut.carrier().clone();
        if carrier.order() != 1440 || aut.inner().order() != 360 {
            return Err(HgsError::Internal(format!(
                "|Aut(A6)| = {}, |Inn(A6)| = {}",
                carrier.order(),
                aut.inner().order()
            )));
        }
        let derived = carrier.derived_subgroup();
        if derived != *aut.inner() {
            return Err(HgsError::Internal("derived subgroup of Aut(A6) is not Inn(A6)".into()));
        }
        let (quot, proj) = carrier.quotient(&derived)?;
        if quot.order() != 4 || (1..4).any(|x| quot.elt_order(x) != 2) {
            return Err(HgsError::Internal("Out(A6) is not a Klein four-group".into()));
        }

        let overgroup = |t: usize| -> TowerEntry {
            let members: Vec<usize> = (0..carrier.order()).filter(|&a| proj[a] == 0 || proj[a] == t).collect();
            let sub = Subgroup::from_members(carrier.order(), members);
            let census = |k| outer_census(&carrier, &sub, aut.inner(), k);
            let (group, _) = carrier.subgroup_as_group(&sub);
            TowerEntry {
                label: String::new(),
                order: sub.order(),
                outer_involutions: census(2),
                outer_order6: census(6),
                outer_order8: census(8),
                subgroup: sub,
                group: Arc::new(group),
            }
        };
        let mut middle: Vec<TowerEntry> = (1..4).map(overgroup).collect();

        let m10 = pick(&middle, |e| e.outer_involutions == 0)?;
        let s6 = pick(&middle, |e| e.outer_order6 > 0)?;
        if m10 == s6 {
            return Err(HgsError::Internal("tower labels collide".into()));
        }
        let pgl = 3 - m10 - s6;
        middle[m10].label = "M10".into();
        middle[s6].label = "S6".into();
        middle[pgl].label = "PGL(2,9)".into();

        let s6_ref = Arc::new(symmetric(6, limits)?);
        let pgl_ref = Arc::new(matrix::projective_general_linear(9, limits)?);
        for (idx, reference) in [(s6, &s6_ref), (pgl, &pgl_ref)] {
            let e = &middle[idx];
            let named = e.group.clone().with_label(&e.label);
            if are_isomorphic(&named, reference).is_none() {
                return Err(HgsError::Internal(format!(
                    "tower subgroup labeled {} is not isomorphic to {}",
                    e.label,
                    reference.label()
                )));
            }
        }
        let m10_group = &middle[m10].group;
        if are_isomorphic(m10_group, &s6_ref).is_some() || are_isomorphic(m10_group, &pgl_ref).is_some() {
            return Err(HgsError::Internal("M10 candidate matches S6 or PGL(2,9)".into()));
        }
        for e in &mut middle {
            e.group = e.group.clone().with_label(&e.label);
        }

        let (inn_group, _) = carrier.subgroup_as_group(aut.inner());
        let inn = TowerEntry {
            label: "Inn(A6)".into(),
            order: 360,
            outer_involutions: 0,
            outer_order6: 0,
            outer_order8: 0,
            subgroup: aut.inner().clone(),
            group: Arc::new(inn_group.with_name("Inn(A6)")),
        };
        let top = TowerEntry {
            label: "Aut(A6)".into(),
            order: 1440,
            outer_involutions: carrier.order_census(2, Region::Outside(aut.inner())),
            outer_order6: carrier.order_census(6, Region::Outside(aut.inner())),
            outer_order8: carrier.order_census(8, Region::Outside(aut.inner())),
            subgroup: Subgroup::whole(1440),
            group: carrier.clone().with_label("Aut(A6)"),
        };
        let mut entries = vec![inn];
        for label in ["S6", "PGL(2,9)", "M10"] {
            let i = middle.iter().position(|e| e.label == label).expect("labeled above");
            entries.push(middle[i].clone());
        }
        entries.push(top);
        Ok(Aut6Tower { a6, aut, entries })
    }
}

/// Elements of order `k` in `sub` but outside `inner`.
fn outer_census(carrier: &FiniteGroup, sub: &Subgroup, inner: &Subgroup, k: usize) -> usize {
    sub.members()
        .iter()
        .filter(|&&x| !inner.contains(x) && carrier.elt_order(x) == k)
        .count()
}

fn pick(entries: &[TowerEntry], pred: impl Fn(&TowerEntry) -> bool) -> Result<usize> {
    let hits: Vec<usize> = (0..entries.len()).filter(|&i| pred(&entries[i])).collect();
    match hits.as_slice() {
        [i] => Ok(*i),
        _ => Err(HgsError::Internal(format!(
            "expected exactly one overgroup matching the outer-coset statistic, found {}",
            hits.len()
        ))),
    }
}

trait WithLabel {
    fn with_label(self, label: &str) -> Arc<FiniteGroup>;
}

impl WithLabel for Arc<FiniteGroup> {
    fn with_label(self, label: &str) -> Arc<FiniteGroup> {
        Arc::new(Arc::unwrap_or_clone(self).with_name(label))
    }
}
