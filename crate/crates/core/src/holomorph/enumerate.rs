use std::collections::BTreeSet;
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{exact_div, HgsError, Result};
use crate::group::{FiniteGroup, Limits};
use crate::morphisms::{automorphism_group, HomSearch};
use crate::search::{CrossedRule, EdgePlan};

use super::crossed::CrossedHom;
use super::{Checkpoint, HolSubgroup, Holomorph, CONVENTION};

#[derive(Clone, Debug)]
pub struct EnumOptions {
    /// Keep the distinct regular subgroups, not just the count.
    pub collect_subgroups: bool,
    /// Re-check every bijective crossed homomorphism on all `|G|²` pairs.
    /// The word-tree extension already checks every Cayley-graph edge,
    /// which is complete; this is a second, independent check.
    pub verify_pairs: bool,
    /// Where progress is written after each batch of `f`.
    pub checkpoint: Option<PathBuf>,
    /// Continue from the checkpoint file if it exists.
    pub resume: bool,
    /// Number of `f` processed between checkpoint writes.
    pub batch: usize,
    /// Stop with an error after this many `f` (for resume testing).
    pub stop_after: Option<usize>,
    pub limits: Limits,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            collect_subgroups: false,
            verify_pairs: true,
            checkpoint: None,
            resume: false,
            batch: 64,
            stop_after: None,
            limits: Limits::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RegularCount {
    /// Number of pairs `(f, g)` with `g` bijective.
    pub pair_count: u64,
    /// Regular subgroups of `Hol(N)` isomorphic to `G`.
    pub subgroup_count: u64,
    pub aut_g_order: usize,
    pub aut_n_order: usize,
    /// Size of `Hom(G, Aut(N))`.
    pub f_total: usize,
    /// The `f` index the run resumed after, if it did.
    pub resumed_after: Option<usize>,
    pub checkpoint_id: Option<String>,
    /// Sorted, present when requested.
    pub subgroups: Vec<HolSubgroup>,
}

/// Counts regular subgroups of `Hol(N)` isomorphic to `G` by enumerating
/// every `f ∈ Hom(G, Aut(N))` and every bijective crossed homomorphism for
/// it. Each subgroup arises from exactly `|Aut(G)|` pairs.
pub fn regular_subgroups_in_holomorph(hol: &Holomorph, g: &Arc<FiniteGroup>, opts: &EnumOptions) -> Result<RegularCount> {
    let n = hol.base();
    if g.order() != n.order() {
        return Err(HgsError::Precondition(format!(
            "|G| = {} differs from |N| = {}",
            g.order(),
            n.order()
        )));
    }
    if opts.resume && opts.collect_subgroups {
        return Err(HgsError::Precondition("subgroup lists are not kept in checkpoints".into()));
    }
    let aut_g = automorphism_group(g, &opts.limits)?;
    let aut = hol.aut();
    let fs = HomSearch::new(g, aut.carrier()).collect();

    let mut pair_count = 0u64;
    let mut start = 0usize;
    let mut resumed_after = None;
    let mut last_ck = None;
    let fresh = Checkpoint {
        g_digest: g.digest(),
        n_digest: n.digest(),
        convention: CONVENTION.into(),
        last_f: None,
        pair_count: 0,
    };
    if let (Some(path), true) = (&opts.checkpoint, opts.resume) {
        if path.exists() {
            let ck = Checkpoint::load(path)?;
            if ck.g_digest != fresh.g_digest || ck.n_digest != fresh.n_digest || ck.convention != fresh.convention {
                return Err(HgsError::Checkpoint(format!(
                    "{} belongs to a different (G, N) pair or convention",
                    path.display()
                )));
            }
            if let Some(last) = ck.last_f {
                if last >= fs.len() {
                    return Err(HgsError::Checkpoint(format!("last_f {last} out of range")));
                }
                start = last + 1;
                resumed_after = Some(last);
            }
            pair_count = ck.pair_count;
            last_ck = Some(ck.id());
        }
    }

    let plan = EdgePlan::new(g);
    let all: Vec<u16> = (0..n.order() as u16).collect();
    let mut subgroups: BTreeSet<HolSubgroup> = BTreeSet::new();
    let batch = opts.batch.max(1);
    let mut i = start;
    while i < fs.len() {
        let end = (i + batch).min(fs.len());
        let results: Vec<Result<(u64, Vec<HolSubgroup>)>> = fs[i..end]
            .par_iter()
            .map(|f| {
                let rule = CrossedRule {
                    target: n,
                    action: aut.action_table(),
                    f: f.images(),
                };
                let cands: Vec<Vec<u16>> = (0..plan.gens().len())
                    .map(|k| plan.cyclic_filter(g, &rule, k, &all, true))
                    .collect();
                let outer = cands.first().map_or(1, |c| c.len());
                let mut count = 0u64;
                let mut found = BTreeSet::new();
                let mut bad = false;
                let _ = plan.search_range(&rule, &cands, n.order(), true, 0..outer, &mut |_, out| {
                    count += 1;
                    if opts.verify_pairs || opts.collect_subgroups {
                        let c = CrossedHom::from_raw(f.clone(), out.to_vec(), aut.clone());
                        if opts.verify_pairs && !(c.is_bijective() && c.verify_full()) {
                            bad = true;
                            return ControlFlow::Break(());
                        }
                        if opts.collect_subgroups {
                            found.insert(c.subgroup().expect("bijective"));
                        }
                    }
                    ControlFlow::Continue(())
                });
                if bad {
                    return Err(HgsError::Internal("crossed homomorphism failed the pair check".into()));
                }
                Ok((count, found.into_iter().collect()))
            })
            .collect();
        for r in results {
            let (c, subs) = r?;
            pair_count += c;
            subgroups.extend(subs);
        }
        if let Some(path) = &opts.checkpoint {
            let ck = Checkpoint {
                last_f: Some(end - 1),
                pair_count,
                ..fresh.clone()
            };
            ck.save(path)?;
            last_ck = Some(ck.id());
        }
        i = end;
        if let Some(stop) = opts.stop_after {
            if i >= stop && i < fs.len() {
                return Err(HgsError::Checkpoint(format!("stopped after {i} of {} homomorphisms", fs.len())));
            }
        }
    }

    let subgroup_count = exact_div(pair_count, aut_g.order() as u64, "pair count / |Aut(G)|")?;
    if opts.collect_subgroups && subgroups.len() as u64 != subgroup_count {
        return Err(HgsError::Internal(format!(
            "{} distinct subgroups but {subgroup_count} by pair count",
            subgroups.len()
        )));
    }
    Ok(RegularCount {
        pair_count,
        subgroup_count,
        aut_g_order: aut_g.order(),
        aut_n_order: aut.order(),
        f_total: fs.len(),
        resumed_after,
        checkpoint_id: last_ck,
        subgroups: subgroups.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;

    fn count(g: &str, n: &str, opts: &EnumOptions) -> RegularCount {
        let c = Catalog::new(Limits::default());
        let g = c.resolve(g).unwrap();
        let n = c.resolve(n).unwrap();
        let hol = Holomorph::build(&n, &Limits::default()).unwrap();
        regular_subgroups_in_holomorph(&hol, &g, opts).unwrap()
    }

    #[test]
    fn klein_and_cyclic_fixtures() {
        let opts = EnumOptions {
            collect_subgroups: true,
            ..EnumOptions::default()
        };
        let r = count("C4", "V4", &opts);
        assert_eq!(r.subgroup_count, 3);
        assert_eq!(r.subgroups.len(), 3);
        let r = count("V4", "C4", &opts);
        assert_eq!(r.subgroup_count, 1);
        let r = count("C2", "C2", &opts);
        assert_eq!(r.subgroup_count, 1);
        let r = count("C1", "C1", &opts);
        assert_eq!(r.subgroup_count, 1);
    }

    #[test]
    fn resume_gives_identical_counts() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("d4q8.ckpt");
        let base = count("D4", "C2xC2xC2", &EnumOptions::default());
        let interrupted = EnumOptions {
            checkpoint: Some(path.clone()),
            batch: 3,
            stop_after: Some(6),
            ..EnumOptions::default()
        };
        let c = Catalog::new(Limits::default());
        let g = c.resolve("D4").unwrap();
        let hol = Holomorph::build(&c.resolve("C2xC2xC2").unwrap(), &Limits::default()).unwrap();
        let err = regular_subgroups_in_holomorph(&hol, &g, &interrupted).unwrap_err();
        assert!(matches!(err, HgsError::Checkpoint(_)));
        let ck = Checkpoint::load(&path).unwrap();
        assert_eq!(ck.last_f, Some(5));
        let resumed = regular_subgroups_in_holomorph(
            &hol,
            &g,
            &EnumOptions {
                checkpoint: Some(path.clone()),
                resume: true,
                batch: 3,
                ..EnumOptions::default()
            },
        )
        .unwrap();
        assert_eq!(resumed.resumed_after, Some(5));
        assert_eq!(resumed.pair_count, base.pair_count);
        assert_eq!(resumed.subgroup_count, base.subgroup_count);
    }

    #[test]
    fn checkpoint_for_other_groups_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.ckpt");
        let c = Catalog::new(Limits::default());
        let opts = EnumOptions {
            checkpoint: Some(path.clone()),
            resume: true,
            ..EnumOptions::default()
        };
        let hol = Holomorph::build(&c.resolve("C4").unwrap(), &Limits::default()).unwrap();
        regular_subgroups_in_holomorph(&hol, &c.resolve("V4").unwrap(), &opts).unwrap();
        let hol2 = Holomorph::build(&c.resolve("V4").unwrap(), &Limits::default()).unwrap();
        let err = regular_subgroups_in_holomorph(&hol2, &c.resolve("C4").unwrap(), &opts).unwrap_err();
        assert!(matches!(err, HgsError::Checkpoint(_)));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let c = Catalog::new(Limits::default());
        let hol = Holomorph::build(&c.resolve("C4").unwrap(), &Limits::default()).unwrap();
        assert!(regular_subgroups_in_holomorph(&hol, &c.resolve("C6").unwrap(), &EnumOptions::default()).is_err());
    }
}
