//! Structural classification and the necessary conditions a candidate
//! type `N` must meet for `e(G, N)` to be non-zero, when `G` is almost
//! simple with socle `A` of prime index `p`.
//!
//! Non-perfect `N` must be `A×C_p` or almost simple with socle `A`. Both
//! shapes hold exactly when `N` has a normal subgroup of index `p`
//! isomorphic to `A` (its centralizer is then trivial or a complement of
//! order `p`), which is what the exclusion certificate records.
//!
//! Perfect `N` must meet four conditions:
//!
//! 1. `N` is quasisimple and `N/Z(N) ≅ A`;
//! 2. some automorphism of `A` has exactly `p` fixed points;
//! 3. some `ζ̃Z(N)` of order `p` in `N/Z(N)` has
//!    `[η, ζ̃] ∈ Z(N) ⇒ [η, ζ̃] = 1` for all `η ∈ N`;
//! 4. if `Aut(N)` fixes `Z(N)` pointwise, some `ζ ∈ A` of order `p`
//!    commutes with some `σ ∈ G∖A`.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{HgsError, Result};
use crate::group::{are_isomorphic, FiniteGroup, Limits, Region, Subgroup};
use crate::morphisms::automorphism_group;
use crate::perm::is_prime;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum StructureKind {
    Abelian,
    SolvableOther,
    Simple,
    AlmostSimple { socle_order: usize, index: usize },
    Quasisimple { center_order: usize, quotient_order: usize },
    DirectProductSimpleCyclic { simple_order: usize, p: usize },
    PerfectOther,
    Other,
}

/// A verdict with the subgroups it rests on.
///
/// Witnesses: the socle for almost simple groups, the center for
/// quasisimple groups, and `(A, C_p)` for direct products.
#[derive(Clone, Debug, Serialize)]
pub struct StructureClass {
    #[serde(flatten)]
    pub kind: StructureKind,
    #[serde(skip)]
    pub witnesses: Vec<Subgroup>,
}

impl StructureClass {
    fn plain(kind: StructureKind) -> StructureClass {
        StructureClass {
            kind,
            witnesses: Vec::new(),
        }
    }

    /// `(A, p)` when the group is almost simple with socle of prime index.
    pub fn socle_prime_index(&self) -> Option<(&Subgroup, usize)> {
        match self.kind {
            StructureKind::AlmostSimple { index, .. } if is_prime(index) => Some((&self.witnesses[0], index)),
            _ => None,
        }
    }

    /// Re-derives the verdict from the witnesses alone.
    pub fn recheck(&self, g: &FiniteGroup, limits: &Limits) -> Result<bool> {
        Ok(match &self.kind {
            StructureKind::Abelian => g.is_abelian(),
            StructureKind::AlmostSimple { socle_order, index } => {
                let s = &self.witnesses[0];
                s.order() == *socle_order
                    && s.index() == *index
                    && g.is_normal(s)
                    && is_nonabelian_simple(g, s, limits)?
                    && g.centralizer_of_subgroup(s).is_trivial()
            }
            StructureKind::Quasisimple { center_order, .. } => {
                let z = &self.witnesses[0];
                *z == g.center() && z.order() == *center_order && g.is_perfect() && {
                    let (q, _) = g.quotient(z)?;
                    q.is_simple(limits)?
                }
            }
            StructureKind::DirectProductSimpleCyclic { simple_order, p } => {
                let (a, c) = (&self.witnesses[0], &self.witnesses[1]);
                a.order() == *simple_order
                    && c.order() == *p
                    && a.order() * c.order() == g.order()
                    && a.intersection(c).is_trivial()
                    && g.is_normal(a)
                    && c.is_subset_of(&g.center())
                    && is_nonabelian_simple(g, a, limits)?
            }
            StructureKind::Simple => g.is_simple(limits)? && !g.is_abelian(),
            StructureKind::SolvableOther => g.is_solvable() && !g.is_abelian(),
            StructureKind::PerfectOther => g.is_perfect(),
            StructureKind::Other => true,
        })
    }
}

fn is_nonabelian_simple(g: &FiniteGroup, s: &Subgroup, limits: &Limits) -> Result<bool> {
    let (sg, _) = g.subgroup_as_group(s);
    Ok(!sg.is_abelian() && sg.is_simple(limits)?)
}

pub fn classify_group(g: &FiniteGroup, limits: &Limits) -> Result<StructureClass> {
    if g.is_abelian() {
        return Ok(StructureClass::plain(StructureKind::Abelian));
    }
    let proper = g.proper_nontrivial_normal_subgroups(limits)?;
    if proper.is_empty() {
        return Ok(StructureClass::plain(StructureKind::Simple));
    }
    if g.is_perfect() {
        let z = g.center();
        if !z.is_trivial() {
            let (q, _) = g.quotient(&z)?;
            if q.is_simple(limits)? {
                return Ok(StructureClass {
                    kind: StructureKind::Quasisimple {
                        center_order: z.order(),
                        quotient_order: q.order(),
                    },
                    witnesses: vec![z],
                });
            }
        }
        return Ok(StructureClass::plain(StructureKind::PerfectOther));
    }
    if g.is_solvable() {
        return Ok(StructureClass::plain(StructureKind::SolvableOther));
    }

    let minimal: Vec<&Subgroup> = proper
        .iter()
        .filter(|m| !proper.iter().any(|k| k.order() < m.order() && k.is_subset_of(m)))
        .collect();
    if let [m] = minimal[..] {
        if is_nonabelian_simple(g, m, limits)? && g.centralizer_of_subgroup(m).is_trivial() {
            return Ok(StructureClass {
                kind: StructureKind::AlmostSimple {
                    socle_order: m.order(),
                    index: m.index(),
                },
                witnesses: vec![m.clone()],
            });
        }
    }

    let z = g.center();
    if is_prime(z.order()) {
        for a in proper.iter().filter(|a| a.index() == z.order()) {
            if a.intersection(&z).is_trivial() && is_nonabelian_simple(g, a, limits)? {
                return Ok(StructureClass {
                    kind: StructureKind::DirectProductSimpleCyclic {
                        simple_order: a.order(),
                        p: z.order(),
                    },
                    witnesses: vec![a.clone(), z],
                });
            }
        }
    }
    Ok(StructureClass::plain(StructureKind::Other))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tri {
    Holds,
    Fails,
    NotApplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct Condition {
    pub status: Tri,
    pub detail: String,
    /// Element indices backing the status; their meaning is in `detail`.
    pub witness: Vec<usize>,
}

impl Condition {
    fn na() -> Condition {
        Condition {
            status: Tri::NotApplicable,
            detail: "N is not perfect".into(),
            witness: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum ShapeVerdict {
    /// Non-perfect and of shape `A×C_p` or almost simple with socle `A`.
    AllowedShape { shape: String },
    /// Perfect and every applicable condition holds.
    AllowedShapePerfect,
    Excluded { reason: String },
}

/// Independently checkable evidence for an exclusion.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "certificate", rename_all = "kebab-case")]
pub enum Certificate {
    /// Every normal subgroup of index `p` in `N`; none is isomorphic to `A`.
    NoNormalCopyOfSocle { index_p_normals: Vec<Vec<usize>> },
    /// For each order-`p` coset `ζ̃Z(N)` a pair `(ζ̃, η)` with
    /// `[η, ζ̃] ∈ Z(N)` but `[η, ζ̃] ≠ 1`.
    LiftingFails { pairs: Vec<(usize, usize)> },
    /// The named condition fails; its detail carries the reason.
    ConditionFails { condition: u8 },
}

#[derive(Clone, Debug, Serialize)]
pub struct ScreeningReport {
    pub g: String,
    pub n: String,
    pub p: usize,
    pub n_perfect: bool,
    pub n_class: StructureKind,
    #[serde(flatten)]
    pub verdict: ShapeVerdict,
    pub certificate: Option<Certificate>,
    pub cond1: Condition,
    pub cond2: Condition,
    pub cond3: Condition,
    pub cond4: Condition,
}

impl ScreeningReport {
    pub fn excluded(&self) -> bool {
        matches!(self.verdict, ShapeVerdict::Excluded { .. })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// The socle `A` and prime `p` of an almost simple `G`, or a precondition
/// error.
pub fn socle_and_prime(g: &FiniteGroup, limits: &Limits) -> Result<(Subgroup, usize)> {
    let class = classify_group(g, limits)?;
    class
        .socle_prime_index()
        .map(|(a, p)| (a.clone(), p))
        .ok_or_else(|| {
            HgsError::Precondition(format!(
                "{} is not almost simple with socle of prime index ({:?})",
                g.label(),
                class.kind
            ))
        })
}

pub fn screen_candidate(g: &Arc<FiniteGroup>, n: &Arc<FiniteGroup>, limits: &Limits) -> Result<ScreeningReport> {
    let (a_sub, p) = socle_and_prime(g, limits)?;
    if g.order() != n.order() {
        return Err(HgsError::Precondition(format!(
            "|G| = {} differs from |N| = {}",
            g.order(),
            n.order()
        )));
    }
    let a = Arc::new(g.subgroup_as_group(&a_sub).0.with_name("A"));
    let n_class = classify_group(n, limits)?;
    let mut report = ScreeningReport {
        g: g.label(),
        n: n.label(),
        p,
        n_perfect: n.is_perfect(),
        n_class: n_class.kind.clone(),
        verdict: ShapeVerdict::AllowedShapePerfect,
        certificate: None,
        cond1: Condition::na(),
        cond2: Condition::na(),
        cond3: Condition::na(),
        cond4: Condition::na(),
    };

    if !report.n_perfect {
        let normals: Vec<Subgroup> = n
            .normal_subgroups(limits)?
            .into_iter()
            .filter(|h| h.index() == p)
            .collect();
        let copy = normals.iter().find(|h| {
            let hg = Arc::new(n.subgroup_as_group(h).0);
            are_isomorphic(&hg, &a).is_some()
        });
        match copy {
            Some(h) => {
                let shape = if n.centralizer_of_subgroup(h).is_trivial() {
                    "almost simple with socle A"
                } else {
                    "A x C_p"
                };
                report.verdict = ShapeVerdict::AllowedShape { shape: shape.into() };
            }
            None => {
                report.verdict = ShapeVerdict::Excluded {
                    reason: "non-perfect and no normal subgroup of index p is isomorphic to A".into(),
                };
                report.certificate = Some(Certificate::NoNormalCopyOfSocle {
                    index_p_normals: normals.iter().map(|h| h.members().to_vec()).collect(),
                });
            }
        }
        return Ok(report);
    }

    report.cond1 = condition_quasisimple(n, &a, limits)?;
    report.cond2 = condition_fixed_points(&a, p, limits)?;
    let (cond3, pairs) = condition_lifting(n, p);
    report.cond3 = cond3;
    report.cond4 = condition_commuting(g, &a_sub, n, p, limits)?;

    let failing = [&report.cond1, &report.cond2, &report.cond3, &report.cond4]
        .iter()
        .position(|c| c.status == Tri::Fails);
    if let Some(i) = failing {
        let k = i as u8 + 1;
        report.verdict = ShapeVerdict::Excluded {
            reason: format!("perfect and condition {k} fails"),
        };
        report.certificate = Some(if k == 3 {
            Certificate::LiftingFails { pairs }
        } else {
            Certificate::ConditionFails { condition: k }
        });
    }
    Ok(report)
}

fn condition_quasisimple(n: &FiniteGroup, a: &Arc<FiniteGroup>, limits: &Limits) -> Result<Condition> {
    let z = n.center();
    let (q, _) = n.quotient(&z)?;
    let q = Arc::new(q);
    let (status, detail) = if !q.is_simple(limits)? {
        (Tri::Fails, format!("N/Z(N) of order {} is not simple", q.order()))
    } else if are_isomorphic(&q, a).is_none() {
        (Tri::Fails, format!("N/Z(N) of order {} is not isomorphic to A", q.order()))
    } else {
        (Tri::Holds, format!("|Z(N)| = {} and N/Z(N) is isomorphic to A", z.order()))
    };
    Ok(Condition {
        status,
        detail,
        witness: z.members().to_vec(),
    })
}

fn condition_fixed_points(a: &Arc<FiniteGroup>, p: usize, limits: &Limits) -> Result<Condition> {
    let aut = automorphism_group(a, limits)?;
    let hit = (0..aut.order()).into_par_iter().find_first(|&x| aut.fixed_point_count(x) == p);
    Ok(match hit {
        Some(x) => Condition {
            status: Tri::Holds,
            detail: format!("automorphism {x} of A fixes exactly {p} elements"),
            witness: vec![x],
        },
        None => Condition {
            status: Tri::Fails,
            detail: format!("none of the {} automorphisms of A fixes exactly {p} elements", aut.order()),
            witness: Vec::new(),
        },
    })
}

/// Order of `x` modulo the central subgroup `z`.
fn order_mod(n: &FiniteGroup, z: &Subgroup, x: usize) -> usize {
    let mut y = x;
    let mut k = 1;
    while !z.contains(y) {
        y = n.mul(y, x);
        k += 1;
    }
    k
}

/// Condition 3, plus one failure pair per order-`p` coset when it fails.
fn condition_lifting(n: &FiniteGroup, p: usize) -> (Condition, Vec<(usize, usize)>) {
    let z = n.center();
    let mut seen = vec![false; n.order()];
    let mut pairs = Vec::new();
    for x in 0..n.order() {
        if seen[x] || order_mod(n, &z, x) != p {
            continue;
        }
        for &c in z.members() {
            seen[n.mul(x, c)] = true;
        }
        let bad = (0..n.order()).find(|&eta| {
            let c = n.commutator(eta, x);
            c != 0 && z.contains(c)
        });
        match bad {
            None => {
                let cond = Condition {
                    status: Tri::Holds,
                    detail: format!("ζ̃ = {x} has order {p} mod Z(N) and every η commuting with it mod Z(N) commutes with it"),
                    witness: vec![x],
                };
                return (cond, Vec::new());
            }
            Some(eta) => pairs.push((x, eta)),
        }
    }
    let cond = Condition {
        status: Tri::Fails,
        detail: format!(
            "each of the {} cosets of order {p} in N/Z(N) has η commuting with ζ̃ only mod Z(N)",
            pairs.len()
        ),
        witness: pairs.iter().flat_map(|&(a, b)| [a, b]).collect(),
    };
    (cond, pairs)
}

fn condition_commuting(
    g: &FiniteGroup,
    a: &Subgroup,
    n: &Arc<FiniteGroup>,
    p: usize,
    limits: &Limits,
) -> Result<Condition> {
    let z = n.center();
    let aut_n = automorphism_group(n, limits)?;
    let pointwise = (0..aut_n.order()).all(|x| z.members().iter().all(|&c| aut_n.apply(x, c) == c));
    if !pointwise {
        return Ok(Condition {
            status: Tri::NotApplicable,
            detail: "Aut(N) moves some element of Z(N)".into(),
            witness: Vec::new(),
        });
    }
    for &zeta in a.members() {
        if g.elt_order(zeta) != p {
            continue;
        }
        if let Some(sigma) = (0..g.order()).find(|&s| !a.contains(s) && g.commute(s, zeta)) {
            return Ok(Condition {
                status: Tri::Holds,
                detail: format!("ζ = {zeta} in A of order {p} commutes with σ = {sigma} outside A"),
                witness: vec![zeta, sigma],
            });
        }
    }
    Ok(Condition {
        status: Tri::Fails,
        detail: format!("no element of order {p} in A commutes with an element outside A"),
        witness: Vec::new(),
    })
}

/// Re-verifies a condition-3 failure certificate from scratch: each pair
/// is a genuine counterexample, and the pairs cover every coset of order
/// `p` in `N/Z(N)`.
pub fn verify_lifting_certificate(n: &FiniteGroup, p: usize, pairs: &[(usize, usize)]) -> bool {
    let z = n.center();
    let coset = |x: usize| -> Vec<usize> {
        let mut c: Vec<usize> = z.members().iter().map(|&w| n.mul(x, w)).collect();
        c.sort_unstable();
        c
    };
    let mut covered: Vec<Vec<usize>> = Vec::new();
    for &(zeta, eta) in pairs {
        let c = n.mul(n.mul(n.inv(eta), n.inv(zeta)), n.mul(eta, zeta));
        if order_mod(n, &z, zeta) != p || c == 0 || !z.contains(c) {
            return false;
        }
        covered.push(coset(zeta));
    }
    covered.sort();
    covered.dedup();
    let mut all: Vec<Vec<usize>> = (0..n.order())
        .filter(|&x| order_mod(n, &z, x) == p)
        .map(coset)
        .collect();
    all.sort();
    all.dedup();
    covered == all
}

/// Re-verifies a non-perfect exclusion: the listed subgroups are exactly
/// the normal subgroups of index `p`, and none is isomorphic to `A`.
pub fn verify_shape_certificate(
    n: &FiniteGroup,
    a: &Arc<FiniteGroup>,
    p: usize,
    listed: &[Vec<usize>],
    limits: &Limits,
) -> Result<bool> {
    if n.is_perfect() {
        return Ok(false);
    }
    let mut actual: Vec<Vec<usize>> = n
        .normal_subgroups(limits)?
        .into_iter()
        .filter(|h| h.index() == p)
        .map(|h| h.members().to_vec())
        .collect();
    let mut listed = listed.to_vec();
    actual.sort();
    listed.sort();
    if actual != listed {
        return Ok(false);
    }
    Ok(listed.iter().all(|m| {
        let h = Subgroup::from_members(n.order(), m.clone());
        are_isomorphic(&Arc::new(n.subgroup_as_group(&h).0), a).is_none()
    }))
}

#[derive(Clone, Debug, Serialize)]
pub struct OvergroupCheck {
    pub order: usize,
    pub is_inner: bool,
    pub isomorphic_to_g: bool,
}

/// Whether `Inn(G)` is the only subgroup of `Aut(G)` isomorphic to `G`.
#[derive(Clone, Debug, Serialize)]
pub struct InnerUniqueness {
    pub holds: bool,
    /// `|Aut(G)| / |G|`.
    pub index: usize,
    /// The subgroups of `Aut(G)` of order `|G|` that were examined.
    pub candidates: Vec<OvergroupCheck>,
}

/// Decides whether `Inn(G)` is the unique copy of `G` in `Aut(G)`.
///
/// Only index 1 and 2 are searched: subgroups of index 2 are normal and
/// are the preimages of index-2 subgroups of the abelianization. Other
/// indices are reported as infeasible.
pub fn check_inner_uniqueness(g: &Arc<FiniteGroup>, limits: &Limits) -> Result<InnerUniqueness> {
    if !g.center().is_trivial() {
        return Err(HgsError::Precondition(format!(
            "{} has non-trivial center, so Inn(G) is not a copy of G",
            g.label()
        )));
    }
    let aut = automorphism_group(g, limits)?;
    let carrier = aut.carrier();
    let index = carrier.order() / g.order();
    match index {
        1 => Ok(InnerUniqueness {
            holds: true,
            index,
            candidates: vec![OvergroupCheck {
                order: g.order(),
                is_inner: true,
                isomorphic_to_g: true,
            }],
        }),
        2 => {
            let derived = carrier.derived_subgroup();
            let (ab, proj) = carrier.quotient(&derived)?;
            let mut candidates = Vec::new();
            for k in ab.normal_subgroups(limits)?.into_iter().filter(|k| k.index() == 2) {
                let members: Vec<usize> = (0..carrier.order()).filter(|&x| k.contains(proj[x])).collect();
                let h = Subgroup::from_members(carrier.order(), members);
                let hg = Arc::new(carrier.subgroup_as_group(&h).0);
                candidates.push(OvergroupCheck {
                    order: h.order(),
                    is_inner: h == *aut.inner(),
                    isomorphic_to_g: are_isomorphic(&hg, g).is_some(),
                });
            }
            let holds = candidates.iter().all(|c| c.is_inner || !c.isomorphic_to_g);
            Ok(InnerUniqueness {
                holds,
                index,
                candidates,
            })
        }
        _ => Err(HgsError::CapExceeded {
            what: "search for same-order subgroups of Aut(G) at this index".into(),
            size: index,
            cap: 2,
        }),
    }
}

/// `#{σ ∈ G∖A : σ has order p}` and `#{σ ∈ A : σ has order p}`.
pub fn prime_census(g: &FiniteGroup, a: &Subgroup, p: usize) -> (u64, u64) {
    (
        g.order_census(p, Region::Inside(a)) as u64,
        g.order_census(p, Region::Outside(a)) as u64,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;

    fn cat() -> Catalog {
        Catalog::new(Limits::default())
    }

    #[test]
    fn small_classifications() {
        let c = cat();
        let l = Limits::default();
        let kind = |s: &str| classify_group(&c.resolve(s).unwrap(), &l).unwrap().kind;
        assert_eq!(kind("C6"), StructureKind::Abelian);
        assert_eq!(kind("S4"), StructureKind::SolvableOther);
        assert_eq!(kind("A5"), StructureKind::Simple);
        assert_eq!(
            kind("S5"),
            StructureKind::AlmostSimple {
                socle_order: 60,
                index: 2
            }
        );
        assert_eq!(
            kind("AxCp(A5,2)"),
            StructureKind::DirectProductSimpleCyclic { simple_order: 60, p: 2 }
        );
        assert_eq!(
            kind("SL(2,5)"),
            StructureKind::Quasisimple {
                center_order: 2,
                quotient_order: 60
            }
        );
        let big = Limits {
            max_table: 4000,
            ..l
        };
        let a5a5 = Catalog::new(big).resolve("A5xA5").unwrap();
        assert_eq!(classify_group(&a5a5, &big).unwrap().kind, StructureKind::PerfectOther);
        assert_eq!(kind("S3xA5"), StructureKind::Other);
    }

    #[test]
    fn witnesses_recheck() {
        let c = cat();
        let l = Limits::default();
        for s in ["S5", "AxCp(A5,2)", "SL(2,5)", "A5", "C4", "S4"] {
            let g = c.resolve(s).unwrap();
            let class = classify_group(&g, &l).unwrap();
            assert!(class.recheck(&g, &l).unwrap(), "{s}");
        }
    }

    #[test]
    fn s5_against_order_120_types() {
        let c = cat();
        let l = Limits::default();
        let g = c.resolve("S5").unwrap();
        let r = screen_candidate(&g, &c.resolve("AxCp(A5,2)").unwrap(), &l).unwrap();
        assert_eq!(r.verdict, ShapeVerdict::AllowedShape { shape: "A x C_p".into() });
        let r = screen_candidate(&g, &g, &l).unwrap();
        assert!(matches!(r.verdict, ShapeVerdict::AllowedShape { .. }));
        let r = screen_candidate(&g, &c.resolve("C120").unwrap(), &l).unwrap();
        assert!(r.excluded());
        let Some(Certificate::NoNormalCopyOfSocle { index_p_normals }) = &r.certificate else {
            panic!("expected a shape certificate");
        };
        let a = Arc::new(g.subgroup_as_group(&g.derived_subgroup()).0);
        assert!(verify_shape_certificate(&c.resolve("C120").unwrap(), &a, 2, index_p_normals, &l).unwrap());
        assert!(screen_candidate(&g, &c.resolve("S4xC5").unwrap(), &l).unwrap().excluded());
    }

    #[test]
    fn double_cover_of_a5_fails_lifting() {
        let c = cat();
        let l = Limits::default();
        let g = c.resolve("S5").unwrap();
        let n = c.resolve("SL(2,5)").unwrap();
        let r = screen_candidate(&g, &n, &l).unwrap();
        assert_eq!(r.cond1.status, Tri::Holds);
        assert_eq!(r.cond3.status, Tri::Fails);
        assert!(r.excluded());
        let Some(Certificate::LiftingFails { pairs }) = &r.certificate else {
            panic!("expected a lifting certificate");
        };
        assert!(!pairs.is_empty());
        assert!(verify_lifting_certificate(&n, 2, pairs));
        // a tampered certificate is rejected
        let mut bad = pairs.clone();
        bad.pop();
        assert!(!verify_lifting_certificate(&n, 2, &bad));
        assert!(r.to_json().contains("\"lifting-fails\""));
    }

    #[test]
    fn not_almost_simple_is_rejected() {
        let c = cat();
        let l = Limits::default();
        let g = c.resolve("A5").unwrap();
        assert!(matches!(
            screen_candidate(&g, &g, &l),
            Err(HgsError::Precondition(_))
        ));
    }

    #[test]
    fn inner_uniqueness_for_s5() {
        let c = cat();
        let r = check_inner_uniqueness(&c.resolve("S5").unwrap(), &Limits::default()).unwrap();
        assert!(r.holds);
        assert_eq!(r.index, 1);
    }
}
