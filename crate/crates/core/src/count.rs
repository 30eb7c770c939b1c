//! The counting routes for `e(G, N)`.
//!
//! Each route is independent of the others: the closed formulas read
//! element-order census data, the holomorph route enumerates crossed
//! homomorphisms, the fixed-point-free route enumerates `Hom(N, G)`, and
//! the brute route searches `Perm(G)` directly.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{exact_div, HgsError, Result};
use crate::group::{are_isomorphic, FiniteGroup, Limits};
use crate::holomorph::{regular_subgroups_in_holomorph, EnumOptions, Holomorph, RegularSubgroup};
use crate::morphisms::{automorphism_group, HomSearch};
use crate::perm::{for_each_permutation, Perm};
use crate::screen::{check_inner_uniqueness, classify_group, prime_census, socle_and_prime, StructureKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// `e(G, G)` from the census of order-`p` elements.
    FormulaSelf,
    /// `e(G, A×C_p)` from the census of order-`p` elements outside `A`.
    FormulaProduct,
    /// The symmetric-group formulas, by a scan of all of `S_n`.
    FormulaSn,
    Byott,
    FpfInhol,
    BrutePerm,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::FormulaSelf => "formula-self",
            Method::FormulaProduct => "formula-product",
            Method::FormulaSn => "formula-sn",
            Method::Byott => "byott",
            Method::FpfInhol => "fpf-inhol",
            Method::BrutePerm => "brute-perm",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CountResult {
    pub g: String,
    pub n: String,
    pub value: u64,
    pub method: Method,
    pub runtime_ms: u64,
    /// Set when a hypothesis of the formula could not be confirmed.
    pub conditional: bool,
    pub checkpoint_id: Option<String>,
    pub notes: Vec<String>,
}

impl CountResult {
    fn new(g: String, n: String, value: u64, method: Method, start: Instant) -> CountResult {
        CountResult {
            g,
            n,
            value,
            method,
            runtime_ms: start.elapsed().as_millis() as u64,
            conditional: false,
            checkpoint_id: None,
            notes: Vec::new(),
        }
    }
}

/// `e(G, G) = 2 + 2·#{σ ∈ A of order p} + 2·((p−2)/(p−1))·#{σ ∈ G∖A of order p}`,
/// valid when `Inn(G)` is the only copy of `G` inside `Aut(G)`. The
/// hypothesis is checked; if it fails or cannot be decided the result is
/// marked conditional.
pub fn e_formula_self(g: &Arc<FiniteGroup>, limits: &Limits) -> Result<CountResult> {
    let start = Instant::now();
    let (a, p) = socle_and_prime(g, limits)?;
    let (inside, outside) = prime_census(g, &a, p);
    let p = p as u64;
    let outer = exact_div(2 * (p - 2) * outside, p - 1, "outer term of e(G, G)")?;
    if p == 2 {
        assert_eq!(outer, 0, "the outer term vanishes for p = 2");
    }
    let value = 2 + 2 * inside + outer;
    let mut r = CountResult::new(g.label(), g.label(), value, Method::FormulaSelf, start);
    r.notes.push(format!("p = {p}, order-p census inside A = {inside}, outside A = {outside}"));
    match check_inner_uniqueness(g, limits) {
        Ok(u) if u.holds => r.notes.push(format!("Inn(G) is the only copy of G in Aut(G) (index {})", u.index)),
        Ok(u) => {
            r.conditional = true;
            r.notes.push(format!("Aut(G) has another copy of G (index {}); value not trusted", u.index));
        }
        Err(e) if e.is_infeasible() => {
            r.conditional = true;
            r.notes.push(format!("uniqueness of Inn(G) undecided: {e}"));
        }
        Err(e) => return Err(e),
    }
    r.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}

/// `e(G, A×C_p) = 2·(1/(p−1))·#{σ ∈ G∖A of order p}`.
pub fn e_formula_product(g: &Arc<FiniteGroup>, limits: &Limits) -> Result<CountResult> {
    let start = Instant::now();
    let (a, p) = socle_and_prime(g, limits)?;
    let (_, outside) = prime_census(g, &a, p);
    let value = exact_div(2 * outside, p as u64 - 1, "order-p elements outside A in orbits of size p-1")?;
    let mut r = CountResult::new(g.label(), format!("AxCp(A,{p})"), value, Method::FormulaProduct, start);
    r.notes.push(format!("p = {p}, order-p census outside A = {outside}"));
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SnType {
    /// `N = S_n`
    Sn,
    /// `N = A_n × C_2`
    AnxC2,
}

/// `e(S_n, S_n) = 2 + 2·#{even involutions}` and
/// `e(S_n, A_n×C_2) = 2·#{odd involutions}`, counted by visiting every
/// permutation of `n` points.
pub fn e_formula_sn(n: usize, ty: SnType) -> Result<CountResult> {
    if !(5..=10).contains(&n) {
        return Err(HgsError::Precondition(format!("S_n formulas need 5 <= n <= 10, got {n}")));
    }
    let start = Instant::now();
    let (mut even, mut odd) = (0u64, 0u64);
    for_each_permutation(n, |p| {
        let mut moved = 0;
        for (i, &x) in p.iter().enumerate() {
            if p[x as usize] as usize != i {
                return;
            }
            if x as usize != i {
                moved += 1;
            }
        }
        if moved == 0 {
            return;
        }
        if (moved / 2) % 2 == 0 {
            even += 1;
        } else {
            odd += 1;
        }
    });
    let (label, value) = match ty {
        SnType::Sn => (format!("S{n}"), 2 + 2 * even),
        SnType::AnxC2 => (format!("AxCp(A{n},2)"), 2 * odd),
    };
    let mut r = CountResult::new(format!("S{n}"), label, value, Method::FormulaSn, start);
    r.notes.push(format!("involutions in S{n}: {even} even, {odd} odd"));
    Ok(r)
}

/// `e(G, N) = pair_count / |Aut(N)|`, where `pair_count` counts the pairs
/// `(f, g)` with `f ∈ Hom(G, Aut(N))` and `g` a bijective crossed
/// homomorphism.
pub fn e_byott(g: &Arc<FiniteGroup>, n: &Arc<FiniteGroup>, opts: &EnumOptions) -> Result<CountResult> {
    let start = Instant::now();
    let hol = Holomorph::build(n, &opts.limits)?;
    let rc = regular_subgroups_in_holomorph(&hol, g, opts)?;
    let value = exact_div(rc.pair_count, rc.aut_n_order as u64, "pair count / |Aut(N)|")?;
    if value * rc.aut_n_order as u64 != rc.subgroup_count * rc.aut_g_order as u64 {
        return Err(HgsError::Internal("Byott scaling disagrees with the subgroup count".into()));
    }
    let mut r = CountResult::new(g.label(), n.label(), value, Method::Byott, start);
    r.checkpoint_id = rc.checkpoint_id.clone();
    r.notes.push(format!(
        "|Hom(G, Aut(N))| = {}, pairs = {}, regular subgroups of Hol(N) = {}, |Aut(G)| = {}, |Aut(N)| = {}",
        rc.f_total, rc.pair_count, rc.subgroup_count, rc.aut_g_order, rc.aut_n_order
    ));
    if let Some(last) = rc.resumed_after {
        r.notes.push(format!("resumed after homomorphism {last}"));
    }
    Ok(r)
}

/// `e(G, A×C_p) = 2·e₁·e₂ / |Aut(N)|` with `|Aut(N)| = (p−1)|Aut(A)|`,
/// `e₁ = #{f ∈ Hom(N, G) : ker f = C_p}` and
/// `e₂ = #{h ∈ Hom(N, G) : ker h = A, h(ε) ∉ A}` for a generator `ε` of `C_p`.
pub fn e_fpf_inhol(g: &Arc<FiniteGroup>, n: &Arc<FiniteGroup>, limits: &Limits) -> Result<CountResult> {
    let start = Instant::now();
    let (a_g, p) = socle_and_prime(g, limits)?;
    let class = classify_group(n, limits)?;
    let (a_n, c_n) = match class.kind {
        StructureKind::DirectProductSimpleCyclic { p: q, .. } if q == p => (&class.witnesses[0], &class.witnesses[1]),
        _ => {
            return Err(HgsError::Precondition(format!(
                "{} is not A x C_{p} ({:?})",
                n.label(),
                class.kind
            )))
        }
    };
    let a = Arc::new(g.subgroup_as_group(&a_g).0);
    if are_isomorphic(&Arc::new(n.subgroup_as_group(a_n).0), &a).is_none() {
        return Err(HgsError::Precondition("the simple factor of N is not the socle of G".into()));
    }
    let eps = c_n.members()[1];
    let homs = HomSearch::new(n, g).collect();
    let e1 = homs.iter().filter(|f| f.kernel() == *c_n).count() as u64;
    let e2 = homs
        .iter()
        .filter(|h| h.kernel() == *a_n && !a_g.contains(h.apply(eps)))
        .count() as u64;
    let aut_a = automorphism_group(&a, limits)?.order() as u64;
    let aut_n = (p as u64 - 1) * aut_a;
    let value = exact_div(2 * e1 * e2, aut_n, "2 e1 e2 / |Aut(N)|")?;
    let mut r = CountResult::new(g.label(), n.label(), value, Method::FpfInhol, start);
    r.notes.push(format!(
        "|Hom(N, G)| = {}, e1 = {e1}, e2 = {e2}, |Aut(A)| = {aut_a}, |Aut(N)| = {aut_n}",
        homs.len()
    ));
    Ok(r)
}

#[derive(Clone, Debug)]
pub struct BruteOptions {
    /// Permit `|G| = 12`; otherwise the cap is 8.
    pub allow_12: bool,
    pub limits: Limits,
}

impl Default for BruteOptions {
    fn default() -> Self {
        BruteOptions {
            allow_12: false,
            limits: Limits::default(),
        }
    }
}

/// Every regular subgroup of `Perm(G)` normalized by `λ(G)`, grouped by
/// isomorphism type.
#[derive(Clone, Debug)]
pub struct BruteResult {
    pub g: String,
    /// Type representatives: the supplied candidates first, then any
    /// unmatched types as `unnamed-k`.
    pub types: Vec<(String, Arc<FiniteGroup>)>,
    /// Sorted subgroups with their index into `types`.
    pub subgroups: Vec<(RegularSubgroup, usize)>,
    pub runtime_ms: u64,
}

impl BruteResult {
    /// Count per type label, including zero counts for candidates.
    pub fn per_type(&self) -> BTreeMap<String, u64> {
        let mut m: BTreeMap<String, u64> = self.types.iter().map(|(l, _)| (l.clone(), 0)).collect();
        for (_, t) in &self.subgroups {
            *m.get_mut(&self.types[*t].0).expect("type listed") += 1;
        }
        m
    }

    pub fn count_for(&self, label: &str) -> u64 {
        self.per_type().get(label).copied().unwrap_or(0)
    }

    pub fn to_results(&self) -> Vec<CountResult> {
        self.per_type()
            .into_iter()
            .map(|(n, value)| CountResult {
                g: self.g.clone(),
                n,
                value,
                method: Method::BrutePerm,
                runtime_ms: self.runtime_ms,
                conditional: false,
                checkpoint_id: None,
                notes: Vec::new(),
            })
            .collect()
    }
}

fn lambda_perm(g: &FiniteGroup, x: usize) -> Perm {
    Perm::from_images((0..g.order()).map(|y| g.mul(x, y)).collect()).expect("row of a group table")
}

/// Permutations of `n` points made of `n/d` cycles of length `d`.
fn semiregular(n: usize, d: usize, visit: &mut dyn FnMut(Perm)) {
    fn rec(images: &mut Vec<usize>, used: &mut Vec<bool>, d: usize, visit: &mut dyn FnMut(Perm)) {
        let Some(first) = used.iter().position(|&u| !u) else {
            visit(Perm::from_images(images.clone()).expect("cycles form a permutation"));
            return;
        };
        used[first] = true;
        let mut cycle = vec![first];
        grow(images, used, d, &mut cycle, visit);
        used[first] = false;
    }
    fn grow(images: &mut Vec<usize>, used: &mut Vec<bool>, d: usize, cycle: &mut Vec<usize>, visit: &mut dyn FnMut(Perm)) {
        if cycle.len() == d {
            for w in 0..d {
                images[cycle[w]] = cycle[(w + 1) % d];
            }
            rec(images, used, d, visit);
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cycle.push(x);
                grow(images, used, d, cycle, visit);
                cycle.pop();
                used[x] = false;
            }
        }
    }
    let mut images: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    rec(&mut images, &mut used, d, visit);
}

/// Closure of `seeds` if every non-identity element is fixed-point-free
/// and the order stays at most `cap`; `None` otherwise.
fn semiregular_closure(seeds: &[Perm], cap: usize) -> Option<BTreeSet<Perm>> {
    let n = seeds.first()?.degree();
    let mut set: BTreeSet<Perm> = BTreeSet::new();
    set.insert(Perm::identity(n));
    let mut frontier = vec![Perm::identity(n)];
    while let Some(x) = frontier.pop() {
        for s in seeds {
            let y = x.compose(s);
            if set.contains(&y) {
                continue;
            }
            if !y.is_identity() && y.fixed_points() > 0 {
                return None;
            }
            set.insert(y.clone());
            if set.len() > cap {
                return None;
            }
            frontier.push(y);
        }
    }
    Some(set)
}

/// All regular subgroups of `Perm(G)` normalized by `λ(G)`.
///
/// Every such `D` is the join of the subgroups `K(π)` generated by the
/// `λ(G)`-conjugates of its elements `π`, and every partial join lies in
/// `D`, so is semiregular of order at most `|G|`. Starting from the
/// semiregular `K(π)` and closing under pairwise joins therefore reaches
/// every `D`; the joins of order `|G|` are exactly the regular ones.
pub fn e_brute_perm(g: &Arc<FiniteGroup>, candidates: &[Arc<FiniteGroup>], opts: &BruteOptions) -> Result<BruteResult> {
    let start = Instant::now();
    let n = g.order();
    let cap = if opts.allow_12 { 12 } else { 8 };
    if n > cap {
        return Err(HgsError::CapExceeded {
            what: "brute-force search in Perm(G)".into(),
            size: n,
            cap,
        });
    }
    let lam: Vec<Perm> = (0..n).map(|x| lambda_perm(g, x)).collect();
    let lam_inv: Vec<Perm> = lam.iter().map(|p| p.inverse()).collect();
    let k_of = |pi: &Perm| -> Option<BTreeSet<Perm>> {
        let mut orbit: Vec<Perm> = lam.iter().zip(&lam_inv).map(|(l, li)| l.compose(pi).compose(li)).collect();
        orbit.sort();
        orbit.dedup();
        semiregular_closure(&orbit, n)
    };

    let mut pis = Vec::new();
    for d in (2..=n).filter(|d| n % d == 0) {
        semiregular(n, d, &mut |p| pis.push(p));
    }
    let mut pieces: Vec<Vec<Perm>> = pis
        .par_iter()
        .filter_map(|pi| k_of(pi).map(|k| k.into_iter().collect::<Vec<Perm>>()))
        .collect();
    if n == 1 {
        pieces.push(vec![Perm::identity(1)]);
    }
    pieces.sort();
    pieces.dedup();

    let mut all: BTreeSet<Vec<Perm>> = pieces.iter().cloned().collect();
    let mut frontier: Vec<Vec<Perm>> = pieces.clone();
    while !frontier.is_empty() {
        let joins: HashSet<Vec<Perm>> = frontier
            .par_iter()
            .flat_map_iter(|h| {
                pieces.iter().filter_map(move |k| {
                    if k.iter().all(|x| h.binary_search(x).is_ok()) {
                        return None;
                    }
                    let seeds: Vec<Perm> = h.iter().chain(k.iter()).cloned().collect();
                    semiregular_closure(&seeds, n).map(|s| s.into_iter().collect())
                })
            })
            .collect();
        frontier = joins.into_iter().filter(|j| !all.contains(j)).collect();
        frontier.sort();
        all.extend(frontier.iter().cloned());
    }

    let mut types: Vec<(String, Arc<FiniteGroup>)> = candidates.iter().map(|c| (c.label(), c.clone())).collect();
    let mut subgroups = Vec::new();
    let mut unnamed = 0;
    for members in all.into_iter().filter(|m| m.len() == n) {
        let d = RegularSubgroup::new(members)?;
        let dg = d.to_group(&opts.limits)?;
        let t = match types
            .iter()
            .position(|(_, t)| t.order() == n && are_isomorphic(&dg, t).is_some())
        {
            Some(t) => t,
            None => {
                unnamed += 1;
                types.push((format!("unnamed-{unnamed}"), dg));
                types.len() - 1
            }
        };
        subgroups.push((d, t));
    }
    Ok(BruteResult {
        g: g.label(),
        types,
        subgroups,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

/// How the brute-force subgroups behave under `D ↦ D⋆`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityProfile {
    pub total: usize,
    pub self_dual: usize,
    /// The set is closed under taking duals.
    pub closed: bool,
    /// `(D⋆)⋆ = D` for every `D`.
    pub double_dual: bool,
    /// `D` and `D⋆` always have the same type.
    pub same_type: bool,
    /// Self-dual exactly when abelian.
    pub self_dual_iff_abelian: bool,
}

pub fn duality_profile(b: &BruteResult) -> DualityProfile {
    let index = |d: &RegularSubgroup| b.subgroups.iter().position(|(e, _)| e == d);
    let mut p = DualityProfile {
        total: b.subgroups.len(),
        self_dual: 0,
        closed: true,
        double_dual: true,
        same_type: true,
        self_dual_iff_abelian: true,
    };
    for (d, t) in &b.subgroups {
        let dual = d.dual();
        if dual == *d {
            p.self_dual += 1;
        }
        p.self_dual_iff_abelian &= (dual == *d) == d.is_abelian();
        p.double_dual &= dual.dual() == *d;
        match index(&dual) {
            Some(j) => p.same_type &= b.subgroups[j].1 == *t,
            None => p.closed = false,
        }
    }
    p
}

/// For each brute-force `D` other than `λ(G)` and `ρ(G)`: how many of
/// `D`, `D⋆` lie in `Hol(G)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReverseProfile {
    pub considered: usize,
    pub exactly_one: usize,
    pub both: usize,
    pub neither: usize,
    /// Of the `both` cases, how many have `D` abelian (so `D = D⋆`).
    pub both_abelian: usize,
}

pub fn reverse_profile(g: &Arc<FiniteGroup>, b: &BruteResult, limits: &Limits) -> Result<ReverseProfile> {
    let hol = Holomorph::build(g, limits)?;
    let lam = RegularSubgroup::lambda(g);
    let rho = RegularSubgroup::rho(g);
    let mut r = ReverseProfile::default();
    for (d, _) in &b.subgroups {
        if *d == lam || *d == rho {
            continue;
        }
        r.considered += 1;
        match (d.inside_holomorph(&hol), d.dual().inside_holomorph(&hol)) {
            (true, true) => {
                r.both += 1;
                if d.is_abelian() {
                    r.both_abelian += 1;
                }
            }
            (false, false) => r.neither += 1,
            _ => r.exactly_one += 1,
        }
    }
    Ok(r)
}
