//! Index-based finite groups.
//!
//! Elements are dense indices `0..n` with `0` the identity. Every group
//! carries its full multiplication table, so constructions refuse orders
//! above [`Limits::max_table`].

mod construct;
mod iso;
mod subgroup;

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use crate::perm::Perm;

pub use construct::{closure_order, MAX_DEGREE};
pub use iso::{are_isomorphic, fingerprint, Fingerprint};
pub use subgroup::{Region, Subgroup};

/// Size caps for table-backed constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest order for which a Cayley table is materialized.
    pub max_table: usize,
    /// Largest closure explored when only the order is wanted.
    pub max_closure: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_table: 2000,
            max_closure: 1_000_000,
        }
    }
}

impl Limits {
    /// Reads `HGS_MAX_TABLE` if set; falls back to the defaults.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = std::env::var("HGS_MAX_TABLE")
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
        {
            limits.max_table = v.min(u16::MAX as usize);
        }
        limits
    }
}

/// A spanning tree of the right Cayley graph: every element is reached
/// from the identity by right multiplication with generators, in BFS order.
#[derive(Clone, Debug)]
pub struct WordTree {
    pub gens: Vec<usize>,
    /// Elements in BFS order; `bfs[0] == 0`.
    pub bfs: Vec<u16>,
    /// Position of each element in `bfs`.
    pub pos: Vec<u16>,
    /// `parent[e] * gens[via[e]] == e` for every non-identity `e`.
    pub parent: Vec<u16>,
    pub via: Vec<u8>,
}

impl WordTree {
    pub(crate) fn build(g: &FiniteGroup, gens: Vec<usize>) -> WordTree {
        let n = g.order();
        let mut pos = vec![u16::MAX; n];
        let mut parent = vec![0u16; n];
        let mut via = vec![u8::MAX; n];
        let mut bfs = Vec::with_capacity(n);
        bfs.push(0u16);
        pos[0] = 0;
        let mut head = 0;
        while head < bfs.len() {
            let e = bfs[head] as usize;
            head += 1;
            for (j, &s) in gens.iter().enumerate() {
                let p = g.mul(e, s);
                if pos[p] == u16::MAX {
                    pos[p] = bfs.len() as u16;
                    parent[p] = e as u16;
                    via[p] = j as u8;
                    bfs.push(p as u16);
                }
            }
        }
        assert_eq!(bfs.len(), n, "word tree generators do not generate the group");
        WordTree {
            gens,
            bfs,
            pos,
            parent,
            via,
        }
    }

    /// The generator-index word spelling `e`, left to right.
    pub fn word(&self, e: usize) -> Vec<usize> {
        let mut w = Vec::new();
        let mut x = e;
        while x != 0 {
            w.push(self.via[x] as usize);
            x = self.parent[x] as usize;
        }
        w.reverse();
        w
    }
}

#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    /// Classes sorted by smallest member; class 0 is `{identity}`.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<u32>,
}

#[derive(Clone)]
pub struct FiniteGroup {
    n: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    elt_order: Vec<u32>,
    perm_rep: Option<Vec<Perm>>,
    name: Option<String>,
    tree: OnceLock<WordTree>,
    classes: OnceLock<ConjugacyClasses>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.n)
            .finish()
    }
}

impl FiniteGroup {
    /// Builds a group from a row-major table already known to satisfy the
    /// group axioms with identity 0.
    pub(crate) fn from_flat_table_unchecked(n: usize, mul: Vec<u16>) -> FiniteGroup {
        debug_assert_eq!(mul.len(), n * n);
        let mut inv = vec![0u16; n];
        for a in 0..n {
            let row = &mul[a * n..(a + 1) * n];
            let b = row.iter().position(|&x| x == 0).expect("row without identity");
            inv[a] = b as u16;
        }
        let mut elt_order = vec![0u32; n];
        for a in 0..n {
            let mut k = 1u32;
            let mut x = a;
            while x != 0 {
                x = mul[x * n + a] as usize;
                k += 1;
            }
            elt_order[a] = k;
        }
        FiniteGroup {
            n,
            mul,
            inv,
            elt_order,
            perm_rep: None,
            name: None,
            tree: OnceLock::new(),
            classes: OnceLock::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    #[inline]
    pub fn elt_order(&self, a: usize) -> usize {
        self.elt_order[a] as usize
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.elt_order
    }

    pub(crate) fn table(&self) -> &[u16] {
        &self.mul
    }

    pub fn row(&self, a: usize) -> &[u16] {
        &self.mul[a * self.n..(a + 1) * self.n]
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        let k = k % self.elt_order(a);
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    /// `g x g⁻¹`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a⁻¹ b⁻¹ a b`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.word_tree().gens;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.commute(a, b)))
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn label(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("<group of order {}>", self.n))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn perm_rep(&self) -> Option<&[Perm]> {
        self.perm_rep.as_deref()
    }

    pub(crate) fn set_perm_rep(&mut self, perms: Vec<Perm>) {
        debug_assert_eq!(perms.len(), self.n);
        self.perm_rep = Some(perms);
    }

    /// Generating set and BFS word tree used by homomorphism searches.
    pub fn word_tree(&self) -> &WordTree {
        self.tree.get_or_init(|| {
            let gens = self.find_small_generating_set();
            WordTree::build(self, gens)
        })
    }

    pub fn generators(&self) -> &[usize] {
        &self.word_tree().gens
    }

    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| {
            let n = self.n;
            let mut class_of = vec![u32::MAX; n];
            let mut classes = Vec::new();
            for x in 0..n {
                if class_of[x] != u32::MAX {
                    continue;
                }
                let id = classes.len() as u32;
                let mut members = Vec::new();
                for g in 0..n {
                    let c = self.conj(g, x);
                    if class_of[c] == u32::MAX {
                        class_of[c] = id;
                        members.push(c);
                    }
                }
                members.sort_unstable();
                classes.push(members);
            }
            ConjugacyClasses { classes, class_of }
        })
    }

    pub fn class_size(&self, x: usize) -> usize {
        let cc = self.conjugacy_classes();
        cc.classes[cc.class_of[x] as usize].len()
    }

    /// Hex SHA-256 of the multiplication table.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.n as u64).to_le_bytes());
        for &x in &self.mul {
            h.update(x.to_le_bytes());
        }
        hex::encode(h.finalize())
    }

    /// Size of the subgroup generated by `gens`, stopping early once it
    /// exceeds `stop_above`.
    pub(crate) fn closure_size(&self, gens: &[usize], stop_above: usize) -> usize {
        let mut in_set = vec![false; self.n];
        in_set[0] = true;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let e = queue[head];
            head += 1;
            for &s in gens {
                let p = self.mul(e, s);
                if !in_set[p] {
                    in_set[p] = true;
                    queue.push(p);
                    if queue.len() > stop_above {
                        return queue.len();
                    }
                }
            }
        }
        queue.len()
    }

    fn generates(&self, gens: &[usize]) -> bool {
        self.closure_size(gens, self.n / 2) > self.n / 2
    }

    /// Greedy generating set: repeatedly add the highest-order element not
    /// yet covered, then drop redundant generators.
    fn greedy_generators(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (1..self.n).collect();
        by_order.sort_by_key(|&x| (std::cmp::Reverse(self.elt_order[x]), x));
        let mut gens: Vec<usize> = Vec::new();
        let mut covered: HashSet<usize> = HashSet::from([0]);
        for x in by_order {
            if covered.contains(&x) {
                continue;
            }
            gens.push(x);
            covered = self.subgroup_closure(&gens).members().iter().copied().collect();
            if covered.len() == self.n {
                break;
            }
        }
        let mut i = gens.len();
        while i > 0 {
            i -= 1;
            let mut trial = gens.clone();
            trial.remove(i);
            if self.generates(&trial) {
                gens = trial;
            }
        }
        gens
    }

    /// Prefers a single generator, then a pair whose candidate image sets
    /// (same order and class size) are smallest, then the greedy set.
    fn find_small_generating_set(&self) -> Vec<usize> {
        let n = self.n;
        if n == 1 {
            return Vec::new();
        }
        if let Some(x) = (1..n).find(|&x| self.elt_order(x) == n) {
            return vec![x];
        }
        let cc = self.conjugacy_classes();
        let key = |c: usize| (self.elt_order(cc.classes[c][0]), cc.classes[c].len());
        let nclasses = cc.classes.len();
        let mut cand = vec![0usize; nclasses];
        for c in 1..nclasses {
            cand[c] = (1..nclasses)
                .filter(|&d| key(d) == key(c))
                .map(|d| cc.classes[d].len())
                .sum();
        }
        let mut pairs: Vec<(usize, usize, usize, usize)> = Vec::new();
        for a in 1..nclasses {
            for b in 1..nclasses {
                pairs.push((cand[a] * cand[b], cand[a], a, b));
            }
        }
        pairs.sort_unstable();
        let mut budget: usize = 24 * n * n;
        for (_, _, a, b) in pairs {
            let x = cc.classes[a][0];
            for &y in &cc.classes[b] {
                if y == x {
                    continue;
                }
                if self.generates(&[x, y]) {
                    return vec![x, y];
                }
                budget = budget.saturating_sub(n);
                if budget == 0 {
                    return self.greedy_generators();
                }
            }
        }
        self.greedy_generators()
    }

    /// All group axioms checked by brute force. Cubic; tests only.
    pub fn check_axioms_exhaustively(&self) -> bool {
        let n = self.n;
        (0..n).all(|a| self.mul(0, a) == a && self.mul(a, 0) == a)
            && (0..n).all(|a| self.mul(a, self.inv(a)) == 0)
            && (0..n).all(|a| {
                (0..n).all(|b| {
                    let ab = self.mul(a, b);
                    (0..n).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
                })
            })
    }
}
