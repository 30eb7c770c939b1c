use std::collections::HashSet;

use serde::Serialize;

use super::{FiniteGroup, Limits};
use crate::error::{HgsError, Result};

/// A subgroup stored as the sorted list of its member indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subgroup {
    parent_order: usize,
    members: Vec<usize>,
}

/// Which elements an [`FiniteGroup::order_census`] scans.
#[derive(Clone, Copy, Debug)]
pub enum Region<'a> {
    All,
    Inside(&'a Subgroup),
    Outside(&'a Subgroup),
}

impl Subgroup {
    /// Wraps a member list; sorts it but does not check closure.
    pub fn from_members(parent_order: usize, mut members: Vec<usize>) -> Subgroup {
        members.sort_unstable();
        members.dedup();
        Subgroup {
            parent_order,
            members,
        }
    }

    pub fn trivial(parent_order: usize) -> Subgroup {
        Subgroup::from_members(parent_order, vec![0])
    }

    pub fn whole(parent_order: usize) -> Subgroup {
        Subgroup::from_members(parent_order, (0..parent_order).collect())
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn index(&self) -> usize {
        self.parent_order / self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent_order
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_members(
            self.parent_order,
            self.members.iter().copied().filter(|&x| other.contains(x)).collect(),
        )
    }

    /// Closure under multiplication and inverses, identity membership and
    /// Lagrange, all checked directly.
    pub fn is_subgroup_of(&self, g: &FiniteGroup) -> bool {
        self.parent_order == g.order()
            && self.contains(0)
            && g.order() % self.order() == 0
            && self.members.iter().all(|&a| {
                self.contains(g.inv(a)) && self.members.iter().all(|&b| self.contains(g.mul(a, b)))
            })
    }
}

impl FiniteGroup {
    pub fn order_census(&self, k: usize, region: Region<'_>) -> usize {
        let hit = |x: usize| self.elt_order(x) == k;
        match region {
            Region::All => (0..self.order()).filter(|&x| hit(x)).count(),
            Region::Inside(a) => a.members().iter().filter(|&&x| hit(x)).count(),
            Region::Outside(a) => (0..self.order())
                .filter(|&x| !a.contains(x) && hit(x))
                .count(),
        }
    }

    pub fn subgroup_closure(&self, seed: &[usize]) -> Subgroup {
        let n = self.order();
        let mut in_set = vec![false; n];
        in_set[0] = true;
        let mut members = vec![0usize];
        let mut gens: Vec<usize> = Vec::new();
        for &s in seed {
            if in_set[s] {
                continue;
            }
            gens.push(s);
            // re-expand from every member with the enlarged generator set
            let mut head = 0;
            while head < members.len() {
                let e = members[head];
                head += 1;
                for &t in &gens {
                    let p = self.mul(e, t);
                    if !in_set[p] {
                        in_set[p] = true;
                        members.push(p);
                    }
                }
            }
        }
        Subgroup::from_members(n, members)
    }

    pub fn subgroup_join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let seed: Vec<usize> = a.members().iter().chain(b.members()).copied().collect();
        self.subgroup_closure(&seed)
    }

    /// Smallest normal subgroup containing `seed`.
    pub fn normal_closure(&self, seed: &[usize]) -> Subgroup {
        let gens = self.generators().to_vec();
        let mut h = self.subgroup_closure(seed);
        loop {
            let extra: Vec<usize> = h
                .members()
                .iter()
                .flat_map(|&x| gens.iter().map(move |&g| (g, x)))
                .map(|(g, x)| self.conj(g, x))
                .filter(|&c| !h.contains(c))
                .collect();
            if extra.is_empty() {
                return h;
            }
            let mut seed: Vec<usize> = h.members().to_vec();
            seed.extend(extra);
            h = self.subgroup_closure(&seed);
        }
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.generators()
            .iter()
            .all(|&g| h.members().iter().all(|&x| h.contains(self.conj(g, x))))
    }

    pub fn center(&self) -> Subgroup {
        let gens = self.generators();
        let members = (0..self.order())
            .filter(|&x| gens.iter().all(|&g| self.commute(g, x)))
            .collect();
        Subgroup::from_members(self.order(), members)
    }

    pub fn centralizer(&self, x: usize) -> Subgroup {
        let members = (0..self.order()).filter(|&y| self.commute(x, y)).collect();
        Subgroup::from_members(self.order(), members)
    }

    pub fn centralizer_of_subgroup(&self, h: &Subgroup) -> Subgroup {
        let hg = self.subgroup_generators(h);
        let members = (0..self.order())
            .filter(|&y| hg.iter().all(|&x| self.commute(x, y)))
            .collect();
        Subgroup::from_members(self.order(), members)
    }

    /// A (not necessarily minimal) generating list for `h`.
    pub fn subgroup_generators(&self, h: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut cur = Subgroup::trivial(self.order());
        for &x in h.members() {
            if !cur.contains(x) {
                gens.push(x);
                cur = self.subgroup_closure(&gens);
                if cur.order() == h.order() {
                    break;
                }
            }
        }
        gens
    }

    /// Commutator subgroup: normal closure of generator commutators.
    pub fn derived_subgroup(&self) -> Subgroup {
        let gens = self.generators();
        let seed: Vec<usize> = gens
            .iter()
            .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        self.normal_closure(&seed)
    }

    /// Commutator subgroup of an arbitrary subgroup `h`.
    pub fn derived_subgroup_of(&self, h: &Subgroup) -> Subgroup {
        let hg = self.subgroup_generators(h);
        let seed: Vec<usize> = hg
            .iter()
            .flat_map(|&a| hg.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        // normal closure inside h
        let mut k = self.subgroup_closure(&seed);
        loop {
            let extra: Vec<usize> = k
                .members()
                .iter()
                .flat_map(|&x| hg.iter().map(move |&g| (g, x)))
                .map(|(g, x)| self.conj(g, x))
                .filter(|&c| !k.contains(c))
                .collect();
            if extra.is_empty() {
                return k;
            }
            let mut s = k.members().to_vec();
            s.extend(extra);
            k = self.subgroup_closure(&s);
        }
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().is_whole()
    }

    /// Derived series down to the perfect core.
    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![Subgroup::whole(self.order())];
        loop {
            let next = self.derived_subgroup_of(series.last().unwrap());
            if next.order() == series.last().unwrap().order() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_trivial()
    }

    /// All normal subgroups, as joins of normal closures of conjugacy
    /// classes. Sorted by order, then members.
    pub fn normal_subgroups(&self, limits: &Limits) -> Result<Vec<Subgroup>> {
        if self.order() > limits.max_table {
            return Err(HgsError::CapExceeded {
                what: "normal subgroup scan".into(),
                size: self.order(),
                cap: limits.max_table,
            });
        }
        let cc = self.conjugacy_classes();
        let mut atoms: Vec<Subgroup> = Vec::new();
        let mut seen: HashSet<Subgroup> = HashSet::new();
        for class in &cc.classes {
            let h = self.subgroup_closure(class);
            if seen.insert(h.clone()) {
                atoms.push(h);
            }
        }
        let mut all: Vec<Subgroup> = atoms.clone();
        let mut frontier = atoms.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for h in &frontier {
                for a in &atoms {
                    if a.is_subset_of(h) {
                        continue;
                    }
                    let j = self.subgroup_join(h, a);
                    if seen.insert(j.clone()) {
                        all.push(j.clone());
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
        Ok(all)
    }

    /// Normal subgroups other than the trivial one and the whole group.
    pub fn proper_nontrivial_normal_subgroups(&self, limits: &Limits) -> Result<Vec<Subgroup>> {
        Ok(self
            .normal_subgroups(limits)?
            .into_iter()
            .filter(|h| !h.is_trivial() && !h.is_whole())
            .collect())
    }

    pub fn is_simple(&self, limits: &Limits) -> Result<bool> {
        Ok(self.order() > 1 && self.proper_nontrivial_normal_subgroups(limits)?.is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    fn perm_group(gens: &[&str], degree: usize) -> FiniteGroup {
        let gens: Vec<Perm> = gens
            .iter()
            .map(|s| Perm::parse_cycles(s, degree).unwrap())
            .collect();
        FiniteGroup::from_permutations(&gens, &Limits::default()).unwrap()
    }

    fn find_perm(g: &FiniteGroup, cycles: &str) -> usize {
        let degree = g.perm_rep().unwrap()[0].degree();
        let p = Perm::parse_cycles(cycles, degree).unwrap();
        g.perm_rep().unwrap().iter().position(|q| *q == p).unwrap()
    }

    #[test]
    fn closure_examples() {
        let s5 = perm_group(&["(0 1 2 3 4)", "(0 1)"], 5);
        assert!(s5.subgroup_closure(&[0]).is_trivial());
        let c = find_perm(&s5, "(0 1 2 3 4)");
        assert_eq!(s5.subgroup_closure(&[c]).order(), 5);
        let a = find_perm(&s5, "(0 1)(2 3)");
        let b = find_perm(&s5, "(0 2)(1 3)");
        let klein = s5.subgroup_closure(&[a, b]);
        assert_eq!(klein.order(), 4);
        assert!(klein.is_subgroup_of(&s5));
    }

    #[test]
    fn centralizers_and_center() {
        let s5 = perm_group(&["(0 1 2 3 4)", "(0 1)"], 5);
        assert!(s5.center().is_trivial());
        assert!(s5.centralizer(0).is_whole());
        let t = find_perm(&s5, "(0 1)");
        // 2 * |S3|
        assert_eq!(s5.centralizer(t).order(), 12);
    }

    #[test]
    fn s5_normal_lattice() {
        let s5 = perm_group(&["(0 1 2 3 4)", "(0 1)"], 5);
        let ns = s5.normal_subgroups(&Limits::default()).unwrap();
        let orders: Vec<usize> = ns.iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![1, 60, 120]);
        for h in &ns {
            assert!(s5.is_normal(h));
        }
        assert_eq!(s5.derived_subgroup().order(), 60);
        assert!(!s5.is_perfect());
        assert!(!s5.is_solvable());
    }

    #[test]
    fn census_regions() {
        let s5 = perm_group(&["(0 1 2 3 4)", "(0 1)"], 5);
        let a5 = s5.derived_subgroup();
        assert_eq!(s5.order_census(2, Region::Inside(&a5)), 15);
        assert_eq!(s5.order_census(2, Region::Outside(&a5)), 10);
        assert_eq!(s5.order_census(1, Region::All), 1);
        let total: usize = (1..=120).map(|k| s5.order_census(k, Region::All)).sum();
        assert_eq!(total, 120);
    }

    #[test]
    fn quotient_and_subgroup_group() {
        let s5 = perm_group(&["(0 1 2 3 4)", "(0 1)"], 5);
        let a5 = s5.derived_subgroup();
        let (q, proj) = s5.quotient(&a5).unwrap();
        assert_eq!(q.order(), 2);
        assert!(a5.members().iter().all(|&x| proj[x] == 0));
        let (a5g, emb) = s5.subgroup_as_group(&a5);
        assert_eq!(a5g.order(), 60);
        assert_eq!(emb.len(), 60);
        assert!(a5g.is_simple(&Limits::default()).unwrap());
        assert!(a5g.is_perfect());
    }
}
