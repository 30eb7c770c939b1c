use std::collections::HashMap;
use std::hash::Hash;

use super::{FiniteGroup, Limits, Subgroup};
use crate::error::{HgsError, Result};
use crate::perm::Perm;

/// Largest permutation degree accepted for generator input.
pub const MAX_DEGREE: usize = 64;

impl FiniteGroup {
    /// Validates a Cayley table (rows indexed by the left factor).
    ///
    /// Index 0 must be the identity. Associativity is decided by Light's
    /// test against a set that generates the table under right
    /// multiplication, which is equivalent to the full triple check.
    pub fn from_table(rows: Vec<Vec<usize>>, limits: &Limits) -> Result<FiniteGroup> {
        let n = rows.len();
        if n == 0 {
            return Err(HgsError::InvalidGroup("empty table".into()));
        }
        if n > limits.max_table {
            return Err(HgsError::CapExceeded {
                what: "Cayley table".into(),
                size: n,
                cap: limits.max_table,
            });
        }
        let mut mul = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(HgsError::InvalidGroup(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= n {
                    return Err(HgsError::InvalidGroup(format!("entry {x} out of range in row {i}")));
                }
                mul.push(x as u16);
            }
        }
        for a in 0..n {
            if mul[a] as usize != a || mul[a * n] as usize != a {
                return Err(HgsError::InvalidGroup(
                    "index 0 is not the identity".into(),
                ));
            }
        }
        for a in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for b in 0..n {
                let r = mul[a * n + b] as usize;
                let c = mul[b * n + a] as usize;
                if row_seen[r] || col_seen[c] {
                    return Err(HgsError::InvalidGroup(format!(
                        "element {a} does not act bijectively (not a Latin square)"
                    )));
                }
                row_seen[r] = true;
                col_seen[c] = true;
            }
        }
        let at = |a: usize, b: usize| mul[a * n + b] as usize;
        // right-multiplication generating set
        let mut reached = vec![false; n];
        reached[0] = true;
        let mut gens: Vec<usize> = Vec::new();
        let mut queue = vec![0usize];
        loop {
            let mut head = 0;
            while head < queue.len() {
                let e = queue[head];
                head += 1;
                for &s in &gens {
                    let p = at(e, s);
                    if !reached[p] {
                        reached[p] = true;
                        queue.push(p);
                    }
                }
            }
            match (0..n).find(|&x| !reached[x]) {
                Some(x) => {
                    gens.push(x);
                    queue = (0..n).filter(|&y| reached[y]).collect();
                }
                None => break,
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for &s in &gens {
                    if at(ab, s) != at(a, at(b, s)) {
                        return Err(HgsError::NotAssociative { a, b, c: s });
                    }
                }
            }
        }
        Ok(FiniteGroup::from_flat_table_unchecked(n, mul))
    }

    /// Closes `gens` under multiplication and builds the Cayley table.
    ///
    /// Elements are numbered in BFS order of right multiplication by the
    /// generators, so the identity gets index 0. Returns the elements in
    /// index order alongside the group.
    pub fn from_generators<T, F>(
        identity: T,
        gens: &[T],
        mul: F,
        limits: &Limits,
    ) -> Result<(FiniteGroup, Vec<T>)>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let gens: Vec<T> = gens.iter().filter(|g| **g != identity).cloned().collect();
        let k = gens.len();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<T, u16> = HashMap::from([(identity, 0u16)]);
        let mut parent: Vec<u32> = vec![0];
        let mut via: Vec<u32> = vec![0];
        let mut rmul: Vec<u16> = Vec::new();
        let mut head = 0;
        while head < elements.len() {
            for (j, s) in gens.iter().enumerate() {
                let p = mul(&elements[head], s);
                let idx = match index.get(&p) {
                    Some(&i) => i,
                    None => {
                        let i = elements.len();
                        if i >= limits.max_table {
                            return Err(HgsError::CapExceeded {
                                what: "group closure".into(),
                                size: i + 1,
                                cap: limits.max_table,
                            });
                        }
                        index.insert(p.clone(), i as u16);
                        elements.push(p);
                        parent.push(head as u32);
                        via.push(j as u32);
                        i as u16
                    }
                };
                rmul.push(idx);
            }
            head += 1;
        }
        let n = elements.len();
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            table[a * n] = a as u16;
            for b in 1..n {
                let left = table[a * n + parent[b] as usize] as usize;
                table[a * n + b] = rmul[left * k + via[b] as usize];
            }
        }
        Ok((FiniteGroup::from_flat_table_unchecked(n, table), elements))
    }

    /// Permutation group generated by `gens`, all of the same degree.
    pub fn from_permutations(gens: &[Perm], limits: &Limits) -> Result<FiniteGroup> {
        let degree = gens
            .first()
            .map(|p| p.degree())
            .ok_or_else(|| HgsError::InvalidGroup("no generators given".into()))?;
        if gens.iter().any(|p| p.degree() != degree) {
            return Err(HgsError::InvalidGroup("generators of mixed degree".into()));
        }
        if degree > MAX_DEGREE {
            return Err(HgsError::CapExceeded {
                what: "permutation degree".into(),
                size: degree,
                cap: MAX_DEGREE,
            });
        }
        let (mut g, elements) =
            FiniteGroup::from_generators(Perm::identity(degree), gens, |a, b| a.compose(b), limits)?;
        g.set_perm_rep(elements);
        Ok(g)
    }

    pub fn cyclic(n: usize, limits: &Limits) -> Result<FiniteGroup> {
        if n == 0 {
            return Err(HgsError::InvalidGroup("cyclic group of order 0".into()));
        }
        let (g, _) = FiniteGroup::from_generators(0usize, &[1 % n], |a, b| (a + b) % n, limits)?;
        Ok(g.with_name(format!("C{n}")))
    }

    /// `A × B` with `(a, b)` stored at index `a·|B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup, limits: &Limits) -> Result<FiniteGroup> {
        let (na, nb) = (a.order(), b.order());
        let n = na * nb;
        if n > limits.max_table {
            return Err(HgsError::CapExceeded {
                what: "direct product".into(),
                size: n,
                cap: limits.max_table,
            });
        }
        let mut table = vec![0u16; n * n];
        for x in 0..n {
            let (xa, xb) = (x / nb, x % nb);
            for y in 0..n {
                let (ya, yb) = (y / nb, y % nb);
                table[x * n + y] = (a.mul(xa, ya) * nb + b.mul(xb, yb)) as u16;
            }
        }
        let mut g = FiniteGroup::from_flat_table_unchecked(n, table);
        if let (Some(pa), Some(pb)) = (a.perm_rep(), b.perm_rep()) {
            let (da, db) = (pa[0].degree(), pb[0].degree());
            let perms = (0..n)
                .map(|x| {
                    let (p, q) = (&pa[x / nb], &pb[x % nb]);
                    let images: Vec<u16> = (0..da)
                        .map(|i| p.apply(i) as u16)
                        .chain((0..db).map(|i| (q.apply(i) + da) as u16))
                        .collect();
                    Perm::from_images_unchecked(images)
                })
                .collect();
            g.set_perm_rep(perms);
        }
        let name = format!("{}x{}", a.label(), b.label());
        Ok(g.with_name(name))
    }

    /// Embedding indices of the first and second factor of a group built
    /// by [`FiniteGroup::direct_product`].
    pub fn product_factor_subgroups(&self, na: usize, nb: usize) -> (Subgroup, Subgroup) {
        assert_eq!(na * nb, self.order());
        let first = Subgroup::from_members(self.order(), (0..na).map(|a| a * nb).collect());
        let second = Subgroup::from_members(self.order(), (0..nb).collect());
        (first, second)
    }

    /// The quotient by a normal subgroup, with the projection map.
    pub fn quotient(&self, k: &Subgroup) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_normal(k) {
            return Err(HgsError::Precondition("quotient by a non-normal subgroup".into()));
        }
        let n = self.order();
        let mut label = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if label[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for &m in k.members() {
                label[self.mul(x, m)] = id;
            }
        }
        let q = reps.len();
        let mut table = vec![0u16; q * q];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i * q + j] = label[self.mul(a, b)] as u16;
            }
        }
        Ok((FiniteGroup::from_flat_table_unchecked(q, table), label))
    }

    /// `H` as a group in its own right, with the embedding into `self`.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> (FiniteGroup, Vec<usize>) {
        let members = h.members().to_vec();
        let m = members.len();
        let mut local = vec![u16::MAX; self.order()];
        for (i, &x) in members.iter().enumerate() {
            local[x] = i as u16;
        }
        let mut table = vec![0u16; m * m];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                let c = local[self.mul(a, b)];
                debug_assert_ne!(c, u16::MAX, "subgroup not closed");
                table[i * m + j] = c;
            }
        }
        let mut g = FiniteGroup::from_flat_table_unchecked(m, table);
        if let Some(perms) = self.perm_rep() {
            g.set_perm_rep(members.iter().map(|&x| perms[x].clone()).collect());
        }
        (g, members)
    }
}

/// Order of the permutation group generated by `gens` without building a
/// table; fails once the closure passes `limits.max_closure`.
pub fn closure_order(gens: &[Perm], limits: &Limits) -> Result<usize> {
    let degree = gens.first().map(|p| p.degree()).unwrap_or(0);
    let mut seen = std::collections::HashSet::new();
    let id = Perm::identity(degree);
    seen.insert(id.clone());
    let mut queue = vec![id];
    let mut head = 0;
    while head < queue.len() {
        for s in gens {
            let p = queue[head].compose(s);
            if seen.insert(p.clone()) {
                if seen.len() > limits.max_closure {
                    return Err(HgsError::CapExceeded {
                        what: "permutation closure".into(),
                        size: seen.len(),
                        cap: limits.max_closure,
                    });
                }
                queue.push(p);
            }
        }
        head += 1;
    }
    Ok(queue.len())
}
