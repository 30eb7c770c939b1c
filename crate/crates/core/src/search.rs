//! Generator-image backtracking over a BFS word tree.
//!
//! A map out of a group `S` is fixed by its values on the generators of a
//! [`WordTree`]. Given those values, [`EdgePlan::extend`] fills in every
//! element along the tree with a [`StepRule`] and checks each non-tree edge
//! `x -> x·s` as soon as both ends are known. A map that satisfies the rule
//! on every edge of the right Cayley graph satisfies it on all pairs, so a
//! full extension is a complete verification; the first bad edge rejects.

use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::group::{FiniteGroup, WordTree};

/// How the image of `x·s` is computed from the image of `x` and the image
/// assigned to the generator `s`.
pub(crate) trait StepRule: Sync {
    fn step(&self, img_x: u16, x: usize, gen_img: u16) -> u16;
}

/// Homomorphism into `target`: `φ(x·s) = φ(x)·φ(s)`.
pub(crate) struct HomRule<'a> {
    pub target: &'a FiniteGroup,
}

impl StepRule for HomRule<'_> {
    #[inline]
    fn step(&self, img_x: u16, _x: usize, gen_img: u16) -> u16 {
        self.target.mul(img_x as usize, gen_img as usize) as u16
    }
}

/// Crossed homomorphism: `g(x·s) = g(x)·f(x)(g(s))`, with `action` the
/// row-major table of the automorphisms `f(x)` on `target`.
pub(crate) struct CrossedRule<'a> {
    pub target: &'a FiniteGroup,
    /// `action[a * |target| + y]` is automorphism `a` applied to `y`.
    pub action: &'a [u16],
    /// `f` as carrier indices, one per source element.
    pub f: &'a [u16],
}

impl StepRule for CrossedRule<'_> {
    #[inline]
    fn step(&self, img_x: u16, x: usize, gen_img: u16) -> u16 {
        let n = self.target.order();
        let moved = self.action[self.f[x] as usize * n + gen_img as usize];
        self.target.mul(img_x as usize, moved as usize) as u16
    }
}

#[derive(Clone, Copy)]
struct Check {
    from: u16,
    gen: u8,
    to: u16,
}

#[derive(Clone, Copy)]
struct Step {
    elem: u16,
    parent: u16,
    via: u8,
    checks: (u32, u32),
}

/// Precomputed extension order and edge checks for one word tree.
pub(crate) struct EdgePlan {
    steps: Vec<Step>,
    checks: Vec<Check>,
    gens: Vec<usize>,
    gen_orders: Vec<usize>,
    source_order: usize,
}

impl EdgePlan {
    pub fn new(source: &FiniteGroup) -> EdgePlan {
        let tree: &WordTree = source.word_tree();
        let n = source.order();
        let k = tree.gens.len();
        let mut per_pos: Vec<Vec<Check>> = vec![Vec::new(); n];
        for x in 0..n {
            for (j, &s) in tree.gens.iter().enumerate() {
                let y = source.mul(x, s);
                if y != 0 && tree.parent[y] as usize == x && tree.via[y] as usize == j {
                    continue;
                }
                let later = tree.pos[x].max(tree.pos[y]) as usize;
                per_pos[later].push(Check {
                    from: x as u16,
                    gen: j as u8,
                    to: y as u16,
                });
            }
        }
        let mut steps = Vec::with_capacity(n);
        let mut checks = Vec::with_capacity(n * k);
        for (i, &e) in tree.bfs.iter().enumerate() {
            let start = checks.len() as u32;
            checks.extend_from_slice(&per_pos[i]);
            steps.push(Step {
                elem: e,
                parent: tree.parent[e as usize],
                via: tree.via[e as usize],
                checks: (start, checks.len() as u32),
            });
        }
        EdgePlan {
            steps,
            checks,
            gen_orders: tree.gens.iter().map(|&s| source.elt_order(s)).collect(),
            gens: tree.gens.clone(),
            source_order: n,
        }
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    /// Fills `out` from the generator images. With `used` given, also
    /// rejects repeated values (`used` is a stamp array sized to the
    /// target; `stamp` must be fresh for this call).
    #[inline]
    pub fn extend<R: StepRule>(
        &self,
        rule: &R,
        gen_imgs: &[u16],
        out: &mut [u16],
        mut used: Option<(&mut [u32], u32)>,
    ) -> bool {
        out[0] = 0;
        if let Some((u, stamp)) = used.as_mut() {
            u[0] = *stamp;
        }
        // step 0 is the identity and carries no checks
        for st in &self.steps[1..] {
            let v = rule.step(out[st.parent as usize], st.parent as usize, gen_imgs[st.via as usize]);
            out[st.elem as usize] = v;
            if let Some((u, stamp)) = used.as_mut() {
                if u[v as usize] == *stamp {
                    return false;
                }
                u[v as usize] = *stamp;
            }
            for c in &self.checks[st.checks.0 as usize..st.checks.1 as usize] {
                let want = rule.step(out[c.from as usize], c.from as usize, gen_imgs[c.gen as usize]);
                if out[c.to as usize] != want {
                    return false;
                }
            }
        }
        true
    }

    /// Keeps the generator images that are consistent on the cyclic
    /// subgroup generated by that generator alone.
    pub fn cyclic_filter<R: StepRule>(
        &self,
        source: &FiniteGroup,
        rule: &R,
        gen_index: usize,
        candidates: &[u16],
        injective: bool,
    ) -> Vec<u16> {
        let s = self.gens[gen_index];
        let ord = self.gen_orders[gen_index];
        let mut seen = Vec::with_capacity(ord);
        candidates
            .iter()
            .copied()
            .filter(|&t| {
                let mut x = 0usize;
                let mut img = 0u16;
                seen.clear();
                for _ in 0..ord {
                    if injective {
                        if seen.contains(&img) {
                            return false;
                        }
                        seen.push(img);
                    }
                    img = rule.step(img, x, t);
                    x = source.mul(x, s);
                }
                img == 0
            })
            .collect()
    }

    /// Visits every full extension, iterating the generator candidates in
    /// lexicographic order restricted to `outer` on the first generator.
    pub fn search_range<R: StepRule>(
        &self,
        rule: &R,
        cands: &[Vec<u16>],
        target_order: usize,
        injective: bool,
        outer: std::ops::Range<usize>,
        emit: &mut dyn FnMut(&[u16], &[u16]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let k = cands.len();
        let mut out = vec![0u16; self.source_order];
        if k == 0 {
            return if outer.contains(&0) { emit(&[], &out) } else { ControlFlow::Continue(()) };
        }
        if cands.iter().any(|c| c.is_empty()) {
            return ControlFlow::Continue(());
        }
        let mut used = if injective { vec![0u32; target_order] } else { Vec::new() };
        let mut stamp = 0u32;
        let mut idx = vec![0usize; k];
        let mut gen_imgs = vec![0u16; k];
        for first in outer {
            idx[0] = first;
            idx[1..].iter_mut().for_each(|i| *i = 0);
            'inner: loop {
                for i in 0..k {
                    gen_imgs[i] = cands[i][idx[i]];
                }
                let ok = if injective {
                    stamp = stamp.wrapping_add(1);
                    if stamp == 0 {
                        used.iter_mut().for_each(|u| *u = 0);
                        stamp = 1;
                    }
                    self.extend(rule, &gen_imgs, &mut out, Some((&mut used, stamp)))
                } else {
                    self.extend(rule, &gen_imgs, &mut out, None)
                };
                if ok {
                    emit(&gen_imgs, &out)?;
                }
                let mut i = k - 1;
                loop {
                    if i == 0 {
                        break 'inner;
                    }
                    idx[i] += 1;
                    if idx[i] < cands[i].len() {
                        continue 'inner;
                    }
                    idx[i] = 0;
                    i -= 1;
                }
            }
        }
        ControlFlow::Continue(())
    }

    /// All extensions, collected in deterministic order; the first
    /// generator's candidates are split across rayon workers.
    pub fn search_collect<R: StepRule>(
        &self,
        rule: &R,
        cands: &[Vec<u16>],
        target_order: usize,
        injective: bool,
    ) -> Vec<Vec<u16>> {
        let outer = cands.first().map_or(1, |c| c.len());
        let chunks: Vec<Vec<Vec<u16>>> = (0..outer)
            .into_par_iter()
            .map(|i| {
                let mut found = Vec::new();
                let _ = self.search_range(rule, cands, target_order, injective, i..i + 1, &mut |_, out| {
                    found.push(out.to_vec());
                    ControlFlow::Continue(())
                });
                found
            })
            .collect();
        chunks.into_iter().flatten().collect()
    }
}
