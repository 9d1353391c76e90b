//! Exhaustive generation of F-free hypergraphs, optionally one per
//! isomorphism class.
//!
//! A hypergraph on `n` vertices is encoded as a bitset over the `C(n, k)`
//! k-subsets ("slots"), with slot `i` being the `i`-th k-set in colex order.
//! The canonical representative of an isomorphism class is the image whose
//! ascending list of slot indices is lexicographically smallest (equivalently
//! the lexicographically largest bitset when read from slot 0). Removing the
//! largest slot of a canonical edge set leaves a canonical edge set, so
//! canonical sets can be generated orderly: extend only by slots above the
//! current maximum and keep the children that are canonical.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::hypergraph::{k_subsets, Hypergraph};
use crate::scalar::binomial;

/// Default cap on `C(n, k)` for exhaustive searches.
pub const DEFAULT_GUARD: usize = 36;
/// Hard cap imposed by the 64-bit edge encoding.
pub const MAX_SLOTS: usize = 64;
const MAX_VERTICES: usize = 16;
const NO_SLOT: u8 = u8::MAX;

/// Size guard for exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchGuard {
    pub max_slots: usize,
    pub force: bool,
}

impl Default for SearchGuard {
    fn default() -> Self {
        SearchGuard { max_slots: DEFAULT_GUARD, force: false }
    }
}

impl SearchGuard {
    pub fn forced() -> Self {
        SearchGuard { max_slots: DEFAULT_GUARD, force: true }
    }
}

/// The k-subsets of `0..n` with lookup tables for the bitset encoding.
#[derive(Debug, Clone)]
pub struct SlotSpace {
    k: usize,
    n: usize,
    slots: Vec<Vec<usize>>,
    vmask: Vec<u32>,
    lookup: Vec<u8>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Prefix {
    Better,
    Equal,
    Worse,
}

impl SlotSpace {
    pub fn new(k: usize, n: usize, guard: SearchGuard) -> Result<Self> {
        let count = binomial(n, k);
        let count = usize::try_from(count).unwrap_or(usize::MAX);
        if count > guard.max_slots && !guard.force {
            return Err(Error::SearchTooLarge { slots: count, guard: guard.max_slots });
        }
        if count > MAX_SLOTS || n > MAX_VERTICES {
            return Err(Error::SearchTooLarge { slots: count, guard: MAX_SLOTS });
        }
        if k == 0 {
            return Err(Error::BadParams("uniformity must be at least 1".into()));
        }
        let slots = k_subsets(n, k);
        let vmask: Vec<u32> = slots.iter().map(|s| s.iter().fold(0u32, |m, &v| m | (1 << v))).collect();
        let mut lookup = vec![NO_SLOT; 1 << n];
        for (i, &m) in vmask.iter().enumerate() {
            lookup[m as usize] = i as u8;
        }
        Ok(SlotSpace { k, n, slots, vmask, lookup })
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn to_hypergraph(&self, mask: u64) -> Hypergraph {
        let edges = (0..self.len()).filter(|&i| mask >> i & 1 == 1).map(|i| self.slots[i].clone()).collect();
        Hypergraph::from_sorted_unchecked(self.k, self.n, edges)
    }

    pub fn to_mask(&self, h: &Hypergraph) -> Result<u64> {
        if h.k() != self.k {
            return Err(Error::UniformityMismatch(h.k(), self.k));
        }
        if h.n() != self.n {
            return Err(Error::BadParams(format!("expected {} vertices, got {}", self.n, h.n())));
        }
        Ok(h.edges().iter().fold(0u64, |acc, e| {
            let m = e.iter().fold(0u32, |m, &v| m | (1 << v));
            acc | 1 << self.lookup[m as usize]
        }))
    }

    fn swap_slot(&self, slot: usize, a: usize, b: usize) -> usize {
        let m = self.vmask[slot];
        let (ha, hb) = (m >> a & 1, m >> b & 1);
        if ha == hb {
            return slot;
        }
        let swapped = m ^ (1 << a) ^ (1 << b);
        self.lookup[swapped as usize] as usize
    }

    fn is_transposition_automorphism(&self, mask: u64, a: usize, b: usize) -> bool {
        (0..self.len()).all(|s| mask >> s & 1 == 0 || mask >> self.swap_slot(s, a, b) & 1 == 1)
    }

    /// Class id per vertex for the transposition-automorphism relation.
    fn transposition_classes(&self, mask: u64) -> Vec<usize> {
        let mut class: Vec<usize> = (0..self.n).collect();
        for b in 0..self.n {
            for a in 0..b {
                if class[a] == a && self.is_transposition_automorphism(mask, a, b) {
                    class[b] = a;
                    break;
                }
            }
        }
        class
    }

    fn low_bits(count: usize) -> u64 {
        if count >= 64 {
            u64::MAX
        } else {
            (1u64 << count) - 1
        }
    }

    fn compare_prefix(a: u64, b: u64, limit: usize) -> Prefix {
        let keep = Self::low_bits(limit);
        let diff = (a ^ b) & keep;
        if diff == 0 {
            return Prefix::Equal;
        }
        let lowest = diff & diff.wrapping_neg();
        if a & lowest != 0 {
            Prefix::Better
        } else {
            Prefix::Worse
        }
    }

    /// Total order used for canonical forms (`Less` = preferred).
    pub fn canonical_cmp(a: u64, b: u64) -> Ordering {
        match Self::compare_prefix(a, b, 64) {
            Prefix::Better => Ordering::Less,
            Prefix::Equal => Ordering::Equal,
            Prefix::Worse => Ordering::Greater,
        }
    }

    /// Canonical representative of `mask`'s isomorphism class.
    pub fn canonical_form(&self, mask: u64) -> u64 {
        let mut search = CanonSearch::new(self, mask, false);
        search.run();
        search.best
    }

    /// Whether `mask` is its own canonical representative.
    pub fn is_canonical(&self, mask: u64) -> bool {
        let mut search = CanonSearch::new(self, mask, true);
        search.run();
        !search.improved
    }
}

struct CanonSearch<'a> {
    space: &'a SlotSpace,
    mask: u64,
    class: Vec<usize>,
    best: u64,
    improved: bool,
    stop_on_improvement: bool,
    orig_of: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> CanonSearch<'a> {
    fn new(space: &'a SlotSpace, mask: u64, stop_on_improvement: bool) -> Self {
        CanonSearch {
            space,
            mask,
            class: space.transposition_classes(mask),
            best: mask,
            improved: false,
            stop_on_improvement,
            orig_of: vec![usize::MAX; space.n],
            used: vec![false; space.n],
        }
    }

    fn run(&mut self) {
        self.dfs(0, 0);
    }

    fn level_bounds(&self, level: usize) -> (usize, usize) {
        let k = self.space.k;
        (binomial(level, k) as usize, binomial(level + 1, k) as usize)
    }

    fn dfs(&mut self, level: usize, cur: u64) {
        if self.stop_on_improvement && self.improved {
            return;
        }
        let n = self.space.n;
        if level == n {
            if SlotSpace::compare_prefix(cur, self.best, 64) == Prefix::Better {
                self.best = cur;
                self.improved = true;
            }
            return;
        }
        let (lo, hi) = self.level_bounds(level);
        let mut tried_class = vec![false; n];
        for v in 0..n {
            if self.used[v] || tried_class[self.class[v]] {
                continue;
            }
            tried_class[self.class[v]] = true;
            self.orig_of[level] = v;
            self.used[v] = true;
            let mut next = cur;
            for slot in lo..hi {
                let target = self.space.vmask[slot];
                let mut orig = 0u32;
                let mut bits = target;
                while bits != 0 {
                    let t = bits.trailing_zeros() as usize;
                    orig |= 1 << self.orig_of[t];
                    bits &= bits - 1;
                }
                let src = self.space.lookup[orig as usize];
                if self.mask >> src & 1 == 1 {
                    next |= 1 << slot;
                }
            }
            match SlotSpace::compare_prefix(next, self.best, hi) {
                Prefix::Worse => {}
                Prefix::Better if self.stop_on_improvement => {
                    self.improved = true;
                }
                _ => self.dfs(level + 1, next),
            }
            self.used[v] = false;
            if self.stop_on_improvement && self.improved {
                return;
            }
        }
    }
}

fn is_free_mask(space: &SlotSpace, fam: &FamilySpec, mask: u64) -> Result<bool> {
    if fam.members().is_empty() {
        return Ok(true);
    }
    fam.is_free(&space.to_hypergraph(mask))
}

/// Depth-first walk over F-free edge sets. `visit(mask)` returns whether to
/// descend below `mask`. With `up_to_iso`, only canonical sets are visited.
pub(crate) fn walk_free<F>(space: &SlotSpace, fam: &FamilySpec, up_to_iso: bool, mut visit: F) -> Result<()>
where
    F: FnMut(u64) -> bool,
{
    if fam.k() != space.k {
        return Err(Error::UniformityMismatch(space.k, fam.k()));
    }
    fn rec<F: FnMut(u64) -> bool>(
        space: &SlotSpace,
        fam: &FamilySpec,
        up_to_iso: bool,
        mask: u64,
        start: usize,
        visit: &mut F,
    ) -> Result<()> {
        if !visit(mask) {
            return Ok(());
        }
        for x in start..space.len() {
            let child = mask | 1 << x;
            if up_to_iso && !space.is_canonical(child) {
                continue;
            }
            if !is_free_mask(space, fam, child)? {
                continue;
            }
            rec(space, fam, up_to_iso, child, x + 1, visit)?;
        }
        Ok(())
    }
    if !is_free_mask(space, fam, 0)? {
        return Ok(());
    }
    rec(space, fam, up_to_iso, 0, 0, &mut visit)
}

/// Every F-free k-graph on `n` vertices; with `up_to_iso`, exactly one
/// (canonical) representative per isomorphism class. Output order is the
/// deterministic depth-first generation order.
pub fn enumerate_free(k: usize, n: usize, fam: &FamilySpec, up_to_iso: bool, guard: SearchGuard) -> Result<Vec<Hypergraph>> {
    let space = SlotSpace::new(k, n, guard)?;
    let mut masks = Vec::new();
    walk_free(&space, fam, up_to_iso, |m| {
        masks.push(m);
        true
    })?;
    Ok(masks.into_iter().map(|m| space.to_hypergraph(m)).collect())
}

/// Canonical relabelling of `h` (within the bitset limits of the enumerator).
pub fn canonical_form(h: &Hypergraph) -> Result<Hypergraph> {
    let space = SlotSpace::new(h.k(), h.n(), SearchGuard::forced())?;
    let mask = space.to_mask(h)?;
    Ok(space.to_hypergraph(space.canonical_form(mask)))
}

/// Isomorphism test via canonical forms.
pub fn are_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool> {
    if a.k() != b.k() || a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
