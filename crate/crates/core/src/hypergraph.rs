//! Exact representation of k-uniform hypergraphs and the named families
//! used throughout the crate.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{bad_params, Error, Result};
use crate::scalar::binomial;

/// Compare two sorted k-sets in colexicographic order: `a < b` iff the
/// largest element of the symmetric difference lies in `b`.
pub fn colex_cmp(a: &[usize], b: &[usize]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

/// A k-uniform hypergraph on the vertex set `0..n`.
///
/// Edges are stored as strictly increasing vertex lists, and the edge list
/// is kept in colex order so that structural equality is set equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    k: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Build a hypergraph, validating every edge.
    pub fn new<I, E>(k: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        if k == 0 {
            return Err(bad_params("uniformity must be at least 1"));
        }
        let mut out = Vec::new();
        for edge in edges {
            let mut e = edge.as_ref().to_vec();
            e.sort_unstable();
            e.dedup();
            if e.len() != k || edge.as_ref().len() != k {
                return Err(Error::EdgeArity {
                    edge: edge.as_ref().to_vec(),
                    k,
                });
            }
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::VertexRange { vertex: v, n });
            }
            out.push(e);
        }
        out.sort_by(|a, b| colex_cmp(a, b));
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].clone()));
        }
        Ok(Hypergraph { k, n, edges: out })
    }

    /// Construct from edges already known to be valid and sorted; only used
    /// internally where the invariants hold by construction.
    pub(crate) fn from_sorted_unchecked(k: usize, n: usize, mut edges: Vec<Vec<usize>>) -> Self {
        edges.sort_by(|a, b| colex_cmp(a, b));
        debug_assert!(edges.windows(2).all(|w| w[0] != w[1]));
        debug_assert!(edges.iter().all(|e| e.len() == k && e.iter().all(|&v| v < n)));
        Hypergraph { k, n, edges }
    }

    /// The edgeless k-graph on `n` vertices.
    pub fn empty(k: usize, n: usize) -> Result<Self> {
        Hypergraph::new(k, n, Vec::<Vec<usize>>::new())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Whether the (sorted) vertex set is an edge.
    pub fn has_edge(&self, edge: &[usize]) -> bool {
        self.edges.binary_search_by(|e| colex_cmp(e, edge)).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    /// The complete k-graph `K^k_t`.
    pub fn complete(k: usize, t: usize) -> Result<Self> {
        if k == 0 || t < k {
            return Err(bad_params(format!("complete({k}, {t}) needs 1 <= k <= t")));
        }
        Ok(Hypergraph::from_sorted_unchecked(k, t, k_subsets(t, k)))
    }

    /// The balanced complete r-partite graph `T_{r,n}`. Parts are contiguous
    /// vertex intervals, larger parts first.
    pub fn turan_graph(r: usize, n: usize) -> Result<Self> {
        if r == 0 {
            return Err(bad_params("turan_graph needs r >= 1"));
        }
        let part = balanced_parts(n, r);
        let mut edges = Vec::new();
        for b in 0..n {
            for a in 0..b {
                if part[a] != part[b] {
                    edges.push(vec![a, b]);
                }
            }
        }
        Ok(Hypergraph::from_sorted_unchecked(2, n, edges))
    }

    /// Complete multipartite graph with the given part sizes, parts laid
    /// out as contiguous intervals in the order given.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let part: Vec<usize> = parts.iter().enumerate().flat_map(|(p, &size)| std::iter::repeat_n(p, size)).collect();
        let n = part.len();
        let mut edges = Vec::new();
        for b in 0..n {
            for a in 0..b {
                if part[a] != part[b] {
                    edges.push(vec![a, b]);
                }
            }
        }
        Hypergraph::from_sorted_unchecked(2, n, edges)
    }

    /// All triples meeting both `0..a` and `a..n`.
    pub fn complete_bipartite3(a: usize, n: usize) -> Result<Self> {
        if a > n {
            return Err(bad_params(format!("part size {a} exceeds n = {n}")));
        }
        let edges = k_subsets(n, 3)
            .into_iter()
            .filter(|e| {
                let low = e.iter().filter(|&&v| v < a).count();
                low > 0 && low < 3
            })
            .collect();
        Ok(Hypergraph::from_sorted_unchecked(3, n, edges))
    }

    /// The t-star `S^k_{n,t}`: all k-sets containing the centre `{0..t-1}`.
    pub fn star(k: usize, t: usize, n: usize) -> Result<Self> {
        if k == 0 || t > k || k > n {
            return Err(bad_params(format!("star(k={k}, t={t}, n={n}) needs t <= k <= n")));
        }
        let centre: Vec<usize> = (0..t).collect();
        let edges = k_subsets(n - t, k - t)
            .into_iter()
            .map(|rest| {
                let mut e = centre.clone();
                e.extend(rest.into_iter().map(|v| v + t));
                e
            })
            .collect();
        Ok(Hypergraph::from_sorted_unchecked(k, n, edges))
    }

    /// `B_n`: parts `0..floor(n/2)` and the rest, edges are all triples
    /// meeting both parts.
    pub fn balanced_bipartite3(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(bad_params("balanced_bipartite3 needs n >= 3"));
        }
        Hypergraph::complete_bipartite3(n / 2, n)
    }

    /// `T^3_n`: balanced complete 3-partite 3-graph, one vertex per part.
    pub fn tripartite3(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(bad_params("tripartite3 needs n >= 3"));
        }
        let part = balanced_parts(n, 3);
        let edges = k_subsets(n, 3)
            .into_iter()
            .filter(|e| part[e[0]] != part[e[1]] && part[e[1]] != part[e[2]] && part[e[0]] != part[e[2]])
            .collect();
        Ok(Hypergraph::from_sorted_unchecked(3, n, edges))
    }

    /// The Fano plane. Vertex `v` is the nonzero vector of F_2^3 with binary
    /// representation `v + 1`; edges are the triples `{x, y, x + y}`.
    pub fn fano() -> Self {
        let mut edges = Vec::new();
        for x in 1..8usize {
            for y in (x + 1)..8 {
                let z = x ^ y;
                if z > y {
                    edges.push(vec![x - 1, y - 1, z - 1]);
                }
            }
        }
        Hypergraph::from_sorted_unchecked(3, 7, edges)
    }

    /// `F_5 = {123, 124, 345}`, zero-based.
    pub fn f5() -> Self {
        Hypergraph::from_sorted_unchecked(3, 5, vec![vec![0, 1, 2], vec![0, 1, 3], vec![2, 3, 4]])
    }

    /// Two k-edges meeting in exactly `i` vertices (`i < k`).
    pub fn edge_pair(k: usize, i: usize) -> Result<Self> {
        if k == 0 || i >= k {
            return Err(bad_params(format!("edge_pair needs i < k, got k={k}, i={i}")));
        }
        let first: Vec<usize> = (0..k).collect();
        let second: Vec<usize> = (0..i).chain(k..(2 * k - i)).collect();
        Ok(Hypergraph::from_sorted_unchecked(k, 2 * k - i, vec![first, second]))
    }

    /// The first `m` k-sets in colex order, on the fewest vertices that hold them.
    pub fn colex_segment(k: usize, m: usize) -> Result<Self> {
        if k == 0 {
            return Err(bad_params("colex_segment needs k >= 1"));
        }
        let mut t = if m == 0 { 0 } else { k };
        while binomial(t, k) < m as u128 {
            t += 1;
        }
        let edges: Vec<Vec<usize>> = k_subsets(t, k).into_iter().take(m).collect();
        let n = edges.iter().map(|e| e[k - 1] + 1).max().unwrap_or(0);
        Ok(Hypergraph::from_sorted_unchecked(k, n, edges))
    }

    /// The `(k-1)`-uniform shadow.
    pub fn shadow(&self) -> Result<Self> {
        if self.k < 2 {
            return Err(bad_params("shadow needs k >= 2"));
        }
        let mut sets: Vec<Vec<usize>> = Vec::new();
        for e in &self.edges {
            for skip in 0..self.k {
                let mut s = e.clone();
                s.remove(skip);
                sets.push(s);
            }
        }
        sets.sort_by(|a, b| colex_cmp(a, b));
        sets.dedup();
        Ok(Hypergraph::from_sorted_unchecked(self.k - 1, self.n, sets))
    }

    /// Minimum s-degree: the least number of edges containing an s-set.
    /// `min_s_degree(0)` is the edge count.
    pub fn min_s_degree(&self, s: usize) -> Result<usize> {
        if s >= self.k {
            return Err(bad_params(format!("s = {s} must be below k = {}", self.k)));
        }
        if s == 0 {
            return Ok(self.edge_count());
        }
        if s > self.n {
            return Ok(0);
        }
        let mut counts: HashMap<Vec<usize>, usize> = HashMap::new();
        for e in &self.edges {
            for idx in k_subsets(self.k, s) {
                let sub: Vec<usize> = idx.iter().map(|&i| e[i]).collect();
                *counts.entry(sub).or_insert(0) += 1;
            }
        }
        if (counts.len() as u128) < binomial(self.n, s) {
            return Ok(0);
        }
        Ok(counts.values().copied().min().unwrap_or(0))
    }

    /// Remove vertex `u`, keeping the edges that avoid it; remaining vertices
    /// are relabelled in order.
    pub fn delete_vertex(&self, u: usize) -> Result<Self> {
        if u >= self.n {
            return Err(Error::VertexRange { vertex: u, n: self.n });
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.contains(&u))
            .map(|e| e.iter().map(|&v| if v > u { v - 1 } else { v }).collect())
            .collect();
        Ok(Hypergraph::from_sorted_unchecked(self.k, self.n - 1, edges))
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::UniformityMismatch(self.k, other.k));
        }
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .cloned()
            .chain(other.edges.iter().map(|e| e.iter().map(|&v| v + shift).collect()))
            .collect();
        Ok(Hypergraph::from_sorted_unchecked(self.k, self.n + other.n, edges))
    }

    /// The same hypergraph with `extra` isolated vertices appended.
    pub fn with_isolated(&self, extra: usize) -> Self {
        Hypergraph { k: self.k, n: self.n + extra, edges: self.edges.clone() }
    }

    /// Add one edge, returning the enlarged hypergraph.
    pub fn with_edge(&self, edge: &[usize]) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges.push(edge.to_vec());
        Hypergraph::new(self.k, self.n, edges)
    }

    /// Image under the vertex map `v -> perm[v]` (must be a permutation of `0..n`).
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(bad_params("permutation length differs from vertex count"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(bad_params("not a permutation"));
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let mut img: Vec<usize> = e.iter().map(|&v| perm[v]).collect();
                img.sort_unstable();
                img
            })
            .collect();
        Ok(Hypergraph::from_sorted_unchecked(self.k, self.n, edges))
    }

    /// Whether swapping `i` and `j` maps the edge set onto itself.
    pub fn is_transposition_automorphism(&self, i: usize, j: usize) -> bool {
        if i == j {
            return true;
        }
        self.edges.iter().all(|e| {
            let has_i = e.contains(&i);
            let has_j = e.contains(&j);
            if has_i == has_j {
                return true;
            }
            let (from, to) = if has_i { (i, j) } else { (j, i) };
            let mut img: Vec<usize> = e.iter().map(|&v| if v == from { to } else { v }).collect();
            img.sort_unstable();
            self.has_edge(&img)
        })
    }

    /// Connected components (isolated vertices form singleton components),
    /// each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            for w in e.windows(2) {
                let a = find(&mut parent, w[0]);
                let b = find(&mut parent, w[1]);
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut index: HashMap<usize, usize> = HashMap::new();
        for v in 0..self.n {
            let root = find(&mut parent, v);
            let slot = *index.entry(root).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[slot].push(v);
        }
        groups
    }

    /// Serialize in the line-oriented text format (`k n`, then one edge per line).
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.k, self.n);
        for e in &self.edges {
            let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parse the text format. `#` starts a comment; blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums: std::result::Result<Vec<usize>, _> =
                line.split_whitespace().map(str::parse::<usize>).collect();
            let nums = nums.map_err(|e| Error::Parse { line: line_no, msg: e.to_string() })?;
            match header {
                None => {
                    if nums.len() != 2 {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: "header must be `k n`".into(),
                        });
                    }
                    header = Some((nums[0], nums[1]));
                }
                Some((k, _)) => {
                    if nums.len() != k {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("expected {k} vertices, found {}", nums.len()),
                        });
                    }
                    edges.push(nums);
                }
            }
        }
        let (k, n) = header.ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
        Hypergraph::new(k, n, edges)
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(k={}, n={}, {:?})", self.k, self.n, self.edges)
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|e| e.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "k={} n={} edges={{{}}}", self.k, self.n, edges.join(" "))
    }
}

impl FromStr for Hypergraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Hypergraph::parse(s)
    }
}

/// All k-subsets of `0..n` in colex order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    // colex order: grow the largest element slowly
    for top in (k - 1)..n {
        for mut rest in k_subsets(top, k - 1) {
            rest.push(top);
            out.push(rest);
        }
    }
    out
}

/// Part index of each vertex for a balanced split of `0..n` into `r`
/// contiguous intervals, larger parts first.
pub(crate) fn balanced_parts(n: usize, r: usize) -> Vec<usize> {
    let (q, s) = (n / r, n % r);
    let mut part = Vec::with_capacity(n);
    for p in 0..r {
        let size = if p < s { q + 1 } else { q };
        part.extend(std::iter::repeat_n(p, size));
    }
    part
}
