//! Exhaustive desk-scale searches over F-free k-graphs: Turán numbers,
//! spectral maxima and checks of universality-type statements.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::closed_forms::{edge_bound, star_lambda};
use crate::embed::contains;
use crate::enumerate::{are_isomorphic, walk_free, SearchGuard, SlotSpace};
use crate::error::{bad_params, Error, Result};
use crate::family::FamilySpec;
use crate::hypergraph::Hypergraph;
use crate::spectral::{solve, SolverConfig};

/// Tolerance for comparing spectral radii in verdicts.
pub const LAMBDA_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Confirmed,
    Refuted,
    Indeterminate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Refuted => "refuted",
            Verdict::Indeterminate => "indeterminate",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchReport {
    pub question: String,
    pub n: usize,
    pub k: usize,
    pub alpha: Option<f64>,
    pub optimum_value: f64,
    pub witness: Option<Hypergraph>,
    /// Number of isomorphism classes attaining the optimum (within
    /// [`LAMBDA_TOL`] for spectral optima).
    pub witness_iso_class_count: usize,
    pub verdict: Verdict,
    pub counterexample: Option<Hypergraph>,
    pub wall_time: Duration,
    /// Extra named quantities, in a fixed order.
    pub details: Vec<(String, String)>,
}

impl SearchReport {
    fn new(question: impl Into<String>, k: usize, n: usize, alpha: Option<f64>) -> Self {
        SearchReport {
            question: question.into(),
            n,
            k,
            alpha,
            optimum_value: 0.0,
            witness: None,
            witness_iso_class_count: 0,
            verdict: Verdict::Indeterminate,
            counterexample: None,
            wall_time: Duration::ZERO,
            details: Vec::new(),
        }
    }

    fn detail(&mut self, key: &str, value: impl fmt::Display) {
        self.details.push((key.to_string(), value.to_string()));
    }

    pub fn detail_value(&self, key: &str) -> Option<&str> {
        self.details.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

/// Knobs shared by the searches.
#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub guard: SearchGuard,
    /// Template for every solve; its `alpha` is replaced per query.
    pub solver: SolverConfig,
    /// Skip classes whose edge bound cannot reach the incumbent.
    pub prune: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { guard: SearchGuard::default(), solver: SolverConfig::new(2.0), prune: true }
    }
}

impl SearchOptions {
    fn solver_for(&self, alpha: f64) -> SolverConfig {
        SolverConfig { alpha, ..self.solver.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UniversalKind {
    /// Complete multipartite graphs with at most `r` parts.
    CompleteMultipartite(usize),
    /// Complete bipartite 3-graphs over every bipartition.
    TwoColorable3,
    /// The single star `S^k_{n,t}`.
    Stars { k: usize, t: usize },
    ExplicitList(Vec<Hypergraph>),
    /// Every F-free hypergraph on `n` vertices.
    AllFree,
}

/// A candidate universal family on `n` vertices. Only maximal members are
/// generated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalFamilySpec {
    pub kind: UniversalKind,
    pub n: usize,
}

impl UniversalFamilySpec {
    pub fn complete_multipartite(r: usize, n: usize) -> Self {
        UniversalFamilySpec { kind: UniversalKind::CompleteMultipartite(r), n }
    }

    pub fn two_colorable_3graphs(n: usize) -> Self {
        UniversalFamilySpec { kind: UniversalKind::TwoColorable3, n }
    }

    pub fn stars(k: usize, t: usize, n: usize) -> Self {
        UniversalFamilySpec { kind: UniversalKind::Stars { k, t }, n }
    }

    pub fn explicit(members: Vec<Hypergraph>, n: usize) -> Self {
        UniversalFamilySpec { kind: UniversalKind::ExplicitList(members), n }
    }

    pub fn all_free(n: usize) -> Self {
        UniversalFamilySpec { kind: UniversalKind::AllFree, n }
    }

    pub fn members(&self, fam: &FamilySpec, guard: SearchGuard) -> Result<Vec<Hypergraph>> {
        let n = self.n;
        let members = match &self.kind {
            UniversalKind::CompleteMultipartite(r) => {
                if *r == 0 {
                    return Err(bad_params("multipartite family needs r >= 1"));
                }
                partitions(n, *r).iter().map(|p| Hypergraph::complete_multipartite(p)).collect()
            }
            UniversalKind::TwoColorable3 => (1..=n / 2).map(|a| Hypergraph::complete_bipartite3(a, n)).collect::<Result<_>>()?,
            UniversalKind::Stars { k, t } => vec![Hypergraph::star(*k, *t, n)?],
            UniversalKind::ExplicitList(list) => {
                if let Some(h) = list.iter().find(|h| h.n() != n) {
                    return Err(bad_params(format!("member on {} vertices in a family for n = {n}", h.n())));
                }
                list.clone()
            }
            UniversalKind::AllFree => {
                let space = SlotSpace::new(fam.k(), n, guard)?;
                free_classes(&space, fam)?.into_iter().map(|m| space.to_hypergraph(m)).collect()
            }
        };
        if let Some(h) = members.iter().find(|h| h.k() != fam.k()) {
            return Err(Error::UniformityMismatch(h.k(), fam.k()));
        }
        Ok(members)
    }
}

/// Partitions of `n` into at most `r` positive parts, non-increasing.
fn partitions(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, max: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if parts == 0 {
            return;
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, r, &mut Vec::new(), &mut out);
    out
}

fn free_classes(space: &SlotSpace, fam: &FamilySpec) -> Result<Vec<u64>> {
    let mut masks = Vec::new();
    walk_free(space, fam, true, |m| {
        masks.push(m);
        true
    })?;
    Ok(masks)
}

fn check_family(k: usize, fam: &FamilySpec) -> Result<()> {
    if fam.k() != k {
        return Err(Error::UniformityMismatch(k, fam.k()));
    }
    Ok(())
}

fn fmt_f(x: f64) -> String {
    format!("{x:.10}")
}

/// Highest slot index in use plus one.
fn next_slot(mask: u64) -> usize {
    64 - mask.leading_zeros() as usize
}

/// `ex(n, F)`: the largest number of edges in an F-free k-graph on `n`
/// vertices.
pub fn ex_number(k: usize, n: usize, fam: &FamilySpec, opts: &SearchOptions) -> Result<SearchReport> {
    let start = Instant::now();
    check_family(k, fam)?;
    let space = SlotSpace::new(k, n, opts.guard)?;
    let total = space.len();
    let mut best = 0usize;
    let mut witness = 0u64;
    let mut ties = 0usize;
    let mut visited = 0usize;
    walk_free(&space, fam, true, |mask| {
        visited += 1;
        let e = mask.count_ones() as usize;
        if e > best {
            best = e;
            witness = mask;
            ties = 1;
        } else if e == best {
            ties += 1;
        }
        // descend only while a tie with the incumbent is still reachable
        e + (total - next_slot(mask)) >= best
    })?;
    let mut report = SearchReport::new(format!("ex(n={n}, k={k})"), k, n, None);
    report.optimum_value = best as f64;
    report.witness = Some(space.to_hypergraph(witness));
    report.witness_iso_class_count = ties;
    report.verdict = Verdict::Confirmed;
    report.detail("classes_visited", visited);
    report.wall_time = start.elapsed();
    Ok(report)
}

/// `ex_s(n, F)`: the largest minimum s-degree of an F-free k-graph on `n`
/// vertices.
pub fn ex_s_number(k: usize, n: usize, fam: &FamilySpec, s: usize, opts: &SearchOptions) -> Result<SearchReport> {
    let start = Instant::now();
    check_family(k, fam)?;
    if s >= k {
        return Err(bad_params(format!("s must be below k, got s={s}, k={k}")));
    }
    let space = SlotSpace::new(k, n, opts.guard)?;
    let mut best = 0usize;
    let mut witness = 0u64;
    let mut ties = 0usize;
    let mut err = None;
    walk_free(&space, fam, true, |mask| {
        match space.to_hypergraph(mask).min_s_degree(s) {
            Ok(d) if d > best => {
                best = d;
                witness = mask;
                ties = 1;
            }
            Ok(d) if d == best => ties += 1,
            Ok(_) => {}
            Err(e) => err = Some(e),
        }
        err.is_none()
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    let mut report = SearchReport::new(format!("ex_{s}(n={n}, k={k})"), k, n, None);
    report.optimum_value = best as f64;
    report.witness = Some(space.to_hypergraph(witness));
    report.witness_iso_class_count = ties;
    report.verdict = Verdict::Confirmed;
    report.detail("s", s);
    report.wall_time = start.elapsed();
    Ok(report)
}

struct Solved {
    mask: u64,
    lambda: f64,
    converged: bool,
}

/// Solve every class in `masks`, in parallel, keeping input order.
fn solve_all(space: &SlotSpace, masks: &[u64], cfg: &SolverConfig) -> Result<Vec<Solved>> {
    masks
        .par_iter()
        .map(|&mask| {
            let r = solve(&space.to_hypergraph(mask), cfg)?;
            Ok(Solved { mask, lambda: r.lambda, converged: r.converged })
        })
        .collect()
}

/// Largest `lambda_alpha` over F-free k-graphs on `n` vertices, one solve per
/// isomorphism class. For `alpha > 1` classes whose edge bound falls below
/// the incumbent are skipped when `opts.prune` is set.
pub fn spectral_max(k: usize, n: usize, fam: &FamilySpec, alpha: f64, opts: &SearchOptions) -> Result<SearchReport> {
    let start = Instant::now();
    check_family(k, fam)?;
    if !(alpha >= 1.0) {
        return Err(Error::BadAlpha(alpha));
    }
    let space = SlotSpace::new(k, n, opts.guard)?;
    let cfg = opts.solver_for(alpha);
    let classes = free_classes(&space, fam)?;

    // largest edge counts first
    let mut by_edges: Vec<Vec<u64>> = vec![Vec::new(); space.len() + 1];
    for &m in &classes {
        by_edges[m.count_ones() as usize].push(m);
    }
    let mut solved: Vec<Solved> = Vec::new();
    let mut incumbent = f64::NEG_INFINITY;
    let mut skipped = 0usize;
    for e in (0..by_edges.len()).rev() {
        let group = &by_edges[e];
        if group.is_empty() {
            continue;
        }
        if opts.prune && alpha > 1.0 && edge_bound(k, e, alpha)? < incumbent - LAMBDA_TOL {
            skipped += group.len();
            continue;
        }
        for s in solve_all(&space, group, &cfg)? {
            incumbent = incumbent.max(s.lambda);
            solved.push(s);
        }
    }

    let best = solved.iter().map(|s| s.lambda).fold(f64::NEG_INFINITY, f64::max);
    let tied: Vec<&Solved> = solved.iter().filter(|s| s.lambda >= best - LAMBDA_TOL).collect();
    let winner = tied[0];
    let mut report = SearchReport::new(format!("spectral_max(n={n}, k={k})"), k, n, Some(alpha));
    report.optimum_value = best;
    report.witness = Some(space.to_hypergraph(winner.mask));
    report.witness_iso_class_count = tied.len();
    let all_converged = solved.iter().all(|s| s.converged);
    report.verdict = if all_converged { Verdict::Confirmed } else { Verdict::Indeterminate };
    report.detail("classes", classes.len());
    report.detail("solved", solved.len());
    report.detail("pruned", skipped);
    report.detail("all_converged", all_converged);
    report.wall_time = start.elapsed();
    Ok(report)
}

/// Members of `candidates` (in order) that embed in no member of `gset`.
fn first_not_contained<'a>(candidates: impl Iterator<Item = &'a Hypergraph>, members: &[Hypergraph]) -> Result<Option<Hypergraph>> {
    for h in candidates {
        let mut inside = false;
        for g in members {
            if contains(g, h)? {
                inside = true;
                break;
            }
        }
        if !inside {
            return Ok(Some(h.clone()));
        }
    }
    Ok(None)
}

/// Check that every F-free `H` with `min_s_degree(H) > c ex_s(n, F)` embeds
/// in a member of `gset`.
pub fn check_universal(fam: &FamilySpec, gset: &UniversalFamilySpec, s: usize, c: f64, opts: &SearchOptions) -> Result<SearchReport> {
    let start = Instant::now();
    let (k, n) = (fam.k(), gset.n);
    if !(c > 0.0) {
        return Err(bad_params("c must be positive"));
    }
    let ex_s = ex_s_number(k, n, fam, s, opts)?.optimum_value;
    let threshold = c * ex_s;
    let members = gset.members(fam, opts.guard)?;
    let space = SlotSpace::new(k, n, opts.guard)?;
    let mut dense = Vec::new();
    for mask in free_classes(&space, fam)? {
        let h = space.to_hypergraph(mask);
        if h.min_s_degree(s)? as f64 > threshold {
            dense.push(h);
        }
    }
    let failure = first_not_contained(dense.iter(), &members)?;
    let mut report = SearchReport::new(format!("universal(n={n}, k={k}, s={s}, c={c})"), k, n, None);
    report.optimum_value = ex_s;
    report.verdict = if failure.is_some() { Verdict::Refuted } else { Verdict::Confirmed };
    report.counterexample = failure;
    report.detail("threshold", fmt_f(threshold));
    report.detail("members", members.len());
    report.detail("tested", dense.len());
    report.wall_time = start.elapsed();
    Ok(report)
}

/// Exhaustive check of the spectral stability statement: if
/// `c < lambda(G)^{a/(a-1)} / (k! ex)` and the family is
/// `(F, n, 0, c)`-universal, then every F-free `H` has
/// `lambda(H) <= lambda(G)`, and `lambda(H) > (c k! ex)^{(a-1)/a}` forces
/// `H` into a member.
///
/// The inequality, the universality premise and the two conclusions are
/// reported separately. The verdict is `confirmed` when the inequality and
/// both conclusions hold, `refuted` when a conclusion fails although the
/// inequality and the premise hold, and `indeterminate` otherwise.
pub fn strongstab_check(fam: &FamilySpec, gset: &UniversalFamilySpec, alpha: f64, c: f64, opts: &SearchOptions) -> Result<SearchReport> {
    let start = Instant::now();
    if !(alpha > 1.0) {
        return Err(Error::BadAlpha(alpha));
    }
    if !(c > 0.0) {
        return Err(bad_params("c must be positive"));
    }
    let (k, n) = (fam.k(), gset.n);
    let cfg = opts.solver_for(alpha);
    let members = gset.members(fam, opts.guard)?;
    if members.is_empty() {
        return Err(bad_params("universal family has no members"));
    }
    let member_lambdas: Vec<f64> = members.par_iter().map(|g| solve(g, &cfg).map(|r| r.lambda)).collect::<Result<_>>()?;
    let lambda_g = member_lambdas.iter().copied().fold(0.0, f64::max);
    let ex = ex_number(k, n, fam, opts)?.optimum_value;
    let kf: f64 = (1..=k).map(|i| i as f64).product();
    let c_limit = lambda_g.powf(alpha / (alpha - 1.0)) / (kf * ex);
    let inequality = c < c_limit;
    let premise = check_universal(fam, gset, 0, c, opts)?;
    let level = (c * kf * ex).powf((alpha - 1.0) / alpha);

    let space = SlotSpace::new(k, n, opts.guard)?;
    let classes = free_classes(&space, fam)?;
    let solved = solve_all(&space, &classes, &cfg)?;
    let mut over_g = None;
    let mut high = Vec::new();
    let mut best: Option<&Solved> = None;
    for s in &solved {
        if s.lambda > lambda_g + LAMBDA_TOL && over_g.is_none() {
            over_g = Some(space.to_hypergraph(s.mask));
        }
        if s.lambda > level + LAMBDA_TOL {
            high.push(space.to_hypergraph(s.mask));
        }
        if best.is_none_or(|b| s.lambda > b.lambda + LAMBDA_TOL) {
            best = Some(s);
        }
    }
    let escaped = first_not_contained(high.iter(), &members)?;
    let conclusion1 = over_g.is_none();
    let conclusion2 = escaped.is_none();
    let premise_holds = premise.verdict == Verdict::Confirmed;

    let mut report = SearchReport::new(format!("strongstab(n={n}, k={k}, c={c})"), k, n, Some(alpha));
    let best = best.expect("the empty hypergraph is always free");
    report.optimum_value = best.lambda;
    report.witness = Some(space.to_hypergraph(best.mask));
    report.witness_iso_class_count = solved.iter().filter(|s| s.lambda >= best.lambda - LAMBDA_TOL).count();
    report.verdict = if !inequality {
        Verdict::Indeterminate
    } else if conclusion1 && conclusion2 {
        Verdict::Confirmed
    } else if premise_holds {
        Verdict::Refuted
    } else {
        Verdict::Indeterminate
    };
    report.counterexample = over_g.or(escaped);
    report.detail("lambda_G", fmt_f(lambda_g));
    report.detail("ex", ex);
    report.detail("c_limit", fmt_f(c_limit));
    report.detail("inequality", inequality);
    report.detail("universal_premise", premise_holds);
    if let Some(h) = &premise.counterexample {
        report.detail("premise_counterexample", edge_list(h));
    }
    report.detail("lambda_level", fmt_f(level));
    report.detail("conclusion_bound", conclusion1);
    report.detail("conclusion_embedding", conclusion2);
    report.wall_time = start.elapsed();
    Ok(report)
}

/// Compact single-line edge list, e.g. `0 1,0 2`.
pub fn edge_list(h: &Hypergraph) -> String {
    h.edges()
        .iter()
        .map(|e| e.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityRow {
    pub n: usize,
    /// `None` when the search for this `n` exceeded the guard.
    pub values: Option<DensityValues>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityValues {
    pub ex: usize,
    pub ex_prev: usize,
    pub first_difference: i64,
    pub pi_binomial: f64,
    /// `|ex(n) - ex(n-1) - pi C(n, k-1)|`.
    pub residual1: f64,
    /// `residual1 / n^{k-1}`.
    pub residual1_scaled: f64,
    pub lambda_g: f64,
    pub uniform_estimate: f64,
    /// `|lambda(G_n) - k! ex n^{-k/alpha}|`.
    pub residual2: f64,
    /// `residual2 / n^{k - k/alpha - 1}`.
    pub residual2_scaled: f64,
    /// `lambda(G_n) / (pi n^{k - k/alpha})`, absent when `pi = 0`.
    pub mu_ratio: Option<f64>,
}

/// Tabulate the finite ingredients of the density theorem for
/// `n_lo..=n_hi`, with `pi` supplied by the caller.
pub fn density_report<G>(fam: &FamilySpec, n_lo: usize, n_hi: usize, alpha: f64, pi: f64, gset_for: G, opts: &SearchOptions) -> Result<Vec<DensityRow>>
where
    G: Fn(usize) -> UniversalFamilySpec,
{
    if !(alpha >= 1.0) {
        return Err(Error::BadAlpha(alpha));
    }
    if n_lo > n_hi {
        return Err(bad_params("empty range"));
    }
    let k = fam.k();
    let cfg = opts.solver_for(alpha);
    let kf: f64 = (1..=k).map(|i| i as f64).product();
    let ex_of = |n: usize| -> Result<usize> {
        if n < k {
            return Ok(0);
        }
        Ok(ex_number(k, n, fam, opts)?.optimum_value as usize)
    };
    let mut rows = Vec::new();
    for n in n_lo..=n_hi {
        let row = (|| -> Result<DensityValues> {
            let ex = ex_of(n)?;
            let ex_prev = ex_of(n.saturating_sub(1))?;
            let nf = n as f64;
            let first_difference = ex as i64 - ex_prev as i64;
            let pi_binomial = pi * crate::scalar::binomial(n, k - 1) as f64;
            let residual1 = (first_difference as f64 - pi_binomial).abs();
            let members = gset_for(n).members(fam, opts.guard)?;
            let lambda_g = members
                .par_iter()
                .map(|g| solve(g, &cfg).map(|r| r.lambda))
                .collect::<Result<Vec<f64>>>()?
                .into_iter()
                .fold(0.0, f64::max);
            let uniform_estimate = kf * ex as f64 * nf.powf(-(k as f64) / alpha);
            let residual2 = (lambda_g - uniform_estimate).abs();
            let top = k as f64 - k as f64 / alpha;
            Ok(DensityValues {
                ex,
                ex_prev,
                first_difference,
                pi_binomial,
                residual1,
                residual1_scaled: residual1 / nf.powi(k as i32 - 1),
                lambda_g,
                uniform_estimate,
                residual2,
                residual2_scaled: residual2 / nf.powf(top - 1.0),
                mu_ratio: (pi != 0.0).then(|| lambda_g / (pi * nf.powf(top))),
            })
        })();
        match row {
            Ok(values) => rows.push(DensityRow { n, values: Some(values) }),
            Err(Error::SearchTooLarge { .. }) => rows.push(DensityRow { n, values: None }),
            Err(e) => return Err(e),
        }
    }
    Ok(rows)
}

/// Does the colex initial segment of length `m` maximize `lambda_alpha`
/// among all m-edge k-graphs on `n` vertices?
pub fn colex_conjecture_check(k: usize, m: usize, n: usize, alpha: f64, opts: &SearchOptions) -> Result<SearchReport> {
    let start = Instant::now();
    if !(alpha >= 1.0) {
        return Err(Error::BadAlpha(alpha));
    }
    let space = SlotSpace::new(k, n, opts.guard)?;
    if m > space.len() {
        return Err(bad_params(format!("m = {m} exceeds C({n}, {k}) = {}", space.len())));
    }
    let segment = Hypergraph::colex_segment(k, m)?;
    let segment = segment.with_isolated(n - segment.n());
    let cfg = opts.solver_for(alpha);
    let seg = solve(&segment, &cfg)?;

    let mut classes = Vec::new();
    walk_free(&space, &FamilySpec::none(k), true, |mask| {
        let e = mask.count_ones() as usize;
        if e == m {
            classes.push(mask);
        }
        e < m
    })?;
    let solved = solve_all(&space, &classes, &cfg)?;
    let best = solved.iter().map(|s| s.lambda).fold(f64::NEG_INFINITY, f64::max);
    let tied: Vec<&Solved> = solved.iter().filter(|s| s.lambda >= best - LAMBDA_TOL).collect();
    let beaten_by = solved.iter().filter(|s| s.lambda > seg.lambda + LAMBDA_TOL).max_by(|a, b| a.lambda.total_cmp(&b.lambda));

    let mut report = SearchReport::new(format!("colex(k={k}, m={m}, n={n})"), k, n, Some(alpha));
    report.optimum_value = best;
    report.witness = Some(space.to_hypergraph(tied[0].mask));
    report.witness_iso_class_count = tied.len();
    report.verdict = if beaten_by.is_some() { Verdict::Refuted } else { Verdict::Confirmed };
    report.counterexample = beaten_by.map(|s| space.to_hypergraph(s.mask));
    report.detail("colex_lambda", fmt_f(seg.lambda));
    report.detail("classes", classes.len());
    report.detail("colex_ties", tied.len());
    report.detail("all_converged", seg.converged && solved.iter().all(|s| s.converged));
    report.wall_time = start.elapsed();
    Ok(report)
}

/// Is the t-star the unique maximizer of `lambda_alpha` among t-intersecting
/// k-graphs on `n` vertices?
pub fn ekr_check(k: usize, t: usize, n: usize, alpha: f64, opts: &SearchOptions) -> Result<SearchReport> {
    let start = Instant::now();
    if t == 0 || t >= k {
        return Err(bad_params(format!("need 1 <= t < k, got t={t}, k={k}")));
    }
    let fam = FamilySpec::t_intersecting(k, t)?;
    let star = Hypergraph::star(k, t, n)?;
    let cfg = opts.solver_for(alpha);
    let star_solved = solve(&star, &cfg)?;
    let space = SlotSpace::new(k, n, opts.guard)?;
    let classes = free_classes(&space, &fam)?;
    let solved = solve_all(&space, &classes, &cfg)?;
    let best = solved.iter().map(|s| s.lambda).fold(f64::NEG_INFINITY, f64::max);
    let tied: Vec<&Solved> = solved.iter().filter(|s| s.lambda >= best - LAMBDA_TOL).collect();
    let mut rival = None;
    let mut star_among = false;
    for s in &tied {
        let h = space.to_hypergraph(s.mask);
        if are_isomorphic(&h, &star)? {
            star_among = true;
        } else if rival.is_none() {
            rival = Some(h);
        }
    }

    let mut report = SearchReport::new(format!("ekr(k={k}, t={t}, n={n})"), k, n, Some(alpha));
    report.optimum_value = best;
    report.witness = Some(space.to_hypergraph(tied[0].mask));
    report.witness_iso_class_count = tied.len();
    report.verdict = if star_among && rival.is_none() { Verdict::Confirmed } else { Verdict::Refuted };
    report.counterexample = rival;
    report.detail("star_lambda_solved", fmt_f(star_solved.lambda));
    if alpha >= 1.0 {
        report.detail("star_lambda_formula", fmt_f(star_lambda(k, t, n, alpha)?.lambda));
    }
    report.detail("star_is_maximizer", star_among);
    report.detail("classes", classes.len());
    report.wall_time = start.elapsed();
    Ok(report)
}
