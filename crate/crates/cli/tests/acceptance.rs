//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! Reference values come from oracles written here (adjacency power
//! iteration, brute-force canonical forms, direct formulas), never from the
//! library routine under test.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::Instant;

use hypergraph_spectra::closed_forms::{bipartite3_lambda, edge_bound, kk_check, star_lambda, turan_lambda};
use hypergraph_spectra::enumerate::{enumerate_free, SearchGuard};
use hypergraph_spectra::hypergraph::k_subsets;
use hypergraph_spectra::search::{
    check_universal, colex_conjecture_check, ex_number, spectral_max, strongstab_check, SearchOptions, UniversalFamilySpec,
    Verdict,
};
use hypergraph_spectra::spectral::{partials, symmetrize_pair, tau_value};
use hypergraph_spectra::{solve, FamilySpec, Hypergraph, SolverConfig, SpectralResult, WeightVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Converged solves gathered by criteria 1-5 for the residual audit.
#[derive(Default)]
struct Audit {
    residuals: Vec<(String, f64)>,
}

impl Audit {
    fn solve(&mut self, label: &str, h: &Hypergraph, alpha: f64) -> SpectralResult {
        let r = solve(h, &SolverConfig::new(alpha)).expect("solve");
        if r.converged {
            self.residuals.push((format!("{label} alpha={alpha}"), r.kkt_residual));
        }
        r
    }
}

fn check(ok: bool, pass: String, fail: String) -> Outcome {
    if ok {
        Ok(pass)
    } else {
        Err(fail)
    }
}

fn random_hypergraph(rng: &mut ChaCha8Rng, k: usize, n_max: usize) -> Hypergraph {
    let n = rng.gen_range(k..=n_max);
    let p = rng.gen_range(0.2..0.8);
    let edges: Vec<Vec<usize>> = k_subsets(n, k).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Hypergraph::new(k, n, edges).unwrap()
}

fn k13() -> Hypergraph {
    Hypergraph::new(2, 4, [[0, 1], [0, 2], [0, 3]]).unwrap()
}

fn k3() -> Hypergraph {
    Hypergraph::new(2, 3, [[0, 1], [0, 2], [1, 2]]).unwrap()
}

/// Largest adjacency eigenvalue: power iteration on `A + I`, read off with a
/// Rayleigh quotient of `A`.
fn adjacency_radius(h: &Hypergraph) -> f64 {
    let n = h.n();
    if h.edge_count() == 0 {
        return 0.0;
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut rq = f64::NAN;
    for _ in 0..100_000 {
        let mut y = x.clone();
        for e in h.edges() {
            y[e[0]] += x[e[1]];
            y[e[1]] += x[e[0]];
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        y.iter_mut().for_each(|v| *v /= norm);
        let next: f64 = h.edges().iter().map(|e| 2.0 * y[e[0]] * y[e[1]]).sum();
        x = y;
        if (next - rq).abs() < 1e-15 {
            return next;
        }
        rq = next;
    }
    rq
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest sorted edge list over all relabelings.
fn brute_canonical(h: &Hypergraph, perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    perms
        .iter()
        .map(|p| {
            let mut edges: Vec<Vec<usize>> = h
                .edges()
                .iter()
                .map(|e| {
                    let mut f: Vec<usize> = e.iter().map(|&v| p[v]).collect();
                    f.sort();
                    f
                })
                .collect();
            edges.sort();
            edges
        })
        .min()
        .unwrap()
}

fn isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    let perms = permutations(a.n());
    a.n() == b.n() && a.edge_count() == b.edge_count() && brute_canonical(a, &perms) == brute_canonical(b, &perms)
}

fn c1(audit: &mut Audit) -> Outcome {
    let star = audit.solve("K13", &k13(), 2.0).lambda;
    let tri = audit.solve("K3", &k3(), 2.0).lambda;
    check(
        (star - 3f64.sqrt()).abs() <= 1e-8 && (tri - 2.0).abs() <= 1e-8,
        format!("lambda(K13)={star:.10} lambda(K3)={tri:.10}"),
        format!("lambda(K13)={star:.12} lambda(K3)={tri:.12}"),
    )
}

fn c2(audit: &mut Audit) -> Outcome {
    let mut worst: f64 = 0.0;
    for m in [0, 1, 4] {
        let h = Hypergraph::complete(3, 4).unwrap().with_isolated(m);
        worst = worst.max((audit.solve("K4^3+iso", &h, 1.0).lambda - 0.375).abs());
    }
    let t = audit.solve("T6^3", &Hypergraph::tripartite3(6).unwrap(), 1.0).lambda;
    check(
        worst <= 1e-7 && (t - 2.0 / 9.0).abs() <= 1e-6,
        format!("max |lambda-3/8|={worst:.1e}, lambda(T6^3)={t:.10}"),
        format!("max |lambda-3/8|={worst:.3e}, lambda(T6^3)={t:.12}"),
    )
}

/// The star value from its defining weighting, independent of the library
/// formula: centre vertices at `(a/t)^{1/alpha}`, leaves share the rest.
fn star_oracle(k: usize, t: usize, n: usize, alpha: f64) -> f64 {
    let a = t as f64 / k as f64;
    let centre = (a / t as f64).powf(1.0 / alpha);
    let leaves = n - t;
    let leaf = if leaves == 0 { 0.0 } else { ((1.0 - a) / leaves as f64).powf(1.0 / alpha) };
    let edges = k_subsets(leaves, k - t).len() as f64;
    let kf: f64 = (1..=k).map(|i| i as f64).product();
    kf * edges * centre.powi(t as i32) * leaf.powi((k - t) as i32)
}

fn c3(audit: &mut Audit) -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for k in [2usize, 3] {
        for t in 1..=k {
            for n in k..=9 {
                for alpha in [1.5, 2.0, 3.0, 4.0] {
                    cases += 1;
                    let formula = star_lambda(k, t, n, alpha).unwrap().lambda;
                    let solved = audit.solve("star", &Hypergraph::star(k, t, n).unwrap(), alpha).lambda;
                    let oracle = star_oracle(k, t, n, alpha);
                    if (formula - solved).abs() > 1e-6 || (formula - oracle).abs() > 1e-9 {
                        bad.push(format!("(k={k},t={t},n={n},a={alpha}) formula={formula} solve={solved}"));
                    }
                }
            }
        }
    }
    check(bad.is_empty(), format!("{cases}/{cases} grid points agree"), format!("{} of {cases} disagree: {}", bad.len(), bad.join("; ")))
}

fn uniform_value(k: usize, e: usize, n: usize, alpha: f64) -> f64 {
    let kf: f64 = (1..=k).map(|i| i as f64).product();
    kf * e as f64 * (n as f64).powf(-(k as f64) / alpha)
}

fn c4(audit: &mut Audit) -> Outcome {
    let mut bad = Vec::new();
    let mut compared = 0;
    for alpha in [1.5, 2.0, 3.0] {
        for n in 4..=9 {
            let cf = bipartite3_lambda(n, alpha).unwrap().lambda;
            let s = audit.solve("B_n", &Hypergraph::balanced_bipartite3(n).unwrap(), alpha).lambda;
            compared += 1;
            if (cf - s).abs() > 1e-6 {
                bad.push(format!("B_{n} a={alpha}: {cf} vs {s}"));
            }
        }
        for r in [2usize, 3] {
            for n in r..=9 {
                let cf = turan_lambda(r, n, alpha).unwrap().lambda;
                let s = audit.solve("T_r,n", &Hypergraph::turan_graph(r, n).unwrap(), alpha).lambda;
                compared += 1;
                if (cf - s).abs() > 1e-6 {
                    bad.push(format!("T_{r},{n} a={alpha}: {cf} vs {s}"));
                }
            }
        }
    }
    let mut worst_ratio: f64 = 0.0;
    for alpha in [1.5, 2.0, 3.0] {
        for n in (5..=81).step_by(2) {
            let t = n / 2;
            let e = t * (t + 1) * t / 2 + (t + 1) * t * (t - 1) / 2;
            let dev = (bipartite3_lambda(n, alpha).unwrap().lambda / uniform_value(3, e, n, alpha) - 1.0).abs();
            worst_ratio = worst_ratio.max(dev * (n * n) as f64);
            for r in [2usize, 3] {
                if n % r == 0 {
                    continue;
                }
                let g = Hypergraph::turan_graph(r, n).unwrap();
                let dev = (turan_lambda(r, n, alpha).unwrap().lambda / uniform_value(2, g.edge_count(), n, alpha) - 1.0).abs();
                worst_ratio = worst_ratio.max(dev * (n * n) as f64);
            }
        }
    }
    if worst_ratio > 10.0 {
        bad.push(format!("max n^2 |ratio-1| = {worst_ratio:.3} > 10"));
    }
    check(
        bad.is_empty(),
        format!("{compared} solver comparisons agree; max n^2 |ratio-1| = {worst_ratio:.3}"),
        bad.join("; "),
    )
}

fn c5(audit: &mut Audit) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut violations = 0;
    let mut tightest = f64::INFINITY;
    for _ in 0..200 {
        let k = rng.gen_range(2..=3);
        let h = random_hypergraph(&mut rng, k, 8);
        let alpha = [1.5, 2.0, 3.0][rng.gen_range(0..3)];
        let l = audit.solve("random", &h, alpha).lambda;
        let bound = edge_bound(k, h.edge_count(), alpha).unwrap();
        tightest = tightest.min(bound - l);
        if l > bound + 1e-9 {
            violations += 1;
        }
    }
    check(violations == 0, format!("200 instances, min slack {tightest:.3e}"), format!("{violations} violations"))
}

fn c6(audit: &Audit) -> Outcome {
    let over: Vec<&(String, f64)> = audit.residuals.iter().filter(|(_, r)| *r > 1e-10).collect();
    let worst = audit.residuals.iter().map(|(_, r)| *r).fold(0.0, f64::max);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut euler_worst: f64 = 0.0;
    for _ in 0..200 {
        let k = rng.gen_range(2..=3);
        let h = random_hypergraph(&mut rng, k, 8);
        let alpha = [1.0, 1.5, 2.0, 3.0][rng.gen_range(0..4)];
        let raw: Vec<f64> = (0..h.n()).map(|_| rng.gen_range(0.01..1.0)).collect();
        let w = WeightVector::normalized(alpha, raw).unwrap();
        let g = partials(&h, &w).unwrap();
        let lhs: f64 = g.iter().zip(w.values()).map(|(a, b)| a * b).sum();
        euler_worst = euler_worst.max((lhs - tau_value(&h, &w).unwrap()).abs());
    }
    check(
        over.is_empty() && euler_worst <= 1e-12,
        format!("{} converged solves, max residual {worst:.2e}; Euler max error {euler_worst:.2e}", audit.residuals.len()),
        format!("{} residuals above 1e-10 (first: {:?}); Euler max error {euler_worst:.2e}", over.len(), over.first()),
    )
}

fn c7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut violations = 0;
    for _ in 0..500 {
        let k = rng.gen_range(2..=3);
        let base = random_hypergraph(&mut rng, k, 7);
        let n = base.n();
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        // close the edge set under the swap so (i j) is an automorphism
        let swap = |v: usize| if v == i { j } else if v == j { i } else { v };
        let mut edges: BTreeSet<Vec<usize>> = base.edges().iter().cloned().collect();
        for e in base.edges() {
            let mut f: Vec<usize> = e.iter().map(|&v| swap(v)).collect();
            f.sort();
            edges.insert(f);
        }
        let h = Hypergraph::new(k, n, edges).unwrap();
        let alpha = [1.0, 1.5, 2.0, 3.0][rng.gen_range(0..4)];
        let w = WeightVector::normalized(alpha, (0..n).map(|_| rng.gen_range(0.0..1.0)).collect()).unwrap();
        let s = symmetrize_pair(&h, &w, i, j).unwrap();
        if tau_value(&h, &s).unwrap() < tau_value(&h, &w).unwrap() - 1e-12 {
            violations += 1;
        }
    }
    check(violations == 0, "500 trials, no violations".into(), format!("{violations} violations"))
}

fn c8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut instances, mut checked, mut violations) = (0, 0, 0);
    let mut slack = f64::INFINITY;
    while instances < 100 {
        let k = rng.gen_range(2..=3);
        let h = random_hypergraph(&mut rng, k, 8);
        let alpha: f64 = [1.5, 2.0, 3.0][rng.gen_range(0..3)];
        let r = solve(&h, &SolverConfig::new(alpha)).unwrap();
        if !r.converged || h.edge_count() == 0 {
            continue;
        }
        instances += 1;
        for u in 0..h.n() {
            let wa = r.witness.values()[u].powf(alpha);
            if wa >= 1.0 / k as f64 {
                continue;
            }
            checked += 1;
            let bound = (1.0 - wa).powf(-(k as f64) / alpha) * (1.0 - k as f64 * wa) * r.lambda;
            let after = solve(&h.delete_vertex(u).unwrap(), &SolverConfig::new(alpha)).unwrap().lambda;
            slack = slack.min(after - bound);
            if after < bound - 1e-8 {
                violations += 1;
            }
        }
    }
    check(
        violations == 0,
        format!("100 instances, {checked} deletions, min slack {slack:.3e}"),
        format!("{violations} of {checked} deletions violate the bound"),
    )
}

fn c9() -> Outcome {
    let perms = permutations(5);
    let mut labelled = BTreeSet::new();
    let slots = k_subsets(5, 2);
    for mask in 0u32..1 << 10 {
        let edges: Vec<Vec<usize>> = (0..10).filter(|i| mask >> i & 1 == 1).map(|i| slots[i].clone()).collect();
        labelled.insert(brute_canonical(&Hypergraph::new(2, 5, edges).unwrap(), &perms));
    }
    let classes = enumerate_free(2, 5, &FamilySpec::none(2), true, SearchGuard::default()).unwrap();
    let mut worst: f64 = 0.0;
    for g in &classes {
        worst = worst.max((solve(g, &SolverConfig::new(2.0)).unwrap().lambda - adjacency_radius(g)).abs());
    }
    check(
        classes.len() == 34 && labelled.len() == 34 && worst <= 1e-8,
        format!("34 classes (filter agrees), max |solve - power method| = {worst:.2e}"),
        format!("classes={} filter={} worst={worst:.3e}", classes.len(), labelled.len()),
    )
}

fn c10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut worst: f64 = 0.0;
    let mut detail = String::new();
    for _ in 0..50 {
        let k = rng.gen_range(2..=3);
        let a = random_hypergraph(&mut rng, k, 5);
        let b = random_hypergraph(&mut rng, k, 5);
        let alpha = [1.5, 2.0, 3.0, 4.0][rng.gen_range(0..4)];
        let cfg = SolverConfig::new(alpha);
        let (l1, l2) = (solve(&a, &cfg).unwrap().lambda, solve(&b, &cfg).unwrap().lambda);
        let joint = solve(&a.disjoint_union(&b).unwrap(), &cfg).unwrap().lambda;
        let kf = k as f64;
        let expect = if alpha <= kf {
            l1.max(l2)
        } else {
            let p = alpha / (alpha - kf);
            (l1.powf(p) + l2.powf(p)).powf(1.0 / p)
        };
        if (joint - expect).abs() > worst {
            worst = (joint - expect).abs();
            detail = format!("k={k} alpha={alpha} {joint} vs {expect}");
        }
    }
    check(worst <= 1e-6, format!("50 pairs, max error {worst:.2e}"), format!("max error {worst:.3e} ({detail})"))
}

fn c11() -> Outcome {
    let fam = FamilySpec::single(k3());
    let mut verdicts = Vec::new();
    for n in [4, 6] {
        let r = check_universal(&fam, &UniversalFamilySpec::complete_multipartite(2, n), 1, 0.8, &SearchOptions::default()).unwrap();
        verdicts.push((n, r.verdict));
    }
    check(
        verdicts.iter().all(|(_, v)| *v == Verdict::Confirmed),
        "bipartite graphs are (K3, n, 1, 4/5)-universal for n = 4, 6".into(),
        format!("{verdicts:?}"),
    )
}

fn c12() -> Outcome {
    let fam = FamilySpec::t_intersecting(2, 1).unwrap();
    let opts = SearchOptions::default();
    let r7 = strongstab_check(&fam, &UniversalFamilySpec::stars(2, 1, 7), 2.0, 0.4, &opts).unwrap();
    let get = |r: &hypergraph_spectra::search::SearchReport, key: &str| r.detail_value(key).unwrap_or("?").to_string();
    let ok7 = r7.verdict == Verdict::Confirmed
        && get(&r7, "inequality") == "true"
        && get(&r7, "conclusion_bound") == "true"
        && get(&r7, "conclusion_embedding") == "true";

    let r4 = strongstab_check(&fam, &UniversalFamilySpec::stars(2, 1, 4), 2.0, 0.4, &opts).unwrap();
    let tri = k3().with_isolated(1);
    let tie = ex_number(2, 4, &fam, &opts).unwrap();
    let ok4 = get(&r4, "conclusion_bound") == "false"
        && r4.counterexample.as_ref().is_some_and(|h| isomorphic(h, &tri))
        && r4.verdict != Verdict::Confirmed
        && tie.optimum_value == 3.0
        && tie.witness_iso_class_count == 2;
    check(
        ok7 && ok4,
        format!(
            "n=7: inequality holds (c=0.4 < {}), both conclusions hold over all intersecting graphs, universality premise={} ; \
             n=4: {} with counterexample K3 (lambda 2 > sqrt 3), 3 edges attained by 2 classes",
            get(&r7, "c_limit"),
            get(&r7, "universal_premise"),
            r4.verdict
        ),
        format!("n=7 {:?}; n=4 {:?} verdict {}", r7.details, r4.details, r4.verdict),
    )
}

fn c13() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let (mut done, mut violations) = (0, 0);
    while done < 100 {
        let k = rng.gen_range(2..=3);
        let h = random_hypergraph(&mut rng, k, 8);
        if h.edge_count() == 0 {
            continue;
        }
        done += 1;
        let l = solve(&h, &SolverConfig::new(2.0)).unwrap().lambda;
        if !kk_check(&h, 2.0, l).unwrap().holds {
            violations += 1;
        }
    }
    check(violations == 0, "100 instances, no violations".into(), format!("{violations} violations"))
}

fn c14() -> Outcome {
    let fam = FamilySpec::single(k3());
    let opts = SearchOptions::default();
    let mut bad = Vec::new();
    for n in 3..=7 {
        let ex = ex_number(2, n, &fam, &opts).unwrap().optimum_value as usize;
        if ex != n * n / 4 {
            bad.push(format!("ex(K3,{n})={ex}"));
        }
    }
    for n in 4..=6 {
        let r = spectral_max(2, n, &fam, 2.0, &opts).unwrap();
        let turan = Hypergraph::turan_graph(2, n).unwrap();
        if !r.witness.as_ref().is_some_and(|w| isomorphic(w, &turan)) {
            bad.push(format!("spectral witness at n={n} is {:?}", r.witness));
        }
    }
    check(bad.is_empty(), "ex = floor(n^2/4) for n=3..7; spectral witness T_{2,n} for n=4..6".into(), bad.join("; "))
}

fn c15() -> Outcome {
    let opts = SearchOptions::default();
    let mut required = Vec::new();
    let mut recorded = Vec::new();
    for alpha in [1.5, 2.0, 3.0] {
        for m in 1..=10 {
            let r = colex_conjecture_check(2, m, 6, alpha, &opts).unwrap();
            if [1, 3, 6, 10].contains(&m) {
                if r.verdict != Verdict::Confirmed {
                    required.push(format!("m={m} a={alpha} {}", r.verdict));
                }
            } else {
                recorded.push(format!("m{m}/a{alpha}:{}", r.verdict));
            }
        }
    }
    let refuted = recorded.iter().filter(|s| s.ends_with("refuted")).count();
    check(
        required.is_empty(),
        format!("complete segments confirmed; other m: {} verdicts, {refuted} refuted [{}]", recorded.len(), recorded.join(" ")),
        required.join("; "),
    )
}

fn hgspec(args: &[&str], threads: usize, stdin: Option<&str>) -> (Vec<u8>, i32) {
    use std::io::Write;
    use std::process::Stdio;
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hgspec"));
    cmd.args(args).arg("--threads").arg(threads.to_string()).stdout(Stdio::piped()).stderr(Stdio::null());
    cmd.stdin(if stdin.is_some() { Stdio::piped() } else { Stdio::null() });
    let mut child = cmd.spawn().expect("spawn hgspec");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    let out = child.wait_with_output().unwrap();
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn c16() -> Outcome {
    let mut runs: Vec<(Vec<&str>, Option<String>)> = vec![
        (vec!["lambda", "-", "--alpha", "2"], Some(k13().to_text())),
        (vec!["lambda", "-", "--alpha", "2"], Some(k3().to_text())),
    ];
    for g in enumerate_free(2, 5, &FamilySpec::none(2), true, SearchGuard::default()).unwrap() {
        runs.push((vec!["lambda", "-", "--alpha", "2"], Some(g.to_text())));
    }
    const NS: [&str; 5] = ["3", "4", "5", "6", "7"];
    for n in NS {
        runs.push((vec!["search", "ex", "--k", "2", "--n", n, "--forbid", "K3"], None));
    }
    for n in &NS[1..4] {
        runs.push((vec!["search", "spectral-max", "--k", "2", "--n", n, "--forbid", "K3", "--alpha", "2"], None));
    }
    let mut differing = Vec::new();
    for (args, stdin) in &runs {
        let one = hgspec(args, 1, stdin.as_deref());
        let four = hgspec(args, 4, stdin.as_deref());
        if one != four || one.1 != 0 || one.0.is_empty() {
            differing.push(args.join(" "));
        }
    }
    check(
        differing.is_empty(),
        format!("{} reports byte-identical for --threads 1 and 4", runs.len()),
        format!("{} differ or failed: {}", differing.len(), differing.join("; ")),
    )
}

fn main() -> ExitCode {
    let mut audit = Audit::default();
    let mut results: Vec<(u32, &str, Outcome, f64)> = Vec::new();
    macro_rules! run {
        ($id:expr, $tag:expr, $body:expr) => {{
            let t = Instant::now();
            let out = $body;
            results.push(($id, $tag, out, t.elapsed().as_secs_f64()));
        }};
    }
    run!(1, "exact values", c1(&mut audit));
    run!(2, "lagrangian", c2(&mut audit));
    run!(3, "star grid", c3(&mut audit));
    run!(4, "one-dim closed forms", c4(&mut audit));
    run!(5, "edge bound", c5(&mut audit));
    run!(6, "kkt and euler", c6(&audit));
    run!(7, "symmetrization", c7());
    run!(8, "vertex deletion", c8());
    run!(9, "matrix oracle", c9());
    run!(10, "disjoint union", c10());
    run!(11, "universality", c11());
    run!(12, "stability harness", c12());
    run!(13, "shadow bound", c13());
    run!(14, "mantel", c14());
    run!(15, "colex", c15());
    run!(16, "determinism", c16());

    let mut failed = 0;
    for (id, tag, out, secs) in &results {
        match out {
            Ok(msg) => println!("criterion {id:2} {tag:<22} PASS ({secs:.1}s): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {id:2} {tag:<22} FAIL ({secs:.1}s): {msg}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
