mod report;

use std::fs;
use std::io::{self, Read};
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hypergraph_spectra::closed_forms::{
    bipartite3_lambda, edge_bound, kk_check, star_lambda, turan_lambda, uniform_weight_lambda, ClosedFormValue,
};
use hypergraph_spectra::enumerate::{SearchGuard, DEFAULT_GUARD};
use hypergraph_spectra::search::{
    check_universal, colex_conjecture_check, density_report, ekr_check, ex_number, ex_s_number, spectral_max,
    strongstab_check, SearchOptions, SearchReport, UniversalFamilySpec, Verdict,
};
use hypergraph_spectra::{solve, Error, FamilySpec, Hypergraph, Method, SolverConfig};

use report::Report;

const EXIT_PARSE: u8 = 1;
const EXIT_FLAGS: u8 = 2;
const EXIT_NOT_CONVERGED: u8 = 3;
const EXIT_REFUTED: u8 = 4;
const EXIT_INDETERMINATE: u8 = 5;
const EXIT_TOO_LARGE: u8 = 6;

#[derive(Parser)]
#[command(name = "hgspec", version, about = "Alpha-spectral radii of uniform hypergraphs and small extremal searches")]
struct Cli {
    /// Worker threads (defaults to THREADS, then to the number of CPUs).
    #[arg(long, global = true, env = "THREADS")]
    threads: Option<usize>,
    /// Emit a single JSON object instead of key=value lines.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock times (breaks byte-for-byte reproducibility).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral radius of a hypergraph file (`-` reads standard input).
    Lambda {
        input: String,
        #[command(flatten)]
        solver: SolverFlags,
    },
    /// Print a named hypergraph in the text format.
    Family {
        name: FamilyName,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Closed-form values and bounds.
    #[command(subcommand)]
    ClosedForm(ClosedForm),
    /// Exhaustive extremal searches.
    #[command(subcommand)]
    Search(Search),
    /// Exhaustive checks of universality and conjectured maximizers.
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Complete,
    Turan,
    Star,
    Bipartite3,
    Fano,
    F5,
    Colex,
}

#[derive(Args, Clone)]
struct SolverFlags {
    #[arg(long, default_value_t = 2.0)]
    alpha: f64,
    #[arg(long)]
    tol_kkt: Option<f64>,
    #[arg(long)]
    tol_step: Option<f64>,
    #[arg(long, default_value_t = 100_000)]
    max_iter: usize,
    #[arg(long, default_value_t = 16)]
    starts: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "auto")]
    method: String,
    #[arg(long)]
    no_symmetry: bool,
}

impl SolverFlags {
    fn config(&self) -> Result<SolverConfig, Error> {
        let mut cfg = SolverConfig::new(self.alpha)
            .with_max_iter(self.max_iter)
            .with_random_starts(self.starts)
            .with_seed(self.seed)
            .with_method(self.method.parse::<Method>()?)
            .with_symmetry_reduction(!self.no_symmetry);
        if let Some(t) = self.tol_kkt {
            cfg = cfg.with_tol_kkt(t);
        }
        if let Some(t) = self.tol_step {
            cfg = cfg.with_tol_step(t);
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn describe(&self, cfg: &SolverConfig, out: &mut Report) {
        out.put("method", self.method.as_str())
            .put("seed", cfg.seed)
            .put("starts", cfg.num_random_starts)
            .put("max_iter", cfg.max_iter)
            .put("tol_kkt", format!("{:e}", cfg.tol_kkt))
            .put("tol_step", format!("{:e}", cfg.tol_step))
            .put("symmetry_reduction", cfg.symmetry_reduction);
    }
}

#[derive(Subcommand)]
enum ClosedForm {
    Star {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: f64,
    },
    Turan {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: f64,
    },
    Bipartite3 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: f64,
    },
    /// `k! e n^{-k/alpha}` for a vertex-transitive hypergraph file.
    Uniform {
        input: String,
        #[arg(long)]
        alpha: f64,
    },
    EdgeBound {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        e: usize,
        #[arg(long)]
        alpha: f64,
    },
    /// Shadow bound from a spectral lower bound; solves for lambda unless given.
    Kk {
        input: String,
        #[arg(long)]
        lambda: Option<f64>,
        #[command(flatten)]
        solver: SolverFlags,
    },
}

#[derive(Args, Clone)]
struct SearchFlags {
    /// Search past the size guard.
    #[arg(long)]
    force: bool,
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    guard: usize,
    /// Solve every class instead of skipping those ruled out by the edge bound.
    #[arg(long)]
    no_prune: bool,
}

#[derive(Subcommand)]
enum Search {
    Ex {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Named family (K3, K4, Kr:<r>, 2K2, fano, F5, intersect:<k>:<t>,
        /// none:<k>) or a hypergraph file; repeat to combine.
        #[arg(long, required = true)]
        forbid: Vec<String>,
        #[command(flatten)]
        search: SearchFlags,
    },
    ExS {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, required = true)]
        forbid: Vec<String>,
        #[arg(long)]
        s: usize,
        #[command(flatten)]
        search: SearchFlags,
    },
    SpectralMax {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, required = true)]
        forbid: Vec<String>,
        #[command(flatten)]
        solver: SolverFlags,
        #[command(flatten)]
        search: SearchFlags,
    },
    Density {
        #[arg(long, required = true)]
        forbid: Vec<String>,
        #[arg(long)]
        n_lo: usize,
        #[arg(long)]
        n_hi: usize,
        #[arg(long)]
        pi: f64,
        #[arg(long)]
        gset: String,
        #[command(flatten)]
        solver: SolverFlags,
        #[command(flatten)]
        search: SearchFlags,
    },
}

#[derive(Subcommand)]
enum Verify {
    Universal {
        #[arg(long, required = true)]
        forbid: Vec<String>,
        /// bipartite, multipartite:<r>, 2col3, star:<k>:<t>, all, or a
        /// hypergraph file; repeat files to list several members.
        #[arg(long, required = true)]
        gset: Vec<String>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        c: f64,
        #[command(flatten)]
        search: SearchFlags,
    },
    Strongstab {
        #[arg(long, required = true)]
        forbid: Vec<String>,
        #[arg(long, required = true)]
        gset: Vec<String>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: f64,
        #[command(flatten)]
        solver: SolverFlags,
        #[command(flatten)]
        search: SearchFlags,
    },
    Colex {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        solver: SolverFlags,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// Same as `closed-form kk`.
    Kk {
        input: String,
        #[arg(long)]
        lambda: Option<f64>,
        #[command(flatten)]
        solver: SolverFlags,
    },
    Ekr {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        solver: SolverFlags,
        #[command(flatten)]
        search: SearchFlags,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FLAGS);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Parse { .. } => EXIT_PARSE,
                Error::SearchTooLarge { .. } => EXIT_TOO_LARGE,
                _ => EXIT_FLAGS,
            })
        }
    }
}

fn read_input(path: &str) -> Result<Hypergraph, Error> {
    let text = if path == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| Error::Parse { line: 0, msg: format!("{path}: {e}") })?
    };
    Hypergraph::parse(&text)
}

fn family(names: &[String]) -> Result<FamilySpec, Error> {
    let mut members = Vec::new();
    let mut empty_k = None;
    for name in names {
        let fam = match name.parse::<FamilySpec>() {
            Ok(f) => f,
            Err(_) if Path::new(name).is_file() => FamilySpec::single(read_input(name)?),
            Err(e) => return Err(e),
        };
        if fam.members().is_empty() {
            empty_k = Some(fam.k());
        }
        members.extend(fam.members().iter().cloned());
    }
    match (members.is_empty(), empty_k) {
        (true, Some(k)) => Ok(FamilySpec::none(k)),
        _ => FamilySpec::new(members),
    }
}

fn gset(specs: &[String], n: usize) -> Result<UniversalFamilySpec, Error> {
    let bad = |s: &str| Error::BadParams(format!("unknown universal family `{s}`"));
    let num = |s: &str, p: &str| p.parse::<usize>().map_err(|_| bad(s));
    if let [one] = specs {
        let parts: Vec<&str> = one.split(':').collect();
        match parts.as_slice() {
            ["bipartite"] => return Ok(UniversalFamilySpec::complete_multipartite(2, n)),
            ["multipartite", r] => return Ok(UniversalFamilySpec::complete_multipartite(num(one, r)?, n)),
            ["2col3"] => return Ok(UniversalFamilySpec::two_colorable_3graphs(n)),
            ["star", k, t] => return Ok(UniversalFamilySpec::stars(num(one, k)?, num(one, t)?, n)),
            ["all"] => return Ok(UniversalFamilySpec::all_free(n)),
            _ => {}
        }
    }
    let mut members = Vec::new();
    for path in specs {
        if !Path::new(path).is_file() {
            return Err(bad(path));
        }
        members.push(read_input(path)?);
    }
    Ok(UniversalFamilySpec::explicit(members, n))
}

fn options(search: &SearchFlags, solver: Option<&SolverFlags>) -> Result<SearchOptions, Error> {
    let mut opts = SearchOptions {
        guard: SearchGuard { max_slots: search.guard, force: search.force },
        prune: !search.no_prune,
        ..SearchOptions::default()
    };
    if let Some(s) = solver {
        opts.solver = s.config()?;
    }
    Ok(opts)
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::Confirmed => 0,
        Verdict::Refuted => EXIT_REFUTED,
        Verdict::Indeterminate => EXIT_INDETERMINATE,
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    let mut out = Report::new();
    let code = match &cli.command {
        Command::Lambda { input, solver } => {
            let h = read_input(input)?;
            let cfg = solver.config()?;
            let r = solve(&h, &cfg)?;
            out.put("input", input.as_str()).put("k", h.k()).put("n", h.n()).put("edges", h.edge_count()).put("alpha", cfg.alpha);
            solver.describe(&cfg, &mut out);
            out.put("lambda", r.lambda)
                .put("kkt_residual", format!("{:.4e}", r.kkt_residual))
                .put("converged", r.converged)
                .put("iterations", r.iterations)
                .put("start", r.start_label.as_str())
                .put("symmetric_lambda", r.symmetric_lambda)
                .put("witness", r.witness.values().to_vec());
            if r.converged {
                0
            } else {
                EXIT_NOT_CONVERGED
            }
        }
        Command::Family { name, k, t, n, r, m } => {
            let need = |v: &Option<usize>, flag: &str| v.ok_or_else(|| Error::BadParams(format!("--{flag} is required")));
            let h = match name {
                FamilyName::Complete => Hypergraph::complete(need(k, "k")?, need(n, "n")?)?,
                FamilyName::Turan => Hypergraph::turan_graph(need(r, "r")?, need(n, "n")?)?,
                FamilyName::Star => Hypergraph::star(need(k, "k")?, need(t, "t")?, need(n, "n")?)?,
                FamilyName::Bipartite3 => Hypergraph::balanced_bipartite3(need(n, "n")?)?,
                FamilyName::Fano => Hypergraph::fano(),
                FamilyName::F5 => Hypergraph::f5(),
                FamilyName::Colex => {
                    let seg = Hypergraph::colex_segment(need(k, "k")?, need(m, "m")?)?;
                    match n {
                        Some(n) if *n < seg.n() => {
                            return Err(Error::BadParams(format!("colex segment needs {} vertices", seg.n())))
                        }
                        Some(n) => seg.with_isolated(n - seg.n()),
                        None => seg,
                    }
                }
            };
            print!("{}", h.to_text());
            return Ok(0);
        }
        Command::ClosedForm(cf) => closed_form(cf, &mut out)?,
        Command::Search(s) => search(s, cli.timing, &mut out)?,
        Command::Verify(v) => verify(v, cli.timing, &mut out)?,
    };
    out.emit(cli.json).map_err(|e| Error::BadParams(e.to_string()))?;
    Ok(code)
}

fn put_closed(out: &mut Report, v: &ClosedFormValue) {
    out.put("lambda", v.lambda).put("method", v.method.to_string()).put("inner_argmax", v.inner_argmax);
}

fn closed_form(cf: &ClosedForm, out: &mut Report) -> Result<u8, Error> {
    match cf {
        ClosedForm::Star { k, t, n, alpha } => {
            out.put("family", "star").put("k", *k).put("t", *t).put("n", *n).put("alpha", *alpha);
            put_closed(out, &star_lambda(*k, *t, *n, *alpha)?);
        }
        ClosedForm::Turan { r, n, alpha } => {
            out.put("family", "turan").put("r", *r).put("n", *n).put("alpha", *alpha);
            put_closed(out, &turan_lambda(*r, *n, *alpha)?);
        }
        ClosedForm::Bipartite3 { n, alpha } => {
            out.put("family", "bipartite3").put("n", *n).put("alpha", *alpha);
            put_closed(out, &bipartite3_lambda(*n, *alpha)?);
        }
        ClosedForm::Uniform { input, alpha } => {
            let h = read_input(input)?;
            out.put("family", "uniform").put("input", input.as_str()).put("alpha", *alpha);
            put_closed(out, &uniform_weight_lambda(&h, *alpha)?);
        }
        ClosedForm::EdgeBound { k, e, alpha } => {
            out.put("family", "edge_bound").put("k", *k).put("e", *e).put("alpha", *alpha);
            out.put("lambda", edge_bound(*k, *e, *alpha)?).put("method", "exact_formula");
        }
        ClosedForm::Kk { input, lambda, solver } => {
            let h = read_input(input)?;
            let cfg = solver.config()?;
            out.put("input", input.as_str()).put("alpha", cfg.alpha);
            solver.describe(&cfg, out);
            let lambda = match lambda {
                Some(l) => *l,
                None => solve(&h, &cfg)?.lambda,
            };
            let kk = kk_check(&h, cfg.alpha, lambda)?;
            out.put("lambda", lambda)
                .put("x", kk.x)
                .put("shadow_bound", kk.shadow_bound)
                .put("shadow_size", kk.shadow_size)
                .put("holds", kk.holds);
            return Ok(if kk.holds { 0 } else { EXIT_REFUTED });
        }
    }
    Ok(0)
}

fn finish(out: &mut Report, r: &SearchReport, timing: bool) -> u8 {
    out.put_search(r, timing);
    verdict_code(r.verdict)
}

fn search(s: &Search, timing: bool, out: &mut Report) -> Result<u8, Error> {
    Ok(match s {
        Search::Ex { k, n, forbid, search } => {
            let r = ex_number(*k, *n, &family(forbid)?, &options(search, None)?)?;
            out.put("forbid", forbid.join("+"));
            finish(out, &r, timing)
        }
        Search::ExS { k, n, forbid, s, search } => {
            let r = ex_s_number(*k, *n, &family(forbid)?, *s, &options(search, None)?)?;
            out.put("forbid", forbid.join("+"));
            finish(out, &r, timing)
        }
        Search::SpectralMax { k, n, forbid, solver, search } => {
            let opts = options(search, Some(solver))?;
            let r = spectral_max(*k, *n, &family(forbid)?, solver.alpha, &opts)?;
            out.put("forbid", forbid.join("+"));
            solver.describe(&opts.solver, out);
            out.put("prune", opts.prune);
            finish(out, &r, timing)
        }
        Search::Density { forbid, n_lo, n_hi, pi, gset: g, solver, search } => {
            let opts = options(search, Some(solver))?;
            let fam = family(forbid)?;
            // validate the generator once before tabulating
            gset(std::slice::from_ref(g), *n_lo)?;
            let rows = density_report(&fam, *n_lo, *n_hi, solver.alpha, *pi, |n| gset(std::slice::from_ref(g), n).expect("validated"), &opts)?;
            out.put("forbid", forbid.join("+")).put("gset", g.as_str()).put("pi", *pi);
            solver.describe(&opts.solver, out);
            for row in rows {
                let mut line = Report::new();
                line.put("n", row.n);
                match row.values {
                    None => {
                        line.put("skipped", "search_too_large");
                    }
                    Some(v) => {
                        line.put("ex", v.ex)
                            .put("diff", v.first_difference)
                            .put("pi_binom", v.pi_binomial)
                            .put("residual1", v.residual1)
                            .put("residual1_scaled", v.residual1_scaled)
                            .put("lambda_g", v.lambda_g)
                            .put("uniform_estimate", v.uniform_estimate)
                            .put("residual2", v.residual2)
                            .put("residual2_scaled", v.residual2_scaled)
                            .put("mu_ratio", v.mu_ratio);
                    }
                }
                out.push_row(line);
            }
            0
        }
    })
}

fn verify(v: &Verify, timing: bool, out: &mut Report) -> Result<u8, Error> {
    Ok(match v {
        Verify::Universal { forbid, gset: g, n, s, c, search } => {
            let opts = options(search, None)?;
            let r = check_universal(&family(forbid)?, &gset(g, *n)?, *s, *c, &opts)?;
            out.put("forbid", forbid.join("+")).put("gset", g.join("+")).put("s", *s).put("c", *c);
            finish(out, &r, timing)
        }
        Verify::Strongstab { forbid, gset: g, n, c, solver, search } => {
            let opts = options(search, Some(solver))?;
            let r = strongstab_check(&family(forbid)?, &gset(g, *n)?, solver.alpha, *c, &opts)?;
            out.put("forbid", forbid.join("+")).put("gset", g.join("+")).put("c", *c);
            solver.describe(&opts.solver, out);
            finish(out, &r, timing)
        }
        Verify::Colex { k, m, n, solver, search } => {
            let opts = options(search, Some(solver))?;
            let r = colex_conjecture_check(*k, *m, *n, solver.alpha, &opts)?;
            out.put("m", *m);
            solver.describe(&opts.solver, out);
            finish(out, &r, timing)
        }
        Verify::Kk { input, lambda, solver } => {
            closed_form(&ClosedForm::Kk { input: input.clone(), lambda: *lambda, solver: solver.clone() }, out)?
        }
        Verify::Ekr { k, t, n, solver, search } => {
            let opts = options(search, Some(solver))?;
            let r = ekr_check(*k, *t, *n, solver.alpha, &opts)?;
            out.put("t", *t);
            solver.describe(&opts.solver, out);
            finish(out, &r, timing)
        }
    })
}
