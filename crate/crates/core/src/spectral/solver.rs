use std::cmp::Ordering;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{bad_params, Error, Result};
use crate::hypergraph::Hypergraph;
use crate::scalar::{lit, powr, Scalar};

use super::form::Form;
use super::linalg::{damped_least_squares, solve_dense};
use super::ops::{kkt_residual, symmetry_partition, tau_slice};
use super::weights::{check_alpha, WeightVector};

/// Iteration used for `alpha > 1`. `Auto` picks the power iteration when
/// `alpha >= k` and gradient ascent otherwise; `alpha = 1` always runs the
/// simplex method.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Auto,
    Power,
    Gradient,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "power" => Ok(Method::Power),
            "gradient" => Ok(Method::Gradient),
            _ => Err(bad_params(format!("unknown method `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig<T = f64> {
    pub alpha: T,
    pub tol_kkt: T,
    pub tol_step: T,
    pub max_iter: usize,
    pub num_random_starts: usize,
    pub seed: u64,
    pub method: Method,
    /// Also optimize over weightings constant on symmetry blocks.
    pub symmetry_reduction: bool,
}

impl<T: Scalar> SolverConfig<T> {
    pub fn new(alpha: T) -> Self {
        let eps = T::epsilon();
        SolverConfig {
            alpha,
            tol_kkt: lit::<T>(1e-10).max(eps * lit(100.0)),
            tol_step: lit::<T>(1e-13).max(eps * lit(10.0)),
            max_iter: 100_000,
            num_random_starts: 16,
            seed: 0,
            method: Method::Auto,
            symmetry_reduction: true,
        }
    }

    pub fn with_tol_kkt(mut self, tol: T) -> Self {
        self.tol_kkt = tol;
        self
    }

    pub fn with_tol_step(mut self, tol: T) -> Self {
        self.tol_step = tol;
        self
    }

    pub fn with_max_iter(mut self, max_iter: usize) -> Self {
        self.max_iter = max_iter;
        self
    }

    pub fn with_random_starts(mut self, count: usize) -> Self {
        self.num_random_starts = count;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    pub fn with_symmetry_reduction(mut self, on: bool) -> Self {
        self.symmetry_reduction = on;
        self
    }

    pub fn validate(&self) -> Result<()> {
        check_alpha(self.alpha)?;
        if !(self.tol_kkt > T::zero()) || !(self.tol_step > T::zero()) {
            return Err(bad_params("tolerances must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult<T = f64> {
    pub lambda: T,
    pub witness: WeightVector<T>,
    pub kkt_residual: T,
    pub iterations: usize,
    pub converged: bool,
    pub start_label: String,
    /// Best value found in the symmetry-reduced space, when it was searched.
    pub symmetric_lambda: Option<T>,
}

/// Compute `lambda_alpha(H)` by multi-start local optimization.
pub fn solve<T: Scalar>(h: &Hypergraph, cfg: &SolverConfig<T>) -> Result<SpectralResult<T>> {
    cfg.validate()?;
    let n = h.n();
    if n == 0 {
        return Err(bad_params("cannot solve on zero vertices"));
    }
    if h.is_empty() {
        let witness = WeightVector::uniform(cfg.alpha, n)?;
        return Ok(SpectralResult {
            lambda: T::zero(),
            witness,
            kkt_residual: T::zero(),
            iterations: 0,
            converged: true,
            start_label: "uniform".into(),
            symmetric_lambda: None,
        });
    }

    let full = Form::<T>::from_hypergraph(h);
    let partition = symmetry_partition(h);
    let blocks = partition.len();
    let block_of = partition.block_of(n);
    let sizes = partition.sizes();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let mut starts: Vec<Start<T>> = vec![Start::full("uniform", vec![T::one(); n])];
    if blocks > 1 && blocks < n {
        let per_block = T::one() / lit::<T>(blocks as f64);
        let w = block_of
            .iter()
            .map(|&b| powr(per_block / lit(sizes[b] as f64), T::one() / cfg.alpha))
            .collect();
        starts.push(Start::full("symmetric", w));
    }
    let comps: Vec<Vec<usize>> = h.components().into_iter().filter(|c| c.iter().any(|&v| h.degree(v) > 0)).collect();
    if comps.len() > 1 || comps.first().is_some_and(|c| c.len() < n) {
        for (c, comp) in comps.iter().enumerate() {
            let mut w = vec![T::zero(); n];
            for &v in comp {
                w[v] = T::one();
            }
            starts.push(Start::full(format!("component:{c}"), w));
        }
    }
    for j in 0..cfg.num_random_starts {
        starts.push(Start::full(format!("random:{j}"), random_vector(&mut rng, n, j)));
    }

    let reduced = (cfg.symmetry_reduction && blocks < n).then(|| Form::<T>::reduced(h, &block_of, &sizes));
    if reduced.is_some() {
        starts.push(Start::reduced("reduced:uniform", vec![T::one(); blocks]));
        for j in 0..cfg.num_random_starts {
            starts.push(Start::reduced(format!("reduced:random:{j}"), random_vector(&mut rng, blocks, j)));
        }
    }

    let candidates: Vec<Candidate<T>> = starts
        .into_par_iter()
        .map(|start| {
            let (w, iterations, from_reduced) = match (&reduced, start.reduced) {
                (Some(red), true) => {
                    let (y, it) = optimize(red, start.values, cfg);
                    (block_of.iter().map(|&b| y[b]).collect(), it, true)
                }
                _ => {
                    let (w, it) = optimize(&full, start.values, cfg);
                    (w, it, false)
                }
            };
            let (w, extra) = finish(&full, w, cfg);
            Candidate::evaluate(h, &full, w, cfg, iterations + extra, start.label, from_reduced)
        })
        .collect();

    let symmetric_lambda = reduced.as_ref().map(|_| {
        candidates.iter().filter(|c| c.from_reduced).map(|c| c.lambda).fold(T::zero(), T::max)
    });
    let best = candidates
        .into_iter()
        .reduce(|a, b| if prefer(&b, &a) { b } else { a })
        .expect("at least the uniform start");
    let kkt = kkt_residual(h, &best.witness, best.lambda);
    Ok(SpectralResult {
        lambda: best.lambda,
        witness: best.witness,
        kkt_residual: kkt,
        iterations: best.iterations,
        converged: best.converged,
        start_label: best.label,
        symmetric_lambda,
    })
}

struct Start<T> {
    label: String,
    values: Vec<T>,
    reduced: bool,
}

impl<T> Start<T> {
    fn full(label: impl Into<String>, values: Vec<T>) -> Self {
        Start { label: label.into(), values, reduced: false }
    }

    fn reduced(label: impl Into<String>, values: Vec<T>) -> Self {
        Start { label: label.into(), values, reduced: true }
    }
}

struct Candidate<T> {
    lambda: T,
    witness: WeightVector<T>,
    iterations: usize,
    converged: bool,
    label: String,
    from_reduced: bool,
}

impl<T: Scalar> Candidate<T> {
    fn evaluate(
        h: &Hypergraph,
        form: &Form<T>,
        w: Vec<T>,
        cfg: &SolverConfig<T>,
        iterations: usize,
        label: String,
        from_reduced: bool,
    ) -> Self {
        let converged = certificate(form, cfg.alpha, &w) <= cfg.tol_kkt;
        let lambda = tau_slice(h, &w).expect("dimensions agree");
        Candidate {
            lambda,
            witness: WeightVector::from_parts_unchecked(cfg.alpha, w),
            iterations,
            converged,
            label,
            from_reduced,
        }
    }
}

/// Whether `a` beats `b`: larger lambda, then converged, then the
/// lexicographically larger witness.
fn prefer<T: Scalar>(a: &Candidate<T>, b: &Candidate<T>) -> bool {
    let tie = lit::<T>(1e-12) * T::one().max(a.lambda.max(b.lambda));
    if (a.lambda - b.lambda).abs() > tie {
        return a.lambda > b.lambda;
    }
    if a.converged != b.converged {
        return a.converged;
    }
    lex_cmp(a.witness.values(), b.witness.values()) == Ordering::Greater
}

fn lex_cmp<T: Scalar>(a: &[T], b: &[T]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.partial_cmp(y) {
            Some(Ordering::Equal) | None => continue,
            Some(o) => return o,
        }
    }
    a.len().cmp(&b.len())
}

fn random_vector<T: Scalar>(rng: &mut ChaCha8Rng, n: usize, j: usize) -> Vec<T> {
    (0..n)
        .map(|_| {
            let u: f64 = rng.gen_range(1e-3..1.0);
            // odd starts are skewed towards a few heavy coordinates
            lit(if j % 2 == 1 { u * u * u } else { u })
        })
        .collect()
}

fn normalize<T: Scalar>(form: &Form<T>, alpha: T, w: &mut [T]) -> bool {
    let total: T = w.iter().zip(form.mass()).map(|(&x, &m)| m * powr(x, alpha)).sum();
    if !(total > T::zero()) || !total.is_finite() {
        return false;
    }
    let scale = powr(total, -T::one() / alpha);
    for x in w.iter_mut() {
        *x = *x * scale;
    }
    true
}

/// First-order optimality measure that must fall below `tol_kkt`. For
/// `alpha > 1` this is the plain residual (zero coordinates contribute their
/// link value). For `alpha = 1` it is the support residual together with the
/// excess of off-support links over `lambda`.
fn certificate<T: Scalar>(form: &Form<T>, alpha: T, w: &[T]) -> T {
    let g = form.links(w);
    let lambda = form.value(w);
    residual_with(&g, w, lambda, alpha)
}

fn residual_with<T: Scalar>(g: &[T], w: &[T], lambda: T, alpha: T) -> T {
    let lagrange = alpha == T::one();
    g.iter()
        .zip(w)
        .map(|(&gi, &x)| {
            if lagrange {
                if x > T::zero() {
                    (gi - lambda).abs()
                } else {
                    (gi - lambda).max(T::zero())
                }
            } else {
                (gi - lambda * powr(x, alpha - T::one())).abs()
            }
        })
        .fold(T::zero(), T::max)
}

/// Run the first-order iteration from `start`, handing over to Newton once
/// the iterate is close to a stationary point. Returns the final point and
/// the number of iterations.
fn optimize<T: Scalar>(form: &Form<T>, start: Vec<T>, cfg: &SolverConfig<T>) -> (Vec<T>, usize) {
    let mut w = start;
    if !normalize(form, cfg.alpha, &mut w) {
        w = vec![T::one(); form.dim()];
        normalize(form, cfg.alpha, &mut w);
    }
    let mut ascent = Ascent::new(form, cfg, w);
    let mut newton_steps = 0;
    let mut chunk = 64usize;
    loop {
        let budget = ascent.iterations.saturating_add(chunk).min(cfg.max_iter);
        ascent.run(cfg.tol_kkt, budget);
        let cert = certificate(form, cfg.alpha, &ascent.w);
        if cert <= cfg.tol_kkt {
            return (ascent.w, ascent.iterations + newton_steps);
        }
        let exhausted = ascent.stalled || ascent.iterations >= cfg.max_iter;
        let (polished, extra) = polish(form, cfg.alpha, &ascent.w, cfg.tol_kkt);
        newton_steps += extra;
        let pc = certificate(form, cfg.alpha, &polished);
        if pc <= cfg.tol_kkt || (exhausted && pc < cert) {
            return (polished, ascent.iterations + newton_steps);
        }
        if exhausted {
            return (ascent.w, ascent.iterations + newton_steps);
        }
        chunk = chunk.saturating_mul(2);
    }
}

/// Final polish in the full space (used for reduced-space winners too).
fn finish<T: Scalar>(form: &Form<T>, mut w: Vec<T>, cfg: &SolverConfig<T>) -> (Vec<T>, usize) {
    normalize(form, cfg.alpha, &mut w);
    if certificate(form, cfg.alpha, &w) <= cfg.tol_kkt {
        return (w, 0);
    }
    let (p, extra) = polish(form, cfg.alpha, &w, cfg.tol_kkt);
    if certificate(form, cfg.alpha, &p) < certificate(form, cfg.alpha, &w) {
        (p, extra)
    } else {
        (w, extra)
    }
}

struct Ascent<'a, T> {
    form: &'a Form<T>,
    cfg: &'a SolverConfig<T>,
    w: Vec<T>,
    value: T,
    step: T,
    iterations: usize,
    stalled: bool,
}

#[derive(PartialEq)]
enum Kind {
    Simplex,
    Power,
    Gradient,
}

impl<'a, T: Scalar> Ascent<'a, T> {
    fn new(form: &'a Form<T>, cfg: &'a SolverConfig<T>, w: Vec<T>) -> Self {
        let value = form.value(&w);
        Ascent { form, cfg, w, value, step: T::one(), iterations: 0, stalled: false }
    }

    fn kind(&self) -> Kind {
        let alpha = self.cfg.alpha;
        if alpha == T::one() {
            return Kind::Simplex;
        }
        match self.cfg.method {
            Method::Power => Kind::Power,
            Method::Gradient => Kind::Gradient,
            Method::Auto if alpha >= lit(self.form.degree() as f64) => Kind::Power,
            Method::Auto => Kind::Gradient,
        }
    }

    fn run(&mut self, tol: T, budget: usize) {
        let kind = self.kind();
        self.stalled = false;
        while self.iterations < budget && !self.stalled {
            let g = self.form.links(&self.w);
            if residual_with(&g, &self.w, self.value, self.cfg.alpha) <= tol {
                return;
            }
            self.iterations += 1;
            let moved = match kind {
                Kind::Simplex => self.simplex_step(&g),
                Kind::Power => self.power_step(&g) || self.gradient_step(&g),
                Kind::Gradient => self.gradient_step(&g),
            };
            if !moved {
                self.stalled = true;
            }
        }
    }

    /// Accept `trial` if it improves the value; reports the step length.
    fn accept(&mut self, trial: Vec<T>, value: T) -> T {
        let change = trial.iter().zip(&self.w).map(|(a, b)| (*a - *b).abs()).fold(T::zero(), T::max);
        self.w = trial;
        self.value = value;
        change
    }

    fn power_step(&mut self, g: &[T]) -> bool {
        let alpha = self.cfg.alpha;
        let am1 = alpha - T::one();
        let shift = if alpha <= lit(self.form.degree() as f64) { self.value } else { T::zero() };
        let mut trial: Vec<T> = g
            .iter()
            .zip(&self.w)
            .map(|(&gi, &x)| powr(gi + shift * powr(x, am1), T::one() / am1))
            .collect();
        if !normalize(self.form, alpha, &mut trial) {
            return false;
        }
        let value = self.form.value(&trial);
        if value < self.value {
            return false;
        }
        let change = self.accept(trial, value);
        if change <= self.cfg.tol_step {
            self.stalled = true;
        }
        true
    }

    fn gradient_step(&mut self, g: &[T]) -> bool {
        let alpha = self.cfg.alpha;
        let am1 = alpha - T::one();
        let d: Vec<T> = g.iter().zip(&self.w).map(|(&gi, &x)| gi - self.value * powr(x, am1)).collect();
        let min_step = lit::<T>(1e-18);
        while self.step > min_step {
            let mut trial: Vec<T> = self.w.iter().zip(&d).map(|(&x, &di)| (x + self.step * di).max(T::zero())).collect();
            if normalize(self.form, alpha, &mut trial) {
                let value = self.form.value(&trial);
                if value > self.value {
                    let change = self.accept(trial, value);
                    self.step = self.step * lit(2.0);
                    if change <= self.cfg.tol_step {
                        self.stalled = true;
                    }
                    return true;
                }
            }
            self.step = self.step / lit(2.0);
        }
        self.step = T::one();
        false
    }

    /// Projected gradient on `{z >= 0, sum z = 1}` with `z_i = m_i w_i`.
    fn simplex_step(&mut self, g: &[T]) -> bool {
        let mass = self.form.mass();
        let z: Vec<T> = self.w.iter().zip(mass).map(|(&x, &m)| x * m).collect();
        let min_step = lit::<T>(1e-18);
        while self.step > min_step {
            let moved: Vec<T> = z.iter().zip(g).map(|(&zi, &gi)| zi + self.step * gi).collect();
            let proj = project_simplex(&moved);
            let trial: Vec<T> = proj.iter().zip(mass).map(|(&zi, &m)| zi / m).collect();
            let value = self.form.value(&trial);
            if value > self.value {
                let change = self.accept(trial, value);
                self.step = self.step * lit(2.0);
                if change <= self.cfg.tol_step {
                    self.stalled = true;
                }
                return true;
            }
            self.step = self.step / lit(2.0);
        }
        self.step = T::one();
        false
    }
}

/// Euclidean projection onto the probability simplex.
fn project_simplex<T: Scalar>(v: &[T]) -> Vec<T> {
    let mut sorted = v.to_vec();
    sorted.sort_by(|a, b| b.partial_cmp(a).unwrap_or(Ordering::Equal));
    let mut cum = T::zero();
    let mut theta = T::zero();
    for (i, &u) in sorted.iter().enumerate() {
        cum = cum + u;
        let t = (cum - T::one()) / lit((i + 1) as f64);
        if u - t > T::zero() {
            theta = t;
        }
    }
    v.iter().map(|&x| (x - theta).max(T::zero())).collect()
}

/// Newton's method on the Lagrange system restricted to the (thresholded)
/// support of `w`. Returns the best point found and the Newton steps taken.
fn polish<T: Scalar>(form: &Form<T>, alpha: T, w: &[T], tol: T) -> (Vec<T>, usize) {
    let mut best = w.to_vec();
    let mut best_cert = certificate(form, alpha, w);
    let base_value = form.value(w);
    let slack = lit::<T>(1e-9) * T::one().max(base_value.abs());
    let mut steps = 0;
    if best_cert <= tol {
        return (best, 0);
    }
    let wmax = w.iter().fold(T::zero(), |m, &x| m.max(x));
    for theta in [1e-9, 1e-5] {
        let cut = lit::<T>(theta) * wmax;
        let support: Vec<usize> = (0..w.len()).filter(|&i| w[i] > cut).collect();
        if support.is_empty() {
            continue;
        }
        let mut x: Vec<T> = vec![T::zero(); w.len()];
        for &i in &support {
            x[i] = w[i];
        }
        if !normalize(form, alpha, &mut x) {
            continue;
        }
        let mut support = support;
        let (mut x, used) = newton(form, alpha, x, &support, tol);
        steps += used;
        // Coordinates left at zero whose links are positive belong to the
        // support when alpha > 1; seed them at their Lagrange value.
        for _ in 0..3 {
            if alpha == T::one() || certificate(form, alpha, &x) <= tol {
                break;
            }
            let g = form.links(&x);
            let lambda = form.value(&x);
            let mut grown = false;
            for i in 0..x.len() {
                if x[i] == T::zero() && g[i] > tol && lambda > T::zero() {
                    let seed = powr(g[i] / lambda, T::one() / (alpha - T::one()));
                    if seed > T::zero() {
                        x[i] = seed;
                        support.push(i);
                        grown = true;
                    }
                }
            }
            if !grown || !normalize(form, alpha, &mut x) {
                break;
            }
            support.sort_unstable();
            let (y, used) = newton(form, alpha, x, &support, tol);
            x = y;
            steps += used;
        }
        let cert = certificate(form, alpha, &x);
        if cert < best_cert && form.value(&x) >= base_value - slack {
            best = x;
            best_cert = cert;
        }
        if best_cert <= tol {
            break;
        }
    }
    (best, steps)
}

fn newton<T: Scalar>(form: &Form<T>, alpha: T, mut x: Vec<T>, support: &[usize], tol: T) -> (Vec<T>, usize) {
    let s = support.len();
    let dim = s + 1;
    let lagrange = alpha == T::one();
    let am1 = alpha - T::one();
    let mass = form.mass().to_vec();
    let mut cert = certificate(form, alpha, &x);
    let mut steps = 0;
    for _ in 0..50 {
        if cert <= tol {
            break;
        }
        let lambda = form.value(&x);
        let g = form.links(&x);
        let jg = form.link_jacobian(&x);
        let d = form.dim();
        let mut jac = vec![T::zero(); dim * dim];
        let mut rhs = vec![T::zero(); dim];
        for (r, &i) in support.iter().enumerate() {
            let wi_pow = powr(x[i], am1);
            rhs[r] = -(g[i] - lambda * wi_pow);
            for (c, &j) in support.iter().enumerate() {
                jac[r * dim + c] = jg[i * d + j];
            }
            if !lagrange {
                jac[r * dim + r] = jac[r * dim + r] - lambda * am1 * powr(x[i], am1 - T::one());
            }
            jac[r * dim + s] = -wi_pow;
        }
        let constraint: T = support.iter().map(|&i| mass[i] * powr(x[i], alpha)).sum();
        rhs[s] = -(constraint - T::one());
        for (c, &j) in support.iter().enumerate() {
            jac[s * dim + c] = alpha * mass[j] * powr(x[j], am1);
        }
        let delta = solve_dense(jac.clone(), rhs.clone(), lit(1e-14))
            .or_else(|| damped_least_squares(&jac, &rhs, dim, dim, lit(1e-12)));
        let Some(delta) = delta else { break };
        steps += 1;

        let mut t = T::one();
        let mut accepted = false;
        for _ in 0..40 {
            let mut trial = x.clone();
            let mut positive = true;
            for (r, &i) in support.iter().enumerate() {
                let v = x[i] + t * delta[r];
                if !(v > T::zero()) {
                    positive = false;
                    break;
                }
                trial[i] = v;
            }
            if positive && normalize(form, alpha, &mut trial) {
                let trial_cert = certificate(form, alpha, &trial);
                if trial_cert < cert {
                    x = trial;
                    cert = trial_cert;
                    accepted = true;
                    break;
                }
            }
            t = t / lit(2.0);
        }
        if !accepted {
            break;
        }
    }
    (x, steps)
}
