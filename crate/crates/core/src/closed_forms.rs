//! Reference values for families where the spectral radius reduces to a
//! formula or to a one-variable maximization.

use crate::embed::is_vertex_transitive;
use crate::error::{bad_params, Error, Result};
use crate::hypergraph::Hypergraph;
use crate::scalar::{binomial, factorial, from_usize, lit, powr, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormMethod {
    ExactFormula,
    UniformWeight,
    OneDimOpt,
}

impl std::fmt::Display for ClosedFormMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ClosedFormMethod::ExactFormula => "exact_formula",
            ClosedFormMethod::UniformWeight => "uniform_weight",
            ClosedFormMethod::OneDimOpt => "one_dim_opt",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormValue<T = f64> {
    pub lambda: T,
    pub method: ClosedFormMethod,
    /// The maximizing parameter `a` of the one-dimensional problem.
    pub inner_argmax: Option<T>,
}

impl<T: Scalar> ClosedFormValue<T> {
    fn uniform(lambda: T) -> Self {
        ClosedFormValue { lambda, method: ClosedFormMethod::UniformWeight, inner_argmax: None }
    }
}

fn require_alpha<T: Scalar>(alpha: T, strict: bool) -> Result<()> {
    let ok = if strict { alpha > T::one() } else { alpha >= T::one() };
    if !ok || !alpha.is_finite() {
        return Err(bad_params(format!("alpha must be {} 1, got {alpha}", if strict { ">" } else { ">=" })));
    }
    Ok(())
}

fn bin<T: Scalar>(n: usize, k: usize) -> T {
    T::from_u128(binomial(n, k)).expect("binomial representable")
}

/// Spectral radius of the star `S^k_t(n)`: all k-sets containing a fixed
/// t-set, weighted `a = t/k` on the centre.
pub fn star_lambda<T: Scalar>(k: usize, t: usize, n: usize, alpha: T) -> Result<ClosedFormValue<T>> {
    if t == 0 || t > k || k > n {
        return Err(bad_params(format!("star needs 1 <= t <= k <= n, got k={k}, t={t}, n={n}")));
    }
    require_alpha(alpha, false)?;
    let kt = from_usize::<T>(k);
    let mut lambda = factorial::<T>(k) * bin::<T>(n - t, k - t) * powr(kt, -kt / alpha);
    if t < k {
        let ratio = from_usize::<T>(k - t) / from_usize::<T>(n - t);
        lambda = lambda * powr(ratio, from_usize::<T>(k - t) / alpha);
    }
    Ok(ClosedFormValue {
        lambda,
        method: ClosedFormMethod::ExactFormula,
        inner_argmax: Some(from_usize::<T>(t) / kt),
    })
}

/// `k! e(H) n^{-k/alpha}`, valid when uniform weights are optimal. This is
/// accepted for vertex-transitive `H`.
pub fn uniform_weight_lambda<T: Scalar>(h: &Hypergraph, alpha: T) -> Result<ClosedFormValue<T>> {
    require_alpha(alpha, false)?;
    if h.n() == 0 {
        return Err(bad_params("hypergraph has no vertices"));
    }
    if !is_vertex_transitive(h) {
        return Err(Error::NotVertexUniform);
    }
    Ok(ClosedFormValue::uniform(uniform_value(h.k(), h.edge_count(), h.n(), alpha)))
}

fn uniform_value<T: Scalar>(k: usize, e: usize, n: usize, alpha: T) -> T {
    factorial::<T>(k) * from_usize::<T>(e) * powr(from_usize::<T>(n), -from_usize::<T>(k) / alpha)
}

/// Spectral radius of the balanced complete bipartite 3-graph `B_n`.
pub fn bipartite3_lambda<T: Scalar>(n: usize, alpha: T) -> Result<ClosedFormValue<T>> {
    if n < 4 {
        return Err(bad_params(format!("bipartite 3-graph needs n >= 4, got {n}")));
    }
    require_alpha(alpha, true)?;
    if n % 2 == 0 {
        let h = n / 2;
        let edges = 2 * h * h * (h - 1) / 2;
        return Ok(ClosedFormValue::uniform(uniform_value(3, edges, n, alpha)));
    }
    let t = (n - 1) / 2;
    let problem = Bipartite3 { t: from_usize(t), alpha };
    // valid while both part weights stay positive
    let (lo, hi) = (-T::one(), T::one() + T::one() / problem.t);
    let a = maximize(&problem, lo, hi);
    Ok(ClosedFormValue {
        lambda: problem.lambda(a),
        method: ClosedFormMethod::OneDimOpt,
        inner_argmax: Some(a),
    })
}

/// Spectral radius of the Turán graph `T_{r,n}`.
pub fn turan_lambda<T: Scalar>(r: usize, n: usize, alpha: T) -> Result<ClosedFormValue<T>> {
    if r < 2 || n < r {
        return Err(bad_params(format!("Turán graph needs r >= 2 and n >= r, got r={r}, n={n}")));
    }
    require_alpha(alpha, true)?;
    let (q, s) = (n / r, n % r);
    if s == 0 {
        let edges = r * (r - 1) / 2 * q * q;
        return Ok(ClosedFormValue::uniform(uniform_value(2, edges, n, alpha)));
    }
    let problem = Turan { q: from_usize(q), r: from_usize(r), s: from_usize(s), n: from_usize(n), alpha };
    let lo = -T::one();
    let hi = problem.q * (problem.r - problem.s) / ((problem.q + T::one()) * problem.s);
    let a = maximize(&problem, lo, hi);
    Ok(ClosedFormValue {
        lambda: problem.lambda(a),
        method: ClosedFormMethod::OneDimOpt,
        inner_argmax: Some(a),
    })
}

/// `(k! e)^{1 - 1/alpha}`, an upper bound on the spectral radius of any
/// k-graph with `e` edges.
pub fn edge_bound<T: Scalar>(k: usize, e: usize, alpha: T) -> Result<T> {
    require_alpha(alpha, true)?;
    Ok(powr(factorial::<T>(k) * from_usize::<T>(e), T::one() - T::one() / alpha))
}

#[derive(Debug, Clone, PartialEq)]
pub struct KkCheck<T = f64> {
    /// Largest `x` with `(k! C(x, k))^{1-1/alpha} <= lambda`.
    pub x: T,
    /// `C(x, k-1)`.
    pub shadow_bound: T,
    pub shadow_size: usize,
    pub holds: bool,
}

/// Generalized binomial `x (x-1) ... (x-k+1) / k!`.
pub fn real_binomial<T: Scalar>(x: T, k: usize) -> T {
    (0..k).fold(T::one(), |acc, i| acc * (x - from_usize::<T>(i)) / from_usize::<T>(i + 1))
}

/// Shadow lower bound implied by a spectral lower bound `lambda`.
pub fn kk_check<T: Scalar>(h: &Hypergraph, alpha: T, lambda: T) -> Result<KkCheck<T>> {
    require_alpha(alpha, true)?;
    let k = h.k();
    if k < 2 {
        return Err(bad_params("shadow bound needs k >= 2"));
    }
    if !(lambda >= T::zero()) {
        return Err(bad_params("lambda must be nonnegative"));
    }
    let kf = factorial::<T>(k);
    let expo = T::one() - T::one() / alpha;
    let within = |x: T| powr(kf * real_binomial(x, k).max(T::zero()), expo) <= lambda;
    let mut lo = from_usize::<T>(k - 1);
    let mut hi = from_usize::<T>(h.n() + k);
    if within(hi) {
        lo = hi;
    } else {
        for _ in 0..200 {
            let mid = (lo + hi) / lit(2.0);
            if within(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
    let shadow_bound = real_binomial(lo, k - 1);
    let shadow_size = h.shadow()?.edge_count();
    Ok(KkCheck {
        x: lo,
        shadow_bound,
        shadow_size,
        holds: from_usize::<T>(shadow_size) >= shadow_bound - lit(1e-9),
    })
}

/// A smooth function of one variable with a known derivative.
pub trait Objective<T> {
    fn value(&self, a: T) -> T;
    fn derivative(&self, a: T) -> T;
}

/// `f(a) = (xy)^{1/alpha} ((t-1) x^{1/alpha} + t y^{1/alpha})` with
/// `x = (1+a)/(2t+1)` the weight^alpha on the `t` small-part vertices and
/// `y = (1 - a t/(t+1))/(2t+1)` on the other `t+1`.
pub struct Bipartite3<T> {
    pub t: T,
    pub alpha: T,
}

impl<T: Scalar> Bipartite3<T> {
    fn xy(&self, a: T) -> (T, T) {
        let t = self.t;
        let n = t + t + T::one();
        ((T::one() + a) / n, (T::one() - a * t / (t + T::one())) / n)
    }

    pub fn lambda(&self, a: T) -> T {
        lit::<T>(3.0) * self.t * (self.t + T::one()) * self.value(a)
    }
}

impl<T: Scalar> Objective<T> for Bipartite3<T> {
    fn value(&self, a: T) -> T {
        let (x, y) = self.xy(a);
        let p = T::one() / self.alpha;
        powr(x * y, p) * ((self.t - T::one()) * powr(x, p) + self.t * powr(y, p))
    }

    fn derivative(&self, a: T) -> T {
        let (x, y) = self.xy(a);
        let t = self.t;
        let p = T::one() / self.alpha;
        let n = t + t + T::one();
        let big_a = (t - T::one()) * powr(x, p - T::one()) - t * t / (t + T::one()) * powr(y, p - T::one());
        let big_b = T::one() / x - t / ((t + T::one()) * y);
        let s = (t - T::one()) * powr(x, p) + t * powr(y, p);
        powr(x * y, p) / (n * self.alpha) * (big_a + big_b * s)
    }
}

/// Twice the edge sum of `T_{r,n}`, `n = qr + s`, with weight^alpha `x` on
/// the `s` parts of size `q+1` and `y` on the rest.
pub struct Turan<T> {
    pub q: T,
    pub r: T,
    pub s: T,
    pub n: T,
    pub alpha: T,
}

impl<T: Scalar> Turan<T> {
    fn xy(&self, a: T) -> (T, T) {
        let (q, r, s) = (self.q, self.r, self.s);
        let x = (T::one() + a) / self.n;
        let y = (T::one() - a * (q + T::one()) * s / (q * (r - s))) / self.n;
        (x, y)
    }

    pub fn lambda(&self, a: T) -> T {
        self.value(a)
    }

    /// Left end of the bracket containing the maximizer.
    pub fn a0(&self) -> T {
        let (q, r, s) = (self.q, self.r, self.s);
        let g = powr(T::one() + T::one() / q, self.alpha);
        -(r - s) * q * (g - T::one()) / (s * (q + T::one()) + (r - s) * q * g)
    }
}

impl<T: Scalar> Objective<T> for Turan<T> {
    fn value(&self, a: T) -> T {
        let (q, r, s) = (self.q, self.r, self.s);
        let (x, y) = self.xy(a);
        let p = T::one() / self.alpha;
        let two = lit::<T>(2.0);
        let q1 = q + T::one();
        q1 * q1 * s * (s - T::one()) * powr(x, two * p)
            + q * q * (r - s) * (r - s - T::one()) * powr(y, two * p)
            + two * q * q1 * s * (r - s) * powr(x * y, p)
    }

    fn derivative(&self, a: T) -> T {
        let (q, r, s) = (self.q, self.r, self.s);
        let (x, y) = self.xy(a);
        let p = T::one() / self.alpha;
        let q1 = q + T::one();
        let (xp, yp) = (powr(x, p), powr(y, p));
        let c = q1 * (s - T::one()) * xp + q * (r - s) * yp;
        let d = q1 * s * xp + q * (r - s - T::one()) * yp;
        lit::<T>(2.0) * q1 * s / (self.n * self.alpha) * (c * powr(x, p - T::one()) - d * powr(y, p - T::one()))
    }
}

impl<T: Scalar> Bipartite3<T> {
    /// Bracket `[a0, a1]` known to contain the maximizer.
    pub fn bracket(&self) -> (T, T) {
        let t = self.t;
        let g = powr(T::one() - T::one() / (t * t), self.alpha / (self.alpha - T::one()));
        let a0 = (g - T::one()) / (T::one() + g * t / (t + T::one()));
        (a0, T::one() / (t + t))
    }
}

/// Maximize `f` over the open interval `(lo, hi)`: grid scan, golden-section
/// refinement around the best grid point, then Newton on `f'`.
pub fn maximize<T: Scalar, F: Objective<T>>(f: &F, lo: T, hi: T) -> T {
    const GRID: usize = 2048;
    let width = hi - lo;
    let at = |i: usize| lo + width * from_usize::<T>(i) / from_usize::<T>(GRID);
    let best = (1..GRID)
        .max_by(|&i, &j| f.value(at(i)).partial_cmp(&f.value(at(j))).unwrap_or(std::cmp::Ordering::Equal))
        .unwrap_or(GRID / 2);
    let (mut a, mut b) = (at(best - 1), at(best + 1));

    let inv_phi = (lit::<T>(5.0).sqrt() - T::one()) / lit(2.0);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f.value(c), f.value(d));
    for _ in 0..200 {
        if (b - a).abs() <= T::epsilon() * lit(4.0) * T::one().max(a.abs()) {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f.value(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f.value(d);
        }
    }
    let mut x = (a + b) / lit(2.0);

    // Newton on f' with a central-difference second derivative.
    let target = lit::<T>(1e-13).max(T::epsilon() * lit(100.0));
    let h = T::epsilon().cbrt() * T::one().max(x.abs());
    for _ in 0..30 {
        let g = f.derivative(x);
        if g.abs() <= target {
            break;
        }
        let curv = (f.derivative(x + h) - f.derivative(x - h)) / (h + h);
        if !(curv < T::zero()) {
            break;
        }
        let next = x - g / curv;
        if !(next > lo && next < hi) || f.derivative(next).abs() >= g.abs() {
            break;
        }
        x = next;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stars() {
        let v = star_lambda::<f64>(2, 1, 4, 2.0).unwrap();
        assert!((v.lambda - 3f64.sqrt()).abs() < 1e-14);
        assert_eq!(v.inner_argmax, Some(0.5));
        let v = star_lambda::<f64>(3, 1, 5, 2.0).unwrap();
        assert!((v.lambda - 2.0 * 3f64.sqrt()).abs() < 1e-13);
        for alpha in [1.0, 1.5, 3.0] {
            let v = star_lambda::<f64>(3, 3, 7, alpha).unwrap();
            assert!((v.lambda - 6.0 * 3f64.powf(-3.0 / alpha)).abs() < 1e-13);
        }
        assert!(star_lambda::<f64>(3, 0, 5, 2.0).is_err());
        assert!(star_lambda::<f64>(3, 4, 5, 2.0).is_err());
        assert!(star_lambda::<f64>(3, 1, 2, 2.0).is_err());
    }

    #[test]
    fn uniform_examples() {
        let t24 = Hypergraph::turan_graph(2, 4).unwrap();
        assert!((uniform_weight_lambda::<f64>(&t24, 2.0).unwrap().lambda - 2.0).abs() < 1e-14);
        let b4 = Hypergraph::balanced_bipartite3(4).unwrap();
        assert!((uniform_weight_lambda::<f64>(&b4, 2.0).unwrap().lambda - 3.0).abs() < 1e-14);
        let k3 = Hypergraph::complete(2, 3).unwrap();
        assert!((uniform_weight_lambda::<f64>(&k3, 2.0).unwrap().lambda - 2.0).abs() < 1e-14);
        let star = Hypergraph::star(2, 1, 4).unwrap();
        assert_eq!(uniform_weight_lambda::<f64>(&star, 2.0), Err(Error::NotVertexUniform));
    }

    #[test]
    fn bipartite_and_turan() {
        let v = bipartite3_lambda::<f64>(4, 2.0).unwrap();
        assert!((v.lambda - 3.0).abs() < 1e-14);
        assert_eq!(v.method, ClosedFormMethod::UniformWeight);

        let v = turan_lambda::<f64>(2, 4, 2.0).unwrap();
        assert!((v.lambda - 2.0).abs() < 1e-14);
        let v = turan_lambda::<f64>(2, 5, 2.0).unwrap();
        assert!((v.lambda - 6f64.sqrt()).abs() < 1e-12);
        assert_eq!(v.method, ClosedFormMethod::OneDimOpt);

        assert!(bipartite3_lambda::<f64>(3, 2.0).is_err());
        assert!(bipartite3_lambda::<f64>(5, 1.0).is_err());
        assert!(turan_lambda::<f64>(1, 5, 2.0).is_err());
        assert!(turan_lambda::<f64>(4, 3, 2.0).is_err());
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let h = 1e-6;
        for alpha in [1.3f64, 2.0, 3.5] {
            let b = Bipartite3 { t: 4.0, alpha };
            let t = Turan { q: 2.0, r: 3.0, s: 1.0, n: 7.0, alpha };
            for a in [-0.3f64, -0.05, 0.02, 0.1] {
                let fd = (b.value(a + h) - b.value(a - h)) / (2.0 * h);
                assert!((fd - b.derivative(a)).abs() < 1e-8);
                let fd = (t.value(a + h) - t.value(a - h)) / (2.0 * h);
                assert!((fd - t.derivative(a)).abs() < 1e-7);
            }
        }
    }

    #[test]
    fn optimizers_are_stationary_and_bracketed() {
        for n in [5usize, 7, 9, 21, 41] {
            for alpha in [1.5, 2.0, 3.0] {
                let v = bipartite3_lambda::<f64>(n, alpha).unwrap();
                let a = v.inner_argmax.unwrap();
                let p = Bipartite3 { t: ((n - 1) / 2) as f64, alpha };
                assert!(p.derivative(a).abs() <= 1e-10);
                let (a0, a1) = p.bracket();
                assert!(a0 - 1e-12 <= a && a <= a1 + 1e-12, "n={n} alpha={alpha}: {a0} {a} {a1}");
            }
        }
        for (r, n) in [(2usize, 5usize), (3, 7), (3, 8), (4, 9), (5, 13)] {
            for alpha in [1.5, 2.0, 3.0] {
                let v = turan_lambda::<f64>(r, n, alpha).unwrap();
                let a = v.inner_argmax.unwrap();
                let p = Turan {
                    q: (n / r) as f64,
                    r: r as f64,
                    s: (n % r) as f64,
                    n: n as f64,
                    alpha,
                };
                assert!(p.derivative(a).abs() <= 1e-10);
                assert!(p.a0() - 1e-12 <= a && a <= 1e-12, "r={r} n={n} alpha={alpha}");
            }
        }
    }

    #[test]
    fn edge_bounds() {
        assert!((edge_bound::<f64>(2, 3, 2.0).unwrap() - 6f64.sqrt()).abs() < 1e-15);
        assert_eq!(edge_bound::<f64>(2, 0, 2.0).unwrap(), 0.0);
        assert!(edge_bound::<f64>(2, 3, 1.0).is_err());
        for k in 2..6usize {
            for alpha in [1.1, 1.5, 2.0, 3.0, 7.0] {
                let single = star_lambda::<f64>(k, k, k, alpha).unwrap().lambda;
                assert!(edge_bound::<f64>(k, 1, alpha).unwrap() >= single);
            }
        }
    }

    #[test]
    fn kruskal_katona() {
        let k3 = Hypergraph::complete(2, 3).unwrap();
        let r = kk_check::<f64>(&k3, 2.0, 2.0).unwrap();
        // largest x with x(x-1) <= 4
        assert!((r.x - (1.0 + 17f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!((r.shadow_bound - r.x).abs() < 1e-12);
        assert_eq!(r.shadow_size, 3);
        assert!(r.holds);

        let e = Hypergraph::complete(3, 3).unwrap();
        let r = kk_check::<f64>(&e, 2.0, 6.0 * 3f64.powf(-1.5)).unwrap();
        assert_eq!(r.shadow_size, 3);
        assert!(r.holds);

        let mut last = 0.0;
        for lam in [0.0, 0.5, 1.0, 2.0, 2.5, 4.0] {
            let x = kk_check::<f64>(&k3, 2.0, lam).unwrap().x;
            assert!(x >= last);
            last = x;
        }
        assert!(kk_check::<f64>(&k3, 1.0, 2.0).is_err());
    }

    #[test]
    fn single_precision() {
        let v = turan_lambda::<f32>(2, 5, 2.0).unwrap();
        assert!((v.lambda - 6f32.sqrt()).abs() < 1e-5);
    }
}
