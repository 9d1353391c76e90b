use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::scalar::{factorial, lit, powr, Scalar};

use super::solver::SpectralResult;
use super::weights::WeightVector;

/// `k! * sum over edges of prod w_v` for an arbitrary (possibly signed) vector.
pub fn tau_slice<T: Scalar>(h: &Hypergraph, w: &[T]) -> Result<T> {
    if w.len() != h.n() {
        return Err(Error::DimensionMismatch { expected: h.n(), got: w.len() });
    }
    let kf = factorial::<T>(h.k());
    Ok(h.edges().iter().map(|e| e.iter().fold(kf, |acc, &v| acc * w[v])).sum())
}

/// The adjacency form `tau_H(w, ..., w)`.
pub fn tau_value<T: Scalar>(h: &Hypergraph, w: &WeightVector<T>) -> Result<T> {
    tau_slice(h, w.values())
}

fn link_sums<T: Scalar>(h: &Hypergraph, w: &[T]) -> Vec<T> {
    let kf1 = factorial::<T>(h.k() - 1);
    let mut g = vec![T::zero(); h.n()];
    for e in h.edges() {
        for (pos, &v) in e.iter().enumerate() {
            let term = e
                .iter()
                .enumerate()
                .filter(|&(p, _)| p != pos)
                .fold(kf1, |acc, (_, &u)| acc * w[u]);
            g[v] = g[v] + term;
        }
    }
    g
}

/// `tau_H(e_i, w, ..., w)`: `(k-1)!` times the sum over edges through `i`
/// of the product of the other weights.
pub fn partial<T: Scalar>(h: &Hypergraph, w: &WeightVector<T>, i: usize) -> Result<T> {
    if w.len() != h.n() {
        return Err(Error::DimensionMismatch { expected: h.n(), got: w.len() });
    }
    if i >= h.n() {
        return Err(Error::VertexRange { vertex: i, n: h.n() });
    }
    let kf1 = factorial::<T>(h.k() - 1);
    let vals = w.values();
    Ok(h.edges()
        .iter()
        .filter(|e| e.contains(&i))
        .map(|e| e.iter().filter(|&&u| u != i).fold(kf1, |acc, &u| acc * vals[u]))
        .sum())
}

/// All link sums at once; index `i` equals [`partial`] at `i`.
pub fn partials<T: Scalar>(h: &Hypergraph, w: &WeightVector<T>) -> Result<Vec<T>> {
    if w.len() != h.n() {
        return Err(Error::DimensionMismatch { expected: h.n(), got: w.len() });
    }
    Ok(link_sums(h, w.values()))
}

/// `max_i |tau_H(e_i, w, ..., w) - lambda w_i^(alpha-1)|`. At `alpha = 1` the
/// maximum runs over the support of `w` only.
pub fn kkt_residual<T: Scalar>(h: &Hypergraph, w: &WeightVector<T>, lambda: T) -> T {
    let vals = w.values();
    if vals.len() != h.n() {
        return T::infinity();
    }
    let g = link_sums(h, vals);
    let alpha = w.alpha();
    let lagrange = alpha == T::one();
    g.iter()
        .zip(vals)
        .filter(|&(_, &x)| !lagrange || x > T::zero())
        .map(|(&gi, &x)| (gi - lambda * powr(x, alpha - T::one())).abs())
        .fold(T::zero(), T::max)
}

/// Blocks of the relation `i ~ j` iff the transposition `(i j)` fixes the
/// edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryPartition {
    pub classes: Vec<Vec<usize>>,
}

impl SymmetryPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Block index of every vertex.
    pub fn block_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for (b, class) in self.classes.iter().enumerate() {
            for &v in class {
                out[v] = b;
            }
        }
        out
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

pub fn symmetry_partition(h: &Hypergraph) -> SymmetryPartition {
    // (i j) and (j l) automorphisms give (i l) = (i j)(j l)(i j), so testing
    // against one representative per block suffices.
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'vertex: for v in 0..h.n() {
        for class in classes.iter_mut() {
            if h.is_transposition_automorphism(class[0], v) {
                class.push(v);
                continue 'vertex;
            }
        }
        classes.push(vec![v]);
    }
    SymmetryPartition { classes }
}

/// Replace `w_i, w_j` by their alpha-power mean. Never decreases `tau` when
/// `(i j)` is an automorphism.
pub fn symmetrize_pair<T: Scalar>(h: &Hypergraph, w: &WeightVector<T>, i: usize, j: usize) -> Result<WeightVector<T>> {
    if w.len() != h.n() {
        return Err(Error::DimensionMismatch { expected: h.n(), got: w.len() });
    }
    for v in [i, j] {
        if v >= h.n() {
            return Err(Error::VertexRange { vertex: v, n: h.n() });
        }
    }
    if !h.is_transposition_automorphism(i, j) {
        return Err(Error::NotAutomorphism(i, j));
    }
    let alpha = w.alpha();
    let mut vals = w.values().to_vec();
    if vals[i] != vals[j] {
        let mean = (powr(vals[i], alpha) + powr(vals[j], alpha)) / lit(2.0);
        let v = powr(mean, T::one() / alpha);
        vals[i] = v;
        vals[j] = v;
    }
    Ok(WeightVector::from_parts_unchecked(alpha, vals))
}

/// Lower bound on `lambda(H - u)` obtained by deleting `u` from the optimal
/// weighting and rescaling:
/// `(1 - w_u^a)^(-k/a) (1 - k w_u^a) lambda`.
pub fn deletion_bound<T: Scalar>(h: &Hypergraph, result: &SpectralResult<T>, u: usize) -> Result<T> {
    let w = &result.witness;
    if w.len() != h.n() {
        return Err(Error::DimensionMismatch { expected: h.n(), got: w.len() });
    }
    if u >= h.n() {
        return Err(Error::VertexRange { vertex: u, n: h.n() });
    }
    let alpha = w.alpha();
    let k = lit::<T>(h.k() as f64);
    let wa = powr(w.values()[u], alpha);
    if wa * k >= T::one() {
        return Err(Error::BoundVoid(wa.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(powr(T::one() - wa, -k / alpha) * (T::one() - k * wa) * result.lambda)
}
