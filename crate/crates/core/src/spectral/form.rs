use crate::hypergraph::Hypergraph;
use crate::scalar::{factorial, from_usize, Scalar};

/// A homogeneous polynomial with nonnegative coefficients, together with
/// per-variable masses `m_i` defining the constraint `sum m_i w_i^alpha = 1`.
///
/// The full adjacency form of a hypergraph has one variable per vertex
/// (mass 1) and one square-free term per edge. The symmetry-reduced form has
/// one variable per block, with mass equal to the block size, and terms
/// aggregated by block multiset.
#[derive(Debug, Clone)]
pub(crate) struct Form<T> {
    degree: usize,
    mass: Vec<T>,
    terms: Vec<Term<T>>,
}

#[derive(Debug, Clone)]
struct Term<T> {
    coef: T,
    /// (variable, exponent), variables distinct
    vars: Vec<(usize, i32)>,
}

impl<T: Scalar> Form<T> {
    pub(crate) fn from_hypergraph(h: &Hypergraph) -> Self {
        let coef = factorial::<T>(h.k());
        let terms = h
            .edges()
            .iter()
            .map(|e| Term { coef, vars: e.iter().map(|&v| (v, 1)).collect() })
            .collect();
        Form { degree: h.k(), mass: vec![T::one(); h.n()], terms }
    }

    /// Restriction to vectors constant on the blocks of `block_of`.
    pub(crate) fn reduced(h: &Hypergraph, block_of: &[usize], block_sizes: &[usize]) -> Self {
        let mut agg: std::collections::BTreeMap<Vec<(usize, i32)>, usize> = Default::default();
        for e in h.edges() {
            let mut vars: Vec<(usize, i32)> = Vec::new();
            let mut blocks: Vec<usize> = e.iter().map(|&v| block_of[v]).collect();
            blocks.sort_unstable();
            for b in blocks {
                match vars.last_mut() {
                    Some((last, exp)) if *last == b => *exp += 1,
                    _ => vars.push((b, 1)),
                }
            }
            *agg.entry(vars).or_insert(0) += 1;
        }
        let kf = factorial::<T>(h.k());
        let terms = agg
            .into_iter()
            .map(|(vars, count)| Term { coef: kf * from_usize::<T>(count), vars })
            .collect();
        Form {
            degree: h.k(),
            mass: block_sizes.iter().map(|&s| from_usize::<T>(s)).collect(),
            terms,
        }
    }

    pub(crate) fn dim(&self) -> usize {
        self.mass.len()
    }

    pub(crate) fn degree(&self) -> usize {
        self.degree
    }

    pub(crate) fn mass(&self) -> &[T] {
        &self.mass
    }

    pub(crate) fn value(&self, w: &[T]) -> T {
        self.terms
            .iter()
            .map(|t| t.vars.iter().fold(t.coef, |acc, &(v, e)| acc * w[v].powi(e)))
            .sum()
    }

    /// Per-unit-mass link values `g_i = (k m_i)^{-1} d(value)/dw_i`; in the
    /// full form these are the ordered link sums of the vertices.
    pub(crate) fn links(&self, w: &[T]) -> Vec<T> {
        let mut g = vec![T::zero(); self.dim()];
        for t in &self.terms {
            for (pos, &(v, e)) in t.vars.iter().enumerate() {
                let mut prod = t.coef * from_usize::<T>(e as usize) * w[v].powi(e - 1);
                for (other, &(u, f)) in t.vars.iter().enumerate() {
                    if other != pos {
                        prod = prod * w[u].powi(f);
                    }
                }
                g[v] = g[v] + prod;
            }
        }
        let k = from_usize::<T>(self.degree);
        for (gi, &m) in g.iter_mut().zip(&self.mass) {
            *gi = *gi / (k * m);
        }
        g
    }

    /// Jacobian of [`Form::links`], row-major `dim x dim`.
    pub(crate) fn link_jacobian(&self, w: &[T]) -> Vec<T> {
        let d = self.dim();
        let mut jac = vec![T::zero(); d * d];
        for t in &self.terms {
            for (a, &(i, ei)) in t.vars.iter().enumerate() {
                for (b, &(j, ej)) in t.vars.iter().enumerate() {
                    let mut prod = t.coef;
                    if a == b {
                        if ei < 2 {
                            continue;
                        }
                        prod = prod * from_usize::<T>((ei * (ei - 1)) as usize) * w[i].powi(ei - 2);
                    } else {
                        prod = prod
                            * from_usize::<T>((ei * ej) as usize)
                            * w[i].powi(ei - 1)
                            * w[j].powi(ej - 1);
                    }
                    for (c, &(u, f)) in t.vars.iter().enumerate() {
                        if c != a && c != b {
                            prod = prod * w[u].powi(f);
                        }
                    }
                    jac[i * d + j] = jac[i * d + j] + prod;
                }
            }
        }
        let k = from_usize::<T>(self.degree);
        for i in 0..d {
            let scale = k * self.mass[i];
            for j in 0..d {
                jac[i * d + j] = jac[i * d + j] / scale;
            }
        }
        jac
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_identity_and_jacobian() {
        let h = Hypergraph::new(3, 5, [[0, 1, 2], [0, 1, 3], [2, 3, 4], [1, 3, 4]]).unwrap();
        let form = Form::<f64>::from_hypergraph(&h);
        let w = [0.3, 0.5, 0.2, 0.7, 0.4];
        let g = form.links(&w);
        let euler: f64 = w.iter().zip(&g).map(|(a, b)| a * b).sum();
        assert!((euler - form.value(&w)).abs() < 1e-14);

        // finite-difference check of the link jacobian
        let jac = form.link_jacobian(&w);
        let h_step = 1e-6;
        for j in 0..5 {
            let mut up = w;
            let mut dn = w;
            up[j] += h_step;
            dn[j] -= h_step;
            let (gu, gd) = (form.links(&up), form.links(&dn));
            for i in 0..5 {
                let fd = (gu[i] - gd[i]) / (2.0 * h_step);
                assert!((fd - jac[i * 5 + j]).abs() < 1e-8, "({i},{j})");
            }
        }
    }

    #[test]
    fn reduced_form_agrees_on_block_constant_vectors() {
        let h = Hypergraph::star(3, 1, 5).unwrap();
        let block_of = [0, 1, 1, 1, 1];
        let red = Form::<f64>::reduced(&h, &block_of, &[1, 4]);
        let full = Form::<f64>::from_hypergraph(&h);
        let y = [0.6, 0.35];
        let w: Vec<f64> = block_of.iter().map(|&b| y[b]).collect();
        assert!((red.value(&y) - full.value(&w)).abs() < 1e-14);
        let (gr, gf) = (red.links(&y), full.links(&w));
        assert!((gr[0] - gf[0]).abs() < 1e-14);
        assert!((gr[1] - gf[1]).abs() < 1e-14);

        let jac = red.link_jacobian(&y);
        let step = 1e-6;
        for j in 0..2 {
            let mut up = y;
            let mut dn = y;
            up[j] += step;
            dn[j] -= step;
            let (gu, gd) = (red.links(&up), red.links(&dn));
            for i in 0..2 {
                assert!(((gu[i] - gd[i]) / (2.0 * step) - jac[i * 2 + j]).abs() < 1e-7);
            }
        }
    }
}
