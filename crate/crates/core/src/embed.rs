//! Backtracking search for (not necessarily induced) copies of one
//! hypergraph inside another.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

struct Embedder<'a> {
    host: &'a Hypergraph,
    host_deg: Vec<usize>,
    pattern_deg: Vec<usize>,
    /// pattern vertices in assignment order
    order: Vec<usize>,
    /// for each position in `order`, pattern edges completed at that step
    closing: Vec<Vec<&'a [usize]>>,
    image: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl<'a> Embedder<'a> {
    fn new(host: &'a Hypergraph, pattern: &'a Hypergraph, pin: Option<(usize, usize)>) -> Self {
        let pattern_deg = pattern.degrees();
        let mut order: Vec<usize> = (0..pattern.n()).filter(|&v| pattern_deg[v] > 0).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(pattern_deg[v]), v));
        if let Some((p, _)) = pin {
            if let Some(pos) = order.iter().position(|&v| v == p) {
                order.remove(pos);
            }
            order.insert(0, p);
        }
        let mut position = vec![usize::MAX; pattern.n()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let mut closing = vec![Vec::new(); order.len()];
        for e in pattern.edges() {
            let last = e.iter().map(|&v| position[v]).max().expect("edges are nonempty");
            closing[last].push(e.as_slice());
        }
        Embedder {
            host,
            host_deg: host.degrees(),
            pattern_deg,
            order,
            closing,
            image: vec![None; pattern.n()],
            used: vec![false; host.n()],
        }
    }

    fn edges_hold(&self, step: usize) -> bool {
        let mut img = Vec::with_capacity(self.host.k());
        self.closing[step].iter().all(|e| {
            img.clear();
            img.extend(e.iter().map(|&v| self.image[v].expect("assigned")));
            img.sort_unstable();
            self.host.has_edge(&img)
        })
    }

    fn search(&mut self, step: usize, pin_target: Option<usize>) -> bool {
        if step == self.order.len() {
            return true;
        }
        let v = self.order[step];
        let candidates: Vec<usize> = match (step, pin_target) {
            (0, Some(t)) => vec![t],
            _ => (0..self.host.n()).collect(),
        };
        for h in candidates {
            if self.used[h] || self.host_deg[h] < self.pattern_deg[v] {
                continue;
            }
            self.image[v] = Some(h);
            self.used[h] = true;
            if self.edges_hold(step) && self.search(step + 1, pin_target) {
                return true;
            }
            self.used[h] = false;
            self.image[v] = None;
        }
        false
    }
}

/// Whether `host` has a subgraph isomorphic to `pattern`, i.e. an injective
/// vertex map sending every pattern edge to a host edge.
pub fn contains(host: &Hypergraph, pattern: &Hypergraph) -> Result<bool> {
    if host.k() != pattern.k() {
        return Err(Error::UniformityMismatch(host.k(), pattern.k()));
    }
    Ok(contains_unchecked(host, pattern, None))
}

fn contains_unchecked(host: &Hypergraph, pattern: &Hypergraph, pin: Option<(usize, usize)>) -> bool {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return false;
    }
    let mut emb = Embedder::new(host, pattern, pin);
    emb.search(0, pin.map(|(_, t)| t))
}

/// True when some automorphism maps vertex 0 to each other vertex.
pub fn is_vertex_transitive(h: &Hypergraph) -> bool {
    let deg = h.degrees();
    (1..h.n()).all(|v| deg[v] == deg[0] && contains_unchecked(h, h, Some((0, v))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Hypergraph {
        Hypergraph::complete(2, 3).unwrap()
    }

    #[test]
    fn graph_containment() {
        assert!(contains(&Hypergraph::complete(2, 4).unwrap(), &k3()).unwrap());
        assert!(!contains(&Hypergraph::turan_graph(2, 4).unwrap(), &k3()).unwrap());
        assert!(contains(&k3(), &k3()).unwrap());
        let c5 = Hypergraph::new(2, 5, [[0, 1], [1, 2], [2, 3], [3, 4], [0, 4]]).unwrap();
        let p4 = Hypergraph::new(2, 4, [[0, 1], [1, 2], [2, 3]]).unwrap();
        assert!(contains(&c5, &p4).unwrap());
        assert!(!contains(&c5, &Hypergraph::star(2, 1, 4).unwrap()).unwrap());
        assert!(matches!(
            contains(&k3(), &Hypergraph::fano()),
            Err(Error::UniformityMismatch(2, 3))
        ));
    }

    #[test]
    fn fano_not_in_b7() {
        assert!(!contains(&Hypergraph::balanced_bipartite3(7).unwrap(), &Hypergraph::fano()).unwrap());
        assert!(contains(&Hypergraph::complete(3, 7).unwrap(), &Hypergraph::fano()).unwrap());
    }

    #[test]
    fn isolated_pattern_vertices_need_room() {
        let pattern = k3().with_isolated(2);
        assert!(!contains(&Hypergraph::complete(2, 4).unwrap(), &pattern).unwrap());
        assert!(contains(&Hypergraph::complete(2, 5).unwrap(), &pattern).unwrap());
    }

    #[test]
    fn transitivity() {
        assert!(is_vertex_transitive(&Hypergraph::turan_graph(2, 4).unwrap()));
        assert!(is_vertex_transitive(&Hypergraph::fano()));
        assert!(!is_vertex_transitive(&Hypergraph::star(2, 1, 4).unwrap()));
        assert!(!is_vertex_transitive(&Hypergraph::turan_graph(2, 5).unwrap()));
    }
}
