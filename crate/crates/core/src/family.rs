//! Forbidden families.

use std::str::FromStr;

use crate::embed::contains;
use crate::error::{bad_params, Error, Result};
use crate::hypergraph::Hypergraph;

/// A forbidden family of k-graphs. The empty family forbids nothing and
/// carries its uniformity explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    k: usize,
    members: Vec<Hypergraph>,
}

impl FamilySpec {
    pub fn new(members: Vec<Hypergraph>) -> Result<Self> {
        let k = members
            .first()
            .map(Hypergraph::k)
            .ok_or_else(|| bad_params("use FamilySpec::none for an empty family"))?;
        if let Some(m) = members.iter().find(|m| m.k() != k) {
            return Err(Error::UniformityMismatch(k, m.k()));
        }
        Ok(FamilySpec { k, members })
    }

    /// The empty family of k-graphs.
    pub fn none(k: usize) -> Self {
        FamilySpec { k, members: Vec::new() }
    }

    pub fn single(member: Hypergraph) -> Self {
        FamilySpec { k: member.k(), members: vec![member] }
    }

    /// `{F_0, ..., F_{t-1}}` where `F_i` is two k-edges sharing `i` vertices;
    /// freeness means every two edges share at least `t` vertices.
    pub fn t_intersecting(k: usize, t: usize) -> Result<Self> {
        if t == 0 || t >= k {
            return Err(bad_params(format!("t-intersecting needs 1 <= t < k, got k={k}, t={t}")));
        }
        let members = (0..t).map(|i| Hypergraph::edge_pair(k, i)).collect::<Result<_>>()?;
        Ok(FamilySpec { k, members })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn members(&self) -> &[Hypergraph] {
        &self.members
    }

    /// Whether `h` contains no member of the family.
    pub fn is_free(&self, h: &Hypergraph) -> Result<bool> {
        if h.k() != self.k {
            return Err(Error::UniformityMismatch(h.k(), self.k));
        }
        for m in &self.members {
            if contains(h, m)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Free-function form of [`FamilySpec::is_free`].
pub fn is_family_free(h: &Hypergraph, fam: &FamilySpec) -> Result<bool> {
    fam.is_free(h)
}

/// Parses the named families `K3`, `K4`, `Kr:<r>`, `2K2`, `fano`, `F5`,
/// `intersect:<k>:<t>` and `none:<k>`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |p: &str| p.parse::<usize>().map_err(|_| bad_params(format!("bad number in family `{s}`")));
        match parts.as_slice() {
            ["K3"] => Ok(FamilySpec::single(Hypergraph::complete(2, 3)?)),
            ["K4"] => Ok(FamilySpec::single(Hypergraph::complete(2, 4)?)),
            ["Kr", r] => Ok(FamilySpec::single(Hypergraph::complete(2, num(r)?)?)),
            ["2K2"] => Ok(FamilySpec::single(Hypergraph::edge_pair(2, 0)?)),
            ["fano"] | ["Fano"] => Ok(FamilySpec::single(Hypergraph::fano())),
            ["F5"] | ["f5"] => Ok(FamilySpec::single(Hypergraph::f5())),
            ["intersect", k, t] => FamilySpec::t_intersecting(num(k)?, num(t)?),
            ["none", k] => Ok(FamilySpec::none(num(k)?)),
            _ => Err(bad_params(format!("unknown family `{s}`"))),
        }
    }
}
