//! Analytic spread via the linear relation graph, the limiting depth of
//! powers, and closed-form predictions for the stabilization index of
//! path ideals of complete multipartite graphs.

use std::collections::{BTreeSet, HashMap};

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::{Error, Monomial, MonomialIdeal, PartitionSpec, Result};

/// The graph on ring variables whose edges record degree-one relations
/// between generators: `{i, j}` is an edge when `u / x_i = v / x_j` for
/// generators `u`, `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRelationGraph {
    ring_dim: usize,
    vertices: Vec<usize>,
    edges: Vec<(usize, usize)>,
    components: usize,
}

impl LinearRelationGraph {
    pub fn ring_dim(&self) -> usize {
        self.ring_dim
    }

    /// Variables incident to at least one relation, ascending.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Connected components among the non-isolated vertices.
    pub fn component_count(&self) -> usize {
        self.components
    }

    /// Analytic spread of the ideal: vertices minus components plus one.
    pub fn spread(&self) -> usize {
        self.vertices.len() - self.components + 1
    }

    /// True when every ring variable joins the graph and any two of them
    /// are related.
    pub fn is_complete_on_all_variables(&self) -> bool {
        let v = self.vertices.len();
        v == self.ring_dim && self.edges.len() == v * (v - 1) / 2
    }
}

impl Serialize for LinearRelationGraph {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let vertices: Vec<usize> = self.vertices.iter().map(|v| v + 1).collect();
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&(a, b)| (a + 1, b + 1)).collect();
        let mut s = serializer.serialize_struct("LinearRelationGraph", 5)?;
        s.serialize_field("ringDim", &self.ring_dim)?;
        s.serialize_field("vertices", &vertices)?;
        s.serialize_field("edges", &edges)?;
        s.serialize_field("components", &self.components)?;
        s.serialize_field("spread", &self.spread())?;
        s.end()
    }
}

/// Build the linear relation graph of a nonzero, proper, equigenerated
/// monomial ideal. Generators sharing a quotient `u / x_i` form cliques.
pub fn linear_relation_graph(ideal: &MonomialIdeal) -> Result<LinearRelationGraph> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if ideal.equigenerated_degree().is_none() {
        return Err(Error::NotEquigenerated);
    }
    let mut classes: HashMap<Monomial, Vec<usize>> = HashMap::new();
    for u in ideal.gens() {
        for i in u.support() {
            let mut exps = u.exponents().to_vec();
            exps[i] -= 1;
            classes.entry(Monomial::new(exps)).or_default().push(i);
        }
    }
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for vars in classes.values() {
        for (k, &a) in vars.iter().enumerate() {
            for &b in &vars[k + 1..] {
                edges.insert((a.min(b), a.max(b)));
            }
        }
    }
    let vertices: Vec<usize> = edges
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let position: HashMap<usize, usize> =
        vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for &(a, b) in &edges {
        let ra = find(&mut parent, position[&a]);
        let rb = find(&mut parent, position[&b]);
        parent[ra] = rb;
    }
    let components = (0..vertices.len())
        .filter(|&x| find(&mut parent, x) == x)
        .count();
    Ok(LinearRelationGraph {
        ring_dim: ideal.ring_dim(),
        vertices,
        edges: edges.into_iter().collect(),
        components,
    })
}

/// Analytic spread of an equigenerated ideal, read off its linear
/// relation graph.
pub fn analytic_spread(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(linear_relation_graph(ideal)?.spread())
}

/// The depth that quotients by high powers settle at: ring dimension
/// minus analytic spread.
pub fn limit_depth_formula(ideal: &MonomialIdeal) -> Result<usize> {
    let ell = analytic_spread(ideal)?;
    Ok(ideal.ring_dim().saturating_sub(ell))
}

/// A closed-form prediction for the power at which depth stabilizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum DstabPrediction {
    /// The stabilization index is known exactly.
    Exact { value: usize },
    /// The stabilization index lies in `lo..=hi`.
    Bounds { lo: usize, hi: usize },
    /// No closed form covers this configuration.
    Uncovered,
}

impl DstabPrediction {
    /// Whether an observed stabilization index is consistent with the
    /// prediction. `Uncovered` admits anything.
    pub fn admits(&self, k: usize) -> bool {
        match *self {
            DstabPrediction::Exact { value } => k == value,
            DstabPrediction::Bounds { lo, hi } => lo <= k && k <= hi,
            DstabPrediction::Uncovered => true,
        }
    }
}

/// Does the complete multipartite graph contain a path on `t` vertices?
/// Equivalent to filling `t` slots with at most `ceil(t/2)` vertices per
/// block.
pub(crate) fn multipartite_has_t_path(spec: &PartitionSpec, t: usize) -> bool {
    let n = spec.total();
    if t > n {
        return false;
    }
    let cap = t.div_ceil(2);
    spec.sizes().iter().map(|&s| s.min(cap)).sum::<usize>() >= t
}

/// Depth of the quotient by the `k`-th power in the bipartite regime
/// where the small side is exactly `floor(t/2)` and the large side
/// exceeds `ceil(t/2)`; `None` outside that regime.
pub(crate) fn bipartite_regime_depth(p: usize, q: usize, t: usize, k: usize) -> Option<usize> {
    if p > q || p != t / 2 || q <= t.div_ceil(2) {
        return None;
    }
    let drop = k as i64 * (t.div_ceil(2) as i64 - q as i64) + q as i64 - 1;
    Some(p + drop.max(0) as usize)
}

/// Predict the depth stabilization index of the `t`-path ideal of a
/// complete multipartite graph from its block sizes alone.
pub fn closed_form_dstab(spec: &PartitionSpec, t: usize) -> Result<DstabPrediction> {
    if t < 2 {
        return Err(Error::PathTooShort(t));
    }
    let mut sizes = spec.sizes().to_vec();
    sizes.sort_unstable();
    let n = spec.total();
    let r = sizes.len();
    let half_up = t.div_ceil(2);
    if !multipartite_has_t_path(spec, t) {
        return Ok(DstabPrediction::Uncovered);
    }
    if t == n {
        // A single generator: the whole vertex set.
        return Ok(DstabPrediction::Exact { value: 1 });
    }
    if sizes.iter().all(|&s| s <= half_up) {
        // Every block fits under the path cap, so powers behave like a
        // squarefree Veronese family.
        return Ok(DstabPrediction::Exact {
            value: (n - 1).div_ceil(n - t),
        });
    }
    if r == 2 {
        let (p, q) = (sizes[0], sizes[1]);
        if p == t / 2 && q > half_up {
            return Ok(DstabPrediction::Exact {
                value: (q - 1).div_ceil(q - half_up),
            });
        }
        if p > t / 2 && q > half_up {
            return Ok(if t % 2 == 1 {
                DstabPrediction::Bounds { lo: 2, hi: n - 1 }
            } else {
                DstabPrediction::Bounds { lo: 1, hi: n - 2 }
            });
        }
        return Ok(DstabPrediction::Uncovered);
    }
    if t == 2 {
        return Ok(DstabPrediction::Exact { value: 2 });
    }
    if t == 3 && n >= 5 {
        return Ok(DstabPrediction::Exact { value: 2 });
    }
    if sizes.iter().all(|&s| s >= half_up) {
        return Ok(DstabPrediction::Bounds { lo: 2, hi: n - 1 });
    }
    Ok(DstabPrediction::Uncovered)
}
