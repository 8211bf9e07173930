//! The swap construction: glue `H₁` into `V₁` and `H₂` into `V₂` to get
//! `G₁`, glue them through `π` into the opposite sets to get `G₂`, then work
//! out which matrices the cousin flags guarantee the pair shares a spectrum
//! for and check the similarity `𝒮` directly.

mod plan;

use std::collections::BTreeSet;

use serde::Serialize;

pub use plan::{emit_plan, parse_plan};

use crate::cousins::{classify_pair, find_involution, validate_sets, CousinClassification, SwapInvolution};
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, glue, induced_subgraph, Graph, VertexMap};
use crate::linalg::{conjugate, integer_similarity, swap_similarity, ExactMatrix, Rational};
use crate::spectra::{build_matrix, generalized_matrix, random_walk_laplacian, MatrixKind};

/// A validated set of inputs for [`swap_construct`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapPlan {
    base: Graph,
    v1: Vec<usize>,
    v2: Vec<usize>,
    pi: SwapInvolution,
    h1: Graph,
    h2: Graph,
    phi1: VertexMap,
    phi2: VertexMap,
}

fn check_onto(phi: &VertexMap, set: &[usize], name: &str, n: usize) -> Result<()> {
    VertexMap::new(phi.images().to_vec(), n)?;
    if phi.len() != set.len() || phi.images().iter().any(|v| !set.contains(v)) {
        return Err(Error::InvalidPlan(format!("{name} is not a bijection onto its set")));
    }
    Ok(())
}

impl SwapPlan {
    /// Validates every hypothesis of the construction. `pi`, `phi1` and
    /// `phi2` are optional: a missing `pi` is searched for with
    /// [`find_involution`], and a missing `phiᵢ` sends vertex `k` of `Hᵢ`
    /// to `Vᵢ[k]`.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        base: Graph,
        v1: Vec<usize>,
        v2: Vec<usize>,
        pi: Option<SwapInvolution>,
        h1: Graph,
        h2: Graph,
        phi1: Option<VertexMap>,
        phi2: Option<VertexMap>,
    ) -> Result<Self> {
        let n = base.order();
        validate_sets(n, &v1, &v2)?;
        for (name, set) in [("V1", &v1), ("V2", &v2)] {
            for (i, &a) in set.iter().enumerate() {
                if set[i + 1..].iter().any(|&b| base.has_edge(a, b)) {
                    return Err(Error::NonEmptyInducedSet(name));
                }
            }
        }
        let pi = match pi {
            Some(pi) => {
                pi.check_swaps(&v1, &v2)?;
                for &a in &v1 {
                    for &b in &v2 {
                        if base.has_edge(a, b) != base.has_edge(pi.apply(a), pi.apply(b)) {
                            return Err(Error::InvalidInvolution(format!(
                                "not an automorphism: edge status of {{{a}, {b}}} changes under the swap"
                            )));
                        }
                    }
                }
                pi
            }
            None => find_involution(&base, &v1, &v2)?.ok_or_else(|| {
                Error::InvalidInvolution("no set-swapping automorphism of the induced subgraph exists".into())
            })?,
        };
        let m = v1.len();
        for (name, h) in [("H1", &h1), ("H2", &h2)] {
            if h.order() != m {
                return Err(Error::InvalidPlan(format!(
                    "{name} has {} vertices, expected {m}",
                    h.order()
                )));
            }
        }
        let phi1 = phi1.unwrap_or_else(|| VertexMap::new(v1.clone(), n).expect("validated set"));
        let phi2 = phi2.unwrap_or_else(|| VertexMap::new(v2.clone(), n).expect("validated set"));
        check_onto(&phi1, &v1, "PHI1", n)?;
        check_onto(&phi2, &v2, "PHI2", n)?;
        Ok(SwapPlan {
            base,
            v1,
            v2,
            pi,
            h1,
            h2,
            phi1,
            phi2,
        })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn v1(&self) -> &[usize] {
        &self.v1
    }

    pub fn v2(&self) -> &[usize] {
        &self.v2
    }

    pub fn pi(&self) -> &SwapInvolution {
        &self.pi
    }

    pub fn h1(&self) -> &Graph {
        &self.h1
    }

    pub fn h2(&self) -> &Graph {
        &self.h2
    }

    pub fn phi1(&self) -> &VertexMap {
        &self.phi1
    }

    pub fn phi2(&self) -> &VertexMap {
        &self.phi2
    }

    pub fn m(&self) -> usize {
        self.v1.len()
    }

    /// The same construction with the roles of `(H₁, φ₁)` and `(H₂, φ₂)`
    /// exchanged through `π`. Its `G₁` is this plan's `G₂` and vice versa.
    pub fn mirrored(&self) -> SwapPlan {
        let pi = |v| self.pi.apply(v);
        SwapPlan {
            base: self.base.clone(),
            v1: self.v1.clone(),
            v2: self.v2.clone(),
            pi: self.pi.clone(),
            h1: self.h2.clone(),
            h2: self.h1.clone(),
            phi1: self.phi2.then(pi),
            phi2: self.phi1.then(pi),
        }
    }

    /// `V₁` followed by `V₂` arranged so that `π(V₁[i]) = V₂[m−1−i]`.
    pub fn swap_order(&self) -> Vec<usize> {
        crate::cousins::canonical_swap_order(&self.v1, &self.v2, &self.pi).expect("validated involution")
    }
}

/// `(G₁, G₂)`. `H₁` is always glued before `H₂`.
pub fn swap_construct(plan: &SwapPlan) -> Result<(Graph, Graph)> {
    let g1 = glue(&glue(&plan.base, &plan.h1, &plan.phi1)?, &plan.h2, &plan.phi2)?;
    let pi = |v| plan.pi.apply(v);
    let g2 = glue(
        &glue(&plan.base, &plan.h1, &plan.phi1.then(pi))?,
        &plan.h2,
        &plan.phi2.then(pi),
    )?;
    Ok((g1, g2))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    /// Flags of `(V₁, V₂)` in the base graph. Gluing inside the sets changes
    /// neither adjacency nor distances to outside vertices, so the flags
    /// also describe `G₁` apart from the co-degree count.
    pub classification: CousinClassification,
    pub g1_induced_regular: bool,
    /// Transmission regularity of `G₁[V₁ ∪ V₂]` with distances measured in
    /// that induced graph; false when it is disconnected. Reported only.
    pub g1_induced_transmission_regular: bool,
    /// Constant row sums of the distance matrix of `G₁` restricted to
    /// `V₁ ∪ V₂`, i.e. transmission regularity with distances measured in
    /// `G₁`. This is what licenses the distance matrix: paths through outside
    /// vertices can make the induced reading hold while the block is uneven.
    pub g1_block_transmission_regular: bool,
    pub g1_min_degree_positive: bool,
    pub licensed: BTreeSet<MatrixKind>,
}

/// The matrix kinds for which the hypotheses guarantee `G₁` and `G₂` are
/// cospectral. Kinds outside the set may still be cospectral; this only
/// records what follows from the flags.
pub fn check_hypotheses(plan: &SwapPlan, g1: &Graph) -> Result<HypothesisReport> {
    let classification = classify_pair(&plan.base, &plan.v1, &plan.v2)?;
    let mut union = plan.v1.clone();
    union.extend_from_slice(&plan.v2);
    let induced = induced_subgraph(g1, &union)?;
    let regular = induced.regular_degree().is_some();
    let transmission_regular = all_pairs_distances(&induced)
        .transmissions()
        .is_some_and(|t| t.windows(2).all(|w| w[0] == w[1]));
    let g1_dist = all_pairs_distances(g1);
    let block_transmission_regular = g1_dist.is_connected() && {
        let sums: Vec<u64> = union
            .iter()
            .map(|&u| union.iter().map(|&v| u64::from(g1_dist.raw(u, v))).sum())
            .collect();
        sums.windows(2).all(|w| w[0] == w[1])
    };
    let min_degree_positive = g1.min_degree().is_some_and(|d| d > 0);

    let mut licensed = BTreeSet::new();
    if classification.co_transmission == Some(true) {
        licensed.insert(MatrixKind::DistanceLaplacian);
    }
    if classification.cousins == Some(true) && block_transmission_regular {
        licensed.insert(MatrixKind::Distance);
    }
    if classification.co_degree {
        licensed.insert(MatrixKind::Laplacian);
        if regular {
            licensed.insert(MatrixKind::SignlessLaplacian);
            licensed.insert(MatrixKind::Generalized);
            if min_degree_positive {
                licensed.insert(MatrixKind::NormalizedLaplacian);
            }
        }
    }
    if classification.relaxed && regular {
        licensed.insert(MatrixKind::Adjacency);
    }
    Ok(HypothesisReport {
        classification,
        g1_induced_regular: regular,
        g1_induced_transmission_regular: transmission_regular,
        g1_block_transmission_regular: block_transmission_regular,
        g1_min_degree_positive: min_degree_positive,
        licensed,
    })
}

/// `swap_order` followed by every other vertex in increasing order.
pub fn full_ordering(n: usize, swap_order: &[usize]) -> Result<Vec<usize>> {
    if swap_order.is_empty() || !swap_order.len().is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "swap ordering must have positive even length, got {}",
            swap_order.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in swap_order {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidArgument(format!("vertex {v} repeated in ordering")));
        }
    }
    let mut order = swap_order.to_vec();
    order.extend((0..n).filter(|&v| !seen[v]));
    Ok(order)
}

/// Checks `𝒮·M(G₁)·𝒮 = M(G₂)` exactly with both matrices indexed by
/// [`full_ordering`]`(swap_order)`.
///
/// The normalized Laplacian is checked through `D⁻¹L`: when `D` agrees on
/// both graphs and is constant on the swapped block, `𝒮` commutes with
/// `D^{±1/2}` and the two statements are equivalent. The generalized kind is
/// checked on every integer point of `{0..n}²`.
pub fn verify_similarity(g1: &Graph, g2: &Graph, swap_order: &[usize], kind: MatrixKind) -> Result<bool> {
    let n = g1.order();
    if g2.order() != n {
        return Err(Error::DimensionMismatch(n, g2.order()));
    }
    let order = full_ordering(n, swap_order)?;
    let m = swap_order.len() / 2;
    let holds = |a: &ExactMatrix, b: &ExactMatrix| -> Result<bool> {
        let (a, b) = (a.permuted(&order), b.permuted(&order));
        match integer_similarity(m, &a, &b) {
            Some(verdict) => Ok(verdict),
            None => Ok(conjugate(&swap_similarity(m, n)?, &a)? == b),
        }
    };
    match kind {
        MatrixKind::NormalizedLaplacian => {
            let d1 = g1.degrees();
            let d2 = g2.degrees();
            if d1 != d2 || swap_order.iter().any(|&v| d1[v] != d1[swap_order[0]]) {
                return Ok(false);
            }
            holds(&random_walk_laplacian(g1)?, &random_walk_laplacian(g2)?)
        }
        MatrixKind::Generalized => {
            for lambda in 0..=n {
                for r in 0..=n {
                    let l = Rational::from_integer(lambda.into());
                    let r = Rational::from_integer(r.into());
                    if !holds(&generalized_matrix(g1, &l, &r), &generalized_matrix(g2, &l, &r))? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        _ => holds(&build_matrix(g1, kind)?, &build_matrix(g2, kind)?),
    }
}

/// True when every distance with at least one endpoint outside `V₁ ∪ V₂` is
/// the same in both graphs.
pub fn verify_distance_preservation(g1: &Graph, g2: &Graph, v1: &[usize], v2: &[usize]) -> Result<bool> {
    let n = g1.order();
    if g2.order() != n {
        return Err(Error::DimensionMismatch(n, g2.order()));
    }
    validate_sets(n, v1, v2)?;
    let d1 = all_pairs_distances(g1);
    let d2 = all_pairs_distances(g2);
    if !d1.is_connected() || !d2.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut inside = vec![false; n];
    for &v in v1.iter().chain(v2) {
        inside[v] = true;
    }
    Ok((0..n)
        .filter(|&x| !inside[x])
        .all(|x| (0..n).all(|y| d1.raw(x, y) == d2.raw(x, y))))
}

/// True when `π` carries the edges of `G₁[V₁ ∪ V₂]` onto those of
/// `G₂[V₁ ∪ V₂]`.
pub fn verify_pi_isomorphism(plan: &SwapPlan, g1: &Graph, g2: &Graph) -> bool {
    let union: Vec<usize> = plan.v1.iter().chain(&plan.v2).copied().collect();
    union.iter().enumerate().all(|(i, &a)| {
        union[i + 1..]
            .iter()
            .all(|&b| g1.has_edge(a, b) == g2.has_edge(plan.pi.apply(a), plan.pi.apply(b)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::cospectral;

    /// Path 6-7-8 with twins {0,1,2} on 6 and {3,4,5} on 8.
    fn twin_plan(h1: Graph, h2: Graph) -> SwapPlan {
        let mut edges = vec![(6, 7), (7, 8)];
        edges.extend([(0, 6), (1, 6), (2, 6), (3, 8), (4, 8), (5, 8)]);
        let base = Graph::from_edges(9, edges).unwrap();
        SwapPlan::new(base, vec![0, 1, 2], vec![3, 4, 5], None, h1, h2, None, None).unwrap()
    }

    #[test]
    fn empty_houses_leave_base_alone() {
        let plan = twin_plan(Graph::empty(3), Graph::empty(3));
        let (g1, g2) = swap_construct(&plan).unwrap();
        assert_eq!(g1, *plan.base());
        assert_eq!(g2, *plan.base());
    }

    #[test]
    fn symmetric_placement_is_fixed_point() {
        // H₂ = H₁ and φ₂ = π∘φ₁.
        let base = twin_plan(Graph::empty(3), Graph::empty(3));
        let phi2 = base.phi1().then(|v| base.pi().apply(v));
        let plan = SwapPlan::new(
            base.base().clone(),
            base.v1().to_vec(),
            base.v2().to_vec(),
            None,
            Graph::path(3),
            Graph::path(3),
            None,
            Some(phi2),
        )
        .unwrap();
        let (g1, g2) = swap_construct(&plan).unwrap();
        assert_eq!(g1, g2);
    }

    #[test]
    fn edge_count_and_outside_edges() {
        let plan = twin_plan(Graph::path(3), Graph::empty(3));
        let (g1, g2) = swap_construct(&plan).unwrap();
        assert_eq!(g1.size(), plan.base().size() + 2);
        assert_eq!(g2.size(), g1.size());
        assert!(g1.has_edge(0, 1) && g1.has_edge(1, 2));
        assert!(g2.has_edge(5, 4) && g2.has_edge(4, 3));
        for (u, v) in g1.edges() {
            if u >= 6 && v >= 6 {
                assert!(g2.has_edge(u, v));
            }
        }
    }

    #[test]
    fn twin_plan_is_laplacian_licensed_and_similar() {
        let plan = twin_plan(Graph::path(3), Graph::empty(3));
        let (g1, g2) = swap_construct(&plan).unwrap();
        let report = check_hypotheses(&plan, &g1).unwrap();
        assert!(report.licensed.contains(&MatrixKind::Laplacian));
        assert!(!report.g1_induced_regular);
        assert!(!report.licensed.contains(&MatrixKind::Adjacency));
        let order = plan.swap_order();
        assert_eq!(order, vec![0, 1, 2, 3, 4, 5]);
        for kind in &report.licensed {
            assert!(verify_similarity(&g1, &g2, &order, *kind).unwrap(), "{kind}");
            assert!(cospectral(&g1, &g2, *kind).unwrap(), "{kind}");
        }
        assert!(verify_pi_isomorphism(&plan, &g1, &g2));
        assert!(verify_distance_preservation(&g1, &g2, plan.v1(), plan.v2()).unwrap());
    }

    #[test]
    fn unreflected_order_fails() {
        // H₁ must not be symmetric under reversal, or both orders work.
        let plan = twin_plan(Graph::from_edges(3, [(0, 1)]).unwrap(), Graph::empty(3));
        let (g1, g2) = swap_construct(&plan).unwrap();
        // V₂ listed so that π(V₁[i]) = V₂[i]: not the reflection convention.
        let wrong = [0, 1, 2, 5, 4, 3];
        assert!(!verify_similarity(&g1, &g2, &wrong, MatrixKind::Laplacian).unwrap());
    }

    #[test]
    fn singleton_swap_is_identity_similarity() {
        let base = Graph::from_edges(3, [(0, 2), (1, 2)]).unwrap();
        let plan = SwapPlan::new(base, vec![0], vec![1], None, Graph::empty(1), Graph::empty(1), None, None)
            .unwrap();
        let (g1, g2) = swap_construct(&plan).unwrap();
        assert_eq!(g1, g2);
        assert!(verify_similarity(&g1, &g2, &plan.swap_order(), MatrixKind::Adjacency).unwrap());
    }

    #[test]
    fn mirrored_plan_exchanges_pair() {
        let plan = twin_plan(Graph::path(3), Graph::from_edges(3, [(0, 2)]).unwrap());
        let (g1, g2) = swap_construct(&plan).unwrap();
        let (m1, m2) = swap_construct(&plan.mirrored()).unwrap();
        assert_eq!((m1, m2), (g2, g1));
    }

    #[test]
    fn corrupt_pi_breaks_isomorphism_check() {
        let base = Graph::from_edges(5, [(0, 4), (1, 4), (2, 4), (3, 4), (0, 2)]).unwrap();
        let plan = SwapPlan::new(
            base.clone(),
            vec![0, 1],
            vec![2, 3],
            None,
            Graph::path(2),
            Graph::empty(2),
            None,
            None,
        )
        .unwrap();
        let (g1, g2) = swap_construct(&plan).unwrap();
        assert!(verify_pi_isomorphism(&plan, &g1, &g2));
        let swapped = [(0, 3), (1, 2)];
        let bad = SwapInvolution::from_pairs(&[0, 1], &[2, 3], &swapped).unwrap();
        assert!(SwapPlan::new(base, vec![0, 1], vec![2, 3], Some(bad), Graph::path(2), Graph::empty(2), None, None)
            .is_err());
        let forged = SwapPlan { pi: SwapInvolution::from_pairs(&[0, 1], &[2, 3], &swapped).unwrap(), ..plan };
        assert!(!verify_pi_isomorphism(&forged, &g1, &g2));
    }

    #[test]
    fn plan_validation() {
        let base = Graph::from_edges(4, [(0, 1)]).unwrap();
        let e2 = Graph::empty(2);
        assert_eq!(
            SwapPlan::new(base, vec![0, 1], vec![2, 3], None, e2.clone(), e2.clone(), None, None),
            Err(Error::NonEmptyInducedSet("V1"))
        );
        let base = Graph::empty(4);
        assert!(matches!(
            SwapPlan::new(base.clone(), vec![0, 1], vec![2, 3], None, Graph::empty(3), e2.clone(), None, None),
            Err(Error::InvalidPlan(_))
        ));
        let phi = VertexMap::new(vec![0, 2], 4).unwrap();
        assert!(matches!(
            SwapPlan::new(base.clone(), vec![0, 1], vec![2, 3], None, e2.clone(), e2.clone(), Some(phi), None),
            Err(Error::InvalidPlan(_))
        ));
        assert_eq!(
            SwapPlan::new(base, vec![0, 1], vec![1, 3], None, e2.clone(), e2, None, None),
            Err(Error::SetsOverlap(1))
        );
    }

    #[test]
    fn ordering_validation() {
        assert!(full_ordering(4, &[0, 1, 2]).is_err());
        assert!(full_ordering(4, &[0, 0]).is_err());
        assert!(full_ordering(4, &[0, 9]).is_err());
        assert_eq!(full_ordering(4, &[3, 1]).unwrap(), vec![3, 1, 0, 2]);
    }

    #[test]
    fn distance_preservation_needs_connected() {
        let g = Graph::empty(4);
        assert_eq!(verify_distance_preservation(&g, &g, &[0], &[1]), Err(Error::Disconnected));
    }
}
