//! Cousin vertex sets and the set-swapping involution.
//!
//! For disjoint `U, W` of equal size `m`, with `X` the vertices outside both:
//!
//! * **relaxed cousins**: within `U` (and within `W`) all members have the
//!   same neighbors in `X`;
//! * **co-degree cousins**: relaxed, and `|N(u) \ W| = |N(w) \ U|` for every
//!   `u ∈ U`, `w ∈ W`;
//! * **cousins**: within `U` (and within `W`) all members have the same
//!   distance to every vertex of `X`;
//! * **co-transmission cousins**: cousins, and every member of `U ∪ W` has
//!   the same distance sum over `X`.
//!
//! Equal distances include equal adjacency, so cousins are always relaxed
//! cousins.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceTable, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CousinFlag {
    Relaxed,
    CoDegree,
    Cousins,
    CoTransmission,
}

impl CousinFlag {
    pub fn name(self) -> &'static str {
        match self {
            CousinFlag::Relaxed => "relaxed",
            CousinFlag::CoDegree => "co-degree",
            CousinFlag::Cousins => "cousins",
            CousinFlag::CoTransmission => "co-transmission",
        }
    }
}

impl fmt::Display for CousinFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CousinFlag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "relaxed" => Ok(CousinFlag::Relaxed),
            "co-degree" | "codegree" => Ok(CousinFlag::CoDegree),
            "cousins" => Ok(CousinFlag::Cousins),
            "co-transmission" | "cotransmission" => Ok(CousinFlag::CoTransmission),
            other => Err(Error::InvalidArgument(format!("unknown cousin flag {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub flag: CousinFlag,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CousinClassification {
    pub m: usize,
    pub relaxed: bool,
    pub co_degree: bool,
    /// `None` when the graph is disconnected: distances are not all finite.
    pub cousins: Option<bool>,
    pub co_transmission: Option<bool>,
    /// No edges between the two sets, so each set is a set of twins.
    pub twin_sets: bool,
    /// One entry for every flag that does not hold.
    pub witnesses: Vec<Witness>,
}

impl CousinClassification {
    pub fn holds(&self, flag: CousinFlag) -> bool {
        match flag {
            CousinFlag::Relaxed => self.relaxed,
            CousinFlag::CoDegree => self.co_degree,
            CousinFlag::Cousins => self.cousins == Some(true),
            CousinFlag::CoTransmission => self.co_transmission == Some(true),
        }
    }

    pub fn witness(&self, flag: CousinFlag) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.flag == flag)
    }
}

pub(crate) fn validate_sets(n: usize, v1: &[usize], v2: &[usize]) -> Result<()> {
    if v1.is_empty() || v2.is_empty() {
        return Err(Error::EmptySet);
    }
    if v1.len() != v2.len() {
        return Err(Error::SizeMismatch(v1.len(), v2.len()));
    }
    let mut side = vec![0u8; n];
    for (tag, set) in [(1u8, v1), (2u8, v2)] {
        for &v in set {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            match side[v] {
                0 => side[v] = tag,
                t if t == tag => return Err(Error::DuplicateVertex(v)),
                _ => return Err(Error::SetsOverlap(v)),
            }
        }
    }
    Ok(())
}

/// Classifies many set pairs of one graph against a shared distance table.
pub struct Classifier<'a> {
    g: &'a Graph,
    dist: DistanceTable,
    connected: bool,
}

impl<'a> Classifier<'a> {
    pub fn new(g: &'a Graph) -> Self {
        let dist = all_pairs_distances(g);
        let connected = dist.is_connected();
        Classifier { g, dist, connected }
    }

    pub fn classify(&self, v1: &[usize], v2: &[usize]) -> Result<CousinClassification> {
        let n = self.g.order();
        validate_sets(n, v1, v2)?;
        let mut inside = vec![false; n];
        for &v in v1.iter().chain(v2) {
            inside[v] = true;
        }
        let outside: Vec<usize> = (0..n).filter(|&v| !inside[v]).collect();
        let mut witnesses = Vec::new();

        let relaxed = match self.uneven(v1, v2, &outside, |a, x| self.g.has_edge(a, x)) {
            None => true,
            Some((a, b, x)) => {
                witnesses.push(Witness {
                    flag: CousinFlag::Relaxed,
                    detail: format!("vertex {x} distinguishes {a} and {b} by adjacency"),
                });
                false
            }
        };

        let co_degree = if relaxed {
            let ext = |a: usize, other: &[usize]| {
                self.g.neighbors(a).filter(|x| !other.contains(x)).count()
            };
            let d1 = ext(v1[0], v2);
            let bad1 = v1.iter().find(|&&u| ext(u, v2) != d1);
            let bad2 = v2.iter().find(|&&w| ext(w, v1) != d1);
            match (bad1, bad2) {
                (None, None) => true,
                (Some(&u), _) => {
                    witnesses.push(Witness {
                        flag: CousinFlag::CoDegree,
                        detail: format!("|N({u}) \\ V2| = {} but |N({}) \\ V2| = {d1}", ext(u, v2), v1[0]),
                    });
                    false
                }
                (None, Some(&w)) => {
                    witnesses.push(Witness {
                        flag: CousinFlag::CoDegree,
                        detail: format!("|N({w}) \\ V1| = {} but |N({}) \\ V2| = {d1}", ext(w, v1), v1[0]),
                    });
                    false
                }
            }
        } else {
            witnesses.push(Witness {
                flag: CousinFlag::CoDegree,
                detail: "sets are not relaxed cousins".into(),
            });
            false
        };

        let (cousins, co_transmission) = if !self.connected {
            for flag in [CousinFlag::Cousins, CousinFlag::CoTransmission] {
                witnesses.push(Witness {
                    flag,
                    detail: "not evaluable: graph is disconnected".into(),
                });
            }
            (None, None)
        } else {
            let cousins = match self.uneven(v1, v2, &outside, |a, x| self.dist.raw(a, x)) {
                None => true,
                Some((a, b, x)) => {
                    witnesses.push(Witness {
                        flag: CousinFlag::Cousins,
                        detail: format!(
                            "dist({a}, {x}) = {} but dist({b}, {x}) = {}",
                            self.dist.raw(a, x),
                            self.dist.raw(b, x)
                        ),
                    });
                    false
                }
            };
            let co_transmission = if cousins {
                let sum = |a: usize| -> u64 { outside.iter().map(|&x| u64::from(self.dist.raw(a, x))).sum() };
                let s1 = sum(v1[0]);
                let s2 = sum(v2[0]);
                if s1 == s2 {
                    true
                } else {
                    witnesses.push(Witness {
                        flag: CousinFlag::CoTransmission,
                        detail: format!(
                            "outside distance sum {s1} from {} differs from {s2} from {}",
                            v1[0], v2[0]
                        ),
                    });
                    false
                }
            } else {
                witnesses.push(Witness {
                    flag: CousinFlag::CoTransmission,
                    detail: "sets are not cousins".into(),
                });
                false
            };
            (Some(cousins), Some(co_transmission))
        };

        let twin_sets = v1.iter().all(|&u| v2.iter().all(|&w| !self.g.has_edge(u, w)));
        Ok(CousinClassification {
            m: v1.len(),
            relaxed,
            co_degree,
            cousins,
            co_transmission,
            twin_sets,
            witnesses,
        })
    }

    /// First `(a, b, x)` with `a, b` in the same set and `key(a, x) != key(b, x)`.
    fn uneven<K: PartialEq>(
        &self,
        v1: &[usize],
        v2: &[usize],
        outside: &[usize],
        key: impl Fn(usize, usize) -> K,
    ) -> Option<(usize, usize, usize)> {
        for set in [v1, v2] {
            let a = set[0];
            for &b in &set[1..] {
                for &x in outside {
                    if key(a, x) != key(b, x) {
                        return Some((a, b, x));
                    }
                }
            }
        }
        None
    }
}

pub fn classify_pair(g: &Graph, v1: &[usize], v2: &[usize]) -> Result<CousinClassification> {
    Classifier::new(g).classify(v1, v2)
}

pub const MAX_ENUM_SET: usize = 5;
pub const MAX_ENUM_ORDER: usize = 16;

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..n {
            if n - v < k - current.len() {
                break;
            }
            current.push(v);
            rec(v + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// All unordered pairs of disjoint `m`-subsets satisfying `require`, as
/// `(V1, V2)` with `V1 < V2` lexicographically, in lexicographic order.
pub fn enumerate_cousin_pairs(
    g: &Graph,
    m: usize,
    require: CousinFlag,
) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    if m == 0 {
        return Err(Error::EmptySet);
    }
    if m > MAX_ENUM_SET {
        return Err(Error::SizeGuard {
            what: "cousin set size",
            value: m,
            limit: MAX_ENUM_SET,
        });
    }
    if g.order() > MAX_ENUM_ORDER {
        return Err(Error::SizeGuard {
            what: "cousin search graph order",
            value: g.order(),
            limit: MAX_ENUM_ORDER,
        });
    }
    let classifier = Classifier::new(g);
    let subsets = combinations(g.order(), m);
    let mut out = Vec::new();
    for (i, a) in subsets.iter().enumerate() {
        for b in &subsets[i + 1..] {
            if a.iter().any(|v| b.contains(v)) {
                continue;
            }
            if classifier.classify(a, b)?.holds(require) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(out)
}

/// An involution on `V1 ∪ V2` exchanging the two sets, stored as the pairs
/// `(v, π(v))` with `v ∈ V1`, in the order of `V1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SwapInvolution {
    pairs: Vec<(usize, usize)>,
}

impl SwapInvolution {
    /// Builds `π` from unordered pairs; each pair must join one vertex of
    /// `v1` with one of `v2`, covering both sets exactly once.
    pub fn from_pairs(v1: &[usize], v2: &[usize], pairs: &[(usize, usize)]) -> Result<Self> {
        if v1.len() != v2.len() {
            return Err(Error::SizeMismatch(v1.len(), v2.len()));
        }
        let mut image = vec![None; v1.len()];
        let mut hit = vec![false; v2.len()];
        let bad = |msg: String| Error::InvalidInvolution(msg);
        for &(a, b) in pairs {
            let (x, y) = match (v1.iter().position(|&v| v == a), v2.iter().position(|&v| v == b)) {
                (Some(i), Some(j)) => (i, j),
                _ => match (v1.iter().position(|&v| v == b), v2.iter().position(|&v| v == a)) {
                    (Some(i), Some(j)) => (i, j),
                    _ => return Err(bad(format!("pair ({a}, {b}) does not join V1 to V2"))),
                },
            };
            if image[x].is_some() {
                return Err(bad(format!("vertex {} of V1 is paired twice", v1[x])));
            }
            if std::mem::replace(&mut hit[y], true) {
                return Err(bad(format!("vertex {} of V2 is paired twice", v2[y])));
            }
            image[x] = Some(v2[y]);
        }
        let pairs = v1
            .iter()
            .zip(image)
            .map(|(&a, b)| b.map(|b| (a, b)).ok_or_else(|| bad(format!("vertex {a} is unpaired"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(SwapInvolution { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `π(v)`, or `v` itself for vertices outside `V1 ∪ V2`.
    pub fn apply(&self, v: usize) -> usize {
        for &(a, b) in &self.pairs {
            if v == a {
                return b;
            }
            if v == b {
                return a;
            }
        }
        v
    }

    /// `π` extended by the identity to a permutation of `0..n`.
    pub fn as_permutation(&self, n: usize) -> Vec<usize> {
        (0..n).map(|v| self.apply(v)).collect()
    }

    /// Checks that `π` exchanges exactly `v1` and `v2`.
    pub fn check_swaps(&self, v1: &[usize], v2: &[usize]) -> Result<()> {
        let rebuilt = SwapInvolution::from_pairs(v1, v2, &self.pairs)?;
        if rebuilt.pairs.len() != v1.len() {
            return Err(Error::InvalidInvolution("does not cover V1".into()));
        }
        Ok(())
    }
}

/// Searches for `π` exchanging `V1` and `V2` that is an automorphism of
/// `G[V1 ∪ V2]`; both `G[V1]` and `G[V2]` must be edgeless.
///
/// Candidates `σ: V1 → V2` are tried with `σ(V1[i]) = V2[m−1−p(i)]` for `p`
/// running through the permutations of `0..m` in lexicographic order. The
/// first candidate is therefore the reflection `V1[i] ↦ V2[m−1−i]`, and a
/// labeling that already follows that convention comes back unchanged.
pub fn find_involution(g: &Graph, v1: &[usize], v2: &[usize]) -> Result<Option<SwapInvolution>> {
    validate_sets(g.order(), v1, v2)?;
    for (name, set) in [("V1", v1), ("V2", v2)] {
        for (i, &a) in set.iter().enumerate() {
            if set[i + 1..].iter().any(|&b| g.has_edge(a, b)) {
                return Err(Error::NonEmptyInducedSet(name));
            }
        }
    }
    let m = v1.len();
    let mut sigma = vec![usize::MAX; m];
    let mut used = vec![false; m];

    fn extend(
        g: &Graph,
        v1: &[usize],
        v2: &[usize],
        i: usize,
        sigma: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let m = v1.len();
        if i == m {
            return true;
        }
        for p in 0..m {
            if used[p] {
                continue;
            }
            let target = v2[m - 1 - p];
            sigma[i] = target;
            // π maps the edge {V1[i], σ(V1[j])} to {σ(V1[i]), V1[j]}.
            let consistent = (0..=i).all(|j| g.has_edge(v1[i], sigma[j]) == g.has_edge(v1[j], target));
            if consistent {
                used[p] = true;
                if extend(g, v1, v2, i + 1, sigma, used) {
                    return true;
                }
                used[p] = false;
            }
        }
        sigma[i] = usize::MAX;
        false
    }

    if !extend(g, v1, v2, 0, &mut sigma, &mut used) {
        return Ok(None);
    }
    Ok(Some(SwapInvolution {
        pairs: v1.iter().copied().zip(sigma).collect(),
    }))
}

/// Orders `V1 ∪ V2` as `[v1_1, …, v1_m, v2_1, …, v2_m]` with
/// `π(v1_i) = v2_{m−i+1}`, the labeling under which `π` acts on the matrix
/// block as reflection across the anti-diagonal.
pub fn canonical_swap_order(v1: &[usize], v2: &[usize], pi: &SwapInvolution) -> Result<Vec<usize>> {
    pi.check_swaps(v1, v2)?;
    let mut order = v1.to_vec();
    order.extend(v1.iter().rev().map(|&v| pi.apply(v)));
    Ok(order)
}
