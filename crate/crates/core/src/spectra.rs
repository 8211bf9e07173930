//! The six graph matrices, the generalized characteristic polynomial, and
//! exact cospectrality.
//!
//! | kind | matrix |
//! |------|--------|
//! | `adjacency` | `A` |
//! | `laplacian` | `L = D − A` |
//! | `signless` | `\|L\| = D + A` |
//! | `normalized` | `𝓛 = D^{−1/2} L D^{−1/2}` (via the generalized polynomial) |
//! | `distance` | `𝒟`, shortest-path lengths |
//! | `distance-laplacian` | `𝒟ᴸ = T − 𝒟`, `T` the diagonal of transmissions |
//! | `generalized` | `φ_G(λ, r) = det(λI − A + rD)` |
//!
//! Comparisons between polynomials obtained by different routes are made
//! after monic normalization: `φ_G(−λ, 1)` equals `det(λI − L)` only up to
//! the factor `(−1)ⁿ`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, Graph};
use crate::linalg::{charpoly, BiPoly, ExactMatrix, Rational, UniPoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
    NormalizedLaplacian,
    Distance,
    DistanceLaplacian,
    Generalized,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 7] = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
        MatrixKind::NormalizedLaplacian,
        MatrixKind::Distance,
        MatrixKind::DistanceLaplacian,
        MatrixKind::Generalized,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Laplacian => "laplacian",
            MatrixKind::SignlessLaplacian => "signless",
            MatrixKind::NormalizedLaplacian => "normalized",
            MatrixKind::Distance => "distance",
            MatrixKind::DistanceLaplacian => "distance-laplacian",
            MatrixKind::Generalized => "generalized",
        }
    }

    pub fn needs_connected(self) -> bool {
        matches!(self, MatrixKind::Distance | MatrixKind::DistanceLaplacian)
    }

    pub fn needs_min_degree(self) -> bool {
        self == MatrixKind::NormalizedLaplacian
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let kind = match s.trim().to_ascii_lowercase().as_str() {
            "adjacency" | "a" => MatrixKind::Adjacency,
            "laplacian" | "l" => MatrixKind::Laplacian,
            "signless" | "signless-laplacian" | "q" => MatrixKind::SignlessLaplacian,
            "normalized" | "normalized-laplacian" => MatrixKind::NormalizedLaplacian,
            "distance" | "d" => MatrixKind::Distance,
            "distance-laplacian" | "dl" => MatrixKind::DistanceLaplacian,
            "generalized" | "gcp" => MatrixKind::Generalized,
            other => return Err(Error::InvalidArgument(format!("unknown matrix kind {other:?}"))),
        };
        Ok(kind)
    }
}

impl Serialize for MatrixKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

fn int(v: impl Into<i64>) -> Rational {
    Rational::from_integer(v.into().into())
}

fn degree_diagonal(g: &Graph) -> Vec<Rational> {
    (0..g.order()).map(|v| int(g.degree(v) as i64)).collect()
}

fn adjacency(g: &Graph) -> ExactMatrix {
    ExactMatrix::from_fn(g.order(), |i, j| if g.has_edge(i, j) { int(1) } else { int(0) })
}

/// Integer-entried matrix of the given kind. The normalized Laplacian has
/// irrational entries in general and the generalized kind is a polynomial,
/// so both are rejected here.
pub fn build_matrix(g: &Graph, kind: MatrixKind) -> Result<ExactMatrix> {
    let n = g.order();
    match kind {
        MatrixKind::Adjacency => Ok(adjacency(g)),
        MatrixKind::Laplacian | MatrixKind::SignlessLaplacian => {
            let sign = if kind == MatrixKind::Laplacian { -1 } else { 1 };
            Ok(ExactMatrix::from_fn(n, |i, j| {
                if i == j {
                    int(g.degree(i) as i64)
                } else if g.has_edge(i, j) {
                    int(sign)
                } else {
                    int(0)
                }
            }))
        }
        MatrixKind::Distance | MatrixKind::DistanceLaplacian => {
            let d = all_pairs_distances(g);
            if !d.is_connected() {
                return Err(Error::Disconnected);
            }
            let dist = |i: usize, j: usize| int(d.raw(i, j));
            if kind == MatrixKind::Distance {
                return Ok(ExactMatrix::from_fn(n, dist));
            }
            Ok(ExactMatrix::from_fn(n, |i, j| {
                if i == j {
                    int(d.transmission(i).expect("connected") as i64)
                } else {
                    -dist(i, j)
                }
            }))
        }
        MatrixKind::NormalizedLaplacian | MatrixKind::Generalized => Err(Error::Unsupported(
            format!("{kind} has no rational matrix form; use spectral_polynomial"),
        )),
    }
}

/// `N_G(λ, r) = λI − A + rD` at a numeric point.
pub fn generalized_matrix(g: &Graph, lambda: &Rational, r: &Rational) -> ExactMatrix {
    let n = g.order();
    ExactMatrix::from_fn(n, |i, j| {
        if i == j {
            lambda + r * int(g.degree(i) as i64)
        } else if g.has_edge(i, j) {
            -Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// `φ_G(λ, r) = det(λI − A + rD)`.
///
/// For fixed `r` this is the characteristic polynomial of `A − rD`. Each
/// `λ`-coefficient is a polynomial in `r` of degree at most `n`, so it is
/// recovered exactly by interpolating through `r = 0, 1, …, n`.
pub fn generalized_charpoly(g: &Graph) -> BiPoly {
    let n = g.order();
    let a = adjacency(g);
    let d = ExactMatrix::diagonal(degree_diagonal(g));
    let samples: Vec<(Rational, UniPoly)> = (0..=n)
        .map(|r| {
            let r = int(r as i64);
            let shifted = &a - &d.scale(&r);
            let p = charpoly(&shifted);
            (r, p)
        })
        .collect();
    let lambda_coeffs: Vec<UniPoly> = (0..=n)
        .map(|i| {
            let points: Vec<(Rational, Rational)> =
                samples.iter().map(|(r, p)| (r.clone(), p.coeff(i))).collect();
            UniPoly::interpolate(&points)
        })
        .collect();
    BiPoly::from_lambda_coeffs(&lambda_coeffs)
}

fn first_isolated(g: &Graph) -> Option<usize> {
    (0..g.order()).find(|&v| g.degree(v) == 0)
}

/// Characteristic polynomial of `𝓛` from `((−1)ⁿ / det D)·φ_G(0, 1 − λ)`.
pub fn normalized_charpoly(g: &Graph) -> Result<UniPoly> {
    if let Some(v) = first_isolated(g) {
        return Err(Error::IsolatedVertex(v));
    }
    normalized_from_generalized(&generalized_charpoly(g), g)
}

fn normalized_from_generalized(phi: &BiPoly, g: &Graph) -> Result<UniPoly> {
    if let Some(v) = first_isolated(g) {
        return Err(Error::IsolatedVertex(v));
    }
    let det_d: Rational = degree_diagonal(g).into_iter().product();
    let sign = if g.order().is_multiple_of(2) { int(1) } else { int(-1) };
    let in_r = phi.slice(Var::Lambda, &Rational::zero());
    let in_lambda = in_r.substitute_linear(&int(-1), &int(1));
    Ok(in_lambda.scale(&(sign / det_d)).monic())
}

/// The polynomial whose equality defines cospectrality for a kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SpectralPolynomial {
    Uni(UniPoly),
    Bi(BiPoly),
}

impl fmt::Display for SpectralPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralPolynomial::Uni(p) => p.fmt(f),
            SpectralPolynomial::Bi(p) => p.fmt(f),
        }
    }
}

pub fn spectral_polynomial(g: &Graph, kind: MatrixKind) -> Result<SpectralPolynomial> {
    Ok(match kind {
        MatrixKind::Generalized => SpectralPolynomial::Bi(generalized_charpoly(g)),
        MatrixKind::NormalizedLaplacian => SpectralPolynomial::Uni(normalized_charpoly(g)?),
        _ => SpectralPolynomial::Uni(charpoly(&build_matrix(g, kind)?)),
    })
}

pub fn cospectral(g1: &Graph, g2: &Graph, kind: MatrixKind) -> Result<bool> {
    if g1.order() != g2.order() {
        return Err(Error::DimensionMismatch(g1.order(), g2.order()));
    }
    Ok(spectral_polynomial(g1, kind)? == spectral_polynomial(g2, kind)?)
}

/// Outcome of checking the specializations of `φ_G` against directly
/// computed characteristic polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    /// `φ(λ, 0) = p_A(λ)`.
    pub adjacency: bool,
    /// `φ(−λ, 1) = p_L(λ)` up to monic normalization.
    pub laplacian: bool,
    /// `φ(λ, −1) = p_{|L|}(λ)`.
    pub signless: bool,
    /// `((−1)ⁿ/det D)·φ(0, 1−λ) = p_𝓛(λ)`, checked against the rational
    /// similar matrix `D⁻¹L`; `None` when a vertex is isolated.
    pub normalized: Option<bool>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.adjacency && self.laplacian && self.signless && self.normalized.unwrap_or(true)
    }
}

/// `D⁻¹L`, similar to `𝓛` via `D^{1/2}` and rational. Requires `δ ≥ 1`.
pub fn random_walk_laplacian(g: &Graph) -> Result<ExactMatrix> {
    if let Some(v) = first_isolated(g) {
        return Err(Error::IsolatedVertex(v));
    }
    let lap = build_matrix(g, MatrixKind::Laplacian)?;
    Ok(ExactMatrix::from_fn(g.order(), |i, j| {
        lap.get(i, j) / int(g.degree(i) as i64)
    }))
}

pub fn derived_identities_check(g: &Graph) -> IdentityReport {
    let phi = generalized_charpoly(g);
    let direct = |kind| charpoly(&build_matrix(g, kind).expect("adjacency-type kinds always build"));
    let adjacency = phi.slice(Var::R, &int(0)) == direct(MatrixKind::Adjacency);
    let laplacian = phi
        .slice(Var::R, &int(1))
        .substitute_linear(&int(-1), &int(0))
        .monic()
        == direct(MatrixKind::Laplacian);
    let signless = phi.slice(Var::R, &int(-1)).monic() == direct(MatrixKind::SignlessLaplacian);
    let normalized = random_walk_laplacian(g)
        .ok()
        .map(|rw| normalized_from_generalized(&phi, g).ok() == Some(charpoly(&rw)));
    IdentityReport {
        adjacency,
        laplacian,
        signless,
        normalized,
    }
}
