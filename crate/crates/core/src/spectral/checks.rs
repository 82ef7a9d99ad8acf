use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{biharmonic_index_spectral, biharmonic_spectral, kirchhoff_index, SpectralCache};

/// A bound counts as attained when the distance is this close to it.
pub const ATTAINMENT_TOL: f64 = 1e-9;

/// `delta_uv` counts as orthogonal to `z_k` when `|z_k(u) - z_k(v)|` is below this.
pub const ORTHOGONALITY_TOL: f64 = 1e-8;

/// Slack on the index inequalities and equality flags.
const INDEX_TOL: f64 = 1e-10;

/// The eigenvalue bounds `sqrt(2)/lambda_n <= d_B(u,v) <= sqrt(2)/lambda_2`
/// for one pair, with attainment decided two independent ways.
///
/// `sigma_2` holds the eigen-indices `k >= 2` whose eigenvalue lies strictly
/// above `lambda_2`; `sigma_n` those strictly below `lambda_n` (0-based, the
/// kernel index 0 never appears). The upper bound is attained iff
/// `delta_u - delta_v` is orthogonal to every eigenvector in `sigma_2`, and
/// the lower bound likewise for `sigma_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsReport {
    pub pair: (usize, usize),
    pub lower: f64,
    pub upper: f64,
    pub value: f64,
    /// `|value - lower| <= ATTAINMENT_TOL`.
    pub lower_attained: bool,
    pub upper_attained: bool,
    /// Eigenspace test over `sigma_n`.
    pub lower_orthogonal: bool,
    /// Eigenspace test over `sigma_2`.
    pub upper_orthogonal: bool,
    pub sigma_2: Vec<usize>,
    pub sigma_n: Vec<usize>,
}

impl BoundsReport {
    pub fn within_bounds(&self) -> bool {
        self.lower - 1e-12 <= self.value && self.value <= self.upper + 1e-12
    }

    /// Both attainment determinations agree for both bounds.
    pub fn determinations_agree(&self) -> bool {
        self.lower_attained == self.lower_orthogonal && self.upper_attained == self.upper_orthogonal
    }
}

pub fn bounds_report(cache: &SpectralCache, u: usize, v: usize) -> Result<BoundsReport> {
    cache.check_pair(u, v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let eig = cache.eig();
    let n = eig.n();
    let value = biharmonic_spectral(cache, u, v)?;
    let (lambda_2, lambda_n) = (eig.value(1), eig.value(n - 1));
    let lower = 2f64.sqrt() / lambda_n;
    let upper = 2f64.sqrt() / lambda_2;

    let group_2 = eig.group_of(1);
    let group_n = eig.group_of(n - 1);
    let sigma_2: Vec<usize> = (1..n).filter(|k| !group_2.contains(k)).collect();
    let sigma_n: Vec<usize> = (1..n).filter(|k| !group_n.contains(k)).collect();
    let orthogonal = |set: &[usize]| {
        set.iter().all(|&k| {
            let z = eig.vector(k);
            (z[u] - z[v]).abs() <= ORTHOGONALITY_TOL
        })
    };

    Ok(BoundsReport {
        pair: (u, v),
        lower,
        upper,
        value,
        lower_attained: (value - lower).abs() <= ATTAINMENT_TOL,
        upper_attained: (value - upper).abs() <= ATTAINMENT_TOL,
        lower_orthogonal: orthogonal(&sigma_n),
        upper_orthogonal: orthogonal(&sigma_2),
        sigma_2,
        sigma_n,
    })
}

/// `B(G) >= Kf(G)^2 / (n(n-1))`, with equality exactly for complete graphs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BrkCheck {
    pub b: f64,
    pub kf: f64,
    pub rhs: f64,
    pub holds: bool,
    pub equality: bool,
}

pub fn check_brk(cache: &SpectralCache) -> Result<BrkCheck> {
    let n = cache.n();
    if n < 2 {
        return Err(Error::TooFewVertices { required: 2, n });
    }
    let b = biharmonic_index_spectral(cache);
    let kf = kirchhoff_index(cache);
    let rhs = kf * kf / (n * (n - 1)) as f64;
    Ok(BrkCheck {
        b,
        kf,
        rhs,
        holds: b >= rhs - INDEX_TOL,
        equality: (b - rhs).abs() <= INDEX_TOL,
    })
}

/// `B(G) >= (n-1)/n`, with equality exactly for complete graphs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinimumIndexCheck {
    pub b: f64,
    pub floor: f64,
    pub holds: bool,
    pub equality: bool,
}

pub fn check_minimum_index(cache: &SpectralCache) -> MinimumIndexCheck {
    let n = cache.n() as f64;
    let b = biharmonic_index_spectral(cache);
    let floor = (n - 1.0) / n;
    MinimumIndexCheck {
        b,
        floor,
        holds: b >= floor - INDEX_TOL,
        equality: (b - floor).abs() <= INDEX_TOL,
    }
}

/// Biharmonic index before and after adding one edge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeMonotonicity {
    pub edge: (usize, usize),
    pub before: f64,
    pub after: f64,
}

impl EdgeMonotonicity {
    /// `after < before` by more than `1e-12`.
    pub fn strictly_decreases(&self) -> bool {
        self.before - self.after > 1e-12
    }
}

pub fn check_edge_monotonicity(g: &Graph, u: usize, v: usize) -> Result<EdgeMonotonicity> {
    let augmented = g.with_edge(u, v)?;
    let before = biharmonic_index_spectral(&SpectralCache::build(g)?);
    let after = biharmonic_index_spectral(&SpectralCache::build(&augmented)?);
    Ok(EdgeMonotonicity {
        edge: (u.min(v), u.max(v)),
        before,
        after,
    })
}
