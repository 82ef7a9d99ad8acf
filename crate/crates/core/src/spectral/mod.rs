//! Biharmonic distance and the indices derived from the Laplacian spectrum.
//!
//! Everything here assumes a connected graph: the Laplacian then has a
//! one-dimensional kernel spanned by the all-ones vector, and
//!
//! ```text
//! L+   = sum_{k>=2} z_k z_k^T / lambda_k
//! L^2+ = sum_{k>=2} z_k z_k^T / lambda_k^2
//! d_B(u,v)^2 = L^2+_uu + L^2+_vv - 2 L^2+_uv
//! ```

mod checks;
mod distance;
mod index;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{eigendecompose, EigenDecomposition, SymmetricMatrix};

pub use checks::{
    bounds_report, check_brk, check_edge_monotonicity, check_minimum_index, BoundsReport,
    BrkCheck, EdgeMonotonicity, MinimumIndexCheck, ATTAINMENT_TOL, ORTHOGONALITY_TOL,
};
pub use distance::{
    all_methods, biharmonic_determinant, biharmonic_minnorm, biharmonic_pinv_entries,
    biharmonic_spectral, DeterminantMethod, MethodReport, MethodSuite, MinNormMethod,
};
pub use index::{
    biharmonic_index_pairwise, biharmonic_index_spectral, distance_matrix,
    kirchhoff_index, kirchhoff_index_pairwise, resistance_distance, spanning_tree_count,
    spanning_trees_exhaustive, SpanningTreeCount,
};

/// Laplacian, its eigendecomposition and both pseudoinverses for one
/// connected graph. Immutable once built.
#[derive(Debug, Clone)]
pub struct SpectralCache {
    graph: Graph,
    laplacian: SymmetricMatrix,
    eig: EigenDecomposition,
    pinv: SymmetricMatrix,
    pinv2: SymmetricMatrix,
}

impl SpectralCache {
    /// Fails with [`Error::Disconnected`] if a traversal misses a vertex or
    /// the second-smallest eigenvalue is numerically zero.
    pub fn build(g: &Graph) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let laplacian = g.laplacian();
        let eig = eigendecompose(&laplacian)?;
        if eig.n() >= 2 && eig.value(1) <= eig.grouping_tolerance() {
            return Err(Error::Disconnected);
        }
        // the smallest eigenvalue is the kernel and is left out of every sum
        let pinv = eig.spectral_sum(1, |l| 1.0 / l);
        let pinv2 = eig.spectral_sum(1, |l| 1.0 / (l * l));
        Ok(SpectralCache {
            graph: g.clone(),
            laplacian,
            eig,
            pinv,
            pinv2,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn laplacian(&self) -> &SymmetricMatrix {
        &self.laplacian
    }

    pub fn eig(&self) -> &EigenDecomposition {
        &self.eig
    }

    /// `L+`.
    pub fn pinv(&self) -> &SymmetricMatrix {
        &self.pinv
    }

    /// `L^2+ = (L+)^2`.
    pub fn pinv2(&self) -> &SymmetricMatrix {
        &self.pinv2
    }

    /// Algebraic connectivity `lambda_2`.
    pub fn lambda_2(&self) -> f64 {
        self.eig.value(1)
    }

    pub fn lambda_max(&self) -> f64 {
        self.eig.max_value()
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.graph.check_vertex(u)?;
        self.graph.check_vertex(v)
    }
}
