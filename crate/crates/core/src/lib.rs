//! Biharmonic distance between the vertices of a connected graph.
//!
//! `d_B(u,v)^2 = (delta_u - delta_v)^T (L+)^2 (delta_u - delta_v)` where `L+`
//! is the pseudoinverse of the graph Laplacian. The crate computes it four
//! independent ways (spectral sum, pseudoinverse entries, a principal minor
//! of `L^2`, and the minimum-norm solution of `L x = delta_u - delta_v`),
//! along with the biharmonic and Kirchhoff indices, the eigenvalue bounds
//! and index inequalities they satisfy, and closed forms for complete
//! graphs, hypercubes, complements, Cartesian products and abelian Cayley
//! graphs.
//!
//! ```
//! use biharmonic::graph::{Family, Graph};
//! use biharmonic::spectral::{biharmonic_spectral, SpectralCache};
//!
//! let g = Graph::generate(Family::K4Minus).unwrap();
//! let cache = SpectralCache::build(&g).unwrap();
//! let d = biharmonic_spectral(&cache, 0, 2).unwrap();
//! assert!((d - 2f64.sqrt() / 4.0).abs() < 1e-12);
//! ```

pub mod closed_form;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod numfmt;
pub mod random;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Family, Graph};
pub use spectral::SpectralCache;
