use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::CayleySpec;

/// Characters of `Z_{m_1} x ... x Z_{m_r}` and the adjacency eigenvalues
/// they induce on a Cayley graph.
///
/// Character `j` (a residue tuple, indexed with the same mixed-radix
/// encoding as group elements) maps `v` to `exp(2 pi i sum_k j_k v_k / m_k)`.
/// Index 0 is the trivial character.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    spec: CayleySpec,
    /// `characters[chi][g]`.
    characters: Vec<Vec<Complex64>>,
    /// `alpha_chi = sum_{s in S} chi(s)`, real because `S = -S`.
    adjacency_eigenvalues: Vec<f64>,
}

impl CharacterTable {
    pub fn new(spec: &CayleySpec) -> Result<Self> {
        let order = spec.group_order();
        let elements: Vec<Vec<usize>> = (0..order).map(|i| spec.decode(i)).collect();
        let characters: Vec<Vec<Complex64>> = elements
            .iter()
            .map(|j| elements.iter().map(|g| character(spec.orders(), j, g)).collect())
            .collect();

        let mut adjacency_eigenvalues = Vec::with_capacity(order);
        for (j, row) in elements.iter().zip(&characters) {
            let alpha: Complex64 = spec.connection_set().map(|s| row[spec.encode(s)]).sum();
            if alpha.im.abs() > 1e-10 {
                return Err(Error::InvalidCayley(format!(
                    "character {j:?} has non-real eigenvalue {alpha}"
                )));
            }
            adjacency_eigenvalues.push(alpha.re);
        }
        Ok(CharacterTable {
            spec: spec.clone(),
            characters,
            adjacency_eigenvalues,
        })
    }

    pub fn group_order(&self) -> usize {
        self.characters.len()
    }

    pub fn character(&self, chi: usize, g: usize) -> Complex64 {
        self.characters[chi][g]
    }

    pub fn characters(&self) -> &[Vec<Complex64>] {
        &self.characters
    }

    pub fn adjacency_eigenvalues(&self) -> &[f64] {
        &self.adjacency_eigenvalues
    }

    /// Laplacian eigenvalues `|S| - alpha_chi`.
    pub fn laplacian_eigenvalues(&self) -> Vec<f64> {
        let degree = self.spec.degree() as f64;
        self.adjacency_eigenvalues.iter().map(|a| degree - a).collect()
    }

    /// The connection set generates the group iff every nontrivial
    /// character has `|S| - alpha_chi > 0`.
    pub fn is_connected(&self) -> bool {
        self.laplacian_eigenvalues().iter().skip(1).all(|&mu| mu > 1e-9)
    }

    /// Distance between vertex indices `u` and `v`:
    ///
    /// ```text
    /// d_B^2 = (1/N) sum_{chi != 1} (|S| - alpha_chi)^-2 |chi(u) - chi(v)|^2
    /// ```
    ///
    /// The `1/N` normalizes the characters to unit eigenvectors; the squared
    /// modulus pairs each complex character with its conjugate.
    pub fn distance(&self, u: usize, v: usize) -> Result<f64> {
        let order = self.group_order();
        for x in [u, v] {
            if x >= order {
                return Err(Error::VertexOutOfRange { vertex: x, n: order });
            }
        }
        if !self.is_connected() {
            return Err(Error::NonGenerating);
        }
        if u == v {
            return Ok(0.0);
        }
        let sum: f64 = self
            .laplacian_eigenvalues()
            .iter()
            .zip(&self.characters)
            .skip(1)
            .map(|(mu, row)| (row[u] - row[v]).norm_sqr() / (mu * mu))
            .sum();
        Ok((sum / order as f64).sqrt())
    }
}

fn character(orders: &[usize], j: &[usize], g: &[usize]) -> Complex64 {
    let turns: f64 = orders
        .iter()
        .zip(j.iter().zip(g))
        .map(|(&m, (&a, &b))| ((a * b) % m) as f64 / m as f64)
        .sum();
    Complex64::from_polar(1.0, TAU * turns.fract())
}

/// Distance between group elements `u` and `v` of the Cayley graph.
pub fn cayley_distance(spec: &CayleySpec, u: &[usize], v: &[usize]) -> Result<f64> {
    spec.check_element(u)?;
    spec.check_element(v)?;
    CharacterTable::new(spec)?.distance(spec.encode(u), spec.encode(v))
}
