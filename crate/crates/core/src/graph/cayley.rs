use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A Cayley graph of the abelian group `Z_{m_1} x ... x Z_{m_r}`.
///
/// Group elements are residue tuples. Vertex indices use a mixed-radix
/// encoding with the first component least significant, so for `(Z_2)^d`
/// with the standard basis the vertex index agrees with the hypercube
/// generator's labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleySpec {
    orders: Vec<usize>,
    connection_set: BTreeSet<Vec<usize>>,
}

impl CayleySpec {
    /// Validates the group orders and connection set. The connection set is
    /// treated as a set; repeated elements collapse.
    pub fn new<I>(orders: Vec<usize>, connection_set: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        if orders.is_empty() {
            return Err(Error::InvalidCayley("no cyclic factors".into()));
        }
        if let Some(&m) = orders.iter().find(|&&m| m == 0) {
            return Err(Error::InvalidCayley(format!("cyclic order {m} must be positive")));
        }
        orders
            .iter()
            .try_fold(1usize, |acc, &m| acc.checked_mul(m))
            .ok_or_else(|| Error::InvalidCayley("group order overflows".into()))?;

        let spec = CayleySpec {
            orders,
            connection_set: connection_set.into_iter().collect(),
        };
        for s in &spec.connection_set {
            spec.check_element(s)?;
            if s.iter().all(|&x| x == 0) {
                return Err(Error::InvalidCayley("connection set contains the identity".into()));
            }
            if !spec.connection_set.contains(&spec.inverse(s)) {
                return Err(Error::InvalidCayley(format!(
                    "connection set not closed under inverses: {s:?} has no inverse"
                )));
            }
        }
        Ok(spec)
    }

    /// `Z_m` with connection set given as residues.
    pub fn cyclic(m: usize, residues: &[usize]) -> Result<Self> {
        CayleySpec::new(vec![m], residues.iter().map(|&r| vec![r]))
    }

    /// `(Z_2)^d` with the standard basis, i.e. the hypercube `Q_d`.
    pub fn hypercube(d: usize) -> Result<Self> {
        CayleySpec::new(
            vec![2; d],
            (0..d).map(|i| {
                let mut e = vec![0; d];
                e[i] = 1;
                e
            }),
        )
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn connection_set(&self) -> impl Iterator<Item = &[usize]> {
        self.connection_set.iter().map(Vec::as_slice)
    }

    pub fn degree(&self) -> usize {
        self.connection_set.len()
    }

    pub fn group_order(&self) -> usize {
        self.orders.iter().product()
    }

    pub fn check_element(&self, g: &[usize]) -> Result<()> {
        if g.len() != self.orders.len() {
            return Err(Error::InvalidCayley(format!(
                "element {g:?} has {} components, group has {}",
                g.len(),
                self.orders.len()
            )));
        }
        if let Some((x, m)) = g.iter().zip(&self.orders).find(|(x, m)| *x >= *m) {
            return Err(Error::InvalidCayley(format!("residue {x} not below order {m}")));
        }
        Ok(())
    }

    pub fn inverse(&self, g: &[usize]) -> Vec<usize> {
        g.iter().zip(&self.orders).map(|(&x, &m)| (m - x) % m).collect()
    }

    pub fn add(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        a.iter()
            .zip(b)
            .zip(&self.orders)
            .map(|((&x, &y), &m)| (x + y) % m)
            .collect()
    }

    /// Mixed-radix index, first component least significant.
    pub fn encode(&self, g: &[usize]) -> usize {
        g.iter()
            .zip(&self.orders)
            .rev()
            .fold(0, |acc, (&x, &m)| acc * m + x)
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        self.orders
            .iter()
            .map(|&m| {
                let x = index % m;
                index /= m;
                x
            })
            .collect()
    }
}

/// Vertices are group elements; `u ~ v` iff `v - u` lies in the connection set.
pub fn cayley_graph(spec: &CayleySpec) -> Graph {
    let n = spec.group_order();
    let mut g = Graph::empty(n);
    for u in 0..n {
        let gu = spec.decode(u);
        for s in spec.connection_set() {
            let v = spec.encode(&spec.add(&gu, s));
            if u < v {
                g.edges.insert((u, v));
            }
        }
    }
    g
}
