//! Simple undirected graphs on contiguous vertex labels `0..n`, the
//! generators for the families used throughout the crate, and the graph
//! operations whose spectra have closed forms (complement, Cartesian
//! product, abelian Cayley graphs).

pub mod cayley;
pub mod edge_list;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::SymmetricMatrix;

pub use cayley::{cayley_graph, CayleySpec};
pub use edge_list::{parse_edge_list, read_edge_list, write_edge_list, EdgeListError};

/// A simple undirected graph.
///
/// Edges are stored as normalized pairs `(u, v)` with `u < v`, so the
/// adjacency relation is symmetric by construction and iteration order is
/// lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

fn normalize(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// Builds a graph from an edge iterator, rejecting self-loops,
    /// out-of-range endpoints and duplicates.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&normalize(u, v))
    }

    pub fn check_vertex(&self, vertex: usize) -> Result<()> {
        if vertex < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex, n: self.n })
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.edges.insert(normalize(u, v)) {
            return Err(Error::EdgeExists(u.min(v), u.max(v)));
        }
        Ok(())
    }

    /// Copy of this graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Pairs `{u, v}` with `u < v` that are not edges.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.edges.contains(&(u, v)) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Combinatorial connectivity: breadth-first search from vertex 0.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.n
    }

    /// Laplacian `D - A`.
    pub fn laplacian(&self) -> SymmetricMatrix {
        let mut l = SymmetricMatrix::zeros(self.n);
        for &(u, v) in &self.edges {
            l.add(u, u, 1.0);
            l.add(v, v, 1.0);
            l.set(u, v, -1.0);
        }
        l
    }

    /// Edge `{u,v}` present in the result iff absent here, for all `u != v`.
    pub fn complement(&self) -> Graph {
        Graph {
            n: self.n,
            edges: self.non_edges().into_iter().collect(),
        }
    }

    /// Cartesian product `self □ other`; vertex `(a, b)` is indexed `a * other.n() + b`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let n2 = other.n;
        let mut edges = BTreeSet::new();
        for a in 0..self.n {
            for &(b, d) in &other.edges {
                edges.insert(normalize(a * n2 + b, a * n2 + d));
            }
        }
        for &(a, c) in &self.edges {
            for b in 0..n2 {
                edges.insert(normalize(a * n2 + b, c * n2 + b));
            }
        }
        Graph {
            n: self.n * n2,
            edges,
        }
    }

    pub fn generate(family: Family) -> Result<Graph> {
        family.validate()?;
        let g = match family {
            Family::Complete(n) => {
                let mut g = Graph::empty(n);
                for u in 0..n {
                    for v in u + 1..n {
                        g.edges.insert((u, v));
                    }
                }
                g
            }
            Family::Path(n) => Graph {
                n,
                edges: (1..n).map(|v| (v - 1, v)).collect(),
            },
            Family::Cycle(n) => {
                let mut g = Graph::generate(Family::Path(n))?;
                g.edges.insert((0, n - 1));
                g
            }
            Family::Wheel(n) => {
                // hub 0, rim 1..n-1 in cycle order
                let mut g = Graph::empty(n);
                for v in 1..n {
                    g.edges.insert((0, v));
                    let next = if v + 1 < n { v + 1 } else { 1 };
                    g.edges.insert(normalize(v, next));
                }
                g
            }
            Family::Hypercube(d) => {
                let n = 1usize << d;
                let mut g = Graph::empty(n);
                for x in 0..n {
                    for bit in 0..d {
                        let y = x ^ (1 << bit);
                        if x < y {
                            g.edges.insert((x, y));
                        }
                    }
                }
                g
            }
            Family::K4Minus => {
                let mut g = Graph::generate(Family::Complete(4))?;
                g.edges.remove(&(1, 3));
                g
            }
        };
        Ok(g)
    }
}

/// Largest hypercube dimension the generator accepts.
pub const MAX_HYPERCUBE_DIM: usize = 20;

/// Graph families with a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    /// Hub 0 joined to a rim cycle `1..n-1`.
    Wheel(usize),
    /// `2^d` vertices; bit `i` of a vertex index is coordinate `i + 1`.
    Hypercube(usize),
    /// `K_4` minus the edge `{1, 3}`.
    K4Minus,
}

impl Family {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        match *self {
            Family::Complete(n) | Family::Path(n) if n < 1 => {
                bad(format!("{} needs n >= 1, got {n}", self.name()))
            }
            Family::Cycle(n) if n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            Family::Wheel(n) if n < 4 => bad(format!("wheel needs n >= 4, got {n}")),
            Family::Hypercube(d) if !(1..=MAX_HYPERCUBE_DIM).contains(&d) => bad(format!(
                "hypercube needs 1 <= d <= {MAX_HYPERCUBE_DIM}, got {d}"
            )),
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Complete(_) => "complete",
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Wheel(_) => "wheel",
            Family::Hypercube(_) => "hypercube",
            Family::K4Minus => "k4minus",
        }
    }

    /// Parses a family name with its parameter list, e.g. `("hypercube", ["3"])`.
    pub fn parse<S: AsRef<str>>(name: &str, params: &[S]) -> Result<Family> {
        let one = || -> Result<usize> {
            match params {
                [p] => p.as_ref().trim().parse::<usize>().map_err(|_| {
                    Error::InvalidFamily(format!("{name}: '{}' is not a count", p.as_ref()))
                }),
                _ => Err(Error::InvalidFamily(format!(
                    "{name} takes exactly one parameter, got {}",
                    params.len()
                ))),
            }
        };
        let family = match name.to_ascii_lowercase().as_str() {
            "complete" => Family::Complete(one()?),
            "path" => Family::Path(one()?),
            "cycle" => Family::Cycle(one()?),
            "wheel" => Family::Wheel(one()?),
            "hypercube" => Family::Hypercube(one()?),
            "k4minus" => {
                if !params.is_empty() {
                    return Err(Error::InvalidFamily(
                        "k4minus takes no parameters".to_string(),
                    ));
                }
                Family::K4Minus
            }
            other => return Err(Error::InvalidFamily(format!("unknown family '{other}'"))),
        };
        family.validate()?;
        Ok(family)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Complete(n) | Family::Path(n) | Family::Cycle(n) | Family::Wheel(n) => {
                write!(f, "{} {n}", self.name())
            }
            Family::Hypercube(d) => write!(f, "hypercube {d}"),
            Family::K4Minus => f.write_str("k4minus"),
        }
    }
}

#[cfg(test)]
impl Graph {
    /// Image of this graph under `v -> perm[v]`.
    pub(crate) fn relabel(&self, perm: &[usize]) -> Graph {
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_set(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn generator_sizes() {
        let k4 = Graph::generate(Family::Complete(4)).unwrap();
        assert_eq!((k4.n(), k4.m()), (4, 6));
        let q3 = Graph::generate(Family::Hypercube(3)).unwrap();
        assert_eq!((q3.n(), q3.m()), (8, 12));
        let w5 = Graph::generate(Family::Wheel(5)).unwrap();
        assert_eq!(
            edge_set(&w5),
            vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3), (3, 4)]
        );
        assert_eq!(Graph::generate(Family::Path(1)).unwrap().m(), 0);
    }

    #[test]
    fn hypercube_2_is_c4() {
        let q2 = Graph::generate(Family::Hypercube(2)).unwrap();
        assert_eq!(edge_set(&q2), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn k4minus_degrees() {
        let g = Graph::generate(Family::K4Minus).unwrap();
        assert_eq!(g.degrees(), vec![3, 2, 3, 2]);
        assert!(!g.has_edge(1, 3));
    }

    #[test]
    fn family_minimums() {
        assert!(Graph::generate(Family::Complete(0)).is_err());
        assert!(Graph::generate(Family::Cycle(2)).is_err());
        assert!(Graph::generate(Family::Wheel(3)).is_err());
        assert!(Graph::generate(Family::Hypercube(0)).is_err());
    }

    #[test]
    fn family_parse() {
        assert_eq!(Family::parse("hypercube", &["3"]).unwrap(), Family::Hypercube(3));
        assert_eq!(Family::parse::<&str>("k4minus", &[]).unwrap(), Family::K4Minus);
        assert!(Family::parse("wheel", &["3"]).is_err());
        assert!(Family::parse("complete", &["x"]).is_err());
        assert!(Family::parse("complete", &["2", "3"]).is_err());
        assert!(Family::parse("star", &["3"]).is_err());
    }

    #[test]
    fn complement_cases() {
        let k4 = Graph::generate(Family::Complete(4)).unwrap();
        assert_eq!(k4.complement(), Graph::empty(4));

        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        // C4 as 0-2-1-3-0
        assert_eq!(edge_set(&two_k2.complement()), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);

        let p4 = Graph::generate(Family::Path(4)).unwrap();
        let c = p4.complement();
        let mut deg = c.degrees();
        deg.sort();
        assert_eq!(deg, vec![1, 1, 2, 2]);
        assert_eq!(c.m(), 3);
        assert!(c.is_connected());
    }

    #[test]
    fn products() {
        let k2 = Graph::generate(Family::Complete(2)).unwrap();
        let sq = k2.cartesian_product(&k2);
        assert_eq!(sq, Graph::generate(Family::Cycle(4)).unwrap().relabel(&[0, 1, 3, 2]));
        let q3 = sq.cartesian_product(&k2);
        assert_eq!(q3, Graph::generate(Family::Hypercube(3)).unwrap());

        let grid = Graph::generate(Family::Path(2))
            .unwrap()
            .cartesian_product(&Graph::generate(Family::Path(3)).unwrap());
        assert_eq!((grid.n(), grid.m()), (6, 7));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::generate(Family::Path(3)).unwrap().is_connected());
        assert!(!Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn add_edge_errors() {
        let mut g = Graph::empty(3);
        assert_eq!(g.add_edge(0, 0), Err(Error::SelfLoop(0)));
        assert!(matches!(g.add_edge(0, 3), Err(Error::VertexOutOfRange { .. })));
        g.add_edge(1, 0).unwrap();
        assert_eq!(g.add_edge(0, 1), Err(Error::EdgeExists(0, 1)));
    }
}
