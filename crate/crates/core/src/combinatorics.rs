//! Exact combinatorial invariants: edge boundaries and the isoperimetric
//! number, clique-expansion distances, and the algebraic connectivity of
//! 2-graphs.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hypergraph::{BuildOptions, Hypergraph};

pub const ISOPERIMETRIC_MAX_N: usize = 24;
pub const DENSE_EIGEN_MAX_N: usize = 2000;

/// A simple undirected graph on `0..n`; pairs stored as `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from 0-based pairs, rejecting loops and repeated pairs.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut set = BTreeSet::new();
        for (idx, (a, b)) in pairs.into_iter().enumerate() {
            let label = idx + 1;
            if a >= n || b >= n {
                return Err(Error::EdgeOutOfRange {
                    edge: label,
                    vertex: a.max(b) + 1,
                    n,
                });
            }
            if a == b {
                return Err(Error::DuplicateVertexInEdge {
                    edge: label,
                    vertex: a + 1,
                });
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::DuplicateEdge { edge: label });
            }
        }
        Ok(Self {
            n,
            edges: set.into_iter().collect(),
        })
    }

    /// Views a 2-uniform hypergraph as a graph.
    pub fn from_hypergraph(h: &Hypergraph) -> Result<Self> {
        if h.edges().iter().any(|e| e.len() != 2) {
            return Err(Error::NotUniform);
        }
        Self::new(h.n(), h.edges().iter().map(|e| (e[0], e[1])))
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::from_zero_based(
            self.n,
            self.edges.iter().map(|&(a, b)| vec![a, b]).collect(),
            BuildOptions::default(),
        )
        .expect("graph edges are valid hyperedges")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        bfs(&self.adjacency(), source)
    }

    pub fn diameter(&self) -> Diameter {
        let adj = self.adjacency();
        let eccentricities: Vec<Option<usize>> = (0..self.n)
            .into_par_iter()
            .map(|s| {
                bfs(&adj, s)
                    .into_iter()
                    .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
            })
            .collect();
        eccentricities
            .into_iter()
            .try_fold(0, |acc, e| e.map(|e| acc.max(e)))
            .map_or(Diameter::Infinite, Diameter::Finite)
    }

    /// Dense Laplacian `D − A`, row-major.
    pub fn laplacian_matrix(&self) -> Vec<f64> {
        let n = self.n;
        let mut l = vec![0.0; n * n];
        for &(a, b) in &self.edges {
            l[a * n + a] += 1.0;
            l[b * n + b] += 1.0;
            l[a * n + b] -= 1.0;
            l[b * n + a] -= 1.0;
        }
        l
    }
}

fn bfs(adj: &[Vec<usize>], source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in &adj[u] {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Maximum pairwise distance, or `Infinite` for disconnected inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => serializer.serialize_u64(*d as u64),
            Diameter::Infinite => serializer.serialize_str("infinite"),
        }
    }
}

/// The 2-graph joining every pair of vertices that share an edge.
pub fn clique_expansion(h: &Hypergraph) -> Graph {
    let mut pairs = BTreeSet::new();
    for e in h.edges() {
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                pairs.insert((a, b));
            }
        }
    }
    Graph {
        n: h.n(),
        edges: pairs.into_iter().collect(),
    }
}

/// Hypergraph diameter under the clique-expansion metric.
pub fn diameter(h: &Hypergraph) -> Diameter {
    clique_expansion(h).diameter()
}

/// Indices of the edges meeting both `subset` (0-based vertices) and its complement.
pub fn boundary(h: &Hypergraph, subset: &[usize]) -> Result<Vec<usize>> {
    let mut inside = vec![false; h.n()];
    for &v in subset {
        *inside.get_mut(v).ok_or(Error::InvalidVertex {
            vertex: v + 1,
            n: h.n(),
        })? = true;
    }
    Ok(h.edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.iter().any(|&v| inside[v]) && e.iter().any(|&v| !inside[v]))
        .map(|(i, _)| i)
        .collect())
}

/// The isoperimetric minimizer `S` with its exact ratio `|∂S| / |S|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    pub value: Ratio<u64>,
    /// 0-based, sorted.
    pub witness: Vec<usize>,
    pub boundary_size: usize,
}

impl CutResult {
    pub fn as_f64(&self) -> f64 {
        *self.value.numer() as f64 / *self.value.denom() as f64
    }
}

impl Serialize for CutResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("CutResult", 5)?;
        st.serialize_field("value", &self.as_f64())?;
        st.serialize_field("numerator", self.value.numer())?;
        st.serialize_field("denominator", self.value.denom())?;
        st.serialize_field(
            "witness",
            &self.witness.iter().map(|v| v + 1).collect::<Vec<_>>(),
        )?;
        st.serialize_field("boundary_size", &self.boundary_size)?;
        st.end()
    }
}

#[derive(Clone, Copy)]
struct Candidate {
    mask: u32,
    boundary: u32,
    size: u32,
}

impl Candidate {
    /// Ratio, then size, then lexicographic order of the sorted vertex list.
    fn cmp(&self, other: &Self) -> Ordering {
        (u64::from(self.boundary) * u64::from(other.size))
            .cmp(&(u64::from(other.boundary) * u64::from(self.size)))
            .then(self.size.cmp(&other.size))
            .then_with(|| mask_vertices(self.mask).cmp(&mask_vertices(other.mask)))
    }
}

fn mask_vertices(mask: u32) -> Vec<usize> {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Exhaustive minimum of `|∂S| / |S|` over `1 ≤ |S| ≤ ⌊n/2⌋`.
///
/// Ties go to the smaller `|S|`, then to the lexicographically first `S`.
pub fn isoperimetric_number(h: &Hypergraph) -> Result<CutResult> {
    let n = h.n();
    if n > ISOPERIMETRIC_MAX_N {
        return Err(Error::InstanceTooLarge {
            what: "exhaustive isoperimetric search",
            detail: format!("n = {n} > {ISOPERIMETRIC_MAX_N}"),
        });
    }
    if h.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    if n < 2 {
        return Err(Error::InvalidConfig(
            "isoperimetric number needs n >= 2".into(),
        ));
    }
    let masks: Vec<u32> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u32, |acc, &v| acc | 1 << v))
        .collect();
    let half = (n / 2) as u32;
    let total: u32 = 1 << n;
    let chunk = 1u32 << 12.min(n);
    let best = (0..total.div_ceil(chunk))
        .into_par_iter()
        .filter_map(|c| {
            let mut best: Option<Candidate> = None;
            for mask in (c * chunk).max(1)..((c + 1) * chunk).min(total) {
                let size = mask.count_ones();
                if size > half {
                    continue;
                }
                let boundary = masks
                    .iter()
                    .filter(|&&em| em & mask != 0 && em & !mask != 0)
                    .count() as u32;
                let cand = Candidate {
                    mask,
                    boundary,
                    size,
                };
                if best.as_ref().is_none_or(|b| cand.cmp(b) == Ordering::Less) {
                    best = Some(cand);
                }
            }
            best
        })
        .reduce_with(|a, b| if b.cmp(&a) == Ordering::Less { b } else { a })
        .expect("n >= 2 admits a singleton");
    Ok(CutResult {
        value: Ratio::new(u64::from(best.boundary), u64::from(best.size)),
        witness: mask_vertices(best.mask),
        boundary_size: best.boundary as usize,
    })
}

/// Eigenvalues of a dense symmetric matrix (row-major, `n × n`) by cyclic
/// Jacobi rotations, sorted ascending.
///
/// Sweeps stop once the off-diagonal Frobenius norm falls below
/// `1e-10 · ‖A‖_F`.
pub fn symmetric_eigenvalues(matrix: &[f64], n: usize) -> Vec<f64> {
    assert_eq!(matrix.len(), n * n, "matrix must be n x n");
    let mut a = matrix.to_vec();
    let norm = a.iter().map(|v| v * v).sum::<f64>().sqrt();
    let threshold = 1e-10 * norm;
    let off = |a: &[f64]| {
        let mut acc = 0.0;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    acc += a[p * n + q] * a[p * n + q];
                }
            }
        }
        acc.sqrt()
    };
    for _sweep in 0..100 {
        if off(&a) <= threshold {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(f64::total_cmp);
    eig
}

/// Second-smallest Laplacian eigenvalue of `g`.
pub fn lambda2(g: &Graph) -> Result<f64> {
    let n = g.n();
    if n > DENSE_EIGEN_MAX_N {
        return Err(Error::InstanceTooLarge {
            what: "dense eigensolver",
            detail: format!("n = {n} > {DENSE_EIGEN_MAX_N}"),
        });
    }
    if n < 2 {
        return Err(Error::InvalidConfig("lambda2 needs n >= 2".into()));
    }
    let eig = symmetric_eigenvalues(&g.laplacian_matrix(), n);
    Ok(eig[1].max(0.0))
}

/// `2n · Σ_{ij∈E} (x_i − x_j)² / Σ_i Σ_j (x_i − x_j)²`.
pub fn fiedler_quotient(g: &Graph, x: &[f64]) -> Result<f64> {
    let n = g.n();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    if x.iter().all(|&v| v == x[0]) {
        return Err(Error::ConstantVector);
    }
    let mean = x.iter().sum::<f64>() / n as f64;
    // Σ_i Σ_j (x_i − x_j)² = 2n Σ_i (x_i − mean)²
    let spread = 2.0 * n as f64 * x.iter().map(|v| (v - mean).powi(2)).sum::<f64>();
    let cut: f64 = g.edges().iter().map(|&(a, b)| (x[a] - x[b]).powi(2)).sum();
    Ok(2.0 * n as f64 * cut / spread)
}
