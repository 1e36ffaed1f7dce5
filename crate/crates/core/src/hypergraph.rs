//! Hypergraph representation, validation and the plain-text edge-list format.
//!
//! Vertex indices are 1-based at every external boundary (constructor input,
//! text format, reports) and 0-based inside the crate.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Options accepted by [`Hypergraph::build_with`].
#[derive(Debug, Clone, Copy, Default)]
pub struct BuildOptions {
    /// Accept edges with a single vertex. They add to degrees but contribute
    /// nothing to the Laplacian form.
    pub allow_singletons: bool,
}

/// A finite hypergraph on vertices `0..n` whose edges are distinct vertex sets.
///
/// Edges are stored sorted internally and the edge list itself is kept in
/// lexicographic order, so two hypergraphs with the same edge sets compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

/// Degree data: per-vertex memberships, maximum degree and the edge-size range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    /// Smallest edge size (0 when there are no edges).
    pub s_min: usize,
    /// Largest edge size, which is also the tensor order (0 when there are no edges).
    pub m: usize,
}

impl Hypergraph {
    /// Builds a hypergraph from 1-based edges.
    pub fn build<E, I>(n: usize, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        Self::build_with(n, edges, BuildOptions::default())
    }

    pub fn build_with<E, I>(n: usize, edges: E, options: BuildOptions) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut canonical = Vec::new();
        for (idx, edge) in edges.into_iter().enumerate() {
            let mut e = Vec::new();
            for v in edge {
                if v == 0 || v > n {
                    return Err(Error::EdgeOutOfRange {
                        edge: idx + 1,
                        vertex: v,
                        n,
                    });
                }
                e.push(v - 1);
            }
            canonical.push(e);
        }
        Self::from_zero_based(n, canonical, options)
    }

    /// Validates and canonicalizes 0-based edges.
    pub(crate) fn from_zero_based(
        n: usize,
        edges: Vec<Vec<usize>>,
        options: BuildOptions,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut out = Vec::with_capacity(edges.len());
        for (idx, mut e) in edges.into_iter().enumerate() {
            let label = idx + 1;
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::EdgeOutOfRange {
                    edge: label,
                    vertex: v + 1,
                    n,
                });
            }
            e.sort_unstable();
            if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateVertexInEdge {
                    edge: label,
                    vertex: w[0] + 1,
                });
            }
            let min_size = if options.allow_singletons { 1 } else { 2 };
            if e.len() < min_size {
                return Err(Error::EdgeTooSmall {
                    edge: label,
                    size: e.len(),
                });
            }
            if !seen.insert(e.clone()) {
                return Err(Error::DuplicateEdge { edge: label });
            }
            out.push(e);
        }
        out.sort();
        Ok(Self { n, edges: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as sorted 0-based vertex lists.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Largest edge size `m`, the order of the Laplacian tensor.
    pub fn order(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_edge_size(&self) -> usize {
        self.edges.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees = self.degrees();
        DegreeProfile {
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            degrees,
            s_min: self.min_edge_size(),
            m: self.order(),
        }
    }

    /// Returns the common edge size when every edge has the same size.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    /// Connected components as sorted 0-based vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let incidence = self.incidence();
        let mut label = vec![usize::MAX; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut members = vec![start];
            label[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &ei in &incidence[u] {
                    for &w in &self.edges[ei] {
                        if label[w] == usize::MAX {
                            label[w] = id;
                            members.push(w);
                            queue.push_back(w);
                        }
                    }
                }
            }
            members.sort_unstable();
            comps.push(members);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Edge indices containing each vertex.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (ei, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(ei);
            }
        }
        inc
    }

    /// True when some edge contains every vertex.
    pub fn has_spanning_edge(&self) -> bool {
        self.edges.iter().any(|e| e.len() == self.n)
    }

    /// True when some edge is a proper subset of another.
    pub fn has_nested_edges(&self) -> bool {
        self.edges.iter().enumerate().any(|(i, a)| {
            self.edges.iter().enumerate().any(|(j, b)| {
                i != j && a.len() < b.len() && a.iter().all(|v| b.binary_search(v).is_ok())
            })
        })
    }

    /// Applies a 0-based vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| perm[v]).collect())
            .collect();
        Self::from_zero_based(
            self.n,
            edges,
            BuildOptions {
                allow_singletons: true,
            },
        )
    }

    /// Parses the edge-list text format: the first content line holds `n`, every
    /// further non-empty line one edge of 1-based vertex indices. `#` starts a
    /// comment.
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_with(text, BuildOptions::default())
    }

    pub fn parse_with(text: &str, options: BuildOptions) -> Result<Self> {
        let mut n = None;
        let mut edges = Vec::new();
        let mut edge_lines = Vec::new();
        for (lineno, raw) in text.split('\n').enumerate() {
            let line = lineno + 1;
            let content = raw.strip_suffix('\r').unwrap_or(raw);
            let content = content.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let tokens = content
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Syntax {
                        line,
                        message: format!("expected a non-negative integer, found {t:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            match n {
                None => {
                    if tokens.len() != 1 {
                        return Err(Error::Syntax {
                            line,
                            message: "first line must hold only the vertex count".into(),
                        });
                    }
                    n = Some(tokens[0]);
                }
                Some(_) => {
                    edges.push(tokens);
                    edge_lines.push(line);
                }
            }
        }
        let n = n.ok_or(Error::Syntax {
            line: 1,
            message: "missing vertex count".into(),
        })?;
        Self::build_with(n, edges, options).map_err(|e| {
            let edge = match &e {
                Error::EdgeOutOfRange { edge, .. }
                | Error::DuplicateEdge { edge }
                | Error::EdgeTooSmall { edge, .. }
                | Error::DuplicateVertexInEdge { edge, .. } => *edge,
                _ => return e,
            };
            Error::AtLine {
                line: edge_lines[edge - 1],
                source: Box::new(e),
            }
        })
    }

    /// Serializes to the edge-list format with LF line endings and edges in
    /// lexicographic order.
    pub fn serialize(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for e in &self.edges {
            for (i, v) in e.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                write!(out, "{}", v + 1).unwrap();
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_edges() -> Hypergraph {
        Hypergraph::build(5, [vec![1, 2, 3], vec![3, 4, 5]]).unwrap()
    }

    #[test]
    fn single_edge_profile() {
        let h = Hypergraph::build(3, [vec![1, 2, 3]]).unwrap();
        let p = h.degree_profile();
        assert_eq!(p.degrees, vec![1, 1, 1]);
        assert_eq!((p.m, p.s_min, p.max_degree), (3, 3, 1));
    }

    #[test]
    fn two_edge_profile() {
        let p = two_edges().degree_profile();
        assert_eq!(p.degrees, vec![1, 1, 2, 1, 1]);
        assert_eq!((p.m, p.s_min, p.max_degree), (3, 3, 2));
    }

    #[test]
    fn mixed_sizes() {
        let h = Hypergraph::build(4, [vec![1, 2], vec![1, 3], vec![1, 2, 3, 4]]).unwrap();
        let p = h.degree_profile();
        assert_eq!((p.s_min, p.m), (2, 4));
        assert_eq!(p.degrees.iter().sum::<usize>(), 8);
    }

    #[test]
    fn build_errors() {
        assert!(matches!(
            Hypergraph::build(2, [vec![1, 2], vec![2, 1]]),
            Err(Error::DuplicateEdge { edge: 2 })
        ));
        assert!(matches!(
            Hypergraph::build(3, [vec![1, 2, 9]]),
            Err(Error::EdgeOutOfRange { vertex: 9, .. })
        ));
        assert!(matches!(
            Hypergraph::build(3, [vec![2]]),
            Err(Error::EdgeTooSmall { size: 1, .. })
        ));
        assert!(matches!(
            Hypergraph::build(3, [vec![2, 2, 3]]),
            Err(Error::DuplicateVertexInEdge { vertex: 2, .. })
        ));
        assert!(matches!(
            Hypergraph::build(0, Vec::<Vec<usize>>::new()),
            Err(Error::NoVertices)
        ));
    }

    #[test]
    fn singletons_behind_flag() {
        let h = Hypergraph::build_with(
            3,
            [vec![2], vec![1, 3]],
            BuildOptions {
                allow_singletons: true,
            },
        )
        .unwrap();
        assert_eq!(h.min_edge_size(), 1);
    }

    #[test]
    fn canonical_order() {
        let a = Hypergraph::build(5, [vec![5, 4, 3], vec![3, 1, 2]]).unwrap();
        assert_eq!(a, two_edges());
        assert_eq!(a.edges()[0], vec![0, 1, 2]);
    }

    #[test]
    fn connectivity() {
        assert!(two_edges().is_connected());
        assert!(!Hypergraph::build(4, [vec![1, 2], vec![3, 4]])
            .unwrap()
            .is_connected());
        let isolated = Hypergraph::build(3, [vec![1, 2]]).unwrap();
        assert!(!isolated.is_connected());
        assert_eq!(isolated.components(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn parse_examples() {
        let h = Hypergraph::parse("3\n1 2 3\n").unwrap();
        assert_eq!(h, Hypergraph::build(3, [vec![1, 2, 3]]).unwrap());
        assert_eq!(Hypergraph::parse("5\n1 2 3\n3 4 5\n").unwrap(), two_edges());
        match Hypergraph::parse("3\n1 2\n1 2 9\n") {
            Err(Error::AtLine { line: 3, source }) => {
                assert!(matches!(
                    *source,
                    Error::EdgeOutOfRange {
                        edge: 2,
                        vertex: 9,
                        n: 3
                    }
                ))
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parse_comments_and_crlf() {
        let text = "# header\r\n5 # vertices\r\n\r\n1 2 3\r\n3 4 5 # second\r\n";
        assert_eq!(Hypergraph::parse(text).unwrap(), two_edges());
    }

    #[test]
    fn parse_syntax_errors_carry_line() {
        match Hypergraph::parse("4\n1 2\n1 x 3\n") {
            Err(Error::Syntax { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Hypergraph::parse("4 5\n"),
            Err(Error::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            Hypergraph::parse("# nothing\n"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn serialize_is_sorted_lf() {
        let h = Hypergraph::build(5, [vec![5, 3, 4], vec![2, 1, 3]]).unwrap();
        assert_eq!(h.serialize(), "5\n1 2 3\n3 4 5\n");
    }

    #[test]
    fn nested_and_spanning() {
        let h = Hypergraph::build(3, [vec![1, 2, 3], vec![1, 2]]).unwrap();
        assert!(h.has_spanning_edge());
        assert!(h.has_nested_edges());
        assert!(!two_edges().has_nested_edges());
        assert!(!two_edges().has_spanning_edge());
    }
}
