//! Uniform hypergraphs with 1-based vertex indices.

use crate::error::{Error, Result};
use crate::modlin::ModMatrix;

/// An `m`-uniform hypergraph on vertices `1..=n`.
///
/// Edges are strictly increasing vertex lists and the edge list is kept in
/// lexicographic order, so two hypergraphs with the same edge set compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    uniformity: usize,
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Validates and canonicalizes an edge list.
    ///
    /// Edge positions in errors are 1-based positions in `edges` as given.
    pub fn new(uniformity: usize, vertex_count: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if uniformity < 2 {
            return Err(Error::InvalidUniformity(uniformity));
        }
        if vertex_count < uniformity {
            return Err(Error::TooFewVertices { vertices: vertex_count, uniformity });
        }

        let mut keyed = Vec::with_capacity(edges.len());
        for (pos, mut edge) in edges.into_iter().enumerate() {
            let edge_no = pos + 1;
            if edge.len() != uniformity {
                return Err(Error::EdgeSize { edge: edge_no, expected: uniformity, found: edge.len() });
            }
            if let Some(&v) = edge.iter().find(|&&v| v == 0 || v > vertex_count) {
                return Err(Error::VertexOutOfRange { edge: edge_no, vertex: v, vertex_count });
            }
            edge.sort_unstable();
            if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::RepeatedVertex { edge: edge_no, vertex: w[0] });
            }
            keyed.push((edge, edge_no));
        }

        keyed.sort();
        if let Some(w) = keyed.windows(2).find(|w| w[0].0 == w[1].0) {
            let (first, edge) = (w[0].1.min(w[1].1), w[0].1.max(w[1].1));
            return Err(Error::DuplicateEdge { edge, first });
        }

        Ok(Self { uniformity, vertex_count, edges: keyed.into_iter().map(|(e, _)| e).collect() })
    }

    pub fn uniformity(&self) -> usize {
        self.uniformity
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order, each sorted ascending.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// True iff every pair of vertices is joined by a walk.
    ///
    /// A vertex in no edge joins no walk, so any isolated vertex disconnects `G`.
    pub fn is_connected(&self) -> bool {
        let mut dsu = DisjointSets::new(self.vertex_count);
        for edge in &self.edges {
            for w in edge.windows(2) {
                dsu.union(w[0] - 1, w[1] - 1);
            }
        }
        let root = dsu.find(0);
        (1..self.vertex_count).all(|v| dsu.find(v) == root)
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let mut entries = vec![vec![0u8; self.vertex_count]; self.edges.len()];
        for (row, edge) in entries.iter_mut().zip(&self.edges) {
            for &v in edge {
                row[v - 1] = 1;
            }
        }
        IncidenceMatrix { cols: self.vertex_count, entries }
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }
}

/// Edge-by-vertex 0/1 matrix `B_G`. Row `e`, column `v-1` is 1 iff `v ∈ e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    cols: usize,
    entries: Vec<Vec<u8>>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Vec<u8>] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.entries[row][col]
    }

    /// The same matrix viewed over `Z_modulus`.
    pub fn to_mod(&self, modulus: u64) -> Result<ModMatrix> {
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(|&b| u64::from(b) % modulus.max(1)).collect())
            .collect();
        ModMatrix::with_cols(modulus, self.cols, rows)
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
