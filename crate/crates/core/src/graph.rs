//! Immutable undirected simple graphs with typed vertices.
//!
//! Vertices are identified structurally: mesh vertices by their axial
//! lattice coordinate, inserted vertices by the face they subdivide and a
//! slot in {0,1,2}. Canonical order is mesh vertices first (sorted by
//! coordinate), then face vertices (sorted by face key, then slot); every
//! build of the same graph therefore enumerates vertices and edges in the
//! same order.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Axial coordinate on the triangular lattice. The implicit third cube
/// coordinate is `-a-b`; the six lattice neighbours of `(a, b)` are the
/// offsets in [`LATTICE_DIRECTIONS`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeCoord {
    pub a: i32,
    pub b: i32,
}

impl LatticeCoord {
    pub fn new(a: i32, b: i32) -> Self {
        LatticeCoord { a, b }
    }

    pub fn offset(self, da: i32, db: i32) -> Self {
        LatticeCoord::new(self.a + da, self.b + db)
    }
}

impl fmt::Display for LatticeCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// The six undirected lattice directions, as directed offsets.
pub const LATTICE_DIRECTIONS: [(i32, i32); 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Up,
    Down,
}

/// A unit triangular face, identified by its anchor coordinate and
/// orientation. An `Up` face has corners {(a,b), (a+1,b), (a,b+1)}, a
/// `Down` face {(a+1,b), (a,b+1), (a+1,b+1)}. The anchor of a `Down` face
/// is not itself a corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceKey {
    pub anchor: LatticeCoord,
    pub orientation: Orientation,
}

impl FaceKey {
    pub fn new(anchor: LatticeCoord, orientation: Orientation) -> Self {
        FaceKey { anchor, orientation }
    }

    /// The three corner coordinates in ascending order.
    pub fn corners(&self) -> [LatticeCoord; 3] {
        let LatticeCoord { a, b } = self.anchor;
        match self.orientation {
            Orientation::Up => [
                LatticeCoord::new(a, b),
                LatticeCoord::new(a, b + 1),
                LatticeCoord::new(a + 1, b),
            ],
            Orientation::Down => [
                LatticeCoord::new(a, b + 1),
                LatticeCoord::new(a + 1, b),
                LatticeCoord::new(a + 1, b + 1),
            ],
        }
    }
}

impl fmt::Display for FaceKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = match self.orientation {
            Orientation::Up => "up",
            Orientation::Down => "down",
        };
        write!(f, "[{}, {}]", self.anchor, o)
    }
}

/// Vertex identity. Mesh and face vertices are disjoint namespaces; the
/// derived `Ord` puts all mesh vertices before all face vertices, which is
/// the canonical iteration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexId {
    Mesh(LatticeCoord),
    Face { face: FaceKey, slot: u8 },
}

impl VertexId {
    pub fn mesh(a: i32, b: i32) -> Self {
        VertexId::Mesh(LatticeCoord::new(a, b))
    }

    pub fn is_mesh(&self) -> bool {
        matches!(self, VertexId::Mesh(_))
    }

    pub fn is_face(&self) -> bool {
        matches!(self, VertexId::Face { .. })
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexId::Mesh(c) => write!(f, "mesh{c}"),
            VertexId::Face { face, slot } => write!(f, "face{face}:{slot}"),
        }
    }
}

/// Order and size of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
}

/// Accumulates vertices and normalized edges, then freezes them into a
/// [`Graph`]. Rejects self-loops; duplicate insertions are idempotent.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    vertices: Vec<VertexId>,
    edges: Vec<(VertexId, VertexId)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.vertices.push(v);
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(u.to_string()));
        }
        self.vertices.push(u);
        self.vertices.push(v);
        self.edges.push(if u < v { (u, v) } else { (v, u) });
        Ok(())
    }

    pub fn build(mut self) -> Graph {
        self.vertices.sort_unstable();
        self.vertices.dedup();
        self.edges.sort_unstable();
        self.edges.dedup();
        let verts = self.vertices;
        let id_of = |v: &VertexId| verts.binary_search(v).expect("endpoint was added") as u32;
        let mut adj = vec![Vec::new(); verts.len()];
        for (u, v) in &self.edges {
            let (iu, iv) = (id_of(u), id_of(v));
            adj[iu as usize].push(iv);
            adj[iv as usize].push(iu);
        }
        for list in &mut adj {
            list.sort_unstable();
            debug_assert!(list.windows(2).all(|w| w[0] < w[1]));
        }
        let m = self.edges.len();
        debug_assert_eq!(adj.iter().map(Vec::len).sum::<usize>(), 2 * m);
        Graph {
            verts,
            adj,
            m,
            degree_sums: OnceLock::new(),
        }
    }
}

/// Immutable undirected simple graph. Safe to share across threads; the
/// neighbour-degree-sum cache is computed once on first use.
#[derive(Debug)]
pub struct Graph {
    verts: Vec<VertexId>,
    adj: Vec<Vec<u32>>,
    m: usize,
    degree_sums: OnceLock<Vec<u64>>,
}

impl Graph {
    /// Graph on `n` vertices labelled 0..n from an explicit edge list.
    /// Label `i` becomes the mesh vertex `(i, 0)`, so canonical order
    /// coincides with label order.
    pub fn from_integer_edges(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        let mut b = GraphBuilder::new();
        for i in 0..n {
            b.add_vertex(VertexId::mesh(i as i32, 0));
        }
        for &(u, v) in edges {
            for x in [u, v] {
                if x as usize >= n {
                    return Err(Error::VertexIndexOutOfRange { index: x, n });
                }
            }
            b.add_edge(VertexId::mesh(u as i32, 0), VertexId::mesh(v as i32, 0))?;
        }
        Ok(b.build())
    }

    pub fn summary(&self) -> GraphSummary {
        GraphSummary {
            n: self.verts.len(),
            m: self.m,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// Vertices in canonical order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.verts
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.index_of(v).is_some()
    }

    /// Dense index of a vertex in canonical order.
    pub fn index_of(&self, v: &VertexId) -> Option<usize> {
        self.verts.binary_search(v).ok()
    }

    fn require(&self, v: &VertexId) -> Result<usize> {
        self.index_of(v)
            .ok_or_else(|| Error::VertexNotInGraph(v.to_string()))
    }

    pub fn degree(&self, v: &VertexId) -> Result<usize> {
        Ok(self.adj[self.require(v)?].len())
    }

    /// Sum of the degrees of the neighbours of `v`.
    pub fn neighbor_degree_sum(&self, v: &VertexId) -> Result<u64> {
        Ok(self.degree_sums()[self.require(v)?])
    }

    pub fn neighbors(&self, v: &VertexId) -> Result<impl Iterator<Item = &VertexId> + '_> {
        let i = self.require(v)?;
        Ok(self.adj[i].iter().map(move |&j| &self.verts[j as usize]))
    }

    pub fn is_adjacent(&self, u: &VertexId, v: &VertexId) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => self.adj[i].binary_search(&(j as u32)).is_ok(),
            _ => false,
        }
    }

    pub fn degree_by_index(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    /// Degrees in canonical order.
    pub fn degree_vec(&self) -> Vec<u32> {
        self.adj.iter().map(|l| l.len() as u32).collect()
    }

    /// Neighbour-degree sums in canonical order (cached).
    pub fn degree_sums(&self) -> &[u64] {
        self.degree_sums.get_or_init(|| {
            self.adj
                .iter()
                .map(|l| l.iter().map(|&j| self.adj[j as usize].len() as u64).sum())
                .collect()
        })
    }

    /// Every undirected edge exactly once, as dense index pairs `(i, j)`
    /// with `i < j`, in ascending lexicographic order.
    pub fn edges_dense(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, l)| {
            let i = i as u32;
            l.iter().copied().filter(move |&j| j > i).map(move |j| (i, j))
        })
    }

    /// Every undirected edge exactly once with endpoints in canonical
    /// order, sorted.
    pub fn edge_list(&self) -> Vec<(VertexId, VertexId)> {
        self.edges_dense()
            .map(|(i, j)| (self.verts[i as usize], self.verts[j as usize]))
            .collect()
    }

    /// Map degree -> number of vertices of that degree.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for l in &self.adj {
            *h.entry(l.len()).or_insert(0) += 1;
        }
        h
    }
}
