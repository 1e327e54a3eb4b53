//! Base meshes and the third-type hex-derived networks.
//!
//! The three families are built the same way: generate a triangular-lattice
//! region (hexagon, triangle, or rhombus), then replace every unit
//! triangular face by a planar octahedron — three new vertices per face,
//! wired so that the six vertices of each face induce the octahedron.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{
    FaceKey, Graph, GraphBuilder, LatticeCoord, Orientation, VertexId, LATTICE_DIRECTIONS,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Hdn3,
    Thdn3,
    Rhdn3,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Hdn3, Family::Thdn3, Family::Rhdn3];

    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Hdn3 => "HDN3",
            Family::Thdn3 => "THDN3",
            Family::Rhdn3 => "RHDN3",
        }
    }

    /// Closed-form vertex count at dimension r (valid for r >= 2).
    pub fn vertex_count_formula(&self, r: u32) -> u64 {
        let r = r as u64;
        match self {
            Family::Hdn3 => 21 * r * r - 39 * r + 19,
            Family::Thdn3 => (7 * r * r - 11 * r + 6) / 2,
            Family::Rhdn3 => 7 * r * r - 12 * r + 6,
        }
    }

    /// Closed-form edge count at dimension r (valid for r >= 2).
    pub fn edge_count_formula(&self, r: u32) -> u64 {
        let r = r as u64;
        match self {
            Family::Hdn3 => 63 * r * r - 123 * r + 60,
            Family::Thdn3 => (21 * r * r - 39 * r + 18) / 2,
            Family::Rhdn3 => 21 * r * r - 40 * r + 19,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "HDN3" => Ok(Family::Hdn3),
            "THDN3" => Ok(Family::Thdn3),
            "RHDN3" => Ok(Family::Rhdn3),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyParam {
    pub family: Family,
    pub r: u32,
}

impl FamilyParam {
    pub fn new(family: Family, r: u32) -> Self {
        FamilyParam { family, r }
    }
}

/// Connect every pair of coordinates at lattice distance one.
fn mesh_from_coords(coords: BTreeSet<LatticeCoord>) -> Graph {
    let mut b = GraphBuilder::new();
    for &c in &coords {
        b.add_vertex(VertexId::Mesh(c));
        for (da, db) in LATTICE_DIRECTIONS {
            let w = c.offset(da, db);
            if w > c && coords.contains(&w) {
                b.add_edge(VertexId::Mesh(c), VertexId::Mesh(w))
                    .expect("distinct lattice coordinates");
            }
        }
    }
    b.build()
}

/// Hexagonal mesh of dimension n: all axial coordinates whose cube norm
/// max(|a|, |b|, |a+b|) is at most n-1, with 3n^2 - 3n + 1 vertices.
pub fn build_hx(n: u32) -> Result<Graph> {
    if n < 2 {
        return Err(Error::HexDimensionTooSmall(n));
    }
    let k = (n - 1) as i32;
    let mut coords = BTreeSet::new();
    for a in -k..=k {
        for b in -k..=k {
            if (a + b).abs() <= k {
                coords.insert(LatticeCoord::new(a, b));
            }
        }
    }
    Ok(mesh_from_coords(coords))
}

/// Triangular mesh with r vertices per side: {(a,b) : a,b >= 0, a+b <= r-1},
/// r(r+1)/2 vertices and (r-1)^2 faces.
pub fn build_triangular_mesh(r: u32) -> Result<Graph> {
    if r < 2 {
        return Err(Error::MeshDimensionTooSmall {
            kind: "triangular",
            r,
        });
    }
    let k = (r - 1) as i32;
    let mut coords = BTreeSet::new();
    for a in 0..=k {
        for b in 0..=(k - a) {
            coords.insert(LatticeCoord::new(a, b));
        }
    }
    Ok(mesh_from_coords(coords))
}

/// Rhombic mesh on the r x r block {(a,b) : 0 <= a,b <= r-1}, triangulated
/// by the (+1,-1) lattice diagonal: r^2 vertices and 2(r-1)^2 faces.
pub fn build_rhombus_mesh(r: u32) -> Result<Graph> {
    if r < 2 {
        return Err(Error::MeshDimensionTooSmall { kind: "rhombic", r });
    }
    let k = (r - 1) as i32;
    let mut coords = BTreeSet::new();
    for a in 0..=k {
        for b in 0..=k {
            coords.insert(LatticeCoord::new(a, b));
        }
    }
    Ok(mesh_from_coords(coords))
}

/// All unit triangles of the mesh whose three corners are present and
/// pairwise adjacent (the K3 subgraphs bounding a lattice face), in
/// canonical order.
pub fn enumerate_faces(mesh: &Graph) -> Result<Vec<FaceKey>> {
    if mesh.vertices().iter().any(|v| v.is_face()) {
        return Err(Error::NotAMesh);
    }
    let coords: Vec<LatticeCoord> = mesh
        .vertices()
        .iter()
        .map(|v| match v {
            VertexId::Mesh(c) => *c,
            VertexId::Face { .. } => unreachable!(),
        })
        .collect();
    if coords.is_empty() {
        return Ok(Vec::new());
    }
    let a_min = coords.iter().map(|c| c.a).min().unwrap() - 1;
    let a_max = coords.iter().map(|c| c.a).max().unwrap();
    let b_min = coords.iter().map(|c| c.b).min().unwrap() - 1;
    let b_max = coords.iter().map(|c| c.b).max().unwrap();

    let is_triangle = |key: &FaceKey| {
        let cs = key.corners().map(VertexId::Mesh);
        cs.iter().all(|v| mesh.contains(v))
            && mesh.is_adjacent(&cs[0], &cs[1])
            && mesh.is_adjacent(&cs[0], &cs[2])
            && mesh.is_adjacent(&cs[1], &cs[2])
    };

    let mut faces = Vec::new();
    for a in a_min..=a_max {
        for b in b_min..=b_max {
            let anchor = LatticeCoord::new(a, b);
            for orientation in [Orientation::Up, Orientation::Down] {
                let key = FaceKey::new(anchor, orientation);
                if is_triangle(&key) {
                    faces.push(key);
                }
            }
        }
    }
    faces.sort();
    Ok(faces)
}

/// Replace every unit triangular face by a planar octahedron: three face
/// vertices f0,f1,f2 joined in a triangle, with fi adjacent to both corners
/// cj, j != i. Each face contributes 3 vertices and 9 edges; the corner
/// ci / face-vertex fi pairs of equal slot are the three non-adjacent pairs
/// of the resulting octahedron. A mesh with no faces is returned unchanged.
pub fn octahedral_substitution(mesh: &Graph) -> Result<Graph> {
    let faces = enumerate_faces(mesh)?;
    let mut b = GraphBuilder::new();
    for v in mesh.vertices() {
        b.add_vertex(*v);
    }
    for (u, v) in mesh.edge_list() {
        b.add_edge(u, v)?;
    }
    for key in faces {
        let corners = key.corners().map(VertexId::Mesh);
        let inserted: [VertexId; 3] =
            [0u8, 1, 2].map(|slot| VertexId::Face { face: key, slot });
        for i in 0..3 {
            b.add_edge(inserted[i], inserted[(i + 1) % 3])?;
            for j in 0..3 {
                if i != j {
                    b.add_edge(inserted[i], corners[j])?;
                }
            }
        }
    }
    Ok(b.build())
}

/// Build HDN3(r), THDN3(r) or RHDN3(r) by octahedral substitution on the
/// corresponding base mesh.
pub fn build_family(p: FamilyParam) -> Result<Graph> {
    let mesh = match p.family {
        Family::Hdn3 => build_hx(p.r)?,
        Family::Thdn3 => build_triangular_mesh(p.r)?,
        Family::Rhdn3 => build_rhombus_mesh(p.r)?,
    };
    octahedral_substitution(&mesh)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn hx_dimension_one_does_not_exist() {
        let err = build_hx(1).unwrap_err();
        assert!(err.to_string().contains("does not exist"));
    }

    #[test]
    fn hx_counts() {
        let g = build_hx(2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (7, 12));
        assert_eq!(enumerate_faces(&g).unwrap().len(), 6);

        let g = build_hx(3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (19, 42));
        assert_eq!(enumerate_faces(&g).unwrap().len(), 24);

        for n in 2..=8u32 {
            let g = build_hx(n).unwrap();
            assert_eq!(g.vertex_count() as u64, (3 * n * n - 3 * n + 1) as u64);
        }
    }

    #[test]
    fn triangular_mesh_counts() {
        for (r, n, m, f) in [(2u32, 3, 3, 1usize), (3, 6, 9, 4), (4, 10, 18, 9)] {
            let g = build_triangular_mesh(r).unwrap();
            assert_eq!((g.vertex_count(), g.edge_count()), (n, m), "r={r}");
            assert_eq!(enumerate_faces(&g).unwrap().len(), f, "r={r}");
        }
        assert!(build_triangular_mesh(1).is_err());
    }

    #[test]
    fn rhombus_mesh_counts() {
        for (r, n, m, f) in [(2u32, 4, 5, 2usize), (3, 9, 16, 8), (4, 16, 33, 18)] {
            let g = build_rhombus_mesh(r).unwrap();
            assert_eq!((g.vertex_count(), g.edge_count()), (n, m), "r={r}");
            assert_eq!(enumerate_faces(&g).unwrap().len(), f, "r={r}");
        }
        assert!(build_rhombus_mesh(1).is_err());
    }

    #[test]
    fn substituting_a_single_triangle_yields_the_octahedron() {
        let tri = build_triangular_mesh(2).unwrap();
        let oct = octahedral_substitution(&tri).unwrap();
        assert_eq!((oct.vertex_count(), oct.edge_count()), (6, 12));
        for v in oct.vertices() {
            assert_eq!(oct.degree(v).unwrap(), 4);
        }
    }

    #[test]
    fn substitution_on_a_path_is_identity() {
        let path = Graph::from_integer_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let out = octahedral_substitution(&path).unwrap();
        assert_eq!(out.vertex_count(), 4);
        assert_eq!(out.edge_list(), path.edge_list());
    }

    #[test]
    fn substitution_rejects_non_mesh_input() {
        let oct = build_family(FamilyParam::new(Family::Thdn3, 2)).unwrap();
        assert!(matches!(octahedral_substitution(&oct), Err(Error::NotAMesh)));
    }

    #[test]
    fn hdn3_2_counts() {
        let g = build_family(FamilyParam::new(Family::Hdn3, 2)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (25, 66));
    }

    #[test]
    fn family_counts_match_formulas() {
        for family in Family::ALL {
            for r in 2..=12u32 {
                let g = build_family(FamilyParam::new(family, r)).unwrap();
                assert_eq!(
                    g.vertex_count() as u64,
                    family.vertex_count_formula(r),
                    "{family} r={r} vertices"
                );
                assert_eq!(
                    g.edge_count() as u64,
                    family.edge_count_formula(r),
                    "{family} r={r} edges"
                );
            }
        }
    }

    #[test]
    fn degree_sets_for_r_at_least_4() {
        let expect: [(Family, &[usize]); 3] = [
            (Family::Hdn3, &[4, 7, 10, 18]),
            (Family::Thdn3, &[4, 10, 18]),
            (Family::Rhdn3, &[4, 7, 10, 18]),
        ];
        for (family, degrees) in expect {
            for r in 4..=8u32 {
                let g = build_family(FamilyParam::new(family, r)).unwrap();
                let got: BTreeSet<usize> = g.degree_histogram().into_keys().collect();
                assert_eq!(got, degrees.iter().copied().collect(), "{family} r={r}");
            }
        }
    }

    #[test]
    fn every_face_vertex_has_degree_4() {
        for family in Family::ALL {
            for r in 2..=6u32 {
                let g = build_family(FamilyParam::new(family, r)).unwrap();
                for v in g.vertices().iter().filter(|v| v.is_face()) {
                    assert_eq!(g.degree(v).unwrap(), 4);
                }
            }
        }
    }

    #[test]
    fn each_face_induces_an_octahedron() {
        let mesh = build_hx(3).unwrap();
        let derived = octahedral_substitution(&mesh).unwrap();
        for key in enumerate_faces(&mesh).unwrap() {
            let corners = key.corners().map(VertexId::Mesh);
            let inserted: [VertexId; 3] =
                [0u8, 1, 2].map(|slot| VertexId::Face { face: key, slot });
            for i in 0..3 {
                for j in 0..3 {
                    let adjacent = derived.is_adjacent(&inserted[i], &corners[j]);
                    // slot i is non-adjacent exactly to corner i
                    assert_eq!(adjacent, i != j, "{key} slots {i},{j}");
                }
                assert!(derived.is_adjacent(&inserted[i], &inserted[(i + 1) % 3]));
                assert!(derived.is_adjacent(&corners[i], &corners[(i + 1) % 3]));
            }
        }
    }

    #[test]
    fn substitution_is_local() {
        // the inserted vertices of one face connect only inside that face's
        // octahedron, so deleting them restores the mesh there
        let mesh = build_triangular_mesh(3).unwrap();
        let derived = octahedral_substitution(&mesh).unwrap();
        for key in enumerate_faces(&mesh).unwrap() {
            let corners: BTreeSet<VertexId> =
                key.corners().map(VertexId::Mesh).into_iter().collect();
            for slot in 0u8..3 {
                let fv = VertexId::Face { face: key, slot };
                for w in derived.neighbors(&fv).unwrap() {
                    let in_own_face = corners.contains(w)
                        || matches!(w, VertexId::Face { face, .. } if *face == key);
                    assert!(in_own_face, "{fv} reaches outside its face");
                }
            }
        }
    }

    #[test]
    fn builds_are_deterministic() {
        let a = build_family(FamilyParam::new(Family::Rhdn3, 5)).unwrap();
        let b = build_family(FamilyParam::new(Family::Rhdn3, 5)).unwrap();
        assert_eq!(a.vertices(), b.vertices());
        assert_eq!(a.edge_list(), b.edge_list());
    }

    #[test]
    fn family_round_trips_through_strings() {
        for family in Family::ALL {
            assert_eq!(family.as_str().parse::<Family>().unwrap(), family);
        }
        assert_eq!("thdn3".parse::<Family>().unwrap(), Family::Thdn3);
        assert!("HDN2".parse::<Family>().is_err());
    }
}
