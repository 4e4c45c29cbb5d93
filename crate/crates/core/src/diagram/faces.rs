use alloc::vec;
use alloc::vec::Vec;

use super::{PlanarDiagram, Port, Topology};

/// A complementary region of the diagram.
///
/// `edges[i]` is followed by a turn at `crossings[i]`; both lists have the
/// face's length. A bigon has length 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub edges: Vec<usize>,
    pub crossings: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_bigon(&self) -> bool {
        self.edges.len() == 2
    }
}

/// Dart traversal of the rotation system.
///
/// A dart leaves a crossing through one slot. After arriving at slot `t` the
/// face continues out of slot `t - 1`, so the corner between slots `k` and
/// `k + 1` belongs to the face of the dart leaving through `k`.
pub(crate) fn trace(topo: &Topology) -> (Vec<Face>, Vec<usize>) {
    let darts = topo.port_edge.len() * 4;
    let mut dart_face = vec![usize::MAX; darts];
    let mut faces = Vec::new();
    for start in 0..darts {
        if dart_face[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut face = Face {
            edges: Vec::new(),
            crossings: Vec::new(),
        };
        let mut d = start;
        while dart_face[d] == usize::MAX {
            dart_face[d] = id;
            let leave = Port {
                crossing: d / 4,
                slot: (d % 4) as u8,
            };
            face.edges
                .push(topo.port_edge[leave.crossing][leave.slot as usize]);
            let arrive = topo.other_end(leave);
            face.crossings.push(arrive.crossing);
            d = Port {
                crossing: arrive.crossing,
                slot: (arrive.slot + 3) % 4,
            }
            .dart();
        }
        faces.push(face);
    }
    (faces, dart_face)
}

/// Faces of `d` in discovery order. A connected diagram with `n` crossings
/// has `n + 2` of them.
pub fn enumerate_faces(d: &PlanarDiagram) -> &[Face] {
    &d.faces
}

impl PlanarDiagram {
    /// Face on either side of `edge`.
    pub fn edge_faces(&self, edge: usize) -> (usize, usize) {
        let e = self.edges[edge];
        (self.dart_face[e.tail.dart()], self.dart_face[e.head.dart()])
    }

    /// Face containing the corner between slots `slot` and `slot + 1`.
    pub fn corner_face(&self, crossing: usize, slot: u8) -> usize {
        self.dart_face[crossing * 4 + slot as usize]
    }
}
