use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{faces, PlanarDiagram, Port, Topology};
use crate::rational::TwistSequence;

// Slot positions of a crossing drawn as an X, counterclockwise.
const NE: u8 = 0;
const NW: u8 = 1;
const SW: u8 = 2;
const SE: u8 = 3;

/// Four open ends of a partially built rational tangle.
struct Tangle {
    nw: Port,
    ne: Port,
    sw: Port,
    se: Port,
}

#[derive(Default)]
struct Builder {
    port_edge: Vec<[usize; 4]>,
    ends: Vec<[Port; 2]>,
}

impl Builder {
    fn crossing(&mut self) -> usize {
        self.port_edge.push([usize::MAX; 4]);
        self.port_edge.len() - 1
    }

    fn join(&mut self, a: Port, b: Port) {
        let e = self.ends.len();
        self.port_edge[a.crossing][a.slot as usize] = e;
        self.port_edge[b.crossing][b.slot as usize] = e;
        self.ends.push([a, b]);
    }
}

/// The standard alternating 4-plat diagram of `[c1, ..., cn]`.
///
/// The tangle is grown from the bottom of the sequence up: `cn` is a row of
/// horizontal twists, then twist regions alternate between vertical and
/// horizontal so that the tangle's fraction follows `x -> c + 1/x`. When `c1`
/// lands on a horizontal row the tangle has fraction `p/q` and is closed by
/// joining its top and bottom ends; otherwise it has fraction `q/p` and is
/// closed by joining its left and right ends. Either way the closure is the
/// 2-bridge link with determinant `p`.
///
/// Over and under are assigned from a checkerboard colouring so that every
/// crossing has the same type, which makes the diagram alternating.
pub fn synthesize_diagram(seq: &TwistSequence) -> PlanarDiagram {
    let entries = seq.entries();
    let n = entries.len();
    let mut b = Builder::default();
    let mut tangle: Option<Tangle> = None;

    for (step, &count) in entries.iter().rev().enumerate() {
        let horizontal = step % 2 == 0;
        for _ in 0..count {
            let x = b.crossing();
            let port = |slot| Port::new(x, slot);
            tangle = Some(match tangle.take() {
                None => Tangle {
                    nw: port(NW),
                    ne: port(NE),
                    sw: port(SW),
                    se: port(SE),
                },
                Some(t) if horizontal => {
                    b.join(t.ne, port(NW));
                    b.join(t.se, port(SW));
                    Tangle {
                        ne: port(NE),
                        se: port(SE),
                        ..t
                    }
                }
                Some(t) => {
                    b.join(t.sw, port(NW));
                    b.join(t.se, port(NE));
                    Tangle {
                        sw: port(SW),
                        se: port(SE),
                        ..t
                    }
                }
            });
        }
    }

    let t = tangle.expect("twist sequences are non-empty with positive entries");
    if n % 2 == 1 {
        b.join(t.nw, t.ne);
        b.join(t.sw, t.se);
    } else {
        b.join(t.nw, t.sw);
        b.join(t.ne, t.se);
    }

    let topo = Topology {
        port_edge: b.port_edge,
        ends: b.ends,
    };
    let under = alternating_under_diagonals(&topo);
    let topo = relabel_along_strands(topo);
    let labels: Vec<u64> = (1..=topo.ends.len() as u64).collect();
    PlanarDiagram::assemble(topo, under, false, &labels)
        .expect("the 4-plat construction is planar by construction")
}

/// Checkerboard-colours the faces and picks, at every crossing, the under
/// diagonal that puts the shaded corners on the same side of the over-strand.
fn alternating_under_diagonals(topo: &Topology) -> Vec<u8> {
    let (faces, dart_face) = faces::trace(topo);
    let mut adjacent = vec![Vec::new(); faces.len()];
    for [a, b] in &topo.ends {
        let (fa, fb) = (dart_face[a.dart()], dart_face[b.dart()]);
        adjacent[fa].push(fb);
        adjacent[fb].push(fa);
    }
    let mut colour = vec![u8::MAX; faces.len()];
    let mut queue = VecDeque::new();
    for root in 0..faces.len() {
        if colour[root] != u8::MAX {
            continue;
        }
        colour[root] = 0;
        queue.push_back(root);
        while let Some(f) = queue.pop_front() {
            for &other in &adjacent[f] {
                if colour[other] == u8::MAX {
                    colour[other] = 1 - colour[f];
                    queue.push_back(other);
                }
            }
        }
    }
    (0..topo.port_edge.len())
        .map(|v| {
            // Corner 0 shaded: the over-strand is slots 0-2, so the under diagonal is 1-3.
            if colour[dart_face[v * 4]] == 0 {
                1
            } else {
                0
            }
        })
        .collect()
}

/// Renumbers edges so that each component's edges are consecutive in
/// walking order, matching the usual PD labelling.
fn relabel_along_strands(topo: Topology) -> Topology {
    let m = topo.ends.len();
    let mut new_index = vec![usize::MAX; m];
    let mut ends = Vec::with_capacity(m);
    for start in 0..m {
        if new_index[start] != usize::MAX {
            continue;
        }
        for (from, to) in super::strand_cycle(&topo, start) {
            let e = topo.port_edge[to.crossing][to.slot as usize];
            new_index[e] = ends.len();
            ends.push([from, to]);
        }
    }
    let port_edge = topo
        .port_edge
        .iter()
        .map(|slots| slots.map(|e| new_index[e]))
        .collect();
    Topology { port_edge, ends }
}
