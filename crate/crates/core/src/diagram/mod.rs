//! Planar link diagrams as 4-valent plane graphs.
//!
//! A crossing has four slots `0..4` in counterclockwise order. Each slot holds
//! one end of an edge (a strand arc between crossings). The strand through a
//! crossing connects opposite slots `s` and `s + 2`; one of the two diagonals
//! passes under. The cyclic slot order is the rotation system, so faces fall
//! out of a dart traversal and planarity is checked with Euler's formula.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

mod canonical;
mod checks;
mod faces;
mod synth;
mod twist;

pub use checks::{is_alternating, is_prime_diagram};
pub use faces::{enumerate_faces, Face};
pub use synth::synthesize_diagram;
pub use twist::{compute_twist_number, TwistDecomposition};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("diagram has no crossings")]
    Empty,
    #[error("edge label {label} appears {count} time(s); every edge needs exactly 2 ends")]
    DanglingEdge { label: u64, count: usize },
    #[error("rotation system is not planar: V - E + F = {euler}, expected {expected}")]
    NonPlanar { euler: i64, expected: i64 },
    #[error("edge label {label} is oriented inconsistently by the under-strand records")]
    InconsistentOrientation { label: u64 },
    #[error("crossing {crossing} is nugatory")]
    Nugatory { crossing: usize },
}

/// One end of an edge: a slot at a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Port {
    pub crossing: usize,
    pub slot: u8,
}

impl Port {
    fn new(crossing: usize, slot: u8) -> Self {
        Port { crossing, slot }
    }

    fn dart(self) -> usize {
        self.crossing * 4 + self.slot as usize
    }

    /// The slot the strand leaves through after entering here.
    fn across(self) -> Port {
        Port::new(self.crossing, (self.slot + 2) % 4)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Crossing {
    edges: [usize; 4],
    /// Slot where the under-strand enters; it leaves through `under_in + 2`.
    under_in: u8,
}

/// Oriented edge: the strand runs from `tail` to `head`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Edge {
    tail: Port,
    head: Port,
}

impl Edge {
    fn other_end(&self, p: Port) -> Port {
        if self.tail == p {
            self.head
        } else {
            self.tail
        }
    }
}

/// A validated, immutable link diagram on the 2-sphere.
#[derive(Clone, Debug)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
    dart_face: Vec<usize>,
    link_components: usize,
    connected_parts: usize,
}

/// Unoriented topology: for every port the edge it holds, and both ends of
/// every edge.
pub(crate) struct Topology {
    port_edge: Vec<[usize; 4]>,
    ends: Vec<[Port; 2]>,
}

impl Topology {
    fn other_end(&self, p: Port) -> Port {
        let [a, b] = self.ends[self.port_edge[p.crossing][p.slot as usize]];
        if a == p {
            b
        } else {
            a
        }
    }
}

impl PlanarDiagram {
    /// Builds a diagram from crossing records `[a, b, c, d]`: the edge labels
    /// at slots 0..4 in counterclockwise order, starting at the incoming
    /// under-strand (so the under-strand runs `a -> c`).
    ///
    /// Edge indices follow the sorted order of the labels.
    pub fn from_pd(records: &[[u64; 4]]) -> Result<Self, DiagramError> {
        if records.is_empty() {
            return Err(DiagramError::Empty);
        }
        let mut by_label: BTreeMap<u64, Vec<Port>> = BTreeMap::new();
        for (v, rec) in records.iter().enumerate() {
            for (s, &label) in rec.iter().enumerate() {
                by_label
                    .entry(label)
                    .or_default()
                    .push(Port::new(v, s as u8));
            }
        }
        let mut labels = Vec::with_capacity(by_label.len());
        let mut ends = Vec::with_capacity(by_label.len());
        let mut port_edge = vec![[usize::MAX; 4]; records.len()];
        for (label, ports) in by_label {
            if ports.len() != 2 {
                return Err(DiagramError::DanglingEdge {
                    label,
                    count: ports.len(),
                });
            }
            let e = ends.len();
            for p in &ports {
                port_edge[p.crossing][p.slot as usize] = e;
            }
            ends.push([ports[0], ports[1]]);
            labels.push(label);
        }
        let topo = Topology { port_edge, ends };
        let under_in = vec![0u8; records.len()];
        Self::assemble(topo, under_in, true, &labels)
    }

    /// Crossing records in the same convention as [`PlanarDiagram::from_pd`],
    /// with edge `i` labelled `i + 1`. Crossings come out in index order.
    pub fn to_pd(&self) -> Vec<[u64; 4]> {
        self.crossings
            .iter()
            .map(|c| {
                let mut rec = [0u64; 4];
                for (i, slot) in rec.iter_mut().enumerate() {
                    *slot = c.edges[(c.under_in as usize + i) % 4] as u64 + 1;
                }
                rec
            })
            .collect()
    }

    /// Shared tail of both constructors. `under_in[v]` names the under
    /// diagonal of crossing `v`; when `fixed` is set it is also the slot
    /// where the under-strand must enter, which pins the orientation of
    /// every component that passes under somewhere.
    fn assemble(
        topo: Topology,
        mut under_in: Vec<u8>,
        fixed: bool,
        labels: &[u64],
    ) -> Result<Self, DiagramError> {
        let n = topo.port_edge.len();
        let edge_count = topo.ends.len();

        let (faces, dart_face) = faces::trace(&topo);
        let connected_parts = count_parts(n, &topo.ends);
        let euler = n as i64 - edge_count as i64 + faces.len() as i64;
        let expected = 2 * connected_parts as i64;
        if euler != expected {
            return Err(DiagramError::NonPlanar { euler, expected });
        }

        // Walk every strand cycle and orient it.
        let mut oriented: Vec<Option<Edge>> = vec![None; edge_count];
        let mut link_components = 0;
        for start in 0..edge_count {
            if oriented[start].is_some() {
                continue;
            }
            link_components += 1;
            let cycle = strand_cycle(&topo, start);
            let mut forward = true;
            if fixed {
                // The first under passage decides the direction.
                if let Some(&(_, head)) = cycle.iter().find(|(_, head)| {
                    let u = under_in[head.crossing];
                    head.slot % 2 == u % 2
                }) {
                    forward = head.slot == under_in[head.crossing];
                }
            }
            for &(tail, head) in &cycle {
                let (tail, head) = if forward { (tail, head) } else { (head, tail) };
                let e = topo.port_edge[head.crossing][head.slot as usize];
                if fixed
                    && head.slot % 2 == under_in[head.crossing] % 2
                    && head.slot != under_in[head.crossing]
                {
                    return Err(DiagramError::InconsistentOrientation { label: labels[e] });
                }
                oriented[e] = Some(Edge { tail, head });
            }
        }
        let edges: Vec<Edge> = oriented.into_iter().map(|e| e.unwrap()).collect();

        if !fixed {
            // Only the diagonal was given; point `under_in` at its incoming end.
            for (v, u) in under_in.iter_mut().enumerate() {
                let e = topo.port_edge[v][*u as usize];
                if edges[e].head != Port::new(v, *u) {
                    *u = (*u + 2) % 4;
                }
            }
        }

        let crossings = topo
            .port_edge
            .iter()
            .zip(under_in)
            .map(|(&edges, under_in)| Crossing { edges, under_in })
            .collect();
        Ok(PlanarDiagram {
            crossings,
            edges,
            faces,
            dart_face,
            link_components,
            connected_parts,
        })
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Number of closed strands (link components).
    pub fn component_count(&self) -> usize {
        self.link_components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_parts == 1
    }

    pub fn connected_parts(&self) -> usize {
        self.connected_parts
    }

    /// Does slot `slot` of crossing `crossing` lie on the over-strand?
    pub fn is_over(&self, crossing: usize, slot: u8) -> bool {
        slot % 2 != self.crossings[crossing].under_in % 2
    }

    /// Crossing sign: +1 when the over-strand enters one slot clockwise of
    /// the incoming under-strand (right-handed), -1 otherwise.
    pub fn sign(&self, crossing: usize) -> i8 {
        let c = &self.crossings[crossing];
        let over_in = (c.under_in + 3) % 4;
        let e = c.edges[over_in as usize];
        if self.edges[e].head == Port::new(crossing, over_in) {
            1
        } else {
            -1
        }
    }

    pub fn writhe(&self) -> i64 {
        (0..self.crossings.len()).map(|v| self.sign(v) as i64).sum()
    }

    /// The same diagram with crossing `crossing` switched.
    pub fn with_crossing_switched(&self, crossing: usize) -> PlanarDiagram {
        let mut d = self.clone();
        let c = &mut d.crossings[crossing];
        let candidate = (c.under_in + 1) % 4;
        let e = c.edges[candidate as usize];
        c.under_in = if d.edges[e].head == Port::new(crossing, candidate) {
            candidate
        } else {
            (candidate + 2) % 4
        };
        d
    }

    /// Crossings where two opposite corners lie in the same face. Such a
    /// crossing can be untwisted; a reduced diagram has none.
    pub fn nugatory_crossings(&self) -> Vec<usize> {
        (0..self.crossings.len())
            .filter(|&v| {
                let f = |k: usize| self.dart_face[v * 4 + k];
                f(0) == f(2) || f(1) == f(3)
            })
            .collect()
    }

    pub fn ensure_reduced(&self) -> Result<(), DiagramError> {
        match self.nugatory_crossings().first() {
            Some(&crossing) => Err(DiagramError::Nugatory { crossing }),
            None => Ok(()),
        }
    }

    fn port_edge(&self, p: Port) -> usize {
        self.crossings[p.crossing].edges[p.slot as usize]
    }

    fn other_end(&self, p: Port) -> Port {
        self.edges[self.port_edge(p)].other_end(p)
    }

    /// Crossing indices visited by each component in strand order, with
    /// the entry slot of each passage.
    pub(crate) fn strand_passages(&self) -> Vec<Vec<Port>> {
        let mut seen = vec![false; self.edges.len()];
        let mut out = Vec::new();
        for start in 0..self.edges.len() {
            if seen[start] {
                continue;
            }
            let mut passages = Vec::new();
            let mut e = start;
            loop {
                seen[e] = true;
                let head = self.edges[e].head;
                passages.push(head);
                e = self.port_edge(head.across());
                if e == start {
                    break;
                }
            }
            out.push(passages);
        }
        out
    }
}

/// Follows the strand from edge `start`, returning (from, to) ports for each
/// edge in walking order. Direction is from `ends[0]` of `start`.
fn strand_cycle(topo: &Topology, start: usize) -> Vec<(Port, Port)> {
    let mut out = Vec::new();
    let [mut from, mut to] = topo.ends[start];
    loop {
        out.push((from, to));
        from = to.across();
        to = topo.other_end(from);
        let e = topo.port_edge[from.crossing][from.slot as usize];
        if e == start {
            break;
        }
    }
    out
}

fn count_parts(n: usize, ends: &[[Port; 2]]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut parts = n;
    for [a, b] in ends {
        let (ra, rb) = (find(&mut parent, a.crossing), find(&mut parent, b.crossing));
        if ra != rb {
            parent[ra] = rb;
            parts -= 1;
        }
    }
    parts
}
