use alloc::collections::BTreeMap;

use super::PlanarDiagram;

/// Along every strand, crossings alternate between over and under.
pub fn is_alternating(d: &PlanarDiagram) -> bool {
    d.strand_passages().iter().all(|passages| {
        let len = passages.len();
        (0..len).all(|i| {
            let (a, b) = (passages[i], passages[(i + 1) % len]);
            d.is_over(a.crossing, a.slot) != d.is_over(b.crossing, b.slot)
        })
    })
}

/// No simple closed curve meets the diagram in exactly two points with
/// crossings on both sides.
///
/// Such a curve runs through two faces and crosses two edges that both
/// separate the same pair of faces, and conversely any two distinct edges
/// with the same face pair give one. Each side then holds an endpoint of
/// each cut edge, so both sides contain crossings. Split diagrams are not
/// prime.
pub fn is_prime_diagram(d: &PlanarDiagram) -> bool {
    if !d.is_connected() {
        return false;
    }
    let mut seen = BTreeMap::new();
    for e in 0..d.edge_count() {
        let (a, b) = d.edge_faces(e);
        if seen.insert((a.min(b), a.max(b)), e).is_some() {
            return false;
        }
    }
    true
}
