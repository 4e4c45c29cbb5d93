use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::PlanarDiagram;

/// Twist regions of a diagram and their count `t(D)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistDecomposition {
    /// Each twist as a chain of crossing indices; consecutive crossings share
    /// a bigon. Twists are sorted by their smallest crossing.
    pub twists: Vec<Vec<usize>>,
    pub twist_count: usize,
    pub bigon_count: usize,
    /// Crossings whose bigon has both corners at the crossing itself. They
    /// stay singleton twists; a diagram containing one is not reduced.
    pub self_bigon_crossings: Vec<usize>,
}

/// Groups crossings into twists: maximal chains of crossings linked through
/// bigon faces, with every crossing outside a bigon a twist of its own.
///
/// The chains are the connected components of the bigon-adjacency graph. When
/// that graph has maximum degree 2, as in reduced alternating diagrams, the
/// components are exactly the maximal paths and cycles. A cycle (the row of
/// a `(2, n)`-torus diagram) is a single twist.
pub fn compute_twist_number(d: &PlanarDiagram) -> TwistDecomposition {
    let n = d.crossing_count();
    let mut adjacency: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let mut self_bigons = BTreeSet::new();
    let mut bigon_count = 0;
    for face in d.faces.iter().filter(|f| f.is_bigon()) {
        bigon_count += 1;
        let (a, b) = (face.crossings[0], face.crossings[1]);
        if a == b {
            self_bigons.insert(a);
        } else {
            adjacency[a].insert(b);
            adjacency[b].insert(a);
        }
    }

    let mut seen = vec![false; n];
    let mut twists = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        let component = collect_component(&adjacency, root, &mut seen);
        twists.push(order_chain(&adjacency, component));
    }
    twists.sort_by_key(|t| t.iter().copied().min());

    TwistDecomposition {
        twist_count: twists.len(),
        twists,
        bigon_count,
        self_bigon_crossings: self_bigons.into_iter().collect(),
    }
}

fn collect_component(adjacency: &[BTreeSet<usize>], root: usize, seen: &mut [bool]) -> Vec<usize> {
    let mut stack = vec![root];
    let mut out = Vec::new();
    seen[root] = true;
    while let Some(v) = stack.pop() {
        out.push(v);
        for &w in &adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    out
}

/// Lays a component out as a walk: from an endpoint for a path, from the
/// smallest index for a cycle. Components with a branch point keep
/// ascending order.
fn order_chain(adjacency: &[BTreeSet<usize>], mut component: Vec<usize>) -> Vec<usize> {
    if component.iter().any(|&v| adjacency[v].len() > 2) {
        component.sort_unstable();
        return component;
    }
    let start = component
        .iter()
        .copied()
        .filter(|&v| adjacency[v].len() <= 1)
        .min()
        .unwrap_or_else(|| *component.iter().min().unwrap());
    let mut chain = Vec::with_capacity(component.len());
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        chain.push(cur);
        let next = adjacency[cur].iter().copied().find(|&w| w != prev);
        match next {
            Some(w) if w != start => {
                prev = cur;
                cur = w;
            }
            _ => break,
        }
    }
    chain
}
