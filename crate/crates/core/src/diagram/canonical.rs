use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{PlanarDiagram, Port};

impl PlanarDiagram {
    /// Relabelling-invariant code of a connected diagram.
    ///
    /// For every starting dart, crossings are numbered in breadth-first order
    /// and each crossing's slots are read counterclockwise from the slot it
    /// was reached through; the lexicographically smallest transcript wins.
    /// Strand orientation is not part of the code. Quadratic in the number of
    /// crossings.
    pub fn canonical_code(&self) -> Vec<u64> {
        let n = self.crossing_count();
        let mut best: Option<Vec<u64>> = None;
        for v in 0..n {
            for s in 0..4u8 {
                let code = self.code_from(Port::new(v, s));
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            }
        }
        best.unwrap_or_default()
    }

    /// Equal canonical codes.
    pub fn is_isomorphic(&self, other: &PlanarDiagram) -> bool {
        self.crossing_count() == other.crossing_count()
            && self.canonical_code() == other.canonical_code()
    }

    fn code_from(&self, start: Port) -> Vec<u64> {
        let n = self.crossing_count();
        let mut label = vec![usize::MAX; n];
        let mut base = vec![0u8; n];
        let mut queue = VecDeque::new();
        let mut next_label = 0;
        label[start.crossing] = next_label;
        base[start.crossing] = start.slot;
        next_label += 1;
        queue.push_back(start.crossing);

        let mut code = Vec::with_capacity(n * 12 + 1);
        code.push(n as u64);
        while let Some(u) = queue.pop_front() {
            for i in 0..4u8 {
                let slot = (base[u] + i) % 4;
                let there = self.other_end(Port::new(u, slot));
                let w = there.crossing;
                if label[w] == usize::MAX {
                    label[w] = next_label;
                    base[w] = there.slot;
                    next_label += 1;
                    queue.push_back(w);
                }
                code.push(self.is_over(u, slot) as u64);
                code.push(label[w] as u64);
                code.push(((there.slot + 4 - base[w]) % 4) as u64);
            }
        }
        code
    }
}
