use std::collections::BTreeMap;

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreDecomposition {
    pub core_numbers: Vec<usize>,
    /// `k -> |k-core|` for `k = 1..=max core`.
    pub core_sizes: BTreeMap<usize, usize>,
}

impl CoreDecomposition {
    pub fn max_core(&self) -> usize {
        self.core_numbers.iter().copied().max().unwrap_or(0)
    }
}

/// Core numbers by bucket peeling (Batagelj-Zaversnik), O(n + m).
pub fn core_decomposition(g: &Graph) -> CoreDecomposition {
    let n = g.vertex_count();
    let mut deg = g.degrees();
    let max_deg = deg.iter().copied().max().unwrap_or(0);

    // Vertices sorted by current degree, with bucket starts and positions.
    let mut bin = vec![0usize; max_deg + 2];
    for &d in &deg {
        bin[d + 1] += 1;
    }
    for d in 1..bin.len() {
        bin[d] += bin[d - 1];
    }
    let mut pos = vec![0usize; n];
    let mut vert = vec![0usize; n];
    {
        let mut next = bin.clone();
        for v in 0..n {
            pos[v] = next[deg[v]];
            vert[pos[v]] = v;
            next[deg[v]] += 1;
        }
    }

    for i in 0..n {
        let v = vert[i];
        for &u in g.neighbors(v) {
            if deg[u] > deg[v] {
                // Swap u with the first vertex of its bucket, then shrink it.
                let du = deg[u];
                let pu = pos[u];
                let pw = bin[du];
                let w = vert[pw];
                if u != w {
                    vert[pu] = w;
                    pos[w] = pu;
                    vert[pw] = u;
                    pos[u] = pw;
                }
                bin[du] += 1;
                deg[u] -= 1;
            }
        }
    }

    let core_numbers = deg;
    let max_core = core_numbers.iter().copied().max().unwrap_or(0);
    let mut at = vec![0usize; max_core + 1];
    for &c in &core_numbers {
        at[c] += 1;
    }
    let mut core_sizes = BTreeMap::new();
    let mut running = 0;
    for k in (1..=max_core).rev() {
        running += at[k];
        core_sizes.insert(k, running);
    }
    CoreDecomposition {
        core_numbers,
        core_sizes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph() {
        let c = core_decomposition(&Graph::complete(4));
        assert_eq!(c.core_numbers, vec![3; 4]);
        assert_eq!(c.core_sizes, BTreeMap::from([(1, 4), (2, 4), (3, 4)]));
    }

    #[test]
    fn star() {
        let c = core_decomposition(&Graph::star(6));
        assert_eq!(c.core_numbers, vec![1; 7]);
        assert_eq!(c.core_sizes, BTreeMap::from([(1, 7)]));
    }

    #[test]
    fn triangle_with_tail() {
        // 0-1-2 triangle, 2-3 pendant, 4 isolated.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3)]);
        let c = core_decomposition(&g);
        assert_eq!(c.core_numbers, vec![2, 2, 2, 1, 0]);
        assert_eq!(c.core_sizes, BTreeMap::from([(1, 4), (2, 3)]));
    }
}
