use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::{self, Execution};

/// Raw directed edge insertions over vertices `0..n`, duplicates and
/// self-loops included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeList {
    n: u64,
    edges: Vec<(u64, u64)>,
}

impl EdgeList {
    pub fn new(n: u64, edges: Vec<(u64, u64)>) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(Error::InvalidArgument(format!(
                "edge ({u}, {v}) out of range for {n} vertices"
            )));
        }
        Ok(EdgeList { n, edges })
    }

    pub(crate) fn new_unchecked(n: u64, edges: Vec<(u64, u64)>) -> Self {
        debug_assert!(edges.iter().all(|&(u, v)| u < n && v < n));
        EdgeList { n, edges }
    }

    pub fn vertex_count(&self) -> u64 {
        self.n
    }

    pub fn edges(&self) -> &[(u64, u64)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Raw out-degree (insertions with `v` as source) of every vertex.
    pub fn out_degrees(&self) -> Vec<u64> {
        let mut d = vec![0u64; self.n as usize];
        for &(u, _) in &self.edges {
            d[u as usize] += 1;
        }
        d
    }
}

/// An undirected simple graph together with what was discarded to get it.
#[derive(Clone, Debug)]
pub struct Symmetrized {
    pub graph: Graph,
    /// Non-loop insertions whose undirected edge was already present.
    pub duplicates: u64,
    pub self_loops: u64,
}

/// Drops direction, self-loops and repeated edges.
pub fn symmetrize(edges: &EdgeList) -> Symmetrized {
    let n = usize::try_from(edges.vertex_count()).expect("vertex count fits in memory");
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
    let mut self_loops = 0u64;
    for &(u, v) in edges.edges() {
        if u == v {
            self_loops += 1;
        } else {
            let (a, b) = (u.min(v) as usize, u.max(v) as usize);
            pairs.push((a, b));
        }
    }
    par::sort_unstable(&mut pairs, Execution::Parallel);
    let before = pairs.len();
    pairs.dedup();
    let duplicates = (before - pairs.len()) as u64;
    Symmetrized {
        graph: Graph::from_sorted_unique(n, &pairs),
        duplicates,
        self_loops,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collapses_duplicates() {
        let e = EdgeList::new(2, vec![(0, 1), (1, 0), (0, 1)]).unwrap();
        let s = symmetrize(&e);
        assert_eq!(s.graph.edge_count(), 1);
        assert!(s.graph.has_edge(0, 1));
        assert_eq!((s.duplicates, s.self_loops), (2, 0));
    }

    #[test]
    fn drops_loops() {
        let e = EdgeList::new(3, vec![(2, 2)]).unwrap();
        let s = symmetrize(&e);
        assert_eq!(s.graph.edge_count(), 0);
        assert_eq!(s.graph.vertex_count(), 3);
        assert_eq!((s.duplicates, s.self_loops), (0, 1));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(EdgeList::new(2, vec![(0, 2)]).is_err());
    }
}
