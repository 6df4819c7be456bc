use std::collections::BTreeMap;

use crate::graph::Graph;

/// Number of vertices of each degree, isolated vertices included.
pub fn degree_distribution(g: &Graph) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for v in 0..g.vertex_count() {
        *h.entry(g.degree(v)).or_insert(0) += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graphs() {
        assert_eq!(
            degree_distribution(&Graph::complete(3)),
            BTreeMap::from([(2, 3)])
        );
        assert_eq!(
            degree_distribution(&Graph::star(4)),
            BTreeMap::from([(1, 4), (4, 1)])
        );
        assert_eq!(
            degree_distribution(&Graph::empty(3)),
            BTreeMap::from([(0, 3)])
        );
    }
}
