use std::collections::BTreeMap;

use crate::graph::Graph;

/// `X_d`: over vertices of degree `d >= 1`, the mean of their average
/// neighbor degree.
pub fn assortativity_profile(g: &Graph) -> BTreeMap<usize, f64> {
    let mut acc: BTreeMap<usize, (f64, usize)> = BTreeMap::new();
    for v in 0..g.vertex_count() {
        let d = g.degree(v);
        if d == 0 {
            continue;
        }
        let total: usize = g.neighbors(v).iter().map(|&u| g.degree(u)).sum();
        let e = acc.entry(d).or_insert((0.0, 0));
        e.0 += total as f64 / d as f64;
        e.1 += 1;
    }
    acc.into_iter()
        .map(|(d, (sum, count))| (d, sum / count as f64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_and_cycle() {
        assert_eq!(
            assortativity_profile(&Graph::star(5)),
            BTreeMap::from([(1, 5.0), (5, 1.0)])
        );
        assert_eq!(
            assortativity_profile(&Graph::cycle(7)),
            BTreeMap::from([(2, 2.0)])
        );
        assert!(assortativity_profile(&Graph::empty(4)).is_empty());
    }
}
