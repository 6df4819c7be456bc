use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::graph::Graph;
use crate::par::{self, Execution};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClusteringClass {
    /// Mean local clustering coefficient over vertices of this degree.
    pub mean: f64,
    pub vertices: usize,
}

/// Triangles through each vertex.
///
/// Edges are oriented from lower to higher `(degree, id)` rank, so every
/// triangle is found exactly once at its lowest-ranked vertex by merging two
/// sorted forward lists.
pub fn local_triangles(g: &Graph) -> Vec<u64> {
    local_triangles_with(g, Execution::Parallel)
}

pub fn local_triangles_with(g: &Graph, exec: Execution) -> Vec<u64> {
    let n = g.vertex_count();
    let rank_less = |a: usize, b: usize| (g.degree(a), a) < (g.degree(b), b);

    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0usize);
    let mut total = 0;
    for u in 0..n {
        total += g.neighbors(u).iter().filter(|&&v| rank_less(u, v)).count();
        offsets.push(total);
    }
    let mut forward = Vec::with_capacity(total);
    for u in 0..n {
        forward.extend(g.neighbors(u).iter().copied().filter(|&v| rank_less(u, v)));
    }
    let fwd = |u: usize| &forward[offsets[u]..offsets[u + 1]];

    let counts: Vec<AtomicU64> = (0..n).map(|_| AtomicU64::new(0)).collect();
    par::for_each_index(n, exec, |u| {
        let a = fwd(u);
        let mut here = 0u64;
        for &v in a {
            let b = fwd(v);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        here += 1;
                        counts[v].fetch_add(1, Ordering::Relaxed);
                        counts[a[i]].fetch_add(1, Ordering::Relaxed);
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        counts[u].fetch_add(here, Ordering::Relaxed);
    });
    counts.into_iter().map(AtomicU64::into_inner).collect()
}

/// Mean local clustering coefficient per degree. Vertices of degree below 2
/// have no wedges and are left out.
pub fn clustering_by_degree(g: &Graph) -> BTreeMap<usize, ClusteringClass> {
    let triangles = local_triangles(g);
    let mut acc: BTreeMap<usize, (f64, usize)> = BTreeMap::new();
    for (v, &t) in triangles.iter().enumerate() {
        let d = g.degree(v);
        if d < 2 {
            continue;
        }
        let cc = 2.0 * t as f64 / (d * (d - 1)) as f64;
        let e = acc.entry(d).or_insert((0.0, 0));
        e.0 += cc;
        e.1 += 1;
    }
    acc.into_iter()
        .map(|(d, (sum, count))| {
            (
                d,
                ClusteringClass {
                    mean: sum / count as f64,
                    vertices: count,
                },
            )
        })
        .collect()
}
