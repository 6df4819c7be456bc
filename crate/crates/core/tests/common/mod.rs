//! Slow, obviously-correct reference implementations shared by the
//! integration tests and the acceptance runner.
#![allow(dead_code)]

use std::collections::BTreeMap;

use krongraph::{GeneratorMatrix, Graph};
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Dense row-major square matrix.
pub struct Dense {
    pub n: usize,
    pub a: Vec<f64>,
}

impl Dense {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }
}

/// `T (x) T (x) ... (x) T`, built by repeated explicit Kronecker products.
pub fn kronecker_power(t: &GeneratorMatrix, levels: u32) -> Dense {
    let base = t.entries();
    let mut m = Dense { n: 1, a: vec![1.0] };
    for _ in 0..levels {
        let n = m.n * 2;
        let mut a = vec![0.0; n * n];
        for i in 0..m.n {
            for j in 0..m.n {
                for k in 0..2 {
                    for l in 0..2 {
                        a[(2 * i + k) * n + 2 * j + l] = m.get(i, j) * base[2 * k + l];
                    }
                }
            }
        }
        m = Dense { n, a };
    }
    m
}

/// Outer product of the row and column sums of `p`.
pub fn degree_outer_product(p: &Dense) -> Dense {
    let n = p.n;
    let rows: Vec<f64> = (0..n).map(|i| (0..n).map(|j| p.get(i, j)).sum()).collect();
    let cols: Vec<f64> = (0..n).map(|j| (0..n).map(|i| p.get(i, j)).sum()).collect();
    let total: f64 = rows.iter().sum();
    let mut a = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = rows[i] * cols[j] / total;
        }
    }
    Dense { n, a }
}

/// Sorted `(value, count)` groups of a matrix's entries; neighbours closer
/// than `rel` (relative) share a group.
pub fn entry_histogram(p: &Dense, rel: f64) -> Vec<(f64, u64)> {
    let mut v = p.a.clone();
    v.sort_by(f64::total_cmp);
    let mut out: Vec<(f64, u64)> = Vec::new();
    for x in v {
        match out.last_mut() {
            Some((y, c)) if (x - *y).abs() <= rel * x.abs().max(y.abs()) => *c += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// Erdos-Renyi `G(n, p)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Triangles through each vertex by checking every triple.
pub fn brute_triangles(g: &Graph) -> Vec<u64> {
    let a = adjacency(g);
    let n = a.len();
    let mut t = vec![0u64; n];
    for u in 0..n {
        for v in u + 1..n {
            if !a[u][v] {
                continue;
            }
            for w in v + 1..n {
                if a[u][w] && a[v][w] {
                    t[u] += 1;
                    t[v] += 1;
                    t[w] += 1;
                }
            }
        }
    }
    t
}

/// Mean local clustering per degree (degree >= 2), summed in vertex order.
pub fn brute_clustering(g: &Graph) -> BTreeMap<usize, (f64, usize)> {
    let t = brute_triangles(g);
    let mut acc: BTreeMap<usize, (f64, usize)> = BTreeMap::new();
    for (v, &tv) in t.iter().enumerate() {
        let d = g.degree(v);
        if d >= 2 {
            let e = acc.entry(d).or_insert((0.0, 0));
            e.0 += 2.0 * tv as f64 / (d * (d - 1)) as f64;
            e.1 += 1;
        }
    }
    acc.into_iter()
        .map(|(d, (s, c))| (d, (s / c as f64, c)))
        .collect()
}

pub fn naive_assortativity(g: &Graph) -> BTreeMap<usize, f64> {
    let a = adjacency(g);
    let n = a.len();
    let deg: Vec<usize> = (0..n)
        .map(|v| a[v].iter().filter(|&&x| x).count())
        .collect();
    let mut acc: BTreeMap<usize, (f64, usize)> = BTreeMap::new();
    for v in 0..n {
        if deg[v] == 0 {
            continue;
        }
        let s: usize = (0..n).filter(|&u| a[v][u]).map(|u| deg[u]).sum();
        let e = acc.entry(deg[v]).or_insert((0.0, 0));
        e.0 += s as f64 / deg[v] as f64;
        e.1 += 1;
    }
    acc.into_iter()
        .map(|(d, (s, c))| (d, s / c as f64))
        .collect()
}

/// Core numbers by deleting vertices of degree < k until none remain, for
/// each k in turn.
pub fn naive_core_numbers(g: &Graph) -> Vec<usize> {
    let a = adjacency(g);
    let n = a.len();
    let mut core = vec![0usize; n];
    for k in 1..=n {
        let mut alive = vec![true; n];
        loop {
            let doomed: Vec<usize> = (0..n)
                .filter(|&v| alive[v] && (0..n).filter(|&u| alive[u] && a[v][u]).count() < k)
                .collect();
            if doomed.is_empty() {
                break;
            }
            for v in doomed {
                alive[v] = false;
            }
        }
        if !alive.contains(&true) {
            break;
        }
        for v in 0..n {
            if alive[v] {
                core[v] = k;
            }
        }
    }
    core
}

/// All adjacency eigenvalues from a dense symmetric solver, largest
/// magnitude first.
pub fn dense_eigenvalues(g: &Graph) -> Vec<f64> {
    let n = g.vertex_count();
    let m = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    let mut v: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    v.sort_by(|a, b| b.abs().total_cmp(&a.abs()));
    v
}

/// The six generators exercised by the closed-form checks.
pub fn reference_generators() -> Vec<(&'static str, GeneratorMatrix)> {
    let mut v = vec![
        ("graph500", GeneratorMatrix::graph500()),
        ("uniform", GeneratorMatrix::uniform()),
    ];
    for p in krongraph::cli_io::presets() {
        if p.name != "graph500" {
            v.push((p.name, p.generator));
        }
    }
    v
}
