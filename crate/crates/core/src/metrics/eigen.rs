//! Largest-magnitude adjacency eigenvalues by thick-restart Lanczos
//! (Krylov-Schur for symmetric operators) with full reorthogonalization.

use rand::Rng;

use super::jacobi::symmetric_eigen;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::{self, Execution};
use crate::rng::{stream_rng, EIGEN_STREAM};

pub const DEFAULT_EIGENVALUES: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenOptions {
    /// A Ritz pair is accepted once its residual norm is below
    /// `tolerance * |largest Ritz value|`.
    pub tolerance: f64,
    pub max_restarts: usize,
    /// Seed of the random start vectors.
    pub seed: u64,
    pub execution: Execution,
}

impl Default for EigenOptions {
    fn default() -> Self {
        EigenOptions {
            tolerance: 1e-10,
            max_restarts: 3000,
            seed: 0x6b72_6f6e,
            execution: Execution::Parallel,
        }
    }
}

/// Adjacency operator restricted to non-isolated vertices; isolated vertices
/// only contribute zero eigenvalues.
struct Operator {
    offsets: Vec<usize>,
    neighbors: Vec<usize>,
    exec: Execution,
}

impl Operator {
    fn new(g: &Graph, exec: Execution) -> Self {
        let n = g.vertex_count();
        let mut local = vec![usize::MAX; n];
        let mut dim = 0;
        for (v, slot) in local.iter_mut().enumerate() {
            if g.degree(v) > 0 {
                *slot = dim;
                dim += 1;
            }
        }
        let mut offsets = Vec::with_capacity(dim + 1);
        offsets.push(0);
        let mut neighbors = Vec::with_capacity(2 * g.edge_count());
        for v in 0..n {
            if g.degree(v) > 0 {
                neighbors.extend(g.neighbors(v).iter().map(|&u| local[u]));
                offsets.push(neighbors.len());
            }
        }
        Operator {
            offsets,
            neighbors,
            exec,
        }
    }

    fn dim(&self) -> usize {
        self.offsets.len() - 1
    }

    fn apply(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.dim()];
        par::fill(&mut y, self.exec, |i| {
            self.neighbors[self.offsets[i]..self.offsets[i + 1]]
                .iter()
                .map(|&j| x[j])
                .sum()
        });
        y
    }

    fn dot(&self, a: &[f64], b: &[f64]) -> f64 {
        par::sum(a.len(), self.exec, |i| a[i] * b[i])
    }

    /// `w -= c * v`
    fn sub_scaled(&self, w: &mut [f64], c: f64, v: &[f64]) {
        par::update(w, self.exec, |i, x| x - c * v[i]);
    }

    /// Two passes of classical Gram-Schmidt against `locked` then `basis`.
    /// Returns the accumulated projection on the last basis vector.
    fn orthogonalize(&self, w: &mut [f64], locked: &[Vec<f64>], basis: &[Vec<f64>]) -> f64 {
        let mut last = 0.0;
        for _ in 0..2 {
            for l in locked {
                let c = self.dot(l, w);
                self.sub_scaled(w, c, l);
            }
            for (i, b) in basis.iter().enumerate() {
                let c = self.dot(b, w);
                self.sub_scaled(w, c, b);
                if i + 1 == basis.len() {
                    last += c;
                }
            }
        }
        last
    }

    fn random_unit(
        &self,
        rng: &mut impl Rng,
        locked: &[Vec<f64>],
        basis: &[Vec<f64>],
    ) -> Option<Vec<f64>> {
        for _ in 0..8 {
            let mut v: Vec<f64> = (0..self.dim())
                .map(|_| rng.random::<f64>() * 2.0 - 1.0)
                .collect();
            let before = self.dot(&v, &v).sqrt();
            self.orthogonalize(&mut v, locked, basis);
            let norm = self.dot(&v, &v).sqrt();
            if norm > 1e-8 * before {
                v.iter_mut().for_each(|x| *x /= norm);
                return Some(v);
            }
        }
        None
    }
}

struct Ritz {
    value: f64,
    vector: Vec<f64>,
}

/// `want` largest-magnitude eigenpairs of the operator restricted to the
/// orthogonal complement of `locked`.
fn krylov_schur(
    op: &Operator,
    locked: &[Vec<f64>],
    want: usize,
    stream: u64,
    opts: &EigenOptions,
) -> Result<Vec<Ritz>> {
    let available = op.dim() - locked.len();
    debug_assert!(want >= 1 && want <= available);
    let cap = (2 * want + 20).min(available);
    let keep = (want + (cap - want) / 2)
        .min(cap.saturating_sub(1))
        .max(want.min(cap));
    let mut rng = stream_rng(opts.seed, stream);

    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(cap);
    // Projected matrix H (cap x cap, row-major) and coupling b with
    // A V = V H + next b^T.
    let mut h = vec![0.0; cap * cap];
    let mut coupling: Vec<f64> = Vec::new();
    let mut next = op
        .random_unit(&mut rng, locked, &basis)
        .ok_or(Error::ConvergenceFailure { residual: f64::NAN })?;
    let mut residual = f64::INFINITY;

    for restart in 0..=opts.max_restarts {
        while basis.len() < cap {
            let p = basis.len();
            for (i, &b) in coupling.iter().enumerate() {
                h[p * cap + i] = b;
                h[i * cap + p] = b;
            }
            let v = std::mem::take(&mut next);
            let mut w = op.apply(&v);
            let scale = op.dot(&w, &w).sqrt();
            basis.push(v);
            h[p * cap + p] = op.orthogonalize(&mut w, locked, &basis);
            let beta = op.dot(&w, &w).sqrt();
            coupling = vec![0.0; p + 1];
            if beta > 1e-10 * scale.max(f64::MIN_POSITIVE) {
                w.iter_mut().for_each(|x| *x /= beta);
                coupling[p] = beta;
                next = w;
            } else if basis.len() < available {
                // Invariant subspace: continue in a fresh direction.
                next = op
                    .random_unit(&mut rng, locked, &basis)
                    .ok_or(Error::ConvergenceFailure { residual })?;
            } else {
                break;
            }
        }
        let complete = basis.len() == available;

        let p = basis.len();
        let mut hp = vec![0.0; p * p];
        for i in 0..p {
            for j in 0..p {
                hp[i * p + j] = 0.5 * (h[i * cap + j] + h[j * cap + i]);
            }
        }
        let (theta, y) = symmetric_eigen(&hp, p);
        let mut order: Vec<usize> = (0..p).collect();
        order.sort_by(|&a, &b| {
            theta[b]
                .abs()
                .total_cmp(&theta[a].abs())
                .then(theta[b].total_cmp(&theta[a]))
        });
        let ritz_residual = |i: usize| -> f64 {
            coupling
                .iter()
                .enumerate()
                .map(|(r, b)| b * y[r * p + i])
                .sum::<f64>()
                .abs()
        };
        let scale = theta[order[0]].abs().max(f64::MIN_POSITIVE);
        residual = order[..want]
            .iter()
            .map(|&i| ritz_residual(i))
            .fold(0.0, f64::max);
        let combine = |i: usize| -> Vec<f64> {
            let mut x = vec![0.0; op.dim()];
            for (r, b) in basis.iter().enumerate() {
                let c = y[r * p + i];
                op.sub_scaled(&mut x, -c, b);
            }
            x
        };

        if complete || residual <= opts.tolerance * scale {
            return Ok(order[..want]
                .iter()
                .map(|&i| Ritz {
                    value: theta[i],
                    vector: combine(i),
                })
                .collect());
        }
        if restart == opts.max_restarts {
            break;
        }

        let selected = &order[..keep];
        let new_basis: Vec<Vec<f64>> = selected.iter().map(|&i| combine(i)).collect();
        h.iter_mut().for_each(|x| *x = 0.0);
        for (k, &i) in selected.iter().enumerate() {
            h[k * cap + k] = theta[i];
        }
        coupling = selected
            .iter()
            .map(|&i| {
                coupling
                    .iter()
                    .enumerate()
                    .map(|(r, b)| b * y[r * p + i])
                    .sum()
            })
            .collect();
        basis = new_basis;
    }
    Err(Error::ConvergenceFailure { residual })
}

/// The `k` largest-magnitude eigenvalues of the adjacency matrix, signs
/// kept, ordered by magnitude descending (positive first on ties).
pub fn top_eigenvalues(g: &Graph, k: usize) -> Result<Vec<f64>> {
    top_eigenvalues_with(g, k, &EigenOptions::default())
}

pub fn top_eigenvalues_with(g: &Graph, k: usize, opts: &EigenOptions) -> Result<Vec<f64>> {
    if k > g.vertex_count() {
        return Err(Error::InvalidArgument(format!(
            "asked for {k} eigenvalues of a {}-vertex graph",
            g.vertex_count()
        )));
    }
    let op = Operator::new(g, opts.execution);
    let want = k.min(op.dim());
    let mut pairs = if want > 0 {
        krylov_schur(&op, &[], want, EIGEN_STREAM, opts)?
    } else {
        Vec::new()
    };

    // One Krylov sequence sees a single copy of a repeated eigenvalue, so
    // search the complement of what was found for anything larger.
    for round in 0..want {
        if pairs.len() >= op.dim() {
            break;
        }
        let locked: Vec<Vec<f64>> = pairs.iter().map(|r| r.vector.clone()).collect();
        let extra = krylov_schur(&op, &locked, 1, EIGEN_STREAM - 1 - round as u64, opts)?
            .pop()
            .expect("one pair requested");
        let (weakest, smallest) = pairs
            .iter()
            .enumerate()
            .map(|(i, r)| (i, r.value.abs()))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("at least one pair");
        let largest = pairs.iter().map(|r| r.value.abs()).fold(0.0, f64::max);
        if extra.value.abs() > smallest + 1e-8 * largest {
            pairs[weakest] = extra;
        } else {
            break;
        }
    }

    let mut values: Vec<f64> = pairs.into_iter().map(|r| r.value).collect();
    values.resize(k, 0.0);
    values.sort_by(|a, b| b.abs().total_cmp(&a.abs()).then(b.total_cmp(a)));
    // Pairs like +-lambda of a bipartite graph differ in magnitude only by
    // rounding; list the positive one first.
    let mut start = 0;
    while start < values.len() {
        let lead = values[start].abs();
        let mut end = start + 1;
        while end < values.len() && lead - values[end].abs() <= 1e-9 * lead.max(1.0) {
            end += 1;
        }
        values[start..end].sort_by(|a, b| b.total_cmp(a));
        start = end;
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len()
            && a.iter()
                .zip(b)
                .all(|(x, y)| (x - y).abs() <= tol * y.abs().max(1.0))
    }

    #[test]
    fn complete_graph_k4() {
        let e = top_eigenvalues(&Graph::complete(4), 4).unwrap();
        assert!(close(&e, &[3.0, -1.0, -1.0, -1.0], 1e-9), "{e:?}");
    }

    #[test]
    fn star_nine_leaves() {
        let e = top_eigenvalues(&Graph::star(9), 2).unwrap();
        assert!(close(&e, &[3.0, -3.0], 1e-9), "{e:?}");
    }

    #[test]
    fn cycle_spectrum() {
        // C_8: 2cos(2 pi j / 8) = 2, -2, then sqrt(2) and -sqrt(2) twice each.
        let e = top_eigenvalues(&Graph::cycle(8), 6).unwrap();
        let r = 2f64.sqrt();
        assert!(close(&e, &[2.0, -2.0, r, r, -r, -r], 1e-9), "{e:?}");
    }

    #[test]
    fn isolated_vertices_pad_with_zeros() {
        let g = Graph::from_edges(5, [(0, 1)]);
        let e = top_eigenvalues(&g, 4).unwrap();
        assert!(close(&e, &[1.0, -1.0, 0.0, 0.0], 1e-12), "{e:?}");
        assert!(top_eigenvalues(&g, 6).is_err());
        assert_eq!(
            top_eigenvalues(&Graph::empty(3), 2).unwrap(),
            vec![0.0, 0.0]
        );
    }

    #[test]
    fn repeated_leading_eigenvalue_is_found_twice() {
        // Two disjoint K5: eigenvalue 4 twice, then -1 eight times.
        let mut edges = Vec::new();
        for base in [0, 5] {
            for u in 0..5 {
                for v in u + 1..5 {
                    edges.push((base + u, base + v));
                }
            }
        }
        let g = Graph::from_edges(10, edges);
        let e = top_eigenvalues(&g, 3).unwrap();
        assert!(close(&e, &[4.0, 4.0, -1.0], 1e-9), "{e:?}");
    }

    #[test]
    fn sequential_matches_parallel() {
        let g = Graph::from_edges(
            60,
            (0..60).flat_map(|u| [(u, (u * 7 + 3) % 60), (u, (u * 11 + 5) % 60)]),
        );
        let par = top_eigenvalues(&g, 5).unwrap();
        let seq = top_eigenvalues_with(
            &g,
            5,
            &EigenOptions {
                execution: Execution::Sequential,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(par, seq);
    }
}
