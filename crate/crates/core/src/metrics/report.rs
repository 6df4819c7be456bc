use std::collections::BTreeMap;
use std::str::FromStr;

use super::{
    assortativity_profile, clustering_by_degree, core_decomposition, degree_distribution,
    top_eigenvalues_with, ClusteringClass, EigenOptions,
};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Metric {
    Degree,
    Clustering,
    Eigenvalues,
    Assortativity,
    Cores,
}

impl Metric {
    pub const ALL: [Metric; 5] = [
        Metric::Degree,
        Metric::Clustering,
        Metric::Eigenvalues,
        Metric::Assortativity,
        Metric::Cores,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Degree => "degree",
            Metric::Clustering => "cc",
            Metric::Eigenvalues => "eig",
            Metric::Assortativity => "assort",
            Metric::Cores => "core",
        }
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Metric::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown metric {s:?}")))
    }
}

/// Results of the requested metrics; unrequested ones stay `None`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MetricReport {
    pub degree_histogram: Option<BTreeMap<usize, usize>>,
    pub clustering: Option<BTreeMap<usize, ClusteringClass>>,
    pub top_eigenvalues: Option<Vec<f64>>,
    pub assortativity: Option<BTreeMap<usize, f64>>,
    pub core_sizes: Option<BTreeMap<usize, usize>>,
    pub core_numbers: Option<Vec<usize>>,
}

impl MetricReport {
    /// Computes `metrics`; `eigenvalues` is clamped to the vertex count.
    pub fn compute(
        g: &Graph,
        metrics: &[Metric],
        eigenvalues: usize,
        eigen: &EigenOptions,
    ) -> Result<Self> {
        let mut r = MetricReport::default();
        for m in metrics {
            match m {
                Metric::Degree => r.degree_histogram = Some(degree_distribution(g)),
                Metric::Clustering => r.clustering = Some(clustering_by_degree(g)),
                Metric::Eigenvalues => {
                    let k = eigenvalues.min(g.vertex_count());
                    r.top_eigenvalues = Some(top_eigenvalues_with(g, k, eigen)?);
                }
                Metric::Assortativity => r.assortativity = Some(assortativity_profile(g)),
                Metric::Cores => {
                    let c = core_decomposition(g);
                    r.core_sizes = Some(c.core_sizes);
                    r.core_numbers = Some(c.core_numbers);
                }
            }
        }
        Ok(r)
    }

    pub fn all(g: &Graph, eigenvalues: usize) -> Result<Self> {
        Self::compute(g, &Metric::ALL, eigenvalues, &EigenOptions::default())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompareOptions {
    /// Degree classes enter the clustering and assortativity gaps only when
    /// both graphs have at least this many vertices of that degree.
    pub min_class_vertices: usize,
}

impl Default for CompareOptions {
    fn default() -> Self {
        CompareOptions {
            min_class_vertices: 1,
        }
    }
}

/// Gap statistics between two reports. A field is `None` when either report
/// lacks the metric or there is nothing shared to compare.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Comparison {
    /// Max over shared degrees of `|cc_a(d) - cc_b(d)|`, and where it occurs.
    pub clustering_max_gap: Option<(usize, f64)>,
    /// `|a_r - b_r| / max(|a_r|, |b_r|)` for each shared rank.
    pub eigenvalue_relative_gaps: Vec<f64>,
    /// Max over shared `k` of `|a_k - b_k| / max(a_k, b_k)`.
    pub core_size_max_relative_gap: Option<f64>,
    /// Total variation distance between degree distributions of the
    /// non-isolated vertices.
    pub degree_tv_distance: Option<f64>,
    /// Max over shared degrees of `|X_a(d) - X_b(d)| / max(X_a(d), X_b(d))`.
    pub assortativity_max_relative_gap: Option<f64>,
}

impl Comparison {
    pub fn eigenvalue_max_relative_gap(&self) -> Option<f64> {
        self.eigenvalue_relative_gaps
            .iter()
            .copied()
            .reduce(f64::max)
    }

    /// True when every available statistic is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.clustering_max_gap.is_none_or(|(_, g)| g == 0.0)
            && self.eigenvalue_relative_gaps.iter().all(|&g| g == 0.0)
            && self.core_size_max_relative_gap.is_none_or(|g| g == 0.0)
            && self.degree_tv_distance.is_none_or(|g| g == 0.0)
            && self.assortativity_max_relative_gap.is_none_or(|g| g == 0.0)
    }
}

fn relative_gap(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn degree_tv(a: &BTreeMap<usize, usize>, b: &BTreeMap<usize, usize>) -> Option<f64> {
    let total = |h: &BTreeMap<usize, usize>| h.range(1..).map(|(_, &c)| c).sum::<usize>() as f64;
    let (ta, tb) = (total(a), total(b));
    if ta == 0.0 || tb == 0.0 {
        return None;
    }
    let mut degrees: Vec<usize> = a
        .keys()
        .chain(b.keys())
        .copied()
        .filter(|&d| d > 0)
        .collect();
    degrees.sort_unstable();
    degrees.dedup();
    let sum: f64 = degrees
        .iter()
        .map(|d| {
            let pa = a.get(d).copied().unwrap_or(0) as f64 / ta;
            let pb = b.get(d).copied().unwrap_or(0) as f64 / tb;
            (pa - pb).abs()
        })
        .sum();
    Some(0.5 * sum)
}

/// Per-metric gaps between two reports.
pub fn compare_reports(a: &MetricReport, b: &MetricReport, opts: &CompareOptions) -> Comparison {
    let mut out = Comparison::default();
    let class_size = |r: &MetricReport, d: usize| -> usize {
        r.degree_histogram
            .as_ref()
            .and_then(|h| h.get(&d).copied())
            .or_else(|| {
                r.clustering
                    .as_ref()
                    .and_then(|c| c.get(&d))
                    .map(|c| c.vertices)
            })
            .unwrap_or(0)
    };
    let populous = |d: usize| {
        class_size(a, d) >= opts.min_class_vertices && class_size(b, d) >= opts.min_class_vertices
    };

    if let (Some(ca), Some(cb)) = (&a.clustering, &b.clustering) {
        out.clustering_max_gap = ca
            .iter()
            .filter(|(d, x)| {
                x.vertices >= opts.min_class_vertices
                    && cb
                        .get(d)
                        .is_some_and(|y| y.vertices >= opts.min_class_vertices)
            })
            .map(|(&d, x)| (d, (x.mean - cb[&d].mean).abs()))
            .fold(None, |best: Option<(usize, f64)>, cur| match best {
                Some(b) if b.1 >= cur.1 => Some(b),
                _ => Some(cur),
            });
    }
    if let (Some(ea), Some(eb)) = (&a.top_eigenvalues, &b.top_eigenvalues) {
        out.eigenvalue_relative_gaps = ea
            .iter()
            .zip(eb)
            .map(|(&x, &y)| relative_gap(x, y))
            .collect();
    }
    if let (Some(ka), Some(kb)) = (&a.core_sizes, &b.core_sizes) {
        out.core_size_max_relative_gap = ka
            .iter()
            .filter_map(|(k, &x)| kb.get(k).map(|&y| relative_gap(x as f64, y as f64)))
            .reduce(f64::max);
    }
    if let (Some(ha), Some(hb)) = (&a.degree_histogram, &b.degree_histogram) {
        out.degree_tv_distance = degree_tv(ha, hb);
    }
    if let (Some(xa), Some(xb)) = (&a.assortativity, &b.assortativity) {
        out.assortativity_max_relative_gap = xa
            .iter()
            .filter(|(d, _)| populous(**d))
            .filter_map(|(d, &x)| xb.get(d).map(|&y| relative_gap(x, y)))
            .reduce(f64::max);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn self_comparison_is_zero() {
        let g = Graph::from_edges(
            8,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 3),
                (6, 7),
            ],
        );
        let r = MetricReport::all(&g, 4).unwrap();
        let c = compare_reports(&r, &r, &CompareOptions::default());
        assert!(c.is_zero(), "{c:?}");
        assert_eq!(c.clustering_max_gap.map(|x| x.1), Some(0.0));
        assert_eq!(c.eigenvalue_relative_gaps.len(), 4);
    }

    #[test]
    fn gaps_against_other_graph() {
        let a = MetricReport::all(&Graph::complete(4), 2).unwrap();
        let b = MetricReport::all(&Graph::cycle(4), 2).unwrap();
        let c = compare_reports(&a, &b, &CompareOptions::default());
        // No shared degree between K4 (3) and C4 (2).
        assert_eq!(c.clustering_max_gap, None);
        assert_eq!(c.degree_tv_distance, Some(1.0));
        // Leading eigenvalues 3 vs 2.
        assert!((c.eigenvalue_relative_gaps[0] - 1.0 / 3.0).abs() < 1e-9);
        assert_eq!(c.core_size_max_relative_gap, Some(0.0));
    }

    #[test]
    fn class_size_filter() {
        let a = MetricReport::all(&Graph::complete(3), 1).unwrap();
        let b = MetricReport::all(&Graph::cycle(5), 1).unwrap();
        let loose = compare_reports(&a, &b, &CompareOptions::default());
        assert_eq!(loose.clustering_max_gap, Some((2, 1.0)));
        let strict = compare_reports(
            &a,
            &b,
            &CompareOptions {
                min_class_vertices: 4,
            },
        );
        assert_eq!(strict.clustering_max_gap, None);
    }

    #[test]
    fn metric_names_round_trip() {
        for m in Metric::ALL {
            assert_eq!(m.name().parse::<Metric>().unwrap(), m);
        }
        assert!("nope".parse::<Metric>().is_err());
    }
}
