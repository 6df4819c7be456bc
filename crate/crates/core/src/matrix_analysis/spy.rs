use std::io::{self, Write};

use crate::error::{Error, Result};
use crate::models::EdgeList;

/// Edge counts over an `r x r` coarsening of the adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpyRaster {
    resolution: usize,
    counts: Vec<u64>,
}

impl SpyRaster {
    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.counts[row * self.resolution + col]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Sums of the four half-size quadrants, in generator order.
    pub fn quadrant_sums(&self) -> [u64; 4] {
        let h = self.resolution / 2;
        let mut q = [0u64; 4];
        for r in 0..self.resolution {
            for c in 0..self.resolution {
                q[2 * (r >= h) as usize + (c >= h) as usize] += self.get(r, c);
            }
        }
        q
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        for row in self.counts.chunks(self.resolution) {
            let line: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            writeln!(w, "{}", line.join(","))?;
        }
        Ok(())
    }

    /// Plain (P2) greymap; darker cells hold more edges on a log scale, and
    /// any nonempty cell is visibly non-white.
    pub fn write_pgm<W: Write>(&self, mut w: W) -> io::Result<()> {
        let max = self.counts.iter().copied().max().unwrap_or(0);
        writeln!(w, "P2\n{} {}\n255", self.resolution, self.resolution)?;
        let scale = ((max as f64) + 1.0).ln().max(f64::MIN_POSITIVE);
        for row in self.counts.chunks(self.resolution) {
            let line: Vec<String> = row
                .iter()
                .map(|&c| {
                    if c == 0 {
                        255
                    } else {
                        let shade = 200.0 * ((c as f64) + 1.0).ln() / scale;
                        200 - shade.round().min(200.0) as u32
                    }
                })
                .map(|v| v.to_string())
                .collect();
            writeln!(w, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Counts edges per cell of an `resolution x resolution` grid laid over the
/// `n x n` adjacency matrix (row = source, column = sink).
pub fn spy_raster(edges: &EdgeList, resolution: usize) -> Result<SpyRaster> {
    let n = edges.vertex_count();
    if resolution == 0 || !resolution.is_power_of_two() || resolution as u64 > n.max(1) {
        return Err(Error::InvalidArgument(format!(
            "spy resolution {resolution} must be a power of two no larger than {n}"
        )));
    }
    let cell = n.div_ceil(resolution as u64);
    let mut counts = vec![0u64; resolution * resolution];
    for &(u, v) in edges.edges() {
        counts[(u / cell) as usize * resolution + (v / cell) as usize] += 1;
    }
    Ok(SpyRaster { resolution, counts })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let e = EdgeList::new(4, vec![(0, 0)]).unwrap();
        let s = spy_raster(&e, 2).unwrap();
        assert_eq!(
            (s.get(0, 0), s.get(0, 1), s.get(1, 0), s.get(1, 1)),
            (1, 0, 0, 0)
        );
    }

    #[test]
    fn totals_and_exports() {
        let e = EdgeList::new(8, vec![(0, 7), (7, 0), (3, 4), (5, 5)]).unwrap();
        let s = spy_raster(&e, 4).unwrap();
        assert_eq!(s.total(), 4);
        assert_eq!(s.quadrant_sums(), [0, 2, 1, 1]);
        let mut csv = Vec::new();
        s.write_csv(&mut csv).unwrap();
        assert_eq!(String::from_utf8(csv).unwrap().lines().count(), 4);
        let mut pgm = Vec::new();
        s.write_pgm(&mut pgm).unwrap();
        assert!(String::from_utf8(pgm)
            .unwrap()
            .starts_with("P2\n4 4\n255\n"));
    }

    #[test]
    fn bad_resolution() {
        let e = EdgeList::new(4, vec![]).unwrap();
        assert!(spy_raster(&e, 3).is_err());
        assert!(spy_raster(&e, 8).is_err());
    }
}
