use rand::Rng;

use crate::error::{Error, Result};

/// Walker/Vose alias table: O(n) construction, O(1) per draw.
#[derive(Clone, Debug)]
pub struct AliasTable {
    accept: Vec<f64>,
    alias: Vec<u32>,
}

impl AliasTable {
    /// Weights need not be normalised. At most `u32::MAX` outcomes.
    pub fn new(weights: &[f64]) -> Result<Self> {
        let n = weights.len();
        if n > u32::MAX as usize {
            return Err(Error::InvalidArgument(
                "too many outcomes for alias table".into(),
            ));
        }
        if weights.iter().any(|w| !(w.is_finite() && *w >= 0.0)) {
            return Err(Error::InvalidDegrees(
                "weights must be finite and nonnegative".into(),
            ));
        }
        let total: f64 = weights.iter().sum();
        if n == 0 || total <= 0.0 {
            return Err(Error::ZeroTotalWeight);
        }

        let scale = n as f64 / total;
        let mut accept: Vec<f64> = weights.iter().map(|w| w * scale).collect();
        let mut alias: Vec<u32> = (0..n as u32).collect();
        let (mut small, mut large): (Vec<u32>, Vec<u32>) =
            (0..n as u32).partition(|&i| accept[i as usize] < 1.0);

        while let (Some(&s), Some(&l)) = (small.last(), large.last()) {
            small.pop();
            alias[s as usize] = l;
            let rest = accept[l as usize] - (1.0 - accept[s as usize]);
            accept[l as usize] = rest;
            if rest < 1.0 {
                large.pop();
                small.push(l);
            }
        }
        // Leftovers are 1 up to rounding.
        for i in large.into_iter().chain(small) {
            accept[i as usize] = 1.0;
        }
        Ok(AliasTable { accept, alias })
    }

    pub fn len(&self) -> usize {
        self.accept.len()
    }

    pub fn is_empty(&self) -> bool {
        self.accept.is_empty()
    }

    #[inline]
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        let i = rng.random_range(0..self.accept.len());
        if rng.random::<f64>() < self.accept[i] {
            i
        } else {
            self.alias[i] as usize
        }
    }

    /// Probability of outcome `i` implied by the table.
    pub fn probability(&self, i: usize) -> f64 {
        let n = self.accept.len() as f64;
        let mut p = self.accept[i];
        for (j, &a) in self.alias.iter().enumerate() {
            if a as usize == i && j != i {
                p += 1.0 - self.accept[j];
            }
        }
        p / n
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream_rng;

    #[test]
    fn table_reproduces_weights() {
        let w = [1.0, 0.0, 3.0, 6.0, 0.5, 9.5];
        let t = AliasTable::new(&w).unwrap();
        let total: f64 = w.iter().sum();
        for (i, wi) in w.iter().enumerate() {
            assert!((t.probability(i) - wi / total).abs() < 1e-12, "outcome {i}");
        }
    }

    #[test]
    fn sampling_frequencies() {
        let w = [2.0, 1.0, 0.0, 7.0];
        let t = AliasTable::new(&w).unwrap();
        let mut rng = stream_rng(5, 0);
        let draws = 200_000;
        let mut counts = [0usize; 4];
        for _ in 0..draws {
            counts[t.sample(&mut rng)] += 1;
        }
        assert_eq!(counts[2], 0);
        for (i, wi) in w.iter().enumerate() {
            let p = wi / 10.0;
            let sd = (draws as f64 * p * (1.0 - p)).sqrt();
            assert!((counts[i] as f64 - draws as f64 * p).abs() <= 5.0 * sd + 1e-9);
        }
    }

    #[test]
    fn rejects_degenerate() {
        assert!(matches!(AliasTable::new(&[]), Err(Error::ZeroTotalWeight)));
        assert!(matches!(
            AliasTable::new(&[0.0, 0.0]),
            Err(Error::ZeroTotalWeight)
        ));
        assert!(AliasTable::new(&[1.0, -1.0]).is_err());
    }
}
