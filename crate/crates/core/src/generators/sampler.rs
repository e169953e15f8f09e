//! Dynamic weighted sampling over node indices (Fenwick tree).

use rand::Rng;

/// Rejection attempts before falling back to an exhaustive scan.
const REJECTION_TRIES: usize = 48;

#[derive(Debug, Clone, Default)]
pub(crate) struct WeightedSampler {
    tree: Vec<f64>,
    weights: Vec<f64>,
}

impl WeightedSampler {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    fn prefix(&self, mut end: usize) -> f64 {
        let mut sum = 0.0;
        while end > 0 {
            sum += self.tree[end - 1];
            end &= end - 1;
        }
        sum
    }

    pub fn total(&self) -> f64 {
        self.prefix(self.weights.len())
    }

    pub fn push(&mut self, weight: f64) {
        debug_assert!(weight >= 0.0);
        let i = self.weights.len() + 1;
        let low = i & i.wrapping_neg();
        // Node i covers (i - low, i].
        let covered = self.prefix(i - 1) - self.prefix(i - low);
        self.tree.push(covered + weight);
        self.weights.push(weight);
    }

    pub fn set(&mut self, i: usize, weight: f64) {
        debug_assert!(weight >= 0.0);
        let delta = weight - self.weights[i];
        if delta == 0.0 {
            return;
        }
        self.weights[i] = weight;
        let mut j = i + 1;
        while j <= self.tree.len() {
            self.tree[j - 1] += delta;
            j += j & j.wrapping_neg();
        }
    }

    /// Draws an index with probability proportional to its weight.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Option<usize> {
        let n = self.weights.len();
        let total = self.total();
        if n == 0 || total <= 0.0 {
            return None;
        }
        let mut rem = rng.gen::<f64>() * total;
        let mut pos = 0;
        let mut step = n.next_power_of_two();
        while step > 0 {
            let next = pos + step;
            if next <= n && self.tree[next - 1] <= rem {
                pos = next;
                rem -= self.tree[next - 1];
            }
            step >>= 1;
        }
        // Rounding can walk past the last positive weight.
        let mut pos = pos.min(n - 1);
        while self.weights[pos] <= 0.0 {
            if pos == 0 {
                return self.weights.iter().position(|&w| w > 0.0);
            }
            pos -= 1;
        }
        Some(pos)
    }

    /// Draws an index proportionally to weight among those satisfying
    /// `accept`. Returns `None` when no positive-weight index is acceptable.
    pub fn sample_where<R, F>(&self, rng: &mut R, accept: F) -> Option<usize>
    where
        R: Rng,
        F: Fn(usize) -> bool,
    {
        for _ in 0..REJECTION_TRIES {
            let i = self.sample(rng)?;
            if accept(i) {
                return Some(i);
            }
        }
        let candidates: Vec<usize> = (0..self.weights.len())
            .filter(|&i| self.weights[i] > 0.0 && accept(i))
            .collect();
        let total: f64 = candidates.iter().map(|&i| self.weights[i]).sum();
        if candidates.is_empty() || total <= 0.0 {
            return None;
        }
        let mut rem = rng.gen::<f64>() * total;
        for &i in &candidates {
            rem -= self.weights[i];
            if rem < 0.0 {
                return Some(i);
            }
        }
        candidates.last().copied()
    }
}
