use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Seed for a single generator run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seed(pub u64);

impl Seed {
    pub(crate) fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    /// Derives an independent child seed.
    ///
    /// The child is the first output word of a ChaCha8 keyed by the parent
    /// seed, on stream `stream`. Different streams never share keystream, so
    /// `(model_index << 32) | run_index` gives each run its own seed.
    pub fn child(self, stream: u64) -> Seed {
        let mut rng = self.rng();
        rng.set_stream(stream);
        Seed(rng.next_u64())
    }
}

impl From<u64> for Seed {
    fn from(value: u64) -> Self {
        Seed(value)
    }
}
