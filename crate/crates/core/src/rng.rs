use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Stream id reserved for per-level noise draws; edge chunks use ids `0..chunks`.
pub(crate) const NOISE_STREAM: u64 = u64::MAX;
/// Stream id for eigensolver start vectors.
pub(crate) const EIGEN_STREAM: u64 = u64::MAX - 1;

/// Independent random stream for `(seed, stream)`. ChaCha is counter based, so
/// streams never overlap and the result does not depend on scheduling.
pub(crate) fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
