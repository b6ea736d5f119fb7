use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Generator keyed by `(seed, tag, path)`.
///
/// The seed picks the key and the hashed path picks the ChaCha stream, so
/// every node of a spec tree draws from its own independent sequence and
/// appending children leaves existing nodes untouched.
pub(crate) fn keyed_rng(seed: u64, tag: u64, path: &[usize]) -> ChaCha8Rng {
    let mut h = splitmix64(tag);
    for &i in path {
        h = splitmix64(h ^ (i as u64).wrapping_add(1));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(h);
    rng
}
