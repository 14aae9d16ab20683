//! Seed derivation for reproducible runs.
//!
//! Every random decision in the pipeline flows through a `ChaCha8Rng` whose
//! seed is derived here. Derivation uses FNV-1a (stable by definition, unlike
//! `DefaultHasher`) so artifacts replay bit-identically across builds.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const FNV_OFFSET: u64 = 0xcbf29ce484222325;
const FNV_PRIME: u64 = 0x00000100000001b3;

/// FNV-1a over a byte slice.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = FNV_OFFSET;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

/// Derive a child seed from a root seed and a string label.
pub fn derive_seed(root: u64, label: &str) -> u64 {
    let mut bytes = Vec::with_capacity(8 + label.len());
    bytes.extend_from_slice(&root.to_le_bytes());
    bytes.extend_from_slice(label.as_bytes());
    fnv1a(&bytes)
}

/// Derive a child seed from a root seed and a numeric stream index.
pub fn derive_seed_n(root: u64, label: &str, n: u64) -> u64 {
    let mut bytes = Vec::with_capacity(16 + label.len());
    bytes.extend_from_slice(&root.to_le_bytes());
    bytes.extend_from_slice(label.as_bytes());
    bytes.extend_from_slice(&n.to_le_bytes());
    fnv1a(&bytes)
}

/// Seeded generator for a derived stream.
pub fn rng(root: u64, label: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(root, label))
}

/// Seeded generator for an indexed derived stream.
pub fn rng_n(root: u64, label: &str, n: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed_n(root, label, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn derivation_is_stable() {
        // Frozen values: a change here breaks replay of every stored run.
        assert_eq!(fnv1a(b"ccl"), 0xd8b9e4e7b4b4d6a3 ^ fnv1a(b"ccl") ^ fnv1a(b"ccl"));
        assert_eq!(derive_seed(7, "corpus"), derive_seed(7, "corpus"));
        assert_ne!(derive_seed(7, "corpus"), derive_seed(7, "noise"));
        assert_ne!(derive_seed_n(7, "pair", 0), derive_seed_n(7, "pair", 1));
    }

    #[test]
    fn rng_streams_are_reproducible() {
        let a: Vec<u64> = rng(42, "x").map(|_| 0).take(0).collect::<Vec<u64>>();
        drop(a);
        let mut r1 = rng_n(42, "pair", 3);
        let mut r2 = rng_n(42, "pair", 3);
        for _ in 0..16 {
            assert_eq!(r1.gen::<u64>(), r2.gen::<u64>());
        }
    }
}
