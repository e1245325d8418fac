//! Seeded error patterns.
//!
//! The generator is SplitMix64 (Steele, Lea and Flood), seeded directly with the 64-bit
//! `--seed` value. A pattern of weight `t` on a word of length `n` over GF(q) draws, in order:
//!
//! 1. positions by a partial Fisher-Yates shuffle of `0..n`: for `i` in `0..t`, swap slot `i`
//!    with slot `i + next() % (n - i)`, then take the first `t` slots;
//! 2. one value per chosen position, in that order: `1 + next() % (q - 1)`.
//!
//! The modulo bias is accepted so that other implementations can reproduce patterns exactly.

use agcode::{Fe, Field, FieldVector};
use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

pub fn random_error(field: &Field, n: usize, weight: usize, seed: u64) -> FieldVector {
    assert!(weight <= n, "error weight {weight} exceeds length {n}");
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut slots: Vec<usize> = (0..n).collect();
    for i in 0..weight {
        let j = i + (rng.next_u64() % (n - i) as u64) as usize;
        slots.swap(i, j);
    }
    let q = field.order() as u64;
    let mut e = FieldVector::zeros(field, n);
    for &pos in &slots[..weight] {
        let code = 1 + (rng.next_u64() % (q - 1)) as u32;
        e.set(pos, Fe(code));
    }
    e
}
