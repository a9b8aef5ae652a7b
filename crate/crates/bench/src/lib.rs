//! Shared fixtures for the benchmarks in `benches/`.

use rootzone::fuzz::{Family, FuzzConfig, Generator};
use rootzone::MonicPolynomial;

/// Degrees the benchmarks sweep over.
pub const DEGREES: [usize; 4] = [3, 8, 15, 40];

/// A fixed complex-coefficient polynomial of degree `n`.
pub fn fixture(n: usize) -> MonicPolynomial {
    Generator::new(FuzzConfig {
        seed: 0x5eed ^ n as u64,
        ..FuzzConfig::default()
    })
    .sample(Family::Complex, n)
}
