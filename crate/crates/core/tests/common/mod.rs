#![allow(dead_code)]

use e0_extremal::channel::BinaryChannel;
use e0_extremal::verify::{random_channel, random_symmetric_channel};

/// `|a - b| <= rel |b| + abs`.
pub fn close(a: f64, b: f64, rel: f64, abs: f64) -> bool {
    (a - b).abs() <= rel * b.abs() + abs
}

/// Rounding noise of a central difference with step `h` on a function of
/// order one.
pub fn diff_floor(h: f64) -> f64 {
    4.0 * f64::EPSILON / h
}

/// A mix of symmetric and asymmetric random channels.
pub fn channels(n: usize, seed: u64) -> Vec<BinaryChannel> {
    (0..n)
        .map(|i| {
            let s = seed.wrapping_mul(1000).wrapping_add(i as u64);
            if i % 2 == 0 {
                random_channel(s, 2 + i % 15).unwrap()
            } else {
                random_symmetric_channel(s, 1 + i % 8).unwrap()
            }
        })
        .collect()
}
