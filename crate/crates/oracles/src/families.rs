//! Seeded families of tabulated potentials (piecewise-linear data) with
//! structural properties guaranteed by construction. Returned as plain
//! sample vectors so callers can build whatever potential type they use.

use crate::rng::SplitMix64;

/// Tabulated samples plus the structural facts that hold for them.
pub struct TabulatedFamily {
    pub xs: Vec<f64>,
    pub vs: Vec<f64>,
    /// true: non-increasing on the right half, false: non-decreasing
    pub non_increasing_right: bool,
}

/// Symmetric potential on (-r, r), monotone on (0, r), non-constant.
/// `index` selects the family member; the direction alternates.
pub fn symmetric_monotone_half(seed: u64, index: u64) -> TabulatedFamily {
    let mut rng = SplitMix64::new(seed ^ index.wrapping_mul(0x9E37_79B9));
    let r = rng.range(0.7, 1.8);
    let amplitude = rng.range(0.8, 4.0);
    let non_increasing_right = index % 2 == 0;
    let m = 32; // nodes on [0, r]
    // cumulative non-negative increments -> non-decreasing profile on [0, r]
    let mut g = vec![0.0f64; m + 1];
    for i in 1..=m {
        g[i] = g[i - 1] + rng.uniform();
    }
    let gmax = g[m];
    let dir = if non_increasing_right { -1.0 } else { 1.0 };
    let offset = rng.range(-1.0, 1.0);
    let mut xs = Vec::with_capacity(2 * m + 1);
    let mut vs = Vec::with_capacity(2 * m + 1);
    for i in 0..=(2 * m) {
        let x = -r + i as f64 * r / m as f64;
        let t = (x.abs() / r * m as f64).round() as usize;
        xs.push(x);
        vs.push(offset + dir * amplitude * g[t.min(m)] / gmax);
    }
    TabulatedFamily {
        xs,
        vs,
        non_increasing_right,
    }
}

/// Monotone potential on (0, L), non-constant.
pub fn monotone_on_interval(seed: u64, index: u64, non_increasing: bool) -> (Vec<f64>, Vec<f64>) {
    let mut rng = SplitMix64::new(seed ^ index.wrapping_mul(0x1234_5679));
    let l = rng.range(0.8, 2.5);
    let amplitude = rng.range(0.8, 4.0);
    let m = 48;
    let mut acc = 0.0;
    let mut xs = Vec::with_capacity(m + 1);
    let mut vs = Vec::with_capacity(m + 1);
    let offset = rng.range(-1.0, 1.0);
    for i in 0..=m {
        xs.push(i as f64 * l / m as f64);
        vs.push(offset + if non_increasing { -acc } else { acc });
        acc += rng.uniform() * amplitude / m as f64 * 4.0;
    }
    (xs, vs)
}

/// Bounded random potential without structural guarantees (smooth-ish
/// low-frequency Fourier profile sampled on a grid).
pub fn bounded_random(seed: u64, index: u64, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    let mut rng = SplitMix64::new(seed ^ index.wrapping_mul(0xBEEF_CAFE));
    let coeffs: Vec<(f64, f64)> = (1..=4)
        .map(|_| (rng.range(-1.5, 1.5), rng.range(-1.5, 1.5)))
        .collect();
    let m = 96;
    let mut xs = Vec::with_capacity(m + 1);
    let mut vs = Vec::with_capacity(m + 1);
    for i in 0..=m {
        let x = a + (b - a) * i as f64 / m as f64;
        let t = (x - a) / (b - a) * std::f64::consts::TAU;
        let mut v = 0.0;
        for (j, (cj, sj)) in coeffs.iter().enumerate() {
            let f = (j + 1) as f64;
            v += cj * (f * t).cos() + sj * (f * t).sin();
        }
        xs.push(x);
        vs.push(v);
    }
    (xs, vs)
}
