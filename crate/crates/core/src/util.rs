//! Small shared helpers: complex constructors, admissibility predicates and a
//! deterministic pseudo-random generator for sampling-style checks.

use num_complex::Complex64;

/// Shorthand complex constructor.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Real number as a complex value.
#[inline]
pub fn cr(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Complex division by Smith's algorithm. num_complex divides through
/// conj/norm_sqr, which under/overflows once |den| leaves ~[1e-150, 1e150];
/// this stays exact down to the 1e-300 continued-fraction guard.
#[inline]
pub fn cdiv(num: Complex64, den: Complex64) -> Complex64 {
    if den.re.abs() >= den.im.abs() {
        let r = den.im / den.re;
        let t = den.re + den.im * r;
        Complex64::new((num.re + num.im * r) / t, (num.im - num.re * r) / t)
    } else {
        let r = den.re / den.im;
        let t = den.re * r + den.im;
        Complex64::new((num.re * r + num.im) / t, (num.im * r - num.re) / t)
    }
}

/// Distance from `z` to the nearest integer (complex distance).
pub fn dist_to_integer(z: Complex64) -> f64 {
    let n = z.re.round();
    (z - cr(n)).norm()
}

/// Distance from `z` to the nearest half-integer lattice point (n/2).
pub fn dist_to_half_integer_lattice(z: Complex64) -> f64 {
    let n2 = (2.0 * z.re).round();
    (z - cr(n2 / 2.0)).norm()
}

/// Nearest integer to `z` when `z` is within `tol` of one.
pub fn nearest_integer(z: Complex64, tol: f64) -> Option<i64> {
    let n = z.re.round();
    if (z - cr(n)).norm() < tol && n.abs() < 4.6e18 {
        Some(n as i64)
    } else {
        None
    }
}

/// True when `z` is within `tol` of a non-positive integer.
pub fn is_nonpositive_integer(z: Complex64, tol: f64) -> bool {
    matches!(nearest_integer(z, tol), Some(n) if n <= 0)
}

/// SplitMix64: tiny deterministic generator for randomized-but-reproducible
/// parameter sampling in tests and verification sweeps.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in [lo, hi).
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Complex with both parts uniform in [lo, hi).
    pub fn complex_in(&mut self, lo: f64, hi: f64) -> Complex64 {
        let re = self.uniform(lo, hi);
        let im = self.uniform(lo, hi);
        c64(re, im)
    }
}
