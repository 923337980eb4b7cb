//! Certified comparisons of integer degrees against real thresholds.
//!
//! Degree thresholds in this crate are either exact half-integers
//! (`(k-1)/2`, `a/2 - 1`) or carry an irrational surplus (`nu * sqrt(l-1)`).
//! When the computed threshold is exactly representable as a half-integer the
//! comparison is exact; otherwise the inequality must hold with a margin of
//! [`CERT_EPS`], so floating-point evaluation can never certify a case the
//! exact inequality would reject. Exact ties at half-integer thresholds
//! (common with `nu = 0` or perfect-square surpluses) are accepted, as they
//! should be.

/// Margin demanded from inexact threshold comparisons: 2^-40.
pub const CERT_EPS: f64 = 1.0 / (1u64 << 40) as f64;

fn as_exact_twice(threshold: f64) -> Option<i64> {
    let t2 = threshold * 2.0;
    if t2.fract() == 0.0 && t2.abs() < 9.0e15 {
        Some(t2 as i64)
    } else {
        None
    }
}

/// True iff an integer degree certifiably meets `deg >= threshold`.
pub fn degree_meets(deg: u64, threshold: f64) -> bool {
    match as_exact_twice(threshold) {
        Some(t2) => 2 * deg as i64 >= t2,
        None => deg as f64 >= threshold + CERT_EPS,
    }
}

/// True iff an integer degree certifiably fails `deg >= threshold`.
///
/// Exactly `!degree_meets(..)`: a vertex is a violator for the swap loop in
/// `bisect` precisely when it cannot be certified.
pub fn degree_violates(deg: u64, threshold: f64) -> bool {
    !degree_meets(deg, threshold)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_half_integer_ties_are_accepted() {
        assert!(degree_meets(2, 2.0));
        assert!(degree_meets(2, 1.5));
        assert!(!degree_meets(1, 1.5));
        // nu * sqrt(4) lands exactly on an integer: still exact.
        assert!(degree_meets(4, 2.0 + 1.0 * 4.0f64.sqrt()));
        assert!(!degree_meets(3, 2.0 + 1.0 * 4.0f64.sqrt()));
    }

    #[test]
    fn irrational_thresholds_require_margin() {
        let thr = 1.0 + 2.0f64.sqrt(); // ~2.414
        assert!(degree_meets(3, thr));
        assert!(!degree_meets(2, thr));
        // A degree epsilon-close below an inexact threshold is rejected.
        assert!(degree_violates(2, 2.0 + 1e-13));
    }

    #[test]
    fn negative_thresholds() {
        assert!(degree_meets(0, -1.0));
        assert!(degree_meets(0, -0.5));
        assert!(degree_meets(0, 0.0));
    }
}
