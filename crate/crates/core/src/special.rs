//! Generalized hypergeometric series `₀F_r`.

/// `₀F_r(b₁, …, b_r; x) = Σₙ xⁿ / (n! (b₁)ₙ ⋯ (b_r)ₙ)` for `x ≥ 0` and positive
/// lower parameters, summed term by term until the relative term size
/// drops below `1e-16`.  An empty `b` gives `eˣ`.
pub fn hypergeometric_0f(b: &[f64], x: f64) -> f64 {
    debug_assert!(x >= 0.0 && b.iter().all(|&v| v > 0.0));
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut n = 0.0;
    loop {
        let denom = (n + 1.0) * b.iter().map(|&bi| bi + n).product::<f64>();
        term *= x / denom;
        sum += term;
        n += 1.0;
        // the ratio is eventually decreasing; stop once past the peak
        if term <= 1e-16 * sum && x / ((n + 1.0) * b.iter().map(|&bi| bi + n).product::<f64>()) < 1.0 {
            return sum;
        }
        if !sum.is_finite() {
            return sum;
        }
    }
}
