/// Gegenbauer polynomial `C_k^λ(x)` by the three-term recurrence.
///
/// At `λ = 0` the limit normalization `2 T_k(x)/k` is returned for `k ≥ 1`.
pub fn gegenbauer(k: usize, lambda: f64, x: f64) -> f64 {
    gegenbauer_all(k, lambda, x)[k]
}

/// `C_j^λ(x)` for `j = 0..=k`.
pub fn gegenbauer_all(k: usize, lambda: f64, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(k + 1);
    if lambda == 0.0 {
        // Chebyshev T recurrence, then 2 T_j / j
        let (mut t0, mut t1) = (1.0, x);
        out.push(1.0);
        for j in 1..=k {
            out.push(2.0 * t1 / j as f64);
            let t2 = 2.0 * x * t1 - t0;
            t0 = t1;
            t1 = t2;
        }
        return out;
    }
    out.push(1.0);
    if k >= 1 {
        out.push(2.0 * lambda * x);
    }
    for j in 2..=k {
        let jf = j as f64;
        let next = (2.0 * (jf + lambda - 1.0) * x * out[j - 1] - (jf + 2.0 * lambda - 2.0) * out[j - 2]) / jf;
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(gegenbauer(0, 0.7, 0.3), 1.0);
        assert_eq!(gegenbauer(1, 1.0, 0.5), 1.0);
        assert!(gegenbauer(2, 1.0, 0.5).abs() < 1e-16);
    }

    #[test]
    fn chebyshev_limit() {
        let x: f64 = 0.37;
        let th = x.acos();
        for k in 1..10 {
            let want = 2.0 * (k as f64 * th).cos() / k as f64;
            assert!((gegenbauer(k, 0.0, x) - want).abs() < 1e-14);
        }
    }

    #[test]
    fn legendre_case() {
        // λ = 1/2 gives Legendre P_3
        let x: f64 = 0.4;
        let want = 0.5 * (5.0 * x.powi(3) - 3.0 * x);
        assert!((gegenbauer(3, 0.5, x) - want).abs() < 1e-15);
    }
}
