//! Special functions used by the wavefunction construction.

pub use statrs::function::gamma::ln_gamma;

/// Generalized Laguerre polynomial L_n^{(order)}(x) by the three-term recurrence
/// k·L_k = (2k − 1 + order − x)·L_{k−1} − (k − 1 + order)·L_{k−2}.
pub fn laguerre(n: u32, order: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + order - x;
    for k in 2..=n {
        let k = f64::from(k);
        let next = ((2.0 * k - 1.0 + order - x) * cur - (k - 1.0 + order) * prev) / k;
        prev = cur;
        cur = next;
    }
    cur
}

/// ln Γ(x + 1), i.e. ln x! extended to real x > −1.
pub fn ln_factorial(x: f64) -> f64 {
    ln_gamma(x + 1.0)
}
