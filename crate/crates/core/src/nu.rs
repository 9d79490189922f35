//! Nikiforov-Uvarov reduction for equations of hypergeometric type
//!
//! ```text
//! ψ″(s) + τ̃(s)/σ(s) ψ′(s) + σ̃(s)/σ²(s) ψ(s) = 0
//! ```
//!
//! with σ, σ̃ of degree ≤ 2 and τ̃ of degree ≤ 1. Writing ψ = φ·y with
//! φ′/φ = π/σ leaves σy″ + τy′ + λy = 0, where
//!
//! ```text
//! π = (σ′ − τ̃)/2 ± √(((σ′ − τ̃)/2)² − σ̃ + kσ),   τ = τ̃ + 2π,   λ = k + π′
//! ```
//!
//! and k is fixed by requiring the radicand to be a perfect square. Polynomial
//! solutions exist when λ = λₙ = −nτ′ − n(n−1)σ″/2.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Relative tolerance on the radicand discriminant for a perfect square.
pub const PERFECT_SQUARE_RTOL: f64 = 1e-10;

/// Real polynomial c0 + c1·s + c2·s².
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Poly2 {
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
}

impl Poly2 {
    pub const ZERO: Poly2 = Poly2 {
        c0: 0.0,
        c1: 0.0,
        c2: 0.0,
    };

    pub const fn new(c0: f64, c1: f64, c2: f64) -> Self {
        Self { c0, c1, c2 }
    }

    pub const fn constant(c0: f64) -> Self {
        Self::new(c0, 0.0, 0.0)
    }

    pub const fn linear(c0: f64, c1: f64) -> Self {
        Self::new(c0, c1, 0.0)
    }

    /// Highest index with a nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.c2 != 0.0 {
            Some(2)
        } else if self.c1 != 0.0 {
            Some(1)
        } else if self.c0 != 0.0 {
            Some(0)
        } else {
            None
        }
    }

    pub fn eval(&self, s: f64) -> f64 {
        (self.c2 * s + self.c1) * s + self.c0
    }

    pub fn derivative(&self) -> Poly2 {
        Poly2::linear(self.c1, 2.0 * self.c2)
    }

    pub fn scale(&self, k: f64) -> Poly2 {
        Poly2::new(k * self.c0, k * self.c1, k * self.c2)
    }

    /// Product of two polynomials of degree ≤ 1.
    pub fn mul_linear(&self, other: &Poly2) -> Result<Poly2> {
        if self.c2 != 0.0 || other.c2 != 0.0 {
            return Err(Error::UnsupportedForm(
                "product would exceed degree 2".into(),
            ));
        }
        Ok(Poly2::new(
            self.c0 * other.c0,
            self.c0 * other.c1 + self.c1 * other.c0,
            self.c1 * other.c1,
        ))
    }

    /// c1² − 4·c0·c2.
    pub fn discriminant(&self) -> f64 {
        self.c1 * self.c1 - 4.0 * self.c0 * self.c2
    }

    /// Real roots, ascending. Empty for constants and for complex pairs.
    pub fn real_roots(&self) -> Vec<f64> {
        match self.degree() {
            Some(2) => {
                let d = self.discriminant();
                if d < 0.0 {
                    return Vec::new();
                }
                let q = -0.5 * (self.c1 + self.c1.signum() * d.sqrt());
                let mut r = if q == 0.0 {
                    vec![0.0, 0.0]
                } else {
                    vec![q / self.c2, self.c0 / q]
                };
                r.sort_by(f64::total_cmp);
                r
            }
            Some(1) => vec![-self.c0 / self.c1],
            _ => Vec::new(),
        }
    }
}

impl Add for Poly2 {
    type Output = Poly2;
    fn add(self, o: Poly2) -> Poly2 {
        Poly2::new(self.c0 + o.c0, self.c1 + o.c1, self.c2 + o.c2)
    }
}

impl Sub for Poly2 {
    type Output = Poly2;
    fn sub(self, o: Poly2) -> Poly2 {
        Poly2::new(self.c0 - o.c0, self.c1 - o.c1, self.c2 - o.c2)
    }
}

impl Neg for Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        self.scale(-1.0)
    }
}

impl Mul<Poly2> for f64 {
    type Output = Poly2;
    fn mul(self, p: Poly2) -> Poly2 {
        p.scale(self)
    }
}

/// The (σ, σ̃, τ̃) triple of a hypergeometric-type equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuProblem {
    pub sigma: Poly2,
    pub sigma_tilde: Poly2,
    pub tau_tilde: Poly2,
}

impl NuProblem {
    pub fn new(sigma: Poly2, sigma_tilde: Poly2, tau_tilde: Poly2) -> Result<Self> {
        if sigma.degree().is_none() {
            return Err(Error::UnsupportedForm("sigma must be nonzero".into()));
        }
        if tau_tilde.c2 != 0.0 {
            return Err(Error::UnsupportedForm(
                "tau_tilde must have degree <= 1".into(),
            ));
        }
        Ok(Self {
            sigma,
            sigma_tilde,
            tau_tilde,
        })
    }

    /// σ = s, τ̃ = 1, σ̃ = −ε₁² + ε₂s − ε₃s²: the Morse radial equation in s = e^{−αx}.
    pub fn morse(eps1: f64, eps2: f64, eps3: f64) -> Self {
        Self {
            sigma: Poly2::linear(0.0, 1.0),
            sigma_tilde: Poly2::new(-eps1 * eps1, eps2, -eps3),
            tau_tilde: Poly2::constant(1.0),
        }
    }

    /// (σ′ − τ̃)/2
    fn half_shift(&self) -> Poly2 {
        (self.sigma.derivative() - self.tau_tilde).scale(0.5)
    }

    /// The quadratic under the square root for a given k.
    pub fn radicand(&self, k: f64) -> Result<Poly2> {
        let h = self.half_shift();
        Ok(h.mul_linear(&h)? - self.sigma_tilde + self.sigma.scale(k))
    }
}

/// One resolved (k, ±) choice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuBranch {
    pub k: f64,
    /// +1 or −1: the sign in front of the square root.
    pub sign: f64,
    pub pi_poly: Poly2,
    pub tau: Poly2,
    pub lambda: f64,
    /// τ′ < 0.
    pub tau_decreasing: bool,
    /// φ = exp∫π/σ stays bounded at every real zero of σ.
    pub regular: bool,
}

impl NuBranch {
    pub fn admissible(&self) -> bool {
        self.tau_decreasing && self.regular
    }

    pub fn tau_prime(&self) -> f64 {
        self.tau.c1
    }
}

/// Relative discriminant of the radicand: |b² − 4ac| / max(b², |4ac|).
pub fn radicand_residual(q: &Poly2) -> f64 {
    let b2 = q.c1 * q.c1;
    let ac4 = 4.0 * q.c0 * q.c2;
    let scale = b2.abs().max(ac4.abs());
    if scale == 0.0 {
        0.0
    } else {
        (b2 - ac4).abs() / scale
    }
}

/// Every real k for which the radicand is the square of a real polynomial.
pub fn k_candidates(p: &NuProblem) -> Result<Vec<f64>> {
    // radicand = A(k)s² + B(k)s + C(k), each linear in k
    let base = p.radicand(0.0)?;
    let (a0, b0, c0) = (base.c2, base.c1, base.c0);
    let (s0, s1, s2) = (p.sigma.c0, p.sigma.c1, p.sigma.c2);

    // B(k)² − 4A(k)C(k) = qa·k² + qb·k + qc
    let qa = s1 * s1 - 4.0 * s0 * s2;
    let qb = 2.0 * b0 * s1 - 4.0 * (a0 * s0 + c0 * s2);
    let qc = b0 * b0 - 4.0 * a0 * c0;

    let mut ks = if qa != 0.0 {
        // discriminant of the k-quadratic, expanded so the leading terms cancel symbolically
        let d16 = a0 * a0 * s0 * s0 + c0 * c0 * s2 * s2
            - b0 * s1 * (a0 * s0 + c0 * s2)
            - 2.0 * a0 * c0 * s0 * s2
            + s1 * s1 * a0 * c0
            + s0 * s2 * b0 * b0;
        if d16 < 0.0 {
            return Err(Error::NoPerfectSquare);
        }
        let root = 4.0 * d16.sqrt();
        vec![(-qb - root) / (2.0 * qa), (-qb + root) / (2.0 * qa)]
    } else if qb != 0.0 {
        vec![-qc / qb]
    } else if qc == 0.0 {
        // every k works; k = 0 is the canonical choice
        vec![0.0]
    } else {
        return Err(Error::NoPerfectSquare);
    };

    ks.dedup();
    // a real square root also needs a nonnegative leading (or constant) coefficient
    ks.retain(|&k| match p.radicand(k) {
        Ok(q) if q.c2 != 0.0 => q.c2 > 0.0,
        Ok(q) => q.c0 >= 0.0,
        Err(_) => false,
    });
    if ks.is_empty() {
        return Err(Error::NoPerfectSquare);
    }
    Ok(ks)
}

/// √q for a perfect-square quadratic, taken with nonnegative leading coefficient.
fn perfect_square_root(q: &Poly2) -> Poly2 {
    if q.c2 > 0.0 {
        let lead = q.c2.sqrt();
        Poly2::linear(q.c1 / (2.0 * lead), lead)
    } else {
        Poly2::constant(q.c0.max(0.0).sqrt())
    }
}

fn is_regular(p: &NuProblem, pi_poly: &Poly2) -> bool {
    let ds = p.sigma.derivative();
    p.sigma.real_roots().into_iter().all(|s0| {
        let slope = ds.eval(s0);
        slope == 0.0 || pi_poly.eval(s0) / slope >= 0.0
    })
}

/// All (k, ±) branches, each flagged. Fails when none is admissible.
pub fn resolve_branches(p: &NuProblem) -> Result<Vec<NuBranch>> {
    let h = p.half_shift();
    let mut out: Vec<NuBranch> = Vec::with_capacity(4);
    for k in k_candidates(p)? {
        let root = perfect_square_root(&p.radicand(k)?);
        for sign in [1.0, -1.0] {
            let pi_poly = h + root.scale(sign);
            if out.iter().any(|b| b.k == k && b.pi_poly == pi_poly) {
                continue;
            }
            let tau = p.tau_tilde + pi_poly.scale(2.0);
            out.push(NuBranch {
                k,
                sign,
                pi_poly,
                tau,
                lambda: k + pi_poly.c1,
                tau_decreasing: tau.c1 < 0.0,
                regular: is_regular(p, &pi_poly),
            });
        }
    }
    if !out.iter().any(NuBranch::admissible) {
        return Err(Error::NoAdmissibleBranch);
    }
    Ok(out)
}

/// The admissible branches only, in resolution order.
pub fn admissible_branches(p: &NuProblem) -> Result<Vec<NuBranch>> {
    Ok(resolve_branches(p)?
        .into_iter()
        .filter(NuBranch::admissible)
        .collect())
}

/// λₙ = −n·τ′ − n(n−1)/2·σ″.
pub fn quantization(branch: &NuBranch, p: &NuProblem, n: u32) -> f64 {
    let n = f64::from(n);
    let sigma2 = 2.0 * p.sigma.c2;
    -n * branch.tau_prime() - n * (n - 1.0) / 2.0 * sigma2
}

/// ρ(s) = s^power · e^{rate·s}, the solution of (σρ)′ = τρ for σ = s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightExponents {
    pub power: f64,
    pub rate: f64,
}

impl WeightExponents {
    pub fn eval(&self, s: f64) -> f64 {
        s.powf(self.power) * (self.rate * s).exp()
    }
}

pub fn weight_function_exponents(branch: &NuBranch, p: &NuProblem) -> Result<WeightExponents> {
    if p.sigma != Poly2::linear(0.0, 1.0) {
        return Err(Error::UnsupportedForm(
            "weight solver only handles sigma = s".into(),
        ));
    }
    // s ρ′ + ρ = τ ρ  ⇒  ρ′/ρ = (τ₀ − 1)/s + τ₁
    let w = WeightExponents {
        power: branch.tau.c0 - 1.0,
        rate: branch.tau.c1,
    };
    if w.power == 0.0 && w.rate == 0.0 {
        return Err(Error::Domain(
            "degenerate weight function (rho constant)".into(),
        ));
    }
    Ok(w)
}

/// The s-exponent as printed in the literature form ρ = s^{1+2ε₁}e^{−2√ε₃ s}
/// for the Morse instance. Kept for comparison with [`weight_function_exponents`].
pub fn printed_weight_power(eps1: f64) -> f64 {
    1.0 + 2.0 * eps1
}
