//! Exact truncated power series and the three class equations.
//!
//! `H = z + zH + zH²`, `P = H + HP` and `X = P + HX` are each solved by
//! reading off one coefficient at a time from already known lower ones;
//! no radicals and no floating point anywhere.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `c_0 + c_1 z + ... + c_N z^N`, everything above `z^N` discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, 1)
    }

    /// The formal variable `z` (just `0` at order 0).
    pub fn z(order: usize) -> Self {
        Self::monomial(order, 1, 1)
    }

    pub fn monomial(order: usize, degree: usize, coeff: i64) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = BigInt::from(coeff);
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least c_0");
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn coeff_mut(&mut self, k: usize) -> &mut BigInt {
        &mut self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        TruncatedSeries {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * &k).collect(),
        }
    }

    pub fn pow(&self, exp: usize) -> Self {
        (0..exp).fold(Self::one(self.order()), |acc, _| &acc * self)
    }

    /// `1/(1 - S) = Σ_{i≥0} S^i`, which needs only additions and is finite
    /// modulo `z^(N+1)` because `S` has no constant term.
    pub fn geometric(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstant);
        }
        let mut sum = Self::one(self.order());
        let mut power = Self::one(self.order());
        for _ in 0..self.order() {
            power = &power * self;
            sum = &sum + &power;
        }
        Ok(sum)
    }
}

fn zip_with(
    a: &TruncatedSeries,
    b: &TruncatedSeries,
    f: impl Fn(&BigInt, &BigInt) -> BigInt,
) -> TruncatedSeries {
    let coeffs = a
        .coeffs
        .iter()
        .zip(&b.coeffs)
        .map(|(x, y)| f(x, y))
        .collect();
    TruncatedSeries { coeffs }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = TruncatedSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

fn check_order(order: usize, min: usize) -> Result<()> {
    if order < min {
        return Err(Error::SeriesOrder { min, got: order });
    }
    Ok(())
}

/// `Σ_{i=1}^{n-1} a_i b_{n-i}`.
fn inner_convolution(a: &[BigInt], b: &[BigInt], n: usize) -> BigInt {
    (1..n).map(|i| &a[i] * &b[n - i]).sum()
}

/// Half-pyramids by size: `h_1 = 1`, `h_n = h_{n-1} + Σ_{i=1}^{n-2} h_i h_{n-1-i}`.
pub fn series_h(order: usize) -> Result<TruncatedSeries> {
    check_order(order, 1)?;
    let mut h = vec![BigInt::zero(); order + 1];
    h[1] = BigInt::one();
    for n in 2..=order {
        h[n] = &h[n - 1] + inner_convolution(&h, &h, n - 1);
    }
    Ok(TruncatedSeries { coeffs: h })
}

/// Pyramids by size: `p_n = h_n + Σ_{i=1}^{n-1} h_i p_{n-i}`.
pub fn series_p(order: usize) -> Result<TruncatedSeries> {
    let h = series_h(order)?;
    Ok(solve_linear(&h, &h))
}

/// Xaviers by size: `x_n = p_n + Σ_{i=1}^{n-1} h_i x_{n-i}`.
pub fn series_x(order: usize) -> Result<TruncatedSeries> {
    let h = series_h(order)?;
    let p = solve_linear(&h, &h);
    Ok(solve_linear(&p, &h))
}

/// Solves `Y = A + H Y` coefficient by coefficient (both with `c_0 = 0`).
fn solve_linear(a: &TruncatedSeries, h: &TruncatedSeries) -> TruncatedSeries {
    let order = a.order();
    let mut y = vec![BigInt::zero(); order + 1];
    for n in 1..=order {
        y[n] = &a.coeffs[n] + inner_convolution(&h.coeffs, &y, n);
    }
    TruncatedSeries { coeffs: y }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub order: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.holds)
    }
}

pub const JEAN: &str = "H = z + zH + zH^2";
pub const JEAN_GUY: &str = "P = H + HP";
pub const XAVIER: &str = "X = P + HX";
pub const SQUARE: &str = "X(1-H)^2 = H";
pub const QUADRATIC: &str = "zH^2 = H - z - zH";
pub const RATIONAL: &str = "X(1-3z) = z";
pub const ADDITIVE: &str = "X = z + 3zX";
pub const GEOMETRIC_STEP: &str = "1/(1-H) = 1 + H/(1-H)";
pub const GEOMETRIC_SQUARE: &str = "1/(1-H)^2 = 1 + H/(1-H) + H/(1-H)^2";

/// Checks the whole identity chain for the series solved at `order`.
pub fn verify_identities(order: usize) -> Result<IdentityReport> {
    let h = series_h(order)?;
    let p = series_p(order)?;
    let x = series_x(order)?;
    verify_identities_for(&h, &p, &x)
}

/// Same checks for arbitrary candidate series (used for negative controls).
pub fn verify_identities_for(
    h: &TruncatedSeries,
    p: &TruncatedSeries,
    x: &TruncatedSeries,
) -> Result<IdentityReport> {
    let order = h.order().min(p.order()).min(x.order());
    let (h, p, x) = (h.truncate(order), p.truncate(order), x.truncate(order));
    let one = TruncatedSeries::one(order);
    let z = TruncatedSeries::z(order);

    let h2 = &h * &h;
    let zh = &z * &h;
    let zh2 = &z * &h2;
    let one_minus_h = &one - &h;

    let g = h.geometric()?;
    let g2 = &g * &g;
    let h_g = &h * &g;
    let h_g2 = &h * &g2;

    let equal = |a: &TruncatedSeries, b: &TruncatedSeries| a == b;
    let checks = vec![
        (JEAN, equal(&h, &(&(&z + &zh) + &zh2))),
        (JEAN_GUY, equal(&p, &(&h + &(&h * &p)))),
        (XAVIER, equal(&x, &(&p + &(&h * &x)))),
        (SQUARE, equal(&(&x * &(&one_minus_h * &one_minus_h)), &h)),
        (QUADRATIC, equal(&zh2, &(&(&h - &z) - &zh))),
        (RATIONAL, equal(&(&x - &(&z * &x).scale(3)), &z)),
        (ADDITIVE, equal(&x, &(&z + &(&z * &x).scale(3)))),
        (GEOMETRIC_STEP, equal(&g, &(&one + &h_g))),
        (GEOMETRIC_SQUARE, equal(&g2, &(&(&one + &h_g) + &h_g2))),
    ];
    Ok(IdentityReport {
        order,
        checks: checks
            .into_iter()
            .map(|(name, holds)| IdentityCheck { name, holds })
            .collect(),
    })
}
