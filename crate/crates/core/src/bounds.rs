//! Closed-form lower bounds on the intersection number.
//!
//! For a connected graph with `n` vertices and `m` edges, `ν = m - n + 1`:
//!
//! * `l = (ν²/(n-1) - ν) / 2` is the minimum of `Σ C(x_i, 2)` subject to
//!   `Σ x_i = ν` over `n - 1` real coordinates, attained at the equal split.
//! * `l̂ = (n-1)·C(q,2) + q·r` with `2ν = q(n-1) + r`, the value of the star
//!   formula on a graph whose non-hub degrees are as equal as possible.
//!
//! All arithmetic is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn check_range(n: u64, m: u64) -> Result<()> {
    let max = (n as u128) * (n.saturating_sub(1) as u128) / 2;
    if n < 2 || m + 1 < n || (m as u128) > max {
        return Err(Error::OutOfRange { n, m });
    }
    Ok(())
}

/// `C(x, 2)` over the rationals.
fn choose2_rat(x: &BigRational) -> BigRational {
    x * (x - BigRational::from_integer(1.into())) / rat(2)
}

/// `½(ν²/(n-1) - ν)`, possibly negative.
pub fn lower_bound_l(n: u64, m: u64) -> Result<BigRational> {
    check_range(n, m)?;
    let nu = BigInt::from(m + 1 - n);
    let nm1 = BigInt::from(n - 1);
    let nu_r = BigRational::from_integer(nu.clone());
    Ok((BigRational::new(&nu * &nu, nm1) - nu_r) / rat(2))
}

/// `l̂` together with its parameters and the split form
/// `(n-1-r)·C(q,2) + r·C(q+1,2)` computed independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LHat {
    pub q: u64,
    pub r: u64,
    pub value: u64,
    pub split_form: u64,
}

pub fn lower_bound_l_hat(n: u64, m: u64) -> Result<LHat> {
    check_range(n, m)?;
    let nu = (m + 1 - n) as u128;
    let nm1 = (n - 1) as u128;
    let (q, r) = (2 * nu / nm1, 2 * nu % nm1);
    let c2 = |x: u128| x * x.saturating_sub(1) / 2;
    let value = nm1 * c2(q) + q * r;
    let split_form = (nm1 - r) * c2(q) + r * c2(q + 1);
    let fit = |x: u128| {
        u64::try_from(x).map_err(|_| Error::InvalidParameter(format!("l_hat overflow at n={n}")))
    };
    Ok(LHat {
        q: fit(q)?,
        r: fit(r)?,
        value: fit(value)?,
        split_form: fit(split_form)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: u64,
    pub m: u64,
    pub nu: u64,
    pub q: u64,
    pub r: u64,
    pub l: BigRational,
    pub l_hat: u64,
}

impl BoundsReport {
    pub fn new(n: u64, m: u64) -> Result<Self> {
        let l = lower_bound_l(n, m)?;
        let lh = lower_bound_l_hat(n, m)?;
        Ok(BoundsReport {
            n,
            m,
            nu: m + 1 - n,
            q: lh.q,
            r: lh.r,
            l,
            l_hat: lh.value,
        })
    }

    /// `max(l, 0)`.
    pub fn l_clamped(&self) -> BigRational {
        if self.l.is_negative() {
            BigRational::zero()
        } else {
            self.l.clone()
        }
    }

    pub fn l_f64(&self) -> f64 {
        self.l.to_f64().unwrap_or(f64::NAN)
    }
}

/// Equal-split evaluation of `f(x) = Σ C(x_i, 2)` over `n - 1` coordinates
/// with `Σ x_i = ν`, plus a local-minimum spot check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexCheck {
    pub minimum: BigRational,
    /// Every `±ε` transfer between two coordinates left `f` no smaller.
    pub perturbation_holds: bool,
}

pub const PERTURBATION: (i64, i64) = (1, 1000);

/// Coordinates checked pairwise in the perturbation test; the equal split
/// is symmetric, so more pairs add nothing.
const MAX_CHECKED_COORDS: usize = 4;

pub fn convex_minimum_check(n: u64, nu: u64) -> Result<ConvexCheck> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("need n >= 3, got {n}")));
    }
    let dims = (n - 1) as usize;
    let share = BigRational::new(BigInt::from(nu), BigInt::from(n - 1));
    let f = |x: &[BigRational]| -> BigRational {
        x.iter()
            .fold(BigRational::zero(), |acc, xi| acc + choose2_rat(xi))
    };
    let minimum = choose2_rat(&share) * BigRational::from_integer(BigInt::from(dims));
    // f is separable, so a transfer only changes the two coordinates involved
    let window = dims.min(MAX_CHECKED_COORDS);
    let point = vec![share.clone(); window];
    let base_window = f(&point);
    let eps = BigRational::new(PERTURBATION.0.into(), PERTURBATION.1.into());
    let mut holds = true;
    for i in 0..window {
        for j in 0..window {
            if i == j {
                continue;
            }
            let mut moved = point.clone();
            moved[i] = &moved[i] + &eps;
            moved[j] = &moved[j] - &eps;
            if f(&moved) < base_window {
                holds = false;
            }
        }
    }
    Ok(ConvexCheck {
        minimum,
        perturbation_holds: holds,
    })
}

/// `(k-3) / (4(k-2))`, the exact ratio `l / ∩(G)` on the regular family.
pub fn regular_family_ratio(k: u64) -> Result<BigRational> {
    if k < 4 {
        return Err(Error::InvalidParameter(format!("need k >= 4, got {k}")));
    }
    Ok(BigRational::new(
        BigInt::from(k - 3),
        BigInt::from(4 * (k - 2)),
    ))
}
