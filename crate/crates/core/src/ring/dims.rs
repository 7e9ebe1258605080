//! Frobenius–Perron dimensions, exact in `Z[√2]` when possible.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::FusionRing;
use crate::num::{fabs, round_i64};
use crate::{Error, Result};

const SQRT_2: f64 = core::f64::consts::SQRT_2;
const SNAP_BOUND: i64 = 1 << 16;
const SNAP_TOLERANCE: f64 = 1e-9;
const RESIDUAL_TARGET: f64 = 1e-12;
const MAX_ITERATIONS: usize = 10_000;

/// `a + b·√2` with integer `a`, `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ZSqrt2 {
    pub a: i64,
    pub b: i64,
}

impl ZSqrt2 {
    pub const ZERO: Self = Self { a: 0, b: 0 };
    pub const ONE: Self = Self { a: 1, b: 0 };
    pub const SQRT2: Self = Self { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub const fn int(a: i64) -> Self {
        Self { a, b: 0 }
    }

    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * SQRT_2
    }

    /// Exact sign of `a + b√2`.
    pub fn signum(self) -> i32 {
        let (a, b) = (i128::from(self.a), i128::from(self.b));
        match (a.signum(), b.signum()) {
            (0, 0) => 0,
            (sa, sb) if sa >= 0 && sb >= 0 => 1,
            (sa, sb) if sa <= 0 && sb <= 0 => -1,
            // opposite signs: compare a² with 2b²
            (sa, _) => {
                let lhs = a * a;
                let rhs = 2 * b * b;
                if lhs > rhs {
                    sa as i32
                } else {
                    -(sa as i32)
                }
            }
        }
    }
}

impl Add for ZSqrt2 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for ZSqrt2 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for ZSqrt2 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for ZSqrt2 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)
    }
}

impl Mul<i64> for ZSqrt2 {
    type Output = Self;
    fn mul(self, k: i64) -> Self {
        Self::new(self.a * k, self.b * k)
    }
}

impl PartialOrd for ZSqrt2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ZSqrt2 {
    fn cmp(&self, other: &Self) -> Ordering {
        (*self - *other).signum().cmp(&0)
    }
}

impl fmt::Display for ZSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let root = |f: &mut fmt::Formatter<'_>, b: i64| match b {
            1 => f.write_str("√2"),
            _ => write!(f, "{b}√2"),
        };
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) if b < 0 => {
                f.write_str("-")?;
                root(f, -b)
            }
            (0, b) => root(f, b),
            (a, b) if b < 0 => {
                write!(f, "{a}-")?;
                root(f, -b)
            }
            (a, b) => {
                write!(f, "{a}+")?;
                root(f, b)
            }
        }
    }
}

/// A Frobenius–Perron dimension: exact in `Z[√2]`, or a float flagged as
/// inexact for rings outside that field.
#[derive(Debug, Clone, Copy)]
pub enum ExactDim {
    Exact(ZSqrt2),
    Approx(f64),
}

impl ExactDim {
    pub const ONE: Self = ExactDim::Exact(ZSqrt2::ONE);
    pub const SQRT2: Self = ExactDim::Exact(ZSqrt2::SQRT2);

    pub fn to_f64(self) -> f64 {
        match self {
            ExactDim::Exact(z) => z.to_f64(),
            ExactDim::Approx(x) => x,
        }
    }

    pub fn as_exact(self) -> Option<ZSqrt2> {
        match self {
            ExactDim::Exact(z) => Some(z),
            ExactDim::Approx(_) => None,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, ExactDim::Exact(_))
    }
}

impl PartialEq for ExactDim {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ExactDim::Exact(x), ExactDim::Exact(y)) => x == y,
            _ => fabs(self.to_f64() - other.to_f64()) <= SNAP_TOLERANCE,
        }
    }
}

impl PartialOrd for ExactDim {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (ExactDim::Exact(x), ExactDim::Exact(y)) => Some(x.cmp(y)),
            _ if self == other => Some(Ordering::Equal),
            _ => self.to_f64().partial_cmp(&other.to_f64()),
        }
    }
}

impl fmt::Display for ExactDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactDim::Exact(z) => z.fmt(f),
            ExactDim::Approx(x) => write!(f, "~{x:.12}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FpDims {
    pub dims: Vec<ExactDim>,
    /// `Σ FPdim(X)²` over simples.
    pub total: ExactDim,
}

impl FpDims {
    pub fn is_exact(&self) -> bool {
        self.total.is_exact()
    }

    pub fn exact(&self, a: usize) -> Option<ZSqrt2> {
        self.dims[a].as_exact()
    }

    /// `Σ FPdim(X)²` over a subset of simples.
    pub fn total_of(&self, simples: &[usize]) -> ExactDim {
        if self.is_exact() {
            let s = simples
                .iter()
                .map(|&x| {
                    let d = self.dims[x].as_exact().unwrap_or_default();
                    d * d
                })
                .fold(ZSqrt2::ZERO, Add::add);
            ExactDim::Exact(s)
        } else {
            ExactDim::Approx(
                simples
                    .iter()
                    .map(|&x| {
                        let d = self.dims[x].to_f64();
                        d * d
                    })
                    .sum(),
            )
        }
    }
}

/// Frobenius–Perron dimensions of all simples and of the ring.
///
/// The common positive eigenvector of the fusion matrices is found by power
/// iteration on `Σ_a N_a` (strictly positive for a valid ring), normalized
/// at the unit. Each entry is then snapped to `a + b√2` with
/// `|a|, |b| ≤ 2^16`; the snapped vector is kept only if it satisfies
/// `d_a d_b = Σ_c N_{ab}^c d_c` exactly and every entry is at least 1.
pub fn fp_dims(ring: &FusionRing) -> Result<FpDims> {
    let r = ring.rank();
    let mut v = vec![1.0f64; r];
    let mut w = vec![0.0f64; r];
    let mut converged = false;
    let mut residual = f64::INFINITY;
    for _ in 0..MAX_ITERATIONS {
        regular_apply(ring, &v, &mut w);
        let lambda = w.iter().cloned().fold(0.0, f64::max) / v.iter().cloned().fold(0.0, f64::max);
        if lambda <= 0.0 {
            return Err(Error::NonConvergence { iterations: 0, residual });
        }
        residual = v
            .iter()
            .zip(&w)
            .map(|(x, y)| fabs(y - lambda * x))
            .fold(0.0, f64::max)
            / lambda;
        let norm = w.iter().cloned().fold(0.0, f64::max);
        for (x, y) in v.iter_mut().zip(&w) {
            *x = y / norm;
        }
        if residual <= RESIDUAL_TARGET {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence { iterations: MAX_ITERATIONS, residual });
    }
    let base = v[ring.unit()];
    let approx: Vec<f64> = v.iter().map(|x| x / base).collect();

    let snapped: Option<Vec<ZSqrt2>> = approx.iter().map(|&x| snap(x)).collect();
    if let Some(exact) = snapped.filter(|d| satisfies_dimension_equation(ring, d)) {
        let total = exact.iter().map(|&d| d * d).fold(ZSqrt2::ZERO, Add::add);
        return Ok(FpDims {
            dims: exact.into_iter().map(ExactDim::Exact).collect(),
            total: ExactDim::Exact(total),
        });
    }
    let total = approx.iter().map(|x| x * x).sum();
    Ok(FpDims {
        dims: approx.into_iter().map(ExactDim::Approx).collect(),
        total: ExactDim::Approx(total),
    })
}

// w_b = Σ_a Σ_c N_{ab}^c v_c
fn regular_apply(ring: &FusionRing, v: &[f64], w: &mut [f64]) {
    let r = ring.rank();
    for b in 0..r {
        let mut acc = 0.0;
        for a in 0..r {
            for &(c, n) in ring.product(a, b) {
                acc += f64::from(n) * v[c];
            }
        }
        w[b] = acc;
    }
}

fn snap(x: f64) -> Option<ZSqrt2> {
    for k in 0..=SNAP_BOUND {
        for b in [k, -k] {
            let a = round_i64(x - b as f64 * SQRT_2);
            if a.abs() <= SNAP_BOUND && fabs(a as f64 + b as f64 * SQRT_2 - x) <= SNAP_TOLERANCE {
                return Some(ZSqrt2::new(a, b));
            }
            if k == 0 {
                break;
            }
        }
    }
    None
}

fn satisfies_dimension_equation(ring: &FusionRing, d: &[ZSqrt2]) -> bool {
    let r = ring.rank();
    if d.iter().any(|&x| x < ZSqrt2::ONE) {
        return false;
    }
    (0..r).all(|a| {
        (0..r).all(|b| {
            let rhs = ring
                .product(a, b)
                .iter()
                .map(|&(c, n)| d[c] * i64::from(n))
                .fold(ZSqrt2::ZERO, Add::add);
            d[a] * d[b] == rhs
        })
    })
}

/// Distinct simple dimensions, ascending.
pub fn cd_set(ring: &FusionRing) -> Result<Vec<ExactDim>> {
    let dims = fp_dims(ring)?;
    let mut out: Vec<ExactDim> = Vec::new();
    for d in dims.dims {
        if !out.contains(&d) {
            out.push(d);
        }
    }
    out.sort_by(|x, y| x.partial_cmp(y).unwrap_or(Ordering::Equal));
    Ok(out)
}
