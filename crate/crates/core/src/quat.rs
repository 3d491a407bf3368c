//! Quaternion scalars and similarity classes.
//!
//! A quaternion `q = w + xi + yj + zk` multiplies by the Hamilton rules
//! `i² = j² = k² = ijk = -1`. Two quaternions are *similar* when some unit
//! quaternion conjugates one into the other, which happens exactly when
//! their real parts and imaginary magnitudes agree. Each similarity class
//! meets the closed upper half-plane ℂ⁺ in a single point `re + |im|·i`,
//! which is the canonical representative used throughout this crate.

use num_complex::Complex64;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use crate::error::Error;

/// A quaternion `w + xi + yj + zk` over `f64`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

impl Quaternion {
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    /// Embeds a real number as `r + 0i + 0j + 0k`.
    pub const fn from_real(r: f64) -> Self {
        Self::new(r, 0.0, 0.0, 0.0)
    }

    /// Embeds a complex number into the `1, i` plane.
    pub const fn from_complex(c: Complex64) -> Self {
        Self::new(c.re, c.im, 0.0, 0.0)
    }

    /// The `w + xi` and `y + zi` parts of the split `q = a + b·j`.
    ///
    /// Reassembly is exact: `a + b·j = w + xi + yj + zk` since
    /// `(y + zi)·j = yj + zk`.
    pub fn complex_parts(self) -> (Complex64, Complex64) {
        (Complex64::new(self.w, self.x), Complex64::new(self.y, self.z))
    }

    /// Inverse of [`complex_parts`](Self::complex_parts).
    pub fn from_complex_parts(a: Complex64, b: Complex64) -> Self {
        Self::new(a.re, a.im, b.re, b.im)
    }

    pub fn re(self) -> f64 {
        self.w
    }

    /// The pure-imaginary part `xi + yj + zk`.
    pub fn im(self) -> Quaternion {
        Self::new(0.0, self.x, self.y, self.z)
    }

    pub fn im_norm(self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// Conjugate `q* = Re(q) - Im(q)`.
    pub fn conj(self) -> Quaternion {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// `|q| = √(q q*)`.
    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Multiplicative inverse `q*/|q|²`.
    pub fn try_inverse(self) -> Result<Quaternion, Error> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj() / n2)
    }

    pub fn scale(self, s: f64) -> Quaternion {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    pub fn is_finite(self) -> bool {
        self.w.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// True when the `j` and `k` components vanish within `tol`.
    pub fn is_complex(self, tol: f64) -> bool {
        self.y.abs() <= tol && self.z.abs() <= tol
    }

    /// True when `|q| = 1` and `Re(q) = 0` within `tol`.
    pub fn is_unit_pure(self, tol: f64) -> bool {
        self.w.abs() <= tol && (self.norm() - 1.0).abs() <= tol
    }

    /// Componentwise maximum absolute difference.
    pub fn max_abs_diff(self, other: Quaternion) -> f64 {
        let d = self - other;
        d.w.abs().max(d.x.abs()).max(d.y.abs()).max(d.z.abs())
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, q: Quaternion) -> Quaternion {
        Quaternion::new(self.w + q.w, self.x + q.x, self.y + q.y, self.z + q.z)
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, q: Quaternion) {
        *self = *self + q;
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, q: Quaternion) -> Quaternion {
        Quaternion::new(self.w - q.w, self.x - q.x, self.y - q.y, self.z - q.z)
    }
}

impl SubAssign for Quaternion {
    fn sub_assign(&mut self, q: Quaternion) {
        *self = *self - q;
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

/// Hamilton product; noncommutative.
impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, q: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w * q.w - self.x * q.x - self.y * q.y - self.z * q.z,
            self.w * q.x + self.x * q.w + self.y * q.z - self.z * q.y,
            self.w * q.y - self.x * q.z + self.y * q.w + self.z * q.x,
            self.w * q.z + self.x * q.y - self.y * q.x + self.z * q.w,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, s: f64) -> Quaternion {
        self.scale(s)
    }
}

impl Div<f64> for Quaternion {
    type Output = Quaternion;
    fn div(self, s: f64) -> Quaternion {
        self.scale(1.0 / s)
    }
}

impl From<f64> for Quaternion {
    fn from(r: f64) -> Self {
        Quaternion::from_real(r)
    }
}

impl std::fmt::Display for Quaternion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{:+}i{:+}j{:+}k", self.w, self.x, self.y, self.z)
    }
}

/// The similarity class of a quaternion, identified by its canonical
/// representative `re + im_norm·i` in the closed upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilarityClass {
    pub re: f64,
    /// Nonnegative imaginary magnitude.
    pub im_norm: f64,
}

impl SimilarityClass {
    pub fn new(re: f64, im_norm: f64) -> Self {
        debug_assert!(im_norm >= 0.0);
        Self { re, im_norm }
    }

    /// The canonical representative as a point of ℂ⁺.
    pub fn as_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im_norm)
    }

    /// `√(re² + im_norm²)`, the modulus shared by every member of the class.
    pub fn modulus(self) -> f64 {
        self.re.hypot(self.im_norm)
    }
}

/// Canonical representative `(Re q, |Im q|)` of the class `[q]`.
pub fn class_rep(q: Quaternion) -> SimilarityClass {
    SimilarityClass::new(q.re(), q.im_norm())
}

/// Whether `q1 ~ q2`: equal real parts and imaginary magnitudes within `tol`.
pub fn similar(q1: Quaternion, q2: Quaternion, tol: f64) -> bool {
    (q1.re() - q2.re()).abs() <= tol && (q1.im_norm() - q2.im_norm()).abs() <= tol
}

/// Realizes the class member `re + im_norm·u` for a unit pure direction `u`.
pub fn embed_class(c: SimilarityClass, u: Quaternion) -> Result<Quaternion, Error> {
    if !u.is_unit_pure(1e-10) {
        return Err(Error::NotUnitPure);
    }
    Ok(Quaternion::from_real(c.re) + u.scale(c.im_norm))
}
