//! The two scalar backends: exact cyclotomics and complex floats.

use num_complex::Complex64;

use crate::cyclotomic::{rational_to_f64, Cyclotomic, Rational};

/// Absolute tolerance for float comparisons.
pub const FLOAT_TOL: f64 = 1e-9;

/// Field operations shared by the exact and float backends.
pub trait Scalar: Clone + core::fmt::Debug + Send + Sync + 'static {
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn from_cyclotomic(c: &Cyclotomic) -> Self;

    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn conj(&self) -> Self;

    /// Exact zero test, or `|x| <= FLOAT_TOL` for floats.
    fn is_zero(&self) -> bool;
    fn approx_eq(&self, o: &Self) -> bool {
        self.sub(o).is_zero()
    }
    /// Size used for pivot selection.
    fn magnitude(&self) -> f64;
    fn to_complex(&self) -> Complex64;
    /// The exact value, for the exact backend.
    fn to_cyclotomic(&self) -> Option<Cyclotomic>;
}

impl Scalar for Cyclotomic {
    const EXACT: bool = true;

    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn from_i64(v: i64) -> Self {
        Cyclotomic::from_integer(v)
    }
    fn from_rational(r: &Rational) -> Self {
        Cyclotomic::from_rational(r.clone())
    }
    fn from_cyclotomic(c: &Cyclotomic) -> Self {
        c.clone()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        Cyclotomic::inv(self).ok()
    }
    fn conj(&self) -> Self {
        Cyclotomic::conj(self)
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn approx_eq(&self, o: &Self) -> bool {
        self == o
    }
    fn magnitude(&self) -> f64 {
        if Cyclotomic::is_zero(self) {
            0.0
        } else {
            // Any nonzero value must win over zero during pivoting.
            self.to_complex().norm().max(1e-300)
        }
    }
    fn to_complex(&self) -> Complex64 {
        Cyclotomic::to_complex(self)
    }
    fn to_cyclotomic(&self) -> Option<Cyclotomic> {
        Some(self.clone())
    }
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn from_rational(r: &Rational) -> Self {
        Complex64::new(rational_to_f64(r), 0.0)
    }
    fn from_cyclotomic(c: &Cyclotomic) -> Self {
        c.to_complex()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        (self.norm() > FLOAT_TOL).then(|| Complex64::new(1.0, 0.0) / self)
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn is_zero(&self) -> bool {
        self.norm() <= FLOAT_TOL
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn to_complex(&self) -> Complex64 {
        *self
    }
    fn to_cyclotomic(&self) -> Option<Cyclotomic> {
        None
    }
}
