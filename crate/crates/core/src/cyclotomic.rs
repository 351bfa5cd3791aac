//! Exact arithmetic in cyclotomic fields Q(zeta_n).
//!
//! A value of conductor `n` is stored as the unique polynomial of degree
//! below `phi(n)` in `zeta_n`, i.e. reduced modulo the `n`-th cyclotomic
//! polynomial. Binary operations lift both operands to the lcm of their
//! conductors. The only automatic descent is to conductor 1 when a value is
//! rational.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: usize) -> Arc<[i64]> {
    assert!(n >= 1, "conductor must be positive");
    #[cfg(feature = "std")]
    {
        use std::collections::BTreeMap;
        use std::sync::{OnceLock, RwLock};
        static CACHE: OnceLock<RwLock<BTreeMap<usize, Arc<[i64]>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| RwLock::new(BTreeMap::new()));
        if let Some(p) = cache.read().unwrap_or_else(|e| e.into_inner()).get(&n) {
            return p.clone();
        }
        let p = compute_cyclotomic_polynomial(n);
        // Concurrent inserts of the same key store identical values.
        cache
            .write()
            .unwrap_or_else(|e| e.into_inner())
            .entry(n)
            .or_insert_with(|| p.clone());
        p
    }
    #[cfg(not(feature = "std"))]
    {
        compute_cyclotomic_polynomial(n)
    }
}

fn compute_cyclotomic_polynomial(n: usize) -> Arc<[i64]> {
    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = divide_monic(&p, &cyclotomic_polynomial(d));
        }
    }
    p.into()
}

/// Exact quotient of `num` by the monic polynomial `den`.
fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// Euler's totient.
pub fn euler_phi(n: usize) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

/// An exact element of Q(zeta_n).
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: usize,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_fraction(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `zeta_n^k`, reduced.
    pub fn root_of_unity(n: usize, k: i64) -> Self {
        assert!(n >= 1, "root_of_unity needs n >= 1");
        let e = k.rem_euclid(n as i64) as usize;
        Self::from_exponents(n, core::iter::once((e, Rational::one())))
    }

    /// Builds `sum c * zeta_n^e` from (exponent, coefficient) pairs.
    pub fn from_exponents(n: usize, terms: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut v = vec![Rational::zero(); n.max(1)];
        for (e, c) in terms {
            v[e % n] += c;
        }
        Self::from_poly(n, v)
    }

    /// Reduces an arbitrary polynomial in `zeta_n` modulo Phi_n.
    fn from_poly(n: usize, mut v: Vec<Rational>) -> Self {
        let phi = cyclotomic_polynomial(n);
        let deg = phi.len() - 1;
        if v.len() < deg {
            v.resize(deg, Rational::zero());
        }
        for i in (deg..v.len()).rev() {
            if v[i].is_zero() {
                continue;
            }
            let c = core::mem::replace(&mut v[i], Rational::zero());
            for (j, &pj) in phi[..deg].iter().enumerate() {
                if pj != 0 {
                    v[i - deg + j] -= &c * Rational::from_integer(BigInt::from(pj));
                }
            }
        }
        v.truncate(deg);
        let mut out = Cyclotomic {
            conductor: n,
            coeffs: v,
        };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        if self.conductor != 1 && self.coeffs[1..].iter().all(Zero::is_zero) {
            self.coeffs.truncate(1);
            self.conductor = 1;
        }
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    /// Reduced coefficients with respect to `1, zeta_n, ..., zeta_n^(phi(n)-1)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Builds a value from reduced coefficients; the input need not be reduced.
    pub fn from_coeffs(n: usize, coeffs: Vec<Rational>) -> Self {
        Self::from_poly(n, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|v| v.to_i64())
    }

    /// Re-expresses the value in conductor `m`, which must be a multiple of
    /// the current conductor.
    pub fn lift(&self, m: usize) -> Cyclotomic {
        assert!(
            m.is_multiple_of(self.conductor),
            "lift target must be a multiple"
        );
        if m == self.conductor {
            return self.clone();
        }
        let step = m / self.conductor;
        let mut v = vec![Rational::zero(); m];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                v[i * step] = c.clone();
            }
        }
        let mut out = Self::from_poly(m, v);
        // from_poly may already have descended to a rational value.
        if out.conductor == 1 {
            return out;
        }
        out.conductor = m;
        out
    }

    fn common(&self, other: &Self) -> (usize, Cyclotomic, Cyclotomic) {
        let m = self.conductor.lcm(&other.conductor);
        (m, self.lift_padded(m), other.lift_padded(m))
    }

    /// Like `lift`, but keeps the conductor `m` even for rational values.
    fn lift_padded(&self, m: usize) -> Cyclotomic {
        let deg = euler_phi(m);
        let mut out = self.lift(m);
        out.conductor = m;
        out.coeffs.resize(deg, Rational::zero());
        out
    }

    /// The Galois automorphism `zeta_n -> zeta_n^k` (`k` coprime to n).
    pub fn galois(&self, k: usize) -> Cyclotomic {
        let n = self.conductor;
        if n == 1 {
            return self.clone();
        }
        Self::from_exponents(
            n,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| ((i * k) % n, c.clone())),
        )
    }

    /// Complex conjugation, `zeta -> zeta^-1`.
    pub fn conj(&self) -> Cyclotomic {
        let n = self.conductor;
        self.galois(n - 1)
    }

    pub fn inv(&self) -> Result<Cyclotomic> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.conductor;
        if n == 1 {
            return Ok(Self::from_rational(self.coeffs[0].recip()));
        }
        // x^-1 = (prod of the other conjugates) / norm(x).
        let mut others = Cyclotomic::one();
        for k in 2..n {
            if k.gcd(&n) == 1 {
                others = &others * &self.galois(k);
            }
        }
        let norm = (self * &others)
            .to_rational()
            .expect("field norm is rational");
        Ok(&others * &Cyclotomic::from_rational(norm.recip()))
    }

    pub fn pow(&self, mut e: u32) -> Cyclotomic {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> Cyclotomic {
        let mut out = Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        };
        if r.is_zero() {
            return Cyclotomic::zero();
        }
        out.normalize();
        out
    }

    /// The complex embedding `zeta_n -> exp(2 pi i / n)`.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cf = rational_to_f64(c);
            let angle = 2.0 * core::f64::consts::PI * (k as f64) / n;
            re += cf * libm::cos(angle);
            im += cf * libm::sin(angle);
        }
        Complex64::new(re, im)
    }

    /// Deterministic ordering key used to sort character rows: argument of
    /// the complex embedding in `[0, 2 pi)`, then modulus.
    pub fn sort_key(&self) -> (i64, i64) {
        if self.is_zero() {
            return (0, 0);
        }
        let z = self.to_complex();
        let mut arg = libm::atan2(z.im, z.re);
        if arg < -1e-12 {
            arg += 2.0 * core::f64::consts::PI;
        }
        let modulus = libm::sqrt(z.re * z.re + z.im * z.im);
        (
            libm::round(arg.max(0.0) * 1e9) as i64,
            libm::round(modulus * 1e9) as i64,
        )
    }

    /// If the value is `+-zeta_m^k` for some `m` dividing the conductor,
    /// returns `(sign, m, k)` with `k` in `1..m`.
    fn as_signed_root(&self) -> Option<(bool, usize, usize)> {
        let n = self.conductor;
        if n == 1 {
            return None;
        }
        let mut divisors: Vec<usize> = (2..=n).filter(|m| n.is_multiple_of(*m)).collect();
        divisors.sort_by_key(|&m| (m != 3 && m != 4, m));
        for m in divisors {
            for k in 1..m {
                if k.gcd(&m) != 1 {
                    continue;
                }
                let r = Cyclotomic::root_of_unity(m, k as i64);
                if &r == self {
                    return Some((true, m, k));
                }
                if -&r == *self {
                    return Some((false, m, k));
                }
            }
        }
        None
    }
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        alloc::format!("{}", r.numer())
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

fn root_name(m: usize, k: usize) -> String {
    match (m, k) {
        (3, 1) => "ω".into(),
        (3, 2) => "ω²".into(),
        (4, 1) => "i".into(),
        (4, 3) => "-i".into(),
        (_, 1) => alloc::format!("ζ{}", m),
        _ => alloc::format!("ζ{}^{}", m, k),
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return f.write_str(&fmt_rational(&r));
        }
        if let Some((positive, m, k)) = self.as_signed_root() {
            let name = root_name(m, k);
            return match (positive, name.strip_prefix('-')) {
                (true, _) => f.write_str(&name),
                (false, Some(stripped)) => f.write_str(stripped),
                (false, None) => write!(f, "-{}", name),
            };
        }
        let n = self.conductor;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            let sep = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            f.write_str(sep)?;
            if k == 0 {
                f.write_str(&fmt_rational(&a))?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", fmt_rational(&a))?;
                }
                f.write_str(&root_name(n, k))?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({})", self)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (_, a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (m, mut a, b) = if self.conductor == rhs.conductor {
            (self.conductor, self.clone(), rhs.clone())
        } else {
            self.common(rhs)
        };
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a.conductor = m;
        a.normalize();
        a
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.conductor == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        let (m, a, b) = if self.conductor == rhs.conductor {
            (self.conductor, self.clone(), rhs.clone())
        } else {
            self.common(rhs)
        };
        let mut prod = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Cyclotomic::from_poly(m, prod)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Cyclotomic::from_integer(v)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::from_rational(r)
    }
}
