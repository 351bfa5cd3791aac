//! JSON output documents.

use serde::{Deserialize, Serialize};
use xmod_core::hopf::DElement;
use xmod_core::rt::LinkScalar;
use xmod_core::{Cyclotomic, Rational};

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq)]
pub struct FloatJson {
    pub re: f64,
    pub im: f64,
}

/// Rounds to 12 significant digits.
fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return 0.0;
    }
    let v: f64 = format!("{:.11e}", x).parse().unwrap_or(x);
    if v == 0.0 {
        0.0
    } else {
        v
    }
}

impl FloatJson {
    pub fn new(re: f64, im: f64) -> Self {
        FloatJson {
            re: sig12(re),
            im: sig12(im),
        }
    }
}

/// Exact cyclotomic value: reduced coefficients in the power basis of
/// `zeta_conductor`, numerators and denominators as decimal strings.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ScalarJson {
    pub conductor: usize,
    pub coeffs: Vec<[String; 2]>,
    pub float: FloatJson,
}

impl ScalarJson {
    pub fn new(c: &Cyclotomic) -> Self {
        let z = c.to_complex();
        ScalarJson {
            conductor: c.conductor(),
            coeffs: c
                .coeffs()
                .iter()
                .map(|q| [q.numer().to_string(), q.denom().to_string()])
                .collect(),
            float: FloatJson::new(z.re, z.im),
        }
    }

    pub fn to_cyclotomic(&self) -> Option<Cyclotomic> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|[n, d]| {
                let n = n.parse().ok()?;
                let d: num_bigint::BigInt = d.parse().ok()?;
                if d == 0.into() {
                    return None;
                }
                Some(Rational::new(n, d))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Cyclotomic::from_coeffs(self.conductor, coeffs))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct InvariantJson {
    pub exact: Option<ScalarJson>,
    pub float: FloatJson,
}

impl InvariantJson {
    pub fn new(s: &LinkScalar) -> Self {
        InvariantJson {
            exact: s.exact.as_ref().map(ScalarJson::new),
            float: FloatJson::new(s.float.re, s.float.im),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TermJson {
    pub h: usize,
    pub g: usize,
    pub coeff: ScalarJson,
}

pub fn element_json(e: &DElement) -> Vec<TermJson> {
    e.iter()
        .map(|(h, g, c)| TermJson {
            h,
            g,
            coeff: ScalarJson::new(c),
        })
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ErrorJson {
    pub code: String,
    pub message: String,
    pub witness: Option<String>,
}
