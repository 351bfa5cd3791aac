//! Modules over `D(G,H)`, equivalently representations `(V, P, Q)` of the
//! crossed module, and their characters.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::irrep::explicit_irrep;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::xmod::{CrossedModule, Label};

/// Tolerance for snapping float eigenvalue multiplicities to integers.
pub const SNAP_TOL: f64 = 1e-6;

/// A finite-dimensional module: `Q(g)` for each `g` in `G` and projectors
/// `P(h)` for each `h` in `H`; `delta_h (x) g` acts as `P(h) Q(g)`.
#[derive(Clone, Debug)]
pub struct XModRep<S: Scalar> {
    xmod: Arc<CrossedModule>,
    dim: usize,
    q: Vec<Matrix<S>>,
    p: Vec<Matrix<S>>,
    label: Option<Label>,
}

fn same_xmod(a: &Arc<CrossedModule>, b: &Arc<CrossedModule>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<S: Scalar> XModRep<S> {
    /// Builds a module after checking every defining identity.
    pub fn new(xmod: Arc<CrossedModule>, q: Vec<Matrix<S>>, p: Vec<Matrix<S>>) -> Result<Self> {
        let dim = q.first().map_or(0, Matrix::rows);
        let rep = XModRep {
            xmod,
            dim,
            q,
            p,
            label: None,
        };
        rep.validate()?;
        Ok(rep)
    }

    fn validate(&self) -> Result<()> {
        let (g, h) = (self.xmod.g(), self.xmod.h());
        let bad = |what: &str| Err(Error::InvariantViolation(format!("module: {}", what)));
        if self.q.len() != g.order() || self.p.len() != h.order() {
            return bad("wrong number of matrices");
        }
        let d = self.dim;
        if self
            .q
            .iter()
            .chain(&self.p)
            .any(|m| m.rows() != d || m.cols() != d)
        {
            return bad("matrices of inconsistent size");
        }
        if !self.q[0].is_identity() {
            return bad("Q(1) is not the identity");
        }
        let gens = g.generators();
        for a in 0..g.order() {
            for &s in &gens {
                if !self.q[a].mul(&self.q[s]).approx_eq(&self.q[g.mul(a, s)]) {
                    return bad(&format!("Q is not a homomorphism at ({}, {})", a, s));
                }
            }
        }
        let mut sum = Matrix::zeros(d, d);
        for x in 0..h.order() {
            sum = sum.add(&self.p[x]);
            for y in 0..h.order() {
                let prod = self.p[x].mul(&self.p[y]);
                let ok = if x == y {
                    prod.approx_eq(&self.p[x])
                } else {
                    prod.is_zero()
                };
                if !ok {
                    return bad(&format!("P({}) P({}) is wrong", x, y));
                }
            }
        }
        if !sum.is_identity() {
            return bad("projectors do not sum to the identity");
        }
        for &a in &gens {
            for x in 0..h.order() {
                let lhs = self.q[a].mul(&self.p[x]);
                let rhs = self.p[self.xmod.act(a, x)].mul(&self.q[a]);
                if !lhs.approx_eq(&rhs) {
                    return bad(&format!("P(g.h) Q(g) ≠ Q(g) P(h) at g = {}, h = {}", a, x));
                }
            }
        }
        Ok(())
    }

    pub fn xmod(&self) -> &Arc<CrossedModule> {
        &self.xmod
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn q(&self, g: usize) -> &Matrix<S> {
        &self.q[g]
    }

    pub fn p(&self, h: usize) -> &Matrix<S> {
        &self.p[h]
    }

    pub fn label(&self) -> Option<Label> {
        self.label
    }

    /// Action of `delta_h (x) g`.
    pub fn action(&self, h: usize, g: usize) -> Matrix<S> {
        self.p[h].mul(&self.q[g])
    }

    /// The monoidal unit: `P(1) = 1`, `Q` trivial.
    pub fn unit(xmod: Arc<CrossedModule>) -> Self {
        let q = vec![Matrix::identity(1); xmod.g().order()];
        let mut p = vec![Matrix::zeros(1, 1); xmod.h().order()];
        p[0] = Matrix::identity(1);
        XModRep {
            xmod,
            dim: 1,
            q,
            p,
            label: Some((0, 0)),
        }
    }

    /// The module induced from the stabilizer representation `rho` (indexed
    /// by the stabilizer's local element indices) at the orbit of `s`.
    pub fn induced(xmod: Arc<CrossedModule>, s: usize, rho: &[Matrix<S>]) -> Result<Self> {
        let od = xmod.orbit_data();
        let k = od.position(s).ok_or(Error::InvalidLabel {
            orbit_rep: s,
            irrep: 0,
        })?;
        let st = &xmod.stabilizers()[k];
        let orbit = &od.orbits[k];
        let d = rho[0].rows();
        let dim = orbit.len() * d;
        let g = xmod.g();
        let pos = |h: usize| orbit.binary_search(&h).expect("orbit element");
        let mut q = Vec::with_capacity(g.order());
        for a in 0..g.order() {
            let mut m = Matrix::zeros(dim, dim);
            for (kk, &hk) in orbit.iter().enumerate() {
                let target = xmod.act(a, hk);
                let k2 = pos(target);
                let sigma = g.mul(g.mul(g.inv(od.witness[target]), a), od.witness[hk]);
                let local = st.subgroup.local(sigma).expect("coset decomposition");
                let block = &rho[local];
                for r in 0..d {
                    for c in 0..d {
                        m[(k2 * d + r, kk * d + c)] = block[(r, c)].clone();
                    }
                }
            }
            q.push(m);
        }
        let p = (0..xmod.h().order())
            .map(|h| {
                let mut m = Matrix::zeros(dim, dim);
                if let Ok(kk) = orbit.binary_search(&h) {
                    for r in 0..d {
                        m[(kk * d + r, kk * d + r)] = S::one();
                    }
                }
                m
            })
            .collect();
        XModRep::new(xmod, q, p)
    }

    pub fn tensor_product(&self, other: &Self) -> Result<Self> {
        if !same_xmod(&self.xmod, &other.xmod) {
            return Err(Error::XmodMismatch);
        }
        let h = self.xmod.h();
        let q = self
            .q
            .iter()
            .zip(&other.q)
            .map(|(a, b)| a.kron(b))
            .collect();
        let p = (0..h.order())
            .map(|n| {
                let mut acc = Matrix::zeros(self.dim * other.dim, self.dim * other.dim);
                for x in 0..h.order() {
                    let left = &self.p[x];
                    let right = &other.p[h.mul(h.inv(x), n)];
                    if left.is_zero() || right.is_zero() {
                        continue;
                    }
                    acc = acc.add(&left.kron(right));
                }
                acc
            })
            .collect();
        XModRep::new(self.xmod.clone(), q, p)
    }

    /// `Q*(g) = Q(g^-1)^T`, `P*(h) = P(h^-1)^T`.
    pub fn dual(&self) -> Result<Self> {
        let (g, h) = (self.xmod.g(), self.xmod.h());
        let q = (0..g.order())
            .map(|a| self.q[g.inv(a)].transpose())
            .collect();
        let p = (0..h.order())
            .map(|x| self.p[h.inv(x)].transpose())
            .collect();
        XModRep::new(self.xmod.clone(), q, p)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if !same_xmod(&self.xmod, &other.xmod) {
            return Err(Error::XmodMismatch);
        }
        let q = self
            .q
            .iter()
            .zip(&other.q)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        let p = self
            .p
            .iter()
            .zip(&other.p)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        XModRep::new(self.xmod.clone(), q, p)
    }

    /// The isomorphic module `T M T^-1`.
    pub fn conjugate_by(&self, t: &Matrix<S>) -> Result<Self> {
        let ti = t
            .inverse()
            .ok_or_else(|| Error::InvariantViolation("change of basis is singular".into()))?;
        let conj = |m: &Matrix<S>| t.mul(m).mul(&ti);
        let mut out = XModRep::new(
            self.xmod.clone(),
            self.q.iter().map(conj).collect(),
            self.p.iter().map(conj).collect(),
        )?;
        out.label = self.label;
        Ok(out)
    }

    /// `c_{V,W}(v (x) w) = sum_n Q_W(gamma(n)) w (x) P_V(n) v`, as a map
    /// `V (x) W -> W (x) V`.
    pub fn braiding(&self, w: &Self) -> Matrix<S> {
        let x = &self.xmod;
        let mut acc = Matrix::zeros(self.dim * w.dim, self.dim * w.dim);
        for n in 0..x.h().order() {
            if self.p[n].is_zero() {
                continue;
            }
            acc = acc.add(&self.p[n].kron(&w.q[x.gamma_of(n)]));
        }
        Matrix::flip(self.dim, w.dim).mul(&acc)
    }

    /// The inverse of `c_{V,W}`, a map `W (x) V -> V (x) W`:
    /// `w (x) v -> sum_n P_V(n) v (x) Q_W(gamma(n))^-1 w`.
    pub fn braiding_inverse(&self, w: &Self) -> Matrix<S> {
        let x = &self.xmod;
        let g = x.g();
        let mut acc = Matrix::zeros(self.dim * w.dim, self.dim * w.dim);
        for n in 0..x.h().order() {
            if self.p[n].is_zero() {
                continue;
            }
            acc = acc.add(&self.p[n].kron(&w.q[g.inv(x.gamma_of(n))]));
        }
        acc.mul(&Matrix::flip(w.dim, self.dim))
    }

    /// Whether `f: self -> other` commutes with the action.
    pub fn is_module_map(&self, other: &Self, f: &Matrix<S>) -> bool {
        (0..self.q.len()).all(|g| other.q[g].mul(f).approx_eq(&f.mul(&self.q[g])))
            && (0..self.p.len()).all(|h| other.p[h].mul(f).approx_eq(&f.mul(&self.p[h])))
    }

    /// Action of the ribbon element `(1 (x) c) theta`:
    /// `v -> Q(c) sum_n P(n) Q(gamma(n^-1)) v`.
    pub fn twist(&self, c: usize) -> Matrix<S> {
        let x = &self.xmod;
        let h = x.h();
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for n in 0..h.order() {
            if self.p[n].is_zero() {
                continue;
            }
            acc = acc.add(&self.p[n].mul(&self.q[x.gamma_of(h.inv(n))]));
        }
        self.q[c].mul(&acc)
    }

    /// Inverse of [`twist`](Self::twist).
    pub fn twist_inverse(&self, c: usize) -> Matrix<S> {
        let x = &self.xmod;
        let g = x.g();
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for n in 0..x.h().order() {
            if self.p[n].is_zero() {
                continue;
            }
            acc = acc.add(&self.p[n].mul(&self.q[x.gamma_of(n)]));
        }
        acc.mul(&self.q[g.inv(c)])
    }

    fn trace_at(&self, m: usize, g: usize) -> S {
        self.p[m].trace_mul(&self.q[g])
    }

    /// `psi(m, g) = tr(P(m) Q(g))`. Float traces are snapped to cyclotomic
    /// integers through the multiplicity of each eigenvalue of `Q(g)` on the
    /// image of `P(m)`.
    pub fn character(&self) -> Result<ClassFunction> {
        let x = &self.xmod;
        let (gg, hh) = (x.g(), x.h());
        let mut values = Vec::with_capacity(gg.order() * hh.order());
        for m in 0..hh.order() {
            for g in 0..gg.order() {
                let v = if x.act(g, m) != m {
                    let t = self.trace_at(m, g);
                    if S::EXACT {
                        if !t.is_zero() {
                            return Err(Error::InvariantViolation(format!(
                                "nonzero trace at unfixed pair ({}, {})",
                                m, g
                            )));
                        }
                    } else if t.to_complex().norm() > SNAP_TOL {
                        return Err(Error::SnapFailure { m, g });
                    }
                    Cyclotomic::zero()
                } else if S::EXACT {
                    self.trace_at(m, g).to_cyclotomic().expect("exact backend")
                } else {
                    self.snap(m, g)?
                };
                values.push(v);
            }
        }
        let chi = ClassFunction {
            xmod: x.clone(),
            values,
        };
        chi.check()?;
        Ok(chi)
    }

    fn snap(&self, m: usize, g: usize) -> Result<Cyclotomic> {
        let gg = self.xmod.g();
        let o = gg.element_order(g);
        let traces: Vec<Complex64> = (0..o)
            .map(|l| self.trace_at(m, gg.pow(g, l)).to_complex())
            .collect();
        let mut terms = Vec::new();
        for k in 0..o {
            let mut acc = Complex64::new(0.0, 0.0);
            for (l, t) in traces.iter().enumerate() {
                let angle = -2.0 * core::f64::consts::PI * ((k * l) % o) as f64 / o as f64;
                acc += t * Complex64::new(libm::cos(angle), libm::sin(angle));
            }
            let mk = acc / o as f64;
            let rounded = libm::round(mk.re);
            if (mk - Complex64::new(rounded, 0.0)).norm() > SNAP_TOL || rounded < 0.0 {
                return Err(Error::SnapFailure { m, g });
            }
            if rounded > 0.0 {
                terms.push((k, Rational::from_integer(BigInt::from(rounded as i64))));
            }
        }
        Ok(Cyclotomic::from_exponents(o, terms))
    }

    /// Isotypic multiplicities against a list of simple characters, checked
    /// to be nonnegative integers accounting for the whole dimension.
    pub fn decompose(&self, simples: &SimpleModules) -> Result<Vec<(Label, usize)>> {
        let chi = self.character()?;
        let mut out = Vec::new();
        let mut total = 0;
        for (label, psi) in simples.labels().iter().zip(simples.characters()) {
            let m = psi.inner_product(&chi)?;
            let n = m
                .to_i64()
                .filter(|&n| n >= 0)
                .ok_or(Error::NonIntegerMultiplicity {
                    orbit_rep: label.0,
                    irrep: label.1,
                })?;
            if n > 0 {
                total += n as usize * simples.dim(*label);
                out.push((*label, n as usize));
            }
        }
        if total != self.dim {
            return Err(Error::InvariantViolation(format!(
                "decomposition accounts for dimension {} of {}",
                total, self.dim
            )));
        }
        Ok(out)
    }

    /// The module projection `(1/|G|) sum_{g,h} (delta_h (x) g) p
    /// (delta_{g^-1.h} (x) g^-1)` onto the submodule spanned by the columns
    /// of `n`.
    pub fn maschke_project(&self, n: &Matrix<S>, p: &Matrix<S>) -> Result<Matrix<S>> {
        let x = &self.xmod;
        let (g, h) = (x.g(), x.h());
        let rank = n.rank();
        let invariant = |m: &Matrix<S>| n.hstack(&m.mul(n)).rank() == rank;
        if n.cols() > 0
            && !(g.generators().iter().all(|&s| invariant(&self.q[s]))
                && self.p.iter().all(invariant))
        {
            return Err(Error::NotSubmodule);
        }
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for a in 0..g.order() {
            let ai = g.inv(a);
            let right_q = &self.q[ai];
            for x_h in 0..h.order() {
                let left = self.p[x_h].mul(&self.q[a]);
                if left.is_zero() {
                    continue;
                }
                let right = self.p[x.act(ai, x_h)].mul(right_q);
                acc = acc.add(&left.mul(p).mul(&right));
            }
        }
        let scale = S::from_rational(&Rational::new(BigInt::from(1), BigInt::from(g.order())));
        let proj = acc.scale(&scale);
        if !self.is_module_map(self, &proj) || !proj.mul(&proj).approx_eq(&proj) {
            return Err(Error::InvariantViolation(
                "Maschke projection is not a module idempotent".into(),
            ));
        }
        if n.cols() > 0 && !proj.mul(n).approx_eq(n) {
            return Err(Error::InvariantViolation(
                "Maschke projection does not fix N".into(),
            ));
        }
        Ok(proj)
    }
}

impl XModRep<Cyclotomic> {
    /// `D(G,H)` acting on itself by left multiplication; basis `(h, g)` in
    /// `h`-major order.
    pub fn regular(xmod: Arc<CrossedModule>) -> Result<Self> {
        let (gn, hn) = (xmod.g().order(), xmod.h().order());
        let n = gn * hn;
        let idx = |h: usize, g: usize| h * gn + g;
        let q = (0..gn)
            .map(|a| {
                let mut m = Matrix::zeros(n, n);
                for y in 0..hn {
                    for b in 0..gn {
                        m[(idx(xmod.act(a, y), xmod.g().mul(a, b)), idx(y, b))] = Cyclotomic::one();
                    }
                }
                m
            })
            .collect();
        let p = (0..hn)
            .map(|x| {
                let mut m = Matrix::zeros(n, n);
                for b in 0..gn {
                    m[(idx(x, b), idx(x, b))] = Cyclotomic::one();
                }
                m
            })
            .collect();
        XModRep::new(xmod, q, p)
    }

    pub fn to_float(&self) -> XModRep<Complex64> {
        XModRep {
            xmod: self.xmod.clone(),
            dim: self.dim,
            q: self
                .q
                .iter()
                .map(|m| m.map(Cyclotomic::to_complex))
                .collect(),
            p: self
                .p
                .iter()
                .map(|m| m.map(Cyclotomic::to_complex))
                .collect(),
            label: self.label,
        }
    }
}

/// A module over either backend.
#[derive(Clone, Debug)]
pub enum AnyRep {
    Exact(XModRep<Cyclotomic>),
    Float(XModRep<Complex64>),
}

impl AnyRep {
    pub fn dim(&self) -> usize {
        match self {
            AnyRep::Exact(r) => r.dim(),
            AnyRep::Float(r) => r.dim(),
        }
    }

    pub fn label(&self) -> Option<Label> {
        match self {
            AnyRep::Exact(r) => r.label(),
            AnyRep::Float(r) => r.label(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, AnyRep::Exact(_))
    }

    pub fn character(&self) -> Result<ClassFunction> {
        match self {
            AnyRep::Exact(r) => r.character(),
            AnyRep::Float(r) => r.character(),
        }
    }

    pub fn to_float(&self) -> XModRep<Complex64> {
        match self {
            AnyRep::Exact(r) => r.to_float(),
            AnyRep::Float(r) => r.clone(),
        }
    }

    pub fn tensor_product(&self, other: &AnyRep) -> Result<AnyRep> {
        match (self, other) {
            (AnyRep::Exact(a), AnyRep::Exact(b)) => Ok(AnyRep::Exact(a.tensor_product(b)?)),
            (AnyRep::Float(a), AnyRep::Float(b)) => Ok(AnyRep::Float(a.tensor_product(b)?)),
            _ => Err(Error::BackendMismatch),
        }
    }

    pub fn dual(&self) -> Result<AnyRep> {
        Ok(match self {
            AnyRep::Exact(r) => AnyRep::Exact(r.dual()?),
            AnyRep::Float(r) => AnyRep::Float(r.dual()?),
        })
    }

    pub fn decompose(&self, simples: &SimpleModules) -> Result<Vec<(Label, usize)>> {
        match self {
            AnyRep::Exact(r) => r.decompose(simples),
            AnyRep::Float(r) => r.decompose(simples),
        }
    }
}

/// The simple module `(s, i)`: exact when the stabilizer irrep has degree
/// one, float otherwise.
pub fn simple_module(xmod: &Arc<CrossedModule>, label: Label, seed: u64) -> Result<AnyRep> {
    let st = xmod.check_label(label)?;
    let (s, i) = label;
    let irrep = explicit_irrep(&st.table, i, seed)?;
    if let Some(vals) = irrep.exact_values() {
        let rho: Vec<Matrix<Cyclotomic>> = vals
            .iter()
            .map(|v| Matrix::from_rows(vec![vec![v.clone()]]))
            .collect();
        let mut rep = XModRep::induced(xmod.clone(), s, &rho)?;
        rep.label = Some(label);
        Ok(AnyRep::Exact(rep))
    } else {
        let mut rep = XModRep::induced(xmod.clone(), s, irrep.matrices())?;
        rep.label = Some(label);
        Ok(AnyRep::Float(rep))
    }
}

/// A function on `H x G`, stored densely with `m` major.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    xmod: Arc<CrossedModule>,
    values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        same_xmod(&self.xmod, &other.xmod) && self.values == other.values
    }
}

impl ClassFunction {
    /// Wraps a table of values, checking the class-function conditions.
    pub fn new(xmod: Arc<CrossedModule>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != xmod.algebra_dim() {
            return Err(Error::InvariantViolation(
                "class function has the wrong size".into(),
            ));
        }
        let f = ClassFunction { xmod, values };
        f.check()?;
        Ok(f)
    }

    /// `(m, g) -> [m = 1]`, the character of the unit object.
    pub fn unit(xmod: Arc<CrossedModule>) -> Self {
        let gn = xmod.g().order();
        let values = (0..xmod.algebra_dim())
            .map(|k| {
                if k < gn {
                    Cyclotomic::one()
                } else {
                    Cyclotomic::zero()
                }
            })
            .collect();
        ClassFunction { xmod, values }
    }

    fn check(&self) -> Result<()> {
        let x = &self.xmod;
        let (g, h) = (x.g(), x.h());
        for m in 0..h.order() {
            for a in 0..g.order() {
                let v = self.value(m, a);
                if x.act(a, m) != m {
                    if !v.is_zero() {
                        return Err(Error::InvariantViolation(format!(
                            "class function nonzero at unfixed pair ({}, {})",
                            m, a
                        )));
                    }
                    continue;
                }
                for b in g.generators() {
                    if self.value(x.act(b, m), g.conj(b, a)) != v {
                        return Err(Error::InvariantViolation(format!(
                            "class function not invariant at ({}, {}) under {}",
                            m, a, b
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn xmod(&self) -> &Arc<CrossedModule> {
        &self.xmod
    }

    #[inline]
    pub fn value(&self, m: usize, g: usize) -> &Cyclotomic {
        &self.values[m * self.xmod.g().order() + g]
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    /// `<a, b> = (1/|G|) sum_{m,g} conj(a(m,g)) b(m,g)`.
    pub fn inner_product(&self, other: &Self) -> Result<Cyclotomic> {
        if !same_xmod(&self.xmod, &other.xmod) {
            return Err(Error::XmodMismatch);
        }
        let mut acc = Cyclotomic::zero();
        for (a, b) in self.values.iter().zip(&other.values) {
            if !a.is_zero() && !b.is_zero() {
                acc = &acc + &(&a.conj() * b);
            }
        }
        Ok(acc.scale(&Rational::new(
            BigInt::from(1),
            BigInt::from(self.xmod.g().order()),
        )))
    }

    /// `(a b)(m, g) = sum_n a(n, g) b(n^-1 m, g)`.
    pub fn convolution(&self, other: &Self) -> Result<Self> {
        if !same_xmod(&self.xmod, &other.xmod) {
            return Err(Error::XmodMismatch);
        }
        let (g, h) = (self.xmod.g(), self.xmod.h());
        let mut values = vec![Cyclotomic::zero(); self.values.len()];
        for m in 0..h.order() {
            for a in 0..g.order() {
                let mut acc = Cyclotomic::zero();
                for n in 0..h.order() {
                    let x = self.value(n, a);
                    if x.is_zero() {
                        continue;
                    }
                    let y = other.value(h.mul(h.inv(n), m), a);
                    if !y.is_zero() {
                        acc = &acc + &(x * y);
                    }
                }
                values[m * g.order() + a] = acc;
            }
        }
        ClassFunction::new(self.xmod.clone(), values)
    }

    /// `d = sum_m chi(m, 1)`.
    pub fn dimension(&self) -> Cyclotomic {
        (0..self.xmod.h().order()).fold(Cyclotomic::zero(), |acc, m| &acc + self.value(m, 0))
    }
}

/// Every simple module with its character, built once.
#[derive(Clone, Debug)]
pub struct SimpleModules {
    xmod: Arc<CrossedModule>,
    labels: Vec<Label>,
    modules: Vec<AnyRep>,
    characters: Vec<ClassFunction>,
}

impl SimpleModules {
    pub fn new(xmod: Arc<CrossedModule>, seed: u64) -> Result<Self> {
        let labels = xmod.labels();
        let modules = labels
            .iter()
            .map(|&l| simple_module(&xmod, l, seed))
            .collect::<Result<Vec<_>>>()?;
        let characters = modules
            .iter()
            .map(AnyRep::character)
            .collect::<Result<Vec<_>>>()?;
        Ok(SimpleModules {
            xmod,
            labels,
            modules,
            characters,
        })
    }

    pub fn xmod(&self) -> &Arc<CrossedModule> {
        &self.xmod
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index(&self, label: Label) -> Result<usize> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .ok_or(Error::InvalidLabel {
                orbit_rep: label.0,
                irrep: label.1,
            })
    }

    pub fn modules(&self) -> &[AnyRep] {
        &self.modules
    }

    pub fn module(&self, label: Label) -> Result<&AnyRep> {
        Ok(&self.modules[self.index(label)?])
    }

    pub fn characters(&self) -> &[ClassFunction] {
        &self.characters
    }

    pub fn character(&self, label: Label) -> Result<&ClassFunction> {
        Ok(&self.characters[self.index(label)?])
    }

    pub fn dim(&self, label: Label) -> usize {
        self.xmod.label_dim(label).expect("label from this xmod")
    }

    /// The simple whose character equals `chi`, if any.
    pub fn find(&self, chi: &ClassFunction) -> Option<Label> {
        self.characters
            .iter()
            .position(|c| c == chi)
            .map(|k| self.labels[k])
    }

    /// Label of the dual simple, located by character matching.
    pub fn dual_label(&self, label: Label) -> Result<Label> {
        let dual = self.module(label)?.dual()?.character()?;
        self.find(&dual)
            .ok_or_else(|| Error::InvariantViolation(format!("dual of {:?} is not simple", label)))
    }

    /// Scalar by which `(1 (x) c) theta` acts on the simple `label`:
    /// `chi_i(c gamma(s)^-1) / chi_i(1)`.
    pub fn twist_scalar(&self, label: Label, c: usize) -> Result<Cyclotomic> {
        let x = &self.xmod;
        let st = x.check_label(label)?;
        let (s, i) = label;
        let g = x.g();
        let elem = g.mul(c, g.inv(x.gamma_of(s)));
        let local = st.subgroup.local(elem).ok_or_else(|| {
            Error::InvariantViolation("ribbon element does not act by a scalar".into())
        })?;
        let d = Cyclotomic::from_integer(st.table.degrees()[i] as i64);
        Ok(st.table.value(i, local) * &d.inv()?)
    }
}

/// The block-diagonal character table of a crossed module.
#[derive(Clone, Debug)]
pub struct XModCharTable {
    /// Row labels `(s, i)`.
    pub labels: Vec<Label>,
    /// Columns `(s, c)`: an orbit representative and an ambient class
    /// representative of its stabilizer.
    pub columns: Vec<(usize, usize)>,
    pub entries: Vec<Vec<Cyclotomic>>,
    row_names: Vec<String>,
    column_names: Vec<String>,
    blocks: Vec<usize>,
}

impl XModCharTable {
    pub fn new(simples: &SimpleModules) -> Result<Self> {
        let x = simples.xmod();
        let mut columns = Vec::new();
        let mut column_names = Vec::new();
        let mut blocks = Vec::new();
        for (&s, st) in x.orbit_reps().iter().zip(x.stabilizers()) {
            blocks.push(st.table.len());
            for c in st.subgroup.group.class_reps() {
                let amb = st.subgroup.embed[c];
                columns.push((s, amb));
                column_names.push(format!("[{}]", x.g().name(amb)));
            }
        }
        let mut entries = Vec::new();
        let mut row_names = Vec::new();
        for (&(s, i), chi) in simples.labels().iter().zip(simples.characters()) {
            // Off-orbit values of the full function must vanish.
            for m in 0..x.h().order() {
                if x.orbit_data().orbit_of[m] != s
                    && (0..x.g().order()).any(|g| !chi.value(m, g).is_zero())
                {
                    return Err(Error::InvariantViolation(format!(
                        "character ({}, {}) is nonzero off its orbit",
                        s, i
                    )));
                }
            }
            entries.push(
                columns
                    .iter()
                    .map(|&(t, c)| chi.value(t, c).clone())
                    .collect(),
            );
            row_names.push(format!("ψ_{}^{}", i + 1, x.h().name(s)));
        }
        Ok(XModCharTable {
            labels: simples.labels().to_vec(),
            columns,
            entries,
            row_names,
            column_names,
            blocks,
        })
    }

    pub fn row_names(&self) -> &[String] {
        &self.row_names
    }

    pub fn column_names(&self) -> &[String] {
        &self.column_names
    }

    /// Row counts of the orbit blocks.
    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Aligned text with a separator between orbit blocks.
    pub fn render_text(&self, xmod: &CrossedModule) -> String {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|v| format!("{}", v)).collect())
            .collect();
        let name_w = self
            .row_names
            .iter()
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(0);
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|j| {
                cells
                    .iter()
                    .map(|r| r[j].chars().count())
                    .chain(core::iter::once(self.column_names[j].chars().count()))
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let pad = |s: &str, w: usize| {
            let mut out = String::from(s);
            for _ in s.chars().count()..w {
                out.push(' ');
            }
            out
        };
        // Column ranges of each block.
        let mut ranges = Vec::new();
        let mut start = 0;
        for (k, _) in self.blocks.iter().enumerate() {
            let s = xmod.orbit_reps()[k];
            let len = self.columns.iter().filter(|c| c.0 == s).count();
            ranges.push(start..start + len);
            start += len;
        }
        let line = |first: &str, items: &[String]| {
            let mut out = pad(first, name_w);
            for r in &ranges {
                out.push_str(" |");
                for j in r.clone() {
                    out.push(' ');
                    out.push_str(&pad(&items[j], widths[j]));
                }
            }
            String::from(out.trim_end())
        };
        let mut out = String::new();
        let mut orbit_header: Vec<String> = vec![String::new(); self.columns.len()];
        for (k, r) in ranges.iter().enumerate() {
            if r.start < r.end {
                orbit_header[r.start] = xmod.h().name(xmod.orbit_reps()[k]);
            }
        }
        out.push_str(&line("", &orbit_header));
        out.push('\n');
        out.push_str(&line("", &self.column_names));
        out.push('\n');
        let rule_len = out.lines().map(|l| l.chars().count()).max().unwrap_or(0);
        let rule: String = std::iter::repeat_n('-', rule_len).collect();
        let mut row = 0;
        for &b in &self.blocks {
            out.push_str(&rule);
            out.push('\n');
            for _ in 0..b {
                out.push_str(&line(&self.row_names[row], &cells[row]));
                out.push('\n');
                row += 1;
            }
        }
        out
    }
}
