//! The Hopf algebra `D(G,H) = K[H] (x) KG` of a crossed module.
//!
//! Basis elements `delta_h (x) g` are keyed by `(h, g)`. Products, coproducts
//! and tensor powers are sparse maps; verification is exhaustive over the
//! basis.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::xmod::{CrossedModule, Label};

/// Default cap on `|G| |H|` for exhaustive verification.
pub const DEFAULT_BASIS_CAP: usize = 2500;

/// `(h, g)` standing for `delta_h (x) g`.
pub type Basis = (usize, usize);

/// An element of the `K`-fold tensor power of `D(G,H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DTensor<const K: usize> {
    terms: BTreeMap<[Basis; K], Cyclotomic>,
}

/// An element of `D(G,H)`.
pub type DElement = DTensor<1>;
/// An element of `D(G,H) (x) D(G,H)`.
pub type DTensorElement = DTensor<2>;

impl<const K: usize> Default for DTensor<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<const K: usize> DTensor<K> {
    pub fn zero() -> Self {
        DTensor {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ([Basis; K], Cyclotomic)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn pure(key: [Basis; K]) -> Self {
        Self::from_terms([(key, Cyclotomic::one())])
    }

    pub fn add_term(&mut self, key: [Basis; K], c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<[Basis; K], Cyclotomic> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &[Basis; K]) -> Cyclotomic {
        self.terms
            .get(key)
            .cloned()
            .unwrap_or_else(Cyclotomic::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Cyclotomic::from_integer(-1)))
    }

    pub fn scale(&self, s: &Cyclotomic) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (*k, c * s)))
    }

    /// Permutes tensor legs: leg `i` of the result is leg `perm[i]` of `self`.
    pub fn permute(&self, perm: [usize; K]) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(k, c)| (core::array::from_fn(|i| k[perm[i]]), c.clone())),
        )
    }
}

impl DElement {
    pub fn basis(h: usize, g: usize) -> Self {
        Self::pure([(h, g)])
    }

    pub fn get(&self, h: usize, g: usize) -> Cyclotomic {
        self.coeff(&[(h, g)])
    }

    /// `(h, g, coefficient)` triples in basis order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Cyclotomic)> {
        self.terms.iter().map(|(k, c)| (k[0].0, k[0].1, c))
    }
}

/// Which families of axioms to verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AxiomFamily {
    Hopf,
    Quasitriangular,
    Ribbon,
}

/// Outcome of one axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.name == name)
    }

    fn push(&mut self, name: &str, witness: Option<String>) {
        self.results.push(AxiomResult {
            name: name.into(),
            pass: witness.is_none(),
            witness,
        });
    }
}

/// `D(G,H)` over a fixed crossed module.
#[derive(Clone, Copy, Debug)]
pub struct DAlgebra<'a> {
    x: &'a CrossedModule,
}

impl<'a> DAlgebra<'a> {
    pub fn new(x: &'a CrossedModule) -> Self {
        DAlgebra { x }
    }

    pub fn xmod(&self) -> &'a CrossedModule {
        self.x
    }

    /// All basis elements, `h` major.
    pub fn basis(&self) -> Vec<Basis> {
        let (gn, hn) = (self.x.g().order(), self.x.h().order());
        (0..hn).flat_map(|h| (0..gn).map(move |g| (h, g))).collect()
    }

    pub fn basis_name(&self, (h, g): Basis) -> String {
        format!("δ_{}⊗{}", self.x.h().name(h), self.x.g().name(g))
    }

    /// `(delta_x (x) a)(delta_y (x) b) = [x = a.y] delta_x (x) ab`.
    #[inline]
    pub fn basis_product(&self, (x, a): Basis, (y, b): Basis) -> Option<Basis> {
        (x == self.x.act(a, y)).then(|| (x, self.x.g().mul(a, b)))
    }

    fn check<const K: usize>(&self, t: &DTensor<K>) -> Result<()> {
        let (gn, hn) = (self.x.g().order(), self.x.h().order());
        if t.terms.keys().flatten().any(|&(h, g)| h >= hn || g >= gn) {
            return Err(Error::XmodMismatch);
        }
        Ok(())
    }

    pub fn multiply(&self, a: &DElement, b: &DElement) -> Result<DElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    /// Product in the `K`-fold tensor power, factorwise.
    pub fn mul<const K: usize>(&self, a: &DTensor<K>, b: &DTensor<K>) -> DTensor<K> {
        // Index the right factor by its H-components: a term (y, b) meets
        // (x, a) only when y = a^-1 . x.
        let mut index: BTreeMap<[usize; K], Vec<(&[Basis; K], &Cyclotomic)>> = BTreeMap::new();
        for (k, c) in &b.terms {
            index.entry(k.map(|(h, _)| h)).or_default().push((k, c));
        }
        let g = self.x.g();
        let mut out = DTensor::zero();
        for (ka, ca) in &a.terms {
            let want: [usize; K] = ka.map(|(x, a)| self.x.act(g.inv(a), x));
            if let Some(list) = index.get(&want) {
                for (kb, cb) in list {
                    let key: [Basis; K] =
                        core::array::from_fn(|i| (ka[i].0, g.mul(ka[i].1, kb[i].1)));
                    out.add_term(key, ca * *cb);
                }
            }
        }
        out
    }

    pub fn unit(&self) -> DElement {
        DElement::from_terms((0..self.x.h().order()).map(|h| ([(h, 0)], Cyclotomic::one())))
    }

    /// Unit of the `K`-fold tensor power.
    pub fn tensor_unit<const K: usize>(&self) -> DTensor<K> {
        let hn = self.x.h().order();
        let total = hn.pow(K as u32);
        DTensor::from_terms((0..total).map(|mut idx| {
            let mut key = [(0, 0); K];
            for slot in key.iter_mut().rev() {
                *slot = (idx % hn, 0);
                idx /= hn;
            }
            (key, Cyclotomic::one())
        }))
    }

    /// `1 (x) g`.
    pub fn group_element(&self, g: usize) -> DElement {
        DElement::from_terms((0..self.x.h().order()).map(|h| ([(h, g)], Cyclotomic::one())))
    }

    /// `delta_h (x) 1`.
    pub fn projector(&self, h: usize) -> DElement {
        DElement::basis(h, 0)
    }

    pub fn counit(&self, a: &DElement) -> Cyclotomic {
        a.iter()
            .filter(|&(h, _, _)| h == 0)
            .fold(Cyclotomic::zero(), |acc, (_, _, c)| &acc + c)
    }

    /// `Delta(delta_x (x) a) = sum_h (delta_h (x) a) (x) (delta_{h^-1 x} (x) a)`.
    pub fn comultiply(&self, a: &DElement) -> DTensorElement {
        let h = self.x.h();
        let mut out = DTensor::zero();
        for (x, g, c) in a.iter() {
            for k in 0..h.order() {
                out.add_term([(k, g), (h.mul(h.inv(k), x), g)], c.clone());
            }
        }
        out
    }

    /// Applies the coproduct to leg `leg` of a 2-tensor.
    pub fn comultiply_leg(&self, t: &DTensorElement, leg: usize) -> DTensor<3> {
        let h = self.x.h();
        let mut out = DTensor::zero();
        for (key, c) in &t.terms {
            let (x, g) = key[leg];
            for k in 0..h.order() {
                let pair = [(k, g), (h.mul(h.inv(k), x), g)];
                let new = if leg == 0 {
                    [pair[0], pair[1], key[1]]
                } else {
                    [key[0], pair[0], pair[1]]
                };
                out.add_term(new, c.clone());
            }
        }
        out
    }

    /// `S(delta_x (x) a) = delta_{a^-1 . x^-1} (x) a^-1`.
    pub fn antipode(&self, a: &DElement) -> DElement {
        let (g, h) = (self.x.g(), self.x.h());
        DElement::from_terms(a.iter().map(|(x, b, c)| {
            let bi = g.inv(b);
            ([(self.x.act(bi, h.inv(x)), bi)], c.clone())
        }))
    }

    /// `R = sum_h (delta_h (x) 1) (x) (1 (x) gamma(h))`.
    pub fn r_matrix(&self) -> DTensorElement {
        self.r_with(|h| self.x.gamma_of(h))
    }

    /// `R^-1 = sum_h (delta_h (x) 1) (x) (1 (x) gamma(h)^-1)`.
    pub fn r_matrix_inverse(&self) -> DTensorElement {
        self.r_with(|h| self.x.g().inv(self.x.gamma_of(h)))
    }

    fn r_with(&self, f: impl Fn(usize) -> usize) -> DTensorElement {
        let hn = self.x.h().order();
        let mut out = DTensor::zero();
        for h in 0..hn {
            let gh = f(h);
            for k in 0..hn {
                out.add_term([(h, 0), (k, gh)], Cyclotomic::one());
            }
        }
        out
    }

    /// Places a 2-tensor on legs `legs` of a 3-tensor, with the unit on the
    /// remaining leg.
    pub fn leg<const A: usize, const B: usize>(&self, t: &DTensorElement) -> DTensor<3> {
        let missing = 3 - A - B;
        let hn = self.x.h().order();
        let mut out = DTensor::zero();
        for (key, c) in &t.terms {
            for u in 0..hn {
                let mut new = [(0, 0); 3];
                new[A] = key[0];
                new[B] = key[1];
                new[missing] = (u, 0);
                out.add_term(new, c.clone());
            }
        }
        out
    }

    /// `theta = sum_n delta_n (x) gamma(n^-1)`.
    pub fn theta(&self) -> DElement {
        let h = self.x.h();
        DElement::from_terms(
            (0..h.order()).map(|n| ([(n, self.x.gamma_of(h.inv(n)))], Cyclotomic::one())),
        )
    }

    /// `(1 (x) c) theta` for any `c` in `G`.
    pub fn ribbon_candidate(&self, c: usize) -> DElement {
        self.mul(&self.group_element(c), &self.theta())
    }

    /// One ribbon element per `c` in `C`, each checked against the ribbon
    /// axioms.
    pub fn ribbon_elements(&self) -> Result<Vec<(usize, DElement)>> {
        let mut out = Vec::new();
        for c in self.x.ribbon_group() {
            let v = self.ribbon_candidate(c);
            if let Some(bad) = self.ribbon_checks(&v).into_iter().find(|r| !r.pass) {
                return Err(Error::InvariantViolation(format!(
                    "(1⊗{})θ fails {}",
                    self.x.g().name(c),
                    bad.name
                )));
            }
            out.push((c, v));
        }
        Ok(out)
    }

    pub fn commutes(&self, a: &DElement, b: &DElement) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Whether `a` commutes with every basis element; on failure returns a
    /// witness.
    pub fn central_witness(&self, a: &DElement) -> Option<Basis> {
        self.basis()
            .into_iter()
            .find(|&b| !self.commutes(a, &DElement::pure([b])))
    }

    /// Central, S-fixed, counit one, and `Delta(v) = (R21 R)^-1 (v (x) v)`.
    pub fn ribbon_checks(&self, v: &DElement) -> Vec<AxiomResult> {
        let mut report = AxiomReport::default();
        report.push(
            "ribbon_central",
            self.central_witness(v)
                .map(|b| format!("fails to commute with {}", self.basis_name(b))),
        );
        report.push(
            "ribbon_antipode",
            (self.antipode(v) != *v).then(|| "S(θ) ≠ θ".into()),
        );
        report.push(
            "ribbon_counit",
            (!self.counit(v).is_one()).then(|| format!("ε(θ) = {}", self.counit(v))),
        );
        let vv = self.outer(v, v);
        let r = self.r_matrix_inverse();
        let r21 = self.r_matrix_inverse().permute([1, 0]);
        // (R21 R)^-1 = R^-1 R21^-1
        let rhs = self.mul(&self.mul(&r, &r21), &vv);
        report.push(
            "ribbon_coproduct",
            (self.comultiply(v) != rhs).then(|| "Δ(θ) ≠ (R21 R)^-1 (θ⊗θ)".into()),
        );
        report.results
    }

    /// `a (x) b`.
    pub fn outer(&self, a: &DElement, b: &DElement) -> DTensorElement {
        let mut out = DTensor::zero();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                out.add_term([ka[0], kb[0]], ca * cb);
            }
        }
        out
    }

    /// Exhaustive verification of the requested axiom families.
    pub fn verify_axioms(&self, which: &[AxiomFamily], cap: usize) -> Result<AxiomReport> {
        let size = self.x.algebra_dim();
        if size > cap {
            return Err(Error::CapExceeded { size, cap });
        }
        let mut report = AxiomReport::default();
        if which.contains(&AxiomFamily::Hopf) {
            self.verify_hopf(&mut report);
        }
        if which.contains(&AxiomFamily::Quasitriangular) {
            self.verify_quasitriangular(&mut report);
        }
        if which.contains(&AxiomFamily::Ribbon) {
            for c in self.x.ribbon_group() {
                let v = self.ribbon_candidate(c);
                for mut r in self.ribbon_checks(&v) {
                    r.witness = r
                        .witness
                        .map(|w| format!("c = {}: {}", self.x.g().name(c), w));
                    match report.results.iter_mut().find(|e| e.name == r.name) {
                        Some(e) if e.pass && !r.pass => *e = r,
                        Some(_) => {}
                        None => report.results.push(r),
                    }
                }
            }
        }
        Ok(report)
    }

    fn verify_hopf(&self, report: &mut AxiomReport) {
        let basis = self.basis();
        let elems: Vec<DElement> = basis.iter().map(|&b| DElement::pure([b])).collect();
        let name = |b: Basis| self.basis_name(b);

        let mut witness = None;
        'assoc: for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                let ab = self.mul(a, b);
                for (k, c) in elems.iter().enumerate() {
                    if self.mul(&ab, c) != self.mul(a, &self.mul(b, c)) {
                        witness = Some(format!(
                            "({}, {}, {})",
                            name(basis[i]),
                            name(basis[j]),
                            name(basis[k])
                        ));
                        break 'assoc;
                    }
                }
            }
        }
        report.push("associativity", witness);

        let unit = self.unit();
        report.push(
            "unit",
            basis
                .iter()
                .zip(&elems)
                .find(|(_, a)| self.mul(&unit, a) != **a || self.mul(a, &unit) != **a)
                .map(|(&b, _)| name(b)),
        );

        report.push(
            "coassociativity",
            basis
                .iter()
                .zip(&elems)
                .find(|(_, a)| {
                    let d = self.comultiply(a);
                    self.comultiply_leg(&d, 0) != self.comultiply_leg(&d, 1)
                })
                .map(|(&b, _)| name(b)),
        );

        report.push(
            "counit",
            basis
                .iter()
                .zip(&elems)
                .find(|(_, a)| {
                    let d = self.comultiply(a);
                    let mut left = DElement::zero();
                    let mut right = DElement::zero();
                    for (k, c) in &d.terms {
                        if k[0].0 == 0 {
                            left.add_term([k[1]], c.clone());
                        }
                        if k[1].0 == 0 {
                            right.add_term([k[0]], c.clone());
                        }
                    }
                    left != **a || right != **a
                })
                .map(|(&b, _)| name(b)),
        );

        let mut witness = None;
        'bialg: for (i, a) in elems.iter().enumerate() {
            let da = self.comultiply(a);
            for (j, b) in elems.iter().enumerate() {
                if self.comultiply(&self.mul(a, b)) != self.mul(&da, &self.comultiply(b)) {
                    witness = Some(format!("({}, {})", name(basis[i]), name(basis[j])));
                    break 'bialg;
                }
            }
        }
        let counit_mult = basis.iter().find_map(|&a| {
            basis.iter().find_map(|&b| {
                let (ea, eb) = (
                    self.counit(&DElement::pure([a])),
                    self.counit(&DElement::pure([b])),
                );
                let eab = self.counit(&self.mul(&DElement::pure([a]), &DElement::pure([b])));
                (eab != &ea * &eb)
                    .then(|| format!("ε not multiplicative at ({}, {})", name(a), name(b)))
            })
        });
        let unit_coprod =
            (self.comultiply(&unit) != self.tensor_unit::<2>()).then(|| "Δ(1) ≠ 1⊗1".into());
        report.push("bialgebra", witness.or(counit_mult).or(unit_coprod));

        report.push(
            "antipode",
            basis
                .iter()
                .zip(&elems)
                .find(|(_, a)| {
                    let d = self.comultiply(a);
                    let eps = unit.scale(&self.counit(a));
                    let mut left = DElement::zero();
                    let mut right = DElement::zero();
                    for (k, c) in &d.terms {
                        let (x, y) = (DElement::pure([k[0]]), DElement::pure([k[1]]));
                        left = left.add(&self.mul(&self.antipode(&x), &y).scale(c));
                        right = right.add(&self.mul(&x, &self.antipode(&y)).scale(c));
                    }
                    left != eps || right != eps
                })
                .map(|(&b, _)| name(b)),
        );

        report.push(
            "antipode_involutive",
            basis
                .iter()
                .zip(&elems)
                .find(|(_, a)| self.antipode(&self.antipode(a)) != **a)
                .map(|(&b, _)| name(b)),
        );
    }

    fn verify_quasitriangular(&self, report: &mut AxiomReport) {
        let r = self.r_matrix();
        let rinv = self.r_matrix_inverse();
        let one = self.tensor_unit::<2>();
        report.push(
            "r_invertible",
            (self.mul(&r, &rinv) != one || self.mul(&rinv, &r) != one)
                .then(|| "R R^-1 ≠ 1⊗1".into()),
        );

        report.push(
            "r_conjugates_coproduct",
            self.basis()
                .into_iter()
                .find(|&b| {
                    let d = self.comultiply(&DElement::pure([b]));
                    self.mul(&r, &d) != self.mul(&d.permute([1, 0]), &r)
                })
                .map(|b| format!("R Δ(x) ≠ Δop(x) R at x = {}", self.basis_name(b))),
        );

        let r12 = self.leg::<0, 1>(&r);
        let r13 = self.leg::<0, 2>(&r);
        let r23 = self.leg::<1, 2>(&r);
        report.push(
            "r_coproduct_left",
            (self.comultiply_leg(&r, 0) != self.mul(&r13, &r23))
                .then(|| "(Δ⊗id)(R) ≠ R13 R23".into()),
        );
        report.push(
            "r_coproduct_right",
            (self.comultiply_leg(&r, 1) != self.mul(&r13, &r12))
                .then(|| "(id⊗Δ)(R) ≠ R13 R12".into()),
        );
        let lhs = self.mul(&self.mul(&r12, &r13), &r23);
        let rhs = self.mul(&self.mul(&r23, &r13), &r12);
        report.push(
            "yang_baxter",
            (lhs != rhs).then(|| "R12 R13 R23 ≠ R23 R13 R12".into()),
        );
    }

    /// `sum_g delta_{g.z} (x) g c g^-1` for each orbit representative `z` and
    /// each class `[c]` of `Stab(z)`, with the pair it comes from.
    pub fn center_basis(&self) -> Vec<((usize, usize), DElement)> {
        let g = self.x.g();
        let mut out = Vec::new();
        for (&z, st) in self.x.orbit_reps().iter().zip(self.x.stabilizers()) {
            for c_local in st.subgroup.group.class_reps() {
                let c = st.subgroup.embed[c_local];
                let elem = DElement::from_terms(
                    (0..g.order()).map(|a| ([(self.x.act(a, z), g.conj(a, c))], Cyclotomic::one())),
                );
                out.push(((z, c), elem));
            }
        }
        out
    }

    /// Dimension of the centre, from the exact linear system `x b = b x` over
    /// the algebra generators `delta_h (x) 1` and `1 (x) s`.
    pub fn center_dimension(&self) -> usize {
        let basis = self.basis();
        let n = basis.len();
        let pos: BTreeMap<Basis, usize> = basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let mut gens: Vec<DElement> = (0..self.x.h().order()).map(|h| self.projector(h)).collect();
        gens.extend(
            self.x
                .g()
                .generators()
                .into_iter()
                .map(|s| self.group_element(s)),
        );
        // Column j of the commutator map for generator y is [b_j, y].
        let mut rows: BTreeMap<Vec<(usize, i64)>, ()> = BTreeMap::new();
        for y in &gens {
            let mut eqs: BTreeMap<usize, BTreeMap<usize, i64>> = BTreeMap::new();
            for (j, &b) in basis.iter().enumerate() {
                let e = DElement::pure([b]);
                let comm = self.mul(&e, y).sub(&self.mul(y, &e));
                for (k, c) in comm.terms() {
                    let v = c.to_i64().expect("integer structure constants");
                    *eqs.entry(pos[&k[0]]).or_default().entry(j).or_default() += v;
                }
            }
            for (_, row) in eqs {
                let row: Vec<(usize, i64)> = row.into_iter().filter(|&(_, v)| v != 0).collect();
                if !row.is_empty() {
                    rows.insert(row, ());
                }
            }
        }
        let dense: Vec<Vec<Cyclotomic>> = rows
            .into_keys()
            .map(|row| {
                let mut r = vec![Cyclotomic::zero(); n];
                for (j, v) in row {
                    r[j] = Cyclotomic::from_integer(v);
                }
                r
            })
            .collect();
        if dense.is_empty() {
            return n;
        }
        n - Matrix::from_rows(dense).rank()
    }

    /// `f_i^z = (1/|Stab z|) sum_g delta_{g.z} (x) g e_i^z g^-1`, verified to
    /// be central orthogonal idempotents summing to one.
    pub fn central_idempotents(&self) -> Result<Vec<(Label, DElement)>> {
        let g = self.x.g();
        let mut out = Vec::new();
        for (&z, st) in self.x.orbit_reps().iter().zip(self.x.stabilizers()) {
            let scale = Rational::new(BigInt::from(1), BigInt::from(st.subgroup.group.order()));
            for (i, e) in st.idempotents.iter().enumerate() {
                let mut f = DElement::zero();
                for a in 0..g.order() {
                    let h = self.x.act(a, z);
                    for (loc, c) in e.iter().enumerate() {
                        if !c.is_zero() {
                            let amb = st.subgroup.embed[loc];
                            f.add_term([(h, g.conj(a, amb))], c.scale(&scale));
                        }
                    }
                }
                out.push(((z, i), f));
            }
        }
        let mut sum = DElement::zero();
        for (i, (la, fa)) in out.iter().enumerate() {
            sum = sum.add(fa);
            if let Some(b) = self.central_witness(fa) {
                return Err(Error::InvariantViolation(format!(
                    "idempotent {:?} does not commute with {}",
                    la,
                    self.basis_name(b)
                )));
            }
            for (lb, fb) in out.iter().skip(i) {
                let p = self.mul(fa, fb);
                let ok = if la == lb { p == *fa } else { p.is_zero() };
                if !ok {
                    return Err(Error::InvariantViolation(format!(
                        "idempotents {:?} and {:?} are not orthogonal idempotents",
                        la, lb
                    )));
                }
            }
        }
        if sum != self.unit() {
            return Err(Error::InvariantViolation(
                "idempotents do not sum to 1".into(),
            ));
        }
        Ok(out)
    }

    /// Matrix block sizes `|G.z| d_i`, checked against `sum size^2 = |G||H|`.
    pub fn wedderburn_profile(&self) -> Result<Vec<(Label, usize)>> {
        let out: Vec<(Label, usize)> = self
            .x
            .labels()
            .into_iter()
            .map(|l| Ok((l, self.x.label_dim(l)?)))
            .collect::<Result<_>>()?;
        let total: usize = out.iter().map(|(_, s)| s * s).sum();
        if total != self.x.algebra_dim() {
            return Err(Error::InvariantViolation(format!(
                "sum of squared block sizes {} ≠ {}",
                total,
                self.x.algebra_dim()
            )));
        }
        Ok(out)
    }
}
