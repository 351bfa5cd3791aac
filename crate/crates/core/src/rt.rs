//! Evaluation of colored framed tangles and closed braids.
//!
//! Tangles are read bottom to top. A slice is a row of atoms; its map is the
//! Kronecker product of the atom maps with the leftmost strand most
//! significant. Down strands carry the dual module.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rep::{AnyRep, SimpleModules, XModRep};
use crate::scalar::Scalar;
use crate::xmod::Label;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Up,
    Down,
}

/// A strand color: a simple label or a named explicit module.
#[derive(Clone, Debug)]
pub enum Color {
    Simple(Label),
    Explicit { name: String, module: Arc<AnyRep> },
}

impl PartialEq for Color {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Color::Simple(a), Color::Simple(b)) => a == b,
            (Color::Explicit { name: a, .. }, Color::Explicit { name: b, .. }) => a == b,
            _ => false,
        }
    }
}

impl Eq for Color {}

impl Color {
    fn describe(&self) -> String {
        match self {
            Color::Simple((s, i)) => format!("({}, {})", s, i),
            Color::Explicit { name, .. } => name.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrandType {
    pub color: Color,
    pub orientation: Orientation,
}

impl StrandType {
    pub fn up(color: Color) -> Self {
        StrandType {
            color,
            orientation: Orientation::Up,
        }
    }

    pub fn down(color: Color) -> Self {
        StrandType {
            color,
            orientation: Orientation::Down,
        }
    }

    /// Same color, opposite orientation.
    pub fn dual(&self) -> Self {
        StrandType {
            color: self.color.clone(),
            orientation: match self.orientation {
                Orientation::Up => Orientation::Down,
                Orientation::Down => Orientation::Up,
            },
        }
    }

    fn describe(&self) -> String {
        let o = match self.orientation {
            Orientation::Up => "up",
            Orientation::Down => "down",
        };
        format!("{} {}", self.color.describe(), o)
    }
}

/// Elementary pieces of a slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Id(StrandType),
    /// `c_{B,A}^-1: A (x) B -> B (x) A`, so that a positive kink closes to
    /// the twist.
    PosCross,
    /// The braiding `c_{A,B}: A (x) B -> B (x) A`.
    NegCross,
    /// Closes two adjacent strands `(t, t*)`: `ev` when `t` points down,
    /// the derived `ev'` when it points up.
    Cap,
    /// Opens two strands `(t, t*)`: `coev` when `t` points up, the derived
    /// `coev'` when it points down.
    Cup(StrandType),
    Twist(StrandType),
    TwistInv(StrandType),
}

impl Atom {
    fn arity(&self) -> usize {
        match self {
            Atom::Cup(_) => 0,
            Atom::Id(_) | Atom::Twist(_) | Atom::TwistInv(_) => 1,
            Atom::PosCross | Atom::NegCross | Atom::Cap => 2,
        }
    }

    fn outputs(&self, inputs: &[StrandType]) -> Vec<StrandType> {
        match self {
            Atom::Id(_) | Atom::Twist(_) | Atom::TwistInv(_) => inputs.to_vec(),
            Atom::PosCross | Atom::NegCross => vec![inputs[1].clone(), inputs[0].clone()],
            Atom::Cap => Vec::new(),
            Atom::Cup(t) => vec![t.clone(), t.dual()],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredTangle {
    pub boundary_in: Vec<StrandType>,
    pub boundary_out: Option<Vec<StrandType>>,
    pub slices: Vec<Vec<Atom>>,
}

fn mismatch(slice: usize, position: usize, expected: String, found: Option<&StrandType>) -> Error {
    Error::TypeMismatch {
        slice,
        position,
        expected,
        found: found.map_or_else(|| "end of boundary".into(), StrandType::describe),
    }
}

impl ColoredTangle {
    pub fn new(boundary_in: Vec<StrandType>, slices: Vec<Vec<Atom>>) -> Self {
        ColoredTangle {
            boundary_in,
            boundary_out: None,
            slices,
        }
    }

    pub fn identity(boundary: Vec<StrandType>) -> Self {
        let slice = boundary.iter().cloned().map(Atom::Id).collect();
        ColoredTangle::new(boundary, vec![slice])
    }

    /// Checks every slice against its input and returns the boundary
    /// `(input, output)`.
    pub fn typecheck(&self) -> Result<(Vec<StrandType>, Vec<StrandType>)> {
        let mut cur = self.boundary_in.clone();
        for (si, slice) in self.slices.iter().enumerate() {
            cur = slice_outputs(si, slice, &cur)?;
        }
        if let Some(out) = &self.boundary_out {
            let n = self.slices.len();
            for k in 0..out.len().max(cur.len()) {
                match (out.get(k), cur.get(k)) {
                    (Some(e), Some(f)) if e == f => {}
                    (Some(e), f) => return Err(mismatch(n, k, e.describe(), f)),
                    (None, f) => return Err(mismatch(n, k, "end of boundary".into(), f)),
                }
            }
        }
        Ok((self.boundary_in.clone(), cur))
    }

    /// The same tangle with one non-identity atom per slice. Atoms of a
    /// slice are applied left to right, or right to left when `reverse`.
    pub fn sequential(&self, reverse: bool) -> Result<ColoredTangle> {
        let mut cur = self.boundary_in.clone();
        let mut slices = Vec::new();
        for (si, slice) in self.slices.iter().enumerate() {
            let mut ins = Vec::new();
            let mut pos = 0;
            for atom in slice {
                ins.push(cur[pos..pos + atom.arity()].to_vec());
                pos += atom.arity();
            }
            let outs: Vec<Vec<StrandType>> =
                slice.iter().zip(&ins).map(|(a, i)| a.outputs(i)).collect();
            let order: Vec<usize> = if reverse {
                (0..slice.len()).rev().collect()
            } else {
                (0..slice.len()).collect()
            };
            let mut done = vec![false; slice.len()];
            for k in order {
                if matches!(slice[k], Atom::Id(_)) {
                    done[k] = true;
                    continue;
                }
                let mut row = Vec::new();
                for j in 0..slice.len() {
                    if j == k {
                        row.push(slice[k].clone());
                    } else {
                        let side = if done[j] { &outs[j] } else { &ins[j] };
                        row.extend(side.iter().cloned().map(Atom::Id));
                    }
                }
                done[k] = true;
                slices.push(row);
            }
            cur = slice_outputs(si, slice, &cur)?;
        }
        Ok(ColoredTangle {
            boundary_in: self.boundary_in.clone(),
            boundary_out: self.boundary_out.clone(),
            slices,
        })
    }

    fn colors(&self) -> Vec<Color> {
        let mut out: Vec<Color> = Vec::new();
        let mut push = |c: &Color| {
            if !out.contains(c) {
                out.push(c.clone());
            }
        };
        for t in &self.boundary_in {
            push(&t.color);
        }
        for atom in self.slices.iter().flatten() {
            if let Atom::Id(t) | Atom::Cup(t) | Atom::Twist(t) | Atom::TwistInv(t) = atom {
                push(&t.color);
            }
        }
        out
    }
}

fn slice_outputs(si: usize, slice: &[Atom], cur: &[StrandType]) -> Result<Vec<StrandType>> {
    let mut pos = 0;
    let mut next = Vec::new();
    for atom in slice {
        let need = atom.arity();
        if pos + need > cur.len() {
            return Err(mismatch(si, cur.len(), "strand".into(), None));
        }
        let ins = &cur[pos..pos + need];
        match atom {
            Atom::Id(t) | Atom::Twist(t) | Atom::TwistInv(t) if &ins[0] != t => {
                return Err(mismatch(si, pos, t.describe(), Some(&ins[0])));
            }
            Atom::Cap if ins[1] != ins[0].dual() => {
                return Err(mismatch(
                    si,
                    pos + 1,
                    ins[0].dual().describe(),
                    Some(&ins[1]),
                ));
            }
            _ => {}
        }
        next.extend(atom.outputs(ins));
        pos += need;
    }
    if pos != cur.len() {
        return Err(Error::TypeMismatch {
            slice: si,
            position: pos,
            expected: "end of slice".into(),
            found: cur[pos].describe(),
        });
    }
    Ok(next)
}

/// Value of a tangle: exact when every color is one-dimensional and exact.
#[derive(Clone, Debug)]
pub enum TangleMap {
    Exact(Matrix<Cyclotomic>),
    Float(Matrix<Complex64>),
}

/// Value of a closed tangle.
#[derive(Clone, Debug, PartialEq)]
pub struct LinkScalar {
    pub exact: Option<Cyclotomic>,
    pub float: Complex64,
}

impl TangleMap {
    pub fn to_float(&self) -> Matrix<Complex64> {
        match self {
            TangleMap::Exact(m) => m.map(Cyclotomic::to_complex),
            TangleMap::Float(m) => m.clone(),
        }
    }

    /// The scalar of a `1 x 1` map.
    pub fn scalar(&self) -> Option<LinkScalar> {
        match self {
            TangleMap::Exact(m) if m.rows() == 1 && m.cols() == 1 => Some(LinkScalar {
                exact: Some(m[(0, 0)].clone()),
                float: m[(0, 0)].to_complex(),
            }),
            TangleMap::Float(m) if m.rows() == 1 && m.cols() == 1 => Some(LinkScalar {
                exact: None,
                float: m[(0, 0)],
            }),
            _ => None,
        }
    }
}

trait Backend: Scalar {
    fn rep(r: &AnyRep) -> Option<XModRep<Self>>;
}

impl Backend for Cyclotomic {
    fn rep(r: &AnyRep) -> Option<XModRep<Self>> {
        match r {
            AnyRep::Exact(m) => Some(m.clone()),
            AnyRep::Float(_) => None,
        }
    }
}

impl Backend for Complex64 {
    fn rep(r: &AnyRep) -> Option<XModRep<Self>> {
        Some(r.to_float())
    }
}

/// The functor on tangles for a fixed ribbon choice `c`.
pub struct RtEvaluator<'a> {
    simples: &'a SimpleModules,
    ribbon: usize,
}

struct Modules<S: Scalar> {
    entries: Vec<(Color, XModRep<S>, XModRep<S>)>,
}

impl<S: Scalar> Modules<S> {
    fn get(&self, t: &StrandType) -> &XModRep<S> {
        let (_, up, down) = self
            .entries
            .iter()
            .find(|(c, _, _)| c == &t.color)
            .expect("colors resolved before evaluation");
        match t.orientation {
            Orientation::Up => up,
            Orientation::Down => down,
        }
    }
}

/// `sum_i e_i (x) e_i` as a flat vector of length `d^2`.
fn pairing<S: Scalar>(d: usize) -> Vec<S> {
    (0..d * d)
        .map(|k| if k / d == k % d { S::one() } else { S::zero() })
        .collect()
}

fn row<S: Scalar>(v: Vec<S>) -> Matrix<S> {
    Matrix::from_rows(vec![v])
}

fn column<S: Scalar>(v: Vec<S>) -> Matrix<S> {
    Matrix::from_rows(v.into_iter().map(|x| vec![x]).collect())
}

impl<'a> RtEvaluator<'a> {
    pub fn new(simples: &'a SimpleModules, ribbon: usize) -> Result<Self> {
        if !simples.xmod().ribbon_group().contains(&ribbon) {
            return Err(Error::InvalidRibbonChoice { element: ribbon });
        }
        Ok(RtEvaluator { simples, ribbon })
    }

    pub fn ribbon(&self) -> usize {
        self.ribbon
    }

    fn resolve(&self, c: &Color) -> Result<AnyRep> {
        match c {
            Color::Simple(l) => self
                .simples
                .module(*l)
                .cloned()
                .map_err(|_| Error::UnresolvedColor(c.describe())),
            Color::Explicit { module, .. } => {
                let own = match module.as_ref() {
                    AnyRep::Exact(r) => r.xmod(),
                    AnyRep::Float(r) => r.xmod(),
                };
                if own.as_ref() != self.simples.xmod().as_ref() {
                    return Err(Error::UnresolvedColor(c.describe()));
                }
                Ok(module.as_ref().clone())
            }
        }
    }

    pub fn evaluate(&self, t: &ColoredTangle) -> Result<TangleMap> {
        t.typecheck()?;
        let mut resolved = Vec::new();
        for c in t.colors() {
            let m = self.resolve(&c)?;
            resolved.push((c, m));
        }
        if resolved.iter().all(|(_, m)| m.is_exact() && m.dim() == 1) {
            Ok(TangleMap::Exact(
                self.evaluate_in::<Cyclotomic>(t, &resolved)?,
            ))
        } else {
            Ok(TangleMap::Float(
                self.evaluate_in::<Complex64>(t, &resolved)?,
            ))
        }
    }

    fn evaluate_in<S: Backend>(
        &self,
        t: &ColoredTangle,
        resolved: &[(Color, AnyRep)],
    ) -> Result<Matrix<S>> {
        let mut entries = Vec::new();
        for (c, m) in resolved {
            let up = S::rep(m).ok_or(Error::BackendMismatch)?;
            let down = up.dual()?;
            entries.push((c.clone(), up, down));
        }
        let modules = Modules { entries };
        let dim = |seq: &[StrandType]| seq.iter().map(|s| modules.get(s).dim()).product::<usize>();
        let mut cur = t.boundary_in.clone();
        let mut total = Matrix::<S>::identity(dim(&cur));
        for (si, slice) in t.slices.iter().enumerate() {
            let mut m = Matrix::<S>::identity(1);
            let mut pos = 0;
            for atom in slice {
                let ins = &cur[pos..pos + atom.arity()];
                m = m.kron(&self.atom_map(atom, ins, &modules));
                pos += atom.arity();
            }
            total = m.mul(&total);
            cur = slice_outputs(si, slice, &cur)?;
        }
        Ok(total)
    }

    fn atom_map<S: Scalar>(
        &self,
        atom: &Atom,
        ins: &[StrandType],
        modules: &Modules<S>,
    ) -> Matrix<S> {
        match atom {
            Atom::Id(t) => Matrix::identity(modules.get(t).dim()),
            Atom::Twist(t) => modules.get(t).twist(self.ribbon),
            Atom::TwistInv(t) => modules.get(t).twist_inverse(self.ribbon),
            Atom::PosCross => modules.get(&ins[1]).braiding_inverse(modules.get(&ins[0])),
            Atom::NegCross => modules.get(&ins[0]).braiding(modules.get(&ins[1])),
            Atom::Cap => match ins[0].orientation {
                Orientation::Down => row(pairing(modules.get(&ins[0]).dim())),
                Orientation::Up => {
                    let (v, vd) = (modules.get(&ins[0]), modules.get(&ins[1]));
                    self.ev_right(v, vd)
                }
            },
            Atom::Cup(t) => match t.orientation {
                Orientation::Up => column(pairing(modules.get(t).dim())),
                Orientation::Down => {
                    let (vd, v) = (modules.get(t), modules.get(&t.dual()));
                    self.coev_right(v, vd)
                }
            },
        }
    }

    /// `ev' = ev . c'_{V,V*} . (theta_V (x) id)` with `c'` the positive
    /// crossing and `theta` the ribbon element for the identity choice.
    fn ev_right<S: Scalar>(&self, v: &XModRep<S>, vd: &XModRep<S>) -> Matrix<S> {
        let d = v.dim();
        row(pairing::<S>(d))
            .mul(&vd.braiding_inverse(v))
            .mul(&v.twist(0).kron(&Matrix::identity(d)))
    }

    /// `coev' = (id (x) theta_V) . c'_{V,V*} . coev`.
    fn coev_right<S: Scalar>(&self, v: &XModRep<S>, vd: &XModRep<S>) -> Matrix<S> {
        let d = v.dim();
        Matrix::identity(d)
            .kron(&v.twist(0))
            .mul(&vd.braiding_inverse(v))
            .mul(&column(pairing::<S>(d)))
    }
}

/// A link given as the closure of a colored braid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredBraidLink {
    pub strands: usize,
    /// Color of each strand at the bottom of the braid.
    pub colors: Vec<Color>,
    /// `+i` for `sigma_i`, `-i` for its inverse, `1 <= i < strands`.
    pub word: Vec<i64>,
    /// One framing per component, components ordered by their lowest strand.
    pub framings: Vec<i64>,
}

impl ColoredBraidLink {
    /// Strands of each closure component.
    pub fn components(&self) -> Result<Vec<Vec<usize>>> {
        let n = self.strands;
        if n == 0 {
            return Err(Error::InvalidBraid("no strands".into()));
        }
        if self.colors.len() != n {
            return Err(Error::InvalidBraid(format!(
                "{} colors for {} strands",
                self.colors.len(),
                n
            )));
        }
        // perm[p] is the top position of the strand starting at p.
        let mut at: Vec<usize> = (0..n).collect();
        for &w in &self.word {
            let i = w.unsigned_abs() as usize;
            if i == 0 || i >= n {
                return Err(Error::InvalidBraid(format!("generator {} out of range", w)));
            }
            at.swap(i - 1, i);
        }
        let mut perm = vec![0; n];
        for (top, &start) in at.iter().enumerate() {
            perm[start] = top;
        }
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for p in 0..n {
            if seen[p] {
                continue;
            }
            let mut comp = Vec::new();
            let mut q = p;
            while !seen[q] {
                seen[q] = true;
                comp.push(q);
                q = perm[q];
            }
            comp.sort_unstable();
            if comp.iter().any(|&q| self.colors[q] != self.colors[p]) {
                return Err(Error::InvalidBraid(format!(
                    "component through strand {} has more than one color",
                    p
                )));
            }
            comps.push(comp);
        }
        if self.framings.len() != comps.len() {
            return Err(Error::InvalidBraid(format!(
                "{} framings for {} components",
                self.framings.len(),
                comps.len()
            )));
        }
        Ok(comps)
    }

    /// Nested cups, framing twists, the braid, then nested caps. The closing
    /// strands run down on the right.
    pub fn compile(&self) -> Result<ColoredTangle> {
        let comps = self.components()?;
        let n = self.strands;
        let ups: Vec<StrandType> = self.colors.iter().cloned().map(StrandType::up).collect();
        let downs: Vec<StrandType> = ups.iter().rev().map(StrandType::dual).collect();
        let ids = |ts: &[StrandType]| ts.iter().cloned().map(Atom::Id).collect::<Vec<_>>();
        let mut slices = Vec::new();
        for k in 0..n {
            let mut s = ids(&ups[..k]);
            s.push(Atom::Cup(ups[k].clone()));
            s.extend(ids(&downs[n - k..]));
            slices.push(s);
        }
        let mut strands: Vec<StrandType> = ups.clone();
        for (comp, &f) in comps.iter().zip(&self.framings) {
            let p = comp[0];
            for _ in 0..f.unsigned_abs() {
                let mut s = ids(&strands);
                s[p] = if f > 0 {
                    Atom::Twist(strands[p].clone())
                } else {
                    Atom::TwistInv(strands[p].clone())
                };
                s.extend(ids(&downs));
                slices.push(s);
            }
        }
        for &w in &self.word {
            let i = w.unsigned_abs() as usize - 1;
            let mut s = ids(&strands[..i]);
            s.push(if w > 0 {
                Atom::PosCross
            } else {
                Atom::NegCross
            });
            s.extend(ids(&strands[i + 2..]));
            s.extend(ids(&downs));
            slices.push(s);
            strands.swap(i, i + 1);
        }
        for k in (0..n).rev() {
            let mut s = ids(&strands[..k]);
            s.push(Atom::Cap);
            s.extend(ids(&downs[n - k..]));
            slices.push(s);
        }
        Ok(ColoredTangle::new(Vec::new(), slices))
    }
}

/// The invariant of a closed colored braid for the ribbon choice `ribbon`.
pub fn link_invariant(
    simples: &SimpleModules,
    link: &ColoredBraidLink,
    ribbon: usize,
) -> Result<LinkScalar> {
    let ev = RtEvaluator::new(simples, ribbon)?;
    ev.evaluate(&link.compile()?)?.scalar().ok_or_else(|| {
        Error::InvariantViolation("closed tangle did not evaluate to a scalar".into())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::xmod::CrossedModule;

    fn s3() -> SimpleModules {
        let x =
            Arc::new(CrossedModule::conjugation(&FiniteGroup::symmetric(3, 100).unwrap()).unwrap());
        SimpleModules::new(x, 0).unwrap()
    }

    fn close(m: &TangleMap, want: Complex64) -> bool {
        (m.scalar().unwrap().float - want).norm() < 1e-9
    }

    #[test]
    fn snakes() {
        let sm = s3();
        let ev = RtEvaluator::new(&sm, 0).unwrap();
        for &l in sm.labels() {
            for v in [
                StrandType::up(Color::Simple(l)),
                StrandType::down(Color::Simple(l)),
            ] {
                let vd = v.dual();
                let left = ColoredTangle::new(
                    vec![v.clone()],
                    vec![
                        vec![Atom::Cup(v.clone()), Atom::Id(v.clone())],
                        vec![Atom::Id(v.clone()), Atom::Cap],
                    ],
                );
                let right = ColoredTangle::new(
                    vec![v.clone()],
                    vec![
                        vec![Atom::Id(v.clone()), Atom::Cup(vd.clone())],
                        vec![Atom::Cap, Atom::Id(v.clone())],
                    ],
                );
                for t in [left, right] {
                    let m = ev.evaluate(&t).unwrap().to_float();
                    assert!(
                        m.max_abs_diff(&Matrix::identity(m.rows())) < 1e-9,
                        "{:?}",
                        l
                    );
                }
            }
        }
    }

    #[test]
    fn unknots_and_kinks() {
        let sm = s3();
        for &l in sm.labels() {
            let d = sm.dim(l) as f64;
            let twist = sm.twist_scalar(l, 0).unwrap().to_complex();
            let knot = |word: Vec<i64>, f: i64| {
                let n = word.len().min(1) + 1;
                let link = ColoredBraidLink {
                    strands: n,
                    colors: vec![Color::Simple(l); n],
                    word,
                    framings: vec![f],
                };
                link_invariant(&sm, &link, 0).unwrap().float
            };
            assert!((knot(vec![], 0) - d).norm() < 1e-9);
            assert!((knot(vec![], 1) - twist * d).norm() < 1e-9);
            assert!((knot(vec![1], -1) - d).norm() < 1e-9);
            assert!((knot(vec![-1], 1) - d).norm() < 1e-9);
        }
    }

    #[test]
    fn twist_of_tensor_product() {
        let sm = s3();
        let ev = RtEvaluator::new(&sm, 0).unwrap();
        let labels = sm.labels();
        for &a in labels {
            for &b in labels {
                let (va, vb) = (
                    StrandType::up(Color::Simple(a)),
                    StrandType::up(Color::Simple(b)),
                );
                let t = ColoredTangle::new(
                    vec![va.clone(), vb.clone()],
                    vec![
                        vec![Atom::PosCross],
                        vec![Atom::PosCross],
                        vec![Atom::Twist(va.clone()), Atom::Twist(vb.clone())],
                    ],
                );
                let lhs = ev.evaluate(&t).unwrap().to_float();
                let prod = sm
                    .module(a)
                    .unwrap()
                    .to_float()
                    .tensor_product(&sm.module(b).unwrap().to_float())
                    .unwrap();
                assert!(lhs.max_abs_diff(&prod.twist(0)) < 1e-9);
            }
        }
    }

    #[test]
    fn exact_for_linear_colors() {
        let sm = s3();
        let ev = RtEvaluator::new(&sm, 0).unwrap();
        let v = StrandType::up(Color::Simple((0, 1)));
        let t = ColoredTangle::new(
            Vec::new(),
            vec![
                vec![Atom::Cup(v.clone())],
                vec![Atom::Twist(v.clone()), Atom::Id(v.dual())],
                vec![Atom::Cap],
            ],
        );
        let m = ev.evaluate(&t).unwrap();
        assert!(matches!(m, TangleMap::Exact(_)));
        assert!(close(&m, Complex64::new(1.0, 0.0)));
    }

    #[test]
    fn typecheck_errors() {
        let v = StrandType::up(Color::Simple((0, 1)));
        let w = StrandType::up(Color::Simple((0, 2)));
        let empty = ColoredTangle::new(Vec::new(), Vec::new());
        assert_eq!(empty.typecheck().unwrap(), (Vec::new(), Vec::new()));
        let bad = ColoredTangle::new(vec![v.clone(), w.clone()], vec![vec![Atom::Cap]]);
        assert!(matches!(
            bad.typecheck(),
            Err(Error::TypeMismatch {
                slice: 0,
                position: 1,
                ..
            })
        ));
        let short = ColoredTangle::new(vec![v.clone(), w], vec![vec![Atom::Id(v)]]);
        assert!(matches!(
            short.typecheck(),
            Err(Error::TypeMismatch { position: 1, .. })
        ));
    }

    #[test]
    fn ribbon_choice_must_lie_in_c() {
        let sm = s3();
        assert!(matches!(
            RtEvaluator::new(&sm, 1),
            Err(Error::InvalidRibbonChoice { element: 1 })
        ));
    }
}
