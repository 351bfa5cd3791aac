//! Fusion coefficients `N_{a,b}^c` by three methods and the fusion ring.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chartable::GroupAlgebraElement;
use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::rep::{AnyRep, SimpleModules};
use crate::xmod::{CrossedModule, Label};

/// How fusion coefficients are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FusionMethod {
    /// Inner product of the convolution of characters.
    Char,
    /// The reduced double sum over `G x G`.
    Reduced,
    /// Decomposition of the explicit tensor product module.
    Explicit,
}

fn to_count(v: &Cyclotomic) -> Result<u64> {
    v.to_i64()
        .filter(|&n| n >= 0)
        .map(|n| n as u64)
        .ok_or(Error::NonInteger)
}

/// `N = <psi_a psi_b, psi_c>`.
pub fn fusion_coefficient_char(
    simples: &SimpleModules,
    a: Label,
    b: Label,
    c: Label,
) -> Result<u64> {
    let prod = simples.character(a)?.convolution(simples.character(b)?)?;
    to_count(&prod.inner_product(simples.character(c)?)?)
}

/// `N = 1/(|Stab s||Stab z|) sum_{a,g} psi_i^s(s,g) psi_j^z(z,a^-1 g a)
/// conj(psi_k^t(s (a.z), g))` for `a = (s,i)`, `b = (z,j)`, `c = (t,k)`.
pub fn fusion_coefficient_reduced(
    simples: &SimpleModules,
    a: Label,
    b: Label,
    c: Label,
) -> Result<u64> {
    let x = simples.xmod();
    let (g, h) = (x.g(), x.h());
    let (s, z) = (a.0, b.0);
    let (pa, pb, pc) = (
        simples.character(a)?,
        simples.character(b)?,
        simples.character(c)?,
    );
    let mut acc = Cyclotomic::zero();
    for el in 0..g.order() {
        let m = h.mul(s, x.act(el, z));
        for gg in 0..g.order() {
            let u = pa.value(s, gg);
            if u.is_zero() {
                continue;
            }
            let v = pb.value(z, g.mul(g.mul(g.inv(el), gg), el));
            if v.is_zero() {
                continue;
            }
            let w = pc.value(m, gg);
            if w.is_zero() {
                continue;
            }
            acc = &acc + &(&(u * v) * &w.conj());
        }
    }
    let sa = x.check_label(a)?.subgroup.group.order();
    let sb = x.check_label(b)?.subgroup.group.order();
    to_count(&acc.scale(&Rational::new(BigInt::from(1), BigInt::from(sa * sb))))
}

/// Decomposes `simple(a) (x) simple(b)` and cross-checks it against the
/// character method and the occurrence predicate.
pub fn fusion_by_decomposition(
    simples: &SimpleModules,
    a: Label,
    b: Label,
) -> Result<Vec<(Label, u64)>> {
    let ma = simples.module(a)?;
    let mb = simples.module(b)?;
    let product = match (ma, mb) {
        (AnyRep::Exact(_), AnyRep::Exact(_)) | (AnyRep::Float(_), AnyRep::Float(_)) => {
            ma.tensor_product(mb)?
        }
        _ => AnyRep::Float(ma.to_float().tensor_product(&mb.to_float())?),
    };
    let parts: BTreeMap<Label, u64> = product
        .decompose(simples)?
        .into_iter()
        .map(|(l, n)| (l, n as u64))
        .collect();
    for &c in simples.labels() {
        let n = parts.get(&c).copied().unwrap_or(0);
        let reference = fusion_coefficient_char(simples, a, b, c)?;
        if n != reference {
            return Err(Error::MethodMismatch(format!(
                "{:?} ⊗ {:?} contains {:?} {} times by decomposition, {} by characters",
                a, b, c, n, reference
            )));
        }
        if clebsch_gordan_predicate(simples.xmod(), a, b, c)? != (n > 0) {
            return Err(Error::MethodMismatch(format!(
                "occurrence predicate disagrees for {:?} ⊗ {:?} -> {:?}",
                a, b, c
            )));
        }
    }
    Ok(parts.into_iter().collect())
}

/// Whether the simple `c = (t,k)` can occur in `a (x) b` for `a = (z,i)`,
/// `b = (s,j)`: `t` lies in `(G.z)(G.s)` and some `(h, l)` with
/// `(h.z)(l.s) = t` has `(h e_i^z h^-1 (x) l e_j^s l^-1) Delta(e_k^t) != 0`.
///
/// The product is taken in `KG (x) KG`: `x -> 1 (x) x` embeds `KG` in
/// `D(G,H)` multiplicatively and `Delta(1 (x) g) = (1 (x) g) (x) (1 (x) g)`,
/// so this is the same product as in `D (x) D`.
pub fn clebsch_gordan_predicate(x: &CrossedModule, a: Label, b: Label, c: Label) -> Result<bool> {
    let (z, i) = a;
    let (s, j) = b;
    let (t, k) = c;
    let (sz, ss, st) = (x.check_label(a)?, x.check_label(b)?, x.check_label(c)?);
    let g = x.g();
    let h = x.h();
    let pairs: Vec<(usize, usize)> = (0..g.order())
        .flat_map(|p| (0..g.order()).map(move |q| (p, q)))
        .filter(|&(p, q)| h.mul(x.act(p, z), x.act(q, s)) == t)
        .collect();
    if pairs.is_empty() {
        return Ok(false);
    }
    let ambient = |e: &GroupAlgebraElement, embed: &[usize]| -> Vec<(usize, Cyclotomic)> {
        e.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(loc, c)| (embed[loc], c.clone()))
            .collect()
    };
    let ei = ambient(&sz.idempotents[i], &sz.subgroup.embed);
    let ej = ambient(&ss.idempotents[j], &ss.subgroup.embed);
    let ek = ambient(&st.idempotents[k], &st.subgroup.embed);
    let conj = |e: &[(usize, Cyclotomic)], p: usize| -> Vec<(usize, Cyclotomic)> {
        e.iter().map(|(y, c)| (g.conj(p, *y), c.clone())).collect()
    };
    for (p, q) in pairs {
        let u = conj(&ei, p);
        let v = conj(&ej, q);
        let mut prod: BTreeMap<(usize, usize), Cyclotomic> = BTreeMap::new();
        for (xa, ca) in &u {
            for (yb, cb) in &v {
                let cab = ca * cb;
                for (el, lam) in &ek {
                    let key = (g.mul(*xa, *el), g.mul(*yb, *el));
                    let entry = prod.entry(key).or_insert_with(Cyclotomic::zero);
                    *entry = &*entry + &(&cab * lam);
                }
            }
        }
        if prod.values().any(|v| !v.is_zero()) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `N_{a,b}^c` indexed by label positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    pub labels: Vec<Label>,
    /// `n[a][b][c]`.
    pub n: Vec<Vec<Vec<u64>>>,
    pub dims: Vec<u64>,
}

impl FusionRing {
    pub fn coefficient(&self, a: usize, b: usize, c: usize) -> u64 {
        self.n[a][b][c]
    }

    /// Index of the unit label.
    pub fn unit(&self) -> usize {
        self.labels
            .iter()
            .position(|&l| l == (0, 0))
            .expect("unit label")
    }

    /// Unit, commutativity, associativity and the dimension rule.
    pub fn check(&self) -> Result<()> {
        let r = self.labels.len();
        let u = self.unit();
        let fail = |what: &str| Err(Error::InvariantViolation(format!("fusion ring: {}", what)));
        for a in 0..r {
            for b in 0..r {
                if self.n[u][a][b] != u64::from(a == b) {
                    return fail("unit");
                }
                let mut dim = 0;
                for c in 0..r {
                    if self.n[a][b][c] != self.n[b][a][c] {
                        return fail("commutativity");
                    }
                    dim += self.n[a][b][c] * self.dims[c];
                    for d in 0..r {
                        let lhs: u64 = (0..r).map(|e| self.n[a][b][e] * self.n[e][c][d]).sum();
                        let rhs: u64 = (0..r).map(|e| self.n[b][c][e] * self.n[a][e][d]).sum();
                        if lhs != rhs {
                            return fail("associativity");
                        }
                    }
                }
                if dim != self.dims[a] * self.dims[b] {
                    return fail("dimension rule");
                }
            }
        }
        Ok(())
    }
}

/// Full table by `method`.
pub fn fusion_table(simples: &SimpleModules, method: FusionMethod) -> Result<FusionRing> {
    let labels = simples.labels().to_vec();
    let r = labels.len();
    let mut n = vec![vec![vec![0u64; r]; r]; r];
    for (ia, &a) in labels.iter().enumerate() {
        for (ib, &b) in labels.iter().enumerate() {
            match method {
                FusionMethod::Explicit => {
                    for (c, m) in fusion_by_decomposition(simples, a, b)? {
                        n[ia][ib][simples.index(c)?] = m;
                    }
                }
                FusionMethod::Char => {
                    let prod = simples.character(a)?.convolution(simples.character(b)?)?;
                    for (ic, chi) in simples.characters().iter().enumerate() {
                        n[ia][ib][ic] = to_count(&prod.inner_product(chi)?)?;
                    }
                }
                FusionMethod::Reduced => {
                    for (ic, &c) in labels.iter().enumerate() {
                        n[ia][ib][ic] = fusion_coefficient_reduced(simples, a, b, c)?;
                    }
                }
            }
        }
    }
    let dims = labels.iter().map(|&l| simples.dim(l) as u64).collect();
    Ok(FusionRing { labels, n, dims })
}

/// The fusion ring by characters, with its invariants checked and the
/// reduced formula compared on all triples (at most 512) or on a seeded
/// tenth of them.
pub fn fusion_ring(simples: &SimpleModules, seed: u64) -> Result<FusionRing> {
    let ring = fusion_table(simples, FusionMethod::Char)?;
    ring.check()?;
    let r = ring.labels.len();
    let total = r * r * r;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for idx in 0..total {
        if total > 512 && rng.next_u32() % 10 != 0 {
            continue;
        }
        let (a, b, c) = (idx / (r * r), (idx / r) % r, idx % r);
        let m =
            fusion_coefficient_reduced(simples, ring.labels[a], ring.labels[b], ring.labels[c])?;
        if m != ring.n[a][b][c] {
            return Err(Error::MethodMismatch(format!(
                "reduced formula gives {} for {:?} ⊗ {:?} -> {:?}, characters give {}",
                m, ring.labels[a], ring.labels[b], ring.labels[c], ring.n[a][b][c]
            )));
        }
    }
    Ok(ring)
}
