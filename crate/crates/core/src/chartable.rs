//! Exact character tables by the Burnside–Dixon method, and the central
//! idempotents of group algebras.
//!
//! Class-sum structure constants are reduced modulo a prime `p = 1 mod e`
//! (`e` the exponent), their common eigenvectors give the characters mod `p`,
//! and each value is lifted to Q(zeta_e) by recovering the multiplicity of
//! every `e`-th root of unity as an eigenvalue.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Default bound on the order of groups whose tables are computed.
pub const DEFAULT_TABLE_CAP: usize = 512;

#[derive(Clone, Debug)]
pub struct GroupCharTable {
    group: FiniteGroup,
    exponent: usize,
    class_reps: Vec<usize>,
    class_sizes: Vec<usize>,
    rows: Vec<Vec<Cyclotomic>>,
    degrees: Vec<usize>,
}

impl GroupCharTable {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn class_reps(&self) -> &[usize] {
        &self.class_reps
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    /// Character values, one row per irreducible, indexed by class.
    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.rows
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `chi_i(x)` for an arbitrary element `x`.
    pub fn value(&self, i: usize, x: usize) -> &Cyclotomic {
        &self.rows[i][self.group.class_of(x)]
    }

    /// Index of the trivial character (always 0 after sorting).
    pub fn trivial_index(&self) -> usize {
        0
    }
}

/// Computes the exact character table of `group`.
pub fn character_table(group: &FiniteGroup, cap: usize) -> Result<GroupCharTable> {
    let n = group.order();
    if n > cap {
        return Err(Error::OrderBoundExceeded { bound: cap });
    }
    let classes = group.conjugacy_classes();
    let r = classes.len();
    let reps = group.class_reps();
    let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
    let exponent = group.exponent();

    // c[j][k][l] = #{(x, y) in C_j x C_k : x y = rep_l}
    let mut c = vec![vec![vec![0u64; r]; r]; r];
    for (j, cj) in classes.iter().enumerate() {
        for &x in cj {
            for (k, ck) in classes.iter().enumerate() {
                for &y in ck {
                    let z = group.mul(x, y);
                    let l = group.class_of(z);
                    if reps[l] == z {
                        c[j][k][l] += 1;
                    }
                }
            }
        }
    }

    let p = choose_prime(n, exponent);
    let field = Fp::new(p);

    // Split F_p^r into common eigenspaces of all A_j, (A_j)_{k,l} = c_jkl.
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| (0..r).map(|k| u64::from(i == k)).collect())
        .collect()];
    for cj in c.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let a: Vec<Vec<u64>> = cj
            .iter()
            .map(|row| row.iter().map(|&v| v % p).collect())
            .collect();
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            next.extend(field.split(&a, &space)?);
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::LiftFailure);
    }

    let inverse_class: Vec<usize> = reps.iter().map(|&x| group.class_of(group.inv(x))).collect();
    let z = field.primitive_root_of_order(exponent as u64);
    let e_inv = field.inv(exponent as u64 % p);
    let max_degree = isqrt(n);

    let mut rows = Vec::with_capacity(r);
    let mut degrees = Vec::with_capacity(r);
    for space in &spaces {
        let v = &space[0];
        let lead = field.inv(v[0]);
        let w: Vec<u64> = v.iter().map(|&x| field.mul(x, lead)).collect();
        // |G| / d^2 = sum_l w_l w_l' / h_l
        let mut s = 0u64;
        for l in 0..r {
            let t = field.mul(
                field.mul(w[l], w[inverse_class[l]]),
                field.inv(sizes[l] as u64 % p),
            );
            s = field.add(s, t);
        }
        if s == 0 {
            return Err(Error::LiftFailure);
        }
        let d2 = field.mul(n as u64 % p, field.inv(s));
        let d = (1..=max_degree)
            .find(|&d| (d * d) as u64 % p == d2)
            .ok_or(Error::LiftFailure)?;
        let chi_mod: Vec<u64> = (0..r)
            .map(|l| field.mul(field.mul(d as u64, w[l]), field.inv(sizes[l] as u64 % p)))
            .collect();

        let mut row = Vec::with_capacity(r);
        for &x in &reps {
            // Values at powers of x.
            let powers: Vec<u64> = (0..exponent)
                .map(|t| chi_mod[group.class_of(group.pow(x, t))])
                .collect();
            let mut terms = Vec::new();
            for k in 0..exponent {
                let mut m = 0u64;
                for (t, &val) in powers.iter().enumerate() {
                    let zz = field.pow(z, ((exponent - (k * t) % exponent) % exponent) as u64);
                    m = field.add(m, field.mul(val, zz));
                }
                let m = field.mul(m, e_inv);
                if m as usize > d {
                    return Err(Error::LiftFailure);
                }
                if m != 0 {
                    terms.push((k, Rational::from_integer(BigInt::from(m))));
                }
            }
            row.push(Cyclotomic::from_exponents(exponent, terms));
        }
        rows.push(row);
        degrees.push(d);
    }

    let mut order: Vec<usize> = (0..r).collect();
    let keys: Vec<Vec<(i64, i64)>> = rows
        .iter()
        .map(|row| row.iter().map(Cyclotomic::sort_key).collect())
        .collect();
    order.sort_by(|&a, &b| {
        degrees[a]
            .cmp(&degrees[b])
            .then_with(|| keys[a].cmp(&keys[b]))
    });

    Ok(GroupCharTable {
        group: group.clone(),
        exponent,
        class_reps: reps,
        class_sizes: sizes,
        rows: order.iter().map(|&i| rows[i].clone()).collect(),
        degrees: order.iter().map(|&i| degrees[i]).collect(),
    })
}

/// An element of the group algebra, one coefficient per group element.
pub type GroupAlgebraElement = Vec<Cyclotomic>;

/// Product in the group algebra `K[G]`.
pub fn group_algebra_mul(
    group: &FiniteGroup,
    a: &[Cyclotomic],
    b: &[Cyclotomic],
) -> GroupAlgebraElement {
    let n = group.order();
    let mut out = vec![Cyclotomic::zero(); n];
    for (x, ax) in a.iter().enumerate() {
        if ax.is_zero() {
            continue;
        }
        for (y, by) in b.iter().enumerate() {
            if by.is_zero() {
                continue;
            }
            let xy = group.mul(x, y);
            out[xy] = &out[xy] + &(ax * by);
        }
    }
    out
}

/// `e_i = (d_i / |G|) sum_g chi_i(g^-1) g`, one per irreducible character,
/// checked to be orthogonal idempotents summing to 1.
pub fn central_idempotents_group(table: &GroupCharTable) -> Result<Vec<GroupAlgebraElement>> {
    let g = table.group();
    let n = g.order();
    let idempotents: Vec<GroupAlgebraElement> = (0..table.len())
        .map(|i| {
            let scale = Rational::new(BigInt::from(table.degrees()[i]), BigInt::from(n));
            (0..n)
                .map(|x| table.value(i, g.inv(x)).scale(&scale))
                .collect()
        })
        .collect();
    let mut sum = vec![Cyclotomic::zero(); n];
    for (i, ei) in idempotents.iter().enumerate() {
        for (s, c) in sum.iter_mut().zip(ei) {
            *s = &*s + c;
        }
        for (j, ej) in idempotents.iter().enumerate() {
            let prod = group_algebra_mul(g, ei, ej);
            let ok = if i == j {
                prod == *ei
            } else {
                prod.iter().all(Cyclotomic::is_zero)
            };
            if !ok {
                return Err(Error::InvariantViolation(alloc::format!(
                    "group idempotents {} and {} are not orthogonal idempotents",
                    i,
                    j
                )));
            }
        }
    }
    if !(sum[0].is_one() && sum[1..].iter().all(Cyclotomic::is_zero)) {
        return Err(Error::InvariantViolation(
            "group idempotents do not sum to 1".into(),
        ));
    }
    Ok(idempotents)
}

fn isqrt(n: usize) -> usize {
    let mut d = 0;
    while (d + 1) * (d + 1) <= n {
        d += 1;
    }
    d
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime `p = 1 mod e` with `p > 2 sqrt(|G|)` not dividing `|G|`.
fn choose_prime(order: usize, exponent: usize) -> u64 {
    let e = exponent as u64;
    let lower = 2 * isqrt(order) as u64 + 2;
    let mut p = e + 1;
    while p <= lower || !is_prime(p) || (order as u64).is_multiple_of(p) {
        p += e;
    }
    p
}

struct Fp {
    p: u64,
}

impl Fp {
    fn new(p: u64) -> Self {
        Fp { p }
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    fn primitive_root_of_order(&self, e: u64) -> u64 {
        let p = self.p;
        let mut factors = Vec::new();
        let mut m = p - 1;
        let mut d = 2;
        while d * d <= m {
            if m.is_multiple_of(d) {
                factors.push(d);
                while m.is_multiple_of(d) {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            factors.push(m);
        }
        let generator = (2..p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, (p - 1) / q) != 1))
            .unwrap_or(1);
        self.pow(generator, (p - 1) / e)
    }

    /// Null space of an `rows x cols` matrix, as basis vectors.
    fn nullspace(&self, m: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
        let mut a: Vec<Vec<u64>> = m.to_vec();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            let Some(pr) = (row..a.len()).find(|&r| a[r][col] != 0) else {
                continue;
            };
            a.swap(row, pr);
            let inv = self.inv(a[row][col]);
            for v in a[row].iter_mut() {
                *v = self.mul(*v, inv);
            }
            for r in 0..a.len() {
                if r != row && a[r][col] != 0 {
                    let f = a[r][col];
                    for c in 0..cols {
                        let t = self.mul(f, a[row][c]);
                        a[r][c] = self.sub(a[r][c], t);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == a.len() {
                break;
            }
        }
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; cols];
                v[f] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.sub(0, a[i][f]);
                }
                v
            })
            .collect()
    }

    /// Splits the invariant subspace spanned by `basis` into eigenspaces of `a`.
    fn split(&self, a: &[Vec<u64>], basis: &[Vec<u64>]) -> Result<Vec<Vec<Vec<u64>>>> {
        let r = a.len();
        let k = basis.len();
        // A B, as an r x k matrix.
        let ab: Vec<Vec<u64>> = (0..r)
            .map(|i| {
                (0..k)
                    .map(|j| (0..r).fold(0, |acc, l| self.add(acc, self.mul(a[i][l], basis[j][l]))))
                    .collect()
            })
            .collect();
        let mut parts = Vec::new();
        let mut found = 0;
        for lambda in 0..self.p {
            // (A - lambda) B = AB - lambda B
            let m: Vec<Vec<u64>> = (0..r)
                .map(|i| {
                    (0..k)
                        .map(|j| self.sub(ab[i][j], self.mul(lambda, basis[j][i])))
                        .collect()
                })
                .collect();
            let ns = self.nullspace(&m, k);
            if ns.is_empty() {
                continue;
            }
            found += ns.len();
            parts.push(
                ns.iter()
                    .map(|coef| {
                        (0..r)
                            .map(|i| {
                                (0..k)
                                    .fold(0, |acc, j| self.add(acc, self.mul(coef[j], basis[j][i])))
                            })
                            .collect()
                    })
                    .collect(),
            );
            if found == k {
                break;
            }
        }
        if found != k {
            return Err(Error::LiftFailure);
        }
        Ok(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Cyclotomic {
        Cyclotomic::from_integer(v)
    }

    #[test]
    fn z2_table() {
        let t = character_table(&FiniteGroup::cyclic(2), 512).unwrap();
        assert_eq!(t.rows(), &[vec![int(1), int(1)], vec![int(1), int(-1)]]);
    }

    #[test]
    fn s3_table() {
        let s3 = FiniteGroup::symmetric(3, 100).unwrap();
        let t = character_table(&s3, 512).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 2]);
        assert_eq!(t.rows()[0], vec![int(1), int(1), int(1)]);
        assert_eq!(t.rows()[1], vec![int(1), int(-1), int(1)]);
        assert_eq!(t.rows()[2], vec![int(2), int(0), int(-1)]);
    }

    #[test]
    fn z4_table_has_i() {
        let t = character_table(&FiniteGroup::cyclic(4), 512).unwrap();
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(t.rows()[1], vec![int(1), i.clone(), int(-1), -&i]);
    }

    #[test]
    fn idempotents_s3() {
        let s3 = FiniteGroup::symmetric(3, 100).unwrap();
        let t = character_table(&s3, 512).unwrap();
        let e = central_idempotents_group(&t).unwrap();
        let at_identity: Vec<_> = e.iter().map(|x| x[0].clone()).collect();
        assert_eq!(
            at_identity,
            vec![
                Cyclotomic::from_fraction(1, 6),
                Cyclotomic::from_fraction(1, 6),
                Cyclotomic::from_fraction(2, 3)
            ]
        );
    }

    #[test]
    fn idempotents_trivial_and_z2() {
        let t = character_table(&FiniteGroup::cyclic(1), 512).unwrap();
        assert_eq!(central_idempotents_group(&t).unwrap(), vec![vec![int(1)]]);
        let t = character_table(&FiniteGroup::cyclic(2), 512).unwrap();
        let half = Cyclotomic::from_fraction(1, 2);
        assert_eq!(
            central_idempotents_group(&t).unwrap(),
            vec![vec![half.clone(), half.clone()], vec![half.clone(), -half]]
        );
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            character_table(&FiniteGroup::cyclic(20), 10).unwrap_err(),
            Error::OrderBoundExceeded { bound: 10 }
        );
    }
}
