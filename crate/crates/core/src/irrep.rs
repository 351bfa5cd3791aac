//! Explicit matrix realizations of irreducible characters.
//!
//! Degree-one characters are read off the table. Higher degrees come from the
//! regular representation: project onto the isotypic block, split it with a
//! random operator from the commutant, and keep one eigenspace.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chartable::{central_idempotents_group, GroupCharTable};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Number of fresh random operators tried before giving up.
pub const SPLIT_ATTEMPTS: usize = 20;

const IRREP_TOL: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct MatrixIrrep {
    group: FiniteGroup,
    character: usize,
    degree: usize,
    matrices: Vec<Matrix<Complex64>>,
    exact: Option<Vec<Cyclotomic>>,
}

impl MatrixIrrep {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Row of the character table this irrep realizes.
    pub fn character(&self) -> usize {
        self.character
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matrix(&self, g: usize) -> &Matrix<Complex64> {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[Matrix<Complex64>] {
        &self.matrices
    }

    /// Exact values for degree-one irreps.
    pub fn exact_values(&self) -> Option<&[Cyclotomic]> {
        self.exact.as_deref()
    }

    /// Dimension of the space of matrices commuting with every `M(g)`.
    pub fn commutant_dimension(&self) -> usize {
        let d = self.degree;
        let gens = self.group.generators();
        // X M = M X, unknowns X[a][b] at column a * d + b.
        let mut rows = Vec::new();
        for &g in &gens {
            let m = &self.matrices[g];
            for r in 0..d {
                for c in 0..d {
                    let mut row = vec![Complex64::new(0.0, 0.0); d * d];
                    for k in 0..d {
                        row[r * d + k] += m[(k, c)];
                        row[k * d + c] -= m[(r, k)];
                    }
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return d * d;
        }
        d * d - Matrix::from_rows(rows).rank()
    }
}

/// Realizes character `i` of `table` by unitary matrices.
pub fn explicit_irrep(table: &GroupCharTable, i: usize, seed: u64) -> Result<MatrixIrrep> {
    let group = table.group().clone();
    let n = group.order();
    let degree = table.degrees()[i];
    if degree == 1 {
        let exact: Vec<Cyclotomic> = (0..n).map(|g| table.value(i, g).clone()).collect();
        let matrices = exact
            .iter()
            .map(|v| Matrix::from_rows(vec![vec![v.to_complex()]]))
            .collect();
        return Ok(MatrixIrrep {
            group,
            character: i,
            degree,
            matrices,
            exact: Some(exact),
        });
    }

    let idempotents = central_idempotents_group(table)?;
    let coeffs: Vec<Complex64> = idempotents[i].iter().map(Cyclotomic::to_complex).collect();
    // E = sum_x e(x) L(x), with L(x) e_y = e_{xy}.
    let projector = Matrix::from_fn(n, n, |r, c| coeffs[group.mul(r, group.inv(c))]);
    let chars: Vec<Complex64> = (0..n).map(|g| table.value(i, g).to_complex()).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SPLIT_ATTEMPTS {
        let a = random_hermitian(n, &mut rng);
        // Average over G so the operator commutes with the regular action.
        let mut avg = Matrix::<Complex64>::zeros(n, n);
        for g in 0..n {
            let gi = group.inv(g);
            for x in 0..n {
                for y in 0..n {
                    avg[(x, y)] += a[(group.mul(gi, x), group.mul(gi, y))];
                }
            }
        }
        let avg = avg.scale(&Complex64::new(1.0 / n as f64, 0.0));
        let shift = Complex64::new(4.0 * n as f64, 0.0);
        let block = projector.mul(&avg).mul(&projector);
        let outside = Matrix::identity(n).sub(&projector).scale(&shift);
        let (values, vectors) = hermitian_eigen(&block.sub(&outside));
        let Some(cols) = isolated_cluster(&values, degree, -2.0 * n as f64) else {
            continue;
        };
        let u = vectors.select_columns(&cols);
        let ut = u.conj_transpose();
        let matrices: Vec<Matrix<Complex64>> = (0..n)
            .map(|g| {
                let l = Matrix::from_fn(n, n, |r, c| {
                    if r == group.mul(g, c) {
                        Complex64::new(1.0, 0.0)
                    } else {
                        Complex64::new(0.0, 0.0)
                    }
                });
                ut.mul(&l).mul(&u)
            })
            .collect();
        if verify(&group, &matrices, &chars) {
            return Ok(MatrixIrrep {
                group,
                character: i,
                degree,
                matrices,
                exact: None,
            });
        }
    }
    Err(Error::SplitFailure {
        attempts: SPLIT_ATTEMPTS,
    })
}

fn verify(group: &FiniteGroup, m: &[Matrix<Complex64>], chars: &[Complex64]) -> bool {
    let n = group.order();
    if m[0].max_abs_diff(&Matrix::identity(m[0].rows())) > IRREP_TOL {
        return false;
    }
    for g in 0..n {
        if (m[g].trace() - chars[g]).norm() > IRREP_TOL {
            return false;
        }
        for h in 0..n {
            if m[g].mul(&m[h]).max_abs_diff(&m[group.mul(g, h)]) > IRREP_TOL {
                return false;
            }
        }
    }
    true
}

fn uniform(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
}

fn random_hermitian(n: usize, rng: &mut ChaCha8Rng) -> Matrix<Complex64> {
    let mut a = Matrix::<Complex64>::zeros(n, n);
    for r in 0..n {
        a[(r, r)] = Complex64::new(uniform(rng), 0.0);
        for c in r + 1..n {
            let z = Complex64::new(uniform(rng), uniform(rng));
            a[(r, c)] = z;
            a[(c, r)] = z.conj();
        }
    }
    a
}

/// Indices of the lowest eigenvalue cluster above `floor` of exactly `size`
/// members, separated from its neighbours.
fn isolated_cluster(values: &[f64], size: usize, floor: f64) -> Option<Vec<usize>> {
    let mut order: Vec<usize> = (0..values.len()).filter(|&k| values[k] > floor).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let gap = 1e-6;
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] - values[order[end - 1]] < gap {
            end += 1;
        }
        if end - start == size {
            return Some(order[start..end].to_vec());
        }
        start = end;
    }
    None
}

/// Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Returns eigenvalues and a unitary matrix whose columns are eigenvectors.
pub fn hermitian_eigen(a: &Matrix<Complex64>) -> (Vec<f64>, Matrix<Complex64>) {
    let n = a.rows();
    let mut a = a.clone();
    let mut v = Matrix::<Complex64>::identity(n);
    let scale = libm::sqrt(
        (0..n)
            .flat_map(|r| (0..n).map(move |c| (r, c)))
            .map(|(r, c)| a[(r, c)].norm_sqr())
            .sum::<f64>(),
    )
    .max(1.0);
    for _sweep in 0..100 {
        let mut off = 0.0;
        for r in 0..n {
            for c in 0..n {
                if r != c {
                    off += a[(r, c)].norm_sqr();
                }
            }
        }
        if libm::sqrt(off) < 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let b = a[(p, q)];
                if b.norm() < 1e-300 {
                    continue;
                }
                let phase = Complex64::new(0.0, -b.arg()).exp();
                let theta = 0.5 * libm::atan2(2.0 * b.norm(), a[(p, p)].re - a[(q, q)].re);
                let (s, c) = (libm::sin(theta), libm::cos(theta));
                let u00 = Complex64::new(c, 0.0);
                let u01 = Complex64::new(-s, 0.0);
                let u10 = phase * s;
                let u11 = phase * c;
                for k in 0..n {
                    let (x, y) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = x * u00 + y * u10;
                    a[(k, q)] = x * u01 + y * u11;
                    let (x, y) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = x * u00 + y * u10;
                    v[(k, q)] = x * u01 + y * u11;
                }
                for k in 0..n {
                    let (x, y) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = u00.conj() * x + u10.conj() * y;
                    a[(q, k)] = u01.conj() * x + u11.conj() * y;
                }
                a[(p, q)] = Complex64::zero();
                a[(q, p)] = Complex64::zero();
                a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
            }
        }
    }
    ((0..n).map(|k| a[(k, k)].re).collect(), v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartable::{character_table, DEFAULT_TABLE_CAP};

    #[test]
    fn jacobi_diagonalizes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = random_hermitian(6, &mut rng);
        let (vals, v) = hermitian_eigen(&a);
        let d = Matrix::from_fn(6, 6, |r, c| {
            if r == c {
                Complex64::new(vals[r], 0.0)
            } else {
                Complex64::zero()
            }
        });
        assert!(v.mul(&d).mul(&v.conj_transpose()).max_abs_diff(&a) < 1e-10);
        assert!(v.conj_transpose().mul(&v).is_identity());
    }

    #[test]
    fn cyclic_four_linear() {
        let g = FiniteGroup::cyclic(4);
        let t = character_table(&g, DEFAULT_TABLE_CAP).unwrap();
        let i = (0..4)
            .find(|&k| t.value(k, 1) == &Cyclotomic::root_of_unity(4, 1))
            .unwrap();
        let rep = explicit_irrep(&t, i, 0).unwrap();
        let expect = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];
        for (x, (re, im)) in expect.iter().enumerate() {
            assert!((rep.matrix(x)[(0, 0)] - Complex64::new(*re, *im)).norm() < 1e-12);
        }
    }

    #[test]
    fn s3_standard() {
        let g = FiniteGroup::symmetric(3, 100).unwrap();
        let t = character_table(&g, DEFAULT_TABLE_CAP).unwrap();
        let rep = explicit_irrep(&t, 2, 0).unwrap();
        assert_eq!(rep.degree(), 2);
        let c3 = g.element_by_name("(123)").unwrap();
        let t2 = g.element_by_name("(12)").unwrap();
        assert!((rep.matrix(c3).trace() - Complex64::new(-1.0, 0.0)).norm() < 1e-9);
        assert!(rep.matrix(t2).trace().norm() < 1e-9);
        assert_eq!(rep.commutant_dimension(), 1);
    }
}
