//! Integer lattices: kernels and spans via column-style Hermite normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::{Mat, Rational};

pub type IntVec = Vec<BigInt>;

/// Column operations reducing `a` (m×n) to echelon form `a·u` with unimodular `u`.
/// Returns `(a·u, u, rank)`; the first `rank` columns of `a·u` are the nonzero ones.
pub fn column_echelon(a: &[IntVec], n: usize) -> (Vec<IntVec>, Vec<IntVec>, usize) {
    let m = a.len();
    // Work column-major: cols[j][i].
    let mut cols: Vec<IntVec> = (0..n).map(|j| (0..m).map(|i| a[i][j].clone()).collect()).collect();
    let mut u: Vec<IntVec> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut r = 0;
    for i in 0..m {
        if r == n {
            break;
        }
        // Euclid on row i across columns r..n.
        loop {
            let nz: Vec<usize> = (r..n).filter(|&j| !cols[j][i].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&j| cols[j][i].abs()).unwrap();
            cols.swap(r, p);
            u.swap(r, p);
            let mut done = true;
            for j in r + 1..n {
                if cols[j][i].is_zero() {
                    continue;
                }
                let q = cols[j][i].div_floor(&cols[r][i]);
                for k in 0..m {
                    let t = &cols[r][k] * &q;
                    cols[j][k] -= t;
                }
                for k in 0..n {
                    let t = &u[r][k] * &q;
                    u[j][k] -= t;
                }
                if !cols[j][i].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !cols[r][i].is_zero() {
            r += 1;
        }
    }
    (cols, u, r)
}

/// A ℤ-basis of `{x ∈ ℤⁿ : A x = 0}` for an integer matrix given by rows.
pub fn integer_kernel(a: &[IntVec], n: usize) -> Vec<IntVec> {
    if a.is_empty() {
        return (0..n)
            .map(|j| (0..n).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
    }
    let (_, u, r) = column_echelon(a, n);
    let mut basis: Vec<IntVec> = u[r..].to_vec();
    lll_lite(&mut basis);
    basis
}

/// Same as [`integer_kernel`] for a rational matrix (rows are cleared of denominators).
pub fn rational_kernel(a: &Mat<Rational>) -> Vec<IntVec> {
    let rows: Vec<IntVec> = (0..a.rows()).map(|i| clear_denominators(&a.row(i))).collect();
    integer_kernel(&rows, a.cols())
}

pub fn clear_denominators(v: &[Rational]) -> IntVec {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect()
}

/// Cheap size reduction (pairwise, repeated) so kernel bases are readable.
fn lll_lite(b: &mut [IntVec]) {
    let norm = |v: &IntVec| v.iter().map(|x| x * x).fold(BigInt::zero(), |a, c| a + c);
    for _ in 0..50 {
        let mut changed = false;
        for i in 0..b.len() {
            for j in 0..b.len() {
                if i == j {
                    continue;
                }
                let nj = norm(&b[j]);
                if nj.is_zero() {
                    continue;
                }
                let dot: BigInt = b[i].iter().zip(&b[j]).map(|(x, y)| x * y).sum();
                // q = round(dot / nj)
                let q = (Rational::new(dot, nj) + Rational::new(BigInt::one(), BigInt::from(2))).floor().to_integer();
                if !q.is_zero() {
                    let bj = b[j].clone();
                    for (x, y) in b[i].iter_mut().zip(&bj) {
                        *x -= &q * y;
                    }
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
}

/// Is `v` an integer combination of the given basis vectors?
pub fn in_span(basis: &[IntVec], v: &IntVec) -> bool {
    let n = v.len();
    // Solve B c = v over ℚ, then check integrality (basis vectors are independent).
    let cols = basis.len();
    let a: Mat<Rational> = Mat::from_fn(n, cols + 1, |i, j| {
        if j < cols {
            Rational::from_integer(basis[j][i].clone())
        } else {
            Rational::from_integer(v[i].clone())
        }
    });
    let (r, pivots) = a.rref();
    if pivots.contains(&cols) {
        return false;
    }
    (0..pivots.len()).all(|k| r[(k, cols)].is_integer())
}

/// The standard pairing `xᵀ J y` with `J = [[0, I], [−I, 0]]`.
pub fn symplectic_pairing(x: &IntVec, y: &IntVec) -> BigInt {
    let g = x.len() / 2;
    let mut s = BigInt::zero();
    for k in 0..g {
        s += &x[k] * &y[g + k] - &x[g + k] * &y[k];
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IntVec {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn kernel_of_single_row() {
        let a = vec![iv(&[2, 4, 6])];
        let k = integer_kernel(&a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s: BigInt = v.iter().zip(&a[0]).map(|(x, y)| x * y).sum();
            assert!(s.is_zero());
        }
        // (1, 1, −1) is in the lattice; (1, 1, 1) is not in the kernel at all.
        assert!(in_span(&k, &iv(&[1, 1, -1])));
        assert!(!in_span(&k, &iv(&[1, 1, 1])));
    }

    #[test]
    fn kernel_is_saturated() {
        // x + 2y = 0 has primitive kernel vector (−2, 1), not a multiple of it.
        let k = integer_kernel(&[iv(&[1, 2])], 2);
        assert_eq!(k.len(), 1);
        assert!(in_span(&k, &iv(&[-2, 1])));
    }

    #[test]
    fn pairing_is_alternating() {
        let x = iv(&[1, 0, 0, 0]);
        let y = iv(&[0, 0, 1, 0]);
        assert_eq!(symplectic_pairing(&x, &y), BigInt::one());
        assert_eq!(symplectic_pairing(&y, &x), -BigInt::one());
    }
}
