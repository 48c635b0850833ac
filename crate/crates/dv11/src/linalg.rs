//! Dense linear algebra over any [`Field`](crate::field::Field), plus exact
//! integer routines (Bareiss determinants, Smith normal form, integer
//! kernels) used by the lattice code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::field::{Field, Ring};

/// Dense row-major matrix over a ring.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Mat<F> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F>,
}

impl<F: Ring> Mat<F> {
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zero_like(ctx: &F, rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![ctx.zero_like(); rows * cols],
        }
    }

    pub fn identity_like(ctx: &F, n: usize) -> Self {
        let mut m = Self::zero_like(ctx, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = ctx.one_like();
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut F {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[F]> {
        self.data.chunks(self.cols)
    }

    pub fn ctx(&self) -> &F {
        &self.data[0]
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero_like(self.ctx(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zero_like(self.ctx(), self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = out.at(i, j).add(&a.mul(b));
                    *out.at_mut(i, j) = t;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(s)).collect(),
        }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.ctx().zero_like();
                for j in 0..self.cols {
                    if !self.at(i, j).is_zero() && !v[j].is_zero() {
                        acc = acc.add(&self.at(i, j).mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.at(i, j);
                if i == j {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

impl<F: Field> Mat<F> {
    /// Reduced row echelon form with the list of pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let a = m.at(pr, j).clone();
                    let b = m.at(r, j).clone();
                    *m.at_mut(pr, j) = b;
                    *m.at_mut(r, j) = a;
                }
            }
            let inv = m.at(r, c).try_inv().expect("nonzero pivot");
            for j in c..m.cols {
                let t = m.at(r, j).mul(&inv);
                *m.at_mut(r, j) = t;
            }
            for i in 0..m.rows {
                if i == r || m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).clone();
                for j in c..m.cols {
                    let t = m.at(i, j).sub(&f.mul(m.at(r, j)));
                    *m.at_mut(i, j) = t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space { v : A v = 0 }.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let zero = self.ctx().zero_like();
        let one = self.ctx().one_like();
        let mut basis = Vec::new();
        let mut piv_of_col = vec![None; self.cols];
        for (pi, &c) in pivots.iter().enumerate() {
            piv_of_col[c] = Some(pi);
        }
        for free in 0..self.cols {
            if piv_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![zero.clone(); self.cols];
            v[free] = one.clone();
            for (pi, &c) in pivots.iter().enumerate() {
                v[c] = r.at(pi, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of A x = b, or None if inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Self::zero_like(self.ctx(), self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, self.cols) = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![self.ctx().zero_like(); self.cols];
        for (pi, &c) in pivots.iter().enumerate() {
            x[c] = r.at(pi, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::zero_like(self.ctx(), n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = self.ctx().one_like();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
            return None;
        }
        let mut out = Self::zero_like(self.ctx(), n, n);
        for i in 0..n {
            for j in 0..n {
                *out.at_mut(i, j) = r.at(i, n + j).clone();
            }
        }
        Some(out)
    }

    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let n = m.rows;
        let mut det = m.ctx().one_like();
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m.at(i, c).is_zero()) else {
                return m.ctx().zero_like();
            };
            if pr != c {
                det = det.neg();
                for j in 0..n {
                    let a = m.at(pr, j).clone();
                    let b = m.at(c, j).clone();
                    *m.at_mut(pr, j) = b;
                    *m.at_mut(c, j) = a;
                }
            }
            det = det.mul(m.at(c, c));
            let inv = m.at(c, c).try_inv().expect("nonzero pivot");
            for i in c + 1..n {
                if m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).mul(&inv);
                for j in c..n {
                    let t = m.at(i, j).sub(&f.mul(m.at(c, j)));
                    *m.at_mut(i, j) = t;
                }
            }
        }
        det
    }
}

// ---------------------------------------------------------------------------
// Exact integer matrices
// ---------------------------------------------------------------------------

pub type IMat = Vec<Vec<BigInt>>;

pub fn imat_from_i64(rows: &[Vec<i64>]) -> IMat {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn imat_identity(n: usize) -> IMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

pub fn imat_mul(a: &IMat, b: &IMat) -> IMat {
    let (n, k) = (a.len(), b.len());
    assert!(a.iter().all(|r| r.len() == k));
    let m = b[0].len();
    let mut out = vec![vec![BigInt::zero(); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[t][j].is_zero() {
                    out[i][j] += &a[i][t] * &b[t][j];
                }
            }
        }
    }
    out
}

pub fn imat_transpose(a: &IMat) -> IMat {
    let (n, m) = (a.len(), a[0].len());
    (0..m).map(|j| (0..n).map(|i| a[i][j].clone()).collect()).collect()
}

/// Fraction-free exact determinant (Bareiss algorithm).
pub fn det_bareiss(a: &IMat) -> BigInt {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n));
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(sw) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, sw);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Smith normal form with transforms: `u * a * v = diag(d)`,
/// d nonnegative with d[i] | d[i+1].
pub struct Snf {
    pub d: Vec<BigInt>,
    pub u: IMat,
    pub v: IMat,
}

pub fn smith_normal_form(a: &IMat) -> Snf {
    let n = a.len();
    let m = if n == 0 { 0 } else { a[0].len() };
    let mut s: Vec<Vec<BigInt>> = a.to_vec();
    let mut u = imat_identity(n);
    let mut v = imat_identity(m);
    let k = n.min(m);

    for t in 0..k {
        loop {
            // move a nonzero entry of minimal magnitude in the remaining
            // block to position (t, t)
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..m {
                    if s[i][j].is_zero() {
                        continue;
                    }
                    match best {
                        None => best = Some((i, j)),
                        Some((bi, bj)) => {
                            if s[i][j].abs() < s[bi][bj].abs() {
                                best = Some((i, j));
                            }
                        }
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return finish_snf(s, u, v, n, m);
            };
            if bi != t {
                s.swap(t, bi);
                u.swap(t, bi);
            }
            if bj != t {
                for row in s.iter_mut() {
                    row.swap(t, bj);
                }
                for row in v.iter_mut() {
                    row.swap(t, bj);
                }
            }
            // clear column t below the pivot
            let mut dirty = false;
            for i in t + 1..n {
                if s[i][t].is_zero() {
                    continue;
                }
                let q = div_round(&s[i][t], &s[t][t]);
                if !q.is_zero() {
                    for j in 0..m {
                        let val = &s[i][j] - &q * &s[t][j];
                        s[i][j] = val;
                    }
                    for j in 0..n {
                        let val = &u[i][j] - &q * &u[t][j];
                        u[i][j] = val;
                    }
                }
                if !s[i][t].is_zero() {
                    dirty = true;
                }
            }
            // clear row t right of the pivot
            for j in t + 1..m {
                if s[t][j].is_zero() {
                    continue;
                }
                let q = div_round(&s[t][j], &s[t][t]);
                if !q.is_zero() {
                    for i in 0..n {
                        let val = &s[i][j] - &q * &s[i][t];
                        s[i][j] = val;
                    }
                    for i in 0..m {
                        let val = &v[i][j] - &q * &v[i][t];
                        v[i][j] = val;
                    }
                }
                if !s[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // ensure pivot divides the rest of the block; if not, fold the
            // offending row in and repeat
            let mut fixed = true;
            'scan: for i in t + 1..n {
                for j in t + 1..m {
                    if !(&s[i][j] % &s[t][t]).is_zero() {
                        for col in 0..m {
                            let val = &s[t][col] + &s[i][col];
                            s[t][col] = val;
                        }
                        for col in 0..n {
                            let val = &u[t][col] + &u[i][col];
                            u[t][col] = val;
                        }
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
    }
    finish_snf(s, u, v, n, m)
}

fn finish_snf(mut s: IMat, mut u: IMat, v: IMat, n: usize, m: usize) -> Snf {
    let k = n.min(m);
    for t in 0..k {
        if s[t][t].is_negative() {
            for j in 0..m {
                s[t][j] = -s[t][j].clone();
            }
            for j in 0..n {
                u[t][j] = -u[t][j].clone();
            }
        }
    }
    let d = (0..k).map(|t| s[t][t].clone()).collect();
    Snf { d, u, v }
}

/// Quotient rounding to nearest, which keeps SNF pivots shrinking.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    let two_r: BigInt = &r * 2;
    if two_r.abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Basis of the integer kernel { x : A x = 0, x integral }.
pub fn integer_kernel(a: &IMat) -> Vec<Vec<BigInt>> {
    let n = a.len();
    if n == 0 {
        return Vec::new();
    }
    let m = a[0].len();
    let snf = smith_normal_form(a);
    let mut basis = Vec::new();
    for j in 0..m {
        let dj = if j < snf.d.len() {
            snf.d[j].clone()
        } else {
            BigInt::zero()
        };
        if dj.is_zero() {
            basis.push((0..m).map(|i| snf.v[i][j].clone()).collect());
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use num_rational::BigRational;

    fn q(n: i64) -> Rational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn qmat(rows: &[&[i64]]) -> Mat<Rational> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn rank_kernel_solve() {
        let a = qmat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        for row in a.rows_iter() {
            let dot: Rational = row
                .iter()
                .zip(&k[0])
                .fold(q(0), |acc, (x, y)| acc.add(&x.mul(y)));
            assert!(Ring::is_zero(&dot));
        }
        let b = vec![q(6), q(12), q(2)];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.apply(&x), b);
        assert!(a.solve(&[q(1), q(3), q(0)]).is_none());
    }

    #[test]
    fn inverse_and_det() {
        let a = qmat(&[&[2, 1], &[7, 4]]);
        assert_eq!(a.det(), q(1));
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        let sing = qmat(&[&[1, 2], &[2, 4]]);
        assert_eq!(sing.det(), q(0));
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn bareiss_matches_gauss() {
        let rows = vec![
            vec![3i64, -1, 4, 1],
            vec![5, 9, -2, 6],
            vec![5, 3, 5, -8],
            vec![9, 7, 9, 3],
        ];
        let im = imat_from_i64(&rows);
        let qm = qmat(&[&rows[0], &rows[1], &rows[2], &rows[3]]);
        assert_eq!(
            qm.det(),
            BigRational::from_integer(det_bareiss(&im))
        );
    }

    #[test]
    fn snf_diagonal_and_transforms() {
        let a = imat_from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let snf = smith_normal_form(&a);
        assert_eq!(
            snf.d,
            vec![BigInt::from(2), BigInt::from(2), BigInt::from(156)]
        );
        let prod = imat_mul(&imat_mul(&snf.u, &a), &snf.v);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { snf.d[i].clone() } else { BigInt::zero() };
                assert_eq!(prod[i][j], want);
            }
        }
        assert_eq!(det_bareiss(&snf.u).abs(), BigInt::one());
        assert_eq!(det_bareiss(&snf.v).abs(), BigInt::one());
    }

    #[test]
    fn snf_divisibility_chain() {
        let a = imat_from_i64(&[vec![6, 0], vec![0, 4]]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.d, vec![BigInt::from(2), BigInt::from(12)]);
    }

    #[test]
    fn integer_kernel_basis() {
        let a = imat_from_i64(&[vec![2, 2, 2]]);
        let k = integer_kernel(&a);
        assert_eq!(k.len(), 2);
        // kernel vectors must be primitive solutions of x + y + z = 0
        for v in &k {
            let s: BigInt = v.iter().sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn fp_matrix_ops() {
        use crate::field::FpNum;
        let p = 23;
        let f = |x: i64| FpNum::from_i64(x, p);
        let a = Mat::from_rows(vec![vec![f(1), f(2)], vec![f(3), f(4)]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert_eq!(a.det(), f(-2));
    }
}
