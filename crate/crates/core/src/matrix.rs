//! Dense integer matrices with exact arithmetic (arbitrary precision).
//!
//! Everything here is sized for Gram matrices of rank at most 22, so the
//! algorithms favour auditability over asymptotics: Bareiss elimination for
//! determinants, classical row/column reduction for Smith normal form, and
//! Faddeev-LeVerrier plus Descartes sign counting for inertia.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    elems: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        &self.elems[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        &mut self.elems[r * self.cols + c]
    }
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            elems: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let elems = rows.iter().flatten().map(|&x| BigInt::from(x)).collect();
        IntMatrix {
            rows: r,
            cols: c,
            elems,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = Self::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (0..r).all(|c| self[(r, c)] == self[(c, r)]))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let add = a * &other[(k, c)];
                    out[(r, c)] += add;
                }
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| -self[(r, c)].clone())
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        Self::from_fn(self.rows, self.cols, |r, c| &self[(r, c)] * &k)
    }

    pub fn block_diag(blocks: &[IntMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zero(n, m);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out[(ro + r, co + c)] = b[(r, c)].clone();
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    /// Permutation matrix P with `P[perm[j], j] = 1`, so P maps the j-th
    /// permuted basis vector to basis vector `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut p = Self::zero(n, n);
        for (j, &i) in perm.iter().enumerate() {
            p[(i, j)] = BigInt::one();
        }
        p
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !a[(r, k)].is_zero()) {
                    Some(r) => {
                        for c in 0..n {
                            let tmp = a[(k, c)].clone();
                            a[(k, c)] = a[(r, c)].clone();
                            a[(r, c)] = tmp;
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = num / &prev;
                }
                a[(i, k)] = BigInt::zero();
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    /// Characteristic polynomial coefficients [1, c1, ..., cn] of a square
    /// matrix, i.e. det(xI - A) = x^n + c1 x^(n-1) + ... + cn.
    /// Faddeev-LeVerrier; all divisions are exact over the integers.
    pub fn char_poly(&self) -> Vec<BigInt> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![BigInt::one()];
        let mut m = IntMatrix::zero(n, n);
        for k in 1..=n {
            // M_k = A * (M_{k-1} + c_{k-1} I)
            let mut step = m.clone();
            for i in 0..n {
                step[(i, i)] += coeffs.last().unwrap();
            }
            m = self.mul(&step);
            let trace: BigInt = (0..n).map(|i| m[(i, i)].clone()).sum();
            let c = -trace / BigInt::from(k as i64);
            coeffs.push(c);
        }
        coeffs
    }
}

/// Signature data of a symmetric integer matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
}

/// Exact inertia of a symmetric matrix via sign variations of the
/// characteristic polynomial. All eigenvalues of a symmetric matrix are
/// real, so Descartes' rule is exact here.
pub fn inertia(m: &IntMatrix) -> Inertia {
    assert!(m.is_symmetric(), "inertia requires a symmetric matrix");
    let n = m.rows();
    let coeffs = m.char_poly();
    let zero = coeffs.iter().rev().take_while(|c| c.is_zero()).count();
    let positive = sign_variations(&coeffs);
    let negated: Vec<BigInt> = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
        .collect();
    let negative = sign_variations(&negated);
    debug_assert_eq!(positive + negative + zero, n);
    Inertia {
        positive,
        zero,
        negative,
    }
}

fn sign_variations(coeffs: &[BigInt]) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        let pos = c.is_positive();
        if let Some(prev) = last {
            if prev != pos {
                count += 1;
            }
        }
        last = Some(pos);
    }
    count
}

/// Smith normal form factorization u * m * v = d.
#[derive(Debug, Clone)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// Diagonal entries greater than 1, in divisibility order.
    pub fn nontrivial_divisors(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .filter(|x| *x > BigInt::one())
            .collect()
    }
}

/// Smith normal form of an integer matrix: returns unimodular u, v and
/// diagonal d with u*m*v = d, nonnegative diagonal entries and each entry
/// dividing the next.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let n = rows.min(cols);
    for t in 0..n {
        if !move_pivot(&mut a, &mut u, &mut v, t) {
            break; // remaining submatrix is zero
        }
        loop {
            clear_column(&mut a, &mut u, t);
            clear_row(&mut a, &mut v, t);
            if !column_cleared(&a, t) || !row_cleared(&a, t) {
                continue;
            }
            // enforce pivot | every remaining entry
            match find_nondivisible(&a, t) {
                Some(r) => {
                    for c in 0..cols {
                        let add = a[(r, c)].clone();
                        a[(t, c)] += &add;
                    }
                    for c in 0..rows {
                        let add = u[(r, c)].clone();
                        u[(t, c)] += &add;
                    }
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            for c in 0..cols {
                let x = -a[(t, c)].clone();
                a[(t, c)] = x;
            }
            for c in 0..rows {
                let x = -u[(t, c)].clone();
                u[(t, c)] = x;
            }
        }
    }
    Snf { u, d: a, v }
}

/// Bring some nonzero entry of the trailing submatrix to (t, t).
fn move_pivot(a: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix, t: usize) -> bool {
    let mut best: Option<(usize, usize)> = None;
    for r in t..a.rows() {
        for c in t..a.cols() {
            if a[(r, c)].is_zero() {
                continue;
            }
            match best {
                Some((br, bc)) if a[(r, c)].abs() >= a[(br, bc)].abs() => {}
                _ => best = Some((r, c)),
            }
        }
    }
    let Some((r, c)) = best else { return false };
    if r != t {
        swap_rows(a, t, r);
        swap_rows(u, t, r);
    }
    if c != t {
        swap_cols(a, t, c);
        swap_cols(v, t, c);
    }
    true
}

fn swap_rows(m: &mut IntMatrix, i: usize, j: usize) {
    for c in 0..m.cols() {
        let tmp = m[(i, c)].clone();
        m[(i, c)] = m[(j, c)].clone();
        m[(j, c)] = tmp;
    }
}

fn swap_cols(m: &mut IntMatrix, i: usize, j: usize) {
    for r in 0..m.rows() {
        let tmp = m[(r, i)].clone();
        m[(r, i)] = m[(r, j)].clone();
        m[(r, j)] = tmp;
    }
}

fn clear_column(a: &mut IntMatrix, u: &mut IntMatrix, t: usize) {
    loop {
        // keep the smallest nonzero in position (t, t) and reduce below
        let mut progressed = false;
        for r in t + 1..a.rows() {
            if a[(r, t)].is_zero() {
                continue;
            }
            if a[(t, t)].is_zero() || a[(r, t)].abs() < a[(t, t)].abs() {
                swap_rows(a, t, r);
                swap_rows(u, t, r);
            }
            let q = div_round(&a[(r, t)], &a[(t, t)]);
            if !q.is_zero() {
                for c in 0..a.cols() {
                    let sub = &q * &a[(t, c)];
                    a[(r, c)] -= sub;
                }
                for c in 0..u.cols() {
                    let sub = &q * &u[(t, c)];
                    u[(r, c)] -= sub;
                }
            }
            if !a[(r, t)].is_zero() {
                progressed = true;
            }
        }
        if !progressed {
            break;
        }
    }
}

fn clear_row(a: &mut IntMatrix, v: &mut IntMatrix, t: usize) {
    loop {
        let mut progressed = false;
        for c in t + 1..a.cols() {
            if a[(t, c)].is_zero() {
                continue;
            }
            if a[(t, t)].is_zero() || a[(t, c)].abs() < a[(t, t)].abs() {
                swap_cols(a, t, c);
                swap_cols(v, t, c);
            }
            let q = div_round(&a[(t, c)], &a[(t, t)]);
            if !q.is_zero() {
                for r in 0..a.rows() {
                    let sub = &q * &a[(r, t)];
                    a[(r, c)] -= sub;
                }
                for r in 0..v.rows() {
                    let sub = &q * &v[(r, t)];
                    v[(r, c)] -= sub;
                }
            }
            if !a[(t, c)].is_zero() {
                progressed = true;
            }
        }
        if !progressed {
            break;
        }
    }
}

fn column_cleared(a: &IntMatrix, t: usize) -> bool {
    (t + 1..a.rows()).all(|r| a[(r, t)].is_zero())
}

fn row_cleared(a: &IntMatrix, t: usize) -> bool {
    (t + 1..a.cols()).all(|c| a[(t, c)].is_zero())
}

fn find_nondivisible(a: &IntMatrix, t: usize) -> Option<usize> {
    let p = &a[(t, t)];
    if p.is_zero() {
        return None;
    }
    for r in t + 1..a.rows() {
        for c in t + 1..a.cols() {
            if !(&a[(r, c)] % p).is_zero() {
                return Some(r);
            }
        }
    }
    None
}

/// Quotient rounded toward nearest (ties toward zero), so remainders
/// shrink strictly during the Euclidean passes.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let q = a / b;
    let r = a - &q * b;
    if (&r * BigInt::from(2)).abs() > b.abs() {
        if (r.is_positive()) == (b.is_positive()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}
