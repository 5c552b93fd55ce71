//! Smith normal form over the integers and the linear solver built on it.
//!
//! Pivoting always takes the nonzero entry of smallest absolute value in the
//! remaining block (lowest row, then lowest column, on ties). Quotients round
//! to the nearest integer so remainders stay at most half the pivot.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::lll::lll_reduce;
use super::matrix::IntegerMatrix;

/// `d = u · input · v` with `u`, `v` unimodular and `d` diagonal.
///
/// The nonzero diagonal entries are positive, come first, and form a
/// divisibility chain. `u_inv` is the inverse of `u`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntegerMatrix,
    pub u_inv: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithDecomposition {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        let k = self.d.rows().min(self.d.cols());
        (0..k).take_while(|&i| !self.d.get(i, i).is_zero()).count()
    }

    /// Diagonal entries `d[i][i]` for `i < min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d.get(i, i).clone()).collect()
    }

    /// One value per row of the input: the diagonal entry, or zero past the
    /// end of the diagonal. Row `i` of `u · x` is then defined modulo this value.
    pub fn row_moduli(&self) -> Vec<BigInt> {
        let diag = self.diagonal();
        (0..self.d.rows())
            .map(|i| diag.get(i).cloned().unwrap_or_else(BigInt::zero))
            .collect()
    }

    /// Some `x` with `input · x = b`, or `None` when no integer solution exists.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        let diag = &self.diagonal()[..self.rank()];
        solve_reduced(&self.u, &self.v, diag, b)
    }

    /// Whether `b` lies in the column span of the input.
    pub fn contains(&self, b: &[BigInt]) -> bool {
        let diag = &self.diagonal()[..self.rank()];
        contains_reduced(&self.u, diag, b)
    }
}

fn solve_reduced(
    u: &IntegerMatrix,
    v: &IntegerMatrix,
    diag: &[BigInt],
    b: &[BigInt],
) -> Option<Vec<BigInt>> {
    assert_eq!(b.len(), u.cols(), "right-hand side has wrong length");
    let c = u.mul_vec(b);
    let r = diag.len();
    if c[r..].iter().any(|e| !e.is_zero()) {
        return None;
    }
    let mut y = vec![BigInt::zero(); v.rows()];
    for i in 0..r {
        let (q, rem) = c[i].div_rem(&diag[i]);
        if !rem.is_zero() {
            return None;
        }
        y[i] = q;
    }
    Some(v.mul_vec(&y))
}

fn contains_reduced(u: &IntegerMatrix, diag: &[BigInt], b: &[BigInt]) -> bool {
    assert_eq!(b.len(), u.cols(), "vector has wrong length");
    let c = u.mul_vec(b);
    let r = diag.len();
    c[r..].iter().all(Zero::is_zero) && c[..r].iter().zip(diag).all(|(ci, d)| ci.is_multiple_of(d))
}

struct Work {
    a: IntegerMatrix,
    u: Option<IntegerMatrix>,
    u_inv: Option<IntegerMatrix>,
    v: Option<IntegerMatrix>,
}

impl Work {
    /// row[target] += c · row[source]
    fn row_add(&mut self, target: usize, source: usize, c: &BigInt) {
        self.a.add_row_multiple(target, source, c);
        if let Some(u) = &mut self.u {
            u.add_row_multiple(target, source, c);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.add_col_multiple(source, target, &-c);
        }
    }

    /// col[target] += c · col[source]
    fn col_add(&mut self, target: usize, source: usize, c: &BigInt) {
        self.a.add_col_multiple(target, source, c);
        if let Some(v) = &mut self.v {
            v.add_col_multiple(target, source, c);
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(u) = &mut self.u {
            u.negate_row(i);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.negate_col(i);
        }
    }
}

/// Quotient of `a / p` rounded to the nearest integer, for `p > 0`.
fn nearest_quotient(a: &BigInt, p: &BigInt) -> BigInt {
    let (mut q, r) = a.div_mod_floor(p);
    if (&r << 1u32) > *p {
        q += 1;
    }
    q
}

fn find_pivot(a: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let e = a.get(i, j);
            if e.is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if e.magnitude() < a.get(bi, bj).magnitude() {
                        best = Some((i, j));
                    }
                }
            }
            if e.magnitude().is_one() {
                return best;
            }
        }
    }
    best
}

fn reduce(m: &IntegerMatrix, want_u: bool, want_u_inv: bool, want_v: bool) -> Work {
    let rows = m.rows();
    let cols = m.cols();
    let mut w = Work {
        a: m.clone(),
        u: want_u.then(|| IntegerMatrix::identity(rows)),
        u_inv: want_u_inv.then(|| IntegerMatrix::identity(rows)),
        v: want_v.then(|| IntegerMatrix::identity(cols)),
    };
    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = find_pivot(&w.a, t) else {
                return w;
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            if w.a.get(t, t).is_negative() {
                w.negate_row(t);
            }
            let p = w.a.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..rows {
                if w.a.get(i, t).is_zero() {
                    continue;
                }
                let q = nearest_quotient(w.a.get(i, t), &p);
                w.row_add(i, t, &-q);
                dirty |= !w.a.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if w.a.get(t, j).is_zero() {
                    continue;
                }
                let q = nearest_quotient(w.a.get(t, j), &p);
                w.col_add(j, t, &-q);
                dirty |= !w.a.get(t, j).is_zero();
            }
            if dirty {
                continue;
            }
            if !p.is_one() {
                let bad = (t + 1..rows)
                    .find(|&i| (t + 1..cols).any(|j| !w.a.get(i, j).is_multiple_of(&p)));
                if let Some(i) = bad {
                    w.row_add(t, i, &BigInt::one());
                    continue;
                }
            }
            break;
        }
    }
    w
}

/// Full Smith decomposition with both transforms and the inverse of `u`.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithDecomposition {
    let w = reduce(m, true, true, true);
    SmithDecomposition {
        u: w.u.unwrap(),
        u_inv: w.u_inv.unwrap(),
        d: w.a,
        v: w.v.unwrap(),
    }
}

/// Invariant factors of the cokernel `Z^rows / colspan(m)`: entries `>= 2`
/// in divisibility order, then one `0` per free summand.
pub fn cokernel_invariants(m: &IntegerMatrix) -> Vec<BigInt> {
    let w = reduce(m, false, false, false);
    let k = m.rows().min(m.cols());
    let mut out: Vec<BigInt> = (0..k)
        .map(|i| w.a.get(i, i).clone())
        .filter(|d| !d.is_zero() && !d.is_one())
        .collect();
    let rank = (0..k).filter(|&i| !w.a.get(i, i).is_zero()).count();
    out.extend(std::iter::repeat_n(BigInt::zero(), m.rows() - rank));
    out
}

/// The row side of a Smith decomposition, `u · input · v = d`, with `v`
/// not recorded. Enough for invariants, coordinates and membership.
#[derive(Clone, Debug)]
pub struct RowSmith {
    pub u: IntegerMatrix,
    pub u_inv: IntegerMatrix,
    diag: Vec<BigInt>,
}

impl RowSmith {
    pub fn new(m: &IntegerMatrix) -> Self {
        let w = reduce(m, true, true, false);
        let k = m.rows().min(m.cols());
        let diag = (0..k)
            .map(|i| w.a.get(i, i).clone())
            .take_while(|d| !d.is_zero())
            .collect();
        RowSmith {
            u: w.u.unwrap(),
            u_inv: w.u_inv.unwrap(),
            diag,
        }
    }

    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    /// Nonzero diagonal entries.
    pub fn diagonal(&self) -> &[BigInt] {
        &self.diag
    }

    /// Modulus of each row of `u · x`: the diagonal entry, or zero past the rank.
    pub fn row_moduli(&self) -> Vec<BigInt> {
        (0..self.u.rows())
            .map(|i| self.diag.get(i).cloned().unwrap_or_else(BigInt::zero))
            .collect()
    }

    /// Whether `b` lies in the column span of the input.
    pub fn contains(&self, b: &[BigInt]) -> bool {
        contains_reduced(&self.u, &self.diag, b)
    }
}

/// Solves `m · x = b` over the integers, reusing one decomposition of `m`.
#[derive(Clone, Debug)]
pub struct LinearSolver {
    u: IntegerMatrix,
    v: IntegerMatrix,
    diag: Vec<BigInt>,
    rows: usize,
}

impl LinearSolver {
    pub fn new(m: &IntegerMatrix) -> Self {
        let w = reduce(m, true, false, true);
        let k = m.rows().min(m.cols());
        let diag: Vec<BigInt> = (0..k)
            .map(|i| w.a.get(i, i).clone())
            .take_while(|d| !d.is_zero())
            .collect();
        LinearSolver {
            u: w.u.unwrap(),
            v: w.v.unwrap(),
            diag,
            rows: m.rows(),
        }
    }

    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    /// Some `x` with `m · x = b`, or `None` when no integer solution exists.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(b.len(), self.rows, "right-hand side has wrong length");
        solve_reduced(&self.u, &self.v, &self.diag, b)
    }

    /// Whether `b` lies in the column span.
    pub fn contains(&self, b: &[BigInt]) -> bool {
        contains_reduced(&self.u, &self.diag, b)
    }

    /// Basis of the integer nullspace, as columns.
    pub fn nullspace(&self) -> IntegerMatrix {
        self.v.col_range(self.diag.len(), self.v.cols())
    }
}

/// Solves `relations · x = b`; `None` if unsolvable over the integers.
pub fn solve_column(relations: &IntegerMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    LinearSolver::new(relations).solve(b)
}

/// Basis (as columns) of `{x : m · x = 0}`, LLL-reduced unless its
/// entries are already small.
pub fn integer_nullspace(m: &IntegerMatrix) -> IntegerMatrix {
    let w = reduce(m, false, false, true);
    let k = m.rows().min(m.cols());
    let rank = (0..k).take_while(|&i| !w.a.get(i, i).is_zero()).count();
    let v = w.v.unwrap();
    let basis = v.col_range(rank, v.cols());
    if basis.entries().iter().all(|x| x.bits() <= 16) {
        basis
    } else {
        lll_reduce(&basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check(m: &IntegerMatrix) -> SmithDecomposition {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d);
        assert_eq!(&s.u * &s.u_inv, IntegerMatrix::identity(m.rows()));
        assert!(s.u.determinant().magnitude().is_one());
        assert!(s.v.determinant().magnitude().is_one());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        let diag = s.diagonal();
        let r = s.rank();
        for w in diag[..r].windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert!(diag[..r].iter().all(|d| d.is_positive()));
        assert!(diag[r..].iter().all(|d| d.is_zero()));
        s
    }

    #[test]
    fn snf_coprime_diagonal() {
        let s = check(&IntegerMatrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(s.diagonal(), big(&[1, 6]));
    }

    #[test]
    fn snf_zero_matrix() {
        let s = check(&IntegerMatrix::zeros(2, 2));
        assert_eq!(s.d, IntegerMatrix::zeros(2, 2));
    }

    #[test]
    fn snf_hand_reduced_example() {
        let s = check(&IntegerMatrix::from_rows(&[[2, 4], [6, 8]]));
        assert_eq!(s.diagonal(), big(&[2, 4]));
    }

    #[test]
    fn snf_rectangular_and_empty() {
        check(&IntegerMatrix::from_rows(&[[2, 0, 4], [0, 6, 9]]));
        check(&IntegerMatrix::from_rows(&[[0], [5], [10]]));
        let s = check(&IntegerMatrix::zeros(3, 0));
        assert_eq!(s.u, IntegerMatrix::identity(3));
        check(&IntegerMatrix::zeros(0, 4));
    }

    #[test]
    fn solve_examples() {
        let r = IntegerMatrix::from_rows(&[[2]]);
        assert_eq!(solve_column(&r, &big(&[4])), Some(big(&[2])));
        assert_eq!(solve_column(&r, &big(&[3])), None);
        let r = IntegerMatrix::from_rows(&[[1, 0], [0, 3]]);
        assert_eq!(solve_column(&r, &big(&[5, 6])), Some(big(&[5, 2])));
    }

    #[test]
    fn solve_against_zero_columns() {
        let r = IntegerMatrix::zeros(2, 0);
        assert_eq!(solve_column(&r, &big(&[0, 0])), Some(vec![]));
        assert_eq!(solve_column(&r, &big(&[1, 0])), None);
    }

    #[test]
    #[should_panic]
    fn solve_rejects_bad_length() {
        solve_column(&IntegerMatrix::from_rows(&[[2]]), &big(&[1, 2]));
    }

    #[test]
    fn nullspace_spans_kernel() {
        let m = IntegerMatrix::from_rows(&[[1, 2, 2]]);
        let n = integer_nullspace(&m);
        assert_eq!(n.cols(), 2);
        assert!((&m * &n).is_zero());
        // (−2, 1, 0) must be an integer combination of the basis
        assert!(LinearSolver::new(&n).solve(&big(&[-2, 1, 0])).is_some());
    }

    #[test]
    fn invariants_of_cokernel() {
        let m = IntegerMatrix::from_rows(&[[2, 0], [0, 3], [0, 0]]);
        assert_eq!(cokernel_invariants(&m), big(&[6, 0]));
    }
}
