//! Integral LLL reduction with `δ = 3/4`; all Gram–Schmidt data is kept as
//! exact integers (`d_i` and `λ_ij`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntegerMatrix;

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `round(a / b)` for `b > 0`.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    (&two * a + b).div_floor(&(&two * b))
}

struct Lll {
    b: Vec<Vec<BigInt>>,
    d: Vec<BigInt>,
    lam: Vec<Vec<BigInt>>,
}

impl Lll {
    // Indices are 1-based as in the textbook algorithm; slot 0 of `b` is unused.
    fn red(&mut self, k: usize, l: usize) {
        if (&self.lam[k][l] * BigInt::from(2)).abs() <= self.d[l] {
            return;
        }
        let q = round_div(&self.lam[k][l], &self.d[l]);
        let bl = self.b[l].clone();
        for (x, y) in self.b[k].iter_mut().zip(&bl) {
            *x -= &q * y;
        }
        let dl = self.d[l].clone();
        self.lam[k][l] -= &q * dl;
        for i in 1..l {
            let t = &q * &self.lam[l][i];
            self.lam[k][i] -= t;
        }
    }

    fn swap(&mut self, k: usize, kmax: usize) {
        self.b.swap(k, k - 1);
        for j in 1..k - 1 {
            let t = self.lam[k][j].clone();
            self.lam[k][j] = std::mem::replace(&mut self.lam[k - 1][j], t);
        }
        let lam = self.lam[k][k - 1].clone();
        let big_b = (&self.d[k - 2] * &self.d[k] + &lam * &lam) / &self.d[k - 1];
        for i in k + 1..=kmax {
            let t = self.lam[i][k].clone();
            self.lam[i][k] = (&self.d[k] * &self.lam[i][k - 1] - &lam * &t) / &self.d[k - 1];
            self.lam[i][k - 1] = (&big_b * &t + &lam * &self.lam[i][k]) / &self.d[k];
        }
        self.d[k - 1] = big_b;
    }
}

/// LLL-reduced basis of the lattice spanned by the (independent) columns.
pub fn lll_reduce(basis: &IntegerMatrix) -> IntegerMatrix {
    let n = basis.cols();
    if n < 2 {
        return basis.clone();
    }
    let mut s = Lll {
        b: std::iter::once(Vec::new()).chain(basis.columns()).collect(),
        d: vec![BigInt::zero(); n + 1],
        lam: vec![vec![BigInt::zero(); n + 1]; n + 1],
    };
    s.d[0] = BigInt::from(1);
    s.d[1] = dot(&s.b[1], &s.b[1]);
    let (mut k, mut kmax) = (2, 1);
    while k <= n {
        if k > kmax {
            kmax = k;
            for j in 1..=k {
                let mut u = dot(&s.b[k], &s.b[j]);
                for i in 1..j {
                    u = (&s.d[i] * u - &s.lam[k][i] * &s.lam[j][i]) / &s.d[i - 1];
                }
                if j < k {
                    s.lam[k][j] = u;
                } else {
                    assert!(!u.is_zero(), "lll_reduce needs independent columns");
                    s.d[k] = u;
                }
            }
        }
        s.red(k, k - 1);
        let lhs = BigInt::from(4) * &s.d[k] * &s.d[k - 2];
        let rhs = BigInt::from(3) * &s.d[k - 1] * &s.d[k - 1]
            - BigInt::from(4) * &s.lam[k][k - 1] * &s.lam[k][k - 1];
        if lhs < rhs {
            s.swap(k, kmax);
            k = (k - 1).max(2);
        } else {
            for l in (1..k - 1).rev() {
                s.red(k, l);
            }
            k += 1;
        }
    }
    IntegerMatrix::from_columns(basis.rows(), &s.b[1..])
}
