use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Smith normal form `U · M · V = D` with `U`, `V` unimodular.
#[derive(Clone, Debug)]
pub struct SmithNormalForm {
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub diagonal: IntMatrix,
}

impl SmithNormalForm {
    /// The diagonal entries `d_1 | d_2 | ...`, `min(rows, cols)` of them.
    pub fn invariants(&self) -> Vec<BigInt> {
        let n = self.diagonal.rows().min(self.diagonal.cols());
        (0..n).map(|i| self.diagonal[(i, i)].clone()).collect()
    }

    /// Invariant factors with the units dropped, zeros included. For a square
    /// matrix these present its cokernel; the list is empty iff the cokernel
    /// is trivial.
    pub fn nonunit_invariants(&self) -> Vec<BigInt> {
        let mut v: Vec<BigInt> = self.invariants().into_iter().filter(|d| !d.is_one()).collect();
        // each zero on the diagonal of a non-square matrix contributes nothing extra,
        // but extra rows of a tall matrix are free summands of the cokernel
        let extra = self.diagonal.rows().saturating_sub(self.diagonal.cols());
        v.extend(std::iter::repeat(BigInt::zero()).take(extra));
        v
    }

    pub fn rank(&self) -> usize {
        self.invariants().iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithNormalForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_nonzero(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            // bring the smallest nonzero entry of row t / column t to the pivot
            let mut best: Option<(usize, usize)> = None;
            let cells = (t..rows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j)));
            for (i, j) in cells {
                let x = &d[(i, j)];
                if !x.is_zero() && best.map_or(true, |b| x.abs() < d[b].abs()) {
                    best = Some((i, j));
                }
            }
            let Some((bi, bj)) = best else {
                break;
            };
            if bi != t {
                d.swap_rows(t, bi);
                u.swap_rows(t, bi);
            }
            if bj != t {
                d.swap_cols(t, bj);
                v.swap_cols(t, bj);
            }

            let p = d[(t, t)].clone();
            let mut clear = true;
            for i in t + 1..rows {
                if !d[(i, t)].is_zero() {
                    let q = -nearest_quotient(&d[(i, t)], &p);
                    d.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                    clear &= d[(i, t)].is_zero();
                }
            }
            for j in t + 1..cols {
                if !d[(t, j)].is_zero() {
                    let q = -nearest_quotient(&d[(t, j)], &p);
                    d.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                    clear &= d[(t, j)].is_zero();
                }
            }
            if !clear {
                continue;
            }

            // row and column are clear; enforce divisibility on the remainder
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !d[(i, j)].is_multiple_of(&p));
            match bad {
                Some((i, _)) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }

        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithNormalForm { left: u, right: v, diagonal: d }
}

/// `q` with `|a - q b| <= |b| / 2`.
fn nearest_quotient(a: &BigInt, b: &BigInt) -> BigInt {
    let q = a.div_floor(b);
    let r = a - &q * b;
    if (&r + &r).abs() > b.abs() {
        q + 1
    } else {
        q
    }
}

fn min_nonzero(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.map_or(true, |(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SmithNormalForm {
        let snf = smith_normal_form(m);
        let prod = &(&snf.left * m) * &snf.right;
        assert_eq!(prod, snf.diagonal);
        let inv = snf.invariants();
        for w in inv.windows(2) {
            assert!(w[0].is_zero() && w[1].is_zero() || w[1].is_multiple_of(&w[0]));
        }
        assert!(inv.iter().all(|d| !d.is_negative()));
        snf
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn zero_one_by_one() {
        let snf = check(&IntMatrix::from_rows(&[vec![0]]).unwrap());
        assert_eq!(snf.invariants(), ints(&[0]));
        assert_eq!(snf.nonunit_invariants(), ints(&[0]));
    }

    #[test]
    fn lutz_pair_matrix_is_unimodular() {
        let snf = check(&IntMatrix::from_rows(&[vec![0, -1], vec![-1, -2]]).unwrap());
        assert_eq!(snf.invariants(), ints(&[1, 1]));
        assert!(snf.nonunit_invariants().is_empty());
    }

    #[test]
    fn rank_two_three_by_three() {
        let m = IntMatrix::from_rows(&[vec![0, 1, 1], vec![1, 0, -1], vec![1, -1, -2]]).unwrap();
        let snf = check(&m);
        assert_eq!(snf.invariants(), ints(&[1, 1, 0]));
        assert_eq!(snf.rank(), 2);
    }

    #[test]
    fn divisibility_repair() {
        // diag(2, 3) is not in normal form; Z/2 + Z/3 = Z/6
        let snf = check(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]).unwrap());
        assert_eq!(snf.invariants(), ints(&[1, 6]));
    }

    #[test]
    fn rectangular() {
        let snf = check(&IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12]]).unwrap());
        assert_eq!(snf.invariants(), ints(&[2, 6]));
        let tall = IntMatrix::from_rows(&[vec![2], vec![0], vec![0]]).unwrap();
        assert_eq!(check(&tall).nonunit_invariants(), ints(&[2, 0, 0]));
    }

    #[test]
    fn empty() {
        let snf = check(&IntMatrix::zeros(0, 0));
        assert!(snf.invariants().is_empty());
    }

    #[test]
    fn no_coefficient_blowup() {
        let m = IntMatrix::from_rows(&[
            vec![7, -8, 9, 4, 3, 2],
            vec![-8, 2, 8, 7, -7, -9],
            vec![9, 8, 0, 8, -4, -5],
            vec![4, 7, 8, -4, -7, -2],
            vec![3, -7, -4, -7, 6, 4],
            vec![2, -9, -5, -2, 4, 8],
        ])
        .unwrap();
        let snf = check(&m);
        assert_eq!(snf.nonunit_invariants(), vec![BigInt::from(764838)]);
    }
}
