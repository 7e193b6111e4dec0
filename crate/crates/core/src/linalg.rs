//! Exact linear algebra over the rationals.
//!
//! Rows are scaled to integers and reduced by fraction-free (Bareiss)
//! elimination with first-nonzero pivoting; the echelon form is then
//! normalised to reduced row-echelon form over `Rational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::series::Rational;

/// Reduced row-echelon form of a rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    /// Nonzero rows only, each with leading 1 in its pivot column.
    pub rows: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the right nullspace, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|c| !self.pivots.contains(c)) {
            let mut v = vec![Rational::zero(); self.ncols];
            v[free] = Rational::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = -row[free].clone();
            }
            basis.push(v);
        }
        basis
    }
}

fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
}

/// Fraction-free row echelon form; returns the integer rows and pivot columns.
fn bareiss(mut m: Vec<Vec<BigInt>>, ncols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let nrows = m.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[col].clone();
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..ncols {
                let v = &pivot * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&v % &prev).is_zero());
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Reduced row-echelon form of `m` (all rows must have `ncols` entries).
pub fn rref(m: &[Vec<Rational>], ncols: usize) -> Rref {
    let ints: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            assert_eq!(row.len(), ncols, "ragged matrix");
            integer_row(row)
        })
        .collect();
    let (echelon, pivots) = bareiss(ints, ncols);
    let mut rows: Vec<Vec<Rational>> = echelon
        .into_iter()
        .zip(&pivots)
        .map(|(row, &p)| {
            let lead = Rational::from_integer(row[p].clone());
            row.into_iter()
                .map(|v| Rational::from_integer(v) / &lead)
                .collect()
        })
        .collect();
    // back substitution, bottom-up
    for i in (0..rows.len()).rev() {
        let p = pivots[i];
        let (above, below) = rows.split_at_mut(i);
        let pivot_row = &below[0];
        for row in above.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (dst, src) in row.iter_mut().zip(pivot_row).skip(p) {
                *dst -= &f * src;
            }
        }
    }
    Rref { rows, pivots, ncols }
}

pub fn rank(m: &[Vec<Rational>], ncols: usize) -> usize {
    rref(m, ncols).rank()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    Inconsistent {
        rank: usize,
        augmented_rank: usize,
    },
    Solved {
        /// Free variables set to zero.
        particular: Vec<Rational>,
        nullspace: Vec<Vec<Rational>>,
    },
}

/// All solutions of `a·x = b`.
pub fn solve(a: &[Vec<Rational>], b: &[Rational], ncols: usize) -> LinearSolution {
    assert_eq!(a.len(), b.len());
    let augmented: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let red = rref(&augmented, ncols + 1);
    if red.pivots.last() == Some(&ncols) {
        return LinearSolution::Inconsistent {
            rank: red.rank() - 1,
            augmented_rank: red.rank(),
        };
    }
    let mut particular = vec![Rational::zero(); ncols];
    for (row, &p) in red.rows.iter().zip(&red.pivots) {
        particular[p] = row[ncols].clone();
    }
    let coefficient_part = Rref {
        rows: red.rows.iter().map(|r| r[..ncols].to_vec()).collect(),
        pivots: red.pivots.clone(),
        ncols,
    };
    LinearSolution::Solved {
        particular,
        nullspace: coefficient_part.nullspace(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, rat};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    /// Plain rational Gauss-Jordan, the reference the Bareiss path is checked against.
    fn naive_rref(mut a: Vec<Vec<Rational>>, ncols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let lead = a[r][c].clone();
            for v in a[r].iter_mut() {
                *v /= &lead;
            }
            for i in 0..a.len() {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    let pr = a[r].clone();
                    for (x, y) in a[i].iter_mut().zip(pr) {
                        *x -= &f * y;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        a.truncate(r);
        (a, pivots)
    }

    #[test]
    fn rank_of_dependent_rows() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a, 3), 2);
    }

    #[test]
    fn skipped_column_keeps_divisions_exact() {
        let a = m(&[&[0, 2, 4, 1], &[0, 3, 1, 5], &[0, 1, 1, 7]]);
        let r = rref(&a, 4);
        assert_eq!(r.pivots, vec![1, 2, 3]);
    }

    #[test]
    fn unique_solution() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let sol = solve(&a, &[int(3), int(5)], 2);
        assert_eq!(
            sol,
            LinearSolution::Solved {
                particular: vec![rat(4, 5), rat(7, 5)],
                nullspace: vec![]
            }
        );
    }

    #[test]
    fn inconsistent_system() {
        let a = m(&[&[1, 1], &[2, 2]]);
        let sol = solve(&a, &[int(1), int(3)], 2);
        assert_eq!(
            sol,
            LinearSolution::Inconsistent {
                rank: 1,
                augmented_rank: 2
            }
        );
    }

    #[test]
    fn underdetermined_system_reports_nullspace() {
        let a = m(&[&[1, 2, 0]]);
        let LinearSolution::Solved {
            particular,
            nullspace,
        } = solve(&a, &[int(4)], 3)
        else {
            panic!("expected solution")
        };
        assert_eq!(particular, vec![int(4), int(0), int(0)]);
        assert_eq!(
            nullspace,
            vec![vec![int(-2), int(1), int(0)], vec![int(0), int(0), int(1)]]
        );
    }

    proptest! {
        #[test]
        fn bareiss_matches_naive_gauss_jordan(
            rows in prop::collection::vec(prop::collection::vec((-6i64..6, 1i64..4), 5), 1..7)
        ) {
            let a: Vec<Vec<Rational>> = rows
                .iter()
                .map(|r| r.iter().map(|&(n, d)| rat(n, d)).collect())
                .collect();
            let fast = rref(&a, 5);
            let (slow_rows, slow_pivots) = naive_rref(a.clone(), 5);
            prop_assert_eq!(&fast.pivots, &slow_pivots);
            prop_assert_eq!(&fast.rows, &slow_rows);
            for v in fast.nullspace() {
                for row in &a {
                    let dot: Rational = row.iter().zip(&v).map(|(x, y)| x * y).sum();
                    prop_assert!(dot.is_zero());
                }
            }
        }
    }
}
