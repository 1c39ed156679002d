//! Exact integer linear algebra on root coefficient vectors.
//!
//! Everything here works on small integer vectors (root coordinates over the
//! simple basis). Elimination is fraction-free; the only rational code is the
//! back-substitution in [`solve`].

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let nr = m.len();
    let nc = m.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..nc {
        if rank == nr {
            break;
        }
        let Some(p) = (rank..nr).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c];
        for i in rank + 1..nr {
            let factor = m[i][c];
            for j in c + 1..nc {
                let v = pivot * m[i][j] - factor * m[rank][j];
                debug_assert_eq!(v % prev, 0);
                m[i][j] = v / prev;
            }
            m[i][c] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn bareiss_det(rows: &[Vec<i64>]) -> i128 {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix is not square");
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1;
    let mut prev: i128 = 1;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| m[i][k] != 0) else {
            return 0;
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Incrementally maintained rational span of integer vectors.
///
/// Rows are kept in echelon form in insertion order: row `k` is zero at the
/// pivots of every earlier row, and each row is divided by the gcd of its
/// entries.
#[derive(Clone, Debug, Default)]
pub struct Span {
    dim: usize,
    rows: Vec<Vec<i64>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(dim: usize) -> Self {
        Span {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    fn reduce(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.dim);
        let mut w: Vec<i64> = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w[p] == 0 {
                continue;
            }
            let (a, b) = (row[p], w[p]);
            let g = a.gcd(&b);
            let (a, b) = (a / g, b / g);
            for (x, &y) in w.iter_mut().zip(row) {
                *x = a * *x - b * y;
            }
            normalize(&mut w);
        }
        w
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v`, returning `true` if the rank grew.
    pub fn insert(&mut self, v: &[i64]) -> bool {
        let w = self.reduce(v);
        match w.iter().position(|&x| x != 0) {
            Some(p) => {
                self.rows.push(w);
                self.pivots.push(p);
                true
            }
            None => false,
        }
    }
}

fn normalize(w: &mut [i64]) {
    let g = w.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g > 1 {
        w.iter_mut().for_each(|x| *x /= g);
    }
}

/// Coefficients `x` with `sum_k x_k * basis[k] == target`, if any.
///
/// The basis vectors need not be independent; when they are dependent the
/// returned solution sets free variables to zero.
pub fn solve(basis: &[Vec<i64>], target: &[i64]) -> Option<Vec<Rational64>> {
    let n = basis.len();
    let dim = target.len();
    // Augmented system: one equation per coordinate, one unknown per basis vector.
    let mut m: Vec<Vec<Rational64>> = (0..dim)
        .map(|i| {
            let mut row: Vec<Rational64> = basis.iter().map(|b| Rational64::from(b[i])).collect();
            row.push(Rational64::from(target[i]));
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..dim).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..dim {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in 0..=n {
                    let delta = f * m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![Rational64::zero(); n];
    for (row, &c) in m.iter().zip(&pivot_cols) {
        debug_assert!(row[c].is_one());
        x[c] = row[n];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(bareiss_rank(&[]), 0);
        assert_eq!(bareiss_rank(&[vec![0, 0]]), 0);
        assert_eq!(bareiss_rank(&[vec![1, 0], vec![0, 1], vec![1, 1]]), 2);
        assert_eq!(bareiss_rank(&[vec![1, 2, 3], vec![2, 4, 6]]), 1);
        assert_eq!(bareiss_rank(&[vec![0, 1, 2], vec![0, 2, 4], vec![1, 0, 0]]), 2);
    }

    #[test]
    fn det_examples() {
        assert_eq!(bareiss_det(&[vec![2, -1], vec![-1, 2]]), 3);
        assert_eq!(bareiss_det(&[vec![0, 1], vec![1, 0]]), -1);
        // Cartan matrix of E8 is unimodular.
        let mut e8 = vec![vec![0i64; 8]; 8];
        for (i, row) in e8.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)] {
            e8[a][b] = -1;
            e8[b][a] = -1;
        }
        assert_eq!(bareiss_det(&e8), 1);
    }

    #[test]
    fn span_membership() {
        let mut s = Span::new(3);
        assert!(s.insert(&[1, 1, 0]));
        assert!(!s.contains(&[1, 0, 0]));
        assert!(s.insert(&[0, 1, 0]));
        assert!(s.contains(&[1, 0, 0]));
        assert!(s.contains(&[3, -2, 0]));
        assert!(!s.insert(&[5, 7, 0]));
        assert!(!s.contains(&[0, 0, 1]));
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn solve_expansion() {
        let basis = vec![vec![1, 0], vec![1, 1]];
        let x = solve(&basis, &[3, 2]).unwrap();
        assert_eq!(x, vec![Rational64::from(1), Rational64::from(2)]);
        assert!(solve(&[vec![1, 1]], &[1, 0]).is_none());
        let half = solve(&[vec![2, 0]], &[1, 0]).unwrap();
        assert_eq!(half, vec![Rational64::new(1, 2)]);
    }

    fn brute_rank(rows: &[Vec<i64>]) -> usize {
        let mut s = Span::new(rows.first().map_or(0, Vec::len));
        rows.iter().filter(|r| s.insert(r)).count()
    }

    proptest! {
        #[test]
        fn bareiss_agrees_with_span(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 0..6)) {
            prop_assert_eq!(bareiss_rank(&rows), brute_rank(&rows));
        }

        #[test]
        fn det_zero_iff_rank_deficient(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 3)) {
            prop_assert_eq!(bareiss_det(&rows) == 0, bareiss_rank(&rows) < 3);
        }
    }
}
