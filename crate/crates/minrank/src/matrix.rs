//! Small dense integer matrices, just enough linear algebra for lattice work:
//! multiplication, Smith normal form, rank over Q, and fraction-free
//! determinants.  Everything here is exact; entries stay tiny in practice
//! (Cartan matrices and signed permutation-like automorphisms).

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        IntMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    /// Permutation matrix with `m * e_i = e_{perm[i]}` (0-based).
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = IntMatrix::zero(n, n);
        for (i, &j) in perm.iter().enumerate() {
            m.data[j * n + i] = 1;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == IntMatrix::identity(self.rows)
    }

    /// Rank over the rationals, by fraction-free Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<i128>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|&x| x as i128).collect())
            .collect();
        let mut rank = 0;
        let mut col = 0;
        while rank < self.rows && col < self.cols {
            let pivot = (rank..self.rows).find(|&i| m[i][col] != 0);
            let Some(p) = pivot else {
                col += 1;
                continue;
            };
            m.swap(rank, p);
            for i in rank + 1..self.rows {
                if m[i][col] == 0 {
                    continue;
                }
                let (a, b) = (m[rank][col], m[i][col]);
                let g = gcd(a, b);
                let (fa, fb) = (a / g, b / g);
                for j in 0..self.cols {
                    m[i][j] = m[i][j] * fa - m[rank][j] * fb;
                }
            }
            rank += 1;
            col += 1;
        }
        rank
    }

    /// Invariant factors (nonzero diagonal of the Smith normal form),
    /// normalised positive and in divisibility order.
    pub fn smith_invariants(&self) -> Vec<i64> {
        let mut m: Vec<Vec<i128>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|&x| x as i128).collect())
            .collect();
        let n = self.rows.min(self.cols);
        let mut invariants = Vec::new();
        let mut t = 0;
        while t < n {
            // find the entry of smallest nonzero absolute value in the
            // remaining block and bring it to (t, t)
            let mut best: Option<(usize, usize)> = None;
            for i in t..self.rows {
                for j in t..self.cols {
                    if m[i][j] != 0 && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            m.swap(t, bi);
            for row in m.iter_mut() {
                row.swap(t, bj);
            }
            // clear row and column t by euclidean steps
            let mut clean = false;
            while !clean {
                clean = true;
                for i in t + 1..self.rows {
                    if m[i][t] != 0 {
                        let q = div_round(m[i][t], m[t][t]);
                        for j in t..self.cols {
                            m[i][j] -= q * m[t][j];
                        }
                        if m[i][t] != 0 {
                            m.swap(t, i);
                            clean = false;
                        }
                    }
                }
                for j in t + 1..self.cols {
                    if m[t][j] != 0 {
                        let q = div_round(m[t][j], m[t][t]);
                        for row in m.iter_mut().take(self.rows).skip(t) {
                            row[j] -= q * row[t];
                        }
                        if m[t][j] != 0 {
                            for row in m.iter_mut() {
                                row.swap(t, j);
                            }
                            clean = false;
                        }
                    }
                }
            }
            invariants.push(m[t][t].unsigned_abs() as i64);
            t += 1;
        }
        // enforce the divisibility chain d1 | d2 | ...
        let k = invariants.len();
        for i in 0..k {
            for j in i + 1..k {
                let (a, b) = (invariants[i] as i128, invariants[j] as i128);
                let g = gcd(a, b);
                let l = a / g * b;
                invariants[i] = g as i64;
                invariants[j] = l as i64;
            }
        }
        invariants
    }

    /// Leading principal minors, by Bareiss fraction-free elimination.
    /// Only valid for square matrices.
    pub fn leading_principal_minors(&self) -> Vec<i128> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m: Vec<Vec<i128>> = (0..n)
            .map(|i| self.row(i).iter().map(|&x| x as i128).collect())
            .collect();
        let mut minors = Vec::with_capacity(n);
        let mut prev = 1i128;
        for k in 0..n {
            if m[k][k] == 0 {
                // Bareiss needs a nonzero pivot; fall back to expansion minors.
                return (1..=n).map(|s| self.minor_det(s)).collect();
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
            minors.push(prev);
        }
        minors
    }

    fn minor_det(&self, size: usize) -> i128 {
        // cofactor expansion; used only as a fallback on tiny matrices
        fn det(m: &[Vec<i128>]) -> i128 {
            let n = m.len();
            if n == 0 {
                return 1;
            }
            if n == 1 {
                return m[0][0];
            }
            let mut acc = 0;
            for j in 0..n {
                if m[0][j] == 0 {
                    continue;
                }
                let sub: Vec<Vec<i128>> = (1..n)
                    .map(|i| (0..n).filter(|&c| c != j).map(|c| m[i][c]).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                acc += s * m[0][j] * det(&sub);
            }
            acc
        }
        let m: Vec<Vec<i128>> = (0..size)
            .map(|i| (0..size).map(|j| self.get(i, j) as i128).collect())
            .collect();
        det(&m)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    if a == 0 {
        1
    } else {
        a
    }
}

/// Quotient rounded to nearest, so the remainder satisfies |r| <= |d|/2.
fn div_round(n: i128, d: i128) -> i128 {
    let q = n / d;
    let r = n - q * d;
    if 2 * r.abs() > d.abs() {
        q + if (r < 0) == (d < 0) { 1 } else { -1 }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_and_apply() {
        let a = IntMatrix::from_rows(vec![vec![1, 2], vec![3, 4]]);
        let b = IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(
            a.mul(&b),
            IntMatrix::from_rows(vec![vec![2, 1], vec![4, 3]])
        );
        assert_eq!(a.apply(&[1, 1]), vec![3, 7]);
    }

    #[test]
    fn permutation_matrix_convention() {
        let p = IntMatrix::permutation(&[2, 0, 1]);
        assert_eq!(p.apply(&[1, 0, 0]), vec![0, 0, 1]);
        assert_eq!(p.apply(&[0, 1, 0]), vec![1, 0, 0]);
    }

    #[test]
    fn smith_invariants_of_swap_difference() {
        // theta - id for the swap on Z^2: columns (e2 - e1, e1 - e2)
        let m = IntMatrix::from_rows(vec![vec![-1, 1], vec![1, -1]]);
        assert_eq!(m.smith_invariants(), vec![1]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn smith_divisibility_chain() {
        let m = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(m.smith_invariants(), vec![1, 6]);
    }

    #[test]
    fn principal_minors_of_cartan_a2() {
        let a2 = IntMatrix::from_rows(vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.leading_principal_minors(), vec![2, 3]);
    }

    #[test]
    fn rank_of_singular_matrix() {
        let m = IntMatrix::from_rows(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 0, 1]]);
        assert_eq!(m.rank(), 2);
    }
}
