//! Vandermonde systems on arithmetic-progression nodes.
//!
//! [`build_system`] produces `V x = (0, ..., 0, b^n n!)` where row `i` of `V`
//! holds the `i`-th powers of the nodes `a, a+b, ..., a+nb`. The closed-form
//! determinants of `V` and of `V_k` (column `k` replaced by the right-hand
//! side) live next to two generic exact oracles: the pairwise-difference
//! product and fraction-free elimination.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{factorial, rat_pow, superfactorial, Rational};

/// The nodes `a + i*b` for `i` in `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArithmeticNodes {
    pub a: Rational,
    pub b: Rational,
    pub n: usize,
}

impl ArithmeticNodes {
    pub fn new(a: Rational, b: Rational, n: usize) -> Self {
        Self { a, b, n }
    }

    pub fn node(&self, i: usize) -> Rational {
        &self.a + &self.b * Rational::from_integer(i)
    }

    pub fn nodes(&self) -> Vec<Rational> {
        (0..=self.n).map(|i| self.node(i)).collect()
    }

    /// Nodes are pairwise distinct iff `b != 0` (or there is only one node).
    pub fn distinct(&self) -> bool {
        self.n == 0 || !self.b.is_zero()
    }
}

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Self::new(nrows, ncols, entries)
    }

    pub fn identity(size: usize) -> Self {
        let entries = (0..size * size)
            .map(|idx| {
                if idx / size == idx % size {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        Self {
            rows: size,
            cols: size,
            entries,
        }
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

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        assert!(
            row < self.rows && col < self.cols,
            "index ({row}, {col}) out of bounds"
        );
        &self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[Rational] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Copy of the matrix with column `col` overwritten by `values`.
    pub fn with_column(&self, col: usize, values: &[Rational]) -> Result<Self> {
        if col >= self.cols {
            return Err(Error::Domain(format!(
                "column {col} out of range for {} columns",
                self.cols
            )));
        }
        if values.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: values.len(),
            });
        }
        let mut out = self.clone();
        for (i, v) in values.iter().enumerate() {
            out.entries[i * self.cols + col] = v.clone();
        }
        Ok(out)
    }

    /// `self * x`.
    pub fn apply(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(m, v)| m * v).sum())
            .collect())
    }
}

/// Rows of canonical `p/q` tokens separated by spaces, one row per line.
impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self
                .row(i)
                .iter()
                .map(Rational::to_fraction_string)
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    matrix: ExactMatrix,
    rhs: Vec<Rational>,
}

impl LinearSystem {
    pub fn new(matrix: ExactMatrix, rhs: Vec<Rational>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows,
                cols: matrix.cols,
            });
        }
        if rhs.len() != matrix.rows {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows,
                found: rhs.len(),
            });
        }
        Ok(Self { matrix, rhs })
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    pub fn size(&self) -> usize {
        self.rhs.len()
    }

    /// Residual `A x - rhs`, one entry per equation.
    pub fn residual(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        let ax = self.matrix.apply(x)?;
        Ok(ax.iter().zip(&self.rhs).map(|(l, r)| l - r).collect())
    }
}

/// Vandermonde matrix with entry `(i, j) = nodes[j]^i`.
pub fn vandermonde_matrix(nodes: &[Rational]) -> ExactMatrix {
    let size = nodes.len();
    let mut entries = Vec::with_capacity(size * size);
    for i in 0..size {
        entries.extend(nodes.iter().map(|x| rat_pow(x, i)));
    }
    ExactMatrix {
        rows: size,
        cols: size,
        entries,
    }
}

/// The system `V x = (0, ..., 0, b^n n!)` over the nodes `a + j b`.
pub fn build_system(nodes: &ArithmeticNodes) -> LinearSystem {
    let matrix = vandermonde_matrix(&nodes.nodes());
    let n = nodes.n;
    let mut rhs = vec![Rational::zero(); n + 1];
    rhs[n] = rat_pow(&nodes.b, n) * Rational::from_integer(factorial(n));
    LinearSystem { matrix, rhs }
}

/// `prod_{j < i} (x_i - x_j)`; one for fewer than two nodes.
pub fn det_vandermonde_general(nodes: &[Rational]) -> Rational {
    let mut acc = Rational::one();
    for (i, xi) in nodes.iter().enumerate() {
        for xj in &nodes[..i] {
            acc *= &(xi - xj);
        }
    }
    acc
}

fn triangular(n: usize) -> usize {
    n * (n + 1) / 2
}

/// `det V = 1! 2! ... n! * b^(n(n+1)/2)`, independent of `a`.
pub fn det_vandermonde_closed(n: usize, b: &Rational) -> Rational {
    Rational::from_integer(superfactorial(n)) * rat_pow(b, triangular(n))
}

/// `det V_k = (-1)^(n-k) b^(n(n+1)/2) n! * sf(n) / (k! (n-k)!)`.
///
/// Expanding along column `k` leaves `b^n n!` times the Vandermonde
/// determinant of the remaining `n` nodes, whose pairwise differences are
/// those of all `n+1` nodes minus the `k! (n-k)!` factor contributed by node
/// `k` (in units of `b`).
pub fn det_vk_closed(n: usize, k: usize, b: &Rational) -> Result<Rational> {
    if k > n {
        return Err(Error::Domain(format!("column index k={k} exceeds n={n}")));
    }
    let magnitude = factorial(n) * superfactorial(n);
    let (q, rem) = magnitude.div_rem(&(factorial(k) * factorial(n - k)));
    debug_assert!(rem.is_zero());
    let signed = if (n - k) % 2 == 1 { -q } else { q };
    Ok(Rational::from_integer(signed) * rat_pow(b, triangular(n)))
}

/// Scales every row by the lcm of its denominators. Returns the integer
/// rows and the product of all scale factors.
fn clear_denominators(rows: &[&[Rational]]) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let int_rows = rows
        .iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denominator()));
            let out = row
                .iter()
                .map(|x| x.numerator() * (&lcm / x.denominator()))
                .collect();
            scale *= &lcm;
            out
        })
        .collect();
    (int_rows, scale)
}

/// In-place fraction-free forward elimination on the leading `n` columns of
/// an `n`-row integer matrix (which may carry extra augmented columns).
/// The pivot is the first nonzero entry at or below the diagonal.
/// Returns the row-swap parity (+1 / -1), or `None` if singular.
fn bareiss_forward(m: &mut [Vec<BigInt>]) -> Option<i32> {
    let n = m.len();
    let width = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut sign = 1;
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero())?;
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        let (upper, lower) = m.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        for row in lower.iter_mut() {
            for j in k + 1..width {
                let t = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                debug_assert!((&t % &prev).is_zero());
                row[j] = t / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    Some(sign)
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det_bareiss(matrix: &ExactMatrix) -> Result<Rational> {
    if !matrix.is_square() {
        return Err(Error::NotSquare {
            rows: matrix.rows,
            cols: matrix.cols,
        });
    }
    let n = matrix.rows;
    if n == 0 {
        return Ok(Rational::one());
    }
    let rows: Vec<&[Rational]> = (0..n).map(|i| matrix.row(i)).collect();
    let (mut ints, scale) = clear_denominators(&rows);
    let det = match bareiss_forward(&mut ints) {
        None => return Ok(Rational::zero()),
        Some(sign) => {
            let last = ints[n - 1][n - 1].clone();
            if sign < 0 {
                -last
            } else {
                last
            }
        }
    };
    Rational::new(det, scale)
}

/// Unique solution of a nonsingular square system, via fraction-free
/// elimination on the augmented integer matrix and rational back
/// substitution.
pub fn solve_exact(system: &LinearSystem) -> Result<Vec<Rational>> {
    let n = system.size();
    let augmented: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = system.matrix.row(i).to_vec();
            row.push(system.rhs[i].clone());
            row
        })
        .collect();
    let borrowed: Vec<&[Rational]> = augmented.iter().map(Vec::as_slice).collect();
    let (mut ints, _) = clear_denominators(&borrowed);
    bareiss_forward(&mut ints).ok_or(Error::Singular)?;

    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let row = &ints[i];
        let mut acc = Rational::from_integer(row[n].clone());
        for j in i + 1..n {
            if !row[j].is_zero() {
                acc -= &(Rational::from_integer(row[j].clone()) * &x[j]);
            }
        }
        x[i] = acc.checked_div(&Rational::from_integer(row[i].clone()))?;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn rs(items: &[&str]) -> Vec<Rational> {
        items.iter().map(|s| r(s)).collect()
    }

    fn nodes(a: &str, b: &str, n: usize) -> ArithmeticNodes {
        ArithmeticNodes::new(r(a), r(b), n)
    }

    #[test]
    fn build_system_examples() {
        let sys = build_system(&nodes("0", "1", 1));
        assert_eq!(
            sys.matrix().row_vecs(),
            vec![rs(&["1", "1"]), rs(&["0", "1"])]
        );
        assert_eq!(sys.rhs(), rs(&["0", "1"]).as_slice());

        let sys = build_system(&nodes("1", "2", 2));
        assert_eq!(
            sys.matrix().row_vecs(),
            vec![
                rs(&["1", "1", "1"]),
                rs(&["1", "3", "5"]),
                rs(&["1", "9", "25"])
            ]
        );
        assert_eq!(sys.rhs(), rs(&["0", "0", "8"]).as_slice());

        let sys = build_system(&nodes("3", "0", 1));
        assert_eq!(
            sys.matrix().row_vecs(),
            vec![rs(&["1", "1"]), rs(&["3", "3"])]
        );
        assert_eq!(sys.rhs(), rs(&["0", "0"]).as_slice());
    }

    #[test]
    fn zero_node_gives_all_ones_first_row() {
        let sys = build_system(&nodes("0", "-1/2", 3));
        assert!(sys.matrix().row(0).iter().all(|x| *x == Rational::one()));
    }

    #[test]
    fn general_determinant_examples() {
        assert_eq!(det_vandermonde_general(&rs(&["0", "1", "2"])), r("2"));
        assert_eq!(det_vandermonde_general(&rs(&["5", "5"])), r("0"));
        assert_eq!(det_vandermonde_general(&rs(&["7"])), r("1"));
        assert_eq!(det_vandermonde_general(&[]), r("1"));
    }

    #[test]
    fn closed_determinant_examples() {
        assert_eq!(det_vandermonde_closed(2, &r("1")), r("2"));
        assert_eq!(det_vandermonde_closed(0, &r("-17/3")), r("1"));
        assert_eq!(det_vandermonde_closed(0, &r("0")), r("1"));
        assert_eq!(det_vandermonde_closed(3, &r("2")), r("768"));
        assert_eq!(
            det_vandermonde_general(&nodes("5/3", "2", 3).nodes()),
            r("768")
        );
    }

    #[test]
    fn vk_closed_examples() {
        let b = r("-3/4");
        assert_eq!(det_vk_closed(1, 0, &b).unwrap(), -&b);
        assert_eq!(det_vk_closed(2, 1, &r("1")).unwrap(), r("-4"));
        assert_eq!(det_vk_closed(2, 2, &r("1")).unwrap(), r("2"));
        assert!(matches!(
            det_vk_closed(2, 3, &r("1")),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn vk_closed_matches_hand_expansion_n1() {
        // [[0, 1], [b, a + b]] has determinant -b for every a.
        for (a, b) in [("0", "1"), ("7/2", "-2"), ("-1", "1/5")] {
            let m = ExactMatrix::from_rows(vec![rs(&["0", "1"]), vec![r(b), r(a) + r(b)]]).unwrap();
            assert_eq!(
                det_bareiss(&m).unwrap(),
                det_vk_closed(1, 0, &r(b)).unwrap()
            );
        }
    }

    #[test]
    fn bareiss_examples() {
        assert_eq!(det_bareiss(&ExactMatrix::identity(3)).unwrap(), r("1"));
        let m = ExactMatrix::from_rows(vec![rs(&["1", "1"]), rs(&["0", "1"])]).unwrap();
        assert_eq!(det_bareiss(&m).unwrap(), r("1"));
        let xs = rs(&["1/2", "1", "3/2", "2"]);
        assert_eq!(
            det_bareiss(&vandermonde_matrix(&xs)).unwrap(),
            det_vandermonde_general(&xs)
        );
        assert_eq!(det_bareiss(&ExactMatrix::identity(0)).unwrap(), r("1"));
    }

    #[test]
    fn bareiss_handles_row_swaps_and_rejects_rectangles() {
        let m = ExactMatrix::from_rows(vec![rs(&["0", "1"]), rs(&["1", "0"])]).unwrap();
        assert_eq!(det_bareiss(&m).unwrap(), r("-1"));
        let m = ExactMatrix::from_rows(vec![
            rs(&["0", "2/3", "1"]),
            rs(&["0", "1", "-1/2"]),
            rs(&["5/7", "4", "9"]),
        ])
        .unwrap();
        // cofactor along column 0: 5/7 * (2/3 * -1/2 - 1 * 1) = 5/7 * -4/3
        assert_eq!(det_bareiss(&m).unwrap(), r("-20/21"));
        let rect = ExactMatrix::new(2, 3, vec![Rational::zero(); 6]).unwrap();
        assert_eq!(
            det_bareiss(&rect),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn solve_examples() {
        assert_eq!(
            solve_exact(&build_system(&nodes("0", "1", 1))).unwrap(),
            rs(&["-1", "1"])
        );
        assert_eq!(
            solve_exact(&build_system(&nodes("0", "1", 2))).unwrap(),
            rs(&["1", "-2", "1"])
        );
        assert_eq!(
            solve_exact(&build_system(&nodes("3", "0", 1))),
            Err(Error::Singular)
        );
    }

    #[test]
    fn solve_general_rational_system() {
        let m = ExactMatrix::from_rows(vec![rs(&["0", "1/2"]), rs(&["3", "1"])]).unwrap();
        let sys = LinearSystem::new(m, rs(&["1", "1/3"])).unwrap();
        let x = solve_exact(&sys).unwrap();
        assert!(sys.residual(&x).unwrap().iter().all(Rational::is_zero));
        assert_eq!(x, rs(&["-5/9", "2"]));
    }

    #[test]
    fn system_shape_validation() {
        let rect = ExactMatrix::new(1, 2, rs(&["1", "2"])).unwrap();
        assert!(matches!(
            LinearSystem::new(rect, rs(&["1"])),
            Err(Error::NotSquare { .. })
        ));
        let sq = ExactMatrix::identity(2);
        assert!(matches!(
            LinearSystem::new(sq, rs(&["1"])),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(ExactMatrix::new(2, 2, rs(&["1"])).is_err());
        assert!(ExactMatrix::from_rows(vec![rs(&["1"]), rs(&["1", "2"])]).is_err());
    }

    #[test]
    fn matrix_text_form() {
        let sys = build_system(&nodes("1/2", "1", 1));
        assert_eq!(sys.matrix().to_string(), "1/1 1/1\n1/2 3/2\n");
    }

    #[test]
    fn node_distinctness() {
        assert!(nodes("1", "1/2", 4).distinct());
        assert!(!nodes("1", "0", 4).distinct());
        assert!(nodes("1", "0", 0).distinct());
        assert_eq!(nodes("1/3", "1/3", 3).node(2), r("1"));
    }
}
