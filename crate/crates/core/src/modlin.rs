//! Exact linear algebra over the residue ring `Z_m`.
//!
//! Solvability of `A x = b` over `Z_m` is decided by reducing `A` to a diagonal
//! form `P A Q = D` with `P`, `Q` invertible over `Z_m`. Row and column
//! operations are 2x2 transforms built from the extended gcd, so every
//! intermediate entry stays in `[0, m)`. Back substitution on an echelon form is
//! not enough over a ring with zero divisors (free variables can matter), which
//! is why columns are cleared as well.

use num_integer::Integer;

use crate::error::{Error, Result};

/// Dense matrix with entries in `[0, modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMatrix {
    modulus: u64,
    cols: usize,
    rows: Vec<Vec<u64>>,
}

/// Vector with entries in `[0, modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModVector {
    modulus: u64,
    entries: Vec<u64>,
}

fn check_modulus(modulus: u64) -> Result<()> {
    if modulus < 2 {
        Err(Error::InvalidModulus(modulus))
    } else {
        Ok(())
    }
}

fn check_reduced(modulus: u64, values: &[u64]) -> Result<()> {
    match values.iter().find(|&&v| v >= modulus) {
        Some(&value) => Err(Error::UnreducedEntry { value, modulus }),
        None => Ok(()),
    }
}

impl ModMatrix {
    /// Builds a matrix from already reduced rows.
    pub fn new(modulus: u64, rows: Vec<Vec<u64>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::with_cols(modulus, cols, rows)
    }

    pub(crate) fn with_cols(modulus: u64, cols: usize, rows: Vec<Vec<u64>>) -> Result<Self> {
        check_modulus(modulus)?;
        if rows.is_empty() || cols == 0 {
            return Err(Error::InvalidParameter("matrix needs at least one row and one column".into()));
        }
        for row in &rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            check_reduced(modulus, row)?;
        }
        Ok(Self { modulus, cols, rows })
    }

    /// Builds a matrix from arbitrary integers, reducing each entry.
    pub fn from_i64(modulus: u64, rows: &[Vec<i64>]) -> Result<Self> {
        check_modulus(modulus)?;
        let m = i128::from(modulus);
        let reduced = rows
            .iter()
            .map(|r| r.iter().map(|&v| i128::from(v).mod_floor(&m) as u64).collect())
            .collect();
        Self::new(modulus, reduced)
    }

    pub fn identity(modulus: u64, n: usize) -> Result<Self> {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
            .collect();
        Self::new(modulus, rows)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.rows[row][col]
    }

    pub fn row(&self, row: usize) -> &[u64] {
        &self.rows[row]
    }

    /// Exact product reduced mod `m`.
    pub fn mul(&self, other: &ModMatrix) -> Result<ModMatrix> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus, right: other.modulus });
        }
        if self.cols != other.rows() {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows() });
        }
        let m = self.modulus;
        let rows = self
            .rows
            .iter()
            .map(|r| {
                (0..other.cols)
                    .map(|j| {
                        r.iter()
                            .zip(&other.rows)
                            .fold(0, |acc, (&a, orow)| add_mod(acc, mul_mod(a, orow[j], m), m))
                    })
                    .collect()
            })
            .collect();
        Ok(ModMatrix { modulus: m, cols: other.cols, rows })
    }
}

impl ModVector {
    pub fn new(modulus: u64, entries: Vec<u64>) -> Result<Self> {
        check_modulus(modulus)?;
        check_reduced(modulus, &entries)?;
        Ok(Self { modulus, entries })
    }

    /// `value·1` of length `len`, with `value` reduced mod `modulus`.
    pub fn constant(modulus: u64, len: usize, value: u64) -> Result<Self> {
        check_modulus(modulus)?;
        Ok(Self { modulus, entries: vec![value % modulus; len] })
    }

    pub fn zeros(modulus: u64, len: usize) -> Result<Self> {
        Self::constant(modulus, len, 0)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<u64> {
        self.entries
    }

    /// Componentwise `self - other` mod `m`.
    pub fn sub(&self, other: &ModVector) -> Result<ModVector> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus, right: other.modulus });
        }
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), found: other.len() });
        }
        let m = self.modulus;
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| sub_mod(a, b, m)).collect();
        Ok(ModVector { modulus: m, entries })
    }
}

/// `A·x` reduced mod `m`.
pub fn mat_vec_mod(a: &ModMatrix, x: &ModVector) -> Result<ModVector> {
    if a.modulus != x.modulus {
        return Err(Error::ModulusMismatch { left: a.modulus, right: x.modulus });
    }
    if a.cols != x.len() {
        return Err(Error::DimensionMismatch { expected: a.cols, found: x.len() });
    }
    let m = a.modulus;
    let entries = a
        .rows
        .iter()
        .map(|r| r.iter().zip(&x.entries).fold(0, |acc, (&u, &v)| add_mod(acc, mul_mod(u, v, m), m)))
        .collect();
    Ok(ModVector { modulus: m, entries })
}

/// Finds some `x` with `A x ≡ b (mod m)`, or `None` when no solution exists.
///
/// The decision is complete. A returned witness has been checked by
/// substitution; a zero right-hand side yields `x = 0`.
pub fn solve_linear_mod(a: &ModMatrix, b: &ModVector) -> Result<Option<ModVector>> {
    if a.modulus != b.modulus {
        return Err(Error::ModulusMismatch { left: a.modulus, right: b.modulus });
    }
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.rows(), found: b.len() });
    }
    let m = a.modulus;
    let form = DiagonalForm::compute(a);
    let c = mat_vec_mod(&form.left, b)?;

    let mut y = vec![0u64; a.cols];
    for (i, &ci) in c.entries.iter().enumerate() {
        let d = form.diagonal.get(i).copied().unwrap_or(0);
        match solve_scalar(d, ci, m) {
            Some(yi) => {
                if i < y.len() {
                    y[i] = yi;
                }
            }
            None => return Ok(None),
        }
    }

    let x = mat_vec_mod(&form.right, &ModVector { modulus: m, entries: y })?;
    if mat_vec_mod(a, &x)? != *b {
        return Err(Error::Consistency("solver witness failed substitution".into()));
    }
    Ok(Some(x))
}

/// `P A Q = D` over `Z_m` with `P`, `Q` of determinant `±1` mod `m` and `D`
/// zero off the diagonal.
#[derive(Debug, Clone)]
pub struct DiagonalForm {
    /// Row transform `P` (rows × rows).
    pub left: ModMatrix,
    /// Column transform `Q` (cols × cols).
    pub right: ModMatrix,
    /// `D[i][i]` for `i < min(rows, cols)`; nonzero exactly for `i < rank`.
    pub diagonal: Vec<u64>,
    pub rank: usize,
}

impl DiagonalForm {
    pub fn compute(a: &ModMatrix) -> DiagonalForm {
        let m = a.modulus;
        let (nr, nc) = (a.rows(), a.cols());
        let mut work = a.rows.clone();
        let mut left = identity_rows(nr);
        let mut right = identity_rows(nc);

        let mut t = 0;
        while t < nr.min(nc) {
            // Leftmost column with a nonzero entry at or below row t; within it
            // the entry with the smallest gcd with m, lowest row on ties.
            let pivot = (t..nc).find_map(|col| {
                (t..nr)
                    .filter(|&r| work[r][col] != 0)
                    .min_by_key(|&r| (work[r][col].gcd(&m), r))
                    .map(|r| (r, col))
            });
            let Some((pr, pc)) = pivot else { break };

            work.swap(t, pr);
            left.swap(t, pr);
            swap_cols(&mut work, t, pc);
            swap_cols(&mut right, t, pc);

            loop {
                for k in t + 1..nr {
                    if work[k][t] != 0 {
                        let tf = eliminator(work[t][t], work[k][t], m);
                        row_transform(&mut work, t, k, tf, m);
                        row_transform(&mut left, t, k, tf, m);
                    }
                }
                for j in t + 1..nc {
                    if work[t][j] != 0 {
                        let tf = eliminator(work[t][t], work[t][j], m);
                        col_transform(&mut work, t, j, tf, m);
                        col_transform(&mut right, t, j, tf, m);
                    }
                }
                if (t + 1..nr).all(|k| work[k][t] == 0) {
                    break;
                }
            }
            t += 1;
        }

        let diagonal = (0..nr.min(nc)).map(|i| work[i][i]).collect();
        DiagonalForm {
            left: ModMatrix { modulus: m, cols: nr, rows: left },
            right: ModMatrix { modulus: m, cols: nc, rows: right },
            diagonal,
            rank: t,
        }
    }

    /// `D` as a full `rows × cols` matrix.
    pub fn diagonal_matrix(&self) -> ModMatrix {
        let (nr, nc) = (self.left.rows(), self.right.rows());
        let rows = (0..nr)
            .map(|i| (0..nc).map(|j| if i == j { self.diagonal[i] } else { 0 }).collect())
            .collect();
        ModMatrix { modulus: self.left.modulus, cols: nc, rows }
    }
}

type Transform = [[u64; 2]; 2];

/// A determinant-1 transform mapping `(pivot, other)` to `(g, 0)`.
///
/// When `other` already lies in the ideal generated by `pivot` the pivot is
/// left untouched; otherwise the pivot ideal strictly grows, so the
/// row/column sweep in [`DiagonalForm::compute`] terminates.
fn eliminator(pivot: u64, other: u64, m: u64) -> Transform {
    let g = pivot.gcd(&m);
    if other.is_multiple_of(g) {
        let q = mul_mod(other / g, inverse_mod(pivot / g, m / g), m / g);
        return [[1, 0], [(m - q % m) % m, 1]];
    }
    let (p, o) = (i128::from(pivot), i128::from(other));
    let eg = p.extended_gcd(&o);
    let mi = i128::from(m);
    let red = |v: i128| v.mod_floor(&mi) as u64;
    [[red(eg.x), red(eg.y)], [red(-(o / eg.gcd)), red(p / eg.gcd)]]
}

fn row_transform(rows: &mut [Vec<u64>], r: usize, k: usize, [[a, b], [c, d]]: Transform, m: u64) {
    for j in 0..rows[r].len() {
        let (x, y) = (rows[r][j], rows[k][j]);
        rows[r][j] = add_mod(mul_mod(a, x, m), mul_mod(b, y, m), m);
        rows[k][j] = add_mod(mul_mod(c, x, m), mul_mod(d, y, m), m);
    }
}

fn col_transform(rows: &mut [Vec<u64>], t: usize, j: usize, [[a, b], [c, d]]: Transform, m: u64) {
    for row in rows.iter_mut() {
        let (x, y) = (row[t], row[j]);
        row[t] = add_mod(mul_mod(a, x, m), mul_mod(b, y, m), m);
        row[j] = add_mod(mul_mod(c, x, m), mul_mod(d, y, m), m);
    }
}

fn swap_cols(rows: &mut [Vec<u64>], a: usize, b: usize) {
    if a != b {
        for row in rows.iter_mut() {
            row.swap(a, b);
        }
    }
}

fn identity_rows(n: usize) -> Vec<Vec<u64>> {
    (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect()
}

/// Some `y` with `d·y ≡ c (mod m)`.
fn solve_scalar(d: u64, c: u64, m: u64) -> Option<u64> {
    let g = d.gcd(&m);
    if !c.is_multiple_of(g) {
        return None;
    }
    if g == m {
        return Some(0);
    }
    Some(mul_mod(c / g, inverse_mod(d / g, m / g), m / g))
}

/// Inverse of a unit `a` modulo `m`; `m == 1` yields 0.
pub(crate) fn inverse_mod(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let eg = i128::from(a).extended_gcd(&i128::from(m));
    debug_assert_eq!(eg.gcd, 1);
    eg.x.mod_floor(&i128::from(m)) as u64
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}

fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) + u128::from(b)) % u128::from(m)) as u64
}

fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    add_mod(a, m - b % m, m)
}
