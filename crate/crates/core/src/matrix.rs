//! Dense exact matrices, elementary row operations and Gauss–Jordan
//! reduction.
//!
//! Row indices in [`RowOp`] and column indices in [`RrefResult`] are
//! 1-based. Entry access through [`Matrix::get`] is 0-based.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    /// Builds an `rows × cols` matrix from row-major entries.
    pub fn new(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!(
                "dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            field.ensure_same(&e.field())?;
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "dimensions must be positive");
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    /// Integer entries, one slice per row.
    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| Scalar::from_i64(field, v)))
            .collect();
        Self::new(field, rows.len(), cols, entries)
    }

    /// Scalar entries, one vector per row.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let n = rows.len();
        Self::new(field, n, cols, rows.into_iter().flatten().collect())
    }

    /// Assembles equal-height columns side by side.
    pub fn from_columns(columns: &[Matrix]) -> Result<Self> {
        let first = columns
            .first()
            .ok_or_else(|| Error::DimensionMismatch("no columns".into()))?;
        let (field, rows) = (first.field, first.rows);
        for c in columns {
            field.ensure_same(&c.field)?;
            if c.rows != rows || c.cols != 1 {
                return Err(Error::DimensionMismatch(format!(
                    "expected {rows}x1 column, got {}x{}",
                    c.rows, c.cols
                )));
            }
        }
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for i in 0..rows {
                m.entries[i * m.cols + j] = c.entries[i].clone();
            }
        }
        Ok(m)
    }

    /// Standard basis column `e_k` of length `n` (`k` is 1-based).
    pub fn unit_column(field: Field, n: usize, k: usize) -> Self {
        let mut m = Self::zeros(field, n, 1);
        m.entries[k - 1] = field.one();
        m
    }

    pub fn field(&self) -> Field {
        self.field
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

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        assert!(row < self.rows && col < self.cols, "entry index out of range");
        &self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[Scalar] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// Column `col` (0-based) as an `rows × 1` matrix.
    pub fn column(&self, col: usize) -> Matrix {
        let entries = (0..self.rows).map(|i| self.get(i, col).clone()).collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: 1,
            entries,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    fn ensure_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn ensure_same_shape(&self, other: &Matrix) -> Result<()> {
        self.field.ensure_same(&other.field)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        self.field.ensure_same(&rhs.field)?;
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * rhs.get(k, j));
                }
            }
        }
        Ok(out)
    }

    /// `self^k` by repeated multiplication, stopping early once the power
    /// vanishes.
    pub fn pow(&self, k: usize) -> Result<Matrix> {
        self.ensure_square()?;
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..k {
            if acc.is_zero() {
                break;
            }
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Result<Scalar> {
        self.ensure_square()?;
        Ok((0..self.rows).fold(self.field.zero(), |acc, i| &acc + self.get(i, i)))
    }

    /// Inverse via Gauss–Jordan on the augmented block `[M | I]`.
    pub fn inverse(&self) -> Result<Matrix> {
        self.ensure_square()?;
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.entries[i * 2 * n + j] = self.get(i, j).clone();
            }
            aug.entries[i * 2 * n + n + i] = self.field.one();
        }
        let reduced = rref(&aug);
        if reduced.pivot_cols.iter().take_while(|&&p| p <= n).count() < n {
            return Err(Error::SingularMatrix);
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.entries[i * n + j] = reduced.rref.get(i, n + j).clone();
            }
        }
        Ok(inv)
    }

    pub fn rref(&self) -> RrefResult {
        rref(self)
    }

    /// Applies `script` left to right, returning a new matrix.
    pub fn apply(&self, script: &RowScript) -> Result<Matrix> {
        let mut out = self.clone();
        for op in script.ops() {
            out.apply_op_in_place(op)?;
        }
        Ok(out)
    }

    fn check_row(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.rows {
            return Err(Error::IndexOutOfRange {
                index: i,
                rows: self.rows,
            });
        }
        Ok(i - 1)
    }

    fn apply_op_in_place(&mut self, op: &RowOp) -> Result<()> {
        let cols = self.cols;
        match op {
            RowOp::Swap(i, j) => {
                let (i, j) = (self.check_row(*i)?, self.check_row(*j)?);
                if i == j {
                    return Err(Error::InvalidOp("swap of a row with itself".into()));
                }
                for c in 0..cols {
                    self.entries.swap(i * cols + c, j * cols + c);
                }
            }
            RowOp::Scale(i, c) => {
                let i = self.check_row(*i)?;
                self.field.ensure_same(&c.field())?;
                if c.is_zero() {
                    return Err(Error::InvalidOp("scale by zero".into()));
                }
                for e in &mut self.entries[i * cols..(i + 1) * cols] {
                    *e = &*e * c;
                }
            }
            RowOp::AddMul {
                target,
                coeff,
                source,
            } => {
                let (t, s) = (self.check_row(*target)?, self.check_row(*source)?);
                self.field.ensure_same(&coeff.field())?;
                if t == s {
                    return Err(Error::InvalidOp("addmul with target = source".into()));
                }
                for c in 0..cols {
                    let add = coeff * &self.entries[s * cols + c];
                    self.entries[t * cols + c] = &self.entries[t * cols + c] + &add;
                }
            }
        }
        Ok(())
    }
}

/// An elementary row operation. Row indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RowOp {
    Swap(usize, usize),
    Scale(usize, Scalar),
    /// `row[target] += coeff * row[source]`
    AddMul {
        target: usize,
        coeff: Scalar,
        source: usize,
    },
}

impl RowOp {
    pub fn swap(i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i == j {
            return Err(Error::InvalidOp(format!("swap {i} {j}")));
        }
        Ok(RowOp::Swap(i, j))
    }

    pub fn scale(i: usize, c: Scalar) -> Result<Self> {
        if i == 0 || c.is_zero() {
            return Err(Error::InvalidOp(format!("scale {i} {c}")));
        }
        Ok(RowOp::Scale(i, c))
    }

    pub fn add_mul(target: usize, coeff: Scalar, source: usize) -> Result<Self> {
        if target == 0 || source == 0 || target == source {
            return Err(Error::InvalidOp(format!("addmul {target} {coeff} {source}")));
        }
        Ok(RowOp::AddMul {
            target,
            coeff,
            source,
        })
    }

    pub fn inverse(&self) -> RowOp {
        match self {
            RowOp::Swap(i, j) => RowOp::Swap(*i, *j),
            RowOp::Scale(i, c) => RowOp::Scale(*i, c.inv().expect("scale coefficient is nonzero")),
            RowOp::AddMul {
                target,
                coeff,
                source,
            } => RowOp::AddMul {
                target: *target,
                coeff: -coeff,
                source: *source,
            },
        }
    }
}

impl fmt::Display for RowOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowOp::Swap(i, j) => write!(f, "swap {i} {j}"),
            RowOp::Scale(i, c) => write!(f, "scale {i} {c}"),
            RowOp::AddMul {
                target,
                coeff,
                source,
            } => write!(f, "addmul {target} {coeff} {source}"),
        }
    }
}

/// An ordered list of elementary row operations, applied left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RowScript {
    ops: Vec<RowOp>,
}

impl RowScript {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_ops(ops: Vec<RowOp>) -> Self {
        RowScript { ops }
    }

    pub fn push(&mut self, op: RowOp) {
        self.ops.push(op);
    }

    pub fn ops(&self) -> &[RowOp] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// The script that undoes `self`.
    pub fn inverse(&self) -> RowScript {
        RowScript {
            ops: self.ops.iter().rev().map(RowOp::inverse).collect(),
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &RowScript) -> RowScript {
        let mut ops = self.ops.clone();
        ops.extend(next.ops.iter().cloned());
        RowScript { ops }
    }
}

impl FromIterator<RowOp> for RowScript {
    fn from_iter<I: IntoIterator<Item = RowOp>>(iter: I) -> Self {
        RowScript {
            ops: iter.into_iter().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RrefResult {
    pub rref: Matrix,
    /// Maps the input matrix to `rref`.
    pub script: RowScript,
    pub rank: usize,
    /// 1-based, ascending.
    pub pivot_cols: Vec<usize>,
    /// 1-based, ascending; complement of `pivot_cols`.
    pub free_cols: Vec<usize>,
}

/// Gauss–Jordan reduction with topmost-nonzero pivoting. Each pivot row is
/// normalised as soon as it is found and the pivot column is cleared above
/// and below in the same pass, so the recorded script is deterministic.
pub fn rref(m: &Matrix) -> RrefResult {
    let mut work = m.clone();
    let mut script = RowScript::new();
    let mut pivot_cols = Vec::new();
    let mut free_cols = Vec::new();
    let mut record = |work: &mut Matrix, op: RowOp| {
        work.apply_op_in_place(&op)
            .expect("reducer only emits valid operations");
        script.push(op);
    };

    let mut r = 0;
    for c in 0..m.cols {
        let Some(p) = (r..m.rows).find(|&i| !work.get(i, c).is_zero()) else {
            free_cols.push(c + 1);
            continue;
        };
        if p != r {
            record(&mut work, RowOp::Swap(r + 1, p + 1));
        }
        let lead = work.get(r, c).clone();
        if !lead.is_one() {
            let inv = lead.inv().expect("pivot is nonzero");
            record(&mut work, RowOp::Scale(r + 1, inv));
        }
        for i in 0..m.rows {
            if i == r {
                continue;
            }
            let e = work.get(i, c).clone();
            if !e.is_zero() {
                record(
                    &mut work,
                    RowOp::AddMul {
                        target: i + 1,
                        coeff: -e,
                        source: r + 1,
                    },
                );
            }
        }
        pivot_cols.push(c + 1);
        r += 1;
        if r == m.rows {
            free_cols.extend(c + 2..=m.cols);
            break;
        }
    }

    RrefResult {
        rref: work,
        script,
        rank: pivot_cols.len(),
        pivot_cols,
        free_cols,
    }
}

/// Checks the four RREF conditions directly, without reducing anything.
pub fn is_rref(m: &Matrix) -> bool {
    let mut prev_lead: Option<usize> = None;
    let mut seen_zero_row = false;
    for i in 0..m.rows() {
        let lead = (0..m.cols()).find(|&j| !m.get(i, j).is_zero());
        match lead {
            None => seen_zero_row = true,
            Some(j) => {
                if seen_zero_row {
                    return false;
                }
                if !m.get(i, j).is_one() {
                    return false;
                }
                if prev_lead.is_some_and(|p| j <= p) {
                    return false;
                }
                if (0..m.rows()).any(|k| k != i && !m.get(k, j).is_zero()) {
                    return false;
                }
                prev_lead = Some(j);
            }
        }
    }
    true
}

/// `rref(a) == rref(b)`, after checking shape and field.
pub fn row_equivalent(a: &Matrix, b: &Matrix) -> Result<bool> {
    a.ensure_same_shape(b)?;
    Ok(rref(a).rref == rref(b).rref)
}

pub(crate) fn ensure_same_shape(a: &Matrix, b: &Matrix) -> Result<()> {
    a.ensure_same_shape(b)
}
