//! Null spaces read off the RREF, and their completion to a basis.

use crate::error::{Error, Result};
use crate::matrix::{ensure_same_shape, rref, Matrix, RrefResult};

/// Special solutions of `M v = 0`, one per free column, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis {
    pub vectors: Vec<Matrix>,
    pub source_rref: RrefResult,
}

impl KernelBasis {
    pub fn nullity(&self) -> usize {
        self.vectors.len()
    }

    /// Number of columns of the originating matrix.
    pub fn dim(&self) -> usize {
        self.source_rref.rref.cols()
    }
}

/// A kernel basis completed by the standard columns at pivot positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionBasis {
    pub z_vectors: Vec<Matrix>,
    pub kernel: KernelBasis,
}

impl ExtensionBasis {
    /// Columns `[z_1 … z_{n-ℓ}, k_1 … k_ℓ]`.
    pub fn basis_matrix(&self) -> Result<Matrix> {
        let cols: Vec<Matrix> = self
            .z_vectors
            .iter()
            .chain(&self.kernel.vectors)
            .cloned()
            .collect();
        Matrix::from_columns(&cols)
    }
}

pub fn null_space_basis(m: &Matrix) -> KernelBasis {
    kernel_from_rref(rref(m))
}

pub fn kernel_from_rref(r: RrefResult) -> KernelBasis {
    let field = r.rref.field();
    let n = r.rref.cols();
    let vectors = r
        .free_cols
        .iter()
        .map(|&f| {
            let mut entries = vec![field.zero(); n];
            entries[f - 1] = field.one();
            // Row `i` of the RREF reads x_{p_i} + Σ_free c·x_f = 0.
            for (row, &p) in r.pivot_cols.iter().enumerate() {
                entries[p - 1] = -r.rref.get(row, f - 1);
            }
            Matrix::new(field, n, 1, entries).expect("column has n entries")
        })
        .collect();
    KernelBasis {
        vectors,
        source_rref: r,
    }
}

pub fn extend_to_basis(k: &KernelBasis) -> Result<ExtensionBasis> {
    let n = k.dim();
    if k.nullity() == n {
        return Err(Error::FullKernel);
    }
    let field = k.source_rref.rref.field();
    let z_vectors = k
        .source_rref
        .pivot_cols
        .iter()
        .map(|&p| Matrix::unit_column(field, n, p))
        .collect();
    Ok(ExtensionBasis {
        z_vectors,
        kernel: k.clone(),
    })
}

/// Whether `a` and `b` have the same right null space.
pub fn same_null_space(a: &Matrix, b: &Matrix) -> Result<bool> {
    ensure_same_shape(a, b)?;
    let ka = null_space_basis(a);
    let kb = null_space_basis(b);
    if ka.nullity() != kb.nullity() {
        return Ok(false);
    }
    let annihilates = |m: &Matrix, k: &KernelBasis| -> Result<bool> {
        for v in &k.vectors {
            if !m.mul(v)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    };
    Ok(annihilates(a, &kb)? && annihilates(b, &ka)?)
}
