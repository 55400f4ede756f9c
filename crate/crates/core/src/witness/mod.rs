//! Nilpotent witnesses of row equivalence.
//!
//! For a singular `n × n` matrix `M` with nullity `ℓ`, take the special
//! solutions `k_1 … k_ℓ` of `M v = 0` and complete them with the standard
//! columns `z_1 … z_{n-ℓ}` at the pivot positions. The shift map
//!
//! ```text
//! z_1 → z_2 → … → z_{n-ℓ} → k_1 → 0,   k_j → 0
//! ```
//!
//! is nilpotent of index exactly `n - ℓ + 1` and has null space
//! `span{k_j}`. Equal null spaces force equal RREFs, so its matrix `N` is
//! row equivalent to `M`. [`witness`] builds `N` and a certificate that
//! checks all of this by direct computation.

mod catalog;
pub mod fixtures;
mod report;

pub use catalog::{catalog_3x3, rank2_form1, CatalogParams};
pub use report::parse_report;

use crate::error::{Error, Result};
use crate::kernel::{extend_to_basis, kernel_from_rref, same_null_space, ExtensionBasis, KernelBasis};
use crate::matrix::{rref, Matrix, RowScript};

pub use crate::matrix::row_equivalent;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NilpotentIndex {
    Nilpotent(usize),
    NotNilpotent,
}

/// Smallest `k ≥ 1` with `M^k = 0`.
///
/// The search stops at `k = n`: a nilpotent matrix has characteristic
/// polynomial `λ^n`, so by Cayley–Hamilton `M^n = 0` whenever `M` is
/// nilpotent at all. If `M^n ≠ 0` no larger power can vanish.
pub fn nilpotent_index(m: &Matrix) -> Result<NilpotentIndex> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let mut power = m.clone();
    for k in 1..=m.rows() {
        if power.is_zero() {
            return Ok(NilpotentIndex::Nilpotent(k));
        }
        if k < m.rows() {
            power = power.mul(m)?;
        }
    }
    Ok(NilpotentIndex::NotNilpotent)
}

/// The matrix of the shift map on an explicit chain `z` and kernel vectors
/// `kernel`: `N z_i = z_{i+1}`, `N z_last = kernel[0]`, `N k_j = 0`.
///
/// Computed as `C B⁻¹` where `B = [z | kernel]` and `C` holds the
/// prescribed images. The chain may be any basis completion, not just the
/// pivot columns chosen by [`extend_to_basis`].
pub fn shift_nilpotent(z: &[Matrix], kernel: &[Matrix]) -> Result<Matrix> {
    let first_kernel = kernel
        .first()
        .ok_or_else(|| Error::DimensionMismatch("shift map needs a kernel vector".into()))?;
    if z.is_empty() {
        return Err(Error::FullKernel);
    }
    let basis: Vec<Matrix> = z.iter().chain(kernel).cloned().collect();
    let b = Matrix::from_columns(&basis)?;
    if !b.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "{} basis vectors for dimension {}",
            b.cols(),
            b.rows()
        )));
    }
    let b_inv = b.inverse().map_err(|e| match e {
        Error::SingularMatrix => Error::SingularBasis,
        other => other,
    })?;
    let zero = Matrix::zeros(b.field(), b.rows(), 1);
    let images: Vec<Matrix> = z[1..]
        .iter()
        .chain(std::iter::once(first_kernel))
        .cloned()
        .chain(std::iter::repeat_n(zero.clone(), kernel.len()))
        .collect();
    let n = Matrix::from_columns(&images)?.mul(&b_inv)?;

    for (i, zi) in z.iter().enumerate() {
        let expected = z.get(i + 1).unwrap_or(first_kernel);
        if &n.mul(zi)? != expected {
            return Err(Error::CertificateViolation(format!(
                "shift map sends z_{} to the wrong image",
                i + 1
            )));
        }
    }
    for (j, kj) in kernel.iter().enumerate() {
        if n.mul(kj)? != zero {
            return Err(Error::CertificateViolation(format!(
                "shift map does not annihilate k_{}",
                j + 1
            )));
        }
    }
    Ok(n)
}

pub fn build_shift_nilpotent(basis: &ExtensionBasis) -> Result<Matrix> {
    shift_nilpotent(&basis.z_vectors, &basis.kernel.vectors)
}

/// `rref(M).script` followed by the inverse of `rref(N).script`.
pub fn witness_script(m: &Matrix, n: &Matrix) -> Result<RowScript> {
    crate::matrix::ensure_same_shape(m, n)?;
    let rm = rref(m);
    let rn = rref(n);
    if rm.rref != rn.rref {
        return Err(Error::NotRowEquivalent);
    }
    Ok(rm.script.then(&rn.script.inverse()))
}

/// Machine-checkable evidence that `nilpotent` is nilpotent of index
/// `n - nullity + 1` and row equivalent to `input`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCertificate {
    pub input: Matrix,
    pub nilpotent: Matrix,
    pub index: usize,
    pub nullity: usize,
    pub kernel: KernelBasis,
    pub rref_common: Matrix,
    pub script_m_to_n: RowScript,
}

impl WitnessCertificate {
    /// Re-checks every certificate invariant from scratch.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::CertificateViolation(msg));
        let n = self.input.rows();
        let nil = &self.nilpotent;

        if self.index == 0 || !nil.pow(self.index)?.is_zero() {
            return fail(format!("N^{} is not zero", self.index));
        }
        if self.index > 1 && nil.pow(self.index - 1)?.is_zero() {
            return fail(format!("N^{} is already zero", self.index - 1));
        }
        if self.nullity != self.kernel.nullity() || self.nullity > n {
            return fail("nullity disagrees with the kernel basis".into());
        }
        if self.index != n - self.nullity + 1 {
            return fail(format!(
                "index {} is not n - nullity + 1 = {}",
                self.index,
                n - self.nullity + 1
            ));
        }
        let rm = rref(&self.input);
        if rm.rref != self.rref_common || rref(nil).rref != self.rref_common {
            return fail("RREF of input and N do not both equal the common RREF".into());
        }
        if rm.free_cols.len() != self.nullity {
            return fail("nullity disagrees with the input's rank".into());
        }
        if &self.input.apply(&self.script_m_to_n)? != nil {
            return fail("script does not map input to N".into());
        }
        for v in &self.kernel.vectors {
            if !self.input.mul(v)?.is_zero() || !nil.mul(v)?.is_zero() {
                return fail("kernel vector not annihilated by both matrices".into());
            }
        }
        if !same_null_space(&self.input, nil)? {
            return fail("input and N have different null spaces".into());
        }
        Ok(())
    }
}

/// Builds and verifies a nilpotent matrix row equivalent to the singular
/// square matrix `m`.
pub fn witness(m: &Matrix) -> Result<WitnessCertificate> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let reduced = rref(m);
    if reduced.rank == n {
        return Err(Error::NonSingular { rank: reduced.rank });
    }
    let rref_common = reduced.rref.clone();
    let kernel = kernel_from_rref(reduced);
    let nullity = kernel.nullity();

    let nilpotent = if nullity == n {
        // M is the zero matrix; it is its own witness.
        Matrix::zeros(m.field(), n, n)
    } else {
        build_shift_nilpotent(&extend_to_basis(&kernel)?)?
    };
    let script_m_to_n = witness_script(m, &nilpotent)?;
    let index = match nilpotent_index(&nilpotent)? {
        NilpotentIndex::Nilpotent(k) => k,
        NilpotentIndex::NotNilpotent => {
            return Err(Error::CertificateViolation("shift map is not nilpotent".into()))
        }
    };
    let cert = WitnessCertificate {
        input: m.clone(),
        nilpotent,
        index,
        nullity,
        kernel,
        rref_common,
        script_m_to_n,
    };
    cert.verify()?;
    Ok(cert)
}
