//! C ABI over `nilpotent-rref`.
//!
//! Matrices and certificates are opaque heap handles owned by the caller and
//! released with the matching `*_free` function. Every fallible call returns
//! an [`NrStatus`]; on failure [`nr_last_error`] describes what went wrong.
//! Strings handed out by the library are released with [`nr_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use nilpotent_rref::format::{parse_matrix, parse_script};
use nilpotent_rref::witness::{row_equivalent, witness};
use nilpotent_rref::{nilpotent_index, null_space_basis, rref, Error, Matrix, NilpotentIndex, WitnessCertificate};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NrStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Input text was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Matrix or script text was malformed, or named an invalid field.
    Parse = 3,
    /// Shapes or fields of the operands do not fit together.
    DimensionMismatch = 4,
    /// The operation needs a square matrix.
    NotSquare = 5,
    /// A witness was requested for a nonsingular matrix.
    NonSingular = 6,
    /// A row index or kernel vector index is out of range.
    OutOfRange = 7,
    /// Any other domain error reported by the library.
    Domain = 8,
    /// The library panicked; this is a bug.
    Internal = 9,
}

/// Opaque matrix over Q or GF(p).
pub struct NrMatrix(Matrix);

/// Opaque witness certificate.
pub struct NrCertificate(WitnessCertificate);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> NrStatus {
    match err {
        Error::Parse { .. } | Error::InvalidModulus(_) | Error::DivisionByZero => NrStatus::Parse,
        Error::FieldMismatch(..) | Error::DimensionMismatch(_) => NrStatus::DimensionMismatch,
        Error::NotSquare { .. } => NrStatus::NotSquare,
        Error::NonSingular { .. } => NrStatus::NonSingular,
        Error::IndexOutOfRange { .. } => NrStatus::OutOfRange,
        _ => NrStatus::Domain,
    }
}

struct Fail(NrStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null() -> Fail {
    Fail(NrStatus::NullArgument, "null pointer argument".into())
}

/// Runs `body`, converting errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> NrStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => NrStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            NrStatus::Internal
        }
    }
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(NrStatus::InvalidUtf8, "input is not valid UTF-8".into()))
}

unsafe fn matrix<'a>(m: *const NrMatrix) -> Result<&'a Matrix, Fail> {
    m.as_ref().map(|m| &m.0).ok_or_else(null)
}

unsafe fn certificate<'a>(c: *const NrCertificate) -> Result<&'a WitnessCertificate, Fail> {
    c.as_ref().map(|c| &c.0).ok_or_else(null)
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn put_matrix(out: *mut *mut NrMatrix, m: Matrix) -> Result<(), Fail> {
    put(out, Box::into_raw(Box::new(NrMatrix(m))))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(NrStatus::Internal, "interior NUL".into()))?;
    put(out, c.into_raw())
}

/// Message for the last failed call on this thread, or null if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn nr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn nr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses one matrix in the text format (`Q` or `GF p`, then `rows cols`,
/// then the rows).
#[no_mangle]
pub unsafe extern "C" fn nr_matrix_parse(src: *const c_char, out: *mut *mut NrMatrix) -> NrStatus {
    guard(|| {
        let m = parse_matrix(text(src)?)?;
        put_matrix(out, m)
    })
}

/// Releases a matrix. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn nr_matrix_free(m: *mut NrMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Row count, or 0 for null.
#[no_mangle]
pub unsafe extern "C" fn nr_matrix_rows(m: *const NrMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.rows())
}

/// Column count, or 0 for null.
#[no_mangle]
pub unsafe extern "C" fn nr_matrix_cols(m: *const NrMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.cols())
}

/// Writes the matrix in the text format. Free with [`nr_string_free`].
#[no_mangle]
pub unsafe extern "C" fn nr_matrix_to_string(m: *const NrMatrix, out: *mut *mut c_char) -> NrStatus {
    guard(|| put_string(out, matrix(m)?.to_string()))
}

/// Reduced row echelon form and rank. `out_rank` may be null.
#[no_mangle]
pub unsafe extern "C" fn nr_matrix_rref(
    m: *const NrMatrix,
    out: *mut *mut NrMatrix,
    out_rank: *mut usize,
) -> NrStatus {
    guard(|| {
        let r = rref(matrix(m)?);
        if !out_rank.is_null() {
            out_rank.write(r.rank);
        }
        put_matrix(out, r.rref)
    })
}

/// Dimension of the null space.
#[no_mangle]
pub unsafe extern "C" fn nr_matrix_nullity(m: *const NrMatrix, out: *mut usize) -> NrStatus {
    guard(|| put(out, null_space_basis(matrix(m)?).nullity()))
}

/// The `k`-th (0-based) special solution of the null space, as a column.
#[no_mangle]
pub unsafe extern "C" fn nr_matrix_kernel_vector(
    m: *const NrMatrix,
    k: usize,
    out: *mut *mut NrMatrix,
) -> NrStatus {
    guard(|| {
        let basis = null_space_basis(matrix(m)?);
        let nullity = basis.nullity();
        let v = basis.vectors.into_iter().nth(k).ok_or_else(|| {
            Fail(NrStatus::OutOfRange, format!("kernel vector {k} requested, nullity is {nullity}"))
        })?;
        put_matrix(out, v)
    })
}

/// Nilpotent index of a square matrix; writes 0 when it is not nilpotent.
#[no_mangle]
pub unsafe extern "C" fn nr_matrix_nilpotent_index(m: *const NrMatrix, out: *mut usize) -> NrStatus {
    guard(|| {
        let k = match nilpotent_index(matrix(m)?)? {
            NilpotentIndex::Nilpotent(k) => k,
            NilpotentIndex::NotNilpotent => 0,
        };
        put(out, k)
    })
}

/// Whether two matrices of the same shape and field are row equivalent.
#[no_mangle]
pub unsafe extern "C" fn nr_matrix_row_equivalent(
    a: *const NrMatrix,
    b: *const NrMatrix,
    out: *mut bool,
) -> NrStatus {
    guard(|| put(out, row_equivalent(matrix(a)?, matrix(b)?)?))
}

/// Applies a row script (`swap i j`, `scale i c`, `addmul i c j`, one per
/// line, rows 1-based) and returns the result as a new matrix.
#[no_mangle]
pub unsafe extern "C" fn nr_matrix_apply_script(
    m: *const NrMatrix,
    script: *const c_char,
    out: *mut *mut NrMatrix,
) -> NrStatus {
    guard(|| {
        let m = matrix(m)?;
        let s = parse_script(text(script)?, m.field())?;
        put_matrix(out, m.apply(&s)?)
    })
}

/// Builds and verifies a nilpotent matrix row equivalent to a singular
/// square matrix.
#[no_mangle]
pub unsafe extern "C" fn nr_witness(m: *const NrMatrix, out: *mut *mut NrCertificate) -> NrStatus {
    guard(|| {
        let cert = witness(matrix(m)?)?;
        put(out, Box::into_raw(Box::new(NrCertificate(cert))))
    })
}

/// Releases a certificate. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn nr_certificate_free(c: *mut NrCertificate) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Nilpotent index recorded in the certificate, or 0 for null.
#[no_mangle]
pub unsafe extern "C" fn nr_certificate_index(c: *const NrCertificate) -> usize {
    c.as_ref().map_or(0, |c| c.0.index)
}

/// Nullity recorded in the certificate, or 0 for null.
#[no_mangle]
pub unsafe extern "C" fn nr_certificate_nullity(c: *const NrCertificate) -> usize {
    c.as_ref().map_or(0, |c| c.0.nullity)
}

/// A copy of the nilpotent matrix.
#[no_mangle]
pub unsafe extern "C" fn nr_certificate_nilpotent(c: *const NrCertificate, out: *mut *mut NrMatrix) -> NrStatus {
    guard(|| put_matrix(out, certificate(c)?.nilpotent.clone()))
}

/// The row script taking the input to the nilpotent matrix.
#[no_mangle]
pub unsafe extern "C" fn nr_certificate_script(c: *const NrCertificate, out: *mut *mut c_char) -> NrStatus {
    guard(|| put_string(out, certificate(c)?.script_m_to_n.to_string()))
}

/// The full certificate report, as printed by `nilrref witness`.
#[no_mangle]
pub unsafe extern "C" fn nr_certificate_report(c: *const NrCertificate, out: *mut *mut c_char) -> NrStatus {
    guard(|| put_string(out, certificate(c)?.to_string()))
}
