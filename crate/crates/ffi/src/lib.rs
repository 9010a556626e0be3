//! C ABI for `ccdec`.
//!
//! Configurations and decompositions cross the boundary as opaque handles
//! owned by the caller and released with the matching `*_free` function.
//! Every fallible call returns a [`CcdecStatus`]; on failure the message is
//! available from [`ccdec_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ccdec::decomposition::{algorithm_c_with, MergeOrder};
use ccdec::{io, BuildOptions, CoherentConfiguration, ColorMatrix, Error, TensorDecomposition};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CcdecStatus {
    Ok = 0,
    NullPointer = 1,
    /// Malformed input: bad sizes, unparsable text, out-of-range index.
    InvalidInput = 2,
    /// The matrix violates C1, C2 or C3.
    Axiom = 3,
    NotThick = 4,
    NotAParabolic = 5,
    /// Any other library error.
    Failed = 6,
    /// A Rust panic was caught at the boundary.
    Panic = 7,
}

/// A validated coherent configuration.
pub struct CcdecConfiguration(CoherentConfiguration);

/// The maximal tensor decomposition of a configuration.
pub struct CcdecDecomposition(TensorDecomposition);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> CcdecStatus {
    match e {
        _ if e.axiom().is_some() => CcdecStatus::Axiom,
        Error::NotThick => CcdecStatus::NotThick,
        Error::NotAParabolic => CcdecStatus::NotAParabolic,
        Error::NotSquare { .. }
        | Error::InvalidDegree
        | Error::DegreeOverflow { .. }
        | Error::NonContiguousColors { .. }
        | Error::Parse { .. } => CcdecStatus::InvalidInput,
        _ => CcdecStatus::Failed,
    }
}

fn fail(status: CcdecStatus, message: impl Into<String>) -> CcdecStatus {
    set_error(message.into());
    status
}

/// Runs `f`, recording any error or panic for `ccdec_last_error`.
fn guard(f: impl FnOnce() -> Result<(), CcdecStatus>) -> CcdecStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CcdecStatus::Ok,
        Ok(Err(status)) => status,
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(CcdecStatus::Panic, message)
        }
    }
}

fn lift<T>(r: ccdec::Result<T>) -> Result<T, CcdecStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, CcdecStatus> {
    p.as_ref().ok_or_else(|| fail(CcdecStatus::NullPointer, "null pointer"))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), CcdecStatus> {
    if out.is_null() {
        return Err(fail(CcdecStatus::NullPointer, "null output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn copy_out<T: Copy>(src: &[T], buf: *mut T, len: usize) -> Result<(), CcdecStatus> {
    if buf.is_null() {
        return Err(fail(CcdecStatus::NullPointer, "null buffer"));
    }
    if len < src.len() {
        return Err(fail(CcdecStatus::InvalidInput, format!("buffer holds {len}, need {}", src.len())));
    }
    ptr::copy_nonoverlapping(src.as_ptr(), buf, src.len());
    Ok(())
}

/// Message for the last failed call on this thread, or null.
///
/// The pointer stays valid until the next `ccdec_*` call on this thread.
#[no_mangle]
pub extern "C" fn ccdec_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds and validates a configuration from `degree * degree` row-major colors.
///
/// # Safety
/// `cells` must point to `degree * degree` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ccdec_configuration_new(
    degree: usize,
    cells: *const u32,
    fast: bool,
    out: *mut *mut CcdecConfiguration,
) -> CcdecStatus {
    guard(|| {
        if cells.is_null() {
            return Err(fail(CcdecStatus::NullPointer, "null cells"));
        }
        let len = degree.checked_mul(degree).ok_or_else(|| fail(CcdecStatus::InvalidInput, "degree too large"))?;
        let cells = std::slice::from_raw_parts(cells, len).to_vec();
        let cc = lift(
            ColorMatrix::new(degree, cells).and_then(|m| CoherentConfiguration::from_matrix_with(m, options(fast))),
        )?;
        put(out, CcdecConfiguration(cc))
    })
}

/// Parses and validates a configuration in the text matrix format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ccdec_configuration_parse(
    text: *const c_char,
    fast: bool,
    out: *mut *mut CcdecConfiguration,
) -> CcdecStatus {
    guard(|| {
        if text.is_null() {
            return Err(fail(CcdecStatus::NullPointer, "null text"));
        }
        let text = CStr::from_ptr(text).to_str().map_err(|_| fail(CcdecStatus::InvalidInput, "text is not UTF-8"))?;
        let cc = lift(io::parse_ccm(text).and_then(|m| CoherentConfiguration::from_matrix_with(m, options(fast))))?;
        put(out, CcdecConfiguration(cc))
    })
}

fn options(fast: bool) -> BuildOptions {
    if fast {
        BuildOptions::default().fast()
    } else {
        BuildOptions::default()
    }
}

/// # Safety
/// `cc` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ccdec_configuration_free(cc: *mut CcdecConfiguration) {
    if !cc.is_null() {
        drop(Box::from_raw(cc));
    }
}

/// Degree of `cc`, or 0 for a null handle.
///
/// # Safety
/// `cc` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ccdec_configuration_degree(cc: *const CcdecConfiguration) -> usize {
    cc.as_ref().map_or(0, |c| c.0.degree())
}

/// Rank of `cc`, or 0 for a null handle.
///
/// # Safety
/// `cc` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ccdec_configuration_rank(cc: *const CcdecConfiguration) -> usize {
    cc.as_ref().map_or(0, |c| c.0.rank())
}

/// # Safety
/// `cc` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ccdec_configuration_is_thick(cc: *const CcdecConfiguration) -> bool {
    cc.as_ref().is_some_and(|c| c.0.is_thick())
}

/// Copies the `degree * degree` row-major color matrix into `buf`.
///
/// # Safety
/// `cc` must be a live handle and `buf` must have room for `len` values.
#[no_mangle]
pub unsafe extern "C" fn ccdec_configuration_cells(
    cc: *const CcdecConfiguration,
    buf: *mut u32,
    len: usize,
) -> CcdecStatus {
    guard(|| copy_out(deref(cc)?.0.matrix().cells(), buf, len))
}

/// Tensor product of `count` configurations.
///
/// # Safety
/// `parts` must point to `count` live handles and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ccdec_tensor(
    parts: *const *const CcdecConfiguration,
    count: usize,
    out: *mut *mut CcdecConfiguration,
) -> CcdecStatus {
    guard(|| {
        if parts.is_null() {
            return Err(fail(CcdecStatus::NullPointer, "null parts"));
        }
        let refs = std::slice::from_raw_parts(parts, count)
            .iter()
            .map(|&p| deref(p).map(|c| &c.0))
            .collect::<Result<Vec<_>, _>>()?;
        put(out, CcdecConfiguration(lift(CoherentConfiguration::tensor(&refs))?))
    })
}

/// Computes the maximal tensor decomposition of a thick configuration.
///
/// A nonzero `seed` randomizes the merge order; the result is the same.
///
/// # Safety
/// `cc` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ccdec_decompose(
    cc: *const CcdecConfiguration,
    seed: u64,
    out: *mut *mut CcdecDecomposition,
) -> CcdecStatus {
    guard(|| {
        let order = if seed == 0 { MergeOrder::Canonical } else { MergeOrder::Random(seed) };
        let d = lift(algorithm_c_with(&deref(cc)?.0, order))?;
        put(out, CcdecDecomposition(d))
    })
}

/// # Safety
/// `d` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ccdec_decomposition_free(d: *mut CcdecDecomposition) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Number of factors, or 0 for a null handle.
///
/// # Safety
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ccdec_decomposition_factor_count(d: *const CcdecDecomposition) -> usize {
    d.as_ref().map_or(0, |d| d.0.factors().len())
}

/// Copies factor `index` into a new configuration handle.
///
/// # Safety
/// `d` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ccdec_decomposition_factor(
    d: *const CcdecDecomposition,
    index: usize,
    out: *mut *mut CcdecConfiguration,
) -> CcdecStatus {
    guard(|| {
        let factors = deref(d)?.0.factors();
        let f = factors
            .get(index)
            .ok_or_else(|| fail(CcdecStatus::InvalidInput, format!("factor {index} of {}", factors.len())))?;
        put(out, CcdecConfiguration(f.clone()))
    })
}

/// Writes, for each source point, its index in the tensor of the factors.
///
/// # Safety
/// `d` must be a live handle and `buf` must have room for `len` values.
#[no_mangle]
pub unsafe extern "C" fn ccdec_decomposition_product_map(
    d: *const CcdecDecomposition,
    buf: *mut usize,
    len: usize,
) -> CcdecStatus {
    guard(|| copy_out(&deref(d)?.0.product_map(), buf, len))
}

/// Number of recursive calls made while decomposing.
///
/// # Safety
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ccdec_decomposition_recursion_calls(d: *const CcdecDecomposition) -> usize {
    d.as_ref().map_or(0, |d| d.0.trace().recursion_calls())
}
