//! C ABI over `sphnil`.
//!
//! Every fallible call returns an [`SphnilStatus`]; results go through out
//! pointers. Strings handed out by the library must be released with
//! [`sphnil_string_free`], handles with their matching `_free` function.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use sphnil::catalog::{self, Catalog, RunOptions, Runner, Status};
use sphnil::rootsys::RootSystem;
use sphnil::Error;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SphnilStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Catalog = 4,
    NotFound = 5,
    NotAbelian = 6,
    /// the report was produced but contains a FAIL section
    VerificationFailed = 7,
    Panic = 8,
}

/// Opaque catalog handle.
pub struct SphnilCatalog {
    inner: Catalog,
}

/// Opaque root system handle.
pub struct SphnilRootSystem {
    inner: RootSystem,
}

fn status_of(e: &Error) -> SphnilStatus {
    match e {
        Error::Catalog(m) if m.starts_with("unknown case") => SphnilStatus::NotFound,
        Error::Catalog(_) | Error::System(_) | Error::Gap(_) => SphnilStatus::Catalog,
        Error::NotAbelian { .. } => SphnilStatus::NotAbelian,
        Error::Index(_) => SphnilStatus::NotFound,
        _ => SphnilStatus::Parse,
    }
}

fn guard(f: impl FnOnce() -> SphnilStatus) -> SphnilStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(SphnilStatus::Panic)
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, SphnilStatus> {
    if p.is_null() {
        return Err(SphnilStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| SphnilStatus::InvalidUtf8)
}

fn into_c(s: String) -> *mut c_char {
    // interior NULs cannot occur in our reports, but stay safe
    CString::new(s.replace('\0', " ")).expect("no NUL").into_raw()
}

/// Static description of a status code. Never free the result.
#[no_mangle]
pub extern "C" fn sphnil_status_message(status: SphnilStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        SphnilStatus::Ok => b"ok\0",
        SphnilStatus::NullPointer => b"null pointer argument\0",
        SphnilStatus::InvalidUtf8 => b"argument is not valid UTF-8\0",
        SphnilStatus::Parse => b"parse error\0",
        SphnilStatus::Catalog => b"catalog error\0",
        SphnilStatus::NotFound => b"not found\0",
        SphnilStatus::NotAbelian => b"simple root does not give an abelian unipotent radical\0",
        SphnilStatus::VerificationFailed => b"verification failed\0",
        SphnilStatus::Panic => b"internal error\0",
    };
    CStr::from_bytes_with_nul(s).expect("NUL-terminated").as_ptr()
}

/// Load the catalog compiled into the library.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn sphnil_catalog_builtin(out: *mut *mut SphnilCatalog) -> SphnilStatus {
    guard(|| {
        if out.is_null() {
            return SphnilStatus::NullPointer;
        }
        match Catalog::builtin() {
            Ok(c) => {
                *out = Box::into_raw(Box::new(SphnilCatalog { inner: c }));
                SphnilStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Load and validate a catalog file.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sphnil_catalog_load(path: *const c_char, out: *mut *mut SphnilCatalog) -> SphnilStatus {
    guard(|| {
        if out.is_null() {
            return SphnilStatus::NullPointer;
        }
        let path = match str_arg(path) {
            Ok(p) => p,
            Err(s) => return s,
        };
        match catalog::load_catalog(path) {
            Ok(c) => {
                *out = Box::into_raw(Box::new(SphnilCatalog { inner: c }));
                SphnilStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Number of case records; 0 for a null handle.
///
/// # Safety
/// `cat` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn sphnil_catalog_case_count(cat: *const SphnilCatalog) -> usize {
    cat.as_ref().map_or(0, |c| c.inner.cases.len())
}

/// Release a catalog handle. Null is ignored.
///
/// # Safety
/// `cat` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sphnil_catalog_free(cat: *mut SphnilCatalog) {
    if !cat.is_null() {
        drop(Box::from_raw(cat));
    }
}

/// Run one case and return its report (text, or JSON when `structured`
/// is nonzero) in `*report`. Returns `VerificationFailed` when a section
/// failed; the report is still written.
///
/// # Safety
/// `cat` must be a live handle, `case_id` NUL-terminated, and `report`
/// valid for writes. Free the report with [`sphnil_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sphnil_run_case(
    cat: *const SphnilCatalog,
    case_id: *const c_char,
    structured: i32,
    report: *mut *mut c_char,
) -> SphnilStatus {
    guard(|| {
        let Some(cat) = cat.as_ref() else {
            return SphnilStatus::NullPointer;
        };
        if report.is_null() {
            return SphnilStatus::NullPointer;
        }
        let id = match str_arg(case_id) {
            Ok(s) => s,
            Err(s) => return s,
        };
        let mut r = Runner::new(&cat.inner, RunOptions::default());
        let rep = match r.run_id(id) {
            Ok(x) => x,
            Err(e) => return status_of(&e),
        };
        let failed = rep.count(Status::Fail) > 0;
        let text = if structured != 0 {
            serde_json::to_string_pretty(&rep).expect("report serializes")
        } else {
            catalog::render_text(std::slice::from_ref(&rep))
        };
        *report = into_c(text);
        if failed {
            SphnilStatus::VerificationFailed
        } else {
            SphnilStatus::Ok
        }
    })
}

/// Build the root system of a simple type such as `"E7"`.
///
/// # Safety
/// `ty` must be NUL-terminated; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sphnil_root_system_new(ty: *const c_char, out: *mut *mut SphnilRootSystem) -> SphnilStatus {
    guard(|| {
        if out.is_null() {
            return SphnilStatus::NullPointer;
        }
        let ty = match str_arg(ty) {
            Ok(s) => s,
            Err(s) => return s,
        };
        match RootSystem::from_str_type(ty) {
            Ok(rs) => {
                *out = Box::into_raw(Box::new(SphnilRootSystem { inner: rs }));
                SphnilStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Rank; 0 for a null handle.
///
/// # Safety
/// `rs` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sphnil_root_system_rank(rs: *const SphnilRootSystem) -> usize {
    rs.as_ref().map_or(0, |r| r.inner.rank())
}

/// Number of positive roots; 0 for a null handle.
///
/// # Safety
/// `rs` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sphnil_root_system_num_positive(rs: *const SphnilRootSystem) -> usize {
    rs.as_ref().map_or(0, |r| r.inner.num_positive())
}

/// Exponent m of the central character for simple root `root` (1-based).
///
/// # Safety
/// `rs` must be a live handle and `m` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sphnil_hermitian_exponent(
    rs: *const SphnilRootSystem,
    root: usize,
    m: *mut i64,
) -> SphnilStatus {
    guard(|| {
        let Some(rs) = rs.as_ref() else {
            return SphnilStatus::NullPointer;
        };
        if m.is_null() {
            return SphnilStatus::NullPointer;
        }
        if root == 0 {
            return SphnilStatus::NotFound;
        }
        match rs.inner.hermitian_exponent(root - 1) {
            Ok(v) => {
                *m = v;
                SphnilStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Release a root system handle. Null is ignored.
///
/// # Safety
/// `rs` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sphnil_root_system_free(rs: *mut SphnilRootSystem) {
    if !rs.is_null() {
        drop(Box::from_raw(rs));
    }
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library (for example
/// through [`sphnil_run_case`]) that has not been freed yet. Passing any
/// other pointer, or freeing twice, is undefined behaviour. Strings from
/// [`sphnil_status_message`] are static and must not be passed here.
#[no_mangle]
pub unsafe extern "C" fn sphnil_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
