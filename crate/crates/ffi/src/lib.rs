//! C ABI over `orbitlattice`.
//!
//! Objects cross the boundary as opaque handles that the caller owns and
//! releases with the matching `*_free` function. Every fallible function
//! returns an [`OlStatus`] and writes its result through an out pointer; on
//! failure a message is kept per thread and can be fetched with
//! [`ol_last_error`]. Strings returned to the caller are freed with
//! [`ol_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use orbitlattice::{
    intersect, intersect_tableaux, leq, orbit_dim, rank_matrix, sigma_of_tableau, tableau_of_sigma, validate,
    Error, IntersectionReport, Involution, TwoColumnTableau, UpperMatrix,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    OutOfRange = 5,
    Panic = 6,
}

/// An involution in canonical cycle form.
pub struct OlInvolution(Involution);

/// A two-column standard tableau.
pub struct OlTableau(TwoColumnTableau);

/// An upper-triangular rank matrix.
pub struct OlRankMatrix(UpperMatrix);

/// The decomposition of an intersection of two closures.
pub struct OlReport(IntersectionReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> OlStatus {
    match e {
        Error::Parse(_) => OlStatus::Parse,
        Error::OutOfRange(_) => OlStatus::OutOfRange,
        _ => OlStatus::Domain,
    }
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), (OlStatus, String)>) -> OlStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => OlStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".to_string());
            OlStatus::Panic
        }
    }
}

fn lib(e: Error) -> (OlStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(name: &str) -> (OlStatus, String) {
    (OlStatus::NullPointer, format!("{name} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, (OlStatus, String)> {
    if p.is_null() {
        return Err(null(name));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (OlStatus::InvalidUtf8, format!("{name} is not valid UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, name: &str) -> Result<&'a T, (OlStatus, String)> {
    p.as_ref().ok_or_else(|| null(name))
}

unsafe fn write<T>(out: *mut T, value: T, name: &str) -> Result<(), (OlStatus, String)> {
    if out.is_null() {
        return Err(null(name));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_box<T>(out: *mut *mut T, value: T) -> Result<(), (OlStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (OlStatus, String)> {
    let c = CString::new(s).map_err(|_| (OlStatus::Domain, "string contains a nul byte".to_string()))?;
    write(out, c.into_raw(), "out")
}

/// The message for the last failed call on this thread, or NULL. The
/// returned string is owned by the caller.
#[no_mangle]
pub extern "C" fn ol_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |m| m.clone().into_raw()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ol_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `"(1,3)(2,5)"` or `"()"`. An `n` of 0 takes the largest entry.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ol_involution_parse(text: *const c_char, n: usize, out: *mut *mut OlInvolution) -> OlStatus {
    guard(|| {
        let text = str_arg(text, "text")?;
        let sigma = Involution::parse(text, (n > 0).then_some(n)).map_err(lib)?;
        write_box(out, OlInvolution(sigma))
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ol_involution_free(p: *mut OlInvolution) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Ambient size `n`, or 0 for a NULL handle.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ol_involution_size(p: *const OlInvolution) -> usize {
    p.as_ref().map_or(0, |s| s.0.n())
}

/// Number of 2-cycles, or 0 for a NULL handle.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ol_involution_rank(p: *const OlInvolution) -> usize {
    p.as_ref().map_or(0, |s| s.0.rank())
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ol_involution_to_string(p: *const OlInvolution, out: *mut *mut c_char) -> OlStatus {
    guard(|| write_string(out, handle(p, "sigma")?.0.to_string()))
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ol_involution_orbit_dim(p: *const OlInvolution, out: *mut usize) -> OlStatus {
    guard(|| write(out, orbit_dim(&handle(p, "sigma")?.0), "out"))
}

/// Parses `"1,3,5|2,4"` (first column, then second).
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ol_tableau_parse(text: *const c_char, out: *mut *mut OlTableau) -> OlStatus {
    guard(|| {
        let t = str_arg(text, "text")?.parse::<TwoColumnTableau>().map_err(lib)?;
        write_box(out, OlTableau(t))
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ol_tableau_free(p: *mut OlTableau) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ol_tableau_to_string(p: *const OlTableau, out: *mut *mut c_char) -> OlStatus {
    guard(|| write_string(out, handle(p, "tableau")?.0.to_string()))
}

/// The involution attached to a tableau.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ol_tableau_sigma(p: *const OlTableau, out: *mut *mut OlInvolution) -> OlStatus {
    guard(|| write_box(out, OlInvolution(sigma_of_tableau(&handle(p, "tableau")?.0))))
}

/// The tableau whose involution is `sigma`; fails with `OL_STATUS_DOMAIN`
/// when there is none.
///
/// # Safety
/// `sigma` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ol_tableau_of_sigma(sigma: *const OlInvolution, out: *mut *mut OlTableau) -> OlStatus {
    guard(|| {
        let t = tableau_of_sigma(&handle(sigma, "sigma")?.0).map_err(lib)?;
        write_box(out, OlTableau(t))
    })
}

/// # Safety
/// `sigma` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ol_rank_matrix(sigma: *const OlInvolution, out: *mut *mut OlRankMatrix) -> OlStatus {
    guard(|| write_box(out, OlRankMatrix(rank_matrix(&handle(sigma, "sigma")?.0))))
}

/// Parses rows separated by `;` and entries by `,`.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ol_rank_matrix_parse(text: *const c_char, out: *mut *mut OlRankMatrix) -> OlStatus {
    guard(|| {
        let m = UpperMatrix::parse(str_arg(text, "text")?).map_err(lib)?;
        write_box(out, OlRankMatrix(m))
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ol_rank_matrix_free(p: *mut OlRankMatrix) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ol_rank_matrix_size(p: *const OlRankMatrix) -> usize {
    p.as_ref().map_or(0, |m| m.0.size())
}

/// Entry `(i, j)`, 1-based.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ol_rank_matrix_get(p: *const OlRankMatrix, i: usize, j: usize, out: *mut u32) -> OlStatus {
    guard(|| {
        let m = &handle(p, "matrix")?.0;
        let n = m.size();
        if i == 0 || j == 0 || i > n || j > n {
            return Err((OlStatus::OutOfRange, format!("({i},{j}) outside a {n}x{n} matrix")));
        }
        write(out, m.at(i, j), "out")
    })
}

/// Whether the matrix is the rank matrix of some involution.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ol_rank_matrix_validate(p: *const OlRankMatrix, out: *mut bool) -> OlStatus {
    guard(|| write(out, validate(&handle(p, "matrix")?.0).valid, "out"))
}

/// Entrywise `a <= b`.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ol_rank_matrix_leq(a: *const OlRankMatrix, b: *const OlRankMatrix, out: *mut bool) -> OlStatus {
    guard(|| {
        let r = leq(&handle(a, "a")?.0, &handle(b, "b")?.0).map_err(lib)?;
        write(out, r, "out")
    })
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ol_intersect(a: *const OlInvolution, b: *const OlInvolution, out: *mut *mut OlReport) -> OlStatus {
    guard(|| {
        let r = intersect(&handle(a, "a")?.0, &handle(b, "b")?.0).map_err(lib)?;
        write_box(out, OlReport(r))
    })
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ol_intersect_tableaux(a: *const OlTableau, b: *const OlTableau, out: *mut *mut OlReport) -> OlStatus {
    guard(|| {
        let r = intersect_tableaux(&handle(a, "a")?.0, &handle(b, "b")?.0).map_err(lib)?;
        write_box(out, OlReport(r))
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ol_report_free(p: *mut OlReport) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ol_report_irreducible(p: *const OlReport) -> bool {
    p.as_ref().is_some_and(|r| r.0.irreducible)
}

/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ol_report_component_count(p: *const OlReport) -> usize {
    p.as_ref().map_or(0, |r| r.0.components.len())
}

/// Smallest codimension over the components.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ol_report_codim(p: *const OlReport) -> usize {
    p.as_ref().map_or(0, |r| r.0.codim())
}

/// The involution whose orbit is dense in component `index`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ol_report_component(p: *const OlReport, index: usize, out: *mut *mut OlInvolution) -> OlStatus {
    guard(|| {
        let r = &handle(p, "report")?.0;
        let c = r
            .components
            .get(index)
            .ok_or_else(|| (OlStatus::OutOfRange, format!("component {index} of {}", r.components.len())))?;
        write_box(out, OlInvolution(c.sigma(r.n).map_err(lib)?))
    })
}

/// Dimension of component `index`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ol_report_component_dim(p: *const OlReport, index: usize, out: *mut usize) -> OlStatus {
    guard(|| {
        let r = &handle(p, "report")?.0;
        let c = r
            .components
            .get(index)
            .ok_or_else(|| (OlStatus::OutOfRange, format!("component {index} of {}", r.components.len())))?;
        write(out, c.dim, "out")
    })
}

/// The report as the JSON document the command line prints.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ol_report_to_json(p: *const OlReport, out: *mut *mut c_char) -> OlStatus {
    guard(|| {
        let json = serde_json::to_string_pretty(&handle(p, "report")?.0)
            .map_err(|e| (OlStatus::Domain, e.to_string()))?;
        write_string(out, json)
    })
}

/// Library version, statically allocated.
#[no_mangle]
pub extern "C" fn ol_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
