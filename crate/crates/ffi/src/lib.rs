//! C ABI for ribbondb.
//!
//! Every function returns a [`RibbonStatus`]; results come back through out
//! pointers. Diagrams are opaque [`RibbonDiagram`] handles released with
//! [`ribbon_diagram_free`]. Returned strings are owned by the caller and
//! released with [`ribbon_string_free`]. After a non-`Ok` status,
//! [`ribbon_last_error`] describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ribbondb::database::{builtin_references, builtin_table};
use ribbondb::error::{InvariantError, PdError, TangleError};
use ribbondb::invariants;
use ribbondb::pd::{parse_pd, PlanarDiagram};
use ribbondb::simplify::{certify_unlink, UnlinkCertificate};
use ribbondb::tangle::EndAssignment;
use ribbondb::verify::{verify_table, VerifyOptions};

/// Status codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RibbonStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    /// A closed diagram, a knot, or a valid cut set was required.
    ContractError = 4,
    Overflow = 5,
    UnknownKnot = 6,
    Internal = 7,
}

/// Opaque planar diagram.
pub struct RibbonDiagram(PlanarDiagram);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(RibbonStatus, String);

impl From<PdError> for Failure {
    fn from(e: PdError) -> Self {
        let status = match e {
            PdError::NotClosed(_) | PdError::Inconsistent { .. } => RibbonStatus::ContractError,
            _ => RibbonStatus::ParseError,
        };
        Failure(status, e.to_string())
    }
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::Pd(p) => p.into(),
            InvariantError::Overflow => Failure(RibbonStatus::Overflow, e.to_string()),
            _ => Failure(RibbonStatus::ContractError, e.to_string()),
        }
    }
}

impl From<TangleError> for Failure {
    fn from(e: TangleError) -> Self {
        match e {
            TangleError::Pd(p) => p.into(),
            _ => Failure(RibbonStatus::ContractError, e.to_string()),
        }
    }
}

fn guarded(f: impl FnOnce() -> Result<(), Failure>) -> RibbonStatus {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| {
        Err(Failure(
            RibbonStatus::Internal,
            "internal panic".to_string(),
        ))
    });
    match outcome {
        Ok(()) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            RibbonStatus::Ok
        }
        Err(Failure(status, message)) => {
            let message = CString::new(message.replace('\0', " ")).unwrap_or_default();
            LAST_ERROR.with(|e| *e.borrow_mut() = Some(message));
            status
        }
    }
}

fn null() -> Failure {
    Failure(
        RibbonStatus::NullPointer,
        "null pointer argument".to_string(),
    )
}

/// # Safety
/// `p` is null or a valid NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(RibbonStatus::InvalidUtf8, "string is not UTF-8".to_string()))
}

/// # Safety
/// `pd` is null or a live handle.
unsafe fn read_diagram<'a>(pd: *const RibbonDiagram) -> Result<&'a PlanarDiagram, Failure> {
    pd.as_ref().map(|d| &d.0).ok_or_else(null)
}

/// # Safety
/// `out` is null or writable.
unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

fn record(name: &str) -> Result<&'static ribbondb::database::TangleRecord, Failure> {
    builtin_table()
        .get(name)
        .ok_or_else(|| Failure(RibbonStatus::UnknownKnot, format!("unknown knot `{name}`")))
}

/// Message for the last failed call on this thread, or null. Free with
/// [`ribbon_string_free`].
#[no_mangle]
pub extern "C" fn ribbon_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |m| m.clone().into_raw())
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ribbon_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn ribbon_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses PD text such as `X_{1,4,2,5} X_{3,6,4,1} X_{5,2,6,3}`.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ribbon_diagram_parse(
    text: *const c_char,
    out: *mut *mut RibbonDiagram,
) -> RibbonStatus {
    guarded(|| {
        let pd = parse_pd(read_str(text)?)?;
        write_out(out, Box::into_raw(Box::new(RibbonDiagram(pd))))
    })
}

/// The table diagram of a knot such as `6_1`.
///
/// # Safety
/// `name` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ribbon_diagram_from_table(
    name: *const c_char,
    out: *mut *mut RibbonDiagram,
) -> RibbonStatus {
    guarded(|| {
        let pd = record(read_str(name)?)?.diagram()?;
        write_out(out, Box::into_raw(Box::new(RibbonDiagram(pd))))
    })
}

/// The `(β∘τ)` closure of a table knot's cut tangle.
///
/// # Safety
/// `name` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ribbon_unlink_candidate(
    name: *const c_char,
    out: *mut *mut RibbonDiagram,
) -> RibbonStatus {
    guarded(|| {
        let pd = record(read_str(name)?)?.unlink_candidate(EndAssignment::Forward)?;
        write_out(out, Box::into_raw(Box::new(RibbonDiagram(pd))))
    })
}

/// Releases a diagram handle.
///
/// # Safety
/// `pd` is null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ribbon_diagram_free(pd: *mut RibbonDiagram) {
    if !pd.is_null() {
        drop(Box::from_raw(pd));
    }
}

/// # Safety
/// `pd` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ribbon_diagram_crossings(
    pd: *const RibbonDiagram,
    out: *mut usize,
) -> RibbonStatus {
    guarded(|| write_out(out, read_diagram(pd)?.crossing_count()))
}

/// Canonical PD text. Free with [`ribbon_string_free`].
///
/// # Safety
/// `pd` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ribbon_diagram_to_string(
    pd: *const RibbonDiagram,
    out: *mut *mut c_char,
) -> RibbonStatus {
    guarded(|| write_out(out, owned_string(read_diagram(pd)?.to_string())))
}

/// Number of link components, crossingless circles included.
///
/// # Safety
/// `pd` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ribbon_components(
    pd: *const RibbonDiagram,
    out: *mut usize,
) -> RibbonStatus {
    guarded(|| write_out(out, read_diagram(pd)?.trace_components()?.count))
}

/// # Safety
/// `pd` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ribbon_writhe(pd: *const RibbonDiagram, out: *mut i64) -> RibbonStatus {
    guarded(|| write_out(out, invariants::writhe(read_diagram(pd)?)?))
}

/// Jones polynomial as text, e.g. `-t^-4 + t^-3 + t^-1`.
///
/// # Safety
/// `pd` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ribbon_jones(
    pd: *const RibbonDiagram,
    out: *mut *mut c_char,
) -> RibbonStatus {
    guarded(|| {
        write_out(
            out,
            owned_string(invariants::jones(read_diagram(pd)?)?.to_string()),
        )
    })
}

/// Normalized Alexander polynomial of a knot as text.
///
/// # Safety
/// `pd` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ribbon_alexander(
    pd: *const RibbonDiagram,
    out: *mut *mut c_char,
) -> RibbonStatus {
    guarded(|| {
        write_out(
            out,
            owned_string(invariants::alexander(read_diagram(pd)?)?.to_string()),
        )
    })
}

/// `|Δ(-1)|` of a knot.
///
/// # Safety
/// `pd` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ribbon_determinant(
    pd: *const RibbonDiagram,
    out: *mut u64,
) -> RibbonStatus {
    guarded(|| write_out(out, invariants::determinant(read_diagram(pd)?)?))
}

/// Greedy R1/R2 reduction. `*out_components` is the number of circles
/// reached, or 0 when the diagram was not reduced to crossingless circles.
///
/// # Safety
/// `pd` is a live handle; `out_components` is writable.
#[no_mangle]
pub unsafe extern "C" fn ribbon_certify_unlink(
    pd: *const RibbonDiagram,
    out_components: *mut usize,
) -> RibbonStatus {
    guarded(|| {
        let pd = read_diagram(pd)?;
        pd.require_closed()?;
        let n = match certify_unlink(pd) {
            UnlinkCertificate::Certified(n) => n,
            UnlinkCertificate::Unknown => 0,
        };
        write_out(out_components, n)
    })
}

/// Verification report as JSON for one knot, or the whole table when
/// `name` is null. `max_steps` of 0 selects the default budget.
///
/// # Safety
/// `name` is null or a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ribbon_verify_json(
    name: *const c_char,
    max_steps: usize,
    out: *mut *mut c_char,
) -> RibbonStatus {
    guarded(|| {
        let only = if name.is_null() {
            None
        } else {
            let n = read_str(name)?;
            record(n)?;
            Some(vec![n.to_string()])
        };
        let opts = VerifyOptions {
            max_steps: (max_steps > 0).then_some(max_steps),
        };
        let report = verify_table(builtin_table(), builtin_references(), only.as_deref(), opts);
        let text = serde_json::to_string(&report)
            .map_err(|e| Failure(RibbonStatus::Internal, e.to_string()))?;
        write_out(out, owned_string(text))
    })
}
