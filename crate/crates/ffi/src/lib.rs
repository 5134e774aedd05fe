//! C ABI over `shalika-core`.
//!
//! Every function returns a [`ShalikaStatus`]; on failure the message is
//! available from [`shalika_last_error`] on the same thread. Handles are
//! opaque and must be released with their `_free` function. Strings
//! returned through out-pointers are owned by the caller and released with
//! [`shalika_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use shalika_core::engine::{epsilon_pi, shalika_decision, ShalikaSpec, Verdict};
use shalika_core::exact::Rat;
use shalika_core::io::{classified_tsv, parse_module, ModuleInput, PeriodRecord};
use shalika_core::langlands::{is_symplectic_eta, langlands_param};
use shalika_core::orbits::{orbit_table, ClassTag, Composition, OrbitDescriptor, ParabolicDatum};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShalikaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    Precondition = 4,
    OutOfRange = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShalikaVerdict {
    Exists = 0,
    NotExists = 1,
    NecessaryOnlyNotGeneric = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShalikaOrbitClass {
    PsiVanishing = 0,
    Matching = 1,
    Unmatching = 2,
}

/// A validated module file: standard module, `eta` and optional `psi_a`.
pub struct ShalikaModule {
    input: ModuleInput,
}

/// A classified orbit table for one composition.
pub struct ShalikaOrbitTable {
    rows: Vec<OrbitDescriptor>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(ShalikaStatus, String);

impl Failure {
    fn input(e: impl std::fmt::Display) -> Self {
        Failure(ShalikaStatus::InvalidInput, e.to_string())
    }

    fn precondition(e: impl std::fmt::Display) -> Self {
        Failure(ShalikaStatus::Precondition, e.to_string())
    }
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> ShalikaStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ShalikaStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".to_string());
            ShalikaStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(
        ShalikaStatus::NullPointer,
        "null pointer argument".to_string(),
    )
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        Failure(
            ShalikaStatus::InvalidUtf8,
            "string is not UTF-8".to_string(),
        )
    })
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(Failure::input)?;
    write_out(out, c.into_raw())
}

unsafe fn module_ref<'a>(m: *const ShalikaModule) -> Result<&'a ShalikaModule, Failure> {
    m.as_ref().ok_or_else(null)
}

unsafe fn table_ref<'a>(t: *const ShalikaOrbitTable) -> Result<&'a ShalikaOrbitTable, Failure> {
    t.as_ref().ok_or_else(null)
}

fn spec_of(m: &ShalikaModule) -> Result<ShalikaSpec, Failure> {
    match m.input.psi_a {
        Some(a) => ShalikaSpec::new(m.input.eta, a).map_err(Failure::input),
        None => Ok(ShalikaSpec::with_unit_psi(m.input.eta)),
    }
}

/// Message of the last failed call on this thread, or null. Valid until
/// the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn shalika_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses a module file. On success `*out` receives a new handle.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn shalika_module_from_json(
    json: *const c_char,
    out: *mut *mut ShalikaModule,
) -> ShalikaStatus {
    guard(|| {
        let text = read_str(json)?;
        let input = parse_module(text).map_err(Failure::input)?;
        write_out(out, Box::into_raw(Box::new(ShalikaModule { input })))
    })
}

/// # Safety
/// `m` must be null or a handle from [`shalika_module_from_json`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn shalika_module_free(m: *mut ShalikaModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Whether the module's L-parameter is `eta`-symplectic.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn shalika_module_is_symplectic(
    m: *const ShalikaModule,
    out: *mut bool,
) -> ShalikaStatus {
    guard(|| {
        let m = module_ref(m)?;
        let phi = langlands_param(&m.input.module).map_err(Failure::precondition)?;
        let d = is_symplectic_eta(&phi, &m.input.eta).map_err(Failure::precondition)?;
        write_out(out, d.symplectic)
    })
}

/// Period verdict and the number of compatible matching orbits.
///
/// # Safety
/// `m` must be a live handle; `verdict` and `compatible_orbits` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn shalika_module_period(
    m: *const ShalikaModule,
    assume_generic: bool,
    verdict: *mut ShalikaVerdict,
    compatible_orbits: *mut usize,
) -> ShalikaStatus {
    guard(|| {
        let m = module_ref(m)?;
        if verdict.is_null() || compatible_orbits.is_null() {
            return Err(null());
        }
        let report = shalika_decision(&m.input.module, &spec_of(m)?, assume_generic)
            .map_err(Failure::precondition)?;
        let v = match report.verdict {
            Verdict::Exists => ShalikaVerdict::Exists,
            Verdict::NotExists => ShalikaVerdict::NotExists,
            Verdict::NecessaryOnlyNotGeneric => ShalikaVerdict::NecessaryOnlyNotGeneric,
        };
        write_out(verdict, v)?;
        write_out(compatible_orbits, report.compatible_orbits)
    })
}

/// The full period report as JSON, in the command line's format.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn shalika_module_period_json(
    m: *const ShalikaModule,
    assume_generic: bool,
    out: *mut *mut c_char,
) -> ShalikaStatus {
    guard(|| {
        let m = module_ref(m)?;
        let report = shalika_decision(&m.input.module, &spec_of(m)?, assume_generic)
            .map_err(Failure::precondition)?;
        let text =
            serde_json::to_string_pretty(&PeriodRecord::from(&report)).map_err(Failure::input)?;
        write_string(out, text)
    })
}

/// The restriction sign for `psi_a` with `a = a_num / a_den`.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn shalika_module_epsilon(
    m: *const ShalikaModule,
    a_num: i64,
    a_den: i64,
    out: *mut i8,
) -> ShalikaStatus {
    guard(|| {
        let m = module_ref(m)?;
        let a = Rat::new(a_num, a_den).map_err(Failure::input)?;
        let spec = ShalikaSpec::new(m.input.eta, a).map_err(Failure::input)?;
        let r = epsilon_pi(&m.input.module, &spec).map_err(Failure::precondition)?;
        write_out(out, r.epsilon)
    })
}

/// Builds the classified orbit table of a composition such as `"2+2+2"`.
///
/// # Safety
/// `composition` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn shalika_orbit_table_new(
    composition: *const c_char,
    out: *mut *mut ShalikaOrbitTable,
) -> ShalikaStatus {
    guard(|| {
        let comp: Composition = read_str(composition)?.parse().map_err(Failure::input)?;
        let rows = orbit_table(&ParabolicDatum::new(comp));
        write_out(out, Box::into_raw(Box::new(ShalikaOrbitTable { rows })))
    })
}

/// Number of rows, or 0 for a null handle.
///
/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn shalika_orbit_table_len(t: *const ShalikaOrbitTable) -> usize {
    t.as_ref().map_or(0, |t| t.rows.len())
}

fn row(t: &ShalikaOrbitTable, index: usize) -> Result<&OrbitDescriptor, Failure> {
    t.rows.get(index).ok_or_else(|| {
        Failure(
            ShalikaStatus::OutOfRange,
            format!("row {index} out of range for {} rows", t.rows.len()),
        )
    })
}

/// One-line image of the representative in row `index`, e.g. `"3,4,1,2"`.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn shalika_orbit_table_omega(
    t: *const ShalikaOrbitTable,
    index: usize,
    out: *mut *mut c_char,
) -> ShalikaStatus {
    guard(|| {
        let d = row(table_ref(t)?, index)?;
        write_string(out, d.omega.to_string())
    })
}

/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn shalika_orbit_table_class(
    t: *const ShalikaOrbitTable,
    index: usize,
    out: *mut ShalikaOrbitClass,
) -> ShalikaStatus {
    guard(|| {
        let d = row(table_ref(t)?, index)?;
        let c = match d.class {
            ClassTag::PsiVanishing => ShalikaOrbitClass::PsiVanishing,
            ClassTag::Matching => ShalikaOrbitClass::Matching,
            ClassTag::Unmatching => ShalikaOrbitClass::Unmatching,
        };
        write_out(out, c)
    })
}

/// The table as TSV, identical to `shalika orbits COMP --classify --format tsv`.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn shalika_orbit_table_tsv(
    t: *const ShalikaOrbitTable,
    out: *mut *mut c_char,
) -> ShalikaStatus {
    guard(|| write_string(out, classified_tsv(&table_ref(t)?.rows)))
}

/// # Safety
/// `t` must be null or a handle from [`shalika_orbit_table_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn shalika_orbit_table_free(t: *mut ShalikaOrbitTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn shalika_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
