//! C ABI over `cd_core`.
//!
//! Every fallible call returns a [`CdStatus`] and writes its result through an
//! out pointer. On failure the message is kept per thread and can be fetched
//! with [`cd_last_error`]. Handles are opaque and must be released with the
//! matching `*_free` function; strings returned by the library are released
//! with [`cd_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cd_core::catalog::{classify_orders, format_entry, parse_catalog_str};
use cd_core::constructions::{builtin_group, construct_primitive_group, Builtin};
use cd_core::lattice::{cd_lattice, is_cd_simple};
use cd_core::normal::has_property_a;
use cd_core::numtheory::wagstaff_primes;
use cd_core::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    CapExceeded = 4,
    NotFound = 5,
    Io = 6,
    Precondition = 7,
    Panic = 8,
}

/// A finite permutation group.
pub struct CdGroup(cd_core::Group);

/// The Chermak-Delgado lattice of a group, members sorted by order.
pub struct CdLattice(cd_core::lattice::CdLattice);

/// A parsed catalog of groups.
pub struct CdCatalog(cd_core::catalog::Catalog);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> CdStatus {
    match e {
        Error::Parse { .. } | Error::OrderMismatch { .. } | Error::DuplicateEntry { .. } => {
            CdStatus::Parse
        }
        Error::GroupTooLarge { .. } | Error::CapExceeded { .. } => CdStatus::CapExceeded,
        Error::Precondition(_) | Error::NotNormal | Error::NotASubgroup(_) => {
            CdStatus::Precondition
        }
        Error::Io(_) => CdStatus::Io,
        Error::InvalidPermutation(_) | Error::InvalidParameters(_) | Error::UnknownBuiltin(_) => {
            CdStatus::InvalidArgument
        }
    }
}

struct Failure(CdStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> CdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CdStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            CdStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(CdStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(CdStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(CdStatus::Panic, "string contains nul".into()))?;
    put(out, c.into_raw())
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a named group such as `symmetric:4`, `dihedral:5` or `elementary:2^3`.
///
/// # Safety
/// `name` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cd_group_builtin(name: *const c_char, out: *mut *mut CdGroup) -> CdStatus {
    guard(|| {
        let b: Builtin = str_arg(name, "name")?.parse()?;
        let g = builtin_group(b)?;
        put(out, Box::into_raw(Box::new(CdGroup(g))))
    })
}

/// Parses the first record of `text`, in catalog format.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cd_group_parse(text: *const c_char, out: *mut *mut CdGroup) -> CdStatus {
    guard(|| {
        let mut cat = parse_catalog_str(str_arg(text, "text")?)?;
        if cat.entries.is_empty() {
            return Err(Failure(CdStatus::NotFound, "no group record".into()));
        }
        let g = cat.entries.swap_remove(0).group;
        put(out, Box::into_raw(Box::new(CdGroup(g))))
    })
}

/// The affine group `[GF(p^n)] T H` with `|T| = q`, `|H| = p^r`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cd_group_construct(
    p: u64,
    q: u64,
    n: u32,
    r: u32,
    out: *mut *mut CdGroup,
) -> CdStatus {
    guard(|| {
        let a = construct_primitive_group(p, q, n, r)?;
        put(out, Box::into_raw(Box::new(CdGroup(a.group))))
    })
}

/// # Safety
/// `g` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn cd_group_free(g: *mut CdGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of elements; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cd_group_order(g: *const CdGroup) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cd_group_degree(g: *const CdGroup) -> usize {
    g.as_ref().map_or(0, |g| g.0.degree())
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cd_group_is_cd_simple(g: *const CdGroup, out: *mut bool) -> CdStatus {
    guard(|| put(out, is_cd_simple(&handle(g, "group")?.0)))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cd_group_has_property_a(g: *const CdGroup, out: *mut bool) -> CdStatus {
    guard(|| put(out, has_property_a(&handle(g, "group")?.0).holds))
}

/// The group as a catalog record with the given id.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable. Free the result with
/// `cd_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cd_group_format(
    g: *const CdGroup,
    index: usize,
    out: *mut *mut c_char,
) -> CdStatus {
    guard(|| {
        let g = &handle(g, "group")?.0;
        put_string(out, format_entry(g.order(), index, g))
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cd_lattice_compute(
    g: *const CdGroup,
    out: *mut *mut CdLattice,
) -> CdStatus {
    guard(|| {
        let l = cd_lattice(&handle(g, "group")?.0);
        put(out, Box::into_raw(Box::new(CdLattice(l))))
    })
}

/// # Safety
/// `l` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn cd_lattice_free(l: *mut CdLattice) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// Largest value of `|H| |C_G(H)|`; 0 for a null handle.
///
/// # Safety
/// `l` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cd_lattice_max_measure(l: *const CdLattice) -> u64 {
    l.as_ref().map_or(0, |l| l.0.max_measure)
}

/// # Safety
/// `l` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cd_lattice_len(l: *const CdLattice) -> usize {
    l.as_ref().map_or(0, |l| l.0.len())
}

/// Order of member `i`.
///
/// # Safety
/// `l` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cd_lattice_member_order(
    l: *const CdLattice,
    i: usize,
    out: *mut usize,
) -> CdStatus {
    guard(|| {
        let l = &handle(l, "lattice")?.0;
        let h = l
            .members
            .get(i)
            .ok_or_else(|| Failure(CdStatus::NotFound, format!("member {i} of {}", l.len())))?;
        put(out, h.order())
    })
}

/// Index of the centralizer of member `i` within the lattice.
///
/// # Safety
/// `l` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cd_lattice_member_dual(
    l: *const CdLattice,
    i: usize,
    out: *mut usize,
) -> CdStatus {
    guard(|| {
        let l = &handle(l, "lattice")?.0;
        let d = l
            .dual
            .get(i)
            .ok_or_else(|| Failure(CdStatus::NotFound, format!("member {i} of {}", l.len())))?;
        put(out, *d)
    })
}

/// The bundled catalog of all groups of order 1 to 50.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cd_catalog_bundled(out: *mut *mut CdCatalog) -> CdStatus {
    guard(|| {
        put(
            out,
            Box::into_raw(Box::new(CdCatalog(cd_core::catalog::Catalog::bundled()))),
        )
    })
}

/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cd_catalog_parse(
    text: *const c_char,
    out: *mut *mut CdCatalog,
) -> CdStatus {
    guard(|| {
        let cat = parse_catalog_str(str_arg(text, "text")?)?;
        put(out, Box::into_raw(Box::new(CdCatalog(cat))))
    })
}

/// # Safety
/// `c` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn cd_catalog_free(c: *mut CdCatalog) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cd_catalog_len(c: *const CdCatalog) -> usize {
    c.as_ref().map_or(0, |c| c.0.entries.len())
}

/// A new group handle for entry `order.index`, independent of the catalog.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cd_catalog_group(
    c: *const CdCatalog,
    order: usize,
    index: usize,
    out: *mut *mut CdGroup,
) -> CdStatus {
    guard(|| {
        let e = handle(c, "catalog")?.0.get(order, index).ok_or_else(|| {
            Failure(
                CdStatus::NotFound,
                format!("no catalog entry {order}.{index}"),
            )
        })?;
        let g = cd_core::Group::generate(e.degree, e.generators.clone())?;
        put(out, Box::into_raw(Box::new(CdGroup(g))))
    })
}

/// JSON classification report for catalog orders `lo..=hi`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable. Free the result with
/// `cd_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cd_classify_json(
    c: *const CdCatalog,
    lo: usize,
    hi: usize,
    out: *mut *mut c_char,
) -> CdStatus {
    guard(|| {
        let cat = &handle(c, "catalog")?.0;
        if lo == 0 || lo > hi {
            return Err(Failure(
                CdStatus::InvalidArgument,
                format!("bad order range {lo}..{hi}"),
            ));
        }
        put_string(out, classify_orders(cat, lo..=hi).to_json())
    })
}

/// Writes up to `cap` primes `p < limit` with `(p^p - 1)/(p - 1)` prime into
/// `buf` and their total count into `count`.
///
/// # Safety
/// `buf` must have room for `cap` values (it may be null when `cap` is 0);
/// `count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cd_wagstaff_primes(
    limit: u64,
    buf: *mut u64,
    cap: usize,
    count: *mut usize,
) -> CdStatus {
    guard(|| {
        let ps = wagstaff_primes(limit)?;
        if cap > 0 && buf.is_null() {
            return Err(null("buf"));
        }
        for (i, &p) in ps.iter().take(cap).enumerate() {
            buf.add(i).write(p);
        }
        put(count, ps.len())
    })
}
