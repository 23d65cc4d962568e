//! C ABI for the rankone library.
//!
//! Spaces are opaque handles created with [`rankone_space_new`] and
//! released with [`rankone_space_free`]. Every function returns a
//! [`RankoneStatus`]; results travel through out-pointers. All functions
//! tolerate null pointers (reporting `NullPointer`) and never unwind
//! across the boundary.
//!
//! The matching header `include/rankone.h` is regenerated by the build
//! script via cbindgen.

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use rankone::catalog::{RootKind, SpaceFamily, SymmetricSpace};
use rankone::error::Error;
use rankone::jacobi::{spherical_function, spherical_function_hypergeometric, RadialPoint};
use rankone::orbit::{classify_point, decide_pair, decide_triple, dichotomy_holds, OrbitKind};
use rankone::plancherel::{crosscheck, SeriesVerdict, SumSchedule};

/// Status code of every FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankoneStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidParameter = 2,
    DomainError = 3,
    RangeError = 4,
    InternalError = 5,
}

/// Family selector for [`rankone_space_new`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankoneFamily {
    Ai = 0,
    Aii = 1,
    Aiii = 2,
    Bii = 3,
    Cii = 4,
    Fii = 5,
}

/// Opaque handle to a catalog entry.
pub struct RankoneSpace {
    inner: SymmetricSpace,
}

/// Scalar facts about a space.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct RankoneSpaceInfo {
    pub m_alpha: u32,
    pub m_2alpha: u32,
    /// 0 for a single restricted root, 1 when 2*alpha is present.
    pub root_kind: u32,
    pub dim_gk: u32,
    pub jacobi_a: f64,
    pub jacobi_b: f64,
}

/// Classification of one radial point.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct RankoneOrbitClass {
    /// 0 Normalizer, 1 Regular, 2 ContinuousNonRegular.
    pub kind: u32,
    pub alpha_annihilated: bool,
    pub two_alpha_annihilated: bool,
    pub coset_dim: u32,
}

/// Convergence diagnosis of a Plancherel series.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct RankoneSeriesDiagnosis {
    /// 0 Convergent, 1 Divergent, 2 Inconclusive.
    pub verdict: u32,
    /// NaN when no block means were available to fit.
    pub tail_exponent: f64,
    pub log_slope: f64,
    pub r_squared: f64,
    pub closed_form_l2: bool,
    pub agree: bool,
}

fn status_of(e: &Error) -> RankoneStatus {
    match e {
        Error::InvalidParameter(_) => RankoneStatus::InvalidParameter,
        Error::Domain(_) => RankoneStatus::DomainError,
        Error::Range(_) => RankoneStatus::RangeError,
        Error::Inconsistency(_) => RankoneStatus::InternalError,
    }
}

fn guarded(f: impl FnOnce() -> RankoneStatus) -> RankoneStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(RankoneStatus::InternalError)
}

/// Create a space handle. `q` is the family parameter and must be 0 for
/// AI, AII and FII.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn rankone_space_new(
    family: RankoneFamily,
    q: u32,
    out: *mut *mut RankoneSpace,
) -> RankoneStatus {
    if out.is_null() {
        return RankoneStatus::NullPointer;
    }
    guarded(|| {
        let family = match (family, q) {
            (RankoneFamily::Ai, 0) => SpaceFamily::AI,
            (RankoneFamily::Aii, 0) => SpaceFamily::AII,
            (RankoneFamily::Fii, 0) => SpaceFamily::FII,
            (RankoneFamily::Aiii, q) => SpaceFamily::AIII(q),
            (RankoneFamily::Bii, q) => SpaceFamily::BII(q),
            (RankoneFamily::Cii, q) => SpaceFamily::CII(q),
            _ => return RankoneStatus::InvalidParameter,
        };
        match SymmetricSpace::new(family) {
            Ok(inner) => {
                unsafe { *out = Box::into_raw(Box::new(RankoneSpace { inner })) };
                RankoneStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Release a handle created by [`rankone_space_new`]. Null is a no-op.
///
/// # Safety
/// `space` must be null or a pointer returned by `rankone_space_new` that
/// has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn rankone_space_free(space: *mut RankoneSpace) {
    if !space.is_null() {
        drop(unsafe { Box::from_raw(space) });
    }
}

unsafe fn space_ref<'a>(space: *const RankoneSpace) -> Option<&'a SymmetricSpace> {
    unsafe { space.as_ref() }.map(|s| &s.inner)
}

/// Fill `info` with the multiplicities, root kind, dimension and Jacobi
/// exponents of the space.
///
/// # Safety
/// `space` must be a live handle; `info` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rankone_space_info(
    space: *const RankoneSpace,
    info: *mut RankoneSpaceInfo,
) -> RankoneStatus {
    let (Some(s), Some(info)) = (unsafe { space_ref(space) }, unsafe { info.as_mut() }) else {
        return RankoneStatus::NullPointer;
    };
    let p = s.jacobi_params();
    *info = RankoneSpaceInfo {
        m_alpha: s.m_alpha,
        m_2alpha: s.m_2alpha,
        root_kind: match s.root_kind {
            RootKind::A1 => 0,
            RootKind::BC1 => 1,
        },
        dim_gk: s.dim_gk,
        jacobi_a: p.a,
        jacobi_b: p.b,
    };
    RankoneStatus::Ok
}

/// Copy the display name (UTF-8, no terminator added beyond the copied
/// bytes) into `buf`. `written` receives the full length; the copy is
/// truncated to `len`.
///
/// # Safety
/// `buf` must point to at least `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn rankone_space_name(
    space: *const RankoneSpace,
    buf: *mut c_char,
    len: usize,
    written: *mut usize,
) -> RankoneStatus {
    let (Some(s), Some(written)) = (unsafe { space_ref(space) }, unsafe { written.as_mut() })
    else {
        return RankoneStatus::NullPointer;
    };
    let bytes = s.name.as_bytes();
    *written = bytes.len();
    if len > 0 {
        if buf.is_null() {
            return RankoneStatus::NullPointer;
        }
        let n = bytes.len().min(len);
        unsafe { std::ptr::copy_nonoverlapping(bytes.as_ptr(), buf as *mut u8, n) };
    }
    RankoneStatus::Ok
}

/// Spherical function value at radial coordinate `t`.
///
/// # Safety
/// `space` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rankone_spherical(
    space: *const RankoneSpace,
    n: u32,
    t: f64,
    out: *mut f64,
) -> RankoneStatus {
    let (Some(s), Some(out)) = (unsafe { space_ref(space) }, unsafe { out.as_mut() }) else {
        return RankoneStatus::NullPointer;
    };
    guarded(|| {
        *out = spherical_function(s, n, RadialPoint::new(t)).value;
        RankoneStatus::Ok
    })
}

/// Spherical function through the hypergeometric oracle (n <= 200).
///
/// # Safety
/// `space` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rankone_spherical_hypergeometric(
    space: *const RankoneSpace,
    n: u32,
    t: f64,
    out: *mut f64,
) -> RankoneStatus {
    let (Some(s), Some(out)) = (unsafe { space_ref(space) }, unsafe { out.as_mut() }) else {
        return RankoneStatus::NullPointer;
    };
    guarded(
        || match spherical_function_hypergeometric(s, n, RadialPoint::new(t)) {
            Ok(v) => {
                *out = v;
                RankoneStatus::Ok
            }
            Err(e) => status_of(&e),
        },
    )
}

/// Dimension of the n-th spherical representation.
///
/// # Safety
/// `space` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rankone_dim(
    space: *const RankoneSpace,
    n: u32,
    out: *mut f64,
) -> RankoneStatus {
    let (Some(s), Some(out)) = (unsafe { space_ref(space) }, unsafe { out.as_mut() }) else {
        return RankoneStatus::NullPointer;
    };
    guarded(|| {
        *out = rankone::dimension::dim_spherical(s, n).dim;
        RankoneStatus::Ok
    })
}

/// Classify a radial point with tolerance `eps` (pass 0 for the default).
///
/// # Safety
/// `space` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rankone_classify(
    space: *const RankoneSpace,
    t: f64,
    eps: f64,
    out: *mut RankoneOrbitClass,
) -> RankoneStatus {
    let (Some(s), Some(out)) = (unsafe { space_ref(space) }, unsafe { out.as_mut() }) else {
        return RankoneStatus::NullPointer;
    };
    let eps = if eps == 0.0 {
        rankone::orbit::DEFAULT_EPS
    } else {
        eps
    };
    guarded(|| match classify_point(s, t, eps) {
        Ok(c) => {
            *out = RankoneOrbitClass {
                kind: match c.kind {
                    OrbitKind::Normalizer => 0,
                    OrbitKind::Regular => 1,
                    OrbitKind::ContinuousNonRegular => 2,
                },
                alpha_annihilated: c.annihilators.alpha,
                two_alpha_annihilated: c.annihilators.two_alpha,
                coset_dim: c.coset_dim,
            };
            RankoneStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Closed-form verdict for a pair of radial points.
///
/// # Safety
/// `space` must be a live handle; `l1` and `l2` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rankone_decide_pair(
    space: *const RankoneSpace,
    t1: f64,
    t2: f64,
    l1: *mut bool,
    l2: *mut bool,
) -> RankoneStatus {
    let (Some(s), Some(l1), Some(l2)) = (
        unsafe { space_ref(space) },
        unsafe { l1.as_mut() },
        unsafe { l2.as_mut() },
    ) else {
        return RankoneStatus::NullPointer;
    };
    guarded(|| match decide_pair(s, t1, t2) {
        Ok(v) => {
            *l1 = v.l1;
            *l2 = v.l2;
            RankoneStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Closed-form verdict for a triple of radial points.
///
/// # Safety
/// `space` must be a live handle; `l1` and `l2` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rankone_decide_triple(
    space: *const RankoneSpace,
    t1: f64,
    t2: f64,
    t3: f64,
    l1: *mut bool,
    l2: *mut bool,
) -> RankoneStatus {
    let (Some(s), Some(l1), Some(l2)) = (
        unsafe { space_ref(space) },
        unsafe { l1.as_mut() },
        unsafe { l2.as_mut() },
    ) else {
        return RankoneStatus::NullPointer;
    };
    guarded(|| match decide_triple(s, t1, t2, t3) {
        Ok(v) => {
            *l1 = v.l1;
            *l2 = v.l2;
            RankoneStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Whether integrable convolutions on this space are automatically
/// square-integrable.
///
/// # Safety
/// `space` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rankone_dichotomy(
    space: *const RankoneSpace,
    out: *mut bool,
) -> RankoneStatus {
    let (Some(s), Some(out)) = (unsafe { space_ref(space) }, unsafe { out.as_mut() }) else {
        return RankoneStatus::NullPointer;
    };
    *out = dichotomy_holds(s);
    RankoneStatus::Ok
}

/// Sum the Plancherel series for 1-3 radial points up to `n_max` terms and
/// diagnose convergence against the closed-form verdict.
///
/// # Safety
/// `ts` must point to `ts_len` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rankone_norm_diagnose(
    space: *const RankoneSpace,
    ts: *const f64,
    ts_len: usize,
    n_max: u64,
    out: *mut RankoneSeriesDiagnosis,
) -> RankoneStatus {
    let (Some(s), Some(out)) = (unsafe { space_ref(space) }, unsafe { out.as_mut() }) else {
        return RankoneStatus::NullPointer;
    };
    if ts.is_null() {
        return RankoneStatus::NullPointer;
    }
    let points: Vec<RadialPoint> = unsafe { std::slice::from_raw_parts(ts, ts_len) }
        .iter()
        .map(|t| RadialPoint::new(*t))
        .collect();
    guarded(|| {
        let schedule = match SumSchedule::new(n_max, 1.3) {
            Ok(s) => s,
            Err(e) => return status_of(&e),
        };
        match crosscheck(s, &points, schedule) {
            Ok(r) => {
                *out = RankoneSeriesDiagnosis {
                    verdict: match r.diagnosis.verdict {
                        SeriesVerdict::Convergent => 0,
                        SeriesVerdict::Divergent => 1,
                        SeriesVerdict::Inconclusive => 2,
                    },
                    tail_exponent: r.diagnosis.tail_exponent.unwrap_or(f64::NAN),
                    log_slope: r.diagnosis.log_slope,
                    r_squared: r.diagnosis.r_squared,
                    closed_form_l2: r.closed_form_l2,
                    agree: r.agree,
                };
                RankoneStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn rankone_status_message(status: RankoneStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        RankoneStatus::Ok => b"ok\0",
        RankoneStatus::NullPointer => b"null pointer argument\0",
        RankoneStatus::InvalidParameter => b"invalid parameter\0",
        RankoneStatus::DomainError => b"argument outside mathematical domain\0",
        RankoneStatus::RangeError => b"argument outside supported range\0",
        RankoneStatus::InternalError => b"internal error\0",
    };
    msg.as_ptr() as *const c_char
}
