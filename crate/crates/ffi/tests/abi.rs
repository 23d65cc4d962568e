//! Exercise the C ABI through the exported symbols, raw pointers and all.

use rankone_ffi::*;

fn new_space(family: RankoneFamily, q: u32) -> *mut RankoneSpace {
    let mut handle: *mut RankoneSpace = std::ptr::null_mut();
    let status = unsafe { rankone_space_new(family, q, &mut handle) };
    assert_eq!(status, RankoneStatus::Ok);
    assert!(!handle.is_null());
    handle
}

#[test]
fn space_lifecycle_and_info() {
    let space = new_space(RankoneFamily::Aiii, 2);
    let mut info = RankoneSpaceInfo {
        m_alpha: 0,
        m_2alpha: 0,
        root_kind: 9,
        dim_gk: 0,
        jacobi_a: -1.0,
        jacobi_b: -1.0,
    };
    assert_eq!(
        unsafe { rankone_space_info(space, &mut info) },
        RankoneStatus::Ok
    );
    assert_eq!(info.m_alpha, 2);
    assert_eq!(info.m_2alpha, 1);
    assert_eq!(info.root_kind, 1);
    assert_eq!(info.dim_gk, 4);
    assert_eq!(info.jacobi_a, 1.0);
    assert_eq!(info.jacobi_b, 0.0);

    let mut buf = [0i8; 64];
    let mut written = 0usize;
    let status = unsafe { rankone_space_name(space, buf.as_mut_ptr(), buf.len(), &mut written) };
    assert_eq!(status, RankoneStatus::Ok);
    let name: Vec<u8> = buf[..written].iter().map(|b| *b as u8).collect();
    assert_eq!(std::str::from_utf8(&name).unwrap(), "SU(3)/S(U(2)×U(1))");
    unsafe { rankone_space_free(space) };
}

#[test]
fn invalid_families_report_status() {
    let mut handle: *mut RankoneSpace = std::ptr::null_mut();
    // BII(2) is excluded by the catalog
    let status = unsafe { rankone_space_new(RankoneFamily::Bii, 2, &mut handle) };
    assert_eq!(status, RankoneStatus::InvalidParameter);
    // parameterless family with a parameter
    let status = unsafe { rankone_space_new(RankoneFamily::Ai, 3, &mut handle) };
    assert_eq!(status, RankoneStatus::InvalidParameter);
    // null out-pointer
    let status = unsafe { rankone_space_new(RankoneFamily::Ai, 0, std::ptr::null_mut()) };
    assert_eq!(status, RankoneStatus::NullPointer);
}

#[test]
fn spherical_values_and_oracle() {
    let space = new_space(RankoneFamily::Fii, 0);
    let mut direct = 0.0f64;
    let mut oracle = 0.0f64;
    assert_eq!(
        unsafe { rankone_spherical(space, 10, 0.7, &mut direct) },
        RankoneStatus::Ok
    );
    assert_eq!(
        unsafe { rankone_spherical_hypergeometric(space, 10, 0.7, &mut oracle) },
        RankoneStatus::Ok
    );
    assert!((direct - oracle).abs() <= 1e-12, "{direct} vs {oracle}");
    // identity normalisation
    assert_eq!(
        unsafe { rankone_spherical(space, 123, 0.0, &mut direct) },
        RankoneStatus::Ok
    );
    assert_eq!(direct, 1.0);
    // oracle range limit
    assert_eq!(
        unsafe { rankone_spherical_hypergeometric(space, 500, 0.7, &mut oracle) },
        RankoneStatus::RangeError
    );
    unsafe { rankone_space_free(space) };
}

#[test]
fn dimensions_classification_and_verdicts() {
    let space = new_space(RankoneFamily::Ai, 0);
    let mut dim = 0.0f64;
    assert_eq!(
        unsafe { rankone_dim(space, 7, &mut dim) },
        RankoneStatus::Ok
    );
    assert_eq!(dim, 15.0);

    let mut class = RankoneOrbitClass {
        kind: 9,
        alpha_annihilated: false,
        two_alpha_annihilated: false,
        coset_dim: 99,
    };
    let pi = std::f64::consts::PI;
    assert_eq!(
        unsafe { rankone_classify(space, pi, 0.0, &mut class) },
        RankoneStatus::Ok
    );
    assert_eq!(class.kind, 0);
    assert_eq!(class.coset_dim, 0);

    let (mut l1, mut l2) = (false, true);
    let half_pi = std::f64::consts::FRAC_PI_2;
    assert_eq!(
        unsafe { rankone_decide_pair(space, half_pi, half_pi, &mut l1, &mut l2) },
        RankoneStatus::Ok
    );
    assert!(l1);
    assert!(!l2);
    assert_eq!(
        unsafe { rankone_decide_triple(space, half_pi, half_pi, half_pi, &mut l1, &mut l2) },
        RankoneStatus::Ok
    );
    assert!(l1 && l2);

    let mut dichotomy = true;
    assert_eq!(
        unsafe { rankone_dichotomy(space, &mut dichotomy) },
        RankoneStatus::Ok
    );
    assert!(!dichotomy);
    unsafe { rankone_space_free(space) };
}

#[test]
fn series_diagnosis_agrees_with_closed_form() {
    let space = new_space(RankoneFamily::Aiii, 2);
    let ts = [0.7f64, std::f64::consts::FRAC_PI_2];
    let mut diag = RankoneSeriesDiagnosis {
        verdict: 9,
        tail_exponent: 0.0,
        log_slope: 0.0,
        r_squared: 0.0,
        closed_form_l2: false,
        agree: false,
    };
    let status = unsafe { rankone_norm_diagnose(space, ts.as_ptr(), ts.len(), 50_000, &mut diag) };
    assert_eq!(status, RankoneStatus::Ok);
    assert_eq!(diag.verdict, 0, "convergent");
    assert!(diag.closed_form_l2);
    assert!(diag.agree);
    assert!(diag.tail_exponent < -1.1);
    // zero-length point list is rejected
    let status = unsafe { rankone_norm_diagnose(space, ts.as_ptr(), 0, 50_000, &mut diag) };
    assert_eq!(status, RankoneStatus::InvalidParameter);
    unsafe { rankone_space_free(space) };
}

#[test]
fn status_messages_are_c_strings() {
    for status in [
        RankoneStatus::Ok,
        RankoneStatus::NullPointer,
        RankoneStatus::InvalidParameter,
        RankoneStatus::DomainError,
        RankoneStatus::RangeError,
        RankoneStatus::InternalError,
    ] {
        let ptr = rankone_status_message(status);
        assert!(!ptr.is_null());
        let text = unsafe { std::ffi::CStr::from_ptr(ptr) }.to_str().unwrap();
        assert!(!text.is_empty());
    }
}
