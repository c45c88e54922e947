use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use orbitlattice_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let text = CStr::from_ptr(s).to_str().unwrap().to_string();
    ol_string_free(s);
    text
}

#[test]
fn involution_round_trip() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(ol_involution_parse(c("(2,5)(1,3)").as_ptr(), 6, &mut p), OlStatus::Ok);
        assert_eq!(ol_involution_size(p), 6);
        assert_eq!(ol_involution_rank(p), 2);
        let mut s = ptr::null_mut();
        assert_eq!(ol_involution_to_string(p, &mut s), OlStatus::Ok);
        assert_eq!(take(s), "(1,3)(2,5)");
        let mut d = 0;
        assert_eq!(ol_involution_orbit_dim(p, &mut d), OlStatus::Ok);
        assert_eq!(d, orbitlattice::orbit_dim(&orbitlattice::Involution::parse("(1,3)(2,5)", Some(6)).unwrap()));
        ol_involution_free(p);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(ol_involution_parse(c("(1,1)").as_ptr(), 0, &mut p), OlStatus::Domain);
        assert!(p.is_null());
        assert!(!take(ol_last_error()).is_empty());
        assert_eq!(ol_involution_parse(ptr::null(), 0, &mut p), OlStatus::NullPointer);
        assert_eq!(ol_involution_parse(c("()").as_ptr(), 3, ptr::null_mut()), OlStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(ol_tableau_parse(bad.as_ptr().cast(), &mut ptr::null_mut()), OlStatus::InvalidUtf8);

        assert_eq!(ol_involution_parse(c("()").as_ptr(), 3, &mut p), OlStatus::Ok);
        assert!(ol_last_error().is_null());
        let mut d = 99;
        assert_eq!(ol_involution_orbit_dim(p, &mut d), OlStatus::Ok);
        assert_eq!(d, 0);
        ol_involution_free(p);
        ol_involution_free(ptr::null_mut());
        assert_eq!(ol_involution_size(ptr::null()), 0);
    }
}

#[test]
fn tableaux_and_rank_matrices() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(ol_tableau_parse(c("1,3,5|2,4").as_ptr(), &mut t), OlStatus::Ok);
        let mut sigma = ptr::null_mut();
        assert_eq!(ol_tableau_sigma(t, &mut sigma), OlStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(ol_tableau_of_sigma(sigma, &mut back), OlStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(ol_tableau_to_string(back, &mut s), OlStatus::Ok);
        assert_eq!(take(s), "1,3,5|2,4");

        let mut m = ptr::null_mut();
        assert_eq!(ol_rank_matrix(sigma, &mut m), OlStatus::Ok);
        assert_eq!(ol_rank_matrix_size(m), 5);
        let mut v = 0;
        assert_eq!(ol_rank_matrix_get(m, 1, 5, &mut v), OlStatus::Ok);
        assert_eq!(v, 2);
        assert_eq!(ol_rank_matrix_get(m, 0, 5, &mut v), OlStatus::OutOfRange);
        assert_eq!(ol_rank_matrix_get(m, 1, 6, &mut v), OlStatus::OutOfRange);

        let mut bad = ptr::null_mut();
        assert_eq!(ol_rank_matrix_parse(c("0,1,2;0,0,1;0,0,0").as_ptr(), &mut bad), OlStatus::Ok);
        let mut valid = true;
        assert_eq!(ol_rank_matrix_validate(bad, &mut valid), OlStatus::Ok);
        assert!(!valid);
        let mut le = true;
        assert_eq!(ol_rank_matrix_leq(bad, m, &mut le), OlStatus::Domain);

        let mut not_image = ptr::null_mut();
        assert_eq!(ol_involution_parse(c("(1,3)(2,4)").as_ptr(), 4, &mut not_image), OlStatus::Ok);
        assert_eq!(ol_tableau_of_sigma(not_image, &mut back), OlStatus::Domain);

        ol_involution_free(not_image);
        ol_rank_matrix_free(bad);
        ol_rank_matrix_free(m);
        ol_tableau_free(back);
        ol_involution_free(sigma);
        ol_tableau_free(t);
    }
}

#[test]
fn report_matches_library() {
    unsafe {
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(ol_tableau_parse(c("1,2,4,5|3,6").as_ptr(), &mut a), OlStatus::Ok);
        assert_eq!(ol_tableau_parse(c("1,3,4,6|2,5").as_ptr(), &mut b), OlStatus::Ok);
        let mut r = ptr::null_mut();
        assert_eq!(ol_intersect_tableaux(a, b, &mut r), OlStatus::Ok);
        assert!(!ol_report_irreducible(r));
        assert_eq!(ol_report_component_count(r), 2);
        assert_eq!(ol_report_codim(r), 2);
        let mut dims = Vec::new();
        for i in 0..2 {
            let mut d = 0;
            assert_eq!(ol_report_component_dim(r, i, &mut d), OlStatus::Ok);
            dims.push(d);
        }
        assert_eq!(dims, [6, 4]);
        let mut json = ptr::null_mut();
        assert_eq!(ol_report_to_json(r, &mut json), OlStatus::Ok);
        let parsed: orbitlattice::IntersectionReport = serde_json::from_str(&take(json)).unwrap();
        let direct = orbitlattice::intersect_tableaux(&"1,2,4,5|3,6".parse().unwrap(), &"1,3,4,6|2,5".parse().unwrap()).unwrap();
        assert_eq!(parsed, direct);

        let (mut x, mut y) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(ol_involution_parse(c("(1,2)").as_ptr(), 3, &mut x), OlStatus::Ok);
        assert_eq!(ol_involution_parse(c("(1,2)").as_ptr(), 4, &mut y), OlStatus::Ok);
        let mut bad = ptr::null_mut();
        assert_eq!(ol_intersect(x, y, &mut bad), OlStatus::Domain);
        assert!(bad.is_null());

        ol_involution_free(x);
        ol_involution_free(y);
        ol_report_free(r);
        ol_tableau_free(a);
        ol_tableau_free(b);
    }
}

fn artifact_dir() -> PathBuf {
    // target/<profile>/deps/<test binary>
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn header_compiles_and_links_from_c() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let include = manifest.join("include");
    assert!(include.join("orbitlattice.h").exists());
    let lib = artifact_dir().join("liborbitlattice_ffi.a");
    assert!(lib.exists(), "static library not found at {}", lib.display());
    let out = std::env::temp_dir().join(format!("orbitlattice_smoke_{}", std::process::id()));
    let status = Command::new("cc")
        .arg("-std=c11")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(&include)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&out)
        .status()
        .expect("a C compiler is available");
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("ok "));
}
