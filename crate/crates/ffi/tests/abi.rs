use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use cdtool_ffi::*;

fn last_error() -> String {
    let p = cd_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn builtin(name: &str) -> *mut CdGroup {
    let name = CString::new(name).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { cd_group_builtin(name.as_ptr(), &mut g) },
        CdStatus::Ok
    );
    g
}

#[test]
fn lattice_of_s4_through_handles() {
    let g = builtin("symmetric:4");
    unsafe {
        assert_eq!(cd_group_order(g), 24);
        assert_eq!(cd_group_degree(g), 4);
        let mut l = ptr::null_mut();
        assert_eq!(cd_lattice_compute(g, &mut l), CdStatus::Ok);
        assert_eq!(cd_lattice_max_measure(l), 24);
        assert_eq!(cd_lattice_len(l), 2);
        let mut d = 9;
        assert_eq!(cd_lattice_member_dual(l, 0, &mut d), CdStatus::Ok);
        assert_eq!(d, 1);
        let mut a = false;
        assert_eq!(cd_group_has_property_a(g, &mut a), CdStatus::Ok);
        assert!(a);
        cd_lattice_free(l);
        cd_group_free(g);
    }
}

#[test]
fn errors_map_to_status_codes() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(cd_group_builtin(ptr::null(), &mut g), CdStatus::NullPointer);
        let bad = CString::new("cyclic:x").unwrap();
        assert_eq!(
            cd_group_builtin(bad.as_ptr(), &mut g),
            CdStatus::InvalidArgument
        );
        assert!(g.is_null());
        let text = CString::new("group 6.1 degree=3\ngen 2,3,1\n").unwrap();
        assert_eq!(cd_group_parse(text.as_ptr(), &mut g), CdStatus::Parse);
        assert!(last_error().contains("6.1"));
        assert_eq!(
            cd_group_construct(2, 7, 3, 1, &mut g),
            CdStatus::InvalidArgument
        );
        let mut b = false;
        assert_eq!(
            cd_group_is_cd_simple(ptr::null(), &mut b),
            CdStatus::NullPointer
        );
        assert_eq!(cd_group_order(ptr::null()), 0);
        cd_group_free(ptr::null_mut());
    }
}

#[test]
fn catalog_round_trip_through_strings() {
    unsafe {
        let mut cat = ptr::null_mut();
        assert_eq!(cd_catalog_bundled(&mut cat), CdStatus::Ok);
        assert_eq!(cd_catalog_len(cat), 257);
        let mut g = ptr::null_mut();
        assert_eq!(cd_catalog_group(cat, 24, 12, &mut g), CdStatus::Ok);
        assert_eq!(
            cd_catalog_group(cat, 24, 99, &mut ptr::null_mut()),
            CdStatus::NotFound
        );

        let mut s = ptr::null_mut();
        assert_eq!(cd_group_format(g, 1, &mut s), CdStatus::Ok);
        let mut again = ptr::null_mut();
        assert_eq!(cd_catalog_parse(s, &mut again), CdStatus::Ok);
        assert_eq!(cd_catalog_len(again), 1);
        cd_string_free(s);

        let mut json = ptr::null_mut();
        assert_eq!(cd_classify_json(cat, 24, 24, &mut json), CdStatus::Ok);
        let v: serde_json::Value = serde_json::from_slice(CStr::from_ptr(json).to_bytes()).unwrap();
        assert_eq!(v["records"].as_array().unwrap().len(), 15);
        cd_string_free(json);
        assert_eq!(
            cd_classify_json(cat, 5, 2, &mut json),
            CdStatus::InvalidArgument
        );

        cd_group_free(g);
        cd_catalog_free(again);
        cd_catalog_free(cat);
    }
}

#[test]
fn wagstaff_count_exceeds_buffer() {
    let mut buf = [0u64; 2];
    let mut n = 0;
    unsafe {
        assert_eq!(
            cd_wagstaff_primes(180, buf.as_mut_ptr(), 2, &mut n),
            CdStatus::Ok
        );
        assert_eq!(
            cd_wagstaff_primes(180, ptr::null_mut(), 0, &mut n),
            CdStatus::Ok
        );
    }
    assert_eq!(buf, [2, 3]);
    assert_eq!(n, 4);
}

/// Compiles `smoke.c` against the generated header and the static library.
#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("smoke");
    // the test binary lives in <profile>/deps, the library in <profile>
    let test_exe = std::env::current_exe().unwrap();
    let lib = test_exe
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .join("libcdtool_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler");
        return;
    }
    let status = Command::new("cc")
        .arg(manifest.join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
