use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use lieomega_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = lo_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn new_session(gens: &str, ops: &str, lambda: &str) -> *mut LoSession {
    let mut s = ptr::null_mut();
    let st = unsafe {
        lo_session_new(
            c(gens).as_ptr(),
            c(ops).as_ptr(),
            c(lambda).as_ptr(),
            &mut s,
        )
    };
    assert_eq!(st, LoStatus::Ok);
    assert!(lo_last_error().is_null());
    s
}

unsafe fn take(p: *mut c_char) -> String {
    let out = CStr::from_ptr(p).to_str().unwrap().to_owned();
    lo_string_free(p);
    out
}

#[test]
fn bracket_through_the_c_abi() {
    let s = new_session("x2,x1", "w3:3,w1:1", "symbolic");
    let mut out = ptr::null_mut();
    let word = c("w3(x2 x1 x1, x1, w1(x2 x2 x1)) x2 x1");
    unsafe {
        assert_eq!(lo_bracket(s, word.as_ptr(), &mut out), LoStatus::Ok);
        assert_eq!(
            take(out),
            "(w3(((x2 x1) x1), x1, w1((x2 (x2 x1)))) (x2 x1))"
        );
        lo_session_free(s);
    }
}

#[test]
fn presets_check_and_count() {
    let s = new_session("x2,x1,x0", "P:1", "symbolic");
    unsafe {
        assert_eq!(
            lo_session_load_preset(s, c("nij").as_ptr(), 7),
            LoStatus::Ok
        );
        assert!(lo_session_rule_count(s) > 0);
        let (mut total, mut bad) = (0usize, 99usize);
        assert_eq!(lo_check_gsb(s, 7, &mut total, &mut bad), LoStatus::Ok);
        assert_eq!((total > 0, bad), (true, 0));
        assert_eq!(lo_assoc_check(s, 7, &mut total, &mut bad), LoStatus::Ok);
        assert_eq!(bad, 0);

        let mut irr = [0usize; 5];
        let mut oracle = [0usize; 5];
        assert_eq!(
            lo_irr_counts(s, 5, irr.as_mut_ptr(), irr.len()),
            LoStatus::Ok
        );
        assert_eq!(
            lo_dim_oracle(s, 5, oracle.as_mut_ptr(), oracle.len()),
            LoStatus::Ok
        );
        assert_eq!(irr, oracle);
        lo_session_free(s);
    }
}

#[test]
fn completion_replaces_the_rules() {
    let s = new_session("x2,x1,x0", "P:1", "symbolic");
    unsafe {
        assert_eq!(
            lo_session_load_preset(s, c("perturbed").as_ptr(), 7),
            LoStatus::Ok
        );
        let before = lo_session_rule_count(s);
        let (mut total, mut bad) = (0usize, 0usize);
        assert_eq!(lo_check_gsb(s, 7, &mut total, &mut bad), LoStatus::Ok);
        assert!(bad > 0);
        let mut added = 0usize;
        assert_eq!(lo_complete(s, 7, &mut added), LoStatus::Ok);
        assert!(added > 0);
        assert_eq!(lo_session_rule_count(s), before + added);
        assert_eq!(lo_check_gsb(s, 7, &mut total, &mut bad), LoStatus::Ok);
        assert_eq!(bad, 0);
        lo_session_free(s);
    }
}

#[test]
fn rules_and_normal_forms() {
    let s = new_session("x2,x1", "P:1", "3");
    unsafe {
        let mut id = 99usize;
        let rule = c("(P(x2) P(x1)) - P((P(x2) x1)) - P((x2 P(x1))) - l*P((x2 x1))");
        assert_eq!(lo_session_add_rule(s, rule.as_ptr(), &mut id), LoStatus::Ok);
        assert_eq!(id, 0);
        let mut out = ptr::null_mut();
        assert_eq!(
            lo_normalize(s, c("(P(x2) P(x1))").as_ptr(), &mut out),
            LoStatus::Ok
        );
        let nf = take(out);
        assert!(nf.contains("3*P((x2 x1))"), "{nf}");
        assert!(!nf.contains("(P(x2) P(x1))"), "{nf}");
        lo_session_free(s);
    }
}

#[test]
fn errors_are_reported_with_codes() {
    let mut s = ptr::null_mut();
    unsafe {
        let st = lo_session_new(
            c("x,x").as_ptr(),
            c("").as_ptr(),
            c("symbolic").as_ptr(),
            &mut s,
        );
        assert_eq!(st, LoStatus::InvalidArgument);
        assert!(!last_error().is_empty());
        assert!(s.is_null());

        let st = lo_session_new(ptr::null(), c("").as_ptr(), c("symbolic").as_ptr(), &mut s);
        assert_eq!(st, LoStatus::NullPointer);

        let st = lo_session_new(
            c("x").as_ptr(),
            c("P:1").as_ptr(),
            c("half").as_ptr(),
            &mut s,
        );
        assert_eq!(st, LoStatus::InvalidArgument);

        let bad_utf8 = [0xffu8, 0];
        let st = lo_session_new(
            bad_utf8.as_ptr().cast(),
            c("").as_ptr(),
            c("symbolic").as_ptr(),
            &mut s,
        );
        assert_eq!(st, LoStatus::InvalidUtf8);
    }

    let s = new_session("x", "P:1", "symbolic");
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(lo_bracket(s, c("P(x,").as_ptr(), &mut out), LoStatus::Parse);
        assert!(last_error().contains('4'));
        assert!(out.is_null());
        assert_eq!(
            lo_bracket(s, c("x").as_ptr(), ptr::null_mut()),
            LoStatus::NullPointer
        );
        assert_eq!(
            lo_bracket(ptr::null(), c("x").as_ptr(), &mut out),
            LoStatus::NullPointer
        );
        assert_eq!(
            lo_session_load_preset(s, c("lie").as_ptr(), 5),
            LoStatus::InvalidArgument
        );

        let mut short = [0usize; 2];
        assert_eq!(
            lo_irr_counts(s, 4, short.as_mut_ptr(), short.len()),
            LoStatus::InvalidArgument
        );

        let mut id = 0usize;
        assert_eq!(
            lo_session_add_rule(s, c("(x x)").as_ptr(), &mut id),
            LoStatus::Engine
        );
        assert_eq!(lo_session_rule_count(ptr::null()), 0);
        lo_session_free(s);
        lo_session_free(ptr::null_mut());
        lo_string_free(ptr::null_mut());
    }
}

#[test]
fn last_error_is_per_thread() {
    let s = new_session("x", "P:1", "symbolic");
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { lo_bracket(s, c("P(").as_ptr(), &mut out) },
        LoStatus::Parse
    );
    std::thread::spawn(|| assert!(lo_last_error().is_null()))
        .join()
        .unwrap();
    assert!(!last_error().is_empty());
    unsafe { lo_session_free(s) };
}

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn static_lib() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let deps = exe.parent()?;
    [deps, deps.parent()?]
        .iter()
        .map(|d| d.join("liblieomega_ffi.a"))
        .find(|p| p.exists())
}

fn have_cc() -> bool {
    Command::new("cc")
        .arg("--version")
        .output()
        .is_ok_and(|o| o.status.success())
}

#[test]
fn header_declares_every_entry_point() {
    let header = std::fs::read_to_string(crate_dir().join("include/lieomega.h")).unwrap();
    for name in [
        "lo_session_new",
        "lo_session_free",
        "lo_session_load_preset",
        "lo_session_add_rule",
        "lo_session_rule_count",
        "lo_bracket",
        "lo_normalize",
        "lo_check_gsb",
        "lo_assoc_check",
        "lo_complete",
        "lo_irr_counts",
        "lo_dim_oracle",
        "lo_last_error",
        "lo_string_free",
        "typedef struct LoSession LoSession;",
        "LO_STATUS_PARSE = 4",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "lieomega.h"

int main(void) {
    LoSession *s = NULL;
    if (lo_session_new("x", "P:1", "symbolic", &s) != LO_STATUS_OK) return 10;
    if (lo_session_load_preset(s, "rb", 9) != LO_STATUS_OK) return 11;
    size_t total = 0, bad = 1;
    if (lo_check_gsb(s, 9, &total, &bad) != LO_STATUS_OK) return 12;
    if (total == 0 || bad != 0) return 13;
    size_t counts[4];
    if (lo_irr_counts(s, 4, counts, 4) != LO_STATUS_OK) return 14;
    char *tree = NULL;
    if (lo_bracket(s, "P(x,", &tree) != LO_STATUS_PARSE) return 15;
    if (lo_last_error() == NULL) return 16;
    lo_session_free(s);
    printf("%zu %zu %zu %zu %zu\n", total, counts[0], counts[1], counts[2], counts[3]);
    return 0;
}
"#;

#[test]
fn c_program_links_against_the_static_library() {
    let Some(lib) = static_lib() else {
        eprintln!("static library not built; skipping");
        return;
    };
    if !have_cc() {
        eprintln!("no C compiler; skipping");
        return;
    }
    let dir = std::env::temp_dir().join(format!("lieomega-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("smoke.c");
    let exe = dir.join("smoke");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let include: &Path = &crate_dir().join("include");
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-o"])
        .arg(&exe)
        .arg(&src)
        .arg("-I")
        .arg(include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&exe).output().unwrap();
    assert_eq!(run.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "8 1 1 2 4");
    std::fs::remove_dir_all(dir).unwrap();
}
