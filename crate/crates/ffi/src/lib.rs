//! C interface to the `lieomega` engine.
//!
//! A `LoSession` owns an alphabet, a `λ` mode and a rule set. Every entry
//! point returns a `LoStatus`; on failure `lo_last_error` describes the
//! problem. Strings handed out by the library must be released with
//! `lo_string_free`, sessions with `lo_session_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lieomega::cli::{parse_poly, parse_word};
use lieomega::gsb::{
    assoc_check, check_gsb, complete, dim_oracle, irr_counts, preset_rules, LambdaMode, PresetKind,
    RuleSet,
};
use lieomega::lie_poly::LiePoly;
use lieomega::lyndon::std_bracket;
use lieomega::omega_words::Alphabet;
use num_rational::BigRational;

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    Parse = 4,
    Engine = 5,
    Panic = 6,
}

/// Opaque handle.
pub struct LoSession {
    rules: RuleSet,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Fail(LoStatus, String);

impl Fail {
    fn new(status: LoStatus, msg: impl Into<String>) -> Self {
        Fail(status, msg.into())
    }
}

fn set_error(msg: Option<String>) {
    let c = msg.map(|m| CString::new(m.replace('\0', " ")).expect("no interior nul"));
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(body: impl FnOnce() -> Result<(), Fail>) -> LoStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error(None);
            LoStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(Some(msg));
            status
        }
        Err(_) => {
            set_error(Some("internal panic".into()));
            LoStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::new(LoStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::new(LoStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn session<'a>(s: *const LoSession) -> Result<&'a LoSession, Fail> {
    s.as_ref()
        .ok_or_else(|| Fail::new(LoStatus::NullPointer, "session is null"))
}

unsafe fn session_mut<'a>(s: *mut LoSession) -> Result<&'a mut LoSession, Fail> {
    s.as_mut()
        .ok_or_else(|| Fail::new(LoStatus::NullPointer, "session is null"))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::new(LoStatus::NullPointer, "output pointer is null"));
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|e| Fail::new(LoStatus::Engine, e.to_string()))?;
    put(out, c.into_raw())
}

unsafe fn put_counts(out: *mut usize, len: usize, counts: &[usize]) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::new(LoStatus::NullPointer, "output array is null"));
    }
    if len < counts.len() {
        return Err(Fail::new(
            LoStatus::InvalidArgument,
            format!("output array holds {len}, need {}", counts.len()),
        ));
    }
    ptr::copy_nonoverlapping(counts.as_ptr(), out, counts.len());
    Ok(())
}

fn engine<E: std::fmt::Display>(e: E) -> Fail {
    Fail::new(LoStatus::Engine, e.to_string())
}

fn parse_err<E: std::fmt::Display>(e: E) -> Fail {
    Fail::new(LoStatus::Parse, e.to_string())
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|x| !x.is_empty())
}

/// Creates a session. `gens` is a comma-separated list, greatest first;
/// `ops` lists `name:arity` pairs the same way (empty for none); `lambda`
/// is `"symbolic"` or a rational such as `"2/3"`.
///
/// # Safety
/// String arguments must be null or valid NUL-terminated strings; `out`
/// must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn lo_session_new(
    gens: *const c_char,
    ops: *const c_char,
    lambda: *const c_char,
    out: *mut *mut LoSession,
) -> LoStatus {
    guard(|| {
        let gens: Vec<&str> = split_list(text(gens, "gens")?).collect();
        let mut op_list = Vec::new();
        for spec in split_list(text(ops, "ops")?) {
            let (name, arity) = spec.split_once(':').ok_or_else(|| {
                Fail::new(
                    LoStatus::InvalidArgument,
                    format!("`{spec}` is not name:arity"),
                )
            })?;
            let arity: usize = arity.parse().map_err(|_| {
                Fail::new(LoStatus::InvalidArgument, format!("bad arity in `{spec}`"))
            })?;
            op_list.push((name, arity));
        }
        let alphabet = Alphabet::new(&gens, &op_list)
            .map_err(|e| Fail::new(LoStatus::InvalidArgument, e.to_string()))?;
        let lambda = match text(lambda, "lambda")? {
            "symbolic" => LambdaMode::Symbolic,
            r => LambdaMode::Specialized(r.parse::<BigRational>().map_err(|_| {
                Fail::new(
                    LoStatus::InvalidArgument,
                    format!("`{r}` is not a rational"),
                )
            })?),
        };
        let s = Box::new(LoSession {
            rules: RuleSet::new(&alphabet, lambda),
        });
        put(out, Box::into_raw(s))
    })
}

/// Releases a session; null is ignored.
///
/// # Safety
/// `s` must be null or come from `lo_session_new`, and not be used again.
#[no_mangle]
pub unsafe extern "C" fn lo_session_free(s: *mut LoSession) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Replaces the rules by a preset family (`rb`, `mrb`, `nij` or
/// `perturbed`) truncated at `max_deg`.
///
/// # Safety
/// `s` must be a live session and `name` a valid string or null.
#[no_mangle]
pub unsafe extern "C" fn lo_session_load_preset(
    s: *mut LoSession,
    name: *const c_char,
    max_deg: usize,
) -> LoStatus {
    guard(|| {
        let s = session_mut(s)?;
        let kind: PresetKind = text(name, "preset")?
            .parse()
            .map_err(|e: String| Fail::new(LoStatus::InvalidArgument, e))?;
        s.rules = preset_rules(kind, s.rules.alphabet(), max_deg, s.rules.lambda().clone())
            .map_err(engine)?;
        Ok(())
    })
}

/// Parses `poly`, makes it monic and appends it; writes the new rule id.
///
/// # Safety
/// `s` must be a live session; `poly` a valid string; `out_id` null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn lo_session_add_rule(
    s: *mut LoSession,
    poly: *const c_char,
    out_id: *mut usize,
) -> LoStatus {
    guard(|| {
        let s = session_mut(s)?;
        let p = parse_poly(text(poly, "poly")?, s.rules.alphabet()).map_err(parse_err)?;
        let id = s.rules.push_monic(p).map_err(engine)?;
        if !out_id.is_null() {
            out_id.write(id);
        }
        Ok(())
    })
}

/// Number of rules in the session, 0 for a null session.
///
/// # Safety
/// `s` must be null or a live session.
#[no_mangle]
pub unsafe extern "C" fn lo_session_rule_count(s: *const LoSession) -> usize {
    s.as_ref().map_or(0, |s| s.rules.len())
}

/// Standard bracketing of an ALSW word, as text.
///
/// # Safety
/// `s` must be a live session, `word` a valid string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lo_bracket(
    s: *const LoSession,
    word: *const c_char,
    out: *mut *mut c_char,
) -> LoStatus {
    guard(|| {
        let s = session(s)?;
        let u = parse_word(text(word, "word")?, s.rules.alphabet()).map_err(parse_err)?;
        let tree = std_bracket(&u).map_err(engine)?;
        put_string(out, tree.to_string())
    })
}

/// Normal form of `poly` modulo the session's rules, as text.
///
/// # Safety
/// `s` must be a live session, `poly` a valid string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lo_normalize(
    s: *const LoSession,
    poly: *const c_char,
    out: *mut *mut c_char,
) -> LoStatus {
    guard(|| {
        let s = session(s)?;
        let p: LiePoly = parse_poly(text(poly, "poly")?, s.rules.alphabet()).map_err(parse_err)?;
        let p = match s.rules.lambda() {
            LambdaMode::Symbolic => p,
            LambdaMode::Specialized(r) => p.specialize(r),
        };
        put_string(out, s.rules.reduce(&p).to_string())
    })
}

/// Checks every Lie composition up to `max_deg`; writes the number of
/// compositions and how many are nontrivial.
///
/// # Safety
/// `s` must be a live session; output pointers writable.
#[no_mangle]
pub unsafe extern "C" fn lo_check_gsb(
    s: *const LoSession,
    max_deg: usize,
    out_total: *mut usize,
    out_nontrivial: *mut usize,
) -> LoStatus {
    guard(|| {
        let r = check_gsb(&session(s)?.rules, max_deg).map_err(engine)?;
        put(out_total, r.len())?;
        put(out_nontrivial, r.iter().filter(|c| !c.trivial).count())
    })
}

/// As `lo_check_gsb`, on the associative expansions.
///
/// # Safety
/// `s` must be a live session; output pointers writable.
#[no_mangle]
pub unsafe extern "C" fn lo_assoc_check(
    s: *const LoSession,
    max_deg: usize,
    out_total: *mut usize,
    out_nontrivial: *mut usize,
) -> LoStatus {
    guard(|| {
        let r = assoc_check(&session(s)?.rules, max_deg).map_err(engine)?;
        put(out_total, r.len())?;
        put(out_nontrivial, r.iter().filter(|c| !c.trivial).count())
    })
}

/// Completes the rule set up to `max_deg` in place; writes how many rules
/// were added.
///
/// # Safety
/// `s` must be a live session; `out_added` null or writable.
#[no_mangle]
pub unsafe extern "C" fn lo_complete(
    s: *mut LoSession,
    max_deg: usize,
    out_added: *mut usize,
) -> LoStatus {
    guard(|| {
        let s = session_mut(s)?;
        let done = complete(&s.rules, max_deg).map_err(engine)?;
        if !out_added.is_null() {
            out_added.write(done.added.len());
        }
        s.rules = done.rules;
        Ok(())
    })
}

/// Writes `|Irr|` for degrees `1..=max_deg` into `out[0..max_deg]`.
///
/// # Safety
/// `s` must be a live session; `out` must hold `len` elements.
#[no_mangle]
pub unsafe extern "C" fn lo_irr_counts(
    s: *const LoSession,
    max_deg: usize,
    out: *mut usize,
    len: usize,
) -> LoStatus {
    guard(|| {
        let counts = irr_counts(&session(s)?.rules, max_deg);
        put_counts(out, len, &counts)
    })
}

/// Quotient dimensions from the linear-algebra oracle, laid out as in
/// `lo_irr_counts`.
///
/// # Safety
/// `s` must be a live session; `out` must hold `len` elements.
#[no_mangle]
pub unsafe extern "C" fn lo_dim_oracle(
    s: *const LoSession,
    max_deg: usize,
    out: *mut usize,
    len: usize,
) -> LoStatus {
    guard(|| {
        let counts = dim_oracle(&session(s)?.rules, max_deg).map_err(engine)?;
        put_counts(out, len, &counts)
    })
}

/// Message for the last failed call on this thread, or null after a
/// success. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn lo_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by the library; null is ignored.
///
/// # Safety
/// `p` must be null or come from this library, and not be used again.
#[no_mangle]
pub unsafe extern "C" fn lo_string_free(p: *mut c_char) {
    if !p.is_null() {
        drop(CString::from_raw(p));
    }
}
