//! Browser bindings. Every export takes plain strings and returns a JSON envelope:
//! `{"ok": true, "text": ..., "report": {...}}` or `{"ok": false, "error": ...}`.

use dedekind_core::criterion::{Mode, Options};
use dedekind_core::parse::{parse_field_element, parse_poly};
use dedekind_core::report;
use dedekind_core::{Error, ValuedField};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn envelope(result: Result<(String, Value), Error>) -> String {
    match result {
        Ok((text, report)) => json!({ "ok": true, "text": text, "report": report }),
        Err(e) => json!({ "ok": false, "error": e.to_string() }),
    }
    .to_string()
}

fn to_value<T: serde::Serialize>(report: &T) -> Value {
    serde_json::to_value(report).expect("report serializes")
}

fn field(text: &str) -> Result<ValuedField, Error> {
    text.trim().parse()
}

/// Closedness test with witnesses. `mode` is `strict` or `assert`.
#[wasm_bindgen]
pub fn check(descriptor: &str, poly: &str, mode: &str) -> String {
    envelope((|| {
        let k = field(descriptor)?;
        let f = parse_poly(&k, poly)?;
        let mode = match mode {
            "strict" => Mode::Strict,
            "assert" | "" => Mode::Assert,
            other => return Err(Error::Parse(format!("unknown mode {other:?}"))),
        };
        let r = report::check(
            &f,
            &Options {
                mode,
                ..Options::default()
            },
        )?;
        Ok((r.to_string(), to_value(&r)))
    })())
}

#[wasm_bindgen]
pub fn eisenstein(descriptor: &str, poly: &str) -> String {
    envelope((|| {
        let k = field(descriptor)?;
        let r = report::eisenstein(&parse_poly(&k, poly)?)?;
        Ok((r.to_string(), to_value(&r)))
    })())
}

/// Rewrites `x^n - a` as a v-Eisenstein polynomial.
#[wasm_bindgen]
pub fn transform(descriptor: &str, n: u32, a: &str) -> String {
    envelope((|| {
        let k = field(descriptor)?;
        let a = parse_field_element(&k, a)?;
        let r = report::transform(&k, n, &a)?;
        Ok((r.to_string(), to_value(&r)))
    })())
}
