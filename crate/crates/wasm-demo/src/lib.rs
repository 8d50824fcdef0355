//! Browser bindings. Every entry point takes plain strings and numbers and
//! returns rendered text, so the page needs no glue beyond the generated
//! module.

use degen_core::cli::{
    compute_table, parse_argument, parse_lambda, render_catalog, render_reports, render_table,
    Format,
};
use degen_core::families::{FamilyId, FamilySpec};
use degen_core::rational::parse_rational;
use degen_core::{verify, IdentityId};
use wasm_bindgen::prelude::*;

/// Tables are kept small enough to render instantly in the page.
const MAX_N: usize = 20;

fn format(name: &str) -> Result<Format, String> {
    match name {
        "json" => Ok(Format::Json),
        "csv" => Ok(Format::Csv),
        other => Err(format!("unknown format {other:?}")),
    }
}

fn check_n(max_n: usize) -> Result<(), String> {
    if max_n > MAX_N {
        return Err(format!("max n is limited to {MAX_N} in the demo"));
    }
    Ok(())
}

pub fn family_table(
    family: &str,
    order: &str,
    max_n: usize,
    lambda: &str,
    x: &str,
    fmt: &str,
) -> Result<String, String> {
    check_n(max_n)?;
    let id: FamilyId = family.parse()?;
    let order = parse_rational(order).map_err(|e| e.to_string())?;
    let spec = FamilySpec::new(id)
        .order(order)
        .argument(parse_argument(x)?)
        .lambda(parse_lambda(lambda)?);
    let table = compute_table(&spec, max_n, max_n).map_err(|e| e.to_string())?;
    Ok(render_table(&table, format(fmt)?))
}

pub fn identity_report(
    identity: &str,
    max_n: usize,
    max_order: usize,
    fmt: &str,
) -> Result<String, String> {
    check_n(max_n)?;
    let id: IdentityId = identity
        .parse()
        .map_err(|e: degen_core::identities::VerifyError| e.to_string())?;
    let report = verify(id, max_n, max_order, max_n).map_err(|e| e.to_string())?;
    Ok(render_reports(&[report], format(fmt)?))
}

/// Tabulates a family; `lambda` is `"symbolic"` or a rational, `x` is
/// `"x"`, a rational, or `"x+c"`.
#[wasm_bindgen]
pub fn compute(
    family: &str,
    order: &str,
    max_n: usize,
    lambda: &str,
    x: &str,
    format: &str,
) -> Result<String, JsError> {
    family_table(family, order, max_n, lambda, x, format).map_err(|e| JsError::new(&e))
}

/// Verifies one identity with truncation equal to `max_n`.
#[wasm_bindgen(js_name = verifyIdentity)]
pub fn verify_identity(
    identity: &str,
    max_n: usize,
    max_order: usize,
    format: &str,
) -> Result<String, JsError> {
    identity_report(identity, max_n, max_order, format).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = listFamilies)]
pub fn list_families() -> String {
    render_catalog()
}

#[wasm_bindgen(js_name = listIdentities)]
pub fn list_identities() -> String {
    IdentityId::ALL
        .iter()
        .map(|id| format!("{}\t{}\n", id.name(), id.statement()))
        .collect()
}
