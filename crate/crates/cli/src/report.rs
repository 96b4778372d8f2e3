//! Serialized report shapes. Field order is the output order.
//!
//! CSV columns (a header row precedes the data rows):
//!
//! - census:    `datum_hash,group_order,d,t,enumerated,dplus1_pow_t,t_pow_d,isolated_pair_count,isolated_pair_formula,version`
//! - analyze:   `datum_hash,top_values,H_index,s,dim_L,dim_P,exotic,kowalski_independent,version`
//! - enumerate: `datum_hash,index,top_values,values,version`
//! - reduce:    `datum_hash,cm_type,plus,values,version`
//! - hazama:    `datum_hash,m,dimension,orbit,size,plus_size,stabilizer_order,version`
//!
//! List-valued cells are `;`-separated.

use cmtate::{ClosedForm, TateReport};
use serde::Serialize;
use serde_json::Value;

pub const TOOL: &str = "cmtate";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize)]
pub struct Envelope<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub datum_hash: String,
    #[serde(flatten)]
    pub body: T,
}

#[derive(Debug, Serialize)]
pub struct CensusBody {
    pub group_order: usize,
    pub d: usize,
    pub t: usize,
    pub enumerated: usize,
    pub dplus1_pow_t: Value,
    pub t_pow_d: Value,
    pub isolated_pair_count: usize,
    pub isolated_pair_formula: Value,
}

#[derive(Debug, Serialize)]
pub struct TateReportJson {
    pub f: Vec<u32>,
    pub values: Vec<u32>,
    #[serde(rename = "H_index")]
    pub h_index: usize,
    pub s: usize,
    #[serde(rename = "dim_L")]
    pub dim_l: usize,
    #[serde(rename = "dim_P")]
    pub dim_p: usize,
    pub exotic: bool,
    pub kowalski_independent: bool,
}

impl TateReportJson {
    pub fn new(top: Vec<u32>, values: Vec<u32>, r: &TateReport) -> Self {
        TateReportJson {
            f: top,
            values,
            h_index: r.h_index,
            s: r.s,
            dim_l: r.dim_l,
            dim_p: r.dim_p,
            exotic: r.exotic,
            kowalski_independent: r.kowalski_independent,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct AnalyzeBody {
    pub d: usize,
    pub t: usize,
    pub reports: Vec<TateReportJson>,
}

#[derive(Debug, Serialize)]
pub struct FunctionJson {
    pub top_values: Vec<u32>,
    pub values: Vec<u32>,
}

#[derive(Debug, Serialize)]
pub struct EnumerateBody {
    pub d: usize,
    pub t: usize,
    pub count: usize,
    pub functions: Vec<FunctionJson>,
}

#[derive(Debug, Serialize)]
pub struct ReductionJson {
    pub cm_type: Vec<usize>,
    pub plus: bool,
    pub top_values: Vec<u32>,
    pub values: Vec<u32>,
}

#[derive(Debug, Serialize)]
pub struct ReduceBody {
    pub d: usize,
    pub t: usize,
    pub reductions: Vec<ReductionJson>,
}

#[derive(Debug, Serialize)]
pub struct OrbitJson {
    pub size: usize,
    pub plus_size: usize,
    pub stabilizer_order: usize,
}

#[derive(Debug, Serialize)]
pub struct RhoChecksJson {
    pub homomorphism: bool,
    pub iota_minus_one: bool,
    pub hyperplane_transitive: bool,
    pub faithful: bool,
}

#[derive(Debug, Serialize)]
pub struct HazamaBody {
    pub m: usize,
    pub dimension: usize,
    pub ordering: Vec<usize>,
    pub orbits: Vec<OrbitJson>,
    pub rho_checks: RhoChecksJson,
}

/// Integers that fit in `u64` as numbers, larger ones as decimal strings.
pub fn big_number(v: Option<u128>) -> Value {
    match v {
        Some(x) => match u64::try_from(x) {
            Ok(small) => Value::from(small),
            Err(_) => Value::from(x.to_string()),
        },
        None => Value::Null,
    }
}

/// Integer, `"numer/denom"` string, or null.
pub fn closed_form(v: ClosedForm) -> Value {
    match v {
        ClosedForm::Integer(n) => match i64::try_from(n) {
            Ok(small) => Value::from(small),
            Err(_) => Value::from(n.to_string()),
        },
        ClosedForm::Ratio { numer, denom } => Value::from(format!("{numer}/{denom}")),
        ClosedForm::Undefined => Value::Null,
    }
}

/// CSV cell text for a JSON scalar; null is empty.
pub fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(";")
}
