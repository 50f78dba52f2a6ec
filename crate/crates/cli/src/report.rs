//! Machine-readable reports.

use serde::Serialize;

use preassoc::{CheckError, Factorization, FiniteMap, Property, TableFn, Verdict, Witness};

use crate::format::digest;

pub const SCHEMA_VERSION: u32 = 1;

/// The JSON schema reports conform to.
pub const SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Clone, Debug, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

impl Default for Tool {
    fn default() -> Self {
        Tool {
            name: "preassoc",
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FunctionId {
    pub digest: String,
    pub max_arity: usize,
}

impl FunctionId {
    pub fn of(f: &TableFn) -> Self {
        FunctionId {
            digest: digest(f),
            max_arity: f.max_arity(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyRecord {
    pub property: Property,
    pub holds: bool,
    pub cases_checked: u64,
    pub witness: Option<Witness>,
    pub max_arity: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl PropertyRecord {
    pub fn new(property: Property, max_arity: usize, result: &Result<Verdict, CheckError>) -> Self {
        match result {
            Ok(v) => PropertyRecord {
                property,
                holds: v.holds,
                cases_checked: v.cases_checked,
                witness: v.witness.clone(),
                max_arity: v.max_arity,
                error: None,
            },
            Err(e) => PropertyRecord {
                property,
                holds: false,
                cases_checked: 0,
                witness: None,
                max_arity,
                error: Some(e.to_string()),
            },
        }
    }
}

/// A map as its list of `[argument, value]` pairs.
pub fn graph(m: &FiniteMap) -> Vec<[String; 2]> {
    m.pairs().map(|(x, y)| [x.to_string(), y.to_string()]).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorizationRecord {
    pub succeeded: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failed_precondition: Option<PropertyRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<FunctionId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<[String; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<Vec<[String; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f1_injective: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h1_injective: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h1_identity: Option<bool>,
}

impl FactorizationRecord {
    pub fn success(fact: &Factorization) -> Self {
        FactorizationRecord {
            succeeded: true,
            failed_precondition: None,
            error: None,
            h: Some(FunctionId::of(&fact.h)),
            f: Some(graph(&fact.f)),
            g: Some(graph(&fact.g)),
            f1_injective: Some(fact.f1_injective),
            h1_injective: Some(fact.h1_injective),
            h1_identity: Some(fact.h1_identity),
        }
    }

    pub fn failure(precondition: Option<&Verdict>, error: String) -> Self {
        FactorizationRecord {
            succeeded: false,
            failed_precondition: precondition
                .map(|v| PropertyRecord::new(v.property, v.max_arity, &Ok(v.clone()))),
            error: Some(error),
            h: None,
            f: None,
            g: None,
            f1_injective: None,
            h1_injective: None,
            h1_identity: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportFile {
    pub schema_version: u32,
    pub tool: Tool,
    pub function: FunctionId,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub results: Vec<PropertyRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factorization: Option<FactorizationRecord>,
}

impl ReportFile {
    pub fn new(f: &TableFn) -> Self {
        ReportFile {
            schema_version: SCHEMA_VERSION,
            tool: Tool::default(),
            function: FunctionId::of(f),
            results: Vec::new(),
            factorization: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}
