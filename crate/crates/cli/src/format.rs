//! Function files: a JSON document listing every entry of a truncated table.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use preassoc::{Chain, TableError, TableFn, EPSILON};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub args: Vec<String>,
    pub value: String,
}

/// On-disk form of a [`TableFn`]. `codomain` is omitted for operations
/// whose codomain is the domain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionFile {
    pub domain: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codomain: Option<Vec<String>>,
    pub default: String,
    pub max_arity: usize,
    pub entries: Vec<Entry>,
}

impl FunctionFile {
    /// Canonical form: entries by arity, then arguments in chain order.
    pub fn from_table(f: &TableFn) -> FunctionFile {
        let space = f.space();
        let entries = space
            .nonempty()
            .map(|idx| Entry {
                args: f.domain().render(&space.tuple(idx)),
                value: f.render(f.at(idx)).to_string(),
            })
            .collect();
        let codomain = (f.codomain() != f.domain().elements()).then(|| f.codomain().to_vec());
        FunctionFile {
            domain: f.domain().elements().to_vec(),
            codomain,
            default: f.render(f.default_value()).to_string(),
            max_arity: f.max_arity(),
            entries,
        }
    }

    pub fn to_table(&self) -> Result<TableFn, TableError> {
        let domain = Chain::new(self.domain.iter().cloned())?;
        let codomain = self.codomain.clone().unwrap_or_else(|| self.domain.clone());
        TableFn::from_entries(
            domain,
            codomain,
            self.max_arity,
            &self.default,
            self.entries.iter().map(|e| (&e.args, &e.value)),
        )
    }
}

/// Canonical text: one entry per line, trailing newline.
pub fn serialize(f: &TableFn) -> String {
    let file = FunctionFile::from_table(f);
    let mut s = String::from("{\n");
    s += &format!("  \"domain\": {},\n", json(&file.domain));
    if let Some(c) = &file.codomain {
        s += &format!("  \"codomain\": {},\n", json(c));
    }
    s += &format!("  \"default\": {},\n", json(&file.default));
    s += &format!("  \"max_arity\": {},\n", file.max_arity);
    s += "  \"entries\": [\n";
    for (i, e) in file.entries.iter().enumerate() {
        let sep = if i + 1 == file.entries.len() { "" } else { "," };
        s += &format!("    {}{sep}\n", json(e));
    }
    s += "  ]\n}\n";
    s
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// One compact JSON document, no newline.
pub fn serialize_line(f: &TableFn) -> String {
    serde_json::to_string(&FunctionFile::from_table(f)).expect("serializable")
}

pub fn parse(text: &str) -> Result<TableFn, CliError> {
    let file: FunctionFile = serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if file.default != EPSILON && !file.codomain.as_ref().unwrap_or(&file.domain).contains(&file.default) {
        return Err(CliError::Invalid {
            field: "default".into(),
            message: format!("`{}` is neither ε nor a codomain symbol", file.default),
        });
    }
    file.to_table().map_err(|e| CliError::Invalid {
        field: match e {
            TableError::EntriesNotTotal { .. }
            | TableError::DuplicateEntry { .. }
            | TableError::ArityExceeded { .. }
            | TableError::UnknownSymbol(_)
            | TableError::ValueOutOfCodomain(_) => "entries",
            TableError::ZeroArity => "max_arity",
            _ => "domain",
        }
        .into(),
        message: e.to_string(),
    })
}

pub fn parse_lines(text: &str) -> Result<Vec<TableFn>, CliError> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(i, l)| {
            parse(l).map_err(|e| match e {
                CliError::Parse { column, message, .. } => CliError::Parse {
                    line: i + 1,
                    column,
                    message,
                },
                other => other,
            })
        })
        .collect()
}

/// `sha256:` digest of the canonical serialization.
pub fn digest(f: &TableFn) -> String {
    let hash = Sha256::digest(serialize(f).as_bytes());
    format!("sha256:{}", hex::encode(hash))
}
