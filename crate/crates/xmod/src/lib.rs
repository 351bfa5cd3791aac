//! JSON input/output and the command-line front end for `xmod-core`.

pub mod app;
pub mod input;
pub mod output;

use output::ErrorJson;

/// JSON Schemas of every document the CLI reads or writes.
pub const SCHEMAS: &str = include_str!("schemas.json");

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] xmod_core::Error),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Parse(String),
}

impl CliError {
    /// 1 for domain errors, 2 for I/O and parse errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Io(_) | CliError::Parse(_) => 2,
        }
    }

    pub fn to_json(&self) -> ErrorJson {
        match self {
            CliError::Domain(e) => {
                let debug = format!("{:?}", e);
                let code: String = debug.chars().take_while(|c| c.is_alphanumeric()).collect();
                let witness =
                    (debug.len() > code.len()).then(|| debug[code.len()..].trim().to_string());
                ErrorJson {
                    code,
                    message: e.to_string(),
                    witness,
                }
            }
            CliError::Io(m) => ErrorJson {
                code: "Io".into(),
                message: m.clone(),
                witness: None,
            },
            CliError::Parse(m) => ErrorJson {
                code: "Parse".into(),
                message: m.clone(),
                witness: None,
            },
        }
    }
}
