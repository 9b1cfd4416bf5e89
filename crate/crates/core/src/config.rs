//! Runtime configuration shared by the library entry points and the CLI.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Precision {
    Double,
    /// Decimal digits, at least 15.
    High(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OutputFormat {
    Json,
    Table,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunConfig {
    pub cache_dir: Option<PathBuf>,
    pub precision: Precision,
    pub character_cutoff: usize,
    /// Hard cap on the total number of (grade, weight) entries a graded
    /// character may hold before the computation refuses to continue.
    pub max_character_entries: usize,
    pub output: OutputFormat,
    /// Hard cap on alcove sizes accepted by the S-matrix builder.
    pub max_alcove: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            cache_dir: std::env::var_os("LEVELONE_CACHE_DIR").map(PathBuf::from),
            precision: Precision::Double,
            character_cutoff: 3,
            max_character_entries: 2_000_000,
            output: OutputFormat::Json,
            max_alcove: 4096,
        }
    }
}
