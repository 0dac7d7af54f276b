use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::CliError;
use equilines::groebner::content_hash;

/// A parsed input file with the hash of its raw bytes.
#[derive(Debug)]
pub struct Loaded<T> {
    pub value: T,
    pub hash: String,
}

pub fn read_bytes(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<Loaded<T>, CliError> {
    let bytes = read_bytes(path)?;
    let value = serde_json::from_slice(&bytes).map_err(|source| CliError::Json { path: path.to_path_buf(), source })?;
    Ok(Loaded { value, hash: content_hash(&bytes) })
}

/// Pretty JSON with a trailing newline. Key order follows field order.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("artifact types serialize infallibly");
    text.push('\n');
    text
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    let io_err = |source| CliError::Io { path: path.to_path_buf(), source };
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(io_err)?;
    }
    fs::write(path, text).map_err(io_err)
}
