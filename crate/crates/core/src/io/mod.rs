//! File formats, built-in instances and the random instance generator.

mod generate;
mod instances;
mod svg;

pub use generate::{generate_instance, generate_with, GenOptions, InstanceKind};
pub use instances::{named_instance, NAMED};
pub use svg::render_svg;

use crate::error::{Error, Result};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Pretty JSON with keys sorted at every level and a trailing LF.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value).map_err(|e| Error::Format(e.to_string()))?;
    let mut s = serde_json::to_string_pretty(&v).map_err(|e| Error::Format(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}
