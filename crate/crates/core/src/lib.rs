pub mod drawers;
pub mod error;
pub mod graph;
pub mod normal_form;
pub mod io;
pub mod orderings;
pub mod verifier;

pub use error::{Error, Result};
