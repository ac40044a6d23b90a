//! Text formats and proof scripts.

pub mod script;
pub mod text;
