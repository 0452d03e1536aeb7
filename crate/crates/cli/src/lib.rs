//! Library side of the `mindeg` command: expression parsing, evaluation,
//! caching and the command implementations, kept separate from argument
//! handling so the acceptance tests can drive them directly.

pub mod cache;
pub mod commands;
pub mod eval;
pub mod expr;
pub mod record;
pub mod roots_json;
