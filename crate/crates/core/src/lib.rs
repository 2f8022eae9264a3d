pub mod cli;
pub mod embedding;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod host;
pub mod isoperimetric;
pub mod search;
