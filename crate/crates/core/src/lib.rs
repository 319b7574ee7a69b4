pub mod bounds;
pub mod cli;
pub mod code;
pub mod descent;
pub mod entropy;
pub mod error;
pub mod graph;
pub mod math;
pub mod pchk;
pub mod spectrum;
pub mod vector;
