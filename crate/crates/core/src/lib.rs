pub mod cli;
pub mod scalars;
pub mod linalg;
pub mod algebra;
pub mod fusion;
pub mod catalog;
pub mod relations;
pub mod universal;
pub mod report;
