pub mod algebra;
pub mod cli;
pub mod cohomology;
pub mod constructions;
pub mod document;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod nijenhuis;
pub mod operators;
pub mod paracomplex;
pub mod report;
pub mod scalar;
pub mod search;
pub mod smatrix;
pub mod tensor;
pub mod verdict;
