pub mod error;
pub mod graph;
pub mod labeling;
pub mod idealgen;
pub mod homology;
pub mod secant;
pub mod golden;
pub mod fixtures;
pub mod survey;
pub mod cli;
