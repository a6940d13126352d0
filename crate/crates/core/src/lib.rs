pub mod algebra;
pub mod fixtures;
pub mod graph;
pub mod isomorph;
pub mod lift;
pub mod report;
pub mod search;
pub mod spectra;
