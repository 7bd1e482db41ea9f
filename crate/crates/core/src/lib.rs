pub mod error;
pub mod exact;
pub mod herzog_kuhl;
pub mod rules;
pub mod codim3;
pub mod dioph;
pub mod gorenstein;
pub mod report;
pub mod cli;
