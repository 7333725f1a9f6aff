//! Problem files, the analysis pipeline and its JSON and SVG outputs.

pub mod parse;
pub mod pipeline;
pub mod report;
pub mod svg;

pub use parse::{parse_input, render, Payload, PlotBox, Problem};
pub use pipeline::{run_pipeline, PointReport, RegionReport};
pub use report::emit_json;
pub use svg::emit_svg;
