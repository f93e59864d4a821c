//! File formats and rendering.

mod game_doc;
mod svg;
mod value_doc;

pub use game_doc::{
    parse_game, parse_game_or_reduction, parse_reduction, serialize_game, serialize_reduction, ReductionDocument,
};
pub use svg::{render_diagram, RenderOptions};
pub use value_doc::{Breakpoint, ValueDocument};
