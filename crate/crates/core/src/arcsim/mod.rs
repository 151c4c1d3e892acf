pub mod arc;
pub use arc::{arc_step, ArcParams, ArcState, G_FLOOR};
