pub mod dwt;
pub use dwt::{dwt, idwt, DecompositionResult};
