pub mod catalog;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod frobenius;
pub mod modform;
mod serde_fmt;
pub mod wdvv;

pub use error::{Error, Result};
