pub mod error;
pub mod boxball;
pub mod cli;
pub mod crystals;
pub mod loopsym;
pub mod rigged;
pub mod tropical;
pub mod tableaux;

pub use error::{Error, Result};
