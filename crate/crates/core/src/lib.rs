//! Exact combinatorics for labeled plane trees, cover-inclusive Dyck tilings and
//! their rational generalizations.

pub mod dyck;
pub mod cli;
pub mod error;
pub mod golden;
pub mod label;
pub mod lgv;
pub mod path;
pub mod poset;
pub mod qpoly;
pub mod rational;
pub mod tau;
pub mod tiling;
pub mod tree;

pub use error::{Error, Result};
pub use label::{Direction, LabeledTree, Reading};
pub use path::{DyckPath, Step};
pub use qpoly::QPoly;
pub use tiling::{Tile, Tiling};
pub use tree::PlaneTree;
