//! Legendrian and transverse front diagrams, contact (±1)-surgery
//! presentations, Lutz twists and the homotopy invariants `c1` and `d3`.

pub mod front;
pub mod homotopy;
pub mod linalg;
pub mod lutz;
pub mod surgery;

pub use front::{
    parse_front_file, ClassicalInvariants, FrontDiagram, FrontError, FrontEvent, FrontFile, Orientation,
    ParseError, TransverseEvent, TransverseFront, ValidationReport, Zigzag,
};
pub use homotopy::{chern_class, d3, ChernClass, D3Value, HomotopyError};
pub use linalg::{IntMatrix, IntSymMatrix, Rational};
pub use lutz::{lutz_pair, s3_overtwisted, LutzError, LutzSign};
pub use surgery::{ContactCoefficient, SurgeryError, SurgeryPresentation};
