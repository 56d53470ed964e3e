//! Exact apolarity toolkit: apolar ideals and Macaulay inverse systems,
//! Waring decompositions of cubics, rational normal scrolls, canonical
//! curves of low gonality, and plane-model numerology.

pub mod apolarity;
pub mod curvegen;
pub mod error;
pub mod exact;
pub mod numeric;
pub mod pipeline;
pub mod planemodel;
pub mod report;
pub mod scroll;
pub mod univariate;
pub mod waring;

pub use error::{Error, Result};
