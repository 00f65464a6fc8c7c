//! Exact combinatorics for normality of Schubert varieties in twisted affine
//! Grassmannians and affine flag varieties, and of local models.

pub mod affine;
pub mod cartan;
pub mod dominance;
pub mod error;
pub mod group;
pub mod lattice;
pub mod locmodel;
pub mod normality;
pub mod render;
pub mod rootdata;

pub use cartan::{Letter, RootSystem, SimpleType};
pub use error::{Error, Result};
pub use group::{Class, Group, GroupSpec};
pub use normality::{Status, Verdict};


/// Integer scalar used outside the generic lattice layer.
pub type Int = i64;
/// Rational scalar used for fundamental coweights and dominance solves.
pub type Rat = num_rational::Ratio<i64>;
/// Integer matrix over [`Int`].
pub type Mat = lattice::Matrix<Int>;
