//! Exact computations with type-A Lie superalgebras and their Drinfeld super
//! Yangians.
//!
//! The crate is organised in layers:
//!
//! * [`exact`]: exact scalars, ħ-polynomials and truncated power series.
//! * [`rootdata`]: root data of a parity diagram in the supermatrix realization,
//!   with the Casimir tensor and the cobrackets built from it.
//! * [`weyl`]: the Weyl group and the complete Weyl group acting on diagrams.
//! * [`enveloping`]: PBW normal forms in the enveloping algebra of the current algebra.
//! * [`yangian`]: the truncated super Yangian with its Hopf structure and PBW certification.
//! * [`loopmap`]: scalar series and the map from the quantum loop superalgebra
//!   into the completed Yangian.
//! * [`classify`]: Hopf and superalgebra classes of diagrams with explicit
//!   isomorphisms.
pub mod classify;
pub mod enveloping;
pub mod exact;
pub mod loopmap;
pub mod rootdata;
pub mod weyl;
pub mod yangian;
