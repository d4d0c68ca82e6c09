//! Combinatorics of plat presentations of links in the 3-sphere.
//!
//! A link is presented as the plat closure of a braid word on `2n` strands:
//! adjacent top endpoints `(2i-1, 2i)` are joined by top arcs and adjacent
//! bottom endpoints by bottom arcs. On top of that carrier this crate offers
//!
//! - [`braid`]: braid words and the permutation they induce on endpoints,
//! - [`plat`]: component tracing, orientations, the special-plat predicates,
//!   linking numbers and the `(0, n)`-decomposition data,
//! - [`normal_form`]: the four plat moves and normalization to a special plat,
//! - [`covering`]: monodromy data of `p`-fold cyclic branched coverings, the
//!   five-class hierarchy and the `p`-symmetric Heegaard genus bound.

pub mod braid;
pub mod covering;
pub mod normal_form;
pub mod plat;

pub use braid::{BraidError, BraidWord, Permutation};
pub use covering::{
    bridge_from_genus, heegaard_genus_bound, symmetry_exponent_ok, CoveringClass, CoveringError,
    CoveringSpec,
};
pub use normal_form::{
    apply_move, normalize_to_special, track_components, CarriedComponent, Move, MoveKind,
    MoveRecord, NormalizeError,
};
pub use plat::{ArcDirection, LinkTrace, LinkingMatrix, PlatPresentation, StrandDirection};
