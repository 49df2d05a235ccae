//! A finite, executable model of the bicategory of open functors.
//!
//! Categories here are finite and explicit — objects, arrows, identities and
//! a composition table stored as data — so every categorical law can be
//! checked exhaustively and every equality is strict structural equality.
//! On top of them live *open* functors: a functor that, besides its input,
//! consumes an external interaction drawn from a presheaf of possibilities.
//! An open functor `F : C ⊸ D` is a presheaf `F_alpha` on `C` together with
//! a classical functor `F_beta` from the category of elements of `F_alpha`
//! into `D`.
//!
//! Composing open functors pairs interactions up, and the pair nesting
//! records the composition nesting, so composition is associative and unital
//! only up to the invertible 2-cells of [`coherence`]: the unitors and the
//! associator. The [`coherence`] module also turns the governing laws —
//! unit and associativity of vertical composition, functoriality of
//! horizontal composition, naturality of the structural cells, and the
//! pentagon and triangle identities — into executable checks over generated
//! instance families.
//!
//! ```
//! use opencat::{compose_open, left_unitor, FinCategory, OpenFunctor};
//!
//! let arrow = FinCategory::builder()
//!     .object("a")
//!     .object("b")
//!     .arrow("f", "a", "b")
//!     .build();
//! assert!(arrow.validate().is_valid());
//!
//! let id = OpenFunctor::identity(&arrow);
//! let composed = compose_open(&id, &id).unwrap();
//! // Composition is unital only up to the unitor 2-cells:
//! assert_ne!(composed, id);
//! assert!(left_unitor(&id).inverse().is_some());
//! ```
//!
//! The `examples/` directory walks through each capability; the `opencat`
//! binary exposes validation, composition, application, generation and the
//! law suite on serialized documents.

#![forbid(unsafe_code)]

pub mod coherence;
pub mod elements;
mod error;
pub mod fincat;
pub mod harness;
pub mod openfun;
pub mod opennat;

pub use coherence::{
    associator, compare_as_law, first_difference, left_unitor, right_unitor, Difference,
    LawChecker, LawReport, Verdict,
};
pub use elements::{
    element_arrow_id, element_object_id, vcomp_presheaf_morphism, ElementValue, Presheaf,
    PresheafMorphism,
};
pub use error::{Error, Result};
pub use fincat::{
    compose_functors, hcomp_nat, vcomp_nat, ArrId, Arrow, FinCategory, FinFunctor, NatTrans,
    ObjId, ValidationReport, Violation, ViolationKind,
};
pub use openfun::{compose_open, OpenFunctor};
pub use opennat::{hcomp_open, open_nat_equal, vcomp_open, OpenNatTrans};
