//! Finite categories presented by composition tables, with deciders for all
//! functor properties: exhaustive validation, morphism classes, functor
//! properties, and the binatural-family searches for semiseparability,
//! separability and natural fullness.

pub mod category;
pub mod functor;
pub mod props;
pub mod search;

pub use category::{CategoryBuilder, FinCategory, MorData};
pub use functor::{FinFunctor, IdempotentNat, NatTrans};
pub use props::{
    constant_generated, functor_property, morphism_class, nat_endo_monoid, ClassVerdict,
    ConstantGeneratedVerdict, FunctorProperty, MorphismClass, PropertyVerdict,
};
pub use search::{
    associated_idempotent, blind_decide_retraction, compose_retractions, decide_retraction,
    relative_separable, retract_transfer, HomRetraction, RetractionMode, RetractionVerdict,
    TransferOutcome, DEFAULT_SEARCH_BOUND,
};
