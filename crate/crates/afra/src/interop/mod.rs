//! Neighbouring argumentation models and translations between them and
//! the recursive-attack model.

mod eaf;
mod hoaf;

pub use eaf::{
    eaf_defeat_s, eaf_is_conflict_free, eaf_reinstatement_exists, eaf_semantics, eaf_to_afra,
    Eaf, EAF_ENUM_BOUND,
};
pub use hoaf::{afra_to_hoaf, hoaf_semantics, hoaf_to_afra, Hoaf};
