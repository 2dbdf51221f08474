//! The multigraph witnesses `(H, k, M, orientation)`, the gadget library and
//! the expansion of a witness into a cubic graph of order `18k` with an
//! explicit dissociation set of size `10k`.

mod expand;
mod library;
mod orientation;
mod validate;
mod witness;

pub use expand::{canonical_dissociation_set, check_witness, expand_to_Gk, ExpansionMap};
pub use library::{gadget, gadget_library, validate_gadget, Gadget, GadgetKind};
pub use orientation::{brute_force_orientation, find_orientation};
pub use validate::{orientation_problems, validate_H, Check, HValidation};
pub use witness::{builtin_witness, HWitness, LeafChoices, WITNESS_NAMES};
