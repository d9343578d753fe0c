//! Brute-force permutation group engine: π-subgroups up to conjugacy,
//! maximal π-subgroup classes, Hall existence and composition factors.
//! Every element of the group is enumerated, so this is meant for groups of
//! order up to about 10⁴.

mod error;
mod group;
mod perm;
mod pi;
mod series;

pub use error::{OracleError, Result};
pub use group::{PermGroup, Subgroup, DEFAULT_ORDER_CAP};
pub use perm::{parse_generators, Permutation, MAX_DEGREE};
pub use pi::{
    hall_exists, is_dpi, pi_maximal_classes, pi_part, pi_subgroups, PiLattice, SubgroupClass, SubgroupRecord,
    DEFAULT_SUBGROUP_BUDGET,
};
pub use series::{composition_factors, composition_factors_random};

/// Read a generator file and close it up.
pub fn load_generators(path: impl AsRef<std::path::Path>) -> Result<PermGroup> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| OracleError::Parse(format!("{}: {e}", path.display())))?;
    PermGroup::generate(&parse_generators(&text)?)
}
