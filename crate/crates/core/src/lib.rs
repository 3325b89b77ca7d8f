//! Sums of element orders and isolated subgroups of finite abelian groups.
//!
//! Groups are kept in canonical primary form (primes ascending, exponents
//! ascending within a prime) and elements are residue vectors in that
//! layout. Every quantity has at least two independent implementations so
//! they can be checked against each other: ψ by brute force and by closed
//! form, isolation by definition, by a ψ identity and by structure, and the
//! subgroup lattice by join closure and by Goursat data.

pub mod arith;
pub mod error;
pub mod goursat;
pub mod group;
pub mod harness;
pub mod isolation;
pub mod lattice;
pub mod psi;
pub mod snf;
pub mod subgroup;

pub use error::{Error, Result};
pub use goursat::goursat_subgroups;
pub use group::{
    element_order, group_op, make_group, omega1, AbelianGroup, Element, Limits, PPartition,
};
pub use isolation::{
    count_isolated, count_isolated_order_p, enumerate_isolated, is_isolated, is_isolated_brute,
    is_isolated_psi, is_isolated_structural, socle_of_radical, IsolationVerdict, Method,
};
pub use lattice::{all_cyclic_subgroups, all_subgroups, Backend, SubgroupLattice};
pub use psi::{psi_brute, psi_closed, psi_closed_p, psi_relative, PsiValue};
pub use snf::{quotient_type, smith_normal_form, subgroup_type};
pub use subgroup::{cyclic_subgroup, intersect, Subgroup};
