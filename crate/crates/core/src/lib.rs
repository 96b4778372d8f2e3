//! Exact Galois combinatorics for abelian varieties over the algebraic
//! closure of a finite field.
//!
//! A CM field `K`, Galois over `Q`, is modeled only through its Galois
//! group `G` (a Cayley table), complex conjugation `iota` and the
//! decomposition group `D` of a chosen `p`-adic prime. From that datum the
//! crate enumerates isogeny classes of simple abelian varieties split by
//! `K`, computes the dimensions of their Lefschetz and Frobenius groups by
//! exact lattice rank, and builds the CM-type machinery (pair G-sets,
//! signed permutation representations, hyperplane-region data).
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod builtin;
pub mod cm_types;
pub mod datum;
mod error;
pub mod frobenius;
pub mod group;
pub mod lattice;
pub mod tate;

pub use crate::error::{Error, Result};

pub use crate::cm_types::{
    act_on_cm_type, all_cm_types, cm_type_pair_gset, hazama_datum, orbit_factorization, plus_types, reduce_cm_type,
    region_bijection, signed_representation, CmType, HazamaDatum, OrbitFactor, PairGSet, RegionBijection, RhoChecks,
    SignedPermutation, SignedRepresentation,
};
pub use crate::datum::CmGaloisDatum;
pub use crate::frobenius::{
    census, census_bounded, enumerate_frobenius_functions, enumerate_frobenius_functions_bounded,
    satisfies_isolated_pair, stabilizer_h, CensusReport, ClassStabilizer, ClosedForm, FrobeniusFunction,
    DEFAULT_ENUMERATION_CAP,
};
pub use crate::group::{
    group_from_generators, group_from_generators_bounded, left_cosets, subgroup_generated, CosetSpace, Element,
    FiniteGroup, GroupAction, Subgroup, DEFAULT_ORDER_BOUND,
};
pub use crate::lattice::integer_rank;
pub use crate::tate::{
    analyze, frobenius_dimension, kowalski_independent, lefschetz_dimension, valuation_matrix, RowLabel, TateReport,
    ValuationMatrix,
};
