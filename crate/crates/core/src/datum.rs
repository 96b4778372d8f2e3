//! The CM Galois datum `(G, ι, D)` and the prime set `W = G/D`.

use alloc::vec::Vec;

use crate::group::{left_cosets, subgroup_generated, CosetSpace, Element, FiniteGroup, Subgroup};
use crate::{Error, Result};

/// Galois shadow of a CM field `K` with complex conjugation `ι` and the
/// decomposition group `D` of a `p`-adic prime.
///
/// `W` is the set of left cosets `G/D`; `G` acts on it by left
/// multiplication and `ι` acts as a fixed-point-free involution. Every
/// accepted datum satisfies `d·|W| = |G|` and `|W| = 2t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmGaloisDatum {
    iota: Element,
    primes: CosetSpace,
    iota_pairing: Vec<usize>,
    representatives: Vec<usize>,
    decomposition_normal: bool,
}

impl CmGaloisDatum {
    /// Validates `ι` (a central involution), generates `D` from `d_gens`
    /// and rejects data where `ι` fixes a prime.
    pub fn new(group: &FiniteGroup, iota: Element, d_gens: &[Element]) -> Result<Self> {
        group.check(iota)?;
        let order = group.element_order(iota);
        if order != 2 {
            return Err(Error::IotaNotInvolution { order });
        }
        if let Some(g) = group.elements().find(|&g| !group.commutes(iota, g)) {
            return Err(Error::IotaNotCentral(g));
        }
        let decomposition = subgroup_generated(group, d_gens)?;
        let primes = left_cosets(group, &decomposition)?;
        let iota_pairing: Vec<usize> = (0..primes.len()).map(|w| primes.act(iota, w)).collect();
        if let Some(w) = (0..primes.len()).find(|&w| iota_pairing[w] == w) {
            return Err(Error::IotaFixesAPrime(w));
        }
        let representatives = (0..primes.len()).filter(|&w| w < iota_pairing[w]).collect();
        let decomposition_normal = decomposition.is_normal();
        Ok(CmGaloisDatum { iota, primes, iota_pairing, representatives, decomposition_normal })
    }

    pub fn group(&self) -> &FiniteGroup {
        self.primes.group()
    }

    pub fn iota(&self) -> Element {
        self.iota
    }

    pub fn decomposition(&self) -> &Subgroup {
        self.primes.subgroup()
    }

    /// `W = G/D` with its left `G`-action.
    pub fn primes(&self) -> &CosetSpace {
        &self.primes
    }

    pub fn prime_count(&self) -> usize {
        self.primes.len()
    }

    /// `d = |D|`, the local degree.
    pub fn local_degree(&self) -> usize {
        self.decomposition().order()
    }

    /// `t = |W|/2`.
    pub fn half_count(&self) -> usize {
        self.primes.len() / 2
    }

    pub fn iota_pairing(&self) -> &[usize] {
        &self.iota_pairing
    }

    /// Lowest point of each `ι`-orbit on `W`, in increasing order.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    #[inline]
    pub fn act(&self, g: Element, w: usize) -> usize {
        self.primes.act(g, w)
    }

    pub fn is_decomposition_normal(&self) -> bool {
        self.decomposition_normal
    }
}
