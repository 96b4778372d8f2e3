//! CM types, pair G-sets and the hyperplane-region construction.
//!
//! A CM type on `K` is a subset `Φ ⊂ G` with `G = Φ ⊔ ιΦ`. `G` acts on CM
//! types by `gΦ = Φ∘g⁻¹`. Fixing an ordered CM type `(φ₁ = 1, φ₂, …, φ_m)`
//! gives a signed permutation representation `ρ_Φ: G → {±}^m ⋊ S_m` and a
//! `G`-equivariant bijection from CM types onto the `2^m` regions cut out
//! by the coordinate hyperplanes of `R^m`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::datum::CmGaloisDatum;
use crate::frobenius::FrobeniusFunction;
use crate::group::{Element, FiniteGroup, GroupAction, Subgroup};
use crate::{Error, Result};

/// Largest `m` for which the `2^m` CM types or regions are materialized.
const MAX_HALF_ORDER: usize = 20;

fn check_iota(group: &FiniteGroup, iota: Element) -> Result<()> {
    if group.contains(iota) && group.element_order(iota) == 2 && group.is_central(iota) {
        Ok(())
    } else {
        Err(Error::IotaInvalid)
    }
}

fn check_half_order(m: usize) -> Result<()> {
    if m > MAX_HALF_ORDER {
        return Err(Error::EnumerationBoundExceeded { count: 1u128 << m.min(127), cap: 1 << MAX_HALF_ORDER });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CmType {
    members: Vec<Element>,
}

impl CmType {
    pub fn new(group: &FiniteGroup, iota: Element, members: &[Element]) -> Result<Self> {
        check_iota(group, iota)?;
        let mut seen = vec![false; group.order()];
        for &g in members {
            if !group.contains(g) {
                return Err(Error::NotACmType(format!("element {g} is not in the group")));
            }
            if seen[g] {
                return Err(Error::NotACmType(format!("element {g} repeated")));
            }
            seen[g] = true;
        }
        for &g in members {
            if seen[group.mul(iota, g)] {
                return Err(Error::NotACmType(format!("contains both {g} and iota*{g}")));
            }
        }
        if 2 * members.len() != group.order() {
            return Err(Error::NotACmType(format!("has {} elements, expected {}", members.len(), group.order() / 2)));
        }
        let mut members = members.to_vec();
        members.sort_unstable();
        Ok(CmType { members })
    }

    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn contains(&self, g: Element) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// All `2^{|G|/2}` CM types, sorted by member list.
pub fn all_cm_types(group: &FiniteGroup, iota: Element) -> Result<Vec<CmType>> {
    check_iota(group, iota)?;
    let pairs: Vec<(Element, Element)> =
        group.elements().filter(|&g| g < group.mul(iota, g)).map(|g| (g, group.mul(iota, g))).collect();
    let m = pairs.len();
    check_half_order(m)?;
    let mut out: Vec<CmType> = (0u64..1 << m)
        .map(|mask| {
            let mut members: Vec<Element> =
                pairs.iter().enumerate().map(|(i, &(a, b))| if mask >> i & 1 == 0 { a } else { b }).collect();
            members.sort_unstable();
            CmType { members }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// The CM types containing the identity.
pub fn plus_types(group: &FiniteGroup, types: &[CmType]) -> Vec<CmType> {
    types.iter().filter(|t| t.contains(group.identity())).cloned().collect()
}

/// `gΦ = {φ·g⁻¹ | φ ∈ Φ}`
pub fn act_on_cm_type(group: &FiniteGroup, g: Element, phi: &CmType) -> CmType {
    let gi = group.inv(g);
    let mut members: Vec<Element> = phi.members.iter().map(|&x| group.mul(x, gi)).collect();
    members.sort_unstable();
    CmType { members }
}

/// A finite `G`-set with a fixed-point-free `ι` and a chosen half `S⁺`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairGSet {
    action: GroupAction,
    iota: Element,
    plus: Vec<bool>,
}

impl PairGSet {
    pub fn new(action: GroupAction, iota: Element, plus_points: &[usize]) -> Result<Self> {
        let group = action.group().clone();
        check_iota(&group, iota)?;
        let n = action.degree();
        if (0..n).any(|x| action.act(iota, x) == x) {
            return Err(Error::InvalidPairGSet("iota has a fixed point"));
        }
        let commutes = group
            .elements()
            .all(|g| (0..n).all(|x| action.act(iota, action.act(g, x)) == action.act(g, action.act(iota, x))));
        if !commutes {
            return Err(Error::InvalidPairGSet("iota does not commute with the action"));
        }
        let mut plus = vec![false; n];
        for &x in plus_points {
            if x >= n {
                return Err(Error::InvalidPoint(x));
            }
            plus[x] = true;
        }
        if (0..n).any(|x| plus[x] == plus[action.act(iota, x)]) {
            return Err(Error::InvalidPairGSet("S is not the disjoint union of S+ and iota S+"));
        }
        Ok(PairGSet { action, iota, plus })
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn iota(&self) -> Element {
        self.iota
    }

    pub fn len(&self) -> usize {
        self.action.degree()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_plus(&self, x: usize) -> bool {
        self.plus[x]
    }

    pub fn plus_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.plus[x]).collect()
    }
}

/// The CM types of `G` as a pair G-set, `S⁺` = types containing `1_G`.
pub fn cm_type_pair_gset(group: &FiniteGroup, iota: Element) -> Result<(Vec<CmType>, PairGSet)> {
    let types = all_cm_types(group, iota)?;
    let index: BTreeMap<&CmType, usize> = types.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let action = GroupAction::from_fn(group, types.len(), |g, x| index[&act_on_cm_type(group, g, &types[x])])?;
    let plus: Vec<usize> = (0..types.len()).filter(|&i| types[i].contains(group.identity())).collect();
    let pair = PairGSet::new(action, iota, &plus)?;
    Ok((types, pair))
}

/// One orbit of a pair G-set with its induced half.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitFactor {
    pub points: Vec<usize>,
    pub plus_points: Vec<usize>,
    pub basepoint: usize,
    pub stabilizer: Subgroup,
}

/// Decomposes `(S, S⁺)` into `G`-orbits; each orbit is `ι`-stable and
/// meets `S⁺` in exactly half its points.
pub fn orbit_factorization(pair: &PairGSet) -> Result<Vec<OrbitFactor>> {
    let action = pair.action();
    let mut out = Vec::new();
    for points in action.orbits() {
        let basepoint = points[0];
        let stabilizer = action.stabilizer(basepoint)?;
        let plus_points: Vec<usize> = points.iter().copied().filter(|&x| pair.is_plus(x)).collect();
        if 2 * plus_points.len() != points.len() {
            return Err(Error::InternalInconsistency(format!(
                "orbit of {basepoint} meets S+ in {} of {} points",
                plus_points.len(),
                points.len()
            )));
        }
        out.push(OrbitFactor { points, plus_points, basepoint, stabilizer });
    }
    Ok(out)
}

/// An element `(ε, σ)` of `{±}^m ⋊ S_m`, acting on `R^m` by
/// `((ε,σ)x)_i = ε_i x_{σ⁻¹(i)}`. `perm[i] = σ(i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    signs: Vec<i8>,
    perm: Vec<usize>,
}

impl SignedPermutation {
    pub fn new(signs: Vec<i8>, perm: Vec<usize>) -> Self {
        debug_assert_eq!(signs.len(), perm.len());
        SignedPermutation { signs, perm }
    }

    pub fn identity(m: usize) -> Self {
        SignedPermutation { signs: vec![1; m], perm: (0..m).collect() }
    }

    pub fn m(&self) -> usize {
        self.perm.len()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    fn inverse_perm(&self) -> Vec<usize> {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        inv
    }

    /// `(ε, σ)(ε′, τ) = (ε · σε′, στ)` with `(σε′)_i = ε′_{σ⁻¹(i)}`.
    pub fn compose(&self, other: &Self) -> Self {
        let sigma_inv = self.inverse_perm();
        let signs = (0..self.m()).map(|i| self.signs[i] * other.signs[sigma_inv[i]]).collect();
        let perm = other.perm.iter().map(|&j| self.perm[j]).collect();
        SignedPermutation { signs, perm }
    }

    pub fn apply<T: Copy + core::ops::Mul<Output = T> + From<i8>>(&self, x: &[T]) -> Vec<T> {
        let sigma_inv = self.inverse_perm();
        (0..self.m()).map(|i| T::from(self.signs[i]) * x[sigma_inv[i]]).collect()
    }

    pub fn is_minus_identity(&self) -> bool {
        self.signs.iter().all(|&s| s == -1) && self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RhoChecks {
    pub homomorphism: bool,
    pub iota_minus_one: bool,
    pub hyperplane_transitive: bool,
    pub faithful: bool,
}

impl RhoChecks {
    pub fn all(&self) -> bool {
        self.homomorphism && self.iota_minus_one && self.hyperplane_transitive && self.faithful
    }
}

/// `ρ_Φ`, indexed by group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedRepresentation {
    ordering: Vec<Element>,
    images: Vec<SignedPermutation>,
    checks: RhoChecks,
}

impl SignedRepresentation {
    pub fn ordering(&self) -> &[Element] {
        &self.ordering
    }

    pub fn m(&self) -> usize {
        self.ordering.len()
    }

    pub fn image(&self, g: Element) -> &SignedPermutation {
        &self.images[g]
    }

    pub fn checks(&self) -> RhoChecks {
        self.checks
    }
}

fn validate_ordering(group: &FiniteGroup, iota: Element, ordering: &[Element]) -> Result<CmType> {
    let phi = CmType::new(group, iota, ordering)?;
    if ordering.first() != Some(&group.identity()) {
        return Err(Error::OrderingMissingIdentity);
    }
    Ok(phi)
}

/// Solves `φ_i · g = ι^{e_i} φ_{σ⁻¹(i)}` for every `g`, with `ε_i = (−1)^{e_i}`.
///
/// Multiplying on the right makes `g ↦ (ε, σ)` a homomorphism compatible
/// with `gΦ = Φ∘g⁻¹`. The four structural checks are evaluated and any
/// failure is an error.
pub fn signed_representation(group: &FiniteGroup, iota: Element, ordering: &[Element]) -> Result<SignedRepresentation> {
    validate_ordering(group, iota, ordering)?;
    let m = ordering.len();
    let mut position = vec![usize::MAX; group.order()];
    for (i, &phi) in ordering.iter().enumerate() {
        position[phi] = i;
    }
    let images: Vec<SignedPermutation> = group
        .elements()
        .map(|g| {
            let mut signs = vec![1i8; m];
            let mut perm = vec![0usize; m];
            for (i, &phi) in ordering.iter().enumerate() {
                let x = group.mul(phi, g);
                let j = if position[x] != usize::MAX {
                    position[x]
                } else {
                    signs[i] = -1;
                    position[group.mul(iota, x)]
                };
                perm[j] = i;
            }
            SignedPermutation { signs, perm }
        })
        .collect();

    let homomorphism =
        group.elements().all(|a| group.elements().all(|b| images[group.mul(a, b)] == images[a].compose(&images[b])));
    let faithful = images.iter().collect::<BTreeSet<_>>().len() == group.order();
    let iota_minus_one = images[iota].is_minus_identity();
    let mut reached = vec![false; m];
    if m > 0 {
        reached[0] = true;
        for img in &images {
            reached[img.perm[0]] = true;
        }
    }
    let hyperplane_transitive = reached.iter().all(|&r| r);
    let checks = RhoChecks { homomorphism, iota_minus_one, hyperplane_transitive, faithful };
    if !checks.all() {
        return Err(Error::InternalInconsistency(format!("signed representation fails {checks:?}")));
    }
    Ok(SignedRepresentation { ordering: ordering.to_vec(), images, checks })
}

/// Sign vector of region `r`: `ε_i = −` iff bit `i` of `r` is set.
pub fn region_signs(r: usize, m: usize) -> Vec<i8> {
    (0..m).map(|i| if r >> i & 1 == 1 { -1 } else { 1 }).collect()
}

pub fn region_index(signs: &[i8]) -> usize {
    signs.iter().enumerate().filter(|&(_, &s)| s < 0).map(|(i, _)| 1 << i).sum()
}

/// The regions of the coordinate arrangement in `R^m` as a pair G-set via
/// `ρ_Φ`, with `S⁺ = {ε₁ = +}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HazamaDatum {
    rep: SignedRepresentation,
    pair: PairGSet,
}

impl HazamaDatum {
    pub fn m(&self) -> usize {
        self.rep.m()
    }

    pub fn region_count(&self) -> usize {
        1 << self.m()
    }

    pub fn regions(&self) -> impl Iterator<Item = Vec<i8>> + '_ {
        (0..self.region_count()).map(|r| region_signs(r, self.m()))
    }

    pub fn plus_regions(&self) -> Vec<usize> {
        self.pair.plus_points()
    }

    /// `2^{m−1}`, half the number of regions.
    pub fn dimension(&self) -> usize {
        self.region_count() / 2
    }

    pub fn representation(&self) -> &SignedRepresentation {
        &self.rep
    }

    pub fn pair(&self) -> &PairGSet {
        &self.pair
    }
}

pub fn hazama_datum(group: &FiniteGroup, iota: Element, ordering: &[Element]) -> Result<HazamaDatum> {
    check_half_order(ordering.len())?;
    let rep = signed_representation(group, iota, ordering)?;
    let m = rep.m();
    let action = GroupAction::from_fn(group, 1 << m, |g, r| region_index(&rep.image(g).apply(&region_signs(r, m))))?;
    let all_minus = (1 << m) - 1;
    if (0..1usize << m).any(|r| action.act(iota, r) != r ^ all_minus) {
        return Err(Error::InternalInconsistency("iota is not the global sign flip".into()));
    }
    let plus: Vec<usize> = (0..1usize << m).filter(|r| r & 1 == 0).collect();
    let pair = PairGSet::new(action, iota, &plus)?;
    Ok(HazamaDatum { rep, pair })
}

/// `Φ′ ↦ (ε_i(Φ′))_i` with `ε_i = +` iff `φ_i ∈ Φ′`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionBijection {
    ordering: Vec<Element>,
    types: Vec<CmType>,
    regions: Vec<usize>,
}

impl RegionBijection {
    pub fn types(&self) -> &[CmType] {
        &self.types
    }

    /// Region index of `types()[k]`.
    pub fn region_of(&self, k: usize) -> usize {
        self.regions[k]
    }

    pub fn sign_vector(&self, phi: &CmType) -> Vec<i8> {
        self.ordering.iter().map(|&p| if phi.contains(p) { 1 } else { -1 }).collect()
    }
}

/// Builds the map and verifies it is a bijection, `G`-equivariant for
/// every `g` and every CM type, and sends `S⁺` onto `{ε₁ = +}`.
pub fn region_bijection(group: &FiniteGroup, iota: Element, ordering: &[Element]) -> Result<RegionBijection> {
    let hazama = hazama_datum(group, iota, ordering)?;
    let (types, pair) = cm_type_pair_gset(group, iota)?;
    let mut map = RegionBijection { ordering: ordering.to_vec(), types, regions: Vec::new() };
    map.regions = map.types.iter().map(|t| region_index(&map.sign_vector(t))).collect();

    let distinct: BTreeSet<usize> = map.regions.iter().copied().collect();
    if distinct.len() != hazama.region_count() || map.types.len() != hazama.region_count() {
        return Err(Error::InternalInconsistency("CM types do not biject onto regions".into()));
    }
    let regions = hazama.pair().action();
    for g in group.elements() {
        for k in 0..map.types.len() {
            if map.regions[pair.action().act(g, k)] != regions.act(g, map.regions[k]) {
                return Err(Error::InternalInconsistency(format!(
                    "region map is not equivariant at g = {g}, type {k}"
                )));
            }
        }
    }
    for k in 0..map.types.len() {
        if pair.is_plus(k) != hazama.pair().is_plus(map.regions[k]) {
            return Err(Error::InternalInconsistency(format!("type {k} breaks S+ correspondence")));
        }
    }
    Ok(map)
}

/// `f(w) = #{g ∈ Φ : g⁻¹·w₀ = w}`, validated against `f + ιf = d`.
pub fn reduce_cm_type(datum: &CmGaloisDatum, phi: &CmType) -> Result<FrobeniusFunction> {
    let group = datum.group();
    let phi = CmType::new(group, datum.iota(), phi.members())?;
    let base = datum.primes().basepoint();
    let mut values = vec![0u32; datum.prime_count()];
    for &g in phi.members() {
        values[datum.act(group.inv(g), base)] += 1;
    }
    FrobeniusFunction::new(datum, values).map_err(|e| Error::ConventionViolation(format!("{e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;

    fn ordering_lowest(group: &FiniteGroup, iota: Element) -> Vec<Element> {
        group.elements().filter(|&g| g < group.mul(iota, g)).collect()
    }

    #[test]
    fn cm_type_counts() {
        for (datum, total) in [(builtin::ell_c2(), 2), (builtin::biq_c2c2(), 4), (builtin::s3c2(), 64)] {
            let g = datum.group();
            let types = all_cm_types(g, datum.iota()).unwrap();
            assert_eq!(types.len(), total);
            assert_eq!(plus_types(g, &types).len(), total / 2);
            // Product-over-cosets oracle: 2 choices per iota-coset.
            assert_eq!(types.len(), 1 << (g.order() / 2));
        }
        let c2 = builtin::ell_c2();
        let types = all_cm_types(c2.group(), 1).unwrap();
        assert_eq!(types.iter().map(|t| t.members().to_vec()).collect::<Vec<_>>(), vec![vec![0], vec![1]]);
        assert_eq!(plus_types(c2.group(), &types), vec![types[0].clone()]);
    }

    #[test]
    fn invalid_iota_is_rejected() {
        let s3 = builtin::s3c2();
        assert_eq!(all_cm_types(s3.group(), 4), Err(Error::IotaInvalid));
        assert_eq!(all_cm_types(s3.group(), 0), Err(Error::IotaInvalid));
    }

    #[test]
    fn cm_type_validation() {
        let v4 = builtin::biq_c2c2();
        let (g, iota) = (v4.group(), v4.iota());
        assert!(CmType::new(g, iota, &[0, 1]).is_ok());
        assert!(matches!(CmType::new(g, iota, &[0, iota]), Err(Error::NotACmType(_))));
        assert!(matches!(CmType::new(g, iota, &[0]), Err(Error::NotACmType(_))));
        assert!(matches!(CmType::new(g, iota, &[0, 0]), Err(Error::NotACmType(_))));
        assert!(matches!(CmType::new(g, iota, &[0, 9]), Err(Error::NotACmType(_))));
    }

    #[test]
    fn action_examples() {
        let v4 = builtin::biq_c2c2();
        let (g, iota) = (v4.group(), v4.iota());
        let a = builtin::element_by_image(g, &[0, 1, 3, 2]).unwrap();
        let phi = CmType::new(g, iota, &[0, a]).unwrap();
        assert_eq!(act_on_cm_type(g, 0, &phi), phi);
        assert_eq!(act_on_cm_type(g, a, &phi), phi);
        let flipped = act_on_cm_type(g, iota, &phi);
        assert_ne!(flipped, phi);
        assert_eq!(flipped.members(), &[iota, g.mul(a, iota)]);

        let s3 = builtin::s3c2();
        for phi in all_cm_types(s3.group(), s3.iota()).unwrap() {
            let moved = act_on_cm_type(s3.group(), s3.iota(), &phi);
            assert_ne!(moved, phi);
            assert!(CmType::new(s3.group(), s3.iota(), moved.members()).is_ok());
            // Exactly one of Φ and ιΦ contains the identity.
            assert_ne!(phi.contains(0), moved.contains(0));
        }
    }

    #[test]
    fn orbit_factorization_examples() {
        let c2 = builtin::ell_c2();
        let (_, pair) = cm_type_pair_gset(c2.group(), 1).unwrap();
        let orbits = orbit_factorization(&pair).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!((orbits[0].points.len(), orbits[0].plus_points.len()), (2, 1));

        let v4 = builtin::biq_c2c2();
        let (_, pair) = cm_type_pair_gset(v4.group(), v4.iota()).unwrap();
        let orbits = orbit_factorization(&pair).unwrap();
        // Direct orbit oracle: iota swaps Φ and ιΦ; a fixes every CM type
        // that already picks one of {e, a} and {ι, aι} as {x, xa}.
        assert_eq!(orbits.iter().map(|o| o.points.len()).sum::<usize>(), 4);
        assert_eq!(orbits.len(), 2);

        let h = hazama_datum(v4.group(), v4.iota(), &ordering_lowest(v4.group(), v4.iota())).unwrap();
        let orbits = orbit_factorization(h.pair()).unwrap();
        assert_eq!(orbits.iter().map(|o| o.points.len()).sum::<usize>(), 4);
        assert_eq!(orbits.iter().map(|o| o.plus_points.len()).sum::<usize>(), 2);
    }

    #[test]
    fn pair_validation() {
        let c2 = builtin::ell_c2();
        let g = c2.group();
        let swap = GroupAction::from_fn(g, 2, |e, x| if e == 0 { x } else { 1 - x }).unwrap();
        assert!(PairGSet::new(swap.clone(), 1, &[0]).is_ok());
        assert!(PairGSet::new(swap.clone(), 1, &[0, 1]).is_err());
        assert!(PairGSet::new(swap.clone(), 1, &[]).is_err());
        assert_eq!(PairGSet::new(swap, 1, &[5]), Err(Error::InvalidPoint(5)));
        let trivial = GroupAction::from_fn(g, 2, |_, x| x).unwrap();
        assert_eq!(PairGSet::new(trivial, 1, &[0]), Err(Error::InvalidPairGSet("iota has a fixed point")));
    }

    #[test]
    fn rho_examples() {
        let c2 = builtin::ell_c2();
        let rho = signed_representation(c2.group(), 1, &[0]).unwrap();
        assert_eq!(rho.image(1), &SignedPermutation::new(vec![-1], vec![0]));

        let v4 = builtin::biq_c2c2();
        let (g, iota) = (v4.group(), v4.iota());
        let a = builtin::element_by_image(g, &[0, 1, 3, 2]).unwrap();
        let rho = signed_representation(g, iota, &[0, a]).unwrap();
        let swap = vec![1, 0];
        assert_eq!(rho.image(a), &SignedPermutation::new(vec![1, 1], swap.clone()));
        assert_eq!(rho.image(iota), &SignedPermutation::new(vec![-1, -1], vec![0, 1]));
        let ai = g.mul(a, iota);
        assert_eq!(rho.image(ai), &SignedPermutation::new(vec![-1, -1], swap));
        assert_eq!(rho.image(a).compose(rho.image(iota)), *rho.image(ai));
    }

    #[test]
    fn rho_ordering_errors() {
        let v4 = builtin::biq_c2c2();
        let (g, iota) = (v4.group(), v4.iota());
        let a = builtin::element_by_image(g, &[0, 1, 3, 2]).unwrap();
        assert_eq!(signed_representation(g, iota, &[a, 0]), Err(Error::OrderingMissingIdentity));
        assert!(matches!(signed_representation(g, iota, &[0, iota]), Err(Error::NotACmType(_))));
    }

    #[test]
    fn rho_checks_hold_for_every_ordering() {
        for datum in [builtin::ell_c2(), builtin::biq_c2c2(), builtin::cyclic_c6(), builtin::s3c2()] {
            let (g, iota) = (datum.group(), datum.iota());
            for phi in plus_types(g, &all_cm_types(g, iota).unwrap()) {
                let rho = signed_representation(g, iota, phi.members()).unwrap();
                assert!(rho.checks().all());
            }
        }
    }

    #[test]
    fn left_multiplication_is_an_anti_homomorphism() {
        // Why the representation is solved with φ_i·g: with g·φ_i on the
        // non-abelian S3×C2, ρ(ab) = ρ(b)ρ(a) instead.
        let s3 = builtin::s3c2();
        let (g, iota) = (s3.group(), s3.iota());
        let ordering = ordering_lowest(g, iota);
        let mut pos = vec![usize::MAX; g.order()];
        for (i, &p) in ordering.iter().enumerate() {
            pos[p] = i;
        }
        let left = |x: Element| {
            let mut signs = vec![1i8; ordering.len()];
            let mut perm = vec![0; ordering.len()];
            for (i, &p) in ordering.iter().enumerate() {
                let y = g.mul(x, p);
                let j = if pos[y] != usize::MAX {
                    pos[y]
                } else {
                    signs[i] = -1;
                    pos[g.mul(iota, y)]
                };
                perm[j] = i;
            }
            SignedPermutation::new(signs, perm)
        };
        let broken = g.elements().any(|a| g.elements().any(|b| left(g.mul(a, b)) != left(a).compose(&left(b))));
        assert!(broken);
    }

    #[test]
    fn hazama_dimensions() {
        let c2 = builtin::ell_c2();
        let h = hazama_datum(c2.group(), 1, &[0]).unwrap();
        assert_eq!((h.region_count(), h.dimension()), (2, 1));
        let v4 = builtin::biq_c2c2();
        let h = hazama_datum(v4.group(), v4.iota(), &ordering_lowest(v4.group(), v4.iota())).unwrap();
        assert_eq!((h.region_count(), h.dimension()), (4, 2));
        let c6 = builtin::cyclic_c6();
        let h = hazama_datum(c6.group(), c6.iota(), &ordering_lowest(c6.group(), c6.iota())).unwrap();
        assert_eq!((h.m(), h.region_count(), h.dimension()), (3, 8, 4));
        assert_eq!(h.plus_regions().len(), 4);
        assert!(h.regions().all(|r| r.len() == 3));
    }

    #[test]
    fn region_bijection_examples() {
        let v4 = builtin::biq_c2c2();
        let (g, iota) = (v4.group(), v4.iota());
        let a = builtin::element_by_image(g, &[0, 1, 3, 2]).unwrap();
        let map = region_bijection(g, iota, &[0, a]).unwrap();
        let own = CmType::new(g, iota, &[0, a]).unwrap();
        assert_eq!(map.sign_vector(&own), vec![1, 1]);
        let flipped = act_on_cm_type(g, iota, &own);
        assert_eq!(map.sign_vector(&flipped), vec![-1, -1]);
        let mixed = CmType::new(g, iota, &[iota, a]).unwrap();
        assert_eq!(map.sign_vector(&mixed), vec![-1, 1]);

        let s3 = builtin::s3c2();
        let map = region_bijection(s3.group(), s3.iota(), &ordering_lowest(s3.group(), s3.iota())).unwrap();
        assert_eq!(map.types().len(), 64);
    }

    #[test]
    fn signed_permutation_law() {
        let x = SignedPermutation::new(vec![1, -1, 1], vec![1, 2, 0]);
        let y = SignedPermutation::new(vec![-1, -1, 1], vec![0, 2, 1]);
        let v = [2i64, 3, 5];
        assert_eq!(x.compose(&y).apply(&v), x.apply(&y.apply(&v)));
        assert_eq!(SignedPermutation::identity(3).compose(&x), x);
    }

    #[test]
    fn reduction_examples() {
        let c2 = builtin::ell_c2();
        let e = CmType::new(c2.group(), 1, &[0]).unwrap();
        assert_eq!(reduce_cm_type(&c2, &e).unwrap().values(), &[1, 0]);
        let i = CmType::new(c2.group(), 1, &[1]).unwrap();
        assert_eq!(reduce_cm_type(&c2, &i).unwrap().values(), &[0, 1]);

        let v4 = builtin::biq_c2c2();
        let a = builtin::element_by_image(v4.group(), &[0, 1, 3, 2]).unwrap();
        let phi = CmType::new(v4.group(), v4.iota(), &[0, a]).unwrap();
        let f = reduce_cm_type(&v4, &phi).unwrap();
        let w_a = v4.primes().point_of(a);
        for w in 0..4 {
            assert_eq!(f.value(w), u32::from(w == 0 || w == w_a));
        }
    }

    #[test]
    fn reduction_commutes_with_action() {
        for datum in [builtin::ell_c2(), builtin::biq_c2c2(), builtin::s3c2()] {
            let g = datum.group();
            for phi in all_cm_types(g, datum.iota()).unwrap() {
                let f = reduce_cm_type(&datum, &phi).unwrap();
                for x in g.elements() {
                    let moved = reduce_cm_type(&datum, &act_on_cm_type(g, x, &phi)).unwrap();
                    assert_eq!(moved, f.translate_left(&datum, x));
                    assert_eq!(moved, f.translate(&datum, g.inv(x)));
                }
            }
        }
    }
}
