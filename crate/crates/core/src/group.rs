//! Finite groups as Cayley tables, their subgroups, coset spaces and actions.
//!
//! Elements are identified with table indices. Groups built from permutation
//! generators are ordered canonically: identity first, then lexicographically
//! by permutation image, so every derived report is reproducible.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::{Error, Result};

/// Index of an element in its group's Cayley table.
pub type Element = usize;

/// Default cap on the order of a group closed from generators.
pub const DEFAULT_ORDER_BOUND: usize = 10080;

/// Exhaustive checks run up to this group order; larger groups are sampled.
const EXHAUSTIVE_ORDER: usize = 64;
const SAMPLE_COUNT: usize = 4096;
const SAMPLE_SEED: u64 = 0x5eed_7a7e;

#[derive(Debug, PartialEq, Eq)]
struct GroupData {
    order: usize,
    identity: Element,
    table: Vec<u32>,
    inverses: Vec<Element>,
    degree: Option<usize>,
    permutations: Vec<Vec<usize>>,
}

/// A finite group given by its Cayley table. Cloning is cheap.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    data: Arc<GroupData>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data == other.data
    }
}

impl Eq for FiniteGroup {}

/// Composition `a ∘ b`: apply `b` first.
fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

fn is_permutation(images: &[usize]) -> bool {
    let mut seen = vec![false; images.len()];
    for &x in images {
        if x >= images.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// Closes `generators` under composition, with the default order bound.
pub fn group_from_generators(degree: usize, generators: &[Vec<usize>]) -> Result<FiniteGroup> {
    group_from_generators_bounded(degree, generators, DEFAULT_ORDER_BOUND)
}

pub fn group_from_generators_bounded(degree: usize, generators: &[Vec<usize>], bound: usize) -> Result<FiniteGroup> {
    for (index, g) in generators.iter().enumerate() {
        if g.len() != degree || !is_permutation(g) {
            return Err(Error::NotAPermutation { index, degree });
        }
    }
    let identity: Vec<usize> = (0..degree).collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone());
    queue.push_back(identity);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = compose(g, &x);
            if !seen.contains(&y) {
                if seen.len() >= bound {
                    return Err(Error::OrderBoundExceeded { bound });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    // BTreeSet iteration is lexicographic and the identity is the smallest image.
    let permutations: Vec<Vec<usize>> = seen.into_iter().collect();
    let index: BTreeMap<&[usize], usize> = permutations.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let order = permutations.len();
    let mut table = vec![0u32; order * order];
    for (a, pa) in permutations.iter().enumerate() {
        for (b, pb) in permutations.iter().enumerate() {
            table[a * order + b] = index[compose(pa, pb).as_slice()] as u32;
        }
    }
    Ok(FiniteGroup::assemble(order, 0, table, Some(degree), permutations))
}

fn sampled_triples(order: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let n = order as u64;
    (0..SAMPLE_COUNT).map(move |_| {
        let a = (rng.next_u64() % n) as usize;
        let b = (rng.next_u64() % n) as usize;
        let c = (rng.next_u64() % n) as usize;
        (a, b, c)
    })
}

impl FiniteGroup {
    fn assemble(
        order: usize,
        identity: Element,
        table: Vec<u32>,
        degree: Option<usize>,
        permutations: Vec<Vec<usize>>,
    ) -> Self {
        let mut inverses = vec![0; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] as usize == identity {
                    inverses[a] = b;
                    break;
                }
            }
        }
        FiniteGroup { data: Arc::new(GroupData { order, identity, table, inverses, degree, permutations }) }
    }

    /// Builds a group from an explicit Cayley table `rows[a][b] = a·b`.
    ///
    /// Associativity is checked on all triples up to order 64 and on a fixed
    /// pseudo-random sample of triples above that.
    pub fn from_cayley(rows: &[Vec<usize>]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::InvalidCayleyTable("empty table".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidCayleyTable(format!("row {i} has length {}", row.len())));
            }
            if !is_permutation(row) {
                return Err(Error::InvalidCayleyTable(format!("row {i} is not a permutation")));
            }
        }
        for j in 0..order {
            let col: Vec<usize> = rows.iter().map(|r| r[j]).collect();
            if !is_permutation(&col) {
                return Err(Error::InvalidCayleyTable(format!("column {j} is not a permutation")));
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or_else(|| Error::InvalidCayleyTable("no identity element".into()))?;
        let assoc = |a: usize, b: usize, c: usize| rows[rows[a][b]][c] == rows[a][rows[b][c]];
        let associative = if order <= EXHAUSTIVE_ORDER {
            (0..order).all(|a| (0..order).all(|b| (0..order).all(|c| assoc(a, b, c))))
        } else {
            sampled_triples(order).all(|(a, b, c)| assoc(a, b, c))
        };
        if !associative {
            return Err(Error::InvalidCayleyTable("not associative".into()));
        }
        let table = rows.iter().flat_map(|r| r.iter().map(|&x| x as u32)).collect();
        Ok(Self::assemble(order, identity, table, None, Vec::new()))
    }

    pub fn order(&self) -> usize {
        self.data.order
    }

    pub fn identity(&self) -> Element {
        self.data.identity
    }

    pub fn elements(&self) -> core::ops::Range<Element> {
        0..self.data.order
    }

    pub fn contains(&self, g: Element) -> bool {
        g < self.data.order
    }

    pub fn check(&self, g: Element) -> Result<Element> {
        if self.contains(g) {
            Ok(g)
        } else {
            Err(Error::InvalidElement(g))
        }
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.data.table[a * self.data.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.data.inverses[a]
    }

    /// `g x g⁻¹`
    pub fn conjugate(&self, g: Element, x: Element) -> Element {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn commutes(&self, a: Element, b: Element) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_central(&self, a: Element) -> bool {
        self.elements().all(|g| self.commutes(a, g))
    }

    pub fn element_order(&self, a: Element) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Permutation degree, for groups closed from generators.
    pub fn degree(&self) -> Option<usize> {
        self.data.degree
    }

    /// Permutation image of `g`, for groups closed from generators.
    pub fn permutation(&self, g: Element) -> Option<&[usize]> {
        self.data.permutations.get(g).map(Vec::as_slice)
    }

    /// Row-major Cayley table.
    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        self.elements().map(|a| self.elements().map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { group: self.clone(), members: vec![self.identity()] }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { group: self.clone(), members: self.elements().collect() }
    }
}

/// A subgroup, stored as a sorted member list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    group: FiniteGroup,
    members: Vec<Element>,
}

impl Subgroup {
    /// Validates that `elems` is closed under multiplication and inverses.
    pub fn from_members(group: &FiniteGroup, elems: &[Element]) -> Result<Self> {
        for &x in elems {
            group.check(x)?;
        }
        let set: BTreeSet<Element> = elems.iter().copied().collect();
        if !set.contains(&group.identity()) {
            return Err(Error::NotASubgroup);
        }
        for &a in &set {
            if !set.contains(&group.inv(a)) {
                return Err(Error::NotASubgroup);
            }
            for &b in &set {
                if !set.contains(&group.mul(a, b)) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        Ok(Subgroup { group: group.clone(), members: set.into_iter().collect() })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.group.order() / self.members.len()
    }

    pub fn contains(&self, g: Element) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn is_normal(&self) -> bool {
        self.group.elements().all(|g| self.members.iter().all(|&x| self.contains(self.group.conjugate(g, x))))
    }

    /// `g⁻¹ H g`
    pub fn conjugated_by_inverse(&self, g: Element) -> Subgroup {
        let gi = self.group.inv(g);
        let mut members: Vec<Element> = self.members.iter().map(|&x| self.group.conjugate(gi, x)).collect();
        members.sort_unstable();
        Subgroup { group: self.group.clone(), members }
    }
}

/// Smallest subgroup containing `elems`.
pub fn subgroup_generated(group: &FiniteGroup, elems: &[Element]) -> Result<Subgroup> {
    for &x in elems {
        group.check(x)?;
    }
    let mut set = BTreeSet::new();
    set.insert(group.identity());
    let mut queue: VecDeque<Element> = VecDeque::from([group.identity()]);
    while let Some(x) = queue.pop_front() {
        for &s in elems {
            let y = group.mul(s, x);
            if set.insert(y) {
                queue.push_back(y);
            }
        }
    }
    Ok(Subgroup { group: group.clone(), members: set.into_iter().collect() })
}

/// A left action of a finite group on the points `0..degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    group: FiniteGroup,
    degree: usize,
    images: Vec<usize>,
}

impl GroupAction {
    /// Tabulates `act(g, x)` and validates it as a left action.
    pub fn from_fn(group: &FiniteGroup, degree: usize, act: impl Fn(Element, usize) -> usize) -> Result<Self> {
        let mut images = Vec::with_capacity(group.order() * degree);
        for g in group.elements() {
            let row: Vec<usize> = (0..degree).map(|x| act(g, x)).collect();
            if !is_permutation(&row) {
                return Err(Error::InvalidAction("bijectivity"));
            }
            images.extend(row);
        }
        let action = GroupAction { group: group.clone(), degree, images };
        action.validate()?;
        Ok(action)
    }

    fn validate(&self) -> Result<()> {
        let e = self.group.identity();
        if (0..self.degree).any(|x| self.act(e, x) != x) {
            return Err(Error::InvalidAction("identity acts trivially"));
        }
        let law = |g: Element, h: Element| {
            let gh = self.group.mul(g, h);
            (0..self.degree).all(|x| self.act(gh, x) == self.act(g, self.act(h, x)))
        };
        let n = self.group.order();
        let holds = if n <= EXHAUSTIVE_ORDER {
            self.group.elements().all(|g| self.group.elements().all(|h| law(g, h)))
        } else {
            sampled_triples(n).all(|(g, h, _)| law(g, h))
        };
        if holds {
            Ok(())
        } else {
            Err(Error::InvalidAction("composition law"))
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn act(&self, g: Element, x: usize) -> usize {
        self.images[g * self.degree + x]
    }

    fn check_point(&self, x: usize) -> Result<usize> {
        if x < self.degree {
            Ok(x)
        } else {
            Err(Error::InvalidPoint(x))
        }
    }

    /// Sorted orbit of `point`.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        self.check_point(point)?;
        let orbit: BTreeSet<usize> = self.group.elements().map(|g| self.act(g, point)).collect();
        Ok(orbit.into_iter().collect())
    }

    /// Stabilizer of `point`; the orbit–stabilizer identity is verified.
    pub fn stabilizer(&self, point: usize) -> Result<Subgroup> {
        let orbit = self.orbit(point)?;
        let members: Vec<Element> = self.group.elements().filter(|&g| self.act(g, point) == point).collect();
        if members.len() * orbit.len() != self.group.order() {
            return Err(Error::InternalInconsistency(format!("orbit-stabilizer fails at point {point}")));
        }
        Subgroup::from_members(&self.group, &members)
            .map_err(|_| Error::InternalInconsistency(format!("stabilizer of {point} not closed")))
    }

    /// All orbits, each sorted, ordered by their smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if assigned[x] {
                continue;
            }
            let orbit = self.orbit(x).expect("point in range");
            for &y in &orbit {
                assigned[y] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).map(|o| o.len() == self.degree).unwrap_or(false)
    }
}

/// Left cosets `gH` with the left-multiplication action of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetSpace {
    subgroup: Subgroup,
    points: Vec<Vec<Element>>,
    point_of: Vec<usize>,
    action: GroupAction,
}

/// Coset space `G/H`; cosets are ordered by their smallest element.
pub fn left_cosets(group: &FiniteGroup, subgroup: &Subgroup) -> Result<CosetSpace> {
    if subgroup.group() != group {
        return Err(Error::NotASubgroup);
    }
    let mut point_of = vec![usize::MAX; group.order()];
    let mut points: Vec<Vec<Element>> = Vec::new();
    for g in group.elements() {
        if point_of[g] != usize::MAX {
            continue;
        }
        let mut coset: Vec<Element> = subgroup.members().iter().map(|&h| group.mul(g, h)).collect();
        coset.sort_unstable();
        for &x in &coset {
            point_of[x] = points.len();
        }
        points.push(coset);
    }
    let reps: Vec<Element> = points.iter().map(|c| c[0]).collect();
    let action = GroupAction::from_fn(group, points.len(), |g, x| point_of[group.mul(g, reps[x])])?;
    let space = CosetSpace { subgroup: subgroup.clone(), points, point_of, action };
    if !space.action.is_transitive() {
        return Err(Error::InternalInconsistency("coset action is not transitive".into()));
    }
    Ok(space)
}

impl CosetSpace {
    pub fn group(&self) -> &FiniteGroup {
        self.subgroup.group()
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Element>] {
        &self.points
    }

    /// The coset containing `g`.
    pub fn point_of(&self, g: Element) -> usize {
        self.point_of[g]
    }

    /// The coset containing the identity.
    pub fn basepoint(&self) -> usize {
        self.point_of[self.group().identity()]
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    #[inline]
    pub fn act(&self, g: Element, x: usize) -> usize {
        self.action.act(g, x)
    }
}
