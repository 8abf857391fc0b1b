//! Zero-sum sequences over finite abelian groups.
//!
//! A sequence is an unordered multiset of group elements; the zero-sum ones
//! form a monoid under multiset union whose atoms are the minimal zero-sum
//! sequences.  This module enumerates atoms over a chosen support,
//! factorizations of a sequence into atoms, and the derived arithmetic:
//! length sets, catenary values under the commutative distance, and the
//! largest elasticity accepted within an enumeration radius.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::fp::distance::{Distance, Factorization};
use crate::fp::bottleneck_threshold;
use crate::lengthsets::LengthSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZsError {
    #[error("cyclic factor of order 0 is not a group")]
    BadOrder,
    #[error("element has {got} coordinates, group has rank {expected}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("coordinate {coord} at position {index} exceeds order {order}")]
    CoordOutOfRange { index: usize, coord: u64, order: u64 },
    #[error("element does not belong to this group")]
    ForeignElement,
    #[error("sequence does not sum to zero")]
    NotZeroSum,
}

/// Direct product of cyclic groups; an empty factor list is the trivial
/// group.  Factors of order 1 are dropped on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    orders: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn new(orders: impl IntoIterator<Item = u64>) -> Result<Self, ZsError> {
        let mut kept = Vec::new();
        for order in orders {
            match order {
                0 => return Err(ZsError::BadOrder),
                1 => {}
                _ => kept.push(order),
            }
        }
        Ok(Self { orders: kept })
    }

    pub fn trivial() -> Self {
        Self { orders: Vec::new() }
    }

    pub fn cyclic(order: u64) -> Result<Self, ZsError> {
        Self::new([order])
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.orders.len()],
        }
    }

    pub fn element(&self, coords: impl Into<Vec<u64>>) -> Result<GroupElement, ZsError> {
        let coords = coords.into();
        if coords.len() != self.orders.len() {
            return Err(ZsError::ArityMismatch {
                expected: self.orders.len(),
                got: coords.len(),
            });
        }
        for (index, (&coord, &order)) in coords.iter().zip(&self.orders).enumerate() {
            if coord >= order {
                return Err(ZsError::CoordOutOfRange {
                    index,
                    coord,
                    order,
                });
            }
        }
        Ok(GroupElement { coords })
    }

    pub fn owns(&self, elem: &GroupElement) -> bool {
        elem.coords.len() == self.orders.len()
            && elem.coords.iter().zip(&self.orders).all(|(&c, &o)| c < o)
    }

    /// All elements, sorted coordinate-lexicographically.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = Vec::with_capacity(self.order() as usize);
        let mut coords = vec![0u64; self.orders.len()];
        loop {
            out.push(GroupElement {
                coords: coords.clone(),
            });
            let mut pos = coords.len();
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                coords[pos] += 1;
                if coords[pos] < self.orders[pos] {
                    break;
                }
                coords[pos] = 0;
            }
            if coords.iter().all(|&c| c == 0) {
                return out;
            }
        }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        debug_assert!(self.owns(a) && self.owns(b));
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .zip(&self.orders)
                .map(|((&x, &y), &order)| (x + y) % order)
                .collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        debug_assert!(self.owns(a));
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&self.orders)
                .map(|(&x, &order)| (order - x) % order)
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for coord in &self.coords {
            if !first {
                write!(f, ":")?;
            }
            first = false;
            write!(f, "{coord}")?;
        }
        Ok(())
    }
}

/// Unordered sequence (multiset) of group elements, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ZsSequence {
    elems: Vec<GroupElement>,
}

impl ZsSequence {
    pub fn new(elems: impl IntoIterator<Item = GroupElement>) -> Self {
        let mut elems: Vec<GroupElement> = elems.into_iter().collect();
        elems.sort();
        Self { elems }
    }

    pub fn empty() -> Self {
        Self { elems: Vec::new() }
    }

    pub fn elems(&self) -> &[GroupElement] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn sigma(&self, group: &FiniteAbelianGroup) -> GroupElement {
        self.elems
            .iter()
            .fold(group.zero(), |acc, e| group.add(&acc, e))
    }

    pub fn is_zero_sum(&self, group: &FiniteAbelianGroup) -> bool {
        self.sigma(group).is_zero()
    }

    /// Multiset union.
    pub fn concat(&self, other: &Self) -> Self {
        Self::new(self.elems.iter().chain(&other.elems).cloned())
    }

    fn distinct_with_multiplicity(&self) -> (Vec<GroupElement>, Vec<usize>) {
        let mut distinct: Vec<GroupElement> = Vec::new();
        let mut mult: Vec<usize> = Vec::new();
        for elem in &self.elems {
            if distinct.last() == Some(elem) {
                *mult.last_mut().unwrap() += 1;
            } else {
                distinct.push(elem.clone());
                mult.push(1);
            }
        }
        (distinct, mult)
    }

    /// Multiplicity vector of `self` over `basis`, or `None` if `self` uses
    /// an element outside it.
    fn multiplicities_over(&self, basis: &[GroupElement]) -> Option<Vec<usize>> {
        let mut mult = vec![0usize; basis.len()];
        for elem in &self.elems {
            let at = basis.binary_search(elem).ok()?;
            mult[at] += 1;
        }
        Some(mult)
    }
}

impl fmt::Display for ZsSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elems.is_empty() {
            return write!(f, "(empty)");
        }
        let (distinct, mult) = self.distinct_with_multiplicity();
        let mut first = true;
        for (elem, count) in distinct.iter().zip(mult) {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{elem}")?;
            if count > 1 {
                write!(f, "^{count}")?;
            }
        }
        Ok(())
    }
}

fn validate_sequence(group: &FiniteAbelianGroup, seq: &ZsSequence) -> Result<(), ZsError> {
    if seq.elems.iter().all(|e| group.owns(e)) {
        Ok(())
    } else {
        Err(ZsError::ForeignElement)
    }
}

/// Whether `seq` is an atom: non-empty, zero-sum, and with no proper
/// non-empty zero-sum sub-multiset.
pub fn is_atom(group: &FiniteAbelianGroup, seq: &ZsSequence) -> bool {
    if seq.is_empty() || !seq.is_zero_sum(group) {
        return false;
    }
    let (distinct, mult) = seq.distinct_with_multiplicity();
    let mut sub = vec![0usize; distinct.len()];
    loop {
        // Odometer over all sub-multisets.
        let mut pos = 0;
        loop {
            if pos == sub.len() {
                return true;
            }
            sub[pos] += 1;
            if sub[pos] <= mult[pos] {
                break;
            }
            sub[pos] = 0;
            pos += 1;
        }
        if sub == mult {
            continue;
        }
        let total: GroupElement = distinct
            .iter()
            .zip(&sub)
            .fold(group.zero(), |acc, (elem, &count)| {
                let mut acc = acc;
                for _ in 0..count {
                    acc = group.add(&acc, elem);
                }
                acc
            });
        if total.is_zero() {
            return false;
        }
    }
}

fn for_each_multiset(
    support_len: usize,
    len: usize,
    f: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    fn recurse(
        picks: &mut Vec<usize>,
        start: usize,
        support_len: usize,
        left: usize,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if left == 0 {
            return f(picks);
        }
        for i in start..support_len {
            picks.push(i);
            if !recurse(picks, i, support_len, left - 1, f) {
                picks.pop();
                return false;
            }
            picks.pop();
        }
        true
    }
    recurse(&mut Vec::with_capacity(len), 0, support_len, len, f)
}

fn canonical_support(
    group: &FiniteAbelianGroup,
    support: &[GroupElement],
) -> Result<Vec<GroupElement>, ZsError> {
    for elem in support {
        if !group.owns(elem) {
            return Err(ZsError::ForeignElement);
        }
    }
    let set: BTreeSet<GroupElement> = support.iter().cloned().collect();
    Ok(set.into_iter().collect())
}

/// All atoms whose elements lie in `support`, sorted by length then
/// lexicographically.  Atom length never exceeds the group order: in any
/// longer zero-sum sequence two of the partial sums coincide, and the block
/// between them is a proper zero-sum sub-multiset.
pub fn atoms(
    group: &FiniteAbelianGroup,
    support: &[GroupElement],
) -> Result<Vec<ZsSequence>, ZsError> {
    let support = canonical_support(group, support)?;
    let mut found = Vec::new();
    for len in 1..=group.order() as usize {
        for_each_multiset(support.len(), len, &mut |picks| {
            let seq = ZsSequence::new(picks.iter().map(|&i| support[i].clone()));
            if is_atom(group, &seq) {
                found.push(seq);
            }
            true
        });
    }
    Ok(found)
}

/// One factorization: a multiset of atoms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ZsFactorization {
    parts: Vec<ZsSequence>,
}

impl ZsFactorization {
    pub fn new(parts: impl IntoIterator<Item = ZsSequence>) -> Self {
        let mut parts: Vec<ZsSequence> = parts.into_iter().collect();
        parts.sort();
        Self { parts }
    }

    pub fn parts(&self) -> &[ZsSequence] {
        &self.parts
    }
}

impl Factorization for ZsFactorization {
    fn size(&self) -> u64 {
        self.parts.len() as u64
    }

    fn extend(&self, other: &Self) -> Self {
        Self::new(self.parts.iter().chain(&other.parts).cloned())
    }
}

/// Distance that cancels shared atoms and takes the larger residue.
pub fn commutative_distance(a: &ZsFactorization, b: &ZsFactorization) -> u64 {
    let mut common = 0usize;
    let (mut i, mut j) = (0, 0);
    while i < a.parts.len() && j < b.parts.len() {
        match a.parts[i].cmp(&b.parts[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    (a.parts.len() - common).max(b.parts.len() - common) as u64
}

/// [`commutative_distance`] as a [`Distance`] instance.
#[derive(Debug, Clone, Copy, Default)]
pub struct CommutativeDistance;

impl Distance<ZsFactorization> for CommutativeDistance {
    fn eval(&self, a: &ZsFactorization, b: &ZsFactorization) -> u64 {
        commutative_distance(a, b)
    }
}

/// All factorizations of `seq` into atoms.  The empty sequence has exactly
/// the empty factorization; a non-zero-sum sequence is rejected.
pub fn factorizations(
    group: &FiniteAbelianGroup,
    seq: &ZsSequence,
) -> Result<Vec<ZsFactorization>, ZsError> {
    validate_sequence(group, seq)?;
    if !seq.is_zero_sum(group) {
        return Err(ZsError::NotZeroSum);
    }
    if seq.is_empty() {
        return Ok(vec![ZsFactorization::new([])]);
    }
    let (basis, target) = seq.distinct_with_multiplicity();
    let candidates: Vec<(ZsSequence, Vec<usize>)> = atoms(group, &basis)?
        .into_iter()
        .filter_map(|atom| {
            let mult = atom.multiplicities_over(&basis)?;
            mult.iter()
                .zip(&target)
                .all(|(have, want)| have <= want)
                .then_some((atom, mult))
        })
        .collect();

    fn recurse(
        candidates: &[(ZsSequence, Vec<usize>)],
        start: usize,
        residual: &mut Vec<usize>,
        stack: &mut Vec<ZsSequence>,
        out: &mut Vec<ZsFactorization>,
    ) {
        if residual.iter().all(|&r| r == 0) {
            out.push(ZsFactorization::new(stack.iter().cloned()));
            return;
        }
        for i in start..candidates.len() {
            let (atom, mult) = &candidates[i];
            if mult.iter().zip(residual.iter()).all(|(m, r)| m <= r) {
                for (r, m) in residual.iter_mut().zip(mult) {
                    *r -= m;
                }
                stack.push(atom.clone());
                recurse(candidates, i, residual, stack, out);
                stack.pop();
                for (r, m) in residual.iter_mut().zip(mult) {
                    *r += m;
                }
            }
        }
    }

    let mut out = Vec::new();
    let mut residual = target;
    recurse(&candidates, 0, &mut residual, &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

/// Factorization lengths of `seq`; `{0}` for the empty sequence.
pub fn length_set(group: &FiniteAbelianGroup, seq: &ZsSequence) -> Result<LengthSet, ZsError> {
    let factorizations = factorizations(group, seq)?;
    if seq.is_empty() {
        return Ok(LengthSet::unit());
    }
    Ok(
        LengthSet::new(factorizations.iter().map(Factorization::size))
            .expect("non-empty zero-sum sequences have non-empty factorizations"),
    )
}

/// Bottleneck connectivity threshold of `seq`'s factorizations under the
/// commutative distance.
pub fn catenary(group: &FiniteAbelianGroup, seq: &ZsSequence) -> Result<u64, ZsError> {
    let factorizations = factorizations(group, seq)?;
    Ok(bottleneck_threshold(&factorizations, &CommutativeDistance))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcceptedElasticity {
    pub value: Ratio<u64>,
    /// First sequence, in (length, lexicographic) order, whose elasticity
    /// equals `value`; `None` when no non-empty zero-sum sequence fits the
    /// radius, in which case `value` is 1.
    pub witness: Option<ZsSequence>,
}

/// Largest elasticity among non-empty zero-sum sequences over `support`
/// with length at most `radius`.
pub fn accepted_elasticity(
    group: &FiniteAbelianGroup,
    support: &[GroupElement],
    radius: usize,
) -> Result<AcceptedElasticity, ZsError> {
    let support = canonical_support(group, support)?;
    let mut best = AcceptedElasticity {
        value: Ratio::from_integer(1),
        witness: None,
    };
    for len in 1..=radius {
        for_each_multiset(support.len(), len, &mut |picks| {
            let seq = ZsSequence::new(picks.iter().map(|&i| support[i].clone()));
            if seq.is_zero_sum(group) {
                let rho = length_set(group, &seq)
                    .expect("zero-sum by construction")
                    .elasticity();
                if best.witness.is_none() || rho > best.value {
                    best = AcceptedElasticity {
                        value: rho,
                        witness: Some(seq),
                    };
                }
            }
            true
        });
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(order: u64) -> FiniteAbelianGroup {
        FiniteAbelianGroup::cyclic(order).unwrap()
    }

    fn seq(group: &FiniteAbelianGroup, coords: &[u64]) -> ZsSequence {
        ZsSequence::new(coords.iter().map(|&c| group.element([c]).unwrap()))
    }

    fn shown(seqs: &[ZsSequence]) -> Vec<String> {
        seqs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn group_construction() {
        assert_eq!(cyclic(3).order(), 3);
        assert_eq!(FiniteAbelianGroup::new([2, 2]).unwrap().order(), 4);
        assert_eq!(FiniteAbelianGroup::trivial().order(), 1);
        assert_eq!(FiniteAbelianGroup::new([1, 3]).unwrap().orders(), &[3]);
        assert_eq!(FiniteAbelianGroup::new([0]), Err(ZsError::BadOrder));
        assert_eq!(FiniteAbelianGroup::trivial().elements().len(), 1);
    }

    #[test]
    fn element_arithmetic() {
        let g = FiniteAbelianGroup::new([2, 3]).unwrap();
        let a = g.element([1, 2]).unwrap();
        let b = g.element([1, 1]).unwrap();
        assert_eq!(g.add(&a, &b), g.element([0, 0]).unwrap());
        assert_eq!(g.neg(&a), g.element([1, 1]).unwrap());
        assert_eq!(g.neg(&g.zero()), g.zero());
        assert!(matches!(
            g.element([2, 0]),
            Err(ZsError::CoordOutOfRange { .. })
        ));
        assert!(matches!(g.element([1]), Err(ZsError::ArityMismatch { .. })));
        assert_eq!(g.elements().len(), 6);
    }

    #[test]
    fn atoms_of_small_cyclic_groups() {
        let g = cyclic(3);
        let atoms = atoms(&g, &g.elements()).unwrap();
        assert_eq!(shown(&atoms), ["0", "1,2", "1^3", "2^3"]);

        let g = cyclic(4);
        let atoms = super::atoms(&g, &g.elements()).unwrap();
        assert_eq!(
            shown(&atoms),
            ["0", "1,3", "2^2", "1^2,2", "2,3^2", "1^4", "3^4"]
        );
        assert_eq!(atoms.iter().map(ZsSequence::len).max(), Some(4));
    }

    #[test]
    fn atoms_of_the_klein_group() {
        let g = FiniteAbelianGroup::new([2, 2]).unwrap();
        let atoms = atoms(&g, &g.elements()).unwrap();
        assert_eq!(
            shown(&atoms),
            ["0:0", "0:1^2", "1:0^2", "1:1^2", "0:1,1:0,1:1"]
        );
    }

    #[test]
    fn atom_predicate() {
        let g = cyclic(3);
        assert!(is_atom(&g, &seq(&g, &[1, 2])));
        assert!(!is_atom(&g, &seq(&g, &[0, 1, 2])));
        assert!(!is_atom(&g, &seq(&g, &[1, 1, 1, 2, 2, 2])));
        assert!(!is_atom(&g, &seq(&g, &[1])));
        assert!(!is_atom(&g, &ZsSequence::empty()));
    }

    #[test]
    fn factorizations_of_a_balanced_sequence() {
        let g = cyclic(3);
        let s = seq(&g, &[1, 1, 1, 2, 2, 2]);
        let all = factorizations(&g, &s).unwrap();
        assert_eq!(all.len(), 2);
        let sizes: Vec<u64> = all.iter().map(Factorization::size).collect();
        assert_eq!(sizes, [2, 3]);
        assert_eq!(length_set(&g, &s).unwrap().values(), &[2, 3]);
        assert_eq!(
            length_set(&g, &s).unwrap().delta(),
            BTreeSet::from([1])
        );
        assert_eq!(catenary(&g, &s).unwrap(), 3);
    }

    #[test]
    fn gaps_of_width_two() {
        let g = cyclic(4);
        let s = seq(&g, &[1, 1, 1, 1, 3, 3, 3, 3]);
        assert_eq!(length_set(&g, &s).unwrap().values(), &[2, 4]);
        assert_eq!(catenary(&g, &s).unwrap(), 4);
    }

    #[test]
    fn empty_and_invalid_sequences() {
        let g = cyclic(3);
        assert_eq!(length_set(&g, &ZsSequence::empty()).unwrap().values(), &[0]);
        assert_eq!(
            factorizations(&g, &ZsSequence::empty()).unwrap(),
            vec![ZsFactorization::new([])]
        );
        assert_eq!(length_set(&g, &seq(&g, &[1])), Err(ZsError::NotZeroSum));
        let other = cyclic(5);
        assert_eq!(
            length_set(&g, &seq(&other, &[4])),
            Err(ZsError::ForeignElement)
        );
    }

    #[test]
    fn commutative_distance_cancels_common_atoms() {
        let g = cyclic(3);
        let a3 = seq(&g, &[1, 1, 1]);
        let pair = seq(&g, &[1, 2]);
        let x = ZsFactorization::new([a3.clone(), pair.clone()]);
        let y = ZsFactorization::new([a3.clone(), a3.clone()]);
        assert_eq!(commutative_distance(&x, &y), 1);
        assert_eq!(commutative_distance(&x, &x), 0);
        let z = ZsFactorization::new([pair.clone(), pair.clone(), pair.clone()]);
        assert_eq!(commutative_distance(&y, &z), 3);
        let w = ZsFactorization::new([a3.clone(), pair.clone(), pair]);
        assert_eq!(commutative_distance(&y, &w), 2);
    }

    #[test]
    fn accepted_elasticity_over_full_support() {
        let g = cyclic(3);
        let out = accepted_elasticity(&g, &g.elements(), 9).unwrap();
        assert_eq!(out.value, Ratio::new(3, 2));
        assert_eq!(out.witness, Some(seq(&g, &[1, 1, 1, 2, 2, 2])));

        let g = cyclic(4);
        let out = accepted_elasticity(&g, &g.elements(), 12).unwrap();
        assert_eq!(out.value, Ratio::from_integer(2));
        assert_eq!(out.witness, Some(seq(&g, &[1, 1, 1, 1, 3, 3, 3, 3])));

        let g = FiniteAbelianGroup::new([2, 2]).unwrap();
        let out = accepted_elasticity(&g, &g.elements(), 12).unwrap();
        assert_eq!(out.value, Ratio::new(3, 2));
        let witness = ZsSequence::new(
            [[0, 1], [0, 1], [1, 0], [1, 0], [1, 1], [1, 1]]
                .into_iter()
                .map(|c| g.element(c.to_vec()).unwrap()),
        );
        assert_eq!(out.witness, Some(witness));

        let g = cyclic(2);
        let out = accepted_elasticity(&g, &g.elements(), 6).unwrap();
        assert_eq!(out.value, Ratio::from_integer(1));
        assert_eq!(out.witness, Some(seq(&g, &[0])));

        let g = FiniteAbelianGroup::trivial();
        let out = accepted_elasticity(&g, &g.elements(), 3).unwrap();
        assert_eq!(out.value, Ratio::from_integer(1));
        assert_eq!(out.witness, Some(ZsSequence::new([g.zero()])));
    }

    #[test]
    fn restricted_support() {
        let g = cyclic(3);
        let one = g.element([1]).unwrap();
        let support = [one.clone()];
        assert_eq!(shown(&atoms(&g, &support).unwrap()), ["1^3"]);
        let out = accepted_elasticity(&g, &support, 9).unwrap();
        assert_eq!(out.value, Ratio::from_integer(1));
        assert_eq!(out.witness, Some(seq(&g, &[1, 1, 1])));

        let out = accepted_elasticity(&g, &support, 2).unwrap();
        assert_eq!(out.witness, None);
        assert_eq!(out.value, Ratio::from_integer(1));
    }
}
