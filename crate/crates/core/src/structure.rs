//! Center, nuclei, center rank, group detection and direct decomposability.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{structure, Error, Result};
use crate::identities::{holds, IdentityId};
use crate::tables::FiniteMagma;

/// Default order cap for subgroup enumeration.
pub const DEFAULT_MAX_INDECOMPOSABLE_ORDER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum SubloopKind {
    Center,
    LeftNucleus,
    MiddleNucleus,
    RightNucleus,
    Nucleus,
    Commutant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SubloopSet {
    pub kind: SubloopKind,
    /// Sorted 1-based labels.
    pub elements: Vec<usize>,
    /// Closed under the operation.
    pub closed: bool,
}

impl SubloopSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

fn collect(m: &FiniteMagma, kind: SubloopKind, pred: impl Fn(usize) -> bool) -> SubloopSet {
    let elements: Vec<usize> = (0..m.order()).filter(|&a| pred(a)).map(|a| a + 1).collect();
    let closed = is_closed(m, &elements);
    SubloopSet { kind, elements, closed }
}

fn is_closed(m: &FiniteMagma, elements: &[usize]) -> bool {
    elements.iter().all(|&x| elements.iter().all(|&y| elements.binary_search(&m.product(x, y)).is_ok()))
}

fn all_pairs(n: usize, f: impl Fn(usize, usize) -> bool) -> bool {
    (0..n).all(|x| (0..n).all(|y| f(x, y)))
}

fn in_left_nucleus(m: &FiniteMagma, a: usize) -> bool {
    all_pairs(m.order(), |x, y| m.op(a, m.op(x, y)) == m.op(m.op(a, x), y))
}

fn in_middle_nucleus(m: &FiniteMagma, a: usize) -> bool {
    all_pairs(m.order(), |x, y| m.op(x, m.op(a, y)) == m.op(m.op(x, a), y))
}

fn in_right_nucleus(m: &FiniteMagma, a: usize) -> bool {
    all_pairs(m.order(), |x, y| m.op(x, m.op(y, a)) == m.op(m.op(x, y), a))
}

fn in_commutant(m: &FiniteMagma, a: usize) -> bool {
    (0..m.order()).all(|x| m.op(a, x) == m.op(x, a))
}

pub fn left_nucleus(m: &FiniteMagma) -> Result<SubloopSet> {
    m.require_loop("left nucleus")?;
    Ok(collect(m, SubloopKind::LeftNucleus, |a| in_left_nucleus(m, a)))
}

pub fn middle_nucleus(m: &FiniteMagma) -> Result<SubloopSet> {
    m.require_loop("middle nucleus")?;
    Ok(collect(m, SubloopKind::MiddleNucleus, |a| in_middle_nucleus(m, a)))
}

pub fn right_nucleus(m: &FiniteMagma) -> Result<SubloopSet> {
    m.require_loop("right nucleus")?;
    Ok(collect(m, SubloopKind::RightNucleus, |a| in_right_nucleus(m, a)))
}

pub fn nucleus(m: &FiniteMagma) -> Result<SubloopSet> {
    m.require_loop("nucleus")?;
    Ok(collect(m, SubloopKind::Nucleus, |a| in_left_nucleus(m, a) && in_middle_nucleus(m, a) && in_right_nucleus(m, a)))
}

pub fn commutant(m: &FiniteMagma) -> Result<SubloopSet> {
    m.require_loop("commutant")?;
    Ok(collect(m, SubloopKind::Commutant, |a| in_commutant(m, a)))
}

/// `Z(M)`: elements that commute with everything and lie in all three nuclei.
pub fn center(m: &FiniteMagma) -> Result<SubloopSet> {
    m.require_loop("center")?;
    Ok(collect(m, SubloopKind::Center, |a| {
        in_commutant(m, a) && in_left_nucleus(m, a) && in_middle_nucleus(m, a) && in_right_nucleus(m, a)
    }))
}

/// The sub-table on `elements` (sorted, closed), relabelled `1..k` in order.
pub fn subtable(m: &FiniteMagma, elements: &[usize]) -> Result<FiniteMagma> {
    if !is_closed(m, elements) {
        return Err(structure!("subset is not closed under the operation"));
    }
    let index = |v: usize| elements.binary_search(&v).unwrap() + 1;
    FiniteMagma::from_fn(elements.len(), |i, j| index(m.product(elements[i - 1], elements[j - 1])))
}

/// Smallest set closed under the operation containing `gens` and `e`.
pub fn generated(m: &FiniteMagma, e: usize, gens: &[usize]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = gens.iter().copied().collect();
    set.insert(e);
    loop {
        let current: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &x in &current {
            for &y in &current {
                set.insert(m.product(x, y));
            }
        }
        if set.len() == before {
            return current;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AbelianRank {
    pub rank: usize,
    /// A generating set of that size, lexicographically first.
    pub generators: Vec<usize>,
}

/// Fewest generators of `Z(M)`, by exhaustive search over subsets of
/// increasing size.
pub fn center_rank(m: &FiniteMagma) -> Result<AbelianRank> {
    let e = m.require_loop("center rank")?;
    let z = center(m)?;
    let sub = subtable(m, &z.elements).map_err(|_| Error::Internal("center is not closed".into()))?;
    if !sub.is_commutative() || !holds(&sub, IdentityId::Associative) {
        return Err(Error::Internal("center is not an abelian group".into()));
    }
    let candidates: Vec<usize> = z.elements.iter().copied().filter(|&x| x != e).collect();
    for k in 0..=candidates.len() {
        if let Some(gens) = first_generating_subset(m, e, &candidates, k, z.len()) {
            return Ok(AbelianRank { rank: k, generators: gens });
        }
    }
    Err(Error::Internal("center is not generated by its own elements".into()))
}

fn first_generating_subset(
    m: &FiniteMagma,
    e: usize,
    candidates: &[usize],
    k: usize,
    target: usize,
) -> Option<Vec<usize>> {
    fn extend(
        m: &FiniteMagma,
        e: usize,
        candidates: &[usize],
        k: usize,
        target: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == k {
            return generated(m, e, chosen).len() == target;
        }
        let start = chosen.last().map_or(0, |&last| candidates.iter().position(|&c| c == last).unwrap() + 1);
        for i in start..candidates.len() {
            chosen.push(candidates[i]);
            if extend(m, e, candidates, k, target, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(k);
    extend(m, e, candidates, k, target, &mut chosen).then_some(chosen)
}

/// Latin and associative.
pub fn is_group(m: &FiniteMagma) -> bool {
    m.is_latin() && holds(m, IdentityId::Associative)
}

/// All subgroups of a group table, each as sorted labels, ordered by size then labels.
pub fn subgroups(m: &FiniteMagma) -> Result<Vec<Vec<usize>>> {
    if !is_group(m) {
        return Err(structure!("subgroup enumeration requires a group"));
    }
    let e = m.identity().expect("groups have an identity");
    let n = m.order();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier = alloc::vec![alloc::vec![e]];
    found.insert(alloc::vec![e]);
    while let Some(h) = frontier.pop() {
        for g in 1..=n {
            if h.binary_search(&g).is_ok() {
                continue;
            }
            let mut gens = h.clone();
            gens.push(g);
            let k = generated(m, e, &gens);
            if found.insert(k.clone()) {
                frontier.push(k);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = found.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// A pair of proper nontrivial subgroups exhibiting `M ≅ H × K`.
pub fn direct_factors(m: &FiniteMagma, max_order: usize) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    if !is_group(m) {
        return Err(structure!("decomposability is only supported for group tables"));
    }
    let n = m.order();
    if n > max_order {
        return Err(Error::Budget(alloc::format!("order {n} exceeds the subgroup enumeration cap {max_order}")));
    }
    let e = m.identity().expect("groups have an identity");
    let subs = subgroups(m)?;
    let proper: Vec<&Vec<usize>> = subs.iter().filter(|h| h.len() > 1 && h.len() < n).collect();
    for (i, h) in proper.iter().enumerate() {
        for k in &proper[i..] {
            if h.len() * k.len() != n {
                continue;
            }
            if h.iter().any(|x| *x != e && k.binary_search(x).is_ok()) {
                continue;
            }
            if !h.iter().all(|&x| k.iter().all(|&y| m.product(x, y) == m.product(y, x))) {
                continue;
            }
            let covered: BTreeSet<usize> = h.iter().flat_map(|&x| k.iter().map(move |&y| m.product(x, y))).collect();
            if covered.len() == n {
                return Ok(Some(((*h).clone(), (*k).clone())));
            }
        }
    }
    Ok(None)
}

/// Not the direct product of two proper subgroups. Groups only, order at
/// most `max_order`.
pub fn is_indecomposable(m: &FiniteMagma, max_order: usize) -> Result<bool> {
    Ok(direct_factors(m, max_order)?.is_none())
}

/// The set of commutators `[x, y] = x⁻¹y⁻¹xy` of a group table.
pub fn commutators(m: &FiniteMagma) -> Result<Vec<usize>> {
    if !is_group(m) {
        return Err(structure!("commutators are computed on group tables"));
    }
    let n = m.order();
    let inv = |x: usize| m.inverses(x).map(|i| i.right);
    let mut out = BTreeSet::new();
    for x in 1..=n {
        for y in 1..=n {
            let c = m.product(m.product(inv(x)?, inv(y)?), m.product(x, y));
            out.insert(c);
        }
    }
    Ok(out.into_iter().collect())
}

/// Exactly one commutator differs from the identity.
pub fn has_unique_nonidentity_commutator(m: &FiniteMagma) -> Result<bool> {
    let e = m.require_loop("commutators")?;
    Ok(commutators(m)?.iter().filter(|&&c| c != e).count() == 1)
}

/// Order of `x` under left-normed powers `x¹ = x`, `x^{k+1} = x·x^k`, if
/// the identity is reached within `n` steps.
pub fn element_order(m: &FiniteMagma, x: usize) -> Option<usize> {
    let e = m.identity()?;
    let mut power = x;
    for k in 1..=m.order() {
        if power == e {
            return Some(k);
        }
        power = m.product(x, power);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use alloc::vec;

    #[test]
    fn centers() {
        assert_eq!(center(&catalog::klein()).unwrap().elements, vec![1, 2, 3, 4]);
        assert_eq!(center(&catalog::symmetric3()).unwrap().elements, vec![1]);
        let zd = center(&catalog::dihedral8()).unwrap();
        assert_eq!(zd.elements, vec![1, 3]);
        assert!(zd.closed);
        assert_eq!(center(&catalog::quaternion8()).unwrap().elements, vec![1, 2]);
        assert!(center(&catalog::otimes_recomputed()).is_err());
    }

    #[test]
    fn nuclei_of_theta() {
        let theta = catalog::theta();
        let z = center(&theta).unwrap();
        let nuc = nucleus(&theta).unwrap();
        assert!(z.elements.iter().all(|&x| nuc.contains(x)));
        for x in &nuc.elements {
            assert!(left_nucleus(&theta).unwrap().contains(*x));
            assert!(middle_nucleus(&theta).unwrap().contains(*x));
            assert!(right_nucleus(&theta).unwrap().contains(*x));
        }
        assert!(commutant(&theta).unwrap().contains(1));
    }

    #[test]
    fn ranks() {
        assert_eq!(center_rank(&catalog::symmetric3()).unwrap().rank, 0);
        assert_eq!(center_rank(&catalog::klein()).unwrap().rank, 2);
        let d4 = center_rank(&catalog::dihedral8()).unwrap();
        assert_eq!((d4.rank, d4.generators.clone()), (1, vec![3]));
        assert_eq!(center_rank(&catalog::quaternion8()).unwrap().rank, 1);
        assert_eq!(center_rank(&catalog::cyclic(6)).unwrap().rank, 1);
        assert_eq!(center_rank(&catalog::cyclic(1)).unwrap().rank, 0);
    }

    #[test]
    fn group_detection() {
        assert!(is_group(&catalog::cyclic(5)));
        assert!(!is_group(&catalog::theta_star()));
        assert!(!is_group(&catalog::otimes_recomputed()));
        assert!(!is_group(&catalog::otimes_printed()));
    }

    #[test]
    fn decomposability() {
        let m = DEFAULT_MAX_INDECOMPOSABLE_ORDER;
        assert!(!is_indecomposable(&catalog::cyclic(6), m).unwrap());
        assert!(!is_indecomposable(&catalog::klein(), m).unwrap());
        assert!(is_indecomposable(&catalog::cyclic(4), m).unwrap());
        assert!(is_indecomposable(&catalog::dihedral8(), m).unwrap());
        assert!(is_indecomposable(&catalog::quaternion8(), m).unwrap());
        assert!(is_indecomposable(&catalog::symmetric3(), m).unwrap());
        assert!(matches!(is_indecomposable(&catalog::cyclic(8), 4), Err(Error::Budget(_))));
        assert!(is_indecomposable(&catalog::theta(), m).is_err());
    }

    #[test]
    fn subgroup_counts() {
        // Z4: 1 < Z2 < Z4; D4 has 10 subgroups; Q8 has 6
        assert_eq!(subgroups(&catalog::cyclic(4)).unwrap().len(), 3);
        assert_eq!(subgroups(&catalog::dihedral8()).unwrap().len(), 10);
        assert_eq!(subgroups(&catalog::quaternion8()).unwrap().len(), 6);
    }

    #[test]
    fn commutator_sets() {
        assert!(has_unique_nonidentity_commutator(&catalog::dihedral8()).unwrap());
        assert!(has_unique_nonidentity_commutator(&catalog::quaternion8()).unwrap());
        assert!(!has_unique_nonidentity_commutator(&catalog::symmetric3()).unwrap());
        assert_eq!(commutators(&catalog::klein()).unwrap(), vec![1]);
    }

    #[test]
    fn orders() {
        let z6 = catalog::cyclic(6);
        assert_eq!(element_order(&z6, 1), Some(1));
        assert_eq!(element_order(&z6, 2), Some(6));
        assert_eq!(element_order(&z6, 4), Some(2));
        assert_eq!(element_order(&catalog::otimes_recomputed(), 1), None);
    }
}
