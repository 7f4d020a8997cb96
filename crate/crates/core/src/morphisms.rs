//! Isomorphism and isotopism search between finite quasigroups.
//!
//! Both searches branch on the smallest unassigned point, try images in
//! ascending order and propagate every forced value before branching again,
//! so the first witness found is the lexicographically least one and does
//! not depend on scheduling. Witnesses are re-verified cellwise before they
//! are returned.

use alloc::vec::Vec;

use crate::error::{structure, Error, Result};
use crate::perm::Permutation;
use crate::structure::element_order;
use crate::tables::FiniteMagma;
use crate::transforms::{apply_isotopism, fg_isotope, fg_triple, IsotopismTriple};

/// Default node budget for the searches.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum MorphismWitness {
    Isomorphism(Permutation),
    Isotopism(IsotopismTriple),
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MorphismResult {
    /// `None` when the budget ran out before a decision.
    pub related: Option<bool>,
    pub witness: Option<MorphismWitness>,
    pub nodes_explored: u64,
    pub budget_exhausted: bool,
}

impl MorphismResult {
    fn related(witness: MorphismWitness, nodes: u64) -> Self {
        MorphismResult { related: Some(true), witness: Some(witness), nodes_explored: nodes, budget_exhausted: false }
    }

    fn unrelated(nodes: u64) -> Self {
        MorphismResult { related: Some(false), witness: None, nodes_explored: nodes, budget_exhausted: false }
    }

    fn unknown(nodes: u64) -> Self {
        MorphismResult { related: None, witness: None, nodes_explored: nodes, budget_exhausted: true }
    }

    pub fn is_related(&self) -> bool {
        self.related == Some(true)
    }

    pub fn is_unrelated(&self) -> bool {
        self.related == Some(false)
    }

    pub fn isomorphism(&self) -> Option<&Permutation> {
        match &self.witness {
            Some(MorphismWitness::Isomorphism(p)) => Some(p),
            _ => None,
        }
    }

    pub fn isotopism(&self) -> Option<&IsotopismTriple> {
        match &self.witness {
            Some(MorphismWitness::Isotopism(t)) => Some(t),
            _ => None,
        }
    }
}

/// `(x·y)α = xα ∘ yα` at every cell.
pub fn is_isomorphism(alpha: &Permutation, m1: &FiniteMagma, m2: &FiniteMagma) -> bool {
    IsotopismTriple::diagonal(alpha).maps(m1, m2)
}

struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }
}

// ---------------------------------------------------------------------------
// isomorphism

/// Per-element invariants preserved by every isomorphism.
fn element_invariants(m: &FiniteMagma) -> Vec<Vec<usize>> {
    let n = m.order();
    let identity = m.identity();
    let mut base: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            let mut v = alloc::vec![
                (m.op(x, x) == x) as usize,
                m.left_identities().contains(&(x + 1)) as usize,
                m.right_identities().contains(&(x + 1)) as usize,
                (0..n).filter(|&y| m.op(x, y) == y).count(),
                (0..n).filter(|&y| m.op(y, x) == y).count(),
                (0..n).filter(|&y| m.op(x, y) == m.op(y, x)).count(),
                (0..n).filter(|&y| m.op(x, y) == x).count(),
                (0..n).filter(|&y| m.op(y, x) == x).count(),
            ];
            if identity.is_some() {
                v.push(element_order(m, x + 1).unwrap_or(0));
            }
            if m.is_latin() {
                v.extend(m.left_translation(x + 1).unwrap().cycle_type());
                v.push(usize::MAX);
                v.extend(m.right_translation(x + 1).unwrap().cycle_type());
            }
            v
        })
        .collect();
    // two refinement rounds: colour of the square, then of its square
    for _ in 0..2 {
        let snapshot = base.clone();
        for (x, v) in base.iter_mut().enumerate() {
            v.push(usize::MAX - 1);
            v.extend(snapshot[m.op(x, x)].iter().copied());
        }
    }
    base
}

/// Invariant classes as small integers shared between both tables, or
/// `None` when the class multisets differ.
fn shared_classes(m1: &FiniteMagma, m2: &FiniteMagma) -> Option<(Vec<usize>, Vec<usize>)> {
    let i1 = element_invariants(m1);
    let i2 = element_invariants(m2);
    let mut keys: Vec<&Vec<usize>> = i1.iter().chain(i2.iter()).collect();
    keys.sort();
    keys.dedup();
    let class = |v: &Vec<usize>| keys.binary_search(&v).unwrap();
    let c1: Vec<usize> = i1.iter().map(class).collect();
    let c2: Vec<usize> = i2.iter().map(class).collect();
    let (mut s1, mut s2) = (c1.clone(), c2.clone());
    s1.sort_unstable();
    s2.sort_unstable();
    (s1 == s2).then_some((c1, c2))
}

struct IsoSearch<'a> {
    m1: &'a FiniteMagma,
    m2: &'a FiniteMagma,
    class1: Vec<usize>,
    class2: Vec<usize>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    trail: Vec<usize>,
}

impl IsoSearch<'_> {
    fn assign(&mut self, x: usize, u: usize) -> bool {
        let mut queue = alloc::vec![(x, u)];
        while let Some((x, u)) = queue.pop() {
            match self.map[x] {
                Some(v) if v == u => continue,
                Some(_) => return false,
                None => {}
            }
            if self.used[u] || self.class1[x] != self.class2[u] {
                return false;
            }
            self.map[x] = Some(u);
            self.used[u] = true;
            self.trail.push(x);
            for y in 0..self.m1.order() {
                if let Some(v) = self.map[y] {
                    queue.push((self.m1.op(x, y), self.m2.op(u, v)));
                    queue.push((self.m1.op(y, x), self.m2.op(v, u)));
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            let u = self.map[x].take().unwrap();
            self.used[u] = false;
        }
    }

    fn search(&mut self, budget: &mut Budget) -> Option<bool> {
        let Some(x) = self.map.iter().position(Option::is_none) else {
            return Some(true);
        };
        for u in 0..self.m2.order() {
            if self.used[u] || self.class1[x] != self.class2[u] {
                continue;
            }
            if !budget.tick() {
                return None;
            }
            let mark = self.trail.len();
            if self.assign(x, u) {
                match self.search(budget) {
                    Some(true) => return Some(true),
                    None => return None,
                    Some(false) => {}
                }
            }
            self.undo_to(mark);
        }
        Some(false)
    }
}

/// Searches for `α` with `(x·y)α = xα ∘ yα`.
pub fn are_isomorphic(m1: &FiniteMagma, m2: &FiniteMagma) -> MorphismResult {
    are_isomorphic_with_budget(m1, m2, DEFAULT_BUDGET)
}

pub fn are_isomorphic_with_budget(m1: &FiniteMagma, m2: &FiniteMagma, budget: u64) -> MorphismResult {
    let mut b = Budget { limit: budget, used: 0 };
    isomorphism_search(m1, m2, &mut b)
}

fn isomorphism_search(m1: &FiniteMagma, m2: &FiniteMagma, budget: &mut Budget) -> MorphismResult {
    let start = budget.used;
    let n = m1.order();
    if n != m2.order()
        || m1.is_latin() != m2.is_latin()
        || m1.is_commutative() != m2.is_commutative()
        || m1.left_identities().len() != m2.left_identities().len()
        || m1.right_identities().len() != m2.right_identities().len()
    {
        return MorphismResult::unrelated(0);
    }
    let Some((class1, class2)) = shared_classes(m1, m2) else {
        return MorphismResult::unrelated(0);
    };
    let mut s =
        IsoSearch { m1, m2, class1, class2, map: alloc::vec![None; n], used: alloc::vec![false; n], trail: Vec::new() };
    let outcome = s.search(budget);
    let nodes = budget.used.min(budget.limit) - start.min(budget.limit);
    match outcome {
        None => MorphismResult::unknown(nodes),
        Some(false) => MorphismResult::unrelated(nodes),
        Some(true) => {
            let images: Vec<u8> = s.map.iter().map(|v| v.unwrap() as u8).collect();
            let alpha = Permutation::from_raw(images);
            assert!(is_isomorphism(&alpha, m1, m2), "isomorphism search produced an invalid witness");
            MorphismResult::related(MorphismWitness::Isomorphism(alpha), nodes)
        }
    }
}

// ---------------------------------------------------------------------------
// isotopism

/// How [`are_isotopic_with`] decides isotopy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum IsotopyStrategy {
    /// Branch on `A` and `B`; `C` is forced cellwise.
    TripleSearch,
    /// Compare a fixed loop isotope of the target against all `n²` principal
    /// loop isotopes of the source, up to isomorphism.
    PrincipalIsotopes,
}

const UNSET: usize = usize::MAX;

/// Partial triple with inverse maps; constraint `C(x·y) = A(x) ∘ B(y)`.
struct TripleSearch<'a> {
    m1: &'a FiniteMagma,
    m2: &'a FiniteMagma,
    // maps[k][x] for k in {A, B, C}, inv[k][u] its inverse
    maps: [Vec<usize>; 3],
    inv: [Vec<usize>; 3],
    trail: Vec<(usize, usize)>,
}

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;

impl TripleSearch<'_> {
    fn set(&mut self, k: usize, x: usize, u: usize, queue: &mut Vec<(usize, usize)>) -> bool {
        let cur = self.maps[k][x];
        if cur == u {
            return true;
        }
        if cur != UNSET || self.inv[k][u] != UNSET {
            return false;
        }
        self.maps[k][x] = u;
        self.inv[k][u] = x;
        self.trail.push((k, x));
        queue.push((k, x));
        true
    }

    fn assign(&mut self, k: usize, x: usize, u: usize) -> bool {
        let n = self.m1.order();
        let (m1, m2) = (self.m1, self.m2);
        let mut queue = Vec::new();
        if !self.set(k, x, u, &mut queue) {
            return false;
        }
        while let Some((k, x)) = queue.pop() {
            let u = self.maps[k][x];
            for other in 0..n {
                let ok = match k {
                    A => {
                        // with B(other): C(x·other)
                        let b = self.maps[B][other];
                        let c = self.maps[C][other];
                        (b == UNSET || self.set(C, m1.op(x, other), m2.op(u, b), &mut queue))
                            && (c == UNSET || self.set(B, m1.ldiv(x, other), m2.ldiv(u, c), &mut queue))
                    }
                    B => {
                        let a = self.maps[A][other];
                        let c = self.maps[C][other];
                        (a == UNSET || self.set(C, m1.op(other, x), m2.op(a, u), &mut queue))
                            && (c == UNSET || self.set(A, m1.rdiv(x, other), m2.rdiv(u, c), &mut queue))
                    }
                    _ => {
                        // x is a product value z, u = C(z)
                        let a = self.maps[A][other];
                        let b = self.maps[B][other];
                        (a == UNSET || self.set(B, m1.ldiv(other, x), m2.ldiv(a, u), &mut queue))
                            && (b == UNSET || self.set(A, m1.rdiv(other, x), m2.rdiv(b, u), &mut queue))
                    }
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (k, x) = self.trail.pop().unwrap();
            let u = core::mem::replace(&mut self.maps[k][x], UNSET);
            self.inv[k][u] = UNSET;
        }
    }

    fn next_branch(&self) -> Option<(usize, usize)> {
        // A(1), B(1), then the rest of A, then B, then C
        if self.maps[A][0] == UNSET {
            return Some((A, 0));
        }
        if self.maps[B][0] == UNSET {
            return Some((B, 0));
        }
        for k in [A, B, C] {
            if let Some(x) = self.maps[k].iter().position(|&v| v == UNSET) {
                return Some((k, x));
            }
        }
        None
    }

    fn search(&mut self, budget: &mut Budget) -> Option<bool> {
        let Some((k, x)) = self.next_branch() else {
            return Some(true);
        };
        for u in 0..self.m2.order() {
            if self.inv[k][u] != UNSET {
                continue;
            }
            if !budget.tick() {
                return None;
            }
            let mark = self.trail.len();
            if self.assign(k, x, u) {
                match self.search(budget) {
                    Some(true) => return Some(true),
                    None => return None,
                    Some(false) => {}
                }
            }
            self.undo_to(mark);
        }
        Some(false)
    }
}

/// Decides isotopy by triple search.
pub fn are_isotopic(m1: &FiniteMagma, m2: &FiniteMagma, budget: u64) -> Result<MorphismResult> {
    are_isotopic_with(m1, m2, budget, IsotopyStrategy::TripleSearch)
}

pub fn are_isotopic_with(
    m1: &FiniteMagma,
    m2: &FiniteMagma,
    budget: u64,
    strategy: IsotopyStrategy,
) -> Result<MorphismResult> {
    if !m1.is_latin() || !m2.is_latin() {
        return Err(structure!("isotopy search requires quasigroups"));
    }
    if m1.order() != m2.order() {
        return Ok(MorphismResult::unrelated(0));
    }
    let mut b = Budget { limit: budget, used: 0 };
    let result = match strategy {
        IsotopyStrategy::TripleSearch => triple_search(m1, m2, &mut b),
        IsotopyStrategy::PrincipalIsotopes => principal_search(m1, m2, &mut b)?,
    };
    if let Some(t) = result.isotopism() {
        if !t.maps(m1, m2) {
            return Err(Error::Internal(alloc::format!("isotopism witness {t} fails cellwise")));
        }
    }
    Ok(result)
}

fn triple_search(m1: &FiniteMagma, m2: &FiniteMagma, budget: &mut Budget) -> MorphismResult {
    let n = m1.order();
    let unset = || alloc::vec![UNSET; n];
    let mut s =
        TripleSearch { m1, m2, maps: [unset(), unset(), unset()], inv: [unset(), unset(), unset()], trail: Vec::new() };
    match s.search(budget) {
        None => MorphismResult::unknown(budget.limit),
        Some(false) => MorphismResult::unrelated(budget.used),
        Some(true) => {
            let perm = |v: &Vec<usize>| Permutation::from_raw(v.iter().map(|&u| u as u8).collect());
            let t = IsotopismTriple { a: perm(&s.maps[A]), b: perm(&s.maps[B]), c: perm(&s.maps[C]) };
            MorphismResult::related(MorphismWitness::Isotopism(t), budget.used)
        }
    }
}

fn principal_search(m1: &FiniteMagma, m2: &FiniteMagma, budget: &mut Budget) -> Result<MorphismResult> {
    let n = m1.order();
    let target = fg_isotope(m2, 1, 1)?;
    let back = fg_triple(m2, 1, 1)?.invert();
    let mut exhausted = false;
    for f in 1..=n {
        for g in 1..=n {
            let p = fg_isotope(m1, f, g)?;
            let r = isomorphism_search(&p, &target, budget);
            if let Some(alpha) = r.isomorphism() {
                let t = fg_triple(m1, f, g)?.compose(&IsotopismTriple::diagonal(alpha))?.compose(&back)?;
                debug_assert_eq!(apply_isotopism(m1, &t)?, *m2);
                return Ok(MorphismResult::related(MorphismWitness::Isotopism(t), budget.used));
            }
            if r.budget_exhausted {
                exhausted = true;
                break;
            }
        }
        if exhausted {
            break;
        }
    }
    Ok(if exhausted { MorphismResult::unknown(budget.limit) } else { MorphismResult::unrelated(budget.used) })
}

// ---------------------------------------------------------------------------
// isotopes of a loop and its parastrophe

/// Which of the two constructions produced a bridge triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum BridgeKind {
    /// `γ = (B⁻¹D, A⁻¹E, C⁻¹F)`, valid when `⊗` is commutative.
    Gamma,
    /// `μ = (A⁻¹E, B⁻¹D, C⁻¹F)`, valid when `⊕` is commutative.
    Mu,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Bridge {
    pub kind: BridgeKind,
    /// Maps `⊗ = θ(A, B, C)` onto `⊕ = θ*(D, E, F)`.
    pub triple: IsotopismTriple,
}

/// Given `θ(A, B, C) = ⊗` and `θ*(D, E, F) = ⊕` with one of them
/// commutative, builds the isotopism from `⊗` to `⊕`.
pub fn parastrophe_isotopy_bridge(
    theta: &FiniteMagma,
    tstar_iso: &IsotopismTriple,
    theta_iso: &IsotopismTriple,
) -> Result<Bridge> {
    let otimes = apply_isotopism(theta, theta_iso)?;
    let oplus = apply_isotopism(&theta.transpose(), tstar_iso)?;
    let (a_inv, b_inv, c_inv) = (theta_iso.a.inverse(), theta_iso.b.inverse(), theta_iso.c.inverse());
    let (d, e, f) = (&tstar_iso.a, &tstar_iso.b, &tstar_iso.c);
    let (kind, triple) = if otimes.is_commutative() {
        (BridgeKind::Gamma, IsotopismTriple::new(b_inv.then(d), a_inv.then(e), c_inv.then(f))?)
    } else if oplus.is_commutative() {
        (BridgeKind::Mu, IsotopismTriple::new(a_inv.then(e), b_inv.then(d), c_inv.then(f))?)
    } else {
        return Err(Error::Hypothesis("neither isotope is commutative".into()));
    };
    if !triple.maps(&otimes, &oplus) {
        return Err(Error::Internal(alloc::format!("bridge triple {triple} fails cellwise")));
    }
    Ok(Bridge { kind, triple })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::transforms::{apply_isomorphism, left_derivative};

    #[test]
    fn self_isomorphism_is_identity() {
        for name in ["theta", "D4", "Q8", "S3", "otimes_recomputed"] {
            let m = catalog::by_name(name).unwrap();
            let r = are_isomorphic(&m, &m);
            assert!(r.is_related(), "{name}");
            assert!(r.isomorphism().unwrap().is_identity(), "{name}");
        }
    }

    #[test]
    fn d4_is_not_q8() {
        let r = are_isomorphic(&catalog::dihedral8(), &catalog::quaternion8());
        assert!(r.is_unrelated());
        assert!(!r.budget_exhausted);
    }

    #[test]
    fn relabelled_copy_is_found() {
        let m = catalog::theta();
        let alpha = Permutation::from_cycles(6, &[[2, 5, 3], [4, 6, 1]]).unwrap();
        let copy = apply_isomorphism(&m, &alpha).unwrap();
        let r = are_isomorphic(&m, &copy);
        assert!(is_isomorphism(r.isomorphism().unwrap(), &m, &copy));
        assert!(are_isomorphic(&m, &catalog::theta_star()).is_unrelated());
    }

    #[test]
    fn group_derivatives_are_isomorphic() {
        let g = catalog::symmetric3();
        let d = left_derivative(&g, 3).unwrap();
        assert!(are_isomorphic(&g, &d).is_related());
    }

    #[test]
    fn unequal_orders() {
        assert!(are_isomorphic(&catalog::cyclic(3), &catalog::cyclic(4)).is_unrelated());
        assert!(are_isotopic(&catalog::cyclic(3), &catalog::cyclic(4), 10).unwrap().is_unrelated());
    }

    #[test]
    fn isotopic_by_construction() {
        let theta = catalog::theta();
        let ot = catalog::otimes_recomputed();
        for strategy in [IsotopyStrategy::TripleSearch, IsotopyStrategy::PrincipalIsotopes] {
            let r = are_isotopic_with(&theta, &ot, DEFAULT_BUDGET, strategy).unwrap();
            assert!(r.isotopism().unwrap().maps(&theta, &ot), "{strategy:?}");
        }
    }

    #[test]
    fn small_groups_isotopic_iff_isomorphic() {
        let z4 = catalog::cyclic(4);
        let k = catalog::klein();
        for strategy in [IsotopyStrategy::TripleSearch, IsotopyStrategy::PrincipalIsotopes] {
            assert!(are_isotopic_with(&z4, &k, DEFAULT_BUDGET, strategy).unwrap().is_unrelated());
            assert!(are_isotopic_with(&catalog::cyclic(8), &catalog::dihedral8(), DEFAULT_BUDGET, strategy)
                .unwrap()
                .is_unrelated());
            assert!(are_isotopic_with(&catalog::dihedral8(), &catalog::quaternion8(), DEFAULT_BUDGET, strategy)
                .unwrap()
                .is_unrelated());
        }
    }

    #[test]
    fn tiny_budget_is_unknown_not_false() {
        let r = are_isotopic(&catalog::dihedral8(), &catalog::quaternion8(), 3).unwrap();
        assert_eq!(r.related, None);
        assert!(r.budget_exhausted);
        let r = are_isomorphic_with_budget(&catalog::theta(), &catalog::theta(), 1);
        assert!(r.is_related() || r.budget_exhausted);
    }

    #[test]
    fn non_latin_isotopy_is_an_error() {
        assert!(are_isotopic(&catalog::otimes_printed(), &catalog::theta(), 10).is_err());
    }

    #[test]
    fn bridge_trivial_and_hypothesis_failure() {
        let k = catalog::klein();
        let id = IsotopismTriple::identity(4);
        let b = parastrophe_isotopy_bridge(&k, &id, &id).unwrap();
        assert_eq!(b.kind, BridgeKind::Gamma);
        assert!(b.triple.is_identity());

        let err = parastrophe_isotopy_bridge(
            &catalog::theta(),
            &catalog::construction2_triple(),
            &catalog::construction1_triple(),
        );
        assert!(matches!(err, Err(Error::Hypothesis(_))));
    }
}
