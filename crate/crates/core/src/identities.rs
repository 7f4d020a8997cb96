//! The central identities and a few auxiliary laws, checked by exhaustive
//! enumeration over a Cayley table.

use alloc::vec::Vec;
use core::fmt;

use crate::error::Result;
use crate::tables::FiniteMagma;

/// A checkable universally quantified law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "SCREAMING_SNAKE_CASE"))]
pub enum IdentityId {
    /// `(yx·x)z = y(x·xz)`
    C,
    /// `xx·yz = (x·xy)z`
    LC1,
    /// `(x·xy)z = x(x·yz)`
    LC2,
    /// `(xx·y)z = x(x·yz)`
    LC3,
    /// `(y·xx)z = y(x·xz)`
    LC4,
    /// `yz·xx = y(zx·x)`
    RC1,
    /// `(yz·x)x = y(zx·x)`
    RC2,
    /// `(yz·x)x = y(z·xx)`
    RC3,
    /// `(yx·x)z = y(xx·z)`
    RC4,
    /// `xy = yx`
    Commutative,
    /// `xy·z = x·yz`
    Associative,
    /// `x·xy = xx·y`
    LeftAlternative,
    /// `yx·x = y·xx`
    RightAlternative,
    /// `xy·x = x·yx`
    Flexible,
    /// `xx` commutes and associates with everything in every position.
    CentralSquare,
}

/// Groups of identities requested together.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Family {
    Lc,
    Rc,
    C,
    All,
}

impl IdentityId {
    pub const ALL: [IdentityId; 15] = [
        IdentityId::C,
        IdentityId::LC1,
        IdentityId::LC2,
        IdentityId::LC3,
        IdentityId::LC4,
        IdentityId::RC1,
        IdentityId::RC2,
        IdentityId::RC3,
        IdentityId::RC4,
        IdentityId::Commutative,
        IdentityId::Associative,
        IdentityId::LeftAlternative,
        IdentityId::RightAlternative,
        IdentityId::Flexible,
        IdentityId::CentralSquare,
    ];
    pub const LC: [IdentityId; 4] = [IdentityId::LC1, IdentityId::LC2, IdentityId::LC3, IdentityId::LC4];
    pub const RC: [IdentityId; 4] = [IdentityId::RC1, IdentityId::RC2, IdentityId::RC3, IdentityId::RC4];

    pub fn family(family: Family) -> &'static [IdentityId] {
        match family {
            Family::Lc => &Self::LC,
            Family::Rc => &Self::RC,
            Family::C => &[IdentityId::C],
            Family::All => &Self::ALL,
        }
    }

    /// Number of quantified variables (2 or 3).
    pub fn arity(self) -> usize {
        use IdentityId::*;
        match self {
            Commutative | LeftAlternative | RightAlternative | Flexible => 2,
            _ => 3,
        }
    }

    pub fn name(self) -> &'static str {
        use IdentityId::*;
        match self {
            C => "C",
            LC1 => "LC1",
            LC2 => "LC2",
            LC3 => "LC3",
            LC4 => "LC4",
            RC1 => "RC1",
            RC2 => "RC2",
            RC3 => "RC3",
            RC4 => "RC4",
            Commutative => "COMMUTATIVE",
            Associative => "ASSOCIATIVE",
            LeftAlternative => "LEFT_ALTERNATIVE",
            RightAlternative => "RIGHT_ALTERNATIVE",
            Flexible => "FLEXIBLE",
            CentralSquare => "CENTRAL_SQUARE",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        let upper = name.to_ascii_uppercase().replace('-', "_");
        Self::ALL.iter().copied().find(|id| id.name() == upper)
    }

    /// Both sides of the law at 0-based `(x, y, z)`; `z` is ignored for
    /// two-variable laws.
    #[inline]
    pub(crate) fn sides(self, m: &FiniteMagma, x: usize, y: usize, z: usize) -> (usize, usize) {
        use IdentityId::*;
        let p = |a: usize, b: usize| m.op(a, b);
        match self {
            C => (p(p(p(y, x), x), z), p(y, p(x, p(x, z)))),
            LC1 => (p(p(x, x), p(y, z)), p(p(x, p(x, y)), z)),
            LC2 => (p(p(x, p(x, y)), z), p(x, p(x, p(y, z)))),
            LC3 => (p(p(p(x, x), y), z), p(x, p(x, p(y, z)))),
            LC4 => (p(p(y, p(x, x)), z), p(y, p(x, p(x, z)))),
            RC1 => (p(p(y, z), p(x, x)), p(y, p(p(z, x), x))),
            RC2 => (p(p(p(y, z), x), x), p(y, p(p(z, x), x))),
            RC3 => (p(p(p(y, z), x), x), p(y, p(z, p(x, x)))),
            RC4 => (p(p(p(y, x), x), z), p(y, p(p(x, x), z))),
            Commutative => (p(x, y), p(y, x)),
            Associative => (p(p(x, y), z), p(x, p(y, z))),
            LeftAlternative => (p(x, p(x, y)), p(p(x, x), y)),
            RightAlternative => (p(p(y, x), x), p(y, p(x, x))),
            Flexible => (p(p(x, y), x), p(x, p(y, x))),
            CentralSquare => {
                let s = p(x, x);
                let candidates = [
                    (p(s, y), p(y, s)),
                    (p(s, p(y, z)), p(p(s, y), z)),
                    (p(y, p(s, z)), p(p(y, s), z)),
                    (p(y, p(z, s)), p(p(y, z), s)),
                ];
                candidates.into_iter().find(|(l, r)| l != r).unwrap_or(candidates[0])
            }
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A failing assignment, 1-based, with both evaluated sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Counterexample {
    pub x: usize,
    pub y: usize,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none", default))]
    pub z: Option<usize>,
    pub lhs: usize,
    pub rhs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub holds: bool,
    pub witness: Option<Counterexample>,
}

/// Checks `id` over every assignment, returning the lexicographically first
/// counterexample in `(x, y, z)` order.
pub fn check_identity(m: &FiniteMagma, id: IdentityId) -> IdentityReport {
    let witness = first_counterexample(m, id);
    IdentityReport { identity: id, holds: witness.is_none(), witness }
}

fn first_counterexample(m: &FiniteMagma, id: IdentityId) -> Option<Counterexample> {
    let n = m.order();
    let zs = if id.arity() == 3 { n } else { 1 };
    for x in 0..n {
        for y in 0..n {
            for z in 0..zs {
                let (lhs, rhs) = id.sides(m, x, y, z);
                if lhs != rhs {
                    return Some(Counterexample {
                        x: x + 1,
                        y: y + 1,
                        z: (id.arity() == 3).then_some(z + 1),
                        lhs: lhs + 1,
                        rhs: rhs + 1,
                    });
                }
            }
        }
    }
    None
}

/// Quick yes/no form of [`check_identity`].
pub fn holds(m: &FiniteMagma, id: IdentityId) -> bool {
    first_counterexample(m, id).is_none()
}

pub fn check_family(m: &FiniteMagma, family: Family) -> Vec<IdentityReport> {
    IdentityId::family(family).iter().map(|&id| check_identity(m, id)).collect()
}

/// Loop satisfying all four left central identities.
pub fn is_lc_loop(m: &FiniteMagma) -> bool {
    m.is_loop() && IdentityId::LC.iter().all(|&id| holds(m, id))
}

/// Loop satisfying all four right central identities.
pub fn is_rc_loop(m: &FiniteMagma) -> bool {
    m.is_loop() && IdentityId::RC.iter().all(|&id| holds(m, id))
}

pub fn is_c_loop(m: &FiniteMagma) -> bool {
    m.is_loop() && holds(m, IdentityId::C)
}

pub fn is_alternative(m: &FiniteMagma) -> bool {
    holds(m, IdentityId::LeftAlternative) && holds(m, IdentityId::RightAlternative)
}

/// Every square lies in the center. Requires a loop.
pub fn is_central_square(m: &FiniteMagma) -> Result<bool> {
    let center = crate::structure::center(m)?;
    Ok((1..=m.order()).all(|x| center.elements.contains(&m.product(x, x))))
}

/// Structural labels of a magma.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Label {
    #[cfg_attr(feature = "serde", serde(rename = "magma"))]
    Magma,
    #[cfg_attr(feature = "serde", serde(rename = "quasigroup"))]
    Quasigroup,
    #[cfg_attr(feature = "serde", serde(rename = "left-loop"))]
    LeftLoop,
    #[cfg_attr(feature = "serde", serde(rename = "right-loop"))]
    RightLoop,
    #[cfg_attr(feature = "serde", serde(rename = "loop"))]
    Loop,
    #[cfg_attr(feature = "serde", serde(rename = "commutative"))]
    Commutative,
    #[cfg_attr(feature = "serde", serde(rename = "LC-loop"))]
    LcLoop,
    #[cfg_attr(feature = "serde", serde(rename = "RC-loop"))]
    RcLoop,
    #[cfg_attr(feature = "serde", serde(rename = "C-loop"))]
    CLoop,
    #[cfg_attr(feature = "serde", serde(rename = "group"))]
    Group,
    #[cfg_attr(feature = "serde", serde(rename = "alternative"))]
    Alternative,
    #[cfg_attr(feature = "serde", serde(rename = "central-square"))]
    CentralSquare,
}

impl Label {
    pub fn as_str(self) -> &'static str {
        match self {
            Label::Magma => "magma",
            Label::Quasigroup => "quasigroup",
            Label::LeftLoop => "left-loop",
            Label::RightLoop => "right-loop",
            Label::Loop => "loop",
            Label::Commutative => "commutative",
            Label::LcLoop => "LC-loop",
            Label::RcLoop => "RC-loop",
            Label::CLoop => "C-loop",
            Label::Group => "group",
            Label::Alternative => "alternative",
            Label::CentralSquare => "central-square",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Classification {
    pub labels: Vec<Label>,
    pub left_identities: Vec<usize>,
    pub right_identities: Vec<usize>,
    /// For loops: whether `LC ∧ RC` agrees with `C`. Always `Some(true)` on a
    /// correct implementation; `None` for non-loops.
    pub lc_and_rc_iff_c: Option<bool>,
}

impl Classification {
    pub fn has(&self, label: Label) -> bool {
        self.labels.contains(&label)
    }
}

/// Labels `m` is entitled to. `magma` is emitted only for non-quasigroups;
/// `left-loop`/`right-loop` only for quasigroups with a one-sided identity
/// that are not loops.
pub fn classify(m: &FiniteMagma) -> Classification {
    let mut labels = Vec::new();
    let is_loop = m.is_loop();
    if !m.is_quasigroup() {
        labels.push(Label::Magma);
    } else {
        labels.push(Label::Quasigroup);
        if is_loop {
            labels.push(Label::Loop);
        } else {
            if !m.left_identities().is_empty() {
                labels.push(Label::LeftLoop);
            }
            if !m.right_identities().is_empty() {
                labels.push(Label::RightLoop);
            }
        }
    }
    if m.is_commutative() {
        labels.push(Label::Commutative);
    }
    let mut lc_and_rc_iff_c = None;
    if is_loop {
        let (lc, rc, c) = (is_lc_loop(m), is_rc_loop(m), is_c_loop(m));
        lc_and_rc_iff_c = Some((lc && rc) == c);
        if lc {
            labels.push(Label::LcLoop);
        }
        if rc {
            labels.push(Label::RcLoop);
        }
        if c {
            labels.push(Label::CLoop);
        }
        if holds(m, IdentityId::Associative) {
            labels.push(Label::Group);
        }
    }
    if is_alternative(m) {
        labels.push(Label::Alternative);
    }
    if is_loop && is_central_square(m).unwrap_or(false) {
        labels.push(Label::CentralSquare);
    }
    Classification {
        labels,
        left_identities: m.left_identities().to_vec(),
        right_identities: m.right_identities().to_vec(),
        lc_and_rc_iff_c,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn failing(m: &FiniteMagma, ids: &[IdentityId]) -> Vec<IdentityId> {
        ids.iter().copied().filter(|&id| !holds(m, id)).collect()
    }

    #[test]
    fn witness_is_lexicographically_first_and_genuine() {
        let m = catalog::otimes_recomputed();
        let report = check_identity(&m, IdentityId::LC1);
        assert!(!report.holds);
        let w = report.witness.unwrap();
        assert_ne!(w.lhs, w.rhs);
        let (x, y, z) = (w.x, w.y, w.z.unwrap());
        let p = |a, b| m.product(a, b);
        assert_eq!(w.lhs, p(p(x, x), p(y, z)));
        assert_eq!(w.rhs, p(p(x, p(x, y)), z));
        // nothing earlier fails
        for a in 1..=6 {
            for b in 1..=6 {
                for c in 1..=6 {
                    if (a, b, c) >= (x, y, z) {
                        continue;
                    }
                    assert_eq!(p(p(a, a), p(b, c)), p(p(a, p(a, b)), c));
                }
            }
        }
    }

    #[test]
    fn construction_profiles() {
        let ot = catalog::otimes_recomputed();
        assert_eq!(failing(&ot, &IdentityId::LC), [IdentityId::LC1, IdentityId::LC3, IdentityId::LC4]);
        let op = catalog::oplus_printed();
        assert_eq!(failing(&op, &IdentityId::RC), [IdentityId::RC1, IdentityId::RC3, IdentityId::RC4]);
        let reports = check_family(&op, Family::Rc);
        assert_eq!(reports.len(), 4);
        assert!(reports[1].holds && reports[1].witness.is_none());
    }

    #[test]
    fn theta_is_lc_theta_star_is_rc() {
        let theta = catalog::theta();
        assert!(check_family(&theta, Family::Lc).iter().all(|r| r.holds));
        assert!(is_lc_loop(&theta) && !is_rc_loop(&theta) && !is_c_loop(&theta));
        let ts = catalog::theta_star();
        assert!(is_rc_loop(&ts) && !is_lc_loop(&ts) && !is_c_loop(&ts));
    }

    #[test]
    fn groups_satisfy_everything() {
        for (name, g) in catalog::groups() {
            for id in IdentityId::ALL {
                if matches!(id, IdentityId::Commutative | IdentityId::CentralSquare) {
                    continue;
                }
                assert!(holds(&g, id), "{name} fails {id}");
            }
        }
        let trivial = catalog::cyclic(1);
        assert!(check_family(&trivial, Family::All).iter().all(|r| r.holds));
    }

    #[test]
    fn two_variable_witness_has_no_z() {
        let r = check_identity(&catalog::symmetric3(), IdentityId::Commutative);
        assert!(r.witness.unwrap().z.is_none());
    }

    #[test]
    fn classify_catalog() {
        let ts = classify(&catalog::theta_star());
        for l in [Label::Quasigroup, Label::Loop, Label::RcLoop] {
            assert!(ts.has(l));
        }
        assert!(!ts.has(Label::LcLoop) && !ts.has(Label::CLoop) && !ts.has(Label::Magma));
        assert_eq!(ts.lc_and_rc_iff_c, Some(true));

        let ot = classify(&catalog::otimes_recomputed());
        assert!(ot.has(Label::Quasigroup) && ot.has(Label::LeftLoop));
        assert!(!ot.has(Label::Loop) && !ot.has(Label::RightLoop));
        assert_eq!(ot.left_identities, [5]);
        assert_eq!(ot.lc_and_rc_iff_c, None);

        let k = classify(&catalog::klein());
        for l in [
            Label::Quasigroup,
            Label::Loop,
            Label::Commutative,
            Label::LcLoop,
            Label::RcLoop,
            Label::CLoop,
            Label::Group,
            Label::Alternative,
            Label::CentralSquare,
        ] {
            assert!(k.has(l), "{l:?}");
        }
        assert!(classify(&catalog::otimes_printed()).has(Label::Magma));
    }

    #[test]
    fn central_square_examples() {
        assert!(is_central_square(&catalog::klein()).unwrap());
        assert!(is_central_square(&catalog::dihedral8()).unwrap());
        assert!(is_central_square(&catalog::quaternion8()).unwrap());
        // (123)² = (132) is not central
        assert!(!is_central_square(&catalog::symmetric3()).unwrap());
        assert!(is_central_square(&catalog::otimes_recomputed()).is_err());
    }

    #[test]
    fn central_square_tag_agrees_with_center() {
        for name in catalog::names() {
            let m = catalog::by_name(&name).unwrap();
            if m.is_loop() {
                assert_eq!(holds(&m, IdentityId::CentralSquare), is_central_square(&m).unwrap(), "{name}");
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(IdentityId::from_name(id.name()), Some(id));
        }
        assert_eq!(IdentityId::from_name("lc2"), Some(IdentityId::LC2));
        assert_eq!(IdentityId::from_name("left-alternative"), Some(IdentityId::LeftAlternative));
    }
}
