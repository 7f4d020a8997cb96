//! Isotopes, principal isotopes, derivatives and the parastrophe.
//!
//! A triple `(A, B, C)` always maps a source table `·` to a target table `∘`
//! by `xA ∘ yB = (x·y)C`; equivalently `x ∘ y = ((xA⁻¹)·(yB⁻¹))C`.
//! Where the literature writes the inverse direction, invert the triple.

use core::fmt;

use crate::error::{domain, Error, Result};
use crate::perm::Permutation;
use crate::tables::{FiniteMagma, Side};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IsotopismTriple {
    pub a: Permutation,
    pub b: Permutation,
    pub c: Permutation,
}

impl IsotopismTriple {
    pub fn new(a: Permutation, b: Permutation, c: Permutation) -> Result<Self> {
        if a.degree() != b.degree() || b.degree() != c.degree() {
            return Err(domain!("triple components have degrees {}, {}, {}", a.degree(), b.degree(), c.degree()));
        }
        Ok(IsotopismTriple { a, b, c })
    }

    pub fn identity(degree: usize) -> Self {
        let i = Permutation::identity(degree);
        IsotopismTriple { a: i.clone(), b: i.clone(), c: i }
    }

    /// `(α, α, α)`: an isomorphism viewed as an isotopism.
    pub fn diagonal(alpha: &Permutation) -> Self {
        IsotopismTriple { a: alpha.clone(), b: alpha.clone(), c: alpha.clone() }
    }

    pub fn degree(&self) -> usize {
        self.a.degree()
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_identity() && self.b.is_identity() && self.c.is_identity()
    }

    /// Componentwise `self` then `other`, so that applying the result equals
    /// applying `self` and then `other`.
    pub fn compose(&self, other: &IsotopismTriple) -> Result<Self> {
        Ok(IsotopismTriple {
            a: self.a.checked_then(&other.a)?,
            b: self.b.checked_then(&other.b)?,
            c: self.c.checked_then(&other.c)?,
        })
    }

    pub fn invert(&self) -> Self {
        IsotopismTriple { a: self.a.inverse(), b: self.b.inverse(), c: self.c.inverse() }
    }

    /// True when `xA ∘ yB = (x·y)C` holds at every cell.
    pub fn maps(&self, source: &FiniteMagma, target: &FiniteMagma) -> bool {
        let n = source.order();
        if target.order() != n || self.degree() != n {
            return false;
        }
        (0..n).all(|x| {
            (0..n)
                .all(|y| target.op(self.a.apply_index(x), self.b.apply_index(y)) == self.c.apply_index(source.op(x, y)))
        })
    }
}

impl fmt::Display for IsotopismTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.a, self.b, self.c)
    }
}

fn require_degree(m: &FiniteMagma, t: &IsotopismTriple) -> Result<()> {
    if t.degree() != m.order() {
        return Err(domain!("triple of degree {} applied to table of order {}", t.degree(), m.order()));
    }
    Ok(())
}

/// `M(A, B, C)`: the table `∘` with `xA ∘ yB = (x·y)C`.
pub fn apply_isotopism(m: &FiniteMagma, t: &IsotopismTriple) -> Result<FiniteMagma> {
    require_degree(m, t)?;
    m.require_latin("isotope")?;
    Ok(isotope_unchecked(m, t))
}

pub(crate) fn isotope_unchecked(m: &FiniteMagma, t: &IsotopismTriple) -> FiniteMagma {
    let n = m.order();
    let (ai, bi) = (t.a.inverse(), t.b.inverse());
    let mut cells = alloc::vec![0u8; n * n];
    for x in 0..n {
        let xa = ai.apply_index(x);
        for y in 0..n {
            cells[x * n + y] = t.c.apply_index(m.op(xa, bi.apply_index(y))) as u8;
        }
    }
    FiniteMagma::from_cells(n, cells)
}

/// Image of `m` under the bijection `alpha`: `(x·y)α = xα ∘ yα`.
pub fn apply_isomorphism(m: &FiniteMagma, alpha: &Permutation) -> Result<FiniteMagma> {
    let t = IsotopismTriple::diagonal(alpha);
    require_degree(m, &t)?;
    Ok(isotope_unchecked(m, &t))
}

/// `F_{f,g} = F(R_g, L_f, I)`, whose identity is `f·g`.
pub fn principal_isotope(m: &FiniteMagma, f: usize, g: usize) -> Result<FiniteMagma> {
    m.require_loop("principal isotope")?;
    fg_isotope(m, f, g)
}

/// `F(R_g, L_f, I)` for any quasigroup; the result is always a loop with
/// identity `f·g`.
pub fn fg_isotope(m: &FiniteMagma, f: usize, g: usize) -> Result<FiniteMagma> {
    m.require_latin("f,g-isotope")?;
    m.check_element(f)?;
    m.check_element(g)?;
    let n = m.order();
    let (f0, g0) = (f - 1, g - 1);
    // x ∘ y = (x / g)·(f \ y)
    let cells = (0..n * n).map(|k| m.op(m.rdiv(g0, k / n), m.ldiv(f0, k % n)) as u8).collect();
    Ok(FiniteMagma::from_cells(n, cells))
}

/// The triple `(R_g, L_f, I)` taking `m` to its `f,g`-isotope.
pub fn fg_triple(m: &FiniteMagma, f: usize, g: usize) -> Result<IsotopismTriple> {
    IsotopismTriple::new(m.right_translation(g)?, m.left_translation(f)?, Permutation::identity(m.order()))
}

/// `F^a`: the operation with `(a·x)·y = a·(x ∘ y)`.
pub fn left_derivative(m: &FiniteMagma, a: usize) -> Result<FiniteMagma> {
    m.require_latin("left derivative")?;
    m.check_element(a)?;
    let n = m.order();
    let a0 = a - 1;
    let cells = (0..n * n).map(|k| m.ldiv(a0, m.op(m.op(a0, k / n), k % n)) as u8).collect();
    Ok(FiniteMagma::from_cells(n, cells))
}

/// `F_a`: the operation with `x·(y·a) = (x ∗ y)·a`.
pub fn right_derivative(m: &FiniteMagma, a: usize) -> Result<FiniteMagma> {
    m.require_latin("right derivative")?;
    m.check_element(a)?;
    let n = m.order();
    let a0 = a - 1;
    let cells = (0..n * n).map(|k| m.rdiv(a0, m.op(k / n, m.op(k % n, a0))) as u8).collect();
    Ok(FiniteMagma::from_cells(n, cells))
}

/// Triple `(L_a⁻¹, I, L_a⁻¹)` taking `m` to its left derivative at `a`.
pub fn left_derivative_triple(m: &FiniteMagma, a: usize) -> Result<IsotopismTriple> {
    let la_inv = m.left_translation(a)?.inverse();
    IsotopismTriple::new(la_inv.clone(), Permutation::identity(m.order()), la_inv)
}

/// Triple `(I, R_a⁻¹, R_a⁻¹)` taking `m` to its right derivative at `a`.
pub fn right_derivative_triple(m: &FiniteMagma, a: usize) -> Result<IsotopismTriple> {
    let ra_inv = m.right_translation(a)?.inverse();
    IsotopismTriple::new(Permutation::identity(m.order()), ra_inv.clone(), ra_inv)
}

/// The parastrophe `θ*` with `y θ* x = x θ y`, i.e. the transposed table.
pub fn parastrophe(m: &FiniteMagma) -> FiniteMagma {
    m.transpose()
}

/// For a triple `t` taking `m1` to `m2`, returns both sides of
/// `L^{m2}_{xA} = B⁻¹ L^{m1}_x C` (left side) or
/// `R^{m2}_{xB} = A⁻¹ R^{m1}_x C` (right side).
pub fn translation_image(
    m1: &FiniteMagma,
    m2: &FiniteMagma,
    t: &IsotopismTriple,
    x: usize,
    side: Side,
) -> Result<(Permutation, Permutation)> {
    require_degree(m1, t)?;
    m1.check_element(x)?;
    if apply_isotopism(m1, t)? != *m2 {
        return Err(Error::Contract(alloc::format!("triple {t} does not map the source onto the target")));
    }
    Ok(match side {
        Side::Left => (m2.left_translation(t.a.apply(x))?, t.b.inverse().then(&m1.left_translation(x)?).then(&t.c)),
        Side::Right => (m2.right_translation(t.b.apply(x))?, t.a.inverse().then(&m1.right_translation(x)?).then(&t.c)),
    })
}
