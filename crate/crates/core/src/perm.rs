//! Permutations of `{1..n}` acting on the right.
//!
//! Composition follows the convention used for isotopisms throughout the
//! crate: `p.then(&q)` maps `x` to `(x p) q`, so the product `B⁻¹D` is
//! written `b.inverse().then(&d)`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{domain, Result};

/// A bijection of `{1..n}`. Images are stored 0-based; every public method
/// taking or returning an element uses the 1-based label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "Vec<usize>", into = "Vec<usize>"))]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= crate::MAX_ORDER, "degree {degree} exceeds {}", crate::MAX_ORDER);
        Permutation { images: (0..degree as u8).collect() }
    }

    /// Builds a permutation from image notation: `images[i]` is the image of `i + 1`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > crate::MAX_ORDER {
            return Err(domain!("permutation degree {n} outside 1..={}", crate::MAX_ORDER));
        }
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::with_capacity(n);
        for (i, &img) in images.iter().enumerate() {
            if img == 0 || img > n {
                return Err(domain!("image {img} of {} outside 1..={n}", i + 1));
            }
            if core::mem::replace(&mut seen[img - 1], true) {
                return Err(domain!("image {img} repeated; not a bijection"));
            }
            out.push((img - 1) as u8);
        }
        Ok(Permutation { images: out })
    }

    /// Builds a permutation of degree `degree` from disjoint cycles with
    /// fixed points omitted, e.g. `[[1, 5, 2, 4, 3, 6]]`.
    pub fn from_cycles<C: AsRef<[usize]>>(degree: usize, cycles: &[C]) -> Result<Self> {
        if degree == 0 || degree > crate::MAX_ORDER {
            return Err(domain!("permutation degree {degree} outside 1..={}", crate::MAX_ORDER));
        }
        let mut images: Vec<u8> = (0..degree as u8).collect();
        let mut moved = alloc::vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &x in cycle {
                if x == 0 || x > degree {
                    return Err(domain!("cycle point {x} outside 1..={degree}"));
                }
                if core::mem::replace(&mut moved[x - 1], true) {
                    return Err(domain!("point {x} appears in more than one cycle position"));
                }
            }
            for (i, &x) in cycle.iter().enumerate() {
                images[x - 1] = (cycle[(i + 1) % cycle.len()] - 1) as u8;
            }
        }
        Ok(Permutation { images })
    }

    /// Wraps 0-based images already known to form a bijection.
    pub(crate) fn from_raw(images: Vec<u8>) -> Self {
        debug_assert!(is_bijection(&images));
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    ///
    /// Panics if `x` is outside `1..=degree`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    /// Image of the 0-based point `i`, 0-based.
    #[inline]
    pub fn apply_index(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// Image notation, 1-based.
    pub fn to_images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0u8; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// `x ↦ (x self) other`.
    ///
    /// Panics on degree mismatch; see [`Permutation::checked_then`].
    pub fn then(&self, other: &Permutation) -> Self {
        self.checked_then(other).expect("permutation degrees differ")
    }

    pub fn checked_then(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(domain!("cannot compose permutations of degree {} and {}", self.degree(), other.degree()));
        }
        let images = self.images.iter().map(|&i| other.images[i as usize]).collect();
        Ok(Permutation { images })
    }

    /// Nontrivial disjoint cycles, each starting at its smallest point, in
    /// increasing order of that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Sorted multiset of cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let fixed = self.images.iter().enumerate().filter(|&(i, &img)| i == img as usize).count();
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.extend(core::iter::repeat_n(1, fixed));
        lens.sort_unstable();
        lens
    }
}

pub(crate) fn is_bijection(images: &[u8]) -> bool {
    let mut seen = alloc::vec![false; images.len()];
    images.iter().all(|&i| (i as usize) < images.len() && !core::mem::replace(&mut seen[i as usize], true))
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = crate::Error;
    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::from_images(&images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.to_images()
    }
}

/// Cycle notation with fixed points omitted; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn cycle_notation_matches_images() {
        let a = Permutation::from_cycles(6, &[[1, 5, 2, 4, 3, 6]]).unwrap();
        assert_eq!(a.to_images(), vec![5, 4, 6, 3, 2, 1]);
        assert_eq!(a.to_string(), "(1 5 2 4 3 6)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
    }

    #[test]
    fn right_action_composition() {
        let a = Permutation::from_cycles(3, &[[1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[[2, 3]]).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.then(&b).apply(1), 3);
        assert_eq!(b.then(&a).apply(1), 2);
        assert!(a.then(&a.inverse()).is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::from_images(&[1, 4, 2]).is_err());
        assert!(Permutation::from_cycles(4, &[vec![1, 2], vec![2, 3]]).is_err());
        let a = Permutation::identity(3);
        assert!(a.checked_then(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn cycle_type_counts_fixed_points() {
        let p = Permutation::from_cycles(6, &[vec![1, 3, 4], vec![2, 5]]).unwrap();
        assert_eq!(p.cycle_type(), vec![1, 2, 3]);
    }
}
