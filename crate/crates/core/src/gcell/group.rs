use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use itertools::Itertools;
use num::{BigRational, One, Zero};

/// Group elements multiplied left to right: `a.mul(b)` applies `a` first.
pub trait GroupElem: Clone + Ord + Hash + fmt::Debug {
    fn mul(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
}

/// A permutation of `0..n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// Panics unless `images` is a permutation of `0..n`.
    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(
                i < images.len() && !seen[i],
                "not a permutation: {images:?}"
            );
            seen[i] = true;
        }
        Self(images)
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(a, b);
        Self(v)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        (0..n).permutations(n).map(Perm).collect()
    }

    /// 1-based one-line word.
    pub fn word(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }
}

impl GroupElem for Perm {
    fn mul(&self, other: &Self) -> Self {
        Perm(self.0.iter().map(|&i| other.0[i]).collect())
    }

    fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Perm(inv)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.word().iter().join(" "))
    }
}

/// An element `(f, σ)` of `Z2 wr S_n`, acting on `[n] x Z2` by
/// `(i, s) -> (σ(i), s + f(i))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WreathElement {
    pub signs: Vec<bool>,
    pub perm: Perm,
}

impl WreathElement {
    pub fn new(signs: Vec<bool>, perm: Perm) -> Self {
        assert_eq!(signs.len(), perm.degree());
        Self { signs, perm }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(vec![false; n], Perm::identity(n))
    }

    pub fn from_perm(perm: Perm) -> Self {
        Self::new(vec![false; perm.degree()], perm)
    }

    /// The sign change `g_i` at position `i`.
    pub fn sign_at(n: usize, i: usize) -> Self {
        let mut signs = vec![false; n];
        signs[i] = true;
        Self::new(signs, Perm::identity(n))
    }

    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    pub fn all(n: usize) -> Vec<WreathElement> {
        let perms = Perm::all(n);
        let mut out = Vec::with_capacity(perms.len() << n);
        for mask in 0..1usize << n {
            let signs: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            for p in &perms {
                out.push(Self::new(signs.clone(), p.clone()));
            }
        }
        out.sort();
        out
    }

    pub fn sign_vector(&self) -> Vec<u8> {
        self.signs.iter().map(|&s| s as u8).collect()
    }
}

impl GroupElem for WreathElement {
    fn mul(&self, other: &Self) -> Self {
        let signs = (0..self.degree())
            .map(|i| self.signs[i] ^ other.signs[self.perm.apply(i)])
            .collect();
        Self::new(signs, self.perm.mul(&other.perm))
    }

    fn inverse(&self) -> Self {
        let inv = self.perm.inverse();
        let signs = (0..self.degree())
            .map(|i| self.signs[inv.apply(i)])
            .collect();
        Self::new(signs, inv)
    }
}

impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let signs: String = self
            .signs
            .iter()
            .map(|&s| if s { '1' } else { '0' })
            .collect();
        write!(f, "({signs},{})", self.perm)
    }
}

/// An element `((f, σ1), σ2)` of `Z2 wr S_{s1} x S_{s2}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LayerElement {
    pub wreath: WreathElement,
    pub sym: Perm,
}

impl LayerElement {
    pub fn new(wreath: WreathElement, sym: Perm) -> Self {
        Self { wreath, sym }
    }

    pub fn identity(s1: usize, s2: usize) -> Self {
        Self::new(WreathElement::identity(s1), Perm::identity(s2))
    }

    pub fn all(s1: usize, s2: usize) -> Vec<LayerElement> {
        let ws = WreathElement::all(s1);
        let ps = Perm::all(s2);
        ws.iter()
            .flat_map(|w| ps.iter().map(move |p| Self::new(w.clone(), p.clone())))
            .collect()
    }
}

impl GroupElem for LayerElement {
    fn mul(&self, other: &Self) -> Self {
        Self::new(self.wreath.mul(&other.wreath), self.sym.mul(&other.sym))
    }

    fn inverse(&self) -> Self {
        Self::new(self.wreath.inverse(), self.sym.inverse())
    }
}

impl fmt::Display for LayerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.wreath, self.sym)
    }
}

impl<A: GroupElem, B: GroupElem> GroupElem for (A, B) {
    fn mul(&self, other: &Self) -> Self {
        (self.0.mul(&other.0), self.1.mul(&other.1))
    }

    fn inverse(&self) -> Self {
        (self.0.inverse(), self.1.inverse())
    }
}

/// Finite formal sum of group elements with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement<G: GroupElem> {
    terms: BTreeMap<G, BigRational>,
}

impl<G: GroupElem> Default for GroupAlgebraElement<G> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<G: GroupElem> GroupAlgebraElement<G> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(g: G) -> Self {
        Self::term(g, BigRational::one())
    }

    pub fn term(g: G, c: BigRational) -> Self {
        let mut out = Self::zero();
        out.add_term(g, c);
        out
    }

    pub fn add_term(&mut self, g: G, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<G, BigRational> {
        &self.terms
    }

    pub fn coeff(&self, g: &G) -> BigRational {
        self.terms.get(g).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (g, v) in &self.terms {
            out.add_term(g.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }

    /// Linear extension of `g -> g^{-1}`.
    pub fn star(&self) -> Self {
        let mut out = Self::zero();
        for (g, c) in &self.terms {
            out.add_term(g.inverse(), c.clone());
        }
        out
    }

    /// Image under a group homomorphism.
    pub fn map<H: GroupElem>(&self, f: impl Fn(&G) -> H) -> GroupAlgebraElement<H> {
        let mut out = GroupAlgebraElement::zero();
        for (g, c) in &self.terms {
            out.add_term(f(g), c.clone());
        }
        out
    }

    /// Tensor product of two elements, living in the direct product group.
    pub fn tensor<H: GroupElem>(
        &self,
        other: &GroupAlgebraElement<H>,
    ) -> GroupAlgebraElement<(G, H)> {
        let mut out = GroupAlgebraElement::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term((a.clone(), b.clone()), ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_composition_left_to_right() {
        let a = Perm::from_images(vec![1, 2, 0]);
        let b = Perm::transposition(3, 0, 1);
        let ab = a.mul(&b);
        for i in 0..3 {
            assert_eq!(ab.apply(i), b.apply(a.apply(i)));
        }
        assert!(a.mul(&a.inverse()).is_identity());
    }

    #[test]
    fn wreath_group_axioms() {
        let all = WreathElement::all(2);
        assert_eq!(all.len(), 8);
        let e = WreathElement::identity(2);
        for a in &all {
            assert_eq!(a.mul(&a.inverse()), e);
            for b in &all {
                for c in &all {
                    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                }
            }
        }
    }

    #[test]
    fn wreath_action() {
        // composing actions on signed points matches the product
        let act = |w: &WreathElement, (i, s): (usize, bool)| (w.perm.apply(i), s ^ w.signs[i]);
        for a in WreathElement::all(3) {
            for b in WreathElement::all(3).iter().step_by(5) {
                let ab = a.mul(b);
                for i in 0..3 {
                    for s in [false, true] {
                        assert_eq!(act(&ab, (i, s)), act(b, act(&a, (i, s))));
                    }
                }
            }
        }
    }

    #[test]
    fn group_algebra() {
        let t = Perm::transposition(2, 0, 1);
        let x = GroupAlgebraElement::basis(Perm::identity(2)).add(&GroupAlgebraElement::basis(t));
        let two = BigRational::from_integer(2.into());
        assert_eq!(x.mul(&x), x.scale(&two));
        assert!(x.add(&x.scale(&-BigRational::one())).is_zero());
    }
}
