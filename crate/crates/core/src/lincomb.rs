//! Free module over the rationals on an ordered basis.
//!
//! A [`LinComb`] is a finite formal sum of basis elements with exact
//! rational coefficients. Zero coefficients are never stored, so equality is
//! structural equality of the term maps, and iteration is always in
//! canonical basis order.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::Zero;

use crate::alphabet::DecorationAlphabet;
use crate::tree::{canonicalize, PlanarTree, RootedTree};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinComb<T: Ord> {
    terms: BTreeMap<T, BigRational>,
}

impl<T: Ord> Default for LinComb<T> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<T: Ord> LinComb<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `t` with coefficient 1.
    pub fn basis(t: T) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(t, BigRational::from_integer(1.into()));
        LinComb { terms }
    }

    pub fn from_terms(items: impl IntoIterator<Item = (T, BigRational)>) -> Self {
        let mut out = Self::zero();
        for (t, c) in items {
            out.add_term(t, c);
        }
        out
    }

    /// Adds `c·t`, dropping the entry if the total cancels.
    pub fn add_term(&mut self, t: T, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis elements with nonzero coefficient.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `t`, zero if absent.
    pub fn coeff(&self, t: &T) -> BigRational {
        self.terms.get(t).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in canonical basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&T, &BigRational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (T, BigRational)> {
        self.terms.into_iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &T> {
        self.terms.keys()
    }

    /// Sum of all coefficients; the total multiplicity of a sum of trees
    /// with natural coefficients.
    pub fn coeff_sum(&self) -> BigRational {
        self.terms.values().sum()
    }

    pub fn scale(mut self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        for v in self.terms.values_mut() {
            *v *= c;
        }
        self
    }

    /// Applies a basis-to-basis map and recollects; distinct inputs may
    /// merge.
    pub fn map_basis<U: Ord>(&self, f: impl Fn(&T) -> U) -> LinComb<U>
    where
        T: Clone,
    {
        let mut out = LinComb::zero();
        for (t, c) in &self.terms {
            out.add_term(f(t), c.clone());
        }
        out
    }

    /// Extends a basis-to-module map by linearity.
    pub fn linear_map<U: Ord>(&self, f: impl Fn(&T) -> LinComb<U>) -> LinComb<U> {
        let mut out = LinComb::zero();
        for (t, c) in &self.terms {
            for (u, d) in f(t).terms {
                out.add_term(u, c * &d);
            }
        }
        out
    }
}

/// Extends a map that is linear in each slot to whole combinations.
pub fn bilinear_extend<A: Ord, B: Ord, C: Ord>(
    f: impl Fn(&A, &B) -> LinComb<C>,
    x: &LinComb<A>,
    y: &LinComb<B>,
) -> LinComb<C> {
    let mut out = LinComb::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            let scale = ca * cb;
            for (c, cc) in f(a, b).terms {
                out.add_term(c, &scale * &cc);
            }
        }
    }
    out
}

/// Forgets planarity term by term; terms whose underlying rooted trees
/// coincide merge, so the support can shrink.
pub fn flatten(x: &LinComb<PlanarTree>) -> LinComb<RootedTree> {
    x.map_basis(canonicalize)
}

impl<T: Ord + Clone> AddAssign<&LinComb<T>> for LinComb<T> {
    fn add_assign(&mut self, rhs: &LinComb<T>) {
        for (t, c) in rhs.terms() {
            self.add_term(t.clone(), c.clone());
        }
    }
}

impl<T: Ord> AddAssign<LinComb<T>> for LinComb<T> {
    fn add_assign(&mut self, rhs: LinComb<T>) {
        for (t, c) in rhs.terms {
            self.add_term(t, c);
        }
    }
}

impl<T: Ord> Add for LinComb<T> {
    type Output = LinComb<T>;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<T: Ord + Clone> SubAssign<&LinComb<T>> for LinComb<T> {
    fn sub_assign(&mut self, rhs: &LinComb<T>) {
        for (t, c) in rhs.terms() {
            self.add_term(t.clone(), -c.clone());
        }
    }
}

impl<T: Ord> SubAssign<LinComb<T>> for LinComb<T> {
    fn sub_assign(&mut self, rhs: LinComb<T>) {
        for (t, c) in rhs.terms {
            self.add_term(t, -c);
        }
    }
}

impl<T: Ord> Sub for LinComb<T> {
    type Output = LinComb<T>;
    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl<T: Ord> Neg for LinComb<T> {
    type Output = LinComb<T>;
    fn neg(mut self) -> Self {
        for v in self.terms.values_mut() {
            *v = -v.clone();
        }
        self
    }
}

macro_rules! tree_comb_text {
    ($ty:ty) => {
        impl LinComb<$ty> {
            /// Renders terms in canonical order, e.g. `3*d[a,a,b] + d[a,b[a]]`.
            pub fn to_text(&self, alphabet: &DecorationAlphabet) -> String {
                if self.is_zero() {
                    return "0".to_owned();
                }
                let one = BigRational::from_integer(1.into());
                let mut out = String::new();
                for (i, (t, c)) in self.terms().enumerate() {
                    let negative = c < &BigRational::zero();
                    let mag = if negative { -c.clone() } else { c.clone() };
                    if i == 0 {
                        if negative {
                            out.push('-');
                        }
                    } else {
                        out.push_str(if negative { " - " } else { " + " });
                    }
                    if mag != one {
                        out.push_str(&mag.to_string());
                        out.push('*');
                    }
                    out.push_str(&t.serialize(alphabet));
                }
                out
            }
        }
    };
}

tree_comb_text!(PlanarTree);
tree_comb_text!(RootedTree);
tree_comb_text!(crate::tree::Forest);

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::parse::parse_planar;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn zeros_never_stored() {
        let mut x: LinComb<u32> = LinComb::basis(3);
        x.add_term(3, rat(-1));
        assert!(x.is_zero());
        assert_eq!(x.num_terms(), 0);
        x.add_term(5, rat(0));
        assert!(x.is_zero());
    }

    #[test]
    fn add_and_scale() {
        let x = LinComb::basis(1u32) + LinComb::basis(2);
        let y = x.clone().scale(&rat(3));
        assert_eq!(y.coeff(&1), rat(3));
        assert_eq!((y - x.clone().scale(&rat(3))).num_terms(), 0);
        assert_eq!(x.coeff_sum(), rat(2));
    }

    #[test]
    fn linear_map_merges() {
        let x = LinComb::from_terms([(1u32, rat(2)), (2, rat(3))]);
        let y = x.linear_map(|_| LinComb::basis(0u32));
        assert_eq!(y.coeff(&0), rat(5));
    }

    #[test]
    fn bilinear_extension_distributes() {
        let f = |a: &u32, b: &u32| LinComb::basis(a + b);
        let x = LinComb::from_terms([(1u32, rat(1)), (2, rat(1))]);
        let y = LinComb::from_terms([(10u32, rat(2))]);
        let out = bilinear_extend(f, &x, &y);
        assert_eq!(out.coeff(&11), rat(2));
        assert_eq!(out.coeff(&12), rat(2));
    }

    #[test]
    fn flatten_merges_planar_variants() {
        let al = DecorationAlphabet::new(["a", "b", "c"]).unwrap();
        let x = LinComb::basis(parse_planar("a[b,c]", &al).unwrap())
            + LinComb::basis(parse_planar("a[c,b]", &al).unwrap());
        let flat = flatten(&x);
        assert_eq!(flat.num_terms(), 1);
        assert_eq!(flat.coeff_sum(), rat(2));
        assert_eq!(flat.to_text(&al), "2*a[b,c]");
    }

    #[test]
    fn text_rendering() {
        let al = DecorationAlphabet::new(["a", "b"]).unwrap();
        let a = parse_planar("a", &al).unwrap();
        let b = parse_planar("b", &al).unwrap();
        let x =
            LinComb::basis(a.clone()).scale(&rat(-1)) + LinComb::basis(b).scale(&(rat(1) / rat(2)));
        assert_eq!(x.to_text(&al), "-a + 1/2*b");
        assert_eq!(LinComb::<PlanarTree>::zero().to_text(&al), "0");
        assert_eq!(LinComb::basis(a).to_text(&al), "a");
    }

    fn small_comb() -> impl Strategy<Value = LinComb<u8>> {
        proptest::collection::btree_map(0u8..6, -4i64..5, 0..5)
            .prop_map(|m| LinComb::from_terms(m.into_iter().map(|(k, v)| (k, rat(v)))))
    }

    proptest! {
        #[test]
        fn addition_commutes(x in small_comb(), y in small_comb()) {
            prop_assert_eq!(x.clone() + y.clone(), y + x);
        }

        #[test]
        fn subtraction_cancels(x in small_comb()) {
            prop_assert!((x.clone() - x).is_zero());
        }

        #[test]
        fn scaling_distributes(x in small_comb(), y in small_comb(), c in -3i64..4) {
            let lhs = (x.clone() + y.clone()).scale(&rat(c));
            let rhs = x.scale(&rat(c)) + y.scale(&rat(c));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
