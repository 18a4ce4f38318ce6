//! Truncated formal power series over exact rationals.
//!
//! A [`Series`] keeps coefficients for degrees `0..=order`, densely. Binary
//! operations on mismatched orders truncate to the smaller order, so
//! precision loss is always explicit in the result's `order`.
//!
//! The domain solvers live here too. Writing `F_D` for the weight-counting
//! series of a decoration alphabet (no constant term):
//!
//! * [`prelie_hilbert`]: the dimensions `t_n` of the free pre-Lie algebra,
//!   the unique solution of `F = F_D * prod (1 - x^i)^{-t_i}`. The same
//!   sequence counts the free NAP algebra.
//! * [`brace_hilbert`]: the dimensions `t'_n` of the free brace algebra,
//!   the solution of `F - F^2 = F_D`.
//! * [`generator_hilbert`]: `F_Br * prod (1 - x^i)^{t'_i}`, the degreewise
//!   number of pre-Lie generators the brace algebra needs.
//! * [`w_sequence`]: exponents of `1/(1 - F_Br)` as an Euler product, the
//!   dimensions of the commutative generator space of the shuffle algebra.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};
use thiserror::Error;

use crate::alphabet::DecorationAlphabet;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("constant term must be zero")]
    ConstantTermNotZero,
    #[error("constant term must be one")]
    ConstantTermNotOne,
    #[error("exponent at degree {degree} is not an integer")]
    NonIntegerExponent { degree: usize },
    #[error("no integer exponent sequence matches at degree {degree}")]
    NonIntegerSolution { degree: usize },
}

/// Dense truncated power series: coefficients for degrees `0..=order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    order: usize,
    coeffs: Vec<BigRational>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            order,
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// `c * x^degree`, truncated to zero if the degree exceeds the order.
    pub fn monomial(order: usize, degree: usize, c: BigRational) -> Self {
        let mut s = Series::zero(order);
        if degree <= order {
            s.coeffs[degree] = c;
        }
        s
    }

    /// Builds from the given low-degree coefficients, zero-padding or
    /// truncating to the requested order.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = BigRational>) -> Self {
        let mut s = Series::zero(order);
        for (i, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[i] = c;
        }
        s
    }

    pub fn from_integers(order: usize, coeffs: impl IntoIterator<Item = i64>) -> Self {
        Self::from_coeffs(
            order,
            coeffs
                .into_iter()
                .map(|n| BigRational::from_integer(n.into())),
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `x^n`; panics past the truncation order.
    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Series {
        let order = order.min(self.order);
        Series {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Series) -> Series {
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        Series { order, coeffs }
    }

    pub fn sub(&self, other: &Series) -> Series {
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] - &other.coeffs[i])
            .collect();
        Series { order, coeffs }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order.min(other.order);
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if !other.coeffs[j].is_zero() {
                    coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
                }
            }
        }
        Series { order, coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Series {
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    /// Multiplicative inverse; requires constant term 1.
    pub fn inverse(&self) -> Result<Series, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let mut inv = Series::zero(self.order);
        inv.coeffs[0] = BigRational::one();
        for n in 1..=self.order {
            let mut acc = BigRational::zero();
            for j in 1..=n {
                acc += &self.coeffs[j] * &inv.coeffs[n - j];
            }
            inv.coeffs[n] = -acc;
        }
        Ok(inv)
    }

    /// Integer value of the degree-`n` coefficient, if it is one.
    fn integer_coeff(&self, n: usize) -> Option<BigInt> {
        let c = &self.coeffs[n];
        c.is_integer().then(|| c.to_integer())
    }
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Series", 2)?;
        st.serialize_field("order", &(self.order as u64))?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

/// Weight-counting series of an alphabet: the degree-`n` coefficient is the
/// number of symbols of grade `n`.
pub fn decoration_series(alphabet: &DecorationAlphabet, order: usize) -> Series {
    let mut s = Series::zero(order);
    for n in 1..=order {
        s.coeffs[n] = BigRational::from_integer(alphabet.count_in_grade(n as u64).into());
    }
    s
}

/// Coefficients of `(1 - x^i)^e` for any integer exponent, truncated.
fn binomial_factor(i: usize, e: &BigInt, order: usize) -> Series {
    let mut s = Series::one(order);
    if e.is_negative() {
        // (1 - x^i)^-f expands with rising binomials C(f+j-1, j).
        let f = -e;
        let mut c = BigInt::one();
        for j in 1..=order / i {
            c = c * (&f + BigInt::from((j - 1) as u64)) / BigInt::from(j as u64);
            s.coeffs[i * j] = BigRational::from_integer(c.clone());
        }
    } else {
        // Falling binomials C(e, j), alternating sign; zero past j = e.
        let mut c = BigInt::one();
        for j in 1..=order / i {
            c = c * (e - BigInt::from((j - 1) as u64)) / BigInt::from(j as u64);
            if c.is_zero() {
                break;
            }
            let signed = if j % 2 == 1 { -c.clone() } else { c.clone() };
            s.coeffs[i * j] = BigRational::from_integer(signed);
        }
    }
    s
}

/// `prod_{i>=1} (1 - x^i)^{a_i}` where `a_i` is the degree-`i` coefficient
/// of the input; exponents must be integers and `a_0` must be zero.
pub fn euler_product(exponents: &Series) -> Result<Series, SeriesError> {
    if !exponents.coeffs[0].is_zero() {
        return Err(SeriesError::ConstantTermNotZero);
    }
    let order = exponents.order;
    let mut out = Series::one(order);
    for i in 1..=order {
        let e = exponents
            .integer_coeff(i)
            .ok_or(SeriesError::NonIntegerExponent { degree: i })?;
        if !e.is_zero() {
            out = out.mul(&binomial_factor(i, &e, order));
        }
    }
    Ok(out)
}

fn mobius(mut n: u64) -> i64 {
    let mut m = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            m = -m;
        }
        p += 1;
    }
    if n > 1 {
        m = -m;
    }
    m
}

/// Recovers the integer exponents `a_i` with `prod (1 - x^i)^{-a_i} = p`,
/// given `p(0) = 1`. Takes the logarithm, whose degree-`n` coefficient is
/// `(1/n) sum_{d|n} d a_d`, then applies Moebius inversion. Rational
/// intermediates are fine; integrality is enforced on the final exponents.
pub fn inv_euler(p: &Series) -> Result<Series, SeriesError> {
    if !p.coeffs[0].is_one() {
        return Err(SeriesError::ConstantTermNotOne);
    }
    let order = p.order;
    // log p, degree by degree: n l_n = n p_n - sum_{j<n} j l_j p_{n-j}.
    let mut log = vec![BigRational::zero(); order + 1];
    for n in 1..=order {
        let mut acc = &p.coeffs[n] * BigRational::from_integer(n.into());
        for (j, lj) in log.iter().enumerate().take(n).skip(1) {
            acc -= lj * BigRational::from_integer(j.into()) * &p.coeffs[n - j];
        }
        log[n] = acc / BigRational::from_integer(n.into());
    }
    let mut out = Series::zero(order);
    for n in 1..=order {
        let mut acc = BigRational::zero();
        let mut d = 1;
        while d <= n {
            if n % d == 0 {
                let mu = mobius((n / d) as u64);
                if mu != 0 {
                    acc += &log[d]
                        * BigRational::from_integer(d.into())
                        * BigRational::from_integer(mu.into());
                }
            }
            d += 1;
        }
        let a = acc / BigRational::from_integer(n.into());
        if !a.is_integer() {
            return Err(SeriesError::NonIntegerSolution { degree: n });
        }
        out.coeffs[n] = a;
    }
    Ok(out)
}

fn require_no_constant_term(f_d: &Series) -> Result<(), SeriesError> {
    if f_d.coeffs[0].is_zero() {
        Ok(())
    } else {
        Err(SeriesError::ConstantTermNotZero)
    }
}

/// Dimension series `t_n` of the free pre-Lie (equally, free NAP) algebra
/// over decorations counted by `f_d`: the unique nonnegative-integer
/// solution of `F = f_d * prod (1 - x^i)^{-t_i}`, solved degree by degree.
pub fn prelie_hilbert(f_d: &Series) -> Result<Series, SeriesError> {
    require_no_constant_term(f_d)?;
    let order = f_d.order;
    let mut partial = Series::one(order);
    let mut t = Series::zero(order);
    for n in 1..=order {
        // Factors (1 - x^i)^{-t_i} with i >= n cannot reach degree n once
        // multiplied by f_d, so the running product already decides t_n.
        let c = f_d.mul(&partial).coeffs[n].clone();
        assert!(
            c.is_integer() && !c.is_negative(),
            "dimension at degree {n} must be a count"
        );
        if !c.is_zero() {
            partial = partial.mul(&binomial_factor(n, &-c.to_integer(), order));
        }
        t.coeffs[n] = c;
    }
    Ok(t)
}

/// Dimension series of the free brace algebra: the solution of
/// `F - F^2 = f_d` without constant term.
pub fn brace_hilbert(f_d: &Series) -> Result<Series, SeriesError> {
    require_no_constant_term(f_d)?;
    let order = f_d.order;
    let mut f = Series::zero(order);
    for n in 1..=order {
        let mut c = f_d.coeffs[n].clone();
        for i in 1..n {
            c += &f.coeffs[i] * &f.coeffs[n - i];
        }
        assert!(
            c.is_integer() && !c.is_negative(),
            "dimension at degree {n} must be a count"
        );
        f.coeffs[n] = c;
    }
    Ok(f)
}

/// Number of pre-Lie generators of the free brace algebra per degree:
/// `F_Br * prod (1 - x^i)^{t'_i}` with `t'` the brace dimensions. Feeding
/// the result back through [`prelie_hilbert`] returns `t'` exactly.
pub fn generator_hilbert(f_d: &Series) -> Result<Series, SeriesError> {
    let brace_dims = brace_hilbert(f_d)?;
    let g = brace_dims.mul(&euler_product(&brace_dims)?);
    for n in 0..=g.order {
        assert!(
            g.coeffs[n].is_integer() && !g.coeffs[n].is_negative(),
            "generator count at degree {n} must be a count"
        );
    }
    Ok(g)
}

/// Exponent sequence of `1/(1 - F_Br)` as an Euler product: dimensions of
/// the free commutative generator space of the shuffle algebra on planar
/// trees.
pub fn w_sequence(f_d: &Series) -> Result<Series, SeriesError> {
    let f_br = brace_hilbert(f_d)?;
    let s = Series::one(f_br.order).sub(&f_br).inverse()?;
    inv_euler(&s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enumerate_planar, enumerate_rooted};

    fn x(order: usize) -> Series {
        Series::monomial(order, 1, BigRational::one())
    }

    fn ints(s: &Series) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer());
                let v: BigInt = c.to_integer();
                i64::try_from(v).unwrap()
            })
            .collect()
    }

    #[test]
    fn ring_ops() {
        let x5 = x(5);
        assert_eq!(ints(&x5.mul(&x5)), [0, 0, 1, 0, 0, 0]);
        let a = Series::from_integers(5, [3, 1, 4, 1, 5, 9]);
        assert_eq!(a.mul(&Series::one(5)), a);
        let geom = Series::from_integers(5, [1, 1, 1, 1, 1, 1]);
        let one_minus_x = Series::from_integers(5, [1, -1]);
        assert_eq!(geom.mul(&one_minus_x), Series::one(5));
        assert_eq!(a.sub(&a), Series::zero(5));
        assert_eq!(a.add(&a), a.scale(&BigRational::from_integer(2.into())));
    }

    #[test]
    fn mismatched_orders_truncate() {
        let a = Series::from_integers(5, [1, 1, 1, 1, 1, 1]);
        let b = Series::from_integers(2, [1, 2, 3]);
        assert_eq!(a.mul(&b).order(), 2);
        assert_eq!(ints(&a.mul(&b)), [1, 3, 6]);
        assert_eq!(a.add(&b).order(), 2);
    }

    #[test]
    fn inverse_round_trip() {
        let a = Series::from_integers(6, [1, 3, 0, -2, 5, 1, -7]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Series::one(6));
        assert!(x(3).inverse().is_err());
    }

    #[test]
    fn euler_product_simple_exponents() {
        let e = Series::from_integers(4, [0, 1]);
        assert_eq!(ints(&euler_product(&e).unwrap()), [1, -1, 0, 0, 0]);
        assert_eq!(euler_product(&Series::zero(4)).unwrap(), Series::one(4));
    }

    #[test]
    fn euler_product_counts_partitions() {
        // All exponents -1 gives the partition generating series; compare
        // against a direct coin-style count.
        let order = 8;
        let e = Series::from_integers(order, [0, -1, -1, -1, -1, -1, -1, -1, -1]);
        let got = ints(&euler_product(&e).unwrap());
        let mut dp = vec![0i64; order + 1];
        dp[0] = 1;
        for part in 1..=order {
            for n in part..=order {
                dp[n] += dp[n - part];
            }
        }
        assert_eq!(got, dp);
        assert_eq!(&got[..6], [1, 1, 2, 3, 5, 7]);
    }

    #[test]
    fn euler_product_rejects_bad_input() {
        assert_eq!(
            euler_product(&Series::one(3)),
            Err(SeriesError::ConstantTermNotZero)
        );
        let half = Series::from_coeffs(
            3,
            [BigRational::zero(), BigRational::new(1.into(), 2.into())],
        );
        assert_eq!(
            euler_product(&half),
            Err(SeriesError::NonIntegerExponent { degree: 1 })
        );
    }

    /// Peels exponents off degree by degree: the lowest unexplained
    /// coefficient of the remainder is the next exponent.
    fn exponents_by_divide_out(p: &Series) -> Series {
        let mut remainder = p.clone();
        let mut out = Series::zero(p.order());
        for i in 1..=p.order() {
            let a = remainder.coeff(i).clone();
            assert!(a.is_integer());
            if !a.is_zero() {
                remainder = remainder.mul(&binomial_factor(i, &a.to_integer(), p.order()));
            }
            out.coeffs[i] = a;
        }
        out
    }

    #[test]
    fn inv_euler_examples() {
        let geom = Series::from_integers(4, [1, 1, 1, 1, 1]);
        assert_eq!(ints(&inv_euler(&geom).unwrap()), [0, 1, 0, 0, 0]);
        assert_eq!(inv_euler(&Series::one(4)).unwrap(), Series::zero(4));
        let p = Series::from_integers(4, [1, 1, 2, 5, 14]);
        let got = inv_euler(&p).unwrap();
        assert_eq!(ints(&got), [0, 1, 1, 3, 8]);
        assert_eq!(got, exponents_by_divide_out(&p));
    }

    #[test]
    fn inv_euler_round_trips() {
        for coeffs in [
            vec![0, 1, 0, 2, -1, 3],
            vec![0, -2, 1, 0, 0, 5],
            vec![0, 4, -3, 2, -1, 1],
        ] {
            let a = Series::from_integers(5, coeffs);
            let p = euler_product(&a.scale(&BigRational::from_integer((-1).into()))).unwrap();
            let back = inv_euler(&p).unwrap();
            assert_eq!(back, a);
            assert_eq!(back, exponents_by_divide_out(&p));
        }
    }

    #[test]
    fn inv_euler_rejects_non_integer_solutions() {
        // sqrt(1/(1-x)) has exponent 1/2 at degree 1.
        let p = Series::from_coeffs(
            3,
            [
                BigRational::one(),
                BigRational::new(1.into(), 2.into()),
                BigRational::new(3.into(), 8.into()),
                BigRational::new(5.into(), 16.into()),
            ],
        );
        assert_eq!(
            inv_euler(&p),
            Err(SeriesError::NonIntegerSolution { degree: 1 })
        );
    }

    #[test]
    fn prelie_hilbert_single_symbol() {
        let t = prelie_hilbert(&x(6)).unwrap();
        assert_eq!(ints(&t), [0, 1, 1, 2, 4, 9, 20]);
    }

    #[test]
    fn prelie_hilbert_edge_cases() {
        assert_eq!(prelie_hilbert(&Series::zero(4)).unwrap(), Series::zero(4));
        assert_eq!(
            prelie_hilbert(&Series::one(4)),
            Err(SeriesError::ConstantTermNotZero)
        );
        let t = prelie_hilbert(&x(3).scale(&BigRational::from_integer(2.into()))).unwrap();
        assert_eq!(ints(&t)[2], 4);
    }

    #[test]
    fn prelie_hilbert_satisfies_fixed_point() {
        for f_d in [
            x(8),
            Series::from_integers(8, [0, 2]),
            Series::from_integers(8, [0, 1, 1]),
        ] {
            let t = prelie_hilbert(&f_d).unwrap();
            let neg = t.scale(&BigRational::from_integer((-1).into()));
            let back = f_d.mul(&euler_product(&neg).unwrap());
            assert_eq!(back, t);
        }
    }

    #[test]
    fn brace_hilbert_single_symbol() {
        let f = brace_hilbert(&x(6)).unwrap();
        assert_eq!(ints(&f), [0, 1, 1, 2, 5, 14, 42]);
    }

    #[test]
    fn brace_hilbert_solves_quadratic() {
        for f_d in [
            x(8),
            Series::from_integers(8, [0, 3]),
            Series::from_integers(8, [0, 1, 1]),
        ] {
            let f = brace_hilbert(&f_d).unwrap();
            assert_eq!(f.sub(&f.mul(&f)), f_d);
        }
        assert_eq!(brace_hilbert(&Series::zero(5)).unwrap(), Series::zero(5));
    }

    #[test]
    fn brace_hilbert_colors_multiply() {
        let d = 3i64;
        let f = brace_hilbert(&Series::from_integers(6, [0, d])).unwrap();
        let single = brace_hilbert(&x(6)).unwrap();
        let got = ints(&f);
        let base = ints(&single);
        for n in 1..=6 {
            assert_eq!(got[n], d.pow(n as u32) * base[n]);
        }
    }

    #[test]
    fn generator_counts_per_alphabet_size() {
        let expected: [[i64; 8]; 3] = [
            [0, 1, 0, 0, 1, 3, 11, 34],
            [0, 2, 0, 2, 20, 116, 736, 4676],
            [0, 3, 0, 9, 105, 909, 8478, 80991],
        ];
        for d in 1..=3i64 {
            let g = generator_hilbert(&Series::from_integers(7, [0, d])).unwrap();
            assert_eq!(ints(&g), expected[(d - 1) as usize], "alphabet size {d}");
        }
    }

    #[test]
    fn generator_count_vanishes_in_degree_two() {
        for d in 1..=5 {
            let g = generator_hilbert(&Series::from_integers(4, [0, d])).unwrap();
            assert!(g.coeff(2).is_zero());
        }
    }

    #[test]
    fn generators_regenerate_brace_dimensions() {
        let two_grades = Series::from_integers(10, [0, 1, 1]);
        for f_d in [
            x(10),
            Series::from_integers(10, [0, 2]),
            Series::from_integers(10, [0, 3]),
            two_grades,
        ] {
            let g = generator_hilbert(&f_d).unwrap();
            assert_eq!(prelie_hilbert(&g).unwrap(), brace_hilbert(&f_d).unwrap());
        }
    }

    #[test]
    fn w_sequence_single_symbol() {
        let w = w_sequence(&x(4)).unwrap();
        assert_eq!(ints(&w), [0, 1, 1, 3, 8]);
        assert_eq!(w_sequence(&Series::zero(4)).unwrap(), Series::zero(4));
    }

    #[test]
    fn w_starts_at_alphabet_size() {
        for d in 1..=4 {
            let w = w_sequence(&Series::from_integers(5, [0, d])).unwrap();
            assert_eq!(w.coeff(1), &BigRational::from_integer(d.into()));
        }
    }

    #[test]
    fn counts_match_enumeration() {
        for d in 1..=2usize {
            let al = DecorationAlphabet::of_size(d);
            let f_d = decoration_series(&al, 7);
            let planar = brace_hilbert(&f_d).unwrap();
            let rooted = prelie_hilbert(&f_d).unwrap();
            for n in 1..=7usize {
                let p = enumerate_planar(&al, n as u64).len();
                let r = enumerate_rooted(&al, n as u64).len();
                assert_eq!(planar.coeff(n), &BigRational::from_integer(p.into()));
                assert_eq!(rooted.coeff(n), &BigRational::from_integer(r.into()));
            }
        }
    }

    #[test]
    fn graded_alphabet_series() {
        let al = DecorationAlphabet::with_grades(["a", "b"], vec![1, 2]).unwrap();
        let f_d = decoration_series(&al, 5);
        assert_eq!(ints(&f_d), [0, 1, 1, 0, 0, 0]);
        let rooted = prelie_hilbert(&f_d).unwrap();
        for n in 1..=5usize {
            let count = enumerate_rooted(&al, n as u64).len();
            assert_eq!(rooted.coeff(n), &BigRational::from_integer(count.into()));
        }
        let planar = brace_hilbert(&f_d).unwrap();
        for n in 1..=5usize {
            let count = enumerate_planar(&al, n as u64).len();
            assert_eq!(planar.coeff(n), &BigRational::from_integer(count.into()));
        }
    }

    #[test]
    fn json_emission() {
        let s = Series::from_integers(3, [1, 0, 2, 5]);
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"order":3,"coeffs":["1","0","2","5"]}"#
        );
    }
}
