//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients. Variable `x_i` is indexed by the edge identifier `i`.
//!
//! Terms are kept in graded lexicographic order with `x_0 > x_1 > ...`, so
//! two polynomials are equal exactly when their term maps are equal. Text
//! rendering lists terms from the largest down, e.g. `x1*x3 - x2*x4`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::sets::EdgeSet;

/// A monomial as sorted `(variable, exponent)` pairs with positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(usize, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        Monomial(vec![(i, 1)])
    }

    /// The squarefree monomial `∏_{i ∈ s} x_i`.
    pub fn from_set(s: EdgeSet) -> Self {
        Monomial(s.iter().map(|i| (i, 1)).collect())
    }

    pub fn from_exponents(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut map: BTreeMap<usize, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_default() += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0.iter().find(|&&(v, _)| v == var).map_or(0, |&(_, e)| e)
    }

    pub fn exponents(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn variables(&self) -> EdgeSet {
        self.0.iter().map(|&(v, _)| v).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(&(a, ea)), Some(&(b, eb))) if a == b => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
                (Some(&(a, ea)), Some(&(b, _))) if a < b => {
                    out.push((a, ea));
                    i += 1;
                }
                (Some(_), Some(&(b, eb))) => {
                    out.push((b, eb));
                    j += 1;
                }
                (Some(&p), None) => {
                    out.push(p);
                    i += 1;
                }
                (None, Some(&p)) => {
                    out.push(p);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::new();
        let mut j = 0;
        for &(v, e) in &self.0 {
            let d = match other.0.get(j) {
                Some(&(w, f)) if w == v => {
                    j += 1;
                    if f > e {
                        return None;
                    }
                    f
                }
                Some(&(w, _)) if w < v => return None,
                _ => 0,
            };
            if e > d {
                out.push((v, e - d));
            }
        }
        (j == other.0.len()).then_some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (mut i, mut j) = (0, 0);
            loop {
                match (self.0.get(i), other.0.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(a, ea)), Some(&(b, eb))) => {
                        if a != b {
                            // the side holding the smaller variable is larger
                            return if a < b { Ordering::Greater } else { Ordering::Less };
                        }
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(i: usize) -> Self {
        Self::term(1, Monomial::var(i))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut p = MultiPoly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self == other` or `self == -other`.
    pub fn equal_up_to_sign(&self, other: &MultiPoly) -> bool {
        self == other || *self == -other.clone()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn variables(&self) -> EdgeSet {
        self.terms.keys().fold(EdgeSet::EMPTY, |acc, m| acc | m.variables())
    }

    pub fn is_multilinear(&self) -> bool {
        self.terms.keys().all(Monomial::is_squarefree)
    }

    /// Monomial support as edge sets; `None` when some exponent exceeds one.
    pub fn support_sets(&self) -> Option<Vec<EdgeSet>> {
        self.terms.keys().map(|m| m.is_squarefree().then(|| m.variables())).collect()
    }

    /// Multiplies by `-1` when the leading coefficient is negative.
    pub fn normalized_sign(self) -> Self {
        match self.leading_term() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    /// Sets every variable in `vars` to zero.
    pub fn set_zero(&self, vars: EdgeSet) -> Self {
        MultiPoly {
            terms: self.terms.iter().filter(|(m, _)| !m.variables().intersects(vars)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Exact evaluation. Every variable of `self` must be assigned.
    pub fn eval_int(&self, assignment: &BTreeMap<usize, BigInt>) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.exponents() {
                let x = assignment.get(&v).ok_or_else(|| Error::domain(format!("no value for x{v}")))?;
                t *= num_traits::pow(x.clone(), e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Exact quotient `self / divisor`; `None` if the division leaves a
    /// remainder or the divisor is zero.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        let (lm, lc) = divisor.leading_term()?;
        if divisor.terms.len() == 1 {
            let mut q = MultiPoly::zero();
            for (m, c) in &self.terms {
                let qm = m.div(lm)?;
                if !(c % lc).is_zero() {
                    return None;
                }
                q.terms.insert(qm, c / lc);
            }
            return Some(q);
        }
        let mut rem = self.clone();
        let mut q = MultiPoly::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lm)?;
            if !(c % lc).is_zero() {
                return None;
            }
            let qc = c / lc;
            let step = MultiPoly::term(qc.clone(), qm.clone());
            rem = rem - &step * divisor;
            q.add_term(qm, qc);
        }
        Some(q)
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if m.exponents().is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    /// Parses the rendering produced by `Display`; a leading `+` is allowed.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse(1, "empty polynomial"));
        }
        let mut out = MultiPoly::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (neg, body) = match rest.as_bytes()[0] {
                b'+' => (false, &rest[1..]),
                b'-' => (true, &rest[1..]),
                _ => (false, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            if term.is_empty() {
                return Err(Error::parse(1, format!("missing term in {s:?}")));
            }
            let mut coeff = BigInt::one();
            let mut mono = Vec::new();
            for factor in term.split('*') {
                if let Some(var) = factor.strip_prefix('x') {
                    let (idx, exp) = match var.split_once('^') {
                        Some((i, e)) => (i, e.parse::<u32>().map_err(|_| Error::parse(1, format!("bad exponent in {factor:?}")))?),
                        None => (var, 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| Error::parse(1, format!("bad variable {factor:?}")))?;
                    mono.push((idx, exp));
                } else {
                    let c: BigInt = factor.parse().map_err(|_| Error::parse(1, format!("bad factor {factor:?}")))?;
                    coeff *= c;
                }
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(Monomial::from_exponents(mono), coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn product_of_sum_and_difference() {
        let a = MultiPoly::var(1) + MultiPoly::var(2);
        let b = MultiPoly::var(1) - MultiPoly::var(2);
        assert_eq!(a * b, p("x1^2 - x2^2"));
    }

    #[test]
    fn ring_identities() {
        let q = p("x1 + x2 + x3");
        assert!((q.clone() + -q.clone()).is_zero());
        assert_eq!(&q * &MultiPoly::one(), q);
        assert!((&q * &MultiPoly::zero()).is_zero());
    }

    #[test]
    fn sign_comparison() {
        assert!(p("x1 - x2").equal_up_to_sign(&p("x2 - x1")));
        assert!(!p("x1").equal_up_to_sign(&p("x2")));
    }

    #[test]
    fn evaluation() {
        let ones: BTreeMap<usize, BigInt> = (0..5).map(|i| (i, BigInt::one())).collect();
        assert_eq!(p("x1 + x2 + x3").eval_int(&ones).unwrap(), BigInt::from(3));
        let zeros: BTreeMap<usize, BigInt> = (0..5).map(|i| (i, BigInt::zero())).collect();
        assert_eq!(p("7 + x1*x2").eval_int(&zeros).unwrap(), BigInt::from(7));
        assert!(matches!(p("x9").eval_int(&zeros), Err(Error::Domain(_))));
    }

    #[test]
    fn rendering() {
        assert_eq!(p("x2*x4 + x1*x3").to_string(), "x1*x3 + x2*x4");
        assert_eq!(p("+ x1*x3 - x2*x4").to_string(), "x1*x3 - x2*x4");
        assert_eq!(p("-2*x3 + 5").to_string(), "-2*x3 + 5");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(p("x1 + x2 + x3").to_string(), "x1 + x2 + x3");
    }

    #[test]
    fn grlex_order() {
        // degree first, then x1 > x2 > ...
        let m = |v: &[(usize, u32)]| Monomial::from_exponents(v.iter().copied());
        assert!(m(&[(5, 2)]) > m(&[(1, 1)]));
        assert!(m(&[(1, 1)]) > m(&[(2, 1)]));
        assert!(m(&[(1, 1), (3, 1)]) > m(&[(2, 1), (4, 1)]));
        assert!(m(&[(1, 2)]) > m(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn exact_division() {
        let a = p("x1 + x2");
        let b = p("x1 - 2*x3 + 4");
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a));
        assert_eq!(p("x1 + 1").div_exact(&p("x2")), None);
        assert_eq!(p("x1").div_exact(&MultiPoly::zero()), None);
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((-4i64..5, prop::collection::vec((0usize..4, 1u32..3), 0..3)), 0..5)
            .prop_map(|ts| MultiPoly::from_terms(ts.into_iter().map(|(c, m)| (Monomial::from_exponents(m), BigInt::from(c)))))
    }

    proptest! {
        #[test]
        fn associativity_and_distributivity(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }

        #[test]
        fn evaluation_is_additive(a in arb_poly(), b in arb_poly(), vals in prop::collection::vec(-50i64..50, 4)) {
            let sigma: BTreeMap<usize, BigInt> = vals.into_iter().enumerate().map(|(i, v)| (i, BigInt::from(v))).collect();
            let lhs = (&a + &b).eval_int(&sigma).unwrap();
            prop_assert_eq!(lhs, a.eval_int(&sigma).unwrap() + b.eval_int(&sigma).unwrap());
        }

        #[test]
        fn render_parse_round_trip(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<MultiPoly>().unwrap(), a);
        }

        #[test]
        fn division_undoes_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }
    }
}
