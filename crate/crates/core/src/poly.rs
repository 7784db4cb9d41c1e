//! Sparse multivariate polynomials with exact integer coefficients, just
//! enough ring arithmetic for the Weierstrass discriminant identities.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial over named variables; keys are exponent vectors over the
/// fixed variable list, values are nonzero integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: i64) -> Self {
        let mut p = Self::zero(vars);
        if c != 0 {
            p.terms.insert(vec![0; p.vars.len()], BigInt::from(c));
        }
        p
    }

    pub fn var(vars: &[&str], name: &str) -> Self {
        let mut p = Self::zero(vars);
        let idx = p.index_of(name);
        let mut exp = vec![0; p.vars.len()];
        exp[idx] = 1;
        p.terms.insert(exp, BigInt::one());
        p
    }

    fn index_of(&self, name: &str) -> usize {
        self.vars
            .iter()
            .position(|v| v == name)
            .unwrap_or_else(|| panic!("unknown variable {name}"))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    fn insert(&mut self, exp: Vec<u32>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn assert_same_vars(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "mixed variable sets");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.insert(exp.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.insert(exp.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero_like(self);
        for (exp, c) in &self.terms {
            out.terms.insert(exp.clone(), -c.clone());
        }
        out
    }

    fn zero_like(p: &Self) -> Self {
        MultiPoly {
            vars: p.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut out = Self::zero_like(self);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert(exp, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        let mut out = Self::zero_like(self);
        for (exp, c) in &self.terms {
            let v = c * &k;
            if !v.is_zero() {
                out.terms.insert(exp.clone(), v);
            }
        }
        out
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut out = Self::constant_like(self, 1);
        while n > 0 {
            if n & 1 == 1 {
                out = out.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    fn constant_like(p: &Self, c: i64) -> Self {
        let mut out = Self::zero_like(p);
        if c != 0 {
            out.terms.insert(vec![0; p.vars.len()], BigInt::from(c));
        }
        out
    }

    /// Exact coefficient of a monomial given as (variable, exponent) pairs;
    /// unlisted variables must have exponent zero.
    pub fn coeff_of(&self, monomial: &[(&str, u32)]) -> BigInt {
        let mut exp = vec![0u32; self.vars.len()];
        for (name, e) in monomial {
            exp[self.index_of(name)] = *e;
        }
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Collect the coefficient of `var^power` as a polynomial in the
    /// remaining variables (which keeps the full variable list).
    pub fn coeff_in_var(&self, var: &str, power: u32) -> Self {
        let idx = self.index_of(var);
        let mut out = Self::zero_like(self);
        for (exp, c) in &self.terms {
            if exp[idx] == power {
                let mut e = exp.clone();
                e[idx] = 0;
                out.insert(e, c.clone());
            }
        }
        out
    }

    /// Substitute an integer for one variable.
    pub fn eval_var(&self, var: &str, value: i64) -> Self {
        let idx = self.index_of(var);
        let value = BigInt::from(value);
        let mut out = Self::zero_like(self);
        for (exp, c) in &self.terms {
            let mut e = exp.clone();
            let p = e[idx];
            e[idx] = 0;
            out.insert(e, c * value.pow(p));
        }
        out
    }

    /// Lowest exponent of `var` among nonzero terms, if any.
    pub fn valuation(&self, var: &str) -> Option<u32> {
        let idx = self.index_of(var);
        self.terms.keys().map(|e| e[idx]).min()
    }

    /// Highest exponent of `var` among nonzero terms, if any.
    pub fn degree_in(&self, var: &str) -> Option<u32> {
        let idx = self.index_of(var);
        self.terms.keys().map(|e| e[idx]).max()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest total degree first, then reverse-lexicographic
        let mut terms: Vec<(&Vec<u32>, &BigInt)> = self.terms.iter().collect();
        terms.sort_by(|(ea, _), (eb, _)| {
            let da: u32 = ea.iter().sum();
            let db: u32 = eb.iter().sum();
            db.cmp(&da).then_with(|| ea.cmp(eb))
        });
        for (i, (exp, c)) in terms.iter().enumerate() {
            let mono: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        self.vars[v].clone()
                    } else {
                        format!("{}^{}", self.vars[v], e)
                    }
                })
                .collect();
            let mono = mono.join("*");
            let (sign, mag) = if c.sign() == num_bigint::Sign::Minus {
                ("-", c.magnitude().to_string())
            } else {
                ("+", c.magnitude().to_string())
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    const V: &[&str] = &["t", "x"];

    fn t_plus_1_pow(n: u32) -> MultiPoly {
        let t4 = MultiPoly::var(V, "t").pow(4);
        t4.add(&MultiPoly::constant(V, 1)).pow(n)
    }

    #[test]
    fn binomial_square() {
        // (t^4 + 1)^2 = t^8 + 2 t^4 + 1
        let p = t_plus_1_pow(2);
        assert_eq!(p.coeff_of(&[("t", 8)]), BigInt::from(1));
        assert_eq!(p.coeff_of(&[("t", 4)]), BigInt::from(2));
        assert_eq!(p.coeff_of(&[]), BigInt::from(1));
        assert_eq!(p.num_terms(), 3);
    }

    #[test]
    fn display_reads_naturally() {
        let p = t_plus_1_pow(2);
        assert_eq!(p.to_string(), "t^8 + 2*t^4 + 1");
        let q = MultiPoly::var(V, "x").sub(&MultiPoly::var(V, "t"));
        assert_eq!(q.to_string(), "x - t");
    }

    fn random_poly(rng: &mut impl Rng) -> MultiPoly {
        let mut p = MultiPoly::zero(V);
        for _ in 0..rng.gen_range(0..6) {
            let exp = vec![rng.gen_range(0..4u32), rng.gen_range(0..4u32)];
            p.insert(exp, BigInt::from(rng.gen_range(-5i64..=5)));
        }
        p
    }

    #[test]
    fn ring_axioms_on_random_inputs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let a = random_poly(&mut rng);
            let b = random_poly(&mut rng);
            let c = random_poly(&mut rng);
            assert_eq!(a.mul(&b), b.mul(&a));
            assert_eq!(a.add(&b), b.add(&a));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            assert_eq!(a.sub(&a), MultiPoly::zero(V));
        }
    }

    #[test]
    fn coeff_of_product_matches_convolution() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let a = random_poly(&mut rng);
            let b = random_poly(&mut rng);
            let prod = a.mul(&b);
            for et in 0..8u32 {
                for ex in 0..8u32 {
                    let mut expected = BigInt::zero();
                    for i in 0..=et {
                        for j in 0..=ex {
                            expected += a.coeff_of(&[("t", i), ("x", j)])
                                * b.coeff_of(&[("t", et - i), ("x", ex - j)]);
                        }
                    }
                    assert_eq!(prod.coeff_of(&[("t", et), ("x", ex)]), expected);
                }
            }
        }
    }

    #[test]
    fn eval_and_valuation() {
        let t = MultiPoly::var(V, "t");
        let p = t.pow(3).scale(4); // 4 t^3
        assert_eq!(p.valuation("t"), Some(3));
        assert_eq!(p.degree_in("t"), Some(3));
        let at2 = p.eval_var("t", 2);
        assert_eq!(at2.coeff_of(&[]), BigInt::from(32));
    }
}
