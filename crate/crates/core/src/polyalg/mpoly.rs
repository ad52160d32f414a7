//! Sparse multivariate polynomials over ℚ in named variables.

use super::PolyError;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// Exponent vector, indexed like [`MPoly::vars`].
pub type Exponents = Vec<u32>;

/// Multivariate polynomial with rational coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by exponent vectors, so the map order
/// is the lexicographic monomial order with the first variable most
/// significant. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, BigRational>,
}

/// Value assigned to a variable during evaluation.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Complex(Complex64),
}

impl MPoly {
    pub fn zero(vars: &[&str]) -> Self {
        Self {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: BigRational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn from_int(vars: &[&str], c: i64) -> Self {
        Self::constant(vars, BigRational::from_integer(BigInt::from(c)))
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: &[&str], name: &str) -> Result<Self, PolyError> {
        let idx = vars
            .iter()
            .position(|v| *v == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(e, BigRational::one());
        Ok(p)
    }

    pub fn from_terms(
        vars: &[&str],
        terms: impl IntoIterator<Item = (Exponents, BigRational)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent length mismatch");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
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

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn var_index(&self, name: &str) -> Result<usize, PolyError> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    pub fn degree_in(&self, name: &str) -> Result<u32, PolyError> {
        let i = self.var_index(name)?;
        Ok(self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Re-expresses over `vars`, which must contain every variable that
    /// actually occurs in `self`.
    pub fn with_vars(&self, vars: &[String]) -> Result<Self, PolyError> {
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match vars.iter().position(|w| w == v) {
                Some(j) => map.push(Some(j)),
                None => {
                    if self.terms.keys().any(|e| e[i] != 0) {
                        return Err(PolyError::UnknownVariable(v.clone()));
                    }
                    map.push(None)
                }
            }
        }
        let mut out = Self {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            let mut f = vec![0; vars.len()];
            for (i, &k) in e.iter().enumerate() {
                if let Some(j) = map[i] {
                    f[j] = k;
                }
            }
            out.add_term(f, c.clone());
        }
        Ok(out)
    }

    fn unify(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        (
            self.with_vars(&vars).expect("superset"),
            other.with_vars(&vars).expect("superset"),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.unify(other);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }

    pub fn neg(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.unify(other);
        let mut out = Self {
            vars: a.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e1, c1) in &a.terms {
            for (e2, c2) in &b.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(
            &self.vars.iter().map(String::as_str).collect::<Vec<_>>(),
            BigRational::one(),
        );
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Leading term in lex order.
    fn leading(&self) -> Option<(&Exponents, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Exact division in ℚ[vars]; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (mut r, d) = self.unify(d);
        let (de, dc) = {
            let (e, c) = d.leading()?;
            (e.clone(), c.clone())
        };
        let mut q = Self {
            vars: r.vars.clone(),
            terms: BTreeMap::new(),
        };
        while let Some((re, rc)) = r.leading() {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Exponents = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let qc = rc / &dc;
            let mono = Self {
                vars: r.vars.clone(),
                terms: BTreeMap::from([(qe.clone(), qc.clone())]),
            };
            r = r.sub(&mono.mul(&d));
            q.add_term(qe, qc);
        }
        Some(q)
    }

    /// Coefficients with respect to `name`: entry `k` is the coefficient of
    /// `name^k`, still expressed over the full variable list.
    pub fn coeffs_in(&self, name: &str) -> Result<Vec<Self>, PolyError> {
        let i = self.var_index(name)?;
        let deg = self.degree_in(name)? as usize;
        let mut out = vec![
            Self {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
            if self.is_zero() { 0 } else { deg + 1 }
        ];
        for (e, c) in &self.terms {
            let mut f = e.clone();
            let k = f[i] as usize;
            f[i] = 0;
            out[k].add_term(f, c.clone());
        }
        Ok(out)
    }

    /// Substitutes rational values for some variables; the result keeps the
    /// same variable list.
    pub fn eval_partial(&self, assignment: &[(&str, BigRational)]) -> Result<Self, PolyError> {
        let mut idx = Vec::new();
        for (name, v) in assignment {
            idx.push((self.var_index(name)?, v));
        }
        let mut out = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            let mut f = e.clone();
            let mut c = c.clone();
            for (i, v) in &idx {
                c *= pow_rational(v, f[*i]);
                f[*i] = 0;
            }
            out.add_term(f, c);
        }
        Ok(out)
    }

    /// Full evaluation. Every variable occurring in `self` must be assigned;
    /// rational assignments give an exact result unless a complex value is
    /// present.
    pub fn eval(&self, assignment: &HashMap<String, Scalar>) -> Result<Scalar, PolyError> {
        let mut vals = Vec::with_capacity(self.vars.len());
        let mut all_rational = true;
        for (i, v) in self.vars.iter().enumerate() {
            match assignment.get(v) {
                Some(s) => {
                    if matches!(s, Scalar::Complex(_)) {
                        all_rational = false;
                    }
                    vals.push(Some(s.clone()));
                }
                None => {
                    if self.terms.keys().any(|e| e[i] != 0) {
                        return Err(PolyError::UnknownVariable(v.clone()));
                    }
                    vals.push(None);
                }
            }
        }
        if all_rational {
            let mut acc = BigRational::zero();
            for (e, c) in &self.terms {
                let mut t = c.clone();
                for (k, val) in e.iter().zip(&vals) {
                    if let Some(Scalar::Rational(r)) = val {
                        t *= pow_rational(r, *k);
                    }
                }
                acc += t;
            }
            return Ok(Scalar::Rational(acc));
        }
        let cvals: Vec<Complex64> = vals
            .iter()
            .map(|v| match v {
                Some(Scalar::Complex(z)) => *z,
                Some(Scalar::Rational(r)) => Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0),
                None => Complex64::zero(),
            })
            .collect();
        Ok(Scalar::Complex(self.eval_complex_slice(&cvals)))
    }

    /// Double-precision evaluation with values given in variable order.
    pub fn eval_complex_slice(&self, vals: &[Complex64]) -> Complex64 {
        let mut acc = Complex64::zero();
        for (e, c) in &self.terms {
            let mut t = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
            for (k, z) in e.iter().zip(vals) {
                if *k > 0 {
                    t *= z.powu(*k);
                }
            }
            acc += t;
        }
        acc
    }

    /// Multiplies by the lcm of the coefficient denominators, returning the
    /// integer coefficients.
    pub fn clear_denominators(&self) -> Vec<(Exponents, BigInt)> {
        use num_integer::Integer;
        let lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        self.terms
            .iter()
            .map(|(e, c)| {
                (
                    e.clone(),
                    (c * BigRational::from_integer(lcm.clone())).to_integer(),
                )
            })
            .collect()
    }
}

fn pow_rational(v: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..k {
        acc *= v;
    }
    acc
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            let mut parts = Vec::new();
            let is_const = e.iter().all(|&k| k == 0);
            if !a.is_one() || is_const {
                parts.push(a.to_string());
            }
            for (v, &k) in self.vars.iter().zip(e) {
                match k {
                    0 => {}
                    1 => parts.push(v.clone()),
                    _ => parts.push(format!("{v}^{k}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const V: &[&str] = &["m", "l"];

    fn m() -> MPoly {
        MPoly::var(V, "m").unwrap()
    }
    fn l() -> MPoly {
        MPoly::var(V, "l").unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let p = m().add(&l()).mul(&m().sub(&l()));
        let expect = m().mul(&m()).sub(&l().mul(&l()));
        assert_eq!(p, expect);
    }

    #[test]
    fn eval_l_minus_one_at_one() {
        let p = l().sub(&MPoly::from_int(V, 1));
        let mut a = HashMap::new();
        a.insert("l".to_string(), Scalar::Rational(BigRational::one()));
        match p.eval(&a).unwrap() {
            Scalar::Rational(r) => assert!(r.is_zero()),
            _ => panic!("expected exact value"),
        }
    }

    #[test]
    fn unknown_variable_is_reported() {
        assert!(matches!(
            MPoly::var(V, "t"),
            Err(PolyError::UnknownVariable(_))
        ));
        let p = m().add(&l());
        let a: HashMap<String, Scalar> =
            [("m".to_string(), Scalar::Rational(BigRational::one()))].into();
        assert!(matches!(p.eval(&a), Err(PolyError::UnknownVariable(_))));
    }

    #[test]
    fn exact_division() {
        let a = m().mul(&m()).sub(&l().mul(&l()));
        let d = m().sub(&l());
        assert_eq!(a.div_exact(&d), Some(m().add(&l())));
        assert_eq!(a.div_exact(&m()), None);
    }

    #[test]
    fn mixed_variable_sets_unify() {
        let t = MPoly::var(&["t"], "t").unwrap();
        let p = m().mul(&t);
        assert_eq!(
            p.vars(),
            &["m".to_string(), "l".to_string(), "t".to_string()]
        );
        assert_eq!(p.total_degree(), 2);
    }
}
