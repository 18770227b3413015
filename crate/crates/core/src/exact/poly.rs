//! Sparse multivariate polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::Scalar;

/// Exponent vector; one entry per variable.
pub type Monomial = Vec<u8>;

/// A polynomial in `nvars` variables, stored as a map from exponent vector to
/// a nonzero coefficient. Terms are always fully expanded, so two polynomials
/// are equal exactly when their term maps are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    /// The coordinate function `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable {i} out of range for {nvars} variables");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(Scalar::one(), e)
    }

    pub fn monomial(c: Scalar, exps: Monomial) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// `sum_i coeffs[i] * x_i`.
    pub fn linear(nvars: usize, coeffs: &[Scalar]) -> Self {
        let mut p = Self::zero(nvars);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; nvars];
                e[i] = 1;
                p.add_term(e, c.clone());
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// Coefficient of the given monomial (zero when absent).
    pub fn coeff(&self, m: &[u8]) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| total(e)).max()
    }

    /// True for zero or when every term has total degree `d`.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|e| total(e) == d)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&vec![0; self.nvars])
    }

    /// Variables with a positive exponent in some term.
    pub fn occurring_vars(&self) -> Vec<usize> {
        let mut seen = vec![false; self.nvars];
        for e in self.terms.keys() {
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    seen[i] = true;
                }
            }
        }
        seen.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
    }

    pub(crate) fn add_term(&mut self, e: Monomial, c: Scalar) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_compat(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "polynomials live in different rings");
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        self.check_compat(other);
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn sub_assign_ref(&mut self, other: &Self) {
        self.check_compat(other);
        for (e, c) in &other.terms {
            self.add_term(e.clone(), -c);
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        self.check_compat(other);
        if c.is_zero() {
            return;
        }
        for (e, k) in &other.terms {
            self.add_term(e.clone(), k * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        self.check_compat(other);
        let mut out = Self::zero(self.nvars);
        if self.is_zero() || other.is_zero() {
            return out;
        }
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Monomial = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Value at an exact point.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars, "point has wrong dimension");
        let maxdeg = self.terms.keys().flat_map(|e| e.iter().copied()).max().unwrap_or(0) as usize;
        // powers[i][k] = point[i]^k, built lazily for occurring variables only.
        let mut powers: Vec<Vec<Scalar>> = vec![Vec::new(); self.nvars];
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                if pw.is_empty() {
                    pw.push(Scalar::one());
                    for j in 1..=maxdeg {
                        let next = &pw[j - 1] * &point[i];
                        pw.push(next);
                    }
                }
                t = &t * &pw[k as usize];
            }
            acc += &t;
        }
        acc
    }

    /// Partial derivative with respect to `x_var`.
    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e[var];
            if k == 0 {
                continue;
            }
            let mut f = e.clone();
            f[var] -= 1;
            out.add_term(f, c * &Scalar::from_int(k as i64));
        }
        out
    }

    /// Derivative along the linear vector field `x -> L x`, where `field`
    /// lists the nonzero entries `(row, col, value)` of `L`:
    /// `sum_j (L x)_j * d/dx_j self`.
    pub fn derivative_along_linear(&self, field: &[(usize, usize, Scalar)]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            for (row, col, val) in field {
                let k = e[*row];
                if k == 0 {
                    continue;
                }
                let mut f = e.clone();
                f[*row] -= 1;
                f[*col] += 1;
                out.add_term(f, &(c * val) * &Scalar::from_int(k as i64));
            }
        }
        out
    }

    /// Substitutes `x_i -> images[i]`; every image must live in a common ring.
    pub fn compose(&self, images: &[MultiPoly]) -> Self {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut cache: Vec<Vec<MultiPoly>> = vec![Vec::new(); self.nvars];
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = &mut cache[i];
                if pw.is_empty() {
                    pw.push(Self::one(target));
                }
                while pw.len() <= k as usize {
                    let next = pw.last().unwrap().mul_ref(&images[i]);
                    pw.push(next);
                }
                t = t.mul_ref(&pw[k as usize]);
            }
            out.add_assign_ref(&t);
        }
        out
    }

    /// Re-embeds into `new_nvars` variables, sending `x_i` to `x_{offset+i}`.
    pub fn embed(&self, new_nvars: usize, offset: usize) -> Self {
        assert!(offset + self.nvars <= new_nvars);
        let mut out = Self::zero(new_nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; new_nvars];
            f[offset..offset + self.nvars].copy_from_slice(e);
            out.terms.insert(f, c.clone());
        }
        out
    }

    /// Drops the trailing variables, which must not occur.
    pub fn truncate_vars(&self, new_nvars: usize) -> Self {
        let mut out = Self::zero(new_nvars);
        for (e, c) in &self.terms {
            assert!(e[new_nvars..].iter().all(|&k| k == 0), "truncated variable occurs");
            out.terms.insert(e[..new_nvars].to_vec(), c.clone());
        }
        out
    }

    /// Splits by the power of `x_var`: entry `k` is the coefficient of
    /// `x_var^k`, with `x_var` removed from its terms.
    pub fn coefficients_in(&self, var: usize) -> Vec<MultiPoly> {
        let mut out: Vec<MultiPoly> = Vec::new();
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            while out.len() <= k {
                out.push(Self::zero(self.nvars));
            }
            let mut f = e.clone();
            f[var] = 0;
            out[k].add_term(f, c.clone());
        }
        out
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(e, _)| total(e) == d).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }
}

pub(crate) fn total(e: &[u8]) -> u32 {
    e.iter().map(|&k| k as u32).sum()
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{i}") } else { format!("x{i}^{k}") })
                .collect();
            let (sign, mag) = if c.is_negative() { ("-", c.abs()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.mul_ref(rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&Scalar::from_int(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::s;

    #[test]
    fn commuting_product_cancels() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let p = &(&x * &y) - &(&y * &x);
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
    }

    #[test]
    fn derivative_matches_degree_one_term() {
        // (DF)_v(w) equals the t-linear part of F(v + t w).
        let n = 3;
        let x: Vec<_> = (0..n).map(|i| MultiPoly::var(n, i)).collect();
        let f = &(&x[0] * &x[1].pow(2)) + &x[2].pow(3).scale(&s(5));
        let w = [s(2), s(-1), s(3)];
        let dir: MultiPoly = (0..n).fold(MultiPoly::zero(n), |acc, j| &acc + &f.derivative(j).scale(&w[j]));
        // Substitute x_j -> x_j + t w_j in n+1 variables.
        let t = MultiPoly::var(n + 1, n);
        let images: Vec<_> = (0..n).map(|j| &MultiPoly::var(n + 1, j) + &t.scale(&w[j])).collect();
        let shifted = f.compose(&images);
        let lin = shifted.coefficients_in(n)[1].truncate_vars(n);
        assert_eq!(lin, dir);
    }

    #[test]
    fn linear_field_derivative() {
        // Field x0 -> x1 (L = E_{01}): sum_j (Lx)_j d/dx_j f = x1 * df/dx0.
        let f = MultiPoly::var(2, 0).pow(2);
        let got = f.derivative_along_linear(&[(0, 1, s(1))]);
        let want = (&MultiPoly::var(2, 0) * &MultiPoly::var(2, 1)).scale(&s(2));
        assert_eq!(got, want);
    }

    #[test]
    fn evaluation_and_coefficients() {
        let x = MultiPoly::var(2, 0);
        let l = MultiPoly::var(2, 1);
        let p = (&x + &l).pow(3);
        assert_eq!(p.eval(&[s(1), s(2)]), s(27));
        let cs = p.coefficients_in(1);
        assert_eq!(cs.len(), 4);
        assert_eq!(cs[2], x.scale(&s(3)));
        assert!(p.is_homogeneous(3));
        assert_eq!(p.occurring_vars(), vec![0, 1]);
    }
}
