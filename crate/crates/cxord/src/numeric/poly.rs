//! Univariate polynomials with scalar coefficients, ascending degree order.

use super::Scalar;
use std::fmt;

/// Dense univariate polynomial. The coefficient vector never ends in a
/// structural zero; the zero polynomial has an empty vector.
#[derive(Clone, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c0 + c1 x`
    pub fn linear(c0: T, c1: T) -> Self {
        Polynomial::new(vec![c0, c1])
    }

    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = T::one();
        Polynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Polynomial::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        Polynomial::new(out)
    }

    pub fn neg(&self) -> Self {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn scale(&self, s: &T) -> Self {
        Polynomial::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * T::from_int(k as i64))
            .collect();
        Polynomial::new(out)
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(T::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            out.push(c.clone() / T::from_int((k + 1) as i64));
        }
        Polynomial::new(out)
    }

    /// Definite integral over `[l, r]`.
    pub fn integral(&self, l: &T, r: &T) -> T {
        let anti = self.antiderivative();
        anti.eval(r) - anti.eval(l)
    }

    /// Composition with an affine map: returns `P(p + q x)`.
    pub fn compose_affine(&self, p: &T, q: &T) -> Self {
        let mut acc = Polynomial::zero();
        let arg = Polynomial::linear(p.clone(), q.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&arg).add(&Polynomial::constant(c.clone()));
        }
        acc
    }

    /// Euclidean division: `self = q * den + r` with `deg r < deg den`.
    pub fn divmod(&self, den: &Self) -> (Self, Self) {
        assert!(!den.is_zero(), "polynomial division by zero");
        let dd = den.degree().unwrap();
        let lead = den.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap().clone() / lead.clone();
            quot[rd - dd] = factor.clone();
            let mut sub = vec![T::zero(); rd + 1];
            for (k, c) in den.coeffs.iter().enumerate() {
                sub[k + rd - dd] = c.clone() * factor.clone();
            }
            rem = rem.sub(&Polynomial::new(sub));
        }
        (Polynomial::new(quot), rem)
    }

    /// Monic greatest common divisor (exact scalar types only).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        if let Some(lead) = a.leading() {
            let inv = T::one() / lead.clone();
            a = a.scale(&inv);
        }
        a
    }

    /// Squarefree part `P / gcd(P, P')` (exact scalar types only).
    pub fn squarefree(&self) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) || g.is_zero() {
            self.clone()
        } else {
            self.divmod(&g).0
        }
    }

    /// Deflate by a known root: returns `self / (x - root)`.
    pub fn deflate(&self, root: &T) -> Self {
        let div = Polynomial::linear(-root.clone(), T::one());
        self.divmod(&div).0
    }

    /// Crude upper bound for `|P|` on `[l, r]`: sum of |c_k| M^k with
    /// `M = max(|l|, |r|)`.
    pub fn sup_bound(&self, l: &T, r: &T) -> T {
        let m = T::max_of(l.abs(), r.abs());
        let mut acc = T::zero();
        let mut pw = T::one();
        for c in &self.coeffs {
            acc = acc + c.abs() * pw.clone();
            pw = pw * m.clone();
        }
        acc
    }
}

impl<T: Scalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c})*x"),
                _ => format!("({c})*x^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<T: Scalar> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Rad;

    fn p(cs: &[i64]) -> Polynomial<Rad> {
        Polynomial::new(cs.iter().map(|&c| Rad::from_int(c)).collect())
    }

    #[test]
    fn derivative_of_antiderivative_roundtrips() {
        let q = Polynomial::new(vec![
            Rad::from_ratio(1, 3),
            Rad::sqrt_int(2),
            Rad::from_ratio(-7, 5),
        ]);
        assert_eq!(q.antiderivative().derivative(), q);
    }

    #[test]
    fn divmod_reconstructs() {
        let a = p(&[1, 0, -3, 2, 5]);
        let b = p(&[2, 1, 1]);
        let (q, r) = a.divmod(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < b.degree().unwrap());
    }

    #[test]
    fn gcd_detects_common_factor() {
        // (x-1)(x-2) and (x-1)(x+3) share (x-1)
        let a = p(&[2, -3, 1]);
        let b = p(&[-3, 2, 1]);
        let g = a.gcd(&b);
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn squarefree_strips_multiplicity() {
        // (x - 1/2)^2 -> x - 1/2 up to normalization
        let half = Rad::from_ratio(1, 2);
        let lin = Polynomial::linear(-half.clone(), Rad::one());
        let sq = lin.mul(&lin);
        let sf = sq.squarefree();
        assert_eq!(sf.degree(), Some(1));
        assert!(sf.eval(&half).is_zero());
    }

    #[test]
    fn affine_composition() {
        let q = p(&[0, 0, 1]); // x^2
        let shifted = q.compose_affine(&Rad::from_int(1), &Rad::from_int(2)); // (1+2x)^2
        assert_eq!(shifted, p(&[1, 4, 4]));
    }
}
