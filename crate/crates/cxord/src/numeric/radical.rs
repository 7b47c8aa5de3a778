//! Exact arithmetic in `Q(sqrt(d1), sqrt(d2), ...)`.
//!
//! A [`Rad`] is `r0 + sum c_i * sqrt(d_i)` with rational `r0`, `c_i` and
//! pairwise distinct squarefree integer radicands `d_i >= 2`. Square roots
//! of distinct squarefree integers are linearly independent over the
//! rationals, so this representation is canonical and equality is plain
//! structural comparison. The set of such values is closed under the four
//! field operations: products of radicals reduce by extracting the square
//! part of the product of radicands, and inverses are computed by repeated
//! conjugation, one prime of the radicand support at a time.

use num_bigint::{BigInt, Sign as BSign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Extract the square part of `n`: returns `(k, m)` with `n = k^2 * m`
/// and `m` squarefree.
fn extract_square(mut n: u64) -> (u64, u64) {
    let mut square_root = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0u32;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            square_root *= p.pow(e / 2);
            if e % 2 == 1 {
                free *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // remaining n is 1 or a prime
    free *= n;
    (square_root, free)
}

fn smallest_prime_factor(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut p = 3u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return p;
        }
        p += 2;
    }
    n
}

/// An element of the real field generated over the rationals by square
/// roots of positive integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rad {
    rational: BigRational,
    /// squarefree radicand (>= 2) -> nonzero rational coefficient
    terms: BTreeMap<u64, BigRational>,
}

impl Rad {
    pub fn zero() -> Self {
        Rad {
            rational: BigRational::zero(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Rad::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Rad::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rad::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Rad {
            rational: r,
            terms: BTreeMap::new(),
        }
    }

    /// `sqrt(d)` for a positive integer `d` (square part extracted).
    pub fn sqrt_int(d: u64) -> Self {
        assert!(d > 0, "radicand must be positive");
        let (k, m) = extract_square(d);
        let kq = BigRational::from_integer(BigInt::from(k));
        if m == 1 {
            Rad::from_rational(kq)
        } else {
            let mut terms = BTreeMap::new();
            terms.insert(m, kq);
            Rad {
                rational: BigRational::zero(),
                terms,
            }
        }
    }

    /// `c * sqrt(d)`.
    pub fn radical(c: BigRational, d: u64) -> Self {
        Rad::from_rational(c) * Rad::sqrt_int(d)
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn radical_terms(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.terms.iter().map(|(d, c)| (*d, c))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.terms.is_empty() {
            Some(&self.rational)
        } else {
            None
        }
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }

    fn add_term(&mut self, d: u64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        if d == 1 {
            self.rational += c;
            return;
        }
        let entry = self.terms.entry(d).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&d);
        }
    }

    /// Split off the prime `p`: writes `self = a + b * sqrt(p)` where the
    /// radicand supports of `a` and `b` avoid `p`.
    fn split(&self, p: u64) -> (Rad, Rad) {
        let mut a = Rad::from_rational(self.rational.clone());
        let mut b = Rad::zero();
        for (&d, c) in &self.terms {
            if d % p == 0 {
                b.add_term(d / p, c.clone());
            } else {
                a.add_term(d, c.clone());
            }
        }
        (a, b)
    }

    fn support_prime(&self) -> Option<u64> {
        self.terms
            .keys()
            .map(|&d| smallest_prime_factor(d))
            .min()
    }

    /// Exact sign by recursive conjugation over the prime support.
    pub fn sign_exact(&self) -> Ordering {
        match self.support_prime() {
            None => rational_sign(&self.rational),
            Some(p) => {
                let (a, b) = self.split(p);
                let sa = a.sign_exact();
                let sb = b.sign_exact();
                match (sa, sb) {
                    (Ordering::Equal, s) | (s, Ordering::Equal) => s,
                    (x, y) if x == y => x,
                    (sa, _) => {
                        // a and b*sqrt(p) pull in opposite directions:
                        // sign(a + b sqrt p) = sign(a^2 - p b^2) * sign(a)
                        let disc = a.clone() * a - Rad::from_int(p as i64) * b.clone() * b;
                        let sd = disc.sign_exact();
                        debug_assert!(
                            sd != Ordering::Equal,
                            "sqrt({p}) cannot lie in the complement field"
                        );
                        compose_sign(sd, sa)
                    }
                }
            }
        }
    }

    pub fn inv(&self) -> Rad {
        assert!(!self.is_zero(), "division by zero Rad");
        match self.support_prime() {
            None => Rad::from_rational(self.rational.recip()),
            Some(p) => {
                let (a, b) = self.split(p);
                let conj = a.clone() - b.clone() * Rad::sqrt_int(p);
                let norm = a.clone() * a - Rad::from_int(p as i64) * b.clone() * b;
                conj * norm.inv()
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        let mut acc = rational_to_f64(&self.rational);
        for (&d, c) in &self.terms {
            acc += rational_to_f64(c) * (d as f64).sqrt();
        }
        acc
    }

    /// Rational enclosure `[lo, hi]` with `hi - lo <= 2^(1-bits)` per term.
    ///
    /// Widths shrink monotonically as `bits` grows, which is what makes the
    /// lowering interval-refinable.
    pub fn approx_interval(&self, bits: u32) -> (BigRational, BigRational) {
        let mut lo = self.rational.clone();
        let mut hi = self.rational.clone();
        for (&d, c) in &self.terms {
            let (slo, shi) = sqrt_interval(d, bits);
            let (tlo, thi) = if c.is_negative() {
                (c * &shi, c * &slo)
            } else {
                (c * &slo, c * &shi)
            };
            lo += tlo;
            hi += thi;
        }
        (lo, hi)
    }

    /// Midpoint of the enclosure at the given precision, as an exact rational.
    pub fn approx_rational(&self, bits: u32) -> BigRational {
        let (lo, hi) = self.approx_interval(bits);
        (lo + hi) / BigRational::from_integer(BigInt::from(2))
    }
}

fn compose_sign(a: Ordering, b: Ordering) -> Ordering {
    match (a, b) {
        (Ordering::Equal, _) | (_, Ordering::Equal) => Ordering::Equal,
        (x, y) if x == y => Ordering::Greater,
        _ => Ordering::Less,
    }
}

fn rational_sign(r: &BigRational) -> Ordering {
    match r.numer().sign() {
        BSign::Minus => Ordering::Less,
        BSign::NoSign => Ordering::Equal,
        BSign::Plus => Ordering::Greater,
    }
}

/// `sqrt(d)` enclosed in a rational interval of width `2^-bits`.
fn sqrt_interval(d: u64, bits: u32) -> (BigRational, BigRational) {
    let scale = BigInt::one() << bits;
    let n = BigInt::from(d) * &scale * &scale;
    let s = n.sqrt(); // floor integer square root
    let lo = BigRational::new(s.clone(), scale.clone());
    let hi = BigRational::new(s + BigInt::one(), scale);
    (lo, hi)
}

impl Add for Rad {
    type Output = Rad;
    fn add(self, rhs: Rad) -> Rad {
        let mut out = Rad {
            rational: self.rational + rhs.rational,
            terms: self.terms,
        };
        for (d, c) in rhs.terms {
            out.add_term(d, c);
        }
        out.prune();
        out
    }
}

impl Sub for Rad {
    type Output = Rad;
    fn sub(self, rhs: Rad) -> Rad {
        self + (-rhs)
    }
}

impl Neg for Rad {
    type Output = Rad;
    fn neg(self) -> Rad {
        Rad {
            rational: -self.rational,
            terms: self.terms.into_iter().map(|(d, c)| (d, -c)).collect(),
        }
    }
}

impl Mul for Rad {
    type Output = Rad;
    fn mul(self, rhs: Rad) -> Rad {
        let mut out = Rad::from_rational(&self.rational * &rhs.rational);
        for (&d, c) in &self.terms {
            out.add_term(d, c * &rhs.rational);
        }
        for (&e, g) in &rhs.terms {
            out.add_term(e, g * &self.rational);
        }
        for (&d, c) in &self.terms {
            for (&e, g) in &rhs.terms {
                let (k, m) = extract_square(d * e);
                let coeff = c * g * BigRational::from_integer(BigInt::from(k));
                out.add_term(m, coeff);
            }
        }
        out.prune();
        out
    }
}

impl Div for Rad {
    type Output = Rad;
    #[allow(clippy::suspicious_arithmetic_impl)] // division is multiplication by the inverse
    fn div(self, rhs: Rad) -> Rad {
        self * rhs.inv()
    }
}

impl PartialOrd for Rad {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some((self.clone() - other.clone()).sign_exact())
    }
}

impl fmt::Display for Rad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        if !self.rational.is_zero() || self.terms.is_empty() {
            write!(f, "{}", self.rational)?;
            first = false;
        }
        for (&d, c) in &self.terms {
            if first {
                if c.is_negative() {
                    write!(f, "-{}*sqrt({})", -c, d)?;
                } else {
                    write!(f, "{}*sqrt({})", c, d)?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - {}*sqrt({})", -c, d)?;
            } else {
                write!(f, " + {}*sqrt({})", c, d)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Rad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rad({self})")
    }
}
