//! Finite signed measures on a compact interval: weighted atoms plus
//! piecewise-polynomial density segments, their distribution functions,
//! moments and truncated-power kernel transforms.

use crate::numeric::{Polynomial, Scalar, Sign};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum MeasureError {
    InvalidInterval(String),
    AtomOutsideInterval(String),
    SegmentOutsideInterval(String),
    OverlappingSegments(String),
    IntervalMismatch,
}

impl fmt::Display for MeasureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasureError::InvalidInterval(s) => write!(f, "invalid interval: {s}"),
            MeasureError::AtomOutsideInterval(s) => write!(f, "atom outside interval: {s}"),
            MeasureError::SegmentOutsideInterval(s) => write!(f, "segment outside interval: {s}"),
            MeasureError::OverlappingSegments(s) => write!(f, "overlapping segments: {s}"),
            MeasureError::IntervalMismatch => write!(f, "measures live on different intervals"),
        }
    }
}

impl std::error::Error for MeasureError {}

/// Compact interval `[a, b]` with `a < b`.
#[derive(Debug, Clone, PartialEq)]
pub struct Interval<T> {
    a: T,
    b: T,
}

impl<T: Scalar> Interval<T> {
    pub fn new(a: T, b: T) -> Result<Self, MeasureError> {
        if a.cmp_total(&b) != Ordering::Less {
            return Err(MeasureError::InvalidInterval(format!("[{a}, {b}]")));
        }
        Ok(Interval { a, b })
    }

    pub fn unit() -> Self {
        Interval {
            a: T::zero(),
            b: T::one(),
        }
    }

    pub fn symmetric() -> Self {
        Interval {
            a: -T::one(),
            b: T::one(),
        }
    }

    pub fn lo(&self) -> &T {
        &self.a
    }

    pub fn hi(&self) -> &T {
        &self.b
    }

    pub fn length(&self) -> T {
        self.b.clone() - self.a.clone()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.a.cmp_total(x) != Ordering::Greater && x.cmp_total(&self.b) != Ordering::Greater
    }

    /// The unique increasing affine map onto `target`.
    pub fn affine_to(&self, target: &Interval<T>) -> (T, T) {
        // x -> shift + scale * x
        let scale = target.length() / self.length();
        let shift = target.a.clone() - scale.clone() * self.a.clone();
        (shift, scale)
    }
}

/// Density segment `[from, to]` carrying a polynomial density.
#[derive(Debug, Clone, PartialEq)]
pub struct Segment<T: Scalar> {
    pub from: T,
    pub to: T,
    pub density: Polynomial<T>,
}

/// Finite signed measure on `[a, b]`: weighted atoms plus polynomial
/// density segments. Atoms are sorted and distinct; segments are sorted
/// and non-overlapping.
#[derive(Debug, Clone, PartialEq)]
pub struct SignedMeasure<T: Scalar> {
    interval: Interval<T>,
    atoms: Vec<(T, T)>,
    segments: Vec<Segment<T>>,
}

impl<T: Scalar> SignedMeasure<T> {
    pub fn new(
        interval: Interval<T>,
        atoms: Vec<(T, T)>,
        segments: Vec<Segment<T>>,
    ) -> Result<Self, MeasureError> {
        for (loc, _) in &atoms {
            if !interval.contains(loc) {
                return Err(MeasureError::AtomOutsideInterval(format!("{loc}")));
            }
        }
        for seg in &segments {
            if seg.from.cmp_total(&seg.to) != Ordering::Less {
                return Err(MeasureError::SegmentOutsideInterval(format!(
                    "[{}, {}]",
                    seg.from, seg.to
                )));
            }
            if !interval.contains(&seg.from) || !interval.contains(&seg.to) {
                return Err(MeasureError::SegmentOutsideInterval(format!(
                    "[{}, {}]",
                    seg.from, seg.to
                )));
            }
        }
        let mut m = SignedMeasure {
            interval,
            atoms: Vec::new(),
            segments: Vec::new(),
        };
        m.merge_atoms(atoms, &T::zero())?;
        m.merge_segments(segments)?;
        Ok(m)
    }

    pub fn zero(interval: Interval<T>) -> Self {
        SignedMeasure {
            interval,
            atoms: Vec::new(),
            segments: Vec::new(),
        }
    }

    /// Point mass `weight * delta_at`.
    pub fn dirac(interval: Interval<T>, at: T, weight: T) -> Result<Self, MeasureError> {
        SignedMeasure::new(interval, vec![(at, weight)], Vec::new())
    }

    /// Uniform distribution with the given total mass.
    pub fn uniform(interval: Interval<T>, mass: T) -> Self {
        let density = Polynomial::constant(mass / interval.length());
        let seg = Segment {
            from: interval.a.clone(),
            to: interval.b.clone(),
            density,
        };
        SignedMeasure {
            interval,
            atoms: Vec::new(),
            segments: vec![seg],
        }
    }

    fn merge_atoms(&mut self, mut atoms: Vec<(T, T)>, tol: &T) -> Result<(), MeasureError> {
        atoms.sort_by(|x, y| x.0.cmp_total(&y.0));
        for (loc, w) in atoms {
            if w.is_zero() {
                continue;
            }
            let merged = match self.atoms.last_mut() {
                Some(last) => {
                    let close = if T::EXACT {
                        last.0 == loc
                    } else {
                        (loc.clone() - last.0.clone()).abs().cmp_total(tol) != Ordering::Greater
                    };
                    if close {
                        last.1 = last.1.clone() + w.clone();
                        true
                    } else {
                        false
                    }
                }
                None => false,
            };
            if !merged {
                self.atoms.push((loc, w));
            }
        }
        self.atoms.retain(|(_, w)| !w.is_zero());
        Ok(())
    }

    fn merge_segments(&mut self, extra: Vec<Segment<T>>) -> Result<(), MeasureError> {
        let mut all = std::mem::take(&mut self.segments);
        all.extend(extra);
        all.retain(|s| !s.density.is_zero());
        if all.is_empty() {
            return Ok(());
        }
        // split at every segment endpoint and add densities on each piece
        let mut cuts: Vec<T> = Vec::new();
        for s in &all {
            cuts.push(s.from.clone());
            cuts.push(s.to.clone());
        }
        cuts.sort_by(|x, y| x.cmp_total(y));
        cuts.dedup_by(|x, y| x.cmp_total(y) == Ordering::Equal);
        let mut merged = Vec::new();
        for w in cuts.windows(2) {
            let (lo, hi) = (&w[0], &w[1]);
            let mut density = Polynomial::zero();
            for s in &all {
                if s.from.cmp_total(lo) != Ordering::Greater && hi.cmp_total(&s.to) != Ordering::Greater
                {
                    density = density.add(&s.density);
                }
            }
            if !density.is_zero() {
                merged.push(Segment {
                    from: lo.clone(),
                    to: hi.clone(),
                    density,
                });
            }
        }
        // coalesce adjacent pieces that share one polynomial
        let mut out: Vec<Segment<T>> = Vec::new();
        for seg in merged {
            match out.last_mut() {
                Some(last)
                    if last.to.cmp_total(&seg.from) == Ordering::Equal
                        && last.density == seg.density =>
                {
                    last.to = seg.to;
                }
                _ => out.push(seg),
            }
        }
        self.segments = out;
        Ok(())
    }

    pub fn interval(&self) -> &Interval<T> {
        &self.interval
    }

    pub fn atoms(&self) -> &[(T, T)] {
        &self.atoms
    }

    pub fn segments(&self) -> &[Segment<T>] {
        &self.segments
    }

    pub fn is_trivially_zero(&self) -> bool {
        self.atoms.is_empty() && self.segments.is_empty()
    }

    pub fn total_mass(&self) -> T {
        self.moment(0)
    }

    /// `k`-th raw moment, in closed form.
    pub fn moment(&self, k: u32) -> T {
        let mut acc = T::zero();
        for (loc, w) in &self.atoms {
            let mut pw = T::one();
            for _ in 0..k {
                pw = pw * loc.clone();
            }
            acc = acc + w.clone() * pw;
        }
        for seg in &self.segments {
            let integrand = seg.density.mul(&Polynomial::monomial(k as usize));
            acc = acc + integrand.integral(&seg.from, &seg.to);
        }
        acc
    }

    /// Moments `0..=n` packed into a vector; entry 0 is the total mass.
    pub fn moments(&self, n: u32) -> Vec<T> {
        (0..=n).map(|k| self.moment(k)).collect()
    }

    /// All atom locations and segment endpoints, sorted and deduplicated,
    /// including the interval endpoints.
    pub fn event_points(&self) -> Vec<T> {
        let mut pts = vec![self.interval.a.clone(), self.interval.b.clone()];
        for (loc, _) in &self.atoms {
            pts.push(loc.clone());
        }
        for seg in &self.segments {
            pts.push(seg.from.clone());
            pts.push(seg.to.clone());
        }
        pts.sort_by(|x, y| x.cmp_total(y));
        pts.dedup_by(|x, y| x.cmp_total(y) == Ordering::Equal);
        pts
    }

    /// Distribution function `F(x) = mu((-inf, x])`, right-continuous,
    /// with a jump of the atom weight at every atom.
    pub fn cdf(&self) -> PiecewiseFunction<T> {
        let breaks = self.event_points();
        let mut pieces = Vec::with_capacity(breaks.len() - 1);
        let mut values = Vec::with_capacity(breaks.len());
        // F(a) includes an atom exactly at a
        let mut at_a = T::zero();
        for (loc, w) in &self.atoms {
            if loc.cmp_total(&self.interval.a) == Ordering::Equal {
                at_a = at_a + w.clone();
            }
        }
        values.push(at_a.clone());
        let mut acc_left = at_a; // value at the left break (right limit)
        for win in breaks.windows(2) {
            let (lo, hi) = (&win[0], &win[1]);
            // cumulative polynomial on (lo, hi): acc_left + int_lo^x density
            let mut piece = Polynomial::constant(acc_left.clone());
            for seg in &self.segments {
                if seg.from.cmp_total(lo) != Ordering::Greater
                    && hi.cmp_total(&seg.to) != Ordering::Greater
                {
                    let anti = seg.density.antiderivative();
                    let base = anti.eval(lo);
                    piece = piece.add(&anti.add(&Polynomial::constant(-base)));
                }
            }
            let mut value_at_hi = piece.eval(hi);
            for (loc, w) in &self.atoms {
                if loc.cmp_total(hi) == Ordering::Equal {
                    value_at_hi = value_at_hi + w.clone();
                }
            }
            pieces.push(piece);
            values.push(value_at_hi.clone());
            acc_left = value_at_hi;
        }
        PiecewiseFunction {
            interval: self.interval.clone(),
            breaks,
            pieces,
            values,
        }
    }

    /// Kernel transform `x -> int (t - x)_+^n dmu(t)` as a piecewise
    /// polynomial in the shift `x`; continuous (in fact `C^(n-1)`) for
    /// `n >= 1`.
    pub fn kernel_transform(&self, n: u32) -> PiecewiseFunction<T> {
        assert!(n >= 1, "kernel order must be at least 1");
        let breaks = self.event_points();
        let mut pieces = Vec::with_capacity(breaks.len() - 1);
        for win in breaks.windows(2) {
            let (lo, hi) = (&win[0], &win[1]);
            let mut piece = Polynomial::zero();
            // atoms at or right of the piece contribute (loc - x)^n; atoms
            // are breakpoints, so none sits strictly inside (lo, hi)
            for (loc, w) in &self.atoms {
                if loc.cmp_total(hi) != Ordering::Less {
                    let base = Polynomial::linear(loc.clone(), -T::one());
                    let mut pw = Polynomial::constant(w.clone());
                    for _ in 0..n {
                        pw = pw.mul(&base);
                    }
                    piece = piece.add(&pw);
                }
            }
            // segment contributions: int_max(x, from)^to (t - x)^n g(t) dt.
            // Segment endpoints are breakpoints, so each segment either lies
            // left of the piece, covers it, or lies right of it.
            for seg in &self.segments {
                if seg.to.cmp_total(lo) != Ordering::Greater {
                    continue;
                }
                let from_inside = seg.from.cmp_total(lo) != Ordering::Greater;
                piece = piece.add(&kernel_segment_piece(seg, n, from_inside));
            }
            pieces.push(piece);
        }
        let values: Vec<T> = breaks
            .iter()
            .enumerate()
            .map(|(i, x)| {
                if i < pieces.len() {
                    pieces[i].eval(x)
                } else {
                    pieces[i - 1].eval(x)
                }
            })
            .collect();
        PiecewiseFunction {
            interval: self.interval.clone(),
            breaks,
            pieces,
            values,
        }
    }

    /// Push the measure forward along the increasing affine map of its
    /// interval onto `target`. Masses are preserved.
    pub fn pushforward_affine(&self, target: &Interval<T>) -> SignedMeasure<T> {
        let (shift, scale) = self.interval.affine_to(target);
        let atoms = self
            .atoms
            .iter()
            .map(|(loc, w)| (shift.clone() + scale.clone() * loc.clone(), w.clone()))
            .collect();
        // map s = shift + scale t; density transforms as g(t(s)) / scale
        let inv_scale = T::one() / scale.clone();
        let inv_shift = -shift.clone() * inv_scale.clone();
        let segments = self
            .segments
            .iter()
            .map(|seg| Segment {
                from: shift.clone() + scale.clone() * seg.from.clone(),
                to: shift.clone() + scale.clone() * seg.to.clone(),
                density: seg
                    .density
                    .compose_affine(&inv_shift, &inv_scale)
                    .scale(&inv_scale),
            })
            .collect();
        SignedMeasure {
            interval: target.clone(),
            atoms,
            segments,
        }
    }

    pub fn scale(&self, c: &T) -> SignedMeasure<T> {
        SignedMeasure {
            interval: self.interval.clone(),
            atoms: self
                .atoms
                .iter()
                .map(|(l, w)| (l.clone(), w.clone() * c.clone()))
                .filter(|(_, w)| !w.is_zero())
                .collect(),
            segments: if c.is_zero() {
                Vec::new()
            } else {
                self.segments
                    .iter()
                    .map(|s| Segment {
                        from: s.from.clone(),
                        to: s.to.clone(),
                        density: s.density.scale(c),
                    })
                    .collect()
            },
        }
    }

    /// Linear combination `c1 * mu1 + c2 * mu2`; atoms at identical
    /// locations are merged (within the tolerance in float mode).
    pub fn combine(
        c1: &T,
        mu1: &SignedMeasure<T>,
        c2: &T,
        mu2: &SignedMeasure<T>,
        tol: &T,
    ) -> Result<SignedMeasure<T>, MeasureError> {
        if mu1.interval != mu2.interval {
            return Err(MeasureError::IntervalMismatch);
        }
        let s1 = mu1.scale(c1);
        let s2 = mu2.scale(c2);
        let mut out = SignedMeasure::zero(mu1.interval.clone());
        let mut atoms = s1.atoms;
        atoms.extend(s2.atoms);
        out.merge_atoms(atoms, tol)?;
        let mut segs = s1.segments;
        segs.extend(s2.segments);
        out.merge_segments(segs)?;
        Ok(out)
    }

    /// Signed difference `mu2 - mu1` on a common interval.
    pub fn difference(
        mu1: &SignedMeasure<T>,
        mu2: &SignedMeasure<T>,
        tol: &T,
    ) -> Result<SignedMeasure<T>, MeasureError> {
        SignedMeasure::combine(&T::one(), mu2, &(-T::one()), mu1, tol)
    }

    /// True when all atom weights are nonnegative and every density is
    /// nonnegative on its segment; `None` when float mode cannot decide.
    pub fn is_nonnegative(&self, tol: &T) -> Option<bool> {
        for (_, w) in &self.atoms {
            match w.sign(tol) {
                Sign::Negative => return Some(false),
                Sign::Indeterminate => return None,
                _ => {}
            }
        }
        for seg in &self.segments {
            match crate::numeric::roots::nonnegative_on(&seg.density, &seg.from, &seg.to, tol) {
                crate::numeric::NonNegative::Yes => {}
                crate::numeric::NonNegative::No(_) => return Some(false),
                crate::numeric::NonNegative::Indeterminate => return None,
            }
        }
        Some(true)
    }
}

/// Piece of the kernel transform contributed by one density segment for a
/// shift variable `x` ranging over one break window.
///
/// When `from_inside` is true the window lies inside the segment and the
/// lower integration limit is `x` itself; otherwise the whole segment lies
/// to the right and the limit is `seg.from`.
fn kernel_segment_piece<T: Scalar>(seg: &Segment<T>, n: u32, from_inside: bool) -> Polynomial<T> {
    // (t - x)^n = sum_k C(n,k) t^k (-x)^(n-k)
    // contribution = sum_k C(n,k) (-1)^(n-k) x^(n-k) [ G_k(to) - G_k(lower) ]
    // with G_k the antiderivative of t^k g(t)
    let mut acc = Polynomial::zero();
    for k in 0..=n {
        let gk = seg
            .density
            .mul(&Polynomial::monomial(k as usize))
            .antiderivative();
        let upper = gk.eval(&seg.to);
        // G_k(lower) as a polynomial in x
        let lower_poly = if from_inside {
            gk.clone()
        } else {
            Polynomial::constant(gk.eval(&seg.from))
        };
        let diff = Polynomial::constant(upper).sub(&lower_poly);
        let c = T::from_rational(&binomial(n, k)) * sign_pow(n - k);
        let xpow = Polynomial::monomial((n - k) as usize).scale(&c);
        acc = acc.add(&xpow.mul(&diff));
    }
    acc
}

fn binomial(n: u32, k: u32) -> num_rational::BigRational {
    let mut num = num_bigint::BigInt::from(1);
    let mut den = num_bigint::BigInt::from(1);
    for i in 0..k {
        num *= num_bigint::BigInt::from(n - i);
        den *= num_bigint::BigInt::from(i + 1);
    }
    num_rational::BigRational::new(num, den)
}

fn sign_pow<T: Scalar>(e: u32) -> T {
    if e.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}

/// Piecewise polynomial with jump discontinuities, right-continuous at
/// every breakpoint; the stored value at the last break is the function
/// value at `b` itself (which may differ from the left limit when the
/// underlying measure has an atom at `b`).
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseFunction<T: Scalar> {
    interval: Interval<T>,
    breaks: Vec<T>,
    pieces: Vec<Polynomial<T>>,
    values: Vec<T>,
}

impl<T: Scalar> PiecewiseFunction<T> {
    pub fn from_parts(
        interval: Interval<T>,
        breaks: Vec<T>,
        pieces: Vec<Polynomial<T>>,
        values: Vec<T>,
    ) -> Self {
        assert_eq!(breaks.len(), pieces.len() + 1);
        assert_eq!(values.len(), breaks.len());
        PiecewiseFunction {
            interval,
            breaks,
            pieces,
            values,
        }
    }

    pub fn zero(interval: Interval<T>) -> Self {
        let breaks = vec![interval.a.clone(), interval.b.clone()];
        PiecewiseFunction {
            interval,
            breaks,
            pieces: vec![Polynomial::zero()],
            values: vec![T::zero(), T::zero()],
        }
    }

    pub fn interval(&self) -> &Interval<T> {
        &self.interval
    }

    pub fn breaks(&self) -> &[T] {
        &self.breaks
    }

    pub fn pieces(&self) -> &[Polynomial<T>] {
        &self.pieces
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn eval(&self, x: &T) -> T {
        for (i, b) in self.breaks.iter().enumerate() {
            match x.cmp_total(b) {
                Ordering::Equal => return self.values[i].clone(),
                Ordering::Less => {
                    if i == 0 {
                        return T::zero(); // left of the domain
                    }
                    return self.pieces[i - 1].eval(x);
                }
                Ordering::Greater => {}
            }
        }
        self.values.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn left_limit(&self, i: usize) -> T {
        if i == 0 {
            T::zero()
        } else {
            self.pieces[i - 1].eval(&self.breaks[i])
        }
    }

    pub fn value_at_break(&self, i: usize) -> T {
        self.values[i].clone()
    }

    /// Merge breakpoint grids and combine piecewise: `self*c1 + other*c2`.
    pub fn linear_combination(&self, c1: &T, other: &Self, c2: &T) -> Self {
        assert_eq!(self.interval, other.interval, "interval mismatch");
        let mut breaks: Vec<T> = self
            .breaks
            .iter()
            .chain(other.breaks.iter())
            .cloned()
            .collect();
        breaks.sort_by(|x, y| x.cmp_total(y));
        breaks.dedup_by(|x, y| x.cmp_total(y) == Ordering::Equal);
        let mut pieces = Vec::with_capacity(breaks.len() - 1);
        let mut values = Vec::with_capacity(breaks.len());
        for (i, b) in breaks.iter().enumerate() {
            values.push(self.eval(b).clone() * c1.clone() + other.eval(b).clone() * c2.clone());
            if i + 1 < breaks.len() {
                let p1 = self.piece_covering(b);
                let p2 = other.piece_covering(b);
                pieces.push(p1.scale(c1).add(&p2.scale(c2)));
            }
        }
        PiecewiseFunction {
            interval: self.interval.clone(),
            breaks,
            pieces,
            values,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.linear_combination(&T::one(), other, &(-T::one()))
    }

    pub fn scale(&self, c: &T) -> Self {
        PiecewiseFunction {
            interval: self.interval.clone(),
            breaks: self.breaks.clone(),
            pieces: self.pieces.iter().map(|p| p.scale(c)).collect(),
            values: self.values.iter().map(|v| v.clone() * c.clone()).collect(),
        }
    }

    /// The polynomial piece valid on the open interval starting at `x`
    /// (`x` must be a breakpoint or interior point; for the last break the
    /// final piece is returned).
    fn piece_covering(&self, x: &T) -> Polynomial<T> {
        for i in 0..self.pieces.len() {
            if x.cmp_total(&self.breaks[i + 1]) == Ordering::Less {
                return self.pieces[i].clone();
            }
        }
        self.pieces.last().cloned().unwrap_or_else(Polynomial::zero)
    }

    /// Prefix integral `x -> int_a^x f`; continuous, jumps do not matter.
    pub fn prefix_integral(&self) -> PiecewiseFunction<T> {
        let mut pieces = Vec::with_capacity(self.pieces.len());
        let mut values = Vec::with_capacity(self.values.len());
        let mut acc = T::zero();
        values.push(T::zero());
        for (i, p) in self.pieces.iter().enumerate() {
            let lo = &self.breaks[i];
            let hi = &self.breaks[i + 1];
            let anti = p.antiderivative();
            let base = anti.eval(lo);
            // piece: acc + int_lo^x p
            let piece = anti.add(&Polynomial::constant(acc.clone() - base.clone()));
            acc = acc.clone() + anti.eval(hi) - base;
            pieces.push(piece);
            values.push(acc.clone());
        }
        PiecewiseFunction {
            interval: self.interval.clone(),
            breaks: self.breaks.clone(),
            pieces,
            values,
        }
    }

    /// Piecewise derivative; values take the right-limit convention.
    pub fn derivative(&self) -> PiecewiseFunction<T> {
        let pieces: Vec<Polynomial<T>> = self.pieces.iter().map(|p| p.derivative()).collect();
        let mut values = Vec::with_capacity(self.values.len());
        for i in 0..self.breaks.len() {
            let j = if i < pieces.len() { i } else { i - 1 };
            values.push(pieces[j].eval(&self.breaks[i]));
        }
        PiecewiseFunction {
            interval: self.interval.clone(),
            breaks: self.breaks.clone(),
            pieces,
            values,
        }
    }

    pub fn integral(&self) -> T {
        let mut acc = T::zero();
        for (i, p) in self.pieces.iter().enumerate() {
            acc = acc + p.integral(&self.breaks[i], &self.breaks[i + 1]);
        }
        acc
    }

    /// Uniform grid refined with every breakpoint, deduplicated, sorted.
    pub fn grid(&self, points: usize) -> Vec<T> {
        let mut out = Vec::with_capacity(points + self.breaks.len());
        let len = self.interval.length();
        for k in 0..=points {
            out.push(
                self.interval.a.clone()
                    + len.clone() * T::from_ratio(k as i64, points as i64),
            );
        }
        out.extend(self.breaks.iter().cloned());
        out.sort_by(|x, y| x.cmp_total(y));
        out.dedup_by(|x, y| x.cmp_total(y) == Ordering::Equal);
        out
    }
}
