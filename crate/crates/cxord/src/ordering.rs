//! Decision procedures for convex and higher-order convex stochastic
//! ordering between finite signed measures, with certificates and
//! incomparability witnesses.
//!
//! Conventions. `decide_order(mu1, mu2, n)` asks whether
//! `int f dmu1 <= int f dmu2` for every continuous n-convex test function
//! `f` (n = 1 is ordinary convexity). Writing `F1`, `F2` for the
//! distribution functions, the ladder
//!
//! ```text
//! H_0 = F2 - F1,     H_k(x) = int_a^x H_(k-1)(t) dt
//! ```
//!
//! decides the question exactly: the ordering holds iff the moments
//! `0..=n` agree and `(-1)^(n+1) H_n >= 0` on `(a, b)`. Cheaper sufficient
//! screens (single crossing, n crossings with matching last sign, crossing
//! areas) run first and name the certificate when they fire.

use crate::measure::{PiecewiseFunction, SignedMeasure};
use crate::numeric::roots::{sign_at_root, sign_partition, NonNegative};
use crate::numeric::{IsolatedRoot, RootError, Scalar, Sign};
use std::fmt;

/// Degree of the test-function class: `n`-convex functions (n >= 1);
/// n = 1 is ordinary convexity. In the terminology that indexes the order
/// itself this is the (n+1)-convex order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConvexityDegree(u32);

impl ConvexityDegree {
    pub fn new(n: u32) -> Option<Self> {
        if n >= 1 {
            Some(ConvexityDegree(n))
        } else {
            None
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictStatus {
    Holds,
    HoldsReversed,
    Incomparable,
    Indeterminate,
    Inapplicable,
}

impl VerdictStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictStatus::Holds => "holds",
            VerdictStatus::HoldsReversed => "holds-reversed",
            VerdictStatus::Incomparable => "incomparable",
            VerdictStatus::Indeterminate => "indeterminate",
            VerdictStatus::Inapplicable => "inapplicable",
        }
    }
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Criterion {
    Ohlin,
    AreaCriterion,
    LevinSteckin,
    Dls,
    HLadderSignPoints,
    HLadder,
    ZeroDifference,
}

impl Criterion {
    pub fn as_str(self) -> &'static str {
        match self {
            Criterion::Ohlin => "ohlin",
            Criterion::AreaCriterion => "area-criterion",
            Criterion::LevinSteckin => "levin-steckin",
            Criterion::Dls => "dls",
            Criterion::HLadderSignPoints => "h-ladder-sign-points",
            Criterion::HLadder => "h-ladder",
            Criterion::ZeroDifference => "zero-difference",
        }
    }
}

/// Which criterion fired plus the numbers it checked.
#[derive(Debug, Clone)]
pub struct Certificate<T: Scalar> {
    pub criterion: Criterion,
    pub degree: u32,
    /// Moments `0..=moments_checked` were verified equal.
    pub moments_checked: u32,
    /// Crossing points the criterion inspected (of `F2 - F1` for degree-1
    /// criteria, of `H_(n-1)` for the sign-point criterion).
    pub crossings: Vec<T>,
    /// `(point, H_n(point))` values certified nonnegative.
    pub h_checked: Vec<(T, T)>,
    /// The difference vanishes identically: the ordering holds both ways.
    pub both_directions: bool,
}

impl<T: Scalar> Certificate<T> {
    fn new(criterion: Criterion, degree: u32) -> Self {
        Certificate {
            criterion,
            degree,
            moments_checked: degree,
            crossings: Vec::new(),
            h_checked: Vec::new(),
            both_directions: false,
        }
    }
}

/// A violating test function `f(x) = (x - shift)_+^n` together with the
/// signed gap `int f dmu2 - int f dmu1`.
#[derive(Debug, Clone)]
pub struct KernelWitness<T> {
    pub shift: T,
    pub gap: T,
}

/// Outcome of an ordering query.
#[derive(Debug, Clone)]
pub struct OrderVerdict<T: Scalar> {
    pub status: VerdictStatus,
    pub certificate: Option<Certificate<T>>,
    /// Shift with a strictly negative gap (violates `mu1 <= mu2`).
    pub witness_low: Option<KernelWitness<T>>,
    /// Shift with a strictly positive gap (violates `mu2 <= mu1`).
    pub witness_high: Option<KernelWitness<T>>,
    /// First moment index `k` with `moment_k(mu1) != moment_k(mu2)`.
    pub failed_moment: Option<u32>,
}

impl<T: Scalar> OrderVerdict<T> {
    fn with_status(status: VerdictStatus) -> Self {
        OrderVerdict {
            status,
            certificate: None,
            witness_low: None,
            witness_high: None,
            failed_moment: None,
        }
    }

    fn holds(cert: Certificate<T>) -> Self {
        OrderVerdict {
            status: VerdictStatus::Holds,
            certificate: Some(cert),
            witness_low: None,
            witness_high: None,
            failed_moment: None,
        }
    }

    fn inapplicable(k: u32) -> Self {
        OrderVerdict {
            status: VerdictStatus::Inapplicable,
            certificate: None,
            witness_low: None,
            witness_high: None,
            failed_moment: Some(k),
        }
    }

    fn indeterminate() -> Self {
        OrderVerdict::with_status(VerdictStatus::Indeterminate)
    }

    /// The same verdict as seen from the swapped argument order.
    pub fn swap(mut self) -> Self {
        self.status = match self.status {
            VerdictStatus::Holds => VerdictStatus::HoldsReversed,
            VerdictStatus::HoldsReversed => VerdictStatus::Holds,
            other => other,
        };
        std::mem::swap(&mut self.witness_low, &mut self.witness_high);
        if let (Some(lo), Some(hi)) = (&mut self.witness_low, &mut self.witness_high) {
            lo.gap = -lo.gap.clone();
            hi.gap = -hi.gap.clone();
        } else if let Some(w) = &mut self.witness_low {
            w.gap = -w.gap.clone();
        } else if let Some(w) = &mut self.witness_high {
            w.gap = -w.gap.clone();
        }
        self
    }
}

/// Outcome of a sufficient screen: either a full verdict or a fall-through.
#[derive(Debug, Clone)]
pub enum Screen<T: Scalar> {
    Decided(OrderVerdict<T>),
    Undecided,
}

/// Location of one sign change.
#[derive(Debug, Clone)]
pub enum CrossPoint<T: Scalar> {
    /// At a breakpoint of the function (jump or exact polynomial root).
    At(T),
    /// An isolated algebraic root inside piece `piece` of the function.
    Algebraic { piece: usize, root: IsolatedRoot<T> },
}

impl<T: Scalar> CrossPoint<T> {
    pub fn approx(&self) -> T {
        match self {
            CrossPoint::At(t) => t.clone(),
            CrossPoint::Algebraic { root, .. } => root.approx(),
        }
    }

    pub fn refine(&mut self, target: &T) {
        if let CrossPoint::Algebraic { root, .. } = self {
            root.refine(target);
        }
    }
}

/// Count and locations of the sign changes of a piecewise function, in the
/// sense that discards zero values (and zero stretches).
#[derive(Debug, Clone)]
pub struct CrossingReport<T: Scalar> {
    pub count: usize,
    pub points: Vec<CrossPoint<T>>,
    pub first_sign: Sign,
    pub last_sign: Sign,
    /// Float mode could not resolve at least one discarded sign.
    pub uncertain: bool,
}

impl<T: Scalar> CrossingReport<T> {
    pub fn point_values(&self) -> Vec<T> {
        self.points.iter().map(|p| p.approx()).collect()
    }

    /// Point values with algebraic locations refined to width `2^-48`.
    pub fn refined_point_values(&mut self) -> Vec<T> {
        let width = T::from_ratio(1, 1 << 48);
        self.points
            .iter_mut()
            .map(|p| {
                p.refine(&width);
                p.approx()
            })
            .collect()
    }
}

/// Sign changes of `f` over its interval, combining polynomial roots with
/// jump-induced flips; identically-zero stretches are discarded. A jump
/// straddling zero counts as one sign change at the jump point.
pub fn sign_changes<T: Scalar>(f: &PiecewiseFunction<T>, tol: &T) -> CrossingReport<T> {
    // ordered sequence of (sign, location of the entry)
    let mut entries: Vec<(Sign, CrossPoint<T>)> = Vec::new();
    let mut uncertain = false;
    let breaks = f.breaks();
    entries.push((
        f.value_at_break(0).sign(tol),
        CrossPoint::At(breaks[0].clone()),
    ));
    for (i, piece) in f.pieces().iter().enumerate() {
        let lo = &breaks[i];
        let hi = &breaks[i + 1];
        if !piece.is_zero() {
            match sign_partition(piece, lo, hi, tol) {
                Ok(part) => {
                    // interior gap signs; the k-th gap begins at root k-1
                    for (k, s) in part.gap_signs.iter().enumerate() {
                        let loc = if k == 0 {
                            CrossPoint::At(lo.clone())
                        } else {
                            let root = part.roots[k - 1].clone();
                            match &root.exact {
                                Some(v) => CrossPoint::At(v.clone()),
                                None => CrossPoint::Algebraic { piece: i, root },
                            }
                        };
                        if matches!(s, Sign::Indeterminate) {
                            uncertain = true;
                        }
                        entries.push((*s, loc));
                    }
                }
                Err(RootError::IdenticallyZero) => {}
                Err(RootError::Indeterminate) => uncertain = true,
            }
        }
        entries.push((
            f.value_at_break(i + 1).sign(tol),
            CrossPoint::At(hi.clone()),
        ));
    }
    // S^- walk: discard zeros, count alternations
    let mut count = 0;
    let mut points = Vec::new();
    let mut first_sign = Sign::Zero;
    let mut last_sign = Sign::Zero;
    for (s, loc) in entries {
        match s {
            Sign::Zero => {}
            Sign::Indeterminate => uncertain = true,
            s => {
                if first_sign == Sign::Zero {
                    first_sign = s;
                }
                if last_sign.is_known_nonzero() && last_sign != s {
                    count += 1;
                    points.push(loc);
                }
                last_sign = s;
            }
        }
    }
    CrossingReport {
        count,
        points,
        first_sign,
        last_sign,
        uncertain,
    }
}

/// The exact-criterion ladder for a measure pair: `H_0 = F2 - F1` and
/// `H_k` its iterated prefix integrals, `H_(k-1) = H_k'` for `k >= 2`.
#[derive(Debug, Clone)]
pub struct HLadder<T: Scalar> {
    /// `levels[k]` is `H_k`, `k = 0..=n`.
    pub levels: Vec<PiecewiseFunction<T>>,
}

impl<T: Scalar> HLadder<T> {
    pub fn degree(&self) -> u32 {
        (self.levels.len() - 1) as u32
    }

    pub fn h(&self, k: u32) -> &PiecewiseFunction<T> {
        &self.levels[k as usize]
    }

    pub fn top(&self) -> &PiecewiseFunction<T> {
        self.levels.last().unwrap()
    }
}

/// Build the ladder from the truncated-power kernel transform:
/// `H_n(x) = (-1)^(n+1)/n! * int (t-x)_+^n d(F2 - F1)(t)`, lower levels by
/// differentiation, `H_0 = F2 - F1` directly from the distribution
/// functions.
pub fn build_h_ladder<T: Scalar>(
    mu1: &SignedMeasure<T>,
    mu2: &SignedMeasure<T>,
    n: ConvexityDegree,
) -> HLadder<T> {
    let n = n.get();
    let h0 = mu2.cdf().sub(&mu1.cdf());
    let mut levels = vec![h0];
    if n >= 1 {
        let k2 = mu2.kernel_transform(n);
        let k1 = mu1.kernel_transform(n);
        let mut factorial = T::one();
        for k in 2..=n {
            factorial = factorial * T::from_int(k as i64);
        }
        let scale = sign_pow::<T>(n + 1) / factorial;
        let hn = k2.sub(&k1).scale(&scale);
        let mut tops = vec![hn];
        for _ in 1..n {
            let next = tops.last().unwrap().derivative();
            tops.push(next);
        }
        tops.reverse(); // now H_1 .. H_n
        levels.extend(tops);
    }
    HLadder { levels }
}

fn sign_pow<T: Scalar>(e: u32) -> T {
    if e.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}

/// First index `k <= n` where the moments differ, or `None` when the
/// moments `0..=n` all agree. `Err(())` when float mode cannot tell.
fn first_moment_mismatch<T: Scalar>(
    mu1: &SignedMeasure<T>,
    mu2: &SignedMeasure<T>,
    n: u32,
    tol: &T,
) -> Result<Option<u32>, ()> {
    for k in 0..=n {
        let m1 = mu1.moment(k);
        let m2 = mu2.moment(k);
        let d = m2.clone() - m1.clone();
        if d.is_zero() {
            continue;
        }
        // attribute rounding dust to an exact zero before consulting the
        // user tolerance
        let scale = T::one() + m1.abs() + m2.abs();
        let dust = T::equality_dust(&scale);
        if d.abs().cmp_total(&dust) != std::cmp::Ordering::Greater {
            continue;
        }
        match d.sign(tol) {
            Sign::Zero => {}
            Sign::Indeterminate => return Err(()),
            _ => return Ok(Some(k)),
        }
    }
    Ok(None)
}

/// Sign summary of a continuous piecewise function on its interval.
enum PieceSigns<T: Scalar> {
    AllZero,
    NonNegative,
    NonPositive,
    Mixed { neg_at: T, pos_at: T },
    Indeterminate,
}

fn piecewise_signs<T: Scalar>(g: &PiecewiseFunction<T>, tol: &T) -> PieceSigns<T> {
    let mut neg_at: Option<T> = None;
    let mut pos_at: Option<T> = None;
    let mut uncertain = false;
    let breaks = g.breaks();
    for (i, piece) in g.pieces().iter().enumerate() {
        if piece.is_zero() {
            continue;
        }
        match crate::numeric::roots::nonnegative_on(piece, &breaks[i], &breaks[i + 1], tol) {
            NonNegative::Yes => {}
            NonNegative::No(w) => neg_at = Some(neg_at.unwrap_or(w)),
            NonNegative::Indeterminate => uncertain = true,
        }
        if pos_at.is_none() {
            match crate::numeric::roots::nonnegative_on(
                &piece.neg(),
                &breaks[i],
                &breaks[i + 1],
                tol,
            ) {
                NonNegative::Yes => {}
                NonNegative::No(w) => pos_at = Some(w),
                NonNegative::Indeterminate => uncertain = true,
            }
        }
        if neg_at.is_some() && pos_at.is_some() {
            break;
        }
    }
    match (neg_at, pos_at) {
        (Some(n), Some(p)) => PieceSigns::Mixed { neg_at: n, pos_at: p },
        _ if uncertain => PieceSigns::Indeterminate,
        (Some(_), None) => PieceSigns::NonPositive,
        (None, Some(_)) => PieceSigns::NonNegative,
        (None, None) => PieceSigns::AllZero,
    }
}

/// Ohlin screen: nonnegative measures with equal mass and mean whose
/// distribution functions cross exactly once are convex-ordered. Sufficient
/// only; anything else falls through.
pub fn check_ohlin<T: Scalar>(
    mu1: &SignedMeasure<T>,
    mu2: &SignedMeasure<T>,
    tol: &T,
) -> Result<Screen<T>, OrderVerdict<T>> {
    match first_moment_mismatch(mu1, mu2, 1, tol) {
        Ok(None) => {}
        Ok(Some(k)) => return Err(OrderVerdict::inapplicable(k)),
        Err(()) => return Err(OrderVerdict::indeterminate()),
    }
    let nonneg = match (mu1.is_nonnegative(tol), mu2.is_nonnegative(tol)) {
        (Some(a), Some(b)) => a && b,
        _ => return Ok(Screen::Undecided),
    };
    if !nonneg {
        return Ok(Screen::Undecided);
    }
    let f = mu2.cdf().sub(&mu1.cdf());
    let report = sign_changes(&f, tol);
    if report.uncertain {
        return Ok(Screen::Undecided);
    }
    if report.count == 1 {
        let mut cert = Certificate::new(Criterion::Ohlin, 1);
        let mut report = report;
        cert.moments_checked = 1;
        cert.crossings = report.refined_point_values();
        // F2 - F1 >= 0 before the crossing means mu1 <= mu2
        let verdict = if report.first_sign == Sign::Positive {
            OrderVerdict::holds(cert)
        } else {
            let mut v = OrderVerdict::holds(cert);
            v = v.swap();
            v
        };
        return Ok(Screen::Decided(verdict));
    }
    Ok(Screen::Undecided)
}

/// Evaluate `h` at a crossing point, exactly where possible.
fn h_sign_at<T: Scalar>(
    h: &PiecewiseFunction<T>,
    point: &mut CrossPoint<T>,
    tol: &T,
) -> (Sign, T) {
    match point {
        CrossPoint::At(t) => {
            let v = h.eval(t);
            (v.sign(tol), v)
        }
        CrossPoint::Algebraic { piece, root } => {
            let poly = &h.pieces()[*piece];
            let s = sign_at_root(poly, root, tol);
            (s, poly.eval(&root.approx()))
        }
    }
}

/// Crossing-area criterion for ordinary convex order. Preconditions:
/// `F(a) = F(b) = 0` and `int F = 0` for `F = F2 - F1`. With sign changes
/// `x_1 < ... < x_m` and `F >= 0` initially: even `m` refutes the
/// ordering; odd `m` reduces it to `H(x_2), H(x_4), ... >= 0` where
/// `H(x) = int_a^x F`.
pub fn check_area_criterion<T: Scalar>(
    mu1: &SignedMeasure<T>,
    mu2: &SignedMeasure<T>,
    tol: &T,
) -> OrderVerdict<T> {
    let f = mu2.cdf().sub(&mu1.cdf());
    // three preconditions: F(a) = 0, F(b) = 0, int F = 0
    if f.value_at_break(0).sign(tol).is_known_nonzero() {
        return OrderVerdict::inapplicable(0);
    }
    let mass = f.values().last().unwrap().clone();
    if mass.sign(tol).is_known_nonzero() {
        return OrderVerdict::inapplicable(0);
    }
    if f.integral().sign(tol).is_known_nonzero() {
        return OrderVerdict::inapplicable(1);
    }
    let report = sign_changes(&f, tol);
    if report.uncertain {
        return OrderVerdict::indeterminate();
    }
    if report.count == 0 {
        // F single-signed with zero integral: only the zero function
        let mut cert = Certificate::new(Criterion::AreaCriterion, 1);
        cert.both_directions = report.first_sign == Sign::Zero;
        return OrderVerdict::holds(cert);
    }
    let reversed = report.first_sign == Sign::Negative;
    let h = f.prefix_integral();
    let mut points = report.points.clone();
    if report.count.is_multiple_of(2) {
        // even number of crossings: neither direction can hold
        let (neg, pos) = incomparability_witnesses_from(&h, tol);
        let mut v = OrderVerdict::with_status(VerdictStatus::Incomparable);
        v.witness_low = neg;
        v.witness_high = pos;
        return v;
    }
    let mut report = report;
    let mut cert = Certificate::new(Criterion::AreaCriterion, 1);
    cert.crossings = report.refined_point_values();
    for i in (1..report.count).step_by(2) {
        let (s, value) = h_sign_at(&h, &mut points[i], tol);
        let effective = if reversed { s.flip() } else { s };
        cert.h_checked.push((points[i].approx(), value));
        match effective {
            Sign::Negative => {
                let (neg, pos) = incomparability_witnesses_from(&h, tol);
                let mut v = OrderVerdict::with_status(VerdictStatus::Incomparable);
                v.witness_low = neg;
                v.witness_high = pos;
                return v;
            }
            Sign::Indeterminate => return OrderVerdict::indeterminate(),
            _ => {}
        }
    }
    let verdict = OrderVerdict::holds(cert);
    if reversed {
        verdict.swap()
    } else {
        verdict
    }
}

/// Kernel witnesses out of a mixed-sign `H_n`-type function: shifts where
/// the function is strictly negative / strictly positive. The gap of the
/// test function `(x - t)_+^n` is `n! * value`.
fn incomparability_witnesses_from<T: Scalar>(
    k: &PiecewiseFunction<T>,
    tol: &T,
) -> (Option<KernelWitness<T>>, Option<KernelWitness<T>>) {
    match piecewise_signs(k, tol) {
        PieceSigns::Mixed { neg_at, pos_at } => {
            let gap_neg = k.eval(&neg_at);
            let gap_pos = k.eval(&pos_at);
            (
                Some(KernelWitness {
                    shift: neg_at,
                    gap: gap_neg,
                }),
                Some(KernelWitness {
                    shift: pos_at,
                    gap: gap_pos,
                }),
            )
        }
        _ => (None, None),
    }
}

/// Levin-Steckin criterion: necessary and sufficient at degree 1.
/// Verifies `F1(b) = F2(b)`, `int F1 = int F2` and the pointwise ordering
/// of the prefix integrals.
///
/// Deliberately computed through the distribution functions (prefix
/// integral of `F2 - F1`), not through the kernel transform, so it stays
/// an independent route from the degree-1 ladder criterion.
pub fn check_levin_steckin<T: Scalar>(
    mu1: &SignedMeasure<T>,
    mu2: &SignedMeasure<T>,
    tol: &T,
) -> OrderVerdict<T> {
    match first_moment_mismatch(mu1, mu2, 1, tol) {
        Ok(None) => {}
        Ok(Some(k)) => return OrderVerdict::inapplicable(k),
        Err(()) => return OrderVerdict::indeterminate(),
    }
    let h1 = mu2.cdf().sub(&mu1.cdf()).prefix_integral();
    match piecewise_signs(&h1, tol) {
        PieceSigns::AllZero => {
            let mut cert = Certificate::new(Criterion::ZeroDifference, 1);
            cert.both_directions = true;
            OrderVerdict::holds(cert)
        }
        PieceSigns::NonNegative => {
            OrderVerdict::holds(Certificate::new(Criterion::LevinSteckin, 1))
        }
        PieceSigns::NonPositive => {
            OrderVerdict::holds(Certificate::new(Criterion::LevinSteckin, 1)).swap()
        }
        PieceSigns::Mixed { neg_at, pos_at } => {
            let gap_neg = h1.eval(&neg_at);
            let gap_pos = h1.eval(&pos_at);
            let mut v = OrderVerdict::with_status(VerdictStatus::Incomparable);
            v.witness_low = Some(KernelWitness {
                shift: neg_at,
                gap: gap_neg,
            });
            v.witness_high = Some(KernelWitness {
                shift: pos_at,
                gap: gap_pos,
            });
            v
        }
        PieceSigns::Indeterminate => OrderVerdict::indeterminate(),
    }
}

/// Denuit-Lefevre-Shaked screen for the degree-n order: probability
/// measures with equal moments `1..=n` whose distribution functions cross
/// exactly `n` times, with the last sign of `F1 - F2` positive.
pub fn check_dls<T: Scalar>(
    mu1: &SignedMeasure<T>,
    mu2: &SignedMeasure<T>,
    n: ConvexityDegree,
    tol: &T,
) -> Result<Screen<T>, OrderVerdict<T>> {
    match first_moment_mismatch(mu1, mu2, n.get(), tol) {
        Ok(None) => {}
        Ok(Some(k)) => return Err(OrderVerdict::inapplicable(k)),
        Err(()) => return Err(OrderVerdict::indeterminate()),
    }
    let nonneg = match (mu1.is_nonnegative(tol), mu2.is_nonnegative(tol)) {
        (Some(a), Some(b)) => a && b,
        _ => return Ok(Screen::Undecided),
    };
    if !nonneg {
        return Ok(Screen::Undecided);
    }
    let f = mu2.cdf().sub(&mu1.cdf());
    let report = sign_changes(&f, tol);
    if report.uncertain {
        return Ok(Screen::Undecided);
    }
    if report.count == n.get() as usize {
        // last sign of F1 - F2 positive <=> last sign of F2 - F1 negative
        let mut report = report;
        let mut cert = Certificate::new(Criterion::Dls, n.get());
        cert.crossings = report.refined_point_values();
        if report.last_sign == Sign::Negative {
            return Ok(Screen::Decided(OrderVerdict::holds(cert)));
        }
        if report.last_sign == Sign::Positive {
            return Ok(Screen::Decided(OrderVerdict::holds(cert).swap()));
        }
    }
    Ok(Screen::Undecided)
}

/// Exact degree-n criterion: moments `0..=n` equal and
/// `(-1)^(n+1) H_n >= 0` on `(a, b)`.
pub fn check_higher_order<T: Scalar>(
    mu1: &SignedMeasure<T>,
    mu2: &SignedMeasure<T>,
    n: ConvexityDegree,
    tol: &T,
) -> OrderVerdict<T> {
    exact_criterion(mu1, mu2, n, Criterion::HLadder, tol)
}

fn exact_criterion<T: Scalar>(
    mu1: &SignedMeasure<T>,
    mu2: &SignedMeasure<T>,
    n: ConvexityDegree,
    criterion: Criterion,
    tol: &T,
) -> OrderVerdict<T> {
    match first_moment_mismatch(mu1, mu2, n.get(), tol) {
        Ok(None) => {}
        Ok(Some(k)) => return OrderVerdict::inapplicable(k),
        Err(()) => return OrderVerdict::indeterminate(),
    }
    let ladder = build_h_ladder(mu1, mu2, n);
    verdict_from_ladder(&ladder, n, criterion, tol)
}

/// Decide from the signed top of a ladder whose moment gate has passed.
fn verdict_from_ladder<T: Scalar>(
    ladder: &HLadder<T>,
    n: ConvexityDegree,
    criterion: Criterion,
    tol: &T,
) -> OrderVerdict<T> {
    let k = ladder.top().scale(&sign_pow::<T>(n.get() + 1));
    match piecewise_signs(&k, tol) {
        PieceSigns::AllZero => {
            let mut cert = Certificate::new(Criterion::ZeroDifference, n.get());
            cert.both_directions = true;
            OrderVerdict::holds(cert)
        }
        PieceSigns::NonNegative => OrderVerdict::holds(Certificate::new(criterion, n.get())),
        PieceSigns::NonPositive => {
            OrderVerdict::holds(Certificate::new(criterion, n.get())).swap()
        }
        PieceSigns::Mixed { neg_at, pos_at } => {
            let factorial = factorial::<T>(n.get());
            let gap_neg = k.eval(&neg_at) * factorial.clone();
            let gap_pos = k.eval(&pos_at) * factorial;
            let mut v = OrderVerdict::with_status(VerdictStatus::Incomparable);
            v.witness_low = Some(KernelWitness {
                shift: neg_at,
                gap: gap_neg,
            });
            v.witness_high = Some(KernelWitness {
                shift: pos_at,
                gap: gap_pos,
            });
            v
        }
        PieceSigns::Indeterminate => OrderVerdict::indeterminate(),
    }
}

fn factorial<T: Scalar>(n: u32) -> T {
    let mut acc = T::one();
    for k in 2..=n {
        acc = acc * T::from_int(k as i64);
    }
    acc
}

/// Sign-point criterion: locates the sign changes `x_1 < ... < x_m` of
/// `H_(n-1)` and, when `m` is odd and `(-1)^(n+1) H_(n-1) >= 0` initially,
/// reduces the degree-n ordering to the checks
/// `(-1)^(n+1) H_n(x_2i) >= 0`. Even `m` refutes both directions.
pub fn check_higher_order_signpoints<T: Scalar>(
    mu1: &SignedMeasure<T>,
    mu2: &SignedMeasure<T>,
    n: ConvexityDegree,
    tol: &T,
) -> OrderVerdict<T> {
    match first_moment_mismatch(mu1, mu2, n.get(), tol) {
        Ok(None) => {}
        Ok(Some(k)) => return OrderVerdict::inapplicable(k),
        Err(()) => return OrderVerdict::indeterminate(),
    }
    let ladder = build_h_ladder(mu1, mu2, n);
    signpoints_from_ladder(&ladder, n, tol)
        .unwrap_or_else(|| verdict_from_ladder(&ladder, n, Criterion::HLadder, tol))
}

/// The sign-point reduction; `None` when its preconditions do not pin the
/// answer down (e.g. `H_(n-1)` starts with an indeterminate stretch).
fn signpoints_from_ladder<T: Scalar>(
    ladder: &HLadder<T>,
    n: ConvexityDegree,
    tol: &T,
) -> Option<OrderVerdict<T>> {
    let n_u = n.get();
    if n_u < 2 {
        return None;
    }
    let sgn = sign_pow::<T>(n_u + 1);
    let g = ladder.h(n_u - 1).scale(&sgn.clone());
    let report = sign_changes(&g, tol);
    if report.uncertain {
        return None;
    }
    // reversed pair when (-1)^(n+1) H_(n-1) starts negative
    let reversed = match report.first_sign {
        Sign::Positive => false,
        Sign::Negative => true,
        _ => {
            // no sign information at all: H_(n-1) vanishes identically
            let mut cert = Certificate::new(Criterion::ZeroDifference, n_u);
            cert.both_directions = true;
            return Some(OrderVerdict::holds(cert));
        }
    };
    let hn_sign = if reversed { -sgn.clone() } else { sgn.clone() };
    let hn = ladder.top().scale(&hn_sign);
    if report.count.is_multiple_of(2) && report.count > 0 {
        let (neg, pos) = incomparability_witnesses_from(&ladder.top().scale(&sgn), tol);
        if neg.is_none() || pos.is_none() {
            return None;
        }
        let mut v = OrderVerdict::with_status(VerdictStatus::Incomparable);
        let factorial = factorial::<T>(n_u);
        v.witness_low = neg.map(|w| KernelWitness {
            shift: w.shift,
            gap: w.gap * factorial.clone(),
        });
        v.witness_high = pos.map(|w| KernelWitness {
            shift: w.shift,
            gap: w.gap * factorial.clone(),
        });
        return Some(v);
    }
    let mut report = report;
    let mut cert = Certificate::new(Criterion::HLadderSignPoints, n_u);
    cert.crossings = report.refined_point_values();
    let mut points = report.points;
    for i in (1..points.len()).step_by(2) {
        let (s, value) = h_sign_at(&hn, &mut points[i], tol);
        cert.h_checked.push((points[i].approx(), value));
        match s {
            Sign::Negative => {
                let (neg, pos) =
                    incomparability_witnesses_from(&ladder.top().scale(&sgn), tol);
                if neg.is_none() || pos.is_none() {
                    return None;
                }
                let factorial = factorial::<T>(n_u);
                let mut v = OrderVerdict::with_status(VerdictStatus::Incomparable);
                v.witness_low = neg.map(|w| KernelWitness {
                    shift: w.shift,
                    gap: w.gap * factorial.clone(),
                });
                v.witness_high = pos.map(|w| KernelWitness {
                    shift: w.shift,
                    gap: w.gap * factorial.clone(),
                });
                return Some(v);
            }
            Sign::Indeterminate => return None,
            _ => {}
        }
    }
    let verdict = OrderVerdict::holds(cert);
    Some(if reversed { verdict.swap() } else { verdict })
}

/// Full orchestration: cheap sufficient screens first, then the exact
/// criterion; certificates name whichever test fired.
pub fn decide_order<T: Scalar>(
    mu1: &SignedMeasure<T>,
    mu2: &SignedMeasure<T>,
    n: ConvexityDegree,
    tol: &T,
) -> OrderVerdict<T> {
    assert_eq!(
        mu1.interval(),
        mu2.interval(),
        "ordering queries need a common interval"
    );
    match first_moment_mismatch(mu1, mu2, n.get(), tol) {
        Ok(None) => {}
        Ok(Some(0)) => return OrderVerdict::inapplicable(0),
        Ok(Some(k)) => {
            // equal masses but moment k differs: the monomials +-x^k are
            // n-convex and refute both directions
            let mut v = OrderVerdict::with_status(VerdictStatus::Incomparable);
            v.failed_moment = Some(k);
            return v;
        }
        Err(()) => return OrderVerdict::indeterminate(),
    }
    if n.get() == 1 {
        match check_ohlin(mu1, mu2, tol) {
            Ok(Screen::Decided(v)) => return v,
            Ok(Screen::Undecided) => {}
            Err(v) => return v,
        }
        let area = check_area_criterion(mu1, mu2, tol);
        match area.status {
            VerdictStatus::Inapplicable | VerdictStatus::Indeterminate => {}
            _ => return area,
        }
        check_levin_steckin(mu1, mu2, tol)
    } else {
        match check_dls(mu1, mu2, n, tol) {
            Ok(Screen::Decided(v)) => return v,
            Ok(Screen::Undecided) => {}
            Err(v) => return v,
        }
        let ladder = build_h_ladder(mu1, mu2, n);
        if let Some(v) = signpoints_from_ladder(&ladder, n, tol) {
            return v;
        }
        verdict_from_ladder(&ladder, n, Criterion::HLadder, tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{Interval, Segment, SignedMeasure};
    use crate::numeric::{Polynomial, Rad};

    type M = SignedMeasure<Rad>;

    fn q(n: i64, d: i64) -> Rad {
        Rad::from_ratio(n, d)
    }

    fn unit() -> Interval<Rad> {
        Interval::unit()
    }

    fn tol() -> Rad {
        Rad::zero()
    }

    fn n(v: u32) -> ConvexityDegree {
        ConvexityDegree::new(v).unwrap()
    }

    fn midpoint() -> M {
        M::dirac(unit(), q(1, 2), Rad::one()).unwrap()
    }

    fn uniform() -> M {
        M::uniform(unit(), Rad::one())
    }

    fn endpoints() -> M {
        M::new(unit(), vec![(Rad::zero(), q(1, 2)), (Rad::one(), q(1, 2))], vec![]).unwrap()
    }

    /// Piecewise-constant density measure of a four-node antiderivative
    /// expression on [0,1]: coefficients at nodes 1-alpha_i, density
    /// -(a_1+...+a_i) between consecutive nodes.
    fn deriv_expr(coeffs: &[(i64, i64)], alphas: &[(i64, i64)]) -> M {
        let mut segs = Vec::new();
        let mut prefix = Rad::zero();
        for i in 0..coeffs.len() - 1 {
            prefix = prefix + q(coeffs[i].0, coeffs[i].1);
            let from = Rad::one() - q(alphas[i].0, alphas[i].1);
            let to = Rad::one() - q(alphas[i + 1].0, alphas[i + 1].1);
            segs.push(Segment {
                from,
                to,
                density: Polynomial::constant(-prefix.clone()),
            });
        }
        M::new(unit(), vec![], segs).unwrap()
    }

    #[test]
    fn classic_single_crossing() {
        let f = uniform().cdf().sub(&midpoint().cdf());
        let report = sign_changes(&f, &tol());
        assert_eq!(report.count, 1);
        assert_eq!(report.points[0].approx(), q(1, 2));
        assert_eq!(report.first_sign, Sign::Positive);
    }

    #[test]
    fn zero_function_has_no_crossings() {
        let f = uniform().cdf().sub(&uniform().cdf());
        let report = sign_changes(&f, &tol());
        assert_eq!(report.count, 0);
        assert_eq!(report.first_sign, Sign::Zero);
    }

    #[test]
    fn ohlin_decides_classic_chain() {
        match check_ohlin(&midpoint(), &uniform(), &tol()).unwrap() {
            Screen::Decided(v) => {
                assert_eq!(v.status, VerdictStatus::Holds);
                assert_eq!(v.certificate.unwrap().criterion, Criterion::Ohlin);
            }
            Screen::Undecided => panic!("ohlin must decide the midpoint pair"),
        }
        match check_ohlin(&uniform(), &endpoints(), &tol()).unwrap() {
            Screen::Decided(v) => assert_eq!(v.status, VerdictStatus::Holds),
            Screen::Undecided => panic!("ohlin must decide the endpoint pair"),
        }
        // equal measures: zero crossings, not decided by this screen
        assert!(matches!(
            check_ohlin(&uniform(), &uniform(), &tol()).unwrap(),
            Screen::Undecided
        ));
        // mass mismatch is inapplicable with the violated index
        let half = M::dirac(unit(), q(1, 2), q(1, 2)).unwrap();
        let err = check_ohlin(&half, &uniform(), &tol()).unwrap_err();
        assert_eq!(err.status, VerdictStatus::Inapplicable);
        assert_eq!(err.failed_moment, Some(0));
    }

    #[test]
    fn ladder_of_classic_pair() {
        // H_1(x) = x^2/2 - (x - 1/2)_+, minimum 0 at 1/2
        let ladder = build_h_ladder(&midpoint(), &uniform(), n(1));
        let h1 = ladder.top();
        assert_eq!(h1.eval(&q(1, 2)), q(1, 8));
        assert_eq!(h1.eval(&q(1, 4)), q(1, 32));
        assert_eq!(h1.eval(&Rad::one()), Rad::zero());
        // equal measures: all levels vanish
        let z = build_h_ladder(&uniform(), &uniform(), n(3));
        for level in &z.levels {
            for piece in level.pieces() {
                assert!(piece.is_zero());
            }
        }
    }

    #[test]
    fn levin_steckin_on_four_node_expressions() {
        // (1/3, -8/3, 8/3, -1/3) at (1, 3/4, 1/4, 0): below the uniform
        let ex0 = deriv_expr(&[(1, 3), (-8, 3), (8, 3), (-1, 3)], &[(1, 1), (3, 4), (1, 4), (0, 1)]);
        assert_eq!(ex0.total_mass(), Rad::one());
        let v = check_levin_steckin(&ex0, &uniform(), &tol());
        assert_eq!(v.status, VerdictStatus::Holds);

        // (-2, 3, -3, 2) at (1, 2/3, 1/3, 0): above the uniform
        let ex2 = deriv_expr(&[(-2, 1), (3, 1), (-3, 1), (2, 1)], &[(1, 1), (2, 3), (1, 3), (0, 1)]);
        let v = check_levin_steckin(&ex2, &uniform(), &tol());
        assert_eq!(v.status, VerdictStatus::HoldsReversed);

        // the ex0 expression against the midpoint mass: incomparable
        let v = check_levin_steckin(&ex0, &midpoint(), &tol());
        assert_eq!(v.status, VerdictStatus::Incomparable);
        let lo = v.witness_low.unwrap();
        let hi = v.witness_high.unwrap();
        assert_eq!(lo.gap.sign_exact(), std::cmp::Ordering::Less);
        assert_eq!(hi.gap.sign_exact(), std::cmp::Ordering::Greater);

        // identical measures hold with a zero certificate
        let v = check_levin_steckin(&uniform(), &uniform(), &tol());
        assert_eq!(v.status, VerdictStatus::Holds);
        assert!(v.certificate.unwrap().both_directions);
    }

    #[test]
    fn area_criterion_boundary_case() {
        // symmetric three-node family: a at alpha, 1-2a at 1/2, a at 1-alpha
        // versus uniform; holds iff a <= 2 - 2 alpha. Take the boundary
        // a = 1/2, alpha = 3/4: three crossings, H(x_2) = 0 exactly.
        let a = q(1, 2);
        let alpha = q(3, 4);
        let mu = M::new(
            unit(),
            vec![
                (Rad::one() - alpha.clone(), a.clone()),
                (q(1, 2), Rad::one() - a.clone() - a.clone()),
                (alpha.clone(), a.clone()),
            ],
            vec![],
        )
        .unwrap();
        let v = check_area_criterion(&mu, &uniform(), &tol());
        assert_eq!(v.status, VerdictStatus::Holds);
        let cert = v.certificate.unwrap();
        assert_eq!(cert.criterion, Criterion::AreaCriterion);
        assert_eq!(cert.crossings.len(), 3);
        assert!(cert.h_checked.iter().all(|(_, h)| h.is_zero()));

        // push a past the boundary: incomparable
        let a = q(1, 2) + q(1, 1000);
        let mu_bad = M::new(
            unit(),
            vec![
                (Rad::one() - alpha.clone(), a.clone()),
                (q(1, 2), Rad::one() - a.clone() - a.clone()),
                (alpha, a),
            ],
            vec![],
        )
        .unwrap();
        let v = check_area_criterion(&mu_bad, &uniform(), &tol());
        assert_eq!(v.status, VerdictStatus::Incomparable);
    }

    #[test]
    fn single_crossing_input_holds_via_area() {
        let v = check_area_criterion(&midpoint(), &uniform(), &tol());
        assert_eq!(v.status, VerdictStatus::Holds);
    }

    #[test]
    fn decide_order_classic_chain_and_equality() {
        let v = decide_order(&midpoint(), &uniform(), n(1), &tol());
        assert_eq!(v.status, VerdictStatus::Holds);
        assert_eq!(v.certificate.unwrap().criterion, Criterion::Ohlin);
        let v = decide_order(&uniform(), &endpoints(), n(1), &tol());
        assert_eq!(v.status, VerdictStatus::Holds);
        let v = decide_order(&uniform(), &uniform(), n(2), &tol());
        assert_eq!(v.status, VerdictStatus::Holds);
        assert!(v.certificate.unwrap().both_directions);
        // antisymmetry on a strict pair
        let fwd = decide_order(&midpoint(), &uniform(), n(1), &tol());
        let rev = decide_order(&uniform(), &midpoint(), n(1), &tol());
        assert_eq!(fwd.status, VerdictStatus::Holds);
        assert_eq!(rev.status, VerdictStatus::HoldsReversed);
    }

    #[test]
    fn moment_mismatches_are_flagged() {
        // different means: +-x refute both directions
        let shifted = M::dirac(unit(), q(1, 3), Rad::one()).unwrap();
        let v = decide_order(&shifted, &uniform(), n(2), &tol());
        assert_eq!(v.status, VerdictStatus::Incomparable);
        assert_eq!(v.failed_moment, Some(1));
        // different masses: no normalization, the query is malformed
        let half = M::dirac(unit(), q(1, 2), q(1, 2)).unwrap();
        let v = decide_order(&half, &uniform(), n(1), &tol());
        assert_eq!(v.status, VerdictStatus::Inapplicable);
        assert_eq!(v.failed_moment, Some(0));
    }

    #[test]
    fn scale_invariance_of_verdicts() {
        let c = q(7, 3);
        let m1 = midpoint().scale(&c);
        let m2 = uniform().scale(&c);
        let v = decide_order(&m1, &m2, n(1), &tol());
        assert_eq!(v.status, VerdictStatus::Holds);
    }
}
