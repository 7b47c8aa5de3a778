//! Independent brute-force verification of ordering verdicts by direct
//! integration of n-convex test functions.
//!
//! The integration path here is deliberately separate from the engine:
//! expectations are computed per test function by explicit atom evaluation
//! and per-segment antiderivative evaluation, never through the engine's
//! piecewise kernel transform. The grid audit escalates to polynomial
//! interpolation through independently computed point values when a gap
//! comes close to zero, so exact tangencies are not mistaken for
//! violations.

use crate::measure::SignedMeasure;
use crate::numeric::roots::{nonnegative_on, NonNegative};
use crate::numeric::{Polynomial, Scalar, Sign};
use crate::ordering::{ConvexityDegree, KernelWitness, OrderVerdict, VerdictStatus};

/// A closed-form n-convex test function.
#[derive(Debug, Clone)]
pub enum TestFunction<T: Scalar> {
    /// `x^k`
    Monomial(u32),
    /// `(x - shift)_+^n`
    Kernel { order: u32, shift: T },
    /// `poly(x) + sum c_i (x - t_i)_+^n` with `c_i >= 0`; n-convex by
    /// construction when the polynomial part has degree at most `n`.
    ConeCombination {
        order: u32,
        terms: Vec<(T, T)>, // (shift, nonnegative coefficient)
        poly: Polynomial<T>,
    },
}

/// Exact integral of a test function against a measure.
pub fn integrate<T: Scalar>(f: &TestFunction<T>, mu: &SignedMeasure<T>) -> T {
    match f {
        TestFunction::Monomial(k) => mu.moment(*k),
        TestFunction::Kernel { order, shift } => integrate_kernel(*order, shift, mu),
        TestFunction::ConeCombination { order, terms, poly } => {
            let mut acc = integrate_poly(poly, mu);
            for (shift, coeff) in terms {
                acc = acc + coeff.clone() * integrate_kernel(*order, shift, mu);
            }
            acc
        }
    }
}

fn integrate_poly<T: Scalar>(poly: &Polynomial<T>, mu: &SignedMeasure<T>) -> T {
    let mut acc = T::zero();
    for (k, c) in poly.coeffs().iter().enumerate() {
        acc = acc + c.clone() * mu.moment(k as u32);
    }
    acc
}

/// `int (x - t)_+^n dmu(x)`: atoms directly, segments by antidifferentiating
/// `(x - t)^n g(x)` from `max(t, from)` to `to`.
fn integrate_kernel<T: Scalar>(n: u32, t: &T, mu: &SignedMeasure<T>) -> T {
    let mut acc = T::zero();
    for (loc, w) in mu.atoms() {
        let d = loc.clone() - t.clone();
        if d.sign(&T::zero()) == Sign::Positive {
            let mut pw = T::one();
            for _ in 0..n {
                pw = pw * d.clone();
            }
            acc = acc + w.clone() * pw;
        }
    }
    for seg in mu.segments() {
        if seg.to.cmp_total(t) != std::cmp::Ordering::Greater {
            continue;
        }
        let lower = T::max_of(seg.from.clone(), t.clone());
        // (x - t)^n as a polynomial in x
        let mut kernel = Polynomial::constant(T::one());
        let base = Polynomial::linear(-t.clone(), T::one());
        for _ in 0..n {
            kernel = kernel.mul(&base);
        }
        acc = acc + kernel.mul(&seg.density).integral(&lower, &seg.to);
    }
    acc
}

/// Deterministic generator of n-convex cone combinations: `richness`
/// truncated-power terms with nonnegative rational coefficients plus a
/// small polynomial part of degree at most n. The generator is a
/// documented splitmix64 stream, so a report only needs the seed.
pub fn sample_convex<T: Scalar>(
    n: ConvexityDegree,
    richness: u32,
    seed: u64,
    interval: &crate::measure::Interval<T>,
) -> TestFunction<T> {
    let mut state = SplitMix64::new(seed);
    let order = n.get();
    let mut terms = Vec::with_capacity(richness as usize);
    let len = interval.length();
    for _ in 0..richness {
        // shift on a fine rational grid inside the interval
        let num = (state.next() % 255) as i64 + 1;
        let shift = interval.lo().clone() + len.clone() * T::from_ratio(num, 256);
        let coeff = T::from_ratio((state.next() % 64) as i64, 16);
        terms.push((shift, coeff));
    }
    let mut coeffs = Vec::with_capacity(order as usize + 1);
    for _ in 0..=order {
        coeffs.push(T::from_ratio((state.next() % 33) as i64 - 16, 8));
    }
    TestFunction::ConeCombination {
        order,
        terms,
        poly: Polynomial::new(coeffs),
    }
}

/// splitmix64; fixed constants, stable across platforms.
pub struct SplitMix64 {
    state: u64,
}

#[allow(clippy::should_implement_trait)] // a raw generator step, not an iterator
impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform rational in `[0, 1)` with denominator `2^16`.
    pub fn rational_unit<T: Scalar>(&mut self) -> T {
        T::from_ratio((self.next() % 65536) as i64, 65536)
    }
}

/// Report of a brute-force ordering audit.
#[derive(Debug, Clone)]
pub struct OracleReport<T: Scalar> {
    pub verdict: OrderVerdict<T>,
    /// Smallest kernel gap seen on the audit grid.
    pub min_gap: T,
    /// Shift realizing the smallest gap.
    pub argmin_shift: T,
    pub grid_points: usize,
}

/// Decide the ordering by brute force: moment equalities, then kernel gaps
/// on a grid, escalating to exact interpolation of the gap polynomial
/// between event points whenever a grid value sits too close to zero.
pub fn oracle_order<T: Scalar>(
    mu1: &SignedMeasure<T>,
    mu2: &SignedMeasure<T>,
    n: ConvexityDegree,
    grid_density: u32,
    tol: &T,
) -> OracleReport<T> {
    assert!(grid_density >= 1, "need at least one grid point per unit");
    let order = n.get();
    let report = |verdict: OrderVerdict<T>, min_gap: T, argmin: T, pts: usize| OracleReport {
        verdict,
        min_gap,
        argmin_shift: argmin,
        grid_points: pts,
    };
    // moments 0..=n must agree
    for k in 0..=order {
        let m1 = mu1.moment(k);
        let m2 = mu2.moment(k);
        let d = m2.clone() - m1.clone();
        if d.is_zero() {
            continue;
        }
        let scale = T::one() + m1.abs() + m2.abs();
        if d.abs().cmp_total(&T::equality_dust(&scale)) != std::cmp::Ordering::Greater {
            continue;
        }
        let status = match d.sign(tol) {
            Sign::Zero => continue,
            Sign::Indeterminate => VerdictStatus::Indeterminate,
            _ if k == 0 => VerdictStatus::Inapplicable,
            _ => VerdictStatus::Incomparable,
        };
        return report(
            OrderVerdict {
                status,
                certificate: None,
                witness_low: None,
                witness_high: None,
                failed_moment: Some(k),
            },
            d,
            T::zero(),
            0,
        );
    }
    // kernel gap audit on (a, b)
    let interval = mu1.interval();
    let gap_at = |t: &T| -> T {
        let f = TestFunction::Kernel {
            order,
            shift: t.clone(),
        };
        integrate(&f, mu2) - integrate(&f, mu1)
    };
    let mut events = mu1.event_points();
    for e in mu2.event_points() {
        events.push(e);
    }
    events.sort_by(|a, b| a.cmp_total(b));
    events.dedup_by(|a, b| a.cmp_total(b) == std::cmp::Ordering::Equal);
    let total_pts = (grid_density as usize).max(1) * 8;
    let mut min_gap: Option<(T, T)> = None;
    let mut max_gap: Option<(T, T)> = None;
    let mut grid_count = 0usize;
    let mut indeterminate = false;
    let mut neg_witness: Option<KernelWitness<T>> = None;
    let mut pos_witness: Option<KernelWitness<T>> = None;
    let escalation = T::from_ratio(1, 1 << 40);
    for win in events.windows(2) {
        let (lo, hi) = (&win[0], &win[1]);
        let width = hi.clone() - lo.clone();
        let mut near_zero = false;
        for j in 0..=total_pts {
            let t = lo.clone() + width.clone() * T::from_ratio(j as i64, total_pts as i64);
            let g = gap_at(&t);
            grid_count += 1;
            if min_gap.as_ref().is_none_or(|(m, _)| g.cmp_total(m) == std::cmp::Ordering::Less) {
                min_gap = Some((g.clone(), t.clone()));
            }
            if max_gap.as_ref().is_none_or(|(m, _)| g.cmp_total(m) == std::cmp::Ordering::Greater) {
                max_gap = Some((g.clone(), t.clone()));
            }
            match g.sign(tol) {
                Sign::Negative => {
                    neg_witness.get_or_insert(KernelWitness {
                        shift: t.clone(),
                        gap: g.clone(),
                    });
                }
                Sign::Positive => {
                    pos_witness.get_or_insert(KernelWitness {
                        shift: t.clone(),
                        gap: g.clone(),
                    });
                }
                Sign::Zero => {}
                Sign::Indeterminate => indeterminate = true,
            }
            if !g.is_zero() && g.abs().cmp_total(&escalation) != std::cmp::Ordering::Greater {
                near_zero = true;
            }
        }
        // escalate: interpolate the gap polynomial on this stretch through
        // independently computed values and run the exact sign analysis
        let needs_exact = T::EXACT && (near_zero || (neg_witness.is_none() || pos_witness.is_none()));
        if needs_exact {
            let deg = gap_degree(mu1, mu2, order);
            let poly = interpolate_gap(&gap_at, lo, hi, deg);
            match nonnegative_on(&poly, lo, hi, tol) {
                NonNegative::Yes => {}
                NonNegative::No(w) => {
                    let g = gap_at(&w);
                    neg_witness.get_or_insert(KernelWitness {
                        shift: w.clone(),
                        gap: g.clone(),
                    });
                    if min_gap.as_ref().is_none_or(|(m, _)| g.cmp_total(m) == std::cmp::Ordering::Less) {
                        min_gap = Some((g, w));
                    }
                }
                NonNegative::Indeterminate => indeterminate = true,
            }
            match nonnegative_on(&poly.neg(), lo, hi, tol) {
                NonNegative::Yes => {}
                NonNegative::No(w) => {
                    let g = gap_at(&w);
                    pos_witness.get_or_insert(KernelWitness {
                        shift: w.clone(),
                        gap: g,
                    });
                }
                NonNegative::Indeterminate => indeterminate = true,
            }
        }
    }
    let (min_gap, argmin) = min_gap
        .unwrap_or((T::zero(), interval.lo().clone()));
    let status = match (&neg_witness, &pos_witness) {
        (None, None) => VerdictStatus::Holds, // identically zero difference
        (None, Some(_)) => VerdictStatus::Holds,
        (Some(_), None) => VerdictStatus::HoldsReversed,
        (Some(_), Some(_)) => VerdictStatus::Incomparable,
    };
    let status = if indeterminate && status != VerdictStatus::Incomparable {
        VerdictStatus::Indeterminate
    } else {
        status
    };
    let verdict = OrderVerdict {
        status,
        certificate: None,
        witness_low: neg_witness,
        witness_high: pos_witness,
        failed_moment: None,
    };
    report(verdict, min_gap, argmin, grid_count)
}

/// Degree bound for the kernel-gap polynomial between event points.
fn gap_degree<T: Scalar>(mu1: &SignedMeasure<T>, mu2: &SignedMeasure<T>, n: u32) -> usize {
    let mut d = 0usize;
    for seg in mu1.segments().iter().chain(mu2.segments()) {
        d = d.max(seg.density.degree().unwrap_or(0));
    }
    n as usize + d + 1
}

/// Lagrange interpolation of the gap through `deg + 1` independently
/// computed values on `[lo, hi]`.
fn interpolate_gap<T: Scalar>(
    gap_at: &dyn Fn(&T) -> T,
    lo: &T,
    hi: &T,
    deg: usize,
) -> Polynomial<T> {
    let m = deg + 1;
    let width = hi.clone() - lo.clone();
    let mut xs = Vec::with_capacity(m);
    let mut ys = Vec::with_capacity(m);
    for j in 0..m {
        // nodes strictly inside the stretch keep kernels one-sided
        let x = lo.clone() + width.clone() * T::from_ratio(2 * j as i64 + 1, 2 * m as i64);
        ys.push(gap_at(&x));
        xs.push(x);
    }
    let mut acc = Polynomial::zero();
    for j in 0..m {
        let mut basis = Polynomial::constant(T::one());
        let mut denom = T::one();
        for k in 0..m {
            if k != j {
                basis = basis.mul(&Polynomial::linear(-xs[k].clone(), T::one()));
                denom = denom * (xs[j].clone() - xs[k].clone());
            }
        }
        acc = acc.add(&basis.scale(&(ys[j].clone() / denom)));
    }
    acc
}
