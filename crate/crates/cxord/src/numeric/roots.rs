//! Real root isolation and sign analysis on an interval.
//!
//! Exact scalars use Sturm sequences on the squarefree part, so root counts
//! and flip parities are certified. Float scalars use the derivative chain:
//! critical points of `P` are found recursively, then simple roots are
//! bisected between points of strictly opposite sign; values inside the
//! tolerance band surface as tangential roots or `Indeterminate`.

use super::poly::Polynomial;
use super::{Scalar, Sign};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootError {
    /// The polynomial vanishes identically on the segment; the caller must
    /// treat it as a zero stretch.
    IdenticallyZero,
    /// Float mode could not resolve a sign.
    Indeterminate,
}

/// One isolated real root.
#[derive(Debug, Clone)]
pub struct IsolatedRoot<T: Scalar> {
    pub low: T,
    pub high: T,
    /// Exact location when the isolation landed on the root itself.
    pub exact: Option<T>,
    /// Whether the sign of the polynomial flips across the root
    /// (odd multiplicity).
    pub flips: bool,
    /// Squarefree polynomial the root belongs to; kept for later refinement.
    sf: Polynomial<T>,
}

impl<T: Scalar> IsolatedRoot<T> {
    pub fn approx(&self) -> T {
        match &self.exact {
            Some(v) => v.clone(),
            None => (self.low.clone() + self.high.clone()).half(),
        }
    }

    pub fn width(&self) -> T {
        self.high.clone() - self.low.clone()
    }

    /// Shrink the isolating interval until its width is at most `target`.
    pub fn refine(&mut self, target: &T) {
        if self.exact.is_some() {
            return;
        }
        while self.width().cmp_total(target) == std::cmp::Ordering::Greater {
            let mid = (self.low.clone() + self.high.clone()).half();
            let v = self.sf.eval(&mid);
            if T::EXACT && v.is_zero() {
                self.exact = Some(mid.clone());
                self.low = mid.clone();
                self.high = mid;
                return;
            }
            let sl = self.sf.eval(&self.low).sign(&T::zero());
            if v.sign(&T::zero()) == sl {
                self.low = mid;
            } else {
                self.high = mid;
            }
        }
    }
}

/// Answer of [`nonnegative_on`].
#[derive(Debug, Clone, PartialEq)]
pub enum NonNegative<T> {
    Yes,
    /// A point where the polynomial is strictly negative.
    No(T),
    Indeterminate,
}

fn sturm_chain<T: Scalar>(sf: &Polynomial<T>) -> Vec<Polynomial<T>> {
    let mut chain = vec![sf.clone(), sf.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        if chain[n - 1].degree() == Some(0) {
            break;
        }
        let (_, r) = chain[n - 2].divmod(&chain[n - 1]);
        chain.push(r.neg());
    }
    chain
}

fn sign_variations<T: Scalar>(chain: &[Polynomial<T>], x: &T) -> usize {
    let mut count = 0;
    let mut prev: Option<Sign> = None;
    for p in chain {
        let s = p.eval(x).sign(&T::zero());
        if s.is_known_nonzero() {
            if let Some(q) = prev {
                if q != s {
                    count += 1;
                }
            }
            prev = Some(s);
        }
    }
    count
}

/// Number of distinct roots of the squarefree `sf` in the open interval
/// `(l, r)`, assuming `sf(l) != 0` and `sf(r) != 0`.
fn count_open<T: Scalar>(chain: &[Polynomial<T>], l: &T, r: &T) -> usize {
    sign_variations(chain, l).saturating_sub(sign_variations(chain, r))
}

struct RawRoot<T> {
    low: T,
    high: T,
    exact: Option<T>,
    /// Polynomial with nonzero values at `low`/`high` whose unique root in
    /// the interval is the tracked one.
    sf: Polynomial<T>,
}

fn isolate_rec<T: Scalar>(
    chain: &[Polynomial<T>],
    sf: &Polynomial<T>,
    l: &T,
    r: &T,
    out: &mut Vec<RawRoot<T>>,
) {
    let n = count_open(chain, l, r);
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push(RawRoot {
            low: l.clone(),
            high: r.clone(),
            exact: None,
            sf: sf.clone(),
        });
        return;
    }
    let mid = (l.clone() + r.clone()).half();
    if sf.eval(&mid).is_zero() {
        // exact hit: record and recurse on the deflated polynomial
        let defl = sf.deflate(&mid);
        let chain2 = sturm_chain(&defl);
        isolate_rec(&chain2, &defl, l, &mid, out);
        out.push(RawRoot {
            low: mid.clone(),
            high: mid.clone(),
            exact: Some(mid.clone()),
            sf: defl.clone(),
        });
        isolate_rec(&chain2, &defl, &mid, r, out);
    } else {
        isolate_rec(chain, sf, l, &mid, out);
        isolate_rec(chain, sf, &mid, r, out);
    }
}

/// All real roots of `p` in the closed interval `[l, r]`, ordered, each
/// tagged with its sign-flip parity. Exact scalars get Sturm isolation;
/// float scalars the derivative-chain bisection.
pub fn roots_in_interval<T: Scalar>(
    p: &Polynomial<T>,
    l: &T,
    r: &T,
    tol: &T,
) -> Result<Vec<IsolatedRoot<T>>, RootError> {
    sign_partition(p, l, r, tol).map(|part| part.roots)
}

/// Roots plus the sign of `p` on every gap between consecutive roots
/// (`gap_signs.len() == roots.len() + 1`, left to right).
#[derive(Debug, Clone)]
pub struct SignPartition<T: Scalar> {
    pub roots: Vec<IsolatedRoot<T>>,
    pub gap_signs: Vec<Sign>,
    /// The points where the gap signs were evaluated (witnesses).
    pub gap_samples: Vec<T>,
}

pub fn sign_partition<T: Scalar>(
    p: &Polynomial<T>,
    l: &T,
    r: &T,
    tol: &T,
) -> Result<SignPartition<T>, RootError> {
    assert!(
        l.cmp_total(r) == std::cmp::Ordering::Less,
        "empty root interval"
    );
    if p.is_zero() {
        return Err(RootError::IdenticallyZero);
    }
    if p.degree() == Some(0) {
        let s = p.coeff(0).sign(tol);
        return Ok(SignPartition {
            roots: Vec::new(),
            gap_signs: vec![s],
            gap_samples: vec![(l.clone() + r.clone()).half()],
        });
    }
    let (roots, gap_signs, gap_samples) = if T::EXACT {
        roots_exact(p, l, r)?
    } else {
        roots_float(p, l, r, tol)?
    };
    Ok(SignPartition {
        roots,
        gap_signs,
        gap_samples,
    })
}

type RootsAndGaps<T> = (Vec<IsolatedRoot<T>>, Vec<Sign>, Vec<T>);

fn roots_exact<T: Scalar>(
    p: &Polynomial<T>,
    l: &T,
    r: &T,
) -> Result<RootsAndGaps<T>, RootError> {
    let mut sf = p.squarefree();
    let mut raw: Vec<RawRoot<T>> = Vec::new();
    if sf.eval(l).is_zero() {
        sf = sf.deflate(l);
        raw.push(RawRoot {
            low: l.clone(),
            high: l.clone(),
            exact: Some(l.clone()),
            sf: sf.clone(),
        });
    }
    if !sf.is_zero() && sf.eval(r).is_zero() {
        sf = sf.deflate(r);
        raw.push(RawRoot {
            low: r.clone(),
            high: r.clone(),
            exact: Some(r.clone()),
            sf: sf.clone(),
        });
    }
    if sf.degree().is_some_and(|d| d >= 1) {
        let chain = sturm_chain(&sf);
        isolate_rec(&chain, &sf, l, r, &mut raw);
    }
    raw.sort_by(|a, b| (a.low.clone() + a.high.clone()).cmp_total(&(b.low.clone() + b.high.clone())));
    let mut roots: Vec<IsolatedRoot<T>> = raw
        .into_iter()
        .map(|rr| IsolatedRoot {
            low: rr.low,
            high: rr.high,
            exact: rr.exact,
            flips: false,
            sf: rr.sf,
        })
        .collect();
    // separate intervals that touch at a root, so gap samples never hit one
    for i in 1..roots.len() {
        loop {
            match roots[i - 1].high.cmp_total(&roots[i].low) {
                std::cmp::Ordering::Less => break,
                std::cmp::Ordering::Equal => {
                    if !p.eval(&roots[i].low).is_zero() {
                        break;
                    }
                }
                std::cmp::Ordering::Greater => {}
            }
            if roots[i].exact.is_none() {
                let w = roots[i].width().half();
                roots[i].refine(&w);
            } else if roots[i - 1].exact.is_none() {
                let w = roots[i - 1].width().half();
                roots[i - 1].refine(&w);
            } else {
                break; // two identical exact roots cannot occur
            }
        }
    }
    // flip parity from the sign of p on the gaps between roots
    let mut marks = Vec::with_capacity(2 * roots.len() + 2);
    marks.push(l.clone());
    for root in &roots {
        marks.push(root.low.clone());
        marks.push(root.high.clone());
    }
    marks.push(r.clone());
    let mut gap_signs = Vec::with_capacity(roots.len() + 1);
    let mut gap_samples = Vec::with_capacity(roots.len() + 1);
    for k in 0..=roots.len() {
        let a = &marks[2 * k];
        let b = &marks[2 * k + 1];
        let sample = if a.cmp_total(b) == std::cmp::Ordering::Less {
            (a.clone() + b.clone()).half()
        } else {
            a.clone()
        };
        gap_signs.push(p.eval(&sample).sign(&T::zero()));
        gap_samples.push(sample);
    }
    for (k, root) in roots.iter_mut().enumerate() {
        root.flips = gap_signs[k] != gap_signs[k + 1];
        // roots at the segment ends have no two-sided neighborhood inside it
        if root
            .exact
            .as_ref()
            .is_some_and(|v| v.cmp_total(l).is_eq() || v.cmp_total(r).is_eq())
        {
            root.flips = false;
        }
    }
    Ok((roots, gap_signs, gap_samples))
}

fn roots_float<T: Scalar>(
    p: &Polynomial<T>,
    l: &T,
    r: &T,
    tol: &T,
) -> Result<RootsAndGaps<T>, RootError> {
    let deg = p.degree().unwrap();
    let mut markers: Vec<T> = vec![l.clone(), r.clone()];
    if deg > 1 {
        if let Ok((crit, _, _)) = roots_float(&p.derivative(), l, r, tol) {
            for c in crit {
                markers.push(c.approx());
            }
        }
    }
    markers.sort_by(|a, b| a.cmp_total(b));
    markers.dedup_by(|a, b| a == b);

    let mut roots: Vec<IsolatedRoot<T>> = Vec::new();
    let mut push = |low: T, high: T, exact: Option<T>, flips: bool| {
        roots.push(IsolatedRoot {
            low,
            high,
            exact,
            flips,
            sf: p.clone(),
        });
    };
    let signs: Vec<Sign> = markers.iter().map(|m| p.eval(m).sign(tol)).collect();
    for k in 0..markers.len() {
        if !signs[k].is_known_nonzero() {
            // tangent or unresolved root at a marker
            push(markers[k].clone(), markers[k].clone(), Some(markers[k].clone()), false);
        }
        if k + 1 < markers.len()
            && signs[k].is_known_nonzero()
            && signs[k + 1].is_known_nonzero()
            && signs[k] != signs[k + 1]
        {
            // exactly one simple root between consecutive markers
            let (mut lo, mut hi) = (markers[k].clone(), markers[k + 1].clone());
            let slo = p.eval(&lo).sign(&T::zero());
            for _ in 0..128 {
                let mid = (lo.clone() + hi.clone()).half();
                if mid == lo || mid == hi {
                    break;
                }
                let v = p.eval(&mid);
                if v.is_zero() {
                    lo = mid.clone();
                    hi = mid;
                    break;
                }
                if v.sign(&T::zero()) == slo {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let mid = (lo.clone() + hi.clone()).half();
            push(lo, hi, Some(mid), true);
        }
    }
    roots.sort_by(|a, b| a.approx().cmp_total(&b.approx()));
    roots.dedup_by(|a, b| a.approx() == b.approx());
    // sample a sign strictly inside every gap between consecutive roots
    let mut gap_signs = Vec::with_capacity(roots.len() + 1);
    let mut gap_samples = Vec::with_capacity(roots.len() + 1);
    let mut prev = l.clone();
    for k in 0..=roots.len() {
        let next = if k < roots.len() {
            roots[k].low.clone()
        } else {
            r.clone()
        };
        let sample = (prev.clone() + next.clone()).half();
        gap_signs.push(p.eval(&sample).sign(tol));
        gap_samples.push(sample);
        if k < roots.len() {
            prev = roots[k].high.clone();
        }
    }
    Ok((roots, gap_signs, gap_samples))
}

/// Decide whether `p >= 0` everywhere on `[l, r]`.
pub fn nonnegative_on<T: Scalar>(
    p: &Polynomial<T>,
    l: &T,
    r: &T,
    tol: &T,
) -> NonNegative<T> {
    if l.cmp_total(r) == std::cmp::Ordering::Greater {
        return NonNegative::Yes;
    }
    if p.is_zero() {
        return NonNegative::Yes;
    }
    if l == r || l.cmp_total(r) == std::cmp::Ordering::Equal {
        return match p.eval(l).sign(tol) {
            Sign::Negative => NonNegative::No(l.clone()),
            Sign::Indeterminate => NonNegative::Indeterminate,
            _ => NonNegative::Yes,
        };
    }
    let part = match sign_partition(p, l, r, tol) {
        Ok(part) => part,
        Err(RootError::IdenticallyZero) => return NonNegative::Yes,
        Err(RootError::Indeterminate) => return NonNegative::Indeterminate,
    };
    // values inside the tolerance band count as tangential zeros; only a
    // strict violation below -tol refutes nonnegativity
    for (k, s) in part.gap_signs.iter().enumerate() {
        if *s == Sign::Negative {
            return NonNegative::No(part.gap_samples[k].clone());
        }
    }
    for e in [l, r] {
        if p.eval(e).sign(tol) == Sign::Negative {
            return NonNegative::No(e.clone());
        }
    }
    NonNegative::Yes
}

/// Sign of `q` at an isolated root of another polynomial.
///
/// Exact mode first decides the exact-zero case through a gcd with the
/// root's defining polynomial, then refines the isolating interval until
/// the sign is locked by a Lipschitz bound. Float mode evaluates at the
/// approximate root under the tolerance.
pub fn sign_at_root<T: Scalar>(q: &Polynomial<T>, root: &mut IsolatedRoot<T>, tol: &T) -> Sign {
    if let Some(v) = &root.exact {
        return q.eval(v).sign(tol);
    }
    if !T::EXACT {
        return q.eval(&root.approx()).sign(tol);
    }
    if q.is_zero() {
        return Sign::Zero;
    }
    // q(root) == 0 iff the defining polynomial and q share the root;
    // the gcd divides the squarefree definer, so it is squarefree itself
    // and nonzero at the isolating endpoints
    let g = root.sf.gcd(q);
    if g.degree().is_some_and(|d| d >= 1) {
        let chain = sturm_chain(&g);
        if count_open(&chain, &root.low, &root.high) > 0 {
            return Sign::Zero;
        }
    }
    loop {
        let vl = q.eval(&root.low);
        let sl = vl.sign(&T::zero());
        let vh = q.eval(&root.high).sign(&T::zero());
        if sl == vh && sl.is_known_nonzero() {
            // lock the sign: |q| must stay away from zero over the interval
            let slope = q.derivative().sup_bound(&root.low, &root.high);
            let drift = slope * root.width();
            if vl.abs().cmp_total(&drift) == std::cmp::Ordering::Greater {
                return sl;
            }
        }
        let w = root.width().half();
        root.refine(&w);
        if root.exact.is_some() {
            return q.eval(&root.approx()).sign(tol);
        }
    }
}
