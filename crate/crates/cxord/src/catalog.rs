//! Named measure families and quadrature operators, with the closed-form
//! conditions under which each family's inequality holds. Every family
//! produces explicit measure pairs so the generic ordering engine can
//! cross-check the closed forms.

use crate::measure::{Interval, MeasureError, Segment, SignedMeasure};
use crate::numeric::{Polynomial, Rad, Scalar, Sign};
use crate::ordering::{decide_order, ConvexityDegree, OrderVerdict, VerdictStatus};
use std::fmt;

#[derive(Debug, Clone)]
pub enum FamilyError {
    Domain(String),
    Constraint(String),
    Measure(MeasureError),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::Domain(s) => write!(f, "parameter outside the family domain: {s}"),
            FamilyError::Constraint(s) => write!(f, "violated normalization constraint: {s}"),
            FamilyError::Measure(e) => write!(f, "measure construction failed: {e}"),
        }
    }
}

impl std::error::Error for FamilyError {}

impl From<MeasureError> for FamilyError {
    fn from(e: MeasureError) -> Self {
        FamilyError::Measure(e)
    }
}

/// One ordering claim `lhs <= rhs` over the n-convex test class.
#[derive(Debug, Clone)]
pub struct OrderingClaim<T: Scalar> {
    pub label: String,
    pub lhs: SignedMeasure<T>,
    pub rhs: SignedMeasure<T>,
    pub degree: ConvexityDegree,
}

impl<T: Scalar> OrderingClaim<T> {
    pub fn decide(&self, tol: &T) -> OrderVerdict<T> {
        decide_order(&self.lhs, &self.rhs, self.degree, tol)
    }
}

/// Closed-form evaluation of a family's conditions at a parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionEval {
    /// Which disjunct fired, and the verdict the closed form predicts for
    /// the family's primary claim.
    Satisfied { case: String, expected: VerdictStatus },
    /// The closed form predicts the primary claim fails; `expected` is the
    /// predicted refutation shape when the theorem states one.
    Violated { expected: VerdictStatus },
}

impl ConditionEval {
    pub fn satisfied(case: &str) -> Self {
        ConditionEval::Satisfied {
            case: case.to_string(),
            expected: VerdictStatus::Holds,
        }
    }

    pub fn satisfied_as(case: &str, expected: VerdictStatus) -> Self {
        ConditionEval::Satisfied {
            case: case.to_string(),
            expected,
        }
    }

    pub fn violated() -> Self {
        ConditionEval::Violated {
            expected: VerdictStatus::Incomparable,
        }
    }

    pub fn expected(&self) -> VerdictStatus {
        match self {
            ConditionEval::Satisfied { expected, .. } => *expected,
            ConditionEval::Violated { expected } => *expected,
        }
    }

    pub fn is_satisfied(&self) -> bool {
        matches!(self, ConditionEval::Satisfied { .. })
    }
}

/// The seven quadrature operators on `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RuleName {
    C,
    G2,
    G3,
    L4,
    L5,
    S,
    I,
}

impl RuleName {
    pub const ALL: [RuleName; 7] = [
        RuleName::C,
        RuleName::G2,
        RuleName::G3,
        RuleName::L4,
        RuleName::L5,
        RuleName::S,
        RuleName::I,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleName::C => "C",
            RuleName::G2 => "G2",
            RuleName::G3 => "G3",
            RuleName::L4 => "L4",
            RuleName::L5 => "L5",
            RuleName::S => "S",
            RuleName::I => "I",
        }
    }

    pub fn parse(s: &str) -> Option<RuleName> {
        match s.to_ascii_uppercase().as_str() {
            "C" => Some(RuleName::C),
            "G2" => Some(RuleName::G2),
            "G3" => Some(RuleName::G3),
            "L4" => Some(RuleName::L4),
            "L5" => Some(RuleName::L5),
            "S" => Some(RuleName::S),
            "I" => Some(RuleName::I),
            _ => None,
        }
    }

    /// Highest polynomial degree the rule integrates exactly.
    pub fn exactness_degree(self) -> u32 {
        match self {
            RuleName::C | RuleName::G2 | RuleName::S => 3,
            RuleName::G3 | RuleName::L4 => 5,
            RuleName::L5 => 7,
            RuleName::I => u32::MAX,
        }
    }
}

impl fmt::Display for RuleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A quadrature operator as a mass-one measure on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct QuadratureRule<T: Scalar> {
    pub name: RuleName,
    pub measure: SignedMeasure<T>,
}

/// Exact nodes and weights of the named rule.
pub fn quadrature<T: Scalar>(name: RuleName) -> QuadratureRule<T> {
    let sym = Interval::symmetric();
    let node = |d: u64, den: i64| -> T {
        T::from_rad(&(Rad::sqrt_int(d) / Rad::from_int(den)))
    };
    let measure = match name {
        RuleName::C => SignedMeasure::new(
            sym,
            vec![
                (node(2, -2), T::from_ratio(1, 3)),
                (T::zero(), T::from_ratio(1, 3)),
                (node(2, 2), T::from_ratio(1, 3)),
            ],
            vec![],
        ),
        RuleName::G2 => SignedMeasure::new(
            sym,
            vec![
                (node(3, -3), T::from_ratio(1, 2)),
                (node(3, 3), T::from_ratio(1, 2)),
            ],
            vec![],
        ),
        RuleName::G3 => SignedMeasure::new(
            sym,
            vec![
                (node(15, -5), T::from_ratio(5, 18)),
                (T::zero(), T::from_ratio(4, 9)),
                (node(15, 5), T::from_ratio(5, 18)),
            ],
            vec![],
        ),
        RuleName::L4 => SignedMeasure::new(
            sym,
            vec![
                (-T::one(), T::from_ratio(1, 12)),
                (node(5, -5), T::from_ratio(5, 12)),
                (node(5, 5), T::from_ratio(5, 12)),
                (T::one(), T::from_ratio(1, 12)),
            ],
            vec![],
        ),
        RuleName::L5 => SignedMeasure::new(
            sym,
            vec![
                (-T::one(), T::from_ratio(1, 20)),
                (node(21, -7), T::from_ratio(49, 180)),
                (T::zero(), T::from_ratio(16, 45)),
                (node(21, 7), T::from_ratio(49, 180)),
                (T::one(), T::from_ratio(1, 20)),
            ],
            vec![],
        ),
        RuleName::S => SignedMeasure::new(
            sym,
            vec![
                (-T::one(), T::from_ratio(1, 6)),
                (T::zero(), T::from_ratio(2, 3)),
                (T::one(), T::from_ratio(1, 6)),
            ],
            vec![],
        ),
        RuleName::I => Ok(SignedMeasure::uniform(sym, T::one())),
    };
    QuadratureRule {
        name,
        measure: measure.expect("fixed rule data is valid"),
    }
}

/// Pairwise verdicts `decide_order(rule_i, rule_j, n)` over the given
/// rules; the matrix is verdict-antisymmetric by construction.
pub fn comparability_matrix<T: Scalar>(
    rules: &[RuleName],
    n: ConvexityDegree,
    tol: &T,
) -> Vec<Vec<OrderVerdict<T>>> {
    let measures: Vec<SignedMeasure<T>> = rules
        .iter()
        .map(|&r| quadrature::<T>(r).measure)
        .collect();
    measures
        .iter()
        .map(|mi| {
            measures
                .iter()
                .map(|mj| decide_order(mi, mj, n, tol))
                .collect()
        })
        .collect()
}

/// Measure of a first-order antiderivative expression
/// `sum a_i F(alpha_i x + (1 - alpha_i) y) / (y - x)` on `[0, 1]`:
/// piecewise-constant density `-(a_1 + ... + a_i)` between consecutive
/// nodes `1 - alpha_i`. Requires `sum a_i = 0`.
pub fn deriv_expr_measure_order1<T: Scalar>(
    weights: &[T],
    alphas: &[T],
) -> Result<SignedMeasure<T>, FamilyError> {
    if weights.len() != alphas.len() || weights.len() < 2 {
        return Err(FamilyError::Domain(
            "need equally many weights and nodes (at least two)".into(),
        ));
    }
    for w in alphas.windows(2) {
        if w[0].cmp_total(&w[1]) != std::cmp::Ordering::Greater {
            return Err(FamilyError::Domain("nodes must be strictly decreasing".into()));
        }
    }
    let mut total = T::zero();
    for w in weights {
        total = total + w.clone();
    }
    if !total.sign(&T::zero()).is_zero() {
        return Err(FamilyError::Constraint("weights must sum to zero".into()));
    }
    let mut segments = Vec::new();
    let mut prefix = T::zero();
    for i in 0..weights.len() - 1 {
        prefix = prefix + weights[i].clone();
        let from = T::one() - alphas[i].clone();
        let to = T::one() - alphas[i + 1].clone();
        if !prefix.is_zero() {
            segments.push(Segment {
                from,
                to,
                density: Polynomial::constant(-prefix.clone()),
            });
        }
    }
    Ok(SignedMeasure::new(Interval::unit(), vec![], segments)?)
}

/// Measure of a second-order antiderivative expression
/// `sum a_i Phi(t_i) / (y - x)^2` on `[0, 1]`: continuous piecewise-linear
/// density `sum a_i (t_i - s)_+`. Requires `sum a_i = 0` and
/// `sum a_i t_i = 0`.
pub fn deriv_expr_measure_order2<T: Scalar>(
    weights: &[T],
    nodes: &[T],
) -> Result<SignedMeasure<T>, FamilyError> {
    if weights.len() != nodes.len() || weights.len() < 3 {
        return Err(FamilyError::Domain(
            "need equally many weights and nodes (at least three)".into(),
        ));
    }
    let mut s0 = T::zero();
    let mut s1 = T::zero();
    for (w, t) in weights.iter().zip(nodes) {
        s0 = s0 + w.clone();
        s1 = s1 + w.clone() * t.clone();
    }
    if !s0.sign(&T::zero()).is_zero() || !s1.sign(&T::zero()).is_zero() {
        return Err(FamilyError::Constraint(
            "weights must annihilate constants and linear terms".into(),
        ));
    }
    // density g(s) = sum a_i (t_i - s)_+, breakpoints at the nodes
    let mut cuts: Vec<T> = nodes.to_vec();
    cuts.push(T::zero());
    cuts.push(T::one());
    cuts.sort_by(|a, b| a.cmp_total(b));
    cuts.dedup_by(|a, b| a.cmp_total(b) == std::cmp::Ordering::Equal);
    let mut segments = Vec::new();
    for w in cuts.windows(2) {
        let (lo, hi) = (&w[0], &w[1]);
        let mut density = Polynomial::zero();
        for (a, t) in weights.iter().zip(nodes) {
            if t.cmp_total(hi) != std::cmp::Ordering::Less {
                // (t - s) on this stretch
                let term = Polynomial::linear(t.clone(), -T::one()).scale(a);
                density = density.add(&term);
            }
        }
        if !density.is_zero() {
            segments.push(Segment {
                from: lo.clone(),
                to: hi.clone(),
                density,
            });
        }
    }
    Ok(SignedMeasure::new(Interval::unit(), vec![], segments)?)
}

/// Triangular density `4s` on `[0, 1/2]`, `4(1-s)` on `[1/2, 1]`: the law
/// of the mean of two independent uniforms, i.e. the double-integral
/// expression `1/(y-x)^2 int int f((s+t)/2) ds dt`.
pub fn triangular_mean_measure<T: Scalar>() -> SignedMeasure<T> {
    deriv_expr_measure_order2(
        &[T::from_int(4), T::from_int(-8), T::from_int(4)],
        &[T::zero(), T::from_ratio(1, 2), T::one()],
    )
    .expect("fixed coefficients satisfy the normalization")
}

/// `T_a` operator measure on `[0, 1]`: density `2at + (1 - a/2)` mirrored
/// around `1/2`; equals `(1 - a/2) * Uniform + (a/2) * Triangular`.
pub fn ta_measure<T: Scalar>(a: &T) -> SignedMeasure<T> {
    let u = SignedMeasure::uniform(Interval::unit(), T::one());
    let tri = triangular_mean_measure::<T>();
    let half_a = a.clone().half();
    SignedMeasure::combine(&(T::one() - half_a.clone()), &u, &half_a, &tri, &T::zero())
        .expect("same interval")
}

/// `S^2_alpha` operator measure on `[0, 1]`: linear density
/// `(6 alpha - 2) + (6 - 12 alpha) s`.
pub fn s2_alpha_measure<T: Scalar>(alpha: &T) -> SignedMeasure<T> {
    let six_alpha = T::from_int(6) * alpha.clone();
    let c0 = six_alpha.clone() - T::from_int(2);
    let c1 = T::from_int(6) - T::from_int(2) * six_alpha;
    SignedMeasure::new(
        Interval::unit(),
        vec![],
        vec![Segment {
            from: T::zero(),
            to: T::one(),
            density: Polynomial::linear(c0, c1),
        }],
    )
    .expect("unit interval segment")
}

/// Comparison target for the `T_a` family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TaTarget {
    /// `1/(y-x) int f`
    Mean,
    /// `f((x+y)/2)`
    Midpoint,
    /// `(f(x)+f(y))/2`
    Endpoints,
}

impl TaTarget {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "mean" => Some(TaTarget::Mean),
            "midpoint" => Some(TaTarget::Midpoint),
            "endpoints" => Some(TaTarget::Endpoints),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TaTarget::Mean => "mean",
            TaTarget::Midpoint => "midpoint",
            TaTarget::Endpoints => "endpoints",
        }
    }
}

/// Comparison target for the `S^2_alpha` family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum S2Target {
    /// `alpha f(x) + (1-alpha) f(y)`
    EndpointMix,
    /// `f(alpha x + (1-alpha) y)`
    Node,
}

impl S2Target {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "endpoint-mix" => Some(S2Target::EndpointMix),
            "node" => Some(S2Target::Node),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            S2Target::EndpointMix => "endpoint-mix",
            S2Target::Node => "node",
        }
    }
}

/// Every named parametrized inequality family.
#[derive(Debug, Clone)]
pub enum Family<T: Scalar> {
    /// Midpoint <= integral mean <= endpoint average (two claims).
    ClassicHH,
    /// Weighted version: point mass at `pa + qb` below the weight measure
    /// below `P0 (p delta_a + q delta_b)`; the three weight conditions are
    /// checked numerically on the supplied measure.
    Fejer { p: T, weight: SignedMeasure<T> },
    /// `delta_mean <= X <= ((b-m)delta_a + (m-a)delta_b)/(b-a)`.
    Fink { measure: SignedMeasure<T> },
    /// The seven-link refinement chain between the point mass at
    /// `A = (pa+qb)/(p+q)`, the uniform on `[A-y, A+y]` and the endpoint
    /// weights, with its interpolating measures.
    BrennerAlzer {
        p: T,
        q: T,
        a: T,
        b: T,
        y: T,
        alpha: T,
        beta: T,
        steps: u32,
    },
    /// The skewed three-link chain through the two-sided uniform of
    /// unequal spread.
    BrennerAlzerSkew { p: T, q: T, a: T, b: T, y: T, alpha: T },
    /// Mass-normalized Popoviciu pair for points `x <= y <= z`.
    Popoviciu { x: T, y: T, z: T },
    /// Two-node lower Hermite-Hadamard family; with `beta` absent this is
    /// the symmetric three-node subfamily (weights `a, 1-2a, a` at
    /// `alpha, 1/2, 1-alpha`) whose condition is `a <= 2 - 2 alpha`.
    SzostokLeft2 { a: T, alpha: T, beta: Option<T> },
    /// Three-node upper family `af(x) + bf(..) + cf(y) >= mean`.
    SzostokRight3 { a: T, b: T, c: T, alpha: T },
    /// General three-node lower family with cases (i)-(viii).
    SzostokLeft3 { a: [T; 3], alpha: [T; 3] },
    /// General four-node upper family with cases (i)-(viii);
    /// `alpha_1 = 1 > alpha_2 > alpha_3 > alpha_4 = 0`.
    SzostokRight4 { a: [T; 4], alpha2: T, alpha3: T },
    /// Two-node quadrature below a three-node quadrature.
    QuadVsQuad {
        a: T,
        alpha1: T,
        alpha2: T,
        b1: T,
        b2: T,
        b3: T,
        beta: T,
    },
    /// Four-node first-order antiderivative expression vs the uniform;
    /// direction decided by the sign of `a_1 + 1`.
    DerivExpr4 { a: [T; 4], alpha2: T, alpha3: T },
    /// Symmetric four-node expression `(a, -b, b, -a)` at
    /// `(0, alpha, 1-alpha, 1)` vs midpoint (`a > 0`) or endpoint average
    /// (`a < -1`), normalized to mass one.
    DerivExprSym { a: T, b: T, alpha: T },
    /// `T_a` vs one of the three targets, thresholds 0 / 2 / 6 / -6.
    TaOperator { a: T, target: TaTarget },
    /// `S^2_alpha` vs endpoint mix (always) or vs the node evaluation
    /// (iff `alpha` in `[1/3, 2/3]`).
    S2Alpha { alpha: T, target: S2Target },
    /// Three-point upper bound for the double-integral mean: weights
    /// `(a, 1-2a, a)`; holds iff `a >= 1/6`.
    F5ThreePoint { a: T },
}

fn in_open_unit<T: Scalar>(x: &T) -> bool {
    x.sign(&T::zero()) == Sign::Positive
        && (T::one() - x.clone()).sign(&T::zero()) == Sign::Positive
}

fn dirac<T: Scalar>(iv: &Interval<T>, at: T, w: T) -> Result<SignedMeasure<T>, FamilyError> {
    Ok(SignedMeasure::dirac(iv.clone(), at, w)?)
}

impl<T: Scalar> Family<T> {
    pub fn name(&self) -> &'static str {
        match self {
            Family::ClassicHH => "classic-hh",
            Family::Fejer { .. } => "fejer",
            Family::Fink { .. } => "fink",
            Family::BrennerAlzer { .. } => "brenner-alzer",
            Family::BrennerAlzerSkew { .. } => "brenner-alzer-skew",
            Family::Popoviciu { .. } => "popoviciu",
            Family::SzostokLeft2 { .. } => "szostok-left2",
            Family::SzostokRight3 { .. } => "szostok-right3",
            Family::SzostokLeft3 { .. } => "szostok-left3",
            Family::SzostokRight4 { .. } => "szostok-right4",
            Family::QuadVsQuad { .. } => "quad-vs-quad",
            Family::DerivExpr4 { .. } => "deriv-expr4",
            Family::DerivExprSym { .. } => "deriv-expr-sym",
            Family::TaOperator { .. } => "ta-operator",
            Family::S2Alpha { .. } => "s2-alpha",
            Family::F5ThreePoint { .. } => "f5-three-point",
        }
    }

    /// The ordering claims whose conjunction is the family's inequality.
    /// The first claim is the "primary" one the closed-form condition
    /// speaks about.
    pub fn claims(&self) -> Result<Vec<OrderingClaim<T>>, FamilyError> {
        let one = ConvexityDegree::new(1).unwrap();
        let unit = Interval::unit();
        match self {
            Family::ClassicHH => {
                let mid = dirac(&unit, T::from_ratio(1, 2), T::one())?;
                let uni = SignedMeasure::uniform(unit.clone(), T::one());
                let ends = SignedMeasure::new(
                    unit,
                    vec![
                        (T::zero(), T::from_ratio(1, 2)),
                        (T::one(), T::from_ratio(1, 2)),
                    ],
                    vec![],
                )?;
                Ok(vec![
                    OrderingClaim {
                        label: "midpoint<=mean".into(),
                        lhs: mid,
                        rhs: uni.clone(),
                        degree: one,
                    },
                    OrderingClaim {
                        label: "mean<=endpoints".into(),
                        lhs: uni,
                        rhs: ends,
                        degree: one,
                    },
                ])
            }
            Family::Fejer { p, weight } => {
                if !in_open_unit(p) {
                    return Err(FamilyError::Domain("need 0 < p < 1".into()));
                }
                let iv = weight.interval().clone();
                let q = T::one() - p.clone();
                let node = p.clone() * iv.lo().clone() + q.clone() * iv.hi().clone();
                let p0 = weight.total_mass();
                let lower = dirac(&iv, node, p0.clone())?;
                let upper = SignedMeasure::new(
                    iv,
                    vec![
                        (weight.interval().lo().clone(), p.clone() * p0.clone()),
                        (weight.interval().hi().clone(), q * p0),
                    ],
                    vec![],
                )?;
                Ok(vec![
                    OrderingClaim {
                        label: "node<=weight".into(),
                        lhs: lower,
                        rhs: weight.clone(),
                        degree: one,
                    },
                    OrderingClaim {
                        label: "weight<=endpoints".into(),
                        lhs: weight.clone(),
                        rhs: upper,
                        degree: one,
                    },
                ])
            }
            Family::Fink { measure } => {
                let iv = measure.interval().clone();
                let mass = measure.total_mass();
                if !(mass.clone() - T::one()).is_zero() {
                    return Err(FamilyError::Domain("measure must have mass one".into()));
                }
                let m = measure.moment(1);
                let len = iv.length();
                let wa = (iv.hi().clone() - m.clone()) / len.clone();
                let wb = (m.clone() - iv.lo().clone()) / len;
                let lower = dirac(&iv, m, T::one())?;
                let upper = SignedMeasure::new(
                    iv.clone(),
                    vec![(iv.lo().clone(), wa), (iv.hi().clone(), wb)],
                    vec![],
                )?;
                Ok(vec![
                    OrderingClaim {
                        label: "mean-mass<=measure".into(),
                        lhs: lower,
                        rhs: measure.clone(),
                        degree: one,
                    },
                    OrderingClaim {
                        label: "measure<=endpoint-split".into(),
                        lhs: measure.clone(),
                        rhs: upper,
                        degree: one,
                    },
                ])
            }
            Family::BrennerAlzer {
                p,
                q,
                a,
                b,
                y,
                alpha,
                beta,
                steps,
            } => brenner_alzer_claims(p, q, a, b, y, alpha, beta, *steps),
            Family::BrennerAlzerSkew { p, q, a, b, y, alpha } => {
                brenner_alzer_skew_claims(p, q, a, b, y, alpha)
            }
            Family::Popoviciu { x, y, z } => {
                if x.cmp_total(y) == std::cmp::Ordering::Greater
                    || y.cmp_total(z) == std::cmp::Ordering::Greater
                    || x.cmp_total(z) != std::cmp::Ordering::Less
                {
                    return Err(FamilyError::Domain("need x <= y <= z, x < z".into()));
                }
                let iv = Interval::new(x.clone(), z.clone())?;
                let third = T::from_ratio(1, 3);
                let sixth = T::from_ratio(1, 6);
                let lhs = SignedMeasure::new(
                    iv.clone(),
                    vec![
                        ((x.clone() + y.clone()).half(), third.clone()),
                        ((y.clone() + z.clone()).half(), third.clone()),
                        ((z.clone() + x.clone()).half(), third),
                    ],
                    vec![],
                )?;
                let mean3 = (x.clone() + y.clone() + z.clone()) / T::from_int(3);
                let rhs = SignedMeasure::new(
                    iv,
                    vec![
                        (x.clone(), sixth.clone()),
                        (y.clone(), sixth.clone()),
                        (z.clone(), sixth),
                        (mean3, T::from_ratio(1, 2)),
                    ],
                    vec![],
                )?;
                Ok(vec![OrderingClaim {
                    label: "midpoints<=vertices".into(),
                    lhs,
                    rhs,
                    degree: one,
                }])
            }
            Family::SzostokLeft2 { a, alpha, beta } => {
                let uni = SignedMeasure::uniform(unit.clone(), T::one());
                let lhs = match beta {
                    Some(beta) => {
                        if alpha.cmp_total(beta) != std::cmp::Ordering::Greater {
                            return Err(FamilyError::Domain("need alpha > beta".into()));
                        }
                        SignedMeasure::new(
                            unit,
                            vec![
                                (T::one() - alpha.clone(), a.clone()),
                                (T::one() - beta.clone(), T::one() - a.clone()),
                            ],
                            vec![],
                        )?
                    }
                    None => {
                        // symmetric subfamily: a, 1-2a, a at alpha, 1/2, 1-alpha
                        if !in_open_unit(a) || !in_open_unit(alpha) {
                            return Err(FamilyError::Domain("need a, alpha in (0,1)".into()));
                        }
                        let b_w = T::one() - a.clone() - a.clone();
                        SignedMeasure::new(
                            unit,
                            vec![
                                (T::one() - alpha.clone(), a.clone()),
                                (T::from_ratio(1, 2), b_w),
                                (alpha.clone(), a.clone()),
                            ],
                            vec![],
                        )?
                    }
                };
                Ok(vec![OrderingClaim {
                    label: "nodes<=mean".into(),
                    lhs,
                    rhs: uni,
                    degree: one,
                }])
            }
            Family::SzostokRight3 { a, b, c, alpha } => {
                let sum = a.clone() + b.clone() + c.clone() - T::one();
                if !sum.is_zero() {
                    return Err(FamilyError::Domain("need a + b + c = 1".into()));
                }
                let uni = SignedMeasure::uniform(unit.clone(), T::one());
                let rhs = SignedMeasure::new(
                    unit,
                    vec![
                        (T::zero(), a.clone()),
                        (T::one() - alpha.clone(), b.clone()),
                        (T::one(), c.clone()),
                    ],
                    vec![],
                )?;
                Ok(vec![OrderingClaim {
                    label: "mean<=nodes".into(),
                    lhs: uni,
                    rhs,
                    degree: one,
                }])
            }
            Family::SzostokLeft3 { a, alpha } => {
                if !(alpha[0].cmp_total(&alpha[1]) == std::cmp::Ordering::Greater
                    && alpha[1].cmp_total(&alpha[2]) == std::cmp::Ordering::Greater)
                {
                    return Err(FamilyError::Domain(
                        "need alpha1 > alpha2 > alpha3".into(),
                    ));
                }
                let sum = a[0].clone() + a[1].clone() + a[2].clone() - T::one();
                if !sum.is_zero() {
                    return Err(FamilyError::Domain("need a1 + a2 + a3 = 1".into()));
                }
                let uni = SignedMeasure::uniform(unit.clone(), T::one());
                let lhs = SignedMeasure::new(
                    unit,
                    vec![
                        (T::one() - alpha[0].clone(), a[0].clone()),
                        (T::one() - alpha[1].clone(), a[1].clone()),
                        (T::one() - alpha[2].clone(), a[2].clone()),
                    ],
                    vec![],
                )?;
                Ok(vec![OrderingClaim {
                    label: "nodes<=mean".into(),
                    lhs,
                    rhs: uni,
                    degree: one,
                }])
            }
            Family::SzostokRight4 { a, alpha2, alpha3 } => {
                let sum =
                    a[0].clone() + a[1].clone() + a[2].clone() + a[3].clone() - T::one();
                if !sum.is_zero() {
                    return Err(FamilyError::Domain("need weights summing to one".into()));
                }
                if !(T::one().cmp_total(alpha2) == std::cmp::Ordering::Greater
                    && alpha2.cmp_total(alpha3) == std::cmp::Ordering::Greater
                    && alpha3.sign(&T::zero()) == Sign::Positive)
                {
                    return Err(FamilyError::Domain(
                        "need 1 > alpha2 > alpha3 > 0".into(),
                    ));
                }
                let uni = SignedMeasure::uniform(unit.clone(), T::one());
                let rhs = SignedMeasure::new(
                    unit,
                    vec![
                        (T::zero(), a[0].clone()),
                        (T::one() - alpha2.clone(), a[1].clone()),
                        (T::one() - alpha3.clone(), a[2].clone()),
                        (T::one(), a[3].clone()),
                    ],
                    vec![],
                )?;
                Ok(vec![OrderingClaim {
                    label: "mean<=nodes".into(),
                    lhs: uni,
                    rhs,
                    degree: one,
                }])
            }
            Family::QuadVsQuad {
                a,
                alpha1,
                alpha2,
                b1,
                b2,
                b3,
                beta,
            } => {
                for v in [a, alpha1, alpha2, b1, b2, b3, beta] {
                    if !in_open_unit(v) {
                        return Err(FamilyError::Domain("parameters must lie in (0,1)".into()));
                    }
                }
                if alpha1.cmp_total(alpha2) != std::cmp::Ordering::Greater {
                    return Err(FamilyError::Domain("need alpha1 > alpha2".into()));
                }
                let sum = b1.clone() + b2.clone() + b3.clone() - T::one();
                if !sum.is_zero() {
                    return Err(FamilyError::Domain("need b1 + b2 + b3 = 1".into()));
                }
                let lhs = SignedMeasure::new(
                    unit.clone(),
                    vec![
                        (T::one() - alpha1.clone(), a.clone()),
                        (T::one() - alpha2.clone(), T::one() - a.clone()),
                    ],
                    vec![],
                )?;
                let rhs = SignedMeasure::new(
                    unit,
                    vec![
                        (T::zero(), b1.clone()),
                        (T::one() - beta.clone(), b2.clone()),
                        (T::one(), b3.clone()),
                    ],
                    vec![],
                )?;
                Ok(vec![OrderingClaim {
                    label: "two-node<=three-node".into(),
                    lhs,
                    rhs,
                    degree: one,
                }])
            }
            Family::DerivExpr4 { a, alpha2, alpha3 } => {
                let alphas = [T::one(), alpha2.clone(), alpha3.clone(), T::zero()];
                let mu = deriv_expr_measure_order1(a, &alphas)?;
                check_four_node_normalization(&mu)?;
                let uni = SignedMeasure::uniform(unit, T::one());
                Ok(vec![OrderingClaim {
                    label: "expression-vs-mean".into(),
                    lhs: mu,
                    rhs: uni,
                    degree: one,
                }])
            }
            Family::DerivExprSym { a, b, alpha } => {
                let half = T::from_ratio(1, 2);
                if !(alpha.sign(&T::zero()) == Sign::Positive
                    && alpha.cmp_total(&half) == std::cmp::Ordering::Less)
                {
                    return Err(FamilyError::Domain("need alpha in (0, 1/2)".into()));
                }
                let weights = [a.clone(), -b.clone(), b.clone(), -a.clone()];
                let alphas = [
                    T::one(),
                    T::one() - alpha.clone(),
                    alpha.clone(),
                    T::zero(),
                ];
                let mu = deriv_expr_measure_order1(&weights, &alphas)?;
                let mass = mu.total_mass() - T::one();
                if !mass.is_zero() {
                    return Err(FamilyError::Constraint(
                        "need b(1 - 2 alpha) - a = 1 (mass normalization)".into(),
                    ));
                }
                let rhs = match a.sign(&T::zero()) {
                    Sign::Positive => dirac(&unit, half, T::one())?,
                    Sign::Negative => SignedMeasure::new(
                        unit,
                        vec![
                            (T::zero(), T::from_ratio(1, 2)),
                            (T::one(), T::from_ratio(1, 2)),
                        ],
                        vec![],
                    )?,
                    _ => return Err(FamilyError::Domain("need a > 0 or a < -1".into())),
                };
                Ok(vec![OrderingClaim {
                    label: "expression-vs-target".into(),
                    lhs: mu,
                    rhs,
                    degree: one,
                }])
            }
            Family::TaOperator { a, target } => {
                let ta = ta_measure(a);
                let (label, lhs, rhs) = match target {
                    TaTarget::Mean => (
                        "ta<=mean",
                        ta,
                        SignedMeasure::uniform(unit, T::one()),
                    ),
                    TaTarget::Midpoint => (
                        "midpoint<=ta",
                        dirac(&unit, T::from_ratio(1, 2), T::one())?,
                        ta,
                    ),
                    TaTarget::Endpoints => (
                        "ta<=endpoints",
                        ta,
                        SignedMeasure::new(
                            unit,
                            vec![
                                (T::zero(), T::from_ratio(1, 2)),
                                (T::one(), T::from_ratio(1, 2)),
                            ],
                            vec![],
                        )?,
                    ),
                };
                Ok(vec![OrderingClaim {
                    label: label.into(),
                    lhs,
                    rhs,
                    degree: one,
                }])
            }
            Family::S2Alpha { alpha, target } => {
                if alpha.sign(&T::zero()) == Sign::Negative
                    || (T::one() - alpha.clone()).sign(&T::zero()) == Sign::Negative
                {
                    return Err(FamilyError::Domain("need alpha in [0, 1]".into()));
                }
                let s2 = s2_alpha_measure(alpha);
                let claim = match target {
                    S2Target::EndpointMix => OrderingClaim {
                        label: "s2<=endpoint-mix".into(),
                        lhs: s2,
                        rhs: SignedMeasure::new(
                            unit,
                            vec![
                                (T::zero(), alpha.clone()),
                                (T::one(), T::one() - alpha.clone()),
                            ],
                            vec![],
                        )?,
                        degree: one,
                    },
                    S2Target::Node => OrderingClaim {
                        label: "node<=s2".into(),
                        lhs: dirac(&unit, T::one() - alpha.clone(), T::one())?,
                        rhs: s2,
                        degree: one,
                    },
                };
                Ok(vec![claim])
            }
            Family::F5ThreePoint { a } => {
                let upper = T::from_ratio(1, 2);
                if a.sign(&T::zero()) != Sign::Positive
                    || a.cmp_total(&upper) == std::cmp::Ordering::Greater
                {
                    return Err(FamilyError::Domain("need 0 < a <= 1/2".into()));
                }
                let tri = triangular_mean_measure::<T>();
                let rhs = SignedMeasure::new(
                    unit,
                    vec![
                        (T::zero(), a.clone()),
                        (T::from_ratio(1, 2), T::one() - a.clone() - a.clone()),
                        (T::one(), a.clone()),
                    ],
                    vec![],
                )?;
                Ok(vec![OrderingClaim {
                    label: "double-mean<=three-point".into(),
                    lhs: tri,
                    rhs,
                    degree: one,
                }])
            }
        }
    }

    /// Closed-form condition evaluation; pure arithmetic, no engine calls.
    pub fn eval_conditions(&self) -> Result<ConditionEval, FamilyError> {
        match self {
            Family::ClassicHH => Ok(ConditionEval::satisfied("always")),
            Family::Fejer { p, weight } => {
                if !in_open_unit(p) {
                    return Err(FamilyError::Domain("need 0 < p < 1".into()));
                }
                Ok(fejer_conditions(p, weight))
            }
            Family::Fink { .. } => Ok(ConditionEval::satisfied("always")),
            Family::BrennerAlzer {
                p, q, a, b, y, alpha, beta, ..
            } => {
                brenner_alzer_domain(p, q, a, b, y)?;
                for v in [alpha, beta] {
                    if v.sign(&T::zero()) == Sign::Negative
                        || (T::one() - v.clone()).sign(&T::zero()) == Sign::Negative
                    {
                        return Err(FamilyError::Domain("need alpha, beta in [0, 1]".into()));
                    }
                }
                Ok(ConditionEval::satisfied("y<=min(p,q)(b-a)/(p+q)"))
            }
            Family::BrennerAlzerSkew { p, q, a, b, y, alpha } => {
                brenner_alzer_domain(p, q, a, b, y)?;
                if !in_open_unit(alpha) {
                    return Err(FamilyError::Domain("need alpha in (0, 1)".into()));
                }
                let spread = alpha.clone() / (T::one() - alpha.clone()) * y.clone();
                let bound = (b.clone() - a.clone()) * T::min_of(p.clone(), q.clone())
                    / (p.clone() + q.clone());
                if spread.cmp_total(&bound) == std::cmp::Ordering::Greater {
                    return Err(FamilyError::Domain(
                        "need alpha y / (1 - alpha) within the admissible spread".into(),
                    ));
                }
                Ok(ConditionEval::satisfied("admissible"))
            }
            Family::Popoviciu { .. } => Ok(ConditionEval::satisfied("always")),
            Family::SzostokLeft2 { a, alpha, beta } => match beta {
                Some(beta) => Ok(szostok_left2_conditions(a, alpha, beta)),
                None => {
                    // symmetric subfamily: holds iff a <= 2 - 2 alpha
                    let lim = T::from_int(2) - T::from_int(2) * alpha.clone();
                    if a.cmp_total(&lim) != std::cmp::Ordering::Greater {
                        Ok(ConditionEval::satisfied("a<=2-2alpha"))
                    } else {
                        Ok(ConditionEval::violated())
                    }
                }
            },
            Family::SzostokRight3 { a, b, c, alpha } => {
                Ok(szostok_right3_conditions(a, b, c, alpha))
            }
            Family::SzostokLeft3 { a, alpha } => Ok(szostok_left3_conditions(a, alpha)),
            Family::SzostokRight4 { a, alpha2, alpha3 } => {
                Ok(szostok_right4_conditions(a, alpha2, alpha3))
            }
            Family::QuadVsQuad {
                a,
                alpha1,
                alpha2,
                b1,
                b2,
                b3,
                beta,
            } => Ok(quad_vs_quad_conditions(a, alpha1, alpha2, b1, b2, b3, beta)),
            Family::DerivExpr4 { a, .. } => {
                // direction by the first weight: a1 > -1 puts the
                // expression below the mean, a1 < -1 above it
                let a1p1 = a[0].clone() + T::one();
                match a1p1.sign(&T::zero()) {
                    Sign::Positive => Ok(ConditionEval::satisfied("a1>-1")),
                    Sign::Negative => Ok(ConditionEval::satisfied_as(
                        "a1<-1",
                        VerdictStatus::HoldsReversed,
                    )),
                    _ => Err(FamilyError::Domain("a1 = -1 is on the boundary".into())),
                }
            }
            Family::DerivExprSym { a, b, alpha } => {
                // derived under the mass-one normalization b(1-2alpha)-a=1
                match a.sign(&T::zero()) {
                    Sign::Positive => {
                        // below the midpoint mass iff 4 a b alpha^2 >= 1
                        let lhs = T::from_int(4)
                            * a.clone()
                            * b.clone()
                            * alpha.clone()
                            * alpha.clone();
                        if lhs.cmp_total(&T::one()) != std::cmp::Ordering::Less {
                            Ok(ConditionEval::satisfied("4ab.alpha^2>=1"))
                        } else {
                            Ok(ConditionEval::violated())
                        }
                    }
                    Sign::Negative => {
                        // below the endpoint average iff a >= -(2alpha+1)/(2alpha)
                        let lim = -(T::from_int(2) * alpha.clone() + T::one())
                            / (T::from_int(2) * alpha.clone());
                        if a.cmp_total(&lim) != std::cmp::Ordering::Less {
                            Ok(ConditionEval::satisfied("a>=-(2alpha+1)/(2alpha)"))
                        } else {
                            Ok(ConditionEval::violated())
                        }
                    }
                    _ => Err(FamilyError::Domain("need a > 0 or a < -1".into())),
                }
            }
            Family::TaOperator { a, target } => Ok(ta_conditions(a, *target)),
            Family::S2Alpha { alpha, target } => match target {
                S2Target::EndpointMix => Ok(ConditionEval::satisfied("always")),
                S2Target::Node => {
                    let third = T::from_ratio(1, 3);
                    let two_thirds = T::from_ratio(2, 3);
                    if alpha.cmp_total(&third) != std::cmp::Ordering::Less
                        && alpha.cmp_total(&two_thirds) != std::cmp::Ordering::Greater
                    {
                        Ok(ConditionEval::satisfied("alpha in [1/3, 2/3]"))
                    } else {
                        Ok(ConditionEval::violated())
                    }
                }
            },
            Family::F5ThreePoint { a } => {
                let sixth = T::from_ratio(1, 6);
                if a.cmp_total(&sixth) != std::cmp::Ordering::Less {
                    Ok(ConditionEval::satisfied("a>=1/6"))
                } else {
                    Ok(ConditionEval::violated())
                }
            }
        }
    }
}

fn check_four_node_normalization<T: Scalar>(mu: &SignedMeasure<T>) -> Result<(), FamilyError> {
    let mass = mu.total_mass() - T::one();
    if !mass.is_zero() {
        return Err(FamilyError::Constraint(
            "expression must have unit mass (first normalization)".into(),
        ));
    }
    let mean = mu.moment(1) - T::from_ratio(1, 2);
    if !mean.is_zero() {
        return Err(FamilyError::Constraint(
            "expression must have mean 1/2 (second normalization)".into(),
        ));
    }
    Ok(())
}

fn fejer_conditions<T: Scalar>(p: &T, weight: &SignedMeasure<T>) -> ConditionEval {
    // (i) mu([a, pa+qb]) <= p P0, (ii) mu((pa+qb, b]) <= q P0,
    // (iii) int x dmu = (pa + qb) P0
    let iv = weight.interval();
    let q = T::one() - p.clone();
    let node = p.clone() * iv.lo().clone() + q.clone() * iv.hi().clone();
    let p0 = weight.total_mass();
    let f = weight.cdf();
    let left_mass = f.eval(&node);
    let right_mass = p0.clone() - left_mass.clone();
    let zero = T::zero();
    let cond_i = (p.clone() * p0.clone() - left_mass).sign(&zero) != Sign::Negative;
    let cond_ii = (q * p0.clone() - right_mass).sign(&zero) != Sign::Negative;
    let cond_iii = (weight.moment(1) - node * p0).is_zero();
    if cond_i && cond_ii && cond_iii {
        ConditionEval::satisfied("(i)-(iii)")
    } else {
        ConditionEval::violated()
    }
}

fn ge<T: Scalar>(x: &T, y: &T) -> bool {
    x.cmp_total(y) != std::cmp::Ordering::Less
}

fn le<T: Scalar>(x: &T, y: &T) -> bool {
    x.cmp_total(y) != std::cmp::Ordering::Greater
}

fn lt<T: Scalar>(x: &T, y: &T) -> bool {
    x.cmp_total(y) == std::cmp::Ordering::Less
}

fn gt<T: Scalar>(x: &T, y: &T) -> bool {
    x.cmp_total(y) == std::cmp::Ordering::Greater
}

fn szostok_left2_conditions<T: Scalar>(a: &T, alpha: &T, beta: &T) -> ConditionEval {
    // mean condition a alpha + (1-a) beta = 1/2and cases
    // (i) a + alpha <= 1, (ii) a + beta >= 1,
    // (iii) a + alpha > 1, a + beta < 1, a + 2 alpha <= 2
    let mean = a.clone() * alpha.clone() + (T::one() - a.clone()) * beta.clone()
        - T::from_ratio(1, 2);
    if !mean.is_zero() {
        return ConditionEval::Violated {
            expected: VerdictStatus::Inapplicable,
        };
    }
    let one = T::one();
    let two = T::from_int(2);
    let s1 = a.clone() + alpha.clone();
    let s2 = a.clone() + beta.clone();
    if le(&s1, &one) {
        ConditionEval::satisfied("(i)")
    } else if ge(&s2, &one) {
        ConditionEval::satisfied("(ii)")
    } else if le(&(a.clone() + two.clone() * alpha.clone()), &two) {
        ConditionEval::satisfied("(iii)")
    } else {
        ConditionEval::violated()
    }
}

fn szostok_right3_conditions<T: Scalar>(a: &T, b: &T, c: &T, alpha: &T) -> ConditionEval {
    // mean condition b(1-alpha) + c = 1/2 and cases
    // (i) a + alpha >= 1, (ii) a + b + alpha <= 1,
    // (iii) a + alpha < 1, a + b + alpha > 1, 2a + alpha >= 1
    let mean = b.clone() * (T::one() - alpha.clone()) + c.clone() - T::from_ratio(1, 2);
    if !mean.is_zero() {
        return ConditionEval::Violated {
            expected: VerdictStatus::Inapplicable,
        };
    }
    let one = T::one();
    let s1 = a.clone() + alpha.clone();
    let s2 = a.clone() + b.clone() + alpha.clone();
    let s3 = T::from_int(2) * a.clone() + alpha.clone();
    if ge(&s1, &one) {
        ConditionEval::satisfied("(i)")
    } else if le(&s2, &one) {
        ConditionEval::satisfied("(ii)")
    } else if ge(&s3, &one) {
        ConditionEval::satisfied("(iii)")
    } else {
        ConditionEval::violated()
    }
}

fn szostok_left3_conditions<T: Scalar>(a: &[T; 3], alpha: &[T; 3]) -> ConditionEval {
    // mean condition sum a_i (1 - alpha_i) = 1/2 and cases (i)-(viii)
    let mut mean = -T::from_ratio(1, 2);
    for i in 0..3 {
        mean = mean + a[i].clone() * (T::one() - alpha[i].clone());
    }
    if !mean.is_zero() {
        return ConditionEval::Violated {
            expected: VerdictStatus::Inapplicable,
        };
    }
    let one = T::one();
    let a1 = &a[0];
    let a12 = a[0].clone() + a[1].clone();
    let c1 = one.clone() - alpha[0].clone();
    let c2 = one.clone() - alpha[1].clone();
    let c3 = one.clone() - alpha[2].clone();
    let half_a1 = a1.clone().half();
    let quad = T::from_int(2) * a[0].clone() * c1.clone()
        + T::from_int(2) * a[1].clone() * c2.clone()
        - a12.clone() * a12.clone();
    let third_cond = ge(&(T::from_int(2) * alpha[2].clone()), &a[2]);
    if le(a1, &c1) && ge(&a12, &c3) {
        ConditionEval::satisfied("(i)")
    } else if ge(a1, &c2) && ge(&a12, &c3) {
        ConditionEval::satisfied("(ii)")
    } else if le(a1, &c1) && le(&a12, &c2) {
        ConditionEval::satisfied("(iii)")
    } else if le(a1, &c1) && gt(&a12, &c2) && lt(&a12, &c3) && third_cond {
        ConditionEval::satisfied("(iv)")
    } else if ge(a1, &c2) && lt(&a12, &c3) && third_cond {
        ConditionEval::satisfied("(v)")
    } else if gt(a1, &c1) && le(&a12, &c2) && ge(&c1, &half_a1) {
        ConditionEval::satisfied("(vi)")
    } else if gt(a1, &c1) && lt(a1, &c2) && ge(&a12, &c3) && ge(&c1, &half_a1) {
        ConditionEval::satisfied("(vii)")
    } else if gt(a1, &c1)
        && lt(a1, &c2)
        && gt(&a12, &c2)
        && lt(&a12, &c3)
        && ge(&c1, &half_a1)
        && ge(&quad, &T::zero())
    {
        ConditionEval::satisfied("(viii)")
    } else {
        ConditionEval::violated()
    }
}

fn szostok_right4_conditions<T: Scalar>(a: &[T; 4], alpha2: &T, alpha3: &T) -> ConditionEval {
    // mean condition sum a_i (1 - alpha_i) = 1/2 (alpha1 = 1, alpha4 = 0)
    let mean = a[1].clone() * (T::one() - alpha2.clone())
        + a[2].clone() * (T::one() - alpha3.clone())
        + a[3].clone()
        - T::from_ratio(1, 2);
    if !mean.is_zero() {
        return ConditionEval::Violated {
            expected: VerdictStatus::Inapplicable,
        };
    }
    let c2 = T::one() - alpha2.clone();
    let c3 = T::one() - alpha3.clone();
    let a1 = &a[0];
    let a12 = a[0].clone() + a[1].clone();
    let a123 = a12.clone() + a[2].clone();
    let last1 = T::from_int(2) * a[0].clone() + alpha2.clone();
    let quad = T::from_int(2) * a[0].clone() * c3.clone()
        + T::from_int(2) * a[1].clone() * (alpha2.clone() - alpha3.clone())
        - c3.clone() * c3.clone();
    let area_cond = le(alpha3, &(T::from_int(2) * a[3].clone()));
    if ge(a1, &c2) && ge(&a12, &c3) {
        ConditionEval::satisfied("(i)")
    } else if le(&a12, &c2) && le(&a123, &c3) {
        ConditionEval::satisfied("(ii)")
    } else if le(&c2, a1) && ge(&c3, &a123) {
        ConditionEval::satisfied("(iii)")
    } else if le(&c2, a1) && gt(&c3, &a12) && lt(&c3, &a123) && area_cond {
        ConditionEval::satisfied("(iv)")
    } else if ge(&c2, &a12) && gt(&a123, &c3) && area_cond {
        ConditionEval::satisfied("(v)")
    } else if lt(a1, &c2) && ge(&a12, &c3) && ge(&last1, &T::one()) {
        ConditionEval::satisfied("(vi)")
    } else if lt(a1, &c2) && gt(&a12, &c2) && le(&a123, &c3) && ge(&last1, &T::one()) {
        ConditionEval::satisfied("(vii)")
    } else if gt(&c2, a1)
        && lt(&c2, &a12)
        && gt(&c3, &a12)
        && lt(&c3, &a123)
        && ge(&last1, &T::one())
        && ge(&quad, &T::zero())
    {
        ConditionEval::satisfied("(viii)")
    } else {
        ConditionEval::violated()
    }
}

fn quad_vs_quad_conditions<T: Scalar>(
    a: &T,
    alpha1: &T,
    alpha2: &T,
    b1: &T,
    b2: &T,
    b3: &T,
    beta: &T,
) -> ConditionEval {
    // mean condition b2(1-beta) + b3 = a(1-alpha1) + (1-a)(1-alpha2)
    let lhs = b2.clone() * (T::one() - beta.clone()) + b3.clone();
    let rhs = a.clone() * (T::one() - alpha1.clone())
        + (T::one() - a.clone()) * (T::one() - alpha2.clone());
    if !(lhs - rhs).is_zero() {
        return ConditionEval::Violated {
            expected: VerdictStatus::Inapplicable,
        };
    }
    let b12 = b1.clone() + b2.clone();
    if le(a, b1) {
        ConditionEval::satisfied("(i)")
    } else if ge(a, &b12) {
        ConditionEval::satisfied("(ii)")
    } else if ge(alpha2, beta) {
        ConditionEval::satisfied("(iii)")
    } else {
        let lhs = (T::one() - alpha1.clone()) * b1.clone();
        let rhs = (alpha1.clone() - beta.clone()) * (a.clone() - b1.clone());
        if ge(&lhs, &rhs) {
            ConditionEval::satisfied("(iv)")
        } else {
            ConditionEval::violated()
        }
    }
}

fn ta_conditions<T: Scalar>(a: &T, target: TaTarget) -> ConditionEval {
    let zero = T::zero();
    match target {
        TaTarget::Mean => match a.sign(&zero) {
            Sign::Negative => {
                ConditionEval::satisfied_as("a<=0", VerdictStatus::HoldsReversed)
            }
            Sign::Zero => ConditionEval::satisfied("a=0"),
            _ => ConditionEval::satisfied("a>=0"),
        },
        TaTarget::Midpoint => {
            // midpoint <= T_a iff a <= 2; T_a <= midpoint iff a >= 6
            if le(a, &T::from_int(2)) {
                ConditionEval::satisfied("a<=2")
            } else if ge(a, &T::from_int(6)) {
                ConditionEval::satisfied_as("a>=6", VerdictStatus::HoldsReversed)
            } else {
                ConditionEval::violated()
            }
        }
        TaTarget::Endpoints => {
            if ge(a, &T::from_int(-6)) {
                ConditionEval::satisfied("a>=-6")
            } else {
                ConditionEval::violated()
            }
        }
    }
}

fn brenner_alzer_domain<T: Scalar>(
    p: &T,
    q: &T,
    a: &T,
    b: &T,
    y: &T,
) -> Result<(T, T), FamilyError> {
    if p.sign(&T::zero()) != Sign::Positive || q.sign(&T::zero()) != Sign::Positive {
        return Err(FamilyError::Domain("need p, q > 0".into()));
    }
    if a.cmp_total(b) != std::cmp::Ordering::Less {
        return Err(FamilyError::Domain("need a < b".into()));
    }
    if y.sign(&T::zero()) != Sign::Positive {
        return Err(FamilyError::Domain("need y > 0".into()));
    }
    let bound =
        (b.clone() - a.clone()) * T::min_of(p.clone(), q.clone()) / (p.clone() + q.clone());
    if y.cmp_total(&bound) == std::cmp::Ordering::Greater {
        return Err(FamilyError::Domain(
            "y > (b-a) min(p,q)/(p+q): the uniform window leaves [a, b]".into(),
        ));
    }
    let center = (p.clone() * a.clone() + q.clone() * b.clone()) / (p.clone() + q.clone());
    Ok((center, bound))
}

#[allow(clippy::too_many_arguments)]
fn brenner_alzer_claims<T: Scalar>(
    p: &T,
    q: &T,
    a: &T,
    b: &T,
    y: &T,
    alpha: &T,
    beta: &T,
    steps: u32,
) -> Result<Vec<OrderingClaim<T>>, FamilyError> {
    let (center, _) = brenner_alzer_domain(p, q, a, b, y)?;
    for v in [alpha, beta] {
        if v.sign(&T::zero()) == Sign::Negative
            || (T::one() - v.clone()).sign(&T::zero()) == Sign::Negative
        {
            return Err(FamilyError::Domain("need alpha, beta in [0, 1]".into()));
        }
    }
    if steps == 0 {
        return Err(FamilyError::Domain("need at least one step".into()));
    }
    let iv = Interval::new(a.clone(), b.clone())?;
    let one = ConvexityDegree::new(1).unwrap();
    let pq = p.clone() + q.clone();
    let x_mass = SignedMeasure::dirac(iv.clone(), center.clone(), T::one())?;
    let y_meas = uniform_window(&iv, &center, y)?;
    let w_meas = SignedMeasure::new(
        iv.clone(),
        vec![
            (center.clone() - y.clone(), T::from_ratio(1, 2)),
            (center.clone() + y.clone(), T::from_ratio(1, 2)),
        ],
        vec![],
    )?;
    let z_meas = SignedMeasure::new(
        iv.clone(),
        vec![
            (a.clone(), p.clone() / pq.clone()),
            (b.clone(), q.clone() / pq.clone()),
        ],
        vec![],
    )?;
    let xi = |n: u32| -> Result<SignedMeasure<T>, FamilyError> {
        // alpha/(2n) sum_k {delta_(A-y+k alpha y/n) + delta_(A+y-k alpha y/n)}
        // + uniform window of half-width (1-alpha) y
        let mut atoms = Vec::new();
        let n_t = T::from_int(n as i64);
        let w = alpha.clone() / (T::from_int(2) * n_t.clone());
        for k in 1..=n {
            let off = y.clone() - T::from_int(k as i64) * alpha.clone() * y.clone() / n_t.clone();
            atoms.push((center.clone() - off.clone(), w.clone()));
            atoms.push((center.clone() + off, w.clone()));
        }
        let window_halfwidth = (T::one() - alpha.clone()) * y.clone();
        let mut base = SignedMeasure::new(iv.clone(), atoms, vec![])?;
        if window_halfwidth.sign(&T::zero()) == Sign::Positive {
            let win = Segment {
                from: center.clone() - window_halfwidth.clone(),
                to: center.clone() + window_halfwidth.clone(),
                density: Polynomial::constant(
                    T::one() / (T::from_int(2) * y.clone()),
                ),
            };
            base = SignedMeasure::combine(
                &T::one(),
                &base,
                &T::one(),
                &SignedMeasure::new(iv.clone(), vec![], vec![win])?,
                &T::zero(),
            )?;
        }
        Ok(base)
    };
    let eta = {
        let atoms = vec![
            (center.clone() - y.clone(), beta.clone().half()),
            (center.clone() + y.clone(), beta.clone().half()),
        ];
        let density = Polynomial::constant(
            (T::one() - beta.clone()) / (T::from_int(2) * y.clone()),
        );
        SignedMeasure::new(
            iv.clone(),
            atoms,
            vec![Segment {
                from: center.clone() - y.clone(),
                to: center.clone() + y.clone(),
                density,
            }],
        )?
    };
    let lambda = {
        // c = min(b - (A+y), (A-y) - a), gamma = |1/2 - p/(p+q)|
        let c = T::min_of(
            b.clone() - (center.clone() + y.clone()),
            (center.clone() - y.clone()) - a.clone(),
        );
        let gamma = (T::from_ratio(1, 2) - p.clone() / pq.clone()).abs();
        let outer = T::from_ratio(1, 2) - gamma.clone();
        SignedMeasure::new(
            iv.clone(),
            vec![
                (center.clone() - y.clone() - c.clone(), outer.clone()),
                (center.clone() + y.clone() + c.clone(), outer),
                (center.clone() - y.clone(), gamma.clone()),
                (center.clone() + y.clone(), gamma),
            ],
            vec![],
        )?
    };
    let xi1 = xi(1)?;
    let xin = xi(steps)?;
    let mk = |label: &str, lhs: SignedMeasure<T>, rhs: SignedMeasure<T>| OrderingClaim {
        label: label.into(),
        lhs,
        rhs,
        degree: one,
    };
    Ok(vec![
        mk("x<=xi1", x_mass, xi1.clone()),
        mk("xi1<=xin", xi1, xin.clone()),
        mk("xin<=y", xin, y_meas.clone()),
        mk("y<=eta", y_meas.clone(), eta.clone()),
        mk("eta<=w", eta, w_meas.clone()),
        mk("w<=lambda", w_meas, lambda.clone()),
        mk("lambda<=z", lambda, z_meas),
    ])
}

fn uniform_window<T: Scalar>(
    iv: &Interval<T>,
    center: &T,
    halfwidth: &T,
) -> Result<SignedMeasure<T>, FamilyError> {
    let density = Polynomial::constant(T::one() / (T::from_int(2) * halfwidth.clone()));
    Ok(SignedMeasure::new(
        iv.clone(),
        vec![],
        vec![Segment {
            from: center.clone() - halfwidth.clone(),
            to: center.clone() + halfwidth.clone(),
            density,
        }],
    )?)
}

fn brenner_alzer_skew_claims<T: Scalar>(
    p: &T,
    q: &T,
    a: &T,
    b: &T,
    y: &T,
    alpha: &T,
) -> Result<Vec<OrderingClaim<T>>, FamilyError> {
    let (center, bound) = brenner_alzer_domain(p, q, a, b, y)?;
    if !in_open_unit(alpha) {
        return Err(FamilyError::Domain("need alpha in (0, 1)".into()));
    }
    let spread = alpha.clone() / (T::one() - alpha.clone()) * y.clone();
    if spread.cmp_total(&bound) == std::cmp::Ordering::Greater {
        return Err(FamilyError::Domain(
            "need alpha y/(1-alpha) <= (b-a) min(p,q)/(p+q)".into(),
        ));
    }
    let iv = Interval::new(a.clone(), b.clone())?;
    let one = ConvexityDegree::new(1).unwrap();
    let pq = p.clone() + q.clone();
    let x_mass = SignedMeasure::dirac(iv.clone(), center.clone(), T::one())?;
    // two-sided uniform: density alpha/y on [A-y, A], (1-alpha)^2/(alpha y)
    // on [A, A + alpha y/(1-alpha)]
    let d1 = alpha.clone() / y.clone();
    let rest = T::one() - alpha.clone();
    let d2 = rest.clone() * rest.clone() / (alpha.clone() * y.clone());
    let y_meas = SignedMeasure::new(
        iv.clone(),
        vec![],
        vec![
            Segment {
                from: center.clone() - y.clone(),
                to: center.clone(),
                density: Polynomial::constant(d1),
            },
            Segment {
                from: center.clone(),
                to: center.clone() + spread.clone(),
                density: Polynomial::constant(d2),
            },
        ],
    )?;
    let w_meas = SignedMeasure::new(
        iv.clone(),
        vec![
            (center.clone() - y.clone(), alpha.clone()),
            (center.clone() + spread, T::one() - alpha.clone()),
        ],
        vec![],
    )?;
    let z_meas = SignedMeasure::new(
        iv,
        vec![
            (a.clone(), p.clone() / pq.clone()),
            (b.clone(), q.clone() / pq),
        ],
        vec![],
    )?;
    Ok(vec![
        OrderingClaim {
            label: "x<=y".into(),
            lhs: x_mass,
            rhs: y_meas.clone(),
            degree: one,
        },
        OrderingClaim {
            label: "y<=w".into(),
            lhs: y_meas,
            rhs: w_meas.clone(),
            degree: one,
        },
        OrderingClaim {
            label: "w<=z".into(),
            lhs: w_meas,
            rhs: z_meas,
            degree: one,
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::{sign_changes, Criterion};

    type R = Rad;

    fn q(n: i64, d: i64) -> R {
        Rad::from_ratio(n, d)
    }

    fn tol() -> R {
        Rad::zero()
    }

    fn n(v: u32) -> ConvexityDegree {
        ConvexityDegree::new(v).unwrap()
    }

    #[test]
    fn quadrature_masses_and_moments() {
        for name in RuleName::ALL {
            let rule = quadrature::<R>(name);
            assert_eq!(rule.measure.total_mass(), Rad::one(), "{name}");
        }
        let l5 = quadrature::<R>(RuleName::L5).measure;
        assert_eq!(l5.total_mass(), Rad::one());
        let s = quadrature::<R>(RuleName::S).measure;
        assert_eq!(s.moment(2), q(1, 3));
        let i = quadrature::<R>(RuleName::I).measure;
        assert_eq!(i.moment(2), q(1, 3));
        let g3 = quadrature::<R>(RuleName::G3).measure;
        assert_eq!(g3.moment(4), q(1, 5));
        let g2 = quadrature::<R>(RuleName::G2).measure;
        assert_eq!(g2.moment(2), q(1, 3));
    }

    #[test]
    fn quadrature_exactness_degrees() {
        let i = quadrature::<R>(RuleName::I).measure;
        for name in RuleName::ALL {
            if name == RuleName::I {
                continue;
            }
            let rule = quadrature::<R>(name).measure;
            let deg = name.exactness_degree();
            for k in 0..=deg {
                assert_eq!(rule.moment(k), i.moment(k), "{name} moment {k}");
            }
            // one degree past: must differ
            assert_ne!(rule.moment(deg + 1), i.moment(deg + 1), "{name} sharp");
        }
    }

    #[test]
    fn l4_minus_c_has_seven_atoms_and_five_crossings() {
        let l4 = quadrature::<R>(RuleName::L4).measure;
        let c = quadrature::<R>(RuleName::C).measure;
        let diff = SignedMeasure::combine(&Rad::one(), &l4, &(-Rad::one()), &c, &tol()).unwrap();
        assert_eq!(diff.atoms().len(), 7);
        let f = l4.cdf().sub(&c.cdf());
        let report = sign_changes(&f, &tol());
        assert_eq!(report.count, 5);
    }

    #[test]
    fn c_below_l4_at_3convex_via_sign_points() {
        let c = quadrature::<R>(RuleName::C).measure;
        let l4 = quadrature::<R>(RuleName::L4).measure;
        let v = decide_order(&c, &l4, n(3), &tol());
        assert_eq!(v.status, VerdictStatus::Holds);
        let cert = v.certificate.unwrap();
        assert_eq!(cert.criterion, Criterion::HLadderSignPoints);
        // sign changes of H_2 at -1-sqrt5+2sqrt2, 0, 1+sqrt5-2sqrt2
        assert_eq!(cert.crossings.len(), 3);
        let x3 = Rad::one() + Rad::sqrt_int(5) - Rad::from_int(2) * Rad::sqrt_int(2);
        assert!((cert.crossings[0].to_f64() + x3.to_f64()).abs() < 1e-9);
        assert!((cert.crossings[2].to_f64() - x3.to_f64()).abs() < 1e-9);
        // the single interior check H_3(0) = 1/72 + sqrt5/360 - sqrt2/72, exact
        let want = q(1, 72) + Rad::sqrt_int(5) / Rad::from_int(360)
            - Rad::sqrt_int(2) / Rad::from_int(72);
        assert_eq!(cert.h_checked.len(), 1);
        assert_eq!(cert.h_checked[0].0, Rad::zero());
        assert_eq!(cert.h_checked[0].1, want);
    }

    #[test]
    fn g3_l5_incomparable_at_3convex() {
        let g3 = quadrature::<R>(RuleName::G3).measure;
        let l5 = quadrature::<R>(RuleName::L5).measure;
        let v = decide_order(&g3, &l5, n(3), &tol());
        assert_eq!(v.status, VerdictStatus::Incomparable);
        let lo = v.witness_low.unwrap();
        let hi = v.witness_high.unwrap();
        assert_eq!(lo.gap.sign_exact(), std::cmp::Ordering::Less);
        assert_eq!(hi.gap.sign_exact(), std::cmp::Ordering::Greater);
    }

    #[test]
    fn g3_below_i_at_5convex_via_dls() {
        let g3 = quadrature::<R>(RuleName::G3).measure;
        let i = quadrature::<R>(RuleName::I).measure;
        let v = decide_order(&g3, &i, n(5), &tol());
        assert_eq!(v.status, VerdictStatus::Holds);
        assert_eq!(v.certificate.unwrap().criterion, Criterion::Dls);
    }

    #[test]
    fn classic_hh_family() {
        let fam: Family<R> = Family::ClassicHH;
        let claims = fam.claims().unwrap();
        assert_eq!(claims.len(), 2);
        for claim in claims {
            let v = claim.decide(&tol());
            assert_eq!(v.status, VerdictStatus::Holds, "{}", claim.label);
        }
    }

    #[test]
    fn szostok_left2_symmetric_boundary() {
        // Holds exactly at a = 2 - 2 alpha, fails just past it
        let fam = Family::SzostokLeft2 {
            a: q(1, 2),
            alpha: q(3, 4),
            beta: None,
        };
        assert!(fam.eval_conditions().unwrap().is_satisfied());
        let v = fam.claims().unwrap()[0].decide(&tol());
        assert_eq!(v.status, VerdictStatus::Holds);

        let fam = Family::SzostokLeft2 {
            a: q(1, 2) + q(1, 1000),
            alpha: q(3, 4),
            beta: None,
        };
        assert!(!fam.eval_conditions().unwrap().is_satisfied());
        let v = fam.claims().unwrap()[0].decide(&tol());
        assert_eq!(v.status, VerdictStatus::Incomparable);
    }

    #[test]
    fn quad_vs_quad_thirds_boundary_at_5_6() {
        let mk = |alpha: R| Family::QuadVsQuad {
            a: q(1, 2),
            alpha1: alpha.clone(),
            alpha2: Rad::one() - alpha,
            b1: q(1, 3),
            b2: q(1, 3),
            b3: q(1, 3),
            beta: q(1, 2),
        };
        let at = mk(q(5, 6));
        assert!(at.eval_conditions().unwrap().is_satisfied());
        assert_eq!(at.claims().unwrap()[0].decide(&tol()).status, VerdictStatus::Holds);
        let past = mk(q(5, 6) + q(1, 100));
        assert!(!past.eval_conditions().unwrap().is_satisfied());
        assert_ne!(
            past.claims().unwrap()[0].decide(&tol()).status,
            VerdictStatus::Holds
        );
    }

    #[test]
    fn quad_vs_quad_simpson_boundary_at_2_3() {
        let mk = |alpha: R| Family::QuadVsQuad {
            a: q(1, 2),
            alpha1: alpha.clone(),
            alpha2: Rad::one() - alpha,
            b1: q(1, 6),
            b2: q(2, 3),
            b3: q(1, 6),
            beta: q(1, 2),
        };
        let at = mk(q(2, 3));
        assert!(at.eval_conditions().unwrap().is_satisfied());
        assert_eq!(at.claims().unwrap()[0].decide(&tol()).status, VerdictStatus::Holds);
        let past = mk(q(2, 3) + q(1, 100));
        assert!(!past.eval_conditions().unwrap().is_satisfied());
        assert_ne!(
            past.claims().unwrap()[0].decide(&tol()).status,
            VerdictStatus::Holds
        );
    }

    #[test]
    fn ta_operator_thresholds() {
        let cases: Vec<(R, TaTarget, VerdictStatus)> = vec![
            (q(1, 10), TaTarget::Mean, VerdictStatus::Holds),
            (q(-1, 10), TaTarget::Mean, VerdictStatus::HoldsReversed),
            (q(2, 1), TaTarget::Midpoint, VerdictStatus::Holds),
            (q(6, 1), TaTarget::Midpoint, VerdictStatus::HoldsReversed),
            (q(4, 1), TaTarget::Midpoint, VerdictStatus::Incomparable),
            (q(-6, 1), TaTarget::Endpoints, VerdictStatus::Holds),
            (q(-7, 1), TaTarget::Endpoints, VerdictStatus::Incomparable),
        ];
        for (a, target, want) in cases {
            let fam = Family::TaOperator {
                a: a.clone(),
                target,
            };
            let v = fam.claims().unwrap()[0].decide(&tol());
            assert_eq!(v.status, want, "a={a} target={}", target.as_str());
            assert_eq!(
                fam.eval_conditions().unwrap().expected(),
                want,
                "closed form at a={a}"
            );
        }
    }

    #[test]
    fn dragomir_triangular_chain() {
        // midpoint <= double-integral mean <= integral mean
        let tri = triangular_mean_measure::<R>();
        let unit = Interval::unit();
        let mid = SignedMeasure::dirac(unit.clone(), q(1, 2), Rad::one()).unwrap();
        let uni = SignedMeasure::uniform(unit, Rad::one());
        assert_eq!(decide_order(&mid, &tri, n(1), &tol()).status, VerdictStatus::Holds);
        assert_eq!(decide_order(&tri, &uni, n(1), &tol()).status, VerdictStatus::Holds);
    }

    #[test]
    fn f5_three_point_sharpness() {
        let fam = Family::F5ThreePoint { a: q(1, 6) };
        assert!(fam.eval_conditions().unwrap().is_satisfied());
        assert_eq!(fam.claims().unwrap()[0].decide(&tol()).status, VerdictStatus::Holds);
        let eps = q(1, 100);
        let fam = Family::F5ThreePoint { a: q(1, 6) - eps };
        assert!(!fam.eval_conditions().unwrap().is_satisfied());
        assert_ne!(
            fam.claims().unwrap()[0].decide(&tol()).status,
            VerdictStatus::Holds
        );
    }

    #[test]
    fn s2_alpha_family() {
        for alpha in [q(0, 1), q(1, 5), q(1, 3), q(1, 2), q(2, 3), q(9, 10), q(1, 1)] {
            let fam = Family::S2Alpha {
                alpha: alpha.clone(),
                target: S2Target::EndpointMix,
            };
            let v = fam.claims().unwrap()[0].decide(&tol());
            assert_eq!(v.status, VerdictStatus::Holds, "endpoint mix at {alpha}");
        }
        for (alpha, want) in [
            (q(1, 3), VerdictStatus::Holds),
            (q(1, 2), VerdictStatus::Holds),
            (q(2, 3), VerdictStatus::Holds),
            (q(1, 5), VerdictStatus::Incomparable),
            (q(4, 5), VerdictStatus::Incomparable),
        ] {
            let fam = Family::S2Alpha {
                alpha: alpha.clone(),
                target: S2Target::Node,
            };
            let v = fam.claims().unwrap()[0].decide(&tol());
            assert_eq!(v.status, want, "node target at {alpha}");
            assert_eq!(fam.eval_conditions().unwrap().expected(), want);
        }
    }

    #[test]
    fn popoviciu_and_fink() {
        let fam = Family::Popoviciu {
            x: q(-1, 1),
            y: q(1, 4),
            z: q(2, 1),
        };
        let v = fam.claims().unwrap()[0].decide(&tol());
        assert_eq!(v.status, VerdictStatus::Holds);

        // Fink for an arbitrary mass-one measure
        let iv = Interval::new(q(0, 1), q(2, 1)).unwrap();
        let m = SignedMeasure::new(
            iv,
            vec![(q(1, 4), q(1, 2))],
            vec![Segment {
                from: q(1, 1),
                to: q(2, 1),
                density: Polynomial::constant(q(1, 2)),
            }],
        )
        .unwrap();
        let fam = Family::Fink { measure: m };
        for claim in fam.claims().unwrap() {
            assert_eq!(claim.decide(&tol()).status, VerdictStatus::Holds, "{}", claim.label);
        }
    }

    #[test]
    fn brenner_alzer_chain_verifies() {
        let fam = Family::BrennerAlzer {
            p: q(2, 1),
            q: q(3, 1),
            a: q(0, 1),
            b: q(1, 1),
            y: q(1, 4),
            alpha: q(1, 3),
            beta: q(2, 5),
            steps: 3,
        };
        for claim in fam.claims().unwrap() {
            let v = claim.decide(&tol());
            assert_eq!(v.status, VerdictStatus::Holds, "link {}", claim.label);
        }
        // inadmissible y: the family refuses to build
        let bad = Family::BrennerAlzer {
            p: q(2, 1),
            q: q(3, 1),
            a: q(0, 1),
            b: q(1, 1),
            y: q(2, 5) + q(1, 100),
            alpha: q(1, 3),
            beta: q(2, 5),
            steps: 2,
        };
        assert!(matches!(bad.claims(), Err(FamilyError::Domain(_))));
    }

    #[test]
    fn brenner_alzer_skew_chain() {
        let fam = Family::BrennerAlzerSkew {
            p: q(1, 1),
            q: q(1, 1),
            a: q(0, 1),
            b: q(1, 1),
            y: q(1, 5),
            alpha: q(2, 5),
        };
        for claim in fam.claims().unwrap() {
            assert_eq!(claim.decide(&tol()).status, VerdictStatus::Holds, "{}", claim.label);
        }
    }

    #[test]
    fn deriv_expr_families() {
        // example with weights (1/3, -8/3, 8/3, -1/3): below the mean
        let fam = Family::DerivExpr4 {
            a: [q(1, 3), q(-8, 3), q(8, 3), q(-1, 3)],
            alpha2: q(3, 4),
            alpha3: q(1, 4),
        };
        assert_eq!(fam.claims().unwrap()[0].decide(&tol()).status, VerdictStatus::Holds);
        assert_eq!(fam.eval_conditions().unwrap().expected(), VerdictStatus::Holds);
        // (-2, 3, -3, 2): above the mean
        let fam = Family::DerivExpr4 {
            a: [q(-2, 1), q(3, 1), q(-3, 1), q(2, 1)],
            alpha2: q(2, 3),
            alpha3: q(1, 3),
        };
        assert_eq!(
            fam.claims().unwrap()[0].decide(&tol()).status,
            VerdictStatus::HoldsReversed
        );
        assert_eq!(
            fam.eval_conditions().unwrap().expected(),
            VerdictStatus::HoldsReversed
        );
        // the same coefficients as a symmetric family: below the endpoint
        // average (a = -2, b = -3, alpha = 1/3)
        let fam = Family::DerivExprSym {
            a: q(-2, 1),
            b: q(-3, 1),
            alpha: q(1, 3),
        };
        assert!(fam.eval_conditions().unwrap().is_satisfied());
        assert_eq!(fam.claims().unwrap()[0].decide(&tol()).status, VerdictStatus::Holds);
        // the (1/3, -8/3, ...) coefficients vs the midpoint: incomparable
        let fam = Family::DerivExprSym {
            a: q(1, 3),
            b: q(8, 3),
            alpha: q(1, 4),
        };
        assert!(!fam.eval_conditions().unwrap().is_satisfied());
        assert_eq!(
            fam.claims().unwrap()[0].decide(&tol()).status,
            VerdictStatus::Incomparable
        );
    }

    #[test]
    fn fejer_generalization() {
        // an asymmetric weight measure satisfying the three conditions
        // for p = 1/2 on [0, 1]: atoms at 1/4, 3/4 balanced to mean 1/2
        let iv = Interval::unit();
        let w = SignedMeasure::new(
            iv,
            vec![(q(1, 4), q(1, 2)), (q(3, 4), q(1, 2))],
            vec![],
        )
        .unwrap();
        let fam = Family::Fejer {
            p: q(1, 2),
            weight: w,
        };
        assert!(fam.eval_conditions().unwrap().is_satisfied());
        for claim in fam.claims().unwrap() {
            assert_eq!(claim.decide(&tol()).status, VerdictStatus::Holds, "{}", claim.label);
        }
    }
}
