//! Shared helpers for the integration suites: seeded random rational
//! measures with matched moments and a small exact linear solver.

use cxord::measure::{Interval, Segment, SignedMeasure};
use cxord::numeric::{Polynomial, Rad};
use cxord::oracle::SplitMix64;

pub fn q(n: i64, d: i64) -> Rad {
    Rad::from_ratio(n, d)
}

/// Random signed measure on [0, 1]: up to `max_atoms` atoms on a rational
/// grid and up to `max_segments` linear-density segments.
pub fn random_measure(rng: &mut SplitMix64, max_atoms: u32, max_segments: u32) -> SignedMeasure<Rad> {
    let unit = Interval::unit();
    let n_atoms = 1 + (rng.next() % max_atoms as u64) as usize;
    let n_segs = (rng.next() % (max_segments as u64 + 1)) as usize;
    let mut atoms = Vec::new();
    for _ in 0..n_atoms {
        let loc = q((rng.next() % 97) as i64, 97);
        let w = q((rng.next() % 33) as i64 - 16, 8);
        if !w.is_zero() {
            atoms.push((loc, w));
        }
    }
    let mut segments = Vec::new();
    for _ in 0..n_segs {
        let a = (rng.next() % 60) as i64;
        let len = (rng.next() % 30) as i64 + 5;
        let from = q(a, 100);
        let to = q((a + len).min(100), 100);
        let c0 = q((rng.next() % 25) as i64 - 12, 4);
        let c1 = q((rng.next() % 25) as i64 - 12, 4);
        segments.push(Segment {
            from,
            to,
            density: Polynomial::new(vec![c0, c1]),
        });
    }
    SignedMeasure::new(unit, atoms, segments).expect("generated data is valid")
}

/// Solve the square system `V w = rhs` by Gaussian elimination, exactly.
#[allow(clippy::needless_range_loop)]
pub fn solve_exact(mut v: Vec<Vec<Rad>>, mut rhs: Vec<Rad>) -> Vec<Rad> {
    let n = rhs.len();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !v[r][col].is_zero())
            .expect("singular moment system");
        v.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = Rad::one() / v[col][col].clone();
        for c in col..n {
            v[col][c] = v[col][c].clone() * inv.clone();
        }
        rhs[col] = rhs[col].clone() * inv;
        for r in 0..n {
            if r != col && !v[r][col].is_zero() {
                let factor = v[r][col].clone();
                for c in col..n {
                    v[r][c] = v[r][c].clone() - factor.clone() * v[col][c].clone();
                }
                rhs[r] = rhs[r].clone() - factor * rhs[col].clone();
            }
        }
    }
    rhs
}

/// A pair of random measures with moments `0..=n` matched exactly: the
/// second measure gets `n + 1` correction atoms whose weights solve the
/// moment system.
pub fn matched_pair(
    rng: &mut SplitMix64,
    n: u32,
) -> (SignedMeasure<Rad>, SignedMeasure<Rad>) {
    let mu1 = random_measure(rng, 4, 2);
    let raw2 = random_measure(rng, 3, 1);
    // fixed correction locations with a large prime denominator so they
    // rarely collide with the random grid
    let locs: Vec<Rad> = (0..=n as i64)
        .map(|k| q(101 + 293 * k, 1009))
        .collect();
    let mut v = Vec::new();
    let mut rhs = Vec::new();
    for k in 0..=n {
        v.push(
            locs.iter()
                .map(|loc| {
                    let mut pw = Rad::one();
                    for _ in 0..k {
                        pw = pw * loc.clone();
                    }
                    pw
                })
                .collect::<Vec<Rad>>(),
        );
        rhs.push(mu1.moment(k) - raw2.moment(k));
    }
    let weights = solve_exact(v, rhs);
    let corrections: Vec<(Rad, Rad)> = locs.into_iter().zip(weights).collect();
    let correction =
        SignedMeasure::new(Interval::unit(), corrections, vec![]).expect("correction atoms valid");
    let mu2 = SignedMeasure::combine(&Rad::one(), &raw2, &Rad::one(), &correction, &Rad::zero())
        .expect("same interval");
    (mu1, mu2)
}
