//! The normalized walk `R̃_n(q) = R_n(q) / [n]_q²` on the basis
//! `T̃_w = q^{-ℓ(w)} T_w`, for real `q ≥ 1`.

use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::{r2r, regular_rep_matrix};
use crate::linalg::{serialize_rational, serialize_vector, Matrix, Vector};
use crate::qpoly::{qint_at, rational_pow, rational_to_string, LaurentPoly, Rational};
use crate::symmetric::{factorial, Permutation};

/// A probability distribution on `S_n`, indexed by Lehmer rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Distribution {
    n: usize,
    #[serde(serialize_with = "serialize_vector")]
    probs: Vector,
}

impl Distribution {
    pub fn new(n: usize, probs: Vector) -> Result<Self> {
        if probs.len() != factorial(n) {
            return Err(Error::SizeMismatch {
                left: probs.len(),
                right: factorial(n),
            });
        }
        if probs.iter().any(|p| p.is_negative()) {
            return Err(Error::InvalidInput("negative probability".into()));
        }
        let total: Rational = probs.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidInput(format!("probabilities sum to {total}")));
        }
        Ok(Self { n, probs })
    }

    pub fn point_mass(w: &Permutation) -> Self {
        let mut probs = vec![Rational::zero(); factorial(w.n())];
        probs[w.rank()] = Rational::one();
        Self { n: w.n(), probs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn probs(&self) -> &[Rational] {
        &self.probs
    }

    pub fn prob(&self, w: &Permutation) -> &Rational {
        &self.probs[w.rank()]
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.probs
            .iter()
            .map(|p| p.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// One step `π ↦ π P`.
    pub fn step(&self, p: &Matrix) -> Self {
        Self {
            n: self.n,
            probs: p.left_apply(&self.probs),
        }
    }

    /// `½ Σ |π(w) − ν(w)|`.
    pub fn tv_distance(&self, other: &Self) -> Rational {
        let sum: Rational = self
            .probs
            .iter()
            .zip(&other.probs)
            .map(|(a, b)| (a - b).abs())
            .sum();
        sum / Rational::from_integer(2.into())
    }
}

fn check_q(q0: &Rational) -> Result<()> {
    if *q0 < Rational::one() {
        return Err(Error::SubunitQ(format!("the walk needs q0 ≥ 1, got {q0}")));
    }
    Ok(())
}

/// `P[w][u] = q0^{ℓ(u)−ℓ(w)} M[w][u] / [n]²`, `M` the `T`-basis matrix of `R_n(q0)`.
pub fn transition_matrix(n: usize, q0: &Rational) -> Result<Matrix> {
    check_q(q0)?;
    if n > 6 {
        return Err(Error::UnsupportedSize(format!(
            "transition matrices need n ≤ 6, got {n}"
        )));
    }
    let m = regular_rep_matrix(&r2r(n), q0)?;
    let lengths: Vec<i32> = Permutation::all(n)
        .iter()
        .map(|w| w.length() as i32)
        .collect();
    let scale = {
        let s = qint_at(n as i64, q0);
        Rational::one() / (&s * &s)
    };
    let dim = m.rows();
    let mut p = Matrix::zeros(dim, dim);
    for w in 0..dim {
        for u in 0..dim {
            let x = m.get(w, u);
            if !x.is_zero() {
                p.set(w, u, x * rational_pow(q0, lengths[u] - lengths[w]) * &scale);
            }
        }
    }
    Ok(p)
}

/// `det(y I - P)` for the transition matrix, by modular arithmetic (exact).
pub fn transition_charpoly(n: usize, q0: &Rational) -> Result<LaurentPoly> {
    transition_matrix(n, q0)?.modular_charpoly()
}

/// The Mallows measure `π(w) ∝ q0^{ℓ(w)}`.
pub fn mallows(n: usize, q0: &Rational) -> Result<Distribution> {
    if !q0.is_positive() {
        return Err(Error::InvalidInput(format!(
            "Mallows weights need q0 > 0, got {q0}"
        )));
    }
    let weights: Vector = Permutation::all(n)
        .iter()
        .map(|w| rational_pow(q0, w.length() as i32))
        .collect();
    let total: Rational = weights.iter().sum();
    Distribution::new(n, weights.into_iter().map(|w| w / &total).collect())
}

/// `‖δ_e P^t − π‖_TV` for `t = 0..=steps` by exact power iteration.
pub fn tv_mixing_curve(n: usize, q0: &Rational, steps: usize) -> Result<Vec<Rational>> {
    let p = transition_matrix(n, q0)?;
    let pi = mallows(n, q0)?;
    let mut cur = Distribution::point_mass(&Permutation::identity(n));
    let mut out = Vec::with_capacity(steps + 1);
    for t in 0..=steps {
        out.push(cur.tv_distance(&pi));
        if t < steps {
            cur = cur.step(&p);
        }
    }
    Ok(out)
}

/// Float power iteration for long curves; not a certificate.
pub fn tv_mixing_curve_f64(n: usize, q0: &Rational, steps: usize) -> Result<Vec<f64>> {
    let p = transition_matrix(n, q0)?;
    let dim = p.rows();
    let pf: Vec<f64> = (0..dim * dim)
        .map(|k| p.get(k / dim, k % dim).to_f64().unwrap_or(f64::NAN))
        .collect();
    let pi = mallows(n, q0)?.to_f64();
    let mut cur = vec![0.0; dim];
    cur[Permutation::identity(n).rank()] = 1.0;
    let mut out = Vec::with_capacity(steps + 1);
    for t in 0..=steps {
        out.push(0.5 * cur.iter().zip(&pi).map(|(a, b)| (a - b).abs()).sum::<f64>());
        if t < steps {
            let mut next = vec![0.0; dim];
            for (w, c) in cur.iter().enumerate() {
                if *c != 0.0 {
                    for (u, x) in next.iter_mut().enumerate() {
                        *x += c * pf[w * dim + u];
                    }
                }
            }
            cur = next;
        }
    }
    Ok(out)
}

/// One row of a mixing curve.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MixingPoint {
    pub step: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub tv_exact: Rational,
    pub tv_float: f64,
}

pub fn mixing_points(n: usize, q0: &Rational, steps: usize) -> Result<Vec<MixingPoint>> {
    Ok(tv_mixing_curve(n, q0, steps)?
        .into_iter()
        .enumerate()
        .map(|(step, tv)| MixingPoint {
            step,
            tv_float: tv.to_f64().unwrap_or(f64::NAN),
            tv_exact: tv,
        })
        .collect())
}

/// CSV with columns `step,tv_exact,tv_float`.
pub fn mixing_csv(points: &[MixingPoint]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::InvalidInput(e.to_string());
    w.write_record(["step", "tv_exact", "tv_float"])
        .map_err(io)?;
    for p in points {
        w.write_record([
            p.step.to_string(),
            rational_to_string(&p.tv_exact),
            p.tv_float.to_string(),
        ])
        .map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidInput(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

/// A seeded Monte-Carlo trajectory of the walk started at the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trajectory {
    pub seed: u64,
    pub states: Vec<Permutation>,
}

pub fn sample_trajectory(n: usize, q0: &Rational, steps: usize, seed: u64) -> Result<Trajectory> {
    let p = transition_matrix(n, q0)?;
    let perms = Permutation::all(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = Permutation::identity(n).rank();
    let mut states = vec![perms[cur]];
    for _ in 0..steps {
        let weights: Vec<f64> = p
            .row(cur)
            .iter()
            .map(|x| x.to_f64().unwrap_or(0.0))
            .collect();
        let dist = WeightedIndex::new(&weights).map_err(|e| Error::InvalidInput(e.to_string()))?;
        cur = dist.sample(&mut rng);
        states.push(perms[cur]);
    }
    Ok(Trajectory { seed, states })
}
