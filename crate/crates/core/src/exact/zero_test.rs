//! Polynomial identity testing: full expansion or random integer evaluation.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::poly::MultiPoly;
use super::scalar::Scalar;
use crate::{Error, Result};

/// Largest number of variables for which exact expansion is attempted.
pub const EXACT_MAX_VARS: usize = 40;
/// Largest total degree for which exact expansion is attempted.
pub const EXACT_MAX_DEGREE: u32 = 8;
/// Sample coordinates are drawn from `[-SAMPLE_BOUND, SAMPLE_BOUND]`.
pub const SAMPLE_BOUND: i64 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroMode {
    Exact,
    /// `trials: None` means total degree + 3.
    Sampled { seed: u64, trials: Option<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroVerdict {
    ProvedZero,
    /// A point where the polynomial does not vanish, and the value there.
    ProvedNonzero { point: Vec<Scalar>, value: Scalar },
    SampledZero { trials: usize },
}

impl ZeroVerdict {
    pub fn is_zero(&self) -> bool {
        !matches!(self, ZeroVerdict::ProvedNonzero { .. })
    }

    pub fn is_proved(&self) -> bool {
        !matches!(self, ZeroVerdict::SampledZero { .. })
    }
}

/// True when exact expansion is allowed for this shape.
pub fn exact_allowed(num_vars: usize, degree: u32) -> bool {
    num_vars <= EXACT_MAX_VARS && degree <= EXACT_MAX_DEGREE
}

pub fn default_trials(degree: u32) -> usize {
    degree as usize + 3
}

/// Deterministic generator for a seed and a textual purpose tag.
pub fn rng_for(seed: u64, tag: &str) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed ^ fnv1a(tag.as_bytes()))
}

/// 64-bit FNV-1a; used only to derive independent seeds from labels.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

pub fn random_int(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::from_int(rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND))
}

pub fn random_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| random_int(rng)).collect()
}

/// Decides whether `p` is the zero polynomial.
///
/// Exact mode is refused above [`EXACT_MAX_VARS`] variables or
/// [`EXACT_MAX_DEGREE`]; a nonzero verdict always comes with a point.
pub fn poly_is_zero(p: &MultiPoly, mode: ZeroMode) -> Result<ZeroVerdict> {
    let deg = p.degree().unwrap_or(0);
    match mode {
        ZeroMode::Exact => {
            if !exact_allowed(p.nvars(), deg) {
                return Err(Error::ExactRefused(format!(
                    "{} variables, degree {}",
                    p.nvars(),
                    deg
                )));
            }
            if p.is_zero() {
                return Ok(ZeroVerdict::ProvedZero);
            }
            let (point, value) = nonzero_witness(p);
            Ok(ZeroVerdict::ProvedNonzero { point, value })
        }
        ZeroMode::Sampled { seed, trials } => {
            let trials = trials.unwrap_or_else(|| default_trials(deg));
            let mut rng = rng_for(seed, "poly_is_zero");
            for _ in 0..trials {
                let point = random_point(&mut rng, p.nvars());
                let value = p.eval(&point);
                if !value.is_zero() {
                    return Ok(ZeroVerdict::ProvedNonzero { point, value });
                }
            }
            Ok(ZeroVerdict::SampledZero { trials })
        }
    }
}

/// A point where a nonzero polynomial does not vanish. Random integer points
/// almost always work; the fallback walks variables one at a time, which
/// terminates because a nonzero univariate polynomial has finitely many roots.
pub fn nonzero_witness(p: &MultiPoly) -> (Vec<Scalar>, Scalar) {
    assert!(!p.is_zero(), "zero polynomial has no witness");
    let mut rng = rng_for(0, "nonzero_witness");
    for _ in 0..64 {
        let point = random_point(&mut rng, p.nvars());
        let value = p.eval(&point);
        if !value.is_zero() {
            return (point, value);
        }
    }
    let mut point = vec![Scalar::zero(); p.nvars()];
    let mut current = p.clone();
    for var in 0..p.nvars() {
        // Fix `var` to a value that keeps the restricted polynomial nonzero.
        let mut t = 0i64;
        loop {
            let mut images: Vec<MultiPoly> = (0..p.nvars()).map(|i| MultiPoly::var(p.nvars(), i)).collect();
            images[var] = MultiPoly::constant(p.nvars(), Scalar::from_int(t));
            let restricted = current.compose(&images);
            if !restricted.is_zero() {
                point[var] = Scalar::from_int(t);
                current = restricted;
                break;
            }
            t += 1;
        }
    }
    let value = p.eval(&point);
    (point, value)
}

/// How identities are decided: by expansion, by sampling, or by expansion
/// when within the cutoffs and sampling otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckMode {
    Exact,
    Sampled,
    Auto,
}

/// Mode plus the randomness and trial budget used when sampling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub mode: CheckMode,
    pub seed: u64,
    /// `None` means total degree + 3.
    pub trials: Option<usize>,
}

impl CheckConfig {
    pub fn exact() -> Self {
        CheckConfig { mode: CheckMode::Exact, seed: 0, trials: None }
    }

    pub fn sampled(seed: u64) -> Self {
        CheckConfig { mode: CheckMode::Sampled, seed, trials: None }
    }

    pub fn auto(seed: u64) -> Self {
        CheckConfig { mode: CheckMode::Auto, seed, trials: None }
    }

    /// Whether an identity in `num_vars` variables of degree `degree` is to
    /// be expanded. Errors for exact mode above the cutoffs.
    pub fn expand(&self, num_vars: usize, degree: u32) -> Result<bool> {
        match self.mode {
            CheckMode::Exact if !exact_allowed(num_vars, degree) => {
                Err(Error::ExactRefused(format!("{num_vars} variables, degree {degree}")))
            }
            CheckMode::Exact => Ok(true),
            CheckMode::Sampled => Ok(false),
            CheckMode::Auto => Ok(exact_allowed(num_vars, degree)),
        }
    }

    pub fn trials_for(&self, degree: u32) -> usize {
        self.trials.unwrap_or_else(|| default_trials(degree))
    }

    /// A copy whose seed is mixed with `tag`, so distinct checks draw
    /// independent points.
    pub fn derive(&self, tag: &str) -> Self {
        CheckConfig { seed: self.seed ^ fnv1a(tag.as_bytes()), ..*self }
    }
}

/// Verdict on a vector-valued identity `P(x) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Identity {
    Proved,
    SampledHolds { trials: usize },
    /// Component `component` of `P(point)` equals `value != 0`.
    Fails { point: Vec<Scalar>, component: usize, value: Scalar },
}

impl Identity {
    pub fn holds(&self) -> bool {
        !matches!(self, Identity::Fails { .. })
    }

    pub fn is_proved(&self) -> bool {
        matches!(self, Identity::Proved)
    }
}

/// Exact test of `polys = 0`, with a witness point on failure.
pub fn polys_vanish(polys: &[MultiPoly]) -> Identity {
    match polys.iter().position(|p| !p.is_zero()) {
        None => Identity::Proved,
        Some(component) => {
            let (point, value) = nonzero_witness(&polys[component]);
            Identity::Fails { point, component, value }
        }
    }
}

/// Samples `trials` integer points of dimension `nvars` and evaluates `f`.
pub fn sampled_vanish(
    nvars: usize,
    trials: usize,
    seed: u64,
    tag: &str,
    mut f: impl FnMut(&[Scalar]) -> Vec<Scalar>,
) -> Identity {
    let mut rng = rng_for(seed, tag);
    for _ in 0..trials {
        let point = random_point(&mut rng, nvars);
        if let Some((component, value)) = f(&point).into_iter().enumerate().find(|(_, x)| !x.is_zero()) {
            return Identity::Fails { point, component, value };
        }
    }
    Identity::SampledHolds { trials }
}

/// Decides `polys = 0` under `cfg`.
pub fn decide_vanish(polys: &[MultiPoly], nvars: usize, cfg: &CheckConfig, tag: &str) -> Result<Identity> {
    let degree = polys.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    if cfg.expand(nvars, degree)? {
        Ok(polys_vanish(polys))
    } else {
        Ok(sampled_vanish(nvars, cfg.trials_for(degree), cfg.seed, tag, |x| {
            polys.iter().map(|p| p.eval(x)).collect()
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::s;

    #[test]
    fn zero_and_cancelling_product() {
        assert_eq!(poly_is_zero(&MultiPoly::zero(3), ZeroMode::Exact).unwrap(), ZeroVerdict::ProvedZero);
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let p = &x.mul_ref(&y) - &y.mul_ref(&x);
        assert_eq!(poly_is_zero(&p, ZeroMode::Exact).unwrap(), ZeroVerdict::ProvedZero);
    }

    #[test]
    fn nonzero_has_reproducible_witness() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let p = &x.mul_ref(&y) - &MultiPoly::constant(2, s(6));
        for mode in [ZeroMode::Exact, ZeroMode::Sampled { seed: 3, trials: None }] {
            match poly_is_zero(&p, mode).unwrap() {
                ZeroVerdict::ProvedNonzero { point, value } => {
                    assert_eq!(p.eval(&point), value);
                    assert!(!value.is_zero());
                }
                v => panic!("unexpected {v:?}"),
            }
        }
    }

    #[test]
    fn exact_refused_above_cutoff() {
        let p = MultiPoly::var(41, 0);
        assert!(matches!(poly_is_zero(&p, ZeroMode::Exact), Err(Error::ExactRefused(_))));
        let q = MultiPoly::var(2, 0).pow(9);
        assert!(poly_is_zero(&q, ZeroMode::Exact).is_err());
        assert!(poly_is_zero(&q, ZeroMode::Sampled { seed: 0, trials: None }).is_ok());
    }

    #[test]
    fn witness_fallback_handles_sparse_roots() {
        // Vanishes on many small integer points; the fallback still succeeds.
        let x = MultiPoly::var(1, 0);
        let mut p = MultiPoly::one(1);
        for r in -10..=10 {
            p = p.mul_ref(&(&x - &MultiPoly::constant(1, s(r))));
        }
        let (pt, v) = nonzero_witness(&p);
        assert_eq!(p.eval(&pt), v);
        assert!(!v.is_zero());
    }
}
