use rand_chacha::ChaCha8Rng;

use super::Covariant;
use crate::exact::{rank_of_vectors, Scalar};
use crate::lie::{sample_regular_point, Representation};
use crate::Result;

/// Rank of `[F_1(v) ... F_l(v)]`.
pub fn independence_rank_at(family: &[Covariant], v: &[Scalar]) -> usize {
    let vals: Vec<Vec<Scalar>> = family.iter().map(|f| f.eval(v)).collect();
    rank_of_vectors(&vals)
}

/// Result of comparing `span{F_i(v)}` with `g_v` at sampled regular points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanCheck {
    pub points: usize,
    /// A point where the span differs from `g_v`, with the rank of the
    /// values and `dim g_v` there.
    pub failure: Option<(Vec<Scalar>, usize, usize)>,
}

impl SpanCheck {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// At `samples` random points with `dim g_v = l`, certifies
/// `span{F_i(v)} = g_v`: the values lie in `g_v` and have rank `l`.
pub fn ker_phi_basis_check(
    rep: &Representation,
    family: &[Covariant],
    l: usize,
    rng: &mut ChaCha8Rng,
    samples: usize,
) -> Result<SpanCheck> {
    for _ in 0..samples {
        let (v, gv) = sample_regular_point(rep, l, rng)?;
        let vals: Vec<Vec<Scalar>> = family.iter().map(|f| f.eval(&v)).collect();
        let rank = rank_of_vectors(&vals);
        let inside = vals.iter().all(|x| gv.contains(x));
        if rank != gv.dim() || !inside {
            return Ok(SpanCheck { points: samples, failure: Some((v, rank, gv.dim())) });
        }
    }
    Ok(SpanCheck { points: samples, failure: None })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuditVerdict {
    Equality,
    /// `sum deg F_i` exceeds `dim V - q(V//G)` by this much.
    Surplus(u64),
    Deficit(u64),
}

/// The identities `sum deg F_i + q(V//G) = dim V` and
/// `q(V//G) + sum (deg F_i + 1) = dim V + l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeAudit {
    pub sum_degrees: u64,
    pub dim_v: u64,
    pub q: u64,
    pub l: u64,
    pub verdict: AuditVerdict,
    pub bookkeeping_lhs: u64,
    pub bookkeeping_rhs: u64,
}

impl DegreeAudit {
    /// `bookkeeping_lhs - bookkeeping_rhs`.
    pub fn bookkeeping_offset(&self) -> i64 {
        self.bookkeeping_lhs as i64 - self.bookkeeping_rhs as i64
    }
}

pub fn degree_audit(degrees: &[u32], dim_v: usize, q: u64, l: usize) -> DegreeAudit {
    let sum: u64 = degrees.iter().map(|&d| u64::from(d)).sum();
    let target = dim_v as i64 - q as i64;
    let diff = sum as i64 - target;
    let verdict = match diff {
        0 => AuditVerdict::Equality,
        d if d > 0 => AuditVerdict::Surplus(d as u64),
        d => AuditVerdict::Deficit(d.unsigned_abs()),
    };
    DegreeAudit {
        sum_degrees: sum,
        dim_v: dim_v as u64,
        q,
        l: l as u64,
        verdict,
        bookkeeping_lhs: q + sum + degrees.len() as u64,
        bookkeeping_rhs: dim_v as u64 + l as u64,
    }
}
