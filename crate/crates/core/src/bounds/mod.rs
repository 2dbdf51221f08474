//! Lower bounds on α in terms of diss, evaluated in exact rationals.

mod random;

pub use random::{
    diss_partition_stats, expected_I2_exact, montecarlo_I2, sample_thm2_parts, sample_thm2_set, MCResult,
    PartitionStats, Thm2Draw,
};

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{classify, Graph, GraphClass};
use crate::solvers::{max_dissociation_set, max_independent_set};

pub type Rational = Ratio<i64>;

/// Renders as `num/den`, or just `num` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn ser_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

fn int(x: usize) -> Rational {
    Rational::from_integer(x as i64)
}

/// `diss / 2`.
pub fn bound_basic(diss: usize) -> Rational {
    int(diss) / 2
}

/// `3·diss / 5`, for connected cubic graphs of order at least 6.
pub fn bound_thm1(diss: usize) -> Rational {
    int(diss) * Rational::new(3, 5)
}

/// `½(1 + 1/(2(Δ−1)))·diss − 1/(2(Δ−1))`; needs `Δ >= 2`.
pub fn bound_prop1(diss: usize, delta: usize) -> Result<Rational> {
    if delta < 2 {
        return Err(Error::InvalidParameter(format!(
            "bipartite bound needs Δ >= 2, got {delta}"
        )));
    }
    let t = Rational::new(1, 2 * (delta as i64 - 1));
    Ok((Rational::one() + t) / 2 * int(diss) - t)
}

/// Largest Δ whose factor fits in 64-bit rationals.
pub const THM2_MAX_DELTA: usize = 48;

/// `½(1 + (Δ−1)(Δ+1) / (2^Δ·Δ² + (Δ−1)(Δ+1)))`; needs `3 <= Δ <= 48`.
pub fn bound_thm2_factor(delta: usize) -> Result<Rational> {
    if !(3..=THM2_MAX_DELTA).contains(&delta) {
        return Err(Error::InvalidParameter(format!(
            "regular triangle-free factor defined for 3 <= Δ <= {THM2_MAX_DELTA}, got {delta}"
        )));
    }
    let d = delta as i64;
    let c = (d - 1) * (d + 1);
    let denom = (1i64 << delta) * d * d + c;
    Ok((Rational::one() + Rational::new(c, denom)) / 2)
}

/// `5·diss / 8`, for triangle-free cubic graphs.
pub fn bound_tf_cubic(diss: usize) -> Rational {
    int(diss) * Rational::new(5, 8)
}

/// Conjectured `5·diss/8 − 1/4` for connected triangle-free subcubic graphs.
pub fn bound_conjecture2(diss: usize) -> Rational {
    int(diss) * Rational::new(5, 8) - Rational::new(1, 4)
}

/// `max_{1<=i<=Δ} 2^i·i·(Δ−i+1)`, which the expectation estimate relies on
/// being `2^Δ·Δ`.
pub fn max_weighted_term(delta: u32) -> u128 {
    (1..=delta)
        .map(|i| (1u128 << i) * i as u128 * (delta - i + 1) as u128)
        .max()
        .unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub name: &'static str,
    /// Proven bounds must hold; the conjectured one is only reported.
    pub proven: bool,
    pub applicable: bool,
    #[serde(serialize_with = "ser_rational")]
    pub bound_value: Rational,
    pub alpha: usize,
    pub satisfied: bool,
    pub tight: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub class: GraphClass,
    pub alpha: usize,
    pub diss: usize,
    pub records: Vec<BoundRecord>,
}

impl BoundReport {
    pub fn record(&self, name: &str) -> Option<&BoundRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    /// Applicable proven bounds that fail; any entry is a falsification.
    pub fn violations(&self) -> impl Iterator<Item = &BoundRecord> {
        self.records.iter().filter(|r| r.proven && r.applicable && !r.satisfied)
    }

    /// Applicable conjectured bounds that fail.
    pub fn findings(&self) -> impl Iterator<Item = &BoundRecord> {
        self.records
            .iter()
            .filter(|r| !r.proven && r.applicable && !r.satisfied)
    }
}

/// Evaluates every bound against exact α and diss.
pub fn check_all_bounds(g: &Graph) -> Result<BoundReport> {
    let alpha = max_independent_set(g)?.value;
    let diss = max_dissociation_set(g)?.value;
    Ok(bound_report(classify(g), alpha, diss))
}

/// Same as [`check_all_bounds`] for already-known α and diss.
pub fn bound_report(class: GraphClass, alpha: usize, diss: usize) -> BoundReport {
    let delta = class.max_degree;
    let record = |name, proven, applicable: bool, value: Option<Rational>| {
        let bound_value = value.unwrap_or_else(Rational::zero);
        let a = int(alpha);
        BoundRecord {
            name,
            proven,
            applicable,
            bound_value,
            alpha,
            satisfied: a >= bound_value,
            tight: a == bound_value,
        }
    };
    let cubic_connected = class.connected && class.cubic && class.n >= 6;
    let prop1 = bound_prop1(diss, delta).ok();
    let thm2 = bound_thm2_factor(delta).ok().map(|f| f * int(diss));
    let records = vec![
        record("basic", true, true, Some(bound_basic(diss))),
        record("thm1", true, cubic_connected, Some(bound_thm1(diss))),
        record(
            "prop1",
            true,
            class.connected && class.bipartite && prop1.is_some(),
            prop1,
        ),
        record(
            "thm2",
            true,
            class.triangle_free && class.regular && thm2.is_some(),
            thm2,
        ),
        record(
            "tf_cubic",
            true,
            class.triangle_free && class.cubic,
            Some(bound_tf_cubic(diss)),
        ),
        record(
            "conjecture2",
            false,
            class.connected && class.triangle_free && class.subcubic,
            Some(bound_conjecture2(diss)),
        ),
    ];
    BoundReport {
        class,
        alpha,
        diss,
        records,
    }
}
