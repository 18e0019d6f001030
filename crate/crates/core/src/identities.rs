//! Exact-rational checks of the summation identities behind the census
//! formulas, including their real-parameter generalizations.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exact::{format_rational, int, ipow, pow, product, ratio, sum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    /// `(n-1)^(n-1)` as a sum over roots of `K_n`.
    Identity1,
    /// `m^(n-1) n^(m-1)` as a sum over highest children in `K_{m,n}`.
    Identity2,
    /// Root count of `K_n` as a sum over highest children.
    Refinement,
    /// `(n-1)^(n-1)` as a double sum over root and highest child.
    SumRefine,
    Simplified1,
    Simplified2,
    /// The refinement divided through by `n^(n-k-2) (n-1)^(k-1)`.
    Simplified3,
    GeneralA,
    /// `(n-1)^(n-3) (n-2)^2` as a sum over roots of `K_n` minus `{1,n}`.
    MinusEdgeTotal,
    MinusEdgeSimplified,
    GeneralAPrime,
}

impl IdentityId {
    pub const ALL: [IdentityId; 11] = [
        IdentityId::Identity1,
        IdentityId::Identity2,
        IdentityId::Refinement,
        IdentityId::SumRefine,
        IdentityId::Simplified1,
        IdentityId::Simplified2,
        IdentityId::Simplified3,
        IdentityId::GeneralA,
        IdentityId::MinusEdgeTotal,
        IdentityId::MinusEdgeSimplified,
        IdentityId::GeneralAPrime,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Identity1 => "identity1",
            IdentityId::Identity2 => "identity2",
            IdentityId::Refinement => "refinement",
            IdentityId::SumRefine => "sumrefine",
            IdentityId::Simplified1 => "simplified-1",
            IdentityId::Simplified2 => "simplified-2",
            IdentityId::Simplified3 => "simplified-3",
            IdentityId::GeneralA => "general-a",
            IdentityId::MinusEdgeTotal => "kn-minus-edge-total",
            IdentityId::MinusEdgeSimplified => "kn-minus-edge-simplified",
            IdentityId::GeneralAPrime => "general-a-prime",
        }
    }

    pub fn parse(text: &str) -> Result<IdentityId> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == text)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown identity `{text}`")))
    }
}

/// Both sides of one identity instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub params: Vec<(&'static str, BigRational)>,
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub holds: bool,
    /// Summands of whichever side is a sum, in summation order. Only the
    /// general-parameter forms keep their sum on the left.
    pub terms: Vec<BigRational>,
}

impl IdentityReport {
    fn new(
        id: IdentityId,
        params: Vec<(&'static str, BigRational)>,
        lhs: BigRational,
        terms: Vec<BigRational>,
    ) -> Self {
        let rhs = sum(&terms);
        IdentityReport {
            id,
            params,
            holds: lhs == rhs,
            lhs,
            rhs,
            terms,
        }
    }

    /// Running sums of `terms`.
    pub fn partial_sums(&self) -> Vec<BigRational> {
        let mut acc = BigRational::zero();
        self.terms
            .iter()
            .map(|t| {
                acc += t;
                acc.clone()
            })
            .collect()
    }

    /// One JSON line; rationals as `p/q` strings. Failing reports also carry
    /// the partial sums of the summation side.
    pub fn to_json(&self) -> Value {
        let mut params = Map::new();
        for (name, v) in &self.params {
            params.insert((*name).to_string(), Value::String(format_rational(v)));
        }
        let mut out = json!({
            "identity": self.id.as_str(),
            "params": params,
            "lhs": format_rational(&self.lhs),
            "rhs": format_rational(&self.rhs),
            "holds": self.holds,
        });
        if !self.holds {
            out["partial_sums"] = self
                .partial_sums()
                .iter()
                .map(|s| Value::String(format_rational(s)))
                .collect();
        }
        out
    }
}

fn bad(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

fn p(name: &'static str, v: usize) -> (&'static str, BigRational) {
    (name, int(v as i64))
}

pub fn verify_identity1(n: usize) -> Result<IdentityReport> {
    if n < 2 {
        return Err(bad(format!("identity1 needs n >= 2, got {n}")));
    }
    let n = n as i64;
    let terms = (0..n)
        .map(|k| Ok(product(&[int(n - 1 - k), ipow(n, n - 2 - k)?, ipow(n - 1, k - 1)?])))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdentityReport::new(
        IdentityId::Identity1,
        vec![p("n", n as usize)],
        ipow(n - 1, n - 1)?,
        terms,
    ))
}

pub fn verify_identity2(m: usize, n: usize) -> Result<IdentityReport> {
    if m < 1 || n < 2 {
        return Err(bad(format!("identity2 needs m >= 1 and n >= 2, got m={m}, n={n}")));
    }
    let (m, n) = (m as i64, n as i64);
    let lead = ipow(m, n - 2)?;
    let terms = (1..=m)
        .map(|k| {
            Ok(product(&[
                lead.clone(),
                ipow(n, m - k - 1)?,
                ipow(n - 1, k - 1)?,
                int(m + n - k),
            ]))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IdentityReport::new(
        IdentityId::Identity2,
        vec![p("m", m as usize), p("n", n as usize)],
        product(&[ipow(m, n - 1)?, ipow(n, m - 1)?]),
        terms,
    ))
}

fn refinement_terms(n: i64, k: i64) -> Result<Vec<BigRational>> {
    (1..n - k)
        .map(|j| {
            Ok(product(&[
                ipow(n, n - k - j - 2)?,
                ipow(n - 1, k + j - 2)?,
                int(2 * n - k - j - 1),
            ]))
        })
        .collect()
}

pub fn verify_refinement(n: usize, k: usize) -> Result<IdentityReport> {
    if n < 2 || k > n - 2 {
        return Err(bad(format!(
            "refinement needs n >= 2 and 0 <= k <= n-2, got n={n}, k={k}"
        )));
    }
    let (ni, ki) = (n as i64, k as i64);
    Ok(IdentityReport::new(
        IdentityId::Refinement,
        vec![p("n", n), p("k", k)],
        product(&[int(ni - 1 - ki), ipow(ni, ni - 2 - ki)?, ipow(ni - 1, ki - 1)?]),
        refinement_terms(ni, ki)?,
    ))
}

pub fn verify_sumrefine(n: usize) -> Result<IdentityReport> {
    if n < 2 {
        return Err(bad(format!("sumrefine needs n >= 2, got {n}")));
    }
    let n = n as i64;
    let mut terms = Vec::new();
    for k in 0..n {
        terms.extend(refinement_terms(n, k)?);
    }
    Ok(IdentityReport::new(
        IdentityId::SumRefine,
        vec![p("n", n as usize)],
        ipow(n - 1, n - 1)?,
        terms,
    ))
}

/// `sum_{k=0}^{n-1} (a/(a-1))^(n-2-k) (1 - k/(a-1))`, shared by the
/// simplified and general forms.
fn ratio_sum(n: i64, a: &BigRational) -> Result<Vec<BigRational>> {
    let one = BigRational::one();
    let base = a / (a - &one);
    (0..n)
        .map(|k| Ok(product(&[pow(&base, n - 2 - k)?, &one - int(k) / (a - &one)])))
        .collect()
}

pub fn verify_simplified_1(n: usize) -> Result<IdentityReport> {
    if n < 2 {
        return Err(bad(format!("simplified-1 needs n >= 2, got {n}")));
    }
    let ni = n as i64;
    Ok(IdentityReport::new(
        IdentityId::Simplified1,
        vec![p("n", n)],
        int(ni - 1),
        ratio_sum(ni, &int(ni))?,
    ))
}

pub fn verify_simplified_2(m: usize, n: usize) -> Result<IdentityReport> {
    if m < 1 || n < 2 {
        return Err(bad(format!("simplified-2 needs m >= 1 and n >= 2, got m={m}, n={n}")));
    }
    let (mi, ni) = (m as i64, n as i64);
    let base = ratio(ni - 1, ni);
    let terms = (1..=mi)
        .map(|j| Ok(product(&[pow(&base, j - 1)?, ratio(mi + ni - j, ni)])))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdentityReport::new(
        IdentityId::Simplified2,
        vec![p("m", m), p("n", n)],
        int(mi),
        terms,
    ))
}

pub fn verify_simplified_3(n: usize, k: usize) -> Result<IdentityReport> {
    if n < 2 || k > n - 1 {
        return Err(bad(format!(
            "simplified-3 needs n >= 2 and 0 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    let (ni, ki) = (n as i64, k as i64);
    let base = ratio(ni - 1, ni);
    let terms = (1..ni - ki)
        .map(|j| Ok(product(&[pow(&base, j - 1)?, ratio(2 * ni - ki - j - 1, ni)])))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdentityReport::new(
        IdentityId::Simplified3,
        vec![p("n", n), p("k", k)],
        int(ni - 1 - ki),
        terms,
    ))
}

/// The general identity with free parameter `a` (any rational except 0 and 1):
/// `sum_{k=0}^{n-1} (a/(a-1))^(n-2-k) (1 - k/(a-1)) = (n-1) + (a-n)/a`.
/// Both sides are compared directly; the right side is not a sum.
pub fn verify_general_a(n: usize, a: &BigRational) -> Result<IdentityReport> {
    if n < 2 {
        return Err(bad(format!("general-a needs n >= 2, got {n}")));
    }
    if a.is_zero() || a.is_one() {
        return Err(bad(format!("general-a excludes a = {a}")));
    }
    let ni = n as i64;
    let rhs = int(ni - 1) + (a - int(ni)) / a;
    // reported with the sum on the left
    let terms = ratio_sum(ni, a)?;
    let lhs = sum(&terms);
    Ok(IdentityReport {
        id: IdentityId::GeneralA,
        params: vec![p("n", n), ("a", a.clone())],
        holds: lhs == rhs,
        lhs,
        rhs,
        terms,
    })
}

fn minus_edge_bracket(n: i64, k: i64) -> BigRational {
    int(n - 3 - k) + ratio(2 * n * k + n - k - 2, n * (n - 1))
}

pub fn verify_kn_minus_edge_total(n: usize) -> Result<IdentityReport> {
    if n < 3 {
        return Err(bad(format!("kn-minus-edge-total needs n >= 3, got {n}")));
    }
    let ni = n as i64;
    let mut terms = vec![product(&[ipow(ni, ni - 3)?, int(ni - 2)])];
    for k in 1..=ni - 2 {
        terms.push(product(&[
            ipow(ni, ni - 2 - k)?,
            ipow(ni - 1, k - 1)?,
            minus_edge_bracket(ni, k),
        ]));
    }
    Ok(IdentityReport::new(
        IdentityId::MinusEdgeTotal,
        vec![p("n", n)],
        product(&[ipow(ni - 1, ni - 3)?, ipow(ni - 2, 2)?]),
        terms,
    ))
}

/// Terms of `(a/(a-1))^(n-3) + sum_{k=1}^{n-2} (a/(a-1))^(n-2-k)
/// ((a-3-k)/(a-2) + (2ak+a-k-2)/(a(a-1)(a-2)))`.
fn minus_edge_ratio_terms(n: i64, a: &BigRational) -> Result<Vec<BigRational>> {
    let one = BigRational::one();
    let two = int(2);
    let base = a / (a - &one);
    let mut terms = vec![pow(&base, n - 3)?];
    for k in 1..=n - 2 {
        let kq = int(k);
        let first = (a - int(3) - &kq) / (a - &two);
        let second = (&two * a * &kq + a - &kq - &two) / (a * (a - &one) * (a - &two));
        terms.push(product(&[pow(&base, n - 2 - k)?, first + second]));
    }
    Ok(terms)
}

pub fn verify_rmrk_sec5(n: usize) -> Result<IdentityReport> {
    if n < 3 {
        return Err(bad(format!("kn-minus-edge-simplified needs n >= 3, got {n}")));
    }
    let ni = n as i64;
    Ok(IdentityReport::new(
        IdentityId::MinusEdgeSimplified,
        vec![p("n", n)],
        int(ni - 2),
        minus_edge_ratio_terms(ni, &int(ni))?,
    ))
}

/// General form with `a` outside `{0, 1, 2}`: the ratio sum equals
/// `(n-2) + (1 + (n-(n-1)a)/(a(a-2)))`.
pub fn verify_general_a_prime(n: usize, a: &BigRational) -> Result<IdentityReport> {
    if n < 3 {
        return Err(bad(format!("general-a-prime needs n >= 3, got {n}")));
    }
    if a.is_zero() || a.is_one() || *a == int(2) {
        return Err(bad(format!("general-a-prime excludes a = {a}")));
    }
    let ni = n as i64;
    let rhs = int(ni - 2) + (int(1) + (int(ni) - int(ni - 1) * a) / (a * (a - int(2))));
    let terms = minus_edge_ratio_terms(ni, a)?;
    let lhs = sum(&terms);
    Ok(IdentityReport {
        id: IdentityId::GeneralAPrime,
        params: vec![p("n", n), ("a", a.clone())],
        holds: lhs == rhs,
        lhs,
        rhs,
        terms,
    })
}

/// Runs one identity at explicit parameters, naming the first missing one.
pub fn verify_instance(
    id: IdentityId,
    n: Option<usize>,
    m: Option<usize>,
    k: Option<usize>,
    a: Option<&BigRational>,
) -> Result<IdentityReport> {
    let need = |v: Option<usize>, name: &str| v.ok_or_else(|| bad(format!("{} needs --{name}", id.as_str())));
    let n = need(n, "n")?;
    let a_or_n = || a.cloned().unwrap_or_else(|| int(n as i64));
    match id {
        IdentityId::Identity1 => verify_identity1(n),
        IdentityId::Identity2 => verify_identity2(need(m, "m")?, n),
        IdentityId::Refinement => verify_refinement(n, need(k, "k")?),
        IdentityId::SumRefine => verify_sumrefine(n),
        IdentityId::Simplified1 => verify_simplified_1(n),
        IdentityId::Simplified2 => verify_simplified_2(need(m, "m")?, n),
        IdentityId::Simplified3 => verify_simplified_3(n, need(k, "k")?),
        IdentityId::GeneralA => verify_general_a(n, &a_or_n()),
        IdentityId::MinusEdgeTotal => verify_kn_minus_edge_total(n),
        IdentityId::MinusEdgeSimplified => verify_rmrk_sec5(n),
        IdentityId::GeneralAPrime => verify_general_a_prime(n, &a_or_n()),
    }
}

/// Sweeps every identity over its parameter grid: `n` up to `n_max`, `m` up
/// to `m_max`, and for the general forms every supplied `a` (skipping the
/// excluded points) plus `a = n`.
pub fn verify_all(n_max: usize, m_max: usize, a_samples: &[BigRational]) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    let ns = |lo: usize| lo..=n_max;
    for n in ns(2) {
        out.push(verify_identity1(n)?);
    }
    for m in 1..=m_max {
        for n in ns(2) {
            out.push(verify_identity2(m, n)?);
        }
    }
    for n in ns(2) {
        for k in 0..=n - 2 {
            out.push(verify_refinement(n, k)?);
        }
    }
    for n in ns(2) {
        out.push(verify_sumrefine(n)?);
    }
    for n in ns(2) {
        out.push(verify_simplified_1(n)?);
    }
    for m in 1..=m_max {
        for n in ns(2) {
            out.push(verify_simplified_2(m, n)?);
        }
    }
    for n in ns(2) {
        for k in 0..n {
            out.push(verify_simplified_3(n, k)?);
        }
    }
    for n in ns(2) {
        for a in with_diagonal(a_samples, n) {
            if !(a.is_zero() || a.is_one()) {
                out.push(verify_general_a(n, &a)?);
            }
        }
    }
    for n in ns(3) {
        out.push(verify_kn_minus_edge_total(n)?);
    }
    for n in ns(3) {
        out.push(verify_rmrk_sec5(n)?);
    }
    for n in ns(3) {
        for a in with_diagonal(a_samples, n) {
            if !(a.is_zero() || a.is_one() || a == int(2)) {
                out.push(verify_general_a_prime(n, &a)?);
            }
        }
    }
    Ok(out)
}

/// The samples plus `a = n`, sorted and deduplicated.
fn with_diagonal(samples: &[BigRational], n: usize) -> Vec<BigRational> {
    let mut all: Vec<BigRational> = samples.to_vec();
    all.push(int(n as i64));
    all.sort();
    all.dedup();
    all
}
