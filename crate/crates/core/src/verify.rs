//! Cross-checks between the engines, the geometry oracle and the
//! combinatorics, packaged as named checks for the command-line harness.

use std::collections::BTreeSet;
use std::thread;

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinat::{
    component_cycle_check, enumerate_graphs, gamma, gamma_inverse, satisfies_hall,
    sequences_in_box, structure_counts, LabeledMultigraph,
};
use crate::ehrhart::{
    coefficient_transfer_check, ehrhart, ehrhart_closed_with, f_polynomial, f_polynomial_stable,
    structure_egf_counts, volume_closed, Method,
};
use crate::error::Result;
use crate::exactmath::{rat, rat_frac, signed_double_factorial, RationalPoly};
use crate::polytope::{PartialPermutohedron, DEFAULT_LATTICE_BUDGET};

/// Deliberate corruptions used to confirm that the harness can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Negates every double factorial inside the closed double sum.
    DoubleFactorialSign,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub max_m: usize,
    pub max_t: u64,
    pub seed: u64,
    pub budget: u128,
    pub fault: Option<Fault>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_m: 6,
            max_t: 3,
            seed: 0,
            budget: DEFAULT_LATTICE_BUDGET,
            fault: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// What was covered on success, the first mismatch on failure.
    pub detail: String,
}

pub const CHECK_NAMES: [&str; 13] = [
    "closed-vs-postnikov",
    "closed-vs-graphsum",
    "closed-vs-egf",
    "closed-vs-egf-tree",
    "closed-vs-recurrence",
    "ehrhart-shape",
    "oracle-lattice-count",
    "volume-leading-coefficient",
    "structure-counts",
    "bijection",
    "hall-vs-cycles",
    "coefficient-transfer",
    "f-polynomial",
];

type Verdict = std::result::Result<String, String>;

/// Runs every check, in parallel, and reports them in [`CHECK_NAMES`]
/// order. Engine errors become failures of the check that hit them.
pub fn run_checks(opts: &VerifyOptions) -> Vec<CheckOutcome> {
    thread::scope(|s| {
        let handles: Vec<_> = CHECK_NAMES
            .iter()
            .map(|&name| s.spawn(move || (name, run_one(name, opts))))
            .collect();
        handles
            .into_iter()
            .map(|h| {
                let (name, verdict) = h
                    .join()
                    .unwrap_or_else(|_| ("panicked", Err("check panicked".into())));
                match verdict {
                    Ok(detail) => CheckOutcome {
                        name,
                        passed: true,
                        detail,
                    },
                    Err(detail) => CheckOutcome {
                        name,
                        passed: false,
                        detail,
                    },
                }
            })
            .collect()
    })
}

fn run_one(name: &str, opts: &VerifyOptions) -> Verdict {
    let out = match name {
        "closed-vs-postnikov" => engine_agreement(opts, Method::Postnikov),
        "closed-vs-graphsum" => engine_agreement(opts, Method::GraphSum),
        "closed-vs-egf" => engine_agreement(opts, Method::Egf),
        "closed-vs-egf-tree" => engine_agreement(opts, Method::EgfTree),
        "closed-vs-recurrence" => engine_agreement(opts, Method::Recurrence),
        "ehrhart-shape" => ehrhart_shape(opts),
        "oracle-lattice-count" => oracle_lattice_count(opts),
        "volume-leading-coefficient" => volume_leading(opts),
        "structure-counts" => structures(opts),
        "bijection" => bijection(opts),
        "hall-vs-cycles" => hall_vs_cycles(opts),
        "coefficient-transfer" => coefficient_transfer(opts),
        "f-polynomial" => f_poly(opts),
        other => return Err(format!("unknown check '{other}'")),
    };
    out.unwrap_or_else(|e| Err(e.to_string()))
}

fn closed(opts: &VerifyOptions, m: usize, n: u64) -> Result<RationalPoly> {
    match opts.fault {
        None => ehrhart_closed_with(m, n, &signed_double_factorial),
        Some(Fault::DoubleFactorialSign) => {
            ehrhart_closed_with(m, n, &|k| signed_double_factorial(k).map(|v| -v))
        }
    }
}

fn parking_range(m: usize) -> std::ops::RangeInclusive<u64> {
    (m as u64).saturating_sub(1).max(1)..=m as u64 + 2
}

fn engine_agreement(opts: &VerifyOptions, method: Method) -> Result<Verdict> {
    let mut cases = 0;
    for m in 1..=opts.max_m {
        for n in parking_range(m) {
            let reference = closed(opts, m, n)?;
            let other = ehrhart(m, n, method)?.polynomial;
            if reference != other {
                return Ok(Err(format!(
                    "m={m} n={n}: closed {reference} vs {method} {other}"
                )));
            }
            cases += 1;
        }
    }
    Ok(Ok(format!("{cases} polynomials, m <= {}", opts.max_m)))
}

fn ehrhart_shape(opts: &VerifyOptions) -> Result<Verdict> {
    for m in 1..=opts.max_m {
        for n in parking_range(m) {
            let p = closed(opts, m, n)?;
            if p.degree() != Some(m) {
                return Ok(Err(format!("m={m} n={n}: degree {:?}", p.degree())));
            }
            if p.coeff(0) != rat(1) {
                return Ok(Err(format!("m={m} n={n}: constant term {}", p.coeff(0))));
            }
            if p.coefficients().iter().any(|c| !c.is_positive()) {
                return Ok(Err(format!("m={m} n={n}: nonpositive coefficient in {p}")));
            }
        }
    }
    Ok(Ok("degree m, constant 1, positive coefficients".into()))
}

fn oracle_lattice_count(opts: &VerifyOptions) -> Result<Verdict> {
    let mut cases = 0;
    for m in 1..=opts.max_m.min(4) {
        for n in (m as u64).saturating_sub(1).max(1)..=4 {
            let p = closed(opts, m, n)?;
            let poly = PartialPermutohedron::new(m, n)?;
            for t in 1..=opts.max_t {
                let counted = poly.count_lattice_points(t, opts.budget)?;
                let predicted = p.eval_int(t as i64);
                if predicted != rat(counted as i64) {
                    return Ok(Err(format!(
                        "m={m} n={n} t={t}: polynomial gives {predicted}, enumeration {counted}"
                    )));
                }
                cases += 1;
            }
        }
        // parking-function polytope, shifted off the origin
        if m <= opts.max_m.min(4) {
            let p = closed(opts, m, (m as u64).max(2) - 1)?;
            let counted = PartialPermutohedron::new(m, (m as u64).max(2) - 1)?
                .count_lattice_points(1, opts.budget)?;
            if p.eval_int(1) != rat(counted as i64) {
                return Ok(Err(format!(
                    "parking m={m}: {} vs {counted}",
                    p.eval_int(1)
                )));
            }
        }
    }
    Ok(Ok(format!("{cases} lattice counts, t <= {}", opts.max_t)))
}

fn volume_leading(opts: &VerifyOptions) -> Result<Verdict> {
    for m in 1..=opts.max_m {
        for n in [m as u64 - 1, m as u64, m as u64 + 1] {
            if n == 0 {
                continue;
            }
            let lead = closed(opts, m, n)?.coeff(m);
            let vol = volume_closed(m, n)?;
            if lead != vol {
                return Ok(Err(format!("m={m} n={n}: leading {lead} vs volume {vol}")));
            }
        }
    }
    Ok(Ok(format!("m <= {}", opts.max_m)))
}

fn structures(opts: &VerifyOptions) -> Result<Verdict> {
    for m in 1..=opts.max_m {
        let found = structure_counts(m)?;
        let mm = m as u64;
        let trees = if m == 1 { 1 } else { mm.pow(m as u32 - 2) };
        let looped = mm.pow(m as u32 - 1);
        let enhanced = if m == 1 {
            0
        } else {
            (mm - 1) * mm.pow(m as u32 - 2)
        };
        let [egf_trees, egf_looped, egf_enhanced, egf_quasi] = structure_egf_counts(m)?;
        let enumerated = [
            found.trees,
            found.looped_trees,
            found.enhanced_trees,
            found.quasitrees,
        ];
        let egf = [egf_trees, egf_looped, egf_enhanced, egf_quasi.clone()];
        let closed_forms = [Some(trees), Some(looped), Some(enhanced), None];
        for k in 0..4 {
            if egf[k] != rat(enumerated[k] as i64)
                || closed_forms[k].is_some_and(|c| c != enumerated[k])
            {
                return Ok(Err(format!(
                    "m={m}: enumerated {enumerated:?}, generating functions {}",
                    egf.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                )));
            }
        }
    }
    Ok(Ok(format!("m <= {}", opts.max_m)))
}

fn bijection(opts: &VerifyOptions) -> Result<Verdict> {
    for m in 1..=opts.max_m.min(4) {
        // admissible sequences never exceed one loop per vertex or two
        // parallel edges per pair
        let mut images = BTreeSet::new();
        let mut admissible = 0u64;
        for a in sequences_in_box(m, 1, 2).filter(satisfies_hall) {
            let g = gamma(&a)?;
            if gamma_inverse(&g)? != a {
                return Ok(Err(format!("m={m}: round trip lost {a}")));
            }
            images.insert(g);
            admissible += 1;
        }
        let graphs: BTreeSet<LabeledMultigraph> = enumerate_graphs(m)?.collect();
        if images != graphs || admissible != graphs.len() as u64 {
            return Ok(Err(format!(
                "m={m}: {admissible} sequences vs {} graphs",
                graphs.len()
            )));
        }
    }
    Ok(Ok(format!("m <= {}", opts.max_m.min(4))))
}

fn hall_vs_cycles(opts: &VerifyOptions) -> Result<Verdict> {
    let mut cases = 0u64;
    for m in 1..=opts.max_m.min(3) {
        for a in sequences_in_box(m, 2, 3) {
            let g = LabeledMultigraph::new(m, a.loops().to_vec(), a.pairs().to_vec());
            if satisfies_hall(&a) != component_cycle_check(&g) {
                return Ok(Err(format!("m={m}: disagreement at {a}")));
            }
            cases += 1;
        }
    }
    Ok(Ok(format!("{cases} sequences")))
}

fn coefficient_transfer(opts: &VerifyOptions) -> Result<Verdict> {
    let mut polys: Vec<RationalPoly> = (0..=8).map(|d| RationalPoly::monomial(rat(1), d)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..50 {
        let degree = rng.gen_range(0..=6);
        let coeffs = (0..=degree)
            .map(|_| rat_frac(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
            .collect();
        polys.push(RationalPoly::new(coeffs));
    }
    for f in &polys {
        for k in 0..=8 {
            let (lhs, rhs) = coefficient_transfer_check(f, k)?;
            if lhs != rhs {
                return Ok(Err(format!("f={f} k={k}: {lhs} vs {rhs}")));
            }
        }
    }
    Ok(Ok(format!(
        "{} polynomials, seed {}",
        polys.len(),
        opts.seed
    )))
}

fn f_poly(opts: &VerifyOptions) -> Result<Verdict> {
    let top = opts.max_m.min(4);
    for m in 1..=top {
        for n in 1..=5u64 {
            let f = f_polynomial(m, n)?;
            let p = PartialPermutohedron::new(m, n)?;
            if f.coeff(0) != rat(p.vertices().len() as i64)
                || f.coeff(m - 1) != rat(p.facets().len() as i64)
            {
                return Ok(Err(format!(
                    "m={m} n={n}: {f} disagrees with the vertex or facet count"
                )));
            }
            if n >= m as u64 && f != f_polynomial_stable(m, n)? {
                return Ok(Err(format!("m={m} n={n}: not stable")));
            }
        }
    }
    Ok(Ok(format!("m <= {top}, n <= 5")))
}
