//! One pass/fail line per acceptance criterion; every comparison is exact.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigInt;
use permutoehr::combinat::{
    component_cycle_check, enumerate_graphs, gamma, gamma_inverse, satisfies_hall,
    sequences_in_box, structure_counts, LabeledMultigraph,
};
use permutoehr::ehrhart::{
    coefficient_transfer_check, ehrhart, ehrhart_closed, f_polynomial, f_polynomial_stable,
    structure_egf_counts, volume_closed, Method,
};
use permutoehr::exactmath::{binomial, factorial, rat, rat_frac, RationalPoly};
use permutoehr::polytope::{PartialPermutohedron, DEFAULT_LATTICE_BUDGET};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn low_n(m: usize) -> u64 {
    (m as u64).saturating_sub(1).max(1)
}

fn count(m: usize, n: u64, t: u64) -> u128 {
    PartialPermutohedron::new(m, n)
        .unwrap()
        .count_lattice_points(t, DEFAULT_LATTICE_BUDGET)
        .unwrap()
}

fn five_way_agreement() -> Outcome {
    let mut cases = 0;
    for m in 1..=6usize {
        for n in low_n(m)..=m as u64 + 2 {
            let closed = ehrhart_closed(m, n).map_err(|e| e.to_string())?;
            for method in Method::ALL {
                let p = ehrhart(m, n, method).map_err(|e| e.to_string())?.polynomial;
                ensure(p == closed, || {
                    format!("m={m} n={n} {method}: {p} vs {closed}")
                })?;
            }
            cases += 1;
        }
    }
    Ok(format!(
        "{cases} (m, n) pairs, {} engines each",
        Method::ALL.len()
    ))
}

fn lattice_oracle() -> Outcome {
    let mut cases = 0;
    for m in 1..=4usize {
        for n in low_n(m)..=4 {
            let p = ehrhart_closed(m, n).unwrap();
            for t in 1..=3u64 {
                let c = count(m, n, t);
                ensure(p.eval_int(t as i64) == rat(c as i64), || {
                    format!("m={m} n={n} t={t}: {} vs {c}", p.eval_int(t as i64))
                })?;
                cases += 1;
            }
        }
    }
    for n in 1..=4i64 {
        for t in 1..=3i64 {
            let anchor = (rat(n * n) - rat_frac(1, 2)) * rat(t * t)
                + (rat(2 * n) - rat_frac(1, 2)) * rat(t)
                + rat(1);
            let p = ehrhart_closed(2, n as u64).unwrap();
            ensure(p.eval_int(t) == anchor, || format!("anchor n={n} t={t}"))?;
            ensure(anchor == rat(count(2, n as u64, t as u64) as i64), || {
                format!("anchor vs enumeration n={n} t={t}")
            })?;
        }
    }
    Ok(format!("{cases} dilates plus the planar anchor"))
}

fn volume() -> Outcome {
    for m in 1..=6usize {
        for n in [m as u64 - 1, m as u64, m as u64 + 1] {
            if n == 0 {
                continue;
            }
            let lead = ehrhart_closed(m, n).unwrap().coeff(m);
            let vol = volume_closed(m, n).unwrap();
            ensure(lead == vol, || format!("m={m} n={n}: {lead} vs {vol}"))?;
        }
    }
    for n in 1..=6i64 {
        let lead = ehrhart_closed(2, n as u64).unwrap().coeff(2);
        ensure(lead == rat(n * n) - rat_frac(1, 2), || {
            format!("planar n={n}")
        })?;
    }
    Ok("m <= 6, n in {m-1, m, m+1}".into())
}

fn vertices_and_facets() -> Outcome {
    for m in 1..=5usize {
        for n in 1..=5u64 {
            let p = PartialPermutohedron::new(m, n).unwrap();
            let r = m.min(n as usize) as u64;
            let falling = |i: u64| factorial(m as u64) / factorial(m as u64 - i);
            let verts: BigInt = (0..=r).map(falling).sum();
            let facets: BigInt =
                BigInt::from(m) + (0..r).map(|i| binomial(m as u64, i)).sum::<BigInt>();
            ensure(BigInt::from(p.vertices().len()) == verts, || {
                format!("vertices m={m} n={n}")
            })?;
            ensure(BigInt::from(p.facets().len()) == facets, || {
                format!("facets m={m} n={n}")
            })?;
        }
    }
    Ok("m, n <= 5".into())
}

fn structures() -> Outcome {
    for m in 1..=7usize {
        let s = structure_counts(m).unwrap();
        let mm = m as u64;
        let cayley = |e: i64| if e < 0 { 1 } else { mm.pow(e as u32) };
        let trees = if m == 1 { 1 } else { cayley(m as i64 - 2) };
        let enhanced = if m == 1 {
            0
        } else {
            (mm - 1) * cayley(m as i64 - 2)
        };
        ensure(s.trees == trees, || format!("trees m={m}: {}", s.trees))?;
        ensure(s.looped_trees == cayley(m as i64 - 1), || {
            format!("looped m={m}")
        })?;
        ensure(s.enhanced_trees == enhanced, || format!("enhanced m={m}"))?;
        let egf = structure_egf_counts(m).unwrap();
        let found = [s.trees, s.looped_trees, s.enhanced_trees, s.quasitrees];
        for (e, f) in egf.iter().zip(found) {
            ensure(*e == rat(f as i64), || {
                format!("m={m}: generating function {e} vs {f}")
            })?;
        }
    }
    Ok("m <= 7".into())
}

fn bijection_and_hall() -> Outcome {
    for m in 1..=4usize {
        let mut images = BTreeSet::new();
        let mut admissible = 0usize;
        for a in sequences_in_box(m, 1, 2).filter(satisfies_hall) {
            let g = gamma(&a).unwrap();
            ensure(gamma_inverse(&g).unwrap() == a, || {
                format!("round trip {a}")
            })?;
            images.insert(g);
            admissible += 1;
        }
        let graphs: BTreeSet<LabeledMultigraph> = enumerate_graphs(m).unwrap().collect();
        ensure(admissible == graphs.len() && images == graphs, || {
            format!("m={m}: |A| = {admissible}, |G| = {}", graphs.len())
        })?;
    }
    for m in 1..=3usize {
        for a in sequences_in_box(m, 2, 3) {
            let g = LabeledMultigraph::new(m, a.loops().to_vec(), a.pairs().to_vec());
            ensure(satisfies_hall(&a) == component_cycle_check(&g), || {
                format!("{a}")
            })?;
        }
    }
    Ok("bijection m <= 4, Hall box m <= 3".into())
}

fn coefficient_transfer() -> Outcome {
    let mut polys: Vec<RationalPoly> = (0..=8).map(|d| RationalPoly::monomial(rat(1), d)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..50 {
        let degree = rng.gen_range(0..=8);
        polys.push(RationalPoly::new(
            (0..=degree)
                .map(|_| rat_frac(rng.gen_range(-20..=20), rng.gen_range(1..=6)))
                .collect(),
        ));
    }
    for f in &polys {
        for k in 0..=8 {
            let (lhs, rhs) = coefficient_transfer_check(f, k).unwrap();
            ensure(lhs == rhs, || format!("f={f} k={k}"))?;
        }
    }
    Ok(format!("{} polynomials, k <= 8", polys.len()))
}

fn f_polynomials() -> Outcome {
    let triangle = RationalPoly::from_integers(&[3, 3, 1]);
    let pentagon = RationalPoly::from_integers(&[5, 5, 1]);
    ensure(f_polynomial(2, 1).unwrap() == triangle, || {
        "triangle".into()
    })?;
    ensure(f_polynomial(2, 2).unwrap() == pentagon, || {
        "pentagon".into()
    })?;
    ensure(f_polynomial_stable(2, 2).unwrap() == pentagon, || {
        "stable pentagon".into()
    })?;
    for m in 1..=4usize {
        let base = f_polynomial(m, m as u64).unwrap();
        for n in m as u64..=m as u64 + 4 {
            ensure(f_polynomial(m, n).unwrap() == base, || {
                format!("m={m} n={n}")
            })?;
        }
    }
    Ok("m <= 4".into())
}

fn parking() -> Outcome {
    // P(1, 0) is not admissible, so the parking polytope starts at m = 2
    let mut counts = Vec::new();
    for m in 2..=4usize {
        let n = m as u64 - 1;
        let predicted = ehrhart_closed(m, n).unwrap().eval_int(1);
        let c = count(m, n, 1);
        ensure(predicted == rat(c as i64), || {
            format!("m={m}: {predicted} vs {c}")
        })?;
        counts.push(c.to_string());
    }
    Ok(format!("m = 2..4: {}", counts.join(", ")))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("Ehrhart engines agree", five_way_agreement),
        ("lattice-point oracle", lattice_oracle),
        ("volume is the leading coefficient", volume),
        ("vertex and facet counts", vertices_and_facets),
        ("structure counts", structures),
        ("bijection and Hall equivalence", bijection_and_hall),
        ("coefficient transfer", coefficient_transfer),
        ("f-polynomials", f_polynomials),
        ("parking polytope count", parking),
    ];
    let mut failed = Vec::new();
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail}) [{secs:.2}s]", k + 1),
            Err(detail) => {
                println!("criterion {}: FAIL {name}: {detail} [{secs:.2}s]", k + 1);
                failed.push(k + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
