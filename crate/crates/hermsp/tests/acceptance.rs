//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hermsp::experiments::{census, realization_sweep};
use hermsp_core::algebra::{sample_with, AlgebraDescriptor, AlgebraElement, GroundRing, SampleKind};
use hermsp_core::catalog;
use hermsp_core::lines::{act, normalize_triple, IsotropicLine};
use hermsp_core::parametrization::{
    edge_matrix, extract, holonomy, sample_coordinates, synthesize, turn_matrix, verify_maximal,
};
use hermsp_core::surface::{
    build_gamma, build_polygon, surface_stats, FundamentalPolygon, SurfaceDescriptor, SurfaceStats,
};
use hermsp_core::symplectic::{random_sp2_word, Mat2, SymplecticElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const KINDS: [GroundRing; 3] = [GroundRing::Real, GroundRing::Complex, GroundRing::Quaternion];

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn desc(kind: GroundRing, n: usize) -> AlgebraDescriptor {
    AlgebraDescriptor::new(kind, n).unwrap()
}

fn polygon(spec: hermsp_core::surface::PolygonSpec) -> FundamentalPolygon {
    build_polygon(&spec).unwrap()
}

fn within(elapsed: Duration, budget: Duration) -> Result<(), String> {
    if elapsed < budget {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, budget {budget:?}"))
    }
}

fn relative(a: &AlgebraElement, b: &AlgebraElement) -> f64 {
    a.distance(b) / b.norm().max(f64::MIN_POSITIVE)
}

fn triangle_count_formula() -> Verdict {
    let cases = [
        ((1, 1, 0, 0), (-1, 2, 3, 2)),
        ((0, 0, 1, 3), (1, 1, 0, 0)),
        ((0, 0, 1, 4), (1, 2, 1, 0)),
        ((2, 1, 0, 0), (-3, 6, 9, 4)),
    ];
    let descriptors: Vec<SurfaceDescriptor> =
        cases.iter().map(|&((g, pi, m, pe), _)| SurfaceDescriptor::new(g, pi, m, pe)).collect();
    let start = Instant::now();
    let stats: Vec<_> = descriptors.iter().map(surface_stats).collect();
    let elapsed = start.elapsed();
    for ((d, (_, (chi, t, ein, k))), s) in descriptors.iter().zip(cases).zip(stats) {
        let s = s.map_err(|e| format!("{d:?}: {e}"))?;
        // 4g - 4 + 2 p_i + 2 m + p_e
        let formula = 4 * d.genus as i64 - 4
            + 2 * d.internal_punctures as i64
            + 2 * d.boundary_components as i64
            + d.external_punctures as i64;
        let expected = SurfaceStats { chi, triangles: t, internal_edges: ein, pairings: k };
        if s != expected || s.triangles != formula {
            return Err(format!("{d:?}: got {s:?}, expected {expected:?}"));
        }
    }
    within(elapsed, Duration::from_millis(1))?;
    Ok(format!("4 descriptors in {elapsed:?}"))
}

fn turn_and_edge_identities() -> Verdict {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut checked = 0;
    for kind in KINDS {
        for n in 1..=4 {
            let d = desc(kind, n);
            let t = turn_matrix(d);
            let t3 = t.mul_unchecked(&t).mul_unchecked(&t);
            if !t3.approx_eq(&SymplecticElement::identity(d), 1e-10) {
                return Err(format!("turn^3 != Id over {d}"));
            }
            let (plus, minus, one) = (IsotropicLine::plus(d), IsotropicLine::minus(d), IsotropicLine::one(d));
            for _ in 0..100 {
                let a = sample_with(d, SampleKind::Positive, &mut rng);
                let e = edge_matrix(&a).map_err(|e| e.to_string())?;
                let la = IsotropicLine::ell(&a).map_err(|e| e.to_string())?;
                for (name, from, to) in
                    [("l-", &minus, &plus), ("l+", &plus, &minus), ("l(a)", &la, &one), ("l1", &one, &la)]
                {
                    let dist = act(&e, from).distance(to);
                    if dist > 1e-10 {
                        return Err(format!("edge matrix moves {name} off target by {dist:e} over {d}"));
                    }
                }
                checked += 1;
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{checked} positive elements, 12 turn matrices"))
}

fn random_word(rng: &mut ChaCha8Rng, generators: usize, len: usize) -> Vec<(usize, bool)> {
    (0..len).map(|_| (rng.random_range(0..generators), rng.random_bool(0.5))).collect()
}

fn holonomy_homomorphism() -> Verdict {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst: f64 = 0.0;
    let mut trials = 0;
    for spec in [catalog::punctured_torus(), catalog::genus_two_one_puncture()] {
        let p = polygon(spec);
        let k = p.pairings().len();
        let nv = 3 * p.num_triangles();
        for kind in KINDS {
            for n in 1..=3 {
                let d = desc(kind, n);
                let c = sample_coordinates(&p, d, &mut rng);
                let (ls, fr) = synthesize(&p, &c, 0).map_err(|e| e.to_string())?;
                for _ in 0..10 {
                    let (w1, w2) = (random_word(&mut rng, k, 20), random_word(&mut rng, k, 20));
                    let joined: Vec<_> = w1.iter().chain(&w2).copied().collect();
                    let h1 = holonomy(&fr, &w1).map_err(|e| e.to_string())?;
                    let h2 = holonomy(&fr, &w2).map_err(|e| e.to_string())?;
                    let h12 = holonomy(&fr, &joined).map_err(|e| e.to_string())?;
                    let scale = h1.matrix().norm() * h2.matrix().norm();
                    let hom = h12.matrix().distance(h1.mul_unchecked(&h2).matrix()) / scale;

                    // the same word through loops in the graph, each letter
                    // based at a random vertex and routed through another
                    let mut via_graph = SymplecticElement::identity(d);
                    let mut letter_scale = 1.0;
                    for &(e, inv) in &w1 {
                        let v = rng.random_range(0..nv);
                        let x = rng.random_range(0..nv);
                        let g = ls.path_holonomy(e, v, Some(x)).map_err(|e| e.to_string())?;
                        letter_scale *= g.matrix().norm();
                        via_graph = via_graph.mul_unchecked(&if inv { g.inverse_fast() } else { g });
                    }
                    let plain = w1.iter().fold(SymplecticElement::identity(d), |acc, &(e, inv)| {
                        let g = &fr.generators[e];
                        acc.mul_unchecked(&if inv { g.inverse_fast() } else { g.clone() })
                    });
                    let paths = via_graph.matrix().distance(plain.matrix()) / letter_scale;
                    worst = worst.max(hom).max(paths);
                    if hom > 1e-7 || paths > 1e-7 {
                        return Err(format!("over {d}: homomorphism {hom:e}, two paths {paths:e}"));
                    }
                    trials += 1;
                }
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!("{trials} word pairs, worst relative error {worst:.1e}"))
}

fn example_surfaces() -> [(&'static str, FundamentalPolygon); 3] {
    [
        ("punctured-torus", polygon(catalog::punctured_torus())),
        ("four-punctured-sphere", polygon(catalog::four_punctured_sphere())),
        ("genus-two", polygon(catalog::genus_two_one_puncture())),
    ]
}

fn maximality_of_synthesis() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut runs = 0;
    let mut failures = Vec::new();
    for (name, p) in example_surfaces() {
        for kind in KINDS {
            for i in 0..100 {
                let d = desc(kind, 1 + i % 3);
                let c = sample_coordinates(&p, d, &mut rng);
                match synthesize(&p, &c, 0) {
                    Ok((_, fr)) if verify_maximal(&fr, &p) => {}
                    Ok(_) => failures.push(format!("{name} {d} #{i}: non-maximal triple")),
                    Err(e) => failures.push(format!("{name} {d} #{i}: {e}")),
                }
                runs += 1;
            }
        }
    }
    if failures.is_empty() {
        Ok(format!("{runs} coordinate vectors, 0 failures"))
    } else {
        Err(format!("{} failures, first: {}", failures.len(), failures[0]))
    }
}

fn round_trip() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut runs = 0;
    let mut worst: f64 = 0.0;
    for (name, p) in example_surfaces() {
        let gamma = build_gamma(&p);
        for kind in KINDS {
            for i in 0..100 {
                let d = desc(kind, 1 + i % 3);
                let c = sample_coordinates(&p, d, &mut rng);
                let fail = |what: &str, e: String| format!("{name} {d} #{i} {what}: {e}");
                let (_, fr) = synthesize(&p, &c, 0).map_err(|e| fail("synthesize", e.to_string()))?;
                let back = extract(&fr, &p, 0).map_err(|e| fail("extract", e.to_string()))?;
                let forward = c.max_deviation(&back).map_err(|e| fail("compare", e.to_string()))?;

                // start from a representation in a random gauge
                let g = random_sp2_word(d, 4, &mut rng).map_err(|e| fail("gauge", e.to_string()))?;
                let moved = fr.conjugate(&g).map_err(|e| fail("conjugate", e.to_string()))?;
                let c1 = extract(&moved, &p, 0).map_err(|e| fail("extract gauge", e.to_string()))?;
                let (_, fr2) = synthesize(&p, &c1, 0).map_err(|e| fail("resynthesize", e.to_string()))?;
                let c2 = extract(&fr2, &p, 0).map_err(|e| fail("re-extract", e.to_string()))?;
                let backward = c1.max_deviation(&c2).map_err(|e| fail("compare", e.to_string()))?;
                // coordinates are defined up to a unitary u with
                // diag(u, u) = normalize_triple(g F at the base) g
                let line = |corner| &moved.framing[&corner];
                let k = normalize_triple(line(gamma.top(0)), line(gamma.bottom(0)), line(gamma.right(0)))
                    .map_err(|e| fail("normalize", e.to_string()))?;
                let s = k.mul_unchecked(&g);
                let u = s.matrix().a.clone();
                let stabilizer = SymplecticElement::new(Mat2::diag(u.clone(), u.clone()).unwrap())
                    .map_err(|e| fail("stabilizer", e.to_string()))?;
                if !s.approx_eq(&stabilizer, 1e-8) {
                    return Err(fail("stabilizer", "normalized gauge is not diag(u, u)".into()));
                }
                let expected = c.conjugate(&u).map_err(|e| fail("conjugate", e.to_string()))?;
                let gauge = expected.max_deviation(&c1).map_err(|e| fail("compare", e.to_string()))?;

                let dev = forward.max(backward).max(gauge);
                worst = worst.max(dev);
                if dev > 1e-6 {
                    return Err(fail("deviation", format!("{forward:e} / {backward:e} / {gauge:e}")));
                }
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} round trips each way plus gauge changes, worst deviation {worst:.1e}"))
}

fn component_counts() -> Verdict {
    let start = Instant::now();
    let torus = polygon(catalog::punctured_torus());
    let sphere = polygon(catalog::four_punctured_sphere());
    let mut cases = Vec::new();
    for n in 1..=3 {
        cases.push((&torus, desc(GroundRing::Real, n), 4));
        cases.push((&sphere, desc(GroundRing::Real, n), 8));
    }
    for kind in [GroundRing::Complex, GroundRing::Quaternion] {
        for n in 1..=2 {
            cases.push((&torus, desc(kind, n), 1));
            cases.push((&sphere, desc(kind, n), 1));
        }
    }
    let mut seen = Vec::new();
    for (i, (p, d, want)) in cases.iter().enumerate() {
        let c = census(p, *d, 500, 600 + i as u64).map_err(|e| e.to_string())?;
        if c.observed() != *want || c.expected != *want as u64 {
            return Err(format!(
                "{d} chi={}: {} labels observed, {} predicted, {want} wanted",
                p.stats().chi,
                c.observed(),
                c.expected
            ));
        }
        seen.push(c.observed().to_string());
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("{} censuses of 500, labels {}", cases.len(), seen.join("/")))
}

fn classical_realizations() -> Verdict {
    let mut total = 0;
    for kind in KINDS {
        for n in 1..=3 {
            let d = desc(kind, n);
            let s = realization_sweep(d, 200, 8, 700 + n as u64).map_err(|e| e.to_string())?;
            let counts = (s.members_preserving, s.perturbed_rejected, s.compact_preserving);
            if counts != (200, 200, 200) {
                return Err(format!("{d}: preserving/rejected/compact = {counts:?} of 200"));
            }
            total += 200;
        }
    }
    Ok(format!("{total} words, perturbations and compact words, tol 1e-8"))
}

fn cone_oracles() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst: f64 = 0.0;
    for kind in KINDS {
        for i in 0..1000 {
            let d = desc(kind, 1 + i % 4);
            let q = sample_with(d, SampleKind::Positive, &mut rng);
            let a = sample_with(d, SampleKind::Invertible, &mut rng);
            let g = sample_with(d, SampleKind::Invertible, &mut rng);
            let root = q.sqrt_positive().map_err(|e| format!("sqrt over {d}: {e}"))?;
            let (u, b) = a.polar_decompose().map_err(|e| format!("polar over {d}: {e}"))?;
            let errs = [relative(&(&root * &root), &q), relative(&(&u * &b), &a)];
            let err = errs[0].max(errs[1]);
            worst = worst.max(err);
            if err > 1e-9 || !root.is_positive() || !b.is_positive() || !u.is_unitary() {
                return Err(format!("reconstruction over {d}: {errs:?}"));
            }
            if !q.congruence(&g).is_positive() {
                return Err(format!("congruence left the cone over {d}"));
            }
        }
    }
    Ok(format!("3000 elements, worst relative error {worst:.1e}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("triangle-count formula", triangle_count_formula),
        ("turn and edge identities", turn_and_edge_identities),
        ("holonomy homomorphism and path independence", holonomy_homomorphism),
        ("maximality of synthesis", maximality_of_synthesis),
        ("round trip", round_trip),
        ("component counts", component_counts),
        ("classical realizations", classical_realizations),
        ("cone, sqrt and polar oracles", cone_oracles),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = check();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}; {secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({detail}; {secs:.2}s)", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
