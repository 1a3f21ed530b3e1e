//! Seeded batch runs: the component census and the classical-form sweep.
//!
//! Sample `i` of a run with seed `s` draws from ChaCha8 seeded with `s` on
//! stream `i`, so results do not depend on thread scheduling.

use std::collections::BTreeMap;

use hermsp_core::algebra::{sample_with, AlgebraDescriptor, AlgebraElement, SampleKind};
use hermsp_core::parametrization::{component_label, count_components, extract, sample_coordinates, synthesize};
use hermsp_core::realization::{embed, form_residual, is_compact, ClassicalForm, FormKind};
use hermsp_core::surface::FundamentalPolygon;
use hermsp_core::symplectic::{random_ksp2_word, random_sp2_word};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::Result;

fn stream(seed: u64, i: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    rng
}

#[derive(Clone, Debug, PartialEq)]
pub struct Census {
    pub samples: usize,
    /// Observed labels with their multiplicities.
    pub labels: BTreeMap<Vec<i32>, usize>,
    /// `k^(1 - chi)`.
    pub expected: u64,
}

impl Census {
    pub fn observed(&self) -> usize {
        self.labels.len()
    }
}

/// Sample coordinates, synthesize, extract from the representation and
/// label the extracted unitary coordinates.
pub fn census(p: &FundamentalPolygon, desc: AlgebraDescriptor, samples: usize, seed: u64) -> Result<Census> {
    let labels = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = stream(seed, i);
            let c = sample_coordinates(p, desc, &mut rng);
            let (_, fr) = synthesize(p, &c, 0)?;
            Ok(component_label(&extract(&fr, p, 0)?)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut counts = BTreeMap::new();
    for l in labels {
        *counts.entry(l).or_insert(0) += 1;
    }
    Ok(Census { samples, labels: counts, expected: count_components(p.descriptor(), &desc)? })
}

#[derive(Clone, Debug, PartialEq)]
pub struct RealizationSweep {
    pub form: FormKind,
    pub samples: usize,
    pub members_preserving: usize,
    pub perturbed_rejected: usize,
    pub compact_preserving: usize,
    pub worst_member_residual: f64,
    pub best_perturbed_residual: f64,
}

/// Random generator words of length `len`, their perturbations
/// `M (Id + r/10)` and random `KSp2` words, checked against the classical form.
pub fn realization_sweep(desc: AlgebraDescriptor, samples: usize, len: usize, seed: u64) -> Result<RealizationSweep> {
    let form = ClassicalForm::for_algebra(desc);
    let big = desc.doubled();
    let tol = desc.tol();
    let rows = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = stream(seed, i);
            let m = embed(&random_sp2_word(desc, len, &mut rng)?);
            let r = sample_with(big, SampleKind::Invertible, &mut rng);
            let bumped = &m * &(&AlgebraElement::identity(big) + &r.scale(0.1));
            let k = embed(&random_ksp2_word(desc, len, &mut rng)?);
            let member = form_residual(&m, &form)?;
            let perturbed = form_residual(&bumped, &form)?;
            let compact = form_residual(&k, &form)? <= tol && is_compact(&k);
            Ok((member, perturbed, compact))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RealizationSweep {
        form: form.kind(),
        samples,
        members_preserving: rows.iter().filter(|r| r.0 <= tol).count(),
        perturbed_rejected: rows.iter().filter(|r| r.1 > tol).count(),
        compact_preserving: rows.iter().filter(|r| r.2).count(),
        worst_member_residual: rows.iter().map(|r| r.0).fold(0.0, f64::max),
        best_perturbed_residual: rows.iter().map(|r| r.1).fold(f64::INFINITY, f64::min),
    })
}
