//! JSON forms of modules, bimodules and resolution reports.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::AlgebraSpec;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::{ComplexityFit, ResolutionPrefix};
use crate::linalg::Matrix;
use crate::module::{BimoduleRep, ModuleRep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecJson {
    pub c: usize,
    pub a: u64,
    pub p: u64,
    pub q: u64,
}

impl SpecJson {
    pub fn of(spec: &AlgebraSpec) -> Self {
        Self { c: spec.c(), a: spec.a() as u64, p: spec.field().modulus(), q: spec.q().value() }
    }

    pub fn to_spec(self) -> Result<AlgebraSpec> {
        AlgebraSpec::new(FieldSpec::with_root(self.p, self.a, self.q)?, self.c)
    }
}

/// Each action is a row-major array of `dim * dim` residues.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub spec: SpecJson,
    pub dim: usize,
    pub actions: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BimoduleJson {
    pub spec: SpecJson,
    pub dim: usize,
    pub left_actions: Vec<Vec<u64>>,
    pub right_actions: Vec<Vec<u64>>,
}

fn flatten(ms: &[Matrix]) -> Vec<Vec<u64>> {
    ms.iter().map(|m| m.data().to_vec()).collect()
}

fn unflatten(spec: &AlgebraSpec, dim: usize, arrays: &[Vec<u64>]) -> Result<Vec<Matrix>> {
    let p = spec.field().modulus();
    arrays
        .iter()
        .map(|a| {
            if a.len() != dim * dim {
                return Err(Error::Malformed(format!("action has {} entries, expected {}", a.len(), dim * dim)));
            }
            if let Some(x) = a.iter().find(|&&x| x >= p) {
                return Err(Error::Malformed(format!("entry {x} is not a residue mod {p}")));
            }
            Ok(Matrix::from_rows(spec.field(), dim, dim, a.clone()))
        })
        .collect()
}

impl ModuleRep {
    pub fn to_json(&self) -> ModuleJson {
        ModuleJson { spec: SpecJson::of(self.spec()), dim: self.dim(), actions: flatten(self.actions()) }
    }

    /// Validates the relations.
    pub fn from_json(j: &ModuleJson) -> Result<Self> {
        let spec = j.spec.to_spec()?;
        let actions = unflatten(&spec, j.dim, &j.actions)?;
        ModuleRep::new(spec, j.dim, actions)
    }

    /// SHA-256 of the compact JSON form, hex encoded.
    pub fn digest(&self) -> String {
        let text = serde_json::to_string(&self.to_json()).expect("module JSON serialises");
        Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl BimoduleRep {
    pub fn to_json(&self) -> BimoduleJson {
        BimoduleJson {
            spec: SpecJson::of(self.spec()),
            dim: self.dim(),
            left_actions: flatten(self.left_actions()),
            right_actions: flatten(self.right_actions()),
        }
    }

    pub fn from_json(j: &BimoduleJson) -> Result<Self> {
        let spec = j.spec.to_spec()?;
        let left = unflatten(&spec, j.dim, &j.left_actions)?;
        let right = unflatten(&spec, j.dim, &j.right_actions)?;
        BimoduleRep::new(spec, j.dim, left, right)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResolutionReport {
    pub module_digest: String,
    pub betti: Vec<usize>,
    pub complexity: usize,
    pub window: [usize; 2],
    pub slope: Option<f64>,
}

impl ResolutionReport {
    pub fn new(res: &ResolutionPrefix, fit: &ComplexityFit) -> Self {
        Self {
            module_digest: res.module.digest(),
            betti: res.betti.clone(),
            complexity: fit.complexity,
            window: [fit.window.0, fit.window.1],
            slope: fit.slope,
        }
    }
}
