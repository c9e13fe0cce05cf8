use std::path::PathBuf;

use qci::algebra::AlgebraSpec;
use qci::io::ModuleJson;
use qci::module::{cyclic_u_module, ModuleRep};

use crate::fail::Failure;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Designator {
    Simple,
    Free(usize),
    Cyclic(Vec<i64>),
    File(PathBuf),
}

fn bad(text: &str, why: &str) -> Failure {
    Failure::invalid("BadDesignator", format!("module designator `{text}`: {why}"))
}

impl Designator {
    pub fn parse(text: &str) -> Result<Self, Failure> {
        let (kind, args) = match text.split_once(':') {
            Some((k, a)) => (k, Some(a)),
            None => (text, None),
        };
        match (kind, args) {
            ("k", None) => Ok(Self::Simple),
            ("free", Some(r)) => match r.parse::<usize>() {
                Ok(r) if r >= 1 => Ok(Self::Free(r)),
                _ => Err(bad(text, "rank must be a positive integer")),
            },
            ("cyclic", Some(l)) => l
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map(Self::Cyclic)
                .map_err(|_| bad(text, "coordinates must be comma-separated integers")),
            ("file", Some(p)) if !p.is_empty() => Ok(Self::File(PathBuf::from(p))),
            _ => Err(bad(text, "expected k, free:R, cyclic:L1,...,Lc or file:PATH")),
        }
    }

    pub fn build(&self, spec: AlgebraSpec) -> Result<ModuleRep, Failure> {
        match self {
            Self::Simple => Ok(ModuleRep::simple(spec)),
            Self::Free(r) => Ok(ModuleRep::free(spec, *r)),
            Self::Cyclic(l) => {
                if l.len() != spec.c() {
                    return Err(Failure::invalid(
                        "PreconditionViolated",
                        format!("cyclic module needs c = {} coordinates, got {}", spec.c(), l.len()),
                    ));
                }
                let f = spec.field();
                let lam: Vec<_> = l.iter().map(|&x| f.elem(x)).collect();
                Ok(cyclic_u_module(spec, &lam)?)
            }
            Self::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::invalid("BadDesignator", format!("cannot read {}: {e}", path.display())))?;
                let json: ModuleJson = serde_json::from_str(&text)
                    .map_err(|e| Failure::invalid("Malformed", format!("{}: {e}", path.display())))?;
                let m = ModuleRep::from_json(&json)?;
                if *m.spec() != spec {
                    return Err(Failure::invalid(
                        "SpecMismatch",
                        format!("{} is a module over a different algebra than the configured one", path.display()),
                    ));
                }
                Ok(m)
            }
        }
    }
}
