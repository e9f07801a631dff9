use std::collections::HashMap;
use std::sync::Arc;

use indexmap::IndexMap;

use super::CheckError;
use crate::dim::{Dimension, DimensionSystem, Rational, TIME_BASE};
use crate::lang::{DimAnnot, FuncSig, ModelSpec};

/// Dimension environment for inference: identifier dimensions, numeric
/// bindings of parameters, and function signatures.
#[derive(Debug, Clone)]
pub struct Env {
    system: Arc<DimensionSystem>,
    dims: HashMap<String, Dimension>,
    bindings: HashMap<String, Rational>,
    params: Vec<String>,
    funcs: IndexMap<String, FuncSig>,
    time: Option<Dimension>,
}

impl Env {
    pub fn new(system: &Arc<DimensionSystem>) -> Self {
        Self {
            system: Arc::clone(system),
            dims: HashMap::new(),
            bindings: HashMap::new(),
            params: Vec::new(),
            funcs: IndexMap::new(),
            time: Dimension::base(system, TIME_BASE).ok(),
        }
    }

    /// Builds the environment of a parsed model. Every `infer` variable must
    /// have an entry in `inferred`.
    pub fn from_spec(
        spec: &ModelSpec,
        inferred: &IndexMap<String, Dimension>,
    ) -> Result<Self, CheckError> {
        let mut env = Self::new(&spec.system);
        for v in spec.vars.values() {
            let dim = match &v.dim {
                DimAnnot::Known(d) => d.clone(),
                DimAnnot::Infer => inferred.get(&v.name).cloned().ok_or_else(|| {
                    CheckError::UndeclaredIdentifier {
                        name: v.name.clone(),
                        span: v.span,
                    }
                })?,
            };
            env.dims.insert(v.name.clone(), dim);
        }
        for p in spec.params.values() {
            env = env.with_param(&p.name, p.dim.clone(), p.value);
        }
        for f in spec.funcs.values() {
            env.funcs.insert(f.name.clone(), f.clone());
        }
        Ok(env)
    }

    pub fn with_var(mut self, name: &str, dim: Dimension) -> Self {
        self.dims.insert(name.to_string(), dim);
        self
    }

    pub fn with_param(mut self, name: &str, dim: Dimension, value: Option<Rational>) -> Self {
        self.dims.insert(name.to_string(), dim);
        self.params.push(name.to_string());
        if let Some(v) = value {
            self.bindings.insert(name.to_string(), v);
        }
        self
    }

    pub fn with_func(mut self, sig: FuncSig) -> Self {
        self.funcs.insert(sig.name.clone(), sig);
        self
    }

    pub fn system(&self) -> &Arc<DimensionSystem> {
        &self.system
    }

    pub fn dim_of(&self, name: &str) -> Option<&Dimension> {
        self.dims.get(name)
    }

    pub fn is_param(&self, name: &str) -> bool {
        self.params.iter().any(|p| p == name)
    }

    pub fn binding(&self, name: &str) -> Option<Rational> {
        self.bindings.get(name).copied()
    }

    pub fn func(&self, name: &str) -> Option<&FuncSig> {
        self.funcs.get(name)
    }

    pub fn time(&self) -> Option<&Dimension> {
        self.time.as_ref()
    }
}
