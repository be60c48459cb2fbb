use std::collections::BTreeSet;
use std::sync::Arc;

use super::MonomialOrder;
use crate::{Error, Result};

/// A polynomial ring ℚ[x₁,…,xₙ] with a default monomial order.
///
/// Rings are shared by reference; two rings are equal when they have the
/// same variable names in the same order and the same default order.
#[derive(Debug)]
pub struct PolyRing {
    vars: Vec<String>,
    default_order: MonomialOrder,
}

pub type RingRef = Arc<PolyRing>;

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.default_order == other.default_order
    }
}
impl Eq for PolyRing {}

impl PolyRing {
    /// Ring with the grevlex default order.
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Result<RingRef> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        let order = MonomialOrder::grevlex(vars.len());
        PolyRing::with_order(vars, order)
    }

    pub fn with_order<S: Into<String>>(vars: Vec<S>, default_order: MonomialOrder) -> Result<RingRef> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        let mut seen = BTreeSet::new();
        for v in &vars {
            if v.is_empty() {
                return Err(Error::InvalidInput("empty variable name".into()));
            }
            if !seen.insert(v.clone()) {
                return Err(Error::InvalidInput(format!("duplicate variable name `{v}`")));
            }
        }
        if default_order.nvars() != vars.len() {
            return Err(Error::Dimension(format!(
                "order on {} variables for a ring with {}",
                default_order.nvars(),
                vars.len()
            )));
        }
        Ok(Arc::new(PolyRing { vars, default_order }))
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn default_order(&self) -> &MonomialOrder {
        &self.default_order
    }

    /// A variable name not yet used in this ring: `base`, `base_1`, …
    pub fn fresh_name(&self, base: &str) -> String {
        if self.var_index(base).is_none() {
            return base.to_string();
        }
        let mut k = 1usize;
        loop {
            let cand = format!("{base}_{k}");
            if self.var_index(&cand).is_none() {
                return cand;
            }
            k += 1;
        }
    }

    /// New ring with extra variables appended and a grevlex default order.
    pub fn extended(self: &Arc<Self>, extra: &[String]) -> Result<RingRef> {
        let mut vars = self.vars.clone();
        vars.extend(extra.iter().cloned());
        PolyRing::new(vars)
    }
}
