//! Name-keyed registries of interchangeable strategies.

use crate::error::{Error, Result};

pub trait Strategy: Send + Sync {
    /// Registry key, e.g. `seifert`.
    fn name(&self) -> &'static str;

    fn summary(&self) -> &'static str;
}

/// Strategies in registration order; lookup by name.
pub struct Registry<T: ?Sized + Strategy> {
    entries: Vec<Box<T>>,
}

impl<T: ?Sized + Strategy> Default for Registry<T> {
    fn default() -> Self {
        Registry {
            entries: Vec::new(),
        }
    }
}

impl<T: ?Sized + Strategy> Registry<T> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a strategy, replacing any earlier one with the same name.
    pub fn register(&mut self, strategy: Box<T>) -> &mut Self {
        self.entries.retain(|e| e.name() != strategy.name());
        self.entries.push(strategy);
        self
    }

    pub fn get(&self, name: &str) -> Result<&T> {
        self.entries
            .iter()
            .find(|e| e.name() == name)
            .map(|e| e.as_ref())
            .ok_or_else(|| Error::UnknownStrategy {
                name: name.to_string(),
                available: self.names().join(", "),
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.entries.iter().map(|e| e.as_ref())
    }

    /// Strategies named in `names`, in that order.
    pub fn select<'a>(&'a self, names: &[impl AsRef<str>]) -> Result<Vec<&'a T>> {
        names.iter().map(|n| self.get(n.as_ref())).collect()
    }
}
