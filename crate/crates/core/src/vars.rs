//! Variable orders.

use crate::error::CadError;
use std::fmt;
use std::sync::Arc;

/// An ascending variable order `x_1 < x_2 < ... < x_n`.
///
/// Index `n-1` (the last name) is the greatest variable: projection eliminates
/// it first and lifting introduces it last.  Orders are immutable and shared.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarOrder {
    names: Arc<Vec<String>>,
}

impl VarOrder {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Result<Self, CadError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(CadError::invalid("variable order must be nonempty"));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(CadError::invalid("empty variable name"));
            }
            if names[..i].contains(n) {
                return Err(CadError::invalid(format!("duplicate variable `{}`", n)));
            }
        }
        Ok(VarOrder {
            names: Arc::new(names),
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Cheap pointer-or-content equality used to guard mixed-order arithmetic.
    pub fn same(&self, other: &VarOrder) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl fmt::Display for VarOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empty() {
        assert!(VarOrder::new(vec!["x", "y", "x"]).is_err());
        assert!(VarOrder::new(Vec::<String>::new()).is_err());
        let o = VarOrder::new(vec!["x", "y"]).unwrap();
        assert_eq!(o.index_of("y"), Some(1));
        assert_eq!(o.index_of("z"), None);
    }
}
