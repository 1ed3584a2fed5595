//! Finite-dimensional spaces with labeled bases.
//!
//! Labels exist for diagnostics: failed checks report the basis vector at
//! which an identity breaks, written the way hand calculations are
//! ("g⊗x" rather than "column 6"). Tensor bases are ordered with the left
//! factor as the major index, once and for all.

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Space {
    pub name: String,
    pub labels: Vec<String>,
}

impl Space {
    pub fn new(name: impl Into<String>, labels: Vec<String>) -> Result<Space> {
        let name = name.into();
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::DuplicateName(format!("basis label {l:?} in space {name:?}")));
            }
        }
        Ok(Space { name, labels })
    }

    /// Space with labels `prefix0..prefix(n-1)`.
    pub fn numbered(name: impl Into<String>, prefix: &str, n: usize) -> Space {
        let name = name.into();
        let labels = (0..n).map(|i| format!("{prefix}{i}")).collect();
        Space { name, labels }
    }

    /// The ground field as a 1-dimensional space.
    pub fn unit() -> Space {
        Space { name: "k".into(), labels: vec!["1".into()] }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Tensor product space; basis label of index `i * other.dim() + j` is
    /// `labels[i]⊗other.labels[j]`.
    pub fn tensor(&self, other: &Space) -> Space {
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        Space { name: format!("{}⊗{}", self.name, other.name), labels }
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_ordering_is_left_major() {
        let x = Space::new("X", vec!["a".into(), "b".into()]).unwrap();
        let y = Space::new("Y", vec!["u".into(), "v".into(), "w".into()]).unwrap();
        let t = x.tensor(&y);
        assert_eq!(t.dim(), 6);
        assert_eq!(t.label(0), "a⊗u");
        assert_eq!(t.label(3), "b⊗u");
        assert_eq!(t.label(5), "b⊗w");
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(Space::new("X", vec!["a".into(), "a".into()]).is_err());
    }
}
