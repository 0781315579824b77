//! Named variable contexts.
//!
//! A `Vars` lists the indeterminates of the ambient ring in rank order:
//! index 0 is the highest-ranked variable (the "initial ordering"). Every
//! term order in this crate respects that ranking.

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vars {
    names: Vec<String>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Vars {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::Parse("variable list must be nonempty".into()));
        }
        for name in &names {
            if !valid_name(name) {
                return Err(Error::Parse(format!("invalid variable name `{name}`")));
            }
        }
        for i in 0..names.len() {
            for j in i + 1..names.len() {
                if names[i] == names[j] {
                    return Err(Error::Parse(format!("duplicate variable name `{}`", names[i])));
                }
            }
        }
        Ok(Vars { names })
    }

    /// `x1, x2, ..., xk`.
    pub fn numbered(prefix: &str, k: usize) -> Self {
        Vars {
            names: (1..=k).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.names.len()
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
}
