//! The free right KF(Y)-module XKF(Y); its elements are action-type
//! equations w = 0.

use crate::error::{Error, Result};
use crate::ring::GroupRingElement;
use crate::scalar::Field;
use std::collections::BTreeMap;
use std::fmt;

/// An element of XKF(Y); zero components are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModuleElement {
    field: Field,
    components: BTreeMap<usize, GroupRingElement>,
}

impl FreeModuleElement {
    pub fn zero(field: Field) -> FreeModuleElement {
        FreeModuleElement {
            field,
            components: BTreeMap::new(),
        }
    }

    /// `x_k o u`.
    pub fn action_term(k: usize, u: GroupRingElement) -> FreeModuleElement {
        assert!(k >= 1, "module generator indices are 1-based");
        let field = u.field();
        let mut components = BTreeMap::new();
        if !u.is_zero() {
            components.insert(k, u);
        }
        FreeModuleElement { field, components }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &GroupRingElement)> {
        self.components.iter().map(|(k, u)| (*k, u))
    }

    pub fn component(&self, k: usize) -> GroupRingElement {
        self.components
            .get(&k)
            .cloned()
            .unwrap_or_else(|| GroupRingElement::zero(self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn max_module_generator(&self) -> usize {
        self.components.keys().max().copied().unwrap_or(0)
    }

    pub fn max_group_generator(&self) -> usize {
        self.components
            .values()
            .map(GroupRingElement::max_generator)
            .max()
            .unwrap_or(0)
    }

    fn check(&self, field: Field) -> Result<()> {
        if self.field == field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(
                self.field.to_string(),
                field.to_string(),
            ))
        }
    }

    pub fn add(&self, other: &FreeModuleElement) -> Result<FreeModuleElement> {
        self.check(other.field)?;
        let mut out = self.clone();
        for (k, u) in &other.components {
            let s = out.component(*k).add(u)?;
            if s.is_zero() {
                out.components.remove(k);
            } else {
                out.components.insert(*k, s);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> FreeModuleElement {
        FreeModuleElement {
            field: self.field,
            components: self
                .components
                .iter()
                .map(|(k, u)| (*k, u.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &FreeModuleElement) -> Result<FreeModuleElement> {
        self.add(&other.neg())
    }

    /// Right action of KF(Y), componentwise: (x_k·a) o u = x_k·(a·u).
    pub fn action(&self, u: &GroupRingElement) -> Result<FreeModuleElement> {
        self.check(u.field())?;
        let mut out = FreeModuleElement::zero(self.field);
        for (k, a) in &self.components {
            let prod = a.multiply(u)?;
            if !prod.is_zero() {
                out.components.insert(*k, prod);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for FreeModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, u)) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "x{k} o ({u})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    fn q() -> Field {
        Field::Q
    }

    #[test]
    fn unit_action() {
        let w = FreeModuleElement::action_term(1, GroupRingElement::delta(q(), 1));
        assert_eq!(w.action(&GroupRingElement::one(q())).unwrap(), w);
    }

    #[test]
    fn action_by_definition() {
        // (x1 * 1) o (y - 1) = x1 * (y - 1)
        let w = FreeModuleElement::action_term(1, GroupRingElement::one(q()));
        let d = GroupRingElement::delta(q(), 1);
        assert_eq!(
            w.action(&d).unwrap(),
            FreeModuleElement::action_term(1, d.clone())
        );
    }

    #[test]
    fn zero_components_dropped() {
        let w = FreeModuleElement::action_term(1, GroupRingElement::one(q()));
        let sum = w.sub(&w).unwrap();
        assert!(sum.is_zero());
        assert_eq!(sum.components.len(), 0);
    }

    #[test]
    fn associativity_of_action() {
        let u = GroupRingElement::delta(q(), 1);
        let v = GroupRingElement::word(q(), Word::generator_power(2, -1));
        let w = FreeModuleElement::action_term(1, GroupRingElement::one(q()))
            .add(&FreeModuleElement::action_term(2, u.clone()))
            .unwrap();
        let lhs = w.action(&u).unwrap().action(&v).unwrap();
        let rhs = w.action(&u.multiply(&v).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
