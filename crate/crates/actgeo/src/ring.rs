//! The group ring KF(Y): finitely supported scalar maps on reduced words.

use crate::error::{Error, Result};
use crate::scalar::{displays_negative, Field, Scalar};
use crate::word::Word;
use std::collections::BTreeMap;
use std::fmt;

/// An element of KF(Y) in canonical form: no zero coefficients stored,
/// words kept reduced, terms ordered shortlex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    field: Field,
    terms: BTreeMap<Word, Scalar>,
}

impl GroupRingElement {
    pub fn zero(field: Field) -> GroupRingElement {
        GroupRingElement {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field) -> GroupRingElement {
        GroupRingElement::monomial(field.one(), Word::identity())
    }

    pub fn constant(field: Field, n: i64) -> GroupRingElement {
        GroupRingElement::monomial(field.from_int(n), Word::identity())
    }

    pub fn word(field: Field, w: Word) -> GroupRingElement {
        GroupRingElement::monomial(field.one(), w)
    }

    pub fn monomial(coeff: Scalar, w: Word) -> GroupRingElement {
        let field = coeff.field();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(w, coeff);
        }
        GroupRingElement { field, terms }
    }

    pub fn from_terms(
        field: Field,
        terms: impl IntoIterator<Item = (Word, Scalar)>,
    ) -> Result<GroupRingElement> {
        let mut out = GroupRingElement::zero(field);
        for (w, c) in terms {
            out.add_term(&w, &c)?;
        }
        Ok(out)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Largest generator index in the support.
    pub fn max_generator(&self) -> usize {
        self.terms.keys().map(Word::max_generator).max().unwrap_or(0)
    }

    fn check(&self, other: &GroupRingElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ))
        }
    }

    fn add_term(&mut self, w: &Word, c: &Scalar) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        if c.field() != self.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                c.field().to_string(),
            ));
        }
        match self.terms.get(w) {
            Some(old) => {
                let s = old.add(c)?;
                if s.is_zero() {
                    self.terms.remove(w);
                } else {
                    self.terms.insert(w.clone(), s);
                }
            }
            None => {
                self.terms.insert(w.clone(), c.clone());
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w, c)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> GroupRingElement {
        GroupRingElement {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        self.add(&other.neg())
    }

    /// Convolution product over reduced words.
    pub fn multiply(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        self.check(other)?;
        let mut out = GroupRingElement::zero(self.field);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(&wa.multiply(wb), &ca.mul(cb)?)?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Result<GroupRingElement> {
        let mut out = GroupRingElement::zero(self.field);
        for (w, k) in &self.terms {
            out.add_term(w, &c.mul(k)?)?;
        }
        Ok(out)
    }

    /// Integer power; negative exponents require an invertible element,
    /// supported here only for single-word monomials.
    pub fn power(&self, e: i64) -> Result<GroupRingElement> {
        if e < 0 {
            let (w, c) = match self.terms.iter().next() {
                Some(t) if self.terms.len() == 1 => t,
                _ => {
                    return Err(Error::Other(
                        "negative exponent on a non-monomial ring element".into(),
                    ))
                }
            };
            let base = GroupRingElement::monomial(c.inv()?, w.invert());
            return base.power(-e);
        }
        let mut out = GroupRingElement::one(self.field);
        for _ in 0..e {
            out = out.multiply(self)?;
        }
        Ok(out)
    }

    /// `y_i - 1`, the i-th augmentation-ideal generator.
    pub fn delta(field: Field, gen: usize) -> GroupRingElement {
        GroupRingElement::word(field, Word::generator(gen))
            .sub(&GroupRingElement::one(field))
            .expect("same field")
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let (abs, neg) = if displays_negative(c) {
                (c.neg(), true)
            } else {
                (c.clone(), false)
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if w.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{abs}*{w}")?;
            }
        }
        Ok(())
    }
}
