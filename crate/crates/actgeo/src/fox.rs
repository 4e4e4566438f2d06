//! Fox calculus on KF(Y): augmentation, free derivatives, the Taylor
//! expansion and truncation modulo powers of the augmentation ideal.
//!
//! Convention: the derivatives satisfy d_i(y_j) = delta_ij,
//! d_i(y_j^-1) = -delta_ij * y_j^-1 and the product rule
//! d_i(uv) = d_i(u) + u*d_i(v) on words, so that
//! u - eps(u)*1 = sum_i d_i(u)*(y_i - 1) holds exactly.
//! An iterated derivative d_{i1..ik} composes right-to-left: the
//! derivative by i_k is applied first. Under this order the coefficient
//! of (y_{i1}-1)...(y_{ik}-1) in the Taylor expansion is exactly
//! d_{i1..ik}, which the reconstruction tests pin down.

use crate::error::{Error, Result};
use crate::ring::GroupRingElement;
use crate::scalar::{Field, Scalar};
use crate::word::Word;
use std::collections::BTreeMap;
use std::fmt;

/// Coefficient-sum homomorphism eps: KF(Y) -> K.
pub fn augment(u: &GroupRingElement) -> Scalar {
    let mut acc = u.field().zero();
    for (_, c) in u.terms() {
        acc = acc.add(c).expect("single field");
    }
    acc
}

/// The i-th Fox derivative, extended K-linearly from words.
pub fn fox_derive(i: usize, u: &GroupRingElement) -> Result<GroupRingElement> {
    if i < 1 {
        return Err(Error::IndexOutOfRange(i, usize::MAX));
    }
    let field = u.field();
    let mut out = GroupRingElement::zero(field);
    for (w, c) in u.terms() {
        let dw = fox_derive_word(field, i, w)?;
        out = out.add(&dw.scale(c)?)?;
    }
    Ok(out)
}

fn fox_derive_word(field: Field, i: usize, w: &Word) -> Result<GroupRingElement> {
    // d(l1...ln) = sum_j (l1...l_{j-1}) * d(l_j)
    let mut out = GroupRingElement::zero(field);
    let mut prefix = Word::identity();
    for l in w.letters() {
        if l.gen == i {
            if l.inverse {
                // d(y^-1) = -y^-1
                let term = prefix.multiply(&Word::generator_power(i, -1));
                out = out.add(&GroupRingElement::monomial(field.one().neg(), term))?;
            } else {
                out = out.add(&GroupRingElement::word(field, prefix.clone()))?;
            }
        }
        prefix = prefix.multiply(&Word::from_letters([*l]));
    }
    Ok(out)
}

/// d_{i1..is} = d_{i1} o ... o d_{is} (rightmost applied first).
pub fn iterated_fox(indices: &[usize], u: &GroupRingElement) -> Result<GroupRingElement> {
    if indices.is_empty() {
        return Err(Error::Other("empty index sequence".into()));
    }
    let mut acc = u.clone();
    for &i in indices.iter().rev() {
        acc = fox_derive(i, &acc)?;
    }
    Ok(acc)
}

/// The two coefficient layers of the degree-k Taylor expansion:
/// `head` maps index sequences of length < k to augmented derivatives,
/// `tail` maps length-k sequences to the raw derivatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaylorExpansion {
    pub field: Field,
    pub gens: usize,
    pub head: BTreeMap<Vec<usize>, Scalar>,
    pub tail: BTreeMap<Vec<usize>, GroupRingElement>,
}

impl TaylorExpansion {
    /// Rebuilds sum_head c*(y_{i1}-1)...(y_{is}-1) + sum_tail u*(...).
    pub fn reconstruct(&self) -> Result<GroupRingElement> {
        let mut out = GroupRingElement::zero(self.field);
        for (seq, c) in &self.head {
            let mono = delta_monomial(self.field, seq);
            out = out.add(&mono.scale(c)?)?;
        }
        for (seq, u) in &self.tail {
            let mono = delta_monomial(self.field, seq);
            out = out.add(&u.multiply(&mono)?)?;
        }
        Ok(out)
    }
}

/// (y_{i1}-1)...(y_{ik}-1) for an index sequence.
pub fn delta_monomial(field: Field, seq: &[usize]) -> GroupRingElement {
    let mut out = GroupRingElement::one(field);
    for &i in seq {
        out = out
            .multiply(&GroupRingElement::delta(field, i))
            .expect("same field");
    }
    out
}

/// Expands w to degree k over generators y_1..y_m. When `gens` is None the
/// alphabet is the largest index occurring in w.
pub fn taylor_expand(
    w: &GroupRingElement,
    k: usize,
    gens: Option<usize>,
) -> Result<TaylorExpansion> {
    if k < 1 {
        return Err(Error::Other("taylor degree must be at least 1".into()));
    }
    let m = gens.unwrap_or_else(|| w.max_generator());
    let field = w.field();
    let mut head = BTreeMap::new();
    let mut tail = BTreeMap::new();
    // level-by-level derivative table; level s holds d_{seq} w for |seq| = s,
    // extended by prepending the new index
    let mut level: BTreeMap<Vec<usize>, GroupRingElement> =
        BTreeMap::from([(Vec::new(), w.clone())]);
    for s in 0..=k {
        for (seq, u) in &level {
            if s < k {
                let c = augment(u);
                if !c.is_zero() {
                    head.insert(seq.clone(), c);
                }
            } else if !u.is_zero() {
                tail.insert(seq.clone(), u.clone());
            }
        }
        if s == k {
            break;
        }
        let mut next = BTreeMap::new();
        for (seq, u) in &level {
            if u.is_zero() {
                continue;
            }
            for i in 1..=m {
                let mut t = Vec::with_capacity(seq.len() + 1);
                t.push(i);
                t.extend_from_slice(seq);
                next.insert(t, fox_derive(i, u)?);
            }
        }
        level = next;
    }
    Ok(TaylorExpansion {
        field,
        gens: m,
        head,
        tail,
    })
}

/// Image of a ring element in KF(Y)/Delta^n, coordinatized by the
/// augmented iterated derivatives over index sequences of length < n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedElement {
    pub field: Field,
    pub gens: usize,
    pub degree_bound: usize,
    coords: BTreeMap<Vec<usize>, Scalar>,
}

impl TruncatedElement {
    pub fn zero(field: Field, gens: usize, degree_bound: usize) -> TruncatedElement {
        TruncatedElement {
            field,
            gens,
            degree_bound,
            coords: BTreeMap::new(),
        }
    }

    pub fn coords(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.coords.iter()
    }

    pub fn coord(&self, seq: &[usize]) -> Scalar {
        self.coords
            .get(seq)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// dim KF(Y)/Delta^n = sum_{k<n} m^k.
    pub fn ambient_dimension(&self) -> usize {
        ambient_dimension(self.gens, self.degree_bound)
    }

    fn set(&mut self, seq: Vec<usize>, c: Scalar) {
        if !c.is_zero() {
            self.coords.insert(seq, c);
        }
    }

    pub fn add(&self, other: &TruncatedElement) -> Result<TruncatedElement> {
        self.compat(other)?;
        let mut out = self.clone();
        for (seq, c) in &other.coords {
            let s = out.coord(seq).add(c)?;
            if s.is_zero() {
                out.coords.remove(seq);
            } else {
                out.coords.insert(seq.clone(), s);
            }
        }
        Ok(out)
    }

    /// Product in the truncated algebra: index monomials concatenate and
    /// anything of length >= n is dropped.
    pub fn multiply(&self, other: &TruncatedElement) -> Result<TruncatedElement> {
        self.compat(other)?;
        let mut out = TruncatedElement::zero(self.field, self.gens, self.degree_bound);
        for (sa, ca) in &self.coords {
            for (sb, cb) in &other.coords {
                if sa.len() + sb.len() >= self.degree_bound {
                    continue;
                }
                let mut seq = sa.clone();
                seq.extend_from_slice(sb);
                let c = out.coord(&seq).add(&ca.mul(cb)?)?;
                if c.is_zero() {
                    out.coords.remove(&seq);
                } else {
                    out.coords.insert(seq, c);
                }
            }
        }
        Ok(out)
    }

    fn compat(&self, other: &TruncatedElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        if self.gens != other.gens || self.degree_bound != other.degree_bound {
            return Err(Error::DimensionMismatch(format!(
                "truncations over (m={}, n={}) vs (m={}, n={})",
                self.gens, self.degree_bound, other.gens, other.degree_bound
            )));
        }
        Ok(())
    }
}

pub fn ambient_dimension(m: usize, n: usize) -> usize {
    (0..n).map(|k| m.pow(k as u32)).sum()
}

/// Coordinates of u in KF(Y)/Delta^n over generators y_1..y_m.
pub fn truncate(u: &GroupRingElement, n: usize, gens: usize) -> Result<TruncatedElement> {
    if n < 1 {
        return Err(Error::Other("degree bound must be at least 1".into()));
    }
    let mut out = TruncatedElement::zero(u.field(), gens, n);
    out.set(Vec::new(), augment(u));
    let mut level: BTreeMap<Vec<usize>, GroupRingElement> =
        BTreeMap::from([(Vec::new(), u.clone())]);
    for _ in 1..n {
        let mut next = BTreeMap::new();
        for (seq, v) in &level {
            if v.is_zero() {
                continue;
            }
            for i in 1..=gens {
                let mut t = Vec::with_capacity(seq.len() + 1);
                t.push(i);
                t.extend_from_slice(seq);
                let dv = fox_derive(i, v)?;
                out.set(t.clone(), augment(&dv));
                next.insert(t, dv);
            }
        }
        level = next;
    }
    Ok(out)
}

impl fmt::Display for TruncatedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        for (i, (seq, c)) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if seq.is_empty() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*[")?;
                for (j, g) in seq.iter().enumerate() {
                    if j > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{g}")?;
                }
                write!(f, "]")?;
            }
        }
        Ok(())
    }
}
