//! Finite representations (V,G) over F_p: a matrix realization of G
//! paired with a (possibly non-faithful) linear action on V = F_p^d,
//! plus the group-algebra constructions: regular and quotient modules,
//! annihilators, stabilizers and kernels.

use crate::error::{Error, Result};
use crate::fpmat::{row_times_matrix, vec_add, FpMatrix, RowSpace};
use crate::module::FreeModuleElement;
use crate::ring::GroupRingElement;
use crate::scalar::{is_prime, Field, Scalar};
use crate::word::Word;
use std::collections::HashMap;

pub const DEFAULT_GROUP_BOUND: usize = 5000;

/// A finite group with an exact linear action. Elements are pairs
/// (group matrix, action matrix); the group matrices realize G
/// faithfully while the action may collapse.
#[derive(Debug, Clone)]
pub struct FiniteRepresentation {
    p: u64,
    group_dim: usize,
    action_dim: usize,
    generators: Vec<usize>,
    elems: Vec<(FpMatrix, FpMatrix)>,
    index: HashMap<Vec<u64>, usize>,
}

impl FiniteRepresentation {
    /// Breadth-first pair closure of the given generators.
    pub fn generate(
        p: u64,
        group_gens: &[FpMatrix],
        action_gens: &[FpMatrix],
        bound: usize,
    ) -> Result<FiniteRepresentation> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if group_gens.len() != action_gens.len() {
            return Err(Error::DimensionMismatch(
                "generator count mismatch between group and action".into(),
            ));
        }
        let group_dim = group_gens.first().map_or(1, |m| m.rows);
        let action_dim = action_gens.first().map_or(0, |m| m.rows);
        for m in group_gens {
            if m.rows != group_dim || m.cols != group_dim || m.p != p {
                return Err(Error::DimensionMismatch("group generator shape".into()));
            }
            m.inverse().map_err(|_| Error::SingularMatrix)?;
        }
        for m in action_gens {
            if m.rows != action_dim || m.cols != action_dim || m.p != p {
                return Err(Error::DimensionMismatch("action generator shape".into()));
            }
            if action_dim > 0 {
                m.inverse().map_err(|_| Error::SingularMatrix)?;
            }
        }
        let mut rep = FiniteRepresentation {
            p,
            group_dim,
            action_dim,
            generators: Vec::new(),
            elems: Vec::new(),
            index: HashMap::new(),
        };
        rep.push_pair(
            FpMatrix::identity(p, group_dim),
            FpMatrix::identity(p, action_dim),
        )?;
        for (g, a) in group_gens.iter().zip(action_gens) {
            let idx = rep.insert_pair(g.clone(), a.clone(), bound)?;
            rep.generators.push(idx);
        }
        // BFS closure under multiplication by the generators
        let mut frontier = 0;
        while frontier < rep.elems.len() {
            let (g0, a0) = rep.elems[frontier].clone();
            for (g, a) in group_gens.iter().zip(action_gens) {
                rep.insert_pair(g0.multiply(g), a0.multiply(a), bound)?;
            }
            frontier += 1;
        }
        Ok(rep)
    }

    /// Direct construction from an already closed pair list; the identity
    /// pair must be present. Verifies action well-definedness.
    pub fn from_closed_pairs(
        p: u64,
        pairs: Vec<(FpMatrix, FpMatrix)>,
        generators: Vec<usize>,
    ) -> Result<FiniteRepresentation> {
        let group_dim = pairs.first().map(|(g, _)| g.rows).unwrap_or(1);
        let action_dim = pairs.first().map(|(_, a)| a.rows).unwrap_or(0);
        let mut rep = FiniteRepresentation {
            p,
            group_dim,
            action_dim,
            generators,
            elems: Vec::new(),
            index: HashMap::new(),
        };
        for (g, a) in pairs {
            rep.push_pair(g, a)?;
        }
        Ok(rep)
    }

    /// The trivial group acting on F_p^dim.
    pub fn trivial(p: u64, dim: usize) -> FiniteRepresentation {
        FiniteRepresentation::from_closed_pairs(
            p,
            vec![(FpMatrix::identity(p, 1), FpMatrix::identity(p, dim))],
            Vec::new(),
        )
        .expect("trivial representation")
    }

    fn push_pair(&mut self, g: FpMatrix, a: FpMatrix) -> Result<usize> {
        match self.index.get(g.data()) {
            Some(&i) => {
                if self.elems[i].1 != a {
                    Err(Error::IllDefinedAction)
                } else {
                    Ok(i)
                }
            }
            None => {
                let i = self.elems.len();
                self.index.insert(g.data().to_vec(), i);
                self.elems.push((g, a));
                Ok(i)
            }
        }
    }

    fn insert_pair(&mut self, g: FpMatrix, a: FpMatrix, bound: usize) -> Result<usize> {
        if !self.index.contains_key(g.data()) && self.elems.len() >= bound {
            return Err(Error::GroupTooLarge(bound));
        }
        self.push_pair(g, a)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn field(&self) -> Field {
        Field::Fp(self.p)
    }

    pub fn group_dim(&self) -> usize {
        self.group_dim
    }

    pub fn action_dim(&self) -> usize {
        self.action_dim
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn group_matrix(&self, i: usize) -> &FpMatrix {
        &self.elems[i].0
    }

    pub fn action_matrix(&self, i: usize) -> &FpMatrix {
        &self.elems[i].1
    }

    pub fn index_of(&self, g: &FpMatrix) -> Option<usize> {
        self.index.get(g.data()).copied()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        let prod = self.elems[i].0.multiply(&self.elems[j].0);
        *self
            .index
            .get(prod.data())
            .expect("closure contains all products")
    }

    pub fn inv(&self, i: usize) -> usize {
        (0..self.size())
            .find(|&j| self.mul(i, j) == self.identity())
            .expect("finite group contains inverses")
    }

    /// Well-definedness holds by construction; re-verify on demand.
    pub fn verify_well_defined(&self) -> bool {
        let mut seen: HashMap<&[u64], &FpMatrix> = HashMap::new();
        for (g, a) in &self.elems {
            match seen.get(g.data()) {
                Some(prev) if **prev != *a => return false,
                _ => {
                    seen.insert(g.data(), a);
                }
            }
        }
        true
    }

    /// beta extends to F(Y) -> G; returns the element index of f^beta.
    pub fn eval_word(&self, beta: &[usize], f: &Word) -> Result<usize> {
        let mut acc = self.identity();
        for l in f.letters() {
            if l.gen > beta.len() {
                return Err(Error::IndexOutOfRange(l.gen, beta.len()));
            }
            let e = beta[l.gen - 1];
            let e = if l.inverse { self.inv(e) } else { e };
            acc = self.mul(acc, e);
        }
        Ok(acc)
    }

    /// rho(u^beta) as a d x d matrix, for u over F_p.
    pub fn eval_ring(&self, beta: &[usize], u: &GroupRingElement) -> Result<FpMatrix> {
        if u.field() != self.field() {
            return Err(Error::FieldMismatch(
                u.field().to_string(),
                self.field().to_string(),
            ));
        }
        let mut out = FpMatrix::zero(self.p, self.action_dim, self.action_dim);
        for (w, c) in u.terms() {
            let Scalar::Fp { v, .. } = c else { unreachable!() };
            let g = self.eval_word(beta, w)?;
            out = out.add(&self.action_matrix(g).scale(*v));
        }
        Ok(out)
    }

    /// w^(alpha,beta) = sum_k alpha(x_k) * rho(u_k^beta).
    pub fn eval_point(
        &self,
        alpha: &[Vec<u64>],
        beta: &[usize],
        w: &FreeModuleElement,
    ) -> Result<Vec<u64>> {
        let mut out = vec![0u64; self.action_dim];
        for (k, u) in w.components() {
            if k > alpha.len() {
                return Err(Error::IndexOutOfRange(k, alpha.len()));
            }
            let m = self.eval_ring(beta, u)?;
            out = vec_add(self.p, &out, &row_times_matrix(self.p, &alpha[k - 1], &m));
        }
        Ok(out)
    }

    /// ker rho = elements acting as the identity; a normal subgroup.
    pub fn action_kernel(&self) -> Vec<usize> {
        let ker: Vec<usize> = (0..self.size())
            .filter(|&i| self.action_matrix(i).is_identity())
            .collect();
        debug_assert!(self.is_normal(&ker));
        ker
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        if !set.contains(&self.identity()) {
            return false;
        }
        set.iter()
            .all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    pub fn is_normal(&self, set: &[usize]) -> bool {
        if !self.is_subgroup(set) {
            return false;
        }
        (0..self.size()).all(|g| {
            let gi = self.inv(g);
            set.iter().all(|&k| set.contains(&self.mul(self.mul(gi, k), g)))
        })
    }

    /// (V, G/ker rho): group elements become the distinct action matrices.
    pub fn faithful_image(&self) -> FiniteRepresentation {
        // directly constructed reps may carry no generator list; fall back
        // to the full element list
        let gen_indices: Vec<usize> = if self.generators.is_empty() {
            (0..self.size()).collect()
        } else {
            self.generators.clone()
        };
        let gens: Vec<FpMatrix> = gen_indices
            .iter()
            .map(|&i| self.action_matrix(i).clone())
            .collect();
        FiniteRepresentation::generate(self.p, &gens, &gens, self.size().max(1))
            .expect("faithful image closure stays within the original size")
    }
}

/// The regular representation (KG, G): V = F_p^{|G|} with basis indexed by
/// the elements, G permuting the basis by right multiplication.
pub fn regular_representation(rep: &FiniteRepresentation) -> FiniteRepresentation {
    let n = rep.size();
    let pairs: Vec<(FpMatrix, FpMatrix)> = (0..n)
        .map(|g| (rep.group_matrix(g).clone(), right_mult_matrix(rep, g)))
        .collect();
    let gens = rep.generators().to_vec();
    FiniteRepresentation::from_closed_pairs(rep.p(), pairs, gens)
        .expect("right multiplication is well-defined")
}

/// Matrix of v -> v*g on KG in the element basis (a permutation matrix).
pub fn right_mult_matrix(rep: &FiniteRepresentation, g: usize) -> FpMatrix {
    let n = rep.size();
    let mut m = FpMatrix::zero(rep.p(), n, n);
    for i in 0..n {
        m[(i, rep.mul(i, g))] = 1;
    }
    m
}

/// Matrix of v -> g*v on KG in the element basis.
pub fn left_mult_matrix(rep: &FiniteRepresentation, g: usize) -> FpMatrix {
    let n = rep.size();
    let mut m = FpMatrix::zero(rep.p(), n, n);
    for i in 0..n {
        m[(i, rep.mul(g, i))] = 1;
    }
    m
}

/// A right ideal U <= KG in canonical echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightIdealBasis {
    pub space: RowSpace,
    pub two_sided: bool,
}

/// Checks span closure under right multiplication by every group element.
pub fn is_right_ideal(rep: &FiniteRepresentation, space: &RowSpace) -> bool {
    (0..rep.size()).all(|g| {
        let m = right_mult_matrix(rep, g);
        space
            .rows()
            .iter()
            .all(|r| space.contains(&row_times_matrix(rep.p(), r, &m)))
    })
}

pub fn is_two_sided_ideal(rep: &FiniteRepresentation, space: &RowSpace) -> bool {
    is_right_ideal(rep, space)
        && (0..rep.size()).all(|g| {
            let m = left_mult_matrix(rep, g);
            space
                .rows()
                .iter()
                .all(|r| space.contains(&row_times_matrix(rep.p(), r, &m)))
        })
}

/// Builds a verified right ideal from spanning vectors in KG coordinates.
pub fn right_ideal(rep: &FiniteRepresentation, vectors: &[Vec<u64>]) -> Result<RightIdealBasis> {
    let space = RowSpace::new(rep.p(), rep.size(), vectors);
    if !is_right_ideal(rep, &space) {
        return Err(Error::NotRightIdeal);
    }
    let two_sided = is_two_sided_ideal(rep, &space);
    Ok(RightIdealBasis { space, two_sided })
}

/// ann_{KG} S for a subset S of the module V: the kernel of the stacked
/// multiplication maps, solved by exact elimination.
pub fn annihilator(rep: &FiniteRepresentation, s: &[Vec<u64>]) -> Result<RightIdealBasis> {
    let n = rep.size();
    let d = rep.action_dim();
    // M has a row per group element: the concatenated images x * A_g
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
    for g in 0..n {
        let a = rep.action_matrix(g);
        let mut row = Vec::with_capacity(d * s.len());
        for x in s {
            if x.len() != d {
                return Err(Error::DimensionMismatch("module vector length".into()));
            }
            row.extend(row_times_matrix(rep.p(), x, a));
        }
        rows.push(row);
    }
    let m = FpMatrix::from_rows(rep.p(), &rows);
    let basis = crate::fpmat::left_null_space(&m);
    let space = RowSpace::new(rep.p(), n, &basis);
    if !is_right_ideal(rep, &space) {
        return Err(Error::NotRightIdeal);
    }
    let two_sided = is_two_sided_ideal(rep, &space);
    Ok(RightIdealBasis { space, two_sided })
}

/// stab_{KG} S = 1 + ann_{KG} S, kept as the annihilator plus the affine
/// shift; group membership reduces to g - 1 in ann.
#[derive(Debug, Clone)]
pub struct Stabilizer {
    pub ann: RightIdealBasis,
}

pub fn stabilizer(rep: &FiniteRepresentation, s: &[Vec<u64>]) -> Result<Stabilizer> {
    Ok(Stabilizer {
        ann: annihilator(rep, s)?,
    })
}

impl Stabilizer {
    /// g in stab iff g - 1 in ann, in KG coordinates.
    pub fn contains_element(&self, rep: &FiniteRepresentation, g: usize) -> bool {
        let mut v = vec![0u64; rep.size()];
        v[g] = 1;
        v[rep.identity()] = (v[rep.identity()] + rep.p() - 1) % rep.p();
        self.ann.space.contains(&v)
    }
}

/// (KG/U, G): the quotient module with the induced action,
/// coordinatized by the non-pivot columns of U's echelon basis.
pub fn quotient_module_representation(
    rep: &FiniteRepresentation,
    u: &RightIdealBasis,
) -> Result<FiniteRepresentation> {
    let n = rep.size();
    let comp = u.space.complement_columns();
    let qdim = comp.len();
    let mut pairs = Vec::with_capacity(n);
    for g in 0..n {
        let rg = right_mult_matrix(rep, g);
        let mut q = FpMatrix::zero(rep.p(), qdim, qdim);
        for (qi, &col) in comp.iter().enumerate() {
            let mut e = vec![0u64; n];
            e[col] = 1;
            let image = u.space.reduce(&row_times_matrix(rep.p(), &e, &rg));
            for (qj, &c2) in comp.iter().enumerate() {
                q[(qi, qj)] = image[c2];
            }
        }
        pairs.push((rep.group_matrix(g).clone(), q));
    }
    FiniteRepresentation::from_closed_pairs(rep.p(), pairs, rep.generators().to_vec())
}

/// ker(KG/U, G) computed directly as (1 + U) cap G = {g | g - 1 in U}.
pub fn kernel_via_ideal(rep: &FiniteRepresentation, u: &RightIdealBasis) -> Result<Vec<usize>> {
    if !u.two_sided {
        return Err(Error::NotTwoSided);
    }
    let n = rep.size();
    Ok((0..n)
        .filter(|&g| {
            let mut v = vec![0u64; n];
            v[g] = (v[g] + 1) % rep.p();
            v[rep.identity()] = (v[rep.identity()] + rep.p() - 1) % rep.p();
            u.space.contains(&v)
        })
        .collect())
}

/// All subspaces of F_p^n, as canonical row spaces. Desk scale only.
pub fn enumerate_subspaces(p: u64, n: usize) -> Vec<RowSpace> {
    let vectors = all_vectors(p, n);
    let mut seen: Vec<RowSpace> = vec![RowSpace::empty(p, n)];
    let mut frontier = 0;
    while frontier < seen.len() {
        let base = seen[frontier].clone();
        for v in &vectors {
            let mut ext = base.clone();
            if ext.insert(v) && !seen.contains(&ext) {
                seen.push(ext);
            }
        }
        frontier += 1;
    }
    seen
}

pub fn all_vectors(p: u64, n: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .iter()
            .flat_map(|v| {
                (0..p).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

/// C_2 acting on F_p^1 by negation (faithful for p > 2).
pub fn c2_negation(p: u64) -> FiniteRepresentation {
    let g = FpMatrix::from_rows(p, &[vec![p - 1]]);
    FiniteRepresentation::generate(p, &[g.clone()], &[g], DEFAULT_GROUP_BOUND).unwrap()
}

/// C_2 realized faithfully but acting trivially on F_p^1.
pub fn c2_trivial_action(p: u64) -> FiniteRepresentation {
    let g = FpMatrix::from_rows(p, &[vec![p - 1]]);
    let a = FpMatrix::identity(p, 1);
    FiniteRepresentation::generate(p, &[g], &[a], DEFAULT_GROUP_BOUND).unwrap()
}

/// Cyclic group of order n realized by permutation matrices, acting on
/// F_p^1 through the given 1x1 action value per generator.
pub fn cyclic_rep(p: u64, n: usize, action_value: u64) -> FiniteRepresentation {
    let mut g = FpMatrix::zero(p, n, n);
    for i in 0..n {
        g[(i, (i + 1) % n)] = 1;
    }
    let a = FpMatrix::from_rows(p, &[vec![action_value % p]]);
    FiniteRepresentation::generate(p, &[g], &[a], DEFAULT_GROUP_BOUND).unwrap()
}
