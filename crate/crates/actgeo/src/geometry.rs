//! The Galois machinery over a finite representation: algebraic sets,
//! closure membership, quasi-identity checking and a bounded refuter for
//! action-type geometric equivalence.

use crate::error::{Error, Result};
use crate::module::FreeModuleElement;
use crate::rep::FiniteRepresentation;
use crate::ring::GroupRingElement;
use crate::word::{Letter, Word};
use rayon::prelude::*;

pub const DEFAULT_POINT_BUDGET: u128 = 1_000_000;

/// A point (alpha, beta) of the affine space Hom(W(X,Y),(V,G)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub alpha: Vec<Vec<u64>>,
    pub beta: Vec<usize>,
}

/// A system of equations: module elements read as w = 0 and optional
/// group words read as f = 1.
#[derive(Debug, Clone, Default)]
pub struct EquationSet {
    pub action: Vec<FreeModuleElement>,
    pub group: Vec<Word>,
}

impl EquationSet {
    pub fn action_only(eqs: Vec<FreeModuleElement>) -> EquationSet {
        EquationSet {
            action: eqs,
            group: Vec::new(),
        }
    }
}

/// One of the two conclusion kinds of a quasi-identity.
#[derive(Debug, Clone)]
pub enum Conclusion {
    Module(FreeModuleElement),
    Group(Word),
}

/// (/\ w_i = 0) /\ (/\ f_j = 1) => conclusion.
#[derive(Debug, Clone)]
pub struct QuasiIdentity {
    pub premises: Vec<FreeModuleElement>,
    pub group_premises: Vec<Word>,
    pub conclusion: Conclusion,
}

/// Number of points of the affine space, before enumerating any.
pub fn point_count(rep: &FiniteRepresentation, nx: usize, ny: usize) -> u128 {
    let v = (rep.p() as u128).pow((rep.action_dim() * nx) as u32);
    v.saturating_mul((rep.size() as u128).pow(ny as u32))
}

/// Every point exactly once, lexicographic in alpha then beta.
pub fn enumerate_points(
    rep: &FiniteRepresentation,
    nx: usize,
    ny: usize,
    budget: u128,
) -> Result<Vec<Point>> {
    let needed = point_count(rep, nx, ny);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let d = rep.action_dim();
    let p = rep.p();
    let mut alphas: Vec<Vec<Vec<u64>>> = vec![vec![]];
    for _ in 0..nx {
        alphas = alphas
            .iter()
            .flat_map(|a| {
                crate::rep::all_vectors(p, d).into_iter().map(move |v| {
                    let mut b = a.clone();
                    b.push(v);
                    b
                })
            })
            .collect();
    }
    let mut betas: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..ny {
        betas = betas
            .iter()
            .flat_map(|b| {
                (0..rep.size()).map(move |g| {
                    let mut c = b.clone();
                    c.push(g);
                    c
                })
            })
            .collect();
    }
    let mut out = Vec::with_capacity(alphas.len() * betas.len());
    for a in &alphas {
        for b in &betas {
            out.push(Point {
                alpha: a.clone(),
                beta: b.clone(),
            });
        }
    }
    Ok(out)
}

fn satisfies(rep: &FiniteRepresentation, pt: &Point, t: &EquationSet) -> Result<bool> {
    for w in &t.action {
        let v = rep.eval_point(&pt.alpha, &pt.beta, w)?;
        if v.iter().any(|&x| x != 0) {
            return Ok(false);
        }
    }
    for f in &t.group {
        if rep.eval_word(&pt.beta, f)? != rep.identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// T^nabla: the points annihilating every equation of T.
pub fn algebraic_set(
    rep: &FiniteRepresentation,
    t: &EquationSet,
    nx: usize,
    ny: usize,
    budget: u128,
) -> Result<Vec<Point>> {
    let pts = enumerate_points(rep, nx, ny, budget)?;
    let mut out = Vec::new();
    for pt in pts {
        if satisfies(rep, &pt, t)? {
            out.push(pt);
        }
    }
    Ok(out)
}

/// w0 in T^{nabla nabla}: w0 vanishes on every point of T's algebraic set.
pub fn closure_member(
    rep: &FiniteRepresentation,
    t: &EquationSet,
    w0: &FreeModuleElement,
    nx: usize,
    ny: usize,
    budget: u128,
) -> Result<bool> {
    for pt in algebraic_set(rep, t, nx, ny, budget)? {
        let v = rep.eval_point(&pt.alpha, &pt.beta, w0)?;
        if v.iter().any(|&x| x != 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// f0 is in the second (group) component of the bi-sided closure of T.
pub fn group_closure_member(
    rep: &FiniteRepresentation,
    t: &EquationSet,
    f0: &Word,
    nx: usize,
    ny: usize,
    budget: u128,
) -> Result<bool> {
    for pt in algebraic_set(rep, t, nx, ny, budget)? {
        if rep.eval_word(&pt.beta, f0)? != rep.identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Direct point-enumeration semantics of a quasi-identity.
pub fn check_quasi_identity(
    rep: &FiniteRepresentation,
    q: &QuasiIdentity,
    nx: usize,
    ny: usize,
    budget: u128,
) -> Result<bool> {
    let premises = EquationSet {
        action: q.premises.clone(),
        group: q.group_premises.clone(),
    };
    for pt in algebraic_set(rep, &premises, nx, ny, budget)? {
        let holds = match &q.conclusion {
            Conclusion::Module(w0) => rep
                .eval_point(&pt.alpha, &pt.beta, w0)?
                .iter()
                .all(|&x| x == 0),
            Conclusion::Group(f0) => rep.eval_word(&pt.beta, f0)? == rep.identity(),
        };
        if !holds {
            return Ok(false);
        }
    }
    Ok(true)
}

/// f = 1 under every assignment of Y into G.
pub fn is_group_identity(
    rep: &FiniteRepresentation,
    f: &Word,
    ny: usize,
    budget: u128,
) -> Result<bool> {
    group_closure_member(rep, &EquationSet::default(), f, 0, ny, budget)
}

/// All reduced words over ny generators with length in 1..=max_len.
pub fn reduced_words(ny: usize, max_len: usize) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    let mut level: Vec<Word> = vec![Word::identity()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &level {
            for g in 1..=ny {
                for inv in [false, true] {
                    let l = Letter::new(g, inv);
                    let ext = w.multiply(&Word::from_letters([l]));
                    if ext.len() == w.len() + 1 {
                        next.push(ext);
                    }
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out.sort();
    out.dedup();
    out
}

/// Verifies (T, Id(G,Y))' = T^nabla: adjoining every group identity of G
/// (up to max_len) to T does not shrink the algebraic set.
pub fn identity_invariance_check(
    rep: &FiniteRepresentation,
    t: &EquationSet,
    nx: usize,
    ny: usize,
    max_len: usize,
    budget: u128,
) -> Result<bool> {
    let mut identities = Vec::new();
    for f in reduced_words(ny, max_len) {
        if is_group_identity(rep, &f, ny, budget)? {
            identities.push(f);
        }
    }
    let plain = algebraic_set(rep, t, nx, ny, budget)?;
    let bisided = algebraic_set(
        rep,
        &EquationSet {
            action: t.action.clone(),
            group: t.group.iter().cloned().chain(identities).collect(),
        },
        nx,
        ny,
        budget,
    )?;
    Ok(plain == bisided)
}

/// Canonical pool of candidate module elements: x_k o u for
/// u in {1} cup {w} cup {w - 1}, words of length <= max_len.
pub fn candidate_pool(
    rep: &FiniteRepresentation,
    nx: usize,
    ny: usize,
    max_len: usize,
) -> Vec<FreeModuleElement> {
    let field = rep.field();
    let mut rings = vec![GroupRingElement::one(field)];
    for w in reduced_words(ny, max_len) {
        rings.push(GroupRingElement::word(field, w.clone()));
        rings.push(
            GroupRingElement::word(field, w)
                .sub(&GroupRingElement::one(field))
                .expect("same field"),
        );
    }
    let mut out = Vec::new();
    for k in 1..=nx {
        for u in &rings {
            out.push(FreeModuleElement::action_term(k, u.clone()));
        }
    }
    out
}

/// A counterexample to action-type geometric equivalence: a premise set T
/// and an element w0 closed over exactly one of the two representations.
#[derive(Debug, Clone)]
pub struct Witness {
    pub premises: Vec<FreeModuleElement>,
    pub w0: FreeModuleElement,
    pub closed_in_first: bool,
}

#[derive(Debug, Clone)]
pub struct RefuteOutcome {
    pub witness: Option<Witness>,
    pub sampled: bool,
    pub seed: u64,
    pub cases_tested: u64,
}

/// Search parameters for the bounded refuter.
#[derive(Debug, Clone, Copy)]
pub struct RefuteBounds {
    pub nx: usize,
    pub ny: usize,
    pub max_premises: usize,
    pub max_len: usize,
    pub point_budget: u128,
    pub case_budget: u64,
    pub seed: u64,
}

impl Default for RefuteBounds {
    fn default() -> RefuteBounds {
        RefuteBounds {
            nx: 1,
            ny: 1,
            max_premises: 2,
            max_len: 3,
            point_budget: DEFAULT_POINT_BUDGET,
            case_budget: 200_000,
            seed: 0,
        }
    }
}

fn subsets_up_to(n: usize, k: usize) -> Vec<Vec<usize>> {
    // ordered by size, then lexicographic
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    let mut level: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for s in &level {
            let start = s.last().map_or(0, |&x| x + 1);
            for i in start..n {
                let mut t = s.clone();
                t.push(i);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

/// Bounded witness search for non-equivalence. Returns the first witness
/// in enumeration order (deterministic for any worker count), or none.
pub fn refute_equivalence(
    rep1: &FiniteRepresentation,
    rep2: &FiniteRepresentation,
    bounds: &RefuteBounds,
) -> Result<RefuteOutcome> {
    if rep1.p() != rep2.p() {
        return Err(Error::FieldMismatch(
            rep1.field().to_string(),
            rep2.field().to_string(),
        ));
    }
    let pool = candidate_pool(rep1, bounds.nx, bounds.ny, bounds.max_len);
    let subsets = subsets_up_to(pool.len(), bounds.max_premises);
    let total = subsets.len() as u64 * pool.len() as u64;
    let sampled = total > bounds.case_budget;

    let cases: Vec<(usize, usize)> = if sampled {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(bounds.seed);
        (0..bounds.case_budget)
            .map(|_| {
                (
                    rng.gen_range(0..subsets.len()),
                    rng.gen_range(0..pool.len()),
                )
            })
            .collect()
    } else {
        subsets
            .iter()
            .enumerate()
            .flat_map(|(si, _)| (0..pool.len()).map(move |wi| (si, wi)))
            .collect()
    };

    let check = |&(si, wi): &(usize, usize)| -> Option<Result<Witness>> {
        let subset = &subsets[si];
        if subset.contains(&wi) {
            return None; // trivially closed on both sides
        }
        let premises: Vec<FreeModuleElement> = subset.iter().map(|&i| pool[i].clone()).collect();
        let t = EquationSet::action_only(premises.clone());
        let w0 = &pool[wi];
        let in1 = match closure_member(rep1, &t, w0, bounds.nx, bounds.ny, bounds.point_budget) {
            Ok(b) => b,
            Err(e) => return Some(Err(e)),
        };
        let in2 = match closure_member(rep2, &t, w0, bounds.nx, bounds.ny, bounds.point_budget) {
            Ok(b) => b,
            Err(e) => return Some(Err(e)),
        };
        if in1 != in2 {
            Some(Ok(Witness {
                premises,
                w0: w0.clone(),
                closed_in_first: in1,
            }))
        } else {
            None
        }
    };

    let found = cases.par_iter().find_map_first(check).transpose()?;
    Ok(RefuteOutcome {
        witness: found,
        sampled,
        seed: bounds.seed,
        cases_tested: cases.len() as u64,
    })
}

/// First word (length <= max_len) that is a group identity of exactly one
/// of the two representations; `true` marks the first.
pub fn find_group_equation_witness(
    rep1: &FiniteRepresentation,
    rep2: &FiniteRepresentation,
    ny: usize,
    max_len: usize,
    budget: u128,
) -> Result<Option<(Word, bool)>> {
    for f in reduced_words(ny, max_len) {
        let a = is_group_identity(rep1, &f, ny, budget)?;
        let b = is_group_identity(rep2, &f, ny, budget)?;
        if a != b {
            return Ok(Some((f, a)));
        }
    }
    Ok(None)
}

/// Membership fingerprint of T^{nabla nabla} over the canonical pool of
/// single-generator-support elements; monotone in T.
pub fn closed_submodule_signature(
    rep: &FiniteRepresentation,
    t: &EquationSet,
    nx: usize,
    ny: usize,
    max_len: usize,
    budget: u128,
) -> Result<Vec<bool>> {
    let pool = candidate_pool(rep, nx, ny, max_len);
    let set = algebraic_set(rep, t, nx, ny, budget)?;
    let mut bits = Vec::with_capacity(pool.len());
    for w in &pool {
        let mut closed = true;
        for pt in &set {
            if rep
                .eval_point(&pt.alpha, &pt.beta, w)?
                .iter()
                .any(|&x| x != 0)
            {
                closed = false;
                break;
            }
        }
        bits.push(closed);
    }
    Ok(bits)
}
