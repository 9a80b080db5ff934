//! Finitely presented groups and the certificates behind fundamental-group
//! claims: abelianization via Smith normal form, bounded coset enumeration,
//! Tietze simplification, surgery quotients, and amalgam evaluation.
//!
//! Commutator convention throughout: `[u, v] = u v u⁻¹ v⁻¹`. The relator
//! tables of the product-complement presentations depend on it.

pub mod coset;
pub mod snf;

pub use coset::{coset_enumeration, CosetResult, DEFAULT_COSET_CAP};
pub use snf::{smith_normal_form, snf_divisors_naive, Snf};

use crate::matrix::IntMat;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("word references generator index {0} outside the presentation")]
    InvalidWord(i32),
    #[error("no edge generator has a certified-trivial image; nothing to simplify")]
    NoApplicableEdge,
}

/// A word over the generators of a presentation: letter `+i` is the i-th
/// generator (1-based), `−i` its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Word(pub Vec<i32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn gen(i: usize) -> Self {
        Word(vec![i as i32 + 1])
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&l| -l).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        Word(w).free_reduce()
    }

    pub fn pow(&self, n: i32) -> Word {
        let base = if n >= 0 { self.clone() } else { self.inverse() };
        let mut w = Word::empty();
        for _ in 0..n.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }

    /// `[u, v] = u v u⁻¹ v⁻¹`
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.concat(v).concat(&u.inverse()).concat(&v.inverse())
    }

    /// `w^φ = φ w φ⁻¹`
    pub fn conjugate(&self, by: &Word) -> Word {
        by.concat(self).concat(&by.inverse())
    }

    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<i32> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Free and cyclic reduction.
    pub fn cyclic_reduce(&self) -> Word {
        let mut w = self.free_reduce().0;
        while w.len() >= 2 && w.first() == w.last().map(|&l| -l).as_ref() {
            w.remove(0);
            w.pop();
        }
        Word(w)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Canonical representative among all rotations of the word and of its
    /// inverse; used to recognize duplicate relators.
    fn canonical_cyclic(&self) -> Vec<i32> {
        let w = self.cyclic_reduce().0;
        if w.is_empty() {
            return w;
        }
        let mut best: Option<Vec<i32>> = None;
        for candidate in [w.clone(), Word(w.clone()).inverse().0] {
            for r in 0..candidate.len() {
                let mut rot = candidate.clone();
                rot.rotate_left(r);
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot);
                }
            }
        }
        best.unwrap()
    }

    /// The four commutators `[u^{±1}, v^{±1}]`; constructions whose sign
    /// conventions are underdetermined are certified over all of them.
    pub fn commutator_sign_variants(u: &Word, v: &Word) -> Vec<Word> {
        let mut out = Vec::with_capacity(4);
        for su in [1, -1] {
            for sv in [1, -1] {
                out.push(Word::commutator(&u.pow(su), &v.pow(sv)));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FpGroup {
    pub gens: Vec<String>,
    pub relators: Vec<Word>,
}

/// Abelianization data: elementary divisors greater than one, plus the free
/// rank. `ℤ_n` has divisors `[n]` for n ≥ 2; `ℤ` is rank 1 with no divisors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Abelianization {
    pub divisors: Vec<i128>,
    pub rank: usize,
}

impl Abelianization {
    pub fn is_trivial(&self) -> bool {
        self.divisors.is_empty() && self.rank == 0
    }

    /// Recognizes ℤ_n (with ℤ_0 = ℤ and ℤ_1 trivial).
    pub fn is_cyclic_of_order(&self, n: u32) -> bool {
        match n {
            0 => self.rank == 1 && self.divisors.is_empty(),
            1 => self.is_trivial(),
            _ => self.rank == 0 && self.divisors == vec![n as i128],
        }
    }

    pub fn order(&self) -> Option<i128> {
        if self.rank > 0 {
            return None;
        }
        Some(self.divisors.iter().product())
    }
}

impl FpGroup {
    pub fn new(gens: Vec<String>, relators: Vec<Word>) -> Result<Self, GroupError> {
        let g = FpGroup { gens, relators };
        g.check_words()?;
        Ok(g)
    }

    fn check_words(&self) -> Result<(), GroupError> {
        let n = self.gens.len() as i32;
        for r in &self.relators {
            for &l in &r.0 {
                if l == 0 || l.abs() > n {
                    return Err(GroupError::InvalidWord(l));
                }
            }
        }
        Ok(())
    }

    /// Test helper: relators as signed-letter slices.
    pub fn parse_gens_relators(gens: &[&str], relators: &[&[i32]]) -> FpGroup {
        FpGroup::new(
            gens.iter().map(|s| s.to_string()).collect(),
            relators.iter().map(|r| Word(r.to_vec())).collect(),
        )
        .expect("bad test presentation")
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g == name)
    }

    /// Word from generator names with signs, e.g. `[("a", 1), ("b", -2)]`.
    pub fn word(&self, letters: &[(&str, i32)]) -> Result<Word, GroupError> {
        let mut w = Word::empty();
        for &(name, pow) in letters {
            let i = self.gen_index(name).ok_or(GroupError::InvalidWord(0))?;
            w = w.concat(&Word::gen(i).pow(pow));
        }
        Ok(w)
    }

    /// Exponent-sum matrix of the relators (rows) against the generators
    /// (columns).
    pub fn relator_matrix(&self) -> IntMat {
        let mut m = IntMat::zeros(self.relators.len(), self.gens.len());
        for (i, r) in self.relators.iter().enumerate() {
            for &l in &r.0 {
                let j = l.unsigned_abs() as usize - 1;
                m[(i, j)] += if l > 0 { 1 } else { -1 };
            }
        }
        m
    }

    /// Abelianization via Smith normal form of the relator matrix.
    pub fn abelianization(&self) -> Abelianization {
        abelianization_of_matrix(&self.relator_matrix())
    }

    pub fn add_relator(&mut self, w: Word) -> Result<(), GroupError> {
        self.relators.push(w);
        self.check_words()
    }

    /// Quotient by the relator `μ^p λ^q` (the relation a torus surgery with
    /// coefficient p/q imposes on the complement group).
    pub fn surgery_quotient(&self, mu: &Word, lambda: &Word, p: i32, q: i32) -> Result<FpGroup, GroupError> {
        let mut g = self.clone();
        g.add_relator(mu.pow(p).concat(&lambda.pow(q)))?;
        Ok(g)
    }

    /// Bounded certificate that `w` represents the identity: breadth-first
    /// search over free reductions and relator insertions. `true` is a sound
    /// answer; `false` only means the budget was exhausted.
    pub fn certifies_trivial(&self, w: &Word, budget: usize) -> bool {
        let start = w.free_reduce();
        if start.is_empty() {
            return true;
        }
        let mut moves: Vec<Vec<i32>> = Vec::new();
        for r in &self.relators {
            let rr = r.cyclic_reduce();
            if rr.is_empty() {
                continue;
            }
            for base in [rr.clone(), rr.inverse()] {
                for rot in 0..base.len() {
                    let mut m = base.0.clone();
                    m.rotate_left(rot);
                    moves.push(m);
                }
            }
        }
        moves.sort();
        moves.dedup();
        let cap = start.len() + moves.iter().map(|m| m.len()).max().unwrap_or(0) + 4;
        let mut seen: BTreeSet<Vec<i32>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
        seen.insert(start.0.clone());
        queue.push_back(start.0);
        let mut visited = 0usize;
        while let Some(cur) = queue.pop_front() {
            visited += 1;
            if visited > budget {
                return false;
            }
            for m in &moves {
                // cancel an occurrence of a relator prefix against the word
                for pos in 0..=cur.len() {
                    if pos + m.len() > cap {
                        continue;
                    }
                    let mut next = Vec::with_capacity(cur.len() + m.len());
                    next.extend_from_slice(&cur[..pos]);
                    next.extend_from_slice(m);
                    next.extend_from_slice(&cur[pos..]);
                    let red = Word(next).free_reduce();
                    if red.is_empty() {
                        return true;
                    }
                    if red.len() <= cap && red.len() <= cur.len() + 2 && seen.insert(red.0.clone()) {
                        queue.push_back(red.0);
                    }
                }
            }
        }
        false
    }

    /// Tietze simplification: free/cyclic reduction, duplicate removal,
    /// removal of relators derivable from the rest (bounded search), and
    /// elimination of generators defined by a relator. The result presents a
    /// group isomorphic to the input; the abelianization is preserved.
    pub fn tietze_simplify(&self, budget: usize) -> FpGroup {
        let shape = |g: &FpGroup| (g.gens.len(), g.relators.len(), g.relators.iter().map(Word::len).sum::<usize>());
        let mut g = self.clone();
        for _ in 0..budget.max(1) {
            let before = shape(&g);
            g = g.tietze_pass();
            if shape(&g) != before {
                continue;
            }
            // cheap moves are exhausted; try the bounded derivability search
            g = g.drop_derivable_relators(60 * budget.max(1));
            if shape(&g) == before {
                break;
            }
        }
        g
    }

    /// Drops any relator certified (within the node budget) to be a
    /// consequence of the remaining ones.
    fn drop_derivable_relators(&self, node_budget: usize) -> FpGroup {
        let mut relators = self.relators.clone();
        let mut i = 0;
        while i < relators.len() {
            let mut rest = relators.clone();
            let candidate = rest.remove(i);
            let probe = FpGroup { gens: self.gens.clone(), relators: rest.clone() };
            if probe.certifies_trivial(&candidate, node_budget) {
                relators = rest;
            } else {
                i += 1;
            }
        }
        FpGroup { gens: self.gens.clone(), relators }
    }

    fn tietze_pass(&self) -> FpGroup {
        let mut relators: Vec<Word> = self.relators.iter().map(Word::cyclic_reduce).collect();
        relators.retain(|r| !r.is_empty());
        // duplicates up to rotation and inversion
        let mut seen = BTreeSet::new();
        relators.retain(|r| seen.insert(r.canonical_cyclic()));

        // a generator occurring exactly once in some relator can be solved for
        for (ri, r) in relators.iter().enumerate() {
            for (pos, &l) in r.0.iter().enumerate() {
                let g = l.unsigned_abs();
                let occurrences: usize =
                    r.0.iter().filter(|&&x| x.unsigned_abs() == g).count();
                if occurrences != 1 {
                    continue;
                }
                // r = u · l · v  ⟹  gen = (v u)⁻¹ (if l positive) as a word
                // in the other generators
                let u = Word(r.0[..pos].to_vec());
                let v = Word(r.0[pos + 1..].to_vec());
                let mut replacement = v.concat(&u).inverse();
                if l < 0 {
                    replacement = replacement.inverse();
                }
                return self.eliminate_generator(g as usize - 1, &replacement, ri, &relators);
            }
        }

        FpGroup { gens: self.gens.clone(), relators }
    }

    fn eliminate_generator(&self, gen: usize, replacement: &Word, skip_relator: usize, relators: &[Word]) -> FpGroup {
        let substitute = |w: &Word| -> Word {
            let mut out = Word::empty();
            for &l in &w.0 {
                let idx = l.unsigned_abs() as usize - 1;
                if idx == gen {
                    let piece = if l > 0 { replacement.clone() } else { replacement.inverse() };
                    out = out.concat(&piece);
                } else {
                    out = out.concat(&Word(vec![l]));
                }
            }
            out
        };
        let renumber = |w: &Word| -> Word {
            Word(
                w.0.iter()
                    .map(|&l| {
                        let idx = l.unsigned_abs() as usize - 1;
                        debug_assert_ne!(idx, gen);
                        let shifted = if idx > gen { idx } else { idx + 1 };
                        (shifted as i32) * l.signum()
                    })
                    .collect(),
            )
        };
        let gens: Vec<String> =
            self.gens.iter().enumerate().filter(|&(i, _)| i != gen).map(|(_, s)| s.clone()).collect();
        let relators: Vec<Word> = relators
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip_relator)
            .map(|(_, r)| renumber(&substitute(r).cyclic_reduce()))
            .filter(|r| !r.is_empty())
            .collect();
        FpGroup { gens, relators }
    }
}

pub fn abelianization_of_matrix(m: &IntMat) -> Abelianization {
    let snf = smith_normal_form(m);
    let nonzero = snf.divisors.iter().filter(|&&d| d != 0).count();
    Abelianization {
        divisors: snf.divisors.iter().copied().filter(|&d| d > 1).collect(),
        rank: m.cols() - nonzero,
    }
}

// ---------------------------------------------------------------------------
// Amalgamated free products
// ---------------------------------------------------------------------------

/// One edge generator of an amalgam, with its images in the two factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeGen {
    pub name: String,
    pub phi1: Word,
    pub phi2: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmalgamDescription {
    pub g1: FpGroup,
    pub g2: FpGroup,
    pub edges: Vec<EdgeGen>,
}

impl AmalgamDescription {
    /// Seifert–Van-Kampen assembly: generators of both factors, relators of
    /// both factors, and one identification `φ₁(h)·φ₂(h)⁻¹` per edge.
    pub fn evaluate(&self) -> FpGroup {
        let offset = self.g1.gens.len() as i32;
        let shift = |w: &Word| Word(w.0.iter().map(|&l| l + offset * l.signum()).collect());
        let mut gens = self.g1.gens.clone();
        for g in &self.g2.gens {
            let mut name = g.clone();
            if self.g1.gens.contains(&name) {
                name.push('\'');
            }
            gens.push(name);
        }
        let mut relators = self.g1.relators.clone();
        relators.extend(self.g2.relators.iter().map(&shift));
        for e in &self.edges {
            relators.push(e.phi1.concat(&shift(&e.phi2).inverse()));
        }
        FpGroup { gens, relators }
    }

    /// Whenever an edge generator maps to a certified-trivial element of the
    /// first factor, its image normally generates a subgroup that can be
    /// killed in the second factor without changing the amalgam. Applies the
    /// reduction to a fixed point.
    pub fn simplify(&self, budget: usize) -> Result<AmalgamDescription, GroupError> {
        let mut current = self.clone();
        let mut progressed = false;
        loop {
            let mut step = None;
            for (i, e) in current.edges.iter().enumerate() {
                if current.g1.certifies_trivial(&e.phi1, budget) && !e.phi2.free_reduce().is_empty() {
                    step = Some(i);
                    break;
                }
            }
            match step {
                Some(i) => {
                    let image = current.edges[i].phi2.clone();
                    current.g2.relators.push(image);
                    current.edges[i].phi2 = Word::empty();
                    progressed = true;
                }
                None => break,
            }
        }
        if progressed {
            Ok(current)
        } else {
            Err(GroupError::NoApplicableEdge)
        }
    }
}

// ---------------------------------------------------------------------------
// Product-complement presentations
// ---------------------------------------------------------------------------

/// Boundary data for one excised Lagrangian torus: the meridian and the two
/// Lagrangian push-offs, as words in the ambient generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusBoundary {
    pub torus: String,
    pub meridian: Word,
    pub pushoff_m: Word,
    pub pushoff_l: Word,
}

pub type BoundaryData = Vec<TorusBoundary>;

/// Normal-generation data for a genus-k surface times a (punctured torus /
/// closed genus-two surface), with the standard family of 2k (respectively
/// 2k + 2) Lagrangian tori removed.
///
/// For the punctured-torus factor the generators are `x₁..x_k, y₁..y_k, a, b`
/// and the tori are `T_i`, `L_i`. For the closed genus-two factor the
/// generators are `x_i, y_i, a1, b1, a2, b2`, the tori are `T_i`, `L_i`,
/// `J1`, `J2`, and the relator family `[b2, y_i]` holds for every i.
pub fn product_complement_presentation(k: usize, closed_second_factor: bool) -> (FpGroup, BoundaryData) {
    assert!(k >= 1, "base genus must be positive");
    let mut gens: Vec<String> = Vec::new();
    for i in 1..=k {
        gens.push(format!("x{i}"));
        gens.push(format!("y{i}"));
    }
    if closed_second_factor {
        gens.extend(["a1".into(), "b1".into(), "a2".into(), "b2".into()]);
    } else {
        gens.extend(["a".into(), "b".into()]);
    }
    let g = FpGroup { gens, relators: Vec::new() };
    let xi = |i: usize| Word::gen(2 * (i - 1));
    let yi = |i: usize| Word::gen(2 * (i - 1) + 1);

    let (a1, b1, extra) = if closed_second_factor {
        let a1 = Word::gen(2 * k);
        let b1 = Word::gen(2 * k + 1);
        let a2 = Word::gen(2 * k + 2);
        let b2 = Word::gen(2 * k + 3);
        (a1, b1, Some((a2, b2)))
    } else {
        (Word::gen(2 * k), Word::gen(2 * k + 1), None)
    };

    let mut boundary = Vec::new();
    for i in 1..=k {
        boundary.push(TorusBoundary {
            torus: format!("T{i}"),
            meridian: Word::commutator(&b1.inverse(), &yi(i).inverse()),
            pushoff_m: xi(i),
            pushoff_l: a1.clone(),
        });
        boundary.push(TorusBoundary {
            torus: format!("L{i}"),
            meridian: Word::commutator(&xi(i).inverse(), &b1),
            pushoff_m: yi(i),
            pushoff_l: a1.conjugate(&b1),
        });
    }

    let mut group = g;
    if let Some((a2, b2)) = extra {
        boundary.push(TorusBoundary {
            torus: "J1".into(),
            meridian: Word::commutator(&xi(1).inverse(), &b2.inverse()),
            pushoff_m: a2.clone(),
            pushoff_l: yi(1),
        });
        boundary.push(TorusBoundary {
            torus: "J2".into(),
            meridian: Word::commutator(&a2.inverse(), &xi(1)),
            pushoff_m: b2.clone(),
            pushoff_l: yi(1).conjugate(&xi(1)),
        });
        for i in 1..=k {
            group.relators.push(Word::commutator(&b2, &yi(i)));
        }
    }
    (group, boundary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_algebra() {
        let w = Word(vec![1, 2, -2, 3]);
        assert_eq!(w.free_reduce(), Word(vec![1, 3]));
        assert_eq!(Word(vec![1, 2]).inverse(), Word(vec![-2, -1]));
        assert_eq!(Word::gen(0).pow(3), Word(vec![1, 1, 1]));
        let c = Word::commutator(&Word::gen(0), &Word::gen(1));
        assert_eq!(c, Word(vec![1, 2, -1, -2]));
        assert_eq!(Word(vec![-1, 2, 1]).cyclic_reduce(), Word(vec![2]));
    }

    #[test]
    fn abelianization_examples() {
        // ⟨a, b | [a,b], a, b²⟩ ≅ ℤ₂
        let g = FpGroup::parse_gens_relators(&["a", "b"], &[&[1, 2, -1, -2][..], &[1], &[2, 2]]);
        let ab = g.abelianization();
        assert_eq!(ab.divisors, vec![2]);
        assert_eq!(ab.rank, 0);
        assert!(ab.is_cyclic_of_order(2));

        // free group of rank 2
        let f2 = FpGroup::parse_gens_relators(&["a", "b"], &[]);
        assert_eq!(f2.abelianization().rank, 2);

        // ⟨a1, a2, a4 | [a1,a2], [a2,a4]⟩ abelianizes to ℤ³
        let g = FpGroup::parse_gens_relators(
            &["a1", "a2", "a4"],
            &[&[1, 2, -1, -2][..], &[2, 3, -2, -3]],
        );
        let ab = g.abelianization();
        assert_eq!(ab.rank, 3);
        assert!(ab.divisors.is_empty());
    }

    #[test]
    fn surgery_pipeline_telescoping() {
        // ⟨a1, b2 | [a1, b2]⟩ with trivial meridians: 1/1-surgery along a1
        // then 1/2 along b2.
        let g = FpGroup::parse_gens_relators(&["a1", "b2"], &[&[1, 2, -1, -2][..]]);
        let mu = Word::empty();
        let g = g.surgery_quotient(&mu, &Word::gen(0), 1, 1).unwrap();
        let g = g.surgery_quotient(&mu, &Word::gen(1), 1, 2).unwrap();
        assert!(g.abelianization().is_cyclic_of_order(2));
        assert_eq!(coset_enumeration(&g, &[], DEFAULT_COSET_CAP), CosetResult::Finite(2));

        // 1/n variants give every cyclic order, including 0 and 1
        for n in 0..=6 {
            let g = FpGroup::parse_gens_relators(&["a1", "b2"], &[&[1, 2, -1, -2][..]]);
            let g = g.surgery_quotient(&mu, &Word::gen(0), 1, 1).unwrap();
            let g = g.surgery_quotient(&mu, &Word::gen(1), 1, n).unwrap();
            assert!(g.abelianization().is_cyclic_of_order(n as u32), "n = {n}");
        }
    }

    #[test]
    fn tietze_examples() {
        let g = FpGroup::parse_gens_relators(&["a", "b"], &[&[1, -2][..]]);
        let s = g.tietze_simplify(10);
        assert_eq!(s.gens.len(), 1);
        assert!(s.relators.is_empty());

        // idempotence on an already-minimal presentation
        let g = FpGroup::parse_gens_relators(&["a"], &[&[1, 1][..]]);
        let s = g.tietze_simplify(10);
        assert_eq!(s, g.tietze_simplify(10).tietze_simplify(10));
        assert_eq!(s.gens.len(), 1);

        // the four-generator commutator presentation keeps its abelianization
        let g = FpGroup::parse_gens_relators(
            &["a1", "a2", "a3", "a4"],
            &[
                // a3 = [a1⁻¹, a4⁻¹], a4 = [a1, a3⁻¹]
                &[-3, -1, -4, 1, 4][..],
                &[-4, 1, -3, -1, 3],
                &[1, 2, -1, -2],
                &[2, 3, -2, -3],
                &[2, 4, -2, -4],
                &[3, 4, -3, -4],
            ],
        );
        let before = g.abelianization();
        let after = g.tietze_simplify(20).abelianization();
        assert_eq!(before, after);
        assert!(g.tietze_simplify(20).gens.len() < g.gens.len());
    }

    #[test]
    fn tietze_drops_derivable_relators() {
        // the conjugated copy of a relator is a consequence of it
        let base = Word(vec![1, 2, -1, -2]);
        let conj = base.conjugate(&Word::gen(1));
        let g = FpGroup::new(vec!["a".into(), "b".into()], vec![base.clone(), conj]).unwrap();
        let s = g.tietze_simplify(10);
        assert_eq!(s.relators.len(), 1);
        assert_eq!(s.abelianization(), g.abelianization());
        // an independent relator survives
        let g = FpGroup::new(vec!["a".into(), "b".into()], vec![base, Word(vec![1, 1])]).unwrap();
        assert_eq!(g.tietze_simplify(10).relators.len(), 2);
    }

    #[test]
    fn triviality_search() {
        // [b, y] a relator certifies [b⁻¹, y⁻¹] trivial
        let g = FpGroup::parse_gens_relators(&["b", "y"], &[&[1, 2, -1, -2][..]]);
        let w = Word::commutator(&Word::gen(0).inverse(), &Word::gen(1).inverse());
        assert!(g.certifies_trivial(&w, 50_000));
        // but not a generator
        assert!(!g.certifies_trivial(&Word::gen(0), 2_000));
    }

    #[test]
    fn amalgam_basics() {
        // trivial second factor: evaluation is the first factor
        let g1 = FpGroup::parse_gens_relators(&["a"], &[&[1, 1][..]]);
        let g2 = FpGroup::parse_gens_relators(&[], &[]);
        let a = AmalgamDescription { g1: g1.clone(), g2, edges: vec![] };
        let e = a.evaluate();
        assert_eq!(e.gens, vec!["a".to_string()]);
        assert_eq!(e.abelianization(), g1.abelianization());

        // edgeless amalgam of two ℤ's is free of rank 2
        let z = FpGroup::parse_gens_relators(&["t"], &[]);
        let a = AmalgamDescription { g1: z.clone(), g2: z, edges: vec![] };
        assert_eq!(a.evaluate().abelianization().rank, 2);
    }

    #[test]
    fn amalgam_simplify_meridian() {
        // edge h with φ1(h) = [a⁻¹, b⁻¹] trivial in G1 = ℤ² kills φ2(h) = g in G2
        let g1 = FpGroup::parse_gens_relators(&["a", "b"], &[&[1, 2, -1, -2][..]]);
        let g2 = FpGroup::parse_gens_relators(&["g"], &[]);
        let a = AmalgamDescription {
            g1,
            g2,
            edges: vec![EdgeGen {
                name: "h".into(),
                phi1: Word::commutator(&Word::gen(0).inverse(), &Word::gen(1).inverse()),
                phi2: Word::gen(0),
            }],
        };
        let s = a.simplify(50_000).unwrap();
        assert!(s.g2.relators.contains(&Word::gen(0)));
        // abelianization of the evaluated amalgam is preserved
        assert_eq!(a.evaluate().abelianization(), s.evaluate().abelianization());

        // no certified-trivial edge: nothing to do
        let g1 = FpGroup::parse_gens_relators(&["a"], &[]);
        let g2 = FpGroup::parse_gens_relators(&["g"], &[]);
        let a = AmalgamDescription {
            g1,
            g2,
            edges: vec![EdgeGen { name: "h".into(), phi1: Word::gen(0), phi2: Word::gen(0) }],
        };
        assert_eq!(a.simplify(2_000), Err(GroupError::NoApplicableEdge));
    }

    #[test]
    fn product_presentation_tables() {
        let (g, bd) = product_complement_presentation(1, false);
        assert_eq!(g.gens, vec!["x1", "y1", "a", "b"]);
        assert!(g.relators.is_empty());
        // μ_{T₁} = [b⁻¹, y₁⁻¹], m = x₁, ℓ = a
        assert_eq!(bd[0].meridian, Word::commutator(&Word::gen(3).inverse(), &Word::gen(1).inverse()));
        assert_eq!(bd[0].pushoff_m, Word::gen(0));
        assert_eq!(bd[0].pushoff_l, Word::gen(2));
        // μ_{L₁} = [x₁⁻¹, b], ℓ = bab⁻¹
        assert_eq!(bd[1].meridian, Word::commutator(&Word::gen(0).inverse(), &Word::gen(3)));
        assert_eq!(bd[1].pushoff_l, Word::gen(2).conjugate(&Word::gen(3)));

        let (g, bd) = product_complement_presentation(2, true);
        assert_eq!(g.gens, vec!["x1", "y1", "x2", "y2", "a1", "b1", "a2", "b2"]);
        // the [b2, y_i] family
        assert_eq!(g.relators.len(), 2);
        // μ_{J₁} = [x₁⁻¹, b₂⁻¹]
        let j1 = bd.iter().find(|t| t.torus == "J1").unwrap();
        assert_eq!(j1.meridian, Word::commutator(&Word::gen(0).inverse(), &Word::gen(7).inverse()));
        let j2 = bd.iter().find(|t| t.torus == "J2").unwrap();
        assert_eq!(j2.meridian, Word::commutator(&Word::gen(6).inverse(), &Word::gen(0)));
        assert_eq!(j2.pushoff_l, Word::gen(1).conjugate(&Word::gen(0)));
    }
}
