//! Bounded coset enumeration (HLT strategy with lookahead).
//!
//! The enumerator either closes the table, in which case the reported index
//! is exact and re-verified by a final trace over every relator at every
//! live coset, or gives up with [`CosetResult::Exceeded`]. When the table
//! outgrows its cap, a lookahead pass of non-defining scans collapses
//! coincidences and the table is compacted; the run aborts only when the
//! live count itself approaches the cap. It never reports a wrong finite
//! index.

use super::{FpGroup, Word};
use serde::{Deserialize, Serialize};

pub const DEFAULT_COSET_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CosetResult {
    Finite(usize),
    Exceeded,
}

const UNDEF: u32 = u32::MAX;

struct Table {
    width: usize,
    rows: Vec<Vec<u32>>,
    rep: Vec<u32>,
    live_count: usize,
    dead_queue: Vec<u32>,
}

impl Table {
    fn new(width: usize) -> Self {
        Table { width, rows: vec![vec![UNDEF; width]], rep: vec![0], live_count: 1, dead_queue: Vec::new() }
    }

    fn find(&mut self, mut c: u32) -> u32 {
        while self.rep[c as usize] != c {
            let up = self.rep[self.rep[c as usize] as usize];
            self.rep[c as usize] = up;
            c = up;
        }
        c
    }

    fn is_live(&self, c: u32) -> bool {
        self.rep[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> u32 {
        let n = self.rows.len() as u32;
        self.rows.push(vec![UNDEF; self.width]);
        self.rep.push(n);
        self.live_count += 1;
        self.rows[c as usize][x] = n;
        self.rows[n as usize][inv(x)] = c;
        n
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.find(a);
        let b = self.find(b);
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.rep[kill as usize] = keep;
        self.live_count -= 1;
        self.dead_queue.push(kill);
    }

    /// Renumbers the live cosets contiguously, dropping dead rows. Returns
    /// the number of already-processed old cosets below `scanned`, i.e. the
    /// resume index for the main loop.
    fn compact(&mut self, scanned: u32) -> u32 {
        let old_len = self.rows.len();
        let mut map = vec![UNDEF; old_len];
        let mut next = 0u32;
        for c in 0..old_len as u32 {
            if self.is_live(c) {
                map[c as usize] = next;
                next += 1;
            }
        }
        // resolve every edge through the union-find before renumbering
        for c in 0..old_len as u32 {
            if !self.is_live(c) {
                continue;
            }
            for x in 0..self.width {
                let d = self.rows[c as usize][x];
                if d != UNDEF {
                    let live = self.find(d);
                    self.rows[c as usize][x] = live;
                }
            }
        }
        let mut new_rows = Vec::with_capacity(next as usize);
        for c in 0..old_len as u32 {
            if self.is_live(c) {
                let row: Vec<u32> =
                    self.rows[c as usize].iter().map(|&d| if d == UNDEF { UNDEF } else { map[d as usize] }).collect();
                new_rows.push(row);
            }
        }
        self.rows = new_rows;
        self.rep = (0..next).collect();
        self.live_count = next as usize;
        debug_assert!(self.dead_queue.is_empty());
        (0..scanned.min(old_len as u32)).filter(|&c| map[c as usize] != UNDEF).count() as u32
    }

    fn process_coincidences(&mut self) {
        while let Some(dead) = self.dead_queue.pop() {
            for x in 0..self.width {
                let delta = self.rows[dead as usize][x];
                if delta == UNDEF {
                    continue;
                }
                self.rows[dead as usize][x] = UNDEF;
                // forget the reverse edge into the dead coset
                if self.rows[delta as usize][inv(x)] == dead {
                    self.rows[delta as usize][inv(x)] = UNDEF;
                }
                let mu = self.find(dead);
                let nu = self.find(delta);
                let mu_x = self.rows[mu as usize][x];
                if mu_x != UNDEF {
                    self.merge(nu, mu_x);
                } else {
                    let nu_back = self.rows[nu as usize][inv(x)];
                    if nu_back != UNDEF {
                        self.merge(mu, nu_back);
                    } else {
                        self.rows[mu as usize][x] = nu;
                        self.rows[nu as usize][inv(x)] = mu;
                    }
                }
            }
        }
    }
}

fn inv(x: usize) -> usize {
    x ^ 1
}

/// Word letters → alphabet indices: generator i ↦ 2i, its inverse ↦ 2i+1.
fn alphabet(w: &Word) -> Vec<usize> {
    w.0.iter()
        .map(|&l| {
            let g = (l.unsigned_abs() as usize - 1) * 2;
            if l > 0 {
                g
            } else {
                g + 1
            }
        })
        .collect()
}

/// Scans `word` at coset `c`; with `fill`, defines cosets until the scan
/// closes (HLT), otherwise it only records deductions and coincidences.
///
/// Position bookkeeping: `f` is the coset reached after reading `word[..i]`
/// forward from `c`; `b` is the coset from which reading `word[j..]` returns
/// to `c`. The scan closes when the two meet.
fn scan(tab: &mut Table, c: u32, word: &[usize], fill: bool) {
    if word.is_empty() {
        return;
    }
    let mut f = tab.find(c);
    let mut i = 0usize;
    let mut b = tab.find(c);
    let mut j = word.len();
    loop {
        while i < j {
            let nxt = tab.rows[f as usize][word[i]];
            if nxt == UNDEF {
                break;
            }
            f = tab.find(nxt);
            i += 1;
        }
        if i == j {
            tab.merge(f, b);
            tab.process_coincidences();
            return;
        }
        while j > i {
            let prev = tab.rows[b as usize][inv(word[j - 1])];
            if prev == UNDEF {
                break;
            }
            b = tab.find(prev);
            j -= 1;
        }
        if j == i {
            tab.merge(f, b);
            tab.process_coincidences();
            return;
        }
        if j == i + 1 {
            tab.rows[f as usize][word[i]] = b;
            tab.rows[b as usize][inv(word[i])] = f;
            return;
        }
        if !fill {
            return;
        }
        tab.define(f, word[i]);
    }
}

/// Enumerates cosets of the subgroup generated by `subgroup` in `g`.
pub fn coset_enumeration(g: &FpGroup, subgroup: &[Word], max_cosets: usize) -> CosetResult {
    let width = g.gens.len() * 2;
    if width == 0 {
        return CosetResult::Finite(1);
    }
    let relators: Vec<Vec<usize>> = g.relators.iter().map(alphabet).collect();
    let subgens: Vec<Vec<usize>> = subgroup.iter().map(alphabet).collect();

    let mut tab = Table::new(width);
    for w in &subgens {
        scan(&mut tab, 0, w, true);
        if tab.rows.len() > max_cosets {
            return CosetResult::Exceeded;
        }
    }

    let mut i: u32 = 0;
    while (i as usize) < tab.rows.len() {
        if !tab.is_live(i) {
            i += 1;
            continue;
        }
        for r in &relators {
            scan(&mut tab, i, r, true);
            if !tab.is_live(i) {
                break;
            }
        }
        if tab.is_live(i) {
            for x in 0..width {
                if tab.rows[i as usize][x] == UNDEF {
                    tab.define(i, x);
                }
            }
        }
        if tab.rows.len() > max_cosets {
            // lookahead: a pass of non-defining scans to collapse the
            // table, then compaction; give up only when the live count
            // itself approaches the cap
            for c in 0..tab.rows.len() as u32 {
                if tab.is_live(c) {
                    for r in &relators {
                        scan(&mut tab, c, r, false);
                        if !tab.is_live(c) {
                            break;
                        }
                    }
                }
            }
            tab.process_coincidences();
            if tab.live_count * 4 > max_cosets * 3 {
                return CosetResult::Exceeded;
            }
            i = tab.compact(i + 1);
            continue;
        }
        i += 1;
    }

    // Final verification: the table must be complete and closed. A failure
    // here would be an enumerator bug, never a property of the input.
    let live: Vec<u32> = (0..tab.rows.len() as u32).filter(|&c| tab.is_live(c)).collect();
    for &c in &live {
        for x in 0..width {
            let d = tab.rows[c as usize][x];
            assert!(d != UNDEF, "incomplete coset table after closure");
            let d = tab.find(d);
            assert!(tab.is_live(d), "edge into dead coset");
        }
    }
    let trace = |tab: &mut Table, start: u32, w: &[usize]| -> u32 {
        let mut c = start;
        for &x in w {
            c = tab.find(tab.rows[c as usize][x]);
        }
        c
    };
    for &c in &live {
        for r in &relators {
            assert_eq!(trace(&mut tab, c, r), c, "relator does not close");
        }
    }
    for w in &subgens {
        assert_eq!(trace(&mut tab, 0, w), 0, "subgroup generator moves coset 0");
    }
    CosetResult::Finite(live.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouppres::FpGroup;

    #[test]
    fn small_groups() {
        // ⟨x | x⟩ is trivial
        let g = FpGroup::parse_gens_relators(&["x"], &[&[1][..]]);
        assert_eq!(coset_enumeration(&g, &[], 100), CosetResult::Finite(1));

        // ⟨a, b | [a,b], a, b²⟩ ≅ ℤ₂
        let g = FpGroup::parse_gens_relators(&["a", "b"], &[&[1, 2, -1, -2][..], &[1], &[2, 2]]);
        assert_eq!(coset_enumeration(&g, &[], 100), CosetResult::Finite(2));

        // S₃ = ⟨a, b | a², b², (ab)³⟩
        let g = FpGroup::parse_gens_relators(&["a", "b"], &[&[1, 1][..], &[2, 2], &[1, 2, 1, 2, 1, 2]]);
        assert_eq!(coset_enumeration(&g, &[], 100), CosetResult::Finite(6));
        // index of ⟨a⟩ is 3
        assert_eq!(coset_enumeration(&g, &[Word(vec![1])], 100), CosetResult::Finite(3));

        // quaternion group ⟨i, j | i⁴, i²j⁻², ijij⁻¹... ⟩: use ⟨a,b | a⁴, a²b⁻², b⁻¹aba⟩
        let g = FpGroup::parse_gens_relators(
            &["a", "b"],
            &[&[1, 1, 1, 1][..], &[1, 1, -2, -2], &[-2, 1, 2, 1]],
        );
        assert_eq!(coset_enumeration(&g, &[], 200), CosetResult::Finite(8));
    }

    #[test]
    fn infinite_group_exceeds() {
        // ℤ = ⟨x | ⟩ never closes
        let g = FpGroup::parse_gens_relators(&["x"], &[]);
        assert_eq!(coset_enumeration(&g, &[], 50), CosetResult::Exceeded);
        // the (3,3,3) triangle group is infinite
        let g = FpGroup::parse_gens_relators(
            &["a", "b"],
            &[&[1, 1, 1][..], &[2, 2, 2], &[1, 2, 1, 2, 1, 2]],
        );
        assert_eq!(coset_enumeration(&g, &[], 2000), CosetResult::Exceeded);
    }

    #[test]
    fn harder_finite_groups() {
        // dihedral of order 12
        let g = FpGroup::parse_gens_relators(
            &["a", "b"],
            &[&[1, 1, 1, 1, 1, 1][..], &[2, 2], &[1, 2, 1, 2]],
        );
        assert_eq!(coset_enumeration(&g, &[], 1000), CosetResult::Finite(12));

        // ⟨x, y | x², y³, (xy)⁷, [x,y]⁴⟩ has order 168
        let xy7: Vec<i32> = std::iter::repeat_n([1, 2], 7).flatten().collect();
        let comm4: Vec<i32> = std::iter::repeat_n([1, 2, -1, -2], 4).flatten().collect();
        let g = FpGroup::parse_gens_relators(&["x", "y"], &[&[1, 1][..], &[2, 2, 2], &xy7, &comm4]);
        assert_eq!(coset_enumeration(&g, &[], 50_000), CosetResult::Finite(168));
        // index of ⟨y⟩ is 56
        assert_eq!(coset_enumeration(&g, &[Word(vec![2])], 50_000), CosetResult::Finite(56));

        // heavy coincidence cascade: ⟨a, b | a⁸, b⁷, (ab)², (a⁻¹b)³⟩ has
        // order 10752; the cyclic subgroup ⟨a⟩ has index 1344
        let ainvb3: Vec<i32> = std::iter::repeat_n([-1, 2], 3).flatten().collect();
        let g = FpGroup::parse_gens_relators(
            &["a", "b"],
            &[&[1; 8][..], &[2; 7], &[1, 2, 1, 2], &ainvb3],
        );
        // a 50k cap forces the lookahead/compaction path
        assert_eq!(coset_enumeration(&g, &[], 50_000), CosetResult::Finite(10_752));
        assert_eq!(coset_enumeration(&g, &[Word(vec![1])], 300_000), CosetResult::Finite(1_344));
    }

    #[test]
    fn trivial_presentation_edge_cases() {
        let g = FpGroup::parse_gens_relators(&[], &[]);
        assert_eq!(coset_enumeration(&g, &[], 10), CosetResult::Finite(1));
        // ⟨a, b | ab⁻¹, a³⟩ ≅ ℤ₃
        let g = FpGroup::parse_gens_relators(&["a", "b"], &[&[1, -2][..], &[1, 1, 1]]);
        assert_eq!(coset_enumeration(&g, &[], 100), CosetResult::Finite(3));
    }
}
