//! Plat closure of a braid word.
//!
//! Top arc `α_i` joins top positions `2i-1` (endpoint `A_i`) and `2i` (`B_i`);
//! bottom arc `α'_i` joins bottom positions `2i-1` (`A'_i`) and `2i` (`B'_i`).
//! Odd positions form the class `F₁`, even positions the class `F₂`.
//!
//! Components of the closure are numbered `1..=μ` by their smallest top arc,
//! and each one is canonically oriented so that its smallest top arc runs
//! from `A_i` to `B_i`.

use std::fmt;

use crate::braid::{BraidError, BraidWord, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlatPresentation {
    braid: BraidWord,
}

impl PlatPresentation {
    pub fn new(braid: BraidWord) -> Self {
        Self { braid }
    }

    pub fn from_letters(strand_count: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        BraidWord::new(strand_count, letters).map(Self::new)
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn strand_count(&self) -> usize {
        self.braid.strand_count()
    }

    /// Number of top arcs, also the number of bridges of this presentation.
    pub fn n(&self) -> usize {
        self.braid.strand_count() / 2
    }

    pub fn trace(&self) -> LinkTrace {
        LinkTrace::of(self)
    }

    /// Condition (2): the braid sends odd endpoints to odd endpoints.
    pub fn condition_2(&self) -> bool {
        self.braid.induced_permutation().preserves_parity()
    }

    pub fn is_special(&self) -> bool {
        self.trace().condition_1() && self.condition_2()
    }

    /// The `(0, n)`-decomposition carried by this plat: the bridge count and
    /// the braid word whose induced homeomorphism glues the two trivial tangles.
    pub fn decomposition_data(&self) -> (usize, BraidWord) {
        (self.n(), self.braid.clone())
    }

    /// Linking matrix of the closure under the canonical orientations of `trace`.
    pub fn linking_matrix(&self, trace: &LinkTrace) -> LinkingMatrix {
        let m = self.strand_count();
        let mu = trace.mu();
        let mut doubled = vec![0i64; mu * mu];
        let mut strand_at: Vec<usize> = (0..=m).collect();
        for &letter in self.braid.letters() {
            let i = letter.unsigned_abs() as usize;
            let (first, second) = (strand_at[i], strand_at[i + 1]);
            let (cj, ck) = (
                trace.component_of_strand(first),
                trace.component_of_strand(second),
            );
            if cj != ck {
                let sign = letter.signum() as i64
                    * trace.strand_direction(first).sign()
                    * trace.strand_direction(second).sign();
                doubled[(cj - 1) * mu + (ck - 1)] += sign;
                doubled[(ck - 1) * mu + (cj - 1)] += sign;
            }
            strand_at.swap(i, i + 1);
        }
        LinkingMatrix { mu, doubled }
    }
}

impl fmt::Display for PlatPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-plat [{}]", self.strand_count(), self.braid)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcDirection {
    AtoB,
    BtoA,
}

impl ArcDirection {
    pub fn reversed(self) -> Self {
        match self {
            ArcDirection::AtoB => ArcDirection::BtoA,
            ArcDirection::BtoA => ArcDirection::AtoB,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrandDirection {
    Down,
    Up,
}

impl StrandDirection {
    pub fn sign(self) -> i64 {
        match self {
            StrandDirection::Down => 1,
            StrandDirection::Up => -1,
        }
    }
}

/// Component structure and canonical orientations of a plat closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkTrace {
    mu: usize,
    top_component: Vec<usize>,
    bottom_component: Vec<usize>,
    arc_counts: Vec<usize>,
    top_direction: Vec<ArcDirection>,
    bottom_direction: Vec<ArcDirection>,
    strand_component: Vec<usize>,
    strand_direction: Vec<StrandDirection>,
}

fn partner(pos: usize) -> usize {
    if pos % 2 == 1 {
        pos + 1
    } else {
        pos - 1
    }
}

fn arc_of(pos: usize) -> usize {
    pos.div_ceil(2)
}

impl LinkTrace {
    fn of(plat: &PlatPresentation) -> Self {
        let m = plat.strand_count();
        let n = plat.n();
        let perm: Permutation = plat.braid().induced_permutation();
        let inv = perm.inverse();

        let mut top_component = vec![0; n];
        let mut bottom_component = vec![0; n];
        let mut top_direction = vec![ArcDirection::AtoB; n];
        let mut bottom_direction = vec![ArcDirection::AtoB; n];
        let mut strand_component = vec![0; m];
        let mut strand_direction = vec![StrandDirection::Down; m];
        let mut arc_counts = Vec::new();

        for start in 1..=n {
            if top_component[start - 1] != 0 {
                continue;
            }
            arc_counts.push(0);
            let id = arc_counts.len();
            top_component[start - 1] = id;
            top_direction[start - 1] = ArcDirection::AtoB;
            arc_counts[id - 1] += 1;

            // Walk the cycle: arrive at a top endpoint, run down its strand,
            // cross a bottom arc, climb the next strand, cross a top arc.
            let mut top = 2 * start;
            loop {
                strand_component[top - 1] = id;
                strand_direction[top - 1] = StrandDirection::Down;
                let bottom = perm.apply(top);
                bottom_component[arc_of(bottom) - 1] = id;
                bottom_direction[arc_of(bottom) - 1] = if bottom.is_multiple_of(2) {
                    ArcDirection::BtoA
                } else {
                    ArcDirection::AtoB
                };
                let climb = inv.apply(partner(bottom));
                strand_component[climb - 1] = id;
                strand_direction[climb - 1] = StrandDirection::Up;
                let arc = arc_of(climb);
                if arc == start {
                    debug_assert_eq!(climb, 2 * start - 1);
                    break;
                }
                top_component[arc - 1] = id;
                top_direction[arc - 1] = if climb % 2 == 1 {
                    ArcDirection::AtoB
                } else {
                    ArcDirection::BtoA
                };
                arc_counts[id - 1] += 1;
                top = partner(climb);
            }
        }

        LinkTrace {
            mu: arc_counts.len(),
            top_component,
            bottom_component,
            arc_counts,
            top_direction,
            bottom_direction,
            strand_component,
            strand_direction,
        }
    }

    /// Number of components `μ`.
    pub fn mu(&self) -> usize {
        self.mu
    }

    /// Top-arc counts `n_j`, indexed by component.
    pub fn arc_counts(&self) -> &[usize] {
        &self.arc_counts
    }

    /// Component of each top arc (1-based ids, indexed by arc).
    pub fn top_components(&self) -> &[usize] {
        &self.top_component
    }

    pub fn bottom_components(&self) -> &[usize] {
        &self.bottom_component
    }

    pub fn top_directions(&self) -> &[ArcDirection] {
        &self.top_direction
    }

    pub fn bottom_directions(&self) -> &[ArcDirection] {
        &self.bottom_direction
    }

    pub fn strand_directions(&self) -> &[StrandDirection] {
        &self.strand_direction
    }

    /// Component containing the strand that starts at top position `k`.
    pub fn component_of_strand(&self, k: usize) -> usize {
        self.strand_component[k - 1]
    }

    pub fn strand_direction(&self, k: usize) -> StrandDirection {
        self.strand_direction[k - 1]
    }

    /// Condition (1): under some ordering of the components, the top arcs
    /// come in consecutive blocks of sizes `n_j`, and the bottom arcs carry
    /// exactly the same block sequence.
    pub fn condition_1(&self) -> bool {
        if self.top_component != self.bottom_component {
            return false;
        }
        let mut closed = vec![false; self.mu];
        let mut current = 0;
        for &c in &self.top_component {
            if c != current {
                if closed[c - 1] {
                    return false;
                }
                if current != 0 {
                    closed[current - 1] = true;
                }
                current = c;
            }
        }
        true
    }

    /// Condition (2'): some orientation runs every top arc `A → B` and every
    /// bottom arc `B' → A'`. Each component either agrees with that pattern
    /// throughout under its canonical orientation, or disagrees throughout
    /// (and is then fixed by reversing it).
    pub fn condition_2prime(&self) -> bool {
        // per component: Some(true) = canonical works, Some(false) = reverse works
        let mut verdict: Vec<Option<bool>> = vec![None; self.mu];
        let mut consistent = |c: usize, good: bool| match verdict[c - 1] {
            None => {
                verdict[c - 1] = Some(good);
                true
            }
            Some(v) => v == good,
        };
        for (arc, &c) in self.top_component.iter().enumerate() {
            if !consistent(c, self.top_direction[arc] == ArcDirection::AtoB) {
                return false;
            }
        }
        for (arc, &c) in self.bottom_component.iter().enumerate() {
            if !consistent(c, self.bottom_direction[arc] == ArcDirection::BtoA) {
                return false;
            }
        }
        true
    }
}

/// Pairwise linking numbers of the closure's components.
///
/// Entries are kept doubled (the raw signed count of inter-component
/// crossings) so that half-integers never need a float. The diagonal is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkingMatrix {
    mu: usize,
    doubled: Vec<i64>,
}

impl LinkingMatrix {
    pub fn mu(&self) -> usize {
        self.mu
    }

    /// Signed crossing sum between components `j` and `k` (twice the linking number).
    pub fn doubled(&self, j: usize, k: usize) -> i64 {
        self.doubled[(j - 1) * self.mu + (k - 1)]
    }

    pub fn entry(&self, j: usize, k: usize) -> f64 {
        self.doubled(j, k) as f64 / 2.0
    }

    /// Linking number of components `j` and `k`; `None` only if the crossing
    /// sum is odd, which a closed diagram never produces.
    pub fn linking_number(&self, j: usize, k: usize) -> Option<i64> {
        let d = self.doubled(j, k);
        (d % 2 == 0).then_some(d / 2)
    }

    pub fn is_symmetric(&self) -> bool {
        (1..=self.mu).all(|j| (1..=self.mu).all(|k| self.doubled(j, k) == self.doubled(k, j)))
    }

    pub fn has_integer_entries(&self) -> bool {
        self.doubled.iter().all(|d| d % 2 == 0)
    }

    /// Sorted absolute values of the doubled entries above the diagonal.
    pub fn abs_doubled_multiset(&self) -> Vec<u64> {
        let mut out: Vec<u64> = (1..=self.mu)
            .flat_map(|j| ((j + 1)..=self.mu).map(move |k| (j, k)))
            .map(|(j, k)| self.doubled(j, k).unsigned_abs())
            .collect();
        out.sort_unstable();
        out
    }
}
