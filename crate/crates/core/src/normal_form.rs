//! Plat moves and normalization to a special plat.
//!
//! The moves are realized as braid-word rewrites that keep the closure's link
//! type and the number of plats:
//!
//! | move | rewrite | effect |
//! |------|---------|--------|
//! | `I@i`   | prepend `τ_i = [2i, 2i+1, 2i-1, 2i]` | swap top arcs `i`, `i+1` |
//! | `I'@i`  | append `τ_i`                          | swap bottom arcs `i`, `i+1` |
//! | `II@i`  | prepend `[2i-1]`                      | half twist under top arc `i` |
//! | `II'@i` | append `[2i-1]`                       | half twist over bottom arc `i` |
//!
//! `τ_i` passes the strand pair `{2i-1, 2i}` over the pair `{2i+1, 2i+2}`
//! as a unit; `[2i-1]` is a kink next to an arc.

use std::fmt;

use thiserror::Error;

use crate::plat::{ArcDirection, LinkTrace, PlatPresentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalizeError {
    #[error("move {0} out of range for a plat with {1} arcs")]
    MoveOutOfRange(Move, usize),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    /// Swap two adjacent top arcs.
    I,
    /// Swap two adjacent bottom arcs.
    IPrime,
    /// Half twist just below a top arc.
    II,
    /// Half twist just above a bottom arc.
    IIPrime,
}

impl MoveKind {
    fn label(self) -> &'static str {
        match self {
            MoveKind::I => "I",
            MoveKind::IPrime => "I'",
            MoveKind::II => "II",
            MoveKind::IIPrime => "II'",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Move {
    pub kind: MoveKind,
    /// Arc index: for `I`/`I'` the left arc of the swapped pair.
    pub position: usize,
}

impl Move {
    pub fn new(kind: MoveKind, position: usize) -> Self {
        Self { kind, position }
    }

    pub fn is_valid_for(&self, n: usize) -> bool {
        match self.kind {
            MoveKind::I | MoveKind::IPrime => self.position >= 1 && self.position < n,
            MoveKind::II | MoveKind::IIPrime => self.position >= 1 && self.position <= n,
        }
    }

    fn block(&self) -> Vec<i32> {
        let i = self.position as i32;
        match self.kind {
            MoveKind::I | MoveKind::IPrime => vec![2 * i, 2 * i + 1, 2 * i - 1, 2 * i],
            MoveKind::II | MoveKind::IIPrime => vec![2 * i - 1],
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.kind.label(), self.position)
    }
}

impl std::str::FromStr for Move {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, pos) = s.split_once('@').ok_or_else(|| format!("bad move '{s}'"))?;
        let kind = match kind {
            "I" => MoveKind::I,
            "I'" => MoveKind::IPrime,
            "II" => MoveKind::II,
            "II'" => MoveKind::IIPrime,
            _ => return Err(format!("unknown move kind '{kind}'")),
        };
        let position = pos
            .parse()
            .map_err(|_| format!("bad move position '{pos}'"))?;
        Ok(Move { kind, position })
    }
}

/// Moves applied during a normalization, oldest first.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MoveRecord {
    moves: Vec<Move>,
}

impl MoveRecord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn replay(&self, plat: &PlatPresentation) -> Result<PlatPresentation, NormalizeError> {
        self.moves
            .iter()
            .try_fold(plat.clone(), |acc, &m| apply_move(&acc, m))
    }
}

impl From<Vec<Move>> for MoveRecord {
    fn from(moves: Vec<Move>) -> Self {
        Self { moves }
    }
}

impl fmt::Display for MoveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, m) in self.moves.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

pub fn apply_move(plat: &PlatPresentation, m: Move) -> Result<PlatPresentation, NormalizeError> {
    if !m.is_valid_for(plat.n()) {
        return Err(NormalizeError::MoveOutOfRange(m, plat.n()));
    }
    let block = m.block();
    let braid = match m.kind {
        MoveKind::I | MoveKind::II => plat.braid().prepend(&block),
        MoveKind::IPrime | MoveKind::IIPrime => plat.braid().append(&block),
    };
    Ok(PlatPresentation::new(braid))
}

struct Normalizer {
    current: PlatPresentation,
    record: Vec<Move>,
    top_labels: Vec<usize>,
    bottom_labels: Vec<usize>,
}

impl Normalizer {
    fn apply(&mut self, m: Move) -> Result<(), NormalizeError> {
        self.current = apply_move(&self.current, m)?;
        self.record.push(m);
        Ok(())
    }

    /// Bubble-sorts one arc row into ascending label order with swap moves.
    fn sort_row(&mut self, kind: MoveKind) -> Result<(), NormalizeError> {
        let n = self.current.n();
        loop {
            let mut swapped = false;
            for i in 1..n {
                let labels = match kind {
                    MoveKind::I => &mut self.top_labels,
                    _ => &mut self.bottom_labels,
                };
                if labels[i - 1] > labels[i] {
                    labels.swap(i - 1, i);
                    self.apply(Move::new(kind, i))?;
                    self.check_labels()?;
                    swapped = true;
                }
            }
            if !swapped {
                return Ok(());
            }
        }
    }

    /// The tracked labels must induce exactly the traced component partition.
    fn check_labels(&self) -> Result<(), NormalizeError> {
        let trace = self.current.trace();
        let mut label_of = vec![0usize; trace.mu()];
        let rows = trace
            .top_components()
            .iter()
            .zip(&self.top_labels)
            .chain(trace.bottom_components().iter().zip(&self.bottom_labels));
        for (&c, &label) in rows {
            match label_of[c - 1] {
                0 => label_of[c - 1] = label,
                l if l == label => {}
                _ => {
                    return Err(NormalizeError::Inconsistent(format!(
                        "component {c} carries labels {} and {label} after {}",
                        label_of[c - 1],
                        MoveRecord::from(self.record.clone())
                    )))
                }
            }
        }
        let mut seen = label_of.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != trace.mu() {
            return Err(NormalizeError::Inconsistent(
                "two components merged under tracked labels".into(),
            ));
        }
        Ok(())
    }
}

/// Transforms `plat` into a special plat on the same number of strands.
///
/// Components keep the canonical order of the input: top arcs are sorted
/// into component blocks with `I` moves, bottom arcs into the same blocks
/// with `I'` moves, and then every arc running against the canonical
/// orientation (top `B → A`, bottom `A' → B'`) gets a half twist.
pub fn normalize_to_special(
    plat: &PlatPresentation,
) -> Result<(PlatPresentation, MoveRecord), NormalizeError> {
    let initial = plat.trace();
    let mut state = Normalizer {
        current: plat.clone(),
        record: Vec::new(),
        top_labels: initial.top_components().to_vec(),
        bottom_labels: initial.bottom_components().to_vec(),
    };

    state.sort_row(MoveKind::I)?;
    state.sort_row(MoveKind::IPrime)?;

    let sorted = state.current.trace();
    for (arc, dir) in sorted.top_directions().iter().enumerate() {
        if *dir == ArcDirection::BtoA {
            state.apply(Move::new(MoveKind::II, arc + 1))?;
        }
    }
    for (arc, dir) in sorted.bottom_directions().iter().enumerate() {
        if *dir == ArcDirection::AtoB {
            state.apply(Move::new(MoveKind::IIPrime, arc + 1))?;
        }
    }

    let out = state.current;
    let trace = out.trace();
    if !(trace.condition_1() && out.condition_2()) {
        return Err(NormalizeError::Inconsistent(format!(
            "output {out} is not special"
        )));
    }
    Ok((out, MoveRecord::from(state.record)))
}

/// How a component of a moved plat relates to the original.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CarriedComponent {
    /// Component id in the original plat.
    pub source: usize,
    /// Whether the carried orientation is opposite to the canonical
    /// orientation of the moved plat.
    pub reversed: bool,
}

/// Follows components and their orientations through `record`.
///
/// Entry `j - 1` of the result describes component `j` of the replayed plat.
/// Swap moves carry a top arc together with its direction; a half twist
/// under a top arc reverses which endpoint the orientation enters from.
/// Bottom moves leave the top row alone.
pub fn track_components(
    input: &PlatPresentation,
    record: &MoveRecord,
) -> Result<Vec<CarriedComponent>, NormalizeError> {
    let initial = input.trace();
    let mut labels = initial.top_components().to_vec();
    let mut dirs = initial.top_directions().to_vec();
    for m in record.moves() {
        if !m.is_valid_for(input.n()) {
            return Err(NormalizeError::MoveOutOfRange(*m, input.n()));
        }
        let i = m.position;
        match m.kind {
            MoveKind::I => {
                labels.swap(i - 1, i);
                dirs.swap(i - 1, i);
            }
            MoveKind::II => dirs[i - 1] = dirs[i - 1].reversed(),
            MoveKind::IPrime | MoveKind::IIPrime => {}
        }
    }
    let out = record.replay(input)?;
    carried(&out.trace(), &labels, &dirs)
}

fn carried(
    trace: &LinkTrace,
    labels: &[usize],
    dirs: &[ArcDirection],
) -> Result<Vec<CarriedComponent>, NormalizeError> {
    let mut result: Vec<Option<CarriedComponent>> = vec![None; trace.mu()];
    for (arc, &c) in trace.top_components().iter().enumerate() {
        let here = CarriedComponent {
            source: labels[arc],
            reversed: dirs[arc] != trace.top_directions()[arc],
        };
        match result[c - 1] {
            None => result[c - 1] = Some(here),
            Some(prev) if prev == here => {}
            Some(prev) => {
                return Err(NormalizeError::Inconsistent(format!(
                    "component {c} tracked as both {prev:?} and {here:?}"
                )))
            }
        }
    }
    Ok(result
        .into_iter()
        .map(|c| c.expect("every component has a top arc"))
        .collect())
}
