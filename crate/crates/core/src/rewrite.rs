//! The four boundary-preserving rewrite operations on signed rotations,
//! cyclic match finding, the derived string form of Operation 2, and the
//! reduction of path-bouquet partial Petrials to terminal forms.
//!
//! Patterns (read cyclically, P and Q arbitrary possibly-empty segments,
//! a and b single signed occurrences; a letter symbol binds its sign, so
//! every rule commutes with double sign-flips):
//!
//! - Operation 1: P a Q b a -> P a b Q a  (a's occurrences equal-signed)
//! - Operation 2: P (-a) Q b a -> P (-b) (-a) Q a
//! - Operation 3: P a b a b -> P  (both pairs equal-signed)
//! - Operation 4: P (-a) a -> P  (adjacent opposite-signed pair)

use alloc::vec::Vec;
use core::fmt;

use crate::rotation::{Letter, LoopKind, SignedRotation};

/// Identifier of one of the four operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OpId {
    Op1,
    Op2,
    Op3,
    Op4,
}

impl fmt::Display for OpId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpId::Op1 => write!(f, "op1"),
            OpId::Op2 => write!(f, "op2"),
            OpId::Op3 => write!(f, "op3"),
            OpId::Op4 => write!(f, "op4"),
        }
    }
}

/// A match site, as absolute positions in the stored word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum MatchSite {
    /// Positions of the equal-signed pair; the moved letter b sits
    /// cyclically just before `second_a`.
    Op1 { first_a: usize, second_a: usize },
    /// Position of the pattern's (-a) occurrence and of its partner a;
    /// b sits cyclically just before `pos_a` and is negated as it moves.
    Op2 { neg_a: usize, pos_a: usize },
    /// Start of the four consecutive positions a b a b.
    Op3 { start: usize },
    /// Start of the adjacent opposite-signed pair.
    Op4 { start: usize },
}

impl MatchSite {
    pub fn op(&self) -> OpId {
        match self {
            MatchSite::Op1 { .. } => OpId::Op1,
            MatchSite::Op2 { .. } => OpId::Op2,
            MatchSite::Op3 { .. } => OpId::Op3,
            MatchSite::Op4 { .. } => OpId::Op4,
        }
    }
}

impl fmt::Display for MatchSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchSite::Op1 { first_a, second_a } => write!(f, "a@{first_a},{second_a}"),
            MatchSite::Op2 { neg_a, pos_a } => write!(f, "-a@{neg_a} a@{pos_a}"),
            MatchSite::Op3 { start } => write!(f, "abab@{start}"),
            MatchSite::Op4 { start } => write!(f, "-aa@{start}"),
        }
    }
}

/// One applied operation: the site matched and the words before and after.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub op: OpId,
    pub site: MatchSite,
    pub before: SignedRotation,
    pub after: SignedRotation,
}

/// Where a path-petrial reduction terminates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TerminalForm {
    /// The empty word; one boundary component.
    IsolatedVertex,
    /// A single equal-signed loop; two boundary components.
    OneOrientableLoop,
}

impl fmt::Display for TerminalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TerminalForm::IsolatedVertex => write!(f, "isolated-vertex"),
            TerminalForm::OneOrientableLoop => write!(f, "one-orientable-loop"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RewriteError {
    /// The word does not match the operation's pattern at the site.
    NoMatch { site: MatchSite },
    /// The reduction input is not a partial Petrial of any path bouquet.
    NotPathPetrial,
}

impl fmt::Display for RewriteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RewriteError::NoMatch { site } => {
                write!(f, "{} pattern does not match at site {}", site.op(), site)
            }
            RewriteError::NotPathPetrial => {
                write!(f, "word is not a partial Petrial of a path bouquet")
            }
        }
    }
}

impl core::error::Error for RewriteError {}

fn cyc(i: usize, len: usize) -> usize {
    i % len
}

/// Letters at cyclic positions `from..to` (half-open; empty when equal).
fn collect_cyclic(word: &[Letter], from: usize, to: usize) -> Vec<Letter> {
    let len = word.len();
    let mut out = Vec::new();
    let mut i = cyc(from, len);
    while i != cyc(to, len) {
        out.push(word[i]);
        i = cyc(i + 1, len);
    }
    out
}

fn gap(from: usize, to: usize, len: usize) -> usize {
    (to + len - from) % len
}

/// Applies Operation 1 at `site`: P a Q b a -> P a b Q a.
pub fn apply_op1(r: &SignedRotation, site: MatchSite) -> Result<RewriteStep, RewriteError> {
    let MatchSite::Op1 { first_a, second_a } = site else {
        return Err(RewriteError::NoMatch { site });
    };
    let word = r.word();
    let len = word.len();
    let no_match = Err(RewriteError::NoMatch { site });
    if first_a >= len || second_a >= len || first_a == second_a {
        return no_match;
    }
    if word[first_a] != word[second_a] || gap(first_a, second_a, len) < 2 {
        return no_match;
    }
    let b_pos = cyc(second_a + len - 1, len);
    debug_assert_ne!(word[b_pos].label(), word[first_a].label());

    let mut out = collect_cyclic(word, second_a + 1, first_a);
    out.push(word[first_a]);
    out.push(word[b_pos]);
    out.extend(collect_cyclic(word, first_a + 1, b_pos));
    out.push(word[second_a]);
    finish_step(r, OpId::Op1, site, out)
}

/// Applies Operation 2 at `site`: P (-a) Q b a -> P (-b) (-a) Q a.
pub fn apply_op2(r: &SignedRotation, site: MatchSite) -> Result<RewriteStep, RewriteError> {
    let MatchSite::Op2 { neg_a, pos_a } = site else {
        return Err(RewriteError::NoMatch { site });
    };
    let word = r.word();
    let len = word.len();
    let no_match = Err(RewriteError::NoMatch { site });
    if neg_a >= len || pos_a >= len || neg_a == pos_a {
        return no_match;
    }
    if word[neg_a] != word[pos_a].negated() || gap(neg_a, pos_a, len) < 2 {
        return no_match;
    }
    let b_pos = cyc(pos_a + len - 1, len);

    let mut out = collect_cyclic(word, pos_a + 1, neg_a);
    out.push(word[b_pos].negated());
    out.push(word[neg_a]);
    out.extend(collect_cyclic(word, neg_a + 1, b_pos));
    out.push(word[pos_a]);
    finish_step(r, OpId::Op2, site, out)
}

/// Applies Operation 3 at `site`: P a b a b -> P.
pub fn apply_op3(r: &SignedRotation, site: MatchSite) -> Result<RewriteStep, RewriteError> {
    let MatchSite::Op3 { start } = site else {
        return Err(RewriteError::NoMatch { site });
    };
    let word = r.word();
    let len = word.len();
    if start >= len || len < 4 || !op3_block_matches(word, start) {
        return Err(RewriteError::NoMatch { site });
    }
    let out = collect_cyclic(word, start + 4, start);
    finish_step(r, OpId::Op3, site, out)
}

fn op3_block_matches(word: &[Letter], start: usize) -> bool {
    let len = word.len();
    let at = |k: usize| word[cyc(start + k, len)];
    at(0) == at(2) && at(1) == at(3) && at(0).label() != at(1).label()
}

/// Applies Operation 4 at `site`: P (-a) a -> P.
pub fn apply_op4(r: &SignedRotation, site: MatchSite) -> Result<RewriteStep, RewriteError> {
    let MatchSite::Op4 { start } = site else {
        return Err(RewriteError::NoMatch { site });
    };
    let word = r.word();
    let len = word.len();
    if start >= len || len < 2 || word[start] != word[cyc(start + 1, len)].negated() {
        return Err(RewriteError::NoMatch { site });
    }
    let out = collect_cyclic(word, start + 2, start);
    finish_step(r, OpId::Op4, site, out)
}

/// Applies whichever operation `site` belongs to.
pub fn apply(r: &SignedRotation, site: MatchSite) -> Result<RewriteStep, RewriteError> {
    match site.op() {
        OpId::Op1 => apply_op1(r, site),
        OpId::Op2 => apply_op2(r, site),
        OpId::Op3 => apply_op3(r, site),
        OpId::Op4 => apply_op4(r, site),
    }
}

fn finish_step(
    r: &SignedRotation,
    op: OpId,
    site: MatchSite,
    word: Vec<Letter>,
) -> Result<RewriteStep, RewriteError> {
    let after = SignedRotation::new(word).expect("rewrites preserve double occurrence");
    Ok(RewriteStep {
        op,
        site,
        before: r.clone(),
        after,
    })
}

/// All cyclic match sites of `op` in `r`, deduplicated (a four-letter word
/// presents each Operation 3 block twice, a two-letter word each Operation 4
/// pair twice) and in ascending position order.
pub fn find_matches(r: &SignedRotation, op: OpId) -> Vec<MatchSite> {
    let word = r.word();
    let len = word.len();
    let mut sites = Vec::new();
    match op {
        OpId::Op1 | OpId::Op2 => {
            for label in r.labels() {
                let (p, q) = r.occurrence_positions(label).expect("label present");
                for (x, y) in [(p, q), (q, p)] {
                    if gap(x, y, len) < 2 {
                        continue;
                    }
                    let site = match op {
                        OpId::Op1 if word[x] == word[y] => MatchSite::Op1 {
                            first_a: x,
                            second_a: y,
                        },
                        OpId::Op2 if word[x] == word[y].negated() => MatchSite::Op2 {
                            neg_a: x,
                            pos_a: y,
                        },
                        _ => continue,
                    };
                    sites.push(site);
                }
            }
        }
        OpId::Op3 => {
            if len >= 4 {
                let starts = if len == 4 { 0..2 } else { 0..len };
                for s in starts {
                    if op3_block_matches(word, s) {
                        sites.push(MatchSite::Op3 { start: s });
                    }
                }
            }
        }
        OpId::Op4 => {
            if len >= 2 {
                let starts = if len == 2 { 0..1 } else { 0..len };
                for s in starts {
                    if word[s] == word[cyc(s + 1, len)].negated() {
                        sites.push(MatchSite::Op4 { start: s });
                    }
                }
            }
        }
    }
    sites.sort();
    sites
}

/// The string form of Operation 2 used by the canonical-bouquet reduction:
/// X (-a) S a Y rewrites to X S^{-1} (-a) a Y through |S| single-letter
/// steps, each popping the last letter of the remaining S. `neg_a`/`pos_a`
/// locate the (-a) and a occurrences as in [`MatchSite::Op2`]. An empty S
/// yields one no-op-shaped step.
pub fn apply_op2_string(
    r: &SignedRotation,
    neg_a: usize,
    pos_a: usize,
) -> Result<Vec<RewriteStep>, RewriteError> {
    let word = r.word();
    let len = word.len();
    let site = MatchSite::Op2 { neg_a, pos_a };
    if neg_a >= len || pos_a >= len || neg_a == pos_a || word[neg_a] != word[pos_a].negated() {
        return Err(RewriteError::NoMatch { site });
    }
    if gap(neg_a, pos_a, len) == 1 {
        // S is empty; the word already reads X (-a) a Y.
        return Ok(alloc::vec![RewriteStep {
            op: OpId::Op2,
            site,
            before: r.clone(),
            after: r.clone(),
        }]);
    }
    let anchor_pos = word[pos_a];
    let anchor_neg = word[neg_a];
    let label = anchor_pos.label();
    let mut steps = Vec::new();
    let mut current = r.clone();
    loop {
        let (p, q) = current.occurrence_positions(label).expect("label present");
        let (u, v) = if current.word()[p] == anchor_neg {
            (p, q)
        } else {
            (q, p)
        };
        debug_assert_eq!(current.word()[v], anchor_pos);
        if gap(u, v, len) == 1 {
            return Ok(steps);
        }
        let step = apply_op2(&current, MatchSite::Op2 { neg_a: u, pos_a: v })?;
        current = step.after.clone();
        steps.push(step);
    }
}

/// The shape of a path-bouquet partial Petrial: cyclic offset at which the
/// word reads as the standard interleaving, and the chord labels in path
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
struct PathFrame {
    offset: usize,
    labels: Vec<u32>,
}

/// Occurrence-position pairs of the standard path word on n >= 1 chords:
/// l1 at (0, 2), l2 at (1, 4), l_k at (2k-3, 2k), l_n at (2n-3, 2n-1).
fn path_pattern_pairs(n: usize) -> Vec<(usize, usize)> {
    match n {
        0 => Vec::new(),
        1 => alloc::vec![(0, 1)],
        2 => alloc::vec![(0, 2), (1, 3)],
        _ => {
            let mut pairs = alloc::vec![(0, 2), (1, 4)];
            for k in 3..n {
                pairs.push((2 * k - 3, 2 * k));
            }
            pairs.push((2 * n - 3, 2 * n - 1));
            pairs
        }
    }
}

fn recognize_path_frame(r: &SignedRotation) -> Option<PathFrame> {
    let word = r.word();
    let len = word.len();
    let n = len / 2;
    let pairs = path_pattern_pairs(n);
    'offsets: for offset in 0..len {
        let label_at = |p: usize| word[cyc(offset + p, len)].label();
        for &(p, q) in &pairs {
            if label_at(p) != label_at(q) {
                continue 'offsets;
            }
        }
        let mut labels = Vec::with_capacity(n);
        if n >= 1 {
            labels.push(label_at(0));
        }
        if n >= 2 {
            labels.push(label_at(1));
        }
        for k in 3..=n {
            labels.push(label_at(2 * k - 3));
        }
        return Some(PathFrame { offset, labels });
    }
    None
}

fn find_adjacent_opposite(r: &SignedRotation, label: u32) -> Option<usize> {
    let word = r.word();
    let len = word.len();
    (0..len).find(|&s| word[s].label() == label && word[s] == word[cyc(s + 1, len)].negated())
}

/// Reduces a partial Petrial of a path bouquet F_n to an isolated vertex or
/// a single orientable loop by the case analysis on the first two chords,
/// returning the terminal form and every operation applied. Each case
/// removes one or two chords; boundary components are preserved throughout.
pub fn reduce_path_petrial(
    r: &SignedRotation,
) -> Result<(TerminalForm, Vec<RewriteStep>), RewriteError> {
    let mut steps: Vec<RewriteStep> = Vec::new();
    let mut current = r.clone();
    // Reject unrecognizable inputs before rewriting anything.
    if current.edge_count() >= 2 && recognize_path_frame(&current).is_none() {
        return Err(RewriteError::NotPathPetrial);
    }
    loop {
        let n = current.edge_count();
        match n {
            0 => return Ok((TerminalForm::IsolatedVertex, steps)),
            1 => {
                let label = current.labels()[0];
                if current.loop_kind(label) == Ok(LoopKind::Orientable) {
                    return Ok((TerminalForm::OneOrientableLoop, steps));
                }
                let start =
                    find_adjacent_opposite(&current, label).expect("opposite pair is adjacent");
                let step = apply_op4(&current, MatchSite::Op4 { start })?;
                current = step.after.clone();
                steps.push(step);
            }
            _ => {
                let frame =
                    recognize_path_frame(&current).ok_or(RewriteError::NotPathPetrial)?;
                let before_edges = current.edge_count();
                current = reduce_round(current, &frame, &mut steps)?;
                debug_assert!(current.edge_count() < before_edges);
            }
        }
    }
}

/// One round of the case analysis: consumes the first one or two path
/// chords of `frame` from `current`.
fn reduce_round(
    current: SignedRotation,
    frame: &PathFrame,
    steps: &mut Vec<RewriteStep>,
) -> Result<SignedRotation, RewriteError> {
    let len = current.word().len();
    let n = frame.labels.len();
    let (l1, l2) = (frame.labels[0], frame.labels[1]);
    let p0 = frame.offset;
    let p1 = cyc(p0 + 1, len);
    let p2 = cyc(p0 + 2, len);
    let kind1 = current.loop_kind(l1).expect("frame label");
    let kind2 = current.loop_kind(l2).expect("frame label");

    if kind1 == LoopKind::NonOrientable {
        // Case 1: detach l1 with Operation 2, delete it with Operation 4;
        // l2's surviving occurrence is negated.
        let step = apply_op2(&current, MatchSite::Op2 { neg_a: p0, pos_a: p2 })?;
        let mid = step.after.clone();
        steps.push(step);
        let start = find_adjacent_opposite(&mid, l1).expect("l1 pair is adjacent after op2");
        let step = apply_op4(&mid, MatchSite::Op4 { start })?;
        let next = step.after.clone();
        steps.push(step);
        return Ok(next);
    }

    if n == 2 {
        // Explicit two-chord handling; the general cases below need a third
        // chord to slide past.
        return if kind2 == LoopKind::Orientable {
            let step = apply_op3(&current, MatchSite::Op3 { start: p0 })?;
            let next = step.after.clone();
            steps.push(step);
            Ok(next)
        } else {
            let p3 = cyc(p0 + 3, len);
            let step = apply_op2(&current, MatchSite::Op2 { neg_a: p1, pos_a: p3 })?;
            let mid = step.after.clone();
            steps.push(step);
            let start = find_adjacent_opposite(&mid, l1).expect("l1 pair is adjacent after op2");
            let step = apply_op4(&mid, MatchSite::Op4 { start })?;
            let next = step.after.clone();
            steps.push(step);
            Ok(next)
        };
    }

    // Cases 2 and 3 start by sliding l3's first occurrence out of the way:
    // repeated Operation 1 on the l1 pair rotates the long arc one letter
    // per step until l2's second occurrence directly follows the l1-l2-l1
    // block.
    let mut current = current;
    loop {
        let q = find_triple(&current, l1, l2).expect("l1 l2 l1 block persists while sliding");
        if current.word()[cyc(q + 3, len)].label() == l2 {
            // Block l1 l2 l1 l2 is now consecutive.
            let q3 = cyc(q + 3, len);
            if kind2 == LoopKind::Orientable {
                // Case 2: delete both chords at once.
                let step = apply_op3(&current, MatchSite::Op3 { start: q })?;
                let next = step.after.clone();
                steps.push(step);
                return Ok(next);
            }
            // Case 3: Operation 2 pairs both chords into adjacent opposite
            // pairs, then Operation 4 deletes each.
            let step = apply_op2(
                &current,
                MatchSite::Op2 {
                    neg_a: cyc(q + 1, len),
                    pos_a: q3,
                },
            )?;
            let mut next = step.after.clone();
            steps.push(step);
            for label in [l1, l2] {
                let start =
                    find_adjacent_opposite(&next, label).expect("pair is adjacent after op2");
                let step = apply_op4(&next, MatchSite::Op4 { start })?;
                next = step.after.clone();
                steps.push(step);
            }
            return Ok(next);
        }
        let step = apply_op1(
            &current,
            MatchSite::Op1 {
                first_a: cyc(q + 2, len),
                second_a: q,
            },
        )?;
        current = step.after.clone();
        steps.push(step);
    }
}

/// Position of the consecutive labels (l1, l2, l1), if present.
fn find_triple(r: &SignedRotation, l1: u32, l2: u32) -> Option<usize> {
    let word = r.word();
    let len = word.len();
    (0..len).find(|&s| {
        word[s].label() == l1
            && word[cyc(s + 1, len)].label() == l2
            && word[cyc(s + 2, len)].label() == l1
    })
}
