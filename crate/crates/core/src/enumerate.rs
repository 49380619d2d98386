//! Pruned depth-first enumeration of walk classes.
//!
//! All enumerations run on one engine: a [`Walker`] holds the current walk,
//! its running winding number and a board of visited vertices, and a
//! [`Rule`] decides for every candidate step whether to skip it, report the
//! extended walk as terminal (weak-SAW revisits, steps out of a domain), or
//! extend the walk and keep going.
//!
//! For parallel runs the tree is cut at a fixed depth: the shallow part is
//! walked serially and every node at the cut becomes an independent task
//! with a fresh rule. Rules only accumulate integer sums, so merging the
//! task results gives the same numbers for any thread count.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use thiserror::Error;

use crate::domains::{start_edge, Domain};
use crate::lattice::{neighbors, step_direction, Direction, Edge, Vertex, Walk};
use crate::winding::{turn, Winding};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("enumeration budget of {0} walk extensions exceeded")]
    BudgetExceeded(u64),
}

/// A cap on the number of walk extensions, shared across worker threads.
#[derive(Debug, Default)]
pub struct Budget {
    limit: Option<u64>,
    used: AtomicU64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn new(limit: u64) -> Self {
        Self {
            limit: Some(limit),
            used: AtomicU64::new(0),
        }
    }

    pub fn limited(limit: Option<u64>) -> Self {
        Self {
            limit,
            used: AtomicU64::new(0),
        }
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    fn charge(&self, steps: u64) -> Result<(), EnumError> {
        let total = self.used.fetch_add(steps, Ordering::Relaxed) + steps;
        match self.limit {
            Some(limit) if total > limit => Err(EnumError::BudgetExceeded(limit)),
            _ => Ok(()),
        }
    }
}

const FLUSH_EVERY: u64 = 1 << 12;

/// Visited-vertex set over a coordinate window.
#[derive(Clone, Debug)]
pub(crate) struct Board {
    pmin: i32,
    qmin: i32,
    width: usize,
    height: usize,
    cells: Vec<bool>,
}

impl Board {
    pub(crate) fn new((pmin, pmax, qmin, qmax): (i32, i32, i32, i32)) -> Self {
        let width = (pmax - pmin + 1).max(0) as usize;
        let height = (qmax - qmin + 1).max(0) as usize;
        Self {
            pmin,
            qmin,
            width,
            height,
            cells: vec![false; width * height],
        }
    }

    pub(crate) fn around(center: Vertex, radius: i32) -> Self {
        Self::new((
            center.p - radius,
            center.p + radius,
            center.q - radius,
            center.q + radius,
        ))
    }

    #[inline]
    fn index(&self, v: Vertex) -> Option<usize> {
        let x = (v.p - self.pmin) as usize;
        let y = (v.q - self.qmin) as usize;
        (x < self.width && y < self.height).then_some(y * self.width + x)
    }

    #[inline]
    pub(crate) fn is_marked(&self, v: Vertex) -> bool {
        self.index(v).is_some_and(|i| self.cells[i])
    }

    #[inline]
    fn set(&mut self, v: Vertex, on: bool) {
        let i = self
            .index(v)
            .unwrap_or_else(|| panic!("vertex {v} lies outside the enumeration window"));
        self.cells[i] = on;
    }
}

/// The walk under construction.
#[derive(Clone, Debug)]
pub(crate) struct Walker {
    path: Vec<Vertex>,
    dirs: Vec<Direction>,
    // winding after each step; windings[0] = 0 for the first step
    windings: Vec<Winding>,
    board: Board,
    pending: u64,
}

impl Walker {
    /// Starts from a self-avoiding prefix; its vertices are marked visited.
    pub(crate) fn new(prefix: &[Vertex], board: Board) -> Self {
        let mut w = Self {
            path: Vec::with_capacity(64),
            dirs: Vec::with_capacity(64),
            windings: Vec::with_capacity(64),
            board,
            pending: 0,
        };
        w.path.push(prefix[0]);
        w.board.set(prefix[0], true);
        for &v in &prefix[1..] {
            w.push(v, true);
        }
        w
    }

    #[inline]
    fn push(&mut self, v: Vertex, mark: bool) {
        let d = step_direction(self.last(), v);
        let r = match self.dirs.last() {
            Some(&prev) => {
                self.windings.last().copied().unwrap_or(0)
                    + turn(prev, d).expect("steps never backtrack")
            }
            None => 0,
        };
        self.path.push(v);
        self.dirs.push(d);
        self.windings.push(r);
        if mark {
            self.board.set(v, true);
        }
        self.pending += 1;
    }

    #[inline]
    fn pop(&mut self, unmark: bool) {
        let v = self.path.pop().expect("never pop the first vertex");
        self.dirs.pop();
        self.windings.pop();
        if unmark {
            self.board.set(v, false);
        }
    }

    /// Number of steps.
    #[inline]
    pub(crate) fn len(&self) -> usize {
        self.path.len() - 1
    }

    #[inline]
    pub(crate) fn last(&self) -> Vertex {
        self.path[self.path.len() - 1]
    }

    #[inline]
    fn previous(&self) -> Option<Vertex> {
        self.path.len().checked_sub(2).map(|i| self.path[i])
    }

    #[inline]
    pub(crate) fn vertices(&self) -> &[Vertex] {
        &self.path
    }

    #[inline]
    pub(crate) fn winding(&self) -> Winding {
        self.windings.last().copied().unwrap_or(0)
    }

    /// Natural-orientation label of the final step.
    #[inline]
    pub(crate) fn final_direction(&self) -> Direction {
        self.dirs[self.dirs.len() - 1]
    }

    #[inline]
    pub(crate) fn first_direction(&self) -> Direction {
        self.dirs[0]
    }

    #[inline]
    pub(crate) fn is_marked(&self, v: Vertex) -> bool {
        self.board.is_marked(v)
    }

    pub(crate) fn board(&self) -> &Board {
        &self.board
    }

    pub(crate) fn view(&self) -> WalkView<'_> {
        WalkView {
            vertices: &self.path,
            winding: self.winding(),
            final_direction: self.final_direction(),
        }
    }

    fn settle(&mut self, budget: &Budget) -> Result<(), EnumError> {
        let steps = std::mem::take(&mut self.pending);
        budget.charge(steps)
    }
}

/// A finished walk handed to visitors.
#[derive(Clone, Copy, Debug)]
pub struct WalkView<'a> {
    pub vertices: &'a [Vertex],
    pub winding: Winding,
    /// Label of the final step in the walk's own direction of travel.
    pub final_direction: Direction,
}

impl WalkView<'_> {
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `ℓ(w)`: the final edge oriented against the walk.
    pub fn ell(&self) -> Direction {
        self.final_direction.reversed()
    }

    pub fn final_edge(&self) -> Edge {
        let n = self.vertices.len();
        Edge::between(self.vertices[n - 2], self.vertices[n - 1])
    }

    pub fn to_walk(&self) -> Walk {
        Walk::from_vertices_unchecked(self.vertices.to_vec())
    }
}

/// What to do with a candidate step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Step {
    Skip,
    /// Report the extended walk but do not continue from it.
    Report,
    /// Continue from the new vertex, optionally reporting it first.
    Extend {
        report: bool,
    },
}

pub(crate) trait Rule {
    fn step(&self, walker: &Walker, next: Vertex) -> Step;
    fn visit(&mut self, walker: &Walker);
}

/// Depth-first search below the walker's current walk. Nodes at depth
/// `split` are pushed to `tasks` instead of being expanded.
pub(crate) fn explore<R: Rule>(
    w: &mut Walker,
    max_len: usize,
    rule: &mut R,
    budget: &Budget,
    split: usize,
    tasks: &mut Vec<Vec<Vertex>>,
) -> Result<(), EnumError> {
    if w.len() >= max_len {
        return Ok(());
    }
    if w.pending >= FLUSH_EVERY {
        w.settle(budget)?;
    }
    let prev = w.previous();
    for next in neighbors(w.last()) {
        if Some(next) == prev {
            continue;
        }
        match rule.step(w, next) {
            Step::Skip => {}
            Step::Report => {
                w.push(next, false);
                rule.visit(w);
                w.pop(false);
            }
            Step::Extend { report } => {
                w.push(next, true);
                if report {
                    rule.visit(w);
                }
                if w.len() == split {
                    if w.len() < max_len {
                        tasks.push(w.path.clone());
                    }
                } else {
                    explore(w, max_len, rule, budget, split, tasks)?;
                }
                w.pop(true);
            }
        }
    }
    Ok(())
}

/// Levels explored serially before the tree is handed out as tasks.
const SPLIT_DEPTH: usize = 8;

/// Runs `rule` over the whole tree below `prefix`, in parallel on the
/// current rayon pool. Returns one rule per task plus the serial head.
pub(crate) fn run_split<R, F>(
    prefix: &[Vertex],
    board: Board,
    max_len: usize,
    visit_prefix: bool,
    make: F,
    budget: &Budget,
) -> Result<Vec<R>, EnumError>
where
    R: Rule + Send,
    F: Fn() -> R + Sync,
{
    let mut head = make();
    let mut w = Walker::new(prefix, board.clone());
    if visit_prefix && w.len() >= 1 {
        head.visit(&w);
    }
    let mut tasks = Vec::new();
    let split = w.len() + SPLIT_DEPTH;
    explore(&mut w, max_len, &mut head, budget, split, &mut tasks)?;
    w.settle(budget)?;

    let rest: Result<Vec<R>, EnumError> = tasks
        .par_iter()
        .map(|path| {
            let mut rule = make();
            let mut w = Walker::new(path, board.clone());
            w.pending = 0;
            explore(
                &mut w,
                max_len,
                &mut rule,
                budget,
                usize::MAX,
                &mut Vec::new(),
            )?;
            w.settle(budget)?;
            Ok(rule)
        })
        .collect();
    let mut out = vec![head];
    out.extend(rest?);
    Ok(out)
}

/// Runs `rule` serially.
pub(crate) fn run_serial<R: Rule>(
    prefix: &[Vertex],
    board: Board,
    max_len: usize,
    visit_prefix: bool,
    rule: &mut R,
    budget: &Budget,
) -> Result<(), EnumError> {
    let mut w = Walker::new(prefix, board);
    if visit_prefix && w.len() >= 1 {
        rule.visit(&w);
    }
    explore(&mut w, max_len, rule, budget, usize::MAX, &mut Vec::new())?;
    w.settle(budget)
}

// ---------------------------------------------------------------------------
// Counting by length

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WalkClass {
    /// All SAWs from the origin: `s_n`.
    Free,
    /// SAWs whose first edge is `a`: `b_n`.
    StartEdge,
    /// SAWs from `a` staying in `x ≥ 1` after the first vertex: `c_n`.
    HalfPlane,
    /// Walks in at least one trapezoid from `a` into its exit set: `d_n`.
    Trapezoidal,
}

struct LengthCounter<F> {
    counts: Vec<u64>,
    step: F,
}

impl<F: Fn(&Walker, Vertex) -> Step> Rule for LengthCounter<F> {
    fn step(&self, w: &Walker, next: Vertex) -> Step {
        (self.step)(w, next)
    }
    fn visit(&mut self, w: &Walker) {
        self.counts[w.len()] += 1;
    }
}

fn sum_counts(parts: impl IntoIterator<Item = Vec<u64>>, max_len: usize) -> Vec<u64> {
    let mut total = vec![0u64; max_len + 1];
    for part in parts {
        for (t, c) in total.iter_mut().zip(part) {
            *t += c;
        }
    }
    total
}

fn a_prefix() -> [Vertex; 2] {
    [Vertex::ORIGIN, Vertex::new(1, 0)]
}

/// Counts of the given class for every length `1..=max_len`; index 0 is 0.
pub fn class_counts(
    class: WalkClass,
    max_len: usize,
    budget: &Budget,
) -> Result<Vec<u64>, EnumError> {
    if max_len == 0 {
        return Ok(vec![0]);
    }
    let board = Board::around(Vertex::ORIGIN, max_len as i32 + 1);
    let make_counter = |step| LengthCounter {
        counts: vec![0; max_len + 1],
        step,
    };
    let parts: Vec<Vec<u64>> = match class {
        WalkClass::Free => run_split(
            &[Vertex::ORIGIN],
            board,
            max_len,
            false,
            || make_counter(free_step as fn(&Walker, Vertex) -> Step),
            budget,
        )?
        .into_iter()
        .map(|r| r.counts)
        .collect(),
        WalkClass::StartEdge => run_split(
            &a_prefix(),
            board,
            max_len,
            true,
            || make_counter(free_step as fn(&Walker, Vertex) -> Step),
            budget,
        )?
        .into_iter()
        .map(|r| r.counts)
        .collect(),
        WalkClass::HalfPlane => run_split(
            &a_prefix(),
            board,
            max_len,
            true,
            || make_counter(half_plane_step as fn(&Walker, Vertex) -> Step),
            budget,
        )?
        .into_iter()
        .map(|r| r.counts)
        .collect(),
        WalkClass::Trapezoidal => {
            return trapezoidal_counts(max_len, max_len as i32, budget);
        }
    };
    Ok(sum_counts(parts, max_len))
}

fn free_step(w: &Walker, next: Vertex) -> Step {
    if w.is_marked(next) {
        Step::Skip
    } else {
        Step::Extend { report: true }
    }
}

fn half_plane_step(w: &Walker, next: Vertex) -> Step {
    if next.p < 1 || w.is_marked(next) {
        Step::Skip
    } else {
        Step::Extend { report: true }
    }
}

/// `s_n`: SAWs of length `n` from the origin.
pub fn count_saws(n: usize) -> u64 {
    class_counts(WalkClass::Free, n, &Budget::unlimited()).expect("unlimited")[n]
}

/// `b_n`: SAWs of length `n` with first edge `a`.
pub fn count_b(n: usize) -> u64 {
    class_counts(WalkClass::StartEdge, n, &Budget::unlimited()).expect("unlimited")[n]
}

/// `c_n`: half-plane SAWs of length `n`.
pub fn count_c(n: usize) -> u64 {
    class_counts(WalkClass::HalfPlane, n, &Budget::unlimited()).expect("unlimited")[n]
}

/// `d_n`: trapezoidal SAWs of length `n`.
pub fn count_d(n: usize) -> u64 {
    class_counts(WalkClass::Trapezoidal, n, &Budget::unlimited()).expect("unlimited")[n]
}

// ---------------------------------------------------------------------------
// Trapezoidal walks

/// True iff some `X_{r,s}` with `2 ≤ r, s ≤ range` contains every vertex of
/// `path` but the first and last, and the final edge lies in its exit set.
/// `path` must start with the edge `a`.
pub(crate) fn is_trapezoidal(path: &[Vertex], range: i32) -> bool {
    let n = path.len();
    if n < 3 {
        return false;
    }
    let interior = &path[1..n - 1];
    let mut pmax = 0;
    let mut smin = 2;
    for v in interior {
        if v.p < 1 {
            return false;
        }
        pmax = pmax.max(v.p);
        // |q| ≤ 2s + p - 2  ⇔  s ≥ (|q| - p + 2) / 2
        let need = v.q.abs() - v.p + 2;
        smin = smin.max((need + 1).div_euclid(2));
    }
    let rmin = pmax.max(2);
    if rmin > range || smin > range {
        return false;
    }
    let (from, to) = (path[n - 2], path[n - 1]);
    if to.q == from.q {
        if to.p == from.p + 1 {
            // C edge: r is forced to the column of `from`
            from.p == pmax && from.p >= 2
        } else if to.p == 0 && from.q != 0 {
            // extreme edge of A⁺ or A⁻: 2s - 2 = |q|
            let s = from.q.abs() / 2 + 1;
            s >= smin && s <= range
        } else {
            false
        }
    } else {
        if to.q.abs() <= from.q.abs() {
            return false;
        }
        // B edge: |to.q| = 2s + p - 1
        let twice_s = to.q.abs() - from.p + 1;
        twice_s % 2 == 0 && twice_s / 2 >= smin && twice_s / 2 <= range
    }
}

struct TrapezoidalCounter {
    counts: Vec<u64>,
    range: i32,
}

impl Rule for TrapezoidalCounter {
    fn step(&self, w: &Walker, next: Vertex) -> Step {
        if w.is_marked(next) {
            Step::Skip
        } else if next.p >= 1 {
            Step::Extend { report: true }
        } else {
            Step::Report
        }
    }

    fn visit(&mut self, w: &Walker) {
        if is_trapezoidal(w.vertices(), self.range) {
            self.counts[w.len()] += 1;
        }
    }
}

/// `d_n` for `n ≤ max_len`, taking the union over `2 ≤ r, s ≤ range`.
pub fn trapezoidal_counts(
    max_len: usize,
    range: i32,
    budget: &Budget,
) -> Result<Vec<u64>, EnumError> {
    if max_len == 0 {
        return Ok(vec![0]);
    }
    let board = Board::around(Vertex::ORIGIN, max_len as i32 + 1);
    let parts = run_split(
        &a_prefix(),
        board,
        max_len,
        false,
        || TrapezoidalCounter {
            counts: vec![0; max_len + 1],
            range,
        },
        budget,
    )?;
    Ok(sum_counts(parts.into_iter().map(|r| r.counts), max_len))
}

// ---------------------------------------------------------------------------
// Closed SAWs

/// Census of complete windings: length → (`r*` → number of closed SAWs).
pub type WindingCensus = BTreeMap<usize, BTreeMap<Winding, u64>>;

struct ClosedCensus {
    root: Vertex,
    census: HashMap<(usize, Winding), u64>,
}

impl Rule for ClosedCensus {
    fn step(&self, w: &Walker, next: Vertex) -> Step {
        if next == self.root && w.len() >= 2 {
            Step::Report
        } else if w.is_marked(next) {
            Step::Skip
        } else {
            Step::Extend { report: false }
        }
    }

    fn visit(&mut self, w: &Walker) {
        let closing =
            turn(w.final_direction(), w.first_direction()).expect("closed walks turn at the root");
        *self
            .census
            .entry((w.len(), w.winding() + closing))
            .or_default() += 1;
    }
}

/// Every closed SAW through `root` of length at most `max_len`, once per
/// orientation, tallied by complete winding number.
pub fn closed_saw_census(
    root: Vertex,
    max_len: usize,
    budget: &Budget,
) -> Result<WindingCensus, EnumError> {
    let board = Board::around(root, max_len as i32 + 1);
    let parts = run_split(
        &[root],
        board,
        max_len,
        false,
        || ClosedCensus {
            root,
            census: HashMap::new(),
        },
        budget,
    )?;
    let mut out = WindingCensus::new();
    for part in parts {
        for ((len, r), c) in part.census {
            *out.entry(len).or_default().entry(r).or_default() += c;
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Domain walks

/// Orients the start edge into the domain: returns `[outside, inside]`.
pub(crate) fn entry_prefix(domain: &Domain) -> [Vertex; 2] {
    let away = domain
        .oriented_away(start_edge())
        .expect("the start edge is a border edge of every domain");
    [away.head(), away.tail]
}

pub(crate) struct SawRule<'d, V> {
    pub(crate) domain: &'d Domain,
    pub(crate) visitor: V,
}

impl<V: FnMut(&Walker)> Rule for SawRule<'_, V> {
    fn step(&self, w: &Walker, next: Vertex) -> Step {
        if !self.domain.contains(next) || w.is_marked(next) {
            Step::Skip
        } else {
            Step::Extend { report: true }
        }
    }
    fn visit(&mut self, w: &Walker) {
        (self.visitor)(w)
    }
}

pub(crate) struct WeakBorderRule<'d, V> {
    pub(crate) domain: &'d Domain,
    pub(crate) visitor: V,
}

impl<V: FnMut(&Walker)> Rule for WeakBorderRule<'_, V> {
    fn step(&self, w: &Walker, next: Vertex) -> Step {
        if !self.domain.contains(next) {
            Step::Report
        } else if w.is_marked(next) {
            Step::Skip
        } else {
            Step::Extend { report: false }
        }
    }
    fn visit(&mut self, w: &Walker) {
        (self.visitor)(w)
    }
}

pub(crate) struct CycleRule<'d, V> {
    pub(crate) domain: &'d Domain,
    pub(crate) root: Vertex,
    pub(crate) visitor: V,
}

impl<V: FnMut(&Walker)> Rule for CycleRule<'_, V> {
    fn step(&self, w: &Walker, next: Vertex) -> Step {
        if next == self.root {
            // each cycle once: leave towards the smaller of the root's two
            // cycle neighbours
            if w.len() >= 2 && w.vertices()[1] < w.last() {
                Step::Report
            } else {
                Step::Skip
            }
        } else if !self.domain.contains(next) || w.is_marked(next) {
            Step::Skip
        } else {
            Step::Extend { report: false }
        }
    }
    fn visit(&mut self, w: &Walker) {
        (self.visitor)(w)
    }
}

/// Board large enough for every walk of `max_len` steps from `a` in `domain`.
pub(crate) fn domain_board(domain: &Domain, max_len: usize) -> Board {
    let (pmin, pmax, qmin, qmax) = domain.window(max_len);
    // room for the outside endpoint of a final border step
    Board::new((pmin - 1, pmax + 1, qmin - 1, qmax + 1))
}

/// Visits every SAW that starts with `a` (from its endvertex outside the
/// domain) and has all later vertices in the domain, up to `max_len` steps.
/// Returns the number of walks visited.
pub fn enumerate_s(domain: &Domain, max_len: usize, mut visitor: impl FnMut(&WalkView<'_>)) -> u64 {
    let mut visits = 0u64;
    let mut rule = SawRule {
        domain,
        visitor: |w: &Walker| {
            visits += 1;
            visitor(&w.view());
        },
    };
    run_serial(
        &entry_prefix(domain),
        domain_board(domain, max_len),
        max_len,
        true,
        &mut rule,
        &Budget::unlimited(),
    )
    .expect("unlimited");
    visits
}

/// Visits every weak SAW from `a` whose final edge is a border edge, with
/// that edge. The one-step walk `a` is included.
pub fn enumerate_weak_to_border(
    domain: &Domain,
    max_len: usize,
    mut visitor: impl FnMut(&WalkView<'_>, Edge),
) -> u64 {
    let mut visits = 0u64;
    let mut rule = WeakBorderRule {
        domain,
        visitor: |w: &Walker| {
            visits += 1;
            let view = w.view();
            visitor(&view, view.final_edge());
        },
    };
    // the prefix `a` ends inside the domain; it is visited explicitly
    let prefix = entry_prefix(domain);
    let board = domain_board(domain, max_len);
    let mut head = Walker::new(&prefix, board);
    if max_len >= 1 {
        rule.visit(&head);
    }
    explore(
        &mut head,
        max_len,
        &mut rule,
        &Budget::unlimited(),
        usize::MAX,
        &mut Vec::new(),
    )
    .expect("unlimited");
    visits
}

/// Visits every cycle of the domain through `v` that avoids `forbidden`,
/// once per cycle. The visitor receives the cycle as a closed vertex
/// sequence starting and ending at `v`.
pub fn enumerate_cycles_through(
    domain: &Domain,
    v: Vertex,
    forbidden: &[Vertex],
    max_len: usize,
    mut visitor: impl FnMut(&[Vertex]),
) -> u64 {
    if !domain.contains(v) || forbidden.contains(&v) {
        return 0;
    }
    let radius = forbidden
        .iter()
        .map(|f| (f.p - v.p).abs().max((f.q - v.q).abs()))
        .max()
        .unwrap_or(0)
        .max(max_len as i32)
        + 1;
    let mut board = Board::around(v, radius);
    for &f in forbidden {
        board.set(f, true);
    }
    let mut visits = 0u64;
    let mut rule = CycleRule {
        domain,
        root: v,
        visitor: |w: &Walker| {
            visits += 1;
            visitor(w.vertices());
        },
    };
    run_serial(&[v], board, max_len, false, &mut rule, &Budget::unlimited()).expect("unlimited");
    visits
}

/// Cycle counts by length through the walker's final vertex, avoiding the
/// rest of its walk. Reuses the walker's board as the forbidden set.
pub(crate) fn cycle_lengths_at_end(
    w: &Walker,
    domain: &Domain,
    max_len: usize,
    counts: &mut Vec<u64>,
) {
    counts.clear();
    counts.resize(max_len + 1, 0);
    let root = w.last();
    let mut rule = CycleRule {
        domain,
        root,
        visitor: |c: &Walker| counts[c.len()] += 1,
    };
    let mut cw = Walker::new(&[root], w.board().clone());
    // the root is already marked; Walker::new marks it again harmlessly
    explore(
        &mut cw,
        max_len,
        &mut rule,
        &Budget::unlimited(),
        usize::MAX,
        &mut Vec::new(),
    )
    .expect("unlimited");
}
