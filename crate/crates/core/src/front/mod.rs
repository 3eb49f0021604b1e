//! Front projections of Legendrian and transverse links as plat-style event
//! words, with their classical invariants.
//!
//! A word is read left to right. Strands are numbered by depth from the top
//! (1 = highest `z`). A left cusp at `i` creates two strands at depths `i`
//! and `i + 1`; a right cusp at `i` joins the strands at `i` and `i + 1`; a
//! crossing at `i` swaps them.
//!
//! Legendrian crossings carry no over/under data: the strand that descends
//! through the crossing (the one at depth `i` before it) has the more
//! negative slope and passes in front. With that convention a crossing is
//! positive exactly when both strands point the same horizontal way.

mod format;
pub mod random;
mod sweep;
mod transverse;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use format::{parse_front_file, FrontFile, ParseError};
pub use transverse::{TransverseEvent, TransverseEventKind, TransverseFront};

use sweep::{Action, SweepEvent, Trace};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum EventKind {
    LeftCusp,
    RightCusp,
    Crossing,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FrontEvent {
    pub kind: EventKind,
    pub position: usize,
}

impl FrontEvent {
    pub fn left(position: usize) -> Self {
        Self { kind: EventKind::LeftCusp, position }
    }

    pub fn right(position: usize) -> Self {
        Self { kind: EventKind::RightCusp, position }
    }

    pub fn crossing(position: usize) -> Self {
        Self { kind: EventKind::Crossing, position }
    }
}

impl SweepEvent for FrontEvent {
    fn action(&self) -> Action {
        match self.kind {
            EventKind::LeftCusp => Action::Create,
            EventKind::RightCusp => Action::Annihilate,
            EventKind::Crossing => Action::Swap,
        }
    }

    fn position(&self) -> usize {
        self.position
    }
}

impl fmt::Display for FrontEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            EventKind::LeftCusp => 'L',
            EventKind::RightCusp => 'R',
            EventKind::Crossing => 'X',
        };
        write!(f, "{c}{}", self.position)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Orientation {
    /// The upper strand leaving the component's first left cusp points right.
    #[default]
    Positive,
    Negative,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        }
    }
}

/// Direction of a stabilization: an up-zigzag adds two up-cusps, a
/// down-zigzag two down-cusps.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Zigzag {
    Up,
    Down,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Issue {
    PositionOutOfRange { event: usize, position: usize, strands: usize },
    NotClosed { strands: usize },
    UnknownComponent { component: usize, components: usize },
    DownwardTangency { event: usize, component: usize },
    ForbiddenCrossing { event: usize },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::PositionOutOfRange { event, position, strands } => {
                write!(f, "event {event}: position {position} out of range with {strands} strands")
            }
            Issue::NotClosed { strands } => write!(f, "diagram not closed ({strands} strands remain)"),
            Issue::UnknownComponent { component, components } => {
                write!(f, "orientation given for component {component}, but there are {components}")
            }
            Issue::DownwardTangency { event, component } => {
                write!(f, "event {event}: downward vertical tangency on component {component}")
            }
            Issue::ForbiddenCrossing { event } => {
                write!(f, "event {event}: crossing cannot occur on a positively transverse front")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
    pub components: usize,
    /// Component of each event; empty when the word is structurally broken.
    pub event_components: Vec<usize>,
    pub crossings: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    fn from_trace(trace: &Trace, crossings: usize) -> Self {
        Self {
            issues: Vec::new(),
            components: trace.components,
            event_components: (0..trace.events.len()).map(|e| trace.event_component(e)).collect(),
            crossings,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FrontError {
    #[error("invalid diagram: {}", join(.0))]
    InvalidDiagram(Vec<Issue>),
    #[error("invalid transverse front: {}", join(.0))]
    InvalidTransverseFront(Vec<Issue>),
    #[error("no component {component} (diagram has {components})")]
    InvalidComponent { component: usize, components: usize },
}

fn join(issues: &[Issue]) -> String {
    issues.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ComponentInvariants {
    pub writhe: i64,
    pub up_cusps: i64,
    pub down_cusps: i64,
    pub tb: i64,
    pub rot: i64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassicalInvariants {
    pub components: Vec<ComponentInvariants>,
    /// Symmetric, zero diagonal.
    pub linking: Vec<Vec<i64>>,
}

impl ClassicalInvariants {
    pub fn tb(&self, c: usize) -> i64 {
        self.components[c].tb
    }

    pub fn rot(&self, c: usize) -> i64 {
        self.components[c].rot
    }
}

/// Front projection of an oriented Legendrian link.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FrontDiagram {
    events: Vec<FrontEvent>,
    reversed: BTreeSet<usize>,
}

impl FrontDiagram {
    pub fn new(events: Vec<FrontEvent>) -> Self {
        Self { events, reversed: BTreeSet::new() }
    }

    /// Parses a bare token string such as `"L1 X1 X1 R1"`.
    pub fn from_tokens(s: &str) -> Result<Self, ParseError> {
        match parse_front_file(&format!("front v1\n{s}"))? {
            FrontFile::Legendrian(d) => Ok(d),
            FrontFile::Transverse(_) => unreachable!(),
        }
    }

    /// Two-cusp unknot, tb = -1, rot = 0.
    pub fn unknot() -> Self {
        Self::new(vec![FrontEvent::left(1), FrontEvent::right(1)])
    }

    /// Right-handed trefoil with tb = 1, rot = 0.
    pub fn right_trefoil() -> Self {
        use FrontEvent as E;
        Self::new(vec![E::left(1), E::left(3), E::crossing(2), E::crossing(2), E::crossing(2), E::right(1), E::right(1)])
    }

    pub fn events(&self) -> &[FrontEvent] {
        &self.events
    }

    pub fn orientation(&self, component: usize) -> Orientation {
        if self.reversed.contains(&component) {
            Orientation::Negative
        } else {
            Orientation::Positive
        }
    }

    pub fn set_orientation(&mut self, component: usize, o: Orientation) {
        match o {
            Orientation::Positive => self.reversed.remove(&component),
            Orientation::Negative => self.reversed.insert(component),
        };
    }

    pub fn with_orientation(mut self, component: usize, o: Orientation) -> Self {
        self.set_orientation(component, o);
        self
    }

    pub fn reversed_components(&self) -> impl Iterator<Item = usize> + '_ {
        self.reversed.iter().copied()
    }

    pub fn validate(&self) -> ValidationReport {
        match self.checked_trace() {
            Ok(t) => ValidationReport::from_trace(&t, self.crossing_count()),
            Err(issues) => ValidationReport { issues, ..Default::default() },
        }
    }

    pub fn is_valid(&self) -> bool {
        self.checked_trace().is_ok()
    }

    pub fn num_components(&self) -> Result<usize, FrontError> {
        Ok(self.trace()?.components)
    }

    fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| e.kind == EventKind::Crossing).count()
    }

    fn checked_trace(&self) -> Result<Trace, Vec<Issue>> {
        let t = sweep::trace(&self.events, &self.reversed)?;
        let unknown: Vec<Issue> = self
            .reversed
            .iter()
            .filter(|&&c| c >= t.components)
            .map(|&c| Issue::UnknownComponent { component: c, components: t.components })
            .collect();
        if unknown.is_empty() {
            Ok(t)
        } else {
            Err(unknown)
        }
    }

    pub(crate) fn trace(&self) -> Result<Trace, FrontError> {
        self.checked_trace().map_err(FrontError::InvalidDiagram)
    }

    fn check_component(&self, trace: &Trace, c: usize) -> Result<(), FrontError> {
        if c < trace.components {
            Ok(())
        } else {
            Err(FrontError::InvalidComponent { component: c, components: trace.components })
        }
    }

    pub fn classical_invariants(&self) -> Result<ClassicalInvariants, FrontError> {
        let t = self.trace()?;
        let n = t.components;
        let mut writhe = vec![0i64; n];
        let mut up = vec![0i64; n];
        let mut down = vec![0i64; n];
        let mut linking2 = vec![vec![0i64; n]; n];

        for (e, ev) in self.events.iter().enumerate() {
            let ea = t.events[e];
            match ev.kind {
                EventKind::Crossing => {
                    let sign = if t.parallel(e) { 1 } else { -1 };
                    let (a, b) = (t.arcs[ea.upper].component, t.arcs[ea.lower].component);
                    if a == b {
                        writhe[a] += sign;
                    } else {
                        linking2[a][b] += sign;
                        linking2[b][a] += sign;
                    }
                }
                EventKind::LeftCusp | EventKind::RightCusp => {
                    let c = t.arcs[ea.upper].component;
                    if t.extremum_is_upward(e, ev.action()) {
                        up[c] += 1;
                    } else {
                        down[c] += 1;
                    }
                }
            }
        }

        let components = (0..n)
            .map(|c| ComponentInvariants {
                writhe: writhe[c],
                up_cusps: up[c],
                down_cusps: down[c],
                tb: writhe[c] - (up[c] + down[c]) / 2,
                rot: (down[c] - up[c]) / 2,
            })
            .collect();
        let linking = linking2.into_iter().map(|row| row.into_iter().map(|x| x / 2).collect()).collect();
        Ok(ClassicalInvariants { components, linking })
    }

    /// Adds one zigzag to `component` right after its first left cusp, on the
    /// upper strand leaving that cusp.
    pub fn stabilize(&self, component: usize, direction: Zigzag) -> Result<FrontDiagram, FrontError> {
        let t = self.trace()?;
        self.check_component(&t, component)?;
        let e0 = first_left_cusp(&t, &self.events, component);
        let i = self.events[e0].position;
        let rightward = t.arcs[t.events[e0].upper].rightward;
        // on a rightward strand a zigzag climbing to the upper strand has two
        // up-cusps; traversed the other way both cusps point down
        let climbing = rightward == (direction == Zigzag::Up);
        let zigzag = if climbing {
            [FrontEvent::left(i), FrontEvent::right(i + 1)]
        } else {
            [FrontEvent::left(i + 1), FrontEvent::right(i)]
        };
        let mut events = self.events.clone();
        events.splice(e0 + 1..e0 + 1, zigzag);
        Ok(FrontDiagram { events, reversed: self.reversed.clone() })
    }

    /// Replaces `component` by itself and its push-off in the `z`-direction.
    /// The copy becomes component `component + 1`; later components shift
    /// up by one.
    pub fn legendrian_pushoff(&self, component: usize) -> Result<FrontDiagram, FrontError> {
        let t = self.trace()?;
        self.check_component(&t, component)?;

        // widths[k] is 2 for doubled strands
        let mut widths: Vec<usize> = Vec::new();
        let mut events = Vec::with_capacity(self.events.len() * 2);
        let out_pos = |widths: &[usize], i: usize| widths[..i - 1].iter().sum::<usize>() + 1;
        use FrontEvent as E;

        for (e, ev) in self.events.iter().enumerate() {
            let i = ev.position;
            let doubled = t.event_component(e) == component;
            match ev.kind {
                EventKind::LeftCusp => {
                    let p = out_pos(&widths, i);
                    if doubled {
                        // copy cusp sits directly above; its lower branch
                        // crosses the original's upper branch
                        events.extend([E::left(p), E::left(p), E::crossing(p + 1)]);
                        widths.splice(i - 1..i - 1, [2, 2]);
                    } else {
                        events.push(E::left(p));
                        widths.splice(i - 1..i - 1, [1, 1]);
                    }
                }
                EventKind::RightCusp => {
                    let p = out_pos(&widths, i);
                    if doubled {
                        events.extend([E::crossing(p + 1), E::right(p + 2), E::right(p)]);
                    } else {
                        events.push(E::right(p));
                    }
                    widths.drain(i - 1..i + 1);
                }
                EventKind::Crossing => {
                    let p = out_pos(&widths, i);
                    match (widths[i - 1], widths[i]) {
                        (1, 1) => events.push(E::crossing(p)),
                        (2, 1) => events.extend([E::crossing(p + 1), E::crossing(p)]),
                        (1, 2) => events.extend([E::crossing(p), E::crossing(p + 1)]),
                        _ => events.extend([E::crossing(p + 1), E::crossing(p), E::crossing(p + 2), E::crossing(p + 1)]),
                    }
                    widths.swap(i - 1, i);
                }
            }
        }

        let reversed = self
            .reversed
            .iter()
            .flat_map(|&c| match c {
                c if c < component => vec![c],
                c if c == component => vec![c, c + 1],
                c => vec![c + 1],
            })
            .collect();
        Ok(FrontDiagram { events, reversed })
    }

    /// The sub-diagram formed by a single component, which becomes component 0.
    pub fn restrict(&self, component: usize) -> Result<FrontDiagram, FrontError> {
        let t = self.trace()?;
        self.check_component(&t, component)?;
        let mut owners: Vec<usize> = Vec::new();
        let mut events = Vec::new();
        for (e, ev) in self.events.iter().enumerate() {
            let i = ev.position;
            let ea = t.events[e];
            let (cu, cl) = (t.arcs[ea.upper].component, t.arcs[ea.lower].component);
            let p = owners[..i - 1].iter().filter(|&&c| c == component).count() + 1;
            match ev.kind {
                EventKind::LeftCusp => {
                    owners.splice(i - 1..i - 1, [cu, cu]);
                }
                EventKind::RightCusp => {
                    owners.drain(i - 1..i + 1);
                }
                EventKind::Crossing => owners.swap(i - 1, i),
            }
            if cu == component && cl == component {
                events.push(FrontEvent { kind: ev.kind, position: p });
            }
        }
        let mut out = FrontDiagram::new(events);
        out.set_orientation(0, self.orientation(component));
        Ok(out)
    }

    /// Split union: `other` is drawn to the right of `self`.
    pub fn disjoint_union(&self, other: &FrontDiagram) -> Result<FrontDiagram, FrontError> {
        let n = self.num_components()?;
        other.trace()?;
        let mut events = self.events.clone();
        events.extend_from_slice(&other.events);
        let mut reversed = self.reversed.clone();
        reversed.extend(other.reversed.iter().map(|c| c + n));
        Ok(FrontDiagram { events, reversed })
    }

    /// Writes the diagram in the `front v1` text format.
    pub fn to_file_string(&self) -> String {
        format::write_front(self)
    }
}

fn first_left_cusp(t: &Trace, events: &[FrontEvent], component: usize) -> usize {
    events
        .iter()
        .enumerate()
        .position(|(e, ev)| ev.kind == EventKind::LeftCusp && t.event_component(e) == component)
        .expect("every component has a left cusp")
}
