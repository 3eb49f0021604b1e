//! Left-to-right sweep over a plat-style event word.
//!
//! Both Legendrian and transverse fronts reduce to the same three actions:
//! two strands are born at a left extremum, two strands die at a right
//! extremum, or two adjacent strands swap at a crossing. Between extrema
//! every strand is the graph of a function, so an *arc* always runs from a
//! left extremum to a right extremum and components alternate between
//! rightward and leftward arcs.

use std::collections::BTreeSet;

use super::Issue;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Action {
    Create,
    Annihilate,
    Swap,
}

pub(crate) trait SweepEvent {
    fn action(&self) -> Action;
    fn position(&self) -> usize;
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Branch {
    Upper,
    Lower,
}

#[derive(Clone, Debug)]
pub(crate) struct Arc {
    pub left_event: usize,
    pub right_event: usize,
    pub left_branch: Branch,
    pub right_branch: Branch,
    pub component: usize,
    pub rightward: bool,
}

/// Arcs meeting at one event. For a crossing, `upper` is the strand at the
/// smaller depth before the event, which descends through it.
#[derive(Clone, Copy, Debug)]
pub(crate) struct EventArcs {
    pub upper: usize,
    pub lower: usize,
}

#[derive(Clone, Debug)]
pub(crate) struct Trace {
    pub arcs: Vec<Arc>,
    pub events: Vec<EventArcs>,
    pub components: usize,
}

impl Trace {
    pub fn event_component(&self, e: usize) -> usize {
        self.arcs[self.events[e].upper].component
    }

    /// True when the two arcs at a crossing point the same horizontal way.
    pub fn parallel(&self, e: usize) -> bool {
        let ea = self.events[e];
        self.arcs[ea.upper].rightward == self.arcs[ea.lower].rightward
    }

    /// At a left extremum: traversal turns upward iff the upper arc leaves
    /// rightward. At a right extremum: upward iff the lower arc arrives
    /// rightward.
    pub fn extremum_is_upward(&self, e: usize, action: Action) -> bool {
        let ea = self.events[e];
        match action {
            Action::Create => self.arcs[ea.upper].rightward,
            Action::Annihilate => self.arcs[ea.lower].rightward,
            Action::Swap => unreachable!("crossings have no vertical direction"),
        }
    }
}

/// Structural problems of an event word; empty when the word is closed and
/// every position is in range.
pub(crate) fn structural_issues<E: SweepEvent>(events: &[E]) -> Vec<Issue> {
    let mut issues = Vec::new();
    let mut k = 0usize;
    for (idx, ev) in events.iter().enumerate() {
        let i = ev.position();
        match ev.action() {
            Action::Create => {
                if i == 0 || i > k + 1 {
                    issues.push(Issue::PositionOutOfRange { event: idx, position: i, strands: k });
                    continue;
                }
                k += 2;
            }
            Action::Annihilate | Action::Swap => {
                if i == 0 || i + 1 > k {
                    issues.push(Issue::PositionOutOfRange { event: idx, position: i, strands: k });
                    continue;
                }
                if ev.action() == Action::Annihilate {
                    k -= 2;
                }
            }
        }
    }
    if k != 0 {
        issues.push(Issue::NotClosed { strands: k });
    }
    issues
}

/// Traces a structurally valid word. `reversed` holds the components whose
/// orientation is flipped from the default, which has the upper arc at the
/// component's first left extremum pointing right.
pub(crate) fn trace<E: SweepEvent>(events: &[E], reversed: &BTreeSet<usize>) -> Result<Trace, Vec<Issue>> {
    let issues = structural_issues(events);
    if !issues.is_empty() {
        return Err(issues);
    }

    let mut arcs: Vec<Arc> = Vec::new();
    let mut strands: Vec<usize> = Vec::new();
    let mut per_event = Vec::with_capacity(events.len());
    let pending = |e: usize, b: Branch| Arc {
        left_event: e,
        right_event: usize::MAX,
        left_branch: b,
        right_branch: Branch::Upper,
        component: usize::MAX,
        rightward: true,
    };

    for (e, ev) in events.iter().enumerate() {
        let p = ev.position() - 1;
        match ev.action() {
            Action::Create => {
                let u = arcs.len();
                arcs.push(pending(e, Branch::Upper));
                arcs.push(pending(e, Branch::Lower));
                strands.splice(p..p, [u, u + 1]);
                per_event.push(EventArcs { upper: u, lower: u + 1 });
            }
            Action::Annihilate => {
                let (u, l) = (strands[p], strands[p + 1]);
                arcs[u].right_event = e;
                arcs[u].right_branch = Branch::Upper;
                arcs[l].right_event = e;
                arcs[l].right_branch = Branch::Lower;
                strands.drain(p..p + 2);
                per_event.push(EventArcs { upper: u, lower: l });
            }
            Action::Swap => {
                per_event.push(EventArcs { upper: strands[p], lower: strands[p + 1] });
                strands.swap(p, p + 1);
            }
        }
    }

    // walk components in order of their first left extremum
    let mut components = 0;
    for start in 0..arcs.len() {
        if arcs[start].component != usize::MAX || arcs[start].left_branch != Branch::Upper {
            continue;
        }
        let c = components;
        components += 1;
        let flip = reversed.contains(&c);
        let mut arc = start;
        let mut rightward = true;
        loop {
            arcs[arc].component = c;
            arcs[arc].rightward = rightward != flip;
            let cusp = if rightward { arcs[arc].right_event } else { arcs[arc].left_event };
            let ea = per_event[cusp];
            let next = if ea.upper == arc { ea.lower } else { ea.upper };
            rightward = !rightward;
            arc = next;
            if arc == start {
                break;
            }
        }
    }

    Ok(Trace { arcs, events: per_event, components })
}
