//! Fronts of positively transverse links and the conversions between
//! Legendrian and transverse fronts.
//!
//! Positive transversality `ż + x ẏ > 0` rules out two things in the front:
//! vertical tangencies traversed downward, and one crossing type. Reading
//! `x` as depth toward the viewer, a strand moving right satisfies
//! `x > -slope` and a strand moving left `x < -slope`. So a leftward strand
//! can lie in front of a rightward one only if its slope is smaller. The
//! forbidden crossing is therefore: the ascending strand passes in front
//! (`U`), it moves left, and the descending strand it covers moves right.

use std::collections::BTreeSet;
use std::fmt;

use super::sweep::{self, Action, SweepEvent, Trace};
use super::{FrontDiagram, FrontError, FrontEvent, Issue, ValidationReport};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TransverseEventKind {
    /// Left vertical tangency; two strands are born.
    Cup,
    /// Right vertical tangency; two strands end.
    Cap,
    /// The strand at the smaller depth (descending) is in front.
    CrossingOver,
    /// The strand at the smaller depth (descending) is behind.
    CrossingUnder,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct TransverseEvent {
    pub kind: TransverseEventKind,
    pub position: usize,
}

impl TransverseEvent {
    pub fn cup(position: usize) -> Self {
        Self { kind: TransverseEventKind::Cup, position }
    }

    pub fn cap(position: usize) -> Self {
        Self { kind: TransverseEventKind::Cap, position }
    }

    pub fn over(position: usize) -> Self {
        Self { kind: TransverseEventKind::CrossingOver, position }
    }

    pub fn under(position: usize) -> Self {
        Self { kind: TransverseEventKind::CrossingUnder, position }
    }
}

impl SweepEvent for TransverseEvent {
    fn action(&self) -> Action {
        match self.kind {
            TransverseEventKind::Cup => Action::Create,
            TransverseEventKind::Cap => Action::Annihilate,
            TransverseEventKind::CrossingOver | TransverseEventKind::CrossingUnder => Action::Swap,
        }
    }

    fn position(&self) -> usize {
        self.position
    }
}

impl fmt::Display for TransverseEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            TransverseEventKind::Cup => 'C',
            TransverseEventKind::Cap => 'D',
            TransverseEventKind::CrossingOver => 'O',
            TransverseEventKind::CrossingUnder => 'U',
        };
        write!(f, "{c}{}", self.position)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TransverseFront {
    events: Vec<TransverseEvent>,
    reversed: BTreeSet<usize>,
}

impl TransverseFront {
    pub fn new(events: Vec<TransverseEvent>) -> Self {
        Self { events, reversed: BTreeSet::new() }
    }

    pub fn from_tokens(s: &str) -> Result<Self, super::ParseError> {
        match super::parse_front_file(&format!("tfront v1\n{s}"))? {
            super::FrontFile::Transverse(t) => Ok(t),
            super::FrontFile::Legendrian(_) => unreachable!(),
        }
    }

    /// Round circle: one cup, one cap. Never positively transverse.
    pub fn round_circle() -> Self {
        Self::new(vec![TransverseEvent::cup(1), TransverseEvent::cap(1)])
    }

    /// Circle with one negative kink, sl = -1.
    pub fn kinked_circle() -> Self {
        Self::new(vec![TransverseEvent::cup(1), TransverseEvent::over(1), TransverseEvent::cap(1)])
    }

    pub fn events(&self) -> &[TransverseEvent] {
        &self.events
    }

    pub fn orientation(&self, component: usize) -> super::Orientation {
        if self.reversed.contains(&component) {
            super::Orientation::Negative
        } else {
            super::Orientation::Positive
        }
    }

    pub fn set_orientation(&mut self, component: usize, o: super::Orientation) {
        match o {
            super::Orientation::Positive => self.reversed.remove(&component),
            super::Orientation::Negative => self.reversed.insert(component),
        };
    }

    pub fn with_orientation(mut self, component: usize, o: super::Orientation) -> Self {
        self.set_orientation(component, o);
        self
    }

    pub fn reversed_components(&self) -> impl Iterator<Item = usize> + '_ {
        self.reversed.iter().copied()
    }

    pub(crate) fn structural_trace(&self) -> Result<Trace, Vec<Issue>> {
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

    fn transversality_issues(&self, t: &Trace) -> Vec<Issue> {
        let mut issues = Vec::new();
        for (e, ev) in self.events.iter().enumerate() {
            let ea = t.events[e];
            match ev.kind {
                TransverseEventKind::Cup | TransverseEventKind::Cap => {
                    if !t.extremum_is_upward(e, ev.action()) {
                        issues.push(Issue::DownwardTangency { event: e, component: t.event_component(e) });
                    }
                }
                TransverseEventKind::CrossingUnder => {
                    let descending_right = t.arcs[ea.upper].rightward;
                    let ascending_left = !t.arcs[ea.lower].rightward;
                    if descending_right && ascending_left {
                        issues.push(Issue::ForbiddenCrossing { event: e });
                    }
                }
                TransverseEventKind::CrossingOver => {}
            }
        }
        issues
    }

    pub fn validate_transverse(&self) -> ValidationReport {
        match self.structural_trace() {
            Err(issues) => ValidationReport { issues, ..Default::default() },
            Ok(t) => {
                let crossings = self.events.iter().filter(|e| e.action() == Action::Swap).count();
                let mut report = ValidationReport::from_trace(&t, crossings);
                report.issues = self.transversality_issues(&t);
                report
            }
        }
    }

    fn valid_trace(&self) -> Result<Trace, FrontError> {
        let t = self.structural_trace().map_err(FrontError::InvalidTransverseFront)?;
        let issues = self.transversality_issues(&t);
        if issues.is_empty() {
            Ok(t)
        } else {
            Err(FrontError::InvalidTransverseFront(issues))
        }
    }

    fn crossing_sign(&self, t: &Trace, e: usize) -> i64 {
        let s = if t.parallel(e) { 1 } else { -1 };
        match self.events[e].kind {
            TransverseEventKind::CrossingOver => s,
            _ => -s,
        }
    }

    fn writhe_of(&self, t: &Trace, component: usize) -> i64 {
        self.events
            .iter()
            .enumerate()
            .filter(|(_, ev)| ev.action() == Action::Swap)
            .filter(|&(e, _)| {
                let ea = t.events[e];
                t.arcs[ea.upper].component == component && t.arcs[ea.lower].component == component
            })
            .map(|(e, _)| self.crossing_sign(t, e))
            .sum()
    }

    /// Writhe of one component's projection; only needs a closed word.
    pub fn writhe(&self, component: usize) -> Result<i64, FrontError> {
        let t = self.structural_trace().map_err(FrontError::InvalidTransverseFront)?;
        if component >= t.components {
            return Err(FrontError::InvalidComponent { component, components: t.components });
        }
        Ok(self.writhe_of(&t, component))
    }

    /// Self-linking number: the writhe of the component's front.
    pub fn self_linking(&self, component: usize) -> Result<i64, FrontError> {
        let t = self.valid_trace()?;
        if component >= t.components {
            return Err(FrontError::InvalidComponent { component, components: t.components });
        }
        Ok(self.writhe_of(&t, component))
    }

    pub fn num_components(&self) -> Result<usize, FrontError> {
        Ok(self.structural_trace().map_err(FrontError::InvalidTransverseFront)?.components)
    }

    /// A Legendrian link whose positive transverse push-off has the same
    /// self-linking numbers. Vertical tangencies become cusps; each crossing
    /// that a Legendrian front cannot show gets an up-zigzag on a strand that
    /// points up, the upper one when both do.
    pub fn to_legendrian(&self) -> Result<FrontDiagram, FrontError> {
        let t = self.valid_trace()?;
        let mut events = Vec::with_capacity(self.events.len());
        for (e, ev) in self.events.iter().enumerate() {
            let i = ev.position;
            match ev.kind {
                TransverseEventKind::Cup => events.push(FrontEvent::left(i)),
                TransverseEventKind::Cap => events.push(FrontEvent::right(i)),
                TransverseEventKind::CrossingOver => events.push(FrontEvent::crossing(i)),
                TransverseEventKind::CrossingUnder => {
                    let ea = t.events[e];
                    // the descending strand points up iff it moves left
                    let descending_up = !t.arcs[ea.upper].rightward;
                    if descending_up {
                        // the descending strand dips under the other via a zigzag below it
                        events.extend([FrontEvent::left(i + 2), FrontEvent::crossing(i + 1), FrontEvent::right(i)]);
                    } else {
                        // the ascending strand climbs over via a zigzag above
                        events.extend([FrontEvent::left(i), FrontEvent::crossing(i + 1), FrontEvent::right(i + 2)]);
                    }
                }
            }
        }
        Ok(FrontDiagram::new(events))
    }

    /// Writes the front in the `tfront v1` text format.
    pub fn to_file_string(&self) -> String {
        super::format::write_tfront(self)
    }
}

impl FrontDiagram {
    /// Positive transverse push-off of the whole link: up-cusps are smoothed,
    /// down-cusps become kinks.
    ///
    /// The kink crossing must be negative: `sl = tb - rot = w - D`, so each of
    /// the `D` down-cusps has to contribute `-1` to the writhe. It is also the
    /// only crossing type positivity allows there, since the descending strand
    /// moves right and the ascending one left.
    pub fn positive_transverse_pushoff_link(&self) -> Result<TransverseFront, FrontError> {
        let t = self.trace()?;
        let mut events = Vec::with_capacity(self.events.len());
        for (e, ev) in self.events.iter().enumerate() {
            let i = ev.position;
            match ev.kind {
                super::EventKind::LeftCusp => {
                    events.push(TransverseEvent::cup(i));
                    if !t.extremum_is_upward(e, Action::Create) {
                        events.push(TransverseEvent::over(i));
                    }
                }
                super::EventKind::RightCusp => {
                    if !t.extremum_is_upward(e, Action::Annihilate) {
                        events.push(TransverseEvent::over(i));
                    }
                    events.push(TransverseEvent::cap(i));
                }
                super::EventKind::Crossing => events.push(TransverseEvent::over(i)),
            }
        }
        Ok(TransverseFront::new(events))
    }

    /// Positive transverse push-off of a single component, as a one-component
    /// transverse front.
    pub fn positive_transverse_pushoff(&self, component: usize) -> Result<TransverseFront, FrontError> {
        self.restrict(component)?.positive_transverse_pushoff_link()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::{Orientation, Zigzag};

    #[test]
    fn round_circle_is_rejected() {
        for o in [Orientation::Positive, Orientation::Negative] {
            let r = TransverseFront::round_circle().with_orientation(0, o).validate_transverse();
            let downward = r.issues.iter().filter(|i| matches!(i, Issue::DownwardTangency { .. })).count();
            assert_eq!(downward, 1, "{o:?}");
            assert_eq!(r.issues.len(), 1);
        }
    }

    #[test]
    fn kinked_circle() {
        let k = TransverseFront::kinked_circle();
        assert!(k.validate_transverse().is_valid());
        assert_eq!(k.self_linking(0).unwrap(), -1);
        // the same kink drawn with the other crossing is the forbidden one
        let bad = TransverseFront::from_tokens("C1 U1 D1").unwrap();
        assert_eq!(bad.validate_transverse().issues, vec![Issue::ForbiddenCrossing { event: 1 }]);
        assert!(matches!(bad.self_linking(0), Err(FrontError::InvalidTransverseFront(_))));
    }

    #[test]
    fn unknot_pushoff() {
        let t = FrontDiagram::unknot().positive_transverse_pushoff(0).unwrap();
        assert!(t.validate_transverse().is_valid());
        assert_eq!(t.self_linking(0).unwrap(), -1);
        let rev = FrontDiagram::unknot().with_orientation(0, Orientation::Negative);
        assert_eq!(rev.positive_transverse_pushoff(0).unwrap().self_linking(0).unwrap(), -1);
    }

    #[test]
    fn trefoil_pushoff() {
        let t = FrontDiagram::right_trefoil().positive_transverse_pushoff(0).unwrap();
        assert!(t.validate_transverse().is_valid());
        assert_eq!(t.self_linking(0).unwrap(), 1);
    }

    #[test]
    fn one_down_cusp_costs_one_writhe() {
        // down-stabilized unknot has D = 2; start from a front with a single down-cusp
        let l = FrontDiagram::unknot();
        let inv = l.classical_invariants().unwrap().components[0];
        assert_eq!(inv.down_cusps, 1);
        let t = l.positive_transverse_pushoff(0).unwrap();
        assert_eq!(t.writhe(0).unwrap(), inv.writhe - 1);
    }

    #[test]
    fn up_stabilization_keeps_sl() {
        let l = FrontDiagram::right_trefoil();
        let s = l.stabilize(0, Zigzag::Up).unwrap();
        let sl = |d: &FrontDiagram| d.positive_transverse_pushoff(0).unwrap().self_linking(0).unwrap();
        assert_eq!(sl(&s), sl(&l));
        assert_eq!(sl(&l.stabilize(0, Zigzag::Down).unwrap()), sl(&l) - 2);
    }

    #[test]
    fn kinked_circle_to_legendrian() {
        let l = TransverseFront::kinked_circle().to_legendrian().unwrap();
        let i = l.classical_invariants().unwrap();
        assert_eq!(i.tb(0) - i.rot(0), -1);
    }

    #[test]
    fn under_crossings_get_zigzags() {
        // trefoil push-off with its first crossing flipped where positivity allows
        let t = FrontDiagram::right_trefoil().positive_transverse_pushoff(0).unwrap();
        for (idx, ev) in t.events().iter().enumerate() {
            if ev.kind != TransverseEventKind::CrossingOver {
                continue;
            }
            let mut events = t.events().to_vec();
            events[idx].kind = TransverseEventKind::CrossingUnder;
            let flipped = TransverseFront::new(events);
            if !flipped.validate_transverse().is_valid() {
                continue;
            }
            let sl = flipped.self_linking(0).unwrap();
            let l = flipped.to_legendrian().unwrap();
            assert!(l.is_valid());
            let i = l.classical_invariants().unwrap();
            assert_eq!(i.tb(0) - i.rot(0), sl);
            assert_eq!(i.components[0].down_cusps, 0);
            assert_eq!(l.positive_transverse_pushoff(0).unwrap().self_linking(0).unwrap(), sl);
        }
    }

    #[test]
    fn writhe_ignores_orientation() {
        let t = FrontDiagram::right_trefoil().positive_transverse_pushoff(0).unwrap();
        let r = t.clone().with_orientation(0, Orientation::Negative);
        assert_eq!(t.writhe(0).unwrap(), r.writhe(0).unwrap());
        assert!(!r.validate_transverse().is_valid());
    }
}
