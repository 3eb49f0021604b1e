//! Random closed event words, for property tests and benchmarks.

use rand::Rng;

use super::{FrontDiagram, FrontEvent, Orientation};

/// A random valid front (possibly a link) with at most `max_events` events,
/// `max_events >= 2`. Component orientations are random.
pub fn random_front<R: Rng + ?Sized>(rng: &mut R, max_events: usize) -> FrontDiagram {
    assert!(max_events >= 2);
    let mut events = Vec::new();
    let mut k = 0usize;
    loop {
        let remaining = max_events - events.len();
        // closing needs k / 2 right cusps
        if k / 2 >= remaining {
            break;
        }
        if k == 0 && !events.is_empty() && rng.gen_bool(0.25) {
            break;
        }
        let can_create = k / 2 + 2 <= remaining;
        let can_cross = k >= 2 && k / 2 + 1 <= remaining;
        let roll: f64 = rng.gen();
        if k == 0 || (can_create && roll < 0.3) {
            if !can_create {
                break;
            }
            events.push(FrontEvent::left(rng.gen_range(1..=k + 1)));
            k += 2;
        } else if can_cross && roll < 0.75 {
            events.push(FrontEvent::crossing(rng.gen_range(1..k)));
        } else {
            events.push(FrontEvent::right(rng.gen_range(1..k)));
            k -= 2;
        }
    }
    while k > 0 {
        events.push(FrontEvent::right(rng.gen_range(1..k)));
        k -= 2;
    }
    let mut d = FrontDiagram::new(events);
    let n = d.num_components().expect("generator builds closed words");
    for c in 0..n {
        if rng.gen_bool(0.5) {
            d.set_orientation(c, Orientation::Negative);
        }
    }
    d
}

/// A random valid single-component front with at most `max_events` events.
pub fn random_knot<R: Rng + ?Sized>(rng: &mut R, max_events: usize) -> FrontDiagram {
    let d = random_front(rng, max_events);
    let report = d.validate();
    // keep the component owning the most events
    let mut counts = vec![0usize; report.components];
    for &c in &report.event_components {
        counts[c] += 1;
    }
    let best = (0..counts.len()).max_by_key(|&c| (counts[c], std::cmp::Reverse(c))).unwrap();
    d.restrict(best).expect("component exists")
}
