//! Contact (±1)-surgery presentations on Legendrian links in the standard
//! contact 3-sphere, and their framing/linking arithmetic.
//!
//! A presentation keeps, per component, its Thurston–Bennequin and rotation
//! numbers and contact coefficient, plus the linking matrix whose diagonal
//! holds the topological framings `tb + r`. Handle slides act on that data
//! only; a slid component no longer has a front and is marked abstract.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::front::{FrontDiagram, FrontError, Zigzag};
use crate::linalg::{smith_normal_form, IntSymMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SurgeryError {
    #[error(transparent)]
    Front(#[from] FrontError),
    #[error("component {component} is derived from missing component {base}")]
    UnresolvableLinking { component: usize, base: usize },
    #[error("index {index} out of range for {len} components")]
    IndexError { index: usize, len: usize },
    #[error("cannot slide component {0} over itself")]
    SelfSlide(usize),
    #[error("not a cancelling pair: {0}")]
    NotACancellingPair(String),
    #[error("not a Lutz pair: {0}")]
    MalformedPair(String),
    #[error("{0}")]
    InvalidCoefficient(String),
    #[error("malformed presentation: {0}")]
    Malformed(String),
}

/// Contact surgery coefficient; only ±1 is supported.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ContactCoefficient {
    Plus,
    Minus,
}

impl ContactCoefficient {
    pub fn value(self) -> i64 {
        match self {
            ContactCoefficient::Plus => 1,
            ContactCoefficient::Minus => -1,
        }
    }
}

impl fmt::Display for ContactCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ContactCoefficient::Plus => "+1",
            ContactCoefficient::Minus => "-1",
        })
    }
}

impl FromStr for ContactCoefficient {
    type Err = SurgeryError;

    fn from_str(s: &str) -> Result<Self, SurgeryError> {
        match s.trim() {
            "+1" | "1" => Ok(ContactCoefficient::Plus),
            "-1" => Ok(ContactCoefficient::Minus),
            other => Err(SurgeryError::InvalidCoefficient(format!(
                "contact coefficient `{other}` is not ±1; other rational coefficients must first be \
                 turned into a sequence of contact (±1)-surgeries, which this tool does not do"
            ))),
        }
    }
}

/// Topological framing, relative to the Seifert framing, of contact
/// `r`-surgery on a knot with Thurston–Bennequin invariant `tb`.
pub fn topological_framing(tb: i64, r: ContactCoefficient) -> i64 {
    tb + r.value()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ComponentSource {
    /// A component of a front diagram, optionally labelled by its file.
    Explicit { front: Option<String>, component: usize },
    /// Legendrian push-off of an earlier component, with zigzags added.
    Derived { base: usize, zigzags: Vec<Zigzag> },
    /// Result of a handle slide; only homological data remain.
    Abstract,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurgeryComponent {
    pub source: ComponentSource,
    pub coefficient: ContactCoefficient,
    pub tb: i64,
    pub rot: i64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurgeryPresentation {
    components: Vec<SurgeryComponent>,
    linking: IntSymMatrix,
}

impl Default for SurgeryPresentation {
    fn default() -> Self {
        Self::empty()
    }
}

impl SurgeryPresentation {
    pub fn empty() -> Self {
        Self { components: Vec::new(), linking: IntSymMatrix::empty() }
    }

    /// Surgery on the listed components of `diagram`; the remaining
    /// components are not surgered and are left out.
    pub fn from_front(
        diagram: &FrontDiagram,
        label: Option<&str>,
        coefficients: &[(usize, ContactCoefficient)],
    ) -> Result<Self, SurgeryError> {
        let inv = diagram.classical_invariants()?;
        let mut pres = Self::empty();
        for &(c, coefficient) in coefficients {
            if c >= inv.components.len() {
                return Err(FrontError::InvalidComponent { component: c, components: inv.components.len() }.into());
            }
            let links: Vec<i64> = coefficients.iter().map(|&(k, _)| inv.linking[c][k]).collect();
            pres.push_component(
                SurgeryComponent {
                    source: ComponentSource::Explicit { front: label.map(str::to_owned), component: c },
                    coefficient,
                    tb: inv.tb(c),
                    rot: inv.rot(c),
                },
                &links[..pres.len()],
            );
        }
        Ok(pres)
    }

    /// Presentation given only by its linking matrix, coefficients and
    /// rotation numbers; every component is abstract.
    pub fn from_linking(
        linking: IntSymMatrix,
        coefficients: &[ContactCoefficient],
        rotations: &[i64],
    ) -> Result<Self, SurgeryError> {
        let n = linking.dim();
        if coefficients.len() != n || rotations.len() != n {
            return Err(SurgeryError::Malformed(format!("expected {n} coefficients and rotation numbers")));
        }
        let components = (0..n)
            .map(|i| {
                let framing = linking.get(i, i).to_i64().ok_or_else(|| SurgeryError::Malformed("framing out of range".into()))?;
                Ok(SurgeryComponent {
                    source: ComponentSource::Abstract,
                    coefficient: coefficients[i],
                    tb: framing - coefficients[i].value(),
                    rot: rotations[i],
                })
            })
            .collect::<Result<_, SurgeryError>>()?;
        Ok(Self { components, linking })
    }

    /// Records `label` as the front file of every explicit component.
    pub fn with_front_label(mut self, label: &str) -> Self {
        for c in &mut self.components {
            if let ComponentSource::Explicit { front, .. } = &mut c.source {
                *front = Some(label.to_owned());
            }
        }
        self
    }

    fn push_component(&mut self, comp: SurgeryComponent, links: &[i64]) {
        debug_assert_eq!(links.len(), self.len());
        let n = self.len();
        self.linking.extend_one();
        for (k, &l) in links.iter().enumerate() {
            self.linking.set(n, k, l.into());
        }
        self.linking.set(n, n, topological_framing(comp.tb, comp.coefficient).into());
        self.components.push(comp);
    }

    /// Appends the Legendrian push-off of `base` with the given zigzags. It
    /// links `base` `tb(base)` times and every other component as `base` does.
    pub fn push_derived(
        &mut self,
        base: usize,
        zigzags: Vec<Zigzag>,
        coefficient: ContactCoefficient,
    ) -> Result<usize, SurgeryError> {
        let n = self.len();
        if base >= n {
            return Err(SurgeryError::UnresolvableLinking { component: n, base });
        }
        let b = &self.components[base];
        let ups = zigzags.iter().filter(|&&z| z == Zigzag::Up).count() as i64;
        let downs = zigzags.len() as i64 - ups;
        let comp = SurgeryComponent {
            tb: b.tb - zigzags.len() as i64,
            rot: b.rot + downs - ups,
            coefficient,
            source: ComponentSource::Derived { base, zigzags },
        };
        let links: Vec<i64> = (0..n)
            .map(|k| if k == base { self.components[base].tb } else { self.lk_i64(base, k) })
            .collect();
        self.push_component(comp, &links);
        Ok(n)
    }

    fn lk_i64(&self, i: usize, j: usize) -> i64 {
        self.linking.get(i, j).to_i64().expect("linking number fits in i64")
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[SurgeryComponent] {
        &self.components
    }

    pub fn component(&self, i: usize) -> Result<&SurgeryComponent, SurgeryError> {
        self.components.get(i).ok_or(SurgeryError::IndexError { index: i, len: self.len() })
    }

    /// Framings on the diagonal, linking numbers off it.
    pub fn linking_matrix(&self) -> &IntSymMatrix {
        &self.linking
    }

    pub fn framings(&self) -> Vec<BigInt> {
        self.linking.diagonal()
    }

    pub fn rotations(&self) -> Vec<BigInt> {
        self.components.iter().map(|c| BigInt::from(c.rot)).collect()
    }

    /// Number of contact (+1)-surgeries.
    pub fn plus_count(&self) -> usize {
        self.components.iter().filter(|c| c.coefficient == ContactCoefficient::Plus).count()
    }

    fn check_index(&self, i: usize) -> Result<(), SurgeryError> {
        if i < self.len() {
            Ok(())
        } else {
            Err(SurgeryError::IndexError { index: i, len: self.len() })
        }
    }

    /// Replaces component `i` by the band sum `L_i + sign·L_j`.
    pub fn handle_slide(&self, i: usize, j: usize, sign: i64) -> Result<Self, SurgeryError> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            return Err(SurgeryError::SelfSlide(i));
        }
        assert!(sign == 1 || sign == -1, "slide sign must be ±1");
        let s = BigInt::from(sign);
        let m = &self.linking;
        let mut out = m.clone();
        let nij = m.get(i, i) + m.get(j, j) + BigInt::from(2) * &s * m.get(i, j);
        out.set(i, i, nij);
        out.set(i, j, m.get(i, j) + &s * m.get(j, j));
        for k in (0..self.len()).filter(|&k| k != i && k != j) {
            out.set(i, k, m.get(i, k) + &s * m.get(j, k));
        }

        let mut components = self.components.clone();
        let c = &mut components[i];
        c.source = ComponentSource::Abstract;
        c.rot += sign * self.components[j].rot;
        c.tb = out.get(i, i).to_i64().expect("framing fits in i64") - c.coefficient.value();
        Ok(Self { components, linking: out })
    }

    /// Reverses the orientation of component `i`: its linking numbers and
    /// rotation number change sign.
    pub fn reverse_component(&self, i: usize) -> Result<Self, SurgeryError> {
        self.check_index(i)?;
        let mut out = self.clone();
        for k in (0..self.len()).filter(|&k| k != i) {
            out.linking.set(i, k, -self.linking.get(i, k));
        }
        out.components[i].rot = -self.components[i].rot;
        Ok(out)
    }

    /// Removes a knot together with a 0-framed meridian of it, after sliding
    /// every other component off the knot over the meridian.
    pub fn cancel_meridian_pair(&self, knot: usize, meridian: usize) -> Result<Self, SurgeryError> {
        self.check_index(knot)?;
        self.check_index(meridian)?;
        let fail = |msg: String| Err(SurgeryError::NotACancellingPair(msg));
        if knot == meridian {
            return fail("knot and meridian coincide".into());
        }
        let m = &self.linking;
        if !m.get(meridian, meridian).is_zero() {
            return fail(format!("meridian framing is {}, not 0", m.get(meridian, meridian)));
        }
        let mk = m.get(knot, meridian).clone();
        if mk.abs() != BigInt::one() {
            return fail(format!("meridian links the knot {mk} times, not ±1"));
        }
        if let Some(k) = (0..self.len()).find(|&k| k != knot && k != meridian && !m.get(meridian, k).is_zero()) {
            return fail(format!("meridian links component {k}"));
        }

        let mut pres = self.clone();
        for k in (0..self.len()).filter(|&k| k != knot && k != meridian) {
            loop {
                let l = pres.linking.get(k, knot).clone();
                if l.is_zero() {
                    break;
                }
                // choose the sign that moves lk(k, knot) toward 0
                let sign = if (l.is_positive()) == (mk.is_positive()) { -1 } else { 1 };
                pres = pres.handle_slide(k, meridian, sign)?;
            }
        }
        let drop = [knot, meridian];
        let components = pres
            .components
            .into_iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, c)| c)
            .collect();
        let mut out = Self { components, linking: pres.linking.remove_indices(&drop) };
        // derived components may have lost their base
        out.reindex_after_removal(&drop);
        Ok(out)
    }

    fn reindex_after_removal(&mut self, dropped: &[usize]) {
        for c in &mut self.components {
            if let ComponentSource::Derived { base, .. } = &c.source {
                if dropped.contains(base) {
                    c.source = ComponentSource::Abstract;
                } else {
                    let shift = dropped.iter().filter(|&&d| d < *base).count();
                    c.source = match std::mem::replace(&mut c.source, ComponentSource::Abstract) {
                        ComponentSource::Derived { base, zigzags } => ComponentSource::Derived { base: base - shift, zigzags },
                        s => s,
                    };
                }
            }
        }
    }

    /// Invariant factors of `H_1` of the surgered manifold: the Smith normal
    /// form diagonal of the linking matrix with units dropped. Each `0` is a
    /// free summand; an empty list means `H_1 = 0`.
    pub fn first_homology(&self) -> Vec<BigInt> {
        smith_normal_form(self.linking.as_matrix()).nonunit_invariants()
    }

    /// Split union; the linking matrix is block diagonal.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let n = self.len();
        let mut components = self.components.clone();
        components.extend(other.components.iter().cloned().map(|mut c| {
            if let ComponentSource::Derived { base, .. } = &mut c.source {
                *base += n;
            }
            c
        }));
        Self { components, linking: self.linking.direct_sum(&other.linking) }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&PresentationDoc::from(self)).expect("presentation serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, SurgeryError> {
        let doc: PresentationDoc = serde_json::from_str(s).map_err(|e| SurgeryError::Malformed(e.to_string()))?;
        doc.try_into()
    }
}

/// Outcome of the overtwisted-disc framing bookkeeping for a Lutz pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OvertwistedCheck {
    pub tb: i64,
    pub lk_k_l1: BigInt,
    pub lk_k_l2: BigInt,
    /// Framing of `K` induced by the disc it bounds after surgery.
    pub disc_framing: BigInt,
    /// Contact framing of `K` (its Thurston–Bennequin invariant).
    pub contact_framing: i64,
    pub holds: bool,
}

/// Checks that the knot `K`, the push-off of `L_1` with one zigzag and one
/// extra negative linking with `L_2`, bounds a disc whose framing equals its
/// contact framing in the manifold surgered along the Lutz pair ending at
/// component `l2`.
///
/// `K` is produced the way it arises in the surgered manifold: a meridian
/// `K'` of both `L_1` and `L_2` is slid over `L_1` with sign -1 and reversed,
/// giving `L_1 - K'`.
pub fn overtwisted_framing_check(pres: &SurgeryPresentation, l2: usize) -> Result<OvertwistedCheck, SurgeryError> {
    let comp = pres.component(l2).map_err(|e| SurgeryError::MalformedPair(e.to_string()))?;
    let ComponentSource::Derived { base: l1, zigzags } = &comp.source else {
        return Err(SurgeryError::MalformedPair(format!("component {l2} is not a derived push-off")));
    };
    let l1 = *l1;
    if zigzags.len() != 2 {
        return Err(SurgeryError::MalformedPair(format!("component {l2} carries {} zigzags, not 2", zigzags.len())));
    }
    if pres.components[l1].coefficient != ContactCoefficient::Plus || comp.coefficient != ContactCoefficient::Plus {
        return Err(SurgeryError::MalformedPair("both surgeries must be contact (+1)".into()));
    }
    let t = pres.components[l1].tb;

    // K': 0-framed meridian of L_1 and L_2, unlinked from everything else
    let mut aug = pres.clone();
    let kp = aug.len();
    let links: Vec<i64> = (0..kp).map(|k| i64::from(k == l1 || k == l2)).collect();
    aug.push_component(
        SurgeryComponent {
            source: ComponentSource::Abstract,
            coefficient: ContactCoefficient::Minus,
            tb: 1,
            rot: 0,
        },
        &links,
    );
    debug_assert!(aug.linking.get(kp, kp).is_zero());
    let k = aug.handle_slide(kp, l1, -1)?.reverse_component(kp)?;

    let m = k.linking_matrix();
    let lk_k_l1 = m.get(kp, l1).clone();
    let lk_k_l2 = m.get(kp, l2).clone();
    let disc_framing = m.get(kp, kp).clone();
    let contact_framing = t - 1;
    let cf = BigInt::from(contact_framing);
    let holds = lk_k_l1 == BigInt::from(t)
        && lk_k_l2 == cf
        && disc_framing == cf
        // the Seifert surface of (-L_2) ⊔ K frames L_2 by tb(K) = t - 1
        && *pres.linking_matrix().get(l2, l2) == cf;
    Ok(OvertwistedCheck { tb: t, lk_k_l1, lk_k_l2, disc_framing, contact_framing, holds })
}

#[derive(Serialize, Deserialize)]
struct PresentationDoc {
    components: Vec<ComponentDoc>,
    framings: Vec<i64>,
    linking: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct ComponentDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    source: Option<SourceDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    derived: Option<DerivedDoc>,
    #[serde(default, rename = "abstract", skip_serializing_if = "std::ops::Not::not")]
    is_abstract: bool,
    coefficient: String,
    tb: i64,
    rot: i64,
}

#[derive(Serialize, Deserialize)]
struct SourceDoc {
    front: Option<String>,
    component: usize,
}

#[derive(Serialize, Deserialize)]
struct DerivedDoc {
    base: usize,
    zigzags: Vec<Zigzag>,
}

impl From<&SurgeryPresentation> for PresentationDoc {
    fn from(p: &SurgeryPresentation) -> Self {
        let to_i64 = |x: &BigInt| x.to_i64().expect("entry fits in i64");
        let components = p
            .components
            .iter()
            .map(|c| {
                let mut doc = ComponentDoc {
                    source: None,
                    derived: None,
                    is_abstract: false,
                    coefficient: c.coefficient.to_string(),
                    tb: c.tb,
                    rot: c.rot,
                };
                match &c.source {
                    ComponentSource::Explicit { front, component } => {
                        doc.source = Some(SourceDoc { front: front.clone(), component: *component })
                    }
                    ComponentSource::Derived { base, zigzags } => {
                        doc.derived = Some(DerivedDoc { base: *base, zigzags: zigzags.clone() })
                    }
                    ComponentSource::Abstract => doc.is_abstract = true,
                }
                doc
            })
            .collect();
        let n = p.len();
        PresentationDoc {
            components,
            framings: p.framings().iter().map(to_i64).collect(),
            linking: (0..n).map(|i| (0..n).map(|j| to_i64(p.linking.get(i, j))).collect()).collect(),
        }
    }
}

impl TryFrom<PresentationDoc> for SurgeryPresentation {
    type Error = SurgeryError;

    fn try_from(doc: PresentationDoc) -> Result<Self, SurgeryError> {
        let bad = |m: String| Err(SurgeryError::Malformed(m));
        let n = doc.components.len();
        if doc.framings.len() != n || doc.linking.len() != n || doc.linking.iter().any(|r| r.len() != n) {
            return bad(format!("expected {n} framings and a {n}x{n} linking matrix"));
        }
        let linking = IntSymMatrix::from_rows(&doc.linking)
            .map_err(|_| SurgeryError::Malformed("linking matrix is not symmetric".into()))?;
        let mut components = Vec::with_capacity(n);
        for (i, c) in doc.components.into_iter().enumerate() {
            if doc.framings[i] != doc.linking[i][i] {
                return bad(format!("framing of component {i} disagrees with the linking matrix diagonal"));
            }
            let coefficient: ContactCoefficient = c.coefficient.parse()?;
            let source = match (c.source, c.derived, c.is_abstract) {
                (Some(s), None, false) => ComponentSource::Explicit { front: s.front, component: s.component },
                (None, Some(d), false) => {
                    if d.base >= i {
                        return Err(SurgeryError::UnresolvableLinking { component: i, base: d.base });
                    }
                    ComponentSource::Derived { base: d.base, zigzags: d.zigzags }
                }
                (None, None, true) => ComponentSource::Abstract,
                _ => return bad(format!("component {i} needs exactly one of `source`, `derived`, `abstract`")),
            };
            components.push(SurgeryComponent { source, coefficient, tb: c.tb, rot: c.rot });
        }
        Ok(SurgeryPresentation { components, linking })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::FrontDiagram;
    use ContactCoefficient::{Minus, Plus};

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn mat(p: &SurgeryPresentation) -> Vec<Vec<BigInt>> {
        p.linking_matrix().as_matrix().to_rows()
    }

    fn rows(r: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        r.iter().map(|row| row.iter().map(|&x| int(x)).collect()).collect()
    }

    /// Presentation with L_1 of the given (tb, rot) and its two-up-zigzag partner.
    fn pair(tb: i64, rot: i64) -> SurgeryPresentation {
        let mut p = SurgeryPresentation::empty();
        p.push_component(
            SurgeryComponent { source: ComponentSource::Abstract, coefficient: Plus, tb, rot },
            &[],
        );
        p.push_derived(0, vec![Zigzag::Up, Zigzag::Up], Plus).unwrap();
        p
    }

    #[test]
    fn framings() {
        assert_eq!(topological_framing(-1, Plus), 0);
        assert_eq!(topological_framing(-3, Plus), -2);
        assert_eq!(topological_framing(-1, Minus), -2);
    }

    #[test]
    fn coefficient_parsing() {
        assert_eq!("+1".parse::<ContactCoefficient>().unwrap(), Plus);
        assert_eq!("-1".parse::<ContactCoefficient>().unwrap(), Minus);
        let e = "1/2".parse::<ContactCoefficient>().unwrap_err();
        assert!(e.to_string().contains("(±1)-surgeries"));
        assert!("+2".parse::<ContactCoefficient>().is_err());
    }

    #[test]
    fn lutz_pair_matrix() {
        for t in -5..=5 {
            let p = pair(t, 0);
            assert_eq!(mat(&p), rows(&[vec![t + 1, t], vec![t, t - 1]]));
            assert_eq!(p.components[1].tb, t - 2);
            assert_eq!(p.components[1].rot, -2);
        }
    }

    #[test]
    fn unknot_single_surgery() {
        let p = SurgeryPresentation::from_front(&FrontDiagram::unknot(), None, &[(0, Plus)]).unwrap();
        assert_eq!(mat(&p), rows(&[vec![0]]));
        assert_eq!(p.first_homology(), vec![int(0)]);
        assert_eq!(SurgeryPresentation::empty().linking_matrix().dim(), 0);
    }

    #[test]
    fn derived_needs_base() {
        let mut p = SurgeryPresentation::empty();
        assert_eq!(
            p.push_derived(0, vec![], Plus),
            Err(SurgeryError::UnresolvableLinking { component: 0, base: 0 })
        );
    }

    #[test]
    fn slide_to_meridian() {
        let t = 3;
        let s = pair(t, 0).handle_slide(1, 0, -1).unwrap();
        assert_eq!(*s.linking_matrix().get(1, 1), int(0));
        assert_eq!(*s.linking_matrix().get(0, 1), int(-1));
        assert_eq!(s.components[1].source, ComponentSource::Abstract);
        let c = s.cancel_meridian_pair(0, 1).unwrap();
        assert!(c.is_empty());
    }

    #[test]
    fn meridian_slide_gives_k() {
        for t in [-2, -1, 0, 1, 4] {
            let mut p = pair(t, 0);
            p.push_component(
                SurgeryComponent { source: ComponentSource::Abstract, coefficient: Minus, tb: 1, rot: 0 },
                &[1, 1],
            );
            let k = p.handle_slide(2, 0, -1).unwrap().reverse_component(2).unwrap();
            let m = k.linking_matrix();
            assert_eq!(*m.get(2, 2), int(t - 1));
            assert_eq!(*m.get(2, 0), int(t));
            assert_eq!(*m.get(2, 1), int(t - 1));
        }
    }

    #[test]
    fn slide_and_back() {
        let p = SurgeryPresentation::from_json(
            r#"{"components":[
                {"abstract":true,"coefficient":"+1","tb":2,"rot":0},
                {"abstract":true,"coefficient":"-1","tb":1,"rot":1},
                {"abstract":true,"coefficient":"+1","tb":-4,"rot":0}],
              "framings":[3,0,-3],"linking":[[3,0,2],[0,0,0],[2,0,-3]]}"#,
        )
        .unwrap();
        let back = p.handle_slide(0, 1, 1).unwrap().handle_slide(0, 1, -1).unwrap();
        assert_eq!(back.linking_matrix(), p.linking_matrix());
    }

    #[test]
    fn cancel_with_third_component() {
        let t = -2;
        let mut p = pair(t, 0);
        // third component links L_1 once; as a push-off partner L_2 links it once too
        p.linking.extend_one();
        p.linking.set(2, 0, int(1));
        p.linking.set(2, 1, int(1));
        p.linking.set(2, 2, int(-5));
        p.components.push(SurgeryComponent { source: ComponentSource::Abstract, coefficient: Minus, tb: -4, rot: 1 });
        let s = p.handle_slide(1, 0, -1).unwrap();
        assert_eq!(*s.linking_matrix().get(1, 2), int(0));
        let c = s.cancel_meridian_pair(0, 1).unwrap();
        assert_eq!(mat(&c), rows(&[vec![-5]]));
        assert_eq!(c.first_homology(), p.first_homology());
    }

    #[test]
    fn cancel_rejects_bad_pairs() {
        let p = SurgeryPresentation::from_json(
            r#"{"components":[
                {"abstract":true,"coefficient":"+1","tb":0,"rot":0},
                {"abstract":true,"coefficient":"+1","tb":-1,"rot":0}],
              "framings":[1,0],"linking":[[1,2],[2,0]]}"#,
        )
        .unwrap();
        assert!(matches!(p.cancel_meridian_pair(0, 1), Err(SurgeryError::NotACancellingPair(_))));
        assert!(matches!(pair(0, 0).cancel_meridian_pair(0, 1), Err(SurgeryError::NotACancellingPair(_))));
        assert!(matches!(p.cancel_meridian_pair(0, 5), Err(SurgeryError::IndexError { .. })));
    }

    #[test]
    fn homology_examples() {
        assert!(pair(4, 1).first_homology().is_empty());
        let p = SurgeryPresentation::from_json(
            r#"{"components":[
                {"abstract":true,"coefficient":"+1","tb":-1,"rot":0},
                {"abstract":true,"coefficient":"+1","tb":-1,"rot":0},
                {"abstract":true,"coefficient":"+1","tb":-3,"rot":-2}],
              "framings":[0,0,-2],"linking":[[0,1,1],[1,0,-1],[1,-1,-2]]}"#,
        )
        .unwrap();
        assert_eq!(p.first_homology(), vec![int(0)]);
    }

    #[test]
    fn union() {
        let a = pair(-1, 0);
        assert_eq!(a.disjoint_union(&SurgeryPresentation::empty()), a);
        let u = a.disjoint_union(&pair(1, 0));
        assert_eq!(
            mat(&u),
            rows(&[vec![0, -1, 0, 0], vec![-1, -2, 0, 0], vec![0, 0, 2, 1], vec![0, 0, 1, 0]])
        );
        assert_eq!(u.components[3].source, ComponentSource::Derived { base: 2, zigzags: vec![Zigzag::Up; 2] });
    }

    #[test]
    fn overtwisted_check() {
        let c = overtwisted_framing_check(&pair(-1, 0), 1).unwrap();
        assert!(c.holds);
        assert_eq!((c.lk_k_l1.clone(), c.lk_k_l2.clone()), (int(-1), int(-2)));
        let c = overtwisted_framing_check(&pair(1, 0), 1).unwrap();
        assert!(c.holds);
        assert_eq!((c.lk_k_l1, c.lk_k_l2), (int(1), int(0)));

        let mut wrong = pair(2, 0);
        wrong.linking.set(1, 1, int(5));
        assert!(!overtwisted_framing_check(&wrong, 1).unwrap().holds);
        assert!(matches!(overtwisted_framing_check(&pair(2, 0), 0), Err(SurgeryError::MalformedPair(_))));
    }

    #[test]
    fn json_round_trip() {
        let p = SurgeryPresentation::from_front(&FrontDiagram::right_trefoil(), Some("t.front"), &[(0, Plus)]).unwrap();
        let mut p = p;
        p.push_derived(0, vec![Zigzag::Up, Zigzag::Down], Minus).unwrap();
        let s = p.to_json();
        assert_eq!(SurgeryPresentation::from_json(&s).unwrap(), p);
        assert!(s.find("\"components\"").unwrap() < s.find("\"framings\"").unwrap());
        assert!(s.find("\"framings\"").unwrap() < s.find("\"linking\"").unwrap());
    }

    #[test]
    fn json_rejects() {
        let e = SurgeryPresentation::from_json(
            r#"{"components":[{"abstract":true,"coefficient":"2/3","tb":0,"rot":0}],"framings":[2],"linking":[[2]]}"#,
        )
        .unwrap_err();
        assert!(matches!(e, SurgeryError::InvalidCoefficient(_)));
        let e = SurgeryPresentation::from_json(
            r#"{"components":[{"derived":{"base":3,"zigzags":[]},"coefficient":"+1","tb":0,"rot":0}],"framings":[1],"linking":[[1]]}"#,
        )
        .unwrap_err();
        assert_eq!(e, SurgeryError::UnresolvableLinking { component: 0, base: 3 });
        assert!(SurgeryPresentation::from_json("{").is_err());
    }
}
