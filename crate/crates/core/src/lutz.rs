//! Surgery description of a simple Lutz twist: contact (+1)-surgery on a
//! Legendrian knot `L_1` and on `L_2`, its push-off with two extra zigzags.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::front::{FrontDiagram, FrontError, TransverseFront, Zigzag};
use crate::linalg::Rational;
use crate::surgery::{ContactCoefficient, SurgeryError, SurgeryPresentation};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LutzError {
    #[error(transparent)]
    Front(#[from] FrontError),
    #[error(transparent)]
    Surgery(#[from] SurgeryError),
    #[error("n = 0 gives the standard tight structure, not an overtwisted one")]
    ZeroNotAllowed,
    #[error("component {0} is already a surgery component of the host")]
    ComponentInHost(usize),
    #[error("unknown sign `{0}`, expected `pos` or `neg`")]
    UnknownSign(String),
}

/// `Positive` adds two up zigzags, `Negative` two down zigzags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum LutzSign {
    #[default]
    Positive,
    Negative,
}

impl LutzSign {
    pub fn zigzag(self) -> Zigzag {
        match self {
            LutzSign::Positive => Zigzag::Up,
            LutzSign::Negative => Zigzag::Down,
        }
    }
}

impl fmt::Display for LutzSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LutzSign::Positive => "pos",
            LutzSign::Negative => "neg",
        })
    }
}

impl FromStr for LutzSign {
    type Err = LutzError;

    fn from_str(s: &str) -> Result<Self, LutzError> {
        match s {
            "pos" | "+" | "positive" => Ok(LutzSign::Positive),
            "neg" | "-" | "negative" => Ok(LutzSign::Negative),
            other => Err(LutzError::UnknownSign(other.to_owned())),
        }
    }
}

/// Lutz pair on one component of `diagram`. Other components of the diagram
/// are not surgered and do not appear in the presentation.
pub fn lutz_pair(diagram: &FrontDiagram, component: usize, sign: LutzSign) -> Result<SurgeryPresentation, LutzError> {
    lutz_pair_with_host(diagram, &[], component, sign)
}

/// Lutz pair on `component`, added to the surgeries `host` on other
/// components of the same diagram. The host comes first, then `L_1`, `L_2`.
pub fn lutz_pair_with_host(
    diagram: &FrontDiagram,
    host: &[(usize, ContactCoefficient)],
    component: usize,
    sign: LutzSign,
) -> Result<SurgeryPresentation, LutzError> {
    if host.iter().any(|&(c, _)| c == component) {
        return Err(LutzError::ComponentInHost(component));
    }
    let components = diagram.num_components()?;
    if let Some(&c) = host.iter().map(|(c, _)| c).chain([&component]).find(|&&c| c >= components) {
        return Err(FrontError::InvalidComponent { component: c, components }.into());
    }
    let mut coefficients = host.to_vec();
    coefficients.push((component, ContactCoefficient::Plus));
    let mut pres = SurgeryPresentation::from_front(diagram, None, &coefficients)?;
    let l1 = pres.len() - 1;
    pres.push_derived(l1, vec![sign.zigzag(); 2], ContactCoefficient::Plus)?;
    Ok(pres)
}

/// `d3(ξ') − d3(ξ)` for a Lutz pair on a knot with invariants `(t, r)`.
pub fn expected_d3_change(t: i64, r: i64, sign: LutzSign) -> i64 {
    match sign {
        LutzSign::Positive => r - t,
        LutzSign::Negative => -(t + r),
    }
}

/// [`expected_d3_change`] for a knot whose invariants are measured in a
/// surgered rational homology sphere and so may be fractional.
pub fn expected_d3_change_rational(t: &Rational, r: &Rational, sign: LutzSign) -> Rational {
    match sign {
        LutzSign::Positive => r - t,
        LutzSign::Negative => -(t + r),
    }
}

/// Legendrian approximation of a transverse knot followed by [`lutz_pair`].
pub fn lutz_on_transverse(
    tfront: &TransverseFront,
    component: usize,
    sign: LutzSign,
) -> Result<SurgeryPresentation, LutzError> {
    let legendrian = tfront.to_legendrian()?;
    lutz_pair(&legendrian, component, sign)
}

/// Overtwisted structure on the 3-sphere with `d3 = n − 1/2`: a split union of
/// `n` Lutz pairs on unknots, or of `|n|` Lutz pairs on right trefoils with
/// `tb = 1` when `n < 0`.
pub fn s3_overtwisted(n: i64) -> Result<SurgeryPresentation, LutzError> {
    if n == 0 {
        return Err(LutzError::ZeroNotAllowed);
    }
    let knot = if n > 0 { FrontDiagram::unknot() } else { FrontDiagram::right_trefoil() };
    let block = lutz_pair(&knot, 0, LutzSign::Positive)?;
    Ok((0..n.unsigned_abs()).fold(SurgeryPresentation::empty(), |acc, _| acc.disjoint_union(&block)))
}

/// Explicit three-component front `L_1, K, L_2`: `K` is the push-off of `L_1`
/// with one zigzag and `L_2` the push-off of `K` with one more. Surgery on
/// components 0 and 2 is the Lutz pair; `K` bounds the overtwisted disc.
pub fn explicit_lutz_front(diagram: &FrontDiagram, component: usize, sign: LutzSign) -> Result<FrontDiagram, LutzError> {
    let z = sign.zigzag();
    let l1 = diagram.restrict(component)?;
    let with_k = l1.legendrian_pushoff(0)?.stabilize(1, z)?;
    Ok(with_k.legendrian_pushoff(1)?.stabilize(2, z)?)
}
