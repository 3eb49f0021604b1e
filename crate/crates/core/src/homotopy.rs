//! Homotopy obstructions of a contact structure given by a (±1)-surgery
//! presentation: the first Chern class, as an element of the cokernel of the
//! linking matrix, and the three-dimensional invariant `d3`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::linalg::{determinant, signature, smith_normal_form, solve_rational, IntMatrix, Rational};
use crate::surgery::SurgeryPresentation;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HomotopyError {
    #[error("linking matrix is singular; d3 is only computed for rational homology spheres")]
    DegenerateMatrix,
}

/// `coker(M)` in Smith-normalized coordinates.
///
/// Only the slots whose invariant factor is not a unit are kept; the class
/// of `v` has coordinate `(U v)_k`, reduced mod `d_k` for finite factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cokernel {
    left: IntMatrix,
    slots: Vec<usize>,
    factors: Vec<BigInt>,
}

impl Cokernel {
    /// Signs of the free coordinates are fixed so that the first meridian
    /// with a nonzero free coordinate has a positive one.
    pub fn of(m: &IntMatrix) -> Self {
        let snf = smith_normal_form(m);
        let diag = snf.invariants();
        let rows = m.rows();
        let mut slots = Vec::new();
        let mut factors = Vec::new();
        for k in 0..rows {
            let d = diag.get(k).cloned().unwrap_or_else(BigInt::zero);
            if !d.is_one() {
                slots.push(k);
                factors.push(d);
            }
        }
        let mut left = snf.left;
        for (&k, d) in slots.iter().zip(&factors) {
            if d.is_zero() {
                if let Some(first) = left.row(k).iter().find(|x| !x.is_zero()) {
                    if first.is_negative() {
                        left.negate_row(k);
                    }
                }
            }
        }
        Self { left, slots, factors }
    }

    pub fn factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().filter(|d| d.is_zero()).count()
    }

    pub fn class_of(&self, v: &[BigInt]) -> Vec<BigInt> {
        let w = self.left.mul_vec(v).expect("vector length matches the matrix");
        self.slots
            .iter()
            .zip(&self.factors)
            .map(|(&k, d)| if d.is_zero() { w[k].clone() } else { w[k].mod_floor(d) })
            .collect()
    }

    /// Class of the `i`-th meridian.
    pub fn meridian(&self, i: usize) -> Vec<BigInt> {
        let mut e = vec![BigInt::zero(); self.left.cols()];
        e[i] = BigInt::one();
        self.class_of(&e)
    }

    /// Order of the class with the given coordinates; `None` if infinite.
    pub fn order(&self, coords: &[BigInt]) -> Option<BigInt> {
        let mut order = BigInt::one();
        for (c, d) in coords.iter().zip(&self.factors) {
            if d.is_zero() {
                if !c.is_zero() {
                    return None;
                }
            } else {
                order = order.lcm(&(d / c.gcd(d)));
            }
        }
        Some(order)
    }

    /// Cokernel of `P M Pᵀ` in the coordinates carried over from this one
    /// along `v ↦ P v`; `p_inverse` is `P⁻¹`.
    pub fn transported(&self, p_inverse: &IntMatrix) -> Self {
        Self {
            left: self.left.checked_mul(p_inverse).expect("square basis change"),
            slots: self.slots.clone(),
            factors: self.factors.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernClass {
    /// Invariant factors of `H_1`; `0` marks a free summand.
    pub factors: Vec<BigInt>,
    pub coordinates: Vec<BigInt>,
    /// Classes of the meridians `μ_i`, in the same coordinates.
    pub meridians: Vec<Vec<BigInt>>,
}

impl ChernClass {
    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(Zero::is_zero)
    }

    pub fn to_json(&self) -> String {
        let ints = |v: &[BigInt]| v.iter().map(|x| x.to_i64().expect("fits in i64")).collect::<Vec<_>>();
        serde_json::json!({
            "factors": ints(&self.factors),
            "coordinates": ints(&self.coordinates),
        })
        .to_string()
    }
}

/// The class of the rotation vector `Σ rot_i μ_i` in `coker(M)`, which is the
/// Poincaré dual of `c_1`.
pub fn chern_class(pres: &SurgeryPresentation) -> ChernClass {
    let cok = Cokernel::of(pres.linking_matrix().as_matrix());
    chern_class_in(&cok, pres)
}

pub fn chern_class_in(cok: &Cokernel, pres: &SurgeryPresentation) -> ChernClass {
    ChernClass {
        factors: cok.factors().to_vec(),
        coordinates: cok.class_of(&pres.rotations()),
        meridians: (0..pres.len()).map(|i| cok.meridian(i)).collect(),
    }
}

/// Meridian expansion of the homology class of the Legendrian push-off of
/// component `i`: `tb_i μ_i + Σ_{k≠i} lk(i,k) μ_k`.
pub fn pushoff_vector(pres: &SurgeryPresentation, i: usize) -> Vec<BigInt> {
    let m = pres.linking_matrix();
    (0..pres.len())
        .map(|k| if k == i { BigInt::from(pres.components()[i].tb) } else { m.get(i, k).clone() })
        .collect()
}

/// Exact value of `d3`. On integer homology spheres it lies in `Z + 1/2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct D3Value(pub Rational);

impl D3Value {
    pub fn from_ratio(n: i64, d: i64) -> Self {
        D3Value(Rational::new(n.into(), d.into()))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

impl fmt::Display for D3Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Intermediate quantities of the `d3` formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct D3Terms {
    /// Solution of `M a = rot`.
    pub solution: Vec<Rational>,
    pub c_squared: Rational,
    pub sigma: i64,
    pub chi: i64,
    pub q: i64,
    pub value: D3Value,
}

/// `d3 = (c² − 3σ − 2χ)/4 + q`, where `c² = aᵀ rot` for `M a = rot`,
/// `σ` is the signature of `M`, `χ = 1 + #components` and `q` counts the
/// contact (+1)-surgeries.
pub fn d3_terms(pres: &SurgeryPresentation) -> Result<D3Terms, HomotopyError> {
    let m = pres.linking_matrix();
    if determinant(m.as_matrix()).expect("square").is_zero() {
        return Err(HomotopyError::DegenerateMatrix);
    }
    let rot = pres.rotations();
    let solution = solve_rational(m.as_matrix(), &rot)
        .expect("square")
        .ok_or(HomotopyError::DegenerateMatrix)?;
    let c_squared = solution
        .iter()
        .zip(&rot)
        .fold(Rational::zero(), |acc, (a, r)| acc + a * Rational::from_integer(r.clone()));
    let sigma = signature(m);
    let chi = 1 + pres.len() as i64;
    let q = pres.plus_count() as i64;
    let value = (&c_squared - Rational::from_integer((3 * sigma + 2 * chi).into())) / Rational::from_integer(4.into())
        + Rational::from_integer(q.into());
    Ok(D3Terms { solution, c_squared, sigma, chi, q, value: D3Value(value) })
}

pub fn d3(pres: &SurgeryPresentation) -> Result<D3Value, HomotopyError> {
    d3_terms(pres).map(|t| t.value)
}

/// Thurston–Bennequin and rotation numbers, in the rational homology sphere
/// obtained by surgery on `host`, of a Legendrian knot in the complement
/// whose values in the 3-sphere are `tb`, `rot` and which links the host
/// components `linking` times:
/// `tb_Y = tb − vᵀ M⁻¹ v`, `rot_Y = rot − ρᵀ M⁻¹ v`.
pub fn knot_invariants_in_surgery(
    host: &SurgeryPresentation,
    tb: i64,
    rot: i64,
    linking: &[BigInt],
) -> Result<(Rational, Rational), HomotopyError> {
    assert_eq!(linking.len(), host.len(), "one linking number per host component");
    let m = host.linking_matrix().as_matrix();
    if determinant(m).expect("square").is_zero() {
        return Err(HomotopyError::DegenerateMatrix);
    }
    let w = solve_rational(m, linking).expect("square").ok_or(HomotopyError::DegenerateMatrix)?;
    let dot = |a: &[BigInt]| a.iter().zip(&w).fold(Rational::zero(), |s, (x, y)| s + Rational::from_integer(x.clone()) * y);
    Ok((
        Rational::from_integer(tb.into()) - dot(linking),
        Rational::from_integer(rot.into()) - dot(&host.rotations()),
    ))
}

/// `d3(ξ_1, ξ_2) = d3(ξ_2) − d3(ξ_1)`: note the argument order.
pub fn relative_d3(first: &D3Value, second: &D3Value) -> Rational {
    &second.0 - &first.0
}

/// `d3(η_1 # η_2) = d3(η_1) + d3(η_2) + 1/2`.
pub fn connected_sum_d3(a: &D3Value, b: &D3Value) -> D3Value {
    D3Value(&a.0 + &b.0 + Rational::new(1.into(), 2.into()))
}

/// `d3` of the standard contact structure on the 3-sphere.
pub fn d3_standard() -> D3Value {
    D3Value::from_ratio(-1, 2)
}
