//! Formal bundles, total classes and Chern characters.
//!
//! A [`FormalBundle`] is a virtual bundle: an integer rank plus a total class
//! with constant term 1 (over ℚ this is the total Chern class, over 𝔽₂ the
//! total Stiefel-Whitney class). A [`ChernCharacter`] is a ℚ-series whose
//! weight-0 part is the integer rank. The two are exchanged through the
//! Newton identities relating elementary symmetric functions of the Chern
//! roots to their power sums.
//!
//! [`symmetric_series`] packages the total symmetric power
//! s(V)(t) = Σ_i ch(Symⁱ V) tⁱ = exp(Σ_{k≥1} (ch V)_k tᵏ / k)
//! as a truncated polynomial in `t` with series coefficients; for a line
//! bundle it reduces to the geometric series 1/(1 − ch(L) t), which fixes the
//! sign conventions.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::ring::{Field, GradedSeries};
use crate::{Error, Result};

/// Chern character: a ℚ-series whose weight-0 component is an integer, the
/// (virtual) rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernCharacter {
    series: GradedSeries,
}

impl ChernCharacter {
    /// Wrap a ℚ-series as a Chern character; the constant term must be an
    /// integer.
    pub fn new(series: GradedSeries) -> Result<ChernCharacter> {
        if series.field() != Field::Q {
            return Err(Error::UnsupportedField);
        }
        if !series.constant_term().is_integer() {
            return Err(Error::BadRank);
        }
        Ok(ChernCharacter { series })
    }

    pub fn series(&self) -> &GradedSeries {
        &self.series
    }

    pub fn order(&self) -> u32 {
        self.series.order()
    }

    pub fn rank(&self) -> BigInt {
        self.series.constant_term().to_integer()
    }

    /// Characters add along direct sums.
    pub fn add(&self, other: &ChernCharacter) -> Result<ChernCharacter> {
        ChernCharacter::new(self.series.add(&other.series)?)
    }

    /// Characters multiply along tensor products.
    pub fn mul(&self, other: &ChernCharacter) -> Result<ChernCharacter> {
        ChernCharacter::new(self.series.mul(&other.series)?)
    }
}

/// A virtual bundle: integer rank (possibly negative) and total class with
/// constant term 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalBundle {
    rank: i64,
    class: GradedSeries,
}

impl FormalBundle {
    pub fn new(rank: i64, class: GradedSeries) -> Result<FormalBundle> {
        if !class.constant_term().is_one() {
            return Err(Error::BadConstantTerm);
        }
        Ok(FormalBundle { rank, class })
    }

    /// Trivial bundle of the given rank (total class 1).
    pub fn trivial(field: Field, order: u32, rank: i64) -> FormalBundle {
        FormalBundle {
            rank,
            class: GradedSeries::one(field, order),
        }
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn class(&self) -> &GradedSeries {
        &self.class
    }

    pub fn field(&self) -> Field {
        self.class.field()
    }

    pub fn order(&self) -> u32 {
        self.class.order()
    }

    /// Whitney sum: ranks add, classes multiply.
    pub fn whitney(&self, other: &FormalBundle) -> Result<FormalBundle> {
        Ok(FormalBundle {
            rank: self.rank + other.rank,
            class: self.class.mul(&other.class)?,
        })
    }

    /// Virtual difference: ranks subtract, classes divide.
    pub fn difference(&self, other: &FormalBundle) -> Result<FormalBundle> {
        Ok(FormalBundle {
            rank: self.rank - other.rank,
            class: self.class.mul(&other.class.invert()?)?,
        })
    }

    /// Dual bundle: over ℚ the weight-j part of the class picks up (−1)^j;
    /// over 𝔽₂ duality is invisible.
    pub fn dual(&self) -> FormalBundle {
        match self.class.field() {
            Field::F2 => self.clone(),
            Field::Q => {
                let mut class = GradedSeries::zero(Field::Q, self.class.order());
                for j in 0..=self.class.order() {
                    let part = self.class.component(j as i64);
                    let signed = if j % 2 == 1 { part.neg() } else { part };
                    class = class.add(&signed).expect("dual: same field/order");
                }
                FormalBundle {
                    rank: self.rank,
                    class,
                }
            }
        }
    }
}

/// Newton identities, class → character direction. ℚ only.
///
/// With e_i the weight-i components of the total class and p_k the power sums
/// of the Chern roots: p_k = Σ_{i=1}^{k−1} (−1)^{i−1} e_i p_{k−i} +
/// (−1)^{k−1} k e_k, and ch = rank + Σ_{k≥1} p_k / k!.
pub fn class_to_char(bundle: &FormalBundle) -> Result<ChernCharacter> {
    if bundle.field() != Field::Q {
        return Err(Error::UnsupportedField);
    }
    let order = bundle.order();
    let class = bundle.class();
    let e: Vec<GradedSeries> = (0..=order).map(|i| class.component(i as i64)).collect();
    let mut p: Vec<GradedSeries> = Vec::with_capacity(order as usize + 1);
    p.push(GradedSeries::zero(Field::Q, order)); // p_0 unused
    for k in 1..=order as usize {
        let mut acc = e[k].mul_scalar(&BigRational::from_integer(BigInt::from(
            if k % 2 == 1 { k as i64 } else { -(k as i64) },
        )));
        for i in 1..k {
            let term = e[i].mul(&p[k - i])?;
            acc = if i % 2 == 1 {
                acc.add(&term)?
            } else {
                acc.sub(&term)?
            };
        }
        p.push(acc);
    }
    let mut ch = GradedSeries::constant(
        Field::Q,
        order,
        BigRational::from_integer(BigInt::from(bundle.rank())),
    );
    let mut factorial = BigInt::one();
    for (k, pk) in p.iter().enumerate().skip(1) {
        factorial *= BigInt::from(k as i64);
        ch = ch.add(&pk.mul_scalar(&BigRational::new(BigInt::one(), factorial.clone())))?;
    }
    ChernCharacter::new(ch)
}

/// Newton identities, character → class direction.
///
/// p_k = k! ch_k, then k e_k = Σ_{i=1}^{k} (−1)^{i−1} e_{k−i} p_i. The rank
/// is read off the weight-0 part and must fit in `i64`.
pub fn char_to_class(ch: &ChernCharacter) -> Result<FormalBundle> {
    let order = ch.order();
    let rank = ch.rank().to_i64().ok_or(Error::BadRank)?;
    let mut p: Vec<GradedSeries> = Vec::with_capacity(order as usize + 1);
    p.push(GradedSeries::zero(Field::Q, order));
    let mut factorial = BigInt::one();
    for k in 1..=order as usize {
        factorial *= BigInt::from(k as i64);
        p.push(
            ch.series()
                .component(k as i64)
                .mul_scalar(&BigRational::from_integer(factorial.clone())),
        );
    }
    let mut e: Vec<GradedSeries> = Vec::with_capacity(order as usize + 1);
    e.push(GradedSeries::one(Field::Q, order));
    for k in 1..=order as usize {
        let mut acc = GradedSeries::zero(Field::Q, order);
        for i in 1..=k {
            let term = e[k - i].mul(&p[i])?;
            acc = if i % 2 == 1 {
                acc.add(&term)?
            } else {
                acc.sub(&term)?
            };
        }
        e.push(acc.mul_scalar(&BigRational::new(BigInt::one(), BigInt::from(k as i64))));
    }
    let mut class = GradedSeries::zero(Field::Q, order);
    for ek in &e {
        class = class.add(ek)?;
    }
    FormalBundle::new(rank, class)
}

/// A polynomial in `t`, truncated at degree `t_order`, with [`GradedSeries`]
/// coefficients. Used for symmetric-series and Poincaré-type identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedPoly {
    field: Field,
    order: u32,
    coeffs: Vec<GradedSeries>, // index = degree in t, length = t_order + 1
}

impl TruncatedPoly {
    pub fn new(field: Field, order: u32, t_order: usize) -> TruncatedPoly {
        TruncatedPoly {
            field,
            order,
            coeffs: alloc::vec![GradedSeries::zero(field, order); t_order + 1],
        }
    }

    pub fn one(field: Field, order: u32, t_order: usize) -> TruncatedPoly {
        let mut p = Self::new(field, order, t_order);
        p.coeffs[0] = GradedSeries::one(field, order);
        p
    }

    pub fn t_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &GradedSeries {
        &self.coeffs[i]
    }

    pub fn set_coeff(&mut self, i: usize, s: GradedSeries) -> Result<()> {
        if s.field() != self.field || s.order() != self.order {
            return Err(Error::ShapeError);
        }
        self.coeffs[i] = s;
        Ok(())
    }

    pub fn add(&self, other: &TruncatedPoly) -> Result<TruncatedPoly> {
        if self.field != other.field || self.order != other.order {
            return Err(Error::ShapeError);
        }
        let t_order = self.t_order().min(other.t_order());
        let mut out = TruncatedPoly::new(self.field, self.order, t_order);
        for i in 0..=t_order {
            out.coeffs[i] = self.coeffs[i].add(&other.coeffs[i])?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &TruncatedPoly) -> Result<TruncatedPoly> {
        if self.field != other.field || self.order != other.order {
            return Err(Error::ShapeError);
        }
        let t_order = self.t_order().min(other.t_order());
        let mut out = TruncatedPoly::new(self.field, self.order, t_order);
        for i in 0..=t_order {
            for j in 0..=(t_order - i) {
                if self.coeffs[i].is_zero() || other.coeffs[j].is_zero() {
                    continue;
                }
                let prod = self.coeffs[i].mul(&other.coeffs[j])?;
                out.coeffs[i + j] = out.coeffs[i + j].add(&prod)?;
            }
        }
        Ok(out)
    }

    /// exp of a polynomial with zero constant coefficient (in `t`).
    pub fn exp(&self) -> Result<TruncatedPoly> {
        if self.field != Field::Q {
            return Err(Error::UnsupportedField);
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm);
        }
        let t_order = self.t_order();
        let mut out = TruncatedPoly::one(self.field, self.order, t_order);
        let mut term = TruncatedPoly::one(self.field, self.order, t_order);
        for i in 1..=t_order {
            term = term.mul(self)?;
            let inv_i = BigRational::new(BigInt::one(), BigInt::from(i as i64));
            for c in term.coeffs.iter_mut() {
                *c = c.mul_scalar(&inv_i);
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Substitute t → t^k, re-truncating at `t_order`.
    pub fn stretch(&self, k: usize, t_order: usize) -> Result<TruncatedPoly> {
        if k == 0 {
            return Err(Error::Domain("stretch factor must be at least 1"));
        }
        let mut out = TruncatedPoly::new(self.field, self.order, t_order);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k > t_order {
                break;
            }
            out.coeffs[i * k] = c.clone();
        }
        Ok(out)
    }
}

/// Total symmetric series s(V)(t) = Σ_i ch(Symⁱ V) tⁱ, computed from the
/// character as exp(Σ_{k=1}^{t_order} (ch V)_k tᵏ / k) where (·)_k is the
/// rescaling by k.
pub fn symmetric_series(ch: &ChernCharacter, t_order: usize) -> Result<TruncatedPoly> {
    let order = ch.order();
    let mut arg = TruncatedPoly::new(Field::Q, order, t_order);
    for k in 1..=t_order {
        let scaled = ch
            .series()
            .rescale(&BigRational::from_integer(BigInt::from(k as i64)))?
            .mul_scalar(&BigRational::new(BigInt::one(), BigInt::from(k as i64)));
        arg.set_coeff(k, scaled)?;
    }
    arg.exp()
}
