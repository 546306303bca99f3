//! Truncated graded-commutative polynomial series over ℚ or 𝔽₂.
//!
//! A [`GradedSeries`] is a finite sum of monomials in weighted generators,
//! truncated at a fixed total weight. Generators carry a single-letter family
//! tag and an index; the weight of a generator equals its index (these model
//! characteristic classes, where `c_3` sits in weight 3). All generators
//! commute — the classes in question live in even cohomological degree over
//! ℚ, and signs are invisible mod 2 — so "graded-commutative" collapses to
//! plain commutative with a weight grading.
//!
//! Coefficients are stored as `BigRational` regardless of the field tag; over
//! 𝔽₂ normalization keeps them in {1} (zero coefficients are never stored).
//! Equality is structural: same field, same truncation order, same terms.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Coefficient field of a series: exact rationals or the two-element field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Field {
    Q,
    F2,
}

/// Single-letter symbolic family tag for a generator, e.g. `c`, `v`, `t`, `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Family(pub u8);

impl Family {
    /// Chern classes of the input bundle.
    pub const C: Family = Family(b'c');
    /// Stiefel-Whitney classes of the ambient tangent bundle.
    pub const T: Family = Family(b't');
    /// Stiefel-Whitney classes of the distribution / sub-bundle.
    pub const V: Family = Family(b'v');
    /// Generic Stiefel-Whitney classes.
    pub const W: Family = Family(b'w');

    pub fn as_char(self) -> char {
        self.0 as char
    }
}

/// A weighted polynomial generator; its weight equals its index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub family: Family,
    pub index: u32,
}

impl Generator {
    /// New generator; `index` must be at least 1 (weight-0 generators would
    /// alias the constant term).
    pub fn new(family: Family, index: u32) -> Generator {
        debug_assert!(index >= 1, "generator index must be >= 1");
        Generator { family, index }
    }

    pub fn weight(self) -> u32 {
        self.index
    }
}

/// A commutative monomial: a sorted exponent vector with positive exponents.
/// The empty vector is the monomial 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Generator, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn generator(g: Generator) -> Monomial {
        Monomial(alloc::vec![(g, 1)])
    }

    /// Build from arbitrary (generator, exponent) pairs: sorts, merges
    /// duplicates, drops zero exponents.
    pub fn from_powers(powers: &[(Generator, u32)]) -> Monomial {
        let mut v: Vec<(Generator, u32)> = Vec::new();
        for &(g, e) in powers {
            if e == 0 {
                continue;
            }
            match v.iter_mut().find(|(h, _)| *h == g) {
                Some((_, acc)) => *acc += e,
                None => v.push((g, e)),
            }
        }
        v.sort_unstable_by_key(|&(g, _)| g);
        Monomial(v)
    }

    pub fn powers(&self) -> &[(Generator, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Total weight: sum of generator weights times exponents.
    pub fn weight(&self) -> u64 {
        self.0
            .iter()
            .map(|&(g, e)| g.weight() as u64 * e as u64)
            .sum()
    }

    /// Total degree: sum of exponents.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&(_, e)| e as u64).sum()
    }

    /// Product of two monomials (merge of sorted exponent vectors).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                core::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
}

/// Substitution image for one generator: a scalar or a homogeneous series of
/// the generator's weight.
#[derive(Clone, Debug)]
pub enum Subst {
    Scalar(BigRational),
    Series(GradedSeries),
}

/// A polynomial series truncated at a fixed total weight.
///
/// Invariants maintained by every constructor and operation:
/// * no stored coefficient is zero;
/// * every stored monomial has weight ≤ `order`;
/// * over `F2` every stored coefficient is exactly 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSeries {
    field: Field,
    order: u32,
    terms: BTreeMap<Monomial, BigRational>,
}

fn normalize_coeff(field: Field, c: BigRational) -> Option<BigRational> {
    match field {
        Field::Q => {
            if c.is_zero() {
                None
            } else {
                Some(c)
            }
        }
        Field::F2 => {
            // F2 coefficients only ever arise from integer arithmetic
            debug_assert!(c.is_integer(), "non-integral coefficient over F2");
            let two = BigInt::from(2);
            let r = ((c.to_integer() % &two) + &two) % &two;
            if r.is_zero() {
                None
            } else {
                Some(BigRational::one())
            }
        }
    }
}

impl GradedSeries {
    pub fn zero(field: Field, order: u32) -> GradedSeries {
        GradedSeries {
            field,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field, order: u32) -> GradedSeries {
        Self::constant(field, order, BigRational::one())
    }

    pub fn constant(field: Field, order: u32, c: BigRational) -> GradedSeries {
        let mut terms = BTreeMap::new();
        if let Some(c) = normalize_coeff(field, c) {
            terms.insert(Monomial::one(), c);
        }
        GradedSeries {
            field,
            order,
            terms,
        }
    }

    /// The series consisting of the single generator `g` (zero if its weight
    /// exceeds the truncation order).
    pub fn generator(field: Field, order: u32, g: Generator) -> GradedSeries {
        Self::from_terms(
            field,
            order,
            [(Monomial::generator(g), BigRational::one())],
        )
    }

    /// Normalizing constructor: accumulates equal monomials, drops zeros and
    /// everything above the truncation order, reduces mod 2 over `F2`.
    pub fn from_terms<I>(field: Field, order: u32, terms: I) -> GradedSeries
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m, c) in terms {
            if m.weight() > order as u64 || c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(v) => *v += c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let terms = acc
            .into_iter()
            .filter_map(|(m, c)| normalize_coeff(field, c).map(|c| (m, c)))
            .collect();
        GradedSeries {
            field,
            order,
            terms,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter_terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&Monomial::one())
    }

    /// Largest weight among stored terms (0 for the zero series).
    pub fn max_weight(&self) -> u64 {
        self.terms.keys().map(|m| m.weight()).max().unwrap_or(0)
    }

    /// True when every term is homogeneous of weight `w` (vacuously true for
    /// the zero series).
    pub fn is_homogeneous_of(&self, w: u64) -> bool {
        self.terms.keys().all(|m| m.weight() == w)
    }

    /// True when all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    fn check_field(&self, other: &GradedSeries) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// Sum; the result is truncated at the smaller of the two orders.
    pub fn add(&self, other: &GradedSeries) -> Result<GradedSeries> {
        self.check_field(other)?;
        let order = self.order.min(other.order);
        Ok(Self::from_terms(
            self.field,
            order,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(m, c)| (m.clone(), c.clone())),
        ))
    }

    pub fn neg(&self) -> GradedSeries {
        // over F2 negation is the identity; normalization handles it
        GradedSeries::from_terms(
            self.field,
            self.order,
            self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())),
        )
    }

    pub fn sub(&self, other: &GradedSeries) -> Result<GradedSeries> {
        self.add(&other.neg())
    }

    /// Product; the result is truncated at the smaller of the two orders.
    pub fn mul(&self, other: &GradedSeries) -> Result<GradedSeries> {
        self.check_field(other)?;
        let order = self.order.min(other.order);
        let bound = order as u64;
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            let w1 = m1.weight();
            if w1 > bound {
                continue;
            }
            for (m2, c2) in &other.terms {
                if w1 + m2.weight() > bound {
                    continue;
                }
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Self::from_terms(self.field, order, acc))
    }

    pub fn mul_scalar(&self, c: &BigRational) -> GradedSeries {
        GradedSeries::from_terms(
            self.field,
            self.order,
            self.terms.iter().map(|(m, v)| (m.clone(), v * c)),
        )
    }

    /// Integer power, respecting truncation.
    pub fn pow(&self, e: u32) -> GradedSeries {
        let mut acc = GradedSeries::one(self.field, self.order);
        for _ in 0..e {
            // same field and order throughout, cannot fail
            acc = acc.mul(self).expect("pow: field/order invariant");
        }
        acc
    }

    /// Homogeneous weight-`j` part; zero for `j` outside `0..=order`.
    pub fn component(&self, j: i64) -> GradedSeries {
        self.component_with_flag(j).0
    }

    /// Homogeneous part together with a flag that is true when `j` lies
    /// beyond the truncation order (so the zero result is uninformative).
    pub fn component_with_flag(&self, j: i64) -> (GradedSeries, bool) {
        if j < 0 {
            return (GradedSeries::zero(self.field, self.order), false);
        }
        if j as u64 > self.order as u64 {
            return (GradedSeries::zero(self.field, self.order), true);
        }
        let w = j as u64;
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.weight() == w)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect::<Vec<_>>();
        (Self::from_terms(self.field, self.order, terms), false)
    }

    /// Re-truncate to a lower order. Raising the order is a `ShapeError`:
    /// the discarded tail cannot be recovered.
    pub fn truncate(&self, order: u32) -> Result<GradedSeries> {
        if order > self.order {
            return Err(Error::ShapeError);
        }
        Ok(Self::from_terms(
            self.field,
            order,
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())),
        ))
    }

    /// Relabel the truncation order without adding information. Only safe
    /// when the caller knows the series is complete up to `order` (e.g. a
    /// homogeneous series); crate-internal for exactly that use.
    pub(crate) fn with_order(&self, order: u32) -> GradedSeries {
        Self::from_terms(
            self.field,
            order,
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Multiplicative inverse. Requires an invertible constant term: nonzero
    /// over ℚ, 1 over 𝔽₂.
    pub fn invert(&self) -> Result<GradedSeries> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv_c0 = c0.recip();
        let neg_inv_c0 = -&inv_c0;
        let order = self.order as usize;
        // weight components of self and of the inverse under construction
        let a: Vec<GradedSeries> = (0..=order).map(|w| self.component(w as i64)).collect();
        let mut b: Vec<GradedSeries> = Vec::with_capacity(order + 1);
        b.push(GradedSeries::constant(self.field, self.order, inv_c0));
        for w in 1..=order {
            let mut acc = GradedSeries::zero(self.field, self.order);
            for j in 1..=w {
                acc = acc.add(&a[j].mul(&b[w - j])?)?;
            }
            b.push(acc.mul_scalar(&neg_inv_c0));
        }
        let mut out = GradedSeries::zero(self.field, self.order);
        for part in &b {
            out = out.add(part)?;
        }
        Ok(out)
    }

    /// Rescaling (η)_d = Σ_j η_j d^j where η_j is the weight-j component.
    /// Defined over ℚ only.
    pub fn rescale(&self, d: &BigRational) -> Result<GradedSeries> {
        if self.field != Field::Q {
            return Err(Error::UnsupportedField);
        }
        let mut scale = BigRational::one();
        let mut out = GradedSeries::zero(self.field, self.order);
        for j in 0..=self.order {
            let part = self.component(j as i64).mul_scalar(&scale);
            out = out.add(&part)?;
            scale *= d;
        }
        Ok(out)
    }

    /// Exponential; requires ℚ coefficients and constant term 0.
    pub fn exp(&self) -> Result<GradedSeries> {
        if self.field != Field::Q {
            return Err(Error::UnsupportedField);
        }
        if !self.constant_term().is_zero() {
            return Err(Error::BadConstantTerm);
        }
        // self has minimal weight 1, so powers beyond the order vanish
        let mut out = GradedSeries::one(self.field, self.order);
        let mut term = GradedSeries::one(self.field, self.order);
        for i in 1..=self.order {
            term = term
                .mul(self)?
                .mul_scalar(&BigRational::new(BigInt::one(), BigInt::from(i)));
            if term.is_zero() {
                break;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Logarithm; requires ℚ coefficients and constant term 1.
    pub fn log(&self) -> Result<GradedSeries> {
        if self.field != Field::Q {
            return Err(Error::UnsupportedField);
        }
        if !self.constant_term().is_one() {
            return Err(Error::BadConstantTerm);
        }
        let x = self.sub(&GradedSeries::one(self.field, self.order))?;
        let mut out = GradedSeries::zero(self.field, self.order);
        let mut power = GradedSeries::one(self.field, self.order);
        for i in 1..=self.order {
            power = power.mul(&x)?;
            if power.is_zero() {
                break;
            }
            let sign = if i % 2 == 1 { 1 } else { -1 };
            let c = BigRational::new(BigInt::from(sign), BigInt::from(i));
            out = out.add(&power.mul_scalar(&c))?;
        }
        Ok(out)
    }

    /// Substitute series or scalars for generators. Every series image must
    /// share this series' field and be homogeneous of the replaced
    /// generator's weight; unmapped generators stay themselves.
    pub fn substitute(&self, images: &BTreeMap<Generator, Subst>) -> Result<GradedSeries> {
        for (g, sub) in images {
            if let Subst::Series(s) = sub {
                if s.field != self.field {
                    return Err(Error::FieldMismatch);
                }
                if !s.is_homogeneous_of(g.weight() as u64) {
                    return Err(Error::WeightMismatch);
                }
            }
        }
        let mut out = GradedSeries::zero(self.field, self.order);
        for (m, c) in &self.terms {
            let mut prod = GradedSeries::constant(self.field, self.order, c.clone());
            for &(g, e) in m.powers() {
                match images.get(&g) {
                    Some(Subst::Scalar(s)) => {
                        let mut p = BigRational::one();
                        for _ in 0..e {
                            p *= s;
                        }
                        prod = prod.mul_scalar(&p);
                    }
                    Some(Subst::Series(img)) => {
                        let img = img.with_order(self.order);
                        prod = prod.mul(&img.pow(e))?;
                    }
                    None => {
                        let gm = GradedSeries::from_terms(
                            self.field,
                            self.order,
                            [(Monomial::from_powers(&[(g, e)]), BigRational::one())],
                        );
                        prod = prod.mul(&gm)?;
                    }
                }
                if prod.is_zero() {
                    break;
                }
            }
            out = out.add(&prod)?;
        }
        Ok(out)
    }

    /// Reduce a ℚ-series with integer coefficients mod 2, optionally
    /// retagging generator families (e.g. `c` → `w`). Already-𝔽₂ series are
    /// just retagged.
    pub fn reduce_mod2(&self, retag: &BTreeMap<Family, Family>) -> Result<GradedSeries> {
        if self.field == Field::Q && !self.is_integral() {
            return Err(Error::NonIntegralCoefficient);
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let powers: Vec<(Generator, u32)> = m
                .powers()
                .iter()
                .map(|&(g, e)| {
                    let family = retag.get(&g.family).copied().unwrap_or(g.family);
                    (Generator::new(family, g.index), e)
                })
                .collect();
            (Monomial::from_powers(&powers), c.clone())
        });
        Ok(GradedSeries::from_terms(Field::F2, self.order, terms))
    }
}

/// Determinant of a square matrix of series sharing one field and order.
/// The empty matrix has determinant 1.
///
/// Laplace expansion, memoized as a forward DP over the set of used columns.
/// Zero entries are skipped before branching, so the banded matrices arising
/// from Young diagrams stay cheap.
pub fn determinant(field: Field, order: u32, m: &[Vec<GradedSeries>]) -> Result<GradedSeries> {
    let s = m.len();
    if s == 0 {
        return Ok(GradedSeries::one(field, order));
    }
    if s > 63 {
        return Err(Error::TooLarge);
    }
    for row in m {
        if row.len() != s {
            return Err(Error::ShapeError);
        }
        for e in row {
            if e.field() != field {
                return Err(Error::FieldMismatch);
            }
            if e.order() != order {
                return Err(Error::ShapeError);
            }
        }
    }
    let mut cur: BTreeMap<u64, GradedSeries> = BTreeMap::new();
    cur.insert(0, GradedSeries::one(field, order));
    for row in m {
        let mut next: BTreeMap<u64, GradedSeries> = BTreeMap::new();
        for (mask, acc) in &cur {
            for (j, e) in row.iter().enumerate() {
                if mask & (1 << j) != 0 || e.is_zero() {
                    continue;
                }
                // sign flip per inversion: used columns greater than j
                let inversions = (mask >> (j + 1)).count_ones();
                let mut term = acc.mul(e)?;
                if inversions % 2 == 1 {
                    term = term.neg();
                }
                if term.is_zero() {
                    continue;
                }
                let key = mask | (1 << j);
                match next.get_mut(&key) {
                    Some(v) => *v = v.add(&term)?,
                    None => {
                        next.insert(key, term);
                    }
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        cur = next;
        if cur.is_empty() {
            return Ok(GradedSeries::zero(field, order));
        }
    }
    let full = (1u64 << s) - 1;
    Ok(cur
        .remove(&full)
        .unwrap_or_else(|| GradedSeries::zero(field, order)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn c(i: u32) -> Generator {
        Generator::new(Family::C, i)
    }

    fn gen_series(field: Field, order: u32, i: u32) -> GradedSeries {
        GradedSeries::generator(field, order, c(i))
    }

    #[test]
    fn monomial_ordering_and_merge() {
        let m1 = Monomial::from_powers(&[(c(2), 1), (c(1), 2)]);
        let m2 = Monomial::from_powers(&[(c(1), 2), (c(2), 1)]);
        assert_eq!(m1, m2);
        assert_eq!(m1.weight(), 4);
        assert_eq!(m1.degree(), 3);
        let sq = m1.mul(&m1);
        assert_eq!(sq, Monomial::from_powers(&[(c(1), 4), (c(2), 2)]));
    }

    #[test]
    fn add_truncates_to_min_order() {
        let a = gen_series(Field::Q, 5, 3);
        let b = gen_series(Field::Q, 2, 1);
        let s = a.add(&b).unwrap();
        assert_eq!(s.order(), 2);
        // c_3 falls above the joint order
        assert_eq!(s, gen_series(Field::Q, 2, 1));
    }

    #[test]
    fn field_mismatch_is_rejected() {
        let a = gen_series(Field::Q, 4, 1);
        let b = gen_series(Field::F2, 4, 1);
        assert_eq!(a.add(&b), Err(Error::FieldMismatch));
        assert_eq!(a.mul(&b), Err(Error::FieldMismatch));
    }

    #[test]
    fn f2_coefficients_normalize() {
        let a = gen_series(Field::F2, 4, 1);
        let sum = a.add(&a).unwrap();
        assert!(sum.is_zero());
        let b = a.mul_scalar(&q(3));
        assert_eq!(b, a);
    }

    #[test]
    fn mul_respects_truncation() {
        let one_plus_c1 = GradedSeries::one(Field::Q, 2)
            .add(&gen_series(Field::Q, 2, 1))
            .unwrap();
        let sq = one_plus_c1.mul(&one_plus_c1).unwrap();
        // (1 + c1)^2 = 1 + 2 c1 + c1^2 at order 2
        assert_eq!(sq.coeff(&Monomial::one()), q(1));
        assert_eq!(sq.coeff(&Monomial::generator(c(1))), q(2));
        assert_eq!(sq.coeff(&Monomial::from_powers(&[(c(1), 2)])), q(1));
        let cube = sq.mul(&one_plus_c1).unwrap();
        // c1^3 would have weight 3 > order 2
        assert_eq!(cube.max_weight(), 2);
        assert_eq!(cube.coeff(&Monomial::from_powers(&[(c(1), 2)])), q(3));
    }

    #[test]
    fn invert_geometric_series() {
        let order = 6;
        let s = GradedSeries::one(Field::Q, order)
            .sub(&gen_series(Field::Q, order, 1))
            .unwrap();
        let inv = s.invert().unwrap();
        for e in 0..=6u32 {
            assert_eq!(inv.coeff(&Monomial::from_powers(&[(c(1), e)])), q(1));
        }
        assert_eq!(s.mul(&inv).unwrap(), GradedSeries::one(Field::Q, order));
    }

    #[test]
    fn invert_requires_unit_constant_term() {
        let s = gen_series(Field::Q, 3, 1);
        assert_eq!(s.invert(), Err(Error::NotInvertible));
        let z = GradedSeries::zero(Field::F2, 3);
        assert_eq!(z.invert(), Err(Error::NotInvertible));
    }

    #[test]
    fn invert_over_f2() {
        let order = 5;
        let s = GradedSeries::one(Field::F2, order)
            .add(&gen_series(Field::F2, order, 1))
            .unwrap()
            .add(&gen_series(Field::F2, order, 2))
            .unwrap();
        let inv = s.invert().unwrap();
        assert_eq!(s.mul(&inv).unwrap(), GradedSeries::one(Field::F2, order));
    }

    #[test]
    fn component_and_flag() {
        let s = GradedSeries::one(Field::Q, 3)
            .add(&gen_series(Field::Q, 3, 2))
            .unwrap();
        assert_eq!(s.component(0), GradedSeries::one(Field::Q, 3));
        assert_eq!(s.component(2), gen_series(Field::Q, 3, 2));
        assert!(s.component(1).is_zero());
        assert!(s.component(-1).is_zero());
        let (z, beyond) = s.component_with_flag(7);
        assert!(z.is_zero() && beyond);
        let (z, beyond) = s.component_with_flag(3);
        assert!(z.is_zero() && !beyond);
    }

    #[test]
    fn rescale_is_evaluation_at_d() {
        // (1 + c1 + c2)_d = 1 + d c1 + d^2 c2
        let s = GradedSeries::one(Field::Q, 2)
            .add(&gen_series(Field::Q, 2, 1))
            .unwrap()
            .add(&gen_series(Field::Q, 2, 2))
            .unwrap();
        let r = s.rescale(&q(3)).unwrap();
        assert_eq!(r.coeff(&Monomial::one()), q(1));
        assert_eq!(r.coeff(&Monomial::generator(c(1))), q(3));
        assert_eq!(r.coeff(&Monomial::generator(c(2))), q(9));
        let f2 = GradedSeries::one(Field::F2, 2);
        assert_eq!(f2.rescale(&q(2)), Err(Error::UnsupportedField));
    }

    #[test]
    fn exp_log_roundtrip() {
        let a = gen_series(Field::Q, 5, 1)
            .add(&gen_series(Field::Q, 5, 2).mul_scalar(&rat(1, 3)))
            .unwrap();
        let e = a.exp().unwrap();
        assert_eq!(e.constant_term(), q(1));
        assert_eq!(e.log().unwrap(), a);
        let b = GradedSeries::one(Field::Q, 5).add(&gen_series(Field::Q, 5, 2)).unwrap();
        assert_eq!(b.log().unwrap().exp().unwrap(), b);
    }

    #[test]
    fn exp_log_preconditions() {
        let one = GradedSeries::one(Field::Q, 3);
        assert_eq!(one.exp(), Err(Error::BadConstantTerm));
        let zero = GradedSeries::zero(Field::Q, 3);
        assert_eq!(zero.log(), Err(Error::BadConstantTerm));
        let f2 = GradedSeries::zero(Field::F2, 3);
        assert_eq!(f2.exp(), Err(Error::UnsupportedField));
        assert_eq!(GradedSeries::one(Field::F2, 3).log(), Err(Error::UnsupportedField));
    }

    #[test]
    fn exp_of_sum_is_product() {
        let a = gen_series(Field::Q, 4, 1);
        let b = gen_series(Field::Q, 4, 2).mul_scalar(&rat(2, 5));
        let lhs = a.add(&b).unwrap().exp().unwrap();
        let rhs = a.exp().unwrap().mul(&b.exp().unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitute_scalar_and_series() {
        // substitute c2 -> c1^2 (homogeneous weight 2) and c3 -> 0
        let s = GradedSeries::one(Field::Q, 3)
            .add(&gen_series(Field::Q, 3, 2))
            .unwrap()
            .add(&gen_series(Field::Q, 3, 3))
            .unwrap();
        let mut images = BTreeMap::new();
        let c1sq = GradedSeries::from_terms(
            Field::Q,
            3,
            [(Monomial::from_powers(&[(c(1), 2)]), q(1))],
        );
        images.insert(c(2), Subst::Series(c1sq.clone()));
        images.insert(c(3), Subst::Scalar(q(0)));
        let out = s.substitute(&images).unwrap();
        let expected = GradedSeries::one(Field::Q, 3).add(&c1sq).unwrap();
        assert_eq!(out, expected);
    }

    #[test]
    fn substitute_rejects_inhomogeneous_image() {
        let s = gen_series(Field::Q, 3, 2);
        let mut images = BTreeMap::new();
        let bad = GradedSeries::one(Field::Q, 3).add(&gen_series(Field::Q, 3, 2)).unwrap();
        images.insert(c(2), Subst::Series(bad));
        assert_eq!(s.substitute(&images), Err(Error::WeightMismatch));
        let mut wrong_field = BTreeMap::new();
        wrong_field.insert(c(2), Subst::Series(gen_series(Field::F2, 3, 2)));
        assert_eq!(s.substitute(&wrong_field), Err(Error::FieldMismatch));
    }

    #[test]
    fn reduce_mod2_checks_integrality_and_retags() {
        let s = GradedSeries::one(Field::Q, 2)
            .add(&gen_series(Field::Q, 2, 1).mul_scalar(&q(2)))
            .unwrap()
            .add(&gen_series(Field::Q, 2, 2).mul_scalar(&q(3)))
            .unwrap();
        let mut retag = BTreeMap::new();
        retag.insert(Family::C, Family::W);
        let r = s.reduce_mod2(&retag).unwrap();
        let w2 = GradedSeries::generator(Field::F2, 2, Generator::new(Family::W, 2));
        let expected = GradedSeries::one(Field::F2, 2).add(&w2).unwrap();
        assert_eq!(r, expected);

        let half = GradedSeries::constant(Field::Q, 2, rat(1, 2));
        assert_eq!(half.reduce_mod2(&retag), Err(Error::NonIntegralCoefficient));
    }

    #[test]
    fn truncate_lowers_only() {
        let s = GradedSeries::one(Field::Q, 4).add(&gen_series(Field::Q, 4, 3)).unwrap();
        let t = s.truncate(2).unwrap();
        assert_eq!(t, GradedSeries::one(Field::Q, 2));
        assert_eq!(s.truncate(5), Err(Error::ShapeError));
    }

    #[test]
    fn determinant_small_cases() {
        let order = 4;
        let one = GradedSeries::one(Field::Q, order);
        let c1 = gen_series(Field::Q, order, 1);
        let c2 = gen_series(Field::Q, order, 2);
        // det [[1, c1], [c1, c2]] = c2 - c1^2
        let m = vec![vec![one.clone(), c1.clone()], vec![c1.clone(), c2.clone()]];
        let d = determinant(Field::Q, order, &m).unwrap();
        let expected = c2.sub(&c1.mul(&c1).unwrap()).unwrap();
        assert_eq!(d, expected);
        // empty matrix
        assert_eq!(
            determinant(Field::Q, order, &[]).unwrap(),
            GradedSeries::one(Field::Q, order)
        );
    }

    #[test]
    fn determinant_shape_errors() {
        let order = 2;
        let one = GradedSeries::one(Field::Q, order);
        let m = vec![vec![one.clone(), one.clone()], vec![one.clone()]];
        assert_eq!(determinant(Field::Q, order, &m), Err(Error::ShapeError));
        let mixed = vec![vec![GradedSeries::one(Field::Q, 3)]];
        assert_eq!(determinant(Field::Q, order, &mixed), Err(Error::ShapeError));
        let wrong = vec![vec![GradedSeries::one(Field::F2, order)]];
        assert_eq!(determinant(Field::Q, order, &wrong), Err(Error::FieldMismatch));
    }

    #[test]
    fn determinant_is_alternating() {
        let order = 3;
        let c1 = gen_series(Field::Q, order, 1);
        let c2 = gen_series(Field::Q, order, 2);
        let one = GradedSeries::one(Field::Q, order);
        let r1 = vec![one.clone(), c1.clone()];
        let r2 = vec![c2.clone(), c1.mul(&c1).unwrap()];
        let d12 = determinant(Field::Q, order, &[r1.clone(), r2.clone()]).unwrap();
        let d21 = determinant(Field::Q, order, &[r2, r1]).unwrap();
        assert_eq!(d12, d21.neg());
    }

    #[test]
    fn structural_equality_includes_order() {
        let a = GradedSeries::one(Field::Q, 3);
        let b = GradedSeries::one(Field::Q, 4);
        assert_ne!(a, b);
    }
}
