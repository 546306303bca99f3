//! Growth vectors, their reduction, Young-diagram bookkeeping and
//! Giambelli-type determinantal classes of degeneracy loci.
//!
//! A growth vector r = (r_1, ..., r_k) records the ranks of the sheaves
//! generated by iterated brackets of a rank-n distribution inside an
//! m-manifold: r_1 = n, the entries are non-decreasing, bounded by both m
//! and the free-Lie bound ∂(n,i), and the increments never exceed d(n,i).
//!
//! The locus where such growth occurs is a degeneracy locus of the flag of
//! bundles L_i = 𝔏¹ ⊕ ... ⊕ 𝔏ⁱ mapping to the tangent bundle TM. After
//! discarding redundant stages ([`reduce`]), the Schubert-type conditions
//! "rank(L_i → TM) ≤ r_i" yield two conjugate Young diagrams λ and μ with
//! |λ| = |μ| = the expected codimension, and the locus class is either of the
//! dual Giambelli determinants
//!
//!   det( w_{λ_i − i + j}(L*_{ρ(i)} − TM*) )   =   det( w_{μ_i − i + j}(TM − L_{ρ′(i)}) )
//!
//! with row bundles selected by the staircase maps ρ, ρ′. Over 𝔽₂ the entries
//! are Stiefel-Whitney classes of honest bundles; [`giambelli_class_integral`]
//! is the same determinant for arbitrary formal bundles with prescribed rank
//! conditions, used as an independent cross-check.

use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::bundle::FormalBundle;
use crate::free_lie::{lie_sw_class, WittTable};
use crate::ring::{determinant, Family, Field, GradedSeries, Generator};
use crate::{Error, Result};

/// A validated growth vector with its ambient data (n, m).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GrowthVector {
    n: u32,
    m: u32,
    r: Vec<u32>,
}

/// Check all validity constraints; the error names the violated one.
pub fn validate_growth(r: &[u32], n: u32, m: u32) -> Result<GrowthVector> {
    if r.is_empty() {
        return Err(Error::InvalidGrowthVector("growth vector must be non-empty"));
    }
    if n == 0 {
        return Err(Error::InvalidGrowthVector("rank n must be at least 1"));
    }
    if m < n {
        return Err(Error::InvalidGrowthVector(
            "ambient dimension m must be at least n",
        ));
    }
    if r[0] != n {
        return Err(Error::InvalidGrowthVector("first entry must equal n"));
    }
    let table = WittTable::new(n as u64, r.len() as u64)?;
    for (idx, &ri) in r.iter().enumerate() {
        let i = idx as u64 + 1;
        if idx > 0 && ri < r[idx - 1] {
            return Err(Error::InvalidGrowthVector("entries must be non-decreasing"));
        }
        if ri > m {
            return Err(Error::InvalidGrowthVector(
                "entries must not exceed the ambient dimension m",
            ));
        }
        if &num_bigint::BigInt::from(ri as u64) > table.partial(i) {
            return Err(Error::InvalidGrowthVector(
                "entry exceeds the free-Lie bound (Witt partial sum)",
            ));
        }
        if idx > 0 {
            let incr = (ri - r[idx - 1]) as u64;
            if &num_bigint::BigInt::from(incr) > table.dim(i) {
                return Err(Error::InvalidGrowthVector(
                    "increment exceeds Witt dimension d(n,i)",
                ));
            }
        }
    }
    Ok(GrowthVector {
        n,
        m,
        r: r.to_vec(),
    })
}

impl GrowthVector {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Number of stages k.
    pub fn k(&self) -> usize {
        self.r.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.r
    }

    /// Witt coranks C_i = ∂(n,i) − r_i for each stage (1-based stage i at
    /// index i−1). `TooLarge` if a partial sum overflows u64.
    pub fn witt_coranks(&self) -> Result<Vec<u64>> {
        let table = WittTable::new(self.n as u64, self.r.len() as u64)?;
        self.r
            .iter()
            .enumerate()
            .map(|(idx, &ri)| {
                let p = table.partial_u64(idx as u64 + 1)?;
                Ok(p - ri as u64)
            })
            .collect()
    }

    /// True when every entry attains its cap min(∂(n,i), m); the locus is
    /// then the whole manifold and the reduced index set is empty.
    pub fn is_maximal(&self) -> Result<bool> {
        let table = WittTable::new(self.n as u64, self.r.len() as u64)?;
        for (idx, &ri) in self.r.iter().enumerate() {
            let cap = table.partial_u64(idx as u64 + 1)?.min(self.m as u64);
            if (ri as u64) < cap {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Truncate just past the first entry equal to m (later stages carry no
    /// information: the flag already fills TM). Unchanged if m is never hit.
    pub fn canonical(&self) -> GrowthVector {
        match self.r.iter().position(|&ri| ri == self.m) {
            Some(i) => GrowthVector {
                n: self.n,
                m: self.m,
                r: self.r[..=i].to_vec(),
            },
            None => self.clone(),
        }
    }
}

/// Stages that impose essential rank conditions, as 0-based positions into
/// the growth vector (stage numbers are position + 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedIndexSet {
    pub indices: Vec<usize>,
}

/// Discard redundant stages. Candidates are stages with positive Witt corank
/// and rank below m. Among candidates with equal rank the last one stays (it
/// carries the strongest corank); among the survivors with equal corank the
/// first one stays (the later conditions follow from it and the increment
/// bound). Along the result both rank and corank are strictly increasing.
pub fn reduce(g: &GrowthVector) -> Result<ReducedIndexSet> {
    let coranks = g.witt_coranks()?;
    let r = g.entries();
    let candidates: Vec<usize> = (0..r.len())
        .filter(|&i| coranks[i] > 0 && r[i] < g.m())
        .collect();
    // keep the last of each equal-rank run
    let mut pass1: Vec<usize> = Vec::new();
    for &i in &candidates {
        if let Some(&last) = pass1.last() {
            if r[last] == r[i] {
                pass1.pop();
            }
        }
        pass1.push(i);
    }
    // keep the first of each equal-corank run
    let mut indices: Vec<usize> = Vec::new();
    for &i in &pass1 {
        if let Some(&prev) = indices.last() {
            if coranks[prev] == coranks[i] {
                continue;
            }
        }
        indices.push(i);
    }
    Ok(ReducedIndexSet { indices })
}

/// Partition with weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungDiagram {
    parts: Vec<u64>,
}

impl YoungDiagram {
    pub fn new(mut parts: Vec<u64>) -> YoungDiagram {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        YoungDiagram { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes |λ|.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn conjugate(&self) -> YoungDiagram {
        if self.parts.is_empty() {
            return YoungDiagram { parts: Vec::new() };
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u64)
            .collect();
        YoungDiagram { parts }
    }
}

/// Abstract flag data behind a Giambelli determinant: conditions
/// rank(A_s → B) ≤ κ_s with rank A_s = a_s, rank B = b, subject to
/// 0 < a_1 − κ_1 < ... < a_l − κ_l and κ_1 < ... < κ_l < b.
#[derive(Clone, Debug)]
pub(crate) struct FlagData {
    pub a: Vec<u64>,
    pub kappa: Vec<u64>,
    pub b: u64,
}

impl FlagData {
    pub(crate) fn validate(&self) -> Result<()> {
        if self.a.len() != self.kappa.len() {
            return Err(Error::ShapeError);
        }
        let coranks: Vec<u64> = self
            .a
            .iter()
            .zip(&self.kappa)
            .map(|(&a, &k)| {
                a.checked_sub(k)
                    .ok_or(Error::Precondition("condition rank exceeds bundle rank"))
            })
            .collect::<Result<_>>()?;
        for (s, &c) in coranks.iter().enumerate() {
            if c == 0 {
                return Err(Error::Precondition("coranks must be positive"));
            }
            if s > 0 && coranks[s - 1] >= c {
                return Err(Error::Precondition("coranks must be strictly increasing"));
            }
        }
        for (s, &k) in self.kappa.iter().enumerate() {
            if k >= self.b {
                return Err(Error::Precondition(
                    "condition ranks must stay below the ambient rank",
                ));
            }
            if s > 0 && self.kappa[s - 1] >= k {
                return Err(Error::Precondition(
                    "condition ranks must be strictly increasing",
                ));
            }
        }
        Ok(())
    }
}

/// Diagram data of a reduced growth vector (or abstract flag): the conjugate
/// pair (λ, μ), the expected codimension, and the row-selection maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocusDiagrams {
    /// 0-based positions of the essential stages in the growth vector.
    pub indices: Vec<usize>,
    pub lambda: YoungDiagram,
    pub mu: YoungDiagram,
    /// Expected codimension |λ| = |μ|.
    pub cd: u64,
    /// Row map for the λ-form: ρ(i) = max{s : i ≤ b − κ_s}, 1-based values,
    /// entry [i−1] for row i.
    pub rho: Vec<usize>,
    /// Row map for the μ-form: ρ′(i) = min{s : i ≤ a_s − κ_s}.
    pub rho_prime: Vec<usize>,
}

pub(crate) fn abstract_diagrams(flag: &FlagData, indices: Vec<usize>) -> Result<LocusDiagrams> {
    flag.validate()?;
    let l = flag.a.len();
    if l == 0 {
        return Ok(LocusDiagrams {
            indices,
            lambda: YoungDiagram::new(Vec::new()),
            mu: YoungDiagram::new(Vec::new()),
            cd: 0,
            rho: Vec::new(),
            rho_prime: Vec::new(),
        });
    }
    let coranks: Vec<u64> = flag
        .a
        .iter()
        .zip(&flag.kappa)
        .map(|(&a, &k)| a - k)
        .collect();
    // lambda: part C_{l+1-s} with multiplicity m_s; m_1 = b - kappa_l,
    // m_s = kappa_{l+2-s} - kappa_{l+1-s}
    let mut lambda_parts = Vec::new();
    for s in 1..=l {
        let part = coranks[l - s];
        let mult = if s == 1 {
            flag.b - flag.kappa[l - 1]
        } else {
            flag.kappa[l + 1 - s] - flag.kappa[l - s]
        };
        for _ in 0..mult {
            lambda_parts.push(part);
        }
    }
    // mu: part q_s = b - kappa_s with multiplicity n_1 = C_1,
    // n_s = C_s - C_{s-1}
    let mut mu_parts = Vec::new();
    for s in 0..l {
        let part = flag.b - flag.kappa[s];
        let mult = if s == 0 {
            coranks[0]
        } else {
            coranks[s] - coranks[s - 1]
        };
        for _ in 0..mult {
            mu_parts.push(part);
        }
    }
    let lambda = YoungDiagram::new(lambda_parts);
    let mu = YoungDiagram::new(mu_parts);
    if lambda.conjugate() != mu {
        return Err(Error::Internal("lambda and mu must be conjugate"));
    }
    let cd = lambda.size();
    if mu.size() != cd {
        return Err(Error::Internal("diagram sizes must agree"));
    }
    // rho(i) = max{s : i <= b - kappa_s}; the q_s are strictly decreasing
    let s_lambda = lambda.rows();
    let mut rho = Vec::with_capacity(s_lambda);
    for i in 1..=s_lambda as u64 {
        let s = (1..=l)
            .filter(|&s| i <= flag.b - flag.kappa[s - 1])
            .max()
            .ok_or(Error::Internal("rho undefined for a row"))?;
        rho.push(s);
    }
    // rho'(i) = min{s : i <= C_s}; the coranks are strictly increasing
    let s_mu = mu.rows();
    let mut rho_prime = Vec::with_capacity(s_mu);
    for i in 1..=s_mu as u64 {
        let s = (1..=l)
            .find(|&s| i <= coranks[s - 1])
            .ok_or(Error::Internal("rho' undefined for a row"))?;
        rho_prime.push(s);
    }
    Ok(LocusDiagrams {
        indices,
        lambda,
        mu,
        cd,
        rho,
        rho_prime,
    })
}

/// Reduce a growth vector and compute its diagram data.
pub fn young_diagrams(g: &GrowthVector) -> Result<LocusDiagrams> {
    let reduced = reduce(g)?;
    let table = WittTable::new(g.n() as u64, g.k() as u64)?;
    let a = reduced
        .indices
        .iter()
        .map(|&i| table.partial_u64(i as u64 + 1))
        .collect::<Result<Vec<u64>>>()?;
    let kappa: Vec<u64> = reduced.indices.iter().map(|&i| g.entries()[i] as u64).collect();
    let flag = FlagData {
        a,
        kappa,
        b: g.m() as u64,
    };
    abstract_diagrams(&flag, reduced.indices)
}

/// Which of the two dual Giambelli determinants to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GiambelliForm {
    /// det(w_{λ_i−i+j}) in classes of A*_{ρ(i)} − B*.
    Lambda,
    /// det(w_{μ_i−i+j}) in classes of B − A_{ρ′(i)}.
    Mu,
}

/// Determinant assembly shared by the mod-2 and integral variants.
/// `row_classes[s-1]` is the appropriate difference class for condition s.
fn giambelli_det(
    diagrams: &LocusDiagrams,
    row_classes_lambda: &[GradedSeries],
    row_classes_mu: &[GradedSeries],
    form: GiambelliForm,
    field: Field,
    order: u32,
) -> Result<GradedSeries> {
    if diagrams.indices.is_empty() && diagrams.lambda.is_empty() {
        return Ok(GradedSeries::one(field, order));
    }
    if diagrams.cd > order as u64 {
        // every term of the expanded determinant is homogeneous of weight cd
        return Ok(GradedSeries::zero(field, order));
    }
    let (parts, rows_map, classes) = match form {
        GiambelliForm::Lambda => (
            diagrams.lambda.parts(),
            &diagrams.rho,
            row_classes_lambda,
        ),
        GiambelliForm::Mu => (diagrams.mu.parts(), &diagrams.rho_prime, row_classes_mu),
    };
    let s = parts.len();
    let mut matrix: Vec<Vec<GradedSeries>> = Vec::with_capacity(s);
    for i in 1..=s {
        let class = &classes[rows_map[i - 1] - 1];
        let mut row = Vec::with_capacity(s);
        for j in 1..=s {
            let w = parts[i - 1] as i64 - i as i64 + j as i64;
            row.push(class.component(w));
        }
        matrix.push(row);
    }
    let det = determinant(field, order, &matrix)?;
    if !det.is_homogeneous_of(diagrams.cd) {
        return Err(Error::Internal("locus class must be homogeneous of weight cd"));
    }
    Ok(det)
}

/// Stiefel-Whitney class of the degeneracy locus of a growth vector, as a
/// determinant in the classes of TM and the flag bundles L_i = ⊕_{j≤i} 𝔏ʲ.
/// Truncation order defaults to m.
pub fn giambelli_class(
    g: &GrowthVector,
    form: GiambelliForm,
    order: Option<u32>,
) -> Result<GradedSeries> {
    let order = order.unwrap_or(g.m());
    let diagrams = young_diagrams(g)?;
    if diagrams.indices.is_empty() {
        return Ok(GradedSeries::one(Field::F2, order));
    }
    if diagrams.cd > order as u64 {
        return Ok(GradedSeries::zero(Field::F2, order));
    }
    let table = WittTable::new(g.n() as u64, g.k() as u64)?;
    // tangent bundle: rank m, class 1 + t_1 + ... + t_min(m, order)
    let mut tm_class = GradedSeries::one(Field::F2, order);
    for j in 1..=g.m().min(order) {
        tm_class = tm_class.add(&GradedSeries::generator(
            Field::F2,
            order,
            Generator::new(Family::T, j),
        ))?;
    }
    let tm = FormalBundle::new(g.m() as i64, tm_class)?;
    // flag bundles L_i at the essential stages, built incrementally
    let mut flags: Vec<FormalBundle> = Vec::with_capacity(diagrams.indices.len());
    let mut acc = FormalBundle::trivial(Field::F2, order, 0);
    let mut next_piece = 1u64;
    for &pos in &diagrams.indices {
        let stage = pos as u64 + 1;
        while next_piece <= stage {
            let rank = table
                .dim(next_piece)
                .to_i64()
                .ok_or(Error::TooLarge)?;
            let piece = FormalBundle::new(
                rank,
                lie_sw_class(g.n(), next_piece as u32, order, Family::V)?,
            )?;
            acc = acc.whitney(&piece)?;
            next_piece += 1;
        }
        flags.push(acc.clone());
    }
    let lambda_classes: Vec<GradedSeries> = flags
        .iter()
        .map(|l| Ok(l.dual().difference(&tm.dual())?.class().clone()))
        .collect::<Result<_>>()?;
    let mu_classes: Vec<GradedSeries> = flags
        .iter()
        .map(|l| Ok(tm.difference(l)?.class().clone()))
        .collect::<Result<_>>()?;
    giambelli_det(
        &diagrams,
        &lambda_classes,
        &mu_classes,
        form,
        Field::F2,
        order,
    )
}

/// Giambelli determinant for arbitrary formal bundles: conditions
/// rank(A_s → B) ≤ κ_s. Conditions that hold identically (κ_s ≥ min(rank A_s,
/// rank B)) are discarded first; the rest must satisfy the strict chains.
/// Both determinant forms are computed and compared before returning.
///
/// The two forms are provably equal when the inputs are classes of an honest
/// flag A_1 ⊂ ... ⊂ A_l of bundles (each class vanishing above its rank, each
/// quotient class vanishing above the rank step); for inconsistent formal
/// input the comparison can fail and is reported as an internal error.
pub fn giambelli_class_integral(
    subs: &[FormalBundle],
    ambient: &FormalBundle,
    kappas: &[u64],
) -> Result<GradedSeries> {
    if subs.len() != kappas.len() {
        return Err(Error::ShapeError);
    }
    let field = ambient.field();
    let order = ambient.order();
    if ambient.rank() < 0 {
        return Err(Error::Precondition("ambient rank must be nonnegative"));
    }
    let b = ambient.rank() as u64;
    let mut a = Vec::new();
    let mut kappa = Vec::new();
    let mut kept: Vec<&FormalBundle> = Vec::new();
    for (s, bundle) in subs.iter().enumerate() {
        if bundle.field() != field {
            return Err(Error::FieldMismatch);
        }
        if bundle.order() != order {
            return Err(Error::ShapeError);
        }
        if bundle.rank() < 0 {
            return Err(Error::Precondition("condition ranks must be nonnegative"));
        }
        let rank = bundle.rank() as u64;
        if kappas[s] >= rank.min(b) {
            continue; // the rank condition is vacuous
        }
        a.push(rank);
        kappa.push(kappas[s]);
        kept.push(bundle);
    }
    if kept.is_empty() {
        return Ok(GradedSeries::one(field, order));
    }
    let flag = FlagData { a, kappa, b };
    let diagrams = abstract_diagrams(&flag, (0..kept.len()).collect())?;
    let lambda_classes: Vec<GradedSeries> = kept
        .iter()
        .map(|s| Ok(s.dual().difference(&ambient.dual())?.class().clone()))
        .collect::<Result<_>>()?;
    let mu_classes: Vec<GradedSeries> = kept
        .iter()
        .map(|s| Ok(ambient.difference(s)?.class().clone()))
        .collect::<Result<_>>()?;
    let via_lambda = giambelli_det(
        &diagrams,
        &lambda_classes,
        &mu_classes,
        GiambelliForm::Lambda,
        field,
        order,
    )?;
    let via_mu = giambelli_det(
        &diagrams,
        &lambda_classes,
        &mu_classes,
        GiambelliForm::Mu,
        field,
        order,
    )?;
    if via_lambda != via_mu {
        return Err(Error::Internal("dual Giambelli forms disagree"));
    }
    Ok(via_mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Monomial;
    use alloc::vec;
    use num_rational::BigRational;

    fn growth(r: &[u32], m: u32) -> GrowthVector {
        validate_growth(r, r[0], m).unwrap()
    }

    #[test]
    fn validation_constraint_names() {
        let e = |r: &[u32], n, m| validate_growth(r, n, m).unwrap_err();
        assert_eq!(
            e(&[], 2, 4),
            Error::InvalidGrowthVector("growth vector must be non-empty")
        );
        assert_eq!(
            e(&[3], 2, 4),
            Error::InvalidGrowthVector("first entry must equal n")
        );
        assert_eq!(
            e(&[2, 1], 2, 4),
            Error::InvalidGrowthVector("entries must be non-decreasing")
        );
        assert_eq!(
            e(&[2, 3, 4], 2, 3),
            Error::InvalidGrowthVector("entries must not exceed the ambient dimension m")
        );
        // r_2 <= partial(2, 2) = 3
        assert_eq!(
            e(&[2, 5], 2, 9),
            Error::InvalidGrowthVector("entry exceeds the free-Lie bound (Witt partial sum)")
        );
        // increment r_3 - r_2 <= d(2,3) = 2
        assert_eq!(
            e(&[2, 2, 5], 2, 9),
            Error::InvalidGrowthVector("increment exceeds Witt dimension d(n,i)")
        );
        assert_eq!(
            e(&[2, 2], 2, 1),
            Error::InvalidGrowthVector("ambient dimension m must be at least n")
        );
    }

    #[test]
    fn reduce_worked_examples() {
        // stage numbers below are 1-based; indices are 0-based
        assert_eq!(reduce(&growth(&[2, 2, 4], 4)).unwrap().indices, vec![1]);
        assert_eq!(reduce(&growth(&[2, 3, 3], 4)).unwrap().indices, vec![2]);
        assert_eq!(reduce(&growth(&[2, 2, 3, 4], 4)).unwrap().indices, vec![1, 2]);
        // equal coranks: keep the first; (3,5,5,6) has coranks 0,1,9
        assert_eq!(reduce(&growth(&[3, 5, 5, 6], 6)).unwrap().indices, vec![2]);
        // maximal vector: nothing essential
        let maximal = growth(&[2, 3, 5], 5);
        assert!(maximal.is_maximal().unwrap());
        assert!(reduce(&maximal).unwrap().indices.is_empty());
    }

    #[test]
    fn diagrams_worked_examples() {
        // (2,2,4) at m=4: I={2}, lambda=(1,1), mu=(2), cd=2
        let d = young_diagrams(&growth(&[2, 2, 4], 4)).unwrap();
        assert_eq!(d.indices, vec![1]);
        assert_eq!(d.lambda.parts(), &[1, 1]);
        assert_eq!(d.mu.parts(), &[2]);
        assert_eq!(d.cd, 2);
        assert_eq!(d.rho, vec![1, 1]);
        assert_eq!(d.rho_prime, vec![1]);

        // (2,3,3) at m=4: I={3}, lambda=(2), mu=(1,1), cd=2
        let d = young_diagrams(&growth(&[2, 3, 3], 4)).unwrap();
        assert_eq!(d.indices, vec![2]);
        assert_eq!(d.lambda.parts(), &[2]);
        assert_eq!(d.mu.parts(), &[1, 1]);
        assert_eq!(d.cd, 2);
        assert_eq!(d.rho, vec![1]);
        assert_eq!(d.rho_prime, vec![1, 1]);

        // (2,2,3,4) at m=4: I={2,3}, lambda=(2,1), mu=(2,1), cd=3
        let d = young_diagrams(&growth(&[2, 2, 3, 4], 4)).unwrap();
        assert_eq!(d.indices, vec![1, 2]);
        assert_eq!(d.lambda.parts(), &[2, 1]);
        assert_eq!(d.mu.parts(), &[2, 1]);
        assert_eq!(d.cd, 3);
        assert_eq!(d.rho, vec![2, 1]);
        assert_eq!(d.rho_prime, vec![1, 2]);

        // (3,5,5,6) at m=6: reduced to stage 3, cd = 9
        let d = young_diagrams(&growth(&[3, 5, 5, 6], 6)).unwrap();
        assert_eq!(d.cd, 9);
    }

    #[test]
    fn conjugacy_exhaustive_small() {
        // every valid vector with n <= 3, k <= 4, m <= 7
        for n in 1..=3u32 {
            for m in n..=7u32 {
                let mut stack = vec![vec![n]];
                while let Some(r) = stack.pop() {
                    let g = validate_growth(&r, n, m).unwrap();
                    let d = young_diagrams(&g).unwrap();
                    assert_eq!(d.lambda.conjugate(), d.mu);
                    assert_eq!(d.lambda.size(), d.mu.size());
                    if r.len() < 4 {
                        let last = *r.last().unwrap();
                        for next in last..=m {
                            let mut longer = r.clone();
                            longer.push(next);
                            if validate_growth(&longer, n, m).is_ok() {
                                stack.push(longer);
                            }
                        }
                    }
                }
            }
        }
    }

    fn series_from(field: Field, order: u32, terms: &[(&[(Family, u32, u32)], i64)]) -> GradedSeries {
        GradedSeries::from_terms(
            field,
            order,
            terms.iter().map(|(powers, c)| {
                let m = Monomial::from_powers(
                    &powers
                        .iter()
                        .map(|&(f, i, e)| (Generator::new(f, i), e))
                        .collect::<Vec<_>>(),
                );
                (m, BigRational::from_integer(num_bigint::BigInt::from(*c)))
            }),
        )
    }

    #[test]
    fn locus_classes_worked_examples() {
        let t = Family::T;
        let v = Family::V;
        // (2,2,4): w_2(M) + w_2(V) + w_1(V)^2
        let g = growth(&[2, 2, 4], 4);
        let expected = series_from(
            Field::F2,
            4,
            &[
                (&[(t, 2, 1)], 1),
                (&[(v, 2, 1)], 1),
                (&[(v, 1, 2)], 1),
            ],
        );
        let mu = giambelli_class(&g, GiambelliForm::Mu, None).unwrap();
        let la = giambelli_class(&g, GiambelliForm::Lambda, None).unwrap();
        assert_eq!(mu, expected);
        assert_eq!(la, expected);

        // (2,3,3) in a 4-manifold: w_1(M)^2 + w_1(V)^2 + w_2(M) + w_1(M)w_1(V)
        let g = growth(&[2, 3, 3], 4);
        let expected = series_from(
            Field::F2,
            4,
            &[
                (&[(t, 1, 2)], 1),
                (&[(v, 1, 2)], 1),
                (&[(t, 2, 1)], 1),
                (&[(t, 1, 1), (v, 1, 1)], 1),
            ],
        );
        assert_eq!(giambelli_class(&g, GiambelliForm::Mu, None).unwrap(), expected);
        assert_eq!(giambelli_class(&g, GiambelliForm::Lambda, None).unwrap(), expected);

        // (2,2,3,4): w_1(M)w_2(M) + w_2(M)w_1(V) + w_1(V)^3 + w_3(M)
        let g = growth(&[2, 2, 3, 4], 4);
        let expected = series_from(
            Field::F2,
            4,
            &[
                (&[(t, 1, 1), (t, 2, 1)], 1),
                (&[(t, 2, 1), (v, 1, 1)], 1),
                (&[(v, 1, 3)], 1),
                (&[(t, 3, 1)], 1),
            ],
        );
        assert_eq!(giambelli_class(&g, GiambelliForm::Mu, None).unwrap(), expected);
        assert_eq!(giambelli_class(&g, GiambelliForm::Lambda, None).unwrap(), expected);
    }

    #[test]
    fn maximal_growth_gives_class_one() {
        let g = growth(&[2, 3, 5], 5);
        let c = giambelli_class(&g, GiambelliForm::Mu, None).unwrap();
        assert_eq!(c, GradedSeries::one(Field::F2, 5));
    }

    #[test]
    fn integral_vacuous_conditions_give_one() {
        let order = 4;
        let b = FormalBundle::trivial(Field::Q, order, 5);
        let a = FormalBundle::trivial(Field::Q, order, 3);
        // kappa = rank(A): no condition at all
        let c = giambelli_class_integral(&[a.clone()], &b, &[3]).unwrap();
        assert_eq!(c, GradedSeries::one(Field::Q, order));
        // kappa >= rank(B) is vacuous as well
        let big = FormalBundle::trivial(Field::Q, order, 9);
        let c = giambelli_class_integral(&[big], &b, &[5]).unwrap();
        assert_eq!(c, GradedSeries::one(Field::Q, order));
    }

    #[test]
    fn integral_precondition_violations() {
        let order = 3;
        let b = FormalBundle::trivial(Field::Q, order, 6);
        let a1 = FormalBundle::trivial(Field::Q, order, 4);
        let a2 = FormalBundle::trivial(Field::Q, order, 5);
        // kappas not strictly increasing
        assert_eq!(
            giambelli_class_integral(&[a1.clone(), a2.clone()], &b, &[2, 2]),
            Err(Error::Precondition("condition ranks must be strictly increasing"))
        );
        // coranks not strictly increasing: a-k = 2, then 2
        assert_eq!(
            giambelli_class_integral(&[a1.clone(), a2.clone()], &b, &[2, 3]),
            Err(Error::Precondition("coranks must be strictly increasing")),
        );
        assert_eq!(
            giambelli_class_integral(&[a1.clone()], &b, &[2, 3]),
            Err(Error::ShapeError)
        );
    }

    #[test]
    fn integral_thom_porteous_line_case() {
        // single condition kappa = 0 on a map A -> B of ranks 1, 2:
        // the class is the top Chern class c_2(B - A) (Thom-Porteous)
        let order = 4;
        let c1 = Generator::new(Family::C, 1);
        let v1 = Generator::new(Family::V, 1);
        let a_class = GradedSeries::one(Field::Q, order)
            .add(&GradedSeries::generator(Field::Q, order, v1))
            .unwrap();
        let b_class = GradedSeries::one(Field::Q, order)
            .add(&GradedSeries::generator(Field::Q, order, c1))
            .unwrap();
        let a = FormalBundle::new(1, a_class).unwrap();
        let b = FormalBundle::new(2, b_class).unwrap();
        let got = giambelli_class_integral(&[a.clone()], &b, &[0]).unwrap();
        let expected = b.difference(&a).unwrap().class().component(2);
        assert_eq!(got, expected);
    }

    /// Random line bundle 1 + a·x with x one of the four weight-1 generators.
    fn random_line(rng: &mut rand_chacha::ChaCha8Rng, order: u32) -> FormalBundle {
        use rand::Rng;
        let fam = [Family::C, Family::T, Family::V, Family::W][rng.gen_range(0..4usize)];
        let coef = rng.gen_range(-3..=3i64);
        let class = GradedSeries::one(Field::Q, order)
            .add(
                &GradedSeries::generator(Field::Q, order, Generator::new(fam, 1)).mul_scalar(
                    &BigRational::from_integer(num_bigint::BigInt::from(coef)),
                ),
            )
            .unwrap();
        FormalBundle::new(1, class).unwrap()
    }

    fn sum_of_lines(rng: &mut rand_chacha::ChaCha8Rng, order: u32, rank: u64) -> FormalBundle {
        let mut acc = FormalBundle::trivial(Field::Q, order, 0);
        for _ in 0..rank {
            acc = acc.whitney(&random_line(rng, order)).unwrap();
        }
        acc
    }

    #[test]
    fn integral_forms_agree_randomized() {
        // seeded random honest flags (Whitney sums of line bundles); the two
        // dual determinants must agree — checked inside giambelli_class_integral
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x51ab);
        let order = 5u32;
        let mut accepted = 0usize;
        while accepted < 200 {
            let b_rank = rng.gen_range(2..=6u64);
            let l = rng.gen_range(1..=3usize);
            let mut kappa = Vec::with_capacity(l);
            let mut coranks = Vec::with_capacity(l);
            for s in 0..l {
                let k = if s == 0 {
                    rng.gen_range(0..=2u64)
                } else {
                    kappa[s - 1] + rng.gen_range(1..=2u64)
                };
                let c = if s == 0 {
                    rng.gen_range(1..=2u64)
                } else {
                    coranks[s - 1] + rng.gen_range(1..=2u64)
                };
                kappa.push(k);
                coranks.push(c);
            }
            if kappa[l - 1] >= b_rank {
                continue;
            }
            let a: Vec<u64> = kappa.iter().zip(&coranks).map(|(k, c)| k + c).collect();
            let flag_data = FlagData {
                a: a.clone(),
                kappa: kappa.clone(),
                b: b_rank,
            };
            let diagrams = abstract_diagrams(&flag_data, (0..l).collect()).unwrap();
            if diagrams.cd > order as u64 {
                continue; // both forms short-circuit to zero; nothing to compare
            }
            let ambient = sum_of_lines(&mut rng, order, b_rank);
            let mut subs: Vec<FormalBundle> = Vec::with_capacity(l);
            for s in 0..l {
                let prev_rank = if s == 0 { 0 } else { a[s - 1] };
                let step = sum_of_lines(&mut rng, order, a[s] - prev_rank);
                let bundle = if s == 0 {
                    step
                } else {
                    subs[s - 1].whitney(&step).unwrap()
                };
                subs.push(bundle);
            }
            let class = giambelli_class_integral(&subs, &ambient, &kappa).unwrap();
            assert!(
                class.is_homogeneous_of(diagrams.cd),
                "class must be homogeneous of weight cd"
            );
            accepted += 1;
        }
    }

    #[test]
    fn rank_one_condition_reads_off_component() {
        // flag with one condition of corank c and kappa = b - 1:
        // lambda = (c), a 1x1 determinant selecting the weight-c component
        let order = 5;
        let v1 = Generator::new(Family::V, 1);
        let a_class = GradedSeries::one(Field::Q, order)
            .add(&GradedSeries::generator(Field::Q, order, v1))
            .unwrap();
        let a = FormalBundle::new(4, a_class).unwrap();
        let b = FormalBundle::trivial(Field::Q, order, 3);
        // kappa = 2: corank 2, mu = (1,1), lambda = (2)
        let got = giambelli_class_integral(&[a.clone()], &b, &[2]).unwrap();
        assert!(got.is_homogeneous_of(2));
    }
}
