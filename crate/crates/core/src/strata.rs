//! Defect vectors, admissibility of strata, the closed-form enumeration of
//! potentially admissible and potentially bounding defect vectors, and the
//! dimension-count predicates behind them.
//!
//! A stratum of distributions is indexed by a canonical growth vector (one
//! that stops at its first m-entry). Its defect vector records the increments
//! of the Witt coranks ∂(n,i) − r_i, with the first and last entries set to
//! zero by definition. A stratum is potentially admissible when cd(r) ≤ m and
//! potentially bounding when cd(r) > m but every strictly shallower stratum
//! (componentwise larger growth vector) is admissible.
//!
//! With p determined by ∂(n,p) ≤ m < ∂(n,p+1), the admissible defect vectors
//! for n ≥ 3 fall into three one- or two-parameter template families
//! ([`enumerate_admissible_defects`]); the bounding ones extend these by two
//! more shapes and a minimal-violator rule ([`enumerate_bounding_defects`]).
//! Both enumerations are validated against brute-force oracles that scan all
//! valid growth vectors in a window whose soundness comes from the corank
//! growth bound: a vector still open at position j has cd ≥ ∂(n,j) − m + 1.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::degeneracy::{validate_growth, young_diagrams, GrowthVector};
use crate::free_lie::{witt_partial, WittTable};
use crate::{Error, Result};

/// Corank-increment vector of a growth vector; first and last entries are
/// zero by definition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DefectVector {
    entries: Vec<u64>,
}

impl DefectVector {
    pub fn new(entries: Vec<u64>) -> Result<DefectVector> {
        if entries.is_empty() {
            return Err(Error::Precondition("defect vector must be non-empty"));
        }
        if entries[0] != 0 || *entries.last().unwrap() != 0 {
            return Err(Error::Precondition(
                "defect vector must start and end with zero",
            ));
        }
        Ok(DefectVector { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// True for the all-zero vector (maximal growth).
    pub fn is_trivial(&self) -> bool {
        self.entries.iter().all(|&d| d == 0)
    }
}

/// Defect vector of a growth vector, read off literally from the coranks.
pub fn defect(g: &GrowthVector) -> Result<DefectVector> {
    let coranks = g.witt_coranks()?;
    let k = coranks.len();
    let mut entries = Vec::with_capacity(k);
    entries.push(0);
    for i in 1..k.saturating_sub(1) {
        entries.push(coranks[i] - coranks[i - 1]);
    }
    if k >= 2 {
        entries.push(0);
    }
    Ok(DefectVector { entries })
}

/// Reconstruct the growth vector of a defect vector: r_i = ∂(n,i) − Σ_{j≤i} δ_j
/// for i < k and r_k = m. Fails when the result is not a valid growth vector.
pub fn growth_from_defect(n: u32, m: u32, d: &DefectVector) -> Result<GrowthVector> {
    let k = d.entries.len();
    let table = WittTable::new(n as u64, k as u64)?;
    let mut r: Vec<u32> = Vec::with_capacity(k);
    let mut c = 0u64;
    for i in 1..=k {
        c += d.entries[i - 1];
        if i == k {
            r.push(m);
        } else {
            let ri = table
                .partial_u64(i as u64)?
                .checked_sub(c)
                .ok_or(Error::InvalidGrowthVector(
                    "defect exceeds the Witt partial sum",
                ))?;
            if ri > m as u64 {
                return Err(Error::InvalidGrowthVector(
                    "entries must not exceed the ambient dimension m",
                ));
            }
            r.push(ri as u32);
        }
    }
    validate_growth(&r, n, m)
}

/// Jet-space and matrix-space dimensions of the evaluation map, with the
/// surjectivity flag dimJ ≥ dimMat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma1Dims {
    pub dim_jet: BigInt,
    pub dim_mat: BigInt,
    pub surjective_possible: bool,
}

/// dimJ = (m−n)·n·C(m+k−1, k−1) against dimMat = (m−n)·Σ_{i=2}^k d(n,i).
pub fn lemma1_dims(n: u64, m: u64, k: u64) -> Result<Lemma1Dims> {
    if n < 1 || m < n {
        return Err(Error::Domain("dimension count needs m >= n >= 1"));
    }
    if k < 2 {
        return Err(Error::Domain("dimension count needs k >= 2"));
    }
    let excess = BigInt::from(m - n);
    let dim_jet = &excess
        * BigInt::from(n)
        * num_integer::binomial(BigInt::from(m + k - 1), BigInt::from(k - 1));
    let table = WittTable::new(n, k)?;
    let mut sum = BigInt::zero();
    for i in 2..=k {
        sum += table.dim(i);
    }
    let dim_mat = &excess * sum;
    let surjective_possible = dim_jet >= dim_mat;
    Ok(Lemma1Dims {
        dim_jet,
        dim_mat,
        surjective_possible,
    })
}

/// Whether the k-th evaluation map is never onto: true iff (n ≥ 3 and k ≥ 4)
/// or (n = 2 and k ≥ 5).
pub fn lemma2_onto_obstruction(n: u64, k: u64) -> Result<bool> {
    if n < 2 || k < 2 {
        return Err(Error::Domain("obstruction predicate needs n >= 2 and k >= 2"));
    }
    Ok(if n >= 3 { k >= 4 } else { k >= 5 })
}

/// One row of the Witt-growth comparison: lhs > rhs is the claimed bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma4Row {
    pub k: u64,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub holds: bool,
}

/// For n ≥ 3 compare d(n,k+1) with ∂(n,k); for n = 2 compare
/// d(2,k+1) + d(2,k+2) with ∂(2,k). Rows report; nothing is asserted here
/// (the n = 3, k = 1 row is an equality and genuinely fails).
pub fn lemma4_check(n: u64, kmax: u64) -> Result<Vec<Lemma4Row>> {
    if n < 2 {
        return Err(Error::Domain("Witt-growth comparison needs n >= 2"));
    }
    if kmax < 1 {
        return Err(Error::Domain("Witt-growth comparison needs kmax >= 1"));
    }
    let table = WittTable::new(n, kmax + 2)?;
    (1..=kmax)
        .map(|k| {
            let lhs = if n == 2 {
                table.dim(k + 1) + table.dim(k + 2)
            } else {
                table.dim(k + 1).clone()
            };
            let rhs = table.partial(k).clone();
            Ok(Lemma4Row {
                k,
                holds: lhs > rhs,
                lhs,
                rhs,
            })
        })
        .collect()
}

/// Charge `amount` against a work budget; `TooLarge` when exhausted.
fn spend(budget: &mut u64, amount: u64) -> Result<()> {
    if *budget < amount {
        return Err(Error::TooLarge);
    }
    *budget -= amount;
    Ok(())
}

/// p with ∂(n,p) ≤ m < ∂(n,p+1), the first stage j* with ∂(n,j*) ≥ 2m, and a
/// Witt table large enough for every walk below.
fn stage_bounds(n: u32, m: u32) -> Result<(u64, u64, WittTable)> {
    if n < 1 || m < n {
        return Err(Error::Domain("stratum enumeration needs m >= n >= 1"));
    }
    let target = BigInt::from(2 * m as u64);
    let cap_m = BigInt::from(m as u64);
    let mut p = 1u64;
    let mut q = 1u64;
    let jstar = loop {
        let pa = witt_partial(n as u64, q)?;
        if pa <= cap_m {
            p = q;
        }
        if pa >= target {
            break q;
        }
        q += 1;
        if q > 128 {
            return Err(Error::TooLarge);
        }
    };
    let table = WittTable::new(n as u64, jstar + 3)?;
    Ok((p, jstar, table))
}

/// Window length for the brute-force oracles: a canonical vector open at
/// position j has cd ≥ ∂(n,j) − m + 1, so admissible strata close by the
/// first stage j* with ∂(n,j*) ≥ 2m and bounding strata one step later.
pub fn oracle_window(n: u32, m: u32) -> Result<u32> {
    let (_, jstar, _) = stage_bounds(n, m)?;
    Ok((jstar + 1) as u32)
}

/// Realize a defect prescription as the canonical growth vector that closes
/// at m. `delta[i-1]` is the prescribed corank increment at position i (zero
/// beyond the slice). Returns `None` when no canonical valid vector carries
/// exactly this rank-drop pattern: an increment exceeding d(n,i), a drop that
/// no longer fits below m, or a prescription after the closing position. A
/// prescribed drop at the exact closing position is legal; the canonical
/// defect then ends in the fiat zero.
fn realize_prescription(
    table: &WittTable,
    n: u32,
    m: u32,
    delta: &[u64],
) -> Result<Option<(DefectVector, GrowthVector)>> {
    if m == n {
        if delta.iter().any(|&d| d != 0) {
            return Ok(None);
        }
        let g = validate_growth(&[n], n, m)?;
        return Ok(Some((DefectVector { entries: vec![0] }, g)));
    }
    let mut r: Vec<u32> = vec![n];
    let mut c = 0u64;
    let mut i = 2u64;
    loop {
        if i > table.kmax() {
            return Err(Error::Internal("defect walk failed to close"));
        }
        let d_i = delta.get(i as usize - 1).copied().unwrap_or(0);
        let c_new = c + d_i;
        let rho = table.partial_u64(i)? as i128 - c_new as i128;
        if rho < *r.last().unwrap() as i128 {
            return Ok(None); // increment would exceed d(n,i)
        }
        if rho >= m as i128 {
            if d_i > 0 && rho > m as i128 {
                return Ok(None); // the prescribed drop no longer fits below m
            }
            if delta.len() as u64 > i && delta[i as usize..].iter().any(|&d| d > 0) {
                return Ok(None); // prescription after the closing position
            }
            let mut entries = Vec::with_capacity(i as usize);
            entries.push(0);
            for j in 2..i {
                entries.push(delta.get(j as usize - 1).copied().unwrap_or(0));
            }
            entries.push(0);
            r.push(m);
            let g = validate_growth(&r, n, m)
                .map_err(|_| Error::Internal("realized growth vector is invalid"))?;
            return Ok(Some((DefectVector { entries }, g)));
        }
        r.push(rho as u32);
        c = c_new;
        i += 1;
    }
}

/// Template family of an enumerated defect vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TemplateCase {
    /// Single 1 at l < p, χ at p.
    A,
    /// Single 1 at l < p, χ at p+1.
    B,
    /// χ at p and ν at p+1 (all-zero is the χ=ν=0 degenerate).
    C,
    /// Two single 1s before p (bounding only).
    D,
    /// A single 2 before p (bounding only).
    E,
}

impl TemplateCase {
    pub fn letter(self) -> char {
        match self {
            TemplateCase::A => 'a',
            TemplateCase::B => 'b',
            TemplateCase::C => 'c',
            TemplateCase::D => 'd',
            TemplateCase::E => 'e',
        }
    }
}

/// One potentially admissible defect vector with its template parameters,
/// realized growth vector and expected codimension.
#[derive(Clone, Debug)]
pub struct AdmissibleEntry {
    pub case: TemplateCase,
    pub l: Option<u32>,
    pub chi: u64,
    pub nu: u64,
    pub defect: DefectVector,
    pub growth: GrowthVector,
    pub cd: u64,
    /// True when the canonical vector closes at or before position p (when
    /// m = ∂(n,p) the template positions at p, p+1 collapse into the close).
    pub collapsed: bool,
}

fn admit(
    out: &mut BTreeMap<DefectVector, AdmissibleEntry>,
    table: &WittTable,
    n: u32,
    m: u32,
    p: u64,
    case: TemplateCase,
    l: Option<u32>,
    chi: u64,
    nu: u64,
    delta: &[u64],
) -> Result<()> {
    if let Some((defect, growth)) = realize_prescription(table, n, m, delta)? {
        let cd = young_diagrams(&growth)?.cd;
        if cd > m as u64 {
            return Err(Error::Internal(
                "admissible template realized a codimension above m",
            ));
        }
        let collapsed = defect.len() as u64 <= p;
        out.entry(defect.clone()).or_insert(AdmissibleEntry {
            case,
            l,
            chi,
            nu,
            defect,
            growth,
            cd,
            collapsed,
        });
    }
    Ok(())
}

/// Closed-form enumeration of all potentially admissible defect vectors for
/// n ≥ 3, deduplicated and ordered lexicographically. Each template instance
/// is realized through the canonical-completion walk, so vectors that close
/// early (absorbing a drop at the closing position) collapse onto their
/// canonical representative.
pub fn enumerate_admissible_defects(
    n: u32,
    m: u32,
    max_cells: u64,
) -> Result<Vec<AdmissibleEntry>> {
    if n < 3 {
        return Err(Error::UnsupportedParameter(
            "closed-form defect enumeration needs n >= 3; use the oracle",
        ));
    }
    let (p, _, table) = stage_bounds(n, m)?;
    let d_p = table.dim_u64(p)?;
    let d_p1 = table.dim_u64(p + 1)?;
    let pa_p = table.partial_u64(p)? as i128;
    let pa_p1 = table.partial_u64(p + 1)? as i128;
    let mi = m as i128;
    let mut budget = max_cells;
    let mut out: BTreeMap<DefectVector, AdmissibleEntry> = BTreeMap::new();

    // case a: 1 at l, chi at p, with (m - ∂(n,p) + 1 + chi)·chi ≤ ∂(n,l) - 1
    for l in 2..p {
        let pa_l = table.partial_u64(l)? as i128;
        for chi in 0..=d_p {
            spend(&mut budget, 1)?;
            if (mi - pa_p + 1 + chi as i128) * chi as i128 > pa_l - 1 {
                continue;
            }
            let mut delta = vec![0u64; (p + 2) as usize];
            delta[(l - 1) as usize] = 1;
            delta[(p - 1) as usize] = chi;
            admit(&mut out, &table, n, m, p, TemplateCase::A, Some(l as u32), chi, 0, &delta)?;
        }
    }
    // case b: 1 at l, chi at p+1, with (m - ∂(n,p+1) + 1 + chi)·chi ≤ ∂(n,l) - 1
    // and, for chi > 0, the drop must actually occur: chi + 1 + m - ∂(n,p+1) ≥ 0
    for l in 2..p {
        let pa_l = table.partial_u64(l)? as i128;
        for chi in 0..=d_p1 {
            spend(&mut budget, 1)?;
            if chi > 0 && chi as i128 + 1 + mi - pa_p1 < 0 {
                continue;
            }
            if (mi - pa_p1 + 1 + chi as i128) * chi as i128 > pa_l - 1 {
                continue;
            }
            let mut delta = vec![0u64; (p + 2) as usize];
            delta[(l - 1) as usize] = 1;
            delta[p as usize] = chi;
            admit(&mut out, &table, n, m, p, TemplateCase::B, Some(l as u32), chi, 0, &delta)?;
        }
    }
    // case c: chi at p, nu at p+1, with
    // (m - ∂(n,p) + chi)·chi + (m - ∂(n,p+1) + chi + nu)·nu ≤ m
    // and, for nu > 0, m - ∂(n,p+1) + chi + nu ≥ 0. Position 1 carries no
    // defect by definition, so chi = 0 when p = 1.
    let chi_cap = if p >= 2 { d_p } else { 0 };
    for chi in 0..=chi_cap {
        for nu in 0..=d_p1 {
            spend(&mut budget, 1)?;
            if nu > 0 && mi - pa_p1 + chi as i128 + (nu as i128) < 0 {
                continue;
            }
            let lhs = (mi - pa_p + chi as i128) * chi as i128
                + (mi - pa_p1 + chi as i128 + nu as i128) * nu as i128;
            if lhs > mi {
                continue;
            }
            let mut delta = vec![0u64; (p + 2) as usize];
            delta[(p - 1) as usize] = chi;
            delta[p as usize] = nu;
            admit(&mut out, &table, n, m, p, TemplateCase::C, None, chi, nu, &delta)?;
        }
    }
    Ok(out.into_values().collect())
}

/// One potentially bounding defect vector with its template parameters.
#[derive(Clone, Debug)]
pub struct BoundingEntry {
    pub case: TemplateCase,
    pub l1: Option<u32>,
    pub l2: Option<u32>,
    pub chi: u64,
    pub nu: u64,
    pub defect: DefectVector,
    pub growth: GrowthVector,
    pub cd: u64,
}

/// Scan all strictly shallower valid vectors (componentwise ≥ the canonical
/// vector, same length, last entry m) and report whether every one of them,
/// after canonical truncation, has cd ≤ m.
fn all_shallowings_admissible(g: &GrowthVector, budget: &mut u64) -> Result<bool> {
    let n = g.n();
    let m = g.m();
    let k = g.k();
    let gr = g.entries();
    let table = WittTable::new(n as u64, k as u64)?;
    let mut dvals = vec![0u64; k + 1];
    for j in 2..=k {
        dvals[j] = table.dim_u64(j as u64)?;
    }
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut stack: Vec<Vec<u32>> = vec![vec![n]];
    while let Some(v) = stack.pop() {
        spend(budget, 1)?;
        if v.len() == k {
            if *v.last().unwrap() != m || v.as_slice() == gr {
                continue;
            }
            let cut = v.iter().position(|&x| x == m).unwrap();
            let canon = v[..=cut].to_vec();
            if !seen.insert(canon.clone()) {
                continue;
            }
            let cg = validate_growth(&canon, n, m)?;
            if young_diagrams(&cg)?.cd > m as u64 {
                return Ok(false);
            }
            continue;
        }
        let pos = v.len() + 1;
        let prev = *v.last().unwrap();
        let lo = prev.max(gr[v.len()]);
        let hi = ((prev as u64 + dvals[pos]).min(m as u64)) as u32;
        for val in lo..=hi {
            let mut w = v.clone();
            w.push(val);
            stack.push(w);
        }
    }
    Ok(true)
}

/// Closed-form enumeration of potentially bounding defect vectors for n ≥ 3:
/// the admissible template shapes with minimal-violator parameters (the
/// inequalities fail, but hold for every componentwise smaller realizable
/// choice), plus two single 1s before p and a single 2 before p. Every
/// candidate is realized, required to have cd > m, and checked against the
/// definition (all strictly shallower strata admissible); candidates whose
/// closure meets a deeper non-admissible stratum are dropped.
pub fn enumerate_bounding_defects(n: u32, m: u32, max_cells: u64) -> Result<Vec<BoundingEntry>> {
    if n < 3 {
        return Err(Error::UnsupportedParameter(
            "closed-form defect enumeration needs n >= 3; use the oracle",
        ));
    }
    let (p, _, table) = stage_bounds(n, m)?;
    let d_p = table.dim_u64(p)?;
    let d_p1 = table.dim_u64(p + 1)?;
    let pa_p = table.partial_u64(p)? as i128;
    let pa_p1 = table.partial_u64(p + 1)? as i128;
    let mi = m as i128;
    let mut budget = max_cells;

    struct Candidate {
        case: TemplateCase,
        l1: Option<u32>,
        l2: Option<u32>,
        chi: u64,
        nu: u64,
        delta: Vec<u64>,
    }
    let mut candidates: Vec<Candidate> = Vec::new();

    // cases a and b: for fixed l the inequality left side is monotone in chi
    // past the side condition, so the minimal violator is the first one.
    for l in 2..p {
        let pa_l = table.partial_u64(l)? as i128;
        for chi in 0..=d_p {
            spend(&mut budget, 1)?;
            if (mi - pa_p + 1 + chi as i128) * chi as i128 > pa_l - 1 {
                let mut delta = vec![0u64; (p + 2) as usize];
                delta[(l - 1) as usize] = 1;
                delta[(p - 1) as usize] = chi;
                candidates.push(Candidate {
                    case: TemplateCase::A,
                    l1: Some(l as u32),
                    l2: None,
                    chi,
                    nu: 0,
                    delta,
                });
                break;
            }
        }
        for chi in 0..=d_p1 {
            spend(&mut budget, 1)?;
            if chi > 0 && chi as i128 + 1 + mi - pa_p1 < 0 {
                continue; // the second drop cannot occur; not a violator
            }
            if (mi - pa_p1 + 1 + chi as i128) * chi as i128 > pa_l - 1 {
                let mut delta = vec![0u64; (p + 2) as usize];
                delta[(l - 1) as usize] = 1;
                delta[p as usize] = chi;
                candidates.push(Candidate {
                    case: TemplateCase::B,
                    l1: Some(l as u32),
                    l2: None,
                    chi,
                    nu: 0,
                    delta,
                });
                break;
            }
        }
    }
    // case c: componentwise-minimal violators over the (chi, nu) grid.
    let chi_cap = if p >= 2 { d_p } else { 0 };
    let cols = (d_p1 + 1) as usize;
    let rows = (chi_cap + 1) as usize;
    spend(&mut budget, (rows * cols) as u64)?;
    let violator = |chi: u64, nu: u64| -> bool {
        if nu > 0 && mi - pa_p1 + chi as i128 + (nu as i128) < 0 {
            return false; // unrealizable as a two-drop pattern
        }
        (mi - pa_p + chi as i128) * chi as i128
            + (mi - pa_p1 + chi as i128 + nu as i128) * nu as i128
            > mi
    };
    // prefix[x][y]: any violator with chi ≤ x and nu ≤ y
    let mut prefix = vec![vec![false; cols]; rows];
    for chi in 0..rows {
        for nu in 0..cols {
            let v = violator(chi as u64, nu as u64);
            let above = chi > 0 && prefix[chi - 1][nu];
            let left = nu > 0 && prefix[chi][nu - 1];
            prefix[chi][nu] = v || above || left;
            if v && !above && !left {
                let mut delta = vec![0u64; (p + 2) as usize];
                delta[(p - 1) as usize] = chi as u64;
                delta[p as usize] = nu as u64;
                candidates.push(Candidate {
                    case: TemplateCase::C,
                    l1: None,
                    l2: None,
                    chi: chi as u64,
                    nu: nu as u64,
                    delta,
                });
            }
        }
    }
    // case d: two single 1s before p
    for l1 in 2..p {
        for l2 in l1 + 1..p {
            spend(&mut budget, 1)?;
            let mut delta = vec![0u64; (p + 2) as usize];
            delta[(l1 - 1) as usize] = 1;
            delta[(l2 - 1) as usize] = 1;
            candidates.push(Candidate {
                case: TemplateCase::D,
                l1: Some(l1 as u32),
                l2: Some(l2 as u32),
                chi: 0,
                nu: 0,
                delta,
            });
        }
    }
    // case e: a single 2 before p
    for l in 2..p {
        spend(&mut budget, 1)?;
        let mut delta = vec![0u64; (p + 2) as usize];
        delta[(l - 1) as usize] = 2;
        candidates.push(Candidate {
            case: TemplateCase::E,
            l1: Some(l as u32),
            l2: None,
            chi: 0,
            nu: 0,
            delta,
        });
    }

    let mut out: BTreeMap<DefectVector, BoundingEntry> = BTreeMap::new();
    for cand in candidates {
        let Some((defect, growth)) = realize_prescription(&table, n, m, &cand.delta)? else {
            continue;
        };
        let cd = young_diagrams(&growth)?.cd;
        if cd <= m as u64 {
            continue; // collapsed onto an admissible stratum
        }
        if !all_shallowings_admissible(&growth, &mut budget)? {
            continue; // a shallower stratum is already non-admissible
        }
        out.entry(defect.clone()).or_insert(BoundingEntry {
            case: cand.case,
            l1: cand.l1,
            l2: cand.l2,
            chi: cand.chi,
            nu: cand.nu,
            defect,
            growth,
            cd,
        });
    }
    Ok(out.into_values().collect())
}

/// All canonical growth vectors reachable in a length-k window with r_k = m
/// (vectors that hit m early are truncated to their canonical form).
fn canonical_strata(
    n: u32,
    m: u32,
    k: u32,
    budget: &mut u64,
) -> Result<BTreeSet<Vec<u32>>> {
    if k == 0 {
        return Err(Error::Domain("oracle window must be at least 1"));
    }
    if m < n || n < 1 {
        return Err(Error::Domain("stratum enumeration needs m >= n >= 1"));
    }
    let kk = k as usize;
    let table = WittTable::new(n as u64, k as u64)?;
    let mut dvals = vec![0u64; kk + 1];
    for j in 2..=kk {
        dvals[j] = table.dim_u64(j as u64)?;
    }
    // reach[pos]: the most the remaining increments after position pos can add
    let mut reach = vec![0u64; kk + 2];
    for pos in (1..kk).rev() {
        reach[pos] = reach[pos + 1].saturating_add(dvals[pos + 1]);
    }
    let mut out = BTreeSet::new();
    let mut stack: Vec<Vec<u32>> = Vec::new();
    if (n as u64) + reach[1] >= m as u64 {
        stack.push(vec![n]);
    }
    while let Some(v) = stack.pop() {
        spend(budget, 1)?;
        if v.len() == kk {
            if *v.last().unwrap() == m {
                let cut = v.iter().position(|&x| x == m).unwrap();
                out.insert(v[..=cut].to_vec());
            }
            continue;
        }
        let pos = v.len() + 1;
        let prev = *v.last().unwrap();
        let hi = ((prev as u64 + dvals[pos]).min(m as u64)) as u32;
        for val in prev..=hi {
            if (val as u64) + reach[pos] < m as u64 {
                continue;
            }
            let mut w = v.clone();
            w.push(val);
            stack.push(w);
        }
    }
    Ok(out)
}

/// Brute-force set of potentially admissible defect vectors: every canonical
/// stratum in the window with cd ≤ m, keyed by its defect vector.
pub fn oracle_admissible_defects(
    n: u32,
    m: u32,
    k: u32,
    max_cells: u64,
) -> Result<BTreeSet<DefectVector>> {
    let mut budget = max_cells;
    let strata = canonical_strata(n, m, k, &mut budget)?;
    let mut out = BTreeSet::new();
    for s in strata {
        let g = validate_growth(&s, n, m)?;
        if young_diagrams(&g)?.cd <= m as u64 {
            out.insert(defect(&g)?);
        }
    }
    Ok(out)
}

/// Brute-force set of potentially bounding defect vectors: canonical strata
/// with cd > m all of whose strictly shallower strata are admissible.
pub fn oracle_bounding_defects(
    n: u32,
    m: u32,
    k: u32,
    max_cells: u64,
) -> Result<BTreeSet<DefectVector>> {
    let mut budget = max_cells;
    let strata = canonical_strata(n, m, k, &mut budget)?;
    let mut out = BTreeSet::new();
    for s in strata {
        let g = validate_growth(&s, n, m)?;
        if young_diagrams(&g)?.cd <= m as u64 {
            continue;
        }
        if all_shallowings_admissible(&g, &mut budget)? {
            out.insert(defect(&g)?);
        }
    }
    Ok(out)
}

/// Admissibility label of a stratum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StratumLabel {
    PotentiallyAdmissible,
    PotentiallyBounding,
    Neither,
}

/// Classification of a single stratum: its label, expected codimension and
/// the ambient dimension the comparison ran against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumClassification {
    pub label: StratumLabel,
    pub cd: u64,
    pub m: u32,
}

/// Classify the stratum of a growth vector (canonicalized first):
/// potentially admissible when cd ≤ m, potentially bounding when cd > m but
/// every strictly shallower stratum is admissible, neither otherwise.
pub fn classify_growth(g: &GrowthVector, max_cells: u64) -> Result<StratumClassification> {
    let canon = g.canonical();
    let cd = young_diagrams(&canon)?.cd;
    let label = if cd <= g.m() as u64 {
        StratumLabel::PotentiallyAdmissible
    } else {
        let mut budget = max_cells;
        if all_shallowings_admissible(&canon, &mut budget)? {
            StratumLabel::PotentiallyBounding
        } else {
            StratumLabel::Neither
        }
    };
    Ok(StratumClassification {
        label,
        cd,
        m: g.m(),
    })
}
