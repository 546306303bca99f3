//! Free Lie algebra combinatorics and the classes of its graded pieces.
//!
//! For a rank-n bundle E, the free Lie algebra on E splits into graded pieces
//! 𝔏ᵏ of rank the Witt number d(n,k) = (1/k) Σ_{d|k} μ(d) n^{k/d}. Fibrewise,
//! a Hall basis indexes a basis of 𝔏ᵏ by bracket trees; we generate the Hall
//! family whose order is: shorter words first, then recursive lexicographic
//! comparison of (left, right). A bracket (x,y) belongs to the family iff x
//! and y do, x < y, and y is either a leaf or its left factor satisfies
//! left(y) ≤ x.
//!
//! The character of 𝔏ᵏ is computed from ch(E) by Möbius inversion of the
//! necklace/PBW identity:
//!
//! ch(𝔏ᵏ) = (1/k) Σ_{d|k} μ(d) · ((ch E)^{k/d})_d
//!
//! where (·)_d is the weight rescaling η ↦ Σ η_j d^j. Total classes follow
//! through the Newton identities and are integral; mod 2 they become
//! Stiefel-Whitney classes.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::bundle::{char_to_class, class_to_char, ChernCharacter, FormalBundle};
use crate::ring::{Family, Field, GradedSeries, Generator, Subst};
use crate::{Error, Result, DEFAULT_MAX_CELLS};

/// Möbius function μ(d); `Domain` for d = 0.
pub fn moebius(d: u64) -> Result<i64> {
    if d == 0 {
        return Err(Error::Domain("moebius is defined for d >= 1"));
    }
    let mut n = d;
    let mut primes = 0u32;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return Ok(0); // square factor
            }
            primes += 1;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        primes += 1;
    }
    Ok(if primes % 2 == 0 { 1 } else { -1 })
}

fn divisors(k: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= k {
        if k % d == 0 {
            small.push(d);
            if d != k / d {
                large.push(k / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Witt dimension d(n,k) = (1/k) Σ_{d|k} μ(d) n^{k/d}: the rank of the k-th
/// graded piece of the free Lie algebra on n generators.
pub fn witt_dim(n: u64, k: u64) -> Result<BigInt> {
    if n == 0 || k == 0 {
        return Err(Error::Domain("witt_dim needs n >= 1 and k >= 1"));
    }
    let big_n = BigInt::from(n);
    let mut sum = BigInt::zero();
    for d in divisors(k) {
        let mu = moebius(d)?;
        if mu == 0 {
            continue;
        }
        sum += BigInt::from(mu) * big_n.pow((k / d) as u32);
    }
    let (q, r) = sum.div_rem(&BigInt::from(k));
    if !r.is_zero() {
        return Err(Error::Internal("necklace sum not divisible by k"));
    }
    Ok(q)
}

/// Partial sum ∂(n,k) = Σ_{i=1}^{k} d(n,i): the rank of the k-th piece of the
/// lower central series filtration.
pub fn witt_partial(n: u64, k: u64) -> Result<BigInt> {
    if n == 0 || k == 0 {
        return Err(Error::Domain("witt_partial needs n >= 1 and k >= 1"));
    }
    let mut sum = BigInt::zero();
    for i in 1..=k {
        sum += witt_dim(n, i)?;
    }
    Ok(sum)
}

/// Precomputed Witt dimensions and partial sums for 1 ≤ k ≤ kmax.
#[derive(Clone, Debug)]
pub struct WittTable {
    n: u64,
    dims: Vec<BigInt>,
    partials: Vec<BigInt>,
}

impl WittTable {
    pub fn new(n: u64, kmax: u64) -> Result<WittTable> {
        if n == 0 || kmax == 0 {
            return Err(Error::Domain("witt table needs n >= 1 and kmax >= 1"));
        }
        let mut dims = Vec::with_capacity(kmax as usize);
        let mut partials = Vec::with_capacity(kmax as usize);
        let mut acc = BigInt::zero();
        for k in 1..=kmax {
            let d = witt_dim(n, k)?;
            acc += &d;
            dims.push(d);
            partials.push(acc.clone());
        }
        Ok(WittTable { n, dims, partials })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn kmax(&self) -> u64 {
        self.dims.len() as u64
    }

    pub fn dim(&self, k: u64) -> &BigInt {
        &self.dims[(k - 1) as usize]
    }

    pub fn partial(&self, k: u64) -> &BigInt {
        &self.partials[(k - 1) as usize]
    }

    /// d(n,k) as u64; `TooLarge` if it does not fit.
    pub fn dim_u64(&self, k: u64) -> Result<u64> {
        self.dim(k).to_u64().ok_or(Error::TooLarge)
    }

    /// ∂(n,k) as u64; `TooLarge` if it does not fit.
    pub fn partial_u64(&self, k: u64) -> Result<u64> {
        self.partial(k).to_u64().ok_or(Error::TooLarge)
    }
}

/// A Hall word: a leaf (generator index) or a bracket of two Hall words.
/// `rank` is the word's 0-based position in the global order; since words are
/// only created by [`hall_basis`] in order, comparisons reduce to ranks.
#[derive(Debug)]
pub struct HallWord {
    node: Node,
    length: u32,
    rank: u32,
}

#[derive(Debug)]
enum Node {
    Leaf(u32),
    Pair(Arc<HallWord>, Arc<HallWord>),
}

impl HallWord {
    pub fn length(&self) -> u32 {
        self.length
    }

    /// Position in the global order (0-based, across all lengths).
    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self.node, Node::Leaf(_))
    }

    /// Leaf index (0-based) for leaves, `None` for brackets.
    pub fn leaf_index(&self) -> Option<u32> {
        match self.node {
            Node::Leaf(i) => Some(i),
            Node::Pair(..) => None,
        }
    }

    /// Left and right factors for brackets, `None` for leaves.
    pub fn factors(&self) -> Option<(&Arc<HallWord>, &Arc<HallWord>)> {
        match &self.node {
            Node::Leaf(_) => None,
            Node::Pair(l, r) => Some((l, r)),
        }
    }

    /// Maximal nesting of parentheses around a leaf in the printed word
    /// (0 for a bare leaf).
    pub fn raw_paren_depth(&self) -> u32 {
        match &self.node {
            Node::Leaf(_) => 0,
            Node::Pair(l, r) => 1 + l.raw_paren_depth().max(r.raw_paren_depth()),
        }
    }

    /// Depth statistic: raw parenthesis nesting plus one, so that a bare
    /// bracket has depth 2 and the right comb of length p has depth p. For
    /// words of length p the depth ranges over [log2 p] + 1 ..= p.
    pub fn depth(&self) -> u32 {
        self.raw_paren_depth() + 1
    }
}

/// Hall basis levels H^1, ..., H^kmax for the free Lie algebra on n
/// generators, in the global order.
#[derive(Debug)]
pub struct HallBasis {
    n: u32,
    levels: Vec<Vec<Arc<HallWord>>>,
}

impl HallBasis {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn kmax(&self) -> u32 {
        self.levels.len() as u32
    }

    /// Words of length k, in order.
    pub fn level(&self, k: u32) -> &[Arc<HallWord>] {
        &self.levels[(k - 1) as usize]
    }

    /// All words in global order.
    pub fn iter(&self) -> impl Iterator<Item = &Arc<HallWord>> {
        self.levels.iter().flatten()
    }
}

/// Generate the Hall basis through length `kmax` with the default size cap.
pub fn hall_basis(n: u32, kmax: u32) -> Result<HallBasis> {
    hall_basis_capped(n, kmax, DEFAULT_MAX_CELLS)
}

/// Generate the Hall basis through length `kmax`; fails with `TooLarge` when
/// the total number of words Σ d(n,k) would exceed `max_cells`.
pub fn hall_basis_capped(n: u32, kmax: u32, max_cells: u64) -> Result<HallBasis> {
    if n == 0 || kmax == 0 {
        return Err(Error::Domain("hall_basis needs n >= 1 and kmax >= 1"));
    }
    let table = WittTable::new(n as u64, kmax as u64)?;
    if table.partial(kmax as u64) > &BigInt::from(max_cells) {
        return Err(Error::TooLarge);
    }

    let mut levels: Vec<Vec<Arc<HallWord>>> = Vec::with_capacity(kmax as usize);
    let mut next_rank = 0u32;
    let leaves: Vec<Arc<HallWord>> = (0..n)
        .map(|i| {
            let w = Arc::new(HallWord {
                node: Node::Leaf(i),
                length: 1,
                rank: next_rank,
            });
            next_rank += 1;
            w
        })
        .collect();
    levels.push(leaves);

    for k in 2..=kmax {
        // candidate pairs (x, y): length(x) + length(y) = k, x < y, and y is
        // a leaf or left(y) <= x; x < y forces length(x) <= length(y)
        let mut cands: Vec<(u32, u32, Arc<HallWord>, Arc<HallWord>)> = Vec::new();
        for a in 1..=(k / 2) {
            let b = k - a;
            for y in &levels[(b - 1) as usize] {
                let min_x_rank = match &y.node {
                    Node::Leaf(_) => 0,
                    Node::Pair(l, _) => l.rank,
                };
                for x in &levels[(a - 1) as usize] {
                    if x.rank < min_x_rank || x.rank >= y.rank {
                        continue;
                    }
                    cands.push((x.rank, y.rank, Arc::clone(x), Arc::clone(y)));
                }
            }
        }
        // within one length, the recursive-lex order is rank-lex on (x, y)
        cands.sort_unstable_by_key(|&(xr, yr, _, _)| (xr, yr));
        let level: Vec<Arc<HallWord>> = cands
            .into_iter()
            .map(|(_, _, x, y)| {
                let w = Arc::new(HallWord {
                    node: Node::Pair(x, y),
                    length: k,
                    rank: next_rank,
                });
                next_rank += 1;
                w
            })
            .collect();
        levels.push(level);
    }
    Ok(HallBasis { n, levels })
}

/// Number of maximal-depth words: ♯_k(n) = Σ_{j=0}^{n−1} C(j+k−2, j) · j for
/// k ≥ 2 (`Domain` for k < 2). These are the words of depth k in H^k.
pub fn count_max_depth(n: u64, k: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Domain("count_max_depth needs n >= 1"));
    }
    if k < 2 {
        return Err(Error::Domain("count_max_depth is defined for k >= 2"));
    }
    let mut sum = BigInt::zero();
    for j in 0..n {
        sum += num_integer::binomial(BigInt::from(j + k - 2), BigInt::from(j)) * BigInt::from(j);
    }
    Ok(sum)
}

/// Character of the k-th graded piece 𝔏ᵏ of the free Lie algebra on a bundle
/// with character `ch`, via Möbius inversion:
/// ch(𝔏ᵏ) = (1/k) Σ_{d|k} μ(d) ((ch)^{k/d})_d.
pub fn lie_char(ch: &ChernCharacter, k: u32) -> Result<ChernCharacter> {
    if k == 0 {
        return Err(Error::Domain("lie_char needs k >= 1"));
    }
    let order = ch.order();
    let mut sum = GradedSeries::zero(Field::Q, order);
    for d in divisors(k as u64) {
        let mu = moebius(d)?;
        if mu == 0 {
            continue;
        }
        let power = ch.series().pow((k as u64 / d) as u32);
        let rescaled = power.rescale(&BigRational::from_integer(BigInt::from(d)))?;
        sum = sum.add(&rescaled.mul_scalar(&BigRational::from_integer(BigInt::from(mu))))?;
    }
    let result = sum.mul_scalar(&BigRational::new(BigInt::one(), BigInt::from(k)));
    ChernCharacter::new(result)
}

/// Universal total class of 𝔏ᵏ for a rank-n bundle with Chern classes
/// c_1, ..., c_order kept symbolic (the rank enters only through the
/// weight-0 character). All coefficients are integers; a non-integral
/// coefficient would be a bug and surfaces as `Internal`.
pub fn lie_total_class(n: u32, k: u32, order: u32) -> Result<GradedSeries> {
    if n == 0 {
        return Err(Error::Domain("lie_total_class needs n >= 1"));
    }
    let mut class = GradedSeries::one(Field::Q, order);
    for i in 1..=order {
        class = class.add(&GradedSeries::generator(
            Field::Q,
            order,
            Generator::new(Family::C, i),
        ))?;
    }
    let e = FormalBundle::new(n as i64, class)?;
    let ch = class_to_char(&e)?;
    let lch = lie_char(&ch, k)?;
    let total = char_to_class(&lch)?;
    if !total.class().is_integral() {
        return Err(Error::Internal("total class of a Lie piece must be integral"));
    }
    Ok(total.class().clone())
}

/// Total class of 𝔏ᵏ for an honest rank-n bundle: the universal class with
/// c_j = 0 for j > n. Stays over ℚ.
pub fn lie_class_honest(n: u32, k: u32, order: u32) -> Result<GradedSeries> {
    let universal = lie_total_class(n, k, order)?;
    let mut images: BTreeMap<Generator, Subst> = BTreeMap::new();
    for j in (n + 1)..=order {
        images.insert(
            Generator::new(Family::C, j),
            Subst::Scalar(BigRational::zero()),
        );
    }
    universal.substitute(&images)
}

/// Stiefel-Whitney class of 𝔏ᵏ for an honest rank-n bundle: the honest total
/// class reduced mod 2 with generators retagged c → `family`.
pub fn lie_sw_class(n: u32, k: u32, order: u32, family: Family) -> Result<GradedSeries> {
    let honest = lie_class_honest(n, k, order)?;
    let mut retag = BTreeMap::new();
    retag.insert(Family::C, family);
    honest.reduce_mod2(&retag)
}
