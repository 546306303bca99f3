//! Acceptance suites. Each criterion is a function returning `Ok(detail)` on
//! pass or `Err(diff)` on failure; the binary's `check` subcommand and the
//! `acceptance` integration test both print one line per criterion from
//! these. Expected values here are frozen independently of the core crate:
//! the class tables as coefficient polynomials in n, the Hall words as
//! strings, the defect sets as literal vectors.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use liegiambelli_core::bundle::{
    class_to_char, char_to_class, symmetric_series, ChernCharacter, FormalBundle, TruncatedPoly,
};
use liegiambelli_core::degeneracy::{
    giambelli_class, validate_growth, young_diagrams, GiambelliForm, GrowthVector,
};
use liegiambelli_core::free_lie::{
    count_max_depth, hall_basis, lie_char, lie_total_class, witt_dim, WittTable,
};
use liegiambelli_core::render::{render_hall_word, render_series, RenderStyle};
use liegiambelli_core::ring::{Family, Field, GradedSeries, Generator, Monomial};
use liegiambelli_core::strata::{
    enumerate_admissible_defects, lemma1_dims, lemma4_check, oracle_admissible_defects,
    oracle_window, DefectVector,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Outcome of one criterion run.
pub struct CriterionResult {
    pub index: usize,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {} ({}): {} — {}",
            self.index,
            self.name,
            if self.pass { "PASS" } else { "FAIL" },
            self.detail
        )
    }
}

pub const SUITE_NAMES: [&str; 10] = [
    "worked-examples",
    "class-tables",
    "integrality",
    "hall-witt",
    "pbw",
    "duality",
    "depth-counts",
    "dimension-bounds",
    "defect-enumeration",
    "ring-properties",
];

/// Resolve a suite argument: a name from [`SUITE_NAMES`] or an index 1–10.
pub fn suite_index(arg: &str) -> Option<usize> {
    if let Ok(i) = arg.parse::<usize>() {
        return (1..=SUITE_NAMES.len()).contains(&i).then_some(i);
    }
    SUITE_NAMES.iter().position(|n| *n == arg).map(|p| p + 1)
}

pub fn run_criterion(index: usize, max_cells: u64) -> CriterionResult {
    let outcome = match index {
        1 => worked_examples(),
        2 => class_tables(),
        3 => integrality(),
        4 => hall_witt(),
        5 => pbw(),
        6 => duality(),
        7 => depth_counts(),
        8 => dimension_bounds(),
        9 => defect_enumeration(max_cells),
        10 => ring_properties(),
        _ => Err(format!("no criterion {index}")),
    };
    let (pass, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionResult {
        index,
        name: SUITE_NAMES.get(index - 1).copied().unwrap_or("unknown"),
        pass,
        detail,
    }
}

pub fn run_all(max_cells: u64) -> Vec<CriterionResult> {
    (1..=SUITE_NAMES.len())
        .map(|i| run_criterion(i, max_cells))
        .collect()
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn ce(e: liegiambelli_core::Error) -> String {
    format!("computation failed: {e}")
}

fn f2_series(order: u32, terms: &[&[(Family, u32, u32)]]) -> GradedSeries {
    GradedSeries::from_terms(
        Field::F2,
        order,
        terms.iter().map(|powers| {
            let ps: Vec<(Generator, u32)> = powers
                .iter()
                .map(|&(f, i, e)| (Generator::new(f, i), e))
                .collect();
            (Monomial::from_powers(&ps), BigRational::one())
        }),
    )
}

// criterion 1: the three rank-2 degeneracy-locus classes, bit-exact mod 2
fn worked_examples() -> Result<String, String> {
    const T: Family = Family::T;
    const V: Family = Family::V;
    let cases: [(&[u32], u32, &[&[(Family, u32, u32)]]); 3] = [
        (
            &[2, 2, 4],
            4,
            &[&[(T, 2, 1)], &[(V, 2, 1)], &[(V, 1, 2)]],
        ),
        (
            &[2, 3, 3],
            4,
            &[
                &[(T, 1, 2)],
                &[(V, 1, 2)],
                &[(T, 2, 1)],
                &[(T, 1, 1), (V, 1, 1)],
            ],
        ),
        (
            &[2, 2, 3, 4],
            4,
            &[
                &[(T, 1, 1), (T, 2, 1)],
                &[(T, 2, 1), (V, 1, 1)],
                &[(V, 1, 3)],
                &[(T, 3, 1)],
            ],
        ),
    ];
    for (r, m, expected_terms) in cases {
        let g = validate_growth(r, r[0], m).map_err(ce)?;
        let expected = f2_series(m, expected_terms);
        for form in [GiambelliForm::Lambda, GiambelliForm::Mu] {
            let class = giambelli_class(&g, form, None).map_err(ce)?;
            if class != expected {
                return Err(format!(
                    "locus {r:?}: got {}, expected {}",
                    render_series(&class, RenderStyle::Text),
                    render_series(&expected, RenderStyle::Text)
                ));
            }
        }
    }
    // the published LaTeX string for the first example, byte for byte
    let g = validate_growth(&[2, 2, 4], 2, 4).map_err(ce)?;
    let latex = render_series(
        &giambelli_class(&g, GiambelliForm::Lambda, None).map_err(ce)?,
        RenderStyle::Latex,
    );
    if latex != "w_2(M)+w_2(V)+w_1(V)^2" {
        return Err(format!("latex render drifted: {latex}"));
    }
    Ok("3 locus classes, both determinant forms, exact over F2".into())
}

/// One table row: exponents of (c_1, c_2, c_3, c_4) and the coefficient as a
/// polynomial in n, ascending powers, entries (numerator, denominator).
type Row = (&'static [(u32, u32)], &'static [(i64, i64)]);

const TABLE_K1: &[Row] = &[
    (&[(1, 1)], &[(1, 1)]),
    (&[(2, 1)], &[(1, 1)]),
    (&[(3, 1)], &[(1, 1)]),
    (&[(4, 1)], &[(1, 1)]),
];

const TABLE_K2: &[Row] = &[
    (&[(1, 1)], &[(-1, 1), (1, 1)]),
    (&[(1, 2)], &[(1, 1), (-3, 2), (1, 2)]),
    (&[(2, 1)], &[(-2, 1), (1, 1)]),
    (&[(1, 3)], &[(-1, 1), (11, 6), (-1, 1), (1, 6)]),
    (&[(1, 1), (2, 1)], &[(4, 1), (-4, 1), (1, 1)]),
    (&[(3, 1)], &[(-4, 1), (1, 1)]),
    (
        &[(1, 4)],
        &[(1, 1), (-25, 12), (35, 24), (-5, 12), (1, 24)],
    ),
    (&[(1, 2), (2, 1)], &[(-6, 1), (8, 1), (-7, 2), (1, 2)]),
    (&[(2, 2)], &[(3, 1), (-5, 2), (1, 2)]),
    (&[(1, 1), (3, 1)], &[(9, 1), (-6, 1), (1, 1)]),
    (&[(4, 1)], &[(-8, 1), (1, 1)]),
];

const TABLE_K3: &[Row] = &[
    (&[(1, 1)], &[(-1, 1), (0, 1), (1, 1)]),
    (&[(1, 2)], &[(2, 1), (-1, 1), (-3, 2), (0, 1), (1, 2)]),
    (&[(2, 1)], &[(-3, 1), (0, 1), (1, 1)]),
    (
        &[(1, 3)],
        &[(-4, 1), (3, 1), (17, 6), (-1, 1), (-1, 1), (0, 1), (1, 6)],
    ),
    (
        &[(1, 1), (2, 1)],
        &[(12, 1), (-4, 1), (-5, 1), (0, 1), (1, 1)],
    ),
    (&[(3, 1)], &[(-9, 1), (0, 1), (1, 1)]),
    (
        &[(1, 4)],
        &[
            (8, 1),
            (-15, 2),
            (-61, 12),
            (7, 2),
            (47, 24),
            (-1, 2),
            (-5, 12),
            (0, 1),
            (1, 24),
        ],
    ),
    (
        &[(1, 2), (2, 1)],
        &[
            (-36, 1),
            (19, 1),
            (35, 2),
            (-5, 1),
            (-4, 1),
            (0, 1),
            (1, 2),
        ],
    ),
    (
        &[(2, 2)],
        &[(18, 1), (-6, 1), (-7, 2), (0, 1), (1, 2)],
    ),
    (
        &[(1, 1), (3, 1)],
        &[(36, 1), (-6, 1), (-11, 1), (0, 1), (1, 1)],
    ),
    (&[(4, 1)], &[(-27, 1), (0, 1), (1, 1)]),
];

const TABLE_K4: &[Row] = &[
    (&[(1, 1)], &[(0, 1), (-1, 1), (0, 1), (1, 1)]),
    (
        &[(1, 2)],
        &[(1, 1), (1, 1), (-1, 1), (-1, 2), (-1, 1), (0, 1), (1, 2)],
    ),
    // the printed row collapses c_2's polynomial; the pattern of the single
    // c_j rows (-2^{j-1} n + n^3) pins it
    (&[(2, 1)], &[(0, 1), (-2, 1), (0, 1), (1, 1)]),
    (
        &[(1, 3)],
        &[
            (-4, 1),
            (-1, 3),
            (2, 1),
            (8, 3),
            (3, 2),
            (-1, 1),
            (-1, 2),
            (-1, 2),
            (0, 1),
            (1, 6),
        ],
    ),
    (
        &[(1, 1), (2, 1)],
        &[(8, 1), (4, 1), (-4, 1), (-1, 1), (-3, 1), (0, 1), (1, 1)],
    ),
    (&[(3, 1)], &[(0, 1), (-4, 1), (0, 1), (1, 1)]),
    (
        &[(1, 4)],
        &[
            (13, 1),
            (-2, 1),
            (-77, 12),
            (-35, 4),
            (-3, 4),
            (5, 2),
            (55, 24),
            (1, 1),
            (-1, 2),
            (-1, 4),
            (-1, 6),
            (0, 1),
            (1, 24),
        ],
    ),
    (
        &[(1, 2), (2, 1)],
        &[
            (-48, 1),
            (0, 1),
            (12, 1),
            (18, 1),
            (7, 1),
            (-5, 1),
            (-3, 2),
            (-2, 1),
            (0, 1),
            (1, 2),
        ],
    ),
    (
        &[(2, 2)],
        &[(24, 1), (4, 1), (-7, 1), (-1, 2), (-2, 1), (0, 1), (1, 2)],
    ),
    (
        &[(1, 1), (3, 1)],
        &[(24, 1), (8, 1), (-5, 1), (-1, 1), (-5, 1), (0, 1), (1, 1)],
    ),
    (&[(4, 1)], &[(0, 1), (-8, 1), (0, 1), (1, 1)]),
];

fn table_series(table: &[Row], n: i64) -> GradedSeries {
    let mut terms: Vec<(Monomial, BigRational)> = vec![(Monomial::one(), BigRational::one())];
    for (powers, poly) in table {
        let ps: Vec<(Generator, u32)> = powers
            .iter()
            .map(|&(i, e)| (Generator::new(Family::C, i), e))
            .collect();
        let mut value = BigRational::zero();
        let mut npow = BigRational::one();
        for &(num, den) in *poly {
            value += rat(num, den) * &npow;
            npow *= rat(n, 1);
        }
        terms.push((Monomial::from_powers(&ps), value));
    }
    GradedSeries::from_terms(Field::Q, 4, terms)
}

// criterion 2: the four published total-class tables, evaluated at n = 2..6
fn class_tables() -> Result<String, String> {
    let tables: [(u32, &[Row]); 4] =
        [(1, TABLE_K1), (2, TABLE_K2), (3, TABLE_K3), (4, TABLE_K4)];
    let mut checked = 0usize;
    for (k, table) in tables {
        for n in 2..=6i64 {
            let expected = table_series(table, n);
            let got = lie_total_class(n as u32, k, 4).map_err(ce)?;
            if got != expected {
                return Err(format!(
                    "k={k} n={n}: computed {} but the table gives {}",
                    render_series(&got, RenderStyle::Text),
                    render_series(&expected, RenderStyle::Text)
                ));
            }
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} table evaluations (k=1..4, n=2..6) match coefficientwise"
    ))
}

// criterion 3: integer coefficients of every total class, n <= 6, k <= 5
fn integrality() -> Result<String, String> {
    let mut checked = 0usize;
    for n in 1..=6u32 {
        for k in 1..=5u32 {
            let class = lie_total_class(n, k, 4).map_err(ce)?;
            if !class.is_integral() {
                return Err(format!(
                    "non-integer coefficient in the class at n={n} k={k}: {}",
                    render_series(&class, RenderStyle::Text)
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} classes have integer coefficients"))
}

// criterion 4: Hall level sizes match the Witt dimensions; the n = 2 words
// through length 5 match the published list
fn hall_witt() -> Result<String, String> {
    let mut words_checked = 0usize;
    for n in 1..=4u32 {
        let basis = hall_basis(n, 10).map_err(ce)?;
        for k in 1..=10u32 {
            let expect = witt_dim(n as u64, k as u64).map_err(ce)?;
            let got = BigInt::from(basis.level(k).len());
            if got != expect {
                return Err(format!("|H^{k}| at n={n}: {got} != d = {expect}"));
            }
            words_checked += basis.level(k).len();
        }
    }
    const N2_WORDS: [&[&str]; 5] = [
        &["u", "v"],
        &["(u v)"],
        &["(u (u v))", "(v (u v))"],
        &["(u (u (u v)))", "(v (u (u v)))", "(v (v (u v)))"],
        &[
            "(u (u (u (u v))))",
            "(v (u (u (u v))))",
            "(v (v (u (u v))))",
            "(v (v (v (u v))))",
            "((u v) (u (u v)))",
            "((u v) (v (u v)))",
        ],
    ];
    let basis = hall_basis(2, 5).map_err(ce)?;
    for (k, expected) in N2_WORDS.iter().enumerate() {
        let got: Vec<String> = basis
            .level(k as u32 + 1)
            .iter()
            .map(|w| render_hall_word(w, 2))
            .collect();
        if got != *expected {
            return Err(format!("n=2 length-{} words: {got:?}", k + 1));
        }
    }
    Ok(format!(
        "{words_checked} basis words counted against the Witt formula; n=2 list exact"
    ))
}

fn mul_geometric_power(poly: &mut [BigInt], k: usize, d: &BigInt) {
    if d.is_zero() {
        return; // (1 - t^k)^0 = 1
    }
    let mut factor = vec![BigInt::zero(); poly.len()];
    let mut j = 0usize;
    while k * j < poly.len() {
        factor[k * j] = num_integer::binomial(d + BigInt::from(j) - 1, BigInt::from(j));
        j += 1;
    }
    let mut out = vec![BigInt::zero(); poly.len()];
    for (i, a) in poly.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in factor.iter().enumerate().take(poly.len() - i) {
            if !b.is_zero() {
                out[i + j] += a * b;
            }
        }
    }
    poly.clone_from_slice(&out);
}

// criterion 5: the dimension generating identity mod t^13 for n <= 5, and
// the full product identity for the universal bundle at n = 2, 3
fn pbw() -> Result<String, String> {
    for n in 1..=5u64 {
        let mut poly = vec![BigInt::zero(); 13];
        poly[0] = BigInt::one();
        for k in 1..=12usize {
            let d = witt_dim(n, k as u64).map_err(ce)?;
            mul_geometric_power(&mut poly, k, &d);
        }
        let mut expect = BigInt::one();
        for (j, c) in poly.iter().enumerate() {
            if c != &expect {
                return Err(format!(
                    "n={n}: product coefficient at t^{j} is {c}, want {expect}"
                ));
            }
            expect *= BigInt::from(n);
        }
    }

    let t_order = 5usize;
    let order = 4u32;
    for n in [2i64, 3] {
        let mut class = GradedSeries::one(Field::Q, order);
        for i in 1..=order {
            class = class
                .add(&GradedSeries::generator(
                    Field::Q,
                    order,
                    Generator::new(Family::C, i),
                ))
                .map_err(ce)?;
        }
        let ch = class_to_char(&FormalBundle::new(n, class).map_err(ce)?).map_err(ce)?;
        let mut lhs = TruncatedPoly::one(Field::Q, order, t_order);
        for k in 1..=t_order {
            let piece = symmetric_series(&lie_char(&ch, k as u32).map_err(ce)?, t_order)
                .map_err(ce)?;
            lhs = lhs
                .mul(&piece.stretch(k, t_order).map_err(ce)?)
                .map_err(ce)?;
        }
        for j in 0..=t_order {
            let rhs = ch.series().pow(j as u32);
            if lhs.coeff(j) != &rhs {
                return Err(format!("n={n}: product differs from ch^{j} at t^{j}"));
            }
        }
    }
    Ok("dimension identity to t^12 (n<=5); class identity to t^5, weight 4 (n=2,3)".into())
}

fn all_valid_growth_vectors(n: u32, m: u32, kmax: usize) -> Result<Vec<Vec<u32>>, String> {
    let table = WittTable::new(n as u64, kmax as u64).map_err(ce)?;
    let mut out = Vec::new();
    let mut stack = vec![vec![n]];
    while let Some(v) = stack.pop() {
        out.push(v.clone());
        if v.len() == kmax {
            continue;
        }
        let i = v.len() + 1;
        let prev = *v.last().unwrap();
        let cap = table
            .partial_u64(i as u64)
            .map_err(ce)?
            .min(m as u64)
            .min(prev as u64 + table.dim_u64(i as u64).map_err(ce)?) as u32;
        for val in prev..=cap {
            let mut w = v.clone();
            w.push(val);
            stack.push(w);
        }
    }
    Ok(out)
}

// criterion 6: conjugate diagrams and the two determinant forms agree on
// every valid growth vector with n <= 3, k <= 4, m <= 10
fn duality() -> Result<String, String> {
    let mut cases = 0usize;
    for n in 1..=3u32 {
        for m in n..=10u32 {
            for r in all_valid_growth_vectors(n, m, 4)? {
                let g = validate_growth(&r, n, m).map_err(ce)?;
                let d = young_diagrams(&g).map_err(ce)?;
                if d.mu != d.lambda.conjugate() || d.lambda != d.mu.conjugate() {
                    return Err(format!("{r:?} at m={m}: diagrams are not conjugate"));
                }
                if d.lambda.size() != d.cd || d.mu.size() != d.cd {
                    return Err(format!("{r:?} at m={m}: |lambda| or |mu| differs from cd"));
                }
                let a = giambelli_class(&g, GiambelliForm::Lambda, None).map_err(ce)?;
                let b = giambelli_class(&g, GiambelliForm::Mu, None).map_err(ce)?;
                if a != b {
                    return Err(format!("{r:?} at m={m}: determinant forms disagree"));
                }
                if !a.is_homogeneous_of(d.cd) {
                    return Err(format!("{r:?} at m={m}: class not homogeneous of cd"));
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} growth vectors checked exhaustively"))
}

// criterion 7: depth-maximal word counts against the closed form
fn depth_counts() -> Result<String, String> {
    for n in 1..=4u32 {
        let basis = hall_basis(n, 7).map_err(ce)?;
        for k in 2..=7u32 {
            let counted = basis
                .level(k)
                .iter()
                .filter(|w| w.depth() == k)
                .count();
            let expect = count_max_depth(n as u64, k as u64).map_err(ce)?;
            if BigInt::from(counted) != expect {
                return Err(format!("depth-maximal count at n={n} k={k}: {counted} != {expect}"));
            }
        }
    }
    for n in 2..=8u64 {
        let expect = BigInt::from(n * (n - 1) / 2);
        if count_max_depth(n, 2).map_err(ce)? != expect {
            return Err(format!("#_2({n}) differs from n(n-1)/2"));
        }
        let basis = hall_basis(n as u32, 2).map_err(ce)?;
        if BigInt::from(basis.level(2).len()) != expect {
            return Err(format!("level-2 count at n={n} differs from n(n-1)/2"));
        }
    }
    Ok("depth-maximal counts match the closed form (n<=4, k<=7; quadratic case to n=8)".into())
}

// criterion 8: the Witt growth comparisons and the jet-dimension threshold
fn dimension_bounds() -> Result<String, String> {
    for n in 3..=6u64 {
        let rows = lemma4_check(n, 8).map_err(ce)?;
        for row in &rows[1..] {
            if !row.holds {
                return Err(format!(
                    "growth bound fails at n={n} k={}: {} <= {}",
                    row.k, row.lhs, row.rhs
                ));
            }
        }
    }
    for row in lemma4_check(2, 10).map_err(ce)? {
        if !row.holds {
            return Err(format!(
                "two-term growth bound fails at n=2 k={}: {} <= {}",
                row.k, row.lhs, row.rhs
            ));
        }
    }
    let d = lemma1_dims(2, 4, 2).map_err(ce)?;
    if d.dim_jet != BigInt::from(20) || d.dim_mat != BigInt::from(2) {
        return Err(format!(
            "jet/matrix dimensions at (2,4,2): {} / {}",
            d.dim_jet, d.dim_mat
        ));
    }
    let mut flips = Vec::new();
    for (n, m) in [(2u64, 4u64), (3, 6), (3, 14)] {
        let flags: Vec<bool> = (2..=40u64)
            .map(|k| Ok(lemma1_dims(n, m, k).map_err(ce)?.surjective_possible))
            .collect::<Result<_, String>>()?;
        if !flags[0] {
            return Err(format!("({n},{m}): surjectivity already impossible at k=2"));
        }
        let Some(first_false) = flags.iter().position(|f| !f) else {
            return Err(format!("({n},{m}): no threshold by k=40"));
        };
        if !flags[first_false..].iter().all(|f| !f) {
            return Err(format!("({n},{m}): surjectivity flag is not monotone"));
        }
        flips.push(format!("({n},{m}) at k={}", first_false + 2));
    }
    Ok(format!(
        "growth bounds hold; dimension thresholds: {}",
        flips.join(", ")
    ))
}

fn format_defect(d: &DefectVector) -> String {
    let inner: Vec<String> = d.entries().iter().map(|e| e.to_string()).collect();
    format!("({})", inner.join(","))
}

// criterion 9: template enumeration against the brute-force oracle
fn defect_enumeration(max_cells: u64) -> Result<String, String> {
    let mut sizes = Vec::new();
    for (n, m) in [(3u32, 6u32), (3, 10), (3, 14), (4, 10)] {
        let closed: BTreeSet<DefectVector> = enumerate_admissible_defects(n, m, max_cells)
            .map_err(ce)?
            .into_iter()
            .map(|e| e.defect)
            .collect();
        let window = oracle_window(n, m).map_err(ce)?;
        let oracle = oracle_admissible_defects(n, m, window, max_cells).map_err(ce)?;
        if closed != oracle {
            let mut diff = String::new();
            for d in closed.symmetric_difference(&oracle) {
                let side = if closed.contains(d) { "closed-form only" } else { "oracle only" };
                let _ = write!(diff, " {} [{side}]", format_defect(d));
            }
            return Err(format!("(n,m)=({n},{m}): sets differ:{diff}"));
        }
        sizes.push(format!("({n},{m}): {}", closed.len()));
    }
    Ok(format!("set equality at all four pairs — {}", sizes.join(", ")))
}

fn random_monomial(rng: &mut ChaCha8Rng, order: u32) -> Monomial {
    let mut powers = Vec::new();
    for idx in 1..=order {
        if rng.gen_bool(0.4) {
            powers.push((Generator::new(Family::C, idx), rng.gen_range(1..=2u32)));
        }
    }
    Monomial::from_powers(&powers)
}

fn random_nilpotent(rng: &mut ChaCha8Rng, order: u32, integral: bool) -> GradedSeries {
    let nterms = rng.gen_range(0..=6);
    let terms = (0..nterms).filter_map(|_| {
        let m = random_monomial(rng, order);
        if m.is_one() {
            return None;
        }
        let c = if integral {
            rat(rng.gen_range(-4..=4), 1)
        } else {
            rat(rng.gen_range(-6..=6), rng.gen_range(1..=4))
        };
        Some((m, c))
    });
    GradedSeries::from_terms(Field::Q, order, terms)
}

// criterion 10: randomized round-trip and ring-axiom suites
fn ring_properties() -> Result<String, String> {
    const ORDER: u32 = 4;
    const CASES: usize = 1000;
    let one = GradedSeries::one(Field::Q, ORDER);
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce97);

    for case in 0..CASES {
        let rank = rng.gen_range(-5..=6i64);
        let class = random_nilpotent(&mut rng, ORDER, true).add(&one).map_err(ce)?;
        let b = FormalBundle::new(rank, class.clone()).map_err(ce)?;
        let back = char_to_class(&class_to_char(&b).map_err(ce)?).map_err(ce)?;
        if back.rank() != rank || back.class() != &class {
            return Err(format!("class/char round trip failed at case {case}"));
        }
        let series = random_nilpotent(&mut rng, ORDER, false)
            .add(&GradedSeries::constant(Field::Q, ORDER, rat(rng.gen_range(-3..=5), 1)))
            .map_err(ce)?;
        let ch = ChernCharacter::new(series.clone()).map_err(ce)?;
        let ch_back = class_to_char(&char_to_class(&ch).map_err(ce)?).map_err(ce)?;
        if ch_back.series() != &series {
            return Err(format!("char/class round trip failed at case {case}"));
        }
    }

    for case in 0..CASES {
        let u = random_nilpotent(&mut rng, ORDER, false).add(&one).map_err(ce)?;
        let inv = u.invert().map_err(ce)?;
        if u.mul(&inv).map_err(ce)? != one || inv.invert().map_err(ce)? != u {
            return Err(format!("inversion failed at case {case}"));
        }
    }

    for case in 0..CASES {
        let a = random_nilpotent(&mut rng, ORDER, false);
        if a.exp().map_err(ce)?.log().map_err(ce)? != a {
            return Err(format!("log(exp) failed at case {case}"));
        }
        let u = random_nilpotent(&mut rng, ORDER, false).add(&one).map_err(ce)?;
        if u.log().map_err(ce)?.exp().map_err(ce)? != u {
            return Err(format!("exp(log) failed at case {case}"));
        }
    }

    for case in 0..CASES {
        let a = random_nilpotent(&mut rng, ORDER, false).add(&one).map_err(ce)?;
        let b = random_nilpotent(&mut rng, ORDER, false).add(&one).map_err(ce)?;
        let d = rat(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        let lhs = a.mul(&b).map_err(ce)?.rescale(&d).map_err(ce)?;
        let rhs = a
            .rescale(&d)
            .map_err(ce)?
            .mul(&b.rescale(&d).map_err(ce)?)
            .map_err(ce)?;
        if lhs != rhs {
            return Err(format!("rescale homomorphism failed at case {case}"));
        }
        let lhs = a.add(&b).map_err(ce)?.rescale(&d).map_err(ce)?;
        let rhs = a
            .rescale(&d)
            .map_err(ce)?
            .add(&b.rescale(&d).map_err(ce)?)
            .map_err(ce)?;
        if lhs != rhs {
            return Err(format!("rescale additivity failed at case {case}"));
        }
    }

    Ok(format!("{} randomized cases across four suites", 4 * CASES))
}

/// Build a growth vector or panic; test-facing convenience.
pub fn growth(r: &[u32], m: u32) -> GrowthVector {
    validate_growth(r, r[0], m).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_lookup() {
        assert_eq!(suite_index("pbw"), Some(5));
        assert_eq!(suite_index("3"), Some(3));
        assert_eq!(suite_index("10"), Some(10));
        assert_eq!(suite_index("0"), None);
        assert_eq!(suite_index("nope"), None);
    }

    #[test]
    fn table_evaluation_spot_checks() {
        // k=3, n=3 weight-2 coefficients: 8 c_1 + 26 c_1^2 + 6 c_2
        let s = table_series(TABLE_K3, 3);
        let c = |i| Generator::new(Family::C, i);
        assert_eq!(s.coeff(&Monomial::generator(c(1))), rat(8, 1));
        assert_eq!(s.coeff(&Monomial::from_powers(&[(c(1), 2)])), rat(26, 1));
        assert_eq!(s.coeff(&Monomial::generator(c(2))), rat(6, 1));
        // the weight-1 coefficients quoted with the criteria
        assert_eq!(
            table_series(TABLE_K2, 5).coeff(&Monomial::generator(c(1))),
            rat(4, 1)
        );
        assert_eq!(
            table_series(TABLE_K4, 2).coeff(&Monomial::generator(c(1))),
            rat(6, 1)
        );
    }
}
