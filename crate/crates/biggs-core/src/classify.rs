//! The classification pipeline: predict the isomorphism type of the tree
//! group at `(C, R)`, construct explicit cycle witnesses from the two
//! coprimality conditions, assemble the colored factorization table, emit the
//! bound-comparison figure data, and (at small degree) verify predictions
//! against the stabilizer chain.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::arith::{
    big_ln, factorize, landau, meo_pgammal_upper_ln, ord_c1c2_lower_ln, primary_cycle_condition,
    projective_matches, secondary_cycle_condition, Factorization, ProjectiveMatch,
};
use crate::error::{Error, Result};
use crate::group::{classify_alt_sym, schreier_sims, GroupType, GroupVerdict, MAX_BSGS_DEGREE};
use crate::perm::generators;
use crate::tree::{vertex_count_formula, ColoredTree};
use crate::word::evaluate_letters;
use crate::tree::ColorId;

/// Predicted isomorphism type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PredictedType {
    Alternating,
    Symmetric,
    Dihedral,
}

/// Dihedral if `C = 2`; alternating if `C` and `R` are both even (equivalently
/// every generator is an even permutation); symmetric otherwise.
pub fn predict_type(c: u64, r: u64) -> PredictedType {
    assert!(c >= 2 && r >= 1);
    if c == 2 {
        PredictedType::Dihedral
    } else if c % 2 == 0 && r % 2 == 0 {
        PredictedType::Alternating
    } else {
        PredictedType::Symmetric
    }
}

/// Cell color of the classification table. Precedence violet > blue > red;
/// the two-color column is uncolored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TableColor {
    Violet,
    Blue,
    Red,
    Uncolored,
}

pub fn table_color(c: u64, r: u64) -> TableColor {
    if c < 3 {
        return TableColor::Uncolored;
    }
    if primary_cycle_condition(c, r).is_some() {
        return TableColor::Violet;
    }
    if r >= 2 && secondary_cycle_condition(c, r) {
        return TableColor::Blue;
    }
    TableColor::Red
}

/// An explicit cycle with many fixed points, certifying that the group
/// contains a cycle as Jordan-type arguments require.
#[derive(Debug, Clone, Serialize)]
pub struct CycleWitness {
    /// Number of colors in the subset generating the witness.
    pub c_prime: u64,
    /// Exponent applied to the product of the first `c_prime` colors.
    #[serde(serialize_with = "crate::classify::ser_big")]
    pub exponent: BigUint,
    pub cycle_len: u64,
    pub fixed_points: u64,
}

pub(crate) fn ser_big<S: serde::Serializer>(b: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&b.to_string())
}

fn n_u64(c: u64, r: u64) -> u64 {
    (&vertex_count_formula(c, r))
        .try_into()
        .expect("desk-scale vertex count fits u64")
}

/// If the first coprimality condition holds with witness `C'`, raise the
/// product of the first `C'` color involutions to the product of the smaller
/// component sizes and check on the actual permutation that the result is a
/// single `N_{C',R}`-cycle fixing more than two points.
pub fn primary_cycle_witness(c: u32, r: u32) -> Result<Option<CycleWitness>> {
    if c < 3 || r < 2 {
        return Err(Error::Parameter(
            "cycle witnesses need C >= 3 and R >= 2".into(),
        ));
    }
    let Some(cp) = primary_cycle_condition(u64::from(c), u64::from(r)) else {
        return Ok(None);
    };
    let exponent: BigUint = (1..u64::from(r))
        .map(|s| vertex_count_formula(cp, s))
        .fold(BigUint::one(), |acc, x| acc * x);
    let cycle_len = n_u64(cp, u64::from(r));
    build_witness(c, r, cp, exponent, cycle_len)
}

/// If the second coprimality condition holds, the analogous witness with
/// `C' = C - 1` and the unique second-largest component.
pub fn secondary_cycle_witness(c: u32, r: u32) -> Result<Option<CycleWitness>> {
    if c < 3 || r < 2 {
        return Err(Error::Parameter(
            "cycle witnesses need C >= 3 and R >= 2".into(),
        ));
    }
    if !secondary_cycle_condition(u64::from(c), u64::from(r)) {
        return Ok(None);
    }
    let cp = u64::from(c) - 1;
    let exponent: BigUint = (1..=u64::from(r))
        .filter(|&s| s != u64::from(r) - 1)
        .map(|s| vertex_count_formula(cp, s))
        .fold(BigUint::one(), |acc, x| acc * x);
    let cycle_len = n_u64(cp, u64::from(r) - 1);
    build_witness(c, r, cp, exponent, cycle_len)
}

fn build_witness(
    c: u32,
    r: u32,
    cp: u64,
    exponent: BigUint,
    cycle_len: u64,
) -> Result<Option<CycleWitness>> {
    let tree = ColoredTree::build(c, r)?;
    let letters: Vec<ColorId> = (0..cp as u16).map(ColorId).collect();
    let w = evaluate_letters(&tree, &letters);
    let power = w.power(&exponent);
    let n = tree.vertex_count() as u64;
    let fixed = n - cycle_len;
    if !power.is_n_cycle(cycle_len as usize) || fixed <= 2 {
        return Err(Error::Contradiction(format!(
            "witness at (C,R)=({c},{r}) with C'={cp} failed: expected a single \
             {cycle_len}-cycle fixing {fixed} points, got cycle type {:?}",
            power.cycle_type().lengths
        )));
    }
    Ok(Some(CycleWitness {
        c_prime: cp,
        exponent,
        cycle_len,
        fixed_points: fixed,
    }))
}

/// Projective-degree scan outcome for a red cell: `excluded` iff no prime
/// power `q` and `d >= 2` give the same degree. A nonempty match list leaves
/// the case open by the degree test alone.
#[derive(Debug, Clone, Serialize)]
pub struct ProjectiveOutcome {
    pub excluded: bool,
    pub matches: Vec<ProjectiveMatchJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProjectiveMatchJson {
    pub q: String,
    pub d: u32,
    pub p: String,
    pub e: u32,
}

impl From<&ProjectiveMatch> for ProjectiveMatchJson {
    fn from(m: &ProjectiveMatch) -> Self {
        ProjectiveMatchJson {
            q: m.q.to_string(),
            d: m.d,
            p: m.p.to_string(),
            e: m.e,
        }
    }
}

/// Per-cell verdict: prediction, which condition fired, witnesses, and
/// (optionally) the certified group verdict.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub c: u64,
    pub r: u64,
    #[serde(serialize_with = "crate::classify::ser_big")]
    pub n: BigUint,
    pub predicted: PredictedType,
    pub table_color: TableColor,
    /// Smallest color-subset size witnessing the first condition.
    pub primary_condition: Option<u64>,
    pub secondary_condition: Option<bool>,
    pub primary_witness: Option<CycleWitness>,
    pub secondary_witness: Option<CycleWitness>,
    pub projective: Option<ProjectiveOutcome>,
    #[serde(skip)]
    pub verified: Option<GroupVerdict>,
}

/// Degrees up to which `classify` constructs explicit witness permutations.
const WITNESS_MAX_DEGREE: u64 = 100_000;

/// Assemble the full report for one cell, without group-order verification.
pub fn classify(c: u64, r: u64) -> Result<ClassificationReport> {
    if c < 2 || r < 1 {
        return Err(Error::Parameter("need C >= 2 and R >= 1".into()));
    }
    let n = vertex_count_formula(c, r);
    let predicted = predict_type(c, r);
    let color = table_color(c, r);
    let (mut primary_cond, mut secondary_cond) = (None, None);
    let (mut primary_wit, mut secondary_wit) = (None, None);
    let mut projective = None;
    if c >= 3 {
        primary_cond = primary_cycle_condition(c, r);
        if r >= 2 {
            secondary_cond = Some(secondary_cycle_condition(c, r));
            let small = n.to_u64().is_some_and(|v| v <= WITNESS_MAX_DEGREE);
            if small {
                primary_wit = primary_cycle_witness(c as u32, r as u32)?;
                secondary_wit = secondary_cycle_witness(c as u32, r as u32)?;
            }
        }
        if color == TableColor::Red {
            let matches = projective_matches(&n);
            projective = Some(ProjectiveOutcome {
                excluded: matches.is_empty(),
                matches: matches.iter().map(ProjectiveMatchJson::from).collect(),
            });
        }
    }
    Ok(ClassificationReport {
        c,
        r,
        n,
        predicted,
        table_color: color,
        primary_condition: primary_cond,
        secondary_condition: secondary_cond,
        primary_witness: primary_wit,
        secondary_witness: secondary_wit,
        projective,
        verified: None,
    })
}

/// `classify` plus stabilizer-chain verification when the degree is within
/// `max_degree` (and the chain capacity). A verified type that contradicts the
/// prediction is an internal contradiction. The dihedral group on 3 points is
/// the symmetric group; that coincidence is accepted.
pub fn verify(c: u64, r: u64, max_degree: usize) -> Result<ClassificationReport> {
    let mut report = classify(c, r)?;
    let cap = max_degree.min(MAX_BSGS_DEGREE);
    let Some(n) = report.n.to_u64().filter(|&n| n as usize <= cap) else {
        return Ok(report);
    };
    let tree = ColoredTree::build(c as u32, r as u32)?;
    let gens = generators(&tree);
    let bsgs = schreier_sims(&gens)?;
    let verdict = classify_alt_sym(&bsgs, &gens);
    let consistent = match (report.predicted, verdict.group_type) {
        (PredictedType::Alternating, GroupType::Alternating) => true,
        (PredictedType::Symmetric, GroupType::Symmetric) => true,
        (PredictedType::Dihedral, GroupType::Dihedral) => true,
        // Dih(3) = Sym(3).
        (PredictedType::Dihedral, GroupType::Symmetric) => n == 3,
        _ => false,
    };
    if !consistent {
        return Err(Error::Contradiction(format!(
            "(C,R)=({c},{r}): predicted {:?} but certified {:?} of order {}",
            report.predicted, verdict.group_type, verdict.order
        )));
    }
    report.verified = Some(verdict);
    Ok(report)
}

/// One cell of the factorization table.
#[derive(Debug, Clone)]
pub struct TableCell {
    pub c: u64,
    pub r: u64,
    pub n: BigUint,
    pub factorization: Factorization,
    pub color: TableColor,
    /// Projective matches, computed for red cells.
    pub projective: Option<Vec<ProjectiveMatch>>,
}

/// The factorization table for `2 <= C <= c_max`, `1 <= R <= r_max`, row
/// major by radius.
pub fn table1_report(c_max: u64, r_max: u64) -> Result<Vec<TableCell>> {
    if c_max < 2 || r_max < 1 {
        return Err(Error::Parameter("need c_max >= 2 and r_max >= 1".into()));
    }
    let mut cells = Vec::new();
    for r in 1..=r_max {
        for c in 2..=c_max {
            let n = vertex_count_formula(c, r);
            let factorization = factorize(&n)?;
            let color = table_color(c, r);
            let projective = (color == TableColor::Red).then(|| projective_matches(&n));
            cells.push(TableCell {
                c,
                r,
                n,
                factorization,
                color,
                projective,
            });
        }
    }
    Ok(cells)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    Fig3,
    Fig4,
    Fig5,
    Fig6,
}

impl std::str::FromStr for FigureId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig3" => Ok(FigureId::Fig3),
            "fig4" => Ok(FigureId::Fig4),
            "fig5" => Ok(FigureId::Fig5),
            "fig6" => Ok(FigureId::Fig6),
            _ => Err(Error::Parameter(format!(
                "unknown figure id {s:?}; expected fig3..fig6"
            ))),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FigureRow {
    pub x: u64,
    pub series: &'static str,
    pub value: f64,
}

/// The four bound-comparison datasets, as `(x, series, value)` rows.
///
/// * `fig3`: for `R = 1..9` with three colors, the effective lower bound for
///   `ln(ord(c1 c2))` against the projective `meo` upper bound.
/// * `fig4`: for `R = 1..7`, `ln(Landau(N_{3,R}))` against the `meo` bound at
///   four colors.
/// * `fig5`: for `R = 1..7`, `ln(Landau(N_{4,R'}))` (with `R'` rounded down to
///   odd) against the `meo` bound at five colors.
/// * `fig6`: for `C = 10..20` at `R = 3`, the ratio of the Landau lower bound
///   at `C-1` colors to the `meo` bound at `C` colors.
pub fn figure_data(id: FigureId) -> Vec<FigureRow> {
    let mut rows = Vec::new();
    match id {
        FigureId::Fig3 => {
            for r in 1..=9u64 {
                rows.push(FigureRow {
                    x: r,
                    series: "ord_lower_ln",
                    value: ord_c1c2_lower_ln(r),
                });
            }
            for r in 1..=9u64 {
                rows.push(FigureRow {
                    x: r,
                    series: "meo_upper_ln",
                    value: meo_pgammal_upper_ln(&vertex_count_formula(3, r)),
                });
            }
        }
        FigureId::Fig4 => {
            for r in 1..=7u64 {
                rows.push(FigureRow {
                    x: r,
                    series: "ln_landau",
                    value: big_ln(&landau(n_u64(3, r))),
                });
            }
            for r in 1..=7u64 {
                rows.push(FigureRow {
                    x: r,
                    series: "meo_upper_ln",
                    value: meo_pgammal_upper_ln(&vertex_count_formula(4, r)),
                });
            }
        }
        FigureId::Fig5 => {
            for r in 1..=7u64 {
                let r_odd = if r % 2 == 1 { r } else { r - 1 };
                rows.push(FigureRow {
                    x: r,
                    series: "ln_landau",
                    value: big_ln(&landau(n_u64(4, r_odd))),
                });
            }
            for r in 1..=7u64 {
                rows.push(FigureRow {
                    x: r,
                    series: "meo_upper_ln",
                    value: meo_pgammal_upper_ln(&vertex_count_formula(5, r)),
                });
            }
        }
        FigureId::Fig6 => {
            for c in 10..=20u64 {
                let n_small = n_u64(c - 1, 3);
                let n_big_val = vertex_count_formula(c, 3);
                let num = ((n_small as f64) * (n_small as f64).ln()).sqrt();
                let den = meo_pgammal_upper_ln(&n_big_val);
                rows.push(FigureRow {
                    x: c,
                    series: "ratio",
                    value: num / den,
                });
            }
        }
    }
    rows
}
