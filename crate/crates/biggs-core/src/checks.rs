//! Cross-module invariant suites behind the `check` subcommand. The fast
//! scope runs in seconds on trees of degree at most 100; the full scope adds
//! the breadth-first girth search on ten points, the reference table, and the
//! figure coordinates.

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::{landau, lcm_leq, odd_lcm_leq, psi_table, projective_matches};
use crate::cayley::{girth, OutcomeKind, SearchBudget};
use crate::classify::{figure_data, table1_report, FigureId};
use crate::group::schreier_sims;
use crate::perm::{generator_perm, generators, Permutation};
use crate::reference;
use crate::tree::{edge_count_formula, vertex_count_formula, ColorId, ColoredTree};
use crate::word::{evaluate_letters, palindrome_words, rainbow_word, relator_2n, track};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckScope {
    Fast,
    Full,
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Run the invariant suite. `inject_fault` corrupts one generator before the
/// dihedral checks, as a negative control that the suite actually detects
/// violations.
pub fn run_checks(scope: CheckScope, inject_fault: bool) -> Vec<CheckResult> {
    let mut results = Vec::new();
    let mut push = |name: &'static str, passed: bool, detail: String| {
        results.push(CheckResult {
            name,
            passed,
            detail,
        });
    };

    // Formula/tree agreement on every ball of degree <= 100.
    {
        let mut ok = true;
        let mut detail = String::new();
        for c in 2..=7u32 {
            for r in 1..=8u32 {
                let n = vertex_count_formula(u64::from(c), u64::from(r));
                if n > BigUint::from(100u32) {
                    continue;
                }
                let t = ColoredTree::build(c, r).unwrap();
                let e = edge_count_formula(u64::from(c), u64::from(r));
                let counts_ok = BigUint::from(t.vertex_count()) == n
                    && t.colors().all(|col| BigUint::from(t.edge_count(col)) == e);
                let mirrors_ok = (0..t.vertex_count() as u32).all(|v| {
                    let m = t.mirror_colors(v).len();
                    if t.is_boundary(v) {
                        m == t.color_count() - 1
                    } else {
                        m == 0
                    }
                });
                if !(counts_ok && mirrors_ok) {
                    ok = false;
                    detail = format!("failed at C={c} R={r}");
                }
            }
        }
        push("tree_formula_agreement", ok, detail);
    }

    // Dihedral suite: orders, girth, and the rainbow cycle on two colors.
    {
        let mut ok = true;
        let mut detail = String::new();
        for r in 1..=4u32 {
            let t = ColoredTree::build(2, r).unwrap();
            let mut gens = generators(&t);
            if inject_fault && r == 2 {
                // Corrupt one generator: compose with an extra 3-cycle.
                let extra = Permutation::from_cycles(t.vertex_count(), &[vec![0, 1, 2]]).unwrap();
                gens[0] = gens[0].compose(&extra);
            }
            let involutions_ok = gens
                .iter()
                .all(|g| g.compose(g).is_identity() && g.moved_count() == 2 * r as usize);
            let order_ok = schreier_sims(&gens)
                .map(|b| b.order() == BigUint::from(2 * (2 * r + 1)))
                .unwrap_or(false);
            let g = girth(&gens, &SearchBudget::default(), 1);
            let girth_ok = match g {
                Ok(out) => out.kind == OutcomeKind::Exact && out.value == u64::from(4 * r + 2),
                Err(_) => false,
            };
            let rainbow_ok = rainbow_word(2).evaluate(&t).is_n_cycle(t.vertex_count());
            if !(involutions_ok && order_ok && girth_ok && rainbow_ok) {
                ok = false;
                detail = format!(
                    "R={r}: involutions={involutions_ok} order={order_ok} girth={girth_ok} rainbow={rainbow_ok}"
                );
            }
        }
        push("dihedral_suite", ok, detail);
    }

    // Track/evaluate oracle equivalence on ten points.
    {
        let t = ColoredTree::build(3, 2).unwrap();
        let mut ok = true;
        let mut state = 0x243f6a8885a308d3u64;
        for _ in 0..200 {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let len = (state % 10) as usize;
            let letters: Vec<ColorId> = (0..len)
                .scan(state, |s, _| {
                    *s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    Some(ColorId(((*s >> 33) % 3) as u16))
                })
                .collect();
            let p = evaluate_letters(&t, &letters);
            for v in 0..t.vertex_count() as u32 {
                if track(&t, &letters, v).1 != p.image(v) {
                    ok = false;
                }
            }
        }
        // Geodesic pushing, exhaustively.
        for u in 0..t.vertex_count() as u32 {
            for v in 0..t.vertex_count() as u32 {
                let w = t.geodesic_colors(u, v);
                if evaluate_letters(&t, &w).image(u) != v {
                    ok = false;
                }
            }
        }
        push("track_evaluate_equivalence", ok, String::new());
    }

    // Root-stabilizer palindromes and the reduced length-2N relator.
    {
        let mut ok = true;
        let mut detail = String::new();
        for (c, r) in [(3u32, 1u32), (3, 2), (4, 2)] {
            let t = ColoredTree::build(c, r).unwrap();
            let pal_ok = palindrome_words(&t).iter().all(|w| {
                w.len() == 2 * r as usize + 1
                    && w.reversed() == *w
                    && w.evaluate(&t).image(0) == 0
            });
            let rel = relator_2n(c, r).unwrap();
            let rel_ok =
                rel.len() == 2 * t.vertex_count() && rel.evaluate(&t).is_identity();
            if !(pal_ok && rel_ok) {
                ok = false;
                detail = format!("C={c} R={r}: palindromes={pal_ok} relator={rel_ok}");
            }
        }
        push("palindromes_and_relator", ok, detail);
    }

    // Generator parity rule: all generators even iff C and R both even.
    {
        let mut ok = true;
        for c in 2..=8u64 {
            for r in 1..=8u64 {
                let e = edge_count_formula(c, r);
                let even = (&e % BigUint::from(2u32)).is_one() == false;
                if even != (c % 2 == 0 && r % 2 == 0) {
                    ok = false;
                }
            }
        }
        // And on an actual ball: sign from the built generator.
        let t = ColoredTree::build(4, 2).unwrap();
        ok &= generator_perm(&t, ColorId(0)).sign() == 1;
        let t = ColoredTree::build(3, 2).unwrap();
        ok &= generator_perm(&t, ColorId(0)).sign() == -1;
        push("generator_parity_rule", ok, String::new());
    }

    // Arithmetic spot checks.
    {
        let mut ok = true;
        let mut all = BigUint::one();
        let mut odd = BigUint::one();
        for n in 1..=1000u64 {
            all = num_integer::Integer::lcm(&all, &BigUint::from(n));
            if n % 2 == 1 {
                odd = num_integer::Integer::lcm(&odd, &BigUint::from(n));
            }
            let pow2 = 1u64 << (63 - n.leading_zeros());
            if &odd * BigUint::from(pow2) != all {
                ok = false;
            }
        }
        ok &= all == lcm_leq(1000) && odd == odd_lcm_leq(1000);
        let table = psi_table(10_000);
        for x in 2..=10_000usize {
            let xf = x as f64;
            if (table[x] - xf).abs() >= 0.85 * xf / xf.ln() {
                ok = false;
            }
        }
        ok &= landau(10) == BigUint::from(30u32);
        ok &= landau(4) == BigUint::from(4u32);
        push("arithmetic_spot_checks", ok, String::new());
    }

    if scope == CheckScope::Fast {
        return results;
    }

    // Full scope: exact girth window on ten points.
    {
        let t = ColoredTree::build(3, 2).unwrap();
        let out = girth(&generators(&t), &SearchBudget::default(), 1).unwrap();
        let ok = out.kind == OutcomeKind::Exact && (11..=20).contains(&out.value);
        push(
            "girth_window_ten_points",
            ok,
            format!("girth = {}", out.value),
        );
    }

    // Full scope: small-group orders.
    {
        let mut ok = true;
        let t = ColoredTree::build(3, 1).unwrap();
        ok &= schreier_sims(&generators(&t)).unwrap().order() == BigUint::from(24u32);
        let t = ColoredTree::build(3, 2).unwrap();
        ok &= schreier_sims(&generators(&t)).unwrap().order() == BigUint::from(3628800u64);
        for r in 1..=50u64 {
            let t = ColoredTree::build(2, r as u32).unwrap();
            let order = schreier_sims(&generators(&t)).unwrap().order();
            ok &= order == BigUint::from(2 * (2 * r + 1));
        }
        push("small_group_orders", ok, String::new());
    }

    // Full scope: the reference table, colors and factorizations.
    {
        let cells = table1_report(7, 12).unwrap();
        let mut ok = true;
        let mut detail = String::new();
        for (c, r, fact, color) in reference::TABLE1 {
            let cell = cells
                .iter()
                .find(|cell| cell.c == c && cell.r == r)
                .unwrap();
            if cell.factorization.to_display() != fact || cell.color != color {
                ok = false;
                detail = format!(
                    "cell ({c},{r}): got {} {:?}",
                    cell.factorization.to_display(),
                    cell.color
                );
            }
        }
        for n in reference::RED_DEGREES {
            if !projective_matches(&BigUint::from(n)).is_empty() {
                ok = false;
                detail = format!("projective match found at degree {n}");
            }
        }
        push("reference_table", ok, detail);
    }

    // Full scope: figure coordinates to 1e-9.
    {
        let mut ok = true;
        let checks: [(FigureId, &str, &[(u64, f64)]); 7] = [
            (FigureId::Fig3, "ord_lower_ln", &reference::FIG3_LOWER),
            (FigureId::Fig3, "meo_upper_ln", &reference::FIG3_UPPER),
            (FigureId::Fig4, "ln_landau", &reference::FIG4_LANDAU),
            (FigureId::Fig4, "meo_upper_ln", &reference::FIG4_MEO),
            (FigureId::Fig5, "ln_landau", &reference::FIG5_LANDAU),
            (FigureId::Fig5, "meo_upper_ln", &reference::FIG5_MEO),
            (FigureId::Fig6, "ratio", &reference::FIG6_RATIO),
        ];
        for (id, series, expected) in checks {
            let rows = figure_data(id);
            for (x, v) in expected {
                let row = rows
                    .iter()
                    .find(|row| row.series == series && row.x == *x)
                    .unwrap();
                if (row.value - v).abs() > 1e-9 {
                    ok = false;
                }
            }
        }
        push("figure_coordinates", ok, String::new());
    }

    results
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_suite_passes() {
        let results = run_checks(CheckScope::Fast, false);
        for r in &results {
            assert!(r.passed, "{} failed: {}", r.name, r.detail);
        }
    }

    #[test]
    fn fault_injection_is_detected() {
        let results = run_checks(CheckScope::Fast, true);
        assert!(results.iter().any(|r| !r.passed));
    }
}
