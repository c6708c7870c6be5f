//! The spread construction, its relative-difference-set variant, the two
//! product theorems, and exhaustive searches over their parameter spaces.
//!
//! Let `G` have order 36 with Sylow 3-subgroup `H ≅ C3×C3` and spread lines
//! `L0..L3`. For `x, y` in the normalizer of `H` with `{1,x,y,xy}` a left
//! transversal and shifts `h1,h2,h3 ∈ H`,
//!
//! ```text
//! S = L̂0 − x·h1·L̂1 − y·h2·L̂2 − xy·h3·L̂3,     L̂i = H − 2Li
//! ```
//!
//! satisfies `SS^(−1) = 36` exactly when conjugation by the transversal
//! permutes the spread, i.e. `{L0,L1,L2,L3} = {L0, xL1x⁻¹, yL2y⁻¹,
//! xyL3(xy)⁻¹}` as sets; the 15-element +1-support of `S` is then a
//! (36,15,6) difference set. When `H` is not normal no transversal lies in
//! the normalizer and the spread machinery produces nothing; there the
//! variant `S = L̂0 − R0·g·R̂1` applies, built from (3,3,3,1) relative
//! difference sets `R0, R1` in `H` with forbidden subgroup `L0` and an
//! element `g` making `{1, r1g, r2g, r3g}` a left (never right) transversal.
//!
//! Sign convention: both boxed elements have coefficient sum −6, so `S` is
//! `−(G − 2D)` for the 15-set `D`. `S` and `−S` verify identically and the
//! +1-support is always reported as "the" difference set.

use std::collections::HashSet;

use thiserror::Error;

use crate::designs::is_hadamard_transform;
use crate::groupring::GroupRingElement;
use crate::groups::{
    is_left_transversal, normalizer, spread_of, sylow_3, Elem, FiniteGroup, GroupError, Spread,
    Subgroup,
};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("{0} does not normalize the Sylow 3-subgroup")]
    NotInNormalizer(&'static str),
    #[error("{{1, x, y, xy}} is not a left transversal of H")]
    NotATransversal,
    #[error("conjugation by the transversal does not permute the spread")]
    SpreadConditionFailed,
    #[error("{0} is not a (3,3,3,1) relative difference set for the forbidden subgroup")]
    NotARelativeDifferenceSet(&'static str),
    #[error("input is not the Hadamard transform of a difference set in its subgroup")]
    NotASubgroupTransform,
    #[error("subgroups do not factor the group: need H∩K = 1 and |H|·|K| = |G|")]
    BadFactorization,
    #[error("subgroups do not commute elementwise; not an internal direct product")]
    NotADirectProduct,
    #[error("expected C3×C3, found a group of order {order}")]
    WrongShape { order: usize },
}

/// A full parameter choice for the spread construction.
#[derive(Debug, Clone)]
pub struct SpreadSelection {
    pub spread: Spread,
    /// Line index (into `spread.lines`) per slot `L0..L3`.
    pub assignment: [usize; 4],
    /// `h1, h2, h3`; slot 0 is untranslated.
    pub shifts: [Elem; 3],
    pub x: Elem,
    pub y: Elem,
}

/// A full parameter choice for the relative-difference-set construction.
#[derive(Debug, Clone)]
pub struct RdsSelection {
    pub sylow: Subgroup,
    /// The forbidden subgroup `L0`.
    pub forbidden: Subgroup,
    pub r0: [Elem; 3],
    pub g: Elem,
    pub r1: [Elem; 3],
}

/// Result of an exhaustive search: the distinct difference sets found plus
/// counters for reporting.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub sets: Vec<Vec<Elem>>,
    pub summary: SearchSummary,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchSummary {
    pub candidates_examined: u64,
    pub condition_passes: u64,
    pub sets_constructed: u64,
    pub distinct_sets: usize,
}

fn conjugated_line(group: &FiniteGroup, t: Elem, line: &Subgroup) -> Vec<Elem> {
    let mut v: Vec<Elem> = line
        .elements()
        .iter()
        .map(|&e| group.conjugate(t, e))
        .collect();
    v.sort();
    v
}

/// True iff `{L0,..,L3}` equals `{L0, xL1x⁻¹, yL2y⁻¹, xyL3(xy)⁻¹}` as sets
/// of subgroups.
pub fn spread_condition_holds(group: &FiniteGroup, sel: &SpreadSelection) -> bool {
    let lines = &sel.spread.lines;
    let xy = group.mul(sel.x, sel.y);
    let conjugated = [
        lines[sel.assignment[0]].elements().to_vec(),
        conjugated_line(group, sel.x, &lines[sel.assignment[1]]),
        conjugated_line(group, sel.y, &lines[sel.assignment[2]]),
        conjugated_line(group, xy, &lines[sel.assignment[3]]),
    ];
    // the four lines are distinct, so set equality = every line is hit once
    lines.iter().all(|l| {
        conjugated
            .iter()
            .filter(|c| c.as_slice() == l.elements())
            .count()
            == 1
    })
}

fn transform_of(sub_sum: &GroupRingElement, ambient_sum: &GroupRingElement) -> GroupRingElement {
    ambient_sum - &(2 * sub_sum)
}

/// Assembles `S = L̂0 − x·h1·L̂1 − y·h2·L̂2 − xy·h3·L̂3` without checking the
/// spread condition (used to exercise both directions of the iff).
fn build_spread_element(group: &FiniteGroup, sel: &SpreadSelection) -> GroupRingElement {
    let hsum = GroupRingElement::subgroup_sum(&sel.spread.ambient);
    let lhat: Vec<GroupRingElement> = (0..4)
        .map(|slot| {
            let line = &sel.spread.lines[sel.assignment[slot]];
            transform_of(&GroupRingElement::subgroup_sum(line), &hsum)
        })
        .collect();
    let xy = group.mul(sel.x, sel.y);
    let mut s = lhat[0].clone();
    for (i, &t) in [sel.x, sel.y, xy].iter().enumerate() {
        let shifted = lhat[i + 1]
            .translate_left(sel.shifts[i])
            .translate_left(t);
        s = &s - &shifted;
    }
    s
}

fn check_transversal_in_normalizer(
    group: &FiniteGroup,
    h: &Subgroup,
    x: Elem,
    y: Elem,
) -> Result<(), ConstructionError> {
    let normalizes = |t: Elem| {
        h.elements()
            .iter()
            .all(|&e| h.contains(group.conjugate(t, e)))
    };
    if !normalizes(x) {
        return Err(ConstructionError::NotInNormalizer("x"));
    }
    if !normalizes(y) {
        return Err(ConstructionError::NotInNormalizer("y"));
    }
    let xy = group.mul(x, y);
    let reps = [group.identity(), x, y, xy];
    if !is_left_transversal(group, h, &reps) {
        return Err(ConstructionError::NotATransversal);
    }
    Ok(())
}

/// The spread construction. Validates the selection invariants and the
/// spread condition, then returns the ±1 element `S` with `SS^(−1) = 36`.
pub fn spread_construct(
    group: &FiniteGroup,
    sel: &SpreadSelection,
) -> Result<GroupRingElement, ConstructionError> {
    check_transversal_in_normalizer(group, &sel.spread.ambient, sel.x, sel.y)?;
    if !spread_condition_holds(group, sel) {
        return Err(ConstructionError::SpreadConditionFailed);
    }
    let s = build_spread_element(group, sel);
    debug_assert!(s.is_pm_one());
    debug_assert_eq!(s.coeff_sum(), -6);
    Ok(s)
}

/// Enumerates ordered pairs `(x, y)` over `N_G(H) ∖ H` such that
/// `{1, x, y, xy}` is a left transversal of `H`.
fn transversal_pairs(group: &FiniteGroup, h: &Subgroup) -> Vec<(Elem, Elem)> {
    let n = normalizer(group, h);
    let outside: Vec<Elem> = n
        .elements()
        .iter()
        .copied()
        .filter(|&e| !h.contains(e))
        .collect();
    let mut pairs = Vec::new();
    for &x in &outside {
        for &y in &outside {
            if covers_all_cosets(group, h, x, y) {
                pairs.push((x, y));
            }
        }
    }
    pairs
}

fn covers_all_cosets(group: &FiniteGroup, h: &Subgroup, x: Elem, y: Elem) -> bool {
    let reps = [group.identity(), x, y, group.mul(x, y)];
    let mut seen = vec![false; group.order()];
    for &r in &reps {
        for &e in h.elements() {
            let idx = group.mul(r, e).index();
            if seen[idx] {
                return false;
            }
            seen[idx] = true;
        }
    }
    true
}

/// All slot assignments: 4 choices of `L0` × 3! orders for the rest.
fn assignments() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a0 in 0..4 {
        let rest: Vec<usize> = (0..4).filter(|&i| i != a0).collect();
        for p in [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ] {
            out.push([a0, rest[p[0]], rest[p[1]], rest[p[2]]]);
        }
    }
    out
}

fn mask_of(group: &FiniteGroup, elems: &[Elem]) -> u64 {
    debug_assert!(group.order() <= 64);
    elems.iter().fold(0u64, |m, e| m | (1u64 << e.index()))
}

fn sets_from_masks(group: &FiniteGroup, masks: HashSet<u64>) -> Vec<Vec<Elem>> {
    let mut sorted: Vec<u64> = masks.into_iter().collect();
    sorted.sort_unstable();
    sorted
        .iter()
        .map(|&m| {
            (0..group.order() as u16)
                .filter(|&i| m & (1u64 << i) != 0)
                .map(Elem)
                .collect()
        })
        .collect()
}

/// Exhaustive spread search: every assignment, every shift triple, every
/// transversal pair in the normalizer. Slot 0's shift is fixed at the
/// identity; left translates are recovered at classification time. Returns
/// the deduplicated 15-element difference sets.
pub fn spread_search(group: &FiniteGroup) -> Result<SearchOutcome, ConstructionError> {
    let h = sylow_3(group);
    let spread = spread_of(&h)?;
    spread_search_inner(group, &spread)
}

fn spread_search_inner(
    group: &FiniteGroup,
    spread: &Spread,
) -> Result<SearchOutcome, ConstructionError> {
    let h = &spread.ambient;
    let pairs = transversal_pairs(group, h);
    let helems: Vec<Elem> = h.elements().to_vec();
    let hmask = mask_of(group, &helems);
    let mut summary = SearchSummary::default();
    let mut masks: HashSet<u64> = HashSet::new();

    for assignment in assignments() {
        for &(x, y) in &pairs {
            summary.candidates_examined += 1;
            let probe = SpreadSelection {
                spread: spread.clone(),
                assignment,
                shifts: [group.identity(); 3],
                x,
                y,
            };
            if !spread_condition_holds(group, &probe) {
                continue;
            }
            summary.condition_passes += 1;

            // +1-support of S: (H ∖ L0) ∪ x·h1·L1 ∪ y·h2·L2 ∪ xy·h3·L3
            let base = hmask & !mask_of(group, spread.lines[assignment[0]].elements());
            let xy = group.mul(x, y);
            let slot_masks: Vec<Vec<u64>> = [x, y, xy]
                .iter()
                .enumerate()
                .map(|(i, &t)| {
                    helems
                        .iter()
                        .map(|&shift| {
                            let th = group.mul(t, shift);
                            spread.lines[assignment[i + 1]]
                                .elements()
                                .iter()
                                .fold(0u64, |m, &l| m | (1u64 << group.mul(th, l).index()))
                        })
                        .collect()
                })
                .collect();

            for m1 in &slot_masks[0] {
                for m2 in &slot_masks[1] {
                    for m3 in &slot_masks[2] {
                        summary.sets_constructed += 1;
                        masks.insert(base | m1 | m2 | m3);
                    }
                }
            }
        }
    }

    let sets = sets_from_masks(group, masks);
    summary.distinct_sets = sets.len();
    Ok(SearchOutcome { sets, summary })
}

/// Relative-difference-set check with the subgroup as ambient group: inside
/// `H`, differences hit the identity `k` times, the rest of `N` never, and
/// everything else `λ` times.
fn is_rds_in_subgroup(
    group: &FiniteGroup,
    h: &Subgroup,
    n: &Subgroup,
    r: &[Elem],
    lambda: usize,
) -> bool {
    let mut counts = vec![0usize; group.order()];
    for &a in r {
        for &b in r {
            counts[group.mul(a, group.inv(b)).index()] += 1;
        }
    }
    h.elements().iter().all(|&e| {
        let want = if e == group.identity() {
            r.len()
        } else if n.contains(e) {
            0
        } else {
            lambda
        };
        counts[e.index()] == want
    })
}

fn rds_triples(group: &FiniteGroup, h: &Subgroup, n: &Subgroup) -> Vec<[Elem; 3]> {
    let els = h.elements();
    let mut out = Vec::new();
    for i in 0..els.len() {
        for j in i + 1..els.len() {
            for k in j + 1..els.len() {
                let r = [els[i], els[j], els[k]];
                if is_rds_in_subgroup(group, h, n, &r, 1) {
                    out.push(r);
                }
            }
        }
    }
    out
}

/// The relative-difference-set construction `S = L̂0 − R0·g·R̂1`.
pub fn rds_spread_construct(
    group: &FiniteGroup,
    sel: &RdsSelection,
) -> Result<GroupRingElement, ConstructionError> {
    let h = &sel.sylow;
    if !is_rds_in_subgroup(group, h, &sel.forbidden, &sel.r0, 1) {
        return Err(ConstructionError::NotARelativeDifferenceSet("R0"));
    }
    if !is_rds_in_subgroup(group, h, &sel.forbidden, &sel.r1, 1) {
        return Err(ConstructionError::NotARelativeDifferenceSet("R1"));
    }
    let reps = [
        group.identity(),
        group.mul(sel.r0[0], sel.g),
        group.mul(sel.r0[1], sel.g),
        group.mul(sel.r0[2], sel.g),
    ];
    if !is_left_transversal(group, h, &reps) {
        return Err(ConstructionError::NotATransversal);
    }
    let hsum = GroupRingElement::subgroup_sum(h);
    let l0hat = transform_of(&GroupRingElement::subgroup_sum(&sel.forbidden), &hsum);
    let r1hat = transform_of(&GroupRingElement::from_subset(group, &sel.r1), &hsum);
    let r0g = GroupRingElement::from_subset(group, &reps[1..]);
    let s = &l0hat - &(&r0g * &r1hat);
    debug_assert!(s.is_pm_one());
    debug_assert_eq!(s.coeff_sum(), -6);
    Ok(s)
}

/// Exhaustive search over the relative-difference-set construction: every
/// ordered pair of (3,3,3,1) RDSs in `H` relative to `L0` and every `g`
/// satisfying the left-transversal invariant. Empty whenever `H` is normal.
pub fn rds_spread_search(group: &FiniteGroup) -> Result<SearchOutcome, ConstructionError> {
    let h = sylow_3(group);
    let spread = spread_of(&h)?;
    // the forbidden line: the central one when the center meets H in a line
    // (the only case the construction can fire), otherwise the first line
    let center = group.center();
    let forbidden = spread
        .lines
        .iter()
        .find(|l| l.elements().iter().all(|e| center.contains(e)))
        .unwrap_or(&spread.lines[0])
        .clone();
    let triples = rds_triples(group, &h, &forbidden);

    let mut summary = SearchSummary::default();
    let mut masks: HashSet<u64> = HashSet::new();
    let base = mask_of(group, h.elements()) & !mask_of(group, forbidden.elements());

    for r0 in &triples {
        for g in group.elements() {
            let ok = covers_all_cosets_rds(group, &h, r0, g);
            for r1 in &triples {
                summary.candidates_examined += 1;
                if !ok {
                    continue;
                }
                summary.condition_passes += 1;
                summary.sets_constructed += 1;
                // +1-support of L̂0 − R0gR̂1 = (H ∖ L0) ∪ R0·g·R1
                let mut mask = base;
                for &r in r0 {
                    let rg = group.mul(r, g);
                    for &e in r1 {
                        mask |= 1u64 << group.mul(rg, e).index();
                    }
                }
                masks.insert(mask);
            }
        }
    }

    let sets = sets_from_masks(group, masks);
    summary.distinct_sets = sets.len();
    Ok(SearchOutcome { sets, summary })
}

fn covers_all_cosets_rds(group: &FiniteGroup, h: &Subgroup, r0: &[Elem; 3], g: Elem) -> bool {
    let reps = [
        group.identity(),
        group.mul(r0[0], g),
        group.mul(r0[1], g),
        group.mul(r0[2], g),
    ];
    let mut seen = vec![false; group.order()];
    for &r in &reps {
        for &e in h.elements() {
            let idx = group.mul(r, e).index();
            if seen[idx] {
                return false;
            }
            seen[idx] = true;
        }
    }
    true
}

/// True iff `s` is ±1 on the subgroup, zero outside it, and satisfies
/// `ss^(−1) = |K|·1` — the Hadamard transform of a difference set of the
/// subgroup, embedded in the big group ring.
fn is_transform_within(s: &GroupRingElement, sub: &Subgroup) -> bool {
    let group = s.group();
    let on_sub = group.elements().all(|e| {
        let c = s.coeff(e);
        if sub.contains(e) {
            c == 1 || c == -1
        } else {
            c == 0
        }
    });
    on_sub && (s * &s.involution()) == GroupRingElement::scalar(group, sub.order() as i64)
}

fn check_factorization(
    group: &FiniteGroup,
    h: &Subgroup,
    k: &Subgroup,
) -> Result<(), ConstructionError> {
    let trivial_meet = h.elements().iter().filter(|e| k.contains(**e)).count() == 1;
    if !trivial_meet || h.order() * k.order() != group.order() {
        return Err(ConstructionError::BadFactorization);
    }
    Ok(())
}

/// Menon's product: for `G = H × K` (internal direct product) and Hadamard
/// transforms `Sh`, `Sk` of difference sets of the factors, `Sh·Sk` is the
/// Hadamard transform of a difference set of `G`.
pub fn menon_product(
    group: &FiniteGroup,
    h: &Subgroup,
    k: &Subgroup,
    sh: &GroupRingElement,
    sk: &GroupRingElement,
) -> Result<GroupRingElement, ConstructionError> {
    check_factorization(group, h, k)?;
    let commute = h
        .elements()
        .iter()
        .all(|&a| k.elements().iter().all(|&b| group.mul(a, b) == group.mul(b, a)));
    if !commute {
        return Err(ConstructionError::NotADirectProduct);
    }
    dillon_product(group, h, k, sh, sk)
}

/// Dillon's generalization: only `G = HK` with `H ∩ K = {1}` is needed.
pub fn dillon_product(
    group: &FiniteGroup,
    h: &Subgroup,
    k: &Subgroup,
    sh: &GroupRingElement,
    sk: &GroupRingElement,
) -> Result<GroupRingElement, ConstructionError> {
    check_factorization(group, h, k)?;
    if !is_transform_within(sh, h) || !is_transform_within(sk, k) {
        return Err(ConstructionError::NotASubgroupTransform);
    }
    let s = sh * sk;
    debug_assert!(is_hadamard_transform(&s));
    Ok(s)
}

/// Checks the spread-line identities in ℤ[C3×C3], exactly:
///
/// subgroup sums: `Li^(−1) = Li`, `LiH = 3H`, `Li² = 3Li`, `LiLj = H (i≠j)`,
/// `Σ Li = 3 + H`; transforms: `L̂i^(−1) = L̂i`, `L̂iH = 3H`,
/// `L̂i² = 3H − 6L̂i`, `L̂iL̂j = H (i≠j)`, `Σ L̂i = −6 + 2H`.
pub fn verify_line_identities(h: &FiniteGroup) -> Result<bool, ConstructionError> {
    if h.order() != 9 {
        return Err(ConstructionError::WrongShape { order: h.order() });
    }
    let full = Subgroup::full(h);
    let spread = spread_of(&full).map_err(|_| ConstructionError::WrongShape { order: 9 })?;
    let hsum = GroupRingElement::full_sum(h);
    let lines: Vec<GroupRingElement> = spread
        .lines
        .iter()
        .map(GroupRingElement::subgroup_sum)
        .collect();
    let hats: Vec<GroupRingElement> = lines.iter().map(|l| transform_of(l, &hsum)).collect();

    let three_h = 3 * &hsum;
    for (i, l) in lines.iter().enumerate() {
        if l.involution() != *l || l * &hsum != three_h || l * l != 3 * l {
            return Ok(false);
        }
        for (j, l2) in lines.iter().enumerate() {
            if i != j && l * l2 != hsum {
                return Ok(false);
            }
        }
    }
    let sum_lines = lines.iter().fold(GroupRingElement::zero(h), |acc, l| &acc + l);
    if sum_lines != &GroupRingElement::scalar(h, 3) + &hsum {
        return Ok(false);
    }

    for (i, lh) in hats.iter().enumerate() {
        if lh.involution() != *lh || lh * &hsum != three_h {
            return Ok(false);
        }
        if lh * lh != &three_h - &(6 * lh) {
            return Ok(false);
        }
        for (j, lh2) in hats.iter().enumerate() {
            if i != j && lh * lh2 != hsum {
                return Ok(false);
            }
        }
    }
    let sum_hats = hats.iter().fold(GroupRingElement::zero(h), |acc, l| &acc + l);
    if sum_hats != &GroupRingElement::scalar(h, -6) + &(2 * &hsum) {
        return Ok(false);
    }
    Ok(true)
}

/// The 15-element side of a ±1 element with coefficient sum ±6: the
/// +1-support when the sum is −6, the −1-support when it is +6.
pub fn hadamard_support(s: &GroupRingElement) -> Vec<Elem> {
    if s.coeff_sum() < 0 {
        s.support_plus()
    } else {
        s.support_minus()
    }
}
