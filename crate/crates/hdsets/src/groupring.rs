//! Integer group-ring arithmetic.
//!
//! A `GroupRingElement` is a formal sum `Σ a_g·g` with integer coefficients,
//! stored densely over the element indices of its group. Multiplication is
//! convolution; `involution` is the `X^(−1)` operation replacing each `g` by
//! `g⁻¹`; `transform`/`untransform` move between a 0/1 subset indicator `D`
//! and its ±1 companion `G − 2D`.
//!
//! Scalars are embedded as multiples of the identity element. Arithmetic
//! panics on a group mismatch (elements of two different tables), like
//! shape mismatches in array crates; data-dependent failures return errors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::groups::{Elem, FiniteGroup, Subgroup};
use crate::presentation::{parse_word, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupRingError {
    #[error("coefficient {value} of element #{elem} is not in {{0,1}}")]
    NonBinaryCoefficient { elem: u16, value: i64 },
    #[error("coefficient {value} of element #{elem} is not ±1")]
    NonUnitCoefficient { elem: u16, value: i64 },
}

#[derive(Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    group: FiniteGroup,
    coeffs: Vec<i64>,
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl GroupRingElement {
    pub fn zero(group: &FiniteGroup) -> Self {
        GroupRingElement {
            group: group.clone(),
            coeffs: vec![0; group.order()],
        }
    }

    /// `c·1_G`.
    pub fn scalar(group: &FiniteGroup, c: i64) -> Self {
        let mut x = Self::zero(group);
        x.coeffs[0] = c;
        x
    }

    /// 0/1 indicator of a subset. The elements must be distinct.
    pub fn from_subset(group: &FiniteGroup, subset: &[Elem]) -> Self {
        let mut x = Self::zero(group);
        for &e in subset {
            assert!(e.index() < group.order(), "element index out of range");
            assert_eq!(x.coeffs[e.index()], 0, "duplicate element in subset");
            x.coeffs[e.index()] = 1;
        }
        x
    }

    /// The all-ones element `G`.
    pub fn full_sum(group: &FiniteGroup) -> Self {
        GroupRingElement {
            group: group.clone(),
            coeffs: vec![1; group.order()],
        }
    }

    /// `Σ_{h∈H} h` for a subgroup (or any of its cosets via translation).
    pub fn subgroup_sum(h: &Subgroup) -> Self {
        Self::from_subset(h.group(), h.elements())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    #[inline]
    pub fn coeff(&self, e: Elem) -> i64 {
        self.coeffs[e.index()]
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff_sum(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_binary(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0 || c == 1)
    }

    pub fn is_pm_one(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 1 || c == -1)
    }

    /// Support of a 0/1 element, or all elements with nonzero coefficient.
    pub fn support(&self) -> Vec<Elem> {
        self.group
            .elements()
            .filter(|&e| self.coeffs[e.index()] != 0)
            .collect()
    }

    pub fn support_plus(&self) -> Vec<Elem> {
        self.group
            .elements()
            .filter(|&e| self.coeffs[e.index()] > 0)
            .collect()
    }

    pub fn support_minus(&self) -> Vec<Elem> {
        self.group
            .elements()
            .filter(|&e| self.coeffs[e.index()] < 0)
            .collect()
    }

    /// `X^(−1)`: the coefficient of `g` becomes the coefficient of `g⁻¹`.
    pub fn involution(&self) -> Self {
        let mut out = Self::zero(&self.group);
        for e in self.group.elements() {
            out.coeffs[self.group.inv(e).index()] = self.coeffs[e.index()];
        }
        out
    }

    /// The Hadamard transform `G − 2X` of a 0/1 element.
    pub fn transform(&self) -> Result<Self, GroupRingError> {
        if let Some(e) = self.coeffs.iter().position(|&c| c != 0 && c != 1) {
            return Err(GroupRingError::NonBinaryCoefficient {
                elem: e as u16,
                value: self.coeffs[e],
            });
        }
        let mut out = Self::zero(&self.group);
        for i in 0..self.coeffs.len() {
            out.coeffs[i] = 1 - 2 * self.coeffs[i];
        }
        Ok(out)
    }

    /// Recovers `D = (G − S)/2` from a ±1 element; exact by the precondition.
    pub fn untransform(&self) -> Result<Self, GroupRingError> {
        if let Some(e) = self.coeffs.iter().position(|&c| c != 1 && c != -1) {
            return Err(GroupRingError::NonUnitCoefficient {
                elem: e as u16,
                value: self.coeffs[e],
            });
        }
        let mut out = Self::zero(&self.group);
        for i in 0..self.coeffs.len() {
            out.coeffs[i] = (1 - self.coeffs[i]) / 2;
        }
        Ok(out)
    }

    /// Left translate `g·X`.
    pub fn translate_left(&self, g: Elem) -> Self {
        let mut out = Self::zero(&self.group);
        for e in self.group.elements() {
            let c = self.coeffs[e.index()];
            if c != 0 {
                out.coeffs[self.group.mul(g, e).index()] += c;
            }
        }
        out
    }

    /// Right translate `X·g`.
    pub fn translate_right(&self, g: Elem) -> Self {
        let mut out = Self::zero(&self.group);
        for e in self.group.elements() {
            let c = self.coeffs[e.index()];
            if c != 0 {
                out.coeffs[self.group.mul(e, g).index()] += c;
            }
        }
        out
    }

    /// Renders as `c1*w1 + c2*w2 + ...` over canonical element words; the
    /// zero element renders as `0`. Round-trips through `parse`.
    pub fn render(&self) -> String {
        let terms: Vec<String> = self
            .group
            .elements()
            .filter(|&e| self.coeffs[e.index()] != 0)
            .map(|e| format!("{}*{}", self.coeffs[e.index()], self.group.render_elem(e)))
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    /// Parses the `render` format. Coefficients of repeated words accumulate.
    pub fn parse(group: &FiniteGroup, text: &str) -> Result<Self, ParseError> {
        let mut out = Self::zero(group);
        let trimmed = text.trim();
        if trimmed == "0" {
            return Ok(out);
        }
        let mut offset = 0usize;
        for term in trimmed.split('+') {
            let term_start = offset;
            offset += term.len() + 1;
            let t = term.trim();
            if t.is_empty() {
                return Err(ParseError {
                    pos: term_start,
                    message: "empty term".to_string(),
                });
            }
            let (coeff_str, word_str) = match t.split_once('*') {
                Some((c, w)) => (c.trim(), w.trim()),
                None => {
                    return Err(ParseError {
                        pos: term_start,
                        message: format!("term '{t}' is not of the form coeff*word"),
                    })
                }
            };
            let coeff: i64 = coeff_str.parse().map_err(|_| ParseError {
                pos: term_start,
                message: format!("bad coefficient '{coeff_str}'"),
            })?;
            let word = parse_word(word_str, group.generator_names()).map_err(|e| ParseError {
                pos: term_start + e.pos,
                message: e.message,
            })?;
            let e = group.eval_word(&word);
            out.coeffs[e.index()] += coeff;
        }
        Ok(out)
    }

    fn assert_same_group(&self, other: &Self) {
        assert!(
            self.group == other.group,
            "group ring elements over different groups"
        );
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        self.assert_same_group(rhs);
        let mut out = self.clone();
        for (o, r) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            *o += r;
        }
        out
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        self.assert_same_group(rhs);
        let mut out = self.clone();
        for (o, r) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            *o -= r;
        }
        out
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        let mut out = self.clone();
        for o in out.coeffs.iter_mut() {
            *o = -*o;
        }
        out
    }
}

/// Convolution: the coefficient of `g` in `XY` is `Σ_{xy=g} a_x·b_y`.
impl Mul for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        self.assert_same_group(rhs);
        let g = &self.group;
        let mut out = GroupRingElement::zero(g);
        for x in g.elements() {
            let cx = self.coeffs[x.index()];
            if cx == 0 {
                continue;
            }
            for y in g.elements() {
                let cy = rhs.coeffs[y.index()];
                if cy == 0 {
                    continue;
                }
                out.coeffs[g.mul(x, y).index()] += cx * cy;
            }
        }
        out
    }
}

impl Mul<&GroupRingElement> for i64 {
    type Output = GroupRingElement;
    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = rhs.clone();
        for o in out.coeffs.iter_mut() {
            *o *= self;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_group, spread_of, DEFAULT_ORDER_CAP};
    use crate::presentation::parse_presentation;

    fn c3x3() -> FiniteGroup {
        let p = parse_presentation("<a,b: a^3=b^3=[a,b]=1>").unwrap();
        build_group(&p, DEFAULT_ORDER_CAP).unwrap()
    }

    fn lines(h: &FiniteGroup) -> Vec<GroupRingElement> {
        let spread = spread_of(&Subgroup::full(h)).unwrap();
        spread
            .lines
            .iter()
            .map(GroupRingElement::subgroup_sum)
            .collect()
    }

    #[test]
    fn subset_indicator() {
        let h = c3x3();
        let a = h.generator(0);
        let line = Subgroup::generated_by(&h, &[a]);
        let x = GroupRingElement::subgroup_sum(&line);
        assert_eq!(x.coeff_sum(), 3);
        assert!(x.is_binary());
        assert_eq!(x.coeff(h.identity()), 1);
        assert_eq!(x.coeff(a), 1);
        assert_eq!(x.coeff(h.mul(a, a)), 1);

        assert_eq!(GroupRingElement::from_subset(&h, &[]).coeff_sum(), 0);
        assert_eq!(GroupRingElement::full_sum(&h).coeff_sum(), 9);
    }

    #[test]
    fn line_products() {
        let h = c3x3();
        let ls = lines(&h);
        let hsum = GroupRingElement::full_sum(&h);
        for (i, li) in ls.iter().enumerate() {
            assert_eq!(li * li, 3 * li);
            for (j, lj) in ls.iter().enumerate() {
                if i != j {
                    assert_eq!(&(li * lj), &hsum);
                }
            }
        }
        assert_eq!(&hsum * &hsum, 9 * &hsum);
    }

    #[test]
    fn involution_fixes_lines_and_is_antimultiplicative() {
        let h = c3x3();
        for l in lines(&h) {
            assert_eq!(l.involution(), l);
        }
        let a = GroupRingElement::from_subset(&h, &[h.generator(0), h.generator(1)]);
        let b = GroupRingElement::from_subset(
            &h,
            &[h.identity(), h.mul(h.generator(0), h.generator(1))],
        );
        assert_eq!(a.involution().involution(), a);
        assert_eq!((&a * &b).involution(), &b.involution() * &a.involution());
    }

    #[test]
    fn transform_and_untransform() {
        let h = c3x3();
        let d = GroupRingElement::from_subset(&h, &[h.generator(0)]);
        let s = d.transform().unwrap();
        assert!(s.is_pm_one());
        assert_eq!(s.coeff_sum(), 9 - 2);
        assert_eq!(s.untransform().unwrap(), d);

        let empty = GroupRingElement::zero(&h).transform().unwrap();
        assert_eq!(empty, GroupRingElement::full_sum(&h));
        assert_eq!(
            GroupRingElement::full_sum(&h).untransform().unwrap(),
            GroupRingElement::zero(&h)
        );
        let neg = -&GroupRingElement::full_sum(&h);
        assert_eq!(neg.untransform().unwrap(), GroupRingElement::full_sum(&h));

        assert!(matches!(
            (2 * &d).transform(),
            Err(GroupRingError::NonBinaryCoefficient { .. })
        ));
        assert!(matches!(
            GroupRingElement::zero(&h).untransform(),
            Err(GroupRingError::NonUnitCoefficient { .. })
        ));
    }

    #[test]
    fn coefficient_sum_is_multiplicative() {
        let h = c3x3();
        let ls = lines(&h);
        for x in &ls {
            for y in &ls {
                assert_eq!((x * y).coeff_sum(), x.coeff_sum() * y.coeff_sum());
            }
        }
    }

    #[test]
    fn ring_laws_on_sample_elements() {
        let g = {
            let p = parse_presentation(
                "<a,b,c: a^3=b^3=c^4=[a,b]=a^2ca^-1c^-1=b^2cb^-1c^-1=1>",
            )
            .unwrap();
            build_group(&p, DEFAULT_ORDER_CAP).unwrap()
        };
        // deterministic pseudo-random small elements
        let mut seed = 0x12345678u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        let mut rand_elem = || {
            let mut x = GroupRingElement::zero(&g);
            for e in g.elements() {
                x = &x + &(((next() % 5) as i64 - 2) * &GroupRingElement::from_subset(&g, &[e]));
            }
            x
        };
        for _ in 0..5 {
            let (x, y, z) = (rand_elem(), rand_elem(), rand_elem());
            assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            assert_eq!((&x * &y).involution(), &y.involution() * &x.involution());
            assert_eq!((&x * &y).coeff_sum(), x.coeff_sum() * y.coeff_sum());
        }
    }

    #[test]
    fn render_parse_round_trip() {
        let h = c3x3();
        let ls = lines(&h);
        let x = &(3 * &ls[0]) - &(2 * &ls[2]);
        let parsed = GroupRingElement::parse(&h, &x.render()).unwrap();
        assert_eq!(parsed, x);
        assert_eq!(
            GroupRingElement::parse(&h, "0").unwrap(),
            GroupRingElement::zero(&h)
        );
        assert!(GroupRingElement::parse(&h, "1*a + junk").is_err());
        assert!(GroupRingElement::parse(&h, "").is_err());
    }
}

