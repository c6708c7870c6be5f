//! Exact representation-theoretic verification over the Eisenstein integers.
//!
//! The group `A4 × C3` has twelve irreducible representations: nine linear
//! ones (three characters of the `A4` part times three characters of the
//! central `⟨b⟩`) and three of degree 3 (the standard representation of
//! `A4`, with `b ↦ ω^j·I`). All their values lie in `ℤ[ω]` with
//! `ω = e^{2πi/3}`, so a transform `S` can be checked exactly:
//! `φ(S)·φ(S)*ᵗ = 36·I` in every irreducible representation iff
//! `SS^(−1) = 36`. No floating point is involved anywhere.
//!
//! The degree-3 images of the two involution generators are not copied from
//! any worked example; they are solved from the multiplicative constraints
//! given `a ↦ P` (the cyclic permutation matrix) and verified on all 36²
//! products.

use std::fmt;

use thiserror::Error;

use crate::groupring::GroupRingElement;
use crate::groups::{is_normal, sylow_3, Elem, FiniteGroup, Subgroup};

#[derive(Debug, Error)]
pub enum RepError {
    #[error("expected the order-36 group A4×C3 with generators (a,b,c,d) of orders (3,3,2,2), b central")]
    NotGroupNine,
    #[error("expected C3×C3 with an order-3 forbidden subgroup and a 3-element set")]
    WrongShape,
    #[error("no signed permutation images satisfy the group's multiplication table")]
    NoRepresentation,
}

/// An Eisenstein integer `p + qω`, `ω² = −1 − ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EisensteinInt {
    pub p: i64,
    pub q: i64,
}

impl EisensteinInt {
    pub const ZERO: EisensteinInt = EisensteinInt { p: 0, q: 0 };
    pub const ONE: EisensteinInt = EisensteinInt { p: 1, q: 0 };
    pub const OMEGA: EisensteinInt = EisensteinInt { p: 0, q: 1 };

    pub fn from_int(p: i64) -> Self {
        EisensteinInt { p, q: 0 }
    }

    /// `ω^k` for any integer `k`.
    pub fn omega_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Self::ONE,
            1 => Self::OMEGA,
            _ => EisensteinInt { p: -1, q: -1 }, // ω² = −1 − ω
        }
    }

    /// Complex conjugate: `conj(p + qω) = (p − q) − qω`.
    pub fn conj(self) -> Self {
        EisensteinInt {
            p: self.p - self.q,
            q: -self.q,
        }
    }

    /// `z·z̄ = p² − pq + q² ≥ 0`.
    pub fn norm(self) -> i64 {
        self.p * self.p - self.p * self.q + self.q * self.q
    }

    pub fn is_zero(self) -> bool {
        self.p == 0 && self.q == 0
    }
}

impl std::ops::Add for EisensteinInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        EisensteinInt {
            p: self.p + o.p,
            q: self.q + o.q,
        }
    }
}

impl std::ops::Sub for EisensteinInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        EisensteinInt {
            p: self.p - o.p,
            q: self.q - o.q,
        }
    }
}

/// `(p1 + q1ω)(p2 + q2ω)` with `ω² = −1−ω`.
impl std::ops::Mul for EisensteinInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        EisensteinInt {
            p: self.p * o.p - self.q * o.q,
            q: self.p * o.q + self.q * o.p - self.q * o.q,
        }
    }
}

impl std::ops::Neg for EisensteinInt {
    type Output = Self;
    fn neg(self) -> Self {
        EisensteinInt {
            p: -self.p,
            q: -self.q,
        }
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p, self.q) {
            (p, 0) => write!(f, "{p}"),
            (0, 1) => write!(f, "w"),
            (0, -1) => write!(f, "-w"),
            (0, q) => write!(f, "{q}w"),
            (p, 1) => write!(f, "{p}+w"),
            (p, -1) => write!(f, "{p}-w"),
            (p, q) if q > 0 => write!(f, "{p}+{q}w"),
            (p, q) => write!(f, "{p}-{}w", -q),
        }
    }
}

/// A square matrix over `ℤ[ω]`, degree 1 or 3 here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMatrix {
    degree: usize,
    entries: Vec<EisensteinInt>,
}

impl RepMatrix {
    pub fn zeros(degree: usize) -> Self {
        RepMatrix {
            degree,
            entries: vec![EisensteinInt::ZERO; degree * degree],
        }
    }

    pub fn identity(degree: usize) -> Self {
        Self::scalar(degree, EisensteinInt::ONE)
    }

    pub fn scalar(degree: usize, z: EisensteinInt) -> Self {
        let mut m = Self::zeros(degree);
        for i in 0..degree {
            m.entries[i * degree + i] = z;
        }
        m
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> EisensteinInt {
        self.entries[i * self.degree + j]
    }

    pub fn set(&mut self, i: usize, j: usize, z: EisensteinInt) {
        self.entries[i * self.degree + j] = z;
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.degree, o.degree);
        RepMatrix {
            degree: self.degree,
            entries: self
                .entries
                .iter()
                .zip(&o.entries)
                .map(|(a, b)| *a + *b)
                .collect(),
        }
    }

    pub fn scale(&self, z: EisensteinInt) -> Self {
        RepMatrix {
            degree: self.degree,
            entries: self.entries.iter().map(|a| *a * z).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.degree, o.degree);
        let d = self.degree;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let cur = out.get(i, j);
                    out.set(i, j, cur + a * o.get(k, j));
                }
            }
        }
        out
    }

    pub fn conj_transpose(&self) -> Self {
        let d = self.degree;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for j in 0..d {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn all_ones(degree: usize) -> Self {
        RepMatrix {
            degree,
            entries: vec![EisensteinInt::ONE; degree * degree],
        }
    }
}

impl fmt::Display for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.degree {
            let row: Vec<String> = (0..self.degree).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// An exact matrix representation: one image per group element, verified
/// multiplicative on every pair at construction time.
#[derive(Debug, Clone)]
pub struct Representation {
    pub degree: usize,
    images: Vec<RepMatrix>,
}

impl Representation {
    pub fn image(&self, e: Elem) -> &RepMatrix {
        &self.images[e.index()]
    }

    /// `φ(X) = Σ a_g·φ(g)`.
    pub fn image_of_sum(&self, x: &GroupRingElement) -> RepMatrix {
        let mut out = RepMatrix::zeros(self.degree);
        for e in x.group().elements() {
            let c = x.coeff(e);
            if c != 0 {
                out = out.add(&self.images[e.index()].scale(EisensteinInt::from_int(c)));
            }
        }
        out
    }

    /// `φ(Σ_{e∈set} e)`.
    pub fn image_of_set(&self, set: &[Elem]) -> RepMatrix {
        let mut out = RepMatrix::zeros(self.degree);
        for &e in set {
            out = out.add(&self.images[e.index()]);
        }
        out
    }
}

/// All 48 signed 3×3 permutation matrices.
fn signed_permutations() -> Vec<RepMatrix> {
    let perms = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut out = Vec::with_capacity(48);
    for perm in perms {
        for signs in 0..8u8 {
            let mut m = RepMatrix::zeros(3);
            for (i, &col) in perm.iter().enumerate() {
                let s = if signs & (1 << i) != 0 { -1 } else { 1 };
                m.set(i, col, EisensteinInt::from_int(s));
            }
            out.push(m);
        }
    }
    out
}

/// Builds every image from the generator images via canonical words, then
/// accepts only if multiplicativity holds on all pairs.
fn images_from_generators(
    group: &FiniteGroup,
    gen_images: &[RepMatrix],
) -> Option<Vec<RepMatrix>> {
    let degree = gen_images[0].degree();
    let mut images: Vec<RepMatrix> = Vec::with_capacity(group.order());
    for e in group.elements() {
        let mut m = RepMatrix::identity(degree);
        for (g, _) in group.name(e).letters() {
            m = m.mul(&gen_images[g]);
        }
        images.push(m);
    }
    for x in group.elements() {
        for y in group.elements() {
            let xy = group.mul(x, y);
            if images[xy.index()] != images[x.index()].mul(&images[y.index()]) {
                return None;
            }
        }
    }
    Some(images)
}

fn character_norm(images: &[RepMatrix]) -> i64 {
    images
        .iter()
        .map(|m| {
            let mut tr = EisensteinInt::ZERO;
            for i in 0..m.degree() {
                tr = tr + m.get(i, i);
            }
            tr.norm()
        })
        .sum()
}

fn validate_group_nine(group: &FiniteGroup) -> Result<(), RepError> {
    if group.order() != 36 || group.generator_count() != 4 || group.is_abelian() {
        return Err(RepError::NotGroupNine);
    }
    let orders: Vec<usize> = (0..4).map(|i| group.element_order(group.generator(i))).collect();
    if orders != [3, 3, 2, 2] {
        return Err(RepError::NotGroupNine);
    }
    let b = group.generator(1);
    let central = group.elements().all(|x| group.mul(b, x) == group.mul(x, b));
    if !central {
        return Err(RepError::NotGroupNine);
    }
    let h = sylow_3(group);
    if !h.is_elementary_abelian() || is_normal(group, &h) {
        return Err(RepError::NotGroupNine);
    }
    Ok(())
}

/// The twelve irreducible representations of the catalog's ninth group
/// (≅ A4×C3): nine linear and three of degree 3, all exact over `ℤ[ω]`
/// and each verified multiplicative on all 36² pairs.
pub fn build_irreps_a4c3(group: &FiniteGroup) -> Result<Vec<Representation>, RepError> {
    validate_group_nine(group)?;
    let mut reps = Vec::with_capacity(12);

    // nine linear characters: a ↦ ω^t, b ↦ ω^s, c,d ↦ 1
    for t in 0..3i64 {
        for s in 0..3i64 {
            let gen_images = vec![
                RepMatrix::scalar(1, EisensteinInt::omega_pow(t)),
                RepMatrix::scalar(1, EisensteinInt::omega_pow(s)),
                RepMatrix::identity(1),
                RepMatrix::identity(1),
            ];
            let images =
                images_from_generators(group, &gen_images).ok_or(RepError::NoRepresentation)?;
            reps.push(Representation { degree: 1, images });
        }
    }

    // degree 3: a ↦ cyclic permutation matrix, b ↦ ω^s·I; the images of the
    // involutions c and d are solved from the multiplication table
    let mut p = RepMatrix::zeros(3);
    p.set(0, 1, EisensteinInt::ONE);
    p.set(1, 2, EisensteinInt::ONE);
    p.set(2, 0, EisensteinInt::ONE);
    let candidates = signed_permutations();
    let ident3 = RepMatrix::identity(3);

    let mut cd_solution: Option<(RepMatrix, RepMatrix)> = None;
    'outer: for mc in &candidates {
        if mc.mul(mc) != ident3 {
            continue;
        }
        for md in &candidates {
            if md.mul(md) != ident3 || mc.mul(md) != md.mul(mc) {
                continue;
            }
            let gen_images = vec![p.clone(), ident3.clone(), mc.clone(), md.clone()];
            if let Some(images) = images_from_generators(group, &gen_images) {
                // keep only the irreducible solution: Σ_g |tr φ(g)|² = |G|
                // (candidates like c,d ↦ I are homomorphisms but factor
                // through the C3 quotient)
                if character_norm(&images) == group.order() as i64 {
                    cd_solution = Some((mc.clone(), md.clone()));
                    break 'outer;
                }
            }
        }
    }
    let (mc, md) = cd_solution.ok_or(RepError::NoRepresentation)?;
    for s in 0..3i64 {
        let gen_images = vec![
            p.clone(),
            RepMatrix::scalar(3, EisensteinInt::omega_pow(s)),
            mc.clone(),
            md.clone(),
        ];
        let images =
            images_from_generators(group, &gen_images).ok_or(RepError::NoRepresentation)?;
        reps.push(Representation { degree: 3, images });
    }

    debug_assert_eq!(reps.iter().map(|r| r.degree * r.degree).sum::<usize>(), 36);
    Ok(reps)
}

/// Verifier with the twelve representations prebuilt.
pub struct RepVerifier {
    reps: Vec<Representation>,
    order: usize,
}

impl RepVerifier {
    pub fn new(group: &FiniteGroup) -> Result<Self, RepError> {
        Ok(RepVerifier {
            reps: build_irreps_a4c3(group)?,
            order: group.order(),
        })
    }

    pub fn representations(&self) -> &[Representation] {
        &self.reps
    }

    /// True iff `S` has ±1 coefficients and `φ(S)·φ(S)*ᵗ = 36·I` exactly in
    /// every irreducible representation.
    pub fn verify_transform(&self, s: &GroupRingElement) -> bool {
        if !s.is_pm_one() {
            return false;
        }
        self.reps.iter().all(|rep| {
            let m = rep.image_of_sum(s);
            m.mul(&m.conj_transpose())
                == RepMatrix::scalar(rep.degree, EisensteinInt::from_int(self.order as i64))
        })
    }

    /// Per-representation images of `S` and the products `φ(S)·φ(S)*ᵗ`,
    /// rendered with `p+qw` entries.
    pub fn diagnostics(&self, s: &GroupRingElement) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        for (i, rep) in self.reps.iter().enumerate() {
            let m = rep.image_of_sum(s);
            let prod = m.mul(&m.conj_transpose());
            let _ = writeln!(out, "representation {} (degree {}):", i + 1, rep.degree);
            let _ = writeln!(out, "  phi(S) =");
            for line in m.to_string().lines() {
                let _ = writeln!(out, "    {line}");
            }
            let _ = writeln!(out, "  phi(S)*conj-transpose =");
            for line in prod.to_string().lines() {
                let _ = writeln!(out, "    {line}");
            }
        }
        out
    }
}

/// Character criterion for (3,3,3,1) relative difference sets in C3×C3
/// relative to `N`: every nonprincipal character that is principal on `N`
/// kills `R`, and every character nonprincipal on `N` gives
/// `χ(R)·conj(χ(R)) = 3` — evaluated exactly in `ℤ[ω]`. Equivalent to the
/// difference-set equation for 3-element subsets.
pub fn rds_character_check(
    h: &FiniteGroup,
    r: &[Elem],
    n: &Subgroup,
) -> Result<bool, RepError> {
    if h.order() != 9 || n.order() != 3 || r.len() != 3 {
        return Err(RepError::WrongShape);
    }
    let full = Subgroup::full(h);
    if !full.is_elementary_abelian() {
        return Err(RepError::WrongShape);
    }
    // basis: u generates N, v is any element outside N
    let u = n.elements()[1];
    let v = h
        .elements()
        .find(|&e| !n.contains(e))
        .expect("proper subgroup");
    // exponents of x = u^i v^j
    let mut expo = [(0i64, 0i64); 9];
    for i in 0..3i64 {
        for j in 0..3i64 {
            let mut x = h.identity();
            for _ in 0..i {
                x = h.mul(x, u);
            }
            for _ in 0..j {
                x = h.mul(x, v);
            }
            expo[x.index()] = (i, j);
        }
    }
    for s in 0..3i64 {
        for t in 0..3i64 {
            if s == 0 && t == 0 {
                continue;
            }
            let chi_r = r.iter().fold(EisensteinInt::ZERO, |acc, &e| {
                let (i, j) = expo[e.index()];
                acc + EisensteinInt::omega_pow(s * i + t * j)
            });
            if s == 0 {
                // principal on N but not on H
                if !chi_r.is_zero() {
                    return Ok(false);
                }
            } else if chi_r.norm() != 3 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
