//! Sparse exact alternating forms on spaces of dimension ≤ 8.
//!
//! Monomials are bitmasks internally (bit `i` ↔ `e^{i+1}`); the external contract is
//! the sorted 1-based index tuple.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::scalar::{Field, Q};

pub const MAX_DIM: usize = 8;

pub type Mask = u32;

#[derive(Clone, PartialEq)]
pub struct KForm<F = Q> {
    dim: usize,
    degree: usize,
    terms: BTreeMap<Mask, F>,
}

/// Same representation, read on the dual space.
pub type KVector<F = Q> = KForm<F>;

pub fn mask_of(indices: &[usize]) -> Mask {
    indices.iter().fold(0, |m, &i| m | (1 << (i - 1)))
}

pub fn indices_of(mask: Mask) -> Vec<usize> {
    (0..32).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect()
}

/// Sign of `e^A ∧ e^B` relative to `e^{A∪B}`, for disjoint masks.
#[inline]
pub fn wedge_sign(a: Mask, b: Mask) -> i32 {
    let mut swaps = 0;
    let mut rest = b;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        swaps += (a >> (bit + 1)).count_ones();
        rest &= rest - 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All masks of `k` bits below `n`, in increasing order.
pub fn masks(n: usize, k: usize) -> Vec<Mask> {
    let mut out: Vec<Mask> = (0..(1u32 << n)).filter(|m| m.count_ones() as usize == k).collect();
    out.sort_unstable();
    out
}

fn signed<F: Field>(s: i32, x: F) -> F {
    if s < 0 {
        -x
    } else {
        x
    }
}

impl<F: Field> KForm<F> {
    pub fn zero(dim: usize, degree: usize) -> Self {
        // structure equations of 1d algebras need a (zero) 2-form
        assert!(dim <= MAX_DIM && degree <= dim.max(2), "form shape {dim}/{degree}");
        KForm { dim, degree, terms: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, c: F) -> Self {
        let mut f = Self::zero(dim, 0);
        f.add_term(0, c);
        f
    }

    /// `c·e^{i1…ik}` with 1-based indices in any order (sign of the sort applied).
    pub fn monomial(dim: usize, indices: &[usize], c: F) -> Result<Self> {
        let mut f = Self::zero(dim, indices.len());
        let mut m: Mask = 0;
        let mut sign = 1;
        for &i in indices {
            if i == 0 || i > dim {
                return Err(Error::Index(i));
            }
            let bit = 1 << (i - 1);
            if m & bit != 0 {
                return Ok(f);
            }
            sign *= wedge_sign(m, bit);
            m |= bit;
        }
        f.add_term(m, signed(sign, c));
        Ok(f)
    }

    /// `e^{i1…ik}` with coefficient one; panics on bad indices (for literals).
    pub fn e(dim: usize, indices: &[usize]) -> Self {
        Self::monomial(dim, indices, F::one()).expect("bad monomial")
    }

    /// Degree-1 form with the given coordinates.
    pub fn from_coords(coords: &[F]) -> Self {
        let mut f = Self::zero(coords.len(), 1);
        for (i, c) in coords.iter().enumerate() {
            f.add_term(1 << i, c.clone());
        }
        f
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mask, &F)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff_mask(&self, m: Mask) -> F {
        self.terms.get(&m).cloned().unwrap_or_else(F::zero)
    }

    /// Coefficient of `e^{indices}` (indices sorted ascending, 1-based).
    pub fn coeff(&self, indices: &[usize]) -> F {
        self.coeff_mask(mask_of(indices))
    }

    pub fn add_term(&mut self, m: Mask, c: F) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.count_ones() as usize, self.degree);
        let entry = self.terms.remove(&m);
        let v = match entry {
            Some(old) => old + c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(m, v);
        }
    }

    /// Coordinate vector in the basis `masks(dim, degree)`.
    pub fn to_vec(&self) -> Vec<F> {
        masks(self.dim, self.degree).into_iter().map(|m| self.coeff_mask(m)).collect()
    }

    pub fn from_vec(dim: usize, degree: usize, v: &[F]) -> Self {
        let mut f = Self::zero(dim, degree);
        for (m, c) in masks(dim, degree).into_iter().zip(v) {
            f.add_term(m, c.clone());
        }
        f
    }

    fn check_same(&self, o: &Self) -> Result<()> {
        if self.dim != o.dim || self.degree != o.degree {
            return Err(Error::Dim(format!("({},{}) vs ({},{})", self.dim, self.degree, o.dim, o.degree)));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c.clone());
        }
        Ok(r)
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut r = Self::zero(self.dim, self.degree);
        if c.is_zero() {
            return r;
        }
        for (m, x) in &self.terms {
            r.add_term(*m, x.clone() * c.clone());
        }
        r
    }

    pub fn try_wedge(&self, o: &Self) -> Result<Self> {
        if self.dim != o.dim {
            return Err(Error::Dim(format!("wedge of dims {} and {}", self.dim, o.dim)));
        }
        if self.degree + o.degree > self.dim {
            return Err(Error::Dim(format!("degree {} + {} exceeds dimension {}", self.degree, o.degree, self.dim)));
        }
        let mut r = Self::zero(self.dim, self.degree + o.degree);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                if a & b != 0 {
                    continue;
                }
                r.add_term(a | b, signed(wedge_sign(*a, *b), x.clone() * y.clone()));
            }
        }
        Ok(r)
    }

    /// Wedge; panics on dimension mismatch.
    pub fn wedge(&self, o: &Self) -> Self {
        self.try_wedge(o).expect("wedge dimension mismatch")
    }

    /// Interior product with the basis vector `e_i` (1-based).
    pub fn contract_basis(&self, i: usize) -> Self {
        assert!(self.degree >= 1);
        let bit: Mask = 1 << (i - 1);
        let mut r = Self::zero(self.dim, self.degree - 1);
        for (m, c) in &self.terms {
            if m & bit != 0 {
                let pos = (m & (bit - 1)).count_ones();
                r.add_term(m & !bit, signed(if pos % 2 == 0 { 1 } else { -1 }, c.clone()));
            }
        }
        r
    }

    /// Interior product `v ⌟ a` with a vector given in coordinates.
    pub fn contract(&self, v: &[F]) -> Result<Self> {
        if v.len() != self.dim {
            return Err(Error::Dim(format!("vector of length {} on dim {}", v.len(), self.dim)));
        }
        if self.degree == 0 {
            return Err(Error::Dim("contraction of a 0-form".into()));
        }
        let mut r = Self::zero(self.dim, self.degree - 1);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                r = r.try_add(&self.contract_basis(i + 1).scale(c))?;
            }
        }
        Ok(r)
    }

    /// `w^p`.
    pub fn power(&self, p: usize) -> Self {
        let mut r = Self::scalar(self.dim, F::one());
        for _ in 0..p {
            if r.degree + self.degree > self.dim {
                return Self::zero(self.dim, self.dim);
            }
            r = r.wedge(self);
        }
        r
    }

    /// Rank of `T(v) = v⌟a`, i.e. the dimension of the support of `a`.
    pub fn rank(&self) -> usize {
        if self.degree == 0 {
            return 0;
        }
        let cols: Vec<Vec<F>> = (1..=self.dim).map(|i| self.contract_basis(i).to_vec()).collect();
        linalg::rank(&cols)
    }

    pub fn is_decomposable(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::Other("decomposability of the zero form".into()));
        }
        Ok(self.rank() == self.degree)
    }

    /// Largest `l` with `w^l ≠ 0`.
    pub fn two_form_length(&self) -> usize {
        assert_eq!(self.degree, 2, "two_form_length needs a 2-form");
        let mut p = Self::scalar(self.dim, F::one());
        let mut l = 0;
        loop {
            if p.degree + 2 > self.dim {
                return l;
            }
            let next = p.wedge(self);
            if next.is_zero() {
                return l;
            }
            p = next;
            l += 1;
        }
    }

    /// Component with exactly `signature[b]` indices from block `b` (blocks 1-based).
    pub fn graded_project(&self, blocks: &[Vec<usize>], signature: &[usize]) -> Result<Self> {
        if blocks.len() != signature.len() || signature.iter().sum::<usize>() != self.degree {
            return Err(Error::Dim("inconsistent signature".into()));
        }
        let bm: Vec<Mask> = blocks.iter().map(|b| mask_of(b)).collect();
        let mut r = Self::zero(self.dim, self.degree);
        for (m, c) in &self.terms {
            if bm.iter().zip(signature).all(|(b, &s)| (m & b).count_ones() as usize == s) {
                r.add_term(*m, c.clone());
            }
        }
        Ok(r)
    }

    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> KForm<G> {
        let mut r = KForm::<G>::zero(self.dim, self.degree);
        for (m, c) in &self.terms {
            r.add_term(*m, f(c));
        }
        r
    }

    /// Complement dual `Λ^k V* → Λ^{n−k} V` via `vol⁻¹`: `e^I ↦ sign(I,Iᶜ)·e_{Iᶜ}`.
    pub fn dual_vector(&self) -> KVector<F> {
        let full: Mask = (1 << self.dim) - 1;
        let mut r = KForm::zero(self.dim, self.dim - self.degree);
        for (m, c) in &self.terms {
            let mc = full & !m;
            r.add_term(mc, signed(wedge_sign(*m, mc), c.clone()));
        }
        r
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.to_vec().iter().map(|c| c.to_f64()).collect()
    }
}

impl KForm<Q> {
    pub fn lift<F: Field>(&self) -> KForm<F> {
        self.map_field(F::from_q)
    }
}

impl<F: Field> std::ops::Add for &KForm<F> {
    type Output = KForm<F>;
    fn add(self, o: &KForm<F>) -> KForm<F> {
        self.try_add(o).expect("form addition shape mismatch")
    }
}

impl<F: Field> std::ops::Sub for &KForm<F> {
    type Output = KForm<F>;
    fn sub(self, o: &KForm<F>) -> KForm<F> {
        self.try_add(&-o).expect("form subtraction shape mismatch")
    }
}

impl<F: Field> std::ops::Neg for &KForm<F> {
    type Output = KForm<F>;
    fn neg(self) -> KForm<F> {
        self.scale(&-F::one())
    }
}

impl<F: Field> fmt::Debug for KForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for KForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let idx: String = indices_of(*m).iter().map(|i| i.to_string()).collect();
                let mono = if idx.is_empty() { "1".to_string() } else { format!("e{idx}") };
                if *c == F::one() {
                    mono
                } else if *c == -F::one() {
                    format!("-{mono}")
                } else {
                    format!("({})·{mono}", c.to_text())
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    indices: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct KFormJson {
    dim: usize,
    degree: usize,
    terms: Vec<TermJson>,
}

impl<F: Field> Serialize for KForm<F> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        KFormJson {
            dim: self.dim,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson { indices: indices_of(*m), coeff: c.to_text() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, F: Field> Deserialize<'de> for KForm<F> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = KFormJson::deserialize(d)?;
        if j.dim > MAX_DIM || j.degree > j.dim {
            return Err(D::Error::custom(format!("bad form shape ({}, {})", j.dim, j.degree)));
        }
        let mut f = KForm::zero(j.dim, j.degree);
        for t in j.terms {
            if t.indices.len() != j.degree || t.indices.windows(2).any(|w| w[0] >= w[1]) {
                return Err(D::Error::custom(format!("bad index set {:?}", t.indices)));
            }
            if t.indices.iter().any(|&i| i == 0 || i > j.dim) {
                return Err(D::Error::custom(format!("index out of range in {:?}", t.indices)));
            }
            let c = F::from_text(&t.coeff).map_err(D::Error::custom)?;
            f.add_term(mask_of(&t.indices), c);
        }
        Ok(f)
    }
}

/// Map of coframes: row `i` is the image of source `e^{i+1}` written in the target coframe.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap<F = Q> {
    pub rows: Mat<F>,
    pub target_dim: usize,
}

impl<F: Field> LinearMap<F> {
    pub fn new(rows: Mat<F>, target_dim: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != target_dim) {
            return Err(Error::Dim("ragged linear map".into()));
        }
        Ok(LinearMap { rows, target_dim })
    }

    pub fn identity(n: usize) -> Self {
        LinearMap { rows: linalg::identity(n), target_dim: n }
    }

    pub fn diag(d: &[F]) -> Self {
        let n = d.len();
        let mut rows = linalg::zeros(n, n);
        for i in 0..n {
            rows[i][i] = d[i].clone();
        }
        LinearMap { rows, target_dim: n }
    }

    /// From a list of 1-forms (the images of `e^1, e^2, …`).
    pub fn from_forms(forms: &[KForm<F>]) -> Result<Self> {
        let n = forms.first().map(|f| f.dim()).unwrap_or(0);
        if forms.iter().any(|f| f.degree() != 1 || f.dim() != n) {
            return Err(Error::Dim("coframe entries must be 1-forms of equal dimension".into()));
        }
        Ok(LinearMap { rows: forms.iter().map(|f| f.to_vec()).collect(), target_dim: n })
    }

    pub fn source_dim(&self) -> usize {
        self.rows.len()
    }

    pub fn image(&self, i: usize) -> KForm<F> {
        KForm::from_coords(&self.rows[i])
    }

    /// `m1 ∘ m2`, so that `pullback(m1∘m2, a) = pullback(m2, pullback(m1, a))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.target_dim != other.source_dim() {
            return Err(Error::Dim("composition shape mismatch".into()));
        }
        Ok(LinearMap { rows: linalg::mat_mul(&self.rows, &other.rows), target_dim: other.target_dim })
    }

    pub fn det(&self) -> F {
        linalg::det(&self.rows)
    }

    pub fn inverse(&self) -> Option<Self> {
        let inv = linalg::inverse(&self.rows)?;
        Some(LinearMap { target_dim: inv.len(), rows: inv })
    }

    pub fn pullback(&self, a: &KForm<F>) -> Result<KForm<F>> {
        if a.dim() != self.source_dim() {
            return Err(Error::Dim(format!("pullback of dim {} form by map from dim {}", a.dim(), self.source_dim())));
        }
        let n = self.target_dim;
        if a.degree() > n {
            return Err(Error::Dim(format!("degree {} form pulled back to dimension {n}", a.degree())));
        }
        let images: Vec<KForm<F>> = (0..self.source_dim()).map(|i| self.image(i)).collect();
        let mut r = KForm::zero(n, a.degree());
        for (m, c) in a.terms() {
            let mut prod = KForm::scalar(n, c.clone());
            for i in indices_of(m) {
                prod = prod.wedge(&images[i - 1]);
                if prod.is_zero() {
                    break;
                }
            }
            if !prod.is_zero() {
                r = &r + &prod;
            }
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    type K = KForm<Q>;

    fn e(idx: &[usize]) -> K {
        K::e(7, idx)
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(K::e(4, &[1, 2]).wedge(&K::e(4, &[3, 4])), K::e(4, &[1, 2, 3, 4]));
        assert!(K::e(4, &[1, 2]).wedge(&K::e(4, &[2, 3])).is_zero());
        let w = &K::e(4, &[1, 2]) + &K::e(4, &[3, 4]);
        assert_eq!(w.wedge(&w), K::e(4, &[1, 2, 3, 4]).scale(&q(2)));
        assert_eq!(K::e(4, &[3]).wedge(&K::e(4, &[1])), -&K::e(4, &[1, 3]));
    }

    #[test]
    fn contraction_examples() {
        assert_eq!(e(&[1, 2, 7]).contract_basis(1), e(&[2, 7]));
        assert_eq!(e(&[1, 2, 7]).contract_basis(7), e(&[1, 2]));
        assert_eq!(e(&[1, 2, 7]).contract_basis(2), -&e(&[1, 7]));
        assert!(e(&[1, 2, 7]).contract_basis(3).is_zero());
    }

    #[test]
    fn monomial_sorting_sign() {
        assert_eq!(K::monomial(7, &[7, 1], q(1)).unwrap(), -&e(&[1, 7]));
        assert!(K::monomial(7, &[2, 2], q(1)).unwrap().is_zero());
        assert!(K::monomial(3, &[4], q(1)).is_err());
    }

    #[test]
    fn pullback_swap() {
        let mut rows = linalg::identity::<Q>(2);
        rows.swap(0, 1);
        let m = LinearMap::new(rows, 2).unwrap();
        assert_eq!(m.pullback(&K::e(2, &[1, 2])).unwrap(), -&K::e(2, &[1, 2]));
        let id = LinearMap::<Q>::identity(7);
        let a = &e(&[1, 2, 3]) + &e(&[4, 5, 6]);
        assert_eq!(id.pullback(&a).unwrap(), a);
    }

    #[test]
    fn ranks_and_lengths() {
        assert_eq!(e(&[1, 2, 3]).rank(), 3);
        let w = &K::e(4, &[1, 2]) + &K::e(4, &[3, 4]);
        assert_eq!(w.rank(), 4);
        assert!(!w.is_decomposable().unwrap());
        assert!((&K::e(4, &[1, 2]) + &K::e(4, &[1, 3])).is_decomposable().unwrap());
        assert_eq!(w.two_form_length(), 2);
        assert_eq!(K::e(4, &[1, 2]).two_form_length(), 1);
        let w3 = &(&e(&[1, 2]) + &e(&[3, 4])) + &e(&[5, 6]);
        assert_eq!(w3.two_form_length(), 3);
        assert_eq!(K::zero(4, 2).two_form_length(), 0);
    }

    #[test]
    fn projection() {
        let blocks = vec![vec![1, 2, 3, 4], vec![5, 6, 7]];
        assert_eq!(e(&[1, 2, 5, 6]).graded_project(&blocks, &[2, 2]).unwrap(), e(&[1, 2, 5, 6]));
        assert!(e(&[1, 2, 5, 6]).graded_project(&blocks, &[4, 0]).unwrap().is_zero());
        assert!(e(&[1, 2, 5, 6]).graded_project(&blocks, &[3, 0]).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let a = &e(&[1, 2, 7]).scale(&crate::scalar::qf(-3, 4)) + &e(&[3, 4, 5]);
        let s = serde_json::to_string(&a).unwrap();
        assert!(s.contains("\"coeff\":\"-3/4\""));
        let b: K = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
        assert!(serde_json::from_str::<K>(r#"{"dim":3,"degree":2,"terms":[{"indices":[2,1],"coeff":"1"}]}"#).is_err());
    }
}
