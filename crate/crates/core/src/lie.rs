//! Lie algebras in the dual encoding `(de^1, …, de^n)` and their Chevalley–Eilenberg calculus.

use std::fmt;

use num::{BigInt, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::multivector::{indices_of, masks, wedge_sign, KForm, LinearMap, Mask};
use crate::scalar::{fmt_q, Field, Q};

#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct LieAlgebra {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub d: Vec<KForm>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.d.iter().map(|x| x.to_string()).collect();
        write!(f, "{}({})", self.name.as_deref().unwrap_or("g"), parts.join(", "))
    }
}

pub type CohomologyVector = Vec<usize>;

impl LieAlgebra {
    /// Builds and validates shape and Jacobi.
    pub fn new(d: Vec<KForm>, name: Option<String>) -> Result<Self> {
        let g = Self::new_unchecked(d, name)?;
        if !g.jacobi_check() {
            return Err(Error::NotLie(format!("d² ≠ 0 for {g:?}")));
        }
        Ok(g)
    }

    /// Shape checks only; callers wanting Jacobi use [`LieAlgebra::jacobi_check`].
    pub fn new_unchecked(d: Vec<KForm>, name: Option<String>) -> Result<Self> {
        let n = d.len();
        if d.iter().any(|x| x.dim() != n || x.degree() != 2) {
            return Err(Error::Dim("each de^i must be a 2-form on the algebra".into()));
        }
        Ok(LieAlgebra { dim: n, name, d })
    }

    pub fn abelian(n: usize) -> Self {
        LieAlgebra { dim: n, name: Some(format!("R{n}")), d: vec![KForm::zero(n, 2); n] }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Chevalley–Eilenberg differential, extended as an antiderivation.
    pub fn differential<F: Field>(&self, a: &KForm<F>) -> KForm<F> {
        let n = self.dim;
        assert_eq!(a.dim(), n, "form/algebra dimension mismatch");
        assert!(a.degree() < n, "d of a top form");
        let mut r = KForm::zero(n, a.degree() + 1);
        for (m, c) in a.terms() {
            for (p, i) in indices_of(m).into_iter().enumerate() {
                let bit: Mask = 1 << (i - 1);
                let before = m & (bit - 1);
                let after = m & !(bit | (bit - 1));
                let sgn_p = if p % 2 == 0 { 1 } else { -1 };
                for (pm, pc) in self.d[i - 1].terms() {
                    if pm & (before | after) != 0 {
                        continue;
                    }
                    let s = sgn_p * wedge_sign(before, pm) * wedge_sign(before | pm, after);
                    let v = c.clone() * F::from_q(pc);
                    r.add_term(before | pm | after, if s < 0 { -v } else { v });
                }
            }
        }
        r
    }

    pub fn d1(&self, i: usize) -> &KForm {
        &self.d[i - 1]
    }

    pub fn jacobi_check(&self) -> bool {
        self.d.iter().all(|x| self.dim < 3 || self.differential(x).is_zero())
    }

    /// Structure constant `c^k_{ij}` with `[e_i, e_j] = Σ_k c^k_{ij} e_k` (1-based).
    pub fn structure_constant(&self, k: usize, i: usize, j: usize) -> Q {
        if i == j {
            return Q::zero();
        }
        let (a, b, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
        let c = -self.d[k - 1].coeff(&[a, b]);
        if s < 0 {
            -c
        } else {
            c
        }
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim];
        for (k, dk) in self.d.iter().enumerate() {
            // [x,y]^k = −de^k(x, y)
            let mut s = Q::zero();
            for (m, c) in dk.terms() {
                let idx = indices_of(m);
                let (a, b) = (idx[0] - 1, idx[1] - 1);
                s += c * (&x[a] * &y[b] - &x[b] * &y[a]);
            }
            out[k] = -s;
        }
        out
    }

    pub fn ad_trace(&self, i: usize) -> Q {
        (1..=self.dim).map(|j| self.structure_constant(j, i, j)).fold(Q::zero(), |a, b| a + b)
    }

    /// Unimodularity, computed both as tr ad = 0 and as closedness of all (n−1)-forms.
    pub fn is_unimodular(&self) -> Result<bool> {
        let by_trace = (1..=self.dim).all(|i| self.ad_trace(i).is_zero());
        let n = self.dim;
        let by_forms = n == 0
            || masks(n, n - 1).into_iter().all(|m| {
                let mut f = KForm::<Q>::zero(n, n - 1);
                f.add_term(m, Q::one());
                self.differential(&f).is_zero()
            });
        if by_trace != by_forms {
            return Err(Error::Other("unimodularity characterisations disagree".into()));
        }
        Ok(by_trace)
    }

    pub fn unimodular(&self) -> bool {
        self.is_unimodular().expect("unimodularity")
    }

    /// Matrix of `d: Λ^k → Λ^{k+1}` in the `masks` bases.
    pub fn d_matrix(&self, k: usize) -> Mat<Q> {
        let n = self.dim;
        let src = masks(n, k);
        let cols: Vec<Vec<Q>> = src
            .iter()
            .map(|&m| {
                let mut f = KForm::<Q>::zero(n, k);
                f.add_term(m, Q::one());
                self.differential(&f).to_vec()
            })
            .collect();
        linalg::transpose(&cols)
    }

    pub fn d_rank(&self, k: usize) -> usize {
        if k >= self.dim {
            return 0;
        }
        let m = self.d_matrix(k);
        if m.is_empty() {
            0
        } else {
            linalg::rank(&m)
        }
    }

    /// `(h^1, …, h^n)`.
    pub fn cohomology(&self) -> CohomologyVector {
        let n = self.dim;
        let ranks: Vec<usize> = (0..=n).map(|k| self.d_rank(k)).collect();
        (1..=n).map(|k| binom(n, k) - ranks[k] - ranks[k - 1]).collect()
    }

    pub fn betti(&self, k: usize) -> usize {
        if k == 0 {
            return 1;
        }
        self.cohomology()[k - 1]
    }

    /// Closed k-forms (a basis).
    pub fn closed_forms(&self, k: usize) -> Vec<KForm> {
        let n = self.dim;
        if k == n {
            return vec![KForm::from_vec(n, n, &[Q::one()])];
        }
        let m = self.d_matrix(k);
        linalg::nullspace(&m, binom(n, k)).into_iter().map(|v| KForm::from_vec(n, k, &v)).collect()
    }

    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim + other.dim;
        let shift = |f: &KForm, off: usize| {
            let mut r = KForm::zero(n, f.degree());
            for (m, c) in f.terms() {
                r.add_term(m << off, c.clone());
            }
            r
        };
        let mut d: Vec<KForm> = self.d.iter().map(|f| shift(f, 0)).collect();
        d.extend(other.d.iter().map(|f| shift(f, self.dim)));
        let name = match (&self.name, &other.name) {
            (Some(a), Some(b)) => Some(format!("{a}+{b}")),
            _ => None,
        };
        LieAlgebra { dim: n, name, d }
    }

    /// The same algebra written in the coframe `θ^a = Σ_i c[a][i] e^i`.
    pub fn in_coframe(&self, c: &Mat<Q>) -> Result<LieAlgebra> {
        let n = self.dim;
        let inv = linalg::inverse(c).ok_or_else(|| Error::Singular("coframe".into()))?;
        // e^i = Σ_a inv[i][a] θ^a
        let back = LinearMap::new(inv, n)?;
        let d = c
            .iter()
            .map(|row| {
                let mut f = KForm::zero(n, 2);
                for (i, ci) in row.iter().enumerate() {
                    if !ci.is_zero() {
                        f = &f + &self.d[i].scale(ci);
                    }
                }
                back.pullback(&f)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LieAlgebra { dim: n, name: self.name.clone(), d })
    }

    /// The same algebra in the basis `f_b = Σ_i p[b][i] e_i`.
    pub fn in_basis(&self, p: &Mat<Q>) -> Result<LieAlgebra> {
        let c = linalg::inverse(&linalg::transpose(p)).ok_or_else(|| Error::Singular("basis".into()))?;
        self.in_coframe(&c)
    }

    /// Subalgebra spanned by the given vectors, in that basis.
    pub fn subalgebra(&self, basis: &[Vec<Q>]) -> Result<LieAlgebra> {
        let k = basis.len();
        let full = complete_basis(basis, self.dim)?;
        let h = self.in_basis(&full)?;
        for a in 0..k {
            for b in a + 1..k {
                let br = h.bracket(&unit(self.dim, a), &unit(self.dim, b));
                if br[k..].iter().any(|x| !x.is_zero()) {
                    return Err(Error::Other("span is not a subalgebra".into()));
                }
            }
        }
        let d = h.d[..k]
            .iter()
            .map(|f| {
                let mut r = KForm::zero(k, 2);
                for (m, c) in f.terms() {
                    if m >> k == 0 {
                        r.add_term(m, c.clone());
                    }
                }
                r
            })
            .collect();
        Ok(LieAlgebra { dim: k, name: None, d })
    }

    pub fn is_ideal(&self, basis: &[Vec<Q>]) -> bool {
        let target = linalg::rank(&basis.to_vec());
        (0..self.dim).all(|i| {
            basis.iter().all(|v| {
                let mut m = basis.to_vec();
                m.push(self.bracket(&unit(self.dim, i), v));
                linalg::rank(&m) == target
            })
        })
    }

    /// Basis of `[g,g]`.
    pub fn derived_algebra(&self) -> Vec<Vec<Q>> {
        let n = self.dim;
        let mut vs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                vs.push(self.bracket(&unit(n, i), &unit(n, j)));
            }
        }
        row_basis(&vs)
    }

    pub fn commutator_dim(&self) -> usize {
        let rows: Vec<Vec<Q>> = self.d.iter().map(|f| f.to_vec()).collect();
        if rows.is_empty() {
            0
        } else {
            linalg::rank(&rows)
        }
    }

    /// Kernel of `X ↦ tr ad_X` (for non-unimodular algebras).
    pub fn unimodular_kernel(&self) -> Result<UnimodularKernel> {
        let n = self.dim;
        let tr: Vec<Q> = (1..=n).map(|i| self.ad_trace(i)).collect();
        if tr.iter().all(|x| x.is_zero()) {
            return Err(Error::Other("algebra is unimodular; its kernel is everything".into()));
        }
        let basis = linalg::nullspace(&vec![tr.clone()], n);
        let p = tr.iter().position(|x| !x.is_zero()).unwrap();
        let transversal = unit(n, p);
        let algebra = self.subalgebra(&basis)?;
        Ok(UnimodularKernel { basis, transversal, trace: tr, algebra })
    }

    /// A nonzero closed 1-form `ξ` whose kernel is an abelian ideal, if one exists.
    ///
    /// Hyperplanes `ker ξ` containing `[g,g]` are exactly the closed `ξ`, and such a
    /// hyperplane is abelian iff `ξ ∧ de^k = 0` for all `k`; both conditions are linear.
    pub fn abelian_hyperplane(&self) -> Option<KForm> {
        let n = self.dim;
        let mut rows: Vec<Vec<Q>> = Vec::new();
        // dξ = 0
        let d1 = self.d_matrix(1);
        rows.extend(d1);
        // ξ ∧ de^k = 0
        for dk in &self.d {
            let cols: Vec<Vec<Q>> = (1..=n).map(|i| KForm::<Q>::e(n, &[i]).wedge(dk).to_vec()).collect();
            rows.extend(linalg::transpose(&cols));
        }
        let ns = linalg::nullspace(&rows, n);
        ns.first().map(|v| KForm::from_coords(v))
    }

    pub fn is_almost_abelian(&self) -> bool {
        self.abelian_hyperplane().is_some()
    }

    pub fn is_abelian(&self) -> bool {
        self.d.iter().all(|f| f.is_zero())
    }

    pub fn is_solvable(&self) -> bool {
        let mut cur: Vec<Vec<Q>> = (0..self.dim).map(|i| unit(self.dim, i)).collect();
        loop {
            if cur.is_empty() {
                return true;
            }
            let mut vs = Vec::new();
            for i in 0..cur.len() {
                for j in i + 1..cur.len() {
                    vs.push(self.bracket(&cur[i], &cur[j]));
                }
            }
            let next = row_basis(&vs);
            if next.len() == cur.len() {
                return false;
            }
            cur = next;
        }
    }
}

#[derive(Clone, Debug)]
pub struct UnimodularKernel {
    /// Vectors spanning the kernel.
    pub basis: Vec<Vec<Q>>,
    /// A vector outside the kernel.
    pub transversal: Vec<Q>,
    /// The functional `X ↦ tr ad_X`.
    pub trace: Vec<Q>,
    /// The kernel as a Lie algebra in the basis `basis`.
    pub algebra: LieAlgebra,
}

pub fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

/// Independent rows spanning the same space.
pub fn row_basis(vs: &[Vec<Q>]) -> Vec<Vec<Q>> {
    if vs.is_empty() {
        return vec![];
    }
    let mut m = vs.to_vec();
    let piv = linalg::rref(&mut m);
    m.truncate(piv.len());
    m
}

/// Extend independent vectors by standard unit vectors to a basis.
pub fn complete_basis(vs: &[Vec<Q>], n: usize) -> Result<Mat<Q>> {
    let mut out = vs.to_vec();
    if !out.is_empty() && linalg::rank(&out) < out.len() {
        return Err(Error::Singular("dependent vectors".into()));
    }
    for i in 0..n {
        if out.len() == n {
            break;
        }
        let mut t = out.clone();
        t.push(unit(n, i));
        if linalg::rank(&t) == t.len() {
            out = t;
        }
    }
    Ok(out)
}

/// Rational square root, if it exists.
pub fn q_sqrt(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Q::new(n, d))
}

#[derive(Clone, Debug, PartialEq)]
pub enum Bianchi3Class {
    So3,
    So21,
    E2,
    E11,
    H3,
    R3,
    R2R,
    R3Jordan,
    R3Mu(Q),
    R3PrimeMu(Q),
}

impl Bianchi3Class {
    pub fn name(&self) -> String {
        match self {
            Bianchi3Class::So3 => "so(3)".into(),
            Bianchi3Class::So21 => "so(2,1)".into(),
            Bianchi3Class::E2 => "e(2)".into(),
            Bianchi3Class::E11 => "e(1,1)".into(),
            Bianchi3Class::H3 => "h3".into(),
            Bianchi3Class::R3 => "R3".into(),
            Bianchi3Class::R2R => "r2+R".into(),
            Bianchi3Class::R3Jordan => "r3".into(),
            Bianchi3Class::R3Mu(m) => format!("r3mu^{}", fmt_q(m)),
            Bianchi3Class::R3PrimeMu(m) => format!("r3'mu^{}", fmt_q(m)),
        }
    }

    pub fn is_unimodular(&self) -> bool {
        matches!(
            self,
            Bianchi3Class::So3 | Bianchi3Class::So21 | Bianchi3Class::E2 | Bianchi3Class::E11 | Bianchi3Class::H3 | Bianchi3Class::R3
        )
    }
}

impl fmt::Display for Bianchi3Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Normal form of a non-unimodular 3-dimensional algebra: coframe `(α1, α2, ξ)` with
/// `dα_i = Σ_j f[i][j] α_j ∧ ξ`, the `α`'s annihilating the transversal and `ξ` the kernel.
#[derive(Clone, Debug)]
pub struct Split3 {
    pub coframe: Mat<Q>,
    pub f: Mat<Q>,
}

/// For a codimension-one abelian ideal with a chosen transversal, the coframe
/// `(α_1..α_{n−1}, ξ)` and the matrix of `dα = f(α) ∧ ξ` on the ideal's dual.
pub fn abelian_split(g: &LieAlgebra, ideal: &[Vec<Q>], transversal: &[Q]) -> Result<(Mat<Q>, Mat<Q>)> {
    let n = g.dim;
    let mut basis = ideal.to_vec();
    basis.push(transversal.to_vec());
    let c = linalg::inverse(&linalg::transpose(&basis)).ok_or_else(|| Error::Singular("split basis".into()))?;
    let h = g.in_coframe(&c)?;
    let mut f = linalg::zeros(n - 1, n - 1);
    for i in 0..n - 1 {
        for (m, coef) in h.d[i].terms() {
            let idx = indices_of(m);
            if idx[1] != n {
                return Err(Error::Other("ideal is not abelian".into()));
            }
            f[i][idx[0] - 1] = coef.clone();
        }
    }
    Ok((c, f))
}

pub fn classify_3d(g: &LieAlgebra) -> Result<Bianchi3Class> {
    if g.dim != 3 {
        return Err(Error::Dim(format!("classify_3d on dimension {}", g.dim)));
    }
    if !g.jacobi_check() {
        return Err(Error::NotLie("Jacobi fails".into()));
    }
    if g.unimodular() {
        // de^i = Σ_j N_ij ⋆e^j with ⋆e^1 = e^23, ⋆e^2 = −e^13, ⋆e^3 = e^12
        let n: Mat<Q> = g.d.iter().map(|f| vec![f.coeff(&[2, 3]), -f.coeff(&[1, 3]), f.coeff(&[1, 2])]).collect();
        if n != linalg::transpose(&n) {
            return Err(Error::Other("bracket tensor not symmetric for a unimodular algebra".into()));
        }
        let (_, diag) = linalg::diagonalize_congruence(&n);
        let pos = diag.iter().filter(|x| x.is_positive()).count();
        let neg = diag.iter().filter(|x| x.is_negative()).count();
        return Ok(match (pos + neg, pos.min(neg)) {
            (3, 0) => Bianchi3Class::So3,
            (3, _) => Bianchi3Class::So21,
            (2, 0) => Bianchi3Class::E2,
            (2, _) => Bianchi3Class::E11,
            (1, _) => Bianchi3Class::H3,
            _ => Bianchi3Class::R3,
        });
    }
    let split = split_3d(g)?;
    let f = &split.f;
    let tr = &f[0][0] + &f[1][1];
    let det = &f[0][0] * &f[1][1] - &f[0][1] * &f[1][0];
    if det.is_zero() {
        return Ok(Bianchi3Class::R2R);
    }
    let four = Q::from_integer(BigInt::from(4));
    let disc = &tr * &tr - &four * &det;
    if disc.is_zero() {
        return Ok(if f[0][1].is_zero() && f[1][0].is_zero() { Bianchi3Class::R3Mu(Q::one()) } else { Bianchi3Class::R3Jordan });
    }
    if disc.is_positive() {
        let s = q_sqrt(&disc).ok_or_else(|| Error::Irrational("r3,μ with irrational μ".into()))?;
        let two = Q::from_integer(BigInt::from(2));
        let l1 = (&tr + &s) / &two;
        let l2 = (&tr - &s) / &two;
        let (big, small) = if l1.abs() >= l2.abs() { (l1, l2) } else { (l2, l1) };
        return Ok(Bianchi3Class::R3Mu(small / big));
    }
    // complex eigenvalues: det/tr² = (μ²+1)/(4μ²)
    let k = &det / (&tr * &tr);
    let mu2 = Q::one() / (&four * &k - Q::one());
    let mu = q_sqrt(&mu2).ok_or_else(|| Error::Irrational("r3',μ with irrational μ".into()))?;
    Ok(Bianchi3Class::R3PrimeMu(mu))
}

/// Non-unimodular 3d normal form.
pub fn split_3d(g: &LieAlgebra) -> Result<Split3> {
    let k = g.unimodular_kernel()?;
    let (coframe, f) = abelian_split(g, &k.basis, &k.transversal)?;
    Ok(Split3 { coframe, f })
}

/// Some `α` with `α ∧ dα ≠ 0` (3d), searched over small integer combinations.
pub fn contact_form(g: &LieAlgebra) -> Option<KForm> {
    assert_eq!(g.dim, 3);
    let cands = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1], [0, 1, 1], [1, 1, 1], [1, -1, 0], [1, 0, -1], [0, 1, -1], [1, 2, 3]];
    for c in cands {
        let a = KForm::from_coords(&c.map(|x| Q::from_integer(BigInt::from(x))));
        if !a.wedge(&g.differential(&a)).is_zero() {
            return Some(a);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn alg(d: &[&[(i64, usize, usize)]]) -> LieAlgebra {
        let n = d.len();
        LieAlgebra::new(
            d.iter()
                .map(|terms| {
                    let mut f = KForm::zero(n, 2);
                    for &(c, i, j) in terms.iter() {
                        f = &f + &KForm::monomial(n, &[i, j], q(c)).unwrap();
                    }
                    f
                })
                .collect(),
            None,
        )
        .unwrap()
    }

    #[test]
    fn differential_rules() {
        let h3 = alg(&[&[(1, 2, 3)], &[], &[]]);
        assert_eq!(h3.differential(&KForm::<Q>::e(3, &[1])), KForm::e(3, &[2, 3]));
        let e11 = alg(&[&[(1, 2, 3)], &[(1, 1, 3)], &[]]);
        let a = KForm::<Q>::e(3, &[1, 2]);
        let expect = &e11.d[0].wedge(&KForm::e(3, &[2])) - &KForm::<Q>::e(3, &[1]).wedge(&e11.d[1]);
        assert_eq!(e11.differential(&a), expect);
    }

    #[test]
    fn jacobi_detects_failure() {
        let bad2 = LieAlgebra::new_unchecked(vec![KForm::e(4, &[2, 3]), KForm::zero(4, 2), KForm::e(4, &[1, 4]), KForm::zero(4, 2)], None).unwrap();
        assert!(!bad2.jacobi_check());
        assert!(LieAlgebra::abelian(4).jacobi_check());
    }

    #[test]
    fn cohomology_small() {
        let e2 = alg(&[&[(1, 2, 3)], &[(-1, 1, 3)], &[]]);
        assert_eq!(e2.cohomology(), vec![1, 1, 1]);
        let h3r = alg(&[&[(1, 2, 3)], &[], &[], &[]]);
        assert_eq!(h3r.cohomology(), vec![3, 4, 3, 1]);
    }

    #[test]
    fn classify_examples() {
        let e11 = alg(&[&[(1, 2, 3)], &[(1, 1, 3)], &[]]);
        assert_eq!(classify_3d(&e11).unwrap(), Bianchi3Class::E11);
        let r3mu = alg(&[&[(1, 1, 3)], &[(-1, 2, 3)], &[]]);
        // μ = −1 is unimodular (e(1,1)); μ = 1/2 below
        assert_eq!(classify_3d(&r3mu).unwrap(), Bianchi3Class::E11);
        let mut d = r3mu.d.clone();
        d[1] = KForm::monomial(3, &[2, 3], crate::scalar::qf(1, 2)).unwrap();
        let r = LieAlgebra::new(d, None).unwrap();
        assert_eq!(classify_3d(&r).unwrap(), Bianchi3Class::R3Mu(crate::scalar::qf(1, 2)));
    }

    #[test]
    fn almost_abelian_detection() {
        assert!(LieAlgebra::abelian(4).is_almost_abelian());
        let h3r = alg(&[&[(1, 2, 3)], &[], &[], &[]]);
        assert!(h3r.is_almost_abelian());
        let so3 = alg(&[&[(1, 2, 3)], &[(-1, 1, 3)], &[(1, 1, 2)]]);
        assert!(!so3.is_almost_abelian());
        assert!(!so3.is_solvable());
        assert!(h3r.is_solvable());
    }
}
