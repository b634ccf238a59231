//! Two-forms on four-dimensional spaces: Gram matrices, completion to definite
//! triples, assembly of G2 four-forms from two-forms, symplectic subspaces, and
//! length-two pairs on five-dimensional almost abelian algebras.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::g2::{self, OrbitClass};
use crate::lie::{self, LieAlgebra};
use crate::linalg::{self, Mat};
use crate::multivector::{masks, KForm, Mask};
use crate::scalar::{q, Field, Q};

#[derive(Clone, Debug)]
pub struct TwoFormFamily<F: Field = Q> {
    pub forms: Vec<KForm<F>>,
    pub tau: KForm<F>,
}

impl<F: Field> TwoFormFamily<F> {
    pub fn new(forms: Vec<KForm<F>>, tau: KForm<F>) -> Result<Self> {
        if tau.degree() != 4 || tau.is_zero() {
            return Err(Error::Dim("τ must be a nonzero top form".into()));
        }
        if forms.iter().any(|f| f.degree() != 2 || f.dim() != tau.dim()) {
            return Err(Error::Dim("family members must be 2-forms on the same 4-space".into()));
        }
        Ok(TwoFormFamily { forms, tau })
    }

    pub fn standard(dim4_tau: KForm<F>) -> Self {
        TwoFormFamily { forms: vec![], tau: dim4_tau }
    }
}

fn top_coeff<F: Field>(f: &KForm<F>, tau: &KForm<F>) -> Result<F> {
    let (m, t) = tau.terms().next().ok_or_else(|| Error::Other("τ = 0".into()))?;
    let c = f.coeff_mask(m) / t.clone();
    if &tau.scale(&c) != f {
        return Err(Error::Other("4-form not proportional to τ".into()));
    }
    Ok(c)
}

/// `H[i][j]·τ = ω_i ∧ ω_j`.
pub fn gram<F: Field>(fam: &TwoFormFamily<F>) -> Result<Mat<F>> {
    let k = fam.forms.len();
    let mut h = linalg::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let c = top_coeff(&fam.forms[i].wedge(&fam.forms[j]), &fam.tau)?;
            h[i][j] = c.clone();
            h[j][i] = c;
        }
    }
    Ok(h)
}

pub fn is_definite<F: Field>(h: &Mat<F>) -> bool {
    linalg::definiteness(h).is_some()
}

/// `ω̃1 = e^{12}+e^{34}`, `ω̃2 = e^{13}−e^{24}`, `ω̃3 = e^{14}+e^{23}` on a 4-space.
pub fn standard_triple<F: Field>() -> [KForm<F>; 3] {
    let e = |i: &[usize]| KForm::<F>::e(4, i);
    [&e(&[1, 2]) + &e(&[3, 4]), &e(&[1, 3]) - &e(&[2, 4]), &e(&[1, 4]) + &e(&[2, 3])]
}

/// Antisymmetric matrix `Ω[i][j] = ω(e_i, e_j)`.
fn two_form_matrix(w: &KForm) -> Mat<Q> {
    let n = w.dim();
    let mut m = linalg::zeros(n, n);
    for i in 1..=n {
        for j in i + 1..=n {
            let c = w.coeff(&[i, j]);
            m[i - 1][j - 1] = c.clone();
            m[j - 1][i - 1] = -c;
        }
    }
    m
}

fn pair(om: &Mat<Q>, v: &[Q], w: &[Q]) -> Q {
    linalg::mat_vec(om, w).iter().zip(v).fold(Q::zero(), |s, (a, b)| s + a * b)
}

/// Coframe `(f^1..f^4)` (as rows) with `ω = f^{12} + f^{34}` for a nondegenerate 2-form on a 4-space.
pub fn darboux(w: &KForm) -> Result<Mat<Q>> {
    if w.dim() != 4 || w.degree() != 2 {
        return Err(Error::Dim("darboux needs a 2-form on a 4-space".into()));
    }
    let om = two_form_matrix(w);
    let mut basis: Vec<Vec<Q>> = Vec::new();
    let mut space: Vec<Vec<Q>> = (0..4).map(|i| lie::unit(4, i)).collect();
    while !space.is_empty() {
        let v = space[0].clone();
        let Some(w2) = space.iter().find(|x| !pair(&om, &v, x).is_zero()).cloned() else {
            return Err(Error::Singular("2-form is degenerate".into()));
        };
        let c = pair(&om, &v, &w2);
        let w2: Vec<Q> = w2.iter().map(|x| x / &c).collect();
        // ω-orthogonal complement of span(v, w2) inside `space`
        let next: Vec<Vec<Q>> = space
            .iter()
            .map(|x| {
                let a = pair(&om, x, &w2);
                let b = pair(&om, &v, x);
                // x − a v − b w2 is orthogonal to both (ω(v,w2)=1)
                x.iter().zip(&v).zip(&w2).map(|((xi, vi), wi)| xi - &a * vi - &b * wi).collect()
            })
            .collect();
        basis.push(v);
        basis.push(w2);
        space = lie::row_basis(&next);
    }
    // columns b_j; coframe = inverse
    linalg::inverse(&linalg::transpose(&basis)).ok_or_else(|| Error::Singular("Darboux basis".into()))
}

fn rows_to_forms(rows: &Mat<Q>) -> Vec<KForm> {
    rows.iter().map(|r| KForm::from_coords(r)).collect()
}

fn pull_triple(coframe: &Mat<Q>) -> Result<[KForm; 3]> {
    let m = crate::multivector::LinearMap::new(coframe.clone(), 4)?;
    let [a, b, c] = standard_triple::<Q>();
    Ok([m.pullback(&a)?, m.pullback(&b)?, m.pullback(&c)?])
}

#[derive(Clone, Debug)]
pub struct Completion {
    /// The input forms followed by the completion forms.
    pub forms: Vec<KForm>,
    /// `u` with `forms[i] = u*ω̃_{i+1}`, when such a rational coframe was found.
    pub coframe: Option<Mat<Q>>,
}

/// Extend a family with definite Gram matrix to three forms whose Gram matrix is
/// definite and block diagonal (`input ⊥ completion`).
pub fn complete_to_selfdual_triple(fam: &TwoFormFamily) -> Result<Completion> {
    let k = fam.forms.len();
    if k > 3 {
        return Err(Error::Dim("at most three forms".into()));
    }
    if fam.tau.dim() != 4 {
        return Err(Error::Dim("completion lives on a 4-space".into()));
    }
    let h = gram(fam)?;
    if !is_definite(&h) {
        return Err(Error::Other("Gram matrix is not definite".into()));
    }
    let tau_sign = fam.tau.coeff(&[1, 2, 3, 4]).signum_exact();
    if k == 0 {
        // orient so that ω̃1² is a positive multiple of τ
        let mut c = linalg::identity::<Q>(4);
        if tau_sign < 0 {
            c[3] = c[3].iter().map(|x| -x).collect();
        }
        let t = pull_triple(&c)?;
        return Ok(Completion { forms: t.to_vec(), coframe: Some(c) });
    }
    if k == 1 {
        let c = darboux(&fam.forms[0])?;
        let t = pull_triple(&c)?;
        debug_assert_eq!(t[0], fam.forms[0]);
        return Ok(Completion { forms: t.to_vec(), coframe: Some(c) });
    }
    let sign = h[0][0].signum_exact();
    let ms = masks(4, 2);
    let vecs: Vec<Vec<Q>> = fam.forms.iter().map(|f| f.to_vec()).collect();
    // wedge pairing on Λ² against τ
    let mut p = linalg::zeros(6, 6);
    for a in 0..6 {
        for b in 0..6 {
            let w = KForm::<Q>::from_vec(4, 2, &lie::unit(6, a)).wedge(&KForm::from_vec(4, 2, &lie::unit(6, b)));
            p[a][b] = top_coeff(&w, &fam.tau)?;
        }
    }
    let _ = ms;
    let rows: Mat<Q> = vecs.iter().map(|v| linalg::mat_vec(&p, v)).collect();
    let comp = linalg::nullspace(&rows, 6);
    let hc = linalg::mat_mul(&linalg::mat_mul(&comp, &p), &linalg::transpose(&comp));
    let (pc, d) = linalg::diagonalize_congruence(&hc);
    let new = linalg::mat_mul(&pc, &comp);
    let mut forms = fam.forms.clone();
    for (v, di) in new.iter().zip(&d) {
        if forms.len() == 3 {
            break;
        }
        if di.signum_exact() == sign {
            // equalize the square with ω1 when the ratio is a rational square
            let scale = lie::q_sqrt(&(&h[0][0] / di)).unwrap_or_else(Q::one);
            forms.push(KForm::from_vec(4, 2, v).scale(&scale));
        }
    }
    if forms.len() < 3 {
        return Err(Error::Construct("completion space has the wrong signature".into()));
    }
    Ok(Completion { forms, coframe: None })
}

/// Move a form on an `n`-space into coordinates `offset+1..offset+n` of a `dim`-space.
pub fn embed<F: Field>(f: &KForm<F>, offset: usize, dim: usize) -> KForm<F> {
    let mut r = KForm::zero(dim, f.degree());
    for (m, c) in f.terms() {
        r.add_term((m as Mask) << offset, c.clone());
    }
    r
}

/// Vector of a 2-form on a 3-space under `e^{23}, e^{31}, e^{12} ↦ e_1, e_2, e_3`.
fn cross_vector(nu: &KForm) -> Vec<Q> {
    vec![nu.coeff(&[2, 3]), -nu.coeff(&[1, 3]), nu.coeff(&[1, 2])]
}

/// Coframe `(f^5,f^6,f^7)` on a 3-space with `f^{56}, f^{67}, f^{57} = ν1, ν2, ν3`, if rational.
pub fn nu_coframe(nu: &[KForm]) -> Option<Mat<Q>> {
    // cofactor rows: f6×f7 = ν2, f7×f5 = −ν3, f5×f6 = ν1
    let k: Mat<Q> = vec![cross_vector(&nu[1]), cross_vector(&-&nu[2]), cross_vector(&nu[0])];
    let dk = linalg::det(&k);
    if !dk.is_positive() {
        return None;
    }
    let s = lie::q_sqrt(&dk)?;
    let kit = linalg::transpose(&linalg::inverse(&k)?);
    Some(kit.iter().map(|r| r.iter().map(|x| x * &s).collect()).collect())
}

#[derive(Clone, Debug)]
pub struct Assembled {
    /// `½ω1² + Σ ω_i∧ν_i` on the 7-space (V4 = coordinates 1–4, V3 = 5–7).
    pub psi: KForm,
    pub nu: Vec<KForm>,
    /// `ν3` had to change sign to land in the G2 orbit.
    pub flipped: bool,
    /// An exact adapted coframe on the 7-space, when available.
    pub coframe: Option<Vec<KForm>>,
}

pub fn hodge_dual_form(omegas: &[KForm], nu: &[KForm]) -> KForm {
    let w: Vec<KForm> = omegas.iter().map(|o| embed(o, 0, 7)).collect();
    let n: Vec<KForm> = nu.iter().map(|v| embed(v, 4, 7)).collect();
    let mut psi = w[0].wedge(&w[0]).scale(&Q::new(1.into(), 2.into()));
    for i in 0..3 {
        psi = &psi + &w[i].wedge(&n[i]);
    }
    psi
}

/// Assemble the Hodge dual from a completed triple on V4 and a basis of `Λ²V3*`.
pub fn assemble_hodge_dual(comp: &Completion, nu: &[KForm]) -> Result<Assembled> {
    if comp.forms.len() != 3 || nu.len() != 3 {
        return Err(Error::Dim("need three ω's and three ν's".into()));
    }
    if nu.iter().any(|v| v.dim() != 3 || v.degree() != 2) {
        return Err(Error::Dim("ν's must be 2-forms on a 3-space".into()));
    }
    let nm: Mat<Q> = nu.iter().map(|v| v.to_vec()).collect();
    if linalg::rank(&nm) != 3 {
        return Err(Error::Singular("ν's are dependent".into()));
    }
    let tau = KForm::e(4, &[1, 2, 3, 4]);
    let h = gram(&TwoFormFamily::new(comp.forms.clone(), tau)?)?;
    if !is_definite(&h) {
        return Err(Error::Other("ω-triple Gram matrix is not definite".into()));
    }
    for flipped in [false, true] {
        let mut nu = nu.to_vec();
        if flipped {
            nu[2] = -&nu[2];
        }
        let psi = hodge_dual_form(&comp.forms, &nu);
        if g2::classify_four_form(&psi)?.class == OrbitClass::G2 {
            let coframe = comp.coframe.as_ref().and_then(|u| {
                let f3 = nu_coframe(&nu)?;
                let mut fr: Vec<KForm> = rows_to_forms(u).iter().map(|f| embed(f, 0, 7)).collect();
                fr.extend(rows_to_forms(&f3).iter().map(|f| embed(f, 4, 7)));
                (g2::standard_four_form(&fr).ok()? == psi).then_some(fr)
            });
            return Ok(Assembled { psi, nu, flipped, coframe });
        }
    }
    Err(Error::Construct("no orientation of ν gives a G2 four-form".into()))
}

// ---------------------------------------------------------------- symplectic subspaces

/// `h²(g) − h¹(g) − h¹(u) + 4` for a 4d algebra and a codimension-one ideal `u`.
pub fn symplectic_dimension(g4: &LieAlgebra, u: &LieAlgebra) -> i64 {
    g4.betti(2) as i64 - g4.betti(1) as i64 - u.betti(1) as i64 + 4
}

/// A maximal subspace of closed 2-forms on which the wedge pairing is definite; every
/// nonzero element is symplectic. Obtained by congruence-diagonalizing the pairing
/// restricted to the closed 2-forms and keeping the majority sign.
pub fn symplectic_subspace(g4: &LieAlgebra) -> Result<Vec<KForm>> {
    if g4.dim != 4 {
        return Err(Error::Dim("symplectic_subspace needs a 4d algebra".into()));
    }
    let z = g4.closed_forms(2);
    if z.is_empty() {
        return Ok(vec![]);
    }
    let tau = KForm::e(4, &[1, 2, 3, 4]);
    let h = gram(&TwoFormFamily::new(z.clone(), tau)?)?;
    let (p, d) = linalg::diagonalize_congruence(&h);
    let pos = d.iter().filter(|x| x.is_positive()).count();
    let neg = d.iter().filter(|x| x.is_negative()).count();
    let want = if pos >= neg { 1 } else { -1 };
    let zm: Mat<Q> = z.iter().map(|f| f.to_vec()).collect();
    let vs = linalg::mat_mul(&p, &zm);
    Ok(vs.iter().zip(&d).filter(|(_, di)| di.signum_exact() == want).map(|(v, _)| KForm::from_vec(4, 2, v)).collect())
}

// ---------------------------------------------------------------- 5d almost abelian

/// Data of a 5d almost abelian algebra in an adapted coframe `(θ^1..θ^4, θ^5)`:
/// `dθ^i = H(θ^i)∧θ^5`, `θ^5` closed.
#[derive(Clone, Debug)]
pub struct AlmostAbelian5 {
    /// Rows: `θ^a` in the original coframe.
    pub coframe: Mat<Q>,
    /// `dθ^i = Σ_j h[i][j] θ^j ∧ θ^5`.
    pub h: Mat<Q>,
}

pub fn almost_abelian_5d(g5: &LieAlgebra) -> Result<AlmostAbelian5> {
    if g5.dim != 5 {
        return Err(Error::Dim("expected a 5d algebra".into()));
    }
    let xi = g5.abelian_hyperplane().ok_or_else(|| Error::Other("not almost abelian".into()))?;
    let xv = xi.to_vec();
    let ideal = linalg::nullspace(&vec![xv.clone()], 5);
    let p = xv.iter().position(|x| !x.is_zero()).unwrap();
    let transversal = lie::unit(5, p);
    let (c, f) = lie::abelian_split(g5, &ideal, &transversal)?;
    Ok(AlmostAbelian5 { coframe: c, h: f })
}

/// Derivation action of `H` on `Λ²` of the 4d ideal: `dω = D(ω)∧θ^5`.
fn derivation_on_two_forms(h: &Mat<Q>, w: &KForm) -> KForm {
    let mut r = KForm::zero(4, 2);
    for (m, c) in w.terms() {
        let idx = crate::multivector::indices_of(m);
        let (a, b) = (idx[0], idx[1]);
        // d(θ^a∧θ^b) = −(Hθ^a∧θ^b + θ^a∧Hθ^b)∧θ5
        let ha = KForm::from_coords(&h[a - 1]);
        let hb = KForm::from_coords(&h[b - 1]);
        let ea = KForm::e(4, &[a]);
        let eb = KForm::e(4, &[b]);
        let t = &ha.wedge(&eb) + &ea.wedge(&hb);
        r = &r - &t.scale(c);
    }
    r
}

/// `(ω1, ω2)` on the abelian ideal with `dω1 = ω2∧θ^5` spanning a definite plane.
/// Candidates are small integer combinations, tried in order of size.
pub fn length_two_pair_5d(g5: &LieAlgebra) -> Result<Option<(AlmostAbelian5, KForm, KForm)>> {
    let aa = almost_abelian_5d(g5)?;
    if !g5.unimodular() {
        return Err(Error::Other("length_two_pair_5d needs a unimodular algebra".into()));
    }
    let sq = |w: &KForm| w.wedge(w).coeff(&[1, 2, 3, 4]);
    let mut cands: Vec<Vec<i64>> = Vec::new();
    let r = 2i64;
    let side = (2 * r + 1) as usize;
    for n in 0..side.pow(6) {
        let mut x = n;
        let mut v = vec![0i64; 6];
        for c in v.iter_mut() {
            *c = (x % side) as i64 - r;
            x /= side;
        }
        if v.iter().any(|c| *c != 0) {
            cands.push(v);
        }
    }
    cands.sort_by_key(|v| (v.iter().filter(|c| **c != 0).count(), v.iter().map(|c| c.abs()).sum::<i64>()));
    for v in cands {
        let coords: Vec<Q> = v.iter().map(|c| q(*c)).collect();
        let w1 = KForm::from_vec(4, 2, &coords);
        let a = sq(&w1);
        if a.is_zero() {
            continue;
        }
        let w2 = derivation_on_two_forms(&aa.h, &w1);
        let b = sq(&w2);
        let c = w1.wedge(&w2).coeff(&[1, 2, 3, 4]);
        if (&a * &b - &c * &c).is_positive() {
            return Ok(Some((aa, w1, w2)));
        }
    }
    Ok(None)
}
