//! Closed G2 four-forms with certificates, one builder per construction route.
//!
//! Every route chooses a coframe `P` of the 7d algebra split as `V4 ⊕ V3`
//! (coordinates 1–4 and 5–7 after the change of coframe), two-forms on `V4` and a basis
//! of `Λ²V3*`. The assembled `Ψ = Ω1 + Ω2` is either closed already, or `Ω1` is closed and
//! `dΩ2 = dΦ` for some `Φ ∈ Λ³V4*∧V3*`; then `λ⁴Ω1 + λ²(Ω2 − Φ)` is closed for every `λ`
//! and lies in the G2 orbit once `λ` is large, which is found by doubling.

use num::{One, Signed, Zero};

use crate::catalog::{self, AlgebraId, Family};
use crate::classifier::{self, Route, Verdict};
use crate::error::{Error, Result};
use crate::g2::{self, Certificate, OrbitClass, MARGIN_BOUND};
use crate::lie::{self, LieAlgebra};
use crate::linalg::{self, Mat};
use crate::multivector::{masks, KForm, LinearMap};
use crate::scalar::{q, qf, Field, QuadQ, Q};
use crate::subspace::{self, Completion, TwoFormFamily};

/// Doubling steps allowed when rescaling.
pub const MAX_DOUBLINGS: usize = 60;

#[derive(Clone, Debug)]
pub struct Construction {
    pub route: Route,
    pub certificate: Certificate,
    /// Final scale `λ` (1 when no correction was needed).
    pub lambda: Q,
    pub doublings: usize,
    /// Whether a correction `Φ ≠ 0` was added.
    pub corrected: bool,
}

fn unit_rows(order: &[usize]) -> Mat<Q> {
    order.iter().map(|&i| lie::unit(7, i - 1)).collect()
}

fn e<F: Field>(n: usize, idx: &[usize]) -> KForm<F> {
    KForm::e(n, idx)
}

/// Closedness correction: `Φ ∈ Λ³V4*∧V3*` with `dΦ = target`, if any.
fn solve_phi(h: &LieAlgebra, target: &KForm) -> Option<KForm> {
    let mut basis = Vec::new();
    for m in masks(4, 3) {
        for x in 5..=7 {
            let idx: Vec<usize> = crate::multivector::indices_of(m).into_iter().chain([x]).collect();
            basis.push(KForm::<Q>::e(7, &idx));
        }
    }
    let cols: Vec<Vec<Q>> = basis.iter().map(|b| h.differential(b).to_vec()).collect();
    let m = linalg::transpose(&cols);
    let x = linalg::solve(&m, &target.to_vec(), basis.len())?;
    let mut phi = KForm::zero(7, 4);
    for (b, c) in basis.iter().zip(&x) {
        if !c.is_zero() {
            phi = &phi + &b.scale(c);
        }
    }
    Some(phi)
}

/// Assemble on the split coframe `p` and make closed; returns the certificate in the
/// original coframe of `g`.
fn finish(g: &LieAlgebra, p: &Mat<Q>, comp: &Completion, nu: &[KForm], route: Route) -> Result<Construction> {
    let h = g.in_coframe(p)?;
    let asm = subspace::assemble_hodge_dual(comp, nu)?;
    let back = LinearMap::new(p.clone(), 7)?;
    let to_original = |f: &KForm| back.pullback(f);
    if h.differential(&asm.psi).is_zero() {
        let psi = to_original(&asm.psi)?;
        let cert = match &asm.coframe {
            Some(fr) => {
                let fr: Vec<KForm<QuadQ>> = fr.iter().map(|f| to_original(f).map(|f| f.lift::<QuadQ>())).collect::<Result<_>>()?;
                Certificate::from_coframe(g, fr)?
            }
            None => Certificate::numeric(g, psi.lift::<QuadQ>())?,
        };
        return Ok(Construction { route, certificate: cert, lambda: Q::one(), doublings: 0, corrected: false });
    }
    let w1 = subspace::embed(&comp.forms[0], 0, 7);
    let omega1 = w1.wedge(&w1).scale(&qf(1, 2));
    if !h.differential(&omega1).is_zero() {
        return Err(Error::Construct(format!("{route}: Ω1 is not closed")));
    }
    let omega2 = &asm.psi - &omega1;
    let phi = solve_phi(&h, &h.differential(&omega2))
        .ok_or_else(|| Error::Construct(format!("{route}: dΩ2 is not in d(Λ³V4*∧V3*)")))?;
    let corr = &omega2 - &phi;
    let mut lambda = Q::one();
    for k in 0..=MAX_DOUBLINGS {
        let l2 = &lambda * &lambda;
        let psi = &omega1.scale(&(&l2 * &l2)) + &corr.scale(&l2);
        debug_assert!(h.differential(&psi).is_zero());
        if g2::classify_four_form(&psi)?.class == OrbitClass::G2 {
            let orig = to_original(&psi)?.lift::<QuadQ>();
            if g2::numeric_margin(&orig)? >= MARGIN_BOUND {
                let cert = Certificate::numeric(g, orig)?;
                return Ok(Construction { route, certificate: cert, lambda, doublings: k, corrected: true });
            }
        }
        lambda *= q(2);
    }
    Err(Error::Construct(format!("{route}: no scale up to 2^{MAX_DOUBLINGS} lands in the orbit")))
}

fn family_of(forms: Vec<KForm>) -> Result<TwoFormFamily> {
    TwoFormFamily::new(forms, e(4, &[1, 2, 3, 4]))
}

// ---------------------------------------------------------------- symplectic subspace

/// `g4' ⊕ g3'` laid out by `order` (original coordinates of the new coframe), with
/// `g3'` unimodular and `h²(g3')` closed symplectic forms on `g4'` in a definite span.
fn symplectic_in(g: &LieAlgebra, order: &[usize]) -> Result<Option<Construction>> {
    let p = unit_rows(order);
    let h = g.in_coframe(&p)?;
    let a4 = h.subalgebra(&(0..4).map(|i| lie::unit(7, i)).collect::<Vec<_>>())?;
    let a3 = h.subalgebra(&(4..7).map(|i| lie::unit(7, i)).collect::<Vec<_>>())?;
    if !a3.unimodular() || !h.is_ideal(&(4..7).map(|i| lie::unit(7, i)).collect::<Vec<_>>()) {
        return Ok(None);
    }
    let d = a3.betti(2);
    let w = subspace::symplectic_subspace(&a4)?;
    if w.len() < d {
        return Ok(None);
    }
    let comp = subspace::complete_to_selfdual_triple(&family_of(w[..d].to_vec())?)?;
    // exact 2-forms on g3' last, a complement first
    let exact = lie::row_basis(&(1..=3).map(|i| a3.differential(&e::<Q>(3, &[i])).to_vec()).collect::<Vec<_>>());
    let full = lie::complete_basis(&exact, 3)?;
    let mut nu: Vec<KForm> = full[exact.len()..].iter().map(|v| KForm::from_vec(3, 2, v)).collect();
    nu.extend(exact.iter().map(|v| KForm::from_vec(3, 2, v)));
    finish(g, &p, &comp, &nu, Route::SymplecticSubspace).map(Some)
}

/// Closed symplectic forms on `g4` against `Λ²g3*`; when `g4 = h⊕R` carries too few, the
/// roles are swapped to `(g3⊕R) ⊕ h`.
pub fn construct_symplectic(g4: &AlgebraId, g3: &AlgebraId) -> Result<Construction> {
    let g = catalog::instantiate_sum(&[g4.clone(), g3.clone()])?;
    if let Some(c) = symplectic_in(&g, &[1, 2, 3, 4, 5, 6, 7])? {
        return Ok(c);
    }
    if classifier::decomposable_factor(g4).is_some() {
        if let Some(c) = symplectic_in(&g, &[5, 6, 7, 4, 1, 2, 3])? {
            return Ok(c);
        }
    }
    Err(Error::Construct(format!("{g4}+{g3}: symplectic subspace too small in both splittings")))
}

// ---------------------------------------------------------------- contact

fn construct_contact(g4: &AlgebraId, g3: &AlgebraId) -> Result<Construction> {
    let g = catalog::instantiate_sum(&[g4.clone(), g3.clone()])?;
    let a3 = g3.instantiate()?;
    let alpha = lie::contact_form(&a3).ok_or_else(|| Error::Construct(format!("{g3} has no contact form")))?;
    let da = a3.differential(&alpha);
    // V4* = (e4, g3*), V3* = (e1, e2, e3)
    let p = unit_rows(&[4, 5, 6, 7, 1, 2, 3]);
    let a = subspace::embed(&alpha, 1, 4);
    let w1 = &e::<Q>(4, &[1]).wedge(&a).scale(&q(2)) - &subspace::embed(&da, 1, 4);
    let comp = subspace::complete_to_selfdual_triple(&family_of(vec![w1])?)?;
    let nu = vec![e(3, &[1, 2]), e(3, &[1, 3]), e(3, &[2, 3])];
    finish(&g, &p, &comp, &nu, Route::Contact)
}

// ---------------------------------------------------------------- h3 ideal

/// `d e^{a} = Σ_j m[i][j] e^{b_j} ∧ e^{x}` on a two-dimensional block.
fn block_matrix(g: &LieAlgebra, block: [usize; 2], x: usize) -> Mat<Q> {
    block
        .iter()
        .map(|&i| {
            let d = g.differential(&e::<Q>(g.dim, &[i]));
            block
                .iter()
                .map(|&j| if j < x { d.coeff(&[j, x]) } else { -d.coeff(&[x, j]) })
                .collect()
        })
        .collect()
}

fn trace(m: &Mat<Q>) -> Q {
    &m[0][0] + &m[1][1]
}

fn construct_h3_ideal(g4: &AlgebraId, g3: &AlgebraId) -> Result<Construction> {
    if !matches!(g4.family, Family::A48 | Family::A410) {
        return Err(Error::Construct(format!("{g4} has no h3 commutator ideal")));
    }
    let g = catalog::instantiate_sum(&[g4.clone(), g3.clone()])?;
    let tr_g = trace(&block_matrix(&g, [5, 6], 7));
    // V4* = (e1, α1, α2, tr(G)·e7), V3* = (β1, β2, e4); de1 = α1∧α2
    let mut p = unit_rows(&[1, 2, 3, 7, 5, 6, 4]);
    p[3] = p[3].iter().map(|x| x * &tr_g).collect();
    let w1 = &(-&e::<Q>(4, &[1, 4])) - &e(4, &[2, 3]);
    let w2 = &(-&e::<Q>(4, &[3, 4])) - &e(4, &[1, 2]);
    let w3 = &e::<Q>(4, &[1, 3]) - &e(4, &[2, 4]);
    let comp = Completion { forms: vec![w1, w2, w3], coframe: None };
    let nu = vec![e(3, &[1, 2]), e(3, &[1, 3]), -&e::<Q>(3, &[2, 3])];
    finish(&g, &p, &comp, &nu, Route::H3Ideal)
}

// ---------------------------------------------------------------- five-dimensional ⊕ r2

/// `g` contains a 5d almost abelian unimodular `h` on coordinates `emb5` and `r2` on
/// `(r_a, r_b)` with `de^{r_a} = e^{r_a r_b}`.
fn five_r2_core(g: &LieAlgebra, g5: &LieAlgebra, emb5: [usize; 5], r2: (usize, usize)) -> Result<Construction> {
    let (aa, w1, w2) = subspace::length_two_pair_5d(g5)?
        .ok_or_else(|| Error::Construct("no length-two pair on the five-dimensional summand".into()))?;
    let lift = |row: &[Q]| {
        let mut v = vec![Q::zero(); 7];
        for (k, c) in row.iter().enumerate() {
            v[emb5[k] - 1] = c.clone();
        }
        v
    };
    let mut p: Mat<Q> = aa.coframe.iter().map(|r| lift(r)).collect();
    p.push(lie::unit(7, r2.0 - 1));
    p.push(lie::unit(7, r2.1 - 1));
    // V3 = (θ5, e^{r_a}, e^{r_b}); ν1 = e^{ab}, ν2 = θ5∧e^a, ν3 = θ5∧e^b
    let nu = vec![e(3, &[2, 3]), e(3, &[1, 2]), e(3, &[1, 3])];
    let comp = subspace::complete_to_selfdual_triple(&family_of(vec![w1, w2])?)?;
    let c = finish(g, &p, &comp, &nu, Route::FiveR2)?;
    if c.corrected {
        return Err(Error::Construct("five-r2 assembly should be closed without correction".into()));
    }
    Ok(c)
}

/// `h ⊕ r2` for a five-dimensional almost abelian unimodular `h` (coordinates 1–5, `r2` on 6, 7).
pub fn construct_5d_r2(g5: &LieAlgebra) -> Result<Construction> {
    let v = classifier::decide_5d_r2(g5)?;
    if !v.exists {
        return Err(Error::Construct(format!("{}: {}", v.algebra, v.obstruction.map(|o| o.tag()).unwrap_or("?"))));
    }
    let r2 = catalog::AlgebraId::plain(Family::Rr2).instantiate()?;
    let g = g5.direct_sum(&r2);
    five_r2_core(&g, g5, [1, 2, 3, 4, 5], (6, 7))
}

fn construct_five_r2_pair(g4: &AlgebraId, g3: &AlgebraId) -> Result<Construction> {
    if g3.family != Family::R2R {
        return Err(Error::Construct("five-r2 needs g3 = r2+R".into()));
    }
    let g = catalog::instantiate_sum(&[g4.clone(), g3.clone()])?;
    // r2+R: de^5 = e^{57}; the R summand is coordinate 6
    let g5 = g4.instantiate()?.direct_sum(&LieAlgebra::abelian(1));
    five_r2_core(&g, &g5, [1, 2, 3, 4, 6], (5, 7))
}

// ---------------------------------------------------------------- h3 kernel, both non-unimodular

/// Coefficient of `e^{2356}` (the volume of `V2 ⊕ W2`).
fn vol(f: &KForm) -> Q {
    f.coeff(&[2, 3, 5, 6])
}

fn pair(a: &KForm, b: &KForm) -> Q {
    vol(&a.wedge(b))
}

/// Small integer combinations of `n` basis vectors, nonzero, by increasing size.
fn small_combinations(n: usize, r: i64) -> Vec<Vec<i64>> {
    let side = (2 * r + 1) as usize;
    let mut out = Vec::new();
    for idx in 1..side.pow(n as u32) {
        let mut x = idx;
        let v: Vec<i64> = (0..n)
            .map(|_| {
                let c = (x % side) as i64 - r;
                x /= side;
                c
            })
            .collect();
        if v.iter().any(|c| *c != 0) {
            out.push(v);
        }
    }
    out.sort_by_key(|v| (v.iter().filter(|c| **c != 0).count(), v.iter().map(|c| c.abs()).sum::<i64>()));
    out
}

/// Unimodular kernel `h3` in `g4` and `g3` not unimodular, both in catalog coframes
/// (`e1, V2 = ⟨e2,e3⟩, e4` and `W2 = ⟨e5,e6⟩, e7`). Finds `ω1, ω2 ∈ V2∧W2` with
/// `d(ω1∧e^{71} + ω2∧e^{41}) = 0`, `ν̂ = e^{56}` and `λ`, so that
/// `ω̃1 = ν̂ + ω1`, `ω̃2 = (tr F/tr G)ν̂ + λν + ω2` span a definite plane.
pub fn construct_h3_kernel(g4: &AlgebraId, g3: &AlgebraId, route: Route) -> Result<Construction> {
    let g = catalog::instantiate_sum(&[g4.clone(), g3.clone()])?;
    let f = block_matrix(&g, [2, 3], 4);
    let gm = block_matrix(&g, [5, 6], 7);
    let (tr_f, tr_g) = (trace(&f), trace(&gm));
    if tr_f.is_zero() || tr_g.is_zero() {
        return Err(Error::Construct("expected non-unimodular summands in adapted coframes".into()));
    }
    let de1 = g.differential(&e::<Q>(7, &[1]));
    let nu = &de1 - &e::<Q>(7, &[1, 4]).scale(&tr_f);
    if nu.is_zero() || nu != e::<Q>(7, &[2, 3]).scale(&nu.coeff(&[2, 3])) {
        return Err(Error::Construct(format!("{g4}: kernel is not h3 in the catalog coframe")));
    }
    let k = &tr_f / &tr_g;
    let vw: Vec<KForm> = [[2, 5], [2, 6], [3, 5], [3, 6]].iter().map(|i| e(7, i)).collect();
    // d(ω1∧e71 + ω2∧e41) = 0 on (ω1, ω2) ∈ (V2∧W2)²
    let e71 = e::<Q>(7, &[7, 1]);
    let e41 = e::<Q>(7, &[4, 1]);
    let mut cols = Vec::new();
    for b in &vw {
        cols.push(g.differential(&b.wedge(&e71)).to_vec());
    }
    for b in &vw {
        cols.push(g.differential(&b.wedge(&e41)).to_vec());
    }
    let sols = linalg::nullspace(&linalg::transpose(&cols), 8);
    let comb = |c: &[Q], off: usize| {
        let mut w = KForm::zero(7, 2);
        for (b, x) in vw.iter().zip(&c[off..off + 4]) {
            w = &w + &b.scale(x);
        }
        w
    };
    let nu_hat = e::<Q>(7, &[5, 6]);
    for r in [1i64, 2, 3] {
        for cs in small_combinations(sols.len(), r) {
            let mut x = vec![Q::zero(); 8];
            for (s, c) in sols.iter().zip(&cs) {
                for (xi, si) in x.iter_mut().zip(s) {
                    *xi += si * q(*c);
                }
            }
            let (w1, w2) = (comb(&x, 0), comb(&x, 4));
            let q1 = pair(&w1, &w1);
            if q1.is_zero() {
                continue;
            }
            let shifted = &w2 - &w1.scale(&k);
            if !(&q1 * &pair(&shifted, &shifted)).is_positive() {
                continue;
            }
            let t1 = &nu_hat + &w1;
            let a = &nu_hat.scale(&k) + &w2;
            let (b1a, b1n, ban) = (pair(&t1, &a), pair(&t1, &nu), pair(&a, &nu));
            // q1(qA + 2λ bAν) − (b1A + λ b1ν)² is maximal at the vertex
            let lam = (&q1 * &ban - &b1a * &b1n) / (&b1n * &b1n);
            let t2 = &a + &nu.scale(&lam);
            let (g11, g12, g22) = (pair(&t1, &t1), pair(&t1, &t2), pair(&t2, &t2));
            if !(&g11 * &g22 - &g12 * &g12).is_positive() {
                continue;
            }
            // ½λ̃ ω̃1² = −(1/tr G) ν∧ν̂
            let lt = -(pair(&nu, &nu_hat) * q(2)) / (&tr_g * &g11);
            let inv = Q::one() / &lt;
            // V4 = (e2, e3, e5, e6), V3 = (e1, e4, e7)
            let p = unit_rows(&[2, 3, 5, 6, 1, 4, 7]);
            let local = |w: &KForm| {
                let back = LinearMap::new(linalg::inverse(&p).expect("permutation"), 7).unwrap();
                let wl = back.pullback(w).unwrap();
                let mut r = KForm::zero(4, 2);
                for (m, c) in wl.terms() {
                    r.add_term(m, c.clone());
                }
                r
            };
            let fam = family_of(vec![local(&t1), local(&t2)])?;
            let comp = subspace::complete_to_selfdual_triple(&fam)?;
            // θ1 = e^{71}/λ̃, θ2 = e^{41}/λ̃, θ3 = e^{74} in V3 coordinates (e1, e4, e7)
            let thetas = vec![e::<Q>(3, &[1, 3]).scale(&-&inv), e::<Q>(3, &[1, 2]).scale(&-&inv), -&e::<Q>(3, &[2, 3])];
            let c = finish(&g, &p, &comp, &thetas, route)?;
            if c.corrected {
                return Err(Error::Construct("h3-kernel assembly should be closed without correction".into()));
            }
            return Ok(c);
        }
    }
    Err(Error::Construct(format!("{g4}+{g3}: no admissible pair found")))
}

// ---------------------------------------------------------------- exceptional bases, direct

fn construct_exceptional(g4: &AlgebraId, g3: &AlgebraId) -> Result<Construction> {
    let g = catalog::instantiate_sum(&[g4.clone(), g3.clone()])?;
    let b = catalog::exceptional_basis(g4, g3)?;
    let cert = Certificate::from_coframe(&g, b.coframe)?;
    Ok(Construction { route: Route::ExceptionalBasis, certificate: cert, lambda: Q::one(), doublings: 0, corrected: false })
}

fn construct_direct(g4: &AlgebraId, g3: &AlgebraId) -> Result<Construction> {
    let g = catalog::instantiate_sum(&[g4.clone(), g3.clone()])?;
    let fr: Vec<KForm<QuadQ>> = (1..=7).map(|i| e(7, &[i])).collect();
    let cert = Certificate::from_coframe(&g, fr)?;
    Ok(Construction { route: Route::StandardDirect, certificate: cert, lambda: Q::one(), doublings: 0, corrected: false })
}

/// Build a certificate along the route the classifier selected.
pub fn construct_for(v: &Verdict, g4: &AlgebraId, g3: &AlgebraId) -> Result<Construction> {
    let route = v
        .route
        .ok_or_else(|| Error::Construct(format!("{}: no structure ({})", v.algebra, v.obstruction.map(|o| o.tag()).unwrap_or("?"))))?;
    match route {
        Route::SymplecticSubspace => construct_symplectic(g4, g3),
        Route::Contact => construct_contact(g4, g3),
        Route::H3Ideal => construct_h3_ideal(g4, g3),
        Route::FiveR2 => construct_five_r2_pair(g4, g3),
        Route::H3KernelDet0 | Route::H3KernelGeneric | Route::H3KernelScalar => construct_h3_kernel(g4, g3, route),
        Route::ExceptionalBasis => construct_exceptional(g4, g3),
        Route::StandardDirect => construct_direct(g4, g3),
    }
}

pub fn construct(g4: &AlgebraId, g3: &AlgebraId) -> Result<Construction> {
    let v = classifier::decide(g4, g3)?;
    construct_for(&v, g4, g3)
}

/// One line of a sweep over catalogued pairs.
#[derive(Clone, Debug)]
pub struct SweepRow {
    pub g4: AlgebraId,
    pub g3: AlgebraId,
    pub verdict: Verdict,
    /// `Some(Ok(route))` when a certificate was built and re-verified.
    pub built: Option<std::result::Result<Route, String>>,
}

/// Decide every pair and, for positive verdicts, construct and verify a certificate.
pub fn sweep(pairs: &[(AlgebraId, AlgebraId)]) -> Result<Vec<SweepRow>> {
    use rayon::prelude::*;
    pairs
        .par_iter()
        .map(|(g4, g3)| {
            let verdict = classifier::decide(g4, g3)?;
            let built = verdict.exists.then(|| {
                let c = construct_for(&verdict, g4, g3).map_err(|e| e.to_string())?;
                let g = catalog::instantiate_sum(&[g4.clone(), g3.clone()]).map_err(|e| e.to_string())?;
                match g2::verify_certificate(&g, &c.certificate) {
                    Ok(true) => Ok(c.route),
                    Ok(false) => Err("certificate rejected".to_string()),
                    Err(e) => Err(e.to_string()),
                }
            });
            Ok(SweepRow { g4: g4.clone(), g3: g3.clone(), verdict, built })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse;

    fn run(a: &str, b: &str) -> Construction {
        let (x, y) = (parse(a).unwrap(), parse(b).unwrap());
        let c = construct(&x, &y).unwrap_or_else(|e| panic!("{a}+{b}: {e}"));
        let g = catalog::instantiate_sum(&[x, y]).unwrap();
        assert!(g2::verify_certificate(&g, &c.certificate).unwrap(), "{a}+{b}");
        c
    }

    #[test]
    fn routes_from_the_examples() {
        assert_eq!(run("A_{4,1}", "e(2)").route, Route::SymplecticSubspace);
        assert_eq!(run("A_{4,12}", "so(3)").route, Route::Contact);
        assert_eq!(run("A_{4,8}", "r2+R").route, Route::H3Ideal);
        assert_eq!(run("r2+r2", "r3mu^{1}").route, Route::ExceptionalBasis);
        assert_eq!(run("A_{4,9}^{-1/2}", "r2+R").route, Route::H3KernelDet0);
        assert_eq!(run("A_{4,7}", "r3").route, Route::H3KernelGeneric);
        assert_eq!(run("A_{4,9}^{1}", "r3mu^{1/2}").route, Route::H3KernelScalar);
        assert_eq!(run("A_{4,11}^{1}", "r3'mu^{1}").route, Route::H3KernelGeneric);
    }

    #[test]
    fn resplit_and_nonsolvable() {
        run("so(3)+R", "e(2)");
        run("h3+R", "h3");
        run("so(2,1)+R", "r3");
        run("A_{4,5}^{-1/2,-1/2}", "so(2,1)");
        run("R4", "R3");
        run("e(2)+R", "r2+R");
    }

    #[test]
    fn five_plus_two() {
        let g5 = parse("A_{4,5}^{-1/2,-1/2}").unwrap().instantiate().unwrap().direct_sum(&LieAlgebra::abelian(1));
        let c = construct_5d_r2(&g5).unwrap();
        let g = g5.direct_sum(&AlgebraId::plain(Family::Rr2).instantiate().unwrap());
        assert!(g2::verify_certificate(&g, &c.certificate).unwrap());
        assert!(construct_5d_r2(&parse("R5").unwrap().instantiate().unwrap()).is_err());
    }

    #[test]
    fn negative_pairs_are_refused() {
        assert!(construct(&parse("A_{4,9}^{1}").unwrap(), &parse("r3mu^{-1/4}").unwrap()).is_err());
    }
}
