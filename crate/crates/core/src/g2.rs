//! G2 orbits of 3- and 4-forms on a 7-dimensional space, induced metrics, and
//! certificates for closed G2 four-forms.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{self, Mat};
use crate::multivector::{KForm, LinearMap};
use crate::scalar::{Field, QuadQ};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrbitClass {
    G2,
    G2star,
    Degenerate,
}

/// Orbit plus the sign of the bilinear form (`+1` positive, `−1` negative definite;
/// 0 when not definite).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub class: OrbitClass,
    pub orientation: i32,
}

const PHI: [([usize; 3], i64); 7] =
    [([1, 2, 7], 1), ([3, 4, 7], 1), ([5, 6, 7], 1), ([1, 3, 5], 1), ([1, 4, 6], -1), ([2, 3, 6], -1), ([2, 4, 5], -1)];

const PSI: [([usize; 4], i64); 7] = [
    ([1, 2, 3, 4], 1),
    ([1, 2, 5, 6], 1),
    ([3, 4, 5, 6], 1),
    ([2, 4, 6, 7], -1),
    ([2, 3, 5, 7], 1),
    ([1, 4, 5, 7], 1),
    ([1, 3, 6, 7], 1),
];

fn sgn<F: Field>(s: i64) -> F {
    if s > 0 {
        F::one()
    } else {
        -F::one()
    }
}

pub fn phi0<F: Field>() -> KForm<F> {
    let mut f = KForm::zero(7, 3);
    for (idx, s) in PHI {
        f = &f + &KForm::monomial(7, &idx, sgn(s)).unwrap();
    }
    f
}

pub fn psi0<F: Field>() -> KForm<F> {
    let mut f = KForm::zero(7, 4);
    for (idx, s) in PSI {
        f = &f + &KForm::monomial(7, &idx, sgn(s)).unwrap();
    }
    f
}

fn coframe_map<F: Field>(coframe: &[KForm<F>]) -> Result<LinearMap<F>> {
    if coframe.len() != 7 {
        return Err(Error::Dim(format!("coframe has {} entries, need 7", coframe.len())));
    }
    let m = LinearMap::from_forms(coframe)?;
    if m.target_dim != 7 {
        return Err(Error::Dim("coframe entries must live on a 7-dimensional space".into()));
    }
    if m.det().is_zero() {
        return Err(Error::Singular("coframe is linearly dependent".into()));
    }
    Ok(m)
}

/// The standard 3-form with `e^i` replaced by `coframe[i−1]`.
pub fn standard_three_form<F: Field>(coframe: &[KForm<F>]) -> Result<KForm<F>> {
    coframe_map(coframe)?.pullback(&phi0())
}

/// The standard 4-form (Hodge dual of the standard 3-form) in the given coframe.
pub fn standard_four_form<F: Field>(coframe: &[KForm<F>]) -> Result<KForm<F>> {
    coframe_map(coframe)?.pullback(&psi0())
}

/// `B[i][j]·vol = (e_i⌟φ)∧(e_j⌟φ)∧φ`.
pub fn hitchin_bilinear<F: Field>(phi: &KForm<F>, ref_vol: &KForm<F>) -> Result<Mat<F>> {
    if phi.dim() != 7 || phi.degree() != 3 {
        return Err(Error::Dim("hitchin_bilinear needs a 3-form in dimension 7".into()));
    }
    if ref_vol.dim() != 7 || ref_vol.degree() != 7 || ref_vol.is_zero() {
        return Err(Error::Dim("reference volume must be a nonzero 7-form".into()));
    }
    let v = ref_vol.coeff(&[1, 2, 3, 4, 5, 6, 7]);
    let c: Vec<KForm<F>> = (1..=7).map(|i| phi.contract_basis(i)).collect();
    let cp: Vec<KForm<F>> = c.iter().map(|x| x.wedge(phi)).collect();
    let mut b = linalg::zeros(7, 7);
    for i in 0..7 {
        for j in i..7 {
            let x = c[j].wedge(&cp[i]).coeff(&[1, 2, 3, 4, 5, 6, 7]) / v.clone();
            b[i][j] = x.clone();
            b[j][i] = x;
        }
    }
    Ok(b)
}

fn vol<F: Field>() -> KForm<F> {
    KForm::e(7, &[1, 2, 3, 4, 5, 6, 7])
}

fn orbit_of_bilinear<F: Field>(b: &Mat<F>) -> Orbit {
    if linalg::det(b).is_zero() {
        return Orbit { class: OrbitClass::Degenerate, orientation: 0 };
    }
    match linalg::definiteness(b) {
        Some(s) => Orbit { class: OrbitClass::G2, orientation: s },
        None => Orbit { class: OrbitClass::G2star, orientation: 0 },
    }
}

pub fn classify_three_form<F: Field>(phi: &KForm<F>) -> Result<Orbit> {
    Ok(orbit_of_bilinear(&hitchin_bilinear(phi, &vol())?))
}

/// The 3-vector dual to a 4-form, read as a 3-form on the dual space.
pub fn dual_three_vector<F: Field>(psi: &KForm<F>) -> Result<KForm<F>> {
    if psi.dim() != 7 || psi.degree() != 4 {
        return Err(Error::Dim("expected a 4-form in dimension 7".into()));
    }
    Ok(psi.dual_vector())
}

/// Bilinear form of the dual 3-vector; definite iff `Ψ` is a G2 four-form.
pub fn four_form_bilinear<F: Field>(psi: &KForm<F>) -> Result<Mat<F>> {
    hitchin_bilinear(&dual_three_vector(psi)?, &vol())
}

/// Orbit of a 4-form. `−Ψ` flips the sign of the dual bilinear form, so the verdict
/// covers both signs; `orientation` records which one is positive definite.
pub fn classify_four_form<F: Field>(psi: &KForm<F>) -> Result<Orbit> {
    Ok(orbit_of_bilinear(&four_form_bilinear(psi)?))
}

/// Ratio `min|λ| / max|λ|` of the eigenvalues of a symmetric matrix, signed by
/// definiteness: positive iff all eigenvalues share a sign.
pub fn definiteness_margin(b: &[Vec<f64>]) -> f64 {
    let n = b.len();
    let m = nalgebra::DMatrix::from_fn(n, n, |i, j| b[i][j]);
    let eig = m.symmetric_eigenvalues();
    let max = eig.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    if max == 0.0 {
        return 0.0;
    }
    let min = eig.iter().fold(f64::INFINITY, |a, x| a.min(x.abs()));
    let same = eig.iter().all(|x| *x > 0.0) || eig.iter().all(|x| *x < 0.0);
    if same {
        min / max
    } else {
        -min / max
    }
}

pub fn numeric_margin<F: Field>(psi: &KForm<F>) -> Result<f64> {
    let b = four_form_bilinear(psi)?;
    Ok(definiteness_margin(&linalg::map_mat(&b, |x| x.to_f64())))
}

/// Induced metric and volume coefficient of a G2 three-form, in floating point.
///
/// The standard form has `B = 6·I`, so `g = ±B / (6·(|det B|/6⁷)^{1/9})`.
pub fn metric_numeric<F: Field>(phi: &KForm<F>) -> Result<(Vec<Vec<f64>>, f64)> {
    let b = hitchin_bilinear(phi, &vol())?;
    let o = orbit_of_bilinear(&b);
    if o.class != OrbitClass::G2 {
        return Err(Error::Other(format!("not a G2 three-form ({:?})", o.class)));
    }
    let bf = linalg::map_mat(&b, |x| x.to_f64());
    let m = nalgebra::DMatrix::from_fn(7, 7, |i, j| bf[i][j]);
    let det = m.determinant().abs();
    let scale = o.orientation as f64 / (6.0 * (det / 6f64.powi(7)).powf(1.0 / 9.0));
    let g: Vec<Vec<f64>> = bf.iter().map(|r| r.iter().map(|x| x * scale).collect()).collect();
    let gm = nalgebra::DMatrix::from_fn(7, 7, |i, j| g[i][j]);
    Ok((g, gm.determinant().sqrt()))
}

/// `dΨ = 0` for a G2 four-form `Ψ` on the 7-dimensional algebra `g`.
pub fn is_cocalibrated<F: Field>(g: &LieAlgebra, psi: &KForm<F>) -> Result<bool> {
    if g.dim != 7 || psi.dim() != 7 {
        return Err(Error::Dim("cocalibration needs dimension 7".into()));
    }
    if classify_four_form(psi)?.class != OrbitClass::G2 {
        return Err(Error::Other("4-form is not in the G2 orbit".into()));
    }
    Ok(g.differential(psi).is_zero())
}

// ---------------------------------------------------------------- certificates

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Evidence {
    /// `Ψ` is the standard 4-form in this coframe.
    Coframe { coframe: Vec<KForm<QuadQ>> },
    /// The dual bilinear form is exactly definite; `margin` is the relative eigenvalue gap
    /// observed in floating point with relative precision `precision`.
    Numeric { margin: f64, precision: f64, bound: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub psi: KForm<QuadQ>,
    pub evidence: Evidence,
    pub closed: bool,
    pub algebra: LieAlgebra,
}

pub const MARGIN_BOUND: f64 = 1e-6;
pub const PRECISION: f64 = 1e-12;

impl Certificate {
    pub fn numeric(g: &LieAlgebra, psi: KForm<QuadQ>) -> Result<Self> {
        let margin = numeric_margin(&psi)?;
        let closed = g.differential(&psi).is_zero();
        Ok(Certificate {
            psi,
            evidence: Evidence::Numeric { margin, precision: PRECISION, bound: MARGIN_BOUND },
            closed,
            algebra: g.clone(),
        })
    }

    pub fn from_coframe(g: &LieAlgebra, coframe: Vec<KForm<QuadQ>>) -> Result<Self> {
        let psi = standard_four_form(&coframe)?;
        let closed = g.differential(&psi).is_zero();
        Ok(Certificate { psi, evidence: Evidence::Coframe { coframe }, closed, algebra: g.clone() })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Exact verification: `dΨ = 0`, and either the coframe reproduces `Ψ` or the
/// dual bilinear form is definite with a sufficient floating-point margin.
pub fn verify_certificate(g: &LieAlgebra, cert: &Certificate) -> Result<bool> {
    if g.dim != 7 || cert.psi.dim() != 7 || cert.psi.degree() != 4 {
        return Err(Error::Dim("certificate must carry a 4-form on a 7-dimensional algebra".into()));
    }
    if !g.differential(&cert.psi).is_zero() {
        return Ok(false);
    }
    match &cert.evidence {
        Evidence::Coframe { coframe } => {
            if coframe.len() != 7 || coframe.iter().any(|c| c.dim() != 7 || c.degree() != 1) {
                return Err(Error::Parse("malformed coframe evidence".into()));
            }
            match standard_four_form(coframe) {
                Ok(p) => Ok(p == cert.psi),
                Err(Error::Singular(_)) => Ok(false),
                Err(e) => Err(e),
            }
        }
        Evidence::Numeric { bound, precision, .. } => {
            if !(bound.is_finite() && *bound > *precision) {
                return Err(Error::Parse("numeric evidence needs a bound above its precision".into()));
            }
            if classify_four_form(&cert.psi)?.class != OrbitClass::G2 {
                return Ok(false);
            }
            Ok(numeric_margin(&cert.psi)? >= *bound)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Q};

    fn basis() -> Vec<KForm<Q>> {
        (1..=7).map(|i| KForm::e(7, &[i])).collect()
    }

    #[test]
    fn standard_forms() {
        assert_eq!(standard_three_form(&basis()).unwrap(), phi0());
        assert_eq!(standard_four_form(&basis()).unwrap(), psi0());
        let mut dep = basis();
        dep[6] = dep[0].clone();
        assert!(matches!(standard_three_form(&dep), Err(Error::Singular(_))));
        let two: Vec<KForm<Q>> = basis().iter().map(|e| e.scale(&q(2))).collect();
        assert_eq!(standard_three_form(&two).unwrap(), phi0::<Q>().scale(&q(8)));
    }

    #[test]
    fn orbits() {
        let b = hitchin_bilinear(&phi0::<Q>(), &vol()).unwrap();
        assert_eq!(b, linalg::map_mat(&linalg::identity::<Q>(7), |x| x * q(6)));
        assert_eq!(classify_three_form(&phi0::<Q>()).unwrap().class, OrbitClass::G2);
        assert_eq!(classify_three_form(&KForm::<Q>::e(7, &[1, 2, 3])).unwrap().class, OrbitClass::Degenerate);
        assert_eq!(classify_four_form(&psi0::<Q>()).unwrap().class, OrbitClass::G2);
        assert_eq!(classify_four_form(&psi0::<Q>().scale(&q(-1))).unwrap().class, OrbitClass::G2);
        assert_eq!(classify_four_form(&KForm::<Q>::e(7, &[1, 2, 3, 4])).unwrap().class, OrbitClass::Degenerate);
    }

    #[test]
    fn metric_of_standard_form() {
        let (g, v) = metric_numeric(&phi0::<Q>()).unwrap();
        for i in 0..7 {
            for j in 0..7 {
                assert!((g[i][j] - if i == j { 1.0 } else { 0.0 }).abs() < 1e-12);
            }
        }
        assert!((v - 1.0).abs() < 1e-12);
        let (g2, _) = metric_numeric(&phi0::<Q>().scale(&q(8))).unwrap();
        assert!((g2[0][0] - 4.0).abs() < 1e-9);
    }

    #[test]
    fn exceptional_bases_are_certificates() {
        for b in crate::catalog::exceptional_bases() {
            let g = b.g4.instantiate().unwrap().direct_sum(&b.g3.instantiate().unwrap());
            let cert = Certificate::from_coframe(&g, b.coframe.clone()).unwrap();
            assert!(cert.closed, "{}+{}", b.g4, b.g3);
            assert!(verify_certificate(&g, &cert).unwrap());
            let mut bad = b.coframe.clone();
            bad[0] = -&bad[0];
            let forged = Certificate { evidence: Evidence::Coframe { coframe: bad }, ..cert.clone() };
            assert!(!verify_certificate(&g, &forged).unwrap());
            let back = Certificate::from_json(&cert.to_json()).unwrap();
            assert_eq!(back, cert);
        }
    }
}
