//! Existence decision for closed G2 four-forms on `g4 ⊕ g3`, and on `h ⊕ r2` with `h`
//! five-dimensional almost abelian. Every negative verdict names its obstruction, every
//! positive one the construction that realizes it.

use std::fmt;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::catalog::{in_half_open, AlgebraId, Family};
use crate::error::{Error, Result};
use crate::lie::{self, classify_3d, LieAlgebra};
use crate::linalg;
use crate::scalar::{fmt_q, q, qf, Q};
use crate::subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Obstruction {
    /// `h¹(g4)+h¹(u)−h²(g4)+h²(g3) > 4` for the unique unimodular codimension-one ideal `u`.
    CohomologyBound,
    /// `g4` almost abelian, `g3` not unimodular and not `r2⊕R` (or both non-unimodular).
    AlmostAbelianNonunimodular,
    /// `h ⊕ r2` with `h` five-dimensional and not unimodular.
    FiveDimNonunimodular,
    /// The orbit-sign argument for `A_{4,8}⊕e(2)`, `A_{4,10}⊕e(2)`, `A_{4,10}⊕e(1,1)`.
    OrbitSign,
    /// The length argument for `A_{4,1}⊕h3`.
    A41H3,
    /// `u ≅ h3`, `g3 = r2⊕R`, `det(F + tr F) ≠ 0`.
    DetZero,
    /// `u ≅ h3` with `F` or `G` scalar and non-positive discriminant.
    Discriminant,
    /// `h ⊕ r2` with `h ∈ {R⁵, h3⊕R², A_{5,7}^{−1/3,−1/3,−1/3}}`: no length-two pair.
    LengthOne,
}

impl Obstruction {
    pub fn tag(self) -> &'static str {
        match self {
            Obstruction::CohomologyBound => "cohomology-bound",
            Obstruction::AlmostAbelianNonunimodular => "almost-abelian-nonunimodular",
            Obstruction::FiveDimNonunimodular => "five-dim-nonunimodular",
            Obstruction::OrbitSign => "orbit-sign",
            Obstruction::A41H3 => "a41-h3",
            Obstruction::DetZero => "det-zero",
            Obstruction::Discriminant => "discriminant",
            Obstruction::LengthOne => "length-one",
        }
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Closed symplectic forms on `g4` paired with `Λ²g3*`, corrected by `Φ` and rescaled.
    SymplecticSubspace,
    /// `g4 ∈ {A_{4,12}, r2⊕r2}` and a contact form on `g3`.
    Contact,
    /// `[g4,g4] ≅ h3` with `g4` unimodular, `g3` not.
    H3Ideal,
    /// `g4 ⊕ R` almost abelian and unimodular, paired with `r2`.
    FiveR2,
    /// Unimodular kernel `h3`, `g3 = r2⊕R`.
    H3KernelDet0,
    /// Unimodular kernel `h3`, neither `F` nor `G` scalar.
    H3KernelGeneric,
    /// Unimodular kernel `h3`, `F` or `G` scalar.
    H3KernelScalar,
    /// One of the three tabulated adapted bases.
    ExceptionalBasis,
    /// The standard form in the catalog coframe is already closed.
    StandardDirect,
}

impl Route {
    pub fn tag(self) -> &'static str {
        match self {
            Route::SymplecticSubspace => "symplectic-subspace",
            Route::Contact => "contact",
            Route::H3Ideal => "h3-ideal",
            Route::FiveR2 => "five-r2",
            Route::H3KernelDet0 => "h3-kernel-det0",
            Route::H3KernelGeneric => "h3-kernel-generic",
            Route::H3KernelScalar => "h3-kernel-scalar",
            Route::ExceptionalBasis => "exceptional-basis",
            Route::StandardDirect => "standard-direct",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// The quantities the decision looked at.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct BranchData {
    pub g4_unimodular: bool,
    pub g3_unimodular: bool,
    /// Class of the unique unimodular codimension-one ideal of `g4`, when unique.
    pub kernel: Option<String>,
    pub cohomology_g4: Vec<usize>,
    pub cohomology_g3: Vec<usize>,
    pub commutator_dim: usize,
    /// `h¹(g4)+h¹(u)−h²(g4)+h²(g3)`, when `u` is unique.
    pub q: Option<i64>,
    /// Parameter comparisons and structural facts, in evaluation order.
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub algebra: String,
    pub exists: bool,
    pub obstruction: Option<Obstruction>,
    pub route: Option<Route>,
    /// Which clause fired, e.g. `"b/decomposable"`.
    pub branch: String,
    pub data: BranchData,
}

impl Verdict {
    fn yes(algebra: String, branch: &str, route: Route, data: BranchData) -> Self {
        Verdict { algebra, exists: true, obstruction: None, route: Some(route), branch: branch.into(), data }
    }

    fn no(algebra: String, branch: &str, obstruction: Obstruction, data: BranchData) -> Self {
        Verdict { algebra, exists: false, obstruction: Some(obstruction), route: None, branch: branch.into(), data }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("verdict serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Unique unimodular codimension-one ideal of a 4d algebra, as a subalgebra.
pub fn unique_kernel(g4: &LieAlgebra) -> Result<Option<LieAlgebra>> {
    if !g4.unimodular() {
        return Ok(Some(g4.unimodular_kernel()?.algebra));
    }
    if g4.commutator_dim() == 3 {
        return Ok(Some(g4.subalgebra(&g4.derived_algebra())?));
    }
    Ok(None)
}

fn is(id: &AlgebraId, f: Family) -> bool {
    id.family == f
}

fn r3mu_is(id: &AlgebraId, mu: &Q) -> bool {
    is(id, Family::R3Mu) && id.param(0) == mu
}

fn a49_is(id: &AlgebraId, a: &Q) -> bool {
    is(id, Family::A49) && id.param(0) == a
}

/// `h` with `g4 = h ⊕ R` in the catalog, for the decomposable unimodular rows.
pub fn decomposable_factor(g4: &AlgebraId) -> Option<Family> {
    Some(match g4.family {
        Family::So3R => Family::So3,
        Family::So21R => Family::So21,
        Family::E2R => Family::E2,
        Family::E11R => Family::E11,
        Family::H3R => Family::H3,
        Family::R4 => Family::R3,
        _ => return None,
    })
}

pub fn decide(g4: &AlgebraId, g3: &AlgebraId) -> Result<Verdict> {
    g4.validate()?;
    g3.validate()?;
    if g4.dim() != 4 || g3.dim() != 3 {
        return Err(Error::Dim(format!("expected a 4d and a 3d algebra, got {g4} and {g3}")));
    }
    let name = format!("{g4}+{g3}");
    let a4 = g4.instantiate()?;
    let a3 = g3.instantiate()?;
    let u = unique_kernel(&a4)?;
    let mut data = BranchData {
        g4_unimodular: a4.unimodular(),
        g3_unimodular: a3.unimodular(),
        kernel: None,
        cohomology_g4: a4.cohomology(),
        cohomology_g3: a3.cohomology(),
        commutator_dim: a4.commutator_dim(),
        q: None,
        notes: vec![],
    };
    let mut u_class = None;
    if let Some(u) = &u {
        let c = classify_3d(u)?;
        data.kernel = Some(c.name());
        data.q = Some(a4.betti(1) as i64 + u.betti(1) as i64 - a4.betti(2) as i64 + a3.betti(2) as i64);
        u_class = Some(c);
    }
    use lie::Bianchi3Class as B;
    match (data.g4_unimodular, data.g3_unimodular) {
        // (a)
        (false, true) => {
            let qv = data.q.expect("kernel of a non-unimodular algebra is unique");
            data.notes.push(format!("Q = {qv} {} 4", if qv <= 4 { "≤" } else { ">" }));
            if qv > 4 {
                return Ok(Verdict::no(name, "a", Obstruction::CohomologyBound, data));
            }
            let contact = lie::contact_form(&a3).is_some();
            if (is(g4, Family::A412) || is(g4, Family::R2xR2)) && contact {
                data.notes.push("g4 has kernel e(2)/e(1,1) and g3 has a contact form".into());
                return Ok(Verdict::yes(name, "a", Route::Contact, data));
            }
            Ok(Verdict::yes(name, "a", Route::SymplecticSubspace, data))
        }
        // (b)
        (true, true) => {
            if a4.is_abelian() && a3.is_abelian() {
                data.notes.push("both summands abelian".into());
                return Ok(Verdict::yes(name, "b/abelian", Route::StandardDirect, data));
            }
            if is(g3, Family::So3) || is(g3, Family::So21) {
                data.notes.push("g3 is not solvable, h²(g3) = 0".into());
                return Ok(Verdict::yes(name, "b/nonsolvable-g3", Route::SymplecticSubspace, data));
            }
            if let Some(h) = decomposable_factor(g4) {
                data.notes.push(format!("g4 = {} ⊕ R", h.name()));
                return Ok(Verdict::yes(name, "b/decomposable", Route::SymplecticSubspace, data));
            }
            if is(g4, Family::A41) && (is(g3, Family::E2) || is(g3, Family::E11)) {
                data.notes.push("A_{4,1} carries a closed symplectic form and h²(g3) = 1".into());
                return Ok(Verdict::yes(name, "b/listed", Route::SymplecticSubspace, data));
            }
            if is(g4, Family::A48) && is(g3, Family::E11) {
                return Ok(Verdict::yes(name, "b/listed", Route::ExceptionalBasis, data));
            }
            if (is(g4, Family::A48) && is(g3, Family::E2)) || (is(g4, Family::A410) && (is(g3, Family::E2) || is(g3, Family::E11))) {
                data.notes.push("det G / det F would have to be positive".into());
                return Ok(Verdict::no(name, "b", Obstruction::OrbitSign, data));
            }
            if is(g4, Family::A41) && is(g3, Family::H3) {
                return Ok(Verdict::no(name, "b", Obstruction::A41H3, data));
            }
            if let Some(qv) = data.q {
                data.notes.push(format!("Q = {qv} {} 4", if qv <= 4 { "≤" } else { ">" }));
            } else {
                data.notes.push("g = A_{4,1} ⊕ R³ is almost abelian; no length-two pair".into());
            }
            Ok(Verdict::no(name, "b", Obstruction::CohomologyBound, data))
        }
        // (c)
        (true, false) => {
            if a4.is_almost_abelian() {
                data.notes.push("g4 is almost abelian".into());
                if !is(g3, Family::R2R) {
                    data.notes.push("g3 ≠ r2⊕R".into());
                    return Ok(Verdict::no(name, "c", Obstruction::AlmostAbelianNonunimodular, data));
                }
                if is(g4, Family::R4) || is(g4, Family::H3R) {
                    data.notes.push("g4 ⊕ R ∈ {R⁵, h3⊕R²}".into());
                    return Ok(Verdict::no(name, "c", Obstruction::LengthOne, data));
                }
                return Ok(Verdict::yes(name, "c/almost-abelian", Route::FiveR2, data));
            }
            data.notes.push(format!("dim [g4,g4] = {}", data.commutator_dim));
            if is(g4, Family::A48) || is(g4, Family::A410) {
                data.notes.push("[g4,g4] ≅ h3".into());
                return Ok(Verdict::yes(name, "c/commutator", Route::H3Ideal, data));
            }
            data.notes.push("g4 is not solvable".into());
            Ok(Verdict::yes(name, "c/commutator", Route::SymplecticSubspace, data))
        }
        // (d)
        (false, false) => {
            let uc = u_class.expect("non-unimodular kernel");
            match uc {
                B::E2 | B::E11 => {
                    if r3mu_is(g3, &q(1)) {
                        return Ok(Verdict::yes(name, "d/euclidean-kernel", Route::ExceptionalBasis, data));
                    }
                    Ok(Verdict::yes(name, "d/euclidean-kernel", Route::Contact, data))
                }
                B::H3 => {
                    if is(g3, Family::R2R) {
                        if a49_is(g4, &qf(-1, 2)) {
                            data.notes.push("det(F + tr F) = 0 = det G".into());
                            return Ok(Verdict::yes(name, "d/det-zero", Route::H3KernelDet0, data));
                        }
                        data.notes.push("det G = 0 but det(F + tr F) ≠ 0".into());
                        return Ok(Verdict::no(name, "d", Obstruction::DetZero, data));
                    }
                    let f_scalar = a49_is(g4, &q(1));
                    let g_scalar = r3mu_is(g3, &q(1));
                    if f_scalar && is(g3, Family::R3Mu) {
                        let mu = g3.param(0);
                        let bad = in_half_open(mu, &qf(-1, 3), &q(0), true, false);
                        data.notes.push(format!("μ = {} {} [−1/3, 0)", fmt_q(mu), if bad { "∈" } else { "∉" }));
                        if bad {
                            return Ok(Verdict::no(name, "d", Obstruction::Discriminant, data));
                        }
                    }
                    if g_scalar && is(g4, Family::A49) {
                        let a = g4.param(0);
                        let bad = in_half_open(a, &q(-1), &qf(-1, 3), false, true);
                        data.notes.push(format!("α = {} {} (−1, −1/3]", fmt_q(a), if bad { "∈" } else { "∉" }));
                        if bad {
                            return Ok(Verdict::no(name, "d", Obstruction::Discriminant, data));
                        }
                    }
                    let route = if f_scalar || g_scalar { Route::H3KernelScalar } else { Route::H3KernelGeneric };
                    Ok(Verdict::yes(name, "d/h3-kernel", route, data))
                }
                _ => {
                    data.notes.push("unimodular kernel of g4 is abelian".into());
                    Ok(Verdict::no(name, "d", Obstruction::AlmostAbelianNonunimodular, data))
                }
            }
        }
    }
}

/// Is the unimodular 5d almost abelian `h` one of `R⁵`, `h3⊕R²`, `A_{5,7}^{−1/3,−1/3,−1/3}`?
pub fn is_exceptional_5d(h: &subspace::AlmostAbelian5, g5: &LieAlgebra) -> bool {
    if g5.is_abelian() || g5.commutator_dim() == 1 {
        return true;
    }
    // diag(f, −f/3, −f/3, −f/3): some c ≠ 0 with rank(H − c) = 1, and then c² = tr(H²)/12
    let hm = &h.h;
    let tr2 = (0..4).map(|i| (0..4).map(|j| &hm[i][j] * &hm[j][i]).sum::<Q>()).sum::<Q>();
    let Some(c) = lie::q_sqrt(&(tr2 / q(12))) else { return false };
    if c.is_zero() {
        return false;
    }
    [c.clone(), -c].iter().any(|c| {
        let m: Vec<Vec<Q>> = (0..4).map(|i| (0..4).map(|j| if i == j { &hm[i][j] - c } else { hm[i][j].clone() }).collect()).collect();
        linalg::rank(&m) == 1
    })
}

/// `h ⊕ r2` with `h` five-dimensional almost abelian.
pub fn decide_5d_r2(g5: &LieAlgebra) -> Result<Verdict> {
    let aa = subspace::almost_abelian_5d(g5)?;
    let name = format!("{}+r2", g5.name.clone().unwrap_or_else(|| "h".into()));
    let mut data = BranchData {
        g4_unimodular: g5.unimodular(),
        g3_unimodular: false,
        cohomology_g4: g5.cohomology(),
        cohomology_g3: vec![1, 0],
        commutator_dim: g5.commutator_dim(),
        ..Default::default()
    };
    if !g5.unimodular() {
        data.notes.push("h is not unimodular".into());
        return Ok(Verdict::no(name, "5+2", Obstruction::FiveDimNonunimodular, data));
    }
    if is_exceptional_5d(&aa, g5) {
        data.notes.push("h ∈ {R⁵, h3⊕R², A_{5,7}^{−1/3,−1/3,−1/3}}".into());
        return Ok(Verdict::no(name, "5+2", Obstruction::LengthOne, data));
    }
    Ok(Verdict::yes(name, "5+2", Route::FiveR2, data))
}

pub fn explain(v: &Verdict) -> String {
    let d = &v.data;
    let fmt_v = |x: &[usize]| format!("({})", x.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(","));
    let uni = |b: bool| if b { "unimodular" } else { "not unimodular" };
    let mut s = String::new();
    s.push_str(&format!("algebra: {}\n", v.algebra));
    s.push_str(&format!("g4: {}, h* = {}, dim [g4,g4] = {}\n", uni(d.g4_unimodular), fmt_v(&d.cohomology_g4), d.commutator_dim));
    s.push_str(&format!("g3: {}, h* = {}\n", uni(d.g3_unimodular), fmt_v(&d.cohomology_g3)));
    match &d.kernel {
        Some(k) => s.push_str(&format!("unimodular codimension-one ideal u ≅ {k}\n")),
        None => s.push_str("unimodular codimension-one ideal not unique\n"),
    }
    if let Some(qv) = d.q {
        let h2g3 = d.cohomology_g3.get(1).copied().unwrap_or(0) as i64;
        s.push_str(&format!("Q = h¹(g4)+h¹(u)−h²(g4) + h²(g3) = {} + {} = {}\n", qv - h2g3, h2g3, qv));
    }
    s.push_str(&format!("branch ({}) fired\n", v.branch));
    for n in &d.notes {
        s.push_str(&format!("  {n}\n"));
    }
    match (v.exists, v.route, v.obstruction) {
        (true, Some(r), _) => s.push_str(&format!("=> Exists, route {r}\n")),
        (false, _, Some(o)) => s.push_str(&format!("=> NotExists, obstruction {o}\n")),
        _ => s.push_str("=> inconsistent verdict\n"),
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{parse, parse_pair, sweep_pairs};

    fn d(a: &str, b: &str) -> Verdict {
        decide(&parse(a).unwrap(), &parse(b).unwrap()).unwrap()
    }

    #[test]
    fn listed_decisions() {
        let v = d("A_{4,8}", "e(1,1)");
        assert!(v.exists);
        assert_eq!(v.route, Some(Route::ExceptionalBasis));
        assert_eq!(d("A_{4,10}", "e(2)").obstruction, Some(Obstruction::OrbitSign));
        assert_eq!(d("A_{4,1}", "h3").obstruction, Some(Obstruction::A41H3));
        assert!(d("A_{4,9}^{-1/2}", "r2+R").exists);
        assert_eq!(d("A_{4,9}^{1}", "r3mu^{-1/4}").obstruction, Some(Obstruction::Discriminant));
        let v = d("r2+r2", "r3mu^{1}");
        assert!(v.exists);
        assert_eq!(v.route, Some(Route::ExceptionalBasis));
        assert!(!d("h3+R", "r2+R").exists);
    }

    #[test]
    fn boundaries() {
        assert!(!d("A_{4,9}^{1}", "r3mu^{-1/3}").exists);
        assert!(d("A_{4,9}^{1}", "r3mu^{-1/2}").exists);
        assert!(d("A_{4,9}^{1}", "r3mu^{1/2}").exists);
        assert!(!d("A_{4,9}^{-1/3}", "r3mu^{1}").exists);
        assert!(d("A_{4,9}^{-1/4}", "r3mu^{1}").exists);
        assert!(!d("A_{4,9}^{-2/3}", "r3mu^{1}").exists);
        assert!(d("A_{4,9}^{1}", "r3mu^{1}").exists);
    }

    #[test]
    fn explanations() {
        let t = explain(&d("A_{4,2}^{-2}", "h3"));
        assert!(t.contains("Q = h¹(g4)+h¹(u)−h²(g4) + h²(g3) = 4 + 2 = 6"), "{t}");
        assert!(t.contains("NotExists"));
        assert!(explain(&d("so(3)+R", "R3")).contains("branch (b/decomposable)"));
        assert!(explain(&d("e(2)+R", "so(2,1)")).contains("branch (b/nonsolvable-g3)"));
    }

    #[test]
    fn exactly_one_of_route_or_obstruction() {
        for (a, b) in sweep_pairs() {
            let v = decide(&a, &b).unwrap();
            assert_eq!(v.exists, v.route.is_some(), "{}", v.algebra);
            assert_eq!(!v.exists, v.obstruction.is_some(), "{}", v.algebra);
        }
    }

    #[test]
    fn five_plus_two() {
        for n in ["R5", "h3+R2", "A_{5,7}^{-1/3,-1/3,-1/3}"] {
            let g = parse(n).unwrap().instantiate().unwrap();
            assert_eq!(decide_5d_r2(&g).unwrap().obstruction, Some(Obstruction::LengthOne), "{n}");
        }
        let g = parse("A_{4,5}^{-1/2,-1/2}").unwrap().instantiate().unwrap().direct_sum(&LieAlgebra::abelian(1));
        assert!(decide_5d_r2(&g).unwrap().exists);
        // ad = diag(1,0,0,0) on the ideal
        let r2r3 = parse("r2+R2").unwrap().instantiate().unwrap().direct_sum(&LieAlgebra::abelian(1));
        assert_eq!(decide_5d_r2(&r2r3).unwrap().obstruction, Some(Obstruction::FiveDimNonunimodular));
    }

    #[test]
    fn verdict_json_round_trip() {
        let (a, b) = parse_pair("A_{4,9}^{-1/2}+r2+R").unwrap();
        let v = decide(&a, &b).unwrap();
        assert_eq!(Verdict::from_json(&v.to_json()).unwrap(), v);
    }

    #[test]
    fn q_matches_last_column() {
        for fx in crate::catalog::fixtures_4d() {
            if fx.unimodular {
                continue;
            }
            let g = parse(&fx.id).unwrap().instantiate().unwrap();
            let u = unique_kernel(&g).unwrap().unwrap();
            let val = g.betti(1) as i64 + u.betti(1) as i64 - g.betti(2) as i64;
            assert_eq!(val, fx.kernel_quantity[0], "{}", fx.id);
        }
    }
}
