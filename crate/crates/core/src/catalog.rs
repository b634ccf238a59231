//! The low-dimensional Lie algebra catalog: structure constants, cohomology fixtures,
//! name parsing, the three exceptional adapted bases, and parameter grids for sweeps.

use std::fmt;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::multivector::KForm;
use crate::scalar::{fmt_q, parse_q, q, qf, QuadQ, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    // 1d, 2d
    R1,
    R2,
    Rr2,
    // 3d unimodular
    So3,
    So21,
    E2,
    E11,
    H3,
    R3,
    // 3d non-unimodular
    R2R,
    R3Jordan,
    R3Mu,
    R3PrimeMu,
    // 4d unimodular
    So3R,
    So21R,
    E2R,
    E11R,
    H3R,
    R4,
    A41,
    A42,
    A45,
    A46,
    A48,
    A410,
    // 4d non-unimodular
    R2R2,
    R3R,
    R3MuR,
    R3PrimeMuR,
    A43,
    A44,
    A47,
    A49,
    A411,
    A412,
    R2xR2,
    // 5d
    R5,
    H3R2,
    A57,
}

struct FamilyInfo {
    family: Family,
    /// '+'-separated name tokens; parameters attach to the first token when displayed.
    name: &'static str,
    dim: usize,
    params: usize,
}

const FAMILIES: &[FamilyInfo] = &[
    FamilyInfo { family: Family::R1, name: "R", dim: 1, params: 0 },
    FamilyInfo { family: Family::R2, name: "R2", dim: 2, params: 0 },
    FamilyInfo { family: Family::Rr2, name: "r2", dim: 2, params: 0 },
    FamilyInfo { family: Family::So3, name: "so(3)", dim: 3, params: 0 },
    FamilyInfo { family: Family::So21, name: "so(2,1)", dim: 3, params: 0 },
    FamilyInfo { family: Family::E2, name: "e(2)", dim: 3, params: 0 },
    FamilyInfo { family: Family::E11, name: "e(1,1)", dim: 3, params: 0 },
    FamilyInfo { family: Family::H3, name: "h3", dim: 3, params: 0 },
    FamilyInfo { family: Family::R3, name: "R3", dim: 3, params: 0 },
    FamilyInfo { family: Family::R2R, name: "r2+R", dim: 3, params: 0 },
    FamilyInfo { family: Family::R3Jordan, name: "r3", dim: 3, params: 0 },
    FamilyInfo { family: Family::R3Mu, name: "r3mu", dim: 3, params: 1 },
    FamilyInfo { family: Family::R3PrimeMu, name: "r3'mu", dim: 3, params: 1 },
    FamilyInfo { family: Family::So3R, name: "so(3)+R", dim: 4, params: 0 },
    FamilyInfo { family: Family::So21R, name: "so(2,1)+R", dim: 4, params: 0 },
    FamilyInfo { family: Family::E2R, name: "e(2)+R", dim: 4, params: 0 },
    FamilyInfo { family: Family::E11R, name: "e(1,1)+R", dim: 4, params: 0 },
    FamilyInfo { family: Family::H3R, name: "h3+R", dim: 4, params: 0 },
    FamilyInfo { family: Family::R4, name: "R4", dim: 4, params: 0 },
    FamilyInfo { family: Family::A41, name: "A_{4,1}", dim: 4, params: 0 },
    FamilyInfo { family: Family::A42, name: "A_{4,2}", dim: 4, params: 1 },
    FamilyInfo { family: Family::A45, name: "A_{4,5}", dim: 4, params: 2 },
    FamilyInfo { family: Family::A46, name: "A_{4,6}", dim: 4, params: 2 },
    FamilyInfo { family: Family::A48, name: "A_{4,8}", dim: 4, params: 0 },
    FamilyInfo { family: Family::A410, name: "A_{4,10}", dim: 4, params: 0 },
    FamilyInfo { family: Family::R2R2, name: "r2+R2", dim: 4, params: 0 },
    FamilyInfo { family: Family::R3R, name: "r3+R", dim: 4, params: 0 },
    FamilyInfo { family: Family::R3MuR, name: "r3mu+R", dim: 4, params: 1 },
    FamilyInfo { family: Family::R3PrimeMuR, name: "r3'mu+R", dim: 4, params: 1 },
    FamilyInfo { family: Family::A43, name: "A_{4,3}", dim: 4, params: 0 },
    FamilyInfo { family: Family::A44, name: "A_{4,4}", dim: 4, params: 0 },
    FamilyInfo { family: Family::A47, name: "A_{4,7}", dim: 4, params: 0 },
    FamilyInfo { family: Family::A49, name: "A_{4,9}", dim: 4, params: 1 },
    FamilyInfo { family: Family::A411, name: "A_{4,11}", dim: 4, params: 1 },
    FamilyInfo { family: Family::A412, name: "A_{4,12}", dim: 4, params: 0 },
    FamilyInfo { family: Family::R2xR2, name: "r2+r2", dim: 4, params: 0 },
    FamilyInfo { family: Family::R5, name: "R5", dim: 5, params: 0 },
    FamilyInfo { family: Family::H3R2, name: "h3+R2", dim: 5, params: 0 },
    FamilyInfo { family: Family::A57, name: "A_{5,7}", dim: 5, params: 3 },
];

fn info(f: Family) -> &'static FamilyInfo {
    FAMILIES.iter().find(|i| i.family == f).expect("family table")
}

impl Family {
    pub fn name(self) -> &'static str {
        info(self).name
    }
    pub fn dim(self) -> usize {
        info(self).dim
    }
    pub fn param_count(self) -> usize {
        info(self).params
    }
    /// Admissible parameter range, as text (empty for parameter-free families).
    pub fn param_range(self) -> &'static str {
        match self {
            Family::R3Mu | Family::R3MuR => "−1 < μ ≤ 1, μ ≠ 0",
            Family::R3PrimeMu | Family::R3PrimeMuR => "μ > 0",
            Family::A42 => "α ≠ 0",
            Family::A45 => "−1 < α ≤ β ≤ 1 with αβ ≠ 0, or α = −1 and 0 < β ≤ 1",
            Family::A46 | Family::A411 => "α > 0",
            Family::A49 => "−1 < α ≤ 1",
            Family::A57 => "only the parameters (−1/3, −1/3, −1/3) are catalogued",
            _ => "",
        }
    }

    pub fn all() -> impl Iterator<Item = Family> {
        FAMILIES.iter().map(|i| i.family)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraId {
    pub family: Family,
    pub params: Vec<Q>,
}

impl AlgebraId {
    pub fn new(family: Family, params: Vec<Q>) -> Result<Self> {
        let id = AlgebraId { family, params };
        id.validate()?;
        Ok(id)
    }

    pub fn plain(family: Family) -> Self {
        AlgebraId { family, params: vec![] }
    }

    pub fn dim(&self) -> usize {
        self.family.dim()
    }

    pub fn param(&self, i: usize) -> &Q {
        &self.params[i]
    }

    pub fn validate(&self) -> Result<()> {
        let f = self.family;
        if self.params.len() != f.param_count() {
            return Err(Error::Range(format!("{} takes {} parameter(s), got {}", f.name(), f.param_count(), self.params.len())));
        }
        let p = &self.params;
        let zero = Q::zero();
        let one = Q::one();
        let m1 = -Q::one();
        let bad = |why: &str| Err(Error::Range(format!("{}: {why}", self)));
        match f {
            Family::R3Mu | Family::R3MuR => {
                if !(p[0] > m1 && p[0] <= one && !p[0].is_zero()) {
                    return bad(f.param_range());
                }
            }
            Family::R3PrimeMu | Family::R3PrimeMuR => {
                if p[0] <= zero {
                    return bad(f.param_range());
                }
            }
            Family::A42 => {
                if p[0].is_zero() {
                    return bad(f.param_range());
                }
            }
            Family::A45 => {
                let (a, b) = (&p[0], &p[1]);
                let generic = *a > m1 && a <= b && *b <= one && !a.is_zero() && !b.is_zero();
                let minus_one = *a == m1 && *b > zero && *b <= one;
                if !(generic || minus_one) {
                    return bad(f.param_range());
                }
            }
            Family::A46 => {
                if p[0] <= zero {
                    return bad(f.param_range());
                }
            }
            Family::A49 => {
                if !(p[0] > m1 && p[0] <= one) {
                    return bad(f.param_range());
                }
            }
            Family::A411 => {
                if p[0] <= zero {
                    return bad(f.param_range());
                }
            }
            Family::A57 => {
                let third = qf(-1, 3);
                if p.iter().any(|x| *x != third) {
                    return bad(f.param_range());
                }
            }
            _ => {}
        }
        Ok(())
    }

    pub fn instantiate(&self) -> Result<LieAlgebra> {
        self.validate()?;
        let d = structure(self);
        LieAlgebra::new(d, Some(self.to_string()))
    }

    pub fn is_unimodular_row(&self) -> bool {
        self.instantiate().map(|g| g.unimodular()).unwrap_or(false)
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.family.name();
        if self.params.is_empty() {
            return write!(f, "{name}");
        }
        let ps: Vec<String> = self.params.iter().map(fmt_q).collect();
        let ps = if ps.len() == 1 && !ps[0].contains('/') && !ps[0].starts_with('-') {
            ps[0].clone()
        } else {
            format!("{{{}}}", ps.join(","))
        };
        match name.split_once('+') {
            Some((head, tail)) => write!(f, "{head}^{ps}+{tail}"),
            None => write!(f, "{name}^{ps}"),
        }
    }
}

/// `Σ c·e^{ij}` on an n-dimensional space.
fn two(n: usize, terms: &[(Q, usize, usize)]) -> KForm {
    let mut f = KForm::zero(n, 2);
    for (c, i, j) in terms {
        f = &f + &KForm::monomial(n, &[*i, *j], c.clone()).expect("catalog index");
    }
    f
}

/// Structure constants. 3d rows are written on `e^5,e^6,e^7` in print; here re-indexed to 1..3.
fn structure(id: &AlgebraId) -> Vec<KForm> {
    use Family::*;
    let p = &id.params;
    let o = || q(1);
    let m = || q(-1);
    let z3 = || KForm::zero(3, 2);
    let z4 = || KForm::zero(4, 2);
    let t3 = |terms: &[(Q, usize, usize)]| two(3, terms);
    let t4 = |terms: &[(Q, usize, usize)]| two(4, terms);
    match id.family {
        R1 => vec![KForm::zero(1, 2)],
        R2 => vec![KForm::zero(2, 2); 2],
        Rr2 => vec![two(2, &[(o(), 1, 2)]), KForm::zero(2, 2)],
        So3 => vec![t3(&[(o(), 2, 3)]), t3(&[(m(), 1, 3)]), t3(&[(o(), 1, 2)])],
        So21 => vec![t3(&[(o(), 2, 3)]), t3(&[(o(), 1, 3)]), t3(&[(o(), 1, 2)])],
        E2 => vec![t3(&[(o(), 2, 3)]), t3(&[(m(), 1, 3)]), z3()],
        E11 => vec![t3(&[(o(), 2, 3)]), t3(&[(o(), 1, 3)]), z3()],
        H3 => vec![t3(&[(o(), 2, 3)]), z3(), z3()],
        R3 => vec![z3(), z3(), z3()],
        R2R => vec![t3(&[(o(), 1, 3)]), z3(), z3()],
        R3Jordan => vec![t3(&[(o(), 1, 3), (o(), 2, 3)]), t3(&[(o(), 2, 3)]), z3()],
        R3Mu => vec![t3(&[(o(), 1, 3)]), t3(&[(p[0].clone(), 2, 3)]), z3()],
        R3PrimeMu => vec![t3(&[(p[0].clone(), 1, 3), (o(), 2, 3)]), t3(&[(p[0].clone(), 2, 3), (m(), 1, 3)]), z3()],
        So3R => vec![t4(&[(o(), 2, 3)]), t4(&[(m(), 1, 3)]), t4(&[(o(), 1, 2)]), z4()],
        So21R => vec![t4(&[(o(), 2, 3)]), t4(&[(o(), 1, 3)]), t4(&[(o(), 1, 2)]), z4()],
        E2R => vec![t4(&[(o(), 2, 3)]), t4(&[(m(), 1, 3)]), z4(), z4()],
        E11R => vec![t4(&[(o(), 2, 3)]), t4(&[(o(), 1, 3)]), z4(), z4()],
        H3R => vec![t4(&[(o(), 2, 3)]), z4(), z4(), z4()],
        R4 => vec![z4(), z4(), z4(), z4()],
        A41 => vec![t4(&[(o(), 2, 4)]), t4(&[(o(), 3, 4)]), z4(), z4()],
        A42 => vec![t4(&[(p[0].clone(), 1, 4)]), t4(&[(o(), 2, 4), (o(), 3, 4)]), t4(&[(o(), 3, 4)]), z4()],
        A45 => vec![t4(&[(o(), 1, 4)]), t4(&[(p[0].clone(), 2, 4)]), t4(&[(p[1].clone(), 3, 4)]), z4()],
        A46 => vec![
            t4(&[(p[0].clone(), 1, 4)]),
            t4(&[(p[1].clone(), 2, 4), (o(), 3, 4)]),
            t4(&[(p[1].clone(), 3, 4), (m(), 2, 4)]),
            z4(),
        ],
        A48 => vec![t4(&[(o(), 2, 3)]), t4(&[(o(), 2, 4)]), t4(&[(m(), 3, 4)]), z4()],
        A410 => vec![t4(&[(o(), 2, 3)]), t4(&[(o(), 3, 4)]), t4(&[(m(), 2, 4)]), z4()],
        R2R2 => vec![t4(&[(o(), 1, 4)]), z4(), z4(), z4()],
        R3R => vec![t4(&[(o(), 1, 4), (o(), 2, 4)]), t4(&[(o(), 2, 4)]), z4(), z4()],
        R3MuR => vec![t4(&[(o(), 1, 4)]), t4(&[(p[0].clone(), 2, 4)]), z4(), z4()],
        R3PrimeMuR => vec![t4(&[(p[0].clone(), 1, 4), (o(), 2, 4)]), t4(&[(m(), 1, 4), (p[0].clone(), 2, 4)]), z4(), z4()],
        A43 => vec![t4(&[(o(), 1, 4)]), t4(&[(o(), 3, 4)]), z4(), z4()],
        A44 => vec![t4(&[(o(), 1, 4), (o(), 2, 4)]), t4(&[(o(), 2, 4), (o(), 3, 4)]), t4(&[(o(), 3, 4)]), z4()],
        A47 => vec![t4(&[(q(2), 1, 4), (o(), 2, 3)]), t4(&[(o(), 2, 4), (o(), 3, 4)]), t4(&[(o(), 3, 4)]), z4()],
        A49 => vec![t4(&[(&p[0] + q(1), 1, 4), (o(), 2, 3)]), t4(&[(o(), 2, 4)]), t4(&[(p[0].clone(), 3, 4)]), z4()],
        A411 => vec![
            t4(&[(&p[0] * q(2), 1, 4), (o(), 2, 3)]),
            t4(&[(p[0].clone(), 2, 4), (o(), 3, 4)]),
            t4(&[(p[0].clone(), 3, 4), (m(), 2, 4)]),
            z4(),
        ],
        A412 => vec![t4(&[(o(), 1, 4), (o(), 2, 3)]), t4(&[(o(), 2, 4), (m(), 1, 3)]), z4(), z4()],
        R2xR2 => vec![t4(&[(o(), 1, 4), (o(), 2, 3)]), t4(&[(o(), 2, 4), (o(), 1, 3)]), z4(), z4()],
        R5 => vec![KForm::zero(5, 2); 5],
        H3R2 => {
            let mut d = vec![KForm::zero(5, 2); 5];
            d[0] = two(5, &[(o(), 2, 3)]);
            d
        }
        A57 => {
            // almost abelian: de^i = h_i e^{i5} on the ideal, h = (1, −1/3, −1/3, −1/3)
            let mut d = vec![KForm::zero(5, 2); 5];
            d[0] = two(5, &[(o(), 1, 5)]);
            for i in 1..4 {
                d[i] = two(5, &[(qf(-1, 3), i + 1, 5)]);
            }
            d
        }
    }
}

// ---------------------------------------------------------------- parsing

fn normalize_token(tok: &str) -> String {
    let t: String = tok.chars().filter(|c| !c.is_whitespace()).collect();
    let t = t.replace("\\mathfrak", "").replace("\\op", "+");
    match t.as_str() {
        "so3" | "so(3)" | "su(2)" => "so(3)".into(),
        "so21" | "so(2,1)" | "sl(2)" | "sl2" => "so(2,1)".into(),
        "e2" | "e(2)" => "e(2)".into(),
        "e11" | "e(1,1)" => "e(1,1)".into(),
        "h3" | "h_3" => "h3".into(),
        "R^1" | "R" => "R".into(),
        "R^2" | "R2" => "R2".into(),
        "R^3" | "R3" => "R3".into(),
        "R^4" | "R4" => "R4".into(),
        "R^5" | "R5" => "R5".into(),
        "r2" | "r_2" => "r2".into(),
        "r3" | "r_3" => "r3".into(),
        _ => t,
    }
}

/// Split a token into base name and parameter list (`A_{4,9}^{-1/2}` → (`A_{4,9}`, [−1/2])).
fn split_params(tok: &str) -> Result<(String, Vec<Q>)> {
    // r_{3,μ} and r'_{3,μ} carry their parameter in the subscript
    for (prefix, base) in [("r_{3,", "r3mu"), ("r'_{3,", "r3'mu")] {
        if let Some(rest) = tok.strip_prefix(prefix) {
            let inner = rest.strip_suffix('}').ok_or_else(|| Error::Parse(format!("bad name `{tok}`")))?;
            return Ok((base.into(), vec![parse_q(inner)?]));
        }
    }
    match tok.split_once('^') {
        None => Ok((normalize_token(tok), vec![])),
        Some((base, ps)) => {
            let ps = ps.trim();
            let inner = ps.strip_prefix('{').and_then(|x| x.strip_suffix('}')).unwrap_or(ps);
            let params = inner.split(',').map(parse_q).collect::<Result<Vec<_>>>()?;
            Ok((normalize_token(base), params))
        }
    }
}

/// Top-level '+' split (ignores '+' inside braces).
fn tokens(s: &str) -> Vec<String> {
    let s = s.replace('⊕', "+").replace("oplus", "+");
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '{' | '(' => {
                depth += 1;
                cur.push(c)
            }
            '}' | ')' => {
                depth -= 1;
                cur.push(c)
            }
            '+' if depth == 0 => out.push(std::mem::take(&mut cur)),
            _ => cur.push(c),
        }
    }
    out.push(cur);
    out.into_iter().map(|t| t.trim().to_string()).collect()
}

fn family_by_name(name: &str) -> Option<Family> {
    FAMILIES.iter().find(|i| i.name == name).map(|i| i.family)
}

/// All ways to read the token list as a sequence of catalog families.
fn segmentations(toks: &[(String, Vec<Q>)]) -> Vec<Vec<(Family, Vec<Q>)>> {
    if toks.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for len in 1..=toks.len().min(3) {
        let name: Vec<&str> = toks[..len].iter().map(|(b, _)| b.as_str()).collect();
        if let Some(f) = family_by_name(&name.join("+")) {
            let params: Vec<Q> = toks[..len].iter().flat_map(|(_, p)| p.clone()).collect();
            for mut rest in segmentations(&toks[len..]) {
                rest.insert(0, (f, params.clone()));
                out.push(rest);
            }
        }
    }
    out
}

/// Parse a single catalog algebra name.
pub fn parse(name: &str) -> Result<AlgebraId> {
    let ids = parse_sum(name)?;
    if ids.len() != 1 {
        return Err(Error::Parse(format!("`{name}` is a direct sum of {} catalog algebras", ids.len())));
    }
    Ok(ids.into_iter().next().unwrap())
}

/// Parse a direct sum, preferring the reading with the fewest summands.
pub fn parse_sum(name: &str) -> Result<Vec<AlgebraId>> {
    let toks = tokens(name).iter().map(|t| split_params(t)).collect::<Result<Vec<_>>>()?;
    if toks.iter().any(|(b, _)| b.is_empty()) {
        return Err(Error::Parse(format!("empty summand in `{name}`")));
    }
    let mut segs = segmentations(&toks);
    if segs.is_empty() {
        let unknown = toks.iter().find(|(b, _)| family_by_name(b).is_none()).map(|(b, _)| b.clone()).unwrap_or_else(|| name.into());
        return Err(Error::UnknownFamily(unknown));
    }
    segs.sort_by_key(|s| s.len());
    let best = segs.swap_remove(0);
    best.into_iter().map(|(f, p)| AlgebraId::new(f, p)).collect()
}

/// Parse `X+Y` into summand groups of the given dimensions, e.g. `[4, 3]`.
pub fn parse_split(name: &str, dims: &[usize]) -> Result<Vec<Vec<AlgebraId>>> {
    let toks = tokens(name).iter().map(|t| split_params(t)).collect::<Result<Vec<_>>>()?;
    let mut segs = segmentations(&toks);
    if segs.is_empty() {
        let unknown = toks.iter().find(|(b, _)| family_by_name(b).is_none()).map(|(b, _)| b.clone()).unwrap_or_else(|| name.into());
        return Err(Error::UnknownFamily(unknown));
    }
    segs.sort_by_key(|s| s.len());
    let mut last_err = None;
    for seg in segs {
        let mut groups: Vec<Vec<(Family, Vec<Q>)>> = Vec::new();
        let mut it = seg.into_iter().peekable();
        let mut ok = true;
        for &d in dims {
            let mut g = Vec::new();
            let mut acc = 0;
            while acc < d {
                match it.next() {
                    Some(x) => {
                        acc += x.0.dim();
                        g.push(x);
                    }
                    None => break,
                }
            }
            if acc != d {
                ok = false;
                break;
            }
            groups.push(g);
        }
        if !ok || it.peek().is_some() {
            continue;
        }
        let res: Result<Vec<Vec<AlgebraId>>> =
            groups.into_iter().map(|g| g.into_iter().map(|(f, p)| AlgebraId::new(f, p)).collect()).collect();
        match res {
            Ok(r) => return Ok(r),
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.unwrap_or_else(|| Error::Parse(format!("`{name}` does not split into summands of dimensions {dims:?}"))))
}

/// Parse `g4+g3` into two single catalog families.
pub fn parse_pair(name: &str) -> Result<(AlgebraId, AlgebraId)> {
    let groups = parse_split(name, &[4, 3])?;
    let mut it = groups.into_iter();
    let mut g4 = it.next().unwrap();
    let mut g3 = it.next().unwrap();
    if g4.len() != 1 || g3.len() != 1 {
        return Err(Error::Parse(format!("`{name}`: both summands must be catalog algebras")));
    }
    Ok((g4.remove(0), g3.remove(0)))
}

pub fn instantiate_sum(ids: &[AlgebraId]) -> Result<LieAlgebra> {
    let mut it = ids.iter();
    let first = it.next().ok_or_else(|| Error::Parse("empty sum".into()))?.instantiate()?;
    it.try_fold(first, |acc, id| Ok(acc.direct_sum(&id.instantiate()?)))
}

// ---------------------------------------------------------------- fixtures

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Fixture {
    pub id: String,
    pub cohomology: Vec<usize>,
    pub unimodular: bool,
    /// Isomorphism classes of the codimension-one unimodular ideals, as tabulated.
    pub kernel: Vec<String>,
    pub commutator: String,
    pub commutator_dim: usize,
    /// `h¹(g)+h¹(u)−h²(g)`, one per listed ideal (4d only).
    pub kernel_quantity: Vec<i64>,
}

fn fx(id: &str, h: &[usize], uni: bool, u: &[&str], comm: &str, cd: usize, last: &[i64]) -> Fixture {
    Fixture {
        id: id.into(),
        cohomology: h.to_vec(),
        unimodular: uni,
        kernel: u.iter().map(|s| s.to_string()).collect(),
        commutator: comm.into(),
        commutator_dim: cd,
        kernel_quantity: last.to_vec(),
    }
}

/// Rows of the 3d table, instantiated on a parameter grid.
pub fn fixtures_3d() -> Vec<Fixture> {
    let mut v = vec![
        fx("so(3)", &[0, 0, 1], true, &[], "so(3)", 3, &[]),
        fx("so(2,1)", &[0, 0, 1], true, &[], "so(2,1)", 3, &[]),
        fx("e(2)", &[1, 1, 1], true, &[], "R2", 2, &[]),
        fx("e(1,1)", &[1, 1, 1], true, &[], "R2", 2, &[]),
        fx("h3", &[2, 2, 1], true, &[], "R", 1, &[]),
        fx("R3", &[3, 3, 1], true, &[], "0", 0, &[]),
        fx("r2+R", &[2, 1, 0], false, &["R2"], "R", 1, &[]),
        fx("r3", &[1, 0, 0], false, &["R2"], "R2", 2, &[]),
    ];
    for mu in ["-1/2", "-1/3", "-1/4", "1/2", "1"] {
        v.push(fx(&format!("r3mu^{{{mu}}}"), &[1, 0, 0], false, &["R2"], "R2", 2, &[]));
    }
    for mu in ["1/2", "1", "2"] {
        v.push(fx(&format!("r3'mu^{{{mu}}}"), &[1, 0, 0], false, &["R2"], "R2", 2, &[]));
    }
    v
}

/// Rows of the 4d table, instantiated on a parameter grid.
pub fn fixtures_4d() -> Vec<Fixture> {
    let mut v = vec![
        fx("so(3)+R", &[1, 0, 1, 1], true, &["so(3)"], "so(3)", 3, &[1]),
        fx("so(2,1)+R", &[1, 0, 1, 1], true, &["so(2,1)"], "so(2,1)", 3, &[1]),
        fx("e(2)+R", &[2, 2, 2, 1], true, &["R3", "e(2)"], "R2", 2, &[3, 1]),
        fx("e(1,1)+R", &[2, 2, 2, 1], true, &["R3", "e(1,1)"], "R2", 2, &[3, 1]),
        fx("h3+R", &[3, 4, 3, 1], true, &["R3", "h3"], "R", 1, &[2, 1]),
        fx("R4", &[4, 6, 4, 1], true, &["R3"], "0", 0, &[1]),
        fx("A_{4,1}", &[2, 2, 2, 1], true, &["R3", "h3"], "R2", 2, &[3, 2]),
        fx("A_{4,2}^{-2}", &[1, 0, 1, 1], true, &["R3"], "R3", 3, &[4]),
        fx("A_{4,8}", &[1, 0, 1, 1], true, &["h3"], "h3", 3, &[3]),
        fx("A_{4,10}", &[1, 0, 1, 1], true, &["h3"], "h3", 3, &[3]),
        fx("r2+R2", &[3, 3, 1, 0], false, &["R3"], "R", 1, &[3]),
        fx("r3+R", &[2, 1, 0, 0], false, &["R3"], "R2", 2, &[4]),
        fx("A_{4,3}", &[2, 2, 1, 0], false, &["R3"], "R2", 2, &[3]),
        fx("A_{4,4}", &[1, 0, 0, 0], false, &["R3"], "R3", 3, &[4]),
        fx("A_{4,7}", &[1, 0, 0, 0], false, &["h3"], "h3", 3, &[3]),
        fx("A_{4,9}^{-1/2}", &[1, 1, 1, 0], false, &["h3"], "h3", 3, &[2]),
        fx("A_{4,9}^{0}", &[2, 1, 0, 0], false, &["h3"], "R2", 2, &[3]),
        fx("A_{4,12}", &[2, 1, 0, 0], false, &["e(2)"], "R2", 2, &[2]),
        fx("r2+r2", &[2, 1, 0, 0], false, &["e(1,1)"], "R2", 2, &[2]),
        fx("A_{4,2}^{-1}", &[1, 1, 1, 0], false, &["R3"], "R3", 3, &[3]),
        fx("A_{4,5}^{-1,1}", &[1, 2, 2, 0], false, &["R3"], "R3", 3, &[2]),
    ];
    for a in ["-1/2", "-2/3", "-3/4"] {
        let b = fmt_q(&(-parse_q(a).unwrap() - Q::one()));
        v.push(fx(&format!("A_{{4,5}}^{{{a},{b}}}"), &[1, 0, 1, 1], true, &["R3"], "R3", 3, &[4]));
    }
    for a in ["1", "2", "1/3"] {
        let b = fmt_q(&(-parse_q(a).unwrap() / q(2)));
        v.push(fx(&format!("A_{{4,6}}^{{{a},{b}}}"), &[1, 0, 1, 1], true, &["R3"], "R3", 3, &[4]));
    }
    for mu in ["-1/2", "1/2", "1"] {
        v.push(fx(&format!("r3mu^{{{mu}}}+R"), &[2, 1, 0, 0], false, &["R3"], "R2", 2, &[4]));
    }
    for mu in ["1/2", "1", "3"] {
        v.push(fx(&format!("r3'mu^{{{mu}}}+R"), &[2, 1, 0, 0], false, &["R3"], "R2", 2, &[4]));
    }
    for a in ["1/2", "2", "-3", "1"] {
        v.push(fx(&format!("A_{{4,2}}^{{{a}}}"), &[1, 0, 0, 0], false, &["R3"], "R3", 3, &[4]));
    }
    for (a, b) in [("1/2", "1"), ("-1/2", "1/3"), ("1", "1"), ("-3/4", "1/2"), ("1/3", "1/3")] {
        v.push(fx(&format!("A_{{4,5}}^{{{a},{b}}}"), &[1, 0, 0, 0], false, &["R3"], "R3", 3, &[4]));
    }
    for b in ["1/2", "1/3"] {
        v.push(fx(&format!("A_{{4,5}}^{{-1,{b}}}"), &[1, 1, 1, 0], false, &["R3"], "R3", 3, &[3]));
    }
    for (a, b) in [("1", "1"), ("2", "1/2"), ("1", "-1")] {
        v.push(fx(&format!("A_{{4,6}}^{{{a},{b}}}"), &[1, 0, 0, 0], false, &["R3"], "R3", 3, &[4]));
    }
    for a in ["1", "2"] {
        v.push(fx(&format!("A_{{4,6}}^{{{a},0}}"), &[1, 1, 1, 0], false, &["R3"], "R3", 3, &[3]));
    }
    for a in ["1", "1/2", "-1/3", "-2/3", "-1/4"] {
        v.push(fx(&format!("A_{{4,9}}^{{{a}}}"), &[1, 0, 0, 0], false, &["h3"], "h3", 3, &[3]));
    }
    for a in ["1", "1/2"] {
        v.push(fx(&format!("A_{{4,11}}^{{{a}}}"), &[1, 0, 0, 0], false, &["h3"], "h3", 3, &[3]));
    }
    v
}

// ---------------------------------------------------------------- sweep grid

fn ids(names: &[&str]) -> Vec<AlgebraId> {
    names.iter().map(|n| parse(n).expect("grid name")).collect()
}

pub fn grid_3d() -> Vec<AlgebraId> {
    ids(&[
        "so(3)", "so(2,1)", "e(2)", "e(1,1)", "h3", "R3", "r2+R", "r3", "r3mu^{-1/2}", "r3mu^{-1/3}", "r3mu^{-1/4}", "r3mu^{1/2}",
        "r3mu^{1}", "r3'mu^{1/2}", "r3'mu^{1}", "r3'mu^{2}",
    ])
}

pub fn grid_4d() -> Vec<AlgebraId> {
    ids(&[
        "so(3)+R",
        "so(2,1)+R",
        "e(2)+R",
        "e(1,1)+R",
        "h3+R",
        "R4",
        "A_{4,1}",
        "A_{4,2}^{-2}",
        "A_{4,2}^{-1}",
        "A_{4,2}^{1/2}",
        "A_{4,2}^{2}",
        "A_{4,2}^{-3}",
        "A_{4,5}^{-1/2,-1/2}",
        "A_{4,5}^{-2/3,-1/3}",
        "A_{4,5}^{-3/4,-1/4}",
        "A_{4,5}^{1/2,1}",
        "A_{4,5}^{-1/2,1/3}",
        "A_{4,5}^{-1,1/2}",
        "A_{4,5}^{-1,1}",
        "A_{4,6}^{1,-1/2}",
        "A_{4,6}^{2,-1}",
        "A_{4,6}^{1,1}",
        "A_{4,6}^{1,0}",
        "A_{4,6}^{2,1/2}",
        "A_{4,8}",
        "A_{4,10}",
        "r2+R2",
        "r3+R",
        "r3mu^{-1/2}+R",
        "r3mu^{1/2}+R",
        "r3mu^{1}+R",
        "r3'mu^{1}+R",
        "A_{4,3}",
        "A_{4,4}",
        "A_{4,7}",
        "A_{4,9}^{-1/2}",
        "A_{4,9}^{0}",
        "A_{4,9}^{1}",
        "A_{4,9}^{1/2}",
        "A_{4,9}^{-1/3}",
        "A_{4,9}^{-2/3}",
        "A_{4,9}^{-1/4}",
        "A_{4,11}^{1}",
        "A_{4,11}^{1/2}",
        "A_{4,12}",
        "r2+r2",
    ])
}

pub fn sweep_pairs() -> Vec<(AlgebraId, AlgebraId)> {
    let g3 = grid_3d();
    grid_4d().into_iter().flat_map(|a| g3.iter().map(move |b| (a.clone(), b.clone()))).collect()
}

// ---------------------------------------------------------------- exceptional bases

/// An adapted coframe, possibly with coefficients in `Q(√d)`.
#[derive(Clone, Debug)]
pub struct ExceptionalBasis {
    pub g4: AlgebraId,
    pub g3: AlgebraId,
    pub coframe: Vec<KForm<QuadQ>>,
}

fn qq(a: Q, b: Q, d: u64) -> QuadQ {
    QuadQ::new(a, b, d)
}

fn lin(terms: &[(usize, QuadQ)]) -> KForm<QuadQ> {
    let mut f = KForm::zero(7, 1);
    for (i, c) in terms {
        f = &f + &KForm::monomial(7, &[*i], c.clone()).unwrap();
    }
    f
}

/// The three exceptional pairs with an explicit adapted coframe.
pub fn exceptional_bases() -> Vec<ExceptionalBasis> {
    let r = |x: Q| QuadQ::rational(x);
    let one = || r(q(1));
    // A_{4,8} ⊕ e(1,1)
    let row1 = [5, 6, 7, 4, 2, 3, 1].iter().map(|&i| lin(&[(i, one())])).collect();
    // A_{4,12} ⊕ r_{3,1}, in Q(√5)
    let s5 = |c: Q| qq(Q::zero(), c, 5);
    let row2 = vec![
        lin(&[(1, s5(qf(-1, 3)))]),
        lin(&[(4, s5(q(1)))]),
        lin(&[(2, one()), (5, s5(qf(-4, 5)))]),
        lin(&[(3, one()), (6, s5(qf(2, 5)))]),
        lin(&[(5, one())]),
        lin(&[(6, one())]),
        lin(&[(7, one())]),
    ];
    // r2⊕r2 ⊕ r_{3,1}, in Q(√10): 1/(2√10) = √10/20, 1/(3√10) = √10/30, 9/√10 = 9√10/10
    let s10 = |c: Q| qq(Q::zero(), c, 10);
    let row3 = vec![
        lin(&[(2, one()), (5, r(qf(13, 9)))]),
        lin(&[(5, one())]),
        lin(&[(3, one()), (6, r(q(3)))]),
        lin(&[(6, one())]),
        lin(&[(7, s10(qf(1, 20)))]),
        lin(&[(4, s10(qf(1, 30)))]),
        lin(&[(1, s10(qf(9, 10)))]),
    ];
    let r31 = AlgebraId::new(Family::R3Mu, vec![q(1)]).unwrap();
    vec![
        ExceptionalBasis { g4: AlgebraId::plain(Family::A48), g3: AlgebraId::plain(Family::E11), coframe: row1 },
        ExceptionalBasis { g4: AlgebraId::plain(Family::A412), g3: r31.clone(), coframe: row2 },
        ExceptionalBasis { g4: AlgebraId::plain(Family::R2xR2), g3: r31, coframe: row3 },
    ]
}

pub fn exceptional_basis(g4: &AlgebraId, g3: &AlgebraId) -> Result<ExceptionalBasis> {
    exceptional_bases()
        .into_iter()
        .find(|b| &b.g4 == g4 && &b.g3 == g3)
        .ok_or_else(|| Error::Other(format!("no exceptional basis listed for {g4}+{g3}")))
}

/// Parameter comparison helper used by the classifier.
pub fn in_half_open(x: &Q, lo: &Q, hi: &Q, lo_closed: bool, hi_closed: bool) -> bool {
    let lo_ok = if lo_closed { x >= lo } else { x > lo };
    let hi_ok = if hi_closed { x <= hi } else { x < hi };
    lo_ok && hi_ok
}

pub fn sign(x: &Q) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let id = parse("A_{4,9}^{-1/2}").unwrap();
        assert_eq!(id.family, Family::A49);
        assert_eq!(id.params, vec![qf(-1, 2)]);
        let (a, b) = parse_pair("A_{4,8}+e(1,1)").unwrap();
        assert_eq!((a.family, b.family), (Family::A48, Family::E11));
        assert!(matches!(parse("A_{4,5}^{0,1}"), Err(Error::Range(_))));
        assert!(matches!(parse("r3mu^0"), Err(Error::Range(_))));
        assert!(matches!(parse("nonsense"), Err(Error::UnknownFamily(_))));
        let (a, b) = parse_pair("r2+r2+r_{3,1}").unwrap();
        assert_eq!((a.family, b.family, b.params.clone()), (Family::R2xR2, Family::R3Mu, vec![q(1)]));
        let (a, b) = parse_pair("r3mu^{1/2}+R+r2+R").unwrap();
        assert_eq!((a.family, b.family), (Family::R3MuR, Family::R2R));
        let (a, b) = parse_pair("h3+R+h3").unwrap();
        assert_eq!((a.family, b.family), (Family::H3R, Family::H3));
    }

    #[test]
    fn display_roundtrip() {
        for id in grid_4d().into_iter().chain(grid_3d()) {
            assert_eq!(parse(&id.to_string()).unwrap(), id, "{id}");
        }
    }

    #[test]
    fn instantiate_examples() {
        let g = parse("A_{4,12}").unwrap().instantiate().unwrap();
        assert_eq!(g.d[0], &KForm::e(4, &[1, 4]) + &KForm::e(4, &[2, 3]));
        assert_eq!(g.d[1], &KForm::e(4, &[2, 4]) - &KForm::e(4, &[1, 3]));
        let so3 = parse("so(3)").unwrap().instantiate().unwrap();
        assert_eq!(so3.d[1], -&KForm::e(3, &[1, 3]));
    }

    #[test]
    fn fixtures_match_tables() {
        use crate::lie::classify_3d;
        for fx in fixtures_3d().iter().chain(fixtures_4d().iter()) {
            let g = parse(&fx.id).unwrap().instantiate().unwrap();
            assert_eq!(g.cohomology(), fx.cohomology, "{}", fx.id);
            assert_eq!(g.unimodular(), fx.unimodular, "{}", fx.id);
            assert_eq!(g.commutator_dim(), fx.commutator_dim, "{}", fx.id);
            if g.dim == 4 && !fx.unimodular {
                let k = g.unimodular_kernel().unwrap();
                assert_eq!(classify_3d(&k.algebra).unwrap().name(), fx.kernel[0], "{}", fx.id);
                let last = g.betti(1) as i64 + k.algebra.betti(1) as i64 - g.betti(2) as i64;
                assert_eq!(last, fx.kernel_quantity[0], "{}", fx.id);
            }
        }
    }
}
