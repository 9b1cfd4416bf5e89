//! Modular S-matrices at a fixed level, Verlinde dimensions of
//! conformal-block spaces, factorization-rule checks, and level-one
//! strange-duality dimension comparisons.

use num::{BigInt, BigRational, ToPrimitive};
use num_complex::Complex64;

use crate::affine::{self, expand_orbits, finite_dominant_weights, LevelWeight};
use crate::config::{Precision, RunConfig};
use crate::error::{Error, Result};
use crate::rootsys::RootSystem;

const UNITARITY_TOL: f64 = 1e-9;
const INTEGER_TOL: f64 = 1e-6;

/// Evaluate sin and cos of pi times an exact rational, either in double
/// precision or through a configurable-precision intermediate.
#[derive(Clone, Copy)]
enum Eval {
    Double,
    High(u32),
}

impl Eval {
    fn new(p: Precision) -> Eval {
        match p {
            Precision::Double => Eval::Double,
            Precision::High(digits) => Eval::High(digits.max(15)),
        }
    }

    /// sin(pi * r)
    fn sin_pi(&self, r: &BigRational) -> f64 {
        self.trig_pi(r).1
    }

    /// (cos(pi * r), sin(pi * r))
    fn trig_pi(&self, r: &BigRational) -> (f64, f64) {
        // reduce modulo 2 so the float argument stays small
        let two = BigRational::from_integer(BigInt::from(2));
        let reduced = r - (r / &two).floor() * &two;
        match *self {
            Eval::Double => {
                let x = std::f64::consts::PI * reduced.to_f64().expect("small rational");
                (x.cos(), x.sin())
            }
            Eval::High(digits) => {
                use astro_float::{BigFloat, Consts, RoundingMode};
                let prec = (digits as usize) * 4 + 64;
                let rm = RoundingMode::ToEven;
                let mut cc = Consts::new().expect("constants cache");
                let pi = cc.pi(prec, rm);
                let num = BigFloat::parse(
                    &reduced.numer().to_string(),
                    astro_float::Radix::Dec,
                    prec,
                    rm,
                    &mut cc,
                );
                let den = BigFloat::parse(
                    &reduced.denom().to_string(),
                    astro_float::Radix::Dec,
                    prec,
                    rm,
                    &mut cc,
                );
                let x = num.mul(&pi, prec, rm).div(&den, prec, rm);
                let c = x.cos(prec, rm, &mut cc);
                let s = x.sin(prec, rm, &mut cc);
                (big_to_f64(&c), big_to_f64(&s))
            }
        }
    }
}

fn big_to_f64(x: &astro_float::BigFloat) -> f64 {
    // round-trip through a 17-significant-digit decimal string
    let s = format!("{x}");
    s.parse().unwrap_or(0.0)
}

/// Modular S-matrix on the level-k alcove.
#[derive(Debug, Clone)]
pub struct SMatrix {
    pub level: Vec<i64>,
    pub alcove: Vec<LevelWeight>,
    pub entries: Vec<Vec<Complex64>>,
}

impl SMatrix {
    pub fn index_of(&self, lw: &LevelWeight) -> Result<usize> {
        self.alcove.iter().position(|x| x == lw).ok_or_else(|| {
            Error::OutsideAlcove {
                labels: lw.weight.0.clone(),
                level: self.level.clone(),
            }
        })
    }
}

/// Build the S-matrix from the sine-product vacuum row and character
/// evaluations at the alcove points.
pub fn s_matrix(rs: &RootSystem, k: &[i64], config: &RunConfig) -> Result<SMatrix> {
    let eval = Eval::new(config.precision);
    let alcove = affine::alcove(rs, k)?;
    if alcove.len() > config.max_alcove {
        return Err(Error::AlcoveTooLarge { size: alcove.len(), bound: config.max_alcove });
    }
    let den = BigInt::from(rs.form_den);
    // component of each positive root and the matching k + h_vee
    let kh: Vec<i64> = (0..rs.num_components())
        .map(|c| k[c] + rs.dual_coxeter()[c])
        .collect();
    let root_comp: Vec<usize> = rs
        .positive_root_coords
        .iter()
        .map(|coords| {
            rs.component_ranges
                .iter()
                .position(|&(s, e)| coords[s..e].iter().any(|&x| x != 0))
                .expect("root lies in one component")
        })
        .collect();

    // phase (nu, mu)_twisted = sum over components of (nu, mu)_c/(k+h)_c
    let phase = |nu: &[i64], mu: &[i64]| -> BigRational {
        let mut r = BigRational::from_integer(BigInt::from(0));
        for (c, &(s, e)) in rs.component_ranges.iter().enumerate() {
            let mut nu_c = vec![0i64; rs.rank];
            nu_c[s..e].copy_from_slice(&nu[s..e]);
            let ip = rs.inner_scaled(&nu_c, mu);
            r += BigRational::new(BigInt::from(ip), &den * BigInt::from(kh[c]));
        }
        r
    };

    // vacuum row by the sine product
    let mut vacuum: Vec<f64> = Vec::with_capacity(alcove.len());
    for mu in &alcove {
        let murho: Vec<i64> = mu.weight.0.iter().map(|&x| x + 1).collect();
        let mut v = 1.0f64;
        for (alpha, &c) in rs.positive_roots.iter().zip(&root_comp) {
            let r = BigRational::new(
                BigInt::from(rs.inner_scaled(&murho, &alpha.0)),
                &den * BigInt::from(kh[c]),
            );
            v *= eval.sin_pi(&r);
        }
        vacuum.push(v);
    }
    let norm = vacuum.iter().map(|v| v * v).sum::<f64>().sqrt();
    let vacuum: Vec<f64> = vacuum.into_iter().map(|v| v / norm).collect();
    if let Some(bad) = vacuum.iter().find(|&&v| v <= 0.0) {
        return Err(Error::SMatrixNumeric {
            what: "vacuum-row positivity",
            deviation: -bad,
            tol: 0.0,
        });
    }

    let mut entries = vec![vec![Complex64::new(0.0, 0.0); alcove.len()]; alcove.len()];
    for (li, lam) in alcove.iter().enumerate() {
        let weights = expand_orbits(
            rs,
            &finite_dominant_weights(rs, &lam.weight)?,
            config.max_character_entries,
        )?;
        for (mi, mu) in alcove.iter().enumerate() {
            let murho: Vec<i64> = mu.weight.0.iter().map(|&x| x + 1).collect();
            let mut acc = Complex64::new(0.0, 0.0);
            for (nu, &mult) in &weights {
                // exp(-2 pi i (nu, mu + rho)/(k + h))
                let r = phase(&nu.0, &murho) * BigRational::from_integer(BigInt::from(-2));
                let (c, s) = eval.trig_pi(&r);
                acc += (mult as f64) * Complex64::new(c, s);
            }
            entries[li][mi] = vacuum[mi] * acc;
        }
    }

    let s = SMatrix { level: k.to_vec(), alcove, entries };
    validate_s_matrix(&s)?;
    Ok(s)
}

fn validate_s_matrix(s: &SMatrix) -> Result<()> {
    let n = s.alcove.len();
    let mut dev_sym = 0.0f64;
    let mut dev_uni = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            dev_sym = dev_sym.max((s.entries[i][j] - s.entries[j][i]).norm());
            let mut acc = Complex64::new(0.0, 0.0);
            for l in 0..n {
                acc += s.entries[i][l] * s.entries[j][l].conj();
            }
            let target = if i == j { 1.0 } else { 0.0 };
            dev_uni = dev_uni.max((acc - target).norm());
        }
    }
    if dev_sym > UNITARITY_TOL {
        return Err(Error::SMatrixNumeric {
            what: "symmetry",
            deviation: dev_sym,
            tol: UNITARITY_TOL,
        });
    }
    if dev_uni > UNITARITY_TOL {
        return Err(Error::SMatrixNumeric {
            what: "unitarity",
            deviation: dev_uni,
            tol: UNITARITY_TOL,
        });
    }
    Ok(())
}

/// Verlinde dimension at genus g with marked points labelled by `labels`.
pub fn fusion_dim(s: &SMatrix, genus: u32, labels: &[LevelWeight]) -> Result<u64> {
    let idx: Vec<usize> = labels
        .iter()
        .map(|l| s.index_of(l))
        .collect::<Result<_>>()?;
    let mut acc = Complex64::new(0.0, 0.0);
    for (mi, _) in s.alcove.iter().enumerate() {
        let s0 = s.entries[0][mi];
        // S_{0 mu}^{2 - 2g - #labels} * prod_i S_{lambda_i mu}
        let mut term = Complex64::new(1.0, 0.0);
        for &li in &idx {
            term *= s.entries[li][mi];
        }
        let e = 2.0 - 2.0 * (genus as f64) - idx.len() as f64;
        term *= s0.powf(e);
        acc += term;
    }
    if acc.im.abs() > INTEGER_TOL || (acc.re - acc.re.round()).abs() > INTEGER_TOL {
        return Err(Error::NonIntegerDimension {
            value: format!("{}", acc),
            tol: INTEGER_TOL,
        });
    }
    let v = acc.re.round();
    if v < 0.0 {
        return Err(Error::NonIntegerDimension { value: format!("{acc}"), tol: INTEGER_TOL });
    }
    Ok(v as u64)
}

/// Both sides of the genus-recursion identity at genus g.
#[derive(Debug, Clone)]
pub struct FactorizationReport {
    pub lhs: u64,
    pub rhs: u64,
    pub terms: Vec<(LevelWeight, u64)>,
    pub holds: bool,
}

/// Check dim(genus g, labels) = sum over the alcove of
/// dim(genus g-1, labels + {lambda, lambda^dagger}).
pub fn factorization_check(
    rs: &RootSystem,
    s: &SMatrix,
    genus: u32,
    labels: &[LevelWeight],
) -> Result<FactorizationReport> {
    assert!(genus >= 1, "factorization needs genus >= 1");
    let lhs = fusion_dim(s, genus, labels)?;
    let mut rhs = 0u64;
    let mut terms = Vec::new();
    for lam in &s.alcove {
        let dag = LevelWeight {
            weight: rs.dagger(&lam.weight),
            level: lam.level.clone(),
        };
        let mut ext = labels.to_vec();
        ext.push(lam.clone());
        ext.push(dag);
        let d = fusion_dim(s, genus - 1, &ext)?;
        rhs += d;
        terms.push((lam.clone(), d));
    }
    Ok(FactorizationReport { lhs, rhs, terms, holds: lhs == rhs })
}

/// Named level-one strange-duality pairs.
pub const DUALITY_PAIRS: [(&str, &str, &str); 5] = [
    ("SL5", "A4", "A4"),
    ("SL3", "A2", "E6"),
    ("SL2", "A1", "E7"),
    ("Spin8", "D4", "D4"),
    ("G2", "G2", "F4"),
];

#[derive(Debug, Clone)]
pub struct DualityReport {
    pub pair: String,
    pub genus: u32,
    pub dim_a: u64,
    pub dim_b: u64,
    pub equal: bool,
    /// Closed-form prediction, only for the G2/F4 pair.
    pub closed_form: Option<f64>,
}

/// Compare level-one Verlinde dimensions across a strange-duality pair.
pub fn strange_duality_dims(pair: &str, genus: u32, config: &RunConfig) -> Result<DualityReport> {
    let (a_sys, b_sys) = resolve_pair(pair)?;
    let dim = |name: &str| -> Result<u64> {
        let rs = RootSystem::parse(name)?;
        let k = vec![1i64; rs.num_components()];
        let s = s_matrix(&rs, &k, config)?;
        fusion_dim(&s, genus, &[])
    };
    let dim_a = dim(&a_sys)?;
    let dim_b = dim(&b_sys)?;
    let closed_form = if a_sys == "G2" {
        let phi_p = (5.0 + 5.0f64.sqrt()) / 2.0;
        let phi_m = (5.0 - 5.0f64.sqrt()) / 2.0;
        let e = genus as i32 - 1;
        Some(phi_p.powi(e) + phi_m.powi(e))
    } else {
        None
    };
    if let Some(cf) = closed_form {
        if (cf - dim_a as f64).abs() > INTEGER_TOL {
            return Err(Error::NonIntegerDimension {
                value: format!("{cf} vs {dim_a}"),
                tol: INTEGER_TOL,
            });
        }
    }
    Ok(DualityReport {
        pair: pair.to_string(),
        genus,
        dim_a,
        dim_b,
        equal: dim_a == dim_b,
        closed_form,
    })
}

fn resolve_pair(pair: &str) -> Result<(String, String)> {
    let norm = pair.replace([' '], "");
    let parts: Vec<&str> = norm.split(':').collect();
    if parts.len() != 2 {
        return Err(Error::UnknownPair(pair.to_string()));
    }
    for (group, a, b) in DUALITY_PAIRS {
        let names = [
            (group.to_string(), partner_name(group)),
        ];
        for (ga, gb) in names {
            if parts[0].eq_ignore_ascii_case(&ga) && parts[1].eq_ignore_ascii_case(&gb) {
                return Ok((a.to_string(), b.to_string()));
            }
        }
        // also accept root-system names directly, e.g. "A2:E6"
        if parts[0].eq_ignore_ascii_case(a) && parts[1].eq_ignore_ascii_case(b) {
            return Ok((a.to_string(), b.to_string()));
        }
    }
    Err(Error::UnknownPair(pair.to_string()))
}

fn partner_name(group: &str) -> String {
    match group {
        "SL5" => "SL5",
        "SL3" => "E6",
        "SL2" => "E7",
        "Spin8" => "Spin8",
        "G2" => "F4",
        other => other,
    }
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::parse(s).unwrap()
    }

    fn sm(name: &str, k: i64) -> (RootSystem, SMatrix) {
        let r = rs(name);
        let levels = vec![k; r.num_components()];
        let s = s_matrix(&r, &levels, &RunConfig::default()).unwrap();
        (r, s)
    }

    #[test]
    fn a1_level_one_closed_form() {
        let (_, s) = sm("A1", 1);
        let v = 1.0 / 2.0f64.sqrt();
        let want = [[v, v], [v, -v]];
        for i in 0..2 {
            for j in 0..2 {
                assert!((s.entries[i][j] - want[i][j]).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn a1_level_two_vacuum_entry() {
        let (_, s) = sm("A1", 2);
        assert_eq!(s.alcove.len(), 3);
        assert!((s.entries[0][0].re - 0.5).abs() < 1e-12);
    }

    #[test]
    fn a1_general_closed_form() {
        // S_ab = sqrt(2/(k+2)) sin(pi (a+1)(b+1)/(k+2))
        for k in 1..=5i64 {
            let (_, s) = sm("A1", k);
            let n = (k + 2) as f64;
            for a in 0..=k as usize {
                for b in 0..=k as usize {
                    let want = (2.0 / n).sqrt()
                        * (std::f64::consts::PI * ((a + 1) * (b + 1)) as f64 / n).sin();
                    assert!((s.entries[a][b].re - want).abs() < 1e-10, "k={k} {a}{b}");
                    assert!(s.entries[a][b].im.abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn e8_level_one_singleton() {
        let (_, s) = sm("E8", 1);
        assert_eq!(s.alcove.len(), 1);
        assert!((s.entries[0][0] - 1.0).norm() < 1e-9);
    }

    #[test]
    fn s_squared_is_charge_conjugation() {
        for name in ["A4", "E6", "D4", "A2+A2"] {
            let (r, s) = sm(name, 1);
            let n = s.alcove.len();
            for i in 0..n {
                let dag = LevelWeight {
                    weight: r.dagger(&s.alcove[i].weight),
                    level: s.alcove[i].level.clone(),
                };
                let di = s.index_of(&dag).unwrap();
                for j in 0..n {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for l in 0..n {
                        acc += s.entries[i][l] * s.entries[l][j];
                    }
                    let target = if j == di { 1.0 } else { 0.0 };
                    assert!((acc - target).norm() < 1e-9, "{name} {i}{j}");
                }
            }
        }
    }

    #[test]
    fn table_of_level_one_dimensions() {
        for g in 0..=4u32 {
            for n in 2..=9usize {
                let (_, s) = sm(&format!("A{}", n - 1), 1);
                assert_eq!(
                    fusion_dim(&s, g, &[]).unwrap(),
                    (n as u64).pow(g),
                    "A{} g={g}",
                    n - 1
                );
            }
            for (name, base) in [("D8", 4u64), ("D4", 4), ("E6", 3), ("E7", 2), ("E8", 1)] {
                let (_, s) = sm(name, 1);
                assert_eq!(fusion_dim(&s, g, &[]).unwrap(), base.pow(g), "{name} g={g}");
            }
        }
    }

    #[test]
    fn ade_vacuum_dim_is_center_order_power() {
        for name in ["A1", "A2", "A4", "D4", "D8", "E6", "E7", "E8"] {
            let (_, s) = sm(name, 1);
            let z = s.alcove.len() as u64;
            for g in 0..=3 {
                assert_eq!(fusion_dim(&s, g, &[]).unwrap(), z.pow(g), "{name}");
            }
        }
    }

    #[test]
    fn g2_level_one_genus_two() {
        let (_, s) = sm("G2", 1);
        assert_eq!(s.alcove.len(), 2);
        assert_eq!(fusion_dim(&s, 2, &[]).unwrap(), 5);
    }

    #[test]
    fn genus_zero_single_label() {
        let (r, s) = sm("A2", 1);
        let zero = LevelWeight::vacuum(&r, vec![1]).unwrap();
        assert_eq!(fusion_dim(&s, 0, &[zero]).unwrap(), 1);
        let w = s.alcove[1].clone();
        assert!(!w.weight.is_zero());
        assert_eq!(fusion_dim(&s, 0, &[w]).unwrap(), 0);
    }

    #[test]
    fn fusion_invariant_under_dagger() {
        let (r, s) = sm("A4", 1);
        let labels = vec![s.alcove[1].clone(), s.alcove[2].clone()];
        let dagged: Vec<LevelWeight> = labels
            .iter()
            .map(|l| LevelWeight { weight: r.dagger(&l.weight), level: l.level.clone() })
            .collect();
        for g in 0..=2 {
            assert_eq!(
                fusion_dim(&s, g, &labels).unwrap(),
                fusion_dim(&s, g, &dagged).unwrap()
            );
        }
    }

    #[test]
    fn factorization_examples() {
        let (r, s) = sm("A1", 1);
        let rep = factorization_check(&r, &s, 2, &[]).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.lhs, 4);
        assert_eq!(rep.terms.iter().map(|t| t.1).collect::<Vec<_>>(), vec![2, 2]);

        let (r, s) = sm("A2", 1);
        let rep = factorization_check(&r, &s, 2, &[]).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.lhs, 9);
        assert_eq!(rep.terms.iter().map(|t| t.1).collect::<Vec<_>>(), vec![3, 3, 3]);

        let (r, s) = sm("E8", 1);
        let rep = factorization_check(&r, &s, 3, &[]).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.lhs, 1);
    }

    #[test]
    fn strange_duality_reports() {
        let cfg = RunConfig::default();
        for g in 0..=4u32 {
            for pair in ["SL5:SL5", "SL3:E6", "SL2:E7", "Spin8:Spin8", "G2:F4"] {
                let rep = strange_duality_dims(pair, g, &cfg).unwrap();
                assert!(rep.equal, "{pair} g={g}: {} vs {}", rep.dim_a, rep.dim_b);
            }
        }
        let rep = strange_duality_dims("SL3:E6", 3, &cfg).unwrap();
        assert_eq!((rep.dim_a, rep.dim_b), (27, 27));
        let rep = strange_duality_dims("SL2:E7", 1, &cfg).unwrap();
        assert_eq!((rep.dim_a, rep.dim_b), (2, 2));
        let rep = strange_duality_dims("G2:F4", 1, &cfg).unwrap();
        assert_eq!((rep.dim_a, rep.dim_b), (2, 2));
        assert!((rep.closed_form.unwrap() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn unknown_pair_rejected() {
        assert!(strange_duality_dims("SL4:SL4", 1, &RunConfig::default()).is_err());
    }

    #[test]
    fn high_precision_matches_double() {
        let r = rs("G2");
        let mut cfg = RunConfig::default();
        let s_d = s_matrix(&r, &[1], &cfg).unwrap();
        cfg.precision = Precision::High(30);
        let s_h = s_matrix(&r, &[1], &cfg).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!((s_d.entries[i][j] - s_h.entries[i][j]).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn alcove_bound_enforced() {
        let r = rs("A1");
        let mut cfg = RunConfig::default();
        cfg.max_alcove = 2;
        assert!(matches!(
            s_matrix(&r, &[5], &cfg),
            Err(Error::AlcoveTooLarge { .. })
        ));
    }
}
