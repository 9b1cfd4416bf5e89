//! Level-k alcoves, conformal and trace anomalies, and truncated graded
//! characters of integrable highest-weight modules, computed by an affine
//! Freudenthal recursion in exact integer arithmetic.

use std::collections::{BTreeMap, HashMap};

use num::{BigInt, BigRational};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// A dominant weight together with the level(s) it lives at.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct LevelWeight {
    pub weight: Weight,
    /// One level per component.
    pub level: Vec<i64>,
}

impl LevelWeight {
    pub fn new(rs: &RootSystem, weight: Weight, level: Vec<i64>) -> Result<Self> {
        if weight.0.len() != rs.rank {
            return Err(Error::RankMismatch { got: weight.0.len(), want: rs.rank });
        }
        if level.len() != rs.num_components() {
            return Err(Error::RankMismatch { got: level.len(), want: rs.num_components() });
        }
        if let Some(&k) = level.iter().find(|&&k| k < 0) {
            return Err(Error::NegativeLevel(k));
        }
        if !rs.is_dominant(&weight) {
            return Err(Error::NotDominant(weight.0));
        }
        for c in 0..rs.num_components() {
            if rs.level_of(&weight.0, c) > level[c] {
                return Err(Error::OutsideAlcove { labels: weight.0, level });
            }
        }
        Ok(LevelWeight { weight, level })
    }

    pub fn vacuum(rs: &RootSystem, level: Vec<i64>) -> Result<Self> {
        LevelWeight::new(rs, Weight::zero(rs.rank), level)
    }
}

/// An affine dominant weight: base weight at its level, sitting `shift`
/// steps down the delta-grading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineWeight {
    pub base: LevelWeight,
    pub shift: u64,
}

/// Weight multiplicities of an integrable module, grade by grade up to a
/// cutoff.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedCharacter {
    pub cutoff: usize,
    pub grades: Vec<BTreeMap<Weight, i64>>,
}

impl GradedCharacter {
    pub fn grade_dim(&self, m: usize) -> i64 {
        self.grades[m].values().sum()
    }

    pub fn to_json(&self) -> Value {
        let grades: Vec<Value> = self
            .grades
            .iter()
            .map(|g| {
                let entries: Vec<Value> = g
                    .iter()
                    .map(|(w, &m)| {
                        let labels: Vec<String> =
                            w.0.iter().map(|x| x.to_string()).collect();
                        json!([labels.join(","), m])
                    })
                    .collect();
                Value::Array(entries)
            })
            .collect();
        json!({"cutoff": self.cutoff, "grades": grades})
    }

    pub fn from_json(v: &Value) -> Result<GradedCharacter> {
        let cutoff = v
            .get("cutoff")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::InvalidData("missing cutoff".into()))? as usize;
        let grades_v = v
            .get("grades")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::InvalidData("missing grades".into()))?;
        let mut grades = Vec::with_capacity(grades_v.len());
        for g in grades_v {
            let mut map = BTreeMap::new();
            for entry in g
                .as_array()
                .ok_or_else(|| Error::InvalidData("grade is not an array".into()))?
            {
                let pair = entry
                    .as_array()
                    .filter(|p| p.len() == 2)
                    .ok_or_else(|| Error::InvalidData("bad grade entry".into()))?;
                let labels_s = pair[0]
                    .as_str()
                    .ok_or_else(|| Error::InvalidData("labels must be a string".into()))?;
                let labels: std::result::Result<Vec<i64>, _> =
                    labels_s.split(',').map(|t| t.trim().parse()).collect();
                let labels =
                    labels.map_err(|_| Error::InvalidData("bad label".into()))?;
                let mult = pair[1]
                    .as_i64()
                    .filter(|&m| m > 0)
                    .ok_or_else(|| Error::InvalidData("bad multiplicity".into()))?;
                map.insert(Weight(labels), mult);
            }
            grades.push(map);
        }
        if grades.len() != cutoff + 1 {
            return Err(Error::InvalidData("grade count does not match cutoff".into()));
        }
        Ok(GradedCharacter { cutoff, grades })
    }
}

/// Enumerate the level-k alcove P_k, sorted lexicographically by labels.
pub fn alcove(rs: &RootSystem, k: &[i64]) -> Result<Vec<LevelWeight>> {
    if let Some(&kc) = k.iter().find(|&&kc| kc < 0) {
        return Err(Error::NegativeLevel(kc));
    }
    if k.len() != rs.num_components() {
        return Err(Error::RankMismatch { got: k.len(), want: rs.num_components() });
    }
    let mut labels = vec![0i64; rs.rank];
    let mut out = Vec::new();
    fn rec(
        rs: &RootSystem,
        k: &[i64],
        labels: &mut Vec<i64>,
        pos: usize,
        out: &mut Vec<Vec<i64>>,
    ) {
        if pos == rs.rank {
            out.push(labels.clone());
            return;
        }
        let comp = rs
            .component_ranges
            .iter()
            .position(|&(s, e)| pos >= s && pos < e)
            .unwrap();
        let used: i64 = (rs.component_ranges[comp].0..pos)
            .map(|i| labels[i] * rs.comarks[i])
            .sum();
        let budget = k[comp] - used;
        let step = rs.comarks[pos];
        let mut v = 0;
        while v * step <= budget {
            labels[pos] = v;
            rec(rs, k, labels, pos + 1, out);
            v += 1;
        }
        labels[pos] = 0;
    }
    let mut raw = Vec::new();
    rec(rs, k, &mut labels, 0, &mut raw);
    raw.sort();
    for l in raw {
        out.push(LevelWeight { weight: Weight(l), level: k.to_vec() });
    }
    Ok(out)
}

/// c(g,k) = sum over components of k dim / (h_vee + k), exact.
pub fn conformal_anomaly(rs: &RootSystem, k: &[i64]) -> Result<BigRational> {
    if let Some(&kc) = k.iter().find(|&&kc| kc < 0) {
        return Err(Error::NegativeLevel(kc));
    }
    let mut c = BigRational::from_integer(BigInt::from(0));
    for comp in 0..rs.num_components() {
        let dim = rs.component_dimension(comp) as i64;
        let h = rs.dual_coxeter()[comp];
        c += BigRational::new(BigInt::from(k[comp] * dim), BigInt::from(h + k[comp]));
    }
    Ok(c)
}

/// Trace anomaly Delta_lambda = sum over components of
/// (lambda, lambda + 2 rho) / (2 (h_vee + k)), exact.
pub fn trace_anomaly(rs: &RootSystem, lw: &LevelWeight) -> Result<BigRational> {
    let mut delta = BigRational::from_integer(BigInt::from(0));
    for comp in 0..rs.num_components() {
        let (s, e) = rs.component_ranges[comp];
        let lam = rs.component_weight(comp, &lw.weight.0[s..e]);
        let mut shifted = lam.0.clone();
        for i in s..e {
            shifted[i] += 2;
        }
        let num = rs.inner_scaled(&lam.0, &shifted);
        let h = rs.dual_coxeter()[comp];
        delta += BigRational::new(
            BigInt::from(num),
            BigInt::from(2 * i128::from(rs.form_den) * i128::from(h + lw.level[comp])),
        );
    }
    Ok(delta)
}

/// Trace anomaly of an affine weight: Delta of the base minus the shift.
pub fn trace_anomaly_affine(rs: &RootSystem, aw: &AffineWeight) -> Result<BigRational> {
    Ok(trace_anomaly(rs, &aw.base)? - BigRational::from_integer(BigInt::from(aw.shift)))
}

/// Dominant-weight multiplicity tables per grade for a simple system.
/// Grade 0 is the weight system of the finite irreducible V_lambda.
fn dominant_slices_simple(
    rs: &RootSystem,
    lambda: &[i64],
    k: i64,
    cutoff: usize,
) -> Vec<HashMap<Vec<i64>, i64>> {
    debug_assert_eq!(rs.num_components(), 1);
    let rank = rs.rank;
    let den = i128::from(rs.form_den);
    let h = rs.dual_coxeter()[0];
    let lamrho: Vec<i64> = lambda.iter().map(|&x| x + 1).collect();
    let base = rs.inner_scaled(&lamrho, &lamrho);

    let mut slices: Vec<HashMap<Vec<i64>, i64>> = Vec::with_capacity(cutoff + 1);

    let lookup = |slices: &[HashMap<Vec<i64>, i64>],
                  current: &HashMap<Vec<i64>, i64>,
                  grade: usize,
                  cur_grade: usize,
                  labels: &[i64]|
     -> i64 {
        let rep = rs.to_dominant(&Weight(labels.to_vec())).weight;
        let table = if grade == cur_grade { current } else { &slices[grade] };
        *table.get(&rep.0).unwrap_or(&0)
    };

    for m in 0..=cutoff {
        let bound = base + 2 * (m as i128) * i128::from(k + h) * den;
        let mut cands = enumerate_dominant_bounded(rs, bound);
        // keep the coset lambda + Q and order by height of lambda - mu
        cands.retain_mut(|c| {
            let diff: Vec<i64> = lambda.iter().zip(&c.0).map(|(&a, &b)| a - b).collect();
            match rs.root_coordinates(&diff) {
                Some(coords) => {
                    c.1 = coords.iter().sum();
                    true
                }
                None => false,
            }
        });
        cands.sort_by_key(|c| (c.1, c.0.clone()));

        let mut slice: HashMap<Vec<i64>, i64> = HashMap::new();
        for (mu, _depth) in cands {
            if m == 0 && mu == lambda {
                slice.insert(mu.to_vec(), 1);
                continue;
            }
            let murho: Vec<i64> = mu.iter().map(|&x| x + 1).collect();
            let d = base - rs.inner_scaled(&murho, &murho)
                + 2 * (m as i128) * i128::from(k + h) * den;
            if d == 0 {
                continue;
            }
            let mut s: i128 = 0;
            // real roots at delta-height 0: positive alpha, ladder upward
            for alpha in &rs.positive_roots {
                let a = rs.inner_scaled(&alpha.0, &alpha.0);
                let b = 2 * rs.inner_scaled(&murho, &alpha.0);
                let c0 = rs.inner_scaled(&murho, &murho);
                let mut j: i128 = 1;
                loop {
                    // |mu + j alpha + rho|^2 for the termination test
                    let q = c0 + b * j + a * j * j;
                    if q > bound && 2 * a * j + a + b > 0 {
                        break;
                    }
                    if q <= bound {
                        let nu: Vec<i64> = mu
                            .iter()
                            .zip(&alpha.0)
                            .map(|(&x, &y)| x + (j as i64) * y)
                            .collect();
                        let mult = lookup(&slices, &slice, m, m, &nu);
                        if mult != 0 {
                            let term = rs.inner_scaled(&nu, &alpha.0);
                            s += term * i128::from(mult);
                        }
                    }
                    j += 1;
                }
            }
            // real roots at delta-height n >= 1: alpha runs over all roots
            for n in 1..=m {
                for alpha in &rs.positive_roots {
                    for sign in [1i64, -1] {
                        let mut j = 1usize;
                        while j * n <= m {
                            let nu: Vec<i64> = mu
                                .iter()
                                .zip(&alpha.0)
                                .map(|(&x, &y)| x + (j as i64) * sign * y)
                                .collect();
                            let mult = lookup(&slices, &slice, m - j * n, m, &nu);
                            if mult != 0 {
                                let term = rs.inner_scaled(&nu, &alpha.0)
                                    * i128::from(sign)
                                    + i128::from(n as i64) * i128::from(k) * den;
                                s += term * i128::from(mult);
                            }
                            j += 1;
                        }
                    }
                }
                // imaginary root n delta, multiplicity = rank
                let mut j = 1usize;
                while j * n <= m {
                    let mult = lookup(&slices, &slice, m - j * n, m, &mu);
                    if mult != 0 {
                        s += (rank as i128)
                            * i128::from(n as i64)
                            * i128::from(k)
                            * den
                            * i128::from(mult);
                    }
                    j += 1;
                }
            }
            let num = 2 * s;
            debug_assert!(num % d == 0, "Freudenthal numerator must divide");
            let mult = num / d;
            debug_assert!(mult >= 0);
            if mult > 0 {
                slice.insert(mu.to_vec(), mult as i64);
            }
        }
        slices.push(slice);
    }
    slices
}

/// All dominant weights mu with |mu + rho|^2 * form_den <= bound,
/// returned with a scratch i64 (later overwritten by the sort key).
fn enumerate_dominant_bounded(rs: &RootSystem, bound: i128) -> Vec<(Vec<i64>, i64)> {
    let rank = rs.rank;
    let mut out = Vec::new();
    let mut labels = vec![0i64; rank];
    fn rec(
        rs: &RootSystem,
        bound: i128,
        labels: &mut Vec<i64>,
        pos: usize,
        out: &mut Vec<(Vec<i64>, i64)>,
    ) {
        let shifted: Vec<i64> = labels.iter().map(|&x| x + 1).collect();
        if rs.inner_scaled(&shifted, &shifted) > bound {
            return;
        }
        if pos == labels.len() {
            out.push((labels.clone(), 0));
            return;
        }
        let mut v = 0i64;
        loop {
            labels[pos] = v;
            let shifted: Vec<i64> = labels.iter().map(|&x| x + 1).collect();
            if rs.inner_scaled(&shifted, &shifted) > bound {
                break;
            }
            rec(rs, bound, labels, pos + 1, out);
            v += 1;
        }
        labels[pos] = 0;
    }
    rec(rs, bound, &mut labels, 0, &mut out);
    // the recursion visits prefixes with trailing zeros twice; dedup
    out.sort();
    out.dedup();
    out
}

/// Dominant-weight multiplicities of the finite irreducible V_lambda.
pub fn finite_dominant_weights(
    rs: &RootSystem,
    lambda: &Weight,
) -> Result<BTreeMap<Weight, i64>> {
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
    out.insert(Weight::zero(0), 1);
    // build componentwise and take products
    let mut acc: Vec<(Vec<i64>, i64)> = vec![(Vec::new(), 1)];
    for comp in 0..rs.num_components() {
        let (s, e) = rs.component_ranges[comp];
        let sub = RootSystem::build(crate::rootsys::LieType {
            components: vec![rs.lie_type.components[comp]],
        })?;
        let lam_c = &lambda.0[s..e];
        let k = sub.level_of(lam_c, 0);
        let slices = dominant_slices_simple(&sub, lam_c, k, 0);
        let mut next = Vec::new();
        for (prefix, m0) in &acc {
            for (labels, m1) in &slices[0] {
                let mut full = prefix.clone();
                full.extend_from_slice(labels);
                next.push((full, m0 * m1));
            }
        }
        acc = next;
    }
    Ok(acc.into_iter().map(|(l, m)| (Weight(l), m)).collect())
}

/// Expand dominant multiplicities into the full Weyl-orbit weight system.
pub fn expand_orbits(
    rs: &RootSystem,
    dominant: &BTreeMap<Weight, i64>,
    cap: usize,
) -> Result<BTreeMap<Weight, i64>> {
    let mut out = BTreeMap::new();
    for (w, &m) in dominant {
        for o in rs.orbit(w, cap)? {
            out.insert(o, m);
        }
        if out.len() > cap {
            return Err(Error::OrbitCapExceeded { cap });
        }
    }
    Ok(out)
}

/// dim V_lambda by the Weyl dimension formula, exact.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<BigInt> {
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    let lamrho: Vec<i64> = lambda.0.iter().map(|&x| x + 1).collect();
    let rho = vec![1i64; rs.rank];
    for alpha in &rs.positive_roots {
        num *= BigInt::from(rs.inner_scaled(&lamrho, &alpha.0));
        den *= BigInt::from(rs.inner_scaled(&rho, &alpha.0));
    }
    let q = BigRational::new(num, den);
    debug_assert!(q.is_integer());
    Ok(q.to_integer())
}

/// Truncated graded character of the integrable module with highest weight
/// `lw`, up to grade `cutoff`. `budget` caps the total number of stored
/// (grade, weight) entries.
pub fn graded_character(
    rs: &RootSystem,
    lw: &LevelWeight,
    cutoff: usize,
    budget: usize,
) -> Result<GradedCharacter> {
    // componentwise characters, then a graded tensor product
    let mut comp_chars: Vec<Vec<BTreeMap<Weight, i64>>> = Vec::new();
    for comp in 0..rs.num_components() {
        let (s, e) = rs.component_ranges[comp];
        let sub = RootSystem::build(crate::rootsys::LieType {
            components: vec![rs.lie_type.components[comp]],
        })?;
        let lam_c = &lw.weight.0[s..e];
        let slices = dominant_slices_simple(&sub, lam_c, lw.level[comp], cutoff);
        let mut expanded = Vec::with_capacity(cutoff + 1);
        let mut total = 0usize;
        for (m, slice) in slices.iter().enumerate() {
            let dom: BTreeMap<Weight, i64> = slice
                .iter()
                .map(|(l, &v)| (Weight(l.clone()), v))
                .collect();
            let full = expand_orbits(&sub, &dom, budget).map_err(|e| match e {
                Error::OrbitCapExceeded { .. } => {
                    Error::CharacterBudget { budget, grade: m }
                }
                other => other,
            })?;
            total += full.len();
            if total > budget {
                return Err(Error::CharacterBudget { budget, grade: m });
            }
            expanded.push(full);
        }
        comp_chars.push(expanded);
    }
    // convolve grades across components
    let mut grades: Vec<BTreeMap<Weight, i64>> =
        vec![BTreeMap::new(); cutoff + 1];
    fn combine(
        comp_chars: &[Vec<BTreeMap<Weight, i64>>],
        idx: usize,
        grade_left: usize,
        prefix: Vec<i64>,
        mult: i64,
        used: usize,
        grades: &mut [BTreeMap<Weight, i64>],
        budget: usize,
        total: &mut usize,
    ) -> Result<()> {
        if idx == comp_chars.len() {
            let e = grades[used].entry(Weight(prefix)).or_insert(0);
            if *e == 0 {
                *total += 1;
                if *total > budget {
                    return Err(Error::CharacterBudget { budget, grade: used });
                }
            }
            *e += mult;
            return Ok(());
        }
        for m in 0..=grade_left {
            for (w, &v) in &comp_chars[idx][m] {
                let mut p = prefix.clone();
                p.extend_from_slice(&w.0);
                combine(
                    comp_chars,
                    idx + 1,
                    grade_left - m,
                    p,
                    mult * v,
                    used + m,
                    grades,
                    budget,
                    total,
                )?;
            }
        }
        Ok(())
    }
    let mut total = 0usize;
    combine(&comp_chars, 0, cutoff, Vec::new(), 1, 0, &mut grades, budget, &mut total)?;
    Ok(GradedCharacter { cutoff, grades })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;

    fn rs(s: &str) -> RootSystem {
        RootSystem::parse(s).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn alcove_examples() {
        let e8 = rs("E8");
        let a = alcove(&e8, &[1]).unwrap();
        assert_eq!(a.len(), 1);
        assert!(a[0].weight.is_zero());

        let a1 = rs("A1");
        let al = alcove(&a1, &[1]).unwrap();
        assert_eq!(
            al.iter().map(|l| l.weight.0.clone()).collect::<Vec<_>>(),
            vec![vec![0], vec![1]]
        );

        let al0 = alcove(&a1, &[0]).unwrap();
        assert_eq!(al0.len(), 1);

        assert!(alcove(&a1, &[-1]).is_err());
    }

    #[test]
    fn alcove_brute_force_a1() {
        // brute force over labels <= k for a rank-1 system
        let a1 = rs("A1");
        for k in 0..5i64 {
            let al = alcove(&a1, &[k]).unwrap();
            assert_eq!(al.len() as i64, k + 1);
        }
    }

    #[test]
    fn alcove_semisimple_is_product() {
        let s = rs("A2+A2");
        let al = alcove(&s, &[1, 1]).unwrap();
        assert_eq!(al.len(), 9);
    }

    #[test]
    fn conformal_anomaly_values() {
        assert_eq!(conformal_anomaly(&rs("E8"), &[1]).unwrap(), rat(8, 1));
        assert_eq!(conformal_anomaly(&rs("A1"), &[1]).unwrap(), rat(1, 1));
        assert_eq!(conformal_anomaly(&rs("A2+E6"), &[1, 1]).unwrap(), rat(8, 1));
        assert_eq!(conformal_anomaly(&rs("G2+F4"), &[1, 1]).unwrap(), rat(8, 1));
    }

    #[test]
    fn conformal_anomaly_monotone_in_level() {
        for name in ["A1", "G2", "D4"] {
            let r = rs(name);
            let mut prev = rat(0, 1);
            for k in 1..=10 {
                let c = conformal_anomaly(&r, &[k]).unwrap();
                assert!(c > prev, "{name} k={k}");
                prev = c;
            }
        }
    }

    #[test]
    fn trace_anomaly_values() {
        let a1 = rs("A1");
        let lw = LevelWeight::new(&a1, Weight(vec![1]), vec![1]).unwrap();
        assert_eq!(trace_anomaly(&a1, &lw).unwrap(), rat(1, 4));

        let d8 = rs("D8");
        let lw = LevelWeight::new(&d8, Weight::fundamental(8, 7), vec![1]).unwrap();
        assert_eq!(trace_anomaly(&d8, &lw).unwrap(), rat(1, 1));

        let zero = LevelWeight::vacuum(&d8, vec![1]).unwrap();
        assert_eq!(trace_anomaly(&d8, &zero).unwrap(), rat(0, 1));
    }

    #[test]
    fn trace_anomaly_affine_subtracts_shift() {
        let d8 = rs("D8");
        let base = LevelWeight::new(&d8, Weight::fundamental(8, 7), vec![1]).unwrap();
        let aw = AffineWeight { base, shift: 1 };
        assert_eq!(trace_anomaly_affine(&d8, &aw).unwrap(), rat(0, 1));
    }

    #[test]
    fn trace_anomaly_dagger_invariant() {
        let e6 = rs("E6");
        for lw in alcove(&e6, &[2]).unwrap() {
            let d = e6.dagger(&lw.weight);
            let dlw = LevelWeight::new(&e6, d, vec![2]).unwrap();
            assert_eq!(
                trace_anomaly(&e6, &lw).unwrap(),
                trace_anomaly(&e6, &dlw).unwrap()
            );
        }
    }

    #[test]
    fn level_weight_validation() {
        let a1 = rs("A1");
        assert!(LevelWeight::new(&a1, Weight(vec![2]), vec![1]).is_err());
        assert!(LevelWeight::new(&a1, Weight(vec![-1]), vec![1]).is_err());
        assert!(LevelWeight::new(&a1, Weight(vec![1]), vec![-1]).is_err());
    }

    #[test]
    fn weyl_dims() {
        let e8 = rs("E8");
        assert_eq!(weyl_dim(&e8, &e8.theta.clone()).unwrap(), BigInt::from(248));
        let d8 = rs("D8");
        assert_eq!(
            weyl_dim(&d8, &Weight::fundamental(8, 7)).unwrap(),
            BigInt::from(128)
        );
        assert_eq!(
            weyl_dim(&d8, &Weight::fundamental(8, 2)).unwrap(),
            BigInt::from(120)
        );
        let g2 = rs("G2");
        assert_eq!(weyl_dim(&g2, &Weight(vec![1, 0])).unwrap(), BigInt::from(7));
        assert_eq!(weyl_dim(&g2, &Weight(vec![0, 1])).unwrap(), BigInt::from(14));
        let f4 = rs("F4");
        assert_eq!(weyl_dim(&f4, &Weight(vec![1, 0, 0, 0])).unwrap(), BigInt::from(52));
        assert_eq!(weyl_dim(&f4, &Weight(vec![0, 0, 0, 1])).unwrap(), BigInt::from(26));
    }

    #[test]
    fn finite_weight_system_matches_weyl_dim() {
        for (name, lam) in [
            ("A2", vec![1, 1]),
            ("G2", vec![0, 1]),
            ("D4", vec![0, 1, 0, 0]),
            ("F4", vec![1, 0, 0, 0]),
        ] {
            let r = rs(name);
            let lambda = Weight(lam);
            let dom = finite_dominant_weights(&r, &lambda).unwrap();
            let full = expand_orbits(&r, &dom, 1_000_000).unwrap();
            let total: i64 = full.values().sum();
            assert_eq!(
                BigInt::from(total),
                weyl_dim(&r, &lambda).unwrap(),
                "{name}"
            );
        }
    }

    #[test]
    fn graded_character_basic_a1() {
        let a1 = rs("A1");
        let lw = LevelWeight::vacuum(&a1, vec![1]).unwrap();
        let ch = graded_character(&a1, &lw, 2, 100_000).unwrap();
        assert_eq!(ch.grade_dim(0), 1);
        assert_eq!(ch.grade_dim(1), 3);
        assert_eq!(ch.grade_dim(2), 4);
    }

    #[test]
    fn graded_character_basic_e8() {
        let e8 = rs("E8");
        let lw = LevelWeight::vacuum(&e8, vec![1]).unwrap();
        let ch = graded_character(&e8, &lw, 1, 1_000_000).unwrap();
        assert_eq!(ch.grade_dim(0), 1);
        assert_eq!(ch.grade_dim(1), 248);
        // grade 1 is exactly the adjoint weight system
        let adj = expand_orbits(
            &e8,
            &finite_dominant_weights(&e8, &e8.theta.clone()).unwrap(),
            1_000_000,
        )
        .unwrap();
        for (w, &m) in &adj {
            assert_eq!(ch.grades[1].get(w).copied().unwrap_or(0), m);
        }
        assert_eq!(ch.grades[1].get(&Weight::zero(8)).copied(), Some(8));
    }

    #[test]
    fn lattice_oracle_level_one_simply_laced() {
        // Independent oracle for level-1 simply-laced basic modules:
        // states are lattice points beta in Q with r-colored oscillator
        // modes, so mult_m(beta) = p_r(m - (beta,beta)/2).
        for (name, cutoff) in [("A1", 4usize), ("A2", 3), ("D4", 2)] {
            let r = rs(name);
            let rk = r.rank;
            // p_r via Euler product, truncated
            let mut p = vec![0i64; cutoff + 1];
            p[0] = 1;
            for _color in 0..rk {
                for part in 1..=cutoff {
                    for m in part..=cutoff {
                        p[m] += p[m - part];
                    }
                }
            }
            let lw = LevelWeight::vacuum(&r, vec![1]).unwrap();
            let ch = graded_character(&r, &lw, cutoff, 2_000_000).unwrap();
            for m in 0..=cutoff {
                for (w, &mult) in &ch.grades[m] {
                    let coords = r.root_coordinates(&w.0).expect("weights lie in Q");
                    let _ = coords;
                    let n2 = r.inner_scaled(&w.0, &w.0);
                    assert_eq!(n2 % i128::from(r.form_den), 0);
                    let half_norm = (n2 / i128::from(r.form_den) / 2) as usize;
                    assert_eq!(mult, p[m - half_norm], "{name} grade {m} {w}");
                }
                // and no weights are missing: compare total dims
                let mut oracle_dim = 0i64;
                // enumerate beta in Q with (beta,beta)/2 <= m via orbit
                // expansion of bounded dominant weights
                // |beta + rho|^2 <= 2|beta|^2 + 2|rho|^2 covers all beta
                // with |beta|^2 <= 2m
                let bound = 8 * (m as i128) * i128::from(r.form_den)
                    + 2 * rs_norm_rho(&r);
                for (labels, _) in super::enumerate_dominant_bounded(&r, bound) {
                    let w = Weight(labels);
                    if r.root_coordinates(&w.0).is_none() {
                        continue;
                    }
                    let n2 = r.inner_scaled(&w.0, &w.0) / i128::from(r.form_den);
                    if n2 % 2 != 0 || (n2 / 2) as usize > m {
                        continue;
                    }
                    let orbit = r.orbit(&w, 1_000_000).unwrap();
                    oracle_dim += (orbit.len() as i64) * p[m - (n2 / 2) as usize];
                }
                assert_eq!(ch.grade_dim(m), oracle_dim, "{name} grade {m} total");
            }
        }
    }

    fn rs_norm_rho(r: &RootSystem) -> i128 {
        let rho = vec![1i64; r.rank];
        r.inner_scaled(&rho, &rho)
    }

    #[test]
    fn graded_character_weyl_invariant_slices() {
        let g2 = rs("G2");
        let lw = LevelWeight::new(&g2, Weight(vec![1, 0]), vec![1]).unwrap();
        let ch = graded_character(&g2, &lw, 2, 100_000).unwrap();
        for slice in &ch.grades {
            for (w, &m) in slice {
                for i in 0..2 {
                    let r = g2.reflect(w, i).unwrap();
                    assert_eq!(slice.get(&r).copied().unwrap_or(0), m);
                }
            }
        }
    }

    #[test]
    fn semisimple_character_is_graded_product() {
        let s = rs("A1+A1");
        let lw = LevelWeight::vacuum(&s, vec![1, 1]).unwrap();
        let ch = graded_character(&s, &lw, 2, 100_000).unwrap();
        // component grade dims are 1, 3, 4; convolution gives 1, 6, 17
        assert_eq!(ch.grade_dim(0), 1);
        assert_eq!(ch.grade_dim(1), 6);
        assert_eq!(ch.grade_dim(2), 17);
    }

    #[test]
    fn character_budget_enforced() {
        let e8 = rs("E8");
        let lw = LevelWeight::vacuum(&e8, vec![1]).unwrap();
        assert!(matches!(
            graded_character(&e8, &lw, 2, 100),
            Err(Error::CharacterBudget { .. })
        ));
    }

    #[test]
    fn graded_character_json_roundtrip() {
        let a2 = rs("A2");
        let lw = LevelWeight::vacuum(&a2, vec![1]).unwrap();
        let ch = graded_character(&a2, &lw, 2, 100_000).unwrap();
        let v = ch.to_json();
        let back = GradedCharacter::from_json(&v).unwrap();
        assert_eq!(ch, back);
    }
}
