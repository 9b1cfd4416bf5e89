//! Finite Heisenberg groups over A^g x dual(A^g), their Stone-von-Neumann
//! representation on functions of A^g, lifts of isotropic subgroups, exact
//! invariant-subspace dimensions, and the Schur-lemma rank argument for the
//! induced duality map.

use num::{BigInt, BigRational};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::cyclo::{CycloField, Elem};
use crate::error::{Error, Result};

/// A finite abelian group presented as a product of cyclic factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteAbelian {
    pub orders: Vec<u64>,
}

impl FiniteAbelian {
    pub fn new(orders: Vec<u64>) -> FiniteAbelian {
        assert!(orders.iter().all(|&n| n >= 1));
        FiniteAbelian { orders }
    }

    pub fn size(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &n| num::integer::lcm(acc, n))
    }
}

/// The symplectic group B = A^g x dual(A^g) underlying the Heisenberg
/// group, with its representation space Fun(A^g).
#[derive(Debug, Clone)]
pub struct HeisenbergModel {
    pub center: FiniteAbelian,
    pub genus: usize,
    /// cyclic orders of A^g (first half) and dual(A^g) (second half)
    pub orders: Vec<u64>,
    /// cyclic orders of the index set A^g
    pub space_orders: Vec<u64>,
    pub exponent: u64,
}

/// An element of B: translation part then character part.
pub type BElem = Vec<u64>;

impl HeisenbergModel {
    pub fn new(center: FiniteAbelian, genus: usize) -> HeisenbergModel {
        let mut half = Vec::new();
        for _ in 0..genus {
            half.extend_from_slice(&center.orders);
        }
        let mut orders = half.clone();
        orders.extend_from_slice(&half);
        let exponent = center.exponent();
        HeisenbergModel { center, genus, orders, space_orders: half, exponent }
    }

    pub fn group_size(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn space_dim(&self) -> usize {
        self.space_orders.iter().product::<u64>() as usize
    }

    pub fn zero(&self) -> BElem {
        vec![0; self.orders.len()]
    }

    pub fn add(&self, x: &BElem, y: &BElem) -> BElem {
        x.iter()
            .zip(y)
            .zip(&self.orders)
            .map(|((&a, &b), &n)| (a + b) % n)
            .collect()
    }

    pub fn neg(&self, x: &BElem) -> BElem {
        x.iter().zip(&self.orders).map(|(&a, &n)| (n - a % n) % n).collect()
    }

    pub fn order_of(&self, x: &BElem) -> u64 {
        x.iter()
            .zip(&self.orders)
            .fold(1, |acc, (&a, &n)| {
                let o = n / num::integer::gcd(a, n).max(1);
                let o = if a == 0 { 1 } else { o };
                num::integer::lcm(acc, o)
            })
    }

    /// All elements of B in mixed-radix order. Sizes are guarded by the
    /// configuration before models this large are built.
    pub fn elements(&self) -> Vec<BElem> {
        let mut out = vec![self.zero()];
        for (pos, &n) in self.orders.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * n as usize);
            for e in &out {
                for v in 0..n {
                    let mut e2 = e.clone();
                    e2[pos] = v;
                    next.push(e2);
                }
            }
            out = next;
        }
        out
    }

    /// chi(y) as an exponent of zeta_e, for the character part of `x`
    /// evaluated on `y` in A^g.
    fn chi_eval(&self, x: &BElem, y: &[u64]) -> u64 {
        let half = self.space_orders.len();
        let e = self.exponent;
        let mut acc = 0u64;
        for i in 0..half {
            let chi = x[half + i];
            let n = self.space_orders[i];
            acc = (acc + chi * y[i] % n * (e / n)) % e;
        }
        acc
    }

    /// Cocycle exponent c(x, y) = chi_y(a_x), so that
    /// rho(x) rho(y) = zeta_e^{c(x,y)} rho(x + y).
    pub fn cocycle(&self, x: &BElem, y: &BElem) -> u64 {
        let half = self.space_orders.len();
        self.chi_eval(y, &x[..half])
    }

    /// Symplectic pairing exponent: c(x, y) - c(y, x) mod e.
    pub fn symplectic(&self, x: &BElem, y: &BElem) -> u64 {
        let e = self.exponent;
        (self.cocycle(x, y) + e - self.cocycle(y, x)) % e
    }

    fn space_index(&self, y: &[u64]) -> usize {
        let mut idx = 0usize;
        for (v, &n) in y.iter().zip(&self.space_orders) {
            idx = idx * n as usize + *v as usize;
        }
        idx
    }

    fn space_unindex(&self, mut idx: usize) -> Vec<u64> {
        let mut out = vec![0u64; self.space_orders.len()];
        for i in (0..self.space_orders.len()).rev() {
            let n = self.space_orders[i] as usize;
            out[i] = (idx % n) as u64;
            idx /= n;
        }
        out
    }

    /// rho(x) as a monomial operator with phases in mu_m, m a multiple of
    /// the exponent: op e_y = zeta_m^{phase[y]} e_{perm[y]}.
    pub fn rho(&self, x: &BElem, m: u64) -> MonomialOp {
        assert_eq!(m % self.exponent, 0);
        let half = self.space_orders.len();
        let dim = self.space_dim();
        let mut perm = vec![0usize; dim];
        let mut phase = vec![0u64; dim];
        for idx in 0..dim {
            let y = self.space_unindex(idx);
            let shifted: Vec<u64> = y
                .iter()
                .zip(&x[..half])
                .zip(&self.space_orders)
                .map(|((&yi, &ai), &n)| (yi + n - ai) % n)
                .collect();
            perm[idx] = self.space_index(&shifted);
            phase[idx] = self.chi_eval(x, &shifted) * (m / self.exponent) % m;
        }
        MonomialOp { perm, phase, m }
    }
}

/// A permutation-with-phases operator on the representation space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOp {
    /// e_y maps to the basis vector at perm[y]
    pub perm: Vec<usize>,
    /// exponent of zeta_m on e_y
    pub phase: Vec<u64>,
    pub m: u64,
}

impl MonomialOp {
    pub fn identity(dim: usize, m: u64) -> MonomialOp {
        MonomialOp { perm: (0..dim).collect(), phase: vec![0; dim], m }
    }

    /// self after other: (self * other) e_y.
    pub fn compose(&self, other: &MonomialOp) -> MonomialOp {
        assert_eq!(self.m, other.m);
        let dim = self.perm.len();
        let mut perm = vec![0usize; dim];
        let mut phase = vec![0u64; dim];
        for y in 0..dim {
            let mid = other.perm[y];
            perm[y] = self.perm[mid];
            phase[y] = (other.phase[y] + self.phase[mid]) % self.m;
        }
        MonomialOp { perm, phase, m: self.m }
    }

    pub fn scale(&self, exp: u64) -> MonomialOp {
        let mut out = self.clone();
        for p in &mut out.phase {
            *p = (*p + exp) % self.m;
        }
        out
    }

    pub fn inverse(&self) -> MonomialOp {
        let dim = self.perm.len();
        let mut perm = vec![0usize; dim];
        let mut phase = vec![0u64; dim];
        for y in 0..dim {
            perm[self.perm[y]] = y;
            phase[self.perm[y]] = (self.m - self.phase[y]) % self.m;
        }
        MonomialOp { perm, phase, m: self.m }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p == i)
            && self.phase.iter().all(|&p| p == 0)
    }

    /// Dense matrix over Q(zeta_m), column y holding the image of e_y.
    pub fn to_matrix(&self, f: &CycloField) -> Vec<Vec<Elem>> {
        let dim = self.perm.len();
        let mut out = vec![vec![f.zero(); dim]; dim];
        for y in 0..dim {
            out[self.perm[y]][y] = f.zeta_pow(self.phase[y] as i64);
        }
        out
    }
}

// ---- integer linear algebra for subgroup bases ----

/// Kernel lattice basis of the map Z^rows -> Z^cols, x -> x M.
fn integer_kernel(m: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    // row-reduce [M | I]; rows with zero M-part give the kernel
    let mut a: Vec<Vec<i128>> = (0..rows)
        .map(|i| {
            let mut r = m[i].clone();
            r.extend((0..rows).map(|j| i128::from(i == j)));
            r
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..cols {
        loop {
            // find the row with the smallest non-zero entry in this column
            let mut best: Option<usize> = None;
            for r in pivot_row..rows {
                if a[r][col] != 0
                    && best.map_or(true, |b| a[r][col].abs() < a[b][col].abs())
                {
                    best = Some(r);
                }
            }
            let Some(b) = best else { break };
            a.swap(pivot_row, b);
            let mut done = true;
            for r in pivot_row + 1..rows {
                if a[r][col] != 0 {
                    let q = a[r][col] / a[pivot_row][col];
                    for c in 0..cols + rows {
                        a[r][c] -= q * a[pivot_row][c];
                    }
                    if a[r][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                pivot_row += 1;
                break;
            }
        }
        if pivot_row == rows {
            break;
        }
    }
    a.iter()
        .filter(|r| r[..cols].iter().all(|&x| x == 0))
        .map(|r| r[cols..].to_vec())
        .collect()
}

/// Smith normal form: returns (diag, vinv) with U K V = diag and vinv the
/// inverse of the accumulated column transform V.
fn smith_normal_form(k: &[Vec<i128>]) -> (Vec<i128>, Vec<Vec<i128>>) {
    let rows = k.len();
    let cols = if rows == 0 { 0 } else { k[0].len() };
    let mut a: Vec<Vec<i128>> = k.to_vec();
    let mut vinv: Vec<Vec<i128>> = (0..cols)
        .map(|i| (0..cols).map(|j| i128::from(i == j)).collect())
        .collect();
    let n = rows.min(cols);
    for t in 0..n {
        loop {
            // find smallest non-zero entry in the remaining block
            let mut best: Option<(usize, usize)> = None;
            for r in t..rows {
                for c in t..cols {
                    if a[r][c] != 0
                        && best.map_or(true, |(br, bc)| a[r][c].abs() < a[br][bc].abs())
                    {
                        best = Some((r, c));
                    }
                }
            }
            let Some((br, bc)) = best else { break };
            a.swap(t, br);
            if bc != t {
                for row in a.iter_mut() {
                    row.swap(t, bc);
                }
                vinv.swap(t, bc); // E^{-1} for a column swap is the row swap
            }
            let mut clean = true;
            for r in t + 1..rows {
                if a[r][t] != 0 {
                    let q = a[r][t] / a[t][t];
                    for c in 0..cols {
                        a[r][c] -= q * a[t][c];
                    }
                    if a[r][t] != 0 {
                        clean = false;
                    }
                }
            }
            for c in t + 1..cols {
                if a[t][c] != 0 {
                    let q = a[t][c] / a[t][t];
                    // column op: C_c -= q C_t; V right-multiplied by E,
                    // so vinv is left-multiplied by E^{-1}: R_t += q R_c
                    for r in 0..rows {
                        a[r][c] -= q * a[r][t];
                    }
                    for j in 0..cols {
                        vinv[t][j] += q * vinv[c][j];
                    }
                    if a[t][c] != 0 {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if a[t][t] < 0 {
            for c in 0..cols {
                a[t][c] = -a[t][c];
            }
        }
    }
    // divisibility chain is not needed by callers; orders come out as the
    // diagonal entries regardless
    let diag = (0..n).map(|t| a[t][t]).collect();
    (diag, vinv)
}

/// A basis of the subgroup generated by `generators`: independent
/// elements b_i of order t_i with L = direct sum of <b_i>.
pub fn subgroup_basis(
    model: &HeisenbergModel,
    generators: &[BElem],
) -> Vec<(BElem, u64)> {
    if generators.is_empty() {
        return Vec::new();
    }
    let r = generators.len();
    let s = model.orders.len();
    // kernel of Z^{r+s} -> Z^s for the stacked matrix [G; diag(N)]
    let mut stacked: Vec<Vec<i128>> = generators
        .iter()
        .map(|g| g.iter().map(|&x| x as i128).collect())
        .collect();
    for j in 0..s {
        let mut row = vec![0i128; s];
        row[j] = model.orders[j] as i128;
        stacked.push(row);
    }
    let kernel = integer_kernel(&stacked);
    // project onto the generator coordinates
    let k_mat: Vec<Vec<i128>> = kernel.iter().map(|v| v[..r].to_vec()).collect();
    let (diag, vinv) = smith_normal_form(&k_mat);
    let mut out = Vec::new();
    for (i, &d) in diag.iter().enumerate() {
        let t = d.unsigned_abs() as u64;
        if t <= 1 {
            continue;
        }
        // b_i = (row i of V^{-1}) . generators
        let mut b = model.zero();
        for (j, g) in generators.iter().enumerate() {
            let c = vinv[i][j].rem_euclid(model.order_of(g).max(1) as i128) as u64;
            for _ in 0..c {
                b = model.add(&b, g);
            }
        }
        debug_assert_eq!(model.order_of(&b), t);
        out.push((b, t));
    }
    out
}

/// A lift of an isotropic subgroup into the Heisenberg group: one phase
/// per basis element, expressed as an exponent of zeta_m.
#[derive(Debug, Clone)]
pub struct IsotropicLift {
    pub basis: Vec<(BElem, u64)>,
    pub m: u64,
    pub zeta_exp: Vec<u64>,
    ops: Vec<MonomialOp>,
}

impl IsotropicLift {
    pub fn subgroup_size(&self) -> u64 {
        self.basis.iter().map(|&(_, t)| t).product()
    }
}

/// Scalar exponent tau of rho(b)^t (a multiple of the identity when t is
/// the order of b), as an exponent of zeta_e.
fn power_scalar_exp(model: &HeisenbergModel, b: &BElem, t: u64) -> Result<u64> {
    let op0 = model.rho(b, model.exponent);
    let mut acc = MonomialOp::identity(model.space_dim(), model.exponent);
    for _ in 0..t {
        acc = op0.compose(&acc);
    }
    if acc.perm.iter().enumerate().any(|(i, &p)| p != i) {
        return Err(Error::LiftNotHomomorphism);
    }
    let exp = acc.phase[0];
    if acc.phase.iter().any(|&p| p != exp) {
        return Err(Error::LiftNotHomomorphism);
    }
    Ok(exp)
}

/// Build a lift of the isotropic subgroup with the given basis; `twists`
/// selects one of the valid lifts (a torsor under characters of L).
pub fn build_lift(
    model: &HeisenbergModel,
    basis: &[(BElem, u64)],
    twists: &[u64],
) -> Result<IsotropicLift> {
    // isotropy of the basis (bilinearity extends it to the subgroup)
    for (i, (bi, _)) in basis.iter().enumerate() {
        for (bj, _) in basis.iter().skip(i + 1) {
            if model.symplectic(bi, bj) != 0 {
                return Err(Error::NotIsotropic(bi.clone(), bj.clone()));
            }
        }
    }
    let e = model.exponent;
    let t_lcm = basis.iter().fold(1u64, |acc, &(_, t)| num::integer::lcm(acc, t));
    let m = e * t_lcm;
    let mut zeta_exp = Vec::with_capacity(basis.len());
    let mut ops = Vec::with_capacity(basis.len());
    for (i, (b, t)) in basis.iter().enumerate() {
        let tau = power_scalar_exp(model, b, *t)?;
        // zeta^t * zeta_e^tau = 1: t * x = -tau * (m/e)  (mod m)
        let x = ((m - tau * (m / e) % m) / t + twists.get(i).copied().unwrap_or(0) * (m / t)) % m;
        let op = model.rho(b, m).scale(x);
        zeta_exp.push(x);
        ops.push(op);
    }
    let lift = IsotropicLift { basis: basis.to_vec(), m, zeta_exp, ops };
    validate_lift(model, &lift)?;
    Ok(lift)
}

/// Build a lift with explicit phase exponents (for fault injection and
/// external scenarios); fails when they do not define a homomorphism.
pub fn build_lift_with_phases(
    model: &HeisenbergModel,
    basis: &[(BElem, u64)],
    zeta_exp: &[u64],
    m: u64,
) -> Result<IsotropicLift> {
    if m % model.exponent != 0 || zeta_exp.len() != basis.len() {
        return Err(Error::LiftNotHomomorphism);
    }
    let ops: Vec<MonomialOp> = basis
        .iter()
        .zip(zeta_exp)
        .map(|((b, _), &x)| model.rho(b, m).scale(x))
        .collect();
    let lift = IsotropicLift {
        basis: basis.to_vec(),
        m,
        zeta_exp: zeta_exp.to_vec(),
        ops,
    };
    validate_lift(model, &lift)?;
    Ok(lift)
}

fn validate_lift(model: &HeisenbergModel, lift: &IsotropicLift) -> Result<()> {
    // basis operators must commute and have the right orders
    for (i, op) in lift.ops.iter().enumerate() {
        let t = lift.basis[i].1;
        let mut acc = MonomialOp::identity(model.space_dim(), lift.m);
        for _ in 0..t {
            acc = op.compose(&acc);
        }
        if !acc.is_identity() {
            return Err(Error::LiftNotHomomorphism);
        }
        for opj in lift.ops.iter().skip(i + 1) {
            if op.compose(opj) != opj.compose(op) {
                return Err(Error::LiftNotHomomorphism);
            }
        }
    }
    Ok(())
}

/// Dimension of the subspace invariant under the lifted subgroup, as the
/// exact trace of the averaging projector.
pub fn invariant_dim(model: &HeisenbergModel, lift: &IsotropicLift) -> Result<u64> {
    let f = CycloField::new(lift.m);
    let dim = model.space_dim();
    // enumerate the subgroup through basis coordinates
    let mut coords = vec![0u64; lift.basis.len()];
    let mut trace = f.zero();
    loop {
        let mut op = MonomialOp::identity(dim, lift.m);
        for (i, &c) in coords.iter().enumerate() {
            for _ in 0..c {
                op = lift.ops[i].compose(&op);
            }
        }
        for y in 0..dim {
            if op.perm[y] == y {
                trace = f.add(&trace, &f.zeta_pow(op.phase[y] as i64));
            }
        }
        // advance mixed radix
        let mut i = 0;
        loop {
            if i == coords.len() {
                break;
            }
            coords[i] += 1;
            if coords[i] < lift.basis[i].1 {
                break;
            }
            coords[i] = 0;
            i += 1;
        }
        if i == coords.len() {
            break;
        }
    }
    let size = lift.subgroup_size();
    let avg = f.scale(
        &trace,
        &BigRational::new(BigInt::from(1), BigInt::from(size)),
    );
    let r = f
        .as_rational(&avg)
        .ok_or_else(|| Error::NonIntegerTrace(format!("{avg:?}")))?;
    if !r.is_integer() || r < BigRational::from_integer(BigInt::from(0)) {
        return Err(Error::NonIntegerTrace(r.to_string()));
    }
    Ok(r.to_integer().to_string().parse().unwrap())
}

/// Random maximal isotropic subgroup, as a generator list, by greedy
/// closure over a shuffled element list.
pub fn random_maximal_isotropic<R: Rng>(
    model: &HeisenbergModel,
    rng: &mut R,
) -> Vec<BElem> {
    let target = model.space_dim() as u64;
    let mut all = model.elements();
    all.shuffle(rng);
    let mut gens: Vec<BElem> = Vec::new();
    let mut closure: std::collections::HashSet<BElem> =
        [model.zero()].into_iter().collect();
    for x in all {
        if closure.contains(&x) {
            continue;
        }
        if gens.iter().all(|g| model.symplectic(&x, g) == 0)
            && model.symplectic(&x, &x) == 0
        {
            gens.push(x.clone());
            // extend the closure
            let mut frontier: Vec<BElem> = closure.iter().cloned().collect();
            for base in frontier.drain(..) {
                let mut cur = base;
                loop {
                    cur = model.add(&cur, &x);
                    if !closure.insert(cur.clone()) {
                        break;
                    }
                }
            }
            if closure.len() as u64 == target {
                break;
            }
        }
    }
    assert_eq!(closure.len() as u64, target, "maximal isotropic closure");
    gens
}

/// The duality map induced by an invariant tensor sigma in
/// rep(A) tensor rep(B), as a matrix over Q(zeta_e), with its rank.
#[derive(Debug, Clone)]
pub struct DualityMapReport {
    pub rank: usize,
    pub full_rank: bool,
    pub space_dim: usize,
    pub equivariant: bool,
}

/// Anti-symplectic identification: invert the character part.
pub fn iota(model: &HeisenbergModel, x: &BElem) -> BElem {
    let half = model.space_orders.len();
    let mut out = x.clone();
    for i in 0..half {
        let n = model.orders[half + i];
        out[half + i] = (n - x[half + i] % n) % n;
    }
    out
}

/// Average the seed tensor e_0 tensor e_0 over the anti-diagonal copy of
/// B acting as rho_A(x) tensor rho_B(iota(x)); the cocycles cancel so no
/// extra lift phases are needed. Returns sigma as a matrix S[y][x].
pub fn invariant_sigma(model: &HeisenbergModel, f: &CycloField) -> Vec<Vec<Elem>> {
    let dim = model.space_dim();
    let mut s = vec![vec![f.zero(); dim]; dim];
    let size = model.group_size();
    let scale = BigRational::new(BigInt::from(1), BigInt::from(size));
    for x in model.elements() {
        let op_a = model.rho(&x, model.exponent);
        let op_b = model.rho(&iota(model, &x), model.exponent);
        // (rho_A(x) e_0) tensor (rho_B(iota x) e_0)
        let xa = op_a.perm[0];
        let xb = op_b.perm[0];
        let ph = (op_a.phase[0] + op_b.phase[0]) % model.exponent;
        let term = f.scale(&f.zeta_pow(ph as i64), &scale);
        s[xb][xa] = f.add(&s[xb][xa], &term);
    }
    s
}

/// Check that the map intertwines the dual action on rep(A) with the
/// action on rep(B) across a generating set.
pub fn equivariance_check(
    model: &HeisenbergModel,
    f: &CycloField,
    map: &[Vec<Elem>],
) -> bool {
    let dim = model.space_dim();
    let half = model.orders.len();
    let mut gens: Vec<BElem> = Vec::new();
    for i in 0..half {
        let mut g = model.zero();
        g[i] = 1 % model.orders[i];
        gens.push(g);
    }
    let mat_mul = |a: &[Vec<Elem>], b: &[Vec<Elem>]| -> Vec<Vec<Elem>> {
        let n = a.len();
        let mut out = vec![vec![f.zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    if !f.is_zero(&a[i][l]) && !f.is_zero(&b[l][j]) {
                        let p = f.mul(&a[i][l], &b[l][j]);
                        out[i][j] = f.add(&out[i][j], &p);
                    }
                }
            }
        }
        out
    };
    for g in gens {
        let rho_a = model.rho(&g, model.exponent).to_matrix(f);
        let rho_b = model
            .rho(&iota(model, &g), model.exponent)
            .inverse()
            .to_matrix(f);
        // invariance of sigma: rho_B(iota g) S rho_A(g)^T = S,
        // i.e. S rho_A(g)^T = rho_B(iota g)^{-1} S
        let mut rho_a_t = vec![vec![f.zero(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                rho_a_t[i][j] = rho_a[j][i].clone();
            }
        }
        let lhs = mat_mul(map, &rho_a_t);
        let rhs = mat_mul(&rho_b, map);
        for i in 0..dim {
            for j in 0..dim {
                if lhs[i][j] != rhs[i][j] {
                    return false;
                }
            }
        }
    }
    true
}

/// Build sigma, check invariance, and compute the rank of the induced
/// map over the cyclotomic field.
pub fn strange_duality_map(
    center: &FiniteAbelian,
    genus: usize,
    zero_sigma: bool,
) -> Result<DualityMapReport> {
    let model = HeisenbergModel::new(center.clone(), genus);
    let f = CycloField::new(model.exponent.max(2));
    let dim = model.space_dim();
    let s = if zero_sigma {
        vec![vec![f.zero(); dim]; dim]
    } else {
        invariant_sigma(&model, &f)
    };
    let equivariant = equivariance_check(&model, &f, &s);
    if !zero_sigma && !equivariant {
        return Err(Error::SigmaNotInvariant);
    }
    let rank = f.rank(&s);
    Ok(DualityMapReport {
        rank,
        full_rank: rank == dim,
        space_dim: dim,
        equivariant,
    })
}

/// A scenario file: one center/genus pair with a sample count.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Scenario {
    pub center: Vec<u64>,
    pub genus: usize,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default)]
    pub seed: u64,
}

fn default_samples() -> usize {
    10
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub center: Vec<u64>,
    pub genus: usize,
    pub samples: usize,
    pub invariant_dims: Vec<u64>,
    pub all_one: bool,
}

/// Run a scenario: sample random maximal isotropics with random valid
/// lifts and report every invariant dimension.
pub fn run_scenario(sc: &Scenario) -> Result<ScenarioReport> {
    use rand::SeedableRng;
    let center = FiniteAbelian::new(sc.center.clone());
    let model = HeisenbergModel::new(center, sc.genus);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(sc.seed);
    let mut dims = Vec::with_capacity(sc.samples);
    for _ in 0..sc.samples {
        let gens = random_maximal_isotropic(&model, &mut rng);
        let basis = subgroup_basis(&model, &gens);
        let twists: Vec<u64> = basis.iter().map(|&(_, t)| rng.gen_range(0..t)).collect();
        let lift = build_lift(&model, &basis, &twists)?;
        dims.push(invariant_dim(&model, &lift)?);
    }
    Ok(ScenarioReport {
        center: sc.center.clone(),
        genus: sc.genus,
        samples: sc.samples,
        all_one: dims.iter().all(|&d| d == 1),
        invariant_dims: dims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn model(orders: &[u64], g: usize) -> HeisenbergModel {
        HeisenbergModel::new(FiniteAbelian::new(orders.to_vec()), g)
    }

    #[test]
    fn cocycle_relation_holds() {
        let m = model(&[4], 1);
        let e = m.exponent;
        for x in m.elements() {
            for y in m.elements().into_iter().step_by(3) {
                let lhs = m.rho(&x, e).compose(&m.rho(&y, e));
                let rhs = m.rho(&m.add(&x, &y), e).scale(m.cocycle(&x, &y));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn diagonal_lagrangian_z5() {
        let m = model(&[5], 1);
        // {(a, a)} is isotropic: omega((a,a),(b,b)) = ab - ba = 0
        let gens = vec![vec![1, 1]];
        let basis = subgroup_basis(&m, &gens);
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0].1, 5);
        let lift = build_lift(&m, &basis, &[0]).unwrap();
        assert_eq!(invariant_dim(&m, &lift).unwrap(), 1);
    }

    #[test]
    fn klein_four_center() {
        let m = model(&[2, 2], 1);
        // translations-only subgroup is isotropic and maximal
        let gens = vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]];
        let basis = subgroup_basis(&m, &gens);
        assert_eq!(basis.iter().map(|&(_, t)| t).product::<u64>(), 4);
        let lift = build_lift(&m, &basis, &[0, 0]).unwrap();
        assert_eq!(invariant_dim(&m, &lift).unwrap(), 1);
    }

    #[test]
    fn character_only_subgroup_counts_trivial_multiplicity() {
        // L = dual(A): invariant functions under all characters with the
        // plain lift are the functions supported where all characters
        // are 1, i.e. dimension 1 for A = Z/3
        let m = model(&[3], 1);
        let gens = vec![vec![0, 1]];
        let basis = subgroup_basis(&m, &gens);
        let lift = build_lift(&m, &basis, &[0]).unwrap();
        assert_eq!(invariant_dim(&m, &lift).unwrap(), 1);
    }

    #[test]
    fn non_isotropic_rejected() {
        let m = model(&[5], 1);
        let basis = subgroup_basis(&m, &[vec![1, 0], vec![0, 1]]);
        assert!(matches!(
            build_lift(&m, &basis, &[0, 0]),
            Err(Error::NotIsotropic(_, _))
        ));
    }

    #[test]
    fn bad_phases_rejected() {
        let m = model(&[5], 1);
        let basis = subgroup_basis(&m, &[vec![1, 1]]);
        let good = build_lift(&m, &basis, &[0]).unwrap();
        let mut bad = good.zeta_exp.clone();
        bad[0] += 1; // no longer a t-th root of tau^{-1}
        assert!(matches!(
            build_lift_with_phases(&m, &basis, &bad, good.m),
            Err(Error::LiftNotHomomorphism)
        ));
    }

    #[test]
    fn random_isotropics_always_give_dim_one() {
        let cases: [(&[u64], usize); 7] = [
            (&[2], 1),
            (&[2], 2),
            (&[3], 1),
            (&[3], 2),
            (&[5], 1),
            (&[2, 2], 1),
            (&[3, 3], 1),
        ];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for (orders, g) in cases {
            let m = model(orders, g);
            for _ in 0..10 {
                let gens = random_maximal_isotropic(&m, &mut rng);
                let basis = subgroup_basis(&m, &gens);
                let twists: Vec<u64> =
                    basis.iter().map(|&(_, t)| rng.gen_range(0..t)).collect();
                let lift = build_lift(&m, &basis, &twists).unwrap();
                assert_eq!(
                    invariant_dim(&m, &lift).unwrap(),
                    1,
                    "{orders:?} g={g}"
                );
            }
        }
    }

    #[test]
    fn projector_idempotent_for_z2() {
        // averaging operator over the lifted Lagrangian, squared, equals
        // itself in exact cyclotomic arithmetic
        let m = model(&[2], 1);
        let basis = subgroup_basis(&m, &[vec![1, 1]]);
        let lift = build_lift(&m, &basis, &[0]).unwrap();
        let f = CycloField::new(lift.m);
        let dim = m.space_dim();
        let mut p = vec![vec![f.zero(); dim]; dim];
        for c in 0..basis[0].1 {
            let mut op = MonomialOp::identity(dim, lift.m);
            for _ in 0..c {
                op = lift.ops[0].compose(&op);
            }
            let mat = op.to_matrix(&f);
            for i in 0..dim {
                for j in 0..dim {
                    p[i][j] = f.add(&p[i][j], &mat[i][j]);
                }
            }
        }
        let half = BigRational::new(BigInt::from(1), BigInt::from(basis[0].1));
        for row in &mut p {
            for x in row.iter_mut() {
                *x = f.scale(x, &half);
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                let mut acc = f.zero();
                for l in 0..dim {
                    let t = f.mul(&p[i][l], &p[l][j]);
                    acc = f.add(&acc, &t);
                }
                assert_eq!(acc, p[i][j]);
            }
        }
    }

    #[test]
    fn duality_map_ranks() {
        for (orders, g) in [(vec![5u64], 1usize), (vec![3], 1), (vec![2], 2)] {
            let rep = strange_duality_map(&FiniteAbelian::new(orders.clone()), g, false)
                .unwrap();
            assert!(rep.full_rank, "{orders:?} g={g}");
            assert_eq!(rep.rank, rep.space_dim);
            assert!(rep.equivariant);
        }
    }

    #[test]
    fn zero_sigma_rank_zero() {
        let rep = strange_duality_map(&FiniteAbelian::new(vec![3]), 1, true).unwrap();
        assert_eq!(rep.rank, 0);
        assert!(!rep.full_rank);
    }

    #[test]
    fn perturbed_map_fails_equivariance() {
        let m = model(&[3], 1);
        let f = CycloField::new(m.exponent);
        let mut s = invariant_sigma(&m, &f);
        assert!(equivariance_check(&m, &f, &s));
        s[0][1] = f.add(&s[0][1], &f.one());
        assert!(!equivariance_check(&m, &f, &s));
    }

    #[test]
    fn schur_composition_is_scalar() {
        let m = model(&[3], 1);
        let f = CycloField::new(m.exponent);
        let s = invariant_sigma(&m, &f);
        // the inverse-direction map uses the transposed tensor
        let dim = m.space_dim();
        let mut comp = vec![vec![f.zero(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                for l in 0..dim {
                    let t = f.mul(&s[i][l], &s[j][l]);
                    comp[i][j] = f.add(&comp[i][j], &t);
                }
            }
        }
        let c = comp[0][0].clone();
        assert!(!f.is_zero(&c));
        for i in 0..dim {
            for j in 0..dim {
                if i == j {
                    assert_eq!(comp[i][j], c);
                } else {
                    assert!(f.is_zero(&comp[i][j]));
                }
            }
        }
    }

    #[test]
    fn scenario_roundtrip() {
        let sc = Scenario { center: vec![2, 2], genus: 1, samples: 3, seed: 5 };
        let rep = run_scenario(&sc).unwrap();
        assert!(rep.all_one);
        assert_eq!(rep.invariant_dims.len(), 3);
        let text = serde_json::to_string(&sc).unwrap();
        let back: Scenario = serde_json::from_str(&text).unwrap();
        assert_eq!(back.center, sc.center);
    }
}
