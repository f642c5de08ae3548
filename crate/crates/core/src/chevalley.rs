//! Simple Lie algebras over ℚ from root systems: the Chevalley basis with
//! integer structure constants, and the compact real form on which the
//! Killing form is negative definite.
//!
//! Structure-constant signs are fixed deterministically: for every positive
//! non-simple root `ε` the additive decomposition `ε = γ + δ` with `γ`
//! minimal in the global root order is declared extraspecial and gets
//! `N_{γ,δ} = +(p+1)`, where `p` is the length of the `γ`-string below `δ`.
//! Every other constant follows from the standard reduction identities; the
//! Jacobi identity is certified on construction rather than taken on faith.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use num_traits::Zero;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::linalg::{
    expect_int, is_negative_definite as matrix_is_negative_definite, rat, sparse_add_scaled,
    Matrix, Rat, SparseVec,
};
use crate::rootsystem::RootSystem;

/// Which real/rational form a [`LieAlgebra`] carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraForm {
    Chevalley,
    Compact,
}

/// Names for basis vectors.
///
/// Chevalley form: `H(i)` are the simple coroots, `E(ri)` the root vector of
/// the root with index `ri`. Compact form: `T(i) = i·H(i)`,
/// `X(p) = e_α - e_{-α}`, `Y(p) = i(e_α + e_{-α})` for the `p`-th positive
/// root `α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisLabel {
    H(usize),
    E(usize),
    T(usize),
    X(usize),
    Y(usize),
}

/// A finite-dimensional Lie algebra with an exact sparse bracket table.
///
/// Immutable after construction; safe to share across threads.
#[derive(Debug)]
pub struct LieAlgebra {
    rs: Arc<RootSystem>,
    form: AlgebraForm,
    labels: Vec<BasisLabel>,
    dim: usize,
    /// brackets `[b_i, b_j]` for `i < j`, flattened row by row
    table: Vec<SparseVec>,
    /// for a compact form, the Chevalley algebra it was derived from
    parent: Option<Arc<LieAlgebra>>,
}

fn ut_index(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (n - 1) - i * (i + 1) / 2 + (j - 1)
}

impl LieAlgebra {
    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn form_kind(&self) -> AlgebraForm {
        self.form
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn parent(&self) -> Option<&Arc<LieAlgebra>> {
        self.parent.as_ref()
    }

    /// Basis index of the root vector `e_ρ` (Chevalley form).
    pub fn e_index(&self, root_idx: usize) -> usize {
        debug_assert_eq!(self.form, AlgebraForm::Chevalley);
        self.rank() + root_idx
    }

    /// Basis index of `x_p` for the `p`-th positive root (compact form).
    pub fn x_index(&self, p: usize) -> usize {
        debug_assert_eq!(self.form, AlgebraForm::Compact);
        self.rank() + 2 * p
    }

    /// Basis index of `y_p` for the `p`-th positive root (compact form).
    pub fn y_index(&self, p: usize) -> usize {
        debug_assert_eq!(self.form, AlgebraForm::Compact);
        self.rank() + 2 * p + 1
    }

    /// `[b_i, b_j]` as a sparse coefficient vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> SparseVec {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Vec::new(),
            Less => self.table[ut_index(i, j, self.dim)].clone(),
            Greater => self.table[ut_index(j, i, self.dim)]
                .iter()
                .map(|(k, v)| (*k, -v.clone()))
                .collect(),
        }
    }

    /// Borrowed view of `[b_i, b_j]`: the stored row plus a sign flip flag.
    fn bracket_basis_view(&self, i: usize, j: usize) -> Option<(&SparseVec, bool)> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => None,
            Less => Some((&self.table[ut_index(i, j, self.dim)], false)),
            Greater => Some((&self.table[ut_index(j, i, self.dim)], true)),
        }
    }

    /// Coefficient of `b_k` in `[b_i, b_j]`.
    fn bracket_basis_coeff(&self, i: usize, j: usize, k: usize) -> Option<Rat> {
        let (row, flip) = self.bracket_basis_view(i, j)?;
        let pos = row.binary_search_by_key(&k, |(idx, _)| *idx).ok()?;
        let v = &row[pos].1;
        Some(if flip { -v.clone() } else { v.clone() })
    }

    fn bracket_basis_scaled_into(&self, i: usize, j: usize, scale: &Rat, acc: &mut SparseVec) {
        if i == j || scale.is_zero() {
            return;
        }
        let (row, flip) = if i < j {
            (&self.table[ut_index(i, j, self.dim)], false)
        } else {
            (&self.table[ut_index(j, i, self.dim)], true)
        };
        if row.is_empty() {
            return;
        }
        let s = if flip { -scale.clone() } else { scale.clone() };
        *acc = sparse_add_scaled(acc, row, &s);
    }

    /// Bilinear extension of the basis brackets to sparse vectors.
    pub fn bracket_sparse(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut acc: SparseVec = Vec::new();
        for (i, cu) in u {
            for (j, cv) in v {
                let scale = cu * cv;
                self.bracket_basis_scaled_into(*i, *j, &scale, &mut acc);
            }
        }
        acc
    }

    /// Bilinear extension of the basis brackets to dense coefficient vectors.
    pub fn bracket(&self, u: &[Rat], v: &[Rat]) -> Result<Vec<Rat>> {
        if u.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: u.len(),
            });
        }
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        let su: SparseVec = crate::linalg::sparse_from_dense(u);
        let sv: SparseVec = crate::linalg::sparse_from_dense(v);
        Ok(crate::linalg::sparse_to_dense(
            &self.bracket_sparse(&su, &sv),
            self.dim,
        ))
    }

    /// Human-readable basis label, e.g. `h1`, `e[1,1]`, `x[0,1]`.
    pub fn label_string(&self, idx: usize) -> String {
        let coords_str = |ri: usize| {
            let mut s = String::from("[");
            for (k, c) in self.rs.root(ri).coords().iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                let _ = write!(s, "{c}");
            }
            s.push(']');
            s
        };
        match self.labels[idx] {
            BasisLabel::H(i) => format!("h{}", i + 1),
            BasisLabel::T(i) => format!("t{}", i + 1),
            BasisLabel::E(ri) => format!("e{}", coords_str(ri)),
            BasisLabel::X(p) => format!("x{}", coords_str(self.rs.positive_index(p))),
            BasisLabel::Y(p) => format!("y{}", coords_str(self.rs.positive_index(p))),
        }
    }
}

/// For every positive non-simple root, its extraspecial decomposition: the
/// additive decomposition into positive roots whose first member is minimal
/// in the global root order. Keys and values are root indices.
pub(crate) fn extraspecial_pairs(rs: &RootSystem) -> HashMap<usize, (usize, usize)> {
    let npos = rs.positive_count();
    let mut extraspecial = HashMap::new();
    for a in 0..npos {
        let ia = rs.positive_index(a);
        for b in (a + 1)..npos {
            let ib = rs.positive_index(b);
            let sum: Vec<i64> = rs
                .root(ia)
                .coords()
                .iter()
                .zip(rs.root(ib).coords())
                .map(|(x, y)| x + y)
                .collect();
            if let Some(ie) = rs.root_index(&sum) {
                // first pair found has minimal first member: roots are
                // sorted, so ascending `a` visits candidates in order
                extraspecial.entry(ie).or_insert((ia, ib));
            }
        }
    }
    extraspecial
}

/// Structure constants `N_{α,β}` from extraspecial-pair signs plus the
/// standard reduction identities.
struct NTable<'a> {
    rs: &'a RootSystem,
    /// per root index of a positive non-simple root: its extraspecial pair
    extraspecial: HashMap<usize, (usize, usize)>,
    memo: HashMap<(usize, usize), Rat>,
}

impl<'a> NTable<'a> {
    fn new(rs: &'a RootSystem) -> Self {
        NTable {
            rs,
            extraspecial: extraspecial_pairs(rs),
            memo: HashMap::new(),
        }
    }

    fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        let sum: Vec<i64> = self
            .rs
            .root(a)
            .coords()
            .iter()
            .zip(self.rs.root(b).coords())
            .map(|(x, y)| x + y)
            .collect();
        self.rs.root_index(&sum)
    }

    fn squared_len(&self, idx: usize) -> Rat {
        let c = self.rs.root(idx).coords();
        self.rs.form(c, c)
    }

    /// Length of the `a`-string below `b`: the largest `k` with `b - kα` a root.
    fn string_down(&self, a: usize, b: usize) -> i64 {
        let ac = self.rs.root(a).coords();
        let mut cur: Vec<i64> = self.rs.root(b).coords().to_vec();
        let mut k = 0;
        loop {
            for (x, y) in cur.iter_mut().zip(ac) {
                *x -= y;
            }
            if self.rs.root_index(&cur).is_none() {
                return k;
            }
            k += 1;
        }
    }

    /// `N_{a,b}`; precondition: `root(a) + root(b)` is a root.
    fn n(&mut self, a: usize, b: usize) -> Rat {
        if let Some(v) = self.memo.get(&(a, b)) {
            return v.clone();
        }
        let v = self.compute(a, b);
        self.memo.insert((a, b), v.clone());
        v
    }

    fn compute(&mut self, a: usize, b: usize) -> Rat {
        let pos_a = self.rs.root(a).is_positive();
        let pos_b = self.rs.root(b).is_positive();
        match (pos_a, pos_b) {
            (false, false) => -self.n(self.rs.negation_index(a), self.rs.negation_index(b)),
            (false, true) => -self.n(b, a),
            (true, false) => {
                // triple a + b + c = 0 with c = -(a+b); reduce to a pair of
                // positive roots via  N(x,y)/(z,z) = N(y,z)/(x,x) = N(z,x)/(y,y)
                let s = self.sum_index(a, b).expect("precondition: sum is a root");
                let c = self.rs.negation_index(s);
                if self.rs.root(s).is_positive() {
                    // N(a,b) = N(b,c)·(c,c)/(a,a) and N(b,c) = -N(-b,-c)
                    let nb = self.rs.negation_index(b);
                    let nc = s;
                    let factor = self.squared_len(c) / self.squared_len(a);
                    -self.n(nb, nc) * factor
                } else {
                    // N(a,b) = N(c,a)·(c,c)/(b,b), with c and a positive
                    let factor = self.squared_len(c) / self.squared_len(b);
                    self.n(c, a) * factor
                }
            }
            (true, true) => {
                if a > b {
                    return -self.n(b, a);
                }
                let eps = self.sum_index(a, b).expect("precondition: sum is a root");
                let (g, d) = *self
                    .extraspecial
                    .get(&eps)
                    .expect("positive non-simple root has a decomposition");
                if (g, d) == (a, b) {
                    return rat(self.string_down(a, b) + 1);
                }
                // four-root Jacobi reduction against the extraspecial pair:
                //   N(a,b)·N(-γ,ε) = N(-γ,b)·N(a,b-γ) + N(a,-γ)·N(b,a-γ)
                let ng = self.rs.negation_index(g);
                let mut acc = Rat::zero();
                if let Some(bg) = self.sum_index(b, ng) {
                    let t1 = self.n(ng, b);
                    let t2 = self.n(a, bg);
                    acc += t1 * t2;
                }
                if let Some(ag) = self.sum_index(a, ng) {
                    let t1 = self.n(a, ng);
                    let t2 = self.n(b, ag);
                    acc += t1 * t2;
                }
                let den = self.n(ng, eps);
                assert!(!den.is_zero(), "extraspecial constant cannot vanish");
                acc / den
            }
        }
    }
}

/// Builds the Chevalley-basis algebra of a root system: basis
/// `{h_i} ∪ {e_α}` with `[h_i,e_α] = ⟨α,α_i^∨⟩e_α`, `[e_α,e_{-α}] = h_α`,
/// and `[e_α,e_β] = N_{α,β} e_{α+β}`.
///
/// Panics if the deterministic sign assignment fails its own consistency
/// certification (integrality of all constants, Jacobi identity); that is a
/// bug, not an input condition.
pub fn chevalley_algebra(rs: Arc<RootSystem>) -> LieAlgebra {
    let r = rs.rank();
    let nroots = rs.roots().len();
    let dim = r + nroots;
    let mut labels = Vec::with_capacity(dim);
    for i in 0..r {
        labels.push(BasisLabel::H(i));
    }
    for ri in 0..nroots {
        labels.push(BasisLabel::E(ri));
    }

    let mut ntable = NTable::new(&rs);
    let mut table = vec![SparseVec::new(); dim * (dim - 1) / 2];
    for i in 0..dim {
        for j in (i + 1)..dim {
            let entry = match (labels[i], labels[j]) {
                (BasisLabel::H(_), BasisLabel::H(_)) => SparseVec::new(),
                (BasisLabel::H(hi), BasisLabel::E(ri)) => {
                    let c = rs.pairing_with_simple_coroot(rs.root(ri).coords(), hi);
                    if c == 0 {
                        SparseVec::new()
                    } else {
                        vec![(j, rat(c))]
                    }
                }
                (BasisLabel::E(ra), BasisLabel::E(rb)) => {
                    if rs.negation_index(ra) == rb {
                        rs.coroot_coords(ra)
                            .into_iter()
                            .enumerate()
                            .filter(|(_, c)| *c != 0)
                            .map(|(k, c)| (k, rat(c)))
                            .collect()
                    } else if let Some(rsum) = ntable.sum_index(ra, rb) {
                        let n = ntable.n(ra, rb);
                        let n_int = expect_int(&n); // constants must be integral
                        assert!(n_int != 0, "structure constant of a root sum is nonzero");
                        vec![(r + rsum, rat(n_int))]
                    } else {
                        SparseVec::new()
                    }
                }
                _ => unreachable!("label order is H then E"),
            };
            table[ut_index(i, j, dim)] = entry;
        }
    }

    let algebra = LieAlgebra {
        rs,
        form: AlgebraForm::Chevalley,
        labels,
        dim,
        table,
        parent: None,
    };
    certify_jacobi(&algebra);
    algebra
}

/// Construction-time Jacobi certification: exhaustive for dimension ≤ 52,
/// otherwise all triples touching a Cartan generator plus a seeded sample.
fn certify_jacobi(l: &LieAlgebra) {
    let scope = if l.dim <= 52 {
        JacobiScope::Exhaustive
    } else {
        JacobiScope::Sampled {
            samples: 20_000,
            seed: 0x5EED,
        }
    };
    let report = jacobi_check(l, scope);
    assert!(
        report.failure.is_none(),
        "Jacobi identity failed on basis triple {:?}",
        report.failure
    );
}

fn qi_mul(a: &(Rat, Rat), b: &(Rat, Rat)) -> (Rat, Rat) {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

/// Derives the compact real form of a Chevalley-form algebra on the basis
/// `{t_k = i·h_k} ∪ {x_α = e_α - e_{-α}, y_α = i(e_α + e_{-α})}`, expanding
/// symbolically over ℚ[i] and projecting back to real structure constants.
pub fn compact_form(chev: &Arc<LieAlgebra>) -> Result<LieAlgebra> {
    if chev.form != AlgebraForm::Chevalley {
        return Err(Error::WrongForm {
            expected: "Chevalley-form",
        });
    }
    let rs = Arc::clone(&chev.rs);
    let r = rs.rank();
    let npos = rs.positive_count();
    let dim = r + 2 * npos;
    assert_eq!(dim, chev.dim);

    let mut labels = Vec::with_capacity(dim);
    for i in 0..r {
        labels.push(BasisLabel::T(i));
    }
    for p in 0..npos {
        labels.push(BasisLabel::X(p));
        labels.push(BasisLabel::Y(p));
    }

    // expansion of each compact basis vector over the Chevalley basis, with
    // ℚ[i] coefficients (re, im)
    let expansion: Vec<Vec<(usize, (Rat, Rat))>> = labels
        .iter()
        .map(|label| match *label {
            BasisLabel::T(i) => vec![(i, (rat(0), rat(1)))],
            BasisLabel::X(p) => {
                let ip = rs.positive_index(p);
                let im = rs.negation_index(ip);
                vec![
                    (chev.e_index(ip), (rat(1), rat(0))),
                    (chev.e_index(im), (rat(-1), rat(0))),
                ]
            }
            BasisLabel::Y(p) => {
                let ip = rs.positive_index(p);
                let im = rs.negation_index(ip);
                vec![
                    (chev.e_index(ip), (rat(0), rat(1))),
                    (chev.e_index(im), (rat(0), rat(1))),
                ]
            }
            _ => unreachable!(),
        })
        .collect();

    // index of the e-coefficient slot for each root, in the complex result
    let e_slot = |ri: usize| r + ri;

    let mut table = vec![SparseVec::new(); dim * (dim - 1) / 2];
    let mut acc: Vec<(Rat, Rat)> = vec![(rat(0), rat(0)); dim];
    let mut touched: Vec<usize> = Vec::with_capacity(16);
    for i in 0..dim {
        for j in (i + 1)..dim {
            for idx in touched.drain(..) {
                acc[idx] = (rat(0), rat(0));
            }
            for (ia, ca) in &expansion[i] {
                for (ib, cb) in &expansion[j] {
                    let coeff = qi_mul(ca, cb);
                    if coeff.0.is_zero() && coeff.1.is_zero() {
                        continue;
                    }
                    let Some((row, flip)) = chev.bracket_basis_view(*ia, *ib) else {
                        continue;
                    };
                    for (k, v) in row {
                        let (re, im) = (&coeff.0 * v, &coeff.1 * v);
                        let slot = &mut acc[*k];
                        if slot.0.is_zero() && slot.1.is_zero() {
                            touched.push(*k);
                        }
                        if flip {
                            slot.0 -= re;
                            slot.1 -= im;
                        } else {
                            slot.0 += re;
                            slot.1 += im;
                        }
                    }
                }
            }
            // project onto the compact basis; imaginary leftovers mean the
            // construction is broken
            let mut out: SparseVec = Vec::new();
            touched.sort_unstable();
            for &k in &touched {
                if k >= r {
                    continue;
                }
                let (re, im) = &acc[k];
                assert!(re.is_zero(), "Cartan coefficient must be purely imaginary");
                if !im.is_zero() {
                    out.push((k, im.clone()));
                }
            }
            let mut pos_slots: Vec<usize> = touched
                .iter()
                .filter(|&&k| k >= r)
                .map(|&k| {
                    let ri = k - r;
                    if rs.root(ri).is_positive() {
                        ri
                    } else {
                        rs.negation_index(ri)
                    }
                })
                .collect();
            pos_slots.sort_unstable();
            pos_slots.dedup();
            for ri in pos_slots {
                let p = ri - rs.positive_index(0);
                let ineg = rs.negation_index(ri);
                let cp = acc[e_slot(ri)].clone();
                let cm = acc[e_slot(ineg)].clone();
                // c₊e_α + c₋e_{-α} = ((c₊-c₋)/2)x + (-i(c₊+c₋)/2)y
                assert_eq!(cp.1, cm.1, "x coefficient must be real");
                assert_eq!(cp.0, -cm.0.clone(), "y coefficient must be real");
                let xc = (&cp.0 - &cm.0) / rat(2);
                let yc = (&cp.1 + &cm.1) / rat(2);
                if !xc.is_zero() {
                    out.push((r + 2 * p, xc));
                }
                if !yc.is_zero() {
                    out.push((r + 2 * p + 1, yc));
                }
            }
            out.sort_by_key(|(k, _)| *k);
            table[ut_index(i, j, dim)] = out;
        }
    }

    let algebra = LieAlgebra {
        rs,
        form: AlgebraForm::Compact,
        labels,
        dim,
        table,
        parent: Some(Arc::clone(chev)),
    };
    certify_jacobi(&algebra);
    Ok(algebra)
}

/// Symmetric invariant bilinear form over the algebra basis.
#[derive(Debug, Clone)]
pub struct BilinearForm {
    pub matrix: Matrix,
}

/// Killing form `B(u,v) = tr(ad u ∘ ad v)`, computed from the adjoint action
/// with exact arithmetic.
pub fn killing_form(l: &LieAlgebra) -> BilinearForm {
    let n = l.dim;
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            // tr(ad_i ∘ ad_j) = Σ_k  coefficient of b_k in [b_i,[b_j,b_k]]
            let mut tr = Rat::zero();
            for k in 0..n {
                let Some((inner, flip)) = l.bracket_basis_view(j, k) else {
                    continue;
                };
                for (idx, c) in inner {
                    if let Some(v) = l.bracket_basis_coeff(i, *idx, k) {
                        if flip {
                            tr -= c * v;
                        } else {
                            tr += c * v;
                        }
                    }
                }
            }
            m.set(i, j, tr.clone());
            if i != j {
                m.set(j, i, tr);
            }
        }
    }
    BilinearForm { matrix: m }
}

/// True iff the form is negative definite, decided by exact pivots.
pub fn is_negative_definite(b: &BilinearForm) -> Result<bool> {
    matrix_is_negative_definite(&b.matrix)
}

/// How much of the Jacobi identity to check.
#[derive(Debug, Clone, Copy)]
pub enum JacobiScope {
    /// all unordered basis triples
    Exhaustive,
    /// all triples containing a Cartan generator plus a seeded random sample
    Sampled { samples: u64, seed: u64 },
}

#[derive(Debug, Clone)]
pub struct JacobiReport {
    pub triples_checked: u64,
    pub failure: Option<(usize, usize, usize)>,
}

fn jacobi_triple_holds(l: &LieAlgebra, i: usize, j: usize, k: usize) -> bool {
    let mut acc: SparseVec = Vec::new();
    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
        let inner = l.bracket_basis(a, b);
        for (idx, v) in &inner {
            l.bracket_basis_scaled_into(c, *idx, &-v.clone(), &mut acc);
        }
    }
    acc.is_empty()
}

/// Checks the Jacobi identity on basis triples at the requested scope.
pub fn jacobi_check(l: &LieAlgebra, scope: JacobiScope) -> JacobiReport {
    let n = l.dim;
    let mut checked = 0u64;
    match scope {
        JacobiScope::Exhaustive => {
            for i in 0..n {
                for j in (i + 1)..n {
                    for k in (j + 1)..n {
                        checked += 1;
                        if !jacobi_triple_holds(l, i, j, k) {
                            return JacobiReport {
                                triples_checked: checked,
                                failure: Some((i, j, k)),
                            };
                        }
                    }
                }
            }
        }
        JacobiScope::Sampled { samples, seed } => {
            let r = l.rank();
            for h in 0..r {
                for j in 0..n {
                    for k in (j + 1)..n {
                        if j == h || k == h {
                            continue;
                        }
                        checked += 1;
                        if !jacobi_triple_holds(l, h, j, k) {
                            return JacobiReport {
                                triples_checked: checked,
                                failure: Some((h, j, k)),
                            };
                        }
                    }
                }
            }
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut drawn = 0u64;
            while drawn < samples {
                let i = (rng.next_u64() % n as u64) as usize;
                let j = (rng.next_u64() % n as u64) as usize;
                let k = (rng.next_u64() % n as u64) as usize;
                if i == j || j == k || i == k {
                    continue;
                }
                drawn += 1;
                checked += 1;
                if !jacobi_triple_holds(l, i, j, k) {
                    return JacobiReport {
                        triples_checked: checked,
                        failure: Some((i, j, k)),
                    };
                }
            }
        }
    }
    JacobiReport {
        triples_checked: checked,
        failure: None,
    }
}

/// Default certification scope used by the verification suite: exhaustive up
/// to dimension 52, sampled above.
pub fn default_jacobi_scope(dim: usize) -> JacobiScope {
    if dim <= 52 {
        JacobiScope::Exhaustive
    } else {
        JacobiScope::Sampled {
            samples: 100_000,
            seed: 0x5EED,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::{build_root_system, cartan_matrix, TypeLetter};

    fn chev(letter: TypeLetter, rank: usize) -> Arc<LieAlgebra> {
        let rs = Arc::new(build_root_system(cartan_matrix(letter, rank).unwrap()).unwrap());
        Arc::new(chevalley_algebra(rs))
    }

    fn dense_unit(dim: usize, i: usize) -> Vec<Rat> {
        let mut v = vec![rat(0); dim];
        v[i] = rat(1);
        v
    }

    #[test]
    fn sl2_relations() {
        let l = chev(TypeLetter::A, 1);
        // basis: h, e_{-α}, e_α
        let h = dense_unit(3, 0);
        let f = dense_unit(3, 1);
        let e = dense_unit(3, 2);
        assert_eq!(l.bracket(&h, &e).unwrap(), vec![rat(0), rat(0), rat(2)]);
        assert_eq!(l.bracket(&h, &f).unwrap(), vec![rat(0), rat(-2), rat(0)]);
        assert_eq!(l.bracket(&e, &f).unwrap(), vec![rat(1), rat(0), rat(0)]);
    }

    #[test]
    fn bracket_rejects_length_mismatch() {
        let l = chev(TypeLetter::A, 1);
        let short = vec![rat(1)];
        assert!(matches!(
            l.bracket(&short, &short),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn a2_constants_are_unit() {
        let l = chev(TypeLetter::A, 2);
        let rs = l.root_system();
        for a in 0..rs.roots().len() {
            for b in 0..rs.roots().len() {
                if a == b || rs.negation_index(a) == b {
                    continue;
                }
                let sum: Vec<i64> = rs
                    .root(a)
                    .coords()
                    .iter()
                    .zip(rs.root(b).coords())
                    .map(|(x, y)| x + y)
                    .collect();
                if rs.root_index(&sum).is_some() {
                    let br = l.bracket_basis(l.e_index(a), l.e_index(b));
                    assert_eq!(br.len(), 1);
                    assert!(br[0].1 == rat(1) || br[0].1 == rat(-1), "{:?}", br);
                }
            }
        }
    }

    #[test]
    fn g2_constants_match_string_lengths() {
        let l = chev(TypeLetter::G, 2);
        let rs = l.root_system();
        let mut magnitudes = std::collections::BTreeSet::new();
        for a in 0..rs.roots().len() {
            for b in 0..rs.roots().len() {
                if a == b || rs.negation_index(a) == b {
                    continue;
                }
                let sum: Vec<i64> = rs
                    .root(a)
                    .coords()
                    .iter()
                    .zip(rs.root(b).coords())
                    .map(|(x, y)| x + y)
                    .collect();
                if rs.root_index(&sum).is_none() {
                    continue;
                }
                let br = l.bracket_basis(l.e_index(a), l.e_index(b));
                assert_eq!(br.len(), 1);
                let n = expect_int(&br[0].1).abs();
                // independent oracle: |N| = p + 1 with p the string length
                let mut p = 0i64;
                let mut cur: Vec<i64> = rs.root(b).coords().to_vec();
                loop {
                    for (x, y) in cur.iter_mut().zip(rs.root(a).coords()) {
                        *x -= y;
                    }
                    if rs.root_index(&cur).is_none() {
                        break;
                    }
                    p += 1;
                }
                assert_eq!(n, p + 1, "roots {a},{b}");
                magnitudes.insert(n);
            }
        }
        assert!(magnitudes.contains(&2));
        assert_eq!(magnitudes.iter().max(), Some(&3));
    }

    #[test]
    fn jacobi_exhaustive_small_types() {
        for (letter, rank) in [
            (TypeLetter::A, 3),
            (TypeLetter::B, 3),
            (TypeLetter::C, 3),
            (TypeLetter::D, 4),
            (TypeLetter::G, 2),
        ] {
            let l = chev(letter, rank);
            let report = jacobi_check(&l, JacobiScope::Exhaustive);
            assert!(report.failure.is_none(), "{letter}{rank}");
        }
    }

    #[test]
    fn compact_form_dimension_and_relations() {
        let l = chev(TypeLetter::A, 1);
        let c = Arc::new(compact_form(&l).unwrap());
        assert_eq!(c.dimension(), 3);
        // basis: t, x, y
        let t = dense_unit(3, 0);
        let x = dense_unit(3, 1);
        let y = dense_unit(3, 2);
        assert_eq!(c.bracket(&t, &x).unwrap(), vec![rat(0), rat(0), rat(2)]);
        assert_eq!(c.bracket(&t, &y).unwrap(), vec![rat(0), rat(-2), rat(0)]);
        assert_eq!(c.bracket(&x, &y).unwrap(), vec![rat(2), rat(0), rat(0)]);
    }

    #[test]
    fn compact_form_requires_chevalley_input() {
        let l = chev(TypeLetter::A, 1);
        let c = Arc::new(compact_form(&l).unwrap());
        assert!(matches!(compact_form(&c), Err(Error::WrongForm { .. })));
    }

    #[test]
    fn killing_form_a1() {
        // independent oracle: explicit 3×3 adjoint matrices of sl2 over
        // (h, f, e) give tr(ad h ∘ ad h) = 8, tr(ad e ∘ ad f) = 4
        let l = chev(TypeLetter::A, 1);
        let b = killing_form(&l);
        assert_eq!(b.matrix.get(0, 0), &rat(8));
        assert_eq!(b.matrix.get(1, 2), &rat(4));
        assert_eq!(b.matrix.get(2, 1), &rat(4));
        assert_eq!(b.matrix.get(1, 1), &rat(0));
        assert!(!is_negative_definite(&b).unwrap());
    }

    #[test]
    fn killing_form_compact_a1_is_minus_eight_identity() {
        let l = chev(TypeLetter::A, 1);
        let c = compact_form(&l).unwrap();
        let b = killing_form(&c);
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { rat(-8) } else { rat(0) };
                assert_eq!(b.matrix.get(i, j), &expected);
            }
        }
        assert!(is_negative_definite(&b).unwrap());
    }

    #[test]
    fn compact_killing_diagonal_matches_dual_coxeter_number() {
        // independent oracle: B(x_α, x_α) = B(y_α, y_α) = -8h∨/(α,α) and
        // B(t_i, t_i) = -8h∨/(α_i,α_i), with the dual Coxeter numbers h∨
        // taken from the classification (they appear nowhere in the
        // implementation)
        let dual_coxeter = |letter: TypeLetter, rank: usize| -> i64 {
            match letter {
                TypeLetter::A => rank as i64 + 1,
                TypeLetter::B => 2 * rank as i64 - 1,
                TypeLetter::C => rank as i64 + 1,
                TypeLetter::D => 2 * rank as i64 - 2,
                TypeLetter::E => [12, 18, 30][rank - 6],
                TypeLetter::F => 9,
                TypeLetter::G => 4,
            }
        };
        for (letter, rank) in [
            (TypeLetter::A, 1),
            (TypeLetter::A, 3),
            (TypeLetter::B, 2),
            (TypeLetter::B, 3),
            (TypeLetter::C, 3),
            (TypeLetter::D, 4),
            (TypeLetter::F, 4),
            (TypeLetter::G, 2),
        ] {
            let l = chev(letter, rank);
            let c = compact_form(&l).unwrap();
            let rs = c.root_system();
            let b = killing_form(&c);
            let h = rat(8 * dual_coxeter(letter, rank));
            for (i, label) in c.labels().iter().enumerate() {
                let halfnorm = match label {
                    BasisLabel::T(k) => rs.simple_root_halfnorm(*k).clone(),
                    BasisLabel::X(p) | BasisLabel::Y(p) => {
                        let coords = rs.root(rs.positive_index(*p)).coords();
                        rs.form(coords, coords) / rat(2)
                    }
                    _ => unreachable!("compact basis"),
                };
                let expected = -&h / (rat(2) * halfnorm);
                assert_eq!(
                    b.matrix.get(i, i),
                    &expected,
                    "{letter}{rank} basis {}",
                    c.label_string(i)
                );
            }
        }
    }

    #[test]
    fn killing_form_invariance() {
        for (letter, rank) in [(TypeLetter::A, 2), (TypeLetter::B, 2), (TypeLetter::G, 2)] {
            let l = chev(letter, rank);
            let c = compact_form(&l).unwrap();
            for alg in [&*l, &c] {
                let b = killing_form(alg);
                let n = alg.dimension();
                // B([x,y],z) + B(y,[x,z]) = 0 on all basis triples
                for x in 0..n {
                    for y in 0..n {
                        let bxy = alg.bracket_basis(x, y);
                        for z in 0..n {
                            let bxz = alg.bracket_basis(x, z);
                            let mut lhs = Rat::zero();
                            for (k, v) in &bxy {
                                lhs += v * b.matrix.get(*k, z);
                            }
                            for (k, v) in &bxz {
                                lhs += v * b.matrix.get(y, *k);
                            }
                            assert!(lhs.is_zero(), "{letter}{rank} ({x},{y},{z})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn killing_cartan_block_proportional_to_coroot_pairing() {
        for (letter, rank) in [(TypeLetter::A, 2), (TypeLetter::B, 2), (TypeLetter::G, 2)] {
            let l = chev(letter, rank);
            let rs = l.root_system();
            let b = killing_form(&l);
            let mut scale: Option<Rat> = None;
            for i in 0..rank {
                for j in 0..rank {
                    let mut si = vec![0i64; rank];
                    si[i] = 1;
                    let mut sj = vec![0i64; rank];
                    sj[j] = 1;
                    // (α_i^∨, α_j^∨) = (α_i,α_j)/(d_i d_j)
                    let pairing = rs.form(&si, &sj)
                        / (rs.simple_root_halfnorm(i) * rs.simple_root_halfnorm(j));
                    let entry = b.matrix.get(i, j).clone();
                    if pairing.is_zero() {
                        assert!(entry.is_zero());
                        continue;
                    }
                    let ratio = entry / pairing;
                    match &scale {
                        None => {
                            assert!(ratio > Rat::zero());
                            scale = Some(ratio);
                        }
                        Some(s) => assert_eq!(&ratio, s, "{letter}{rank} ({i},{j})"),
                    }
                }
            }
        }
    }

    #[test]
    fn compact_killing_negative_definite_small_types() {
        for (letter, rank) in [
            (TypeLetter::A, 1),
            (TypeLetter::A, 2),
            (TypeLetter::B, 2),
            (TypeLetter::G, 2),
        ] {
            let l = chev(letter, rank);
            let c = compact_form(&l).unwrap();
            let b = killing_form(&c);
            assert!(is_negative_definite(&b).unwrap(), "{letter}{rank}");
        }
    }
}
