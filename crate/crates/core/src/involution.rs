//! Involutive automorphisms of compact simple Lie algebras and their
//! eigenspace decompositions 𝔤 = 𝔨 ⊕ 𝔪.
//!
//! Two construction routes are provided: inner involutions acting by
//! `(-1)^{⟨α, c⟩}` on root planes for a 0/1 coweight `c`, and lifts of
//! Dynkin-diagram symmetries. Every returned automorphism is certified to
//! preserve brackets on all basis pairs before it escapes this module; a
//! certification failure is a bug and panics.
//!
//! The geodesic symmetry `X ↦ -X` is not an algebra automorphism and is
//! handled only at the tangent level, via [`TangentReflections`].

use std::sync::Arc;

use num_traits::One;

use crate::chevalley::{extraspecial_pairs, AlgebraForm, BasisLabel, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{expect_int, kernel, rat, Matrix, Rat, SparseVec, Subspace};

/// What generated an automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutomorphismKind {
    /// 0/1 vector over the fundamental coweights
    InnerCoweight(Vec<u8>),
    /// images of the Dynkin nodes, 0-based
    Diagram(Vec<usize>),
}

/// A bracket-preserving linear map of a compact simple Lie algebra,
/// certified on construction.
#[derive(Debug, Clone)]
pub struct Automorphism {
    algebra: Arc<LieAlgebra>,
    kind: AutomorphismKind,
    /// sparse columns: image of each basis vector
    cols: Vec<SparseVec>,
    involutive: bool,
}

impl Automorphism {
    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn kind(&self) -> &AutomorphismKind {
        &self.kind
    }

    pub fn is_involutive(&self) -> bool {
        self.involutive
    }

    /// Image of basis vector `i`.
    pub fn column(&self, i: usize) -> &SparseVec {
        &self.cols[i]
    }

    pub fn apply_sparse(&self, v: &SparseVec) -> SparseVec {
        let mut acc: SparseVec = Vec::new();
        for (k, c) in v {
            acc = crate::linalg::sparse_add_scaled(&acc, &self.cols[*k], c);
        }
        acc
    }

    /// Dense matrix over the algebra basis (columns are basis images).
    pub fn matrix(&self) -> Matrix {
        let n = self.cols.len();
        let mut m = Matrix::zeros(n, n);
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                m.set(*i, j, v.clone());
            }
        }
        m
    }
}

fn unit(i: usize) -> SparseVec {
    vec![(i, Rat::one())]
}

/// Panics unless `cols` defines a bracket-preserving map; the constructions
/// in this module guarantee it, so a failure is a bug.
fn certify_bracket_preservation(l: &LieAlgebra, cols: &[SparseVec], what: &str) {
    let n = l.dimension();
    for i in 0..n {
        for j in (i + 1)..n {
            let lhs = {
                let br = l.bracket_basis(i, j);
                let mut acc: SparseVec = Vec::new();
                for (k, c) in &br {
                    acc = crate::linalg::sparse_add_scaled(&acc, &cols[*k], c);
                }
                acc
            };
            let rhs = l.bracket_sparse(&cols[i], &cols[j]);
            assert_eq!(
                lhs, rhs,
                "{what}: bracket preservation failed on basis pair ({i},{j})"
            );
        }
    }
}

fn check_involutive(cols: &[SparseVec]) -> bool {
    cols.iter().enumerate().all(|(i, col)| {
        let mut acc: SparseVec = Vec::new();
        for (k, c) in col {
            acc = crate::linalg::sparse_add_scaled(&acc, &cols[*k], c);
        }
        acc == unit(i)
    })
}

/// Inner involution attached to a nonzero 0/1 coweight vector: identity on
/// the Cartan part, `(-1)^{⟨α, c⟩}` on the root plane of `α`.
pub fn inner_involution(l: &Arc<LieAlgebra>, coweight: &[u8]) -> Result<Automorphism> {
    if l.form_kind() != AlgebraForm::Compact {
        return Err(Error::WrongForm {
            expected: "compact-form",
        });
    }
    let rank = l.rank();
    if coweight.len() != rank || coweight.iter().all(|&c| c == 0) || coweight.iter().any(|&c| c > 1)
    {
        return Err(Error::BadCoweight { rank });
    }
    let rs = l.root_system();
    let cols: Vec<SparseVec> = l
        .labels()
        .iter()
        .enumerate()
        .map(|(idx, label)| match label {
            BasisLabel::T(_) => unit(idx),
            BasisLabel::X(p) | BasisLabel::Y(p) => {
                let coords = rs.root(rs.positive_index(*p)).coords();
                let pairing: i64 = coords
                    .iter()
                    .zip(coweight)
                    .map(|(m, &c)| m * i64::from(c))
                    .sum();
                if pairing % 2 == 0 {
                    unit(idx)
                } else {
                    vec![(idx, -Rat::one())]
                }
            }
            _ => unreachable!("compact basis"),
        })
        .collect();
    certify_bracket_preservation(l, &cols, "inner involution");
    let involutive = check_involutive(&cols);
    assert!(involutive, "diagonal ±1 map must be involutive");
    Ok(Automorphism {
        algebra: Arc::clone(l),
        kind: AutomorphismKind::InnerCoweight(coweight.to_vec()),
        cols,
        involutive,
    })
}

/// Lift of a Dynkin-diagram symmetry to the compact form.
///
/// The lift fixes the simple root vectors of the permuted nodes and extends
/// through the extraspecial decompositions, which forces a ±1 sign on every
/// root vector; bracket preservation is certified before returning. The
/// result is involutive exactly when the node permutation is.
pub fn diagram_automorphism(l: &Arc<LieAlgebra>, perm: &[usize]) -> Result<Automorphism> {
    if l.form_kind() != AlgebraForm::Compact {
        return Err(Error::WrongForm {
            expected: "compact-form",
        });
    }
    let rs = l.root_system();
    let rank = rs.rank();
    if perm.len() != rank {
        return Err(Error::NotDiagramSymmetry);
    }
    let mut seen = vec![false; rank];
    for &img in perm {
        if img >= rank || seen[img] {
            return Err(Error::NotDiagramSymmetry);
        }
        seen[img] = true;
    }
    for i in 0..rank {
        for j in 0..rank {
            if rs.cartan().entry(perm[i], perm[j]) != rs.cartan().entry(i, j) {
                return Err(Error::NotDiagramSymmetry);
            }
        }
    }
    let chev = l
        .parent()
        .expect("compact forms carry their Chevalley parent");

    // image of a root under the node permutation
    let permute_root = |ri: usize| -> usize {
        let coords = rs.root(ri).coords();
        let mut out = vec![0i64; rank];
        for (i, &m) in coords.iter().enumerate() {
            out[perm[i]] = m;
        }
        rs.root_index(&out)
            .expect("a diagram symmetry permutes the root set")
    };

    // signs on positive roots, by induction along extraspecial pairs
    let npos = rs.positive_count();
    let espec = extraspecial_pairs(rs);
    let mut signs: Vec<i64> = vec![0; npos];
    let read_n = |a: usize, b: usize| -> i64 {
        let sum: Vec<i64> = rs
            .root(a)
            .coords()
            .iter()
            .zip(rs.root(b).coords())
            .map(|(x, y)| x + y)
            .collect();
        let target = chev.e_index(rs.root_index(&sum).expect("sum of the pair is a root"));
        let br = chev.bracket_basis(chev.e_index(a), chev.e_index(b));
        let (_, v) = br
            .iter()
            .find(|(k, _)| *k == target)
            .expect("structure constant of a root sum is nonzero");
        expect_int(v)
    };
    for p in 0..npos {
        let ri = rs.positive_index(p);
        if rs.root(ri).height() == 1 {
            signs[p] = 1;
            continue;
        }
        let (g, d) = espec[&ri];
        let sg = signs[g - rs.positive_index(0)];
        let sd = signs[d - rs.positive_index(0)];
        debug_assert!(sg != 0 && sd != 0, "extraspecial members have lower height");
        let n_orig = read_n(g, d);
        let n_img = read_n(permute_root(g), permute_root(d));
        assert_eq!(n_orig.abs(), n_img.abs(), "symmetry preserves root strings");
        signs[p] = sg * sd * n_img / n_orig;
    }

    let cols: Vec<SparseVec> = l
        .labels()
        .iter()
        .map(|label| match label {
            BasisLabel::T(i) => unit(perm[*i]),
            BasisLabel::X(p) => {
                let q = permute_root(rs.positive_index(*p)) - rs.positive_index(0);
                vec![(l.x_index(q), rat(signs[*p]))]
            }
            BasisLabel::Y(p) => {
                let q = permute_root(rs.positive_index(*p)) - rs.positive_index(0);
                vec![(l.y_index(q), rat(signs[*p]))]
            }
            _ => unreachable!(),
        })
        .collect();
    certify_bracket_preservation(l, &cols, "diagram automorphism");
    let involutive = check_involutive(&cols);
    Ok(Automorphism {
        algebra: Arc::clone(l),
        kind: AutomorphismKind::Diagram(perm.to_vec()),
        cols,
        involutive,
    })
}

/// The +1 eigenspace of an involutive automorphism, certified closed under
/// the bracket.
pub fn fixed_subalgebra(l: &Arc<LieAlgebra>, a: &Automorphism) -> Result<Subspace> {
    if !a.is_involutive() {
        return Err(Error::NotInvolutive);
    }
    let n = l.dimension();
    let mut m = a.matrix();
    for i in 0..n {
        let v = m.get(i, i) - Rat::one();
        m.set(i, i, v);
    }
    let fixed = kernel(&m);
    for (i, ri) in fixed.basis_rows().iter().enumerate() {
        for rj in &fixed.basis_rows()[i..] {
            let br = l.bracket_sparse(ri, rj);
            assert!(
                fixed.contains(&br),
                "fixed space of an automorphism must be bracket-closed"
            );
        }
    }
    Ok(fixed)
}

/// Eigenspace decomposition 𝔤 = 𝔨 ⊕ 𝔪 of an involution, with the Cartan
/// relations `[𝔨,𝔨] ⊆ 𝔨`, `[𝔨,𝔪] ⊆ 𝔪`, `[𝔪,𝔪] ⊆ 𝔨` certified on basis pairs.
#[derive(Debug, Clone)]
pub struct SymmetricPair {
    pub algebra: Arc<LieAlgebra>,
    pub sigma: Automorphism,
    pub k: Subspace,
    pub m: Subspace,
}

pub fn symmetric_pair(l: &Arc<LieAlgebra>, a: &Automorphism) -> Result<SymmetricPair> {
    if !a.is_involutive() {
        return Err(Error::NotInvolutive);
    }
    let n = l.dimension();
    let mat = a.matrix();
    let mut minus = mat.clone();
    let mut plus = mat;
    for i in 0..n {
        let v = plus.get(i, i) - Rat::one();
        plus.set(i, i, v);
        let w = minus.get(i, i) + Rat::one();
        minus.set(i, i, w);
    }
    let k = kernel(&plus);
    let m = kernel(&minus);
    assert_eq!(k.dim() + m.dim(), n, "eigenspaces must span");
    let check = |a: &Subspace, b: &Subspace, target: &Subspace, what: &str| {
        for ri in a.basis_rows() {
            for rj in b.basis_rows() {
                let br = l.bracket_sparse(ri, rj);
                assert!(target.contains(&br), "Cartan relation {what} failed");
            }
        }
    };
    check(&k, &k, &k, "[k,k] ⊆ k");
    check(&k, &m, &m, "[k,m] ⊆ m");
    check(&m, &m, &k, "[m,m] ⊆ k");
    Ok(SymmetricPair {
        algebra: Arc::clone(l),
        sigma: a.clone(),
        k,
        m,
    })
}

/// Codimension of the Cartan-embedded image of `G/K` in `G`: the tangent
/// space of the embedded submanifold is 𝔪, so the codimension is `dim 𝔨`.
pub fn cartan_embedding_codim(pair: &SymmetricPair) -> usize {
    pair.k.dim()
}

/// The differentials at the identity of the geodesic reflections attached to
/// a symmetric pair: `d_sigma` is +1 on 𝔨 and -1 on 𝔪, `d_rho` the opposite.
/// Their composition is the geodesic symmetry `X ↦ -X`.
#[derive(Debug, Clone)]
pub struct TangentReflections {
    pub d_sigma: Matrix,
    pub d_rho: Matrix,
}

pub fn tangent_reflections(pair: &SymmetricPair) -> TangentReflections {
    let d_sigma = pair.sigma.matrix();
    let d_rho = d_sigma.scaled(&-Rat::one());
    let n = d_sigma.rows;
    let minus_id = Matrix::identity(n).scaled(&-Rat::one());
    assert_eq!(
        d_sigma.matmul(&d_rho),
        minus_id,
        "reflections must compose to the geodesic symmetry"
    );
    assert_eq!(
        d_rho.matmul(&d_sigma),
        minus_id,
        "composition in the other order is the geodesic symmetry too"
    );
    // eigenspaces of d_rho are exactly (m, k) in the (+, -) order
    let shift = |m: &Matrix, delta: Rat| {
        let mut out = m.clone();
        for i in 0..n {
            let v = out.get(i, i) + &delta;
            out.set(i, i, v);
        }
        out
    };
    assert_eq!(
        kernel(&shift(&d_rho, -Rat::one())),
        pair.m,
        "d_rho must fix exactly 𝔪"
    );
    assert_eq!(
        kernel(&shift(&d_rho, Rat::one())),
        pair.k,
        "d_rho must negate exactly 𝔨"
    );
    TangentReflections { d_sigma, d_rho }
}
