//! Root systems of the finite simple types, built from Cartan matrices.
//!
//! Conventions, fixed once here and used everywhere downstream:
//!
//! * Node numbering is Bourbaki. Chains are numbered `1..=r`; in `B_r` the
//!   short simple root is node `r`, in `C_r` the long one is node `r`, in
//!   `D_r` the fork nodes are `r-1` and `r`, in `E_r` node 2 is the branch
//!   node attached to node 4, in `F_4` nodes 1,2 are long, and in `G_2`
//!   node 1 is short. The public API uses 0-based node indices; the CLI and
//!   the data files use the 1-based Bourbaki labels.
//! * Cartan matrix entries are `a_ij = ⟨α_i, α_j^∨⟩ = 2(α_i,α_j)/(α_j,α_j)`.
//! * Roots are integer coordinate vectors over the simple roots.
//! * The symmetrized bilinear form is normalized so long roots have squared
//!   length 2.
//! * The root list is sorted by (height, lexicographic coordinates), so all
//!   downstream constructions are deterministic.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{expect_int, rat, Rat};

/// One of the simple type letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLetter {
    pub fn from_char(c: char) -> Option<TypeLetter> {
        match c.to_ascii_uppercase() {
            'A' => Some(TypeLetter::A),
            'B' => Some(TypeLetter::B),
            'C' => Some(TypeLetter::C),
            'D' => Some(TypeLetter::D),
            'E' => Some(TypeLetter::E),
            'F' => Some(TypeLetter::F),
            'G' => Some(TypeLetter::G),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            TypeLetter::A => 'A',
            TypeLetter::B => 'B',
            TypeLetter::C => 'C',
            TypeLetter::D => 'D',
            TypeLetter::E => 'E',
            TypeLetter::F => 'F',
            TypeLetter::G => 'G',
        }
    }
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Cartan matrix of a valid finite simple type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    letter: TypeLetter,
    rank: usize,
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn letter(&self) -> TypeLetter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// `⟨α_i, α_j^∨⟩`, 0-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }
}

fn invalid(letter: char, rank: usize, reason: &str) -> Error {
    Error::InvalidTypeRank {
        letter,
        rank,
        reason: reason.to_string(),
    }
}

/// Standard Cartan matrix of the given simple type, Bourbaki numbering.
///
/// Valid combinations: `A_r (r≥1)`, `B_r (r≥2)`, `C_r (r≥3)`, `D_r (r≥3)`,
/// `E_6, E_7, E_8`, `F_4`, `G_2`.
pub fn cartan_matrix(letter: TypeLetter, rank: usize) -> Result<CartanMatrix> {
    let c = letter.as_char();
    let mut m = match letter {
        TypeLetter::A => {
            if rank < 1 {
                return Err(invalid(c, rank, "A_r requires r ≥ 1"));
            }
            chain(rank)
        }
        TypeLetter::B => {
            if rank < 2 {
                return Err(invalid(c, rank, "B_r requires r ≥ 2"));
            }
            let mut m = chain(rank);
            m[rank - 2][rank - 1] = -2;
            m
        }
        TypeLetter::C => {
            if rank < 3 {
                return Err(invalid(
                    c,
                    rank,
                    "C_r requires r ≥ 3 (C_1 = A_1, C_2 = B_2)",
                ));
            }
            let mut m = chain(rank);
            m[rank - 1][rank - 2] = -2;
            m
        }
        TypeLetter::D => {
            if rank < 3 {
                return Err(invalid(c, rank, "D_r requires r ≥ 3 (D_2 is not simple)"));
            }
            let mut m = chain(rank - 1);
            for row in &mut m {
                row.push(0);
            }
            m.push(vec![0; rank]);
            m[rank - 1][rank - 1] = 2;
            // fork: node r attaches to node r-2
            m[rank - 3][rank - 1] = -1;
            m[rank - 1][rank - 3] = -1;
            m
        }
        TypeLetter::E => {
            if !(6..=8).contains(&rank) {
                return Err(invalid(c, rank, "E_r requires r ∈ {6,7,8}"));
            }
            let mut m = vec![vec![0; rank]; rank];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 2;
            }
            let mut edges = vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)];
            if rank >= 7 {
                edges.push((6, 7));
            }
            if rank == 8 {
                edges.push((7, 8));
            }
            for (a, b) in edges {
                m[a - 1][b - 1] = -1;
                m[b - 1][a - 1] = -1;
            }
            m
        }
        TypeLetter::F => {
            if rank != 4 {
                return Err(invalid(c, rank, "F_r requires r = 4"));
            }
            let mut m = chain(4);
            m[1][2] = -2;
            m
        }
        TypeLetter::G => {
            if rank != 2 {
                return Err(invalid(c, rank, "G_r requires r = 2"));
            }
            vec![vec![2, -1], vec![-3, 2]]
        }
    };
    normalize_diag(&mut m);
    let cm = CartanMatrix {
        letter,
        rank,
        entries: m,
    };
    validate(&cm)?;
    Ok(cm)
}

fn chain(rank: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; rank]; rank];
    for i in 0..rank {
        m[i][i] = 2;
        if i + 1 < rank {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    m
}

fn normalize_diag(m: &mut [Vec<i64>]) {
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
}

fn validate(cm: &CartanMatrix) -> Result<()> {
    let n = cm.rank;
    for i in 0..n {
        if cm.entries[i][i] != 2 {
            return Err(Error::NotFiniteType);
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            let a = cm.entries[i][j];
            if !(-3..=0).contains(&a) {
                return Err(Error::NotFiniteType);
            }
            if (a == 0) != (cm.entries[j][i] == 0) {
                return Err(Error::NotFiniteType);
            }
        }
    }
    // finite type: every leading principal minor is positive
    for k in 1..=n {
        if leading_minor(&cm.entries, k) <= Rat::zero() {
            return Err(Error::NotFiniteType);
        }
    }
    Ok(())
}

#[allow(clippy::needless_range_loop)]
fn leading_minor(m: &[Vec<i64>], k: usize) -> Rat {
    let mut a: Vec<Vec<Rat>> = (0..k)
        .map(|i| (0..k).map(|j| rat(m[i][j])).collect())
        .collect();
    let mut det = rat(1);
    for c in 0..k {
        let Some(p) = (c..k).find(|&i| !a[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let inv = a[c][c].recip();
        for i in (c + 1)..k {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..k {
                let v = &a[i][j] - &f * &a[c][j];
                a[i][j] = v;
            }
        }
    }
    det
}

/// A root, as an integer vector over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Root {
        Root { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.height() > 0
    }

    pub fn negate(&self) -> Root {
        Root {
            coords: self.coords.iter().map(|x| -x).collect(),
        }
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.height(), &self.coords).cmp(&(other.height(), &other.coords))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.coords
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// A finite root system: the full root set, the symmetrized form, and the
/// highest root.
#[derive(Debug)]
pub struct RootSystem {
    cartan: CartanMatrix,
    roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    positive_count: usize,
    highest_root: usize,
    /// half squared lengths of the simple roots, long = 1
    symmetrizer: Vec<Rat>,
}

const GENERATION_BOUND: usize = 10_000;

/// Generates the root system as the closure of the simple roots under all
/// simple reflections.
pub fn build_root_system(cartan: CartanMatrix) -> Result<RootSystem> {
    let r = cartan.rank();
    let symmetrizer = symmetrizer(&cartan);
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut roots: Vec<Root> = Vec::new();
    let mut queue: Vec<usize> = Vec::new();
    for i in 0..r {
        let mut coords = vec![0i64; r];
        coords[i] = 1;
        for root in [Root::new(coords.clone()), Root::new(coords).negate()] {
            let idx = roots.len();
            seen.insert(root.coords.clone(), idx);
            roots.push(root);
            queue.push(idx);
        }
    }
    while let Some(idx) = queue.pop() {
        for i in 0..r {
            let cur = &roots[idx];
            // ⟨α, α_i^∨⟩ = Σ_j m_j a_ji
            let pairing: i64 = cur
                .coords
                .iter()
                .enumerate()
                .map(|(j, m)| m * cartan.entry(j, i))
                .sum();
            let mut coords = cur.coords.clone();
            coords[i] -= pairing;
            if !seen.contains_key(&coords) {
                let new_idx = roots.len();
                if new_idx >= GENERATION_BOUND {
                    return Err(Error::NotFiniteType);
                }
                seen.insert(coords.clone(), new_idx);
                roots.push(Root::new(coords));
                queue.push(new_idx);
            }
        }
    }
    roots.sort();
    let index: HashMap<Vec<i64>, usize> = roots
        .iter()
        .enumerate()
        .map(|(i, root)| (root.coords.clone(), i))
        .collect();
    let positive_count = roots.iter().filter(|root| root.is_positive()).count();
    assert_eq!(roots.len(), 2 * positive_count, "roots must pair off");
    let highest_root = roots.len() - 1;
    assert!(
        roots[highest_root].height() > roots[highest_root - 1].height(),
        "highest root must be unique"
    );
    Ok(RootSystem {
        cartan,
        roots,
        index,
        positive_count,
        highest_root,
        symmetrizer,
    })
}

/// Solves `d_j a_ij = d_i a_ji` over the Dynkin graph and normalizes so the
/// largest value (the long roots) is 1.
fn symmetrizer(cartan: &CartanMatrix) -> Vec<Rat> {
    let r = cartan.rank();
    let mut d: Vec<Option<Rat>> = vec![None; r];
    d[0] = Some(rat(1));
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..r {
            if i == j || cartan.entry(i, j) == 0 || d[j].is_some() {
                continue;
            }
            let di = d[i].clone().unwrap();
            d[j] = Some(di * rat(cartan.entry(j, i)) / rat(cartan.entry(i, j)));
            stack.push(j);
        }
    }
    let d: Vec<Rat> = d
        .into_iter()
        .map(|x| x.expect("Dynkin diagram of a simple type is connected"))
        .collect();
    let max = d.iter().cloned().max().unwrap();
    d.into_iter().map(|x| x / &max).collect()
}

impl RootSystem {
    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn letter(&self) -> TypeLetter {
        self.cartan.letter()
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_count(&self) -> usize {
        self.positive_count
    }

    /// Positive roots occupy the upper half of the sorted root list.
    pub fn positive_index(&self, p: usize) -> usize {
        self.positive_count + p
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.roots[idx]
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn index_of(&self, root: &Root) -> Option<usize> {
        self.root_index(&root.coords)
    }

    pub fn negation_index(&self, idx: usize) -> usize {
        self.root_index(&self.roots[idx].negate().coords)
            .expect("root set is closed under negation")
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.highest_root]
    }

    pub fn highest_root_index(&self) -> usize {
        self.highest_root
    }

    /// Half squared length of simple root `i` (long roots: 1).
    pub fn simple_root_halfnorm(&self, i: usize) -> &Rat {
        &self.symmetrizer[i]
    }

    /// The symmetrized invariant form `(α, β)` on integer coordinate vectors.
    pub fn form(&self, a: &[i64], b: &[i64]) -> Rat {
        let mut acc = Rat::zero();
        for (i, &m) in a.iter().enumerate() {
            if m == 0 {
                continue;
            }
            for (j, &n) in b.iter().enumerate() {
                if n == 0 {
                    continue;
                }
                // (α_i, α_j) = d_j a_ij
                acc += rat(m * n * self.cartan.entry(i, j)) * &self.symmetrizer[j];
            }
        }
        acc
    }

    /// `⟨α, β^∨⟩ = 2(α,β)/(β,β)`; always an integer for roots.
    pub fn pairing(&self, a: &[i64], b: &[i64]) -> i64 {
        let num = rat(2) * self.form(a, b);
        let den = self.form(b, b);
        expect_int(&(num / den))
    }

    /// `⟨α, α_i^∨⟩` for a simple root, straight from the Cartan matrix.
    pub fn pairing_with_simple_coroot(&self, a: &[i64], i: usize) -> i64 {
        a.iter()
            .enumerate()
            .map(|(j, m)| m * self.cartan.entry(j, i))
            .sum()
    }

    /// Coordinates of the coroot `α^∨` over the simple coroots; integral for
    /// every root.
    pub fn coroot_coords(&self, idx: usize) -> Vec<i64> {
        let root = &self.roots[idx];
        let halfnorm = self.form(root.coords(), root.coords()) / rat(2);
        root.coords()
            .iter()
            .enumerate()
            .map(|(i, &m)| expect_int(&(rat(m) * &self.symmetrizer[i] / &halfnorm)))
            .collect()
    }
}

/// `rank + |roots|`, the dimension of the associated simple Lie algebra.
pub fn algebra_dimension(rs: &RootSystem) -> usize {
    rs.rank() + rs.roots().len()
}

/// Cartan matrix of the extended (affine) diagram: the simple nodes in their
/// usual order followed by the affine node `-θ` at index `rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedCartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl ExtendedCartanMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn affine_index(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }
}

#[allow(clippy::needless_range_loop)]
pub fn extended_cartan_matrix(rs: &RootSystem) -> ExtendedCartanMatrix {
    let r = rs.rank();
    let lowest = rs.highest_root().negate();
    let mut m = vec![vec![0i64; r + 1]; r + 1];
    for i in 0..r {
        for j in 0..r {
            m[i][j] = rs.cartan().entry(i, j);
        }
    }
    m[r][r] = 2;
    for (i, row) in m.iter_mut().enumerate().take(r) {
        let mut simple = vec![0i64; r];
        simple[i] = 1;
        row[r] = rs.pairing(&simple, lowest.coords());
    }
    for j in 0..r {
        let mut simple = vec![0i64; r];
        simple[j] = 1;
        m[r][j] = rs.pairing(lowest.coords(), &simple);
    }
    ExtendedCartanMatrix { entries: m }
}

/// Smallest subset of the root system containing the generators that is
/// closed under negation and under addition of roots (when the sum is again
/// a root). Returns sorted root indices.
pub fn root_subsystem_closure(rs: &RootSystem, generators: &[Root]) -> Result<Vec<usize>> {
    let mut set = std::collections::BTreeSet::new();
    for (i, g) in generators.iter().enumerate() {
        let idx = rs.index_of(g).ok_or(Error::GeneratorNotRoot { index: i })?;
        set.insert(idx);
        set.insert(rs.negation_index(idx));
    }
    loop {
        let members: Vec<usize> = set.iter().copied().collect();
        let mut grew = false;
        for (a, &ia) in members.iter().enumerate() {
            for &ib in &members[a + 1..] {
                let sum: Vec<i64> = rs
                    .root(ia)
                    .coords()
                    .iter()
                    .zip(rs.root(ib).coords())
                    .map(|(x, y)| x + y)
                    .collect();
                if let Some(idx) = rs.root_index(&sum) {
                    if set.insert(idx) {
                        set.insert(rs.negation_index(idx));
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return Ok(set.into_iter().collect());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;

    fn rs(letter: TypeLetter, rank: usize) -> RootSystem {
        build_root_system(cartan_matrix(letter, rank).unwrap()).unwrap()
    }

    #[test]
    fn standard_matrices() {
        assert_eq!(
            cartan_matrix(TypeLetter::A, 1).unwrap().entries(),
            &[vec![2]]
        );
        assert_eq!(
            cartan_matrix(TypeLetter::A, 2).unwrap().entries(),
            &[vec![2, -1], vec![-1, 2]]
        );
        assert_eq!(
            cartan_matrix(TypeLetter::G, 2).unwrap().entries(),
            &[vec![2, -1], vec![-3, 2]]
        );
        // B3: short node last
        let b3 = cartan_matrix(TypeLetter::B, 3).unwrap();
        assert_eq!(b3.entry(1, 2), -2);
        assert_eq!(b3.entry(2, 1), -1);
        // C3 is the transpose pattern
        let c3 = cartan_matrix(TypeLetter::C, 3).unwrap();
        assert_eq!(c3.entry(1, 2), -1);
        assert_eq!(c3.entry(2, 1), -2);
        // F4 double bond between 2 and 3
        let f4 = cartan_matrix(TypeLetter::F, 4).unwrap();
        assert_eq!(f4.entry(1, 2), -2);
        assert_eq!(f4.entry(2, 1), -1);
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(cartan_matrix(TypeLetter::A, 0).is_err());
        assert!(cartan_matrix(TypeLetter::B, 1).is_err());
        assert!(cartan_matrix(TypeLetter::C, 2).is_err());
        assert!(cartan_matrix(TypeLetter::D, 2).is_err());
        assert!(cartan_matrix(TypeLetter::E, 5).is_err());
        assert!(cartan_matrix(TypeLetter::E, 9).is_err());
        assert!(cartan_matrix(TypeLetter::F, 5).is_err());
        assert!(cartan_matrix(TypeLetter::G, 3).is_err());
    }

    #[test]
    fn root_counts() {
        let cases: &[(TypeLetter, usize, usize)] = &[
            (TypeLetter::A, 1, 2),
            (TypeLetter::A, 2, 6),
            (TypeLetter::A, 7, 56),
            (TypeLetter::B, 2, 8),
            (TypeLetter::B, 4, 32),
            (TypeLetter::C, 3, 18),
            (TypeLetter::D, 3, 12),
            (TypeLetter::D, 4, 24),
            (TypeLetter::E, 6, 72),
            (TypeLetter::E, 7, 126),
            (TypeLetter::E, 8, 240),
            (TypeLetter::F, 4, 48),
            (TypeLetter::G, 2, 12),
        ];
        for &(letter, rank, count) in cases {
            let system = rs(letter, rank);
            assert_eq!(system.roots().len(), count, "{letter}{rank}");
            assert_eq!(system.positive_count() * 2, count);
        }
    }

    #[test]
    fn dimensions_match_closed_forms() {
        for r in 1..=8 {
            assert_eq!(algebra_dimension(&rs(TypeLetter::A, r)), r * (r + 2));
        }
        for r in 2..=8 {
            assert_eq!(algebra_dimension(&rs(TypeLetter::B, r)), r * (2 * r + 1));
        }
        for r in 3..=8 {
            assert_eq!(algebra_dimension(&rs(TypeLetter::C, r)), r * (2 * r + 1));
            assert_eq!(algebra_dimension(&rs(TypeLetter::D, r)), r * (2 * r - 1));
        }
        assert_eq!(algebra_dimension(&rs(TypeLetter::E, 6)), 78);
        assert_eq!(algebra_dimension(&rs(TypeLetter::E, 7)), 133);
        assert_eq!(algebra_dimension(&rs(TypeLetter::E, 8)), 248);
        assert_eq!(algebra_dimension(&rs(TypeLetter::F, 4)), 52);
        assert_eq!(algebra_dimension(&rs(TypeLetter::G, 2)), 14);
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs(TypeLetter::A, 1).highest_root().coords(), &[1]);
        assert_eq!(rs(TypeLetter::G, 2).highest_root().coords(), &[3, 2]);
        assert_eq!(rs(TypeLetter::F, 4).highest_root().coords(), &[2, 3, 4, 2]);
        assert_eq!(
            rs(TypeLetter::E, 8).highest_root().coords(),
            &[2, 3, 4, 6, 5, 4, 3, 2]
        );
    }

    #[test]
    fn highest_root_plus_simple_is_never_a_root() {
        for (letter, rank) in [
            (TypeLetter::A, 3),
            (TypeLetter::B, 3),
            (TypeLetter::D, 4),
            (TypeLetter::F, 4),
            (TypeLetter::G, 2),
        ] {
            let system = rs(letter, rank);
            let theta = system.highest_root().coords().to_vec();
            for i in 0..rank {
                let mut sum = theta.clone();
                sum[i] += 1;
                assert!(system.root_index(&sum).is_none());
            }
        }
    }

    #[test]
    fn symmetrizer_values() {
        let g2 = rs(TypeLetter::G, 2);
        assert_eq!(g2.simple_root_halfnorm(0), &ratio(1, 3));
        assert_eq!(g2.simple_root_halfnorm(1), &rat(1));
        let b3 = rs(TypeLetter::B, 3);
        assert_eq!(b3.simple_root_halfnorm(2), &ratio(1, 2));
        let c3 = rs(TypeLetter::C, 3);
        assert_eq!(c3.simple_root_halfnorm(0), &ratio(1, 2));
        assert_eq!(c3.simple_root_halfnorm(2), &rat(1));
        let f4 = rs(TypeLetter::F, 4);
        assert_eq!(f4.simple_root_halfnorm(1), &rat(1));
        assert_eq!(f4.simple_root_halfnorm(2), &ratio(1, 2));
    }

    #[test]
    fn deterministic_order() {
        let system = rs(TypeLetter::B, 3);
        for w in system.roots().windows(2) {
            assert!(w[0] < w[1]);
        }
        assert!(system.roots()[..system.positive_count()]
            .iter()
            .all(|root| !root.is_positive()));
        assert!(system.roots()[system.positive_count()..]
            .iter()
            .all(Root::is_positive));
    }

    #[test]
    fn extended_matrix_a1() {
        let ext = extended_cartan_matrix(&rs(TypeLetter::A, 1));
        assert_eq!(ext.entries(), &[vec![2, -2], vec![-2, 2]]);
    }

    #[test]
    fn extended_matrix_g2_attaches_to_long_node() {
        let ext = extended_cartan_matrix(&rs(TypeLetter::G, 2));
        // node 1 (short) is orthogonal to the affine node; node 2 (long) has
        // a single bond
        assert_eq!(ext.entry(0, 2), 0);
        assert_eq!(ext.entry(1, 2), -1);
        assert_eq!(ext.entry(2, 1), -1);
    }

    #[test]
    fn extended_matrix_e8_attaches_to_node_8() {
        let ext = extended_cartan_matrix(&rs(TypeLetter::E, 8));
        for i in 0..7 {
            assert_eq!(ext.entry(i, 8), 0, "node {}", i + 1);
        }
        assert_eq!(ext.entry(7, 8), -1);
        assert_eq!(ext.entry(8, 7), -1);
    }

    #[test]
    fn extended_matrix_f4_attaches_to_node_1() {
        let ext = extended_cartan_matrix(&rs(TypeLetter::F, 4));
        assert_eq!(ext.entry(0, 4), -1);
        assert_eq!(ext.entry(4, 0), -1);
        for i in 1..4 {
            assert_eq!(ext.entry(i, 4), 0);
        }
    }

    #[test]
    fn closure_empty() {
        let system = rs(TypeLetter::A, 2);
        assert!(root_subsystem_closure(&system, &[]).unwrap().is_empty());
    }

    #[test]
    fn closure_g2_long_roots() {
        let system = rs(TypeLetter::G, 2);
        // simple system of the long A2: the long simple root and the lowest
        // long root completing it
        let gens = vec![Root::new(vec![0, 1]), Root::new(vec![3, 1])];
        let closure = root_subsystem_closure(&system, &gens).unwrap();
        assert_eq!(closure.len(), 6);
        for idx in closure {
            let root = system.root(idx);
            assert_eq!(system.form(root.coords(), root.coords()), rat(2), "{root}");
        }
    }

    #[test]
    fn closure_b_r_long_roots_give_d_subsystem() {
        for r in [3usize, 4] {
            let system = rs(TypeLetter::B, r);
            let mut gens: Vec<Root> = (0..r - 1)
                .map(|i| {
                    let mut coords = vec![0i64; r];
                    coords[i] = 1;
                    Root::new(coords)
                })
                .collect();
            gens.push(system.highest_root().negate());
            let closure = root_subsystem_closure(&system, &gens).unwrap();
            assert_eq!(closure.len(), 2 * r * (r - 1));
        }
    }

    #[test]
    fn closure_rejects_non_root() {
        let system = rs(TypeLetter::A, 2);
        let junk = Root::new(vec![5, 5]);
        assert!(matches!(
            root_subsystem_closure(&system, &[junk]),
            Err(Error::GeneratorNotRoot { index: 0 })
        ));
    }

    #[test]
    fn reflection_closure_property() {
        for (letter, rank) in [(TypeLetter::B, 3), (TypeLetter::G, 2), (TypeLetter::D, 4)] {
            let system = rs(letter, rank);
            for a in system.roots() {
                for b in system.roots() {
                    let n = system.pairing(b.coords(), a.coords());
                    let refl: Vec<i64> = b
                        .coords()
                        .iter()
                        .zip(a.coords())
                        .map(|(x, y)| x - n * y)
                        .collect();
                    assert!(system.root_index(&refl).is_some());
                }
            }
        }
    }

    #[test]
    fn coroot_coords_are_integral() {
        for (letter, rank) in [
            (TypeLetter::B, 4),
            (TypeLetter::C, 3),
            (TypeLetter::F, 4),
            (TypeLetter::G, 2),
        ] {
            let system = rs(letter, rank);
            for idx in 0..system.roots().len() {
                let _ = system.coroot_coords(idx); // panics if non-integral
            }
        }
        let g2 = rs(TypeLetter::G, 2);
        let theta = g2.highest_root_index();
        assert_eq!(g2.coroot_coords(theta), vec![1, 2]);
    }
}
