//! Exchange matrices, square quivers built from reduced words, matrix and
//! tropical mutation, index transpositions and c-vector dynamics.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClusterError {
    #[error("vertex {0} is out of range")]
    BadVertex(usize),
    #[error("word is not reduced")]
    NotReduced,
    #[error("c-vector column {0} is not sign coherent")]
    SignIncoherent(usize),
}

/// Skew-symmetric integer matrix indexed by a vertex set `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeMatrix {
    n: usize,
    b: Vec<i64>,
}

impl ExchangeMatrix {
    pub fn zeros(n: usize) -> Self {
        ExchangeMatrix { n, b: vec![0; n * n] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut m = ExchangeMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n);
            for (j, v) in row.iter().enumerate() {
                m.b[i * n + j] = *v;
            }
        }
        debug_assert!(m.is_skew_symmetric());
        m
    }

    /// Builds from a list of arrows `i -> j` (0-based), accumulating
    /// multiplicities: `b_{ij} = #(i->j) - #(j->i)`.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize)]) -> Self {
        let mut m = ExchangeMatrix::zeros(n);
        for &(i, j) in arrows {
            m.b[i * n + j] += 1;
            m.b[j * n + i] -= 1;
        }
        m
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.b[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.b[i * self.n + j] = v;
    }

    pub fn is_skew_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == -self.get(j, i)))
    }

    /// The arrow list `{(i,j) : b_{ij} > 0}` with multiplicity, sorted.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                for _ in 0..self.get(i, j).max(0) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Matrix mutation at vertex `k`.
    pub fn mutate(&self, k: usize) -> Result<ExchangeMatrix, ClusterError> {
        if k >= self.n {
            return Err(ClusterError::BadVertex(k));
        }
        let mut out = ExchangeMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let v = if i == k || j == k {
                    -self.get(i, j)
                } else {
                    let bik = self.get(i, k);
                    let bkj = self.get(k, j);
                    self.get(i, j) + (bik.abs() * bkj + bik * bkj.abs()) / 2
                };
                out.set(i, j, v);
            }
        }
        debug_assert!(out.is_skew_symmetric());
        Ok(out)
    }

    /// Swaps indices `r` and `s` (rows and columns).
    pub fn transpose_indices(&self, r: usize, s: usize) -> Result<ExchangeMatrix, ClusterError> {
        if r >= self.n {
            return Err(ClusterError::BadVertex(r));
        }
        if s >= self.n {
            return Err(ClusterError::BadVertex(s));
        }
        let perm: Vec<usize> = (0..self.n)
            .map(|i| {
                if i == r {
                    s
                } else if i == s {
                    r
                } else {
                    i
                }
            })
            .collect();
        let mut out = ExchangeMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(i, j, self.get(perm[i], perm[j]));
            }
        }
        Ok(out)
    }
}

/// One step of a mutation sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Step {
    /// Mutation at a vertex (0-based).
    Mutate(usize),
    /// Exchange of two indices (0-based).
    Transpose(usize, usize),
}

/// Crossing of a wiring diagram: its position in the word and its level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    /// 1-based position in the word (left to right).
    pub position: usize,
    /// Level of the crossing, 1 = topmost pair of wires.
    pub level: usize,
}

/// Wiring diagram of a reduced word in the symmetric group S_{n+1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WiringDiagram {
    /// Simple-reflection indices, each in `1..=n`.
    pub word: Vec<usize>,
    /// Number of strands (n+1 for letters in 1..=n).
    pub wires: usize,
    pub crossings: Vec<Crossing>,
}

impl WiringDiagram {
    pub fn new(word: &[usize]) -> Result<Self, ClusterError> {
        if word.is_empty() {
            return Err(ClusterError::NotReduced);
        }
        let n = *word.iter().max().unwrap();
        let wires = n + 1;
        // reduced iff each letter increases the inversion count
        let mut perm: Vec<usize> = (0..wires).collect();
        for &i in word {
            if i == 0 || i > n {
                return Err(ClusterError::NotReduced);
            }
            if perm[i - 1] > perm[i] {
                return Err(ClusterError::NotReduced);
            }
            perm.swap(i - 1, i);
        }
        let crossings = word
            .iter()
            .enumerate()
            .map(|(t, &i)| Crossing { position: t + 1, level: i })
            .collect();
        Ok(WiringDiagram { word: word.to_vec(), wires, crossings })
    }

    /// The permutation realized by the word (wire starting at position `p`
    /// ends at position `result[p]`).
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.wires).collect();
        for &i in &self.word {
            perm.swap(i - 1, i);
        }
        perm
    }
}

/// Role of a quiver vertex relative to a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    NW,
    NE,
    SW,
    SE,
}

/// Square quiver of a wiring diagram: the exchange matrix plus, for every
/// crossing, the quiver vertex in each of the four roles around it.
///
/// Vertices sit on the wire segments between crossings. The canonical
/// labeling orders them by (height, horizontal position), matching the
/// hand labeling of the three-crossing diagrams in the source material.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareQuiver {
    pub diagram: WiringDiagram,
    pub matrix: ExchangeMatrix,
    /// `adjacency[c][role]` = vertex (0-based) in that role around crossing
    /// `c` (0-based).
    pub adjacency: Vec<[usize; 4]>,
}

impl SquareQuiver {
    pub fn vertex_count(&self) -> usize {
        self.matrix.rank()
    }

    pub fn vertex_at(&self, crossing: usize, role: Role) -> usize {
        let idx = match role {
            Role::NW => 0,
            Role::NE => 1,
            Role::SW => 2,
            Role::SE => 3,
        };
        self.adjacency[crossing][idx]
    }

    /// Crossings adjacent to a vertex, with the vertex's role around each.
    pub fn crossings_of(&self, vertex: usize) -> Vec<(usize, Role)> {
        let mut out = Vec::new();
        for (c, adj) in self.adjacency.iter().enumerate() {
            for (k, &v) in adj.iter().enumerate() {
                if v == vertex {
                    let role = match k {
                        0 => Role::NW,
                        1 => Role::NE,
                        2 => Role::SW,
                        _ => Role::SE,
                    };
                    out.push((c, role));
                }
            }
        }
        out
    }
}

/// Builds the square quiver of a reduced word: a vertex on every wire
/// segment, a clockwise 4-cycle of arrows around every crossing.
pub fn build_square_quiver(word: &[usize]) -> Result<SquareQuiver, ClusterError> {
    let diagram = WiringDiagram::new(word)?;
    let heights = diagram.wires; // segments live at heights 1..=wires
    // For height h the delimiting crossings are those at levels h-1 or h.
    // Segments at height h are the gaps between consecutive delimiters.
    let mut seg_id: Vec<Vec<usize>> = Vec::new(); // per height: crossing positions
    for h in 1..=heights {
        let cuts: Vec<usize> = diagram
            .crossings
            .iter()
            .filter(|c| c.level + 1 == h || c.level == h)
            .map(|c| c.position)
            .collect();
        seg_id.push(cuts);
    }
    // canonical labels: by (height, left endpoint)
    let mut label = 0usize;
    // segment key: (height, index of gap) -> label
    let mut seg_label: Vec<Vec<usize>> = Vec::new();
    for cuts in &seg_id {
        let mut labels = Vec::new();
        for _ in 0..=cuts.len() {
            labels.push(label);
            label += 1;
        }
        seg_label.push(labels);
    }
    let total = label;

    // which gap of height h contains x-interval just left/right of position p
    let gap_left = |h: usize, p: usize| -> usize {
        let cuts = &seg_id[h - 1];
        let idx = cuts.iter().position(|&c| c == p).expect("crossing delimits height");
        idx
    };
    let gap_right = |h: usize, p: usize| -> usize {
        gap_left(h, p) + 1
    };

    let mut adjacency = Vec::new();
    let mut arrows = Vec::new();
    for c in &diagram.crossings {
        let (h_up, h_dn) = (c.level, c.level + 1);
        let nw = seg_label[h_up - 1][gap_left(h_up, c.position)];
        let ne = seg_label[h_up - 1][gap_right(h_up, c.position)];
        let sw = seg_label[h_dn - 1][gap_left(h_dn, c.position)];
        let se = seg_label[h_dn - 1][gap_right(h_dn, c.position)];
        adjacency.push([nw, ne, sw, se]);
        // clockwise square: NW -> NE -> SE -> SW -> NW
        arrows.push((nw, ne));
        arrows.push((ne, se));
        arrows.push((se, sw));
        arrows.push((sw, nw));
    }
    let matrix = ExchangeMatrix::from_arrows(total, &arrows);
    Ok(SquareQuiver { diagram, matrix, adjacency })
}

/// Tropical y-seed: exchange matrix plus the c-vector of every y-variable
/// (column `i` of `cvecs` is the c-vector of `y_i`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalSeed {
    pub matrix: ExchangeMatrix,
    /// `cvecs[i]` is the c-vector (length n) of `y_i`.
    pub cvecs: Vec<Vec<i64>>,
}

impl TropicalSeed {
    /// Initial seed: c-vectors are the standard unit vectors.
    pub fn initial(matrix: ExchangeMatrix) -> Self {
        let n = matrix.rank();
        let cvecs = (0..n)
            .map(|i| {
                let mut e = vec![0i64; n];
                e[i] = 1;
                e
            })
            .collect();
        TropicalSeed { matrix, cvecs }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// The tropical sign of `y_i`: +1 if the c-vector is nonnegative,
    /// -1 if nonpositive.
    pub fn tropical_sign(&self, i: usize) -> Result<i64, ClusterError> {
        if i >= self.rank() {
            return Err(ClusterError::BadVertex(i));
        }
        let c = &self.cvecs[i];
        let has_pos = c.iter().any(|&x| x > 0);
        let has_neg = c.iter().any(|&x| x < 0);
        match (has_pos, has_neg) {
            (true, false) => Ok(1),
            (false, true) => Ok(-1),
            (false, false) => Err(ClusterError::SignIncoherent(i)),
            (true, true) => Err(ClusterError::SignIncoherent(i)),
        }
    }

    /// Mutation of the tropical seed at `k` via the c-vector rule
    /// `c'_k = -c_k`, `c'_i = c_i + c_k [eps_k b_{ik}]_+` with `eps_k` the
    /// tropical sign of `y_k`.
    pub fn mutate(&self, k: usize) -> Result<TropicalSeed, ClusterError> {
        if k >= self.rank() {
            return Err(ClusterError::BadVertex(k));
        }
        let eps = self.tropical_sign(k)?;
        let n = self.rank();
        let mut cvecs = Vec::with_capacity(n);
        for i in 0..n {
            if i == k {
                cvecs.push(self.cvecs[k].iter().map(|x| -x).collect());
            } else {
                let m = (eps * self.matrix.get(i, k)).max(0);
                let v: Vec<i64> = self.cvecs[i]
                    .iter()
                    .zip(&self.cvecs[k])
                    .map(|(a, b)| a + b * m)
                    .collect();
                cvecs.push(v);
            }
        }
        Ok(TropicalSeed { matrix: self.matrix.mutate(k)?, cvecs })
    }

    pub fn transpose_indices(&self, r: usize, s: usize) -> Result<TropicalSeed, ClusterError> {
        if r >= self.rank() {
            return Err(ClusterError::BadVertex(r));
        }
        if s >= self.rank() {
            return Err(ClusterError::BadVertex(s));
        }
        let mut cvecs = self.cvecs.clone();
        cvecs.swap(r, s);
        Ok(TropicalSeed { matrix: self.matrix.transpose_indices(r, s)?, cvecs })
    }

    pub fn apply(&self, step: Step) -> Result<TropicalSeed, ClusterError> {
        match step {
            Step::Mutate(k) => self.mutate(k),
            Step::Transpose(r, s) => self.transpose_indices(r, s),
        }
    }
}

/// Runs a sequence of steps, returning every intermediate seed
/// (`result[0]` is the initial seed).
pub fn run_sequence(seed: &TropicalSeed, steps: &[Step]) -> Result<Vec<TropicalSeed>, ClusterError> {
    let mut out = vec![seed.clone()];
    for &s in steps {
        let next = out.last().unwrap().apply(s)?;
        out.push(next);
    }
    Ok(out)
}

/// Independent tropical-semifield oracle: y-variables as exponent vectors
/// with `1 (+) u^a = u^{min(0,a)}` componentwise, mutated by the direct
/// exchange relation `y'_i = y_i (1 (+) y_k^{-sgn b_{ik}})^{-b_{ik}}`.
pub mod semifield {
    use super::*;

    #[derive(Debug, Clone, PartialEq, Eq)]
    pub struct SemifieldSeed {
        pub matrix: ExchangeMatrix,
        pub yvars: Vec<Vec<i64>>,
    }

    impl SemifieldSeed {
        pub fn initial(matrix: ExchangeMatrix) -> Self {
            let n = matrix.rank();
            let yvars = (0..n)
                .map(|i| {
                    let mut e = vec![0i64; n];
                    e[i] = 1;
                    e
                })
                .collect();
            SemifieldSeed { matrix, yvars }
        }

        pub fn mutate(&self, k: usize) -> Result<SemifieldSeed, ClusterError> {
            let n = self.matrix.rank();
            if k >= n {
                return Err(ClusterError::BadVertex(k));
            }
            let yk = &self.yvars[k];
            let mut yvars = Vec::with_capacity(n);
            for i in 0..n {
                if i == k {
                    yvars.push(yk.iter().map(|x| -x).collect());
                } else {
                    let b = self.matrix.get(i, k);
                    if b == 0 {
                        yvars.push(self.yvars[i].clone());
                        continue;
                    }
                    let s = if b > 0 { 1 } else { -1 };
                    // 1 (+) y_k^{-s} = u^{min(0, -s c_k)} componentwise
                    let v: Vec<i64> = self.yvars[i]
                        .iter()
                        .zip(yk)
                        .map(|(a, ck)| a + (-b) * (0i64).min(-s * ck))
                        .collect();
                    yvars.push(v);
                }
            }
            Ok(SemifieldSeed { matrix: self.matrix.mutate(k)?, yvars })
        }

        pub fn apply(&self, step: Step) -> Result<SemifieldSeed, ClusterError> {
            match step {
                Step::Mutate(k) => self.mutate(k),
                Step::Transpose(r, s) => {
                    let mut yvars = self.yvars.clone();
                    yvars.swap(r, s);
                    Ok(SemifieldSeed { matrix: self.matrix.transpose_indices(r, s)?, yvars })
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Fig. 2(a): square quiver of the word 212, paper labels 1..9.
    pub fn quiver_212_arrows() -> Vec<(usize, usize)> {
        [
            (1, 2),
            (2, 5),
            (5, 4),
            (4, 1),
            (4, 8),
            (8, 7),
            (7, 3),
            (3, 4),
            (5, 6),
            (6, 9),
            (9, 8),
            (8, 5),
        ]
        .iter()
        .map(|&(i, j)| (i - 1, j - 1))
        .collect()
    }

    #[test]
    fn rank2_mutation_flips_sign() {
        let b = ExchangeMatrix::from_rows(&[vec![0, 1], vec![-1, 0]]);
        let b2 = b.mutate(1).unwrap();
        assert_eq!(b2, ExchangeMatrix::from_rows(&[vec![0, -1], vec![1, 0]]));
    }

    #[test]
    fn mutation_is_involutive() {
        let b = ExchangeMatrix::from_arrows(9, &quiver_212_arrows());
        for k in 0..9 {
            assert_eq!(b.mutate(k).unwrap().mutate(k).unwrap(), b);
        }
        assert!(matches!(b.mutate(9), Err(ClusterError::BadVertex(9))));
    }

    #[test]
    fn commuting_mutations() {
        let b = ExchangeMatrix::from_arrows(9, &quiver_212_arrows());
        // b_{17} = 0 in the 212 quiver (vertices 1 and 7, 0-based 0 and 6)
        assert_eq!(b.get(0, 6), 0);
        let lhs = b.mutate(0).unwrap().mutate(6).unwrap();
        let rhs = b.mutate(6).unwrap().mutate(0).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn transpose_involutive_and_trivial() {
        let b = ExchangeMatrix::from_arrows(9, &quiver_212_arrows());
        assert_eq!(b.transpose_indices(3, 3).unwrap(), b);
        assert_eq!(b.transpose_indices(3, 4).unwrap().transpose_indices(3, 4).unwrap(), b);
    }

    #[test]
    fn word_212_square_quiver_matches_figure() {
        let q = build_square_quiver(&[2, 1, 2]).unwrap();
        assert_eq!(q.vertex_count(), 9);
        let expect = ExchangeMatrix::from_arrows(9, &quiver_212_arrows());
        assert_eq!(q.matrix, expect);
        // crossing 1 (0-based 0): NW=3, NE=4, SW=7, SE=8 in paper labels
        assert_eq!(q.adjacency[0], [2, 3, 6, 7]);
        assert_eq!(q.adjacency[1], [0, 1, 3, 4]);
        assert_eq!(q.adjacency[2], [4, 5, 7, 8]);
    }

    #[test]
    fn single_crossing_quiver() {
        let q = build_square_quiver(&[1]).unwrap();
        assert_eq!(q.vertex_count(), 4);
        let m = &q.matrix;
        // one clockwise square: NW -> NE -> SE -> SW -> NW
        let [nw, ne, sw, se] = q.adjacency[0];
        assert_eq!(m.get(nw, ne), 1);
        assert_eq!(m.get(ne, se), 1);
        assert_eq!(m.get(se, sw), 1);
        assert_eq!(m.get(sw, nw), 1);
    }

    #[test]
    fn non_reduced_word_rejected() {
        assert!(matches!(build_square_quiver(&[1, 1]), Err(ClusterError::NotReduced)));
        assert!(matches!(build_square_quiver(&[2, 1, 2, 1]), Err(ClusterError::NotReduced)));
    }

    #[test]
    fn tropical_initial_mutation() {
        let b = ExchangeMatrix::from_rows(&[vec![0, 1], vec![-1, 0]]);
        let seed = TropicalSeed::initial(b);
        assert_eq!(seed.tropical_sign(0).unwrap(), 1);
        let m = seed.mutate(1).unwrap();
        assert_eq!(m.cvecs[1], vec![0, -1]);
        assert_eq!(m.tropical_sign(1).unwrap(), -1);
        // b_{01} = 1 > 0 so c'_0 = c_0 + c_1
        assert_eq!(m.cvecs[0], vec![1, 1]);
    }

    #[test]
    fn cvector_rule_matches_semifield_oracle_on_212() {
        let b = ExchangeMatrix::from_arrows(9, &quiver_212_arrows());
        // the (mus) sequence in 0-based labels: mu_8, mu_5, mu_4, mu_8, sigma_45
        let steps = [
            Step::Mutate(7),
            Step::Mutate(4),
            Step::Mutate(3),
            Step::Mutate(7),
            Step::Transpose(3, 4),
        ];
        let mut seed = TropicalSeed::initial(b.clone());
        let mut oracle = semifield::SemifieldSeed::initial(b);
        for &s in &steps {
            seed = seed.apply(s).unwrap();
            oracle = oracle.apply(s).unwrap();
            assert_eq!(seed.matrix, oracle.matrix);
            assert_eq!(seed.cvecs, oracle.yvars);
        }
    }

    #[test]
    fn empty_sequence_returns_initial() {
        let b = ExchangeMatrix::from_rows(&[vec![0, 1], vec![-1, 0]]);
        let seed = TropicalSeed::initial(b);
        let traj = run_sequence(&seed, &[]).unwrap();
        assert_eq!(traj, vec![seed]);
    }
}
