//! Finite quivers given by arrow-multiplicity matrices, their Euler forms, and the two
//! dimension-vector criteria used throughout: existence of simple representations and
//! smoothness of the quotient for symmetric settings.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// `arrows[i][j]` arrows from vertex `i` to vertex `j`; the diagonal counts loops.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "QuiverRepr")]
pub struct Quiver {
    v: usize,
    arrows: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
struct QuiverRepr {
    v: usize,
    arrows: Vec<Vec<u32>>,
}

impl TryFrom<QuiverRepr> for Quiver {
    type Error = Error;

    fn try_from(r: QuiverRepr) -> Result<Self> {
        if r.arrows.len() != r.v {
            return Err(Error::arg(format!(
                "`v` is {} but the arrow matrix has {} rows",
                r.v,
                r.arrows.len()
            )));
        }
        Quiver::new(r.arrows)
    }
}

impl Quiver {
    pub fn new(arrows: Vec<Vec<u32>>) -> Result<Self> {
        let v = arrows.len();
        if let Some(i) = arrows.iter().position(|row| row.len() != v) {
            return Err(Error::arg(format!(
                "arrow matrix row {i} has length {} but there are {v} vertices",
                arrows[i].len()
            )));
        }
        Ok(Quiver { v, arrows })
    }

    pub fn empty(v: usize) -> Self {
        Quiver {
            v,
            arrows: vec![vec![0; v]; v],
        }
    }

    pub(crate) fn from_fn(v: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        Quiver {
            v,
            arrows: (0..v).map(|i| (0..v).map(|j| f(i, j)).collect()).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.v
    }

    pub fn arrows(&self, from: usize, to: usize) -> u32 {
        self.arrows[from][to]
    }

    pub fn arrow_matrix(&self) -> &[Vec<u32>] {
        &self.arrows
    }

    pub fn loops(&self, vertex: usize) -> u32 {
        self.arrows[vertex][vertex]
    }

    pub fn has_loops(&self) -> bool {
        (0..self.v).any(|i| self.arrows[i][i] > 0)
    }

    pub fn total_arrows(&self) -> u64 {
        self.arrows.iter().flatten().map(|&a| a as u64).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.v).all(|i| (0..i).all(|j| self.arrows[i][j] == self.arrows[j][i]))
    }

    /// `M[i][j] = δ_ij - arrows[i][j]`.
    pub fn euler_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.v, self.v, |i, j| {
            (i == j) as i64 - self.arrows[i][j] as i64
        })
    }

    /// Full subquiver on `vertices`, in the given order.
    pub fn full_subquiver(&self, vertices: &[usize]) -> Quiver {
        Quiver::from_fn(vertices.len(), |i, j| self.arrows[vertices[i]][vertices[j]])
    }

    /// Neighbours in the underlying simple graph (loops ignored, either direction counts).
    pub fn neighbors(&self, vertex: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.v).filter(move |&j| {
            j != vertex && (self.arrows[vertex][j] > 0 || self.arrows[j][vertex] > 0)
        })
    }

    fn reaches_all(&self, start: usize, forward: bool) -> bool {
        let mut seen = vec![false; self.v];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for w in 0..self.v {
                let a = if forward {
                    self.arrows[u][w]
                } else {
                    self.arrows[w][u]
                };
                if a > 0 && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Connected components of the underlying graph, each sorted, ordered by first vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.v];
        let mut out = Vec::new();
        for s in 0..self.v {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The underlying graph is a tree.
    pub fn is_tree_like(&self) -> bool {
        let edges: usize = (0..self.v)
            .map(|i| self.neighbors(i).count())
            .sum::<usize>()
            / 2;
        self.v > 0 && self.is_connected() && edges == self.v - 1
    }

    /// One directed cycle through every vertex: extended Dynkin `Ã` with cyclic orientation.
    pub fn is_oriented_cycle(&self) -> bool {
        self.v > 0
            && (0..self.v).all(|i| {
                self.arrows[i].iter().sum::<u32>() == 1
                    && (0..self.v).map(|j| self.arrows[j][i]).sum::<u32>() == 1
            })
            && is_strongly_connected(self)
    }
}

/// A quiver together with a dimension per vertex.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct QuiverSetting {
    #[serde(flatten)]
    pub quiver: Quiver,
    pub dims: Vec<u32>,
}

impl QuiverSetting {
    pub fn new(quiver: Quiver, dims: Vec<u32>) -> Result<Self> {
        if dims.len() != quiver.vertex_count() {
            return Err(Error::arg(format!(
                "{} dimensions given for {} vertices",
                dims.len(),
                quiver.vertex_count()
            )));
        }
        Ok(QuiverSetting { quiver, dims })
    }

    /// Indices of the vertices with nonzero dimension.
    pub fn support_vertices(&self) -> Vec<usize> {
        (0..self.dims.len())
            .filter(|&i| self.dims[i] != 0)
            .collect()
    }

    pub fn support(&self) -> QuiverSetting {
        let keep = self.support_vertices();
        QuiverSetting {
            quiver: self.quiver.full_subquiver(&keep),
            dims: keep.iter().map(|&i| self.dims[i]).collect(),
        }
    }
}

fn check_len(q: &Quiver, dims: &[impl Sized], what: &str) -> Result<()> {
    if dims.len() != q.vertex_count() {
        return Err(Error::arg(format!(
            "{what} has length {} but the quiver has {} vertices",
            dims.len(),
            q.vertex_count()
        )));
    }
    Ok(())
}

/// `χ_Q(α, β) = α^T M β` with `M = I - arrows`.
pub fn euler_form(q: &Quiver, alpha: &[i64], beta: &[i64]) -> Result<i64> {
    check_len(q, alpha, "first vector")?;
    check_len(q, beta, "second vector")?;
    let mut total = 0i64;
    for i in 0..q.v {
        if alpha[i] == 0 {
            continue;
        }
        let row: i64 = (0..q.v)
            .map(|j| ((i == j) as i64 - q.arrows[i][j] as i64) * beta[j])
            .sum();
        total += alpha[i] * row;
    }
    Ok(total)
}

/// Full subquiver on the vertices of nonzero dimension, with the induced dimensions.
pub fn support(q: &Quiver, dims: &[u32]) -> Result<QuiverSetting> {
    check_len(q, dims, "dimension vector")?;
    Ok(QuiverSetting {
        quiver: q.clone(),
        dims: dims.to_vec(),
    }
    .support())
}

/// Every ordered pair of vertices is joined by a directed path.
pub fn is_strongly_connected(q: &Quiver) -> bool {
    q.v <= 1 || (q.reaches_all(0, true) && q.reaches_all(0, false))
}

/// Whether `rep_dims(Q)` contains simple representations.
///
/// On the support: an oriented cycle needs all dimensions 1; a single loop-free vertex
/// needs dimension 1 (the vertex simple); otherwise the support must be strongly connected
/// with `χ(d, e_i) <= 0` and `χ(e_i, d) <= 0` at every vertex.
pub fn is_simple_dimvector(q: &Quiver, dims: &[u32]) -> Result<bool> {
    check_len(q, dims, "dimension vector")?;
    if dims.iter().all(|&d| d == 0) {
        return Err(Error::arg(
            "the zero dimension vector has no simple representations to test",
        ));
    }
    let s = support(q, dims)?;
    let (sq, d) = (&s.quiver, &s.dims);
    if sq.is_oriented_cycle() {
        return Ok(d.iter().all(|&x| x == 1));
    }
    if sq.vertex_count() == 1 && sq.loops(0) == 0 {
        return Ok(d[0] == 1);
    }
    if !is_strongly_connected(sq) {
        return Ok(false);
    }
    let n = sq.vertex_count();
    let ok = (0..n).all(|i| {
        let inflow: i64 = (0..n).map(|j| d[j] as i64 * sq.arrows[j][i] as i64).sum();
        let outflow: i64 = (0..n).map(|j| sq.arrows[i][j] as i64 * d[j] as i64).sum();
        d[i] as i64 - inflow <= 0 && d[i] as i64 - outflow <= 0
    });
    Ok(ok)
}

/// Whether the quotient of a symmetric, loop-free setting is smooth.
///
/// Each connected component of the support must be tree-like with dimension 1 at every
/// branching vertex, and decompose into the smooth building blocks:
/// * an edge of multiplicity `k >= 2` joins a dimension-1 vertex to one of dimension `>= k`;
/// * a chain vertex of dimension 2 has both edges of multiplicity 1;
/// * a chain vertex of dimension `>= 3` has both edges of multiplicity 1 and a neighbour of
///   dimension 1.
pub fn is_smooth_setting(q: &Quiver, dims: &[u32]) -> Result<bool> {
    check_len(q, dims, "dimension vector")?;
    if !q.is_symmetric() {
        return Err(Error::arg("smoothness test needs a symmetric quiver"));
    }
    let s = support(q, dims)?;
    if s.quiver.has_loops() {
        return Err(Error::unsupported(
            "support contains loops; the smoothness criterion covers loop-free settings only",
        ));
    }
    let sq = &s.quiver;
    let d = &s.dims;
    for comp in sq.components() {
        let cq = sq.full_subquiver(&comp);
        if !cq.is_tree_like() {
            return Ok(false);
        }
        let cd: Vec<u32> = comp.iter().map(|&i| d[i]).collect();
        for u in 0..cq.vertex_count() {
            let nbrs: Vec<usize> = cq.neighbors(u).collect();
            for &w in &nbrs {
                let k = cq.arrows(u, w);
                if k >= 2 && !((cd[u] == 1 && cd[w] >= k) || (cd[w] == 1 && cd[u] >= k)) {
                    return Ok(false);
                }
            }
            match nbrs.len() {
                0 | 1 => {}
                2 => {
                    let single = nbrs.iter().all(|&w| cq.arrows(u, w) == 1);
                    let ok = match cd[u] {
                        1 => true,
                        2 => single,
                        _ => single && nbrs.iter().any(|&w| cd[w] == 1),
                    };
                    if !ok {
                        return Ok(false);
                    }
                }
                _ => {
                    if cd[u] != 1 {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[u32]]) -> Quiver {
        Quiver::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn cycle(k: usize) -> Quiver {
        Quiver::from_fn(k, |i, j| (j == (i + 1) % k) as u32)
    }

    #[test]
    fn rejects_ragged_matrix() {
        assert!(Quiver::new(vec![vec![0, 1], vec![0]]).is_err());
        let bad: std::result::Result<Quiver, _> =
            serde_json::from_str(r#"{"v":3,"arrows":[[0,1],[1,0]]}"#);
        assert!(bad.is_err());
        let good: Quiver = serde_json::from_str(r#"{"v":2,"arrows":[[0,1],[1,0]]}"#).unwrap();
        assert_eq!(good.arrows(0, 1), 1);
    }

    #[test]
    fn euler_form_identity_quiver() {
        let e = Quiver::empty(3);
        assert_eq!(euler_form(&e, &[0, 1, 0], &[0, 1, 0]).unwrap(), 1);
        assert!(euler_form(&e, &[1, 0], &[0, 1, 0]).is_err());
    }

    #[test]
    fn strong_connectivity() {
        assert!(is_strongly_connected(&q(&[&[0, 1], &[1, 0]])));
        assert!(!is_strongly_connected(&q(&[&[0, 1], &[0, 0]])));
        assert!(is_strongly_connected(&Quiver::empty(1)));
        assert!(is_strongly_connected(&cycle(5)));
    }

    #[test]
    fn support_examples() {
        let quiver = q(&[&[0, 2, 0], &[2, 0, 1], &[0, 1, 0]]);
        let all = support(&quiver, &[1, 2, 3]).unwrap();
        assert_eq!(all.quiver, quiver);
        let none = support(&quiver, &[0, 0, 0]).unwrap();
        assert_eq!(none.quiver.vertex_count(), 0);
        let part = support(&quiver, &[1, 0, 3]).unwrap();
        assert_eq!(part.dims, vec![1, 3]);
        assert_eq!(part.quiver.total_arrows(), 0);
    }

    #[test]
    fn simple_oriented_cycles() {
        for k in 1..6 {
            let c = cycle(k);
            assert!(is_simple_dimvector(&c, &vec![1; k]).unwrap());
            let mut d = vec![1; k];
            d[0] = 2;
            assert!(!is_simple_dimvector(&c, &d).unwrap());
        }
    }

    #[test]
    fn simple_two_vertex_pair_only_for_r_one() {
        let pair = q(&[&[0, 1], &[1, 0]]);
        assert!(is_simple_dimvector(&pair, &[1, 1]).unwrap());
        for r in 2..6 {
            assert!(!is_simple_dimvector(&pair, &[r, r]).unwrap());
        }
    }

    #[test]
    fn simple_square_never() {
        // two disjoint single pairs: vertices (a, b, c, d) with a-d and b-c
        let square = q(&[&[0, 0, 0, 1], &[0, 0, 1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0]]);
        for t in 1..4 {
            for s in 1..4 {
                assert!(!is_simple_dimvector(&square, &[t, s, s, t]).unwrap());
            }
        }
    }

    #[test]
    fn simple_single_vertex() {
        let v = Quiver::empty(1);
        assert!(is_simple_dimvector(&v, &[1]).unwrap());
        assert!(!is_simple_dimvector(&v, &[2]).unwrap());
        let jordan = q(&[&[1]]);
        assert!(is_simple_dimvector(&jordan, &[1]).unwrap());
        assert!(!is_simple_dimvector(&jordan, &[2]).unwrap());
        let two_loops = q(&[&[2]]);
        assert!(is_simple_dimvector(&two_loops, &[5]).unwrap());
        assert!(is_simple_dimvector(&v, &[0]).is_err());
    }

    #[test]
    fn vertex_simples_exist() {
        let quiver = q(&[&[0, 3, 1], &[0, 0, 2], &[1, 0, 0]]);
        for i in 0..3 {
            let mut e = vec![0; 3];
            e[i] = 1;
            assert!(is_simple_dimvector(&quiver, &e).unwrap());
        }
    }

    #[test]
    fn smooth_square_and_blocks() {
        let square = q(&[&[0, 0, 0, 1], &[0, 0, 1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0]]);
        assert!(is_smooth_setting(&square, &[3, 1, 2, 5]).unwrap());
        assert!(is_smooth_setting(&square, &[0, 1, 2, 5]).unwrap());
        for n in 2..8 {
            let k = n - 1;
            let block = q(&[&[0, k], &[k, 0]]);
            assert!(is_smooth_setting(&block, &[1, k]).unwrap());
            if k >= 2 {
                assert!(!is_smooth_setting(&block, &[1, k - 1]).unwrap());
                assert!(!is_smooth_setting(&block, &[2, k]).unwrap());
            }
        }
    }

    #[test]
    fn smooth_rejects_cycles_and_bad_branching() {
        let tri = q(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        assert!(!is_smooth_setting(&tri, &[1, 1, 1]).unwrap());
        let star = q(&[&[0, 1, 1, 1], &[1, 0, 0, 0], &[1, 0, 0, 0], &[1, 0, 0, 0]]);
        assert!(is_smooth_setting(&star, &[1, 4, 4, 4]).unwrap());
        assert!(!is_smooth_setting(&star, &[2, 1, 1, 1]).unwrap());
    }

    #[test]
    fn smooth_chain_rules() {
        let chain = q(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        assert!(is_smooth_setting(&chain, &[1, 5, 7]).unwrap());
        assert!(!is_smooth_setting(&chain, &[3, 5, 7]).unwrap());
        assert!(is_smooth_setting(&chain, &[3, 2, 7]).unwrap());
        let heavy = q(&[&[0, 2, 0], &[2, 0, 1], &[0, 1, 0]]);
        assert!(!is_smooth_setting(&heavy, &[1, 2, 4]).unwrap());
        assert!(is_smooth_setting(&heavy, &[2, 1, 4]).unwrap());
    }

    #[test]
    fn smooth_errors() {
        let directed = q(&[&[0, 1], &[0, 0]]);
        assert!(matches!(
            is_smooth_setting(&directed, &[1, 1]),
            Err(Error::InvalidArgument(_))
        ));
        let looped = q(&[&[1, 1], &[1, 0]]);
        assert!(matches!(
            is_smooth_setting(&looped, &[1, 1]),
            Err(Error::Unsupported(_))
        ));
        // loops outside the support are fine
        assert!(is_smooth_setting(&looped, &[0, 3]).unwrap());
    }
}
