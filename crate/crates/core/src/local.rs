//! Local quiver settings `(A, k)` at the semisimple points of `iss_{α(n,m)}`, where
//! `α(n,m) = (m-1,1; ...; m-1,1)`.
//!
//! A setting is a set partition `A = (A_1..A_l)` of `N` with a positive `k_i <= |A_i|` per
//! block and `Σ k_i <= m`. Settings are identified up to `S_n` by their [`YoungLabel`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::combinatorics::{
    enumerate_set_partitions, multiset_coeff, weakly_decreasing_tuples, young_diagrams,
    SetPartition, SubsetMask, YoungLabel,
};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::quiver::{Quiver, QuiverSetting};

/// Largest `n` accepted by the class-level enumerations.
pub const MAX_LOCAL_N: usize = 9;
/// Largest `n` accepted by the labeled (non-quotiented) graph.
pub const MAX_LABELED_N: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct LocalSetting {
    n: usize,
    m: usize,
    #[serde(serialize_with = "serialize_blocks")]
    blocks: Vec<SubsetMask>,
    k: Vec<usize>,
}

fn serialize_blocks<S: Serializer>(blocks: &[SubsetMask], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(blocks.iter().map(|b| b.elements().collect::<Vec<_>>()))
}

impl LocalSetting {
    /// Validates and puts the blocks in canonical order: `|A_i|` descending, then `k_i`
    /// descending, then smallest element ascending.
    pub fn new(n: usize, m: usize, blocks: Vec<SubsetMask>, k: Vec<usize>) -> Result<Self> {
        if blocks.len() != k.len() {
            return Err(Error::arg(format!(
                "{} blocks but {} k values",
                blocks.len(),
                k.len()
            )));
        }
        SetPartition::new(blocks.clone(), n)?;
        let mut rows: Vec<(SubsetMask, usize)> = blocks.into_iter().zip(k).collect();
        for &(a, ki) in &rows {
            if ki == 0 || ki > a.len() {
                return Err(Error::arg(format!(
                    "k = {ki} for block {a} must lie in 1..={}",
                    a.len()
                )));
            }
        }
        let total: usize = rows.iter().map(|r| r.1).sum();
        if total > m {
            return Err(Error::arg(format!("|k| = {total} exceeds m = {m}")));
        }
        rows.sort_by_key(|&(a, ki)| {
            (
                std::cmp::Reverse(a.len()),
                std::cmp::Reverse(ki),
                a.min_element(),
            )
        });
        let (blocks, k) = rows.into_iter().unzip();
        Ok(LocalSetting { n, m, blocks, k })
    }

    /// The canonical representative of a class: blocks are consecutive runs of `1..n` in
    /// row order.
    pub fn representative(label: &YoungLabel, m: usize) -> Result<Self> {
        let n = label.n();
        let mut next = 1;
        let mut blocks = Vec::new();
        for len in label.row_lengths() {
            let elements: Vec<usize> = (next..next + len).collect();
            blocks.push(SubsetMask::from_elements(&elements, n)?);
            next += len;
        }
        Self::new(n, m, blocks, label.ks())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn blocks(&self) -> &[SubsetMask] {
        &self.blocks
    }

    pub fn k(&self) -> &[usize] {
        &self.k
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn k_total(&self) -> usize {
        self.k.iter().sum()
    }

    pub fn partition(&self) -> SetPartition {
        SetPartition::new(self.blocks.clone(), self.n).expect("validated on construction")
    }

    pub fn young_label(&self) -> YoungLabel {
        let rows: Vec<(usize, usize)> = self
            .blocks
            .iter()
            .zip(&self.k)
            .map(|(a, &k)| (a.len(), k))
            .collect();
        YoungLabel::from_rows(&rows).expect("valid setting gives a valid label")
    }

    /// `v_i = |A_i| - k_i`.
    pub fn slack(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .zip(&self.k)
            .map(|(a, &k)| a.len() - k)
            .collect()
    }

    /// The `ψ_∅` vertex is present when `m > |k|` or some block has `k_i < |A_i|`.
    pub fn has_trivial_vertex(&self) -> bool {
        self.m > self.k_total() || self.slack().iter().any(|&v| v > 0)
    }
}

impl fmt::Display for LocalSetting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, k)) in self.blocks.iter().zip(&self.k).enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{a}^{k}")?;
        }
        Ok(())
    }
}

fn check_nm(n: usize, m: usize) -> Result<()> {
    if n == 0 || m == 0 {
        return Err(Error::arg("need n >= 1 and m >= 1"));
    }
    if m > n {
        return Err(Error::pre(format!(
            "alpha({n},{m}) is not a simple dimension vector (m > n), so it has no local settings"
        )));
    }
    if n > MAX_LOCAL_N {
        return Err(Error::unsupported(format!(
            "local settings are enumerated for n <= {MAX_LOCAL_N}, got {n}"
        )));
    }
    Ok(())
}

/// Class representatives of all settings for `α(n,m)`, sorted by `|k|` descending, then
/// Young diagram (descending lexicographic), then `k` descending lexicographic.
pub fn enumerate_settings(n: usize, m: usize) -> Result<Vec<LocalSetting>> {
    check_nm(n, m)?;
    let diagrams = young_diagrams(n);
    let mut out = Vec::new();
    for (di, diagram) in diagrams.iter().enumerate() {
        // cartesian product of weakly decreasing k tuples per row class
        let mut choices: Vec<Vec<usize>> = vec![Vec::new()];
        for &(len, mult) in diagram {
            let tuples = weakly_decreasing_tuples(len, mult);
            choices = choices
                .iter()
                .flat_map(|prefix| {
                    tuples.iter().map(move |t| {
                        let mut v = prefix.clone();
                        v.extend(t);
                        v
                    })
                })
                .collect();
        }
        for ks in choices {
            let total: usize = ks.iter().sum();
            if total > m {
                continue;
            }
            let rows: Vec<(usize, usize)> = diagram
                .iter()
                .flat_map(|&(len, mult)| std::iter::repeat_n(len, mult))
                .zip(ks.iter().copied())
                .collect();
            let label = YoungLabel::from_rows(&rows)?;
            out.push((total, di, ks, LocalSetting::representative(&label, m)?));
        }
    }
    out.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(b.2.cmp(&a.2)));
    Ok(out.into_iter().map(|x| x.3).collect())
}

/// `Π multiset(λ_i, μ_i)`: the number of `k` decorations of a Young diagram when `m = n`.
pub fn count_settings_for_young(rows: &[(usize, usize)]) -> u128 {
    rows.iter()
        .map(|&(len, mult)| multiset_coeff(len as u64, mult as u64))
        .product()
}

/// The local quiver: one dimension-1 vertex per block, then the `ψ_∅` vertex (dimension
/// `m - |k|`) when [`has_trivial_vertex`](LocalSetting::has_trivial_vertex).
pub fn local_quiver(s: &LocalSetting) -> QuiverSetting {
    let l = s.len();
    let a: Vec<u32> = s.blocks.iter().map(|b| b.len() as u32).collect();
    let k: Vec<u32> = s.k.iter().map(|&x| x as u32).collect();
    let v = l + usize::from(s.has_trivial_vertex());
    let mut arrows = vec![vec![0u32; v]; v];
    for i in 0..l {
        arrows[i][i] = (k[i] - 1) * (2 * a[i] - k[i] - 1);
        for j in 0..l {
            if i != j {
                arrows[i][j] = a[i] * k[j] + a[j] * k[i] - k[i] * k[j];
            }
        }
        if v > l {
            arrows[i][l] = a[i] - k[i];
            arrows[l][i] = a[i] - k[i];
        }
    }
    let mut dims = vec![1u32; l];
    if v > l {
        dims.push((s.m - s.k_total()) as u32);
    }
    QuiverSetting::new(Quiver::new(arrows).expect("square"), dims).expect("one dim per vertex")
}

/// The closed-form Euler matrix `[[2 diag|A| - (k^t v + v^t k + k^t k), -v^t], [-v, 1]]`,
/// reduced to the top-left block when `v = 0`.
pub fn local_euler_matrix(s: &LocalSetting) -> IntMatrix {
    let l = s.len();
    let a: Vec<i64> = s.blocks.iter().map(|b| b.len() as i64).collect();
    let k: Vec<i64> = s.k.iter().map(|&x| x as i64).collect();
    let v: Vec<i64> = a.iter().zip(&k).map(|(a, k)| a - k).collect();
    let size = if s.has_trivial_vertex() { l + 1 } else { l };
    IntMatrix::from_fn(size, size, |i, j| match (i < l, j < l) {
        (true, true) => {
            let delta = if i == j { 2 * a[i] } else { 0 };
            delta - (k[i] * v[j] + v[i] * k[j] + k[i] * k[j])
        }
        (true, false) => -v[i],
        (false, true) => -v[j],
        (false, false) => 1,
    })
}

fn check_same_family(s: &LocalSetting, t: &LocalSetting) -> Result<()> {
    if (s.n, s.m) != (t.n, t.m) {
        return Err(Error::arg(format!(
            "settings belong to different families: ({},{}) and ({},{})",
            s.n, s.m, t.n, t.m
        )));
    }
    Ok(())
}

/// Whether the labeled setting `t` lies in the closure of `s`: `t`'s partition refines
/// `s`'s and each `k_i` dominates the sum of the `k'` of the blocks inside `A_i`.
pub fn degenerates(s: &LocalSetting, t: &LocalSetting) -> Result<bool> {
    check_same_family(s, t)?;
    let mut used = vec![0usize; s.len()];
    for (b, &kb) in t.blocks.iter().zip(&t.k) {
        match s.blocks.iter().position(|a| b.is_subset_of(*a)) {
            Some(i) => used[i] += kb,
            None => return Ok(false),
        }
    }
    Ok(used.iter().zip(&s.k).all(|(u, k)| u <= k))
}

/// [`degenerates`] up to `S_n`: some relabeling of `t` degenerates from `s`.
pub fn degenerates_class(s: &LocalSetting, t: &LocalSetting) -> Result<bool> {
    check_same_family(s, t)?;
    let t_rows: Vec<(usize, usize)> = t.blocks.iter().map(|b| b.len()).zip(t.k.clone()).collect();
    let mut cap_len: Vec<usize> = s.blocks.iter().map(|b| b.len()).collect();
    let mut cap_k = s.k.clone();

    fn assign(
        idx: usize,
        rows: &[(usize, usize)],
        cap_len: &mut [usize],
        cap_k: &mut [usize],
    ) -> bool {
        if idx == rows.len() {
            return cap_len.iter().all(|&c| c == 0);
        }
        let (len, k) = rows[idx];
        let mut tried = BTreeSet::new();
        for i in 0..cap_len.len() {
            if cap_len[i] < len || cap_k[i] < k || !tried.insert((cap_len[i], cap_k[i])) {
                continue;
            }
            cap_len[i] -= len;
            cap_k[i] -= k;
            let ok = assign(idx + 1, rows, cap_len, cap_k);
            cap_len[i] += len;
            cap_k[i] += k;
            if ok {
                return true;
            }
        }
        false
    }

    Ok(assign(0, &t_rows, &mut cap_len, &mut cap_k))
}

/// One-step degenerations: lower one `k_i >= 2` by one, or split one block into two
/// nonempty parts whose `k` values sum to `k_i` (each part's `k` at most its size).
pub fn elementary_moves(s: &LocalSetting) -> Vec<LocalSetting> {
    let mut out = BTreeSet::new();
    for i in 0..s.len() {
        if s.k[i] >= 2 {
            let mut k = s.k.clone();
            k[i] -= 1;
            out.insert(LocalSetting::new(s.n, s.m, s.blocks.clone(), k).expect("smaller k"));
        }
        let a = s.blocks[i];
        if a.len() < 2 || s.k[i] < 2 {
            continue;
        }
        let low = 1u32 << (a.min_element().expect("nonempty") - 1);
        let bits = a.bits();
        // submasks of `a` containing its smallest element, excluding `a` itself
        let mut sub = bits;
        loop {
            sub = (sub - 1) & bits;
            if sub & low != 0 && sub != bits {
                let p = SubsetMask::new(sub, s.n).expect("submask");
                let q = SubsetMask::new(bits & !sub, s.n).expect("submask");
                for kp in 1..s.k[i] {
                    let kq = s.k[i] - kp;
                    if kp > p.len() || kq > q.len() {
                        continue;
                    }
                    let mut blocks = s.blocks.clone();
                    let mut k = s.k.clone();
                    blocks[i] = p;
                    k[i] = kp;
                    blocks.push(q);
                    k.push(kq);
                    out.insert(LocalSetting::new(s.n, s.m, blocks, k).expect("valid split"));
                }
            }
            if sub == 0 {
                break;
            }
        }
    }
    out.into_iter().collect()
}

/// [`elementary_moves`] of a class representative, as distinct classes.
pub fn elementary_moves_class(label: &YoungLabel, m: usize) -> Result<Vec<YoungLabel>> {
    let rep = LocalSetting::representative(label, m)?;
    let set: BTreeSet<YoungLabel> = elementary_moves(&rep)
        .iter()
        .map(LocalSetting::young_label)
        .collect();
    Ok(set.into_iter().collect())
}

/// Whether the semisimple point of type `s` is a smooth point of `iss_{α(n,m)}`: over a
/// simple (`A = {N}`, `k = m`), or `n = m` with `A = {N}`, or `n = m = 2`.
pub fn smooth_point(s: &LocalSetting) -> bool {
    let single = s.len() == 1;
    (single && s.k[0] == s.m) || (s.n == s.m && single) || (s.n == 2 && s.m == 2)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GraphNode {
    pub id: usize,
    pub label: YoungLabel,
    pub setting: LocalSetting,
    pub quiver: QuiverSetting,
    pub smooth: bool,
}

/// Nodes are settings, edges `(from, to)` are elementary degenerations from the coarser
/// to the finer setting.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DegenerationGraph {
    pub n: usize,
    pub m: usize,
    /// Whether nodes are labeled settings rather than `S_n`-classes.
    pub labeled: bool,
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<(usize, usize)>,
}

impl DegenerationGraph {
    fn build(n: usize, m: usize, labeled: bool, settings: Vec<LocalSetting>) -> Self {
        let key = |s: &LocalSetting| {
            if labeled {
                (s.blocks.clone(), s.k.clone())
            } else {
                let rep = LocalSetting::representative(&s.young_label(), s.m)
                    .expect("label of a valid setting");
                (rep.blocks, rep.k)
            }
        };
        let index: BTreeMap<_, usize> = settings
            .iter()
            .enumerate()
            .map(|(i, s)| (key(s), i))
            .collect();
        let mut edges = BTreeSet::new();
        for (i, s) in settings.iter().enumerate() {
            for t in elementary_moves(s) {
                let j = index[&key(&t)];
                edges.insert((i, j));
            }
        }
        let nodes = settings
            .into_iter()
            .enumerate()
            .map(|(id, setting)| GraphNode {
                id,
                label: setting.young_label(),
                quiver: local_quiver(&setting),
                smooth: smooth_point(&setting),
                setting,
            })
            .collect();
        DegenerationGraph {
            n,
            m,
            labeled,
            nodes,
            edges: edges.into_iter().collect(),
        }
    }

    pub fn node_by_label(&self, label: &YoungLabel) -> Option<&GraphNode> {
        self.nodes.iter().find(|x| &x.label == label)
    }

    /// Successor lists indexed by node id.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
        }
        adj
    }

    /// `reach[i][j]`: `j` is reachable from `i` along edges (reflexive).
    pub fn reachability(&self) -> Vec<Vec<bool>> {
        let adj = self.adjacency();
        let v = self.nodes.len();
        let mut reach = vec![vec![false; v]; v];
        for (s, row) in reach.iter_mut().enumerate() {
            let mut stack = vec![s];
            row[s] = true;
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if !row[w] {
                        row[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        reach
    }

    /// Full subgraph on the nodes with `|k| <= m`, reindexed in node order.
    pub fn restrict_k_total(&self, m: usize) -> DegenerationGraph {
        let keep: Vec<usize> = (0..self.nodes.len())
            .filter(|&i| self.nodes[i].setting.k_total() <= m)
            .collect();
        let new_id: BTreeMap<usize, usize> = keep
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        DegenerationGraph {
            n: self.n,
            m: self.m,
            labeled: self.labeled,
            nodes: keep
                .iter()
                .map(|&i| GraphNode {
                    id: new_id[&i],
                    ..self.nodes[i].clone()
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .filter_map(|(a, b)| Some((*new_id.get(a)?, *new_id.get(b)?)))
                .collect(),
        }
    }
}

/// The Young degeneration graph of `iss_{α(n,m)}`: one node per `S_n`-class.
pub fn degeneration_graph(n: usize, m: usize) -> Result<DegenerationGraph> {
    let settings = enumerate_settings(n, m)?;
    Ok(DegenerationGraph::build(n, m, false, settings))
}

/// Every labeled setting for `α(n,m)`, sorted by `|k|` descending, then canonical form.
pub fn enumerate_labeled_settings(n: usize, m: usize) -> Result<Vec<LocalSetting>> {
    check_nm(n, m)?;
    if n > MAX_LABELED_N {
        return Err(Error::unsupported(format!(
            "labeled settings are enumerated for n <= {MAX_LABELED_N}, got {n}"
        )));
    }
    let mut out = Vec::new();
    for p in enumerate_set_partitions(n)? {
        let sizes = p.shape();
        let mut ks: Vec<Vec<usize>> = vec![Vec::new()];
        for &size in &sizes {
            ks = ks
                .iter()
                .flat_map(|prefix| {
                    (1..=size).map(move |k| {
                        let mut v = prefix.clone();
                        v.push(k);
                        v
                    })
                })
                .collect();
        }
        for k in ks {
            if k.iter().sum::<usize>() <= m {
                out.push(LocalSetting::new(n, m, p.blocks().to_vec(), k)?);
            }
        }
    }
    out.sort_by(|a, b| b.k_total().cmp(&a.k_total()).then(a.cmp(b)));
    Ok(out)
}

/// The degeneration graph on labeled settings (no `S_n` quotient); `n <= 6`.
pub fn labeled_degeneration_graph(n: usize, m: usize) -> Result<DegenerationGraph> {
    let settings = enumerate_labeled_settings(n, m)?;
    Ok(DegenerationGraph::build(n, m, true, settings))
}
