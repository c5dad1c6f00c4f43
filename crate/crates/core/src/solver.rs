/*!
Exact search for bounded-defect colorings.

A defect profile `(c₁, …, cₖ)` allows each vertex of color `i` to share
that color with at most `cᵢ` of its neighbors; `(0, 0, 0)` is ordinary
proper 3-coloring. The solver does complete backtracking over vertices in
reverse degeneracy order with per-vertex, per-color defect counters, so
satisfiability answers are exact and deterministic. [`enumerate`] walks
every valid total coloring lazily; [`brute_force_colorable`] and
[`brute_force_count`] are independent reference oracles that try all `kⁿ`
assignments.

Colorings are stored as `Vec<Option<u8>>`, entry `v - 1` for vertex `v`,
colors 1-based.
*/

use crate::plane_graph::{PlaneGraph, VertexId};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// Largest vertex count [`enumerate`] accepts unless a caller raises it.
pub const DEFAULT_ENUMERATION_CAP: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("defect profile must list 1..=4 class bounds, got {0}")]
    BadProfileLength(usize),
    #[error("cannot parse defect profile {0:?}")]
    BadProfileSyntax(String),
    #[error("coloring covers {got} vertices, graph has {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("vertex {vertex} has color {color}, outside 1..={k}")]
    ColorOutOfRange { vertex: VertexId, color: u8, k: usize },
    #[error("vertex {0} is uncolored")]
    Uncolored(VertexId),
    #[error("precoloring already breaks the profile at vertex {vertex}: color {color} shared with {count} neighbors, bound {bound}")]
    InconsistentPrecoloring {
        vertex: VertexId,
        color: u8,
        count: usize,
        bound: usize,
    },
    #[error("enumeration refused: {n} vertices exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("cannot parse coloring entry {0:?}, expected `vertex:color`")]
    BadColoringSyntax(String),
}

/// The vector of per-color defect bounds `(c₁, …, cₖ)`, `1 ≤ k ≤ 4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectProfile(Vec<u8>);

impl DefectProfile {
    pub fn new(caps: &[u8]) -> Result<Self, SolveError> {
        if caps.is_empty() || caps.len() > 4 {
            return Err(SolveError::BadProfileLength(caps.len()));
        }
        Ok(DefectProfile(caps.to_vec()))
    }

    /// Proper 3-coloring, `(0,0,0)`.
    pub fn proper3() -> Self {
        DefectProfile(vec![0, 0, 0])
    }

    /// `(1,1,0)`: colors 1 and 2 tolerate one same-colored neighbor.
    pub fn d110() -> Self {
        DefectProfile(vec![1, 1, 0])
    }

    /// `(3,0,0)`: color 1 tolerates three same-colored neighbors.
    pub fn d300() -> Self {
        DefectProfile(vec![3, 0, 0])
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// Defect bound of a 1-based color.
    pub fn cap(&self, color: u8) -> usize {
        self.0[(color - 1) as usize] as usize
    }

    pub fn caps(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for DefectProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl std::str::FromStr for DefectProfile {
    type Err = SolveError;

    /// Accepts `"1,1,0"` or the compact digit string `"110"`.
    fn from_str(s: &str) -> Result<Self, SolveError> {
        let caps: Result<Vec<u8>, ()> = if s.contains(',') {
            s.split(',').map(|p| p.trim().parse::<u8>().map_err(|_| ())).collect()
        } else {
            s.chars()
                .map(|ch| ch.to_digit(10).map(|d| d as u8).ok_or(()))
                .collect()
        };
        match caps {
            Ok(caps) if !caps.is_empty() => DefectProfile::new(&caps),
            _ => Err(SolveError::BadProfileSyntax(s.to_string())),
        }
    }
}

/// Total or partial coloring; entry `v - 1` holds the color of vertex `v`.
pub type Coloring = Vec<Option<u8>>;

/// Renders a coloring as space-separated `v:color` pairs (colored vertices
/// only, ascending).
pub fn format_coloring(coloring: &Coloring) -> String {
    coloring
        .iter()
        .enumerate()
        .filter_map(|(i, c)| c.map(|c| format!("{}:{}", i + 1, c)))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses space-separated `v:color` pairs into a coloring over `n` vertices.
pub fn parse_coloring(s: &str, n: usize) -> Result<Coloring, SolveError> {
    let mut coloring = vec![None; n];
    for token in s.split_whitespace() {
        let (v, c) = token
            .split_once(':')
            .ok_or_else(|| SolveError::BadColoringSyntax(token.to_string()))?;
        let v: usize = v
            .parse()
            .map_err(|_| SolveError::BadColoringSyntax(token.to_string()))?;
        let c: u8 = c
            .parse()
            .map_err(|_| SolveError::BadColoringSyntax(token.to_string()))?;
        if v == 0 || v > n {
            return Err(SolveError::WrongLength { expected: n, got: v });
        }
        coloring[v - 1] = Some(c);
    }
    Ok(coloring)
}

/// One defect-bound breach in a total coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertex: VertexId,
    pub color: u8,
    pub same_color_neighbors: usize,
    pub bound: usize,
}

/// A bare adjacency instance for the search, decoupled from the plane
/// structure so vertex-deleted subgraphs (possibly disconnected or empty)
/// can be solved too. Vertices are 0-based here.
#[derive(Debug, Clone)]
pub struct ColorInstance {
    pub adj: Vec<Vec<usize>>,
}

impl ColorInstance {
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn from_graph(g: &PlaneGraph) -> Self {
        let adj = g
            .vertices()
            .map(|v| g.neighbors(v).iter().map(|&w| w - 1).collect())
            .collect();
        ColorInstance { adj }
    }

    /// The instance induced on `V(g) \ removed`, together with the original
    /// 1-based id of each instance vertex.
    pub fn without_vertices(g: &PlaneGraph, removed: &BTreeSet<VertexId>) -> (Self, Vec<VertexId>) {
        let kept: Vec<VertexId> = g.vertices().filter(|v| !removed.contains(v)).collect();
        let index_of: std::collections::HashMap<VertexId, usize> =
            kept.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = kept
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .filter_map(|w| index_of.get(w).copied())
                    .collect()
            })
            .collect();
        (ColorInstance { adj }, kept)
    }
}

/// Backtracking state shared by `solve` and `enumerate`.
#[derive(Debug)]
struct Search {
    adj: Vec<Vec<usize>>,
    caps: Vec<usize>,
    assign: Vec<Option<u8>>,
    /// `counts[v][i]` = how many neighbors of `v` currently hold color `i+1`.
    counts: Vec<Vec<usize>>,
    /// Free vertices in coloring order.
    order: Vec<usize>,
    /// Next color to try at each depth.
    next_try: Vec<u8>,
    depth: usize,
    at_complete: bool,
    exhausted: bool,
}

impl Search {
    fn new(
        inst: &ColorInstance,
        profile: &DefectProfile,
        precolored: &[Option<u8>],
    ) -> Result<Self, SolveError> {
        let n = inst.n();
        if precolored.len() != n {
            return Err(SolveError::WrongLength { expected: n, got: precolored.len() });
        }
        let k = profile.k();
        for (i, c) in precolored.iter().enumerate() {
            if let Some(c) = *c {
                if c == 0 || c as usize > k {
                    return Err(SolveError::ColorOutOfRange { vertex: i + 1, color: c, k });
                }
            }
        }
        let caps: Vec<usize> = profile.caps().iter().map(|&c| c as usize).collect();
        let mut search = Search {
            adj: inst.adj.clone(),
            caps,
            assign: vec![None; n],
            counts: vec![vec![0; k]; n],
            order: Vec::new(),
            next_try: Vec::new(),
            depth: 0,
            at_complete: false,
            exhausted: false,
        };
        for (v, c) in precolored.iter().enumerate() {
            if let Some(c) = *c {
                search.put(v, c);
            }
        }
        // The precoloring must already respect the profile on its own.
        for (v, c) in precolored.iter().enumerate() {
            if let Some(c) = *c {
                let count = search.counts[v][(c - 1) as usize];
                let bound = search.caps[(c - 1) as usize];
                if count > bound {
                    return Err(SolveError::InconsistentPrecoloring {
                        vertex: v + 1,
                        color: c,
                        count,
                        bound,
                    });
                }
            }
        }
        search.order = reverse_degeneracy_order(inst)
            .into_iter()
            .filter(|&v| precolored[v].is_none())
            .collect();
        search.next_try = vec![1; search.order.len()];
        Ok(search)
    }

    fn put(&mut self, v: usize, c: u8) {
        self.assign[v] = Some(c);
        for &w in &self.adj[v] {
            self.counts[w][(c - 1) as usize] += 1;
        }
    }

    fn take_back(&mut self, v: usize) -> u8 {
        let c = self.assign[v].take().expect("vertex was assigned");
        for &w in &self.adj[v] {
            self.counts[w][(c - 1) as usize] -= 1;
        }
        c
    }

    /// May `v` take color `c` without pushing itself or a colored neighbor
    /// past the bound?
    fn can_take(&self, v: usize, c: u8) -> bool {
        let ci = (c - 1) as usize;
        if self.counts[v][ci] > self.caps[ci] {
            return false;
        }
        self.adj[v].iter().all(|&w| {
            self.assign[w] != Some(c) || self.counts[w][ci] + 1 <= self.caps[ci]
        })
    }

    fn find_valid_from(&self, v: usize, from: u8) -> Option<u8> {
        (from..=self.caps.len() as u8).find(|&c| self.can_take(v, c))
    }

    fn pop_level(&mut self) {
        self.depth -= 1;
        let v = self.order[self.depth];
        self.take_back(v);
        self.at_complete = false;
    }

    /// Advances to the next complete valid assignment; false when none left.
    fn next_complete(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        let m = self.order.len();
        if self.at_complete {
            if m == 0 {
                self.exhausted = true;
                return false;
            }
            self.pop_level();
        } else if self.depth == m {
            // Everything was precolored; the precoloring is the one answer.
            self.at_complete = true;
            return true;
        }
        loop {
            if self.depth == m {
                self.at_complete = true;
                return true;
            }
            let v = self.order[self.depth];
            match self.find_valid_from(v, self.next_try[self.depth]) {
                Some(c) => {
                    self.put(v, c);
                    self.next_try[self.depth] = c + 1;
                    self.depth += 1;
                    if self.depth < m {
                        self.next_try[self.depth] = 1;
                    }
                }
                None => {
                    if self.depth == 0 {
                        self.exhausted = true;
                        return false;
                    }
                    self.pop_level();
                }
            }
        }
    }

    fn snapshot(&self) -> Coloring {
        self.assign.clone()
    }
}

/// Coloring order: repeatedly strip a minimum-degree vertex (smallest id on
/// ties), then color in reverse strip order.
fn reverse_degeneracy_order(inst: &ColorInstance) -> Vec<usize> {
    let n = inst.n();
    let mut deg: Vec<usize> = inst.adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut removal = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("vertices remain");
        removed[v] = true;
        removal.push(v);
        for &w in &inst.adj[v] {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    removal.reverse();
    removal
}

/// Lists every defect-bound violation of a total coloring.
pub fn verify(
    g: &PlaneGraph,
    profile: &DefectProfile,
    coloring: &Coloring,
) -> Result<Vec<Violation>, SolveError> {
    let n = g.vertex_count();
    if coloring.len() != n {
        return Err(SolveError::WrongLength { expected: n, got: coloring.len() });
    }
    let k = profile.k();
    for v in g.vertices() {
        match coloring[v - 1] {
            None => return Err(SolveError::Uncolored(v)),
            Some(c) if c == 0 || c as usize > k => {
                return Err(SolveError::ColorOutOfRange { vertex: v, color: c, k })
            }
            Some(_) => {}
        }
    }
    let mut violations = Vec::new();
    for v in g.vertices() {
        let c = coloring[v - 1].expect("checked total");
        let same = g
            .neighbors(v)
            .iter()
            .filter(|&&w| coloring[w - 1] == Some(c))
            .count();
        let bound = profile.cap(c);
        if same > bound {
            violations.push(Violation { vertex: v, color: c, same_color_neighbors: same, bound });
        }
    }
    Ok(violations)
}

/// Finds a total coloring extending `precolored`, or proves none exists.
pub fn solve(
    g: &PlaneGraph,
    profile: &DefectProfile,
    precolored: &Coloring,
) -> Result<Option<Coloring>, SolveError> {
    let inst = ColorInstance::from_graph(g);
    Ok(solve_instance(&inst, profile, precolored)?
        .map(|colors| colors.into_iter().map(Some).collect()))
}

/// [`solve`] over a bare adjacency instance; returns total 1-based colors.
pub fn solve_instance(
    inst: &ColorInstance,
    profile: &DefectProfile,
    precolored: &[Option<u8>],
) -> Result<Option<Vec<u8>>, SolveError> {
    let mut search = Search::new(inst, profile, precolored)?;
    if search.next_complete() {
        Ok(Some(
            search.assign.iter().map(|c| c.expect("complete")).collect(),
        ))
    } else {
        Ok(None)
    }
}

/// Lazy stream of every valid total coloring extending `precolored`.
#[derive(Debug)]
pub struct ColoringEnumerator {
    search: Search,
}

impl Iterator for ColoringEnumerator {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        if self.search.next_complete() {
            Some(self.search.snapshot())
        } else {
            None
        }
    }
}

/// Enumerates all valid total colorings, refusing graphs larger than `cap`
/// (default [`DEFAULT_ENUMERATION_CAP`]).
pub fn enumerate(
    g: &PlaneGraph,
    profile: &DefectProfile,
    precolored: &Coloring,
    cap: Option<usize>,
) -> Result<ColoringEnumerator, SolveError> {
    let cap = cap.unwrap_or(DEFAULT_ENUMERATION_CAP);
    let n = g.vertex_count();
    if n > cap {
        return Err(SolveError::CapExceeded { n, cap });
    }
    let inst = ColorInstance::from_graph(g);
    Ok(ColoringEnumerator { search: Search::new(&inst, profile, precolored)? })
}

/// True iff `v` shares its color `i` with at most `max(cᵢ − 1, 0)`
/// neighbors — the slack that lets one more same-colored neighbor arrive.
pub fn is_nicely_colored(
    g: &PlaneGraph,
    profile: &DefectProfile,
    coloring: &Coloring,
    v: VertexId,
) -> Result<bool, SolveError> {
    let c = coloring
        .get(v - 1)
        .copied()
        .flatten()
        .ok_or(SolveError::Uncolored(v))?;
    if c == 0 || c as usize > profile.k() {
        return Err(SolveError::ColorOutOfRange { vertex: v, color: c, k: profile.k() });
    }
    let same = g
        .neighbors(v)
        .iter()
        .filter(|&&w| coloring[w - 1] == Some(c))
        .count();
    Ok(same <= profile.cap(c).saturating_sub(1))
}

/// Reference oracle: tries all `kⁿ` total assignments directly.
pub fn brute_force_colorable(inst: &ColorInstance, profile: &DefectProfile) -> bool {
    brute_force_count_capped(inst, profile, Some(1)) > 0
}

/// Reference oracle: counts valid total colorings by trying all `kⁿ`.
pub fn brute_force_count(inst: &ColorInstance, profile: &DefectProfile) -> usize {
    brute_force_count_capped(inst, profile, None)
}

fn brute_force_count_capped(
    inst: &ColorInstance,
    profile: &DefectProfile,
    stop_after: Option<usize>,
) -> usize {
    let n = inst.n();
    let k = profile.k() as u8;
    let mut colors = vec![1u8; n];
    let mut found = 0;
    'outer: loop {
        let valid = (0..n).all(|v| {
            let c = colors[v];
            let same = inst.adj[v].iter().filter(|&&w| colors[w] == c).count();
            same <= profile.cap(c)
        });
        if valid {
            found += 1;
            if stop_after.is_some_and(|s| found >= s) {
                return found;
            }
        }
        // Odometer over assignments.
        for v in 0..n {
            if colors[v] < k {
                colors[v] += 1;
                continue 'outer;
            }
            colors[v] = 1;
        }
        return found;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grow;
    use crate::plane_graph::PlaneGraph;
    use proptest::prelude::*;

    fn k4() -> PlaneGraph {
        PlaneGraph::from_rotation(vec![vec![2, 3, 4], vec![1, 4, 3], vec![1, 2, 4], vec![1, 3, 2]])
            .unwrap()
    }

    fn total(colors: &[u8]) -> Coloring {
        colors.iter().map(|&c| Some(c)).collect()
    }

    #[test]
    fn verify_counts_same_colored_neighbors() {
        let g = grow::triangle();
        assert!(verify(&g, &DefectProfile::proper3(), &total(&[1, 2, 3])).unwrap().is_empty());

        let two = verify(&g, &DefectProfile::proper3(), &total(&[1, 1, 2])).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two.iter().all(|v| v.color == 1 && v.same_color_neighbors == 1 && v.bound == 0));
        assert!(verify(&g, &DefectProfile::d110(), &total(&[1, 1, 2])).unwrap().is_empty());

        assert!(verify(&k4(), &DefectProfile::d300(), &total(&[1, 1, 2, 3])).unwrap().is_empty());

        assert_eq!(
            verify(&g, &DefectProfile::proper3(), &vec![Some(1), None, Some(2)]).unwrap_err(),
            SolveError::Uncolored(2)
        );
        assert_eq!(
            verify(&g, &DefectProfile::proper3(), &total(&[1, 2, 4])).unwrap_err(),
            SolveError::ColorOutOfRange { vertex: 3, color: 4, k: 3 }
        );
    }

    #[test]
    fn solve_matches_known_satisfiability() {
        let none = vec![None; 4];
        assert!(solve(&k4(), &DefectProfile::proper3(), &none).unwrap().is_none());

        let found = solve(&k4(), &DefectProfile::d110(), &none).unwrap().unwrap();
        assert!(verify(&k4(), &DefectProfile::d110(), &found).unwrap().is_empty());

        let c7 = grow::cycle(7);
        let found = solve(&c7, &DefectProfile::proper3(), &vec![None; 7]).unwrap().unwrap();
        assert!(verify(&c7, &DefectProfile::proper3(), &found).unwrap().is_empty());
    }

    #[test]
    fn solve_respects_and_validates_precoloring() {
        let g = grow::triangle();
        let mut pre = vec![None; 3];
        pre[0] = Some(3);
        let found = solve(&g, &DefectProfile::proper3(), &pre).unwrap().unwrap();
        assert_eq!(found[0], Some(3));

        let bad = total(&[3, 3, 3]);
        assert_eq!(
            solve(&g, &DefectProfile::proper3(), &bad).unwrap_err(),
            SolveError::InconsistentPrecoloring { vertex: 1, color: 3, count: 2, bound: 0 }
        );
    }

    #[test]
    fn enumerate_counts_match_brute_force() {
        let g = grow::triangle();
        let inst = ColorInstance::from_graph(&g);
        let none = vec![None; 3];

        let proper: Vec<_> = enumerate(&g, &DefectProfile::proper3(), &none, None).unwrap().collect();
        assert_eq!(proper.len(), 6);

        let single = PlaneGraph::from_rotation(vec![vec![]]).unwrap();
        let singles: Vec<_> =
            enumerate(&single, &DefectProfile::proper3(), &vec![None], None).unwrap().collect();
        assert_eq!(singles.len(), 3);

        let lazy = enumerate(&g, &DefectProfile::d110(), &none, None).unwrap().count();
        assert_eq!(lazy, brute_force_count(&inst, &DefectProfile::d110()));

        // Every enumerated coloring verifies, and they are pairwise distinct.
        let mut seen = std::collections::BTreeSet::new();
        for c in enumerate(&g, &DefectProfile::d110(), &none, None).unwrap() {
            assert!(verify(&g, &DefectProfile::d110(), &c).unwrap().is_empty());
            assert!(seen.insert(format_coloring(&c)));
        }
    }

    #[test]
    fn enumerate_cap_is_enforced() {
        let c7 = grow::cycle(7);
        assert_eq!(
            enumerate(&c7, &DefectProfile::proper3(), &vec![None; 7], Some(6)).unwrap_err(),
            SolveError::CapExceeded { n: 7, cap: 6 }
        );
    }

    #[test]
    fn enumeration_count_is_isomorphism_invariant_on_bowtie_pair() {
        let a = PlaneGraph::from_rotation(vec![
            vec![5, 2],
            vec![1, 5],
            vec![5, 4],
            vec![3, 5],
            vec![2, 1, 4, 3],
        ])
        .unwrap();
        // Same shape, different labeling: triangle 1-2-3 with a fresh
        // triangle hung off vertex 3.
        let b = grow::attach_triangle_at(&grow::triangle(), 3).unwrap();
        for profile in [DefectProfile::proper3(), DefectProfile::d110(), DefectProfile::d300()] {
            let ca = enumerate(&a, &profile, &vec![None; 5], None).unwrap().count();
            let cb = enumerate(&b, &profile, &vec![None; 5], None).unwrap().count();
            assert_eq!(ca, cb, "profile {profile}");
        }
    }

    #[test]
    fn nicely_colored_leaves_slack_for_one_more() {
        // Color 3 under (1,1,0): bound 0, so nicely means 0 same-colored.
        let g = grow::triangle();
        assert!(is_nicely_colored(&g, &DefectProfile::d110(), &total(&[3, 1, 2]), 1).unwrap());
        assert!(!is_nicely_colored(&g, &DefectProfile::d110(), &total(&[3, 3, 2]), 1).unwrap());

        // Color 1 under (3,0,0): nicely tolerates up to two same-colored
        // neighbors; a third uses up the slack.
        let path4 =
            PlaneGraph::from_rotation(vec![vec![2], vec![1, 3], vec![2, 4], vec![3]]).unwrap();
        assert!(is_nicely_colored(&path4, &DefectProfile::d300(), &total(&[1, 1, 1, 1]), 2).unwrap());
        let star =
            PlaneGraph::from_rotation(vec![vec![2, 3, 4], vec![1], vec![1], vec![1]]).unwrap();
        assert!(!is_nicely_colored(&star, &DefectProfile::d300(), &total(&[1, 1, 1, 1]), 1).unwrap());

        assert_eq!(
            is_nicely_colored(&g, &DefectProfile::d110(), &vec![None; 3], 1).unwrap_err(),
            SolveError::Uncolored(1)
        );
    }

    #[test]
    fn profile_parsing_round_trips() {
        use std::str::FromStr;
        assert_eq!(DefectProfile::from_str("1,1,0").unwrap(), DefectProfile::d110());
        assert_eq!(DefectProfile::from_str("110").unwrap(), DefectProfile::d110());
        assert_eq!(DefectProfile::from_str("300").unwrap(), DefectProfile::d300());
        assert_eq!(DefectProfile::from_str("000").unwrap(), DefectProfile::proper3());
        assert_eq!(DefectProfile::d110().to_string(), "1,1,0");
        assert!(DefectProfile::from_str("").is_err());
        assert!(DefectProfile::from_str("1,2,3,4,5").is_err());
        assert!(DefectProfile::from_str("x").is_err());
    }

    #[test]
    fn coloring_text_round_trips() {
        let c = vec![Some(1), None, Some(3)];
        let s = format_coloring(&c);
        assert_eq!(s, "1:1 3:3");
        assert_eq!(parse_coloring(&s, 3).unwrap(), c);
        assert!(parse_coloring("5:1", 3).is_err());
        assert!(parse_coloring("nope", 3).is_err());
    }

    proptest! {
        /// Completeness and soundness against the brute-force oracle on
        /// arbitrary small instances (not just planar ones).
        #[test]
        fn solver_agrees_with_brute_force(
            n in 1usize..=6,
            edge_bits in proptest::collection::vec(any::<bool>(), 15),
            profile_pick in 0usize..3,
        ) {
            let profile = [DefectProfile::proper3(), DefectProfile::d110(), DefectProfile::d300()]
                [profile_pick].clone();
            let mut adj = vec![Vec::new(); n];
            let mut bit = 0;
            for u in 0..n {
                for w in (u + 1)..n {
                    if edge_bits[bit] {
                        adj[u].push(w);
                        adj[w].push(u);
                    }
                    bit += 1;
                }
            }
            let inst = ColorInstance { adj };
            let got = solve_instance(&inst, &profile, &vec![None; n]).unwrap();
            prop_assert_eq!(got.is_some(), brute_force_colorable(&inst, &profile));
            if let Some(colors) = got {
                for v in 0..n {
                    let c = colors[v];
                    let same = inst.adj[v].iter().filter(|&&w| colors[w] == c).count();
                    prop_assert!(same <= profile.cap(c));
                }
            }
        }

        /// If a profile admits a coloring, any componentwise-larger profile
        /// admits one too.
        #[test]
        fn profile_monotonicity(
            n in 1usize..=6,
            edge_bits in proptest::collection::vec(any::<bool>(), 15),
        ) {
            let mut adj = vec![Vec::new(); n];
            let mut bit = 0;
            for u in 0..n {
                for w in (u + 1)..n {
                    if edge_bits[bit] {
                        adj[u].push(w);
                        adj[w].push(u);
                    }
                    bit += 1;
                }
            }
            let inst = ColorInstance { adj };
            let none = vec![None; n];
            if solve_instance(&inst, &DefectProfile::proper3(), &none).unwrap().is_some() {
                prop_assert!(solve_instance(&inst, &DefectProfile::d110(), &none).unwrap().is_some());
                prop_assert!(solve_instance(&inst, &DefectProfile::d300(), &none).unwrap().is_some());
            }
        }
    }
}
