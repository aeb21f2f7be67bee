//! Zigzag sequences and the dynamic program over their corresponding sequences.
//!
//! A zigzag sequence `q_1..q_2k` (`k >= 2`) starts in row 1, alternates a
//! strictly-downward even step with a strictly-rightward odd step, and ends in
//! row `m`. A corresponding sequence picks, for each even step, a vertex of the
//! same row at or left of `q_i`, and for each odd step a vertex of the same
//! column at or above `q_i`; the last vertex must also lie right of `q_1`.
//!
//! For a start vertex `(1,z)` the program keeps, for every vertex `(r,c)`:
//! `Fo`/`Fe`, the cheapest odd/even-length prefix whose zigzag prefix ends at
//! `(r,c)`, and the running minima `Go(r,c) = min_{i<=r} Fo(i,c)` and
//! `Ge(r,c) = min_{j<=c} Fe(r,j)`. With `Cp`/`Rp` the column/row prefix
//! minima, for `1 < r < m`:
//!
//! ```text
//! Fo(r,c) = Ge(r,c-1) + Cp(c,r)        Go(r,c) = min(Fo(r,c), Go(r-1,c))
//! Fe(r,c) = Go(r-1,c) + Rp(r,c)        Ge(r,c) = min(Fe(r,c), Ge(r,c-1))
//! ```
//!
//! Row 1 only holds `Fo(1,z) = c(1,z)`. Row `m` only holds
//! `Fe(m,c) = Go(m-1,c) + min(c(m,z+1..=c))` for `c > z`. The answer is `Ge(m,n)`.

use rayon::prelude::*;

use crate::candidate::{Candidate, Category, Provenance, ZigzagWitness};
use crate::error::{Error, Result};
use crate::grid::{Grid, Orientation, Vertex};
use crate::minima::MinimaTables;
use crate::weight::{Reach, Weight};

/// A zigzag sequence `q_1..q_2k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZigzagSequence(pub Vec<Vertex>);

/// A sequence `t_1..t_2k` corresponding to a zigzag sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CorrespondingSequence {
    pub vertices: Vec<Vertex>,
    pub zigzag: ZigzagSequence,
}

impl ZigzagSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Checks the zigzag shape in an `m x n` grid.
    pub fn validate(&self, m: usize, n: usize) -> Result<()> {
        let q = &self.0;
        let fail = |why: &str| {
            Err(Error::Contract(format!(
                "not a zigzag sequence: {why}: {q:?}"
            )))
        };
        if q.len() < 4 || !q.len().is_multiple_of(2) {
            return fail("length must be even and at least 4");
        }
        if q.iter()
            .any(|v| v.row < 1 || v.row > m || v.col < 1 || v.col > n)
        {
            return fail("vertex outside the grid");
        }
        if q[0].row != 1 || q[q.len() - 1].row != m {
            return fail("must run from row 1 to row m");
        }
        for i in 1..q.len() {
            // 0-based index i is the (i+1)-th element: odd index means an even step.
            let ok = if i % 2 == 1 {
                q[i].col == q[i - 1].col && q[i].row > q[i - 1].row
            } else {
                q[i].row == q[i - 1].row && q[i].col > q[i - 1].col
            };
            if !ok {
                return fail("steps must alternate down and right");
            }
        }
        if q[0].col >= q[q.len() - 1].col {
            return fail("last column must exceed the first");
        }
        Ok(())
    }
}

impl CorrespondingSequence {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks the correspondence conditions (and the zigzag itself).
    pub fn validate(&self, m: usize, n: usize) -> Result<()> {
        self.zigzag.validate(m, n)?;
        let (t, q) = (&self.vertices, &self.zigzag.0);
        let fail = |why: &str| {
            Err(Error::Contract(format!(
                "not a corresponding sequence: {why}: {t:?} for {q:?}"
            )))
        };
        if t.len() != q.len() {
            return fail("length differs from the zigzag");
        }
        if t[0] != q[0] {
            return fail("first vertices differ");
        }
        for i in 1..t.len() {
            let ok = if i % 2 == 1 {
                t[i].row == q[i].row && t[i].col >= 1 && t[i].col <= q[i].col
            } else {
                t[i].col == q[i].col && t[i].row >= 1 && t[i].row <= q[i].row
            };
            if !ok {
                return fail("vertex violates its step condition");
            }
        }
        if t[t.len() - 1].col <= t[0].col {
            return fail("last column must exceed the first");
        }
        let mut sorted = t.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != t.len() {
            return fail("vertices must be distinct");
        }
        Ok(())
    }
}

/// The four DP layers for one start column, with traceback pointers.
#[derive(Clone, Debug)]
pub struct DpTables<W> {
    m: usize,
    n: usize,
    start: usize,
    fo: Vec<W>,
    fe: Vec<W>,
    go: Vec<W>,
    ge: Vec<W>,
    // Witness of Fo(r,c): a row in column c. Witness of Fe(r,c): a column in row r.
    fo_witness: Vec<u32>,
    fe_witness: Vec<u32>,
    // Go(r,c) = Fo(go_arg, c); Ge(r,c) = Fe(r, ge_arg).
    go_arg: Vec<u32>,
    ge_arg: Vec<u32>,
}

impl<W: Weight> DpTables<W> {
    fn at(&self, r: usize, c: usize) -> usize {
        assert!(
            (1..=self.m).contains(&r) && (1..=self.n).contains(&c),
            "cell ({r},{c})"
        );
        (r - 1) * self.n + (c - 1)
    }

    pub fn start_col(&self) -> usize {
        self.start
    }

    pub fn fo(&self, r: usize, c: usize) -> Reach<W> {
        self.fo[self.at(r, c)].into()
    }

    pub fn fe(&self, r: usize, c: usize) -> Reach<W> {
        self.fe[self.at(r, c)].into()
    }

    pub fn go(&self, r: usize, c: usize) -> Reach<W> {
        self.go[self.at(r, c)].into()
    }

    pub fn ge(&self, r: usize, c: usize) -> Reach<W> {
        self.ge[self.at(r, c)].into()
    }

    /// Cheapest corresponding sequence for this start column: `Ge(m,n)`.
    pub fn answer(&self) -> Reach<W> {
        self.ge(self.m, self.n)
    }
}

fn check_start(n: usize, z: usize) -> Result<()> {
    if z < 1 || z >= n {
        return Err(Error::Contract(format!(
            "start column {z} must lie in 1..={}",
            n - 1
        )));
    }
    Ok(())
}

/// Fills all four layers for start vertex `(1,z)` and returns `Ge(m,n)`.
pub fn run_dp<W: Weight>(t: &MinimaTables<W>, z: usize) -> Result<(Reach<W>, DpTables<W>)> {
    let (m, n) = (t.m(), t.n());
    check_start(n, z)?;
    let size = m * n;
    let mut d = DpTables {
        m,
        n,
        start: z,
        fo: vec![W::UNREACHABLE; size],
        fe: vec![W::UNREACHABLE; size],
        go: vec![W::UNREACHABLE; size],
        ge: vec![W::UNREACHABLE; size],
        fo_witness: vec![0; size],
        fe_witness: vec![0; size],
        go_arg: vec![0; size],
        ge_arg: vec![0; size],
    };

    let base = z - 1;
    d.fo[base] = t.side_weight(Vertex::new(1, z));
    d.go[base] = d.fo[base];
    d.fo_witness[base] = 1;
    d.go_arg[base] = 1;

    for r in 2..m {
        let (cp, cp_arg) = (t.cpref_row(r), t.cpref_arg_row(r));
        let (rp, rp_arg) = (t.rpref_row(r), t.rpref_arg_row(r));
        let (prev, row) = ((r - 2) * n, (r - 1) * n);
        let (mut ge, mut ge_arg) = (W::UNREACHABLE, 0u32);
        for c in 0..n {
            let go_prev = d.go[prev + c];
            let fo = ge.plus(cp[c]).normalized();
            let fe = go_prev.plus(rp[c]).normalized();
            d.fo[row + c] = fo;
            d.fo_witness[row + c] = cp_arg[c];
            d.fe[row + c] = fe;
            d.fe_witness[row + c] = rp_arg[c];
            if fo < go_prev {
                d.go[row + c] = fo;
                d.go_arg[row + c] = r as u32;
            } else {
                d.go[row + c] = go_prev;
                d.go_arg[row + c] = d.go_arg[prev + c];
            }
            if fe < ge {
                ge = fe;
                ge_arg = c as u32 + 1;
            }
            d.ge[row + c] = ge;
            d.ge_arg[row + c] = ge_arg;
        }
    }

    let (prev, row) = ((m - 2) * n, (m - 1) * n);
    let (mut ge, mut ge_arg) = (W::UNREACHABLE, 0u32);
    for c in 1..=n {
        if c > z {
            let tail = t.last_row_from(z + 1)[c - z - 1];
            let fe = d.go[prev + c - 1].plus(tail).normalized();
            d.fe[row + c - 1] = fe;
            d.fe_witness[row + c - 1] = t.last_row_arg(z + 1, c) as u32;
            if fe < ge {
                ge = fe;
                ge_arg = c as u32;
            }
        }
        d.ge[row + c - 1] = ge;
        d.ge_arg[row + c - 1] = ge_arg;
    }
    Ok((d.answer(), d))
}

/// Recovers a cheapest corresponding sequence and its zigzag from filled tables.
pub fn traceback<W: Weight>(d: &DpTables<W>) -> Result<CorrespondingSequence> {
    if !d.answer().is_reachable() {
        return Err(Error::Contract(
            "no corresponding sequence for this start column".into(),
        ));
    }
    let (m, n) = (d.m, d.n);
    let mut t = Vec::new();
    let mut q = Vec::new();

    let j = d.ge_arg[d.at(m, n)] as usize;
    t.push(Vertex::new(m, d.fe_witness[d.at(m, j)] as usize));
    q.push(Vertex::new(m, j));
    let (mut row, mut col) = (m - 1, j);
    loop {
        let i = d.go_arg[d.at(row, col)] as usize;
        if i == 1 {
            debug_assert_eq!(col, d.start);
            t.push(Vertex::new(1, col));
            q.push(Vertex::new(1, col));
            break;
        }
        t.push(Vertex::new(d.fo_witness[d.at(i, col)] as usize, col));
        q.push(Vertex::new(i, col));
        let j = d.ge_arg[d.at(i, col - 1)] as usize;
        t.push(Vertex::new(i, d.fe_witness[d.at(i, j)] as usize));
        q.push(Vertex::new(i, j));
        row = i - 1;
        col = j;
    }
    t.reverse();
    q.reverse();
    let seq = CorrespondingSequence {
        vertices: t,
        zigzag: ZigzagSequence(q),
    };
    seq.validate(m, n)?;
    Ok(seq)
}

/// `Ge(m,n)` for start column `z` without tables; `go` is scratch of length `n`.
///
/// Same recurrences as [`run_dp`], keeping only the previous `Go` row and
/// skipping columns left of `z`, which are unreachable. Unreachable values are
/// left unnormalized; they stay at or above the threshold.
pub fn scan_start<W: Weight>(t: &MinimaTables<W>, z: usize, go: &mut [W]) -> W {
    let m = t.m();
    let first = z - 1;
    go.fill(W::UNREACHABLE);
    go[first] = t.side_weight(Vertex::new(1, z));
    for r in 2..m {
        let cp = &t.cpref_row(r)[first..];
        let rp = &t.rpref_row(r)[first..];
        let go = &mut go[first..];
        let mut ge = W::UNREACHABLE;
        for ((g, &cp), &rp) in go.iter_mut().zip(cp).zip(rp) {
            let prev = *g;
            let fo = ge.plus(cp);
            let fe = prev.plus(rp);
            *g = prev.min(fo);
            ge = ge.min(fe);
        }
    }
    let tail = t.last_row_from(z + 1);
    go[z..]
        .iter()
        .zip(tail)
        .map(|(&g, &w)| g.plus(w))
        .min()
        .unwrap_or(W::UNREACHABLE)
        .normalized()
}

/// Start columns scanned together by [`scan_batch`].
pub const BATCH: usize = 16;

/// [`scan_start`] for the start columns `z0..z0+BATCH` (those below `n`) at once.
///
/// The lanes share the table reads and give the running minima independent
/// dependency chains. Lanes whose start lies right of a column see it as
/// unreachable, so sweeping every lane from `z0` is exact.
pub fn scan_batch<W: Weight>(
    t: &MinimaTables<W>,
    z0: usize,
    go: &mut Vec<[W; BATCH]>,
) -> [W; BATCH] {
    let (m, n) = (t.m(), t.n());
    let first = z0 - 1;
    go.clear();
    go.resize(n, [W::UNREACHABLE; BATCH]);
    for (lane, z) in (z0..n.min(z0 + BATCH)).enumerate() {
        go[z - 1][lane] = t.side_weight(Vertex::new(1, z));
    }
    sweep_dispatch(t, first, m, go);
    let mut out = [W::UNREACHABLE; BATCH];
    for (lane, slot) in out.iter_mut().enumerate() {
        let z = z0 + lane;
        if z < n {
            let tail = t.last_row_from(z + 1);
            *slot = go[z..]
                .iter()
                .zip(tail)
                .map(|(g, &w)| g[lane].plus(w))
                .min()
                .unwrap_or(W::UNREACHABLE)
                .normalized();
        }
    }
    out
}

#[inline(always)]
fn sweep<W: Weight>(t: &MinimaTables<W>, first: usize, m: usize, go: &mut [[W; BATCH]]) {
    for r in 2..m {
        let cp = &t.cpref_row(r)[first..];
        let rp = &t.rpref_row(r)[first..];
        let mut ge = [W::UNREACHABLE; BATCH];
        for ((g, &cp), &rp) in go[first..].iter_mut().zip(cp).zip(rp) {
            for lane in 0..BATCH {
                let prev = g[lane];
                let fo = ge[lane].plus(cp);
                let fe = prev.plus(rp);
                g[lane] = prev.min(fo);
                ge[lane] = ge[lane].min(fe);
            }
        }
    }
}

// The lane loop vectorizes well only with wide integer min instructions, so
// pick the widest instruction set the CPU offers at run time.
#[cfg(target_arch = "x86_64")]
fn sweep_dispatch<W: Weight>(t: &MinimaTables<W>, first: usize, m: usize, go: &mut [[W; BATCH]]) {
    #[target_feature(enable = "avx512f,avx512vl")]
    unsafe fn avx512<W: Weight>(
        t: &MinimaTables<W>,
        first: usize,
        m: usize,
        go: &mut [[W; BATCH]],
    ) {
        sweep(t, first, m, go)
    }
    #[target_feature(enable = "avx2")]
    unsafe fn avx2<W: Weight>(t: &MinimaTables<W>, first: usize, m: usize, go: &mut [[W; BATCH]]) {
        sweep(t, first, m, go)
    }
    if is_x86_feature_detected!("avx512f") && is_x86_feature_detected!("avx512vl") {
        // SAFETY: the required features were detected on this CPU.
        unsafe { avx512(t, first, m, go) }
    } else if is_x86_feature_detected!("avx2") {
        // SAFETY: as above.
        unsafe { avx2(t, first, m, go) }
    } else {
        sweep(t, first, m, go)
    }
}

#[cfg(not(target_arch = "x86_64"))]
fn sweep_dispatch<W: Weight>(t: &MinimaTables<W>, first: usize, m: usize, go: &mut [[W; BATCH]]) {
    sweep(t, first, m, go)
}

/// Cheapest start column: `(Ge(m,n), z)`, smallest `z` among ties.
pub fn best_start<W: Weight>(t: &MinimaTables<W>) -> Option<(W, usize)> {
    let n = t.n();
    (0..(n - 1).div_ceil(BATCH))
        .into_par_iter()
        .map_init(Vec::new, |go, batch| {
            let z0 = 1 + batch * BATCH;
            scan_batch(t, z0, go)
                .into_iter()
                .enumerate()
                .filter(|&(lane, _)| z0 + lane < n)
                .map(|(lane, w)| (w, z0 + lane))
                .min()
                .expect("nonempty batch")
        })
        .min()
        .filter(|(w, _)| w.is_reachable())
}

/// Best zigzag-shaped landmark set for the grid as oriented, in its own coordinates.
#[derive(Clone, Debug)]
pub struct OrientedZigzag<W> {
    pub key: W,
    pub start_col: usize,
    pub sequence: CorrespondingSequence,
}

pub fn best_in_orientation<W: Weight>(t: &MinimaTables<W>) -> Option<OrientedZigzag<W>> {
    let (key, z) = best_start(t)?;
    let (answer, tables) = run_dp(t, z).expect("start column in range");
    debug_assert_eq!(answer, Reach::Finite(key));
    let sequence = traceback(&tables).expect("reachable");
    Some(OrientedZigzag {
        key,
        start_col: z,
        sequence,
    })
}

/// Cheapest sequence corresponding to a zigzag sequence in `g` as oriented.
/// `t` must be built from `g`.
pub fn best_zigzag_one_orientation<W: Weight>(g: &Grid, t: &MinimaTables<W>) -> Option<Candidate> {
    let found = best_in_orientation(t)?;
    let mut c = Candidate::new(g, found.sequence.vertices.clone(), Category::Zigzag);
    c.provenance = Some(Provenance {
        orientation: Orientation::IDENTITY,
        start_col: found.start_col,
    });
    c.witness = Some(ZigzagWitness {
        zigzag: found.sequence.zigzag.0.clone(),
        corresponding: found.sequence.vertices,
    });
    Some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::Cost;
    use crate::separation::is_landmark_set;
    use crate::weight::WeightGrid;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn tables(g: &Grid) -> MinimaTables<u64> {
        MinimaTables::build(&WeightGrid::encode(g).unwrap())
    }

    fn scaled(w: u64) -> u64 {
        w >> <u64 as Weight>::SHIFT
    }

    fn acceptance_4x4() -> Grid {
        Grid::from_integers(&[
            vec![100, 1, 100, 100],
            vec![1, 1, 1, 100],
            vec![100, 1, 1, 100],
            vec![100, 100, 1, 100],
        ])
        .unwrap()
    }

    #[test]
    fn uniform_3x3_from_the_first_column() {
        let g = Grid::uniform(3, 3, Cost::from_integer(1)).unwrap();
        let t = tables(&g);
        let (answer, d) = run_dp(&t, 1).unwrap();
        let w = answer.finite().unwrap();
        assert_eq!((scaled(w), w.count()), (4, 4));
        let seq = traceback(&d).unwrap();
        seq.validate(3, 3).unwrap();
        assert_eq!(seq.len(), 4);
        assert_eq!(g.set_cost(&seq.vertices), Cost::from_integer(4));
        assert!(is_landmark_set(3, 3, &seq.vertices).unwrap());
    }

    #[test]
    fn start_column_must_leave_room_on_the_right() {
        let g = Grid::uniform(3, 4, Cost::from_integer(1)).unwrap();
        let t = tables(&g);
        assert!(matches!(run_dp(&t, 4), Err(Error::Contract(_))));
        assert!(matches!(run_dp(&t, 0), Err(Error::Contract(_))));
    }

    #[test]
    fn two_by_two_has_no_zigzag() {
        let g = Grid::uniform(2, 2, Cost::from_integer(1)).unwrap();
        let t = tables(&g);
        let (answer, d) = run_dp(&t, 1).unwrap();
        assert_eq!(answer, Reach::Unreachable);
        assert!(traceback(&d).is_err());
        assert!(best_zigzag_one_orientation(&g, &t).is_none());
    }

    #[test]
    fn acceptance_grid_costs_four() {
        let g = acceptance_4x4();
        let best = best_zigzag_one_orientation(&g, &tables(&g)).unwrap();
        assert_eq!(best.cost, Cost::from_integer(4));
        assert_eq!(
            best.vertices,
            [
                Vertex::new(1, 2),
                Vertex::new(2, 1),
                Vertex::new(2, 3),
                Vertex::new(4, 3)
            ]
        );
        assert!(is_landmark_set(4, 4, &best.vertices).unwrap());
    }

    #[test]
    fn layer_invariants_hold() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..60 {
            let (m, n) = (rng.gen_range(2..=7), rng.gen_range(2..=7));
            let g = Grid::from_fn(m, n, |_| Cost::from_integer(rng.gen_range(0..=9))).unwrap();
            let t = tables(&g);
            for z in 1..n {
                let (_, d) = run_dp(&t, z).unwrap();
                for r in 1..=m {
                    for c in 1..=n {
                        let go = (1..=r).map(|i| d.fo(i, c)).min().unwrap();
                        let ge = (1..=c).map(|j| d.fe(r, j)).min().unwrap();
                        // Odd states never reach the last row.
                        if r < m {
                            assert_eq!(d.go(r, c), go);
                        } else {
                            assert_eq!(d.go(r, c), Reach::Unreachable);
                        }
                        assert_eq!(d.ge(r, c), ge);
                    }
                }
                for c in 2..=n {
                    assert!(d.ge(m, c) <= d.ge(m, c - 1));
                }
            }
        }
    }

    #[test]
    fn scan_matches_full_tables_and_traceback_is_sound() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let (m, n) = (rng.gen_range(2..=9), rng.gen_range(2..=9));
            let g = Grid::from_fn(m, n, |_| Cost::from_integer(rng.gen_range(0..=20))).unwrap();
            let t = tables(&g);
            let mut scratch = vec![0u64; n];
            for z in 1..n {
                let (answer, d) = run_dp(&t, z).unwrap();
                let fast: Reach<u64> = scan_start(&t, z, &mut scratch).into();
                assert_eq!(fast, answer, "{m}x{n} z={z}");
                let mut lanes = Vec::new();
                let batched: Reach<u64> = scan_batch(&t, z, &mut lanes)[0].into();
                assert_eq!(batched, answer, "{m}x{n} z={z}");
                if let Reach::Finite(w) = answer {
                    let seq = traceback(&d).unwrap();
                    seq.validate(m, n).unwrap();
                    assert_eq!(seq.vertices[0], Vertex::new(1, z));
                    assert_eq!(seq.len(), w.count());
                    assert_eq!(Cost::from_integer(scaled(w)), g.set_cost(&seq.vertices));
                    assert!(seq.len() % 2 == 0 && seq.len() >= 4);
                    assert!(seq.len() <= (2 * m - 2).min(2 * n));
                    assert!(is_landmark_set(m, n, &seq.vertices).unwrap());
                }
            }
        }
    }
}
