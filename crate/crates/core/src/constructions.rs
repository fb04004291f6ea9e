//! Interval colorings of `K_n^k` and `K_m`.
//!
//! * [`banded_coloring`]: the eight-case coloring of `K_n^k` (even `k`) with
//!   `(3k/2 - 1) n - 1` colors.
//! * [`lift_coloring`]: transports an interval coloring of `K_k` to `K_n^k`
//!   by `(phi(u_i, u_j) - 1) n + r + s - 1`.
//! * [`round_robin_factorization`] and [`blowup_min_coloring`]: colorings
//!   with exactly the maximum degree many colors.
//! * [`compress`]: turns an interval `t`-coloring of a regular graph into an
//!   interval `(t - 1)`-coloring; [`spectrum_sweep`] chains it.

use std::collections::BTreeMap;

use crate::coloring::{CompleteColoring, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{complete_graph_target, enumerate_edges, Graph, PartiteSpec};
use crate::solver::{self, SearchOptions, SearchStatus};
use crate::verify::{verify, verify_graph};

/// One of the eight part-pair families of the banded coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BandCase {
    /// 1-based case number, in the order the families are listed.
    pub number: u8,
    /// Block offset: an edge `(x_p^(i), x_q^(j))` of this case gets color
    /// `offset * n + p + q - 1`.
    pub offset: usize,
}

type OffsetFn = fn(usize, usize, usize, usize) -> usize;

/// Every case whose index ranges contain the part pair `(i, j)`, `i < j`.
/// For a valid even `k` exactly one case matches.
pub fn band_cases(k: usize, i: usize, j: usize) -> Vec<BandCase> {
    debug_assert!(k.is_multiple_of(2) && i < j && j <= k);
    let h = k / 2;
    let q4 = k / 4;
    let g = (k - 2) / 4;
    let within = |x: usize, lo: usize, hi: usize| lo <= x && x <= hi;
    let s = i + j;
    let families: [(bool, OffsetFn); 8] = [
        (
            within(i, 1, q4) && within(j, 2, h) && s <= h + 1,
            |i, j, _, _| i + j - 3,
        ),
        (
            within(i, 2, h.saturating_sub(1)) && within(j, q4 + 2, h) && s >= h + 2,
            |i, j, h, _| i + j + h - 4,
        ),
        (
            within(i, 3, h) && within(j, h + 1, k - 2) && j - i <= h - 2,
            |i, j, h, _| h + j - i - 1,
        ),
        (
            within(i, 1, h) && within(j, h + 1, k) && j - i >= h,
            |i, j, _, _| j - i - 1,
        ),
        (
            within(i, 2, 1 + g) && within(j, h + 1, h + g) && j - i == h - 1,
            |i, _, _, _| 2 * i - 3,
        ),
        (
            within(i, g + 2, h) && within(j, h + 1 + g, k - 1) && j - i == h - 1,
            |i, j, _, _| i + j - 3,
        ),
        (
            within(i, h + 1, (h + q4).saturating_sub(1))
                && within(j, h + 2, k.saturating_sub(2))
                && s < 3 * h,
            |i, j, _, k| i + j - k - 1,
        ),
        (
            within(i, h + 1, k - 1) && within(j, h + q4 + 1, k) && s >= 3 * h,
            |i, j, h, _| i + j - h - 2,
        ),
    ];
    families
        .iter()
        .enumerate()
        .filter(|(_, (hit, _))| *hit)
        .map(|(idx, (_, offset))| BandCase {
            number: idx as u8 + 1,
            offset: offset(i, j, h, k),
        })
        .collect()
}

/// Part pairs not matched by exactly one case, with the cases they matched.
pub fn band_partition_audit(k: usize) -> Vec<((usize, usize), Vec<u8>)> {
    let mut bad = Vec::new();
    for i in 1..=k {
        for j in i + 1..=k {
            let cases = band_cases(k, i, j);
            if cases.len() != 1 {
                bad.push(((i, j), cases.iter().map(|c| c.number).collect()));
            }
        }
    }
    bad
}

/// The eight-case banded interval coloring of `K_n^k` for even `k`, using
/// `(3k/2 - 1) n - 1` colors.
pub fn banded_coloring(spec: PartiteSpec) -> Result<EdgeColoring> {
    let (k, n) = (spec.k(), spec.n());
    if k % 2 == 1 {
        return Err(Error::OddK { k });
    }
    let audit = band_partition_audit(k);
    assert!(
        audit.is_empty(),
        "case ranges do not partition part pairs for k={k}: {audit:?}"
    );
    let t = ((3 * k / 2 - 1) * n - 1) as u32;
    let mut offsets = BTreeMap::new();
    let colors = enumerate_edges(spec)
        .into_iter()
        .map(|e| {
            let offset = *offsets
                .entry((e.u.part, e.v.part))
                .or_insert_with(|| band_cases(k, e.u.part, e.v.part)[0].offset);
            (offset * n + e.u.index + e.v.index - 1) as u32
        })
        .collect();
    EdgeColoring::new(spec, t, colors)
}

/// Lifts an interval coloring of `K_k` to `K_n^k`: the edge
/// `(x_r^(i), x_s^(j))` gets `(phi(u_i, u_j) - 1) n + r + s - 1`, giving
/// `(t + 1) n - 1` colors.
pub fn lift_coloring(base: &CompleteColoring, n: usize) -> Result<EdgeColoring> {
    let report = verify_graph(&base.graph(), base.colors(), base.t())?;
    if !report.passed() {
        let first = report
            .violations
            .first()
            .map(|v| v.detail.clone())
            .unwrap_or_default();
        return Err(Error::InvalidBase(first));
    }
    let k = base.m();
    let spec = PartiteSpec::new(k, n)?;
    spec.require_edges()?;
    let t = (base.t() + 1) * n as u32 - 1;
    let colors = enumerate_edges(spec)
        .into_iter()
        .map(|e| {
            let phi = base.color(e.u.part, e.v.part);
            (phi - 1) * n as u32 + (e.u.index + e.v.index) as u32 - 1
        })
        .collect();
    EdgeColoring::new(spec, t, colors)
}

/// Circle-method 1-factorization of `K_m`: vertex `m` stays fixed while
/// `1..m-1` rotate; round `r` is color `r`.
pub fn round_robin_factorization(m: usize) -> Result<CompleteColoring> {
    if m % 2 == 1 || m == 0 {
        return Err(Error::OddM { m });
    }
    let rounds = m - 1;
    let mut colors = vec![0u32; m * (m - 1) / 2];
    let pos = |a: usize, b: usize| {
        // 0-based a < b
        a * m - a * (a + 1) / 2 + (b - a - 1)
    };
    for r in 0..rounds {
        let color = r as u32 + 1;
        colors[pos(r, m - 1)] = color;
        for d in 1..m / 2 {
            let a = (r + d) % rounds;
            let b = (r + rounds - d) % rounds;
            colors[pos(a.min(b), a.max(b))] = color;
        }
    }
    CompleteColoring::new(m, rounds as u32, colors)
}

/// Interval coloring of `K_n^k` (even `k`) with exactly `(k - 1) n` colors:
/// each matching edge `(a, b)` of round `l` of the circle method becomes a
/// `K_{n,n}` colored `(l - 1) n + ((p + q - 2) mod n) + 1`.
pub fn blowup_min_coloring(spec: PartiteSpec) -> Result<EdgeColoring> {
    let (k, n) = (spec.k(), spec.n());
    if k % 2 == 1 {
        return Err(Error::OddK { k });
    }
    let factorization = round_robin_factorization(k)?;
    let t = ((k - 1) * n) as u32;
    let colors = enumerate_edges(spec)
        .into_iter()
        .map(|e| {
            let round = factorization.color(e.u.part, e.v.part) as usize;
            ((round - 1) * n + (e.u.index + e.v.index - 2) % n + 1) as u32
        })
        .collect();
    EdgeColoring::new(spec, t, colors)
}

/// Result of [`complete_graph_coloring`].
#[derive(Debug, Clone)]
pub struct CompleteOutcome {
    /// Best verified interval coloring found; the circle-method baseline
    /// when the search did not reach the target.
    pub coloring: CompleteColoring,
    pub target: u32,
    pub met_target: bool,
    /// Status of the search, if one ran.
    pub search: Option<SearchStatus>,
    pub nodes_explored: u64,
}

/// Interval coloring of `K_m` (even `m`) aiming at `target` colors, by
/// default `2m - 1 - p - q` for `m = p * 2^q`.
///
/// The circle-method factorization (`m - 1` colors) is the baseline; when
/// the target is larger the exact solver searches for it within `options`.
pub fn complete_graph_coloring(
    m: usize,
    target: Option<u32>,
    options: &SearchOptions,
) -> Result<CompleteOutcome> {
    let baseline = round_robin_factorization(m)?;
    let target = target.unwrap_or_else(|| complete_graph_target(m).expect("m even"));
    if target == baseline.t() {
        return Ok(CompleteOutcome {
            coloring: baseline,
            target,
            met_target: true,
            search: None,
            nodes_explored: 0,
        });
    }
    let graph = Graph::complete(m);
    let outcome = solver::find_interval_coloring(&graph, target, options)?;
    let status = outcome.status;
    let nodes = outcome.nodes_explored;
    match outcome.witness {
        Some(colors) => Ok(CompleteOutcome {
            coloring: CompleteColoring::new(m, target, colors)?,
            target,
            met_target: true,
            search: Some(status),
            nodes_explored: nodes,
        }),
        None => Ok(CompleteOutcome {
            coloring: baseline,
            target,
            met_target: false,
            search: Some(status),
            nodes_explored: nodes,
        }),
    }
}

/// Interval `(t - 1)`-coloring from an interval `t`-coloring of a regular
/// graph with `t` above the degree.
///
/// Both endpoints of a color-1 edge see exactly `1..=degree`, so the edge
/// can take `degree + 1`; afterwards color 1 is unused and all colors shift
/// down by one.
pub fn compress_graph(graph: &Graph, colors: &[u32], t: u32) -> Result<Vec<u32>> {
    if !graph.is_regular() {
        return Err(Error::NotRegular);
    }
    if !verify_graph(graph, colors, t)?.passed() {
        return Err(Error::NotVerified);
    }
    let delta = graph.max_degree() as u32;
    if t <= delta {
        return Err(Error::AlreadyMinimal { t });
    }
    Ok(colors
        .iter()
        .map(|&c| if c == 1 { delta } else { c - 1 })
        .collect())
}

pub fn compress(c: &EdgeColoring) -> Result<EdgeColoring> {
    let colors = compress_graph(&c.graph(), c.colors(), c.t())?;
    EdgeColoring::new(c.spec(), c.t() - 1, colors)
}

/// One verified interval coloring of `K_n^k` for every `t` from the
/// maximum degree up to the longest available construction.
///
/// For even `k` the banded coloring is always available. When `base` is a
/// verified interval coloring of `K_k`, its lift is used if longer.
pub fn spectrum_sweep(
    spec: PartiteSpec,
    base: Option<&CompleteColoring>,
) -> Result<BTreeMap<u32, EdgeColoring>> {
    spec.require_edges()?;
    let mut top = if spec.k().is_multiple_of(2) {
        Some(banded_coloring(spec)?)
    } else {
        None
    };
    if let Some(base) = base {
        if base.m() != spec.k() {
            return Err(Error::InvalidBase(format!(
                "base colors K_{}, instance has k={}",
                base.m(),
                spec.k()
            )));
        }
        let lifted = lift_coloring(base, spec.n())?;
        if top.as_ref().is_none_or(|c| lifted.t() > c.t()) {
            top = Some(lifted);
        }
    }
    let mut current = top.ok_or(Error::OddK { k: spec.k() })?;
    let delta = crate::graph::max_degree(spec);
    let mut out = BTreeMap::new();
    loop {
        if !verify(&current).passed() {
            return Err(Error::NotVerified);
        }
        let t = current.t();
        if t == delta {
            out.insert(t, current);
            break;
        }
        let next = compress(&current)?;
        out.insert(t, current);
        current = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::palettes;

    fn spec(k: usize, n: usize) -> PartiteSpec {
        PartiteSpec::new(k, n).unwrap()
    }

    #[test]
    fn banded_k4_n1() {
        let c = banded_coloring(spec(4, 1)).unwrap();
        assert_eq!(c.colors(), &[1, 2, 3, 3, 2, 4]);
        assert_eq!(c.t(), 4);
        assert_eq!(band_cases(4, 1, 2)[0].number, 1);
        assert!(verify(&c).passed());
    }

    #[test]
    fn banded_k2_uses_only_the_wide_case() {
        let c = banded_coloring(spec(2, 3)).unwrap();
        assert_eq!(c.t(), 5);
        assert_eq!(
            band_cases(2, 1, 2),
            vec![BandCase {
                number: 4,
                offset: 0
            }]
        );
        assert!(verify(&c).passed());
    }

    #[test]
    fn banded_rejects_odd_k() {
        assert_eq!(banded_coloring(spec(5, 2)), Err(Error::OddK { k: 5 }));
    }

    #[test]
    fn partitions_for_even_k() {
        for k in (2..=40).step_by(2) {
            assert!(band_partition_audit(k).is_empty(), "k={k}");
        }
    }

    #[test]
    fn lift_of_single_edge() {
        let base = CompleteColoring::new(2, 1, vec![1]).unwrap();
        let c = lift_coloring(&base, 2).unwrap();
        assert_eq!(c.colors(), &[1, 2, 2, 3]);
        assert_eq!(c.t(), 3);
        let ps = palettes(&c);
        assert_eq!(ps[0].colors.iter().copied().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(ps[3].colors.iter().copied().collect::<Vec<_>>(), vec![2, 3]);
    }

    #[test]
    fn lift_with_n1_is_identity() {
        let base = round_robin_factorization(4).unwrap();
        let c = lift_coloring(&base, 1).unwrap();
        assert_eq!(c.colors(), base.colors());
        assert_eq!(c.t(), 3);
    }

    #[test]
    fn lift_k4_wide_base() {
        let base = CompleteColoring::new(4, 4, vec![1, 2, 3, 3, 2, 4]).unwrap();
        let c = lift_coloring(&base, 2).unwrap();
        assert_eq!(c.t(), 9);
        assert!(verify(&c).passed());
    }

    #[test]
    fn lift_rejects_unverified_base() {
        let base = CompleteColoring::new(3, 3, vec![1, 2, 3]).unwrap();
        assert!(matches!(
            lift_coloring(&base, 2),
            Err(Error::InvalidBase(_))
        ));
    }

    #[test]
    fn round_robin_small() {
        assert_eq!(round_robin_factorization(2).unwrap().colors(), &[1]);
        for m in [4, 6, 8, 10] {
            let c = round_robin_factorization(m).unwrap();
            let r = verify_graph(&c.graph(), c.colors(), c.t()).unwrap();
            assert!(r.passed(), "m={m}: {r}");
            for color in 1..=c.t() {
                let class = c.colors().iter().filter(|&&x| x == color).count();
                assert_eq!(class, m / 2);
            }
        }
        assert_eq!(
            round_robin_factorization(5).unwrap_err(),
            Error::OddM { m: 5 }
        );
    }

    #[test]
    fn blowup_examples() {
        let c = blowup_min_coloring(spec(2, 2)).unwrap();
        assert_eq!((c.t(), c.colors()), (2, &[1, 2, 2, 1][..]));
        let c = blowup_min_coloring(spec(4, 1)).unwrap();
        assert_eq!(c.colors(), round_robin_factorization(4).unwrap().colors());
        let c = blowup_min_coloring(spec(4, 2)).unwrap();
        assert_eq!(c.t(), 6);
        assert!(verify(&c).passed());
        assert!(palettes(&c).iter().all(|p| p.colors == (1..=6).collect()));
    }

    #[test]
    fn compress_k4() {
        let c = EdgeColoring::new(spec(4, 1), 4, vec![1, 2, 3, 3, 2, 4]).unwrap();
        let d = compress(&c).unwrap();
        assert_eq!(d.colors(), &[3, 1, 2, 2, 1, 3]);
        assert_eq!(d.t(), 3);
        assert!(verify(&d).passed());
        assert_eq!(compress(&d), Err(Error::AlreadyMinimal { t: 3 }));
    }

    #[test]
    fn compress_errors() {
        let path = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(compress_graph(&path, &[1, 2], 2), Err(Error::NotRegular));
        let bad = EdgeColoring::new(spec(2, 2), 3, vec![1, 1, 2, 3]).unwrap();
        assert_eq!(compress(&bad), Err(Error::NotVerified));
    }

    #[test]
    fn compress_banded_down_to_w() {
        let mut c = banded_coloring(spec(4, 2)).unwrap();
        assert_eq!(c.t(), 9);
        for expected in [8, 7, 6] {
            c = compress(&c).unwrap();
            assert_eq!(c.t(), expected);
            assert!(verify(&c).passed());
        }
    }

    #[test]
    fn sweep_examples() {
        let s = spectrum_sweep(spec(4, 2), None).unwrap();
        assert_eq!(s.keys().copied().collect::<Vec<_>>(), vec![6, 7, 8, 9]);
        let s = spectrum_sweep(spec(2, 2), None).unwrap();
        assert_eq!(s.keys().copied().collect::<Vec<_>>(), vec![2, 3]);
        let s = spectrum_sweep(spec(2, 1), None).unwrap();
        assert_eq!(s.keys().copied().collect::<Vec<_>>(), vec![1]);
        assert_eq!(spectrum_sweep(spec(3, 2), None), Err(Error::OddK { k: 3 }));
    }

    #[test]
    fn sweep_with_base() {
        let base = CompleteColoring::new(2, 1, vec![1]).unwrap();
        let s = spectrum_sweep(spec(2, 3), Some(&base)).unwrap();
        assert_eq!(s.keys().copied().collect::<Vec<_>>(), vec![3, 4, 5]);
    }

    #[test]
    fn complete_graph_baseline_for_k2() {
        let out = complete_graph_coloring(2, None, &SearchOptions::default()).unwrap();
        assert!(out.met_target && out.search.is_none());
        assert_eq!(out.coloring.colors(), &[1]);
    }
}
