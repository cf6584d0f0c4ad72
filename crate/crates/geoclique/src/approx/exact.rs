//! Exact solvers: odd-cycle-cover enumeration, cycle-neighborhood
//! enumeration, and the win-win subexponential dispatcher.

use super::{Certificate, PathCounts, SolveError, SolveResult};
use crate::bits::BitSet;
use crate::graph::{mis_bipartite, shortest_odd_cycle, two_color, Graph, GraphError, OddCycle};

pub const EXACT_ENUM_CAP: usize = 24;

/// A vertex set whose removal leaves the graph bipartite, built by removing
/// shortest odd cycles until none remain. No size guarantee is promised;
/// downstream enumeration stays exact regardless, only its cost grows.
pub fn odd_cycle_cover(g: &Graph) -> BitSet {
    let mut cover = BitSet::new(g.n());
    loop {
        let mut keep = BitSet::full(g.n());
        keep.subtract(&cover);
        let (h, map) = g.induced(&keep);
        match shortest_odd_cycle(&h) {
            None => return cover,
            Some(c) => {
                for v in c.vertices {
                    cover.insert(map[v]);
                }
            }
        }
    }
}

/// Exact maximum independent set given a bipartizing cover: enumerate every
/// independent subset I of the cover and solve the bipartite remainder
/// minus N(I).
pub fn mis_exact_occ(g: &Graph, cover: &BitSet) -> Result<SolveResult, SolveError> {
    let mut rest = BitSet::full(g.n());
    rest.subtract(cover);
    let (h, map) = g.induced(&rest);
    if let Err(w) = two_color(&h) {
        return Err(SolveError::CoverNotBipartizing {
            odd_cycle: w.into_iter().map(|v| map[v]).collect(),
        });
    }
    enumerate_over_cover(g, cover, |odd_cycle| SolveError::CoverNotBipartizing { odd_cycle })
}

/// Exact maximum independent set through the closed neighborhood of an odd
/// cycle; a non-bipartite remainder is evidence the induced odd cycle
/// packing number exceeds 1.
pub fn mis_exact_cycle_nbhd(g: &Graph, c: &OddCycle) -> Result<SolveResult, SolveError> {
    let cyc_set = BitSet::from_iter(g.n(), c.vertices.iter().copied());
    let cover = g.closed_neighborhood(&cyc_set);
    let mut rest = BitSet::full(g.n());
    rest.subtract(&cover);
    let (h, map) = g.induced(&rest);
    if let Err(w) = two_color(&h) {
        return Err(SolveError::IocpViolation {
            odd_cycle: w.into_iter().map(|v| map[v]).collect(),
            context: "graph minus N[C] should be bipartite".into(),
        });
    }
    enumerate_over_cover(g, &cover, |odd_cycle| SolveError::IocpViolation {
        odd_cycle,
        context: "graph minus the enumerated cover should be bipartite".into(),
    })
}

fn enumerate_over_cover(
    g: &Graph,
    cover: &BitSet,
    on_nonbipartite: impl Fn(Vec<usize>) -> SolveError,
) -> Result<SolveResult, SolveError> {
    if cover.len() > EXACT_ENUM_CAP {
        return Err(SolveError::CapExceeded {
            size: cover.len(),
            cap: EXACT_ENUM_CAP,
        });
    }
    let cover_vec = cover.to_vec();
    let mut best: Option<(f64, BitSet)> = None;
    let mut chosen = BitSet::new(g.n());
    enumerate_independent(
        g,
        &cover_vec,
        0,
        &mut chosen,
        &mut |choice: &BitSet| -> Result<(), SolveError> {
            let mut keep = BitSet::full(g.n());
            keep.subtract(cover);
            keep.subtract(&g.open_neighborhood(choice));
            let (h, map) = g.induced(&keep);
            let sub = mis_bipartite(&h).map_err(|e| match e {
                GraphError::NotBipartite(w) => {
                    on_nonbipartite(w.into_iter().map(|v| map[v]).collect())
                }
                other => other.into(),
            })?;
            let mut full = choice.clone();
            for v in sub.iter() {
                full.insert(map[v]);
            }
            let value = g.set_weight(&full);
            if best.as_ref().is_none_or(|(bv, _)| value > *bv) {
                *(&mut best) = Some((value, full));
            }
            Ok(())
        },
    )?;
    let (_, set) = best.expect("the empty subset always yields a candidate");
    Ok(SolveResult::checked(
        g,
        set,
        1,
        PathCounts::default(),
        0,
        Certificate::default(),
    ))
}

fn enumerate_independent(
    g: &Graph,
    cover: &[usize],
    idx: usize,
    chosen: &mut BitSet,
    visit: &mut impl FnMut(&BitSet) -> Result<(), SolveError>,
) -> Result<(), SolveError> {
    if idx == cover.len() {
        return visit(chosen);
    }
    enumerate_independent(g, cover, idx + 1, chosen, visit)?;
    let v = cover[idx];
    if !g.neighbors(v).intersects(chosen) {
        chosen.insert(v);
        enumerate_independent(g, cover, idx + 1, chosen, visit)?;
        chosen.remove(v);
    }
    Ok(())
}

/// Win-win exact solver: branch on vertices of degree at least n^(1/3),
/// then run the cheaper of the odd-cycle-cover and cycle-neighborhood
/// enumerations on each leaf.
pub fn mis_subexp(g: &Graph) -> Result<SolveResult, SolveError> {
    let set = subexp_inner(g)?;
    Ok(SolveResult::checked(
        g,
        set,
        1,
        PathCounts::default(),
        0,
        Certificate::default(),
    ))
}

fn subexp_inner(g: &Graph) -> Result<BitSet, SolveError> {
    let n = g.n();
    if n == 0 {
        return Ok(BitSet::new(0));
    }
    let threshold = (n as f64).cbrt();
    let high = (0..n)
        .filter(|&v| g.degree(v) as f64 >= threshold)
        .max_by_key(|&v| (g.degree(v), usize::MAX - v));
    if let Some(v) = high {
        // Include v: delete N[v]. Exclude v: delete v.
        let mut nv = g.neighbors(v).clone();
        nv.insert(v);
        let (h_in, map_in) = g.without(&nv);
        let mut with_v = subexp_inner(&h_in).map_err(|e| lift(e, &map_in))?;
        let with_set = {
            let mut s = BitSet::new(n);
            s.insert(v);
            for u in with_v.iter() {
                s.insert(map_in[u]);
            }
            s
        };
        with_v = with_set;
        let only_v = BitSet::from_iter(n, [v]);
        let (h_out, map_out) = g.without(&only_v);
        let without_v = subexp_inner(&h_out).map_err(|e| lift(e, &map_out))?;
        let without_set = {
            let mut s = BitSet::new(n);
            for u in without_v.iter() {
                s.insert(map_out[u]);
            }
            s
        };
        let (ww, wo) = (g.set_weight(&with_v), g.set_weight(&without_set));
        return Ok(if ww >= wo { with_v } else { without_set });
    }

    // Leaf: bipartite directly, otherwise the cheaper enumeration.
    let Some(c) = shortest_odd_cycle(g) else {
        return Ok(mis_bipartite(g)?);
    };
    let cover = odd_cycle_cover(g);
    let cyc_set = BitSet::from_iter(n, c.vertices.iter().copied());
    let nbhd = g.closed_neighborhood(&cyc_set);
    // Enumeration costs are 2^|set|; try the smaller set first and fall
    // back to the other if it exceeds the cap.
    let routes: [(usize, bool); 2] = if cover.len() <= nbhd.len() {
        [(cover.len(), true), (nbhd.len(), false)]
    } else {
        [(nbhd.len(), false), (cover.len(), true)]
    };
    for (size, use_cover) in routes {
        if size > EXACT_ENUM_CAP {
            continue;
        }
        let res = if use_cover {
            mis_exact_occ(g, &cover)
        } else {
            mis_exact_cycle_nbhd(g, &c)
        }?;
        return Ok(res.bitset(n));
    }
    Err(SolveError::CapExceeded {
        size: cover.len().min(nbhd.len()),
        cap: EXACT_ENUM_CAP,
    })
}

fn lift(e: SolveError, map: &[usize]) -> SolveError {
    match e {
        SolveError::IocpViolation { odd_cycle, context } => SolveError::IocpViolation {
            odd_cycle: odd_cycle.into_iter().map(|v| map[v]).collect(),
            context,
        },
        SolveError::CoverNotBipartizing { odd_cycle } => SolveError::CoverNotBipartizing {
            odd_cycle: odd_cycle.into_iter().map(|v| map[v]).collect(),
        },
        other => other,
    }
}
