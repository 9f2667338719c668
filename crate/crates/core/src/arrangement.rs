//! Exact arrangements of line segments in the rational plane.
//!
//! Input segments are merged along common supporting lines, split at all
//! pairwise intersection points, and assembled into a half-edge structure
//! whose faces are walked counterclockwise. Everything is exact rational
//! arithmetic; the construction is incremental insertion with pairwise
//! intersection, which is plenty for the tiny inputs this crate sees.

use crate::error::{Error, Result};
use crate::linear::Q;
use crate::matrix::{gcd_of, primitive_vector};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;

pub type Point = (Q, Q);

/// A face of the arrangement: its corner cycle (counterclockwise for
/// bounded faces), the number of maximal straight sides after merging
/// consecutive collinear boundary edges, and an interior sample point.
#[derive(Debug, Clone)]
pub struct Face {
    pub cycle: Vec<usize>,
    pub sides: usize,
    pub outer: bool,
    pub centroid: Point,
}

#[derive(Debug, Clone)]
pub struct Arrangement {
    pub vertices: Vec<Point>,
    /// Undirected edges as index pairs `(u, v)` with `u < v`.
    pub edges: Vec<(usize, usize)>,
    pub faces: Vec<Face>,
}

impl Arrangement {
    /// Census of the bounded faces: side count → number of faces.
    pub fn census(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for f in &self.faces {
            if !f.outer {
                *out.entry(f.sides).or_insert(0) += 1;
            }
        }
        out
    }

    pub fn bounded_face_count(&self) -> usize {
        self.faces.iter().filter(|f| !f.outer).count()
    }
}

/// The supporting line of a segment as a primitive integer triple
/// `(a, b, c)` meaning `a·x + b·y = c`, sign-normalized so equal lines get
/// equal keys.
fn line_key(p: &Point, q: &Point) -> (BigInt, BigInt, BigInt) {
    let dx = &q.0 - &p.0;
    let dy = &q.1 - &p.1;
    // Normal (a, b) = (−dy, dx), then c = a·px + b·py; clear denominators.
    let a = -dy;
    let b = dx;
    let c = &a * &p.0 + &b * &p.1;
    let denoms = [a.denom().clone(), b.denom().clone(), c.denom().clone()];
    let mut l = BigInt::from(1);
    for d in denoms {
        let g = gcd_of(&[l.clone(), d.clone()]);
        l = l / g * d;
    }
    let ints = vec![
        (a * Q::from(l.clone())).to_integer(),
        (b * Q::from(l.clone())).to_integer(),
        (c * Q::from(l)).to_integer(),
    ];
    let prim = primitive_vector(&ints);
    let flip = match (prim[0].sign(), prim[1].sign()) {
        (num_bigint::Sign::Minus, _) => true,
        (num_bigint::Sign::NoSign, num_bigint::Sign::Minus) => true,
        _ => false,
    };
    let s: Vec<BigInt> = if flip { prim.iter().map(|x| -x).collect() } else { prim };
    (s[0].clone(), s[1].clone(), s[2].clone())
}

/// Counterclockwise angular order of direction vectors starting from the
/// positive x-axis, decided exactly: first by half (upper, including +x,
/// before lower, including −x), then by the cross product.
fn cmp_angle(d1: &Point, d2: &Point) -> Ordering {
    let half = |d: &Point| -> u8 {
        if d.1.is_positive() || (d.1.is_zero() && d.0.is_positive()) {
            0
        } else {
            1
        }
    };
    half(d1).cmp(&half(d2)).then_with(|| {
        let cross = &d1.0 * &d2.1 - &d1.1 * &d2.0;
        if cross.is_positive() {
            Ordering::Less
        } else if cross.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

/// Build the arrangement of the given segments. Degenerate (zero-length)
/// segments are rejected; overlapping collinear segments are merged to
/// their union before splitting, so the edge set is duplication-free.
pub fn build_arrangement(segments: &[(Point, Point)]) -> Result<Arrangement> {
    if segments.is_empty() {
        return Err(Error::BadInput("an arrangement needs at least one segment".into()));
    }
    for (p, q) in segments {
        if p == q {
            return Err(Error::BadInput("zero-length segment".into()));
        }
    }

    // Group by supporting line; merge overlapping or touching intervals.
    #[allow(clippy::type_complexity)]
    let mut by_line: BTreeMap<(BigInt, BigInt, BigInt), Vec<(Q, Q)>> = BTreeMap::new();
    let mut line_frames: BTreeMap<(BigInt, BigInt, BigInt), (Point, Point)> = BTreeMap::new();
    for (p, q) in segments {
        let key = line_key(p, q);
        // Frame: a base point and primitive direction; parameters are exact
        // projections onto the direction, anchored at the base point.
        let frame = line_frames.entry(key.clone()).or_insert_with(|| {
            let d = (&q.0 - &p.0, &q.1 - &p.1);
            (p.clone(), d)
        });
        let (base, dir) = frame.clone();
        let t_of = |x: &Point| -> Q {
            // Projection parameter: ((x − base) · dir) / (dir · dir).
            let num = (&x.0 - &base.0) * &dir.0 + (&x.1 - &base.1) * &dir.1;
            let den = &dir.0 * &dir.0 + &dir.1 * &dir.1;
            num / den
        };
        let (mut t0, mut t1) = (t_of(p), t_of(q));
        if t0 > t1 {
            std::mem::swap(&mut t0, &mut t1);
        }
        by_line.entry(key).or_default().push((t0, t1));
    }
    struct MergedSeg {
        key: (BigInt, BigInt, BigInt),
        p: Point,
        q: Point,
    }
    let mut merged: Vec<MergedSeg> = Vec::new();
    for (key, mut intervals) in by_line {
        intervals.sort();
        let (base, dir) = line_frames[&key].clone();
        let at = |t: &Q| -> Point { (&base.0 + t * &dir.0, &base.1 + t * &dir.1) };
        let mut cur = intervals[0].clone();
        let flush = |cur: &(Q, Q), merged: &mut Vec<MergedSeg>| {
            merged.push(MergedSeg { key: key.clone(), p: at(&cur.0), q: at(&cur.1) });
        };
        for iv in intervals.iter().skip(1) {
            if iv.0 <= cur.1 {
                if iv.1 > cur.1 {
                    cur.1 = iv.1.clone();
                }
            } else {
                flush(&cur, &mut merged);
                cur = iv.clone();
            }
        }
        flush(&cur, &mut merged);
    }

    // Vertices: all endpoints plus all pairwise intersections that lie on
    // both segments (inclusive). Ids are stable: assigned in first-seen
    // order and never shifted by later insertions.
    let mut vertex_list: Vec<Point> = Vec::new();
    let mut vertex_index: BTreeMap<(Q, Q), usize> = BTreeMap::new();
    let find_or_add = |pt: Point, list: &mut Vec<Point>, index: &mut BTreeMap<(Q, Q), usize>| -> usize {
        if let Some(&i) = index.get(&pt) {
            return i;
        }
        let i = list.len();
        index.insert(pt.clone(), i);
        list.push(pt);
        i
    };
    // Points on each merged segment, by parameter.
    let mut on_seg: Vec<Vec<Point>> = merged.iter().map(|s| vec![s.p.clone(), s.q.clone()]).collect();
    let within = |s: &MergedSeg, x: &Point| -> bool {
        // Bounding-box test suffices for a point known to be on the line.
        let (lo0, hi0) = if s.p.0 <= s.q.0 { (&s.p.0, &s.q.0) } else { (&s.q.0, &s.p.0) };
        let (lo1, hi1) = if s.p.1 <= s.q.1 { (&s.p.1, &s.q.1) } else { (&s.q.1, &s.p.1) };
        lo0 <= &x.0 && &x.0 <= hi0 && lo1 <= &x.1 && &x.1 <= hi1
    };
    for i in 0..merged.len() {
        for j in i + 1..merged.len() {
            let (a1, b1, c1) = merged[i].key.clone();
            let (a2, b2, c2) = merged[j].key.clone();
            let det = &a1 * &b2 - &a2 * &b1;
            if det.is_zero() {
                continue; // parallel distinct lines (same line impossible post-merge)
            }
            let x = Q::new(&c1 * &b2 - &c2 * &b1, det.clone());
            let y = Q::new(&a1 * &c2 - &a2 * &c1, det);
            let pt = (x, y);
            if within(&merged[i], &pt) && within(&merged[j], &pt) {
                on_seg[i].push(pt.clone());
                on_seg[j].push(pt);
            }
        }
    }

    // Split each merged segment at its points; collect undirected edges.
    let mut edge_set: BTreeMap<(usize, usize), ()> = BTreeMap::new();
    for (si, s) in merged.iter().enumerate() {
        let pts = &mut on_seg[si];
        let dir = (&s.q.0 - &s.p.0, &s.q.1 - &s.p.1);
        pts.sort_by(|a, b| {
            let ta = (&a.0 - &s.p.0) * &dir.0 + (&a.1 - &s.p.1) * &dir.1;
            let tb = (&b.0 - &s.p.0) * &dir.0 + (&b.1 - &s.p.1) * &dir.1;
            ta.cmp(&tb)
        });
        pts.dedup();
        let ids: Vec<usize> = pts
            .iter()
            .map(|p| find_or_add(p.clone(), &mut vertex_list, &mut vertex_index))
            .collect();
        for w in ids.windows(2) {
            let (u, v) = (w[0].min(w[1]), w[0].max(w[1]));
            edge_set.insert((u, v), ());
        }
    }
    let vertices = vertex_list;
    let edges: Vec<(usize, usize)> = edge_set.into_keys().collect();

    // Half-edge structure: directed edges, sorted counterclockwise around
    // each vertex; face successor of u→v is the clockwise-next edge after
    // v→u around v, which walks bounded faces counterclockwise.
    let nv = vertices.len();
    let mut out_edges: Vec<Vec<usize>> = vec![Vec::new(); nv]; // directed edge ids
    let mut dir_edges: Vec<(usize, usize)> = Vec::new();
    for &(u, v) in &edges {
        dir_edges.push((u, v));
        dir_edges.push((v, u));
    }
    for (eid, &(u, _)) in dir_edges.iter().enumerate() {
        out_edges[u].push(eid);
    }
    for (v, list) in out_edges.iter_mut().enumerate() {
        list.sort_by(|&e1, &e2| {
            let d = |e: usize| -> Point {
                let (a, b) = dir_edges[e];
                debug_assert_eq!(a, v);
                (&vertices[b].0 - &vertices[a].0, &vertices[b].1 - &vertices[a].1)
            };
            cmp_angle(&d(e1), &d(e2))
        });
    }
    let twin = |e: usize| -> usize { e ^ 1 };
    let next_edge = |e: usize| -> usize {
        let t = twin(e);
        let (v, _) = dir_edges[t];
        let ring = &out_edges[v];
        let k = ring.iter().position(|&x| x == t).unwrap();
        ring[(k + ring.len() - 1) % ring.len()]
    };

    // Walk faces.
    let mut face_of: Vec<Option<usize>> = vec![None; dir_edges.len()];
    let mut faces: Vec<Face> = Vec::new();
    for start in 0..dir_edges.len() {
        if face_of[start].is_some() {
            continue;
        }
        let fid = faces.len();
        let mut cycle_edges = Vec::new();
        let mut e = start;
        loop {
            face_of[e] = Some(fid);
            cycle_edges.push(e);
            e = next_edge(e);
            if e == start {
                break;
            }
        }
        let cycle: Vec<usize> = cycle_edges.iter().map(|&e| dir_edges[e].0).collect();
        // Signed area by the shoelace formula; negative means this is the
        // unique outer walk (clockwise around everything).
        let mut area2 = Q::from(BigInt::zero());
        for k in 0..cycle.len() {
            let p = &vertices[cycle[k]];
            let q = &vertices[cycle[(k + 1) % cycle.len()]];
            area2 += &p.0 * &q.1 - &q.0 * &p.1;
        }
        let outer = !area2.is_positive();
        // Count maximal straight sides: corners where direction changes.
        let mut sides = 0usize;
        let len = cycle.len();
        for k in 0..len {
            let a = &vertices[cycle[(k + len - 1) % len]];
            let b = &vertices[cycle[k]];
            let c = &vertices[cycle[(k + 1) % len]];
            let d1 = (&b.0 - &a.0, &b.1 - &a.1);
            let d2 = (&c.0 - &b.0, &c.1 - &b.1);
            let cross = &d1.0 * &d2.1 - &d1.1 * &d2.0;
            if !cross.is_zero() {
                sides += 1;
            } else {
                // A straight angle along a side, or a degenerate spike
                // (180° turn) on a dangling edge; spikes only occur on the
                // outer walk of degenerate inputs.
                let dot = &d1.0 * &d2.0 + &d1.1 * &d2.1;
                if dot.is_negative() {
                    sides += 1;
                }
            }
            if !outer && !cross.is_positive() && !cross.is_zero() {
                // Bounded faces of a segment arrangement are convex.
                return Err(Error::BadInput(
                    "arrangement walk produced a non-convex bounded face".into(),
                ));
            }
        }
        let mut cx = Q::from(BigInt::zero());
        let mut cy = Q::from(BigInt::zero());
        let mut distinct: Vec<usize> = cycle.clone();
        distinct.sort_unstable();
        distinct.dedup();
        for &vi in &distinct {
            cx += &vertices[vi].0;
            cy += &vertices[vi].1;
        }
        let cnt = Q::from(BigInt::from(distinct.len() as i64));
        faces.push(Face {
            cycle,
            sides,
            outer,
            centroid: (cx / &cnt, cy / &cnt),
        });
    }

    let outer_count = faces.iter().filter(|f| f.outer).count();
    if outer_count != 1 {
        return Err(Error::BadInput(
            "arrangement is not connected: expected exactly one outer walk".into(),
        ));
    }
    // Euler's formula for a connected planar graph.
    let (v, e, f) = (vertices.len() as i64, edges.len() as i64, faces.len() as i64);
    if v - e + f != 2 {
        return Err(Error::BadInput(format!(
            "Euler check failed: V−E+F = {} − {} + {} ≠ 2",
            v, e, f
        )));
    }
    Ok(Arrangement { vertices, edges, faces })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::q_int;

    fn pt(x: i64, y: i64) -> Point {
        (q_int(x), q_int(y))
    }

    fn seg(a: (i64, i64), b: (i64, i64)) -> (Point, Point) {
        (pt(a.0, a.1), pt(b.0, b.1))
    }

    #[test]
    fn square_with_diagonals_has_four_triangles() {
        let segments = vec![
            seg((0, 0), (1, 0)),
            seg((1, 0), (1, 1)),
            seg((1, 1), (0, 1)),
            seg((0, 1), (0, 0)),
            seg((0, 0), (1, 1)),
            seg((1, 0), (0, 1)),
        ];
        let arr = build_arrangement(&segments).unwrap();
        assert_eq!(arr.vertices.len(), 5); // 4 corners + center
        assert_eq!(arr.edges.len(), 8);
        assert_eq!(arr.faces.len(), 5); // 4 bounded + outer
        assert_eq!(arr.census(), BTreeMap::from([(3, 4)]));
    }

    #[test]
    fn overlapping_collinear_segments_are_merged() {
        let segments = vec![
            seg((0, 0), (2, 0)),
            seg((1, 0), (3, 0)),
            seg((0, 0), (0, 1)),
            seg((0, 1), (3, 1)),
            seg((3, 1), (3, 0)),
        ];
        let arr = build_arrangement(&segments).unwrap();
        // Bottom side is one merged segment split only at junctions with
        // other lines; interior endpoints (1,0) and (2,0) vanish.
        assert!(arr.vertices.iter().all(|v| v != &pt(1, 0) && v != &pt(2, 0)));
        assert_eq!(arr.census(), BTreeMap::from([(4, 1)]));
    }

    #[test]
    fn t_junctions_split_segments() {
        let segments = vec![
            seg((0, 0), (2, 0)),
            seg((0, 0), (0, 2)),
            seg((2, 0), (0, 2)),
            seg((1, 0), (0, 1)), // chord meeting the hull at two T-junctions
        ];
        let arr = build_arrangement(&segments).unwrap();
        // The chord cuts off a corner triangle; the rest is a quadrilateral.
        assert_eq!(arr.census(), BTreeMap::from([(3, 1), (4, 1)]));
        assert_eq!(arr.bounded_face_count(), 2);
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let segments = vec![seg((0, 0), (1, 0)), seg((5, 5), (6, 5))];
        assert!(build_arrangement(&segments).is_err());
    }

    #[test]
    fn sides_merge_collinear_boundary_edges() {
        // A 2×1 rectangle with a vertical mid-line: both faces are unit
        // squares (4 sides), and the big rectangle's long sides are split
        // by the T-junctions yet counted once per straight side.
        let segments = vec![
            seg((0, 0), (2, 0)),
            seg((2, 0), (2, 1)),
            seg((2, 1), (0, 1)),
            seg((0, 1), (0, 0)),
            seg((1, 0), (1, 1)),
        ];
        let arr = build_arrangement(&segments).unwrap();
        assert_eq!(arr.census(), BTreeMap::from([(4, 2)]));
    }
}
