//! Planar lane realization of curves on the fence surface.
//!
//! The surface is drawn as the blackboard thickening of the fence diagram,
//! with the viewer on the positive-normal side:
//!
//! * disk `s` is the vertical strip `|x - s·DX| ≤ HALF_WIDTH`;
//! * band `k` (letter `a(i,j)^ε`) leaves the right edge of disk `i` at height
//!   `k·DY`, runs right in front of disks `i+1..=j`, hooks up (`ε = +1`) or
//!   down (`ε = −1`) past disk `j` and comes back to attach to the right edge
//!   of disk `j`, `HOOK` above or below where it crossed.
//!
//! Every curve is a closed rectilinear polyline: each band pass gets its own
//! lane inside the band, each disk pass its own depth inside the disk. Band
//! segments lie in front of disk segments. The positive push-off of a curve
//! sits in front of the surface, so at a point where two curves meet on the
//! surface the pushed-off curve is the over strand.
//!
//! All coordinates are integers and lanes/depths are globally distinct, so
//! crossings are transverse and never happen at polyline vertices.

use crate::band_words::{BandLetter, BandWord};

use super::basis::Cycle;

const DX: i64 = 1_000_000;
const DY: i64 = 1_000_000;
const HALF_WIDTH: i64 = 100_000;
const HOOK_REACH: i64 = 200_000;
const HOOK: i64 = 300_000;
const STEP: i64 = 50;
const MAX_SLOTS: i64 = HOOK / 2 / STEP - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Layer {
    Disk,
    Band,
}

#[derive(Debug, Clone, Copy)]
struct Point {
    x: i64,
    y: i64,
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    from: Point,
    to: Point,
    layer: Layer,
}

impl Segment {
    fn is_horizontal(&self) -> bool {
        self.from.y == self.to.y
    }

    fn direction(&self) -> (i64, i64) {
        (
            (self.to.x - self.from.x).signum(),
            (self.to.y - self.from.y).signum(),
        )
    }
}

/// Hands out distinct lane offsets and disk depths.
#[derive(Debug, Default)]
pub(super) struct LaneAllocator {
    lanes: i64,
    depths: i64,
}

impl LaneAllocator {
    fn next_lane(&mut self) -> i64 {
        self.lanes += 1;
        assert!(
            self.lanes <= MAX_SLOTS,
            "too many band passes for the lane layout"
        );
        self.lanes * STEP
    }

    fn next_depth(&mut self) -> i64 {
        self.depths += 1;
        assert!(
            self.depths * STEP < 2 * HALF_WIDTH,
            "too many disk passes for the lane layout"
        );
        self.depths * STEP
    }
}

fn disk_edge(strand: usize) -> i64 {
    strand as i64 * DX + HALF_WIDTH
}

/// Lane of band `letter` at height `height`, offset `lane` to the left of the
/// lower → upper direction. Returned lower end first.
fn band_lane(letter: &BandLetter, height: usize, lane: i64) -> [Point; 4] {
    let y = height as i64 * DY;
    let start = disk_edge(letter.lower());
    let turn = disk_edge(letter.upper()) + HOOK_REACH;
    let end = disk_edge(letter.upper());
    if letter.is_positive() {
        [
            Point {
                x: start,
                y: y + lane,
            },
            Point {
                x: turn - lane,
                y: y + lane,
            },
            Point {
                x: turn - lane,
                y: y + HOOK - lane,
            },
            Point {
                x: end,
                y: y + HOOK - lane,
            },
        ]
    } else {
        [
            Point {
                x: start,
                y: y + lane,
            },
            Point {
                x: turn + lane,
                y: y + lane,
            },
            Point {
                x: turn + lane,
                y: y - HOOK - lane,
            },
            Point {
                x: end,
                y: y - HOOK - lane,
            },
        ]
    }
}

/// A curve realized as a closed polyline.
#[derive(Debug, Clone)]
pub(super) struct Polyline {
    segments: Vec<Segment>,
}

impl Polyline {
    pub(super) fn realize(word: &BandWord, cycle: &Cycle, alloc: &mut LaneAllocator) -> Self {
        let lanes: Vec<[Point; 4]> = cycle
            .traversals
            .iter()
            .map(|t| {
                let letter = word.letter(t.letter).expect("cycle checked against word");
                let mut lane = band_lane(letter, t.letter, alloc.next_lane());
                if !t.forward {
                    lane.reverse();
                }
                lane
            })
            .collect();

        let n = lanes.len();
        let mut points: Vec<(Point, Layer)> = Vec::with_capacity(6 * n);
        for k in 0..n {
            points.extend(lanes[k].iter().map(|&p| (p, Layer::Band)));
            let arrive = lanes[k][3];
            let leave = lanes[(k + 1) % n][0];
            debug_assert_eq!(arrive.x, leave.x, "consecutive passes share a disk");
            let inner = arrive.x - alloc.next_depth();
            points.push((
                Point {
                    x: inner,
                    y: arrive.y,
                },
                Layer::Disk,
            ));
            points.push((
                Point {
                    x: inner,
                    y: leave.y,
                },
                Layer::Disk,
            ));
        }
        let len = points.len();

        // Segment layer: a segment is a band segment iff both ends were
        // emitted as band points; disk stubs and runs are disk segments.
        let mut segments = Vec::with_capacity(len);
        for idx in 0..len {
            let (a, la) = points[idx];
            let (b, lb) = points[(idx + 1) % len];
            if a.x == b.x && a.y == b.y {
                continue;
            }
            debug_assert!(a.x == b.x || a.y == b.y, "polyline must be rectilinear");
            let layer = if la == Layer::Band && lb == Layer::Band {
                Layer::Band
            } else {
                Layer::Disk
            };
            segments.push(Segment {
                from: a,
                to: b,
                layer,
            });
        }
        Polyline { segments }
    }
}

/// Signed crossing tallies between two curves `a` and `b`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub(super) struct CrossingTally {
    /// Σ signs of crossings where the push-off of `a` passes over `b`:
    /// the linking number `lk(a⁺, b)`.
    pub pushoff_over: i64,
    /// Σ signs of crossings where `a` and `b` meet on the surface.
    pub on_surface: i64,
}

pub(super) fn tally(a: &Polyline, b: &Polyline) -> CrossingTally {
    let mut out = CrossingTally::default();
    for sa in &a.segments {
        for sb in &b.segments {
            let (h, v) = match (sa.is_horizontal(), sb.is_horizontal()) {
                (true, false) => (sa, sb),
                (false, true) => (sb, sa),
                (true, true) => {
                    debug_assert!(
                        sa.from.y != sb.from.y || disjoint(sa.from.x, sa.to.x, sb.from.x, sb.to.x),
                        "collinear overlap"
                    );
                    continue;
                }
                (false, false) => {
                    debug_assert!(
                        sa.from.x != sb.from.x || disjoint(sa.from.y, sa.to.y, sb.from.y, sb.to.y),
                        "collinear overlap"
                    );
                    continue;
                }
            };
            let x = v.from.x;
            let y = h.from.y;
            let (hx0, hx1) = ordered(h.from.x, h.to.x);
            let (vy0, vy1) = ordered(v.from.y, v.to.y);
            if x < hx0 || x > hx1 || y < vy0 || y > vy1 {
                continue;
            }
            debug_assert!(
                x != hx0 && x != hx1 && y != vy0 && y != vy1,
                "crossing at a polyline vertex"
            );
            let (da, db) = (sa.direction(), sb.direction());
            let sign_a_over = da.0 * db.1 - da.1 * db.0;
            if sa.layer == sb.layer {
                debug_assert_eq!(sa.layer, Layer::Disk, "bands never meet in projection");
                out.on_surface += sign_a_over;
                out.pushoff_over += sign_a_over;
            } else if sa.layer == Layer::Band {
                out.pushoff_over += sign_a_over;
            }
        }
    }
    out
}

fn ordered(a: i64, b: i64) -> (i64, i64) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn disjoint(a0: i64, a1: i64, b0: i64, b1: i64) -> bool {
    let (a0, a1) = ordered(a0, a1);
    let (b0, b1) = ordered(b0, b1);
    a1 < b0 || b1 < a0
}
