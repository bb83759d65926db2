//! Planar polyline utilities: bounding boxes and intersection tests.

type P = [f64; 2];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BBox {
    pub min: P,
    pub max: P,
}

impl BBox {
    pub fn of<'a>(pts: impl IntoIterator<Item = &'a P>) -> Option<Self> {
        let mut it = pts.into_iter();
        let first = *it.next()?;
        let mut b = BBox { min: first, max: first };
        for p in it {
            b.min = [b.min[0].min(p[0]), b.min[1].min(p[1])];
            b.max = [b.max[0].max(p[0]), b.max[1].max(p[1])];
        }
        Some(b)
    }

    pub fn overlaps(&self, o: &BBox) -> bool {
        self.min[0] <= o.max[0] && o.min[0] <= self.max[0] && self.min[1] <= o.max[1] && o.min[1] <= self.max[1]
    }

    pub fn union(&self, o: &BBox) -> BBox {
        BBox {
            min: [self.min[0].min(o.min[0]), self.min[1].min(o.min[1])],
            max: [self.max[0].max(o.max[0]), self.max[1].max(o.max[1])],
        }
    }

    pub fn diagonal(&self) -> f64 {
        (self.max[0] - self.min[0]).hypot(self.max[1] - self.min[1])
    }
}

/// Diagonal of the bounding box of the points.
pub fn bounding_diameter<'a>(pts: impl IntoIterator<Item = &'a P>) -> f64 {
    BBox::of(pts).map_or(0.0, |b| b.diagonal())
}

fn orient(a: P, b: P, c: P) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

fn on_segment(a: P, b: P, p: P) -> bool {
    p[0] >= a[0].min(b[0]) && p[0] <= a[0].max(b[0]) && p[1] >= a[1].min(b[1]) && p[1] <= a[1].max(b[1])
}

/// Closed-segment intersection, touching included.
pub fn segments_intersect(a: P, b: P, c: P, d: P) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0)) {
        return true;
    }
    (d1 == 0.0 && on_segment(c, d, a))
        || (d2 == 0.0 && on_segment(c, d, b))
        || (d3 == 0.0 && on_segment(a, b, c))
        || (d4 == 0.0 && on_segment(a, b, d))
}

const CHUNK: usize = 32;

fn chunks(poly: &[P]) -> Vec<(BBox, &[P])> {
    if poly.len() < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i + 1 < poly.len() {
        let j = (i + CHUNK).min(poly.len() - 1);
        let s = &poly[i..=j];
        out.push((BBox::of(s).expect("non-empty chunk"), s));
        i = j;
    }
    out
}

/// Whether any segment of `a` meets any segment of `b`.
pub fn polylines_intersect(a: &[P], b: &[P]) -> bool {
    let (ca, cb) = (chunks(a), chunks(b));
    let (Some(ba), Some(bb)) = (BBox::of(a), BBox::of(b)) else {
        return false;
    };
    if !ba.overlaps(&bb) {
        return false;
    }
    for (box_a, sa) in &ca {
        for (box_b, sb) in &cb {
            if !box_a.overlaps(box_b) {
                continue;
            }
            for u in sa.windows(2) {
                for v in sb.windows(2) {
                    if segments_intersect(u[0], u[1], v[0], v[1]) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Whether the polylines are pairwise disjoint.
pub fn pairwise_disjoint(polys: &[Vec<P>]) -> bool {
    (0..polys.len()).all(|i| (i + 1..polys.len()).all(|j| !polylines_intersect(&polys[i], &polys[j])))
}
