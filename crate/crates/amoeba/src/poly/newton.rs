//! Newton-support utilities: convex hulls of exponent supports (n <= 2)
//! and the coamoeba complement-component bound.

use super::coeff::Coeff;
use super::expt::Expt;
use super::mpoly::MPoly;
use super::PolyError;

/// Exponent support of a polynomial together with the convex hull of the
/// support points. Hull vertices are counterclockwise and strictly convex.
#[derive(Debug, Clone)]
pub struct NewtonSupport {
    pub points: Vec<Expt>,
    pub hull: Vec<Expt>,
}

impl NewtonSupport {
    pub fn of<C: Coeff>(p: &MPoly<C>) -> Result<Self, PolyError> {
        let n = p.nvars();
        if n > 2 {
            return Err(PolyError::UnsupportedDimension { n });
        }
        let points = p.support();
        let hull = match n {
            0 => points.clone(),
            1 => hull_1d(&points),
            _ => hull_2d(&points),
        };
        Ok(NewtonSupport { points, hull })
    }

    /// Twice the area of the hull (exact integer for lattice points).
    pub fn doubled_area(&self) -> u64 {
        if self.hull.len() < 3 {
            return 0;
        }
        let pts: Vec<(i64, i64)> = self
            .hull
            .iter()
            .map(|e| (e.entries()[0] as i64, e.entries()[1] as i64))
            .collect();
        let mut s: i64 = 0;
        for i in 0..pts.len() {
            let (x1, y1) = pts[i];
            let (x2, y2) = pts[(i + 1) % pts.len()];
            s += x1 * y2 - x2 * y1;
        }
        s.unsigned_abs()
    }
}

fn hull_1d(points: &[Expt]) -> Vec<Expt> {
    let mut es: Vec<u32> = points.iter().map(|e| e.entries()[0]).collect();
    es.sort_unstable();
    es.dedup();
    match es.len() {
        0 => vec![],
        1 => vec![Expt::new(vec![es[0]])],
        _ => vec![
            Expt::new(vec![es[0]]),
            Expt::new(vec![*es.last().unwrap()]),
        ],
    }
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Andrew monotone chain; collinear points are dropped so the result is
/// strictly convex.
fn hull_2d(points: &[Expt]) -> Vec<Expt> {
    let mut pts: Vec<(i64, i64)> = points
        .iter()
        .map(|e| (e.entries()[0] as i64, e.entries()[1] as i64))
        .collect();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 2 {
        return pts
            .into_iter()
            .map(|(x, y)| Expt::new(vec![x as u32, y as u32]))
            .collect();
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    // degenerate (all collinear): keep the two extreme points
    if lower.len() < 3 {
        let lo = *pts.first().unwrap();
        let hi = *pts.last().unwrap();
        lower = if lo == hi { vec![lo] } else { vec![lo, hi] };
    }
    lower
        .into_iter()
        .map(|(x, y)| Expt::new(vec![x as u32, y as u32]))
        .collect()
}

/// Upper bound on the number of complement components of the closed
/// coamoeba in the 2-torus: `ceil(2 * area(Newton polygon))`.
pub fn coamoeba_component_bound<C: Coeff>(p: &MPoly<C>) -> Result<u64, PolyError> {
    let n = p.nvars();
    if n != 2 {
        return Err(PolyError::UnsupportedDimension { n });
    }
    let support = NewtonSupport::of(p)?;
    // doubled_area is n! * vol for n = 2 and already an integer
    Ok(support.doubled_area())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;

    #[test]
    fn single_monomial_has_zero_bound() {
        let f = parse_poly("Z1^3*Z2", 2).unwrap();
        assert_eq!(coamoeba_component_bound(&f).unwrap(), 0);
    }

    #[test]
    fn unit_triangle_bound_is_one() {
        let f = parse_poly("Z1 + Z2 + 1", 2).unwrap();
        assert_eq!(coamoeba_component_bound(&f).unwrap(), 1);
    }

    #[test]
    fn cubic_family_bound_is_three() {
        // hull (0,0), (2,1), (1,2): shoelace doubled area 3
        let f = parse_poly("Z1^2*Z2 + Z1*Z2^2 - 4*Z1*Z2 + 1", 2).unwrap();
        assert_eq!(coamoeba_component_bound(&f).unwrap(), 3);
        let hull = NewtonSupport::of(&f).unwrap().hull;
        assert_eq!(hull.len(), 3);
    }

    #[test]
    fn collinear_support_degenerates() {
        let f = parse_poly("Z1^2 + Z1 + 1", 2).unwrap();
        assert_eq!(coamoeba_component_bound(&f).unwrap(), 0);
        let hull = NewtonSupport::of(&f).unwrap().hull;
        assert_eq!(hull.len(), 2);
    }

    #[test]
    fn rejects_higher_dimension() {
        let f = parse_poly("Z1 + Z2 + Z3", 3).unwrap();
        assert!(matches!(
            coamoeba_component_bound(&f),
            Err(PolyError::UnsupportedDimension { n: 3 })
        ));
    }
}
