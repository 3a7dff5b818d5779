#![allow(dead_code, clippy::needless_range_loop)]

use barysparse_core::{validate_polygon, FaceLattice, Point, Polygon};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn pt(c: &[f64]) -> Point {
    Point::new(c.to_vec()).unwrap()
}

pub fn pts(raw: &[&[f64]]) -> Vec<Point> {
    raw.iter().map(|c| pt(c)).collect()
}

/// Corner-lopped unit cube: the corner (1,1,0) is cut off by the plane
/// through (1,0.5,0), (1,1,0.5), (0.5,1,0). Facets are counterclockwise from
/// outside and listed so that base vertex 0 yields the identity numbering.
pub fn lopped_cube() -> (Vec<Point>, Vec<Vec<usize>>) {
    let points = pts(&[
        &[1.0, 1.0, 1.0],
        &[0.0, 1.0, 1.0],
        &[0.0, 0.0, 1.0],
        &[1.0, 0.0, 1.0],
        &[1.0, 0.0, 0.0],
        &[1.0, 0.5, 0.0],
        &[1.0, 1.0, 0.5],
        &[0.5, 1.0, 0.0],
        &[0.0, 1.0, 0.0],
        &[0.0, 0.0, 0.0],
    ]);
    let facets = vec![
        vec![0, 1, 2, 3],
        vec![0, 3, 4, 5, 6],
        vec![5, 7, 6],
        vec![0, 6, 7, 8, 1],
        vec![1, 8, 9, 2],
        vec![3, 2, 9, 4],
        vec![4, 9, 8, 7, 5],
    ];
    (points, facets)
}

pub fn unit_cube() -> (Vec<Point>, Vec<Vec<usize>>) {
    let points = pts(&[
        &[0.0, 0.0, 0.0],
        &[1.0, 0.0, 0.0],
        &[1.0, 1.0, 0.0],
        &[0.0, 1.0, 0.0],
        &[0.0, 0.0, 1.0],
        &[1.0, 0.0, 1.0],
        &[1.0, 1.0, 1.0],
        &[0.0, 1.0, 1.0],
    ]);
    let facets = vec![
        vec![0, 3, 2, 1],
        vec![4, 5, 6, 7],
        vec![0, 1, 5, 4],
        vec![1, 2, 6, 5],
        vec![2, 3, 7, 6],
        vec![3, 0, 4, 7],
    ];
    (points, facets)
}

pub fn regular_polygon(n: usize) -> Polygon {
    let points = (0..n)
        .map(|k| {
            let a = std::f64::consts::TAU * k as f64 / n as f64;
            pt(&[a.cos(), a.sin()])
        })
        .collect();
    validate_polygon(points).unwrap()
}

/// Hexagonal pyramid: apex 0 below the regular hexagon 1..6.
pub fn hex_pyramid() -> (Vec<Point>, Vec<Vec<usize>>) {
    let mut points = vec![pt(&[0.0, 0.0, -1.0])];
    for k in 0..6 {
        let a = std::f64::consts::TAU * k as f64 / 6.0;
        points.push(pt(&[a.cos(), a.sin(), 0.0]));
    }
    let mut facets: Vec<Vec<usize>> = (1..=6).map(|i| vec![0, i, if i == 1 { 6 } else { i - 1 }]).collect();
    facets.push((1..=6).collect());
    (points, facets)
}

/// The unit `n`-cube with its full face lattice. Vertex `v` has coordinate
/// bit `i` of `v` on axis `i`; a face is a word over {0, 1, free}.
pub fn hypercube(n: usize) -> (Vec<Point>, FaceLattice) {
    let points =
        (0..1usize << n).map(|v| Point::new((0..n).map(|i| ((v >> i) & 1) as f64).collect()).unwrap()).collect();
    // words[d]: faces of dimension d as (free mask, fixed bits)
    let mut words: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n + 1];
    for free in 0..1usize << n {
        let d = free.count_ones() as usize;
        for bits in 0..1usize << n {
            if bits & free == 0 {
                words[d].push((free, bits));
            }
        }
    }
    let mut layers = Vec::new();
    for d in 1..n {
        let layer = words[d]
            .iter()
            .map(|&(free, bits)| {
                let mut facets = Vec::new();
                for i in (0..n).filter(|i| free >> i & 1 == 1) {
                    for b in [0, 1 << i] {
                        let sub = (free & !(1 << i), bits | b);
                        facets.push(words[d - 1].iter().position(|&w| w == sub).unwrap());
                    }
                }
                facets
            })
            .collect();
        layers.push(layer);
    }
    let lattice = FaceLattice::new(1 << n, n, layers).unwrap();
    (points, lattice)
}

/// A random strictly convex polygon: sorted angles with a minimum gap on an
/// affinely distorted circle.
pub fn random_polygon(rng: &mut ChaCha8Rng, n: usize) -> Polygon {
    loop {
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let gaps_ok = (0..n).all(|k| {
            let next = if k + 1 < n { angles[k + 1] } else { angles[0] + std::f64::consts::TAU };
            next - angles[k] > 0.15
        });
        if !gaps_ok {
            continue;
        }
        let m = [rng.gen_range(0.5..2.0), rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5), rng.gen_range(0.5..2.0)];
        let shift = [rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)];
        let points = angles
            .iter()
            .map(|a| {
                let (c, s) = (a.cos(), a.sin());
                pt(&[m[0] * c + m[1] * s + shift[0], m[2] * c + m[3] * s + shift[1]])
            })
            .collect();
        if let Ok(p) = validate_polygon(points) {
            return p;
        }
    }
}

/// Solves `a x = b` by Gaussian elimination with partial pivoting.
pub fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs())).unwrap();
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    x
}

/// Determinant by elimination.
pub fn det(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    let mut d = 1.0;
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs())).unwrap();
        if piv != col {
            a.swap(col, piv);
            d = -d;
        }
        d *= a[col][col];
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
        }
    }
    d
}

/// Barycentric coordinates of `x` in the simplex `v` via the
/// `(n+1) x (n+1)` system with a row of ones.
pub fn barycentric_oracle(v: &[Point], x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let mut a = vec![vec![0.0; n + 1]; n + 1];
    for (j, p) in v.iter().enumerate() {
        for i in 0..n {
            a[i][j] = p[i];
        }
        a[n][j] = 1.0;
    }
    let mut b = x.to_vec();
    b.push(1.0);
    solve(a, b)
}

/// Uniform sample from the interior of `poly` by rejection from its bounding box.
pub fn sample_in(rng: &mut ChaCha8Rng, points: &[Point], inside: impl Fn(&[f64]) -> bool) -> Vec<f64> {
    let dim = points[0].dim();
    let lo: Vec<f64> = (0..dim).map(|i| points.iter().map(|p| p[i]).fold(f64::INFINITY, f64::min)).collect();
    let hi: Vec<f64> = (0..dim).map(|i| points.iter().map(|p| p[i]).fold(f64::NEG_INFINITY, f64::max)).collect();
    loop {
        let x: Vec<f64> = (0..dim).map(|i| rng.gen_range(lo[i]..hi[i])).collect();
        if inside(&x) {
            return x;
        }
    }
}
