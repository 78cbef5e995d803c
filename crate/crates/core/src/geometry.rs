//! Fixed-size vector helpers for tetrahedral geometry.

use crate::num::{real, Real};

/// A point or vector in three dimensions.
pub type Vec3<T> = [T; 3];

#[inline]
pub fn add<T: Real>(a: Vec3<T>, b: Vec3<T>) -> Vec3<T> {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

#[inline]
pub fn sub<T: Real>(a: Vec3<T>, b: Vec3<T>) -> Vec3<T> {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

#[inline]
pub fn scale<T: Real>(s: T, a: Vec3<T>) -> Vec3<T> {
    [s * a[0], s * a[1], s * a[2]]
}

#[inline]
pub fn dot<T: Real>(a: Vec3<T>, b: Vec3<T>) -> T {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[inline]
pub fn cross<T: Real>(a: Vec3<T>, b: Vec3<T>) -> Vec3<T> {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

#[inline]
pub fn norm_sq<T: Real>(a: Vec3<T>) -> T {
    dot(a, a)
}

#[inline]
pub fn norm<T: Real>(a: Vec3<T>) -> T {
    norm_sq(a).sqrt()
}

#[inline]
pub fn dist<T: Real>(a: Vec3<T>, b: Vec3<T>) -> T {
    norm(sub(a, b))
}

#[inline]
pub fn midpoint<T: Real>(a: Vec3<T>, b: Vec3<T>) -> Vec3<T> {
    scale(real(0.5), add(a, b))
}

/// Signed volume of the tetrahedron spanned by four points.
pub fn tet_signed_volume<T: Real>(p: &[Vec3<T>; 4]) -> T {
    let e1 = sub(p[1], p[0]);
    let e2 = sub(p[2], p[0]);
    let e3 = sub(p[3], p[0]);
    dot(e1, cross(e2, e3)) / real(6.0)
}

/// Barycentric gradients of a tetrahedron together with its signed volume.
///
/// `grad[i]` is the (constant) gradient of the barycentric coordinate
/// attached to vertex `i`.
pub fn tet_grad_lambda<T: Real>(p: &[Vec3<T>; 4]) -> ([Vec3<T>; 4], T) {
    let e1 = sub(p[1], p[0]);
    let e2 = sub(p[2], p[0]);
    let e3 = sub(p[3], p[0]);
    let six_v = dot(e1, cross(e2, e3));
    let inv = T::one() / six_v;
    let g1 = scale(inv, cross(e2, e3));
    let g2 = scale(inv, cross(e3, e1));
    let g3 = scale(inv, cross(e1, e2));
    let g0 = [
        -(g1[0] + g2[0] + g3[0]),
        -(g1[1] + g2[1] + g3[1]),
        -(g1[2] + g2[2] + g3[2]),
    ];
    ([g0, g1, g2, g3], six_v / real(6.0))
}

/// Barycentric coordinates of a physical point with respect to a tetrahedron.
pub fn barycentric<T: Real>(p: &[Vec3<T>; 4], x: Vec3<T>) -> [T; 4] {
    let (grad, _) = tet_grad_lambda(p);
    let d = sub(x, p[0]);
    let l1 = dot(grad[1], d);
    let l2 = dot(grad[2], d);
    let l3 = dot(grad[3], d);
    [T::one() - l1 - l2 - l3, l1, l2, l3]
}

/// Smallest of the six dihedral angles of a tetrahedron, in degrees.
pub fn min_dihedral_angle_deg<T: Real>(p: &[Vec3<T>; 4]) -> T {
    // Edge (a,b) with opposite vertices (c,d): angle between the half-planes
    // through the edge containing c and d.
    const EDGES: [[usize; 4]; 6] = [
        [0, 1, 2, 3],
        [0, 2, 1, 3],
        [0, 3, 1, 2],
        [1, 2, 0, 3],
        [1, 3, 0, 2],
        [2, 3, 0, 1],
    ];
    let mut min_angle = T::infinity();
    for &[a, b, c, d] in &EDGES {
        let e = sub(p[b], p[a]);
        let el2 = norm_sq(e);
        let vc = sub(p[c], p[a]);
        let vd = sub(p[d], p[a]);
        let wc = sub(vc, scale(dot(vc, e) / el2, e));
        let wd = sub(vd, scale(dot(vd, e) / el2, e));
        let denom = norm(wc) * norm(wd);
        if denom <= T::zero() {
            return T::zero();
        }
        let mut cosang = dot(wc, wd) / denom;
        if cosang > T::one() {
            cosang = T::one();
        }
        if cosang < -T::one() {
            cosang = -T::one();
        }
        let ang = cosang.acos() * real(180.0) / real(std::f64::consts::PI);
        if ang < min_angle {
            min_angle = ang;
        }
    }
    min_angle
}

#[cfg(test)]
mod tests {
    use super::*;

    const REF_TET: [[f64; 3]; 4] = [
        [0.0, 0.0, 0.0],
        [1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, 0.0, 1.0],
    ];

    #[test]
    fn reference_tet_volume_is_one_sixth() {
        assert!((tet_signed_volume(&REF_TET) - 1.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn swapping_vertices_flips_volume_sign() {
        let mut p = REF_TET;
        p.swap(2, 3);
        assert!((tet_signed_volume(&p) + 1.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn gradients_are_dual_to_edges() {
        let (g, vol) = tet_grad_lambda(&REF_TET);
        assert!((vol - 1.0 / 6.0).abs() < 1e-15);
        // lambda_i(p_j) = delta_ij, so g_i dot (p_j - p_0) = delta_ij - delta_i0.
        for i in 0..4 {
            for j in 1..4 {
                let expected = if i == j { 1.0 } else { 0.0 } - if i == 0 { 1.0 } else { 0.0 };
                let d = dot(g[i], sub(REF_TET[j], REF_TET[0]));
                assert!((d - expected).abs() < 1e-14);
            }
        }
        // partition of unity: gradients sum to zero
        for k in 0..3 {
            let s = g[0][k] + g[1][k] + g[2][k] + g[3][k];
            assert!(s.abs() < 1e-14);
        }
    }

    #[test]
    fn barycentric_roundtrip() {
        let x = [0.2, 0.3, 0.1];
        let l = barycentric(&REF_TET, x);
        assert!((l[0] - 0.4).abs() < 1e-14);
        assert!((l[1] - 0.2).abs() < 1e-14);
        assert!((l[2] - 0.3).abs() < 1e-14);
        assert!((l[3] - 0.1).abs() < 1e-14);
    }

    #[test]
    fn regular_tet_dihedral_angle() {
        // All dihedral angles of the regular tetrahedron are acos(1/3).
        let p = [
            [1.0, 1.0, 1.0],
            [1.0, -1.0, -1.0],
            [-1.0, 1.0, -1.0],
            [-1.0, -1.0, 1.0],
        ];
        let expected = (1.0f64 / 3.0).acos().to_degrees();
        assert!((min_dihedral_angle_deg(&p) - expected).abs() < 1e-10);
    }
}
