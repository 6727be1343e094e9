//! Transfer-matrix residual for the step potential (height c on (0,1),
//! zero on (1,2)). A number lambda is an eigenvalue iff the fundamental
//! solution started from the left boundary condition still satisfies the
//! right boundary condition after propagation through both pieces — no
//! trigonometric identity from the secular equations is involved.

/// Propagator of -u'' + v u = lambda u over a piece of length `len` with
/// constant potential `v`, acting on (u, u').
fn piece_propagator(lambda: f64, v: f64, len: f64) -> [[f64; 2]; 2] {
    let w2 = lambda - v;
    if w2.abs() * len * len < 1e-12 {
        // series around w2 = 0: cos-type = 1 + w2 l^2/2 ..., sin-type = l (1 + ...)
        let a = 1.0 - 0.5 * w2 * len * len;
        let s = len * (1.0 - w2 * len * len / 6.0);
        return [[a, s], [-w2 * s, a]];
    }
    if w2 > 0.0 {
        let w = w2.sqrt();
        let (sn, cs) = (w * len).sin_cos();
        [[cs, sn / w], [-w * sn, cs]]
    } else {
        let k = (-w2).sqrt();
        let ch = (k * len).cosh();
        let sh = (k * len).sinh();
        [[ch, sh / k], [k * sh, ch]]
    }
}

fn apply(m: [[f64; 2]; 2], u: [f64; 2]) -> [f64; 2] {
    [m[0][0] * u[0] + m[0][1] * u[1], m[1][0] * u[0] + m[1][1] * u[1]]
}

/// Relative boundary-condition defect at x = 2 for the step problem on
/// (0, 2). `dirichlet = true` checks u(0)=u(2)=0, otherwise u'(0)=u'(2)=0.
/// Zero (up to roundoff) exactly at the eigenvalues.
pub fn step_residual(lambda: f64, c: f64, dirichlet: bool) -> f64 {
    let start = if dirichlet { [0.0, 1.0] } else { [1.0, 0.0] };
    let mid = apply(piece_propagator(lambda, c, 1.0), start);
    let end = apply(piece_propagator(lambda, 0.0, 1.0), mid);
    let norm = (end[0] * end[0] + end[1] * end[1]).sqrt();
    let defect = if dirichlet { end[0] } else { end[1] };
    defect.abs() / norm
}
