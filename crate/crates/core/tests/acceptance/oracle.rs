//! Brute-force cohomology oracle, independent of the library's cochain
//! machinery: conditions are assembled as explicit row systems over raw value
//! tensors straight from the displayed formulas, adjoint actions are expanded
//! from the bracket table inline, and ranks/kernels come from a plain
//! fraction-pivot Gauss-Jordan written here.

#![allow(clippy::needless_range_loop)]

use triplekit::exactla::{Matrix, Scalar};
use triplekit::lts::LtsStructure;

fn zero_row(n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); n]
}

/// Plain Gauss-Jordan rank over the rationals.
pub fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut r = 0usize;
    for c in 0..cols {
        if r >= rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip().expect("pivot nonzero");
        for j in c..cols {
            rows[r][j] *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in c..cols {
                    let t = &f * &rows[r][j];
                    rows[i][j] -= &t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Kernel basis of a row system, canonical free-column form.
pub fn kernel_basis(mut rows: Vec<Vec<Scalar>>, cols: usize) -> Vec<Vec<Scalar>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if r >= rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip().expect("pivot nonzero");
        for j in c..cols {
            rows[r][j] *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in c..cols {
                    let t = &f * &rows[r][j];
                    rows[i][j] -= &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = zero_row(cols);
        v[free] = Scalar::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&rows[row][free];
        }
        basis.push(v);
    }
    basis
}

pub fn kernel_dim(rows: Vec<Vec<Scalar>>, cols: usize) -> usize {
    cols - rank(rows)
}

/// `[x, y, z]` expanded from the structure constants with the oracle's own
/// contraction loop.
fn tri(a: &LtsStructure, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
    let n = a.dim();
    let mut out = zero_row(n);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            for (k, zk) in z.iter().enumerate() {
                if zk.is_zero() {
                    continue;
                }
                let s = &(xi * yj) * zk;
                let consts = a.bracket_constants(i, j, k);
                for l in 0..n {
                    if !consts[l].is_zero() {
                        out[l] += &(&consts[l] * &s);
                    }
                }
            }
        }
    }
    out
}

fn e(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_row(n);
    v[i] = Scalar::one();
    v
}

/// Rows of the degree-1 cocycle condition of the adjoint pair over raw
/// `Hom(L, L)` coordinates `f[arg*n + out]`:
/// `D(x1,x2)f(x3) - θ(x1,x3)f(x2) + θ(x2,x3)f(x1) - f([x1,x2,x3]) = 0`
/// with `θ(x,y)z = [z,x,y]` and `D(x,y)z = [x,y,z]`.
pub fn adjoint_delta1_rows(a: &LtsStructure) -> Vec<Vec<Scalar>> {
    let n = a.dim();
    let mut rows = Vec::new();
    for x1 in 0..n {
        for x2 in 0..n {
            for x3 in 0..n {
                for out in 0..n {
                    let mut row = zero_row(n * n);
                    for l in 0..n {
                        // D(x1,x2) e_l at column (x3, l)
                        row[x3 * n + l] += &a.bracket_constants(x1, x2, l)[out];
                        // -θ(x1,x3) e_l = -[e_l, x1, x3] at column (x2, l)
                        row[x2 * n + l] -= &a.bracket_constants(l, x1, x3)[out];
                        // +θ(x2,x3) e_l at column (x1, l)
                        row[x1 * n + l] += &a.bracket_constants(l, x2, x3)[out];
                    }
                    // -f([x1,x2,x3])
                    let w = a.bracket_constants(x1, x2, x3);
                    for (arg, warg) in w.iter().enumerate() {
                        if !warg.is_zero() {
                            row[arg * n + out] -= warg;
                        }
                    }
                    rows.push(row);
                }
            }
        }
    }
    rows
}

/// `(dim Z¹, dim B¹, dim H¹)` of the adjoint pair (the complex starts at C¹,
/// so B¹ = 0).
pub fn adjoint_h1(a: &LtsStructure) -> (usize, usize, usize) {
    let n = a.dim();
    let z = kernel_dim(adjoint_delta1_rows(a), n * n);
    (z, 0, z)
}

/// Rows of the constraint families plus the displayed 3-cocycle condition of
/// the adjoint pair over raw degree-3 coordinates `f[((i n + j) n + k) n + out]`.
fn adjoint_z3_rows(a: &LtsStructure) -> Vec<Vec<Scalar>> {
    let n = a.dim();
    let coords = n * n * n * n;
    let idx = |i: usize, j: usize, k: usize, out: usize| ((i * n + j) * n + k) * n + out;
    let mut rows = Vec::new();
    // f(x,x,y) = 0 expanded to symmetry rows.
    for i in 0..n {
        for j in 0..=i {
            for k in 0..n {
                for out in 0..n {
                    let mut row = zero_row(coords);
                    row[idx(i, j, k, out)] += &Scalar::one();
                    row[idx(j, i, k, out)] += &Scalar::one();
                    rows.push(row);
                }
            }
        }
    }
    // Cyclic sum.
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for out in 0..n {
                    let mut row = zero_row(coords);
                    row[idx(i, j, k, out)] += &Scalar::one();
                    row[idx(j, k, i, out)] += &Scalar::one();
                    row[idx(k, i, j, out)] += &Scalar::one();
                    rows.push(row);
                }
            }
        }
    }
    // The displayed degree-3 cocycle identity.
    for a1 in 0..n {
        for a2 in 0..n {
            for b1 in 0..n {
                for b2 in 0..n {
                    for b3 in 0..n {
                        for out in 0..n {
                            let mut row = zero_row(coords);
                            // f(a1,a2,[b1,b2,b3])
                            let w = a.bracket_constants(b1, b2, b3);
                            for (l, wl) in w.iter().enumerate() {
                                if !wl.is_zero() {
                                    row[idx(a1, a2, l, out)] += wl;
                                }
                            }
                            for l in 0..n {
                                // + D(a1,a2) f(b1,b2,b3)
                                row[idx(b1, b2, b3, l)] +=
                                    &a.bracket_constants(a1, a2, l)[out];
                                // - θ(b2,b3) f(a1,a2,b1)
                                row[idx(a1, a2, b1, l)] -=
                                    &a.bracket_constants(l, b2, b3)[out];
                                // + θ(b1,b3) f(a1,a2,b2)
                                row[idx(a1, a2, b2, l)] +=
                                    &a.bracket_constants(l, b1, b3)[out];
                                // - D(b1,b2) f(a1,a2,b3)
                                row[idx(a1, a2, b3, l)] -=
                                    &a.bracket_constants(b1, b2, l)[out];
                            }
                            // - f([a1,a2,b1],b2,b3) - f(b1,[a1,a2,b2],b3) - f(b1,b2,[a1,a2,b3])
                            let w1 = a.bracket_constants(a1, a2, b1);
                            let w2 = a.bracket_constants(a1, a2, b2);
                            let w3 = a.bracket_constants(a1, a2, b3);
                            for l in 0..n {
                                if !w1[l].is_zero() {
                                    row[idx(l, b2, b3, out)] -= &w1[l];
                                }
                                if !w2[l].is_zero() {
                                    row[idx(b1, l, b3, out)] -= &w2[l];
                                }
                                if !w3[l].is_zero() {
                                    row[idx(b1, b2, l, out)] -= &w3[l];
                                }
                            }
                            rows.push(row);
                        }
                    }
                }
            }
        }
    }
    rows
}

/// `(dim Z³, dim B³, dim H³)` of the adjoint pair.
pub fn adjoint_h3(a: &LtsStructure) -> (usize, usize, usize) {
    let n = a.dim();
    let z = kernel_dim(adjoint_z3_rows(a), n * n * n * n);
    let b = rank(adjoint_delta1_rows(a));
    (z, b, z - b)
}

fn t_col(t: &Matrix, u: usize) -> Vec<Scalar> {
    t.column(u)
}

/// Rows of the expanded operator-complex 1-cocycle condition over raw
/// `Hom(V, L)` coordinates `f[v*n + out]` (adjoint base representation).
pub fn operator_delta1_rows(a: &LtsStructure, t: &Matrix) -> Vec<Vec<Scalar>> {
    let n = a.dim();
    let m = t.cols();
    let apply_t = |v: &[Scalar]| -> Vec<Scalar> {
        let mut out = zero_row(n);
        for (c, vc) in v.iter().enumerate() {
            if !vc.is_zero() {
                for r in 0..n {
                    if !t.at(r, c).is_zero() {
                        out[r] += &(t.at(r, c) * vc);
                    }
                }
            }
        }
        out
    };
    let mut rows = Vec::new();
    for v1 in 0..m {
        for v2 in 0..m {
            for v3 in 0..m {
                let tv1 = t_col(t, v1);
                let tv2 = t_col(t, v2);
                let tv3 = t_col(t, v3);
                // Per-column coefficient vectors (length n) for each f slot.
                let mut coeff = vec![zero_row(n); m * n];
                {
                    let mut add = |col: usize, vec: &[Scalar], sign: i64| {
                        for out in 0..n {
                            if !vec[out].is_zero() {
                                if sign > 0 {
                                    coeff[col][out] += &vec[out];
                                } else {
                                    coeff[col][out] -= &vec[out];
                                }
                            }
                        }
                    };
                    for l in 0..n {
                        let el = e(n, l);
                        // [Tv1,Tv2,f(v3)]
                        add(v3 * n + l, &tri(a, &tv1, &tv2, &el), 1);
                        // [Tv1,f(v2),Tv3]
                        add(v2 * n + l, &tri(a, &tv1, &el, &tv3), 1);
                        // [f(v1),Tv2,Tv3]
                        add(v1 * n + l, &tri(a, &el, &tv2, &tv3), 1);
                        // +T D(f(v2),Tv1) e_v3 = +T [f(v2),Tv1,e_v3]
                        add(v2 * n + l, &apply_t(&tri(a, &el, &tv1, &e(n, v3))), 1);
                        // -T D(f(v1),Tv2) e_v3
                        add(v1 * n + l, &apply_t(&tri(a, &el, &tv2, &e(n, v3))), -1);
                        // -T θ(Tv2,f(v3)) e_v1 = -T [e_v1,Tv2,f(v3)]
                        add(v3 * n + l, &apply_t(&tri(a, &e(n, v1), &tv2, &el)), -1);
                        // -T θ(f(v2),Tv3) e_v1 = -T [e_v1,f(v2),Tv3]
                        add(v2 * n + l, &apply_t(&tri(a, &e(n, v1), &el, &tv3)), -1);
                        // +T θ(Tv1,f(v3)) e_v2
                        add(v3 * n + l, &apply_t(&tri(a, &e(n, v2), &tv1, &el)), 1);
                        // +T θ(f(v1),Tv3) e_v2
                        add(v1 * n + l, &apply_t(&tri(a, &e(n, v2), &el, &tv3)), 1);
                    }
                    // -f(D(Tv1,Tv2)e_v3 + θ(Tv2,Tv3)e_v1 - θ(Tv1,Tv3)e_v2)
                    let mut warg = tri(a, &tv1, &tv2, &e(n, v3));
                    let t2 = tri(a, &e(n, v1), &tv2, &tv3);
                    let t3 = tri(a, &e(n, v2), &tv1, &tv3);
                    for i in 0..n {
                        warg[i] += &t2[i];
                        warg[i] -= &t3[i];
                    }
                    // The f-argument columns: f(w)_out = Σ_arg w_arg f[arg*n+out].
                    for (argv, w) in warg.iter().enumerate() {
                        if w.is_zero() {
                            continue;
                        }
                        for out in 0..n {
                            coeff[argv * n + out][out] -= w;
                        }
                    }
                }
                for out in 0..n {
                    let mut row = zero_row(m * n);
                    for col in 0..m * n {
                        row[col] = coeff[col][out].clone();
                    }
                    rows.push(row);
                }
            }
        }
    }
    rows
}

/// Matrix rows of `∂_T` over wedge coordinates:
/// `∂_T(e_i ∧ e_j)(e_v) = T[e_i,e_j,e_v] - [e_i,e_j,T e_v]`.
pub fn operator_partial_rows(a: &LtsStructure, t: &Matrix) -> Vec<Vec<Scalar>> {
    let n = a.dim();
    let m = t.cols();
    let wedges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    // Rows indexed by (v, out); columns by wedge index.
    let mut rows = vec![zero_row(wedges.len()); m * n];
    for (w, &(i, j)) in wedges.iter().enumerate() {
        for v in 0..m {
            let dv = tri(a, &e(n, i), &e(n, j), &e(n, v));
            let mut val = zero_row(n);
            for (c, dc) in dv.iter().enumerate() {
                if !dc.is_zero() {
                    for r in 0..n {
                        if !t.at(r, c).is_zero() {
                            val[r] += &(t.at(r, c) * dc);
                        }
                    }
                }
            }
            let bracket = tri(a, &e(n, i), &e(n, j), &t_col(t, v));
            for out in 0..n {
                let entry = &val[out] - &bracket[out];
                if !entry.is_zero() {
                    rows[v * n + out][w] = entry;
                }
            }
        }
    }
    rows
}

/// `(dim Z¹_T, dim B¹_T, dim H¹_T)` for an operator over the adjoint pair.
pub fn operator_h1(a: &LtsStructure, t: &Matrix) -> (usize, usize, usize) {
    let n = a.dim();
    let m = t.cols();
    let z = kernel_dim(operator_delta1_rows(a, t), m * n);
    let b = rank(operator_partial_rows(a, t));
    (z, b, z - b)
}

/// Kernel basis of `Z¹_T`, reused by the deformation criterion to sample
/// order-1 generators.
pub fn operator_z1_basis(a: &LtsStructure, t: &Matrix) -> Vec<Vec<Scalar>> {
    let m = t.cols();
    kernel_basis(operator_delta1_rows(a, t), m * a.dim())
}

/// `(dim Z³_T, dim B³_T, dim H³_T)` from the displayed 3-cocycle identity
/// with the induced structures expanded inline.
pub fn operator_h3(a: &LtsStructure, t: &Matrix) -> (usize, usize, usize) {
    let n = a.dim();
    let m = t.cols();
    let apply_t = |v: &[Scalar]| -> Vec<Scalar> {
        let mut out = zero_row(n);
        for (c, vc) in v.iter().enumerate() {
            if !vc.is_zero() {
                for r in 0..n {
                    if !t.at(r, c).is_zero() {
                        out[r] += &(t.at(r, c) * vc);
                    }
                }
            }
        }
        out
    };
    // Induced bracket on V: [u,v,w]_T = [Tu,Tv,e_w] + [e_u,Tv,Tw] - [e_v,Tu,Tw]
    // (as a V-valued vector in module coordinates; adjoint rep means V = L).
    let vt = |u: usize, v: usize, w: usize| -> Vec<Scalar> {
        let tu = t_col(t, u);
        let tv = t_col(t, v);
        let tw = t_col(t, w);
        let mut out = tri(a, &tu, &tv, &e(n, w));
        let t2 = tri(a, &e(n, u), &tv, &tw);
        let t3 = tri(a, &e(n, v), &tu, &tw);
        for i in 0..n {
            out[i] += &t2[i];
            out[i] -= &t3[i];
        }
        out
    };
    // θ_T(u,v): L -> L, column x = [e_x,Tu,Tv] + T([e_u,e_x,Tv] - [e_x,Tu,e_v]).
    let theta_t = |u: usize, v: usize| -> Vec<Vec<Scalar>> {
        let tu = t_col(t, u);
        let tv = t_col(t, v);
        (0..n)
            .map(|x| {
                let mut col = tri(a, &e(n, x), &tu, &tv);
                let mut inner = tri(a, &e(n, u), &e(n, x), &tv);
                let sub = tri(a, &e(n, x), &tu, &e(n, v));
                for i in 0..n {
                    inner[i] -= &sub[i];
                }
                let tin = apply_t(&inner);
                for i in 0..n {
                    col[i] += &tin[i];
                }
                col
            })
            .collect()
    };
    let coords = m * m * m * n;
    let idx = |u: usize, v: usize, w: usize, out: usize| ((u * m + v) * m + w) * n + out;
    let mut rows = Vec::new();
    for i in 0..m {
        for j in 0..=i {
            for k in 0..m {
                for out in 0..n {
                    let mut row = zero_row(coords);
                    row[idx(i, j, k, out)] += &Scalar::one();
                    row[idx(j, i, k, out)] += &Scalar::one();
                    rows.push(row);
                }
            }
        }
    }
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                for out in 0..n {
                    let mut row = zero_row(coords);
                    row[idx(i, j, k, out)] += &Scalar::one();
                    row[idx(j, k, i, out)] += &Scalar::one();
                    row[idx(k, i, j, out)] += &Scalar::one();
                    rows.push(row);
                }
            }
        }
    }
    // Precompute θ_T and D_T matrices by basis pair.
    let thetas: Vec<Vec<Vec<Scalar>>> = (0..m * m)
        .map(|p| theta_t(p / m, p % m))
        .collect();
    let d_t = |u: usize, v: usize, x: usize| -> Vec<Scalar> {
        // D_T(u,v) e_x = θ_T(v,u) e_x - θ_T(u,v) e_x
        let mut out = thetas[v * m + u][x].clone();
        let sub = &thetas[u * m + v][x];
        for i in 0..n {
            out[i] -= &sub[i];
        }
        out
    };
    for a1 in 0..m {
        for a2 in 0..m {
            for b1 in 0..m {
                for b2 in 0..m {
                    for b3 in 0..m {
                        for out in 0..n {
                            let mut row = zero_row(coords);
                            // f(a1,a2,[b1,b2,b3]_T)
                            let w = vt(b1, b2, b3);
                            for (l, wl) in w.iter().enumerate() {
                                if !wl.is_zero() {
                                    row[idx(a1, a2, l, out)] += wl;
                                }
                            }
                            for l in 0..n {
                                // + D_T(a1,a2) f(b1,b2,b3)
                                row[idx(b1, b2, b3, l)] += &d_t(a1, a2, l)[out];
                                // - θ_T(b2,b3) f(a1,a2,b1)
                                row[idx(a1, a2, b1, l)] -= &thetas[b2 * m + b3][l][out];
                                // + θ_T(b1,b3) f(a1,a2,b2)
                                row[idx(a1, a2, b2, l)] += &thetas[b1 * m + b3][l][out];
                                // - D_T(b1,b2) f(a1,a2,b3)
                                row[idx(a1, a2, b3, l)] -= &d_t(b1, b2, l)[out];
                            }
                            let w1 = vt(a1, a2, b1);
                            let w2 = vt(a1, a2, b2);
                            let w3 = vt(a1, a2, b3);
                            for l in 0..m {
                                if !w1[l].is_zero() {
                                    row[idx(l, b2, b3, out)] -= &w1[l];
                                }
                                if !w2[l].is_zero() {
                                    row[idx(b1, l, b3, out)] -= &w2[l];
                                }
                                if !w3[l].is_zero() {
                                    row[idx(b1, b2, l, out)] -= &w3[l];
                                }
                            }
                            rows.push(row);
                        }
                    }
                }
            }
        }
    }
    let z = kernel_dim(rows, coords);
    let b = rank(operator_delta1_rows(a, t));
    (z, b, z - b)
}
