//! Brute-force vertex enumeration, the independent oracle for the simplex.
//!
//! Every vertex of a pointed feasible region is the unique solution of some
//! full-rank square subsystem of tight rows, so enumerating all
//! `n`-element row subsets and filtering by feasibility finds every vertex.
//! Only sensible at desk scale; that is the point.

use crate::error::Result;
use crate::polytope::{LinIneqSystem, Relation};
use crate::rational::{dot, Rat};

/// All vertices of the feasible region (deduplicated).
pub fn enumerate_vertices(sys: &LinIneqSystem) -> Result<Vec<Vec<Rat>>> {
    sys.check_wellformed()?;
    let n = sys.num_vars();
    let rows = &sys.constraints;
    let eq_rows: Vec<usize> = (0..rows.len())
        .filter(|&i| rows[i].relation == Relation::Eq)
        .collect();
    let mut verts: Vec<Vec<Rat>> = Vec::new();
    let mut active = Vec::with_capacity(n);
    let mut push_vertex = |x: Vec<Rat>| {
        if !verts.contains(&x) {
            verts.push(x);
        }
    };
    combinations(rows.len(), n, &mut active, &mut |subset| {
        if eq_rows.iter().any(|e| !subset.contains(e)) {
            return;
        }
        let a: Vec<&[Rat]> = subset.iter().map(|&i| rows[i].coeffs.as_slice()).collect();
        let b: Vec<Rat> = subset.iter().map(|&i| rows[i].rhs.clone()).collect();
        let Some(x) = solve_square(&a, &b) else {
            return;
        };
        if sys.satisfied_by(&x) {
            push_vertex(x);
        }
    });
    Ok(verts)
}

/// Maximum of the objective over all feasible vertices, with an attaining
/// vertex; `None` when no feasible vertex exists. For a bounded pointed
/// region this equals the LP optimum.
pub fn vertex_optimum(sys: &LinIneqSystem, objective: &[Rat]) -> Result<Option<(Rat, Vec<Rat>)>> {
    let verts = enumerate_vertices(sys)?;
    let mut best: Option<(Rat, Vec<Rat>)> = None;
    for v in verts {
        let val = dot(objective, &v);
        match &best {
            Some((b, _)) if *b >= val => {}
            _ => best = Some((val, v)),
        }
    }
    Ok(best)
}

fn combinations(n: usize, k: usize, active: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if active.len() == k {
        f(active);
        return;
    }
    let start = active.last().map_or(0, |&l| l + 1);
    let remaining = k - active.len();
    for i in start..n {
        if n - i < remaining {
            break;
        }
        active.push(i);
        combinations(n, k, active, f);
        active.pop();
    }
}

fn solve_square(a: &[&[Rat]], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = b.len();
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row = a[i].to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(p, c);
        let pivot = m[c][c].clone();
        for j in c..=n {
            m[c][j] = &m[c][j] / &pivot;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in c..=n {
                    let upd = &m[r][j] - &(&f * &m[c][j]);
                    m[r][j] = upd;
                }
            }
        }
    }
    Some((0..n).map(|i| m[i][n].clone()).collect())
}
