//! Two-phase primal simplex over exact rationals with Bland's rule.
//!
//! Free variables are split `x = xp - xn`, `>=` rows get a surplus column,
//! and every row gets an artificial column so phase 1 starts from the
//! identity basis. The artificial block doubles as an explicit basis inverse,
//! which is where the dual values (Farkas multipliers and implication
//! certificates) are read off.

use crate::error::{Error, Result};
use crate::polytope::{LinIneqSystem, Relation};
use crate::rational::Rat;

pub(crate) enum RawOutcome {
    Optimal {
        value: Rat,
        witness: Vec<Rat>,
        /// Dual multipliers per original row: sum mu_i a_i = cost,
        /// sum mu_i b_i = value, mu >= 0 on `>=` rows.
        dual: Vec<Rat>,
    },
    Unbounded {
        point: Vec<Rat>,
        ray: Vec<Rat>,
    },
    Infeasible {
        /// Farkas multipliers per original row.
        multipliers: Vec<Rat>,
    },
}

struct Tableau {
    /// rows[i] has ncols entries plus the rhs cell.
    rows: Vec<Vec<Rat>>,
    obj: Vec<Rat>,
    basis: Vec<usize>,
    ncols: usize,
    nvars: usize,
    nge: usize,
    art0: usize,
    flips: Vec<bool>,
    /// Per structural column: the x-variable index and sign, or None (surplus).
    col_var: Vec<Option<(usize, bool)>>,
}

/// Minimize `cost . x` subject to the system; `x` free.
pub(crate) fn solve_min(sys: &LinIneqSystem, cost: &[Rat]) -> Result<RawOutcome> {
    let n = sys.num_vars();
    let m = sys.constraints.len();
    let nge = sys
        .constraints
        .iter()
        .filter(|c| c.relation == Relation::Ge)
        .count();
    let nstruct = 2 * n + nge;
    let ncols = nstruct + m;
    let art0 = nstruct;

    let mut col_var: Vec<Option<(usize, bool)>> = Vec::with_capacity(nstruct);
    for j in 0..n {
        col_var.push(Some((j, true)));
    }
    for j in 0..n {
        col_var.push(Some((j, false)));
    }
    for _ in 0..nge {
        col_var.push(None);
    }

    let mut rows = Vec::with_capacity(m);
    let mut flips = vec![false; m];
    let mut ge_seen = 0;
    for (i, c) in sys.constraints.iter().enumerate() {
        let mut row = vec![Rat::zero(); ncols + 1];
        for (j, a) in c.coeffs.iter().enumerate() {
            row[j] = a.clone();
            row[n + j] = -a;
        }
        if c.relation == Relation::Ge {
            row[2 * n + ge_seen] = Rat::int(-1);
            ge_seen += 1;
        }
        row[ncols] = c.rhs.clone();
        if row[ncols].is_negative() {
            flips[i] = true;
            for cell in row.iter_mut() {
                *cell = -&*cell;
            }
        }
        row[art0 + i] = Rat::one();
        rows.push(row);
    }

    let mut t = Tableau {
        rows,
        obj: vec![Rat::zero(); ncols + 1],
        basis: (0..m).map(|i| art0 + i).collect(),
        ncols,
        nvars: n,
        nge,
        art0,
        flips,
        col_var,
    };

    // Phase 1: minimize the artificial sum.
    let phase1_cost = |col: usize| -> Rat {
        if col >= art0 {
            Rat::one()
        } else {
            Rat::zero()
        }
    };
    t.rebuild_objective(&phase1_cost);
    t.pivot_to_optimal(true)?;
    let infeas = -t.obj[t.ncols].clone();
    if infeas.is_positive() {
        let mut multipliers = Vec::with_capacity(m);
        for i in 0..m {
            // reduced cost of artificial i is 1 - y_i
            let y = Rat::one() - t.obj[art0 + i].clone();
            multipliers.push(if t.flips[i] { -y } else { y });
        }
        return Ok(RawOutcome::Infeasible { multipliers });
    }
    t.drive_out_artificials();

    // Phase 2.
    let phase2_cost = {
        let cost = cost.to_vec();
        let col_var = t.col_var.clone();
        move |col: usize| -> Rat {
            match col_var.get(col).and_then(|v| *v) {
                Some((j, true)) => cost[j].clone(),
                Some((j, false)) => -&cost[j],
                None => Rat::zero(),
            }
        }
    };
    t.rebuild_objective(&phase2_cost);
    if let Some(enter) = t.pivot_to_optimal(false)? {
        // unbounded: assemble the improving ray in x-space
        let point = t.x_values();
        let mut ray_z = vec![Rat::zero(); t.ncols];
        ray_z[enter] = Rat::one();
        for (r, &b) in t.basis.iter().enumerate() {
            ray_z[b] = -&t.rows[r][enter];
        }
        let mut ray = vec![Rat::zero(); n];
        for (col, cv) in t.col_var.iter().enumerate() {
            if let Some((j, pos)) = cv {
                if *pos {
                    ray[*j] += &ray_z[col];
                } else {
                    ray[*j] -= &ray_z[col];
                }
            }
        }
        return Ok(RawOutcome::Unbounded { point, ray });
    }

    let witness = t.x_values();
    let value = -t.obj[t.ncols].clone();
    let mut dual = Vec::with_capacity(m);
    for i in 0..m {
        // reduced cost of artificial i is 0 - y_i
        let y = -t.obj[art0 + i].clone();
        dual.push(if t.flips[i] { -y } else { y });
    }
    Ok(RawOutcome::Optimal {
        value,
        witness,
        dual,
    })
}

impl Tableau {
    /// After a zero-value phase 1, pivot every basic artificial (necessarily
    /// at level 0) onto a structural column of its row, so phase-2 pivots
    /// cannot re-inflate it. A row with no structural entry is a redundant
    /// combination of the others; its artificial stays basic at 0 and the
    /// all-zero row is inert thereafter.
    fn drive_out_artificials(&mut self) {
        for r in 0..self.rows.len() {
            if self.basis[r] < self.art0 {
                continue;
            }
            debug_assert!(self.rows[r][self.ncols].is_zero());
            if let Some(c) = (0..self.art0).find(|&j| !self.rows[r][j].is_zero()) {
                self.pivot(r, c);
            }
        }
    }

    fn rebuild_objective(&mut self, cost: &dyn Fn(usize) -> Rat) {
        let ncols = self.ncols;
        let mut obj = vec![Rat::zero(); ncols + 1];
        for (j, cell) in obj.iter_mut().enumerate().take(ncols) {
            *cell = cost(j);
        }
        for (r, &b) in self.basis.iter().enumerate() {
            let cb = cost(b);
            if cb.is_zero() {
                continue;
            }
            for j in 0..=ncols {
                let upd = &obj[j] - &(&cb * &self.rows[r][j]);
                obj[j] = upd;
            }
        }
        self.obj = obj;
    }

    /// Bland pivoting until optimal. In phase 2 (`phase1 == false`) artificial
    /// columns never enter. Returns `Some(entering_col)` if unbounded.
    fn pivot_to_optimal(&mut self, phase1: bool) -> Result<Option<usize>> {
        loop {
            let limit = if phase1 { self.ncols } else { self.art0 };
            let Some(enter) = (0..limit).find(|&j| self.obj[j].is_negative()) else {
                return Ok(None);
            };
            let mut leave: Option<(usize, Rat)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rows[r][self.ncols] / a;
                match &leave {
                    None => leave = Some((r, ratio)),
                    Some((lr, lratio)) => {
                        if ratio < *lratio
                            || (ratio == *lratio && self.basis[r] < self.basis[*lr])
                        {
                            leave = Some((r, ratio));
                        }
                    }
                }
            }
            let Some((leave, _)) = leave else {
                if phase1 {
                    return Err(Error::Internal("phase-1 objective unbounded".into()));
                }
                return Ok(Some(enter));
            };
            self.pivot(leave, enter);
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let pivot = self.rows[r][c].clone();
        for cell in self.rows[r].iter_mut() {
            *cell = &*cell / &pivot;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (cell, p) in row.iter_mut().zip(&pivot_row) {
                *cell = &*cell - &(&f * p);
            }
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for (cell, p) in self.obj.iter_mut().zip(&pivot_row) {
                *cell = &*cell - &(&f * p);
            }
        }
        self.basis[r] = c;
    }

    fn x_values(&self) -> Vec<Rat> {
        let mut x = vec![Rat::zero(); self.nvars];
        for (r, &b) in self.basis.iter().enumerate() {
            if let Some(Some((j, pos))) = self.col_var.get(b) {
                let v = self.rows[r][self.ncols].clone();
                if *pos {
                    x[*j] += &v;
                } else {
                    x[*j] -= &v;
                }
            }
        }
        x
    }
}

// keep the unused-field warning away; nge documents the layout
impl Tableau {
    #[allow(dead_code)]
    fn surplus_cols(&self) -> usize {
        self.nge
    }
}
