//! Shared test support: the exhaustive-ordering oracle for blow-up programs.

use dp1_lct::lct::{lct_germ, lct_snc, run_program, BlowupProgram};
use dp1_lct::rational::Rat;

/// All orderings of a program's steps compatible with its dependency order,
/// with step references renamed accordingly.
pub fn reorderings(prog: &BlowupProgram) -> Vec<BlowupProgram> {
    let deps = prog.dependencies();
    let n = prog.steps.len();

    fn extend(n: usize, deps: &[Vec<usize>], order: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if order.len() == n {
            out.push(order.clone());
            return;
        }
        for cand in 0..n {
            if order.contains(&cand) {
                continue;
            }
            if deps[cand].iter().all(|d| order.contains(d)) {
                order.push(cand);
                extend(n, deps, order, out);
                order.pop();
            }
        }
    }

    let mut orders = Vec::new();
    extend(n, &deps, &mut Vec::new(), &mut orders);
    orders
        .into_iter()
        .map(|ord| {
            let mut pos = vec![0usize; n];
            for (new_idx, &old_idx) in ord.iter().enumerate() {
                pos[old_idx] = new_idx;
            }
            let steps = ord
                .iter()
                .map(|&old_idx| {
                    let mut step = prog.steps[old_idx].clone();
                    for name in step.exceptionals.iter_mut() {
                        if let Some(stripped) = name.strip_prefix('F') {
                            if let Ok(j) = stripped.parse::<usize>() {
                                *name = format!("F{}", pos[j - 1] + 1);
                            }
                        }
                    }
                    step
                })
                .collect();
            BlowupProgram { steps }
        })
        .collect()
}

/// Order-independence oracle: every valid ordering of the center tree gives
/// the same threshold and the same multiset of (coefficient, discrepancy).
pub fn assert_order_independent(branches: &[(String, Rat)], prog: &BlowupProgram) {
    let reference = lct_germ(branches, prog).unwrap();
    let mut ref_table: Vec<(Rat, Rat)> = run_program(branches, prog)
        .unwrap()
        .components
        .iter()
        .filter(|c| c.id.starts_with('F'))
        .map(|c| (c.coefficient.clone(), c.discrepancy()))
        .collect();
    ref_table.sort();
    let variants = reorderings(prog);
    assert!(!variants.is_empty());
    for variant in &variants {
        let arr = run_program(branches, variant).unwrap();
        let mut table: Vec<(Rat, Rat)> = arr
            .components
            .iter()
            .filter(|c| c.id.starts_with('F'))
            .map(|c| (c.coefficient.clone(), c.discrepancy()))
            .collect();
        table.sort();
        assert_eq!(table, ref_table);
        assert_eq!(lct_snc(&arr).unwrap().value(), reference.value());
    }
}
