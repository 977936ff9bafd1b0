//! Bundled worked examples. Each example rebuilds its objects from
//! scratch and diffs them against golden values frozen in this module, so
//! a fully passing report certifies the whole pipeline on that input.

use std::fmt::Debug;

use crate::dynamics::{
    evacuate, promote, promote_inverse, promote_steps, promote_with_flow, promotion_rank,
    GrowthDiagram,
};
use crate::flag::{d_rows, rot_flag, skew_of, to_flag};
use crate::frieze::jdt_frieze;
use crate::noncrossing::to_ncpartition;
use crate::render::{
    render_frieze, render_growth, render_height_growth, render_skew, render_tableau,
};
use crate::shape::{BoxCoord, PartitionShape};
use crate::tableau::{IncreasingTableau, ShapeChain};
use crate::words::{height_growth_diagram, height_word, to_steps};

pub const EXAMPLE_IDS: &[&str] = &[
    "fig2", "fig3", "fig4", "fig5", "fig7", "ex-4row", "ex-3row", "ex-frieze",
];

/// One recomputed fact diffed against its frozen value.
#[derive(Clone, Debug)]
pub struct ExampleCheck {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

/// A rendered artifact plus every check run for one example id.
#[derive(Clone, Debug)]
pub struct ExampleReport {
    pub id: String,
    pub artifact: String,
    pub checks: Vec<ExampleCheck>,
}

impl ExampleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn tab(rows: &[&[u32]]) -> IncreasingTableau {
    IncreasingTableau::new(rows.iter().map(|r| r.to_vec()).collect())
        .expect("fixture tableau is valid")
}

fn chain(shapes: &[&[usize]]) -> ShapeChain {
    ShapeChain::new(
        shapes
            .iter()
            .map(|p| PartitionShape::new(p.to_vec()).expect("fixture shape is a partition"))
            .collect(),
    )
    .expect("fixture chain is valid")
}

/// The input tableau behind an example id. The two diagram ids share the
/// tableau their diagrams are built from.
pub fn example_tableau(id: &str) -> Option<IncreasingTableau> {
    let t = match id {
        "fig2" => tab(&[&[1, 2, 4], &[3, 4, 5]]),
        "fig3" | "fig4" | "fig5" => tab(&[&[1, 2, 4, 5, 6], &[2, 3, 6, 7, 8]]),
        "fig7" => tab(&[&[1, 2, 3, 4, 7], &[4, 5, 6, 7, 8]]),
        "ex-4row" => tab(&[
            &[1, 2, 4, 7],
            &[3, 5, 6, 8],
            &[5, 7, 8, 10],
            &[7, 9, 10, 11],
        ]),
        "ex-3row" => tab(&[&[1, 2, 4], &[3, 4, 6], &[5, 7, 8]]),
        "ex-frieze" => tab(&[&[1, 2, 3, 5], &[4, 5, 6, 7]]),
        _ => return None,
    };
    Some(t)
}

fn push_eq<T: PartialEq + Debug>(checks: &mut Vec<ExampleCheck>, label: &str, got: &T, want: &T) {
    let passed = got == want;
    let detail = if passed {
        format!("{got:?}")
    } else {
        format!("got {got:?}, want {want:?}")
    };
    checks.push(ExampleCheck {
        label: label.to_string(),
        passed,
        detail,
    });
}

/// Recomputes one bundled example and diffs it against its golden data.
/// Unknown ids give `None`.
pub fn verify_example(id: &str) -> Option<ExampleReport> {
    let (artifact, checks) = match id {
        "fig2" => report_fig2(),
        "fig3" => report_fig3(),
        "fig4" => report_fig4(),
        "fig5" => report_fig5(),
        "fig7" => report_fig7(),
        "ex-4row" => report_4row(),
        "ex-3row" => report_3row(),
        "ex-frieze" => report_frieze(),
        _ => return None,
    };
    Some(ExampleReport {
        id: id.to_string(),
        artifact,
        checks,
    })
}

fn report_fig2() -> (String, Vec<ExampleCheck>) {
    let t = example_tableau("fig2").unwrap();
    let want = tab(&[&[1, 3, 4], &[2, 4, 5]]);
    let want_flow: Vec<BoxCoord> = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2)]
        .iter()
        .map(|&(r, c)| BoxCoord::new(r, c))
        .collect();
    let (p, flow) = promote_with_flow(&t);
    let mut checks = Vec::new();
    push_eq(&mut checks, "promoted image", &p, &want);
    push_eq(&mut checks, "flow path", &flow, &want_flow);
    push_eq(&mut checks, "inverse recovers input", &promote_inverse(&p), &Ok(t.clone()));
    let artifact = format!(
        "input:\n{}\n\npromoted:\n{}",
        render_tableau(&t),
        render_tableau(&p)
    );
    (artifact, checks)
}

fn report_fig3() -> (String, Vec<ExampleCheck>) {
    let t = example_tableau("fig3").unwrap();
    let mut checks = Vec::new();
    push_eq(&mut checks, "repeated values", &t.repeats(), &2);
    let steps = to_steps(&t).unwrap();
    push_eq(&mut checks, "lattice path", &steps.to_string(), &"UHDUUHDD".to_string());
    let word = height_word(&t).unwrap();
    push_eq(
        &mut checks,
        "height word",
        &word.as_slice().to_vec(),
        &vec![0, 1, 1, 0, 1, 2, 2, 1, 0],
    );
    let flag = to_flag(&t).unwrap();
    let want_flag = tab(&[&[1, 4, 5], &[2, 6, 8], &[3], &[7]]);
    push_eq(&mut checks, "flagged image", &flag, &want_flag);
    push_eq(&mut checks, "major index", &t.maj(), &Ok(14));
    push_eq(
        &mut checks,
        "flag major index",
        &flag.standard_major_index(),
        &Ok(14),
    );
    let pi = to_ncpartition(&t).unwrap();
    push_eq(
        &mut checks,
        "noncrossing blocks",
        &pi.to_string(),
        &"{1,2,3}{4,8}{5,6,7}".to_string(),
    );
    push_eq(
        &mut checks,
        "promotion rotates the blocks",
        &to_ncpartition(&promote(&t)).unwrap(),
        &pi.rotate(),
    );
    let want_evac = tab(&[&[1, 2, 3, 6, 7], &[3, 4, 5, 7, 8]]);
    push_eq(&mut checks, "evacuation", &evacuate(&t), &want_evac);
    push_eq(&mut checks, "evacuation is the half turn", &t.rot(), &Ok(want_evac));
    push_eq(&mut checks, "promotion rank", &promotion_rank(&t), &Ok(4));
    let artifact = format!(
        "tableau:\n{}\n\nflag:\n{}\n\npath: {}\nheight word: {}\nblocks: {}",
        render_tableau(&t),
        render_tableau(&flag),
        steps,
        word,
        pi
    );
    (artifact, checks)
}

fn fig4_rows() -> Vec<ShapeChain> {
    let r0 = chain(&[
        &[],
        &[1],
        &[2, 1],
        &[2, 2],
        &[3, 2],
        &[4, 2],
        &[5, 3],
        &[5, 4],
        &[5, 5],
    ]);
    let r1 = chain(&[
        &[],
        &[1],
        &[2, 1],
        &[3, 1],
        &[4, 1],
        &[5, 2],
        &[5, 3],
        &[5, 4],
        &[5, 5],
    ]);
    let r2 = chain(&[
        &[],
        &[1],
        &[2],
        &[3],
        &[4, 1],
        &[4, 2],
        &[4, 3],
        &[5, 4],
        &[5, 5],
    ]);
    let r3 = chain(&[
        &[],
        &[1],
        &[2],
        &[3, 1],
        &[3, 2],
        &[3, 3],
        &[4, 3],
        &[5, 4],
        &[5, 5],
    ]);
    vec![
        r0.clone(),
        r1.clone(),
        r2.clone(),
        r3.clone(),
        r0.clone(),
        r1,
        r2,
        r3,
        r0,
    ]
}

fn report_fig4() -> (String, Vec<ExampleCheck>) {
    let t = example_tableau("fig4").unwrap();
    let g = GrowthDiagram::new(&t);
    let mut checks = Vec::new();
    push_eq(&mut checks, "chain rows", &g.rows().to_vec(), &fig4_rows());
    push_eq(
        &mut checks,
        "shape in row 4, column 7",
        &g.shape_at(4, 7),
        &Some(&PartitionShape::new(vec![2, 2]).unwrap()),
    );
    push_eq(
        &mut checks,
        "central column reads the evacuation",
        &g.evacuation_chain(),
        &evacuate(&t).chain(),
    );
    (render_growth(&g), checks)
}

fn fig5_rows() -> Vec<Vec<u32>> {
    vec![
        vec![0, 1, 1, 0, 1, 2, 2, 1, 0],
        vec![0, 1, 1, 2, 3, 3, 2, 1],
        vec![0, 1, 2, 3, 3, 2, 1],
        vec![0, 1, 2, 2, 1, 0],
        vec![0, 1, 1, 0, 1],
        vec![0, 1, 1, 2],
        vec![0, 1, 2],
        vec![0, 1],
        vec![0],
    ]
}

fn report_fig5() -> (String, Vec<ExampleCheck>) {
    let t = example_tableau("fig5").unwrap();
    let h = height_growth_diagram(&t).unwrap();
    let mut checks = Vec::new();
    push_eq(&mut checks, "word rows", &h.rows().to_vec(), &fig5_rows());
    push_eq(
        &mut checks,
        "first row equals last column",
        &h.last_column(),
        &h.rows()[0].clone(),
    );
    push_eq(
        &mut checks,
        "reversed last column is the evacuation word",
        &h.evacuation_word(),
        &height_word(&evacuate(&t)).unwrap(),
    );
    (render_height_growth(&h), checks)
}

fn report_fig7() -> (String, Vec<ExampleCheck>) {
    let t = example_tableau("fig7").unwrap();
    let mut checks = Vec::new();
    let flag = to_flag(&t).unwrap();
    let want_flag = tab(&[&[1, 2, 3], &[4, 6, 7], &[5], &[8]]);
    push_eq(&mut checks, "flagged image", &flag, &want_flag);
    push_eq(
        &mut checks,
        "auxiliary rows",
        &d_rows(&t).unwrap(),
        &[vec![1, 2, 7], vec![5, 6, 8]],
    );
    let skew = skew_of(&t).unwrap();
    push_eq(&mut checks, "overhang column", &skew.hat().to_vec(), &vec![3, 4]);
    push_eq(
        &mut checks,
        "reading word",
        &skew.reading_word(),
        &vec![5, 6, 8, 1, 2, 7, 4, 3],
    );
    push_eq(
        &mut checks,
        "rectification straightens to the flag",
        &skew.rectify(),
        &flag,
    );
    let rot = t.rot().unwrap();
    push_eq(
        &mut checks,
        "half turn lands in skew form",
        &rot_flag(&flag),
        &Ok(skew_of(&rot).unwrap()),
    );
    let artifact = format!(
        "tableau:\n{}\n\nflag:\n{}\n\nskew companion:\n{}",
        render_tableau(&t),
        render_tableau(&flag),
        render_skew(&skew)
    );
    (artifact, checks)
}

fn report_4row() -> (String, Vec<ExampleCheck>) {
    let t = example_tableau("ex-4row").unwrap();
    let want = tab(&[
        &[1, 2, 4, 7],
        &[3, 4, 6, 8],
        &[5, 6, 8, 10],
        &[7, 9, 10, 11],
    ]);
    let p11 = promote_steps(&t, 11);
    let mut checks = Vec::new();
    push_eq(&mut checks, "eleventh promotion", &p11, &want);
    push_eq(&mut checks, "promotion rank", &promotion_rank(&t), &Ok(33));
    let artifact = format!(
        "input:\n{}\n\neleventh promotion:\n{}\n\npromotion rank: 33",
        render_tableau(&t),
        render_tableau(&p11)
    );
    (artifact, checks)
}

fn report_3row() -> (String, Vec<ExampleCheck>) {
    let t = example_tableau("ex-3row").unwrap();
    let rot = t.rot().unwrap();
    let mut checks = Vec::new();
    push_eq(&mut checks, "evacuation fixes the tableau", &evacuate(&t), &t);
    push_eq(
        &mut checks,
        "half turn",
        &rot,
        &tab(&[&[1, 2, 4], &[3, 5, 6], &[5, 7, 8]]),
    );
    push_eq(&mut checks, "half turn differs", &(rot == t), &false);
    push_eq(&mut checks, "promotion rank", &promotion_rank(&t), &Ok(2));
    let artifact = format!(
        "input:\n{}\n\nhalf turn:\n{}\n\npromotion rank: 2",
        render_tableau(&t),
        render_tableau(&rot)
    );
    (artifact, checks)
}

fn frieze_rows() -> Vec<Vec<i64>> {
    vec![
        vec![0, 1, 2, 1, 1, 0],
        vec![0, 1, 0, 0, -1, 0],
        vec![0, -1, 0, 0, 1, 0],
        vec![0, 1, 1, 2, 1, 0],
        vec![0, 0, 1, 0, -1, 0],
        vec![0, 1, 0, 0, 1, 0],
        vec![0, -1, 0, 1, 0, 0],
        vec![0, 1, 2, 1, 1, 0],
    ]
}

fn report_frieze() -> (String, Vec<ExampleCheck>) {
    let t = example_tableau("ex-frieze").unwrap();
    let mut checks = Vec::new();
    push_eq(
        &mut checks,
        "height word",
        &height_word(&t).unwrap().as_slice().to_vec(),
        &vec![0, 1, 2, 3, 2, 2, 1, 0],
    );
    push_eq(
        &mut checks,
        "promoted image",
        &promote(&t),
        &tab(&[&[1, 2, 4, 6], &[3, 4, 5, 7]]),
    );
    let fr = jdt_frieze(&t).unwrap();
    push_eq(&mut checks, "frieze rows", &fr.rows().to_vec(), &frieze_rows());
    push_eq(&mut checks, "frieze rule holds", &fr.satisfies_rule(), &true);
    (render_frieze(&fr), checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_example_passes() {
        for &id in EXAMPLE_IDS {
            let report = verify_example(id).unwrap();
            for c in &report.checks {
                assert!(c.passed, "{id}: {} ({})", c.label, c.detail);
            }
            assert!(report.passed());
            assert!(!report.artifact.is_empty());
        }
    }

    #[test]
    fn ids_are_exhaustive() {
        assert!(verify_example("fig1").is_none());
        assert!(example_tableau("fig1").is_none());
        for &id in EXAMPLE_IDS {
            assert!(example_tableau(id).is_some());
        }
    }
}
