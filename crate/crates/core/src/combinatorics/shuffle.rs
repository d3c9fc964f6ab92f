//! Overlapping shuffles of two dotted compositions.
//!
//! A shuffle is a lattice path from `(0,0)` to `(ℓ(α),ℓ(β))`. A horizontal
//! step emits the next part of `α`, a vertical step the next part of `β`, and
//! a diagonal step their sum, dotted when either summand is. Diagonal steps
//! through a cell where both parts are dotted are not allowed. The sign is
//! `(-1)` to the number of dotted cells below the path, that is, pairs of
//! dotted parts where the `β` part is emitted strictly before the `α` part.

use super::{DottedComposition, Part};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Horizontal,
    Vertical,
    Diagonal,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShufflePath {
    /// `ℓ(α)`, the horizontal extent.
    pub width: usize,
    /// `ℓ(β)`, the vertical extent.
    pub height: usize,
    pub steps: Vec<Step>,
}

impl ShufflePath {
    /// Cells `(p,q)` with `β_p` and `α_q` both dotted (zero-based).
    pub fn dotted_cells(alpha: &DottedComposition, beta: &DottedComposition) -> Vec<(usize, usize)> {
        let mut cells = Vec::new();
        for (p, b) in beta.parts().iter().enumerate() {
            for (q, a) in alpha.parts().iter().enumerate() {
                if a.dotted && b.dotted {
                    cells.push((p, q));
                }
            }
        }
        cells
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shuffle {
    pub path: ShufflePath,
    pub composition: DottedComposition,
    /// True when the sign is `-1`.
    pub negative: bool,
}

/// All `(α,β)` overlapping shuffles, in lexicographic order of the step
/// sequence with `H < V < D`.
pub fn overlapping_shuffles(alpha: &DottedComposition, beta: &DottedComposition) -> Vec<Shuffle> {
    let a = alpha.parts();
    let b = beta.parts();
    // dotted_from[q] = number of dotted parts of α at positions ≥ q
    let mut dotted_from = vec![0usize; a.len() + 1];
    for q in (0..a.len()).rev() {
        dotted_from[q] = dotted_from[q + 1] + a[q].dotted as usize;
    }
    let mut out = Vec::new();
    let mut steps = Vec::new();
    let mut parts = Vec::new();
    walk(a, b, &dotted_from, 0, 0, 0, &mut steps, &mut parts, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn walk(
    a: &[Part],
    b: &[Part],
    dotted_from: &[usize],
    i: usize,
    j: usize,
    below: usize,
    steps: &mut Vec<Step>,
    parts: &mut Vec<Part>,
    out: &mut Vec<Shuffle>,
) {
    if i == a.len() && j == b.len() {
        out.push(Shuffle {
            path: ShufflePath {
                width: a.len(),
                height: b.len(),
                steps: steps.clone(),
            },
            composition: DottedComposition::from_parts_unchecked(parts.clone()),
            negative: below % 2 == 1,
        });
        return;
    }
    if i < a.len() {
        steps.push(Step::Horizontal);
        parts.push(a[i]);
        walk(a, b, dotted_from, i + 1, j, below, steps, parts, out);
        parts.pop();
        steps.pop();
    }
    if j < b.len() {
        let extra = if b[j].dotted { dotted_from[i] } else { 0 };
        steps.push(Step::Vertical);
        parts.push(b[j]);
        walk(a, b, dotted_from, i, j + 1, below + extra, steps, parts, out);
        parts.pop();
        steps.pop();
    }
    if i < a.len() && j < b.len() && !(a[i].dotted && b[j].dotted) {
        let extra = if b[j].dotted { dotted_from[i + 1] } else { 0 };
        steps.push(Step::Diagonal);
        parts.push(Part {
            value: a[i].value + b[j].value,
            dotted: a[i].dotted || b[j].dotted,
        });
        walk(a, b, dotted_from, i + 1, j + 1, below + extra, steps, parts, out);
        parts.pop();
        steps.pop();
    }
}
