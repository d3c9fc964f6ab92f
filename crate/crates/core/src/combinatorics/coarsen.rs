//! The strong (`≼`) and weak (`⊴`) refinement orders on dotted compositions.
//!
//! A coarsening merges consecutive blocks of parts. Under `≼` only undotted
//! parts merge; under `⊴` a block may hold at most one dotted part and is
//! dotted exactly when it holds one.

use std::collections::BTreeSet;

use super::partition::compositions;
use super::{DottedComposition, Part};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Refinement {
    Strong,
    Weak,
}

fn merge_block(block: &[Part], order: Refinement) -> Option<Part> {
    let dots = block.iter().filter(|p| p.dotted).count();
    let ok = match order {
        Refinement::Strong => block.len() == 1 || dots == 0,
        Refinement::Weak => dots <= 1,
    };
    ok.then(|| Part {
        value: block.iter().map(|p| p.value).sum(),
        dotted: dots == 1,
    })
}

/// All `γ` with `α ≼ γ` (strong) or `α ⊴ γ` (weak), including `α`.
pub fn coarsenings(alpha: &DottedComposition, order: Refinement) -> Vec<DottedComposition> {
    let parts = alpha.parts();
    if parts.is_empty() {
        return vec![alpha.clone()];
    }
    let gaps = parts.len() - 1;
    let mut out = BTreeSet::new();
    'cuts: for cuts in 0u64..1 << gaps {
        let mut merged = Vec::new();
        let mut start = 0;
        for k in 0..=gaps {
            if k == gaps || cuts >> k & 1 == 1 {
                match merge_block(&parts[start..=k], order) {
                    Some(p) => merged.push(p),
                    None => continue 'cuts,
                }
                start = k + 1;
            }
        }
        out.insert(DottedComposition::from_parts_unchecked(merged));
    }
    out.into_iter().collect()
}

pub fn strong_coarsenings(alpha: &DottedComposition) -> Vec<DottedComposition> {
    coarsenings(alpha, Refinement::Strong)
}

pub fn weak_coarsenings(alpha: &DottedComposition) -> Vec<DottedComposition> {
    coarsenings(alpha, Refinement::Weak)
}

/// The ways to split one part into a block that merges back into it.
fn splittings(part: Part, order: Refinement) -> Vec<Vec<Part>> {
    let plain = |c: Vec<usize>| c.into_iter().map(Part::plain).collect::<Vec<_>>();
    match (part.dotted, order) {
        (false, _) => compositions(part.value).into_iter().map(plain).collect(),
        (true, Refinement::Strong) => vec![vec![part]],
        (true, Refinement::Weak) => {
            let v = part.value;
            let mut out = Vec::new();
            for d in 0..=v {
                for left in 0..=v - d {
                    let right = v - d - left;
                    for l in compositions(left) {
                        for r in compositions(right) {
                            let mut block = plain(l.clone());
                            block.push(Part::dot(d));
                            block.extend(plain(r));
                            out.push(block);
                        }
                    }
                }
            }
            out
        }
    }
}

/// All `β` with `β ≼ α` (strong) or `β ⊴ α` (weak), including `α`.
pub fn refinements(alpha: &DottedComposition, order: Refinement) -> Vec<DottedComposition> {
    let mut acc: Vec<Vec<Part>> = vec![Vec::new()];
    for &part in alpha.parts() {
        let options = splittings(part, order);
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |block| {
                    let mut next = prefix.clone();
                    next.extend_from_slice(block);
                    next
                })
            })
            .collect();
    }
    let set: BTreeSet<_> = acc
        .into_iter()
        .map(DottedComposition::from_parts_unchecked)
        .collect();
    set.into_iter().collect()
}

pub fn strong_refinements(alpha: &DottedComposition) -> Vec<DottedComposition> {
    refinements(alpha, Refinement::Strong)
}

pub fn weak_refinements(alpha: &DottedComposition) -> Vec<DottedComposition> {
    refinements(alpha, Refinement::Weak)
}

/// Compositions covering `α`: one adjacent pair merged.
pub fn covers(alpha: &DottedComposition, order: Refinement) -> Vec<DottedComposition> {
    let parts = alpha.parts();
    let mut out = BTreeSet::new();
    for k in 0..parts.len().saturating_sub(1) {
        if let Some(p) = merge_block(&parts[k..k + 2], order) {
            let mut merged = parts[..k].to_vec();
            merged.push(p);
            merged.extend_from_slice(&parts[k + 2..]);
            out.insert(DottedComposition::from_parts_unchecked(merged));
        }
    }
    out.into_iter().collect()
}
