//! Backtracking over finite windows of the group.
//!
//! A window is a finite set of cells with some of them preset. Every
//! translate `g·f` of a forbidden pattern that fits in the window becomes a
//! constraint, attached to the last free cell (in canonical order) that it
//! touches. Depth-first search assigns free cells in canonical order and
//! symbols in alphabet order, so the first surviving assignment is the
//! lexicographically least extension. When nothing survives, the explored
//! tree is recorded in preorder and can be replayed without search.

use std::collections::HashMap;

use crate::group::{GroupCtx, GroupElement};
use crate::pattern::{Alphabet, Pattern, Symbol};

/// One node of a refutation tree in preorder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RefutationNode {
    /// Branch on every symbol of the next free cell.
    Split,
    /// The current partial assignment contains `translation · forbidden[index]`.
    Dead {
        forbidden: usize,
        translation: GroupElement,
    },
}

struct Constraint {
    forbidden: usize,
    translation: GroupElement,
    free_cells: Vec<(usize, Symbol)>,
}

pub(crate) struct SearchProblem {
    cells: Vec<GroupElement>,
    preset: Vec<Option<Symbol>>,
    order: Vec<usize>,
    constraints: Vec<Constraint>,
    root: Vec<usize>,
    by_depth: Vec<Vec<usize>>,
    radix: u16,
}

pub(crate) enum SearchOutcome {
    Survivor(Pattern),
    Refuted(Vec<RefutationNode>),
}

/// Translates `g` with `g·f ⊆ cells`, found by anchoring the first cell of `f`.
pub(crate) fn fitting_translations(
    ctx: &GroupCtx,
    f: &Pattern,
    cells: &[GroupElement],
    index: &HashMap<GroupElement, usize>,
) -> Vec<(GroupElement, Vec<(usize, Symbol)>)> {
    let Some((anchor, _)) = f.iter().next() else {
        return vec![(ctx.identity(), Vec::new())];
    };
    let anchor_inv = ctx.inv(anchor);
    let mut out = Vec::new();
    for c in cells {
        let g = ctx.mul(c, &anchor_inv);
        let placed: Option<Vec<(usize, Symbol)>> = f
            .iter()
            .map(|(h, s)| index.get(&ctx.mul(&g, h)).map(|&i| (i, s)))
            .collect();
        if let Some(placed) = placed {
            out.push((g, placed));
        }
    }
    out
}

impl SearchProblem {
    /// `cells` must be sorted canonically and contain the support of `preset`.
    pub(crate) fn new(
        ctx: &GroupCtx,
        alphabet: &Alphabet,
        cells: Vec<GroupElement>,
        preset: &Pattern,
        forbidden: &[Pattern],
    ) -> Self {
        let index: HashMap<GroupElement, usize> =
            cells.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
        let mut pre = vec![None; cells.len()];
        for (g, s) in preset.iter() {
            pre[index[g]] = Some(s);
        }
        let order: Vec<usize> = (0..cells.len()).filter(|&i| pre[i].is_none()).collect();
        let mut depth_of = vec![usize::MAX; cells.len()];
        for (d, &i) in order.iter().enumerate() {
            depth_of[i] = d;
        }

        let mut constraints = Vec::new();
        let mut root = Vec::new();
        let mut by_depth = vec![Vec::new(); order.len()];
        for (fi, f) in forbidden.iter().enumerate() {
            for (g, placed) in fitting_translations(ctx, f, &cells, &index) {
                let mut free_cells = Vec::new();
                let mut blocked = false;
                for (i, s) in placed {
                    match pre[i] {
                        Some(p) if p != s => {
                            blocked = true;
                            break;
                        }
                        Some(_) => {}
                        None => free_cells.push((i, s)),
                    }
                }
                if blocked {
                    continue;
                }
                let id = constraints.len();
                match free_cells.iter().map(|(i, _)| depth_of[*i]).max() {
                    None => root.push(id),
                    Some(d) => by_depth[d].push(id),
                }
                constraints.push(Constraint {
                    forbidden: fi,
                    translation: g,
                    free_cells,
                });
            }
        }
        SearchProblem {
            cells,
            preset: pre,
            order,
            constraints,
            root,
            by_depth,
            radix: alphabet.len() as u16,
        }
    }

    fn first_violated(&self, ids: &[usize], assign: &[Option<Symbol>]) -> Option<usize> {
        ids.iter().copied().find(|&id| {
            self.constraints[id]
                .free_cells
                .iter()
                .all(|&(i, s)| assign[i] == Some(s))
        })
    }

    fn to_pattern(&self, assign: &[Option<Symbol>]) -> Pattern {
        self.cells
            .iter()
            .zip(assign)
            .map(|(g, s)| (g.clone(), s.expect("complete assignment")))
            .collect()
    }

    fn dead(&self, id: usize) -> RefutationNode {
        let c = &self.constraints[id];
        RefutationNode::Dead {
            forbidden: c.forbidden,
            translation: c.translation.clone(),
        }
    }

    /// First surviving completion, or the full refutation tree.
    pub(crate) fn first_survivor(&self) -> SearchOutcome {
        let mut assign = self.preset.clone();
        let mut tree = Vec::new();
        if self.dfs(0, &mut assign, &mut tree) {
            SearchOutcome::Survivor(self.to_pattern(&assign))
        } else {
            SearchOutcome::Refuted(tree)
        }
    }

    fn dfs(&self, depth: usize, assign: &mut [Option<Symbol>], tree: &mut Vec<RefutationNode>) -> bool {
        let triggered = if depth == 0 {
            &self.root
        } else {
            &self.by_depth[depth - 1]
        };
        if let Some(id) = self.first_violated(triggered, assign) {
            tree.push(self.dead(id));
            return false;
        }
        if depth == self.order.len() {
            return true;
        }
        tree.push(RefutationNode::Split);
        let cell = self.order[depth];
        for s in 0..self.radix {
            assign[cell] = Some(Symbol(s));
            if self.dfs(depth + 1, assign, tree) {
                return true;
            }
        }
        assign[cell] = None;
        false
    }

    /// Every surviving completion, in lexicographic order.
    pub(crate) fn all_survivors(&self) -> Vec<Pattern> {
        let mut out = Vec::new();
        let mut assign = self.preset.clone();
        self.collect(0, &mut assign, &mut out);
        out
    }

    fn collect(&self, depth: usize, assign: &mut [Option<Symbol>], out: &mut Vec<Pattern>) {
        let triggered = if depth == 0 {
            &self.root
        } else {
            &self.by_depth[depth - 1]
        };
        if self.first_violated(triggered, assign).is_some() {
            return;
        }
        if depth == self.order.len() {
            out.push(self.to_pattern(assign));
            return;
        }
        let cell = self.order[depth];
        for s in 0..self.radix {
            assign[cell] = Some(Symbol(s));
            self.collect(depth + 1, assign, out);
        }
        assign[cell] = None;
    }
}

/// Walks a refutation tree against a window without any search. Returns
/// false on any mismatch: a dead node whose forbidden translate is not fully
/// assigned or does not match, a split with no free cell left, or leftover or
/// missing nodes.
pub(crate) fn replay_refutation(
    ctx: &GroupCtx,
    alphabet: &Alphabet,
    cells: &[GroupElement],
    preset: &Pattern,
    forbidden: &[Pattern],
    nodes: &[RefutationNode],
) -> bool {
    let index: HashMap<&GroupElement, usize> = cells.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut assign: Vec<Option<Symbol>> = vec![None; cells.len()];
    for (g, s) in preset.iter() {
        match index.get(g) {
            Some(&i) => assign[i] = Some(s),
            None => return false,
        }
    }
    let order: Vec<usize> = (0..cells.len()).filter(|&i| assign[i].is_none()).collect();

    struct Walker<'a> {
        ctx: &'a GroupCtx,
        index: &'a HashMap<&'a GroupElement, usize>,
        forbidden: &'a [Pattern],
        nodes: &'a [RefutationNode],
        order: &'a [usize],
        radix: u16,
        pos: usize,
    }

    impl Walker<'_> {
        fn walk(&mut self, depth: usize, assign: &mut [Option<Symbol>]) -> bool {
            let Some(node) = self.nodes.get(self.pos) else {
                return false;
            };
            self.pos += 1;
            match node {
                RefutationNode::Dead {
                    forbidden,
                    translation,
                } => {
                    let Some(f) = self.forbidden.get(*forbidden) else {
                        return false;
                    };
                    f.iter().all(|(h, s)| {
                        self.index
                            .get(&self.ctx.mul(translation, h))
                            .is_some_and(|&i| assign[i] == Some(s))
                    })
                }
                RefutationNode::Split => {
                    let Some(&cell) = self.order.get(depth) else {
                        return false;
                    };
                    for s in 0..self.radix {
                        assign[cell] = Some(Symbol(s));
                        if !self.walk(depth + 1, assign) {
                            return false;
                        }
                    }
                    assign[cell] = None;
                    true
                }
            }
        }
    }

    let mut walker = Walker {
        ctx,
        index: &index,
        forbidden,
        nodes,
        order: &order,
        radix: alphabet.len() as u16,
        pos: 0,
    };
    walker.walk(0, &mut assign) && walker.pos == nodes.len()
}
