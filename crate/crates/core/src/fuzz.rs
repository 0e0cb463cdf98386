//! Seeded generators: random legal moves, random move walks, a corpus of
//! realizable colored diagrams, and raw combinatorial diagrams that skip the
//! surface certificate.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::group::{Elem, GroupTable, Sign};
use crate::heegaard::{
    apply_move, connected_sum, enumerate_colorings, lens_pq_diagram, CircleRef, ColoredDiagram, Crossing, Family,
    HeegaardDiagram, Move, Side,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MoveKind {
    Relabel,
    Reverse,
    Insert,
    Remove,
    Stabilize,
    Destabilize,
    Slide,
}

pub const ALL_MOVE_KINDS: [MoveKind; 7] = [
    MoveKind::Relabel,
    MoveKind::Reverse,
    MoveKind::Insert,
    MoveKind::Remove,
    MoveKind::Stabilize,
    MoveKind::Destabilize,
    MoveKind::Slide,
];

impl MoveKind {
    pub fn of(m: &Move) -> MoveKind {
        match m {
            Move::Relabel { .. } => MoveKind::Relabel,
            Move::ReverseCircle { .. } => MoveKind::Reverse,
            Move::TwoPointInsert { .. } => MoveKind::Insert,
            Move::TwoPointRemove { .. } => MoveKind::Remove,
            Move::Stabilize { .. } => MoveKind::Stabilize,
            Move::Destabilize { .. } => MoveKind::Destabilize,
            Move::Slide { .. } => MoveKind::Slide,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FuzzLimits {
    pub max_genus: usize,
    pub max_crossings: usize,
}

impl Default for FuzzLimits {
    fn default() -> Self {
        FuzzLimits { max_genus: 3, max_crossings: 12 }
    }
}

fn sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus }
}

fn side(b: bool) -> Side {
    if b { Side::Left } else { Side::Right }
}

fn arcs(d: &HeegaardDiagram, c: CircleRef) -> std::ops::Range<usize> {
    0..d.order(c).len()
}

/// Every move of the given kind worth trying on `d`, in a fixed order; most
/// may still be rejected by [`apply_move`].
fn candidates(d: &ColoredDiagram, kind: MoveKind, limits: FuzzLimits, rng: &mut ChaCha8Rng) -> Vec<Move> {
    let dg = &d.diagram;
    let g = dg.genus;
    let n = dg.crossings.len();
    let mut out = Vec::new();
    match kind {
        MoveKind::Relabel => {
            let mut upper_perm: Vec<usize> = (0..g).collect();
            let mut lower_perm = upper_perm.clone();
            upper_perm.shuffle(rng);
            lower_perm.shuffle(rng);
            let upper_shift = (0..g).map(|_| rng.gen_range(0..4)).collect();
            let lower_shift = (0..g).map(|_| rng.gen_range(0..4)).collect();
            let ids = dg.crossing_ids();
            let mut targets = ids.clone();
            targets.shuffle(rng);
            let id_map = ids.into_iter().zip(targets).collect();
            out.push(Move::Relabel { upper_perm, lower_perm, upper_shift, lower_shift, id_map });
        }
        MoveKind::Reverse => {
            for k in 0..g {
                out.push(Move::ReverseCircle { circle: CircleRef::Upper(k) });
                out.push(Move::ReverseCircle { circle: CircleRef::Lower(k) });
            }
        }
        MoveKind::Insert if n + 2 <= limits.max_crossings => {
            for upper in 0..g {
                for upper_arc in arcs(dg, CircleRef::Upper(upper)) {
                    for lower in 0..g {
                        for lower_arc in arcs(dg, CircleRef::Lower(lower)) {
                            for (us, ls) in [(true, true), (true, false), (false, true), (false, false)] {
                                out.push(Move::TwoPointInsert {
                                    upper,
                                    upper_arc,
                                    upper_side: side(us),
                                    lower,
                                    lower_arc,
                                    lower_side: side(ls),
                                });
                            }
                        }
                    }
                }
            }
        }
        MoveKind::Remove => {
            for lower in 0..g {
                for position in arcs(dg, CircleRef::Lower(lower)) {
                    out.push(Move::TwoPointRemove { lower, position });
                }
            }
        }
        MoveKind::Stabilize if g < limits.max_genus && n < limits.max_crossings => {
            out.push(Move::Stabilize { sign: sign(rng) });
        }
        MoveKind::Destabilize => {
            for upper in 0..g {
                for lower in 0..g {
                    if dg.upper_orders[upper].len() == 1 && dg.upper_orders[upper] == dg.lower_orders[lower] {
                        out.push(Move::Destabilize { upper, lower });
                    }
                }
            }
        }
        MoveKind::Slide => {
            for family in [Family::Upper, Family::Lower] {
                let circle = |k| match family {
                    Family::Upper => CircleRef::Upper(k),
                    Family::Lower => CircleRef::Lower(k),
                };
                for target in 0..g {
                    for source in 0..g {
                        let extra = dg.order(circle(source)).len();
                        if target == source || n + extra > limits.max_crossings {
                            continue;
                        }
                        for target_arc in arcs(dg, circle(target)) {
                            for source_arc in arcs(dg, circle(source)) {
                                for (ts, ss) in [(true, true), (true, false), (false, true), (false, false)] {
                                    out.push(Move::Slide {
                                        family,
                                        target,
                                        target_arc,
                                        target_side: side(ts),
                                        source,
                                        source_arc,
                                        source_side: side(ss),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        _ => {}
    }
    out
}

/// A uniformly chosen legal move of the given kind, with its result.
pub fn random_move(
    d: &ColoredDiagram,
    pi: &GroupTable,
    kind: MoveKind,
    limits: FuzzLimits,
    rng: &mut ChaCha8Rng,
) -> Option<(Move, ColoredDiagram)> {
    let mut cands = candidates(d, kind, limits, rng);
    cands.shuffle(rng);
    cands.into_iter().find_map(|m| apply_move(d, &m, pi).ok().map(|out| (m, out)))
}

/// `steps` legal moves; each step draws a kind uniformly and falls back to the
/// other kinds in random order when none of that kind applies.
pub fn random_walk(
    d: &ColoredDiagram,
    pi: &GroupTable,
    steps: usize,
    limits: FuzzLimits,
    rng: &mut ChaCha8Rng,
) -> Vec<(Move, ColoredDiagram)> {
    let mut out = Vec::with_capacity(steps);
    let mut cur = d.clone();
    for _ in 0..steps {
        let mut kinds = ALL_MOVE_KINDS.to_vec();
        kinds.shuffle(rng);
        let step = kinds.into_iter().find_map(|k| random_move(&cur, pi, k, limits, rng));
        let Some((m, next)) = step else { break };
        cur = next.clone();
        out.push((m, next));
    }
    out
}

/// Genus-1 diagrams the corpus starts from: `S³` and lens spaces `L(p,q)`.
pub fn base_diagrams() -> Vec<HeegaardDiagram> {
    [(1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (5, 2), (6, 1), (7, 2), (8, 3)]
        .iter()
        .map(|&(p, q)| lens_pq_diagram(p, q).expect("coprime"))
        .collect()
}

/// `count` colored diagrams: a base diagram or a connected sum of two, a
/// random valid coloring, then up to six random legal moves.
pub fn generate_corpus(pi: &GroupTable, count: usize, limits: FuzzLimits, seed: u64) -> Vec<ColoredDiagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bases = base_diagrams();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let a = bases.choose(&mut rng).expect("nonempty");
        let d = if limits.max_genus >= 2 && rng.gen_bool(0.4) {
            let b = bases.choose(&mut rng).expect("nonempty");
            connected_sum(a, b)
        } else {
            a.clone()
        };
        if d.crossings.len() > limits.max_crossings {
            continue;
        }
        let colorings = enumerate_colorings(&d, pi);
        let colors = colorings.choose(&mut rng).expect("the identity coloring always exists").clone();
        let start = ColoredDiagram::new(d, colors);
        let steps = rng.gen_range(0..=6);
        let walk = random_walk(&start, pi, steps, limits, &mut rng);
        out.push(walk.last().map(|(_, d)| d.clone()).unwrap_or(start));
    }
    out
}

/// A diagram with random incidences, signs and cyclic orders. Every circle
/// meets at least one crossing; no surface is implied.
pub fn random_combinatorial_diagram(limits: FuzzLimits, rng: &mut ChaCha8Rng) -> HeegaardDiagram {
    let g = rng.gen_range(1..=limits.max_genus.max(1));
    let n = rng.gen_range(g..=limits.max_crossings.max(g));
    let mut lower_of: Vec<usize> = (0..g).collect();
    lower_of.shuffle(rng);
    let crossings: Vec<Crossing> = (0..n)
        .map(|id| {
            let (upper, lower) = if id < g { (id, lower_of[id]) } else { (rng.gen_range(0..g), rng.gen_range(0..g)) };
            Crossing { id, upper, lower, sign: sign(rng) }
        })
        .collect();
    let mut upper_orders = vec![Vec::new(); g];
    let mut lower_orders = vec![Vec::new(); g];
    for c in &crossings {
        upper_orders[c.upper].push(c.id);
        lower_orders[c.lower].push(c.id);
    }
    for o in upper_orders.iter_mut().chain(lower_orders.iter_mut()) {
        o.shuffle(rng);
    }
    HeegaardDiagram { genus: g, crossings, upper_orders, lower_orders }
}

/// [`random_combinatorial_diagram`] with a coloring drawn from all valid ones.
pub fn random_colored_combinatorial(pi: &GroupTable, limits: FuzzLimits, rng: &mut ChaCha8Rng) -> ColoredDiagram {
    let d = random_combinatorial_diagram(limits, rng);
    let colorings = enumerate_colorings(&d, pi);
    let colors: Vec<Elem> = colorings.choose(rng).expect("the identity coloring always exists").clone();
    ColoredDiagram::new(d, colors)
}
