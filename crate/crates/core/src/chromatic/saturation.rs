//! Exact coloring of a finite graph by depth-first search.
//!
//! Branches on the uncolored vertex with the fewest remaining colors (ties:
//! most colored neighbors, then lowest index) and removes a chosen color
//! from neighbor domains immediately. Colors not yet used anywhere are
//! interchangeable, so only one of them is ever tried.

use std::cmp::Reverse;
use std::time::Instant;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum SearchOutcome {
    Colored(Vec<u8>),
    Uncolorable,
    /// The node budget or deadline ran out first.
    Exhausted,
}

/// Which uncolored vertex to branch on next.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Order {
    /// Fewest remaining colors first.
    Saturation,
    /// Lowest index first.
    Index,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Budget {
    pub nodes: Option<u64>,
    pub deadline: Option<Instant>,
}

impl Budget {
    pub const UNLIMITED: Self = Self {
        nodes: None,
        deadline: None,
    };
}

const UNCOLORED: u8 = u8::MAX;

struct Frame {
    vertex: usize,
    next: u8,
    trail_start: usize,
    used_before: u8,
}

/// Colors the graph given by `adjacency` with at most `colors` colors.
/// Supports up to 64 colors; more report `Exhausted`.
pub(crate) fn color_graph(
    adjacency: &[Vec<usize>],
    colors: u32,
    order: Order,
    budget: Budget,
) -> SearchOutcome {
    if colors > u64::BITS {
        return SearchOutcome::Exhausted;
    }
    let n = adjacency.len();
    let colors = colors as u8;
    let full: u64 = if colors == 64 {
        u64::MAX
    } else {
        (1 << colors) - 1
    };
    let mut color = vec![UNCOLORED; n];
    let mut domain = vec![full; n];
    let mut saturation = vec![0u32; n];
    let mut trail: Vec<usize> = Vec::new();
    let mut stack: Vec<Frame> = Vec::new();
    let mut assigned = 0;
    let mut used = 0u8;
    let mut nodes = 0u64;

    loop {
        if assigned == n {
            return SearchOutcome::Colored(color);
        }
        let vertex = match order {
            Order::Saturation => (0..n)
                .filter(|&v| color[v] == UNCOLORED)
                .min_by_key(|&v| (domain[v].count_ones(), Reverse(saturation[v]), v)),
            Order::Index => (0..n).find(|&v| color[v] == UNCOLORED),
        }
        .expect("some vertex is uncolored");
        stack.push(Frame {
            vertex,
            next: 0,
            trail_start: trail.len(),
            used_before: used,
        });

        loop {
            let Some(frame) = stack.last_mut() else {
                return SearchOutcome::Uncolorable;
            };
            let v = frame.vertex;
            let limit = colors.min(frame.used_before + 1);
            let allowed = domain[v] & low_bits(limit) & !low_bits(frame.next);
            if allowed != 0 {
                let x = allowed.trailing_zeros() as u8;
                frame.next = x + 1;
                used = frame.used_before.max(x + 1);
                color[v] = x;
                assigned += 1;
                for &u in &adjacency[v] {
                    saturation[u] += 1;
                    if color[u] == UNCOLORED && domain[u] >> x & 1 == 1 {
                        domain[u] &= !(1 << x);
                        trail.push(u);
                    }
                }
                nodes += 1;
                if budget.nodes.is_some_and(|limit| nodes > limit)
                    || (nodes.is_multiple_of(4096)
                        && budget.deadline.is_some_and(|t| Instant::now() >= t))
                {
                    return SearchOutcome::Exhausted;
                }
                break;
            }
            stack.pop();
            let Some(parent) = stack.last() else {
                return SearchOutcome::Uncolorable;
            };
            // undo the parent's assignment before it tries its next color
            let (p, x) = (parent.vertex, color[parent.vertex]);
            for &u in &trail[parent.trail_start..] {
                domain[u] |= 1 << x;
            }
            trail.truncate(parent.trail_start);
            for &u in &adjacency[p] {
                saturation[u] -= 1;
            }
            color[p] = UNCOLORED;
            assigned -= 1;
        }
    }
}

/// Alternates both branching orders with node limits growing fourfold from
/// 10 000, so a search that suits one order is not held up by the other.
/// Stops once a limit would exceed `budget.nodes`.
pub(crate) fn color_graph_portfolio(
    adjacency: &[Vec<usize>],
    colors: u32,
    budget: Budget,
) -> SearchOutcome {
    let mut limit: u64 = 10_000;
    loop {
        let nodes = budget.nodes.map_or(limit, |n| limit.min(n));
        for order in [Order::Index, Order::Saturation] {
            let run = Budget {
                nodes: Some(nodes),
                deadline: budget.deadline,
            };
            match color_graph(adjacency, colors, order, run) {
                SearchOutcome::Exhausted => {}
                outcome => return outcome,
            }
        }
        if budget.nodes.is_some_and(|n| nodes >= n)
            || budget.deadline.is_some_and(|t| Instant::now() >= t)
        {
            return SearchOutcome::Exhausted;
        }
        limit = limit.saturating_mul(4);
    }
}

fn low_bits(k: u8) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1 << k) - 1
    }
}
