//! Deterministic depth-first order search with dead-state memoization.
//!
//! The searches in this crate (shelling orders, strong shelling orders,
//! perfect elimination orders, linear-quotient orders) all share one shape:
//! build a permutation of `t` items left to right, where appending item `j`
//! after a prefix is allowed or not depending *only on the set* of items
//! already placed, never on their relative order.  That property makes a
//! memo on the chosen-set bitmask sound: if no completion exists from a
//! given set once, none exists ever.

use std::collections::HashSet;

/// Upper bound on the number of items a search can handle (one `u128` mask).
pub const MAX_SEARCH_ITEMS: usize = 128;

/// Find the lexicographically least valid permutation of `0..t`, or `None`
/// after exhausting the search space.
///
/// `appendable(j, chosen)` decides whether item `j` may be placed after the
/// items in the `chosen` bitmask; it must depend only on `j` and the set.
/// Candidates are tried in ascending index order, so the first permutation
/// found is the lexicographically least one — except that `preferred_first`,
/// when given, reorders the candidates for the *first* position only (used
/// by searches that want a specific kind of starting item when possible).
pub fn lex_least_order<F>(
    t: usize,
    preferred_first: Option<&[usize]>,
    mut appendable: F,
) -> Option<Vec<usize>>
where
    F: FnMut(usize, u128) -> bool,
{
    assert!(t <= MAX_SEARCH_ITEMS, "caller must guard the search size");
    let mut order: Vec<usize> = Vec::with_capacity(t);
    let mut dead: HashSet<u128> = HashSet::new();
    if dfs(t, preferred_first, &mut appendable, &mut dead, 0, &mut order) {
        Some(order)
    } else {
        None
    }
}

fn dfs<F>(
    t: usize,
    preferred_first: Option<&[usize]>,
    appendable: &mut F,
    dead: &mut HashSet<u128>,
    chosen: u128,
    order: &mut Vec<usize>,
) -> bool
where
    F: FnMut(usize, u128) -> bool,
{
    if order.len() == t {
        return true;
    }
    if dead.contains(&chosen) {
        return false;
    }
    let first_position = order.is_empty();
    let candidates: Vec<usize> = match (first_position, preferred_first) {
        (true, Some(pref)) => pref
            .iter()
            .copied()
            .chain((0..t).filter(|j| !pref.contains(j)))
            .collect(),
        _ => (0..t).filter(|&j| chosen & (1u128 << j) == 0).collect(),
    };
    for j in candidates {
        let bit = 1u128 << j;
        if chosen & bit != 0 || !appendable(j, chosen) {
            continue;
        }
        order.push(j);
        if dfs(t, preferred_first, appendable, dead, chosen | bit, order) {
            return true;
        }
        order.pop();
    }
    dead.insert(chosen);
    false
}
