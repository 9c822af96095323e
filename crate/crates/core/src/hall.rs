//! Basic commutators on k generators: generation and ordering.
//!
//! The set Q is defined inductively. Weight-1 elements are the generators
//! z1 < z2 < ... < zk. An element of weight w > 1 is a bracket [a, b] of
//! already-constructed elements with wt(a) + wt(b) = w, a < b, and, when
//! b = [c, d], also c <= a. The global order is weight-major; ties inside a
//! weight class break lexicographically by (left, right) under the order
//! already established on lower weights, which makes the enumeration
//! deterministic and prefix-stable in the weight bound.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A bracket monomial over generators z1..zk, with cached weight and
/// multidegree (per-generator occurrence counts).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Commutator {
    node: Node,
    weight: u32,
    multidegree: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Node {
    Leaf(usize),
    Bracket(Box<Commutator>, Box<Commutator>),
}

impl Commutator {
    /// The generator z_{index+1} among k generators (0-based index).
    pub fn generator(index: usize, k: usize) -> Self {
        assert!(index < k);
        let mut multidegree = vec![0; k];
        multidegree[index] = 1;
        Commutator {
            node: Node::Leaf(index),
            weight: 1,
            multidegree,
        }
    }

    /// The bracket [a, b]. Weight and multidegree add; the basic-commutator
    /// side conditions are enforced by the enumeration, not here.
    pub fn bracket(a: Commutator, b: Commutator) -> Self {
        assert_eq!(a.multidegree.len(), b.multidegree.len());
        let weight = a.weight + b.weight;
        let multidegree = a
            .multidegree
            .iter()
            .zip(&b.multidegree)
            .map(|(x, y)| x + y)
            .collect();
        Commutator {
            node: Node::Bracket(Box::new(a), Box::new(b)),
            weight,
            multidegree,
        }
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn multidegree(&self) -> &[u32] {
        &self.multidegree
    }

    /// For a weight-1 element, the 0-based generator index.
    pub fn generator_index(&self) -> Option<usize> {
        match self.node {
            Node::Leaf(i) => Some(i),
            Node::Bracket(..) => None,
        }
    }

    pub fn parts(&self) -> Option<(&Commutator, &Commutator)> {
        match &self.node {
            Node::Leaf(_) => None,
            Node::Bracket(a, b) => Some((a, b)),
        }
    }
}

impl Ord for Commutator {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then_with(|| match (&self.node, &other.node) {
                (Node::Leaf(i), Node::Leaf(j)) => i.cmp(j),
                (Node::Leaf(_), Node::Bracket(..)) => Ordering::Less,
                (Node::Bracket(..), Node::Leaf(_)) => Ordering::Greater,
                (Node::Bracket(a1, b1), Node::Bracket(a2, b2)) => {
                    a1.cmp(a2).then_with(|| b1.cmp(b2))
                }
            })
    }
}

impl PartialOrd for Commutator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Commutator {
    /// Nested-bracket rendering, e.g. "[z1,[z1,z2]]".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            Node::Leaf(i) => write!(f, "z{}", i + 1),
            Node::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// Every basic commutator of weight <= max_weight, in the global order.
pub fn basic_commutators(k: usize, max_weight: u32) -> Vec<Commutator> {
    basic_commutators_costed(k, max_weight, &vec![0; k], u64::MAX)
}

/// Basic commutators of weight <= max_weight, restricted to those whose
/// weighted degree `sum(multidegree[t] * cost[t]) + weight` does not exceed
/// `budget`.
///
/// The weighted degree is additive over brackets, so an element over budget
/// can never occur as a subterm of one within budget; pruning during
/// generation therefore returns exactly the within-budget subsequence of the
/// full enumeration, in the same order. The callers use the cost vector to
/// drop commutators whose smash targets are already too highly connected to
/// contribute a nontrivial factor.
pub fn basic_commutators_costed(
    k: usize,
    max_weight: u32,
    cost: &[u32],
    budget: u64,
) -> Vec<Commutator> {
    assert!(k >= 1);
    assert!(max_weight >= 1);
    assert_eq!(cost.len(), k);

    let value = |c: &Commutator| -> u64 {
        c.multidegree()
            .iter()
            .zip(cost)
            .map(|(m, w)| u64::from(*m) * u64::from(*w))
            .sum::<u64>()
            + u64::from(c.weight())
    };

    // by_weight[w - 1] holds the weight-w elements in order.
    let mut by_weight: Vec<Vec<Commutator>> = Vec::new();
    let generators: Vec<Commutator> = (0..k)
        .map(|i| Commutator::generator(i, k))
        .filter(|c| value(c) <= budget)
        .collect();
    by_weight.push(generators);

    for w in 2..=max_weight {
        let mut class = Vec::new();
        for wa in 1..=(w / 2) {
            let wb = w - wa;
            let lefts = &by_weight[(wa - 1) as usize];
            let rights = &by_weight[(wb - 1) as usize];
            for a in lefts {
                for b in rights {
                    if value(a) + value(b) > budget {
                        continue;
                    }
                    // a < b holds automatically when wt(a) < wt(b).
                    if wa == wb && a.cmp(b) != Ordering::Less {
                        continue;
                    }
                    if let Some((c, _)) = b.parts() {
                        if c.cmp(a) == Ordering::Greater {
                            continue;
                        }
                    }
                    class.push(Commutator::bracket(a.clone(), b.clone()));
                }
            }
        }
        class.sort();
        by_weight.push(class);
    }

    by_weight.into_iter().flatten().collect()
}

/// The number of basic commutators of exact weight w on k generators: the
/// Witt number (1/w) * sum over d | w of mu(d) * k^(w/d).
pub fn count_by_weight(k: usize, w: u32) -> BigUint {
    assert!(k >= 1);
    assert!(w >= 1);
    let mut sum = BigInt::zero();
    for d in 1..=w {
        if w % d != 0 {
            continue;
        }
        let mu = moebius(u64::from(d));
        if mu == 0 {
            continue;
        }
        let term = BigInt::from(k).pow(w / d);
        if mu > 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let (q, r) = sum.div_rem(&BigInt::from(w));
    debug_assert!(r.is_zero() && !q.is_negative());
    q.to_biguint().expect("Witt numbers are nonnegative")
}

/// Total number of basic commutators of weight <= max_weight.
pub fn count_up_to_weight(k: usize, max_weight: u32) -> BigUint {
    (1..=max_weight).map(|w| count_by_weight(k, w)).sum()
}

fn moebius(n: u64) -> i32 {
    let mut n = n;
    let mut primes = 0;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            primes += 1;
        }
        p += 1;
    }
    if n > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}
