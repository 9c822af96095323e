//! Shared test oracles: exhaustive homomorphism counting over small finite
//! abelian groups, and a Lyndon-word counter. Both are independent of the
//! library's closed-form paths.

#![allow(dead_code)]

use std::collections::HashSet;

/// All elements of the group Z/d1 + ... + Z/dr, as mixed-radix tuples.
pub fn elements(cyclic: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for d in cyclic {
        let mut next = Vec::with_capacity(out.len() * (*d as usize));
        for tuple in &out {
            for x in 0..*d {
                let mut t = tuple.clone();
                t.push(x);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

pub fn group_size(cyclic: &[u64]) -> u64 {
    cyclic.iter().product()
}

fn is_killed_by(x: &[u64], d: u64, cyclic: &[u64]) -> bool {
    x.iter().zip(cyclic).all(|(xi, di)| (d * xi) % di == 0)
}

/// Number of homomorphisms from Z/d1 + ... into the group `b`, counted by
/// enumerating, for each generator of order d, every element of `b` it can
/// map to (those killed by d).
pub fn hom_count(a: &[u64], b: &[u64]) -> u64 {
    let elems = elements(b);
    a.iter()
        .map(|d| elems.iter().filter(|x| is_killed_by(x, *d, b)).count() as u64)
        .product()
}

/// |Ext(A, B)| for finite A, B: the product over generators of order d of
/// |B / dB|, with dB enumerated directly.
pub fn ext_count(a: &[u64], b: &[u64]) -> u64 {
    let elems = elements(b);
    let size = group_size(b);
    a.iter()
        .map(|d| {
            let image: HashSet<Vec<u64>> = elems
                .iter()
                .map(|x| {
                    x.iter()
                        .zip(b)
                        .map(|(xi, di)| (d * xi) % di)
                        .collect::<Vec<u64>>()
                })
                .collect();
            size / image.len() as u64
        })
        .product()
}

/// Number of elements of the group killed by m; the profile over all m
/// determines a finite abelian group up to isomorphism.
pub fn killed_count(cyclic: &[u64], m: u64) -> u64 {
    elements(cyclic)
        .iter()
        .filter(|x| is_killed_by(x, m, cyclic))
        .count() as u64
}

/// Every finite abelian group of order <= max_order, presented as a list of
/// cyclic factors (all lists with entries >= 2 and product <= max_order;
/// includes the empty list for the trivial group, and redundant
/// presentations of the same group).
pub fn small_groups(max_order: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    let mut cur = Vec::new();
    fn rec(min: u64, budget: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        let mut d = min;
        while d <= budget {
            cur.push(d);
            out.push(cur.clone());
            rec(d, budget / d, cur, out);
            cur.pop();
            d += 1;
        }
    }
    rec(2, max_order, &mut cur, &mut out);
    out
}

/// Number of Lyndon words of length w over a k-letter alphabet, by direct
/// enumeration: words strictly smaller than every proper rotation.
pub fn lyndon_count(k: usize, w: u32) -> u64 {
    let w = w as usize;
    let mut count = 0u64;
    let mut word = vec![0usize; w];
    loop {
        if is_lyndon(&word) {
            count += 1;
        }
        let mut i = w;
        loop {
            if i == 0 {
                return count;
            }
            i -= 1;
            word[i] += 1;
            if word[i] < k {
                break;
            }
            word[i] = 0;
        }
    }
}

fn is_lyndon(word: &[usize]) -> bool {
    let n = word.len();
    (1..n).all(|r| {
        let rotation: Vec<usize> = (0..n).map(|i| word[(i + r) % n]).collect();
        word < &rotation[..]
    })
}
