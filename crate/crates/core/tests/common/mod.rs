//! Brute-force oracles written without any of the library's algorithms:
//! permutations are plain `Vec<usize>` and every set is found by exhaustion.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

pub type P = Vec<usize>;

pub fn mul(p: &P, q: &P) -> P {
    (0..p.len()).map(|x| p[q[x]]).collect()
}

pub fn inv(p: &P) -> P {
    let mut out = vec![0; p.len()];
    for (x, &y) in p.iter().enumerate() {
        out[y] = x;
    }
    out
}

pub fn identity(n: usize) -> P {
    (0..n).collect()
}

pub fn all_perms(n: usize) -> Vec<P> {
    fn go(prefix: &mut P, used: &mut Vec<bool>, out: &mut Vec<P>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn sign(p: &P) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

pub fn even_perms(n: usize) -> Vec<P> {
    all_perms(n).into_iter().filter(sign).collect()
}

/// Closure of `gens` under multiplication by repeated squaring of the set.
pub fn closure(n: usize, gens: &[P]) -> BTreeSet<P> {
    let mut set: BTreeSet<P> = BTreeSet::new();
    set.insert(identity(n));
    loop {
        let mut next = set.clone();
        for a in &set {
            for g in gens {
                next.insert(mul(a, g));
            }
        }
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

pub fn conj(h: &P, g: &P) -> P {
    mul(&mul(h, g), &inv(h))
}

/// Class sizes, sorted.
pub fn class_sizes(elems: &[P]) -> Vec<usize> {
    let mut seen: HashSet<P> = HashSet::new();
    let mut sizes = Vec::new();
    for g in elems {
        if seen.contains(g) {
            continue;
        }
        let class: HashSet<P> = elems.iter().map(|h| conj(h, g)).collect();
        sizes.push(class.len());
        seen.extend(class);
    }
    sizes.sort_unstable();
    sizes
}

pub fn centralizer_size(elems: &[P], g: &P) -> usize {
    elems.iter().filter(|h| mul(h, g) == mul(g, h)).count()
}

/// Subgroup generated by every commutator `a b a^-1 b^-1` over all pairs.
pub fn commutator_closure(elems: &[P]) -> BTreeSet<P> {
    let n = elems[0].len();
    let comms: BTreeSet<P> = elems
        .iter()
        .flat_map(|a| elems.iter().map(move |b| mul(&mul(a, b), &mul(&inv(a), &inv(b)))))
        .collect();
    let gens: Vec<P> = comms.into_iter().collect();
    closure(n, &gens)
}

fn relations_hold(t: &[&P]) -> bool {
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            let (a, b) = (t[i], t[j]);
            let ok = if j == i + 1 {
                mul(&mul(a, b), a) == mul(&mul(b, a), b)
            } else {
                mul(a, b) == mul(b, a)
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Every tuple in `elems^(n-1)` satisfying the Artin relations, as index tuples.
pub fn all_homs(n: usize, elems: &[P]) -> Vec<Vec<usize>> {
    let len = n - 1;
    let m = elems.len();
    let mut out = Vec::new();
    let mut idx = vec![0usize; len];
    loop {
        let t: Vec<&P> = idx.iter().map(|&i| &elems[i]).collect();
        if relations_hold(&t) {
            out.push(idx.clone());
        }
        let mut k = len;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < m {
                break;
            }
            idx[k] = 0;
        }
    }
}
