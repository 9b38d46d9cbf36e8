//! Helpers shared by the integration tests.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use steiner_core::{prufer_decode, Tree};

/// Vertices of minimum eccentricity, found by BFS from every vertex.
pub fn centers_by_eccentricity(t: &Tree) -> Vec<usize> {
    let n = t.n();
    let ecc: Vec<usize> = (0..n)
        .map(|s| {
            let mut dist = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in t.neighbors(x) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            dist.into_iter().max().unwrap()
        })
        .collect();
    let best = *ecc.iter().min().unwrap();
    (0..n).filter(|&v| ecc[v] == best).collect()
}

fn ahu(t: &Tree, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&c| c != parent)
        .map(|&c| ahu(t, c, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Isomorphism key: the smallest parenthesis encoding over the centers.
pub fn ahu_key(t: &Tree) -> String {
    centers_by_eccentricity(t)
        .into_iter()
        .map(|c| ahu(t, c, usize::MAX))
        .min()
        .unwrap()
}

/// Isomorphism classes of trees on `n` vertices, found by decoding every
/// Prüfer sequence.
pub fn prufer_classes(n: usize) -> BTreeSet<String> {
    let mut keys = BTreeSet::new();
    if n == 1 {
        keys.insert(ahu_key(&Tree::path(1)));
        return keys;
    }
    let mut seq = vec![0usize; n - 2];
    loop {
        keys.insert(ahu_key(&prufer_decode(&seq).unwrap()));
        let mut i = 0;
        while i < seq.len() && seq[i] == n - 1 {
            seq[i] = 0;
            i += 1;
        }
        if i == seq.len() {
            return keys;
        }
        seq[i] += 1;
    }
}

/// `d_k(v)` straight from the definition, with no shared code path.
pub fn brute_index(t: &Tree, v: usize, k: usize) -> u64 {
    let others: Vec<usize> = (0..t.n()).filter(|&x| x != v).collect();
    let mut total = 0u64;
    for_each_subset(&others, k - 1, &mut |s| {
        let mut set = s.to_vec();
        set.push(v);
        total += t.steiner_distance(&set).unwrap() as u64;
    });
    total
}

pub fn for_each_subset(pool: &[usize], size: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(pool: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == size {
            f(cur);
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < size - cur.len() {
                break;
            }
            cur.push(pool[i]);
            go(pool, size, i + 1, cur, f);
            cur.pop();
        }
    }
    go(pool, size, 0, &mut Vec::new(), f);
}
