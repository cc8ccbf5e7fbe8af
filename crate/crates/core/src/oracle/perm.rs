//! Permutations of `0..n` as image vectors.

/// All permutations of `0..n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Permutations of `0..n` that map each block of `blocks` onto itself.
pub fn stabilizer(n: usize, blocks: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![(0..n).collect::<Vec<_>>()];
    for block in blocks {
        let mut next = Vec::new();
        for base in &out {
            for arrangement in all_permutations(block.len()) {
                let mut p = base.clone();
                for (from, &to) in block.iter().zip(&arrangement) {
                    p[*from] = block[to];
                }
                next.push(p);
            }
        }
        out = next;
    }
    out
}

pub fn sign(perm: &[usize]) -> i64 {
    let cycles = crate::partition::Partition::cycle_type(perm).rows();
    if (perm.len() - cycles) % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// Moves the label in factor `k` to factor `perm[k]`.
pub fn permute_tuple(perm: &[usize], tuple: &[usize]) -> Vec<usize> {
    let mut out = vec![0; tuple.len()];
    for (k, &x) in tuple.iter().enumerate() {
        out[perm[k]] = x;
    }
    out
}
