//! Index bookkeeping for exterior powers on a fixed frame: basis subsets
//! in lexicographic order, and signed wedge insertion.

/// All strictly increasing index subsets of size `n` from `0..d`, in
/// lexicographic order.
pub fn subsets(d: usize, n: usize) -> Vec<Vec<usize>> {
    if n > d {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // advance to the next subset in lex order
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + d - n {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..n {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Position of a sorted subset in the lex enumeration.
pub fn subset_index(all: &[Vec<usize>], s: &[usize]) -> usize {
    all.binary_search_by(|probe| probe.as_slice().cmp(s))
        .expect("subset not in enumeration")
}

/// Wedge `X_x` onto the front of the sorted subset `s`: the sorted result
/// and the sign of moving `x` into place, or `None` when `x ∈ s`.
pub fn insert_sign(s: &[usize], x: usize) -> Option<(Vec<usize>, i64)> {
    if s.contains(&x) {
        return None;
    }
    let pos = s.iter().filter(|&&y| y < x).count();
    let mut t = s.to_vec();
    t.insert(pos, x);
    let sign = if pos % 2 == 0 { 1 } else { -1 };
    Some((t, sign))
}

/// Remove the element at `pos`, returning the complement subset.
pub fn drop_at(s: &[usize], pos: usize) -> Vec<usize> {
    let mut t = s.to_vec();
    t.remove(pos);
    t
}
