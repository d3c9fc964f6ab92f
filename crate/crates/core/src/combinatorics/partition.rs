//! Classical integer partitions and compositions.

/// Partitions of `n` with all parts at most `max`, in reverse lexicographic order.
pub fn partitions_bounded(n: usize, max: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=max.min(n)).rev() {
            prefix.push(k);
            go(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max, &mut Vec::new(), &mut out);
    out
}

pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    partitions_bounded(n, n)
}

/// Compositions of `n` into positive parts.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    (0..1usize << (n - 1))
        .map(|cuts| {
            let mut parts = Vec::new();
            let mut run = 1;
            for i in 0..n - 1 {
                if cuts >> i & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            parts
        })
        .collect()
}

/// Transpose of a partition given as a weakly decreasing sequence (zeros ignored).
pub fn conjugate_partition(lambda: &[usize]) -> Vec<usize> {
    let first = lambda.first().copied().unwrap_or(0);
    (1..=first)
        .map(|k| lambda.iter().take_while(|&&x| x >= k).count())
        .collect()
}

/// Classical dominance `mu ≤ lambda` for partitions of the same size.
pub fn dominates(lambda: &[usize], mu: &[usize]) -> bool {
    if lambda.iter().sum::<usize>() != mu.iter().sum::<usize>() {
        return false;
    }
    let len = lambda.len().max(mu.len());
    let (mut sl, mut sm) = (0, 0);
    for i in 0..len {
        sl += lambda.get(i).copied().unwrap_or(0);
        sm += mu.get(i).copied().unwrap_or(0);
        if sm > sl {
            return false;
        }
    }
    true
}

/// `z_λ = Π_i i^{m_i} m_i!`.
pub fn z_factor(lambda: &[usize]) -> u64 {
    let mut z = 1u64;
    let mut i = 0;
    while i < lambda.len() {
        let v = lambda[i];
        let mut mult = 0u64;
        while i < lambda.len() && lambda[i] == v {
            mult += 1;
            i += 1;
            z *= v as u64 * mult;
        }
    }
    z
}
