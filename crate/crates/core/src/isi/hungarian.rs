//! Maximum-weight assignment by the Hungarian method with potentials.

/// Assigns every row of a `rows x cols` weight matrix (`rows <= cols`) to a
/// distinct column, maximising the total weight. Returns the column chosen
/// for each row and the total.
pub fn max_weight_assignment(weights: &[Vec<i64>]) -> (Vec<usize>, i64) {
    let n = weights.len();
    if n == 0 {
        return (Vec::new(), 0);
    }
    let m = weights[0].len();
    assert!(n <= m, "more rows than columns");
    assert!(weights.iter().all(|r| r.len() == m), "ragged weight matrix");
    // Minimise cost = -weight. Index 0 is a virtual row/column.
    let cost = |i: usize, j: usize| -weights[i - 1][j - 1];
    let inf = i64::MAX / 4;
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; m + 1];
    let mut p = vec![0usize; m + 1];
    let mut way = vec![0usize; m + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![inf; m + 1];
        let mut used = vec![false; m + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = inf;
            let mut j1 = 0;
            for j in 1..=m {
                if !used[j] {
                    let cur = cost(i0, j) - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=m {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assign = vec![usize::MAX; n];
    for j in 1..=m {
        if p[j] != 0 {
            assign[p[j] - 1] = j - 1;
        }
    }
    let total = assign.iter().enumerate().map(|(i, &j)| weights[i][j]).sum();
    (assign, total)
}
