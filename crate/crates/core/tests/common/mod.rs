//! Brute-force oracles shared by the integration tests. None of them call
//! the library routine they are compared against.

#![allow(dead_code)]

use baxter_trees::trees::Exponent;
use baxter_trees::Family;

pub fn binom(n: i64, k: i64) -> u128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * (n - t) as u128 / (t + 1) as u128;
    }
    acc
}

pub fn catalan(n: u64) -> u128 {
    binom(2 * n as i64, n as i64) / (n as u128 + 1)
}

/// Shapes obeying the node rules (≥ 2 children, no interior leaf), counted
/// by (leaves, nodes) up to the given bounds. Solved as the fixed point of
/// S = node · T · (1 − S)⁻¹ · T with T = leaf + S.
pub fn shape_counts(max_leaves: usize, max_nodes: usize) -> Vec<Vec<u128>> {
    let (lx, ny) = (max_leaves + 1, max_nodes + 1);
    let zero = || vec![vec![0u128; ny]; lx];
    let mul = |a: &Vec<Vec<u128>>, b: &Vec<Vec<u128>>| {
        let mut out = vec![vec![0u128; ny]; lx];
        for i in 0..lx {
            for j in 0..ny {
                if a[i][j] == 0 {
                    continue;
                }
                for k in 0..lx - i {
                    for l in 0..ny - j {
                        out[i + k][j + l] += a[i][j] * b[k][l];
                    }
                }
            }
        }
        out
    };
    let mut s = zero();
    for _ in 0..(lx + ny + 2) {
        let mut t = s.clone();
        t[1][0] += 1;
        // Q = Σ_k S^k.
        let mut q = zero();
        q[0][0] = 1;
        let mut power = q.clone();
        for _ in 0..ny {
            power = mul(&power, &s);
            for i in 0..lx {
                for j in 0..ny {
                    q[i][j] += power[i][j];
                }
            }
        }
        let body = mul(&mul(&t, &q), &t);
        let mut next = zero();
        for i in 0..lx {
            for j in 0..ny - 1 {
                next[i][j + 1] = body[i][j];
            }
        }
        s = next;
    }
    s
}

/// |T_f(n, m)| from shape counts and independent label/angle choices.
pub fn oracle_count(f: Family, n: usize, m: usize) -> u128 {
    let shapes = shape_counts(n + 1, m + 1);
    let mut total = 0;
    for (leaves, row) in shapes.iter().enumerate() {
        for (nodes, &count) in row.iter().enumerate() {
            if count == 0 || leaves < 2 {
                continue;
            }
            let a = leaves as i64 - 1;
            let angle_ways = match f.i {
                Exponent::Inf => binom(n as i64 - 1, a - 1),
                Exponent::Two => u128::from(n as i64 == a),
            };
            let label_ways = match f.j {
                Exponent::Inf => binom(m as i64, nodes as i64 - 1),
                Exponent::Two => u128::from(m + 1 == nodes) + u128::from(m == nodes),
            };
            total += count * angle_ways * label_ways;
        }
    }
    total
}

/// All words over {H, V, D} with exactly `n` horizontal and `n` vertical
/// displacement that stay weakly below the diagonal, by filtering every
/// word of each possible length.
pub fn brute_schroder(n: usize) -> Vec<String> {
    let mut out = Vec::new();
    for len in n..=2 * n {
        let total = 3usize.pow(len as u32);
        for code in 0..total {
            let mut c = code;
            let mut word = String::with_capacity(len);
            let (mut x, mut y, mut ok) = (0usize, 0usize, true);
            for _ in 0..len {
                let step = ["H", "V", "D"][c % 3];
                c /= 3;
                match step {
                    "H" => x += 1,
                    "V" => y += 1,
                    _ => {
                        x += 1;
                        y += 1;
                    }
                }
                if y > x {
                    ok = false;
                    break;
                }
                word.push_str(step);
            }
            if ok && x == n && y == n {
                out.push(word);
            }
        }
    }
    out.sort();
    out
}
