//! Nullspaces of polynomial matrices over `Q(n)`, computed fraction-free.

use crate::exact::{ParamPoly, Var};

fn primitive(v: &mut [ParamPoly]) {
    let mut g: Option<ParamPoly> = None;
    for x in v.iter().filter(|x| !x.is_zero()) {
        g = Some(match g {
            None => x.monic(),
            Some(g) => g.gcd(x).expect("nonzero operands"),
        });
    }
    let Some(g) = g else { return };
    for x in v.iter_mut() {
        *x = x.div_exact(&g).expect("gcd divides every entry");
    }
}

/// Basis of `{v : M v = 0}` for a row-major polynomial matrix with `cols` columns.
///
/// Forward elimination is Bareiss-style so every intermediate entry stays a
/// polynomial; each returned vector is polynomial with coprime entries.
pub fn nullspace(mut rows: Vec<Vec<ParamPoly>>, cols: usize) -> Vec<Vec<ParamPoly>> {
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut prev = ParamPoly::one(Var::N);
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..cols {
                let t = &(&pivot_row[c] * &row[j]) - &(&f * &pivot_row[j]);
                row[j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            row[c] = ParamPoly::zero(Var::N);
        }
        prev = rows[r][c].clone();
        pivots.push((r, c));
        r += 1;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    (0..cols)
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut v = vec![ParamPoly::zero(Var::N); cols];
            v[free] = ParamPoly::one(Var::N);
            for &(pr, pc) in pivots.iter().rev() {
                let row = &rows[pr];
                let mut s = ParamPoly::zero(Var::N);
                for j in pc + 1..cols {
                    if !v[j].is_zero() && !row[j].is_zero() {
                        s = &s + &(&row[j] * &v[j]);
                    }
                }
                for x in v.iter_mut() {
                    if !x.is_zero() {
                        *x = &*x * &row[pc];
                    }
                }
                v[pc] = -&s;
                primitive(&mut v);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> ParamPoly {
        ParamPoly::from_ints(&[v], Var::N)
    }

    fn apply(m: &[Vec<ParamPoly>], v: &[ParamPoly]) -> Vec<ParamPoly> {
        m.iter()
            .map(|row| row.iter().zip(v).fold(c(0), |acc, (a, b)| &acc + &(a * b)))
            .collect()
    }

    #[test]
    fn one_dimensional_kernel() {
        let n = ParamPoly::ident(Var::N);
        let k = nullspace(vec![vec![c(1), n.clone()]], 2);
        assert_eq!(k.len(), 1);
        assert_eq!(&k[0][0] * &c(1), -&(&n * &k[0][1]));
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let k = nullspace(vec![vec![c(1), c(2)], vec![c(3), c(4)]], 2);
        assert!(k.is_empty());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let n = ParamPoly::ident(Var::N);
        let n2 = n.pow(2);
        let m = vec![
            vec![n.clone(), c(1), c(0), n2.clone()],
            vec![c(2), c(0), n.clone(), c(1)],
            vec![&n + &c(2), c(1), n.clone(), &n2 + &c(1)],
        ];
        let k = nullspace(m.clone(), 4);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(apply(&m, v).iter().all(|x| x.is_zero()));
        }
    }
}
