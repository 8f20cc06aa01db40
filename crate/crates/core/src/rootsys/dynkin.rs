//! Gram matrices of simple roots, normalized so long roots have `(a, a) = 2`.
//!
//! Classical series and F4 use the Bourbaki numbering. G2 and the E series
//! use the numbering of the Bremner-Moody-Patera tables: G2 has `a1` long;
//! E6 is the chain `1-2-3-4-5` with `6` on node 3; E7 is the chain `1-..-6`
//! with `7` on node 3; E8 is the chain `1-..-7` with `8` on node 5.

use crate::linalg::Matrix;
use crate::rational::{int, rat, Rational};
use crate::rootsys::Family;

fn chain_gram(len: usize, edges: &[(usize, usize)]) -> Matrix {
    let mut g = vec![vec![int(0); len]; len];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = int(2);
    }
    for &(a, b) in edges {
        g[a][b] = int(-1);
        g[b][a] = int(-1);
    }
    g
}

fn path(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

fn set(g: &mut Matrix, i: usize, j: usize, v: Rational) {
    g[i][j] = v.clone();
    g[j][i] = v;
}

pub(crate) fn simple_gram(family: Family) -> Matrix {
    match family {
        Family::A(n) => chain_gram(n, &path(n)),
        Family::B(n) => {
            let mut g = chain_gram(n, &path(n));
            g[n - 1][n - 1] = int(1);
            g
        }
        Family::C(n) => {
            let mut g = vec![vec![int(0); n]; n];
            for i in 0..n - 1 {
                g[i][i] = int(1);
            }
            g[n - 1][n - 1] = int(2);
            for i in 0..n.saturating_sub(2) {
                set(&mut g, i, i + 1, rat(-1, 2));
            }
            set(&mut g, n - 2, n - 1, int(-1));
            g
        }
        Family::D(n) => {
            let mut edges = path(n - 1);
            edges.push((n - 3, n - 1));
            chain_gram(n, &edges)
        }
        Family::G2 => vec![vec![int(2), int(-1)], vec![int(-1), rat(2, 3)]],
        Family::F4 => {
            let mut g = chain_gram(4, &path(4));
            g[2][2] = int(1);
            g[3][3] = int(1);
            set(&mut g, 2, 3, rat(-1, 2));
            g
        }
        Family::E6 => {
            let mut edges = path(5);
            edges.push((2, 5));
            chain_gram(6, &edges)
        }
        Family::E7 => {
            let mut edges = path(6);
            edges.push((2, 6));
            chain_gram(7, &edges)
        }
        Family::E8 => {
            let mut edges = path(7);
            edges.push((4, 7));
            chain_gram(8, &edges)
        }
    }
}
