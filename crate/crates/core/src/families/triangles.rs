//! Memoized number triangles.
//!
//! Tables are computed once with symbolic `λ` and grown on demand; readers
//! share them through an `RwLock`. Specializations of `λ` are substitutions
//! applied to the cached entries.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use crate::poly::BiPoly;
use crate::rational::{factorial, int};

use super::{triangle_kernel, LambdaMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Triangle {
    Stirling1,
    Stirling2,
    CentralFactorialT,
    DegStirling1,
    DegStirling2,
    DegCentralFactorial,
}

/// Rows `0..=max_n`; row `n` holds columns `0..=n`.
struct Table {
    rows: Vec<Vec<BiPoly>>,
}

const MIN_ROWS: usize = 16;

static TABLES: LazyLock<RwLock<HashMap<Triangle, Arc<Table>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

impl Table {
    fn build(tri: Triangle, max_n: usize) -> Table {
        let kernel = triangle_kernel(tri, max_n);
        let mut rows: Vec<Vec<BiPoly>> = (0..=max_n).map(|n| Vec::with_capacity(n + 1)).collect();
        // column k of the triangle is generated by kernel^k / k!
        let mut column = crate::series::EgfSeries::one(max_n);
        for k in 0..=max_n {
            for (n, row) in rows.iter_mut().enumerate().skip(k) {
                row.push(column.coeff(n).scale(&factorial(n as u32)));
            }
            column = column
                .mul(&kernel)
                .scale_rational(&int(k as i64 + 1).recip());
        }
        Table { rows }
    }

    fn max_n(&self) -> usize {
        self.rows.len() - 1
    }
}

fn table(tri: Triangle, n: usize) -> Arc<Table> {
    if let Some(t) = TABLES.read().expect("triangle cache poisoned").get(&tri) {
        if t.max_n() >= n {
            return Arc::clone(t);
        }
    }
    let mut guard = TABLES.write().expect("triangle cache poisoned");
    if let Some(t) = guard.get(&tri) {
        if t.max_n() >= n {
            return Arc::clone(t);
        }
    }
    let size = n
        .max(MIN_ROWS)
        .max(guard.get(&tri).map_or(0, |t| 2 * t.max_n()));
    let t = Arc::new(Table::build(tri, size));
    guard.insert(tri, Arc::clone(&t));
    t
}

/// Entry `(n, k)` with symbolic `λ`; zero outside `0 ≤ k ≤ n`.
pub fn triangular_numbers(tri: Triangle, n: usize, k: usize) -> BiPoly {
    if k > n {
        return BiPoly::zero();
    }
    table(tri, n).rows[n][k].clone()
}

/// Entry `(n, k)` with `λ` specialized per `mode`.
pub fn triangle_value(tri: Triangle, n: usize, k: usize, mode: &LambdaMode) -> BiPoly {
    mode.apply(&triangular_numbers(tri, n, k))
}
