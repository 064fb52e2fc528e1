//! Streaming row reduction over `Z/pZ`.
//!
//! Columns are held in a permuted order in which pivot columns come first,
//! so the row with pivot at position `i` only stores positions after `i`.
//! Rows `0..committed` form a fully reduced basis except in the positions of
//! the newest rows, which are added in blocks: each new row is reduced
//! against everything before it, and once a block fills up the block is
//! back-substituted into itself and into all committed rows in one sweep.
//! The sweep reads each committed row once per block instead of once per
//! insertion, which is what bounds the running time at large dimension.

use super::modp::ModP;

const BLOCK: usize = 24;

#[derive(Debug)]
pub struct ModEliminator {
    f: ModP,
    n: usize,
    committed: usize,
    /// `pos[c]` is the position of column `c`.
    pos: Vec<usize>,
    /// `col[t]` is the column at position `t`.
    col: Vec<usize>,
    /// Row `i` holds positions `i+1 .. n`.
    rows: Vec<Vec<u64>>,
    scratch: Vec<u64>,
}

impl ModEliminator {
    pub fn new(f: ModP, n: usize) -> Self {
        ModEliminator {
            f,
            n,
            committed: 0,
            pos: (0..n).collect(),
            col: (0..n).collect(),
            rows: Vec::new(),
            scratch: vec![0; n],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn prime(&self) -> u64 {
        self.f.p()
    }

    /// Reduces `row` (in column order) against the basis, leaving the result
    /// in the scratch buffer (position order). Returns whether a nonzero
    /// remainder is left.
    fn reduce(&mut self, row: &[i64]) -> bool {
        assert_eq!(row.len(), self.n, "row length");
        let (f, c, rank) = (self.f, self.committed, self.rows.len());
        let r = &mut self.scratch;
        for (col, &x) in row.iter().enumerate() {
            r[self.pos[col]] = f.from_i64(x);
        }
        let (head, tail) = r.split_at_mut(c);
        for (i, h) in head.iter_mut().enumerate() {
            if *h != 0 {
                f.axpy_neg(tail, *h, &self.rows[i][c - i - 1..]);
                *h = 0;
            }
        }
        for i in c..rank {
            let h = r[i];
            if h != 0 {
                f.axpy_neg(&mut r[i + 1..], h, &self.rows[i]);
                r[i] = 0;
            }
        }
        r[rank..].iter().any(|&x| x != 0)
    }

    /// Whether `row` lies in the span of the rows inserted so far.
    pub fn contains(&mut self, row: &[i64]) -> bool {
        !self.reduce(row)
    }

    /// Adds `row` to the span; returns `true` if the rank grew.
    pub fn insert(&mut self, row: &[i64]) -> bool {
        if self.rank() == self.n || !self.reduce(row) {
            return false;
        }
        let (f, rank, n) = (self.f, self.rows.len(), self.n);
        let r = &mut self.scratch;
        let t = (rank..n).find(|&t| r[t] != 0).expect("nonzero remainder");
        let inv = f.inv(r[t]);
        f.scale(&mut r[rank..], inv);
        for (j, pj) in self.rows.iter_mut().enumerate() {
            pj.swap(t - j - 1, rank - j - 1);
        }
        r.swap(t, rank);
        let (ct, cr) = (self.col[t], self.col[rank]);
        self.col.swap(t, rank);
        self.pos[ct] = rank;
        self.pos[cr] = t;
        self.rows.push(r[rank + 1..].to_vec());
        if self.rows.len() - self.committed == BLOCK || self.rows.len() == n {
            self.flush();
        }
        true
    }

    /// Back-substitutes the pending block so that the whole basis is fully
    /// reduced again.
    fn flush(&mut self) {
        let (f, c, rank) = (self.f, self.committed, self.rows.len());
        let (old, block) = self.rows.split_at_mut(c);
        for q in (1..block.len()).rev() {
            let (before, from_q) = block.split_at_mut(q);
            let pq = &from_q[0];
            for (j, pj) in before.iter_mut().enumerate() {
                let g = pj[q - j - 1];
                if g != 0 {
                    f.axpy_neg(&mut pj[q - j..], g, pq);
                    pj[q - j - 1] = 0;
                }
            }
        }
        for (i, pi) in old.iter_mut().enumerate() {
            for (q, pq) in block.iter().enumerate() {
                let at = c + q - i - 1;
                let g = pi[at];
                if g != 0 {
                    f.axpy_neg(&mut pi[at + 1..], g, pq);
                    pi[at] = 0;
                }
            }
        }
        self.committed = rank;
    }
}
