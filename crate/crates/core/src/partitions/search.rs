//! Lazy depth-first generation of non-crossing partitions.
//!
//! Points are assigned to blocks left to right in restricted-growth form, so
//! each partition is produced once, in lexicographic order of its
//! restricted-growth string. A stack of open blocks rejects crossings as soon
//! as they appear. For inversion-invariant partitions of `[±n]` every point
//! of the second half is checked against the mirror of the first half.

pub(crate) struct Search {
    len: usize,
    half: Option<usize>,
    assign: Vec<usize>,
    stacks: Vec<Vec<usize>>,
    nblocks: Vec<usize>,
    cands: Vec<Vec<usize>>,
    cursor: Vec<usize>,
    started: bool,
    done: bool,
}

impl Search {
    /// `half = Some(n)` restricts to partitions of `2n` points invariant under `x ↦ x + n mod 2n`.
    pub(crate) fn new(len: usize, half: Option<usize>) -> Self {
        Search {
            len,
            half,
            assign: Vec::with_capacity(len),
            stacks: Vec::with_capacity(len + 1),
            nblocks: Vec::with_capacity(len + 1),
            cands: Vec::with_capacity(len),
            cursor: Vec::with_capacity(len),
            started: false,
            done: len == 0,
        }
    }

    fn candidates(&self, q: usize) -> Vec<usize> {
        let mut c = self.stacks[q].clone();
        c.sort_unstable();
        c.push(self.nblocks[q]);
        let Some(n) = self.half else { return c };
        if q < n {
            return c;
        }
        let mirror = q - n;
        let neg = |r: usize| if r < n { r + n } else { r - n };
        c.retain(|&cand| {
            (0..q).all(|r| {
                let nr = neg(r);
                nr >= q || (self.assign[r] == cand) == (self.assign[mirror] == self.assign[nr])
            })
        });
        c
    }

    fn emit(&self) -> Vec<Vec<usize>> {
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); self.nblocks[self.len]];
        for (x, &b) in self.assign.iter().enumerate() {
            blocks[b].push(x);
        }
        blocks
    }
}

impl Iterator for Search {
    type Item = Vec<Vec<usize>>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.stacks.push(Vec::new());
            self.nblocks.push(0);
            self.cands.push(self.candidates(0));
            self.cursor.push(0);
        }
        loop {
            let d = self.cursor.len() - 1;
            if self.cursor[d] < self.cands[d].len() {
                let c = self.cands[d][self.cursor[d]];
                self.cursor[d] += 1;
                self.assign.truncate(d);
                self.assign.push(c);
                let mut stack = self.stacks[d].clone();
                let mut nb = self.nblocks[d];
                if c == nb {
                    nb += 1;
                    stack.push(c);
                } else {
                    let at = stack.iter().position(|&b| b == c).expect("candidate is open");
                    stack.truncate(at + 1);
                }
                self.stacks.truncate(d + 1);
                self.stacks.push(stack);
                self.nblocks.truncate(d + 1);
                self.nblocks.push(nb);
                if d + 1 == self.len {
                    return Some(self.emit());
                }
                let next = self.candidates(d + 1);
                self.cands.push(next);
                self.cursor.push(0);
            } else {
                self.cands.pop();
                self.cursor.pop();
                if self.cursor.is_empty() {
                    self.done = true;
                    return None;
                }
            }
        }
    }
}
