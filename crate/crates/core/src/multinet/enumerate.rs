use rayon::prelude::*;

use super::{check_with_lattice, Multinet};
use crate::arrangement::{Arrangement, IntersectionPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub max_k: usize,
    pub max_mult: u32,
    pub parallel: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions { max_k: 4, max_mult: 4, parallel: true }
    }
}

#[derive(Clone)]
struct State {
    class: Vec<usize>,
    mult: Vec<u32>,
    nclasses: usize,
    // set once a base point is complete: no further classes may open
    k_fixed: Option<usize>,
}

struct Search<'a> {
    arr: &'a Arrangement,
    lattice: &'a [IntersectionPoint],
    // points whose highest-index line is `d`
    completes_at: Vec<Vec<usize>>,
    max_k: usize,
    max_mult: u32,
}

impl Search<'_> {
    fn children(&self, st: &State) -> Vec<State> {
        let d = st.class.len();
        let n = self.arr.len();
        let open_limit = st.k_fixed.unwrap_or(self.max_k);
        let top = if st.nclasses < open_limit { st.nclasses + 1 } else { st.nclasses };
        let mut out = Vec::new();
        for c in 0..top {
            for m in 1..=self.max_mult {
                let mut next = st.clone();
                next.class.push(c);
                next.mult.push(m);
                next.nclasses = next.nclasses.max(c + 1);
                if !self.admissible(&mut next, d) {
                    continue;
                }
                if next.k_fixed.is_none() && next.nclasses + (n - d - 1) < 3 {
                    continue;
                }
                out.push(next);
            }
        }
        out
    }

    /// Checks the points completed by line `d`; may fix the number of classes.
    fn admissible(&self, st: &mut State, d: usize) -> bool {
        for &p in &self.completes_at[d] {
            let mut w = vec![0u32; st.nclasses];
            for &i in &self.lattice[p].incident {
                w[st.class[i]] += st.mult[i];
            }
            let present = w.iter().filter(|&&v| v > 0).count();
            if present < 2 {
                continue;
            }
            if present != st.nclasses || present < 3 || st.k_fixed.is_some_and(|k| k != present) {
                return false;
            }
            if !w.windows(2).all(|x| x[0] == x[1]) {
                return false;
            }
            st.k_fixed = Some(present);
        }
        true
    }

    fn leaf(&self, st: &State) -> Option<Multinet> {
        if st.nclasses < 3 {
            return None;
        }
        let mut classes = vec![Vec::new(); st.nclasses];
        for (i, &c) in st.class.iter().enumerate() {
            classes[c].push(i);
        }
        check_with_lattice(self.arr, self.lattice, &classes, &st.mult).ok()?.multinet()
    }

    fn run(&self, st: State, out: &mut Vec<Multinet>) {
        if st.class.len() == self.arr.len() {
            out.extend(self.leaf(&st));
            return;
        }
        for ch in self.children(&st) {
            self.run(ch, out);
        }
    }
}

fn sort_nets(v: &mut [Multinet]) {
    v.sort_by(|a, b| (&a.classes, &a.mult).cmp(&(&b.classes, &b.mult)));
}

/// All multinets with at most `max_k` classes and multiplicities at most
/// `max_mult`, one per unordered partition, in canonical sorted order.
pub fn enumerate_multinets(a: &Arrangement, opts: EnumerationOptions) -> Vec<Multinet> {
    let lattice = a.lattice();
    let n = a.len();
    if n < 3 || opts.max_k < 3 || opts.max_mult == 0 {
        return Vec::new();
    }
    let mut completes_at = vec![Vec::new(); n];
    for (pi, p) in lattice.iter().enumerate() {
        completes_at[*p.incident.last().expect("nonempty")].push(pi);
    }
    let search = Search { arr: a, lattice: &lattice, completes_at, max_k: opts.max_k, max_mult: opts.max_mult };
    let root = State { class: Vec::new(), mult: Vec::new(), nclasses: 0, k_fixed: None };
    let mut out = Vec::new();
    if !opts.parallel {
        search.run(root, &mut out);
    } else {
        // expand a frontier breadth-first, then search subtrees concurrently
        let target = 4 * rayon::current_num_threads().max(1);
        let mut frontier = vec![root];
        while frontier.len() < target && frontier[0].class.len() < n {
            frontier = frontier.iter().flat_map(|s| search.children(s)).collect();
            if frontier.is_empty() {
                break;
            }
        }
        if frontier.first().is_some_and(|s| s.class.len() == n) {
            out.extend(frontier.iter().filter_map(|s| search.leaf(s)));
        } else {
            out = frontier
                .into_par_iter()
                .map(|s| {
                    let mut v = Vec::new();
                    search.run(s, &mut v);
                    v
                })
                .flatten()
                .collect();
        }
    }
    sort_nets(&mut out);
    out
}

/// Exhaustive search with no pruning: every restricted-growth partition into
/// 3..=max_k classes and every multiplicity vector.
pub fn enumerate_naive(a: &Arrangement, max_k: usize, max_mult: u32) -> Vec<Multinet> {
    let n = a.len();
    let lattice = a.lattice();
    let mut out = Vec::new();
    let mut class = vec![0usize; n];
    loop_partitions(n, max_k, &mut class, 0, 0, &mut |class, k| {
        if k < 3 {
            return;
        }
        let mut classes = vec![Vec::new(); k];
        for (i, &c) in class.iter().enumerate() {
            classes[c].push(i);
        }
        let mut mult = vec![1u32; n];
        loop {
            if let Some(net) = check_with_lattice(a, &lattice, &classes, &mult).ok().and_then(|r| r.multinet()) {
                out.push(net);
            }
            let mut i = 0;
            while i < n && mult[i] == max_mult {
                mult[i] = 1;
                i += 1;
            }
            if i == n {
                break;
            }
            mult[i] += 1;
        }
    });
    sort_nets(&mut out);
    out
}

fn loop_partitions(n: usize, max_k: usize, class: &mut [usize], d: usize, used: usize, f: &mut dyn FnMut(&[usize], usize)) {
    if d == n {
        f(class, used);
        return;
    }
    for c in 0..(used + 1).min(max_k) {
        class[d] = c;
        loop_partitions(n, max_k, class, d + 1, used.max(c + 1), f);
    }
}
