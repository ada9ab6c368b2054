//! Dense GF(2) oracle: bitset Gaussian elimination over whole gradings,
//! sharing nothing with the sparse reduction beyond the input data.

use std::collections::{BTreeMap, HashMap};

use floer_gamma::model::FundamentalComplex;

#[derive(Clone, Debug)]
pub struct Dense {
    pub gens: Vec<(i64, i64, i64)>,
    pub arrows: Vec<(usize, usize)>,
}

impl Dense {
    pub fn from_model(c: &FundamentalComplex) -> Self {
        Dense {
            gens: c
                .generators()
                .iter()
                .map(|g| (g.i, g.j, g.maslov))
                .collect(),
            arrows: c.arrows().collect(),
        }
    }

    pub fn mirror(&self) -> Self {
        Dense {
            gens: self.gens.iter().map(|&(i, j, m)| (-i, -j, -m)).collect(),
            arrows: self.arrows.iter().map(|&(a, b)| (b, a)).collect(),
        }
    }

    /// Subquotient on the generators satisfying `keep`.
    pub fn restrict(&self, keep: impl Fn(i64, i64) -> bool) -> (Self, Vec<Option<usize>>) {
        let mut map = vec![None; self.gens.len()];
        let mut gens = Vec::new();
        for (k, &(i, j, m)) in self.gens.iter().enumerate() {
            if keep(i, j) {
                map[k] = Some(gens.len());
                gens.push((i, j, m));
            }
        }
        let arrows = self
            .arrows
            .iter()
            .filter_map(|&(a, b)| Some((map[a]?, map[b]?)))
            .collect();
        (Dense { gens, arrows }, map)
    }

    fn boundary(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.gens.len()];
        for &(a, b) in &self.arrows {
            out[a].push(b);
        }
        out
    }

    fn by_grading(&self) -> BTreeMap<i64, Vec<usize>> {
        let mut out: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (k, g) in self.gens.iter().enumerate() {
            out.entry(g.2).or_default().push(k);
        }
        out
    }

    pub fn homology_dimensions(&self) -> BTreeMap<i64, usize> {
        let d = self.boundary();
        let groups = self.by_grading();
        let rank_from = |m: i64| -> usize {
            let Some(src) = groups.get(&m) else { return 0 };
            let mut span = Span::new(self.gens.len());
            src.iter()
                .filter(|&&k| span.insert(bits_of(&d[k], self.gens.len())))
                .count()
        };
        let mut out = BTreeMap::new();
        for (&m, gens) in &groups {
            let h = gens.len() - rank_from(m) - rank_from(m + 1);
            if h > 0 {
                out.insert(m, h);
            }
        }
        out
    }

    /// Cycles at grading `m` that are not boundaries, one per homology class
    /// of a basis; as sets of generator indices.
    pub fn homology_basis(&self, m: i64) -> Vec<Vec<usize>> {
        let n = self.gens.len();
        let d = self.boundary();
        let groups = self.by_grading();
        let mut span = Span::new(n);
        for &k in groups.get(&(m + 1)).map(|v| v.as_slice()).unwrap_or(&[]) {
            span.insert(bits_of(&d[k], n));
        }
        let mut out = Vec::new();
        for cycle in kernel(&d, groups.get(&m).map(|v| v.as_slice()).unwrap_or(&[]), n) {
            if span.insert(cycle.clone()) {
                out.push(ones(&cycle));
            }
        }
        out
    }

    pub fn is_boundary(&self, chain: &[usize]) -> bool {
        let n = self.gens.len();
        let Some(&first) = chain.first() else {
            return true;
        };
        let m = self.gens[first].2;
        let d = self.boundary();
        let mut span = Span::new(n);
        for (g, image) in self.gens.iter().zip(&d) {
            if g.2 == m + 1 {
                span.insert(bits_of(image, n));
            }
        }
        span.contains(&bits_of(chain, n))
    }

    pub fn is_cycle(&self, chain: &[usize]) -> bool {
        let n = self.gens.len();
        let d = self.boundary();
        let mut acc = vec![0u64; words(n)];
        for &k in chain {
            xor(&mut acc, &bits_of(&d[k], n));
        }
        acc.iter().all(|&w| w == 0)
    }
}

/// `min` over translates of the grading of the nonzero image of the tower
/// generator in the quotient `{max(i, j) >= 0}`.
pub fn dense_d_plus(c: &Dense) -> i64 {
    let h = c.homology_dimensions();
    assert_eq!(
        h.values().sum::<usize>(),
        1,
        "oracle needs a standard complex"
    );
    let (&m, _) = h.iter().next().unwrap();
    let generator = c.homology_basis(m).remove(0);
    let extent = c
        .gens
        .iter()
        .flat_map(|&(i, j, _)| [i.abs(), j.abs()])
        .max()
        .unwrap_or(0);
    let w = extent + 3;
    let mut best: Option<i64> = None;
    for l in -w..=w {
        let (q, map) = c.restrict(|i, j| (i + l).max(j + l) >= 0);
        let image: Vec<usize> = generator.iter().filter_map(|&k| map[k]).collect();
        if image.is_empty() || q.is_boundary(&image) {
            continue;
        }
        assert!(q.is_cycle(&image));
        let grading = m + 2 * l;
        best = Some(best.map_or(grading, |b: i64| b.min(grading)));
    }
    best.expect("tower image found in the window")
}

pub fn dense_d_minus(c: &Dense) -> i64 {
    -dense_d_plus(&c.mirror())
}

/// Dense rank of a GF(2) matrix given as rows of 0/1.
pub fn dense_rank(rows: &[Vec<bool>]) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut span = Span::new(cols);
    rows.iter()
        .filter(|r| {
            let idx: Vec<usize> = r
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(k, _)| k)
                .collect();
            span.insert(bits_of(&idx, cols))
        })
        .count()
}

fn words(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

fn bits_of(idx: &[usize], n: usize) -> Vec<u64> {
    let mut v = vec![0u64; words(n)];
    for &k in idx {
        v[k / 64] ^= 1 << (k % 64);
    }
    v
}

fn ones(v: &[u64]) -> Vec<usize> {
    let mut out = Vec::new();
    for (w, &word) in v.iter().enumerate() {
        for b in 0..64 {
            if word >> b & 1 == 1 {
                out.push(w * 64 + b);
            }
        }
    }
    out
}

fn xor(a: &mut [u64], b: &[u64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x ^= y;
    }
}

fn lowest(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
}

struct Span {
    pivots: HashMap<usize, Vec<u64>>,
}

impl Span {
    fn new(_n: usize) -> Self {
        Span {
            pivots: HashMap::new(),
        }
    }

    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        while let Some(p) = lowest(&v) {
            match self.pivots.get(&p) {
                Some(row) => xor(&mut v, row),
                None => break,
            }
        }
        v
    }

    fn contains(&self, v: &[u64]) -> bool {
        lowest(&self.reduce(v.to_vec())).is_none()
    }

    fn insert(&mut self, v: Vec<u64>) -> bool {
        let v = self.reduce(v);
        match lowest(&v) {
            Some(p) => {
                self.pivots.insert(p, v);
                true
            }
            None => false,
        }
    }
}

/// Kernel of the boundary restricted to the span of `basis`.
fn kernel(d: &[Vec<usize>], basis: &[usize], n: usize) -> Vec<Vec<u64>> {
    let mut pivots: HashMap<usize, (Vec<u64>, Vec<u64>)> = HashMap::new();
    let mut out = Vec::new();
    for &k in basis {
        let mut image = bits_of(&d[k], n);
        let mut tag = bits_of(&[k], n);
        loop {
            match lowest(&image) {
                None => {
                    out.push(tag);
                    break;
                }
                Some(p) => match pivots.get(&p) {
                    Some((pi, pt)) => {
                        xor(&mut image, pi);
                        xor(&mut tag, pt);
                    }
                    None => {
                        pivots.insert(p, (image, tag));
                        break;
                    }
                },
            }
        }
    }
    out
}
