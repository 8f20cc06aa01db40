use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::par::{self, Execution};
use crate::rational::Rational;
use crate::rootsys::{fundamental_weights, InnerForm, RootSystem, WeightVec};
use crate::weyl::{OrbitElement, ReducedWord};

const ROOT: u32 = u32::MAX;

/// labels of a new orbit point and the reflection that produced it
type Child = (Box<[i32]>, u8);

/// Compact Weyl orbit: each point is stored by its Dynkin labels (scaled to
/// integers) together with a BFS parent pointer, so words and coordinates
/// are rebuilt on demand.
///
/// Enumeration is a breadth-first closure under simple reflections. Each
/// level's children are computed (possibly in parallel) in frontier order
/// and simple-root order, then deduplicated sequentially, so the element
/// order is the same for every [`Execution`].
#[derive(Debug, Clone)]
pub struct OrbitTable {
    rank: usize,
    labels: Vec<i32>,
    parent: Vec<u32>,
    letter: Vec<u8>,
    /// labels are stored multiplied by this
    denom: BigInt,
    /// component of the seed orthogonal to every root
    fixed: WeightVec,
    fundamental: Vec<WeightVec>,
    form: InnerForm,
    max_abs_label: i64,
}

impl OrbitTable {
    pub fn enumerate(rs: &RootSystem, seed: &WeightVec, cap: usize) -> Result<Self> {
        Self::enumerate_with(rs, seed, cap, Execution::default())
    }

    pub fn enumerate_with(
        rs: &RootSystem,
        seed: &WeightVec,
        cap: usize,
        exec: Execution,
    ) -> Result<Self> {
        if cap == 0 {
            return Err(Error::InvalidParameter("orbit cap must be at least 1".into()));
        }
        let rank = rs.rank();
        let fundamental = fundamental_weights(rs);
        let labels = rs.dynkin_labels(seed)?;
        let denom = labels
            .iter()
            .fold(BigInt::one(), |acc, l| acc.lcm(l.denom()));
        let seed_labels: Vec<i32> = labels
            .iter()
            .map(|l| (l * &denom).to_integer().to_i32().ok_or(Error::ArithmeticOverflow))
            .collect::<Result<_>>()?;
        let in_span = labels
            .iter()
            .zip(&fundamental)
            .fold(WeightVec::zero(rs.basis()), |acc, (l, w)| acc.add_scaled(l, w));
        let fixed = seed - &in_span;

        let cartan = rs.cartan();
        let mut map: HashMap<Box<[i32]>, u32> = HashMap::new();
        let mut table = OrbitTable {
            rank,
            labels: seed_labels.clone(),
            parent: vec![ROOT],
            letter: vec![u8::MAX],
            denom,
            fixed,
            fundamental,
            form: rs.form().clone(),
            max_abs_label: 0,
        };
        map.insert(seed_labels.into_boxed_slice(), 0);

        let (mut start, mut end) = (0usize, 1usize);
        while start < end {
            let labels = &table.labels;
            let children: Vec<Result<Vec<Child>>> =
                par::map_range(exec, start, end, |p| {
                    let lab = &labels[p * rank..(p + 1) * rank];
                    let mut out = Vec::new();
                    for i in 0..rank {
                        let li = i64::from(lab[i]);
                        if li == 0 {
                            continue;
                        }
                        let child: Option<Box<[i32]>> = (0..rank)
                            .map(|j| (i64::from(lab[j]) - li * cartan[i][j]).try_into().ok())
                            .collect();
                        out.push((child.ok_or(Error::ArithmeticOverflow)?, i as u8));
                    }
                    Ok(out)
                });
            for (offset, kids) in children.into_iter().enumerate() {
                let p = (start + offset) as u32;
                for (child, i) in kids? {
                    if map.contains_key(&child) {
                        continue;
                    }
                    let idx = table.parent.len();
                    if idx >= cap {
                        return Err(Error::OrbitCapExceeded { cap });
                    }
                    table.labels.extend_from_slice(&child);
                    table.parent.push(p);
                    table.letter.push(i);
                    map.insert(child, idx as u32);
                }
            }
            start = end;
            end = table.parent.len();
        }
        table.max_abs_label = table.labels.iter().map(|&l| i64::from(l).abs()).max().unwrap_or(0);
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Dynkin labels of element `i`, multiplied by [`Self::label_denominator`].
    pub fn labels(&self, i: usize) -> &[i32] {
        &self.labels[i * self.rank..(i + 1) * self.rank]
    }

    pub fn label_denominator(&self) -> &BigInt {
        &self.denom
    }

    /// BFS witness word `[i1, .., ik]`, with element `i` equal to
    /// `s_i1 ... s_ik . seed`.
    pub fn word(&self, i: usize) -> ReducedWord {
        let mut letters = Vec::new();
        let mut idx = i;
        while self.parent[idx] != ROOT {
            letters.push(self.letter[idx] as usize);
            idx = self.parent[idx] as usize;
        }
        ReducedWord(letters)
    }

    pub fn point(&self, i: usize) -> WeightVec {
        let denom = Rational::from_integer(self.denom.clone());
        self.labels(i)
            .iter()
            .zip(&self.fundamental)
            .fold(self.fixed.clone(), |acc, (&l, w)| {
                if l == 0 {
                    acc
                } else {
                    acc.add_scaled(&(Rational::from_integer(l.into()) / &denom), w)
                }
            })
    }

    pub fn element(&self, i: usize) -> OrbitElement {
        OrbitElement {
            point: self.point(i),
            word: self.word(i),
        }
    }

    /// Integer score proportional (with a positive factor) to
    /// `<w.seed, target>`.
    pub fn pairing_score(&self, target: &WeightVec) -> Result<IntScore> {
        self.form.basis().check(&target.basis())?;
        let constant = self.form.eval_unchecked(&self.fixed, target);
        let denom = Rational::from_integer(self.denom.clone());
        let constant = constant * &denom;
        let linear: Vec<Rational> = self
            .fundamental
            .iter()
            .map(|w| self.form.eval_unchecked(w, target))
            .collect();
        IntScore::new(constant, linear, None, self.rank, self.max_abs_label)
    }

    /// Integer score proportional (with a positive factor) to
    /// `|w.seed - target|^2`.
    pub fn distance_score(&self, target: &WeightVec) -> Result<IntScore> {
        self.form.basis().check(&target.basis())?;
        let offset = &self.fixed - target;
        let denom = Rational::from_integer(self.denom.clone());
        let constant = self.form.eval_unchecked(&offset, &offset) * &denom * &denom;
        let two_d = Rational::from_integer(BigInt::from(2)) * &denom;
        let linear: Vec<Rational> = self
            .fundamental
            .iter()
            .map(|w| self.form.eval_unchecked(w, &offset) * &two_d)
            .collect();
        let quad: Matrix = self
            .fundamental
            .iter()
            .map(|a| {
                self.fundamental
                    .iter()
                    .map(|b| self.form.eval_unchecked(a, b))
                    .collect()
            })
            .collect();
        IntScore::new(constant, linear, Some(quad), self.rank, self.max_abs_label)
    }

    pub fn score(&self, s: &IntScore, i: usize) -> i128 {
        s.eval(self.labels(i))
    }

    /// Index of the largest score; ties go to the earliest element.
    pub fn argmax(&self, s: &IntScore, exec: Execution) -> usize {
        par::argmax(exec, self.len(), |i| Some(self.score(s, i)))
            .map(|(_, i)| i)
            .expect("orbit is never empty")
    }

    /// Index of the smallest score; ties go to the earliest element.
    pub fn argmin(&self, s: &IntScore, exec: Execution) -> usize {
        par::argmax(exec, self.len(), |i| Some(-self.score(s, i)))
            .map(|(_, i)| i)
            .expect("orbit is never empty")
    }

    /// Largest score among elements accepted by `keep`.
    pub fn argmax_where<F>(&self, s: &IntScore, exec: Execution, keep: F) -> Option<usize>
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        par::argmax(exec, self.len(), |i| keep(i).then(|| self.score(s, i))).map(|(_, i)| i)
    }

    pub fn argmin_where<F>(&self, s: &IntScore, exec: Execution, keep: F) -> Option<usize>
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        par::argmax(exec, self.len(), |i| keep(i).then(|| -self.score(s, i))).map(|(_, i)| i)
    }

    pub fn filter<F>(&self, exec: Execution, keep: F) -> Vec<usize>
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        par::filter_indices(exec, self.len(), keep)
    }
}

/// A linear or quadratic polynomial in the integer labels with `i128`
/// coefficients, sized so it cannot overflow on the table it was built for.
#[derive(Debug, Clone)]
pub struct IntScore {
    constant: i128,
    linear: Vec<i128>,
    quad: Option<Vec<i128>>,
    rank: usize,
}

impl IntScore {
    fn new(
        constant: Rational,
        linear: Vec<Rational>,
        quad: Option<Matrix>,
        rank: usize,
        max_label: i64,
    ) -> Result<Self> {
        let lcm = std::iter::once(&constant)
            .chain(&linear)
            .chain(quad.iter().flatten().flatten())
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let to_int = |q: &Rational| -> BigInt { (q * Rational::from_integer(lcm.clone())).to_integer() };
        let c = to_int(&constant);
        let lin: Vec<BigInt> = linear.iter().map(to_int).collect();
        let qd: Option<Vec<BigInt>> =
            quad.as_ref().map(|m| m.iter().flatten().map(to_int).collect());

        let big_max = |v: &[BigInt]| v.iter().map(|x| x.abs()).max().unwrap_or_else(BigInt::zero);
        let m = BigInt::from(max_label);
        let r = BigInt::from(rank);
        let mut bound = c.abs() + &r * &m * big_max(&lin);
        if let Some(q) = &qd {
            bound += &r * &r * &m * &m * big_max(q);
        }
        if bound >= BigInt::from(i128::MAX >> 2) {
            return Err(Error::ArithmeticOverflow);
        }
        let narrow = |x: &BigInt| x.to_i128().expect("bounded above");
        Ok(IntScore {
            constant: narrow(&c),
            linear: lin.iter().map(narrow).collect(),
            quad: qd.map(|q| q.iter().map(narrow).collect()),
            rank,
        })
    }

    pub fn eval(&self, labels: &[i32]) -> i128 {
        let mut s = self.constant;
        for (l, a) in labels.iter().zip(&self.linear) {
            s += i128::from(*l) * a;
        }
        if let Some(q) = &self.quad {
            for (j, lj) in labels.iter().enumerate() {
                if *lj == 0 {
                    continue;
                }
                let row = &q[j * self.rank..(j + 1) * self.rank];
                let mut t = 0i128;
                for (lk, qjk) in labels.iter().zip(row) {
                    t += i128::from(*lk) * qjk;
                }
                s += i128::from(*lj) * t;
            }
        }
        s
    }
}
