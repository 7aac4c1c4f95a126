//! Buchberger's algorithm with Gebauer–Möller pair elimination and sugar selection.
//!
//! One engine serves ideals (rank-one modules) and submodules of `P^r`.
//! Optionally every basis element carries its representation in terms of the
//! input generators, and for homogeneous input the computation can be
//! truncated at a degree bound.

use sha2::{Digest, Sha256};

use super::vector::{FreeModule, Term, Vector};
use crate::arith::FieldElement;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};

/// Default budget of S-pair reductions.
pub const DEFAULT_PAIR_LIMIT: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerOptions {
    /// Maximal number of S-pair reductions before giving up.
    pub pair_limit: u64,
    /// Only compute the basis up to this degree (homogeneous input only).
    pub degree_bound: Option<i64>,
    /// Track each basis element as a combination of the inputs.
    pub track_cofactors: bool,
}

impl Default for GroebnerOptions {
    fn default() -> Self {
        GroebnerOptions {
            pair_limit: DEFAULT_PAIR_LIMIT,
            degree_bound: None,
            track_cofactors: false,
        }
    }
}

impl GroebnerOptions {
    pub fn with_pair_limit(mut self, limit: u64) -> Self {
        self.pair_limit = limit;
        self
    }

    pub fn with_degree_bound(mut self, bound: Option<i64>) -> Self {
        self.degree_bound = bound;
        self
    }

    pub fn with_cofactors(mut self) -> Self {
        self.track_cofactors = true;
        self
    }
}

/// Result of a normal-form computation against a list of reducers.
pub(crate) struct Reduction {
    pub remainder: Vector,
    /// Quotient terms per reducer (unsorted, possibly repeated monomials).
    pub quotients: Vec<Vec<(Monomial, FieldElement)>>,
    pub sugar: i64,
}

/// Fully reduces `f` by `reducers` (index into `elements`).
pub(crate) fn reduce(
    f: &Vector,
    mut sugar: i64,
    elements: &[Vector],
    sugars: &[i64],
    reducers: &[usize],
    module: &FreeModule,
) -> Reduction {
    let mut quotients = vec![Vec::new(); elements.len()];
    let mut rest = f.clone();
    let mut start = 0;
    let mut remainder = Vec::new();
    while start < rest.terms.len() {
        let lt = &rest.terms[start];
        let divisor = reducers.iter().copied().find(|&k| {
            let g = elements[k].lead().expect("nonzero reducer");
            g.comp == lt.comp && g.mono.divides(&lt.mono)
        });
        match divisor {
            None => {
                remainder.push(lt.clone());
                start += 1;
            }
            Some(k) => {
                let g = &elements[k];
                let glead = g.lead().expect("nonzero reducer");
                let m = lt.mono.div(&glead.mono);
                let c = &lt.coeff / &glead.coeff;
                sugar = sugar.max(sugars[k] + m.degree() as i64);
                rest = rest.add_scaled_from(start + 1, &g.terms[1..], &m, &-&c, module);
                start = 0;
                quotients[k].push((m, c));
            }
        }
    }
    Reduction {
        remainder: Vector { terms: remainder },
        quotients,
        sugar,
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    comp: usize,
    lcm: Monomial,
    sugar: i64,
    degree: i64,
}

struct State<'a> {
    module: &'a FreeModule,
    cof_module: FreeModule,
    opts: &'a GroebnerOptions,
    elements: Vec<Vector>,
    sugars: Vec<i64>,
    reps: Vec<Vector>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    reductions: u64,
}

impl State<'_> {
    fn lead(&self, k: usize) -> &Term {
        self.elements[k].lead().expect("basis elements are nonzero")
    }

    fn active_indices(&self) -> Vec<usize> {
        (0..self.elements.len()).filter(|&k| self.active[k]).collect()
    }

    fn make_pair(&self, i: usize, j: usize) -> Pair {
        let (li, lj) = (self.lead(i), self.lead(j));
        let lcm = li.mono.lcm(&lj.mono);
        let d = lcm.degree() as i64;
        let sugar = (self.sugars[i] + d - li.mono.degree() as i64)
            .max(self.sugars[j] + d - lj.mono.degree() as i64);
        Pair {
            i,
            j,
            comp: li.comp,
            degree: self.module.term_degree(li.comp, &lcm),
            lcm,
            sugar,
        }
    }

    fn is_ideal(&self) -> bool {
        self.module.rank() == 1
    }

    /// Gebauer–Möller update after appending element `h`.
    fn update(&mut self, h: usize) {
        let (hcomp, hmono) = {
            let t = self.lead(h);
            (t.comp, t.mono.clone())
        };
        let candidates: Vec<usize> = self
            .active_indices()
            .into_iter()
            .filter(|&g| self.lead(g).comp == hcomp)
            .collect();
        let lcms: Vec<Monomial> = candidates
            .iter()
            .map(|&g| self.lead(g).mono.lcm(&hmono))
            .collect();
        let coprime: Vec<bool> = candidates
            .iter()
            .map(|&g| self.is_ideal() && self.lead(g).mono.is_coprime(&hmono))
            .collect();

        let mut kept: Vec<usize> = Vec::new();
        for idx in 0..candidates.len() {
            let l = &lcms[idx];
            let dominated = (idx + 1..candidates.len())
                .chain(kept.iter().copied())
                .any(|o| lcms[o].divides(l));
            if coprime[idx] || !dominated {
                kept.push(idx);
            }
        }

        self.pairs.retain(|p| {
            if p.comp != hcomp || !hmono.divides(&p.lcm) {
                return true;
            }
            let li = self.elements[p.i].lead().unwrap().mono.lcm(&hmono);
            let lj = self.elements[p.j].lead().unwrap().mono.lcm(&hmono);
            li == p.lcm || lj == p.lcm
        });
        for idx in kept {
            if coprime[idx] {
                continue;
            }
            let pair = self.make_pair(candidates[idx], h);
            if self.opts.degree_bound.is_some_and(|b| pair.degree > b) {
                continue;
            }
            self.pairs.push(pair);
        }

        for g in self.active_indices() {
            let t = self.lead(g);
            if t.comp == hcomp && hmono.divides(&t.mono) {
                self.active[g] = false;
            }
        }
        self.active[h] = true;
    }

    fn next_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let module = self.module;
        let best = (0..self.pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&self.pairs[a], &self.pairs[b]);
                p.sugar
                    .cmp(&q.sugar)
                    .then_with(|| module.cmp(p.comp, &p.lcm, q.comp, &q.lcm))
                    .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
            })
            .expect("nonempty");
        Some(self.pairs.swap_remove(best))
    }

    /// Reduces `v` against the active basis and inserts the monic remainder.
    fn insert(&mut self, v: Vector, sugar: i64, rep: Vector) {
        let reducers = self.active_indices();
        let red = reduce(&v, sugar, &self.elements, &self.sugars, &reducers, self.module);
        if red.remainder.is_zero() {
            return;
        }
        let mut rep = rep;
        if self.opts.track_cofactors {
            for (k, q) in red.quotients.iter().enumerate() {
                if !q.is_empty() {
                    let neg: Vec<_> = q.iter().map(|(m, c)| (m.clone(), -c)).collect();
                    rep = rep.add_poly_times(&neg, &self.reps[k], &self.cof_module);
                }
            }
        }
        let (h, inv) = red.remainder.monic();
        self.elements.push(h);
        self.sugars.push(red.sugar);
        self.reps.push(if self.opts.track_cofactors {
            rep.scale(&inv)
        } else {
            Vector::zero()
        });
        self.active.push(false);
        self.update(self.elements.len() - 1);
    }

    fn s_vector(&self, p: &Pair) -> (Vector, Vector) {
        let (gi, gj) = (&self.elements[p.i], &self.elements[p.j]);
        let mi = p.lcm.div(&gi.lead().unwrap().mono);
        let mj = p.lcm.div(&gj.lead().unwrap().mono);
        let field = self.module.ring().field();
        let one = field.one();
        let minus = -field.one();
        let s = Vector::zero()
            .add_scaled(gi, &mi, &one, self.module)
            .add_scaled(gj, &mj, &minus, self.module);
        let rep = if self.opts.track_cofactors {
            Vector::zero()
                .add_scaled(&self.reps[p.i], &mi, &one, &self.cof_module)
                .add_scaled(&self.reps[p.j], &mj, &minus, &self.cof_module)
        } else {
            Vector::zero()
        };
        (s, rep)
    }
}

/// A reduced Gröbner basis of a submodule of a free module (ideals have rank one).
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    module: FreeModule,
    pub(crate) elements: Vec<Vector>,
    pub(crate) sugars: Vec<i64>,
    reps: Option<Vec<Vector>>,
    cof_module: FreeModule,
    inputs: Vec<Vector>,
    degree_bound: Option<i64>,
    input_hash: String,
    pair_reductions: u64,
}

pub(crate) fn hash_inputs(module: &FreeModule, inputs: &[Vector]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(module.ring().variables().join(",").as_bytes());
    hasher.update(module.ring().field().to_string().as_bytes());
    hasher.update(module.ring().order().name().as_bytes());
    hasher.update(format!("{:?}{:?}", module.shifts(), module.position()).as_bytes());
    for v in inputs {
        for p in v.to_polys(module) {
            hasher.update(p.to_string().as_bytes());
            hasher.update(b";");
        }
        hasher.update(b"|");
    }
    hex::encode(hasher.finalize())
}

/// Computes a reduced Gröbner basis of the submodule generated by `inputs`.
pub(crate) fn groebner(
    module: &FreeModule,
    inputs: Vec<Vector>,
    opts: &GroebnerOptions,
) -> Result<GroebnerBasis> {
    if opts.degree_bound.is_some() {
        if let Some(bad) = inputs.iter().position(|v| !v.is_homogeneous(module)) {
            return Err(Error::InvalidInput(format!(
                "degree-truncated computation needs homogeneous input; generator {bad} is not"
            )));
        }
    }
    let cof_module = FreeModule::new(module.ring(), inputs.len().max(1));
    let input_hash = hash_inputs(module, &inputs);
    let mut state = State {
        module,
        cof_module,
        opts,
        elements: Vec::new(),
        sugars: Vec::new(),
        reps: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        reductions: 0,
    };

    let mut order: Vec<usize> = (0..inputs.len()).filter(|&i| !inputs[i].is_zero()).collect();
    order.sort_by(|&a, &b| {
        let (da, db) = (
            inputs[a].max_degree(module).unwrap(),
            inputs[b].max_degree(module).unwrap(),
        );
        da.cmp(&db).then(a.cmp(&b))
    });
    let one = module.ring().field().one();
    for i in order {
        let v = &inputs[i];
        let sugar = v.max_degree(module).unwrap();
        if opts.degree_bound.is_some_and(|b| sugar > b) {
            continue;
        }
        let rep = if opts.track_cofactors {
            Vector::unit(&state.cof_module, i, one.clone())
        } else {
            Vector::zero()
        };
        state.insert(v.clone(), sugar, rep);
    }

    while let Some(pair) = state.next_pair() {
        state.reductions += 1;
        if state.reductions > opts.pair_limit {
            return Err(Error::ResourceLimitExceeded {
                limit: opts.pair_limit,
            });
        }
        let (s, rep) = state.s_vector(&pair);
        if s.is_zero() {
            continue;
        }
        state.insert(s, pair.sugar, rep);
    }

    // Interreduce the (minimal) active set.
    let mut active = state.active_indices();
    active.sort_by(|&a, &b| {
        let (ta, tb) = (state.lead(a), state.lead(b));
        module.cmp(ta.comp, &ta.mono, tb.comp, &tb.mono)
    });
    let mut elements = Vec::with_capacity(active.len());
    let mut sugars = Vec::with_capacity(active.len());
    let mut reps = Vec::with_capacity(active.len());
    for &k in &active {
        let others: Vec<usize> = active.iter().copied().filter(|&o| o != k).collect();
        let g = &state.elements[k];
        let tail = Vector {
            terms: g.terms[1..].to_vec(),
        };
        let red = reduce(&tail, state.sugars[k], &state.elements, &state.sugars, &others, module);
        let mut terms = vec![g.terms[0].clone()];
        terms.extend(red.remainder.terms);
        elements.push(Vector { terms });
        sugars.push(red.sugar);
        if opts.track_cofactors {
            let mut rep = state.reps[k].clone();
            for (o, q) in red.quotients.iter().enumerate() {
                if !q.is_empty() {
                    let neg: Vec<_> = q.iter().map(|(m, c)| (m.clone(), -c)).collect();
                    rep = rep.add_poly_times(&neg, &state.reps[o], &state.cof_module);
                }
            }
            reps.push(rep);
        }
    }

    Ok(GroebnerBasis {
        module: module.clone(),
        elements,
        sugars,
        reps: opts.track_cofactors.then_some(reps),
        cof_module: state.cof_module,
        inputs,
        degree_bound: opts.degree_bound,
        input_hash,
        pair_reductions: state.reductions,
    })
}

/// Normal form of a module element with quotients per basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleNormalForm {
    pub remainder: Vec<Polynomial>,
    /// `f = sum quotients[k] * basis[k] + remainder`.
    pub quotients: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_ideal(&self) -> bool {
        self.module.rank() == 1
    }

    pub fn degree_bound(&self) -> Option<i64> {
        self.degree_bound
    }

    pub fn input_hash(&self) -> &str {
        &self.input_hash
    }

    pub fn pair_reductions(&self) -> u64 {
        self.pair_reductions
    }

    /// Basis elements as coordinate vectors.
    pub fn elements(&self) -> Vec<Vec<Polynomial>> {
        self.elements.iter().map(|v| v.to_polys(&self.module)).collect()
    }

    /// Basis elements of an ideal basis as polynomials.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        assert!(self.is_ideal());
        self.elements
            .iter()
            .map(|v| v.to_polys(&self.module).remove(0))
            .collect()
    }

    pub fn inputs(&self) -> Vec<Vec<Polynomial>> {
        self.inputs.iter().map(|v| v.to_polys(&self.module)).collect()
    }

    /// Leading terms `(component, monomial)` of the basis.
    pub fn leading_monomials(&self) -> Vec<(usize, Monomial)> {
        self.elements
            .iter()
            .map(|v| {
                let t = v.lead().unwrap();
                (t.comp, t.mono.clone())
            })
            .collect()
    }

    /// Degrees of the basis elements (homogeneous input).
    pub fn degrees(&self) -> Vec<i64> {
        self.elements
            .iter()
            .map(|v| v.degree(&self.module).unwrap())
            .collect()
    }

    /// True when the basis contains a unit vector with constant coefficient (ideal: `1`).
    pub fn contains_unit(&self) -> bool {
        self.is_ideal() && self.elements.iter().any(|v| v.lead().unwrap().mono.is_one())
    }

    /// Representation of each basis element in terms of the inputs, if tracked.
    pub fn cofactor_matrix(&self) -> Option<Vec<Vec<Polynomial>>> {
        let n = self.inputs.len();
        self.reps.as_ref().map(|reps| {
            reps.iter()
                .map(|r| {
                    let mut polys = r.to_polys(&self.cof_module);
                    polys.truncate(n);
                    polys.resize(n, Polynomial::zero(self.module.ring()));
                    polys
                })
                .collect()
        })
    }

    pub(crate) fn reduce_vector(&self, v: &Vector) -> Reduction {
        let all: Vec<usize> = (0..self.elements.len()).collect();
        let sugar = v.max_degree(&self.module).unwrap_or(0);
        reduce(v, sugar, &self.elements, &self.sugars, &all, &self.module)
    }

    /// Normal form of a vector in the ambient free module.
    pub fn normal_form_vector(&self, f: &[Polynomial]) -> ModuleNormalForm {
        assert_eq!(f.len(), self.module.rank());
        let v = Vector::from_polys(&self.module, f);
        let red = self.reduce_vector(&v);
        let ring = self.module.ring();
        ModuleNormalForm {
            remainder: red.remainder.to_polys(&self.module),
            quotients: red
                .quotients
                .into_iter()
                .map(|q| Polynomial::from_terms(ring, q))
                .collect(),
        }
    }

    /// Expresses `sum quotients[k] * basis[k]` through the original inputs.
    /// Requires tracked cofactors.
    pub fn lift_to_inputs(&self, quotients: &[Polynomial]) -> Option<Vec<Polynomial>> {
        let reps = self.reps.as_ref()?;
        let mut acc = Vector::zero();
        for (q, rep) in quotients.iter().zip(reps) {
            acc = acc.add_poly_times(q.terms(), rep, &self.cof_module);
        }
        let mut polys = acc.to_polys(&self.cof_module);
        polys.truncate(self.inputs.len());
        polys.resize(self.inputs.len(), Polynomial::zero(self.module.ring()));
        Some(polys)
    }

    /// Re-checks Buchberger's criterion: every S-vector reduces to zero.
    /// For truncated bases only pairs within the degree bound are checked.
    /// Returns the first offending pair.
    pub fn verify_buchberger_criterion(&self) -> std::result::Result<(), (usize, usize)> {
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let (a, b) = (self.elements[i].lead().unwrap(), self.elements[j].lead().unwrap());
                if a.comp != b.comp {
                    continue;
                }
                let lcm = a.mono.lcm(&b.mono);
                if self
                    .degree_bound
                    .is_some_and(|d| self.module.term_degree(a.comp, &lcm) > d)
                {
                    continue;
                }
                let s = Vector::zero()
                    .add_scaled(&self.elements[i], &lcm.div(&a.mono), &b.coeff, &self.module)
                    .add_scaled(&self.elements[j], &lcm.div(&b.mono), &-&a.coeff, &self.module);
                if !self.reduce_vector(&s).remainder.is_zero() {
                    return Err((i, j));
                }
            }
        }
        Ok(())
    }

    /// Checks that the basis is reduced and monic.
    pub fn is_reduced(&self) -> bool {
        self.elements.iter().enumerate().all(|(i, v)| {
            v.lead().unwrap().coeff.is_one()
                && v.terms.iter().all(|t| {
                    self.elements.iter().enumerate().all(|(j, w)| {
                        let l = w.lead().unwrap();
                        i == j || l.comp != t.comp || !l.mono.divides(&t.mono)
                    })
                })
        })
    }

    /// Checks that every tracked representation reproduces its basis element.
    pub fn verify_cofactors(&self) -> bool {
        let Some(reps) = &self.reps else {
            return true;
        };
        reps.iter().zip(&self.elements).all(|(rep, g)| {
            let polys = rep.to_polys(&self.cof_module);
            let mut acc = Vector::zero();
            for (p, input) in polys.iter().zip(&self.inputs) {
                acc = acc.add_poly_times(p.terms(), input, &self.module);
            }
            acc == *g
        })
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.module == other.module && self.elements == other.elements
    }
}
