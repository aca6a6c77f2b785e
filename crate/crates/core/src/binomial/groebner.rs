//! Buchberger's algorithm for pure-difference binomial ideals.
//!
//! Pairs are selected by the normal strategy and filtered with the
//! Gebauer–Möller criteria. The normal form of a monomial modulo such a basis
//! is again a monomial, so `u - v` reduces to zero exactly when `u` and `v`
//! have the same normal form.

use std::collections::BTreeSet;

use super::{divides, Binomial, Monomial, MonomialOrder};

#[derive(Clone, Debug)]
struct Elem {
    lead: Vec<u32>,
    trail: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    degree: u128,
    j: usize,
    i: usize,
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Incrementally maintained Gröbner basis.
///
/// After [`GroebnerBuilder::complete`] the active elements form a Gröbner
/// basis of everything added so far.
#[derive(Clone, Debug)]
pub struct GroebnerBuilder {
    order: MonomialOrder,
    elems: Vec<Elem>,
    active: Vec<usize>,
    pairs: BTreeSet<Pair>,
}

impl GroebnerBuilder {
    pub fn new(order: MonomialOrder) -> Self {
        GroebnerBuilder {
            order,
            elems: Vec::new(),
            active: Vec::new(),
            pairs: BTreeSet::new(),
        }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn reduce_monomial(&self, m: &[u32]) -> Vec<u32> {
        let mut m = m.to_vec();
        'outer: loop {
            for &k in &self.active {
                let g = &self.elems[k];
                if divides(&g.lead, &m) {
                    for ((x, l), t) in m.iter_mut().zip(&g.lead).zip(&g.trail) {
                        *x = *x - l + t;
                    }
                    continue 'outer;
                }
            }
            return m;
        }
    }

    /// Reduces `b` against the current basis; `None` means it reduced to zero.
    pub fn reduce(&self, b: &Binomial) -> Option<Binomial> {
        let p = self.reduce_monomial(&b.plus().0);
        let q = self.reduce_monomial(&b.minus().0);
        Binomial::new(Monomial(p), Monomial(q)).map(|r| r.oriented(&self.order))
    }

    /// Adds a generator without completing the basis. Returns `false` when it
    /// already reduces to zero.
    pub fn add(&mut self, b: &Binomial) -> bool {
        assert_eq!(
            b.len(),
            self.order.size(),
            "binomial over a different block"
        );
        match self.reduce(b) {
            Some(h) => {
                self.insert(Elem {
                    lead: h.plus.0,
                    trail: h.minus.0,
                });
                true
            }
            None => false,
        }
    }

    /// Runs S-pair reduction until every pair has been processed.
    pub fn complete(&mut self) {
        while let Some(pair) = self.pairs.pop_first() {
            let (f, g) = (&self.elems[pair.i], &self.elems[pair.j]);
            let l = lcm(&f.lead, &g.lead);
            let s1: Vec<u32> = l
                .iter()
                .zip(&f.lead)
                .zip(&f.trail)
                .map(|((x, a), t)| x - a + t)
                .collect();
            let s2: Vec<u32> = l
                .iter()
                .zip(&g.lead)
                .zip(&g.trail)
                .map(|((x, a), t)| x - a + t)
                .collect();
            let r1 = self.reduce_monomial(&s1);
            let r2 = self.reduce_monomial(&s2);
            if r1 == r2 {
                continue;
            }
            let h = Binomial::new(Monomial(r1), Monomial(r2))
                .expect("distinct normal forms")
                .oriented(&self.order);
            self.insert(Elem {
                lead: h.plus.0,
                trail: h.minus.0,
            });
        }
    }

    /// Gebauer–Möller update for a new element whose leading monomial is not
    /// divisible by any active leading monomial.
    fn insert(&mut self, h: Elem) {
        let hi = self.elems.len();
        let hlead = h.lead.clone();
        self.elems.push(h);

        // candidate pairs (g, h), filtered by the chain criterion
        let mut remaining: Vec<(usize, Vec<u32>, bool)> = self
            .active
            .iter()
            .map(|&g| {
                let gl = &self.elems[g].lead;
                (g, lcm(gl, &hlead), coprime(gl, &hlead))
            })
            .collect();
        remaining.reverse();
        let mut kept: Vec<(usize, Vec<u32>, bool)> = Vec::new();
        while let Some((g, l, is_coprime)) = remaining.pop() {
            let dominated = remaining
                .iter()
                .chain(kept.iter())
                .any(|(_, other, _)| divides(other, &l));
            if is_coprime || !dominated {
                kept.push((g, l, is_coprime));
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(_, _, is_coprime)| !is_coprime)
            .map(|(g, l, _)| Pair {
                degree: self.order.degree(&l),
                j: hi,
                i: g,
            })
            .collect();

        // old pairs eliminated by the new leading monomial
        let elems = &self.elems;
        self.pairs.retain(|p| {
            let fl = &elems[p.i].lead;
            let gl = &elems[p.j].lead;
            let l = lcm(fl, gl);
            !(divides(&hlead, &l) && lcm(fl, &hlead) != l && lcm(gl, &hlead) != l)
        });
        self.pairs.extend(new_pairs);

        self.active.retain(|&g| !divides(&hlead, &elems[g].lead));
        self.active.push(hi);
    }

    /// The reduced Gröbner basis of the current (completed) ideal, sorted by
    /// leading monomial, smallest first.
    pub fn reduced_basis(&self) -> GroebnerBasis {
        let mut out: Vec<Binomial> = self
            .active
            .iter()
            .map(|&k| {
                let e = &self.elems[k];
                let trail = self.reduce_monomial(&e.trail);
                Binomial::new(Monomial(e.lead.clone()), Monomial(trail))
                    .expect("trail is below lead")
            })
            .collect();
        out.sort_by(|a, b| {
            self.order
                .compare(&a.plus().0, &b.plus().0)
                .then_with(|| a.cmp(b))
        });
        GroebnerBasis {
            order: self.order.clone(),
            elements: out,
        }
    }
}

/// A reduced Gröbner basis together with its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    elements: Vec<Binomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Binomial> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn reduce_monomial(&self, m: &Monomial) -> Monomial {
        let mut m = m.0.clone();
        'outer: loop {
            for g in &self.elements {
                if divides(&g.plus().0, &m) {
                    for ((x, l), t) in m.iter_mut().zip(&g.plus().0).zip(&g.minus().0) {
                        *x = *x - l + t;
                    }
                    continue 'outer;
                }
            }
            return Monomial(m);
        }
    }

    pub fn contains(&self, b: &Binomial) -> bool {
        self.reduce_monomial(b.plus()) == self.reduce_monomial(b.minus())
    }

    /// Continues from this basis; adding generators and completing yields a
    /// basis of the larger ideal.
    pub fn to_builder(&self) -> GroebnerBuilder {
        let mut b = GroebnerBuilder::new(self.order.clone());
        for g in &self.elements {
            b.add(g);
        }
        b
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Binomial], order: &MonomialOrder) -> GroebnerBasis {
    let mut builder = GroebnerBuilder::new(order.clone());
    for g in gens {
        builder.add(g);
    }
    builder.complete();
    builder.reduced_basis()
}

/// Normal form of `b` modulo `basis`; `None` is the zero signal.
pub fn normal_form(b: &Binomial, basis: &GroebnerBasis) -> Option<Binomial> {
    let p = basis.reduce_monomial(b.plus());
    let q = basis.reduce_monomial(b.minus());
    Binomial::new(p, q).map(|r| r.oriented(basis.order()))
}
