//! Finite partial groups: a carrier with inversion, a binary product table,
//! and a decidable word-domain oracle.
//!
//! Products of longer words are evaluated by left-folding the binary table;
//! the binary table is the only stored product data. Axiom verification is
//! bounded-exhaustive over all words up to a configurable length, with all
//! two- and three-part splittings, and reports carry an `exhaustive` flag
//! that is set only when the oracle itself is a bounded explicit set within
//! the sweep.

use crate::error::{Error, Result};
use crate::oracle::{DomainOracle, UNDEF};
use crate::report::{AxiomCheck, AxiomId, Evidence, VerificationReport};
use crate::sets::ElementSet;
use crate::words::{CarrierId, ElementId, Word};
use rayon::prelude::*;

/// Named, indexed carrier set.
#[derive(Debug, Clone)]
pub struct Carrier {
    id: CarrierId,
    names: Vec<String>,
}

impl Carrier {
    pub fn new(names: Vec<String>) -> Carrier {
        Carrier {
            id: CarrierId::fresh(),
            names,
        }
    }

    pub fn id(&self) -> CarrierId {
        self.id
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, e: ElementId) -> &str {
        &self.names[e.index()]
    }
}

/// Outcome of a subgroup check, with the strength of the domain evidence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubgroupCheck {
    pub holds: bool,
    pub evidence: Evidence,
}

/// A finite partial group.
#[derive(Debug, Clone)]
pub struct PartialGroup {
    carrier: Carrier,
    identity: u16,
    inv: Vec<u16>,
    /// Row-major `n × n` table; `UNDEF` marks an undefined product.
    binary: Vec<u16>,
    oracle: DomainOracle,
}

impl PartialGroup {
    /// Builds a partial group after structural validation: index ranges, the
    /// oracle accepting the empty word and all single letters, and agreement
    /// between the oracle on two-letter words and the binary table.
    ///
    /// Algebraic laws (involutory inversion, identity behaviour, PG1–PG4) are
    /// deliberately *not* enforced here; candidates that violate them must be
    /// representable so that `verify_axioms` can report the violation.
    pub fn new(
        names: Vec<String>,
        identity: ElementId,
        inv: Vec<ElementId>,
        binary: Vec<Option<ElementId>>,
        oracle: DomainOracle,
    ) -> Result<PartialGroup> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidInput("carrier must be non-empty".into()));
        }
        if n > UNDEF as usize {
            return Err(Error::InvalidInput(format!("carrier too large: {n}")));
        }
        {
            let mut sorted = names.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != n {
                return Err(Error::InvalidInput("duplicate element names".into()));
            }
        }
        if identity.index() >= n {
            return Err(Error::UnknownElement {
                index: identity.index(),
                carrier_len: n,
            });
        }
        if inv.len() != n {
            return Err(Error::InvalidInput(format!(
                "inversion table has {} entries for {} elements",
                inv.len(),
                n
            )));
        }
        for e in &inv {
            if e.index() >= n {
                return Err(Error::UnknownElement {
                    index: e.index(),
                    carrier_len: n,
                });
            }
        }
        if binary.len() != n * n {
            return Err(Error::InvalidInput(format!(
                "binary table has {} entries, expected {}",
                binary.len(),
                n * n
            )));
        }
        let mut table = vec![UNDEF; n * n];
        for (k, e) in binary.iter().enumerate() {
            if let Some(e) = e {
                if e.index() >= n {
                    return Err(Error::UnknownElement {
                        index: e.index(),
                        carrier_len: n,
                    });
                }
                table[k] = e.0;
            }
        }
        if !oracle.accepts(&[]) {
            return Err(Error::InvalidInput(
                "oracle rejects the empty word".into(),
            ));
        }
        for g in 0..n as u16 {
            if !oracle.accepts(&[g]) {
                return Err(Error::InvalidInput(format!(
                    "oracle rejects the single-letter word ({})",
                    names[g as usize]
                )));
            }
        }
        for a in 0..n as u16 {
            for b in 0..n as u16 {
                let accepted = oracle.accepts(&[a, b]);
                let defined = table[a as usize * n + b as usize] != UNDEF;
                if accepted != defined {
                    return Err(Error::InvalidInput(format!(
                        "length-2 domain and binary table disagree at ({}, {})",
                        names[a as usize], names[b as usize]
                    )));
                }
            }
        }
        Ok(PartialGroup {
            carrier: Carrier::new(names),
            identity: identity.0,
            inv: inv.into_iter().map(|e| e.0).collect(),
            binary: table,
            oracle,
        })
    }

    /// A group presented by a total multiplication table; identity and
    /// inverses are located in the table.
    pub fn from_cayley_group(names: Vec<String>, table: Vec<Vec<ElementId>>) -> Result<PartialGroup> {
        let n = names.len();
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidInput("multiplication table must be square".into()));
        }
        let identity = (0..n)
            .find(|&e| {
                (0..n).all(|x| table[e][x].index() == x && table[x][e].index() == x)
            })
            .ok_or_else(|| Error::InvalidInput("table has no identity element".into()))?;
        let mut inv = Vec::with_capacity(n);
        for x in 0..n {
            let i = (0..n)
                .find(|&y| table[x][y].index() == identity && table[y][x].index() == identity)
                .ok_or_else(|| {
                    Error::InvalidInput(format!("element {} has no inverse", names[x]))
                })?;
            inv.push(ElementId(i as u16));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &table {
            for &e in row {
                flat.push(Some(e));
            }
        }
        PartialGroup::new(names, ElementId(identity as u16), inv, flat, DomainOracle::Full)
    }

    /// A group of permutations, closed under the product. Element names use
    /// cycle notation; the element order is the sorted permutation order.
    pub fn from_perms(perms: &[crate::perm::Perm]) -> Result<PartialGroup> {
        let n = perms.len();
        let index_of = |p: &crate::perm::Perm| -> Result<u16> {
            perms
                .iter()
                .position(|q| q == p)
                .map(|i| i as u16)
                .ok_or_else(|| {
                    Error::InvalidInput(format!(
                        "permutation set not closed under products: missing {}",
                        p.cycle_notation()
                    ))
                })
        };
        let names: Vec<String> = perms.iter().map(|p| p.cycle_notation()).collect();
        let mut table = Vec::with_capacity(n * n);
        for a in perms {
            for b in perms {
                table.push(Some(ElementId(index_of(&a.then(b))?)));
            }
        }
        let identity = index_of(&crate::perm::Perm::identity(perms[0].points()))?;
        let inv: Vec<ElementId> = perms
            .iter()
            .map(|p| index_of(&p.inverse()).map(ElementId))
            .collect::<Result<_>>()?;
        PartialGroup::new(names, ElementId(identity), inv, table, DomainOracle::Full)
    }

    /// The one-element partial group.
    pub fn trivial() -> PartialGroup {
        PartialGroup::new(
            vec!["e".to_string()],
            ElementId(0),
            vec![ElementId(0)],
            vec![Some(ElementId(0))],
            DomainOracle::Full,
        )
        .expect("trivial partial group is well-formed")
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn carrier_id(&self) -> CarrierId {
        self.carrier.id()
    }

    pub fn identity(&self) -> ElementId {
        ElementId(self.identity)
    }

    #[inline]
    pub(crate) fn identity_index(&self) -> u16 {
        self.identity
    }

    pub fn oracle(&self) -> &DomainOracle {
        &self.oracle
    }

    pub fn domain_is_total(&self) -> bool {
        self.oracle.is_total()
    }

    pub fn name(&self, e: ElementId) -> &str {
        self.carrier.name(e)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        (0..self.len()).map(|i| self.carrier.name(ElementId(i as u16)))
    }

    pub fn element_by_name(&self, name: &str) -> Option<ElementId> {
        (0..self.len() as u16).find(|&i| self.carrier.name(ElementId(i)) == name).map(ElementId)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.len() as u16).map(ElementId)
    }

    pub fn full_carrier(&self) -> ElementSet {
        ElementSet::new((0..self.len() as u16).collect())
    }

    pub fn inverse(&self, e: ElementId) -> Result<ElementId> {
        self.check_element(e)?;
        Ok(ElementId(self.inv[e.index()]))
    }

    #[inline]
    pub(crate) fn inverse_index(&self, e: u16) -> u16 {
        self.inv[e as usize]
    }

    pub(crate) fn inverse_table(&self) -> &[u16] {
        &self.inv
    }

    /// The stored product of a two-letter word, if defined.
    pub fn binary(&self, a: ElementId, b: ElementId) -> Result<Option<ElementId>> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(match self.binary_index(a.0, b.0) {
            Some(i) => Some(ElementId(i)),
            None => None,
        })
    }

    #[inline]
    pub(crate) fn binary_index(&self, a: u16, b: u16) -> Option<u16> {
        let v = self.binary[a as usize * self.len() + b as usize];
        if v == UNDEF {
            None
        } else {
            Some(v)
        }
    }

    fn check_element(&self, e: ElementId) -> Result<()> {
        if e.index() >= self.len() {
            Err(Error::UnknownElement {
                index: e.index(),
                carrier_len: self.len(),
            })
        } else {
            Ok(())
        }
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        if w.carrier() != self.carrier_id() {
            return Err(Error::CarrierMismatch {
                expected: self.carrier_id().0,
                found: w.carrier().0,
            });
        }
        for &l in w.letters() {
            self.check_element(l)?;
        }
        Ok(())
    }

    /// Convenience constructor for words over this carrier.
    pub fn word(&self, letters: &[ElementId]) -> Word {
        Word::new(self.carrier_id(), letters.to_vec())
    }

    pub fn word_by_names(&self, names: &[&str]) -> Result<Word> {
        let letters: Vec<ElementId> = names
            .iter()
            .map(|n| {
                self.element_by_name(n)
                    .ok_or_else(|| Error::InvalidInput(format!("no element named {n}")))
            })
            .collect::<Result<_>>()?;
        Ok(self.word(&letters))
    }

    pub fn render_word(&self, indices: &[u16]) -> String {
        let mut out = String::from("(");
        for (k, &i) in indices.iter().enumerate() {
            if k > 0 {
                out.push_str(", ");
            }
            out.push_str(self.carrier.name(ElementId(i)));
        }
        out.push(')');
        out
    }

    pub fn render_set(&self, set: &ElementSet) -> String {
        let mut out = String::from("{");
        for (k, e) in set.iter().enumerate() {
            if k > 0 {
                out.push_str(", ");
            }
            out.push_str(self.name(e));
        }
        out.push('}');
        out
    }

    #[inline]
    pub(crate) fn accepts_indices(&self, word: &[u16]) -> bool {
        self.oracle.accepts(word)
    }

    /// Is `w` in the word domain?
    pub fn is_defined(&self, w: &Word) -> Result<bool> {
        self.check_word(w)?;
        let indices: Vec<u16> = w.letters().iter().map(|l| l.0).collect();
        Ok(self.accepts_indices(&indices))
    }

    /// Left fold of the binary table; `None` on any undefined step.
    #[inline]
    pub(crate) fn fold_indices(&self, word: &[u16]) -> Option<u16> {
        let mut iter = word.iter();
        let mut acc = match iter.next() {
            None => return Some(self.identity),
            Some(&first) => first,
        };
        for &l in iter {
            acc = self.binary_index(acc, l)?;
        }
        Some(acc)
    }

    /// Membership plus fold in one step.
    pub(crate) fn product_indices(&self, word: &[u16]) -> Option<u16> {
        if !self.accepts_indices(word) {
            return None;
        }
        self.fold_indices(word)
    }

    /// The product of a word in the domain; errors with `UndefinedProduct`
    /// when the word is outside the domain.
    pub fn product(&self, w: &Word) -> Result<ElementId> {
        self.check_word(w)?;
        let indices: Vec<u16> = w.letters().iter().map(|l| l.0).collect();
        match self.product_indices(&indices) {
            Some(e) => Ok(ElementId(e)),
            None => Err(Error::UndefinedProduct {
                word: self.render_word(&indices),
            }),
        }
    }

    /// Inverse word under this group's inversion.
    pub fn invert_word(&self, w: &Word) -> Result<Word> {
        self.check_word(w)?;
        w.inverse_with(
            &self
                .inv
                .iter()
                .map(|&i| ElementId(i))
                .collect::<Vec<_>>(),
        )
    }

    #[inline]
    pub(crate) fn conjugate_index(&self, x: u16, g: u16) -> Option<u16> {
        let w = [self.inverse_index(g), x, g];
        self.product_indices(&w)
    }

    /// `x^g = Π(g⁻¹, x, g)`, defined when the conjugating word is in the
    /// domain.
    pub fn conjugate(&self, x: ElementId, g: ElementId) -> Result<ElementId> {
        self.check_element(x)?;
        self.check_element(g)?;
        self.conjugate_index(x.0, g.0)
            .map(ElementId)
            .ok_or_else(|| Error::ConjugationUndefined {
                element: self.name(x).to_string(),
                by: self.name(g).to_string(),
            })
    }

    /// All carrier elements `x` with `(g⁻¹, x, g)` in the domain.
    pub fn conjugation_domain(&self, g: ElementId) -> Result<ElementSet> {
        self.check_element(g)?;
        Ok((0..self.len() as u16)
            .filter(|&x| self.conjugate_index(x, g.0).is_some())
            .map(ElementId)
            .collect())
    }

    /// Elementwise conjugate of a set, when every element is in `D(g)`.
    pub fn conjugate_set(&self, set: &ElementSet, g: ElementId) -> Option<ElementSet> {
        set.indices()
            .iter()
            .map(|&x| self.conjugate_index(x, g.0))
            .collect::<Option<Vec<u16>>>()
            .map(ElementSet::new)
    }

    /// `N_M(H)`: elements `g` of `m` with `H ⊆ D(g)` and `H^g = H`.
    pub fn normalizer_in(&self, m: &ElementSet, h: &ElementSet) -> ElementSet {
        m.iter()
            .filter(|&g| match self.conjugate_set(h, g) {
                Some(image) => &image == h,
                None => false,
            })
            .collect()
    }

    /// `C_M(H)`: elements `g` of `m` with `H ⊆ D(g)` and `h^g = h` for all
    /// `h ∈ H`.
    pub fn centralizer_in(&self, m: &ElementSet, h: &ElementSet) -> ElementSet {
        m.iter()
            .filter(|&g| {
                h.indices()
                    .iter()
                    .all(|&x| self.conjugate_index(x, g.0) == Some(x))
            })
            .collect()
    }

    /// Partial subgroup test: closure under inversion and under every
    /// defined binary product. Closure of longer defined words follows from
    /// the left-fold evaluation of products.
    pub fn is_partial_subgroup(&self, h: &ElementSet) -> Result<bool> {
        if h.is_empty() {
            return Err(Error::InvalidInput(
                "partial subgroup test on the empty set".into(),
            ));
        }
        for &x in h.indices() {
            if x as usize >= self.len() {
                return Err(Error::UnknownElement {
                    index: x as usize,
                    carrier_len: self.len(),
                });
            }
            if !h.contains(ElementId(self.inverse_index(x))) {
                return Ok(false);
            }
        }
        for &a in h.indices() {
            for &b in h.indices() {
                if let Some(p) = self.binary_index(a, b) {
                    if !h.contains(ElementId(p)) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Partial normal subgroup test: a partial subgroup whose elements stay
    /// inside under every defined conjugation by a carrier element.
    pub fn is_partial_normal(&self, n: &ElementSet) -> Result<bool> {
        if !self.is_partial_subgroup(n)? {
            return Ok(false);
        }
        for g in 0..self.len() as u16 {
            for &x in n.indices() {
                if let Some(y) = self.conjugate_index(x, g) {
                    if !n.contains(ElementId(y)) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Subgroup test: a partial subgroup with `W(H)` inside the domain.
    /// Exact when the oracle can prove totality on `h`; otherwise bounded by
    /// `max_len` and reported as such.
    pub fn subgroup_check(&self, h: &ElementSet, max_len: usize) -> Result<SubgroupCheck> {
        if !self.is_partial_subgroup(h)? {
            return Ok(SubgroupCheck {
                holds: false,
                evidence: Evidence::Exhaustive,
            });
        }
        if self.domain_is_total() {
            return Ok(SubgroupCheck {
                holds: true,
                evidence: Evidence::Exhaustive,
            });
        }
        if let DomainOracle::DeltaChain(o) = &self.oracle {
            if o.total_on(h.indices()) {
                return Ok(SubgroupCheck {
                    holds: true,
                    evidence: Evidence::Exhaustive,
                });
            }
        }
        // bounded fallback: enumerate words over h
        let letters = h.indices();
        let mut word = Vec::with_capacity(max_len);
        let holds = enumerate_words_over(letters, max_len, &mut word, &mut |w| {
            self.accepts_indices(w)
        });
        Ok(SubgroupCheck {
            holds,
            evidence: Evidence::BoundedWords { max_len },
        })
    }

    /// Restriction to a partial subgroup: carrier `h`, the induced tables,
    /// and the ambient domain pulled back along the inclusion.
    pub fn restrict(&self, h: &ElementSet) -> Result<PartialGroup> {
        if !self.is_partial_subgroup(h)? {
            return Err(Error::InvalidInput(format!(
                "restriction target {} is not a partial subgroup",
                self.render_set(h)
            )));
        }
        let embed: Vec<u16> = h.indices().to_vec();
        let lookup = |ambient: u16| -> Option<u16> {
            embed.binary_search(&ambient).ok().map(|i| i as u16)
        };
        let names: Vec<String> = embed
            .iter()
            .map(|&i| self.carrier.name(ElementId(i)).to_string())
            .collect();
        let identity = lookup(self.identity).ok_or_else(|| {
            Error::InvalidInput("partial subgroup does not contain the identity".into())
        })?;
        let inv: Vec<ElementId> = embed
            .iter()
            .map(|&i| {
                lookup(self.inverse_index(i)).map(ElementId).ok_or_else(|| {
                    Error::InvalidInput("partial subgroup not closed under inversion".into())
                })
            })
            .collect::<Result<_>>()?;
        let m = embed.len();
        let mut binary = vec![None; m * m];
        for (ai, &a) in embed.iter().enumerate() {
            for (bi, &b) in embed.iter().enumerate() {
                if let Some(p) = self.binary_index(a, b) {
                    let q = lookup(p).ok_or_else(|| {
                        Error::InvalidInput("partial subgroup not closed under products".into())
                    })?;
                    binary[ai * m + bi] = Some(ElementId(q));
                }
            }
        }
        let oracle = DomainOracle::Restriction(Box::new(crate::oracle::RestrictionOracle {
            ambient: self.clone(),
            embed,
        }));
        PartialGroup::new(names, ElementId(identity), inv, binary, oracle)
    }

    /// Closure of a seed set under inversion and defined binary products.
    pub fn closure(&self, seed: &ElementSet) -> ElementSet {
        let mut set = seed.clone();
        set.insert(self.identity());
        let mut grew = true;
        while grew {
            grew = false;
            let current: Vec<u16> = set.indices().to_vec();
            for &a in &current {
                if set.insert(ElementId(self.inverse_index(a))) {
                    grew = true;
                }
                for &b in &current {
                    if let Some(p) = self.binary_index(a, b) {
                        if set.insert(ElementId(p)) {
                            grew = true;
                        }
                    }
                }
            }
        }
        set
    }

    /// Bounded-exhaustive verification of the partial-group axioms over all
    /// words up to `max_len` (clamped to at least 2).
    pub fn verify_axioms(&self, max_len: usize) -> VerificationReport {
        let max_len = max_len.max(2);
        let exhaustive = match &self.oracle {
            DomainOracle::ExplicitBounded(o) => o.max_len <= max_len,
            _ => false,
        };
        let mut entries = Vec::new();

        // INV: inversion is an involutory bijection fixing the identity.
        let inv_violation = (0..self.len() as u16).find_map(|x| {
            let xi = self.inverse_index(x);
            if self.inverse_index(xi) != x {
                Some(format!(
                    "inverse not involutory at ({})",
                    self.name(ElementId(x))
                ))
            } else if x == self.identity && xi != self.identity {
                Some("inverse of the identity is not the identity".to_string())
            } else {
                None
            }
        });
        entries.push(AxiomCheck {
            axiom: AxiomId::Inv,
            max_len,
            passed: inv_violation.is_none(),
            counterexample: inv_violation,
            exhaustive: true,
        });

        // PG2 holds structurally: the product of a single letter is the
        // letter itself under fold evaluation, and the constructor requires
        // every single letter to be accepted.
        entries.push(AxiomCheck {
            axiom: AxiomId::Pg2,
            max_len,
            passed: true,
            counterexample: None,
            exhaustive: true,
        });

        let sweep = self.sweep_axioms(max_len);
        let mut closure_violation = None;
        if let Some((w, part)) = self.oracle.prefix_closure_violation() {
            closure_violation = Some(format!(
                "{} accepted but {} rejected",
                self.render_word(&w),
                self.render_word(&part)
            ));
        }
        let pg1 = match (&sweep.pg1, &closure_violation) {
            (Some(v), _) => Some(v.detail.clone()),
            (None, Some(c)) => Some(c.clone()),
            _ => None,
        };
        entries.push(AxiomCheck {
            axiom: AxiomId::Pg1,
            max_len,
            passed: pg1.is_none(),
            counterexample: pg1,
            exhaustive,
        });
        entries.push(AxiomCheck {
            axiom: AxiomId::Pg3,
            max_len,
            passed: sweep.pg3.is_none(),
            counterexample: sweep.pg3.map(|v| v.detail),
            exhaustive,
        });
        entries.push(AxiomCheck {
            axiom: AxiomId::Pg4,
            max_len,
            passed: sweep.pg4.is_none(),
            counterexample: sweep.pg4.map(|v| v.detail),
            exhaustive,
        });
        VerificationReport { entries }
    }

    fn sweep_axioms(&self, max_len: usize) -> SweepViolations {
        let n = self.len() as u16;
        // the empty word participates in PG4 and PG3 trivially; the checks
        // below cover it inline
        let mut base = SweepViolations::default();
        self.check_word_axioms(&[], &mut base);
        let merged = (0..n)
            .into_par_iter()
            .map(|first| {
                let mut v = SweepViolations::default();
                let mut word = vec![0u16; max_len];
                word[0] = first;
                for len in 1..=max_len {
                    if v.complete() {
                        break;
                    }
                    self.enumerate_fixed_first(&mut word, len, 1, &mut v);
                }
                v
            })
            .reduce(SweepViolations::default, SweepViolations::merge);
        base.merge_from(merged);
        base
    }

    fn enumerate_fixed_first(
        &self,
        word: &mut Vec<u16>,
        len: usize,
        pos: usize,
        v: &mut SweepViolations,
    ) {
        if pos == len {
            self.check_word_axioms(&word[..len], v);
            return;
        }
        for letter in 0..self.len() as u16 {
            if v.complete() {
                return;
            }
            word[pos] = letter;
            self.enumerate_fixed_first(word, len, pos + 1, v);
        }
    }

    /// Checks PG1, PG3 and PG4 instances rooted at one word. Derived words
    /// longer than the oracle's query window are skipped.
    fn check_word_axioms(&self, w: &[u16], v: &mut SweepViolations) {
        if !self.accepts_indices(w) {
            return;
        }
        let k = w.len();
        let window = self.oracle.query_bound().unwrap_or(usize::MAX);

        // PG1: the immediate prefix and suffix of an accepted word must be
        // accepted; over the full sweep this covers every splitting.
        if v.pg1.is_none() && k >= 2 {
            if !self.accepts_indices(&w[..k - 1]) {
                v.pg1 = Some(Violation::new(
                    w,
                    format!(
                        "{} in domain but prefix {} is not",
                        self.render_word(w),
                        self.render_word(&w[..k - 1])
                    ),
                ));
            } else if !self.accepts_indices(&w[1..]) {
                v.pg1 = Some(Violation::new(
                    w,
                    format!(
                        "{} in domain but suffix {} is not",
                        self.render_word(w),
                        self.render_word(&w[1..])
                    ),
                ));
            }
        }

        let product = match self.fold_indices(w) {
            Some(p) => p,
            None => {
                if v.pg3.is_none() {
                    v.pg3 = Some(Violation::new(
                        w,
                        format!(
                            "{} in domain but its product fold hits an undefined entry",
                            self.render_word(w)
                        ),
                    ));
                }
                return;
            }
        };

        // PG3: replace any contiguous (possibly empty) segment by its
        // product; the result must stay in the domain with equal product.
        if v.pg3.is_none() {
            let mut candidate = Vec::with_capacity(k + 1);
            'outer: for i in 0..=k {
                let mut seg_product = self.identity;
                for j in i..=k {
                    if j > i {
                        seg_product = match self.binary_index(seg_product, w[j - 1]) {
                            Some(p) => p,
                            None => {
                                v.pg3 = Some(Violation::new(
                                    w,
                                    format!(
                                        "segment {} of {} is in the domain but its fold is undefined",
                                        self.render_word(&w[i..j]),
                                        self.render_word(w)
                                    ),
                                ));
                                break 'outer;
                            }
                        };
                    }
                    // segment product of w[i..j]; empty segment gives the identity
                    let seg = if j == i { self.identity } else { seg_product };
                    if k - (j - i) + 1 > window {
                        continue;
                    }
                    candidate.clear();
                    candidate.extend_from_slice(&w[..i]);
                    candidate.push(seg);
                    candidate.extend_from_slice(&w[j..]);
                    if !self.accepts_indices(&candidate) {
                        v.pg3 = Some(Violation::new(
                            w,
                            format!(
                                "{} in domain but {} is not",
                                self.render_word(w),
                                self.render_word(&candidate)
                            ),
                        ));
                        break 'outer;
                    }
                    match self.fold_indices(&candidate) {
                        Some(p) if p == product => {}
                        got => {
                            v.pg3 = Some(Violation::new(
                                w,
                                format!(
                                    "product of {} is {} but product of {} is {}",
                                    self.render_word(w),
                                    self.name(ElementId(product)),
                                    self.render_word(&candidate),
                                    got.map(|p| self.name(ElementId(p)).to_string())
                                        .unwrap_or_else(|| "undefined".into()),
                                ),
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }

        // PG4: w⁻¹ ∘ w is in the domain with product 1.
        if v.pg4.is_none() && 2 * k <= window {
            let mut doubled = Vec::with_capacity(2 * k);
            for &l in w.iter().rev() {
                doubled.push(self.inverse_index(l));
            }
            doubled.extend_from_slice(w);
            if !self.accepts_indices(&doubled) {
                v.pg4 = Some(Violation::new(
                    w,
                    format!(
                        "{} in domain but {} is not",
                        self.render_word(w),
                        self.render_word(&doubled)
                    ),
                ));
            } else {
                match self.fold_indices(&doubled) {
                    Some(p) if p == self.identity => {}
                    got => {
                        v.pg4 = Some(Violation::new(
                            w,
                            format!(
                                "product of {} is {}, expected {}",
                                self.render_word(&doubled),
                                got.map(|p| self.name(ElementId(p)).to_string())
                                    .unwrap_or_else(|| "undefined".into()),
                                self.name(self.identity()),
                            ),
                        ));
                    }
                }
            }
        }
    }
}

#[derive(Debug, Clone)]
struct Violation {
    key: (usize, Vec<u16>),
    detail: String,
}

impl Violation {
    fn new(word: &[u16], detail: String) -> Violation {
        Violation {
            key: (word.len(), word.to_vec()),
            detail,
        }
    }

    fn min(a: Option<Violation>, b: Option<Violation>) -> Option<Violation> {
        match (a, b) {
            (Some(x), Some(y)) => Some(if x.key <= y.key { x } else { y }),
            (x, None) => x,
            (None, y) => y,
        }
    }
}

#[derive(Debug, Clone, Default)]
struct SweepViolations {
    pg1: Option<Violation>,
    pg3: Option<Violation>,
    pg4: Option<Violation>,
}

impl SweepViolations {
    fn complete(&self) -> bool {
        self.pg1.is_some() && self.pg3.is_some() && self.pg4.is_some()
    }

    fn merge(self, other: SweepViolations) -> SweepViolations {
        SweepViolations {
            pg1: Violation::min(self.pg1, other.pg1),
            pg3: Violation::min(self.pg3, other.pg3),
            pg4: Violation::min(self.pg4, other.pg4),
        }
    }

    fn merge_from(&mut self, other: SweepViolations) {
        let merged = std::mem::take(self).merge(other);
        *self = merged;
    }
}

/// Depth-first enumeration of all words over `letters` up to `max_len`,
/// stopping early when `keep` returns false. Returns whether every word
/// satisfied `keep`.
pub(crate) fn enumerate_words_over(
    letters: &[u16],
    max_len: usize,
    word: &mut Vec<u16>,
    keep: &mut impl FnMut(&[u16]) -> bool,
) -> bool {
    if !keep(word) {
        return false;
    }
    if word.len() == max_len {
        return true;
    }
    for &l in letters {
        word.push(l);
        let ok = enumerate_words_over(letters, max_len, word, keep);
        word.pop();
        if !ok {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::ExplicitBoundedOracle;
    use crate::perm::{generate, Perm};

    fn cyclic(n: usize) -> PartialGroup {
        let names: Vec<String> = (0..n)
            .map(|i| if i == 0 { "1".into() } else { format!("a{i}") })
            .collect();
        let table: Vec<Vec<ElementId>> = (0..n)
            .map(|i| (0..n).map(|j| ElementId(((i + j) % n) as u16)).collect())
            .collect();
        PartialGroup::from_cayley_group(names, table).unwrap()
    }

    fn sym3() -> PartialGroup {
        PartialGroup::from_perms(&crate::perm::symmetric_group(3)).unwrap()
    }

    /// Union of the subgroups ⟨(1 2)⟩ and ⟨(1 2 3)⟩ of Sym(3), with the
    /// product defined exactly on words staying inside one of the two; a
    /// genuine partial group with a proper domain.
    fn amalgam() -> PartialGroup {
        let s3 = crate::perm::symmetric_group(3);
        let flip = generate(3, &[Perm::parse(3, "(1 2)").unwrap()]);
        let rot = generate(3, &[Perm::parse(3, "(1 2 3)").unwrap()]);
        let carrier: Vec<Perm> = {
            let mut v = flip.clone();
            for p in &rot {
                if !v.contains(p) {
                    v.push(p.clone());
                }
            }
            v.sort();
            v
        };
        let idx = |p: &Perm| carrier.iter().position(|q| q == p).unwrap() as u16;
        let in_part = |part: &[Perm], w: &[u16]| {
            w.iter().all(|&l| part.contains(&carrier[l as usize]))
        };
        let _ = s3;
        let mut accepted: Vec<Vec<u16>> = Vec::new();
        let mut word = Vec::new();
        enumerate_words_over(
            &(0..carrier.len() as u16).collect::<Vec<_>>(),
            5,
            &mut word,
            &mut |w| {
                if in_part(&flip, w) || in_part(&rot, w) {
                    accepted.push(w.to_vec());
                }
                true
            },
        );
        let names: Vec<String> = carrier.iter().map(|p| p.cycle_notation()).collect();
        let n = carrier.len();
        let mut binary = vec![None; n * n];
        for a in 0..n as u16 {
            for b in 0..n as u16 {
                if accepted.contains(&vec![a, b]) {
                    let p = carrier[a as usize].then(&carrier[b as usize]);
                    binary[a as usize * n + b as usize] = Some(ElementId(idx(&p)));
                }
            }
        }
        let inv: Vec<ElementId> = carrier.iter().map(|p| ElementId(idx(&p.inverse()))).collect();
        let identity = ElementId(idx(&Perm::identity(3)));
        PartialGroup::new(
            names,
            identity,
            inv,
            binary,
            DomainOracle::ExplicitBounded(ExplicitBoundedOracle::new(5, accepted)),
        )
        .unwrap()
    }

    #[test]
    fn group_axioms_pass() {
        let g = sym3();
        let report = g.verify_axioms(4);
        assert!(report.all_passed(), "{report}");
        assert!(!report.entry(AxiomId::Pg3).unwrap().exhaustive);
    }

    #[test]
    fn trivial_partial_group_is_supported() {
        let t = PartialGroup::trivial();
        assert!(t.verify_axioms(4).all_passed());
        assert_eq!(t.product(&t.word(&[])).unwrap(), t.identity());
    }

    #[test]
    fn empty_word_product_is_identity() {
        let g = cyclic(3);
        assert_eq!(g.product(&Word::empty(g.carrier_id())).unwrap(), g.identity());
        assert!(g.is_defined(&Word::empty(g.carrier_id())).unwrap());
    }

    #[test]
    fn fold_product_matches_table() {
        let g = sym3();
        let t = g.element_by_name("(1 2)").unwrap();
        let w = g.word(&[t, t, t]);
        assert_eq!(g.product(&w).unwrap(), t);
    }

    #[test]
    fn conjugation_in_sym3() {
        let g = sym3();
        let t12 = g.element_by_name("(1 2)").unwrap();
        let t13 = g.element_by_name("(1 3)").unwrap();
        let c = g.conjugate(t12, t13).unwrap();
        assert_eq!(g.name(c), "(2 3)");
        assert_eq!(g.conjugate(g.identity(), t13).unwrap(), g.identity());
    }

    #[test]
    fn normalizer_and_centralizer() {
        let g = sym3();
        let a3: ElementSet = ["e", "(1 2 3)", "(1 3 2)"]
            .iter()
            .map(|n| g.element_by_name(n).unwrap())
            .collect();
        let all = g.full_carrier();
        assert_eq!(g.normalizer_in(&all, &a3), all);
        assert_eq!(g.centralizer_in(&all, &a3), a3);
        // centralizing the identity alone is no constraint
        let one = ElementSet::singleton(g.identity());
        assert_eq!(g.centralizer_in(&all, &one), all);
    }

    #[test]
    fn partial_subgroup_checks() {
        let g = sym3();
        let a3: ElementSet = ["e", "(1 2 3)", "(1 3 2)"]
            .iter()
            .map(|n| g.element_by_name(n).unwrap())
            .collect();
        assert!(g.is_partial_subgroup(&a3).unwrap());
        assert!(g.is_partial_normal(&a3).unwrap());
        let flip: ElementSet = ["e", "(1 2)"]
            .iter()
            .map(|n| g.element_by_name(n).unwrap())
            .collect();
        assert!(g.is_partial_subgroup(&flip).unwrap());
        assert!(!g.is_partial_normal(&flip).unwrap());
        assert!(g.is_partial_subgroup(&ElementSet::singleton(g.identity())).unwrap());
        assert!(matches!(
            g.is_partial_subgroup(&ElementSet::empty()),
            Err(Error::InvalidInput(_))
        ));
        let check = g.subgroup_check(&a3, 4).unwrap();
        assert!(check.holds && check.evidence.is_exhaustive());
    }

    #[test]
    fn corrupted_table_fails_pg4_with_counterexample() {
        let g = sym3();
        let t = g.element_by_name("(1 2)").unwrap();
        // rebuild with one corrupted entry: (1 2)·(1 2) ↦ (1 2 3)
        let n = g.len();
        let mut binary: Vec<Option<ElementId>> = Vec::with_capacity(n * n);
        for a in 0..n as u16 {
            for b in 0..n as u16 {
                binary.push(g.binary_index(a, b).map(ElementId));
            }
        }
        let bad = g.element_by_name("(1 2 3)").unwrap();
        binary[t.index() * n + t.index()] = Some(bad);
        let names: Vec<String> = g.names().map(|s| s.to_string()).collect();
        let inv: Vec<ElementId> = (0..n as u16).map(|i| ElementId(g.inverse_index(i))).collect();
        let corrupted =
            PartialGroup::new(names, g.identity(), inv, binary, DomainOracle::Full).unwrap();
        let report = corrupted.verify_axioms(3);
        let pg4 = report.entry(AxiomId::Pg4).unwrap();
        assert!(!pg4.passed);
        assert!(pg4.counterexample.is_some());
    }

    #[test]
    fn amalgam_is_a_partial_group_with_proper_domain() {
        let l = amalgam();
        assert_eq!(l.len(), 4);
        let report = l.verify_axioms(4);
        assert!(report.all_passed(), "{report}");
        // sweeping at the stored bound makes the root enumeration exhaustive
        let full = l.verify_axioms(5);
        assert!(full.all_passed(), "{full}");
        assert!(full.entry(AxiomId::Pg3).unwrap().exhaustive);
        let flip = l.element_by_name("(1 2)").unwrap();
        let rot = l.element_by_name("(1 2 3)").unwrap();
        let mixed = l.word(&[flip, rot]);
        assert!(!l.is_defined(&mixed).unwrap());
        assert!(matches!(
            l.product(&mixed),
            Err(Error::UndefinedProduct { .. })
        ));
        assert!(matches!(
            l.conjugate(flip, rot),
            Err(Error::ConjugationUndefined { .. })
        ));
        // conjugation domain of a rotation is the rotation part only
        let dom = l.conjugation_domain(rot).unwrap();
        assert_eq!(l.render_set(&dom), "{e, (1 2 3), (1 3 2)}");
    }

    #[test]
    fn restriction_keeps_domain_and_products() {
        let g = sym3();
        let a3: ElementSet = ["e", "(1 2 3)", "(1 3 2)"]
            .iter()
            .map(|n| g.element_by_name(n).unwrap())
            .collect();
        let h = g.restrict(&a3).unwrap();
        assert_eq!(h.len(), 3);
        assert!(h.verify_axioms(4).all_passed());
        let r = h.element_by_name("(1 2 3)").unwrap();
        let cube = h.word(&[r, r, r]);
        assert_eq!(h.product(&cube).unwrap(), h.identity());
    }

    #[test]
    fn carrier_mismatch_is_detected() {
        let g = cyclic(3);
        let h = cyclic(3);
        let w = h.word(&[ElementId(1)]);
        assert!(matches!(
            g.is_defined(&w),
            Err(Error::CarrierMismatch { .. })
        ));
    }
}
