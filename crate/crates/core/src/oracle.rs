//! Decidable word-domain oracles.
//!
//! The domain of a partial group's product may be infinite (for a group it is
//! the whole free monoid), so it is represented as an algebraic expression
//! rather than an enumerated set. Each construction supplies its own variant;
//! membership of any finite word is decidable for all of them.
//!
//! Every variant except `ExplicitBounded` is prefix/suffix closed by shape.
//! `ExplicitBounded` stores an arbitrary finite set and is checked instead.

use crate::partial_group::PartialGroup;
use crate::sets::ElementSet;
use std::collections::HashSet;

pub(crate) const UNDEF: u16 = u16::MAX;

fn opt_min(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Word-domain oracle. See the module docs.
#[derive(Debug, Clone)]
pub enum DomainOracle {
    /// Every word is accepted (the group case).
    Full,
    /// Words admitting a chain of object subgroups conjugated letter by
    /// letter, with conjugation data fixed at construction time.
    DeltaChain(DeltaChainOracle),
    /// Words over a semidirect-product carrier whose actor part and twisted
    /// target part both lie in the factor domains.
    SemidirectSplit(Box<SemidirectSplitOracle>),
    /// Words over a direct-product carrier, componentwise.
    DirectPower(Box<DirectPowerOracle>),
    /// An explicit finite set of words up to a stored length bound.
    ExplicitBounded(ExplicitBoundedOracle),
    /// The ambient domain restricted to a partial subgroup.
    Restriction(Box<RestrictionOracle>),
}

impl DomainOracle {
    /// Membership of a word given as carrier indices. Callers guarantee the
    /// indices are in range.
    pub fn accepts(&self, word: &[u16]) -> bool {
        match self {
            DomainOracle::Full => true,
            DomainOracle::DeltaChain(o) => o.accepts(word),
            DomainOracle::SemidirectSplit(o) => o.accepts(word),
            DomainOracle::DirectPower(o) => o.accepts(word),
            DomainOracle::ExplicitBounded(o) => o.accepts(word),
            DomainOracle::Restriction(o) => o.accepts(word),
        }
    }

    /// True when the oracle provably accepts every word. Sound but not
    /// complete; used as a fast path in enumeration sweeps.
    pub fn is_total(&self) -> bool {
        match self {
            DomainOracle::Full => true,
            DomainOracle::DeltaChain(o) => o.total,
            DomainOracle::SemidirectSplit(o) => o.total,
            DomainOracle::DirectPower(o) => o.total,
            DomainOracle::ExplicitBounded(_) => false,
            DomainOracle::Restriction(_) => false,
        }
    }

    /// For `ExplicitBounded`, scans the stored set for a prefix/suffix
    /// closure violation and returns `(word, offending part)`. The other
    /// variants are closed by shape and return `None`.
    pub fn prefix_closure_violation(&self) -> Option<(Vec<u16>, Vec<u16>)> {
        match self {
            DomainOracle::ExplicitBounded(o) => o.prefix_closure_violation(),
            _ => None,
        }
    }

    /// Length beyond which this oracle cannot answer membership (it stores a
    /// bounded window onto the domain). `None` means every length is
    /// answerable. Axiom sweeps clamp derived queries to this window: no
    /// finite word set can satisfy PG4 literally, since `w ↦ w⁻¹∘w` doubles
    /// lengths.
    pub fn query_bound(&self) -> Option<usize> {
        match self {
            DomainOracle::Full | DomainOracle::DeltaChain(_) => None,
            DomainOracle::SemidirectSplit(o) => {
                opt_min(o.actor.oracle().query_bound(), o.target.oracle().query_bound())
            }
            DomainOracle::DirectPower(o) => o
                .factors
                .iter()
                .fold(None, |acc, f| opt_min(acc, f.oracle().query_bound())),
            DomainOracle::ExplicitBounded(o) => Some(o.max_len),
            DomainOracle::Restriction(o) => o.ambient.oracle().query_bound(),
        }
    }
}

/// Chain-based domain: a word `(g_1,…,g_k)` is accepted when some sequence
/// `P_0,…,P_k` of object subgroups satisfies `P_{i-1}^{g_i} = P_i` under the
/// stored conjugation data.
#[derive(Debug, Clone)]
pub struct DeltaChainOracle {
    delta: Vec<ElementSet>,
    /// `step[p * n + g]` = index of `P^g` in `delta`, or `UNDEF`.
    step: Vec<u16>,
    n: usize,
    total: bool,
}

impl DeltaChainOracle {
    /// `conj(x, g)` is the stored conjugation datum `x^g`, or `None` when it
    /// leaves the carrier. `delta` members must be subsets of the carrier.
    pub fn new(
        n: usize,
        mut delta: Vec<ElementSet>,
        conj: impl Fn(u16, u16) -> Option<u16>,
    ) -> DeltaChainOracle {
        delta.sort();
        delta.dedup();
        let m = delta.len();
        let mut step = vec![UNDEF; m * n];
        for (pi, p) in delta.iter().enumerate() {
            for g in 0..n as u16 {
                let image: Option<ElementSet> = p
                    .indices()
                    .iter()
                    .map(|&x| conj(x, g))
                    .collect::<Option<Vec<u16>>>()
                    .map(ElementSet::new);
                if let Some(image) = image {
                    if let Ok(qi) = delta.binary_search(&image) {
                        step[pi * n + g as usize] = qi as u16;
                    }
                }
            }
        }
        let total = {
            // greatest set U of starts from which every letter has a step
            // staying inside U; nonempty U proves every word has a chain
            let mut alive = vec![true; m];
            loop {
                let mut changed = false;
                for pi in 0..m {
                    if !alive[pi] {
                        continue;
                    }
                    let ok = (0..n).all(|g| {
                        let s = step[pi * n + g];
                        s != UNDEF && alive[s as usize]
                    });
                    if !ok {
                        alive[pi] = false;
                        changed = true;
                    }
                }
                if !changed {
                    break;
                }
            }
            alive.iter().any(|&a| a)
        };
        DeltaChainOracle {
            delta,
            step,
            n,
            total,
        }
    }

    pub fn objects(&self) -> &[ElementSet] {
        &self.delta
    }

    #[inline]
    fn step_from(&self, p: u16, g: u16) -> u16 {
        self.step[p as usize * self.n + g as usize]
    }

    pub fn accepts(&self, word: &[u16]) -> bool {
        if self.total || word.is_empty() {
            return !self.delta.is_empty();
        }
        'starts: for start in 0..self.delta.len() as u16 {
            let mut p = start;
            for &g in word {
                p = self.step_from(p, g);
                if p == UNDEF {
                    continue 'starts;
                }
            }
            return true;
        }
        false
    }

    /// Smallest-start witness chain, as indices into `objects()`.
    pub fn witness(&self, word: &[u16]) -> Option<Vec<usize>> {
        'starts: for start in 0..self.delta.len() as u16 {
            let mut chain = Vec::with_capacity(word.len() + 1);
            let mut p = start;
            chain.push(p as usize);
            for &g in word {
                p = self.step_from(p, g);
                if p == UNDEF {
                    continue 'starts;
                }
                chain.push(p as usize);
            }
            return Some(chain);
        }
        None
    }

    /// True when every word over `subset` admits a chain, proven by a
    /// nonempty fixpoint of starts stable under all letters of `subset`.
    pub fn total_on(&self, subset: &[u16]) -> bool {
        let m = self.delta.len();
        let mut alive = vec![true; m];
        loop {
            let mut changed = false;
            for pi in 0..m {
                if !alive[pi] {
                    continue;
                }
                let ok = subset.iter().all(|&g| {
                    let s = self.step_from(pi as u16, g);
                    s != UNDEF && alive[s as usize]
                });
                if !ok {
                    alive[pi] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        alive.iter().any(|&a| a)
    }
}

/// Domain of an external semidirect product: a word is accepted when its
/// actor part lies in the actor domain and its twisted target part lies in
/// the target domain.
#[derive(Debug, Clone)]
pub struct SemidirectSplitOracle {
    pub actor: PartialGroup,
    pub target: PartialGroup,
    /// Automorphism table of the action, one permutation of the target
    /// carrier per actor element.
    pub images: Vec<Vec<u16>>,
    pub(crate) total: bool,
}

impl SemidirectSplitOracle {
    pub fn new(actor: PartialGroup, target: PartialGroup, images: Vec<Vec<u16>>) -> Self {
        let total = actor.domain_is_total() && target.domain_is_total();
        SemidirectSplitOracle {
            actor,
            target,
            images,
            total,
        }
    }

    #[inline]
    pub fn pair_index(&self, x: u16, f: u16) -> u16 {
        x * self.target.len() as u16 + f
    }

    #[inline]
    pub fn split_index(&self, pair: u16) -> (u16, u16) {
        let n = self.target.len() as u16;
        (pair / n, pair % n)
    }

    /// Actor components of a word over the pair carrier.
    pub fn actor_part(&self, word: &[u16]) -> Vec<u16> {
        word.iter().map(|&l| self.split_index(l).0).collect()
    }

    /// Twisted target components; `None` when the actor part is not in the
    /// actor domain (the twist needs its suffix products).
    pub fn target_part(&self, word: &[u16]) -> Option<Vec<u16>> {
        let xs = self.actor_part(word);
        if !self.actor.accepts_indices(&xs) {
            return None;
        }
        let k = word.len();
        let mut out = vec![0u16; k];
        // walk right to left, maintaining the product of the actor suffix
        let mut suffix = self.actor.identity_index();
        for i in (0..k).rev() {
            let (_, f) = self.split_index(word[i]);
            out[i] = self.images[suffix as usize][f as usize];
            suffix = self.actor.binary_index(xs[i], suffix)?;
        }
        Some(out)
    }

    pub fn accepts(&self, word: &[u16]) -> bool {
        if self.total {
            return true;
        }
        match self.target_part(word) {
            Some(wn) => self.target.accepts_indices(&wn),
            None => false,
        }
    }
}

/// Componentwise domain of a direct product.
#[derive(Debug, Clone)]
pub struct DirectPowerOracle {
    pub factors: Vec<PartialGroup>,
    strides: Vec<usize>,
    pub(crate) total: bool,
}

impl DirectPowerOracle {
    pub fn new(factors: Vec<PartialGroup>) -> Self {
        let mut strides = vec![1usize; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1].len();
        }
        let total = factors.iter().all(|f| f.domain_is_total());
        DirectPowerOracle {
            factors,
            strides,
            total,
        }
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    #[inline]
    pub fn component(&self, tuple: u16, i: usize) -> u16 {
        ((tuple as usize / self.strides[i]) % self.factors[i].len()) as u16
    }

    pub fn tuple_index(&self, components: &[u16]) -> u16 {
        components
            .iter()
            .zip(&self.strides)
            .map(|(&c, &s)| c as usize * s)
            .sum::<usize>() as u16
    }

    pub fn accepts(&self, word: &[u16]) -> bool {
        if self.total {
            return true;
        }
        let mut part = Vec::with_capacity(word.len());
        for (i, factor) in self.factors.iter().enumerate() {
            part.clear();
            part.extend(word.iter().map(|&l| self.component(l, i)));
            if !factor.accepts_indices(&part) {
                return false;
            }
        }
        true
    }
}

/// An explicit finite word set with a hard length bound; words longer than
/// the bound are rejected.
#[derive(Debug, Clone)]
pub struct ExplicitBoundedOracle {
    pub max_len: usize,
    accepted: HashSet<Vec<u16>>,
}

impl ExplicitBoundedOracle {
    pub fn new(max_len: usize, accepted: impl IntoIterator<Item = Vec<u16>>) -> Self {
        ExplicitBoundedOracle {
            max_len,
            accepted: accepted.into_iter().filter(|w| w.len() <= max_len).collect(),
        }
    }

    pub fn accepts(&self, word: &[u16]) -> bool {
        word.len() <= self.max_len && self.accepted.contains(word)
    }

    pub fn words(&self) -> impl Iterator<Item = &Vec<u16>> {
        self.accepted.iter()
    }

    fn prefix_closure_violation(&self) -> Option<(Vec<u16>, Vec<u16>)> {
        let mut sorted: Vec<&Vec<u16>> = self.accepted.iter().collect();
        sorted.sort_by_key(|w| (w.len(), (*w).clone()));
        for w in sorted {
            if w.len() < 2 {
                continue;
            }
            let prefix = &w[..w.len() - 1];
            if !self.accepted.contains(prefix) {
                return Some((w.clone(), prefix.to_vec()));
            }
            let suffix = &w[1..];
            if !self.accepted.contains(suffix) {
                return Some((w.clone(), suffix.to_vec()));
            }
        }
        None
    }
}

/// The ambient domain pulled back along the inclusion of a partial subgroup.
#[derive(Debug, Clone)]
pub struct RestrictionOracle {
    pub ambient: PartialGroup,
    /// Subgroup index to ambient index.
    pub embed: Vec<u16>,
}

impl RestrictionOracle {
    pub fn accepts(&self, word: &[u16]) -> bool {
        let ambient_word: Vec<u16> = word.iter().map(|&l| self.embed[l as usize]).collect();
        self.ambient.accepts_indices(&ambient_word)
    }
}
