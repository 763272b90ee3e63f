//! Distributive-ideal completion of explicit finite bounded lattices.
//!
//! A *distributive ideal* of a lattice L is a nonempty down-set I that
//! contains the join of each of its subsets whose join is distributive,
//! meaning (⋁K) ∧ K′ = ⋁(K ∧ K′) for every K′ ∈ L. Ordered by inclusion,
//! the distributive ideals form a complete distributive lattice DI(L) into
//! which L embeds by K ↦ ↓K — the Bruns–Lakser hull.
//!
//! This module runs that construction on small explicit lattices, where the
//! exponential condition-2 check is affordable. The modular ortholattices
//! MO_n ("Chinese lanterns": n orthocomplementary atom pairs plus bounds)
//! are the finite stand-ins for the subspace lattice of ℂ²: their hull is
//! the Boolean algebra 2^(2n), the finite shadow of the fact that the hull
//! of the full quantum lattice is Boolean rather than properly Heyting.
//!
//! `IdealSet`s are membership bitmasks over lattice elements, so lattices
//! are capped at 64 elements, and the hull enumeration at
//! [`DEFAULT_ENUMERATION_CAP`].

use std::fmt;

/// Lattice construction or completion failure.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("not a lattice: {0}")]
    NotALattice(String),
    #[error("lattice has {n} elements, enumeration is capped at {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("condition 2 ranges over nonempty subsets only")]
    EmptySubset,
    #[error("lattice file line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Default cap on the element count for hull enumeration; the condition-2
/// check is exponential in the ideal size.
pub const DEFAULT_ENUMERATION_CAP: usize = 16;

/// An explicit finite bounded lattice on elements 0..n.
///
/// The constructor verifies that `leq` is a partial order with all binary
/// meets and joins (tabulated), with bottom and top, and that any provided
/// orthocomplement is an order-reversing complement involution.
#[derive(Clone)]
pub struct FiniteLattice {
    n: usize,
    leq: Vec<bool>,
    meet_table: Vec<usize>,
    join_table: Vec<usize>,
    bottom: usize,
    top: usize,
    ortho: Option<Vec<usize>>,
}

/// A subset of lattice elements as a membership bit-vector. Produced by the
/// completion machinery, where it always satisfies the two ideal conditions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealSet {
    mask: u64,
}

impl IdealSet {
    pub fn from_mask(mask: u64) -> IdealSet {
        IdealSet { mask }
    }

    pub fn from_members(members: &[usize]) -> IdealSet {
        let mut mask = 0;
        for &m in members {
            assert!(m < 64);
            mask |= 1 << m;
        }
        IdealSet { mask }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, k: usize) -> bool {
        self.mask >> k & 1 == 1
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..64).filter(|&k| self.contains(k))
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    /// Inclusion order of DI(L).
    pub fn leq(&self, other: &IdealSet) -> bool {
        self.mask & !other.mask == 0
    }

    /// Meet in DI(L) is plain intersection.
    pub fn intersect(&self, other: &IdealSet) -> IdealSet {
        IdealSet { mask: self.mask & other.mask }
    }
}

impl fmt::Debug for IdealSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, m) in self.members().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

impl FiniteLattice {
    /// Build from a reflexive ≤ relation given as an n×n row-major matrix.
    pub fn from_leq(
        n: usize,
        leq: Vec<bool>,
        ortho: Option<Vec<usize>>,
    ) -> Result<FiniteLattice, LatticeError> {
        if n == 0 || n > 64 {
            return Err(LatticeError::NotALattice(format!(
                "element count {n} outside 1..=64"
            )));
        }
        if leq.len() != n * n {
            return Err(LatticeError::NotALattice(
                "leq matrix has the wrong size".into(),
            ));
        }
        let le = |a: usize, b: usize| leq[a * n + b];
        for a in 0..n {
            if !le(a, a) {
                return Err(LatticeError::NotALattice(format!("{a} ≤ {a} fails")));
            }
            for b in 0..n {
                if a != b && le(a, b) && le(b, a) {
                    return Err(LatticeError::NotALattice(format!(
                        "antisymmetry fails on {a},{b}"
                    )));
                }
                for c in 0..n {
                    if le(a, b) && le(b, c) && !le(a, c) {
                        return Err(LatticeError::NotALattice(format!(
                            "transitivity fails on {a},{b},{c}"
                        )));
                    }
                }
            }
        }

        let glb = |a: usize, b: usize| -> Option<usize> {
            let lower: Vec<usize> = (0..n).filter(|&c| le(c, a) && le(c, b)).collect();
            lower
                .iter()
                .copied()
                .find(|&g| lower.iter().all(|&c| le(c, g)))
        };
        let lub = |a: usize, b: usize| -> Option<usize> {
            let upper: Vec<usize> = (0..n).filter(|&c| le(a, c) && le(b, c)).collect();
            upper
                .iter()
                .copied()
                .find(|&g| upper.iter().all(|&c| le(g, c)))
        };

        let mut meet_table = vec![0; n * n];
        let mut join_table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                meet_table[a * n + b] = glb(a, b).ok_or_else(|| {
                    LatticeError::NotALattice(format!("no meet for {a},{b}"))
                })?;
                join_table[a * n + b] = lub(a, b).ok_or_else(|| {
                    LatticeError::NotALattice(format!("no join for {a},{b}"))
                })?;
            }
        }

        let bottom = (0..n)
            .find(|&b| (0..n).all(|c| le(b, c)))
            .ok_or_else(|| LatticeError::NotALattice("no bottom element".into()))?;
        let top = (0..n)
            .find(|&t| (0..n).all(|c| le(c, t)))
            .ok_or_else(|| LatticeError::NotALattice("no top element".into()))?;

        if let Some(map) = &ortho {
            if map.len() != n {
                return Err(LatticeError::NotALattice("ortho map has wrong size".into()));
            }
            for a in 0..n {
                let oa = map[a];
                if oa >= n || map[oa] != a {
                    return Err(LatticeError::NotALattice(format!(
                        "ortho is not an involution at {a}"
                    )));
                }
                if meet_table[a * n + oa] != bottom || join_table[a * n + oa] != top {
                    return Err(LatticeError::NotALattice(format!(
                        "ortho({a}) is not a complement"
                    )));
                }
                for b in 0..n {
                    if le(a, b) && !le(map[b], oa) {
                        return Err(LatticeError::NotALattice(
                            "ortho is not order-reversing".into(),
                        ));
                    }
                }
            }
        }

        Ok(FiniteLattice { n, leq, meet_table, join_table, bottom, top, ortho })
    }

    /// MO_n: bottom, top and n orthocomplementary atom pairs. Elements are
    /// indexed bottom = 0, atoms 1..=2n (pairs (2k−1, 2k)), top = 2n+1.
    pub fn mo(pairs: usize) -> FiniteLattice {
        assert!(pairs >= 1, "MO_n needs at least one atom pair");
        let n = 2 * pairs + 2;
        let bottom = 0;
        let top = n - 1;
        let mut leq = vec![false; n * n];
        for a in 0..n {
            leq[a * n + a] = true;
            leq[bottom * n + a] = true;
            leq[a * n + top] = true;
        }
        let mut ortho = vec![0; n];
        ortho[bottom] = top;
        ortho[top] = bottom;
        for k in 0..pairs {
            let (a, b) = (2 * k + 1, 2 * k + 2);
            ortho[a] = b;
            ortho[b] = a;
        }
        FiniteLattice::from_leq(n, leq, Some(ortho)).expect("MO_n is a lattice")
    }

    /// Boolean lattice with `atoms` atoms: elements are subsets ordered by
    /// inclusion; the orthocomplement is the set complement.
    pub fn boolean(atoms: usize) -> FiniteLattice {
        assert!(atoms <= 4, "Boolean test lattices are capped at 4 atoms");
        let n = 1 << atoms;
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = a & !b == 0;
            }
        }
        let ortho = (0..n).map(|a| !a & (n - 1)).collect();
        FiniteLattice::from_leq(n, leq, Some(ortho)).expect("2^k is a lattice")
    }

    /// Built-in lattices selectable by name: `mo1`, `mo2`, `mo3`, `bool2`.
    pub fn by_name(name: &str) -> Option<FiniteLattice> {
        match name {
            "mo1" => Some(FiniteLattice::mo(1)),
            "mo2" => Some(FiniteLattice::mo(2)),
            "mo3" => Some(FiniteLattice::mo(3)),
            "bool2" => Some(FiniteLattice::boolean(2)),
            _ => None,
        }
    }

    /// Parse the lattice file format: a `lattice n=<N>` header, `leq i j`
    /// lines (the reflexive-transitive closure is applied), optional
    /// `ortho i j` lines, `#` comments.
    pub fn parse(text: &str) -> Result<FiniteLattice, LatticeError> {
        let mut n: Option<usize> = None;
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut ortho_pairs: Vec<(usize, usize)> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |message: &str| LatticeError::Parse {
                line,
                message: message.to_string(),
            };
            let mut words = content.split_whitespace();
            match words.next() {
                Some("lattice") => {
                    let spec = words.next().ok_or_else(|| err("expected n=<N>"))?;
                    let count = spec
                        .strip_prefix("n=")
                        .and_then(|v| v.parse::<usize>().ok())
                        .ok_or_else(|| err("expected n=<N>"))?;
                    n = Some(count);
                }
                Some(kw @ ("leq" | "ortho")) => {
                    let n = n.ok_or_else(|| err("header `lattice n=<N>` must come first"))?;
                    let mut index = || -> Result<usize, LatticeError> {
                        words
                            .next()
                            .and_then(|w| w.parse::<usize>().ok())
                            .filter(|&i| i < n)
                            .ok_or_else(|| err("expected two element indices"))
                    };
                    let (i, j) = (index()?, index()?);
                    if kw == "leq" {
                        pairs.push((i, j));
                    } else {
                        ortho_pairs.push((i, j));
                    }
                }
                _ => return Err(err("expected `lattice`, `leq` or `ortho`")),
            }
        }

        let n = n.ok_or(LatticeError::Parse {
            line: 0,
            message: "missing `lattice n=<N>` header".into(),
        })?;
        let mut leq = vec![false; n * n];
        for a in 0..n {
            leq[a * n + a] = true;
        }
        for (i, j) in pairs {
            leq[i * n + j] = true;
        }
        // Transitive closure.
        for k in 0..n {
            for a in 0..n {
                for b in 0..n {
                    if leq[a * n + k] && leq[k * n + b] {
                        leq[a * n + b] = true;
                    }
                }
            }
        }
        let ortho = if ortho_pairs.is_empty() {
            None
        } else {
            let mut map: Vec<usize> = (0..n).collect();
            for (i, j) in ortho_pairs {
                map[i] = j;
                map[j] = i;
            }
            Some(map)
        };
        FiniteLattice::from_leq(n, leq, ortho)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet_table[a * self.n + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join_table[a * self.n + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn ortho(&self, a: usize) -> Option<usize> {
        self.ortho.as_ref().map(|map| map[a])
    }

    /// Join of a nonempty subset given as a mask.
    fn join_of(&self, subset: u64) -> usize {
        debug_assert!(subset != 0);
        IdealSet::from_mask(subset)
            .members()
            .fold(self.bottom, |acc, k| self.join(acc, k))
    }

    /// Is (⋁ subset) ∧ K′ = ⋁ (K ∧ K′) for EVERY element K′?
    pub fn is_distributive_join(&self, subset: &IdealSet) -> Result<bool, LatticeError> {
        if subset.is_empty() {
            return Err(LatticeError::EmptySubset);
        }
        let join = self.join_of(subset.mask());
        for probe in 0..self.n {
            let lhs = self.meet(join, probe);
            let rhs = subset
                .members()
                .fold(self.bottom, |acc, k| self.join(acc, self.meet(k, probe)));
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The two distributive-ideal conditions: nonempty and downward closed,
    /// and closed under distributive joins of nonempty subsets.
    ///
    /// A subset and its antichain of maximal elements have the same join and
    /// the same distributivity status, so only antichains are enumerated.
    pub fn is_distributive_ideal(&self, subset: &IdealSet) -> bool {
        if subset.is_empty() {
            return false;
        }
        for k in subset.members() {
            if k >= self.n {
                return false;
            }
            for below in 0..self.n {
                if self.leq(below, k) && !subset.contains(below) {
                    return false;
                }
            }
        }
        let mask = subset.mask();
        let mut sub = mask;
        while sub != 0 {
            if self.is_antichain(sub) {
                let candidate = IdealSet::from_mask(sub);
                if self
                    .is_distributive_join(&candidate)
                    .expect("sub is nonempty")
                    && !subset.contains(self.join_of(sub))
                {
                    return false;
                }
            }
            sub = (sub - 1) & mask;
        }
        true
    }

    fn is_antichain(&self, mask: u64) -> bool {
        let members: Vec<usize> = IdealSet::from_mask(mask).members().collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if self.leq(a, b) || self.leq(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// Principal down-set ↓k, the image of k under the embedding into DI(L).
    pub fn down(&self, k: usize) -> IdealSet {
        assert!(k < self.n, "element index out of range");
        let mut mask = 0;
        for below in 0..self.n {
            if self.leq(below, k) {
                mask |= 1 << below;
            }
        }
        IdealSet::from_mask(mask)
    }

    /// All distributive ideals, sorted by membership bit-vector.
    pub fn enumerate_di(&self) -> Result<Vec<IdealSet>, LatticeError> {
        self.enumerate_di_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    pub fn enumerate_di_with_cap(&self, cap: usize) -> Result<Vec<IdealSet>, LatticeError> {
        if self.n > cap {
            return Err(LatticeError::CapExceeded { n: self.n, cap });
        }
        let full: u64 = if self.n == 64 { u64::MAX } else { (1 << self.n) - 1 };
        let mut out = Vec::new();
        for mask in 1..=full {
            let candidate = IdealSet::from_mask(mask);
            if self.is_distributive_ideal(&candidate) {
                out.push(candidate);
            }
        }
        Ok(out)
    }
}

/// The distributive-ideal completion DI(L) of a finite lattice, with its
/// Heyting operations computed over the full enumeration.
pub struct DiCompletion<'a> {
    lattice: &'a FiniteLattice,
    ideals: Vec<IdealSet>,
}

impl<'a> DiCompletion<'a> {
    pub fn new(lattice: &'a FiniteLattice) -> Result<DiCompletion<'a>, LatticeError> {
        let ideals = lattice.enumerate_di()?;
        Ok(DiCompletion { lattice, ideals })
    }

    pub fn lattice(&self) -> &FiniteLattice {
        self.lattice
    }

    pub fn ideals(&self) -> &[IdealSet] {
        &self.ideals
    }

    pub fn count(&self) -> usize {
        self.ideals.len()
    }

    pub fn bottom(&self) -> IdealSet {
        self.lattice.down(self.lattice.bottom())
    }

    pub fn top(&self) -> IdealSet {
        let n = self.lattice.n();
        IdealSet::from_mask(if n == 64 { u64::MAX } else { (1 << n) - 1 })
    }

    /// Meet is intersection; the intersection of distributive ideals is
    /// again one.
    pub fn meet(&self, a: &IdealSet, b: &IdealSet) -> IdealSet {
        let out = a.intersect(b);
        debug_assert!(self.lattice.is_distributive_ideal(&out));
        out
    }

    /// Join: the intersection of every distributive ideal containing the
    /// union — the least upper bound, by completeness.
    pub fn join_many(&self, items: &[IdealSet]) -> IdealSet {
        let union = items.iter().fold(0u64, |acc, i| acc | i.mask());
        let mut acc = self.top();
        for ideal in &self.ideals {
            if union & !ideal.mask() == 0 {
                acc = acc.intersect(ideal);
            }
        }
        acc
    }

    pub fn join(&self, a: &IdealSet, b: &IdealSet) -> IdealSet {
        self.join_many(&[*a, *b])
    }

    /// Relative pseudo-complement I1 → I2 = ⋁{I3 : I3 ∧ I1 ≤ I2}.
    pub fn rpc(&self, a: &IdealSet, b: &IdealSet) -> IdealSet {
        let candidates: Vec<IdealSet> = self
            .ideals
            .iter()
            .copied()
            .filter(|c| c.intersect(a).leq(b))
            .collect();
        self.join_many(&candidates)
    }

    /// Heyting negation ¬I = I → ↓bottom.
    pub fn neg(&self, a: &IdealSet) -> IdealSet {
        self.rpc(a, &self.bottom())
    }

    /// Both distributive laws, checked over every triple of ideals.
    pub fn is_distributive(&self) -> bool {
        for a in &self.ideals {
            for b in &self.ideals {
                for c in &self.ideals {
                    let meet_over_join =
                        self.meet(a, &self.join(b, c)) == self.join(&self.meet(a, b), &self.meet(a, c));
                    let join_over_meet =
                        self.join(a, &self.meet(b, c)) == self.meet(&self.join(a, b), &self.join(a, c));
                    if !meet_over_join || !join_over_meet {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Boolean iff every ideal has a complement.
    pub fn is_boolean(&self) -> bool {
        let (bot, top) = (self.bottom(), self.top());
        self.ideals.iter().all(|a| {
            self.ideals
                .iter()
                .any(|b| self.meet(a, b) == bot && self.join(a, b) == top)
        })
    }
}
