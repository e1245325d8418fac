//! Numerical semigroups.
//!
//! A semigroup is stored as a membership table up to its conductor `c`; everything from `c`
//! on is a member. The enumeration `v_1 = 0 < v_2 < ...` is 1-based throughout, so `v_2` is
//! the multiplicity.

use std::fmt;

use crate::error::{Error, Result};

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    /// `member[t]` for `t < conductor`.
    member: Vec<bool>,
    conductor: u64,
    gaps: Vec<u64>,
}

impl NumericalSemigroup {
    /// Builds `<gens>`. Zeros and duplicates are dropped; the gcd must be 1.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        let mut generators: Vec<u64> = gens.iter().copied().filter(|&g| g > 0).collect();
        generators.sort_unstable();
        generators.dedup();
        let Some(&smallest) = generators.first() else {
            return Err(Error::EmptyGenerators);
        };
        let d = generators.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(Error::InfiniteGenus(d));
        }

        // Sieve until `smallest` consecutive members appear; from there on all integers are in.
        let mut table = vec![true];
        let mut run = 1u64;
        let mut t = 0u64;
        while run < smallest {
            t += 1;
            let is_member = generators
                .iter()
                .any(|&g| g <= t && table[(t - g) as usize]);
            table.push(is_member);
            run = if is_member { run + 1 } else { 0 };
        }
        let conductor = t + 1 - run;
        table.truncate(conductor as usize);
        let gaps = (0..conductor).filter(|&t| !table[t as usize]).collect();

        // Drop generators that are redundant, keeping the minimal system.
        let minimal = generators
            .iter()
            .copied()
            .filter(|&g| {
                let others: Vec<u64> = generators.iter().copied().filter(|&h| h < g).collect();
                !representable(g, &others)
            })
            .collect();

        Ok(NumericalSemigroup {
            generators: minimal,
            member: table,
            conductor,
            gaps,
        })
    }

    /// The natural numbers `N_0 = <1>`.
    pub fn naturals() -> Self {
        Self::from_generators(&[1]).expect("<1> is valid")
    }

    /// Minimal generating system, increasing.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn contains(&self, t: i64) -> bool {
        t >= 0 && (t as u64 >= self.conductor || self.member[t as usize])
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    /// Largest gap, or `None` for `N_0`.
    pub fn largest_gap(&self) -> Option<u64> {
        self.gaps.last().copied()
    }

    /// The multiplicity `v_2`.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn is_symmetric(&self) -> bool {
        self.conductor == 2 * self.genus()
    }

    /// Elements `<= bound`, increasing.
    pub fn elements_up_to(&self, bound: u64) -> Vec<u64> {
        (0..=bound).filter(|&t| self.contains(t as i64)).collect()
    }

    /// Elements below the conductor.
    pub fn small_elements(&self) -> Vec<u64> {
        (0..self.conductor)
            .filter(|&t| self.member[t as usize])
            .collect()
    }

    /// `v_i`, 1-based.
    pub fn element_at(&self, i: usize) -> Result<u64> {
        if i == 0 {
            return Err(Error::IndexOutOfRange {
                index: 0,
                lo: 1,
                hi: i64::MAX,
            });
        }
        let small = self.small_elements();
        Ok(match small.get(i - 1) {
            Some(&v) => v,
            None => self.conductor + (i - 1 - small.len()) as u64,
        })
    }

    /// `iota(m) = #{i : v_i <= m}`, the dimension of `L(mQ)`.
    pub fn iota(&self, m: i64) -> u64 {
        if m < 0 {
            0
        } else if m as u64 >= self.conductor {
            m as u64 + 1 - self.genus()
        } else {
            self.member[..=m as usize].iter().filter(|&&b| b).count() as u64
        }
    }

    /// `S \ (a + S)`; has exactly `a` elements.
    pub fn shifted_complement(&self, a: u64) -> Result<Vec<u64>> {
        if !self.contains(a as i64) {
            return Err(Error::NotInSemigroup(a));
        }
        Ok((0..a + self.conductor)
            .filter(|&s| self.contains(s as i64) && !self.contains(s as i64 - a as i64))
            .collect())
    }

    /// `{a in S* : a - v_2 not in S*}`.
    pub fn apery_set(&self) -> Vec<u64> {
        let v2 = self.multiplicity();
        (1..=self.conductor + v2)
            .filter(|&a| {
                let below = a as i64 - v2 as i64;
                self.contains(a as i64) && !(below > 0 && self.contains(below))
            })
            .collect()
    }

    /// `q S* + S = {q h + h' : h in S, h != 0, h' in S}`.
    pub fn scaled_sumset(&self, q: u64) -> CofiniteSet {
        // q v_2 + c and everything above is in the set.
        let bound = q * self.multiplicity() + self.conductor;
        let members: Vec<bool> = (0..bound)
            .map(|t| {
                (1..=t / q).any(|h| self.contains(h as i64) && self.contains((t - q * h) as i64))
            })
            .collect();
        CofiniteSet::from_table(&members)
    }

    /// `q S* + S` listed up to `cutoff` inclusive.
    pub fn scaled_sumset_up_to(&self, q: u64, cutoff: u64) -> Vec<u64> {
        let set = self.scaled_sumset(q);
        (0..=cutoff).filter(|&t| set.contains(t)).collect()
    }

    /// `S \ (q S* + S)`.
    pub fn scaled_complement(&self, q: u64) -> Vec<u64> {
        let set = self.scaled_sumset(q);
        (0..set.conductor())
            .filter(|&t| self.contains(t as i64) && !set.contains(t))
            .collect()
    }

    /// Point-count bounds for a curve over GF(q) with this Weierstrass semigroup.
    pub fn lgm_bound(&self, q: u64) -> LgmBound {
        LgmBound {
            refined: self.scaled_complement(q).len() as u64 + 1,
            lewittes: q * self.multiplicity() + 1,
        }
    }
}

fn representable(t: u64, gens: &[u64]) -> bool {
    let mut reach = vec![false; t as usize + 1];
    reach[0] = true;
    for s in 1..=t as usize {
        reach[s] = gens
            .iter()
            .any(|&g| g as usize <= s && reach[s - g as usize]);
    }
    reach[t as usize]
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(u64::to_string).collect();
        write!(f, "<{}>", gens.join(","))
    }
}

/// Genus `(a-1)(b-1)/2` of `<a, b>`.
pub fn genus_two_generators(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 || gcd(a, b) != 1 {
        return Err(Error::NotCoprime { a, b });
    }
    Ok((a - 1) * (b - 1) / 2)
}

/// The two point-count bounds: `#(H \ (qH* + H)) + 1` and the weaker `q v_2 + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LgmBound {
    pub refined: u64,
    pub lewittes: u64,
}

/// A subset of `N_0` containing every integer from its conductor on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CofiniteSet {
    below: Vec<bool>,
}

impl CofiniteSet {
    /// `table[t]` gives membership for `t < table.len()`; larger values are members.
    pub fn from_table(table: &[bool]) -> Self {
        let len = table.iter().rposition(|&b| !b).map_or(0, |i| i + 1);
        CofiniteSet {
            below: table[..len].to_vec(),
        }
    }

    pub fn contains(&self, t: u64) -> bool {
        self.below.get(t as usize).copied().unwrap_or(true)
    }

    /// Smallest `c` with `[c, inf)` inside the set.
    pub fn conductor(&self) -> u64 {
        self.below.len() as u64
    }

    /// Members below the conductor.
    pub fn small_elements(&self) -> Vec<u64> {
        (0..self.conductor())
            .filter(|&t| self.contains(t))
            .collect()
    }
}

impl fmt::Display for CofiniteSet {
    /// Lists members up to the conductor, then an arrow.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.small_elements().iter().map(u64::to_string).collect();
        parts.push(self.conductor().to_string());
        parts.push("->".into());
        write!(f, "{{{}}}", parts.join(","))
    }
}
