//! Isomorph-free enumeration of distance configurations by orderly
//! generation.
//!
//! A configuration is stored as its color sequence in colex pair order with
//! colors numbered by first occurrence. A sequence on `t + 1` points is kept
//! only if it is the least sequence of its class (over point orderings and
//! color renamings). The first `t` columns of a least sequence are again a
//! least sequence, so extending only kept sequences by one column reaches
//! every class exactly once.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::canon::lexmin;
use crate::config::{pair_count, DistanceConfiguration};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumSpec {
    pub n: usize,
    pub max_colors: usize,
    /// Keep only configurations with exactly this many colors.
    pub exact_colors: Option<usize>,
}

impl EnumSpec {
    pub fn up_to(n: usize, max_colors: usize) -> Self {
        Self {
            n,
            max_colors,
            exact_colors: None,
        }
    }

    pub fn exact(n: usize, colors: usize) -> Self {
        Self {
            n,
            max_colors: colors,
            exact_colors: Some(colors),
        }
    }

    /// Largest `n` allowed for a color bound.
    pub fn max_points(max_colors: usize) -> usize {
        match max_colors {
            0 | 1 => 12,
            2 => 7,
            3 => 6,
            _ => 5,
        }
    }

    /// Checks the parameters and the size budget.
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::NoPoints);
        }
        if self.max_colors == 0 {
            return Err(Error::InvalidParameters(String::from(
                "max_colors must be at least 1",
            )));
        }
        if let Some(e) = self.exact_colors {
            if e == 0 || e > self.max_colors {
                return Err(Error::InvalidParameters(format!(
                    "exact_colors = {e} must lie in 1..={}",
                    self.max_colors
                )));
            }
        }
        let bound = Self::max_points(self.max_colors);
        if self.n > bound {
            return Err(Error::BudgetExceeded(format!(
                "n = {} with up to {} colors (limit n ≤ {bound})",
                self.n, self.max_colors
            )));
        }
        Ok(())
    }

    fn color_cap(&self) -> usize {
        self.max_colors
            .min(pair_count(self.n))
            .min(u16::MAX as usize)
    }
}

/// All configurations for `spec`, one per class, each in canonical form.
pub fn enumerate_configs(spec: &EnumSpec) -> Result<Vec<DistanceConfiguration>> {
    let mut out = Vec::new();
    for_each_config(spec, |c| out.push(c))?;
    Ok(out)
}

/// Streams the configurations of [`enumerate_configs`] in the same order.
pub fn for_each_config<F: FnMut(DistanceConfiguration)>(spec: &EnumSpec, mut f: F) -> Result<()> {
    for root in branch_roots(spec, 0)? {
        expand_root(spec, &root, &mut f)?;
    }
    Ok(())
}

/// Canonical sequences on `min(depth, n)` points (at least 2 when `n ≥ 2`)
/// from which every configuration grows. Expanding each root with
/// [`expand_root`] and concatenating in order gives [`enumerate_configs`].
pub fn branch_roots(spec: &EnumSpec, depth: usize) -> Result<Vec<Vec<u16>>> {
    spec.validate()?;
    let depth = depth.clamp(spec.n.min(2), spec.n);
    let mut out = Vec::new();
    let mut gen = Gen::new(spec, depth);
    gen.grow(&mut Vec::new(), 1, 0, &mut |seq: &[u16]| {
        out.push(seq.to_vec())
    });
    Ok(out)
}

/// Configurations below one root from [`branch_roots`].
pub fn expand_root<F: FnMut(DistanceConfiguration)>(
    spec: &EnumSpec,
    root: &[u16],
    f: &mut F,
) -> Result<()> {
    spec.validate()?;
    let t = points_of(root.len())
        .ok_or_else(|| Error::InvalidParameters(String::from("root length is not a pair count")))?;
    if t > spec.n || (t < spec.n.min(2)) {
        return Err(Error::InvalidParameters(format!(
            "root has {t} points for n = {}",
            spec.n
        )));
    }
    let used = root.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
    if !is_canonical(t, root) || used > spec.color_cap() {
        return Err(Error::InvalidParameters(String::from(
            "root is not a canonical sequence",
        )));
    }
    let mut seq = root.to_vec();
    let mut gen = Gen::new(spec, spec.n);
    let n = spec.n;
    let exact = spec.exact_colors;
    gen.grow(&mut seq, t, used, &mut |s: &[u16]| {
        let colors = s.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        if exact.is_none_or(|e| e == colors) {
            f(to_config(n, s));
        }
    });
    Ok(())
}

fn points_of(len: usize) -> Option<usize> {
    (1..=64).find(|&t| pair_count(t) == len)
}

fn to_config(n: usize, seq: &[u16]) -> DistanceConfiguration {
    DistanceConfiguration::from_labels(n, seq)
}

fn matrix(t: usize, seq: &[u16]) -> Vec<u16> {
    let mut m = vec![0u16; t * t];
    let mut idx = 0;
    for j in 1..t {
        for i in 0..j {
            m[i * t + j] = seq[idx];
            m[j * t + i] = seq[idx];
            idx += 1;
        }
    }
    m
}

fn is_canonical(t: usize, seq: &[u16]) -> bool {
    lexmin(t, &matrix(t, seq), true).seq == seq
}

struct Gen {
    /// Stop (and report) at this many points.
    target: usize,
    cap: usize,
    exact: Option<usize>,
    total_pairs: usize,
}

impl Gen {
    fn new(spec: &EnumSpec, target: usize) -> Self {
        Self {
            target,
            cap: spec.color_cap(),
            exact: spec.exact_colors,
            total_pairs: pair_count(spec.n),
        }
    }

    /// `seq` is canonical on `t` points using `used` colors.
    fn grow(&mut self, seq: &mut Vec<u16>, t: usize, used: usize, emit: &mut dyn FnMut(&[u16])) {
        if let Some(e) = self.exact {
            if used + (self.total_pairs - seq.len()) < e {
                return;
            }
        }
        if t >= self.target {
            emit(seq);
            return;
        }
        self.column(seq, t, 0, used, emit);
    }

    /// Fills entry `i` of the column for point `t`.
    fn column(
        &mut self,
        seq: &mut Vec<u16>,
        t: usize,
        i: usize,
        used: usize,
        emit: &mut dyn FnMut(&[u16]),
    ) {
        if i == t {
            if is_canonical(t + 1, seq) {
                self.grow(seq, t + 1, used, emit);
            }
            return;
        }
        let top = used.min(self.cap - 1);
        for c in 0..=top {
            seq.push(c as u16);
            self.column(seq, t, i + 1, used.max(c + 1), emit);
            seq.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isometry::canonical_form;

    fn count(spec: EnumSpec) -> usize {
        enumerate_configs(&spec).unwrap().len()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(EnumSpec::exact(3, 1)), 1);
        assert_eq!(count(EnumSpec::exact(3, 2)), 1);
        assert_eq!(count(EnumSpec::exact(3, 3)), 1);
        assert_eq!(count(EnumSpec::up_to(2, 5)), 1);
        assert_eq!(count(EnumSpec::exact(1, 1)), 0);
        assert_eq!(count(EnumSpec::up_to(12, 1)), 1);
        // 9 nontrivial graphs on 4 vertices, paired by complement except P4
        assert_eq!(count(EnumSpec::exact(4, 2)), 5);
    }

    #[test]
    fn outputs_are_canonical_and_distinct() {
        let all = enumerate_configs(&EnumSpec::up_to(5, 3)).unwrap();
        let mut seen = alloc::collections::BTreeSet::new();
        for c in &all {
            let form = canonical_form(c);
            let own: Vec<u16> = c.edges().iter().map(|e| e.0).collect();
            assert_eq!(form, own);
            assert!(seen.insert(form));
        }
    }

    #[test]
    fn roots_partition_the_output() {
        let spec = EnumSpec::up_to(6, 2);
        let direct: Vec<_> = enumerate_configs(&spec).unwrap();
        for depth in [0, 3, 4, 6] {
            let mut via = Vec::new();
            for root in branch_roots(&spec, depth).unwrap() {
                expand_root(&spec, &root, &mut |c| via.push(c)).unwrap();
            }
            assert_eq!(direct, via, "depth {depth}");
        }
    }

    #[test]
    fn budget_guard() {
        assert!(matches!(
            enumerate_configs(&EnumSpec::up_to(8, 2)),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(matches!(
            enumerate_configs(&EnumSpec::up_to(7, 3)),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(matches!(
            enumerate_configs(&EnumSpec::up_to(6, 4)),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(matches!(
            enumerate_configs(&EnumSpec::up_to(13, 1)),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(enumerate_configs(&EnumSpec {
            n: 4,
            max_colors: 2,
            exact_colors: Some(3)
        })
        .is_err());
        assert!(enumerate_configs(&EnumSpec::up_to(0, 2)).is_err());
    }

    #[test]
    fn rejects_bad_roots() {
        let spec = EnumSpec::up_to(5, 2);
        assert!(expand_root(&spec, &[0, 1], &mut |_| {}).is_err());
        assert!(expand_root(&spec, &[1, 0, 0], &mut |_| {}).is_err());
        assert!(expand_root(&spec, &[0, 0, 1], &mut |_| {}).is_ok());
    }
}
