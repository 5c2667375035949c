use anyhow::Result;
use isoseq_core::{branch_roots, expand_root, Check, EnumSpec, SweepContext, SweepReport};
use rayon::prelude::*;

/// Worker count: `ISOSEQ_JOBS` if set, else `requested`, else all cores.
pub fn resolve_jobs(requested: Option<usize>) -> Result<usize> {
    if let Ok(v) = std::env::var("ISOSEQ_JOBS") {
        let jobs: usize = v
            .trim()
            .parse()
            .map_err(|_| anyhow::anyhow!("ISOSEQ_JOBS must be a positive integer, got `{v}`"))?;
        anyhow::ensure!(jobs > 0, "ISOSEQ_JOBS must be positive");
        return Ok(jobs);
    }
    Ok(requested
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1))
}

fn root_depth(n: usize) -> usize {
    n.saturating_sub(2).clamp(2, 5)
}

/// [`isoseq_core::sweep`] with the top branches of the enumeration spread
/// over `jobs` workers. The report does not depend on `jobs`.
pub fn parallel_sweep(spec: &EnumSpec, checks: &[Check], jobs: usize) -> Result<SweepReport> {
    anyhow::ensure!(!checks.is_empty(), isoseq_core::Error::NoChecks);
    let roots = branch_roots(spec, root_depth(spec.n))?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let parts: Vec<Result<SweepReport>> = pool.install(|| {
        roots
            .par_iter()
            .map(|root| {
                let mut ctx = SweepContext::new(checks);
                let mut report = SweepReport::new(checks);
                let mut err = None;
                expand_root(spec, root, &mut |c| {
                    if err.is_none() {
                        if let Err(e) = ctx.run(&c, &mut report) {
                            err = Some(e);
                        }
                    }
                })?;
                match err {
                    Some(e) => Err(e.into()),
                    None => Ok(report),
                }
            })
            .collect()
    });
    let mut total = SweepReport::new(checks);
    for part in parts {
        total.merge(part?);
    }
    Ok(total)
}

/// Enumerated configurations, in enumeration order.
pub fn parallel_enumerate(
    spec: &EnumSpec,
    jobs: usize,
) -> Result<Vec<isoseq_core::DistanceConfiguration>> {
    let roots = branch_roots(spec, root_depth(spec.n))?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let parts: Vec<Result<Vec<_>>> = pool.install(|| {
        roots
            .par_iter()
            .map(|root| {
                let mut out = Vec::new();
                expand_root(spec, root, &mut |c| out.push(c))?;
                Ok(out)
            })
            .collect()
    });
    let mut all = Vec::new();
    for p in parts {
        all.extend(p?);
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_sequential_sweep() {
        let spec = EnumSpec::up_to(5, 3);
        let checks = [Check::Thm3, Check::MajorBound, Check::Thm25];
        let seq = isoseq_core::sweep(&spec, &checks).unwrap();
        for jobs in [1, 3] {
            assert_eq!(parallel_sweep(&spec, &checks, jobs).unwrap(), seq);
        }
        assert_eq!(
            parallel_enumerate(&spec, 2).unwrap(),
            isoseq_core::enumerate_configs(&spec).unwrap()
        );
    }
}
