//! Bounded fan-out for embarrassingly parallel rows, capped by the
//! `ASSOCFORM_THREADS` environment variable.

use crate::error::CliError;

pub const THREADS_ENV: &str = "ASSOCFORM_THREADS";

/// Maximum worker count: `ASSOCFORM_THREADS` when set (must be a positive
/// integer), otherwise the machine's available parallelism.
pub fn thread_cap() -> Result<usize, CliError> {
    match std::env::var(THREADS_ENV) {
        Ok(raw) => raw
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "{THREADS_ENV} must be a positive integer, got {raw:?}"
                ))
            }),
        Err(_) => Ok(std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)),
    }
}

/// Applies `f` to every item on up to `cap` worker threads and returns the
/// results in input order.
pub fn par_map_ordered<T, U, F>(items: Vec<T>, cap: usize, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync,
{
    let cap = cap.max(1);
    if cap == 1 || items.len() <= 1 {
        return items.into_iter().map(f).collect();
    }
    let n = items.len();
    let chunk = n.div_ceil(cap);
    let mut slots: Vec<Option<U>> = (0..n).map(|_| None).collect();
    std::thread::scope(|scope| {
        let f = &f;
        let mut items = items;
        let mut rest: &mut [Option<U>] = &mut slots;
        while !items.is_empty() {
            let take = chunk.min(items.len());
            let batch: Vec<T> = items.drain(..take).collect();
            let (head, tail) = rest.split_at_mut(take);
            rest = tail;
            scope.spawn(move || {
                for (slot, item) in head.iter_mut().zip(batch) {
                    *slot = Some(f(item));
                }
            });
        }
    });
    slots
        .into_iter()
        .map(|s| s.expect("worker filled every slot"))
        .collect()
}
