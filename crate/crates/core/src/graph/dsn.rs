use crate::error::{Error, Result};
use crate::graph::msn::{Msn, MsnBuilder};

/// One time window of a [`Dsn`]: events with `start <= t < end`.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    pub start: i64,
    pub end: i64,
    pub network: Msn,
}

/// A dynamic network: consecutive, possibly overlapping windows over one
/// node universe and one layer set.
#[derive(Debug, Clone, PartialEq)]
pub struct Dsn {
    pub frames: Vec<Frame>,
    pub window: i64,
    pub overlap: i64,
    /// Timestamp of the earliest event; frame k starts at origin + k·step.
    pub origin: i64,
}

impl Dsn {
    pub fn step(&self) -> i64 {
        self.window - self.overlap
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }

    /// Indices of frames whose window contains `t`.
    pub fn frames_containing(&self, t: i64) -> Vec<usize> {
        self.frames
            .iter()
            .enumerate()
            .filter(|(_, f)| f.start <= t && t < f.end)
            .map(|(k, _)| k)
            .collect()
    }

    /// Wraps already-built frame networks, e.g. per-frame edge-list files.
    pub fn from_frames(networks: Vec<Msn>, window: i64, overlap: i64) -> Result<Dsn> {
        if window <= 0 || overlap < 0 || overlap >= window {
            return Err(Error::InvalidWindow { window, overlap });
        }
        let step = window - overlap;
        let frames = networks
            .into_iter()
            .enumerate()
            .map(|(k, network)| Frame {
                start: k as i64 * step,
                end: k as i64 * step + window,
                network,
            })
            .collect();
        Ok(Dsn {
            frames,
            window,
            overlap,
            origin: 0,
        })
    }
}

/// Slices an event log into windows of length `window` advancing by
/// `window - overlap`. Weights of repeated (source, target, layer) events in
/// one frame are summed. Every frame carries every node and layer of the log.
pub fn load_dsn<I, S>(events: I, window: i64, overlap: i64) -> Result<Dsn>
where
    I: IntoIterator<Item = (S, S, S, f64, i64)>,
    S: AsRef<str>,
{
    if window <= 0 || overlap < 0 || overlap >= window {
        return Err(Error::InvalidWindow { window, overlap });
    }
    let events: Vec<(S, S, S, f64, i64)> = events.into_iter().collect();
    let origin = events.iter().map(|e| e.4).min().ok_or(Error::EmptyLog)?;
    let last = events.iter().map(|e| e.4).max().unwrap_or(origin);
    let step = window - overlap;
    let span = last - origin + 1;
    let count = if span <= window {
        1
    } else {
        ((span - window) + step - 1) / step + 1
    };

    let mut universe = MsnBuilder::new();
    for (s, t, l, w, _) in &events {
        // validates self-loops and weights once, up front
        MsnBuilder::new().add_edge(s.as_ref(), t.as_ref(), l.as_ref(), *w)?;
        universe.add_node(s.as_ref()).add_node(t.as_ref()).add_layer(l.as_ref());
    }

    let mut builders = vec![universe; count as usize];
    for (s, t, l, w, ts) in &events {
        let rel = ts - origin;
        let first = if rel < window { 0 } else { (rel - window) / step + 1 };
        let mut k = first;
        while k < count && k * step <= rel {
            if rel < k * step + window {
                builders[k as usize].accumulate_edge(s.as_ref(), t.as_ref(), l.as_ref(), *w)?;
            }
            k += 1;
        }
    }
    let frames = builders
        .iter()
        .enumerate()
        .map(|(k, b)| Frame {
            start: origin + k as i64 * step,
            end: origin + k as i64 * step + window,
            network: b.build(),
        })
        .collect();
    Ok(Dsn {
        frames,
        window,
        overlap,
        origin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ninety_day_windows_with_overlap() {
        let events: Vec<_> = (0..180).map(|t| ("a", "b", "email", 1.0, t)).collect();
        let dsn = load_dsn(events, 90, 45).unwrap();
        let bounds: Vec<_> = dsn.frames.iter().map(|f| (f.start, f.end)).collect();
        assert_eq!(bounds, vec![(0, 90), (45, 135), (90, 180)]);
        assert_eq!(dsn.frames[0].network.weight(0, 1, 0), 90.0);
    }

    #[test]
    fn single_event() {
        let dsn = load_dsn(vec![("a", "b", "l", 1.0, 0)], 10, 0).unwrap();
        assert_eq!(dsn.len(), 1);
        assert_eq!(dsn.frames[0].network.edge_count(), 1);
    }

    #[test]
    fn empty_log_and_bad_window() {
        assert_eq!(load_dsn(Vec::<(&str, &str, &str, f64, i64)>::new(), 10, 0), Err(Error::EmptyLog));
        assert!(matches!(load_dsn(vec![("a", "b", "l", 1.0, 0)], 10, 10), Err(Error::InvalidWindow { .. })));
    }

    #[test]
    fn disjoint_windows() {
        let events: Vec<_> = (0..100).map(|t| ("a", "b", "l", 1.0, t)).collect();
        let dsn = load_dsn(events, 45, 0).unwrap();
        assert_eq!(dsn.len(), 3);
        for t in 0..100 {
            assert_eq!(dsn.frames_containing(t).len(), 1);
        }
    }
}
