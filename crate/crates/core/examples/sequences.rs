//! Turns evolution timelines into a fixed-window dataset, then scores a
//! naive "same as last event" predictor on it.

use mlsna::evolution::{EventKind, EvolutionEvent, evolution_chains};
use mlsna::prediction::{export_dataset, extract_sequences, prf, DatasetFormat};

fn event(i: usize, g1: &str, g2: &str, kind: EventKind, s1: usize, s2: usize) -> EvolutionEvent {
    EvolutionEvent {
        frame_i: i,
        group_i: Some(g1.into()),
        frame_j: i + 1,
        group_j: Some(g2.into()),
        kind,
        inclusion_fwd: 1.0,
        inclusion_bwd: 1.0,
        size_i: s1,
        size_j: s2,
    }
}

fn main() -> mlsna::Result<()> {
    use EventKind::*;
    let sizes = [5, 7, 7, 9, 9, 6, 6, 6];
    let kinds = [Growing, Continuing, Growing, Continuing, Shrinking, Continuing, Continuing];
    let events: Vec<EvolutionEvent> = kinds
        .iter()
        .enumerate()
        .map(|(i, &k)| event(i, "g", "g", k, sizes[i], sizes[i + 1]))
        .collect();

    let rows = extract_sequences(&evolution_chains(&events), 4);
    print!("{}", export_dataset(&rows, DatasetFormat::Csv)?);

    let predicted: Vec<String> = rows.iter().map(|r| r.events.last().expect("window > 1").to_string()).collect();
    let actual: Vec<String> = rows.iter().map(|r| r.label.to_string()).collect();
    let report = prf(&predicted, &actual)?;
    for c in &report.classes {
        println!("{:<11} P {:.2} R {:.2} F {:.2}", c.class, c.precision, c.recall, c.f);
    }
    println!("weighted F {:.3}", report.weighted_f);
    Ok(())
}
