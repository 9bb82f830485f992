//! Shows each divergence detector on a machine built to trigger it, and what
//! happens when that detector is switched off.

use onestm::{run, DetectorSet, DivergenceDetector, Move, OneStateMachine};

fn main() {
    use Move::{Left, Right};
    let cases = [
        (
            "runs off into blank tape",
            OneStateMachine::from_chars(&['a'], &[], &[('a', 'a', Right), ('_', '_', Right)])
                .unwrap(),
            "aa",
            DivergenceDetector::BlankEscape,
        ),
        (
            "bounces between two cells",
            OneStateMachine::from_chars(
                &['a', 'b'],
                &[],
                &[('a', 'a', Right), ('b', 'b', Left), ('_', '_', Left)],
            )
            .unwrap(),
            "ab",
            DivergenceDetector::ExactCycle,
        ),
        (
            "grows its tape leftwards",
            OneStateMachine::from_chars(&['1'], &[], &[('_', '1', Right), ('1', '1', Left)])
                .unwrap(),
            "1",
            DivergenceDetector::TranslatedCycle,
        ),
    ];
    for (label, m, input, detector) in cases {
        let all = run(&m, input, 100_000, DetectorSet::ALL).unwrap();
        let alone = run(&m, input, 100_000, DetectorSet::only(detector)).unwrap();
        let without: DetectorSet = [
            DivergenceDetector::BlankEscape,
            DivergenceDetector::ExactCycle,
            DivergenceDetector::TranslatedCycle,
        ]
        .into_iter()
        .filter(|d| *d != detector)
        .collect();
        let rest = run(&m, input, 100_000, without).unwrap();
        println!("{label} on {input:?}");
        println!("  all detectors:     {all}");
        println!("  {detector:?} only: {alone}");
        println!("  without it:        {rest}");
    }
}
