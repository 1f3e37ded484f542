//! Published counts used as fixed expectations.

#![allow(dead_code)]

/// Pre-map counts for d = 1..=20, columns sdg, Sdg, sDg, SDg.
pub const PREMAPS: [(usize, [u64; 4]); 20] = [
    (1, [1, 1, 1, 1]),
    (2, [2, 3, 2, 3]),
    (3, [2, 3, 2, 3]),
    (4, [5, 11, 6, 14]),
    (5, [6, 15, 11, 33]),
    (6, [17, 60, 37, 167]),
    (7, [27, 125, 100, 619]),
    (8, [83, 529, 405, 3686]),
    (9, [185, 1663, 1527, 18389]),
    (10, [608, 7557, 6824, 120075]),
    (11, [1779, 31447, 30566, 706851]),
    (12, [6407, 155758, 151137, 5032026]),
    (13, [22558, 763211, 757567, 33334033]),
    (14, [87929, 4089438, 4058219, 255064335]),
    (15, [348254, 22190781, 22150964, 1855614411]),
    (16, [1456341, 127435846, 127215233, 15129137658]),
    (17, [6245592, 745343353, 745057385, 119025187809]),
    (18, [27766356, 4549465739, 4547820514, 1026870988199]),
    (19, [126655587, 28308456491, 28306267210, 8640532108675]),
    (20, [594304478, 182435301597, 182422562168, 78446356190934]),
];

/// Map counts for even d = 2..=24, columns sdG, SdG, sDG, SDG.
pub const MAPS: [(usize, [u64; 4]); 12] = [
    (2, [1, 2, 1, 2]),
    (4, [2, 6, 3, 9]),
    (6, [5, 26, 13, 90]),
    (8, [17, 173, 121, 1742]),
    (10, [79, 1844, 1538, 48580]),
    (12, [554, 29570, 28010, 1776358]),
    (14, [5283, 628680, 618243, 79080966]),
    (16, [65346, 16286084, 16223774, 4151468212]),
    (18, [966156, 490560202, 490103223, 250926306726]),
    (20, [16411700, 16764409276, 16761330464, 17163338379388]),
    (
        22,
        [312700297, 639992710196, 639968394245, 1310654311464970],
    ),
    (
        24,
        [
            6589356711,
            26985505589784,
            26985325092730,
            110531845060209836,
        ],
    ),
];

pub fn bfile_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data/bfiles")
}
