//! Published reference values, transcribed cell by cell.
#![allow(dead_code)]

/// WLP grid, rows `n = 2..=20`; character `k - 1` of row `n` is the verdict for `k`.
pub const WLP_GRID: [&str; 19] = [
    "✓", // 2
    "✓✓", // 3
    "✓✓✓", // 4
    "✓✓✓✓", // 5
    "✓✓✓✓✓", // 6
    "✓✓✗✓✓✓", // 7
    "✓✓✗✓✓✓✓", // 8
    "✓✓✗✓✓✓✓✓", // 9
    "✓✓✗✓✓✓✓✓✓", // 10
    "✓✓✗✓✓✓✓✓✓✓", // 11
    "✓✓✗✓✗✓✓✓✓✓✓", // 12
    "✓✓✗✓✗✓✓✓✓✓✓✓", // 13
    "✓✓✗✓✗✓✓✓✓✓✓✓✓", // 14
    "✓✓✗✓✗✓✗✓✓✓✓✓✓✓", // 15
    "✓✓✗✓✗✓✗✓✓✓✓✓✓✓✓", // 16
    "✓✓✗✓✗✓✗✓✓✓✓✓✓✓✓✓", // 17
    "✓✓✗✓✗✓✗✓✓✓✓✓✓✓✓✓✓", // 18
    "✓✓✗✓✗✓✗✓✓✓✓✓✓✓✓✓✓✓", // 19
    "✓✓✗✓✗✓✗✓✗✓✓✓✓✓✓✓✓✓✓", // 20
];

/// SLP grid, rows `n = 2..=14`.
pub const SLP_GRID: [&str; 13] = [
    "✓", // 2
    "✓✓", // 3
    "✓✓✓", // 4
    "✓✗✓✓", // 5
    "✓✗✓✓✓", // 6
    "✓✗✗✓✓✓", // 7
    "✓✓✗✓✓✓✓", // 8
    "✓✓✗✗✓✓✓✓", // 9
    "✓✓✗✗✓✓✓✓✓", // 10
    "✓✓✗✗✗✓✓✓✓✓", // 11
    "✓✓✗✗✗✓✓✓✓✓✓", // 12
    "✓✓✗✗✗✗✓✓✓✓✓✓", // 13
    "✓✓✗✗✗✗✓✓✓✓✓✓✓", // 14
];

/// Smallest `n` failing the WLP, for `k = 3, 5, 7, 9, 11`.
pub const FIRST_FAILURES: [(u32, u32); 5] = [(3, 7), (5, 12), (7, 15), (9, 20), (11, 23)];

/// `(n, dim A_2, dim A_3)` for `vdw(n, 3)`.
pub const DIMS_K3: [(u32, u64, u64); 87] = [
    (4, 6, 4),
    (5, 9, 7),
    (6, 12, 10),
    (7, 18, 17),
    (8, 24, 24),
    (9, 29, 30),
    (10, 35, 40),
    (11, 41, 50),
    (12, 47, 60),
    (13, 56, 73),
    (14, 65, 86),
    (15, 74, 99),
    (16, 89, 116),
    (17, 103, 132),
    (18, 117, 148),
    (19, 132, 168),
    (20, 147, 188),
    (21, 159, 207),
    (22, 177, 230),
    (23, 195, 253),
    (24, 213, 276),
    (25, 234, 302),
    (26, 255, 328),
    (27, 276, 354),
    (28, 298, 384),
    (29, 317, 413),
    (30, 336, 442),
    (31, 358, 475),
    (32, 380, 508),
    (33, 401, 540),
    (34, 428, 576),
    (35, 455, 612),
    (36, 482, 648),
    (37, 510, 687),
    (38, 538, 726),
    (39, 566, 765),
    (40, 600, 808),
    (41, 633, 850),
    (42, 666, 892),
    (43, 702, 938),
    (44, 738, 984),
    (45, 771, 1029),
    (46, 805, 1078),
    (47, 839, 1127),
    (48, 873, 1176),
    (49, 910, 1228),
    (50, 947, 1280),
    (51, 984, 1332),
    (52, 1027, 1388),
    (53, 1067, 1443),
    (54, 1107, 1498),
    (55, 1148, 1557),
    (56, 1189, 1616),
    (57, 1229, 1674),
    (58, 1275, 1736),
    (59, 1321, 1798),
    (60, 1367, 1860),
    (61, 1416, 1925),
    (62, 1465, 1990),
    (63, 1514, 2055),
    (64, 1564, 2124),
    (65, 1613, 2192),
    (66, 1662, 2260),
    (67, 1714, 2332),
    (68, 1766, 2404),
    (69, 1815, 2475),
    (70, 1870, 2550),
    (71, 1925, 2625),
    (72, 1980, 2700),
    (73, 2036, 2778),
    (74, 2092, 2856),
    (75, 2148, 2934),
    (76, 2210, 3016),
    (77, 2269, 3097),
    (78, 2328, 3178),
    (79, 2390, 3263),
    (80, 2452, 3348),
    (81, 2513, 3432),
    (82, 2575, 3520),
    (83, 2637, 3608),
    (84, 2699, 3696),
    (85, 2764, 3787),
    (86, 2829, 3878),
    (87, 2894, 3969),
    (88, 2965, 4064),
    (89, 3035, 4158),
    (90, 3105, 4252),
];

fn grid_verdict(grid: &[&str], n: u32, k: u32) -> Option<bool> {
    let row = grid.get((n as usize).checked_sub(2)?)?;
    match row.chars().nth((k as usize).checked_sub(1)?)? {
        '✓' => Some(true),
        '✗' => Some(false),
        _ => None,
    }
}

pub fn wlp(n: u32, k: u32) -> Option<bool> {
    grid_verdict(&WLP_GRID, n, k)
}

pub fn slp(n: u32, k: u32) -> Option<bool> {
    grid_verdict(&SLP_GRID, n, k)
}
