//! Frozen reference expansions of the Taylor operators of degrees 1..=10.
//!
//! These are the known-good values the `verify` command and the acceptance
//! suite compare against. They are pinned as data so verification runs
//! offline and bit-exactly; grouped powers are stored fully expanded (the
//! square of `q_2 q_3` appears as the word `[2, 3, 2, 3]`).

use crate::qword::{QPoly, QWord};
use crate::rational::Rational;

/// One pinned reference expansion.
pub struct Fixture {
    pub n: u32,
    pub expected: QPoly,
}

type Term = (i64, i64, &'static [u16]);

static TABLE_1: &[Term] = &[];

static TABLE_2: &[Term] = &[(1, 3, &[2])];

static TABLE_3: &[Term] = &[(1, 2, &[3])];

static TABLE_4: &[Term] = &[(7, 15, &[2, 2]), (3, 5, &[4])];

static TABLE_5: &[Term] = &[(2, 3, &[5]), (1, 1, &[3, 2]), (4, 3, &[2, 3])];

static TABLE_6: &[Term] = &[
    (5, 7, &[6]),
    (11, 7, &[4, 2]),
    (25, 7, &[3, 3]),
    (18, 7, &[2, 4]),
    (31, 21, &[2, 2, 2]),
];

static TABLE_7: &[Term] = &[
    (3, 4, &[7]),
    (13, 6, &[5, 2]),
    (27, 4, &[4, 3]),
    (33, 4, &[3, 4]),
    (25, 6, &[2, 5]),
    (17, 4, &[3, 2, 2]),
    (31, 6, &[2, 3, 2]),
    (73, 12, &[2, 2, 3]),
];

static TABLE_8: &[Term] = &[
    (160, 9, &[3, 3, 2]),
    (140, 9, &[3, 5]),
    (182, 9, &[3, 2, 3]),
    (43, 5, &[4, 2, 2]),
    (106, 9, &[2, 4, 2]),
    (226, 9, &[2, 3, 3]),
    (239, 15, &[2, 2, 4]),
    (127, 15, &[2, 2, 2, 2]),
    (55, 9, &[2, 6]),
    (7, 9, &[8]),
    (25, 9, &[6, 2]),
    (98, 9, &[5, 3]),
    (91, 5, &[4, 4]),
];

static TABLE_9: &[Term] = &[
    (4, 5, &[9]),
    (17, 5, &[7, 2]),
    (168, 5, &[5, 4]),
    (196, 5, &[4, 5]),
    (209, 5, &[4, 3, 2]),
    (232, 5, &[4, 2, 3]),
    (74, 5, &[5, 2, 2]),
    (47, 1, &[3, 4, 2]),
    (26, 1, &[3, 6]),
    (60, 1, &[3, 2, 4]),
    (31, 1, &[3, 2, 2, 2]),
    (98, 1, &[3, 3, 3]),
    (168, 5, &[2, 2, 5]),
    (226, 5, &[2, 2, 2, 3]),
    (42, 5, &[2, 7]),
    (184, 5, &[2, 3, 2, 2]),
    (378, 5, &[2, 3, 4]),
    (66, 1, &[2, 4, 3]),
    (22, 1, &[2, 5, 2]),
    (197, 5, &[2, 2, 3, 2]),
    (16, 1, &[6, 3]),
];

static TABLE_10: &[Term] = &[
    (9, 11, &[10]),
    (982, 11, &[5, 2, 3]),
    (2702, 33, &[5, 3, 2]),
    (763, 33, &[6, 2, 2]),
    (896, 11, &[5, 5]),
    (612, 11, &[6, 4]),
    (243, 11, &[7, 3]),
    (133, 33, &[8, 2]),
    (4610, 33, &[2, 5, 3]),
    (1205, 33, &[2, 6, 2]),
    (3358, 33, &[2, 4, 2, 2]),
    (2472, 11, &[2, 4, 4]),
    (364, 33, &[2, 8]),
    (441, 11, &[3, 7]),
    (810, 11, &[4, 6]),
    (7262, 33, &[2, 3, 2, 3]),
    (6494, 33, &[2, 3, 3, 2]),
    (5936, 33, &[2, 3, 5]),
    (3240, 11, &[3, 4, 3]),
    (3290, 33, &[3, 5, 2]),
    (3627, 11, &[3, 3, 4]),
    (5173, 33, &[3, 3, 2, 2]),
    (1554, 11, &[3, 2, 5]),
    (5348, 33, &[3, 2, 3, 2]),
    (2028, 11, &[3, 2, 2, 3]),
    (7945, 33, &[2, 2, 3, 3]),
    (2835, 11, &[4, 3, 3]),
    (2050, 33, &[2, 2, 6]),
    (3787, 33, &[2, 2, 4, 2]),
    (1383, 11, &[4, 4, 2]),
    (1636, 11, &[2, 2, 2, 4]),
    (1692, 11, &[4, 2, 4]),
    (2555, 33, &[2, 2, 2, 2, 2]),
    (855, 11, &[4, 2, 2, 2]),
];

static TABLES: &[&[Term]] = &[
    TABLE_1, TABLE_2, TABLE_3, TABLE_4, TABLE_5, TABLE_6, TABLE_7, TABLE_8, TABLE_9, TABLE_10,
];

/// The pinned expansion for degree `n`, available for `1 <= n <= 10`.
pub fn fixture(n: u32) -> Option<Fixture> {
    if !(1..=10).contains(&n) {
        return None;
    }
    let mut expected = QPoly::zero();
    for &(num, den, word) in TABLES[n as usize - 1] {
        expected.add_term(QWord::new(word), Rational::new(num, den));
    }
    Some(Fixture { n, expected })
}

pub const MAX_FIXTURE_DEGREE: u32 = 10;
