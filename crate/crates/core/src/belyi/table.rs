//! The genus-zero Belyi maps J = β(t) as factored rational functions of a
//! Hauptmodul t. Factor coefficients are lowest degree first.

pub(super) struct Entry {
    pub level: u64,
    pub numerator_constant: i64,
    pub numerator: &'static [(&'static [i64], u32)],
    pub denominator_constant: i64,
    pub denominator: &'static [(&'static [i64], u32)],
    /// β(1) as "p/q" or "p".
    pub value_at_one: &'static str,
}

const T: &[i64] = &[0, 1];

pub(super) const TABLE: [Entry; 15] = [
    Entry {
        level: 1,
        numerator_constant: 1,
        numerator: &[(T, 1)],
        denominator_constant: 1,
        denominator: &[],
        value_at_one: "1",
    },
    Entry {
        level: 2,
        numerator_constant: 1,
        numerator: &[(&[256, 1], 3)],
        denominator_constant: 1728,
        denominator: &[(T, 2)],
        value_at_one: "16974593/1728",
    },
    Entry {
        level: 3,
        numerator_constant: 27,
        numerator: &[(&[9, 1], 3), (&[1, 1], 1)],
        denominator_constant: 1728,
        denominator: &[(T, 3)],
        value_at_one: "125/4",
    },
    Entry {
        level: 4,
        numerator_constant: 16,
        numerator: &[(&[16, 16, 1], 3)],
        denominator_constant: 1728,
        denominator: &[(&[1, 1], 1), (T, 4)],
        value_at_one: "1331/8",
    },
    Entry {
        level: 5,
        numerator_constant: 1,
        numerator: &[(&[3125, 250, 1], 3)],
        denominator_constant: 1728,
        denominator: &[(T, 5)],
        value_at_one: "601211584/27",
    },
    Entry {
        level: 6,
        numerator_constant: 1,
        numerator: &[(&[3, 2], 3), (&[243, 486, 252, 8], 3)],
        denominator_constant: 1728,
        denominator: &[(T, 6), (&[9, 8], 3), (&[1, 1], 2)],
        value_at_one: "120920208625/33958656",
    },
    Entry {
        level: 7,
        numerator_constant: 1,
        numerator: &[(&[49, 13, 1], 1), (&[2401, 245, 1], 3)],
        denominator_constant: 1728,
        denominator: &[(T, 7)],
        value_at_one: "129825458161/192",
    },
    Entry {
        level: 8,
        numerator_constant: 4,
        numerator: &[(&[256, 512, 320, 64, 1], 3)],
        denominator_constant: 1728,
        denominator: &[(T, 8), (&[2, 1], 2), (&[1, 1], 1)],
        value_at_one: "1532808577/7776",
    },
    Entry {
        level: 9,
        numerator_constant: 3,
        numerator: &[(&[3, 1], 3), (&[243, 243, 81, 1], 3)],
        denominator_constant: 1728,
        denominator: &[(T, 9), (&[3, 3, 1], 1)],
        value_at_one: "183250432/63",
    },
    Entry {
        level: 10,
        numerator_constant: 1,
        numerator: &[(&[800000, 800000, 320000, 64000, 6400, 260, 1], 3)],
        denominator_constant: 1728,
        denominator: &[(T, 10), (&[5, 1], 5), (&[4, 1], 2)],
        value_at_one: "7888454487007174781/335923200",
    },
    Entry {
        level: 12,
        numerator_constant: 1,
        numerator: &[
            (&[512, 2304, 4032, 3456, 1464, 252, 3], 3),
            (&[8, 12, 3], 3),
        ],
        denominator_constant: 1728,
        denominator: &[
            (T, 12),
            (&[4, 3], 4),
            (&[2, 1], 3),
            (&[1, 1], 3),
            (&[2, 3], 1),
        ],
        value_at_one: "21145699168383889/4480842240",
    },
    Entry {
        level: 13,
        numerator_constant: 1,
        numerator: &[(&[28561, 15379, 3380, 247, 1], 3), (&[13, 5, 1], 1)],
        denominator_constant: 1728,
        denominator: &[(T, 13)],
        value_at_one: "1183462601536",
    },
    Entry {
        level: 16,
        numerator_constant: 2,
        numerator: &[(&[4096, 16384, 28672, 28672, 17664, 6656, 1408, 128, 1], 3)],
        denominator_constant: 1728,
        denominator: &[(T, 16), (&[2, 1], 4), (&[2, 2, 1], 1), (&[1, 1], 1)],
        value_at_one: "1114544804970241/699840",
    },
    Entry {
        level: 18,
        numerator_constant: 1,
        numerator: &[
            (
                &[6561, 19683, 26244, 21870, 13122, 5832, 1728, 270, 9, 1],
                3,
            ),
            (&[9, 9, 3, 1], 3),
        ],
        denominator_constant: 1728,
        denominator: &[
            (T, 18),
            (&[3, 1], 9),
            (&[3, 3, 1], 2),
            (&[3, 0, 1], 2),
            (&[1, 1], 1),
        ],
        value_at_one: "2251439055699625/173408256",
    },
    Entry {
        level: 25,
        numerator_constant: 1,
        numerator: &[(
            &[
                1953125, 3906250, 4296875, 3125000, 1640625, 631250, 178125, 35000, 4375, 250, 1,
            ],
            3,
        )],
        denominator_constant: 1728,
        denominator: &[(T, 25), (&[25, 25, 15, 5, 1], 1)],
        value_at_one: "61289697410100480959/1917",
    },
];
