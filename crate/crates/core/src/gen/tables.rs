//! Tabulated addition and multiplication tables for the prime-power
//! fields GF(4), GF(8), GF(9), GF(16), GF(25), GF(27), stored row-major.
//! Element 0 is the zero and element 1 the unit in every table.

pub(crate) static ADD_4: [u8; 16] = [0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0];

pub(crate) static MUL_4: [u8; 16] = [0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 3, 1, 0, 3, 1, 2];

pub(crate) static ADD_8: [u8; 64] = [
    0, 1, 2, 3, 4, 5, 6, 7, 1, 0, 3, 2, 5, 4, 7, 6, 2, 3, 0, 1, 6, 7, 4, 5, 3, 2, 1, 0, 7, 6, 5, 4,
    4, 5, 6, 7, 0, 1, 2, 3, 5, 4, 7, 6, 1, 0, 3, 2, 6, 7, 4, 5, 2, 3, 0, 1, 7, 6, 5, 4, 3, 2, 1, 0,
];

pub(crate) static MUL_8: [u8; 64] = [
    0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 3, 4, 5, 6, 7, 0, 2, 4, 6, 3, 1, 7, 5, 0, 3, 6, 5, 7, 4, 1, 2,
    0, 4, 3, 7, 6, 2, 5, 1, 0, 5, 1, 4, 2, 7, 3, 6, 0, 6, 7, 1, 5, 3, 2, 4, 0, 7, 5, 2, 1, 6, 4, 3,
];

pub(crate) static ADD_9: [u8; 81] = [
    0, 1, 2, 3, 4, 5, 6, 7, 8, 1, 2, 0, 4, 5, 3, 7, 8, 6, 2, 0, 1, 5, 3, 4, 8, 6, 7, 3, 4, 5, 6, 7,
    8, 0, 1, 2, 4, 5, 3, 7, 8, 6, 1, 2, 0, 5, 3, 4, 8, 6, 7, 2, 0, 1, 6, 7, 8, 0, 1, 2, 3, 4, 5, 7,
    8, 6, 1, 2, 0, 4, 5, 3, 8, 6, 7, 2, 0, 1, 5, 3, 4,
];

pub(crate) static MUL_9: [u8; 81] = [
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 3, 4, 5, 6, 7, 8, 0, 2, 1, 6, 8, 7, 3, 5, 4, 0, 3, 6, 7, 1,
    4, 5, 8, 2, 0, 4, 8, 1, 5, 6, 2, 3, 7, 0, 5, 7, 4, 6, 2, 8, 1, 3, 0, 6, 3, 5, 2, 8, 7, 4, 1, 0,
    7, 5, 8, 3, 1, 4, 2, 6, 0, 8, 4, 2, 7, 3, 1, 6, 5,
];

pub(crate) static ADD_16: [u8; 256] = [
    0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 13,
    12, 15, 14, 2, 3, 0, 1, 6, 7, 4, 5, 10, 11, 8, 9, 14, 15, 12, 13, 3, 2, 1, 0, 7, 6, 5, 4, 11,
    10, 9, 8, 15, 14, 13, 12, 4, 5, 6, 7, 0, 1, 2, 3, 12, 13, 14, 15, 8, 9, 10, 11, 5, 4, 7, 6, 1,
    0, 3, 2, 13, 12, 15, 14, 9, 8, 11, 10, 6, 7, 4, 5, 2, 3, 0, 1, 14, 15, 12, 13, 10, 11, 8, 9, 7,
    6, 5, 4, 3, 2, 1, 0, 15, 14, 13, 12, 11, 10, 9, 8, 8, 9, 10, 11, 12, 13, 14, 15, 0, 1, 2, 3, 4,
    5, 6, 7, 9, 8, 11, 10, 13, 12, 15, 14, 1, 0, 3, 2, 5, 4, 7, 6, 10, 11, 8, 9, 14, 15, 12, 13, 2,
    3, 0, 1, 6, 7, 4, 5, 11, 10, 9, 8, 15, 14, 13, 12, 3, 2, 1, 0, 7, 6, 5, 4, 12, 13, 14, 15, 8,
    9, 10, 11, 4, 5, 6, 7, 0, 1, 2, 3, 13, 12, 15, 14, 9, 8, 11, 10, 5, 4, 7, 6, 1, 0, 3, 2, 14,
    15, 12, 13, 10, 11, 8, 9, 6, 7, 4, 5, 2, 3, 0, 1, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3,
    2, 1, 0,
];

pub(crate) static MUL_16: [u8; 256] = [
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13,
    14, 15, 0, 2, 4, 6, 8, 10, 12, 14, 3, 1, 7, 5, 11, 9, 15, 13, 0, 3, 6, 5, 12, 15, 10, 9, 11, 8,
    13, 14, 7, 4, 1, 2, 0, 4, 8, 12, 3, 7, 11, 15, 6, 2, 14, 10, 5, 1, 13, 9, 0, 5, 10, 15, 7, 2,
    13, 8, 14, 11, 4, 1, 9, 12, 3, 6, 0, 6, 12, 10, 11, 13, 7, 1, 5, 3, 9, 15, 14, 8, 2, 4, 0, 7,
    14, 9, 15, 8, 1, 6, 13, 10, 3, 4, 2, 5, 12, 11, 0, 8, 3, 11, 6, 14, 5, 13, 12, 4, 15, 7, 10, 2,
    9, 1, 0, 9, 1, 8, 2, 11, 3, 10, 4, 13, 5, 12, 6, 15, 7, 14, 0, 10, 7, 13, 14, 4, 9, 3, 15, 5,
    8, 2, 1, 11, 6, 12, 0, 11, 5, 14, 10, 1, 15, 4, 7, 12, 2, 9, 13, 6, 8, 3, 0, 12, 11, 7, 5, 9,
    14, 2, 10, 6, 1, 13, 15, 3, 4, 8, 0, 13, 9, 4, 1, 12, 8, 5, 2, 15, 11, 6, 3, 14, 10, 7, 0, 14,
    15, 1, 13, 3, 2, 12, 9, 7, 6, 8, 4, 10, 11, 5, 0, 15, 13, 2, 9, 6, 4, 11, 1, 14, 12, 3, 8, 7,
    5, 10,
];

pub(crate) static ADD_25: [u8; 625] = [
    0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 1, 2,
    3, 4, 0, 6, 7, 8, 9, 5, 11, 12, 13, 14, 10, 16, 17, 18, 19, 15, 21, 22, 23, 24, 20, 2, 3, 4, 0,
    1, 7, 8, 9, 5, 6, 12, 13, 14, 10, 11, 17, 18, 19, 15, 16, 22, 23, 24, 20, 21, 3, 4, 0, 1, 2, 8,
    9, 5, 6, 7, 13, 14, 10, 11, 12, 18, 19, 15, 16, 17, 23, 24, 20, 21, 22, 4, 0, 1, 2, 3, 9, 5, 6,
    7, 8, 14, 10, 11, 12, 13, 19, 15, 16, 17, 18, 24, 20, 21, 22, 23, 5, 6, 7, 8, 9, 10, 11, 12,
    13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 0, 1, 2, 3, 4, 6, 7, 8, 9, 5, 11, 12, 13, 14,
    10, 16, 17, 18, 19, 15, 21, 22, 23, 24, 20, 1, 2, 3, 4, 0, 7, 8, 9, 5, 6, 12, 13, 14, 10, 11,
    17, 18, 19, 15, 16, 22, 23, 24, 20, 21, 2, 3, 4, 0, 1, 8, 9, 5, 6, 7, 13, 14, 10, 11, 12, 18,
    19, 15, 16, 17, 23, 24, 20, 21, 22, 3, 4, 0, 1, 2, 9, 5, 6, 7, 8, 14, 10, 11, 12, 13, 19, 15,
    16, 17, 18, 24, 20, 21, 22, 23, 4, 0, 1, 2, 3, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21,
    22, 23, 24, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 10, 16, 17, 18, 19, 15, 21, 22, 23,
    24, 20, 1, 2, 3, 4, 0, 6, 7, 8, 9, 5, 12, 13, 14, 10, 11, 17, 18, 19, 15, 16, 22, 23, 24, 20,
    21, 2, 3, 4, 0, 1, 7, 8, 9, 5, 6, 13, 14, 10, 11, 12, 18, 19, 15, 16, 17, 23, 24, 20, 21, 22,
    3, 4, 0, 1, 2, 8, 9, 5, 6, 7, 14, 10, 11, 12, 13, 19, 15, 16, 17, 18, 24, 20, 21, 22, 23, 4, 0,
    1, 2, 3, 9, 5, 6, 7, 8, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9,
    10, 11, 12, 13, 14, 16, 17, 18, 19, 15, 21, 22, 23, 24, 20, 1, 2, 3, 4, 0, 6, 7, 8, 9, 5, 11,
    12, 13, 14, 10, 17, 18, 19, 15, 16, 22, 23, 24, 20, 21, 2, 3, 4, 0, 1, 7, 8, 9, 5, 6, 12, 13,
    14, 10, 11, 18, 19, 15, 16, 17, 23, 24, 20, 21, 22, 3, 4, 0, 1, 2, 8, 9, 5, 6, 7, 13, 14, 10,
    11, 12, 19, 15, 16, 17, 18, 24, 20, 21, 22, 23, 4, 0, 1, 2, 3, 9, 5, 6, 7, 8, 14, 10, 11, 12,
    13, 20, 21, 22, 23, 24, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19,
    21, 22, 23, 24, 20, 1, 2, 3, 4, 0, 6, 7, 8, 9, 5, 11, 12, 13, 14, 10, 16, 17, 18, 19, 15, 22,
    23, 24, 20, 21, 2, 3, 4, 0, 1, 7, 8, 9, 5, 6, 12, 13, 14, 10, 11, 17, 18, 19, 15, 16, 23, 24,
    20, 21, 22, 3, 4, 0, 1, 2, 8, 9, 5, 6, 7, 13, 14, 10, 11, 12, 18, 19, 15, 16, 17, 24, 20, 21,
    22, 23, 4, 0, 1, 2, 3, 9, 5, 6, 7, 8, 14, 10, 11, 12, 13, 19, 15, 16, 17, 18,
];

pub(crate) static MUL_25: [u8; 625] = [
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 3, 4, 5, 6,
    7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 0, 2, 4, 1, 3, 10, 12, 14,
    11, 13, 20, 22, 24, 21, 23, 5, 7, 9, 6, 8, 15, 17, 19, 16, 18, 0, 3, 1, 4, 2, 15, 18, 16, 19,
    17, 5, 8, 6, 9, 7, 20, 23, 21, 24, 22, 10, 13, 11, 14, 12, 0, 4, 3, 2, 1, 20, 24, 23, 22, 21,
    15, 19, 18, 17, 16, 10, 14, 13, 12, 11, 5, 9, 8, 7, 6, 0, 5, 10, 15, 20, 23, 3, 8, 13, 18, 16,
    21, 1, 6, 11, 14, 19, 24, 4, 9, 7, 12, 17, 22, 2, 0, 6, 12, 18, 24, 3, 9, 10, 16, 22, 1, 7, 13,
    19, 20, 4, 5, 11, 17, 23, 2, 8, 14, 15, 21, 0, 7, 14, 16, 23, 8, 10, 17, 24, 1, 11, 18, 20, 2,
    9, 19, 21, 3, 5, 12, 22, 4, 6, 13, 15, 0, 8, 11, 19, 22, 13, 16, 24, 2, 5, 21, 4, 7, 10, 18, 9,
    12, 15, 23, 1, 17, 20, 3, 6, 14, 0, 9, 13, 17, 21, 18, 22, 1, 5, 14, 6, 10, 19, 23, 2, 24, 3,
    7, 11, 15, 12, 16, 20, 4, 8, 0, 10, 20, 5, 15, 16, 1, 11, 21, 6, 7, 17, 2, 12, 22, 23, 8, 18,
    3, 13, 14, 24, 9, 19, 4, 0, 11, 22, 8, 19, 21, 7, 18, 4, 10, 17, 3, 14, 20, 6, 13, 24, 5, 16,
    2, 9, 15, 1, 12, 23, 0, 12, 24, 6, 18, 1, 13, 20, 7, 19, 2, 14, 21, 8, 15, 3, 10, 22, 9, 16, 4,
    11, 23, 5, 17, 0, 13, 21, 9, 17, 6, 19, 2, 10, 23, 12, 20, 8, 16, 4, 18, 1, 14, 22, 5, 24, 7,
    15, 3, 11, 0, 14, 23, 7, 16, 11, 20, 9, 18, 2, 22, 6, 15, 4, 13, 8, 17, 1, 10, 24, 19, 3, 12,
    21, 5, 0, 15, 5, 20, 10, 14, 4, 19, 9, 24, 23, 13, 3, 18, 8, 7, 22, 12, 2, 17, 16, 6, 21, 11,
    1, 0, 16, 7, 23, 14, 19, 5, 21, 12, 3, 8, 24, 10, 1, 17, 22, 13, 4, 15, 6, 11, 2, 18, 9, 20, 0,
    17, 9, 21, 13, 24, 11, 3, 15, 7, 18, 5, 22, 14, 1, 12, 4, 16, 8, 20, 6, 23, 10, 2, 19, 0, 18,
    6, 24, 12, 4, 17, 5, 23, 11, 3, 16, 9, 22, 10, 2, 15, 8, 21, 14, 1, 19, 7, 20, 13, 0, 19, 8,
    22, 11, 9, 23, 12, 1, 15, 13, 2, 16, 5, 24, 17, 6, 20, 14, 3, 21, 10, 4, 18, 7, 0, 20, 15, 10,
    5, 7, 2, 22, 17, 12, 14, 9, 4, 24, 19, 16, 11, 6, 1, 21, 23, 18, 13, 8, 3, 0, 21, 17, 13, 9,
    12, 8, 4, 20, 16, 24, 15, 11, 7, 3, 6, 2, 23, 19, 10, 18, 14, 5, 1, 22, 0, 22, 19, 11, 8, 17,
    14, 6, 3, 20, 9, 1, 23, 15, 12, 21, 18, 10, 7, 4, 13, 5, 2, 24, 16, 0, 23, 16, 14, 7, 22, 15,
    13, 6, 4, 19, 12, 5, 3, 21, 11, 9, 2, 20, 18, 8, 1, 24, 17, 10, 0, 24, 18, 12, 6, 2, 21, 15,
    14, 8, 4, 23, 17, 11, 5, 1, 20, 19, 13, 7, 3, 22, 16, 10, 9,
];

pub(crate) static ADD_27: [u8; 729] = [
    0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25,
    26, 1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9, 13, 14, 12, 16, 17, 15, 19, 20, 18, 22, 23, 21, 25,
    26, 24, 2, 0, 1, 5, 3, 4, 8, 6, 7, 11, 9, 10, 14, 12, 13, 17, 15, 16, 20, 18, 19, 23, 21, 22,
    26, 24, 25, 3, 4, 5, 6, 7, 8, 0, 1, 2, 12, 13, 14, 15, 16, 17, 9, 10, 11, 21, 22, 23, 24, 25,
    26, 18, 19, 20, 4, 5, 3, 7, 8, 6, 1, 2, 0, 13, 14, 12, 16, 17, 15, 10, 11, 9, 22, 23, 21, 25,
    26, 24, 19, 20, 18, 5, 3, 4, 8, 6, 7, 2, 0, 1, 14, 12, 13, 17, 15, 16, 11, 9, 10, 23, 21, 22,
    26, 24, 25, 20, 18, 19, 6, 7, 8, 0, 1, 2, 3, 4, 5, 15, 16, 17, 9, 10, 11, 12, 13, 14, 24, 25,
    26, 18, 19, 20, 21, 22, 23, 7, 8, 6, 1, 2, 0, 4, 5, 3, 16, 17, 15, 10, 11, 9, 13, 14, 12, 25,
    26, 24, 19, 20, 18, 22, 23, 21, 8, 6, 7, 2, 0, 1, 5, 3, 4, 17, 15, 16, 11, 9, 10, 14, 12, 13,
    26, 24, 25, 20, 18, 19, 23, 21, 22, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23,
    24, 25, 26, 0, 1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 9, 13, 14, 12, 16, 17, 15, 19, 20, 18, 22, 23,
    21, 25, 26, 24, 1, 2, 0, 4, 5, 3, 7, 8, 6, 11, 9, 10, 14, 12, 13, 17, 15, 16, 20, 18, 19, 23,
    21, 22, 26, 24, 25, 2, 0, 1, 5, 3, 4, 8, 6, 7, 12, 13, 14, 15, 16, 17, 9, 10, 11, 21, 22, 23,
    24, 25, 26, 18, 19, 20, 3, 4, 5, 6, 7, 8, 0, 1, 2, 13, 14, 12, 16, 17, 15, 10, 11, 9, 22, 23,
    21, 25, 26, 24, 19, 20, 18, 4, 5, 3, 7, 8, 6, 1, 2, 0, 14, 12, 13, 17, 15, 16, 11, 9, 10, 23,
    21, 22, 26, 24, 25, 20, 18, 19, 5, 3, 4, 8, 6, 7, 2, 0, 1, 15, 16, 17, 9, 10, 11, 12, 13, 14,
    24, 25, 26, 18, 19, 20, 21, 22, 23, 6, 7, 8, 0, 1, 2, 3, 4, 5, 16, 17, 15, 10, 11, 9, 13, 14,
    12, 25, 26, 24, 19, 20, 18, 22, 23, 21, 7, 8, 6, 1, 2, 0, 4, 5, 3, 17, 15, 16, 11, 9, 10, 14,
    12, 13, 26, 24, 25, 20, 18, 19, 23, 21, 22, 8, 6, 7, 2, 0, 1, 5, 3, 4, 18, 19, 20, 21, 22, 23,
    24, 25, 26, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 19, 20, 18, 22, 23,
    21, 25, 26, 24, 1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9, 13, 14, 12, 16, 17, 15, 20, 18, 19, 23,
    21, 22, 26, 24, 25, 2, 0, 1, 5, 3, 4, 8, 6, 7, 11, 9, 10, 14, 12, 13, 17, 15, 16, 21, 22, 23,
    24, 25, 26, 18, 19, 20, 3, 4, 5, 6, 7, 8, 0, 1, 2, 12, 13, 14, 15, 16, 17, 9, 10, 11, 22, 23,
    21, 25, 26, 24, 19, 20, 18, 4, 5, 3, 7, 8, 6, 1, 2, 0, 13, 14, 12, 16, 17, 15, 10, 11, 9, 23,
    21, 22, 26, 24, 25, 20, 18, 19, 5, 3, 4, 8, 6, 7, 2, 0, 1, 14, 12, 13, 17, 15, 16, 11, 9, 10,
    24, 25, 26, 18, 19, 20, 21, 22, 23, 6, 7, 8, 0, 1, 2, 3, 4, 5, 15, 16, 17, 9, 10, 11, 12, 13,
    14, 25, 26, 24, 19, 20, 18, 22, 23, 21, 7, 8, 6, 1, 2, 0, 4, 5, 3, 16, 17, 15, 10, 11, 9, 13,
    14, 12, 26, 24, 25, 20, 18, 19, 23, 21, 22, 8, 6, 7, 2, 0, 1, 5, 3, 4, 17, 15, 16, 11, 9, 10,
    14, 12, 13,
];

pub(crate) static MUL_27: [u8; 729] = [
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 3, 4,
    5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 0, 2, 1, 6,
    8, 7, 3, 5, 4, 18, 20, 19, 24, 26, 25, 21, 23, 22, 9, 11, 10, 15, 17, 16, 12, 14, 13, 0, 3, 6,
    9, 12, 15, 18, 21, 24, 5, 8, 2, 14, 17, 11, 23, 26, 20, 7, 1, 4, 16, 10, 13, 25, 19, 22, 0, 4,
    8, 12, 16, 11, 24, 19, 23, 14, 15, 10, 26, 18, 22, 2, 3, 7, 25, 20, 21, 1, 5, 6, 13, 17, 9, 0,
    5, 7, 15, 11, 13, 21, 26, 19, 23, 25, 18, 2, 4, 6, 17, 10, 12, 16, 9, 14, 22, 24, 20, 1, 3, 8,
    0, 6, 3, 18, 24, 21, 9, 15, 12, 7, 4, 1, 25, 22, 19, 16, 13, 10, 5, 2, 8, 23, 20, 26, 14, 11,
    17, 0, 7, 5, 21, 19, 26, 15, 13, 11, 16, 14, 9, 1, 8, 3, 22, 20, 24, 23, 18, 25, 17, 12, 10, 2,
    6, 4, 0, 8, 4, 24, 23, 19, 12, 11, 16, 25, 21, 20, 13, 9, 17, 1, 6, 5, 14, 10, 15, 2, 7, 3, 26,
    22, 18, 0, 9, 18, 5, 14, 23, 7, 16, 25, 15, 24, 6, 11, 20, 2, 13, 22, 4, 21, 3, 12, 26, 8, 17,
    19, 1, 10, 0, 10, 20, 8, 15, 25, 4, 14, 21, 24, 7, 17, 23, 3, 13, 19, 2, 9, 12, 22, 5, 11, 18,
    1, 16, 26, 6, 0, 11, 19, 2, 10, 18, 1, 9, 20, 6, 17, 25, 8, 16, 24, 7, 15, 26, 3, 14, 22, 5,
    13, 21, 4, 12, 23, 0, 12, 24, 14, 26, 2, 25, 1, 13, 11, 23, 8, 22, 7, 10, 6, 9, 21, 19, 4, 16,
    3, 15, 18, 17, 20, 5, 0, 13, 26, 17, 18, 4, 22, 8, 9, 20, 3, 16, 7, 11, 21, 12, 25, 2, 10, 23,
    6, 24, 1, 14, 5, 15, 19, 0, 14, 25, 11, 22, 6, 19, 3, 17, 2, 13, 24, 10, 21, 8, 18, 5, 16, 1,
    12, 26, 9, 23, 7, 20, 4, 15, 0, 15, 21, 23, 2, 17, 16, 22, 1, 13, 19, 7, 6, 12, 18, 20, 8, 14,
    26, 5, 11, 10, 25, 4, 3, 9, 24, 0, 16, 23, 26, 3, 10, 13, 20, 6, 22, 2, 15, 9, 25, 5, 8, 12,
    19, 17, 21, 1, 4, 11, 24, 18, 7, 14, 0, 17, 22, 20, 7, 12, 10, 24, 5, 4, 9, 26, 21, 2, 16, 14,
    19, 6, 8, 13, 18, 25, 3, 11, 15, 23, 1, 0, 18, 9, 7, 25, 16, 5, 23, 14, 21, 12, 3, 19, 10, 1,
    26, 17, 8, 15, 6, 24, 13, 4, 22, 11, 2, 20, 0, 19, 11, 1, 20, 9, 2, 18, 10, 3, 22, 14, 4, 23,
    12, 5, 21, 13, 6, 25, 17, 7, 26, 15, 8, 24, 16, 0, 20, 10, 4, 21, 14, 8, 25, 15, 12, 5, 22, 16,
    6, 26, 11, 1, 18, 24, 17, 7, 19, 9, 2, 23, 13, 3, 0, 21, 15, 16, 1, 22, 23, 17, 2, 26, 11, 5,
    3, 24, 9, 10, 4, 25, 13, 7, 19, 20, 14, 8, 6, 18, 12, 0, 22, 17, 10, 5, 24, 20, 12, 7, 8, 18,
    13, 15, 1, 23, 25, 11, 3, 4, 26, 9, 14, 6, 19, 21, 16, 2, 0, 23, 16, 13, 6, 20, 26, 10, 3, 17,
    1, 21, 18, 14, 7, 4, 24, 11, 22, 15, 2, 8, 19, 12, 9, 5, 25, 0, 24, 12, 25, 13, 1, 14, 2, 26,
    19, 16, 4, 17, 5, 20, 3, 18, 15, 11, 8, 23, 6, 21, 9, 22, 10, 7, 0, 25, 14, 19, 17, 3, 11, 6,
    22, 1, 26, 12, 20, 15, 4, 9, 7, 23, 2, 24, 13, 18, 16, 5, 10, 8, 21, 0, 26, 13, 22, 9, 8, 17,
    4, 18, 10, 6, 23, 5, 19, 15, 24, 14, 1, 20, 16, 3, 12, 2, 25, 7, 21, 11,
];
