//! Reference identities: each weight with the residue notation of its
//! product side, checked for n <= 20.
//!
//! Lists printed as `(r, r odd; ...)` are written `odd, odd; ...` here: two
//! colors of every odd part is the reading the counts agree with.

#![allow(dead_code)]

pub struct Identity {
    pub weight: &'static [u32],
    pub spec: &'static str,
}

const fn id(weight: &'static [u32], spec: &'static str) -> Identity {
    Identity { weight, spec }
}

/// Odd widths, weights `(k_0, ..., k_l)`.
pub const ODD: &[Identity] = &[
    // w = 5
    id(&[1, 0, 0], "odd; 4 mod 8"),
    id(&[0, 1, 0], "1,3,5,7 mod 8 [(+ 2 mod 4)]"),
    id(&[2, 0, 0], "odd; 2,4,5,6,8 mod 10"),
    id(&[1, 1, 0], "odd; 1,3,5,7,9 mod 10"),
    id(&[1, 0, 1], "1,1,3,4,4,6,6,7,9,9 mod 10"),
    id(&[0, 2, 0], "1,2,2,3,3,7,7,8,8,9 mod 10"),
    id(&[3, 0, 0], "odd; 2,3,4,5,6,7,8,9,10 mod 12"),
    id(&[2, 1, 0], "odd; 1,2,4,5,6,7,8,10,11 mod 12"),
    id(&[2, 0, 1], "odd; 1,2,4,5,6,7,8,10,11 mod 12"),
    id(&[1, 2, 0], "odd; 1,2,3,4,6,8,9,10,11 mod 12"),
    id(&[1, 1, 1], "odd, odd; [(+ 1,3,5 mod 6)]"),
    id(&[0, 3, 0], "odd; 2,3,4,5,6,7,8,9,10 mod 12"),
    id(&[3, 0, 1], "odd; 1,2,3,4,6,6,7,8,8,10,11,12,13 mod 14"),
    id(&[2, 1, 1], "odd, odd; 1,4,6,8,10,13 mod 14"),
    id(&[2, 0, 2], "1,1,2,2,3,5,5,5,6,6,8,8,9,9,9,11,12,12,13,13 mod 14"),
    id(&[0, 4, 0], "1,2,2,3,3,3,4,4,5,5,9,9,10,10,11,11,11,12,12,13 mod 14"),
    id(&[3, 0, 2], "odd, odd; 2,2,6,6,8,10,10,14,14 mod 16"),
    // w = 7
    id(&[1, 0, 0, 1], "odd; 1,3,4,5,7,8,9,11 mod 12"),
    id(&[0, 1, 1, 0], "odd; 1,2,3,5,7,9,10,11 mod 12"),
    id(&[2, 0, 0, 1], "odd; 1,2,3,4,5,6,6,8,8,9,10,11,12,13 mod 14"),
    id(&[2, 0, 0, 2], "odd, odd; 2,2,4,6,6,6,10,10,10,12,14,14 mod 16"),
    // w = 9
    id(&[1, 0, 0, 0, 1], "1,1,3,3,4,4,5,6,6,8,8,9,10,10,11,11,13,13 mod 14"),
    id(&[0, 1, 1, 0, 0], "odd; 1,2,3,4,5,7,9,10,11,12,13 mod 14"),
    id(&[0, 1, 1, 0, 1], "odd; 1,1,2,3,4,4,6,6,7,8,9,10,10,12,12,13,14,15 mod 16"),
    id(&[2, 1, 0, 0, 1], "odd, odd; 1,2,4,4,5,6,7,8,8,10,10,11,12,13,14,14,16,17 mod 18"),
];

/// The mod-18 character worked out from the congruence triangle of (3,2,1,1,2).
pub const CHARACTER_21001: &str =
    "odd; 1,1,2,3,4,4,5,5,6,7,7,8,8,9,10,10,11,11,12,13,13,14,14,15,16,17,17 mod 18";

/// Even widths, weights `(k_0, ..., k_l)^e`.
pub const EVEN: &[Identity] = &[
    // w = 2
    id(&[1, 0], "2,3 mod 5"),
    id(&[0, 1], "1,4 mod 5"),
    id(&[2, 0], "2,3,4,5 mod 7"),
    id(&[1, 1], "1,3,4,6 mod 7"),
    id(&[0, 2], "1,2,5,6 mod 7"),
    id(&[3, 0], "2,3,4,5,6,7 mod 9"),
    id(&[2, 1], "1,3,4,5,6,8 mod 9"),
    id(&[1, 2], "1,2,4,5,7,8 mod 9"),
    id(&[0, 3], "1,2,3,6,7,8 mod 9"),
    // w = 4
    id(&[1, 0, 0], "2,3,4,5 mod 7"),
    id(&[0, 1, 0], "1,2,5,6 mod 7"),
    id(&[0, 0, 1], "1,3,4,6 mod 7"),
    id(&[2, 0, 0], "2,3,4,4,5,5,6,7 mod 9"),
    id(&[1, 1, 0], "1,2,3,4,5,6,7,8 mod 9"),
    id(&[1, 0, 1], "1,2,3,4,5,6,7,8 mod 9"),
    id(&[0, 2, 0], "1,2,2,3,6,7,7,8 mod 9"),
    id(&[0, 1, 1], "1,1,3,4,5,6,8,8 mod 9"),
    id(&[0, 0, 2], "1,2,3,4,5,6,7,8 mod 9"),
    id(&[3, 0, 0], "2,3,4,4,5,5,6,6,7,7,8,9 mod 11"),
    id(&[2, 1, 0], "1,2,3,4,5,5,6,6,7,8,9,10 mod 11"),
    id(&[2, 0, 1], "1,2,3,4,4,5,6,7,7,8,9,10 mod 11"),
    id(&[1, 2, 0], "1,2,2,3,4,5,6,7,8,9,9,10 mod 11"),
    id(&[1, 1, 1], "1,1,3,3,4,5,6,7,8,8,10,10 mod 11"),
    id(&[1, 0, 2], "1,2,2,3,5,5,6,6,8,9,9,10 mod 11"),
    id(&[0, 3, 0], "1,2,2,3,3,4,7,8,8,9,9,10 mod 11"),
    id(&[0, 2, 1], "1,1,2,3,4,5,6,7,8,9,10,10 mod 11"),
    id(&[0, 1, 2], "1,1,2,4,4,5,6,7,7,9,10,10 mod 11"),
    id(&[0, 0, 3], "1,2,3,3,4,5,6,7,8,8,9,10 mod 11"),
    // w = 6
    id(&[1, 0, 0, 0], "2,3,4,5,6,7 mod 9"),
    id(&[0, 1, 0, 0], "1,2,4,5,7,8 mod 9"),
    id(&[0, 0, 1, 0], "1,2,3,6,7,8 mod 9"),
    id(&[0, 0, 0, 1], "1,3,4,5,6,8 mod 9"),
    id(&[2, 0, 0, 0], "2,3,4,4,5,5,6,6,7,7,8,9 mod 11"),
    id(&[1, 1, 0, 0], "1,2,3,4,4,5,6,7,7,8,9,10 mod 11"),
    // w = 8
    id(&[0, 1, 1, 0, 1], "1,1,1,2,3,4,4,4,6,6,6,7,8,9,9,9,11,11,11,12,13,14,14,14 mod 15"),
    id(
        &[2, 1, 0, 0, 1],
        "1,1,2,3,3,4,4,5,5,5,6,6,7,7,8,8,9,9,10,10,11,11,12,12,12,13,13,14,14,15,16,16 mod 17",
    ),
    id(
        &[0, 1, 1, 1, 1],
        "1,1,1,1,3,3,3,4,5,5,5,6,7,7,8,8,9,9,10,10,11,12,12,12,13,14,14,14,16,16,16,16 mod 17",
    ),
];
