//! Named example matrices.

use crate::error::{QcError, Result};
use crate::io::{parse_qc, QcFile};

pub struct CatalogEntry {
    pub name: &'static str,
    pub about: &'static str,
    pub text: &'static str,
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "h2-g4",
        about: "2 x 8, distinct shifts; girth 8 at N = 8",
        text: "\
8 2 8\n\
0 0 0 0 0 0 0 0\n\
0 1 2 3 4 5 6 7
",
    },
    CatalogEntry {
        name: "h2-g8",
        about: "2 x 8, distinct differences; girth 12 at N = 77",
        text: "\
77 2 8\n\
0 0 0 0 0 0 0  0\n\
0 1 3 7 12 20 30 44
",
    },
    CatalogEntry {
        name: "doubling-8",
        about: "2 x 8 doubling row; girth 12 at N = 73",
        text: "\
73 2 8\n\
0 0 0 0  0  0  0   0\n\
0 1 3 7 15 31 63 127
",
    },
    CatalogEntry {
        name: "cyclic-7",
        about: "2 x 3 with C_21 = 1 + x + x^3; girth 12 at N = 7",
        text: "\
7 2 3\n\
0 0 0\n\
0 1 3
",
    },
    CatalogEntry {
        name: "sum-2by3",
        about: "I + P_2 + P_3 as a 3 x 3 view; girth 8, 10, 12 at N2 = 11, 31, 41",
        text: "\
31 3 3 prelift 3\n\
0,1  1   .\n\
  . 0,13 2\n\
  1  .  0,7
",
    },
    CatalogEntry {
        name: "prelift-2by3",
        about: "[I I I; I P_2 P_3] with pre-lifted P_2, P_3; girth 16, 20, 24 at N2 = 11, 31, 41",
        text: "\
31 6 9 prelift 3\n\
0 . . 0  . . 0 . .\n\
. 0 . .  0 . . 0 .\n\
. . 0 .  . 0 . . 0\n\
0 . . 1  . . . 1 .\n\
. 0 . . 13 . . . 2\n\
. . 0 .  . 7 1 . .
",
    },
    CatalogEntry {
        name: "firstprelift",
        about: "3 x 4 protograph pre-lifted with N1 = 2; girth 10 at N2 = 27",
        text: "\
27 6 8 prelift 2\n\
0 . 0 .  0 .  0 .\n\
. 0 . 0  . 0  . 0\n\
0 . 1 .  . 10 . 13\n\
. 0 . 5 10 .  13 .\n\
0 . . 7 11 .  2 .\n\
. 0 7 .  . 11 . 4
",
    },
    CatalogEntry {
        name: "h3-g10-8",
        about: "3 x 8 girth 10 row set; n_min 514 for girth 10",
        text: "\
514 3 8\n\
0  0   0   0   0   0   0   0\n\
0  1   3   7  12  20  30  44\n\
0 66 461 106 144 194 274 385
",
    },
    CatalogEntry {
        name: "h3-g8",
        about: "3 x 5 submatrix of h3-g10-8; n_min 158 for girth 10, no N for girth 12",
        text: "\
unbound 3 5\n\
0  0   0   0   0\n\
0  1   7  12  20\n\
0 66 106 144 194
",
    },
    CatalogEntry {
        name: "h3-g10",
        about: "h3-g8 with 144 replaced by 244; n_min 222 for girth 10, 328 for girth 12",
        text: "\
unbound 3 5\n\
0  0   0   0   0\n\
0  1   7  12  20\n\
0 66 106 244 194
",
    },
    CatalogEntry {
        name: "h3-g12-8",
        about: "3 x 8 girth 12 row set; girth 12 at N = 1245",
        text: "\
1245 3 8\n\
0  0   0   0   0   0   0   0\n\
0  1   3   7  12  20  30  44\n\
0 66 144 232 336 526 664 747
",
    },
    CatalogEntry {
        name: "h4-g4",
        about: "4 x 8 without 4-cycles",
        text: "\
unbound 4 8\n\
0 0 0 0 0 0  0  0\n\
0 1 2 3 4 5  6  7\n\
0 2 1 5 7 3 10  4\n\
0 3 5 1 9 2  7 11
",
    },
    CatalogEntry {
        name: "h4-g6",
        about: "4 x 8 without 4- and 6-cycles",
        text: "\
unbound 4 8\n\
0 0  0  0  0  0  0  0\n\
0 1  2  3  4  5  6  7\n\
0 8 15 21 26 32 39 47\n\
0 9 17 24 30 37 45 54
",
    },
    CatalogEntry {
        name: "recursive-3x7",
        about: "3 x 7 from the doubling recursions; girth 10 at N = 433",
        text: "\
433 3 7\n\
0   0   0   0    0    0    0\n\
0   1   3   7   15   31   63\n\
0 128 260 528 1072 2176 4416
",
    },
    CatalogEntry {
        name: "appendix-b",
        about: "h3-g10 pre-lifted with N1 = 2, two entries changed; girth 10 at N2 = 123, 12 at N2 = 164",
        text: "\
164 6 10 prelift 2\n\
0 . 0  . 0  . 0   . 0   .\n\
. 0 .  0 .  0 .   0 .   0\n\
0 . .  1 .  4 6   . 10  .\n\
. 0 0  . 3  . .   6 .  10\n\
0 . 33 . 53 . 122 . 97  .\n\
. 0 .  33 . 53 .  93 . 122
",
    },
    CatalogEntry {
        name: "ex35g14-base",
        about: "3 x 5 with a 2x3-free 3-fold pre-lift; girth 12 at N = 279",
        text: "\
279 3 5\n\
0 0   0   0   0\n\
0 1   7  18  44\n\
0 3 158 136 106
",
    },
    CatalogEntry {
        name: "ex35g14",
        about: "ex35g14-base pre-lifted with N1 = 3, shifts changed; girth 14 at N2 = 752",
        text: "\
752 9 15 prelift 3\n\
0 . .  0  . .   0  .   .   0   .  .   0   .   .\n\
. 0 .  .  0 .   .  0   .   .   0  .   .   0   .\n\
. . 0  .  . 0   .  .   0   .   .  0   .   .   0\n\
0 . .  .  . 1   .  .   3   6   .  .   .  15   .\n\
. 0 .  0  . .   5  .   .   .  23  .   .   .  19\n\
. . 0  .  7 .   . 11   .   .   . 29  42   .   .\n\
0 . . 25  . .   . 61   .   .   . 94   .   . 153\n\
. 0 .  . 64 .   .  . 180 239   .  . 358   .   .\n\
. . 0  .  . 9 143  .   .   . 256  .   . 474   .
",
    },
    CatalogEntry {
        name: "structures-base",
        about: "3 x 5 whose 5-fold pre-lift has girth 6; girth 12 at N = 245",
        text: "\
245 3 5\n\
0  0  0   0   0\n\
0  1  7  18  44\n\
0 32 54 141 133
",
    },
    CatalogEntry {
        name: "structures",
        about: "structures-base pre-lifted with N1 = 5, shifts changed; girth 14 at N2 = 605",
        text: "\
605 15 25 prelift 5\n\
0 . . . .  0  .   .  .  .   0  .  .  .   .   0   .   .   .  .   0   .  .   .   .\n\
. 0 . . .  .  0   .  .  .   .  0  .  .   .   .   0   .   .  .   .   0  .   .   .\n\
. . 0 . .  .  .   0  .  .   .  .  0  .   .   .   .   0   .  .   .   .  0   .   .\n\
. . . 0 .  .  .   .  0  .   .  .  .  0   .   .   .   .   0  .   .   .  .   0   .\n\
. . . . 0  .  .   .  .  0   .  .  .  .   0   .   .   .   .  0   .   .  .   .   0\n\
0 . . . .  .  .   .  .  1   .  .  .  2   .   .   .   4   .  .   .   9  .   .   .\n\
. 0 . . .  0  .   .  .  .   .  .  .  .   2   .   .   .   4  .   .   .  9   .   .\n\
. . 0 . .  .  3   .  .  .   0  .  .  .   .   .   .   .   .  8   .   .  .   1   .\n\
. . . 0 .  .  .   9  .  .   . 13  .  .   .  19   .   .   .  .   .   .  .   .  23\n\
. . . . 0  .  .   .  7  .   .  . 19  .   .   .  34   .   .  .  44   .  .   .   .\n\
0 . . . .  .  .   . 29  .   . 40  .  .   .   .   .   .   . 79   .   . 99   .   .\n\
. 0 . . .  .  .   .  . 29   .  . 54  .   . 115   .   .   .  .   .   .  . 135   .\n\
. . 0 . . 23  .   .  .  .   .  .  . 73   .   . 129   .   .  .   .   .  .   . 215\n\
. . . 0 .  . 55   .  .  .   .  .  .  . 145   .   . 209   .  . 313   .  .   .   .\n\
. . . . 0  .  . 301  .  . 356  .  .  .   .   .   .   . 432  .   . 512  .   .   .
",
    },
    CatalogEntry {
        name: "35unsuc-masked",
        about: "3-fold pre-lift with three masked blocks; girth 14 at N2 = 891",
        text: "\
891 9 15 prelift 3\n\
0 . .   0   .  . 0   .   .  0   .   .   0  .    .\n\
. 0 .   .   0  . .   0   .  .   0   .   .  0    .\n\
. . 0   .   .  0 .   .   0  .   .   0   .  .    0\n\
0 . .   .   .  1 .   .   3  .  39   .   . 29    .\n\
. 0 .   0   .  . 9   .   .  .   .   4   .  .   59\n\
. . 0   .   0  . .  17   . 11   .   .  71  .    .\n\
0 . .   . 118  . .   . 136  .   . 290 353  .    .\n\
. 0 .   .   . 32 . 479   .  .   .   .   .  .    .\n\
. . 0 209   .  . .   .   .  . 800   .   .  . -319
",
    },
    CatalogEntry {
        name: "35unsuc-regular",
        about: "35unsuc-masked with the masked blocks filled by the listed shifts; girth 10 at N2 = 891, 12 at N2 = 682",
        text: "\
891 9 15 prelift 3\n\
0 . .   0   .  .    0   .   .    0   .   .   0    .    .\n\
. 0 .   .   0  .    .   0   .    .   0   .   .    0    .\n\
. . 0   .   .  0    .   .   0    .   .   0   .    .    0\n\
0 . .   .   .  1    .   .   3    .  39   .   .   29    .\n\
. 0 .   0   .  .    9   .   .    .   .   4   .    .   59\n\
. . 0   .   0  .    .  17   .   11   .   .  71    .    .\n\
0 . .   . 118  .    .   . 136    .   . 290 353    .    .\n\
. 0 .   .   . 32    . 479   . 1199   .   .   . 1239    .\n\
. . 0 209   .  . -579   .   .    . 800   .   .    . -319
",
    },
    CatalogEntry {
        name: "ccsds-128-64",
        about: "CCSDS (128,64) code, 4 x 8 multi-edge protograph at N = 16",
        text: "\
16 4 8\n\
0,7    2  14    6  .  0 13 0\n\
   6 0,15   0    1  0  .  0 7\n\
   4    1 0,15  14 11  0  . 3\n\
   0    1   9 0,13 14  1  0 .
",
    },
];

pub fn names() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.name).collect()
}

pub fn load(name: &str) -> Result<QcFile> {
    let e = CATALOG
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| QcError::Invalid(format!("no catalog entry '{}' (known: {})", name, names().join(", "))))?;
    parse_qc(e.text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_entries_parse() {
        for e in CATALOG {
            let f = load(e.name).unwrap_or_else(|err| panic!("{}: {}", e.name, err));
            assert!(f.matrix.rows() >= 2, "{}", e.name);
        }
        assert!(load("missing").is_err());
    }
}
