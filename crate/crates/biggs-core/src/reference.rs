//! Frozen reference vectors for the desk-scale grid: the published
//! factorization/coloring table for `2 <= C <= 7`, `1 <= R <= 12`, and the
//! plotted coordinates of the four bound-comparison figures. The invariant
//! suites and the acceptance tests reproduce these from scratch.

use crate::classify::TableColor;

/// `(C, R, canonical factorization, color)` for every cell of the grid.
/// Factorizations use ascending primes with `p^e` exponents joined by `*`.
pub const TABLE1: [(u64, u64, &str, TableColor); 72] = [
    (2, 1, "3", TableColor::Uncolored),
    (3, 1, "2^2", TableColor::Violet),
    (4, 1, "5", TableColor::Violet),
    (5, 1, "2*3", TableColor::Violet),
    (6, 1, "7", TableColor::Violet),
    (7, 1, "2^3", TableColor::Violet),
    (2, 2, "5", TableColor::Uncolored),
    (3, 2, "2*5", TableColor::Violet),
    (4, 2, "17", TableColor::Violet),
    (5, 2, "2*13", TableColor::Violet),
    (6, 2, "37", TableColor::Violet),
    (7, 2, "2*5^2", TableColor::Violet),
    (2, 3, "7", TableColor::Uncolored),
    (3, 3, "2*11", TableColor::Violet),
    (4, 3, "53", TableColor::Violet),
    (5, 3, "2*53", TableColor::Violet),
    (6, 3, "11*17", TableColor::Violet),
    (7, 3, "2*151", TableColor::Violet),
    (2, 4, "3^2", TableColor::Uncolored),
    (3, 4, "2*23", TableColor::Blue),
    (4, 4, "7*23", TableColor::Red),
    (5, 4, "2*3*71", TableColor::Violet),
    (6, 4, "937", TableColor::Violet),
    (7, 4, "2*907", TableColor::Violet),
    (2, 5, "11", TableColor::Uncolored),
    (3, 5, "2*47", TableColor::Violet),
    (4, 5, "5*97", TableColor::Violet),
    (5, 5, "2*853", TableColor::Violet),
    (6, 5, "43*109", TableColor::Violet),
    (7, 5, "2*5443", TableColor::Violet),
    (2, 6, "13", TableColor::Uncolored),
    (3, 6, "2*5*19", TableColor::Violet),
    (4, 6, "31*47", TableColor::Violet),
    (5, 6, "2*3413", TableColor::Violet),
    (6, 6, "23*1019", TableColor::Violet),
    (7, 6, "2*11*2969", TableColor::Violet),
    (2, 7, "3*5", TableColor::Uncolored),
    (3, 7, "2*191", TableColor::Blue),
    (4, 7, "4373", TableColor::Red),
    (5, 7, "2*3^2*37*41", TableColor::Violet),
    (6, 7, "7*16741", TableColor::Violet),
    (7, 7, "2*5*39191", TableColor::Violet),
    (2, 8, "17", TableColor::Uncolored),
    (3, 8, "2*383", TableColor::Violet),
    (4, 8, "13121", TableColor::Violet),
    (5, 8, "2*13*4201", TableColor::Violet),
    (6, 8, "11*53267", TableColor::Violet),
    (7, 8, "2*673*1747", TableColor::Violet),
    (2, 9, "19", TableColor::Uncolored),
    (3, 9, "2*13*59", TableColor::Violet),
    (4, 9, "5*7873", TableColor::Violet),
    (5, 9, "2*218453", TableColor::Violet),
    (6, 9, "2929687", TableColor::Violet),
    (7, 9, "2*7054387", TableColor::Violet),
    (2, 10, "3*7", TableColor::Uncolored),
    (3, 10, "2*5*307", TableColor::Blue),
    (4, 10, "7*16871", TableColor::Red),
    (5, 10, "2*3*291271", TableColor::Red),
    (6, 10, "1487*9851", TableColor::Red),
    (7, 10, "2*13*3255871", TableColor::Violet),
    (2, 11, "23", TableColor::Uncolored),
    (3, 11, "2*37*83", TableColor::Violet),
    (4, 11, "19*29*643", TableColor::Violet),
    (5, 11, "2*3495253", TableColor::Violet),
    (6, 11, "59*349*3557", TableColor::Violet),
    (7, 11, "2*67*631*6007", TableColor::Violet),
    (2, 12, "5^2", TableColor::Uncolored),
    (3, 12, "2*6143", TableColor::Blue),
    (4, 12, "1062881", TableColor::Red),
    (5, 12, "2*13981013", TableColor::Violet),
    (6, 12, "577*634681", TableColor::Violet),
    (7, 12, "2*5*163*271*6899", TableColor::Violet),
];

/// The six red cells' degrees; the projective-degree scan must come back
/// empty for each.
pub const RED_DEGREES: [u64; 6] = [161, 4373, 118097, 1747626, 14648437, 1062881];

/// fig3, lower-bound series: `(R, ln ord lower bound)`.
pub const FIG3_LOWER: [(u64, f64); 9] = [
    (1, 0.21832922390320147),
    (2, 1.5169286122128747),
    (3, 2.910062131740043),
    (4, 4.364627029394038),
    (5, 5.859642836677944),
    (6, 7.383471084643579),
    (7, 8.929073679839039),
    (8, 10.491859564797757),
    (9, 12.06865293879025),
];

/// fig3, upper-bound series: `(R, ln(N ln N / ln 2))` at three colors.
pub const FIG3_UPPER: [(u64, f64); 9] = [
    (1, 2.0794415416798357),
    (2, 3.5031304588236662),
    (3, 4.586063771501729),
    (4, 5.537664330567643),
    (5, 6.423460174662311),
    (6, 7.271198065231224),
    (7, 8.094554806804197),
    (8, 8.900985075575319),
    (9, 9.69489074280599),
];

/// fig4, Landau series at three colors.
pub const FIG4_LANDAU: [(u64, f64); 7] = [
    (1, 1.3862943611198906),
    (2, 3.4011973816621555),
    (3, 6.040254711277414),
    (4, 11.003099341537322),
    (5, 18.76356637075074),
    (6, 29.607900673056914),
    (7, 46.153176282243166),
];

/// fig4, `meo` upper-bound series at four colors.
pub const FIG4_MEO: [(u64, f64); 7] = [
    (1, 2.451835828342875),
    (2, 4.241137789412662),
    (3, 5.715644455991693),
    (4, 7.073504958751404),
    (5, 8.372651199315444),
    (6, 9.636346395636709),
    (7, 10.875947718093744),
];

/// fig5, Landau series at four colors with the radius rounded down to odd.
pub const FIG5_LANDAU: [(u64, f64); 7] = [
    (1, 1.791759469228055),
    (2, 1.791759469228055),
    (3, 12.794858810765376),
    (4, 12.794858810765376),
    (5, 53.82887695186044),
    (6, 53.82887695186044),
    (7, 197.242028734783),
];

/// fig5, `meo` upper-bound series at five colors.
pub const FIG5_MEO: [(u64, f64); 7] = [
    (1, 2.741470470592379),
    (2, 4.805752599412603),
    (3, 6.569705193669302),
    (4, 8.221744046054491),
    (5, 9.815546745296112),
    (6, 11.37299150985629),
    (7, 12.90521835073706),
];

/// fig6: `(C, sqrt(N_{C-1,3} ln N_{C-1,3}) / ln(N_{C,3} ln N_{C,3} / ln 2))`.
pub const FIG6_RATIO: [(u64, f64); 11] = [
    (10, 7.180617945783421),
    (11, 8.350049580891758),
    (12, 9.568207606910402),
    (13, 10.832447585318665),
    (14, 12.14050340555306),
    (15, 13.490403510938064),
    (16, 14.880411483648091),
    (17, 16.308982425788503),
    (18, 17.774730034772332),
    (19, 19.276401176427388),
    (20, 20.812855868631758),
];
