//! The 52 isogeny-torsion types, with a representative class for each.

/// `(shape, configuration, representative isogeny class)`.
pub const TABLE_ROWS: [(&str, &[&str], &str); 52] = [
    ("L1", &["[1]"], "37.a"),
    ("L2(2)", &["[2]", "[2]"], "46.a"),
    ("L2(3)", &["[1]", "[1]"], "196.a"),
    ("L2(3)", &["[3]", "[1]"], "44.a"),
    ("L2(5)", &["[1]", "[1]"], "75.c"),
    ("L2(5)", &["[5]", "[1]"], "38.b"),
    ("L2(7)", &["[1]", "[1]"], "208.d"),
    ("L2(7)", &["[7]", "[1]"], "26.b"),
    ("L2(11)", &["[1]", "[1]"], "121.a"),
    ("L2(13)", &["[1]", "[1]"], "147.b"),
    ("L2(17)", &["[1]", "[1]"], "14450.b"),
    ("L2(19)", &["[1]", "[1]"], "361.a"),
    ("L2(37)", &["[1]", "[1]"], "1225.b"),
    ("L2(43)", &["[1]", "[1]"], "1849.b"),
    ("L2(67)", &["[1]", "[1]"], "4489.b"),
    ("L2(163)", &["[1]", "[1]"], "26569.b"),
    ("L3(9)", &["[1]", "[1]", "[1]"], "175.b"),
    ("L3(9)", &["[3]", "[3]", "[1]"], "19.a"),
    ("L3(9)", &["[9]", "[3]", "[1]"], "54.b"),
    ("L3(25)", &["[1]", "[1]", "[1]"], "99.d"),
    ("L3(25)", &["[5]", "[5]", "[1]"], "11.a"),
    ("L4", &["[1]", "[1]", "[1]", "[1]"], "432.e"),
    ("L4", &["[3]", "[3]", "[3]", "[1]"], "27.a"),
    ("T4", &["[2,2]", "[2]", "[2]", "[2]"], "120.a"),
    ("T4", &["[2,2]", "[4]", "[2]", "[2]"], "33.a"),
    ("T4", &["[2,2]", "[4]", "[4]", "[2]"], "17.a"),
    ("T6", &["[2,4]", "[4]", "[4]", "[2,2]", "[2]", "[2]"], "24.a"),
    ("T6", &["[2,4]", "[8]", "[4]", "[2,2]", "[2]", "[2]"], "21.a"),
    ("T6", &["[2,2]", "[2]", "[2]", "[2,2]", "[2]", "[2]"], "126.a"),
    ("T6", &["[2,2]", "[4]", "[2]", "[2,2]", "[2]", "[2]"], "63.a"),
    (
        "T8",
        &["[2,8]", "[8]", "[8]", "[2,4]", "[4]", "[2,2]", "[2]", "[2]"],
        "210.e",
    ),
    (
        "T8",
        &["[2,4]", "[4]", "[4]", "[2,4]", "[4]", "[2,2]", "[2]", "[2]"],
        "195.a",
    ),
    (
        "T8",
        &["[2,4]", "[4]", "[4]", "[2,4]", "[8]", "[2,2]", "[2]", "[2]"],
        "15.a",
    ),
    (
        "T8",
        &["[2,4]", "[8]", "[4]", "[2,4]", "[4]", "[2,2]", "[2]", "[2]"],
        "1230.f",
    ),
    (
        "T8",
        &["[2,2]", "[2]", "[2]", "[2,2]", "[2]", "[2,2]", "[2]", "[2]"],
        "45.a",
    ),
    (
        "T8",
        &["[2,2]", "[4]", "[2]", "[2,2]", "[2]", "[2,2]", "[2]", "[2]"],
        "75.b",
    ),
    ("R4(6)", &["[2]", "[2]", "[2]", "[2]"], "80.b"),
    ("R4(6)", &["[6]", "[6]", "[2]", "[2]"], "20.a"),
    ("R4(10)", &["[2]", "[2]", "[2]", "[2]"], "150.a"),
    ("R4(10)", &["[10]", "[10]", "[2]", "[2]"], "66.c"),
    ("R4(14)", &["[2]", "[2]", "[2]", "[2]"], "49.a"),
    ("R4(15)", &["[1]", "[1]", "[1]", "[1]"], "400.d"),
    ("R4(15)", &["[3]", "[3]", "[1]", "[1]"], "50.a"),
    ("R4(15)", &["[5]", "[5]", "[1]", "[1]"], "50.b"),
    ("R4(21)", &["[1]", "[1]", "[1]", "[1]"], "1296.f"),
    ("R4(21)", &["[3]", "[3]", "[1]", "[1]"], "162.b"),
    ("R6", &["[2]", "[2]", "[2]", "[2]", "[2]", "[2]"], "98.a"),
    ("R6", &["[6]", "[6]", "[6]", "[6]", "[2]", "[2]"], "14.a"),
    (
        "S",
        &["[2,2]", "[2,2]", "[2]", "[2]", "[2]", "[2]", "[2]", "[2]"],
        "240.b",
    ),
    (
        "S",
        &["[2,2]", "[2,2]", "[4]", "[4]", "[2]", "[2]", "[2]", "[2]"],
        "150.b",
    ),
    (
        "S",
        &["[2,6]", "[2,2]", "[6]", "[2]", "[6]", "[2]", "[6]", "[2]"],
        "30.a",
    ),
    (
        "S",
        &["[2,6]", "[2,2]", "[12]", "[4]", "[6]", "[2]", "[6]", "[2]"],
        "90.c",
    ),
];

/// Isogeny-torsion types that occur for classes with complex multiplication.
pub const CM_TYPES: [(&str, &[&str]); 16] = [
    ("R4(6)", &["[6]", "[6]", "[2]", "[2]"]),
    ("R4(6)", &["[2]", "[2]", "[2]", "[2]"]),
    ("L4", &["[3]", "[3]", "[3]", "[1]"]),
    ("L4", &["[1]", "[1]", "[1]", "[1]"]),
    ("L2(3)", &["[3]", "[1]"]),
    ("L2(3)", &["[1]", "[1]"]),
    ("T4", &["[2,2]", "[4]", "[4]", "[2]"]),
    ("T4", &["[2,2]", "[4]", "[2]", "[2]"]),
    ("T4", &["[2,2]", "[2]", "[2]", "[2]"]),
    ("L2(2)", &["[2]", "[2]"]),
    ("R4(14)", &["[2]", "[2]", "[2]", "[2]"]),
    ("L2(11)", &["[1]", "[1]"]),
    ("L2(19)", &["[1]", "[1]"]),
    ("L2(43)", &["[1]", "[1]"]),
    ("L2(67)", &["[1]", "[1]"]),
    ("L2(163)", &["[1]", "[1]"]),
];

/// Configurations that no rational isogeny class realises.
pub const FORBIDDEN: [(&str, &[&str]); 3] = [
    ("S", &["[2,2]", "[2,2]", "[4]", "[4]", "[4]", "[4]", "[2]", "[2]"]),
    ("S", &["[2,6]", "[2,2]", "[12]", "[4]", "[12]", "[4]", "[6]", "[2]"]),
    ("T4", &["[2,2]", "[4]", "[4]", "[4]"]),
];
