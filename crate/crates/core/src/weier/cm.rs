use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::qpoly::Rational;

/// A rational CM j-invariant with the discriminant of its CM field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmRecord {
    pub j: Rational,
    pub disc_k: i64,
}

// (j, d_K); orders of conductor > 1 are listed under their field.
const CM_TABLE: [(&str, i64); 13] = [
    ("0", -3),
    ("54000", -3),
    ("-12288000", -3),
    ("1728", -4),
    ("287496", -4),
    ("-3375", -7),
    ("16581375", -7),
    ("8000", -8),
    ("-32768", -11),
    ("-884736", -19),
    ("-884736000", -43),
    ("-147197952000", -67),
    ("-262537412640768000", -163),
];

pub fn cm_table() -> &'static [CmRecord] {
    static TABLE: OnceLock<Vec<CmRecord>> = OnceLock::new();
    TABLE.get_or_init(|| {
        CM_TABLE
            .iter()
            .map(|(j, d)| CmRecord {
                j: Rational::from_integer(j.parse::<BigInt>().unwrap()),
                disc_k: *d,
            })
            .collect()
    })
}

pub fn cm_lookup(j: &Rational) -> Option<CmRecord> {
    cm_table().iter().find(|r| &r.j == j).cloned()
}
