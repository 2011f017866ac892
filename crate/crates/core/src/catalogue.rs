//! Order types used as standard inputs by tests and the CLI.

/// Irreducible types of width at most four.
pub const IRREDUCIBLE: &[&str] = &[
    "12", "21", "132", "231", "1122", "1332", "2331", "11322", "13122", "111222", "112122", "13332",
    "113322", "131322", "11212122", "11112222",
];

/// Reducible types.
pub const REDUCIBLE: &[&str] = &["1212", "12132", "312"];
