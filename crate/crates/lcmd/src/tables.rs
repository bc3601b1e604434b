//! Regenerates the bishop, queen and nightrider reference values and diffs
//! them against embedded expected values.

use lcmd_core::{
    complete_graph, factor, incidence, kronecker, lcmd_formula, lcmd_small, BigUint, BruteOptions,
    IntMatrix, KronLayout, DEFAULT_TRIAL_BOUND,
};

use crate::named;
use crate::parallel::lcmd_brute_parallel;

/// Nightrider `lcmd(M_N ⊗ D(K_n))`, n = 2..=10, with the factored column.
pub const NIGHTRIDER: [(usize, &str, &str); 9] = [
    (2, "60", "60^1"),
    (3, "3600", "60^2"),
    (4, "3672000", "60^3 · 17"),
    (5, "220320000", "60^4 · 17"),
    (6, "1202947200000", "60^5 · 7 · 13 · 17"),
    (7, "72176832000000", "60^6 · 7 · 13 · 17"),
    (8, "18920434740480000000", "60^7 · 7 · 13 · 17^2 · 257"),
    (9, "1135226084428800000000", "60^8 · 7 · 13 · 17^2 · 257"),
    (
        10,
        "952295753183943168000000000",
        "60^9 · 7 · 11 · 13 · 17^2 · 31 · 41 · 257",
    ),
];

pub const BISHOP_MAX_N: usize = 12;

/// Queen comparison at n = 4: `(label, expected)`.
pub const QUEEN: [(&str, &str); 3] = [
    ("brute lcmd(MQT ⊗ D(K_4))", "24"),
    ("brute lcmd(MQ ⊗ D(K_4))", "8"),
    ("brute lcmd(MB ⊗ D(K_4))", "8"),
];

#[derive(Debug, Clone, Default)]
pub struct TablesReport {
    /// Generated lines.
    pub lines: Vec<String>,
    /// Lines the reference values predict.
    pub expected: Vec<String>,
}

impl TablesReport {
    pub fn diff(&self) -> Vec<String> {
        let mut out = Vec::new();
        let len = self.lines.len().max(self.expected.len());
        for i in 0..len {
            let got = self.lines.get(i).map(String::as_str).unwrap_or("<missing>");
            let want = self
                .expected
                .get(i)
                .map(String::as_str)
                .unwrap_or("<missing>");
            if got != want {
                out.push(format!("- {want}"));
                out.push(format!("+ {got}"));
            }
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.lines == self.expected
    }
}

fn bishop_line(n: usize, value: &str) -> String {
    format!("bishop n={n:<2} {value}")
}

fn queen_line(label: &str, value: &str) -> String {
    format!("queen {label} = {value}")
}

fn nightrider_line(n: usize, value: &str, factored: &str) -> String {
    format!("nightrider n={n:<2} {value:>28} | {factored}")
}

fn brute_kron(a: &IntMatrix, n: usize, threads: Option<usize>) -> BigUint {
    let g = complete_graph(n).expect("n >= 1");
    let p = kronecker(a, &incidence(&g));
    lcmd_brute_parallel(
        &p,
        BruteOptions::for_layout(KronLayout::complete(a, n)),
        threads,
    )
    .expect("valid plan")
}

pub fn generate(threads: Option<usize>) -> TablesReport {
    let mut r = TablesReport::default();

    let mb = named::bishop();
    for n in 1..=BISHOP_MAX_N {
        let v = lcmd_formula(&mb, n).expect("bishop is non-zero").value;
        r.lines.push(bishop_line(n, &v.to_string()));
        r.expected.push(bishop_line(
            n,
            &(BigUint::from(1u32) << (n - 1)).to_string(),
        ));
    }

    let queen_values = [
        brute_kron(&named::queen_transposed(), 4, threads),
        brute_kron(&named::queen(), 4, threads),
        brute_kron(&mb, 4, threads),
    ];
    for ((label, want), got) in QUEEN.iter().zip(&queen_values) {
        r.lines.push(queen_line(label, &got.to_string()));
        r.expected.push(queen_line(label, want));
    }

    let mn = named::nightrider();
    let base = lcmd_small(&mn).expect("two columns");
    for (n, value, factored) in NIGHTRIDER {
        let v = lcmd_formula(&mn, n).expect("nightrider is non-zero").value;
        let f = factor(&v, DEFAULT_TRIAL_BOUND)
            .expect("positive")
            .render_with_base(&base);
        r.lines.push(nightrider_line(n, &v.to_string(), &f));
        r.expected.push(nightrider_line(n, value, factored));
    }
    r
}
