//! Exhaustive checks of the bracket identities, Leibniz conditions and
//! subalgebra structure, reported with counterexample witnesses.
//!
//! Every suite enumerates a fixed finite case set in lexicographic order of
//! its indices (units in table order), so reports are reproducible.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_complex::Complex64;
use serde::ser::{Serialize, SerializeStruct, Serializer};
use thiserror::Error;

use crate::basis::{basis_product, BasisUnit, SignedUnit, TABLE};
use crate::brackets::{
    associator, hamiltonian_factor, l_operator, levi_civita, na_bracket, spin_operator, ModelId,
    PhysicalConstants,
};
use crate::element::{multiply, CoeffFormat, Element, ExactElement, Gaussian, FLOAT_TOLERANCE};
use crate::subalgebra::SubalgebraId;

/// Independently transcribed copy of the multiplication table.
pub const TABLE_FIXTURE_CSV: &str = include_str!("../fixtures/table_i.csv");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuiteId {
    TableFidelity,
    UnitSquares,
    SubalgebraClosure,
    QuaternionBracket,
    BiquaternionBracket,
    Nontriviality,
    LeibnizQuaternion,
    LeibnizBiquaternion,
    LeibnizFailure,
    ScaledBrackets,
    CommutativityA,
    Alternativity,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown suite `{0}`")]
pub struct UnknownSuite(pub String);

impl SuiteId {
    pub const ALL: [Self; 12] = [
        Self::TableFidelity,
        Self::UnitSquares,
        Self::SubalgebraClosure,
        Self::QuaternionBracket,
        Self::BiquaternionBracket,
        Self::Nontriviality,
        Self::LeibnizQuaternion,
        Self::LeibnizBiquaternion,
        Self::LeibnizFailure,
        Self::ScaledBrackets,
        Self::CommutativityA,
        Self::Alternativity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::TableFidelity => "TABLE_FIDELITY",
            Self::UnitSquares => "UNIT_SQUARES",
            Self::SubalgebraClosure => "SUBALGEBRA_CLOSURE",
            Self::QuaternionBracket => "QUATERNION_BRACKET",
            Self::BiquaternionBracket => "BIQUATERNION_BRACKET",
            Self::Nontriviality => "NONTRIVIALITY",
            Self::LeibnizQuaternion => "LEIBNIZ_QUATERNION",
            Self::LeibnizBiquaternion => "LEIBNIZ_BIQUATERNION",
            Self::LeibnizFailure => "LEIBNIZ_FAILURE",
            Self::ScaledBrackets => "SCALED_BRACKETS",
            Self::CommutativityA => "COMMUTATIVITY_A",
            Self::Alternativity => "ALTERNATIVITY",
        }
    }

    /// Command-line spelling, e.g. `quaternion-bracket`.
    pub fn slug(self) -> String {
        self.name().to_ascii_lowercase().replace('_', "-")
    }

    /// Number of cases the suite enumerates.
    pub fn case_count(self) -> usize {
        match self {
            Self::TableFidelity => 256,
            Self::UnitSquares => 16,
            // closure pairs 16+64+64+16+256, associativity triples 64+512+64
            Self::SubalgebraClosure => 416 + 640,
            Self::QuaternionBracket => 9,
            Self::BiquaternionBracket => 18,
            Self::Nontriviality => 6,
            Self::LeibnizQuaternion => 27,
            Self::LeibnizBiquaternion => 4 * 27,
            Self::LeibnizFailure => 3 * 4 * 4 + 3 * 8 * 8,
            Self::ScaledBrackets => 9 + 18,
            Self::CommutativityA => 16,
            Self::Alternativity => 64,
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        Self::ALL
            .into_iter()
            .find(|id| id.name() == norm)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

/// One checked case. For witnesses of a violated identity, `actual` holds
/// the left-hand side and `expected` the right-hand side.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CaseRecord {
    pub case: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// Suite or check name, e.g. `QUATERNION_BRACKET`.
    pub suite: String,
    pub total_cases: usize,
    pub failures: Vec<CaseRecord>,
    pub witnesses: Vec<CaseRecord>,
    /// Per-subalgebra breakdown (only ALTERNATIVITY fills this).
    pub sub_reports: Vec<VerificationReport>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed(&self) -> usize {
        self.failures.len()
    }

    /// Line-oriented summary: one header line, then indented failures and
    /// witnesses, then sub-reports.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(&mut out, 0);
        out
    }

    /// `NAME: ok/total passed [PASS]`, with the witness count when nonzero.
    pub fn header(&self) -> String {
        let ok = self.total_cases.saturating_sub(self.failed());
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut out = format!("{}: {ok}/{} passed [{status}]", self.suite, self.total_cases);
        if !self.witnesses.is_empty() {
            write!(out, ", {} witnesses", self.witnesses.len()).unwrap();
        }
        out
    }

    fn write_text(&self, out: &mut String, depth: usize) {
        let pad = "  ".repeat(depth);
        writeln!(out, "{pad}{}", self.header()).unwrap();
        for f in &self.failures {
            writeln!(
                out,
                "{pad}  failure {}: expected {}, got {}",
                f.case, f.expected, f.actual
            )
            .unwrap();
        }
        for w in &self.witnesses {
            writeln!(out, "{pad}  witness {}: left {}, right {}", w.case, w.actual, w.expected)
                .unwrap();
        }
        for sub in &self.sub_reports {
            sub.write_text(out, depth + 1);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("VerificationReport", 7)?;
        st.serialize_field("name", &self.suite)?;
        st.serialize_field("total", &self.total_cases)?;
        st.serialize_field("failed", &self.failed())?;
        st.serialize_field("passed", &self.passed())?;
        st.serialize_field("failures", &self.failures)?;
        st.serialize_field("witnesses", &self.witnesses)?;
        st.serialize_field("sub_reports", &self.sub_reports)?;
        st.end()
    }
}

/// Accumulates case outcomes for one report.
#[derive(Default)]
pub(crate) struct Tally {
    total: usize,
    failures: Vec<CaseRecord>,
    witnesses: Vec<CaseRecord>,
}

impl Tally {
    pub(crate) fn record(
        &mut self,
        ok: bool,
        case: impl FnOnce() -> String,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) {
        self.total += 1;
        if !ok {
            self.failures.push(CaseRecord {
                case: case(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn exact<T: CoeffFormat>(
        &mut self,
        case: impl FnOnce() -> String,
        expected: &Element<T>,
        actual: &Element<T>,
    ) {
        self.record(expected == actual, case, expected, actual);
    }

    fn approx(&mut self, case: impl FnOnce() -> String, expected: &Element, actual: &Element) {
        self.record(expected.approx_eq(actual, FLOAT_TOLERANCE), case, expected, actual);
    }

    fn witness(&mut self, case: String, right: impl fmt::Display, left: impl fmt::Display) {
        self.witnesses.push(CaseRecord {
            case,
            expected: right.to_string(),
            actual: left.to_string(),
        });
    }

    fn fail(&mut self, case: String, expected: impl fmt::Display, actual: impl fmt::Display) {
        self.failures.push(CaseRecord {
            case,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    pub(crate) fn finish(self, suite: impl Into<String>) -> VerificationReport {
        VerificationReport {
            suite: suite.into(),
            total_cases: self.total,
            failures: self.failures,
            witnesses: self.witnesses,
            sub_reports: Vec::new(),
        }
    }
}

fn b(u: BasisUnit) -> ExactElement {
    ExactElement::basis(u)
}

fn int(n: i64) -> Gaussian {
    Gaussian::new(n, 0)
}

fn im(n: usize) -> BasisUnit {
    BasisUnit::im(n as u8).unwrap()
}

fn eps(n: usize) -> BasisUnit {
    BasisUnit::eps(n as u8).unwrap()
}

/// `Σ_k coeff·ε_{mnk}·unit(k)`
fn levi_sum(m: usize, n: usize, coeff: i64, unit: fn(usize) -> BasisUnit) -> ExactElement {
    (1..=3)
        .map(|k| b(unit(k)).scale(int(coeff * levi_civita(m, n, k))))
        .sum()
}

pub fn run_suite(id: SuiteId, consts: &PhysicalConstants) -> VerificationReport {
    match id {
        SuiteId::TableFidelity => table_fidelity(),
        SuiteId::UnitSquares => unit_squares(),
        SuiteId::SubalgebraClosure => subalgebra_closure(),
        SuiteId::QuaternionBracket => quaternion_bracket(),
        SuiteId::BiquaternionBracket => biquaternion_bracket(),
        SuiteId::Nontriviality => nontriviality(),
        SuiteId::LeibnizQuaternion => leibniz_quaternion(),
        SuiteId::LeibnizBiquaternion => leibniz_biquaternion(),
        SuiteId::LeibnizFailure => leibniz_failure(),
        SuiteId::ScaledBrackets => scaled_brackets(consts),
        SuiteId::CommutativityA => commutativity_a(),
        SuiteId::Alternativity => alternativity(),
    }
}

/// Every suite, in [`SuiteId::ALL`] order.
pub fn run_all(consts: &PhysicalConstants) -> Vec<VerificationReport> {
    SuiteId::ALL.iter().map(|&id| run_suite(id, consts)).collect()
}

/// Conjunction of the suite verdicts. ALTERNATIVITY contributes only its
/// OCTONION verdict, which is the top-level verdict of that report.
pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(VerificationReport::passed)
}

/// Parses a table CSV in the export format into a 16×16 grid.
pub fn parse_table_csv(text: &str) -> Result<Vec<Vec<Result<SignedUnit, String>>>, String> {
    let mut lines = text.lines();
    let header = lines.next().ok_or("empty table")?;
    let cols: Vec<&str> = header.split(',').skip(1).collect();
    let expected: Vec<&str> = BasisUnit::ALL.iter().map(|u| u.token()).collect();
    if cols != expected {
        return Err(format!("bad header `{header}`"));
    }
    let mut rows = Vec::with_capacity(16);
    for (unit, line) in BasisUnit::ALL.iter().zip(lines.by_ref()) {
        let mut fields = line.split(',');
        if fields.next() != Some(unit.token()) {
            return Err(format!("row for {unit} has wrong label: `{line}`"));
        }
        let cells: Vec<_> = fields
            .map(|f| f.parse::<SignedUnit>().map_err(|_| f.to_string()))
            .collect();
        if cells.len() != 16 {
            return Err(format!("row for {unit} has {} cells", cells.len()));
        }
        rows.push(cells);
    }
    if rows.len() != 16 {
        return Err(format!("expected 16 rows, found {}", rows.len()));
    }
    Ok(rows)
}

fn table_fidelity() -> VerificationReport {
    let mut t = Tally::default();
    match parse_table_csv(TABLE_FIXTURE_CSV) {
        Ok(rows) => {
            for (a, row) in BasisUnit::ALL.iter().zip(&rows) {
                for (bu, cell) in BasisUnit::ALL.iter().zip(row) {
                    let actual = TABLE[a.index()][bu.index()];
                    let (ok, expected) = match cell {
                        Ok(su) => (*su == actual, su.to_string()),
                        Err(raw) => (false, format!("unparseable `{raw}`")),
                    };
                    t.record(ok, || format!("{a}*{bu}"), expected, actual);
                }
            }
        }
        Err(msg) => t.fail("fixture".into(), "well-formed table", msg),
    }
    t.finish(SuiteId::TableFidelity.name())
}

fn unit_squares() -> VerificationReport {
    let mut t = Tally::default();
    for u in BasisUnit::ALL {
        let want = match u.kind() {
            crate::basis::UnitKind::Im(_) => SignedUnit::neg(BasisUnit::ONE),
            _ => SignedUnit::pos(BasisUnit::ONE),
        };
        let got = basis_product(u, u);
        t.record(got == want, || format!("{u}^2"), want, got);
    }
    t.finish(SuiteId::UnitSquares.name())
}

fn subalgebra_closure() -> VerificationReport {
    let mut t = Tally::default();
    for id in SubalgebraId::ALL {
        let units = id.units();
        for &x in units {
            for &y in units {
                let p = basis_product(x, y);
                t.record(
                    units.contains(&p.unit()),
                    || format!("closure {id} {x}*{y}"),
                    format!("unit in {id}"),
                    p,
                );
            }
        }
    }
    for id in [
        SubalgebraId::Quaternion,
        SubalgebraId::Biquaternion,
        SubalgebraId::CommutativeA,
    ] {
        let units = id.units();
        for &x in units {
            for &y in units {
                for &z in units {
                    let a = associator(&b(x), &b(y), &b(z));
                    t.exact(|| format!("associativity {id} ({x},{y},{z})"), &ExactElement::zero(), &a);
                }
            }
        }
    }
    t.finish(SuiteId::SubalgebraClosure.name())
}

fn quaternion_bracket() -> VerificationReport {
    let mut t = Tally::default();
    for m in 1..=3 {
        for n in 1..=3 {
            let got = na_bracket(&b(BasisUnit::I4), &b(im(m + 4)), &b(im(n)));
            let want = levi_sum(m, n, -2, im);
            t.exact(|| format!("[i4,i{},i{n}]", m + 4), &want, &got);
        }
    }
    t.finish(SuiteId::QuaternionBracket.name())
}

fn biquaternion_bracket() -> VerificationReport {
    let mut t = Tally::default();
    for m in 1..=3 {
        for n in 1..=3 {
            let got = na_bracket(&b(BasisUnit::I4), &b(eps(m + 4)), &b(im(n)));
            let want = levi_sum(m, n, -2, eps);
            t.exact(|| format!("[i4,e{},i{n}]", m + 4), &want, &got);
        }
    }
    for m in 1..=3 {
        for n in 1..=3 {
            let got = na_bracket(&b(BasisUnit::I4), &b(eps(m + 4)), &b(eps(n)));
            let want = levi_sum(m, n, 2, im);
            t.exact(|| format!("[i4,e{},e{n}]", m + 4), &want, &got);
        }
    }
    t.finish(SuiteId::BiquaternionBracket.name())
}

/// For each `m`, some `b` must make both regroupings of the bracket terms
/// differ: `i4(h b) ≠ (i4 h) b` and `(b i4) h ≠ b (i4 h)`, `h = i_{m+4}` or
/// `e_{m+4}`.
fn nontriviality() -> VerificationReport {
    let mut t = Tally::default();
    let families: [(&str, fn(usize) -> BasisUnit, SubalgebraId); 2] = [
        ("quaternionic", im, SubalgebraId::Quaternion),
        ("biquaternionic", eps, SubalgebraId::Biquaternion),
    ];
    let i4 = b(BasisUnit::I4);
    for (family, second, sub) in families {
        for m in 1..=3 {
            let h = b(second(m + 4));
            let mut found = false;
            for &bu in sub.units().iter().filter(|&&u| u != BasisUnit::ONE) {
                let x = b(bu);
                let left_nested = multiply(&i4, &multiply(&h, &x));
                let left_grouped = multiply(&multiply(&i4, &h), &x);
                let right_nested = multiply(&multiply(&x, &i4), &h);
                let right_grouped = multiply(&x, &multiply(&i4, &h));
                if left_nested != left_grouped && right_nested != right_grouped {
                    found = true;
                    t.witness(
                        format!("{family} m={m} b={bu}"),
                        format!("{left_grouped} ; {right_grouped}"),
                        format!("{left_nested} ; {right_nested}"),
                    );
                }
            }
            t.record(
                found,
                || format!("{family} m={m}"),
                "some b breaking both regroupings",
                "none found",
            );
        }
    }
    t.finish(SuiteId::Nontriviality.name())
}

struct LeibnizSides {
    product: ExactElement,
    swapped: ExactElement,
    rule: ExactElement,
}

/// `[i4, h, xy]`, `−[i4, h, yx]` and `x[i4, h, y] + [i4, h, x]y`.
fn leibniz_sides(h: &ExactElement, x: &ExactElement, y: &ExactElement) -> LeibnizSides {
    let i4 = b(BasisUnit::I4);
    let br = |c: &ExactElement| na_bracket(&i4, h, c);
    LeibnizSides {
        product: br(&multiply(x, y)),
        swapped: -br(&multiply(y, x)),
        rule: multiply(x, &br(y)) + multiply(&br(x), y),
    }
}

fn check_leibniz(t: &mut Tally, label: String, sides: LeibnizSides) {
    t.total += 1;
    if sides.product != sides.rule {
        t.fail(format!("{label} product-rule"), sides.rule, sides.product);
    } else if sides.product != sides.swapped {
        t.fail(format!("{label} antisymmetry"), sides.swapped, sides.product);
    }
}

fn leibniz_quaternion() -> VerificationReport {
    let mut t = Tally::default();
    for m in 1..=3 {
        let h = b(im(m + 4));
        for k in 1..=3 {
            for l in 1..=3 {
                let sides = leibniz_sides(&h, &b(im(k)), &b(im(l)));
                check_leibniz(&mut t, format!("[i4,i{},i{k}*i{l}]", m + 4), sides);
            }
        }
    }
    t.finish(SuiteId::LeibnizQuaternion.name())
}

fn leibniz_biquaternion() -> VerificationReport {
    let mut t = Tally::default();
    let kinds: [(char, fn(usize) -> BasisUnit); 2] = [('i', im), ('e', eps)];
    for (xk, xu) in kinds {
        for (yk, yu) in kinds {
            for m in 1..=3 {
                let h = b(eps(m + 4));
                for k in 1..=3 {
                    for l in 1..=3 {
                        let sides = leibniz_sides(&h, &b(xu(k)), &b(yu(l)));
                        let label = format!("[i4,e{},{xk}{k}*{yk}{l}]", m + 4);
                        check_leibniz(&mut t, label, sides);
                    }
                }
            }
        }
    }
    t.finish(SuiteId::LeibnizBiquaternion.name())
}

/// The product rule must break somewhere once `b, c` leave the associative
/// subalgebra. Each family passes iff at least one violation exists; every
/// violation is reported as a witness.
fn leibniz_failure() -> VerificationReport {
    let mut t = Tally::default();
    let outer_o = [BasisUnit::I4, BasisUnit::I5, BasisUnit::I6, BasisUnit::I7];
    let outer_s = [
        BasisUnit::I4,
        BasisUnit::I5,
        BasisUnit::I6,
        BasisUnit::I7,
        BasisUnit::E4,
        BasisUnit::E5,
        BasisUnit::E6,
        BasisUnit::E7,
    ];
    let families: [(&str, fn(usize) -> BasisUnit, &[BasisUnit]); 2] =
        [("quaternionic", im, &outer_o), ("biquaternionic", eps, &outer_s)];
    for (family, second, domain) in families {
        let mut violations = 0;
        for m in 1..=3 {
            let h = second(m + 4);
            for &x in domain {
                for &y in domain {
                    t.total += 1;
                    let sides = leibniz_sides(&b(h), &b(x), &b(y));
                    if sides.product != sides.rule {
                        violations += 1;
                        t.witness(
                            format!("{family} m={m} b={x} c={y}"),
                            sides.rule,
                            sides.product,
                        );
                    }
                }
            }
        }
        if violations == 0 {
            t.fail(
                format!("{family} family"),
                "at least one product-rule violation",
                "none",
            );
        }
    }
    t.finish(SuiteId::LeibnizFailure.name())
}

fn scaled_brackets(consts: &PhysicalConstants) -> VerificationReport {
    let mut t = Tally::default();
    let i_hbar = Complex64::new(0.0, consts.hbar_tilde());
    let levi_ops = |m: usize, n: usize, sign: f64, op: &dyn Fn(i64) -> Element| -> Element {
        (1..=3)
            .map(|k| op(k as i64).scale(i_hbar * sign * levi_civita(m, n, k) as f64))
            .sum()
    };
    let s_op = |k: i64| spin_operator(k, consts).expect("k in range");
    let l_op = |k: i64| l_operator(k, consts).expect("k in range");

    let h4 = hamiltonian_factor(ModelId::Quaternionic, 0, consts).expect("m in range");
    for m in 1..=3 {
        let hm = hamiltonian_factor(ModelId::Quaternionic, m as i64, consts).expect("m in range");
        for n in 1..=3 {
            let got = na_bracket(&h4, &hm, &s_op(n as i64));
            let want = levi_ops(m, n, -1.0, &s_op);
            t.approx(|| format!("quaternionic [h4,h{},S{n}]", m + 4), &want, &got);
        }
    }

    let h4 = hamiltonian_factor(ModelId::Biquaternionic, 0, consts).expect("m in range");
    for m in 1..=3 {
        let hm =
            hamiltonian_factor(ModelId::Biquaternionic, m as i64, consts).expect("m in range");
        for n in 1..=3 {
            let got = na_bracket(&h4, &hm, &s_op(n as i64));
            let want = levi_ops(m, n, -1.0, &l_op);
            t.approx(|| format!("biquaternionic [h4,h{},S{n}]", m + 4), &want, &got);
        }
        for n in 1..=3 {
            let got = na_bracket(&h4, &hm, &l_op(n as i64));
            let want = levi_ops(m, n, 1.0, &s_op);
            t.approx(|| format!("biquaternionic [h4,h{},L{n}]", m + 4), &want, &got);
        }
    }
    t.finish(SuiteId::ScaledBrackets.name())
}

fn commutativity_a() -> VerificationReport {
    let mut t = Tally::default();
    let units = SubalgebraId::CommutativeA.units();
    for &x in units {
        for &y in units {
            let xy = basis_product(x, y);
            let yx = basis_product(y, x);
            t.record(xy == yx, || format!("{x}*{y}"), yx, xy);
        }
    }
    t.finish(SuiteId::CommutativityA.name())
}

/// Checks `(xx)y = x(xy)` and `(yx)x = y(xx)` over all ordered basis pairs.
pub fn alternativity_report(id: SubalgebraId) -> VerificationReport {
    let mut t = Tally::default();
    let units = id.units();
    for &x in units {
        for &y in units {
            let (ex, ey) = (b(x), b(y));
            let left = associator(&ex, &ex, &ey);
            let right = associator(&ey, &ex, &ex);
            let ok = left.is_zero() && right.is_zero();
            t.record(
                ok,
                || format!("({x},{y})"),
                "0 ; 0",
                format!("{left} ; {right}"),
            );
        }
    }
    t.finish(format!("ALTERNATIVITY({id})"))
}

fn alternativity() -> VerificationReport {
    let subs: Vec<_> = SubalgebraId::ALL.iter().map(|&id| alternativity_report(id)).collect();
    let octonion = subs
        .iter()
        .find(|r| r.suite == "ALTERNATIVITY(OCTONION)")
        .expect("octonion sub-report present");
    VerificationReport {
        suite: SuiteId::Alternativity.name().to_string(),
        total_cases: octonion.total_cases,
        failures: octonion.failures.clone(),
        witnesses: Vec::new(),
        sub_reports: subs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn consts() -> PhysicalConstants {
        PhysicalConstants::default()
    }

    #[test]
    fn every_suite_matches_documented_size() {
        for id in SuiteId::ALL {
            let r = run_suite(id, &consts());
            assert_eq!(r.total_cases, id.case_count(), "{id}");
        }
    }

    #[test]
    fn quaternion_bracket_passes_nine() {
        let r = run_suite(SuiteId::QuaternionBracket, &consts());
        assert!(r.passed());
        assert_eq!(r.total_cases, 9);
    }

    #[test]
    fn commutativity_a_sixteen_pairs() {
        let r = run_suite(SuiteId::CommutativityA, &consts());
        assert!(r.passed());
        assert_eq!(r.total_cases, 16);
    }

    #[test]
    fn leibniz_failure_reports_documented_witness() {
        let r = run_suite(SuiteId::LeibnizFailure, &consts());
        assert!(r.passed());
        let w = r
            .witnesses
            .iter()
            .find(|w| w.case == "quaternionic m=1 b=i5 c=i6")
            .expect("witness present");
        assert_eq!(w.actual, "-2*i2");
        assert_eq!(w.expected, "0");
    }

    #[test]
    fn nontriviality_witness_for_i2() {
        let r = run_suite(SuiteId::Nontriviality, &consts());
        assert!(r.passed());
        assert!(r.witnesses.iter().any(|w| w.case == "quaternionic m=1 b=i2"));
    }

    #[test]
    fn scaled_brackets_hold_for_other_hbar() {
        let c = PhysicalConstants::with_hbar(0.7).unwrap();
        assert!(run_suite(SuiteId::ScaledBrackets, &c).passed());
    }

    #[test]
    fn run_all_is_deterministic() {
        let a = run_all(&consts());
        let b = run_all(&consts());
        assert_eq!(a, b);
        assert_eq!(a.len(), 12);
    }

    #[test]
    fn empty_failures_serialize_as_empty_list() {
        let r = run_suite(SuiteId::UnitSquares, &consts());
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["failures"], serde_json::json!([]));
        assert_eq!(v["total"], 16);
        assert_eq!(v["failed"], 0);
    }

    #[test]
    fn text_line_format() {
        let r = run_suite(SuiteId::QuaternionBracket, &consts());
        assert!(r.to_text().starts_with("QUATERNION_BRACKET: 9/9 passed"));
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!("quaternion-bracket".parse(), Ok(SuiteId::QuaternionBracket));
        assert_eq!("LEIBNIZ_FAILURE".parse(), Ok(SuiteId::LeibnizFailure));
        assert!("bogus".parse::<SuiteId>().is_err());
        for id in SuiteId::ALL {
            assert_eq!(id.slug().parse(), Ok(id));
        }
    }

    #[test]
    fn corrupted_fixture_is_caught() {
        let bad = TABLE_FIXTURE_CSV.replacen("+i3", "-i3", 1);
        let rows = parse_table_csv(&bad).unwrap();
        let mismatches = BasisUnit::ALL
            .iter()
            .zip(&rows)
            .flat_map(|(a, row)| {
                BasisUnit::ALL
                    .iter()
                    .zip(row)
                    .filter(move |(bu, cell)| cell.as_ref().ok() != Some(&basis_product(*a, **bu)))
            })
            .count();
        assert_eq!(mismatches, 1);
    }
}
