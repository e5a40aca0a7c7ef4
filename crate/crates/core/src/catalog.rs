//! The bundled defining polynomials, their expected constants, and the
//! reproduce harness that recomputes every constant and reports
//! match-up-to-sign status line by line.

use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::fp::{discriminant_y_fp, fmt_fp_poly, has_root_mod_p, reduce_bipoly};
use crate::poly::{
    bivar_to_y_poly, discriminant_int, fmt_int_poly, resultant, squarefree_decomposition, BiPoly,
    IntPoly,
};
use crate::real_roots::count_real_roots;

/// One bundled family (or univariate seed) with its target prime, expected
/// group, and the constants the reproduce harness must recover.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub bipoly: Option<BiPoly>,
    pub unipoly: Option<IntPoly>,
    pub target_p: u64,
    /// Display name of the expected Galois group.
    pub expected_group: &'static str,
    /// Bundled profile to match statistically, when one exists.
    pub expected_profile: Option<&'static str>,
    /// Branch-point count established in the literature for this polynomial,
    /// when stated; drives the three-branch-point rule.
    pub known_branch_points: Option<usize>,
    /// The expected group is not isomorphic to a finite subgroup of PGL2(C).
    pub not_pgl2c: bool,
    pub not_pgl2c_note: &'static str,
    /// Labels and reference values of the constants checked by `reproduce`.
    pub expected_constants: Vec<(&'static str, String)>,
}

fn s5_poly() -> BiPoly {
    // Y^5 - Y^4 - T
    BiPoly::from_rows(&[&[0, -1], &[], &[], &[], &[-1], &[1]]).unwrap()
}

fn psl2f7_poly() -> BiPoly {
    // Y^7 - 56Y^6 + 609Y^5 + 1190Y^4 + 6356Y^3 + 4536Y^2 - 6804Y - 5832 - TY(Y+1)^3
    BiPoly::from_rows(&[
        &[-5832],
        &[-6804, -1],
        &[4536, -3],
        &[6356, -3],
        &[1190, -1],
        &[609],
        &[-56],
        &[1],
    ])
    .unwrap()
}

fn psl2f7_lsy_poly() -> BiPoly {
    // Y^7 + Y^6 + Y^5 + TY^4 + (T-2)Y^3 - 5Y^2 - 2Y + 1
    BiPoly::from_rows(&[
        &[1],
        &[-2],
        &[-5],
        &[-2, 1],
        &[0, 1],
        &[1],
        &[1],
        &[1],
    ])
    .unwrap()
}

fn psl2f11_poly() -> BiPoly {
    // Y^11 - 3Y^10 + 7Y^9 - 25Y^8 + 46Y^7 - 36Y^6 + 60Y^4 - 121Y^3
    //   + 140Y^2 - 95Y + 27 + Y^2(Y-1)^3 T
    BiPoly::from_rows(&[
        &[27],
        &[-95],
        &[140, -1],
        &[-121, 3],
        &[60, -3],
        &[0, 1],
        &[-36],
        &[46],
        &[-25],
        &[7],
        &[-3],
        &[1],
    ])
    .unwrap()
}

fn a6_seed_poly() -> IntPoly {
    // (Y^2 + 1)(Y^2 + 4) = Y^4 + 5Y^2 + 4
    IntPoly::from_i64(&[4, 0, 5, 0, 1])
}

/// The quartic's squarefree core from the degree-11 family: the cubic whose
/// fourth power is the discriminant.
fn psl2f11_disc_core() -> IntPoly {
    IntPoly::from_i64(&[7987117, 267408, -7472, 108])
}

/// Ninth Y-derivative of the degree-11 polynomial: (11!/2) Y^2 - 3*10! Y + 7*9!.
fn psl2f11_ninth_derivative() -> IntPoly {
    IntPoly::from_i64(&[2_540_160, -10_886_400, 19_958_400])
}

/// The five bundled entries, in catalog order.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "s5-p5",
            bipoly: Some(s5_poly()),
            unipoly: None,
            target_p: 5,
            expected_group: "S5",
            expected_profile: Some("S5"),
            known_branch_points: Some(3),
            not_pgl2c: true,
            not_pgl2c_note: "S5 = PGL2(F5) has order 120 and is neither cyclic, \
                             dihedral, nor among A4, S4, A5, so it is not a finite \
                             subgroup of PGL2(C)",
            expected_constants: vec![(
                "disc_y",
                fmt_int_poly(&IntPoly::from_i64(&[0, 0, 0, 256, 3125]), 'T'),
            )],
        },
        CatalogEntry {
            name: "psl2f7-p7",
            bipoly: Some(psl2f7_poly()),
            unipoly: None,
            target_p: 7,
            expected_group: "PSL2(F7)",
            expected_profile: Some("PSL2F7-deg7"),
            known_branch_points: Some(3),
            not_pgl2c: true,
            not_pgl2c_note: "PSL2(F7) is simple of order 168, so it is not a finite \
                             subgroup of PGL2(C)",
            expected_constants: vec![
                ("reduction_mod_7", "Y^7 - TY^4 - 3TY^3 - 3TY^2 - TY - 1".to_string()),
                ("disc_y_mod_7", "-3T^8 - T^7".to_string()),
            ],
        },
        CatalogEntry {
            name: "psl2f7-lsy",
            bipoly: Some(psl2f7_lsy_poly()),
            unipoly: None,
            target_p: 7,
            expected_group: "PSL2(F7)",
            expected_profile: Some("PSL2F7-deg7"),
            known_branch_points: None,
            not_pgl2c: true,
            not_pgl2c_note: "PSL2(F7) is simple of order 168, so it is not a finite \
                             subgroup of PGL2(C)",
            expected_constants: vec![("separable_over_qt", "true".to_string())],
        },
        CatalogEntry {
            name: "psl2f11-p11",
            bipoly: Some(psl2f11_poly()),
            unipoly: None,
            target_p: 11,
            expected_group: "PSL2(F11)",
            expected_profile: None,
            known_branch_points: Some(4),
            not_pgl2c: true,
            not_pgl2c_note: "PSL2(F11) is simple of order 660, so it is not a finite \
                             subgroup of PGL2(C)",
            expected_constants: vec![
                ("disc_y", format!("({})^4", fmt_int_poly(&psl2f11_disc_core(), 'T'))),
                ("squarefree_exponent", "4".to_string()),
                ("disc_core_no_root_mod_5", "true".to_string()),
                (
                    "ninth_derivative_y",
                    fmt_int_poly(&psl2f11_ninth_derivative(), 'Y'),
                ),
                ("ninth_derivative_disc_negative", "true".to_string()),
                ("ninth_derivative_real_roots", "0".to_string()),
            ],
        },
        CatalogEntry {
            name: "a6-seed",
            bipoly: None,
            unipoly: Some(a6_seed_poly()),
            target_p: 3,
            expected_group: "A6",
            expected_profile: Some("A6"),
            known_branch_points: None,
            not_pgl2c: true,
            not_pgl2c_note: "A6 = PSL2(F9) has order 360 and is neither cyclic, \
                             dihedral, nor among A4, S4, A5, so it is not a finite \
                             subgroup of PGL2(C)",
            expected_constants: vec![
                ("disc", "5184".to_string()),
                ("disc_is_square", "true".to_string()),
                ("factor_resultant", "9".to_string()),
                ("separable", "true".to_string()),
                ("real_roots", "0".to_string()),
            ],
        },
    ]
}

/// Looks up an entry by name.
pub fn lookup(name: &str) -> Result<CatalogEntry> {
    catalog()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

/// One recomputed constant with its reference value and match status.
#[derive(Debug, Clone)]
pub struct ConstantCheck {
    pub label: String,
    pub computed: String,
    pub expected: String,
    /// Equal up to one global sign (exact checks report sign +1).
    pub matches_up_to_sign: bool,
    /// The sign ratio when matched: +1 exact, -1 negated.
    pub sign: Option<i8>,
}

fn check_int_poly_up_to_sign(
    label: &str,
    computed: &IntPoly,
    expected: &IntPoly,
    var: char,
) -> ConstantCheck {
    let sign = if computed == expected {
        Some(1)
    } else if computed == &expected.neg() {
        Some(-1)
    } else {
        None
    };
    ConstantCheck {
        label: label.to_string(),
        computed: fmt_int_poly(computed, var),
        expected: fmt_int_poly(expected, var),
        matches_up_to_sign: sign.is_some(),
        sign,
    }
}

fn check_fp_poly_up_to_sign(
    label: &str,
    computed: &crate::fp::FpPoly,
    expected: &crate::fp::FpPoly,
    var: char,
) -> ConstantCheck {
    let sign = if computed == expected {
        Some(1)
    } else if computed == &expected.neg() {
        Some(-1)
    } else {
        None
    };
    ConstantCheck {
        label: label.to_string(),
        computed: fmt_fp_poly(computed, var),
        expected: fmt_fp_poly(expected, var),
        matches_up_to_sign: sign.is_some(),
        sign,
    }
}

fn check_exact(label: &str, computed: String, expected: String) -> ConstantCheck {
    let ok = computed == expected;
    ConstantCheck {
        label: label.to_string(),
        computed,
        expected,
        matches_up_to_sign: ok,
        sign: if ok { Some(1) } else { None },
    }
}

/// Recomputes every expected constant of the entry.
pub fn check_constants(entry: &CatalogEntry) -> Result<Vec<ConstantCheck>> {
    match entry.name {
        "s5-p5" => {
            let p = entry.bipoly.as_ref().unwrap();
            let disc = p.discriminant_y()?;
            let expected = IntPoly::from_i64(&[0, 0, 0, 256, 3125]);
            Ok(vec![check_int_poly_up_to_sign("disc_y", &disc, &expected, 'T')])
        }
        "psl2f7-p7" => {
            let p = entry.bipoly.as_ref().unwrap();
            let reduced = reduce_bipoly(p, 7)?;
            // Y^7 - 1 - TY(Y+1)^3 reduced mod 7
            let expected_red = reduce_bipoly(
                &BiPoly::from_rows(&[
                    &[-1],
                    &[0, -1],
                    &[0, -3],
                    &[0, -3],
                    &[0, -1],
                    &[],
                    &[],
                    &[1],
                ])
                .unwrap(),
                7,
            )?;
            let red_check = ConstantCheck {
                label: "reduction_mod_7".to_string(),
                computed: crate::fp::fmt_fp_bivar(&reduced),
                expected: crate::fp::fmt_fp_bivar(&expected_red),
                matches_up_to_sign: reduced == expected_red,
                sign: if reduced == expected_red { Some(1) } else { None },
            };
            // disc over F_7[T] of the reduction vs -3T^8 - T^7
            let disc7 = discriminant_y_fp(&reduced)?;
            let expected_disc =
                crate::fp::FpPoly::from_int_poly(&IntPoly::from_i64(&[0, 0, 0, 0, 0, 0, 0, -1, -3]), 7);
            let disc_check = check_fp_poly_up_to_sign("disc_y_mod_7", &disc7, &expected_disc, 'T');
            Ok(vec![red_check, disc_check])
        }
        "psl2f7-lsy" => {
            let p = entry.bipoly.as_ref().unwrap();
            let disc = p.discriminant_y()?;
            Ok(vec![check_exact(
                "separable_over_qt",
                (!disc.is_zero()).to_string(),
                "true".to_string(),
            )])
        }
        "psl2f11-p11" => {
            let p = entry.bipoly.as_ref().unwrap();
            let disc = p.discriminant_y()?;
            let core = psl2f11_disc_core();
            let expected_disc = core.pow(4);
            let mut checks =
                vec![check_int_poly_up_to_sign("disc_y", &disc, &expected_disc, 'T')];

            let (_, factors) = squarefree_decomposition(&disc)?;
            let exponent_ok = factors.len() == 1 && factors[0].1 == 4 && factors[0].0 == core;
            checks.push(check_exact(
                "squarefree_exponent",
                if exponent_ok { "4".to_string() } else { format!("{factors:?}") },
                "4".to_string(),
            ));

            checks.push(check_exact(
                "disc_core_no_root_mod_5",
                (!has_root_mod_p(&core, 5)?).to_string(),
                "true".to_string(),
            ));

            let ninth = p.derivative_y(9);
            let ninth_y = bivar_to_y_poly(&ninth)
                .ok_or_else(|| Error::Parse("ninth derivative should be T-free".into()))?;
            let expected_ninth = psl2f11_ninth_derivative();
            checks.push(ConstantCheck {
                label: "ninth_derivative_y".to_string(),
                computed: fmt_int_poly(&ninth_y, 'Y'),
                expected: fmt_int_poly(&expected_ninth, 'Y'),
                matches_up_to_sign: ninth_y == expected_ninth,
                sign: if ninth_y == expected_ninth { Some(1) } else { None },
            });

            let d = discriminant_int(&ninth_y)?;
            checks.push(check_exact(
                "ninth_derivative_disc_negative",
                d.is_negative().to_string(),
                "true".to_string(),
            ));

            let roots = count_real_roots(&ninth_y.to_rat())?;
            checks.push(check_exact(
                "ninth_derivative_real_roots",
                roots.to_string(),
                "0".to_string(),
            ));
            Ok(checks)
        }
        "a6-seed" => {
            let f = entry.unipoly.as_ref().unwrap();
            let disc = discriminant_int(f)?;
            let mut checks = vec![check_exact("disc", disc.to_string(), "5184".to_string())];

            let is_square = !disc.is_negative() && {
                let r = disc.sqrt();
                &r * &r == disc
            };
            checks.push(check_exact(
                "disc_is_square",
                is_square.to_string(),
                "true".to_string(),
            ));

            // Res(Y^2 + 1, Y^2 + 4) = 9, the base of the squared cross term
            let r = resultant(&IntPoly::from_i64(&[1, 0, 1]), &IntPoly::from_i64(&[4, 0, 1]));
            checks.push(check_exact("factor_resultant", r.to_string(), "9".to_string()));

            checks.push(check_exact(
                "separable",
                f.to_rat().is_separable()?.to_string(),
                "true".to_string(),
            ));

            let roots = count_real_roots(&f.to_rat())?;
            checks.push(check_exact("real_roots", roots.to_string(), "0".to_string()));
            Ok(checks)
        }
        other => Err(Error::UnknownEntry(other.to_string())),
    }
}

/// The reproduce report for one entry: canonical, byte-stable text.
#[derive(Debug, Clone)]
pub struct ReproduceReport {
    pub name: String,
    pub polynomial: String,
    pub checks: Vec<ConstantCheck>,
    /// Informational lines that carry no pass/fail status.
    pub notes: Vec<(String, String)>,
}

impl ReproduceReport {
    pub fn all_match(&self) -> bool {
        self.checks.iter().all(|c| c.matches_up_to_sign)
    }
}

impl fmt::Display for ReproduceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "entry {}", self.name)?;
        writeln!(f, "polynomial {}", self.polynomial)?;
        for (k, v) in &self.notes {
            writeln!(f, "note {k} = {v}")?;
        }
        for c in &self.checks {
            writeln!(f, "check {}", c.label)?;
            writeln!(f, "  computed: {}", c.computed)?;
            writeln!(f, "  expected: {}", c.expected)?;
            match c.sign {
                Some(s) => writeln!(
                    f,
                    "  match_up_to_sign: true (sign {})",
                    if s >= 0 { "+1" } else { "-1" }
                )?,
                None => writeln!(f, "  match_up_to_sign: false")?,
            }
        }
        let passed = self.checks.iter().filter(|c| c.matches_up_to_sign).count();
        writeln!(
            f,
            "result {} ({passed}/{} checks)",
            if self.all_match() { "PASS" } else { "FAIL" },
            self.checks.len()
        )
    }
}

/// Recomputes every expected constant of the named entry.
pub fn reproduce(name: &str) -> Result<ReproduceReport> {
    let entry = lookup(name)?;
    let checks = check_constants(&entry)?;
    let polynomial = match (&entry.bipoly, &entry.unipoly) {
        (Some(p), _) => p.to_string(),
        (_, Some(f)) => fmt_int_poly(f, 'Y'),
        _ => unreachable!("catalog entries carry exactly one polynomial"),
    };
    let mut notes = Vec::new();
    if let Some(p) = &entry.bipoly {
        let branch = crate::specialization::branch_data(p)?;
        notes.push(("branch_bound".to_string(), branch.branch_bound.to_string()));
    }
    Ok(ReproduceReport { name: entry.name.to_string(), polynomial, checks, notes })
}

/// Reproduce reports for every entry, in catalog order, as one text block.
pub fn reproduce_all() -> Result<String> {
    let mut out = String::new();
    for (i, entry) in catalog().iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&reproduce(entry.name)?.to_string());
    }
    Ok(out)
}
