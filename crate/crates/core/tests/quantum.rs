use qmink::cli::{closure_table_output, normal_form_command, Format};

fn nf(expr: &str, algebra: &str) -> String {
    normal_form_command(expr, algebra).unwrap_or_else(|e| panic!("{expr}: {e}"))
}

/// Each derived identity `lhs = rhs`, re-expanded entrywise in the ambient
/// matrix algebra, must reduce to zero there.
#[test]
fn closure_identities_hold_in_the_ambient_algebra() {
    let table = closure_table_output(Format::Text).unwrap();
    let mut count = 0;
    for line in table.lines() {
        let (lhs, rhs) = line.split_once(" = ").unwrap();
        assert_eq!(nf(&format!("{lhs} - ({rhs})"), "grq"), "0", "{line}");
        count += 1;
    }
    assert_eq!(count, 66);
}

#[test]
fn perturbed_identity_is_rejected() {
    let wrong = "D[2,4]*D[1,3] - q^2*D[1,3]*D[2,4]";
    assert_ne!(nf(wrong, "grq"), "0");
    let right = "D[2,4]*D[1,3] - q^2*D[1,3]*D[2,4] - (q - q^3)*D[1,2]*D[3,4]";
    assert_eq!(nf(right, "grq"), "0");
}

#[test]
fn the_big_cell_minor_commutes_up_to_a_power_of_q() {
    let cases = [
        ("D[1,3]", "q"),
        ("D[1,4]", "q"),
        ("D[2,3]", "q"),
        ("D[2,4]", "q"),
        ("D[3,4]", "q^2"),
    ];
    for (m, k) in cases {
        let expr = format!("{m}*D[1,2] - {k}*D[1,2]*{m}");
        assert_eq!(nf(&expr, "grq"), "0", "{m}");
    }
}

#[test]
fn localization_inverts_d12() {
    assert_eq!(nf("D12inv*D[1,2]", "minkq"), "1");
    assert_eq!(nf("D[1,2]*D12inv", "minkq"), "1");
    assert_eq!(nf("D12inv*D[1,3]", "minkq"), "q*D[1,3]*D12inv");
    assert_eq!(nf("D12inv*D[3,4] - q^2*D[3,4]*D12inv", "minkq"), "0");
}

#[test]
fn odd_minors_square_to_zero() {
    for m in ["D[1,5]", "D[2,5]", "D[3,5]", "D[4,5]", "D[5,5]"] {
        assert_eq!(nf(&format!("{m}*{m}"), "minkq"), "0", "{m}");
    }
}

#[test]
fn chiral_relations_hold_in_both_models() {
    let relations = [
        "t[3,1]*t[3,2] - q*t[3,2]*t[3,1]",
        "t[4,1]*t[4,2] - q*t[4,2]*t[4,1]",
        "t[3,1]*t[4,1] - q^-1*t[4,1]*t[3,1]",
        "t[3,2]*t[4,2] - q^-1*t[4,2]*t[3,2]",
        "t[3,1]*t[4,2] - t[4,2]*t[3,1]",
        "t[3,2]*t[4,1] - t[4,1]*t[3,2] - (q^-1 - q)*t[4,2]*t[3,1]",
        "tau[5,1]*tau[5,2] + q^-1*tau[5,2]*tau[5,1]",
        "t[3,1]*tau[5,1] - q^-1*tau[5,1]*t[3,1]",
        "t[4,2]*tau[5,2] - q^-1*tau[5,2]*t[4,2]",
        "t[4,1]*tau[5,2] - tau[5,2]*t[4,1]",
        "t[3,2]*tau[5,1] - tau[5,1]*t[3,2] - (q^-1 - q)*t[3,1]*tau[5,2]",
        "tau[5,1]*tau[5,1]",
        "tau[5,2]*tau[5,2]",
    ];
    for r in relations {
        assert_eq!(nf(r, "chiral-abstract"), "0", "{r}");
        assert_eq!(nf(r, "minkq"), "0", "{r}");
    }
}

#[test]
fn classical_commutation_fails_for_generic_q() {
    let r = "t[3,2]*t[4,1] - t[4,1]*t[3,2]";
    assert_ne!(nf(r, "minkq"), "0");
    assert_ne!(nf(r, "chiral-abstract"), "0");
}
