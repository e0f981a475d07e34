use std::ffi::{c_char, CStr, CString};
use std::process::Command;
use std::ptr;

use ctsynth::json;
use ctsynth::Circuit;
use ctsynth_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(ctsynth_last_error()) }
        .to_string_lossy()
        .into_owned()
}

fn take_string(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { ctsynth_string_free(p) };
    s
}

#[test]
fn synthesize_through_handles() {
    unsafe {
        let mut table = ptr::null_mut();
        assert_eq!(ctsynth_table_build(&mut table), CtsynthStatus::Ok);
        let word = CString::new("HTHTHTHT").unwrap();
        let mut u = ptr::null_mut();
        assert_eq!(
            ctsynth_unitary_from_word(word.as_ptr(), &mut u),
            CtsynthStatus::Ok
        );
        let mut sde = 0;
        assert_eq!(ctsynth_unitary_sde(u, &mut sde), CtsynthStatus::Ok);
        assert_eq!(sde, 5);

        for flags in [0, CTSYNTH_NEGATIVE_POWERS, CTSYNTH_PREFER_P] {
            let mut c = ptr::null_mut();
            let mut phase = 0u8;
            assert_eq!(
                ctsynth_synthesize(table, u, flags, &mut c, &mut phase),
                CtsynthStatus::Ok
            );
            let mut counts = CtsynthCounts::default();
            assert_eq!(ctsynth_circuit_counts(c, &mut counts), CtsynthStatus::Ok);
            assert_eq!(counts.n_h, 4);
            let mut text = ptr::null_mut();
            assert_eq!(ctsynth_circuit_text(c, &mut text), CtsynthStatus::Ok);
            let circuit = Circuit::from_text(&take_string(text)).unwrap();
            let expected = Circuit::from_text("HTHTHTHT").unwrap().evaluate();
            assert_eq!(circuit.evaluate(), expected.mul_omega_pow(i64::from(phase)));
            ctsynth_circuit_free(c);
        }

        let mut js = ptr::null_mut();
        assert_eq!(ctsynth_unitary_to_json(u, &mut js), CtsynthStatus::Ok);
        let text = CString::new(take_string(js)).unwrap();
        let mut v = ptr::null_mut();
        assert_eq!(
            ctsynth_unitary_from_json(text.as_ptr(), &mut v),
            CtsynthStatus::Ok
        );
        ctsynth_unitary_free(v);
        ctsynth_unitary_free(u);
        ctsynth_table_free(table);
    }
}

#[test]
fn prepare_and_verify() {
    unsafe {
        let mut table = ptr::null_mut();
        assert_eq!(ctsynth_table_build(&mut table), CtsynthStatus::Ok);
        let s = Circuit::from_text("THTHTHTH").unwrap().evaluate().column(0);
        let state = CString::new(json::state_to_value(&s).to_string()).unwrap();
        let mut c = ptr::null_mut();
        assert_eq!(
            ctsynth_prepare(table, state.as_ptr(), 0, &mut c),
            CtsynthStatus::Ok
        );
        let mut text = ptr::null_mut();
        assert_eq!(ctsynth_circuit_text(c, &mut text), CtsynthStatus::Ok);
        let prepared = Circuit::from_text(&take_string(text))
            .unwrap()
            .evaluate()
            .column(0);
        assert_eq!(prepared, s);
        ctsynth_circuit_free(c);
        ctsynth_table_free(table);

        let mut holds = false;
        assert_eq!(ctsynth_verify_lemma(&mut holds), CtsynthStatus::Ok);
        assert!(holds);
    }
}

#[test]
fn errors_carry_status_and_message() {
    unsafe {
        let mut u = ptr::null_mut();
        let bad = CString::new("HQ").unwrap();
        assert_eq!(
            ctsynth_unitary_from_word(bad.as_ptr(), &mut u),
            CtsynthStatus::Parse
        );
        assert!(last_error().contains("unknown gate"), "{}", last_error());
        assert!(u.is_null());

        let not_unitary = CString::new(
            r#"{"z00":{"c":[1,0,0,0],"k":0},"z01":{"c":[1,0,0,0],"k":0},"z10":{"c":[0,0,0,0],"k":0},"z11":{"c":[1,0,0,0],"k":0}}"#,
        )
        .unwrap();
        assert_eq!(
            ctsynth_unitary_from_json(not_unitary.as_ptr(), &mut u),
            CtsynthStatus::Unitarity
        );
        assert_eq!(
            ctsynth_unitary_from_word(ptr::null(), &mut u),
            CtsynthStatus::NullArgument
        );

        let word = CString::new("H").unwrap();
        assert_eq!(
            ctsynth_unitary_from_word(word.as_ptr(), ptr::null_mut()),
            CtsynthStatus::NullArgument
        );
        assert_eq!(
            ctsynth_unitary_from_word(word.as_ptr(), &mut u),
            CtsynthStatus::Ok
        );
        assert_eq!(last_error(), "");
        let mut c = ptr::null_mut();
        let mut phase = 0;
        assert_eq!(
            ctsynth_synthesize(ptr::null(), u, 0, &mut c, &mut phase),
            CtsynthStatus::NullArgument
        );
        ctsynth_unitary_free(u);

        let missing = CString::new("/nonexistent-dir/for/ctsynth/table.json").unwrap();
        let mut table = ptr::null_mut();
        assert_eq!(
            ctsynth_table_load_or_build(missing.as_ptr(), &mut table),
            CtsynthStatus::Io
        );

        // freeing null is a no-op
        ctsynth_table_free(ptr::null_mut());
        ctsynth_unitary_free(ptr::null_mut());
        ctsynth_circuit_free(ptr::null_mut());
        ctsynth_string_free(ptr::null_mut());
    }
}

#[test]
fn header_compiles_as_c() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let header = std::path::Path::new(dir).join("include/ctsynth.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "ctsynth_synthesize",
        "ctsynth_prepare",
        "ctsynth_verify_lemma",
        "CTSYNTH_STATUS_OK",
    ] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let probe = std::env::temp_dir().join(format!("ctsynth-probe-{}.c", std::process::id()));
    std::fs::write(
        &probe,
        "#include \"ctsynth.h\"\n\
         int main(void) {\n\
           CtsynthTable *t = 0; CtsynthCounts n; bool ok;\n\
           CtsynthStatus s = ctsynth_table_build(&t);\n\
           (void)n; (void)ok; (void)s; ctsynth_table_free(t);\n\
           return ctsynth_verify_lemma(&ok) == CTSYNTH_STATUS_OK ? 0 : 1;\n\
         }\n",
    )
    .unwrap();
    let out = Command::new(&cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(header.parent().unwrap())
        .arg(&probe)
        .output();
    let _ = std::fs::remove_file(&probe);
    match out {
        Ok(out) => assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        ),
        Err(e) => eprintln!("skipping C compile check, no {cc}: {e}"),
    }
}
