//! Exercises the exported C functions the way a foreign caller would: through
//! raw pointers and status codes.

use cmideal_capi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn c(text: &str) -> CString {
    CString::new(text).unwrap()
}

unsafe fn last_error() -> String {
    CStr::from_ptr(cmideal_last_error())
        .to_string_lossy()
        .into_owned()
}

#[test]
fn parse_classify_free() {
    unsafe {
        let text = c("n 4\n0 1\n1 2\n2 3\n0 3\n");
        let mut g: *mut CmidealGraph = ptr::null_mut();
        assert_eq!(cmideal_graph_parse(text.as_ptr(), &mut g), CMIDEAL_OK);
        assert_eq!(cmideal_graph_vertex_count(g), 4);
        assert_eq!(cmideal_graph_edge_count(g), 4);
        assert!(!cmideal_graph_is_woodroofe(g));
        assert!(!cmideal_graph_is_clique_union(g));
        cmideal_graph_free(g);
    }
}

#[test]
fn build_from_pairs() {
    unsafe {
        let edges: Vec<usize> = vec![0, 1, 1, 2, 0, 2];
        let mut g: *mut CmidealGraph = ptr::null_mut();
        assert_eq!(cmideal_graph_build(3, edges.as_ptr(), 3, &mut g), CMIDEAL_OK);
        assert!(cmideal_graph_is_clique_union(g));
        cmideal_graph_free(g);

        // self-loop rejected
        let bad: Vec<usize> = vec![0, 0];
        let mut g2: *mut CmidealGraph = ptr::null_mut();
        assert_eq!(
            cmideal_graph_build(2, bad.as_ptr(), 1, &mut g2),
            CMIDEAL_ERR_INVALID
        );
        assert!(last_error().contains("self-loop"));
    }
}

#[test]
fn parse_failures_set_the_error() {
    unsafe {
        let text = c("n 3\n0 9\n");
        let mut g: *mut CmidealGraph = ptr::null_mut();
        assert_eq!(cmideal_graph_parse(text.as_ptr(), &mut g), CMIDEAL_ERR_PARSE);
        assert!(last_error().contains("line 2"), "{}", last_error());

        assert_eq!(
            cmideal_graph_parse(ptr::null(), &mut g),
            CMIDEAL_ERR_NULL_ARGUMENT
        );
    }
}

#[test]
fn weighted_suspension_report_and_witness() {
    unsafe {
        let text = c("n 8\n0 1\n1 2\n2 3\n0 3\n0 4\n1 5\n2 6\n3 7\n");
        let mut g: *mut CmidealGraph = ptr::null_mut();
        assert_eq!(cmideal_graph_parse(text.as_ptr(), &mut g), CMIDEAL_OK);
        assert!(cmideal_graph_is_very_well_covered(g));

        // the plain edge ideal is Cohen-Macaulay
        let mut ones: *mut CmidealWeights = ptr::null_mut();
        assert_eq!(cmideal_weights_ones(g, &mut ones), CMIDEAL_OK);
        let mut report = CmidealReport::default();
        assert_eq!(cmideal_check(g, ones, 0, false, &mut report), CMIDEAL_OK);
        assert!(report.is_cm && report.is_scm && report.unmixed);
        assert_eq!(report.dim, 4);
        cmideal_weights_free(ones);

        // doubling the cycle edges breaks the sequential property
        let wtext = c("0 1 2\n1 2 2\n2 3 2\n0 3 2\n0 4 1\n1 5 1\n2 6 1\n3 7 1\n");
        let mut w: *mut CmidealWeights = ptr::null_mut();
        assert_eq!(cmideal_weights_parse(g, wtext.as_ptr(), &mut w), CMIDEAL_OK);
        let mut report = CmidealReport::default();
        assert_eq!(cmideal_check(g, w, 0, true, &mut report), CMIDEAL_OK);
        assert!(!report.is_scm);
        assert!(!report.field_sensitive);

        let mut witness: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(cmideal_witness(g, w, 0, true, &mut witness), CMIDEAL_OK);
        assert!(!witness.is_null());
        let text = CStr::from_ptr(witness).to_string_lossy().into_owned();
        assert!(text.contains("x0*x1*x2*x3"), "{text}");
        cmideal_string_free(witness);

        // positive verdict writes a null witness
        let mut none: *mut std::ffi::c_char = ptr::null_mut();
        let mut ones2: *mut CmidealWeights = ptr::null_mut();
        assert_eq!(cmideal_weights_ones(g, &mut ones2), CMIDEAL_OK);
        assert_eq!(cmideal_witness(g, ones2, 0, false, &mut none), CMIDEAL_OK);
        assert!(none.is_null());
        cmideal_weights_free(ones2);

        let mut unmixed = false;
        let mut dim = 0usize;
        assert_eq!(cmideal_unmixed_dim(g, w, &mut unmixed, &mut dim), CMIDEAL_OK);
        assert_eq!(dim, 4);

        cmideal_weights_free(w);
        cmideal_graph_free(g);
    }
}

#[test]
fn weights_validation_over_the_abi() {
    unsafe {
        let text = c("n 3\n0 1\n1 2\n");
        let mut g: *mut CmidealGraph = ptr::null_mut();
        assert_eq!(cmideal_graph_parse(text.as_ptr(), &mut g), CMIDEAL_OK);

        // wrong count
        let values = [1u32];
        let mut w: *mut CmidealWeights = ptr::null_mut();
        assert_eq!(
            cmideal_weights_build(g, values.as_ptr(), 1, &mut w),
            CMIDEAL_ERR_INVALID
        );

        // missing edge
        let wtext = c("0 1 2\n");
        assert_eq!(
            cmideal_weights_parse(g, wtext.as_ptr(), &mut w),
            CMIDEAL_ERR_PARSE
        );
        assert!(last_error().contains("no weight"), "{}", last_error());

        // non-prime characteristic
        let values = [1u32, 1];
        assert_eq!(
            cmideal_weights_build(g, values.as_ptr(), 2, &mut w),
            CMIDEAL_OK
        );
        let mut report = CmidealReport::default();
        assert_eq!(cmideal_check(g, w, 6, false, &mut report), CMIDEAL_ERR_INVALID);
        assert!(last_error().contains("not prime"), "{}", last_error());

        cmideal_weights_free(w);
        cmideal_graph_free(g);
    }
}

#[test]
fn version_is_a_c_string() {
    unsafe {
        let v = CStr::from_ptr(cmideal_version()).to_string_lossy().into_owned();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
    }
}
