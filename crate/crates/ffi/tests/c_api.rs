use std::ffi::{CStr, CString};
use std::ptr;

use rainbow_ffi::*;

fn graph(text: &str) -> *mut RvcGraph {
    let text = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { rvc_graph_parse(text.as_ptr(), &mut g) }, RvcStatus::Ok);
    g
}

fn last_error() -> String {
    let p = rvc_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn parse_solve_and_free() {
    let g = graph("# P4\n4 3\n0 1\n1 2\n2 3\n");
    unsafe {
        assert_eq!(rvc_graph_order(g), 4);
        assert_eq!(rvc_graph_edge_count(g), 3);
        let mut d = 0;
        assert_eq!(rvc_graph_diameter(g, &mut d), RvcStatus::Ok);
        assert_eq!(d, 3);

        let mut r = RvcSolveResult::default();
        let mut w = ptr::null_mut();
        assert_eq!(rvc_solve(g, RvcMode::Srvc, 0, 0, &mut r, &mut w), RvcStatus::Ok);
        assert_eq!(r.value, 2);
        assert!(r.exact);
        assert!(!w.is_null());
        assert_eq!(rvc_coloring_len(w), 4);

        let mut check = RvcCheckResult::default();
        assert_eq!(rvc_check(g, w, RvcMode::Srvc, &mut check), RvcStatus::Ok);
        assert!(check.valid);
        assert_eq!(check.pairs_checked, 6);

        rvc_coloring_free(w);
        rvc_graph_free(g);
    }
}

#[test]
fn check_reports_failing_pair() {
    let g = graph("4 3\n0 1\n1 2\n2 3\n");
    let colors = [1u32, 1, 1, 1];
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(rvc_coloring_new(colors.as_ptr(), 4, 1, &mut c), RvcStatus::Ok);
        let mut color = 0;
        assert_eq!(rvc_coloring_get(c, 2, &mut color), RvcStatus::Ok);
        assert_eq!(color, 1);
        assert_eq!(rvc_coloring_get(c, 9, &mut color), RvcStatus::InvalidArgument);

        let mut r = RvcCheckResult::default();
        assert_eq!(rvc_check(g, c, RvcMode::Rvc, &mut r), RvcStatus::Ok);
        assert!(!r.valid);
        assert_eq!((r.failing_u, r.failing_v), (0, 3));
        rvc_coloring_free(c);
        rvc_graph_free(g);
    }
}

#[test]
fn families_and_constructions() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(rvc_graph_family(RvcFamily::Wheel2, 9, 0, &mut g), RvcStatus::Ok);
        assert_eq!(rvc_graph_order(g), 19);

        let mut r = RvcSolveResult::default();
        assert_eq!(rvc_solve(g, RvcMode::Srvc, 0, 0, &mut r, ptr::null_mut()), RvcStatus::Ok);
        assert_eq!((r.value, r.exact), (3, true));

        let mut c = ptr::null_mut();
        assert_eq!(rvc_paper_coloring(g, RvcColoringKind::Wheel2Rvc, 9, 0, &mut c), RvcStatus::Ok);
        assert_eq!(rvc_coloring_palette_size(c), 3);
        let mut check = RvcCheckResult::default();
        assert_eq!(rvc_check(g, c, RvcMode::Rvc, &mut check), RvcStatus::Ok);
        assert!(check.valid);
        rvc_coloring_free(c);

        let mut c = ptr::null_mut();
        assert_eq!(
            rvc_paper_coloring(g, RvcColoringKind::Wheel2Rvc, 8, 0, &mut c),
            RvcStatus::InvalidArgument
        );
        assert!(c.is_null());
        rvc_graph_free(g);

        let mut glued = ptr::null_mut();
        assert_eq!(rvc_graph_family(RvcFamily::Glued, 5, 6, &mut glued), RvcStatus::Ok);
        assert_eq!((rvc_graph_order(glued), rvc_graph_edge_count(glued)), (34, 63));
        rvc_graph_free(glued);

        assert_eq!(rvc_graph_family(RvcFamily::Wheel2, 2, 0, &mut g), RvcStatus::InvalidArgument);
    }
}

#[test]
fn budget_exhaustion_is_not_an_error() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(rvc_graph_family(RvcFamily::Glued, 5, 6, &mut g), RvcStatus::Ok);
        let mut r = RvcSolveResult::default();
        let mut w = ptr::null_mut();
        assert_eq!(rvc_solve(g, RvcMode::Rvc, 1000, 0, &mut r, &mut w), RvcStatus::Ok);
        assert!(!r.exact);
        assert!(w.is_null());
        rvc_graph_free(g);
    }
}

#[test]
fn errors_set_a_message() {
    let bad = CString::new("3 2\n0 1\n").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { rvc_graph_parse(bad.as_ptr(), &mut g) }, RvcStatus::Parse);
    assert!(g.is_null());
    assert!(!last_error().is_empty());

    assert_eq!(unsafe { rvc_graph_parse(ptr::null(), &mut g) }, RvcStatus::NullPointer);

    let disconnected = graph("4 2\n0 1\n2 3\n");
    let mut d = 0;
    assert_eq!(unsafe { rvc_graph_diameter(disconnected, &mut d) }, RvcStatus::Disconnected);
    let mut r = RvcSolveResult::default();
    assert_eq!(
        unsafe { rvc_solve(disconnected, RvcMode::Rvc, 0, 0, &mut r, ptr::null_mut()) },
        RvcStatus::Disconnected
    );
    unsafe { rvc_graph_free(disconnected) };

    let mut c = ptr::null_mut();
    let colors = [1u32, 3];
    assert_eq!(
        unsafe { rvc_coloring_new(colors.as_ptr(), 2, 2, &mut c) },
        RvcStatus::InvalidArgument
    );
}

#[test]
fn edge_list_round_trip() {
    let edges = [0usize, 1, 1, 2, 0, 2, 2, 3];
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(rvc_graph_from_edges(4, edges.as_ptr(), 4, &mut g), RvcStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(rvc_graph_to_edge_list(g, &mut text), RvcStatus::Ok);
        let owned = CStr::from_ptr(text).to_str().unwrap().to_owned();
        rvc_string_free(text);
        assert_eq!(owned, "4 4\n0 1\n0 2\n1 2\n2 3\n");

        let h = graph(&owned);
        assert_eq!(rvc_graph_edge_count(h), 4);
        rvc_graph_free(h);
        rvc_graph_free(g);
    }
}

#[test]
fn coloring_text_parses() {
    let text = CString::new("3 2\n2 2\n0 1\n1 1\n").unwrap();
    let mut c = ptr::null_mut();
    unsafe {
        assert_eq!(rvc_coloring_parse(text.as_ptr(), &mut c), RvcStatus::Ok);
        let mut color = 0;
        assert_eq!(rvc_coloring_get(c, 2, &mut color), RvcStatus::Ok);
        assert_eq!(color, 2);
        rvc_coloring_free(c);
    }
}

#[test]
fn header_declares_the_api() {
    let header = include_str!("../include/rainbow.h");
    for name in [
        "rvc_graph_parse",
        "rvc_graph_family",
        "rvc_graph_free",
        "rvc_coloring_new",
        "rvc_check",
        "rvc_solve",
        "rvc_paper_coloring",
        "rvc_last_error_message",
        "RVC_STATUS_OK",
        "typedef struct RvcGraph RvcGraph",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
