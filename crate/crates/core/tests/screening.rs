use std::sync::Arc;

use hgs_core::catalog::Catalog;
use hgs_core::count::{e_byott, e_fpf_inhol};
use hgs_core::holomorph::EnumOptions;
use hgs_core::screen::{screen_candidate, verify_lifting_certificate, Certificate, Tri};
use hgs_core::{are_isomorphic, Limits};

/// Whenever N is excluded, every counting route that runs must return 0.
#[test]
fn exclusion_implies_zero_for_s5() {
    let cat = Catalog::new(Limits::default());
    let g = cat.resolve("S5").unwrap();
    let opts = EnumOptions {
        verify_pairs: false,
        ..EnumOptions::default()
    };
    let mut excluded = 0;
    for label in ["C120", "S4xC5", "SL(2,5)", "AxCp(A5,2)", "S5", "D60", "C60xC2", "A4xC10", "S3xD10"] {
        let n = cat.resolve(label).unwrap();
        let rep = screen_candidate(&g, &n, &Limits::default()).unwrap();
        let e = e_byott(&g, &n, &opts).unwrap().value;
        if rep.excluded() {
            excluded += 1;
            assert_eq!(e, 0, "{label} excluded but e = {e}");
        } else {
            assert!(e > 0, "{label} allowed with e = 0");
        }
    }
    assert_eq!(excluded, 7);
}

#[test]
fn double_cover_of_a6() {
    let cat = Catalog::new(Limits::default());
    let n = cat.resolve("SL(2,9)").unwrap();
    let g = cat.resolve("PGL(2,9)").unwrap();
    let rep = screen_candidate(&g, &n, &Limits::default()).unwrap();
    assert_eq!(rep.cond1.status, Tri::Holds);
    let z = n.center();
    assert_eq!(z.order(), 2);
    let (q, _) = n.quotient(&z).unwrap();
    assert!(are_isomorphic(&Arc::new(q), &cat.resolve("A6").unwrap()).is_some());
    match rep.certificate {
        Some(Certificate::LiftingFails { pairs }) => {
            assert!(verify_lifting_certificate(&n, 2, &pairs));
            let mut bad = pairs.clone();
            bad.pop();
            assert!(!verify_lifting_certificate(&n, 2, &bad));
        }
        other => panic!("unexpected certificate {other:?}"),
    }
}

#[test]
fn fpf_route_refuses_other_shapes() {
    let cat = Catalog::new(Limits::default());
    let g = cat.resolve("S5").unwrap();
    assert!(e_fpf_inhol(&g, &cat.resolve("C120").unwrap(), &Limits::default()).is_err());
    assert!(e_fpf_inhol(&g, &cat.resolve("S5").unwrap(), &Limits::default()).is_err());
}
