//! Every example must keep running against the current API.

macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(coefficients, "coefficients.rs");
example!(entropy_curve, "entropy_curve.rs");
example!(moments, "moments.rs");
example!(correlation, "correlation.rs");
example!(verify_suite, "verify_suite.rs");
example!(generating_function, "generating_function.rs");
example!(hypergeometric, "hypergeometric.rs");

#[test]
fn examples_run() {
    coefficients::run(3, 2).unwrap();
    coefficients::run(2, 2).unwrap();
    entropy_curve::run(6).unwrap();
    moments::run(4, 3).unwrap();
    correlation::run(2, 1, 1.5).unwrap();
    verify_suite::run("eq6,eq23", 4).unwrap();
    generating_function::run().unwrap();
    hypergeometric::run(5).unwrap();
}
