macro_rules! example {
    ($module:ident, $test:ident, $file:literal) => {
        #[allow(dead_code)]
        #[path = $file]
        mod $module;

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(
    scalar_arithmetic,
    scalar_arithmetic_runs,
    "../examples/scalar_arithmetic.rs"
);
example!(
    decomposed_matrices,
    decomposed_matrices_runs,
    "../examples/decomposed_matrices.rs"
);
example!(
    nilpotency_index,
    nilpotency_index_runs,
    "../examples/nilpotency_index.rs"
);
example!(
    idempotent_sections,
    idempotent_sections_runs,
    "../examples/idempotent_sections.rs"
);
example!(
    operator_basis_change,
    operator_basis_change_runs,
    "../examples/operator_basis_change.rs"
);
example!(
    certified_generation,
    certified_generation_runs,
    "../examples/certified_generation.rs"
);
example!(float_mode, float_mode_runs, "../examples/float_mode.rs");
example!(verify_theorems, verify_theorems_runs, "../examples/verify_theorems.rs");
example!(file_format, file_format_runs, "../examples/file_format.rs");
