use qshuffle::seminormal::AdmissibleQ;
use qshuffle::spectra::build_eigenbasis;
use qshuffle::tableaux::count_syt;
use qshuffle_bench::{q0, shapes};

#[test]
fn benchmark_inputs_are_valid() {
    for lam in shapes() {
        AdmissibleQ::new(q0(), lam.size()).unwrap();
        assert_eq!(
            build_eigenbasis(&lam, &q0()).unwrap().len(),
            count_syt(&lam)
        );
    }
}
