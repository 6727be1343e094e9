use spectral_core::domain::{DomainSpec, IntervalDomain, make_named_potential, AnyPotential};
use spectral_core::perturbation::trace_flow;

fn main() {
    let d = IntervalDomain::new(0.0, std::f64::consts::PI).unwrap();
    let v = match make_named_potential("exp", &[1.0, 1.0], &DomainSpec::Interval(d)).unwrap() {
        AnyPotential::OneD(p) => p, _ => unreachable!() };
    for range in [0.4, 0.2, 0.1] {
        let flow = trace_flow(&v, d, 3, -range, range, 9).unwrap();
        println!("range +-{range}:");
        for rec in &flow.records {
            println!("  tau={:+.3}: g = {:+.4} {:+.4} {:+.4}", rec.tau, rec.gap[0], rec.gap[1], rec.gap[2]);
        }
    }
}
