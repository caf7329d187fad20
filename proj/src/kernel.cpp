#include "polyharm/kernel.hpp"

namespace polyharm {

Poly2 kernel_poly(const StepModel& model) {
  Poly2 k = -Poly2::monomial(1, 1, 1);
  for (std::size_t s = 0; s < model.steps().size(); ++s) {
    const Step& st = model.steps()[s];
    k += Poly2::monomial(model.weights()[s], 1 - st.dx, 1 - st.dy);
  }
  return k;
}

KernelData kernel_data(const StepModel& model) {
  KernelData kd;
  kd.model = model.name();
  kd.kernel = kernel_poly(model);
  std::vector<Poly1> c = kd.kernel.coeffs_in_x();
  c.resize(3);
  kd.gamtilde = c[0];
  kd.betilde = c[1];
  kd.altilde = c[2];
  kd.deltilde = kd.betilde * kd.betilde - Rational(4) * kd.altilde * kd.gamtilde;
  if (kd.deltilde.is_zero()) throw DomainError("kernel discriminant vanishes for model '" + model.name() + "'");
  return kd;
}

Branches branches_x(const KernelData& kd) {
  if (kd.altilde.is_zero()) throw DomainError("degenerate model '" + kd.model + "': kernel has no x^2 term");
  const RatFun1 inv2a(Poly1(1), Rational(2) * kd.altilde);
  const RatFun1 a = -RatFun1(kd.betilde) * inv2a;
  return {QuadExtFun(a, inv2a, kd.deltilde), QuadExtFun(a, -inv2a, kd.deltilde)};
}

QuadExtFun kernel_at(const KernelData& kd, const QuadExtFun& u) {
  const std::vector<Poly1> c = kd.kernel.coeffs_in_x();
  QuadExtFun acc = QuadExtFun::rational(RatFun1(), kd.deltilde);
  for (std::size_t k = c.size(); k-- > 0;) {
    acc *= u;
    acc += QuadExtFun::rational(RatFun1(c[k]), kd.deltilde);
  }
  return acc;
}

RatFun1 omega(const StepModel& model) {
  const Poly1 t = Poly1::variable();
  const Poly1 one_minus = Poly1(1) - t;
  if (model.name() == "simple") return RatFun1(t, one_minus.pow(2));
  if (model.name() == "tandem") return RatFun1(t.pow(2), one_minus.pow(3));
  throw DomainError("no conformal map known for model '" + model.name() + "'");
}

OmegaCheck verify_omega_invariance(const StepModel& model) { return verify_omega_invariance(model, omega(model)); }

OmegaCheck verify_omega_invariance(const StepModel& model, const RatFun1& w) {
  const KernelData kd = kernel_data(model);
  const Branches br = branches_x(kd);
  OmegaCheck out;
  const QuadExtFun wp = compose(w, br.plus);
  out.invariant = wp.is_rational();
  if (out.invariant) out.value = wp.a();
  if (model.name() == "simple") out.negates = out.invariant && wp.a() == -w;
  return out;
}

}  // namespace polyharm
