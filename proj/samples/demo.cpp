// Library tour: norms, a modulus of smoothness, best approximation and one registered check.

#include <cmath>
#include <cstdio>

#include "jackson/experiment.hpp"

int main() {
  using namespace jackson;
  const std::size_t n = 512;
  const auto f = discretize([](double x) { return std::abs(std::sin(x)); }, n);

  const auto phi = YoungFunction::zygmund(2, 0.5);
  std::printf("|sin x|: L2 %.6f  Luxemburg %.6f  Orlicz %.6f\n", lp_norm(f, 2), luxemburg_norm(f, phi), orlicz_norm(f, phi));

  const auto B = NormSpec::lp(2);
  for (double t : {0.5, 0.25, 0.125})
    std::printf("omega^2(t=%.3f) = %.6e\n", t, ops::modulus(f, 2, t, B));

  const auto rep = lab::run_check("jackson-1.4", json{{"f", "abs_sin"}, {"r", 2}, {"N", 512}}, 1);
  std::printf("%s: %s, constant %s, spread %s\n", rep.id.c_str(), rep.pass ? "pass" : "fail", lab::fmt(rep.constant).c_str(),
              lab::fmt(rep.spread).c_str());
  return rep.pass ? 0 : 1;
}
