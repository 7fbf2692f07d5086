// Builds the diagonal ω_{W'*(ξ⊗η)} for a group given as a JSON Cayley table
// (or a builtin name) and prints its OBAD residuals at a few perturbations.
#include "qglab/qglab.hpp"

#include <cstdio>
#include <filesystem>

int main(int argc, char** argv) {
  const std::string source = argc > 1 ? argv[1] : "S3";
  const auto table = std::filesystem::exists(source) ? qglab::load_cayley(source) : *qglab::builtin_group(source);
  const auto g = qglab::prepare(qglab::from_cayley_function_algebra(table));
  const auto exact = qglab::exact_nets(g.q);
  qglab::Rng rng(1);

  std::printf("%-6s %-22s %-22s\n", "t", "OBAD1", "OBAD2");
  for (double t : {0.0, 0.01, 0.1, 0.3}) {
    const auto xi = t == 0.0 ? exact.first : qglab::perturbed_net(exact.first, t, rng);
    const auto eta = t == 0.0 ? exact.second : qglab::perturbed_net(exact.second, t, rng);
    const auto d = qglab::build_diagonal(g, xi, eta);
    double r1 = 0.0, r2 = 0.0;
    for (std::size_t i = 0; i < g.q.dim; ++i) {
      qglab::ComplexVector e = qglab::ComplexVector::Zero(static_cast<Eigen::Index>(g.q.dim));
      e(static_cast<Eigen::Index>(i)) = 1.0;
      const auto r = qglab::obad_residuals(g, d, qglab::vector_state(qglab::TensorVector(e), g.q.label()));
      r1 = std::max(r1, r.commutator);
      r2 = std::max(r2, r.identity);
    }
    std::printf("%-6g %-22.6e %-22.6e\n", t, r1, r2);
  }
}
