// Check suites over groups and constructions, and the run configuration used
// by the command-line driver.
#pragma once

#include "qglab/cayley_json.hpp"
#include "qglab/dualside.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>

namespace qglab {

namespace anchors {
inline constexpr const char* lemma32 = "Lemma 3.2";
inline constexpr const char* lemma34 = "Lemma 3.4";
inline constexpr const char* thm33 = "Theorem 3.3";
inline constexpr const char* cor36 = "Corollary 3.6";
inline constexpr const char* remark36 = "Remark following Corollary 3.6";
inline constexpr const char* cor41 = "Corollary 4.1";
inline constexpr const char* lemma42 = "Lemma 4.2";
inline constexpr const char* lemma43 = "Lemma 4.3";
inline constexpr const char* thm44 = "Theorem 4.4";
}  // namespace anchors

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"structure", "lemma32", "lemma42", "lemma43", "theta",
                                              "thm33",     "obad",    "dual",    "thm44"};
  return names;
}

inline constexpr std::size_t kDefaultMaxDim = 1728;
inline constexpr std::size_t kMaxTwoLegOrder = 24;
inline constexpr double kRangeTolerance = 1e-9;

struct RunConfig {
  std::vector<GroupTable> groups;
  std::vector<Construction> constructions{Construction::function_algebra, Construction::group_algebra};
  std::vector<std::string> suites;
  std::vector<double> epsilons{0.01, 0.1, 0.3};
  std::uint64_t seed = 0;
  double tolerance = tol::identity;
  std::size_t max_dim = kDefaultMaxDim;
  int structure_draws = 20;
  int lemma_draws = 50;
  int theta_draws = 20;
  int cert_draws = 100;
};

/// Raised for invalid configuration values; the driver maps it to exit code 2.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

/// "all", a builtin name, a path to a JSON table, or a comma list of those.
inline std::vector<GroupTable> resolve_groups(const std::string& list) {
  std::vector<GroupTable> out;
  for (const auto& token : split_csv(list)) {
    if (token == "all") {
      for (const auto& name : builtin_group_names()) out.push_back(*builtin_group(name));
    } else if (auto g = builtin_group(token)) {
      out.push_back(*g);
    } else if (std::filesystem::exists(token)) {
      out.push_back(load_cayley(token));
    } else {
      throw ConfigError("unknown group '" + token + "' (not a builtin and no such file)");
    }
  }
  if (out.empty()) throw ConfigError("no group given");
  return out;
}

inline std::vector<Construction> parse_constructions(const std::string& s) {
  if (s == "function-algebra") return {Construction::function_algebra};
  if (s == "group-algebra") return {Construction::group_algebra};
  if (s == "both") return {Construction::function_algebra, Construction::group_algebra};
  throw ConfigError("unknown construction '" + s + "'");
}

inline std::vector<std::string> parse_suites(const std::string& s) {
  std::vector<std::string> out;
  for (const auto& t : split_csv(s)) {
    if (t == "all") return suite_names();
    if (std::find(suite_names().begin(), suite_names().end(), t) == suite_names().end())
      throw ConfigError("unknown suite '" + t + "'");
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
  return out;
}

inline std::vector<double> parse_epsilons(const std::string& s) {
  std::vector<double> out;
  for (const auto& t : split_csv(s)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || !(v > 0.0 && v <= 1.0)) throw ConfigError("epsilon '" + t + "' must be in (0, 1]");
    out.push_back(v);
  }
  return out;
}

/// QGLAB_MAX_DIM if set to a positive integer, otherwise the default cap.
inline std::size_t max_dim_from_env() {
  const char* v = std::getenv("QGLAB_MAX_DIM");
  if (v == nullptr || *v == '\0') return kDefaultMaxDim;
  char* end = nullptr;
  const auto x = std::strtoull(v, &end, 10);
  if (*end != '\0' || x == 0) throw ConfigError(std::string("QGLAB_MAX_DIM='") + v + "' is not a positive integer");
  return static_cast<std::size_t>(x);
}

namespace detail {

inline std::string t_label(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "t=%g", t);
  return buf;
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Independent stream per (seed, group, construction, suite).
inline Rng suite_rng(std::uint64_t seed, const std::string& key) {
  const auto h = fnv1a(key);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return Rng(seq);
}

inline TensorVector random_state_vector(std::size_t n, Rng& rng) { return TensorVector(random_unit_vector(n, rng)); }

inline ComplexMatrix random_unit_lambda(const FiniteQuantumGroup& q, Rng& rng) {
  ComplexMatrix lam = random_tensor_element(q.algebra_basis, q.algebra_basis, rng);
  return lam / operator_norm(lam);
}

inline ComplexMatrix random_unit_element(const FiniteQuantumGroup& q, Rng& rng) {
  ComplexMatrix x = random_element(q.algebra_basis, rng);
  return x / operator_norm(x);
}

/// Vector states at the standard basis vectors.
inline std::vector<Functional> basis_states(const FiniteQuantumGroup& q) {
  std::vector<Functional> out;
  for (std::size_t i = 0; i < q.dim; ++i) {
    ComplexVector e = ComplexVector::Zero(static_cast<Eigen::Index>(q.dim));
    e(static_cast<Eigen::Index>(i)) = 1.0;
    out.push_back(vector_state(TensorVector(e), q.label()));
  }
  return out;
}

inline std::pair<NetVector, NetVector> nets_at(const std::pair<NetVector, NetVector>& exact, double t, Rng& rng) {
  if (t == 0.0) return exact;
  return {perturbed_net(exact.first, t, rng), perturbed_net(exact.second, t, rng)};
}

inline std::vector<double> with_zero(const std::vector<double>& eps) {
  std::vector<double> out{0.0};
  out.insert(out.end(), eps.begin(), eps.end());
  return out;
}

/// Tracks the draw with the largest value − bound.
struct WorstCert {
  std::optional<CertRecord> worst;
  double epsilon = 0.0;
  void add(const CertRecord& c) {
    epsilon = std::max(epsilon, c.epsilon);
    if (!worst || c.margin() > worst->margin()) worst = c;
  }
  CheckRecord record(const std::string& suite, const std::string& check, const char* anchor) const {
    return CheckRecord::bound_check(suite, check, anchor, worst->value, worst->bound, worst->slack);
  }
};

}  // namespace detail

inline CheckReport run_lemma32(const PreparedGroup& g, Rng& rng, int draws, double tolerance) {
  const auto r = pentagon_commutant_identities(g, rng, draws);
  CheckReport rep;
  rep.add(CheckRecord::residual_check("lemma32", "W12 W'23* = W'23* W13 W12", anchors::lemma32, r[0], tolerance));
  rep.add(CheckRecord::residual_check("lemma32", "W23 W'12* = W'12* W'13* W23", anchors::lemma32, r[1], tolerance));
  rep.add(CheckRecord::residual_check("lemma32", "W13* W23* = (Jhat⊗Jhat⊗J) W13 W23 (Jhat⊗Jhat⊗J)",
                                      anchors::lemma32, r[2], tolerance));
  return rep;
}

inline CheckReport run_lemma42(const PreparedGroup& g, Rng& rng, int draws, double tolerance) {
  const auto [identity, commutation] = opposite_commutant_identity(g, rng, draws);
  CheckReport rep;
  rep.add(CheckRecord::residual_check("lemma42", "W'op13* W'13 W'op23* W23 = W'12* W'op23* W'23 W'12 W'23* W23",
                                      anchors::lemma42, identity, tolerance));
  rep.add(CheckRecord::residual_check("lemma42", "[W'13, W'op23*] = 0", anchors::lemma42, commutation, tolerance));
  return rep;
}

inline CheckReport run_lemma43(const PreparedGroup& g, Rng& rng, int draws, double tolerance) {
  const auto [identity, commutation] = bai_leg_identity(g, rng, draws);
  CheckReport rep;
  rep.add(CheckRecord::residual_check("lemma43", "W23 W12 W'op12* = W12 W'op12* W13 W23 W'13*", anchors::lemma43,
                                      identity, tolerance));
  rep.add(CheckRecord::residual_check("lemma43", "[W12, W'op12*] = 0", anchors::lemma43, commutation, tolerance));
  return rep;
}

inline CheckReport run_theta(const PreparedGroup& g, Rng& rng, int draws, double tolerance) {
  const auto& q = g.q;
  const auto n = static_cast<Eigen::Index>(q.dim);
  const ComplexMatrix one = ComplexMatrix::Identity(n, n);
  const ComplexMatrix one2 = ComplexMatrix::Identity(n * n, n * n);
  double unital = 0.0, range = 0.0, min_eig = 0.0;
  double st_xi = 0.0, st_jj = 0.0, st1_xi = 0.0, st1_jj = 0.0;
  bool first = true;
  for (int d = 0; d < draws; ++d) {
    const auto xi = detail::random_state_vector(q.dim, rng);
    unital = std::max(unital, operator_norm(theta(g, xi, one2) - one));
    const double e = min_eigenvalue(theta_choi(g, xi));
    min_eig = first ? e : std::min(min_eig, e);
    first = false;
    range = std::max(range, membership_in_algebra(q, theta(g, xi, detail::random_unit_lambda(q, rng))));
    const ComplexMatrix x = detail::random_unit_element(q, rng);
    const ComplexMatrix y = detail::random_unit_element(q, rng);
    const auto jj = j_jhat(g, xi);
    const ComplexMatrix txy = theta(g, xi, kron(x, y));
    const ComplexMatrix t1y = theta(g, xi, kron(one, y));
    st_xi = std::max(st_xi, operator_norm(txy - theta_simple_tensor_form(g, xi, x, y)));
    st_jj = std::max(st_jj, operator_norm(txy - theta_simple_tensor_form(g, jj, x, y)));
    st1_xi = std::max(st1_xi, operator_norm(t1y - theta_simple_tensor_form(g, xi, one, y)));
    st1_jj = std::max(st1_jj, operator_norm(t1y - theta_simple_tensor_form(g, jj, one, y)));
  }
  CheckReport rep;
  rep.add(CheckRecord::residual_check("theta", "theta(1) = 1", anchors::lemma34, unital, tolerance));
  rep.add(CheckRecord::floor_check("theta", "Choi matrix min eigenvalue", anchors::lemma34, min_eig, tol::cp_slack));
  rep.add(CheckRecord::residual_check("theta", "theta(M ⊗ M) in M", anchors::lemma34, range, kRangeTolerance));
  rep.add(CheckRecord::observation("theta", "simple-tensor formula, omega_xi", anchors::lemma34, st_xi));
  rep.add(CheckRecord::observation("theta", "simple-tensor formula, omega_(J Jhat xi)", anchors::lemma34, st_jj));
  rep.add(CheckRecord::observation("theta", "simple-tensor formula X = 1, omega_xi", anchors::lemma34, st1_xi));
  rep.add(CheckRecord::observation("theta", "simple-tensor formula X = 1, omega_(J Jhat xi)", anchors::lemma34,
                                   st1_jj));
  return rep;
}

inline CheckReport run_thm33(const PreparedGroup& g, Rng& rng, const std::vector<double>& epsilons, int draws) {
  const auto exact = exact_nets(g.q);
  CheckReport rep;
  for (double t : detail::with_zero(epsilons)) {
    const auto [xi, eta] = detail::nets_at(exact, t, rng);
    detail::WorstCert worst;
    for (int d = 0; d < draws; ++d) {
      const auto zeta = detail::random_state_vector(g.q.dim, rng);
      worst.add(certify_commutator_bound(g, zeta, xi, eta, detail::random_unit_lambda(g.q, rng)));
    }
    const auto label = detail::t_label(t);
    rep.add(worst.record("thm33", "commutator bound 3 eps |Lambda| " + label, anchors::thm33));
    rep.add(CheckRecord::observation("thm33", "measured eps " + label, anchors::thm33, worst.epsilon));
  }
  return rep;
}

inline CheckReport run_obad(const DualContext& ctx, Rng& rng, const std::vector<double>& epsilons,
                            double tolerance) {
  const auto& g = ctx.g;
  const auto states = detail::basis_states(g.q);
  const auto exact = exact_nets(g.q);
  CheckReport rep;
  for (double t : detail::with_zero(epsilons)) {
    const auto nets = detail::nets_at(exact, t, rng);
    const auto d = build_diagonal(g, nets.first, nets.second);
    double r1 = 0.0, r2 = 0.0;
    for (const auto& a : states) {
      const auto r = obad_residuals(g, d, a);
      r1 = std::max(r1, r.commutator);
      r2 = std::max(r2, r.identity);
    }
    const auto zeta = detail::random_state_vector(g.q.dim, rng);
    const double remark = quasicentral_bai_remark_check(ctx.ghat, zeta, nets.first.vector);
    const double c1 = c1_residual(g, nets.first.vector, zeta);
    const double c2 = c2_residual(g, nets.second.vector, zeta);
    const auto label = detail::t_label(t);
    if (t == 0.0) {
      rep.add(CheckRecord::residual_check("obad", "OBAD1 exact diagonal", anchors::cor36, r1, tolerance));
      rep.add(CheckRecord::residual_check("obad", "OBAD2 exact diagonal", anchors::cor36, r2, tolerance));
      rep.add(CheckRecord::residual_check("obad", "quasi-central b.a.i. of the dual, exact nets", anchors::remark36,
                                          remark, kRangeTolerance));
      rep.add(CheckRecord::residual_check("obad", "diagonal is a state", anchors::cor36,
                                          std::abs(d.bifunctional(ComplexMatrix::Identity(
                                                       d.bifunctional.rho2.rows(), d.bifunctional.rho2.cols())) -
                                                   1.0),
                                          tolerance));
    } else {
      rep.add(CheckRecord::observation("obad", "OBAD1 " + label, anchors::cor36, r1));
      rep.add(CheckRecord::observation("obad", "OBAD2 " + label, anchors::cor36, r2));
      rep.add(CheckRecord::observation("obad", "quasi-central b.a.i. of the dual " + label, anchors::remark36, remark));
    }
    rep.add(CheckRecord::observation("obad", "W* - W'* on xi ⊗ zeta " + label, anchors::cor36, c1));
    rep.add(CheckRecord::observation("obad", "W* - W'* on zeta ⊗ eta " + label, anchors::cor36, c2));
  }
  return rep;
}

inline CheckReport run_dual(const DualContext& ctx, Rng& rng, const std::vector<double>& epsilons, int draws,
                            double tolerance) {
  const auto& g = ctx.g;
  CheckReport rep;
  rep.add(CheckRecord::residual_check("dual", "What' = (Wop)^", anchors::catalog, ctx.closure_residual(), tolerance));

  const auto exact = exact_nets(g.q);
  double f1 = 0.0, f2 = 0.0, c41 = 0.0, c42 = 0.0, c43 = 0.0, c44 = 0.0, sa_hat = 0.0, ca_hat = 0.0;
  for (int d = 0; d < draws; ++d) {
    const auto xi = detail::random_state_vector(g.q.dim, rng);
    const auto zeta = detail::random_state_vector(g.q.dim, rng);
    const auto [r1, r2] = flip_identity_check(ctx, xi, zeta);
    f1 = std::max(f1, r1);
    f2 = std::max(f2, r2);
    const auto c = dual_conditions_residuals(ctx, exact.first.vector, exact.second.vector, zeta);
    c41 = std::max(c41, c[0]);
    c42 = std::max(c42, c[1]);
    c43 = std::max(c43, c[2]);
    c44 = std::max(c44, c[3]);
    sa_hat = std::max(sa_hat, sa_residual(ctx.ghat, exact.second.vector, zeta));
    ca_hat = std::max(ca_hat, ca_residual(ctx.ghat, exact.first.vector, zeta));
  }
  rep.add(CheckRecord::residual_check("dual", "What* (xi ⊗ zeta) = σ W (zeta ⊗ xi)", anchors::cor41, f1, tolerance));
  rep.add(CheckRecord::residual_check("dual", "What'* (xi ⊗ zeta) = σ Wop (zeta ⊗ xi)", anchors::cor41, f2,
                                      tolerance));
  rep.add(CheckRecord::residual_check("dual", "W (zeta ⊗ xi) = zeta ⊗ xi, exact nets", anchors::cor41, c41, tolerance));
  rep.add(CheckRecord::residual_check("dual", "W (eta ⊗ zeta) = eta ⊗ zeta, exact nets", anchors::cor41, c42,
                                      tolerance));
  rep.add(CheckRecord::observation("dual", "W - Wop on zeta ⊗ eta, exact nets", anchors::cor41, c43));
  rep.add(CheckRecord::observation("dual", "W - Wop on xi ⊗ zeta, exact nets", anchors::cor41, c44));
  rep.add(CheckRecord::residual_check("dual", "eta is strongly amenable for the dual", anchors::cor41, sa_hat,
                                      tolerance));
  rep.add(CheckRecord::residual_check("dual", "xi is co-amenable for the dual", anchors::cor41, ca_hat, tolerance));

  const auto states = detail::basis_states(ctx.ghat.q);
  for (double t : detail::with_zero(epsilons)) {
    const auto nets = detail::nets_at(exact, t, rng);
    const auto d = build_dual_diagonal(ctx, nets.second, nets.first);
    double r1 = 0.0, r2 = 0.0;
    for (const auto& a : states) {
      const auto r = obad_residuals(ctx.ghat, d, a);
      r1 = std::max(r1, r.commutator);
      r2 = std::max(r2, r.identity);
    }
    if (t == 0.0) {
      rep.add(CheckRecord::residual_check("dual", "OBAD1 dual diagonal", anchors::cor41, r1, tolerance));
      rep.add(CheckRecord::residual_check("dual", "OBAD2 dual diagonal", anchors::cor41, r2, tolerance));
    } else {
      const auto label = detail::t_label(t);
      rep.add(CheckRecord::observation("dual", "OBAD1 dual diagonal " + label, anchors::cor41, r1));
      rep.add(CheckRecord::observation("dual", "OBAD2 dual diagonal " + label, anchors::cor41, r2));
    }
  }
  return rep;
}

inline CheckReport run_thm44(const PreparedGroup& g, Rng& rng, const std::vector<double>& epsilons, int lemma_draws,
                             int cert_draws, double tolerance) {
  const auto& q = g.q;
  const auto exact = exact_nets(q);
  const auto states = detail::basis_states(q);
  CheckReport rep;
  for (double t : detail::with_zero(epsilons)) {
    const auto label = detail::t_label(t);
    const auto [xi, eta] = detail::nets_at(exact, t, rng);
    double consistency = 0.0;
    for (int d = 0; d < lemma_draws; ++d) {
      const auto zeta = detail::random_state_vector(q.dim, rng);
      consistency = std::max(consistency, quasicentral_slice_consistency(g, xi.vector, eta.vector, zeta,
                                                                         random_element(q.algebra_basis, rng)));
    }
    detail::WorstCert bai, qc;
    for (int d = 0; d < cert_draws; ++d) {
      const auto zeta = detail::random_state_vector(q.dim, rng);
      bai.add(bai_residual_bound_check(g, xi.vector, eta.vector, zeta, detail::random_unit_element(q, rng)));
      qc.add(quasicentral_residual(g, xi.vector, eta.vector, zeta, detail::random_unit_lambda(q, rng)));
    }
    const auto u = build_quasicentral_identity(g, xi.vector, eta.vector);
    double defect = 0.0;
    for (const auto& a : states) defect = std::max(defect, g.norms.norm(convolve(q, u, a) - a));

    rep.add(CheckRecord::residual_check("thm44", "slice convention consistency " + label, anchors::thm44, consistency,
                                        tolerance));
    rep.add(bai.record("thm44", "b.a.i. bound " + label, anchors::thm44));
    rep.add(qc.record("thm44", "quasi-central bound " + label, anchors::thm44));
    rep.add(CheckRecord::residual_check("thm44", "u(1) = 1 " + label, anchors::thm44,
                                        std::abs(u(ComplexMatrix::Identity(u.rho.rows(), u.rho.cols())) - 1.0),
                                        tolerance));
    if (t == 0.0)
      rep.add(CheckRecord::residual_check("thm44", "u * a = a, exact nets", anchors::thm44, defect, tolerance));
    else
      rep.add(CheckRecord::observation("thm44", "u * a - a " + label, anchors::thm44, defect));
  }
  return rep;
}

/// Suites whose vectors live on three legs.
inline bool three_leg_suite(const std::string& suite) { return suite != "structure"; }

/// Throws CapExceeded if any selected (group, suite) pair exceeds the cap.
inline void check_dimension_cap(const RunConfig& cfg) {
  for (const auto& grp : cfg.groups) {
    const auto n = grp.order();
    const auto cube = n * n * n;
    for (const auto& s : cfg.suites) {
      const bool ok = three_leg_suite(s) ? cube <= cfg.max_dim : (n <= kMaxTwoLegOrder || cube <= cfg.max_dim);
      if (!ok)
        throw CapExceeded("group '" + grp.name() + "' of order " + std::to_string(n) + " exceeds the dimension cap " +
                          (three_leg_suite(s) ? std::to_string(cfg.max_dim) + " for three-leg suite '"
                                              : std::string("of order 24 for suite '")) +
                          s + "'");
    }
  }
}

inline CheckReport run_suites(const RunConfig& cfg) {
  check_dimension_cap(cfg);
  CheckReport report;
  report.seed = cfg.seed;
  auto selected = [&](const char* s) { return std::find(cfg.suites.begin(), cfg.suites.end(), s) != cfg.suites.end(); };
  for (const auto& grp : cfg.groups) {
    const auto fa = from_cayley_function_algebra(grp);
    for (const auto c : cfg.constructions) {
      const auto q = c == Construction::function_algebra ? fa : dual(fa);
      const auto key = [&](const std::string& suite) { return grp.name() + "|" + to_string(c) + "|" + suite; };
      CheckReport part;
      if (selected("structure")) {
        auto rng = detail::suite_rng(cfg.seed, key("structure"));
        part.append(verify_structure_identities(q, rng, cfg.structure_draws, cfg.tolerance));
      }
      const bool needs_group = std::any_of(cfg.suites.begin(), cfg.suites.end(),
                                           [](const std::string& s) { return s != "structure"; });
      if (needs_group) {
        const bool needs_dual = selected("dual") || selected("obad");
        std::optional<DualContext> ctx;
        std::optional<PreparedGroup> prepared;
        if (needs_dual) {
          ctx = make_dual_context(q);
        } else {
          prepared = prepare(q);
        }
        const PreparedGroup& g = needs_dual ? ctx->g : *prepared;
        for (const auto& s : cfg.suites) {
          if (s == "structure") continue;
          auto rng = detail::suite_rng(cfg.seed, key(s));
          if (s == "lemma32") part.append(run_lemma32(g, rng, cfg.lemma_draws, cfg.tolerance));
          else if (s == "lemma42") part.append(run_lemma42(g, rng, cfg.lemma_draws, cfg.tolerance));
          else if (s == "lemma43") part.append(run_lemma43(g, rng, cfg.lemma_draws, cfg.tolerance));
          else if (s == "theta") part.append(run_theta(g, rng, cfg.theta_draws, cfg.tolerance));
          else if (s == "thm33") part.append(run_thm33(g, rng, cfg.epsilons, cfg.cert_draws));
          else if (s == "obad") part.append(run_obad(*ctx, rng, cfg.epsilons, cfg.tolerance));
          else if (s == "dual") part.append(run_dual(*ctx, rng, cfg.epsilons, cfg.lemma_draws, cfg.tolerance));
          else if (s == "thm44")
            part.append(run_thm44(g, rng, cfg.epsilons, cfg.lemma_draws, cfg.cert_draws, cfg.tolerance));
        }
      }
      report.append(part.label(grp.name(), to_string(c)));
    }
  }
  report.sort();
  return report;
}

}  // namespace qglab
