#include "depmeas/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "depmeas/classical.hpp"
#include "depmeas/dependence.hpp"
#include "depmeas/fixtures.hpp"
#include "depmeas/hellinger.hpp"
#include "depmeas/rng.hpp"

namespace depmeas {

namespace {

using nlohmann::json;

json to_json_array(std::span<const double> v) {
  return json(std::vector<double>(v.begin(), v.end()));
}

// Bhattacharyya-coefficient route to the Hellinger distance, kept as an
// algebraically different path from the production sum-of-squared-differences
// form; the recomputation claims lean on this independence.
double hellinger_via_bc(std::span<const double> p, std::span<const double> q) {
  double bc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) bc += std::sqrt(p[i] * q[i]);
  return std::sqrt(std::max(0.0, 1.0 - bc));
}

double entropy(std::span<const double> p) {
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log(v);
  return h;
}

// Uniform table draw with near-degenerate marginals rejected, so the result
// always satisfies the joint-table invariants.
std::vector<std::vector<double>> sample_table_probs(SplitMix64& g, std::size_t rows,
                                                    std::size_t cols) {
  constexpr double kMarginFloor = 1e-6;
  for (;;) {
    const std::vector<double> flat = sample_simplex(g, rows * cols);
    bool ok = true;
    for (std::size_t i = 0; i < rows && ok; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < cols; ++j) s += flat[i * cols + j];
      ok = s >= kMarginFloor;
    }
    for (std::size_t j = 0; j < cols && ok; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < rows; ++i) s += flat[i * cols + j];
      ok = s >= kMarginFloor;
    }
    if (!ok) continue;
    std::vector<std::vector<double>> nested(rows, std::vector<double>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) nested[i][j] = flat[i * cols + j];
    return nested;
  }
}

json table_json(const std::vector<std::vector<double>>& probs) {
  json rows = json::array();
  for (const auto& r : probs) rows.push_back(r);
  return rows;
}

}  // namespace

OracleReport verify_prop1(std::span<const double> p, Prop1Mode mode,
                          std::int64_t trials, std::uint64_t seed, ExecMode exec) {
  const MaxDistanced md = max_distanced(p);
  OracleReport report;
  report.details["closed_form"] = md.distance;
  report.details["maximizer"] = md.index;
  report.details["states"] = p.size();

  if (mode == Prop1Mode::kVertexEnumeration) {
    report.claim = "prop1-vertex";
    report.trials = static_cast<std::int64_t>(p.size());
    // Distances to every simplex vertex through the production metric; the
    // closed form must reproduce the enumerated maximum.
    std::vector<double> vertex(p.size(), 0.0);
    double best = -1.0;
    std::size_t best_index = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      vertex.assign(p.size(), 0.0);
      vertex[k] = 1.0;
      const double d = hellinger(p, vertex);
      if (d > best) {
        best = d;
        best_index = k;
      }
    }
    report.worst_margin = std::abs(best - md.distance);
    report.details["enumerated_max"] = best;
    report.details["enumerated_maximizer"] = best_index;
    report.pass = report.worst_margin <= 1e-12 && best_index == md.index;
    if (!report.pass)
      report.witness = json{{"enumerated_maximizer", best_index},
                            {"enumerated_max", best},
                            {"p", to_json_array(p)}};
    return report;
  }

  report.claim = "prop1-random";
  report.trials = trials;
  if (trials < 1) throw std::invalid_argument("verify_prop1: trials must be positive");
  const std::vector<double> ref(p.begin(), p.end());

  // margin[t] = closed form - sampled distance; the claim is that no sample
  // lands beyond the closed form.
  std::vector<double> margin(static_cast<std::size_t>(trials), 0.0);
  for_each_index(margin.size(), exec, [&](std::size_t t) {
    SplitMix64 g = substream(seed, t);
    const std::vector<double> psi = sample_simplex(g, ref.size());
    margin[t] = md.distance - hellinger(ref, psi);
  });

  double worst = margin[0];
  std::size_t worst_trial = 0;
  for (std::size_t t = 1; t < margin.size(); ++t)
    if (margin[t] < worst) {
      worst = margin[t];
      worst_trial = t;
    }
  report.worst_margin = worst;
  report.details["max_sampled"] = md.distance - worst;
  report.details["seed"] = seed;
  report.pass = worst >= -1e-12;
  if (!report.pass) {
    SplitMix64 g = substream(seed, worst_trial);
    const std::vector<double> psi = sample_simplex(g, ref.size());
    report.witness = json{{"trial", worst_trial},
                          {"distance", hellinger(ref, psi)},
                          {"closed_form", md.distance},
                          {"psi", psi}};
  }
  return report;
}

OracleReport verify_cov_max(std::span<const double> support_x,
                            std::span<const double> support_y,
                            std::span<const double> mass) {
  const std::size_t n = support_x.size();
  if (support_y.size() != n || mass.size() != n)
    throw std::invalid_argument("verify_cov_max: inputs must share one length");
  if (n < 2 || n > 8)
    throw std::invalid_argument("verify_cov_max: length must be between 2 and 8");
  for (std::size_t i = 0; i < n; ++i) {
    if (mass[i] <= 0.0)
      throw std::domain_error("verify_cov_max: mass entries must be positive");
    if (i > 0 && !(support_x[i - 1] < support_x[i] && support_y[i - 1] < support_y[i]))
      throw std::invalid_argument("verify_cov_max: supports must be strictly increasing");
  }

  const auto score = [&](const std::vector<std::size_t>& sigma) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += mass[i] * support_x[i] * support_y[sigma[i]];
    return s;
  };

  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  const double identity_score = score(sigma);

  std::vector<std::size_t> reversal(sigma.rbegin(), sigma.rend());
  const double reversal_score = score(reversal);

  double best = identity_score, worst = identity_score;
  std::vector<std::size_t> best_sigma = sigma, worst_sigma = sigma;
  std::int64_t permutations = 0;
  do {
    const double s = score(sigma);
    ++permutations;
    if (s > best) {
      best = s;
      best_sigma = sigma;
    }
    if (s < worst) {
      worst = s;
      worst_sigma = sigma;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  OracleReport report;
  report.claim = "cov-max";
  report.trials = permutations;
  const double scale = std::max({1.0, std::abs(best), std::abs(worst)});
  const double identity_deficit = best - identity_score;
  const double reversal_excess = reversal_score - worst;
  report.worst_margin = std::max(identity_deficit, reversal_excess);
  report.details["identity_score"] = identity_score;
  report.details["reversal_score"] = reversal_score;
  report.details["best_score"] = best;
  report.details["worst_score"] = worst;
  report.details["support_x"] = to_json_array(support_x);
  report.details["support_y"] = to_json_array(support_y);
  report.details["mass"] = to_json_array(mass);
  report.pass = report.worst_margin <= 1e-12 * scale;
  if (!report.pass)
    report.witness = json{{"best_permutation", best_sigma},
                          {"worst_permutation", worst_sigma},
                          {"identity_deficit", identity_deficit},
                          {"reversal_excess", reversal_excess}};
  return report;
}

OracleReport search_rho_m_bound(std::size_t rows, std::size_t cols,
                                std::int64_t trials, std::uint64_t seed,
                                ExecMode exec) {
  if (rows < 2 || rows > 6 || cols < 2 || cols > 6)
    throw std::invalid_argument("search_rho_m_bound: dimensions must be between 2 and 6");
  if (trials < 1) throw std::invalid_argument("search_rho_m_bound: trials must be positive");

  std::vector<double> value(static_cast<std::size_t>(trials),
                            std::numeric_limits<double>::quiet_NaN());
  for_each_index(value.size(), exec, [&](std::size_t t) {
    SplitMix64 g = substream(seed, t);
    try {
      const JointTable table = JointTable::from_probs(sample_table_probs(g, rows, cols));
      value[t] = rho_m(table).value;
    } catch (const std::exception&) {
      // Leave NaN; surfaced below. (Sampled tables cannot tie at machine
      // precision in practice, but exceptions must not cross the parallel loop.)
    }
  });

  double max_value = -1.0;
  std::size_t max_trial = 0;
  std::int64_t exceed_count = 0;
  std::size_t first_exceed = 0;
  std::int64_t error_count = 0;
  std::size_t first_error = 0;
  for (std::size_t t = 0; t < value.size(); ++t) {
    if (std::isnan(value[t])) {
      if (error_count++ == 0) first_error = t;
      continue;
    }
    if (value[t] > max_value) {
      max_value = value[t];
      max_trial = t;
    }
    if (value[t] > 1.0 + 1e-9) {
      if (exceed_count++ == 0) first_exceed = t;
    }
  }

  OracleReport report;
  report.claim = "rho-m-bound";
  report.trials = trials;
  report.worst_margin = 1.0 + 1e-9 - max_value;
  report.details["rows"] = rows;
  report.details["cols"] = cols;
  report.details["seed"] = seed;
  report.details["max_observed"] = max_value;
  report.details["max_trial"] = max_trial;
  report.details["exceed_count"] = exceed_count;
  report.pass = exceed_count == 0 && error_count == 0;
  if (exceed_count > 0) {
    SplitMix64 g = substream(seed, first_exceed);
    const auto probs = sample_table_probs(g, rows, cols);
    report.witness = json{{"trial", first_exceed},
                          {"value", value[first_exceed]},
                          {"probs", table_json(probs)}};
  } else if (error_count > 0) {
    report.witness = json{{"trial", first_error}, {"error", "trial evaluation failed"}};
  }
  return report;
}

OracleReport resolve_example4_variant() {
  constexpr double kPrinted = 0.5731;
  constexpr double kTol = 5e-3;
  const JointTable t = fixtures::example4();
  const RhoMResult r1 = rho_m(t, RhoMVariant::kDefinition1);
  const RhoMResult r2 = rho_m(t, RhoMVariant::kExample4Compat);

  OracleReport report;
  report.claim = "example4-variant";
  report.trials = 1;
  report.details["printed"] = kPrinted;
  report.details["definition1"] = r1.value;
  report.details["definition1_numerator"] = r1.numerator;
  report.details["definition1_denominator"] = r1.denominator;
  report.details["definition1_abs_diff"] = std::abs(r1.value - kPrinted);
  report.details["example4_compat"] = r2.value;
  report.details["example4_compat_denominator"] = r2.denominator;
  report.details["example4_compat_abs_diff"] = std::abs(r2.value - kPrinted);
  report.details["x_candidates"] = r1.x_candidates;
  report.details["y_candidates"] = r1.y_candidates;

  const bool m1 = std::abs(r1.value - kPrinted) <= kTol;
  const bool m2 = std::abs(r2.value - kPrinted) <= kTol;
  report.details["matched_variant"] =
      m1 ? (m2 ? "both" : "definition1") : (m2 ? "example4-compat" : "none");
  report.worst_margin = std::min(std::abs(r1.value - kPrinted), std::abs(r2.value - kPrinted));
  report.pass = m1 || m2;
  if (!report.pass)
    report.witness = json{{"definition1", r1.value}, {"example4_compat", r2.value}};
  return report;
}

OracleReport verify_mi_examples() {
  struct Entry {
    const char* name;
    JointTable table;
  };
  const Entry entries[] = {{"mi_p", fixtures::mi_p()},
                           {"mi_q", fixtures::mi_q()},
                           {"mi_r", fixtures::mi_r()},
                           {"mi_s", fixtures::mi_s()}};

  OracleReport report;
  report.claim = "mi-examples";
  report.trials = 4;
  double mi[4] = {};
  double worst_route_gap = 0.0;
  for (int k = 0; k < 4; ++k) {
    const JointTable& t = entries[k].table;
    mi[k] = mutual_information(t);
    // Independent route: I(X;Y) = H(X) + H(Y) - H(X,Y).
    const MarginalPair m = marginals(t);
    const double via_entropy = entropy(m.row) + entropy(m.col) - entropy(t.flat());
    worst_route_gap = std::max(worst_route_gap, std::abs(mi[k] - via_entropy));
    report.details[entries[k].name] = mi[k];
  }
  report.details["route_gap"] = worst_route_gap;

  // The reference text asserts MI_p > MI_q and MI_r < MI_s; the second
  // ordering reproduces, the first does not (the computed values land the
  // other way around), and both computed outcomes are recorded here.
  const bool pq_as_text = mi[0] > mi[1];
  const bool rs_as_text = mi[2] < mi[3];
  report.details["pq_ordering"] =
      pq_as_text ? "computed MI_p > MI_q (matches reference text)"
                 : "computed MI_p < MI_q (reference text claims MI_p > MI_q; not reproduced)";
  report.details["rs_ordering"] =
      rs_as_text ? "computed MI_r < MI_s (matches reference text)"
                 : "computed MI_r > MI_s (reference text claims MI_r < MI_s; not reproduced)";
  report.worst_margin = worst_route_gap;
  report.pass = rs_as_text && worst_route_gap <= 1e-12;
  if (!report.pass)
    report.witness = json{{"mi_p", mi[0]}, {"mi_q", mi[1]}, {"mi_r", mi[2]}, {"mi_s", mi[3]}};
  return report;
}

OracleReport recompute_example1() {
  constexpr double kPrinted = 0.2783;
  // Step-by-step evaluation with direct formulas only; shares no code with
  // rho_m. Table: (0.3, 0.2 / 0.1, 0.4), marginals (0.5, 0.5) and (0.4, 0.6).
  const double p[4] = {0.3, 0.2, 0.1, 0.4};
  const double rx[2] = {p[0] + p[1], p[2] + p[3]};
  const double cy[2] = {p[0] + p[2], p[1] + p[3]};
  const double pi[4] = {rx[0] * cy[0], rx[0] * cy[1], rx[1] * cy[0], rx[1] * cy[1]};

  // Bhattacharyya route for every distance.
  double bc = 0.0;
  for (int k = 0; k < 4; ++k) bc += std::sqrt(pi[k] * p[k]);
  const double numerator = std::sqrt(1.0 - bc);

  // Sole X candidate: diag(0.5, 0.5); sole Y candidate: diag(0.4, 0.6).
  const double mx = std::sqrt(1.0 - (std::sqrt(pi[0] * rx[0]) + std::sqrt(pi[3] * rx[1])));
  const double my = std::sqrt(1.0 - (std::sqrt(pi[0] * cy[0]) + std::sqrt(pi[3] * cy[1])));
  const double stepwise = numerator / std::sqrt(mx * my);

  const RhoMResult lib = rho_m(fixtures::example1());

  OracleReport report;
  report.claim = "example1";
  report.trials = 1;
  report.details["printed"] = kPrinted;
  report.details["stepwise"] = stepwise;
  report.details["stepwise_numerator"] = numerator;
  report.details["stepwise_distance_x"] = mx;
  report.details["stepwise_distance_y"] = my;
  report.details["library"] = lib.value;
  report.details["library_numerator"] = lib.numerator;
  report.details["printed_abs_diff"] = std::abs(lib.value - kPrinted);
  report.worst_margin = std::abs(lib.value - stepwise);
  report.pass = report.worst_margin <= 1e-9;
  if (!report.pass)
    report.witness = json{{"stepwise", stepwise}, {"library", lib.value}};
  return report;
}

nlohmann::json provenance_json(std::span<const OracleReport> reports) {
  json out = json::object();
  for (const OracleReport& r : reports) {
    json entry = json::object();
    entry["trials"] = r.trials;
    entry["worst_margin"] = r.worst_margin;
    entry["pass"] = r.pass;
    entry["details"] = r.details;
    entry["witness"] = r.witness.is_null() ? json(nullptr) : r.witness;
    out[r.claim] = std::move(entry);
  }
  return out;
}

std::string provenance_text(std::span<const OracleReport> reports) {
  return provenance_json(reports).dump(2) + "\n";
}

void write_provenance(const std::string& path, std::span<const OracleReport> reports) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open provenance file: " + path);
  out << provenance_text(reports);
}

}  // namespace depmeas
