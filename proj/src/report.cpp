#include "severi/report.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "severi/json_io.hpp"
#include "severi/words.hpp"

namespace severi {

TemplateRow template_row(const Template& t) {
  TemplateRow row;
  row.graph = t.graph();
  row.delta = static_cast<unsigned>(t.cogenus());
  row.length = t.length();
  row.mu = t.multiplicity();
  row.eps0 = t.graph().epsilon0();
  row.eps1 = t.graph().epsilon1();
  row.lambda = t.graph().lambda_vector(row.length);
  row.lambda_bar = t.graph().lambda_bar_vector(row.length);
  row.kmin = k_min(t);
  row.p = p_poly(t.graph().types(), t.graph().counts(), row.length);
  row.phi = linear_form(t);
  row.zeta0 = zeta(t, 0);
  row.zeta1 = zeta(t, 1);
  row.eta0 = eta0(t);
  row.shift_slope = row.phi.slope_in_k();
  row.shift_intercept = row.phi.intercept_in_k();
  return row;
}

std::vector<TemplateRow> template_table(unsigned delta,
                                        const std::optional<std::filesystem::path>& cache_dir) {
  std::vector<Template> templates;
  if (cache_dir.has_value()) {
    templates = TemplateCache(*cache_dir).get(delta);
  } else {
    templates = templates_of_cogenus(delta);
  }
  std::vector<TemplateRow> rows;
  rows.reserve(templates.size());
  for (const Template& t : templates) rows.push_back(template_row(t));
  return rows;
}

namespace {

std::string vec_to_string(const std::vector<unsigned long long>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

std::string shift_poly_string(const Rational& slope, const Rational& intercept) {
  const std::vector<std::string> vars{"k"};
  MultiPoly p = MultiPoly::constant(vars, intercept);
  p += MultiPoly::variable(vars, 0) * slope;
  return p.to_string();
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

nlohmann::ordered_json template_rows_json(const std::vector<TemplateRow>& rows, unsigned delta) {
  nlohmann::ordered_json doc;
  doc["format_version"] = kJsonFormatVersion;
  doc["delta"] = delta;
  auto& list = doc["templates"] = nlohmann::ordered_json::array();
  for (const TemplateRow& row : rows) {
    nlohmann::ordered_json r;
    r["edges"] = tau_graph_to_json(row.graph);
    r["delta"] = row.delta;
    r["length"] = row.length;
    r["mu"] = row.mu.str();
    r["eps0"] = row.eps0;
    r["eps1"] = row.eps1;
    r["lambda"] = row.lambda;
    r["lambda_bar"] = row.lambda_bar;
    r["k_min"] = row.kmin;
    r["p"] = row.p.to_string();
    nlohmann::ordered_json phi;
    phi["constant"] = row.phi.constant.to_string();
    auto& coeffs = phi["coeffs"] = nlohmann::ordered_json::array();
    for (const Rational& a : row.phi.coeffs) coeffs.push_back(a.to_string());
    r["phi"] = std::move(phi);
    r["zeta0"] = row.zeta0.to_string();
    r["zeta1"] = row.zeta1.to_string();
    r["eta0"] = row.eta0.to_string();
    r["phi_shift"] = {{"slope", row.shift_slope.to_string()},
                      {"intercept", row.shift_intercept.to_string()}};
    list.push_back(std::move(r));
  }
  return doc;
}

std::string render_template_rows(const std::vector<TemplateRow>& rows, unsigned delta,
                                 OutputFormat format) {
  if (format == OutputFormat::Json) {
    return template_rows_json(rows, delta).dump(2) + "\n";
  }

  const std::vector<std::string> header = {
      "edges", "delta", "l",     "mu",    "eps0",  "eps1",      "lambda",
      "lbar",  "k_min", "P",     "Phi",   "zeta0", "zeta1",     "eta0",
      "Phi_v(k,l)"};
  std::vector<std::vector<std::string>> cells;
  for (const TemplateRow& row : rows) {
    cells.push_back({row.graph.to_string(), std::to_string(row.delta),
                     std::to_string(row.length), row.mu.str(), std::to_string(row.eps0),
                     std::to_string(row.eps1), vec_to_string(row.lambda),
                     vec_to_string(row.lambda_bar), std::to_string(row.kmin),
                     row.p.to_string(), row.phi.to_poly().to_string(),
                     row.zeta0.to_string(), row.zeta1.to_string(), row.eta0.to_string(),
                     shift_poly_string(row.shift_slope, row.shift_intercept)});
  }

  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (c > 0) os << ",";
      os << header[c];
    }
    os << "\n";
    for (const auto& row : cells) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c > 0) os << ",";
        os << csv_quote(row[c]);
      }
      os << "\n";
    }
    return os.str();
  }

  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  auto emit_row = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) os << "  ";
      os << row[c];
      os << std::string(widths[c] - row[c].size(), ' ');
    }
    os << "\n";
  };
  emit_row(header);
  for (const auto& row : cells) emit_row(row);
  return os.str();
}

nlohmann::ordered_json qpoly_json(const QPolynomial& q, unsigned delta, const std::string& name) {
  nlohmann::ordered_json doc;
  doc["format_version"] = kJsonFormatVersion;
  doc["name"] = name;
  doc["delta"] = delta;
  doc["polynomial"] = q.to_string();
  auto& coeffs = doc["coefficients"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i <= q.degree(); ++i) coeffs.push_back(q.coeff(i).to_string());
  doc["validity_threshold"] = q.validity_threshold();
  return doc;
}

nlohmann::ordered_json series_json(const std::string& which,
                                   const std::vector<Rational>& coefficients) {
  nlohmann::ordered_json doc;
  doc["format_version"] = kJsonFormatVersion;
  doc["series"] = which;
  auto& coeffs = doc["coefficients"] = nlohmann::ordered_json::array();
  for (const Rational& c : coefficients) coeffs.push_back(c.to_string());
  return doc;
}

namespace {

struct VerifyContext {
  VerifyReport report;
  bool inject_fault = false;

  void check(bool condition, const std::string& what) {
    if (inject_fault) {
      condition = false;
      inject_fault = false;  // perturb exactly one comparison
    }
    if (condition) {
      ++report.passed;
    } else {
      ++report.failed;
      report.failures.push_back(what);
    }
  }
};

// Signatures over intervals within [0, max_end], weights <= max_weight,
// up to two types; short edges included when long_edge_only is false.
std::vector<std::vector<EdgeType>> signature_family(unsigned max_end, unsigned max_weight,
                                                    bool long_edge_only) {
  std::vector<EdgeType> pool;
  for (unsigned start = 0; start < max_end; ++start) {
    for (unsigned end = start + 1; end <= max_end; ++end) {
      for (unsigned weight = 1; weight <= max_weight; ++weight) {
        const EdgeType t{start, end, weight};
        if (long_edge_only && t.is_short()) continue;
        pool.push_back(t);
      }
    }
  }
  std::vector<std::vector<EdgeType>> family;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    family.push_back({pool[i]});
    for (std::size_t k = i + 1; k < pool.size(); ++k) {
      family.push_back({pool[i], pool[k]});
    }
  }
  return family;
}

template <class Fn>
void for_each_small_n(const std::size_t m, unsigned max_total, Fn&& fn) {
  std::vector<unsigned> n(m, 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned used) -> void {
    if (pos == m) {
      fn(n);
      return;
    }
    for (unsigned v = 0; used + v <= max_total; ++v) {
      n[pos] = v;
      self(self, pos + 1, used + v);
    }
    n[pos] = 0;
  };
  rec(rec, 0, 0);
}

void verify_reciprocity(VerifyContext& ctx, unsigned max_end, unsigned total_n) {
  for (const auto& tau : signature_family(max_end, 2, false)) {
    unsigned ell = 0;
    for (const EdgeType& t : tau) ell = std::max(ell, t.end);
    for_each_small_n(tau.size(), total_n, [&](const std::vector<unsigned>& n) {
      const MultiPoly p = p_poly(tau, n, ell);
      const MultiPoly s = s_poly(tau, n, ell);
      // beta_j -> -beta_j - 1 inside s, then compare against (-1)^|n| p.
      std::vector<MultiPoly> images;
      const auto beta_vars = MultiPoly::indexed_vars("b", ell);
      for (unsigned j = 0; j < ell; ++j) {
        images.push_back(-MultiPoly::variable(beta_vars, j) -
                         MultiPoly::constant(beta_vars, Rational(1)));
      }
      unsigned total = 0;
      for (unsigned v : n) total += v;
      MultiPoly rhs = s.substitute(images) * Rational(total % 2 == 0 ? 1 : -1);
      ctx.check(p == rhs, "reciprocity failed for tau with " + std::to_string(tau.size()) +
                              " types");
    });
  }
}

void verify_linearity(VerifyContext& ctx, unsigned max_delta) {
  std::mt19937 rng(20240217u);
  for (unsigned delta = 1; delta <= max_delta; ++delta) {
    for (const Template& t : templates_of_cogenus(delta)) {
      const unsigned ell = t.length();
      const MultiPoly phi = phi_poly(t.graph().types(), t.graph().counts(), ell);
      ctx.check(phi.total_degree() <= 1, "phi_poly degree > 1");
      const LinearForm form = linear_form(t);
      const auto lbar = t.graph().lambda_bar_vector(ell);
      std::vector<long long> beta(ell);
      for (int trial = 0; trial < 10; ++trial) {
        for (unsigned j = 0; j < ell; ++j) {
          beta[j] = static_cast<long long>(lbar[j]) + static_cast<long long>(rng() % 8);
        }
        const Rational direct = phi_value(t.graph(), BetaVector(beta));
        ctx.check(direct == form.eval(beta), "phi_value disagrees with the linear form");
      }
    }
  }
}

void verify_vanishing(VerifyContext& ctx, unsigned max_delta) {
  std::mt19937 rng(777u);
  unsigned built = 0;
  for (unsigned d1 = 1; d1 + 1 <= max_delta + 1 && built < 10; ++d1) {
    for (const Template& left : templates_of_cogenus(d1)) {
      if (built >= 10) break;
      for (const Template& right : templates_of_cogenus(1)) {
        if (built >= 10) break;
        // A gap after the left part guarantees disconnected support.
        TauGraph g_left = left.graph();
        TauGraph g_right = right.graph().shift(g_left.maxv() + 1 + rng() % 2);
        std::vector<EdgeType> types = g_left.types();
        std::vector<unsigned> counts = g_left.counts();
        types.insert(types.end(), g_right.types().begin(), g_right.types().end());
        counts.insert(counts.end(), g_right.counts().begin(), g_right.counts().end());
        TauGraph g(types, counts);
        ctx.check(!g.is_shifted_template(), "gap construction must not be a shifted template");
        const unsigned ell = g.maxv();
        const MultiPoly phi = phi_poly(g.types(), g.counts(), ell);
        ctx.check(phi.is_zero(), "phi_poly must vanish on non-tau-templates");
        std::vector<long long> beta(ell + 1);
        for (auto& b : beta) b = static_cast<long long>(rng() % 10);
        ctx.check(phi_value_strict(g, BetaVector(beta)).is_zero(),
                  "strict phi must vanish on non-shifted-templates");
        ++built;
      }
    }
  }
}

void verify_words(VerifyContext& ctx) {
  const std::vector<EdgeType> tau{{0, 1, 2}};
  // FIS decomposition: |S(n,t)| = sum |S_irr(n1,t)| * |S(n0,0)|.
  for (unsigned n = 0; n <= 3; ++n) {
    for (unsigned t = 0; t <= 2; ++t) {
      const std::size_t direct = enumerate_S(tau, {n}, {t}).size();
      std::uint64_t assembled = 0;
      for (unsigned n1 = 0; n1 <= n; ++n1) {
        assembled += count_irreducible(tau, {n1}, {t}) *
                     enumerate_S(tau, {n - n1}, {0}).size();
      }
      ctx.check(direct == assembled, "word decomposition cardinality mismatch");
      const Rational counted = s_poly(tau, {n}, 1).eval({Rational(t)});
      ctx.check(counted == Rational(Integer(direct)), "s_poly disagrees with enumeration");
    }
  }
  for (unsigned n = 0; n <= 4; ++n) {
    static const std::uint64_t catalan[] = {1, 1, 2, 5, 14};
    ctx.check(count_irreducible(tau, {n}, {1}) == catalan[n], "irreducible counts not Catalan");
  }
}

void verify_pipeline(VerifyContext& ctx, unsigned max_d, unsigned max_delta) {
  for (unsigned d = 1; d <= max_d; ++d) {
    for (unsigned delta = 1; delta <= max_delta; ++delta) {
      const Integer direct = severi_direct(d, delta);
      const Rational via_exp = severi_via_exp(d, delta);
      ctx.check(Rational(direct) == via_exp, "severi_direct != severi_via_exp at d=" +
                                                 std::to_string(d) + ", delta=" +
                                                 std::to_string(delta));
    }
  }
}

}  // namespace

VerifyReport run_verify(VerifyLevel level, bool inject_fault) {
  VerifyContext ctx;
  ctx.inject_fault = inject_fault;
  const bool full = level == VerifyLevel::Full;
  verify_reciprocity(ctx, full ? 3 : 2, full ? 3 : 2);
  verify_linearity(ctx, full ? 3 : 2);
  verify_vanishing(ctx, full ? 3 : 2);
  verify_words(ctx);
  verify_pipeline(ctx, full ? 5 : 4, full ? 3 : 2);
  return ctx.report;
}

}  // namespace severi
