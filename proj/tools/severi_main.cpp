#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "severi/errors.hpp"
#include "severi/report.hpp"
#include "severi/words.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

severi::OutputFormat parse_format(const std::string& name) {
  if (name == "table") return severi::OutputFormat::Table;
  if (name == "json") return severi::OutputFormat::Json;
  if (name == "csv") return severi::OutputFormat::Csv;
  throw CLI::ValidationError("--format must be table, json or csv");
}

struct Ceilings {
  unsigned max_delta = 4;
  unsigned max_d = 8;

  void check_delta(unsigned delta) const {
    if (delta > max_delta) {
      throw severi::ResourceLimitError(
          "delta = " + std::to_string(delta) + " exceeds the ceiling " +
          std::to_string(max_delta) + "; raise it with --max-delta");
    }
  }
  void check_d(unsigned d) const {
    if (d > max_d) {
      throw severi::ResourceLimitError("d = " + std::to_string(d) +
                                       " exceeds the ceiling " + std::to_string(max_d) +
                                       "; raise it with --max-d");
    }
  }
};

std::vector<severi::EdgeType> parse_tau(const std::string& text) {
  // "0-1:2,0-2:1" -> edges {0,1} weight 2 and {0,2} weight 1
  std::vector<severi::EdgeType> tau;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    unsigned start = 0, end = 0, weight = 0;
    char dash = 0, colon = 0;
    std::stringstream es(item);
    if (!(es >> start >> dash >> end >> colon >> weight) || dash != '-' || colon != ':') {
      throw CLI::ValidationError("--tau entries must look like start-end:weight");
    }
    tau.push_back({start, end, weight});
  }
  if (tau.empty()) throw CLI::ValidationError("--tau must name at least one edge type");
  return tau;
}

std::vector<unsigned> parse_unsigned_list(const std::string& text, const char* flag) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(static_cast<unsigned>(std::stoul(item)));
    } catch (const std::exception&) {
      throw CLI::ValidationError(std::string(flag) + " must be a comma list of integers");
    }
  }
  return out;
}

severi::TauWord parse_word(const std::string& text) {
  // "110/0": words separated by '/', letters as digits (0 = s0).
  severi::TauWord w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '/')) {
    std::vector<unsigned> letters;
    for (char c : item) {
      if (c == '-') continue;  // "-" denotes an empty word
      if (c < '0' || c > '9') throw CLI::ValidationError("--word letters must be digits");
      letters.push_back(static_cast<unsigned>(c - '0'));
    }
    w.words.push_back(std::move(letters));
  }
  return w;
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return std::filesystem::path(flag_value);
  if (const char* env = std::getenv("SEVERI_CACHE_DIR"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Severi degrees, node polynomials and template tables"};
  app.require_subcommand(1);

  Ceilings ceilings;
  std::string cache_dir_flag;
  std::string format_name = "table";
  app.add_option("--max-delta", ceilings.max_delta, "Ceiling for any cogenus argument");
  app.add_option("--max-d", ceilings.max_d, "Ceiling for any degree argument");
  app.add_option("--cache-dir", cache_dir_flag,
                 "Template cache directory (overrides SEVERI_CACHE_DIR)");

  // templates
  auto* cmd_templates = app.add_subcommand("templates", "List templates of a cogenus");
  unsigned tpl_delta = 1;
  cmd_templates->add_option("--delta", tpl_delta, "Cogenus")->required();
  cmd_templates->add_option("--format", format_name, "table, json or csv");

  // severi
  auto* cmd_severi = app.add_subcommand("severi", "Compute a Severi degree N^{d,delta}");
  unsigned sev_d = 1, sev_delta = 1;
  std::string method = "direct";
  cmd_severi->add_option("--d", sev_d, "Curve degree")->required();
  cmd_severi->add_option("--delta", sev_delta, "Number of nodes")->required();
  cmd_severi->add_option("--method", method, "direct, exp or both");

  // qpoly / nodepoly
  auto* cmd_qpoly = app.add_subcommand("qpoly", "Quadratic polynomial Q_delta(d)");
  unsigned qp_delta = 1;
  cmd_qpoly->add_option("--delta", qp_delta, "Cogenus")->required();
  cmd_qpoly->add_option("--format", format_name, "table or json");

  auto* cmd_nodepoly = app.add_subcommand("nodepoly", "Node polynomial N_delta(d)");
  unsigned np_delta = 1;
  cmd_nodepoly->add_option("--delta", np_delta, "Number of nodes")->required();
  cmd_nodepoly->add_option("--format", format_name, "table or json");

  // series
  auto* cmd_series = app.add_subcommand("series", "Coefficients of A_1(t) or A_2(t)");
  std::string which = "a1";
  unsigned order = 2;
  cmd_series->add_option("which", which, "a1 or a2")->required();
  cmd_series->add_option("--order", order, "Highest power of t");
  cmd_series->add_option("--format", format_name, "table or json");

  // words
  auto* cmd_words = app.add_subcommand("words", "Word counts and FIS traces");
  auto* cmd_words_count = cmd_words->add_subcommand("count", "Count S and S^irr");
  std::string tau_text, n_text, t_text;
  std::size_t letter_budget = severi::kDefaultLetterBudget;
  cmd_words_count->add_option("--tau", tau_text, "Edge types, e.g. 0-1:2,0-2:1")->required();
  cmd_words_count->add_option("--n", n_text, "Multiplicities, e.g. 2,1")->required();
  cmd_words_count->add_option("--t", t_text, "Height target t, e.g. 1,0")->required();
  cmd_words_count->add_option("--letter-budget", letter_budget, "Total letter cap");

  auto* cmd_words_fis = cmd_words->add_subcommand("fis", "Trace Find-Irreducible-Subword");
  std::string word_text, height_text;
  cmd_words_fis->add_option("--tau", tau_text, "Edge types")->required();
  cmd_words_fis->add_option("--word", word_text, "Word tuple, e.g. 110/0")->required();
  cmd_words_fis->add_option("--height", height_text, "Target height, e.g. -1,0")->required();

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "Run the oracle suites");
  std::string level_name = "quick";
  bool inject_fault = false;
  cmd_verify->add_option("--level", level_name, "quick or full");
  cmd_verify->add_flag("--inject-fault", inject_fault)->group("");  // test hook, hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const auto cache_dir = resolve_cache_dir(cache_dir_flag);
    const severi::OutputFormat format = parse_format(format_name);

    if (cmd_templates->parsed()) {
      ceilings.check_delta(tpl_delta);
      const auto rows = severi::template_table(tpl_delta, cache_dir);
      std::cout << severi::render_template_rows(rows, tpl_delta, format);
      return kExitOk;
    }

    if (cmd_severi->parsed()) {
      ceilings.check_delta(sev_delta);
      ceilings.check_d(sev_d);
      if (method == "direct") {
        std::cout << severi::severi_direct(sev_d, sev_delta).str() << "\n";
      } else if (method == "exp") {
        std::cout << severi::severi_via_exp(sev_d, sev_delta).to_string() << "\n";
      } else if (method == "both") {
        const severi::Integer direct = severi::severi_direct(sev_d, sev_delta);
        const severi::Rational via_exp = severi::severi_via_exp(sev_d, sev_delta);
        const bool match = severi::Rational(direct) == via_exp;
        std::cout << direct.str() << " / " << via_exp.to_string() << " / "
                  << (match ? "match" : "MISMATCH") << "\n";
        return match ? kExitOk : kExitVerifyFailure;
      } else {
        std::cerr << "--method must be direct, exp or both\n";
        return kExitUsage;
      }
      return kExitOk;
    }

    if (cmd_qpoly->parsed() || cmd_nodepoly->parsed()) {
      const bool is_q = cmd_qpoly->parsed();
      const unsigned delta = is_q ? qp_delta : np_delta;
      ceilings.check_delta(delta);
      const severi::QPolynomial poly =
          is_q ? severi::q_poly_delta(delta) : severi::node_polynomial(delta);
      const std::string name = is_q ? "Q_delta" : "N_delta";
      if (format == severi::OutputFormat::Json) {
        std::cout << severi::qpoly_json(poly, delta, name).dump(2) << "\n";
      } else {
        std::cout << poly.to_string() << "   (exact for d >= "
                  << poly.validity_threshold() << ")\n";
      }
      return kExitOk;
    }

    if (cmd_series->parsed()) {
      ceilings.check_delta(order);
      if (which != "a1" && which != "a2") {
        std::cerr << "series: argument must be a1 or a2\n";
        return kExitUsage;
      }
      std::vector<severi::Rational> coeffs;
      for (unsigned delta = 1; delta <= order; ++delta) {
        coeffs.push_back(which == "a1" ? severi::a1_coefficient(delta)
                                       : severi::a2_coefficient(delta));
      }
      if (format == severi::OutputFormat::Json) {
        auto doc = severi::series_json(which, coeffs);
        if (which == "a2") doc["cross_check"] = "ok";  // both formulas agreed
        std::cout << doc.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
          if (i > 0) std::cout << ", ";
          std::cout << coeffs[i].to_string();
        }
        std::cout << "\n";
        if (which == "a2") std::cout << "cross-check: both formulas agree\n";
      }
      return kExitOk;
    }

    if (cmd_words_count->parsed()) {
      const auto tau = parse_tau(tau_text);
      const auto n = parse_unsigned_list(n_text, "--n");
      const auto t = parse_unsigned_list(t_text, "--t");
      if (n.size() != tau.size()) {
        std::cerr << "--n must have one entry per edge type\n";
        return kExitUsage;
      }
      const auto& words = severi::enumerate_S(tau, n, t, letter_budget);
      std::uint64_t irreducible = 0;
      for (const auto& w : words) {
        if (severi::is_irreducible(tau, w)) ++irreducible;
      }
      std::cout << "|S| = " << words.size() << "\n|S_irr| = " << irreducible << "\n";
      return kExitOk;
    }

    if (cmd_words_fis->parsed()) {
      const auto tau = parse_tau(tau_text);
      const auto w = parse_word(word_text);
      std::vector<long long> h;
      for (const std::string& piece : [&] {
             std::vector<std::string> parts;
             std::stringstream ss(height_text);
             std::string item;
             while (std::getline(ss, item, ',')) parts.push_back(item);
             return parts;
           }()) {
        h.push_back(std::stoll(piece));
      }
      std::vector<severi::FisStep> steps;
      const auto [u, v] = severi::fis(tau, w, h, severi::FisTieBreak::SmallestIndex, &steps);
      for (std::size_t s = 0; s < steps.size(); ++s) {
        std::cout << "step " << (s + 1) << ": move s" << steps[s].letter << " into word "
                  << (steps[s].word_index + 1) << "\n";
      }
      std::cout << "u = " << u.to_string() << "\nv = " << v.to_string() << "\n";
      return kExitOk;
    }

    if (cmd_verify->parsed()) {
      severi::VerifyLevel level = severi::VerifyLevel::Quick;
      if (level_name == "full") {
        level = severi::VerifyLevel::Full;
      } else if (level_name != "quick") {
        std::cerr << "--level must be quick or full\n";
        return kExitUsage;
      }
      const auto report = severi::run_verify(level, inject_fault);
      std::cout << "passed: " << report.passed << "\nfailed: " << report.failed << "\n";
      for (const std::string& f : report.failures) std::cout << "  FAIL " << f << "\n";
      return report.ok() ? kExitOk : kExitVerifyFailure;
    }

    std::cerr << "no subcommand given\n";
    return kExitUsage;
  } catch (const severi::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
}
