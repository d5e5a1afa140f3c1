#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "severi/severi.hpp"

namespace severi {

enum class OutputFormat { Table, Json, Csv };

// One row of the per-template table: the full statistics column set.
struct TemplateRow {
  TauGraph graph;
  unsigned delta = 0;
  unsigned length = 0;
  Integer mu;
  int eps0 = 0;
  int eps1 = 0;
  std::vector<unsigned long long> lambda;
  std::vector<unsigned long long> lambda_bar;
  unsigned kmin = 1;
  MultiPoly p;         // P(Gamma, beta)
  LinearForm phi;      // Phi(Gamma, beta)
  Rational zeta0;
  Rational zeta1;
  Rational eta0;
  Rational shift_slope;      // Phi_{v(k,l)}(Gamma) = slope*k + intercept
  Rational shift_intercept;  // for k >= kmin
};

TemplateRow template_row(const Template& t);
std::vector<TemplateRow> template_table(unsigned delta,
                                        const std::optional<std::filesystem::path>& cache_dir);

std::string render_template_rows(const std::vector<TemplateRow>& rows, unsigned delta,
                                 OutputFormat format);
nlohmann::ordered_json template_rows_json(const std::vector<TemplateRow>& rows, unsigned delta);

nlohmann::ordered_json qpoly_json(const QPolynomial& q, unsigned delta, const std::string& name);
nlohmann::ordered_json series_json(const std::string& which,
                                   const std::vector<Rational>& coefficients);

enum class VerifyLevel { Quick, Full };

struct VerifyReport {
  unsigned passed = 0;
  unsigned failed = 0;
  std::vector<std::string> failures;

  bool ok() const { return failed == 0; }
};

// Runs the oracle suites (reciprocity, linearity, vanishing, word
// decompositions, pipeline equality).  Quick: delta <= 2, d <= 4.
// Full: delta <= 3, d <= 5.  inject_fault perturbs one comparison to
// prove the harness can fail.
VerifyReport run_verify(VerifyLevel level, bool inject_fault = false);

}  // namespace severi
