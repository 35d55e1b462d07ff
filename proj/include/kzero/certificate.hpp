#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kzero/int_poly.hpp"
#include "kzero/weil.hpp"

namespace kzero {

using Json = nlohmann::ordered_json;

enum class Verdict { pass, fail };

struct Check {
  std::string name;
  std::string claim;
  std::string anchor;  // the mathematical step the check stands for
  Json inputs = Json::object();
  Json outputs = Json::object();
  Verdict verdict = Verdict::fail;
  std::string summary;  // one line for the text report
};

// A hypothesis the pipeline relies on without computing it.
struct Assumption {
  std::string name;
  std::string statement;
  std::vector<std::string> used_by;  // names of dependent checks
};

struct CertificateInput {
  NewformDatum newform;
  Integer ideal_a, ideal_b, ideal_q = 1;
  // Golden Frobenius polynomial at the first eigenvalue prime.
  std::optional<IntPoly> paper_charpoly;
  // Further golden polynomials keyed by prime.
  std::map<Integer, IntPoly> reference_charpolys;
};

// Throws InputError naming the offending field.
CertificateInput parse_certificate_input(const Json& doc);
CertificateInput load_certificate_input(const std::string& path);

struct Certificate {
  Json parameters = Json::object();
  std::vector<Check> checks;
  std::vector<Assumption> assumptions;

  bool passed() const;
  std::size_t passed_count() const;
  std::optional<std::string> first_failure() const;

  Json to_json() const;
  std::string to_text() const;
};

/// Runs the ten checks in dependency order. A check whose prerequisites
/// failed is reported as failed with a note rather than skipped.
Certificate run_certificate(const CertificateInput& input, unsigned stability_bound = kDefaultStabilityBound);

}  // namespace kzero
