#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contactlie/families.hpp"

namespace contactlie {

struct FileFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// On-disk algebra description (JSON). Bracket entries hold 1 <= i < j <= dim
// with expression-valued coefficient maps k -> expr. An optional second table
// `phi2` encodes a bilinear-pair query for the compatibility checks.
struct AlgebraFile {
  int dim = 0;
  std::vector<std::string> basis;  // optional, defaults to e1..en
  std::vector<ParamDecl> params;
  struct Entry {
    int i = 0, j = 0;
    std::vector<std::pair<int, std::string>> coeffs;  // k -> expression
  };
  std::vector<Entry> bracket;
  std::vector<Entry> phi2;  // optional
  std::optional<int> contact_form_index;
  std::optional<bool> darboux;
};

AlgebraFile parse_algebra_file(const std::string& json_text);
std::string serialize_algebra_file(const AlgebraFile& file);

// Builds the context + cochains described by the file. Throws FileFormatError
// on structural violations and ScalarParseError on bad expressions.
struct LoadedAlgebra {
  ScalarContext::Ptr ctx;
  LieAlgebra algebra;
  std::optional<Cochain2> phi2;
  int contact_form_index = 1;
};
LoadedAlgebra load_algebra(const AlgebraFile& file, bool enforce_jacobi = false);

// Serializes a catalog instance into the file schema.
AlgebraFile to_algebra_file(const FamilyInstance& inst);

// Fixed-field-order JSON for golden-file comparison.
std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace contactlie
