#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "contactlie/compat.hpp"
#include "contactlie/exterior.hpp"

namespace contactlie {

struct ParamDecl {
  std::string name;
  std::string relation;    // univariate monic relation text, e.g. "f^2-f-1"
  std::string reciprocal;  // partner name with name * partner = 1
};

struct TableTerm {
  int i, j;           // d omega_k gains coeff * omega_i ^ omega_j
  std::string coeff;  // expression in the family parameters
};

// One concrete build of a family at a fixed dimension.
struct FamilyBuild {
  int dim = 0;
  std::vector<ParamDecl> params;
  std::vector<std::vector<TableTerm>> table;  // table[k], k = 1..dim (0 unused)
  // eliminated parameters: name -> replacement expression, applied in order
  std::vector<std::pair<std::string, std::string>> constraints;
  // expressions that must not vanish (theorem hypotheses; enforced on numeric bindings)
  std::vector<std::string> hypotheses;
  // one expression per (l, -l) eigenvalue pair of f; empty when f is nilpotent
  std::vector<std::string> spectrum_pairs;
  bool is_contact = true;          // even-dimensional frobenius cores are not
  bool darboux_expected = true;    // d omega_1 in canonical form
  int reeb_index = 1;              // expected Reeb basis vector
  std::vector<std::string> contact_form;  // 1-form coefficients; empty = omega_1
  int expected_rank = -1;          // -1 when the rank hypothesis does not apply
  bool frobenius = false;          // carries the codim-1 frobeniusian ideal ker(w1 - w2)
  int expected_f_rank = -1;        // pinned matrix rank of f, when the source states it
};

struct FamilySpec {
  std::string id;
  std::string summary;
  bool generic_p = false;
  int min_p = 0;      // for generic families
  int default_p = 0;  // used when the caller gives no p
  std::function<FamilyBuild(int)> build;
};

const std::vector<FamilySpec>& catalog();
const FamilySpec* find_family(const std::string& id);

// A built family: the algebra plus its verification metadata.
struct FamilyInstance {
  std::string id;
  int p = 0;
  FamilyBuild def;
  LieAlgebra algebra;
  ScalarContext::Ptr ctx;
};

// Builds the family algebra. Constraints are eliminated by substitution before
// anything else; bindings (name -> expression) are substituted afterwards.
// Numeric bindings violating a hypothesis are rejected with the hypothesis
// named. Reciprocal partners are bound automatically.
FamilyInstance instantiate(const std::string& id, std::optional<int> p = std::nullopt,
                           const std::map<std::string, std::string>& bindings = {});

// Builds a LieAlgebra directly from a FamilyBuild (used for errata fixtures;
// Jacobi enforcement optional).
LieAlgebra build_algebra(const FamilyBuild& def, ScalarContext::Ptr& ctx_out,
                         const std::map<std::string, std::string>& bindings = {},
                         bool enforce_jacobi = true);

enum class CheckStatus { ok, fail, na };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::na;
  std::string detail;
};

struct VerificationReport {
  std::string family;
  int p = 0;
  int dim = 0;
  std::string mode;  // "symbolic" or "sampled"
  std::vector<CheckResult> checks;
  long long elapsed_ms = 0;
  bool ok() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::fail) return false;
    return true;
  }
};

// Symbolic mode runs the polynomial-exact battery with parameters free
// (post-constraint). Sampled mode additionally instantiates 3 random rational
// points per parameter for the subspace-level checks.
VerificationReport verify_family(const std::string& id, std::optional<int> p,
                                 const std::string& mode, std::uint64_t sample_seed = 20240601);

// The KForm of the declared contact form of an instance (omega_1 by default).
KForm family_contact_form(const FamilyInstance& inst);

}  // namespace contactlie
