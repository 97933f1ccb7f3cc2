#pragma once

#include <string>
#include <vector>

#include "contactlie/families.hpp"

namespace contactlie {

// One correction applied to a published classification table. The printed
// build reproduces the source text as closely as a well-formed table allows;
// the catalog carries the corrected version. Justification tags follow the
// external errata-file format: d2=0 | darboux | eigenvalue-pairing.
struct Erratum {
  std::string family_id;
  std::string printed_fragment;
  std::string corrected_fragment;
  std::string justification;
  // The printed table (whole family) with only this family's errata left
  // unapplied; p used for generic families.
  int p = 0;
  std::function<FamilyBuild()> printed_build;
};

const std::vector<Erratum>& errata();

// Renders the plain-text errata file content (one entry per correction).
std::string errata_file_text();

}  // namespace contactlie
