#pragma once

#include <string>
#include <vector>

#include "rook/exactmath/rational.hpp"

namespace rook {

// Exact integer sequence together with where it came from.
struct SeqTable {
  std::string name;
  std::vector<Integer> terms;
  std::string provenance;  // "dp", "recurrence" or "series"
};

inline bool same_terms(const SeqTable& a, const SeqTable& b) { return a.terms == b.terms; }

}  // namespace rook
