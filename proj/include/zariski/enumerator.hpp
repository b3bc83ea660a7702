#pragma once

#include "zariski/exactalg.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace zariski::enumerator {

using exactalg::IndexSet;
using exactalg::IntSymMatrix;

struct EnumerationStats {
  std::uint64_t det_evaluations = 0;  // one per executed determinant-sign test
  std::uint64_t sets_emitted = 0;
  std::size_t max_cardinality = 0;  // largest |S| emitted, 0 if none
};

using Visitor = std::function<void(const IndexSet&)>;

/// Backtracking enumeration of all nonempty S with A_S positive definite.
/// Visits each qualifying set exactly once, in the strictly increasing
/// set order used by the search (an emitted set is always followed by
/// strictly larger ones). Callback exceptions propagate; the enumeration
/// state is abandoned.
EnumerationStats enumerate_posdef(const IntSymMatrix& a, const Visitor& visit);

struct CountResult {
  std::uint64_t count = 0;
  std::map<std::size_t, std::uint64_t> per_cardinality;
  EnumerationStats stats;
};

/// Counting wrapper over enumerate_posdef; allocates only the histogram.
CountResult count_posdef(const IntSymMatrix& a);

/// Independent oracle: tests every nonempty subset with
/// exactalg::is_positive_definite. Refuses dimensions above max_dim.
std::vector<IndexSet> brute_force_posdef(const IntSymMatrix& a, int max_dim = 20);

/// Largest cardinality of a positive definite principal submatrix (0 if none).
std::size_t max_posdef_cardinality(const IntSymMatrix& a);

}  // namespace zariski::enumerator
