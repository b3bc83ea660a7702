#pragma once

#include "zariski/delpezzo.hpp"
#include "zariski/enumerator.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zariski::chambers {

using delpezzo::DivisorClass;
using delpezzo::RationalDivisorClass;
using delpezzo::SurfaceModel;
using exactalg::IndexSet;
using exactalg::Int;
using exactalg::Rat;

/// Chamber decomposition census of the big cone of the blow-up at r points:
/// one chamber per negative-definite set of negative curves, plus the nef
/// chamber.
struct ChamberCensus {
  int r = 0;
  std::uint64_t negdef_count = 0;
  std::uint64_t z = 0;  // negdef_count + 1
  std::map<std::size_t, std::uint64_t> per_cardinality;
  std::size_t max_support = 0;
  enumerator::EnumerationStats stats;
  std::int64_t wall_time_ms = 0;
};

ChamberCensus census(int r);

/// Chambers supported inside the given curve set: negative-definite
/// principal submatrices of the restriction of the intersection matrix.
std::uint64_t chambers_on_subset(const SurfaceModel& model, const IndexSet& curves);
std::uint64_t chambers_on_subset(int r, const IndexSet& curves);

struct NotAChamberError : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotAmpleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Exact interior point of a chamber: the nef class P = ample + sum a_i C_i
/// with P.C_j = 0 exactly on the support and P.C > 0 off it.
struct ZariskiRepresentative {
  IndexSet support;
  DivisorClass ample;
  std::vector<Rat> coefficients;  // a_i >= 0, aligned with support
  RationalDivisorClass nef_part;  // P
  Int k_scale;                    // smallest integer > max a_i
};

/// Solves the orthogonality system on the support exactly. The support must
/// be negative definite (NotAChamberError otherwise); a user-supplied ample
/// class must pair positively with every negative curve and itself
/// (NotAmpleError otherwise). Defaults to the anticanonical class.
ZariskiRepresentative chamber_representative(const SurfaceModel& model, const IndexSet& support,
                                             std::optional<DivisorClass> ample = {});
ZariskiRepresentative chamber_representative(int r, const IndexSet& support,
                                             std::optional<DivisorClass> ample = {});

struct TableCheck {
  int r;
  std::string quantity;
  std::uint64_t expected;
  std::uint64_t actual;
  bool pass;
};

struct TableReport {
  std::vector<TableCheck> checks;
  bool all_pass() const;
};

/// Expected values for curve counts, submatrix counts, chamber counts and
/// maximal support sizes, r = 1..8.
struct ExpectedTables {
  std::array<std::uint64_t, 8> curves;
  std::array<std::uint64_t, 8> negdef;
  std::array<std::uint64_t, 8> z;
  std::array<std::uint64_t, 8> max_support;
};

const ExpectedTables& expected_tables();

/// Runs census for r = 1..max_r and compares curve counts, negdef counts,
/// z and max_support against the expected tables (pass/fail per cell).
TableReport verify_tables(int max_r = 8, const ExpectedTables* tables = nullptr);

/// Key/value text rendering of a census ("r = 6", "z = 2764", ...).
std::string to_text(const ChamberCensus& c, bool with_per_cardinality);

}  // namespace zariski::chambers
