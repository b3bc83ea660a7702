#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace zariski::exactalg {

// All decisions (determinant signs, definiteness, solves) are made in exact
// arithmetic; no floating point is used anywhere in this module.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Strictly increasing set of 1-based row/column indices. An empty set is
/// only a default-constructed sentinel; operations that take an IndexSet
/// reject it.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<int> indices);

  const std::vector<int>& values() const noexcept { return v_; }
  std::size_t size() const noexcept { return v_.size(); }
  bool empty() const noexcept { return v_.empty(); }
  int max() const { return v_.back(); }

  auto operator<=>(const IndexSet&) const = default;

 private:
  std::vector<int> v_;
};

/// Square symmetric integer matrix. Symmetry and n >= 1 are enforced at
/// construction.
class IntSymMatrix {
 public:
  IntSymMatrix(int n, std::vector<Int> row_major);
  IntSymMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  int dim() const noexcept { return n_; }
  const Int& at(int i, int j) const;  // 0-based, bounds-checked
  const std::vector<Int>& data() const noexcept { return e_; }

  IntSymMatrix negated() const;

  bool operator==(const IntSymMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<Int> e_;  // row-major
};

struct MatrixParseError : std::runtime_error {
  MatrixParseError(std::string msg, int line, int column);
  int line;
  int column;
};

struct SingularMatrixError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Text format shared with the CLI: first token n, then n*n integers
/// row-major, whitespace-delimited; '#' starts a comment running to end of
/// line. Symmetry is validated on load.
IntSymMatrix parse_matrix(std::istream& in);
IntSymMatrix parse_matrix(const std::string& text);

/// One line "n", then n lines of n space-separated integers.
std::string format_matrix(const IntSymMatrix& a);

/// The |S| x |S| matrix (a[i][j]) for i, j in S, in ascending index order.
IntSymMatrix principal_submatrix(const IntSymMatrix& a, const IndexSet& s);

/// Exact determinant (fraction-free elimination over unbounded integers).
Int determinant(const IntSymMatrix& a);

/// Sylvester criterion: all leading principal minors strictly positive.
/// A zero minor (semidefinite boundary) counts as not definite.
bool is_positive_definite(const IntSymMatrix& a);

bool is_negative_definite(const IntSymMatrix& a);

/// Unique exact rational solution x of a*x = b; throws SingularMatrixError
/// if a is singular.
std::vector<Rat> solve(const IntSymMatrix& a, const std::vector<Int>& b);

}  // namespace zariski::exactalg
