#include "zariski/exactalg.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace zariski::exactalg {

IndexSet::IndexSet(std::vector<int> indices) : v_(std::move(indices)) {
  if (v_.empty()) {
    throw std::invalid_argument("IndexSet: empty index set");
  }
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (v_[i] < 1) {
      throw std::invalid_argument("IndexSet: indices are 1-based");
    }
    if (i > 0 && v_[i] <= v_[i - 1]) {
      throw std::invalid_argument("IndexSet: indices must be strictly increasing");
    }
  }
}

IntSymMatrix::IntSymMatrix(int n, std::vector<Int> row_major)
    : n_(n), e_(std::move(row_major)) {
  if (n_ < 1) {
    throw std::invalid_argument("IntSymMatrix: dimension must be >= 1");
  }
  if (e_.size() != static_cast<std::size_t>(n_) * n_) {
    throw std::invalid_argument("IntSymMatrix: entry count does not match dimension");
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (e_[static_cast<std::size_t>(i) * n_ + j] != e_[static_cast<std::size_t>(j) * n_ + i]) {
        throw std::invalid_argument("IntSymMatrix: matrix is not symmetric");
      }
    }
  }
}

namespace {

std::vector<Int> flatten_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t n = rows.size();
  std::vector<Int> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw std::invalid_argument("IntSymMatrix: ragged row list");
    }
    for (long long v : row) entries.emplace_back(v);
  }
  return entries;
}

}  // namespace

IntSymMatrix::IntSymMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : IntSymMatrix(static_cast<int>(rows.size()), flatten_rows(rows)) {}

const Int& IntSymMatrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw std::out_of_range("IntSymMatrix::at: index out of range");
  }
  return e_[static_cast<std::size_t>(i) * n_ + j];
}

IntSymMatrix IntSymMatrix::negated() const {
  std::vector<Int> neg;
  neg.reserve(e_.size());
  for (const Int& v : e_) neg.push_back(-v);
  return IntSymMatrix(n_, std::move(neg));
}

MatrixParseError::MatrixParseError(std::string msg, int line_, int column_)
    : std::runtime_error(std::move(msg)), line(line_), column(column_) {}

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

// Tokenize on whitespace, dropping '#' comments, tracking 1-based positions.
std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      tokens.push_back({line.substr(start, i - start), lineno, static_cast<int>(start) + 1});
    }
  }
  return tokens;
}

bool looks_like_integer(const std::string& s) {
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Int parse_int_token(const Token& t) {
  if (!looks_like_integer(t.text)) {
    throw MatrixParseError("expected integer, got '" + t.text + "'", t.line, t.column);
  }
  return Int(t.text);
}

}  // namespace

IntSymMatrix parse_matrix(std::istream& in) {
  const std::vector<Token> tokens = tokenize(in);
  if (tokens.empty()) {
    throw MatrixParseError("empty input, expected dimension", 1, 1);
  }
  const Int n_big = parse_int_token(tokens[0]);
  if (n_big < 1 || n_big > 100000) {
    throw MatrixParseError("dimension out of range: " + tokens[0].text, tokens[0].line,
                           tokens[0].column);
  }
  const int n = static_cast<int>(n_big);
  const std::size_t need = static_cast<std::size_t>(n) * n;
  if (tokens.size() < need + 1) {
    const Token& last = tokens.back();
    std::ostringstream msg;
    msg << "expected " << need << " entries for a " << n << "x" << n << " matrix, got "
        << tokens.size() - 1;
    throw MatrixParseError(msg.str(), last.line, last.column);
  }
  if (tokens.size() > need + 1) {
    const Token& extra = tokens[need + 1];
    throw MatrixParseError("unexpected trailing content '" + extra.text + "'", extra.line,
                           extra.column);
  }
  std::vector<Int> entries;
  entries.reserve(need);
  for (std::size_t t = 1; t < tokens.size(); ++t) {
    entries.push_back(parse_int_token(tokens[t]));
  }
  // Validate symmetry here so the diagnostic can point at the offending token.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (entries[static_cast<std::size_t>(i) * n + j] !=
          entries[static_cast<std::size_t>(j) * n + i]) {
        const Token& t = tokens[1 + static_cast<std::size_t>(j) * n + i];
        std::ostringstream msg;
        msg << "matrix not symmetric: entry (" << j + 1 << "," << i + 1 << ") differs from ("
            << i + 1 << "," << j + 1 << ")";
        throw MatrixParseError(msg.str(), t.line, t.column);
      }
    }
  }
  return IntSymMatrix(n, std::move(entries));
}

IntSymMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

std::string format_matrix(const IntSymMatrix& a) {
  std::ostringstream out;
  const int n = a.dim();
  out << n << '\n';
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j > 0) out << ' ';
      out << a.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

IntSymMatrix principal_submatrix(const IntSymMatrix& a, const IndexSet& s) {
  if (s.empty()) {
    throw std::invalid_argument("principal_submatrix: empty index set");
  }
  if (s.max() > a.dim()) {
    throw std::invalid_argument("principal_submatrix: index out of range");
  }
  const auto& idx = s.values();
  const int k = static_cast<int>(idx.size());
  std::vector<Int> entries;
  entries.reserve(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      entries.push_back(a.at(idx[i] - 1, idx[j] - 1));
    }
  }
  return IntSymMatrix(k, std::move(entries));
}

namespace {

// Fraction-free (Bareiss) elimination; every division below is exact. With
// row swaps the pivots are minors of the row-permuted matrix, so the sign of
// the determinant is tracked separately.
Int bareiss_determinant(std::vector<Int> m, int n) {
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    std::size_t kk = static_cast<std::size_t>(k) * n + k;
    if (m[kk] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (m[static_cast<std::size_t>(r) * n + k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int c = k; c < n; ++c) {
        std::swap(m[static_cast<std::size_t>(k) * n + c],
                  m[static_cast<std::size_t>(swap_row) * n + c]);
      }
      sign = -sign;
    }
    const Int pivot = m[kk];
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int& x = m[static_cast<std::size_t>(i) * n + j];
        x = (x * pivot - m[static_cast<std::size_t>(i) * n + k] *
                             m[static_cast<std::size_t>(k) * n + j]) /
            prev;
      }
      m[static_cast<std::size_t>(i) * n + k] = 0;
    }
    prev = pivot;
  }
  Int det = m[static_cast<std::size_t>(n - 1) * n + (n - 1)];
  return sign < 0 ? Int(-det) : det;
}

}  // namespace

Int determinant(const IntSymMatrix& a) { return bareiss_determinant(a.data(), a.dim()); }

bool is_positive_definite(const IntSymMatrix& a) {
  // Without row swaps the k-th Bareiss pivot equals the k-th leading
  // principal minor. Stop at the first non-positive one; elimination never
  // divides by it.
  const int n = a.dim();
  std::vector<Int> m = a.data();
  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    const Int pivot = m[static_cast<std::size_t>(k) * n + k];
    if (pivot <= 0) return false;
    if (k + 1 == n) break;
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int& x = m[static_cast<std::size_t>(i) * n + j];
        x = (x * pivot - m[static_cast<std::size_t>(i) * n + k] *
                             m[static_cast<std::size_t>(k) * n + j]) /
            prev;
      }
    }
    prev = pivot;
  }
  return true;
}

bool is_negative_definite(const IntSymMatrix& a) { return is_positive_definite(a.negated()); }

std::vector<Rat> solve(const IntSymMatrix& a, const std::vector<Int>& b) {
  const int n = a.dim();
  if (b.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("solve: right-hand side has wrong length");
  }
  // Fraction-free elimination on the augmented matrix, then exact rational
  // back substitution.
  const int w = n + 1;
  std::vector<Int> m(static_cast<std::size_t>(n) * w);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(i) * w + j] = a.at(i, j);
    }
    m[static_cast<std::size_t>(i) * w + n] = b[i];
  }
  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    if (m[static_cast<std::size_t>(k) * w + k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (m[static_cast<std::size_t>(r) * w + k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) throw SingularMatrixError("solve: matrix is singular");
      for (int c = k; c < w; ++c) {
        std::swap(m[static_cast<std::size_t>(k) * w + c],
                  m[static_cast<std::size_t>(swap_row) * w + c]);
      }
    }
    const Int pivot = m[static_cast<std::size_t>(k) * w + k];
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < w; ++j) {
        Int& x = m[static_cast<std::size_t>(i) * w + j];
        x = (x * pivot - m[static_cast<std::size_t>(i) * w + k] *
                             m[static_cast<std::size_t>(k) * w + j]) /
            prev;
      }
      m[static_cast<std::size_t>(i) * w + k] = 0;
    }
    prev = pivot;
  }
  std::vector<Rat> x(n);
  for (int i = n - 1; i >= 0; --i) {
    Rat sum(m[static_cast<std::size_t>(i) * w + n]);
    for (int j = i + 1; j < n; ++j) {
      sum -= Rat(m[static_cast<std::size_t>(i) * w + j]) * x[j];
    }
    x[i] = sum / Rat(m[static_cast<std::size_t>(i) * w + i]);
  }
  return x;
}

}  // namespace zariski::exactalg
