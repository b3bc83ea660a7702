#include "zariski/enumerator.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace zariski::enumerator {

namespace {

using exactalg::Int;

// Incremental fraction-free factorization of the chain of nested principal
// submatrices maintained by the search. rows[t] stores the values the t-th
// chain row takes just before each elimination step (by symmetry of the
// reduced matrix these are also the pivot-row entries in its column),
// followed by its own pivot; the pivots are the nested leading minors of the
// chain. Testing a new column j is a single bordering elimination, O(t^2),
// and its final pivot is det of the extended submatrix. All divisions are
// exact (Bareiss), and every stored value is a minor of some tested
// submatrix, which is what the caller's dimension bound is sized against.
template <class Num, class Wide>
struct BorderingChain {
  const Num* a = nullptr;  // row-major n x n
  int n = 0;
  std::vector<int> cols;  // 0-based chain indices
  std::vector<std::vector<Num>> rows;
  std::vector<Num> scratch;

  void reset(const Num* data, int dim) {
    a = data;
    n = dim;
    cols.clear();
    rows.clear();
  }

  int depth() const { return static_cast<int>(cols.size()); }

  Num border_det(int j) {
    const int t = depth();
    scratch.resize(static_cast<std::size_t>(t) + 1);
    const Num* arow = a + static_cast<std::size_t>(j) * n;
    for (int c = 0; c < t; ++c) scratch[c] = arow[cols[c]];
    Num diag = arow[j];
    Num prev = 1;
    for (int i = 0; i < t; ++i) {
      const Num wi = scratch[i];
      const Num pi = rows[i][i];
      for (int c = i + 1; c < t; ++c) {
        scratch[c] = static_cast<Num>((Wide(scratch[c]) * pi - Wide(wi) * rows[c][i]) / prev);
      }
      diag = static_cast<Num>((Wide(diag) * pi - Wide(wi) * wi) / prev);
      prev = pi;
    }
    scratch[t] = diag;
    return diag;
  }

  // Accept the most recent border_det(j) into the chain.
  void push(int j) {
    cols.push_back(j);
    rows.push_back(scratch);
  }

  void pop() {
    cols.pop_back();
    rows.pop_back();
  }
};

class Engine {
 public:
  explicit Engine(const IntSymMatrix& a) : a_(a), n_(a.dim()) {
    // Depth budget for the int64 kernel: minors of a k-dim submatrix are
    // bounded by (sqrt(k)*amax)^k (Hadamard), and the update multiplies two
    // of them into an int128, so require k^k * amax^(2k) <= 2^124. Beyond
    // that depth the chain is widened to unbounded integers.
    Int amax = 0;
    for (const Int& v : a_.data()) {
      if (v > amax) amax = v;
      if (-v > amax) amax = -v;
    }
    safe_dim_ = 0;
    if (amax <= (Int(1) << 62)) {
      const Int limit = Int(1) << 124;
      const Int amax2 = amax * amax;
      for (int k = 1; k <= n_; ++k) {
        if (pow(Int(k), static_cast<unsigned>(k)) * pow(amax2, static_cast<unsigned>(k)) > limit) {
          break;
        }
        safe_dim_ = k;
      }
    }
    if (safe_dim_ > 0) {
      a64_.reserve(a_.data().size());
      for (const Int& v : a_.data()) a64_.push_back(static_cast<std::int64_t>(v));
      fast_.reset(a64_.data(), n_);
      promoted_ = false;
    } else {
      big_.reset(a_.data().data(), n_);
      promoted_ = true;
    }
  }

  // The backtracking loop, as printed, over the current set S and cursor k;
  // the factor chain always mirrors S minus its largest element.
  template <class Sink>
  EnumerationStats run(Sink&& sink) {
    EnumerationStats st;
    std::vector<int> s{1};
    int k = 1;
    while (!s.empty()) {
      assert(k == s.back());
      assert(posdef_check(s, /*drop_last=*/true));
      const bool accepted = det_sign(k - 1) > 0;
      ++st.det_evaluations;
      if (accepted) {
        ++st.sets_emitted;
        if (s.size() > st.max_cardinality) st.max_cardinality = s.size();
        sink(s);
      } else {
        s.pop_back();  // S <- S \ {k}
      }
      assert(s.empty() || k >= s.back());
      assert(posdef_check(s, /*drop_last=*/false));
      if (k < n_) {
        if (accepted) push_chain(k - 1);
        ++k;
        s.push_back(k);  // S <- S u {k}
      } else {
        if (!s.empty() && s.back() == k) s.pop_back();  // S <- S \ {k}
        if (!s.empty()) {
          k = s.back();  // k <- max S
          s.pop_back();  // S <- S \ {k}
          pop_chain();
          ++k;
          s.push_back(k);  // S <- S u {k}
        }
      }
    }
    return st;
  }

 private:
  int det_sign(int j) {
    if (!promoted_ && fast_.depth() + 1 > safe_dim_) promote();
    if (!promoted_) {
      const std::int64_t d = fast_.border_det(j);
      return d > 0 ? 1 : (d < 0 ? -1 : 0);
    }
    return big_.border_det(j).sign();
  }

  void push_chain(int j) {
    if (promoted_) {
      big_.push(j);
    } else {
      fast_.push(j);
    }
  }

  void pop_chain() {
    if (promoted_) {
      big_.pop();
    } else {
      fast_.pop();
    }
  }

  void promote() {
    big_.reset(a_.data().data(), n_);
    big_.cols = fast_.cols;
    big_.rows.reserve(fast_.rows.size());
    for (const auto& row : fast_.rows) {
      big_.rows.emplace_back(row.begin(), row.end());
    }
    fast_.reset(nullptr, 0);
    promoted_ = true;
  }

#ifndef NDEBUG
  bool posdef_check(const std::vector<int>& s, bool drop_last) const {
    std::vector<int> t(s.begin(), s.end() - (drop_last ? 1 : 0));
    if (t.empty()) return true;  // the empty matrix counts as positive definite
    return exactalg::is_positive_definite(
        exactalg::principal_submatrix(a_, IndexSet(std::move(t))));
  }
#endif

  const IntSymMatrix& a_;
  int n_;
  int safe_dim_;
  bool promoted_;
  std::vector<std::int64_t> a64_;
  BorderingChain<std::int64_t, __int128> fast_;
  BorderingChain<Int, Int> big_;
};

}  // namespace

EnumerationStats enumerate_posdef(const IntSymMatrix& a, const Visitor& visit) {
  Engine engine(a);
  return engine.run([&](const std::vector<int>& s) { visit(IndexSet(s)); });
}

CountResult count_posdef(const IntSymMatrix& a) {
  CountResult res;
  res.stats = enumerate_posdef(a, [&res](const IndexSet& s) { ++res.per_cardinality[s.size()]; });
  res.count = res.stats.sets_emitted;
  return res;
}

std::vector<IndexSet> brute_force_posdef(const IntSymMatrix& a, int max_dim) {
  const int n = a.dim();
  if (n > max_dim || n > 63) {
    throw std::length_error("brute_force_posdef: dimension " + std::to_string(n) +
                            " above limit " + std::to_string(std::min(max_dim, 63)));
  }
  std::vector<IndexSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint64_t(1) << i)) idx.push_back(i + 1);
    }
    IndexSet s(std::move(idx));
    if (exactalg::is_positive_definite(exactalg::principal_submatrix(a, s))) {
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::size_t max_posdef_cardinality(const IntSymMatrix& a) {
  return count_posdef(a).stats.max_cardinality;
}

}  // namespace zariski::enumerator
