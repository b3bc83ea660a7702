#include "zariski/enumerator.hpp"

#include "zariski/delpezzo.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace zariski;
using namespace zariski::enumerator;
using exactalg::IndexSet;
using exactalg::Int;
using exactalg::IntSymMatrix;

namespace {

std::vector<std::vector<int>> collect(const IntSymMatrix& a, EnumerationStats* stats = nullptr) {
  std::vector<std::vector<int>> sets;
  EnumerationStats st = enumerate_posdef(a, [&](const IndexSet& s) { sets.push_back(s.values()); });
  if (stats) *stats = st;
  return sets;
}

}  // namespace

TEST_CASE("worked examples") {
  EnumerationStats st;
  CHECK(collect(IntSymMatrix{{1}}, &st) == std::vector<std::vector<int>>{{1}});
  CHECK(st.sets_emitted == 1);

  // one positive 2x2 block: exactly 2^2 - 1 positive definite subsets
  const auto sets = collect(IntSymMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}, &st);
  CHECK(sets == std::vector<std::vector<int>>{{1}, {1, 2}, {2}});
  CHECK(st.sets_emitted == 3);
  CHECK(st.max_cardinality == 2);

  CHECK(collect(IntSymMatrix{{-1}}, &st).empty());
  CHECK(st.sets_emitted == 0);
  CHECK(st.max_cardinality == 0);
  CHECK(st.det_evaluations == 1);
}

TEST_CASE("count_posdef on the small blow-up matrices") {
  auto count_for = [](int r) {
    return count_posdef(delpezzo::surface_model(r).matrix.negated());
  };
  const CountResult c1 = count_for(1);
  CHECK(c1.count == 1);
  CHECK(c1.per_cardinality == std::map<std::size_t, std::uint64_t>{{1, 1}});

  const CountResult c2 = count_for(2);
  CHECK(c2.count == 4);
  CHECK(c2.per_cardinality == std::map<std::size_t, std::uint64_t>{{1, 3}, {2, 1}});

  CHECK(count_for(4).count == 75);
}

TEST_CASE("the 27-line surface: emitted family and instrumentation") {
  const CountResult c = count_posdef(delpezzo::surface_model(6).matrix.negated());
  CHECK(c.count == 2763);
  CHECK(c.stats.max_cardinality == 6);
  // The reference count for this run is 15600, reported without a stated
  // convention; one tick per determinant test on our matrix order measures
  // 15907, which must stay within 5% of the reference.
  CHECK(c.stats.det_evaluations == 15907);
  CHECK(c.stats.det_evaluations <= 16380);  // 15600 * 1.05
  CHECK(c.stats.det_evaluations >= 14820);  // 15600 * 0.95
}

TEST_CASE("brute force oracle") {
  auto vecs = [](const std::vector<IndexSet>& sets) { return oracles::as_vectors(sets); };
  CHECK(vecs(brute_force_posdef(IntSymMatrix{{1}})) == std::vector<std::vector<int>>{{1}});
  CHECK(vecs(brute_force_posdef(IntSymMatrix{{2, 1, 0}, {1, 2, 0}, {0, 0, -1}})) ==
        std::vector<std::vector<int>>{{1}, {1, 2}, {2}});
  CHECK(brute_force_posdef(delpezzo::surface_model(3).matrix.negated()).size() == 17);

  const IntSymMatrix big(21, std::vector<Int>(21 * 21, Int(0)));
  CHECK_THROWS_AS(brute_force_posdef(big), std::length_error);
}

TEST_CASE("oracle equivalence on random symmetric matrices") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const IntSymMatrix a = oracles::random_symmetric(rng, n, -3, 3);
    CHECK(oracles::as_vectors(brute_force_posdef(a)) ==
          [&] {
            std::vector<IndexSet> emitted;
            enumerate_posdef(a, [&](const IndexSet& s) { emitted.push_back(s); });
            return oracles::as_vectors(emitted);
          }());
  }
}

TEST_CASE("emission order is strictly increasing and deterministic") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const IntSymMatrix a = oracles::random_symmetric(rng, n, -2, 2);
    EnumerationStats st1, st2;
    const auto run1 = collect(a, &st1);
    const auto run2 = collect(a, &st2);
    CHECK(run1 == run2);
    CHECK(st1.det_evaluations == st2.det_evaluations);
    CHECK(st1.sets_emitted == st2.sets_emitted);
    for (std::size_t i = 1; i < run1.size(); ++i) {
      CHECK(oracles::set_less(run1[i - 1], run1[i], n));
    }
  }
}

TEST_CASE("every emitted set is positive definite and the family is hereditary") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const IntSymMatrix a = oracles::random_symmetric(rng, n, -3, 3);
    std::vector<std::vector<int>> sets = collect(a);
    std::set<std::vector<int>> family(sets.begin(), sets.end());
    for (const auto& s : sets) {
      CHECK(oracles::posdef_by_minors(exactalg::principal_submatrix(a, IndexSet(s))));
      // hereditary: every nonempty subset is emitted too
      for (std::uint32_t mask = 1; mask + 1 < (1u << s.size()); ++mask) {
        std::vector<int> sub;
        for (std::size_t b = 0; b < s.size(); ++b) {
          if (mask & (1u << b)) sub.push_back(s[b]);
        }
        CHECK(family.count(sub) == 1);
      }
    }
  }
}

TEST_CASE("pruning bound and the identity-matrix equality case") {
  std::mt19937 rng(8080);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const IntSymMatrix a = oracles::random_symmetric(rng, n, -2, 2);
    EnumerationStats st;
    collect(a, &st);
    CHECK(st.det_evaluations <= (std::uint64_t(1) << n) - 1);
    CHECK(st.sets_emitted <= st.det_evaluations);
  }
  // identity: every subset is positive definite, so no pruning happens
  for (int n : {1, 4, 10}) {
    std::vector<Int> e(static_cast<std::size_t>(n) * n, Int(0));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = 1;
    EnumerationStats st;
    collect(IntSymMatrix(n, std::move(e)), &st);
    CHECK(st.det_evaluations == (std::uint64_t(1) << n) - 1);
    CHECK(st.sets_emitted == st.det_evaluations);
  }
}

TEST_CASE("visitor exceptions propagate") {
  const IntSymMatrix a{{1, 0}, {0, 1}};
  int visits = 0;
  CHECK_THROWS_AS(enumerate_posdef(a,
                                   [&](const IndexSet&) {
                                     if (++visits == 2) throw std::runtime_error("stop");
                                   }),
                  std::runtime_error);
  CHECK(visits == 2);
}

TEST_CASE("large entries promote the kernel without changing results") {
  // amax ~ 1e9 forces the unbounded-integer chain at depth 3
  std::mt19937 rng(246810);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 6;
    std::vector<Int> e(static_cast<std::size_t>(n) * n);
    std::uniform_int_distribution<long long> dist(-4, 4);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const Int v = (i == j) ? Int(2000000000) + dist(rng)
                               : Int(1000000000) * static_cast<long long>(dist(rng));
        e[static_cast<std::size_t>(i) * n + j] = v;
        e[static_cast<std::size_t>(j) * n + i] = v;
      }
    }
    const IntSymMatrix a(n, std::move(e));
    std::vector<IndexSet> emitted;
    enumerate_posdef(a, [&](const IndexSet& s) { emitted.push_back(s); });
    CHECK(oracles::as_vectors(emitted) == oracles::as_vectors(brute_force_posdef(a)));
  }
}

TEST_CASE("max_posdef_cardinality") {
  CHECK(max_posdef_cardinality(IntSymMatrix{{-1, 0}, {0, -1}}) == 0);
  CHECK(max_posdef_cardinality(IntSymMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}) == 2);
  CHECK(max_posdef_cardinality(delpezzo::surface_model(5).matrix.negated()) == 5);
}
