#include "zariski/chambers.hpp"

#include <doctest.h>

#include <set>

using namespace zariski;
using namespace zariski::chambers;
using exactalg::IndexSet;
using exactalg::Int;
using exactalg::Rat;

TEST_CASE("census of the small surfaces") {
  const ChamberCensus c1 = census(1);
  CHECK(c1.negdef_count == 1);
  CHECK(c1.z == 2);
  CHECK(c1.max_support == 1);
  CHECK(c1.per_cardinality == std::map<std::size_t, std::uint64_t>{{1, 1}});

  const ChamberCensus c2 = census(2);
  CHECK(c2.negdef_count == 4);
  CHECK(c2.z == 5);
  CHECK(c2.per_cardinality == std::map<std::size_t, std::uint64_t>{{1, 3}, {2, 1}});

  const std::uint64_t expected_z[] = {2, 5, 18, 76, 393, 2764};
  for (int r = 1; r <= 6; ++r) {
    const ChamberCensus c = census(r);
    CHECK(c.z == expected_z[r - 1]);
    CHECK(c.z == c.negdef_count + 1);
    CHECK(c.max_support == static_cast<std::size_t>(r));
    std::uint64_t total = 0;
    for (const auto& [card, count] : c.per_cardinality) {
      CHECK(card <= c.max_support);
      total += count;
    }
    CHECK(total == c.negdef_count);
    // the trivial bound 2^N; equality holds only for r = 1 (z = 2 = 2^1)
    const std::size_t n_curves = delpezzo::generate_curves(r).size();
    CHECK(Int(c.z) <= (Int(1) << n_curves));
    if (r >= 2) CHECK(Int(c.z) < (Int(1) << n_curves));
  }
}

TEST_CASE("chambers supported inside a curve subset") {
  const delpezzo::SurfaceModel m2 = delpezzo::surface_model(2);
  CHECK(chambers_on_subset(m2, IndexSet({1, 2, 3})) == 4);
  CHECK(chambers_on_subset(m2, IndexSet({m2.curve_index("E1")})) == 1);
  CHECK(chambers_on_subset(
            m2, IndexSet({m2.curve_index("E1"), m2.curve_index("C1_12")})) == 2);
  CHECK_THROWS_AS(chambers_on_subset(m2, IndexSet({4})), std::invalid_argument);

  for (int r = 1; r <= 4; ++r) {
    const delpezzo::SurfaceModel m = delpezzo::surface_model(r);
    std::vector<int> all(m.matrix.dim());
    for (int i = 0; i < m.matrix.dim(); ++i) all[i] = i + 1;
    CHECK(chambers_on_subset(m, IndexSet(all)) == census(r).negdef_count);
  }
}

TEST_CASE("chamber representatives on the two-point blow-up") {
  const delpezzo::SurfaceModel m2 = delpezzo::surface_model(2);

  const ZariskiRepresentative rep = chamber_representative(m2, IndexSet({1}));
  CHECK(rep.coefficients == std::vector<Rat>{Rat(1)});
  CHECK(rep.nef_part.d == 3);
  CHECK(rep.nef_part.m == std::vector<Rat>{Rat(0), Rat(1)});  // P = 3H - E2
  CHECK(rep.k_scale == 2);
  CHECK(pair(rep.nef_part, m2.curves[0].cls) == 0);
  CHECK(pair(rep.nef_part, m2.curves[1].cls) == 1);
  CHECK(pair(rep.nef_part, m2.curves[2].cls) == 2);

  const ZariskiRepresentative rep12 = chamber_representative(m2, IndexSet({1, 2}));
  CHECK(rep12.coefficients == std::vector<Rat>{Rat(1), Rat(1)});
  CHECK(rep12.nef_part.d == 3);
  CHECK(rep12.nef_part.m == std::vector<Rat>{Rat(0), Rat(0)});  // P = 3H

  CHECK_THROWS_AS(chamber_representative(m2, IndexSet({1, 3})), NotAChamberError);
  CHECK_THROWS_AS(chamber_representative(m2, IndexSet({7})), std::invalid_argument);
}

TEST_CASE("ample screen rejects non-ample classes") {
  const delpezzo::SurfaceModel m2 = delpezzo::surface_model(2);
  // H is nef but pairs to zero with the exceptional curves
  CHECK_THROWS_AS(
      chamber_representative(m2, IndexSet({1}), delpezzo::DivisorClass{1, {0, 0}}),
      NotAmpleError);
  CHECK_THROWS_AS(
      chamber_representative(m2, IndexSet({1}), delpezzo::DivisorClass{0, {-1, 0}}),
      NotAmpleError);
  CHECK_THROWS_AS(
      chamber_representative(m2, IndexSet({1}), delpezzo::DivisorClass{3, {1, 1, 1}}),
      std::invalid_argument);
  // 2H - E1 - E2 is big but pairs to zero with the line through the points
  CHECK_THROWS_AS(
      chamber_representative(m2, IndexSet({1}), delpezzo::DivisorClass{2, {1, 1}}),
      NotAmpleError);
  // a genuinely ample non-default class works and is recorded
  const ZariskiRepresentative rep =
      chamber_representative(m2, IndexSet({1}), delpezzo::DivisorClass{5, {3, 1}});
  CHECK(rep.ample == delpezzo::DivisorClass{5, {3, 1}});
  CHECK(rep.coefficients == std::vector<Rat>{Rat(3)});
  CHECK(rep.k_scale == 4);
}

TEST_CASE("representatives on a larger surface verify exactly") {
  const delpezzo::SurfaceModel m5 = delpezzo::surface_model(5);
  std::vector<IndexSet> supports;
  enumerator::enumerate_posdef(m5.matrix.negated(),
                               [&](const IndexSet& s) { supports.push_back(s); });
  REQUIRE(supports.size() == 392);
  for (std::size_t t = 0; t < supports.size(); t += 13) {
    const ZariskiRepresentative rep = chamber_representative(m5, supports[t]);
    for (const Rat& a : rep.coefficients) CHECK(a >= 0);
    for (std::size_t c = 0; c < m5.curves.size(); ++c) {
      const Rat v = pair(rep.nef_part, m5.curves[c].cls);
      const auto& idx = rep.support.values();
      if (std::binary_search(idx.begin(), idx.end(), static_cast<int>(c) + 1)) {
        CHECK(v == 0);
      } else {
        CHECK(v > 0);
      }
    }
  }
}

TEST_CASE("verify_tables") {
  const TableReport report = verify_tables(4);
  CHECK(report.checks.size() == 16);
  CHECK(report.all_pass());

  ExpectedTables corrupted = expected_tables();
  corrupted.z[2] = 999;
  const TableReport bad = verify_tables(3, &corrupted);
  CHECK_FALSE(bad.all_pass());
  int failing = 0;
  for (const auto& c : bad.checks) {
    if (!c.pass) ++failing;
  }
  CHECK(failing == 1);
}

TEST_CASE("census text rendering") {
  const std::string text = to_text(census(3), false);
  CHECK(text.find("r = 3\n") != std::string::npos);
  CHECK(text.find("z = 18\n") != std::string::npos);
  CHECK(text.find("negdef_count = 17\n") != std::string::npos);
  CHECK(text.find("per_cardinality") == std::string::npos);
  const std::string with_pc = to_text(census(1), true);
  CHECK(with_pc.find("per_cardinality = {1: 1}\n") != std::string::npos);
}
