#include "zariski/delpezzo.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace zariski::delpezzo {

namespace {

void check_r(int r) {
  if (r < 1 || r > 8) {
    throw std::invalid_argument("blow-up count r must be in 1..8, got " + std::to_string(r));
  }
}

int sign_of(int x) { return x > 0 ? 1 : -1; }

}  // namespace

long long pair(const DivisorClass& a, const DivisorClass& b) {
  if (a.r() != b.r()) {
    throw std::invalid_argument("pair: classes live on different surfaces");
  }
  long long p = static_cast<long long>(a.d) * b.d;
  for (int i = 0; i < a.r(); ++i) {
    p -= static_cast<long long>(a.m[i]) * b.m[i];
  }
  return p;
}

Rat pair(const RationalDivisorClass& a, const DivisorClass& b) {
  if (a.m.size() != b.m.size()) {
    throw std::invalid_argument("pair: classes live on different surfaces");
  }
  Rat p = a.d * Rat(b.d);
  for (std::size_t i = 0; i < a.m.size(); ++i) {
    p -= a.m[i] * Rat(b.m[i]);
  }
  return p;
}

long long pair(const CurveClass& a, const CurveClass& b) { return pair(a.cls, b.cls); }

int star(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a) {
    if (x == 0) throw std::invalid_argument("star: tuple entries must be nonzero");
  }
  for (int y : b) {
    if (y == 0) throw std::invalid_argument("star: tuple entries must be nonzero");
  }
  int sum = 0;
  for (int x : a) {
    for (int y : b) {
      if (std::abs(x) == std::abs(y)) sum += sign_of(x) * sign_of(y);
    }
  }
  return sum;
}

std::string CurveClass::label() const {
  if (family == Family::E) return "E" + std::to_string(index[0]);
  std::string s = "C";
  s += static_cast<char>('0' + static_cast<int>(family));  // C1..C6
  if (index.empty()) return s;
  s += '_';
  // C3 on the 8-point surface carries an ordered index pair; separate the
  // two so C3_1_2 and C3_2_1 stay distinct from a hypothetical C3_12.
  const bool separate = family == Family::C3 && index.size() == 2;
  for (std::size_t t = 0; t < index.size(); ++t) {
    if (t > 0 && separate) s += '_';
    s += std::to_string(index[t]);
  }
  return s;
}

namespace {

void validate_curve(const CurveClass& c) {
  long long sq = pair(c.cls, c.cls);
  long long sm = 0;
  for (int v : c.cls.m) sm += v;
  const long long anti_deg = 3LL * c.cls.d - sm;
  if (sq != -1 || anti_deg != 1) {
    throw std::logic_error("generated class violates C^2 = -1, -K.C = 1: " + c.label());
  }
  if (c.family == Family::E) {
    int minus_ones = 0;
    for (int v : c.cls.m) {
      if (v == -1) ++minus_ones;
      else if (v != 0) throw std::logic_error("bad exceptional class: " + c.label());
    }
    if (c.cls.d != 0 || minus_ones != 1) {
      throw std::logic_error("bad exceptional class: " + c.label());
    }
  } else {
    if (c.cls.d < 1) throw std::logic_error("non-exceptional class with d < 1: " + c.label());
    for (int v : c.cls.m) {
      if (v < 0) throw std::logic_error("negative multiplicity on " + c.label());
    }
  }
}

}  // namespace

std::vector<CurveClass> generate_curves(int r) {
  check_r(r);
  std::vector<CurveClass> out;
  const std::vector<int> zeros(r, 0);
  const std::vector<int> ones(r, 1);
  const std::vector<int> twos(r, 2);

  // Exceptional divisors over the blown-up points.
  for (int i = 1; i <= r; ++i) {
    std::vector<int> m = zeros;
    m[i - 1] = -1;
    out.push_back({Family::E, {i}, {0, std::move(m)}});
  }
  // Lines through two of the points.
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      std::vector<int> m = zeros;
      m[i - 1] = m[j - 1] = 1;
      out.push_back({Family::C1, {i, j}, {1, std::move(m)}});
    }
  }
  // Conics through five of the points.
  if (r == 5) {
    out.push_back({Family::C2, {}, {2, ones}});
  } else if (r == 6) {
    for (int i = 1; i <= r; ++i) {
      std::vector<int> m = ones;
      m[i - 1] = 0;
      out.push_back({Family::C2, {i}, {2, std::move(m)}});
    }
  } else if (r == 7) {
    for (int i = 1; i <= r; ++i) {
      for (int j = i + 1; j <= r; ++j) {
        std::vector<int> m = ones;
        m[i - 1] = m[j - 1] = 0;
        out.push_back({Family::C2, {i, j}, {2, std::move(m)}});
      }
    }
  } else if (r == 8) {
    for (int i = 1; i <= r; ++i) {
      for (int j = i + 1; j <= r; ++j) {
        for (int k = j + 1; k <= r; ++k) {
          std::vector<int> m = ones;
          m[i - 1] = m[j - 1] = m[k - 1] = 0;
          out.push_back({Family::C2, {i, j, k}, {2, std::move(m)}});
        }
      }
    }
  }
  // Cubics through seven points, double in one of them.
  if (r == 7) {
    for (int i = 1; i <= r; ++i) {
      std::vector<int> m = ones;
      m[i - 1] = 2;
      out.push_back({Family::C3, {i}, {3, std::move(m)}});
    }
  } else if (r == 8) {
    for (int i = 1; i <= r; ++i) {
      for (int j = 1; j <= r; ++j) {
        if (j == i) continue;
        std::vector<int> m = ones;
        m[i - 1] = 2;
        m[j - 1] = 0;
        out.push_back({Family::C3, {i, j}, {3, std::move(m)}});
      }
    }
  }
  if (r == 8) {
    // Quartics double in three points.
    for (int i = 1; i <= r; ++i) {
      for (int j = i + 1; j <= r; ++j) {
        for (int k = j + 1; k <= r; ++k) {
          std::vector<int> m = ones;
          m[i - 1] = m[j - 1] = m[k - 1] = 2;
          out.push_back({Family::C4, {i, j, k}, {4, std::move(m)}});
        }
      }
    }
    // Quintics double in six points.
    for (int i = 1; i <= r; ++i) {
      for (int j = i + 1; j <= r; ++j) {
        std::vector<int> m = twos;
        m[i - 1] = m[j - 1] = 1;
        out.push_back({Family::C5, {i, j}, {5, std::move(m)}});
      }
    }
    // Sextics double in seven points, triple in one.
    for (int i = 1; i <= r; ++i) {
      std::vector<int> m = twos;
      m[i - 1] = 3;
      out.push_back({Family::C6, {i}, {6, std::move(m)}});
    }
  }
  for (const CurveClass& c : out) validate_curve(c);
  return out;
}

std::vector<CurveClass> diophantine_classes(int r) {
  check_r(r);
  std::vector<CurveClass> out;
  for (int i = 1; i <= r; ++i) {
    std::vector<int> m(r, 0);
    m[i - 1] = -1;
    out.push_back({Family::E, {i}, {0, std::move(m)}});
  }
  const int d_bound = r <= 6 ? 2 : (r == 7 ? 3 : 6);
  constexpr Family kByDegree[] = {Family::E,  Family::C1, Family::C2, Family::C3,
                                  Family::C4, Family::C5, Family::C6};
  for (int d = 1; d <= d_bound; ++d) {
    std::vector<int> m(r, 0);
    while (true) {
      long long sm = 0, sq = 0;
      for (int v : m) {
        sm += v;
        sq += static_cast<long long>(v) * v;
      }
      if (static_cast<long long>(d) * d - sq == -1 && 3LL * d - sm == 1) {
        out.push_back({kByDegree[d], {}, {d, m}});
      }
      int pos = r - 1;
      while (pos >= 0 && m[pos] == d) {
        m[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++m[pos];
    }
  }
  return out;
}

int closed_form_entry(const CurveClass& a, const CurveClass& b) {
  if (a.cls.r() != 8 || b.cls.r() != 8) {
    throw std::invalid_argument("closed_form_entry: formulas are stated for r = 8");
  }
  const int fa = static_cast<int>(a.family);
  const int fb = static_cast<int>(b.family);
  if (fa > fb) return closed_form_entry(b, a);  // the pairing is symmetric
  const std::vector<int>& i = a.index;
  const std::vector<int>& j = b.index;
  constexpr auto at = [](Family x, Family y) {
    return static_cast<int>(x) * 7 + static_cast<int>(y);
  };
  switch (fa * 7 + fb) {
    case at(Family::E, Family::E):
      return star({-i[0]}, {j[0]});
    case at(Family::E, Family::C1):
      return star({i[0]}, {j[0], j[1]});
    case at(Family::E, Family::C2):
      return 1 - star({i[0]}, {j[0], j[1], j[2]});
    case at(Family::E, Family::C3):
      return 1 + star({i[0]}, {j[0], -j[1]});
    case at(Family::E, Family::C4):
      return 1 + star({i[0]}, {j[0], j[1], j[2]});
    case at(Family::E, Family::C5):
      return 2 - star({i[0]}, {j[0], j[1]});
    case at(Family::E, Family::C6):
      return 2 + star({i[0]}, {j[0]});
    case at(Family::C1, Family::C1):
      return 1 - star({i[0], i[1]}, {j[0], j[1]});
    case at(Family::C1, Family::C2):
      return star({i[0], i[1]}, {j[0], j[1], j[2]});
    case at(Family::C1, Family::C3):
      return 1 + star({i[0], i[1]}, {-j[0], j[1]});
    case at(Family::C1, Family::C4):
      return 2 - star({i[0], i[1]}, {j[0], j[1], j[2]});
    case at(Family::C1, Family::C5):
      return 1 + star({i[0], i[1]}, {j[0], j[1]});
    case at(Family::C1, Family::C6):
      return 2 - star({i[0], i[1]}, {j[0]});
    case at(Family::C2, Family::C2):
      return 2 - star({i[0], i[1], i[2]}, {j[0], j[1], j[2]});
    case at(Family::C2, Family::C3):
      return 1 + star({i[0], i[1], i[2]}, {j[0], -j[1]});
    case at(Family::C2, Family::C4):
      return star({i[0], i[1], i[2]}, {j[0], j[1], j[2]});
    case at(Family::C2, Family::C5):
      return 2 - star({i[0], i[1], i[2]}, {j[0], j[1]});
    case at(Family::C2, Family::C6):
      return 1 + star({i[0], i[1], i[2]}, {j[0]});
    case at(Family::C3, Family::C3):
      return 1 + star({-i[0], i[1]}, {j[0], -j[1]});
    case at(Family::C3, Family::C4):
      return 1 + star({-i[0], i[1]}, {j[0], j[1], j[2]});
    case at(Family::C3, Family::C5):
      return 1 + star({i[0], -i[1]}, {j[0], j[1]});
    case at(Family::C3, Family::C6):
      return 1 + star({-i[0], i[1]}, {j[0]});
    case at(Family::C4, Family::C4):
      return 2 - star({i[0], i[1], i[2]}, {j[0], j[1], j[2]});
    case at(Family::C4, Family::C5):
      return star({i[0], i[1], i[2]}, {j[0], j[1]});
    case at(Family::C4, Family::C6):
      return 1 - star({i[0], i[1], i[2]}, {j[0]});
    case at(Family::C5, Family::C5):
      return 1 - star({i[0], i[1]}, {j[0], j[1]});
    case at(Family::C5, Family::C6):
      return star({i[0], i[1]}, {j[0]});
    case at(Family::C6, Family::C6):
      return star({-i[0]}, {j[0]});
    default:
      throw std::logic_error("closed_form_entry: dispatch table is missing a family pair");
  }
}

DivisorClass anticanonical(int r) {
  check_r(r);
  return {3, std::vector<int>(r, 1)};
}

int SurfaceModel::curve_index(const std::string& label) const {
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (curves[i].label() == label) return static_cast<int>(i) + 1;
  }
  throw std::invalid_argument("no curve named '" + label + "' on this surface");
}

namespace {

// Smallest r' such that the class lives on the blow-up at r' points, i.e.
// the largest point index it touches. Ordering curves by this key makes
// every A_r the leading principal submatrix of A_8.
int first_surface(const CurveClass& c) {
  int mr = 1;
  for (int t = 0; t < c.cls.r(); ++t) {
    if (c.cls.m[t] != 0) mr = t + 1;
  }
  return mr;
}

IntSymMatrix pairing_matrix(const std::vector<CurveClass>& curves) {
  const int n = static_cast<int>(curves.size());
  std::vector<Int> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      entries.emplace_back(pair(curves[i], curves[j]));
    }
  }
  return IntSymMatrix(n, std::move(entries));
}

// The classes of the r-point surface sit inside the 8-point lattice as the
// classes supported on H, E_1..E_r; the r < 8 matrix must reappear as the
// corresponding principal submatrix of the r = 8 one.
void check_embedding(const SurfaceModel& model, const SurfaceModel& full) {
  std::map<std::pair<int, std::vector<int>>, int> by_class;
  for (std::size_t i = 0; i < full.curves.size(); ++i) {
    const DivisorClass& c = full.curves[i].cls;
    by_class[{c.d, c.m}] = static_cast<int>(i);
  }
  std::vector<int> embed(model.curves.size());
  int prev = -1;
  for (std::size_t i = 0; i < model.curves.size(); ++i) {
    std::vector<int> padded = model.curves[i].cls.m;
    padded.resize(8, 0);
    auto it = by_class.find({model.curves[i].cls.d, padded});
    if (it == by_class.end()) {
      throw std::logic_error("class " + model.curves[i].label() +
                             " has no counterpart on the 8-point surface");
    }
    if (it->second <= prev) {
      throw std::logic_error("class embedding is not order-preserving");
    }
    prev = it->second;
    embed[i] = it->second;
  }
  for (std::size_t i = 0; i < embed.size(); ++i) {
    for (std::size_t j = i; j < embed.size(); ++j) {
      if (model.matrix.at(static_cast<int>(i), static_cast<int>(j)) !=
          full.matrix.at(embed[i], embed[j])) {
        throw std::logic_error("intersection matrix disagrees with the r = 8 submatrix");
      }
    }
  }
}

}  // namespace

SurfaceModel surface_model(int r) {
  check_r(r);
  std::vector<CurveClass> curves = generate_curves(r);
  std::stable_sort(curves.begin(), curves.end(), [](const CurveClass& a, const CurveClass& b) {
    return first_surface(a) < first_surface(b);
  });
  IntSymMatrix matrix = pairing_matrix(curves);
  SurfaceModel model{r, std::move(curves), std::move(matrix)};
  if (r < 8) {
    check_embedding(model, surface_model(8));
  }
  return model;
}

std::string format_labels(const SurfaceModel& model) {
  std::ostringstream out;
  for (const CurveClass& c : model.curves) out << c.label() << '\n';
  return out.str();
}

}  // namespace zariski::delpezzo
