#pragma once

#include "zariski/exactalg.hpp"

#include <string>
#include <vector>

namespace zariski::delpezzo {

using exactalg::IndexSet;
using exactalg::Int;
using exactalg::IntSymMatrix;
using exactalg::Rat;

/// Divisor class d*H - sum_i m_i*E_i on the blow-up of the plane at r
/// general points, in the basis (H, E_1, ..., E_r).
struct DivisorClass {
  int d = 0;
  std::vector<int> m;

  int r() const { return static_cast<int>(m.size()); }
  bool operator==(const DivisorClass&) const = default;
};

/// Same class with rational coordinates (nef parts of chamber interiors).
struct RationalDivisorClass {
  Rat d;
  std::vector<Rat> m;
};

/// Intersection pairing: H^2 = 1, E_i^2 = -1, mixed products 0.
long long pair(const DivisorClass& a, const DivisorClass& b);
Rat pair(const RationalDivisorClass& a, const DivisorClass& b);

enum class Family { E, C1, C2, C3, C4, C5, C6 };

/// A negative-curve class: an exceptional divisor or the proper transform of
/// a plane curve of degree d with prescribed multiplicities.
struct CurveClass {
  Family family;
  std::vector<int> index;  // point indices naming the member of the family
  DivisorClass cls;

  std::string label() const;  // "E1", "C1_12", "C2_123", "C3_1_2", ...
};

long long pair(const CurveClass& a, const CurveClass& b);

/// Signed-tuple contraction: sum over entry pairs of
/// sign(a_u)*sign(b_v)*[|a_u| == |b_v|]. Entries must be nonzero.
int star(const std::vector<int>& a, const std::vector<int>& b);

/// All negative-curve classes on the blow-up at r points, exceptional
/// classes first, then each curve family in lexicographic index order.
std::vector<CurveClass> generate_curves(int r);

/// Independent oracle: exhaustive scan of d^2 - sum m_i^2 = -1,
/// 3d - sum m_i = 1 over 1 <= d <= bound(r), 0 <= m_i <= d, plus the
/// exceptional classes.
std::vector<CurveClass> diophantine_classes(int r);

/// Closed-form intersection number for r = 8, dispatched on the family
/// pair; cross-check layer for pair().
int closed_form_entry(const CurveClass& a, const CurveClass& b);

/// 3H - E_1 - ... - E_r, ample on these surfaces.
DivisorClass anticanonical(int r);

/// Negative curves of the blow-up at r points plus their intersection
/// matrix. Rows are grouped by the first surface in the tower carrying the
/// class, family order within each group, so every A_r is the leading
/// principal submatrix of A_8.
struct SurfaceModel {
  int r = 0;
  std::vector<CurveClass> curves;
  IntSymMatrix matrix;

  /// 1-based row index for a curve label; throws std::invalid_argument if
  /// the label names no curve on this surface.
  int curve_index(const std::string& label) const;
};

/// Builds the model; for r < 8 the matrix is verified against the
/// corresponding principal submatrix of the r = 8 matrix under the
/// class-containment embedding.
SurfaceModel surface_model(int r);

/// Sidecar listing: one curve label per matrix row, in matrix order.
std::string format_labels(const SurfaceModel& model);

}  // namespace zariski::delpezzo
