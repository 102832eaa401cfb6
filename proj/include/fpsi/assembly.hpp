#pragma once

#include "fpsi/fem.hpp"
#include "fpsi/sparse.hpp"

#include <array>

namespace fpsi {

/// Dofs of triangle `k` in a P1 band space.
inline std::array<int, 3> band_cell_dofs(const Discretization& d, const RowBandSpace& s, int k) {
  const auto& t = d.mesh.triangles[k];
  return {s.dof(t[0]), s.dof(t[1]), s.dof(t[2])};
}

/// Component-major vector dofs [x0 x1 x2 y0 y1 y2] with y offset `n`.
inline std::array<int, 6> vector_cell_dofs(const std::array<int, 3>& s, int n) {
  return {s[0], s[1], s[2], n + s[0], n + s[1], n + s[2]};
}

inline std::array<int, 12> vector_cell_dofs(const std::array<int, 6>& s, int n) {
  std::array<int, 12> out{};
  for (int i = 0; i < 6; ++i) {
    out[i] = s[i];
    out[6 + i] = n + s[i];
  }
  return out;
}

/// Adds `kernel(geometry)` for every triangle in `tris`, with row and column
/// dofs given by `dofs(k)`, shifted by the block offsets.
template <class Kernel, class RowDofs, class ColDofs>
void add_cells(TripletList& t, const Discretization& d, const std::vector<int>& tris,
               const RowDofs& row_dofs, const ColDofs& col_dofs, int row_off, int col_off,
               const Kernel& kernel) {
  for (int k : tris) {
    const auto g = triangle_geometry<double>(d.triangle_coords(k));
    const auto B = kernel(g);
    auto r = row_dofs(k);
    auto c = col_dofs(k);
    for (auto& i : r) i += row_off;
    for (auto& j : c) j += col_off;
    t.add_block(r, c, B);
  }
}

/// Scatters a line matrix into system dofs through `row_map` / `col_map`.
template <class RowMap, class ColMap>
void add_line_matrix(TripletList& t, const SparseMatrix& L, double scale, const RowMap& row_map,
                     const ColMap& col_map) {
  if (scale == 0.0) return;
  for (int k = 0; k < L.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(L, k); it; ++it)
      t.add(row_map(static_cast<int>(it.row())), col_map(static_cast<int>(it.col())),
            scale * it.value());
}

}  // namespace fpsi
