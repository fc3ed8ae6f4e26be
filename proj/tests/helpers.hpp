#ifndef EWK_TESTS_HELPERS_HPP
#define EWK_TESTS_HELPERS_HPP

#include <vector>

#include "ewk/module.hpp"

namespace ewk::testing {

inline Mor from_rows(const Field& f, Obj src, Obj dst, const std::vector<std::vector<long>>& rows) {
  Mor m(f, src, dst);
  for (int r = 0; r < dst.dim; ++r)
    for (int c = 0; c < src.dim; ++c) m.set(r, c, rows[r][c]);
  return m;
}

inline RightModule module_from_action(const CommMonoid& b, int dim,
                                      const std::vector<std::vector<long>>& action_rows) {
  Obj x{dim};
  return RightModule{b, x, from_rows(b.field, tensor(x, b.carrier), x, action_rows)};
}

// The one-dimensional module over dual_numbers or t_cubed where the
// nilpotent generator acts as zero.
inline RightModule augmentation_module(const CommMonoid& b) {
  Obj x{1};
  Mor act(b.field, tensor(x, b.carrier), x);
  act.set(0, 0, 1);  // v * 1 = v, all other basis elements act as zero
  return RightModule{b, x, act};
}

// Independent brute-force oracle for dim M_b(x,y): the equivariance
// equations are assembled entrywise with explicit loops and solved by a
// local elimination routine; no hom-object or equalizer machinery is used.
inline int module_hom_dim_oracle(const RightModule& x, const RightModule& y) {
  const Field& f = x.over.field;
  const int dx = x.carrier.dim, dy = y.carrier.dim, db = x.over.carrier.dim;
  const int unknowns = dx * dy;  // phi[j][i], index j*dx+i
  std::vector<std::vector<Scalar>> rows;
  for (int jj = 0; jj < dy; ++jj)
    for (int i = 0; i < dx; ++i)
      for (int k = 0; k < db; ++k) {
        std::vector<Scalar> row(static_cast<size_t>(unknowns), Scalar(f));
        for (int l = 0; l < dx; ++l) row[static_cast<size_t>(jj * dx + l)] += x.action.at(l, i * db + k);
        for (int m = 0; m < dy; ++m) row[static_cast<size_t>(m * dx + i)] -= y.action.at(jj, m * db + k);
        rows.push_back(std::move(row));
      }
  // Local elimination, counts the rank.
  int rank = 0;
  for (int col = 0; col < unknowns; ++col) {
    int sel = -1;
    for (size_t r = static_cast<size_t>(rank); r < rows.size(); ++r)
      if (!rows[r][static_cast<size_t>(col)].is_zero()) {
        sel = static_cast<int>(r);
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[static_cast<size_t>(sel)], rows[static_cast<size_t>(rank)]);
    const Scalar inv = rows[static_cast<size_t>(rank)][static_cast<size_t>(col)].inverse();
    for (int c = col; c < unknowns; ++c) rows[static_cast<size_t>(rank)][static_cast<size_t>(c)] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank) continue;
      const Scalar v = rows[r][static_cast<size_t>(col)];
      if (v.is_zero()) continue;
      for (int c = col; c < unknowns; ++c)
        rows[r][static_cast<size_t>(c)] -= v * rows[static_cast<size_t>(rank)][static_cast<size_t>(c)];
    }
    ++rank;
    if (rank == static_cast<int>(rows.size())) break;
  }
  return unknowns - rank;
}

}  // namespace ewk::testing

#endif  // EWK_TESTS_HELPERS_HPP
