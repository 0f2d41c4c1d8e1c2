#include "bubblecert/lattice.hpp"

namespace bubblecert {

Eigen::Matrix<Rational, Eigen::Dynamic, 1> congruence_diagonal(RationalMatrix g) {
  const Eigen::Index n = g.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (g(i, i) == 0) {
      Eigen::Index j = i + 1;
      while (j < n && g(j, j) == 0) ++j;
      if (j < n) {
        g.row(i).swap(g.row(j));
        g.col(i).swap(g.col(j));
      } else {
        j = i + 1;
        while (j < n && g(i, j) == 0) ++j;
        if (j == n) continue;  // row i is already zero off the diagonal
        // e_i -> e_i + e_j makes the pivot 2 g(i,j) != 0.
        g.row(i) += g.row(j);
        g.col(i) += g.col(j);
      }
    }
    const Rational pivot = g(i, i);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (g(j, i) == 0) continue;
      const Rational f = g(j, i) / pivot;
      g.row(j) -= f * g.row(i);
      g.col(j) -= f * g.col(i);
    }
  }
  return g.diagonal();
}

}  // namespace bubblecert
