#include "tableau.hpp"

namespace growth::geometry::detail {

Tableau::Tableau(std::size_t rows, std::size_t cols)
    : a(rows, std::vector<AlgebraicNumber>(cols)), b(rows), basis(rows), blocked(cols, false),
      d_(cols) {}

void Tableau::set_objective(const std::vector<AlgebraicNumber>& cost) {
  d_ = cost;
  d_.resize(cols());
  z_ = AlgebraicNumber();
  for (std::size_t r = 0; r < rows(); ++r) {
    const AlgebraicNumber& cb = d_[basis[r]];
    if (cb.is_zero()) continue;
    const AlgebraicNumber k = cb;
    for (std::size_t c = 0; c < cols(); ++c)
      if (!a[r][c].is_zero()) d_[c] -= k * a[r][c];
    z_ += k * b[r];
  }
}

void Tableau::pivot(std::size_t r, std::size_t c) {
  const AlgebraicNumber inv = a[r][c].inverse();
  auto& pr = a[r];
  for (auto& x : pr)
    if (!x.is_zero()) x *= inv;
  b[r] *= inv;
  for (std::size_t i = 0; i < rows(); ++i) {
    if (i == r || a[i][c].is_zero()) continue;
    const AlgebraicNumber k = a[i][c];
    for (std::size_t j = 0; j < cols(); ++j)
      if (!pr[j].is_zero()) a[i][j] -= k * pr[j];
    if (!b[r].is_zero()) b[i] -= k * b[r];
  }
  if (!d_[c].is_zero()) {
    const AlgebraicNumber k = d_[c];
    for (std::size_t j = 0; j < cols(); ++j)
      if (!pr[j].is_zero()) d_[j] -= k * pr[j];
    z_ += k * b[r];
  }
  basis[r] = c;
}

Tableau::Outcome Tableau::run(const std::function<bool(const AlgebraicNumber&)>& stop) {
  while (true) {
    // Bland: lowest-index improving column, then lowest-index leaving basic variable
    std::size_t enter = cols();
    for (std::size_t c = 0; c < cols(); ++c) {
      if (blocked[c] || d_[c].is_zero()) continue;
      if (d_[c].sign() > 0) {
        enter = c;
        break;
      }
    }
    if (enter == cols()) return Outcome::Optimal;

    std::size_t leave = rows();
    for (std::size_t r = 0; r < rows(); ++r) {
      const AlgebraicNumber& x = a[r][enter];
      if (x.is_zero() || x.sign() <= 0) continue;
      if (leave == rows()) {
        leave = r;
        continue;
      }
      // b[r]/x vs b[leave]/a[leave][enter], both denominators positive
      int cmp = (b[r] * a[leave][enter] - b[leave] * x).sign();
      if (cmp < 0 || (cmp == 0 && basis[r] < basis[leave])) leave = r;
    }
    if (leave == rows()) return Outcome::Unbounded;
    pivot(leave, enter);
    if (stop && stop(z_)) return Outcome::Stopped;
  }
}

std::vector<AlgebraicNumber> Tableau::solution() const {
  std::vector<AlgebraicNumber> x(cols());
  for (std::size_t r = 0; r < rows(); ++r) x[basis[r]] = b[r];
  return x;
}

}  // namespace growth::geometry::detail
