#include "gkm/linear_algebra.hpp"

#include <utility>

#include "gkm/error.hpp"

namespace gkm {

void RationalMatrix::append_row(const std::vector<Rational>& row) {
  if (rows_ == 0 && data_.empty()) cols_ = row.size();
  if (row.size() != cols_) throw Error(ErrorKind::InvalidArgument, "row length differs from column count");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

namespace {

using IntRow = std::vector<mpz_class>;

// Integer row echelon form produced by fraction-free (Bareiss) elimination.
// Every row is first cleared of denominators; `scale` holds the product of the
// row multipliers so determinants can be recovered.
struct Echelon {
  std::vector<IntRow> m;
  std::vector<std::size_t> pivot_cols;
  mpz_class scale = 1;
  int swap_sign = 1;
};

Echelon eliminate(const RationalMatrix& a, const std::vector<Rational>* rhs, std::size_t pivot_limit) {
  Echelon e;
  const std::size_t width = a.cols() + (rhs ? 1 : 0);
  e.m.resize(a.rows(), IntRow(width));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(r, c).raw().get_den_mpz_t());
    if (rhs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), (*rhs)[r].raw().get_den_mpz_t());
    for (std::size_t c = 0; c < a.cols(); ++c) {
      e.m[r][c] = a(r, c).raw().get_num() * (lcm / a(r, c).raw().get_den());
    }
    if (rhs) e.m[r][a.cols()] = (*rhs)[r].raw().get_num() * (lcm / (*rhs)[r].raw().get_den());
    e.scale *= lcm;
  }

  mpz_class previous = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < pivot_limit && r < e.m.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < e.m.size() && e.m[pivot][col] == 0) ++pivot;
    if (pivot == e.m.size()) continue;
    if (pivot != r) {
      std::swap(e.m[pivot], e.m[r]);
      e.swap_sign = -e.swap_sign;
    }
    const mpz_class& p = e.m[r][col];
    for (std::size_t i = r + 1; i < e.m.size(); ++i) {
      const mpz_class factor = e.m[i][col];
      for (std::size_t j = col + 1; j < width; ++j) {
        mpz_class value = p * e.m[i][j] - factor * e.m[r][j];
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        e.m[i][j] = std::move(value);
      }
      e.m[i][col] = 0;
    }
    previous = p;
    e.pivot_cols.push_back(col);
    ++r;
  }
  return e;
}

// Back substitution on the echelon rows with the given values for free
// variables; `rhs_col` selects the augmented column or none.
std::vector<Rational> back_substitute(const Echelon& e, std::size_t cols, std::vector<Rational> x,
                                      bool use_rhs) {
  for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
    const std::size_t pc = e.pivot_cols[k];
    Rational sum = use_rhs ? Rational(e.m[k][cols]) : Rational();
    for (std::size_t j = pc + 1; j < cols; ++j) {
      if (e.m[k][j] != 0 && !x[j].is_zero()) sum -= Rational(e.m[k][j]) * x[j];
    }
    x[pc] = sum / Rational(e.m[k][pc]);
  }
  return x;
}

}  // namespace

std::size_t rank(const RationalMatrix& a) { return eliminate(a, nullptr, a.cols()).pivot_cols.size(); }

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a) {
  const Echelon e = eliminate(a, nullptr, a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(a.cols());
    x[free] = Rational(1);
    basis.push_back(back_substitute(e, a.cols(), std::move(x), false));
  }
  return basis;
}

LinearSolution solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::InvalidArgument, "right-hand side length differs from row count");
  const Echelon e = eliminate(a, &b, a.cols());
  LinearSolution out;
  out.nullity = a.cols() - e.pivot_cols.size();
  for (std::size_t r = e.pivot_cols.size(); r < e.m.size(); ++r) {
    if (e.m[r][a.cols()] != 0) return out;
  }
  out.particular = back_substitute(e, a.cols(), std::vector<Rational>(a.cols()), true);
  return out;
}

Rational determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  if (a.rows() == 0) return Rational(1);
  const Echelon e = eliminate(a, nullptr, a.cols());
  if (e.pivot_cols.size() < a.rows()) return Rational();
  const mpz_class& last = e.m[a.rows() - 1][a.cols() - 1];
  return Rational(mpq_class(last * e.swap_sign, e.scale));
}

}  // namespace gkm
