#include "hypercyclic/mod_linalg.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "hypercyclic/errors.hpp"

namespace hypercyclic {

namespace {

void require_modulus(Residue modulus) {
  if (modulus < 2) throw ModulusError("modulus must be at least 2, got " + std::to_string(modulus));
}

Residue mul_mod(Residue a, Residue b, Residue m) {
  return static_cast<Residue>((static_cast<__int128>(a) * b) % m);
}

Residue add_mod(Residue a, Residue b, Residue m) {
  Residue s = a + b;
  return s >= m ? s - m : s;
}

struct Bezout {
  std::int64_t g;
  std::int64_t x;
  std::int64_t y;
};

// g = gcd(a, b) = x*a + y*b for a, b >= 0.
Bezout extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_x = 1, x = 0;
  std::int64_t old_y = 0, y = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_x = std::exchange(x, old_x - q * x);
    old_y = std::exchange(y, old_y - q * y);
  }
  return {old_r, old_x, old_y};
}

// Inverse of a unit a modulo m (gcd(a, m) == 1).
Residue inverse_mod(Residue a, Residue m) {
  if (m == 1) return 0;
  Bezout bz = extended_gcd(a, m);
  return reduce_mod(bz.x, m);
}

// q with q*a = b (mod m), provided gcd(a, m) divides b.
std::optional<Residue> divide_mod(Residue b, Residue a, Residue m) {
  const Residue g = std::gcd(a, m);
  if (b % g != 0) return std::nullopt;
  const Residue reduced = m / g;
  return mul_mod(b / g, inverse_mod((a / g) % reduced, reduced), reduced);
}

}  // namespace

Residue reduce_mod(std::int64_t value, Residue modulus) {
  Residue r = value % modulus;
  return r < 0 ? r + modulus : r;
}

ModVector ModVector::zeros(Residue modulus, std::size_t size) {
  return ModVector(modulus, std::vector<std::int64_t>(size, 0));
}

ModVector::ModVector(Residue modulus, std::vector<std::int64_t> values) : modulus_(modulus), values_(std::move(values)) {
  require_modulus(modulus);
  for (auto& v : values_) v = reduce_mod(v, modulus_);
}

ModMatrix::ModMatrix(Residue modulus, std::size_t rows, std::size_t cols)
    : modulus_(modulus), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
  require_modulus(modulus);
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

ModMatrix::ModMatrix(Residue modulus, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : ModMatrix(modulus, std::vector<std::vector<std::int64_t>>(rows.begin(), rows.end())) {}

ModMatrix::ModMatrix(Residue modulus, const std::vector<std::vector<std::int64_t>>& rows)
    : ModMatrix(modulus, rows.size(), rows.empty() ? 0 : rows.front().size()) {
  for (std::size_t r = 0; r < rows_; ++r) {
    if (rows[r].size() != cols_) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols_; ++c) raw(r, c) = reduce_mod(rows[r][c], modulus_);
  }
}

ModMatrix ModMatrix::zeros(Residue modulus, std::size_t rows, std::size_t cols) {
  return ModMatrix(modulus, rows, cols);
}

ModMatrix ModMatrix::identity(Residue modulus, std::size_t size) {
  ModMatrix id(modulus, size, size);
  for (std::size_t i = 0; i < size; ++i) id.raw(i, i) = 1;
  return id;
}

ModVector mat_vec_mod(const ModMatrix& a, const ModVector& x) {
  if (a.modulus() != x.modulus()) throw ModulusError("modulus mismatch between matrix and vector");
  if (a.cols() != x.size())
    throw DimensionError("matrix has " + std::to_string(a.cols()) + " columns but vector has " +
                         std::to_string(x.size()) + " entries");
  const Residue m = a.modulus();
  ModVector y = ModVector::zeros(m, a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Residue acc = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) acc = add_mod(acc, mul_mod(a(r, c), x[c], m), m);
    y.set(r, acc);
  }
  return y;
}

ModMatrix mat_mul_mod(const ModMatrix& a, const ModMatrix& b) {
  if (a.modulus() != b.modulus()) throw ModulusError("modulus mismatch between matrices");
  if (a.cols() != b.rows()) throw DimensionError("inner dimensions differ");
  const Residue m = a.modulus();
  ModMatrix out = ModMatrix::zeros(m, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Residue acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = add_mod(acc, mul_mod(a(i, k), b(k, j), m), m);
      out.set(i, j, acc);
    }
  }
  return out;
}

ModSolver::ModSolver(const ModMatrix& a)
    : matrix_(a),
      row_transform_(ModMatrix::identity(a.modulus(), a.rows())),
      column_transform_(ModMatrix::identity(a.modulus(), a.cols())) {
  ModMatrix& d = matrix_;
  ModMatrix& u = row_transform_;
  ModMatrix& v = column_transform_;
  const Residue m = d.modulus();
  const std::size_t rows = d.rows();
  const std::size_t cols = d.cols();

  // (row_p, row_q) <- (x*row_p + y*row_q, z*row_p + w*row_q), columns from `first` on.
  auto combine_rows = [&](std::size_t p, std::size_t q, Residue x, Residue y, Residue z, Residue w, std::size_t first) {
    auto apply = [&](ModMatrix& mat, std::size_t from) {
      for (std::size_t c = from; c < mat.cols(); ++c) {
        const Residue a = mat.raw(p, c), b = mat.raw(q, c);
        mat.raw(p, c) = add_mod(mul_mod(x, a, m), mul_mod(y, b, m), m);
        mat.raw(q, c) = add_mod(mul_mod(z, a, m), mul_mod(w, b, m), m);
      }
    };
    apply(d, first);
    apply(u, 0);
  };
  auto combine_cols = [&](std::size_t p, std::size_t q, Residue x, Residue y, Residue z, Residue w, std::size_t first) {
    auto apply = [&](ModMatrix& mat, std::size_t from) {
      for (std::size_t r = from; r < mat.rows(); ++r) {
        const Residue a = mat.raw(r, p), b = mat.raw(r, q);
        mat.raw(r, p) = add_mod(mul_mod(x, a, m), mul_mod(y, b, m), m);
        mat.raw(r, q) = add_mod(mul_mod(z, a, m), mul_mod(w, b, m), m);
      }
    };
    apply(d, first);
    apply(v, 0);
  };
  // Coefficients that send (pivot, other) to (new pivot, 0) with an invertible 2x2 step.
  struct Step {
    Residue x, y, z, w;
  };
  auto elimination_step = [&](Residue pivot, Residue other) -> Step {
    if (auto q = divide_mod(other, pivot, m)) return {1, 0, reduce_mod(-*q, m), 1};
    const Bezout bz = extended_gcd(pivot, other);
    return {reduce_mod(bz.x, m), reduce_mod(bz.y, m), reduce_mod(-(other / bz.g), m), reduce_mod(pivot / bz.g, m)};
  };

  for (std::size_t k = 0; k < rows && k < cols; ++k) {
    std::size_t pivot_row = rows, pivot_col = cols;
    for (std::size_t c = k; c < cols && pivot_col == cols; ++c) {
      Residue best = m;
      for (std::size_t r = k; r < rows; ++r) {
        const Residue e = d.raw(r, c);
        if (e == 0) continue;
        const Residue g = std::gcd(e, m);
        if (g < best) {
          best = g;
          pivot_row = r;
          pivot_col = c;
        }
      }
    }
    if (pivot_col == cols) break;

    if (pivot_row != k) combine_rows(k, pivot_row, 0, 1, 1, 0, 0);
    if (pivot_col != k) combine_cols(k, pivot_col, 0, 1, 1, 0, 0);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t r = k + 1; r < rows; ++r) {
        if (d.raw(r, k) == 0) continue;
        const Step s = elimination_step(d.raw(k, k), d.raw(r, k));
        combine_rows(k, r, s.x, s.y, s.z, s.w, k);
      }
      for (std::size_t c = k + 1; c < cols; ++c) {
        if (d.raw(k, c) == 0) continue;
        const Step s = elimination_step(d.raw(k, k), d.raw(k, c));
        combine_cols(k, c, s.x, s.y, s.z, s.w, k);
      }
      for (std::size_t r = k + 1; r < rows && !dirty; ++r) dirty = d.raw(r, k) != 0;
    }
    diagonal_.push_back(d.raw(k, k));
  }
}

std::optional<ModVector> ModSolver::solve(const ModVector& b) const {
  const Residue m = matrix_.modulus();
  if (b.modulus() != m) throw ModulusError("modulus mismatch between matrix and right-hand side");
  if (b.size() != matrix_.rows())
    throw DimensionError("right-hand side has " + std::to_string(b.size()) + " entries, expected " +
                         std::to_string(matrix_.rows()));

  const ModVector transformed = mat_vec_mod(row_transform_, b);
  for (std::size_t i = rank(); i < transformed.size(); ++i) {
    if (transformed[i] != 0) return std::nullopt;
  }
  ModVector z = ModVector::zeros(m, matrix_.cols());
  for (std::size_t i = 0; i < rank(); ++i) {
    auto q = divide_mod(transformed[i], diagonal_[i], m);
    if (!q) return std::nullopt;
    z.set(i, *q);
  }
  return mat_vec_mod(column_transform_, z);
}

std::optional<ModVector> solve_linear_mod(const ModMatrix& a, const ModVector& b) {
  if (a.modulus() != b.modulus()) throw ModulusError("modulus mismatch between matrix and right-hand side");
  if (a.rows() != b.size())
    throw DimensionError("right-hand side has " + std::to_string(b.size()) + " entries, expected " +
                         std::to_string(a.rows()));
  auto x = ModSolver(a).solve(b);
  if (x && mat_vec_mod(a, *x) != b) throw ConsistencyError("modular solver produced a witness that fails substitution");
  return x;
}

}  // namespace hypercyclic
