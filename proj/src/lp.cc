#include "tripack/lp.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tripack::lp {

int Problem::add_row(RowSense s, Rational b) {
  sense.push_back(s);
  rhs.push_back(std::move(b));
  return num_rows++;
}

int Problem::add_column(std::vector<int> rows, Rational cost) {
  columns.push_back(std::move(rows));
  objective.push_back(std::move(cost));
  return num_columns() - 1;
}

namespace {

template <class T>
struct Arith;

template <>
struct Arith<double> {
  static constexpr bool kExact = false;
  static constexpr double kEps = 1e-9;
  static bool positive(double v) { return v > kEps; }
  static bool negative(double v) { return v < -kEps; }
  static bool nonzero(double v) { return std::fabs(v) > kEps; }
  static double magnitude(double v) { return std::fabs(v); }
  static double from(const Rational& q) { return q.get_d(); }
};

template <>
struct Arith<Rational> {
  static constexpr bool kExact = true;
  static bool positive(const Rational& v) { return sgn(v) > 0; }
  static bool negative(const Rational& v) { return sgn(v) < 0; }
  static bool nonzero(const Rational& v) { return sgn(v) != 0; }
  static double magnitude(const Rational& v) { return std::fabs(v.get_d()); }
  static const Rational& from(const Rational& q) { return q; }
};

template <class T>
class RevisedSimplex {
  using A = Arith<T>;

 public:
  explicit RevisedSimplex(const Problem& p)
      : p_(p), m_(p.num_rows), n_(p.num_columns()) {
    b_.reserve(m_);
    for (const auto& v : p.rhs) b_.emplace_back(A::from(v));
    c_.reserve(n_);
    for (const auto& v : p.objective) c_.emplace_back(A::from(v));
  }

  void set_slack_basis() {
    basic_.resize(m_);
    for (int i = 0; i < m_; ++i) basic_[i] = n_ + i;
    inv_.assign(m_, std::vector<T>(m_, T(0)));
    for (int i = 0; i < m_; ++i) inv_[i][i] = T(1);
    xb_ = b_;
    rebuild_where();
  }

  // False when the listed columns do not form a nonsingular basis.
  bool set_basis(const std::vector<int>& basis) {
    if (static_cast<int>(basis.size()) != m_) return false;
    basic_ = basis;
    if (!refactor()) return false;
    rebuild_where();
    return true;
  }

  bool basis_is_feasible() const {
    for (int r = 0; r < m_; ++r) {
      if (A::negative(xb_[r])) return false;
    }
    return true;
  }

  Status run(int max_pivots) {
    bool need_phase_one = false;
    for (int r = 0; r < m_; ++r) {
      if (is_artificial(basic_[r]) && A::positive(xb_[r])) need_phase_one = true;
    }
    if (need_phase_one) {
      phase_one_ = true;
      iterate(max_pivots);
      T infeasibility(0);
      for (int r = 0; r < m_; ++r) {
        if (is_artificial(basic_[r])) infeasibility += xb_[r];
      }
      if (A::positive(infeasibility)) return Status::Infeasible;
      phase_one_ = false;
    }
    iterate(max_pivots);
    return Status::Optimal;
  }

  std::vector<T> primal() const {
    std::vector<T> x(n_, T(0));
    for (int r = 0; r < m_; ++r) {
      if (basic_[r] < n_) x[basic_[r]] = xb_[r];
    }
    return x;
  }

  std::vector<T> duals() const {
    std::vector<T> y(m_, T(0));
    for (int r = 0; r < m_; ++r) {
      const T cost = cost_of(basic_[r]);
      if (!A::nonzero(cost)) continue;
      for (int i = 0; i < m_; ++i) {
        if (A::nonzero(inv_[r][i])) y[i] += cost * inv_[r][i];
      }
    }
    return y;
  }

  const std::vector<int>& basis() const { return basic_; }
  int pivots() const { return pivots_; }
  void enter_phase_one() { phase_one_ = true; }

 private:
  bool is_artificial(int col) const { return col >= n_ && p_.sense[col - n_] == RowSense::Equal; }

  T cost_of(int col) const {
    if (phase_one_) return is_artificial(col) ? T(-1) : T(0);
    return col < n_ ? c_[col] : T(0);
  }

  void rebuild_where() {
    where_.assign(n_ + m_, -1);
    for (int r = 0; r < m_; ++r) where_[basic_[r]] = r;
  }

  // Gauss-Jordan inverse of the current basis matrix, then x_B = B^-1 b.
  bool refactor() {
    std::vector<std::vector<T>> mat(m_, std::vector<T>(m_, T(0)));
    for (int r = 0; r < m_; ++r) {
      const int col = basic_[r];
      if (col < n_) {
        for (int i : p_.columns[col]) mat[i][r] = T(1);
      } else {
        mat[col - n_][r] = T(1);
      }
    }
    std::vector<std::vector<T>> inv(m_, std::vector<T>(m_, T(0)));
    for (int i = 0; i < m_; ++i) inv[i][i] = T(1);
    for (int k = 0; k < m_; ++k) {
      int best = -1;
      double best_mag = 0;
      for (int i = k; i < m_; ++i) {
        if (!A::nonzero(mat[i][k])) continue;
        const double mag = A::magnitude(mat[i][k]);
        if (best < 0 || (!A::kExact && mag > best_mag)) {
          best = i;
          best_mag = mag;
          if (A::kExact) break;
        }
      }
      if (best < 0) return false;
      std::swap(mat[k], mat[best]);
      std::swap(inv[k], inv[best]);
      const T pivot = mat[k][k];
      for (int j = 0; j < m_; ++j) {
        if (A::nonzero(mat[k][j])) mat[k][j] /= pivot;
        if (A::nonzero(inv[k][j])) inv[k][j] /= pivot;
      }
      for (int i = 0; i < m_; ++i) {
        if (i == k || !A::nonzero(mat[i][k])) continue;
        const T f = mat[i][k];
        for (int j = 0; j < m_; ++j) {
          if (A::nonzero(mat[k][j])) mat[i][j] -= f * mat[k][j];
          if (A::nonzero(inv[k][j])) inv[i][j] -= f * inv[k][j];
        }
      }
    }
    // Rows of B^-1 follow the column order of the basis.
    inv_ = std::move(inv);
    xb_.assign(m_, T(0));
    for (int r = 0; r < m_; ++r) {
      for (int i = 0; i < m_; ++i) {
        if (A::nonzero(inv_[r][i]) && A::nonzero(b_[i])) xb_[r] += inv_[r][i] * b_[i];
      }
    }
    pivots_since_refactor_ = 0;
    return true;
  }

  void iterate(int max_pivots) {
    int degenerate_run = 0;
    std::vector<T> y;
    std::vector<T> alpha(m_);
    while (true) {
      y = duals();
      const bool bland = A::kExact || degenerate_run > 30;
      int entering = -1;
      T best_d(0);
      for (int col = 0; col < n_ + m_; ++col) {
        if (where_[col] >= 0) continue;
        if (!phase_one_ && is_artificial(col)) continue;
        T d = cost_of(col);
        if (col < n_) {
          for (int i : p_.columns[col]) d -= y[i];
        } else {
          d -= y[col - n_];
        }
        if (!A::positive(d)) continue;
        if (bland) {
          entering = col;
          break;
        }
        if (entering < 0 || d > best_d) {
          entering = col;
          best_d = d;
        }
      }
      if (entering < 0) return;

      for (int r = 0; r < m_; ++r) {
        T a(0);
        if (entering < n_) {
          for (int i : p_.columns[entering]) a += inv_[r][i];
        } else {
          a = inv_[r][entering - n_];
        }
        alpha[r] = a;
      }

      int leave = -1;
      T best_ratio(0);
      for (int r = 0; r < m_; ++r) {
        T ratio;
        if (!phase_one_ && is_artificial(basic_[r])) {
          if (!A::nonzero(alpha[r])) continue;
          ratio = T(0);
        } else {
          if (!A::positive(alpha[r])) continue;
          ratio = A::positive(xb_[r]) ? T(xb_[r] / alpha[r]) : T(0);
        }
        bool take = leave < 0;
        if (!take) {
          if (A::kExact) {
            take = ratio < best_ratio || (ratio == best_ratio && basic_[r] < basic_[leave]);
          } else {
            const double diff = to_double(ratio) - to_double(best_ratio);
            if (diff < -1e-12) {
              take = true;
            } else if (diff <= 1e-12) {
              take = bland ? basic_[r] < basic_[leave]
                           : A::magnitude(alpha[r]) > A::magnitude(alpha[leave]);
            }
          }
        }
        if (take) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave < 0) throw std::logic_error("linear program is unbounded");

      degenerate_run = A::positive(best_ratio) ? 0 : degenerate_run + 1;
      pivot(leave, entering, alpha);
      if (++pivots_ > max_pivots) throw std::runtime_error("simplex pivot limit exceeded");
      if (!A::kExact && ++pivots_since_refactor_ >= 64) {
        refactor();
        for (auto& v : xb_) {
          if (Arith<double>::magnitude(to_double(v)) < 1e-12) v = T(0);
        }
      }
    }
  }

  static double to_double(const T& v) {
    if constexpr (A::kExact) {
      return v.get_d();
    } else {
      return v;
    }
  }

  void pivot(int r, int entering, const std::vector<T>& alpha) {
    const T piv = alpha[r];
    for (int j = 0; j < m_; ++j) {
      if (A::nonzero(inv_[r][j])) inv_[r][j] /= piv;
    }
    xb_[r] /= piv;
    for (int i = 0; i < m_; ++i) {
      if (i == r || !A::nonzero(alpha[i])) continue;
      const T f = alpha[i];
      for (int j = 0; j < m_; ++j) {
        if (A::nonzero(inv_[r][j])) inv_[i][j] -= f * inv_[r][j];
      }
      xb_[i] -= f * xb_[r];
      if constexpr (!A::kExact) {
        if (xb_[i] < 0 && xb_[i] > -1e-11) xb_[i] = 0;
      }
    }
    where_[basic_[r]] = -1;
    basic_[r] = entering;
    where_[entering] = r;
  }

  const Problem& p_;
  int m_;
  int n_;
  std::vector<T> b_;
  std::vector<T> c_;
  std::vector<int> basic_;
  std::vector<int> where_;
  std::vector<std::vector<T>> inv_;
  std::vector<T> xb_;
  bool phase_one_ = false;
  int pivots_ = 0;
  int pivots_since_refactor_ = 0;
};

// Basis containing the support of `x` plus slacks of its loose rows, padded
// with auxiliary columns of rows not yet spanned.
std::optional<std::vector<int>> basis_from_point(const Problem& p, const std::vector<double>& x) {
  const int m = p.num_rows;
  const int n = p.num_columns();
  if (static_cast<int>(x.size()) != n) return std::nullopt;
  std::vector<double> load(m, 0.0);
  std::vector<int> chosen;
  for (int j = 0; j < n; ++j) {
    if (x[j] < -1e-9) return std::nullopt;
    if (x[j] > 1e-9) {
      chosen.push_back(j);
      for (int i : p.columns[j]) load[i] += x[j];
    }
  }
  for (int i = 0; i < m; ++i) {
    const double slack = p.rhs[i].get_d() - load[i];
    if (slack < -1e-7) return std::nullopt;
    if (p.sense[i] == RowSense::Equal && std::fabs(slack) > 1e-7) return std::nullopt;
    if (p.sense[i] == RowSense::LessEqual && slack > 1e-9) chosen.push_back(n + i);
  }
  if (static_cast<int>(chosen.size()) > m) return std::nullopt;

  // Column echelon reduction to check independence and find spanned rows.
  std::vector<std::vector<double>> cols;
  cols.reserve(chosen.size());
  for (int col : chosen) {
    std::vector<double> v(m, 0.0);
    if (col < n) {
      for (int i : p.columns[col]) v[i] = 1.0;
    } else {
      v[col - n] = 1.0;
    }
    cols.push_back(std::move(v));
  }
  std::vector<bool> row_used(m, false);
  std::vector<int> pivot_row(cols.size(), -1);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    auto& v = cols[k];
    for (std::size_t prev = 0; prev < k; ++prev) {
      const int r = pivot_row[prev];
      const double f = v[r];
      if (std::fabs(f) < 1e-12) continue;
      const auto& u = cols[prev];
      for (int i = 0; i < m; ++i) v[i] -= f * u[i];
    }
    int best = -1;
    for (int i = 0; i < m; ++i) {
      if (!row_used[i] && std::fabs(v[i]) > 1e-9 && (best < 0 || std::fabs(v[i]) > std::fabs(v[best]))) best = i;
    }
    if (best < 0) return std::nullopt;
    const double piv = v[best];
    for (int i = 0; i < m; ++i) v[i] /= piv;
    row_used[best] = true;
    pivot_row[k] = best;
  }
  std::vector<int> basis = chosen;
  for (int i = 0; i < m; ++i) {
    if (!row_used[i]) basis.push_back(n + i);
  }
  return basis;
}

// Exact values are taken from the float solution only when they certify.
std::vector<Rational> rationalise(const std::vector<double>& v, const ApproximationOptions& options) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (double d : v) out.push_back(approximate(d, options));
  return out;
}

}  // namespace

FloatSolution solve_float(const Problem& p, const SolveOptions& options) {
  RevisedSimplex<double> simplex(p);
  bool warm = false;
  if (options.warm_x != nullptr) {
    if (auto basis = basis_from_point(p, *options.warm_x)) {
      warm = simplex.set_basis(*basis) && simplex.basis_is_feasible();
    }
  }
  if (!warm) simplex.set_slack_basis();
  FloatSolution out;
  out.warm_started = warm;
  out.status = simplex.run(200000);
  if (out.status == Status::Infeasible) simplex.enter_phase_one();
  out.x = simplex.primal();
  out.duals = simplex.duals();
  out.basis = simplex.basis();
  out.pivots = simplex.pivots();
  for (int j = 0; j < p.num_columns(); ++j) out.objective += p.objective[j].get_d() * out.x[j];
  return out;
}

ExactSolution solve_exact(const Problem& p, const SolveOptions& options) {
  ExactSolution out;
  std::vector<int> start_basis;
  if (!options.exact_only) {
    const FloatSolution fs = solve_float(p, options);
    out.float_pivots = fs.pivots;
    start_basis = fs.basis;
    if (fs.status == Status::Optimal) {
      auto x = rationalise(fs.x, options.rounding);
      auto y = rationalise(fs.duals, options.rounding);
      if (is_primal_feasible(p, x) && is_dual_feasible(p, y) && objective_value(p, x) == dual_value(p, y)) {
        out.status = Status::Optimal;
        out.objective = objective_value(p, x);
        out.x = std::move(x);
        out.duals = std::move(y);
        return out;
      }
    } else {
      auto z = rationalise(fs.duals, options.rounding);
      if (is_farkas_ray(p, z)) {
        out.status = Status::Infeasible;
        out.x.assign(p.num_columns(), Rational(0));
        out.duals = std::move(z);
        return out;
      }
    }
  }

  out.exact_simplex_ran = true;
  RevisedSimplex<Rational> simplex(p);
  bool started = false;
  if (!start_basis.empty() && simplex.set_basis(start_basis) && simplex.basis_is_feasible()) started = true;
  if (!started) simplex.set_slack_basis();
  out.status = simplex.run(2000000);
  if (out.status == Status::Infeasible) simplex.enter_phase_one();
  out.exact_pivots = simplex.pivots();
  out.x = simplex.primal();
  out.duals = simplex.duals();
  if (out.status == Status::Optimal) {
    out.objective = objective_value(p, out.x);
  } else {
    out.x.assign(p.num_columns(), Rational(0));
  }
  return out;
}

bool is_primal_feasible(const Problem& p, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != p.num_columns()) return false;
  std::vector<Rational> load(p.num_rows, Rational(0));
  for (int j = 0; j < p.num_columns(); ++j) {
    if (sgn(x[j]) < 0) return false;
    if (sgn(x[j]) == 0) continue;
    for (int i : p.columns[j]) load[i] += x[j];
  }
  for (int i = 0; i < p.num_rows; ++i) {
    if (p.sense[i] == RowSense::Equal ? load[i] != p.rhs[i] : load[i] > p.rhs[i]) return false;
  }
  return true;
}

bool is_dual_feasible(const Problem& p, const std::vector<Rational>& y) {
  if (static_cast<int>(y.size()) != p.num_rows) return false;
  for (int i = 0; i < p.num_rows; ++i) {
    if (p.sense[i] == RowSense::LessEqual && sgn(y[i]) < 0) return false;
  }
  for (int j = 0; j < p.num_columns(); ++j) {
    Rational s(0);
    for (int i : p.columns[j]) s += y[i];
    if (s < p.objective[j]) return false;
  }
  return true;
}

bool is_farkas_ray(const Problem& p, const std::vector<Rational>& z) {
  if (static_cast<int>(z.size()) != p.num_rows) return false;
  for (int i = 0; i < p.num_rows; ++i) {
    if (p.sense[i] == RowSense::LessEqual && sgn(z[i]) < 0) return false;
  }
  for (const auto& col : p.columns) {
    Rational s(0);
    for (int i : col) s += z[i];
    if (sgn(s) < 0) return false;
  }
  return sgn(dual_value(p, z)) < 0;
}

Rational objective_value(const Problem& p, const std::vector<Rational>& x) {
  Rational s(0);
  for (int j = 0; j < p.num_columns(); ++j) {
    if (sgn(x[j]) != 0) s += p.objective[j] * x[j];
  }
  return s;
}

Rational dual_value(const Problem& p, const std::vector<Rational>& y) {
  Rational s(0);
  for (int i = 0; i < p.num_rows; ++i) {
    if (sgn(y[i]) != 0) s += p.rhs[i] * y[i];
  }
  return s;
}

}  // namespace tripack::lp
