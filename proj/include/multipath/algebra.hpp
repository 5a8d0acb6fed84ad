#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace multipath {

using RationalVector = std::vector<mpq_class>;

/// Finite-dimensional unital algebra given by structure constants:
/// e_i e_j = sum_k c(i,j,k) e_k.
class FiniteAlgebra {
 public:
  struct Constant {
    std::size_t i, j, k;
    mpq_class value;
  };

  FiniteAlgebra() = default;
  FiniteAlgebra(std::size_t dim, const std::vector<Constant>& constants, RationalVector unit);

  std::size_t dim() const { return dim_; }
  const RationalVector& unit() const { return unit_; }
  /// Coefficients of e_i e_j.
  const RationalVector& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  RationalVector multiply(const RationalVector& u, const RationalVector& v) const;
  bool is_commutative() const;

 private:
  std::size_t dim_ = 0;
  std::vector<RationalVector> table_;
  RationalVector unit_;
};

/// (A,A)-bimodule: left(a, m) = e_a . f_m and right(m, a) = f_m . e_a.
class Bimodule {
 public:
  struct Constant {
    std::size_t x, y, z;  // left: (a, m, m'), right: (m, a, m')
    mpq_class value;
  };

  Bimodule() = default;
  Bimodule(std::size_t dim, std::size_t algebra_dim, const std::vector<Constant>& left,
           const std::vector<Constant>& right);

  /// A acting on itself by multiplication.
  static Bimodule regular(const FiniteAlgebra& a);

  std::size_t dim() const { return dim_; }
  std::size_t algebra_dim() const { return algebra_dim_; }
  const RationalVector& left(std::size_t a, std::size_t m) const { return left_[a * dim_ + m]; }
  const RationalVector& right(std::size_t m, std::size_t a) const { return right_[m * algebra_dim_ + a]; }

  /// a.m == m.a for all basis elements.
  bool is_symmetric() const;

 private:
  std::size_t dim_ = 0;
  std::size_t algebra_dim_ = 0;
  std::vector<RationalVector> left_;
  std::vector<RationalVector> right_;
};

/// Empty when the axioms hold; otherwise one line per failing basis tuple.
std::vector<std::string> verify_algebra(const FiniteAlgebra& a);
std::vector<std::string> verify_bimodule(const FiniteAlgebra& a, const Bimodule& m);

/// The one-dimensional algebra and itself as a bimodule.
std::pair<FiniteAlgebra, Bimodule> ground_field();

/// k[x]/(x^n) on the basis 1, x, ..., x^(n-1).
FiniteAlgebra truncated_poly(std::size_t n);

/// {"dim": d, "mult": [[i,j,k,num,den], ...], "unit": [...]}.  Unit entries
/// are integers or "num/den" strings.
FiniteAlgebra algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const FiniteAlgebra& a);

/// {"dim": d, "left": [[a,m,m',num,den], ...], "right": [[m,a,m',num,den], ...]}
/// or {"regular": true}.
Bimodule bimodule_from_json(const nlohmann::json& j, const FiniteAlgebra& a);

/// A file path, or one of the names ground, dual, trunc:N.
FiniteAlgebra load_algebra(const std::string& spec);
Bimodule load_bimodule(const std::string& path, const FiniteAlgebra& a);

/// Algebra and bimodule tables converted into the field F, sparse by basis pair.
template <class F>
struct Coefficients {
  using value_type = typename F::value_type;
  using Sparse = std::vector<std::pair<std::size_t, value_type>>;

  std::size_t dim_a = 0;
  std::size_t dim_m = 0;
  std::vector<Sparse> mult;   // [i * dim_a + j]
  std::vector<Sparse> left;   // [a * dim_m + m]
  std::vector<Sparse> right;  // [m * dim_a + a]
  bool commutative = false;
  bool symmetric = false;

  Coefficients() = default;
  Coefficients(const F& f, const FiniteAlgebra& a, const Bimodule& m);
};

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class F>
Coefficients<F>::Coefficients(const F& f, const FiniteAlgebra& a, const Bimodule& m) {
  if (auto bad = verify_algebra(a); !bad.empty()) throw AlgebraError("algebra axiom fails: " + bad.front());
  if (auto bad = verify_bimodule(a, m); !bad.empty()) throw AlgebraError("bimodule axiom fails: " + bad.front());
  dim_a = a.dim();
  dim_m = m.dim();
  auto convert = [&](const RationalVector& v) {
    Sparse s;
    for (std::size_t k = 0; k < v.size(); ++k) {
      auto x = f.from_rational(v[k]);
      if (!f.is_zero(x)) s.emplace_back(k, x);
    }
    return s;
  };
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_a; ++j) mult.push_back(convert(a.product(i, j)));
  for (std::size_t x = 0; x < dim_a; ++x)
    for (std::size_t y = 0; y < dim_m; ++y) left.push_back(convert(m.left(x, y)));
  for (std::size_t y = 0; y < dim_m; ++y)
    for (std::size_t x = 0; x < dim_a; ++x) right.push_back(convert(m.right(y, x)));
  commutative = a.is_commutative();
  symmetric = m.is_symmetric();
}

}  // namespace multipath
