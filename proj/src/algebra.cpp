#include "multipath/algebra.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace multipath {

namespace {

RationalVector zeros(std::size_t n) { return RationalVector(n, mpq_class(0)); }

std::string tuple_str(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

mpq_class reduced(mpq_class q) {
  q.canonicalize();
  return q;
}

RationalVector basis(std::size_t dim, std::size_t i) {
  auto v = zeros(dim);
  v[i] = 1;
  return v;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::size_t dim, const std::vector<Constant>& constants, RationalVector unit)
    : dim_(dim), table_(dim * dim, zeros(dim)), unit_(std::move(unit)) {
  if (dim == 0) throw AlgebraError("algebra dimension must be positive");
  if (unit_.size() != dim) throw AlgebraError("unit vector has the wrong length");
  for (auto& x : unit_) x.canonicalize();
  for (const Constant& c : constants) {
    if (c.i >= dim || c.j >= dim || c.k >= dim) throw AlgebraError("structure constant index out of range");
    table_[c.i * dim + c.j][c.k] += reduced(c.value);
  }
}

RationalVector FiniteAlgebra::multiply(const RationalVector& u, const RationalVector& v) const {
  auto out = zeros(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(v[j]) == 0) continue;
      const mpq_class uv = u[i] * v[j];
      const auto& p = product(i, j);
      for (std::size_t k = 0; k < dim_; ++k) out[k] += uv * p[k];
    }
  }
  return out;
}

bool FiniteAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (product(i, j) != product(j, i)) return false;
  return true;
}

Bimodule::Bimodule(std::size_t dim, std::size_t algebra_dim, const std::vector<Constant>& left,
                   const std::vector<Constant>& right)
    : dim_(dim),
      algebra_dim_(algebra_dim),
      left_(algebra_dim * dim, zeros(dim)),
      right_(dim * algebra_dim, zeros(dim)) {
  if (dim == 0) throw AlgebraError("bimodule dimension must be positive");
  for (const Constant& c : left) {
    if (c.x >= algebra_dim || c.y >= dim || c.z >= dim) throw AlgebraError("left action index out of range");
    left_[c.x * dim + c.y][c.z] += reduced(c.value);
  }
  for (const Constant& c : right) {
    if (c.x >= dim || c.y >= algebra_dim || c.z >= dim) throw AlgebraError("right action index out of range");
    right_[c.x * algebra_dim + c.y][c.z] += reduced(c.value);
  }
}

Bimodule Bimodule::regular(const FiniteAlgebra& a) {
  std::vector<Constant> l;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto& p = a.product(i, j);
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (sgn(p[k]) != 0) l.push_back({i, j, k, p[k]});
    }
  // right action m.a is the same product with m on the left
  return Bimodule(a.dim(), a.dim(), l, l);
}

bool Bimodule::is_symmetric() const {
  for (std::size_t a = 0; a < algebra_dim_; ++a)
    for (std::size_t m = 0; m < dim_; ++m)
      if (left(a, m) != right(m, a)) return false;
  return true;
}

std::vector<std::string> verify_algebra(const FiniteAlgebra& a) {
  std::vector<std::string> bad;
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        auto lhs = a.multiply(a.product(i, j), basis(d, k));
        auto rhs = a.multiply(basis(d, i), a.product(j, k));
        if (lhs != rhs) bad.push_back("associativity " + tuple_str(i, j, k));
      }
  for (std::size_t i = 0; i < d; ++i) {
    if (a.multiply(a.unit(), basis(d, i)) != basis(d, i)) bad.push_back("left unit on e" + std::to_string(i));
    if (a.multiply(basis(d, i), a.unit()) != basis(d, i)) bad.push_back("right unit on e" + std::to_string(i));
  }
  return bad;
}

std::vector<std::string> verify_bimodule(const FiniteAlgebra& a, const Bimodule& m) {
  std::vector<std::string> bad;
  if (m.algebra_dim() != a.dim()) {
    bad.push_back("bimodule is over an algebra of dimension " + std::to_string(m.algebra_dim()));
    return bad;
  }
  const std::size_t da = a.dim();
  const std::size_t dm = m.dim();
  auto act_left = [&](const RationalVector& x, const RationalVector& v) {
    auto out = zeros(dm);
    for (std::size_t i = 0; i < da; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < dm; ++j) {
        if (sgn(v[j]) == 0) continue;
        const mpq_class c = x[i] * v[j];
        const auto& p = m.left(i, j);
        for (std::size_t k = 0; k < dm; ++k) out[k] += c * p[k];
      }
    }
    return out;
  };
  auto act_right = [&](const RationalVector& v, const RationalVector& x) {
    auto out = zeros(dm);
    for (std::size_t j = 0; j < dm; ++j) {
      if (sgn(v[j]) == 0) continue;
      for (std::size_t i = 0; i < da; ++i) {
        if (sgn(x[i]) == 0) continue;
        const mpq_class c = v[j] * x[i];
        const auto& p = m.right(j, i);
        for (std::size_t k = 0; k < dm; ++k) out[k] += c * p[k];
      }
    }
    return out;
  };

  for (std::size_t x = 0; x < da; ++x)
    for (std::size_t y = 0; y < da; ++y)
      for (std::size_t v = 0; v < dm; ++v) {
        const auto ex = basis(da, x), ey = basis(da, y), fv = basis(dm, v);
        if (act_left(a.product(x, y), fv) != act_left(ex, act_left(ey, fv)))
          bad.push_back("left associativity " + tuple_str(x, y, v));
        if (act_right(fv, a.product(x, y)) != act_right(act_right(fv, ex), ey))
          bad.push_back("right associativity " + tuple_str(v, x, y));
        if (act_right(act_left(ex, fv), ey) != act_left(ex, act_right(fv, ey)))
          bad.push_back("compatibility " + tuple_str(x, v, y));
      }
  for (std::size_t v = 0; v < dm; ++v) {
    const auto fv = basis(dm, v);
    if (act_left(a.unit(), fv) != fv) bad.push_back("left unit on f" + std::to_string(v));
    if (act_right(fv, a.unit()) != fv) bad.push_back("right unit on f" + std::to_string(v));
  }
  return bad;
}

std::pair<FiniteAlgebra, Bimodule> ground_field() {
  FiniteAlgebra k(1, {{0, 0, 0, mpq_class(1)}}, {mpq_class(1)});
  return {k, Bimodule::regular(k)};
}

FiniteAlgebra truncated_poly(std::size_t n) {
  if (n == 0) throw AlgebraError("truncated polynomial algebra needs n >= 1");
  std::vector<FiniteAlgebra::Constant> c;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) c.push_back({i, j, i + j, mpq_class(1)});
  auto unit = zeros(n);
  unit[0] = 1;
  return FiniteAlgebra(n, c, unit);
}

namespace {

std::size_t index_field(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw AlgebraError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

mpq_class scalar_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (j.is_string()) {
    mpq_class q;
    if (q.set_str(j.get<std::string>(), 10) != 0) throw AlgebraError("bad rational '" + j.get<std::string>() + "'");
    if (q.get_den() == 0) throw AlgebraError("zero denominator");
    q.canonicalize();
    return q;
  }
  throw AlgebraError("scalars must be integers or \"num/den\" strings");
}

mpq_class fraction_from_json(const nlohmann::json& num, const nlohmann::json& den) {
  if (!num.is_number_integer() || !den.is_number_integer()) throw AlgebraError("num and den must be integers");
  if (den.get<long>() == 0) throw AlgebraError("zero denominator");
  mpq_class q(num.get<long>(), den.get<long>());
  q.canonicalize();
  return q;
}

template <class C>
std::vector<C> read_constants(const nlohmann::json& list, const char* what) {
  if (!list.is_array()) throw AlgebraError(std::string(what) + " must be an array");
  std::vector<C> out;
  for (const auto& row : list) {
    if (!row.is_array() || row.size() != 5) {
      throw AlgebraError(std::string(what) + " entries must be [i, j, k, num, den]");
    }
    out.push_back({index_field(row[0], what), index_field(row[1], what), index_field(row[2], what),
                   fraction_from_json(row[3], row[4])});
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

nlohmann::json parse_json(const std::string& text, const std::string& path) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw AlgebraError(path + ": " + e.what());
  }
}

}  // namespace

FiniteAlgebra algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("mult") || !j.contains("unit")) {
    throw AlgebraError("algebra descriptor needs dim, mult and unit");
  }
  const std::size_t dim = index_field(j["dim"], "dim");
  auto constants = read_constants<FiniteAlgebra::Constant>(j["mult"], "mult");
  if (!j["unit"].is_array()) throw AlgebraError("unit must be an array");
  RationalVector unit;
  for (const auto& x : j["unit"]) unit.push_back(scalar_from_json(x));
  return FiniteAlgebra(dim, constants, unit);
}

nlohmann::json algebra_to_json(const FiniteAlgebra& a) {
  nlohmann::json mult = nlohmann::json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto& p = a.product(i, j);
      for (std::size_t k = 0; k < a.dim(); ++k) {
        if (sgn(p[k]) == 0) continue;
        mult.push_back({i, j, k, p[k].get_num().get_si(), p[k].get_den().get_si()});
      }
    }
  nlohmann::json unit = nlohmann::json::array();
  for (const auto& x : a.unit()) {
    if (x.get_den() == 1) {
      unit.push_back(x.get_num().get_si());
    } else {
      unit.push_back(x.get_str());
    }
  }
  return {{"dim", a.dim()}, {"mult", mult}, {"unit", unit}};
}

Bimodule bimodule_from_json(const nlohmann::json& j, const FiniteAlgebra& a) {
  if (!j.is_object()) throw AlgebraError("bimodule descriptor must be an object");
  if (j.contains("regular")) {
    if (!j["regular"].is_boolean() || !j["regular"].get<bool>()) throw AlgebraError("regular must be true");
    return Bimodule::regular(a);
  }
  if (!j.contains("dim") || !j.contains("left") || !j.contains("right")) {
    throw AlgebraError("bimodule descriptor needs dim, left and right");
  }
  const std::size_t dim = index_field(j["dim"], "dim");
  auto l = read_constants<Bimodule::Constant>(j["left"], "left");
  auto r = read_constants<Bimodule::Constant>(j["right"], "right");
  return Bimodule(dim, a.dim(), l, r);
}

FiniteAlgebra load_algebra(const std::string& spec) {
  if (spec == "ground") return ground_field().first;
  if (spec == "dual") return truncated_poly(2);
  if (spec.rfind("trunc:", 0) == 0) {
    std::size_t n = 0;
    const char* first = spec.data() + 6;
    const char* last = spec.data() + spec.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc() || ptr != last || first == last) throw AlgebraError("bad algebra '" + spec + "'");
    return truncated_poly(n);
  }
  return algebra_from_json(parse_json(read_file(spec), spec));
}

Bimodule load_bimodule(const std::string& path, const FiniteAlgebra& a) {
  return bimodule_from_json(parse_json(read_file(path), path), a);
}

}  // namespace multipath
