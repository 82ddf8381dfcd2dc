#include "ptolemy/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "ptolemy/errors.hpp"

namespace ptolemy {

namespace {

void render_factors(std::ostream& os, const ExponentVector& exponents, bool& first_factor) {
  auto emit = [&](std::size_t i) {
    if (!first_factor) os << '*';
    first_factor = false;
    os << 'x' << (i + 1);
    if (exponents[i] != 1) os << '^' << exponents[i];
  };
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 0) emit(i);
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) emit(i);
  }
}

std::string render_term(const Integer& c, const ExponentVector& exponents) {
  std::ostringstream os;
  const bool has_factors =
      std::any_of(exponents.begin(), exponents.end(), [](int e) { return e != 0; });
  bool first_factor = true;
  if (!has_factors) {
    os << c.get_str();
  } else if (c == -1) {
    os << '-';
  } else if (c != 1) {
    os << c.get_str();
    first_factor = false;
  }
  if (has_factors) render_factors(os, exponents, first_factor);
  return os.str();
}

}  // namespace

Monomial mono_mul(const Monomial& m1, const Monomial& m2) {
  if (m1.exponents.size() != m2.exponents.size()) {
    throw InputError("monomials over different numbers of variables");
  }
  Monomial out{m1.coefficient * m2.coefficient, m1.exponents};
  for (std::size_t i = 0; i < out.exponents.size(); ++i) out.exponents[i] += m2.exponents[i];
  return out;
}

std::string to_string(const Monomial& m) { return render_term(m.coefficient, m.exponents); }

LaurentPolynomial::LaurentPolynomial(int num_variables) : num_variables_(num_variables) {
  if (num_variables < 0) throw InputError("negative number of variables");
}

LaurentPolynomial::LaurentPolynomial(const Monomial& m)
    : num_variables_(static_cast<int>(m.exponents.size())) {
  add_term(m.exponents, m.coefficient);
}

LaurentPolynomial LaurentPolynomial::constant(int num_variables, const Integer& c) {
  LaurentPolynomial p(num_variables);
  p.add_term(ExponentVector(static_cast<std::size_t>(num_variables), 0), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(int num_variables, int index) {
  if (index < 1 || index > num_variables) {
    throw InputError("variable index " + std::to_string(index) + " outside 1.." +
                     std::to_string(num_variables));
  }
  ExponentVector e(static_cast<std::size_t>(num_variables), 0);
  e[static_cast<std::size_t>(index - 1)] = 1;
  LaurentPolynomial p(num_variables);
  p.add_term(e, 1);
  return p;
}

void LaurentPolynomial::require_same_rank(int other) const {
  if (other != num_variables_) {
    throw InputError("polynomials over " + std::to_string(num_variables_) + " and " +
                     std::to_string(other) + " variables");
  }
}

void LaurentPolynomial::add_term(const ExponentVector& exponents, const Integer& c) {
  require_same_rank(static_cast<int>(exponents.size()));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& g) {
  require_same_rank(g.num_variables_);
  for (const auto& [e, c] : g.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  f.require_same_rank(g.num_variables_);
  LaurentPolynomial out(f.num_variables_);
  ExponentVector e(static_cast<std::size_t>(f.num_variables_));
  for (const auto& [ef, cf] : f.terms_) {
    for (const auto& [eg, cg] : g.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ef[i] + eg[i];
      out.add_term(e, cf * cg);
    }
  }
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& g) {
  *this = *this * g;
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Monomial& m) {
  require_same_rank(static_cast<int>(m.exponents.size()));
  if (m.coefficient == 0) {
    terms_.clear();
    return *this;
  }
  TermMap shifted;
  for (const auto& [e, c] : terms_) {
    ExponentVector moved = e;
    for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += m.exponents[i];
    shifted.emplace_hint(shifted.end(), std::move(moved), c * m.coefficient);
  }
  // Shifting by a fixed vector preserves lexicographic order, so the hinted
  // inserts above stay at the end.
  terms_ = std::move(shifted);
  return *this;
}

LaurentPolynomial poly_add(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  return f + g;
}

LaurentPolynomial poly_mul(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  return f * g;
}

namespace {

LaurentPolynomial shift_variable(const LaurentPolynomial& f, int index, int delta) {
  if (index < 1 || index > f.num_variables()) {
    throw InputError("variable index " + std::to_string(index) + " outside 1.." +
                     std::to_string(f.num_variables()));
  }
  Monomial m{1, ExponentVector(static_cast<std::size_t>(f.num_variables()), 0)};
  m.exponents[static_cast<std::size_t>(index - 1)] = delta;
  LaurentPolynomial out = f;
  out *= m;
  return out;
}

}  // namespace

LaurentPolynomial divide_by_variable(const LaurentPolynomial& f, int index) {
  return shift_variable(f, index, -1);
}

LaurentPolynomial multiply_by_variable(const LaurentPolynomial& f, int index) {
  return shift_variable(f, index, 1);
}

LaurentPolynomial substitute_one(const LaurentPolynomial& f, std::span<const int> indices) {
  for (int index : indices) {
    if (index < 1 || index > f.num_variables()) {
      throw InputError("variable index " + std::to_string(index) + " out of range");
    }
  }
  LaurentPolynomial out(f.num_variables());
  for (const auto& [e, c] : f.terms()) {
    ExponentVector reduced = e;
    for (int index : indices) reduced[static_cast<std::size_t>(index - 1)] = 0;
    out.add_term(reduced, c);
  }
  return out;
}

Rational evaluate(const LaurentPolynomial& f, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != f.num_variables()) {
    throw InputError("evaluation point has " + std::to_string(point.size()) +
                     " coordinates, expected " + std::to_string(f.num_variables()));
  }
  for (const Rational& q : point) {
    if (q == 0) throw InputError("evaluation point has a zero coordinate");
  }
  Rational total = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
      for (int k = 0; k > e[i]; --k) term /= point[i];
    }
    total += term;
  }
  total.canonicalize();
  return total;
}

std::string to_string(const LaurentPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += render_term(c, e);
  }
  return out;
}

TropicalMonomial::TropicalMonomial(int first_index, std::vector<int> exponents)
    : first_index_(first_index), exponents_(std::move(exponents)) {
  if (first_index < 1) throw InputError("tropical variables are 1-based");
  for (int e : exponents_) {
    if (e < 0) throw InputError("tropical monomial exponents must be non-negative");
  }
}

TropicalMonomial TropicalMonomial::one(int first_index, int count) {
  return TropicalMonomial(first_index, std::vector<int>(static_cast<std::size_t>(count), 0));
}

int TropicalMonomial::exponent_of(int index) const {
  const int offset = index - first_index_;
  if (offset < 0 || offset >= static_cast<int>(exponents_.size())) return 0;
  return exponents_[static_cast<std::size_t>(offset)];
}

void TropicalMonomial::multiply_variable(int index) {
  const int offset = index - first_index_;
  if (offset < 0 || offset >= static_cast<int>(exponents_.size())) {
    throw InputError("x" + std::to_string(index) + " is not a coefficient variable");
  }
  ++exponents_[static_cast<std::size_t>(offset)];
}

namespace {

void require_same_support(const TropicalMonomial& m1, const TropicalMonomial& m2) {
  if (m1.first_index() != m2.first_index() || m1.exponents().size() != m2.exponents().size()) {
    throw InputError("tropical monomials over different variable sets");
  }
}

}  // namespace

TropicalMonomial tropical_add(const TropicalMonomial& m1, const TropicalMonomial& m2) {
  require_same_support(m1, m2);
  std::vector<int> e(m1.exponents().begin(), m1.exponents().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], m2.exponents()[i]);
  return TropicalMonomial(m1.first_index(), std::move(e));
}

TropicalMonomial tropical_mul(const TropicalMonomial& m1, const TropicalMonomial& m2) {
  require_same_support(m1, m2);
  std::vector<int> e(m1.exponents().begin(), m1.exponents().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += m2.exponents()[i];
  return TropicalMonomial(m1.first_index(), std::move(e));
}

std::string to_string(const TropicalMonomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.exponents().size(); ++i) {
    const int e = m.exponents()[i];
    if (e == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (m.first_index() + static_cast<int>(i));
    if (e != 1) os << '^' << e;
  }
  return first ? "1" : os.str();
}

}  // namespace ptolemy
