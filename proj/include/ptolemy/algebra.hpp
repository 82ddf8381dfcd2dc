#pragma once

// Exact sparse Laurent polynomials in x_1..x_r with arbitrary-precision
// integer coefficients, and the tropical semifield on boundary variables.

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <vector>

namespace ptolemy {

using Integer = mpz_class;
using Rational = mpq_class;

// exponents[i] is the exponent of x_{i+1}; entries may be negative.
using ExponentVector = std::vector<int>;

struct Monomial {
  Integer coefficient{1};
  ExponentVector exponents;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial mono_mul(const Monomial& m1, const Monomial& m2);
std::string to_string(const Monomial& m);

class LaurentPolynomial {
 public:
  using TermMap = std::map<ExponentVector, Integer>;

  // The zero polynomial in `num_variables` variables.
  explicit LaurentPolynomial(int num_variables);
  explicit LaurentPolynomial(const Monomial& m);

  static LaurentPolynomial constant(int num_variables, const Integer& c);
  // x_index, 1-based.
  static LaurentPolynomial variable(int num_variables, int index);

  int num_variables() const { return num_variables_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Ascending lexicographic order of exponent vectors.
  const TermMap& terms() const { return terms_; }

  // Adds c * x^e, merging with an existing term and dropping zeros.
  void add_term(const ExponentVector& exponents, const Integer& c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& g);
  LaurentPolynomial& operator*=(const LaurentPolynomial& g);
  LaurentPolynomial& operator*=(const Monomial& m);

  friend LaurentPolynomial operator+(LaurentPolynomial f, const LaurentPolynomial& g) {
    f += g;
    return f;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& f, const LaurentPolynomial& g);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void require_same_rank(int other) const;

  int num_variables_;
  TermMap terms_;
};

LaurentPolynomial poly_add(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial poly_mul(const LaurentPolynomial& f, const LaurentPolynomial& g);

// Every exponent of x_index decremented by one. Always exact.
LaurentPolynomial divide_by_variable(const LaurentPolynomial& f, int index);
LaurentPolynomial multiply_by_variable(const LaurentPolynomial& f, int index);

// Sets x_i = 1 for every listed (1-based) index and merges terms.
LaurentPolynomial substitute_one(const LaurentPolynomial& f, std::span<const int> indices);

// Exact value at a point with nonzero coordinates.
Rational evaluate(const LaurentPolynomial& f, std::span<const Rational> point);

// "x7*x11*x3^-1 + 2*x1^-1": positive-exponent factors by ascending index,
// then negative ones; coefficient omitted when 1. Zero renders as "0".
std::string to_string(const LaurentPolynomial& f);

// Element of the tropical semifield on x_{first}..x_{first+k-1} with
// non-negative exponents. Multiplication adds exponents; the auxiliary
// addition takes componentwise minima.
class TropicalMonomial {
 public:
  TropicalMonomial(int first_index, std::vector<int> exponents);
  static TropicalMonomial one(int first_index, int count);

  int first_index() const { return first_index_; }
  std::span<const int> exponents() const { return exponents_; }
  // Exponent of x_index; zero outside the support range.
  int exponent_of(int index) const;
  void multiply_variable(int index);

  friend bool operator==(const TropicalMonomial&, const TropicalMonomial&) = default;

 private:
  int first_index_;
  std::vector<int> exponents_;
};

TropicalMonomial tropical_add(const TropicalMonomial& m1, const TropicalMonomial& m2);
TropicalMonomial tropical_mul(const TropicalMonomial& m1, const TropicalMonomial& m2);
// "x4*x6", or "1" for the empty product.
std::string to_string(const TropicalMonomial& m);

}  // namespace ptolemy
