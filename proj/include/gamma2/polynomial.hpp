#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gamma2/sphere_geometry.hpp"

namespace gamma2 {

/// Sparse multivariate polynomial on R^d with exact gradient and Hessian.
class Polynomial {
 public:
  using Exponents = std::array<std::uint8_t, kMaxDim>;

  struct Term {
    Exponents exponents{};
    double coefficient = 0.0;
  };

  explicit Polynomial(int dim);

  static Polynomial constant(int dim, double c);
  /// The coordinate function x_i.
  static Polynomial coordinate(int dim, int i);

  /// All exponent vectors of total degree exactly `degree`, in lexicographic order.
  static std::vector<Exponents> monomials_of_degree(int dim, int degree);

  void add_term(const Exponents& e, double c);

  int dim() const noexcept { return dim_; }
  int degree() const noexcept;
  bool is_even() const noexcept;
  const std::vector<Term>& terms() const noexcept { return terms_; }

  double value(const Vector& x) const;
  AmbientJet jet(const Vector& x) const;
  AmbientFunction as_ambient() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(double c) const;

 private:
  int dim_;
  std::vector<Term> terms_;
};

}  // namespace gamma2
