#include "gamma2/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gamma2 {
namespace {

int total_degree(const Polynomial::Exponents& e, int dim) {
  int s = 0;
  for (int i = 0; i < dim; ++i) s += e[i];
  return s;
}

void monomials_rec(int dim, int pos, int remaining, Polynomial::Exponents& cur,
                   std::vector<Polynomial::Exponents>& out) {
  if (pos == dim - 1) {
    cur[pos] = static_cast<std::uint8_t>(remaining);
    out.push_back(cur);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[pos] = static_cast<std::uint8_t>(k);
    monomials_rec(dim, pos + 1, remaining - k, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

Polynomial::Polynomial(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw std::invalid_argument("Polynomial: unsupported dimension " + std::to_string(dim));
  }
}

Polynomial Polynomial::constant(int dim, double c) {
  Polynomial p(dim);
  p.add_term(Exponents{}, c);
  return p;
}

Polynomial Polynomial::coordinate(int dim, int i) {
  if (i < 0 || i >= dim) throw std::invalid_argument("Polynomial::coordinate: index out of range");
  Polynomial p(dim);
  Exponents e{};
  e[i] = 1;
  p.add_term(e, 1.0);
  return p;
}

std::vector<Polynomial::Exponents> Polynomial::monomials_of_degree(int dim, int degree) {
  std::vector<Exponents> out;
  Exponents cur{};
  monomials_rec(dim, 0, degree, cur, out);
  return out;
}

void Polynomial::add_term(const Exponents& e, double c) {
  for (int i = dim_; i < kMaxDim; ++i) {
    if (e[i] != 0) throw std::invalid_argument("Polynomial::add_term: exponent beyond dimension");
  }
  auto it = std::find_if(terms_.begin(), terms_.end(),
                         [&](const Term& t) { return t.exponents == e; });
  if (it != terms_.end()) {
    it->coefficient += c;
  } else if (c != 0.0) {
    terms_.push_back({e, c});
  }
}

int Polynomial::degree() const noexcept {
  int deg = 0;
  for (const auto& t : terms_) deg = std::max(deg, total_degree(t.exponents, dim_));
  return deg;
}

bool Polynomial::is_even() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return total_degree(t.exponents, dim_) % 2 == 0; });
}

double Polynomial::value(const Vector& x) const { return jet(x).value; }

AmbientJet Polynomial::jet(const Vector& x) const {
  if (x.size() != dim_) throw std::invalid_argument("Polynomial::jet: dimension mismatch");
  const int d = dim_;
  const int maxdeg = degree();
  // pw[i][k] = x_i^k
  std::array<std::array<double, 16>, kMaxDim> pw{};
  if (maxdeg >= 16) throw std::invalid_argument("Polynomial::jet: degree above 15");
  for (int i = 0; i < d; ++i) {
    pw[i][0] = 1.0;
    for (int k = 1; k <= maxdeg; ++k) pw[i][k] = pw[i][k - 1] * x(i);
  }

  AmbientJet out;
  out.value = 0.0;
  out.gradient = Vector::Zero(d);
  out.hessian = Matrix::Zero(d, d);
  std::array<double, kMaxDim> base{}, d1{}, d2{};
  for (const auto& term : terms_) {
    const double c = term.coefficient;
    for (int i = 0; i < d; ++i) {
      const int e = term.exponents[i];
      base[i] = pw[i][e];
      d1[i] = e >= 1 ? e * pw[i][e - 1] : 0.0;
      d2[i] = e >= 2 ? e * (e - 1) * pw[i][e - 2] : 0.0;
    }
    double prod = c;
    for (int i = 0; i < d; ++i) prod *= base[i];
    out.value += prod;
    for (int i = 0; i < d; ++i) {
      if (term.exponents[i] == 0) continue;
      double gi = c * d1[i];
      double hii = c * d2[i];
      for (int k = 0; k < d; ++k) {
        if (k == i) continue;
        gi *= base[k];
        hii *= base[k];
      }
      out.gradient(i) += gi;
      out.hessian(i, i) += hii;
      for (int j = i + 1; j < d; ++j) {
        if (term.exponents[j] == 0) continue;
        double hij = c * d1[i] * d1[j];
        for (int k = 0; k < d; ++k) {
          if (k == i || k == j) continue;
          hij *= base[k];
        }
        out.hessian(i, j) += hij;
        out.hessian(j, i) += hij;
      }
    }
  }
  return out;
}

AmbientFunction Polynomial::as_ambient() const {
  Polynomial copy = *this;
  return AmbientFunction(dim_, [copy](const Vector& x) { return copy.jet(x); });
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("Polynomial: dimension mismatch");
  for (const auto& t : other.terms_) add_term(t.exponents, t.coefficient);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  out += other;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("Polynomial: dimension mismatch");
  Polynomial out(dim_);
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      Exponents e{};
      for (int i = 0; i < dim_; ++i) e[i] = static_cast<std::uint8_t>(a.exponents[i] + b.exponents[i]);
      out.add_term(e, a.coefficient * b.coefficient);
    }
  }
  return out;
}

Polynomial Polynomial::operator*(double c) const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coefficient *= c;
  return out;
}

}  // namespace gamma2
