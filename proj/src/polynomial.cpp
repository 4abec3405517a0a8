#include "subcocycle/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "subcocycle/error.hpp"

namespace subcocycle {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  for (long long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, const BigInt& coefficient) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = coefficient;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

bool IntPolynomial::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, abs(c));
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> c = coeffs_;
  for (auto& v : c) v /= g;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<unsigned>(i);
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<long double> IntPolynomial::evaluate(std::complex<long double> z) const {
  std::complex<long double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + static_cast<long double>(*it);
  return acc;
}

IntPolynomial operator+(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  std::vector<BigInt> c(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = lhs.coefficient(i) + rhs.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  std::vector<BigInt> c(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = lhs.coefficient(i) - rhs.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const BigInt& scalar, const IntPolynomial& p) {
  std::vector<BigInt> c = p.coeffs_;
  for (auto& v : c) v *= scalar;
  return IntPolynomial(std::move(c));
}

std::string to_string(const IntPolynomial& p, char variable) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    BigInt c = p.coefficient(static_cast<std::size_t>(i));
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << variable;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

IntPolynomial parse_coefficients(std::string_view text) {
  std::vector<BigInt> coeffs;
  std::string token;
  std::size_t column = 1, token_column = 1;
  auto flush = [&] {
    if (token.empty()) throw ParseError("empty coefficient", 1, token_column);
    std::size_t start = (token[0] == '-' || token[0] == '+') ? 1 : 0;
    if (start == token.size()) throw ParseError("malformed coefficient '" + token + "'", 1, token_column);
    for (std::size_t i = start; i < token.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(token[i])))
        throw ParseError("malformed coefficient '" + token + "'", 1, token_column + i);
    coeffs.emplace_back(token[0] == '+' ? token.substr(1) : token);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
      token_column = column + 1;
    } else if (ch == '[' || ch == ']' || std::isspace(static_cast<unsigned char>(ch))) {
      if (token.empty()) token_column = column + 1;
    } else {
      token.push_back(ch);
    }
    ++column;
  }
  flush();
  return IntPolynomial(std::move(coeffs));
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& dividend, const IntPolynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (dividend.is_zero()) return IntPolynomial{};
  if (dividend.degree() < divisor.degree()) return std::nullopt;
  std::vector<BigInt> rem = dividend.coefficients();
  const auto& dv = divisor.coefficients();
  const std::size_t dd = dv.size() - 1;
  std::vector<BigInt> quot(rem.size() - dd);
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    if (rem[i] % dv[dd] != 0) return std::nullopt;
    const BigInt q = rem[i] / dv[dd];
    quot[i - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * dv[j];
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (rem[i] != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

namespace {

IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const BigInt& lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(a.degree() - b.degree());
    a = lb * a - IntPolynomial::monomial(shift, a.leading()) * b;
  }
  return a;
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

std::vector<SquareFreeFactor> square_free_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
  std::vector<SquareFreeFactor> out;
  IntPolynomial current = p.primitive_part();
  unsigned multiplicity = 1;
  while (current.degree() > 0) {
    const IntPolynomial g = gcd(current, current.derivative());
    const IntPolynomial all = *exact_quotient(current, g);  // every distinct factor once
    const IntPolynomial repeated = gcd(all, g);
    const IntPolynomial exact_here = *exact_quotient(all, repeated);
    if (exact_here.degree() > 0) out.push_back({exact_here.primitive_part(), multiplicity});
    current = g;
    ++multiplicity;
  }
  return out;
}

IntPolynomial char_poly(const IntMatrix& a) {
  const std::size_t n = a.dimension();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix m(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    const BigInt t = (a * m).trace();
    c[n - k] = -t / static_cast<unsigned>(k);  // exact
  }
  return IntPolynomial(std::move(c));
}

}  // namespace subcocycle
