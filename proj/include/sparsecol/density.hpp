#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sparsecol/error.hpp"

namespace sparsecol {

using Vertex = int;

/// Exact non-negative rational in lowest terms. All density comparisons in
/// the library go through this type; nothing is ever rounded to floating
/// point before a decision is made.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  /// Largest integer not exceeding the value (values are non-negative here,
  /// but negative numerators are handled too).
  std::int64_t floor() const noexcept;
  std::int64_t ceil() const noexcept;
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string to_string() const;

  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator+(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) noexcept;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

/// A vertex set together with the exact average degree 2|E(H)|/|V(H)| of the
/// subgraph H it induces.
struct DensityCertificate {
  std::vector<Vertex> witness;
  Rational density;
};

/// Raised by the peeling solvers when the graph is too dense for the bound
/// requested: the certificate is an induced subgraph whose average degree
/// meets or exceeds the threshold.
class DensityViolation : public Error {
 public:
  DensityViolation(DensityCertificate certificate, Rational threshold,
                   const std::string& what)
      : Error(Errc::DensityViolation, what),
        certificate_(std::move(certificate)),
        threshold_(threshold) {}

  const DensityCertificate& certificate() const noexcept {
    return certificate_;
  }
  const Rational& threshold() const noexcept { return threshold_; }

 private:
  DensityCertificate certificate_;
  Rational threshold_;
};

}  // namespace sparsecol
