#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace padic {

/// Exact rational with machine-word components. Valuations, thresholds and
/// smallness exponents all live here; magnitudes stay tiny by construction.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long n) : num_(n) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rational operator-() const { return Rational(-num_, den_); }
  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const { return *this + (-o); }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  std::strong_ordering operator<=>(const Rational& o) const {
    return num_ * o.den_ <=> o.num_ * den_;
  }

  /// Largest integer <= this.
  long long floor() const {
    return num_ >= 0 ? num_ / den_ : -((-num_ + den_ - 1) / den_);
  }
  /// Smallest integer >= this.
  long long ceil() const { return -(-*this).floor(); }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "m" or "m/n"; returns nullopt on malformed input.
  static std::optional<Rational> parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
      size_t used = 0;
      if (slash == std::string::npos) {
        long long n = std::stoll(s, &used);
        if (used != s.size()) return std::nullopt;
        return Rational(n);
      }
      long long n = std::stoll(s.substr(0, slash), &used);
      if (used != slash) return std::nullopt;
      std::string dpart = s.substr(slash + 1);
      long long d = std::stoll(dpart, &used);
      if (used != dpart.size() || d == 0) return std::nullopt;
      return Rational(n, d);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num_ = 0;
  long long den_ = 1;
};

/// A p-adic valuation: an exact rational or the distinguished infinite value
/// carried by elements that vanish at working precision. Infinity absorbs
/// addition and is maximal in every comparison.
class Valuation {
 public:
  Valuation() : inf_(true) {}
  Valuation(Rational r) : inf_(false), r_(r) {}
  Valuation(long long n) : inf_(false), r_(n) {}
  static Valuation infinite() { return Valuation(); }

  bool is_infinite() const { return inf_; }
  const Rational& finite() const {
    if (inf_) throw std::domain_error("Valuation: infinite has no finite value");
    return r_;
  }

  Valuation operator+(const Valuation& o) const {
    if (inf_ || o.inf_) return infinite();
    return Valuation(r_ + o.r_);
  }
  Valuation operator-() const {
    if (inf_) throw std::domain_error("Valuation: cannot negate infinite");
    return Valuation(-r_);
  }

  bool operator==(const Valuation& o) const {
    if (inf_ != o.inf_) return false;
    return inf_ || r_ == o.r_;
  }
  bool operator<(const Valuation& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return r_ < o.r_;
  }
  bool operator>(const Valuation& o) const { return o < *this; }
  bool operator<=(const Valuation& o) const { return !(o < *this); }
  bool operator>=(const Valuation& o) const { return !(*this < o); }

  static Valuation min(const Valuation& a, const Valuation& b) {
    return a < b ? a : b;
  }

  std::string to_string() const { return inf_ ? "inf" : r_.to_string(); }

  static std::optional<Valuation> parse(const std::string& s) {
    if (s == "inf") return infinite();
    auto r = Rational::parse(s);
    if (!r) return std::nullopt;
    return Valuation(*r);
  }

 private:
  bool inf_;
  Rational r_;
};

}  // namespace padic
