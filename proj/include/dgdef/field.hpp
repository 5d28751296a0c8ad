#ifndef DGDEF_FIELD_HPP
#define DGDEF_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "dgdef/errors.hpp"

namespace dgdef {

// Exact rational scalars. All arithmetic in this library is exact; no
// floating point anywhere. Expression templates are off so that operators
// return plain values, as generic code expects.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

constexpr bool is_prime_u(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Prime field with p elements, p a compile-time prime.
template <unsigned P>
class Fp {
  static_assert(is_prime_u(P), "modulus must be prime");
  unsigned v_ = 0;

 public:
  Fp() = default;
  Fp(long long n) {
    long long r = n % static_cast<long long>(P);
    if (r < 0) r += P;
    v_ = static_cast<unsigned>(r);
  }
  unsigned value() const { return v_; }

  friend Fp operator+(Fp a, Fp b) { return Fp((long long)a.v_ + b.v_); }
  friend Fp operator-(Fp a, Fp b) { return Fp((long long)a.v_ + P - b.v_); }
  friend Fp operator*(Fp a, Fp b) { return Fp((long long)a.v_ * b.v_); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return Fp((long long)P - v_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp inverse() const {
    if (v_ == 0) throw InternalError("division by zero in prime field");
    // extended Euclid
    long long t = 0, nt = 1, r = P, nr = v_;
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += P;
    return Fp(t);
  }
};

// Runtime descriptor of the ground field, as it appears in files and reports.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  unsigned characteristic = 0;  // 0 for the rationals, else the prime

  bool operator==(const FieldSpec&) const = default;

  static FieldSpec rationals() { return {Kind::Rationals, 0}; }
  static FieldSpec prime(unsigned p) {
    if (!is_prime_u(p)) throw SchemaError("characteristic must be prime, got " + std::to_string(p));
    return {Kind::PrimeField, p};
  }
  std::string name() const {
    return kind == Kind::Rationals ? "q" : "f" + std::to_string(characteristic);
  }
};

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr bool finite = false;
  static constexpr unsigned characteristic = 0;
  static FieldSpec spec() { return FieldSpec::rationals(); }
  static std::string to_string(const Rational& x) { return x.str(); }
  static Rational parse(const std::string& s) {
    try {
      return Rational(s);
    } catch (const std::exception&) {
      throw SchemaError("bad rational scalar '" + s + "'");
    }
  }
};

template <unsigned P>
struct FieldTraits<Fp<P>> {
  static constexpr bool finite = true;
  static constexpr unsigned characteristic = P;
  static FieldSpec spec() { return FieldSpec::prime(P); }
  static std::string to_string(const Fp<P>& x) { return std::to_string(x.value()); }
  static Fp<P> parse(const std::string& s) {
    try {
      return Fp<P>(std::stoll(s));
    } catch (const std::exception&) {
      throw SchemaError("bad scalar '" + s + "' for field f" + std::to_string(P));
    }
  }
  // enumeration order 0, 1, ..., p-1; all set-valued results depend on it
  static constexpr unsigned size = P;
  static Fp<P> element(unsigned i) { return Fp<P>(i); }
};

using F2 = Fp<2>;
using F3 = Fp<3>;
using F5 = Fp<5>;

}  // namespace dgdef

#endif
