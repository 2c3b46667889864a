#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace homcat {

// Q when characteristic() == 0, otherwise F_p.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  std::uint64_t p_ = 0;
};

class FieldElem {
 public:
  FieldElem() = default;  // rational zero
  FieldElem(Field f, long value);
  static FieldElem from_rational(Field f, const mpq_class& q);
  // "a" or "a/b" over Q, a decimal residue in [0,p) over F_p.
  static FieldElem parse(Field f, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  FieldElem inverse() const;
  std::string to_string() const;
  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o) { return *this *= o.inverse(); }
  // this += a*b without a temporary on the rational path
  void add_product(const FieldElem& a, const FieldElem& b);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  FieldElem operator-() const;

  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  void require_same(const FieldElem& o) const;

  Field field_;
  std::uint64_t r_ = 0;
  mpq_class q_;
};

}  // namespace homcat
