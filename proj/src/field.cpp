#include "homcat/field.hpp"

#include <charconv>

#include "homcat/error.hpp"

namespace homcat {
namespace {

// BPSW inside GMP has no counterexamples below 2^64, so this is exact here.
bool is_prime(std::uint64_t p) {
  const mpz_class z(std::to_string(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class m;
  mpz_fdiv_r(m.get_mpz_t(), z.get_mpz_t(), mpz_class(std::to_string(p)).get_mpz_t());
  return std::stoull(m.get_str());
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 62)) throw ParseError("prime too large");
  if (!is_prime(p)) throw ParseError("field characteristic " + std::to_string(p) + " is not prime");
  Field f;
  f.p_ = p;
  return f;
}

std::string Field::name() const { return is_rational() ? "Q" : "F_" + std::to_string(p_); }

FieldElem::FieldElem(Field f, long value) : field_(f) {
  if (f.is_rational()) {
    q_ = value;
  } else {
    auto p = static_cast<long long>(f.characteristic());
    long long m = static_cast<long long>(value) % p;
    r_ = static_cast<std::uint64_t>(m < 0 ? m + p : m);
  }
}

FieldElem FieldElem::from_rational(Field f, const mpq_class& q) {
  FieldElem e;
  e.field_ = f;
  if (f.is_rational()) {
    e.q_ = q;
    e.q_.canonicalize();
    return e;
  }
  std::uint64_t p = f.characteristic();
  std::uint64_t den = reduce(q.get_den(), p);
  if (den == 0) throw std::domain_error("denominator vanishes in " + f.name());
  e.r_ = mulmod(reduce(q.get_num(), p), powmod(den, p - 2, p), p);
  return e;
}

FieldElem FieldElem::parse(Field f, std::string_view text) {
  std::string s(text);
  auto bad = [&] { return ParseError("bad scalar \"" + s + "\" for field " + f.name()); };
  auto digits_ok = [](std::string_view t, bool allow_sign) {
    if (!t.empty() && allow_sign && t.front() == '-') t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (f.is_rational()) {
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
    mpq_class q{mpz_class(num), mpz_class(den)};
    if (q.get_den() == 0) throw bad();
    return from_rational(f, q);
  }
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (!digits_ok(s, false) || ec != std::errc() || ptr != s.data() + s.size() ||
      v >= f.characteristic())
    throw bad();
  FieldElem e;
  e.field_ = f;
  e.r_ = v;
  return e;
}

bool FieldElem::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool FieldElem::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  FieldElem e;
  e.field_ = field_;
  if (field_.is_rational())
    e.q_ = 1 / q_;
  else
    e.r_ = powmod(r_, field_.characteristic() - 2, field_.characteristic());
  return e;
}

std::string FieldElem::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

void FieldElem::require_same(const FieldElem& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("mixing " + field_.name() + " and " + o.field_.name());
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  require_same(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    r_ += o.r_;
    if (r_ >= field_.characteristic()) r_ -= field_.characteristic();
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  require_same(o);
  if (field_.is_rational()) {
    q_ -= o.q_;
  } else {
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + field_.characteristic() - o.r_;
  }
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  require_same(o);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    r_ = mulmod(r_, o.r_, field_.characteristic());
  return *this;
}

void FieldElem::add_product(const FieldElem& a, const FieldElem& b) {
  require_same(a);
  require_same(b);
  if (field_.is_rational()) {
    if (sgn(a.q_) == 0 || sgn(b.q_) == 0) return;
    if (a.q_.get_den() == 1 && b.q_.get_den() == 1 && q_.get_den() == 1) {
      mpz_addmul(q_.get_num_mpz_t(), a.q_.get_num_mpz_t(), b.q_.get_num_mpz_t());
      return;
    }
    q_ += a.q_ * b.q_;
  } else {
    r_ = (r_ + mulmod(a.r_, b.r_, field_.characteristic())) % field_.characteristic();
  }
}

FieldElem FieldElem::operator-() const {
  FieldElem e = *this;
  if (field_.is_rational())
    e.q_ = -q_;
  else if (r_ != 0)
    e.r_ = field_.characteristic() - r_;
  return e;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

}  // namespace homcat
