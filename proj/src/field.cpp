#include "klmkit/field.hpp"

#include <cctype>

namespace klmkit {

namespace {

bool is_small_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_pos(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

// extended Euclid; a in [1, p)
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return mod_pos(old_s, p);
}

}  // namespace

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31))
    throw domain_error("prime field modulus must be < 2^31, got " +
                       std::to_string(p));
  if (!is_small_prime(p))
    throw domain_error("prime field modulus must be prime, got " +
                       std::to_string(p));
  return FieldSpec{FieldKind::PrimeField, p};
}

std::string FieldSpec::str() const {
  return is_rational() ? "rational" : "prime:" + std::to_string(p);
}

Scalar Scalar::zero(const FieldSpec& f) { return Scalar(f, mpq_class(0), 0); }

Scalar Scalar::one(const FieldSpec& f) {
  return f.is_rational() ? Scalar(f, mpq_class(1), 0)
                         : Scalar(f, mpq_class(0), 1 % f.p);
}

Scalar Scalar::of_int(std::int64_t v, const FieldSpec& f) {
  if (f.is_rational()) return Scalar(f, mpq_class(static_cast<long>(v)), 0);
  return Scalar(f, mpq_class(0), mod_pos(v, f.p));
}

Scalar Scalar::of_mpq(mpq_class q) {
  q.canonicalize();
  return Scalar(FieldSpec::rational(), std::move(q), 0);
}

Scalar Scalar::of_residue(std::int64_t r, const FieldSpec& f) {
  if (!f.is_prime_field())
    throw domain_error("of_residue requires a prime field");
  return Scalar(f, mpq_class(0), mod_pos(r, f.p));
}

Scalar Scalar::parse(std::string_view text, const FieldSpec& f) {
  auto fail = [&] {
    throw parse_error("malformed scalar '" + std::string(text) + "' for " +
                      f.str() + " field");
  };
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && text[i] == '-') {
    neg = true;
    ++i;
  }
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    ++i;
  if (i == num_begin) fail();
  std::string num(text.substr(num_begin, i - num_begin));
  std::string den;
  if (i < text.size() && text[i] == '/') {
    if (f.is_prime_field()) fail();  // fractions have no prime-field syntax
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == den_begin) fail();
    den = text.substr(den_begin, i - den_begin);
  }
  if (i != text.size()) fail();

  if (f.is_rational()) {
    mpz_class n(num), d(den.empty() ? "1" : den);
    if (d == 0)
      throw parse_error("zero denominator in scalar '" + std::string(text) +
                        "'");
    if (neg) n = -n;
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(f, std::move(q), 0);
  }
  mpz_class n(num);
  mpz_class r = n % f.p;
  std::int64_t v = r.get_si();
  if (neg) v = -v;
  return Scalar(f, mpq_class(0), mod_pos(v, f.p));
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1 % field_.p;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw domain_error("scalar arithmetic across distinct fields (" +
                       field_.str() + " vs " + o.field_.str() + ")");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rational()) return Scalar(field_, q_ + o.q_, 0);
  return Scalar(field_, mpq_class(0), (r_ + o.r_) % field_.p);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rational()) return Scalar(field_, q_ - o.q_, 0);
  return Scalar(field_, mpq_class(0), mod_pos(r_ - o.r_, field_.p));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rational()) return Scalar(field_, q_ * o.q_, 0);
  return Scalar(field_, mpq_class(0), (r_ * o.r_) % field_.p);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, -q_, 0);
  return Scalar(field_, mpq_class(0), mod_pos(-r_, field_.p));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw domain_error("inverse of zero scalar");
  if (field_.is_rational()) return Scalar(field_, 1 / q_, 0);
  return Scalar(field_, mpq_class(0), mod_inverse(r_, field_.p));
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.field_.is_rational()) return ::cmp(a.q_, b.q_);
  return a.r_ < b.r_ ? -1 : a.r_ > b.r_ ? 1 : 0;
}

std::string Scalar::str() const {
  if (field_.is_rational()) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace klmkit
