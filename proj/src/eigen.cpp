#include "klmkit/eigen.hpp"

#include <algorithm>
#include <map>

#include "klmkit/fppoly.hpp"

namespace klmkit {

namespace {

// ---- Samuelson-Berkowitz over Scalar, coefficients x^n down to x^0 ----

std::vector<Scalar> berkowitz(const ExactMatrix& a) {
  const FieldSpec f = a.field();
  const std::size_t n = a.rows();
  std::vector<Scalar> c{Scalar::one(f)};
  for (std::size_t r = 1; r <= n; ++r) {
    // leading (r-1)x(r-1) block M, row R, column S, corner entry
    std::vector<Scalar> t;
    t.reserve(r + 1);
    t.push_back(Scalar::one(f));
    t.push_back(-a.at(r - 1, r - 1));
    std::vector<Scalar> w(r - 1, Scalar::zero(f));
    for (std::size_t i = 0; i + 1 < r; ++i) w[i] = a.at(i, r - 1);  // S
    for (std::size_t k = 2; k <= r; ++k) {
      Scalar dot = Scalar::zero(f);
      for (std::size_t i = 0; i + 1 < r; ++i)
        dot = dot + a.at(r - 1, i) * w[i];  // R . M^{k-2} S
      t.push_back(-dot);
      if (k == r) break;
      std::vector<Scalar> w2(r - 1, Scalar::zero(f));
      for (std::size_t i = 0; i + 1 < r; ++i)
        for (std::size_t j = 0; j + 1 < r; ++j)
          w2[i] = w2[i] + a.at(i, j) * w[j];
      w = std::move(w2);
    }
    std::vector<Scalar> next(r + 1, Scalar::zero(f));
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = 0; j < c.size() && j <= i; ++j)
        next[i] = next[i] + t[i - j] * c[j];
    c = std::move(next);
  }
  return c;
}

mpz_class denominator_lcm(const ExactMatrix& m) {
  mpz_class l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
              m.at(i, j).rat().get_den().get_mpz_t());
  return l;
}

// ---- integer factorization for the rational root search ----

mpz_class pollard_rho(const mpz_class& n, std::mt19937_64& rng) {
  if (n % 2 == 0) return 2;
  for (;;) {
    mpz_class c(static_cast<unsigned long>(rng() % 1000 + 1));
    mpz_class x(static_cast<unsigned long>(rng() % 1000 + 2)), y = x, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = x > y ? x - y : y - x;
      if (diff == 0) break;  // cycle without factor; retry with new c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& out,
                 std::mt19937_64& rng) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 32) != 0) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_rho(n, rng);
  factor_into(d, out, rng);
  factor_into(n / d, out, rng);
}

std::map<mpz_class, unsigned> factor(mpz_class n, std::mt19937_64& rng) {
  std::map<mpz_class, unsigned> out;
  for (long q : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (n % q == 0) {
      ++out[mpz_class(q)];
      n /= q;
    }
  }
  for (long q = 17; q < 100000 && mpz_class(q) * q <= n; q += 2) {
    while (n % q == 0) {
      ++out[mpz_class(q)];
      n /= q;
    }
  }
  if (n > 1) factor_into(n, out, rng);
  return out;
}

void enumerate_divisors(const std::map<mpz_class, unsigned>& fac,
                        std::vector<mpz_class>& out) {
  out.push_back(1);
  for (const auto& [prime, e] : fac) {
    const std::size_t base = out.size();
    if (base * (e + 1) > 2'000'000)
      throw internal_error("rational root search: divisor explosion");
    mpz_class pw = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pw *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
    }
  }
}

mpz_class eval_mpz(const std::vector<mpz_class>& coeffs_desc,
                   const mpz_class& x) {
  mpz_class acc = 0;
  for (const mpz_class& c : coeffs_desc) acc = acc * x + c;
  return acc;
}

}  // namespace

std::vector<Scalar> charpoly(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw domain_error("charpoly: non-square matrix");
  const FieldSpec f = m.field();
  ExactMatrix work = m;
  mpz_class den = 1;
  if (f.is_rational()) {
    den = denominator_lcm(m);
    if (den != 1) work = m.scaled(Scalar::of_mpq(mpq_class(den)));
  }
  std::vector<Scalar> desc = berkowitz(work);  // monic, x^n .. x^0
  if (f.is_rational() && den != 1) {
    // det(xI - m) = den^{-n} det((den x)I - den m)
    mpq_class pw = 1;
    for (std::size_t i = 1; i < desc.size(); ++i) {
      pw /= den;
      desc[i] = desc[i] * Scalar::of_mpq(pw);
    }
  }
  std::reverse(desc.begin(), desc.end());
  return desc;
}

std::vector<Scalar> eigenvalues_in_field(const ExactMatrix& m) {
  if (m.rows() != m.cols())
    throw domain_error("eigenvalues_in_field: non-square matrix");
  const FieldSpec f = m.field();
  std::vector<Scalar> out;
  if (m.rows() == 0) return out;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);

  if (f.is_prime_field()) {
    std::vector<Scalar> cp = charpoly(m);
    fppoly::Poly poly(cp.size());
    for (std::size_t i = 0; i < cp.size(); ++i) poly[i] = cp[i].residue();
    for (std::int64_t r : fppoly::roots(poly, f.p, rng))
      out.push_back(Scalar::of_residue(r, f));
  } else {
    // Integer eigenvalues of the cleared matrix den*m divide the constant
    // term of its monic integer characteristic polynomial; eigenvalues of m
    // are those divided by den.
    mpz_class den = denominator_lcm(m);
    ExactMatrix cleared =
        den == 1 ? m : m.scaled(Scalar::of_mpq(mpq_class(den)));
    std::vector<Scalar> desc = berkowitz(cleared);
    std::vector<mpz_class> coeffs(desc.size());
    for (std::size_t i = 0; i < desc.size(); ++i)
      coeffs[i] = desc[i].rat().get_num();  // denominators are 1 here
    // deflate roots at zero
    bool zero_root = false;
    while (coeffs.size() > 1 && coeffs.back() == 0) {
      coeffs.pop_back();
      zero_root = true;
    }
    if (zero_root) out.push_back(Scalar::zero(f));
    if (coeffs.size() > 1) {
      mpz_class constant = coeffs.back();
      mpz_class abs_c = abs(constant);
      std::vector<mpz_class> divisors;
      enumerate_divisors(factor(abs_c, rng), divisors);
      for (const mpz_class& d : divisors) {
        for (int sign : {1, -1}) {
          mpz_class cand = sign * d;
          if (eval_mpz(coeffs, cand) == 0)
            out.push_back(Scalar::of_mpq(mpq_class(cand, den)));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Scalar& a, const Scalar& b) { return Scalar::cmp(a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace klmkit
