#include "klmkit/fppoly.hpp"

#include "klmkit/error.hpp"

namespace klmkit::fppoly {

namespace {

std::int64_t mod_pos(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = a, r = p, old_s = 1, s = 0;
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

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly make_monic(const Poly& f, std::int64_t p) {
  Poly g = trim(f);
  if (g.empty()) return g;
  std::int64_t inv = inv_mod(g.back(), p);
  for (auto& c : g) c = c * inv % p;
  return g;
}

Poly add(const Poly& a, const Poly& b, std::int64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  return trim(std::move(r));
}

Poly sub(const Poly& a, const Poly& b, std::int64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = mod_pos(r[i] - b[i], p);
  return trim(std::move(r));
}

Poly mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return trim(std::move(r));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::int64_t p) {
  Poly rem = trim(a), div = trim(b);
  if (div.empty()) throw domain_error("fppoly: division by zero polynomial");
  if (rem.size() < div.size()) return {Poly{}, rem};
  std::int64_t lead_inv = inv_mod(div.back(), p);
  Poly quo(rem.size() - div.size() + 1, 0);
  for (std::size_t k = quo.size(); k-- > 0;) {
    if (rem.size() < div.size() + k) continue;
    std::int64_t c = rem[div.size() - 1 + k] * lead_inv % p;
    if (c == 0) continue;
    quo[k] = c;
    for (std::size_t i = 0; i < div.size(); ++i)
      rem[i + k] = mod_pos(rem[i + k] - c * div[i] % p, p);
    rem = trim(std::move(rem));
  }
  return {trim(std::move(quo)), trim(std::move(rem))};
}

Poly gcd(Poly a, Poly b, std::int64_t p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

std::int64_t eval(const Poly& f, std::int64_t x, std::int64_t p) {
  std::int64_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
  return acc;
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& f,
            std::int64_t p) {
  Poly result{1};
  Poly b = divmod(base, f, p).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(mul(result, result, p), f, p).second;
    if (mpz_tstbit(e.get_mpz_t(), i))
      result = divmod(mul(result, b, p), f, p).second;
  }
  return result;
}

namespace {

// f is a product of distinct monic linear factors, p odd; appends its roots.
void split_linear(const Poly& f, std::int64_t p, std::mt19937_64& rng,
                  std::vector<std::int64_t>& out) {
  if (deg(f) <= 0) return;
  if (deg(f) == 1) {
    out.push_back(mod_pos(-f[0], p));  // monic: x + f0
    return;
  }
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  for (;;) {
    std::int64_t a = dist(rng);
    Poly shifted{a, 1};
    Poly h = powmod(shifted, mpz_class((p - 1) / 2), f, p);
    h = sub(h, Poly{1}, p);
    Poly g = gcd(f, h, p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      split_linear(g, p, rng, out);
      split_linear(divmod(f, g, p).first, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::int64_t> roots(const Poly& f, std::int64_t p,
                                std::mt19937_64& rng) {
  Poly g = make_monic(f, p);
  std::vector<std::int64_t> out;
  if (deg(g) <= 0) return out;
  if (p <= 4096) {
    for (std::int64_t r = 0; r < p; ++r)
      if (eval(g, r, p) == 0) out.push_back(r);
    return out;
  }
  // keep only distinct roots: gcd with x^p - x
  Poly xp = powmod(Poly{0, 1}, mpz_class(p), g, p);
  Poly lin = gcd(g, sub(xp, Poly{0, 1}, p), p);
  split_linear(lin, p, rng, out);
  return out;
}

bool is_irreducible(const Poly& f, std::int64_t p) {
  Poly g = make_monic(f, p);
  int d = deg(g);
  if (d <= 0) return false;
  if (d == 1) return true;
  // no factor of degree <= d/2 iff gcd(f, x^{p^k} - x) = 1 for k <= d/2
  Poly xq = Poly{0, 1};
  for (int k = 1; k <= d / 2; ++k) {
    xq = powmod(xq, mpz_class(p), g, p);
    if (deg(gcd(g, sub(xq, Poly{0, 1}, p), p)) > 0) return false;
  }
  return true;
}

namespace {

// equal-degree splitting: f a product of >= 2 distinct irreducibles of
// degree k, p arbitrary prime
Poly edf_factor(Poly f, int k, std::int64_t p, std::mt19937_64& rng) {
  while (deg(f) > k) {
    std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
    Poly h(static_cast<std::size_t>(deg(f)), 0);
    for (auto& c : h) c = dist(rng);
    h = trim(std::move(h));
    if (deg(h) < 1) continue;
    Poly g;
    if (p == 2) {
      // trace map: h + h^2 + h^4 + ... + h^{2^{k-1}}
      Poly acc = h, term = h;
      for (int i = 1; i < k; ++i) {
        term = divmod(mul(term, term, 2), f, 2).second;
        acc = add(acc, term, 2);
      }
      g = gcd(f, acc, 2);
    } else {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p),
                    static_cast<unsigned long>(k));
      e = (e - 1) / 2;
      Poly t = powmod(h, e, f, p);
      g = gcd(f, sub(t, Poly{1}, p), p);
    }
    if (deg(g) > 0 && deg(g) < deg(f))
      f = deg(g) <= deg(f) - deg(g) ? g : divmod(f, g, p).first;
  }
  return f;
}

}  // namespace

Poly some_irreducible_factor(const Poly& f, std::int64_t p,
                             std::mt19937_64& rng) {
  Poly g = make_monic(f, p);
  if (deg(g) < 1)
    throw domain_error("some_irreducible_factor: constant polynomial");
  // strip to the squarefree part: gcd with the derivative
  Poly d(g.size() - 1, 0);
  for (std::size_t i = 1; i < g.size(); ++i)
    d[i - 1] = g[i] * (static_cast<std::int64_t>(i) % p) % p;
  d = trim(std::move(d));
  if (!d.empty()) {
    Poly sf = divmod(g, gcd(g, d, p), p).first;
    if (deg(sf) >= 1) g = make_monic(sf, p);
  }
  if (is_irreducible(g, p)) return g;
  // distinct-degree: find the smallest k with factors of degree k
  Poly xq = Poly{0, 1};
  for (int k = 1; k <= deg(g); ++k) {
    xq = powmod(xq, mpz_class(p), g, p);
    Poly part = gcd(g, sub(xq, Poly{0, 1}, p), p);
    if (deg(part) == 0) continue;
    if (deg(part) == k) return part;
    return edf_factor(part, k, p, rng);
  }
  // derivative zero everywhere (g a p-th power): fall back on g itself
  return g;
}

}  // namespace klmkit::fppoly
