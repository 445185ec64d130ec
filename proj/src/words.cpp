#include "klmkit/words.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace klmkit {

namespace {

std::vector<int> free_reduce(const std::vector<int>& letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int l : letters) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

void check_letters(const std::vector<int>& letters, std::size_t max_index,
                   const char* what) {
  for (int l : letters) {
    std::size_t a = static_cast<std::size_t>(std::abs(l));
    if (l == 0 || a > max_index)
      throw domain_error(std::string(what) + ": letter " + std::to_string(l) +
                         " out of range");
  }
}

}  // namespace

FreeWord::FreeWord(std::size_t rank, std::vector<int> letters) : rank_(rank) {
  check_letters(letters, rank, "free word");
  letters_ = free_reduce(letters);
}

FreeWord FreeWord::generator(std::size_t rank, std::size_t j, int sign) {
  return FreeWord(rank, {sign >= 0 ? static_cast<int>(j)
                                   : -static_cast<int>(j)});
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  if (rank_ != o.rank_) throw domain_error("free word product: rank mismatch");
  std::vector<int> cat = letters_;
  cat.insert(cat.end(), o.letters_.begin(), o.letters_.end());
  return FreeWord(rank_, std::move(cat));
}

FreeWord FreeWord::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& l : inv) l = -l;
  return FreeWord(rank_, std::move(inv));
}

std::string FreeWord::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << " ";
    os << "x" << std::abs(letters_[i]) << (letters_[i] < 0 ? "^-1" : "");
  }
  return os.str();
}

BraidWord::BraidWord(std::size_t strands, std::vector<int> letters)
    : strands_(strands) {
  if (strands < 1) throw domain_error("braid word: strand count must be >= 1");
  check_letters(letters, strands - 1, "braid word");
  letters_ = std::move(letters);
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  if (strands_ != o.strands_)
    throw domain_error("braid word product: strand mismatch");
  std::vector<int> cat = letters_;
  cat.insert(cat.end(), o.letters_.begin(), o.letters_.end());
  return BraidWord(strands_, std::move(cat));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& l : inv) l = -l;
  return BraidWord(strands_, std::move(inv));
}

std::string BraidWord::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << " ";
    os << "s" << std::abs(letters_[i]) << (letters_[i] < 0 ? "^-1" : "");
  }
  return os.str();
}

GroupRingElement GroupRingElement::of_word(const FreeWord& w,
                                           const Scalar& coeff) {
  GroupRingElement e(w.rank(), coeff.field());
  e.add_term(w, coeff);
  return e;
}

void GroupRingElement::add_term(const FreeWord& w, const Scalar& coeff) {
  if (w.rank() != rank_)
    throw domain_error("group ring element: rank mismatch");
  if (coeff.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, coeff);
    return;
  }
  Scalar s = it->second + coeff;
  if (s.is_zero())
    terms_.erase(it);
  else
    it->second = s;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  if (rank_ != o.rank_ || field_ != o.field_)
    throw domain_error("group ring sum: rank/field mismatch");
  GroupRingElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

GroupRingElement GroupRingElement::scaled(const Scalar& c) const {
  GroupRingElement r(rank_, field_);
  if (c.is_zero()) return r;
  for (const auto& [w, co] : terms_) r.add_term(w, co * c);
  return r;
}

GroupRingElement GroupRingElement::right_mul(const FreeWord& w) const {
  GroupRingElement r(rank_, field_);
  for (const auto& [ww, c] : terms_) r.add_term(ww * w, c);
  return r;
}

FreeWord artin_generator(int braid_letter, const FreeWord& w) {
  const std::size_t n = w.rank();
  std::size_t i = static_cast<std::size_t>(std::abs(braid_letter));
  if (braid_letter == 0 || i + 1 > n)
    throw domain_error("artin_generator: braid index " +
                       std::to_string(braid_letter) + " out of range");
  std::vector<int> out;
  const int xi = static_cast<int>(i), xi1 = static_cast<int>(i + 1);
  for (int l : w.letters()) {
    if (braid_letter > 0) {
      if (l == xi) {
        out.push_back(xi1);
      } else if (l == -xi) {
        out.push_back(-xi1);
      } else if (l == xi1) {
        out.insert(out.end(), {-xi1, xi, xi1});
      } else if (l == -xi1) {
        out.insert(out.end(), {-xi1, -xi, xi1});
      } else {
        out.push_back(l);
      }
    } else {
      // inverse substitution: x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i
      if (l == xi) {
        out.insert(out.end(), {xi, xi1, -xi});
      } else if (l == -xi) {
        out.insert(out.end(), {xi, -xi1, -xi});
      } else if (l == xi1) {
        out.push_back(xi);
      } else if (l == -xi1) {
        out.push_back(-xi);
      } else {
        out.push_back(l);
      }
    }
  }
  return FreeWord(n, std::move(out));
}

FreeWord artin_apply(const BraidWord& b, const FreeWord& w) {
  if (b.strands() != w.rank())
    throw domain_error("artin_apply: rank mismatch");
  FreeWord cur = w;
  for (std::size_t i = b.letters().size(); i-- > 0;)
    cur = artin_generator(b.letters()[i], cur);
  return cur;
}

GroupRingElement fox_delta(std::size_t i, const FreeWord& w,
                           const FieldSpec& f) {
  if (i < 1 || i > w.rank())
    throw domain_error("fox_delta: index out of range");
  // delta_i(uv) = delta_i(u) v + delta_i(v); delta_i(x_j) = [i=j],
  // delta_i(x_j^{-1}) = -[i=j] x_j^{-1}. Each letter contributes a term
  // carrying the suffix of the word behind it.
  GroupRingElement out(w.rank(), f);
  const auto& letters = w.letters();
  const int xi = static_cast<int>(i);
  for (std::size_t t = 0; t < letters.size(); ++t) {
    if (letters[t] == xi) {
      std::vector<int> suffix(letters.begin() + t + 1, letters.end());
      out.add_term(FreeWord(w.rank(), std::move(suffix)), Scalar::one(f));
    } else if (letters[t] == -xi) {
      std::vector<int> suffix(letters.begin() + t, letters.end());
      out.add_term(FreeWord(w.rank(), std::move(suffix)), -Scalar::one(f));
    }
  }
  return out;
}

std::vector<std::size_t> braid_permutation(const BraidWord& b) {
  const std::size_t n = b.strands();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // perm(b1 b2) = perm(b1) o perm(b2); apply letters right to left
  for (std::size_t t = b.letters().size(); t-- > 0;) {
    std::size_t i = static_cast<std::size_t>(std::abs(b.letters()[t])) - 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (perm[j] == i)
        perm[j] = i + 1;
      else if (perm[j] == i + 1)
        perm[j] = i;
    }
  }
  return perm;
}

}  // namespace klmkit
