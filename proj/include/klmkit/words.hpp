#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "klmkit/field.hpp"

namespace klmkit {

/// Freely reduced word in the free group F_n; letter +j stands for x_j,
/// letter -j for x_j^{-1} (1-based j). Reduction is eager, so equal words
/// compare equal as sequences.
class FreeWord {
 public:
  explicit FreeWord(std::size_t rank) : rank_(rank) {}
  FreeWord(std::size_t rank, std::vector<int> letters);

  static FreeWord generator(std::size_t rank, std::size_t j, int sign = 1);

  std::size_t rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  FreeWord operator*(const FreeWord& o) const;
  FreeWord inverse() const;

  bool operator==(const FreeWord& o) const = default;
  std::strong_ordering operator<=>(const FreeWord& o) const = default;

  std::string str() const;

 private:
  std::size_t rank_;
  std::vector<int> letters_;
};

/// Word in the braid group B_n; letter +i stands for sigma_i, -i for its
/// inverse (1 <= i <= n-1). Not reduced: braid words are only evaluated.
class BraidWord {
 public:
  explicit BraidWord(std::size_t strands) : strands_(strands) {}
  BraidWord(std::size_t strands, std::vector<int> letters);

  std::size_t strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }

  BraidWord operator*(const BraidWord& o) const;
  BraidWord inverse() const;

  bool operator==(const BraidWord& o) const = default;

  std::string str() const;

 private:
  std::size_t strands_;
  std::vector<int> letters_;
};

/// Finitely supported k-linear combination of free words.
class GroupRingElement {
 public:
  GroupRingElement(std::size_t rank, const FieldSpec& f)
      : rank_(rank), field_(f) {}

  static GroupRingElement of_word(const FreeWord& w, const Scalar& coeff);

  std::size_t rank() const { return rank_; }
  const FieldSpec& field() const { return field_; }
  const std::map<FreeWord, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const FreeWord& w, const Scalar& coeff);
  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement scaled(const Scalar& c) const;
  /// Right multiplication by a word: every term word is concatenated with w.
  GroupRingElement right_mul(const FreeWord& w) const;

  bool operator==(const GroupRingElement& o) const = default;

 private:
  std::size_t rank_;
  FieldSpec field_;
  std::map<FreeWord, Scalar> terms_;  // no zero coefficients stored
};

/// Action of sigma_i^{+-1} on a free word: x_i -> x_{i+1},
/// x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}, the rest fixed (and the inverse
/// substitution for negative i), followed by free reduction.
FreeWord artin_generator(int braid_letter, const FreeWord& w);

/// theta(b) applied to w, with theta(b1 b2) = theta(b1) o theta(b2).
FreeWord artin_apply(const BraidWord& b, const FreeWord& w);

/// Reversed Fox derivative: the coefficients delta_i with
/// w - 1 = sum_i (x_i - 1) delta_i(w) in the right module basis {x_i - 1}.
/// i is 1-based.
GroupRingElement fox_delta(std::size_t i, const FreeWord& w,
                           const FieldSpec& f);

/// Permutation s with theta(b)(x_j) conjugate to x_{s[j-1]+1}; 0-based array.
std::vector<std::size_t> braid_permutation(const BraidWord& b);

}  // namespace klmkit
