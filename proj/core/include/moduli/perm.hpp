#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace moduli {

/// Permutation of {0, ..., m-1}; image()[i] is the image of i. The product
/// p * q is the composite "q first, then p".
class Perm {
 public:
  Perm() = default;
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Perm(std::vector<int> images);
  static Perm identity(std::size_t degree);
  /// From disjoint cycles over 1-based points, e.g. {{1,2,3,4}}.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles);

  std::size_t degree() const { return images_.size(); }
  const std::vector<int>& images() const { return images_; }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i)); }

  bool is_identity() const;
  Perm inverse() const;
  int order() const;
  /// Sorted cycle lengths, fixed points included.
  std::vector<int> cycle_type() const;

  friend Perm operator*(const Perm& p, const Perm& q);
  Perm pow(long k) const;
  Perm conjugate_by(const Perm& g) const { return g * *this * g.inverse(); }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

/// Cycle notation over 1-based points, "()" for the identity.
std::string to_string(const Perm& p);

/// All elements of the subgroup generated by `gens` (closure under right multiplication).
std::vector<Perm> generated_subgroup(const std::vector<Perm>& gens, std::size_t degree);

/// All m! permutations in lexicographic order.
std::vector<Perm> symmetric_group(std::size_t degree);

/// A word in named generators: a sequence of (letter, exponent).
struct WordLetter {
  std::string name;
  long exponent = 1;
};
using Word = std::vector<WordLetter>;

/// Parses words such as "A B A^-1", "(BA)^3", "ABA^-1". Letters are single
/// alphabetic characters; parentheses group, '^' takes a signed integer.
Word parse_word(const std::string& text);

/// Left-to-right product of the word under the assignment; throws
/// std::invalid_argument on an unbound letter.
Perm perm_word_eval(const Word& word, const std::map<std::string, Perm>& assignment, std::size_t degree);

}  // namespace moduli
