#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moduli/perm.hpp"
#include "moduli/signatures.hpp"

namespace moduli {

/// Tuple (t_1, ..., t_n) of permutations for a genus-0 signature. All n
/// entries are stored; the last is (t_1 ... t_{n-1})^{-1} for vectors built
/// by the enumerator.
struct GenVector {
  Signature signature;
  std::vector<Perm> entries;

  friend bool operator==(const GenVector& a, const GenVector& b) { return a.entries == b.entries; }
  friend auto operator<=>(const GenVector& a, const GenVector& b) { return a.entries <=> b.entries; }
};

/// Problems with v as a smooth epimorphism onto S_m: wrong orders, nontrivial
/// product, or a proper generated subgroup. Empty when v is valid.
std::vector<std::string> gen_vector_problems(const GenVector& v, std::size_t degree);

/// Lexicographically least simultaneous conjugate of v under S_m.
GenVector canonical_form(const GenVector& v);

/// A slice of the census: entries pinned to given permutations. Classes in a
/// slice are taken modulo the centralizer of the pinned entries.
struct Normalization {
  std::map<std::size_t, Perm> pinned;
};

struct CensusOptions {
  std::optional<Normalization> normalization;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct Census {
  std::vector<GenVector> classes;
  /// Number of tuples passing the order, product and generation filters.
  std::size_t vectors = 0;
  /// Order of the group acting on the vectors (S_m, or the centralizer of
  /// the pinned entries for a normalized census).
  std::size_t acting_group_order = 0;
};

/// Smooth epimorphisms from the genus-0 signature group onto S_m, up to
/// Aut(S_m) = Inn(S_m), sorted by canonical representative.
Census enumerate_smooth_epis(const Signature& sig, std::size_t degree, const CensusOptions& options = {});

/// A = (1 2 3 4), B = (3 4): A^4 = B^2 = (BA)^3 = 1 and <A, B> = S_4.
std::pair<Perm, Perm> s4_standard_generators();

/// The standard census slice for (0;2,2,2,3): t_3 = A^2, t_4 = BA, so
/// t_1 t_2 t_3 = (BA)^{-1}.
Normalization kft_normalization();

/// Named words in A, B used to label census output.
std::vector<std::pair<std::string, Perm>> s4_word_labels();

/// Label of p among `labels`, else its cycle notation.
std::string label_perm(const Perm& p, const std::vector<std::pair<std::string, Perm>>& labels);

enum class Move { Y, Z, W };
const char* to_string(Move m);
std::optional<Move> parse_move(const std::string& name);

/// The substitutions on (x_1, x_2, x_3), x_4 implied, with P = x_1 x_2 x_3:
/// Y = (x_2, P^{-1} x_1 P, x_3), Z = (x_1 x_2 x_1^{-1}, x_1, x_3),
/// W = (x_2, x_3 x_1 x_3^{-1}, x_3). The first three entries must be
/// involutions; throws std::logic_error if the result is not a valid vector.
GenVector hurwitz_move(const GenVector& v, Move m);

struct MoveOrbits {
  /// orbit[i] is the orbit index of input class i, orbits numbered by first
  /// appearance.
  std::vector<std::size_t> orbit;
  std::size_t orbit_count = 0;
  /// image[move][i]: index of the input class containing the move image of
  /// class i, or nothing when the image leaves the input set.
  std::map<Move, std::vector<std::optional<std::size_t>>> image;
  /// Conjugacy classes reached by closure that were not among the inputs.
  std::size_t extra_classes = 0;
};

/// Orbits of the input classes under the moves, classes compared up to
/// simultaneous conjugation.
MoveOrbits classes_connected(const std::vector<GenVector>& classes, const std::vector<Move>& moves,
                             std::size_t degree);

/// Brute-force |Aut(S_m)|: maps of one generating pair to another that
/// extend to a bijective homomorphism.
std::size_t automorphism_count(std::size_t degree);
/// m! / |Z(S_m)|.
std::size_t inner_automorphism_count(std::size_t degree);
/// Elements of S_m commuting with every perm in `fixed`.
std::size_t centralizer_order(const std::vector<Perm>& fixed, std::size_t degree);

}  // namespace moduli
