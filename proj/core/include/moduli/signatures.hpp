#pragma once

#include <optional>
#include <string>
#include <vector>

namespace moduli {

/// Orbifold signature (g; k_1, ..., k_n). Every cone order is at least 2;
/// in genus 0 there are at least two cone points and two of them must carry
/// equal orders.
class Signature {
 public:
  /// Throws std::invalid_argument when the data is not a good orbifold signature.
  Signature(int genus, std::vector<int> orders);

  /// "g,k1,k2,..." with the genus first.
  static Signature parse(const std::string& text);

  int genus() const { return genus_; }
  const std::vector<int>& orders() const { return orders_; }
  std::size_t cone_points() const { return orders_.size(); }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int genus_;
  std::vector<int> orders_;
};

/// "(0;2,2,2,3)"
std::string to_string(const Signature& sig);

/// Genus of a smooth N-fold regular cover of a genus-0 orbifold, from
/// 2g - 2 = N (n - 2 - sum 1/k_i). Throws std::invalid_argument when the
/// result is not a non-negative integer or the signature has positive genus.
int rh_genus(const Signature& sig, long group_order);

enum class DefinabilityCase { Quasiplatonic, Case1, Case2, Case3, Unclassified };

const char* to_string(DefinabilityCase c);

struct DefinabilityVerdict {
  DefinabilityCase which = DefinabilityCase::Unclassified;
  /// Degree of an extension of the field of moduli over which the surface is
  /// definable; nothing when unknown.
  std::optional<int> degree_bound;
  std::string citation;
};

/// Multiplicity pattern of four cone orders: a value of multiplicity one
/// gives Case1, two values of multiplicity two give Case2, a single value
/// gives Case3. Throws std::invalid_argument unless there are four orders.
DefinabilityVerdict classify_quadrangular(const Signature& sig);

struct DefinabilityReport {
  DefinabilityVerdict verdict;
  std::vector<std::string> notes;
};

/// Triangle signatures are quasiplatonic, quadrangular ones go through
/// classify_quadrangular, anything else is Unclassified.
DefinabilityReport definability_report(const Signature& sig);

}  // namespace moduli
