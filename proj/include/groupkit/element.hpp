#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "groupkit/errors.hpp"

namespace groupkit {

/// A group element: either a permutation of {1..n} stored as its image
/// sequence, or an invertible d x d matrix over the prime field GF(p).
///
/// Elements are immutable values. The canonical encoding returned by key()
/// is injective and its byte order agrees with operator<=>, so "canonically
/// smallest" means the same thing whether keys or elements are compared.
class GroupElement {
public:
  enum class Kind : std::uint8_t {
    Matrix = 'M',
    Permutation = 'P',
  };

  /// Builds a permutation from 1-based images: images[i] is the image of
  /// point i+1. Rejects non-bijections.
  static GroupElement permutation(const std::vector<std::uint32_t> &images);

  static GroupElement identity_permutation(std::uint32_t degree);

  /// Builds a matrix from row-major entries in [0, p). Rejects non-prime
  /// moduli, out-of-range entries and singular matrices.
  static GroupElement matrix(std::uint32_t dimension, std::uint32_t modulus,
                             const std::vector<std::uint32_t> &entries);

  static GroupElement identity_matrix(std::uint32_t dimension,
                                      std::uint32_t modulus);

  Kind kind() const { return kind_; }
  bool is_permutation() const { return kind_ == Kind::Permutation; }
  bool is_matrix() const { return kind_ == Kind::Matrix; }

  /// Degree n for permutations, dimension d for matrices.
  std::uint32_t degree() const { return n_; }
  /// Field modulus p; 0 for permutations.
  std::uint32_t modulus() const { return mod_; }

  /// Raw storage: 0-based images for permutations, row-major entries for
  /// matrices.
  const std::vector<std::uint32_t> &data() const { return data_; }

  bool is_identity() const;

  /// True when both elements have the same kind and parameters.
  bool compatible_with(const GroupElement &other) const;

  /// Composition. Permutations compose left-to-right: (a*b)(i) = b(a(i)).
  /// Matrices multiply by the usual row-times-column product mod p.
  GroupElement operator*(const GroupElement &rhs) const;

  GroupElement inverse() const;

  /// Smallest k >= 1 with g^k = identity, by repeated multiplication.
  std::uint64_t order() const;

  GroupElement power(std::uint64_t e) const;

  /// Canonical byte encoding: kind tag, parameters, then the 1-based image
  /// sequence (permutation) or row-major entries (matrix), each as a 4-byte
  /// big-endian integer.
  std::string key() const;

  /// Cycle notation "(1 2 3)(4 5)" (identity "()") or a matrix literal
  /// "[[1,1],[0,1]] mod 5".
  std::string to_string() const;

  friend bool operator==(const GroupElement &, const GroupElement &) = default;
  friend std::strong_ordering operator<=>(const GroupElement &a,
                                          const GroupElement &b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.mod_ <=> b.mod_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

private:
  GroupElement(Kind kind, std::uint32_t n, std::uint32_t mod,
               std::vector<std::uint32_t> data)
      : kind_(kind), n_(n), mod_(mod), data_(std::move(data)) {}

  Kind kind_;
  std::uint32_t n_;
  std::uint32_t mod_;
  std::vector<std::uint32_t> data_;
};

inline GroupElement multiply(const GroupElement &a, const GroupElement &b) {
  return a * b;
}

inline GroupElement inverse(const GroupElement &a) { return a.inverse(); }

inline std::uint64_t element_order(const GroupElement &g) { return g.order(); }

bool is_prime(std::uint64_t n);

/// Returns p if n is a positive power of the prime p, 0 otherwise (1 is not
/// a prime power).
std::uint64_t prime_power_base(std::uint64_t n);

struct GroupElementHash {
  std::size_t operator()(const GroupElement &e) const {
    return std::hash<std::string>{}(e.key());
  }
};

} // namespace groupkit
