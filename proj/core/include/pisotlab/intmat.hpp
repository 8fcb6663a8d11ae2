#pragma once

// Exact integer matrices, the fully subtractive and Brun generator
// families, words over their alphabets and the cocycle products
// A^(w0) A^(w1) ... A^(w{n-1}).

#include "pisotlab/numeric.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pisotlab {

enum class Family { FullySubtractive, Brun };

/// Short tag used in the word text format: "FS" or "BR".
std::string_view family_tag(Family family);

/// Accepts FS / fs / fully-subtractive and BR / br / Brun / brun.
Family parse_family(std::string_view text);

/// FS needs d >= 2, Brun is only defined for d = 3.
bool valid_dimension(Family family, int dim);

/// Number of letters: d for FS, 3 for Brun.
int alphabet_size(Family family, int dim);

/// Square matrix of arbitrary-precision integers, row major.
class ExactMatrix {
 public:
  explicit ExactMatrix(int dim);
  ExactMatrix(int dim, std::vector<BigInt> entries);
  ExactMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static ExactMatrix identity(int dim);

  int dim() const { return dim_; }

  const BigInt& operator()(int i, int j) const { return entries_[index(i, j)]; }
  BigInt& operator()(int i, int j) { return entries_[index(i, j)]; }

  std::span<const BigInt> entries() const { return entries_; }

  IntVector apply(std::span<const BigInt> x) const;
  RatVector apply(std::span<const Rational> x) const;

  BigInt determinant() const;
  bool nonnegative() const;
  bool positive() const;

  /// max_i sum_j |a_ij|
  BigInt inf_norm() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(j);
  }

  int dim_;
  std::vector<BigInt> entries_;
};

ExactMatrix transpose(const ExactMatrix& m);

/// A finite word over the alphabet of one family. Letters are 1-based.
class Word {
 public:
  Word(Family family, int dim, std::vector<int> letters = {});

  Family family() const { return family_; }
  int dim() const { return dim_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool contains_letter(int letter) const;

  /// u.concat(v) is the word uv.
  Word concat(const Word& other) const;

  /// Cyclic rotation starting at position `start`.
  Word rotated(std::size_t start) const;

  /// "FS:3:1,2,3" / "BR:3:3,3"; the empty word prints as "FS:3:".
  std::string to_string() const;
  static Word parse(std::string_view text);

  /// "123" style compact letters, for tables.
  std::string letters_string() const;

  friend bool operator==(const Word& a, const Word& b) = default;

 private:
  Family family_;
  int dim_;
  std::vector<int> letters_;
};

/// (A_FS,d^(k))_ij = 1 iff j = k or i = j; the Brun matrices are tabulated.
ExactMatrix family_generator(Family family, int dim, int letter);

/// Left-to-right product; the empty word gives the identity.
ExactMatrix product(const Word& word);

/// Inverse of a matrix with determinant +1 or -1, exact.
/// Throws std::domain_error otherwise.
ExactMatrix unimodular_inverse(const ExactMatrix& m);

/// M^{-1} x for |det M| = 1.
RatVector inverse_apply(const ExactMatrix& m, std::span<const Rational> x);

struct PrimitivityResult {
  bool primitive = false;
  /// Smallest n with M^n > 0 entrywise.
  std::optional<int> exponent;
  /// A zero entry of M^((d-1)^2+1).
  std::optional<std::pair<int, int>> witness_zero;
};

/// Wielandt: a primitive d x d matrix has M^((d-1)^2+1) > 0.
int wielandt_bound(int dim);

/// Throws std::invalid_argument on a negative entry.
PrimitivityResult is_primitive(const ExactMatrix& m);

/// All words of exactly `length` letters in lexicographic order.
std::vector<Word> words_of_length(Family family, int dim, int length);

/// Matrix text format: "d" on the first line then d rows of d integers.
std::string format_matrix(const ExactMatrix& m);
ExactMatrix parse_matrix(std::string_view text);

}  // namespace pisotlab
