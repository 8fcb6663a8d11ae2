#include "pisotlab/intmat.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pisotlab {

std::string_view family_tag(Family family) {
  return family == Family::FullySubtractive ? "FS" : "BR";
}

Family parse_family(std::string_view text) {
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "fs" || lower == "fully-subtractive" || lower == "fully_subtractive") {
    return Family::FullySubtractive;
  }
  if (lower == "br" || lower == "brun") {
    return Family::Brun;
  }
  throw std::invalid_argument("unknown family: " + std::string(text));
}

bool valid_dimension(Family family, int dim) {
  return family == Family::Brun ? dim == 3 : dim >= 2;
}

int alphabet_size(Family family, int dim) {
  if (!valid_dimension(family, dim)) {
    throw std::invalid_argument("invalid dimension " + std::to_string(dim) + " for family " +
                                std::string(family_tag(family)));
  }
  return family == Family::Brun ? 3 : dim;
}

// ExactMatrix ---------------------------------------------------------------

ExactMatrix::ExactMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
  entries_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), BigInt(0));
}

ExactMatrix::ExactMatrix(int dim, std::vector<BigInt> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
  if (entries_.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
    throw std::invalid_argument("matrix entry count does not match dimension");
  }
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : ExactMatrix(static_cast<int>(rows.size())) {
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim_) {
      throw std::invalid_argument("matrix rows must all have length d");
    }
    int j = 0;
    for (long v : row) (*this)(i, j++) = v;
    ++i;
  }
}

ExactMatrix ExactMatrix::identity(int dim) {
  ExactMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntVector ExactMatrix::apply(std::span<const BigInt> x) const {
  if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("apply: dimension mismatch");
  IntVector out(static_cast<std::size_t>(dim_), BigInt(0));
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) out[i] += (*this)(i, j) * x[j];
  }
  return out;
}

RatVector ExactMatrix::apply(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("apply: dimension mismatch");
  RatVector out(static_cast<std::size_t>(dim_), Rational(0));
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if ((*this)(i, j) != 0) out[i] += Rational((*this)(i, j)) * x[j];
    }
  }
  return out;
}

BigInt ExactMatrix::determinant() const {
  // Bareiss fraction-free elimination.
  std::vector<BigInt> a = entries_;
  const int n = dim_;
  auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i * n + j)]; };
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (at(r, k) != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

bool ExactMatrix::nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const BigInt& x) { return x >= 0; });
}

bool ExactMatrix::positive() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const BigInt& x) { return x > 0; });
}

BigInt ExactMatrix::inf_norm() const {
  BigInt best = 0;
  for (int i = 0; i < dim_; ++i) {
    BigInt row = 0;
    for (int j = 0; j < dim_; ++j) row += abs((*this)(i, j));
    best = std::max(best, row);
  }
  return best;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix product: dimension mismatch");
  const int n = a.dim_;
  ExactMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

ExactMatrix transpose(const ExactMatrix& m) {
  ExactMatrix t(m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) t(j, i) = m(i, j);
  }
  return t;
}

// Word ----------------------------------------------------------------------

Word::Word(Family family, int dim, std::vector<int> letters)
    : family_(family), dim_(dim), letters_(std::move(letters)) {
  const int alphabet = alphabet_size(family, dim);
  for (int letter : letters_) {
    if (letter < 1 || letter > alphabet) {
      throw std::invalid_argument("letter " + std::to_string(letter) + " outside alphabet {1.." +
                                  std::to_string(alphabet) + "}");
    }
  }
}

bool Word::contains_letter(int letter) const {
  return std::find(letters_.begin(), letters_.end(), letter) != letters_.end();
}

Word Word::concat(const Word& other) const {
  if (other.family_ != family_ || other.dim_ != dim_) {
    throw std::invalid_argument("cannot concatenate words of different families");
  }
  std::vector<int> letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return Word(family_, dim_, std::move(letters));
}

Word Word::rotated(std::size_t start) const {
  if (letters_.empty()) return *this;
  std::vector<int> letters = letters_;
  std::rotate(letters.begin(),
              letters.begin() + static_cast<std::ptrdiff_t>(start % letters.size()),
              letters.end());
  return Word(family_, dim_, std::move(letters));
}

std::string Word::to_string() const {
  std::string out(family_tag(family_));
  out += ':';
  out += std::to_string(dim_);
  out += ':';
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::string Word::letters_string() const {
  std::string out;
  const bool wide = alphabet_size(family_, dim_) > 9;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (wide && i) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

Word Word::parse(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw std::invalid_argument("word must look like FS:3:1,2,3, got: " + std::string(text));
  }
  const Family family = parse_family(text.substr(0, first));
  int dim = 0;
  try {
    dim = std::stoi(std::string(text.substr(first + 1, second - first - 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad dimension in word: " + std::string(text));
  }
  std::vector<int> letters;
  auto rest = text.substr(second + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    auto comma = rest.find(',', pos);
    if (comma == std::string_view::npos) comma = rest.size();
    const std::string token(rest.substr(pos, comma - pos));
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        })) {
      throw std::invalid_argument("bad letter '" + token + "' in word: " + std::string(text));
    }
    letters.push_back(std::stoi(token));
    pos = comma + 1;
  }
  return Word(family, dim, std::move(letters));
}

// Generators and products ---------------------------------------------------

ExactMatrix family_generator(Family family, int dim, int letter) {
  const int alphabet = alphabet_size(family, dim);
  if (letter < 1 || letter > alphabet) {
    throw std::invalid_argument("letter " + std::to_string(letter) + " outside alphabet");
  }
  if (family == Family::FullySubtractive) {
    ExactMatrix m(dim);
    const int k = letter - 1;
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        if (j == k || i == j) m(i, j) = 1;
      }
    }
    return m;
  }
  switch (letter) {
    case 1:
      return ExactMatrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
    case 2:
      return ExactMatrix{{1, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    default:
      return ExactMatrix{{1, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  }
}

ExactMatrix product(const Word& word) {
  ExactMatrix m = ExactMatrix::identity(word.dim());
  for (int letter : word.letters()) {
    m = m * family_generator(word.family(), word.dim(), letter);
  }
  return m;
}

ExactMatrix unimodular_inverse(const ExactMatrix& m) {
  const int n = m.dim();
  std::vector<Rational> a(static_cast<std::size_t>(2 * n * n));
  auto at = [&](int i, int j) -> Rational& { return a[static_cast<std::size_t>(i * 2 * n + j)]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at(i, j) = Rational(m(i, j));
    at(i, n + i) = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::domain_error("matrix is singular");
    if (pivot != col) {
      for (int c = 0; c < 2 * n; ++c) std::swap(at(col, c), at(pivot, c));
    }
    const Rational inv = 1 / at(col, col);
    for (int c = 0; c < 2 * n; ++c) at(col, c) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || at(r, col) == 0) continue;
      const Rational f = at(r, col);
      for (int c = 0; c < 2 * n; ++c) at(r, c) -= f * at(col, c);
    }
  }
  ExactMatrix inverse(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& q = at(i, n + j);
      if (denominator(q) != 1) throw std::domain_error("matrix is not unimodular (|det| != 1)");
      inverse(i, j) = numerator(q);
    }
  }
  return inverse;
}

RatVector inverse_apply(const ExactMatrix& m, std::span<const Rational> x) {
  const BigInt det = m.determinant();
  if (abs(det) != 1) {
    throw std::domain_error("inverse_apply requires |det| = 1, got det = " + det.str());
  }
  return unimodular_inverse(m).apply(x);
}

// Primitivity ---------------------------------------------------------------

namespace {

using BoolMatrix = std::vector<char>;

BoolMatrix pattern(const ExactMatrix& m) {
  BoolMatrix p(static_cast<std::size_t>(m.dim() * m.dim()));
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) p[static_cast<std::size_t>(i * m.dim() + j)] = m(i, j) != 0;
  }
  return p;
}

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b, int n) {
  BoolMatrix c(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (!a[static_cast<std::size_t>(i * n + k)]) continue;
      for (int j = 0; j < n; ++j) {
        if (b[static_cast<std::size_t>(k * n + j)]) c[static_cast<std::size_t>(i * n + j)] = 1;
      }
    }
  }
  return c;
}

bool all_set(const BoolMatrix& a) {
  return std::all_of(a.begin(), a.end(), [](char c) { return c != 0; });
}

}  // namespace

int wielandt_bound(int dim) {
  return (dim - 1) * (dim - 1) + 1;
}

PrimitivityResult is_primitive(const ExactMatrix& m) {
  if (!m.nonnegative()) {
    throw std::invalid_argument("is_primitive: matrix has a negative entry");
  }
  const int n = m.dim();
  const int bound = wielandt_bound(n);

  // powers[j] = pattern of M^(2^j)
  std::vector<BoolMatrix> powers{pattern(m)};
  int reach = 1;
  while (reach < bound) {
    powers.push_back(bool_product(powers.back(), powers.back(), n));
    reach *= 2;
  }

  PrimitivityResult result;
  // A nonnegative matrix is primitive iff M^k > 0 for some k >= bound; once
  // reached, positivity persists for all larger powers.
  if (!all_set(powers.back())) {
    // M^bound has the same zero pattern classification; report from it.
    BoolMatrix at_bound;
    bool have = false;
    for (int j = 0, rest = bound; rest > 0; ++j, rest >>= 1) {
      if (rest & 1) {
        at_bound = have ? bool_product(at_bound, powers[static_cast<std::size_t>(j)], n)
                        : powers[static_cast<std::size_t>(j)];
        have = true;
      }
    }
    for (int i = 0; i < n && !result.witness_zero; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!at_bound[static_cast<std::size_t>(i * n + j)]) {
          result.witness_zero = std::make_pair(i, j);
          break;
        }
      }
    }
    return result;
  }

  // Binary lifting: largest e with M^e not positive, exponent = e + 1.
  result.primitive = true;
  BoolMatrix acc;
  bool have_acc = false;
  int e = 0;
  for (int j = static_cast<int>(powers.size()) - 1; j >= 0; --j) {
    const auto& step = powers[static_cast<std::size_t>(j)];
    BoolMatrix candidate = have_acc ? bool_product(acc, step, n) : step;
    if (!all_set(candidate)) {
      acc = std::move(candidate);
      have_acc = true;
      e += 1 << j;
    }
  }
  result.exponent = e + 1;
  return result;
}

std::vector<Word> words_of_length(Family family, int dim, int length) {
  const int alphabet = alphabet_size(family, dim);
  std::vector<Word> out;
  if (length < 0) return out;
  std::vector<int> letters(static_cast<std::size_t>(length), 1);
  while (true) {
    out.emplace_back(family, dim, letters);
    int pos = length - 1;
    while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == alphabet) {
      letters[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++letters[static_cast<std::size_t>(pos)];
  }
  return out;
}

// Text format ---------------------------------------------------------------

std::string format_matrix(const ExactMatrix& m) {
  std::ostringstream out;
  out << m.dim() << '\n';
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      if (j) out << ' ';
      out << m(i, j).str();
    }
    out << '\n';
  }
  return out.str();
}

ExactMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  int dim = 0;
  if (!(in >> dim) || dim < 1) {
    throw std::invalid_argument("matrix text must start with a positive dimension");
  }
  std::vector<BigInt> entries;
  entries.reserve(static_cast<std::size_t>(dim * dim));
  std::string token;
  while (in >> token) {
    try {
      entries.emplace_back(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad matrix entry: " + token);
    }
  }
  if (entries.size() != static_cast<std::size_t>(dim * dim)) {
    throw std::invalid_argument("expected " + std::to_string(dim * dim) + " matrix entries, got " +
                                std::to_string(entries.size()));
  }
  return ExactMatrix(dim, std::move(entries));
}

}  // namespace pisotlab
