#pragma once

// Exact scalars and dense linear algebra over Q and GF(p).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "bicross/error.hpp"

namespace bicross {

class FieldDescriptor {
 public:
  enum class Kind : std::uint8_t { Rationals, PrimeField };

  FieldDescriptor() = default;

  static FieldDescriptor rationals() noexcept { return {}; }
  /// Throws NotPrime unless p is a prime (checked by trial division).
  static FieldDescriptor prime_field(std::uint64_t p);

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_finite() const noexcept { return kind_ == Kind::PrimeField; }
  /// 0 for Q.
  [[nodiscard]] std::uint32_t characteristic() const noexcept { return p_; }
  [[nodiscard]] std::uint32_t modulus() const noexcept { return p_; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

 private:
  friend class Scalar;
  static FieldDescriptor unchecked_prime(std::uint32_t p) noexcept {
    FieldDescriptor f;
    f.kind_ = Kind::PrimeField;
    f.p_ = p;
    return f;
  }

  Kind kind_ = Kind::Rationals;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FieldDescriptor& f);

bool is_prime(std::uint64_t n) noexcept;

/// An element of Q (always in lowest terms) or of GF(p) (residue in [0, p)).
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  static Scalar zero(FieldDescriptor field);
  static Scalar one(FieldDescriptor field);
  static Scalar from_int(FieldDescriptor field, long long value);
  static Scalar from_rational(FieldDescriptor field, const mpq_class& value);
  /// Accepts "n", "-n", "n/d". Over GF(p) fractions are reduced mod p.
  static Scalar parse(FieldDescriptor field, std::string_view text);

  [[nodiscard]] FieldDescriptor field() const;
  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] bool is_one() const noexcept;
  /// Residue value; only for GF(p).
  [[nodiscard]] std::uint32_t residue() const;
  /// Rational value; only for Q.
  [[nodiscard]] const mpq_class& rational() const;

  [[nodiscard]] Scalar inverse() const;
  [[nodiscard]] std::string to_string() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order used for canonical sorting (residues by value, rationals numerically).
  friend bool operator<(const Scalar& a, const Scalar& b);

 private:
  struct Residue {
    std::uint32_t value = 0;
    std::uint32_t p = 2;
  };

  explicit Scalar(Residue r) : value_(r) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  void require_same_field(const Scalar& rhs) const;

  std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

using Vector = std::vector<Scalar>;

Vector zero_vector(FieldDescriptor field, std::size_t length);
Vector unit_vector(FieldDescriptor field, std::size_t length, std::size_t index);
Vector vector_from_ints(FieldDescriptor field, std::initializer_list<long long> values);
bool is_zero_vector(std::span<const Scalar> v) noexcept;
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scaled(const Scalar& c, std::span<const Scalar> v);
/// y += c * x
void axpy(const Scalar& c, std::span<const Scalar> x, std::span<Scalar> y);
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);
std::string to_string(std::span<const Scalar> v);
bool lex_less(std::span<const Scalar> a, std::span<const Scalar> b);

/// Dense row-major matrix; every entry lies in `field()`.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldDescriptor field, std::size_t rows, std::size_t cols);

  static Matrix zero(FieldDescriptor field, std::size_t rows, std::size_t cols);
  static Matrix identity(FieldDescriptor field, std::size_t n);
  static Matrix from_rows(FieldDescriptor field, const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(FieldDescriptor field, const std::vector<Vector>& cols, std::size_t rows);
  static Matrix from_ints(FieldDescriptor field, std::initializer_list<std::initializer_list<long long>> rows);

  [[nodiscard]] FieldDescriptor field() const noexcept { return field_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
  [[nodiscard]] bool is_zero() const noexcept;

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] Vector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Scalar> v);
  [[nodiscard]] std::span<const Scalar> entries() const noexcept { return data_; }

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Vector apply(std::span<const Scalar> v) const;
  [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& m);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  /// Shape first, then entries lexicographically.
  friend bool operator<(const Matrix& a, const Matrix& b);

 private:
  FieldDescriptor field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column, in increasing free-column order.
std::vector<Vector> nullspace(const Matrix& m);
Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

struct LinearSolution {
  Vector particular;
  std::vector<Vector> kernel;
};

/// Absent iff a x = b is inconsistent.
std::optional<LinearSolution> solve_linear(const Matrix& a, std::span<const Scalar> b);

/// Row-reduced basis of span(vectors): nonzero rows of rref, in order.
std::vector<Vector> row_space_basis(FieldDescriptor field, const std::vector<Vector>& vectors, std::size_t length);

/// All p^length vectors of GF(p)^length in lexicographic order (last coordinate fastest).
class VectorEnumerator {
 public:
  VectorEnumerator(FieldDescriptor field, std::size_t length);

  [[nodiscard]] std::uint64_t size() const noexcept { return size_; }
  [[nodiscard]] Vector at(std::uint64_t index) const;
  [[nodiscard]] std::size_t length() const noexcept { return length_; }

  class iterator {
   public:
    using value_type = Vector;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const VectorEnumerator* owner, std::uint64_t index);
    const Vector& operator*() const { return current_; }
    iterator& operator++();
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const VectorEnumerator* owner_ = nullptr;
    std::uint64_t index_ = 0;
    Vector current_;
  };

  [[nodiscard]] iterator begin() const { return {this, 0}; }
  [[nodiscard]] iterator end() const { return {this, size_}; }

 private:
  FieldDescriptor field_;
  std::size_t length_;
  std::uint64_t size_;
};

/// Throws NotFinite over Q; BudgetExceeded if p^length overflows 64 bits.
VectorEnumerator enumerate_vectors(FieldDescriptor field, std::size_t length);

/// p^exponent, or nullopt on overflow.
std::optional<std::uint64_t> checked_power(std::uint64_t p, std::size_t exponent) noexcept;

}  // namespace bicross
