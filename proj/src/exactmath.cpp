#include "bicross/exactmath.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace bicross {

namespace {

std::uint32_t reduce_mod(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce_mod(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::CharTwo: return "CharTwo";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::LambdaNotAdmissible: return "LambdaNotAdmissible";
    case ErrorKind::NotADerivation: return "NotADerivation";
    case ErrorKind::InvalidTn: return "InvalidTn";
    case ErrorKind::InvalidTwistedDerivation: return "InvalidTwistedDerivation";
    case ErrorKind::InvalidMatchedPair: return "InvalidMatchedPair";
    case ErrorKind::NotAFactorization: return "NotAFactorization";
    case ErrorKind::InvalidDeformationMap: return "InvalidDeformationMap";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotPerfect: return "NotPerfect";
    case ErrorKind::InvalidTriple: return "InvalidTriple";
    case ErrorKind::UnknownScenario: return "UnknownScenario";
    case ErrorKind::Format: return "Format";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

// ---------------------------------------------------------------------------
// FieldDescriptor

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
  if (p > 0xFFFFFFFFULL || !is_prime(p)) {
    raise(ErrorKind::NotPrime, std::to_string(p) + " is not a prime modulus");
  }
  FieldDescriptor f;
  f.kind_ = Kind::PrimeField;
  f.p_ = static_cast<std::uint32_t>(p);
  return f;
}

std::string FieldDescriptor::to_string() const {
  return is_finite() ? "GF(" + std::to_string(p_) + ")" : "Q";
}

std::ostream& operator<<(std::ostream& os, const FieldDescriptor& f) { return os << f.to_string(); }

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::zero(FieldDescriptor field) { return from_int(field, 0); }
Scalar Scalar::one(FieldDescriptor field) { return from_int(field, 1); }

Scalar Scalar::from_int(FieldDescriptor field, long long value) {
  if (field.is_finite()) return Scalar(Residue{reduce_mod(value, field.modulus()), field.modulus()});
  return Scalar(mpq_class(mpz_class(static_cast<long>(value))));
}

Scalar Scalar::from_rational(FieldDescriptor field, const mpq_class& value) {
  if (!field.is_finite()) {
    mpq_class q = value;
    q.canonicalize();
    return Scalar(std::move(q));
  }
  const std::uint32_t p = field.modulus();
  const std::uint32_t den = reduce_mod(value.get_den(), p);
  if (den == 0) raise(ErrorKind::DivisionByZero, "denominator vanishes in " + field.to_string());
  const std::uint32_t num = reduce_mod(value.get_num(), p);
  const auto inv = pow_mod(den, p - 2, p);
  return Scalar(Residue{static_cast<std::uint32_t>(static_cast<std::uint64_t>(num) * inv % p), p});
}

Scalar Scalar::parse(FieldDescriptor field, std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) raise(ErrorKind::Format, "empty scalar");
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    std::string_view digits = part;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
      raise(ErrorKind::Format, "malformed scalar '" + std::string(text) + "'");
    }
    return mpz_class(part[0] == '+' ? part.substr(1) : part, 10);
  };
  mpz_class num = parse_int(slash == std::string::npos ? s : s.substr(0, slash));
  mpz_class den = slash == std::string::npos ? mpz_class(1) : parse_int(s.substr(slash + 1));
  if (den == 0) raise(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  return from_rational(field, mpq_class(num, den));
}

FieldDescriptor Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return FieldDescriptor::unchecked_prime(r->p);
  return FieldDescriptor::rationals();
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1 % r->p;
  return std::get<mpq_class>(value_) == 1;
}

std::uint32_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  raise(ErrorKind::FieldMismatch, "residue() on a rational scalar");
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  raise(ErrorKind::FieldMismatch, "rational() on a residue scalar");
}

void Scalar::require_same_field(const Scalar& rhs) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&rhs.value_);
  if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->p != b->p)) {
    raise(ErrorKind::FieldMismatch, "scalars from " + field().to_string() + " and " + rhs.field().to_string());
  }
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto s = static_cast<std::uint64_t>(r->value) + std::get<Residue>(rhs.value_).value;
    r->value = static_cast<std::uint32_t>(s % r->p);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto s = static_cast<std::uint64_t>(r->value) + r->p - std::get<Residue>(rhs.value_).value;
    r->value = static_cast<std::uint32_t>(s % r->p);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto s = static_cast<std::uint64_t>(r->value) * std::get<Residue>(rhs.value_).value;
    r->value = static_cast<std::uint32_t>(s % r->p);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
  }
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero");
  if (const auto* r = std::get_if<Residue>(&value_)) return Scalar(Residue{pow_mod(r->value, r->p - 2, r->p), r->p});
  return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  const auto& q = std::get<mpq_class>(value_);
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool operator==(const Scalar& a, const Scalar& b) {
  const auto* ra = std::get_if<Scalar::Residue>(&a.value_);
  const auto* rb = std::get_if<Scalar::Residue>(&b.value_);
  if (ra != nullptr && rb != nullptr) return ra->p == rb->p && ra->value == rb->value;
  if (ra == nullptr && rb == nullptr) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return false;
}

bool operator<(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (const auto* ra = std::get_if<Scalar::Residue>(&a.value_)) return ra->value < std::get<Scalar::Residue>(b.value_).value;
  return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

// ---------------------------------------------------------------------------
// Vectors

Vector zero_vector(FieldDescriptor field, std::size_t length) { return Vector(length, Scalar::zero(field)); }

Vector unit_vector(FieldDescriptor field, std::size_t length, std::size_t index) {
  Vector v = zero_vector(field, length);
  v.at(index) = Scalar::one(field);
  return v;
}

Vector vector_from_ints(FieldDescriptor field, std::initializer_list<long long> values) {
  Vector v;
  v.reserve(values.size());
  for (auto x : values) v.push_back(Scalar::from_int(field, x));
  return v;
}

bool is_zero_vector(std::span<const Scalar> v) noexcept {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) raise(ErrorKind::DimensionMismatch, "vector add");
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector sub(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) raise(ErrorKind::DimensionMismatch, "vector sub");
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scaled(const Scalar& c, std::span<const Scalar> v) {
  Vector out(v.begin(), v.end());
  for (auto& x : out) x *= c;
  return out;
}

void axpy(const Scalar& c, std::span<const Scalar> x, std::span<Scalar> y) {
  if (x.size() != y.size()) raise(ErrorKind::DimensionMismatch, "axpy");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += c * x[i];
  }
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size() || a.empty()) {
    if (a.size() == b.size()) return Scalar{};
    raise(ErrorKind::DimensionMismatch, "dot");
  }
  Scalar s = Scalar::zero(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(std::span<const Scalar> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

bool lex_less(std::span<const Scalar> a, std::span<const Scalar> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(FieldDescriptor field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::zero(FieldDescriptor field, std::size_t rows, std::size_t cols) { return {field, rows, cols}; }

Matrix Matrix::identity(FieldDescriptor field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(FieldDescriptor field, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) raise(ErrorKind::DimensionMismatch, "from_rows: ragged input");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::from_columns(FieldDescriptor field, const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Matrix Matrix::from_ints(FieldDescriptor field, std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t nc = rows.size() == 0 ? 0 : rows.begin()->size();
  Matrix m(field, rows.size(), nc);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != nc) raise(ErrorKind::DimensionMismatch, "from_ints: ragged input");
    std::size_t c = 0;
    for (auto x : row) m(r, c++) = Scalar::from_int(field, x);
    ++r;
  }
  return m;
}

bool Matrix::is_zero() const noexcept { return is_zero_vector(data_); }

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::set_column(std::size_t c, std::span<const Scalar> v) {
  if (v.size() != rows_) raise(ErrorKind::DimensionMismatch, "set_column");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) raise(ErrorKind::DimensionMismatch, "apply: matrix has " + std::to_string(cols_) + " columns, vector length " + std::to_string(v.size()));
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const auto& e = (*this)(r, c);
      if (!e.is_zero()) out[r] += e * v[c];
    }
  }
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) raise(ErrorKind::DimensionMismatch, "block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_) raise(ErrorKind::DimensionMismatch, "set_block out of range");
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) raise(ErrorKind::DimensionMismatch, "matrix product");
  if (a.field_ != b.field_) raise(ErrorKind::FieldMismatch, "matrix product");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) raise(ErrorKind::DimensionMismatch, "matrix sum");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) raise(ErrorKind::DimensionMismatch, "matrix difference");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
  Matrix out = m;
  for (auto& x : out.data_) x *= c;
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool operator<(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return lex_less(a.data_, b.data_);
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", " : "") << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

// ---------------------------------------------------------------------------
// Elimination

RrefResult rref(const Matrix& m) {
  RrefResult res{m, {}};
  Matrix& a = res.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && a(sel, c).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a(sel, j), a(pivot_row, j));
    }
    const Scalar inv = a(pivot_row, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a(pivot_row, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a(r, c).is_zero()) continue;
      const Scalar factor = -a(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!a(pivot_row, j).is_zero()) a(r, j) += factor * a(pivot_row, j);
      }
    }
    res.pivots.push_back(c);
    ++pivot_row;
  }
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  const auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(m.field(), m.cols(), free);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) raise(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det = Scalar::one(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && a(sel, c).is_zero()) ++sel;
    if (sel == n) return Scalar::zero(m.field());
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const Scalar inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const Scalar factor = -(a(r, c) * inv);
      for (std::size_t j = c; j < n; ++j) a(r, j) += factor * a(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) raise(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(m.field(), n));
  const auto res = rref(aug);
  if (res.pivots.size() < n || res.pivots[n - 1] != n - 1) return std::nullopt;
  return res.reduced.block(0, n, n, n);
}

std::optional<LinearSolution> solve_linear(const Matrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) raise(ErrorKind::DimensionMismatch, "solve_linear: rhs length");
  const std::size_t n = a.cols();
  Matrix aug(a.field(), a.rows(), n + 1);
  aug.set_block(0, 0, a);
  for (std::size_t r = 0; r < a.rows(); ++r) aug(r, n) = b[r];
  const auto [red, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  LinearSolution sol{zero_vector(a.field(), n), nullspace(a)};
  for (std::size_t k = 0; k < pivots.size(); ++k) sol.particular[pivots[k]] = red(k, n);
  return sol;
}

std::vector<Vector> row_space_basis(FieldDescriptor field, const std::vector<Vector>& vectors, std::size_t length) {
  if (vectors.empty()) return {};
  const auto res = rref(Matrix::from_rows(field, vectors, length));
  std::vector<Vector> out;
  for (std::size_t k = 0; k < res.pivots.size(); ++k) {
    const auto row = res.reduced.row(k);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

std::optional<std::uint64_t> checked_power(std::uint64_t p, std::size_t exponent) noexcept {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (p != 0 && result > UINT64_MAX / p) return std::nullopt;
    result *= p;
  }
  return result;
}

VectorEnumerator::VectorEnumerator(FieldDescriptor field, std::size_t length) : field_(field), length_(length), size_(0) {
  if (!field.is_finite()) raise(ErrorKind::NotFinite, "cannot enumerate vectors over Q");
  const auto sz = checked_power(field.modulus(), length);
  if (!sz) raise(ErrorKind::BudgetExceeded, "p^length overflows 64 bits");
  size_ = *sz;
}

Vector VectorEnumerator::at(std::uint64_t index) const {
  Vector v = zero_vector(field_, length_);
  const std::uint32_t p = field_.modulus();
  for (std::size_t i = length_; i-- > 0;) {
    v[i] = Scalar::from_int(field_, static_cast<long long>(index % p));
    index /= p;
  }
  return v;
}

VectorEnumerator::iterator::iterator(const VectorEnumerator* owner, std::uint64_t index) : owner_(owner), index_(index) {
  if (index_ < owner_->size()) current_ = owner_->at(index_);
}

VectorEnumerator::iterator& VectorEnumerator::iterator::operator++() {
  ++index_;
  if (index_ >= owner_->size()) return *this;
  const auto one = Scalar::one(owner_->field_);
  for (std::size_t i = current_.size(); i-- > 0;) {
    current_[i] += one;
    if (!current_[i].is_zero()) break;
  }
  return *this;
}

VectorEnumerator enumerate_vectors(FieldDescriptor field, std::size_t length) { return {field, length}; }

}  // namespace bicross
