#include "dihedral/graded_matrix.hpp"

#include <algorithm>
#include <numeric>

#include "dihedral/fraction_free.hpp"

namespace dihedral {

GradedMatrix::GradedMatrix(Field f, std::vector<int> row_twists, std::vector<int> col_twists)
    : field_(f), row_twists_(std::move(row_twists)), col_twists_(std::move(col_twists)) {
  entries_.reserve(rows() * cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) entries_.emplace_back(f, entry_degree(i, j));
}

void GradedMatrix::set(std::size_t i, std::size_t j, BinaryForm value) {
  if (value.field() != field_) throw FieldMismatch();
  if (value.degree() != entry_degree(i, j)) {
    if (!value.is_zero())
      throw DomainError("entry degree " + std::to_string(value.degree()) + " does not match the twist difference " +
                        std::to_string(entry_degree(i, j)));
    value = BinaryForm(field_, entry_degree(i, j));
  }
  entries_[i * cols() + j] = std::move(value);
}

GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.field_ != b.field_) throw FieldMismatch();
  if (a.cols() != b.rows()) throw DomainError("graded matrix shapes do not compose");
  int delta = 0;
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const int d = b.row_twists_[k] - a.col_twists_[k];
    if (k == 0)
      delta = d;
    else if (d != delta)
      throw DomainError("graded matrix twists do not compose");
  }
  std::vector<int> cols(b.col_twists_);
  for (int& t : cols) t -= delta;
  GradedMatrix r(a.field_, a.row_twists_, cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      BinaryForm acc(a.field_, r.entry_degree(i, j));
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a.entry(i, k) * b.entry(k, j);
      r.set(i, j, std::move(acc));
    }
  return r;
}

GradedMatrix operator-(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.row_twists_ != b.row_twists_ || a.col_twists_ != b.col_twists_)
    throw DomainError("subtracting graded matrices with different twists");
  GradedMatrix r(a);
  for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] -= b.entries_[k];
  return r;
}

bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
  return a.field_ == b.field_ && a.row_twists_ == b.row_twists_ && a.col_twists_ == b.col_twists_ &&
         a.entries_ == b.entries_;
}

GradedMatrix GradedMatrix::transpose() const {
  std::vector<int> rows, cols;
  for (int t : col_twists_) rows.push_back(-t);
  for (int t : row_twists_) cols.push_back(-t);
  GradedMatrix r(field_, rows, cols);
  for (std::size_t i = 0; i < this->rows(); ++i)
    for (std::size_t j = 0; j < this->cols(); ++j) r.set(j, i, entry(i, j));
  return r;
}

GradedMatrix GradedMatrix::twisted(int delta) const {
  GradedMatrix r(*this);
  for (int& t : r.row_twists_) t += delta;
  for (int& t : r.col_twists_) t += delta;
  return r;
}

bool GradedMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const BinaryForm& e) { return e.is_zero(); });
}

Matrix GradedMatrix::evaluate(const Scalar& x0, const Scalar& x1) const {
  Matrix m(field_, rows(), cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) m.at(i, j) = entry(i, j).eval(x0, x1);
  return m;
}

std::vector<std::vector<UPoly>> GradedMatrix::affine_entries() const {
  std::vector<std::vector<UPoly>> out(rows(), std::vector<UPoly>(cols(), UPoly(field_)));
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) out[i][j] = entry(i, j).affine();
  return out;
}

std::size_t symbolic_rank(const GradedMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const UPoly one = UPoly::constant(Scalar::one(m.field()));
  auto res = bareiss(
      m.affine_entries(), one, [](const UPoly& a, const UPoly& b) { return a.exact_div(b); },
      [](const UPoly& a) { return a.is_zero(); });
  return res.rank;
}

std::size_t rank(const GradedMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // A nonzero minor has degree at most the sum of the row degree maxima.
  int bound = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int best = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.entry(i, j).is_zero()) best = std::max(best, m.entry_degree(i, j));
    bound += best;
  }
  const std::size_t sym = symbolic_rank(m);
  const Field f = m.field();
  const bool enough_points = f.is_rational() || static_cast<long>(f.characteristic()) > bound;
  if (enough_points) {
    std::size_t best = 0;
    for (long x = 0; x <= bound; ++x)
      best = std::max(best, rank(m.evaluate(Scalar::one(f), Scalar(f, x))));
    if (best != sym) throw InvariantViolation("evaluation rank disagrees with symbolic rank");
  }
  return sym;
}

int section_dimension(const std::vector<int>& twists, int c) {
  int total = 0;
  for (int t : twists) total += std::max(0, t + c + 1);
  return total;
}

std::vector<BinaryForm> unpack_section(Field f, const std::vector<int>& twists, int c,
                                       const std::vector<Scalar>& coeffs) {
  std::vector<BinaryForm> out;
  std::size_t pos = 0;
  for (int t : twists) {
    const int d = t + c;
    std::vector<Scalar> part;
    for (int k = 0; k <= d; ++k) part.push_back(coeffs.at(pos++));
    out.emplace_back(f, d, std::move(part));
  }
  return out;
}

std::vector<Scalar> pack_section(const std::vector<int>& twists, int c, const std::vector<BinaryForm>& forms) {
  std::vector<Scalar> out;
  for (std::size_t j = 0; j < twists.size(); ++j) {
    const int d = twists[j] + c;
    if (forms[j].degree() != d) throw DomainError("section component has the wrong degree");
    for (int k = 0; k <= d; ++k) out.push_back(forms[j].coeff(k));
  }
  return out;
}

Matrix section_map(const GradedMatrix& m, int c) {
  const Field f = m.field();
  const int nrows = section_dimension(m.row_twists(), c);
  const int ncols = section_dimension(m.col_twists(), c);
  Matrix a(f, static_cast<std::size_t>(nrows), static_cast<std::size_t>(ncols));
  std::vector<int> row_off(m.rows() + 1, 0), col_off(m.cols() + 1, 0);
  for (std::size_t i = 0; i < m.rows(); ++i) row_off[i + 1] = row_off[i] + std::max(0, m.row_twists()[i] + c + 1);
  for (std::size_t j = 0; j < m.cols(); ++j) col_off[j + 1] = col_off[j] + std::max(0, m.col_twists()[j] + c + 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const BinaryForm& e = m.entry(i, j);
      if (e.degree() < 0 || e.is_zero()) continue;
      const int src = m.col_twists()[j] + c;
      for (int k = 0; k <= src; ++k)
        for (int t = 0; t <= e.degree(); ++t) {
          const Scalar& coef = e.coeffs()[static_cast<std::size_t>(t)];
          if (coef.is_zero()) continue;
          a.at(static_cast<std::size_t>(row_off[i] + k + t), static_cast<std::size_t>(col_off[j] + k)) += coef;
        }
    }
  return a;
}

GradedMatrix graded_kernel_basis(const GradedMatrix& m) {
  const Field f = m.field();
  const std::vector<int>& src = m.col_twists();
  const std::size_t expected = m.cols() - rank(m);
  if (expected == 0 || m.cols() == 0) return GradedMatrix(f, src, {});

  int c_lo = -*std::max_element(src.begin(), src.end());
  int spread = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    int best = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m.entry(i, j).is_zero()) best = std::max(best, m.entry_degree(i, j));
    spread += best;
  }
  const int c_hi = c_lo + spread + 1;

  struct Generator {
    int degree;
    std::vector<BinaryForm> forms;
  };
  std::vector<Generator> gens;
  for (int c = c_lo; c <= c_hi && gens.size() < expected; ++c) {
    const int dim = section_dimension(src, c);
    if (dim == 0) continue;
    std::vector<std::vector<Scalar>> span;
    for (const Generator& g : gens) {
      const int shift = c - g.degree;
      for (int k = 0; k <= shift; ++k) {
        const BinaryForm mono = BinaryForm::monomial(Scalar::one(f), shift, k);
        std::vector<BinaryForm> moved;
        for (const BinaryForm& x : g.forms) moved.push_back(x * mono);
        span.push_back(pack_section(src, c, moved));
      }
    }
    std::size_t current = 0;
    if (!span.empty()) current = rank(Matrix::from_rows(f, span, static_cast<std::size_t>(dim)));
    for (const std::vector<Scalar>& v : nullspace(section_map(m, c))) {
      span.push_back(v);
      const std::size_t r = rank(Matrix::from_rows(f, span, static_cast<std::size_t>(dim)));
      if (r == current) {
        span.pop_back();
        continue;
      }
      current = r;
      gens.push_back({c, unpack_section(f, src, c, v)});
      if (gens.size() == expected) break;
    }
  }
  if (gens.size() != expected)
    throw InvariantViolation("kernel degree bound exhausted before reaching the expected rank");

  std::vector<int> cols;
  for (const Generator& g : gens) cols.push_back(-g.degree);
  GradedMatrix k(f, src, cols);
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < src.size(); ++i) k.set(i, j, gens[j].forms[i]);
  return k;
}

}  // namespace dihedral
