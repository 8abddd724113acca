#include "lefhopf/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace lefhopf {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << numer(r);
    if (!is_integer(r)) os << '/' << denom(r);
    return os.str();
}

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = (text[i] == '-');
        ++i;
    }
    auto read_digits = [&](Integer& out) -> bool {
        if (i >= text.size() || text[i] < '0' || text[i] > '9') return false;
        out = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            out = out * 10 + (text[i] - '0');
            ++i;
        }
        return true;
    };
    Integer num;
    if (!read_digits(num)) return std::nullopt;
    Integer den = 1;
    if (i < text.size()) {
        if (text[i] != '/') return std::nullopt;
        ++i;
        if (!read_digits(den)) return std::nullopt;
        if (i != text.size()) return std::nullopt;
        if (den == 0) return std::nullopt;
    }
    Rational r(num, den);
    if (negative) r = -r;
    return r;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vector Matrix::row(std::size_t i) const {
    Vector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Rational Matrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b.at(k, j) != 0) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum dimension mismatch");
    Matrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix difference dimension mismatch");
    Matrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix matrix_from_columns(std::size_t dim, const std::vector<Vector>& columns) {
    Matrix m(dim, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != dim)
            throw std::invalid_argument("column dimension mismatch");
        for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = columns[j][i];
    }
    return m;
}

namespace {

// Row-reduces `work` in place; returns pivot columns. First nonzero entry in
// each column is the pivot row (no pivot-magnitude heuristics: determinism
// beats speed at this scale).
std::vector<std::size_t> row_reduce(Matrix& work) {
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < work.cols() && pivot_row < work.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < work.rows() && work.at(sel, col) == 0) ++sel;
        if (sel == work.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < work.cols(); ++j)
                std::swap(work.at(sel, j), work.at(pivot_row, j));
        const Rational inv = work.at(pivot_row, col);
        for (std::size_t j = col; j < work.cols(); ++j) work.at(pivot_row, j) /= inv;
        for (std::size_t i = 0; i < work.rows(); ++i) {
            if (i == pivot_row) continue;
            const Rational factor = work.at(i, col);
            if (factor == 0) continue;
            for (std::size_t j = col; j < work.cols(); ++j)
                work.at(i, j) -= factor * work.at(pivot_row, j);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return pivots;
}

}  // namespace

RrefResult rref_decompose(const Matrix& m) {
    Matrix work = m;
    RrefResult res;
    res.pivot_cols = row_reduce(work);
    res.rank = res.pivot_cols.size();

    // Kernel: one vector per free column, reading pivot coefficients off the
    // reduced rows.
    std::vector<long> pivot_of_col(m.cols(), -1);
    for (std::size_t r = 0; r < res.pivot_cols.size(); ++r)
        pivot_of_col[res.pivot_cols[r]] = static_cast<long>(r);
    for (std::size_t col = 0; col < m.cols(); ++col) {
        if (pivot_of_col[col] >= 0) continue;
        Vector k(m.cols());
        k[col] = 1;
        for (std::size_t r = 0; r < res.pivot_cols.size(); ++r)
            k[res.pivot_cols[r]] = -work.at(r, col);
        res.kernel_basis.push_back(std::move(k));
    }
    for (std::size_t p : res.pivot_cols) res.image_basis.push_back(m.column(p));
    return res;
}

std::size_t rank_of(const Matrix& m) {
    Matrix work = m;
    return row_reduce(work).size();
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve dimension mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    const auto pivots = row_reduce(aug);
    // Inconsistent iff the augmented column is a pivot.
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    Vector x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
    return x;
}

std::optional<Vector> solve_modulo(const Vector& v, const std::vector<Vector>& basis,
                                   const std::vector<Vector>& modulo) {
    const std::size_t dim = v.size();
    for (const auto& b : basis)
        if (b.size() != dim) throw std::invalid_argument("solve_modulo dimension mismatch");
    for (const auto& q : modulo)
        if (q.size() != dim) throw std::invalid_argument("solve_modulo dimension mismatch");
    Matrix a(dim, basis.size() + modulo.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) a.at(i, j) = basis[j][i];
    for (std::size_t j = 0; j < modulo.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) a.at(i, basis.size() + j) = modulo[j][i];
    auto x = solve(a, v);
    if (!x) return std::nullopt;
    x->resize(basis.size());
    return x;
}

Rational det(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Matrix work = m;
    Rational result = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && work.at(sel, col) == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(work.at(sel, j), work.at(col, j));
            result = -result;
        }
        const Rational pivot = work.at(col, col);
        result *= pivot;
        for (std::size_t i = col + 1; i < n; ++i) {
            const Rational factor = work.at(i, col) / pivot;
            if (factor == 0) continue;
            for (std::size_t j = col; j < n; ++j)
                work.at(i, j) -= factor * work.at(col, j);
        }
    }
    return result;
}

}  // namespace lefhopf
