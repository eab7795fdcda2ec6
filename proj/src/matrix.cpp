#include "coendforge/matrix.hpp"

#include <ostream>
#include <set>

namespace coendforge {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.ref(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(Field f, std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(f, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw ShapeError("ragged matrix literal");
        std::size_t j = 0;
        for (long v : row) m.set(i, j++, mpq_class(v));
        ++i;
    }
    return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<mpq_class>>& rows, std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ShapeError("ragged matrix: row " + std::to_string(i));
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::scalar(Field f, const mpq_class& c) {
    Matrix m(f, 1, 1);
    m.set(0, 0, c);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_same_field(field_, o.field_, "matrix product");
    if (cols_ != o.rows_) {
        throw ShapeError("matrix product shape " + std::to_string(rows_) + "x" + std::to_string(cols_) + " * " +
                         std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    }
    Matrix r(field_, rows_, o.cols_);
    const bool prime = field_.is_prime_field();
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpq_class& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const mpq_class& b = o(k, j);
                if (sgn(b) == 0) continue;
                if (prime) {
                    r.ref(i, j) = field_.add(r(i, j), field_.mul(a, b));
                } else {
                    r.ref(i, j) += a * b;
                }
            }
        }
    }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_field(field_, o.field_, "matrix sum");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
    Matrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.add(data_[k], o.data_[k]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_field(field_, o.field_, "matrix difference");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
    Matrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.sub(data_[k], o.data_[k]);
    return r;
}

Matrix Matrix::scaled(const mpq_class& c) const {
    mpq_class cc = field_.from_rational(c);
    Matrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.mul(data_[k], cc);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.ref(j, i) = (*this)(i, j);
    return r;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
    if (r0 + h > rows_ || c0 + w > cols_) throw ShapeError("block out of range");
    Matrix r(field_, h, w);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < w; ++j) r.ref(i, j) = (*this)(r0 + i, c0 + j);
    return r;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    require_same_field(field_, m.field_, "set_block");
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw ShapeError("set_block out of range");
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) ref(r0 + i, c0 + j) = m(i, j);
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    require_same_field(field_, m.field_, "add_block");
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw ShapeError("add_block out of range");
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) ref(r0 + i, c0 + j) = field_.add((*this)(r0 + i, c0 + j), m(i, j));
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << rational_to_string(m(i, j));
        os << "]";
    }
    return os << "]";
}

Matrix hconcat(const std::vector<Matrix>& parts, Field f, std::size_t rows) {
    std::size_t cols = 0;
    for (const auto& p : parts) {
        if (p.rows() != rows) throw ShapeError("hconcat row mismatch");
        cols += p.cols();
    }
    Matrix r(f, rows, cols);
    std::size_t c = 0;
    for (const auto& p : parts) {
        r.set_block(0, c, p);
        c += p.cols();
    }
    return r;
}

Matrix vconcat(const std::vector<Matrix>& parts, Field f, std::size_t cols) {
    std::size_t rows = 0;
    for (const auto& p : parts) {
        if (p.cols() != cols) throw ShapeError("vconcat column mismatch");
        rows += p.rows();
    }
    Matrix r(f, rows, cols);
    std::size_t k = 0;
    for (const auto& p : parts) {
        r.set_block(k, 0, p);
        k += p.rows();
    }
    return r;
}

SpaceObject::SpaceObject(std::vector<std::string> labels, std::optional<std::vector<long>> weights)
    : labels_(std::move(labels)), weights_(std::move(weights)) {
    if (weights_ && weights_->size() != labels_.size()) {
        throw ShapeError("weight count " + std::to_string(weights_->size()) + " differs from dimension " +
                         std::to_string(labels_.size()));
    }
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second) throw std::invalid_argument("duplicate basis label \"" + l + "\"");
    }
}

SpaceObject SpaceObject::standard(std::size_t dim, const std::string& prefix) {
    std::vector<std::string> labels;
    labels.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i));
    return SpaceObject(std::move(labels));
}

std::vector<long> SpaceObject::weights_or_zero() const {
    return weights_ ? *weights_ : std::vector<long>(dim(), 0);
}

SpaceObject tensor(const SpaceObject& x, const SpaceObject& y) {
    std::vector<std::string> labels;
    labels.reserve(x.dim() * y.dim());
    for (const auto& a : x.labels())
        for (const auto& b : y.labels()) labels.push_back(a + "⊗" + b);
    std::optional<std::vector<long>> weights;
    if (x.weights() || y.weights()) {
        auto wx = x.weights_or_zero();
        auto wy = y.weights_or_zero();
        weights.emplace();
        for (long a : wx)
            for (long b : wy) weights->push_back(a + b);
    }
    return SpaceObject(std::move(labels), std::move(weights));
}

SpaceObject dual(const SpaceObject& x) {
    std::vector<std::string> labels;
    for (const auto& a : x.labels()) {
        if (a.ends_with("'")) {
            labels.push_back(a.substr(0, a.size() - 1));
        } else {
            labels.push_back(a + "'");
        }
    }
    std::optional<std::vector<long>> weights;
    if (x.weights()) {
        weights.emplace();
        for (long w : *x.weights()) weights->push_back(-w);
    }
    return SpaceObject(std::move(labels), std::move(weights));
}

SpaceObject direct_sum(const std::vector<SpaceObject>& parts) {
    std::vector<std::string> labels;
    bool weighted = false;
    for (const auto& p : parts) weighted = weighted || p.weights().has_value();
    std::optional<std::vector<long>> weights;
    if (weighted) weights.emplace();
    for (std::size_t k = 0; k < parts.size(); ++k) {
        for (const auto& l : parts[k].labels()) labels.push_back(std::to_string(k) + ":" + l);
        if (weighted)
            for (long w : parts[k].weights_or_zero()) weights->push_back(w);
    }
    return SpaceObject(std::move(labels), std::move(weights));
}

LinearMap::LinearMap(SpaceObject dom, SpaceObject cod, Matrix m)
    : dom_(std::move(dom)), cod_(std::move(cod)), mat_(std::move(m)) {
    if (mat_.rows() != cod_.dim() || mat_.cols() != dom_.dim()) {
        throw ShapeError("matrix " + std::to_string(mat_.rows()) + "x" + std::to_string(mat_.cols()) +
                         " does not fit a map from dim " + std::to_string(dom_.dim()) + " to dim " +
                         std::to_string(cod_.dim()));
    }
}

LinearMap LinearMap::identity(Field f, const SpaceObject& x) { return LinearMap(x, x, Matrix::identity(f, x.dim())); }

LinearMap LinearMap::compose(const LinearMap& other) const {
    if (other.cod_.dim() != dom_.dim()) throw ShapeError("compose: codomain/domain dimension mismatch");
    return LinearMap(other.dom_, cod_, mat_ * other.mat_);
}

}  // namespace coendforge
