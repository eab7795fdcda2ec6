#pragma once

#include "coendforge/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace coendforge {

class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense matrix over one exact field. Column j is the image of the j-th
/// domain basis vector, so a map V -> W is stored as dim(W) x dim(V).
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);

    static Matrix identity(Field f, std::size_t n);
    static Matrix zero(Field f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }
    /// Row-major integer literal, mostly for tests and fixtures.
    static Matrix from_rows(Field f, std::initializer_list<std::initializer_list<long>> rows);
    static Matrix from_rows(Field f, const std::vector<std::vector<mpq_class>>& rows, std::size_t cols);
    /// 1 x 1 matrix holding c.
    static Matrix scalar(Field f, const mpq_class& c);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    /// Raw write access; the value must already be a field representative.
    mpq_class& ref(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const mpq_class& v) { data_[i * cols_ + j] = field_.from_rational(v); }
    Scalar entry(std::size_t i, std::size_t j) const { return Scalar(field_, (*this)(i, j)); }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const mpq_class& c) const;
    Matrix transpose() const;

    Matrix block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
    void add_block(std::size_t r0, std::size_t c0, const Matrix& m);
    Matrix column(std::size_t j) const { return block(0, j, rows_, 1); }

    bool is_zero() const;
    bool is_identity() const;

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_ = Field::rational();
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpq_class> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Matrix hconcat(const std::vector<Matrix>& parts, Field f, std::size_t rows);
Matrix vconcat(const std::vector<Matrix>& parts, Field f, std::size_t cols);

/// Finite-dimensional based vector space, optionally with integer norm weights
/// (||e_i|| = p^{-w_i}).
class SpaceObject {
public:
    SpaceObject() = default;
    explicit SpaceObject(std::vector<std::string> labels, std::optional<std::vector<long>> weights = std::nullopt);

    /// Basis labels prefix0, prefix1, ...
    static SpaceObject standard(std::size_t dim, const std::string& prefix = "e");
    /// The unit object K.
    static SpaceObject unit() { return standard(1, "1"); }

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::optional<std::vector<long>>& weights() const { return weights_; }
    /// Weights, defaulting to all zero.
    std::vector<long> weights_or_zero() const;

    friend bool operator==(const SpaceObject&, const SpaceObject&) = default;

private:
    std::vector<std::string> labels_;
    std::optional<std::vector<long>> weights_;
};

/// X-major tensor product: (i, j) sits at i * dim(Y) + j.
SpaceObject tensor(const SpaceObject& x, const SpaceObject& y);
/// Dual space with primed labels and negated weights.
SpaceObject dual(const SpaceObject& x);
SpaceObject direct_sum(const std::vector<SpaceObject>& parts);

/// A matrix together with its based domain and codomain.
class LinearMap {
public:
    LinearMap() = default;
    LinearMap(SpaceObject dom, SpaceObject cod, Matrix m);

    static LinearMap identity(Field f, const SpaceObject& x);

    const SpaceObject& domain() const { return dom_; }
    const SpaceObject& codomain() const { return cod_; }
    const Matrix& matrix() const { return mat_; }
    const Field& field() const { return mat_.field(); }

    /// this ∘ other
    LinearMap compose(const LinearMap& other) const;

    friend bool operator==(const LinearMap&, const LinearMap&) = default;

private:
    SpaceObject dom_;
    SpaceObject cod_;
    Matrix mat_;
};

}  // namespace coendforge
