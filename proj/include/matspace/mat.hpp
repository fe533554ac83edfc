#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace matspace::la {

/// Dense row-major matrix over an exact field K (Rat or Fp). All entries
/// share the field carried in field(); dimensions are at least 1x1.
template <class K>
class Mat {
public:
    using Field = typename K::Field;

    Mat(std::size_t rows, std::size_t cols, const Field& f)
        : rows_(rows), cols_(cols), field_(f), a_(rows * cols, f.zero()) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("Mat: dimensions must be at least 1x1");
    }

    static Mat identity(std::size_t n, const Field& f) {
        Mat m(n, n, f);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    K& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const K& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(cols_, rows_, field_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Mat operator+(const Mat& o) const {
        require_same_shape(o);
        Mat r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
        return r;
    }

    Mat operator-(const Mat& o) const {
        require_same_shape(o);
        Mat r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
        return r;
    }

    Mat scaled(const K& c) const {
        Mat r = *this;
        for (K& x : r.a_) x *= c;
        return r;
    }

    Mat mul(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
        Mat r(rows_, o.cols_, field_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    /// Matrix-vector product A v.
    std::vector<K> apply(const std::vector<K>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Mat: vector length mismatch");
        std::vector<K> r(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }

    /// Row-major flattening, used to test linear independence of matrices.
    std::vector<K> vectorized() const { return a_; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

private:
    void require_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
            throw std::invalid_argument("Mat: shape or field mismatch");
    }

    std::size_t rows_, cols_;
    Field field_;
    std::vector<K> a_;
};

} // namespace matspace::la
