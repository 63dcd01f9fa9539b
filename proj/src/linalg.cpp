#include "ellpos/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace ellpos {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

Matrix Matrix::from_rows(const std::vector<RationalVector>& rows)
{
    Matrix m;
    for (const auto& r : rows)
        m.append_row(r);
    return m;
}

void Matrix::append_row(std::span<const Rational> row)
{
    if (rows_ == 0 && data_.empty())
        cols_ = row.size();
    if (row.size() != cols_)
        throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

Matrix Matrix::submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const
{
    Matrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
}

RationalVector Matrix::operator*(std::span<const Rational> v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("matrix-vector size mismatch");
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = dot(row(r), v);
    return out;
}

RowEchelon rref(Matrix m)
{
    RowEchelon out;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t p = lead_row;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != lead_row)
            for (std::size_t k = 0; k < m.cols(); ++k)
                std::swap(m(p, k), m(lead_row, k));
        Rational inv = 1 / m(lead_row, c);
        for (std::size_t k = c; k < m.cols(); ++k)
            m(lead_row, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, c) == 0)
                continue;
            Rational f = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                m(r, k) -= f * m(lead_row, k);
        }
        out.pivots.push_back(c);
        ++lead_row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m)
{
    // fraction-free forward elimination is enough for the rank
    Matrix a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0)
            ++p;
        if (p == a.rows())
            continue;
        if (p != r)
            for (std::size_t k = c; k < a.cols(); ++k)
                std::swap(a(p, k), a(r, k));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0)
                continue;
            Rational f = a(i, c) / a(r, c);
            for (std::size_t k = c; k < a.cols(); ++k)
                a(i, k) -= f * a(r, k);
        }
        ++r;
    }
    return r;
}

static void make_primitive(RationalVector& v)
{
    mpz_class den = 1, num = 0;
    for (const auto& x : v)
        if (x != 0)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    for (auto& x : v)
        x *= den;
    for (const auto& x : v)
        if (x != 0)
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
    if (num == 0)
        return;
    for (auto& x : v)
        x /= num;
    for (const auto& x : v) {
        if (x == 0)
            continue;
        if (x < 0)
            for (auto& y : v)
                y = -y;
        break;
    }
}

std::vector<RationalVector> nullspace(const Matrix& m)
{
    RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        RationalVector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.reduced(r, f);
        make_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalVector> solve(const Matrix& a, std::span<const Rational> b)
{
    assert(a.rows() == a.cols() && b.size() == a.rows());
    const std::size_t n = a.rows();
    Matrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    RowEchelon e = rref(std::move(aug));
    if (e.pivots.size() != n || (n > 0 && e.pivots.back() != n - 1))
        return std::nullopt;
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = e.reduced(i, n);
    return x;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    assert(a.size() == b.size());
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

} // namespace ellpos
