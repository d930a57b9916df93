#include "qcat/tensor_ops.hpp"

#include <utility>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

constexpr std::size_t kMaxTensorDim = 4096;

ScalarMode generic() { return ScalarMode::generic(); }

} // namespace

TensorSpace::TensorSpace(int n, int k) : n_(n), k_(k) {
    if (n < 1 || k < 0) throw DomainError("TensorSpace: need n >= 1, k >= 0");
    dim_ = 1;
    for (int s = 0; s < k; ++s) {
        dim_ *= static_cast<std::size_t>(n);
        if (dim_ > kMaxTensorDim) throw ResourceLimit("TensorSpace: dimension guard exceeded");
    }
}

std::vector<int> TensorSpace::tuple(std::size_t index) const {
    if (index >= dim_) throw DomainError("TensorSpace: index out of range");
    std::vector<int> t(static_cast<std::size_t>(k_));
    for (int pos = k_ - 1; pos >= 0; --pos) {
        t[static_cast<std::size_t>(pos)] = static_cast<int>(index % static_cast<std::size_t>(n_)) + 1;
        index /= static_cast<std::size_t>(n_);
    }
    return t;
}

std::size_t TensorSpace::index(const std::vector<int>& t) const {
    if (t.size() != static_cast<std::size_t>(k_))
        throw DomainError("TensorSpace: tuple length mismatch");
    std::size_t idx = 0;
    for (int v : t) {
        if (v < 1 || v > n_) throw DomainError("TensorSpace: tuple value out of range");
        idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v - 1);
    }
    return idx;
}

Weight TensorSpace::weight(std::size_t index) const {
    Weight w(static_cast<std::size_t>(n_), 0);
    for (int v : tuple(index)) w[static_cast<std::size_t>(v - 1)] += 1;
    return w;
}

DenseOperator::DenseOperator(std::size_t dim) : dim_(dim), a_(dim * dim) {}

DenseOperator DenseOperator::identity(std::size_t dim) {
    DenseOperator m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Scalar::one(generic());
    return m;
}

DenseOperator DenseOperator::scalar(std::size_t dim, const Scalar& c) {
    DenseOperator m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = c;
    return m;
}

bool DenseOperator::is_zero() const {
    for (const Scalar& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool DenseOperator::operator==(const DenseOperator& o) const {
    return dim_ == o.dim_ && a_ == o.a_;
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& o) {
    if (dim_ != o.dim_) throw DomainError("DenseOperator: dimension mismatch");
    for (std::size_t t = 0; t < a_.size(); ++t) a_[t] += o.a_[t];
    return *this;
}

DenseOperator& DenseOperator::operator-=(const DenseOperator& o) {
    if (dim_ != o.dim_) throw DomainError("DenseOperator: dimension mismatch");
    for (std::size_t t = 0; t < a_.size(); ++t) a_[t] -= o.a_[t];
    return *this;
}

DenseOperator DenseOperator::scaled(const Scalar& c) const {
    DenseOperator out(dim_);
    for (std::size_t t = 0; t < a_.size(); ++t) out.a_[t] = a_[t] * c;
    return out;
}

DenseOperator DenseOperator::mul_serial(const DenseOperator& o) const {
    if (dim_ != o.dim_) throw DomainError("DenseOperator: dimension mismatch");
    DenseOperator c(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                const Scalar& bkj = o.at(k, j);
                if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

DenseOperator DenseOperator::mul(const DenseOperator& o) const {
    if (dim_ != o.dim_) throw DomainError("DenseOperator: dimension mismatch");
    DenseOperator c(dim_);
    // Rows are independent, so each thread owns a disjoint slice of c.
    long rows = static_cast<long>(dim_);
#pragma omp parallel for schedule(static)
    for (long ii = 0; ii < rows; ++ii) {
        auto i = static_cast<std::size_t>(ii);
        for (std::size_t k = 0; k < dim_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                const Scalar& bkj = o.at(k, j);
                if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
            }
        }
    }
    return c;
}

DenseOperator DenseOperator::power(long e) const {
    if (e < 0) throw DomainError("DenseOperator: negative power");
    DenseOperator acc = identity(dim_);
    DenseOperator base = *this;
    while (e > 0) {
        if (e & 1) acc = acc.mul(base);
        e >>= 1;
        if (e > 0) base = base.mul(base);
    }
    return acc;
}

std::vector<Scalar> DenseOperator::apply(const std::vector<Scalar>& v) const {
    if (v.size() != dim_) throw DomainError("DenseOperator: vector length mismatch");
    std::vector<Scalar> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

namespace {

using Rows = std::vector<std::vector<Scalar>>;

// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<std::size_t> rref(Rows& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Scalar inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!m[r][j].is_zero()) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Rows to_rows(const DenseOperator& a) {
    Rows m(a.dim(), std::vector<Scalar>(a.dim()));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) m[i][j] = a.at(i, j);
    return m;
}

std::vector<std::vector<Scalar>> kernel_of_rows(Rows m, std::size_t cols) {
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols);
        v[f] = Scalar::one(generic());
        for (std::size_t p = 0; p < pivots.size(); ++p)
            v[pivots[p]] = -m[p][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

std::size_t DenseOperator::rank() const {
    Rows m = to_rows(*this);
    return rref(m).size();
}

std::vector<std::vector<Scalar>> DenseOperator::kernel() const {
    return kernel_of_rows(to_rows(*this), dim_);
}

std::size_t rank_of(std::vector<std::vector<Scalar>> rows) { return rref(rows).size(); }

std::vector<std::vector<Scalar>> kernel_basis(std::vector<std::vector<Scalar>> rows,
                                              std::size_t cols) {
    return kernel_of_rows(std::move(rows), cols);
}

DenseOperator DenseOperator::inverse() const {
    Rows m(dim_, std::vector<Scalar>(2 * dim_));
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) m[i][j] = at(i, j);
        m[i][dim_ + i] = Scalar::one(generic());
    }
    std::vector<std::size_t> pivots = rref(m);
    // The identity block keeps [A|I] at full row rank, so singularity shows up
    // as a pivot escaping into the right half, not as a missing pivot.
    for (std::size_t p : pivots)
        if (p >= dim_) throw DivisionByZero("DenseOperator: singular matrix");
    if (pivots.size() != dim_) throw DivisionByZero("DenseOperator: singular matrix");
    DenseOperator out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out.at(i, j) = m[i][dim_ + j];
    return out;
}

DenseOperator r_hat(int n) { return adjacent_braiding(n, 2, 1); }

DenseOperator adjacent_braiding(int n, int k, int p) {
    if (p < 1 || p >= k) throw DomainError("adjacent_braiding: pair index out of range");
    TensorSpace space(n, k);
    Scalar q = Scalar::q_power(1, generic());
    Scalar hook = q - Scalar::q_power(-1, generic()); // q - q^{-1}
    DenseOperator m(space.dim());
    for (std::size_t col = 0; col < space.dim(); ++col) {
        std::vector<int> t = space.tuple(col);
        int x = t[static_cast<std::size_t>(p - 1)];
        int y = t[static_cast<std::size_t>(p)];
        if (x == y) {
            m.at(col, col) += q;
            continue;
        }
        std::vector<int> s = t;
        std::swap(s[static_cast<std::size_t>(p - 1)], s[static_cast<std::size_t>(p)]);
        m.at(space.index(s), col) += Scalar::one(generic());
        if (x > y) m.at(col, col) += hook;
    }
    return m;
}

DenseOperator sigma_op(int n, int k, int i) {
    if (i < 1 || i > k - 1) throw DomainError("sigma_op: index out of range");
    return adjacent_braiding(n, k, k - i);
}

DenseOperator y_op(int n, int k, int i) {
    if (i < 1 || i > k) throw DomainError("y_op: index out of range");
    TensorSpace space(n, k);
    // Factor k-i+1 walks right over everything after it, then walks back:
    // Y_i = (b_p ... b_{k-1})(b_{k-1} ... b_p) with p = k-i+1.  Y_1 = id.
    int p = k - i + 1;
    DenseOperator acc = DenseOperator::identity(space.dim());
    for (int j = p; j <= k - 1; ++j) acc = acc.mul(adjacent_braiding(n, k, j));
    for (int j = k - 1; j >= p; --j) acc = acc.mul(adjacent_braiding(n, k, j));
    return acc;
}

} // namespace qcat
