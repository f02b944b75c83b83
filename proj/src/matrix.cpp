#include "quiverkac/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "quiverkac/errors.hpp"

namespace qk {

FqMatrix FqMatrix::identity(const FieldSpec& F, int n) {
    FqMatrix m(F, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

FqMatrix FqMatrix::operator*(const FqMatrix& rhs) const {
    const FieldSpec& F = *F_;
    FqMatrix out(F, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int l = 0; l < cols_; ++l) {
            Fq a = (*this)(i, l);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out(i, j) = F.add(out(i, j), F.mul(a, rhs(l, j)));
        }
    return out;
}

FqMatrix FqMatrix::operator+(const FqMatrix& rhs) const {
    FqMatrix out(*F_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = F_->add(e_[i], rhs.e_[i]);
    return out;
}

FqMatrix FqMatrix::operator-(const FqMatrix& rhs) const {
    FqMatrix out(*F_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = F_->sub(e_[i], rhs.e_[i]);
    return out;
}

FqMatrix FqMatrix::scaled(Fq c) const {
    FqMatrix out(*F_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = F_->mul(e_[i], c);
    return out;
}

FqMatrix FqMatrix::transposed() const {
    FqMatrix out(*F_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

bool FqMatrix::operator==(const FqMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && F_->q == rhs.F_->q && e_ == rhs.e_;
}

bool FqMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](Fq x) { return x == 0; });
}

bool FqMatrix::is_invertible() const {
    return rows_ == cols_ && rank(*this) == rows_;
}

FqMatrix FqMatrix::inverse() const {
    if (rows_ != cols_) throw DomainError("inverse of non-square matrix");
    RrefResult r = rref(hcat(identity(*F_, rows_)));
    if (r.rank < rows_) throw DomainError("inverse of singular matrix");
    return r.mat.block(0, cols_, rows_, cols_);
}

FqMatrix FqMatrix::hcat(const FqMatrix& rhs) const {
    FqMatrix out(*F_, rows_, cols_ + rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (int j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
    }
    return out;
}

FqMatrix FqMatrix::vcat(const FqMatrix& rhs) const {
    FqMatrix out(*F_, rows_ + rhs.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (int i = 0; i < rhs.rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(rows_ + i, j) = rhs(i, j);
    return out;
}

FqMatrix FqMatrix::block(int r0, int c0, int nr, int nc) const {
    FqMatrix out(*F_, nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

std::string FqMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << int((*this)(i, j));
        }
    }
    os << "]";
    return os.str();
}

RrefResult rref(const FqMatrix& m) {
    const FieldSpec& F = m.field();
    RrefResult out{m, 0, {}};
    FqMatrix& a = out.mat;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
        Fq s = F.inv(a(r, c));
        for (int j = 0; j < a.cols(); ++j) a(r, j) = F.mul(a(r, j), s);
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Fq f = a(i, c);
            for (int j = 0; j < a.cols(); ++j) a(i, j) = F.sub(a(i, j), F.mul(f, a(r, j)));
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

int rank(const FqMatrix& m) { return rref(m).rank; }

Subspace::Subspace(const FieldSpec& F, int ambient_dim, const FqMatrix& spanning_rows)
    : ambient_(ambient_dim) {
    if (spanning_rows.cols() != ambient_dim)
        throw DomainError("spanning rows do not match ambient dimension");
    RrefResult r = rref(spanning_rows);
    basis_ = r.mat.block(0, 0, r.rank, ambient_dim);
    if (r.rank == 0) basis_ = FqMatrix(F, 0, ambient_dim);
}

Subspace Subspace::zero(const FieldSpec& F, int ambient_dim) {
    return Subspace(F, ambient_dim, FqMatrix(F, 0, ambient_dim));
}

Subspace Subspace::full(const FieldSpec& F, int ambient_dim) {
    return Subspace(F, ambient_dim, FqMatrix::identity(F, ambient_dim));
}

bool Subspace::contains(const std::vector<Fq>& v) const {
    const FieldSpec& F = field();
    // reduce v against the RREF basis and check the residue is zero
    std::vector<Fq> w = v;
    const RrefResult piv = rref(basis_);  // basis is already RREF; reuse pivots
    for (int i = 0; i < basis_.rows(); ++i) {
        int c = piv.pivots[i];
        Fq f = w[c];
        if (f == 0) continue;
        for (int j = 0; j < ambient_; ++j) w[j] = F.sub(w[j], F.mul(f, basis_(i, j)));
    }
    return std::all_of(w.begin(), w.end(), [](Fq x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    for (int i = 0; i < other.dim(); ++i) {
        std::vector<Fq> v(ambient_);
        for (int j = 0; j < ambient_; ++j) v[j] = other.basis_(i, j);
        if (!contains(v)) return false;
    }
    return true;
}

bool Subspace::operator==(const Subspace& rhs) const {
    return ambient_ == rhs.ambient_ && basis_ == rhs.basis_;
}

bool Subspace::operator<(const Subspace& rhs) const {
    if (ambient_ != rhs.ambient_) return ambient_ < rhs.ambient_;
    if (basis_.rows() != rhs.basis_.rows()) return basis_.rows() < rhs.basis_.rows();
    return basis_.data() < rhs.basis_.data();
}

FqMatrix Subspace::annihilator() const {
    // functionals vanishing on the row space = nullspace of the basis matrix
    return nullspace(basis_).basis();
}

Subspace nullspace(const FqMatrix& m) {
    const FieldSpec& F = m.field();
    RrefResult r = rref(m);
    int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : r.pivots) is_pivot[c] = true;
    FqMatrix rows(F, n - r.rank, n);
    int out = 0;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        rows(out, c) = 1;
        for (int i = 0; i < r.rank; ++i) rows(out, r.pivots[i]) = F.neg(r.mat(i, c));
        ++out;
    }
    return Subspace(F, n, rows);
}

Subspace row_space(const FqMatrix& m) { return Subspace(m.field(), m.cols(), m); }

void enumerate_matrices(const FieldSpec& F, int rows, int cols, std::optional<int> rank_filter,
                        const std::function<bool(const FqMatrix&)>& fn) {
    const std::vector<Fq>& ord = F.order();
    FqMatrix m(F, rows, cols);
    size_t n = static_cast<size_t>(rows) * cols;
    std::vector<int> idx(n, 0);
    for (;;) {
        for (size_t i = 0; i < n; ++i) m.data()[i] = ord[idx[i]];
        if (!rank_filter || rank(m) == *rank_filter)
            if (!fn(m)) return;
        // odometer, last entry fastest
        size_t i = n;
        while (i > 0) {
            --i;
            if (++idx[i] < F.q) break;
            idx[i] = 0;
            if (i == 0) return;
        }
        if (n == 0) return;  // single empty matrix
    }
}

void enumerate_subspaces(const FieldSpec& F, int n, std::optional<int> d,
                         const std::function<bool(const Subspace&)>& fn) {
    std::vector<int> dims;
    if (d)
        dims.push_back(*d);
    else
        for (int i = 0; i <= n; ++i) dims.push_back(i);

    for (int dim : dims) {
        if (dim < 0 || dim > n) throw DomainError("subspace dimension out of range");
        // choose pivot columns p_0 < ... < p_{dim-1}, then fill free entries
        std::vector<int> piv(dim);
        for (int i = 0; i < dim; ++i) piv[i] = i;
        bool more = true;
        while (more) {
            std::vector<bool> is_pivot(n, false);
            for (int c : piv) is_pivot[c] = true;
            std::vector<std::pair<int, int>> free_pos;  // (row, col)
            for (int i = 0; i < dim; ++i)
                for (int c = piv[i] + 1; c < n; ++c)
                    if (!is_pivot[c]) free_pos.emplace_back(i, c);

            const std::vector<Fq>& ord = F.order();
            std::vector<int> idx(free_pos.size(), 0);
            for (;;) {
                FqMatrix b(F, dim, n);
                for (int i = 0; i < dim; ++i) b(i, piv[i]) = 1;
                for (size_t t = 0; t < free_pos.size(); ++t)
                    b(free_pos[t].first, free_pos[t].second) = ord[idx[t]];
                Subspace s(F, n, b);
                if (!fn(s)) return;
                size_t t = idx.size();
                bool done = true;
                while (t > 0) {
                    --t;
                    if (++idx[t] < F.q) {
                        done = false;
                        break;
                    }
                    idx[t] = 0;
                }
                if (done) break;
            }

            // next pivot combination
            int i = dim - 1;
            while (i >= 0 && piv[i] == n - dim + i) --i;
            if (i < 0) {
                more = false;
            } else {
                ++piv[i];
                for (int j = i + 1; j < dim; ++j) piv[j] = piv[j - 1] + 1;
            }
        }
    }
}

long long gaussian_binomial(int n, int d, int q) {
    if (d < 0 || d > n) return 0;
    // prod_{i=0}^{d-1} (q^{n-i}-1)/(q^{i+1}-1), computed as exact quotient
    long long num = 1, den = 1;
    for (int i = 0; i < d; ++i) {
        long long qa = 1, qb = 1;
        for (int t = 0; t < n - i; ++t) qa *= q;
        for (int t = 0; t < i + 1; ++t) qb *= q;
        num *= qa - 1;
        den *= qb - 1;
        // keep intermediate values small
        long long g = [](long long a, long long b) {
            while (b) {
                long long t = a % b;
                a = b;
                b = t;
            }
            return a;
        }(num, den);
        num /= g;
        den /= g;
    }
    return num / den;
}

}  // namespace qk
