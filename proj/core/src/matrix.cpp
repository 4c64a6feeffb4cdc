#include "reflectk/matrix.hpp"

#include <cmath>
#include <vector>

#include "reflectk/expr.hpp"

namespace reflectk {

namespace {
const Scalar kZero;

int isqrt_exact(int n) {
    int r = static_cast<int>(std::lround(std::sqrt(double(n))));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r != n) throw InvariantError("matrix dimension is not a perfect square");
    return r;
}
}  // namespace

Mat::Mat(int dim) : dim_(dim) {
    if (dim < 1) throw InvariantError("matrix dimension must be positive");
}

Mat Mat::identity(int dim) {
    Mat m(dim);
    for (int i = 1; i <= dim; ++i) m.e_.emplace(Index{i, i}, Scalar(1));
    return m;
}

Mat Mat::unit(int dim, int i, int j) {
    Mat m(dim);
    m.set(i, j, Scalar(1));
    return m;
}

const Scalar& Mat::at(int i, int j) const {
    auto it = e_.find({i, j});
    return it == e_.end() ? kZero : it->second;
}

void Mat::set(int i, int j, Scalar value) {
    if (i < 1 || i > dim_ || j < 1 || j > dim_)
        throw InvariantError("matrix index out of range");
    if (value.is_zero())
        e_.erase({i, j});
    else
        e_.insert_or_assign({i, j}, std::move(value));
}

void Mat::add_at(int i, int j, const Scalar& value) {
    if (value.is_zero()) return;
    auto it = e_.find({i, j});
    if (it == e_.end()) {
        set(i, j, value);
    } else {
        Scalar sum = it->second + value;
        if (sum.is_zero())
            e_.erase(it);
        else
            it->second = std::move(sum);
    }
}

bool Mat::equals(const Mat& o) const {
    if (dim_ != o.dim_) return false;
    // Cross-multiplied comparison entry by entry; support sets may differ
    // only through unnormalized zero representations, which set() forbids,
    // so differing keys decide quickly.
    auto a = e_.begin();
    auto b = o.e_.begin();
    while (a != e_.end() && b != o.e_.end()) {
        if (a->first != b->first) return false;
        if (!a->second.equals(b->second)) return false;
        ++a;
        ++b;
    }
    return a == e_.end() && b == o.e_.end();
}

std::optional<std::pair<Mat::Index, Scalar>> Mat::first_nonzero() const {
    if (e_.empty()) return std::nullopt;
    const auto& [idx, val] = *e_.begin();
    return std::make_pair(idx, val);
}

Mat Mat::operator+(const Mat& o) const {
    if (dim_ != o.dim_) throw InvariantError("dimension mismatch in matrix sum");
    Mat out = *this;
    for (const auto& [idx, val] : o.e_) out.add_at(idx.first, idx.second, val);
    return out;
}

Mat Mat::operator-(const Mat& o) const { return *this + o.scaled(Scalar(-1)); }

Mat Mat::operator*(const Mat& o) const {
    if (dim_ != o.dim_) throw InvariantError("dimension mismatch in matrix product");
    // Sparse row-times-matrix: group the right factor by row index once.
    Mat out(dim_);
    std::vector<std::vector<std::pair<int, const Scalar*>>> rows_of_o(
        static_cast<std::size_t>(dim_) + 1);
    for (const auto& [idx, val] : o.e_)
        rows_of_o[static_cast<std::size_t>(idx.first)].emplace_back(idx.second, &val);
    for (const auto& [idx, val] : e_) {
        const auto& [i, k] = idx;
        for (const auto& [j, bval] : rows_of_o[static_cast<std::size_t>(k)])
            out.add_at(i, j, val * (*bval));
    }
    return out;
}

Mat Mat::scaled(const Scalar& c) const {
    Mat out(dim_);
    if (c.is_zero()) return out;
    for (const auto& [idx, val] : e_) out.e_.emplace(idx, val * c);
    return out;
}

Mat Mat::transpose() const {
    Mat out(dim_);
    for (const auto& [idx, val] : e_) out.e_.emplace(Index{idx.second, idx.first}, val);
    return out;
}

Mat Mat::transpose_w() const {
    Mat out(dim_);
    for (const auto& [idx, val] : e_)
        out.e_.emplace(Index{dim_ - idx.second + 1, dim_ - idx.first + 1}, val);
    return out;
}

Mat Mat::transpose_t1() const {
    int n = isqrt_exact(dim_);
    Mat out(dim_);
    for (const auto& [idx, val] : e_) {
        int i1 = (idx.first - 1) / n + 1, i2 = (idx.first - 1) % n + 1;
        int j1 = (idx.second - 1) / n + 1, j2 = (idx.second - 1) % n + 1;
        out.e_.emplace(Index{(j1 - 1) * n + i2, (i1 - 1) * n + j2}, val);
    }
    return out;
}

Mat Mat::transpose_w_factors() const {
    int n = isqrt_exact(dim_);
    auto bar = [n](int i) { return n - i + 1; };
    Mat out(dim_);
    for (const auto& [idx, val] : e_) {
        int i1 = (idx.first - 1) / n + 1, i2 = (idx.first - 1) % n + 1;
        int j1 = (idx.second - 1) / n + 1, j2 = (idx.second - 1) % n + 1;
        // (w ⊗ w)(E_{i1 j1} ⊗ E_{i2 j2}) = E_{bar j1, bar i1} ⊗ E_{bar j2, bar i2}
        out.e_.emplace(Index{(bar(j1) - 1) * n + bar(j2), (bar(i1) - 1) * n + bar(i2)}, val);
    }
    return out;
}

Mat Mat::subst(const std::map<VarId, Scalar>& bindings) const {
    Mat out(dim_);
    for (const auto& [idx, val] : e_) out.set(idx.first, idx.second, val.subst(bindings));
    return out;
}

void Mat::collect_vars(std::map<VarId, int>& into) const {
    for (const auto& [idx, val] : e_) val.collect_vars(into);
}

Scalar Mat::det() const {
    // Clear each row to a common polynomial: M[i][j] = num_ij * prod_{k != j} den_ik,
    // then run fraction-free Bareiss; det = det(M) / prod_i rowden_i.
    int n = dim_;
    std::vector<std::vector<Poly>> M(static_cast<std::size_t>(n),
                                     std::vector<Poly>(static_cast<std::size_t>(n)));
    Scalar denom(1);
    for (int i = 1; i <= n; ++i) {
        Poly rowden(BigInt(1));
        for (int j = 1; j <= n; ++j)
            if (!at(i, j).is_zero()) rowden = rowden * at(i, j).den();
        denom = denom * Scalar(rowden, Poly(BigInt(1)));
        for (int j = 1; j <= n; ++j) {
            const Scalar& x = at(i, j);
            if (x.is_zero()) continue;
            M[i - 1][j - 1] = x.num() * rowden.divexact(x.den());
        }
    }
    int sign = 1;
    Poly prev(BigInt(1));
    for (int k = 0; k < n - 1; ++k) {
        if (M[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!M[r][k].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) return Scalar();  // singular
            std::swap(M[k], M[static_cast<std::size_t>(piv)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                M[i][j] = t.divexact(prev);
            }
            M[i][k] = Poly();
        }
        prev = M[k][k];
    }
    Scalar d(M[n - 1][n - 1], Poly(BigInt(1)));
    if (sign < 0) d = -d;
    return d / denom;
}

Mat Mat::inverse() const {
    Scalar d = det();
    if (d.is_zero())
        throw SingularMatrixError("matrix is singular", to_string(d));
    int n = dim_;
    // Gauss-Jordan over the fraction field.
    std::vector<std::vector<Scalar>> M(static_cast<std::size_t>(n),
                                       std::vector<Scalar>(2 * static_cast<std::size_t>(n)));
    for (const auto& [idx, val] : e_) M[idx.first - 1][idx.second - 1] = val;
    for (int i = 0; i < n; ++i) M[i][static_cast<std::size_t>(n + i)] = Scalar(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!M[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw SingularMatrixError("matrix is singular", to_string(Scalar()));
        std::swap(M[static_cast<std::size_t>(col)], M[static_cast<std::size_t>(piv)]);
        Scalar pv = M[col][col].inv();
        for (int j = col; j < 2 * n; ++j)
            if (!M[col][j].is_zero()) M[col][j] = M[col][j] * pv;
        for (int r = 0; r < n; ++r) {
            if (r == col || M[r][col].is_zero()) continue;
            Scalar f = M[r][col];
            for (int j = col; j < 2 * n; ++j)
                if (!M[col][j].is_zero()) M[r][j] = M[r][j] - f * M[col][j];
        }
    }
    Mat out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (!M[i - 1][static_cast<std::size_t>(n + j - 1)].is_zero())
                out.set(i, j, M[i - 1][static_cast<std::size_t>(n + j - 1)]);
    return out;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.dim() * b.dim());
    for (const auto& [ia, va] : a.entries())
        for (const auto& [ib, vb] : b.entries())
            out.set((ia.first - 1) * b.dim() + ib.first, (ia.second - 1) * b.dim() + ib.second,
                    va * vb);
    return out;
}

Mat embed(const Mat& a, LegPair legs) {
    if (legs.factors != 2 && legs.factors != 3)
        throw InvariantError("embed: ambient factor count must be 2 or 3");
    if (legs.first == legs.second || legs.first < 1 || legs.second < 1 ||
        legs.first > legs.factors || legs.second > legs.factors)
        throw InvariantError("embed: invalid leg pair");
    int n = isqrt_exact(a.dim());
    int total = 1;
    for (int k = 0; k < legs.factors; ++k) total *= n;

    auto place = [&](const std::vector<int>& digits) {
        int flat = 0;
        for (int d : digits) flat = flat * n + (d - 1);
        return flat + 1;
    };

    Mat out(total);
    int spect = 1;  // number of spectator index combinations
    for (int k = 0; k < legs.factors - 2; ++k) spect *= n;
    for (const auto& [idx, val] : a.entries()) {
        int r1 = (idx.first - 1) / n + 1, r2 = (idx.first - 1) % n + 1;
        int c1 = (idx.second - 1) / n + 1, c2 = (idx.second - 1) % n + 1;
        for (int m = 0; m < spect; ++m) {
            // Distribute: factor legs.first gets (r1, c1), legs.second gets
            // (r2, c2), remaining factors get the spectator index.
            std::vector<int> row(static_cast<std::size_t>(legs.factors));
            std::vector<int> col(static_cast<std::size_t>(legs.factors));
            int mm = m;
            for (int f = 1; f <= legs.factors; ++f) {
                if (f == legs.first) {
                    row[static_cast<std::size_t>(f - 1)] = r1;
                    col[static_cast<std::size_t>(f - 1)] = c1;
                } else if (f == legs.second) {
                    row[static_cast<std::size_t>(f - 1)] = r2;
                    col[static_cast<std::size_t>(f - 1)] = c2;
                } else {
                    int digit = mm % n + 1;
                    mm /= n;
                    row[static_cast<std::size_t>(f - 1)] = digit;
                    col[static_cast<std::size_t>(f - 1)] = digit;
                }
            }
            out.add_at(place(row), place(col), val);
        }
    }
    return out;
}

}  // namespace reflectk
