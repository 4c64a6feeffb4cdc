#pragma once

#include <map>
#include <optional>
#include <utility>

#include "reflectk/scalar.hpp"

namespace reflectk {

/// Pair of tensor legs an operator on V⊗V is embedded into; `factors` is the
/// total number of factors of the ambient space (2 or 3).
struct LegPair {
    int first;
    int second;
    int factors;
};

/// Square matrix over Scalar with 1-based indices and sparse storage: only
/// nonzero entries are kept. The tensor flattening is (i,k) -> (i-1)*n + k.
class Mat {
public:
    using Index = std::pair<int, int>;
    using EntryMap = std::map<Index, Scalar>;

    explicit Mat(int dim);
    static Mat identity(int dim);
    static Mat unit(int dim, int i, int j);  // E_ij
    static Mat zero(int dim) { return Mat(dim); }

    int dim() const { return dim_; }
    std::size_t nnz() const { return e_.size(); }
    const EntryMap& entries() const { return e_; }

    const Scalar& at(int i, int j) const;
    void set(int i, int j, Scalar value);
    void add_at(int i, int j, const Scalar& value);

    bool is_zero() const { return e_.empty(); }
    bool equals(const Mat& o) const;
    bool operator==(const Mat& o) const { return equals(o); }

    /// Row-major first nonzero entry, if any.
    std::optional<std::pair<Index, Scalar>> first_nonzero() const;

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(const Scalar& c) const;

    Mat transpose() const;     // t : (i,j) -> (j,i)
    Mat transpose_w() const;   // antidiagonal: (i,j) -> (N-j+1, N-i+1)
    Mat transpose_t1() const;  // transpose the first tensor factor; dim = n^2
    Mat transpose_w_factors() const;  // w ⊗ w on a two-factor matrix

    Mat subst(const std::map<VarId, Scalar>& bindings) const;
    void collect_vars(std::map<VarId, int>& into) const;

    /// Determinant by fraction-free (Bareiss) elimination on the
    /// denominator-cleared integer-polynomial matrix.
    Scalar det() const;
    /// Exact inverse; throws SingularMatrixError carrying the determinant.
    Mat inverse() const;

private:
    int dim_;
    EntryMap e_;
};

Mat kron(const Mat& a, const Mat& b);

/// Embeds a two-factor operator into factors (legs.first, legs.second) of an
/// n^factors-dimensional space, identity elsewhere. Swapped legs give the
/// flipped embedding, e.g. embed(R, {2,1,2}) == P·R·P.
Mat embed(const Mat& a, LegPair legs);

}  // namespace reflectk
