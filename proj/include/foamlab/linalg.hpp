#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "foamlab/poly.hpp"

namespace foamlab {

using ModMatrix = std::vector<std::vector<i64>>;
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

// Row echelon form over a prime field, grown one row at a time.
class RowSpace {
public:
    explicit RowSpace(CoefRing R) : R_(R) {}
    // Reduces the row against the pivots; keeps it and returns true if it was independent.
    bool add(std::vector<i64> row);
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    CoefRing R_;
    std::vector<std::vector<i64>> rows_;
    std::vector<std::size_t> pivots_;
};

int rank_mod(const ModMatrix& A, const CoefRing& R);

// Value of q at a point (missing variables raise InvalidArgument), in the field R.
i64 eval_at(const MultiPoly& q, const std::map<std::string, i64>& point, const CoefRing& R);

PolyMatrix poly_zero(std::size_t rows, std::size_t cols, const CoefRing& R);
PolyMatrix poly_identity(std::size_t n, const CoefRing& R);
PolyMatrix poly_mul(const PolyMatrix& A, const PolyMatrix& B);
PolyMatrix poly_add(const PolyMatrix& A, const PolyMatrix& B);
PolyMatrix poly_sub(const PolyMatrix& A, const PolyMatrix& B);
bool poly_is_zero(const PolyMatrix& A);
PolyMatrix poly_map(const PolyMatrix& A, const std::function<MultiPoly(const MultiPoly&)>& f);

struct PolySolve {
    bool ok = false;    // false when A is singular
    bool exact = false; // det(A) divides adj(A) B
    MultiPoly det;
    PolyMatrix adjB;    // adj(A) B, always exact
    PolyMatrix X;       // adjB / det when exact
};

// Fraction-free Gauss-Jordan on [A | B], A square.
PolySolve poly_solve(const PolyMatrix& A, const PolyMatrix& B);
MultiPoly poly_det(const PolyMatrix& A);

}  // namespace foamlab
