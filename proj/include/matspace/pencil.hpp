#pragma once

#include "matspace/binary_form.hpp"
#include "matspace/mat.hpp"
#include "matspace/rat.hpp"

#include <cstddef>
#include <vector>

namespace matspace::pencil {

using la::Mat;
using la::Rat;

/// Exact equivalence invariants of the pencil s A + t B: the normal rank,
/// the right and left minimal indices (as sorted multisets), and the degree
/// of the gcd of the maximal-order minors as binary forms. The counts obey
/// #right = n - r and #left = m - r, and the degrees obey
/// sum(right) + sum(left) + deg gcd = r; both are checked at construction.
struct PencilInvariants {
    std::size_t normal_rank = 0;
    std::vector<std::size_t> right_minimal_indices;
    std::vector<std::size_t> left_minimal_indices;
    std::size_t minor_gcd_degree = 0;
    poly::BinaryForm minor_gcd;
};

/// Kronecker data of the pencil (A, B); both over Q, same shape, linearly
/// independent. Right minimal indices are read off the jumps in the kernel
/// dimensions of the block-Toeplitz stackings of (A, B); left indices come
/// from the transposed pencil; the normal rank is certified symbolically.
PencilInvariants kronecker_minimal_indices(const Mat<Rat>& a, const Mat<Rat>& b);

struct PencilConstantRank {
    bool constant = false;
    poly::BinaryForm gcd;
};

/// Constant-rank test for a pencil: true iff the minor gcd is constant.
PencilConstantRank pencil_constant_rank(const Mat<Rat>& a, const Mat<Rat>& b);

} // namespace matspace::pencil
