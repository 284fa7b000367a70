#pragma once

#include <cstddef>

#include "wigner/half_int.hpp"
#include "wigner/surd.hpp"

namespace wigner {

/// |a-b| <= c <= a+b with a+b+c an integer.
bool triangle_ok(HalfInt a, HalfInt b, HalfInt c);

/// Triangular factor sqrt[(a+b-c)! (a-b+c)! (-a+b+c)! / (a+b+c+1)!], squared
/// and kept factored. Throws InternalError if (a, b, c) is not a triangle.
FactoredPositive delta_squared(HalfInt a, HalfInt b, HalfInt c);

/// The triangular factor itself as a positive Surd.
Surd delta(HalfInt a, HalfInt b, HalfInt c);

/// Wigner 3jm symbol
///
///   ( j1 j2 j  )
///   ( m1 m2 m  )
///
/// Zero when m1+m2+m != 0, when some |m| > j, or when (j1, j2, j) is not a
/// triangle. Throws DomainError for a negative j or an m whose offset from
/// its j is not an integer.
Surd wigner3jm(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m1, HalfInt m2, HalfInt m);

/// Wigner 6-j symbol
///
///   { j1 j2 j3 }
///   { l1 l2 l3 }
///
/// Zero unless all four triads (j1 j2 j3), (j1 l2 l3), (l1 j2 l3), (l1 l2 j3)
/// are triangles. Values are memoized under the canonical representative of
/// the 24 classical symmetries. Throws DomainError for negative arguments.
Surd wigner6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt l1, HalfInt l2, HalfInt l3);

/// Wigner 9-j symbol, rows top to bottom,
///
///   { j1 j2 j3 }
///   { l1 l2 l3 }
///   { k1 k2 k3 }
///
/// as sum_x (2x+1) (-1)^(2x) {j1 j2 j3; l3 k3 x} {l1 l2 l3; j2 x k2}
/// {k1 k2 k3; x j1 l1}. Zero unless every row and column is a triangle.
Surd wigner9j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt l1, HalfInt l2, HalfInt l3,
              HalfInt k1, HalfInt k2, HalfInt k3);

/// Uncached 6-j evaluation, for cross-checking the memo table.
Surd wigner6j_direct(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt l1, HalfInt l2, HalfInt l3);

/// Number of distinct 6-j argument classes currently memoized.
std::size_t sixj_cache_size();

}  // namespace wigner
