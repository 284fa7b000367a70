#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wigner/half_int.hpp"
#include "wigner/surd.hpp"

namespace wigner {

// Argument order everywhere below follows the printed layout of each symbol,
// left to right and top to bottom. Staggered rows are read as written.

/// 12-j symbol of the first kind
///
///   { j1    j2    j3    j4    }
///   {    l1    l2    l3    l4 }
///   { k1    k2    k3    k4    }
///
///   = sum_x (2x+1) (-1)^(R-x) {j1 k1 x; k2 j2 l1} {j2 k2 x; k3 j3 l2}
///                             {j3 k3 x; k4 j4 l3} {j4 k4 x; j1 k1 l4}
///
/// with R the sum of all twelve arguments.
Surd wigner12j_first(const std::array<HalfInt, 4>& j, const std::array<HalfInt, 4>& l,
                     const std::array<HalfInt, 4>& k);

/// 12-j symbol of the second kind
///
///   [ j1 j2 j3 j4 ]
///   [ l1 l2 l3 l4 ]
///   [ k1 k2 k3 k4 ]
///
///   = (-1)^(l1-l2-l3+l4) sum_x (2x+1) {k1 k2 x; j3 j1 l1} {k3 k4 x; j3 j1 l2}
///                                     {k1 k2 x; j4 j2 l3} {k3 k4 x; j4 j2 l4}
Surd wigner12j_second(const std::array<HalfInt, 4>& j, const std::array<HalfInt, 4>& l,
                      const std::array<HalfInt, 4>& k);

/// 3n-j chain of the first kind for n = 4, 5, 6 (12-j, 15-j and 18-j):
///
///   { j1    j2   ...   jn    }
///   {    l1    l2  ...    ln }
///   { k1    k2   ...   kn    }
///
///   = sum_x (2x+1) (-1)^(R+(n-1)x) {jn kn x; j1 k1 ln}
///         prod_{i<n} {ji ki x; k(i+1) j(i+1) li}
///
/// Throws DomainError unless j, l, k all have length n in {4, 5, 6}.
Surd chain_3nj_first(std::span<const HalfInt> j, std::span<const HalfInt> l,
                     std::span<const HalfInt> k);

/// 3n-j chain of the second kind for n = 5, 6; same layout, phase
/// (-1)^(R+nx) and boundary factor {jn kn x; k1 j1 ln}.
Surd chain_3nj_second(std::span<const HalfInt> j, std::span<const HalfInt> l,
                      std::span<const HalfInt> k);

/// 15-j symbol of the third kind, arguments in the order
///
///   { k1    k1'  k    k'  k2    k2' }
///   {    p1         p         p2    }
///   { j1    j1'  j    j'  j2    j2' }
///
///   = sum_x (2x+1) (-1)^(x+p-j-k') {k j x; j' k' p}
///         {k j x; k1 j1 p1; k2 j2 p2} {k' j' x; k1' j1' p1; k2' j2' p2}
Surd wigner15j_third(const std::array<HalfInt, 15>& a);

/// 15-j symbol of the fourth kind, arguments in the order
///
///   {    j1    k1  s1  k1'    j1'    }
///   { p     l      s      l'      p' }
///   {    j2    k2  s2  k2'    j2'    }
///
///   = (-1)^(k1+k2-s1-s2+p+p'+2l') sum_x (2x+1) {j1 j2' x; l s2 j2; s1 l' j1'}
///         {j1 j2' x; k2' k1 p} {j2 j1' x; k1' k2 p'} {k1 k2' x; k2 k1' s}
Surd wigner15j_fourth(const std::array<HalfInt, 15>& a);

/// 15-j symbol of the fifth kind, given by columns:
///
///   { k1 k1' j1 l1 l1' }
///   { k2 k2' j2 l2 l2' }
///   { k3 k3' j3 l3 l3' }
///
///   = sum_{x1,x2} (2x1+1)(2x2+1) (-1)^(j1+j2+k1+k1'-k2+k2'-l2'+l3+x2)
///         {l2 l3' x1; k2' k3' k1} {l2' l3 x2; k2 k3 k1'}
///         {l2 l3' x1; l2' l3 x2; j2 j3 j1} {k2' k3' x1; k3 k2 x2; l1 l1' j1}
Surd wigner15j_fifth(const std::array<HalfInt, 3>& k, const std::array<HalfInt, 3>& kp,
                     const std::array<HalfInt, 3>& j, const std::array<HalfInt, 3>& l,
                     const std::array<HalfInt, 3>& lp);

enum class SymbolKind {
  ThreeJM,
  SixJ,
  NineJ,
  TwelveJ1,
  TwelveJ2,
  FifteenJ1,
  FifteenJ2,
  FifteenJ3,
  FifteenJ4,
  FifteenJ5,
  EighteenJ1,
  EighteenJ2,
};

inline constexpr std::array<SymbolKind, 12> kAllKinds{
    SymbolKind::ThreeJM,    SymbolKind::SixJ,       SymbolKind::NineJ,
    SymbolKind::TwelveJ1,   SymbolKind::TwelveJ2,   SymbolKind::FifteenJ1,
    SymbolKind::FifteenJ2,  SymbolKind::FifteenJ3,  SymbolKind::FifteenJ4,
    SymbolKind::FifteenJ5,  SymbolKind::EighteenJ1, SymbolKind::EighteenJ2};

std::size_t arity(SymbolKind kind);
/// Command-line name: "3jm", "6j", "9j", "12j1", ..., "18j2".
std::string_view kind_name(SymbolKind kind);
std::optional<SymbolKind> kind_from_name(std::string_view name);

/// One symbol evaluation: a kind plus its arguments in layout order.
/// For 3jm the order is j1 j2 j m1 m2 m.
class SymbolSpec {
 public:
  /// Throws DomainError on wrong arity or a negative momentum (3jm
  /// projections may be negative).
  SymbolSpec(SymbolKind kind, std::vector<HalfInt> args);

  SymbolKind kind() const { return kind_; }
  const std::vector<HalfInt>& args() const { return args_; }

 private:
  SymbolKind kind_;
  std::vector<HalfInt> args_;
};

/// Dispatches to the symbol named by spec.kind().
Surd evaluate(const SymbolSpec& spec);

}  // namespace wigner
