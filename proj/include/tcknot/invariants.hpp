#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tcknot/diagram.hpp"
#include "tcknot/laurent.hpp"

namespace tcknot {

// ---- Jones -------------------------------------------------------------

/// Reference state sum over the 5^n matching assignments with a union-find
/// of loop fragments per partial state.
HalfLaurent jones_triple(const TripleDiagram& d);

/// Precomputes the loop count of every matching assignment of a projection
/// so that height assignments can be evaluated as exponent histograms.
class JonesKernel {
 public:
  explicit JonesKernel(const TripleProjection& p);

  int crossing_count() const { return n_; }
  HalfLaurent evaluate(const std::vector<HeightWord>& heights) const;
  /// Height assignment `index` in base 6, crossing 0 most significant.
  HalfLaurent evaluate(std::uint64_t index) const;
  /// All 6^n assignments in index order; OpenMP-parallel when threads != 1
  /// (0 = runtime default).
  std::vector<HalfLaurent> evaluate_all(int threads = 0) const;

 private:
  void accumulate(const std::array<int, 8>& height_index, std::vector<std::int64_t>& hist) const;
  HalfLaurent collect(const std::vector<std::int64_t>& hist) const;

  int n_ = 0;
  std::vector<std::uint8_t> loops_;  // per matching assignment, crossing 0 most significant
  std::vector<HalfLaurent> delta_pow_;
};

/// Heights for assignment `index` of JonesKernel.
std::vector<HeightWord> heights_from_index(std::uint64_t index, int n);

// ---- double-crossing invariants -----------------------------------------

/// Crossing sign under `o`: +1 when the over strand runs p0 -> p2 and the
/// under strand p1 -> p3 with ends p0..p3 counterclockwise.
int crossing_sign(const DoubleDiagram& dd, const Orientation& o, int crossing);
int writhe(const DoubleDiagram& dd, const Orientation& o);

/// Kauffman bracket with writhe normalization, A = t^(-1/4).
HalfLaurent bracket_jones(const DoubleDiagram& dd, const Orientation& o);

/// Orientation of convert_to_double(d) induced by an orientation of d.
Orientation double_orientation(const TripleDiagram& d, const Orientation& o);

/// Alexander polynomial from the arc presentation (Fox matrix, one row and
/// column deleted), normalized to symmetric exponents with value 1 at t=1.
Laurent alexander(const DoubleDiagram& dd, const Orientation& o);

/// Alexander values hashed as Delta(t0)^2 mod a prime at a few points; equal
/// for equal polynomials, and insensitive to the unit ambiguity of the
/// determinant. Computed by modular elimination, far cheaper than alexander().
struct AlexanderSignature {
  std::array<std::uint64_t, 4> value{};
  auto operator<=>(const AlexanderSignature&) const = default;
};
AlexanderSignature alexander_signature(const DoubleDiagram& dd, const Orientation& o);
AlexanderSignature alexander_signature(const Laurent& delta);

// ---- HOMFLY ----------------------------------------------------------------

struct HomflyBudget {
  int max_crossings = 16;
  std::int64_t max_nodes = 2'000'000;
};

/// HOMFLY-PT with v^-1 P+ - v P- = z P0 and P(unknot) = 1, via switching
/// and smoothing toward a descending diagram, memoized on canonical codes.
/// Throws BudgetExceeded beyond the budget.
Laurent2 homfly(const DoubleDiagram& dd, const Orientation& o, const HomflyBudget& budget = {});

/// Kauffman polynomial F(a, z) = a^-w L of a knot diagram, where L(O) = 1,
/// L(D+) + L(D-) = z (L(D0) + L(Dinf)) and a positive curl multiplies L by
/// a. Stored in a Laurent2 with a in the first slot; the mirror is a -> 1/a.
/// Same budget rules as homfly().
Laurent2 kauffman(const DoubleDiagram& dd, const HomflyBudget& budget = {});

/// Kauffman values modulo a prime at a fixed point (a, z), stored as the
/// sorted pair {F(a, z), F(1/a, z)} so that mirror images agree. Same
/// recursion as kauffman() without polynomial arithmetic.
struct KauffmanSignature {
  std::array<std::uint64_t, 2> value{};
  auto operator<=>(const KauffmanSignature&) const = default;
};
KauffmanSignature kauffman_signature(const DoubleDiagram& dd, const HomflyBudget& budget = {});

}  // namespace tcknot
