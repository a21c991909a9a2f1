#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dopgb/order.hpp"
#include "dopgb/poly.hpp"

/// Commutative Groebner machinery over Q[Z]: division with cofactors,
/// Buchberger completion with transformation matrices, ideal membership,
/// Schreyer syzygies, submodule membership and Y-graded decomposition.
namespace dopgb::cgb {

/// Element of a free module Q[Z]^k.
using PolyVec = std::vector<Poly>;

struct Reduction {
  std::vector<Poly> quotients;
  Poly remainder;
};

/// Full multivariate division: g = sum q_i F_i + r, no term of r divisible by
/// any lm(F_i), lm(q_i F_i) <= lm(g). The first divisor (in input order) whose
/// leading monomial divides the current leading term is used.
Reduction reduce_poly(const Poly& g, std::span<const Poly> F, const MonomialOrder& ord);

struct GBasis {
  std::vector<Poly> generators;
  MonomialOrder order;
  /// generators[i] = sum_j transform[i][j] * F[j]
  std::vector<PolyVec> transform;
  /// F[j] = sum_i back_transform[j][i] * generators[i]
  std::vector<PolyVec> back_transform;
};

struct BuchbergerOptions {
  bool chain_criterion = false;
};

/// Buchberger completion (normal selection strategy, coprime criterion).
/// Generators are scaled to integer content 1 with positive leading
/// coefficient; the transform matrices are re-verified before returning.
GBasis buchberger(std::span<const Poly> F, const MonomialOrder& ord,
                  const BuchbergerOptions& options = {});

/// Minimal, inter-reduced, content-normalized basis (no transforms). Unique for
/// a given ideal and order.
std::vector<Poly> reduced_basis(std::span<const Poly> F, const MonomialOrder& ord);

/// Family (d_f) with sum d_f f = g, or nullopt when g is not in <F>.
std::optional<std::vector<Poly>> membership_with_cofactors(const Poly& g, std::span<const Poly> F,
                                                           const MonomialOrder& ord);
/// Same query against a precomputed basis; cofactors refer to the basis' input.
std::optional<std::vector<Poly>> membership_with_cofactors(const Poly& g, const GBasis& gb);

/// Generators of {(s_f) : sum s_f f = 0}. Computed from the Schreyer relations
/// of a Buchberger run, then returned as the reduced Groebner basis of the
/// syzygy module under position-over-term order (later positions dominate),
/// which makes the output canonical.
std::vector<PolyVec> syzygy_generators(std::span<const Poly> F, const MonomialOrder& ord);

/// Groebner basis of a submodule of Q[Z]^k with cofactor tracking, under
/// position-over-term order (later positions dominate, `ord` inside a position).
class SubmoduleBasis {
 public:
  SubmoduleBasis(std::span<const PolyVec> generators, std::size_t rank, const MonomialOrder& ord);

  /// Cofactors c with sum c_i generators[i] = v, or nullopt.
  std::optional<std::vector<Poly>> member(const PolyVec& v) const;

  std::size_t rank() const noexcept { return rank_; }

 private:
  struct Element {
    PolyVec vec;
    std::size_t pos;
    Exp lead;
    Rational lc;
    PolyVec cert;
  };
  std::vector<PolyVec> inputs_;
  std::vector<Element> basis_;
  std::size_t rank_;
  std::size_t nvars_;
  MonomialOrder ord_;
};

/// True iff v lies in the submodule generated by S; cofactors re-expand exactly to v.
std::optional<std::vector<Poly>> module_membership(const PolyVec& v, std::span<const PolyVec> S,
                                                   const MonomialOrder& ord);

/// Reduced Groebner basis of the submodule generated by S (position-over-term).
std::vector<PolyVec> reduced_module_basis(std::span<const PolyVec> S, std::size_t rank,
                                          const MonomialOrder& ord);

/// Q[X,Y] with X at indices [0, nx) and Y at [nx, nx + ny).
struct VarSplit {
  std::size_t nx;
  std::size_t ny;
  std::size_t nvars() const { return nx + ny; }
  Exp y_part(const Exp& e) const { return e.slice(nx, ny); }
};

struct HomogeneousPart {
  PolyVec vec;
  /// Common Y-degree alpha: every nonzero component g is R * Y^(alpha - alpha_g).
  Exp degree;
};

/// Splits a syzygy of H = {c_g Y^alpha_g} into its Y-homogeneous parts, in
/// ascending storage order of the degree. Throws InvalidInput if s does not
/// annihilate H or some H_g is not of the form c_g Y^alpha_g.
std::vector<HomogeneousPart> homogeneous_parts(const PolyVec& s, std::span<const Poly> H,
                                               VarSplit split);

/// Y-exponent alpha_g of c_g Y^alpha_g.
Exp y_weight(const Poly& h, VarSplit split);

/// sum v_i F_i
Poly dot(const PolyVec& v, std::span<const Poly> F);
/// sum c_i S_i
PolyVec combine(std::span<const Poly> c, std::span<const PolyVec> S);
bool is_zero(const PolyVec& v);

/// Scale making the coefficients of v coprime integers and the leading
/// coefficient of its first nonzero component positive.
Rational vector_normalizing_scale(const PolyVec& v, const MonomialOrder& ord);
PolyVec normalized(PolyVec v, const MonomialOrder& ord);

}  // namespace dopgb::cgb
