#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dopgb/commutative.hpp"
#include "dopgb/diffop.hpp"
#include "dopgb/order.hpp"

namespace dopgb {

enum class Method { New, InsaPauer };

/// How the commutative syzygy generators C_G are produced.
enum class SyzStrategy {
  /// Syzygies of H_G in Q[X,Y], split into Y-homogeneous parts, redundant
  /// parts dropped.
  General,
  /// Pairwise formula; valid only when every lc(g) is a nonzero constant.
  FieldCase,
  /// Lift Syz_R(lc(E)) for every subset E of G by Y^(m(E) - deg(e)).
  IpDerived,
};

std::string to_string(Method m);
Method parse_method(const std::string& name);  // "new" | "ip"
std::string to_string(SyzStrategy s);
SyzStrategy parse_strategy(const std::string& name);  // "general" | "field" | "ip"

/// Syzygy (s_g) over B = R[Y], homogeneous of `degree`: component g is
/// c_g Y^(degree - deg(g)) whenever nonzero.
struct SyzVec {
  std::vector<BPoly> components;
  Exp degree;
};

/// A set of commutative syzygy generators of init(G).
struct CSyzSet {
  std::vector<DiffOp> basis;
  std::vector<SyzVec> generators;
};

/// H_G = {lc(g) Y^deg(g)} as polynomials in Q[x1..xn, y1..yn].
std::vector<Poly> initial_monomials(std::span<const DiffOp> G, const MonomialOrder& ord);

CSyzSet cg_generators(std::span<const DiffOp> G, const MonomialOrder& ord,
                      SyzStrategy strategy = SyzStrategy::General);

cgb::PolyVec to_xy(const SyzVec& s);
SyzVec syzvec_from_xy(const cgb::PolyVec& v, std::size_t n, Exp degree);

/// Both generator lists span the same submodule of B^|G|.
bool same_syzygy_module(std::span<const SyzVec> a, std::span<const SyzVec> b,
                        const MonomialOrder& ord);

/// CSPoly((s_g)) = sum sigma(s_g) g.
DiffOp cspoly(const SyzVec& s, std::span<const DiffOp> G);

/// SPoly(E, (s_e)) = sum s_e D^(m(E) - deg(e)) e; (s_e) must annihilate lc(E).
DiffOp spoly_ip(std::span<const DiffOp> E, std::span<const Poly> s, const MonomialOrder& ord);

/// Canonical generators of Syz_R(lc(E)).
std::vector<cgb::PolyVec> lc_syzygies(std::span<const DiffOp> E, const MonomialOrder& ord);

/// Flattened (basis index, D-exponent, X-exponent, coefficient) terms of a
/// scale-normalized combination.
using CombinationKey = std::vector<std::tuple<std::size_t, Exp, Exp, Rational>>;

/// A left combination sum multipliers[k].second * G[multipliers[k].first].
struct Combination {
  std::vector<std::pair<std::size_t, DiffOp>> multipliers;
  /// Set for combinations built from C_G.
  std::optional<SyzVec> syzygy;
  /// Set for Insa-Pauer s-polynomials: the subset E and (s_e).
  std::vector<std::size_t> subset;
  std::vector<Poly> coefficients;

  DiffOp value(std::span<const DiffOp> G) const;
  /// Identical for combinations that differ only by a nonzero rational factor.
  CombinationKey key(const MonomialOrder& ord) const;
};

Combination cspoly_combination(const SyzVec& s);
Combination spoly_combination(std::span<const DiffOp> G, std::vector<std::size_t> subset,
                              const cgb::PolyVec& s, const MonomialOrder& ord);

struct CriterionResult {
  bool groebner = true;
  /// Distinct s-polynomials examined.
  std::size_t checked = 0;
  std::optional<Combination> witness;
  std::optional<DiffOp> witness_remainder;
};

/// Reduce CSPoly(s) for every s in C_G.
CriterionResult is_groebner_new(std::span<const DiffOp> G, const MonomialOrder& ord);
/// Reduce SPoly(E, s) for every subset E and every generator s of Syz_R(lc(E)).
CriterionResult is_groebner_ip(std::span<const DiffOp> G, const MonomialOrder& ord);
CriterionResult is_groebner(std::span<const DiffOp> G, const MonomialOrder& ord, Method m);

struct CompletionOptions {
  std::size_t max_rounds = 64;
  std::size_t max_basis = 200;
  /// Insa-Pauer enumerates 2^|G| subsets; refuse beyond this size.
  std::size_t max_ip_basis = 20;
  bool interreduce = false;
};

struct GBReport {
  Method method = Method::New;
  std::vector<DiffOp> basis;
  /// basis[i] = sum_j certificates[i][j] * input[j]
  std::vector<std::vector<DiffOp>> certificates;
  std::size_t spoly_count = 0;
  std::size_t zero_reductions = 0;
  std::vector<DiffOp> additions;
  /// Every reduced s-polynomial value, in processing order.
  std::vector<DiffOp> spoly_values;
  std::size_t rounds = 0;
  double elapsed_ms = 0;
};

GBReport groebner_new(std::span<const DiffOp> F, const MonomialOrder& ord,
                      const CompletionOptions& options = {});
GBReport groebner_ip(std::span<const DiffOp> F, const MonomialOrder& ord,
                     const CompletionOptions& options = {});
GBReport groebner(std::span<const DiffOp> F, const MonomialOrder& ord, Method m,
                  const CompletionOptions& options = {});

/// True iff every element of `ops` has remainder zero modulo G.
bool reduces_to_zero(std::span<const DiffOp> ops, std::span<const DiffOp> G,
                     const MonomialOrder& ord);

struct MethodComparison {
  GBReport new_method;
  GBReport ip_method;
  /// Each basis reduces the other to zero.
  bool same_ideal = false;
};

MethodComparison compare_methods(std::span<const DiffOp> F, const MonomialOrder& ord,
                                 const CompletionOptions& options = {});

}  // namespace dopgb
