#include "dopgb/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "dopgb/division.hpp"
#include "dopgb/errors.hpp"

namespace dopgb {

std::string to_string(Method m) { return m == Method::New ? "new" : "ip"; }

Method parse_method(const std::string& name) {
  if (name == "new") return Method::New;
  if (name == "ip") return Method::InsaPauer;
  throw InvalidInput("unknown method '" + name + "' (expected new or ip)");
}

std::string to_string(SyzStrategy s) {
  switch (s) {
    case SyzStrategy::General: return "general";
    case SyzStrategy::FieldCase: return "field";
    case SyzStrategy::IpDerived: return "ip";
  }
  return "?";
}

SyzStrategy parse_strategy(const std::string& name) {
  if (name == "general") return SyzStrategy::General;
  if (name == "field") return SyzStrategy::FieldCase;
  if (name == "ip") return SyzStrategy::IpDerived;
  throw InvalidInput("unknown strategy '" + name + "' (expected general, field or ip)");
}

namespace {

void require_nonzero(std::span<const DiffOp> G, const MonomialOrder& ord) {
  for (const auto& g : G) {
    if (g.nvars() != ord.nvars()) throw DimensionError("operator arity differs from the order");
    if (g.is_zero()) throw InvalidInput("zero operator in generating set");
  }
}

cgb::VarSplit split_for(std::size_t n) { return cgb::VarSplit{n, n}; }

Poly y_monomial(std::size_t n, const Exp& y, const Poly& coeff) {
  return coeff.embed(2 * n, 0).mul_term(Exp::concat(Exp(n), y), 1);
}

/// Visits the nonempty subsets of {0..k-1} by size, then lexicographically,
/// skipping those whose largest index is below `first_new`.
template <class Fn>
void for_each_subset(std::size_t k, std::size_t first_new, Fn&& fn) {
  for (std::size_t size = 1; size <= k; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      // subsets in between all end below first_new
      if (idx[size - 1] < first_new) idx[size - 1] = first_new;
      if (idx[size - 1] >= k) {
        idx[size - 1] = k - 1;
      } else {
        fn(static_cast<const std::vector<std::size_t>&>(idx));
      }
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == k - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

struct Candidate {
  cgb::PolyVec vec;
  Exp degree;
};

/// Normalizes, drops zero vectors and exact duplicates, sorts by ascending
/// degree (total degree first, then the D-order).
std::vector<Candidate> tidy(std::vector<Candidate> in, const MonomialOrder& ord,
                            const MonomialOrder& xyord) {
  std::vector<Candidate> out;
  std::set<std::vector<Poly::TermMap>> seen;
  for (auto& c : in) {
    if (cgb::is_zero(c.vec)) continue;
    c.vec = cgb::normalized(std::move(c.vec), xyord);
    std::vector<Poly::TermMap> key;
    for (const auto& p : c.vec) key.push_back(p.terms());
    if (!seen.insert(key).second) continue;
    out.push_back(std::move(c));
  }
  auto weight = [](const Candidate& c) {
    std::int64_t d = 0;
    std::size_t terms = 0;
    for (const auto& p : c.vec) {
      d = std::max(d, p.total_degree());
      terms += p.size();
    }
    return std::pair(d, terms);
  };
  std::stable_sort(out.begin(), out.end(), [&](const Candidate& a, const Candidate& b) {
    if (a.degree.total() != b.degree.total()) return a.degree.total() < b.degree.total();
    auto c = ord.compare(a.degree, b.degree);
    if (c != Cmp::Equal) return c == Cmp::Less;
    return weight(a) < weight(b);
  });
  return out;
}

CSyzSet finish(std::span<const DiffOp> G, std::vector<Candidate> cands, std::size_t n) {
  CSyzSet out;
  out.basis.assign(G.begin(), G.end());
  for (auto& c : cands) out.generators.push_back(syzvec_from_xy(c.vec, n, std::move(c.degree)));
  return out;
}

std::vector<Candidate> general_candidates(std::span<const DiffOp> G, const MonomialOrder& ord,
                                          const MonomialOrder& xyord) {
  const std::size_t n = ord.nvars();
  auto H = initial_monomials(G, ord);
  std::vector<Candidate> parts;
  // Pair syzygies go first so that ties in the sort below favour them.
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      const Poly pair[] = {H[i], H[j]};
      for (const auto& v : cgb::syzygy_generators(pair, xyord)) {
        cgb::PolyVec full(G.size(), Poly(2 * n));
        full[i] = v[0];
        full[j] = v[1];
        for (auto& p : cgb::homogeneous_parts(full, H, split_for(n))) {
          parts.push_back(Candidate{std::move(p.vec), std::move(p.degree)});
        }
      }
    }
  }
  for (const auto& v : cgb::syzygy_generators(H, xyord)) {
    for (auto& p : cgb::homogeneous_parts(v, H, split_for(n))) {
      parts.push_back(Candidate{std::move(p.vec), std::move(p.degree)});
    }
  }
  auto sorted = tidy(std::move(parts), ord, xyord);
  // Keep a part only if the parts kept so far do not already generate it.
  std::vector<Candidate> kept;
  std::vector<cgb::PolyVec> kept_vecs;
  std::optional<cgb::SubmoduleBasis> span;
  for (auto& c : sorted) {
    if (span && span->member(c.vec)) continue;
    kept_vecs.push_back(c.vec);
    kept.push_back(std::move(c));
    span.emplace(kept_vecs, G.size(), xyord);
  }
  return kept;
}

std::vector<Candidate> field_candidates(std::span<const DiffOp> G, const MonomialOrder& ord) {
  const std::size_t n = ord.nvars();
  std::vector<Exp> degs;
  std::vector<Poly> lcs;
  for (const auto& g : G) {
    degs.push_back(g.deg(ord));
    lcs.push_back(g.lc(ord));
    if (!lcs.back().is_constant()) {
      throw StrategyInapplicable("field-case syzygies need constant leading coefficients");
    }
  }
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      auto m = lcm(degs[i], degs[j]);
      cgb::PolyVec v(G.size(), Poly(2 * n));
      v[i] = y_monomial(n, *m.minus(degs[i]), lcs[j]);
      v[j] = -y_monomial(n, *m.minus(degs[j]), lcs[i]);
      out.push_back(Candidate{std::move(v), std::move(m)});
    }
  }
  return out;
}

std::vector<Candidate> ip_candidates(std::span<const DiffOp> G, const MonomialOrder& ord) {
  const std::size_t n = ord.nvars();
  std::vector<Exp> degs;
  for (const auto& g : G) degs.push_back(g.deg(ord));
  std::vector<Candidate> out;
  for_each_subset(G.size(), 0, [&](const std::vector<std::size_t>& subset) {
    if (subset.size() < 2) return;
    std::vector<DiffOp> E;
    std::vector<Exp> edegs;
    for (auto i : subset) {
      E.push_back(G[i]);
      edegs.push_back(degs[i]);
    }
    auto m = componentwise_max(edegs);
    for (const auto& s : lc_syzygies(E, ord)) {
      cgb::PolyVec v(G.size(), Poly(2 * n));
      for (std::size_t k = 0; k < subset.size(); ++k) {
        v[subset[k]] = y_monomial(n, *m.minus(edegs[k]), s[k]);
      }
      out.push_back(Candidate{std::move(v), m});
    }
  });
  return out;
}

}  // namespace

std::vector<Poly> initial_monomials(std::span<const DiffOp> G, const MonomialOrder& ord) {
  std::vector<Poly> H;
  for (const auto& g : G) H.push_back(y_monomial(ord.nvars(), g.deg(ord), g.lc(ord)));
  return H;
}

CSyzSet cg_generators(std::span<const DiffOp> G, const MonomialOrder& ord,
                      SyzStrategy strategy) {
  require_nonzero(G, ord);
  const auto xyord = xy_block_order(ord);
  std::vector<Candidate> cands;
  switch (strategy) {
    case SyzStrategy::General: cands = general_candidates(G, ord, xyord); break;
    case SyzStrategy::FieldCase: cands = tidy(field_candidates(G, ord), ord, xyord); break;
    case SyzStrategy::IpDerived: cands = tidy(ip_candidates(G, ord), ord, xyord); break;
  }
  auto H = initial_monomials(G, ord);
  for (const auto& c : cands) {
    if (!cgb::dot(c.vec, H).is_zero()) {
      throw InvariantViolation("commutative syzygy generator does not annihilate H_G");
    }
  }
  return finish(G, std::move(cands), ord.nvars());
}

cgb::PolyVec to_xy(const SyzVec& s) {
  cgb::PolyVec out;
  for (const auto& c : s.components) out.push_back(c.to_xy());
  return out;
}

SyzVec syzvec_from_xy(const cgb::PolyVec& v, std::size_t n, Exp degree) {
  SyzVec out;
  for (const auto& p : v) out.components.push_back(BPoly::from_xy(p, n));
  out.degree = std::move(degree);
  return out;
}

bool same_syzygy_module(std::span<const SyzVec> a, std::span<const SyzVec> b,
                        const MonomialOrder& ord) {
  const auto xyord = xy_block_order(ord);
  auto vecs = [](std::span<const SyzVec> s) {
    std::vector<cgb::PolyVec> out;
    for (const auto& v : s) out.push_back(to_xy(v));
    return out;
  };
  auto va = vecs(a);
  auto vb = vecs(b);
  std::size_t rank = !va.empty() ? va.front().size() : (!vb.empty() ? vb.front().size() : 0);
  cgb::SubmoduleBasis sa(va, rank, xyord);
  cgb::SubmoduleBasis sb(vb, rank, xyord);
  return std::all_of(va.begin(), va.end(), [&](const auto& v) { return sb.member(v).has_value(); }) &&
         std::all_of(vb.begin(), vb.end(), [&](const auto& v) { return sa.member(v).has_value(); });
}

DiffOp cspoly(const SyzVec& s, std::span<const DiffOp> G) {
  if (s.components.size() != G.size()) {
    throw DimensionError("syzygy has " + std::to_string(s.components.size()) +
                         " components for " + std::to_string(G.size()) + " operators");
  }
  if (G.empty()) return DiffOp(0);
  DiffOp out(G.front().nvars());
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (!s.components[i].is_zero()) out += sigma(s.components[i]) * G[i];
  }
  return out;
}

std::vector<cgb::PolyVec> lc_syzygies(std::span<const DiffOp> E, const MonomialOrder& ord) {
  std::vector<Poly> lcs;
  for (const auto& e : E) lcs.push_back(e.lc(ord));
  return cgb::syzygy_generators(lcs, coefficient_order(ord.nvars()));
}

DiffOp spoly_ip(std::span<const DiffOp> E, std::span<const Poly> s, const MonomialOrder& ord) {
  if (E.size() != s.size()) throw DimensionError("coefficient count differs from |E|");
  require_nonzero(E, ord);
  const std::size_t n = ord.nvars();
  std::vector<Exp> degs;
  Poly check(n);
  for (std::size_t i = 0; i < E.size(); ++i) {
    degs.push_back(E[i].deg(ord));
    check += s[i] * E[i].lc(ord);
  }
  if (!check.is_zero()) throw InvalidInput("coefficients are not a syzygy of lc(E)");
  DiffOp out(n);
  if (E.empty()) return out;
  auto m = componentwise_max(degs);
  for (std::size_t i = 0; i < E.size(); ++i) {
    if (s[i].is_zero()) continue;
    out += DiffOp::monomial(s[i], *m.minus(degs[i])) * E[i];
  }
  return out;
}

DiffOp Combination::value(std::span<const DiffOp> G) const {
  DiffOp out(G.empty() ? 0 : G.front().nvars());
  for (const auto& [i, mult] : multipliers) out += mult * G[i];
  return out;
}

CombinationKey Combination::key(const MonomialOrder& ord) const {
  ContentAccumulator acc;
  for (const auto& [i, mult] : multipliers) {
    for (const auto& [e, r] : mult.terms()) acc.add(r);
  }
  auto s = acc.inverse_content();
  if (!multipliers.empty()) {
    const auto& first = multipliers.front().second;
    if (first.lc(ord).lc(coefficient_order(ord.nvars())) < 0) s = -s;
  }
  CombinationKey out;
  for (const auto& [i, mult] : multipliers) {
    for (const auto& [d, r] : mult.terms()) {
      for (const auto& [x, c] : r.terms()) out.emplace_back(i, d, x, c * s);
    }
  }
  return out;
}

Combination cspoly_combination(const SyzVec& s) {
  Combination c;
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    if (!s.components[i].is_zero()) c.multipliers.emplace_back(i, sigma(s.components[i]));
  }
  c.syzygy = s;
  return c;
}

Combination spoly_combination(std::span<const DiffOp> G, std::vector<std::size_t> subset,
                              const cgb::PolyVec& s, const MonomialOrder& ord) {
  std::vector<Exp> degs;
  for (auto i : subset) degs.push_back(G[i].deg(ord));
  auto m = componentwise_max(degs);
  Combination c;
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (s[k].is_zero()) continue;
    c.multipliers.emplace_back(subset[k], DiffOp::monomial(s[k], *m.minus(degs[k])));
  }
  c.subset = std::move(subset);
  c.coefficients = s;
  return c;
}

namespace {

/// All s-polynomial combinations of the chosen method for the basis G.
/// G may only grow between calls. Insa-Pauer subsets made only of elements
/// seen in an earlier call are skipped, since they yield the same
/// combinations again; their syzygies are cached per tuple of leading
/// coefficients.
class CombinationSource {
 public:
  CombinationSource(Method method, const MonomialOrder& ord) : method_(method), ord_(ord) {}

  std::vector<Combination> generate(std::span<const DiffOp> G) {
    std::vector<Combination> out;
    if (method_ == Method::New) {
      for (const auto& s : cg_generators(G, ord_).generators) out.push_back(cspoly_combination(s));
      return out;
    }
    if (G.size() < ids_.size()) throw InvariantViolation("basis shrank during completion");
    const std::size_t first_new = ids_.size();
    for (std::size_t i = first_new; i < G.size(); ++i) {
      auto [it, inserted] = lc_ids_.try_emplace(G[i].lc(ord_).terms(), lc_ids_.size());
      ids_.push_back(it->second);
    }
    for_each_subset(G.size(), first_new, [&](const std::vector<std::size_t>& subset) {
      std::vector<std::size_t> key;
      for (auto i : subset) key.push_back(ids_[i]);
      auto it = cache_.find(key);
      if (it == cache_.end()) {
        std::vector<DiffOp> E;
        for (auto i : subset) E.push_back(G[i]);
        it = cache_.emplace(std::move(key), lc_syzygies(E, ord_)).first;
      }
      for (const auto& s : it->second) out.push_back(spoly_combination(G, subset, s, ord_));
    });
    return out;
  }

 private:
  Method method_;
  MonomialOrder ord_;
  std::map<Poly::TermMap, std::size_t> lc_ids_;
  std::vector<std::size_t> ids_;
  std::map<std::vector<std::size_t>, std::vector<cgb::PolyVec>> cache_;
};

void check_ip_size(std::size_t size, const CompletionOptions& options) {
  if (size > options.max_ip_basis) {
    throw ComputationCapExceeded("Insa-Pauer subset enumeration capped at |G| <= " +
                                 std::to_string(options.max_ip_basis) + " (basis has " +
                                 std::to_string(size) + " elements)");
  }
}

CriterionResult check_criterion(std::span<const DiffOp> G, const MonomialOrder& ord,
                                Method method) {
  require_nonzero(G, ord);
  if (method == Method::InsaPauer) check_ip_size(G.size(), CompletionOptions{});
  CombinationSource source(method, ord);
  Divider divider(std::vector<DiffOp>(G.begin(), G.end()), ord);
  CriterionResult out;
  std::set<CombinationKey> seen;
  for (auto& c : source.generate(G)) {
    if (!seen.insert(c.key(ord)).second) continue;
    ++out.checked;
    auto r = divider.divide(c.value(G)).remainder;
    if (!r.is_zero() && out.groebner) {
      out.groebner = false;
      out.witness = std::move(c);
      out.witness_remainder = std::move(r);
    }
  }
  return out;
}

using Certificate = std::vector<DiffOp>;

class Completion {
 public:
  Completion(std::span<const DiffOp> F, const MonomialOrder& ord, Method method,
             const CompletionOptions& options)
      : F_(F.begin(), F.end()), ord_(ord), method_(method), options_(options), source_(method, ord),
        divider_({}, ord) {
    require_nonzero(F, ord);
    report_.method = method;
    const std::size_t n = ord.nvars();
    for (std::size_t i = 0; i < F_.size(); ++i) {
      Certificate cert(F_.size(), DiffOp(n));
      cert[i] = DiffOp::one(n);
      report_.basis.push_back(F_[i]);
      divider_.append(F_[i]);
      report_.certificates.push_back(std::move(cert));
    }
  }

  GBReport run() {
    auto start = std::chrono::steady_clock::now();
    std::set<CombinationKey> processed;
    while (true) {
      if (method_ == Method::InsaPauer) check_ip_size(report_.basis.size(), options_);
      if (report_.rounds >= options_.max_rounds) {
        throw ComputationCapExceeded("completion did not finish within " +
                                     std::to_string(options_.max_rounds) + " rounds");
      }
      ++report_.rounds;
      const auto& G = report_.basis;
      std::vector<std::pair<DiffOp, Certificate>> remainders;
      for (auto& c : source_.generate(G)) {
        if (!processed.insert(c.key(ord_)).second) continue;
        auto value = c.value(G);
        ++report_.spoly_count;
        report_.spoly_values.push_back(value);
        auto div = divider_.divide(value);
        if (div.remainder.is_zero()) {
          ++report_.zero_reductions;
          continue;
        }
        auto cert = combine_certificates(c.multipliers);
        subtract_quotients(cert, div.quotients);
        remainders.emplace_back(std::move(div.remainder), std::move(cert));
      }
      if (remainders.empty()) break;
      for (auto& [r, cert] : remainders) adjoin(std::move(r), std::move(cert));
    }
    if (options_.interreduce) interreduce();
    report_.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return std::move(report_);
  }

 private:
  Certificate zero_certificate() const {
    return Certificate(F_.size(), DiffOp(ord_.nvars()));
  }

  Certificate combine_certificates(
      const std::vector<std::pair<std::size_t, DiffOp>>& multipliers) const {
    auto out = zero_certificate();
    for (const auto& [i, mult] : multipliers) {
      for (std::size_t j = 0; j < F_.size(); ++j) {
        const auto& c = report_.certificates[i][j];
        if (!c.is_zero()) out[j] += mult * c;
      }
    }
    return out;
  }

  void subtract_quotients(Certificate& cert, const std::vector<DiffOp>& quotients) const {
    for (std::size_t i = 0; i < quotients.size(); ++i) {
      if (quotients[i].is_zero()) continue;
      for (std::size_t j = 0; j < F_.size(); ++j) {
        const auto& c = report_.certificates[i][j];
        if (!c.is_zero()) cert[j] -= quotients[i] * c;
      }
    }
  }

  /// Serialized extension step: reduce again against the current basis (which
  /// may already contain this round's earlier additions), normalize, append.
  void adjoin(DiffOp r, Certificate cert) {
    auto div = divider_.divide(r);
    if (div.remainder.is_zero()) return;
    subtract_quotients(cert, div.quotients);
    auto s = normalizing_scale(div.remainder, ord_);
    DiffOp element = div.remainder * s;
    for (auto& c : cert) c *= s;

    DiffOp check(ord_.nvars());
    for (std::size_t j = 0; j < F_.size(); ++j) {
      if (!cert[j].is_zero()) check += cert[j] * F_[j];
    }
    if (check != element) {
      throw InvariantViolation("certificate of an adjoined element does not re-expand");
    }
    if (report_.basis.size() >= options_.max_basis) {
      throw ComputationCapExceeded("basis exceeded " + std::to_string(options_.max_basis) +
                                   " elements");
    }
    report_.basis.push_back(element);
    divider_.append(element);
    report_.certificates.push_back(std::move(cert));
    report_.additions.push_back(std::move(element));
  }

  /// Drops elements that are redundant: the rest still reduces them to zero
  /// and still passes the criterion of the method in use.
  void interreduce() {
    for (std::size_t i = report_.basis.size(); i-- > 0;) {
      if (report_.basis.size() == 1) break;
      std::vector<DiffOp> rest;
      for (std::size_t j = 0; j < report_.basis.size(); ++j) {
        if (j != i) rest.push_back(report_.basis[j]);
      }
      if (!Divider(rest, ord_).divide(report_.basis[i]).remainder.is_zero()) continue;
      if (!check_criterion(rest, ord_, method_).groebner) continue;
      report_.basis.erase(report_.basis.begin() + static_cast<std::ptrdiff_t>(i));
      report_.certificates.erase(report_.certificates.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  std::vector<DiffOp> F_;
  MonomialOrder ord_;
  Method method_;
  CompletionOptions options_;
  CombinationSource source_;
  /// Divides by the current basis; grows with it.
  Divider divider_;
  GBReport report_;
};

}  // namespace

CriterionResult is_groebner_new(std::span<const DiffOp> G, const MonomialOrder& ord) {
  return check_criterion(G, ord, Method::New);
}

CriterionResult is_groebner_ip(std::span<const DiffOp> G, const MonomialOrder& ord) {
  return check_criterion(G, ord, Method::InsaPauer);
}

CriterionResult is_groebner(std::span<const DiffOp> G, const MonomialOrder& ord, Method m) {
  return check_criterion(G, ord, m);
}

GBReport groebner_new(std::span<const DiffOp> F, const MonomialOrder& ord,
                      const CompletionOptions& options) {
  return Completion(F, ord, Method::New, options).run();
}

GBReport groebner_ip(std::span<const DiffOp> F, const MonomialOrder& ord,
                     const CompletionOptions& options) {
  return Completion(F, ord, Method::InsaPauer, options).run();
}

GBReport groebner(std::span<const DiffOp> F, const MonomialOrder& ord, Method m,
                  const CompletionOptions& options) {
  return Completion(F, ord, m, options).run();
}

bool reduces_to_zero(std::span<const DiffOp> ops, std::span<const DiffOp> G,
                     const MonomialOrder& ord) {
  Divider divider(std::vector<DiffOp>(G.begin(), G.end()), ord);
  return std::all_of(ops.begin(), ops.end(),
                     [&](const DiffOp& f) { return divider.divide(f).remainder.is_zero(); });
}

MethodComparison compare_methods(std::span<const DiffOp> F, const MonomialOrder& ord,
                                 const CompletionOptions& options) {
  MethodComparison out;
  out.new_method = groebner_new(F, ord, options);
  out.ip_method = groebner_ip(F, ord, options);
  out.same_ideal = reduces_to_zero(out.new_method.basis, out.ip_method.basis, ord) &&
                   reduces_to_zero(out.ip_method.basis, out.new_method.basis, ord);
  return out;
}

}  // namespace dopgb
