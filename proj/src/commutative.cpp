#include "dopgb/commutative.hpp"

#include <algorithm>
#include <map>

#include "dopgb/errors.hpp"

namespace dopgb::cgb {

namespace {

struct Lead {
  std::size_t pos;
  Exp exp;
  Rational coeff;
};

std::size_t arity_of(std::span<const PolyVec> vs, std::size_t fallback) {
  for (const auto& v : vs) {
    for (const auto& p : v) return p.nvars();
  }
  return fallback;
}

/// Position-over-term: the highest nonzero position carries the leading term.
std::optional<Lead> vec_leading(const PolyVec& v, const MonomialOrder& ord) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (!v[i].is_zero()) {
      auto t = v[i].leading(ord);
      return Lead{i, std::move(t.exp), std::move(t.coeff)};
    }
  }
  return std::nullopt;
}

PolyVec zero_vec(std::size_t k, std::size_t nvars) { return PolyVec(k, Poly(nvars)); }

PolyVec unit_vec(std::size_t k, std::size_t nvars, std::size_t i, const Rational& c) {
  auto v = zero_vec(k, nvars);
  v[i] = Poly::constant(nvars, c);
  return v;
}

void add_scaled(PolyVec& acc, const PolyVec& v, const Exp& e, const Rational& c) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i].add_scaled(v[i], e, c);
}

void add_mul(PolyVec& acc, const Poly& q, const PolyVec& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += q * v[i];
}

void scale(PolyVec& v, const Rational& c) {
  for (auto& p : v) p *= c;
}

/// Buchberger over a submodule of Q[Z]^k under position-over-term order.
///
/// Optionally tracks, for every basis element, its expression over the inputs
/// (`cert`), and for rank-1 runs the Schreyer relations among basis elements.
class Engine {
 public:
  struct Element {
    PolyVec vec;
    Lead lead;
    PolyVec cert;
  };
  using Relation = std::map<std::size_t, Poly>;

  Engine(const MonomialOrder& ord, std::size_t rank, std::size_t nvars, bool track,
         bool record_relations, bool chain_criterion)
      : ord_(ord),
        rank_(rank),
        nvars_(nvars),
        track_(track),
        record_(record_relations && rank == 1),
        chain_(chain_criterion),
        reduce_inputs_(rank > 1) {}

  void run(std::span<const PolyVec> inputs) {
    ninputs_ = inputs.size();
    for (std::size_t j = 0; j < inputs.size(); ++j) {
      if (inputs[j].size() != rank_) throw DimensionError("module element has wrong rank");
      if (!vec_leading(inputs[j], ord_)) continue;
      // Inputs already in the span of earlier ones add nothing but pairs.
      PolyVec vec(inputs[j]);
      PolyVec cert;
      if (reduce_inputs_ && !record_) {
        auto red = reduce(vec);
        if (is_zero(red.remainder)) continue;
        vec = std::move(red.remainder);
        if (track_) {
          cert = cert_of(red.quotients);
          for (auto& c : cert) c = -c;
          cert[j] += Poly::constant(nvars_, 1);
        }
      } else if (track_) {
        cert = unit_vec(ninputs_, nvars_, j, 1);
      }
      auto s = vector_scale(vec, *vec_leading(vec, ord_));
      scale(vec, s);
      if (track_) scale(cert, s);
      add_element(std::move(vec), std::move(cert));
    }
    while (!pending_.empty()) process_pair(take_pair());
  }

  struct VecReduction {
    std::vector<Poly> quotients;
    PolyVec remainder;
  };

  VecReduction reduce(PolyVec p) const {
    VecReduction out{std::vector<Poly>(elements_.size(), Poly(nvars_)), zero_vec(rank_, nvars_)};
    while (auto lead = vec_leading(p, ord_)) {
      const Element* divisor = nullptr;
      std::size_t idx = 0;
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        const auto& el = elements_[i];
        if (el.lead.pos == lead->pos && el.lead.exp.divides(lead->exp)) {
          divisor = &el;
          idx = i;
          break;
        }
      }
      if (divisor) {
        auto shift = *lead->exp.minus(divisor->lead.exp);
        Rational c = lead->coeff / divisor->lead.coeff;
        add_scaled(p, divisor->vec, shift, -c);
        out.quotients[idx].add_term(shift, c);
      } else {
        out.remainder[lead->pos].add_term(lead->exp, lead->coeff);
        p[lead->pos].add_term(lead->exp, -lead->coeff);
      }
    }
    return out;
  }

  /// Expression of sum q_i elements_i over the inputs.
  PolyVec cert_of(const std::vector<Poly>& q) const {
    auto out = zero_vec(ninputs_, nvars_);
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (!q[i].is_zero()) add_mul(out, q[i], elements_[i].cert);
    }
    return out;
  }

  const std::vector<Element>& elements() const { return elements_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::size_t ninputs() const { return ninputs_; }

 private:
  struct Pair {
    std::size_t i, j;
    Exp lcm;
  };

  Rational vector_scale(const PolyVec& v, const Lead& lead) const {
    ContentAccumulator acc;
    for (const auto& p : v) acc.add(p);
    auto s = acc.inverse_content();
    if (lead.coeff < 0) s = -s;
    return s;
  }

  void add_element(PolyVec vec, PolyVec cert) {
    auto lead = *vec_leading(vec, ord_);
    std::size_t idx = elements_.size();
    for (std::size_t i = 0; i < idx; ++i) {
      if (elements_[i].lead.pos == lead.pos) {
        pending_.push_back(Pair{i, idx, lcm(elements_[i].lead.exp, lead.exp)});
      }
    }
    elements_.push_back(Element{std::move(vec), std::move(lead), std::move(cert)});
  }

  // Normal strategy: smallest lcm first (total degree, then the order), ties by index.
  Pair take_pair() {
    auto best = pending_.begin();
    for (auto it = std::next(best); it != pending_.end(); ++it) {
      if (pair_less(*it, *best)) best = it;
    }
    Pair p = *best;
    pending_.erase(best);
    return p;
  }

  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.lcm.total() != b.lcm.total()) return a.lcm.total() < b.lcm.total();
    auto c = ord_.compare(a.lcm, b.lcm);
    if (c != Cmp::Equal) return c == Cmp::Less;
    return std::pair(a.j, a.i) < std::pair(b.j, b.i);
  }

  bool is_pending(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    return std::any_of(pending_.begin(), pending_.end(),
                       [&](const Pair& p) { return p.i == a && p.j == b; });
  }

  bool chain_applies(const Pair& p) const {
    for (std::size_t t = 0; t < elements_.size(); ++t) {
      if (t == p.i || t == p.j) continue;
      const auto& el = elements_[t];
      if (el.lead.pos != elements_[p.i].lead.pos || !el.lead.exp.divides(p.lcm)) continue;
      if (!is_pending(p.i, t) && !is_pending(t, p.j)) return true;
    }
    return false;
  }

  void process_pair(const Pair& p) {
    const auto& a = elements_[p.i];
    const auto& b = elements_[p.j];
    if (rank_ == 1 && p.lcm.total() == a.lead.exp.total() + b.lead.exp.total()) {
      // Coprime leading monomials: the S-polynomial reduces to zero and the
      // relation is the Koszul syzygy b*e_i - a*e_j.
      if (record_) relations_.push_back(Relation{{p.i, b.vec[0]}, {p.j, -a.vec[0]}});
      return;
    }
    if (chain_ && chain_applies(p)) return;

    auto shift_a = *p.lcm.minus(a.lead.exp);
    auto shift_b = *p.lcm.minus(b.lead.exp);
    Rational ca = Rational(1) / a.lead.coeff;
    Rational cb = -Rational(1) / b.lead.coeff;
    auto s = zero_vec(rank_, nvars_);
    add_scaled(s, a.vec, shift_a, ca);
    add_scaled(s, b.vec, shift_b, cb);

    auto red = reduce(s);
    Relation rel;
    auto entry = [&](std::size_t idx) -> Poly& {
      return rel.try_emplace(idx, Poly(nvars_)).first->second;
    };
    if (record_) {
      entry(p.i) += Poly::monomial(shift_a, ca);
      entry(p.j) += Poly::monomial(shift_b, cb);
      for (std::size_t t = 0; t < red.quotients.size(); ++t) {
        if (!red.quotients[t].is_zero()) entry(t) -= red.quotients[t];
      }
    }
    auto lead = vec_leading(red.remainder, ord_);
    if (lead) {
      auto sc = vector_scale(red.remainder, *lead);
      PolyVec cert;
      if (track_) {
        cert = zero_vec(ninputs_, nvars_);
        add_scaled(cert, a.cert, shift_a, ca);
        add_scaled(cert, b.cert, shift_b, cb);
        auto used = cert_of(red.quotients);
        for (std::size_t i = 0; i < cert.size(); ++i) cert[i] -= used[i];
        scale(cert, sc);
      }
      PolyVec vec = std::move(red.remainder);
      scale(vec, sc);
      if (record_) entry(elements_.size()) -= Poly::constant(nvars_, Rational(1) / sc);
      add_element(std::move(vec), std::move(cert));
    }
    if (record_) {
      std::erase_if(rel, [](const auto& kv) { return kv.second.is_zero(); });
      if (!rel.empty()) relations_.push_back(std::move(rel));
    }
  }

  MonomialOrder ord_;
  std::size_t rank_;
  std::size_t nvars_;
  bool track_;
  bool record_;
  bool chain_;
  bool reduce_inputs_;
  std::size_t ninputs_ = 0;
  std::vector<Element> elements_;
  std::vector<Pair> pending_;
  std::vector<Relation> relations_;
};

std::vector<PolyVec> as_vectors(std::span<const Poly> F) {
  std::vector<PolyVec> out;
  out.reserve(F.size());
  for (const auto& f : F) out.push_back(PolyVec{f});
  return out;
}

void check_nvars(std::span<const Poly> F, std::size_t nvars) {
  for (const auto& f : F) {
    if (f.nvars() != nvars) throw DimensionError("generator arity mismatch");
  }
}

/// Minimal + inter-reduced + normalized elements of a finished engine run.
std::vector<PolyVec> reduce_elements(const Engine& engine, std::size_t rank, std::size_t nvars,
                                     const MonomialOrder& ord) {
  const auto& els = engine.elements();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < els.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < els.size() && !redundant; ++j) {
      if (i == j || els[j].lead.pos != els[i].lead.pos) continue;
      if (!els[j].lead.exp.divides(els[i].lead.exp)) continue;
      // Equal leads: keep the earlier element.
      redundant = els[j].lead.exp != els[i].lead.exp || j < i;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<PolyVec> out;
  for (auto i : keep) {
    // The minimal elements already form a basis; only tails need reducing.
    PolyVec v = els[i].vec;
    auto lead = *vec_leading(v, ord);
    PolyVec tail(v);
    tail[lead.pos].add_term(lead.exp, -lead.coeff);
    PolyVec reduced_tail = zero_vec(rank, nvars);
    {
      PolyVec p = std::move(tail);
      while (auto l = vec_leading(p, ord)) {
        const PolyVec* divisor = nullptr;
        Lead dl;
        for (auto j : keep) {
          if (j == i) continue;
          const auto& el = els[j];
          if (el.lead.pos == l->pos && el.lead.exp.divides(l->exp)) {
            divisor = &el.vec;
            dl = el.lead;
            break;
          }
        }
        if (divisor) {
          add_scaled(p, *divisor, *l->exp.minus(dl.exp), -(l->coeff / dl.coeff));
        } else {
          reduced_tail[l->pos].add_term(l->exp, l->coeff);
          p[l->pos].add_term(l->exp, -l->coeff);
        }
      }
    }
    reduced_tail[lead.pos].add_term(lead.exp, lead.coeff);
    out.push_back(normalized(std::move(reduced_tail), ord));
  }
  std::sort(out.begin(), out.end(), [&](const PolyVec& a, const PolyVec& b) {
    auto la = *vec_leading(a, ord);
    auto lb = *vec_leading(b, ord);
    if (la.pos != lb.pos) return la.pos < lb.pos;
    return ord.less(la.exp, lb.exp);
  });
  return out;
}

}  // namespace

Reduction reduce_poly(const Poly& g, std::span<const Poly> F, const MonomialOrder& ord) {
  check_nvars(F, g.nvars());
  std::vector<Term> leads;
  for (const auto& f : F) {
    if (f.is_zero()) throw InvalidInput("division by the zero polynomial");
    leads.push_back(f.leading(ord));
  }
  Reduction out{std::vector<Poly>(F.size(), Poly(g.nvars())), Poly(g.nvars())};
  Poly p = g;
  while (!p.is_zero()) {
    auto lt = p.leading(ord);
    bool divided = false;
    for (std::size_t i = 0; i < F.size(); ++i) {
      if (!leads[i].exp.divides(lt.exp)) continue;
      auto shift = *lt.exp.minus(leads[i].exp);
      Rational c = lt.coeff / leads[i].coeff;
      p.add_scaled(F[i], shift, -c);
      out.quotients[i].add_term(shift, c);
      divided = true;
      break;
    }
    if (!divided) {
      out.remainder.add_term(lt.exp, lt.coeff);
      p.add_term(lt.exp, -lt.coeff);
    }
  }
  return out;
}

GBasis buchberger(std::span<const Poly> F, const MonomialOrder& ord,
                  const BuchbergerOptions& options) {
  const std::size_t nvars = F.empty() ? ord.nvars() : F.front().nvars();
  check_nvars(F, nvars);
  Engine engine(ord, 1, nvars, true, false, options.chain_criterion);
  auto inputs = as_vectors(F);
  engine.run(inputs);

  GBasis gb;
  gb.order = ord;
  for (const auto& el : engine.elements()) {
    gb.generators.push_back(el.vec[0]);
    gb.transform.push_back(el.cert);
  }
  for (std::size_t j = 0; j < F.size(); ++j) {
    auto red = engine.reduce(inputs[j]);
    if (!red.remainder[0].is_zero()) {
      throw InvariantViolation("input does not reduce to zero modulo its Groebner basis");
    }
    gb.back_transform.push_back(std::move(red.quotients));
  }
  for (std::size_t i = 0; i < gb.generators.size(); ++i) {
    if (dot(gb.transform[i], F) != gb.generators[i]) {
      throw InvariantViolation("Groebner basis transform does not reproduce a generator");
    }
  }
  for (std::size_t j = 0; j < F.size(); ++j) {
    if (dot(gb.back_transform[j], gb.generators) != F[j]) {
      throw InvariantViolation("Groebner basis back transform does not reproduce an input");
    }
  }
  return gb;
}

std::vector<Poly> reduced_basis(std::span<const Poly> F, const MonomialOrder& ord) {
  const std::size_t nvars = F.empty() ? ord.nvars() : F.front().nvars();
  check_nvars(F, nvars);
  Engine engine(ord, 1, nvars, false, false, false);
  auto inputs = as_vectors(F);
  engine.run(inputs);
  std::vector<Poly> out;
  for (auto& v : reduce_elements(engine, 1, nvars, ord)) out.push_back(std::move(v[0]));
  return out;
}

std::optional<std::vector<Poly>> membership_with_cofactors(const Poly& g, const GBasis& gb) {
  auto red = reduce_poly(g, gb.generators, gb.order);
  if (!red.remainder.is_zero()) return std::nullopt;
  const std::size_t m = gb.back_transform.size();
  std::vector<Poly> d(m, Poly(g.nvars()));
  for (std::size_t i = 0; i < red.quotients.size(); ++i) {
    if (red.quotients[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) d[j] += red.quotients[i] * gb.transform[i][j];
  }
  return d;
}

std::optional<std::vector<Poly>> membership_with_cofactors(const Poly& g, std::span<const Poly> F,
                                                           const MonomialOrder& ord) {
  check_nvars(F, g.nvars());
  auto gb = buchberger(F, ord);
  auto d = membership_with_cofactors(g, gb);
  if (d && dot(*d, F) != g) throw InvariantViolation("membership cofactors do not re-expand");
  return d;
}

std::vector<PolyVec> syzygy_generators(std::span<const Poly> F, const MonomialOrder& ord) {
  const std::size_t m = F.size();
  if (m == 0) return {};
  const std::size_t nvars = F.front().nvars();
  check_nvars(F, nvars);
  Engine engine(ord, 1, nvars, true, true, false);
  auto inputs = as_vectors(F);
  engine.run(inputs);

  // Relations among basis elements, pulled back through the transform, plus
  // e_j - B_j T for every input.
  std::vector<PolyVec> raw;
  for (const auto& rel : engine.relations()) {
    auto v = zero_vec(m, nvars);
    for (const auto& [idx, coeff] : rel) add_mul(v, coeff, engine.elements()[idx].cert);
    if (!is_zero(v)) raw.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < m; ++j) {
    auto red = engine.reduce(inputs[j]);
    auto v = unit_vec(m, nvars, j, 1);
    auto back = engine.cert_of(red.quotients);
    for (std::size_t i = 0; i < m; ++i) v[i] -= back[i];
    if (!is_zero(v)) raw.push_back(std::move(v));
  }
  // raw lies in the span of out, so checking out covers raw as well
  auto out = reduced_module_basis(raw, m, ord);
  for (const auto& v : out) {
    if (!dot(v, F).is_zero()) throw InvariantViolation("syzygy generator does not annihilate");
  }
  return out;
}

SubmoduleBasis::SubmoduleBasis(std::span<const PolyVec> generators, std::size_t rank,
                               const MonomialOrder& ord)
    : inputs_(generators.begin(), generators.end()),
      rank_(rank),
      nvars_(arity_of(generators, ord.nvars())),
      ord_(ord) {
  Engine engine(ord, rank, nvars_, true, false, true);
  engine.run(inputs_);
  for (const auto& el : engine.elements()) {
    basis_.push_back(Element{el.vec, el.lead.pos, el.lead.exp, el.lead.coeff, el.cert});
  }
}

std::optional<std::vector<Poly>> SubmoduleBasis::member(const PolyVec& v) const {
  if (v.size() != rank_) throw DimensionError("module element has wrong rank");
  PolyVec p(v);
  std::vector<Poly> cof(inputs_.size(), Poly(nvars_));
  while (auto lead = vec_leading(p, ord_)) {
    const Element* divisor = nullptr;
    for (const auto& el : basis_) {
      if (el.pos == lead->pos && el.lead.divides(lead->exp)) {
        divisor = &el;
        break;
      }
    }
    if (!divisor) return std::nullopt;
    auto shift = *lead->exp.minus(divisor->lead);
    Rational c = lead->coeff / divisor->lc;
    add_scaled(p, divisor->vec, shift, -c);
    for (std::size_t j = 0; j < cof.size(); ++j) cof[j].add_scaled(divisor->cert[j], shift, c);
  }
  if (combine(cof, inputs_) != v) {
    throw InvariantViolation("module membership cofactors do not re-expand");
  }
  return cof;
}

std::optional<std::vector<Poly>> module_membership(const PolyVec& v, std::span<const PolyVec> S,
                                                   const MonomialOrder& ord) {
  for (const auto& s : S) {
    if (s.size() != v.size()) throw DimensionError("module elements of different rank");
  }
  return SubmoduleBasis(S, v.size(), ord).member(v);
}

std::vector<PolyVec> reduced_module_basis(std::span<const PolyVec> S, std::size_t rank,
                                          const MonomialOrder& ord) {
  const std::size_t nvars = arity_of(S, ord.nvars());
  Engine engine(ord, rank, nvars, false, false, true);
  engine.run(S);
  return reduce_elements(engine, rank, nvars, ord);
}

Exp y_weight(const Poly& h, VarSplit split) {
  if (h.nvars() != split.nvars()) throw DimensionError("polynomial is not in Q[X,Y]");
  if (h.is_zero()) throw InvalidInput("zero element in H");
  std::optional<Exp> w;
  for (const auto& [e, c] : h.terms()) {
    auto y = split.y_part(e);
    if (w && *w != y) throw InvalidInput("element of H is not of the form c * Y^alpha");
    w = std::move(y);
  }
  return *w;
}

std::vector<HomogeneousPart> homogeneous_parts(const PolyVec& s, std::span<const Poly> H,
                                               VarSplit split) {
  if (s.size() != H.size()) throw DimensionError("syzygy length differs from |H|");
  if (!dot(s, H).is_zero()) throw InvalidInput("vector does not annihilate H");
  std::vector<Exp> weights;
  for (const auto& h : H) weights.push_back(y_weight(h, split));

  std::map<Exp, PolyVec> parts;
  for (std::size_t g = 0; g < s.size(); ++g) {
    for (const auto& [e, c] : s[g].terms()) {
      auto degree = split.y_part(e) + weights[g];
      auto [it, _] = parts.try_emplace(degree, zero_vec(s.size(), split.nvars()));
      it->second[g].add_term(e, c);
    }
  }
  std::vector<HomogeneousPart> out;
  for (auto& [degree, vec] : parts) {
    if (!dot(vec, H).is_zero()) {
      throw InvariantViolation("homogeneous part does not annihilate H");
    }
    out.push_back(HomogeneousPart{std::move(vec), degree});
  }
  return out;
}

Poly dot(const PolyVec& v, std::span<const Poly> F) {
  if (v.size() != F.size()) throw DimensionError("vector length differs from generator count");
  Poly out(F.empty() ? 0 : F.front().nvars());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out += v[i] * F[i];
  }
  return out;
}

PolyVec combine(std::span<const Poly> c, std::span<const PolyVec> S) {
  if (c.size() != S.size()) throw DimensionError("cofactor count differs from generator count");
  if (S.empty()) return {};
  PolyVec out = zero_vec(S.front().size(), arity_of(S, 0));
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (!c[i].is_zero()) add_mul(out, c[i], S[i]);
  }
  return out;
}

bool is_zero(const PolyVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

Rational vector_normalizing_scale(const PolyVec& v, const MonomialOrder& ord) {
  ContentAccumulator acc;
  for (const auto& p : v) acc.add(p);
  auto s = acc.inverse_content();
  for (const auto& p : v) {
    if (p.is_zero()) continue;
    if (p.lc(ord) < 0) s = -s;
    break;
  }
  return s;
}

PolyVec normalized(PolyVec v, const MonomialOrder& ord) {
  scale(v, vector_normalizing_scale(v, ord));
  return v;
}

}  // namespace dopgb::cgb
