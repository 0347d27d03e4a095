#include "oddcycle/toric.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "oddcycle/error.hpp"

namespace oddcycle {

Monomial::Monomial(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end());
  for (const auto& [index, exp] : terms) {
    if (exp == 0) continue;
    if (!terms_.empty() && terms_.back().first == index) {
      terms_.back().second += exp;
    } else {
      terms_.emplace_back(index, exp);
    }
    degree_ += exp;
  }
}

Monomial Monomial::product_of(std::span<const std::size_t> indices) {
  std::vector<Term> terms;
  terms.reserve(indices.size());
  for (auto i : indices) terms.emplace_back(static_cast<std::uint32_t>(i), 1u);
  Monomial m(std::move(terms));
  if (m.degree() != m.terms().size()) throw InvalidInput("product_of: repeated variable");
  return m;
}

Monomial Monomial::variable(std::size_t index, std::uint32_t exponent) {
  return Monomial({{static_cast<std::uint32_t>(index), exponent}});
}

std::uint32_t Monomial::exponent(std::size_t index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{static_cast<std::uint32_t>(index), 0u});
  return (it != terms_.end() && it->first == index) ? it->second : 0u;
}

bool Monomial::is_squarefree() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second == 1; });
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.terms_.begin();
  for (const auto& [index, exp] : terms_) {
    while (it != other.terms_.end() && it->first < index) ++it;
    if (it == other.terms_.end() || it->first != index || it->second < exp) return false;
  }
  return true;
}

Monomial Monomial::cofactor_in(const Monomial& other) const {
  std::vector<Term> out;
  auto mine = terms_.begin();
  for (const auto& [index, exp] : other.terms_) {
    std::uint32_t sub = 0;
    if (mine != terms_.end() && mine->first == index) sub = (mine++)->second;
    if (exp > sub) out.emplace_back(index, exp - sub);
  }
  return Monomial(std::move(out));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Monomial(std::move(terms));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::map<std::uint32_t, std::uint32_t> exps;
  for (const auto& [i, e] : a.terms_) exps[i] = e;
  for (const auto& [i, e] : b.terms_) exps[i] = std::max(exps[i], e);
  return Monomial(std::vector<Monomial::Term>(exps.begin(), exps.end()));
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto cmp = a.degree() <=> b.degree(); cmp != 0) return cmp;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0;
  for (; i < ta.size() && i < tb.size(); ++i) {
    // The monomial that mentions the smaller (i.e. larger) variable first wins.
    if (ta[i].first != tb[i].first) {
      return ta[i].first < tb[i].first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (ta[i].second != tb[i].second) return ta[i].second <=> tb[i].second;
  }
  // Equal degree and a common prefix force both term lists to end together.
  return std::strong_ordering::equal;
}

std::vector<Binomial> generators(const OddCycleComposition& c) {
  std::vector<CycleParts> parts;
  for (unsigned i = 1; i <= c.num_cycles(); ++i) parts.push_back(cycle_parts(c, i));

  std::vector<Binomial> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      std::vector<std::size_t> plus = parts[i].odd;
      plus.insert(plus.end(), parts[j].even.begin(), parts[j].even.end());
      std::vector<std::size_t> minus = parts[i].even;
      minus.insert(minus.end(), parts[j].odd.begin(), parts[j].odd.end());
      out.push_back({Monomial::product_of(plus), Monomial::product_of(minus)});
    }
  }
  return out;
}

std::vector<Monomial> initial_monomials(const OddCycleComposition& c) {
  std::vector<Monomial> out;
  for (auto& b : generators(c)) out.push_back(std::move(b.plus));
  return out;
}

Monomial leading_monomial(const Binomial& b) {
  return grlex_compare(b.plus, b.minus) >= 0 ? b.plus : b.minus;
}

namespace {

using Polynomial = std::map<Monomial, long long, GrlexGreater>;

void add_term(Polynomial& p, const Monomial& m, long long coeff) {
  auto [it, inserted] = p.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) p.erase(it);
  }
}

struct OrientedBinomial {
  Monomial lead;
  Monomial tail;
};

OrientedBinomial orient(const Binomial& b) {
  if (grlex_compare(b.plus, b.minus) >= 0) return {b.plus, b.minus};
  return {b.minus, b.plus};
}

}  // namespace

bool s_pair_reduces_to_zero(const Binomial& f, const Binomial& g, std::span<const Binomial> basis,
                            std::size_t step_cap) {
  const OrientedBinomial of = orient(f);
  const OrientedBinomial og = orient(g);
  std::vector<OrientedBinomial> reducers;
  reducers.reserve(basis.size());
  for (const auto& b : basis) reducers.push_back(orient(b));

  // S(f, g) = (L/lm f) f - (L/lm g) g = (L/lm g) tail g - (L/lm f) tail f
  const Monomial l = lcm(of.lead, og.lead);
  Polynomial work;
  add_term(work, og.lead.cofactor_in(l) * og.tail, 1);
  add_term(work, of.lead.cofactor_in(l) * of.tail, -1);

  Polynomial remainder;
  std::size_t steps = 0;
  while (!work.empty()) {
    auto top = work.begin();
    const Monomial m = top->first;
    const long long coeff = top->second;
    work.erase(top);

    auto reducer = std::find_if(reducers.begin(), reducers.end(),
                                [&](const OrientedBinomial& r) { return r.lead.divides(m); });
    if (reducer == reducers.end()) {
      add_term(remainder, m, coeff);
      continue;
    }
    if (++steps > step_cap) {
      throw ReductionDidNotTerminate("reduction did not terminate within " + std::to_string(step_cap) +
                                     " steps");
    }
    // coeff * q * lead  ==  coeff * q * tail  modulo the reducer
    add_term(work, reducer->lead.cofactor_in(m) * reducer->tail, coeff);
  }
  return remainder.empty();
}

std::uint64_t VertexExponentVector::total() const {
  std::uint64_t sum = 0;
  for (const auto& e : entries_) sum += e.second;
  return sum;
}

void VertexExponentVector::add_vertex(VertexId v, std::uint32_t times) {
  if (times == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, VertexId id) { return e.first < id; });
  if (it != entries_.end() && it->first == v) {
    it->second += times;
  } else {
    entries_.insert(it, {v, times});
  }
}

VertexExponentVector edge_map(const Monomial& m, const LabeledGraph& g) {
  VertexExponentVector out;
  for (const auto& [index, exp] : m.terms()) {
    if (index >= g.edges.size()) throw InvalidInput("edge_map: variable index outside the graph");
    out.add_vertex(g.edges[index].a, exp);
    out.add_vertex(g.edges[index].b, exp);
  }
  return out;
}

bool kernel_check(const Binomial& b, const LabeledGraph& g) {
  return edge_map(b.plus, g) == edge_map(b.minus, g);
}

namespace {

using Mask = std::uint64_t;

class StandardMonomialCounter {
 public:
  StandardMonomialCounter(std::size_t num_vars, std::vector<Mask> forbidden)
      : num_vars_(num_vars), forbidden_(std::move(forbidden)) {}

  std::uint64_t count(unsigned degree) const { return recurse(0, degree, 0); }

 private:
  bool blocked(Mask support) const {
    return std::any_of(forbidden_.begin(), forbidden_.end(),
                       [&](Mask f) { return (f & support) == f; });
  }

  std::uint64_t recurse(std::size_t var, unsigned remaining, Mask support) const {
    if (remaining == 0) return 1;
    if (var == num_vars_) return 0;
    std::uint64_t total = recurse(var + 1, remaining, support);
    const Mask with = support | (Mask{1} << var);
    // Generators are squarefree: divisibility only depends on the support.
    if (blocked(with)) return total;
    for (unsigned e = 1; e <= remaining; ++e) total += recurse(var + 1, remaining - e, with);
    return total;
  }

  std::size_t num_vars_;
  std::vector<Mask> forbidden_;
};

}  // namespace

std::vector<std::uint64_t> standard_monomial_series(const OddCycleComposition& c, unsigned max_degree) {
  if (c.num_edges() > 64) throw InstanceTooLarge("standard_monomial_count supports at most 64 edge variables");
  std::vector<Mask> forbidden;
  for (const auto& m : initial_monomials(c)) {
    Mask mask = 0;
    for (const auto& [index, exp] : m.terms()) mask |= Mask{1} << index;
    forbidden.push_back(mask);
  }
  StandardMonomialCounter counter(c.num_edges(), std::move(forbidden));
  std::vector<std::uint64_t> out;
  for (unsigned d = 0; d <= max_degree; ++d) out.push_back(counter.count(d));
  return out;
}

std::uint64_t standard_monomial_count(const OddCycleComposition& c, unsigned degree) {
  return standard_monomial_series(c, degree).back();
}

std::vector<std::uint64_t> edge_subring_hilbert_series(const OddCycleComposition& c, unsigned max_degree) {
  const LabeledGraph g = labeled_graph(c);
  std::set<VertexExponentVector> level{VertexExponentVector{}};
  std::vector<std::uint64_t> out{level.size()};
  for (unsigned d = 1; d <= max_degree; ++d) {
    std::set<VertexExponentVector> next;
    for (const auto& v : level) {
      for (const auto& e : g.edges) {
        VertexExponentVector w = v;
        w.add_vertex(e.a);
        w.add_vertex(e.b);
        next.insert(std::move(w));
      }
    }
    level = std::move(next);
    out.push_back(level.size());
  }
  return out;
}

std::uint64_t edge_subring_hilbert(const OddCycleComposition& c, unsigned degree) {
  return edge_subring_hilbert_series(c, degree).back();
}

std::string to_string(const Monomial& m, const OddCycleComposition& c) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [index, exp] : m.terms()) {
    if (!out.empty()) out += '*';
    out += to_string(c.label(index));
    if (exp > 1) out += "^" + std::to_string(exp);
  }
  return out;
}

std::string to_string(const Binomial& b, const OddCycleComposition& c) {
  return to_string(b.plus, c) + " - " + to_string(b.minus, c);
}

}  // namespace oddcycle
