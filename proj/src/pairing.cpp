#include "khcurves/pairing.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "khcurves/f2.hpp"

namespace khc {

MorChain& add_term(MorChain& chain, const MorTerm& t) {
  auto it = std::lower_bound(chain.begin(), chain.end(), t);
  if (it != chain.end() && *it == t)
    chain.erase(it);
  else
    chain.insert(it, t);
  return chain;
}

MorChain operator+(const MorChain& a, const MorChain& b) {
  MorChain out = a;
  for (const auto& t : b) add_term(out, t);
  return out;
}

Grading mor_grading(const Complex& x, const Complex& y, const MorTerm& t) {
  const Generator& s = x.generator(t.src);
  const Generator& d = y.generator(t.tgt);
  const Grading w = t.word.grading();
  return {d.q - s.q + w.q, d.h - s.h + w.h};
}

namespace {

// Outgoing entries of Y and incoming entries of X, by generator.
struct Adjacency {
  std::vector<std::vector<std::pair<std::size_t, const Element*>>> y_out;
  std::vector<std::vector<std::pair<std::size_t, const Element*>>> x_in;

  Adjacency(const Complex& x, const Complex& y) : y_out(y.size()), x_in(x.size()) {
    for (const auto& [key, label] : y.entries()) y_out[key.first].emplace_back(key.second, &label);
    for (const auto& [key, label] : x.entries()) x_in[key.second].emplace_back(key.first, &label);
  }
};

MorChain differential_with(const Adjacency& adj, const MorChain& f) {
  MorChain out;
  for (const MorTerm& t : f) {
    for (const auto& [y2, label] : adj.y_out[t.tgt])
      for (const Word& u : label->words()) {
        const Element e = word_compose(t.word, u);
        for (const Word& v : e.words()) add_term(out, {t.src, y2, v});
      }
    for (const auto& [x0, label] : adj.x_in[t.src])
      for (const Word& u : label->words()) {
        const Element e = word_compose(u, t.word);
        for (const Word& v : e.words()) add_term(out, {x0, t.tgt, v});
      }
  }
  return out;
}

int weight(const Word& w) { return -w.grading().q; }

// Basis words from `from` to `to` with weight at most cap.
std::vector<Word> words_between(Vertex from, Vertex to, int cap) {
  std::vector<Word> out;
  if (from == to) {
    out.push_back(Word::identity(from));
    for (int k = 1; 2 * k <= cap; ++k) out.push_back(Word::d_power(from, k));
    for (int m = 2; m <= cap; m += 2) out.push_back(Word::s_power(from, m));
  } else {
    for (int m = 1; m <= cap; m += 2) out.push_back(Word::s_power(from, m));
  }
  return out;
}

int mor_q_top(const Complex& x, const Complex& y) {
  int top = std::numeric_limits<int>::min();
  for (const auto& a : x.generators())
    for (const auto& b : y.generators()) top = std::max(top, b.q - a.q - (a.vertex == b.vertex ? 0 : 1));
  return top;
}

// Generators of a Mor complex grouped by bidegree, with the homology of each
// bidegree in the window computed on demand.
class Bidegrees {
 public:
  explicit Bidegrees(const MorComplex& m) : m_(m) {
    for (std::size_t i = 0; i < m.generators.size(); ++i) {
      const auto& g = m.generators[i];
      auto& blk = blocks_[{g.q, g.h}];
      local_[i] = blk.size();
      blk.push_back(i);
    }
  }

  const std::map<std::pair<int, int>, std::vector<std::size_t>>& blocks() const { return blocks_; }

  std::size_t dim(int q, int h) const {
    auto it = blocks_.find({q, h});
    return it == blocks_.end() ? 0 : it->second.size();
  }

  const std::vector<std::size_t>& members(int q, int h) const {
    static const std::vector<std::size_t> none;
    auto it = blocks_.find({q, h});
    return it == blocks_.end() ? none : it->second;
  }

  f2::BitVec vector_of(const std::vector<std::size_t>& gens, int q, int h) const {
    f2::BitVec v(dim(q, h));
    for (std::size_t g : gens) {
      const auto& mg = m_.generators[g];
      if (mg.q != q || mg.h != h) throw std::logic_error("generator outside the expected bidegree");
      v.flip(local_.at(g));
    }
    return v;
  }

  // Columns of d restricted to (q, h) -> (q, h + 1).
  std::vector<f2::BitVec> d_out(int q, int h) const {
    std::vector<f2::BitVec> cols;
    for (std::size_t g : members(q, h)) cols.push_back(vector_of(m_.boundary[g], q, h + 1));
    return cols;
  }

  struct Homology {
    std::vector<f2::BitVec> reps;         // cycle representatives of a basis
    std::vector<f2::BitVec> boundaries;   // columns of d into (q, h)
  };

  Homology homology(int q, int h) const {
    Homology out;
    const std::size_t n = dim(q, h);
    out.boundaries = d_out(q, h - 1);
    f2::Span span(n);
    for (const auto& b : out.boundaries) span.insert(b);
    for (const auto& k : f2::kernel(d_out(q, h), dim(q, h + 1))) {
      // k is a combination of block members, i.e. already a vector in the block
      if (span.insert(k)) out.reps.push_back(k);
    }
    return out;
  }

  // Coordinates of a cycle in the homology basis of (q, h).
  static f2::BitVec coordinates(const Homology& hom, const f2::BitVec& cycle) {
    f2::Span span(cycle.size());
    for (const auto& b : hom.boundaries) span.insert(b);
    for (const auto& r : hom.reps) span.insert(r);
    auto red = span.reduce(cycle);
    if (red.residual.any()) throw std::logic_error("vector is not a cycle");
    f2::BitVec c(hom.reps.size());
    const std::size_t nb = hom.boundaries.size();
    for (std::size_t i : red.combination)
      if (i >= nb) c.flip(i - nb);
    return c;
  }

  MorChain chain_of(const f2::BitVec& v, int q, int h) const {
    MorChain out;
    const auto& mem = members(q, h);
    for (std::size_t i : v.ones()) add_term(out, m_.generators[mem[i]].term);
    return out;
  }

  f2::BitVec vector_of_chain(const MorChain& c, int q, int h) const {
    std::vector<std::size_t> gens;
    for (const auto& t : c) {
      auto it = m_.index.find(t);
      if (it == m_.index.end()) throw std::logic_error("morphism outside the truncated Mor complex");
      gens.push_back(it->second);
    }
    return vector_of(gens, q, h);
  }

 private:
  const MorComplex& m_;
  std::map<std::pair<int, int>, std::vector<std::size_t>> blocks_;
  std::map<std::size_t, std::size_t> local_;
};

BigradedDims window_homology(const MorComplex& m, int q_floor) {
  Bidegrees bd(m);
  BigradedDims out;
  for (const auto& [deg, members] : bd.blocks()) {
    if (deg.first < q_floor) continue;
    const std::size_t n = members.size();
    const std::size_t r_out = f2::rank(bd.d_out(deg.first, deg.second), bd.dim(deg.first, deg.second + 1));
    const std::size_t r_in = f2::rank(bd.d_out(deg.first, deg.second - 1), n);
    const int rank = static_cast<int>(n - r_out - r_in);
    if (rank > 0) out.ranks[deg] = rank;
  }
  return out;
}

}  // namespace

MorChain mor_differential(const Complex& x, const Complex& y, const MorChain& f) {
  return differential_with(Adjacency(x, y), f);
}

MorComplex build_mor_complex(const Complex& x, const Complex& y, int cap) {
  require_valid(x, "source complex");
  require_valid(y, "target complex");
  if (cap < 0) throw PairingError("cap must be non-negative");
  MorComplex m;
  m.cap = cap;
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < y.size(); ++b) {
      for (const Word& w : words_between(x.generator(a).vertex, y.generator(b).vertex, cap)) {
        MorTerm t{a, b, w};
        const Grading g = mor_grading(x, y, t);
        m.index.emplace(t, m.generators.size());
        m.generators.push_back({t, g.q, g.h});
      }
    }
  }
  const Adjacency adj(x, y);
  m.boundary.resize(m.generators.size());
  for (std::size_t i = 0; i < m.generators.size(); ++i) {
    for (const MorTerm& t : differential_with(adj, {m.generators[i].term})) {
      if (weight(t.word) > cap) {
        m.truncated = true;
        continue;
      }
      m.boundary[i].push_back(m.index.at(t));
    }
    std::sort(m.boundary[i].begin(), m.boundary[i].end());
  }
  return m;
}

bool mor_d_squared_zero(const MorComplex& m) {
  for (std::size_t i = 0; i < m.generators.size(); ++i) {
    std::map<std::size_t, int> count;
    for (std::size_t j : m.boundary[i])
      for (std::size_t k : m.boundary[j]) count[k] ^= 1;
    for (const auto& [k, c] : count)
      if (c != 0) return false;
  }
  return true;
}

int BigradedDims::total() const {
  int t = 0;
  for (const auto& [deg, r] : ranks) t += r;
  return t;
}

MorHomologyResult mor_homology_detailed(const Complex& x, const Complex& y, std::optional<int> cap) {
  require_valid(x, "source complex");
  require_valid(y, "target complex");
  MorHomologyResult res;
  if (x.empty() || y.empty()) return res;
  res.cap_low = cap.value_or(x.q_span() + y.q_span() + 8);
  res.cap_high = res.cap_low + 4;
  res.q_top = mor_q_top(x, y);
  // A generator dropped by the cap has q <= q_top - cap, so every degree
  // strictly above that is computed exactly.
  res.q_floor = res.q_top - res.cap_low + 1;

  const BigradedDims low = window_homology(build_mor_complex(x, y, res.cap_low), res.q_floor);
  const BigradedDims high = window_homology(build_mor_complex(x, y, res.cap_high), res.q_top - res.cap_high + 1);

  res.dims_high = high;
  BigradedDims high_in_window;
  for (const auto& [deg, r] : high.ranks) {
    if (deg.first < res.q_floor)
      throw NonStabilizing("Mor homology does not stabilize (rank " + std::to_string(r) + " at q = " +
                           std::to_string(deg.first) + ", h = " + std::to_string(deg.second) +
                           " below the window); the inputs are possibly homotopic");
    high_in_window.ranks[deg] = r;
  }
  if (!(high_in_window == low))
    throw NonStabilizing("Mor homology ranks differ between caps " + std::to_string(res.cap_low) +
                         " and " + std::to_string(res.cap_high));
  res.dims = low;
  return res;
}

BigradedDims mor_homology(const Complex& x, const Complex& y, std::optional<int> cap) {
  return mor_homology_detailed(x, y, cap).dims;
}

std::int64_t geometric_dim(const CurveComponent& arc, const CurveComponent& g) {
  arc.validate();
  g.validate();
  if (arc.kind != CurveKind::Arc) throw PairingError("first argument of geometric_dim must be an arc");
  if (!(arc.slope == g.slope)) return g.length * delta(arc.slope, g.slope);
  switch (g.kind) {
    case CurveKind::Special:
      return 0;
    case CurveKind::Rational:
      if (g.length == 1) return 2;
      throw UnsupportedPairing("same-slope intersection count for " + g.to_string() +
                               " is not known for rational curves of length >= 2");
    case CurveKind::FigureEight:
      return 2 * g.length;
    case CurveKind::Arc:
      throw PairingError("arcs of equal slope " + arc.slope.to_string() +
                         " are homotopic; their pairing is undefined");
  }
  return 0;
}

MorChain basepoint_action(const MorChain& f) {
  MorChain out;
  for (const MorTerm& t : f) {
    const Element e = word_compose(t.word, Word::d_power(t.word.to(), 1));
    for (const Word& v : e.words()) add_term(out, {t.src, t.tgt, v});
  }
  return out;
}

TorsionReport torsion_witness(const Complex& x, const Complex& y) {
  const MorHomologyResult res = mor_homology_detailed(x, y);
  TorsionReport rep;
  rep.total_dim = res.dims.total();
  if (rep.total_dim == 0) return rep;

  const MorComplex m = build_mor_complex(x, y, res.cap_high);
  const Bidegrees bd(m);

  std::map<std::pair<int, int>, Bidegrees::Homology> hom;
  auto homology_at = [&](int q, int h) -> const Bidegrees::Homology& {
    auto it = hom.find({q, h});
    if (it == hom.end()) it = hom.emplace(std::make_pair(q, h), bd.homology(q, h)).first;
    return it->second;
  };

  // Action matrix on homology, (q, h) -> (q - 2, h), as columns.
  auto action = [&](int q, int h) {
    const auto& src = homology_at(q, h);
    const auto& dst = homology_at(q - 2, h);
    std::vector<f2::BitVec> cols;
    for (const auto& r : src.reps) {
      MorChain image = basepoint_action(bd.chain_of(r, q, h));
      cols.push_back(Bidegrees::coordinates(dst, bd.vector_of_chain(image, q - 2, h)));
    }
    return cols;
  };

  struct Candidate {
    MorChain cls;
    int q;
    int h;
    bool identity;
  };
  std::optional<Candidate> best;

  for (const auto& [deg, r] : res.dims.ranks) {
    const auto [q, h] = deg;
    const auto& src = homology_at(q, h);
    const auto cols = action(q, h);
    rep.action_rank += static_cast<int>(f2::rank(cols, homology_at(q - 2, h).reps.size()));

    for (const auto& rv : src.reps) {
      MorChain twice = basepoint_action(basepoint_action(bd.chain_of(rv, q, h)));
      if (Bidegrees::coordinates(homology_at(q - 4, h), bd.vector_of_chain(twice, q - 4, h)).any())
        rep.action_squares_to_zero = false;
    }

    f2::Span image(src.reps.size());
    if (q + 2 <= res.q_top)
      for (const auto& c : action(q + 2, h)) image.insert(c);
    for (const auto& k : f2::kernel(cols, homology_at(q - 2, h).reps.size())) {
      if (image.contains(k)) continue;
      f2::BitVec v(bd.dim(q, h));
      for (std::size_t i : k.ones()) v ^= src.reps[i];
      MorChain cls = bd.chain_of(v, q, h);
      bool identity = std::any_of(cls.begin(), cls.end(), [](const MorTerm& t) { return t.word.is_identity(); });
      if (!best || (identity && !best->identity)) best = Candidate{cls, q, h, identity};
    }
  }

  if (best) {
    const MorChain target = basepoint_action(best->cls);
    const auto& bnd = homology_at(best->q - 2, best->h).boundaries;
    f2::Span span(bd.dim(best->q - 2, best->h));
    for (const auto& b : bnd) span.insert(b);
    auto red = span.reduce(bd.vector_of_chain(target, best->q - 2, best->h));
    if (red.residual.any()) throw std::logic_error("basepoint image of a torsion class is not a boundary");
    const auto& sources = bd.members(best->q - 2, best->h - 1);
    MorChain g;
    for (std::size_t i : red.combination) add_term(g, m.generators[sources[i]].term);
    if (!(mor_differential(x, y, g) == target))
      throw std::logic_error("nullhomotopy check failed");
    rep.witness = TorsionWitness{best->cls, g, {best->q, best->h}, best->identity};
  }
  return rep;
}

}  // namespace khc
