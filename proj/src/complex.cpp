#include "khcurves/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace khc {

namespace {

std::string unique_id(std::string id, const std::unordered_set<std::string>& taken) {
  while (taken.count(id) != 0) id += '\'';
  return id;
}

}  // namespace

std::size_t Complex::add_generator(Generator g) {
  gens_.push_back(std::move(g));
  return gens_.size() - 1;
}

void Complex::add_entry(std::size_t from, std::size_t to, const Element& label) {
  if (from >= gens_.size() || to >= gens_.size())
    throw ComplexError("differential entry refers to a missing generator");
  auto key = std::make_pair(from, to);
  auto it = diff_.find(key);
  if (it == diff_.end()) {
    if (!label.is_zero()) diff_.emplace(key, label);
    return;
  }
  it->second += label;
  if (it->second.is_zero()) diff_.erase(it);
}

void Complex::add_entry(const std::string& from, const std::string& to, const Element& label) {
  auto f = find(from);
  auto t = find(to);
  if (!f) throw ComplexError("unknown generator '" + from + "'");
  if (!t) throw ComplexError("unknown generator '" + to + "'");
  add_entry(*f, *t, label);
}

std::optional<std::size_t> Complex::find(const std::string& id) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].id == id) return i;
  return std::nullopt;
}

const Element* Complex::entry(std::size_t from, std::size_t to) const {
  auto it = diff_.find({from, to});
  return it == diff_.end() ? nullptr : &it->second;
}

int Complex::min_q() const {
  int m = 0;
  bool first = true;
  for (const auto& g : gens_) {
    if (first || g.q < m) m = g.q;
    first = false;
  }
  return m;
}

int Complex::max_q() const {
  int m = 0;
  bool first = true;
  for (const auto& g : gens_) {
    if (first || g.q > m) m = g.q;
    first = false;
  }
  return m;
}

ValidationReport validate_complex(const Complex& x) {
  ValidationReport rep;
  const auto& gens = x.generators();

  std::unordered_set<std::string> seen;
  for (const auto& g : gens) {
    if (!seen.insert(g.id).second) {
      rep.ids_unique = false;
      rep.problems.push_back("duplicate generator id '" + g.id + "'");
    }
  }

  for (const auto& [key, label] : x.entries()) {
    const Generator& src = gens[key.first];
    const Generator& tgt = gens[key.second];
    const std::string where = src.id + " -> " + tgt.id;
    if (label.from() != src.vertex || label.to() != tgt.vertex) {
      rep.endpoints_match = false;
      rep.problems.push_back("label endpoints do not match generators on " + where);
      continue;
    }
    for (const Word& w : label.words()) {
      const Grading g = w.grading();
      if (g.q + tgt.q - src.q != 0 || g.h + tgt.h - src.h != 1) {
        rep.homogeneous = false;
        std::ostringstream os;
        os << "inhomogeneous word " << w.to_string() << " on " << where << " (q: " << src.q
           << " -> " << tgt.q << ", h: " << src.h << " -> " << tgt.h << ")";
        rep.problems.push_back(os.str());
      }
      if (w.is_identity()) rep.reduced = false;
    }
  }

  if (rep.endpoints_match) {
    std::vector<std::vector<std::pair<std::size_t, const Element*>>> out(gens.size());
    for (const auto& [key, label] : x.entries()) out[key.first].emplace_back(key.second, &label);
    for (std::size_t a = 0; a < gens.size(); ++a) {
      std::map<std::size_t, Element> sq;
      for (const auto& [b, ab] : out[a]) {
        for (const auto& [c, bc] : out[b]) {
          auto it = sq.try_emplace(c, gens[a].vertex, gens[c].vertex).first;
          it->second += (*ab) * (*bc);
        }
      }
      for (const auto& [c, e] : sq) {
        if (!e.is_zero()) {
          rep.d_squared_zero = false;
          rep.problems.push_back("d^2 has component " + e.to_string() + " on " + gens[a].id +
                                 " -> " + gens[c].id);
        }
      }
    }
  }
  return rep;
}

void require_valid(const Complex& x, const std::string& what) {
  ValidationReport rep = validate_complex(x);
  if (rep.ok()) return;
  std::string msg = what + " is not a valid complex:";
  for (const auto& p : rep.problems) msg += "\n  " + p;
  throw ComplexError(msg);
}

Complex shift_complex(const Complex& x, int dq, int dh) {
  Complex out;
  for (Generator g : x.generators()) {
    g.q += dq;
    g.h += dh;
    out.add_generator(std::move(g));
  }
  for (const auto& [key, label] : x.entries()) out.add_entry(key.first, key.second, label);
  return out;
}

Complex cone_h(const Complex& x) {
  Complex out;
  const std::size_t n = x.size();
  std::unordered_set<std::string> taken;
  for (const auto& g : x.generators()) taken.insert(g.id);
  for (int half = 0; half < 2; ++half) {
    for (const auto& g : x.generators()) {
      Generator c = g;
      c.id = unique_id(g.id + (half == 0 ? "-" : "+"), taken);
      taken.insert(c.id);
      c.q += half == 0 ? -1 : 1;
      c.h += half == 0 ? -1 : 0;
      out.add_generator(std::move(c));
    }
  }
  for (const auto& [key, label] : x.entries()) {
    out.add_entry(key.first, key.second, label);
    out.add_entry(key.first + n, key.second + n, label);
  }
  for (std::size_t i = 0; i < n; ++i) out.add_entry(i, i + n, central_h(x.generator(i).vertex));
  return out;
}

Complex gauss_reduce(const Complex& x) {
  const std::size_t n = x.size();
  const auto& gens = x.generators();
  std::vector<std::map<std::size_t, Element>> out(n);
  std::vector<std::set<std::size_t>> in(n);
  for (const auto& [key, label] : x.entries()) {
    out[key.first].emplace(key.second, label);
    in[key.second].insert(key.first);
  }
  std::vector<bool> alive(n, true);

  auto set_entry = [&](std::size_t a, std::size_t b, const Element& e) {
    auto it = out[a].find(b);
    if (it == out[a].end()) {
      if (e.is_zero()) return;
      out[a].emplace(b, e);
      in[b].insert(a);
      return;
    }
    it->second += e;
    if (it->second.is_zero()) {
      out[a].erase(it);
      in[b].erase(a);
    }
  };

  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> pick;
    for (std::size_t a = 0; a < n; ++a) {
      if (!alive[a]) continue;
      for (const auto& [b, e] : out[a]) {
        if (!e.is_identity()) continue;
        if (!pick || std::tie(gens[a].id, gens[b].id) <
                         std::tie(gens[pick->first].id, gens[pick->second].id))
          pick = std::make_pair(a, b);
      }
    }
    if (!pick) break;
    const auto [src, tgt] = *pick;

    // d'(a -> b) = d(a -> b) + d(a -> tgt) . d(src -> b)
    std::vector<std::pair<std::size_t, Element>> into_tgt;
    for (std::size_t a : in[tgt])
      if (a != src) into_tgt.emplace_back(a, out[a].at(tgt));
    std::vector<std::pair<std::size_t, Element>> out_of_src;
    for (const auto& [b, e] : out[src])
      if (b != tgt) out_of_src.emplace_back(b, e);
    for (const auto& [a, at] : into_tgt)
      for (const auto& [b, sb] : out_of_src) set_entry(a, b, at * sb);

    for (std::size_t dead : {src, tgt}) {
      for (const auto& [b, e] : out[dead]) in[b].erase(dead);
      out[dead].clear();
      for (std::size_t a : in[dead]) out[a].erase(dead);
      in[dead].clear();
      alive[dead] = false;
    }
  }

  Complex result;
  std::vector<std::size_t> remap(n);
  for (std::size_t i = 0; i < n; ++i)
    if (alive[i]) remap[i] = result.add_generator(gens[i]);
  for (std::size_t a = 0; a < n; ++a)
    if (alive[a])
      for (const auto& [b, e] : out[a]) result.add_entry(remap[a], remap[b], e);
  return result;
}

Complex direct_sum(const Complex& x, const Complex& y) {
  Complex out = x;
  std::unordered_set<std::string> taken;
  for (const auto& g : x.generators()) taken.insert(g.id);
  const std::size_t offset = x.size();
  for (Generator g : y.generators()) {
    g.id = unique_id(g.id, taken);
    taken.insert(g.id);
    out.add_generator(std::move(g));
  }
  for (const auto& [key, label] : y.entries())
    out.add_entry(key.first + offset, key.second + offset, label);
  return out;
}

std::vector<std::vector<std::size_t>> connected_components(const Complex& x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const auto& [key, label] : x.entries()) {
    std::size_t a = root(key.first), b = root(key.second);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[root(i)].push_back(i);
  std::vector<std::vector<std::size_t>> result;
  for (auto& [r, members] : groups) result.push_back(std::move(members));
  return result;
}

Complex restrict_to(const Complex& x, const std::vector<std::size_t>& indices) {
  Complex out;
  std::map<std::size_t, std::size_t> remap;
  for (std::size_t i : indices) remap[i] = out.add_generator(x.generator(i));
  for (const auto& [key, label] : x.entries()) {
    auto a = remap.find(key.first);
    auto b = remap.find(key.second);
    if (a != remap.end() && b != remap.end()) out.add_entry(a->second, b->second, label);
  }
  return out;
}

}  // namespace khc
