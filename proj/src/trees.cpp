#include <symcone/errors.hpp>
#include <symcone/trees.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace symcone {

// ------------------------------------------------------------ accessors

std::vector<int> DecoratedTree::edges_at(int vertex) const {
  std::vector<int> out;
  for (const auto &[id, e] : edges)
    if (e.u == vertex || e.v == vertex)
      out.push_back(id);
  return out;
}

std::vector<int> DecoratedTree::marks_at(int vertex) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < marks.size(); ++i)
    if (marks[i].vertex == vertex)
      out.push_back(static_cast<int>(i));
  return out;
}

int DecoratedTree::other_end(int edge, int vertex) const {
  auto it = edges.find(edge);
  if (it == edges.end())
    throw BadEdge("unknown edge " + std::to_string(edge));
  if (it->second.u == vertex)
    return it->second.v;
  if (it->second.v == vertex)
    return it->second.u;
  throw BadEdge("vertex " + std::to_string(vertex) + " is not on edge " +
                std::to_string(edge));
}

const Multipartition &DecoratedTree::flag_mon(int vertex, int edge) const {
  auto it = edges.find(edge);
  if (it == edges.end())
    throw BadEdge("unknown edge " + std::to_string(edge));
  if (it->second.u == vertex)
    return it->second.mon_u;
  if (it->second.v == vertex)
    return it->second.mon_v;
  throw BadEdge("vertex " + std::to_string(vertex) + " is not on edge " +
                std::to_string(edge));
}

int DecoratedTree::i_mov(int vertex, int edge) const {
  int other = other_end(edge, vertex);
  const auto &a = vertices.at(vertex);
  const auto &b = vertices.at(other);
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] > b[i])
      return static_cast<int>(i);
  throw Invalid("edge " + std::to_string(edge) +
                " joins vertices with equal evaluation");
}

Partition DecoratedTree::mov(int edge) const {
  const TreeEdge &e = edges.at(edge);
  auto i = static_cast<std::size_t>(i_mov(e.u, edge));
  return e.mon_u[i].without(e.mon_v[i]);
}

Partition DecoratedTree::mon_of_edge(int edge) const {
  return edges.at(edge).mon_u.underlying();
}

BigRational DecoratedTree::beta(int edge) const {
  BigRational b = edges.at(edge).q * mov(edge).sum();
  b.canonicalize();
  return b;
}

BigRational DecoratedTree::total_beta() const {
  BigRational s = 0;
  for (const auto &[id, e] : edges)
    s += beta(id);
  return s;
}

// ----------------------------------------------------------- validation

ValidationReport validate(const DecoratedTree &t) {
  ValidationReport rep;
  auto fail = [&](const std::string &what) {
    rep.pass = false;
    rep.failures.push_back(what);
  };

  // tree-ness
  bool graph_ok = true;
  if (t.vertices.empty()) {
    fail("tree: no vertices");
    return rep;
  }
  if (t.edges.size() + 1 != t.vertices.size()) {
    fail("tree: edge count is not vertex count minus one");
    graph_ok = false;
  }
  for (const auto &[id, e] : t.edges) {
    if (!t.vertices.count(e.u) || !t.vertices.count(e.v) || e.u == e.v) {
      fail("tree: edge " + std::to_string(id) + " has bad endpoints");
      graph_ok = false;
    }
  }
  if (graph_ok) {
    std::set<int> seen{t.vertices.begin()->first};
    std::vector<int> stack{t.vertices.begin()->first};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : t.edges_at(v)) {
        int w = t.other_end(e, v);
        if (seen.insert(w).second)
          stack.push_back(w);
      }
    }
    if (seen.size() != t.vertices.size()) {
      fail("tree: not connected");
      graph_ok = false;
    }
  }
  if (!graph_ok)
    return rep;

  // shapes
  auto n = static_cast<std::size_t>(t.r + 1);
  bool shape_ok = true;
  for (const auto &[id, mu] : t.vertices)
    if (mu.size() != n || mu.sum() != t.d ||
        std::any_of(mu.entries.begin(), mu.entries.end(),
                    [](int x) { return x < 0; })) {
      fail("shape: vertex " + std::to_string(id) + " evaluation " +
           mu.to_string());
      shape_ok = false;
    }
  for (const auto &[id, e] : t.edges) {
    if (e.mon_u.sums() != t.vertices.at(e.u) ||
        e.mon_v.sums() != t.vertices.at(e.v)) {
      fail("shape: flag monodromy of edge " + std::to_string(id));
      shape_ok = false;
    }
    if (e.q <= 0) {
      fail("shape: edge " + std::to_string(id) + " has nonpositive q");
      shape_ok = false;
    }
  }
  for (std::size_t i = 0; i < t.marks.size(); ++i) {
    const auto &m = t.marks[i];
    if (!t.vertices.count(m.vertex) || m.mon.sums() != t.vertices.at(m.vertex)) {
      fail("shape: mark b" + std::to_string(i + 1));
      shape_ok = false;
    }
  }
  if (!shape_ok)
    return rep;

  for (const auto &[id, e] : t.edges) {
    const auto &a = t.vertices.at(e.u);
    const auto &b = t.vertices.at(e.v);
    int differ = 0;
    for (std::size_t i = 0; i < n; ++i)
      differ += a[i] != b[i];
    if (differ != 2) {
      fail("condition 1: edge " + std::to_string(id) + " changes " +
           std::to_string(differ) + " coordinates");
      continue;
    }
    auto iu = static_cast<std::size_t>(t.i_mov(e.u, id));
    auto iv = static_cast<std::size_t>(t.i_mov(e.v, id));
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      if (i != iu && i != iv && e.mon_u[i] != e.mon_v[i])
        ok = false;
    if (!e.mon_u[iu].contains(e.mon_v[iu]) || !e.mon_v[iv].contains(e.mon_u[iv]))
      ok = false;
    else if (e.mon_u[iu].without(e.mon_v[iu]) != e.mon_v[iv].without(e.mon_u[iv]))
      ok = false;
    if (!ok) {
      fail("condition 2: edge " + std::to_string(id));
      continue;
    }
    Partition moved = t.mov(id);
    for (int eta : moved.parts()) {
      BigRational b = e.q * eta;
      b.canonicalize();
      if (b.get_den() != 1)
        fail("integrality: edge " + std::to_string(id) + " q*" +
             std::to_string(eta) + " is not an integer");
    }
  }

  for (const auto &[v, mu] : t.vertices) {
    auto es = t.edges_at(v);
    auto ms = t.marks_at(v);
    if (es.size() == 1 && ms.empty() && !t.flag_mon(v, es[0]).is_ones())
      fail("condition 3: vertex " + std::to_string(v));
    if (es.size() == 1 && ms.size() == 1 &&
        t.flag_mon(v, es[0]) != t.marks[static_cast<std::size_t>(ms[0])].mon)
      fail("condition 4: vertex " + std::to_string(v));
    if (es.size() == 2 && ms.empty() &&
        t.flag_mon(v, es[0]) != t.flag_mon(v, es[1]))
      fail("condition 5: vertex " + std::to_string(v));
  }
  return rep;
}

// ------------------------------------------------------------- combining

namespace {

// Shared vertex of two distinct edges, or -1.
int shared_vertex(const DecoratedTree &t, int e1, int e2) {
  const auto &a = t.edges.at(e1);
  const auto &b = t.edges.at(e2);
  for (int x : {a.u, a.v})
    if (x == b.u || x == b.v)
      return x;
  return -1;
}

} // namespace

bool combinable(const DecoratedTree &t, int e1, int e2) {
  for (int e : {e1, e2})
    if (!t.edges.count(e))
      throw BadEdge("unknown edge " + std::to_string(e));
  if (e1 == e2)
    return false;
  int v = shared_vertex(t, e1, e2);
  if (v < 0 || t.valence(v) != 2 || !t.marks_at(v).empty())
    return false;
  if (t.edges.at(e1).q != t.edges.at(e2).q)
    return false;
  int v1 = t.other_end(e1, v);
  int v2 = t.other_end(e2, v);
  try {
    return t.i_mov(v1, e1) == t.i_mov(v, e2) &&
           t.i_mov(v, e1) == t.i_mov(v2, e2);
  } catch (const Invalid &) {
    return false;
  }
}

std::vector<std::pair<int, int>> combinable_pairs(const DecoratedTree &t) {
  std::vector<std::pair<int, int>> out;
  for (auto i = t.edges.begin(); i != t.edges.end(); ++i)
    for (auto j = std::next(i); j != t.edges.end(); ++j)
      if (combinable(t, i->first, j->first))
        out.emplace_back(i->first, j->first);
  return out;
}

CombineResult combine(const DecoratedTree &t, int e1, int e2) {
  if (!combinable(t, e1, e2))
    throw NotCombinable("edges " + std::to_string(e1) + " and " +
                        std::to_string(e2));
  int v = shared_vertex(t, e1, e2);
  int v1 = t.other_end(e1, v);
  int v2 = t.other_end(e2, v);
  CombineResult res;
  res.tree = t;
  auto &tree = res.tree;
  TreeEdge joined{v1, v2, t.edges.at(e1).q, t.flag_mon(v1, e1),
                  t.flag_mon(v2, e2)};
  tree.vertices.erase(v);
  tree.edges.erase(e1);
  tree.edges.erase(e2);
  int id = std::min(e1, e2);
  tree.edges.emplace(id, std::move(joined));
  for (const auto &[eid, e] : t.edges)
    res.phi[eid] = (eid == e1 || eid == e2) ? id : eid;
  return res;
}

CombineResult combine_set(const DecoratedTree &t,
                          const std::vector<std::pair<int, int>> &pairs) {
  auto allowed = combinable_pairs(t);
  std::set<std::pair<int, int>> pset(allowed.begin(), allowed.end());
  for (auto [a, b] : pairs)
    if (!pset.count({std::min(a, b), std::max(a, b)}))
      throw NotCombinable("pair (" + std::to_string(a) + "," +
                          std::to_string(b) + ") is not combinable");
  CombineResult res;
  res.tree = t;
  for (const auto &[id, e] : t.edges)
    res.phi[id] = id;
  for (auto [a, b] : pairs) {
    auto step = combine(res.tree, res.phi.at(a), res.phi.at(b));
    for (auto &[old, cur] : res.phi)
      cur = step.phi.at(cur);
    res.tree = std::move(step.tree);
  }
  return res;
}

DecoratedTree minimal_form(const DecoratedTree &t) {
  auto rep = validate(t);
  if (!rep.pass)
    throw Invalid(rep.failures.front());
  return combine_set(t, combinable_pairs(t)).tree;
}

// -------------------------------------------------------- canonical form

namespace {

std::string encode(const DecoratedTree &t, int v, int parent_edge) {
  std::string s = "[" + t.vertices.at(v).to_string() + "|";
  for (int m : t.marks_at(v))
    s += "b" + std::to_string(m + 1) + "=" +
         t.marks[static_cast<std::size_t>(m)].mon.to_string() + ";";
  s += "|";
  std::vector<std::string> kids;
  for (int e : t.edges_at(v)) {
    if (e == parent_edge)
      continue;
    int w = t.other_end(e, v);
    kids.push_back("(" + t.edges.at(e).q.get_str() + ";" +
                   t.flag_mon(v, e).to_string() + ";" +
                   t.flag_mon(w, e).to_string() + ")" + encode(t, w, e));
  }
  std::sort(kids.begin(), kids.end());
  for (const auto &k : kids)
    s += k;
  return s + "]";
}

} // namespace

std::string canonical_form(const DecoratedTree &t) {
  std::string head = "d" + std::to_string(t.d) + "r" + std::to_string(t.r) +
                     "n" + std::to_string(t.marks.size()) + ":";
  if (!t.marks.empty())
    return head + encode(t, t.marks.front().vertex, -1);
  std::string best;
  bool first = true;
  for (const auto &[v, mu] : t.vertices) {
    std::string s = encode(t, v, -1);
    if (first || s < best)
      best = s;
    first = false;
  }
  return head + best;
}

// ----------------------------------------------------------- generators

DecoratedTree tree_from_edge(const EdgeClass &e) {
  DecoratedTree t;
  t.d = e.base.degree();
  t.r = e.base.r();
  t.vertices[0] = e.base.mu;
  t.vertices[1] = e.target.mu;
  t.edges[0] = TreeEdge{0, 1, e.q, e.base.sigma, e.target.sigma};
  t.marks = {{0, e.base.sigma}, {1, e.target.sigma}};
  return t;
}

DecoratedTree make_chain(const FixedSector &start,
                         const std::vector<ChainStep> &steps) {
  DecoratedTree t;
  t.d = start.degree();
  t.r = start.r();
  FixedSector cur = start;
  t.vertices[0] = cur.mu;
  for (std::size_t j = 0; j < steps.size(); ++j) {
    const auto &s = steps[j];
    EdgeClass e = make_edge(cur, s.from, s.to, s.mov, s.q);
    int a = static_cast<int>(j), b = static_cast<int>(j + 1);
    t.vertices[b] = e.target.mu;
    t.edges[a] = TreeEdge{a, b, e.q, cur.sigma, e.target.sigma};
    cur = e.target;
  }
  t.marks = {{0, start.sigma},
             {static_cast<int>(steps.size()), cur.sigma}};
  return t;
}

DecoratedTree random_chain(int d, int r, int max_edges, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) {
    return static_cast<std::size_t>(
        std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
  };
  auto mus = zpart_enumerate(d, r);
  for (;;) {
    auto mu = mus[pick(mus.size())];
    auto sigmas = multipartitions_of(mu);
    FixedSector start{mu, sigmas[pick(sigmas.size())]};
    FixedSector cur = start;
    std::vector<ChainStep> steps;
    int k = 1 + static_cast<int>(pick(static_cast<std::size_t>(max_edges)));
    for (int j = 0; j < k; ++j) {
      std::vector<ChainStep> options;
      std::vector<ChainStep> repeats;
      for (int from = 0; from <= r; ++from) {
        const auto &src = cur.sigma[static_cast<std::size_t>(from)];
        if (src.empty())
          continue;
        for (int to = 0; to <= r; ++to) {
          if (to == from)
            continue;
          for (const auto &mov : sub_multisets(src)) {
            int g = 0;
            for (int eta : mov.parts())
              g = std::gcd(g, eta);
            for (long num = 1; num <= 2; ++num) {
              BigRational q(num, g);
              q.canonicalize();
              ChainStep s{from, to, mov, q};
              options.push_back(s);
              if (!steps.empty() && steps.back().from == from &&
                  steps.back().to == to && steps.back().q == q)
                repeats.push_back(s);
            }
          }
        }
      }
      if (options.empty())
        break;
      bool rep = !repeats.empty() && pick(3) != 0;
      const auto &pool = rep ? repeats : options;
      ChainStep s = pool[pick(pool.size())];
      // q must keep q * eta integral for the chosen parts
      bool integral = true;
      for (int eta : s.mov.parts()) {
        BigRational b = s.q * eta;
        b.canonicalize();
        integral = integral && b.get_den() == 1;
      }
      if (!integral)
        continue;
      cur = make_edge(cur, s.from, s.to, s.mov, s.q).target;
      steps.push_back(s);
    }
    if (!steps.empty())
      return make_chain(start, steps);
  }
}

std::vector<DecoratedTree> enumerate_trees(int d, int r, int n, int beta) {
  if (d > 2 || r > 1 || n > 2 || beta > 1 || d < 1 || r < 0 || n < 0 ||
      beta < 0)
    throw CapExceeded("tree enumeration is limited to d<=2, r<=1, n<=2, beta<=1");
  std::map<std::string, DecoratedTree> found;
  auto add = [&](const DecoratedTree &t) {
    if (validate(t).pass)
      found.emplace(canonical_form(t), t);
  };
  // all assignments of mark monodromies for marks sitting at `vertex`
  std::function<void(DecoratedTree &, const std::vector<int> &, std::size_t)>
      assign = [&](DecoratedTree &t, const std::vector<int> &free_marks,
                   std::size_t j) {
        if (j == free_marks.size()) {
          add(t);
          return;
        }
        auto &m = t.marks[static_cast<std::size_t>(free_marks[j])];
        for (const auto &mon : multipartitions_of(t.vertices.at(m.vertex))) {
          m.mon = mon;
          assign(t, free_marks, j + 1);
        }
      };

  if (beta == 0) {
    for (const auto &mu : zpart_enumerate(d, r)) {
      DecoratedTree t;
      t.d = d;
      t.r = r;
      t.vertices[0] = mu;
      std::vector<int> all;
      for (int i = 0; i < n; ++i) {
        t.marks.push_back({0, Multipartition::ones(mu)});
        all.push_back(i);
      }
      assign(t, all, 0);
    }
  } else {
    for (const auto &s : enumerate_sectors(d, r)) {
      for (const auto &e : enumerate_edges(s, BigRational(1))) {
        if (e.beta != 1 || e.mov.size() != 1)
          continue;
        for (unsigned side = 0; side < (1U << n); ++side) {
          DecoratedTree t = tree_from_edge(e);
          t.marks.clear();
          std::vector<int> at_u, at_v;
          for (int i = 0; i < n; ++i) {
            int vtx = (side >> i) & 1U ? 1 : 0;
            t.marks.push_back({vtx, vtx == 0 ? e.base.sigma : e.target.sigma});
            (vtx == 0 ? at_u : at_v).push_back(i);
          }
          std::vector<int> free_marks;
          for (const auto *grp : {&at_u, &at_v})
            if (grp->size() >= 2)
              free_marks.insert(free_marks.end(), grp->begin(), grp->end());
          assign(t, free_marks, 0);
        }
      }
    }
  }
  std::vector<DecoratedTree> out;
  for (auto &[k, t] : found)
    out.push_back(std::move(t));
  return out;
}

} // namespace symcone
