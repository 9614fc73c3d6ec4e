#include <symcone/errors.hpp>
#include <symcone/json_io.hpp>

namespace symcone {

Json to_json(const Partition &p) { return Json(p.parts()); }

Json to_json(const Multipartition &m) {
  Json j = Json::array();
  for (const auto &c : m.components())
    j.push_back(to_json(c));
  return j;
}

Json to_json(const OrderedZeroPartition &mu) { return Json(mu.entries); }

Json to_json(const Labeling &l) { return Json(l.labels); }

Json to_json(const BigRational &q) { return q.get_str(); }

Json to_json(const AlphaRat &f) {
  return Json{{"num", f.numerator().to_string()},
              {"den", f.denominator().to_string()}};
}

std::string zrat_numerator_string(const ZRat &f) {
  if (f.is_zero())
    return "0";
  std::string s;
  bool first = true;
  const auto &num = f.numerator();
  for (std::size_t i = num.size(); i-- > 0;) {
    if (num[i].is_zero())
      continue;
    s += first ? "" : " + ";
    first = false;
    std::string c = num[i].to_string();
    bool single = num[i].denominator_factors().empty() &&
                  num[i].numerator().terms().size() == 1;
    s += single ? c : "(" + c + ")";
    if (i >= 1)
      s += "*z";
    if (i > 1)
      s += "^" + std::to_string(i);
  }
  return s;
}

std::string zrat_denominator_string(const ZRat &f) {
  std::string s;
  for (const auto &[w, m] : f.poles()) {
    s += s.empty() ? "" : "*";
    s += w.is_zero() ? "z" : "(z - (" + w.to_string() + "))";
    if (m > 1)
      s += "^" + std::to_string(m);
  }
  if (f.has_irregular()) {
    s += s.empty() ? "" : "*";
    s += "(";
    const auto &p = f.irregular();
    for (std::size_t i = p.size(); i-- > 0;) {
      s += "(" + p[i].to_string() + ")";
      if (i >= 1)
        s += "*z";
      if (i > 1)
        s += "^" + std::to_string(i);
      if (i)
        s += " + ";
    }
    s += ")";
  }
  return s.empty() ? "1" : s;
}

Json to_json(const ZRat &f) {
  return Json{{"num", zrat_numerator_string(f)},
              {"den", zrat_denominator_string(f)}};
}

Json to_json(const FixedSector &s) {
  return Json{{"mu", to_json(s.mu)},
              {"sigma", to_json(s.sigma)},
              {"r_sigma", s.r_sigma()}};
}

Json to_json(const EdgeClass &e) {
  return Json{{"sector", to_json(e.base)},
              {"i1", e.i1},
              {"i2", e.i2},
              {"Mov", to_json(e.mov)},
              {"q", to_json(e.q)},
              {"beta", e.beta},
              {"w", e.w.to_string()},
              {"wbar", e.wbar.to_string()},
              {"target", to_json(e.target)}};
}

Json to_json(const SeriesIndex &idx) {
  Json k = Json::array();
  for (const auto &[p, e] : idx.k)
    k.push_back(Json{{"class", to_json(p)}, {"exp", e}});
  Json j{{"beta", idx.beta}, {"x", k}};
  if (!idx.m.empty())
    j["t"] = idx.m;
  return j;
}

Json to_json(const DecoratedTree &t) {
  Json vs = Json::array();
  for (const auto &[id, mu] : t.vertices)
    vs.push_back(Json{{"id", id}, {"veval", to_json(mu)}});
  Json es = Json::array();
  for (const auto &[id, e] : t.edges)
    es.push_back(Json{{"id", id},
                      {"ends", {e.u, e.v}},
                      {"q", to_json(e.q)},
                      {"mon", {to_json(e.mon_u), to_json(e.mon_v)}}});
  Json ms = Json::array();
  for (const auto &m : t.marks)
    ms.push_back(Json{{"vertex", m.vertex}, {"mon", to_json(m.mon)}});
  return Json{{"d", t.d}, {"r", t.r}, {"vertices", vs}, {"edges", es},
              {"marks", ms}};
}

Json to_json(const PoleReport &rep) {
  Json allowed = Json::array();
  for (const auto &w : rep.allowed)
    allowed.push_back(w.to_string());
  Json viol = Json::array();
  for (const auto &v : rep.violations)
    viol.push_back(
        Json{{"index", to_json(v.index)}, {"pole", v.pole}, {"order", v.order}});
  return Json{{"kind", "condition_I"},
              {"sector", to_json(rep.sector)},
              {"coefficients", rep.observed.size()},
              {"allowed", allowed},
              {"max_degree_at_infinity", rep.max_degree_at_infinity},
              {"violations", viol},
              {"verdict", rep.pass ? "PASS" : "FAIL"}};
}

Json to_json(const RecursionReport &rep, bool with_rows) {
  Json j{{"kind", "condition_II"},
         {"sector", to_json(rep.sector)},
         {"wbar", rep.wbar.to_string()},
         {"a", rep.a},
         {"rc", to_string(rep.normalization)},
         {"indices", rep.indices_checked},
         {"nonzero_rows", rep.rows.size()},
         {"verdict", rep.pass ? "PASS" : "FAIL"}};
  std::size_t bad = 0;
  for (const auto &row : rep.rows)
    bad += !row.equal;
  j["unequal_rows"] = bad;
  if (rep.probe) {
    Json p{{"factor", to_json(rep.probe->factor)}};
    if (rep.probe->r_sigma_power)
      p["r_sigma_power"] = *rep.probe->r_sigma_power;
    else
      p["r_sigma_power"] = nullptr;
    j["probe"] = p;
  } else if (!rep.pass) {
    j["probe"] = nullptr;
  }
  if (with_rows) {
    Json rows = Json::array();
    for (const auto &row : rep.rows)
      rows.push_back(Json{{"index", to_json(row.index)},
                          {"lhs", row.lhs.to_string()},
                          {"rhs", row.rhs.to_string()},
                          {"equal", row.equal}});
    j["rows"] = rows;
  }
  return j;
}

// ---------------------------------------------------------------- parsing

Partition partition_from_json(const Json &j) {
  if (!j.is_array())
    throw Invalid("partition must be an array");
  std::vector<int> raw;
  for (const auto &x : j) {
    if (!x.is_number_integer())
      throw Invalid("partition entries must be integers");
    raw.push_back(x.get<int>());
  }
  return Partition::from_parts(std::move(raw));
}

Multipartition multipartition_from_json(const Json &j) {
  if (!j.is_array())
    throw Invalid("multipartition must be an array of arrays");
  std::vector<Partition> comps;
  for (const auto &c : j)
    comps.push_back(partition_from_json(c));
  return Multipartition(std::move(comps));
}

BigRational rational_from_json(const Json &j) {
  BigRational q;
  if (j.is_number_integer()) {
    q = BigRational(j.get<long>());
  } else if (j.is_string()) {
    try {
      q = BigRational(j.get<std::string>());
    } catch (const std::exception &) {
      throw Invalid("bad rational '" + j.get<std::string>() + "'");
    }
  } else {
    throw Invalid("rational must be an integer or a string");
  }
  q.canonicalize();
  return q;
}

FixedSector sector_from_json(const Json &j) {
  if (j.is_object()) {
    if (!j.contains("sigma"))
      throw Invalid("sector needs a sigma field");
    auto sigma = multipartition_from_json(j.at("sigma"));
    if (j.contains("mu")) {
      OrderedZeroPartition mu{j.at("mu").get<std::vector<int>>()};
      return FixedSector::make(std::move(mu), std::move(sigma));
    }
    return FixedSector::make(std::move(sigma));
  }
  return FixedSector::make(multipartition_from_json(j));
}

DecoratedTree tree_from_json(const Json &j) {
  try {
    DecoratedTree t;
    t.d = j.at("d").get<int>();
    t.r = j.at("r").get<int>();
    for (const auto &v : j.at("vertices"))
      t.vertices[v.at("id").get<int>()] =
          OrderedZeroPartition{v.at("veval").get<std::vector<int>>()};
    for (const auto &e : j.at("edges")) {
      const auto &ends = e.at("ends");
      const auto &mon = e.at("mon");
      if (ends.size() != 2 || mon.size() != 2)
        throw Invalid("edge needs two ends and two flag monodromies");
      t.edges[e.at("id").get<int>()] =
          TreeEdge{ends[0].get<int>(), ends[1].get<int>(),
                   rational_from_json(e.at("q")),
                   multipartition_from_json(mon[0]),
                   multipartition_from_json(mon[1])};
    }
    if (j.contains("marks"))
      for (const auto &m : j.at("marks"))
        t.marks.push_back(
            {m.at("vertex").get<int>(), multipartition_from_json(m.at("mon"))});
    return t;
  } catch (const nlohmann::json::exception &e) {
    throw Invalid(std::string("malformed tree: ") + e.what());
  }
}

} // namespace symcone
