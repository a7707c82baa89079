#include "coxcat/json_io.hpp"

#include <sstream>

namespace coxcat {

std::string poset_dot(const FinitePoset& p, const std::vector<std::string>& labels,
                      const std::vector<int>* ranks) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < p.size(); ++i)
    os << "  n" << i << " [label=\"" << labels[i] << "\"];\n";
  if (ranks) {
    int maxr = 0;
    for (int r : *ranks) maxr = std::max(maxr, r);
    for (int r = 0; r <= maxr; ++r) {
      os << "  { rank=same;";
      for (int i = 0; i < p.size(); ++i)
        if ((*ranks)[i] == r) os << " n" << i << ";";
      os << " }\n";
    }
  }
  for (auto [a, b] : p.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string element_string(const CoxeterGroup& G, const Element& w) {
  if (G.has_point_action()) {
    auto img = G.point_permutation(w);
    bool type_b = G.spec().family == Family::B;
    int pts = static_cast<int>(img.size());
    std::ostringstream os;
    std::vector<char> seen(pts + 1, 0);
    bool any = false;
    for (int s = 1; s <= pts; ++s) {
      if (seen[s]) continue;
      std::vector<int> cyc;
      int x = s;
      while (true) {
        if (x > 0 && x <= pts && seen[x]) break;
        if (x > 0) seen[x] = 1;
        cyc.push_back(x);
        int nxt = x > 0 ? img[x - 1] : -img[-x - 1];
        if (nxt == s) break;
        x = nxt;
        if (!type_b && x == s) break;
        if (static_cast<int>(cyc.size()) > 2 * pts) break;
      }
      if (cyc.size() <= 1) continue;
      any = true;
      os << "(";
      for (size_t i = 0; i < cyc.size(); ++i) os << (i ? "," : "") << cyc[i];
      os << ")";
    }
    return any ? os.str() : "e";
  }
  // reduced T-word by greedy peeling
  Element cur = w;
  int len = G.abs_length(cur);
  if (len == 0) return "e";
  std::ostringstream os;
  while (len > 0) {
    for (int t = 0; t < G.num_positive_roots(); ++t) {
      Element rest = G.multiply(G.reflection(t), cur);
      if (G.abs_length(rest) == len - 1) {
        os << "t" << t << (len > 1 ? "." : "");
        cur = rest;
        --len;
        break;
      }
    }
  }
  return os.str();
}

Json poset_to_json(const FinitePoset& p, const std::vector<std::string>& labels) {
  Json j;
  j["size"] = p.size();
  j["elements"] = labels;
  Json covers = Json::array();
  for (auto [a, b] : p.covers()) covers.push_back({a, b});
  j["covers"] = covers;
  return j;
}

FinitePoset poset_from_json(const Json& j) {
  std::vector<std::pair<int, int>> covers;
  for (const auto& e : j.at("covers")) covers.push_back({e.at(0), e.at(1)});
  return FinitePoset::from_covers(j.at("size"), covers);
}

Json nc_to_json(const NCLattice& nc) {
  const CoxeterGroup& G = nc.group();
  Json j;
  j["group"] = G.label();
  j["size"] = nc.size();
  Json elems = Json::array();
  for (int i = 0; i < nc.size(); ++i) {
    Json e;
    e["id"] = i;
    e["element"] = element_string(G, nc.element(i));
    e["length"] = nc.length(i);
    elems.push_back(e);
  }
  j["elements"] = elems;
  Json covers = Json::array();
  const auto& labels = nc.cover_labels();
  const auto& cv = nc.poset().covers();
  for (size_t i = 0; i < cv.size(); ++i) {
    Json e;
    e["from"] = cv[i].first;
    e["to"] = cv[i].second;
    e["reflection"] = labels[i];
    covers.push_back(e);
  }
  j["covers"] = covers;
  return j;
}

Json nck_to_json(const KDivisible& kd) {
  Json j;
  j["group"] = kd.nc().group().label();
  j["k"] = kd.k();
  j["size"] = kd.size();
  Json elems = Json::array();
  for (int i = 0; i < kd.size(); ++i) {
    Json e;
    e["id"] = i;
    e["multichain"] = kd.element(i);
    e["rank"] = kd.rank(i);
    elems.push_back(e);
  }
  j["elements"] = elems;
  Json covers = Json::array();
  for (auto [a, b] : kd.poset().covers()) {
    Json e;
    e["from"] = a;
    e["to"] = b;
    // recover the index and conjugated reflection of the cover
    for (const auto& cv : kd.covers_from(a))
      if (kd.id_of(cv.target) == b) {
        e["index"] = cv.index;
        e["reflection"] = cv.reflection;
        break;
      }
    covers.push_back(e);
  }
  j["covers"] = covers;
  return j;
}

Json partition_to_json(const SetPartition& p, bool signed_labels) {
  Json j;
  int m = p.size();
  Json blocks = Json::array();
  for (const auto& b : p.blocks) {
    Json blk = Json::array();
    for (int x : b) {
      if (signed_labels) {
        int n = m / 2;
        blk.push_back(x <= n ? x : n - x);
      } else {
        blk.push_back(x);
      }
    }
    blocks.push_back(blk);
  }
  j["blocks"] = blocks;
  Json angles = Json::array();
  for (int v = 1; v <= m; ++v) {
    Json a;
    a["vertex"] = v;
    a["turn"] = std::to_string(v - 1) + "/" + std::to_string(m);
    angles.push_back(a);
  }
  j["circular"] = angles;
  return j;
}

Json classical_to_json(const ClassicalKDiv& c) {
  Json j;
  j["n"] = c.n;
  j["k"] = c.k;
  j["type_b"] = c.type_b;
  j["size"] = c.elements.size();
  Json elems = Json::array();
  for (size_t i = 0; i < c.elements.size(); ++i) {
    Json e = partition_to_json(c.elements[i], c.type_b);
    e["id"] = i;
    e["rank"] = c.rank(static_cast<int>(i));
    elems.push_back(e);
  }
  j["elements"] = elems;
  Json covers = Json::array();
  for (auto [a, b] : c.poset.covers()) covers.push_back({a, b});
  j["covers"] = covers;
  return j;
}

Json chambers_to_json(const ShiArrangement& shi) {
  Json j;
  j["group"] = shi.rp->group().label();
  j["k"] = shi.k;
  Json chams = Json::array();
  for (const auto& c : shi.chambers) {
    Json e;
    e["levels"] = c.level;
    Json walls = Json::array();
    for (auto [r, lv] : c.walls) walls.push_back({r, lv});
    e["walls"] = walls;
    Json fl = Json::array(), cl = Json::array();
    for (int i = 0; i <= shi.k; ++i) {
      fl.push_back(c.floors[i]);
      cl.push_back(c.ceilings[i]);
    }
    e["floors"] = fl;
    e["ceilings"] = cl;
    e["bounded"] = c.bounded;
    chams.push_back(e);
  }
  j["chambers"] = chams;
  return j;
}

Json cluster_to_json(const ClusterComplex& cc) {
  Json j;
  j["group"] = cc.group().label();
  j["k"] = cc.k();
  Json verts = Json::array();
  for (int v = 0; v < cc.num_vertices(); ++v) {
    Json e;
    e["id"] = v;
    e["root"] = cc.vertex_root(v);
    e["color"] = cc.vertex_color(v);
    e["negative"] = cc.is_negative_vertex(v);
    verts.push_back(e);
  }
  j["vertices"] = verts;
  Json edges = Json::array();
  for (int u = 0; u < cc.num_vertices(); ++u)
    for (int v = u + 1; v < cc.num_vertices(); ++v)
      if (cc.crossing(u, v)) edges.push_back({u, v});
  j["crossing"] = edges;
  j["facets"] = cc.facets();
  Json f = Json::array();
  for (const auto& x : cc.f_vector()) f.push_back(x.str());
  j["f_vector"] = f;
  Json h = Json::array();
  for (const auto& x : cc.h_vector()) h.push_back(x.str());
  j["h_vector"] = h;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace coxcat
