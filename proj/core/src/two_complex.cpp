#include "plength/two_complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace plength {

namespace {

// Endpoints of an oriented edge reference: +k runs edge k-1 forward.
std::pair<int, int> oriented_ends(const TwoComplex& c, Letter ref) {
  int e = gen_of(ref);
  if (e >= static_cast<int>(c.edges.size()))
    throw std::invalid_argument("edge reference out of range");
  auto [s, t] = c.edges[static_cast<size_t>(e)];
  return sign_of(ref) > 0 ? std::make_pair(s, t) : std::make_pair(t, s);
}

void check_closed_path(const TwoComplex& c, const Word& w) {
  if (w.empty()) throw std::invalid_argument("face has empty boundary");
  int start = oriented_ends(c, w.front()).first;
  int cur = start;
  for (Letter ref : w) {
    auto [s, t] = oriented_ends(c, ref);
    if (s != cur) throw std::invalid_argument("face boundary is not an edge path");
    cur = t;
  }
  if (cur != start) throw std::invalid_argument("face boundary path does not close");
}

}  // namespace

void TwoComplex::validate() const {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  for (auto [s, t] : edges)
    if (s < 0 || s >= vertex_count || t < 0 || t >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
  for (const Word& f : faces) {
    if (f.size() != 2 && f.size() != 3)
      throw std::invalid_argument("face length must be 2 or 3");
    check_closed_path(*this, f);
  }
  for (const auto& [v, label] : isotropy) {
    if (v < 0 || v >= vertex_count) throw std::invalid_argument("isotropy vertex out of range");
    (void)label;
  }
}

TwoComplex from_presentation(const Presentation& p) {
  p.validate();
  for (const Word& r : p.relators)
    if ((r.size() != 2 && r.size() != 3) || !is_cyclically_reduced(r))
      throw std::invalid_argument("relator is not a cyclically reduced bigon or triangle");
  TwoComplex c;
  c.vertex_count = 1;
  c.edges.assign(static_cast<size_t>(p.generator_count()), {0, 0});
  c.faces = p.relators;
  c.validate();
  return c;
}

TwoComplex cover(const TwoComplex& c, const CosetTable& t) {
  c.validate();
  if (c.vertex_count != 1)
    throw std::invalid_argument("cover requires a one-vertex base complex");
  if (static_cast<int>(c.edges.size()) != t.generator_count())
    throw std::invalid_argument("edge count does not match coset table generators");
  int d = t.index();
  TwoComplex out;
  out.vertex_count = d;
  // Edge e over sheet s has id e*d + s and runs from s to s.e.
  for (int e = 0; e < static_cast<int>(c.edges.size()); ++e)
    for (int s = 0; s < d; ++s) out.edges.emplace_back(s, t.act(s, e + 1));
  for (const Word& f : c.faces)
    for (int s = 0; s < d; ++s) {
      Word lifted;
      int cur = s;
      for (Letter ref : f) {
        int e = gen_of(ref);
        if (sign_of(ref) > 0) {
          lifted.push_back(e * d + cur + 1);
          cur = t.act(cur, e + 1);
        } else {
          int prev = t.act(cur, -(e + 1));
          lifted.push_back(-(e * d + prev + 1));
          cur = prev;
        }
      }
      out.faces.push_back(std::move(lifted));
    }
  if (!c.isotropy.empty()) {
    auto it = c.isotropy.find(0);
    if (it != c.isotropy.end())
      for (int s = 0; s < d; ++s) out.isotropy[s] = it->second;
  }
  out.validate();
  return out;
}

ContractResult contract_tree(const TwoComplex& c, const std::vector<int>& tree_edges) {
  c.validate();
  std::vector<char> in_tree(c.edges.size(), 0);
  for (int e : tree_edges) {
    if (e < 0 || e >= static_cast<int>(c.edges.size()))
      throw std::invalid_argument("tree edge index out of range");
    if (in_tree[static_cast<size_t>(e)])
      throw std::invalid_argument("tree edge listed twice");
    in_tree[static_cast<size_t>(e)] = 1;
  }

  // Union-find over vertices; a tree edge joining an already joined pair
  // would close a cycle.
  std::vector<int> parent(static_cast<size_t>(c.vertex_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  };
  for (int e : tree_edges) {
    auto [s, t] = c.edges[static_cast<size_t>(e)];
    int rs = find(s), rt = find(t);
    if (rs == rt) throw std::invalid_argument("tree contains a cycle");
    parent[static_cast<size_t>(std::max(rs, rt))] = std::min(rs, rt);
  }

  // Component roots become the new vertices, numbered in root order.
  std::vector<int> new_vertex(static_cast<size_t>(c.vertex_count), -1);
  int nv = 0;
  for (int v = 0; v < c.vertex_count; ++v)
    if (find(v) == v) new_vertex[static_cast<size_t>(v)] = nv++;
  auto mapped = [&](int v) { return new_vertex[static_cast<size_t>(find(v))]; };

  ContractResult result;
  result.complex.vertex_count = nv;
  std::vector<int> new_edge(c.edges.size(), -1);
  for (size_t e = 0; e < c.edges.size(); ++e) {
    if (in_tree[e]) continue;
    new_edge[e] = static_cast<int>(result.complex.edges.size());
    result.complex.edges.emplace_back(mapped(c.edges[e].first), mapped(c.edges[e].second));
  }
  for (const Word& f : c.faces) {
    Word w;
    for (Letter ref : f) {
      int e = new_edge[static_cast<size_t>(gen_of(ref))];
      if (e >= 0) w.push_back(make_letter(e, sign_of(ref) > 0));
    }
    if (w.size() >= 2) {
      result.complex.faces.push_back(std::move(w));
    } else {
      ++result.dropped_faces;
      result.dropped_face_words.push_back(std::move(w));
    }
  }
  for (const auto& [v, label] : c.isotropy)
    result.complex.isotropy.emplace(mapped(v), label);  // first label per class wins
  result.complex.validate();
  return result;
}

TwoComplex attach_cones(const TwoComplex& c, const std::vector<EdgePath>& paths,
                        const std::vector<std::string>& labels) {
  c.validate();
  if (labels.size() != paths.size())
    throw std::invalid_argument("one isotropy label required per cone");
  TwoComplex out = c;
  for (size_t i = 0; i < paths.size(); ++i) {
    const std::vector<Letter>& path = paths[i].edges;
    if (path.empty()) throw std::invalid_argument("cone path must be nonempty");
    // Walk the path, checking that consecutive edges chain up.
    std::vector<int> stops;  // vertices visited, path length + 1 of them
    stops.push_back(oriented_ends(out, path.front()).first);
    for (Letter ref : path) {
      auto [s, t] = oriented_ends(out, ref);
      if (s != stops.back()) throw std::invalid_argument("cone path edges do not chain");
      stops.push_back(t);
    }
    bool closed = stops.front() == stops.back();
    int apex = out.vertex_count++;
    out.isotropy[apex] = labels[i];
    // Cone edge j runs from the apex to the j-th stop; a closed path reuses
    // the first cone edge as the last.
    size_t distinct = closed ? stops.size() - 1 : stops.size();
    int first_cone = static_cast<int>(out.edges.size());
    for (size_t j = 0; j < distinct; ++j)
      out.edges.emplace_back(apex, stops[j]);
    for (size_t j = 0; j < path.size(); ++j) {
      int down = first_cone + static_cast<int>(j);
      int up = first_cone + static_cast<int>((j + 1) % distinct);
      if (!closed) up = first_cone + static_cast<int>(j + 1);
      out.faces.push_back({down + 1, path[j], -(up + 1)});
    }
  }
  out.validate();
  return out;
}

long long euler_char(const TwoComplex& c) {
  return static_cast<long long>(c.vertex_count) - static_cast<long long>(c.edges.size()) +
         static_cast<long long>(c.faces.size());
}

Presentation one_vertex_presentation(const TwoComplex& c) {
  c.validate();
  if (c.vertex_count != 1)
    throw std::invalid_argument("presentation extraction requires a one-vertex complex");
  Presentation p;
  for (size_t e = 0; e < c.edges.size(); ++e)
    p.generator_names.push_back("e" + std::to_string(e + 1));
  p.relators = c.faces;
  p.validate();
  return p;
}

std::string to_dot(const TwoComplex& c) {
  std::ostringstream os;
  os << "digraph skeleton {\n";
  for (int v = 0; v < c.vertex_count; ++v) {
    os << "  v" << v;
    auto it = c.isotropy.find(v);
    if (it != c.isotropy.end()) os << " [label=\"v" << v << ":" << it->second << "\"]";
    os << ";\n";
  }
  for (size_t e = 0; e < c.edges.size(); ++e)
    os << "  v" << c.edges[e].first << " -> v" << c.edges[e].second << " [label=\"e" << e + 1
       << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_json_string(const TwoComplex& c) {
  nlohmann::json j;
  j["vertex_count"] = c.vertex_count;
  nlohmann::json edges = nlohmann::json::array();
  for (auto [s, t] : c.edges) edges.push_back({s, t});
  j["edges"] = edges;
  nlohmann::json faces = nlohmann::json::array();
  for (const Word& f : c.faces) faces.push_back(f);
  j["faces"] = faces;
  nlohmann::json iso = nlohmann::json::object();
  for (const auto& [v, label] : c.isotropy) iso[std::to_string(v)] = label;
  j["isotropy"] = iso;
  return j.dump();
}

}  // namespace plength
