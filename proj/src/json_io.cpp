#include "linecover/json_io.hpp"

#include <algorithm>
#include <fstream>

#include "linecover/errors.hpp"

namespace linecover {

namespace {

using nlohmann::json;

void expect(bool cond, const std::string& msg) {
  if (!cond) throw ParseError(msg);
}

int read_int(const json& j, const char* key) {
  expect(j.is_object() && j.contains(key), std::string("missing key '") + key + "'");
  const json& v = j.at(key);
  expect(v.is_number_integer(), std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

const json& read_array(const json& j, const char* key) {
  expect(j.is_object() && j.contains(key), std::string("missing key '") + key + "'");
  const json& v = j.at(key);
  expect(v.is_array(), std::string("'") + key + "' must be an array");
  return v;
}

std::pair<int, int> read_int_pair(const json& v, const char* what) {
  expect(v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer(),
         std::string(what) + " must be a pair of integers");
  return {v[0].get<int>(), v[1].get<int>()};
}

json arc_pair(int a, int b) { return json::array({a, b}); }

}  // namespace

nlohmann::json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back(arc_pair(e.u, e.v));
  return json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j, bool normalize) {
  int n = read_int(j, "n");
  expect(n >= 0, "'n' must be nonnegative");
  const json& arr = read_array(j, "edges");
  std::vector<Edge> edges;
  edges.reserve(arr.size());
  for (const json& item : arr) {
    auto [a, b] = read_int_pair(item, "edge");
    expect(a >= 0 && a < n && b >= 0 && b < n, "edge endpoint out of range");
    expect(a != b, "self-loop");
    if (!normalize) {
      expect(a < b, "edge endpoints must satisfy u < v");
    } else if (a > b) {
      std::swap(a, b);
    }
    edges.push_back({a, b});
  }
  if (!normalize) {
    for (size_t i = 1; i < edges.size(); ++i) {
      expect(edges[i - 1] < edges[i], "edges must be strictly sorted");
    }
  }
  return Graph::build(n, std::move(edges), normalize);
}

nlohmann::json cover_to_json(const Cover& c) {
  json members = json::array();
  for (const auto& m : c.members) members.push_back(m);
  return json{{"target", graph_to_json(c.target)},
              {"class", cover_class_name(c.claimed_class)},
              {"members", std::move(members)}};
}

Cover cover_from_json(const nlohmann::json& j, bool normalize) {
  expect(j.is_object() && j.contains("target"), "missing key 'target'");
  Cover c;
  c.target = graph_from_json(j.at("target"), normalize);
  expect(j.contains("class") && j.at("class").is_string(), "'class' must be a string");
  try {
    c.claimed_class = cover_class_from_name(j.at("class").get<std::string>());
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
  const json& arr = read_array(j, "members");
  const int m = c.target.edge_count();
  for (const json& item : arr) {
    expect(item.is_array(), "each member must be an array of edge indices");
    std::vector<int> member;
    member.reserve(item.size());
    for (const json& idx : item) {
      expect(idx.is_number_integer(), "edge index must be an integer");
      int id = idx.get<int>();
      expect(id >= 0 && id < m, "edge index out of range");
      member.push_back(id);
    }
    if (normalize) {
      std::sort(member.begin(), member.end());
      member.erase(std::unique(member.begin(), member.end()), member.end());
    } else {
      for (size_t i = 1; i < member.size(); ++i) {
        expect(member[i - 1] < member[i], "member edge indices must be strictly sorted");
      }
    }
    c.members.push_back(std::move(member));
  }
  return c;
}

nlohmann::json orientation_to_json(const Graph& g, const Orientation& o) {
  json dirs = json::array();
  for (const Arc& a : o.dirs) dirs.push_back(arc_pair(a.tail, a.head));
  return json{{"graph", graph_to_json(g)}, {"dirs", std::move(dirs)}};
}

std::pair<Graph, Orientation> orientation_from_json(const nlohmann::json& j, bool normalize) {
  expect(j.is_object() && j.contains("graph"), "missing key 'graph'");
  Graph g = graph_from_json(j.at("graph"), normalize);
  const json& arr = read_array(j, "dirs");
  expect(static_cast<int>(arr.size()) == g.edge_count(),
         "'dirs' must list one arc per edge");
  Orientation o;
  o.dirs.reserve(arr.size());
  for (const json& item : arr) {
    auto [t, h] = read_int_pair(item, "arc");
    o.dirs.push_back({t, h});
  }
  expect(orientation_well_formed(g, o), "arcs do not match the canonical edge list");
  return {std::move(g), std::move(o)};
}

nlohmann::json orientation_family_to_json(const OrientationFamily& fam) {
  json members = json::array();
  for (const Orientation& o : fam.members) {
    json dirs = json::array();
    for (const Arc& a : o.dirs) dirs.push_back(arc_pair(a.tail, a.head));
    members.push_back(std::move(dirs));
  }
  return json{{"graph", graph_to_json(fam.graph)},
              {"kind", cover_kind_name(fam.claimed_kind)},
              {"orientations", std::move(members)}};
}

OrientationFamily orientation_family_from_json(const nlohmann::json& j, bool normalize) {
  expect(j.is_object() && j.contains("graph"), "missing key 'graph'");
  OrientationFamily fam;
  fam.graph = graph_from_json(j.at("graph"), normalize);
  expect(j.contains("kind") && j.at("kind").is_string(), "'kind' must be a string");
  try {
    fam.claimed_kind = cover_kind_from_name(j.at("kind").get<std::string>());
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
  const json& arr = read_array(j, "orientations");
  for (const json& entry : arr) {
    expect(entry.is_array() && static_cast<int>(entry.size()) == fam.graph.edge_count(),
           "each orientation must list one arc per edge");
    Orientation o;
    o.dirs.reserve(entry.size());
    for (const json& item : entry) {
      auto [t, h] = read_int_pair(item, "arc");
      o.dirs.push_back({t, h});
    }
    expect(orientation_well_formed(fam.graph, o),
           "arcs do not match the canonical edge list");
    fam.members.push_back(std::move(o));
  }
  return fam;
}

nlohmann::json order_family_to_json(const OrderFamily& f) {
  json orders = json::array();
  for (const auto& o : f.orders) orders.push_back(o);
  return json{{"C", f.universe_size}, {"orders", std::move(orders)}};
}

OrderFamily order_family_from_json(const nlohmann::json& j) {
  OrderFamily f;
  f.universe_size = read_int(j, "C");
  expect(f.universe_size >= 0, "'C' must be nonnegative");
  const json& arr = read_array(j, "orders");
  for (const json& entry : arr) {
    expect(entry.is_array(), "each order must be an array");
    std::vector<int> order;
    order.reserve(entry.size());
    for (const json& item : entry) {
      expect(item.is_number_integer(), "order entries must be integers");
      order.push_back(item.get<int>());
    }
    f.orders.push_back(std::move(order));
  }
  expect(orders_well_formed(f), "each order must be a permutation of 0..C-1");
  return f;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& ex) {
    throw ParseError(std::string("invalid JSON in '") + path + "': " + ex.what());
  }
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
}

}  // namespace linecover
