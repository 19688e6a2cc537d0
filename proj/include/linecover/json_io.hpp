#pragma once

#include <json.hpp>

#include <string>
#include <utility>

#include "linecover/graph.hpp"
#include "linecover/orders.hpp"
#include "linecover/orientations.hpp"
#include "linecover/recognition.hpp"

namespace linecover {

// Graph: {"n": int, "edges": [[u,v],...]} with u < v, lexicographically
// sorted. Readers throw ParseError on malformed documents; with normalize set
// they reorder endpoints, sort, and drop duplicate edges instead.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j, bool normalize = false);

// Cover: {"target": <graph>, "class": <name>, "members": [[edge idx,...],...]}
nlohmann::json cover_to_json(const Cover& c);
Cover cover_from_json(const nlohmann::json& j, bool normalize = false);

// Orientation: {"graph": <graph>, "dirs": [[tail,head],...]} aligned with the
// canonical edge order.
nlohmann::json orientation_to_json(const Graph& g, const Orientation& o);
std::pair<Graph, Orientation> orientation_from_json(const nlohmann::json& j,
                                                    bool normalize = false);

// OrientationFamily: {"graph": <graph>, "kind": <name>,
//                     "orientations": [[[tail,head],...],...]}
nlohmann::json orientation_family_to_json(const OrientationFamily& fam);
OrientationFamily orientation_family_from_json(const nlohmann::json& j,
                                               bool normalize = false);

// OrderFamily: {"C": int, "orders": [[perm],...]}
nlohmann::json order_family_to_json(const OrderFamily& f);
OrderFamily order_family_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace linecover
