#pragma once

#include <string>
#include <vector>

#include "linecover/graph.hpp"

namespace linecover {

struct OrderFamily {
  int universe_size = 0;
  std::vector<std::vector<int>> orders;  // each a permutation of [0, universe_size)
};

enum class OrderProperty { suitable3, mixing3 };

std::string order_property_name(OrderProperty p);
OrderProperty order_property_from_name(const std::string& name);

bool orders_well_formed(const OrderFamily& f);

// For every ordered choice of distinct a and pair {b,c}: some order has a
// after both b and c. Vacuously true when universe_size <= 2.
bool is_3_suitable(const OrderFamily& f);

// For every distinct triple: some order has each element extremal (before
// both or after both of the other two).
bool is_3_mixing(const OrderFamily& f);

// Exact minimum-size family by iterative deepening over ranked permutations;
// the returned family is the lexicographically least witness (orders compared
// as a sorted sequence of permutation ranks). Budget: C <= 8.
OrderFamily min_family_search(int C, OrderProperty p);

// Size-only variant sharing the same exhaustive engine; much faster than
// witness extraction for C = 7, 8.
int min_family_size(int C, OrderProperty p);

// Always-verified constructor: exact search for C <= 8, then recursive
// squaring candidates gated by the property checker, then deterministic
// seeded local search with escalating family size. Never returns an
// unverified family; throws ConstructionFailure if every strategy fails.
OrderFamily build_family(int C, OrderProperty p);

}  // namespace linecover
