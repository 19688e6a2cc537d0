#include "linecover/orders.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

#include "linecover/errors.hpp"
#include "linecover/formulas.hpp"

namespace linecover {

std::string order_property_name(OrderProperty p) {
  return p == OrderProperty::suitable3 ? "3-suitable" : "3-mixing";
}

OrderProperty order_property_from_name(const std::string& name) {
  if (name == "3-suitable") return OrderProperty::suitable3;
  if (name == "3-mixing") return OrderProperty::mixing3;
  throw ParseError("unknown order property: " + name);
}

bool orders_well_formed(const OrderFamily& f) {
  if (f.universe_size < 0) return false;
  for (const auto& ord : f.orders) {
    if (static_cast<int>(ord.size()) != f.universe_size) return false;
    std::vector<char> seen(f.universe_size, 0);
    for (int x : ord) {
      if (x < 0 || x >= f.universe_size || seen[x]) return false;
      seen[x] = 1;
    }
  }
  return true;
}

namespace {

std::vector<std::vector<int>> position_tables(const OrderFamily& f) {
  std::vector<std::vector<int>> pos(f.orders.size(), std::vector<int>(f.universe_size, 0));
  for (size_t i = 0; i < f.orders.size(); ++i)
    for (int p = 0; p < f.universe_size; ++p) pos[i][f.orders[i][p]] = p;
  return pos;
}

}  // namespace

// direct quantifier checks, independent of the search machinery below

bool is_3_suitable(const OrderFamily& f) {
  if (!orders_well_formed(f)) return false;
  const int C = f.universe_size;
  if (C <= 2) return true;
  const auto pos = position_tables(f);
  for (int a = 0; a < C; ++a) {
    for (int b = 0; b < C; ++b) {
      if (b == a) continue;
      for (int c = b + 1; c < C; ++c) {
        if (c == a) continue;
        bool found = false;
        for (const auto& p : pos) {
          if (p[a] > p[b] && p[a] > p[c]) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool is_3_mixing(const OrderFamily& f) {
  if (!orders_well_formed(f)) return false;
  const int C = f.universe_size;
  if (C <= 2) return true;
  const auto pos = position_tables(f);
  for (int a = 0; a < C; ++a) {
    for (int b = 0; b < C; ++b) {
      if (b == a) continue;
      for (int c = b + 1; c < C; ++c) {
        if (c == a) continue;
        bool found = false;
        for (const auto& p : pos) {
          if ((p[a] > p[b] && p[a] > p[c]) || (p[a] < p[b] && p[a] < p[c])) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

namespace {

bool check_property(const OrderFamily& f, OrderProperty p) {
  return p == OrderProperty::suitable3 ? is_3_suitable(f) : is_3_mixing(f);
}

std::vector<int> identity_order(int C) {
  std::vector<int> id(C);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

// Exhaustive engine over all C! permutations. Constraint (a,{b,c}) is
// "a succeeds both" for 3-suitable and "a is extremal" for 3-mixing; a family
// has the property iff its coverage bitsets union to all-ones.
struct Engine {
  int C;
  OrderProperty prop;
  std::vector<std::vector<int>> perms;  // lexicographic order; rank = index
  int nperm = 0, pw = 0;
  int nc = 0, cw = 0;
  int per_perm = 0;  // every permutation covers this many constraints
  std::vector<std::array<int, 3>> cons;
  std::vector<uint64_t> cover;  // nperm x cw
  std::vector<uint64_t> inv;    // nc x pw

  Engine(int C_, OrderProperty p) : C(C_), prop(p) {
    if (C > 8) throw BudgetExceeded("exact order-family search budget is C <= 8");
    std::vector<int> perm = identity_order(C);
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    nperm = static_cast<int>(perms.size());
    pw = (nperm + 63) / 64;
    for (int a = 0; a < C; ++a)
      for (int b = 0; b < C; ++b) {
        if (b == a) continue;
        for (int c = b + 1; c < C; ++c) {
          if (c == a) continue;
          cons.push_back({a, b, c});
        }
      }
    nc = static_cast<int>(cons.size());
    cw = (nc + 63) / 64;
    const int triples = C * (C - 1) * (C - 2) / 6;
    per_perm = prop == OrderProperty::suitable3 ? triples : 2 * triples;
    cover.assign(static_cast<size_t>(nperm) * cw, 0);
    inv.assign(static_cast<size_t>(nc) * pw, 0);
    std::vector<int> pos(C);
    for (int r = 0; r < nperm; ++r) {
      for (int i = 0; i < C; ++i) pos[perms[r][i]] = i;
      for (int ci = 0; ci < nc; ++ci) {
        const auto& t = cons[ci];
        bool after = pos[t[0]] > pos[t[1]] && pos[t[0]] > pos[t[2]];
        bool before = pos[t[0]] < pos[t[1]] && pos[t[0]] < pos[t[2]];
        bool hit = prop == OrderProperty::suitable3 ? after : (after || before);
        if (hit) {
          cover[static_cast<size_t>(r) * cw + (ci >> 6)] |= 1ull << (ci & 63);
          inv[static_cast<size_t>(ci) * pw + (r >> 6)] |= 1ull << (r & 63);
        }
      }
    }
  }

  const uint64_t* cover_row(int r) const { return &cover[static_cast<size_t>(r) * cw]; }
  const uint64_t* inv_row(int ci) const { return &inv[static_cast<size_t>(ci) * pw]; }

  bool identity_covers_all() const {
    int cnt = 0;
    for (int w = 0; w < cw; ++w) cnt += __builtin_popcountll(cover_row(0)[w]);
    return cnt == nc;
  }

  int new_coverage(int r, const std::vector<uint64_t>& U) const {
    const uint64_t* row = cover_row(r);
    int cnt = 0;
    for (int w = 0; w < cw; ++w) cnt += __builtin_popcountll(row[w] & U[w]);
    return cnt;
  }

  // lowest rank >= min_rank of a permutation covering all of U, or -1
  int single_cover_rank(const std::vector<uint64_t>& U, int min_rank) const {
    std::vector<uint64_t> acc(pw, ~0ull);
    // mask off ranks below min_rank and past nperm
    for (int w = 0; w < (min_rank >> 6); ++w) acc[w] = 0;
    if (min_rank < nperm) acc[min_rank >> 6] &= ~0ull << (min_rank & 63);
    int tail = nperm & 63;
    if (tail) acc[pw - 1] &= (1ull << tail) - 1;
    for (int w = 0; w < cw; ++w) {
      uint64_t bits = U[w];
      while (bits) {
        int ci = (w << 6) + __builtin_ctzll(bits);
        bits &= bits - 1;
        const uint64_t* row = inv_row(ci);
        bool alive = false;
        for (int pwi = 0; pwi < pw; ++pwi) {
          acc[pwi] &= row[pwi];
          alive = alive || acc[pwi] != 0;
        }
        if (!alive) return -1;
      }
    }
    for (int pwi = 0; pwi < pw; ++pwi)
      if (acc[pwi]) return (pwi << 6) + __builtin_ctzll(acc[pwi]);
    return -1;
  }

  // DFS over strictly ascending permutation ranks after the fixed identity.
  // heuristic=true orders candidates by fresh coverage (fast SAT detection);
  // heuristic=false scans ranks ascending, so the first full solution is the
  // lexicographically least witness. Valid only at k = minimum size, where
  // every member of a solution must contribute fresh coverage.
  bool dfs(int depth, int k, std::vector<uint64_t>& U, int ucount, int min_rank,
           std::vector<int>& chosen, bool heuristic) {
    if (ucount == 0) return true;  // cannot happen at minimum k before depth k
    if (depth == k) return false;
    if (static_cast<long long>(ucount) > static_cast<long long>(per_perm) * (k - depth))
      return false;
    if (depth == k - 1) {
      int r = single_cover_rank(U, min_rank);
      if (r < 0) return false;
      chosen.push_back(r);
      return true;
    }
    std::vector<int> cand;
    cand.reserve(nperm - min_rank);
    if (heuristic) {
      std::vector<std::pair<int, int>> scored;
      for (int r = min_rank; r < nperm; ++r) {
        int s = new_coverage(r, U);
        if (s > 0) scored.push_back({-s, r});
      }
      std::sort(scored.begin(), scored.end());
      for (auto& sc : scored) cand.push_back(sc.second);
    } else {
      for (int r = min_rank; r < nperm; ++r)
        if (new_coverage(r, U) > 0) cand.push_back(r);
    }
    std::vector<uint64_t> next(cw);
    for (int r : cand) {
      const uint64_t* row = cover_row(r);
      int ncount = 0;
      for (int w = 0; w < cw; ++w) {
        next[w] = U[w] & ~row[w];
        ncount += __builtin_popcountll(next[w]);
      }
      chosen.push_back(r);
      if (dfs(depth + 1, k, next, ncount, r + 1, chosen, heuristic)) return true;
      chosen.pop_back();
    }
    return false;
  }

  bool feasible(int k, std::vector<int>& chosen, bool heuristic) {
    chosen.clear();
    chosen.push_back(0);  // identity, up to relabeling
    if (k == 1) return identity_covers_all();
    std::vector<uint64_t> U(cw, 0);
    int ucount = 0;
    const uint64_t* row = cover_row(0);
    for (int w = 0; w < cw; ++w) {
      uint64_t full = ~0ull;
      if (w == cw - 1 && (nc & 63)) full = (1ull << (nc & 63)) - 1;
      U[w] = full & ~row[w];
      ucount += __builtin_popcountll(U[w]);
    }
    return dfs(1, k, U, ucount, 1, chosen, heuristic);
  }

  OrderFamily family_from_ranks(const std::vector<int>& ranks) const {
    OrderFamily f;
    f.universe_size = C;
    for (int r : ranks) f.orders.push_back(perms[r]);
    return f;
  }
};

std::mutex cache_mutex;
std::map<std::pair<int, int>, int> size_cache;
std::map<std::pair<int, int>, OrderFamily> lex_cache;
std::map<std::pair<int, int>, OrderFamily> build_cache;

int prop_key(OrderProperty p) { return p == OrderProperty::suitable3 ? 0 : 1; }

int min_size_impl(int C, OrderProperty p) {
  Engine eng(C, p);
  std::vector<int> chosen;
  for (int k = 1; k <= C; ++k) {
    if (eng.feasible(k, chosen, /*heuristic=*/true)) return k;
  }
  throw std::logic_error("no order family found up to size C");
}

// deterministic first witness at the minimum size (heuristic candidate order)
OrderFamily min_witness_fast(int C, OrderProperty p) {
  Engine eng(C, p);
  std::vector<int> chosen;
  for (int k = 1; k <= C; ++k) {
    if (eng.feasible(k, chosen, /*heuristic=*/true)) return eng.family_from_ranks(chosen);
  }
  throw std::logic_error("no order family found up to size C");
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// simulated annealing over k orders; cost = uncovered constraint count
struct LocalSearch {
  int C, k;
  OrderProperty prop;
  std::vector<std::array<int, 3>> cons;
  std::vector<std::vector<int>> with_elem;  // constraint ids touching an element
  std::vector<std::vector<int>> order, pos;  // k x C
  std::vector<std::vector<char>> covered;    // k x nc
  std::vector<int> count;                    // covering orders per constraint
  std::vector<int> stamp;
  int epoch = 0;
  int uncovered = 0;
  std::mt19937_64 rng;

  LocalSearch(int C_, OrderProperty p, int k_, uint64_t seed)
      : C(C_), k(k_), prop(p), rng(seed) {
    for (int a = 0; a < C; ++a)
      for (int b = 0; b < C; ++b) {
        if (b == a) continue;
        for (int c = b + 1; c < C; ++c) {
          if (c == a) continue;
          cons.push_back({a, b, c});
        }
      }
    with_elem.assign(C, {});
    for (int ci = 0; ci < static_cast<int>(cons.size()); ++ci) {
      with_elem[cons[ci][0]].push_back(ci);
      with_elem[cons[ci][1]].push_back(ci);
      with_elem[cons[ci][2]].push_back(ci);
    }
    stamp.assign(cons.size(), -1);
  }

  int rnd(int bound) { return static_cast<int>(rng() % static_cast<uint64_t>(bound)); }

  bool eval(int o, int ci) const {
    const auto& t = cons[ci];
    const auto& p = pos[o];
    bool after = p[t[0]] > p[t[1]] && p[t[0]] > p[t[2]];
    if (prop == OrderProperty::suitable3) return after;
    bool before = p[t[0]] < p[t[1]] && p[t[0]] < p[t[2]];
    return after || before;
  }

  void init() {
    order.assign(k, identity_order(C));
    for (int o = 1; o < k; ++o)
      for (int i = C - 1; i > 0; --i) std::swap(order[o][i], order[o][rnd(i + 1)]);
    pos.assign(k, std::vector<int>(C, 0));
    for (int o = 0; o < k; ++o)
      for (int i = 0; i < C; ++i) pos[o][order[o][i]] = i;
    covered.assign(k, std::vector<char>(cons.size(), 0));
    count.assign(cons.size(), 0);
    uncovered = 0;
    for (int ci = 0; ci < static_cast<int>(cons.size()); ++ci) {
      for (int o = 0; o < k; ++o) {
        covered[o][ci] = eval(o, ci);
        count[ci] += covered[o][ci];
      }
      if (count[ci] == 0) ++uncovered;
    }
  }

  // re-evaluate constraints touching x or y against order o; returns cost delta
  int refresh(int o, int x, int y) {
    int delta = 0;
    ++epoch;
    for (int pass = 0; pass < 2; ++pass) {
      for (int ci : with_elem[pass == 0 ? x : y]) {
        if (stamp[ci] == epoch) continue;
        stamp[ci] = epoch;
        char now = eval(o, ci);
        if (now == covered[o][ci]) continue;
        if (now) {
          if (count[ci]++ == 0) {
            --uncovered;
            --delta;
          }
        } else {
          if (--count[ci] == 0) {
            ++uncovered;
            ++delta;
          }
        }
        covered[o][ci] = now;
      }
    }
    return delta;
  }

  void apply_swap(int o, int i, int j) {
    int x = order[o][i], y = order[o][j];
    std::swap(order[o][i], order[o][j]);
    pos[o][x] = j;
    pos[o][y] = i;
  }

  std::optional<OrderFamily> run(long long iters) {
    init();
    if (uncovered == 0) return extract();
    double t0 = 1.8, t1 = 0.02;
    double decay = std::pow(t1 / t0, 1.0 / static_cast<double>(iters));
    double temp = t0;
    for (long long it = 0; it < iters; ++it, temp *= decay) {
      int o = rnd(k);
      int i = rnd(C), j = rnd(C);
      if (i == j) continue;
      int x = order[o][i], y = order[o][j];
      apply_swap(o, i, j);
      int delta = refresh(o, x, y);
      if (uncovered == 0) return extract();
      if (delta > 0) {
        double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (draw >= std::exp(-delta / temp)) {
          apply_swap(o, i, j);
          refresh(o, x, y);
        }
      }
    }
    return std::nullopt;
  }

  OrderFamily extract() const {
    OrderFamily f;
    f.universe_size = C;
    f.orders = order;
    return f;
  }
};

OrderFamily everyone_last(int C) {
  OrderFamily f;
  f.universe_size = C;
  for (int i = 0; i < C; ++i) {
    std::vector<int> ord;
    for (int x = 0; x < C; ++x)
      if (x != i) ord.push_back(x);
    ord.push_back(i);
    f.orders.push_back(std::move(ord));
  }
  return f;
}

// Candidate on a pair universe from a verified base family: per base order,
// primary comparison by that order on the first coordinate with same-order
// ties on the second; one extra order keyed on the second coordinate by the
// first base order with a reversed first-coordinate tie-break. Verification
// gates the candidate; nothing here is assumed correct.
OrderFamily squaring_candidate(const OrderFamily& base, int C) {
  const int s = base.universe_size;
  const auto pos = position_tables(base);
  OrderFamily out;
  out.universe_size = C;
  std::vector<int> elems(C);
  std::iota(elems.begin(), elems.end(), 0);
  for (size_t i = 0; i < base.orders.size(); ++i) {
    std::vector<int> ord = elems;
    std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) {
      int a1 = a / s, a2 = a % s, b1 = b / s, b2 = b % s;
      if (pos[i][a1] != pos[i][b1]) return pos[i][a1] < pos[i][b1];
      return pos[i][a2] < pos[i][b2];
    });
    out.orders.push_back(std::move(ord));
  }
  std::vector<int> extra = elems;
  std::stable_sort(extra.begin(), extra.end(), [&](int a, int b) {
    int a1 = a / s, a2 = a % s, b1 = b / s, b2 = b % s;
    if (pos[0][a2] != pos[0][b2]) return pos[0][a2] < pos[0][b2];
    return pos[0][a1] > pos[0][b1];
  });
  out.orders.push_back(std::move(extra));
  return out;
}

}  // namespace

int min_family_size(int C, OrderProperty p) {
  if (C < 0) throw std::invalid_argument("negative universe");
  if (C > 8) throw BudgetExceeded("min_family_search budget is C <= 8");
  if (C <= 2) return 1;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_pair(C, prop_key(p));
  auto it = size_cache.find(key);
  if (it != size_cache.end()) return it->second;
  int size = min_size_impl(C, p);
  size_cache[key] = size;
  return size;
}

OrderFamily min_family_search(int C, OrderProperty p) {
  if (C < 0) throw std::invalid_argument("negative universe");
  if (C > 8) throw BudgetExceeded("min_family_search budget is C <= 8");
  if (C == 0) return OrderFamily{0, {{}}};
  if (C <= 2) return OrderFamily{C, {identity_order(C)}};
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_pair(C, prop_key(p));
  auto it = lex_cache.find(key);
  if (it != lex_cache.end()) return it->second;
  Engine eng(C, p);
  std::vector<int> chosen;
  OrderFamily out;
  for (int k = 1; k <= C; ++k) {
    if (eng.feasible(k, chosen, /*heuristic=*/false)) {
      out = eng.family_from_ranks(chosen);
      break;
    }
  }
  if (out.orders.empty()) throw std::logic_error("exhaustive search found nothing");
  if (!check_property(out, p)) throw std::logic_error("search witness fails its checker");
  lex_cache[key] = out;
  return out;
}

OrderFamily build_family(int C, OrderProperty p) {
  if (C < 1) {
    if (C == 0) return OrderFamily{0, {{}}};
    throw std::invalid_argument("universe size must be >= 0");
  }
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = build_cache.find(std::make_pair(C, prop_key(p)));
    if (it != build_cache.end()) return it->second;
  }
  OrderFamily result;
  if (C <= 2) {
    result = OrderFamily{C, {identity_order(C)}};
  } else if (C <= 8) {
    result = min_witness_fast(C, p);
  } else {
    const int s = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(C))));
    OrderFamily base = build_family(s, p);
    OrderFamily cand = squaring_candidate(base, C);
    if (check_property(cand, p)) {
      result = cand;
    } else {
      int start = ceil_lg_lg(C) + 1;
      if (s <= 8) start = std::max(start, static_cast<int>(base.orders.size()));
      const long long iters = C <= 32 ? 400000 : 120000;
      for (int size = start; size < C && result.orders.empty(); ++size) {
        for (int restart = 0; restart < 8 && result.orders.empty(); ++restart) {
          uint64_t seed = splitmix64(
              (static_cast<uint64_t>(C) << 40) ^ (static_cast<uint64_t>(size) << 20) ^
              (static_cast<uint64_t>(restart) << 4) ^ static_cast<uint64_t>(prop_key(p)));
          LocalSearch ls(C, p, size, seed);
          auto found = ls.run(iters);
          if (found && check_property(*found, p)) result = *found;
        }
      }
      if (result.orders.empty()) result = everyone_last(C);
    }
  }
  if (!check_property(result, p)) {
    throw ConstructionFailure("order family construction failed verification for C = " +
                              std::to_string(C) + " (" + order_property_name(p) + ")");
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  build_cache[std::make_pair(C, prop_key(p))] = result;
  return result;
}

}  // namespace linecover
