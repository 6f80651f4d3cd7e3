#include "xtalk/cost.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <sstream>

namespace xtalk {

int cost_table::of(gate_kind k) const {
  int c = core[static_cast<size_t>(k)];
  if (c <= 0)
    throw error(std::string("cost table has no entry for ") + info(k).name);
  return c;
}

cost_table cost_table::crosstalk_defaults() {
  cost_table t;
  for (const kind_info& ki : all_kinds())
    t.core[static_cast<size_t>(ki.kind)] = ki.inverting ? 3 : 5;
  t.core[static_cast<size_t>(gate_kind::inv)] = 2;
  t.inverter_cost = 2;
  return t;
}

cost_table cost_table::cmos_defaults() {
  cost_table t; // zero cost marks "no such cell"
  auto set = [&](gate_kind k, int c) { t.core[static_cast<size_t>(k)] = c; };
  set(gate_kind::inv, 2);
  set(gate_kind::nand2, 4);
  set(gate_kind::nand3, 6);
  set(gate_kind::nor2, 4);
  set(gate_kind::nor3, 6);
  set(gate_kind::aoi21, 6);
  set(gate_kind::oai21, 6);
  set(gate_kind::and2, 6);
  set(gate_kind::and3, 8);
  set(gate_kind::or2, 6);
  set(gate_kind::or3, 8);
  t.inverter_cost = 2;
  return t;
}

cost_table parse_cost_table(const std::string& text, cost_table base) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos)
      line.resize(h);
    std::istringstream ls(line);
    std::string key, eq;
    long value;
    if (!(ls >> key))
      continue;
    if (!(ls >> eq >> value) || eq != "=")
      throw error("cost table line " + std::to_string(lineno) +
                  ": expected 'KIND = integer'");
    if (value <= 0)
      throw error("cost table line " + std::to_string(lineno) +
                  ": costs must be positive");
    auto k = kind_by_name(key);
    if (!k)
      k = kind_by_name("CT_" + key);
    if (!k)
      throw error("cost table line " + std::to_string(lineno) +
                  ": unknown kind '" + key + "'");
    if (*k == gate_kind::inv)
      base.inverter_cost = static_cast<int>(value);
    base.core[static_cast<size_t>(*k)] = static_cast<int>(value);
  }
  return base;
}

int transistor_count(const mapped_network& m, const cost_table& costs) {
  int t = 0;
  for (const mgate& g : m.gates)
    t += costs.of(g.kind);
  t += static_cast<int>(m.inverters.size()) * costs.inverter_cost;
  return t;
}

int gate_count(const mapped_network& m) {
  return static_cast<int>(m.gates.size());
}

cost_report report_cost(const mapped_network& m, const cost_table& costs,
                        const std::string& label) {
  cost_report r;
  r.label = label;
  r.transistors = transistor_count(m, costs);
  r.gates = gate_count(m);
  r.inverters = static_cast<int>(m.inverters.size());

  // per-output cone recount (shared logic counted in every cone it feeds)
  for (const moutput& o : m.outputs) {
    per_output_cost pc;
    pc.name = o.name;
    std::set<uint32_t> cone;
    std::set<msig> inverted;
    std::vector<mlit> work{o.driver};
    while (!work.empty()) {
      mlit l = work.back();
      work.pop_back();
      if (l.complemented && !l.src.is_const())
        inverted.insert(l.src);
      if (!l.src.is_gate() || !cone.insert(l.src.index).second)
        continue;
      for (const mlit& p : m.gates[l.src.index].pins)
        work.push_back(p);
    }
    for (uint32_t gi : cone)
      pc.transistors += costs.of(m.gates[gi].kind);
    pc.transistors += static_cast<int>(inverted.size()) * costs.inverter_cost;
    pc.gates = static_cast<int>(cone.size());
    r.per_output.push_back(std::move(pc));
  }
  return r;
}

int reduction_pct(int base, int ours) {
  if (base == 0)
    throw error("reduction: baseline is zero");
  double x = 100.0 * (base - ours) / base;
  return static_cast<int>(std::llround(x)); // halves away from zero
}

reduction_row make_reduction(const std::string& name, const std::string& io,
                             int base_t, int base_g, const cost_report& ours) {
  reduction_row row;
  row.name = name;
  row.io = io;
  row.base_transistors = base_t;
  row.base_gates = base_g;
  row.ours_transistors = ours.transistors;
  row.ours_gates = ours.gates;
  row.r_transistor_pct = reduction_pct(base_t, ours.transistors);
  row.r_gate_pct = reduction_pct(base_g, ours.gates);
  return row;
}

// -------------------------------------------------------------- CMOS baseline

namespace {

struct cover_cost {
  int transistors = 0;
  int gates = 0;
  bool output_inverter = false; ///< cell realizes the complement
};

// cells enumerated inverting-first so ties pick the NAND/NOR route
constexpr gate_kind kCmosOrder[] = {
    gate_kind::nand2, gate_kind::nand3, gate_kind::nor2,  gate_kind::nor3,
    gate_kind::aoi21, gate_kind::oai21, gate_kind::and2,  gate_kind::and3,
    gate_kind::or2,   gate_kind::or3,
};

// Shannon NAND-tree cost for functions no cell matches; complemented pins
// are charged one inverter each here (the caller shares input inverters)
struct tree_coster {
  const cost_table& costs;
  std::map<std::pair<uint64_t, unsigned>, cover_cost> memo;

  cover_cost run(uint64_t tt, unsigned nv) {
    uint64_t full = (uint64_t{1} << (uint64_t{1} << nv)) - 1;
    tt &= full;
    if (tt == 0 || tt == full)
      return {0, 0, false};
    auto key = std::make_pair(tt, nv);
    if (auto it = memo.find(key); it != memo.end())
      return it->second;

    cover_cost best{INT32_MAX, 0, false};
    // single literal?
    for (unsigned v = 0; v < nv; ++v) {
      uint64_t var_tt = 0;
      for (uint64_t i = 0; i < (uint64_t{1} << nv); ++i)
        if ((i >> v) & 1)
          var_tt |= uint64_t{1} << i;
      if (tt == var_tt)
        best = {0, 0, false};
      else if (tt == (~var_tt & full))
        best = {costs.inverter_cost, 0, false};
    }
    if (best.transistors == INT32_MAX) {
      // direct or complemented cell match
      for (gate_kind k : kCmosOrder) {
        int core = costs.core[static_cast<size_t>(k)];
        if (core <= 0 || info(k).arity != nv)
          continue;
        for (uint64_t target : {~tt & full, tt}) {
          auto bs = match_kind(target, nv, k);
          if (bs.empty())
            continue;
          int ncomp = INT32_MAX;
          for (const auto& b : bs)
            ncomp = std::min(ncomp, b.complemented_pins());
          bool inv_out = target != tt;
          int t = core + costs.inverter_cost * ncomp +
                  (inv_out ? costs.inverter_cost : 0);
          if (t < best.transistors)
            best = {t, 1, inv_out};
        }
      }
    }
    if (best.transistors == INT32_MAX) {
      // split on each variable; f = v·A + v'·B as a NAND2 pair into a NAND2
      for (unsigned v = 0; v < nv; ++v) {
        cover_cost a = run(restrict_tt(tt, nv, v, true), nv);
        cover_cost b = run(restrict_tt(tt, nv, v, false), nv);
        int nand2 = costs.core[static_cast<size_t>(gate_kind::nand2)];
        int t = a.transistors + b.transistors + 3 * nand2 +
                costs.inverter_cost;
        int g = a.gates + b.gates + 3;
        if (t < best.transistors)
          best = {t, g, false};
      }
    }
    memo[key] = best;
    return best;
  }

  static uint64_t restrict_tt(uint64_t tt, unsigned nv, unsigned v, bool val) {
    uint64_t out = 0;
    for (uint64_t i = 0; i < (uint64_t{1} << nv); ++i) {
      uint64_t j = val ? (i | (uint64_t{1} << v)) : (i & ~(uint64_t{1} << v));
      if ((tt >> j) & 1)
        out |= uint64_t{1} << i;
    }
    return out;
  }
};

} // namespace

cost_report cmos_baseline(const network& net, const cost_table& cmos) {
  cost_report r;
  r.label = "cmos";
  std::set<std::string> inverted_sources;
  tree_coster trees{cmos, {}};

  for (const node& n : net.nodes) {
    unsigned nv = static_cast<unsigned>(n.fanins.size());
    if (n.func.is_const())
      continue;
    if (auto l = n.func.as_single_literal()) {
      if (l->complemented)
        inverted_sources.insert(net.name_of(n.fanins[l->var]));
      continue;
    }
    if (nv > 6)
      throw error("cmos_baseline: node wider than 6 fanins; decompose first");
    uint64_t tt = n.func.truth_table(nv);
    uint64_t full = (uint64_t{1} << (uint64_t{1} << nv)) - 1;

    const pin_binding* chosen = nullptr;
    pin_binding chosen_store;
    bool chosen_invout = false;
    int best_local = INT32_MAX;
    for (gate_kind k : kCmosOrder) {
      int core = cmos.core[static_cast<size_t>(k)];
      if (core <= 0 || info(k).arity != nv)
        continue;
      for (bool inv_out : {true, false}) {
        uint64_t target = inv_out ? (~tt & full) : tt;
        for (const auto& b : match_kind(target, nv, k)) {
          int local = core + cmos.inverter_cost * b.complemented_pins() +
                      (inv_out ? cmos.inverter_cost : 0);
          if (local < best_local) {
            best_local = local;
            chosen_store = b;
            chosen = &chosen_store;
            chosen_invout = inv_out;
          }
        }
      }
    }

    if (chosen) {
      r.transistors += cmos.core[static_cast<size_t>(chosen->kind)];
      r.gates += 1;
      if (chosen_invout) {
        r.transistors += cmos.inverter_cost;
        r.inverters += 1;
      }
      for (unsigned j = 0; j < nv; ++j)
        if ((chosen->complement_mask >> j) & 1)
          inverted_sources.insert(
              net.name_of(n.fanins[chosen->slot_of_pin[j]]));
    } else {
      cover_cost c = trees.run(tt, nv);
      r.transistors += c.transistors;
      r.gates += c.gates;
    }
  }
  for (const output& o : net.outputs)
    if (o.complemented)
      inverted_sources.insert(net.name_of(o.driver));

  r.inverters += static_cast<int>(inverted_sources.size());
  r.transistors +=
      static_cast<int>(inverted_sources.size()) * cmos.inverter_cost;
  return r;
}

std::map<std::string, ref_entry> parse_refs(const std::string& text) {
  std::map<std::string, ref_entry> out;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos)
      line.resize(h);
    std::istringstream ls(line);
    std::string key, eq;
    long value;
    if (!(ls >> key))
      continue;
    if (!(ls >> eq >> value) || eq != "=")
      throw error("refs line " + std::to_string(lineno) +
                  ": expected 'name.field = integer'");
    auto dot = key.rfind('.');
    if (dot == std::string::npos)
      throw error("refs line " + std::to_string(lineno) +
                  ": expected 'name.field'");
    std::string name = key.substr(0, dot);
    std::string field = key.substr(dot + 1);
    ref_entry& e = out[name];
    int v = static_cast<int>(value);
    if (field == "cmos_transistors")
      e.cmos_transistors = v;
    else if (field == "cmos_gates")
      e.cmos_gates = v;
    else if (field == "existing_transistors")
      e.existing_transistors = v;
    else if (field == "existing_gates")
      e.existing_gates = v;
    else
      throw error("refs line " + std::to_string(lineno) + ": unknown field '" +
                  field + "'");
  }
  return out;
}

} // namespace xtalk
