#include "xtalk/mapper.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace xtalk {

namespace {

// support of f as an ordered slot list
std::vector<uint32_t> support_vars(const sop& f) {
  std::vector<uint32_t> vars;
  for (uint64_t m = f.support(); m;) {
    vars.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return vars;
}

// truth table of f over its support, compressed to dense bit positions
uint64_t dense_tt(const sop& f, const std::vector<uint32_t>& vars) {
  std::vector<uint32_t> to_dense(64, 0);
  for (size_t k = 0; k < vars.size(); ++k)
    to_dense[vars[k]] = static_cast<uint32_t>(k);
  return f.remapped(to_dense).truth_table(static_cast<unsigned>(vars.size()));
}

constexpr uint64_t kXor2 = 0x6, kXnor2 = 0x9;
constexpr uint64_t kXor3 = 0x96, kXnor3 = 0x69;

} // namespace

std::optional<gate_match> classify(const sop& f, const gate_library& lib) {
  auto vars = support_vars(f);
  if (vars.size() > 3)
    throw error("classify: more than 3 fanins");
  if (vars.size() < 2)
    return std::nullopt;
  uint64_t tt = dense_tt(f, vars);
  unsigned nv = static_cast<unsigned>(vars.size());

  std::optional<gate_match> best;
  int best_comp = 0;
  for (gate_kind k : lib.members) {
    if (info(k).arity != nv)
      continue;
    for (const pin_binding& b : match_kind(tt, nv, k)) {
      int nc = b.complemented_pins();
      if (best && nc >= best_comp)
        continue;
      gate_match gm;
      gm.kind = k;
      for (unsigned j = 0; j < nv; ++j)
        gm.pins.push_back(
            {vars[b.slot_of_pin[j]], ((b.complement_mask >> j) & 1) != 0});
      best = std::move(gm);
      best_comp = nc;
    }
  }
  return best;
}

std::optional<literal> find_common_literal(const sop& f,
                                           const gate_library& lib) {
  if (f.cubes.size() < 2)
    return std::nullopt;
  uint64_t pos = ~uint64_t{0}, neg = ~uint64_t{0};
  for (const cube& c : f.cubes) {
    pos &= c.pos;
    neg &= c.neg;
  }
  std::vector<literal> cands;
  for (uint64_t m = pos; m;) {
    cands.push_back({static_cast<uint32_t>(std::countr_zero(m)), false});
    m &= m - 1;
  }
  for (uint64_t m = neg; m;) {
    cands.push_back({static_cast<uint32_t>(std::countr_zero(m)), true});
    m &= m - 1;
  }
  if (cands.empty())
    return std::nullopt;

  // ties: a cofactor that is itself a library gate wins, then cube count
  // (all candidates occur in every cube), then smallest variable, positive
  // polarity first
  std::optional<literal> best;
  int best_rank = 0;
  for (literal l : cands) {
    sop cof = cofactor(f, l);
    int rank = 1;
    if (cof.support_size() >= 2 && cof.support_size() <= 3 &&
        classify(cof, lib))
      rank = 0;
    if (!best || rank < best_rank) {
      best = l;
      best_rank = rank;
    }
  }
  return best;
}

std::pair<literal, sop> factor_out(const sop& f, literal l) {
  for (const cube& c : f.cubes)
    if (!c.has(l))
      throw error("factor_out: literal missing from a product term");
  return {l, cofactor(f, l)};
}

int implementation_cost(const implementation& impl, const cost_table& costs) {
  int t = 0, inv = 0;
  for (const impl_gate& g : impl.gates) {
    t += costs.of(g.kind);
    for (const impl_pin& p : g.pins)
      if (p.complemented)
        ++inv;
  }
  if (impl.out.complemented)
    ++inv;
  return t + inv * costs.inverter_cost;
}

namespace {

struct impl_builder {
  implementation impl;

  impl_pin add(gate_kind k, std::vector<impl_pin> pins) {
    impl.gates.push_back({k, std::move(pins)});
    return {true, static_cast<uint32_t>(impl.gates.size() - 1), false};
  }

  impl_pin import(const implementation& sub) {
    uint32_t base = static_cast<uint32_t>(impl.gates.size());
    for (impl_gate g : sub.gates) {
      for (impl_pin& p : g.pins)
        if (p.internal)
          p.index += base;
      impl.gates.push_back(std::move(g));
    }
    impl_pin out = sub.out;
    if (out.internal)
      out.index += base;
    return out;
  }

  implementation done(impl_pin out, const cost_table& costs) {
    impl.out = out;
    impl.cost = implementation_cost(impl, costs);
    return impl;
  }
};

impl_pin slot_pin(literal l) { return {false, l.var, l.complemented}; }

// cheapest 2-input AND of two pins: direct CT_AND2 or the dual route
// CT_NOR2 over complemented pins; direct kept on ties
implementation and2_pair(impl_pin a, impl_pin b, const cost_table& costs) {
  impl_builder direct;
  implementation d = direct.done(direct.add(gate_kind::and2, {a, b}), costs);
  impl_builder variant;
  implementation v = variant.done(variant.add(gate_kind::nor2, {~a, ~b}), costs);
  return v.cost < d.cost ? v : d;
}

implementation or2_pair(impl_pin a, impl_pin b, const cost_table& costs) {
  impl_builder direct;
  implementation d = direct.done(direct.add(gate_kind::or2, {a, b}), costs);
  impl_builder variant;
  implementation v = variant.done(variant.add(gate_kind::nand2, {~a, ~b}), costs);
  return v.cost < d.cost ? v : d;
}

implementation realize_fn(const sop& f, const gate_library& lib,
                          const cost_table& costs);

// sub-realization that tolerates single literals (slot passthrough)
implementation realize_sub(const sop& f, const gate_library& lib,
                           const cost_table& costs) {
  if (auto l = f.as_single_literal()) {
    implementation impl;
    impl.out = slot_pin(*l);
    impl.cost = l->complemented ? costs.inverter_cost : 0;
    return impl;
  }
  return realize_fn(f, lib, costs);
}

// Shannon expansions of f around one variable, built from NAND/NOR pairs
void shannon_candidates(const sop& f, const gate_library& lib,
                        const cost_table& costs,
                        std::vector<implementation>& out) {
  for (uint32_t v : support_vars(f)) {
    sop hi = cofactor(f, {v, false});
    sop lo = cofactor(f, {v, true});
    impl_pin pv = slot_pin({v, false});

    if (hi.is_const() || lo.is_const()) {
      impl_builder b;
      implementation cand;
      if (hi.is_const1()) { // f = v + lo
        impl_pin q = b.import(realize_sub(lo, lib, costs));
        cand = b.import_done(); // placeholder, replaced below
      }
      // handled explicitly below to keep the shapes readable
      (void)cand;
    }

    if (hi.is_const1()) { // f = v + lo
      impl_builder b;
      impl_pin q = b.import(realize_sub(lo, lib, costs));
      implementation o = or2_pair(pv, q, costs);
      impl_builder top;
      impl_pin qq = top.import({b.impl.gates, q, 0});
      (void)qq;
      (void)o;
    }
    (void)lo;
  }
  (void)f;
  (void)out;
}

} // namespace

} // namespace xtalk
