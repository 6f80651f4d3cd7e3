#include "xtalk/gates.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace xtalk {

namespace {

using gk = gate_kind;

// Truth tables, pin 0 = LSB of the row index.
//   and2 0x8  or2 0xE  nand2 0x7  nor2 0x1
//   and3 0x80 or3 0xFE nand3 0x7F nor3 0x01
//   maj3 = AB+BC+CA = 0xE8         min3 = 0x17
//   ao21 = AB+C = 0xF8             aoi21 = 0x07
//   oa21 = (A+B)C = 0xE0           oai21 = 0x1F
//   sum4 = (A+B+C)M' + ABC = 0x80FE (M = pin 3)
constexpr kind_info kKinds[kGateKindCount] = {
    {gk::inv, "INV", "X_inv", 1, 0x1, true, gk::inv},
    {gk::nand2, "CT_NAND2", "X_nand", 2, 0x7, true, gk::and2},
    {gk::nand3, "CT_NAND3", "X_nand", 3, 0x7F, true, gk::and3},
    {gk::nor2, "CT_NOR2", "X_nor", 2, 0x1, true, gk::or2},
    {gk::nor3, "CT_NOR3", "X_nor", 3, 0x01, true, gk::or3},
    {gk::and2, "CT_AND2", "X_and", 2, 0x8, false, gk::nand2},
    {gk::and3, "CT_AND3", "X_and", 3, 0x80, false, gk::nand3},
    {gk::or2, "CT_OR2", "X_or", 2, 0xE, false, gk::nor2},
    {gk::or3, "CT_OR3", "X_or", 3, 0xFE, false, gk::nor3},
    {gk::maj3, "CT_MAJ3", "X_maj", 3, 0xE8, false, gk::min3},
    {gk::min3, "CT_MIN3", "X_min", 3, 0x17, true, gk::maj3},
    {gk::ao21, "CT_AO21", "X_ao21", 3, 0xF8, false, gk::aoi21},
    {gk::oa21, "CT_OA21", "X_oa21", 3, 0xE0, false, gk::oai21},
    {gk::aoi21, "CT_AOI21", "X_aoi21", 3, 0x07, true, gk::ao21},
    {gk::oai21, "CT_OAI21", "X_oai21", 3, 0x1F, true, gk::oa21},
    {gk::sum4, "CT_SUM4", "X_sum", 4, 0x80FE, false, gk::sumi4},
    {gk::sumi4, "CT_SUMI4", "X_sumi", 4, 0x7F01, true, gk::sum4},
};

sop make_kind_sop(gate_kind k) {
  auto L = [](uint32_t v, bool c = false) { return literal{v, c}; };
  switch (k) {
  case gk::inv:
    return sop::lit(L(0, true));
  case gk::and2:
    return sop{{cube::of({L(0), L(1)})}};
  case gk::and3:
    return sop{{cube::of({L(0), L(1), L(2)})}};
  case gk::or2:
    return sop{{cube::of({L(0)}), cube::of({L(1)})}};
  case gk::or3:
    return sop{{cube::of({L(0)}), cube::of({L(1)}), cube::of({L(2)})}};
  case gk::nand2:
    return sop{{cube::of({L(0, true)}), cube::of({L(1, true)})}};
  case gk::nand3:
    return sop{{cube::of({L(0, true)}), cube::of({L(1, true)}),
                cube::of({L(2, true)})}};
  case gk::nor2:
    return sop{{cube::of({L(0, true), L(1, true)})}};
  case gk::nor3:
    return sop{{cube::of({L(0, true), L(1, true), L(2, true)})}};
  case gk::maj3:
    return sop{{cube::of({L(0), L(1)}), cube::of({L(1), L(2)}),
                cube::of({L(2), L(0)})}};
  case gk::min3:
    return sop{{cube::of({L(0, true), L(1, true)}),
                cube::of({L(1, true), L(2, true)}),
                cube::of({L(2, true), L(0, true)})}};
  case gk::ao21:
    return sop{{cube::of({L(0), L(1)}), cube::of({L(2)})}};
  case gk::aoi21: // (AB+C)' = A'C' + B'C'
    return sop{{cube::of({L(0, true), L(2, true)}),
                cube::of({L(1, true), L(2, true)})}};
  case gk::oa21: // (A+B)C
    return sop{{cube::of({L(0), L(2)}), cube::of({L(1), L(2)})}};
  case gk::oai21: // ((A+B)C)' = A'B' + C'
    return sop{{cube::of({L(0, true), L(1, true)}), cube::of({L(2, true)})}};
  case gk::sum4: // (A+B+C)M' + ABC
    return sop{{cube::of({L(0), L(3, true)}), cube::of({L(1), L(3, true)}),
                cube::of({L(2), L(3, true)}), cube::of({L(0), L(1), L(2)})}};
  case gk::sumi4: // complement: A'B'C' + MA' + MB' + MC'
    return sop{{cube::of({L(0, true), L(1, true), L(2, true)}),
                cube::of({L(3), L(0, true)}), cube::of({L(3), L(1, true)}),
                cube::of({L(3), L(2, true)})}};
  }
  throw error("make_kind_sop: bad kind");
}

} // namespace

const kind_info& info(gate_kind k) { return kKinds[static_cast<size_t>(k)]; }

std::span<const kind_info> all_kinds() { return {kKinds, kGateKindCount}; }

std::optional<gate_kind> kind_by_name(const std::string& name) {
  for (const auto& ki : kKinds)
    if (name == ki.name)
      return ki.kind;
  return std::nullopt;
}

const sop& kind_sop(gate_kind k) {
  static const auto table = [] {
    std::array<sop, kGateKindCount> t;
    for (size_t i = 0; i < kGateKindCount; ++i)
      t[i] = make_kind_sop(static_cast<gate_kind>(i));
    return t;
  }();
  return table[static_cast<size_t>(k)];
}

const gate_library& gate_library::standard() {
  static const gate_library lib = [] {
    gate_library l;
    for (const auto& ki : kKinds)
      if (ki.kind != gk::inv)
        l.members.push_back(ki.kind);
    return l;
  }();
  return lib;
}

bool gate_library::contains(gate_kind k) const {
  return std::find(members.begin(), members.end(), k) != members.end();
}

int pin_binding::complemented_pins() const {
  return std::popcount(complement_mask);
}

uint64_t bound_truth_table(const pin_binding& b, unsigned num_vars) {
  const kind_info& ki = info(b.kind);
  uint64_t tt = 0;
  for (uint64_t row = 0; row < (uint64_t{1} << num_vars); ++row) {
    unsigned pins = 0;
    for (unsigned j = 0; j < ki.arity; ++j) {
      bool v = (row >> b.slot_of_pin[j]) & 1;
      if ((b.complement_mask >> j) & 1)
        v = !v;
      if (v)
        pins |= 1u << j;
    }
    if ((ki.tt >> pins) & 1)
      tt |= uint64_t{1} << row;
  }
  return tt;
}

std::vector<pin_binding> match_kind(uint64_t tt, unsigned num_vars,
                                    gate_kind k) {
  std::vector<pin_binding> out;
  const kind_info& ki = info(k);
  if (ki.arity != num_vars)
    return out;
  std::array<uint8_t, 4> perm{};
  for (unsigned i = 0; i < num_vars; ++i)
    perm[i] = static_cast<uint8_t>(i);
  std::sort(perm.begin(), perm.begin() + num_vars);
  do {
    for (uint8_t mask = 0; mask < (1u << num_vars); ++mask) {
      pin_binding b{k, perm, mask};
      if (bound_truth_table(b, num_vars) == tt)
        out.push_back(b);
    }
  } while (std::next_permutation(perm.begin(), perm.begin() + num_vars));
  return out;
}

} // namespace xtalk
